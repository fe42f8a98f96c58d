//! Classes invariant under five- and six-dimensional subgroups, including
//! the three empty classes.

use crate::jet::Jet2;

use super::common::*;
use super::{branch_nonzero, p, slots_of, ClassEntry, ParamSpec, Slot, SlotSpec, SlotsFn};

pub(super) fn push(entries: &mut Vec<ClassEntry>) {
    // P5.1 — boost + all translations: constants annihilated by the boost,
    // i.e. constant A1 and A3 only.
    entries.push(potential_entry(
        "P5.1",
        "a boost with all translations",
        "e24, e1, e2, e3, e4",
        vec![ParamSpec::free("a"), ParamSpec::free("b")],
        super::no_slots(),
        gens_const(&[G::e24(), G::e1(), G::e2(), G::e3(), G::e4()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|pr, _| {
            let (a, b) = (p(pr, "a"), p(pr, "b"));
            Ok(field(dom_all(), move |_| {
                [Jet2::constant(a), zero(), Jet2::constant(b), zero()]
            }))
        }),
    ));

    // P5.2 — bi-rotation + all translations: empty
    entries.push(empty_entry(
        "P5.2",
        "a proportional bi-rotation with all translations",
        "e13+λe24, e1, e2, e3, e4",
        vec![ParamSpec::nonzero("lambda")],
        Box::new(|pr| {
            vec![
                G::e13() + G::e24() * p(pr, "lambda"),
                G::e1(),
                G::e2(),
                G::e3(),
                G::e4(),
            ]
        }),
    ));

    // P5.3 — parabolic rotation + all translations
    entries.push(potential_entry(
        "P5.3",
        "a parabolic rotation with all translations",
        "e12-e14, e1, e2, e3, e4",
        vec![ParamSpec::free("a"), ParamSpec::free("b")],
        super::no_slots(),
        gens_const(&[G::e12() - G::e14(), G::e1(), G::e2(), G::e3(), G::e4()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|pr, _| {
            let (a, b) = (p(pr, "a"), p(pr, "b"));
            Ok(field(dom_all(), move |_| {
                [
                    zero(),
                    Jet2::constant(a),
                    Jet2::constant(b),
                    Jet2::constant(a),
                ]
            }))
        }),
    ));

    // P5.4 — rotation + boost + translations
    entries.push(potential_entry(
        "P5.4",
        "rotation, boost and three translations",
        "e13, e24, e1, e3, e2+e4",
        vec![ParamSpec::free("k1"), ParamSpec::free("k2")],
        super::no_slots(),
        gens_const(&[G::e13(), G::e24(), G::e1(), G::e3(), G::e2() + G::e4()]),
        Box::new(|_| dom_null_sep()),
        None,
        Box::new(|pr, _| {
            let (k1, k2) = (p(pr, "k1"), p(pr, "k2"));
            Ok(field(dom_null_sep(), move |x| {
                let j = seed(x);
                let d = j[1] - j[3];
                let grow = d * k1;
                let decay = d.recip() * k2;
                [zero(), grow + decay, zero(), grow - decay]
            }))
        }),
    ));

    // P5.5 — branches on λ
    entries.push({
        let slot_specs: SlotsFn = Box::new(|pr| {
            if p(pr, "lambda") != 0.0 {
                vec![]
            } else {
                vec![SlotSpec::new("F", 1, "(x2+x4)")]
            }
        });
        potential_entry(
            "P5.5",
            "two parabolic families with plane translations",
            "e12-e14, e23+e34+λe2, e1, e3, e2-e4",
            vec![
                ParamSpec::branching("lambda"),
                ParamSpec::free("k1"),
                ParamSpec::free("k2"),
            ],
            slot_specs,
            Box::new(|pr| {
                vec![
                    G::e12() - G::e14(),
                    G::e23() + G::e34() + G::e2() * p(pr, "lambda"),
                    G::e1(),
                    G::e3(),
                    G::e2() - G::e4(),
                ]
            }),
            Box::new(|_| dom_all()),
            None,
            Box::new(|pr, slots| {
                let lambda = p(pr, "lambda");
                if branch_nonzero(lambda, "lambda")? {
                    let (k1, k2) = (p(pr, "k1"), p(pr, "k2"));
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let a2 = (j[1] + j[3]) * (-k1 / lambda) + k2;
                        [zero(), a2, Jet2::constant(k1), a2]
                    }))
                } else {
                    let s: Vec<Slot> = slots.to_vec();
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let f = s[0].call(&[j[1] + j[3]]);
                        [zero(), f, zero(), f]
                    }))
                }
            }),
        )
    });

    // P5.6 — branches on λ
    entries.push({
        let slot_specs: SlotsFn = Box::new(|pr| {
            if p(pr, "lambda") != 0.0 {
                vec![]
            } else {
                vec![SlotSpec::new("F", 1, "(x3)")]
            }
        });
        potential_entry(
            "P5.6",
            "parabolic rotations and hyperbolic helices with translations",
            "e12-e14, e24+λe3, e1, e2, e4",
            vec![
                ParamSpec::branching("lambda"),
                ParamSpec::free("k1"),
                ParamSpec::free("k2"),
            ],
            slot_specs,
            Box::new(|pr| {
                vec![
                    G::e12() - G::e14(),
                    G::e24() + G::e3() * p(pr, "lambda"),
                    G::e1(),
                    G::e2(),
                    G::e4(),
                ]
            }),
            Box::new(|_| dom_all()),
            None,
            Box::new(|pr, slots| {
                let lambda = p(pr, "lambda");
                if branch_nonzero(lambda, "lambda")? {
                    let (k1, k2) = (p(pr, "k1"), p(pr, "k2"));
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let a2 = (j[2] * (-1.0 / lambda)).exp() * k1;
                        [zero(), a2, Jet2::constant(k2), a2]
                    }))
                } else {
                    let s: Vec<Slot> = slots.to_vec();
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        [zero(), zero(), s[0].call(&[j[2]]), zero()]
                    }))
                }
            }),
        )
    });

    // P5.7
    entries.push(potential_entry(
        "P5.7",
        "parabolic rotations and a boost with translations",
        "e12-e14, e24, e1, e3, e2-e4",
        vec![ParamSpec::free("b"), ParamSpec::free("c")],
        super::no_slots(),
        gens_const(&[
            G::e12() - G::e14(),
            G::e24(),
            G::e1(),
            G::e3(),
            G::e2() - G::e4(),
        ]),
        Box::new(|_| dom_parabolic()),
        None,
        Box::new(|pr, _| {
            let (b, c) = (p(pr, "b"), p(pr, "c"));
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let a2 = (j[1] + j[3]).recip() * b;
                [zero(), a2, Jet2::constant(c), a2]
            }))
        }),
    ));

    // P5.8
    entries.push(potential_entry(
        "P5.8",
        "two parabolic families and a hyperbolic helix",
        "e12-e14, e23+e34, e24+λe3, e1, e2-e4",
        vec![
            ParamSpec::free("lambda"),
            ParamSpec::free("k1"),
            ParamSpec::free("k2"),
        ],
        super::no_slots(),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14(),
                G::e23() + G::e34(),
                G::e24() + G::e3() * p(pr, "lambda"),
                G::e1(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_parabolic()),
        None,
        Box::new(|pr, _| {
            let lambda = p(pr, "lambda");
            let (k1, k2) = (p(pr, "k1"), p(pr, "k2"));
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let s = j[1] + j[3];
                let a2 = (s.ln() * (lambda * k1) - j[2] * k1 + k2) / s;
                [zero(), a2, Jet2::constant(k1), a2]
            }))
        }),
    ));

    // P5.9
    entries.push(potential_entry(
        "P5.9",
        "two parabolic families with rotation and boost",
        "e12-e14, e23+e34, e13, e24, e2-e4",
        vec![ParamSpec::free("c"), ParamSpec::free("d")],
        super::no_slots(),
        gens_const(&[
            G::e12() - G::e14(),
            G::e23() + G::e34(),
            G::e13(),
            G::e24(),
            G::e2() - G::e4(),
        ]),
        Box::new(|_| dom_parabolic()),
        None,
        Box::new(|pr, _| {
            let (c, d) = (p(pr, "c"), p(pr, "d"));
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let s = j[1] + j[3];
                let q2 = j[0] * j[0] + j[2] * j[2];
                let a2 = (s - q2 / s) * (0.5 * c) + s.recip() * d;
                [j[0] * c, a2, j[2] * c, a2 - s * c]
            }))
        }),
    ));

    // P6.1 — Lorentz group: empty
    entries.push(empty_entry(
        "P6.1",
        "the Lorentz group",
        "e12, e13, e23, e14, e24, e34",
        vec![],
        gens_const(&[G::e12(), G::e13(), G::e23(), G::e14(), G::e24(), G::e34()]),
    ));

    // P6.2 — rotation + boost + all translations: empty
    entries.push(empty_entry(
        "P6.2",
        "a rotation and a boost with all translations",
        "e13, e24, e1, e2, e3, e4",
        vec![],
        gens_const(&[G::e13(), G::e24(), G::e1(), G::e2(), G::e3(), G::e4()]),
    ));

    // P6.3
    entries.push(potential_entry(
        "P6.3",
        "two parabolic rotations with all translations",
        "e12-e14, e23+e34, e1, e2, e3, e4",
        vec![ParamSpec::free("a")],
        super::no_slots(),
        gens_const(&[
            G::e12() - G::e14(),
            G::e23() + G::e34(),
            G::e1(),
            G::e2(),
            G::e3(),
            G::e4(),
        ]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|pr, _| {
            let a = p(pr, "a");
            Ok(field(dom_all(), move |_| {
                [zero(), Jet2::constant(a), zero(), Jet2::constant(a)]
            }))
        }),
    ));

    // P6.4 — parabolic rotation + boost + all translations. Constants must be
    // annihilated by e24 (killing A2 and A4) and by e12−e14 (killing A1), so
    // only A3 survives.
    entries.push(potential_entry(
        "P6.4",
        "a parabolic rotation and a boost with all translations",
        "e12-e14, e24, e1, e2, e3, e4",
        vec![ParamSpec::free("c")],
        super::no_slots(),
        gens_const(&[
            G::e12() - G::e14(),
            G::e24(),
            G::e1(),
            G::e2(),
            G::e3(),
            G::e4(),
        ]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|pr, _| {
            let c = p(pr, "c");
            Ok(field(dom_all(), move |_| {
                [zero(), zero(), Jet2::constant(c), zero()]
            }))
        }),
    ));

    // P6.5 — branches on λ
    entries.push({
        let slot_specs: SlotsFn = Box::new(|pr| {
            if p(pr, "lambda") != 0.0 {
                vec![]
            } else {
                vec![SlotSpec::new("F", 1, "(x2+x4)")]
            }
        });
        potential_entry(
            "P6.5",
            "two parabolic families with a space-like helix",
            "e12-e14, e23+e34, e13+λe2, e1, e3, e2-e4",
            vec![ParamSpec::branching("lambda"), ParamSpec::free("a")],
            slot_specs,
            Box::new(|pr| {
                vec![
                    G::e12() - G::e14(),
                    G::e23() + G::e34(),
                    G::e13() + G::e2() * p(pr, "lambda"),
                    G::e1(),
                    G::e3(),
                    G::e2() - G::e4(),
                ]
            }),
            Box::new(|_| dom_all()),
            None,
            Box::new(|pr, slots| {
                let lambda = p(pr, "lambda");
                if branch_nonzero(lambda, "lambda")? {
                    let a = p(pr, "a");
                    Ok(field(dom_all(), move |_| {
                        [zero(), Jet2::constant(a), zero(), Jet2::constant(a)]
                    }))
                } else {
                    let s: Vec<Slot> = slots.to_vec();
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let f = s[0].call(&[j[1] + j[3]]);
                        [zero(), f, zero(), f]
                    }))
                }
            }),
        )
    });

    // P6.6
    entries.push(potential_entry(
        "P6.6",
        "two parabolic families with a boost",
        "e12-e14, e23+e34, e24, e1, e3, e2-e4",
        vec![ParamSpec::free("b")],
        super::no_slots(),
        gens_const(&[
            G::e12() - G::e14(),
            G::e23() + G::e34(),
            G::e24(),
            G::e1(),
            G::e3(),
            G::e2() - G::e4(),
        ]),
        Box::new(|_| dom_parabolic()),
        None,
        Box::new(|pr, _| {
            let b = p(pr, "b");
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let a2 = (j[1] + j[3]).recip() * b;
                [zero(), a2, zero(), a2]
            }))
        }),
    ));

    // P6.7
    entries.push(potential_entry(
        "P6.7",
        "two parabolic families with a proportional bi-rotation",
        "e12-e14, e23+e34, e13+λe24, e1, e3, e2-e4",
        vec![ParamSpec::nonzero("lambda"), ParamSpec::free("b")],
        super::no_slots(),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14(),
                G::e23() + G::e34(),
                G::e13() + G::e24() * p(pr, "lambda"),
                G::e1(),
                G::e3(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_parabolic()),
        None,
        Box::new(|pr, _| {
            let b = p(pr, "b");
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let a2 = (j[1] + j[3]).recip() * b;
                [zero(), a2, zero(), a2]
            }))
        }),
    ));

    // P6.8
    entries.push(potential_entry(
        "P6.8",
        "spatial rotations with spatial translations",
        "e12, e13, e23, e1, e2, e3",
        vec![],
        slots_of([SlotSpec::new("F", 1, "(x4)")]),
        gens_const(&[G::e12(), G::e13(), G::e23(), G::e1(), G::e2(), G::e3()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                [zero(), zero(), zero(), s[0].call(&[j[3]])]
            }))
        }),
    ));

    // P6.9
    entries.push(potential_entry(
        "P6.9",
        "rotations and boosts fixing x3, with translations",
        "e12, e14, e24, e1, e2, e4",
        vec![],
        slots_of([SlotSpec::new("F", 1, "(x3)")]),
        gens_const(&[G::e12(), G::e14(), G::e24(), G::e1(), G::e2(), G::e4()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                [zero(), zero(), s[0].call(&[j[2]]), zero()]
            }))
        }),
    ));
}
