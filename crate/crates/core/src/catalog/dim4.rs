//! Classes invariant under four-dimensional subgroups.

use crate::charts::Chart;
use crate::jet::Jet2;

use super::common::*;
use super::{branch_nonzero, p, slots_of, ClassEntry, ParamSpec, Slot, SlotSpec, SlotsFn};

fn k4() -> Vec<ParamSpec> {
    vec![
        ParamSpec::free("k1"),
        ParamSpec::free("k2"),
        ParamSpec::free("k3"),
        ParamSpec::free("k4"),
    ]
}

fn ks(pr: &super::Params) -> (f64, f64, f64, f64) {
    (p(pr, "k1"), p(pr, "k2"), p(pr, "k3"), p(pr, "k4"))
}

pub(super) fn push(entries: &mut Vec<ClassEntry>) {
    // P4.1 — all translations: constant fields
    entries.push(potential_entry(
        "P4.1",
        "all translations of Minkowski space",
        "e1, e2, e3, e4",
        vec![
            ParamSpec::free("c1"),
            ParamSpec::free("c2"),
            ParamSpec::free("c3"),
            ParamSpec::free("c4"),
        ],
        super::no_slots(),
        gens_const(&[G::e1(), G::e2(), G::e3(), G::e4()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|pr, _| {
            let c = [p(pr, "c1"), p(pr, "c2"), p(pr, "c3"), p(pr, "c4")];
            Ok(field(dom_all(), move |_| c.map(Jet2::constant)))
        }),
    ));

    // P4.2 — rotations with time drift + 3 translations
    entries.push(potential_entry(
        "P4.2",
        "time-like elliptic helices with spatial translations",
        "e13+μe4, e1, e2, e3",
        vec![
            ParamSpec::nonzero("mu"),
            ParamSpec::free("k1"),
            ParamSpec::free("k2"),
            ParamSpec::free("k3"),
            ParamSpec::free("k4"),
        ],
        super::no_slots(),
        Box::new(|pr| vec![G::e13() + G::e4() * p(pr, "mu"), G::e1(), G::e2(), G::e3()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|pr, _| {
            let mu = p(pr, "mu");
            let (c1, c2, c3, c4) = ks(pr);
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let w = j[3] * (1.0 / mu);
                let (sw, cw) = (w.sin(), w.cos());
                [
                    sw * c1 + cw * c2,
                    Jet2::constant(c3),
                    cw * c1 - sw * c2,
                    Jet2::constant(c4),
                ]
            }))
        }),
    ));

    // P4.3 — space-like helices + translations (branches on λ)
    entries.push({
        let slot_specs: SlotsFn = Box::new(|pr| {
            if p(pr, "lambda") != 0.0 {
                vec![]
            } else {
                vec![
                    SlotSpec::new("A2", 1, "(x2)"),
                    SlotSpec::new("A4", 1, "(x2)"),
                ]
            }
        });
        potential_entry(
            "P4.3",
            "space-like elliptic helices with translations",
            "e13+λe2, e1, e3, e4",
            {
                let mut v = vec![ParamSpec::branching("lambda")];
                v.extend(k4());
                v
            },
            slot_specs,
            Box::new(|pr| {
                vec![
                    G::e13() + G::e2() * p(pr, "lambda"),
                    G::e1(),
                    G::e3(),
                    G::e4(),
                ]
            }),
            Box::new(|_| dom_all()),
            None,
            Box::new(|pr, slots| {
                let lambda = p(pr, "lambda");
                if branch_nonzero(lambda, "lambda")? {
                    let (c1, c2, c3, c4) = ks(pr);
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let w = j[1] * (1.0 / lambda);
                        let (sw, cw) = (w.sin(), w.cos());
                        [
                            sw * c1 + cw * c2,
                            Jet2::constant(c3),
                            cw * c1 - sw * c2,
                            Jet2::constant(c4),
                        ]
                    }))
                } else {
                    let s: Vec<Slot> = slots.to_vec();
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let a = [j[1]];
                        [zero(), s[0].call(&a), zero(), s[1].call(&a)]
                    }))
                }
            }),
        )
    });

    // P4.4 — helices + isotropic translation (branches on λ)
    entries.push({
        let slot_specs: SlotsFn = Box::new(|pr| {
            if p(pr, "lambda") != 0.0 {
                vec![]
            } else {
                vec![
                    SlotSpec::new("A2", 1, "(x2-x4)"),
                    SlotSpec::new("A4", 1, "(x2-x4)"),
                ]
            }
        });
        potential_entry(
            "P4.4",
            "space-like elliptic helices with an isotropic translation",
            "e13+λe2, e1, e3, e2+e4",
            {
                let mut v = vec![ParamSpec::branching("lambda")];
                v.extend(k4());
                v
            },
            slot_specs,
            Box::new(|pr| {
                vec![
                    G::e13() + G::e2() * p(pr, "lambda"),
                    G::e1(),
                    G::e3(),
                    G::e2() + G::e4(),
                ]
            }),
            Box::new(|_| dom_all()),
            None,
            Box::new(|pr, slots| {
                let lambda = p(pr, "lambda");
                if branch_nonzero(lambda, "lambda")? {
                    let (c1, c2, c3, c4) = ks(pr);
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let w = (j[1] - j[3]) * (1.0 / lambda);
                        let (sw, cw) = (w.sin(), w.cos());
                        [
                            sw * c1 + cw * c2,
                            Jet2::constant(c3),
                            cw * c1 - sw * c2,
                            Jet2::constant(c4),
                        ]
                    }))
                } else {
                    let s: Vec<Slot> = slots.to_vec();
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let a = [j[1] - j[3]];
                        [zero(), s[0].call(&a), zero(), s[1].call(&a)]
                    }))
                }
            }),
        )
    });

    // P4.5 — boost + translations incl. an isotropic one
    entries.push(potential_entry(
        "P4.5",
        "a boost with translations including an isotropic one",
        "e24, e1, e3, e2+e4",
        vec![
            ParamSpec::free("c1"),
            ParamSpec::free("c2"),
            ParamSpec::free("c3"),
            ParamSpec::free("c4"),
        ],
        super::no_slots(),
        gens_const(&[G::e24(), G::e1(), G::e3(), G::e2() + G::e4()]),
        Box::new(|_| dom_null_sep()),
        None,
        Box::new(|pr, _| {
            let (c1, c2, c3, c4) = (p(pr, "c1"), p(pr, "c2"), p(pr, "c3"), p(pr, "c4"));
            Ok(field(dom_null_sep(), move |x| {
                let j = seed(x);
                let d = j[1] - j[3];
                let grow = d * c2;
                let decay = d.recip() * c4;
                [
                    Jet2::constant(c1),
                    grow + decay,
                    Jet2::constant(c3),
                    grow - decay,
                ]
            }))
        }),
    ));

    // P4.6 — hyperbolic helices + translations (branches on λ)
    entries.push({
        let slot_specs: SlotsFn = Box::new(|pr| {
            if p(pr, "lambda") != 0.0 {
                vec![]
            } else {
                vec![
                    SlotSpec::new("A1", 1, "(x3)"),
                    SlotSpec::new("A3", 1, "(x3)"),
                ]
            }
        });
        potential_entry(
            "P4.6",
            "hyperbolic helices with translations",
            "e24+λe3, e1, e2, e4",
            {
                let mut v = vec![ParamSpec::branching("lambda")];
                v.extend(k4());
                v
            },
            slot_specs,
            Box::new(|pr| {
                vec![
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
                    let (c1, c2, c3, c4) = ks(pr);
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let w = j[2] * (1.0 / lambda);
                        let (sh, ch) = (w.sinh(), w.cosh());
                        [
                            Jet2::constant(c1),
                            ch * c2 + sh * c4,
                            Jet2::constant(c3),
                            -(sh * c2 + ch * c4),
                        ]
                    }))
                } else {
                    let s: Vec<Slot> = slots.to_vec();
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let a = [j[2]];
                        [s[0].call(&a), zero(), s[1].call(&a), zero()]
                    }))
                }
            }),
        )
    });

    // P4.7 — proportional bi-rotations + isotropic translation
    entries.push(potential_entry(
        "P4.7",
        "proportional bi-rotations with translations",
        "e13+λe24, e1, e3, e2+e4",
        {
            let mut v = vec![ParamSpec::nonzero("lambda")];
            v.extend(k4());
            v
        },
        super::no_slots(),
        Box::new(|pr| {
            vec![
                G::e13() + G::e24() * p(pr, "lambda"),
                G::e1(),
                G::e3(),
                G::e2() + G::e4(),
            ]
        }),
        Box::new(|_| dom_pos_null_sep()),
        None,
        Box::new(|pr, _| {
            let lambda = p(pr, "lambda");
            let (c1, c2, c3, c4) = ks(pr);
            Ok(field(dom_pos_null_sep(), move |x| {
                let j = seed(x);
                let d = j[1] - j[3];
                let w = d.ln() * (1.0 / lambda);
                let (sw, cw) = (w.sin(), w.cos());
                let grow = d * c2;
                let decay = d.recip() * c4;
                [
                    cw * c1 + sw * c3,
                    grow + decay,
                    sw * c1 - cw * c3,
                    grow - decay,
                ]
            }))
        }),
    ));

    // P4.8 — parabolic helices + translations (branches on λ)
    entries.push({
        let slot_specs: SlotsFn = Box::new(|pr| {
            if p(pr, "lambda") != 0.0 {
                vec![]
            } else {
                vec![SlotSpec::new("F", 1, "(x3)"), SlotSpec::new("P", 1, "(x3)")]
            }
        });
        potential_entry(
            "P4.8",
            "parabolic helices along x3 with translations",
            "e12-e14+λe3, e1, e2, e4",
            {
                let mut v = vec![ParamSpec::branching("lambda")];
                v.extend(k4());
                v
            },
            slot_specs,
            Box::new(|pr| {
                vec![
                    G::e12() - G::e14() + G::e3() * p(pr, "lambda"),
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
                    let (c1, c2, c3, c4) = ks(pr);
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let t = j[2] * (1.0 / lambda);
                        let a1 = t * c2 + c3;
                        let a2 = t * t * (0.5 * c2) + t * c3 + c4;
                        [a1, a2, Jet2::constant(c1), a2 + c2]
                    }))
                } else {
                    let s: Vec<Slot> = slots.to_vec();
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let a = [j[2]];
                        let f = s[0].call(&a);
                        [zero(), f, s[1].call(&a), f]
                    }))
                }
            }),
        )
    });

    // P4.9 — parabolic helices + isotropic hyperplane (branches on λ)
    entries.push({
        let slot_specs: SlotsFn = Box::new(|pr| {
            if p(pr, "lambda") != 0.0 {
                vec![]
            } else {
                vec![
                    SlotSpec::new("F", 1, "(x2+x4)"),
                    SlotSpec::new("P", 1, "(x2+x4)"),
                ]
            }
        });
        potential_entry(
            "P4.9",
            "parabolic helices with an isotropic hyperplane of translations",
            "e12-e14+λe2, e1, e3, e2-e4",
            {
                let mut v = vec![ParamSpec::branching("lambda")];
                v.extend(k4());
                v
            },
            slot_specs,
            Box::new(|pr| {
                vec![
                    G::e12() - G::e14() + G::e2() * p(pr, "lambda"),
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
                    let (c1, c2, c3, c4) = ks(pr);
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let t = (j[1] + j[3]) * (1.0 / lambda);
                        let a1 = t * c2 + c3;
                        let a2 = t * t * (0.5 * c2) + t * c3 + c4;
                        [a1, a2, Jet2::constant(c1), a2 + c2]
                    }))
                } else {
                    let s: Vec<Slot> = slots.to_vec();
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let a = [j[1] + j[3]];
                        let f = s[0].call(&a);
                        [zero(), f, s[1].call(&a), f]
                    }))
                }
            }),
        )
    });

    // P4.10 — rotation + boost + plane translations
    entries.push(potential_entry(
        "P4.10",
        "rotation and boost with plane translations",
        "e13, e24, e1, e3",
        vec![],
        slots_of([
            SlotSpec::new("C1", 1, "(rho)"),
            SlotSpec::new("C2", 1, "(rho)"),
        ]),
        gens_const(&[G::e13(), G::e24(), G::e1(), G::e3()]),
        Box::new(|_| dom_from_chart(Chart::PlaneBoost)),
        Some(Box::new(|_| Chart::PlaneBoost)),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(Chart::PlaneBoost), move |x| {
                let [_y1, rho, _y3, phi] = Chart::PlaneBoost.inverse(seed(x));
                let a = [rho];
                let (a2, a4) = boost_pair(s[0].call(&a), s[1].call(&a), phi);
                [zero(), a2, zero(), a4]
            }))
        }),
    ));

    // P4.11 — rotation + boost + pseudo-plane translations
    entries.push(potential_entry(
        "P4.11",
        "rotation and boost with pseudo-plane translations",
        "e13, e24, e2, e4",
        vec![],
        slots_of([SlotSpec::new("C1", 1, "(r)"), SlotSpec::new("C2", 1, "(r)")]),
        gens_const(&[G::e13(), G::e24(), G::e2(), G::e4()]),
        Box::new(|_| dom_from_chart(Chart::PlanePolar)),
        Some(Box::new(|_| Chart::PlanePolar)),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(Chart::PlanePolar), move |x| {
                let [r, _y2, phi, _y4] = Chart::PlanePolar.inverse(seed(x));
                let a = [r];
                let (sp, cp) = (phi.sin(), phi.cos());
                let (c1, c2) = (s[0].call(&a), s[1].call(&a));
                [c1 * sp + c2 * cp, zero(), c1 * cp - c2 * sp, zero()]
            }))
        }),
    ));

    // P4.12a–d — two parabolic-helix families + isotropic plane
    entries.push(potential_entry(
        "P4.12a",
        "two parabolic rotations with an isotropic plane",
        "e12-e14, e23+e34, e1, e2-e4",
        vec![],
        slots_of([
            SlotSpec::new("F", 1, "(x2+x4)"),
            SlotSpec::new("P", 1, "(x2+x4)"),
        ]),
        gens_const(&[
            G::e12() - G::e14(),
            G::e23() + G::e34(),
            G::e1(),
            G::e2() - G::e4(),
        ]),
        Box::new(|_| dom_parabolic()),
        None,
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let u = j[1] + j[3];
                let a = [u];
                let psi = s[1].call(&a);
                let trans = s[0].call(&a) - j[2] * psi / u;
                [zero(), trans, psi, trans]
            }))
        }),
    ));

    entries.push(potential_entry(
        "P4.12b",
        "parabolic rotations and helices with an isotropic plane",
        "e12-e14, e23+e34+νe2, e1, e2-e4",
        vec![ParamSpec::nonzero("nu")],
        slots_of([
            SlotSpec::new("F", 1, "(x3 - (x2+x4)²/2ν)"),
            SlotSpec::new("P", 1, "(x3 - (x2+x4)²/2ν)"),
        ]),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14(),
                G::e23() + G::e34() + G::e2() * p(pr, "nu"),
                G::e1(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_all()),
        None,
        Box::new(|pr, slots| {
            let nu = p(pr, "nu");
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let u = j[1] + j[3];
                let a = [j[2] - u * u * (0.5 / nu)];
                let psi = s[1].call(&a);
                let trans = s[0].call(&a) - u * psi * (1.0 / nu);
                [zero(), trans, psi, trans]
            }))
        }),
    ));

    entries.push(potential_entry(
        "P4.12c",
        "parabolic helices and rotations with an isotropic plane",
        "e12-e14+μe3, e23+e34, e1, e2-e4",
        vec![ParamSpec::nonzero("mu")],
        slots_of([
            SlotSpec::new("F", 1, "(x2+x4)"),
            SlotSpec::new("P", 1, "(x2+x4)"),
        ]),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14() + G::e3() * p(pr, "mu"),
                G::e23() + G::e34(),
                G::e1(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_all()),
        None,
        Box::new(|pr, slots| {
            let mu = p(pr, "mu");
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let u = j[1] + j[3];
                let a = [u];
                let f = s[0].call(&a);
                let trans = j[2] * f * (1.0 / mu) + s[1].call(&a);
                [f, trans, -(u * f * (1.0 / mu)), trans]
            }))
        }),
    ));

    entries.push(potential_entry(
        "P4.12d",
        "two parabolic-helix families with an isotropic plane",
        "e12-e14+μe3, e23+e34+νe2, e1, e2-e4",
        vec![
            ParamSpec::nonzero("mu"),
            ParamSpec::nonzero("nu"),
            ParamSpec::free("c"),
        ],
        super::no_slots(),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14() + G::e3() * p(pr, "mu"),
                G::e23() + G::e34() + G::e2() * p(pr, "nu"),
                G::e1(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_all()),
        None,
        Box::new(|pr, _| {
            let c = p(pr, "c");
            Ok(field(dom_all(), move |_| {
                [zero(), Jet2::constant(c), zero(), Jet2::constant(c)]
            }))
        }),
    ));

    // P4.13 — parabolic rotations + hyperbolic helices + translations
    entries.push(potential_entry(
        "P4.13",
        "parabolic rotations and hyperbolic helices with translations",
        "e12-e14, e24+λe1, e3, e2-e4",
        {
            let mut v = vec![ParamSpec::free("lambda")];
            v.extend(k4());
            v
        },
        super::no_slots(),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14(),
                G::e24() + G::e1() * p(pr, "lambda"),
                G::e3(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_parabolic()),
        None,
        Box::new(|pr, _| {
            let lambda = p(pr, "lambda");
            let (k1, k2, k3, k4v) = ks(pr);
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let s = j[1] + j[3];
                let ls = s.ln();
                let c1 = s * k1;
                let c2 = ls * (k1 * lambda) + k2;
                let c3 = (ls * ls * (k1 * lambda * lambda) + ls * (2.0 * k2 * lambda)) / (s * 2.0)
                    - s * (0.5 * k1)
                    + s.recip() * k3;
                let a1 = -(j[0] * c1) / s + c2;
                let a2 = j[0] * j[0] * c1 / (s * s * 2.0) - j[0] * c2 / s + c3;
                [a1, a2, Jet2::constant(k4v), a2 + c1]
            }))
        }),
    ));

    // P4.14a/b — parabolic rotations + hyperbolic helices + skew plane
    entries.push(potential_entry(
        "P4.14a",
        "parabolic rotations, hyperbolic helices and a skew plane",
        "e12-e14, e24+λe3, e1+νe3, e2-e4",
        {
            let mut v = vec![ParamSpec::free("lambda"), ParamSpec::nonzero("nu")];
            v.extend(k4());
            v
        },
        super::no_slots(),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14(),
                G::e24() + G::e3() * p(pr, "lambda"),
                G::e1() + G::e3() * p(pr, "nu"),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_parabolic()),
        None,
        Box::new(|pr, _| {
            let lambda = p(pr, "lambda");
            let nu = p(pr, "nu");
            let (k1, k2, k3, k4v) = ks(pr);
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let s = j[1] + j[3];
                let ls = s.ln();
                let t = j[2] - j[0] * nu;
                let c1 = s * k1;
                let c2 = ls * (-k1 * lambda / nu) + k2;
                let c3 = (ls * ls * (k1 * lambda * lambda) - ls * (2.0 * k2 * lambda * nu))
                    / (s * (2.0 * nu * nu))
                    - s * (0.5 * k1)
                    + s.recip() * k3;
                let a1 = t * c1 / (s * nu) + c2;
                let a2 = t * t * c1 / (s * s * (2.0 * nu * nu)) + t * c2 / (s * nu) + c3;
                [a1, a2, Jet2::constant(k4v), a2 + c1]
            }))
        }),
    ));

    entries.push(potential_entry(
        "P4.14b",
        "parabolic rotations and hyperbolic helices with a plane",
        "e12-e14, e24+λe3, e1, e2-e4",
        vec![ParamSpec::free("lambda")],
        slots_of([
            SlotSpec::new("F", 1, "(x3 - λ ln(x2+x4))"),
            SlotSpec::new("P", 1, "(x3 - λ ln(x2+x4))"),
        ]),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14(),
                G::e24() + G::e3() * p(pr, "lambda"),
                G::e1(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_parabolic()),
        None,
        Box::new(|pr, slots| {
            let lambda = p(pr, "lambda");
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let u = j[1] + j[3];
                let a = [j[2] - u.ln() * lambda];
                let trans = s[0].call(&a) / u;
                [zero(), trans, s[1].call(&a), trans]
            }))
        }),
    ));

    // P4.15 — two parabolic rotations + hyperbolic helix
    entries.push(potential_entry(
        "P4.15",
        "two parabolic rotations with a hyperbolic helix",
        "e12-e14, e23+e34, e24+λe1, e2-e4",
        {
            let mut v = vec![ParamSpec::free("lambda")];
            v.extend(k4());
            v
        },
        super::no_slots(),
        gens_p415(),
        Box::new(|_| dom_parabolic()),
        None,
        Box::new(|pr, _| {
            let lambda = p(pr, "lambda");
            let (k1, k2, k3, k4v) = ks(pr);
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let s = j[1] + j[3];
                let ls = s.ln();
                let c1 = s * k1;
                let c2 = ls * (-k1 * lambda) + k2;
                let c4 = (ls * ls * (-k1 * lambda * lambda) + ls * (2.0 * k2 * lambda)) / (s * 2.0)
                    + s * (0.5 * k1)
                    + s.recip() * k4v;
                let q2 = j[0] * j[0] + j[2] * j[2];
                let a1 = j[0] * c1 / s + c2;
                let a2 = -(q2 * c1) / (s * s * 2.0) - (j[0] * c2 + j[2] * k3) / s + c4;
                let a3 = j[2] * c1 / s + Jet2::constant(k3);
                [a1, a2, a3, a2 - c1]
            }))
        }),
    ));

    // P4.16 — helix pair + rotation + isotropic translation
    entries.push(potential_entry(
        "P4.16",
        "a symmetric helix pair with a rotation",
        "e12-e14+λe3, e23+e34+λe1, e13, e2-e4",
        vec![ParamSpec::nonzero("lambda")],
        slots_of([SlotSpec::new("F", 1, "(x2+x4)")]),
        Box::new(|pr| {
            let l = p(pr, "lambda");
            vec![
                G::e12() - G::e14() + G::e3() * l,
                G::e23() + G::e34() + G::e1() * l,
                G::e13(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_all()),
        Some(Box::new(|pr| Chart::HelixPairSym {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let f = s[0].call(&[j[1] + j[3]]);
                [zero(), f, zero(), f]
            }))
        }),
    ));

    // P4.17 — two parabolic rotations + proportional bi-rotation + translation
    entries.push(potential_entry(
        "P4.17",
        "two parabolic rotations and a proportional bi-rotation",
        "e12-e14, e23+e34, e13+λe24, e2-e4",
        {
            let mut v = vec![ParamSpec::nonzero("lambda")];
            v.extend(k4());
            v
        },
        super::no_slots(),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14(),
                G::e23() + G::e34(),
                G::e13() + G::e24() * p(pr, "lambda"),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_parabolic()),
        None,
        Box::new(|pr, _| {
            let lambda = p(pr, "lambda");
            let (k1, k2, k3, k4v) = ks(pr);
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let s = j[1] + j[3];
                let w = s.ln() * (1.0 / lambda);
                let (sw, cw) = (w.sin(), w.cos());
                let psi = cw * k3 + sw * k4v;
                let xi = cw * k4v - sw * k3;
                let q2 = j[0] * j[0] + j[2] * j[2];
                let a1 = j[0] * k1 + psi;
                let a2 = -(q2 * (0.5 * k1)) / s - (j[0] * psi + j[2] * xi) / s
                    + s * (0.5 * k1)
                    + s.recip() * k2;
                let a3 = j[2] * k1 + xi;
                [a1, a2, a3, a2 - s * k1]
            }))
        }),
    ));

    // P4.18 — spatial rotations + time translations
    entries.push(potential_entry(
        "P4.18",
        "spatial rotations with time translations",
        "e12, e13, e23, e4",
        vec![],
        slots_of([SlotSpec::new("A4", 1, "(rho)")]),
        gens_const(&[G::e12(), G::e13(), G::e23(), G::e4()]),
        Box::new(|_| dom_spatial_radius()),
        None,
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_spatial_radius(), move |x| {
                let j = seed(x);
                let rho = (j[0] * j[0] + j[1] * j[1] + j[2] * j[2]).sqrt();
                [zero(), zero(), zero(), s[0].call(&[rho])]
            }))
        }),
    ));

    // P4.19 — rotations/boosts fixing x3 + x3 translations
    entries.push(potential_entry(
        "P4.19",
        "rotations and boosts fixing x3, with x3 translations",
        "e12, e14, e24, e3",
        vec![],
        slots_of([SlotSpec::new("C", 1, "(u)")]),
        gens_const(&[G::e12(), G::e14(), G::e24(), G::e3()]),
        Box::new(|_| dom_spacelike_12()),
        None,
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_spacelike_12(), move |x| {
                let j = seed(x);
                let u = (j[0] * j[0] + j[1] * j[1] - j[3] * j[3]).sqrt();
                [zero(), zero(), s[0].call(&[u]), zero()]
            }))
        }),
    ));

    // P4.20 — two parabolic rotations + rotation + boost
    entries.push(potential_entry(
        "P4.20",
        "two parabolic rotations with a rotation and a boost",
        "e12-e14, e23+e34, e13, e24",
        vec![],
        slots_of([SlotSpec::new("C", 1, "(y4)"), SlotSpec::new("D", 1, "(y4)")]),
        gens_const(&[G::e12() - G::e14(), G::e23() + G::e34(), G::e13(), G::e24()]),
        Box::new(|_| dom_parabolic()),
        Some(Box::new(|_| Chart::NullPair)),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_parabolic(), move |x| {
                let j = seed(x);
                let su = j[1] + j[3];
                let q2 = j[0] * j[0] + j[2] * j[2];
                let t4 = j[0] * j[0] + j[1] * j[1] + j[2] * j[2] - j[3] * j[3];
                let a = [t4];
                let c = s[0].call(&a);
                let a2 = c * (su - q2 / su) * 0.5 + s[1].call(&a) / su;
                [j[0] * c, a2, j[2] * c, a2 - su * c]
            }))
        }),
    ));
}

fn gens_p415() -> super::GensFn {
    Box::new(|pr| {
        vec![
            G::e12() - G::e14(),
            G::e23() + G::e34(),
            G::e24() + G::e1() * p(pr, "lambda"),
            G::e2() - G::e4(),
        ]
    })
}
