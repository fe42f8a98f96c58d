//! Classes invariant under three-dimensional subgroups.

use crate::charts::Chart;
use crate::jet::Jet2;

use super::common::*;
use super::{branch_nonzero, p, slots_of, ClassEntry, ParamSpec, Slot, SlotSpec, SlotsFn};

pub(super) fn push(entries: &mut Vec<ClassEntry>) {
    // P3.1a/b/c — three-dimensional translation groups
    entries.push(translations_3d(
        "P3.1a",
        "translations of the Euclidean x1-x2-x3 space",
        "e1, e2, e3",
        "(x4)",
        vec![G::e1(), G::e2(), G::e3()],
        |j| j[3],
    ));
    entries.push(translations_3d(
        "P3.1b",
        "translations of the pseudo-Euclidean x1-x2-x4 space",
        "e1, e2, e4",
        "(x3)",
        vec![G::e1(), G::e2(), G::e4()],
        |j| j[2],
    ));
    entries.push(translations_3d(
        "P3.1c",
        "translations of an isotropic 3-space",
        "e1, e3, e2+e4",
        "(x2-x4)",
        vec![G::e1(), G::e3(), G::e2() + G::e4()],
        |j| j[1] - j[3],
    ));

    // P3.2 — elliptic helices + Euclidean plane translations (branches on λ)
    entries.push({
        let slot_specs: SlotsFn = Box::new(|pr| {
            if p(pr, "lambda") != 0.0 {
                vec![
                    SlotSpec::new("C1", 1, "(x4)"),
                    SlotSpec::new("C2", 1, "(x4)"),
                    SlotSpec::new("A2", 1, "(x4)"),
                    SlotSpec::new("A4", 1, "(x4)"),
                ]
            } else {
                vec![
                    SlotSpec::new("A2", 2, "(x2, x4)"),
                    SlotSpec::new("A4", 2, "(x2, x4)"),
                ]
            }
        });
        potential_entry(
            "P3.2",
            "elliptic helices along x2 with plane translations",
            "e13+λe2, e1, e3",
            vec![ParamSpec::branching("lambda")],
            slot_specs,
            Box::new(|pr| vec![G::e13() + G::e2() * p(pr, "lambda"), G::e1(), G::e3()]),
            Box::new(|_| dom_all()),
            None,
            Box::new(|pr, slots| {
                let lambda = p(pr, "lambda");
                let s: Vec<Slot> = slots.to_vec();
                if branch_nonzero(lambda, "lambda")? {
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let a = [j[3]];
                        let w = j[1] * (1.0 / lambda);
                        let (sw, cw) = (w.sin(), w.cos());
                        let (c1, c2) = (s[0].call(&a), s[1].call(&a));
                        [
                            c1 * sw + c2 * cw,
                            s[2].call(&a),
                            c1 * cw - c2 * sw,
                            s[3].call(&a),
                        ]
                    }))
                } else {
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let a = [j[1], j[3]];
                        [zero(), s[0].call(&a), zero(), s[1].call(&a)]
                    }))
                }
            }),
        )
    });

    // P3.3 — elliptic helices with time-like axis + plane translations
    entries.push(potential_entry(
        "P3.3",
        "elliptic helices along x4 with plane translations",
        "e13+μe4, e1, e3",
        vec![ParamSpec::nonzero("mu")],
        slots_of([
            SlotSpec::new("C1", 1, "(x2)"),
            SlotSpec::new("C2", 1, "(x2)"),
            SlotSpec::new("A2", 1, "(x2)"),
            SlotSpec::new("A4", 1, "(x2)"),
        ]),
        Box::new(|pr| vec![G::e13() + G::e4() * p(pr, "mu"), G::e1(), G::e3()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|pr, slots| {
            let mu = p(pr, "mu");
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let a = [j[1]];
                let w = j[3] * (1.0 / mu);
                let (sw, cw) = (w.sin(), w.cos());
                let (c1, c2) = (s[0].call(&a), s[1].call(&a));
                [
                    c1 * sw + c2 * cw,
                    s[2].call(&a),
                    c1 * cw - c2 * sw,
                    s[3].call(&a),
                ]
            }))
        }),
    ));

    // P3.4 — elliptic helices with an isotropic axis + plane translations
    entries.push(potential_entry(
        "P3.4",
        "elliptic helices with isotropic axis and plane translations",
        "e13+λ(e2+e4), e1, e3",
        vec![ParamSpec::nonzero("lambda")],
        slots_of([
            SlotSpec::new("C1", 1, "(x2-x4)"),
            SlotSpec::new("C2", 1, "(x2-x4)"),
            SlotSpec::new("A2", 1, "(x2-x4)"),
            SlotSpec::new("A4", 1, "(x2-x4)"),
        ]),
        Box::new(|pr| {
            let l = p(pr, "lambda");
            vec![G::e13() + (G::e2() + G::e4()) * l, G::e1(), G::e3()]
        }),
        Box::new(|_| dom_all()),
        Some(Box::new(|_| Chart::Isotropic)),
        Box::new(|pr, slots| {
            let lambda = p(pr, "lambda");
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let a = [j[1] - j[3]];
                let w = (j[1] + j[3]) * (0.5 / lambda);
                let (sw, cw) = (w.sin(), w.cos());
                let (c1, c2) = (s[0].call(&a), s[1].call(&a));
                [
                    c1 * sw + c2 * cw,
                    s[2].call(&a),
                    c1 * cw - c2 * sw,
                    s[3].call(&a),
                ]
            }))
        }),
    ));

    // P3.5 — boosts in the x2-x4 plane + plane translations
    entries.push(potential_entry(
        "P3.5",
        "boosts of the x2-x4 plane with plane translations",
        "e24, e1, e3",
        vec![],
        slots_of([
            SlotSpec::new("A1", 1, "(rho)"),
            SlotSpec::new("C1", 1, "(rho)"),
            SlotSpec::new("C2", 1, "(rho)"),
            SlotSpec::new("A3", 1, "(rho)"),
        ]),
        gens_const(&[G::e24(), G::e1(), G::e3()]),
        Box::new(|_| dom_from_chart(Chart::PlaneBoost)),
        Some(Box::new(|_| Chart::PlaneBoost)),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(Chart::PlaneBoost), move |x| {
                let [_y1, rho, _y3, phi] = Chart::PlaneBoost.inverse(seed(x));
                let a = [rho];
                let (a2, a4) = boost_pair(s[1].call(&a), s[2].call(&a), phi);
                [s[0].call(&a), a2, s[3].call(&a), a4]
            }))
        }),
    ));

    // P3.6 — hyperbolic helices + pseudo-Euclidean plane translations
    entries.push({
        let slot_specs: SlotsFn = Box::new(|pr| {
            if p(pr, "lambda") != 0.0 {
                vec![
                    SlotSpec::new("A1", 1, "(x1)"),
                    SlotSpec::new("C1", 1, "(x1)"),
                    SlotSpec::new("C2", 1, "(x1)"),
                    SlotSpec::new("A3", 1, "(x1)"),
                ]
            } else {
                vec![
                    SlotSpec::new("A1", 2, "(x1, x3)"),
                    SlotSpec::new("A3", 2, "(x1, x3)"),
                ]
            }
        });
        potential_entry(
            "P3.6",
            "hyperbolic helices with pseudo-Euclidean plane translations",
            "e24+λe3, e2, e4",
            vec![ParamSpec::branching("lambda")],
            slot_specs,
            Box::new(|pr| vec![G::e24() + G::e3() * p(pr, "lambda"), G::e2(), G::e4()]),
            Box::new(|_| dom_all()),
            None,
            Box::new(|pr, slots| {
                let lambda = p(pr, "lambda");
                let s: Vec<Slot> = slots.to_vec();
                if branch_nonzero(lambda, "lambda")? {
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let a = [j[0]];
                        let (a2, a4) =
                            boost_pair(s[1].call(&a), s[2].call(&a), j[2] * (1.0 / lambda));
                        [s[0].call(&a), a2, s[3].call(&a), a4]
                    }))
                } else {
                    Ok(field(dom_all(), move |x| {
                        let j = seed(x);
                        let a = [j[0], j[2]];
                        [s[0].call(&a), zero(), s[1].call(&a), zero()]
                    }))
                }
            }),
        )
    });

    // P3.7 — hyperbolic helices + isotropic plane translations
    entries.push(potential_entry(
        "P3.7",
        "hyperbolic helices with isotropic plane translations",
        "e24+λe3, e1, e2-e4",
        vec![ParamSpec::free("lambda")],
        slots_of([
            SlotSpec::new("A1", 1, "(y3-λ ln r)"),
            SlotSpec::new("a1", 1, "(y3-λ ln r)"),
            SlotSpec::new("a2", 1, "(y3-λ ln r)"),
            SlotSpec::new("A3", 1, "(y3-λ ln r)"),
        ]),
        Box::new(|pr| {
            vec![
                G::e24() + G::e3() * p(pr, "lambda"),
                G::e1(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|pr| {
            dom_from_chart(Chart::Hyperbolic3 {
                lambda: p(pr, "lambda"),
            })
        }),
        Some(Box::new(|pr| Chart::Hyperbolic3 {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|pr, slots| {
            let lambda = p(pr, "lambda");
            let chart = Chart::Hyperbolic3 { lambda };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [_t1, r, t3, phi] = chart.inverse(seed(x));
                let lr = r.ln();
                let a = [t3 - lr * lambda];
                let (g1, g2) = (s[1].call(&a), s[2].call(&a));
                let (shl, chl) = (lr.sinh(), lr.cosh());
                let c1 = g1 * chl + g2 * shl;
                let c2 = g1 * shl + g2 * chl;
                let (a2, a4) = boost_pair(c1, c2, phi);
                [s[0].call(&a), a2, s[3].call(&a), a4]
            }))
        }),
    ));

    // P3.8 — parabolic helices + isotropic plane translations
    entries.push(potential_entry(
        "P3.8",
        "parabolic helices with isotropic plane translations",
        "e12-e14+λe2, e3, e2-e4",
        vec![ParamSpec::nonzero("lambda")],
        slots_of([
            SlotSpec::new("C1", 1, "(y1)"),
            SlotSpec::new("C2", 1, "(y1)"),
            SlotSpec::new("C3", 1, "(y1)"),
            SlotSpec::new("A3", 1, "(y1)"),
        ]),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14() + G::e2() * p(pr, "lambda"),
                G::e3(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|pr| {
            dom_from_chart(Chart::ParabolicC {
                lambda: p(pr, "lambda"),
            })
        }),
        Some(Box::new(|pr| Chart::ParabolicC {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|pr, slots| {
            let chart = Chart::ParabolicC {
                lambda: p(pr, "lambda"),
            };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [t1, t2, _t3, _t4] = chart.inverse(seed(x));
                let a = [t1];
                parabolic_components(
                    s[0].call(&a),
                    s[1].call(&a),
                    s[2].call(&a),
                    s[3].call(&a),
                    t2,
                )
            }))
        }),
    ));

    // P3.9a/b/c — parabolic helices + isotropic plane
    entries.push(potential_entry(
        "P3.9a",
        "parabolic rotations with an isotropic plane of translations",
        "e12-e14, e1, e2-e4",
        vec![],
        slots_of([
            SlotSpec::new("C1", 2, "(x2+x4, x3)"),
            SlotSpec::new("A3", 2, "(x2+x4, x3)"),
        ]),
        gens_const(&[G::e12() - G::e14(), G::e1(), G::e2() - G::e4()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let a = [j[1] + j[3], j[2]];
                let c1 = s[0].call(&a);
                [zero(), c1, s[1].call(&a), c1]
            }))
        }),
    ));

    entries.push(potential_entry(
        "P3.9b",
        "parabolic helices along x3 with an isotropic plane",
        "e12-e14+μe3, e1, e2-e4",
        vec![ParamSpec::nonzero("mu")],
        slots_of([
            SlotSpec::new("F", 1, "(y1)"),
            SlotSpec::new("P", 1, "(y1)"),
            SlotSpec::new("X", 1, "(y1)"),
            SlotSpec::new("A3", 1, "(y1)"),
        ]),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14() + G::e3() * p(pr, "mu"),
                G::e1(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|pr| dom_from_chart(Chart::ParabolicB { mu: p(pr, "mu") })),
        Some(Box::new(|pr| Chart::ParabolicB { mu: p(pr, "mu") })),
        Box::new(|pr, slots| {
            let mu = p(pr, "mu");
            let chart = Chart::ParabolicB { mu };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [t1, t2, t3, _t4] = chart.inverse(seed(x));
                let a = [t1];
                let (f, ps, xi) = (s[0].call(&a), s[1].call(&a), s[2].call(&a));
                let c1 = t3 * t3 * f * (0.5 / (mu * mu)) + t3 * ps * (1.0 / mu) + xi;
                let c3 = t3 * f * (1.0 / mu) + ps;
                parabolic_components(c1, f, c3, s[3].call(&a), t2)
            }))
        }),
    ));

    entries.push(potential_entry(
        "P3.9c",
        "parabolic helices along x2 with an isotropic plane",
        "e12-e14+λe2, e1, e2-e4",
        vec![ParamSpec::nonzero("lambda")],
        slots_of([
            SlotSpec::new("C1", 1, "(x3)"),
            SlotSpec::new("C2", 1, "(x3)"),
            SlotSpec::new("C3", 1, "(x3)"),
            SlotSpec::new("A3", 1, "(x3)"),
        ]),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14() + G::e2() * p(pr, "lambda"),
                G::e1(),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_all()),
        Some(Box::new(|pr| Chart::ParabolicC {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|pr, slots| {
            let lambda = p(pr, "lambda");
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let t2 = (j[1] + j[3]) * (1.0 / lambda);
                let a = [j[2]];
                parabolic_components(
                    s[0].call(&a),
                    s[1].call(&a),
                    s[2].call(&a),
                    s[3].call(&a),
                    t2,
                )
            }))
        }),
    ));

    // P3.10a/b — parabolic helices + skew translations + isotropic line
    entries.push(potential_entry(
        "P3.10a",
        "parabolic helices with a skew translation direction",
        "e12-e14+λe2, e1+μe3, e2-e4",
        vec![ParamSpec::nonzero("lambda"), ParamSpec::nonzero("mu")],
        slots_of([
            SlotSpec::new("C1", 1, "(μ y1 - 2λ x3)"),
            SlotSpec::new("C2", 1, "(μ y1 - 2λ x3)"),
            SlotSpec::new("C3", 1, "(μ y1 - 2λ x3)"),
            SlotSpec::new("A3", 1, "(μ y1 - 2λ x3)"),
        ]),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14() + G::e2() * p(pr, "lambda"),
                G::e1() + G::e3() * p(pr, "mu"),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_all()),
        Some(Box::new(|pr| Chart::ParabolicC {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|pr, slots| {
            let lambda = p(pr, "lambda");
            let mu = p(pr, "mu");
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let ss = j[1] + j[3];
                let t1 = j[0] * (2.0 * lambda) + ss * ss;
                let t2 = ss * (1.0 / lambda);
                let a = [t1 * mu - j[2] * (2.0 * lambda)];
                parabolic_components(
                    s[0].call(&a),
                    s[1].call(&a),
                    s[2].call(&a),
                    s[3].call(&a),
                    t2,
                )
            }))
        }),
    ));

    entries.push(potential_entry(
        "P3.10b",
        "parabolic rotations with a skew translation direction",
        "e12-e14, e1+μe3, e2-e4",
        vec![ParamSpec::nonzero("mu")],
        slots_of([
            SlotSpec::new("F", 1, "(y1)"),
            SlotSpec::new("P", 1, "(y1)"),
            SlotSpec::new("X", 1, "(y1)"),
            SlotSpec::new("A3", 1, "(y1)"),
        ]),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14(),
                G::e1() + G::e3() * p(pr, "mu"),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_parabolic()),
        Some(Box::new(|_| Chart::ParabolicA)),
        Box::new(|pr, slots| {
            let mu = p(pr, "mu");
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_parabolic(), move |x| {
                let [t1, t2, t3, _t4] = Chart::ParabolicA.inverse(seed(x));
                let a = [t1];
                let (f, ps, xi) = (s[0].call(&a), s[1].call(&a), s[2].call(&a));
                let mt1 = t1 * mu;
                let c1 = t3 * t3 * f / (mt1 * mt1) * 0.5 + t3 * ps / mt1 + xi;
                let c3 = t3 * f / mt1 + ps;
                parabolic_components(c1, f, c3, s[3].call(&a), t2)
            }))
        }),
    ));

    // P3.11 — proportional bi-rotations + plane translations
    entries.push(potential_entry(
        "P3.11",
        "proportional bi-rotations with plane translations",
        "e13+λe24, e1, e3",
        vec![ParamSpec::nonzero("lambda")],
        slots_of([
            SlotSpec::new("C1", 1, "(rho)"),
            SlotSpec::new("C2", 1, "(rho)"),
            SlotSpec::new("C3", 1, "(rho)"),
            SlotSpec::new("C4", 1, "(rho)"),
        ]),
        Box::new(|pr| vec![G::e13() + G::e24() * p(pr, "lambda"), G::e1(), G::e3()]),
        Box::new(|pr| {
            dom_from_chart(Chart::BiRotation {
                lambda: p(pr, "lambda"),
            })
        }),
        Some(Box::new(|pr| Chart::BiRotation {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|pr, slots| {
            let lambda = p(pr, "lambda");
            let chart = Chart::BiRotation { lambda };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [_r, rho, _theta, phi] = chart.inverse(seed(x));
                let a = [rho];
                let (a1, a3) = rotation_pair(s[0].call(&a), s[1].call(&a), phi);
                let (a2, a4) = boost_pair(s[2].call(&a), s[3].call(&a), phi * lambda);
                [a1, a2, a3, a4]
            }))
        }),
    ));

    // P3.12 — proportional bi-rotations + pseudo-Euclidean translations
    entries.push(potential_entry(
        "P3.12",
        "proportional bi-rotations with pseudo-plane translations",
        "e13+λe24, e2, e4",
        vec![ParamSpec::nonzero("lambda")],
        slots_of([
            SlotSpec::new("a1", 1, "(r)"),
            SlotSpec::new("a2", 1, "(r)"),
            SlotSpec::new("a3", 1, "(r)"),
            SlotSpec::new("a4", 1, "(r)"),
        ]),
        Box::new(|pr| vec![G::e13() + G::e24() * p(pr, "lambda"), G::e2(), G::e4()]),
        Box::new(|pr| {
            dom_from_chart(Chart::BiRotation {
                lambda: p(pr, "lambda"),
            })
        }),
        Some(Box::new(|pr| Chart::BiRotation {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|pr, slots| {
            let lambda = p(pr, "lambda");
            let chart = Chart::BiRotation { lambda };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [r, _rho, theta, phi] = chart.inverse(seed(x));
                let a = [r];
                let ang = theta - phi;
                let (sa, ca) = (ang.sin(), ang.cos());
                let lang = ang * lambda;
                let (sh, ch) = (lang.sinh(), lang.cosh());
                let (a1, a2, a3, a4) = (s[0].call(&a), s[1].call(&a), s[2].call(&a), s[3].call(&a));
                [
                    a1 * sa + a2 * ca,
                    a3 * sh + a4 * ch,
                    a2 * sa - a1 * ca,
                    a3 * ch + a4 * sh,
                ]
            }))
        }),
    ));

    // P3.13 — bi-rotation pair + isotropic translation
    entries.push(potential_entry(
        "P3.13",
        "rotation, boost, and an isotropic translation",
        "e13, e24, e2-e4",
        vec![],
        slots_of([
            SlotSpec::new("t1", 1, "(r)"),
            SlotSpec::new("t2", 1, "(r)"),
            SlotSpec::new("C", 1, "(r)"),
            SlotSpec::new("D", 1, "(r)"),
        ]),
        gens_const(&[G::e13(), G::e24(), G::e2() - G::e4()]),
        Box::new(|_| dom_from_chart(Chart::BiRotationUnit)),
        Some(Box::new(|_| Chart::BiRotationUnit)),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(Chart::BiRotationUnit), move |x| {
                let [r, rho, theta, phi] = Chart::BiRotationUnit.inverse(seed(x));
                let a = [r];
                let ang = theta - phi;
                let (sa, ca) = (ang.sin(), ang.cos());
                let (t1, t2) = (s[0].call(&a), s[1].call(&a));
                let grow = rho * s[2].call(&a) * phi.exp();
                let decay = s[3].call(&a) * (-phi).exp() / rho;
                [
                    t2 * ca - t1 * sa,
                    grow + decay,
                    t1 * ca + t2 * sa,
                    decay - grow,
                ]
            }))
        }),
    ));

    // P3.14 — two parabolic-helix families + isotropic translation
    entries.push(potential_entry(
        "P3.14",
        "two parabolic-helix families with an isotropic translation",
        "e12-e14+λe1+μe3, e23+e34+νe1+λe3, e2-e4",
        vec![
            ParamSpec::free("lambda"),
            ParamSpec::free("mu"),
            ParamSpec::free("nu"),
        ],
        slots_of([SlotSpec::new("C1", 1, "(u)"), SlotSpec::new("C3", 1, "(u)")]),
        Box::new(|pr| {
            let (l, m, n) = (p(pr, "lambda"), p(pr, "mu"), p(pr, "nu"));
            vec![
                G::e12() - G::e14() + G::e1() * l + G::e3() * m,
                G::e23() + G::e34() + G::e1() * n + G::e3() * l,
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|pr| {
            let c = Chart::HelixPair {
                lambda: p(pr, "lambda"),
                mu: p(pr, "mu"),
                nu: p(pr, "nu"),
            };
            dom_from_chart(c)
        }),
        Some(Box::new(|pr| Chart::HelixPair {
            lambda: p(pr, "lambda"),
            mu: p(pr, "mu"),
            nu: p(pr, "nu"),
        })),
        Box::new(|pr, slots| {
            let chart = Chart::HelixPair {
                lambda: p(pr, "lambda"),
                mu: p(pr, "mu"),
                nu: p(pr, "nu"),
            };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [u, _phi, psi, _w] = chart.inverse(seed(x));
                let a = [u];
                let (c1, c3) = (s[0].call(&a), s[1].call(&a));
                let a2 = psi * c3 + c1;
                [c3, a2, zero(), a2]
            }))
        }),
    ));

    // P3.15 — parabolic rotations, boosts and a space-like translation
    entries.push(potential_entry(
        "P3.15",
        "parabolic rotations with boosts and x3 translations",
        "e12-e14, e24, e3",
        vec![],
        slots_of([
            SlotSpec::new("F1", 1, "(v)"),
            SlotSpec::new("F2", 1, "(v)"),
            SlotSpec::new("F3", 1, "(v)"),
            SlotSpec::new("F4", 1, "(v)"),
        ]),
        gens_const(&[G::e12() - G::e14(), G::e24(), G::e3()]),
        Box::new(|_| dom_parabolic()),
        Some(Box::new(|_| Chart::ParabolicBoost { lambda: 0.0 })),
        Box::new(|_, slots| {
            let chart = Chart::ParabolicBoost { lambda: 0.0 };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_parabolic(), move |x| {
                let [t1, t2, _u, v] = chart.inverse(seed(x));
                let a = [v];
                let (f1, f2, f3, f4) = (s[0].call(&a), s[1].call(&a), s[2].call(&a), s[3].call(&a));
                let t2sq = t2 * t2;
                let a1 = t1 * t2 * f1 + f3;
                let a2 = t1 * (t2sq - 1.0) * f1 * 0.5 + t2 * f3 + f2 / t1;
                let a4 = t1 * (t2sq + 1.0) * f1 * 0.5 + t2 * f3 + f2 / t1;
                [a1, a2, f4, a4]
            }))
        }),
    ));

    // P3.16 — parabolic rotations + skew hyperbolic helices
    entries.push(potential_entry(
        "P3.16",
        "parabolic rotations with skew hyperbolic helices",
        "e12-e14, e24+λe1+μe3, e2-e4",
        vec![ParamSpec::free("lambda"), ParamSpec::free("mu")],
        slots_of([
            SlotSpec::new("F1", 1, "(u)"),
            SlotSpec::new("F2", 1, "(u)"),
            SlotSpec::new("F3", 1, "(u)"),
            SlotSpec::new("F4", 1, "(u)"),
        ]),
        Box::new(|pr| {
            vec![
                G::e12() - G::e14(),
                G::e24() + G::e1() * p(pr, "lambda") + G::e3() * p(pr, "mu"),
                G::e2() - G::e4(),
            ]
        }),
        Box::new(|_| dom_parabolic()),
        Some(Box::new(|pr| Chart::ParabolicScale { mu: p(pr, "mu") })),
        Box::new(|pr, slots| {
            let lambda = p(pr, "lambda");
            let chart = Chart::ParabolicScale { mu: p(pr, "mu") };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_parabolic(), move |x| {
                let [v, t2, u, _t4] = chart.inverse(seed(x));
                let a = [u];
                let (f1, f2, f3, f4) = (s[0].call(&a), s[1].call(&a), s[2].call(&a), s[3].call(&a));
                let (ev, emv) = (v.exp(), (-v).exp());
                let c2 = f1 * ev;
                let c3 = f1 * v * lambda + f2;
                let c1 = f3 * emv - f1 * ev * 0.5
                    + v * emv * (f1 * v * (0.5 * lambda * lambda) + f2 * lambda);
                parabolic_components(c1, c2, c3, f4, t2)
            }))
        }),
    ));

    // P3.17 — two parabolic rotations + boost
    entries.push(potential_entry(
        "P3.17",
        "two parabolic rotations with a boost",
        "e12-e14, e23+e34, e24",
        vec![],
        slots_of([
            SlotSpec::new("C1", 1, "(y4)"),
            SlotSpec::new("C2", 1, "(y4)"),
            SlotSpec::new("C3", 1, "(y4)"),
            SlotSpec::new("C4", 1, "(y4)"),
        ]),
        gens_const(&[G::e12() - G::e14(), G::e23() + G::e34(), G::e24()]),
        Box::new(|_| dom_from_chart(Chart::NullPair)),
        Some(Box::new(|_| Chart::NullPair)),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(Chart::NullPair), move |x| {
                let [t1, t2, t3, t4] = Chart::NullPair.inverse(seed(x));
                let a = [t4];
                let c1 = s[0].call(&a);
                let phi = t1 * c1;
                let theta = t1 * c1 * 0.5 + s[3].call(&a) / t1;
                nullpair_components(phi, s[1].call(&a), s[2].call(&a), theta, t2, t3)
            }))
        }),
    ));

    // P3.18a/b — two parabolic rotations + elliptic helix with isotropic axis
    entries.push(potential_entry(
        "P3.18a",
        "two parabolic rotations with an isotropic-axis helix",
        "e12-e14, e23+e34, e13+λ(e2-e4)",
        vec![ParamSpec::nonzero("lambda")],
        slots_of([
            SlotSpec::new("C1", 1, "(y1)"),
            SlotSpec::new("C2", 1, "(y1)"),
            SlotSpec::new("C3", 1, "(y1)"),
            SlotSpec::new("C4", 1, "(y1)"),
        ]),
        Box::new(|pr| {
            let l = p(pr, "lambda");
            vec![
                G::e12() - G::e14(),
                G::e23() + G::e34(),
                G::e13() + (G::e2() - G::e4()) * l,
            ]
        }),
        Box::new(|_| dom_from_chart(Chart::NullPair)),
        Some(Box::new(|_| Chart::NullPair)),
        Box::new(|pr, slots| {
            let lambda = p(pr, "lambda");
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(Chart::NullPair), move |x| {
                let [t1, t2, t3, t4] = Chart::NullPair.inverse(seed(x));
                let a = [t1];
                let w = t4 / (t1 * (2.0 * lambda));
                let (sw, cw) = (w.sin(), w.cos());
                let (c1, c2) = (s[0].call(&a), s[1].call(&a));
                let psi = c1 * cw + c2 * sw;
                let xi = c2 * cw - c1 * sw;
                nullpair_components(s[2].call(&a), psi, xi, s[3].call(&a), t2, t3)
            }))
        }),
    ));

    entries.push(potential_entry(
        "P3.18b",
        "two parabolic rotations with a rotation",
        "e12-e14, e23+e34, e13",
        vec![],
        slots_of([
            SlotSpec::new("F", 2, "(y1, y4)"),
            SlotSpec::new("T", 2, "(y1, y4)"),
        ]),
        gens_const(&[G::e12() - G::e14(), G::e23() + G::e34(), G::e13()]),
        Box::new(|_| dom_from_chart(Chart::NullPair)),
        Some(Box::new(|_| Chart::NullPair)),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(Chart::NullPair), move |x| {
                let [t1, t2, t3, t4] = Chart::NullPair.inverse(seed(x));
                let a = [t1, t4];
                nullpair_components(s[0].call(&a), zero(), zero(), s[1].call(&a), t2, t3)
            }))
        }),
    ));

    // P3.19 — two parabolic rotations + proportional bi-rotation
    entries.push({
        let mut e = potential_entry(
            "P3.19",
            "two parabolic rotations with a proportional bi-rotation",
            "e12-e14, e23+e34, e13+λe24",
            vec![ParamSpec::nonzero("lambda")],
            slots_of([
                SlotSpec::new("C1", 1, "(y4)"),
                SlotSpec::new("C2", 1, "(y4)"),
                SlotSpec::new("C3", 1, "(y4)"),
                SlotSpec::new("C4", 1, "(y4)"),
            ]),
            Box::new(|pr| {
                vec![
                    G::e12() - G::e14(),
                    G::e23() + G::e34(),
                    G::e13() + G::e24() * p(pr, "lambda"),
                ]
            }),
            Box::new(|_| dom_from_chart(Chart::NullPair)),
            Some(Box::new(|_| Chart::NullPair)),
            Box::new(|pr, slots| {
                let lambda = p(pr, "lambda");
                let s: Vec<Slot> = slots.to_vec();
                Ok(field(dom_from_chart(Chart::NullPair), move |x| {
                    let [t1, t2, t3, t4] = Chart::NullPair.inverse(seed(x));
                    let a = [t4];
                    let c1 = s[0].call(&a);
                    let phi = t1 * c1;
                    let theta = t1 * c1 * 0.5 + s[1].call(&a) / t1;
                    let w = t1.ln() * (1.0 / lambda);
                    let (sw, cw) = (w.sin(), w.cos());
                    let (c3, c4) = (s[2].call(&a), s[3].call(&a));
                    let psi = c3 * cw + c4 * sw;
                    let xi = c4 * cw - c3 * sw;
                    nullpair_components(phi, psi, xi, theta, t2, t3)
                }))
            }),
        );
        // Worked example: C1 = C2 = C3 = 0 and C4 the identity.
        e.preset_example = Some(Box::new(|_| {
            vec![
                Slot::zero("C1", 1),
                Slot::zero("C2", 1),
                Slot::zero("C3", 1),
                Slot::identity("C4"),
            ]
        }));
        e
    });

    // P3.20 — rotation group of 3-space
    entries.push(potential_entry(
        "P3.20",
        "spatial rotations about the origin",
        "e12, e13, e23",
        vec![],
        slots_of([SlotSpec::new("A4", 2, "(rho, x4)")]),
        gens_const(&[G::e12(), G::e13(), G::e23()]),
        Box::new(|_| dom_spatial_radius()),
        None,
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_spatial_radius(), move |x| {
                let j = seed(x);
                let rho = (j[0] * j[0] + j[1] * j[1] + j[2] * j[2]).sqrt();
                [zero(), zero(), zero(), s[0].call(&[rho, j[3]])]
            }))
        }),
    ));

    // P3.21 — rotations and boosts fixing the x3 axis
    entries.push(potential_entry(
        "P3.21",
        "rotations and boosts fixing the x3 axis",
        "e12, e14, e24",
        vec![],
        slots_of([SlotSpec::new("A3", 2, "(u, x3)")]),
        gens_const(&[G::e12(), G::e14(), G::e24()]),
        Box::new(|_| dom_spacelike_12()),
        None,
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_spacelike_12(), move |x| {
                let j = seed(x);
                let u = (j[0] * j[0] + j[1] * j[1] - j[3] * j[3]).sqrt();
                [zero(), zero(), s[0].call(&[u, j[2]]), zero()]
            }))
        }),
    ));
}

/// Four independent slots over one shared scalar argument.
fn translations_3d(
    id: &'static str,
    desc: &'static str,
    algebra: &'static str,
    args: &'static str,
    gens: Vec<G>,
    arg: fn(&[Jet2; 4]) -> Jet2,
) -> ClassEntry {
    let specs = [
        SlotSpec::new("A1", 1, args),
        SlotSpec::new("A2", 1, args),
        SlotSpec::new("A3", 1, args),
        SlotSpec::new("A4", 1, args),
    ];
    potential_entry(
        id,
        desc,
        algebra,
        vec![],
        slots_of(specs),
        gens_const(&gens),
        Box::new(|_| dom_all()),
        None,
        Box::new(move |_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let a = [arg(&j)];
                [s[0].call(&a), s[1].call(&a), s[2].call(&a), s[3].call(&a)]
            }))
        }),
    )
}
