//! Classes invariant under two-dimensional subgroups.

use crate::charts::Chart;

use super::common::*;
use super::{p, slots_of, ClassEntry, ParamSpec, Slot, SlotSpec};

pub(super) fn push(entries: &mut Vec<ClassEntry>) {
    // P2.1a/b/c — planes of translations
    entries.push(potential_entry(
        "P2.1a",
        "translations of the Euclidean x1-x2 plane",
        "e1, e2",
        vec![],
        slots_of([
            SlotSpec::new("A1", 2, "(x3, x4)"),
            SlotSpec::new("A2", 2, "(x3, x4)"),
            SlotSpec::new("A3", 2, "(x3, x4)"),
            SlotSpec::new("A4", 2, "(x3, x4)"),
        ]),
        gens_const(&[G::e1(), G::e2()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let a = [j[2], j[3]];
                [s[0].call(&a), s[1].call(&a), s[2].call(&a), s[3].call(&a)]
            }))
        }),
    ));

    entries.push(potential_entry(
        "P2.1b",
        "translations of the pseudo-Euclidean x2-x4 plane",
        "e2, e4",
        vec![],
        slots_of([
            SlotSpec::new("A1", 2, "(x1, x3)"),
            SlotSpec::new("A2", 2, "(x1, x3)"),
            SlotSpec::new("A3", 2, "(x1, x3)"),
            SlotSpec::new("A4", 2, "(x1, x3)"),
        ]),
        gens_const(&[G::e2(), G::e4()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let a = [j[0], j[2]];
                [s[0].call(&a), s[1].call(&a), s[2].call(&a), s[3].call(&a)]
            }))
        }),
    ));

    entries.push(potential_entry(
        "P2.1c",
        "translations of an isotropic plane",
        "e1, e2+e4",
        vec![],
        slots_of([
            SlotSpec::new("A1", 2, "(x3, x2-x4)"),
            SlotSpec::new("A2", 2, "(x3, x2-x4)"),
            SlotSpec::new("A3", 2, "(x3, x2-x4)"),
            SlotSpec::new("A4", 2, "(x3, x2-x4)"),
        ]),
        gens_const(&[G::e1(), G::e2() + G::e4()]),
        Box::new(|_| dom_all()),
        Some(Box::new(|_| Chart::Isotropic)),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_all(), move |x| {
                let j = seed(x);
                let a = [j[2], j[1] - j[3]];
                [s[0].call(&a), s[1].call(&a), s[2].call(&a), s[3].call(&a)]
            }))
        }),
    ));

    // P2.2 — elliptic helices with a time-like axis + space-like translations
    entries.push(potential_entry(
        "P2.2",
        "elliptic helices with time-like axis and translations along x2",
        "e13+μe4, e2",
        vec![ParamSpec::free("mu")],
        slots_of([
            SlotSpec::new("C1", 2, "(r, y4)"),
            SlotSpec::new("C2", 2, "(r, y4)"),
            SlotSpec::new("A2", 2, "(r, y4)"),
            SlotSpec::new("A4", 2, "(r, y4)"),
        ]),
        Box::new(|pr| vec![G::e13() + G::e4() * p(pr, "mu"), G::e2()]),
        Box::new(|pr| dom_from_chart(Chart::EllipticTime { mu: p(pr, "mu") })),
        Some(Box::new(|pr| Chart::EllipticTime { mu: p(pr, "mu") })),
        Box::new(|pr, slots| {
            let chart = Chart::EllipticTime { mu: p(pr, "mu") };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [r, _t2, phi, t4] = chart.inverse(seed(x));
                let args = [r, t4];
                let (a1, a3) = rotation_pair(s[0].call(&args), s[1].call(&args), phi);
                [a1, s[2].call(&args), a3, s[3].call(&args)]
            }))
        }),
    ));

    // P2.3 — elliptic helices with a space-like axis + time translations
    entries.push(potential_entry(
        "P2.3",
        "elliptic helices with space-like axis and time translations",
        "e13+λe2, e4",
        vec![ParamSpec::nonzero("lambda")],
        slots_of([
            SlotSpec::new("b1", 2, "(r, y2)"),
            SlotSpec::new("b2", 2, "(r, y2)"),
            SlotSpec::new("A2", 2, "(r, y2)"),
            SlotSpec::new("A4", 2, "(r, y2)"),
        ]),
        Box::new(|pr| vec![G::e13() + G::e2() * p(pr, "lambda"), G::e4()]),
        Box::new(|pr| {
            dom_from_chart(Chart::EllipticSpace {
                lambda: p(pr, "lambda"),
            })
        }),
        Some(Box::new(|pr| Chart::EllipticSpace {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|pr, slots| {
            let chart = Chart::EllipticSpace {
                lambda: p(pr, "lambda"),
            };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [r, t2, phi, _t4] = chart.inverse(seed(x));
                let args = [r, t2];
                let (a1, a3) = rotation_pair(s[0].call(&args), s[1].call(&args), phi);
                [a1, s[2].call(&args), a3, s[3].call(&args)]
            }))
        }),
    ));

    // P2.4 — elliptic helices + isotropic translations
    entries.push(potential_entry(
        "P2.4",
        "elliptic helices with isotropic translations",
        "e13+λe2, e2+e4",
        vec![ParamSpec::free("lambda")],
        slots_of([
            SlotSpec::new("C1", 2, "(r, y2-y4)"),
            SlotSpec::new("C2", 2, "(r, y2-y4)"),
            SlotSpec::new("A2", 2, "(r, y2-y4)"),
            SlotSpec::new("A4", 2, "(r, y2-y4)"),
        ]),
        Box::new(|pr| vec![G::e13() + G::e2() * p(pr, "lambda"), G::e2() + G::e4()]),
        Box::new(|pr| {
            dom_from_chart(Chart::EllipticSpace {
                lambda: p(pr, "lambda"),
            })
        }),
        Some(Box::new(|pr| Chart::EllipticSpace {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|pr, slots| {
            let chart = Chart::EllipticSpace {
                lambda: p(pr, "lambda"),
            };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [r, t2, phi, t4] = chart.inverse(seed(x));
                let args = [r, t2 - t4];
                let (a1, a3) = rotation_pair(s[0].call(&args), s[1].call(&args), phi);
                [a1, s[2].call(&args), a3, s[3].call(&args)]
            }))
        }),
    ));

    // P2.5 — hyperbolic helices + translations along x1
    entries.push(potential_entry(
        "P2.5",
        "hyperbolic helices with translations along x1",
        "e24+λe3, e1",
        vec![ParamSpec::free("lambda")],
        slots_of([
            SlotSpec::new("A1", 2, "(r, y3)"),
            SlotSpec::new("C1", 2, "(r, y3)"),
            SlotSpec::new("C2", 2, "(r, y3)"),
            SlotSpec::new("A3", 2, "(r, y3)"),
        ]),
        Box::new(|pr| vec![G::e24() + G::e3() * p(pr, "lambda"), G::e1()]),
        Box::new(|pr| {
            dom_from_chart(Chart::Hyperbolic3 {
                lambda: p(pr, "lambda"),
            })
        }),
        Some(Box::new(|pr| Chart::Hyperbolic3 {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|pr, slots| {
            let chart = Chart::Hyperbolic3 {
                lambda: p(pr, "lambda"),
            };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [_t1, r, t3, phi] = chart.inverse(seed(x));
                let args = [r, t3];
                let (a2, a4) = boost_pair(s[1].call(&args), s[2].call(&args), phi);
                [s[0].call(&args), a2, s[3].call(&args), a4]
            }))
        }),
    ));

    // P2.6 — hyperbolic helices + isotropic translations
    entries.push(potential_entry(
        "P2.6",
        "hyperbolic helices with isotropic translations",
        "e24+λe3, e2-e4",
        vec![ParamSpec::free("lambda")],
        slots_of([
            SlotSpec::new("A1", 2, "(y1, y3-λ ln r)"),
            SlotSpec::new("a1", 2, "(y1, y3-λ ln r)"),
            SlotSpec::new("a2", 2, "(y1, y3-λ ln r)"),
            SlotSpec::new("A3", 2, "(y1, y3-λ ln r)"),
        ]),
        Box::new(|pr| vec![G::e24() + G::e3() * p(pr, "lambda"), G::e2() - G::e4()]),
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
                let [t1, r, t3, phi] = chart.inverse(seed(x));
                let lr = r.ln();
                let args = [t1, t3 - lr * lambda];
                let (g1, g2) = (s[1].call(&args), s[2].call(&args));
                let (shl, chl) = (lr.sinh(), lr.cosh());
                let c1 = g1 * chl + g2 * shl;
                let c2 = g1 * shl + g2 * chl;
                let (a2, a4) = boost_pair(c1, c2, phi);
                [s[0].call(&args), a2, s[3].call(&args), a4]
            }))
        }),
    ));

    // P2.7a/b/c — parabolic helices + isotropic translation
    entries.push(parabolic_13(
        "P2.7a",
        "parabolic rotations with an isotropic translation",
        "e12-e14, e2-e4",
        vec![],
        |_| Chart::ParabolicA,
        |_| vec![G::e12() - G::e14(), G::e2() - G::e4()],
    ));
    entries.push(parabolic_13(
        "P2.7b",
        "parabolic helices along x3 with an isotropic translation",
        "e12-e14+μe3, e2-e4",
        vec![ParamSpec::nonzero("mu")],
        |pr| Chart::ParabolicB { mu: p(pr, "mu") },
        |pr| {
            vec![
                G::e12() - G::e14() + G::e3() * p(pr, "mu"),
                G::e2() - G::e4(),
            ]
        },
    ));
    entries.push(parabolic_13(
        "P2.7c",
        "parabolic helices along x2 with an isotropic translation",
        "e12-e14+λe2, e2-e4",
        vec![ParamSpec::nonzero("lambda")],
        |pr| Chart::ParabolicC {
            lambda: p(pr, "lambda"),
        },
        |pr| {
            vec![
                G::e12() - G::e14() + G::e2() * p(pr, "lambda"),
                G::e2() - G::e4(),
            ]
        },
    ));

    // P2.8 — parabolic helices + translations along x3
    entries.push(potential_entry(
        "P2.8",
        "parabolic helices with translations along x3",
        "e12-e14+λe2, e3",
        vec![ParamSpec::nonzero("lambda")],
        slots_of([
            SlotSpec::new("C1", 2, "(y1, y4)"),
            SlotSpec::new("C2", 2, "(y1, y4)"),
            SlotSpec::new("C3", 2, "(y1, y4)"),
            SlotSpec::new("A3", 2, "(y1, y4)"),
        ]),
        Box::new(|pr| vec![G::e12() - G::e14() + G::e2() * p(pr, "lambda"), G::e3()]),
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
                let [t1, t2, _t3, t4] = chart.inverse(seed(x));
                let args = [t1, t4];
                parabolic_components(
                    s[0].call(&args),
                    s[1].call(&args),
                    s[2].call(&args),
                    s[3].call(&args),
                    t2,
                )
            }))
        }),
    ));

    // P2.9 — proportional bi-rotations + isotropic translation
    entries.push(potential_entry(
        "P2.9",
        "proportional bi-rotations with an isotropic translation",
        "e13+λe24, e2-e4",
        vec![ParamSpec::nonzero("lambda")],
        slots_of([
            SlotSpec::new("F1", 2, "(r, λ theta + ln rho)"),
            SlotSpec::new("F2", 2, "(r, λ theta + ln rho)"),
            SlotSpec::new("F3", 2, "(r, λ theta + ln rho)"),
        ]),
        Box::new(|pr| vec![G::e13() + G::e24() * p(pr, "lambda"), G::e2() - G::e4()]),
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
                let [r, rho, theta, phi] = chart.inverse(seed(x));
                let lnrho = rho.ln();
                let args = [r, theta * lambda + lnrho];
                let (f1, f2, f3) = (s[0].call(&args), s[1].call(&args), s[2].call(&args));
                let w = lnrho * (1.0 / lambda);
                let (sw, cw) = (w.sin(), w.cos());
                let c1 = f1 * cw + f2 * sw;
                let c2 = f2 * cw - f1 * sw;
                let (a1, a3) = rotation_pair(c1, c2, phi);
                let a2 = rho * f3 * (phi * lambda).exp();
                [a1, a2, a3, -a2]
            }))
        }),
    ));

    // P2.10 — rotations and pseudo-rotations
    entries.push(potential_entry(
        "P2.10",
        "rotation and boost in orthogonal planes",
        "e13, e24",
        vec![],
        slots_of([
            SlotSpec::new("t1", 2, "(r, rho)"),
            SlotSpec::new("t2", 2, "(r, rho)"),
            SlotSpec::new("t3", 2, "(r, rho)"),
            SlotSpec::new("t4", 2, "(r, rho)"),
        ]),
        gens_const(&[G::e13(), G::e24()]),
        Box::new(|_| dom_from_chart(Chart::BiRotationUnit)),
        Some(Box::new(|_| Chart::BiRotationUnit)),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(Chart::BiRotationUnit), move |x| {
                let [r, rho, theta, phi] = Chart::BiRotationUnit.inverse(seed(x));
                let args = [r, rho];
                let (t1, t2, t3, t4) = (
                    s[0].call(&args),
                    s[1].call(&args),
                    s[2].call(&args),
                    s[3].call(&args),
                );
                let ang = theta - phi;
                let (sa, ca) = (ang.sin(), ang.cos());
                let (ep, em) = (phi.exp(), (-phi).exp());
                [
                    t2 * ca - t1 * sa,
                    t3 * ep + t4 * em,
                    t1 * ca + t2 * sa,
                    t4 * em - t3 * ep,
                ]
            }))
        }),
    ));

    // P2.11 — two parabolic-helix subgroups; only the (λ=0, μ≠0) branch is
    // built, its conjugate (λ≠0, μ=0) gives the same classes.
    entries.push(potential_entry(
        "P2.11",
        "two one-parameter families of parabolic helices",
        "e12-e14+μe3, e23+e34-μe1",
        vec![ParamSpec::nonzero("mu")],
        slots_of([
            SlotSpec::new("F", 2, "(y1, v)"),
            SlotSpec::new("C1", 2, "(y1, v)"),
            SlotSpec::new("C2", 2, "(y1, v)"),
            SlotSpec::new("C3", 2, "(y1, v)"),
        ]),
        Box::new(|pr| {
            let mu = p(pr, "mu");
            vec![
                G::e12() - G::e14() + G::e3() * mu,
                G::e23() + G::e34() - G::e1() * mu,
            ]
        }),
        Box::new(|pr| dom_from_chart(Chart::NullPairAux { mu: p(pr, "mu") })),
        Some(Box::new(|pr| Chart::NullPairAux { mu: p(pr, "mu") })),
        Box::new(|pr, slots| {
            let mu = p(pr, "mu");
            let chart = Chart::NullPairAux { mu };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [t1, t2, u, v] = chart.inverse(seed(x));
                let args = [t1, v];
                let f = s[0].call(&args);
                let (c1, c2, c3) = (s[1].call(&args), s[2].call(&args), s[3].call(&args));
                // completed-square form of the component polynomial in
                // (y2, u); keeps the evaluation well conditioned near the
                // domain margins
                let pq = t2 - u * mu / t1;
                let q = -u;
                let a1 = f * pq + c1;
                let a3 = f * q + c2;
                let a2 = (pq * pq + q * q) * f * 0.5 + c1 * pq + c2 * q + c3;
                [a1, a2, a3, a2 + f]
            }))
        }),
    ));

    // P2.11a — two parabolic rotations (λ = μ = 0)
    entries.push(potential_entry(
        "P2.11a",
        "two one-parameter families of parabolic rotations",
        "e12-e14, e23+e34",
        vec![],
        slots_of([
            SlotSpec::new("F", 2, "(y1, y4)"),
            SlotSpec::new("P", 2, "(y1, y4)"),
            SlotSpec::new("X", 2, "(y1, y4)"),
            SlotSpec::new("T", 2, "(y1, y4)"),
        ]),
        gens_const(&[G::e12() - G::e14(), G::e23() + G::e34()]),
        Box::new(|_| dom_from_chart(Chart::NullPair)),
        Some(Box::new(|_| Chart::NullPair)),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(Chart::NullPair), move |x| {
                let [t1, t2, t3, t4] = Chart::NullPair.inverse(seed(x));
                let args = [t1, t4];
                nullpair_components(
                    s[0].call(&args),
                    s[1].call(&args),
                    s[2].call(&args),
                    s[3].call(&args),
                    t2,
                    t3,
                )
            }))
        }),
    ));

    // P2.12 — parabolic rotations + hyperbolic helices
    entries.push(potential_entry(
        "P2.12",
        "parabolic rotations with hyperbolic helices",
        "e12-e14, e24+λe3",
        vec![ParamSpec::free("lambda")],
        slots_of([
            SlotSpec::new("F1", 2, "(u, v)"),
            SlotSpec::new("F2", 2, "(u, v)"),
            SlotSpec::new("F3", 2, "(u, v)"),
            SlotSpec::new("F4", 2, "(u, v)"),
        ]),
        Box::new(|pr| vec![G::e12() - G::e14(), G::e24() + G::e3() * p(pr, "lambda")]),
        Box::new(|pr| {
            dom_from_chart(Chart::ParabolicBoost {
                lambda: p(pr, "lambda"),
            })
        }),
        Some(Box::new(|pr| Chart::ParabolicBoost {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|pr, slots| {
            let chart = Chart::ParabolicBoost {
                lambda: p(pr, "lambda"),
            };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [t1, t2, u, v] = chart.inverse(seed(x));
                let args = [u, v];
                let (f1, f2, f3, f4) = (
                    s[0].call(&args),
                    s[1].call(&args),
                    s[2].call(&args),
                    s[3].call(&args),
                );
                let t2sq = t2 * t2;
                let a1 = t1 * t2 * f1 + f3;
                let a2 = t1 * (t2sq - 1.0) * f1 * 0.5 + t2 * f3 + f2 / t1;
                let a4 = t1 * (t2sq + 1.0) * f1 * 0.5 + t2 * f3 + f2 / t1;
                [a1, a2, f4, a4]
            }))
        }),
    ));
}

/// Parabolic pattern with slots of (y1, y3): the P2.7 family.
fn parabolic_13(
    id: &'static str,
    desc: &'static str,
    algebra: &'static str,
    params: Vec<ParamSpec>,
    chart_of: fn(&super::Params) -> Chart,
    gens_of: fn(&super::Params) -> Vec<G>,
) -> ClassEntry {
    potential_entry(
        id,
        desc,
        algebra,
        params,
        slots_of([
            SlotSpec::new("C1", 2, "(y1, y3)"),
            SlotSpec::new("C2", 2, "(y1, y3)"),
            SlotSpec::new("C3", 2, "(y1, y3)"),
            SlotSpec::new("A3", 2, "(y1, y3)"),
        ]),
        Box::new(gens_of),
        Box::new(move |pr| dom_from_chart(chart_of(pr))),
        Some(Box::new(chart_of)),
        Box::new(move |pr, slots| {
            let chart = chart_of(pr);
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [t1, t2, t3, _t4] = chart.inverse(seed(x));
                let args = [t1, t3];
                parabolic_components(
                    s[0].call(&args),
                    s[1].call(&args),
                    s[2].call(&args),
                    s[3].call(&args),
                    t2,
                )
            }))
        }),
    )
}
