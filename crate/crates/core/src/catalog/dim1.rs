//! Classes invariant under one-dimensional subgroups.

use crate::charts::Chart;
use crate::geometry::SpacetimePoint;
use crate::jet::Jet2;

use super::common::*;
use super::{fixed_slots, p, slots_of, ClassEntry, ParamSpec, Slot, SlotSpec};

const A3_SLOTS: [SlotSpec; 4] = [
    SlotSpec::new("A1", 3, "(x2, x3, x4)"),
    SlotSpec::new("A2", 3, "(x2, x3, x4)"),
    SlotSpec::new("A3", 3, "(x2, x3, x4)"),
    SlotSpec::new("A4", 3, "(x2, x3, x4)"),
];

const B3_SLOTS: [SlotSpec; 4] = [
    SlotSpec::new("A1", 3, "(x1, x2, x3)"),
    SlotSpec::new("A2", 3, "(x1, x2, x3)"),
    SlotSpec::new("A3", 3, "(x1, x2, x3)"),
    SlotSpec::new("A4", 3, "(x1, x2, x3)"),
];

const C3_SLOTS: [SlotSpec; 4] = [
    SlotSpec::new("A1", 3, "(x1, x3, x2-x4)"),
    SlotSpec::new("A2", 3, "(x1, x3, x2-x4)"),
    SlotSpec::new("A3", 3, "(x1, x3, x2-x4)"),
    SlotSpec::new("A4", 3, "(x1, x3, x2-x4)"),
];

/// Generic "four independent slots over fixed arguments" constructor.
fn slot_field(
    slots: &[Slot],
    args: impl Fn(&[Jet2; 4]) -> Vec<Jet2> + Send + Sync + 'static,
) -> impl Fn(SpacetimePoint) -> [Jet2; 4] + Send + Sync + 'static {
    let s: Vec<Slot> = slots.to_vec();
    move |x| {
        let j = seed(x);
        let a = args(&j);
        [s[0].call(&a), s[1].call(&a), s[2].call(&a), s[3].call(&a)]
    }
}

pub(super) fn push(entries: &mut Vec<ClassEntry>) {
    // P1.1a — translations along a space-like direction
    entries.push(potential_entry(
        "P1.1a",
        "translations along a space-like line",
        "e1",
        vec![],
        fixed_slots(&A3_SLOTS),
        gens_const(&[G::e1()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|_, slots| {
            Ok(field(
                dom_all(),
                slot_field(slots, |j| vec![j[1], j[2], j[3]]),
            ))
        }),
    ));

    // P1.1b — translations along the time-like direction
    entries.push(potential_entry(
        "P1.1b",
        "translations along the time-like line",
        "e4",
        vec![],
        fixed_slots(&B3_SLOTS),
        gens_const(&[G::e4()]),
        Box::new(|_| dom_all()),
        None,
        Box::new(|_, slots| {
            Ok(field(
                dom_all(),
                slot_field(slots, |j| vec![j[0], j[1], j[2]]),
            ))
        }),
    ));

    // P1.1c — translations along an isotropic direction
    entries.push(potential_entry(
        "P1.1c",
        "translations along an isotropic line",
        "e2+e4",
        vec![],
        fixed_slots(&C3_SLOTS),
        gens_const(&[G::e2() + G::e4()]),
        Box::new(|_| dom_all()),
        Some(Box::new(|_| Chart::Isotropic)),
        Box::new(|_, slots| {
            Ok(field(
                dom_all(),
                slot_field(slots, |j| vec![j[0], j[2], j[1] - j[3]]),
            ))
        }),
    ));

    // P1.2 — elliptic helices
    entries.push(potential_entry(
        "P1.2",
        "elliptic helices (rotation in the x1-x3 plane with drift)",
        "e13+λe2+μe4",
        vec![ParamSpec::free("lambda"), ParamSpec::free("mu")],
        slots_of([
            SlotSpec::new("C1", 3, "(r, y2, y4)"),
            SlotSpec::new("C2", 3, "(r, y2, y4)"),
            SlotSpec::new("A2", 3, "(r, y2, y4)"),
            SlotSpec::new("A4", 3, "(r, y2, y4)"),
        ]),
        Box::new(|pr| vec![G::e13() + G::e2() * p(pr, "lambda") + G::e4() * p(pr, "mu")]),
        Box::new(|pr| {
            dom_from_chart(Chart::Elliptic {
                lambda: p(pr, "lambda"),
                mu: p(pr, "mu"),
            })
        }),
        Some(Box::new(|pr| Chart::Elliptic {
            lambda: p(pr, "lambda"),
            mu: p(pr, "mu"),
        })),
        Box::new(|pr, slots| {
            let chart = Chart::Elliptic {
                lambda: p(pr, "lambda"),
                mu: p(pr, "mu"),
            };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [r, t2, phi, t4] = chart.inverse(seed(x));
                let args = [r, t2, t4];
                let (a1, a3) = rotation_pair(s[0].call(&args), s[1].call(&args), phi);
                [a1, s[2].call(&args), a3, s[3].call(&args)]
            }))
        }),
    ));

    // P1.3 — hyperbolic helices
    entries.push(potential_entry(
        "P1.3",
        "hyperbolic helices (boost in the x2-x4 plane with drift)",
        "e24+λe1",
        vec![ParamSpec::free("lambda")],
        slots_of([
            SlotSpec::new("A1", 3, "(y1, r, y3)"),
            SlotSpec::new("C1", 3, "(y1, r, y3)"),
            SlotSpec::new("C2", 3, "(y1, r, y3)"),
            SlotSpec::new("A3", 3, "(y1, r, y3)"),
        ]),
        Box::new(|pr| vec![G::e24() + G::e1() * p(pr, "lambda")]),
        Box::new(|pr| {
            dom_from_chart(Chart::Hyperbolic1 {
                lambda: p(pr, "lambda"),
            })
        }),
        Some(Box::new(|pr| Chart::Hyperbolic1 {
            lambda: p(pr, "lambda"),
        })),
        Box::new(|pr, slots| {
            let chart = Chart::Hyperbolic1 {
                lambda: p(pr, "lambda"),
            };
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [t1, r, t3, phi] = chart.inverse(seed(x));
                let args = [t1, r, t3];
                let (a2, a4) = boost_pair(s[1].call(&args), s[2].call(&args), phi);
                [s[0].call(&args), a2, s[3].call(&args), a4]
            }))
        }),
    ));

    // P1.4a/b/c — parabolic helices
    entries.push(parabolic_helix(
        "P1.4a",
        "parabolic rotations",
        "e12-e14",
        vec![],
        |_| Chart::ParabolicA,
        |_| G::e12() - G::e14(),
    ));
    entries.push(parabolic_helix(
        "P1.4b",
        "parabolic helices along x3",
        "e12-e14+μe3",
        vec![ParamSpec::nonzero("mu")],
        |pr| Chart::ParabolicB { mu: p(pr, "mu") },
        |pr| G::e12() - G::e14() + G::e3() * p(pr, "mu"),
    ));
    entries.push(parabolic_helix(
        "P1.4c",
        "parabolic helices along x2",
        "e12-e14+λe2",
        vec![ParamSpec::nonzero("lambda")],
        |pr| Chart::ParabolicC {
            lambda: p(pr, "lambda"),
        },
        |pr| G::e12() - G::e14() + G::e2() * p(pr, "lambda"),
    ));

    // P1.5 — proportional bi-rotations
    entries.push(potential_entry(
        "P1.5",
        "proportional bi-rotations (rotation + proportional boost)",
        "e13+λe24",
        vec![ParamSpec::nonzero("lambda")],
        slots_of([
            SlotSpec::new("C1", 3, "(rho, r, theta)"),
            SlotSpec::new("C2", 3, "(rho, r, theta)"),
            SlotSpec::new("C3", 3, "(rho, r, theta)"),
            SlotSpec::new("C4", 3, "(rho, r, theta)"),
        ]),
        Box::new(|pr| vec![G::e13() + G::e24() * p(pr, "lambda")]),
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
                let args = [rho, r, theta];
                let (a1, a3) = rotation_pair(s[0].call(&args), s[1].call(&args), phi);
                let (a2, a4) = boost_pair(s[2].call(&args), s[3].call(&args), phi * lambda);
                [a1, a2, a3, a4]
            }))
        }),
    ));
}

/// Common body of the three parabolic-helix classes: the chart varies, the
/// component pattern does not.
fn parabolic_helix(
    id: &'static str,
    desc: &'static str,
    algebra: &'static str,
    params: Vec<ParamSpec>,
    chart_of: fn(&super::Params) -> Chart,
    gen_of: fn(&super::Params) -> G,
) -> ClassEntry {
    potential_entry(
        id,
        desc,
        algebra,
        params,
        slots_of([
            SlotSpec::new("C1", 3, "(y1, y3, y4)"),
            SlotSpec::new("C2", 3, "(y1, y3, y4)"),
            SlotSpec::new("C3", 3, "(y1, y3, y4)"),
            SlotSpec::new("A3", 3, "(y1, y3, y4)"),
        ]),
        Box::new(move |pr| vec![gen_of(pr)]),
        Box::new(move |pr| dom_from_chart(chart_of(pr))),
        Some(Box::new(chart_of)),
        Box::new(move |pr, slots| {
            let chart = chart_of(pr);
            let s: Vec<Slot> = slots.to_vec();
            Ok(field(dom_from_chart(chart), move |x| {
                let [t1, t2, t3, t4] = chart.inverse(seed(x));
                let args = [t1, t3, t4];
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
