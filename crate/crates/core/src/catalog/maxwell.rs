//! The seven Maxwell classes: field tensors given directly (not as dA),
//! each invariant under its subgroup and closed.
//!
//! The two classes whose component lists mix free functions with
//! antiderivative-constrained ones (C3.19 and C4.16) are assembled in the
//! adapted coframe of their chart and pushed to Galilean components through
//! the chart jacobian, which the jets provide exactly.

use crate::charts::Chart;
use crate::geometry::TWO_FORM_PAIRS;
use crate::jet::Jet2;
use crate::{Error, Result};

use super::common::*;
use super::{p, slots_of, ClassEntry, ParamSpec, Poly, Slot, SlotSpec};

/// Sample arguments at which antiderivative slot relations are validated.
const RELATION_SAMPLES: usize = 21;
const RELATION_TOL: f64 = 1e-8;

/// Closedness ties the C3.19 antiderivative slots to the free ones:
/// F3' = F2/λ − F1 and F4' = −F1/λ − F2.
fn check_c319_relations(lambda: f64, slots: &[Slot]) -> Result<()> {
    let eval = |k: usize, t: f64| slots[k].call(&[Jet2::coordinate(0, t)]);
    for i in 0..RELATION_SAMPLES {
        let t = -3.0 + 6.0 * (i as f64) / (RELATION_SAMPLES as f64 - 1.0);
        let f1 = eval(0, t);
        let f2 = eval(1, t);
        let f3 = eval(2, t);
        let f4 = eval(3, t);
        let want3 = f2.v / lambda - f1.v;
        let want4 = -f1.v / lambda - f2.v;
        let scale = 1.0 + want3.abs().max(want4.abs());
        if (f3.g[0] - want3).abs() > RELATION_TOL * scale
            || (f4.g[0] - want4).abs() > RELATION_TOL * scale
        {
            return Err(Error::SlotRelationViolation(format!(
                "C3.19 antiderivative relations fail at t = {t}"
            )));
        }
    }
    Ok(())
}

/// Closedness ties the C4.16 numerator slot to the free one: FB' = −2λ·F2.
fn check_c416_relation(lambda: f64, slots: &[Slot]) -> Result<()> {
    let eval = |k: usize, t: f64| slots[k].call(&[Jet2::coordinate(0, t)]);
    for i in 0..RELATION_SAMPLES {
        let t = -3.0 + 6.0 * (i as f64) / (RELATION_SAMPLES as f64 - 1.0);
        let f2 = eval(0, t);
        let fb = eval(1, t);
        let want = -2.0 * lambda * f2.v;
        if (fb.g[0] - want).abs() > RELATION_TOL * (1.0 + want.abs()) {
            return Err(Error::SlotRelationViolation(format!(
                "C4.16 antiderivative relation fails at t = {t}"
            )));
        }
    }
    Ok(())
}

/// Push a 2-form given in an adapted coframe to Galilean components:
/// F_ij = Σ_{a<b} F̃_ab (∂_i t^a ∂_j t^b − ∂_j t^a ∂_i t^b), with the
/// jacobian entries taken from the adapted-coordinate jets.
fn coframe_to_galilean(t: &[Jet2; 4], ftilde: &[((usize, usize), Jet2)]) -> [Jet2; 6] {
    std::array::from_fn(|kk| {
        let (i, j) = TWO_FORM_PAIRS[kk];
        let mut acc = Jet2::constant(0.0);
        for &((a, b), fab) in ftilde {
            let jai = t[a].gradient_jet(i);
            let jbj = t[b].gradient_jet(j);
            let jaj = t[a].gradient_jet(j);
            let jbi = t[b].gradient_jet(i);
            acc = acc + fab * (jai * jbj - jaj * jbi);
        }
        acc
    })
}

pub(super) fn push(entries: &mut Vec<ClassEntry>) {
    // C3.19
    entries.push({
        let mut e = maxwell_entry(
            "C3.19",
            "field tensors of the parabolic-pair/bi-rotation group",
            "e12-e14, e23+e34, e13+λe24",
            vec![ParamSpec::nonzero("lambda")],
            slots_of([
                SlotSpec::new("F1", 1, "(y4)"),
                SlotSpec::new("F2", 1, "(y4)"),
                SlotSpec::new("F3", 1, "(y4), antiderivative slot"),
                SlotSpec::new("F4", 1, "(y4), antiderivative slot"),
                SlotSpec::new("F5", 1, "(y4)"),
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
                check_c319_relations(lambda, slots)?;
                let s: Vec<Slot> = slots.to_vec();
                // Adapted-coframe components (w = ln y1 / λ):
                //   F₁₂ = F3·cos w − F4·sin w     F₁₃ = F3·sin w + F4·cos w
                //   F₁₄ = F5/y1                   F₂₃ = 0
                //   F₂₄ = y1(F1·cos w − F2·sin w) F₃₄ = y1(F1·sin w + F2·cos w)
                Ok(two_form_field(dom_from_chart(Chart::NullPair), move |x| {
                    let t = Chart::NullPair.inverse(seed(x));
                    let a = [t[3]];
                    let k1 = s[0].call(&a);
                    let k2 = s[1].call(&a);
                    let g1 = s[2].call(&a);
                    let g2 = s[3].call(&a);
                    let g3 = s[4].call(&a);
                    let w = t[0].ln() * (1.0 / lambda);
                    let (sw, cw) = (w.sin(), w.cos());
                    let ftilde = [
                        ((0, 1), g1 * cw - g2 * sw),
                        ((0, 2), g1 * sw + g2 * cw),
                        ((0, 3), g3 / t[0]),
                        ((1, 3), t[0] * (k1 * cw - k2 * sw)),
                        ((2, 3), t[0] * (k1 * sw + k2 * cw)),
                    ];
                    coframe_to_galilean(&t, &ftilde)
                }))
            }),
        );
        // Random draws must respect the antiderivative relations, so the
        // two integral slots are produced by exact polynomial integration
        // (plus a free integration constant).
        e.custom_draw = Some(Box::new(|pr, rng| {
            use rand::Rng;
            let lambda = p(pr, "lambda");
            let f1 = Poly::random(rng, 1, 3);
            let f2 = Poly::random(rng, 1, 3);
            let f5 = Poly::random(rng, 1, 3);
            let cst = |rng: &mut rand_chacha::ChaCha8Rng| {
                Poly::new(1, vec![(vec![0], rng.gen_range(-1.0..1.0))])
            };
            let f3 = f2
                .scale(1.0 / lambda)
                .add(&f1.scale(-1.0))
                .antiderivative1()
                .add(&cst(rng));
            let f4 = f1
                .scale(-1.0 / lambda)
                .add(&f2.scale(-1.0))
                .antiderivative1()
                .add(&cst(rng));
            vec![
                Slot::poly("F1", f1),
                Slot::poly("F2", f2),
                Slot::poly("F3", f3),
                Slot::poly("F4", f4),
                Slot::poly("F5", f5),
            ]
        }));
        e
    });

    // C4.16 — the F₁₃ numerator FB is tied to the free slot F2 by closedness;
    // at F2 = 0 it reduces to FB = K and F₁₃ = K/(u²+λ²), the worked example.
    entries.push({
        let mut e = maxwell_entry(
            "C4.16",
            "field tensors of the symmetric helix-pair group",
            "e12-e14+λe3, e23+e34+λe1, e13, e2-e4",
            vec![ParamSpec::nonzero("k"), ParamSpec::nonzero("lambda")],
            slots_of([
                SlotSpec::new("F2", 1, "(x2+x4)"),
                SlotSpec::new("FB", 1, "(x2+x4), antiderivative slot"),
            ]),
            Box::new(|pr| {
                let l = p(pr, "lambda");
                vec![
                    G::e12() - G::e14() + G::e3() * l,
                    G::e23() + G::e34() + G::e1() * l,
                    G::e13(),
                    G::e2() - G::e4(),
                ]
            }),
            Box::new(|pr| {
                dom_from_chart(Chart::HelixPairSym {
                    lambda: p(pr, "lambda"),
                })
            }),
            Some(Box::new(|pr| Chart::HelixPairSym {
                lambda: p(pr, "lambda"),
            })),
            Box::new(|pr, slots| {
                let lambda = p(pr, "lambda");
                check_c416_relation(lambda, slots)?;
                let chart = Chart::HelixPairSym { lambda };
                let s: Vec<Slot> = slots.to_vec();
                Ok(two_form_field(dom_from_chart(chart), move |x| {
                    let [u, phi, psi, _w] = chart.inverse(seed(x));
                    let p1 = s[1].call(&[u]) / (u * u + lambda * lambda);
                    let p2 = s[0].call(&[u]);
                    let f12 = -(phi * p1) - psi * p2;
                    let f23 = psi * p1 - phi * p2;
                    [f12, p1, f12, f23, p2, -f23]
                }))
            }),
        );
        e.preset_example = Some(Box::new(|pr| {
            let k = p(pr, "k");
            vec![
                Slot::zero("F2", 1),
                Slot::from_fn("FB", 1, move |_| Jet2::constant(k)),
            ]
        }));
        e.custom_draw = Some(Box::new(|pr, rng| {
            let lambda = p(pr, "lambda");
            let k = p(pr, "k");
            let f2 = Poly::random(rng, 1, 3);
            let fb = f2
                .scale(-2.0 * lambda)
                .antiderivative1()
                .add(&Poly::new(1, vec![(vec![0], k)]));
            vec![Slot::poly("F2", f2), Slot::poly("FB", fb)]
        }));
        e
    });

    // C4.17
    entries.push(maxwell_entry(
        "C4.17",
        "field tensors of the parabolic-pair/bi-rotation group with null translation",
        "e12-e14, e23+e34, e13+λe24, e2-e4",
        vec![
            ParamSpec::nonzero("lambda"),
            ParamSpec::free("a"),
            ParamSpec::free("b"),
            ParamSpec::free("c"),
        ],
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
            let (a, b, c) = (p(pr, "a"), p(pr, "b"), p(pr, "c"));
            Ok(two_form_field(dom_parabolic(), move |x| {
                let j = seed(x);
                let s = j[1] + j[3];
                let w = s.ln() * (1.0 / lambda);
                let (sw, cw) = (w.sin(), w.cos());
                let f12 = (cw * a + sw * b + j[0] * c) / s;
                let f23 = (sw * a - cw * b - j[2] * c) / s;
                [f12, zero(), f12, f23, Jet2::constant(c), -f23]
            }))
        }),
    ));

    // C4.20
    entries.push(maxwell_entry(
        "C4.20",
        "field tensors of the parabolic-pair group with rotation and boost",
        "e12-e14, e23+e34, e13, e24",
        vec![],
        slots_of([SlotSpec::new("F", 1, "(y4)")]),
        gens_const(&[G::e12() - G::e14(), G::e23() + G::e34(), G::e13(), G::e24()]),
        Box::new(|_| dom_parabolic()),
        Some(Box::new(|_| Chart::NullPair)),
        Box::new(|_, slots| {
            let s: Vec<Slot> = slots.to_vec();
            Ok(two_form_field(dom_parabolic(), move |x| {
                let j = seed(x);
                let su = j[1] + j[3];
                let t4 = j[0] * j[0] + j[1] * j[1] + j[2] * j[2] - j[3] * j[3];
                let f = s[0].call(&[t4]);
                let f12 = j[0] * f / su;
                let f23 = -(j[2] * f) / su;
                [f12, zero(), f12, f23, f, -f23]
            }))
        }),
    ));

    // C5.9
    entries.push(maxwell_entry(
        "C5.9",
        "field tensors of the five-dimensional parabolic-pair group",
        "e12-e14, e23+e34, e13, e24, e2-e4",
        vec![ParamSpec::nonzero("c")],
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
            let c = p(pr, "c");
            Ok(two_form_field(dom_parabolic(), move |x| {
                let j = seed(x);
                let su = j[1] + j[3];
                let f12 = j[0] * (c) / su;
                let f23 = -(j[2] * c) / su;
                [f12, zero(), f12, f23, Jet2::constant(c), -f23]
            }))
        }),
    ));

    // C6.5 — identically zero when λ = 0
    entries.push(maxwell_entry(
        "C6.5",
        "field tensors of the six-dimensional space-like-helix group",
        "e12-e14, e23+e34, e13+λe2, e1, e3, e2-e4",
        vec![
            ParamSpec::branching("lambda"),
            ParamSpec::free("c1"),
            ParamSpec::free("c2"),
        ],
        super::no_slots(),
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
        Box::new(|pr, _| {
            let lambda = p(pr, "lambda");
            if !super::branch_nonzero(lambda, "lambda")? {
                return Ok(crate::geometry::TwoFormField::zero());
            }
            let (c1, c2) = (p(pr, "c1"), p(pr, "c2"));
            Ok(two_form_field(dom_all(), move |x| {
                let j = seed(x);
                let w = (j[1] + j[3]) * (1.0 / lambda);
                let (sw, cw) = (w.sin(), w.cos());
                let f12 = sw * c1 + cw * c2;
                let f23 = sw * c2 - cw * c1;
                [f12, zero(), f12, f23, zero(), -f23]
            }))
        }),
    ));

    // C6.7
    entries.push(maxwell_entry(
        "C6.7",
        "field tensors of the six-dimensional bi-rotation group",
        "e12-e14, e23+e34, e13+λe24, e1, e3, e2-e4",
        vec![
            ParamSpec::nonzero("lambda"),
            ParamSpec::free("a1"),
            ParamSpec::free("a2"),
        ],
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
            let lambda = p(pr, "lambda");
            let (a1, a2) = (p(pr, "a1"), p(pr, "a2"));
            Ok(two_form_field(dom_parabolic(), move |x| {
                let j = seed(x);
                let s = j[1] + j[3];
                let w = s.ln() * (1.0 / lambda);
                let (sw, cw) = (w.sin(), w.cos());
                let phi = (cw * a1 - sw * a2) / s;
                let psi = (sw * a1 + cw * a2) / s;
                [phi, zero(), phi, psi, zero(), -psi]
            }))
        }),
    ));
}
