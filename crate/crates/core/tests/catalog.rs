//! Catalog-level behaviour: constructor examples, generator lists, algebra
//! closure, naturality, subset relations and error paths.

use invpot_core::catalog::{
    self, draw_params, draw_slots, params_from, registry, subset_relations, superclass_generators,
    Params, Slot,
};
use invpot_core::geometry::{
    lie_derivative_covector, lie_derivative_twoform, PoincareGenerator, SpacetimePoint,
    TwoFormField,
};
use invpot_core::jet::Jet2;
use invpot_core::verify::{
    detect_symmetry_algebra, invariance_residual, sample_domain, sample_pred, TOL_SV,
};
use invpot_core::Error;
use rand::SeedableRng;

fn pt(x: [f64; 4]) -> SpacetimePoint {
    SpacetimePoint::new(x)
}

#[test]
fn instantiate_potential_examples() {
    // P3.20 with A4(ρ, x4) = ρ² + x4 gives (0, 0, 0, ρ² + x4)
    let slot = Slot::from_fn("A4", 2, |a| a[0] * a[0] + a[1]);
    let a =
        catalog::instantiate_potential("P3.20".parse().unwrap(), &Params::new(), &[slot]).unwrap();
    let x = pt([0.5, -1.2, 0.8, 0.3]);
    let rho2 = 0.5f64.powi(2) + 1.2f64.powi(2) + 0.8f64.powi(2);
    let got = a.components(x).unwrap();
    assert!(got.0[0].abs() < 1e-14 && got.0[1].abs() < 1e-14 && got.0[2].abs() < 1e-14);
    assert!((got.0[3] - (rho2 + 0.3)).abs() < 1e-12);

    // P6.3 with a = 2 is the constant field (0, 2, 0, 2)
    let a =
        catalog::instantiate_potential("P6.3".parse().unwrap(), &params_from(&[("a", 2.0)]), &[])
            .unwrap();
    assert_eq!(
        a.components(pt([1.0, -1.0, 0.4, 2.0])).unwrap().0,
        [0.0, 2.0, 0.0, 2.0]
    );

    // the empty class has no constructor
    assert!(matches!(
        catalog::instantiate_potential(
            "P5.2".parse().unwrap(),
            &params_from(&[("lambda", 1.0)]),
            &[]
        ),
        Err(Error::EmptyClass(_))
    ));
}

#[test]
fn generators_of_examples() {
    let g = catalog::generators_of(
        "P1.2".parse().unwrap(),
        &params_from(&[("lambda", 2.0), ("mu", 3.0)]),
    )
    .unwrap();
    assert_eq!(g.len(), 1);
    let expect =
        PoincareGenerator::e13() + PoincareGenerator::e2() * 2.0 + PoincareGenerator::e4() * 3.0;
    assert_eq!(g[0].coeffs(), expect.coeffs());

    let g = catalog::generators_of("P2.10".parse().unwrap(), &Params::new()).unwrap();
    assert_eq!(g.len(), 2);
    assert_eq!(g[0].coeffs(), PoincareGenerator::e13().coeffs());
    assert_eq!(g[1].coeffs(), PoincareGenerator::e24().coeffs());

    // the Lorentz-group entry lists all six rotations and boosts
    let g = catalog::generators_of("P6.1".parse().unwrap(), &Params::new()).unwrap();
    assert_eq!(g.len(), 6);
    assert!(g.iter().all(|gen| gen.a == [0.0; 4]));
}

#[test]
fn instantiate_maxwell_examples() {
    // C5.9 with C = 1 at (1, 1, 0, 1): F12 = F14 = 0.5, F24 = 1, rest 0
    let f = catalog::instantiate_maxwell("C5.9".parse().unwrap(), &params_from(&[("c", 1.0)]), &[])
        .unwrap();
    let comp = f.components(pt([1.0, 1.0, 0.0, 1.0])).unwrap();
    assert_eq!(comp.components(), [0.5, 0.0, 0.5, 0.0, 1.0, 0.0]);

    // C6.7 with a1 = 1, a2 = 0, λ = 1 on the surface x2 + x4 = 1:
    // ln 1 = 0 so F12 = F14 = 1 and the rest vanish
    let f = catalog::instantiate_maxwell(
        "C6.7".parse().unwrap(),
        &params_from(&[("lambda", 1.0), ("a1", 1.0), ("a2", 0.0)]),
        &[],
    )
    .unwrap();
    let comp = f.components(pt([0.7, 0.6, -1.3, 0.4])).unwrap();
    let c = comp.components();
    assert!((c[0] - 1.0).abs() < 1e-14 && (c[2] - 1.0).abs() < 1e-14);
    assert!(c[1].abs() < 1e-14 && c[3].abs() < 1e-14 && c[4].abs() < 1e-14 && c[5].abs() < 1e-14);
}

#[test]
fn c319_slot_relations_are_enforced() {
    // independent random slots violate the antiderivative relations
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let bad: Vec<Slot> = (0..5)
        .map(|k| catalog::random_poly_slot(&mut rng, &format!("F{}", k + 1), 1))
        .collect();
    let err = catalog::instantiate_maxwell(
        "C3.19".parse().unwrap(),
        &params_from(&[("lambda", 1.0)]),
        &bad,
    );
    assert!(matches!(err, Err(Error::SlotRelationViolation(_))));

    // the entry's own draw satisfies them
    let entry = registry().get_str("C3.19").unwrap();
    let params = params_from(&[("lambda", 0.8)]);
    let good = draw_slots(entry, &params, &mut rng);
    assert!(catalog::instantiate_maxwell(entry.id, &params, &good).is_ok());
}

#[test]
fn error_paths() {
    assert!(matches!(
        catalog::instantiate_potential(
            "P9.1".parse().unwrap_or_else(|_| "P1.1a".parse().unwrap()),
            &Params::new(),
            &[]
        ),
        Ok(_) | Err(_)
    ));
    assert!("P7.1".parse::<catalog::ClassId>().is_err());

    // arity mismatch
    let bad = vec![Slot::zero("A4", 1)];
    assert!(matches!(
        catalog::instantiate_potential("P3.20".parse().unwrap(), &Params::new(), &bad),
        Err(Error::ArityMismatch { .. })
    ));

    // nonzero constraint
    let err = catalog::instantiate_potential(
        "P3.19".parse().unwrap(),
        &params_from(&[("lambda", 0.0)]),
        &[],
    );
    assert!(matches!(err, Err(Error::ParamConstraint(_))));

    // unknown parameter keys are rejected
    let err = catalog::generators_of(
        "P6.3".parse().unwrap(),
        &params_from(&[("a", 1.0), ("bogus", 2.0)]),
    );
    assert!(matches!(err, Err(Error::ParamConstraint(_))));
}

/// Least-squares projection residual of `target` onto the span of `gens`.
fn span_residual(gens: &[PoincareGenerator], target: &PoincareGenerator) -> f64 {
    let n = gens.len();
    let mut gram = nalgebra::DMatrix::<f64>::zeros(n, n);
    let mut rhs = nalgebra::DVector::<f64>::zeros(n);
    let t = target.coeffs();
    for i in 0..n {
        let gi = gens[i].coeffs();
        rhs[i] = gi.iter().zip(t.iter()).map(|(a, b)| a * b).sum();
        for j in 0..n {
            let gj = gens[j].coeffs();
            gram[(i, j)] = gi.iter().zip(gj.iter()).map(|(a, b)| a * b).sum();
        }
    }
    let sol = gram
        .svd(true, true)
        .solve(&rhs, 1e-14)
        .expect("least squares");
    let mut res = t;
    for (j, c) in sol.iter().enumerate() {
        let gj = gens[j].coeffs();
        for k in 0..10 {
            res[k] -= *c * gj[k];
        }
    }
    let norm = target.coeff_norm().max(1.0);
    res.iter().map(|v| v * v).sum::<f64>().sqrt() / norm
}

#[test]
fn generator_sets_close_under_bracket() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for entry in registry().entries() {
        let params = draw_params(entry, &mut rng, 0);
        let gens = (entry.generators)(&params);
        assert_eq!(gens.len(), entry.dim(), "{} generator count", entry.id);
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                let br = gens[i].bracket(&gens[j]);
                if br.coeff_norm() < 1e-14 {
                    continue;
                }
                let res = span_residual(&gens, &br);
                assert!(
                    res <= 1e-12,
                    "{}: [g{i}, g{j}] escapes the span (residual {res:.3e})",
                    entry.id
                );
            }
        }
    }
}

#[test]
fn naturality_of_exterior_derivative() {
    // For every catalog potential, L_ξ(dA) = 0 for every listed generator.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for entry in registry().entries() {
        if entry.empty || entry.id.kind != catalog::Kind::Potential {
            continue;
        }
        let params = draw_params(entry, &mut rng, 0);
        let slots = draw_slots(entry, &params, &mut rng);
        let a = catalog::instantiate_potential(entry.id, &params, &slots).unwrap();
        let f = TwoFormField::from_potential(&a);
        let gens = (entry.generators)(&params);
        let pts = sample_domain(entry, &params, 25, 77).unwrap();
        for &x in &pts {
            let jets = f.eval(x).unwrap();
            let scale = invpot_core::geometry::twoform_scale(&jets, x);
            for g in &gens {
                let l = lie_derivative_twoform(&f, g, x).unwrap();
                assert!(
                    l.max_abs() <= 1e-10 * scale,
                    "{}: L_({}) dA = {:.3e} at {x:?}",
                    entry.id,
                    g.label(),
                    l.max_abs()
                );
            }
        }
    }
}

#[test]
fn subset_relations_hold_operationally() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
    for rel in subset_relations() {
        let sub = registry().get_str(rel.sub).unwrap();
        let params = draw_params(sub, &mut rng, 0);
        let slots = draw_slots(sub, &params, &mut rng);
        let a = catalog::instantiate_potential(sub.id, &params, &slots).unwrap();
        let sup_gens = superclass_generators(&rel, &params).unwrap();
        let pts = sample_domain(sub, &params, 40, 13).unwrap();
        let res = invariance_residual(&a, &sup_gens, &pts).unwrap();
        assert!(
            res.max_scaled <= 1e-9,
            "{} ⊂ {}: residual {:.3e}",
            rel.sub,
            rel.sup,
            res.max_scaled
        );
    }
}

#[test]
fn lie_derivative_is_linear_in_generator_and_field() {
    let entry = registry().get_str("P1.1a").unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
    let slots = draw_slots(entry, &Params::new(), &mut rng);
    let a = catalog::instantiate_potential(entry.id, &Params::new(), &slots).unwrap();

    let g1 = PoincareGenerator::from_coeffs([0.3, -1.0, 0.2, 0.7, 1.1, -0.4, 0.9, 0.5, -0.8, 0.1]);
    let g2 = PoincareGenerator::from_coeffs([-0.6, 0.2, 1.3, -0.1, 0.4, 0.8, -0.5, 1.0, 0.3, -0.9]);
    let x = pt([0.4, -1.1, 0.6, 1.3]);

    let l1 = lie_derivative_covector(&a, &g1, x).unwrap();
    let l2 = lie_derivative_covector(&a, &g2, x).unwrap();
    let lsum = lie_derivative_covector(&a, &(g1 + g2), x).unwrap();
    for i in 0..4 {
        let want = l1.0[i] + l2.0[i];
        assert!((lsum.0[i] - want).abs() <= 1e-13 * (1.0 + want.abs()));
    }

    // linearity in the field: L_g(cA) = c L_g(A)
    let c = -1.7;
    let ac = a.scaled(c);
    let lc = lie_derivative_covector(&ac, &g1, x).unwrap();
    for i in 0..4 {
        assert!((lc.0[i] - c * l1.0[i]).abs() <= 1e-13 * (1.0 + l1.0[i].abs()));
    }
}

#[test]
fn detector_is_scale_invariant_and_deterministic() {
    let entry = registry().get_str("P3.20").unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
    let slots = draw_slots(entry, &Params::new(), &mut rng);
    let a = catalog::instantiate_potential(entry.id, &Params::new(), &slots).unwrap();
    let pts = sample_domain(entry, &Params::new(), 40, 19).unwrap();

    let d1 = detect_symmetry_algebra(&a, &pts, TOL_SV).unwrap();
    let d2 = detect_symmetry_algebra(&a.scaled(731.0), &pts, TOL_SV).unwrap();
    assert_eq!(d1.dim, d2.dim);
    // principal angles between the detected subspaces: every basis vector of
    // one projects into the other with tiny residual
    for b in &d1.basis {
        assert!(d2.projection_residual(b) <= 1e-8);
    }
    for b in &d2.basis {
        assert!(d1.projection_residual(b) <= 1e-8);
    }

    // determinism: identical inputs give identical bases
    let d3 = detect_symmetry_algebra(&a, &pts, TOL_SV).unwrap();
    assert_eq!(d1.singular_values, d3.singular_values);
    for (x, y) in d1.basis.iter().zip(d3.basis.iter()) {
        assert_eq!(x.coeffs(), y.coeffs());
    }

    // the rotation algebra sits inside the detected span
    assert!(d1.dim >= 3);
    for g in [
        PoincareGenerator::e12(),
        PoincareGenerator::e13(),
        PoincareGenerator::e23(),
    ] {
        assert!(d1.contains(&g, 1e-6));
    }
}

#[test]
fn branch_classes_pass_on_both_branches() {
    // classes with a structurally different λ = 0 branch
    let branchy = [
        "P3.2", "P3.6", "P4.3", "P4.4", "P4.6", "P4.8", "P4.9", "P5.5", "P5.6", "P6.5",
    ];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(53);
    for name in branchy {
        let entry = registry().get_str(name).unwrap();
        for draw in [0usize, 1] {
            // draw 1 selects the zero branch
            let params = draw_params(entry, &mut rng, draw);
            let slots = draw_slots(entry, &params, &mut rng);
            let a = catalog::instantiate_potential(entry.id, &params, &slots).unwrap();
            let gens = (entry.generators)(&params);
            let pts = sample_domain(entry, &params, 50, 61).unwrap();
            let res = invariance_residual(&a, &gens, &pts).unwrap();
            assert!(
                res.max_scaled <= 1e-9,
                "{name} draw {draw}: residual {:.3e}",
                res.max_scaled
            );
        }
    }
}

#[test]
fn zero_potential_has_zero_lie_derivative_for_any_generator() {
    let zero = invpot_core::geometry::CovectorField::zero();
    let pts = sample_pred(
        &(std::sync::Arc::new(|_| true) as invpot_core::geometry::DomainPred),
        10,
        3,
    )
    .unwrap();
    for g in PoincareGenerator::basis() {
        for &x in &pts {
            assert_eq!(lie_derivative_covector(&zero, &g, x).unwrap().0, [0.0; 4]);
        }
    }
}

#[test]
fn worked_example_preset_matches_hand_built_field() {
    // P3.19 preset: A1 = y4 sin(ln y1/λ), A3 = y4 cos(ln y1/λ),
    // A2 = A4 = y2·A1 − y3·A3 in adapted coordinates.
    let entry = registry().get_str("P3.19").unwrap();
    let params = params_from(&[("lambda", 1.0)]);
    let preset = entry.preset_example.as_ref().unwrap()(&params);
    let a = catalog::instantiate_potential(entry.id, &params, &preset).unwrap();

    let x = pt([0.8, 1.1, -0.5, 0.7]);
    let s: f64 = 1.1 + 0.7;
    let t2 = -0.8 / s;
    let t3 = -0.5 / s;
    let t4: f64 = 0.8 * 0.8 + 1.1 * 1.1 + 0.5 * 0.5 - 0.7 * 0.7;
    let w = s.ln();
    let a1 = t4 * w.sin();
    let a3 = t4 * w.cos();
    let a2 = t2 * a1 - t3 * a3;
    let got = a.components(x).unwrap().0;
    assert!((got[0] - a1).abs() < 1e-12);
    assert!((got[1] - a2).abs() < 1e-12);
    assert!((got[2] - a3).abs() < 1e-12);
    assert!((got[3] - a2).abs() < 1e-12);

    // dA at a fixed probe point equals the closed-form tensor
    let probe = pt([1.0, 1.0, 0.0, 1.0]);
    let f = invpot_core::geometry::exterior_derivative(&a, probe).unwrap();
    let want = invpot_core::verify::example_c319_closed_form(1.0, |t| t, |_| 1.0, probe);
    for (g, w) in f.components().iter().zip(want.components()) {
        assert!(
            (g - w).abs() <= 1e-10 * (1.0 + g.abs().max(w.abs())),
            "{g} vs {w}"
        );
    }

    let _ = Jet2::constant(0.0);
}

#[test]
fn degenerate_example_profile_gains_symmetry() {
    // The worked example with a constant profile (zero derivative) loses its
    // genericity: the detected dimension of dA strictly exceeds 3.
    let entry = registry().get_str("P3.19").unwrap();
    let params = params_from(&[("lambda", 1.0)]);
    let slots = vec![
        Slot::zero("C1", 1),
        Slot::zero("C2", 1),
        Slot::zero("C3", 1),
        Slot::from_fn("C4", 1, |_| Jet2::constant(1.0)),
    ];
    let a = catalog::instantiate_potential(entry.id, &params, &slots).unwrap();
    let f = TwoFormField::from_potential(&a);
    let pts = sample_domain(entry, &params, 40, 29).unwrap();
    let det = invpot_core::verify::detect_symmetry_twoform(&f, &pts, TOL_SV).unwrap();
    assert!(det.dim > 3, "expected extra symmetry, got {}", det.dim);
}

#[test]
fn detection_requires_enough_points() {
    let a = invpot_core::geometry::CovectorField::zero();
    let few = vec![pt([0.0; 4]); 4];
    assert!(matches!(
        detect_symmetry_algebra(&a, &few, TOL_SV),
        Err(Error::InsufficientPoints { .. })
    ));
}
