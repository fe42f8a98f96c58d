//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (run with `cargo test --test acceptance -- --nocapture`
//! to see them).

use invpot_core::catalog::{self, draw_params, draw_slots, registry, Params};
use invpot_core::charts::Chart;
use invpot_core::geometry::{CovectorField, PoincareGenerator, SpacetimePoint};
use invpot_core::jet::Jet2;
use invpot_core::verify::{
    self, appendix_suite, certify_emptiness, detect_symmetry_algebra, sample_domain, sample_pred,
    verify_all, TOL, TOL_SV,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 42;

fn report(n: usize, name: &str, pass: bool, detail: &str) {
    println!(
        "ACCEPTANCE {n} ({name}): {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} ({name}) failed: {detail}");
}

/// 1. Central contract: every non-empty class passes the invariance check
///    over 3 parameter draws, 100 points each, residual ≤ 1e-9.
#[test]
fn criterion_1_central_contract() {
    let reports: Vec<_> = verify_all(SEED, 100, TOL)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .expect("all classes verifiable");
    let mut worst = 0.0f64;
    let mut worst_class = String::new();
    let mut checked = 0;
    for r in &reports {
        if r.skipped_empty {
            continue;
        }
        checked += 1;
        if r.max_residual > worst {
            worst = r.max_residual;
            worst_class = r.class.clone();
        }
    }
    let pass = reports.iter().all(|r| r.pass) && checked == 99;
    report(
        1,
        "central contract",
        pass,
        &format!("{checked} classes, worst residual {worst:.3e} ({worst_class})"),
    );
}

/// 2. Closedness of dA for the same instances.
#[test]
fn criterion_2_closedness() {
    let reports: Vec<_> = verify_all(SEED, 100, TOL)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .unwrap();
    let worst = reports
        .iter()
        .map(|r| r.closedness_max)
        .fold(0.0f64, f64::max);
    report(
        2,
        "closedness",
        worst <= TOL,
        &format!("worst scaled residual {worst:.3e}"),
    );
}

/// One member of the random composition family, written once over the
/// scalar abstraction so the f64 and jet evaluations share the same path.
/// Amplitude is kept small so the second-difference roundoff floor of the
/// oracle (≈ 4ε·|f|/h²) stays below the 1e-6 relative target.
fn composition<S: invpot_core::scalar::Scalar>(
    c: &[f64; 16],
    big: f64,
    axis: usize,
    x: [S; 4],
) -> S {
    let mut p = x[axis] * S::cst(big);
    let mut q = S::cst(0.3);
    for i in 0..4 {
        p = p + x[i] * S::cst(c[i]) + x[i] * x[i] * S::cst(c[4 + i]);
        q = q + x[i] * S::cst(c[8 + i]);
    }
    p = p + x[0] * x[1] * S::cst(c[12]) + x[2] * x[3] * S::cst(c[13]);
    let trig = p.sin() + q.cos() * S::cst(0.5);
    let expy = ((q * S::cst(0.5)).sin() * S::cst(0.5)).exp() * S::cst(0.4);
    let root = (q * q + S::cst(2.0)).sqrt() * S::cst(0.3);
    let angle = p.sin().atan2(q.cos() + S::cst(2.0)) * S::cst(c[14]);
    let logy = (q * q * S::cst(0.2) + S::cst(1.5)).ln() * S::cst(c[15]);
    (trig + expy + root + angle + logy) * S::cst(0.02)
}

/// 3. AD oracle: jets agree with central differences (h = 1e-5) to relative
///    1e-6 on 100 random compositions.
#[test]
fn criterion_3_ad_oracle() {
    let h = 1e-5;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst_g = 0.0f64;
    let mut worst_h = 0.0f64;
    for _ in 0..100 {
        let c: [f64; 16] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let big = rng.gen_range(3.0..6.0);
        let axis = rng.gen_range(0..4);
        let x: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let jet = composition(&c, big, axis, Jet2::seed_coordinates(x));

        let at = |dx: [f64; 4]| composition(&c, big, axis, std::array::from_fn(|i| x[i] + dx[i]));
        let f64_fn = |y: [f64; 4]| composition(&c, big, axis, y);
        let mut g_fd = [0.0f64; 4];
        let mut h_fd = [[0.0f64; 4]; 4];
        for k in 0..4 {
            let mut dp = [0.0; 4];
            dp[k] = h;
            let mut dm = [0.0; 4];
            dm[k] = -h;
            g_fd[k] = (at(dp) - at(dm)) / (2.0 * h);
            h_fd[k][k] = (at(dp) - 2.0 * f64_fn(x) + at(dm)) / (h * h);
        }
        for a in 0..4 {
            for b in (a + 1)..4 {
                let mut d = [0.0; 4];
                d[a] = h;
                d[b] = h;
                let pp = at(d);
                d[b] = -h;
                let pm = at(d);
                d[a] = -h;
                let mm = at(d);
                d[b] = h;
                let mp = at(d);
                let v = (pp - pm - mp + mm) / (4.0 * h * h);
                h_fd[a][b] = v;
                h_fd[b][a] = v;
            }
        }

        let gmax = jet
            .g
            .iter()
            .chain(g_fd.iter())
            .fold(0.0f64, |m, v| m.max(v.abs()));
        for k in 0..4 {
            worst_g = worst_g.max((jet.g[k] - g_fd[k]).abs() / (1.0 + gmax));
        }
        let hmax = jet
            .h
            .iter()
            .flatten()
            .chain(h_fd.iter().flatten())
            .fold(0.0f64, |m, v| m.max(v.abs()));
        for a in 0..4 {
            for b in 0..4 {
                worst_h = worst_h.max((jet.h[a][b] - h_fd[a][b]).abs() / (1.0 + hmax));
            }
        }
    }
    report(
        3,
        "AD oracle",
        worst_g <= 1e-6 && worst_h <= 1e-6,
        &format!("gradient dev {worst_g:.3e}, Hessian dev {worst_h:.3e} (relative)"),
    );
}

/// 4. Algebra health: exact Jacobi identity over all 120 basis triples and
///    bracket closure of every generator set (projection residual ≤ 1e-12).
#[test]
fn criterion_4_algebra_health() {
    let basis = PoincareGenerator::basis();
    let mut jacobi_exact = true;
    for i in 0..10 {
        for j in (i + 1)..10 {
            for k in (j + 1)..10 {
                let s = basis[i].bracket(&basis[j].bracket(&basis[k]))
                    + basis[j].bracket(&basis[k].bracket(&basis[i]))
                    + basis[k].bracket(&basis[i].bracket(&basis[j]));
                if s.coeffs() != [0.0; 10] {
                    jacobi_exact = false;
                }
            }
        }
    }

    let mut worst = 0.0f64;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for entry in registry().entries() {
        let params = draw_params(entry, &mut rng, 0);
        let gens = (entry.generators)(&params);
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                let br = gens[i].bracket(&gens[j]);
                if br.coeff_norm() < 1e-14 {
                    continue;
                }
                worst = worst.max(span_residual(&gens, &br));
            }
        }
    }
    report(
        4,
        "algebra health",
        jacobi_exact && worst <= 1e-12,
        &format!("Jacobi exact: {jacobi_exact}, worst closure residual {worst:.3e}"),
    );
}

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
    let sol = gram.svd(true, true).solve(&rhs, 1e-14).unwrap();
    let mut res = t;
    for (j, cf) in sol.iter().enumerate() {
        let gj = gens[j].coeffs();
        for k in 0..10 {
            res[k] -= *cf * gj[k];
        }
    }
    res.iter().map(|v| v * v).sum::<f64>().sqrt() / target.coeff_norm().max(1.0)
}

/// 5. Chart roundtrips at 1e-10 over 1000 points per chart, plus the
///    rectification property at 1e-9.
#[test]
fn criterion_5_chart_roundtrips() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst_rt = 0.0f64;
    let mut worst_rect = 0.0f64;

    for chart in Chart::sample_list() {
        let galilean = |rng: &mut ChaCha8Rng| loop {
            let x: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
            if chart.domain(x) {
                return x;
            }
        };
        for _ in 0..1000 {
            let x = galilean(&mut rng);
            let back = chart.forward(chart.inverse(x));
            for i in 0..4 {
                worst_rt = worst_rt.max((back[i] - x[i]).abs() / (1.0 + x[i].abs()));
            }
        }
        // adapted-side roundtrip through the forward image
        for _ in 0..1000 {
            let x = galilean(&mut rng);
            let u = chart.inverse(x);
            if !chart.adapted_domain(u) {
                continue;
            }
            let back = chart.inverse(chart.forward(u));
            for i in 0..4 {
                worst_rt = worst_rt.max((back[i] - u[i]).abs() / (1.0 + u[i].abs()));
            }
        }
        // rectification: the designated generator acts as factor·∂/∂u_k
        for rect in chart.rectifications() {
            for _ in 0..100 {
                let x = galilean(&mut rng);
                let c: [f64; 8] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
                let f = |u: [Jet2; 4]| {
                    let mut acc = Jet2::constant(0.0);
                    let mut k = 0;
                    for i in 0..4 {
                        if rect.deps[i] {
                            acc = acc + u[i] * c[k] + u[i] * u[i] * c[k + 1] * 0.5;
                            k += 2;
                        }
                    }
                    acc
                };
                let fx = f(chart.inverse(Jet2::seed_coordinates(x)));
                let xi = rect.generator.value(SpacetimePoint::new(x));
                let lhs: f64 = (0..4).map(|j| xi[j] * fx.g[j]).sum();
                let u = chart.inverse(x);
                let uj: [Jet2; 4] = std::array::from_fn(|k| Jet2::coordinate(k, u[k]));
                let rhs = rect.factor * f(uj).g[rect.coord];
                worst_rect = worst_rect.max((lhs - rhs).abs() / (1.0 + lhs.abs().max(rhs.abs())));
            }
        }
    }
    report(
        5,
        "chart roundtrips",
        worst_rt <= 1e-10 && worst_rect <= 1e-9,
        &format!("roundtrip dev {worst_rt:.3e}, rectification dev {worst_rect:.3e}"),
    );
}

/// 6. Emptiness certificates for the three empty classes, 100 trials each.
#[test]
fn criterion_6_emptiness() {
    let mut all = true;
    let mut detail = String::new();
    for name in ["P5.2", "P6.1", "P6.2"] {
        let ok = certify_emptiness(name.parse().unwrap(), 100, SEED).unwrap();
        all &= ok;
        detail.push_str(&format!(
            "{name}: {} ",
            if ok { "certified" } else { "FAILED" }
        ));
    }
    report(6, "emptiness certificates", all, detail.trim());
}

/// 7. Appendix cross-checks: the two worked examples and the seven Maxwell
///    classes (closedness, invariance, exact detected dimensions).
#[test]
fn criterion_7_appendix() {
    let rows = appendix_suite(SEED).unwrap();
    let all = rows.iter().all(|r| r.pass);
    let detail: Vec<String> = rows
        .iter()
        .map(|r| format!("{}:{}", r.name, if r.pass { "ok" } else { "FAIL" }))
        .collect();
    assert_eq!(rows.len(), 9);
    report(7, "appendix cross-checks", all, &detail.join(" "));
}

/// 8. Detector sanity: zero field, constant time covector, and a generic
///    rotation-invariant instance.
#[test]
fn criterion_8_detector_sanity() {
    let pts = sample_pred(
        &(std::sync::Arc::new(|_| true) as invpot_core::geometry::DomainPred),
        40,
        SEED,
    )
    .unwrap();

    let zero = CovectorField::zero();
    let d0 = detect_symmetry_algebra(&zero, &pts, TOL_SV).unwrap();

    let c = CovectorField::constant([0.0, 0.0, 0.0, 1.0]);
    let d7 = detect_symmetry_algebra(&c, &pts, TOL_SV).unwrap();
    let d7_contains = [
        PoincareGenerator::e1(),
        PoincareGenerator::e2(),
        PoincareGenerator::e3(),
        PoincareGenerator::e4(),
        PoincareGenerator::e12(),
        PoincareGenerator::e13(),
        PoincareGenerator::e23(),
    ]
    .iter()
    .all(|g| d7.contains(g, 1e-6));

    let entry = registry().get_str("P3.20").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let slots = draw_slots(entry, &Params::new(), &mut rng);
    let a = catalog::instantiate_potential(entry.id, &Params::new(), &slots).unwrap();
    let rot_pts = sample_domain(entry, &Params::new(), 40, SEED).unwrap();
    let d3 = detect_symmetry_algebra(&a, &rot_pts, TOL_SV).unwrap();
    let d3_contains = [
        PoincareGenerator::e12(),
        PoincareGenerator::e13(),
        PoincareGenerator::e23(),
    ]
    .iter()
    .all(|g| d3.contains(g, 1e-6));

    let pass = d0.dim == 10 && d7.dim == 7 && d7_contains && d3.dim >= 3 && d3_contains;
    report(
        8,
        "detector sanity",
        pass,
        &format!(
            "zero: {}, constant: {}, rotations: {}",
            d0.dim, d7.dim, d3.dim
        ),
    );
}

/// 9. Determinism: two full verification runs with the same seed produce
///    byte-identical serialized reports.
#[test]
fn criterion_9_determinism() {
    let run = || {
        let reports: Vec<_> = verify_all(SEED, 100, TOL)
            .into_iter()
            .collect::<Result<Vec<_>, _>>()
            .unwrap();
        reports
            .iter()
            .map(|r| serde_json::to_string(r).unwrap())
            .collect::<Vec<_>>()
            .join("\n")
    };
    let a = run();
    let b = run();
    report(
        9,
        "determinism",
        a == b,
        &format!("{} bytes, identical: {}", a.len(), a == b),
    );
}

#[test]
fn empty_classes_are_skipped() {
    let reports: Vec<_> = verify_all(SEED, 20, TOL)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .unwrap();
    let skipped: Vec<&str> = reports
        .iter()
        .filter(|r| r.skipped_empty)
        .map(|r| r.class.as_str())
        .collect();
    assert_eq!(skipped, ["P5.2", "P6.1", "P6.2"]);
    assert!(reports.iter().filter(|r| r.skipped_empty).all(|r| r.pass));
}

/// Detection finds at least the class's own algebra in its span.
#[test]
fn detector_covers_every_class_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xABCD);
    for entry in registry().entries() {
        if entry.empty {
            continue;
        }
        let params = draw_params(entry, &mut rng, 0);
        let slots = draw_slots(entry, &params, &mut rng);
        let pts = sample_domain(entry, &params, verify::DETECT_POINTS, 17).unwrap();
        let gens = (entry.generators)(&params);
        let det = match &entry.build {
            catalog::Build::Potential(_) => {
                let a = catalog::instantiate_potential(entry.id, &params, &slots).unwrap();
                detect_symmetry_algebra(&a, &pts, TOL_SV).unwrap()
            }
            catalog::Build::Maxwell(_) => {
                let f = catalog::instantiate_maxwell(entry.id, &params, &slots).unwrap();
                verify::detect_symmetry_twoform(&f, &pts, TOL_SV).unwrap()
            }
            catalog::Build::Empty => unreachable!(),
        };
        assert!(
            det.dim >= entry.dim(),
            "{}: detected {} < {}",
            entry.id,
            det.dim,
            entry.dim()
        );
        for g in &gens {
            let res = det.projection_residual(g);
            assert!(
                res <= 1e-6,
                "{}: generator {} not in detected span (residual {res:.3e})",
                entry.id,
                g.label()
            );
        }
    }
}
