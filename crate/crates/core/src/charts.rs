//! The coordinate substitutions used by the class constructors, each as an
//! invertible chart between adapted coordinates and Galilean coordinates.
//!
//! Forward maps send an adapted 4-tuple to a Galilean point; inverse maps go
//! the other way. Both run on any [`Scalar`], so the same code serves the
//! f64 roundtrip tests and the jet-valued evaluations inside constructors.
//! Domains exclude coordinate singularities and `atan2` branch cuts by a
//! fixed margin so sampled sets never straddle a discontinuity.

use crate::geometry::{PoincareGenerator, SpacetimePoint};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Margin that keeps sample points away from denominators and branch cuts.
pub const DOMAIN_MARGIN: f64 = 1e-3;
/// Margin on angular adapted coordinates, away from ±π.
pub const ANGLE_MARGIN: f64 = 1e-2;

/// One rectification claim: on this chart, `generator` acts as
/// `factor · ∂/∂(adapted coordinate `coord`)` for test functions that depend
/// only on the adapted coordinates flagged in `deps`.
pub struct Rectification {
    pub generator: PoincareGenerator,
    pub coord: usize,
    pub factor: f64,
    pub deps: [bool; 4],
}

impl Rectification {
    fn full(generator: PoincareGenerator, coord: usize, factor: f64) -> Self {
        Rectification {
            generator,
            coord,
            factor,
            deps: [true; 4],
        }
    }
}

/// Every chart in the registry. Parameters are baked into the variant.
#[derive(Copy, Clone, Debug, PartialEq)]
pub enum Chart {
    /// v = (x¹, x²+x⁴, x³, x²−x⁴); rectifies the isotropic translation e₂+e₄.
    Isotropic,
    /// x¹ = r sin φ, x² = λφ + x̃², x³ = r cos φ, x⁴ = μφ + x̃⁴.
    Elliptic { lambda: f64, mu: f64 },
    /// Elliptic with μ = 0 (space-like helix axis).
    EllipticSpace { lambda: f64 },
    /// Elliptic with λ = 0 (time-like helix axis).
    EllipticTime { mu: f64 },
    /// x¹ = λφ + x̃¹, x² = r ch φ, x³ = x̃³, x⁴ = r sh φ.
    Hyperbolic1 { lambda: f64 },
    /// x¹ = x̃¹, x² = r ch φ, x³ = λφ + x̃³, x⁴ = r sh φ.
    Hyperbolic3 { lambda: f64 },
    /// x̃ = (x²+x⁴, −x¹/(x²+x⁴), x³, ½(x¹)² + x²(x²+x⁴)).
    ParabolicA,
    /// Parabolic with x̃³ = x³ + μx¹/(x²+x⁴).
    ParabolicB { mu: f64 },
    /// x̃ = (2λx¹+(x²+x⁴)², (x²+x⁴)/λ, x³, λx⁴+x¹(x²+x⁴)+(x²+x⁴)³/3λ).
    ParabolicC { lambda: f64 },
    /// x¹ = r cos(θ−φ), x² = ρ ch λφ, x³ = r sin(θ−φ), x⁴ = ρ sh λφ.
    BiRotation { lambda: f64 },
    /// BiRotation with λ = 1.
    BiRotationUnit,
    /// x̃ = (x²+x⁴, −x¹/(x²+x⁴), x³/(x²+x⁴), (x¹)²+(x²)²+(x³)²−(x⁴)²).
    NullPair,
    /// On top of ParabolicB: u = x̃¹x̃³/Q, v = ½(x̃¹x̃³)² + x̃⁴Q, Q = (x̃¹)²−μ².
    NullPairAux { mu: f64 },
    /// On top of ParabolicA: u = x̃³ − λ ln x̃¹, v = x̃⁴ − ½(x̃¹)².
    ParabolicBoost { lambda: f64 },
    /// On top of ParabolicA: adapted (ln x̃¹, x̃², x̃³ − μ ln x̃¹, x̃⁴).
    ParabolicScale { mu: f64 },
    /// x² = ρ ch φ, x⁴ = ρ sh φ; x¹, x³ untouched.
    PlaneBoost,
    /// x¹ = r sin φ, x³ = r cos φ; x², x⁴ untouched.
    PlanePolar,
    /// u = x²+x⁴, φ = (μx¹+(u−λ)x³)/D, ψ = (νx³−(u+λ)x¹)/D, D = u²−λ²+μν;
    /// completed by w = x²−x⁴.
    HelixPair { lambda: f64, mu: f64, nu: f64 },
    /// HelixPair with μ = ν = λ and the paper-pair shifted out: D = u²+λ².
    HelixPairSym { lambda: f64 },
}

fn two<S: Scalar>() -> S {
    S::cst(2.0)
}

/// r = √(a²−b²) and the boost angle artanh(b/a), valid for a > |b|.
fn boost_polar<S: Scalar>(a: S, b: S) -> (S, S) {
    let r = (a * a - b * b).sqrt();
    let phi = S::artanh_ratio(a + b, a - b);
    (r, phi)
}

impl Chart {
    pub fn name(&self) -> String {
        match self {
            Chart::Isotropic => "isotropic".into(),
            Chart::Elliptic { .. } => "elliptic".into(),
            Chart::EllipticSpace { .. } => "elliptic-space".into(),
            Chart::EllipticTime { .. } => "elliptic-time".into(),
            Chart::Hyperbolic1 { .. } => "hyperbolic-x1".into(),
            Chart::Hyperbolic3 { .. } => "hyperbolic-x3".into(),
            Chart::ParabolicA => "parabolic-a".into(),
            Chart::ParabolicB { .. } => "parabolic-b".into(),
            Chart::ParabolicC { .. } => "parabolic-c".into(),
            Chart::BiRotation { .. } => "bi-rotation".into(),
            Chart::BiRotationUnit => "bi-rotation-unit".into(),
            Chart::NullPair => "null-pair".into(),
            Chart::NullPairAux { .. } => "null-pair-aux".into(),
            Chart::ParabolicBoost { .. } => "parabolic-boost".into(),
            Chart::ParabolicScale { .. } => "parabolic-scale".into(),
            Chart::PlaneBoost => "plane-boost".into(),
            Chart::PlanePolar => "plane-polar".into(),
            Chart::HelixPair { .. } => "helix-pair".into(),
            Chart::HelixPairSym { .. } => "helix-pair-sym".into(),
        }
    }

    /// Adapted tuple → Galilean coordinates.
    pub fn forward<S: Scalar>(&self, u: [S; 4]) -> [S; 4] {
        match *self {
            Chart::Isotropic => {
                let [v1, v2, v3, v4] = u;
                [v1, (v2 + v4) / two(), v3, (v2 - v4) / two()]
            }
            Chart::Elliptic { lambda, mu } => {
                let [r, t2, phi, t4] = u;
                [
                    r * phi.sin(),
                    phi * S::cst(lambda) + t2,
                    r * phi.cos(),
                    phi * S::cst(mu) + t4,
                ]
            }
            Chart::EllipticSpace { lambda } => Chart::Elliptic { lambda, mu: 0.0 }.forward(u),
            Chart::EllipticTime { mu } => Chart::Elliptic { lambda: 0.0, mu }.forward(u),
            Chart::Hyperbolic1 { lambda } => {
                let [t1, r, t3, phi] = u;
                [
                    phi * S::cst(lambda) + t1,
                    r * phi.cosh(),
                    t3,
                    r * phi.sinh(),
                ]
            }
            Chart::Hyperbolic3 { lambda } => {
                let [t1, r, t3, phi] = u;
                [
                    t1,
                    r * phi.cosh(),
                    phi * S::cst(lambda) + t3,
                    r * phi.sinh(),
                ]
            }
            Chart::ParabolicA => {
                let [t1, t2, t3, t4] = u;
                let x1 = -(t2 * t1);
                let x2 = (t4 - x1 * x1 / two()) / t1;
                [x1, x2, t3, t1 - x2]
            }
            Chart::ParabolicB { mu } => {
                let [t1, t2, t3, t4] = u;
                let x1 = -(t2 * t1);
                let x2 = (t4 - x1 * x1 / two()) / t1;
                [x1, x2, t3 + t2 * S::cst(mu), t1 - x2]
            }
            Chart::ParabolicC { lambda } => {
                let [t1, t2, t3, t4] = u;
                let s = t2 * S::cst(lambda);
                let x1 = (t1 - s * s) / S::cst(2.0 * lambda);
                let x4 = (t4 - x1 * s - s * s * s / S::cst(3.0 * lambda)) / S::cst(lambda);
                [x1, s - x4, t3, x4]
            }
            Chart::BiRotation { lambda } => {
                let [r, rho, theta, phi] = u;
                let ang = theta - phi;
                let lphi = phi * S::cst(lambda);
                [
                    r * ang.cos(),
                    rho * lphi.cosh(),
                    r * ang.sin(),
                    rho * lphi.sinh(),
                ]
            }
            Chart::BiRotationUnit => Chart::BiRotation { lambda: 1.0 }.forward(u),
            Chart::NullPair => {
                let [t1, t2, t3, t4] = u;
                let x1 = -(t2 * t1);
                let x3 = t3 * t1;
                let d = (t4 - t1 * t1 * (t2 * t2 + t3 * t3)) / t1;
                [x1, (t1 + d) / two(), x3, (t1 - d) / two()]
            }
            Chart::NullPairAux { mu } => {
                let [t1, t2, uu, vv] = u;
                let q = t1 * t1 - S::cst(mu * mu);
                let t3 = uu * q / t1;
                let t4 = (vv - (t1 * t3) * (t1 * t3) / two()) / q;
                Chart::ParabolicB { mu }.forward([t1, t2, t3, t4])
            }
            Chart::ParabolicBoost { lambda } => {
                let [t1, t2, uu, vv] = u;
                let t3 = uu + t1.ln() * S::cst(lambda);
                let t4 = vv + t1 * t1 / two();
                Chart::ParabolicA.forward([t1, t2, t3, t4])
            }
            Chart::ParabolicScale { mu } => {
                let [v, t2, uu, t4] = u;
                let t1 = v.exp();
                let t3 = uu + v * S::cst(mu);
                Chart::ParabolicA.forward([t1, t2, t3, t4])
            }
            Chart::PlaneBoost => {
                let [y1, rho, y3, phi] = u;
                [y1, rho * phi.cosh(), y3, rho * phi.sinh()]
            }
            Chart::PlanePolar => {
                let [r, y2, phi, y4] = u;
                [r * phi.sin(), y2, r * phi.cos(), y4]
            }
            Chart::HelixPair { lambda, mu, nu } => {
                let [uu, phi, psi, w] = u;
                let x1 = phi * S::cst(nu) - (uu - S::cst(lambda)) * psi;
                let x3 = (uu + S::cst(lambda)) * phi + psi * S::cst(mu);
                [x1, (uu + w) / two(), x3, (uu - w) / two()]
            }
            Chart::HelixPairSym { lambda } => {
                let [uu, phi, psi, w] = u;
                let x1 = phi * S::cst(lambda) - uu * psi;
                let x3 = uu * phi + psi * S::cst(lambda);
                [x1, (uu + w) / two(), x3, (uu - w) / two()]
            }
        }
    }

    /// Galilean coordinates → adapted tuple.
    pub fn inverse<S: Scalar>(&self, x: [S; 4]) -> [S; 4] {
        let [x1, x2, x3, x4] = x;
        match *self {
            Chart::Isotropic => [x1, x2 + x4, x3, x2 - x4],
            Chart::Elliptic { lambda, mu } => {
                let r = (x1 * x1 + x3 * x3).sqrt();
                let phi = x1.atan2(x3);
                [r, x2 - phi * S::cst(lambda), phi, x4 - phi * S::cst(mu)]
            }
            Chart::EllipticSpace { lambda } => Chart::Elliptic { lambda, mu: 0.0 }.inverse(x),
            Chart::EllipticTime { mu } => Chart::Elliptic { lambda: 0.0, mu }.inverse(x),
            Chart::Hyperbolic1 { lambda } => {
                let (r, phi) = boost_polar(x2, x4);
                [x1 - phi * S::cst(lambda), r, x3, phi]
            }
            Chart::Hyperbolic3 { lambda } => {
                let (r, phi) = boost_polar(x2, x4);
                [x1, r, x3 - phi * S::cst(lambda), phi]
            }
            Chart::ParabolicA => {
                let s = x2 + x4;
                [s, -(x1 / s), x3, x1 * x1 / two() + x2 * s]
            }
            Chart::ParabolicB { mu } => {
                let s = x2 + x4;
                [
                    s,
                    -(x1 / s),
                    x3 + x1 / s * S::cst(mu),
                    x1 * x1 / two() + x2 * s,
                ]
            }
            Chart::ParabolicC { lambda } => {
                let s = x2 + x4;
                [
                    x1 * S::cst(2.0 * lambda) + s * s,
                    s / S::cst(lambda),
                    x3,
                    x4 * S::cst(lambda) + x1 * s + s * s * s / S::cst(3.0 * lambda),
                ]
            }
            Chart::BiRotation { lambda } => {
                let (rho, lphi) = boost_polar(x2, x4);
                let phi = lphi / S::cst(lambda);
                let r = (x1 * x1 + x3 * x3).sqrt();
                let theta = phi + x3.atan2(x1);
                [r, rho, theta, phi]
            }
            Chart::BiRotationUnit => Chart::BiRotation { lambda: 1.0 }.inverse(x),
            Chart::NullPair => {
                let s = x2 + x4;
                [s, -(x1 / s), x3 / s, x1 * x1 + x2 * x2 + x3 * x3 - x4 * x4]
            }
            Chart::NullPairAux { mu } => {
                let [t1, t2, t3, t4] = Chart::ParabolicB { mu }.inverse(x);
                let q = t1 * t1 - S::cst(mu * mu);
                [t1, t2, t1 * t3 / q, (t1 * t3) * (t1 * t3) / two() + t4 * q]
            }
            Chart::ParabolicBoost { lambda } => {
                let [t1, t2, t3, t4] = Chart::ParabolicA.inverse(x);
                [t1, t2, t3 - t1.ln() * S::cst(lambda), t4 - t1 * t1 / two()]
            }
            Chart::ParabolicScale { mu } => {
                let [t1, t2, t3, t4] = Chart::ParabolicA.inverse(x);
                let v = t1.ln();
                [v, t2, t3 - v * S::cst(mu), t4]
            }
            Chart::PlaneBoost => {
                let (rho, phi) = boost_polar(x2, x4);
                [x1, rho, x3, phi]
            }
            Chart::PlanePolar => {
                let r = (x1 * x1 + x3 * x3).sqrt();
                [r, x2, x1.atan2(x3), x4]
            }
            Chart::HelixPair { lambda, mu, nu } => {
                let uu = x2 + x4;
                let d = uu * uu - S::cst(lambda * lambda) + S::cst(mu * nu);
                let phi = (x1 * S::cst(mu) + (uu - S::cst(lambda)) * x3) / d;
                let psi = (x3 * S::cst(nu) - (uu + S::cst(lambda)) * x1) / d;
                [uu, phi, psi, x2 - x4]
            }
            Chart::HelixPairSym { lambda } => {
                let uu = x2 + x4;
                let d = uu * uu + S::cst(lambda * lambda);
                let phi = (x1 * S::cst(lambda) + uu * x3) / d;
                let psi = (x3 * S::cst(lambda) - uu * x1) / d;
                [uu, phi, psi, x2 - x4]
            }
        }
    }

    /// Galilean-side domain of validity (with margins).
    pub fn domain(&self, x: [f64; 4]) -> bool {
        let m = DOMAIN_MARGIN;
        let [x1, x2, x3, x4] = x;
        match *self {
            Chart::Isotropic => true,
            Chart::Elliptic { .. } | Chart::EllipticSpace { .. } | Chart::EllipticTime { .. } => {
                let r = (x1 * x1 + x3 * x3).sqrt();
                // keep away from the atan2(x¹, x³) cut along x³ < 0, x¹ = 0
                r >= m && !(x3 < 0.0 && x1.abs() < m)
            }
            Chart::Hyperbolic1 { .. } | Chart::Hyperbolic3 { .. } | Chart::PlaneBoost => {
                x2 - x4.abs() >= m
            }
            Chart::ParabolicA
            | Chart::ParabolicB { .. }
            | Chart::NullPair
            | Chart::ParabolicBoost { .. }
            | Chart::ParabolicScale { .. } => x2 + x4 >= m,
            Chart::ParabolicC { .. } => true,
            Chart::BiRotation { .. } | Chart::BiRotationUnit => {
                let r = (x1 * x1 + x3 * x3).sqrt();
                // atan2(x³, x¹) cut sits along x¹ < 0, x³ = 0
                x2 - x4.abs() >= m && r >= m && !(x1 < 0.0 && x3.abs() < m)
            }
            Chart::NullPairAux { mu } => {
                let s = x2 + x4;
                s >= m && (s * s - mu * mu).abs() >= m
            }
            Chart::PlanePolar => {
                let r = (x1 * x1 + x3 * x3).sqrt();
                r >= m && !(x3 < 0.0 && x1.abs() < m)
            }
            Chart::HelixPair { lambda, mu, nu } => {
                let u = x2 + x4;
                (u * u - lambda * lambda + mu * nu).abs() >= m
            }
            Chart::HelixPairSym { lambda } => {
                let u = x2 + x4;
                (u * u + lambda * lambda).abs() >= m
            }
        }
    }

    /// Adapted-side domain of validity (with margins).
    pub fn adapted_domain(&self, u: [f64; 4]) -> bool {
        let m = DOMAIN_MARGIN;
        let am = ANGLE_MARGIN;
        let pi = std::f64::consts::PI;
        match *self {
            Chart::Isotropic => true,
            Chart::Elliptic { .. } | Chart::EllipticSpace { .. } | Chart::EllipticTime { .. } => {
                u[0] >= m && u[2].abs() <= pi - am
            }
            Chart::Hyperbolic1 { .. } | Chart::Hyperbolic3 { .. } => u[1] >= m,
            Chart::ParabolicA | Chart::ParabolicB { .. } => u[0] >= m,
            Chart::ParabolicC { .. } => true,
            Chart::BiRotation { .. } | Chart::BiRotationUnit => {
                u[0] >= m && u[1] >= m && (u[2] - u[3]).abs() <= pi - am
            }
            Chart::NullPair => u[0] >= m,
            Chart::NullPairAux { mu } => u[0] >= m && (u[0] * u[0] - mu * mu).abs() >= m,
            Chart::ParabolicBoost { .. } | Chart::ParabolicScale { .. } => match self {
                Chart::ParabolicScale { .. } => true, // first slot is ln x̃¹
                _ => u[0] >= m,
            },
            Chart::PlaneBoost => u[1] >= m,
            Chart::PlanePolar => u[0] >= m && u[2].abs() <= pi - am,
            Chart::HelixPair { lambda, mu, nu } => {
                (u[0] * u[0] - lambda * lambda + mu * nu).abs() >= m
            }
            Chart::HelixPairSym { lambda } => (u[0] * u[0] + lambda * lambda).abs() >= m,
        }
    }

    /// Which generator the chart straightens, and into which adapted
    /// coordinate direction.
    pub fn rectifications(&self) -> Vec<Rectification> {
        use PoincareGenerator as G;
        let restricted = |g: PoincareGenerator, coord: usize| Rectification {
            generator: g,
            coord,
            factor: 1.0,
            // u, φ, ψ only: the completing coordinate w is not straightened
            deps: [true, true, true, false],
        };
        match *self {
            Chart::Isotropic => vec![Rectification {
                generator: G::e2() + G::e4(),
                coord: 1,
                factor: 2.0,
                deps: [true; 4],
            }],
            Chart::Elliptic { lambda, mu } => vec![Rectification::full(
                G::e13() + G::e2() * lambda + G::e4() * mu,
                2,
                1.0,
            )],
            Chart::EllipticSpace { lambda } => {
                vec![Rectification::full(G::e13() + G::e2() * lambda, 2, 1.0)]
            }
            Chart::EllipticTime { mu } => {
                vec![Rectification::full(G::e13() + G::e4() * mu, 2, 1.0)]
            }
            Chart::Hyperbolic1 { lambda } => {
                vec![Rectification::full(G::e24() + G::e1() * lambda, 3, 1.0)]
            }
            Chart::Hyperbolic3 { lambda } => {
                vec![Rectification::full(G::e24() + G::e3() * lambda, 3, 1.0)]
            }
            Chart::ParabolicA => vec![Rectification::full(G::e12() - G::e14(), 1, 1.0)],
            Chart::ParabolicB { mu } => {
                vec![Rectification::full(
                    G::e12() - G::e14() + G::e3() * mu,
                    1,
                    1.0,
                )]
            }
            Chart::ParabolicC { lambda } => {
                vec![Rectification::full(
                    G::e12() - G::e14() + G::e2() * lambda,
                    1,
                    1.0,
                )]
            }
            Chart::BiRotation { lambda } => {
                vec![Rectification::full(G::e13() + G::e24() * lambda, 3, 1.0)]
            }
            Chart::BiRotationUnit => vec![Rectification::full(G::e13() + G::e24(), 3, 1.0)],
            Chart::NullPair => vec![
                Rectification::full(G::e12() - G::e14(), 1, 1.0),
                Rectification::full(G::e23() + G::e34(), 2, 1.0),
            ],
            Chart::NullPairAux { mu } => {
                vec![Rectification::full(
                    G::e12() - G::e14() + G::e3() * mu,
                    1,
                    1.0,
                )]
            }
            Chart::ParabolicBoost { .. } => vec![Rectification::full(G::e12() - G::e14(), 1, 1.0)],
            Chart::ParabolicScale { .. } => vec![Rectification::full(G::e12() - G::e14(), 1, 1.0)],
            Chart::PlaneBoost => vec![Rectification::full(G::e24(), 3, 1.0)],
            Chart::PlanePolar => vec![Rectification::full(G::e13(), 2, 1.0)],
            Chart::HelixPair { lambda, mu, nu } => vec![
                restricted(G::e12() - G::e14() + G::e1() * lambda + G::e3() * mu, 2),
                restricted(G::e23() + G::e34() + G::e1() * nu + G::e3() * lambda, 1),
            ],
            Chart::HelixPairSym { lambda } => vec![
                restricted(G::e12() - G::e14() + G::e3() * lambda, 2),
                restricted(G::e23() + G::e34() + G::e1() * lambda, 1),
            ],
        }
    }

    /// Checked forward map.
    pub fn chart_forward(&self, u: [f64; 4]) -> Result<SpacetimePoint> {
        if !self.adapted_domain(u) {
            return Err(Error::OutOfDomain);
        }
        Ok(SpacetimePoint::new(self.forward(u)))
    }

    /// Checked inverse map.
    pub fn chart_inverse(&self, x: SpacetimePoint) -> Result<[f64; 4]> {
        if !self.domain(x.0) {
            return Err(Error::OutOfDomain);
        }
        Ok(self.inverse(x.0))
    }

    /// A representative list with generic parameter values, used by the
    /// chart test suites.
    pub fn sample_list() -> Vec<Chart> {
        vec![
            Chart::Isotropic,
            Chart::Elliptic {
                lambda: 0.7,
                mu: -0.4,
            },
            Chart::EllipticSpace { lambda: 0.9 },
            Chart::EllipticTime { mu: 1.2 },
            Chart::Hyperbolic1 { lambda: 0.8 },
            Chart::Hyperbolic3 { lambda: -0.6 },
            Chart::ParabolicA,
            Chart::ParabolicB { mu: 0.9 },
            Chart::ParabolicC { lambda: 0.75 },
            Chart::BiRotation { lambda: 0.85 },
            Chart::BiRotationUnit,
            Chart::NullPair,
            Chart::NullPairAux { mu: 0.55 },
            Chart::ParabolicBoost { lambda: 0.65 },
            Chart::ParabolicScale { mu: 0.45 },
            Chart::PlaneBoost,
            Chart::PlanePolar,
            Chart::HelixPair {
                lambda: 0.3,
                mu: 0.8,
                nu: -0.5,
            },
            Chart::HelixPairSym { lambda: 0.7 },
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::Jet2;
    use rand::{Rng, SeedableRng};

    const PI_2: f64 = std::f64::consts::FRAC_PI_2;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn forward_examples() {
        // elliptic, λ = μ = 0, (r, x̃², φ, x̃⁴) = (1, 0, π/2, 0) → (1, 0, 0, 0)
        let x = Chart::Elliptic {
            lambda: 0.0,
            mu: 0.0,
        }
        .chart_forward([1.0, 0.0, PI_2, 0.0])
        .unwrap();
        for (got, want) in x.0.iter().zip([1.0, 0.0, 0.0, 0.0]) {
            assert!(close(*got, want, 1e-15));
        }

        // hyperbolic, λ = 0, (x̃¹, r, x̃³, φ) = (0, 1, 0, 0) → (0, 1, 0, 0)
        let x = Chart::Hyperbolic1 { lambda: 0.0 }
            .chart_forward([0.0, 1.0, 0.0, 0.0])
            .unwrap();
        assert_eq!(x.0, [0.0, 1.0, 0.0, 0.0]);

        // bi-rotation, λ = 1, (r, ρ, θ, φ) = (1, 1, 0, 0) → (1, 1, 0, 0)
        let x = Chart::BiRotation { lambda: 1.0 }
            .chart_forward([1.0, 1.0, 0.0, 0.0])
            .unwrap();
        assert_eq!(x.0, [1.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn inverse_examples() {
        // parabolic-a at (1,1,0,1): (2, −0.5, 0, 2.5)
        let u = Chart::ParabolicA
            .chart_inverse(SpacetimePoint::new([1.0, 1.0, 0.0, 1.0]))
            .unwrap();
        assert_eq!(u, [2.0, -0.5, 0.0, 2.5]);

        // null-pair at (1,1,0,1): x̃⁴ = 1+1+0−1 = 1
        let u = Chart::NullPair
            .chart_inverse(SpacetimePoint::new([1.0, 1.0, 0.0, 1.0]))
            .unwrap();
        assert_eq!(u, [2.0, -0.5, 0.0, 1.0]);

        // elliptic, λ = μ = 0 at (1,0,0,0): (1, 0, π/2, 0)
        let u = Chart::Elliptic {
            lambda: 0.0,
            mu: 0.0,
        }
        .chart_inverse(SpacetimePoint::new([1.0, 0.0, 0.0, 0.0]))
        .unwrap();
        assert_eq!(u, [1.0, 0.0, PI_2, 0.0]);
    }

    fn sample_adapted(chart: &Chart, rng: &mut impl Rng) -> Option<[f64; 4]> {
        for _ in 0..200 {
            let u: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
            // bias the radial-like slots positive so acceptance stays high
            let u = match chart {
                Chart::Elliptic { .. }
                | Chart::EllipticSpace { .. }
                | Chart::EllipticTime { .. }
                | Chart::PlanePolar => [u[0].abs().max(0.05), u[1], u[2] * 1.5, u[3]],
                Chart::Hyperbolic1 { .. } | Chart::Hyperbolic3 { .. } => {
                    [u[0], u[1].abs().max(0.05), u[2], u[3]]
                }
                Chart::PlaneBoost => [u[0], u[1].abs().max(0.05), u[2], u[3]],
                Chart::ParabolicA
                | Chart::ParabolicB { .. }
                | Chart::NullPair
                | Chart::ParabolicBoost { .. }
                | Chart::NullPairAux { .. } => [u[0].abs().max(0.05), u[1], u[2], u[3]],
                Chart::BiRotation { .. } | Chart::BiRotationUnit => {
                    [u[0].abs().max(0.05), u[1].abs().max(0.05), u[2], u[3]]
                }
                _ => u,
            };
            if chart.adapted_domain(u) {
                return Some(u);
            }
        }
        None
    }

    fn sample_galilean(chart: &Chart, rng: &mut impl Rng) -> Option<[f64; 4]> {
        for _ in 0..400 {
            let x: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
            if chart.domain(x) {
                return Some(x);
            }
        }
        None
    }

    #[test]
    fn roundtrips_hold_on_both_sides() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for chart in Chart::sample_list() {
            for _ in 0..1000 {
                let x = sample_galilean(&chart, &mut rng).expect("domain not too thin");
                let u = chart.inverse(x);
                let back = chart.forward(u);
                for i in 0..4 {
                    assert!(
                        close(back[i], x[i], 1e-10),
                        "{} fwd∘inv at {x:?}: {back:?}",
                        chart.name()
                    );
                }

                let u = sample_adapted(&chart, &mut rng).expect("adapted domain not too thin");
                let x = chart.forward(u);
                if !chart.domain(x) {
                    continue; // forward image may leave the margined x-domain
                }
                let back = chart.inverse(x);
                for i in 0..4 {
                    assert!(
                        close(back[i], u[i], 1e-10),
                        "{} inv∘fwd at {u:?}: {back:?}",
                        chart.name()
                    );
                }
            }
        }
    }

    #[test]
    fn forward_jacobian_is_nonsingular() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for chart in Chart::sample_list() {
            for _ in 0..50 {
                let u = sample_adapted(&chart, &mut rng).unwrap();
                let jets: [Jet2; 4] = std::array::from_fn(|k| Jet2::coordinate(k, u[k]));
                let fwd = chart.forward(jets);
                let m: [[f64; 4]; 4] = std::array::from_fn(|r| fwd[r].g);
                let det = nalgebra::Matrix4::from_fn(|r, c| m[r][c]).determinant();
                assert!(
                    det.abs() > 1e-12,
                    "{} jacobian singular at {u:?} (det {det})",
                    chart.name()
                );
            }
        }
    }

    #[test]
    fn rectification_straightens_the_designated_generator() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for chart in Chart::sample_list() {
            for rect in chart.rectifications() {
                for _ in 0..100 {
                    let x = sample_galilean(&chart, &mut rng).unwrap();
                    // random quadratic test function of the allowed adapted coords
                    let c: [f64; 12] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
                    let f = |u: [Jet2; 4]| {
                        let mut acc = Jet2::constant(0.0);
                        let mut k = 0;
                        for i in 0..4 {
                            if !rect.deps[i] {
                                continue;
                            }
                            acc = acc + u[i] * c[k] + u[i] * u[i] * c[k + 1];
                            k += 2;
                        }
                        for i in 0..4 {
                            for j in (i + 1)..4 {
                                if rect.deps[i] && rect.deps[j] {
                                    acc = acc + u[i] * u[j] * c[(k + i + j) % 12] * 0.5;
                                }
                            }
                        }
                        acc
                    };

                    // left side: ξ^j ∂_j (f ∘ inverse) at x
                    let xj = Jet2::seed_coordinates(x);
                    let fx = f(chart.inverse(xj));
                    let xi = rect.generator.value(SpacetimePoint::new(x));
                    let lhs: f64 = (0..4).map(|j| xi[j] * fx.g[j]).sum();

                    // right side: factor · ∂f/∂u_k at u = inverse(x)
                    let u = chart.inverse(x);
                    let uj: [Jet2; 4] = std::array::from_fn(|k| Jet2::coordinate(k, u[k]));
                    let rhs = rect.factor * f(uj).g[rect.coord];

                    assert!(
                        (lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs().max(rhs.abs())),
                        "{}: rectification failed at {x:?}: {lhs} vs {rhs}",
                        chart.name()
                    );
                }
            }
        }
    }

    #[test]
    fn out_of_domain_errors() {
        assert_eq!(
            Chart::ParabolicA.chart_inverse(SpacetimePoint::new([0.0, 0.0, 0.0, 0.0])),
            Err(Error::OutOfDomain)
        );
        assert_eq!(
            Chart::Elliptic {
                lambda: 0.0,
                mu: 0.0
            }
            .chart_inverse(SpacetimePoint::new([0.0, 1.0, 0.0, 0.0])),
            Err(Error::OutOfDomain)
        );
        assert!(Chart::Hyperbolic1 { lambda: 1.0 }
            .chart_inverse(SpacetimePoint::new([0.0, 1.0, 0.0, 2.0]))
            .is_err());
    }
}
