//! Minkowski-space primitives: metric, the ten Poincaré generators, Lie
//! derivatives of covector and 2-form fields, the exterior derivative,
//! closedness residuals and algebra brackets.
//!
//! Components are stored with lower indices throughout; the metric is
//! available for reference but no index is ever raised or lowered.

use std::sync::Arc;

use crate::jet::Jet2;
use crate::{Error, Result};

/// A point of Minkowski space in Galilean coordinates (x⁴ time-like).
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct SpacetimePoint(pub [f64; 4]);

impl SpacetimePoint {
    pub fn new(x: [f64; 4]) -> Self {
        debug_assert!(x.iter().all(|c| c.is_finite()), "non-finite coordinate");
        SpacetimePoint(x)
    }

    pub fn coords(&self) -> [f64; 4] {
        self.0
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

/// The fixed Galilean metric diag(−1, −1, −1, +1). Kept for reference only;
/// nothing in the engine raises or lowers an index.
#[derive(Copy, Clone, Debug)]
pub struct Metric;

impl Metric {
    pub const DIAGONAL: [f64; 4] = [-1.0, -1.0, -1.0, 1.0];
}

/// A covector (lower-index components A₁..A₄).
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Covector(pub [f64; 4]);

impl Covector {
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

/// Index pairs of the six independent 2-form components, in storage order
/// (F₁₂, F₁₃, F₁₄, F₂₃, F₂₄, F₃₄).
pub const TWO_FORM_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// An antisymmetric 2-form, stored by its six independent components.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct TwoForm {
    comp: [f64; 6],
}

impl TwoForm {
    pub fn new(comp: [f64; 6]) -> Self {
        TwoForm { comp }
    }

    pub fn zero() -> Self {
        TwoForm { comp: [0.0; 6] }
    }

    pub fn components(&self) -> [f64; 6] {
        self.comp
    }

    /// Signed component F(i, j); F(j, i) = −F(i, j) and F(i, i) = 0 exactly.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        for (k, &(a, b)) in TWO_FORM_PAIRS.iter().enumerate() {
            if (a, b) == (i, j) {
                return self.comp[k];
            }
            if (a, b) == (j, i) {
                return -self.comp[k];
            }
        }
        unreachable!("index out of range")
    }

    pub fn max_abs(&self) -> f64 {
        self.comp.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

/// Storage order of the six rotation/boost coefficients.
pub const ROTATION_LABELS: [&str; 6] = ["e12", "e13", "e23", "e14", "e24", "e34"];

/// Coefficient labels of the full ten-dimensional basis.
pub const BASIS_LABELS: [&str; 10] = [
    "e1", "e2", "e3", "e4", "e12", "e13", "e23", "e14", "e24", "e34",
];

/// The six rotation/boost basis matrices M with ξ = M·x, row-major
/// (m[r][c] = ∂ξ^r/∂x^c), ordered as [`ROTATION_LABELS`].
const ROTATION_MATRICES: [[[f64; 4]; 4]; 6] = {
    let mut ms = [[[0.0; 4]; 4]; 6];
    // e12 = (−x², x¹, 0, 0)
    ms[0][0][1] = -1.0;
    ms[0][1][0] = 1.0;
    // e13 = (x³, 0, −x¹, 0)
    ms[1][0][2] = 1.0;
    ms[1][2][0] = -1.0;
    // e23 = (0, −x³, x², 0)
    ms[2][1][2] = -1.0;
    ms[2][2][1] = 1.0;
    // e14 = (x⁴, 0, 0, x¹)
    ms[3][0][3] = 1.0;
    ms[3][3][0] = 1.0;
    // e24 = (0, x⁴, 0, x²)
    ms[4][1][3] = 1.0;
    ms[4][3][1] = 1.0;
    // e34 = (0, 0, x⁴, x³)
    ms[5][2][3] = 1.0;
    ms[5][3][2] = 1.0;
    ms
};

/// An element of the Poincaré algebra: four translation coefficients over
/// e₁..e₄ and six rotation/boost coefficients over e₁₂, e₁₃, e₂₃, e₁₄, e₂₄, e₃₄.
/// The induced vector field is ξ(x) = a + M·x.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct PoincareGenerator {
    pub a: [f64; 4],
    pub w: [f64; 6],
}

impl PoincareGenerator {
    pub fn new(a: [f64; 4], w: [f64; 6]) -> Self {
        PoincareGenerator { a, w }
    }

    pub fn zero() -> Self {
        PoincareGenerator {
            a: [0.0; 4],
            w: [0.0; 6],
        }
    }

    /// The k-th translation basis element e₁..e₄ (k = 0..3).
    pub fn translation(k: usize) -> Self {
        let mut a = [0.0; 4];
        a[k] = 1.0;
        PoincareGenerator { a, w: [0.0; 6] }
    }

    /// The k-th rotation/boost basis element in [`ROTATION_LABELS`] order.
    pub fn rotation(k: usize) -> Self {
        let mut w = [0.0; 6];
        w[k] = 1.0;
        PoincareGenerator { a: [0.0; 4], w }
    }

    pub const fn e1() -> Self {
        Self::basis_const(0)
    }
    pub const fn e2() -> Self {
        Self::basis_const(1)
    }
    pub const fn e3() -> Self {
        Self::basis_const(2)
    }
    pub const fn e4() -> Self {
        Self::basis_const(3)
    }
    pub const fn e12() -> Self {
        Self::basis_const(4)
    }
    pub const fn e13() -> Self {
        Self::basis_const(5)
    }
    pub const fn e23() -> Self {
        Self::basis_const(6)
    }
    pub const fn e14() -> Self {
        Self::basis_const(7)
    }
    pub const fn e24() -> Self {
        Self::basis_const(8)
    }
    pub const fn e34() -> Self {
        Self::basis_const(9)
    }

    const fn basis_const(k: usize) -> Self {
        let mut a = [0.0; 4];
        let mut w = [0.0; 6];
        if k < 4 {
            a[k] = 1.0;
        } else {
            w[k - 4] = 1.0;
        }
        PoincareGenerator { a, w }
    }

    /// The ten basis elements in coefficient order.
    pub fn basis() -> [Self; 10] {
        std::array::from_fn(Self::basis_const)
    }

    /// The flat coefficient vector (a₁..a₄, w₁₂, w₁₃, w₂₃, w₁₄, w₂₄, w₃₄).
    pub fn coeffs(&self) -> [f64; 10] {
        let mut c = [0.0; 10];
        c[..4].copy_from_slice(&self.a);
        c[4..].copy_from_slice(&self.w);
        c
    }

    pub fn from_coeffs(c: [f64; 10]) -> Self {
        PoincareGenerator {
            a: [c[0], c[1], c[2], c[3]],
            w: [c[4], c[5], c[6], c[7], c[8], c[9]],
        }
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs().iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// ξ(x) = a + M·x.
    pub fn value(&self, x: SpacetimePoint) -> [f64; 4] {
        let m = self.jacobian();
        std::array::from_fn(|r| self.a[r] + (0..4).map(|c| m[r][c] * x.0[c]).sum::<f64>())
    }

    /// The constant matrix M with `m[r][c]` = ∂ξ^r/∂x^c. Independent of x.
    pub fn jacobian(&self) -> [[f64; 4]; 4] {
        let mut m = [[0.0; 4]; 4];
        for (k, mat) in ROTATION_MATRICES.iter().enumerate() {
            if self.w[k] != 0.0 {
                for r in 0..4 {
                    for c in 0..4 {
                        m[r][c] += self.w[k] * mat[r][c];
                    }
                }
            }
        }
        m
    }

    /// Commutator of affine-linear fields: [ξ, η] = (N·a_ξ − M·a_η) + (NM − MN)·x,
    /// re-expressed exactly in the ten-coefficient basis.
    pub fn bracket(&self, other: &PoincareGenerator) -> PoincareGenerator {
        let m = self.jacobian();
        let n = other.jacobian();
        let mut a = [0.0; 4];
        for r in 0..4 {
            for c in 0..4 {
                a[r] += n[r][c] * self.a[c] - m[r][c] * other.a[c];
            }
        }
        let mut comm = [[0.0; 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                for k in 0..4 {
                    comm[r][c] += n[r][k] * m[k][c] - m[r][k] * n[k][c];
                }
            }
        }
        // Read the Lorentz-algebra coefficients back off the matrix entries.
        let w = [
            -comm[0][1],
            comm[0][2],
            -comm[1][2],
            comm[0][3],
            comm[1][3],
            comm[2][3],
        ];
        let out = PoincareGenerator { a, w };
        debug_assert!({
            let rec = out.jacobian();
            (0..4).all(|r| (0..4).all(|c| (rec[r][c] - comm[r][c]).abs() == 0.0))
        });
        out
    }

    /// Compact human-readable label, e.g. `e13+2e2` or `e12-e14+0.5e3`.
    pub fn label(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let c = self.coeffs();
        for (k, &v) in c.iter().enumerate() {
            if v == 0.0 {
                continue;
            }
            let name = BASIS_LABELS[k];
            let piece = if v == 1.0 {
                name.to_string()
            } else if v == -1.0 {
                format!("-{name}")
            } else {
                format!("{v:+.3}{name}").trim_start_matches('+').to_string()
            };
            if parts.is_empty() || piece.starts_with('-') {
                parts.push(piece);
            } else {
                parts.push(format!("+{piece}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.concat()
        }
    }
}

impl std::ops::Add for PoincareGenerator {
    type Output = PoincareGenerator;
    fn add(self, rhs: PoincareGenerator) -> PoincareGenerator {
        PoincareGenerator {
            a: std::array::from_fn(|i| self.a[i] + rhs.a[i]),
            w: std::array::from_fn(|i| self.w[i] + rhs.w[i]),
        }
    }
}

impl std::ops::Sub for PoincareGenerator {
    type Output = PoincareGenerator;
    fn sub(self, rhs: PoincareGenerator) -> PoincareGenerator {
        PoincareGenerator {
            a: std::array::from_fn(|i| self.a[i] - rhs.a[i]),
            w: std::array::from_fn(|i| self.w[i] - rhs.w[i]),
        }
    }
}

impl std::ops::Mul<f64> for PoincareGenerator {
    type Output = PoincareGenerator;
    fn mul(self, c: f64) -> PoincareGenerator {
        PoincareGenerator {
            a: std::array::from_fn(|i| self.a[i] * c),
            w: std::array::from_fn(|i| self.w[i] * c),
        }
    }
}

pub type DomainPred = Arc<dyn Fn(SpacetimePoint) -> bool + Send + Sync>;
type CovectorEval = Arc<dyn Fn(SpacetimePoint) -> [Jet2; 4] + Send + Sync>;
type TwoFormEval = Arc<dyn Fn(SpacetimePoint) -> [Jet2; 6] + Send + Sync>;

/// A covector field evaluated in order-2 jets: A_i(x), ∂_j A_i and ∂_j∂_k A_i.
#[derive(Clone)]
pub struct CovectorField {
    eval: CovectorEval,
    domain: DomainPred,
}

impl CovectorField {
    pub fn new(
        domain: DomainPred,
        eval: impl Fn(SpacetimePoint) -> [Jet2; 4] + Send + Sync + 'static,
    ) -> Self {
        CovectorField {
            eval: Arc::new(eval),
            domain,
        }
    }

    pub fn everywhere(eval: impl Fn(SpacetimePoint) -> [Jet2; 4] + Send + Sync + 'static) -> Self {
        Self::new(Arc::new(|_| true), eval)
    }

    pub fn zero() -> Self {
        Self::everywhere(|_| [Jet2::constant(0.0); 4])
    }

    pub fn constant(c: [f64; 4]) -> Self {
        Self::everywhere(move |_| c.map(Jet2::constant))
    }

    /// The field scaled by a constant factor.
    pub fn scaled(&self, c: f64) -> Self {
        let eval = self.eval.clone();
        Self::new(self.domain.clone(), move |x| eval(x).map(|j| j * c))
    }

    pub fn contains(&self, x: SpacetimePoint) -> bool {
        (self.domain)(x)
    }

    pub fn domain(&self) -> DomainPred {
        self.domain.clone()
    }

    /// Evaluate the four component jets; errors if `x` is outside the domain.
    pub fn eval(&self, x: SpacetimePoint) -> Result<[Jet2; 4]> {
        if !(self.domain)(x) {
            return Err(Error::OutOfDomain);
        }
        Ok((self.eval)(x))
    }

    /// Component values only.
    pub fn components(&self, x: SpacetimePoint) -> Result<Covector> {
        Ok(Covector(self.eval(x)?.map(|j| j.v)))
    }
}

/// A 2-form field with first derivatives (value + gradient per component).
#[derive(Clone)]
pub struct TwoFormField {
    eval: TwoFormEval,
    domain: DomainPred,
}

impl TwoFormField {
    pub fn new(
        domain: DomainPred,
        eval: impl Fn(SpacetimePoint) -> [Jet2; 6] + Send + Sync + 'static,
    ) -> Self {
        TwoFormField {
            eval: Arc::new(eval),
            domain,
        }
    }

    pub fn zero() -> Self {
        TwoFormField::new(Arc::new(|_| true), |_| [Jet2::constant(0.0); 6])
    }

    /// F = dA, with component gradients taken from the potential's Hessians.
    /// The second-order slots of the returned jets are unused and left at zero.
    pub fn from_potential(a: &CovectorField) -> Self {
        let inner = a.clone();
        TwoFormField::new(a.domain(), move |x| {
            let jets = inner.eval(x).expect("domain checked by caller");
            std::array::from_fn(|k| {
                let (i, j) = TWO_FORM_PAIRS[k];
                let mut out = Jet2::constant(jets[j].g[i] - jets[i].g[j]);
                out.g = std::array::from_fn(|d| jets[j].h[d][i] - jets[i].h[d][j]);
                out
            })
        })
    }

    pub fn contains(&self, x: SpacetimePoint) -> bool {
        (self.domain)(x)
    }

    pub fn domain(&self) -> DomainPred {
        self.domain.clone()
    }

    pub fn eval(&self, x: SpacetimePoint) -> Result<[Jet2; 6]> {
        if !(self.domain)(x) {
            return Err(Error::OutOfDomain);
        }
        Ok((self.eval)(x))
    }

    pub fn components(&self, x: SpacetimePoint) -> Result<TwoForm> {
        Ok(TwoForm::new(self.eval(x)?.map(|j| j.v)))
    }

    pub fn scaled(&self, c: f64) -> Self {
        let eval = self.eval.clone();
        TwoFormField::new(self.domain.clone(), move |x| eval(x).map(|j| j * c))
    }
}

/// (L_ξA)_i = ξ^j ∂_j A_i + A_j ∂_i ξ^j, computed from already-evaluated jets.
pub fn lie_derivative_covector_jets(
    jets: &[Jet2; 4],
    g: &PoincareGenerator,
    x: SpacetimePoint,
) -> Covector {
    let xi = g.value(x);
    let m = g.jacobian();
    Covector(std::array::from_fn(|i| {
        let transport: f64 = (0..4).map(|j| xi[j] * jets[i].g[j]).sum();
        let algebraic: f64 = (0..4).map(|j| jets[j].v * m[j][i]).sum();
        transport + algebraic
    }))
}

/// Lie derivative of a covector field along a Poincaré generator.
pub fn lie_derivative_covector(
    a: &CovectorField,
    g: &PoincareGenerator,
    x: SpacetimePoint,
) -> Result<Covector> {
    Ok(lie_derivative_covector_jets(&a.eval(x)?, g, x))
}

/// F_ij = ∂_i A_j − ∂_j A_i.
pub fn exterior_derivative(a: &CovectorField, x: SpacetimePoint) -> Result<TwoForm> {
    let jets = a.eval(x)?;
    Ok(TwoForm::new(std::array::from_fn(|k| {
        let (i, j) = TWO_FORM_PAIRS[k];
        jets[j].g[i] - jets[i].g[j]
    })))
}

/// The four totally antisymmetrized combinations ∂_i F_jk + ∂_j F_ki + ∂_k F_ij
/// for (i,j,k) ∈ {(1,2,3), (1,2,4), (1,3,4), (2,3,4)}, from second derivatives
/// of the potential.
pub fn closedness_residual(a: &CovectorField, x: SpacetimePoint) -> Result<[f64; 4]> {
    let jets = a.eval(x)?;
    Ok(closedness_from_hessians(&jets))
}

fn closedness_from_hessians(jets: &[Jet2; 4]) -> [f64; 4] {
    // ∂_a F_bc = ∂_a∂_b A_c − ∂_a∂_c A_b
    let df = |a: usize, b: usize, c: usize| jets[c].h[a][b] - jets[b].h[a][c];
    let triple = |i: usize, j: usize, k: usize| df(i, j, k) + df(j, k, i) + df(k, i, j);
    [
        triple(0, 1, 2),
        triple(0, 1, 3),
        triple(0, 2, 3),
        triple(1, 2, 3),
    ]
}

/// Same antisymmetrized combinations for a directly-given 2-form field,
/// using the component gradients.
pub fn closedness_residual_twoform(f: &TwoFormField, x: SpacetimePoint) -> Result<[f64; 4]> {
    let jets = f.eval(x)?;
    let comp = |i: usize, j: usize| -> Jet2 {
        for (k, &(a, b)) in TWO_FORM_PAIRS.iter().enumerate() {
            if (a, b) == (i, j) {
                return jets[k];
            }
            if (a, b) == (j, i) {
                return -jets[k];
            }
        }
        unreachable!()
    };
    let triple = |i: usize, j: usize, k: usize| comp(j, k).g[i] + comp(k, i).g[j] + comp(i, j).g[k];
    Ok([
        triple(0, 1, 2),
        triple(0, 1, 3),
        triple(0, 2, 3),
        triple(1, 2, 3),
    ])
}

/// (L_ξF)_ij = ξ^k ∂_k F_ij + F_kj ∂_i ξ^k + F_ik ∂_j ξ^k.
pub fn lie_derivative_twoform(
    f: &TwoFormField,
    g: &PoincareGenerator,
    x: SpacetimePoint,
) -> Result<TwoForm> {
    let jets = f.eval(x)?;
    let xi = g.value(x);
    let m = g.jacobian();
    let val = |i: usize, j: usize| -> f64 {
        if i == j {
            return 0.0;
        }
        for (k, &(a, b)) in TWO_FORM_PAIRS.iter().enumerate() {
            if (a, b) == (i, j) {
                return jets[k].v;
            }
            if (a, b) == (j, i) {
                return -jets[k].v;
            }
        }
        unreachable!()
    };
    Ok(TwoForm::new(std::array::from_fn(|kk| {
        let (i, j) = TWO_FORM_PAIRS[kk];
        let transport: f64 = (0..4).map(|k| xi[k] * jets[kk].g[k]).sum();
        let alg: f64 = (0..4)
            .map(|k| val(k, j) * m[k][i] + val(i, k) * m[k][j])
            .sum();
        transport + alg
    })))
}

/// Normalization for invariance residuals:
/// scale = 1 + max|A_i| + max|∂_j A_i|·(1 + max|x^k|).
pub fn residual_scale(jets: &[Jet2; 4], x: SpacetimePoint) -> f64 {
    let max_a = jets.iter().fold(0.0f64, |m, j| m.max(j.v.abs()));
    let max_da = jets
        .iter()
        .fold(0.0f64, |m, j| j.g.iter().fold(m, |m2, d| m2.max(d.abs())));
    1.0 + max_a + max_da * (1.0 + x.max_abs())
}

/// Normalization for closedness residuals of a potential:
/// 1 + max|∂A| + max|∂²A|·(1 + max|x|).
pub fn closedness_scale(jets: &[Jet2; 4], x: SpacetimePoint) -> f64 {
    let max_da = jets
        .iter()
        .fold(0.0f64, |m, j| j.g.iter().fold(m, |m2, d| m2.max(d.abs())));
    let max_d2 = jets.iter().fold(0.0f64, |m, j| {
        j.h.iter().flatten().fold(m, |m2, d| m2.max(d.abs()))
    });
    1.0 + max_da + max_d2 * (1.0 + x.max_abs())
}

/// Normalization for 2-form residuals: 1 + max|F| + max|∂F|·(1 + max|x|).
pub fn twoform_scale(jets: &[Jet2; 6], x: SpacetimePoint) -> f64 {
    let max_f = jets.iter().fold(0.0f64, |m, j| m.max(j.v.abs()));
    let max_df = jets
        .iter()
        .fold(0.0f64, |m, j| j.g.iter().fold(m, |m2, d| m2.max(d.abs())));
    1.0 + max_f + max_df * (1.0 + x.max_abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::Jet2;

    fn pt(x: [f64; 4]) -> SpacetimePoint {
        SpacetimePoint::new(x)
    }

    #[test]
    fn generator_values() {
        let e24 = PoincareGenerator::e24();
        assert_eq!(e24.value(pt([0.0, 2.0, 0.0, 3.0])), [0.0, 3.0, 0.0, 2.0]);
        let e1 = PoincareGenerator::e1();
        assert_eq!(e1.value(pt([9.0, -1.0, 4.0, 2.0])), [1.0, 0.0, 0.0, 0.0]);
        // e13 + 2 e2 + 5 e4 at (1, 0, 7, 0) = (7, 2, −1, 5)
        let g = PoincareGenerator::e13()
            + PoincareGenerator::e2() * 2.0
            + PoincareGenerator::e4() * 5.0;
        assert_eq!(g.value(pt([1.0, 0.0, 7.0, 0.0])), [7.0, 2.0, -1.0, 5.0]);
    }

    #[test]
    fn generator_jacobians() {
        let m = PoincareGenerator::e24().jacobian();
        assert_eq!(m[1][3], 1.0);
        assert_eq!(m[3][1], 1.0);
        assert_eq!(m.iter().flatten().map(|v| v.abs()).sum::<f64>(), 2.0);

        assert_eq!(PoincareGenerator::e1().jacobian(), [[0.0; 4]; 4]);

        let m13 = PoincareGenerator::e13().jacobian();
        assert_eq!(m13[0][2], 1.0);
        assert_eq!(m13[2][0], -1.0);

        // value = a + M·x for random coefficient vectors
        let g =
            PoincareGenerator::from_coeffs([0.3, -1.0, 0.2, 0.7, 1.1, -0.4, 0.9, 0.5, -0.8, 0.1]);
        let m = g.jacobian();
        let x = [1.3, -0.2, 0.7, 2.0];
        let v = g.value(pt(x));
        for r in 0..4 {
            let lin: f64 = (0..4).map(|c| m[r][c] * x[c]).sum();
            assert!((v[r] - (g.a[r] + lin)).abs() < 1e-15);
        }
    }

    #[test]
    fn brackets() {
        let z = PoincareGenerator::e1().bracket(&PoincareGenerator::e2());
        assert_eq!(z.coeffs(), [0.0; 10]);

        // [e12, e23] = −e13
        let b = PoincareGenerator::e12().bracket(&PoincareGenerator::e23());
        assert_eq!(b.coeffs(), (PoincareGenerator::e13() * -1.0).coeffs());

        // [e24, e2] = −e4
        let b = PoincareGenerator::e24().bracket(&PoincareGenerator::e2());
        assert_eq!(b.coeffs(), (PoincareGenerator::e4() * -1.0).coeffs());
    }

    #[test]
    fn jacobi_identity_over_all_basis_triples() {
        let basis = PoincareGenerator::basis();
        let mut count = 0;
        for i in 0..10 {
            for j in (i + 1)..10 {
                for k in (j + 1)..10 {
                    let (a, b, c) = (&basis[i], &basis[j], &basis[k]);
                    let s = a.bracket(&b.bracket(c))
                        + b.bracket(&c.bracket(a))
                        + c.bracket(&a.bracket(b));
                    assert_eq!(s.coeffs(), [0.0; 10], "triple ({i},{j},{k})");
                    count += 1;
                }
            }
        }
        assert_eq!(count, 120);
    }

    #[test]
    fn two_form_antisymmetry() {
        let f = TwoForm::new([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        for i in 0..4 {
            assert_eq!(f.get(i, i), 0.0);
            for j in 0..4 {
                assert_eq!(f.get(i, j) + f.get(j, i), 0.0);
            }
        }
        assert_eq!(f.get(0, 1), 1.0);
        assert_eq!(f.get(3, 2), -6.0);
    }

    #[test]
    fn lie_derivative_of_constant_covector() {
        // A = (0,1,0,0), ξ = e24 → L = (0, 0, 0, 1)
        let a = CovectorField::constant([0.0, 1.0, 0.0, 0.0]);
        let l = lie_derivative_covector(&a, &PoincareGenerator::e24(), pt([0.4, -1.0, 2.0, 0.3]))
            .unwrap();
        assert_eq!(l.0, [0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn translation_invariance_of_x1_free_field() {
        // A independent of x¹ is annihilated by e1
        let a = CovectorField::everywhere(|x| {
            let j = Jet2::seed_coordinates(x.0);
            let f = (j[1] * j[3]).sin() + j[2] * j[2];
            [f, f * j[1], f + j[3], j[2].exp()]
        });
        let l = lie_derivative_covector(&a, &PoincareGenerator::e1(), pt([1.0, 0.5, -0.7, 0.2]))
            .unwrap();
        assert_eq!(l.0, [0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn lie_derivative_matches_expanded_condition() {
        // Random polynomial components against the expanded form of the
        // invariance condition for ξ = e13 + 2 e2 + 5 e4:
        //   x³∂₁A_i + λ∂₂A_i − x¹∂₃A_i + μ∂₄A_i + A₁δ³_i − A₃δ¹_i
        let a = CovectorField::everywhere(|x| {
            let j = Jet2::seed_coordinates(x.0);
            [
                j[0] * j[1] * j[2] - j[3] * 0.7,
                j[2] * j[2] * j[3] + j[0],
                j[1] * j[3] + j[0] * j[0] * 0.3,
                j[0] * j[1] - j[2] * j[3] * 1.1,
            ]
        });
        let g = PoincareGenerator::e13()
            + PoincareGenerator::e2() * 2.0
            + PoincareGenerator::e4() * 5.0;
        let x = pt([0.3, -1.2, 0.8, 1.7]);
        let l = lie_derivative_covector(&a, &g, x).unwrap();

        let jets = a.eval(x).unwrap();
        for i in 0..4 {
            let mut expected = x.0[2] * jets[i].g[0] + 2.0 * jets[i].g[1] - x.0[0] * jets[i].g[2]
                + 5.0 * jets[i].g[3];
            if i == 2 {
                expected += jets[0].v;
            }
            if i == 0 {
                expected -= jets[2].v;
            }
            assert!((l.0[i] - expected).abs() <= 1e-12 * (1.0 + expected.abs()));
        }
    }

    #[test]
    fn exterior_derivative_basics() {
        let a = CovectorField::constant([0.3, -0.7, 1.0, 2.0]);
        let f = exterior_derivative(&a, pt([1.0, 2.0, 3.0, 4.0])).unwrap();
        assert_eq!(f.components(), [0.0; 6]);

        // A = (0, x¹, 0, 0) → F₁₂ = 1, all else 0
        let a = CovectorField::everywhere(|x| {
            let j = Jet2::seed_coordinates(x.0);
            [
                Jet2::constant(0.0),
                j[0],
                Jet2::constant(0.0),
                Jet2::constant(0.0),
            ]
        });
        let f = exterior_derivative(&a, pt([0.2, 0.4, -0.8, 1.0])).unwrap();
        assert_eq!(f.components(), [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn closedness_identity() {
        // d² = 0 holds exactly for jet-evaluated potentials
        let a = CovectorField::everywhere(|x| {
            let j = Jet2::seed_coordinates(x.0);
            [
                (j[1] * j[2]).sin() * j[3],
                j[0] * j[0] * j[1],
                (j[3] * 0.3).exp() * j[0],
                j[1] * j[2] * j[3],
            ]
        });
        let r = closedness_residual(&a, pt([0.9, -0.4, 1.2, 0.5])).unwrap();
        assert_eq!(r, [0.0; 4]);

        let z = CovectorField::zero();
        assert_eq!(closedness_residual(&z, pt([0.0; 4])).unwrap(), [0.0; 4]);
    }

    #[test]
    fn lie_derivative_twoform_zero_and_naturality() {
        let zero = TwoFormField::zero();
        let l = lie_derivative_twoform(&zero, &PoincareGenerator::e24(), pt([1.0, 2.0, 0.5, 0.1]))
            .unwrap();
        assert_eq!(l.components(), [0.0; 6]);

        // Naturality on a rotation-invariant potential: A = (0,0,0, ρ²+x⁴)
        // is invariant under e12; so is dA.
        let a = CovectorField::everywhere(|x| {
            let j = Jet2::seed_coordinates(x.0);
            let rho2 = j[0] * j[0] + j[1] * j[1] + j[2] * j[2];
            [
                Jet2::constant(0.0),
                Jet2::constant(0.0),
                Jet2::constant(0.0),
                rho2 + j[3],
            ]
        });
        let f = TwoFormField::from_potential(&a);
        let x = pt([0.7, -0.2, 1.1, 0.4]);
        let l = lie_derivative_twoform(&f, &PoincareGenerator::e12(), x).unwrap();
        let scale = twoform_scale(&f.eval(x).unwrap(), x);
        assert!(l.max_abs() <= 1e-12 * scale);
    }

    #[test]
    fn out_of_domain_is_reported() {
        let a = CovectorField::new(Arc::new(|x: SpacetimePoint| x.0[0] > 0.0), |x| {
            Jet2::seed_coordinates(x.0)
        });
        assert_eq!(
            lie_derivative_covector(&a, &PoincareGenerator::e1(), pt([-1.0, 0.0, 0.0, 0.0])),
            Err(Error::OutOfDomain)
        );
    }
}
