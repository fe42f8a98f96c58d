//! Order-2 forward-mode jets over the four Galilean coordinates.
//!
//! A [`Jet2`] carries a value, its gradient with respect to x¹..x⁴ and the
//! full (symmetric) Hessian. Every arithmetic operation and elementary
//! function propagates both orders exactly, so field residuals built on top
//! of jets suffer no truncation error. Hessians are written through an
//! upper-triangle-plus-mirror path, which keeps `h[i][j] == h[j][i]` to exact
//! bit equality after every operation.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::{Error, Result};

/// Number of base coordinates.
pub const DIM: usize = 4;

/// Value, gradient and Hessian of a scalar expression of x¹..x⁴.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Jet2 {
    /// f(x)
    pub v: f64,
    /// ∂f/∂x^k
    pub g: [f64; DIM],
    /// ∂²f/∂x^j∂x^k, symmetric
    pub h: [[f64; DIM]; DIM],
}

#[inline]
#[allow(clippy::needless_range_loop)]
fn sym(f: impl Fn(usize, usize) -> f64) -> [[f64; DIM]; DIM] {
    let mut h = [[0.0; DIM]; DIM];
    for i in 0..DIM {
        for j in i..DIM {
            let v = f(i, j);
            h[i][j] = v;
            h[j][i] = v;
        }
    }
    h
}

impl Jet2 {
    /// A constant: zero gradient and Hessian.
    #[inline]
    pub fn constant(v: f64) -> Self {
        Jet2 {
            v,
            g: [0.0; DIM],
            h: [[0.0; DIM]; DIM],
        }
    }

    /// The k-th coordinate jet: value `v`, gradient = k-th unit vector, zero Hessian.
    #[inline]
    pub fn coordinate(k: usize, v: f64) -> Self {
        let mut g = [0.0; DIM];
        g[k] = 1.0;
        Jet2 {
            v,
            g,
            h: [[0.0; DIM]; DIM],
        }
    }

    /// The four coordinate jets at a point.
    #[inline]
    pub fn seed_coordinates(x: [f64; DIM]) -> [Jet2; DIM] {
        [
            Jet2::coordinate(0, x[0]),
            Jet2::coordinate(1, x[1]),
            Jet2::coordinate(2, x[2]),
            Jet2::coordinate(3, x[3]),
        ]
    }

    /// Chain rule through a unary function with derivatives `f`, `f'`, `f''` at `self.v`.
    #[inline]
    fn chain(self, f0: f64, f1: f64, f2: f64) -> Self {
        Jet2 {
            v: f0,
            g: std::array::from_fn(|i| f1 * self.g[i]),
            h: sym(|i, j| f2 * self.g[i] * self.g[j] + f1 * self.h[i][j]),
        }
    }

    pub fn sin(self) -> Self {
        let (s, c) = self.v.sin_cos();
        self.chain(s, c, -s)
    }

    pub fn cos(self) -> Self {
        let (s, c) = self.v.sin_cos();
        self.chain(c, -s, -c)
    }

    pub fn sinh(self) -> Self {
        let (s, c) = (self.v.sinh(), self.v.cosh());
        self.chain(s, c, s)
    }

    pub fn cosh(self) -> Self {
        let (s, c) = (self.v.sinh(), self.v.cosh());
        self.chain(c, s, c)
    }

    pub fn exp(self) -> Self {
        let e = self.v.exp();
        self.chain(e, e, e)
    }

    /// Natural logarithm; the caller guarantees `v > 0` (see [`Jet2::try_ln`]).
    pub fn ln(self) -> Self {
        let inv = 1.0 / self.v;
        self.chain(self.v.ln(), inv, -inv * inv)
    }

    pub fn try_ln(self) -> Result<Self> {
        if self.v > 0.0 {
            Ok(self.ln())
        } else {
            Err(Error::Domain("ln requires a positive argument"))
        }
    }

    /// Square root; the caller guarantees `v > 0`.
    pub fn sqrt(self) -> Self {
        let r = self.v.sqrt();
        let f1 = 0.5 / r;
        self.chain(r, f1, -0.5 * f1 / self.v)
    }

    pub fn try_sqrt(self) -> Result<Self> {
        if self.v > 0.0 {
            Ok(self.sqrt())
        } else {
            Err(Error::Domain("sqrt requires a positive argument"))
        }
    }

    /// Two-argument arctangent `atan2(self, x)` with result in (−π, π].
    pub fn atan2(self, x: Jet2) -> Self {
        let (yv, xv) = (self.v, x.v);
        let r2 = xv * xv + yv * yv;
        let r4 = r2 * r2;
        // first partials of atan2(y, x)
        let ty = xv / r2;
        let tx = -yv / r2;
        // second partials
        let tyy = -2.0 * xv * yv / r4;
        let txy = (yv * yv - xv * xv) / r4;
        let txx = 2.0 * xv * yv / r4;
        Jet2 {
            v: yv.atan2(xv),
            g: std::array::from_fn(|i| ty * self.g[i] + tx * x.g[i]),
            h: sym(|i, j| {
                tyy * self.g[i] * self.g[j]
                    + txy * (self.g[i] * x.g[j] + x.g[i] * self.g[j])
                    + txx * x.g[i] * x.g[j]
                    + ty * self.h[i][j]
                    + tx * x.h[i][j]
            }),
        }
    }

    pub fn try_atan2(self, x: Jet2) -> Result<Self> {
        if self.v == 0.0 && x.v == 0.0 {
            Err(Error::Domain("atan2 requires (y, x) != (0, 0)"))
        } else {
            Ok(self.atan2(x))
        }
    }

    /// Integer power. `powi(0)` is the constant 1; negative exponents require `v != 0`.
    pub fn powi(self, n: i32) -> Self {
        match n {
            0 => Jet2::constant(1.0),
            1 => self,
            _ => {
                let nf = f64::from(n);
                let f0 = self.v.powi(n);
                let f1 = nf * self.v.powi(n - 1);
                let f2 = nf * f64::from(n - 1) * self.v.powi(n - 2);
                self.chain(f0, f1, f2)
            }
        }
    }

    pub fn recip(self) -> Self {
        let inv = 1.0 / self.v;
        self.chain(inv, -inv * inv, 2.0 * inv * inv * inv)
    }

    pub fn try_div(self, rhs: Jet2) -> Result<Self> {
        if rhs.v == 0.0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }

    /// Numerically checks the symmetry invariant (identically true by construction).
    pub fn hessian_is_symmetric(&self) -> bool {
        (0..DIM).all(|i| (0..DIM).all(|j| self.h[i][j] == self.h[j][i]))
    }

    /// The i-th partial derivative as a first-order jet: value `g[i]`,
    /// gradient `h[i][..]`. Second-order data is not propagated.
    pub fn gradient_jet(&self, i: usize) -> Jet2 {
        Jet2 {
            v: self.g[i],
            g: self.h[i],
            h: [[0.0; DIM]; DIM],
        }
    }
}

impl From<f64> for Jet2 {
    fn from(v: f64) -> Self {
        Jet2::constant(v)
    }
}

impl Add for Jet2 {
    type Output = Jet2;
    #[inline]
    fn add(self, rhs: Jet2) -> Jet2 {
        Jet2 {
            v: self.v + rhs.v,
            g: std::array::from_fn(|i| self.g[i] + rhs.g[i]),
            h: sym(|i, j| self.h[i][j] + rhs.h[i][j]),
        }
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    #[inline]
    fn sub(self, rhs: Jet2) -> Jet2 {
        Jet2 {
            v: self.v - rhs.v,
            g: std::array::from_fn(|i| self.g[i] - rhs.g[i]),
            h: sym(|i, j| self.h[i][j] - rhs.h[i][j]),
        }
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    // product rule mixes + and * by nature
    #[allow(clippy::suspicious_arithmetic_impl)]
    #[inline]
    fn mul(self, rhs: Jet2) -> Jet2 {
        Jet2 {
            v: self.v * rhs.v,
            g: std::array::from_fn(|i| self.g[i] * rhs.v + self.v * rhs.g[i]),
            h: sym(|i, j| {
                self.h[i][j] * rhs.v
                    + self.g[i] * rhs.g[j]
                    + self.g[j] * rhs.g[i]
                    + self.v * rhs.h[i][j]
            }),
        }
    }
}

impl Div for Jet2 {
    type Output = Jet2;
    /// Quotient rule to order 2: with q = a/b,
    /// q_i = (a_i − q b_i)/b and q_ij = (a_ij − q_i b_j − q_j b_i − q b_ij)/b.
    #[allow(clippy::suspicious_arithmetic_impl)]
    #[inline]
    fn div(self, rhs: Jet2) -> Jet2 {
        let q = self.v / rhs.v;
        let g: [f64; DIM] = std::array::from_fn(|i| (self.g[i] - q * rhs.g[i]) / rhs.v);
        Jet2 {
            v: q,
            g,
            h: sym(|i, j| {
                (self.h[i][j] - g[i] * rhs.g[j] - g[j] * rhs.g[i] - q * rhs.h[i][j]) / rhs.v
            }),
        }
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    #[inline]
    fn neg(self) -> Jet2 {
        Jet2 {
            v: -self.v,
            g: std::array::from_fn(|i| -self.g[i]),
            h: sym(|i, j| -self.h[i][j]),
        }
    }
}

impl Add<f64> for Jet2 {
    type Output = Jet2;
    #[inline]
    fn add(self, rhs: f64) -> Jet2 {
        Jet2 {
            v: self.v + rhs,
            ..self
        }
    }
}

impl Sub<f64> for Jet2 {
    type Output = Jet2;
    #[inline]
    fn sub(self, rhs: f64) -> Jet2 {
        Jet2 {
            v: self.v - rhs,
            ..self
        }
    }
}

impl Mul<f64> for Jet2 {
    type Output = Jet2;
    #[inline]
    fn mul(self, rhs: f64) -> Jet2 {
        Jet2 {
            v: self.v * rhs,
            g: std::array::from_fn(|i| self.g[i] * rhs),
            h: sym(|i, j| self.h[i][j] * rhs),
        }
    }
}

impl Mul<Jet2> for f64 {
    type Output = Jet2;
    #[inline]
    fn mul(self, rhs: Jet2) -> Jet2 {
        rhs * self
    }
}

impl Div<f64> for Jet2 {
    type Output = Jet2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    #[inline]
    fn div(self, rhs: f64) -> Jet2 {
        self * (1.0 / rhs)
    }
}
