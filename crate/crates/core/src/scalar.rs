//! A minimal scalar abstraction so coordinate charts can run on plain `f64`
//! (fast roundtrip tests) and on [`Jet2`] (derivative propagation through the
//! chart) from a single implementation.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::jet::Jet2;

pub trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn cst(v: f64) -> Self;
    fn value(self) -> f64;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sqrt(self) -> Self;
    fn atan2(self, x: Self) -> Self;
    fn powi(self, n: i32) -> Self;

    /// ½·ln((1+t)/(1−t)) written as ln of a quotient so it stays exact on jets;
    /// callers guarantee num/den > 0.
    fn artanh_ratio(num: Self, den: Self) -> Self {
        (num / den).ln() * Self::cst(0.5)
    }
}

impl Scalar for f64 {
    fn cst(v: f64) -> Self {
        v
    }
    fn value(self) -> f64 {
        self
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn sinh(self) -> Self {
        f64::sinh(self)
    }
    fn cosh(self) -> Self {
        f64::cosh(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn atan2(self, x: Self) -> Self {
        f64::atan2(self, x)
    }
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }
}

impl Scalar for Jet2 {
    fn cst(v: f64) -> Self {
        Jet2::constant(v)
    }
    fn value(self) -> f64 {
        self.v
    }
    fn sin(self) -> Self {
        Jet2::sin(self)
    }
    fn cos(self) -> Self {
        Jet2::cos(self)
    }
    fn sinh(self) -> Self {
        Jet2::sinh(self)
    }
    fn cosh(self) -> Self {
        Jet2::cosh(self)
    }
    fn exp(self) -> Self {
        Jet2::exp(self)
    }
    fn ln(self) -> Self {
        Jet2::ln(self)
    }
    fn sqrt(self) -> Self {
        Jet2::sqrt(self)
    }
    fn atan2(self, x: Self) -> Self {
        Jet2::atan2(self, x)
    }
    fn powi(self, n: i32) -> Self {
        Jet2::powi(self, n)
    }
}

/// `Mul<f64>` shorthand usable in generic chart code.
pub fn scale<S: Scalar>(s: S, c: f64) -> S {
    s * S::cst(c)
}
