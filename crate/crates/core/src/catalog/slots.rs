//! Function slots: the user-supplied smooth functions occupying the
//! "arbitrary function" positions of a class formula. Slots evaluate on
//! jets, so their first and second derivatives are exact.

use std::sync::Arc;

use rand::Rng;

use crate::jet::Jet2;
use crate::{Error, Result};

/// Static description of one slot position of a class.
#[derive(Clone, Debug, PartialEq)]
pub struct SlotSpec {
    pub label: &'static str,
    pub arity: usize,
    /// Human-readable description of the arguments the slot receives.
    pub args: &'static str,
}

impl SlotSpec {
    pub const fn new(label: &'static str, arity: usize, args: &'static str) -> Self {
        SlotSpec { label, arity, args }
    }
}

/// A smooth map from `arity` many jets to one jet.
#[derive(Clone)]
#[allow(clippy::type_complexity)]
pub struct Slot {
    pub label: String,
    pub arity: usize,
    f: Arc<dyn Fn(&[Jet2]) -> Jet2 + Send + Sync>,
}

impl Slot {
    pub fn from_fn(
        label: impl Into<String>,
        arity: usize,
        f: impl Fn(&[Jet2]) -> Jet2 + Send + Sync + 'static,
    ) -> Self {
        Slot {
            label: label.into(),
            arity,
            f: Arc::new(f),
        }
    }

    pub fn poly(label: impl Into<String>, p: Poly) -> Self {
        let arity = p.arity;
        Slot::from_fn(label, arity, move |args| p.eval(args))
    }

    /// The constant-zero slot of a given arity.
    pub fn zero(label: impl Into<String>, arity: usize) -> Self {
        Slot::from_fn(label, arity, |_| Jet2::constant(0.0))
    }

    /// The identity slot t ↦ t.
    pub fn identity(label: impl Into<String>) -> Self {
        Slot::from_fn(label, 1, |args| args[0])
    }

    pub fn call(&self, args: &[Jet2]) -> Jet2 {
        debug_assert_eq!(args.len(), self.arity, "slot `{}`", self.label);
        (self.f)(args)
    }
}

/// Check a slot assignment against the expected spec list.
pub fn check_slots(specs: &[SlotSpec], slots: &[Slot]) -> Result<()> {
    if specs.len() != slots.len() {
        return Err(Error::ArityMismatch {
            label: format!("slot list (expected {} slots)", specs.len()),
            expected: specs.len(),
            got: slots.len(),
        });
    }
    for (spec, slot) in specs.iter().zip(slots) {
        if spec.arity != slot.arity {
            return Err(Error::ArityMismatch {
                label: spec.label.to_string(),
                expected: spec.arity,
                got: slot.arity,
            });
        }
    }
    Ok(())
}

/// A sparse multivariate polynomial, the default slot family.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub arity: usize,
    /// (exponent tuple, coefficient)
    pub terms: Vec<(Vec<u32>, f64)>,
}

impl Poly {
    pub fn new(arity: usize, terms: Vec<(Vec<u32>, f64)>) -> Self {
        debug_assert!(terms.iter().all(|(e, _)| e.len() == arity));
        Poly { arity, terms }
    }

    pub fn zero(arity: usize) -> Self {
        Poly {
            arity,
            terms: vec![],
        }
    }

    pub fn eval(&self, args: &[Jet2]) -> Jet2 {
        let mut acc = Jet2::constant(0.0);
        for (exps, coeff) in &self.terms {
            let mut term = Jet2::constant(*coeff);
            for (k, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term * args[k].powi(e as i32);
                }
            }
            acc = acc + term;
        }
        acc
    }

    pub fn eval_f64(&self, args: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(exps, c)| {
                c * exps
                    .iter()
                    .enumerate()
                    .map(|(k, &e)| args[k].powi(e as i32))
                    .product::<f64>()
            })
            .sum()
    }

    /// All monomials of total degree ≤ `max_deg` with coefficients drawn
    /// uniformly from [−1, 1].
    pub fn random(rng: &mut impl Rng, arity: usize, max_deg: u32) -> Self {
        let mut terms = Vec::new();
        let mut exps = vec![0u32; arity];
        loop {
            if exps.iter().sum::<u32>() <= max_deg {
                terms.push((exps.clone(), rng.gen_range(-1.0..1.0)));
            }
            // odometer over exponent tuples bounded by max_deg per slot
            let mut k = 0;
            loop {
                if k == arity {
                    return Poly { arity, terms };
                }
                exps[k] += 1;
                if exps[k] > max_deg {
                    exps[k] = 0;
                    k += 1;
                } else {
                    break;
                }
            }
        }
    }

    /// d/dt of a univariate polynomial.
    pub fn derivative1(&self) -> Poly {
        assert_eq!(self.arity, 1);
        Poly {
            arity: 1,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[0] > 0)
                .map(|(e, c)| (vec![e[0] - 1], c * f64::from(e[0])))
                .collect(),
        }
    }

    /// ∫ dt of a univariate polynomial, constant of integration 0.
    pub fn antiderivative1(&self) -> Poly {
        assert_eq!(self.arity, 1);
        Poly {
            arity: 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (vec![e[0] + 1], c / f64::from(e[0] + 1)))
                .collect(),
        }
    }

    /// t · p(t) for univariate polynomials.
    pub fn mul_t(&self) -> Poly {
        assert_eq!(self.arity, 1);
        Poly {
            arity: 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (vec![e[0] + 1], *c))
                .collect(),
        }
    }

    pub fn scale(&self, k: f64) -> Poly {
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.arity, other.arity);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Poly {
            arity: self.arity,
            terms,
        }
    }
}

/// Random polynomial slot (total degree ≤ 3).
pub fn random_poly_slot(rng: &mut impl Rng, label: &str, arity: usize) -> Slot {
    Slot::poly(label, Poly::random(rng, arity, 3))
}

/// Second default family: sin or exp composed over a degree-1 polynomial.
/// Exercises nonzero second derivatives without domain hazards.
pub fn random_elementary_slot(rng: &mut impl Rng, label: &str, arity: usize) -> Slot {
    let coeffs: Vec<f64> = (0..=arity).map(|_| rng.gen_range(-0.5..0.5)).collect();
    let use_sin = rng.gen_bool(0.5);
    let amp = rng.gen_range(-1.0..1.0);
    Slot::from_fn(label, arity, move |args| {
        let mut lin = Jet2::constant(coeffs[0]);
        for (k, a) in args.iter().enumerate() {
            lin = lin + *a * coeffs[k + 1];
        }
        if use_sin {
            lin.sin() * amp
        } else {
            lin.exp() * amp
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn poly_eval_and_calculus() {
        // p(t) = 2t³ − t + 5
        let p = Poly::new(1, vec![(vec![3], 2.0), (vec![1], -1.0), (vec![0], 5.0)]);
        assert_eq!(p.eval_f64(&[2.0]), 16.0 - 2.0 + 5.0);
        let dp = p.derivative1();
        assert_eq!(dp.eval_f64(&[2.0]), 24.0 - 1.0);
        let ip = dp.antiderivative1();
        // antiderivative of the derivative recovers p up to the constant
        assert_eq!(ip.eval_f64(&[2.0]) + 5.0, p.eval_f64(&[2.0]));

        let j = p.eval(&[Jet2::coordinate(0, 2.0)]);
        assert_eq!(j.g[0], dp.eval_f64(&[2.0]));
    }

    #[test]
    fn random_poly_has_all_low_degree_monomials() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let p = Poly::random(&mut rng, 2, 3);
        // C(3+2,2) = 10 monomials of total degree ≤ 3 in two variables
        assert_eq!(p.terms.len(), 10);
        let p3 = Poly::random(&mut rng, 3, 3);
        assert_eq!(p3.terms.len(), 20);
    }

    #[test]
    fn slot_arity_checking() {
        let specs = [SlotSpec::new("C1", 2, "(r, y4)")];
        let ok = [Slot::zero("C1", 2)];
        assert!(check_slots(&specs, &ok).is_ok());
        let bad = [Slot::zero("C1", 1)];
        assert!(matches!(
            check_slots(&specs, &bad),
            Err(Error::ArityMismatch { .. })
        ));
    }
}
