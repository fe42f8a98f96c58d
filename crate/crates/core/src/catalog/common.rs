//! Shared building blocks for the class constructors: recurring component
//! assemblies, domain predicates and entry plumbing.

use std::sync::Arc;

use crate::charts::{Chart, DOMAIN_MARGIN};
use crate::geometry::{CovectorField, DomainPred, PoincareGenerator, TwoFormField};
use crate::jet::Jet2;

use super::{
    Build, ChartFn, ClassEntry, DomainFn, GensFn, MaxwellCtor, ParamSpec, PotentialCtor, SlotsFn,
};

pub(crate) use crate::geometry::PoincareGenerator as G;

#[allow(clippy::too_many_arguments)]
pub(crate) fn potential_entry(
    id: &'static str,
    description: &'static str,
    algebra: &'static str,
    params: Vec<ParamSpec>,
    slot_specs: SlotsFn,
    generators: GensFn,
    domain: DomainFn,
    chart: Option<ChartFn>,
    ctor: PotentialCtor,
) -> ClassEntry {
    ClassEntry {
        id: id.parse().expect("registry id"),
        description,
        algebra,
        empty: false,
        params,
        slot_specs,
        generators,
        domain,
        chart,
        build: Build::Potential(ctor),
        preset_example: None,
        custom_draw: None,
    }
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn maxwell_entry(
    id: &'static str,
    description: &'static str,
    algebra: &'static str,
    params: Vec<ParamSpec>,
    slot_specs: SlotsFn,
    generators: GensFn,
    domain: DomainFn,
    chart: Option<ChartFn>,
    ctor: MaxwellCtor,
) -> ClassEntry {
    ClassEntry {
        id: id.parse().expect("registry id"),
        description,
        algebra,
        empty: false,
        params,
        slot_specs,
        generators,
        domain,
        chart,
        build: Build::Maxwell(ctor),
        preset_example: None,
        custom_draw: None,
    }
}

pub(crate) fn empty_entry(
    id: &'static str,
    description: &'static str,
    algebra: &'static str,
    params: Vec<ParamSpec>,
    generators: GensFn,
) -> ClassEntry {
    ClassEntry {
        id: id.parse().expect("registry id"),
        description,
        algebra,
        empty: true,
        params,
        slot_specs: super::no_slots(),
        generators,
        domain: Box::new(|_| dom_all()),
        chart: None,
        build: Build::Empty,
        preset_example: None,
        custom_draw: None,
    }
}

pub(crate) fn dom_all() -> DomainPred {
    Arc::new(|_| true)
}

pub(crate) fn dom_from_chart(c: Chart) -> DomainPred {
    Arc::new(move |x| c.domain(x.0))
}

/// x² + x⁴ bounded away from the light-cone surface (positive side).
pub(crate) fn dom_parabolic() -> DomainPred {
    Arc::new(|x| x.0[1] + x.0[3] >= DOMAIN_MARGIN)
}

/// |x² − x⁴| bounded away from zero.
pub(crate) fn dom_null_sep() -> DomainPred {
    Arc::new(|x| (x.0[1] - x.0[3]).abs() >= DOMAIN_MARGIN)
}

/// x² − x⁴ strictly positive (logarithms of the difference appear).
pub(crate) fn dom_pos_null_sep() -> DomainPred {
    Arc::new(|x| x.0[1] - x.0[3] >= DOMAIN_MARGIN)
}

/// Spatial radius ρ = |(x¹, x², x³)| bounded away from the axis.
pub(crate) fn dom_spatial_radius() -> DomainPred {
    Arc::new(|x| x.0[0] * x.0[0] + x.0[1] * x.0[1] + x.0[2] * x.0[2] >= DOMAIN_MARGIN)
}

/// (x¹)² + (x²)² − (x⁴)² bounded away from the cone.
pub(crate) fn dom_spacelike_12() -> DomainPred {
    Arc::new(|x| x.0[0] * x.0[0] + x.0[1] * x.0[1] - x.0[3] * x.0[3] >= DOMAIN_MARGIN)
}

pub(crate) fn seed(x: crate::geometry::SpacetimePoint) -> [Jet2; 4] {
    Jet2::seed_coordinates(x.0)
}

pub(crate) fn zero() -> Jet2 {
    Jet2::constant(0.0)
}

/// The recurring parabolic component pattern:
/// A₁ = C₂t + C₃, A₂ = ½C₂t² + C₃t + C₁, A₄ = A₂ + C₂.
pub(crate) fn parabolic_components(c1: Jet2, c2: Jet2, c3: Jet2, a3: Jet2, t: Jet2) -> [Jet2; 4] {
    let a1 = c2 * t + c3;
    let a2 = c2 * t * t * 0.5 + c3 * t + c1;
    [a1, a2, a3, a2 + c2]
}

/// The recurring null-pair component pattern:
/// A₁ = −t₂Φ + Ψ, A₂ = −½Φ(t₂²+t₃²) + t₂Ψ − t₃Ξ + Θ, A₃ = t₃Φ + Ξ, A₄ = A₂ − Φ.
pub(crate) fn nullpair_components(
    phi: Jet2,
    psi: Jet2,
    xi: Jet2,
    theta: Jet2,
    t2: Jet2,
    t3: Jet2,
) -> [Jet2; 4] {
    let a1 = psi - t2 * phi;
    let a2 = theta + t2 * psi - t3 * xi - (t2 * t2 + t3 * t3) * phi * 0.5;
    let a3 = t3 * phi + xi;
    [a1, a2, a3, a2 - phi]
}

/// Rotating pair: (C₁cos φ + C₂sin φ, −C₁sin φ + C₂cos φ).
pub(crate) fn rotation_pair(c1: Jet2, c2: Jet2, phi: Jet2) -> (Jet2, Jet2) {
    let (s, c) = (phi.sin(), phi.cos());
    (c1 * c + c2 * s, c2 * c - c1 * s)
}

/// Boosting pair: (C₁ch φ + C₂sh φ, −C₁sh φ − C₂ch φ).
pub(crate) fn boost_pair(c1: Jet2, c2: Jet2, phi: Jet2) -> (Jet2, Jet2) {
    let (s, c) = (phi.sinh(), phi.cosh());
    (c1 * c + c2 * s, -(c1 * s + c2 * c))
}

pub(crate) fn gens_const(list: &[PoincareGenerator]) -> GensFn {
    let v: Vec<PoincareGenerator> = list.to_vec();
    Box::new(move |_| v.clone())
}

/// Wrap a plain component closure as a potential constructor with a fixed domain.
pub(crate) fn field(
    domain: DomainPred,
    eval: impl Fn(crate::geometry::SpacetimePoint) -> [Jet2; 4] + Send + Sync + 'static,
) -> CovectorField {
    CovectorField::new(domain, eval)
}

pub(crate) fn two_form_field(
    domain: DomainPred,
    eval: impl Fn(crate::geometry::SpacetimePoint) -> [Jet2; 6] + Send + Sync + 'static,
) -> TwoFormField {
    TwoFormField::new(domain, eval)
}
