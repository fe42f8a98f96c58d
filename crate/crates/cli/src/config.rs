//! Run configuration: a TOML document naming a class, its parameters and
//! its slot functions (polynomial coefficient tables or the named preset).

use std::collections::BTreeMap;

use serde::Deserialize;

use invpot_core::catalog::{self, ClassEntry, Params, Poly, Slot};
use invpot_core::Error;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Class id under the grammar `P<dim>.<index>[variant]` / `C<dim>.<index>`.
    pub class: String,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    /// Named slot preset; `"example"` selects the catalog's worked example.
    #[serde(default)]
    pub preset: Option<String>,
    /// Explicit slot definitions, one per slot position, in catalog order.
    #[serde(default, rename = "slot")]
    pub slots: Vec<SlotDef>,
    #[serde(default = "default_points")]
    pub points: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_tol")]
    pub tol: f64,
}

fn default_points() -> usize {
    100
}
fn default_seed() -> u64 {
    42
}
fn default_tol() -> f64 {
    1e-9
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlotDef {
    pub label: String,
    pub terms: Vec<TermDef>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDef {
    pub exps: Vec<u32>,
    pub coeff: f64,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, Error> {
        toml::from_str(text).map_err(|e| Error::Config(format!("bad config: {e}")))
    }

    pub fn params(&self) -> Params {
        self.params.clone()
    }

    /// Resolve the entry named by the config (variant families included).
    pub fn entry(&self) -> Result<&'static ClassEntry, Error> {
        catalog::registry().resolve(&self.class, &self.params())
    }

    /// Materialize the configured slots against the entry's slot specs.
    /// Returns `None` when neither a preset nor explicit slots were given
    /// (callers fall back to random draws).
    pub fn slots(&self, entry: &ClassEntry) -> Result<Option<Vec<Slot>>, Error> {
        if let Some(name) = &self.preset {
            if name != "example" {
                return Err(Error::Config(format!("unknown preset `{name}`")));
            }
            let preset = entry.preset_example.as_ref().ok_or_else(|| {
                Error::Config(format!("{} defines no `example` preset", entry.id))
            })?;
            return Ok(Some(preset(&self.params())));
        }
        if self.slots.is_empty() {
            return Ok(None);
        }
        let specs = (entry.slot_specs)(&self.params());
        if specs.len() != self.slots.len() {
            return Err(Error::Config(format!(
                "{} expects {} slots, config provides {}",
                entry.id,
                specs.len(),
                self.slots.len()
            )));
        }
        let mut out = Vec::new();
        for (spec, def) in specs.iter().zip(&self.slots) {
            for term in &def.terms {
                if term.exps.len() != spec.arity {
                    return Err(Error::Config(format!(
                        "slot `{}` has arity {}, term has {} exponents",
                        def.label,
                        spec.arity,
                        term.exps.len()
                    )));
                }
            }
            let poly = Poly::new(
                spec.arity,
                def.terms
                    .iter()
                    .map(|t| (t.exps.clone(), t.coeff))
                    .collect(),
            );
            out.push(Slot::poly(def.label.clone(), poly));
        }
        Ok(Some(out))
    }
}

/// Parse repeated `--param key=value` flags.
pub fn parse_param_flags(flags: &[String]) -> Result<Params, Error> {
    let mut out = Params::new();
    for flag in flags {
        let (k, v) = flag
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("bad --param `{flag}`, expected key=value")))?;
        let value: f64 = v
            .parse()
            .map_err(|_| Error::Config(format!("bad --param value in `{flag}`")))?;
        out.insert(k.trim().to_string(), value);
    }
    Ok(out)
}
