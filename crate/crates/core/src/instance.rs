//! Instance files and run configuration for the CLI.
//!
//! An instance is a JSON document fixing the prime, the ambient variables,
//! the module components, and the ideal I:
//!
//! ```json
//! {
//!   "prime": 32003,
//!   "vars": ["x", "y"],
//!   "module": [{"shift": 0, "denominator": [[2, 0]]}],
//!   "ideal": [[1, 0]]
//! }
//! ```
//!
//! A component's `numerator` may be omitted, meaning the unit ideal (1).

use crate::error::Error;
use crate::linalg::{PrimeField, DEFAULT_PRIME};
use crate::module::{Component, GradedModule};
use crate::monomial::{Monomial, MonomialIdeal};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComponentSpec {
    #[serde(default)]
    pub shift: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numerator: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator: Option<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct InstanceFile {
    pub prime: u64,
    pub vars: Vec<String>,
    pub module: Vec<ComponentSpec>,
    pub ideal: Vec<Vec<u32>>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let inst: InstanceFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidInstance(e.to_string()))?;
        inst.validate()?;
        Ok(inst)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.prime <= 1000 {
            return Err(Error::InvalidInstance(format!(
                "prime must exceed 1000, got {}",
                self.prime
            )));
        }
        PrimeField::new(self.prime).map_err(|e| Error::InvalidInstance(e.to_string()))?;
        let m = self.vars.len();
        for (i, exps) in self.ideal.iter().enumerate() {
            if exps.len() != m {
                return Err(Error::InvalidInstance(format!(
                    "ideal generator {i} has {} exponents, expected {m}",
                    exps.len()
                )));
            }
        }
        if self.module.is_empty() {
            return Err(Error::InvalidInstance("module has no components".into()));
        }
        for (ci, c) in self.module.iter().enumerate() {
            for exps in c
                .numerator
                .iter()
                .flatten()
                .chain(c.denominator.iter().flatten())
            {
                if exps.len() != m {
                    return Err(Error::InvalidInstance(format!(
                        "component {ci} has an exponent vector of length {}, expected {m}",
                        exps.len()
                    )));
                }
            }
        }
        let module = self.to_module()?;
        if module.is_zero() {
            return Err(Error::InvalidInstance(
                "module has no nonzero component".into(),
            ));
        }
        Ok(())
    }

    /// True when the prime is small enough that Monte Carlo genericity
    /// deserves a warning.
    pub fn small_prime(&self) -> bool {
        self.prime < DEFAULT_PRIME
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.prime).expect("validated")
    }

    pub fn to_module(&self) -> Result<GradedModule, Error> {
        let m = self.vars.len();
        let ideal_of = |gens: &Option<Vec<Vec<u32>>>, empty_is_unit: bool| {
            match gens {
                Some(gs) => MonomialIdeal::from_gens(
                    m,
                    gs.iter().map(|e| Monomial::new(e.clone())).collect(),
                ),
                None => Ok(if empty_is_unit {
                    MonomialIdeal::unit(m)
                } else {
                    MonomialIdeal::zero(m)
                }),
            }
        };
        let components = self
            .module
            .iter()
            .map(|c| {
                Ok(Component {
                    shift: c.shift,
                    numerator: ideal_of(&c.numerator, true)?,
                    denominator: ideal_of(&c.denominator, false)?,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        GradedModule::new(self.field(), m, components)
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal, Error> {
        MonomialIdeal::from_gens(
            self.vars.len(),
            self.ideal.iter().map(|e| Monomial::new(e.clone())).collect(),
        )
    }
}

/// Runtime knobs with the documented defaults.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
    pub n_max: usize,
    pub n_cap: usize,
    pub k_max: usize,
    pub window: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 1,
            trials: 5,
            n_max: 10,
            n_cap: 200,
            k_max: 20,
            window: 3,
        }
    }
}

impl RunConfig {
    pub fn series_params(&self) -> crate::asymptotics::SeriesParams {
        crate::asymptotics::SeriesParams {
            trials: self.trials,
            seed: self.seed,
            n_cap: self.n_cap,
            k_max: self.k_max,
            window: self.window,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
        "prime": 32003,
        "vars": ["x", "y"],
        "module": [{"shift": 0, "denominator": [[2, 0]]}],
        "ideal": [[1, 0]]
    }"#;

    #[test]
    fn parse_sample() {
        let inst = InstanceFile::from_json(SAMPLE).unwrap();
        assert_eq!(inst.vars.len(), 2);
        let m = inst.to_module().unwrap();
        assert_eq!(m.hilbert_value(1), 2);
        let i = inst.to_ideal().unwrap();
        assert_eq!(i.gens().len(), 1);
    }

    #[test]
    fn round_trip_is_identity() {
        let inst = InstanceFile::from_json(SAMPLE).unwrap();
        let again = InstanceFile::from_json(&inst.to_json()).unwrap();
        assert_eq!(inst, again);
    }

    #[test]
    fn rejects_bad_prime() {
        let text = SAMPLE.replace("32003", "91");
        assert!(InstanceFile::from_json(&text).is_err());
    }

    #[test]
    fn rejects_mismatched_exponents() {
        let text = SAMPLE.replace("[[1, 0]]", "[[1, 0, 0]]");
        assert!(InstanceFile::from_json(&text).is_err());
    }

    #[test]
    fn rejects_zero_module() {
        let text = SAMPLE.replace("[[2, 0]]", "[[0, 0]]");
        assert!(InstanceFile::from_json(&text).is_err());
    }
}
