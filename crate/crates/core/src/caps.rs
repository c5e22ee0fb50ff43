use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Limits on the size of homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceCaps {
    /// Maximum number of minimal generators (`SQP_MAX_GENS`).
    pub max_gens: usize,
    /// Maximum number of variables (`SQP_MAX_VARS`).
    pub max_vars: usize,
    /// Maximum size of the lcm lattice (`SQP_MAX_LATTICE`).
    pub max_lattice: usize,
    /// Maximum number of lattice points searched for integral closures
    /// (`SQP_MAX_BOX`).
    pub max_box: usize,
}

impl Default for ResourceCaps {
    fn default() -> Self {
        ResourceCaps { max_gens: 64, max_vars: 10, max_lattice: 200_000, max_box: 1_000_000 }
    }
}

impl ResourceCaps {
    /// Defaults overridden by the `SQP_MAX_*` environment variables when set.
    pub fn from_env() -> Result<Self> {
        let mut caps = ResourceCaps::default();
        for (var, slot) in [
            ("SQP_MAX_GENS", &mut caps.max_gens),
            ("SQP_MAX_VARS", &mut caps.max_vars),
            ("SQP_MAX_LATTICE", &mut caps.max_lattice),
            ("SQP_MAX_BOX", &mut caps.max_box),
        ] {
            if let Ok(v) = std::env::var(var) {
                *slot = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::input(format!("{var} must be a nonnegative integer, got {v:?}")))?;
            }
        }
        Ok(caps)
    }

    pub(crate) fn check_ideal(&self, ideal: &MonomialIdeal) -> Result<()> {
        if ideal.n() > self.max_vars {
            return Err(Error::resource(format!(
                "{} variables exceeds the cap of {} (SQP_MAX_VARS)",
                ideal.n(),
                self.max_vars
            )));
        }
        // Faces are stored as u32 bitmasks.
        if ideal.n() > 31 {
            return Err(Error::resource("at most 31 variables are supported"));
        }
        if ideal.num_gens() > self.max_gens {
            return Err(Error::resource(format!(
                "{} generators exceeds the cap of {} (SQP_MAX_GENS)",
                ideal.num_gens(),
                self.max_gens
            )));
        }
        Ok(())
    }
}
