//! Monomial ideals and their square powers `I^[m]`.
//!
//! The crate covers exact monomial-ideal arithmetic, irreducible and
//! primary decompositions, graded Betti tables over ℚ and 𝔽_p, integral
//! closures via Newton polyhedra, and a harness that checks how all of
//! these behave under `I ↦ I^[m]` on random corpora.

pub mod caps;
pub mod closure;
pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod format;
pub mod ideal;
pub mod lp;
pub mod monomial;
pub mod probes;
pub mod resolution;
pub mod verify;

pub use caps::ResourceCaps;
pub use error::{Error, Result};
pub use ideal::{is_monomial_regular_sequence, FieldSpec, MonomialIdeal};
pub use monomial::{Exp, ExponentVector};
pub use resolution::BettiTable;
