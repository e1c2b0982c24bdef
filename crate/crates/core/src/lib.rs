//! Linear permutations of F_{q^n} through the primitive idempotents of
//! R_{q,n} = F_q[x]/(x^n − 1): permutation tests, compositional inverses,
//! involutions, A-complete checks and α-cyclic shifts, with brute-force
//! oracles for small fields.

pub mod cli;
pub mod error;
pub mod fields;
pub mod idempotents;
pub mod linearized;
pub mod oracle;
pub mod polyring;
pub mod shifts;

pub use error::{Error, Result};
pub use fields::{ExtElement, ExtFieldSpec, FieldElement, FieldSpec};
pub use idempotents::{ComponentVector, IdempotentBasis};
pub use linearized::LinearizedPoly;
pub use polyring::{Poly, RingElement, RingSpec};
