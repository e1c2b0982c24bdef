//! Polynomials over F_q and the cyclic group algebra R_{q,n} = F_q[x]/(x^n − 1).

mod cyclotomic;
mod poly;
mod ring;
pub(crate) mod text;

pub use cyclotomic::{cyclotomic_cosets, factor_xn_minus_1, is_squarefree, CyclotomicCoset};
pub use poly::Poly;

pub use ring::{RingElement, RingSpec};
