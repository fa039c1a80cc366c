//! Exact computation of Goto numbers of parameter ideals in numerical
//! semigroup rings `k[[x^G]]` and of pure-power monomial ideals in regular
//! local rings.

pub mod bounds;
pub mod chain;
pub mod colon;
pub mod error;
pub mod explorer;
pub mod expr;
pub mod family;
pub mod golden;
pub mod linalg;
pub mod par;
pub mod regular_local;
pub mod ring;
pub mod scalar;
pub mod semigroup;
pub mod subspace;

pub use colon::{
    colon_by_monomials, colon_by_monomials_at, colon_power, colon_power_at, conductor_dual_goto,
    contained_in_power_sum, dual_goto, goto_monomial, goto_number, goto_number_at,
    index_of_nilpotency,
};
pub use error::{Error, Result};
pub use ring::{canonicalize, member_of_principal, CanonicalIdeal, RingElement};
pub use scalar::{Field, Scalar};
pub use semigroup::NumericalSemigroup;
pub use subspace::TruncatedSubspace;
