//! Scalar backends: exact fixed-precision arithmetic over ultrametric
//! valued fields.
//!
//! Two production backends (p-adic and rational Laurent series) plus an
//! exact-rational oracle used by tests. All three implement [`ValuedField`];
//! everything above this module is generic over it.

pub mod laurent;
pub mod padic;
pub mod rational;

pub use laurent::{LaurentField, LaurentScalar};
pub use padic::{PadicField, PadicScalar};
pub use rational::{RationalField, RationalScalar};

use crate::valuation::{NormBase, Valuation};
use num::BigRational;
use thiserror::Error;

/// Default relative precision (digits / series coefficients).
pub const DEFAULT_PRECISION: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("effective precision exhausted (operand indistinguishable from zero)")]
    PrecisionExhausted,
    #[error("scalar literal malformed: {0}")]
    BadLiteral(String),
}

/// How much of a stored element is trustworthy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    /// The stored representation is the element, exactly.
    Exact,
    /// Nonzero with this many correct leading digits/coefficients.
    Truncated(usize),
    /// Cancelled to zero at working precision; the true valuation is only
    /// known to be at least the recorded bound.
    ZeroAtPrecision(i64),
}

/// A complete ultrametric valued field with fixed relative precision.
///
/// Elements are plain data; the field object owns configuration (prime,
/// precision) and performs all arithmetic. Operations that can lose the last
/// trustworthy digit return `Err(PrecisionExhausted)` instead of guessing.
pub trait ValuedField: Clone + std::fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static;

    fn name(&self) -> &'static str;
    fn norm_base(&self) -> NormBase;
    fn precision(&self) -> usize;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_integer(&self, n: i64) -> Self::Elem;
    fn from_rational(&self, q: &BigRational) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ScalarError>;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ScalarError>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ScalarError>;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ScalarError>;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn pow(&self, a: &Self::Elem, m: u32) -> Result<Self::Elem, ScalarError> {
        let mut acc = self.one();
        for _ in 0..m {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Exact valuation; `Infinity` for zero and zero-at-precision elements
    /// (both compare as indistinguishable from zero).
    fn valuation(&self, a: &Self::Elem) -> Valuation;

    fn exactness(&self, a: &Self::Elem) -> Exactness;

    fn is_zero_at_precision(&self, a: &Self::Elem) -> bool {
        self.valuation(a).is_infinite()
    }

    /// Valuation of a nonzero integer constant of the ambient field
    /// (denominators of bound statements such as binomial dimensions).
    fn integer_valuation(&self, n: &num::BigUint) -> Valuation;

    /// Canonical rational lift of the stored representation, when one exists.
    /// Used by the diagonalizability probe; `None` means not liftable.
    fn rational_lift(&self, a: &Self::Elem) -> Option<BigRational>;

    /// Serialize an element to its file-format literal.
    fn elem_to_json(&self, a: &Self::Elem) -> serde_json::Value;

    /// Parse an element from its file-format literal. Round-trips bit-exactly
    /// with [`elem_to_json`].
    fn elem_from_json(&self, v: &serde_json::Value) -> Result<Self::Elem, ScalarError>;

    /// Candidate scalars for exhaustive searches, in the documented
    /// deterministic enumeration order (zero excluded).
    fn fu_candidates(&self, digit_bound: u64) -> Vec<Self::Elem>;
}

/// Parse a `"numer/denom"` (or plain integer) string into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| ScalarError::BadLiteral(format!("{s:?}: {e}")))
}

/// Render a rational as `"numer/denom"`, or `"numer"` when integral.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
