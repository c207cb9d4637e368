//! Additive valuations and the norm bookkeeping built on them.
//!
//! Every magnitude in the ultrametric modules is a valuation comparison:
//! the norm of a nonzero scalar is `base^(-v)` and is never materialized
//! as a floating-point number. `Infinity` encodes the zero element.

use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// Additive valuation of a field element. Larger valuation means smaller norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    /// Valuation of the zero element.
    Infinity,
}

impl Valuation {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinity)
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(*v),
            Valuation::Infinity => None,
        }
    }

    /// Valuation of a product: valuations add.
    pub fn add(&self, other: &Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }

    /// Valuation of an m-th power.
    pub fn scale(&self, m: i64) -> Valuation {
        match self {
            Valuation::Finite(v) => Valuation::Finite(v * m),
            Valuation::Infinity => Valuation::Infinity,
        }
    }

    pub fn min(self, other: Valuation) -> Valuation {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Valuation) -> Valuation {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
            (Valuation::Infinity, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Finite(_), Valuation::Infinity) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "+inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinity => s.serialize_none(),
        }
    }
}

/// How a backend renders `base^(-v)` when a norm leaves the library.
///
/// Comparisons never go through this; it exists for reports and display.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormBase {
    /// p-adic norm `p^(-v)`.
    Prime(u64),
    /// t-adic norm `|t|^v` with the uniformizer t of norm < 1.
    Uniformizer,
}

impl NormBase {
    /// Render a valuation as a `{base, exponent}` JSON pair, or `"zero"`.
    pub fn norm_json(&self, v: Valuation) -> serde_json::Value {
        match (self, v) {
            (_, Valuation::Infinity) => serde_json::Value::String("zero".into()),
            (NormBase::Prime(p), Valuation::Finite(v)) => serde_json::json!({
                "base": p,
                "exponent": -v,
            }),
            (NormBase::Uniformizer, Valuation::Finite(v)) => serde_json::json!({
                "base": "t",
                "exponent": v,
            }),
        }
    }
}

/// A reported magnitude: an exact valuation plus whether the underlying
/// quantity was computed from exactly-represented scalars.
///
/// Inexact magnitudes are always conservative: the reported norm is a lower
/// bound on the true norm, so a verified `lhs >= rhs` stays sound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Magnitude {
    pub valuation: Valuation,
    pub exact: bool,
}

impl Magnitude {
    pub fn exact(v: Valuation) -> Self {
        Magnitude {
            valuation: v,
            exact: true,
        }
    }

    pub fn inexact(v: Valuation) -> Self {
        Magnitude {
            valuation: v,
            exact: false,
        }
    }

    /// Norm of the pointwise maximum of two magnitudes (minimum valuation).
    pub fn norm_max(self, other: Magnitude) -> Magnitude {
        let valuation = self.valuation.min(other.valuation);
        // The max is exact when the winning side is exact and the losing side
        // cannot secretly exceed it (its reported norm is already <=).
        let exact = match self.valuation.cmp(&other.valuation) {
            Ordering::Less => self.exact && (other.exact || other.valuation >= self.valuation),
            Ordering::Greater => other.exact && (self.exact || self.valuation >= other.valuation),
            Ordering::Equal => self.exact && other.exact,
        };
        Magnitude { valuation, exact }
    }

    /// Does this norm dominate (>=) the other? Norm order reverses valuations.
    pub fn norm_ge(&self, other: &Magnitude) -> bool {
        self.valuation <= other.valuation
    }

    pub fn to_json(&self, base: NormBase) -> serde_json::Value {
        serde_json::json!({
            "valuation": self.valuation.finite(),
            "norm": base.norm_json(self.valuation),
            "exact": self.exact,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_places_infinity_last() {
        assert!(Valuation::Finite(5) < Valuation::Infinity);
        assert!(Valuation::Finite(-3) < Valuation::Finite(0));
        assert_eq!(Valuation::Infinity, Valuation::Infinity);
    }

    #[test]
    fn product_valuations_add() {
        assert_eq!(
            Valuation::Finite(2).add(&Valuation::Finite(-5)),
            Valuation::Finite(-3)
        );
        assert_eq!(
            Valuation::Finite(2).add(&Valuation::Infinity),
            Valuation::Infinity
        );
    }

    #[test]
    fn norm_max_prefers_smaller_valuation() {
        let a = Magnitude::exact(Valuation::Finite(0));
        let b = Magnitude::exact(Valuation::Finite(3));
        assert_eq!(a.norm_max(b).valuation, Valuation::Finite(0));
        assert!(a.norm_max(b).exact);
        assert!(a.norm_ge(&b));
        assert!(!b.norm_ge(&a));
    }

    #[test]
    fn norm_json_shapes() {
        let p = NormBase::Prime(5);
        assert_eq!(
            p.norm_json(Valuation::Finite(3)),
            serde_json::json!({"base": 5, "exponent": -3})
        );
        assert_eq!(
            p.norm_json(Valuation::Infinity),
            serde_json::Value::String("zero".into())
        );
        let t = NormBase::Uniformizer;
        assert_eq!(
            t.norm_json(Valuation::Finite(-2)),
            serde_json::json!({"base": "t", "exponent": -2})
        );
    }
}
