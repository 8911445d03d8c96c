//! Extended reals and closed extended-real intervals.
//!
//! Operator values are closed intervals whose endpoints may be infinite
//! (tail-quantile operators attain half-lines at the edges of their
//! domains), so the interval type is built over an extended-real newtype
//! that forbids NaN and keeps a total order.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A real number or one of the two infinities. Never NaN.
#[derive(Clone, Copy, Debug)]
pub struct ExtReal(f64);

impl ExtReal {
    pub const NEG_INF: ExtReal = ExtReal(f64::NEG_INFINITY);
    pub const POS_INF: ExtReal = ExtReal(f64::INFINITY);

    /// Wraps a value that may be infinite. Panics on NaN.
    pub fn new(v: f64) -> Self {
        assert!(!v.is_nan(), "ExtReal cannot hold NaN");
        // Normalize -0.0 so Eq and Ord agree.
        ExtReal(if v == 0.0 { 0.0 } else { v })
    }

    /// Wraps a value that must be finite.
    pub fn finite(v: f64) -> Self {
        assert!(v.is_finite(), "expected a finite value, got {v}");
        Self::new(v)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other { self } else { other }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other { self } else { other }
    }
}

impl From<f64> for ExtReal {
    fn from(v: f64) -> Self {
        ExtReal::new(v)
    }
}

impl PartialEq for ExtReal {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        // NaN is excluded by construction, so this is a total numeric order.
        self.0.partial_cmp(&other.0).expect("ExtReal is never NaN")
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == f64::INFINITY {
            write!(f, "inf")
        } else if self.0 == f64::NEG_INFINITY {
            write!(f, "-inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

// JSON cannot encode IEEE infinities as numbers, so infinities round-trip
// as the strings "inf" / "-inf" and finite values as plain numbers.
impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0 == f64::INFINITY {
            s.serialize_str("inf")
        } else if self.0 == f64::NEG_INFINITY {
            s.serialize_str("-inf")
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => {
                if v.is_nan() {
                    Err(D::Error::custom("NaN is not a valid extended real"))
                } else {
                    Ok(ExtReal::new(v))
                }
            }
            Repr::Str(s) => match s.as_str() {
                "inf" | "+inf" => Ok(ExtReal::POS_INF),
                "-inf" => Ok(ExtReal::NEG_INF),
                other => Err(D::Error::custom(format!(
                    "expected a number, \"inf\" or \"-inf\", got {other:?}"
                ))),
            },
        }
    }
}

/// A closed extended-real interval `[lo, hi]`. Singletons have `lo == hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    lo: ExtReal,
    hi: ExtReal,
}

impl Interval {
    pub fn new(lo: ExtReal, hi: ExtReal) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        Interval { lo, hi }
    }

    /// Singleton interval at a finite point.
    pub fn point(v: f64) -> Self {
        let e = ExtReal::finite(v);
        Interval { lo: e, hi: e }
    }

    pub fn of(lo: f64, hi: f64) -> Self {
        Self::new(ExtReal::new(lo), ExtReal::new(hi))
    }

    pub fn lo(&self) -> ExtReal {
        self.lo
    }

    pub fn hi(&self) -> ExtReal {
        self.hi
    }

    pub fn is_singleton(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: ExtReal) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Midpoint of a finite interval; the finite endpoint value for
    /// singletons.
    pub fn midpoint(&self) -> f64 {
        if self.is_singleton() {
            return self.lo.value();
        }
        0.5 * (self.lo.value() + self.hi.value())
    }

    /// Minkowski sum. Infinities of the same sign combine; opposite
    /// infinities cannot meet on the same endpoint of valid operator
    /// values and would panic.
    pub fn minkowski_add(&self, other: &Interval) -> Interval {
        let add = |a: ExtReal, b: ExtReal| {
            let s = a.value() + b.value();
            assert!(!s.is_nan(), "inf - inf in interval sum");
            ExtReal::new(s)
        };
        Interval::new(add(self.lo, other.lo), add(self.hi, other.hi))
    }

    pub fn scale(&self, a: f64) -> Interval {
        assert!(a > 0.0);
        Interval::new(
            ExtReal::new(self.lo.value() * a),
            ExtReal::new(self.hi.value() * a),
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_singleton() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Interval order: `A <= B` iff `B₊ ⊂ A₊` and `A₋ ⊂ B₋`, which for closed
/// intervals reduces to comparing both endpoints.
pub fn interval_leq(a: &Interval, b: &Interval) -> bool {
    a.lo() <= b.lo() && a.hi() <= b.hi()
}

/// Interval order up to an additive slack scaled by the magnitude of the
/// endpoints. Used by property suites that compare floating-point curves.
pub fn interval_leq_tol(a: &Interval, b: &Interval, tol: f64) -> bool {
    let le = |x: ExtReal, y: ExtReal| {
        if x <= y {
            return true;
        }
        if !x.is_finite() || !y.is_finite() {
            return false;
        }
        let scale = 1f64.max(x.value().abs()).max(y.value().abs());
        x.value() <= y.value() + tol * scale
    };
    le(a.lo(), b.lo()) && le(a.hi(), b.hi())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_with_infinities() {
        assert!(ExtReal::NEG_INF < ExtReal::finite(-1e300));
        assert!(ExtReal::finite(1e300) < ExtReal::POS_INF);
        assert_eq!(ExtReal::new(-0.0), ExtReal::new(0.0));
        assert_eq!(
            ExtReal::new(-0.0).cmp(&ExtReal::new(0.0)),
            Ordering::Equal
        );
    }

    #[test]
    fn interval_order_examples() {
        // Disjoint ordered intervals compare.
        assert!(interval_leq(&Interval::of(0.0, 1.0), &Interval::of(2.0, 3.0)));
        // Overlapping but shifted intervals compare.
        assert!(interval_leq(&Interval::of(0.0, 2.0), &Interval::of(1.0, 3.0)));
        // Nested intervals are incomparable in both directions.
        assert!(!interval_leq(&Interval::of(0.0, 3.0), &Interval::of(1.0, 2.0)));
        assert!(!interval_leq(&Interval::of(1.0, 2.0), &Interval::of(0.0, 3.0)));
    }

    #[test]
    fn interval_order_is_reflexive_on_half_lines() {
        let h = Interval::new(ExtReal::NEG_INF, ExtReal::finite(2.0));
        assert!(interval_leq(&h, &h));
        assert!(interval_leq(&h, &Interval::point(2.5)));
    }

    #[test]
    fn ext_real_json_round_trip() {
        for v in [ExtReal::finite(1.5), ExtReal::POS_INF, ExtReal::NEG_INF] {
            let s = serde_json::to_string(&v).unwrap();
            let back: ExtReal = serde_json::from_str(&s).unwrap();
            assert_eq!(v, back);
        }
    }

    #[test]
    #[should_panic]
    fn nan_rejected() {
        let _ = ExtReal::new(f64::NAN);
    }
}
