//! Half-open real intervals `[birth, death)` with `death` possibly `+inf`.

use std::fmt;

use crate::error::{Error, Result};

/// A nonempty half-open interval `[birth, death)`.
///
/// `birth` is always finite; `death` may be `f64::INFINITY`. Endpoints are
/// compared exactly, without tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    birth: f64,
    death: f64,
}

impl Interval {
    pub fn new(birth: f64, death: f64) -> Result<Self> {
        let reason = if !birth.is_finite() {
            Some("birth must be finite")
        } else if death.is_nan() || death == f64::NEG_INFINITY {
            Some("death must be a real number or +inf")
        } else if birth >= death {
            Some("birth must be strictly less than death")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidInterval {
                birth,
                death,
                reason,
            }),
            None => Ok(Interval { birth, death }),
        }
    }

    /// `[birth, +inf)`
    pub fn infinite(birth: f64) -> Result<Self> {
        Interval::new(birth, f64::INFINITY)
    }

    #[inline]
    pub fn birth(&self) -> f64 {
        self.birth
    }

    #[inline]
    pub fn death(&self) -> f64 {
        self.death
    }

    #[inline]
    pub fn is_infinite(&self) -> bool {
        self.death == f64::INFINITY
    }

    /// Length `death - birth`; infinite for essential bars.
    pub fn length(&self) -> f64 {
        self.death - self.birth
    }

    /// True iff `inner ⊆ self`.
    #[inline]
    pub fn contains(&self, inner: &Interval) -> bool {
        self.birth <= inner.birth && inner.death <= self.death
    }

    #[inline]
    pub fn contains_point(&self, t: f64) -> bool {
        self.birth <= t && t < self.death
    }

    #[inline]
    pub fn intersects(&self, other: &Interval) -> bool {
        self.birth.max(other.birth) < self.death.min(other.death)
    }

    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        self.intersects(other).then(|| Interval {
            birth: self.birth.max(other.birth),
            death: self.death.min(other.death),
        })
    }

    /// Shrinks both endpoints inward by `delta`, returning `None` when the
    /// result is empty. `+inf - delta` stays `+inf`.
    pub fn shrink(&self, delta: f64) -> Option<Interval> {
        let birth = self.birth + delta;
        let death = self.death - delta;
        (birth < death).then_some(Interval { birth, death })
    }
}

/// True iff `outer ⊇ inner`.
pub fn interval_contains(outer: &Interval, inner: &Interval) -> bool {
    outer.contains(inner)
}

/// True iff `i` overlaps `j` above: the two intersect, `j` bounds `i` below
/// and `i` bounds `j` above.
pub fn overlaps_above(i: &Interval, j: &Interval) -> bool {
    i.intersects(j) && j.birth <= i.birth && i.death >= j.death
}

/// Equal deaths.
pub fn coincide_above(i: &Interval, j: &Interval) -> bool {
    i.death == j.death
}

/// Equal births.
pub fn coincide_below(i: &Interval, j: &Interval) -> bool {
    i.birth == j.birth
}

/// Formats an endpoint as the shortest decimal that round-trips, or `inf`.
pub fn format_endpoint(x: f64) -> String {
    if x == f64::INFINITY {
        "inf".to_string()
    } else {
        format!("{x}")
    }
}

/// Parses a decimal endpoint; accepts `inf`, `+inf` and `infinity`.
pub fn parse_endpoint(s: &str) -> Option<f64> {
    match s.to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" | "+infinity" => Some(f64::INFINITY),
        _ => s.parse::<f64>().ok().filter(|x| x.is_finite()),
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{})",
            format_endpoint(self.birth),
            format_endpoint(self.death)
        )
    }
}
