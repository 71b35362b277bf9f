//! Points on the Riemann sphere (the extended complex plane).

use core::fmt;
use num_complex::Complex64;

/// A point of the extended complex plane: either a finite value or the
/// single unsigned point at infinity.
///
/// Finite values never carry NaN or ±∞ components; any non-finite float fed
/// into [`ExtendedComplex::from_complex`] collapses to [`Infinity`], which is
/// the correct compactification of a float overflow for the rational maps in
/// this crate.
///
/// [`Infinity`]: ExtendedComplex::Infinity
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ExtendedComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtendedComplex {
    pub const ZERO: ExtendedComplex = ExtendedComplex::Finite(Complex64::new(0.0, 0.0));

    pub fn new(re: f64, im: f64) -> Self {
        Self::from_complex(Complex64::new(re, im))
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z.re.is_finite() && z.im.is_finite() {
            ExtendedComplex::Finite(z)
        } else {
            ExtendedComplex::Infinity
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedComplex::Infinity)
    }

    pub fn finite(&self) -> Option<Complex64> {
        match self {
            ExtendedComplex::Finite(z) => Some(*z),
            ExtendedComplex::Infinity => None,
        }
    }

    /// Chordal distance on the Riemann sphere (diameter-1 sphere), a metric
    /// that is finite and continuous across the point at infinity.
    pub fn chordal_distance(&self, other: &ExtendedComplex) -> f64 {
        match (self, other) {
            (ExtendedComplex::Finite(a), ExtendedComplex::Finite(b)) => {
                let na = (1.0 + a.norm_sqr()).sqrt();
                let nb = (1.0 + b.norm_sqr()).sqrt();
                (a - b).norm() / (na * nb)
            }
            (ExtendedComplex::Finite(a), ExtendedComplex::Infinity)
            | (ExtendedComplex::Infinity, ExtendedComplex::Finite(a)) => {
                1.0 / (1.0 + a.norm_sqr()).sqrt()
            }
            (ExtendedComplex::Infinity, ExtendedComplex::Infinity) => 0.0,
        }
    }
}

impl From<Complex64> for ExtendedComplex {
    fn from(z: Complex64) -> Self {
        Self::from_complex(z)
    }
}

impl fmt::Display for ExtendedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedComplex::Finite(z) => write!(f, "{}", z),
            ExtendedComplex::Infinity => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_finite_floats_collapse_to_infinity() {
        assert!(ExtendedComplex::new(f64::NAN, 0.0).is_infinite());
        assert!(ExtendedComplex::new(0.0, f64::INFINITY).is_infinite());
        assert!(!ExtendedComplex::new(1.0, -2.0).is_infinite());
    }

    #[test]
    fn chordal_distance_is_symmetric_and_bounded() {
        let a = ExtendedComplex::new(0.3, -0.7);
        let b = ExtendedComplex::Infinity;
        assert_eq!(a.chordal_distance(&b), b.chordal_distance(&a));
        assert!(a.chordal_distance(&b) <= 1.0);
        assert_eq!(a.chordal_distance(&a), 0.0);
    }
}
