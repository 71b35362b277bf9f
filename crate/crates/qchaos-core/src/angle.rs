//! The coherent-error parameter of the faulty Hadamard gate.

use core::fmt;

/// Unit in which an error angle was specified.
///
/// `Percent` means percent of the ideal 90° rotation, so 100 % ≡ 90° and
/// 5 % ≡ 4.5°.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum AngleUnit {
    Rad,
    Deg,
    Pct,
}

impl fmt::Display for AngleUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleUnit::Rad => write!(f, "rad"),
            AngleUnit::Deg => write!(f, "deg"),
            AngleUnit::Pct => write!(f, "pct"),
        }
    }
}

/// Coherent over-/under-rotation of the Hadamard gate's X pulse.
///
/// The angle is stored in the unit it was constructed with, so converting
/// back to that unit is exact; `radians()` is what the dynamics consumes.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ErrorAngle {
    value: f64,
    unit: AngleUnit,
}

impl ErrorAngle {
    pub const ZERO: ErrorAngle = ErrorAngle {
        value: 0.0,
        unit: AngleUnit::Rad,
    };

    pub fn from_radians(rad: f64) -> Self {
        ErrorAngle {
            value: rad,
            unit: AngleUnit::Rad,
        }
    }

    pub fn from_degrees(deg: f64) -> Self {
        ErrorAngle {
            value: deg,
            unit: AngleUnit::Deg,
        }
    }

    /// Percent of the ideal 90° rotation: 5 % ≡ 4.5°.
    pub fn from_percent(pct: f64) -> Self {
        ErrorAngle {
            value: pct,
            unit: AngleUnit::Pct,
        }
    }

    pub fn new(value: f64, unit: AngleUnit) -> Self {
        ErrorAngle { value, unit }
    }

    pub fn unit(&self) -> AngleUnit {
        self.unit
    }

    pub fn radians(&self) -> f64 {
        match self.unit {
            AngleUnit::Rad => self.value,
            AngleUnit::Deg => self.value.to_radians(),
            AngleUnit::Pct => (self.value * 0.9).to_radians(),
        }
    }

    pub fn degrees(&self) -> f64 {
        match self.unit {
            AngleUnit::Rad => self.value.to_degrees(),
            AngleUnit::Deg => self.value,
            AngleUnit::Pct => self.value * 0.9,
        }
    }

    pub fn percent(&self) -> f64 {
        match self.unit {
            AngleUnit::Rad => self.value.to_degrees() / 0.9,
            AngleUnit::Deg => self.value / 0.9,
            AngleUnit::Pct => self.value,
        }
    }
}

impl fmt::Display for ErrorAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, self.unit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_roundtrips_are_exact_at_stored_unit() {
        for &d in &[0.0, 0.9, 1.8, 2.7, 4.5, 10.0, 21.5, 30.0, 45.0, -4.5, -45.0] {
            assert_eq!(ErrorAngle::from_degrees(d).degrees(), d);
        }
        for &p in &[0.0, 1.0, 2.0, 3.0, 5.0, 50.0, -5.0, -50.0] {
            assert_eq!(ErrorAngle::from_percent(p).percent(), p);
        }
        for &r in &[0.0, 0.25, -0.125, core::f64::consts::FRAC_PI_4] {
            assert_eq!(ErrorAngle::from_radians(r).radians(), r);
        }
    }

    #[test]
    fn percent_pairs_with_degrees_like_published_rows() {
        // 5 % ≡ 4.5°, 50 % ≡ 45°.
        assert_eq!(ErrorAngle::from_percent(5.0).degrees(), 4.5);
        assert_eq!(ErrorAngle::from_percent(50.0).degrees(), 45.0);
        assert_eq!(ErrorAngle::from_degrees(4.5).percent(), 5.0);
    }

    #[test]
    fn radians_agree_across_units() {
        let a = ErrorAngle::from_degrees(4.5).radians();
        let b = ErrorAngle::from_percent(5.0).radians();
        assert!((a - b).abs() < 1e-15);
    }
}
