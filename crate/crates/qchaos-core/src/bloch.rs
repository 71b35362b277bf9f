//! Bloch-ball coordinates of single-qubit density matrices.

use core::fmt;

use crate::riemann::ExtendedComplex;
use crate::tol;

/// A single-qubit state as a point of the (closed) Bloch ball.
///
/// `u² + v² + w² ≤ 1` for physical states; the surface carries the pure
/// states, the origin is the maximally mixed state.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BlochVector {
    pub u: f64,
    pub v: f64,
    pub w: f64,
}

/// Errors of the geometric conversions in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BlochError {
    /// The operation requires a pure state and the input's purity deviates
    /// from 1 beyond tolerance.
    NonPureInput { purity: f64 },
    /// The input does not lie on the purity sphere it was claimed to be on.
    OffSphere { radius_sq: f64, expected_sq: f64 },
    /// Stereographic projection from the sphere's south pole is undefined at
    /// the south pole itself.
    ProjectionPole,
}

impl fmt::Display for BlochError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlochError::NonPureInput { purity } => {
                write!(f, "state is not pure (purity {purity})")
            }
            BlochError::OffSphere {
                radius_sq,
                expected_sq,
            } => write!(
                f,
                "state lies off the requested sphere (r² = {radius_sq}, expected {expected_sq})"
            ),
            BlochError::ProjectionPole => {
                write!(f, "stereographic projection undefined at the south pole")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for BlochError {}

impl BlochVector {
    /// The maximally mixed state.
    pub const ORIGIN: BlochVector = BlochVector {
        u: 0.0,
        v: 0.0,
        w: 0.0,
    };

    pub fn new(u: f64, v: f64, w: f64) -> Self {
        BlochVector { u, v, w }
    }

    pub fn norm_sq(&self) -> f64 {
        self.u * self.u + self.v * self.v + self.w * self.w
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn distance(&self, other: &BlochVector) -> f64 {
        let du = self.u - other.u;
        let dv = self.v - other.v;
        let dw = self.w - other.w;
        (du * du + dv * dv + dw * dw).sqrt()
    }

    /// `Tr ρ² = (1 + u² + v² + w²) / 2`: 1 for pure states, 1/2 at the
    /// maximally mixed state.
    pub fn purity(&self) -> f64 {
        0.5 * (1.0 + self.norm_sq())
    }

    pub fn is_physical(&self, tolerance: f64) -> bool {
        self.norm_sq() <= 1.0 + tolerance
    }

    pub fn is_pure(&self, tolerance: f64) -> bool {
        (self.purity() - 1.0).abs() <= tolerance
    }

    /// Riemann parameterization of a pure state: `z = (u + iv) / (1 + w)`,
    /// with the south pole mapping to the point at infinity.
    ///
    /// Fails with `NonPureInput` if the state is not on the sphere within
    /// `tolerance` of purity 1.
    pub fn to_riemann(&self, tolerance: f64) -> Result<ExtendedComplex, BlochError> {
        if !self.is_pure(tolerance) {
            return Err(BlochError::NonPureInput {
                purity: self.purity(),
            });
        }
        let denom = 1.0 + self.w;
        if denom.abs() < tol::DEGENERATE_DENOMINATOR {
            return Ok(ExtendedComplex::Infinity);
        }
        Ok(ExtendedComplex::new(self.u / denom, self.v / denom))
    }

    /// Inverse of [`BlochVector::to_riemann`]; always lands on the unit
    /// sphere.
    pub fn from_riemann(z: ExtendedComplex) -> BlochVector {
        match z {
            ExtendedComplex::Finite(z) => {
                let n = 1.0 + z.norm_sqr();
                BlochVector::new(2.0 * z.re / n, 2.0 * z.im / n, (1.0 - z.norm_sqr()) / n)
            }
            ExtendedComplex::Infinity => BlochVector::new(0.0, 0.0, -1.0),
        }
    }

    /// Stereographic projection of a purity-`p` sphere from its south pole
    /// onto the equatorial plane: `x + iy = (u + iv) / (√(2P−1) + w)`.
    ///
    /// The state must lie on the sphere of purity `p` (radius `√(2P−1)`)
    /// within `sphere_tolerance` on the squared radius.
    pub fn stereographic_project(
        &self,
        p: f64,
        sphere_tolerance: f64,
    ) -> Result<(f64, f64), BlochError> {
        let r_sq = 2.0 * p - 1.0;
        let n_sq = self.norm_sq();
        if (n_sq - r_sq).abs() > sphere_tolerance {
            return Err(BlochError::OffSphere {
                radius_sq: n_sq,
                expected_sq: r_sq,
            });
        }
        let denom = r_sq.sqrt() + self.w;
        if denom.abs() < tol::DEGENERATE_DENOMINATOR {
            return Err(BlochError::ProjectionPole);
        }
        Ok((self.u / denom, self.v / denom))
    }

    /// Inverse stereographic projection: the point of the purity-`p` sphere
    /// that projects to `(x, y)`.
    pub fn from_stereographic(x: f64, y: f64, p: f64) -> BlochVector {
        let r = (2.0 * p - 1.0).sqrt();
        let q_sq = x * x + y * y;
        let scale = 2.0 * r / (1.0 + q_sq);
        BlochVector::new(scale * x, scale * y, r * (1.0 - q_sq) / (1.0 + q_sq))
    }
}

impl fmt::Display for BlochVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.u, self.v, self.w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    #[test]
    fn purity_of_reference_states() {
        assert_eq!(BlochVector::ORIGIN.purity(), 0.5);
        assert_eq!(BlochVector::new(1.0, 0.0, 0.0).purity(), 1.0);
        // Interior fixed point of the error-free dynamics.
        assert_abs_diff_eq!(
            BlochVector::new(0.639, 0.0, 0.361).purity(),
            0.769,
            epsilon = 5e-4
        );
    }

    #[test]
    fn riemann_poles_and_plus_state() {
        let north = BlochVector::new(0.0, 0.0, 1.0);
        assert_eq!(
            north.to_riemann(1e-9).unwrap(),
            ExtendedComplex::new(0.0, 0.0)
        );
        let south = BlochVector::new(0.0, 0.0, -1.0);
        assert!(south.to_riemann(1e-9).unwrap().is_infinite());
        let plus = BlochVector::new(1.0, 0.0, 0.0);
        assert_eq!(plus.to_riemann(1e-9).unwrap(), ExtendedComplex::new(1.0, 0.0));
    }

    #[test]
    fn riemann_rejects_mixed_states() {
        let err = BlochVector::new(0.2, 0.0, 0.1).to_riemann(1e-9).unwrap_err();
        assert!(matches!(err, BlochError::NonPureInput { .. }));
    }

    #[test]
    fn stereographic_reference_points() {
        let north = BlochVector::new(0.0, 0.0, 1.0);
        assert_eq!(north.stereographic_project(1.0, 1e-9).unwrap(), (0.0, 0.0));
        let plus = BlochVector::new(1.0, 0.0, 0.0);
        assert_eq!(plus.stereographic_project(1.0, 1e-9).unwrap(), (1.0, 0.0));

        // Direct evaluation of the projection formula off the pure sphere:
        // u = 0.3, w = √(0.9 − 0.09), P = 0.95.
        let w = (0.9f64 - 0.09).sqrt();
        let s = BlochVector::new(0.3, 0.0, w);
        let (x, y) = s.stereographic_project(0.95, 1e-9).unwrap();
        assert_abs_diff_eq!(x, 0.3 / (0.9f64.sqrt() + w), epsilon = 1e-15);
        assert_eq!(y, 0.0);
    }

    #[test]
    fn stereographic_pole_and_off_sphere_errors() {
        let pole = BlochVector::new(0.0, 0.0, -(0.9f64.sqrt()));
        assert!(matches!(
            pole.stereographic_project(0.95, 1e-9),
            Err(BlochError::ProjectionPole)
        ));
        let off = BlochVector::new(0.5, 0.0, 0.0);
        assert!(matches!(
            off.stereographic_project(0.95, 1e-9),
            Err(BlochError::OffSphere { .. })
        ));
    }

    #[test]
    fn stereographic_projection_roundtrips_on_sphere() {
        for &p in &[0.75, 0.95, 1.0] {
            for i in 0..50 {
                let x = -2.0 + 0.08 * i as f64;
                let y = 1.7 - 0.07 * i as f64;
                let s = BlochVector::from_stereographic(x, y, p);
                assert_abs_diff_eq!(s.norm_sq(), 2.0 * p - 1.0, epsilon = 1e-12);
                let (x2, y2) = s.stereographic_project(p, 1e-9).unwrap();
                assert_abs_diff_eq!(x2, x, epsilon = 1e-10);
                assert_abs_diff_eq!(y2, y, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn riemann_roundtrip_on_pure_states() {
        for i in 0..100 {
            let z = Complex64::new(-2.0 + 0.04 * i as f64, 1.3 - 0.027 * i as f64);
            let s = BlochVector::from_riemann(ExtendedComplex::Finite(z));
            assert!(s.is_pure(1e-12));
            let back = s.to_riemann(1e-9).unwrap().finite().unwrap();
            assert_abs_diff_eq!(back.re, z.re, epsilon = 1e-12);
            assert_abs_diff_eq!(back.im, z.im, epsilon = 1e-12);
        }
    }
}
