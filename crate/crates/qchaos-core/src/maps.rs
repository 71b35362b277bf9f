//! Exact forward maps of one protocol step.
//!
//! With `θ = π/4 + ε/2` and `c = cos θ`, `s = sin θ`, a successful step acts
//! on the Riemann coordinate of a pure state as
//!
//! ```text
//! z ↦ (s − c z²) / (c + s z²)
//! ```
//!
//! and on Bloch coordinates of a general (possibly mixed) state as
//!
//! ```text
//! u ↦ (2 w cos ε + (u² − v²) sin ε) / (1 + w²)
//! v ↦ −2 u v / (1 + w²)
//! w ↦ ((u² − v²) cos ε − 2 w sin ε) / (1 + w²)
//! ```
//!
//! Both are total: the Bloch denominator satisfies `1 + w² ≥ 1`, and the
//! pure map is evaluated in homogeneous coordinates so poles land exactly on
//! the point at infinity instead of producing NaN.

use num_complex::Complex64;

use crate::angle::ErrorAngle;
use crate::bloch::BlochVector;
use crate::riemann::ExtendedComplex;

/// Trigonometric coefficients of the maps for one fixed error angle,
/// precomputed once so per-pixel iteration does no trig.
#[derive(Debug, Clone, Copy)]
pub struct MapParams {
    /// cos(π/4 + ε/2)
    pub cos_half: f64,
    /// sin(π/4 + ε/2)
    pub sin_half: f64,
    /// cos ε
    pub cos_eps: f64,
    /// sin ε
    pub sin_eps: f64,
}

impl MapParams {
    pub fn new(eps: ErrorAngle) -> Self {
        let e = eps.radians();
        // cos(π/4 + x) = (cos x − sin x)/√2 and sin(π/4 + x) = (cos x + sin x)/√2;
        // this keeps the two coefficients exactly equal at ε = 0, where the
        // map's pole sits exactly at z² = −1.
        let (sh, ch) = (0.5 * e).sin_cos();
        let r = core::f64::consts::FRAC_1_SQRT_2;
        MapParams {
            cos_half: r * (ch - sh),
            sin_half: r * (ch + sh),
            cos_eps: e.cos(),
            sin_eps: e.sin(),
        }
    }

    /// One protocol step on the Riemann coordinate of a pure state.
    ///
    /// Evaluated as `(s d² − c n²) : (c d² + s n²)` on homogeneous
    /// coordinates `z = n/d`, which handles `z = ∞` (where the map takes the
    /// value `−c/s`) and denominator zeros uniformly.
    pub fn pure_step(&self, z: ExtendedComplex) -> ExtendedComplex {
        let (n, d) = match z {
            ExtendedComplex::Finite(z) => (z, Complex64::new(1.0, 0.0)),
            ExtendedComplex::Infinity => (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
        };
        // Rescale so the squares below cannot overflow.
        let scale = n.re.abs().max(n.im.abs()).max(d.re.abs()).max(d.im.abs());
        let (n, d) = if scale > 1.0 { (n / scale, d / scale) } else { (n, d) };
        let n_sq = n * n;
        let d_sq = d * d;
        let num = self.sin_half * d_sq - self.cos_half * n_sq;
        let den = self.cos_half * d_sq + self.sin_half * n_sq;
        if den.norm_sqr() == 0.0 {
            return ExtendedComplex::Infinity;
        }
        ExtendedComplex::from_complex(num / den)
    }

    /// One protocol step on Bloch coordinates.
    pub fn bloch_step(&self, s: BlochVector) -> BlochVector {
        let denom = 1.0 + s.w * s.w;
        let quad = s.u * s.u - s.v * s.v;
        BlochVector::new(
            (2.0 * s.w * self.cos_eps + quad * self.sin_eps) / denom,
            -2.0 * s.u * s.v / denom,
            (quad * self.cos_eps - 2.0 * s.w * self.sin_eps) / denom,
        )
    }

    /// `k` Bloch steps.
    pub fn bloch_iterate(&self, s: BlochVector, k: usize) -> BlochVector {
        let mut x = s;
        for _ in 0..k {
            x = self.bloch_step(x);
        }
        x
    }

    /// `k` pure-map steps.
    pub fn pure_iterate(&self, z: ExtendedComplex, k: usize) -> ExtendedComplex {
        let mut x = z;
        for _ in 0..k {
            x = self.pure_step(x);
        }
        x
    }

    /// Derivative of the pure map, `f'(z) = −2 z / (c + s z²)²`.
    ///
    /// At `z = ∞` the conventional derivative is not meaningful; `None` is
    /// returned (the caller should work in the chart at infinity).
    pub fn pure_derivative(&self, z: ExtendedComplex) -> Option<Complex64> {
        let z = z.finite()?;
        let den = self.cos_half + self.sin_half * z * z;
        Some(-2.0 * z / (den * den))
    }
}

/// One protocol step on the Riemann coordinate of a pure state.
pub fn pure_step(z: ExtendedComplex, eps: ErrorAngle) -> ExtendedComplex {
    MapParams::new(eps).pure_step(z)
}

/// One protocol step on Bloch coordinates.
pub fn bloch_step(s: BlochVector, eps: ErrorAngle) -> BlochVector {
    MapParams::new(eps).bloch_step(s)
}
