//! Small dense polynomial root finding over the complex numbers.
//!
//! Degrees here never exceed six (fixed-point cubics, the invariant-plane
//! sextic, characteristic cubics of 3×3 Jacobians), so a Durand–Kerner
//! simultaneous iteration followed by a few Newton polish steps is accurate
//! and has no failure modes worth hardening against. Callers verify every
//! root through a residual or a forward-map check anyway.

use alloc::vec::Vec;
use num_complex::Complex64;

type C = Complex64;

/// Coefficients in ascending order: `coeffs[k]` multiplies `x^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    pub coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Polynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        let mut d = self.coeffs.len().saturating_sub(1);
        while d > 0 && self.coeffs[d] == 0.0 {
            d -= 1;
        }
        d
    }

    pub fn eval(&self, x: C) -> C {
        let mut acc = C::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::new(alloc::vec![0.0]);
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    /// All complex roots (with multiplicity) by Durand–Kerner iteration plus
    /// Newton polishing.
    pub fn roots(&self) -> Vec<C> {
        let degree = self.degree();
        if degree == 0 {
            return Vec::new();
        }
        let lead = self.coeffs[degree];
        let monic: Vec<f64> = self.coeffs[..=degree].iter().map(|c| c / lead).collect();
        let poly = Polynomial::new(monic);

        // Initial guesses on a circle of the Cauchy root radius, at angles
        // that avoid the real axis so conjugate roots can separate.
        let radius = 1.0
            + poly.coeffs[..degree]
                .iter()
                .fold(0.0f64, |m, c| m.max(c.abs()));
        let mut roots: Vec<C> = (0..degree)
            .map(|k| {
                let angle = core::f64::consts::TAU * (k as f64 + 0.25) / degree as f64 + 0.5;
                C::from_polar(radius, angle)
            })
            .collect();

        for _ in 0..200 {
            let mut moved = 0.0f64;
            for i in 0..degree {
                let mut denom = C::new(1.0, 0.0);
                for j in 0..degree {
                    if j != i {
                        denom *= roots[i] - roots[j];
                    }
                }
                if denom.norm_sqr() == 0.0 {
                    continue;
                }
                let delta = poly.eval(roots[i]) / denom;
                roots[i] -= delta;
                moved = moved.max(delta.norm());
            }
            if moved < 1e-14 * radius {
                break;
            }
        }

        let deriv = poly.derivative();
        for root in roots.iter_mut() {
            for _ in 0..3 {
                let d = deriv.eval(*root);
                if d.norm_sqr() == 0.0 {
                    break;
                }
                *root -= poly.eval(*root) / d;
            }
        }
        roots
    }

    /// Real roots, i.e. roots whose imaginary part is below `imag_tol`
    /// (absolute, after polishing).
    pub fn real_roots(&self, imag_tol: f64) -> Vec<f64> {
        self.roots()
            .into_iter()
            .filter(|z| z.im.abs() <= imag_tol)
            .map(|z| z.re)
            .collect()
    }
}
