//! Brute-force two-qubit circuit simulation of one protocol step.
//!
//! This module is the ground truth the closed-form maps are tested against.
//! [`step_via_circuit`] builds `ρ ⊗ ρ`, conjugates by the CNOT, projects the
//! target qubit onto `|0⟩`, renormalizes and applies the faulty Hadamard —
//! nothing but dense 4×4 arithmetic, so it is simple enough to trust.
//! [`hadamard_product_step`] evaluates the same step through the elementwise
//! (Hadamard) product shortcut `H̃ (ρ⊙ρ) H̃† / Tr(ρ⊙ρ)`; the two routes
//! agreeing is itself a test.

use core::fmt;
use num_complex::Complex64;

use crate::angle::ErrorAngle;
use crate::bloch::BlochVector;

type C = Complex64;

const ZERO: C = C::new(0.0, 0.0);

/// A single-qubit density matrix, row-major in the computational basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2x2(pub [[C; 2]; 2]);

/// Post-selection on the target qubit is impossible: `Tr(ρ⊙ρ)` vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroSuccessProbability;

impl fmt::Display for ZeroSuccessProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "post-selection success probability is zero")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ZeroSuccessProbability {}

impl DensityMatrix2x2 {
    pub fn from_bloch(s: BlochVector) -> Self {
        DensityMatrix2x2([
            [
                C::new(0.5 * (1.0 + s.w), 0.0),
                C::new(0.5 * s.u, -0.5 * s.v),
            ],
            [C::new(0.5 * s.u, 0.5 * s.v), C::new(0.5 * (1.0 - s.w), 0.0)],
        ])
    }

    pub fn to_bloch(&self) -> BlochVector {
        let m = &self.0;
        BlochVector::new(
            2.0 * m[1][0].re,
            2.0 * m[1][0].im,
            (m[0][0] - m[1][1]).re,
        )
    }

    pub fn trace(&self) -> C {
        self.0[0][0] + self.0[1][1]
    }

    /// Deviation from being a physical state: the largest of the
    /// Hermiticity defect, the trace defect and the negative part of the
    /// spectrum.
    pub fn physicality_defect(&self) -> f64 {
        let m = &self.0;
        let herm = (m[0][1] - m[1][0].conj()).norm().max(m[0][0].im.abs()).max(m[1][1].im.abs());
        let trace = (self.trace() - C::new(1.0, 0.0)).norm();
        // Eigenvalues of a Hermitian 2×2: mean ± √(mean² − det).
        let mean = 0.5 * (m[0][0].re + m[1][1].re);
        let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).re;
        let disc = (mean * mean - det).max(0.0).sqrt();
        let min_eig = mean - disc;
        herm.max(trace).max((-min_eig).max(0.0))
    }
}

/// The miscalibrated Hadamard gate, `Z_{π/2} X_{π/2} X_ε Z_{π/2}` with the
/// irrelevant global phase dropped: a real symmetric involution.
#[derive(Debug, Clone, Copy)]
pub struct FaultyHadamard {
    pub epsilon: ErrorAngle,
    pub matrix: [[C; 2]; 2],
}

impl FaultyHadamard {
    pub fn new(epsilon: ErrorAngle) -> Self {
        let params = crate::maps::MapParams::new(epsilon);
        let c = C::new(params.cos_half, 0.0);
        let s = C::new(params.sin_half, 0.0);
        FaultyHadamard {
            epsilon,
            matrix: [[c, s], [s, -c]],
        }
    }

    /// Largest entry of `H̃ H̃† − 1`; the gate is unitary and involutory, so
    /// this doubles as the involution defect.
    pub fn unitarity_defect(&self) -> f64 {
        let m = &self.matrix;
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = ZERO;
                for k in 0..2 {
                    acc += m[i][k] * m[j][k].conj();
                }
                let expect = if i == j { C::new(1.0, 0.0) } else { ZERO };
                worst = worst.max((acc - expect).norm());
            }
        }
        worst
    }
}

fn mat2_conjugate(u: &[[C; 2]; 2], rho: &[[C; 2]; 2]) -> [[C; 2]; 2] {
    // u * rho * u†
    let mut tmp = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                tmp[i][j] += u[i][k] * rho[k][j];
            }
        }
    }
    let mut out = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                out[i][j] += tmp[i][k] * u[j][k].conj();
            }
        }
    }
    out
}

fn mat4_mul(a: &[[C; 4]; 4], b: &[[C; 4]; 4]) -> [[C; 4]; 4] {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i][k];
            if aik == ZERO {
                continue;
            }
            for j in 0..4 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn mat4_dagger(a: &[[C; 4]; 4]) -> [[C; 4]; 4] {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

/// Basis order `|control target⟩`: `|00⟩, |01⟩, |10⟩, |11⟩`. The CNOT flips
/// the target when the control is 1.
fn cnot() -> [[C; 4]; 4] {
    let one = C::new(1.0, 0.0);
    let mut m = [[ZERO; 4]; 4];
    m[0][0] = one;
    m[1][1] = one;
    m[2][3] = one;
    m[3][2] = one;
    m
}

fn kron2(a: &[[C; 2]; 2], b: &[[C; 2]; 2]) -> [[C; 4]; 4] {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// One full protocol step at the two-qubit level.
///
/// Returns the post-selected, renormalized single-qubit state after the
/// faulty Hadamard, together with the probability of measuring the target
/// qubit in `|0⟩`.
pub fn step_via_circuit(
    rho: &DensityMatrix2x2,
    eps: ErrorAngle,
) -> Result<(DensityMatrix2x2, f64), ZeroSuccessProbability> {
    let pair = kron2(&rho.0, &rho.0);
    let gate = cnot();
    let entangled = mat4_mul(&mat4_mul(&gate, &pair), &mat4_dagger(&gate));

    // Project the target onto |0⟩: keep rows/columns with target index 0.
    let mut kept = [[ZERO; 2]; 2];
    for control_i in 0..2 {
        for control_j in 0..2 {
            kept[control_i][control_j] = entangled[2 * control_i][2 * control_j];
        }
    }
    let p_success = (kept[0][0] + kept[1][1]).re;
    if p_success < 1e-15 {
        return Err(ZeroSuccessProbability);
    }
    let normalized = [
        [kept[0][0] / p_success, kept[0][1] / p_success],
        [kept[1][0] / p_success, kept[1][1] / p_success],
    ];
    let hadamard = FaultyHadamard::new(eps);
    Ok((
        DensityMatrix2x2(mat2_conjugate(&hadamard.matrix, &normalized)),
        p_success,
    ))
}

/// The same step through the elementwise-product form
/// `H̃ (ρ⊙ρ) H̃† / Tr(ρ⊙ρ)`.
pub fn hadamard_product_step(
    rho: &DensityMatrix2x2,
    eps: ErrorAngle,
) -> Result<DensityMatrix2x2, ZeroSuccessProbability> {
    let m = &rho.0;
    let mut sq = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            sq[i][j] = m[i][j] * m[i][j];
        }
    }
    let trace = (sq[0][0] + sq[1][1]).re;
    if trace < 1e-15 {
        return Err(ZeroSuccessProbability);
    }
    for row in sq.iter_mut() {
        for entry in row.iter_mut() {
            *entry /= trace;
        }
    }
    let hadamard = FaultyHadamard::new(eps);
    Ok(DensityMatrix2x2(mat2_conjugate(&hadamard.matrix, &sq)))
}

/// Closed form of the post-selection probability, `(1 + w²) / 2`.
pub fn success_probability(s: BlochVector) -> f64 {
    0.5 * (1.0 + s.w * s.w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::bloch_step;
    use crate::rng::{unit_ball_sample, CounterRng};
    use approx::assert_abs_diff_eq;

    #[test]
    fn faulty_hadamard_is_unitary_involution_and_reduces_at_zero() {
        for &deg in &[0.0, 4.5, -21.5, 45.0] {
            let h = FaultyHadamard::new(ErrorAngle::from_degrees(deg));
            assert!(h.unitarity_defect() < 1e-12);
        }
        let h0 = FaultyHadamard::new(ErrorAngle::ZERO);
        let r = core::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(h0.matrix[0][0].re, r, epsilon = 1e-15);
        assert_abs_diff_eq!(h0.matrix[0][1].re, r, epsilon = 1e-15);
        assert_abs_diff_eq!(h0.matrix[1][1].re, -r, epsilon = 1e-15);
    }

    #[test]
    fn ground_state_is_forced_into_plus() {
        let rho = DensityMatrix2x2::from_bloch(BlochVector::new(0.0, 0.0, 1.0));
        let (out, p) = step_via_circuit(&rho, ErrorAngle::ZERO).unwrap();
        assert_abs_diff_eq!(p, 1.0, epsilon = 1e-12);
        let bloch = out.to_bloch();
        assert!(bloch.distance(&BlochVector::new(1.0, 0.0, 0.0)) < 1e-12);
    }

    #[test]
    fn maximally_mixed_state_is_fixed_with_half_success() {
        let rho = DensityMatrix2x2::from_bloch(BlochVector::ORIGIN);
        let (out, p) = step_via_circuit(&rho, ErrorAngle::ZERO).unwrap();
        assert_abs_diff_eq!(p, 0.5, epsilon = 1e-12);
        assert!(out.to_bloch().distance(&BlochVector::ORIGIN) < 1e-12);
    }

    #[test]
    fn plus_state_returns_to_ground() {
        let rho = DensityMatrix2x2::from_bloch(BlochVector::new(1.0, 0.0, 0.0));
        let out = hadamard_product_step(&rho, ErrorAngle::ZERO).unwrap();
        assert!(out.to_bloch().distance(&BlochVector::new(0.0, 0.0, 1.0)) < 1e-12);
    }

    #[test]
    fn circuit_and_elementwise_routes_agree() {
        let mut rng = CounterRng::new(17, 0);
        for i in 0..1000 {
            let (u, v, w) = unit_ball_sample(17, i);
            let eps = ErrorAngle::from_degrees(100.0 * rng.next_symmetric() / 2.0);
            let rho = DensityMatrix2x2::from_bloch(BlochVector::new(u, v, w));
            let (a, _) = step_via_circuit(&rho, eps).unwrap();
            let b = hadamard_product_step(&rho, eps).unwrap();
            for i in 0..2 {
                for j in 0..2 {
                    assert!((a.0[i][j] - b.0[i][j]).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn circuit_matches_closed_form_bloch_step() {
        let mut rng = CounterRng::new(29, 0);
        for i in 0..1000 {
            let (u, v, w) = unit_ball_sample(29, i);
            let s = BlochVector::new(u, v, w);
            let eps = ErrorAngle::from_degrees(50.0 * rng.next_symmetric());
            let rho = DensityMatrix2x2::from_bloch(s);
            let (out, p) = step_via_circuit(&rho, eps).unwrap();
            let expect = bloch_step(s, eps);
            assert!(out.to_bloch().distance(&expect) < 1e-12);
            assert_abs_diff_eq!(p, success_probability(s), epsilon = 1e-12);
            assert!(p >= 0.5 - 1e-12 && p <= 1.0 + 1e-12);
            assert!(out.physicality_defect() < 1e-10);
        }
    }
}
