//! Fixed points, cycles, multipliers and stability classification.
//!
//! Pure fixed points are the roots of the cubic
//! `s z³ + c z² + c z − s = 0` (`c = cos θ`, `s = sin θ`, `θ = π/4 + ε/2`).
//! Fixed points of the second iterate form a quintic whose division by that
//! cubic is exact and leaves the quadratic
//!
//! ```text
//! c (s + c) z² − z + c (c − s) = 0
//! ```
//!
//! whose roots are the genuine 2-cycle. Its discriminant
//! `Δ = 1 + 2 sin ε − 2 sin² ε` vanishes at `sin ε = (1 − √3)/2`
//! (ε ≈ −21.47°), where the cycle collides with the real fixed point in a
//! period-halving bifurcation; below that the real fixed point is the single
//! pure attractor.
//!
//! On the invariant plane `v = 0`, eliminating `u` from the fixed-point
//! system leaves `w = 0` (the maximally mixed state) times a sextic in `w`;
//! real sextic roots inside the disk are recovered, polished by 2-D Newton,
//! and cross-checked against a Newton search seeded on a 32×32 grid.

use alloc::vec;
use alloc::vec::Vec;

use crate::angle::ErrorAngle;
use crate::bloch::BlochVector;
use crate::maps::MapParams;
use crate::mat3::Mat3;
use crate::poly::Polynomial;
use crate::riemann::ExtendedComplex;
use crate::tol;

/// Stability class of a periodic point, from its multiplier λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Stability {
    Attracting,
    Repelling,
    Neutral,
}

impl Stability {
    /// λ < 1 attracting, λ > 1 repelling, with a band `|λ − 1| < band`
    /// reported as neutral (ε sweeps cross λ = 1 transversally).
    pub fn from_multiplier(multiplier: f64, band: f64) -> Stability {
        if (multiplier - 1.0).abs() < band {
            Stability::Neutral
        } else if multiplier < 1.0 {
            Stability::Attracting
        } else {
            Stability::Repelling
        }
    }
}

/// A verified periodic point of the dynamics.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PeriodicPoint {
    pub location: BlochVector,
    /// Riemann coordinate, for points of the pure-state map.
    pub riemann: Option<ExtendedComplex>,
    pub period: u32,
    pub multiplier: f64,
    pub stability: Stability,
    pub purity: f64,
}

impl PeriodicPoint {
    fn pure(z: ExtendedComplex, period: u32, multiplier: f64) -> PeriodicPoint {
        let location = BlochVector::from_riemann(z);
        PeriodicPoint {
            location,
            riemann: Some(z),
            period,
            multiplier,
            stability: Stability::from_multiplier(multiplier, tol::NEUTRAL_BAND),
            purity: location.purity(),
        }
    }

    fn mixed(location: BlochVector, period: u32, multiplier: f64) -> PeriodicPoint {
        PeriodicPoint {
            location,
            riemann: None,
            period,
            multiplier,
            stability: Stability::from_multiplier(multiplier, tol::NEUTRAL_BAND),
            purity: location.purity(),
        }
    }
}

/// An attracting cycle found by forward iteration, with every cycle point
/// materialized (basin classification needs the whole tube).
///
/// `residual` is the distance by which the orbit misses exact closure after
/// `period` steps. Genuine periodic attractors close to near machine
/// precision; quasi-periodic attractors (invariant circles, which the deep
/// under-rotation regime produces) only close to the detection tolerance,
/// and their `period` is the first recurrence at that tolerance.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DetectedCycle {
    pub points: Vec<BlochVector>,
    pub period: u32,
    pub multiplier: f64,
    pub stability: Stability,
    pub min_purity: f64,
    pub max_purity: f64,
    pub residual: f64,
}

/// Complete catalogue of the special points of the dynamics at one error
/// angle. Every entry is verified by forward iteration before it is listed.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AttractorInventory {
    pub epsilon: ErrorAngle,
    /// Attracting pure periodic points: the two points of the 2-cycle,
    /// ordered north-most first, or the single attracting fixed point after
    /// the cycle has merged away.
    pub pure_attractors: Vec<PeriodicPoint>,
    /// The three fixed points of the pure map with their stability.
    pub pure_fixed_points: Vec<PeriodicPoint>,
    /// Interior fixed points on the invariant plane (maximally mixed state
    /// excluded); contains the repeller whose purity controls the phase
    /// transition while it exists.
    pub mixed_fixed_points: Vec<PeriodicPoint>,
    /// The maximally mixed state with its multiplier `2 |sin ε|`.
    pub c0_stability: PeriodicPoint,
    /// Attracting mixed cycles found numerically (populated on demand).
    pub detected_long_cycles: Vec<DetectedCycle>,
}

impl AttractorInventory {
    /// The attracting pure 2-cycle, north-most point first.
    pub fn pure_cycle(&self) -> Option<(&PeriodicPoint, &PeriodicPoint)> {
        if self.pure_attractors.len() == 2 && self.pure_attractors[0].period == 2 {
            Some((&self.pure_attractors[0], &self.pure_attractors[1]))
        } else {
            None
        }
    }

    /// The single attracting pure fixed point of the post-merge regime.
    pub fn single_pure_attractor(&self) -> Option<&PeriodicPoint> {
        match self.pure_attractors.as_slice() {
            [p] if p.period == 1 => Some(p),
            _ => None,
        }
    }

    pub fn c0_attracting(&self) -> bool {
        self.c0_stability.stability == Stability::Attracting
    }

    /// The interior repelling fixed point (lowest-purity entry when several
    /// mixed fixed points survive verification).
    pub fn interior_repeller(&self) -> Option<&PeriodicPoint> {
        self.mixed_fixed_points
            .iter()
            .filter(|p| p.stability == Stability::Repelling)
            .min_by(|a, b| a.purity.partial_cmp(&b.purity).unwrap())
    }
}

/// `sin ε = (1 − √3)/2`: the error angle (radians) where the pure 2-cycle
/// merges with the real fixed point.
pub fn two_cycle_merge_epsilon() -> f64 {
    ((1.0 - 3.0f64.sqrt()) / 2.0).asin()
}

/// The three fixed points of the pure map with multipliers `|f'|`.
///
/// Exactly one root is real; roots are polished and returned sorted with
/// the real root first.
pub fn pure_fixed_points(eps: ErrorAngle) -> Vec<PeriodicPoint> {
    let p = MapParams::new(eps);
    let (c, s) = (p.cos_half, p.sin_half);
    let cubic = Polynomial::new(vec![-s, c, c, s]);
    let mut roots = cubic.roots();
    roots.sort_by(|a, b| a.im.abs().partial_cmp(&b.im.abs()).unwrap());
    roots
        .into_iter()
        .enumerate()
        .map(|(i, mut z)| {
            if i == 0 {
                // The real root; drop the residual imaginary part.
                z.im = 0.0;
            }
            let zx = ExtendedComplex::from_complex(z);
            let multiplier = p.pure_derivative(zx).map(|d| d.norm()).unwrap_or(f64::INFINITY);
            PeriodicPoint::pure(zx, 1, multiplier)
        })
        .collect()
}

/// Coefficients `(a, b, c)` of the 2-cycle quadratic `a z² + b z + c`.
pub fn two_cycle_quadratic(eps: ErrorAngle) -> (f64, f64, f64) {
    let p = MapParams::new(eps);
    let (c, s) = (p.cos_half, p.sin_half);
    (c * (s + c), -1.0, c * (c - s))
}

/// Discriminant of the 2-cycle quadratic, `1 + 2 sin ε − 2 sin² ε`.
pub fn two_cycle_discriminant(eps: ErrorAngle) -> f64 {
    let se = eps.radians().sin();
    1.0 + 2.0 * se - 2.0 * se * se
}

/// The attracting pure 2-cycle, or `None` once the pair has merged away
/// (`ε ≲ −21.5°`). Points are ordered north-most first; both carry the
/// cycle multiplier `|(f²)'| = |f'(z₁) f'(z₂)|`.
pub fn pure_two_cycle(eps: ErrorAngle) -> Option<[PeriodicPoint; 2]> {
    let disc = two_cycle_discriminant(eps);
    if disc < 0.0 {
        return None;
    }
    let (a, _, _) = two_cycle_quadratic(eps);
    let sq = disc.sqrt();
    let z1 = (1.0 + sq) / (2.0 * a);
    let z2 = (1.0 - sq) / (2.0 * a);
    let p = MapParams::new(eps);
    let d1 = p
        .pure_derivative(ExtendedComplex::new(z1, 0.0))
        .expect("finite cycle point");
    let d2 = p
        .pure_derivative(ExtendedComplex::new(z2, 0.0))
        .expect("finite cycle point");
    let multiplier = (d1 * d2).norm();
    let a_pt = PeriodicPoint::pure(ExtendedComplex::new(z1, 0.0), 2, multiplier);
    let b_pt = PeriodicPoint::pure(ExtendedComplex::new(z2, 0.0), 2, multiplier);
    // North-most first, matching the usual presentation of the cycle.
    if a_pt.location.w >= b_pt.location.w {
        Some([a_pt, b_pt])
    } else {
        Some([b_pt, a_pt])
    }
}

/// Closed form of the 2-cycle multiplier, `2 |sin ε| (1 − sin ε)`; used to
/// cross-check the derivative route.
pub fn two_cycle_multiplier_closed_form(eps: ErrorAngle) -> f64 {
    let se = eps.radians().sin();
    2.0 * se.abs() * (1.0 - se)
}

/// Analytic Jacobian of the Bloch step.
pub fn bloch_jacobian(s: BlochVector, eps: ErrorAngle) -> Mat3 {
    let p = MapParams::new(eps);
    let d = 1.0 + s.w * s.w;
    let quad = s.u * s.u - s.v * s.v;
    let u_out = (2.0 * s.w * p.cos_eps + quad * p.sin_eps) / d;
    let v_out = -2.0 * s.u * s.v / d;
    let w_out = (quad * p.cos_eps - 2.0 * s.w * p.sin_eps) / d;
    Mat3([
        [
            2.0 * s.u * p.sin_eps / d,
            -2.0 * s.v * p.sin_eps / d,
            (2.0 * p.cos_eps - 2.0 * s.w * u_out) / d,
        ],
        [-2.0 * s.v / d, -2.0 * s.u / d, -2.0 * s.w * v_out / d],
        [
            2.0 * s.u * p.cos_eps / d,
            -2.0 * s.v * p.cos_eps / d,
            (-2.0 * p.sin_eps - 2.0 * s.w * w_out) / d,
        ],
    ])
}

/// Central finite-difference Jacobian; the independent check of
/// [`bloch_jacobian`].
pub fn finite_difference_jacobian(s: BlochVector, eps: ErrorAngle, h: f64) -> Mat3 {
    let p = MapParams::new(eps);
    let f = |x: BlochVector| {
        let y = p.bloch_step(x);
        [y.u, y.v, y.w]
    };
    let mut out = [[0.0; 3]; 3];
    for col in 0..3 {
        let mut plus = [s.u, s.v, s.w];
        let mut minus = plus;
        plus[col] += h;
        minus[col] -= h;
        let fp = f(BlochVector::new(plus[0], plus[1], plus[2]));
        let fm = f(BlochVector::new(minus[0], minus[1], minus[2]));
        for row in 0..3 {
            out[row][col] = (fp[row] - fm[row]) / (2.0 * h);
        }
    }
    Mat3(out)
}

/// Multiplier of the maximally mixed state: the spectral radius of the
/// Jacobian at the origin, which is `2 |sin ε|`. It crosses 1 at |ε| = 30°.
pub fn c0_multiplier(eps: ErrorAngle) -> f64 {
    bloch_jacobian(BlochVector::ORIGIN, eps).spectral_radius()
}

/// Product of the step Jacobians around a cycle, restricted to the tangent
/// plane of the purity sphere at the base point; its spectral radius is the
/// on-sphere cycle multiplier.
pub fn tangent_cycle_multiplier(cycle: &[BlochVector], eps: ErrorAngle) -> f64 {
    let mut product = Mat3::IDENTITY;
    for point in cycle {
        product = bloch_jacobian(*point, eps).mul(&product);
    }
    let base = cycle[0];
    let n = base.norm();
    let nv = [base.u / n, base.v / n, base.w / n];
    let mut projector = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            projector[i][j] = if i == j { 1.0 } else { 0.0 } - nv[i] * nv[j];
        }
    }
    let proj = Mat3(projector);
    proj.mul(&product).mul(&proj).spectral_radius()
}

fn plane_step(p: &MapParams, u: f64, w: f64) -> (f64, f64) {
    let d = 1.0 + w * w;
    (
        (2.0 * w * p.cos_eps + u * u * p.sin_eps) / d,
        (u * u * p.cos_eps - 2.0 * w * p.sin_eps) / d,
    )
}

/// 2-D Newton polish of an invariant-plane fixed-point candidate. Returns
/// the polished point if the iteration converges inside a loose bound.
fn plane_newton(p: &MapParams, mut u: f64, mut w: f64) -> Option<(f64, f64)> {
    for _ in 0..60 {
        let (fu, fw) = plane_step(p, u, w);
        let ru = fu - u;
        let rw = fw - w;
        if ru.abs().max(rw.abs()) < 1e-14 {
            return Some((u, w));
        }
        let d = 1.0 + w * w;
        let j00 = 2.0 * u * p.sin_eps / d - 1.0;
        let j01 = (2.0 * p.cos_eps - 2.0 * w * fu) / d;
        let j10 = 2.0 * u * p.cos_eps / d;
        let j11 = (-2.0 * p.sin_eps - 2.0 * w * fw) / d - 1.0;
        let det = j00 * j11 - j01 * j10;
        if det.abs() < 1e-14 {
            return None;
        }
        u -= (ru * j11 - rw * j01) / det;
        w -= (rw * j00 - ru * j10) / det;
        if u.abs() > 3.0 || w.abs() > 3.0 {
            return None;
        }
    }
    None
}

/// The interior-branch fixed point among invariant-plane fixed points: the
/// lowest-purity point other than the maximally mixed state. While it is
/// mixed it is the phase-transition repeller; at the angle where it reaches
/// the sphere it coincides with the real pure fixed point.
pub fn interior_branch_point(plane_points: &[PeriodicPoint]) -> Option<&PeriodicPoint> {
    plane_points
        .iter()
        .filter(|p| p.location.norm_sq() > 1e-12)
        .min_by(|a, b| a.purity.partial_cmp(&b.purity).unwrap())
}

/// All fixed points `(u, 0, w)` of the Bloch step inside the closed unit
/// disk, the maximally mixed state included.
///
/// Candidates come from two independent routes — the eliminated sextic in
/// `w` and a Newton search from a 32×32 seed grid — and are merged, polished
/// and verified against the forward map before being returned (sorted by
/// descending purity).
pub fn invariant_plane_fixed_points(eps: ErrorAngle) -> Vec<PeriodicPoint> {
    let p = MapParams::new(eps);
    let (se, ce) = (p.sin_eps, p.cos_eps);

    let mut candidates: Vec<(f64, f64)> = vec![(0.0, 0.0)];

    // Route 1: eliminate u; w = 0 factors out and the remainder is
    //   s² w⁵ + 2s(s+2) w³ + (s+2)² w = cos ε (1+w²)² ((1+w²) + 2s).
    let a = 1.0 + 2.0 * se;
    let sextic = Polynomial::new(vec![
        -ce * a,
        (se + 2.0) * (se + 2.0),
        -ce * (3.0 + 4.0 * se),
        2.0 * se * (se + 2.0),
        -ce * (3.0 + 2.0 * se),
        se * se,
        -ce,
    ]);
    for w in sextic.real_roots(1e-8) {
        let d = 1.0 + w * w;
        if ce.abs() < 1e-12 {
            continue;
        }
        let u = w * (d * se + 2.0) / (d * ce);
        candidates.push((u, w));
    }

    // Route 2: Newton from a coarse seed grid over the disk.
    const GRID: usize = 32;
    for i in 0..GRID {
        for j in 0..GRID {
            let u = -1.0 + 2.0 * (i as f64 + 0.5) / GRID as f64;
            let w = -1.0 + 2.0 * (j as f64 + 0.5) / GRID as f64;
            if u * u + w * w <= 1.0 {
                candidates.push((u, w));
            }
        }
    }

    let mut verified: Vec<BlochVector> = Vec::new();
    for (u0, w0) in candidates {
        let Some((u, w)) = plane_newton(&p, u0, w0) else {
            continue;
        };
        let point = BlochVector::new(u, 0.0, w);
        if !point.is_physical(tol::PHYSICALITY) {
            continue;
        }
        if p.bloch_step(point).distance(&point) > 1e-10 {
            continue;
        }
        if verified
            .iter()
            .all(|q| q.distance(&point) > tol::ROOT_MERGE_DISTANCE)
        {
            verified.push(point);
        }
    }

    let mut points: Vec<PeriodicPoint> = verified
        .into_iter()
        .map(|s| {
            let multiplier = bloch_jacobian(s, eps).spectral_radius();
            PeriodicPoint::mixed(s, 1, multiplier)
        })
        .collect();
    points.sort_by(|a, b| b.purity.partial_cmp(&a.purity).unwrap());
    points
}

/// Failure of [`detect_long_cycle`]: the orbit never recurred within the
/// iteration budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotFound;

impl core::fmt::Display for NotFound {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "no periodic recurrence found within the iteration budget")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for NotFound {}

/// Forward-iterate past a transient, then detect the attractor the orbit
/// has settled on: the first return of the orbit to within `tol_distance`
/// of itself fixes the period, the closure is tightened as far as the
/// attractor allows, and the multiplier is read off the Jacobian product
/// around the cycle.
pub fn detect_long_cycle(
    seed: BlochVector,
    eps: ErrorAngle,
    max_iter: usize,
    tol_distance: f64,
) -> Result<DetectedCycle, NotFound> {
    let p = MapParams::new(eps);
    let max_period = 4096.min(max_iter / 2).max(1);
    let mut x = seed;
    let mut spent = 0usize;
    let mut transient = 1024usize.min(max_iter / 4).max(16);

    loop {
        for _ in 0..transient {
            x = p.bloch_step(x);
        }
        spent += transient;

        // First return of the settled orbit to its own neighborhood.
        let mut y = x;
        let mut period = None;
        for k in 1..=max_period {
            y = p.bloch_step(y);
            if y.distance(&x) < tol_distance {
                period = Some(k);
                break;
            }
        }
        if let Some(k) = period {
            // Tighten the closure while it keeps improving. Exactly
            // periodic attractors contract to machine precision here; a
            // quasi-periodic loop stalls at its recurrence scale.
            let mut residual = p.bloch_iterate(x, k).distance(&x);
            for _ in 0..200 {
                let advanced = p.bloch_iterate(x, k);
                let next_residual = p.bloch_iterate(advanced, k).distance(&advanced);
                if next_residual >= residual {
                    break;
                }
                x = advanced;
                residual = next_residual;
                if residual < 1e-13 {
                    break;
                }
            }
            if residual >= tol_distance {
                // The recurrence did not survive refinement; settle longer.
                if spent + transient > max_iter {
                    return Err(NotFound);
                }
                transient *= 2;
                continue;
            }
            let mut points = Vec::with_capacity(k);
            let mut z = x;
            for _ in 0..k {
                points.push(z);
                z = p.bloch_step(z);
            }
            let multiplier = {
                let mut product = Mat3::IDENTITY;
                for pt in &points {
                    product = bloch_jacobian(*pt, eps).mul(&product);
                }
                product.spectral_radius()
            };
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for pt in &points {
                lo = lo.min(pt.purity());
                hi = hi.max(pt.purity());
            }
            return Ok(DetectedCycle {
                period: points.len() as u32,
                points,
                multiplier,
                stability: Stability::from_multiplier(multiplier, tol::NEUTRAL_BAND),
                min_purity: lo,
                max_purity: hi,
                residual,
            });
        }

        if spent + transient > max_iter {
            return Err(NotFound);
        }
        transient *= 2;
    }
}

/// Options for [`build_inventory`].
#[derive(Debug, Clone)]
pub struct InventoryOptions {
    /// Run the numeric mixed-cycle scan (needed for |ε| > 30° regimes).
    pub detect_mixed_cycles: bool,
    pub cycle_seeds: Vec<BlochVector>,
    pub cycle_max_iter: usize,
    pub cycle_tol: f64,
}

impl Default for InventoryOptions {
    fn default() -> Self {
        InventoryOptions {
            detect_mixed_cycles: true,
            cycle_seeds: vec![
                BlochVector::new(0.1, 0.0, 0.1),
                BlochVector::new(-0.4, 0.0, -0.2),
                BlochVector::new(0.35, 0.0, -0.2),
                BlochVector::new(0.2, 0.25, 0.15),
            ],
            cycle_max_iter: 400_000,
            // Loose enough to catch quasi-periodic loops, far below the
            // default classification radius.
            cycle_tol: 1e-4,
        }
    }
}

/// Assemble the complete attractor inventory at one error angle.
pub fn build_inventory(eps: ErrorAngle, options: &InventoryOptions) -> AttractorInventory {
    let fixed = pure_fixed_points(eps);
    let cycle = pure_two_cycle(eps);

    let mut pure_attractors: Vec<PeriodicPoint> = Vec::new();
    if let Some([a, b]) = cycle {
        if a.stability != Stability::Repelling {
            pure_attractors.push(a);
            pure_attractors.push(b);
        }
    }
    if pure_attractors.is_empty() {
        for point in &fixed {
            if point.stability == Stability::Attracting {
                pure_attractors.push(point.clone());
            }
        }
    }

    let plane = invariant_plane_fixed_points(eps);
    let mixed_fixed_points: Vec<PeriodicPoint> = plane
        .iter()
        .filter(|p| p.location.norm_sq() > 1e-12 && p.purity < 1.0 - 1e-6)
        .cloned()
        .collect();

    let c0_stability = PeriodicPoint::mixed(BlochVector::ORIGIN, 1, c0_multiplier(eps));

    let mut detected_long_cycles: Vec<DetectedCycle> = Vec::new();
    // Interior orbits can only settle on something beyond the catalogued
    // points once the maximally mixed state has lost its attractiveness.
    if options.detect_mixed_cycles && c0_stability.stability != Stability::Attracting {
        for seed in &options.cycle_seeds {
            if let Ok(cycle) =
                detect_long_cycle(*seed, eps, options.cycle_max_iter, options.cycle_tol)
            {
                let is_mixed = cycle.max_purity < 1.0 - 1e-6;
                let is_new = detected_long_cycles.iter().all(|c: &DetectedCycle| {
                    c.period != cycle.period || c.points[0].distance(&cycle.points[0]) > 1e-3
                }) && cycle
                    .points
                    .iter()
                    .all(|pt| pt.distance(&BlochVector::ORIGIN) > 1e-4);
                if is_mixed && is_new && cycle.stability != Stability::Repelling {
                    detected_long_cycles.push(cycle);
                }
            }
        }
    }

    AttractorInventory {
        epsilon: eps,
        pure_attractors,
        pure_fixed_points: fixed,
        mixed_fixed_points,
        c0_stability,
        detected_long_cycles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn error_free_fixed_points_solve_the_cubic() {
        let points = pure_fixed_points(ErrorAngle::ZERO);
        assert_eq!(points.len(), 3);
        // One real root, all repelling, cubic residual tiny.
        let real = &points[0];
        let z = real.riemann.unwrap().finite().unwrap();
        assert_eq!(z.im, 0.0);
        let residual = z * z * z + z * z + z - 1.0;
        assert!(residual.norm() < 1e-12);
        for p in &points {
            assert!(p.multiplier > 1.0, "multiplier {}", p.multiplier);
            assert_eq!(p.stability, Stability::Repelling);
        }
    }

    #[test]
    fn real_fixed_point_at_ten_degrees_matches_bloch_location() {
        let points = pure_fixed_points(ErrorAngle::from_degrees(10.0));
        let real = &points[0];
        assert_abs_diff_eq!(real.location.u, 0.877, epsilon = 5e-4);
        assert_abs_diff_eq!(real.location.w, 0.48, epsilon = 5e-4);
    }

    #[test]
    fn error_free_cycle_is_superattractive() {
        let [a, b] = pure_two_cycle(ErrorAngle::ZERO).unwrap();
        assert!(a.location.distance(&BlochVector::new(0.0, 0.0, 1.0)) < 1e-12);
        assert!(b.location.distance(&BlochVector::new(1.0, 0.0, 0.0)) < 1e-12);
        assert!(a.multiplier < 1e-12);
        assert_eq!(a.stability, Stability::Attracting);
    }

    #[test]
    fn cycle_multiplier_matches_closed_form() {
        for &deg in &[-21.0, -10.0, -4.5, -1.0, 0.0, 1.0, 4.5, 10.0] {
            let eps = ErrorAngle::from_degrees(deg);
            let [a, _] = pure_two_cycle(eps).unwrap();
            assert_abs_diff_eq!(
                a.multiplier,
                two_cycle_multiplier_closed_form(eps),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn cycle_merges_between_minus_21_and_22_degrees() {
        assert!(pure_two_cycle(ErrorAngle::from_degrees(-21.0)).is_some());
        assert!(pure_two_cycle(ErrorAngle::from_degrees(-22.0)).is_none());
        let merge = two_cycle_merge_epsilon().to_degrees();
        assert_abs_diff_eq!(merge, -21.47, epsilon = 0.01);
    }

    #[test]
    fn post_merge_single_attractor_is_a_true_fixed_point() {
        let eps = ErrorAngle::from_degrees(-25.0);
        let inventory = build_inventory(eps, &InventoryOptions {
            detect_mixed_cycles: false,
            ..Default::default()
        });
        let single = inventory.single_pure_attractor().expect("single attractor");
        let p = MapParams::new(eps);
        assert!(p.bloch_step(single.location).distance(&single.location) < 1e-9);
        assert!(single.multiplier < 1.0);
    }

    #[test]
    fn origin_jacobian_has_single_nonzero_column() {
        for &deg in &[0.0, 9.0, -33.0] {
            let eps = ErrorAngle::from_degrees(deg);
            let jac = bloch_jacobian(BlochVector::ORIGIN, eps);
            let e = eps.radians();
            let expect = Mat3([
                [0.0, 0.0, 2.0 * e.cos()],
                [0.0, 0.0, 0.0],
                [0.0, 0.0, -2.0 * e.sin()],
            ]);
            for i in 0..3 {
                for j in 0..3 {
                    assert_abs_diff_eq!(jac.0[i][j], expect.0[i][j], epsilon = 1e-14);
                }
            }
        }
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let states = [
            BlochVector::new(0.2, 0.3, -0.4),
            BlochVector::new(-0.7, 0.1, 0.6),
            BlochVector::new(0.0, 0.0, 0.9),
        ];
        for &deg in &[0.0, 4.5, -27.0] {
            let eps = ErrorAngle::from_degrees(deg);
            for s in states {
                let analytic = bloch_jacobian(s, eps);
                let numeric = finite_difference_jacobian(s, eps, 1e-6);
                for i in 0..3 {
                    for j in 0..3 {
                        let scale = analytic.0[i][j].abs().max(1.0);
                        assert!(
                            (analytic.0[i][j] - numeric.0[i][j]).abs() / scale < 1e-6,
                            "entry ({i},{j}) at ε={deg}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn c0_multiplier_is_twice_abs_sin() {
        for &deg in &[0.0, 10.0, 30.0, 45.0, -30.0, -45.0] {
            let eps = ErrorAngle::from_degrees(deg);
            let expect = 2.0 * eps.radians().sin().abs();
            assert_abs_diff_eq!(c0_multiplier(eps), expect, epsilon = 1e-9);
        }
        assert_abs_diff_eq!(c0_multiplier(ErrorAngle::from_degrees(30.0)), 1.0, epsilon = 1e-9);
        assert!(c0_multiplier(ErrorAngle::from_degrees(45.0)) > 1.0);
    }

    #[test]
    fn cycle_jacobian_product_is_superattractive_at_zero_error() {
        let eps = ErrorAngle::ZERO;
        let [a, b] = pure_two_cycle(eps).unwrap();
        let product = bloch_jacobian(b.location, eps).mul(&bloch_jacobian(a.location, eps));
        assert!(product.spectral_radius() < 1e-9);
    }

    #[test]
    fn tangent_multiplier_agrees_with_complex_derivative() {
        for &deg in &[-10.0, -4.5, 1.0, 4.5, 10.0] {
            let eps = ErrorAngle::from_degrees(deg);
            let [a, b] = pure_two_cycle(eps).unwrap();
            let tangent = tangent_cycle_multiplier(&[a.location, b.location], eps);
            assert_abs_diff_eq!(tangent, a.multiplier, epsilon = 1e-6);
        }
    }

    #[test]
    fn plane_fixed_points_error_free() {
        let points = invariant_plane_fixed_points(ErrorAngle::ZERO);
        // C2 (pure), C3 (interior) and the origin.
        assert_eq!(points.len(), 3);
        let c3 = points
            .iter()
            .find(|p| p.purity < 1.0 - 1e-6 && p.location.norm_sq() > 1e-6)
            .unwrap();
        assert_abs_diff_eq!(c3.location.u, 0.639, epsilon = 5e-4);
        assert_abs_diff_eq!(c3.location.w, 0.361, epsilon = 5e-4);
        assert_abs_diff_eq!(c3.purity, 0.769, epsilon = 5e-4);
        assert!(c3.multiplier > 1.0);
    }

    #[test]
    fn interior_point_purity_increases_with_epsilon() {
        let mut last = 0.0;
        for deg in -10..=10 {
            let eps = ErrorAngle::from_degrees(deg as f64);
            let plane = invariant_plane_fixed_points(eps);
            let c3 = interior_branch_point(&plane).expect("interior branch point");
            assert!(c3.purity > last, "purity not increasing at {deg}°");
            last = c3.purity;
        }
    }

    #[test]
    fn long_cycle_detection_finds_known_attractors() {
        let c1 = detect_long_cycle(
            BlochVector::new(0.9, 0.0, 0.05),
            ErrorAngle::ZERO,
            100_000,
            1e-7,
        )
        .unwrap();
        assert_eq!(c1.period, 2);
        assert!(c1.max_purity > 1.0 - 1e-9);

        let c0 = detect_long_cycle(
            BlochVector::new(0.01, 0.0, 0.01),
            ErrorAngle::ZERO,
            100_000,
            1e-7,
        )
        .unwrap();
        assert_eq!(c0.period, 1);
        assert!(c0.points[0].distance(&BlochVector::ORIGIN) < 1e-9);
    }

    #[test]
    fn deep_under_rotation_has_interior_mixed_cycle() {
        // The attractor is an invariant loop in the third quadrant of the
        // invariant plane; it recurs at the detection tolerance rather than
        // closing exactly.
        let cycle = detect_long_cycle(
            BlochVector::new(-0.4, 0.0, -0.2),
            ErrorAngle::from_degrees(-45.0),
            400_000,
            1e-4,
        )
        .unwrap();
        assert!(cycle.period >= 2, "period {}", cycle.period);
        assert!(cycle.max_purity < 1.0 - 1e-6);
        assert!(cycle.residual < 1e-4);

        let inventory = build_inventory(ErrorAngle::from_degrees(-45.0), &InventoryOptions::default());
        assert!(
            !inventory.detected_long_cycles.is_empty(),
            "inventory missed the mixed cycle"
        );
    }

    #[test]
    fn attracting_pure_cycle_count_is_bounded_by_critical_points() {
        for deg in (-45..=45).step_by(3) {
            let eps = ErrorAngle::from_degrees(deg as f64);
            let fixed = pure_fixed_points(eps);
            let mut attracting = fixed
                .iter()
                .filter(|p| p.stability == Stability::Attracting)
                .count();
            if let Some([a, _]) = pure_two_cycle(eps) {
                if a.stability == Stability::Attracting {
                    attracting += 1;
                }
            }
            assert!(attracting <= 2, "{attracting} attracting cycles at {deg}°");
        }
    }
}
