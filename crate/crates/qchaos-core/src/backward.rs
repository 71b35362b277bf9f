//! Inverse maps and backward iteration: Julia and quasi-Julia point clouds
//! and the critical purity of the phase transition.
//!
//! The pure map is 2-to-1, so every point has two preimages
//! `±√((s − z c)/(c + z s))`. The Bloch step inverts algebraically: writing
//! uppercase for the image and lowercase for the preimage,
//!
//! ```text
//! A = 1 − U cos ε + W sin ε,   B = 1 + U cos ε − W sin ε,
//! w = (1 − √(A/B)) / (1 + √(A/B)),
//! (u − i v)² = (1 + w²) (U sin ε + W cos ε + i V),
//! ```
//!
//! the two complex square-root branches giving the candidate preimages
//! `(u, v, w)` and `(−u, −v, w)`. Only the `√(A/B) ≥ 0` branch yields
//! `|w| ≤ 1`. Every candidate is accepted only if it is physical and its
//! forward image lands back on the input — the round-trip property is the
//! definition of the inverse here, and it is what all tests enforce.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_complex::Complex64;

use crate::angle::ErrorAngle;
use crate::bloch::BlochVector;
use crate::maps::MapParams;
use crate::riemann::ExtendedComplex;
use crate::rng::CounterRng;
use crate::stability::{invariant_plane_fixed_points, pure_fixed_points, PeriodicPoint, Stability};
use crate::tol;

/// Branch policy of a backward-iteration run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum BranchMode {
    /// Keep every branch: 2^depth points after `depth` levels.
    FullTree,
    /// One long orbit with seeded random branch choices.
    RandomBranch,
}

/// Sign of one inverse branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// Errors of the backward-iteration generators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BackwardError {
    /// A full tree of this depth would not fit in memory.
    DepthTooLarge { requested: u32, max: u32 },
    /// Every branch pruned (left the ball) before the requested depth.
    DeadEnd { reached: u32 },
    /// No interior repelling fixed point exists at this error angle, so the
    /// critical purity is undefined.
    NoInteriorRepeller,
}

impl fmt::Display for BackwardError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BackwardError::DepthTooLarge { requested, max } => {
                write!(f, "full-tree depth {requested} exceeds the maximum {max}")
            }
            BackwardError::DeadEnd { reached } => {
                write!(f, "all backward branches pruned at depth {reached}")
            }
            BackwardError::NoInteriorRepeller => {
                write!(f, "no interior repelling fixed point at this error angle")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for BackwardError {}

/// The two preimages of `z` under the pure map.
///
/// At a branch point (radicand 0 or ∞) the doubled single preimage is
/// returned in both slots.
pub fn pure_preimages(z: ExtendedComplex, eps: ErrorAngle) -> (ExtendedComplex, ExtendedComplex) {
    let p = MapParams::new(eps);
    let (c, s) = (p.cos_half, p.sin_half);
    let radicand = match z {
        ExtendedComplex::Finite(z) => {
            let den = Complex64::new(c, 0.0) + z * s;
            if den.norm_sqr() == 0.0 {
                return (ExtendedComplex::Infinity, ExtendedComplex::Infinity);
            }
            (Complex64::new(s, 0.0) - z * c) / den
        }
        // (s − z c)/(c + z s) → −c/s on the way to infinity.
        ExtendedComplex::Infinity => Complex64::new(-c / s, 0.0),
    };
    let root = radicand.sqrt();
    (
        ExtendedComplex::from_complex(root),
        ExtendedComplex::from_complex(-root),
    )
}

/// The preimages of `t` under the Bloch step that exist inside the ball:
/// an empty list means `t` has no physical preimage.
///
/// Candidates are accepted only when physical within `tol::PHYSICALITY` and
/// round-tripping through the forward map within `tol::PREIMAGE_ROUNDTRIP`.
pub fn bloch_preimages(t: BlochVector, eps: ErrorAngle) -> Vec<BlochVector> {
    let p = MapParams::new(eps);
    let x = t.u * p.cos_eps - t.w * p.sin_eps;
    let a = (1.0 - x).max(0.0);
    let b = 1.0 + x;
    if b < tol::DEGENERATE_DENOMINATOR {
        return Vec::new();
    }
    let ratio = (a / b).sqrt();
    let w = (1.0 - ratio) / (1.0 + ratio);

    let xi = Complex64::new(t.u * p.sin_eps + t.w * p.cos_eps, t.v) * (1.0 + w * w);
    let root = xi.sqrt();
    // u − iv = ±√ξ
    let first = BlochVector::new(root.re, -root.im, w);
    let second = BlochVector::new(-root.re, root.im, w);

    let mut out = Vec::with_capacity(2);
    for candidate in [first, second] {
        if !candidate.is_physical(tol::PHYSICALITY) {
            continue;
        }
        if p.bloch_step(candidate).distance(&t) > tol::PREIMAGE_ROUNDTRIP {
            continue;
        }
        if out
            .iter()
            .all(|q: &BlochVector| q.distance(&candidate) > 1e-15)
        {
            out.push(candidate);
        }
    }
    out
}

/// Preimage on one fixed branch, if it exists.
pub fn bloch_preimage_branch(
    t: BlochVector,
    eps: ErrorAngle,
    branch: Branch,
) -> Option<BlochVector> {
    let all = bloch_preimages(t, eps);
    match (branch, all.len()) {
        (_, 0) => None,
        (Branch::Plus, _) => Some(all[0]),
        (Branch::Minus, 1) => Some(all[0]),
        (Branch::Minus, _) => Some(all[1]),
    }
}

/// A backward-iterated set of points with its generator settings.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PointCloud<P> {
    pub points: Vec<P>,
    /// Backward depth at which each point was generated; pushing a point
    /// forward this many steps returns to `start`.
    pub generations: Vec<u32>,
    pub epsilon: ErrorAngle,
    pub depth: u32,
    pub mode: BranchMode,
    pub seed: u64,
    pub start: P,
}

/// Largest full-tree depth (2^24 points ≈ 400 MB of coordinates is the
/// sensible ceiling).
pub const MAX_FULL_TREE_DEPTH: u32 = 24;

/// Transient discarded at the head of every random-branch orbit.
pub const RANDOM_BRANCH_TRANSIENT: u32 = 20;

/// The starting point used for Julia clouds: a repelling fixed point of the
/// pure map, preferring the real one (after the cycle merge the real root
/// turns attracting and a complex root is used instead).
pub fn julia_start(eps: ErrorAngle) -> ExtendedComplex {
    let fixed = pure_fixed_points(eps);
    fixed
        .iter()
        .find(|p| p.stability == Stability::Repelling)
        .map(|p| p.riemann.expect("pure fixed points carry a Riemann coordinate"))
        .unwrap_or_else(|| fixed[0].riemann.expect("cubic always has roots"))
}

/// Points of the Julia set by backward iteration from a repelling fixed
/// point.
pub fn julia_cloud(
    eps: ErrorAngle,
    depth: u32,
    mode: BranchMode,
    seed: u64,
) -> Result<PointCloud<ExtendedComplex>, BackwardError> {
    let start = julia_start(eps);
    match mode {
        BranchMode::FullTree => {
            if depth > MAX_FULL_TREE_DEPTH {
                return Err(BackwardError::DepthTooLarge {
                    requested: depth,
                    max: MAX_FULL_TREE_DEPTH,
                });
            }
            let mut level = vec![start];
            for _ in 0..depth {
                let mut next = Vec::with_capacity(level.len() * 2);
                for z in level {
                    let (a, b) = pure_preimages(z, eps);
                    next.push(a);
                    next.push(b);
                }
                level = next;
            }
            let generations = vec![depth; level.len()];
            Ok(PointCloud {
                points: level,
                generations,
                epsilon: eps,
                depth,
                mode,
                seed,
                start,
            })
        }
        BranchMode::RandomBranch => {
            let total = depth + RANDOM_BRANCH_TRANSIENT;
            let mut points = Vec::with_capacity(depth as usize);
            let mut generations = Vec::with_capacity(depth as usize);
            let mut z = start;
            for step in 0..total {
                let (a, b) = pure_preimages(z, eps);
                z = if CounterRng::new(seed, step as u64).next_bool() {
                    a
                } else {
                    b
                };
                if step >= RANDOM_BRANCH_TRANSIENT {
                    points.push(z);
                    generations.push(step + 1);
                }
            }
            Ok(PointCloud {
                points,
                generations,
                epsilon: eps,
                depth,
                mode,
                seed,
                start,
            })
        }
    }
}

/// Backward orbit(s) of a mixed starting point under the inverse Bloch map,
/// pruning branches that leave the ball.
pub fn quasi_julia_cloud(
    start: BlochVector,
    eps: ErrorAngle,
    depth: u32,
    mode: BranchMode,
    seed: u64,
) -> Result<PointCloud<BlochVector>, BackwardError> {
    match mode {
        BranchMode::FullTree => {
            if depth > MAX_FULL_TREE_DEPTH {
                return Err(BackwardError::DepthTooLarge {
                    requested: depth,
                    max: MAX_FULL_TREE_DEPTH,
                });
            }
            let mut points = Vec::new();
            let mut generations = Vec::new();
            let mut level = vec![start];
            for gen in 1..=depth {
                let mut next = Vec::with_capacity(level.len() * 2);
                for t in &level {
                    next.extend(bloch_preimages(*t, eps));
                }
                if next.is_empty() {
                    return Err(BackwardError::DeadEnd { reached: gen - 1 });
                }
                points.extend_from_slice(&next);
                generations.extend(core::iter::repeat(gen).take(next.len()));
                level = next;
            }
            Ok(PointCloud {
                points,
                generations,
                epsilon: eps,
                depth,
                mode,
                seed,
                start,
            })
        }
        BranchMode::RandomBranch => {
            let total = depth + RANDOM_BRANCH_TRANSIENT;
            let mut points = Vec::with_capacity(depth as usize);
            let mut generations = Vec::with_capacity(depth as usize);
            let mut t = start;
            for step in 0..total {
                let pre = bloch_preimages(t, eps);
                t = match pre.len() {
                    0 => return Err(BackwardError::DeadEnd { reached: step }),
                    1 => pre[0],
                    _ => {
                        if CounterRng::new(seed, step as u64).next_bool() {
                            pre[0]
                        } else {
                            pre[1]
                        }
                    }
                };
                if step >= RANDOM_BRANCH_TRANSIENT {
                    points.push(t);
                    generations.push(step + 1);
                }
            }
            Ok(PointCloud {
                points,
                generations,
                epsilon: eps,
                mode,
                depth,
                seed,
                start,
            })
        }
    }
}

/// Backward orbit applying the same branch at every step; stops early if the
/// branch dies.
pub fn constant_branch_orbit(
    start: BlochVector,
    eps: ErrorAngle,
    branch: Branch,
    steps: u32,
) -> Vec<BlochVector> {
    let mut orbit = Vec::with_capacity(steps as usize);
    let mut t = start;
    for _ in 0..steps {
        match bloch_preimage_branch(t, eps, branch) {
            Some(next) => {
                t = next;
                orbit.push(t);
            }
            None => break,
        }
    }
    orbit
}

/// The critical purity of the phase transition at one error angle.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CriticalPurity {
    /// Purity of the interior repelling fixed point.
    pub p3: f64,
    /// Lowest purity among that point and its invariant-plane preimages:
    /// the purity below which the fractal boundary disappears.
    pub p_c: f64,
    /// The invariant-plane point realizing the minimum.
    pub argmin: BlochVector,
    /// The interior repelling fixed point itself.
    pub interior_fixed_point: BlochVector,
    /// Lowest purity over the whole preimage tree, off-plane points
    /// included. Off-plane preimages can dip slightly below `p_c` (see
    /// [`CriticalPurity::offplane_below_pc`]); the plane minimum is what the
    /// dimension scans locate.
    pub tree_min_purity: f64,
    /// True when a valid off-plane preimage was found below the plane
    /// minimum, i.e. the preimage tree is richer than the four
    /// invariant-plane points it is usually reduced to.
    pub offplane_below_pc: bool,
}

/// Depth of the preimage tree explored by [`critical_purity`]; the minimum
/// sits on the fixed point or one of its quadrant preimages, so four levels
/// are ample.
pub const CRITICAL_PURITY_DEPTH: u32 = 4;

/// The critical purity: the lowest purity among the interior repelling
/// fixed point and its valid preimages on the invariant plane, explored to
/// [`CRITICAL_PURITY_DEPTH`] levels with both branches and invalid
/// candidates pruned.
///
/// The full tree (off-plane preimages included) is also explored and its
/// minimum reported as a diagnostic: for over-rotations it can fall
/// slightly below the plane minimum.
pub fn critical_purity(eps: ErrorAngle) -> Result<CriticalPurity, BackwardError> {
    let plane = invariant_plane_fixed_points(eps);
    let c3: &PeriodicPoint = plane
        .iter()
        .filter(|p| {
            p.stability == Stability::Repelling
                && p.location.norm_sq() > 1e-12
                && p.purity < 1.0 - 1e-9
        })
        .min_by(|a, b| a.purity.partial_cmp(&b.purity).unwrap())
        .ok_or(BackwardError::NoInteriorRepeller)?;

    let start = c3.location;
    let mut visited: Vec<BlochVector> = vec![start];
    let mut frontier: Vec<BlochVector> = vec![start];
    for _ in 0..CRITICAL_PURITY_DEPTH {
        let mut next = Vec::new();
        for t in &frontier {
            for pre in bloch_preimages(*t, eps) {
                if visited.iter().all(|q| q.distance(&pre) > 1e-9) {
                    visited.push(pre);
                    next.push(pre);
                }
            }
        }
        frontier = next;
    }

    let argmin = visited
        .iter()
        .filter(|p| p.v.abs() < 1e-9)
        .min_by(|a, b| a.purity().partial_cmp(&b.purity()).unwrap())
        .copied()
        .expect("tree contains at least the start");
    let tree_min_purity = visited
        .iter()
        .map(|p| p.purity())
        .fold(f64::INFINITY, f64::min);
    let p_c = argmin.purity();
    Ok(CriticalPurity {
        p3: start.purity(),
        p_c,
        argmin,
        interior_fixed_point: start,
        tree_min_purity,
        offplane_below_pc: tree_min_purity < p_c - 1e-9,
    })
}
