//! Central numeric tolerances.
//!
//! All thresholds used by the library live here so they are documented once
//! and can be referenced from tests. Functions that accept a tolerance
//! parameter default to these values.

/// Allowed overshoot of `u² + v² + w²` beyond 1 for a state to count as
/// physical (accumulated rounding along forward orbits).
pub const PHYSICALITY: f64 = 1e-9;

/// Maximum component error between a closed-form map and the two-qubit
/// circuit simulation.
pub const ORACLE: f64 = 1e-12;

/// Agreement between the pure-map route and the Bloch route for the same
/// step (conjugacy through the Riemann parameterization).
pub const CONJUGACY: f64 = 1e-10;

/// A reported period-`k` point must return to itself under `k` map
/// applications within this distance.
pub const FIXED_POINT_RESIDUAL: f64 = 1e-9;

/// Half-width of the multiplier band `|λ − 1|` classified as neutral.
pub const NEUTRAL_BAND: f64 = 1e-6;

/// Distance below which two candidate fixed points are considered the same
/// root and merged.
pub const ROOT_MERGE_DISTANCE: f64 = 1e-7;

/// Forward-image residual for accepting a preimage produced by the inverse
/// Bloch map.
pub const PREIMAGE_ROUNDTRIP: f64 = 1e-9;

/// Forward-image residual for accepting a preimage of the pure complex map.
pub const PURE_PREIMAGE_ROUNDTRIP: f64 = 1e-10;

/// Denominators below this value are treated as vanishing when inverting
/// the Bloch map.
pub const DEGENERATE_DENOMINATOR: f64 = 1e-15;

/// Default convergence radius around attractors for basin classification.
pub const CONVERGENCE_RADIUS: f64 = 1e-3;
