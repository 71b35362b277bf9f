//! Core dynamics of an iterated nonlinear qubit protocol with a coherently
//! miscalibrated Hadamard gate.
//!
//! One protocol step consumes two copies of a qubit state: a CNOT entangles
//! them, the target qubit is measured, the control qubit is kept only on
//! outcome `0`, and a (faulty) Hadamard is applied to the kept qubit. On pure
//! states the induced dynamics is a quadratic rational map of the Riemann
//! sphere; on mixed states it is a cubic-rational self-map of the Bloch ball.
//!
//! This crate provides, with no I/O and no global state:
//!
//! * the exact forward maps ([`pure_step`], [`bloch_step`]) and a brute-force
//!   two-qubit density-matrix [`oracle`] that re-derives one step from the
//!   circuit itself;
//! * enumeration of fixed points and 2-cycles with multipliers and stability
//!   ([`stability`]);
//! * the inverse maps and backward-iteration generators for Julia and
//!   quasi-Julia point clouds, plus the critical-purity computation
//!   ([`backward`]);
//! * basin-of-attraction classification and rasterization over the invariant
//!   plane or projected purity spheres ([`basin`]);
//! * boundary extraction and box-counting fractal dimension ([`fractal`]).
//!
//! Everything is pure and deterministic: randomized routines take explicit
//! seeds and use a counter-based generator ([`rng`]), so results do not
//! depend on scheduling or thread count.
//!
//! The crate is `no_std`-compatible (`default-features = false`); it only
//! needs `alloc`.
#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod angle;
pub mod backward;
pub mod basin;
pub mod bloch;
pub mod fractal;
pub mod maps;
pub mod mat3;
pub mod oracle;
pub mod poly;
pub mod riemann;
pub mod rng;
pub mod stability;
pub mod tol;

pub use angle::{AngleUnit, ErrorAngle};
pub use bloch::BlochVector;
pub use maps::{bloch_step, pure_step, MapParams};
pub use riemann::ExtendedComplex;
pub use stability::{AttractorInventory, PeriodicPoint, Stability};
