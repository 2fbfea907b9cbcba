//! Exact computational toolkit for type-A affine Hecke algebras and their
//! quantum-group shadows.
//!
//! The crate decides irreducibility of induction products of evaluation
//! modules along three mutually verifying routes:
//!
//! * a hook-length criterion on the evaluation parameters ([`multisegments`]),
//! * expansion of products in the dual canonical basis of the coordinate ring
//!   of the infinite unitriangular group ([`grothendieck`], backed by the
//!   canonical-basis engine in [`uqn`]),
//! * explicit module construction and a Burnside span test ([`hecke`]).
//!
//! On top of these, [`rmatrix`] builds evaluation modules of quantum affine
//! sl_N by fusion, solves for trigonometric intertwiners at exact rational
//! sample points, and reconstructs their matrix entries as rational functions
//! of the spectral parameter to locate all poles and zeros.
//!
//! Everything is exact: arbitrary-precision integers and rationals, sparse
//! Laurent polynomials, and a dense rational-function field ([`arith`]).
//! No floating point is used anywhere.

pub mod arith;
pub mod grothendieck;
pub mod hecke;
pub mod linalg;
pub mod multisegments;
pub mod partitions;
pub mod rmatrix;
pub mod uqn;

pub use arith::{parse_rational, IntPoly, Laurent, RatFun, Scalar};
pub use multisegments::{ColumnSet, EvaluationPoint, Multisegment, Segment};
pub use partitions::{HookExponentSet, HookMode, Partition, Tableau};
