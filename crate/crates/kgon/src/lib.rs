//! Maximum-area inscribed polygons in convex polygons, computed exactly.
//!
//! Given a strictly convex polygon `P` with integer coordinates, this crate
//! finds the largest-area polygon with `k` vertices chosen among the
//! vertices of `P`, implements the classic Dobkin–Snyder rotating-pointer
//! heuristic for `k = 4` in both of its published readings, and
//! machine-verifies a 16-vertex polygon on which that heuristic is
//! sub-optimal from every starting vertex. A fuzzing harness searches for
//! further failing instances and shrinks the ones it finds.
//!
//! All solver arithmetic is exact: coordinates are bounded integers, areas
//! are integer shoelace sums accumulated in `i128`, and no floating point is
//! used anywhere. Results are bit-exact and platform-independent.
//!
//! ```
//! use kgon::{brute_force, ds_all_roots, sweep_quad, ConvexPolygon, DsVariant, Point2};
//!
//! let hexagon = ConvexPolygon::new(&[
//!     Point2::new(2, 0), Point2::new(1, 2), Point2::new(-1, 2),
//!     Point2::new(-2, 0), Point2::new(-1, -2), Point2::new(1, -2),
//! ])?;
//! let exact = sweep_quad(&hexagon)?;
//! assert_eq!(exact, brute_force(&hexagon, 4)?);
//! assert_eq!(exact.area.0, 16);
//!
//! // on this polygon the heuristic happens to find the optimum
//! let (_, best) = ds_all_roots(&hexagon, DsVariant::Literal)?;
//! assert_eq!(best.area, exact.area);
//! # Ok::<(), kgon::Error>(())
//! ```
//!
//! * [`geom`] — points, polygons, orientation and area primitives.
//! * [`solver`] — three independent exact solvers that cross-validate.
//! * [`heuristic`] — the rotating-pointer heuristic with full traces.
//! * [`stability`] — stable vertices and k-stable polygon enumeration.
//! * [`fuzz`] — random polygon generation, campaign runner, shrinker.
//! * [`repro`] — the embedded counterexample and its verdict.

pub mod error;
pub mod fuzz;
pub mod geom;
pub mod heuristic;
pub mod repro;
pub mod solver;
pub mod stability;

pub use error::Error;
pub use fuzz::{
    derive_seed, fuzz_campaign, random_convex, shrink, FuzzConfig, FuzzReport, FuzzSummary,
    TrialOutcome, TrialRecord, VariantResult,
};
pub use geom::{
    canonicalize, orientation, twice_area, validate, ConvexPolygon, IndexTuple, Point2, TwiceArea,
    Validated, COORD_LIMIT,
};
pub use heuristic::{ds_all_roots, ds_run, DsRun, DsVariant, PointerAdvances, StepAction, TraceStep};
pub use repro::{
    counterexample_polygon, verify_counterexample, verify_counterexample_with, ReproReport,
    RootSummary, VariantVerdict,
};
pub use solver::{brute_force, dp_kgon, sweep_quad, Solution, BRUTE_FORCE_LIMIT};
pub use stability::{enumerate_stable, is_stable, stable_count, Strictness, ENUMERATE_LIMIT};
