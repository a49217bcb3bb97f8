//! The Dobkin–Snyder rotating-pointer heuristic for the largest inscribed
//! quadrilateral, in two variants.
//!
//! Four pointers `a`, `b`, `c`, `d` start at a root vertex and its three
//! counter-clockwise successors and only ever move forward. For each position
//! of `a` the trailing pointers are advanced while that (locally) improves
//! the quadrilateral `abcd`, the best quadrilateral seen is recorded, and `a`
//! moves on, until `a` has gone all the way around. The premise is that the
//! area behaves unimodally under such advances; the premise is wrong, and
//! [`crate::repro`] carries a 16-vertex polygon where the heuristic is
//! sub-optimal from every root.
//!
//! The classic description of the algorithm is ambiguous, so both readings
//! are implemented:
//!
//! * [`DsVariant::Literal`] — control flow exactly as in the printed
//!   pseudocode: non-strict comparisons (`area(abcd) <= area(candidate)`),
//!   with the `c`- and `b`-loops nested *inside* the body of the `d`-loop,
//!   so they only run after a `d` advance.
//! * [`DsVariant::Prose`] — the textual description: an advance must
//!   strictly increase the area; `d` is advanced greedily, then a single `c`
//!   advance retries `d`, then a single `b` advance retries `d` and `c`,
//!   until a fixed point is reached.
//!
//! Both variants maintain the unrolled pointer order `a < b < c < d < a+n`;
//! an advance that would violate it is refused and counts as "cannot
//! advance". This guarantees termination even under area ties, which the
//! `Literal` variant's non-strict comparisons would otherwise chase forever.

use rayon::prelude::*;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geom::{quad_area, ConvexPolygon, IndexTuple, TwiceArea};
use crate::solver::Solution;

/// Which reading of the heuristic to execute.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DsVariant {
    Literal,
    Prose,
}

impl DsVariant {
    pub const ALL: [DsVariant; 2] = [DsVariant::Literal, DsVariant::Prose];

    pub fn name(self) -> &'static str {
        match self {
            DsVariant::Literal => "literal",
            DsVariant::Prose => "prose",
        }
    }
}

impl std::fmt::Display for DsVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One action of a heuristic run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepAction {
    AdvanceA,
    AdvanceB,
    AdvanceC,
    AdvanceD,
    Record,
}

/// One step of a heuristic run: the action, the unrolled pointer positions
/// after it, and the (possibly degenerate) twice-area of `abcd` after it.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TraceStep {
    pub action: StepAction,
    /// Unrolled `(a, b, c, d)` positions; reduce modulo `n` for vertex indices.
    pub positions: [usize; 4],
    pub area: TwiceArea,
}

/// Area-driven advances per pointer. Collision fix-ups that keep the pointer
/// order intact after `a` moves are visible in the trace but not counted
/// here.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct PointerAdvances {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// Full record of one heuristic execution from one root.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DsRun {
    pub root: usize,
    pub variant: DsVariant,
    /// Best quadrilateral found, canonical; ties keep the first encountered.
    pub best: IndexTuple,
    pub best_area: TwiceArea,
    pub advances: PointerAdvances,
    pub trace: Vec<TraceStep>,
}

struct Runner<'a> {
    poly: &'a ConvexPolygon,
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    advances: PointerAdvances,
    trace: Vec<TraceStep>,
}

impl<'a> Runner<'a> {
    fn new(poly: &'a ConvexPolygon, root: usize) -> Self {
        Runner {
            poly,
            n: poly.len(),
            a: root,
            b: root + 1,
            c: root + 2,
            d: root + 3,
            advances: PointerAdvances::default(),
            trace: Vec::new(),
        }
    }

    #[inline]
    fn area(&self, a: usize, b: usize, c: usize, d: usize) -> i128 {
        quad_area(
            self.poly.cyclic(a),
            self.poly.cyclic(b),
            self.poly.cyclic(c),
            self.poly.cyclic(d),
        )
    }

    #[inline]
    fn current_area(&self) -> i128 {
        self.area(self.a, self.b, self.c, self.d)
    }

    fn push(&mut self, action: StepAction) {
        self.trace.push(TraceStep {
            action,
            positions: [self.a, self.b, self.c, self.d],
            area: TwiceArea(self.current_area()),
        });
    }

    fn canonical(&self) -> IndexTuple {
        let mut idx = [self.a % self.n, self.b % self.n, self.c % self.n, self.d % self.n];
        idx.sort_unstable();
        IndexTuple::from_canonical(idx.to_vec())
    }

    /// `accept(current, candidate)` decides a `d` advance; refused when the
    /// next position would collide with `a`'s vertex.
    fn try_advance_d(&mut self, accept: impl Fn(i128, i128) -> bool) -> bool {
        if self.d + 1 >= self.a + self.n {
            return false;
        }
        if accept(self.current_area(), self.area(self.a, self.b, self.c, self.d + 1)) {
            self.d += 1;
            self.advances.d += 1;
            self.push(StepAction::AdvanceD);
            return true;
        }
        false
    }

    fn try_advance_c(&mut self, accept: impl Fn(i128, i128) -> bool) -> bool {
        if self.c + 1 >= self.d {
            return false;
        }
        if accept(self.current_area(), self.area(self.a, self.b, self.c + 1, self.d)) {
            self.c += 1;
            self.advances.c += 1;
            self.push(StepAction::AdvanceC);
            return true;
        }
        false
    }

    fn try_advance_b(&mut self, accept: impl Fn(i128, i128) -> bool) -> bool {
        if self.b + 1 >= self.c {
            return false;
        }
        if accept(self.current_area(), self.area(self.a, self.b + 1, self.c, self.d)) {
            self.b += 1;
            self.advances.b += 1;
            self.push(StepAction::AdvanceB);
            return true;
        }
        false
    }

    /// Literal pseudocode: `while area(abcd) <= area(abc next(d))` advance
    /// `d`, running the `c`- and `b`-loops after every `d` advance.
    fn settle_literal(&mut self) {
        let le = |cur: i128, cand: i128| cur <= cand;
        while self.try_advance_d(le) {
            while self.try_advance_c(le) {}
            while self.try_advance_b(le) {}
        }
    }

    /// Prose reading: greedy strict `d` advances; one `c` advance retries
    /// `d`; one `b` advance retries `d` and `c`; repeat to a fixed point.
    fn settle_prose(&mut self) {
        let lt = |cur: i128, cand: i128| cur < cand;
        loop {
            while self.try_advance_d(lt) {}
            if self.try_advance_c(lt) {
                continue;
            }
            if self.try_advance_b(lt) {
                continue;
            }
            break;
        }
    }

    /// Advance `a`; returns false once `a` is back at the root. The collision
    /// cascade afterwards restores `a < b < c < d` without being counted as
    /// an area-driven advance.
    fn advance_a(&mut self, root: usize) -> bool {
        self.a += 1;
        self.advances.a += 1;
        self.push(StepAction::AdvanceA);
        if self.a - root == self.n {
            return false;
        }
        if self.b == self.a {
            self.b += 1;
            self.push(StepAction::AdvanceB);
            if self.c == self.b {
                self.c += 1;
                self.push(StepAction::AdvanceC);
                if self.d == self.c {
                    self.d += 1;
                    self.push(StepAction::AdvanceD);
                }
            }
        }
        true
    }
}

/// Executes the chosen variant from `root` and returns the best
/// quadrilateral found, the full step trace, and the per-pointer advance
/// counts.
pub fn ds_run(poly: &ConvexPolygon, root: usize, variant: DsVariant) -> Result<DsRun, Error> {
    let n = poly.len();
    if n < 4 {
        return Err(Error::TooFewVertices { n, min: 4 });
    }
    if root >= n {
        return Err(Error::IndexOutOfRange { index: root, n });
    }

    let mut run = Runner::new(poly, root);
    // the starting quadrilateral seeds the maximum, as in the pseudocode
    let mut best = (run.current_area(), run.canonical());
    loop {
        match variant {
            DsVariant::Literal => run.settle_literal(),
            DsVariant::Prose => run.settle_prose(),
        }
        let area = run.current_area();
        run.push(StepAction::Record);
        if area > best.0 {
            best = (area, run.canonical());
        }
        if !run.advance_a(root) {
            break;
        }
    }

    Ok(DsRun {
        root,
        variant,
        best: best.1,
        best_area: TwiceArea(best.0),
        advances: run.advances,
        trace: run.trace,
    })
}

/// Runs the heuristic from every root. The overall best takes the maximum
/// `best_area`; ties go to the lexicographically smallest canonical tuple.
/// Roots are evaluated in parallel but the result is identical to sequential
/// evaluation in root order.
pub fn ds_all_roots(
    poly: &ConvexPolygon,
    variant: DsVariant,
) -> Result<(Vec<DsRun>, Solution), Error> {
    let n = poly.len();
    if n < 4 {
        return Err(Error::TooFewVertices { n, min: 4 });
    }
    let runs: Vec<DsRun> = (0..n)
        .into_par_iter()
        .map(|root| ds_run(poly, root, variant).expect("preconditions checked"))
        .collect();
    let best = runs
        .iter()
        .map(|run| (run.best_area, &run.best))
        .reduce(|acc, cand| {
            if cand.0 > acc.0 || (cand.0 == acc.0 && cand.1 < acc.1) {
                cand
            } else {
                acc
            }
        })
        .expect("n >= 4 roots");
    let solution = Solution {
        k: 4,
        indices: best.1.clone(),
        area: best.0,
    };
    Ok((runs, solution))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point2;

    fn poly(coords: &[(i64, i64)]) -> ConvexPolygon {
        let points: Vec<Point2> = coords.iter().map(|&(x, y)| Point2::new(x, y)).collect();
        ConvexPolygon::new(&points).unwrap()
    }

    fn square() -> ConvexPolygon {
        poly(&[(0, 0), (2, 0), (2, 2), (0, 2)])
    }

    fn hexagon() -> ConvexPolygon {
        poly(&[(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)])
    }

    #[test]
    fn square_literal_root0() {
        let run = ds_run(&square(), 0, DsVariant::Literal).unwrap();
        assert_eq!(run.best.indices(), &[0, 1, 2, 3]);
        assert_eq!(run.best_area, TwiceArea(8));
        // the only candidate advance would put d on a, shrinking the area
        assert_eq!(run.advances, PointerAdvances { a: 4, b: 0, c: 0, d: 0 });
    }

    #[test]
    fn hexagon_literal_root0_finds_optimum_area() {
        let run = ds_run(&hexagon(), 0, DsVariant::Literal).unwrap();
        assert_eq!(run.best_area, TwiceArea(16));
    }

    #[test]
    fn hexagon_all_roots_matches_brute_force() {
        let hex = hexagon();
        let (runs, best) = ds_all_roots(&hex, DsVariant::Literal).unwrap();
        assert_eq!(runs.len(), 6);
        assert_eq!(best.area, TwiceArea(16));
        let exact = crate::solver::brute_force(&hex, 4).unwrap();
        assert_eq!(best.area, exact.area);
    }

    #[test]
    fn square_all_roots() {
        let (runs, best) = ds_all_roots(&square(), DsVariant::Prose).unwrap();
        assert_eq!(best.area, TwiceArea(8));
        assert_eq!(best.indices.indices(), &[0, 1, 2, 3]);
        for run in &runs {
            assert_eq!(run.best_area, TwiceArea(8));
        }
    }

    #[test]
    fn rejects_small_polygons_and_bad_roots() {
        let tri = poly(&[(0, 0), (2, 0), (0, 2)]);
        assert_eq!(
            ds_run(&tri, 0, DsVariant::Literal).unwrap_err(),
            Error::TooFewVertices { n: 3, min: 4 }
        );
        assert_eq!(
            ds_run(&square(), 4, DsVariant::Literal).unwrap_err(),
            Error::IndexOutOfRange { index: 4, n: 4 }
        );
    }

    /// Pointers never move backwards and never pass each other; collisions
    /// are transient between an `a` advance and its cascade, so strict order
    /// is required at every Record.
    fn check_trace_invariants(run: &DsRun, n: usize) {
        let mut prev = [run.root, run.root + 1, run.root + 2, run.root + 3];
        for step in &run.trace {
            let [a, b, c, d] = step.positions;
            assert!(a <= b && b <= c && c <= d && d <= a + n, "order violated: {step:?}");
            if step.action == StepAction::Record {
                assert!(a < b && b < c && c < d && d < a + n, "degenerate record: {step:?}");
            }
            for (now, before) in step.positions.iter().zip(prev.iter()) {
                assert!(now >= before, "pointer moved backwards: {step:?}");
            }
            prev = step.positions;
        }
    }

    #[test]
    fn trace_invariants_hold_on_fixtures() {
        for variant in DsVariant::ALL {
            for p in [square(), hexagon()] {
                for root in 0..p.len() {
                    let run = ds_run(&p, root, variant).unwrap();
                    check_trace_invariants(&run, p.len());
                    assert_eq!(run.advances.a, p.len());
                    assert!(run.advances.b < 2 * p.len());
                    assert!(run.advances.c < 2 * p.len());
                    assert!(run.advances.d < 2 * p.len());
                    assert!(run.trace.len() <= 8 * p.len());
                    assert_eq!(run.best_area, run.best.area_on(&p));
                }
            }
        }
    }

    /// Accepted b/c/d advances never decrease the area along the trace.
    #[test]
    fn accepted_advances_are_monotone() {
        for variant in DsVariant::ALL {
            for p in [square(), hexagon()] {
                for root in 0..p.len() {
                    let run = ds_run(&p, root, variant).unwrap();
                    for pair in run.trace.windows(2) {
                        if matches!(
                            pair[1].action,
                            StepAction::AdvanceB | StepAction::AdvanceC | StepAction::AdvanceD
                        ) {
                            assert!(
                                pair[1].area >= pair[0].area,
                                "area dropped on {:?} (root {root}, {variant})",
                                pair[1]
                            );
                        }
                    }
                }
            }
        }
    }
}
