//! Random strictly convex integer polygons and a campaign runner that hunts
//! for inputs where the quadrilateral heuristic misses the exact optimum,
//! plus a greedy shrinker for any counterexample found.
//!
//! Determinism is load-bearing throughout: trial seeds are derived from the
//! campaign seed with a fixed splitmix-style mix, so a report is a pure
//! function of its configuration no matter how trials are scheduled.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geom::{validate, ConvexPolygon, IndexTuple, Point2, TwiceArea, COORD_LIMIT};
use crate::heuristic::{ds_all_roots, DsVariant};
use crate::solver::sweep_quad;

const RETRY_BUDGET: u32 = 64;

/// Fixed splitmix-style mix of a seed and a stream index. Trial `i` of a
/// campaign uses `derive_seed(config.seed, i)`, which keeps parallel
/// execution byte-identical to sequential execution.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Campaign configuration. A report is a pure function of this value.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Inscribed polygon size; the heuristic comparison fixes this at 4.
    pub k: usize,
    pub trials: usize,
    pub seed: u64,
    /// Coordinate magnitude limit handed to the generator.
    pub bound: i64,
    /// Heuristic variants to compare against the exact optimum.
    pub variants: Vec<DsVariant>,
    /// Test hook: polygons to use verbatim for the first trials instead of
    /// generating them.
    #[serde(default)]
    pub injected: Vec<ConvexPolygon>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            n_min: 5,
            n_max: 12,
            k: 4,
            trials: 100,
            seed: 0,
            bound: 1_000_000,
            variants: vec![DsVariant::Literal, DsVariant::Prose],
            injected: Vec::new(),
        }
    }
}

impl FuzzConfig {
    fn check(&self) -> Result<(), Error> {
        if self.n_min < 4 || self.n_min > self.n_max {
            return Err(Error::InvalidConfig {
                reason: format!("need 4 <= n_min <= n_max, got [{}, {}]", self.n_min, self.n_max),
            });
        }
        if self.k != 4 {
            return Err(Error::InvalidConfig {
                reason: format!("the heuristic comparison is defined for k = 4, got k = {}", self.k),
            });
        }
        if self.bound < self.n_max as i64 || self.bound > COORD_LIMIT {
            return Err(Error::InvalidConfig {
                reason: format!(
                    "bound {} outside [n_max, {COORD_LIMIT}]",
                    self.bound
                ),
            });
        }
        for (i, poly) in self.injected.iter().enumerate() {
            if poly.len() < 4 {
                return Err(Error::InvalidConfig {
                    reason: format!("injected polygon {i} has fewer than 4 vertices"),
                });
            }
        }
        Ok(())
    }
}

/// Per-variant comparison against the exact optimum.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VariantResult {
    pub variant: DsVariant,
    pub best_area: TwiceArea,
    /// `exact - best_area`; never negative.
    pub gap: TwiceArea,
}

/// What happened in one trial.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TrialOutcome {
    Completed {
        n: usize,
        exact_area: TwiceArea,
        exact_indices: IndexTuple,
        variants: Vec<VariantResult>,
        /// True iff some variant has a positive gap.
        mismatch: bool,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    #[serde(flatten)]
    pub outcome: TrialOutcome,
}

impl TrialRecord {
    pub fn is_mismatch(&self) -> bool {
        matches!(self.outcome, TrialOutcome::Completed { mismatch: true, .. })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub trials: usize,
    pub completed: usize,
    pub skipped: usize,
    pub mismatches: usize,
}

/// Full campaign record: configuration echo, every trial, and the
/// subsequence of trials where some heuristic variant fell short.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub trials: Vec<TrialRecord>,
    pub mismatches: Vec<TrialRecord>,
    pub summary: FuzzSummary,
}

/// Generates a strictly convex CCW polygon with `n` vertices on the integer
/// grid, inside `[0, 2*bound]^2`, as a pure function of `(n, bound, seed)`.
///
/// Construction: draw `n` integer edge vectors that sum to zero, merge any
/// that share a direction, and walk them in angular order. If merging leaves
/// fewer than `n` distinct directions the next derived seed is tried, up to
/// a fixed retry budget.
pub fn random_convex(n: usize, bound: i64, seed: u64) -> Result<ConvexPolygon, Error> {
    if n < 3 || bound < n as i64 || bound > COORD_LIMIT {
        return Err(Error::GenerationFailed {
            n,
            bound,
            attempts: 0,
        });
    }
    for attempt in 0..RETRY_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, attempt as u64));
        if let Some(polygon) = try_generate(n, bound, &mut rng) {
            return Ok(polygon);
        }
    }
    Err(Error::GenerationFailed {
        n,
        bound,
        attempts: RETRY_BUDGET,
    })
}

/// One generation attempt; `None` when fewer than `n` directions survive.
fn try_generate(n: usize, bound: i64, rng: &mut ChaCha8Rng) -> Option<ConvexPolygon> {
    // split sorted coordinate draws into two monotone chains; their
    // differences give n signed deltas per axis, each axis summing to zero
    let deltas = |rng: &mut ChaCha8Rng| -> Vec<i64> {
        let mut values: Vec<i64> = (0..n).map(|_| rng.random_range(0..=bound)).collect();
        values.sort_unstable();
        let (lo, hi) = (values[0], values[n - 1]);
        let mut up = vec![lo];
        let mut down = vec![lo];
        for &v in &values[1..n - 1] {
            if rng.random::<bool>() {
                up.push(v);
            } else {
                down.push(v);
            }
        }
        up.push(hi);
        down.push(hi);
        let mut out: Vec<i64> = up.windows(2).map(|w| w[1] - w[0]).collect();
        out.extend(down.windows(2).map(|w| w[0] - w[1]));
        out
    };
    let dx = deltas(rng);
    let mut dy = deltas(rng);
    dy.shuffle(rng);

    // merge vectors sharing a direction; opposite directions stay distinct
    let mut directed: Vec<((i64, i64), (i64, i64))> = dx
        .into_iter()
        .zip(dy)
        .filter(|&(x, y)| (x, y) != (0, 0))
        .map(|(x, y)| {
            let g = gcd(x.unsigned_abs(), y.unsigned_abs()) as i64;
            ((x / g, y / g), (x, y))
        })
        .collect();
    directed.sort_unstable_by_key(|&(dir, _)| dir);
    let mut edges: Vec<(i64, i64)> = Vec::with_capacity(n);
    let mut last_dir = None;
    for (dir, vec) in directed {
        if last_dir == Some(dir) {
            let last = edges.last_mut().expect("grouped run has a head");
            last.0 += vec.0;
            last.1 += vec.1;
        } else {
            edges.push(vec);
            last_dir = Some(dir);
        }
    }
    if edges.len() < n {
        return None;
    }
    edges.sort_unstable_by(compare_angle);

    let mut points = Vec::with_capacity(n);
    let (mut x, mut y) = (0i64, 0i64);
    for &(ex, ey) in &edges[..n - 1] {
        points.push(Point2::new(x, y));
        x += ex;
        y += ey;
    }
    points.push(Point2::new(x, y));
    debug_assert_eq!(
        (x + edges[n - 1].0, y + edges[n - 1].1),
        (0, 0),
        "edge vectors must close the polygon"
    );

    let min_x = points.iter().map(|p| p.x).min()?;
    let min_y = points.iter().map(|p| p.y).min()?;
    for p in &mut points {
        p.x -= min_x;
        p.y -= min_y;
    }
    match validate(&points) {
        Ok(v) if !v.reversed => Some(v.polygon),
        _ => None,
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Counter-clockwise angular order starting from the positive x-axis.
fn compare_angle(u: &(i64, i64), v: &(i64, i64)) -> std::cmp::Ordering {
    let half = |(x, y): (i64, i64)| usize::from(!(y > 0 || (y == 0 && x > 0)));
    half(*u).cmp(&half(*v)).then_with(|| {
        let cross = u.0 as i128 * v.1 as i128 - u.1 as i128 * v.0 as i128;
        cross.cmp(&0).reverse()
    })
}

fn run_trial(config: &FuzzConfig, trial: usize) -> TrialRecord {
    let seed = derive_seed(config.seed, trial as u64);
    let polygon = if let Some(injected) = config.injected.get(trial) {
        injected.clone()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(config.n_min..=config.n_max);
        match random_convex(n, config.bound, derive_seed(seed, 1)) {
            Ok(p) => p,
            Err(e) => {
                return TrialRecord {
                    trial,
                    seed,
                    outcome: TrialOutcome::Skipped {
                        reason: e.to_string(),
                    },
                }
            }
        }
    };
    let exact = sweep_quad(&polygon).expect("config guarantees n >= 4");
    let variants: Vec<VariantResult> = config
        .variants
        .iter()
        .map(|&variant| {
            let (_, best) = ds_all_roots(&polygon, variant).expect("n >= 4");
            VariantResult {
                variant,
                best_area: best.area,
                gap: TwiceArea(exact.area.0 - best.area.0),
            }
        })
        .collect();
    let mismatch = variants.iter().any(|v| v.gap.0 > 0);
    TrialRecord {
        trial,
        seed,
        outcome: TrialOutcome::Completed {
            n: polygon.len(),
            exact_area: exact.area,
            exact_indices: exact.indices,
            variants,
            mismatch,
        },
    }
}

/// Runs `config.trials` independent trials, comparing the exact optimum
/// (via [`sweep_quad`]) against the heuristic's best over all roots for each
/// requested variant. Trials run in parallel; the report is assembled in
/// trial order and is identical for identical configurations.
pub fn fuzz_campaign(config: &FuzzConfig) -> Result<FuzzReport, Error> {
    config.check()?;
    let trials: Vec<TrialRecord> = (0..config.trials)
        .into_par_iter()
        .map(|t| run_trial(config, t))
        .collect();
    let mismatches: Vec<TrialRecord> = trials.iter().filter(|t| t.is_mismatch()).cloned().collect();
    let summary = FuzzSummary {
        trials: trials.len(),
        completed: trials
            .iter()
            .filter(|t| matches!(t.outcome, TrialOutcome::Completed { .. }))
            .count(),
        skipped: trials
            .iter()
            .filter(|t| matches!(t.outcome, TrialOutcome::Skipped { .. }))
            .count(),
        mismatches: mismatches.len(),
    };
    Ok(FuzzReport {
        config: config.clone(),
        trials,
        mismatches,
        summary,
    })
}

/// Whether the heuristic misses the exact optimum on `poly` for `variant`.
fn is_failing(poly: &ConvexPolygon, variant: DsVariant) -> bool {
    if poly.len() < 5 {
        // with n = 4 the heuristic trivially reports the whole polygon
        return false;
    }
    let exact = sweep_quad(poly).expect("n >= 5");
    let (_, best) = ds_all_roots(poly, variant).expect("n >= 5");
    best.area < exact.area
}

/// Greedily shrinks a failing polygon by deleting vertices, first index
/// first, keeping a deletion only when the remainder is still strictly
/// convex with at least 5 vertices and still fails. The result is locally
/// minimal: no single further deletion preserves failure.
pub fn shrink(poly: &ConvexPolygon, variant: DsVariant) -> Result<ConvexPolygon, Error> {
    if !is_failing(poly, variant) {
        return Err(Error::NotACounterexample);
    }
    let mut current = poly.clone();
    loop {
        let mut deleted = false;
        if current.len() > 5 {
            for skip in 0..current.len() {
                let remaining: Vec<Point2> = current
                    .vertices()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &p)| p)
                    .collect();
                // deleting a vertex can merge its neighbors into a collinear
                // triple, so revalidate
                let candidate = match validate(&remaining) {
                    Ok(v) if !v.reversed => v.polygon,
                    _ => continue,
                };
                if is_failing(&candidate, variant) {
                    current = candidate;
                    deleted = true;
                    break;
                }
            }
        }
        if !deleted {
            return Ok(current);
        }
    }
}
