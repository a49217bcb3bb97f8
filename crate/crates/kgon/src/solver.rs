//! Ground-truth maximum-area inscribed k-gons via three independent exact
//! algorithms that cross-validate each other: plain enumeration, a
//! diagonal-sweep solver for k = 4, and a rooted fan-decomposition DP for
//! general k.
//!
//! All three use exact integer areas and the same tie-break: maximum
//! twice-area first, then the lexicographically smallest canonical index
//! tuple, so cross-solver agreement can be tested as plain equality.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::geom::{orientation, shoelace, ConvexPolygon, IndexTuple, Point2, TwiceArea};

/// Enumeration guard for [`brute_force`].
pub const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

/// A maximum-area inscribed k-gon: canonical indices into the host polygon
/// plus its exact twice-area.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Solution {
    pub k: usize,
    pub indices: IndexTuple,
    pub area: TwiceArea,
}

/// Advances `indices` to the next k-subset of `0..n` in lexicographic order;
/// returns false when exhausted.
pub(crate) fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - k + i {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u64 = 1;
    for i in 0..k {
        result = result.saturating_mul(n - i) / (i + 1);
    }
    result
}

fn check_k(n: usize, k: usize) -> Result<(), Error> {
    if k < 3 || k > n {
        return Err(Error::InvalidK { k, min: 3, max: n });
    }
    Ok(())
}

/// Maximum-area inscribed k-gon by exhaustive enumeration of all increasing
/// k-index tuples. The reference oracle for the other two solvers.
///
/// Guarded by [`BRUTE_FORCE_LIMIT`] on C(n, k).
pub fn brute_force(poly: &ConvexPolygon, k: usize) -> Result<Solution, Error> {
    let n = poly.len();
    check_k(n, k)?;
    if binomial(n as u64, k as u64) > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            k,
            limit: BRUTE_FORCE_LIMIT,
        });
    }

    let mut indices: Vec<usize> = (0..k).collect();
    let mut buffer: Vec<Point2> = Vec::with_capacity(k);
    let mut best_area = i128::MIN;
    let mut best: Vec<usize> = Vec::new();
    loop {
        buffer.clear();
        buffer.extend(indices.iter().map(|&i| poly.point(i)));
        let area = shoelace(&buffer);
        // lexicographic enumeration makes the first maximum the tie-winner
        if area > best_area {
            best_area = area;
            best = indices.clone();
        }
        if !next_combination(&mut indices, n) {
            break;
        }
    }
    Ok(Solution {
        k,
        indices: IndexTuple::from_canonical(best),
        area: TwiceArea(best_area),
    })
}

/// Maximum-area inscribed quadrilateral in O(n²) by diagonal decomposition.
///
/// Every quadrilateral splits along a diagonal `(i, j)` into one triangle on
/// each side of the chord, so the best quadrilateral through `(i, j)` pairs
/// the area-maximizing apex on each side. As `j` advances for fixed `i`,
/// both maximizing apexes only move forward; the pointers advance while the
/// candidate area is `>=` the current one (tolerating the two-long plateaus
/// an edge parallel to the diagonal produces) and each side retains its
/// first maximizer.
pub fn sweep_quad(poly: &ConvexPolygon) -> Result<Solution, Error> {
    let n = poly.len();
    if n < 4 {
        return Err(Error::TooFewVertices { n, min: 4 });
    }

    // twice-area of the triangle on unrolled positions
    let tri = |i: usize, j: usize, k: usize| -> i128 {
        orientation(poly.cyclic(i), poly.cyclic(j), poly.cyclic(k))
    };

    // chords are enumerated once each as real index pairs i < j; the left
    // apex stays in (i, j) and the right apex in (j, i+n), unrolled
    let best_for_anchor = |i: usize| -> Option<(i128, [usize; 4])> {
        let j_hi = if i == 0 { n - 2 } else { n - 1 };
        if i + 2 > j_hi {
            return None;
        }
        let mut best: Option<(i128, [usize; 4])> = None;
        let mut left = i + 1;
        let mut right = i + 3;
        for j in i + 2..=j_hi {
            while left + 1 < j && tri(i, left + 1, j) >= tri(i, left, j) {
                left += 1;
            }
            let first_left = if left > i + 1 && tri(i, left - 1, j) == tri(i, left, j) {
                left - 1
            } else {
                left
            };
            right = right.max(j + 1);
            while right + 1 < i + n && tri(i, j, right + 1) >= tri(i, j, right) {
                right += 1;
            }
            let first_right = if right > j + 1 && tri(i, j, right - 1) == tri(i, j, right) {
                right - 1
            } else {
                right
            };
            let area = tri(i, first_left, j) + tri(i, j, first_right);
            let mut idx = [i, first_left, j, first_right % n];
            idx.sort_unstable();
            if best.is_none_or(|b| area > b.0 || (area == b.0 && idx < b.1)) {
                best = Some((area, idx));
            }
        }
        best
    };

    let best = (0..n)
        .into_par_iter()
        .map(best_for_anchor)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .reduce(|acc, cand| {
            if cand.0 > acc.0 || (cand.0 == acc.0 && cand.1 < acc.1) {
                cand
            } else {
                acc
            }
        })
        .expect("n >= 4 yields at least one chord");

    Ok(Solution {
        k: 4,
        indices: IndexTuple::from_canonical(best.1.to_vec()),
        area: TwiceArea(best.0),
    })
}

/// Maximum-area inscribed k-gon by rooted fan-decomposition DP.
///
/// For each root `r` the vertices are relabeled `0..n` counter-clockwise
/// starting at `r`, and `best[t][j]` is the largest fan area of a `t`-gon
/// with first vertex 0 and last (relative) vertex `j`. The answer maximizes
/// over roots and `j`; tie-breaking is identical to [`brute_force`]. O(k·n³)
/// over all roots.
pub fn dp_kgon(poly: &ConvexPolygon, k: usize) -> Result<Solution, Error> {
    let n = poly.len();
    check_k(n, k)?;

    const NEG: i128 = i128::MIN / 4;
    // tri(root, j, j') on relative labels
    let tri = |r: usize, j: usize, jp: usize| -> i128 {
        orientation(poly.point(r), poly.cyclic(r + j), poly.cyclic(r + jp))
    };

    // completion[t][j]: best total area reachable from the t-th vertex at
    // relative position j, extending to a full k-gon
    let completion_table = |r: usize| -> Vec<Vec<i128>> {
        let mut table = vec![vec![NEG; n]; k + 1];
        table[k].iter_mut().for_each(|v| *v = 0);
        for t in (2..k).rev() {
            for j in 1..n {
                let mut best = NEG;
                for (offset, &next) in table[t + 1][j + 1..].iter().enumerate() {
                    if next == NEG {
                        continue;
                    }
                    best = best.max(tri(r, j, j + 1 + offset) + next);
                }
                table[t][j] = best;
            }
        }
        table
    };

    let root_max: Vec<i128> = (0..n)
        .into_par_iter()
        .map(|r| {
            let table = completion_table(r);
            (1..n).map(|j| table[2][j]).max().expect("n > 1")
        })
        .collect();

    let overall = *root_max.iter().max().expect("n roots");
    let root = root_max
        .iter()
        .position(|&a| a == overall)
        .expect("maximum exists");

    // greedy lexicographically-smallest reconstruction at the first
    // maximizing root
    let table = completion_table(root);
    let mut relative = vec![0usize];
    let mut current = (1..n)
        .find(|&j| table[2][j] == overall)
        .expect("reconstruction start");
    relative.push(current);
    let mut remaining = overall;
    for t in 2..k {
        let next = (current + 1..n)
            .find(|&jp| {
                table[t + 1][jp] != NEG && tri(root, current, jp) + table[t + 1][jp] == remaining
            })
            .expect("reconstruction step");
        remaining -= tri(root, current, next);
        relative.push(next);
        current = next;
    }

    let absolute: Vec<usize> = relative.iter().map(|&j| (root + j) % n).collect();
    let indices = crate::geom::canonicalize(&absolute, n).expect("DP output is cyclic");
    Ok(Solution {
        k,
        indices,
        area: TwiceArea(overall),
    })
}
