//! Stable vertices of inscribed polygons.
//!
//! A vertex `v` of an inscribed polygon is stable when replacing it with any
//! other host vertex strictly between its neighbors (which keeps the cyclic
//! ordering intact) does not improve the area. Integer coordinates make ties
//! possible, so both readings of "does not improve" are provided; a polygon
//! is k-stable when all k of its vertices are stable. Every vertex of the
//! exact optimum is weakly stable, but a k-stable polygon need not be
//! optimal — which is exactly the trap the quadrilateral heuristic falls
//! into.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geom::{orientation, ConvexPolygon, IndexTuple};
use crate::solver::{binomial, next_combination};

/// Enumeration guard for [`enumerate_stable`].
pub const ENUMERATE_LIMIT: u64 = 1_000_000;

/// How area ties among replacement moves count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    /// No admissible move strictly increases the area.
    Weak,
    /// Every admissible move strictly decreases the area.
    Strict,
}

/// Shared per-position test on raw index slices; assumes indices are in
/// range and cyclically ordered.
fn position_is_stable(
    poly: &ConvexPolygon,
    indices: &[usize],
    position: usize,
    strictness: Strictness,
) -> bool {
    let n = poly.len();
    let k = indices.len();
    let v = indices[position];
    let u = indices[(position + k - 1) % k];
    let w = indices[(position + 1) % k];
    // replacing v by x only swaps the triangle (u, v, w) for (u, x, w)
    let base = orientation(poly.point(u), poly.point(v), poly.point(w));
    let mut x = (u + 1) % n;
    while x != w {
        if x != v {
            let delta = orientation(poly.point(u), poly.point(x), poly.point(w)) - base;
            let unstable = match strictness {
                Strictness::Weak => delta > 0,
                Strictness::Strict => delta >= 0,
            };
            if unstable {
                return false;
            }
        }
        x = (x + 1) % n;
    }
    true
}

/// Whether the vertex of `q` at `position` is stable on `poly`.
///
/// Admissible moves replace the vertex with any host vertex strictly between
/// its tuple neighbors, other than itself; the predicate is vacuously true
/// when no admissible move exists.
pub fn is_stable(
    poly: &ConvexPolygon,
    q: &IndexTuple,
    position: usize,
    strictness: Strictness,
) -> Result<bool, Error> {
    q.check_on(poly)?;
    if position >= q.k() {
        return Err(Error::PositionOutOfRange {
            position,
            k: q.k(),
        });
    }
    Ok(position_is_stable(poly, q.indices(), position, strictness))
}

/// Number of stable positions of `q`; `q` is k-stable iff this equals `q.k()`.
pub fn stable_count(
    poly: &ConvexPolygon,
    q: &IndexTuple,
    strictness: Strictness,
) -> Result<usize, Error> {
    q.check_on(poly)?;
    Ok((0..q.k())
        .filter(|&p| position_is_stable(poly, q.indices(), p, strictness))
        .count())
}

/// All canonical k-tuples on `poly` whose every vertex is stable, in
/// lexicographic order. Guarded by [`ENUMERATE_LIMIT`] on C(n, k).
pub fn enumerate_stable(
    poly: &ConvexPolygon,
    k: usize,
    strictness: Strictness,
) -> Result<Vec<IndexTuple>, Error> {
    let n = poly.len();
    if k < 3 || k > n {
        return Err(Error::InvalidK { k, min: 3, max: n });
    }
    if binomial(n as u64, k as u64) > ENUMERATE_LIMIT {
        return Err(Error::TooLarge {
            n,
            k,
            limit: ENUMERATE_LIMIT,
        });
    }
    let mut out = Vec::new();
    let mut indices: Vec<usize> = (0..k).collect();
    loop {
        if (0..k).all(|p| position_is_stable(poly, &indices, p, strictness)) {
            out.push(IndexTuple::from_canonical(indices.clone()));
        }
        if !next_combination(&mut indices, n) {
            break;
        }
    }
    Ok(out)
}
