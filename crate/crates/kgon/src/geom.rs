//! Exact integer planar primitives: the orientation predicate, shoelace
//! areas, convex polygon validation and canonical index tuples.
//!
//! Everything here is pure integer arithmetic. Coordinates are bounded by
//! [`COORD_LIMIT`] and all products and sums are accumulated in `i128`, so
//! results are bit-exact and overflow is structurally impossible: a cross
//! product of bounded coordinates needs at most 66 bits and a shoelace sum
//! over any realistic vertex count stays far below 96 bits.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Largest allowed coordinate magnitude: 2^31 − 1.
pub const COORD_LIMIT: i64 = (1 << 31) - 1;

/// A planar point with exact integer coordinates.
///
/// Serialized as a two-element array `[x, y]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Point2 {
    pub x: i64,
    pub y: i64,
}

impl Point2 {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Whether both coordinates are within [`COORD_LIMIT`].
    pub const fn in_range(self) -> bool {
        self.x.abs() <= COORD_LIMIT && self.y.abs() <= COORD_LIMIT
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Point2 {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

impl Serialize for Point2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.x, self.y).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Point2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (x, y) = <(i64, i64)>::deserialize(deserializer)?;
        Ok(Self { x, y })
    }
}

/// Twice the signed area of the triangle `pqr`:
/// `(q.x−p.x)(r.y−p.y) − (q.y−p.y)(r.x−p.x)`.
///
/// Positive iff `p`, `q`, `r` make a left turn, zero iff collinear.
#[inline]
pub fn orientation(p: Point2, q: Point2, r: Point2) -> i128 {
    (q.x as i128 - p.x as i128) * (r.y as i128 - p.y as i128)
        - (q.y as i128 - p.y as i128) * (r.x as i128 - p.x as i128)
}

#[inline]
fn cross(p: Point2, q: Point2) -> i128 {
    p.x as i128 * q.y as i128 - q.x as i128 * p.y as i128
}

/// Shoelace sum of a cyclic point sequence (repeated vertices allowed).
pub(crate) fn shoelace(points: &[Point2]) -> i128 {
    let n = points.len();
    let mut sum = 0i128;
    for i in 0..n {
        sum += cross(points[i], points[(i + 1) % n]);
    }
    sum
}

/// Shoelace sum of the 4-cycle `abcd` without allocating.
#[inline]
pub(crate) fn quad_area(a: Point2, b: Point2, c: Point2, d: Point2) -> i128 {
    cross(a, b) + cross(b, c) + cross(c, d) + cross(d, a)
}

/// Twice the Euclidean area of a polygon, as an exact integer.
///
/// The shoelace sum of a counter-clockwise simple polygon is positive; the
/// value is also well-defined (and used internally) for degenerate cycles
/// with repeated or collinear vertices.
///
/// Serialized as a JSON number while within the 53-bit safe-integer range
/// and as an exact decimal string beyond it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct TwiceArea(pub i128);

const JSON_SAFE_MAX: i128 = (1 << 53) - 1;

impl fmt::Display for TwiceArea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for TwiceArea {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.abs() <= JSON_SAFE_MAX {
            serializer.serialize_i64(self.0 as i64)
        } else {
            serializer.collect_str(&self.0)
        }
    }
}

impl<'de> Deserialize<'de> for TwiceArea {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct AreaVisitor;

        impl Visitor<'_> for AreaVisitor {
            type Value = TwiceArea;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<TwiceArea, E> {
                Ok(TwiceArea(v as i128))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<TwiceArea, E> {
                Ok(TwiceArea(v as i128))
            }

            fn visit_i128<E: de::Error>(self, v: i128) -> Result<TwiceArea, E> {
                Ok(TwiceArea(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<TwiceArea, E> {
                v.parse::<i128>().map(TwiceArea).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_any(AreaVisitor)
    }
}

/// Exact twice-area of the cyclic sequence `points`.
///
/// Errors with [`Error::TooFewVertices`] for fewer than three points.
pub fn twice_area(points: &[Point2]) -> Result<TwiceArea, Error> {
    if points.len() < 3 {
        return Err(Error::TooFewVertices {
            n: points.len(),
            min: 3,
        });
    }
    Ok(TwiceArea(shoelace(points)))
}

/// A strictly convex polygon with vertices in counter-clockwise order.
///
/// Construction goes through [`validate`], which enforces the coordinate
/// bound, pairwise-distinct vertices and a strictly positive orientation for
/// every consecutive vertex triple (no three consecutive vertices collinear).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    /// Validates `points` and discards the normalization flag.
    pub fn new(points: &[Point2]) -> Result<Self, Error> {
        validate(points).map(|v| v.polygon)
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// Number of vertices.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn point(&self, index: usize) -> Point2 {
        self.vertices[index]
    }

    /// Vertex at an unrolled position, reduced modulo the vertex count.
    #[inline]
    pub fn cyclic(&self, position: usize) -> Point2 {
        self.vertices[position % self.vertices.len()]
    }

    /// Exact twice-area of the polygon; strictly positive by construction.
    pub fn twice_area(&self) -> TwiceArea {
        TwiceArea(shoelace(&self.vertices))
    }
}

impl Serialize for ConvexPolygon {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.vertices.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ConvexPolygon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let points = Vec::<Point2>::deserialize(deserializer)?;
        ConvexPolygon::new(&points).map_err(de::Error::custom)
    }
}

/// Result of validating a vertex sequence: the polygon plus a flag telling
/// whether the input was clockwise and had to be reversed.
#[derive(Clone, Debug)]
pub struct Validated {
    pub polygon: ConvexPolygon,
    pub reversed: bool,
}

/// Validates a vertex sequence into a [`ConvexPolygon`].
///
/// Clockwise input that is otherwise strictly convex is reversed rather than
/// rejected; `reversed` reports the normalization so index-based answers stay
/// interpretable. Error indices always refer to the input as given.
pub fn validate(points: &[Point2]) -> Result<Validated, Error> {
    let n = points.len();
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3 });
    }
    for (index, p) in points.iter().enumerate() {
        if !p.in_range() {
            return Err(Error::CoordinateOutOfRange {
                index,
                x: p.x,
                y: p.y,
                limit: COORD_LIMIT,
            });
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&i| (points[i].x, points[i].y));
    for pair in order.windows(2) {
        if points[pair[0]] == points[pair[1]] {
            let (first, second) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            return Err(Error::DuplicateVertex {
                first,
                second,
                x: points[first].x,
                y: points[first].y,
            });
        }
    }

    let reversed = shoelace(points) < 0;
    let vertices: Vec<Point2> = if reversed {
        points.iter().rev().copied().collect()
    } else {
        points.to_vec()
    };
    for i in 0..n {
        let (j, k) = ((i + 1) % n, (i + 2) % n);
        let o = orientation(vertices[i], vertices[j], vertices[k]);
        if o <= 0 {
            // map offending indices back onto the caller's ordering
            let mut triple = [i, j, k];
            if reversed {
                for t in &mut triple {
                    *t = n - 1 - *t;
                }
            }
            triple.sort_unstable();
            return Err(Error::NotStrictlyConvex {
                i: triple[0],
                j: triple[1],
                k: triple[2],
                orientation: o,
            });
        }
    }
    Ok(Validated {
        polygon: ConvexPolygon { vertices },
        reversed,
    })
}

/// Distinct vertex indices of an inscribed polygon, in canonical cyclic
/// form: rotated so the minimum index comes first, strictly increasing
/// thereafter. Ordering is lexicographic, which is the tie-break order used
/// by every solver.
///
/// Serialized as a plain array of indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    /// Wraps indices already known to be canonical (strictly increasing).
    pub(crate) fn from_canonical(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        IndexTuple(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// Number of vertices of the inscribed polygon.
    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// The indexed points of `poly`, in tuple order.
    pub fn points(&self, poly: &ConvexPolygon) -> Vec<Point2> {
        self.0.iter().map(|&i| poly.point(i)).collect()
    }

    /// Exact twice-area of the inscribed polygon on `poly`.
    pub fn area_on(&self, poly: &ConvexPolygon) -> TwiceArea {
        TwiceArea(shoelace(&self.points(poly)))
    }

    /// Errors unless every index is within `poly`.
    pub fn check_on(&self, poly: &ConvexPolygon) -> Result<(), Error> {
        let n = poly.len();
        match self.0.iter().find(|&&i| i >= n) {
            Some(&index) => Err(Error::IndexOutOfRange { index, n }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, idx) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{idx}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for IndexTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IndexTuple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(deserializer)?;
        if indices.len() < 3 || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(de::Error::custom("expected at least 3 strictly increasing indices"));
        }
        Ok(IndexTuple(indices))
    }
}

/// Canonicalizes a cyclically ordered index sequence: the unique rotation
/// that starts at the minimum index.
///
/// Errors if any index repeats or is `>= n`, if fewer than three indices are
/// given, or if no rotation of the sequence is strictly increasing.
pub fn canonicalize(indices: &[usize], n: usize) -> Result<IndexTuple, Error> {
    if indices.len() < 3 {
        return Err(Error::TooFewVertices {
            n: indices.len(),
            min: 3,
        });
    }
    let mut seen = vec![false; n];
    for &i in indices {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        if seen[i] {
            return Err(Error::DuplicateIndex { index: i });
        }
        seen[i] = true;
    }
    let min_pos = indices
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(pos, _)| pos)
        .expect("non-empty");
    let mut rotated = Vec::with_capacity(indices.len());
    rotated.extend_from_slice(&indices[min_pos..]);
    rotated.extend_from_slice(&indices[..min_pos]);
    if rotated.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotCyclicallyOrdered {
            indices: indices.to_vec(),
        });
    }
    Ok(IndexTuple(rotated))
}
