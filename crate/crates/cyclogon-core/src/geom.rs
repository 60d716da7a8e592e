//! Numeric evaluation of the plane-polygon area identities on explicit
//! point configurations.
//!
//! Conventions used throughout:
//! * counterclockwise is positive; all areas are oriented (signed);
//! * the vertex triangle at vertex `i` of an n-path is `(i-1, i, i+1) mod n`,
//!   in path order, so a convex CCW path has all vertex-triangle areas > 0;
//! * identities hold for *arbitrary* point sets when stated with oriented
//!   areas, and every residual here is written that way — tolerances only
//!   absorb floating-point rounding.

use alloc::vec::Vec;

use crate::scalar::{fp, Real};

/// A plane point with finite coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    /// Panics on non-finite coordinates; use [`Point::try_new`] to validate input.
    pub fn new(x: f64, y: f64) -> Self {
        assert!(
            x.is_finite() && y.is_finite(),
            "point coordinates must be finite"
        );
        Self { x, y }
    }

    pub fn try_new(x: f64, y: f64) -> Option<Self> {
        if x.is_finite() && y.is_finite() {
            Some(Self { x, y })
        } else {
            None
        }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        fp::hypot(self.x - other.x, self.y - other.y)
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum GeomError {
    #[error("polygon path needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("quadratic has complex roots (discriminant {0:e})")]
    ComplexRoots(f64),
    #[error("degenerate triangle: circumradius undefined")]
    DegenerateTriangle,
    #[error("lambda = 1 makes the equal-vertex-area hexagon equation linear")]
    SingularLambda,
}

/// An ordered vertex sequence (a closed polygonal path), length >= 3.
#[derive(Clone, Debug, PartialEq)]
pub struct PolygonPath {
    vertices: Vec<Point>,
}

impl PolygonPath {
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeomError> {
        if vertices.len() < 3 {
            return Err(GeomError::TooFewVertices(vertices.len()));
        }
        Ok(Self { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    /// Sign of the shoelace sum: +1 counterclockwise, -1 clockwise, 0 degenerate.
    pub fn orientation(&self) -> i8 {
        let a = polygon_area(self);
        if a > 0.0 {
            1
        } else if a < 0.0 {
            -1
        } else {
            0
        }
    }
}

/// Oriented area of triangle pqr: half the cross product of the edge vectors.
/// Antisymmetric under swapping any two arguments.
pub fn oriented_area(p: Point, q: Point, r: Point) -> f64 {
    oriented_area_in::<f64>(p, q, r)
}

pub fn oriented_area_in<T: Real>(p: Point, q: Point, r: Point) -> T {
    let (px, py) = (T::from_f64(p.x), T::from_f64(p.y));
    let (qx, qy) = (T::from_f64(q.x), T::from_f64(q.y));
    let (rx, ry) = (T::from_f64(r.x), T::from_f64(r.y));
    let half = T::from_f64(0.5);
    half * ((qx - px) * (ry - py) - (rx - px) * (qy - py))
}

/// Signed shoelace area; positive for counterclockwise paths.
pub fn polygon_area(path: &PolygonPath) -> f64 {
    polygon_area_in::<f64>(path)
}

pub fn polygon_area_in<T: Real>(path: &PolygonPath) -> T {
    shoelace_in::<T>(path.vertices())
}

fn shoelace_in<T: Real>(pts: &[Point]) -> T {
    let n = pts.len();
    let mut sum = T::zero();
    for i in 0..n {
        let j = (i + 1) % n;
        let (xi, yi) = (T::from_f64(pts[i].x), T::from_f64(pts[i].y));
        let (xj, yj) = (T::from_f64(pts[j].x), T::from_f64(pts[j].y));
        sum = sum + (xi * yj - xj * yi);
    }
    sum * T::from_f64(0.5)
}

/// Largest squared pairwise distance; the natural length² scale of a
/// configuration, used to normalize identity residuals.
pub fn squared_diameter(pts: &[Point]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let dx = pts[i].x - pts[j].x;
            let dy = pts[i].y - pts[j].y;
            best = best.max(dx * dx + dy * dy);
        }
    }
    best
}

/// Oriented areas of the vertex triangles `(i-1, i, i+1) mod n`.
#[derive(Clone, Debug)]
pub struct VertexTriangleAreas {
    pub t: Vec<f64>,
}

impl VertexTriangleAreas {
    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }
}

pub fn vertex_triangle_areas(path: &PolygonPath) -> VertexTriangleAreas {
    let n = path.len();
    let t = (0..n)
        .map(|i| oriented_area(path.vertex(i + n - 1), path.vertex(i), path.vertex(i + 1)))
        .collect();
    VertexTriangleAreas { t }
}

/// The cyclic symmetric functions c1 = Σ t_i and c2 = Σ t_i t_{i+1}.
#[derive(Clone, Copy, Debug)]
pub struct CyclicSymmetricSums {
    pub c1: f64,
    pub c2: f64,
}

pub fn cyclic_sums(t: &VertexTriangleAreas) -> CyclicSymmetricSums {
    let n = t.len();
    let c1 = t.t.iter().sum();
    let c2 = (0..n).map(|i| t.t[i] * t.t[(i + 1) % n]).sum();
    CyclicSymmetricSums { c1, c2 }
}

fn vertex_areas_in<T: Real>(pts: &[Point]) -> Vec<T> {
    let n = pts.len();
    (0..n)
        .map(|i| oriented_area_in::<T>(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]))
        .collect()
}

/// Residual of the pentagon area quadratic `A² - c1·A + c2`.
///
/// Zero (up to rounding) for *any* five points, since with oriented areas
/// c1 = 2A - A' and c2 = A(A - A').
pub fn gauss_residual(path: &PolygonPath) -> f64 {
    gauss_residual_in::<f64>(path).to_f64()
}

pub fn gauss_residual_in<T: Real>(path: &PolygonPath) -> T {
    assert_eq!(path.len(), 5, "gauss_residual needs a pentagon");
    let pts = path.vertices();
    let a = shoelace_in::<T>(pts);
    let t = vertex_areas_in::<T>(pts);
    let mut c1 = T::zero();
    let mut c2 = T::zero();
    for i in 0..5 {
        c1 = c1 + t[i];
        c2 = c2 + t[i] * t[(i + 1) % 5];
    }
    a * a - c1 * a + c2
}

/// The two roots of `x² - c1·x + c2 = 0`, descending.
///
/// For a convex pentagon these are the area A and A - A' (A' the star
/// pentagon area). A slightly negative discriminant (within `tol` of zero,
/// scaled) is clamped; anything more negative is an error.
pub fn gauss_roots(t: &VertexTriangleAreas, tol: f64) -> Result<(f64, f64), GeomError> {
    assert_eq!(t.len(), 5, "gauss_roots needs pentagon vertex areas");
    let s = cyclic_sums(t);
    let scale = (s.c1 * s.c1).max(4.0 * s.c2.abs());
    let disc = s.c1 * s.c1 - 4.0 * s.c2;
    if disc < -tol * scale.max(f64::MIN_POSITIVE) {
        return Err(GeomError::ComplexRoots(disc));
    }
    let root = fp::sqrt(disc.max(0.0));
    Ok(((s.c1 + root) / 2.0, (s.c1 - root) / 2.0))
}

/// Monge residual `(012)(034) + (014)(023) - (013)(024)` with the first
/// point as the common vertex; identically zero for any five points.
pub fn monge_residual(pts: &[Point; 5]) -> f64 {
    monge_residual_in::<f64>(pts).to_f64()
}

pub fn monge_residual_in<T: Real>(pts: &[Point; 5]) -> T {
    let t = |i: usize, j: usize| oriented_area_in::<T>(pts[0], pts[i], pts[j]);
    t(1, 2) * t(3, 4) + t(1, 4) * t(2, 3) - t(1, 3) * t(2, 4)
}

/// Magnitude scale of the Monge terms, for relative residual measurement.
pub fn monge_scale(pts: &[Point; 5]) -> f64 {
    let t = |i: usize, j: usize| oriented_area(pts[0], pts[i], pts[j]);
    (t(1, 2) * t(3, 4))
        .abs()
        .max((t(1, 4) * t(2, 3)).abs())
        .max((t(1, 3) * t(2, 4)).abs())
}

/// Oriented area of the star pentagon (vertex order 0, 2, 4, 1, 3), computed
/// as the fan sum t_02 + t_24 + t_41 + t_13 + t_30 around the vertex centroid.
pub fn star_pentagon_area(path: &PolygonPath) -> f64 {
    assert_eq!(path.len(), 5, "star_pentagon_area needs a pentagon");
    let pts = path.vertices();
    let cx = pts.iter().map(|p| p.x).sum::<f64>() / 5.0;
    let cy = pts.iter().map(|p| p.y).sum::<f64>() / 5.0;
    let o = Point { x: cx, y: cy };
    let t = |i: usize, j: usize| oriented_area(o, pts[i], pts[j]);
    t(0, 2) + t(2, 4) + t(4, 1) + t(1, 3) + t(3, 0)
}

/// The four identities of the generalized Gauss formula, as residuals:
/// `A²-c1A+c2`, `A'²-c1²+4c2`, `A²-c1'²+4c2'`, `A'²-c1'A'+c2'`.
///
/// Primed quantities belong to the star pentagon: t'_i is the vertex
/// triangle (i-2, i, i+2) and the primed cyclic sums run in star order.
pub fn generalized_gauss_residuals(pts: &[Point; 5]) -> [f64; 4] {
    generalized_gauss_residuals_in::<f64>(pts).map(Real::to_f64)
}

pub fn generalized_gauss_residuals_in<T: Real>(pts: &[Point; 5]) -> [T; 4] {
    let tri = |i: usize, j: usize, k: usize| {
        oriented_area_in::<T>(pts[i % 5], pts[j % 5], pts[k % 5])
    };
    let a = shoelace_in::<T>(pts);
    let star = [pts[0], pts[2], pts[4], pts[1], pts[3]];
    let ap = shoelace_in::<T>(&star);
    let t: Vec<T> = vertex_areas_in::<T>(pts);
    let tp: Vec<T> = (0..5).map(|i| tri(i + 3, i, i + 2)).collect();
    let mut c1 = T::zero();
    let mut c2 = T::zero();
    let mut c1p = T::zero();
    let mut c2p = T::zero();
    const STAR_ORDER: [usize; 5] = [0, 2, 4, 1, 3];
    for i in 0..5 {
        c1 = c1 + t[i];
        c2 = c2 + t[i] * t[(i + 1) % 5];
        c1p = c1p + tp[i];
        c2p = c2p + tp[STAR_ORDER[i]] * tp[STAR_ORDER[(i + 1) % 5]];
    }
    [
        a * a - c1 * a + c2,
        ap * ap - c1 * c1 + T::from_f64(4.0) * c2,
        a * a - c1p * c1p + T::from_f64(4.0) * c2p,
        ap * ap - c1p * ap + c2p,
    ]
}

/// Residual of the Ptolemy-type circumradius identity
/// `|12|/R012 · |34|/R034 + |14|/R014 · |23|/R023 - |13|/R013 · |24|/R024`.
///
/// Circumradii are taken with the orientation sign of the triangle
/// (R = abc / 4Δ with Δ oriented), which makes the identity hold for
/// arbitrary position; for concyclic points it reduces to Ptolemy.
pub fn ptolemy_circumradius_residual(pts: &[Point; 5]) -> Result<f64, GeomError> {
    ptolemy_circumradius_residual_in::<f64>(pts).map(Real::to_f64)
}

pub fn ptolemy_circumradius_residual_in<T: Real>(pts: &[Point; 5]) -> Result<T, GeomError> {
    // |ij|/R_0ij = 4·(0ij)/(|0i|·|0j|), so each term needs only one sqrt pair.
    let dist = |i: usize, j: usize| -> T {
        let dx = T::from_f64(pts[i].x) - T::from_f64(pts[j].x);
        let dy = T::from_f64(pts[i].y) - T::from_f64(pts[j].y);
        (dx * dx + dy * dy).sqrt()
    };
    let term = |i: usize, j: usize| -> Result<T, GeomError> {
        let t = oriented_area_in::<T>(pts[0], pts[i], pts[j]);
        if t.to_f64() == 0.0 {
            return Err(GeomError::DegenerateTriangle);
        }
        let four = T::from_f64(4.0);
        Ok(four * t / (dist(0, i) * dist(0, j)))
    };
    Ok(term(1, 2)? * term(3, 4)? + term(1, 4)? * term(2, 3)? - term(1, 3)? * term(2, 4)?)
}

/// Residual of `A² - C1·A + C2` where C1, C2 are the cyclic sums of the
/// border quadrilateral areas (A - t_i); zero for any pentagon.
pub fn border_quadrilateral_residual(path: &PolygonPath) -> f64 {
    border_quadrilateral_residual_in::<f64>(path).to_f64()
}

pub fn border_quadrilateral_residual_in<T: Real>(path: &PolygonPath) -> T {
    assert_eq!(path.len(), 5, "border quadrilaterals need a pentagon");
    let pts = path.vertices();
    let a = shoelace_in::<T>(pts);
    let t = vertex_areas_in::<T>(pts);
    let quad: Vec<T> = (0..5).map(|i| a - t[i]).collect();
    let mut big_c1 = T::zero();
    let mut big_c2 = T::zero();
    for i in 0..5 {
        big_c1 = big_c1 + quad[i];
        big_c2 = big_c2 + quad[i] * quad[(i + 1) % 5];
    }
    a * a - big_c1 * a + big_c2
}

/// Residual of the hexagon area equation with parameter p = (013):
///
/// `[p-(1)]A² + [...]A + [...] = 0`
///
/// Reported raw (not normalized by the leading coefficient `p - (1)`); when
/// p ≈ (1) the equation degenerates to linear but the residual stays defined.
pub fn hexagon_theorem41_residual(path: &PolygonPath) -> f64 {
    hexagon_theorem41_residual_in::<f64>(path).to_f64()
}

pub fn hexagon_theorem41_residual_in<T: Real>(path: &PolygonPath) -> T {
    assert_eq!(path.len(), 6, "theorem 4.1 needs a hexagon");
    let pts = path.vertices();
    let a = shoelace_in::<T>(pts);
    let t = vertex_areas_in::<T>(pts);
    let p = oriented_area_in::<T>(pts[0], pts[1], pts[3]);
    let (t0, t1, t2, t3, t4, t5) = (t[0], t[1], t[2], t[3], t[4], t[5]);
    let two = T::from_f64(2.0);
    let quad = p - t1;
    let lin = t1 * t4 + two * t1 * t2 + t1 * t5 - p * p + t1 * p + t0 * t1
        - t2 * p
        - t3 * p
        - t5 * p
        - t4 * p
        - t0 * t2
        - t0 * p;
    let cst = -(t1 * t2 * t5) - t1 * t2 * p - t1 * t2 * t4 - t1 * t4 * t5 - t1 * t2 * t2
        + t2 * t3 * p
        + t3 * p * p
        - t0 * t1 * t5
        + t0 * t2 * t2
        + t4 * t5 * p
        - t0 * t1 * t2
        + t0 * t2 * t5
        + t0 * p * p
        - t0 * t1 * p
        + two * t0 * t2 * p
        + t0 * t5 * p
        + t3 * t4 * p;
    quad * a * a + lin * a + cst
}

/// Whether Theorem 4.1's quadratic degenerates (leading coefficient p ≈ (1)).
pub fn hexagon_theorem41_is_singular(path: &PolygonPath, tol: f64) -> bool {
    let pts = path.vertices();
    let t1 = oriented_area(pts[0], pts[1], pts[2]);
    let p = oriented_area(pts[0], pts[1], pts[3]);
    (p - t1).abs() <= tol * squared_diameter(pts)
}

/// Closed-form area `A = (λ² + 2λ - 2)/(λ - 1) · k` of the equal-vertex-area
/// hexagon with (013) = λk.
pub fn affine_hexagon_area(k: f64, lambda: f64) -> Result<f64, GeomError> {
    const SINGULAR_TOL: f64 = 1e-12;
    if (lambda - 1.0).abs() < SINGULAR_TOL {
        return Err(GeomError::SingularLambda);
    }
    Ok((lambda * lambda + 2.0 * lambda - 2.0) / (lambda - 1.0) * k)
}

/// Residual of the symmetric hexagon identity
/// `A² - [Σ(i)]A + [(1)+(3)+(5)][(0)+(2)+(4)] - (135)(024)`;
/// zero for any hexagon (two dissections of A multiplied out).
pub fn hexagon_identity45_residual(path: &PolygonPath) -> f64 {
    hexagon_identity45_residual_in::<f64>(path).to_f64()
}

pub fn hexagon_identity45_residual_in<T: Real>(path: &PolygonPath) -> T {
    assert_eq!(path.len(), 6, "identity (4.5) needs a hexagon");
    let pts = path.vertices();
    let a = shoelace_in::<T>(pts);
    let t = vertex_areas_in::<T>(pts);
    let odd = t[1] + t[3] + t[5];
    let even = t[0] + t[2] + t[4];
    let t135 = oriented_area_in::<T>(pts[1], pts[3], pts[5]);
    let t024 = oriented_area_in::<T>(pts[0], pts[2], pts[4]);
    a * a - (odd + even) * a + odd * even - t135 * t024
}

/// Prouhet residual `(013)(024)(035) + (015)(023)(034) - (013)(025)(034)
/// - (014)(023)(035)`; zero for any six points.
pub fn prouhet_residual(pts: &[Point; 6]) -> f64 {
    prouhet_residual_in::<f64>(pts).to_f64()
}

pub fn prouhet_residual_in<T: Real>(pts: &[Point; 6]) -> T {
    let t = |i: usize, j: usize| oriented_area_in::<T>(pts[0], pts[i], pts[j]);
    t(1, 3) * t(2, 4) * t(3, 5) + t(1, 5) * t(2, 3) * t(3, 4)
        - t(1, 3) * t(2, 5) * t(3, 4)
        - t(1, 4) * t(2, 3) * t(3, 5)
}

pub fn prouhet_scale(pts: &[Point; 6]) -> f64 {
    let t = |i: usize, j: usize| oriented_area(pts[0], pts[i], pts[j]);
    (t(1, 3) * t(2, 4) * t(3, 5))
        .abs()
        .max((t(1, 5) * t(2, 3) * t(3, 4)).abs())
        .max((t(1, 3) * t(2, 5) * t(3, 4)).abs())
        .max((t(1, 4) * t(2, 3) * t(3, 5)).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pentagon_regular(side: f64) -> PolygonPath {
        // circumradius for unit side: 1/(2 sin(pi/5))
        let r = side / (2.0 * fp::sin(core::f64::consts::PI / 5.0));
        let pts = (0..5)
            .map(|k| {
                let ang = 2.0 * core::f64::consts::PI * k as f64 / 5.0;
                Point::new(r * fp::cos(ang), r * fp::sin(ang))
            })
            .collect();
        PolygonPath::new(pts).unwrap()
    }

    fn hexagon_regular(side: f64) -> PolygonPath {
        let pts = (0..6)
            .map(|k| {
                let ang = 2.0 * core::f64::consts::PI * k as f64 / 6.0;
                Point::new(side * fp::cos(ang), side * fp::sin(ang))
            })
            .collect();
        PolygonPath::new(pts).unwrap()
    }

    fn square_ccw() -> PolygonPath {
        PolygonPath::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn oriented_area_basics() {
        let o = Point::new(0.0, 0.0);
        assert_eq!(
            oriented_area(o, Point::new(1.0, 0.0), Point::new(0.0, 1.0)),
            0.5
        );
        assert_eq!(
            oriented_area(o, Point::new(1.0, 1.0), Point::new(2.0, 2.0)),
            0.0
        );
        assert_eq!(
            oriented_area(o, Point::new(0.0, 1.0), Point::new(1.0, 0.0)),
            -0.5
        );
    }

    #[test]
    fn unit_square_area_signs() {
        let sq = square_ccw();
        assert_eq!(polygon_area(&sq), 1.0);
        let rev = PolygonPath::new(sq.vertices().iter().rev().copied().collect()).unwrap();
        assert_eq!(polygon_area(&rev), -1.0);
        assert_eq!(sq.orientation(), 1);
        assert_eq!(rev.orientation(), -1);
    }

    #[test]
    fn regular_pentagon_area_matches_closed_form() {
        // A = (1/4)·sqrt(25 + 10·sqrt(5)) for unit side
        let a = polygon_area(&pentagon_regular(1.0));
        assert!((a - 1.7204774005889670).abs() < 1e-12);
    }

    #[test]
    fn regular_vertex_triangle_areas() {
        // pentagon: sin(108°)/2; hexagon: sin(120°)/2
        let t5 = vertex_triangle_areas(&pentagon_regular(1.0));
        for &ti in &t5.t {
            assert!((ti - 0.47552825814757677).abs() < 1e-12);
        }
        let t6 = vertex_triangle_areas(&hexagon_regular(1.0));
        for &ti in &t6.t {
            assert!((ti - 0.43301270189221935).abs() < 1e-12);
        }
    }

    #[test]
    fn collinear_vertex_triangle_is_zero() {
        let path = PolygonPath::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let t = vertex_triangle_areas(&path);
        assert_eq!(t.t[1], 0.0);
    }

    #[test]
    fn gauss_residual_regular_and_coincident() {
        assert!(gauss_residual(&pentagon_regular(1.0)).abs() <= 1e-12);
        let coincident =
            PolygonPath::new(vec![Point::new(2.0, 3.0); 5]).unwrap();
        assert_eq!(gauss_residual(&coincident), 0.0);
    }

    #[test]
    fn gauss_roots_equal_vertex_areas() {
        // all t_i = 1: roots (5 ± sqrt 5)/2, the larger being sqrt(5)·φ
        let t = VertexTriangleAreas { t: vec![1.0; 5] };
        let (hi, lo) = gauss_roots(&t, 1e-12).unwrap();
        assert!((hi - 3.618033988749895).abs() < 1e-12);
        assert!((lo - 1.381966011250105).abs() < 1e-12);
        let zero = VertexTriangleAreas { t: vec![0.0; 5] };
        assert_eq!(gauss_roots(&zero, 1e-12).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn gauss_roots_reject_complex() {
        // c1 = 0.01, c2 ≈ 1: discriminant strongly negative
        let t = VertexTriangleAreas {
            t: vec![1.0, 1.0, -1.0, -1.0, 0.01],
        };
        assert!(matches!(
            gauss_roots(&t, 1e-12),
            Err(GeomError::ComplexRoots(_))
        ));
    }

    #[test]
    fn gauss_roots_match_star_decomposition() {
        let path = pentagon_regular(1.0);
        let t = vertex_triangle_areas(&path);
        let (hi, lo) = gauss_roots(&t, 1e-12).unwrap();
        let a = polygon_area(&path);
        let ap = star_pentagon_area(&path);
        assert!((hi - a).abs() < 1e-12);
        assert!((lo - (a - ap)).abs() < 1e-12);
        // frozen star area of the unit-side regular pentagon
        assert!((ap - 1.0633135104400205).abs() < 1e-12);
    }

    #[test]
    fn star_area_of_flat_pentagon_is_zero() {
        let flat = PolygonPath::new(
            (0..5)
                .map(|k| Point::new(k as f64, 0.0))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(star_pentagon_area(&flat), 0.0);
    }

    #[test]
    fn monge_zero_for_degenerate() {
        let p = Point::new(0.3, -0.4);
        let pts = [p, p, Point::new(1.0, 2.0), Point::new(-1.0, 0.5), p];
        assert_eq!(monge_residual(&pts), 0.0);
    }

    #[test]
    fn theorem41_regular_hexagon() {
        assert!(hexagon_theorem41_residual(&hexagon_regular(1.0)).abs() < 1e-12);
    }

    #[test]
    fn theorem41_degenerates_to_gauss() {
        // v5 = v0: both residuals vanish on the same configuration
        let pent = pentagon_regular(1.0);
        let mut v = pent.vertices().to_vec();
        v.push(v[0]);
        let hex = PolygonPath::new(v).unwrap();
        assert!(hexagon_theorem41_residual(&hex).abs() < 1e-12);
        assert!(gauss_residual(&pent).abs() < 1e-12);
    }

    #[test]
    fn affine_hexagon_area_values() {
        assert!((affine_hexagon_area(1.0, 2.0).unwrap() - 6.0).abs() < 1e-15);
        assert_eq!(affine_hexagon_area(0.0, 5.0).unwrap(), 0.0);
        assert!((affine_hexagon_area(1.0, 3.0).unwrap() - 6.5).abs() < 1e-15);
        assert!(matches!(
            affine_hexagon_area(1.0, 1.0 + 1e-15),
            Err(GeomError::SingularLambda)
        ));
    }

    #[test]
    fn hexagon_identity45_degenerate_flat() {
        let flat = PolygonPath::new(
            (0..6)
                .map(|k| Point::new(k as f64, 0.0))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(hexagon_identity45_residual(&flat), 0.0);
    }

    #[test]
    fn prouhet_repeated_points() {
        let p = Point::new(1.0, 1.0);
        let pts = [p, p, p, Point::new(0.0, 1.0), Point::new(2.0, 0.0), p];
        assert_eq!(prouhet_residual(&pts), 0.0);
    }

    #[test]
    fn ptolemy_regular_pentagon() {
        let path = pentagon_regular(1.0);
        let pts: [Point; 5] = path.vertices().try_into().unwrap();
        let r = ptolemy_circumradius_residual(&pts).unwrap();
        assert!(r.abs() < 1e-12);
    }

    #[test]
    fn ptolemy_degenerate_triangle_rejected() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0), // collinear with 0 and 1
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
        ];
        assert!(matches!(
            ptolemy_circumradius_residual(&pts),
            Err(GeomError::DegenerateTriangle)
        ));
    }
}
