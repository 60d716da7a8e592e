//! Generation and detection of affine-regular pentagons and hexagons.
//!
//! An affine-regular polygon is the image of a regular polygon under a
//! nonsingular affine map. Detection uses the equal-vertex-area
//! characterizations (pentagon: all vertex triangles equal; hexagon:
//! additionally (013) twice the vertex area) plus the parallel-condition
//! classification, all with scale-free tolerances.

use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{oriented_area, squared_diameter, vertex_triangle_areas, Point, PolygonPath};
use crate::scalar::fp;

pub const GOLDEN_RATIO: f64 = 1.618033988749894848;

/// Default relative tolerance for double-precision inputs of diameter O(1).
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AffineError {
    #[error("affine map is singular (|det| below tolerance)")]
    SingularMap,
    #[error("vertex triangle areas have mixed signs; input not convex")]
    NonConvex,
    #[error("degenerate input: repeated or all-collinear points")]
    DegenerateInput,
}

/// A nonsingular affine map `x -> linear·x + translation`.
#[derive(Clone, Copy, Debug)]
pub struct AffineMap {
    pub linear: [[f64; 2]; 2],
    pub translation: [f64; 2],
}

impl AffineMap {
    pub fn new(linear: [[f64; 2]; 2], translation: [f64; 2]) -> Result<Self, AffineError> {
        let m = Self {
            linear,
            translation,
        };
        if !m.det().is_finite() || m.det() == 0.0 {
            return Err(AffineError::SingularMap);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self {
            linear: [[1.0, 0.0], [0.0, 1.0]],
            translation: [0.0, 0.0],
        }
    }

    pub fn det(&self) -> f64 {
        self.linear[0][0] * self.linear[1][1] - self.linear[0][1] * self.linear[1][0]
    }

    pub fn apply(&self, p: Point) -> Point {
        Point {
            x: self.linear[0][0] * p.x + self.linear[0][1] * p.y + self.translation[0],
            y: self.linear[1][0] * p.x + self.linear[1][1] * p.y + self.translation[1],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityKind {
    AffineRegular,
    StarAffineRegular,
    NotRegular,
}

/// Classification outcome. `diagonal_side_ratio` is reported for pentagons
/// (≈ φ on a positive verdict); `residuals` carries the measured deviations
/// that drove the decision (contents depend on the operation).
#[derive(Clone, Debug)]
pub struct RegularityVerdict {
    pub kind: RegularityKind,
    pub diagonal_side_ratio: Option<f64>,
    pub residuals: Vec<f64>,
}

/// Image of the regular n-gon (unit circle, CCW, first vertex at angle 0)
/// under `map`.
pub fn affine_image_regular(n: usize, map: &AffineMap) -> Result<PolygonPath, AffineError> {
    assert!(n >= 3, "polygon needs at least 3 vertices");
    if map.det().abs() < 1e-12 {
        return Err(AffineError::SingularMap);
    }
    let pts = (0..n)
        .map(|k| {
            let ang = 2.0 * core::f64::consts::PI * k as f64 / n as f64;
            map.apply(Point {
                x: fp::cos(ang),
                y: fp::sin(ang),
            })
        })
        .collect();
    Ok(PolygonPath::new(pts).expect("n >= 3"))
}

fn signed_area_spread(t: &[f64]) -> Result<(f64, f64), AffineError> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &ti in t {
        lo = lo.min(ti);
        hi = hi.max(ti);
    }
    if lo <= 0.0 && hi >= 0.0 {
        return Err(AffineError::NonConvex);
    }
    let (lo, hi) = (lo.abs().min(hi.abs()), lo.abs().max(hi.abs()));
    Ok((hi / lo - 1.0, (lo + hi) / 2.0))
}

/// Pentagon test: affine-regular iff all vertex triangles have equal area.
/// Also checks that every diagonal/side ratio d_i/a_i (side a_i opposite
/// vertex i, diagonal d_i disjoint from it — i.e. parallel pairs) equals φ.
pub fn is_affine_regular_pentagon(
    path: &PolygonPath,
    tol: f64,
) -> Result<RegularityVerdict, AffineError> {
    assert_eq!(path.len(), 5, "pentagon expected");
    let t = vertex_triangle_areas(path);
    let (spread, _) = signed_area_spread(&t.t)?;

    // d_i = |v_{i-1} v_{i+1}|, a_i = |v_{i+2} v_{i+3}|
    let mut ratios = [0.0; 5];
    for i in 0..5 {
        let d = path.vertex(i + 4).distance(&path.vertex(i + 1));
        let a = path.vertex(i + 2).distance(&path.vertex(i + 3));
        ratios[i] = d / a;
    }
    let max_ratio_dev = ratios
        .iter()
        .map(|r| (r - GOLDEN_RATIO).abs() / GOLDEN_RATIO)
        .fold(0.0, f64::max);

    let kind = if spread <= tol && max_ratio_dev <= tol {
        RegularityKind::AffineRegular
    } else {
        RegularityKind::NotRegular
    };
    let mean_ratio = ratios.iter().sum::<f64>() / 5.0;
    Ok(RegularityVerdict {
        kind,
        diagonal_side_ratio: Some(mean_ratio),
        residuals: vec![spread, max_ratio_dev],
    })
}

/// Winding number of the closed path around the vertex centroid.
fn winding_number(pts: &[Point]) -> i32 {
    let n = pts.len();
    let cx = pts.iter().map(|p| p.x).sum::<f64>() / n as f64;
    let cy = pts.iter().map(|p| p.y).sum::<f64>() / n as f64;
    let mut total = 0.0;
    for i in 0..n {
        let j = (i + 1) % n;
        let a0 = fp::atan2(pts[i].y - cy, pts[i].x - cx);
        let a1 = fp::atan2(pts[j].y - cy, pts[j].x - cx);
        let mut d = a1 - a0;
        while d > core::f64::consts::PI {
            d -= 2.0 * core::f64::consts::PI;
        }
        while d < -core::f64::consts::PI {
            d += 2.0 * core::f64::consts::PI;
        }
        total += d;
    }
    libm_round(total / (2.0 * core::f64::consts::PI))
}

fn libm_round(x: f64) -> i32 {
    if x >= 0.0 {
        (x + 0.5) as i32
    } else {
        (x - 0.5) as i32
    }
}

/// Classification by the five parallel conditions
/// `AB||EC, BC||AD, CD||BE, DE||CA, EA||DB`.
///
/// If all five hold the points form an affine-regular pentagon in convex
/// order or a star affine-regular pentagon in star order. Convex and star
/// traversal both give same-sign vertex triangles, so the discriminator is
/// the winding number about the centroid (±1 convex, ±2 star).
pub fn parallel_classification(
    pts: &[Point; 5],
    tol: f64,
) -> Result<RegularityVerdict, AffineError> {
    let diam2 = squared_diameter(pts);
    if diam2 == 0.0 {
        return Err(AffineError::DegenerateInput);
    }
    for i in 0..5 {
        for j in i + 1..5 {
            let d2 = (pts[i].x - pts[j].x).powi(2) + (pts[i].y - pts[j].y).powi(2);
            if d2 <= tol * tol * diam2 {
                return Err(AffineError::DegenerateInput);
            }
        }
    }
    let all_collinear = (2..5).all(|k| {
        oriented_area(pts[0], pts[1], pts[k]).abs() <= tol * diam2
    });
    if all_collinear {
        return Err(AffineError::DegenerateInput);
    }

    // pairs (segment, segment): AB||EC, BC||AD, CD||BE, DE||CA, EA||DB
    const PAIRS: [([usize; 2], [usize; 2]); 5] = [
        ([0, 1], [4, 2]),
        ([1, 2], [0, 3]),
        ([2, 3], [1, 4]),
        ([3, 4], [2, 0]),
        ([4, 0], [3, 1]),
    ];
    let mut residuals = Vec::with_capacity(5);
    let mut all_parallel = true;
    for (s1, s2) in PAIRS {
        let u = (
            pts[s1[1]].x - pts[s1[0]].x,
            pts[s1[1]].y - pts[s1[0]].y,
        );
        let v = (
            pts[s2[1]].x - pts[s2[0]].x,
            pts[s2[1]].y - pts[s2[0]].y,
        );
        let cross = u.0 * v.1 - u.1 * v.0;
        let norm = fp::hypot(u.0, u.1) * fp::hypot(v.0, v.1);
        let rel = cross.abs() / norm;
        residuals.push(rel);
        if rel > tol {
            all_parallel = false;
        }
    }

    if !all_parallel {
        return Ok(RegularityVerdict {
            kind: RegularityKind::NotRegular,
            diagonal_side_ratio: None,
            residuals,
        });
    }

    let kind = match winding_number(pts).abs() {
        1 => RegularityKind::AffineRegular,
        2 => RegularityKind::StarAffineRegular,
        _ => RegularityKind::NotRegular,
    };
    let ratio = if kind == RegularityKind::AffineRegular {
        // mean of the five parallel-pair length ratios |EC|/|AB|, ...
        let mut sum = 0.0;
        for (s1, s2) in PAIRS {
            let a = pts[s1[0]].distance(&pts[s1[1]]);
            let d = pts[s2[0]].distance(&pts[s2[1]]);
            sum += d / a;
        }
        Some(sum / 5.0)
    } else {
        None
    };
    Ok(RegularityVerdict {
        kind,
        diagonal_side_ratio: ratio,
        residuals,
    })
}

/// Hexagon test: affine-regular iff all vertex triangles have equal area and
/// (013) is twice that area. Central symmetry (v_i + v_{i+3} constant) is
/// verified as a post-check.
pub fn is_affine_regular_hexagon(
    path: &PolygonPath,
    tol: f64,
) -> Result<RegularityVerdict, AffineError> {
    assert_eq!(path.len(), 6, "hexagon expected");
    let t = vertex_triangle_areas(path);
    let (spread, mean) = signed_area_spread(&t.t)?;
    let p013 = oriented_area(path.vertex(0), path.vertex(1), path.vertex(3));
    let p_dev = (p013 - 2.0 * mean * t.t[0].signum()).abs() / (2.0 * mean);

    let diam = fp::sqrt(squared_diameter(path.vertices()));
    let mut sym_dev = 0.0f64;
    let (cx, cy) = (
        (path.vertex(0).x + path.vertex(3).x) / 2.0,
        (path.vertex(0).y + path.vertex(3).y) / 2.0,
    );
    for i in 1..3 {
        let mx = (path.vertex(i).x + path.vertex(i + 3).x) / 2.0;
        let my = (path.vertex(i).y + path.vertex(i + 3).y) / 2.0;
        sym_dev = sym_dev.max(fp::hypot(mx - cx, my - cy) / diam);
    }

    let kind = if spread <= tol && p_dev <= tol && sym_dev <= tol {
        RegularityKind::AffineRegular
    } else {
        RegularityKind::NotRegular
    };
    Ok(RegularityVerdict {
        kind,
        diagonal_side_ratio: None,
        residuals: vec![spread, p_dev, sym_dev],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_image_is_regular() {
        let path = affine_image_regular(5, &AffineMap::identity()).unwrap();
        let v = is_affine_regular_pentagon(&path, DEFAULT_TOL).unwrap();
        assert_eq!(v.kind, RegularityKind::AffineRegular);
        assert!((v.diagonal_side_ratio.unwrap() - GOLDEN_RATIO).abs() < 1e-12);
    }

    #[test]
    fn shear_preserves_regularity() {
        let shear = AffineMap::new([[1.0, 1.0], [0.0, 1.0]], [3.0, -2.0]).unwrap();
        let path = affine_image_regular(5, &shear).unwrap();
        let v = is_affine_regular_pentagon(&path, DEFAULT_TOL).unwrap();
        assert_eq!(v.kind, RegularityKind::AffineRegular);
        // areas scale uniformly under det = 1
        let t = vertex_triangle_areas(&path);
        for &ti in &t.t {
            assert!((ti - t.t[0]).abs() < 1e-12);
        }
    }

    #[test]
    fn displaced_vertex_is_rejected() {
        let mut pts = affine_image_regular(5, &AffineMap::identity())
            .unwrap()
            .vertices()
            .to_vec();
        pts[2] = Point::new(pts[2].x + 0.1, pts[2].y);
        let path = PolygonPath::new(pts).unwrap();
        let v = is_affine_regular_pentagon(&path, DEFAULT_TOL).unwrap();
        assert_eq!(v.kind, RegularityKind::NotRegular);
    }

    #[test]
    fn singular_map_rejected() {
        assert!(AffineMap::new([[1.0, 2.0], [2.0, 4.0]], [0.0, 0.0]).is_err());
    }

    #[test]
    fn star_order_classifies_star() {
        let reg = affine_image_regular(5, &AffineMap::identity()).unwrap();
        let v = reg.vertices();
        let star = [v[0], v[2], v[4], v[1], v[3]];
        let verdict = parallel_classification(&star, DEFAULT_TOL).unwrap();
        assert_eq!(verdict.kind, RegularityKind::StarAffineRegular);
    }

    #[test]
    fn convex_order_classifies_regular() {
        let shear = AffineMap::new([[2.0, 0.5], [0.0, 1.0]], [0.0, 0.0]).unwrap();
        let path = affine_image_regular(5, &shear).unwrap();
        let pts: [Point; 5] = path.vertices().try_into().unwrap();
        let verdict = parallel_classification(&pts, DEFAULT_TOL).unwrap();
        assert_eq!(verdict.kind, RegularityKind::AffineRegular);
    }

    #[test]
    fn generic_points_not_regular() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.1),
            Point::new(1.4, 1.1),
            Point::new(0.6, 1.9),
            Point::new(-0.5, 0.9),
        ];
        let verdict = parallel_classification(&pts, DEFAULT_TOL).unwrap();
        assert_eq!(verdict.kind, RegularityKind::NotRegular);
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let p = Point::new(1.0, 1.0);
        let repeated = [p, p, Point::new(2.0, 0.0), Point::new(3.0, 1.0), Point::new(0.0, 2.0)];
        assert!(matches!(
            parallel_classification(&repeated, DEFAULT_TOL),
            Err(AffineError::DegenerateInput)
        ));
        let collinear: [Point; 5] =
            core::array::from_fn(|k| Point::new(k as f64, 2.0 * k as f64));
        assert!(matches!(
            parallel_classification(&collinear, DEFAULT_TOL),
            Err(AffineError::DegenerateInput)
        ));
    }

    #[test]
    fn regular_hexagon_detected() {
        let path = affine_image_regular(6, &AffineMap::identity()).unwrap();
        let v = is_affine_regular_hexagon(&path, DEFAULT_TOL).unwrap();
        assert_eq!(v.kind, RegularityKind::AffineRegular);
    }

    #[test]
    fn stretched_hexagon_detected() {
        let map = AffineMap::new([[3.0, 1.0], [0.0, 1.0]], [1.0, 2.0]).unwrap();
        let path = affine_image_regular(6, &map).unwrap();
        let v = is_affine_regular_hexagon(&path, DEFAULT_TOL).unwrap();
        assert_eq!(v.kind, RegularityKind::AffineRegular);
    }

    #[test]
    fn hexagon_with_x2_stretch_doubles_013() {
        let map = AffineMap::new([[2.0, 0.0], [0.0, 1.0]], [0.0, 0.0]).unwrap();
        let path = affine_image_regular(6, &map).unwrap();
        let t = vertex_triangle_areas(&path);
        let p = oriented_area(path.vertex(0), path.vertex(1), path.vertex(3));
        // affine maps preserve area ratios: (013)/(0) stays 2
        assert!((p / t.t[0] - 2.0).abs() < 1e-12);
    }
}
