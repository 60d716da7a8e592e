//! Seeded random generators for the identity fuzzers.
//!
//! Every generator takes an explicit seed (or an `Rng` it owns locally), so
//! fuzz trials are reproducible and shardable by `seed + index`. ChaCha8 is
//! used for a stable, platform-independent stream.

use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::affine::AffineMap;
use crate::cyclic::SideLengths5;
use crate::geom::{Point, PolygonPath};
use crate::scalar::fp;

pub type SeededRng = ChaCha8Rng;

pub fn rng_for(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform points in the square [-1, 1]².
pub fn random_points<const N: usize>(rng: &mut SeededRng) -> [Point; N] {
    core::array::from_fn(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

/// Convex n-gon: points on a random ellipse at sorted random angles.
/// Sorted angles on a convex curve guarantee convexity.
pub fn random_convex_polygon(rng: &mut SeededRng, n: usize) -> PolygonPath {
    let mut angles: Vec<f64> = (0..n)
        .map(|_| rng.gen_range(0.0..(2.0 * core::f64::consts::PI)))
        .collect();
    angles.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite"));
    // keep vertices separated so vertex triangles stay well away from zero
    let min_gap = 0.05;
    for i in 1..n {
        if angles[i] - angles[i - 1] < min_gap {
            angles[i] = angles[i - 1] + min_gap;
        }
    }
    let map = random_affine_map(rng);
    let pts = angles
        .into_iter()
        .map(|a| map.apply(Point::new(fp::cos(a), fp::sin(a))))
        .collect();
    PolygonPath::new(pts).expect("n >= 3")
}

/// Nonsingular affine map with entries in [-2, 2] and |det| >= 0.3.
pub fn random_affine_map(rng: &mut SeededRng) -> AffineMap {
    loop {
        let linear = [
            [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)],
            [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)],
        ];
        let translation = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
        if let Ok(map) = AffineMap::new(linear, translation) {
            if map.det().abs() >= 0.3 {
                return map;
            }
        }
    }
}

/// n points on a common circle (random radius, sorted angles), returned with
/// the circle radius. Consecutive chords are the polygon sides.
pub fn random_concyclic(rng: &mut SeededRng, n: usize) -> (Vec<Point>, f64) {
    let r = rng.gen_range(0.5..2.0);
    let mut angles: Vec<f64> = (0..n)
        .map(|_| rng.gen_range(0.0..(2.0 * core::f64::consts::PI)))
        .collect();
    angles.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite"));
    let min_gap = 0.1;
    for i in 1..n {
        if angles[i] - angles[i - 1] < min_gap {
            angles[i] = angles[i - 1] + min_gap;
        }
    }
    let pts = angles
        .into_iter()
        .map(|a| Point::new(r * fp::cos(a), r * fp::sin(a)))
        .collect();
    (pts, r)
}

/// Cyclic-quadrilateral side lengths from four points on a circle,
/// returned as (sides, shoelace area, circumradius).
pub fn random_cyclic_quad(rng: &mut SeededRng) -> ([f64; 4], f64, f64) {
    let (pts, r) = random_concyclic(rng, 4);
    let sides = core::array::from_fn(|i| pts[i].distance(&pts[(i + 1) % 4]));
    let path = PolygonPath::new(pts).expect("quad");
    (sides, crate::geom::polygon_area(&path), r)
}

/// Valid cyclic-pentagon side lengths: uniform in [0.5, 1.0] with a random
/// overall scale, so the polygon inequality always holds.
pub fn random_sides5(rng: &mut SeededRng) -> SideLengths5 {
    let scale = rng.gen_range(0.5..2.0);
    let a = core::array::from_fn(|_| scale * rng.gen_range(0.5..1.0));
    SideLengths5::new(a).expect("generator respects the polygon inequality")
}

/// Displace one random vertex by `magnitude` times the configuration diameter.
pub fn perturb_one_vertex(rng: &mut SeededRng, path: &PolygonPath, magnitude: f64) -> PolygonPath {
    let mut pts = path.vertices().to_vec();
    let diam = fp::sqrt(crate::geom::squared_diameter(&pts));
    let idx = rng.gen_range(0..pts.len());
    let ang = rng.gen_range(0.0..(2.0 * core::f64::consts::PI));
    pts[idx] = Point::new(
        pts[idx].x + magnitude * diam * fp::cos(ang),
        pts[idx].y + magnitude * diam * fp::sin(ang),
    );
    PolygonPath::new(pts).expect("same length")
}
