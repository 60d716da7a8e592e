//! Cyclic polygons: the quadrilateral toolkit (Ptolemy, Brahmagupta,
//! circumradius), the cyclic-pentagon bisection oracle, and numeric
//! evaluation of the degree-7 diagonal / area / circumradius relations.
//!
//! Side and diagonal labels follow one convention everywhere: `a_i` is the
//! side opposite vertex `i` (the edge {i+2, i+3} of the path) and `d_i` is
//! the diagonal disjoint from `a_i` (the ear diagonal {i-1, i+1}). The
//! diagonal d_0 cuts the pentagon into the vertex triangle (4,0,1) with
//! sides a_2, a_3 and the quadrilateral (1,2,3,4) with sides a_4, a_0, a_1.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::geom::{polygon_area, Point, PolygonPath, VertexTriangleAreas};
use crate::poly::MultiPoly;
use crate::scalar::fp;
use crate::symfun::elem_values5;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum CyclicError {
    #[error("side lengths must be finite and positive")]
    InvalidSides,
    #[error("no triangle with these side lengths (Heron² < 0)")]
    NotATriangle,
    #[error("no cyclic quadrilateral: a side reaches the sum of the others")]
    NoCyclicQuad,
    #[error("no convex cyclic polygon exists for these side lengths")]
    NoConvexCyclicPolygon,
    #[error("rational area formula denominator vanishes")]
    ZeroDenominator,
    #[error("the two closed forms of delta_k disagree (implementation bug)")]
    FormMismatch,
}

/// Cyclic-pentagon side lengths a_0..a_4 (a_i opposite vertex i).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SideLengths5 {
    pub a: [f64; 5],
}

impl SideLengths5 {
    /// Requires positive finite sides satisfying the polygon inequality.
    pub fn new(a: [f64; 5]) -> Result<Self, CyclicError> {
        if a.iter().any(|&x| !x.is_finite() || x <= 0.0) {
            return Err(CyclicError::InvalidSides);
        }
        let sum: f64 = a.iter().sum();
        let max = a.iter().cloned().fold(0.0, f64::max);
        if max >= sum - max {
            return Err(CyclicError::NoConvexCyclicPolygon);
        }
        Ok(Self { a })
    }

    /// Unvalidated constructor for formula evaluation on degenerate inputs
    /// (for example a_4 = 0, where the pentagon collapses to a
    /// quadrilateral). Not usable for solving.
    pub fn degenerate(a: [f64; 5]) -> Self {
        Self { a }
    }

    /// Relabel so the septic written for d_0 applies to the diagonal d_i.
    pub fn rotated(&self, i: usize) -> Self {
        Self {
            a: core::array::from_fn(|j| self.a[(j + i) % 5]),
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            a: self.a.map(|x| x * factor),
        }
    }
}

/// The invariants p, q, P, Q, S of the d_0 dissection.
#[derive(Clone, Copy, Debug)]
pub struct DerivedParams {
    pub p: f64,
    pub big_p: f64,
    pub q: f64,
    pub big_q: f64,
    pub s: f64,
}

pub fn derived_params(sides: &SideLengths5) -> DerivedParams {
    let [a0, a1, a2, a3, a4] = sides.a;
    DerivedParams {
        p: a2 * a3,
        big_p: a0 * a1 * a4,
        q: a2 * a2 + a3 * a3,
        big_q: a0 * a0 + a1 * a1 + a4 * a4,
        s: (a0 * a1).powi(2) + (a0 * a4).powi(2) + (a1 * a4).powi(2),
    }
}

/// Elementary symmetric functions of the squared side lengths.
#[derive(Clone, Copy, Debug)]
pub struct ElemSym {
    pub e: [f64; 5],
}

pub fn elem_sym(sides: &SideLengths5) -> ElemSym {
    let x = sides.a.map(|v| v * v);
    let e = elem_values5(&x);
    debug_assert!({
        let r = elem_relations_residuals(sides, &ElemSym { e });
        r.iter().all(|&v| v <= 1e-10)
    });
    ElemSym { e }
}

/// Relative residuals of the five bridge relations between (p,q,P,Q,S) and
/// e_1..e_5: q+Q = e1, S+p²+qQ = e2, qS+p²Q+P² = e3, p²S+P²q = e4, (pP)² = e5.
pub fn elem_relations_residuals(sides: &SideLengths5, e: &ElemSym) -> [f64; 5] {
    let d = derived_params(sides);
    let (p, pp, q, qq, s) = (d.p, d.big_p, d.q, d.big_q, d.s);
    let lhs = [
        q + qq,
        s + p * p + q * qq,
        q * s + p * p * qq + pp * pp,
        p * p * s + pp * pp * q,
        (p * pp) * (p * pp),
    ];
    core::array::from_fn(|k| {
        let scale = lhs[k].abs().max(e.e[k].abs()).max(f64::MIN_POSITIVE);
        (lhs[k] - e.e[k]).abs() / scale
    })
}

/// Triangle area by Heron in the squared form
/// (4Δ)² = 2[(ab)²+(bc)²+(ca)²] - (a⁴+b⁴+c⁴).
pub fn heron_area(a: f64, b: f64, c: f64) -> Result<f64, CyclicError> {
    let h2 = heron_squared(a * a, b * b, c * c);
    let scale = (a * a + b * b + c * c).powi(2);
    if h2 < -1e-12 * scale {
        return Err(CyclicError::NotATriangle);
    }
    Ok(fp::sqrt(h2.max(0.0)) / 4.0)
}

/// H²(x, y, z) = 2(xy + yz + zx) - (x² + y² + z²) at squared sides.
pub fn heron_squared(x: f64, y: f64, z: f64) -> f64 {
    2.0 * (x * y + y * z + z * x) - (x * x + y * y + z * z)
}

/// Brahmagupta's B²(x,y,z,w) at squared sides:
/// 2Σ pairwise products - Σ squares + 8·√(xyzw) (the 8abcd term).
pub fn brahmagupta_squared(x: f64, y: f64, z: f64, w: f64) -> f64 {
    let sum_sq = x * x + y * y + z * z + w * w;
    let pairs = x * y + x * z + x * w + y * z + y * w + z * w;
    2.0 * pairs - sum_sq + 8.0 * fp::sqrt(x * y * z * w)
}

/// Metric data of the three cyclic quadrilaterals sharing side lengths
/// a, b, c, d: diagonals e, f, g, area, circumradius, semiperimeter.
#[derive(Clone, Copy, Debug)]
pub struct QuadMetrics {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub area: f64,
    pub circumradius: f64,
    pub semiperimeter: f64,
}

/// Diagonals from the Ptolemy products, area by Brahmagupta, circumradius by
/// the Parameshvara formula. Nonnegative sides, each strictly below the sum
/// of the other three.
pub fn quad_metrics(a: f64, b: f64, c: f64, d: f64) -> Result<QuadMetrics, CyclicError> {
    if [a, b, c, d].iter().any(|&x| !x.is_finite() || x < 0.0) {
        return Err(CyclicError::InvalidSides);
    }
    let s = (a + b + c + d) / 2.0;
    let m = [s - a, s - b, s - c, s - d];
    if m.iter().any(|&v| v <= 0.0) {
        return Err(CyclicError::NoCyclicQuad);
    }
    let ab_cd = a * b + c * d;
    let ac_bd = a * c + b * d;
    let ad_bc = a * d + b * c;
    if ab_cd == 0.0 || ac_bd == 0.0 || ad_bc == 0.0 {
        return Err(CyclicError::NoCyclicQuad);
    }
    let e = fp::sqrt(ad_bc * ac_bd / ab_cd);
    let f = fp::sqrt(ab_cd * ac_bd / ad_bc);
    let g = fp::sqrt(ab_cd * ad_bc / ac_bd);
    let prod = m[0] * m[1] * m[2] * m[3];
    let area = fp::sqrt(prod);
    let circumradius = fp::sqrt(ab_cd * ac_bd * ad_bc / prod) / 4.0;
    Ok(QuadMetrics {
        e,
        f,
        g,
        area,
        circumradius,
        semiperimeter: s,
    })
}

/// Relative residuals of all Lemma-6.2 relations at the computed metrics:
/// 4AR = (ab+cd)e = (ad+bc)f = (ac+bd)g = efg, the three Ptolemy products,
/// (4AR)² as the triple product, the squared-diagonal forms, the radius
/// formula, and Brahmagupta.
pub fn quad_relation_residuals(a: f64, b: f64, c: f64, d: f64) -> Result<Vec<f64>, CyclicError> {
    let qm = quad_metrics(a, b, c, d)?;
    let s = qm.semiperimeter;
    let four_ar = 4.0 * qm.area * qm.circumradius;
    let rel = |lhs: f64, rhs: f64| {
        let sc = lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE);
        (lhs - rhs).abs() / sc
    };
    let mut out = Vec::new();
    // a) three 4AR products
    out.push(rel(four_ar, (a * b + c * d) * qm.e));
    out.push(rel(four_ar, (a * d + b * c) * qm.f));
    out.push(rel(four_ar, (a * c + b * d) * qm.g));
    // b) 4AR = efg
    out.push(rel(four_ar, qm.e * qm.f * qm.g));
    // c) Ptolemy products
    out.push(rel(qm.e * qm.f, a * c + b * d));
    out.push(rel(qm.f * qm.g, a * b + c * d));
    out.push(rel(qm.e * qm.g, a * d + b * c));
    // d) (4AR)² = (ab+cd)(ac+bd)(ad+bc)
    out.push(rel(
        four_ar * four_ar,
        (a * b + c * d) * (a * c + b * d) * (a * d + b * c),
    ));
    // e) squared diagonals
    out.push(rel(qm.e * qm.e, (a * d + b * c) * (a * c + b * d) / (a * b + c * d)));
    out.push(rel(qm.f * qm.f, (a * b + c * d) * (a * c + b * d) / (a * d + b * c)));
    out.push(rel(qm.g * qm.g, (a * b + c * d) * (a * d + b * c) / (a * c + b * d)));
    // f) (4R)² formula
    out.push(rel(
        16.0 * qm.circumradius * qm.circumradius,
        (a * b + c * d) * (a * c + b * d) * (a * d + b * c)
            / ((s - a) * (s - b) * (s - c) * (s - d)),
    ));
    // g) Brahmagupta, squared-sides form vs (s-a)(s-b)(s-c)(s-d) form
    out.push(rel(
        brahmagupta_squared(a * a, b * b, c * c, d * d),
        16.0 * (s - a) * (s - b) * (s - c) * (s - d),
    ));
    Ok(out)
}

// ---------------------------------------------------------------------------
// circumradius solving
// ---------------------------------------------------------------------------

fn half_angle_sum(r: f64, sides: &[f64]) -> f64 {
    sides
        .iter()
        .map(|&a| 2.0 * fp::asin((a / (2.0 * r)).min(1.0)))
        .sum()
}

const BISECT_MAX_ITERS: usize = 200;

/// Circumradius of the convex cyclic polygon with the given side lengths,
/// plus whether the circumcenter lies inside the polygon.
///
/// Center inside: Σ 2·asin(a_i/2R) = 2π, decreasing in R. Center outside:
/// the largest side subtends the reflex arc, so its half-angle counts as
/// π - asin(a_max/2R); the case split is decided by the angle sum at the
/// left bracket end R = a_max/2.
pub fn solve_circumradius(sides: &[f64]) -> Result<(f64, bool), CyclicError> {
    if sides.len() < 3 || sides.iter().any(|&x| !x.is_finite() || x <= 0.0) {
        return Err(CyclicError::InvalidSides);
    }
    let perimeter: f64 = sides.iter().sum();
    let a_max = sides.iter().cloned().fold(0.0, f64::max);
    if a_max >= perimeter - a_max {
        return Err(CyclicError::NoConvexCyclicPolygon);
    }
    let r_lo = a_max / 2.0 * (1.0 + 1e-15);
    let two_pi = 2.0 * core::f64::consts::PI;

    let inside = half_angle_sum(r_lo, sides) >= two_pi;
    if inside {
        // f(R) - 2π: decreasing, positive at r_lo, negative at a_max/2 + perimeter
        let mut lo = r_lo;
        let mut hi = a_max / 2.0 + perimeter;
        for _ in 0..BISECT_MAX_ITERS {
            if hi - lo < 1e-15 * lo {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if half_angle_sum(mid, sides) >= two_pi {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok((0.5 * (lo + hi), true))
    } else {
        // h(R) = Σ_{i≠max} 2 asin(a_i/2R) - 2 asin(a_max/2R): negative at r_lo,
        // tends to 0⁺ as R → ∞ (polygon inequality), single crossing.
        let max_idx = sides
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).expect("finite"))
            .map(|(i, _)| i)
            .expect("nonempty");
        let h = |r: f64| {
            let mut acc = 0.0;
            for (i, &a) in sides.iter().enumerate() {
                let term = 2.0 * fp::asin((a / (2.0 * r)).min(1.0));
                if i == max_idx {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
            acc
        };
        let mut lo = r_lo;
        let mut hi = a_max / 2.0 + perimeter;
        let mut grow = 0;
        while h(hi) <= 0.0 {
            hi *= 2.0;
            grow += 1;
            if grow > 200 {
                return Err(CyclicError::NoConvexCyclicPolygon);
            }
        }
        for _ in 0..BISECT_MAX_ITERS {
            if hi - lo < 1e-15 * lo {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if h(mid) <= 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok((0.5 * (lo + hi), false))
    }
}

/// Central angles matching [`solve_circumradius`]'s two cases;
/// the reflex arc goes to the (first) largest side when the center is outside.
pub fn central_angles(r: f64, sides: &[f64], center_inside: bool) -> Vec<f64> {
    let max_idx = sides
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).expect("finite"))
        .map(|(i, _)| i)
        .unwrap_or(0);
    sides
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let base = 2.0 * fp::asin((a / (2.0 * r)).min(1.0));
            if !center_inside && i == max_idx {
                2.0 * core::f64::consts::PI - base
            } else {
                base
            }
        })
        .collect()
}

/// Numeric solution of a cyclic pentagon: circumradius, area, diagonals,
/// central angles (indexed like the sides), and the constructed vertices.
#[derive(Clone, Debug)]
pub struct CyclicPentagonSolution {
    pub circumradius: f64,
    pub area: f64,
    pub diagonals: [f64; 5],
    pub central_angles: [f64; 5],
    pub center_inside: bool,
    pub vertices: [Point; 5],
}

/// Construct the convex cyclic pentagon with the Fig-7 labeling: the path
/// edge {i, i+1} carries side a_{i+3}, so a_i ends up opposite vertex i and
/// d_i = |v_{i-1} v_{i+1}| is disjoint from a_i.
pub fn construct_cyclic_pentagon(
    sides: &SideLengths5,
) -> Result<CyclicPentagonSolution, CyclicError> {
    let _ = SideLengths5::new(sides.a)?;
    // edge k of the path carries side a_{(k+3) % 5}
    let path_sides: [f64; 5] = core::array::from_fn(|k| sides.a[(k + 3) % 5]);
    let (r, center_inside) = solve_circumradius(&path_sides)?;
    let path_angles = central_angles(r, &path_sides, center_inside);

    let mut ang = 0.0;
    let vertices: [Point; 5] = core::array::from_fn(|k| {
        if k > 0 {
            ang += path_angles[k - 1];
        }
        Point::new(r * fp::cos(ang), r * fp::sin(ang))
    });
    let path = PolygonPath::new(vertices.to_vec()).expect("five vertices");
    let area = polygon_area(&path);
    let diagonals: [f64; 5] = core::array::from_fn(|i| {
        vertices[(i + 4) % 5].distance(&vertices[(i + 1) % 5])
    });
    // side a_i sits on path edge (i+2) % 5
    let central: [f64; 5] = core::array::from_fn(|i| path_angles[(i + 2) % 5]);
    Ok(CyclicPentagonSolution {
        circumradius: r,
        area,
        diagonals,
        central_angles: central,
        center_inside,
        vertices,
    })
}

// ---------------------------------------------------------------------------
// residuals of the degree-7 relations and their building blocks
// ---------------------------------------------------------------------------

/// Residual of the diagonal septic (X²-q)²(PX³+SX²+PQX+P²) - p²(X³-QX-2P)².
pub fn diagonal_septic_residual(x: f64, sides: &SideLengths5) -> f64 {
    let (lhs, rhs) = diagonal_septic_sides(x, sides);
    lhs - rhs
}

/// Relative version: residual divided by max(|LHS|, |RHS|).
pub fn diagonal_septic_relative(x: f64, sides: &SideLengths5) -> f64 {
    let (lhs, rhs) = diagonal_septic_sides(x, sides);
    (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE)
}

fn diagonal_septic_sides(x: f64, sides: &SideLengths5) -> (f64, f64) {
    let d = derived_params(sides);
    let lhs = (x * x - d.q).powi(2)
        * (d.big_p * x.powi(3) + d.s * x * x + d.big_p * d.big_q * x + d.big_p * d.big_p);
    let rhs = d.p * d.p * (x.powi(3) - d.big_q * x - 2.0 * d.big_p).powi(2);
    (lhs, rhs)
}

/// Signed residuals of the cubic (6.30), quadratic (6.31) and the two
/// quartic dissection relations (6.28), (6.29) at the given X, R, A.
pub fn cubic_quadratic_quartic_residuals(
    x: f64,
    r: f64,
    area: f64,
    sides: &SideLengths5,
) -> [f64; 4] {
    let d = derived_params(sides);
    let four_ar = 4.0 * area * r;
    let cubic_rhs = d.big_p * x.powi(3) + d.s * x * x + d.big_p * d.big_q * x + d.big_p * d.big_p;
    let r630 = (four_ar - d.p * x).powi(2) - cubic_rhs;
    let r631 = (x * x - d.q) * four_ar - d.p * ((d.big_q - d.q) * x + 2.0 * d.big_p);
    let r628 = (4.0 * d.p * d.p - (x * x - d.q).powi(2)) * r * r - d.p * d.p * x * x;
    let r629 = (4.0 * (d.s + 2.0 * d.big_p * x) - (x * x - d.big_q).powi(2)) * r * r - cubic_rhs;
    [r630, r631, r628, r629]
}

/// Relative magnitudes for the four dissection residuals.
pub fn cubic_quadratic_quartic_relative(
    x: f64,
    r: f64,
    area: f64,
    sides: &SideLengths5,
) -> [f64; 4] {
    let d = derived_params(sides);
    let four_ar = 4.0 * area * r;
    let cubic_rhs = d.big_p * x.powi(3) + d.s * x * x + d.big_p * d.big_q * x + d.big_p * d.big_p;
    let res = cubic_quadratic_quartic_residuals(x, r, area, sides);
    let scales = [
        (four_ar - d.p * x).powi(2).abs().max(cubic_rhs.abs()),
        ((x * x - d.q) * four_ar).abs().max((d.p * ((d.big_q - d.q) * x + 2.0 * d.big_p)).abs()),
        ((4.0 * d.p * d.p - (x * x - d.q).powi(2)) * r * r)
            .abs()
            .max((d.p * d.p * x * x).abs()),
        ((4.0 * (d.s + 2.0 * d.big_p * x) - (x * x - d.big_q).powi(2)) * r * r)
            .abs()
            .max(cubic_rhs.abs()),
    ];
    core::array::from_fn(|k| res[k].abs() / scales[k].max(f64::MIN_POSITIVE))
}

/// Residual of the area relation in X: [(4A)² - (H²+B²)]² - 4H²B², with
/// H² = 4p² - (X²-q)² and B² = 4(S+2PX) - (X²-Q)².
pub fn area_poly_in_x_residual(x: f64, area: f64, sides: &SideLengths5) -> f64 {
    let (value, _) = area_poly_in_x_parts(x, area, sides);
    value
}

pub fn area_poly_in_x_relative(x: f64, area: f64, sides: &SideLengths5) -> f64 {
    let (value, scale) = area_poly_in_x_parts(x, area, sides);
    value.abs() / scale.max(f64::MIN_POSITIVE)
}

fn area_poly_in_x_parts(x: f64, area: f64, sides: &SideLengths5) -> (f64, f64) {
    let d = derived_params(sides);
    let h2 = 4.0 * d.p * d.p - (x * x - d.q).powi(2);
    let b2 = 4.0 * (d.s + 2.0 * d.big_p * x) - (x * x - d.big_q).powi(2);
    let y = 16.0 * area * area;
    let lhs = (y - (h2 + b2)).powi(2);
    let rhs = 4.0 * h2 * b2;
    (lhs - rhs, lhs.abs().max(rhs.abs()))
}

// ---------------------------------------------------------------------------
// compiled coefficient tables for the degree-7 polynomials
// ---------------------------------------------------------------------------

/// A polynomial in one main variable whose coefficients are integer
/// combinations of e-monomials, compiled for fast repeated evaluation.
/// Produced from the exact derivation output; keeps the exact terms too.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    /// exact terms per main-variable degree: (coefficient, e-exponents)
    exact: Vec<Vec<(BigInt, [u16; 5])>>,
    /// the same terms with f64 coefficients
    compiled: Vec<Vec<(f64, [u16; 5])>>,
}

impl CoeffTable {
    /// `poly` must live in an alphabet with the main variable in slot 0
    /// followed by e1..e5.
    pub fn from_poly(poly: &MultiPoly) -> Self {
        assert_eq!(poly.vars().len(), 6, "main variable plus e1..e5");
        let deg = poly.degree_in(0) as usize;
        let mut exact: Vec<Vec<(BigInt, [u16; 5])>> = vec![Vec::new(); deg + 1];
        for (m, c) in poly.terms() {
            let k = m.exp(0) as usize;
            let mut e = [0u16; 5];
            e.copy_from_slice(&m.as_slice()[1..]);
            exact[k].push((c.clone(), e));
        }
        let compiled = exact
            .iter()
            .map(|terms| {
                terms
                    .iter()
                    .map(|(c, e)| (c.to_f64().unwrap_or(f64::NAN), *e))
                    .collect()
            })
            .collect();
        Self { exact, compiled }
    }

    pub fn degree(&self) -> usize {
        self.exact.len() - 1
    }

    /// Coefficient values c_k(e) with their absolute-term sums.
    fn coeff_values(&self, e: &[f64; 5]) -> Vec<(f64, f64)> {
        self.compiled
            .iter()
            .map(|terms| {
                // Neumaier-compensated accumulation of the term values
                let mut sum = 0.0f64;
                let mut comp = 0.0f64;
                let mut abs = 0.0f64;
                for (c, exps) in terms {
                    let mut t = *c;
                    for (i, &k) in exps.iter().enumerate() {
                        t *= e[i].powi(k as i32);
                    }
                    let new = sum + t;
                    if sum.abs() >= t.abs() {
                        comp += (sum - new) + t;
                    } else {
                        comp += (t - new) + sum;
                    }
                    sum = new;
                    abs += t.abs();
                }
                (sum + comp, abs)
            })
            .collect()
    }

    /// Evaluate at the main variable `y`, returning the value and the
    /// balanced-Horner magnitude scale (Σ |c_k||y|^k plus rounding slack).
    pub fn eval_with_scale(&self, y: f64, e: &[f64; 5]) -> (f64, f64) {
        let coeffs = self.coeff_values(e);
        // compensated Horner over y
        let n = coeffs.len();
        let mut s = coeffs[n - 1].0;
        let mut err = 0.0f64;
        let mut scale = coeffs[n - 1].1;
        for k in (0..n - 1).rev() {
            let (p, pe) = two_prod(s, y);
            let (snew, se) = two_sum(p, coeffs[k].0);
            err = err * y + (pe + se);
            s = snew;
            scale = scale * y.abs() + coeffs[k].1;
        }
        (s + err, scale)
    }

    /// Relative residual |P(y)| / scale.
    pub fn relative_residual(&self, y: f64, e: &[f64; 5]) -> f64 {
        let (v, scale) = self.eval_with_scale(y, e);
        v.abs() / scale.max(f64::MIN_POSITIVE)
    }

    /// Exact coefficient values at rational e, ascending degree.
    pub fn exact_coeffs(&self, e: &[BigRational; 5]) -> Vec<BigRational> {
        self.exact
            .iter()
            .map(|terms| {
                let mut acc = BigRational::zero();
                for (c, exps) in terms {
                    let mut t = BigRational::from(c.clone());
                    for (i, &k) in exps.iter().enumerate() {
                        for _ in 0..k {
                            t *= &e[i];
                        }
                    }
                    acc += t;
                }
                acc
            })
            .collect()
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, fp::fma(a, b, -p))
}

/// Evaluate a compiled degree-7 table at `value` (Y, Z, or R² according to
/// the table) for the given elementary symmetric functions.
pub fn poly_eval(table: &CoeffTable, value: f64, e: &ElemSym) -> f64 {
    table.eval_with_scale(value, &e.e).0
}

pub fn poly_relative_residual(table: &CoeffTable, value: f64, e: &ElemSym) -> f64 {
    table.relative_residual(value, &e.e)
}

/// All real roots (with multiplicity) of a compiled table at exact rational
/// elementary values; `e` entries are converted exactly from f64.
pub fn table_real_roots(table: &CoeffTable, e: &ElemSym) -> Vec<(f64, u32)> {
    let ex: [BigRational; 5] = core::array::from_fn(|i| {
        BigRational::from_float(e.e[i]).expect("finite elementary values")
    });
    let coeffs = table.exact_coeffs(&ex);
    let f = crate::roots::QPoly::new(coeffs);
    crate::roots::real_roots_with_multiplicity(&f)
}

/// Index of the root nearest to a target value (oracle flagging).
pub fn flag_nearest_root(roots: &[(f64, u32)], target: f64) -> Option<usize> {
    roots
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            (a.0 - target)
                .abs()
                .partial_cmp(&(b.0 - target).abs())
                .expect("finite")
        })
        .map(|(i, _)| i)
}

// ---------------------------------------------------------------------------
// the rational area expression (Gauss + degree-7 area polynomial combined)
// ---------------------------------------------------------------------------

/// Reduction of T^n modulo T² = c1'·T + c2': T^n ≡ alpha_n·T + beta_n.
fn reduce_powers(c1p: f64, c2p: f64, up_to: usize) -> (Vec<f64>, Vec<f64>) {
    let mut alpha = vec![0.0; up_to + 1];
    let mut beta = vec![0.0; up_to + 1];
    beta[0] = 1.0;
    if up_to >= 1 {
        alpha[1] = 1.0;
    }
    for n in 1..up_to {
        alpha[n + 1] = c1p * alpha[n] + beta[n];
        beta[n + 1] = c2p * alpha[n];
    }
    (alpha, beta)
}

/// Area of a cyclic pentagon as a rational function of the vertex-triangle
/// areas and the squared side lengths: the degree-7 polynomial in Y = (4A)²
/// is reduced modulo the Gauss side relation (4A)² = c1'·(4A) + c2' with
/// c1' = 4c1, c2' = -16c2, leaving a linear equation for 4A.
pub fn area_rational(
    sides: &SideLengths5,
    t: &VertexTriangleAreas,
    robbins: &CoeffTable,
) -> Result<f64, CyclicError> {
    assert_eq!(t.len(), 5, "pentagon vertex areas expected");
    let c1: f64 = t.t.iter().sum();
    let c2: f64 = (0..5).map(|i| t.t[i] * t.t[(i + 1) % 5]).sum();
    // A² - c1·A + c2 = 0 scaled by 16: (4A)² = 4c1·(4A) - 16c2
    let c1p = 4.0 * c1;
    let c2p = -16.0 * c2;
    let (alpha, beta) = reduce_powers(c1p, c2p, 14);
    let e = elem_sym(sides);
    let coeffs = robbins.coeff_values(&e.e);
    debug_assert_eq!(coeffs.len(), 8);
    let mut d_lin = 0.0;
    let mut n_const = 0.0;
    for (k, (c, _)) in coeffs.iter().enumerate() {
        // coefficient of Y^k contributes c·T^{2k}
        d_lin += c * alpha[2 * k];
        n_const += c * beta[2 * k];
    }
    const TOL: f64 = 1e-12;
    if d_lin.abs() < TOL * n_const.abs() {
        return Err(CyclicError::ZeroDenominator);
    }
    Ok(-n_const / d_lin / 4.0)
}

// ---------------------------------------------------------------------------
// Δ_k
// ---------------------------------------------------------------------------

/// The count Δ_k of (2k+1)-gons (convex or nonconvex) inscribed in a circle:
/// ½[(2k+1)·C(2k,k) - 2^{2k}] = Σ_{i=0}^{k-1} (k-i)·C(2k+1,i).
/// Both closed forms are evaluated exactly and must agree.
pub fn delta_k(k: u32) -> Result<BigInt, CyclicError> {
    assert!(k >= 1, "delta_k needs k >= 1");
    let two_k = BigInt::from(2 * k);
    let k_big = BigInt::from(k);
    let first_num =
        BigInt::from(2 * k + 1) * binomial(two_k, k_big) - BigInt::from(2).pow(2 * k);
    let (first, rem) = first_num.div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(CyclicError::FormMismatch);
    }
    let mut second = BigInt::zero();
    for i in 0..k {
        second += BigInt::from(k - i) * binomial(BigInt::from(2 * k + 1), BigInt::from(i));
    }
    if first != second {
        return Err(CyclicError::FormMismatch);
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PHI: f64 = 1.618033988749894848;

    #[test]
    fn heron_basics() {
        assert!((heron_area(3.0, 4.0, 5.0).unwrap() - 6.0).abs() < 1e-12);
        assert!((heron_area(1.0, 1.0, 1.0).unwrap() - 3f64.sqrt() / 4.0).abs() < 1e-12);
        assert_eq!(heron_area(1.0, 2.0, 3.0).unwrap(), 0.0);
        assert!(matches!(
            heron_area(1.0, 2.0, 3.5),
            Err(CyclicError::NotATriangle)
        ));
    }

    #[test]
    fn quad_metrics_square_and_collapse() {
        let qm = quad_metrics(1.0, 1.0, 1.0, 1.0).unwrap();
        assert!((qm.e - 2f64.sqrt()).abs() < 1e-14);
        assert!((qm.f - 2f64.sqrt()).abs() < 1e-14);
        assert!((qm.area - 1.0).abs() < 1e-14);
        assert!((qm.circumradius - 2f64.sqrt() / 2.0).abs() < 1e-14);
        // d = 0 collapse: e = c, f = a, g = b
        let qm = quad_metrics(1.0, 1.0, 1.0, 0.0).unwrap();
        assert!((qm.e - 1.0).abs() < 1e-14);
        assert!((qm.f - 1.0).abs() < 1e-14);
        assert!((qm.g - 1.0).abs() < 1e-14);
        assert!((qm.area - 3f64.sqrt() / 4.0).abs() < 1e-14);
    }

    #[test]
    fn quad_metrics_1223() {
        // s = 4, (s-a)(s-b)(s-c)(s-d) = 3·2·2·1 = 12
        let qm = quad_metrics(1.0, 2.0, 2.0, 3.0).unwrap();
        assert!((qm.area - 12f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn quad_rejects_violation() {
        assert!(matches!(
            quad_metrics(5.0, 1.0, 1.0, 1.0),
            Err(CyclicError::NoCyclicQuad)
        ));
    }

    #[test]
    fn lemma_relations_hold() {
        for (a, b, c, d) in [(1.0, 2.0, 2.0, 3.0), (0.7, 1.3, 0.9, 1.1), (2.0, 2.0, 3.0, 1.5)] {
            let res = quad_relation_residuals(a, b, c, d).unwrap();
            for (k, r) in res.iter().enumerate() {
                assert!(*r < 1e-12, "relation {k} residual {r} at ({a},{b},{c},{d})");
            }
        }
    }

    #[test]
    fn regular_pentagon_radius() {
        let sides = [1.0; 5];
        let (r, inside) = solve_circumradius(&sides).unwrap();
        assert!(inside);
        assert!((r - 0.8506508083520399).abs() < 1e-13, "r = {r}");
    }

    #[test]
    fn unit_square_radius() {
        let (r, inside) = solve_circumradius(&[1.0; 4]).unwrap();
        assert!(inside);
        assert!((r - 2f64.sqrt() / 2.0).abs() < 1e-13);
    }

    #[test]
    fn long_side_center_outside() {
        // threshold for four unit sides: a_max = 1/sin(π/8) ≈ 2.6131
        let (r, inside) = solve_circumradius(&[1.0, 1.0, 1.0, 1.0, 2.8]).unwrap();
        assert!(!inside);
        // chords reproduce at the solved radius
        let angles = central_angles(r, &[1.0, 1.0, 1.0, 1.0, 2.8], inside);
        let total: f64 = angles.iter().sum();
        assert!((total - 2.0 * core::f64::consts::PI).abs() < 1e-12);
        for (&a, &th) in [1.0, 1.0, 1.0, 1.0, 2.8].iter().zip(&angles) {
            assert!((2.0 * r * fp::sin(th / 2.0) - a).abs() < 1e-12 * a);
        }
        // slightly long side: center still inside
        let (_, inside) = solve_circumradius(&[1.0, 1.0, 1.0, 1.0, 1.9]).unwrap();
        assert!(inside);
    }

    #[test]
    fn pentagon_construction_regular() {
        let sides = SideLengths5::new([1.0; 5]).unwrap();
        let sol = construct_cyclic_pentagon(&sides).unwrap();
        assert!((sol.area - 1.7204774005889670).abs() < 1e-12);
        for d in sol.diagonals {
            assert!((d - PHI).abs() < 1e-12);
        }
        let sum: f64 = sol.central_angles.iter().sum();
        assert!((sum - 2.0 * core::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn pentagon_similarity_scaling() {
        let unit = construct_cyclic_pentagon(&SideLengths5::new([1.0; 5]).unwrap()).unwrap();
        let big = construct_cyclic_pentagon(&SideLengths5::new([2.0; 5]).unwrap()).unwrap();
        assert!((big.area - 4.0 * unit.area).abs() < 1e-10);
        for i in 0..5 {
            assert!((big.diagonals[i] - 2.0 * unit.diagonals[i]).abs() < 1e-10);
        }
    }

    #[test]
    fn pentagon_sides_reproduced() {
        let sides = SideLengths5::new([0.9, 0.7, 1.1, 0.8, 1.0]).unwrap();
        let sol = construct_cyclic_pentagon(&sides).unwrap();
        // edge {i, i+1} should have length a_{(i+3) % 5}
        for i in 0..5 {
            let got = sol.vertices[i].distance(&sol.vertices[(i + 1) % 5]);
            let want = sides.a[(i + 3) % 5];
            assert!((got - want).abs() < 1e-12 * want, "side {i}: {got} vs {want}");
        }
        // d_i septic vanishes at the matching diagonal (relative residual)
        for i in 0..5 {
            let rel = diagonal_septic_relative(sol.diagonals[i], &sides.rotated(i));
            assert!(rel < 1e-10, "diagonal {i} relative residual {rel}");
        }
    }

    #[test]
    fn septic_at_phi_for_regular() {
        let sides = SideLengths5::new([1.0; 5]).unwrap();
        let res = diagonal_septic_residual(PHI, &sides);
        assert!(res.abs() < 1e-9, "residual {res}");
    }

    #[test]
    fn septic_collapse_to_quad_diagonal() {
        // a_4 = 0: the diagonal relation of the quadrilateral (a0, a1, a2, a3):
        // X = e from e² = (ad+bc)(ac+bd)/(ab+cd) with (a,b,c,d) = (a0,a1,a2,a3)
        let (a0, a1, a2, a3) = (0.9f64, 1.2, 0.8, 1.1);
        let x = ((a0 * a3 + a1 * a2) * (a0 * a2 + a1 * a3) / (a0 * a1 + a2 * a3)).sqrt();
        let sides = SideLengths5::degenerate([a0, a1, a2, a3, 0.0]);
        let rel = diagonal_septic_relative(x, &sides);
        assert!(rel < 1e-12, "relative {rel}");
    }

    #[test]
    fn dissection_residuals_at_oracle() {
        let sides = SideLengths5::new([1.0; 5]).unwrap();
        let sol = construct_cyclic_pentagon(&sides).unwrap();
        let rel =
            cubic_quadratic_quartic_relative(sol.diagonals[0], sol.circumradius, sol.area, &sides);
        for (k, r) in rel.iter().enumerate() {
            assert!(*r < 1e-10, "relation {k}: {r}");
        }
        // direct substitution X=R=A=0 with P > 0: r630 = -P²
        let d = derived_params(&sides);
        let res = cubic_quadratic_quartic_residuals(0.0, 0.0, 0.0, &sides);
        assert_eq!(res[0], -d.big_p * d.big_p);
    }

    #[test]
    fn area_poly_x_identity() {
        // A = (H+B)/4 constructed from any X satisfies the relation exactly
        let sides = SideLengths5::new([0.8, 0.9, 1.0, 1.1, 0.7]).unwrap();
        let d = derived_params(&sides);
        let x = 1.4;
        let h2 = 4.0 * d.p * d.p - (x * x - d.q).powi(2);
        let b2 = 4.0 * (d.s + 2.0 * d.big_p * x) - (x * x - d.big_q).powi(2);
        assert!(h2 > 0.0 && b2 > 0.0);
        let a = (h2.sqrt() + b2.sqrt()) / 4.0;
        let rel = area_poly_in_x_relative(x, a, &sides);
        assert!(rel < 1e-13, "relative {rel}");
    }

    #[test]
    fn elem_sym_unit_sides() {
        let e = elem_sym(&SideLengths5::new([1.0; 5]).unwrap());
        assert_eq!(e.e, [5.0, 10.0, 10.0, 5.0, 1.0]);
        let d = derived_params(&SideLengths5::new([1.0; 5]).unwrap());
        assert_eq!(
            (d.p, d.big_p, d.q, d.big_q, d.s),
            (1.0, 1.0, 2.0, 3.0, 3.0)
        );
    }

    #[test]
    fn elem_sym_degenerate_side() {
        let s = SideLengths5::degenerate([1.0, 1.0, 1.0, 1.0, 0.0]);
        let e = ElemSym {
            e: elem_values5(&s.a.map(|v| v * v)),
        };
        assert_eq!(e.e[4], 0.0);
        let d = derived_params(&s);
        assert_eq!(d.big_p, 0.0);
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta_k(1).unwrap(), BigInt::from(1));
        assert_eq!(delta_k(2).unwrap(), BigInt::from(7));
        assert_eq!(delta_k(3).unwrap(), BigInt::from(38));
        for k in 1..=10 {
            assert!(delta_k(k).is_ok());
        }
    }

    #[test]
    fn invalid_sides_rejected() {
        assert!(SideLengths5::new([1.0, 1.0, 1.0, 1.0, 4.5]).is_err());
        assert!(SideLengths5::new([1.0, -1.0, 1.0, 1.0, 1.0]).is_err());
        assert!(matches!(
            solve_circumradius(&[1.0, 1.0, 1.0, 1.0, 5.0]),
            Err(CyclicError::NoConvexCyclicPolygon)
        ));
    }
}
