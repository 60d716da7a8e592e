//! Real-root isolation and refinement for univariate polynomials with exact
//! rational coefficients: Yun square-free decomposition, Sturm chains,
//! bisection isolation, and refinement to double precision.
//!
//! Used to enumerate the real roots (with multiplicity) of the degree-7
//! area/radius polynomials at concrete side lengths.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense univariate polynomial over the rationals, ascending coefficients,
/// canonical (no trailing zeros).
#[derive(Clone, Debug, PartialEq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from(BigInt::from(k)))
            .collect();
        QPoly::new(coeffs)
    }

    /// Make monic (nonzero input).
    fn monic(&self) -> QPoly {
        let lc = self.coeffs.last().expect("nonzero").clone();
        QPoly::new(self.coeffs.iter().map(|c| c / lc.clone()).collect())
    }

    /// Euclidean remainder.
    fn rem(&self, div: &QPoly) -> QPoly {
        let dd = div.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        let lc = &div.coeffs[dd];
        while r.len() > dd {
            let k = r.len() - 1;
            let q = &r[k] / lc;
            if !q.is_zero() {
                for j in 0..=dd {
                    let delta = &q * &div.coeffs[j];
                    r[k - dd + j] -= delta;
                }
            }
            r.pop();
        }
        QPoly::new(r)
    }

    fn quot(&self, div: &QPoly) -> QPoly {
        let dd = div.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        let lc = &div.coeffs[dd];
        let mut q = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1;
            let qc = &r[k] / lc;
            if !qc.is_zero() {
                for j in 0..=dd {
                    let delta = &qc * &div.coeffs[j];
                    r[k - dd + j] -= delta;
                }
            }
            q[k - dd] = qc;
            r.pop();
        }
        QPoly::new(q)
    }

    fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b.monic());
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }
}

/// Yun's square-free decomposition: returns `(g_i, i)` with
/// `f = c · Π g_i^i`, each `g_i` square-free, pairwise coprime.
pub fn square_free_decomposition(f: &QPoly) -> Vec<(QPoly, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    if a0.degree() == Some(0) {
        out.push((f.monic(), 1));
        return out;
    }
    let mut b = f.quot(&a0);
    let mut c = fp.quot(&a0);
    let mut i = 1u32;
    loop {
        let d = {
            let bp = b.derivative();
            QPoly::new(
                c.coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, v)| {
                        let sub = bp.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero);
                        v - sub
                    })
                    .chain(
                        bp.coeffs
                            .iter()
                            .enumerate()
                            .skip(c.coeffs.len())
                            .map(|(_, v)| -v.clone()),
                    )
                    .collect(),
            )
        };
        let g = b.gcd(&d);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), i));
        }
        if g.is_zero() {
            break;
        }
        b = b.quot(&g);
        c = d.quot(&g);
        if b.degree() == Some(0) {
            break;
        }
        i += 1;
    }
    out
}

/// Sturm chain of a square-free polynomial.
fn sturm_chain(f: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].degree() == Some(0) {
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        let neg = QPoly::new(r.coeffs.iter().map(|c| -c.clone()).collect());
        chain.push(neg);
    }
    chain
}

fn sign_variations(chain: &[QPoly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut var = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                var += 1;
            }
            last = s;
        }
    }
    var
}

/// Cauchy root bound: all real roots lie in [-M, M].
fn root_bound(f: &QPoly) -> BigRational {
    let lc = f.coeffs.last().expect("nonzero").abs();
    let mut max = BigRational::zero();
    for c in &f.coeffs[..f.coeffs.len() - 1] {
        let ratio = c.abs() / lc.clone();
        if ratio > max {
            max = ratio;
        }
    }
    max + BigRational::one()
}

/// Isolating intervals `(lo, hi]` for every real root of a square-free
/// polynomial, by Sturm-count bisection.
pub fn isolate_real_roots(f: &QPoly) -> Vec<(BigRational, BigRational)> {
    let mut out = Vec::new();
    let deg = match f.degree() {
        None | Some(0) => return out,
        Some(d) => d,
    };
    let _ = deg;
    let chain = sturm_chain(f);
    let bound = root_bound(f);
    let lo = -bound.clone();
    let hi = bound;
    let total = sign_variations(&chain, &lo) - sign_variations(&chain, &hi);
    if total == 0 {
        return out;
    }
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (a.clone() + b.clone()) / BigRational::from(BigInt::from(2));
        let va = sign_variations(&chain, &a);
        let vm = sign_variations(&chain, &mid);
        let vb = sign_variations(&chain, &b);
        stack.push((a, mid.clone(), va - vm));
        stack.push((mid, b, vm - vb));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Shrink an isolating interval `(lo, hi]` by bisection, then return the
/// midpoint as f64. The interval is open at `lo`: `f(lo)` may vanish for the
/// *neighboring* root, so the sign reference is taken at `hi`.
pub fn refine_root(f: &QPoly, mut lo: BigRational, mut hi: BigRational, bits: u32) -> f64 {
    let f_hi = f.eval(&hi);
    if f_hi.is_zero() {
        return hi.to_f64().unwrap_or(f64::NAN);
    }
    let sign_hi = f_hi.is_positive();
    for _ in 0..bits {
        let mid = (lo.clone() + hi.clone()) / BigRational::from(BigInt::from(2));
        let v = f.eval(&mid);
        if v.is_zero() {
            return mid.to_f64().unwrap_or(f64::NAN);
        }
        if v.is_positive() == sign_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mid = (lo + hi) / BigRational::from(BigInt::from(2));
    mid.to_f64().unwrap_or(f64::NAN)
}

/// All real roots of `f` with multiplicities, refined to f64, ascending.
pub fn real_roots_with_multiplicity(f: &QPoly) -> Vec<(f64, u32)> {
    let mut out: Vec<(f64, u32)> = Vec::new();
    for (g, mult) in square_free_decomposition(f) {
        for (lo, hi) in isolate_real_roots(&g) {
            let r = refine_root(&g, lo, hi, 80);
            out.push((r, mult));
        }
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite roots"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(coeffs: &[i64]) -> QPoly {
        QPoly::from_bigints(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn quadratic_roots() {
        // x² - 2: roots ±√2
        let f = qp(&[-2, 0, 1]);
        let roots = real_roots_with_multiplicity(&f);
        assert_eq!(roots.len(), 2);
        assert!((roots[0].0 + core::f64::consts::SQRT_2).abs() < 1e-14);
        assert!((roots[1].0 - core::f64::consts::SQRT_2).abs() < 1e-14);
        assert_eq!(roots[0].1, 1);
    }

    #[test]
    fn multiplicities_detected() {
        // (x-1)²(x+2) = x³ - 3x + 2
        let f = qp(&[2, -3, 0, 1]);
        let roots = real_roots_with_multiplicity(&f);
        assert_eq!(roots.len(), 2);
        assert!((roots[0].0 + 2.0).abs() < 1e-13);
        assert_eq!(roots[0].1, 1);
        assert!((roots[1].0 - 1.0).abs() < 1e-13);
        assert_eq!(roots[1].1, 2);
    }

    #[test]
    fn no_real_roots() {
        // x² + 1
        let f = qp(&[1, 0, 1]);
        assert!(real_roots_with_multiplicity(&f).is_empty());
    }

    #[test]
    fn close_roots_separated() {
        // (x - 1)(x - 1.0001) scaled to integers: (10000x - 10000)(10000x - 10001)
        let f = QPoly::new(vec![
            BigRational::new(BigInt::from(10001), BigInt::from(10000)),
            BigRational::from(BigInt::from(-2)) - BigRational::new(BigInt::from(1), BigInt::from(10000)),
            BigRational::one(),
        ]);
        let roots = real_roots_with_multiplicity(&f);
        assert_eq!(roots.len(), 2);
        assert!((roots[0].0 - 1.0).abs() < 1e-12);
        assert!((roots[1].0 - 1.0001).abs() < 1e-12);
    }

    #[test]
    fn degree7_with_triple_root() {
        // x³(x-2)³(x+5) — degree 7, roots 0 (mult 3), 2 (mult 3), -5 (mult 1)
        let x3 = qp(&[0, 0, 0, 1]);
        let _ = x3;
        // expand (x-2)³ = x³ -6x² +12x -8; multiply by x³ gives coeffs shifted
        let a = qp(&[-8, 12, -6, 1]);
        let mut coeffs = vec![BigRational::zero(); 3];
        coeffs.extend(a.coeffs().iter().cloned());
        let ax3 = QPoly::new(coeffs);
        // multiply by (x+5)
        let mut c2 = vec![BigRational::zero(); ax3.coeffs().len() + 1];
        for (k, c) in ax3.coeffs().iter().enumerate() {
            c2[k] += c * BigRational::from(BigInt::from(5));
            c2[k + 1] += c.clone();
        }
        let f = QPoly::new(c2);
        let roots = real_roots_with_multiplicity(&f);
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[0], (-5.0, 1));
        assert!((roots[1].0).abs() < 1e-18);
        assert_eq!(roots[1].1, 3);
        assert!((roots[2].0 - 2.0).abs() < 1e-13);
        assert_eq!(roots[2].1, 3);
    }
}
