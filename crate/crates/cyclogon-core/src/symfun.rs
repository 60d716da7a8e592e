//! Elementary symmetric functions, partition-indexed products e_λ, and
//! conversion of symmetric polynomials in x0..x4 into the elementary basis.
//!
//! The conversion is the classical fundamental-theorem construction: strip
//! the leading term of the (symmetric) input against the matching product
//! e1^{λ1-λ2}·e2^{λ2-λ3}·…·e5^{λ5}, whose expansion is monic at that
//! monomial, and repeat. Everything stays in integer arithmetic. The result
//! is certified by exact evaluation agreement at seeded rational points.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::{Mono, MultiPoly};

/// Variable alphabet of the squared side lengths.
pub const X_VARS: &[&str] = &["x0", "x1", "x2", "x3", "x4"];
/// Variable alphabet of the elementary symmetric functions.
pub const E_VARS: &[&str] = &["e1", "e2", "e3", "e4", "e5"];

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum SymError {
    #[error("partition part {0} exceeds the number of variables (5)")]
    PartTooLarge(u8),
    #[error("partition parts must be weakly decreasing and positive")]
    NotAPartition,
    #[error("polynomial is not symmetric in x0..x4")]
    NotSymmetric,
}

/// Elementary symmetric function values e_1..e_n of the inputs, by the
/// Vieta recurrence (coefficients of Π(t + x_i)).
pub fn elem_values<T>(xs: &[T]) -> Vec<T>
where
    T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
{
    let n = xs.len();
    let mut e = vec![T::zero(); n + 1];
    e[0] = T::one();
    for (i, x) in xs.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            let bump = x.clone() * e[k - 1].clone();
            e[k] = e[k].clone() + bump;
        }
    }
    e.remove(0);
    e
}

pub fn elem_values5(xs: &[f64; 5]) -> [f64; 5] {
    let v = elem_values(xs);
    [v[0], v[1], v[2], v[3], v[4]]
}

/// An integer partition with parts ≤ 5, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u8>,
}

impl Partition {
    pub fn new(parts: Vec<u8>) -> Result<Self, SymError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(SymError::NotAPartition);
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(SymError::NotAPartition);
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|&p| p as u32).sum()
    }

    /// Conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let max = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=max)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u8)
            .collect();
        Partition { parts }
    }

    /// Exponent notation `n^{m_n} … 1^{m_1}`, e.g. `(5^2 3 1^3)`.
    pub fn to_exponent_string(&self) -> String {
        use core::fmt::Write;
        if self.parts.is_empty() {
            return String::from("()");
        }
        let mut counts: BTreeMap<u8, usize> = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        let mut s = String::from("(");
        let mut first = true;
        for (&p, &m) in counts.iter().rev() {
            if !first {
                s.push(' ');
            }
            first = false;
            if m == 1 {
                let _ = write!(s, "{p}");
            } else {
                let _ = write!(s, "{p}^{m}");
            }
        }
        s.push(')');
        s
    }

    /// Parse the exponent notation produced by [`Self::to_exponent_string`].
    pub fn from_exponent_string(s: &str) -> Result<Self, SymError> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in inner.split_whitespace() {
            let (base, mult) = match tok.split_once('^') {
                Some((b, m)) => (
                    b.parse::<u8>().map_err(|_| SymError::NotAPartition)?,
                    m.parse::<usize>().map_err(|_| SymError::NotAPartition)?,
                ),
                None => (tok.parse::<u8>().map_err(|_| SymError::NotAPartition)?, 1),
            };
            for _ in 0..mult {
                parts.push(base);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_exponent_string())
    }
}

/// e_λ = e_{λ1} e_{λ2} … evaluated at given e_1..e_5 values.
pub fn e_lambda(partition: &Partition, e: &[f64; 5]) -> Result<f64, SymError> {
    let mut acc = 1.0;
    for &p in partition.parts() {
        if p as usize > 5 {
            return Err(SymError::PartTooLarge(p));
        }
        acc *= e[p as usize - 1];
    }
    Ok(acc)
}

/// A polynomial known to be symmetric in x0..x4 (verified at construction).
#[derive(Clone, Debug)]
pub struct SymPoly {
    poly: MultiPoly,
}

fn permute_vars(p: &MultiPoly, perm: &[usize; 5]) -> MultiPoly {
    let terms = p.terms().map(|(m, c)| {
        let mut exps = vec![0u16; 5];
        for (i, &e) in m.as_slice().iter().enumerate() {
            exps[perm[i]] = e;
        }
        (exps, c.clone())
    });
    MultiPoly::from_terms(X_VARS, terms.collect::<Vec<_>>())
}

pub fn is_symmetric(p: &MultiPoly) -> bool {
    // the transposition (01) and the 5-cycle generate S5
    let swapped = permute_vars(p, &[1, 0, 2, 3, 4]);
    let rotated = permute_vars(p, &[1, 2, 3, 4, 0]);
    swapped == *p && rotated == *p
}

impl SymPoly {
    pub fn new(poly: MultiPoly) -> Result<Self, SymError> {
        assert_eq!(poly.vars(), X_VARS, "SymPoly lives in x0..x4");
        if !is_symmetric(&poly) {
            return Err(SymError::NotSymmetric);
        }
        Ok(Self { poly })
    }

    /// Monomial symmetric function m_λ: the orbit sum of x^λ.
    pub fn monomial(lambda: &Partition) -> Result<Self, SymError> {
        if lambda.parts().len() > 5 {
            return Err(SymError::NotAPartition);
        }
        let mut exps = [0u16; 5];
        for (i, &p) in lambda.parts().iter().enumerate() {
            exps[i] = p as u16;
        }
        // distinct permutations of the exponent vector
        let mut orbit: Vec<[u16; 5]> = Vec::new();
        permutations_distinct(&mut exps.to_vec(), &mut Vec::new(), &mut orbit);
        let terms = orbit
            .into_iter()
            .map(|e| (e.to_vec(), BigInt::one()))
            .collect::<Vec<_>>();
        Ok(Self {
            poly: MultiPoly::from_terms(X_VARS, terms),
        })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }
}

fn permutations_distinct(rest: &mut Vec<u16>, prefix: &mut Vec<u16>, out: &mut Vec<[u16; 5]>) {
    if rest.is_empty() {
        let mut a = [0u16; 5];
        a.copy_from_slice(prefix);
        out.push(a);
        return;
    }
    let mut seen = Vec::new();
    for i in 0..rest.len() {
        let v = rest[i];
        if seen.contains(&v) {
            continue;
        }
        seen.push(v);
        rest.swap_remove(i);
        prefix.push(v);
        permutations_distinct(rest, prefix, out);
        prefix.pop();
        rest.push(v);
        let last = rest.len() - 1;
        rest.swap(i, last);
    }
}

/// A polynomial in the elementary basis e1..e5.
#[derive(Clone, Debug, PartialEq)]
pub struct EPoly {
    pub poly: MultiPoly,
}

impl EPoly {
    pub fn eval_f64(&self, e: &[f64; 5]) -> f64 {
        self.poly.eval_f64(e)
    }

    pub fn eval_rational(&self, e: &[BigRational; 5]) -> BigRational {
        self.poly.eval_rational(&e.to_vec())
    }

    /// Expand back into x0..x4.
    pub fn expand_in_x(&self, cache: &mut ElemCache) -> MultiPoly {
        let mut out = MultiPoly::zero(X_VARS);
        for (m, c) in self.poly.terms() {
            let mut gaps = [0u16; 5];
            gaps.copy_from_slice(m.as_slice());
            let prod = cache.product(&gaps);
            out = out.add(&prod.mul_scalar(c));
        }
        out
    }
}

/// Cache of expanded powers and products of the elementary polynomials;
/// shared across conversions because derivations reuse the same shapes.
pub struct ElemCache {
    pows: [Vec<MultiPoly>; 5],
    prods: BTreeMap<[u16; 5], MultiPoly>,
}

impl Default for ElemCache {
    fn default() -> Self {
        Self::new()
    }
}

impl ElemCache {
    pub fn new() -> Self {
        let e: [MultiPoly; 5] = core::array::from_fn(|k| elementary_poly(k + 1));
        let pows = e.map(|p| vec![MultiPoly::one(X_VARS), p]);
        Self {
            pows,
            prods: BTreeMap::new(),
        }
    }

    fn power(&mut self, k: usize, n: u16) -> MultiPoly {
        while self.pows[k].len() <= n as usize {
            let next = {
                let v = &self.pows[k];
                v.last().unwrap().mul(&v[1])
            };
            self.pows[k].push(next);
        }
        self.pows[k][n as usize].clone()
    }

    /// Expansion of e1^{g[0]}·…·e5^{g[4]} in x0..x4.
    pub fn product(&mut self, gaps: &[u16; 5]) -> MultiPoly {
        if let Some(p) = self.prods.get(gaps) {
            return p.clone();
        }
        let mut acc = MultiPoly::one(X_VARS);
        for (k, &g) in gaps.iter().enumerate() {
            if g > 0 {
                acc = acc.mul(&self.power(k, g));
            }
        }
        self.prods.insert(*gaps, acc.clone());
        acc
    }
}

/// The elementary symmetric polynomial e_k(x0..x4) expanded.
pub fn elementary_poly(k: usize) -> MultiPoly {
    assert!((1..=5).contains(&k));
    let mut terms = Vec::new();
    // subsets of {0..4} of size k
    for mask in 0u32..32 {
        if mask.count_ones() as usize == k {
            let mut exps = vec![0u16; 5];
            for i in 0..5 {
                if mask & (1 << i) != 0 {
                    exps[i] = 1;
                }
            }
            terms.push((exps, BigInt::one()));
        }
    }
    MultiPoly::from_terms(X_VARS, terms)
}

/// Convert a symmetric polynomial into the elementary basis by repeated
/// leading-term elimination. The outcome is certified by exact evaluation
/// agreement at 20 seeded rational points.
pub fn to_elementary(input: &SymPoly, cache: &mut ElemCache) -> EPoly {
    let mut rem = input.poly().clone();
    let mut out_terms: Vec<(Vec<u16>, BigInt)> = Vec::new();
    while let Some((mono, coeff)) = rem.leading() {
        let lambda = mono.as_slice().to_vec();
        debug_assert!(
            lambda.windows(2).all(|w| w[0] >= w[1]),
            "leading exponent of a symmetric polynomial must be weakly decreasing; got {lambda:?}"
        );
        let mut gaps = [0u16; 5];
        for i in 0..5 {
            let next = if i + 1 < 5 { lambda[i + 1] } else { 0 };
            gaps[i] = lambda[i] - next;
        }
        let coeff = coeff.clone();
        let prod = cache.product(&gaps);
        rem = rem.sub(&prod.mul_scalar(&coeff));
        out_terms.push((gaps.to_vec(), coeff));
        debug_assert!(
            rem.leading().map(|(m, _)| m < &Mono::from_slice(&lambda)).unwrap_or(true),
            "leading term did not decrease"
        );
    }
    let result = EPoly {
        poly: MultiPoly::from_terms(E_VARS, out_terms),
    };
    debug_assert!(verify_conversion(input, &result));
    result
}

/// Exact round-trip check: evaluating in x agrees with evaluating the e-basis
/// form at the elementary values of the same points.
pub fn verify_conversion(input: &SymPoly, output: &EPoly) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5f5_e1e5);
    for _ in 0..20 {
        let xs: [BigRational; 5] = core::array::from_fn(|_| {
            BigRational::new(
                BigInt::from(rng.gen_range(-9i32..=9)),
                BigInt::from(rng.gen_range(1i32..=4)),
            )
        });
        let direct = input.poly().eval_rational(&xs.to_vec());
        let evec = elem_values(&xs);
        let es: [BigRational; 5] = core::array::from_fn(|i| evec[i].clone());
        if output.eval_rational(&es) != direct {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elem_values_unit_and_basis() {
        assert_eq!(elem_values5(&[1.0; 5]), [5.0, 10.0, 10.0, 5.0, 1.0]);
        assert_eq!(
            elem_values5(&[1.0, 0.0, 0.0, 0.0, 0.0]),
            [1.0, 0.0, 0.0, 0.0, 0.0]
        );
    }

    #[test]
    fn elem_values_vieta() {
        // Π(t + x_i) expanded equals Σ e_k t^{5-k} at random rationals
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let xs: [BigRational; 5] = core::array::from_fn(|_| {
                BigRational::new(
                    BigInt::from(rng.gen_range(-20i32..=20)),
                    BigInt::from(rng.gen_range(1i32..=7)),
                )
            });
            let t = BigRational::new(BigInt::from(rng.gen_range(-9i32..=9)), BigInt::from(2));
            let e = elem_values(&xs);
            let mut lhs = BigRational::one();
            for x in &xs {
                lhs *= t.clone() + x.clone();
            }
            // t^5 + Σ_{k=0..4} e_{5-k}·t^k
            let mut rhs = t.clone() * t.clone() * t.clone() * t.clone() * t.clone();
            for k in 0..5 {
                let mut term = e[4 - k].clone();
                for _ in 0..k {
                    term *= t.clone();
                }
                rhs += term;
            }
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn partition_roundtrip_and_conjugate() {
        let p = Partition::new(vec![5, 5, 3, 1, 1, 1]).unwrap();
        assert_eq!(p.to_exponent_string(), "(5^2 3 1^3)");
        let back = Partition::from_exponent_string("(5^2 3 1^3)").unwrap();
        assert_eq!(p, back);
        assert_eq!(Partition::empty().to_exponent_string(), "()");
        // conjugate of (4,1,1) is (3,1,1,1)
        let q = Partition::new(vec![4, 1, 1]).unwrap();
        assert_eq!(q.conjugate().parts(), &[3, 1, 1, 1]);
        assert_eq!(q.conjugate().conjugate(), q);
    }

    #[test]
    fn e_lambda_values() {
        let e = [5.0, 10.0, 10.0, 5.0, 1.0];
        let l = Partition::new(vec![4, 1, 1]).unwrap();
        assert_eq!(e_lambda(&l, &e).unwrap(), 125.0);
        assert_eq!(e_lambda(&Partition::empty(), &e).unwrap(), 1.0);
        let l2 = Partition::new(vec![5, 2, 1]).unwrap();
        assert_eq!(e_lambda(&l2, &e).unwrap(), 50.0);
        let bad = Partition::new(vec![6]).unwrap();
        assert!(matches!(e_lambda(&bad, &e), Err(SymError::PartTooLarge(6))));
    }

    #[test]
    fn power_sum_conversion() {
        // Σ x_i² = e1² - 2e2
        let mut cache = ElemCache::new();
        let p2 = SymPoly::monomial(&Partition::new(vec![2]).unwrap()).unwrap();
        let e = to_elementary(&p2, &mut cache);
        let e1 = MultiPoly::var(E_VARS, "e1");
        let e2 = MultiPoly::var(E_VARS, "e2");
        let expect = e1.pow(2).sub(&e2.mul_scalar(&BigInt::from(2)));
        assert_eq!(e.poly, expect);
    }

    #[test]
    fn squares_pairs_conversion() {
        // Σ_{i<j} x_i²x_j² = m_{22} = e2² - 2e1e3 + 2e4
        let mut cache = ElemCache::new();
        let m22 = SymPoly::monomial(&Partition::new(vec![2, 2]).unwrap()).unwrap();
        let e = to_elementary(&m22, &mut cache);
        let e1 = MultiPoly::var(E_VARS, "e1");
        let e2 = MultiPoly::var(E_VARS, "e2");
        let e3 = MultiPoly::var(E_VARS, "e3");
        let e4 = MultiPoly::var(E_VARS, "e4");
        let expect = e2
            .pow(2)
            .sub(&e1.mul(&e3).mul_scalar(&BigInt::from(2)))
            .add(&e4.mul_scalar(&BigInt::from(2)));
        assert_eq!(e.poly, expect);
    }

    #[test]
    fn product_of_all_is_e5() {
        let mut cache = ElemCache::new();
        let m = SymPoly::monomial(&Partition::new(vec![1, 1, 1, 1, 1]).unwrap()).unwrap();
        let e = to_elementary(&m, &mut cache);
        assert_eq!(e.poly, MultiPoly::var(E_VARS, "e5"));
    }

    #[test]
    fn asymmetric_rejected() {
        let x0 = MultiPoly::var(X_VARS, "x0");
        assert!(matches!(SymPoly::new(x0), Err(SymError::NotSymmetric)));
    }

    #[test]
    fn triangularity_conjugate_leading() {
        // conversion of m_λ has e_{λ'} (conjugate) as its grevlex-leading term
        let mut cache = ElemCache::new();
        for parts in [
            vec![2u8],
            vec![2, 1],
            vec![3, 1],
            vec![2, 2],
            vec![3, 2, 1],
            vec![4, 2],
            vec![2, 2, 1, 1],
        ] {
            let lam = Partition::new(parts).unwrap();
            if lam.weight() > 6 {
                continue;
            }
            let m = SymPoly::monomial(&lam).unwrap();
            let conv = to_elementary(&m, &mut cache);
            let (lead, _) = conv.poly.leading().unwrap();
            // e-monomial exponents -> partition: exponent of e_k = count of part k
            let mut parts_from_lead = Vec::new();
            for (k, &g) in lead.as_slice().iter().enumerate() {
                for _ in 0..g {
                    parts_from_lead.push(k as u8 + 1);
                }
            }
            parts_from_lead.sort_unstable_by(|a, b| b.cmp(a));
            let got = Partition::new(parts_from_lead).unwrap();
            assert_eq!(got, lam.conjugate(), "λ = {lam}");
        }
    }

    #[test]
    fn expand_in_x_roundtrip() {
        let mut cache = ElemCache::new();
        let m = SymPoly::monomial(&Partition::new(vec![3, 2]).unwrap()).unwrap();
        let conv = to_elementary(&m, &mut cache);
        let back = conv.expand_in_x(&mut cache);
        assert_eq!(&back, m.poly());
    }
}
