//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! The elimination substrate: exact arithmetic, content/primitive-part
//! normalization, Sylvester resultants (fraction-free Bareiss, with a
//! subresultant PRS second path for cross-validation), the even/odd parity
//! normalization that turns a relation for W into one for Z = W², and
//! variable-map expansion between alphabets.
//!
//! A polynomial carries a `&'static` variable alphabet; terms live in a
//! `BTreeMap` keyed by exponent vectors under graded reverse-lexicographic
//! order, so iteration order (and therefore serialization) is canonical.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum PolyError {
    #[error("exact division failed: {0}")]
    NotDivisible(&'static str),
    #[error("resultant needs positive degree in the eliminated variable")]
    ZeroPolynomial,
    #[error("exponent not even for variable {0}; cannot halve")]
    OddExponent(&'static str),
    #[error("variable {0} is in use but has no slot in the target alphabet")]
    DroppedVariableInUse(&'static str),
}

/// Largest variable alphabet supported by the inline exponent storage.
pub const MAX_VARS: usize = 12;

/// Exponent vector under graded reverse-lexicographic order, stored inline
/// (no heap allocation; `Copy`): these are the keys of every term map and
/// the hot currency of the elimination arithmetic.
///
/// `a < b` iff `deg a < deg b`, or degrees tie and at the rightmost position
/// where they differ `a` has the larger exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    exps: [u16; MAX_VARS],
    len: u8,
}

impl Mono {
    pub fn constant(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        Mono {
            exps: [0; MAX_VARS],
            len: n as u8,
        }
    }

    pub fn from_slice(e: &[u16]) -> Self {
        let mut m = Mono::constant(e.len());
        m.exps[..e.len()].copy_from_slice(e);
        m
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.exps[..self.len as usize]
    }

    pub fn exp(&self, i: usize) -> u16 {
        debug_assert!(i < self.len as usize);
        self.exps[i]
    }

    pub fn set_exp(&mut self, i: usize, v: u16) {
        debug_assert!(i < self.len as usize);
        self.exps[i] = v;
    }

    pub fn total_degree(&self) -> u32 {
        self.as_slice().iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        debug_assert_eq!(self.len, other.len);
        let mut out = *self;
        for i in 0..self.len as usize {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        out
    }

    /// Component-wise difference; `None` if any entry would go negative.
    fn try_div(&self, other: &Mono) -> Option<Mono> {
        let mut out = *self;
        for i in 0..self.len as usize {
            out.exps[i] = self.exps[i].checked_sub(other.exps[i])?;
        }
        Some(out)
    }
}

impl core::ops::Deref for Mono {
    type Target = [u16];
    fn deref(&self) -> &[u16] {
        self.as_slice()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {
                for i in (0..self.len as usize).rev() {
                    match self.exps[i].cmp(&other.exps[i]) {
                        Ordering::Equal => continue,
                        // more of a later variable ranks lower
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Less => return Ordering::Greater,
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with `BigInt` coefficients over a fixed
/// variable alphabet. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: &'static [&'static str],
    terms: BTreeMap<Mono, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: &'static [&'static str]) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &'static [&'static str], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(Mono::constant(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &'static [&'static str]) -> Self {
        Self::constant(vars, 1)
    }

    pub fn var(vars: &'static [&'static str], name: &str) -> Self {
        let idx = Self::index_of(vars, name);
        let mut mono = Mono::constant(vars.len());
        mono.set_exp(idx, 1);
        let mut p = Self::zero(vars);
        p.terms.insert(mono, BigInt::one());
        p
    }

    pub fn index_of(vars: &'static [&'static str], name: &str) -> usize {
        vars.iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"))
    }

    pub fn from_terms(
        vars: &'static [&'static str],
        terms: impl IntoIterator<Item = (Vec<u16>, BigInt)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len());
            p.add_term(Mono::from_slice(&exps), c);
        }
        p
    }

    pub fn vars(&self) -> &'static [&'static str] {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Mono::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    fn add_term(&mut self, mono: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_same_vars(&self, other: &Self) {
        assert!(
            core::ptr::eq(self.vars, other.vars) || self.vars == other.vars,
            "mixed alphabets: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = Self::zero(self.vars);
        // iterate the smaller operand on the outside
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn mul_term(&self, mono: &Mono, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        let mut out = Self::zero(self.vars);
        for (m, v) in &self.terms {
            out.terms.insert(m.mul(mono), v * c);
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.vars);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Positive gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content; the zero polynomial stays zero.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = &*c / &g;
        }
        out
    }

    /// Largest monomial dividing every term (the monomial content).
    pub fn monomial_content(&self) -> Mono {
        let mut iter = self.terms.keys();
        let mut m = match iter.next() {
            Some(first) => first.clone(),
            None => return Mono::constant(self.vars.len()),
        };
        for k in iter {
            for i in 0..m.len as usize {
                m.exps[i] = m.exps[i].min(k.exps[i]);
            }
        }
        m
    }

    pub fn div_monomial(&self, mono: &Mono) -> Result<Self, PolyError> {
        let mut out = Self::zero(self.vars);
        for (m, c) in &self.terms {
            let q = m
                .try_div(mono)
                .ok_or(PolyError::NotDivisible("monomial does not divide"))?;
            out.terms.insert(q, c.clone());
        }
        Ok(out)
    }

    /// Exact multivariate division; errors if the divisor does not divide.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.assert_same_vars(divisor);
        if divisor.is_zero() {
            return Err(PolyError::NotDivisible("division by zero"));
        }
        let (dm, dc) = divisor.leading().expect("nonzero");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quo = Self::zero(self.vars);
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm
                .try_div(&dm)
                .ok_or(PolyError::NotDivisible("leading monomial"))?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible("leading coefficient"));
            }
            let t = divisor.mul_term(&qm, &qc);
            quo.add_term(qm, qc);
            rem = rem.sub(&t);
        }
        Ok(quo)
    }

    /// Coefficients with respect to one variable: entry `k` is the
    /// coefficient of `var^k` (with that variable's exponent zeroed).
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.vars); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exp(var) as usize;
            let mut stripped = *m;
            stripped.set_exp(var, 0);
            out[k].add_term(stripped, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(
        vars: &'static [&'static str],
        var: usize,
        coeffs: &[MultiPoly],
    ) -> Self {
        let mut out = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut mono = *m;
                mono.set_exp(var, mono.exp(var).checked_add(k as u16).expect("overflow"));
                out.add_term(mono, v.clone());
            }
        }
        out
    }

    /// Substitute every source variable by a polynomial over a (possibly
    /// different) alphabet. Powers of the replacement images are cached.
    pub fn expand_map(&self, target: &'static [&'static str], images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len());
        let mut pow_cache: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|img| vec![MultiPoly::one(target), img.clone()])
            .collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (v, &e) in m.as_slice().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while pow_cache[v].len() <= e as usize {
                    let next = {
                        let cache = &pow_cache[v];
                        cache.last().unwrap().mul(&cache[1])
                    };
                    pow_cache[v].push(next);
                }
                term = term.mul(&pow_cache[v][e as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Reinterpret the polynomial over a new alphabet: `positions[i]` is the
    /// slot in `target` receiving old variable `i`, or `None` to drop a
    /// variable (an error if a dropped variable is actually used).
    pub fn rename_opt(
        &self,
        target: &'static [&'static str],
        positions: &[Option<usize>],
    ) -> Result<MultiPoly, PolyError> {
        assert_eq!(positions.len(), self.vars.len());
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut mono = Mono::constant(target.len());
            for (i, &e) in m.as_slice().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match positions[i] {
                    Some(slot) => mono.set_exp(slot, e),
                    None => return Err(PolyError::DroppedVariableInUse(self.vars[i])),
                }
            }
            out.add_term(mono, c.clone());
        }
        Ok(out)
    }

    pub fn set_var_zero_by_name(&self, name: &str) -> MultiPoly {
        self.set_var_zero(Self::index_of(self.vars, name))
    }

    /// Set one variable to zero (keep only terms with exponent 0 there).
    pub fn set_var_zero(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars);
        for (m, c) in &self.terms {
            if m.exp(var) == 0 {
                out.terms.insert(*m, c.clone());
            }
        }
        out
    }

    /// Halve the exponents of the listed variables (a² -> x rewriting);
    /// errors if any such exponent is odd.
    pub fn halve_exponents(&self, vars_to_halve: &[usize]) -> Result<MultiPoly, PolyError> {
        let mut out = MultiPoly::zero(self.vars);
        for (m, c) in &self.terms {
            let mut mono = *m;
            for &v in vars_to_halve {
                let e = mono.exp(v);
                if e % 2 != 0 {
                    return Err(PolyError::OddExponent(self.vars[v]));
                }
                mono.set_exp(v, e / 2);
            }
            out.add_term(mono, c.clone());
        }
        Ok(out)
    }

    pub fn eval_rational(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            for (v, &e) in m.as_slice().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[v];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64().unwrap_or(f64::NAN);
            for (v, &e) in m.as_slice().iter().enumerate() {
                t *= point[v].powi(e as i32);
            }
            acc += t;
        }
        acc
    }

    /// Normalize sign so the leading (grevlex-greatest) coefficient is positive.
    pub fn normalize_sign(&self) -> (Self, i8) {
        match self.leading() {
            Some((_, c)) if c.is_negative() => (self.neg(), -1),
            _ => (self.clone(), 1),
        }
    }

    /// Canonical one-term-per-line text: sign, coefficient, then every
    /// variable with an explicit exponent, descending term order.
    pub fn to_canonical_text(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (m, c) in self.terms.iter().rev() {
            let sign = if c.is_negative() { '-' } else { '+' };
            let mag = c.abs();
            let _ = write!(s, "{sign}{mag}");
            for (v, e) in self.vars.iter().zip(m.as_slice()) {
                let _ = write!(s, " {v}^{e}");
            }
            s.push('\n');
        }
        if s.is_empty() {
            s.push_str("+0\n");
        }
        s
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{} terms in {:?}]", self.terms.len(), self.vars)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let unit_mono = m.total_degree() == 0;
            if !mag.is_one() || unit_mono {
                write!(f, "{mag}")?;
            }
            let mut printed = !mag.is_one() || unit_mono;
            for (v, &e) in self.vars.iter().zip(m.as_slice()) {
                if e == 0 {
                    continue;
                }
                if printed {
                    write!(f, "*")?;
                }
                printed = true;
                if e == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// One line of a term-level difference between two polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct TermDiff {
    pub monomial: String,
    pub left: Option<BigInt>,
    pub right: Option<BigInt>,
}

/// Term-by-term difference `left` vs `right` (empty when identical).
pub fn term_diff(left: &MultiPoly, right: &MultiPoly) -> Vec<TermDiff> {
    left.assert_same_vars(right);
    let mut out = Vec::new();
    let mut monos: Vec<&Mono> = left.terms.keys().chain(right.terms.keys()).collect();
    monos.sort();
    monos.dedup();
    for m in monos {
        let l = left.terms.get(m);
        let r = right.terms.get(m);
        if l != r {
            let mut name = String::new();
            for (v, &e) in left.vars.iter().zip(m.as_slice()) {
                if e > 0 {
                    if !name.is_empty() {
                        name.push(' ');
                    }
                    use core::fmt::Write;
                    let _ = write!(name, "{v}^{e}");
                }
            }
            if name.is_empty() {
                name = "1".to_owned();
            }
            out.push(TermDiff {
                monomial: name,
                left: l.cloned(),
                right: r.cloned(),
            });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// univariate views and resultants
// ---------------------------------------------------------------------------

fn uv_degree(coeffs: &[MultiPoly]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

/// Sylvester-matrix resultant of `f` and `g` with respect to `var`,
/// by fraction-free Bareiss elimination. Exact; no rational arithmetic.
pub fn resultant_bareiss(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<MultiPoly, PolyError> {
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let n = uv_degree(&fc).ok_or(PolyError::ZeroPolynomial)?;
    let m = uv_degree(&gc).ok_or(PolyError::ZeroPolynomial)?;
    if n == 0 || m == 0 {
        return Err(PolyError::ZeroPolynomial);
    }
    let vars = f.vars;
    let size = n + m;
    // Sylvester convention: m rows of f-coefficients (descending, shifted),
    // then n rows of g-coefficients.
    let mut mat = vec![vec![MultiPoly::zero(vars); size]; size];
    for row in 0..m {
        for (k, c) in fc.iter().enumerate() {
            mat[row][row + (n - k)] = c.clone();
        }
    }
    for row in 0..n {
        for (k, c) in gc.iter().enumerate() {
            mat[m + row][row + (m - k)] = c.clone();
        }
    }
    bareiss_determinant(mat)
}

/// Fraction-free determinant (Bareiss). Every division is exact.
pub fn bareiss_determinant(mut mat: Vec<Vec<MultiPoly>>) -> Result<MultiPoly, PolyError> {
    let n = mat.len();
    if n == 0 {
        return Err(PolyError::ZeroPolynomial);
    }
    let vars = mat[0][0].vars;
    let mut sign = 1i8;
    let mut prev = MultiPoly::one(vars);
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !mat[i][k].is_zero());
            match swap {
                Some(i) => {
                    mat.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(MultiPoly::zero(vars)),
            }
        }
        let pivot = mat[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = pivot.mul(&mat[i][j]).sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = num.exact_div(&prev)?;
            }
            mat[i][k] = MultiPoly::zero(vars);
        }
        prev = pivot;
    }
    let det = mat[n - 1][n - 1].clone();
    Ok(if sign < 0 { det.neg() } else { det })
}

/// Pseudo-remainder: returns `r` with `lc(g)^(deg f - deg g + 1) · f = q·g + r`.
///
/// Reduction steps whose eliminated coefficient is already zero skip the
/// full-remainder multiplication; the missing lc(g) powers are applied once
/// at the end so the exact normalization is preserved.
fn pseudo_rem(f: &[MultiPoly], g: &[MultiPoly], vars: &'static [&'static str]) -> Vec<MultiPoly> {
    let df = uv_degree(f).expect("nonzero f");
    let dg = uv_degree(g).expect("nonzero g");
    assert!(df >= dg);
    let lc_g = &g[dg];
    let mut r: Vec<MultiPoly> = f.to_vec();
    let mut skipped = 0u32;
    for k in (dg..=df).rev() {
        if r[k].is_zero() {
            skipped += 1;
            continue;
        }
        let lead = core::mem::replace(&mut r[k], MultiPoly::zero(vars));
        for c in r.iter_mut().take(k) {
            if !c.is_zero() {
                *c = c.mul(lc_g);
            }
        }
        let shift = k - dg;
        for (j, gc) in g.iter().enumerate().take(dg) {
            r[j + shift] = r[j + shift].sub(&gc.mul(&lead));
        }
    }
    r.truncate(dg);
    if skipped > 0 {
        let fix = lc_g.pow(skipped);
        for c in r.iter_mut() {
            if !c.is_zero() {
                *c = c.mul(&fix);
            }
        }
    }
    r
}

/// Resultant via the subresultant polynomial remainder sequence
/// (Collins/Brown). Independent second route used to cross-check Bareiss.
pub fn resultant_subresultant(
    f: &MultiPoly,
    g: &MultiPoly,
    var: usize,
) -> Result<MultiPoly, PolyError> {
    resultant_subresultant_traced(f, g, var, &mut |_, _| {})
}

/// Like [`resultant_subresultant`], reporting (remaining degree, largest
/// coefficient term count) after each PRS step.
pub fn resultant_subresultant_traced(
    f: &MultiPoly,
    g: &MultiPoly,
    var: usize,
    progress: &mut dyn FnMut(usize, usize),
) -> Result<MultiPoly, PolyError> {
    let vars = f.vars;
    let mut a = f.coeffs_in(var);
    let mut b = g.coeffs_in(var);
    let da = uv_degree(&a).ok_or(PolyError::ZeroPolynomial)?;
    let db = uv_degree(&b).ok_or(PolyError::ZeroPolynomial)?;
    if da == 0 || db == 0 {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut s = 1i8;
    if da < db {
        core::mem::swap(&mut a, &mut b);
        if (da * db) % 2 == 1 {
            s = -s;
        }
    }
    a.truncate(uv_degree(&a).unwrap() + 1);
    b.truncate(uv_degree(&b).unwrap() + 1);
    let mut g_coef = MultiPoly::one(vars);
    let mut h = MultiPoly::one(vars);
    loop {
        let dega = a.len() - 1;
        let degb = b.len() - 1;
        if degb == 0 {
            // res = s · lc(b)^{deg a} / h^{deg a - 1}
            let num = b[0].pow(dega as u32);
            let den = h.pow(dega as u32 - 1);
            let r = num.exact_div(&den)?;
            return Ok(if s < 0 { r.neg() } else { r });
        }
        let delta = (dega - degb) as u32;
        if dega % 2 == 1 && degb % 2 == 1 {
            s = -s;
        }
        let r = pseudo_rem(&a, &b, vars);
        let degr = uv_degree(&r);
        let divisor = g_coef.mul(&h.pow(delta));
        a = b;
        b = match degr {
            None => return Ok(MultiPoly::zero(vars)),
            Some(d) => {
                let mut nb = Vec::with_capacity(d + 1);
                for c in r.iter().take(d + 1) {
                    nb.push(c.exact_div(&divisor)?);
                }
                nb
            }
        };
        progress(
            b.len() - 1,
            b.iter().map(|c| c.num_terms()).max().unwrap_or(0),
        );
        g_coef = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g_coef.pow(delta).exact_div(&h.pow(delta - 1))?
        };
    }
}

/// Parity normalization: write `f = E(W²) + W·O(W²)` in the variable at
/// `var` and return `E(Z)² - Z·O(Z)²` with Z occupying the same slot.
///
/// The result vanishes at Z = W² whenever `f` vanished at W, turning a
/// relation for W = 4AR into one for Z = (4AR)².
pub fn even_odd_norm(f: &MultiPoly, var: usize) -> MultiPoly {
    let vars = f.vars;
    let mut even = MultiPoly::zero(vars);
    let mut odd = MultiPoly::zero(vars);
    for (m, c) in f.terms() {
        let e = m.exp(var);
        let mut mono = *m;
        if e % 2 == 0 {
            mono.set_exp(var, e / 2);
            even.add_term(mono, c.clone());
        } else {
            mono.set_exp(var, (e - 1) / 2);
            odd.add_term(mono, c.clone());
        }
    }
    let z = MultiPoly::var(vars, vars[var]);
    even.mul(&even).sub(&z.mul(&odd.mul(&odd)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const XY: &[&str] = &["x", "y"];
    const AB: &[&str] = &["X", "a", "b"];

    fn xp(vars: &'static [&'static str], name: &str) -> MultiPoly {
        MultiPoly::var(vars, name)
    }

    #[test]
    fn grevlex_order() {
        // x > y > z: x² > xy > y² > xz > yz > z²
        let seq = [
            Mono::from_slice(&[2, 0, 0]),
            Mono::from_slice(&[1, 1, 0]),
            Mono::from_slice(&[0, 2, 0]),
            Mono::from_slice(&[1, 0, 1]),
            Mono::from_slice(&[0, 1, 1]),
            Mono::from_slice(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert!(w[0] > w[1], "{:?} should rank above {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn mul_and_exact_div_roundtrip() {
        let x = xp(XY, "x");
        let y = xp(XY, "y");
        let f = x.add(&y).pow(3);
        let g = x.add(&y);
        let q = f.exact_div(&g).unwrap();
        assert_eq!(q, x.add(&y).pow(2));
        // (x+1)(x-1) = x² - 1
        let one = MultiPoly::one(XY);
        let prod = x.add(&one).mul(&x.sub(&one));
        assert_eq!(prod, x.mul(&x).sub(&one));
    }

    #[test]
    fn exact_div_failure() {
        let x = xp(XY, "x");
        let y = xp(XY, "y");
        assert!(x.exact_div(&y).is_err());
        let two_x = x.mul_scalar(&BigInt::from(2));
        let three = MultiPoly::constant(XY, 3);
        assert!(two_x.exact_div(&three).is_err());
    }

    #[test]
    fn content_primitive() {
        // 6x² + 9x: content 3, primitive part 2x² + 3x
        let x = xp(XY, "x");
        let f = x
            .pow(2)
            .mul_scalar(&BigInt::from(6))
            .add(&x.mul_scalar(&BigInt::from(9)));
        assert_eq!(f.content(), BigInt::from(3));
        let pp = f.primitive_part();
        let expect = x
            .pow(2)
            .mul_scalar(&BigInt::from(2))
            .add(&x.mul_scalar(&BigInt::from(3)));
        assert_eq!(pp, expect);
    }

    #[test]
    fn resultant_linear_pair() {
        let x = xp(AB, "X");
        let a = xp(AB, "a");
        let b = xp(AB, "b");
        let f = x.sub(&a);
        let g = x.sub(&b);
        let r = resultant_bareiss(&f, &g, 0).unwrap();
        // Res_X(X - a, X - b) = ±(a - b); pin our convention
        assert!(r == b.sub(&a) || r == a.sub(&b));
        // common root: Res_X(X² - 1, X - 1) = 0
        let one = MultiPoly::one(AB);
        let f2 = x.pow(2).sub(&one);
        let g2 = x.sub(&one);
        assert!(resultant_bareiss(&f2, &g2, 0).unwrap().is_zero());
    }

    fn univar_resultant_q(f: &[BigRational], g: &[BigRational]) -> BigRational {
        fn deg(v: &[BigRational]) -> Option<usize> {
            v.iter().rposition(|c| !c.is_zero())
        }
        let mut a = f.to_vec();
        let mut b = g.to_vec();
        let mut res = BigRational::one();
        loop {
            let da = deg(&a).unwrap();
            let db = match deg(&b) {
                None => return BigRational::zero(),
                Some(0) => {
                    let mut acc = BigRational::one();
                    for _ in 0..da {
                        acc *= &b[0];
                    }
                    return res * acc;
                }
                Some(d) => d,
            };
            let mut r = a.clone();
            while let Some(dr) = deg(&r) {
                if dr < db {
                    break;
                }
                let qc = &r[dr] / &b[db];
                for j in 0..=db {
                    let sub = &qc * &b[j];
                    r[dr - db + j] -= sub;
                }
            }
            let dr = deg(&r);
            let mut lead = BigRational::one();
            for _ in 0..(da - dr.unwrap_or(0)) {
                lead *= &b[db];
            }
            if (da * db) % 2 == 1 {
                res = -res;
            }
            res *= lead;
            a = b;
            b = r;
        }
    }

    #[test]
    fn resultant_matches_prs_and_euclid() {
        // f = X² + aX + b, g = X³ + bX + a
        let x = xp(AB, "X");
        let a = xp(AB, "a");
        let b = xp(AB, "b");
        let f = x.pow(2).add(&a.mul(&x)).add(&b);
        let g = x.pow(3).add(&b.mul(&x)).add(&a);
        let r1 = resultant_bareiss(&f, &g, 0).unwrap();
        let r2 = resultant_subresultant(&f, &g, 0).unwrap();
        assert!(r1 == r2 || r1 == r2.neg(), "bareiss vs prs disagree");
        // specialize a = 3, b = 5 and compare against the Euclidean resultant
        let point = [
            BigRational::zero(),
            BigRational::from(BigInt::from(3)),
            BigRational::from(BigInt::from(5)),
        ];
        let fs: Vec<BigRational> = f
            .coeffs_in(0)
            .iter()
            .map(|c| c.eval_rational(&point))
            .collect();
        let gs: Vec<BigRational> = g
            .coeffs_in(0)
            .iter()
            .map(|c| c.eval_rational(&point))
            .collect();
        let expected = univar_resultant_q(&fs, &gs);
        let got = r1.eval_rational(&point);
        assert!(got == expected || got == -expected.clone());
    }

    #[test]
    fn even_odd_norm_basics() {
        const WC: &[&str] = &["W", "c"];
        let w = xp(WC, "W");
        let c = xp(WC, "c");
        // f = W - c  ->  c² - Z (vanishes at Z = c²; Z sits in the W slot)
        let r = even_odd_norm(&w.sub(&c), 0);
        assert_eq!(r, c.pow(2).sub(&w));
        // f = W² - c -> (Z - c)²
        let f = w.pow(2).sub(&c);
        let r = even_odd_norm(&f, 0);
        assert_eq!(r, w.sub(&c).pow(2));
    }

    #[test]
    fn canonical_text_deterministic() {
        let x = xp(XY, "x");
        let y = xp(XY, "y");
        let f = x.pow(2).sub(&y).add(&MultiPoly::constant(XY, 7));
        let t = f.to_canonical_text();
        assert_eq!(t, "+1 x^2 y^0\n-1 x^0 y^1\n+7 x^0 y^0\n");
    }

    #[test]
    fn term_diff_reports_changes() {
        let x = xp(XY, "x");
        let f = x.pow(2).add(&MultiPoly::constant(XY, 2));
        let g = x.pow(2).mul_scalar(&BigInt::from(3));
        let d = term_diff(&f, &g);
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn halve_exponents_checks_parity() {
        let x = xp(XY, "x");
        let f = x.pow(4);
        let h = f.halve_exponents(&[0]).unwrap();
        assert_eq!(h, x.pow(2));
        assert!(x.pow(3).halve_exponents(&[0]).is_err());
    }
}
