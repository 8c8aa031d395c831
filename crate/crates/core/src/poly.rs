//! Exact integer polynomials of bounded degree.
//!
//! Two bases matter throughout the crate:
//!
//! * the monomial basis `x^0, ..., x^d`, and
//! * the *delta basis* `(x+1)^i x^(d-i)` for `0 <= i <= d`.
//!
//! The multivariate analogue over a degree bound `a` uses monomials `x^b` and
//! `x^b (x+1)^(a-b)` for `b <= a` componentwise. Both pairs of bases span the
//! same space, so the conversions here are exact and invertible.
//!
//! All coefficients are arbitrary precision; nothing can wrap.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Product of componentwise binomials `prod_i C(top_i, bottom_i)`.
pub fn multi_binomial(top: &[u32], bottom: &[u32]) -> BigInt {
    debug_assert_eq!(top.len(), bottom.len());
    top.iter()
        .zip(bottom)
        .map(|(&n, &k)| binomial(n, k))
        .product()
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Componentwise `b <= a`.
pub fn leq(b: &[u32], a: &[u32]) -> bool {
    b.len() == a.len() && b.iter().zip(a).all(|(x, y)| x <= y)
}

/// Componentwise `a - b`; callers guarantee `b <= a`.
pub fn diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Total degree `|b|`.
pub fn weight(b: &[u32]) -> u32 {
    b.iter().sum()
}

/// Iterator over every exponent vector `b <= bound`, lexicographically
/// ascending (the last coordinate varies fastest).
#[derive(Debug, Clone)]
pub struct MultiIndices {
    bound: Vec<u32>,
    next: Option<Vec<u32>>,
}

pub fn multi_indices(bound: &[u32]) -> MultiIndices {
    MultiIndices {
        bound: bound.to_vec(),
        next: Some(vec![0; bound.len()]),
    }
}

impl Iterator for MultiIndices {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < self.bound[i] {
                succ[i] += 1;
                self.next = Some(succ);
                return Some(current);
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// Dense univariate polynomial with a fixed degree bound `d`.
///
/// `coeffs[i]` is the coefficient of `x^i` and `coeffs.len() == d + 1`.
/// Trailing zeros are allowed: the bound is part of the value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero(d: usize) -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(); d + 1],
        }
    }

    /// An empty vector is read as the zero polynomial of bound 0.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^k` with degree bound `d >= k`.
    pub fn monomial(k: usize, d: usize) -> Self {
        assert!(k <= d, "monomial degree {k} exceeds bound {d}");
        let mut p = Self::zero(d);
        p.coeffs[k] = BigInt::one();
        p
    }

    /// `(c0 + c1 x)^k` with degree bound `k`.
    pub fn linear_power(c0: i64, c1: i64, k: u32) -> Self {
        let c0 = BigInt::from(c0);
        let c1 = BigInt::from(c1);
        let coeffs = (0..=k)
            .map(|j| binomial(k, j) * num_traits::pow(c1.clone(), j as usize) * num_traits::pow(c0.clone(), (k - j) as usize))
            .collect();
        IntPoly { coeffs }
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the bound.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Actual degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-bounds the polynomial. Shrinking below the actual degree fails.
    pub fn with_degree_bound(mut self, d: usize) -> Result<Self> {
        if let Some(deg) = self.degree() {
            if deg > d {
                return Err(Error::DegreeMismatch {
                    expected: d,
                    found: deg,
                });
            }
        }
        self.coeffs.resize(d + 1, BigInt::zero());
        Ok(self)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// `p(-x)`.
    pub fn negate_arg(&self) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `p(x + shift)` by binomial expansion of every power.
    pub fn shift_arg(&self, shift: i64) -> Self {
        let d = self.degree_bound();
        let shift = BigInt::from(shift);
        let mut out = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let term = binomial(i as u32, j as u32) * num_traits::pow(shift.clone(), i - j);
                *slot += c * term;
            }
        }
        IntPoly { coeffs: out }
    }

    /// `x^d p(1/x)`: the coefficient vector read backwards.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly { coeffs }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let d = self.degree_bound().max(other.degree_bound());
        let zero = BigInt::zero();
        let coeffs = (0..=d)
            .map(|i| {
                f(
                    self.coeffs.get(i).unwrap_or(&zero),
                    other.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        IntPoly { coeffs }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.degree_bound() + rhs.degree_bound() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly { coeffs: out }
    }
}

impl fmt::Display for IntPoly {
    /// Descending-degree rendering, e.g. `4x^3 + 4x^2 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Coordinates in the univariate delta basis: `coeffs[i]` multiplies
/// `(x+1)^i x^(d-i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaCoeffs {
    coeffs: Vec<BigInt>,
}

impl DeltaCoeffs {
    /// An empty vector is read as bound 0 with a zero coefficient.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        DeltaCoeffs { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

/// Expands `sum_i c_i (x+1)^i x^(d-i)` into monomials.
///
/// The coefficient of `x^k` is `sum_{i >= d-k} c_i C(i, k-d+i)`.
pub fn delta_expand(c: &DeltaCoeffs) -> IntPoly {
    let d = c.degree_bound();
    let mut out = vec![BigInt::zero(); d + 1];
    for (i, ci) in c.coeffs.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        // (x+1)^i x^(d-i) contributes C(i, j) to x^(d-i+j).
        for j in 0..=i {
            out[d - i + j] += ci * binomial(i as u32, j as u32);
        }
    }
    IntPoly { coeffs: out }
}

/// Writes `p` in the delta basis of the same degree bound using
/// `x^k = sum_i (-1)^(d-k-i) C(d-k, i) (x+1)^i x^(d-i)`.
pub fn monomial_to_delta(p: &IntPoly) -> DeltaCoeffs {
    let d = p.degree_bound();
    let mut out = vec![BigInt::zero(); d + 1];
    for (k, pk) in p.coeffs.iter().enumerate() {
        if pk.is_zero() {
            continue;
        }
        let rest = (d - k) as u32;
        for (i, slot) in out.iter_mut().enumerate().take(rest as usize + 1) {
            let term = binomial(rest, i as u32) * sign(rest as i64 - i as i64);
            *slot += pk * term;
        }
    }
    DeltaCoeffs { coeffs: out }
}

fn check_key(key: &[u32], bound: &[u32]) -> Result<()> {
    if leq(key, bound) {
        Ok(())
    } else {
        Err(Error::KeyOutOfRange {
            key: key.to_vec(),
            bound: bound.to_vec(),
        })
    }
}

/// Sparse multivariate polynomial with multidegree bound `a`.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality (for equal bounds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    bound: Vec<u32>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(bound: &[u32]) -> Self {
        MPoly {
            bound: bound.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(bound: &[u32], terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Self::zero(bound);
        for (key, c) in terms {
            p.add_term(&key, &c)?;
        }
        Ok(p)
    }

    pub fn monomial(bound: &[u32], key: &[u32]) -> Result<Self> {
        Self::from_terms(bound, [(key.to_vec(), BigInt::one())])
    }

    /// `(c0 + c1 x_var)^k` inside `nvars` variables; bound is `k` at `var`.
    pub fn linear_power(nvars: usize, var: usize, c0: i64, c1: i64, k: u32) -> Self {
        let uni = IntPoly::linear_power(c0, c1, k);
        let mut bound = vec![0; nvars];
        bound[var] = k;
        let mut p = Self::zero(&bound);
        for (j, c) in uni.coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                let mut key = vec![0; nvars];
                key[var] = j as u32;
                p.terms.insert(key, c);
            }
        }
        p
    }

    pub fn bound(&self) -> &[u32] {
        &self.bound
    }

    pub fn nvars(&self) -> usize {
        self.bound.len()
    }

    /// Non-zero terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[u32]) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: &[u32], c: &BigInt) -> Result<()> {
        check_key(key, &self.bound)?;
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(key.to_vec()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(key);
        }
        Ok(())
    }

    /// Substitutes `x_i -> x` for every variable.
    pub fn specialize(&self) -> IntPoly {
        let mut out = IntPoly::zero(weight(&self.bound) as usize);
        for (key, c) in &self.terms {
            out.coeffs[weight(key) as usize] += c;
        }
        out
    }

    fn merged_bound(&self, other: &Self) -> Vec<u32> {
        assert_eq!(self.nvars(), other.nvars(), "variable count mismatch");
        self.bound
            .iter()
            .zip(&other.bound)
            .map(|(a, b)| *a.max(b))
            .collect()
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.bound = self.merged_bound(rhs);
        for (k, c) in &rhs.terms {
            out.add_term(k, c).expect("bound covers both operands");
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.bound = self.merged_bound(rhs);
        for (k, c) in &rhs.terms {
            out.add_term(k, &-c).expect("bound covers both operands");
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars(), rhs.nvars(), "variable count mismatch");
        let bound: Vec<u32> = self.bound.iter().zip(&rhs.bound).map(|(a, b)| a + b).collect();
        let mut out = MPoly::zero(&bound);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                out.add_term(&key, &(ca * cb)).expect("sum of bounded keys");
            }
        }
        out
    }
}

/// Coordinates in the multivariate delta basis: the value at `b`
/// multiplies `x^b (x+1)^(a-b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MDeltaCoeffs {
    bound: Vec<u32>,
    coeffs: BTreeMap<Vec<u32>, BigInt>,
}

impl MDeltaCoeffs {
    pub fn new<I>(bound: &[u32], coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut map: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (key, c) in coeffs {
            check_key(&key, bound)?;
            *map.entry(key).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(MDeltaCoeffs {
            bound: bound.to_vec(),
            coeffs: map,
        })
    }

    pub fn bound(&self) -> &[u32] {
        &self.bound
    }

    pub fn coeff(&self, key: &[u32]) -> BigInt {
        self.coeffs.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.coeffs.iter()
    }
}

/// Expands `sum_b c_b x^b (x+1)^(a-b)` with the multivariate binomial
/// theorem: `(x+1)^(a-b) = sum_{e <= a-b} C(a-b, e) x^e`.
pub fn mdelta_expand(c: &MDeltaCoeffs) -> MPoly {
    let a = &c.bound;
    let mut out = MPoly::zero(a);
    for (b, cb) in &c.coeffs {
        let rest = diff(a, b);
        for e in multi_indices(&rest) {
            let key: Vec<u32> = b.iter().zip(&e).map(|(x, y)| x + y).collect();
            let term = cb * multi_binomial(&rest, &e);
            out.add_term(&key, &term).expect("b + e <= a");
        }
    }
    out
}

/// Writes `p` in the multivariate delta basis for bound `a` using
/// `x^b = sum_{b <= b' <= a} (-1)^(|b'|-|b|) C(a-b, a-b') x^b' (x+1)^(a-b')`.
pub fn mmonomial_to_delta(p: &MPoly, a: &[u32]) -> Result<MDeltaCoeffs> {
    if p.nvars() != a.len() {
        return Err(Error::DegreeMismatch {
            expected: a.len(),
            found: p.nvars(),
        });
    }
    let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (b, pb) in &p.terms {
        check_key(b, a)?;
        let rest = diff(a, b);
        for e in multi_indices(&rest) {
            let b_prime: Vec<u32> = b.iter().zip(&e).map(|(x, y)| x + y).collect();
            let coef = multi_binomial(&rest, &diff(a, &b_prime)) * sign(weight(&e) as i64);
            *out.entry(b_prime).or_default() += pb * coef;
        }
    }
    MDeltaCoeffs::new(a, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Oracle: schoolbook products on i128 vectors, independent of the
    // closed-form binomial code above.
    fn naive_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn naive_delta_basis(i: usize, d: usize) -> Vec<i128> {
        let mut p = vec![1i128];
        for _ in 0..i {
            p = naive_mul(&p, &[1, 1]);
        }
        for _ in 0..d - i {
            p = naive_mul(&p, &[0, 1]);
        }
        p
    }

    fn naive_expand(c: &[i128]) -> Vec<i128> {
        let d = c.len() - 1;
        let mut out = vec![0i128; d + 1];
        for (i, ci) in c.iter().enumerate() {
            for (k, v) in naive_delta_basis(i, d).iter().enumerate() {
                out[k] += ci * v;
            }
        }
        out
    }

    fn big(v: &[i128]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn delta_expand_examples() {
        assert_eq!(
            delta_expand(&DeltaCoeffs::from_i64s(&[5])),
            IntPoly::from_i64s(&[5])
        );
        assert_eq!(
            delta_expand(&DeltaCoeffs::from_i64s(&[0, 1, 0])),
            IntPoly::from_i64s(&[0, 1, 1])
        );
        // h-vector (1,1,3,-1) of f = (1,4,8,4)
        let p = delta_expand(&DeltaCoeffs::from_i64s(&[1, 1, 3, -1]));
        assert_eq!(p.coeffs(), big(&naive_expand(&[1, 1, 3, -1])).as_slice());
        assert_eq!(p, IntPoly::from_i64s(&[-1, 0, 4, 4]));
        assert_eq!(p.to_string(), "4x^3 + 4x^2 - 1");
    }

    #[test]
    fn monomial_to_delta_examples() {
        assert_eq!(
            monomial_to_delta(&IntPoly::from_i64s(&[0, 1, 0])),
            DeltaCoeffs::from_i64s(&[-1, 1, 0])
        );
        assert_eq!(
            monomial_to_delta(&IntPoly::from_i64s(&[1, 0])),
            DeltaCoeffs::from_i64s(&[-1, 1])
        );
        // x^2 in bound 3: -x^3 + (x+1) x^2
        let c = monomial_to_delta(&IntPoly::monomial(2, 3));
        assert_eq!(c, DeltaCoeffs::from_i64s(&[-1, 1, 0, 0]));
        assert_eq!(naive_expand(&[-1, 1, 0, 0]), vec![0, 0, 1, 0]);
    }

    #[test]
    fn change_of_basis_matches_symbolic_expansion() {
        // x^k ((x+1) - x)^(d-k), expanded term by term, equals x^k.
        for d in 0..=10usize {
            for k in 0..=d {
                let c = monomial_to_delta(&IntPoly::monomial(k, d));
                let mut expect = vec![0i128; d + 1];
                for i in 0..=(d - k) {
                    let sgn = if (d - k - i) % 2 == 0 { 1 } else { -1 };
                    let binom: i128 = (0..i as i128).fold(1, |acc, j| acc * ((d - k) as i128 - j) / (j + 1));
                    expect[i] = sgn * binom;
                }
                assert_eq!(c.coeffs(), big(&expect).as_slice(), "d={d} k={k}");
                let mut mono = vec![0i128; d + 1];
                mono[k] = 1;
                assert_eq!(naive_expand(&expect), mono);
            }
        }
    }

    #[test]
    fn shift_and_negate() {
        let p = IntPoly::from_i64s(&[1, 2, 3]);
        // p(x+1) = 3x^2 + 8x + 6
        assert_eq!(p.shift_arg(1), IntPoly::from_i64s(&[6, 8, 3]));
        assert_eq!(p.negate_arg(), IntPoly::from_i64s(&[1, -2, 3]));
        assert_eq!(p.reversed(), IntPoly::from_i64s(&[3, 2, 1]));
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(17));
    }

    #[test]
    fn rebound_refuses_to_truncate() {
        let p = IntPoly::from_i64s(&[1, 0, 2]);
        assert!(p.clone().with_degree_bound(1).is_err());
        assert_eq!(p.with_degree_bound(4).unwrap().degree_bound(), 4);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
        assert_eq!(multi_binomial(&[2, 3], &[1, 2]), BigInt::from(6));
    }

    #[test]
    fn multi_index_order() {
        let all: Vec<_> = multi_indices(&[1, 2]).collect();
        assert_eq!(
            all,
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 1], vec![1, 2]]
        );
        assert_eq!(multi_indices(&[]).count(), 1);
    }

    fn mpoly(bound: &[u32], terms: &[(&[u32], i64)]) -> MPoly {
        MPoly::from_terms(bound, terms.iter().map(|(k, c)| (k.to_vec(), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn mdelta_expand_examples() {
        let c = MDeltaCoeffs::new(&[1], [(vec![0], BigInt::one())]).unwrap();
        assert_eq!(mdelta_expand(&c), mpoly(&[1], &[(&[0], 1), (&[1], 1)]));

        let c = MDeltaCoeffs::new(&[1, 1], [(vec![0, 0], BigInt::one())]).unwrap();
        assert_eq!(
            mdelta_expand(&c),
            mpoly(&[1, 1], &[(&[0, 0], 1), (&[0, 1], 1), (&[1, 0], 1), (&[1, 1], 1)])
        );

        // x1 x2 - (x1+1)(x2+1), oracle by direct product
        let c = MDeltaCoeffs::new(
            &[1, 1],
            [(vec![1, 1], BigInt::one()), (vec![0, 0], BigInt::from(-1))],
        )
        .unwrap();
        let prod = &MPoly::linear_power(2, 0, 1, 1, 1) * &MPoly::linear_power(2, 1, 1, 1, 1);
        let expect = &mpoly(&[1, 1], &[(&[1, 1], 1)]) - &prod;
        assert_eq!(mdelta_expand(&c), expect);
        assert_eq!(expect, mpoly(&[1, 1], &[(&[0, 0], -1), (&[0, 1], -1), (&[1, 0], -1)]));
    }

    #[test]
    fn mmonomial_to_delta_examples() {
        let c = mmonomial_to_delta(&mpoly(&[1], &[(&[1], 1)]), &[1]).unwrap();
        assert_eq!(c.iter().count(), 1);
        assert_eq!(c.coeff(&[1]), BigInt::one());

        let c = mmonomial_to_delta(&mpoly(&[1], &[(&[0], 1)]), &[1]).unwrap();
        assert_eq!(c.coeff(&[0]), BigInt::one());
        assert_eq!(c.coeff(&[1]), BigInt::from(-1));

        // x1 x2 with a = (2,1): rest = (1,0), so b' in {(1,1), (2,1)}:
        // (x+1)^(1,0) x^(1,1) - x^(2,1) = x1 x2.
        let p = mpoly(&[2, 1], &[(&[1, 1], 1)]);
        let c = mmonomial_to_delta(&p, &[2, 1]).unwrap();
        assert_eq!(c.coeff(&[1, 1]), BigInt::one());
        assert_eq!(c.coeff(&[2, 1]), BigInt::from(-1));
        assert_eq!(c.iter().count(), 2);
        assert_eq!(mdelta_expand(&c), p);
    }

    #[test]
    fn out_of_range_keys_rejected() {
        assert!(matches!(
            MDeltaCoeffs::new(&[1, 1], [(vec![2, 0], BigInt::one())]),
            Err(Error::KeyOutOfRange { .. })
        ));
        let p = mpoly(&[2], &[(&[2], 1)]);
        assert!(mmonomial_to_delta(&p, &[1]).is_err());
    }

    #[test]
    fn specialize_collapses_variables() {
        let p = &MPoly::linear_power(2, 0, 1, 1, 1) * &MPoly::linear_power(2, 1, 1, 1, 2);
        assert_eq!(p.specialize(), IntPoly::linear_power(1, 1, 3));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn univariate_round_trip(coeffs in prop::collection::vec(-1_000_000i64..=1_000_000, 1..=13)) {
            let p = IntPoly::from_i64s(&coeffs);
            prop_assert_eq!(delta_expand(&monomial_to_delta(&p)), p.clone());
            let c = DeltaCoeffs::from_i64s(&coeffs);
            prop_assert_eq!(monomial_to_delta(&delta_expand(&c)), c);
            let as_i128: Vec<i128> = coeffs.iter().map(|&x| x as i128).collect();
            prop_assert_eq!(delta_expand(&DeltaCoeffs::from_i64s(&coeffs)).coeffs().to_vec(), big(&naive_expand(&as_i128)));
        }

        #[test]
        fn univariate_linearity(
            pair in (1usize..=12).prop_flat_map(|n| (
                prop::collection::vec(-1000i64..=1000, n),
                prop::collection::vec(-1000i64..=1000, n),
            )),
            s in -50i64..=50,
        ) {
            let (a, b) = pair;
            let pa = IntPoly::from_i64s(&a);
            let pb = IntPoly::from_i64s(&b);
            let lhs = monomial_to_delta(&(&pa.scale(&BigInt::from(s)) + &pb));
            let ca = monomial_to_delta(&pa);
            let cb = monomial_to_delta(&pb);
            let rhs: Vec<BigInt> = ca.coeffs().iter().zip(cb.coeffs()).map(|(x, y)| x * s + y).collect();
            prop_assert_eq!(lhs.coeffs(), rhs.as_slice());
        }

        #[test]
        fn multivariate_round_trip(
            case in prop::collection::vec(0u32..=3, 1..=4).prop_flat_map(|bound| {
                let size: usize = bound.iter().map(|&b| b as usize + 1).product();
                (Just(bound), prop::collection::vec(-1_000_000i64..=1_000_000, size))
            })
        ) {
            let (bound, values) = case;
            let terms: Vec<_> = multi_indices(&bound).zip(&values).map(|(k, &v)| (k, BigInt::from(v))).collect();
            let p = MPoly::from_terms(&bound, terms.clone()).unwrap();
            prop_assert_eq!(mdelta_expand(&mmonomial_to_delta(&p, &bound).unwrap()), p);
            let c = MDeltaCoeffs::new(&bound, terms).unwrap();
            let back = mmonomial_to_delta(&mdelta_expand(&c), &bound).unwrap();
            prop_assert_eq!(back, c);
        }
    }
}
