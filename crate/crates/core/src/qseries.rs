//! Exact polynomial arithmetic in `q` and the closed-form q-series on the
//! algebraic side of the identities: q-shifted factorials `(q^a;q)_k`,
//! Gaussian binomial coefficients, triangle numbers, and the two summation
//! identities themselves.
//!
//! Everything here is computed over arbitrary-precision integers; there is no
//! truncation order and no floating point anywhere.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `q` with arbitrary-precision integer coefficients, stored
/// sparsely as an exponent -> coefficient map.
///
/// Invariants: no stored coefficient is zero and exponents are distinct, so
/// structural equality coincides with polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPoly {
    terms: BTreeMap<u64, BigInt>,
}

impl QPoly {
    /// The zero polynomial (empty term set).
    pub fn zero() -> Self {
        QPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QPoly::monomial(0)
    }

    /// The monomial `q^exp` with coefficient 1.
    pub fn monomial(exp: u64) -> Self {
        QPoly::term(1, exp)
    }

    /// The single term `coeff * q^exp`; the zero polynomial when `coeff` is 0.
    pub fn term(coeff: impl Into<BigInt>, exp: u64) -> Self {
        let mut poly = QPoly::zero();
        poly.add_term(exp, coeff.into());
        poly
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (u64, C)>) -> Self {
        let mut poly = QPoly::zero();
        for (exp, coeff) in pairs {
            poly.add_term(exp, coeff.into());
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// Degree of the polynomial, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^exp` (zero when the term is absent).
    pub fn coeff(&self, exp: u64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Adds `coeff * q^exp` in place, keeping the no-zero-coefficient invariant.
    pub fn add_term(&mut self, exp: u64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Evaluates the polynomial at `q = 1` (the sum of all coefficients).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (exp, coeff) in &rhs.terms {
            self.add_term(*exp, coeff.clone());
        }
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        for (exp, coeff) in &rhs.terms {
            self.add_term(*exp, -coeff.clone());
        }
    }
}

impl Sub for QPoly {
    type Output = QPoly;

    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Mul<&QPoly> for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        &self * rhs
    }
}

impl MulAssign<&QPoly> for QPoly {
    fn mul_assign(&mut self, rhs: &QPoly) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for QPoly {
    /// Renders terms in ascending exponent order, e.g.
    /// `1 - q^7 - q^8 - q^9 + q^15 + q^16 + q^17 - q^24`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (exp, coeff)) in self.terms().enumerate() {
            if pos == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = coeff.abs();
            if exp == 0 {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                if exp == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

/// The i-th triangle number `i(i+1)/2` together with its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleNumber {
    pub index: u64,
    pub value: u64,
}

/// Returns the i-th triangle number.
pub fn triangle(i: u64) -> TriangleNumber {
    TriangleNumber {
        index: i,
        value: i * (i + 1) / 2,
    }
}

/// The shifted factorial `(q^a; q)_k = (1 - q^a)(1 - q^{a+1}) ... (1 - q^{a+k-1})`.
///
/// Returns 1 when `k = 0`. With `a = 0` and `k > 0` the first factor is
/// `1 - q^0 = 0`, so the product collapses to the zero polynomial.
pub fn pochhammer_shifted(a: u64, k: u64) -> QPoly {
    let mut product = QPoly::one();
    for t in 0..k {
        let factor = QPoly::one() - QPoly::monomial(a + t);
        product *= &factor;
        if product.is_zero() {
            break;
        }
    }
    product
}

/// The q-factorial `(q; q)_k`.
pub fn q_factorial(k: u64) -> QPoly {
    pochhammer_shifted(1, k)
}

/// The Gaussian binomial coefficient `[j k]_q`, computed with the
/// division-free Pascal recurrence `[n m] = [n-1 m-1] + q^m [n-1 m]`.
///
/// Returns 0 when `k > j`; the result has nonnegative coefficients and
/// degree `k(j-k)`.
pub fn gaussian(j: u64, k: u64) -> QPoly {
    if k > j {
        return QPoly::zero();
    }
    if k == 0 || k == j {
        return QPoly::one();
    }
    // Row n of the table holds [n m] for m = 0..=min(n, k).
    let mut row = vec![QPoly::one()];
    for n in 1..=j {
        let top = k.min(n);
        let mut next = Vec::with_capacity(top as usize + 1);
        for m in 0..=top {
            if m == 0 || m == n {
                next.push(QPoly::one());
            } else {
                let carried = QPoly::monomial(m) * &row[m as usize];
                next.push(&row[m as usize - 1] + &carried);
            }
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// The left-hand side of the key identity,
/// `sum_{k=0}^{j} (q^{i-k+1}; q)_k [j k]_q q^{(i-k)(j-k)}`,
/// as an exact polynomial. The identity asserts this equals 1 for
/// `0 <= j <= i`; callers with `j > i` are rejected.
pub fn key_identity_lhs(i: u64, j: u64) -> Result<QPoly> {
    if j > i {
        return Err(Error::ParameterRange(format!(
            "key identity requires j <= i, got i={i}, j={j}"
        )));
    }
    let mut sum = QPoly::zero();
    for k in 0..=j {
        let mut summand = pochhammer_shifted(i - k + 1, k);
        summand *= &gaussian(j, k);
        summand *= &QPoly::monomial((i - k) * (j - k));
        sum += &summand;
    }
    Ok(sum)
}

/// The left-hand side of the two-variable triangle-number identity after
/// clearing the denominator `(q)_i (q)_j`:
/// `sum_{m=0}^{min(i,j)} q^{T_{i+j-m} + T_m} [i m]_q [j m]_q (q; q)_m`.
pub fn lemma2_lhs_cleared(i: u64, j: u64) -> QPoly {
    let mut sum = QPoly::zero();
    for m in 0..=i.min(j) {
        let exp = triangle(i + j - m).value + triangle(m).value;
        let mut summand = QPoly::monomial(exp);
        summand *= &gaussian(i, m);
        summand *= &gaussian(j, m);
        summand *= &q_factorial(m);
        sum += &summand;
    }
    sum
}

/// The right-hand side of the same identity after clearing: `q^{T_i + T_j}`.
pub fn lemma2_rhs_cleared(i: u64, j: u64) -> QPoly {
    QPoly::monomial(triangle(i).value + triangle(j).value)
}
