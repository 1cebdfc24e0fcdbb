//! Exact Laurent polynomial arithmetic over arbitrary-precision integers.
//!
//! [`LaurentPoly`] is the universal value type of the crate: a sparse
//! exponent -> coefficient map in the variable `q`, exponents in `Z`.
//! [`BivarPoly`] layers a second Laurent variable `s` on top, with
//! `LaurentPoly` coefficients. [`Monomial`] carries the signed powers
//! (`-q`, `q^k`, ...) used as substitution values.
//!
//! All values are canonical (no stored zero coefficient) and immutable
//! after construction, so structural equality is exact equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in `q` with `BigInt` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::term(1, 0)
    }

    /// The monomial `c * q^e` (canonicalized: `c = 0` yields zero).
    pub fn monomial(c: BigInt, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// Convenience for small integer coefficients.
    pub fn term(c: i64, e: i64) -> Self {
        Self::monomial(BigInt::from(c), e)
    }

    /// Build from arbitrary (exponent, coefficient) pairs; duplicates are
    /// summed and zeros stripped.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in iter {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// `self * c * q^e`.
    pub fn mul_term(&self, c: &BigInt, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&te, tc)| (te + e, tc * c)).collect(),
        }
    }

    /// `self * q^e`.
    pub fn shift(&self, e: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&te, tc)| (te + e, tc.clone())).collect(),
        }
    }

    /// Exact division in the Laurent ring, by iterated elimination of the
    /// lowest term. Returns `NonzeroRemainder` unless `d` divides `self`.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_min = d.min_exp().unwrap();
        let d_lead = d.terms.get(&d_min).unwrap();
        // Exponent bound for any quotient term of an exact division.
        let q_max = self.max_exp().unwrap() - d.max_exp().unwrap();
        let mut rem = self.terms.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((&r_min, r_lead)) = rem.first_key_value() {
            let e = r_min - d_min;
            if e > q_max || !(r_lead % d_lead).is_zero() {
                return Err(Error::NonzeroRemainder);
            }
            let c = r_lead / d_lead;
            for (&de, dc) in &d.terms {
                let te = de + e;
                let entry = rem.entry(te).or_insert_with(BigInt::zero);
                *entry -= &c * dc;
                if entry.is_zero() {
                    rem.remove(&te);
                }
            }
            quot.add_term(e, &c);
        }
        Ok(quot)
    }

    /// The substitution `q -> q^m`, applied exponentwise. `m` must be nonzero.
    pub fn substitute_power(&self, m: i64) -> Self {
        assert!(m != 0, "substitute_power requires m != 0");
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (m * e, c.clone())).collect(),
        }
    }

    /// Exact rational value at `q = v`, `v` a nonzero integer.
    pub fn eval_int(&self, v: i64) -> BigRational {
        assert!(v != 0, "eval_int requires a nonzero point");
        let vq = BigInt::from(v);
        let mut num = BigRational::zero();
        for (&e, c) in &self.terms {
            let p = vq.pow(e.unsigned_abs() as u32);
            let t = if e >= 0 {
                BigRational::from(p * c)
            } else {
                BigRational::new(c.clone(), p)
            };
            num += t;
        }
        num
    }

    /// True iff the polynomial is a single term `c * q^e`; returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            let (&e, c) = self.terms.iter().next().unwrap();
            Some((c, e))
        } else {
            None
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            let neg = -c;
            out.add_term(e, &neg);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

/// Signed power of `q`: the value `sign * q^exponent`, never zero.
/// Carrier for substitutions like `s = -q`, `a = -q^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    sign: i8,
    exponent: i64,
}

impl Monomial {
    pub fn new(sign: i8, exponent: i64) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        Monomial { sign, exponent }
    }

    /// `+q^e`.
    pub fn q_pow(e: i64) -> Self {
        Monomial { sign: 1, exponent: e }
    }

    /// `-q^e`.
    pub fn neg_q_pow(e: i64) -> Self {
        Monomial { sign: -1, exponent: e }
    }

    pub fn one() -> Self {
        Monomial { sign: 1, exponent: 0 }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// `(sign * q^e)^k`; `k` may be negative.
    pub fn pow(&self, k: i64) -> Self {
        Monomial {
            sign: if self.sign == -1 && k.rem_euclid(2) == 1 { -1 } else { 1 },
            exponent: self.exponent * k,
        }
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::term(self.sign as i64, self.exponent)
    }
}

/// A Laurent polynomial in `s` whose coefficients are Laurent polynomials
/// in `q`. Sparse s-exponent -> coefficient map; no stored zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<i64, LaurentPoly>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial_s(LaurentPoly::one(), 0)
    }

    /// `coeff * s^k`.
    pub fn monomial_s(coeff: LaurentPoly, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(k, coeff);
        }
        BivarPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, LaurentPoly)>>(iter: I) -> Self {
        let mut out = BivarPoly::zero();
        for (k, c) in iter {
            out.add_s_term(k, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// s-terms in ascending s-exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn s_coeff(&self, k: i64) -> LaurentPoly {
        self.terms.get(&k).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    fn add_s_term(&mut self, k: i64, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    /// Multiply every s-coefficient by the q-polynomial `p`.
    pub fn scale_q(&self, p: &LaurentPoly) -> Self {
        let mut out = BivarPoly::zero();
        for (&k, c) in &self.terms {
            out.add_s_term(k, &(c * p));
        }
        out
    }

    /// `self * c * q^e * s^k`.
    pub fn mul_term(&self, c: &LaurentPoly, e: i64, k: i64) -> Self {
        let mut out = BivarPoly::zero();
        for (&sk, sc) in &self.terms {
            out.add_s_term(sk + k, &(sc * c).shift(e));
        }
        out
    }

    /// Substitute `s` by the monomial `m`: `s^k -> sign^k * q^{k*exponent}`.
    pub fn substitute_s(&self, m: Monomial) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&k, c) in &self.terms {
            let mk = m.pow(k);
            out = &out + &c.mul_term(&BigInt::from(mk.sign() as i64), mk.exponent());
        }
        out
    }

    /// The substitution `s -> q^j * s`: the coefficient of `s^k` is
    /// multiplied by `q^{j*k}`.
    pub fn shift_s(&self, j: i64) -> Self {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, c.shift(j * k))).collect(),
        }
    }

    /// Apply `q -> q^m` to every coefficient.
    pub fn substitute_power_q(&self, m: i64) -> Self {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, c.substitute_power(m))).collect(),
        }
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_s_term(k, c);
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_s_term(k, &(-c));
        }
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&k1, c1) in &self.terms {
            for (&k2, c2) in &rhs.terms {
                out.add_s_term(k1 + k2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

fn fmt_var_pow(f: &mut fmt::Formatter<'_>, var: &str, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, c: &BigInt, e: i64, first: bool) -> fmt::Result {
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
    if mag.is_one() && e != 0 {
        fmt_var_pow(f, "q", e)
    } else {
        write!(f, "{mag}")?;
        if e != 0 {
            write!(f, "*")?;
            fmt_var_pow(f, "q", e)
        } else {
            Ok(())
        }
    }
}

/// Text form: terms in ascending exponent, e.g. `1 - q + 2*q^3`, `q^-1 + q`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            fmt_term(f, c, e, i == 0)?;
        }
        Ok(())
    }
}

/// s-major text form, e.g. `(q^2)*s^-1 + (1 + q)`.
impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if k != 0 {
                write!(f, "*")?;
                fmt_var_pow(f, "s", k)?;
            }
        }
        Ok(())
    }
}
