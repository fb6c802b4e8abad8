//! Exact arithmetic in one variable `s` (a square root of `q`, so `q = s^2`)
//! over the rationals: sparse Laurent polynomials and reduced rational
//! functions. This is the ground field for every module matrix in the crate.
//!
//! Canonical forms are deterministic so that printed output is reproducible
//! byte-for-byte:
//! * `LaurentPoly` stores no zero coefficients, keyed by exponent in a
//!   `BTreeMap` (sorted).
//! * `RatFunc` keeps `gcd(num, den)` trivial, the denominator with lowest
//!   exponent 0 and leading coefficient 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Sparse Laurent polynomial in `s` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rat::one())
    }

    /// `c * s^e`.
    pub fn monomial(e: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `s^e`.
    pub fn s_pow(e: i64) -> Self {
        Self::monomial(e, Rat::one())
    }

    /// `(-s)^e` — the sign pattern that pervades the R-matrix formulas.
    pub fn neg_s_pow(e: i64) -> Self {
        let c = if e.rem_euclid(2) == 0 { Rat::one() } else { -Rat::one() };
        Self::monomial(e, c)
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// `Some((e, c))` when the polynomial is the single term `c*s^e`.
    pub fn as_monomial(&self) -> Option<(i64, &Rat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, e: i64) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.max_exp().map(|e| self.coeff(e)).unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Multiply by the unit `c * s^e`.
    pub fn mul_unit(&self, e: i64, c: &Rat) -> Self {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            let w = v * c;
            if !w.is_zero() {
                terms.insert(k + e, w);
            }
        }
        Self { terms }
    }

    /// Substitute `s -> s^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at a rational value of `s` (used by grid-based identity checks).
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            acc += c * rat_pow(x, *e);
        }
        acc
    }

    /// Dense coefficient vector after shifting the lowest exponent to 0.
    /// Returns `(shift, coeffs)` with `coeffs[0] != 0`.
    fn to_dense(&self) -> (i64, Vec<Rat>) {
        if self.is_zero() {
            return (0, vec![]);
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(shift: i64, v: &[Rat]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (shift + i as i64, c.clone())))
    }

    /// Monic gcd with lowest exponent 0 (unique canonical representative).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.unit_normalized();
        }
        if other.is_zero() {
            return self.unit_normalized();
        }
        let (_, da) = self.to_dense();
        let (_, db) = other.to_dense();
        let mut a = dense_to_primitive_int(&da);
        let mut b = dense_to_primitive_int(&db);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        // Primitive polynomials: a constant operand forces a trivial gcd.
        if b.len() == 1 {
            return Self::one();
        }
        // Modular gcd first: images modulo word-size primes certify
        // coprimality immediately and reconstruct nontrivial gcds by CRT
        // without any intermediate coefficient growth.
        if let Some(g) = int_gcd_modular(&a, &b) {
            let terms = g
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, Rat::from_integer(c.clone())));
            return Self::from_terms(terms).unit_normalized();
        }
        // Fallback: primitive-part pseudo-remainder Euclid over the integers.
        while !b.is_empty() {
            let r = int_pseudo_rem(&a, &b);
            a = b;
            b = primitive_int(r);
        }
        let terms = a
            .iter()
            .enumerate()
            .map(|(i, c)| (i as i64, Rat::from_integer(c.clone())));
        Self::from_terms(terms).unit_normalized()
    }

    /// Canonical representative modulo units `c*s^k`: lowest exponent 0,
    /// leading coefficient 1. Zero maps to zero.
    pub fn unit_normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lo = self.min_exp().unwrap();
        let lead = self.leading_coeff();
        self.mul_unit(-lo, &lead.recip())
    }

    /// Exact division; panics if the division is not exact (internal use only).
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "zero divisor");
        if self.is_zero() {
            return Self::zero();
        }
        let (sa, a) = self.to_dense();
        let (sd, dv) = d.to_dense();
        let (q, r) = dense_divmod(&a, &dv);
        assert!(r.iter().all(Rat::is_zero), "inexact Laurent division");
        Self::from_dense(sa - sd, &q)
    }
}

fn rat_pow(x: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow::pow(x.clone(), e as usize)
    } else {
        num_traits::pow::pow(x.clone().recip(), (-e) as usize)
    }
}

/// Clear denominators and strip the integer content, yielding a primitive
/// integer coefficient vector (trimmed, leading coefficient nonzero).
fn dense_to_primitive_int(v: &[Rat]) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    let mut lcm = BigInt::from(1);
    for c in v {
        if !c.is_zero() {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
    }
    primitive_int(v.iter().map(|c| (c * &Rat::from_integer(lcm.clone())).to_integer()).collect())
}

/// Divide by the gcd of the coefficients and trim trailing zeros.
fn primitive_int(mut v: Vec<num_bigint::BigInt>) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    use num_traits::Zero as _;
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    let mut g = BigInt::from(0);
    for c in &v {
        g = num_integer::Integer::gcd(&g, c);
        if g == BigInt::from(1) {
            return v;
        }
    }
    if g.is_zero() {
        return v;
    }
    v.iter().map(|c| c / &g).collect()
}

/// Word-size primes used for modular gcd images (verified prime at startup).
fn gcd_primes() -> &'static [u64] {
    use std::sync::OnceLock;
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let is_prime = |n: u64| {
            let mut d = 3;
            while d * d <= n {
                if n % d == 0 {
                    return false;
                }
                d += 2;
            }
            n % 2 != 0
        };
        (1_000_000_001..).step_by(2).filter(|&n| is_prime(n)).take(24).collect()
    })
}

/// Fermat inverse mod a word-size prime.
fn mod_p_inv(x: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (x as u128 % p as u128, p - 2, 1u128);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

/// Monic polynomial gcd over `Z/p` (dense ascending coefficients, `p` prime).
fn mod_p_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    let inv = |x: u64| mod_p_inv(x, p);
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // Reduce a mod b in place.
        let db = b.len() - 1;
        let li = inv(b[db]);
        while a.len() > db {
            let i = a.len() - 1;
            if a[i] == 0 {
                a.pop();
                continue;
            }
            let f = (a[i] as u128 * li as u128 % p as u128) as u64;
            for j in 0..=db {
                let t = f as u128 * b[j] as u128 % p as u128;
                let idx = i - db + j;
                a[idx] = ((a[idx] as u128 + p as u128 - t) % p as u128) as u64;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
        trim(&mut b);
    }
    // Monic normalization.
    if let Some(&lead) = a.last() {
        let li = inv(lead);
        for c in a.iter_mut() {
            *c = (*c as u128 * li as u128 % p as u128) as u64;
        }
    }
    a
}

/// Modular gcd of primitive integer polynomials: combine monic gcd images
/// modulo word-size primes by CRT (scaled by the gcd of the leading
/// coefficients), accept once the balanced lift stabilizes and divides both
/// inputs. A degree-0 image proves coprimality outright. Returns `None` if
/// the prime budget runs out (caller falls back to pseudo-remainder Euclid).
fn int_gcd_modular(
    a: &[num_bigint::BigInt],
    b: &[num_bigint::BigInt],
) -> Option<Vec<num_bigint::BigInt>> {
    use num_bigint::BigInt;
    use num_integer::Integer as _;
    use num_traits::{ToPrimitive as _, Zero as _};
    let lc_g = a.last().unwrap().gcd(b.last().unwrap());
    let to_mod = |v: &[BigInt], p: u64| -> Vec<u64> {
        let bp = BigInt::from(p);
        v.iter().map(|c| c.mod_floor(&bp).to_u64().unwrap()).collect()
    };
    let divides = |v: &[BigInt], d: &[BigInt]| {
        let dv: Vec<Rat> = v.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let dd: Vec<Rat> = d.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let (_, r) = dense_divmod(&dv, &dd);
        r.iter().all(Rat::is_zero)
    };
    // CRT accumulator: coefficients mod `modulus`, plus the previous balanced
    // lift for the stabilization test.
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::from(1);
    let mut prev_lift: Option<Vec<BigInt>> = None;
    for &p in gcd_primes() {
        let bp = BigInt::from(p);
        if a.last().unwrap().mod_floor(&bp).is_zero()
            || b.last().unwrap().mod_floor(&bp).is_zero()
        {
            continue; // leading coefficient collapses: unusable image
        }
        let g = mod_p_gcd(to_mod(a, p), to_mod(b, p), p);
        if g.len() == 1 {
            // Coprime mod p forces coprime over the integers.
            return Some(vec![BigInt::from(1)]);
        }
        let scale = lc_g.mod_floor(&bp).to_u64().unwrap();
        let image: Vec<BigInt> = g
            .iter()
            .map(|&c| BigInt::from((c as u128 * scale as u128 % p as u128) as u64))
            .collect();
        if acc.is_empty() || image.len() < acc.len() {
            // First usable image, or all previous primes were unlucky
            // (their gcd degree was too high): restart from this image.
            acc = image;
            modulus = bp.clone();
            prev_lift = None;
        } else if image.len() > acc.len() {
            continue; // this prime is unlucky
        } else {
            // Incremental CRT per coefficient.
            let m_mod_p = modulus.mod_floor(&bp).to_u64().unwrap();
            let minv = BigInt::from(mod_p_inv(m_mod_p, p));
            for (x, r) in acc.iter_mut().zip(&image) {
                let delta = (r - &*x).mod_floor(&bp);
                let t = (delta * &minv).mod_floor(&bp);
                *x += &modulus * t;
            }
            modulus *= &bp;
        }
        // Balanced lift and stabilization test.
        let half = &modulus / 2;
        let lift: Vec<BigInt> = acc
            .iter()
            .map(|c| if c > &half { c - &modulus } else { c.clone() })
            .collect();
        if prev_lift.as_ref() == Some(&lift) {
            let cand = primitive_int(lift.clone());
            if !cand.is_empty() && divides(a, &cand) && divides(b, &cand) {
                return Some(cand);
            }
        }
        prev_lift = Some(lift);
    }
    None
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` over the integers.
fn int_pseudo_rem(
    a: &[num_bigint::BigInt],
    b: &[num_bigint::BigInt],
) -> Vec<num_bigint::BigInt> {
    use num_traits::Zero as _;
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let lead = &b[db];
    while r.len() > db {
        let i = r.len() - 1;
        if r[i].is_zero() {
            r.pop();
            continue;
        }
        let f = r[i].clone();
        for c in r.iter_mut() {
            *c *= lead;
        }
        for j in 0..=db {
            let t = &f * &b[j];
            r[i - db + j] -= t;
        }
        while r.last().map(|c| c.is_zero()).unwrap_or(false) {
            r.pop();
        }
    }
    // Strip the lower zero padding so the caller sees a plain vector.
    r
}

fn dense_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    assert!(!b[db].is_zero());
    let mut r: Vec<Rat> = a.to_vec();
    if a.len() < b.len() {
        return (vec![Rat::zero()], r);
    }
    let mut q = vec![Rat::zero(); a.len() - db];
    for i in (db..a.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let f = &r[i] / &b[db];
        q[i - db] = f.clone();
        for j in 0..=db {
            let t = &f * &b[j];
            r[i - db + j] -= t;
        }
    }
    (q, r)
}

impl<'a> Add for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a> Mul for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.iter() {
            write_term(f, &mut first, c, &[("s", e)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Shared term printer: signs, `a/b` coefficients, `sym^e` monomial parts.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    c: &Rat,
    vars: &[(&str, i64)],
) -> fmt::Result {
    let neg = c.is_negative();
    let mag = c.abs();
    if *first {
        if neg {
            write!(f, "-")?;
        }
        *first = false;
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let mut mono = String::new();
    for (sym, e) in vars {
        if *e == 0 {
            continue;
        }
        if !mono.is_empty() {
            mono.push('*');
        }
        if *e == 1 {
            mono.push_str(sym);
        } else {
            mono.push_str(&format!("{sym}^{e}"));
        }
    }
    if mono.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{mag}*{mono}")
    }
}

/// Reduced rational function in `s` over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero divisor");
        let mut out = Self { num, den };
        out.reduce();
        out
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn s_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::s_pow(e))
    }

    pub fn neg_s_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::neg_s_pow(e))
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some((e, c))` when the value is the unit `c*s^e`.
    pub fn as_monomial(&self) -> Option<(i64, Rat)> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_monomial().map(|(e, c)| (e, c.clone()))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        // Same-unit scaling: bring the denominator to lowest exponent 0,
        // leading coefficient 1.
        let lo = self.den.min_exp().unwrap();
        let lead = self.den.leading_coeff().recip();
        self.den = self.den.mul_unit(-lo, &lead);
        self.num = self.num.mul_unit(-lo, &lead);
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "zero divisor");
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Substitute `s -> s^-1`.
    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let d = self.den.eval(x);
        assert!(!d.is_zero(), "evaluation hits a pole of the denominator");
        self.num.eval(x) / d
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k >= 0 { self.clone() } else { self.recip() };
        let mut acc = Self::one();
        for _ in 0..k.abs() {
            acc = &acc * &base;
        }
        acc
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: Self) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: Self) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: Self) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: Self) -> RatFunc {
        assert!(!rhs.is_zero(), "zero divisor");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.terms.len() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_identity() {
        let a = LaurentPoly::from_terms([(1, rat_int(1)), (0, rat_int(1))]);
        let b = LaurentPoly::from_terms([(1, rat_int(1)), (0, rat_int(-1))]);
        let prod = &a * &b;
        assert_eq!(prod, LaurentPoly::from_terms([(2, rat_int(1)), (0, rat_int(-1))]));
    }

    #[test]
    fn cancellation() {
        // (z - q^2)/(z - q^2) -> 1 in the s-only analogue: (s - 2)/(s - 2).
        let p = LaurentPoly::from_terms([(1, rat_int(1)), (0, rat_int(-2))]);
        let f = RatFunc::new(p.clone(), p);
        assert!(f.is_one());
    }

    #[test]
    fn gcd_and_content() {
        // s^2*z - s^3 analogue: gcd of coefficients extracted by unit form.
        let p = LaurentPoly::from_terms([(3, rat_int(2)), (2, rat_int(-2))]);
        assert_eq!(p.unit_normalized(), LaurentPoly::from_terms([(1, rat_int(1)), (0, rat_int(-1))]));
    }

    #[test]
    fn display_form() {
        let p = LaurentPoly::from_terms([(0, rat_int(1)), (2, rat_int(-1))]);
        assert_eq!(p.to_string(), "1 - s^2");
        let f = RatFunc::new(
            LaurentPoly::from_terms([(0, rat(1, 2))]),
            LaurentPoly::from_terms([(0, rat_int(1)), (1, rat_int(1))]),
        );
        assert_eq!(f.to_string(), "(1/2)/(1 + s)");
    }
}
