//! Bivariate Laurent polynomials and rational functions in `(s, z)`:
//! `s` is the ground-field variable (square root of `q`), `z` the spectral
//! parameter of R-matrices.
//!
//! Values are kept fully reduced. The gcd of two bivariate polynomials is
//! computed the classical way: split off the `s`-content (a univariate gcd of
//! all `z`-coefficients), then run Euclid in `z` over the fraction field
//! `Q(s)` on the primitive parts and clear denominators (Gauss's lemma makes
//! the result polynomial again).

use crate::scalar::{write_term, LaurentPoly, Rat, RatFunc};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Laurent polynomial in `z` whose coefficients are Laurent polynomials in `s`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<i64, LaurentPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_scalar(LaurentPoly::one())
    }

    pub fn from_scalar(p: LaurentPoly) -> Self {
        let mut coeffs = BTreeMap::new();
        if !p.is_zero() {
            coeffs.insert(0, p);
        }
        Self { coeffs }
    }

    /// `p * z^e`.
    pub fn term(e: i64, p: LaurentPoly) -> Self {
        let mut coeffs = BTreeMap::new();
        if !p.is_zero() {
            coeffs.insert(e, p);
        }
        Self { coeffs }
    }

    pub fn z() -> Self {
        Self::term(1, LaurentPoly::one())
    }

    /// `z - root`.
    pub fn z_minus(root: LaurentPoly) -> Self {
        &Self::z() - &Self::from_scalar(root)
    }

    pub fn add_term(&mut self, e: i64, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(LaurentPoly::zero);
        *entry = &*entry + p;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(LaurentPoly::is_one)
    }

    pub fn min_z(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_z(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, e: i64) -> LaurentPoly {
        self.coeffs.get(&e).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        self.coeffs.iter().map(|(e, p)| (*e, p))
    }

    pub fn is_z_free(&self) -> bool {
        self.coeffs.keys().all(|e| *e == 0)
    }

    pub fn mul_unit(&self, z_shift: i64, s_shift: i64, c: &Rat) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, p)| (e + z_shift, p.mul_unit(s_shift, c)))
                .collect(),
        }
    }

    /// Substitute `s -> s^-1` (z untouched).
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, p)| (*e, p.bar())).collect(),
        }
    }

    /// Substitute `z -> u * z^dir` where `u` is a Laurent monomial in `s`
    /// times a rational constant, and `dir` is `1` or `-1`.
    pub fn subst_z(&self, u_exp: i64, u_coeff: &Rat, dir: i64) -> Self {
        assert!(dir == 1 || dir == -1);
        let mut out = Self::zero();
        for (e, p) in &self.coeffs {
            let c = num_traits::pow::pow(u_coeff.clone(), e.unsigned_abs() as usize);
            let c = if *e >= 0 { c } else { c.recip() };
            out.add_term(e * dir, &p.mul_unit(u_exp * e, &c));
        }
        out
    }

    /// Evaluate `z` at a rational function of `s`.
    pub fn eval_z(&self, x: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (e, p) in &self.coeffs {
            acc = &acc + &(&RatFunc::from_poly(p.clone()) * &x.pow(*e));
        }
        acc
    }

    /// The `s`-content: monic gcd of all `z`-coefficients.
    fn content(&self) -> LaurentPoly {
        let mut g = LaurentPoly::zero();
        for p in self.coeffs.values() {
            g = g.gcd(p);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_content(&self, c: &LaurentPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, p)| (*e, p.div_exact(c))).collect(),
        }
    }

    /// Dense view as a polynomial in `z` over `Q(s)`, lowest power shifted to 0.
    fn to_field_dense(&self) -> (i64, Vec<RatFunc>) {
        if self.is_zero() {
            return (0, vec![]);
        }
        let lo = self.min_z().unwrap();
        let hi = self.max_z().unwrap();
        let mut v = vec![RatFunc::zero(); (hi - lo + 1) as usize];
        for (e, p) in &self.coeffs {
            v[(e - lo) as usize] = RatFunc::from_poly(p.clone());
        }
        (lo, v)
    }

    fn from_field_dense(shift: i64, v: &[RatFunc]) -> Result<Self, ()> {
        let mut out = Self::zero();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.den().is_one() {
                return Err(());
            }
            out.add_term(shift + i as i64, c.num());
        }
        Ok(out)
    }

    /// Clear `Q(s)`-denominators of a dense `z`-polynomial and strip content,
    /// giving a primitive `BiPoly` (up to unit).
    fn primitive_from_field(v: &[RatFunc]) -> Self {
        let mut mult = LaurentPoly::one();
        for c in v {
            if c.is_zero() {
                continue;
            }
            // lcm(mult, den) = mult * den / gcd
            let g = mult.gcd(c.den());
            mult = &mult * &c.den().div_exact(&g);
        }
        let mut out = Self::zero();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let lifted = &(&mult * c.num()).div_exact(c.den());
            out.add_term(i as i64, lifted);
        }
        let cont = out.content();
        out.div_content(&cont)
    }

    /// Gcd, canonical up to the unit normalization of [`BiPoly::unit_normalized`].
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.unit_normalized();
        }
        if other.is_zero() {
            return self.unit_normalized();
        }
        let ca = self.content();
        let cb = other.content();
        let cg = ca.gcd(&cb);
        let (_, mut a) = self.div_content(&ca).to_field_dense();
        let (_, mut b) = other.div_content(&cb).to_field_dense();
        while !b.is_empty() {
            let r = field_rem(&a, &b);
            a = b;
            b = r;
        }
        let prim = Self::primitive_from_field(&a);
        (&Self::from_scalar(cg) * &prim).unit_normalized()
    }

    /// Exact division (panics if not exact).
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "zero divisor");
        if self.is_zero() {
            return Self::zero();
        }
        let (sa, a) = self.to_field_dense();
        let (sd, dv) = d.to_field_dense();
        let (q, r) = field_divmod(&a, &dv);
        assert!(r.iter().all(RatFunc::is_zero), "inexact bivariate division");
        Self::from_field_dense(sa - sd, &q).expect("inexact bivariate division")
    }

    /// Canonical representative modulo units `c*s^a*z^b`: lowest `z`-power 0,
    /// lowest `s`-power 0, coefficient of the (max z, max s) term equal to 1.
    pub fn unit_normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let z_lo = self.min_z().unwrap();
        let s_lo = self.coeffs.values().map(|p| p.min_exp().unwrap()).min().unwrap();
        let lead = self.coeffs.values().next_back().unwrap().leading_coeff();
        self.mul_unit(-z_lo, -s_lo, &lead.recip())
    }

    /// Same normalization as `unit_normalized`, also returning the unit
    /// `(z_shift, s_shift, c)` that was applied, i.e. `norm = self * c*s^a*z^b`.
    pub fn unit_normalized_with(&self) -> (Self, (i64, i64, Rat)) {
        assert!(!self.is_zero());
        let z_lo = self.min_z().unwrap();
        let s_lo = self.coeffs.values().map(|p| p.min_exp().unwrap()).min().unwrap();
        let c = self.coeffs.values().next_back().unwrap().leading_coeff().recip();
        (self.mul_unit(-z_lo, -s_lo, &c), (-z_lo, -s_lo, c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

fn field_rem(a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
    let (_, r) = field_divmod(a, b);
    match r.iter().rposition(|c| !c.is_zero()) {
        None => vec![],
        Some(h) => {
            let lo = r.iter().position(|c| !c.is_zero()).unwrap();
            r[lo..=h].to_vec()
        }
    }
}

fn field_divmod(a: &[RatFunc], b: &[RatFunc]) -> (Vec<RatFunc>, Vec<RatFunc>) {
    let db = b.len() - 1;
    assert!(!b[db].is_zero());
    let mut r: Vec<RatFunc> = a.to_vec();
    if a.len() < b.len() {
        return (vec![RatFunc::zero()], r);
    }
    let mut q = vec![RatFunc::zero(); a.len() - db];
    for i in (db..a.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let f = &r[i] / &b[db];
        q[i - db] = f.clone();
        for j in 0..=db {
            let t = &f * &b[j];
            r[i - db + j] = &r[i - db + j] - &t;
        }
    }
    (q, r)
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: Self) -> BiPoly {
        let mut out = self.clone();
        for (e, p) in rhs.coeffs.iter() {
            out.add_term(*e, p);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: Self) -> BiPoly {
        let mut out = self.clone();
        for (e, p) in rhs.coeffs.iter() {
            out.add_term(*e, &-p);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: Self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (e1, p1) in self.coeffs.iter() {
            for (e2, p2) in rhs.coeffs.iter() {
                out.add_term(e1 + e2, &(p1 * p2));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            coeffs: self.coeffs.iter().map(|(e, p)| (*e, -p)).collect(),
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Terms sorted by z-degree descending, then s-degree ascending; this
        // yields "z - s^2" and "1 - s^2" in the shapes the output contract uses.
        let mut first = true;
        for (ze, p) in self.coeffs.iter().rev() {
            for (se, c) in p.iter() {
                write_term(f, &mut first, c, &[("z", *ze), ("s", se)])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Reduced rational function in `(s, z)`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiRat {
    num: BiPoly,
    den: BiPoly,
}

impl BiRat {
    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        assert!(!den.is_zero(), "zero divisor");
        let mut out = Self { num, den };
        out.reduce();
        out
    }

    pub fn zero() -> Self {
        Self { num: BiPoly::zero(), den: BiPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: BiPoly::one(), den: BiPoly::one() }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        Self { num: p, den: BiPoly::one() }
    }

    pub fn from_ratfunc(f: &RatFunc) -> Self {
        Self {
            num: BiPoly::from_scalar(f.num().clone()),
            den: BiPoly::from_scalar(f.den().clone()),
        }
    }

    pub fn from_scalar(p: LaurentPoly) -> Self {
        Self::from_poly(BiPoly::from_scalar(p))
    }

    pub fn z() -> Self {
        Self::from_poly(BiPoly::z())
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_z_free(&self) -> bool {
        self.num.is_z_free() && self.den.is_z_free()
    }

    /// Convert to a rational function of `s` alone; panics when `z` occurs.
    pub fn to_ratfunc(&self) -> RatFunc {
        assert!(self.is_z_free(), "value depends on z");
        RatFunc::new(self.num.coeff(0), self.den.coeff(0))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = BiPoly::one();
            return;
        }
        if !self.den.is_one() {
            let g = self.num.gcd(&self.den);
            if !g.is_one() {
                self.num = self.num.div_exact(&g);
                self.den = self.den.div_exact(&g);
            }
        }
        let (den, (zs, ss, c)) = self.den.unit_normalized_with();
        self.den = den;
        self.num = self.num.mul_unit(zs, ss, &c);
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "zero divisor");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar())
    }

    /// Substitute `z -> c*s^e * z^dir`.
    pub fn subst_z(&self, u_exp: i64, u_coeff: &Rat, dir: i64) -> Self {
        Self::new(
            self.num.subst_z(u_exp, u_coeff, dir),
            self.den.subst_z(u_exp, u_coeff, dir),
        )
    }

    /// Evaluate `z` at a rational function of `s`.
    pub fn eval_z(&self, x: &RatFunc) -> RatFunc {
        let d = self.den.eval_z(x);
        assert!(!d.is_zero(), "evaluation hits a pole");
        &self.num.eval_z(x) / &d
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

impl Add for &BiRat {
    type Output = BiRat;
    fn add(self, rhs: Self) -> BiRat {
        BiRat::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &BiRat {
    type Output = BiRat;
    fn sub(self, rhs: Self) -> BiRat {
        BiRat::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &BiRat {
    type Output = BiRat;
    fn mul(self, rhs: Self) -> BiRat {
        if self.is_zero() || rhs.is_zero() {
            return BiRat::zero();
        }
        BiRat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &BiRat {
    type Output = BiRat;
    fn div(self, rhs: Self) -> BiRat {
        assert!(!rhs.is_zero(), "zero divisor");
        BiRat::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &BiRat {
    type Output = BiRat;
    fn neg(self) -> BiRat {
        BiRat { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for BiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            let many = self.num.iter().map(|(_, p)| p.iter().count()).sum::<usize>() > 1;
            if many {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for BiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
