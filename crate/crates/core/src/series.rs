//! Truncated power series in `z` with coefficients in `Q(s)`, used for the
//! universal-scalar prefactors built from q-Pochhammer products.

use crate::bipoly::BiRat;
use crate::scalar::{LaurentPoly, Rat, RatFunc};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Power series truncated at a fixed order `M` (inclusive): `coeffs[k]` is the
/// coefficient of `z^k`, `0 <= k <= M`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<RatFunc>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<RatFunc>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![RatFunc::zero(); order + 1];
        coeffs[0] = RatFunc::one();
        Self { coeffs }
    }

    pub fn constant(c: RatFunc, order: usize) -> Self {
        let mut coeffs = vec![RatFunc::zero(); order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &RatFunc {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Self::new(self.coeffs[..=order].to_vec())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let m = self.order().min(rhs.order());
        let mut out = vec![RatFunc::zero(); m + 1];
        for i in 0..=m {
            for j in 0..=(m - i) {
                if self.coeffs[i].is_zero() || rhs.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        Self::new(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Self {
        assert!(!self.coeffs[0].is_zero(), "series has no inverse (zero constant term)");
        let m = self.order();
        let c0 = self.coeffs[0].recip();
        let mut out = vec![RatFunc::zero(); m + 1];
        out[0] = c0.clone();
        for k in 1..=m {
            let mut acc = RatFunc::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() || out[k - j].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[j] * &out[k - j]);
            }
            out[k] = &(-&acc) * &c0;
        }
        Self::new(out)
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inverse())
    }

    /// Substitute `z -> u*z` for a scalar `u`.
    pub fn scale_z(&self, u: &RatFunc) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push(c * &u.pow(k as i64));
        }
        Self::new(out)
    }

    /// Expand a rational function of `z` as a power series at `z = 0`.
    /// The denominator must not vanish at `z = 0` (after clearing `z`-units
    /// this means a nonzero constant `z`-coefficient).
    pub fn from_birat(f: &BiRat, order: usize) -> Self {
        let num = f.num();
        let den = f.den();
        assert!(
            den.min_z() == Some(0) || den.is_zero(),
            "denominator vanishes at z = 0 (after canonicalization its lowest z-power is 0)"
        );
        let mut nser = vec![RatFunc::zero(); order + 1];
        for (e, p) in num.iter() {
            assert!(e >= 0, "numerator has a pole at z = 0");
            if (e as usize) <= order {
                nser[e as usize] = RatFunc::from_poly(p.clone());
            }
        }
        let mut dser = vec![RatFunc::zero(); order + 1];
        for (e, p) in den.iter() {
            if (e as usize) <= order {
                dser[e as usize] = RatFunc::from_poly(p.clone());
            }
        }
        Self::new(nser).div(&Self::new(dser))
    }
}

/// Truncation of the infinite product `((sign) * s^m * z ; s^step)_inf`,
/// i.e. `prod_{k>=0} (1 - (±s)^{m}·s^{step·k} z)` with the sign taken from
/// `negative_base` (base `-s` when true, `s` when false).
///
/// Computed from the functional recursion `f(z) = (1 - a z) f(s^step z)` with
/// `a = (±s)^m`, which gives `c_k = -a·s^{step(k-1)}·c_{k-1} / (1 - s^{step·k})`.
pub fn pochhammer_series(m: i64, negative_base: bool, step: i64, order: usize) -> PowerSeries {
    let sign = if negative_base && m.rem_euclid(2) == 1 { -1 } else { 1 };
    pochhammer_unit(sign, m, step, order)
}

/// `(a z; s^step)_inf` truncated, for a general unit base `a = sign * s^exp`.
pub fn pochhammer_unit(sign: i64, exp: i64, step: i64, order: usize) -> PowerSeries {
    assert!(step > 0, "pochhammer step must be positive");
    let c = if sign >= 0 { Rat::one() } else { -Rat::one() };
    let a = RatFunc::from_poly(LaurentPoly::monomial(exp, c));
    let mut coeffs = vec![RatFunc::zero(); order + 1];
    coeffs[0] = RatFunc::one();
    for k in 1..=order {
        let num = &(-&a) * &RatFunc::s_pow(step * (k as i64 - 1));
        let den = &RatFunc::one() - &RatFunc::s_pow(step * k as i64);
        coeffs[k] = &(&num * &coeffs[k - 1]) / &den;
    }
    PowerSeries::new(coeffs)
}

/// A power series together with a formal prefactor `s^e` where `e` may be a
/// non-integral rational (type A carries `q^{min(k,l) - kl/n}`, which is not
/// in `Q(s)` in general). The exponent is tracked exactly and separately.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistedSeries {
    pub s_exponent: BigRational,
    pub series: PowerSeries,
}

impl TwistedSeries {
    pub fn new(s_exponent: BigRational, series: PowerSeries) -> Self {
        Self { s_exponent, series }
    }

    pub fn untwisted(series: PowerSeries) -> Self {
        Self { s_exponent: BigRational::zero(), series }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            s_exponent: &self.s_exponent + &rhs.s_exponent,
            series: self.series.mul(&rhs.series),
        }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        Self {
            s_exponent: &self.s_exponent - &rhs.s_exponent,
            series: self.series.div(&rhs.series),
        }
    }

    /// When the formal exponent is an integer, fold it into the series.
    pub fn realized(&self) -> Option<PowerSeries> {
        if !self.s_exponent.is_integer() {
            return None;
        }
        let e = self.s_exponent.to_integer();
        let e: i64 = num_traits::ToPrimitive::to_i64(&e)?;
        Some(
            self.series
                .mul(&PowerSeries::constant(RatFunc::s_pow(e), self.series.order())),
        )
    }
}

/// `Some(c)` when the series is the constant `c` (all higher coefficients 0).
pub fn as_constant(s: &PowerSeries) -> Option<RatFunc> {
    for k in 1..=s.order() {
        if !s.coeff(k).is_zero() {
            return None;
        }
    }
    Some(s.coeff(0).clone())
}

/// `Some(rat)` when the series is `c * z^j` for a unit `c*s^a` — the shape of
/// the unit ambiguity in all "equal modulo k[z,z^-1]^x" identities. Returns
/// the pair `(j, c)`.
pub fn as_unit(s: &PowerSeries) -> Option<(usize, RatFunc)> {
    let mut found: Option<(usize, RatFunc)> = None;
    for k in 0..=s.order() {
        if s.coeff(k).is_zero() {
            continue;
        }
        if found.is_some() {
            return None;
        }
        found = Some((k, s.coeff(k).clone()));
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    #[test]
    fn pochhammer_low_orders() {
        // (z; q)_inf with q = s^2: order 1 coefficient is -1/(1-q); order 2
        // coefficient is q/((1-q)(1-q^2)).
        let s = pochhammer_series(0, false, 2, 2);
        assert!(s.coeff(0).is_one());
        let q = RatFunc::s_pow(2);
        let one = RatFunc::one();
        let c1 = &(-&one) / &(&one - &q);
        assert_eq!(s.coeff(1), &c1);
        let c2 = &q / &(&(&one - &q) * &(&one - &q.pow(2)));
        assert_eq!(s.coeff(2), &c2);
    }

    #[test]
    fn pochhammer_euler_cross_check() {
        // Euler: (z;q)_inf = sum_k (-1)^k q^{k(k-1)/2} z^k / (q;q)_k.
        let q = RatFunc::s_pow(2);
        let one = RatFunc::one();
        let m = 6usize;
        let s = pochhammer_series(0, false, 2, m);
        let mut qfac = RatFunc::one();
        for k in 0..=m {
            if k > 0 {
                qfac = &qfac * &(&one - &q.pow(k as i64));
            }
            let sign = if k % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            let expect = &(&RatFunc::constant(sign) * &q.pow((k * (k.max(1) - 1) / 2) as i64)) / &qfac;
            assert_eq!(s.coeff(k), &expect, "coefficient {k}");
        }
    }

    #[test]
    fn functional_recursion() {
        // f(z) = (1 - (-s)^m z) * f(s^step z) to the truncation order.
        for (m, neg, step) in [(0i64, false, 2i64), (3, true, 4), (5, true, 12), (2, false, 6)] {
            let order = 8;
            let f = pochhammer_series(m, neg, step, order);
            let rhs_factor = {
                let a = if neg { LaurentPoly::neg_s_pow(m) } else { LaurentPoly::s_pow(m) };
                let mut c = vec![RatFunc::zero(); order + 1];
                c[0] = RatFunc::one();
                c[1] = -&RatFunc::from_poly(a);
                PowerSeries::new(c)
            };
            let rhs = rhs_factor.mul(&f.scale_z(&RatFunc::s_pow(step)));
            assert_eq!(f, rhs);
        }
    }

    #[test]
    fn series_inverse_roundtrip() {
        let s = pochhammer_series(3, true, 4, 8);
        let prod = s.mul(&s.inverse());
        assert_eq!(prod, PowerSeries::one(8));
    }
}
