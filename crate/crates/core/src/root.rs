//! Root-system tables for the two supported affine families:
//! type A with rank parameter `n` (index set `{0, .., n-1}`, classical part
//! sl_n) and type C with rank `n` (index set `{0, .., n}`).
//!
//! Classical (level-0) weights are stored as integer vectors of length `n`:
//! * type A: multiplicities in the standard basis `eps_1..eps_n` of gl_n
//!   weights; the invariant form is the sl_n projection
//!   `(x, y) = sum x_i y_i - (sum x_i)(sum y_i)/n`.
//! * type C: coordinates in the `eps` basis normalized by
//!   `(eps_i, eps_j) = delta_ij / 2`.
//!
//! With `s = q^{1/2}` this makes `q_i = s^{(alpha_i, alpha_i)}` a plain
//! `s`-power for every vertex of both diagrams.

use crate::scalar::Rat;
use num_bigint::BigInt;

pub type Weight = Vec<i64>;

pub fn wt_add(a: &Weight, b: &Weight) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn wt_sub(a: &Weight, b: &Weight) -> Weight {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn wt_neg(a: &Weight) -> Weight {
    a.iter().map(|x| -x).collect()
}

pub fn wt_zero(n: usize) -> Weight {
    vec![0; n]
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    C,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct AffineType {
    pub family: Family,
    pub n: usize,
}

/// Global constants attached to one affine type.
#[derive(Clone, Debug)]
pub struct Constants {
    /// `(delta, rho) = sum_i a_i (alpha_i, alpha_i)/2` from the marks table.
    pub delta_rho: i64,
    /// `<rho_vee, delta> = sum_i a_i` (marks sum).
    pub rho_vee_delta: i64,
    /// `p* = (-1)^{<rho_vee, delta>} q^{(delta, rho)}` as `(sign, s-exponent)`.
    pub p_star_sign: i64,
    pub p_star_s_exp: i64,
    /// Denominator of the weight lattice pairing exponents (1 for A, 2 for C).
    pub gamma: i64,
    /// Every supported fundamental has `m_i = 1` (no spectral identification).
    pub m_i: i64,
}

impl AffineType {
    pub fn new(family: Family, n: usize) -> Self {
        assert!(n >= 2, "rank parameter must be at least 2");
        Self { family, n }
    }

    /// Number of Dynkin vertices, including the affine vertex 0.
    pub fn index_count(&self) -> usize {
        match self.family {
            Family::A => self.n,
            Family::C => self.n + 1,
        }
    }

    pub fn indices(&self) -> std::ops::Range<usize> {
        0..self.index_count()
    }

    /// Classical vertices (the affine vertex 0 removed).
    pub fn classical_indices(&self) -> std::ops::Range<usize> {
        1..self.index_count()
    }

    /// Valid fundamental-weight indices.
    pub fn fundamental_indices(&self) -> std::ops::Range<usize> {
        1..self.index_count()
    }

    pub fn check_index(&self, i: usize) {
        assert!(i < self.index_count(), "index {i} out of range for {self:?}");
    }

    /// Classical projection of the simple root `alpha_i`.
    pub fn alpha_cl(&self, i: usize) -> Weight {
        self.check_index(i);
        let n = self.n;
        let mut w = wt_zero(n);
        match self.family {
            Family::A => {
                // alpha_i = eps_i - eps_{i+1} cyclically; cl(alpha_0) = eps_n - eps_1.
                let (a, b) = if i == 0 { (n - 1, 0) } else { (i - 1, i) };
                w[a] += 1;
                w[b] -= 1;
                if i == 0 {
                    // cl(alpha_0) = -theta = -(eps_1 - eps_n)
                }
            }
            Family::C => {
                if i == 0 {
                    w[0] = -2;
                } else if i == n {
                    w[n - 1] = 2;
                } else {
                    w[i - 1] = 1;
                    w[i] = -1;
                }
            }
        }
        w
    }

    /// `(alpha_i, alpha_i)` — equals the `s`-exponent of `q_i`.
    pub fn alpha_norm(&self, i: usize) -> i64 {
        self.check_index(i);
        match self.family {
            Family::A => 2,
            Family::C => {
                if i == 0 || i == self.n {
                    2
                } else {
                    1
                }
            }
        }
    }

    /// `q_i = s^e`: the exponent `e`.
    pub fn qi_s_exp(&self, i: usize) -> i64 {
        self.alpha_norm(i)
    }

    /// `<h_i, lambda>`, always an integer.
    pub fn pairing(&self, i: usize, w: &Weight) -> i64 {
        self.check_index(i);
        assert_eq!(w.len(), self.n);
        let n = self.n;
        match self.family {
            Family::A => {
                if i == 0 {
                    w[n - 1] - w[0]
                } else {
                    w[i - 1] - w[i]
                }
            }
            Family::C => {
                if i == 0 {
                    -w[0]
                } else if i == n {
                    w[n - 1]
                } else {
                    w[i - 1] - w[i]
                }
            }
        }
    }

    /// Invariant bilinear form `(lambda, mu)` on level-0 classical weights.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Rat {
        assert_eq!(a.len(), self.n);
        assert_eq!(b.len(), self.n);
        let dot: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        match self.family {
            Family::A => {
                let sa: i64 = a.iter().sum();
                let sb: i64 = b.iter().sum();
                Rat::from(BigInt::from(dot)) - Rat::new(BigInt::from(sa * sb), BigInt::from(self.n as i64))
            }
            Family::C => Rat::new(BigInt::from(dot), BigInt::from(2)),
        }
    }

    /// Level-0 fundamental weight `w_k` (classical projection).
    pub fn fundamental_weight(&self, k: usize) -> Weight {
        assert!(k >= 1 && k < self.index_count(), "fundamental index {k} out of range");
        let mut w = wt_zero(self.n);
        for x in w.iter_mut().take(k) {
            *x = 1;
        }
        w
    }

    /// Affine Cartan matrix entry `<h_i, alpha_j>`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.pairing(i, &self.alpha_cl(j))
    }

    /// Marks `a_i` (coefficients of delta on the simple roots).
    pub fn marks(&self) -> Vec<i64> {
        match self.family {
            Family::A => vec![1; self.n],
            Family::C => {
                let mut m = vec![2; self.n + 1];
                m[0] = 1;
                m[self.n] = 1;
                m
            }
        }
    }

    /// Diagram involution `i -> i*` induced by `-w_0` (fixes 0).
    pub fn dual_index(&self, i: usize) -> usize {
        self.check_index(i);
        match self.family {
            Family::A => {
                if i == 0 {
                    0
                } else {
                    self.n - i
                }
            }
            Family::C => i,
        }
    }

    pub fn constants(&self) -> Constants {
        let marks = self.marks();
        let rho_vee_delta: i64 = marks.iter().sum();
        let delta_rho: i64 = self
            .indices()
            .map(|i| marks[i] * self.alpha_norm(i))
            .sum::<i64>()
            / 2;
        Constants {
            delta_rho,
            rho_vee_delta,
            p_star_sign: if rho_vee_delta % 2 == 0 { 1 } else { -1 },
            p_star_s_exp: 2 * delta_rho,
            gamma: match self.family {
                Family::A => 1,
                Family::C => 2,
            },
            m_i: 1,
        }
    }

    /// A linear functional strictly positive on every classical positive root
    /// and on theta; used to order weight blocks from highest to lowest.
    pub fn dominance_key(&self, w: &Weight) -> i64 {
        w.iter()
            .enumerate()
            .map(|(i, x)| (self.n as i64 + 1 - i as i64) * x)
            .sum()
    }

    /// Is `w` dominant for the classical subalgebra?
    pub fn is_classically_dominant(&self, w: &Weight) -> bool {
        self.classical_indices().all(|i| self.pairing(i, w) >= 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn cartan_row_sums_vanish_against_marks() {
        for t in [
            AffineType::new(Family::A, 2),
            AffineType::new(Family::A, 3),
            AffineType::new(Family::A, 5),
            AffineType::new(Family::C, 2),
            AffineType::new(Family::C, 3),
        ] {
            let marks = t.marks();
            for i in t.indices() {
                let sum: i64 = t.indices().map(|j| marks[j] * t.cartan(i, j)).sum();
                assert_eq!(sum, 0, "delta is null: row {i} of {t:?}");
            }
        }
    }

    #[test]
    fn cartan_matches_diagram() {
        // A_2^{(1)} at n = 3: cyclic diagram.
        let t = AffineType::new(Family::A, 3);
        for i in t.indices() {
            for j in t.indices() {
                let expect = if i == j {
                    2
                } else if (i + 1) % 3 == j || (j + 1) % 3 == i {
                    -1
                } else {
                    0
                };
                assert_eq!(t.cartan(i, j), expect);
            }
        }
        // C_2^{(1)}: 0 => 1 <= 2 (arrows toward the middle).
        let t = AffineType::new(Family::C, 2);
        let rows = [[2, -1, 0], [-2, 2, -2], [0, -1, 2]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.cartan(i, j), rows[i][j], "({i},{j})");
            }
        }
    }

    #[test]
    fn pairing_fixtures() {
        let a3 = AffineType::new(Family::A, 3);
        assert_eq!(a3.pairing(1, &a3.fundamental_weight(1)), 1);
        assert_eq!(a3.pairing(0, &a3.fundamental_weight(1)), -1);
        let c2 = AffineType::new(Family::C, 2);
        let eps1 = vec![1, 0];
        assert_eq!(c2.pairing(0, &eps1), -1);
    }

    #[test]
    fn inner_fixtures() {
        let c2 = AffineType::new(Family::C, 2);
        let w1 = c2.fundamental_weight(1);
        assert_eq!(c2.inner(&w1, &w1), rat(1, 2));
        let a3 = AffineType::new(Family::A, 3);
        let w1 = a3.fundamental_weight(1);
        assert_eq!(a3.inner(&w1, &w1), rat(2, 3));
    }

    #[test]
    fn norm_pairing_consistency() {
        // (alpha_i, alpha_i)/2 * <h_i, lambda> = (alpha_i, lambda).
        for t in [AffineType::new(Family::A, 4), AffineType::new(Family::C, 3)] {
            let probes: Vec<Weight> = (1..t.index_count()).map(|k| t.fundamental_weight(k)).collect();
            for i in t.indices() {
                let ai = t.alpha_cl(i);
                for w in &probes {
                    let lhs = rat(t.alpha_norm(i), 2) * rat(t.pairing(i, w), 1);
                    assert_eq!(lhs, t.inner(&ai, w), "i={i}, w={w:?}, {t:?}");
                }
            }
        }
    }

    #[test]
    fn duality_constants() {
        let c2 = AffineType::new(Family::C, 2);
        let k = c2.constants();
        assert_eq!(k.delta_rho, 3); // n + 1
        assert_eq!(k.rho_vee_delta, 4); // 2n
        assert_eq!((k.p_star_sign, k.p_star_s_exp), (1, 6)); // q_s^{2(n+1)}
        let a4 = AffineType::new(Family::A, 4);
        assert_eq!(a4.dual_index(1), 3);
        assert!(a4.indices().all(|i| a4.dual_index(a4.dual_index(i)) == i));
    }
}
