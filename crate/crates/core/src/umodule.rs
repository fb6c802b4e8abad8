//! Finite-dimensional module engine: generator matrices over the exact
//! scalars, spectral twisting, tensor products through the coproduct,
//! defining-relation checking, submodule closure, highest-vector solving and
//! duality intertwiners.
//!
//! A module stores only `E_i` and `F_i`; the torus action is implicit in the
//! weight grading (`t_i` acts on the weight-`w` line by `s^{(alpha_i,alpha_i)
//! <h_i, w>}`), so the torus relations hold by construction and the
//! interesting relations are checked as exact matrix identities.

use crate::bipoly::BiRat;
use crate::linalg::{nullspace, sv_scale, sv_unit, Echelon, Op, SVec};
use crate::root::{wt_add, AffineType, Weight};
use crate::scalar::{LaurentPoly, Rat};
use num_traits::One;
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct UModule {
    pub t: AffineType,
    pub labels: Vec<String>,
    pub wt: Vec<Weight>,
    pub e: Vec<Op>,
    pub f: Vec<Op>,
}

/// A spectral twist: the unit `c * (sign s)^m`, or the formal variable `z`.
#[derive(Clone, Debug, PartialEq)]
pub enum Twist {
    Unit { s_exp: i64, coeff: Rat },
    FormalZ,
}

impl Twist {
    pub fn one() -> Self {
        Twist::Unit { s_exp: 0, coeff: Rat::one() }
    }

    /// `(-s)^m`.
    pub fn neg_s_pow(m: i64) -> Self {
        let c = if m.rem_euclid(2) == 0 { Rat::one() } else { -Rat::one() };
        Twist::Unit { s_exp: m, coeff: c }
    }

    /// `s^m`.
    pub fn s_pow(m: i64) -> Self {
        Twist::Unit { s_exp: m, coeff: Rat::one() }
    }

    pub fn value(&self) -> BiRat {
        match self {
            Twist::Unit { s_exp, coeff } => {
                BiRat::from_scalar(LaurentPoly::monomial(*s_exp, coeff.clone()))
            }
            Twist::FormalZ => BiRat::z(),
        }
    }

    pub fn inverse_value(&self) -> BiRat {
        self.value().recip()
    }
}

/// Failures found by the relation checker (empty = all relations hold).
#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl UModule {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// The one-dimensional trivial module (zero weight, all generators zero).
    pub fn trivial(t: AffineType) -> UModule {
        let nc = t.index_count();
        UModule {
            t,
            labels: vec!["1".to_string()],
            wt: vec![crate::root::wt_zero(t.n)],
            e: vec![Op::zero(1, 1); nc],
            f: vec![Op::zero(1, 1); nc],
        }
    }

    /// Diagonal entry of `t_i` on the k-th basis vector.
    pub fn t_entry(&self, i: usize, k: usize) -> BiRat {
        let e = self.t.qi_s_exp(i) * self.t.pairing(i, &self.wt[k]);
        BiRat::from_scalar(LaurentPoly::s_pow(e))
    }

    fn t_diag(&self, i: usize, exp: i64) -> Op {
        let mut op = Op::zero(self.dim(), self.dim());
        for k in 0..self.dim() {
            let e = exp * self.t.qi_s_exp(i) * self.t.pairing(i, &self.wt[k]);
            op.set(k, k, BiRat::from_scalar(LaurentPoly::s_pow(e)));
        }
        op
    }

    /// `q_i - q_i^{-1}` as a scalar.
    fn qi_minus_inv(&self, i: usize) -> BiRat {
        let e = self.t.qi_s_exp(i);
        &BiRat::from_scalar(LaurentPoly::s_pow(e)) - &BiRat::from_scalar(LaurentPoly::s_pow(-e))
    }

    /// Quantum integer `[m]_i`.
    fn q_int(&self, i: usize, m: i64) -> BiRat {
        let e = self.t.qi_s_exp(i);
        let num = &BiRat::from_scalar(LaurentPoly::s_pow(e * m))
            - &BiRat::from_scalar(LaurentPoly::s_pow(-e * m));
        &num / &self.qi_minus_inv(i)
    }

    fn divided_power(&self, i: usize, base: &Op, k: u32) -> Op {
        let mut acc = Op::identity(self.dim());
        let mut fact = BiRat::one();
        for j in 1..=k {
            acc = base.compose(&acc);
            fact = &fact * &self.q_int(i, j as i64);
        }
        acc.scale(&fact.recip())
    }

    /// Verify the defining relations as exact matrix identities.
    pub fn check_relations(&self) -> RelationReport {
        let mut rep = RelationReport::default();
        let t = self.t;
        let n = self.dim();
        // Weight grading of E_i and F_i (equivalent to relation 3 given the
        // diagonal torus action).
        for i in t.indices() {
            let alpha = t.alpha_cl(i);
            for (j, col) in self.e[i].cols.iter().enumerate() {
                for (r, _) in col {
                    if self.wt[*r] != wt_add(&self.wt[j], &alpha) {
                        rep.failures
                            .push(format!("e_{i} not weight-graded at column {j}"));
                    }
                }
            }
            for (j, col) in self.f[i].cols.iter().enumerate() {
                for (r, _) in col {
                    if self.wt[*r] != crate::root::wt_sub(&self.wt[j], &alpha) {
                        rep.failures
                            .push(format!("f_{i} not weight-graded at column {j}"));
                    }
                }
            }
        }
        // [e_i, f_j] = delta_ij (t_i - t_i^{-1})/(q_i - q_i^{-1}).
        for i in t.indices() {
            for j in t.indices() {
                let lhs = self.e[i]
                    .compose(&self.f[j])
                    .sub(&self.f[j].compose(&self.e[i]));
                let rhs = if i == j {
                    let d = self.t_diag(i, 1).sub(&self.t_diag(i, -1));
                    d.scale(&self.qi_minus_inv(i).recip())
                } else {
                    Op::zero(n, n)
                };
                if lhs != rhs {
                    rep.failures.push(format!("[e_{i}, f_{j}] relation fails"));
                }
            }
        }
        // Serre relations.
        for i in t.indices() {
            for j in t.indices() {
                if i == j {
                    continue;
                }
                let b = 1 - t.cartan(i, j);
                assert!(b >= 0);
                for (name, gi, gj) in [("e", &self.e, &self.e[j]), ("f", &self.f, &self.f[j])] {
                    let mut acc = Op::zero(n, n);
                    for k in 0..=b {
                        let left = self.divided_power(i, &gi[i], k as u32);
                        let right = self.divided_power(i, &gi[i], (b - k) as u32);
                        let term = left.compose(&gj.compose(&right));
                        let term = if k % 2 == 0 {
                            term
                        } else {
                            term.scale(&(-&BiRat::one()))
                        };
                        acc = acc.add(&term);
                    }
                    if !acc.is_zero() {
                        rep.failures
                            .push(format!("Serre relation ({name}) fails for i={i}, j={j}"));
                    }
                }
            }
        }
        rep
    }

    /// Spectral twist: scale `e_0` by the twist parameter and `f_0` by its
    /// inverse; everything else (including weights) is unchanged.
    pub fn twist(&self, a: &Twist) -> UModule {
        let mut out = self.clone();
        let v = a.value();
        let vi = a.inverse_value();
        out.e[0] = out.e[0].scale(&v);
        out.f[0] = out.f[0].scale(&vi);
        out
    }

    /// Tensor product via the coproduct
    /// `e_i -> e_i (x) t_i^{-1} + 1 (x) e_i`, `f_i -> f_i (x) 1 + t_i (x) f_i`.
    pub fn tensor(&self, other: &UModule) -> UModule {
        assert_eq!(self.t, other.t, "affine type mismatch");
        let t = self.t;
        let m1 = self.dim();
        let m2 = other.dim();
        let idx = |a: usize, b: usize| a * m2 + b;
        let mut labels = Vec::with_capacity(m1 * m2);
        let mut wt = Vec::with_capacity(m1 * m2);
        for a in 0..m1 {
            for b in 0..m2 {
                labels.push(format!("{}(x){}", self.labels[a], other.labels[b]));
                wt.push(wt_add(&self.wt[a], &other.wt[b]));
            }
        }
        let mut e = Vec::new();
        let mut f = Vec::new();
        for i in t.indices() {
            let mut ei = Op::zero(m1 * m2, m1 * m2);
            let mut fi = Op::zero(m1 * m2, m1 * m2);
            for a in 0..m1 {
                for b in 0..m2 {
                    let src = idx(a, b);
                    // e_i (x) t_i^{-1}
                    let tb = other.t_entry(i, b).recip();
                    for (r, v) in &self.e[i].cols[a] {
                        let val = &(v * &tb) + &ei.get(idx(*r, b), src);
                        ei.set(idx(*r, b), src, val);
                    }
                    // 1 (x) e_i
                    for (r, v) in &other.e[i].cols[b] {
                        let val = &ei.get(idx(a, *r), src) + v;
                        ei.set(idx(a, *r), src, val);
                    }
                    // f_i (x) 1
                    for (r, v) in &self.f[i].cols[a] {
                        let val = &fi.get(idx(*r, b), src) + v;
                        fi.set(idx(*r, b), src, val);
                    }
                    // t_i (x) f_i
                    let ta = self.t_entry(i, a);
                    for (r, v) in &other.f[i].cols[b] {
                        let val = &(v * &ta) + &fi.get(idx(a, *r), src);
                        fi.set(idx(a, *r), src, val);
                    }
                }
            }
            e.push(ei);
            f.push(fi);
        }
        UModule { t, labels, wt, e, f }
    }

    /// The module on the dual space through the antiautomorphism
    /// `e_i -> f_i, f_i -> e_i, q(h) -> q(h)`: generator matrices are
    /// transposed and swapped. Submodules of the result are exactly the
    /// annihilators of submodules of `self`.
    pub fn transpose_dual(&self) -> UModule {
        UModule {
            t: self.t,
            labels: self.labels.iter().map(|l| format!("{l}^t")).collect(),
            wt: self.wt.clone(),
            e: self.f.iter().map(Op::transpose).collect(),
            f: self.e.iter().map(Op::transpose).collect(),
        }
    }

    /// Echelon basis of the submodule generated by `v` under all `E_i`, `F_i`.
    pub fn generated_submodule(&self, v: &SVec) -> Echelon {
        let mut ech = Echelon::new();
        if ech.insert(v.clone()).is_none() {
            return ech;
        }
        let mut queue: Vec<SVec> = vec![ech.basis().pop().unwrap()];
        while let Some(w) = queue.pop() {
            for i in self.t.indices() {
                for op in [&self.e[i], &self.f[i]] {
                    let img = op.apply(&w);
                    let red = ech.reduce(img);
                    if !red.is_empty() {
                        let lead = red.iter().next().unwrap().1.clone();
                        let red = sv_scale(&red, &lead.recip());
                        ech.insert(red.clone());
                        queue.push(red);
                    }
                }
            }
        }
        ech
    }

    /// Indices of basis vectors of the given weight.
    pub fn weight_space(&self, w: &Weight) -> Vec<usize> {
        (0..self.dim()).filter(|k| &self.wt[*k] == w).collect()
    }

    /// Basis of `{v in M_w : e_i v = 0 for all classical i}`.
    pub fn classical_hw_vectors(&self, w: &Weight) -> Vec<SVec> {
        let cols = self.weight_space(w);
        if cols.is_empty() {
            return vec![];
        }
        let mut rows: Vec<Vec<BiRat>> = Vec::new();
        for i in self.t.classical_indices() {
            // Images e_i v for v in the weight space land in weight w + alpha_i.
            let tgt = wt_add(&w.clone(), &self.t.alpha_cl(i));
            let tgt_rows = self.weight_space(&tgt);
            if tgt_rows.is_empty() {
                continue;
            }
            for r in &tgt_rows {
                let mut row = Vec::with_capacity(cols.len());
                for c in &cols {
                    row.push(self.e[i].get(*r, *c));
                }
                rows.push(row);
            }
        }
        let ns = nullspace(rows, cols.len());
        ns.into_iter()
            .map(|coef| {
                let mut v = SVec::new();
                for (j, c) in coef.into_iter().enumerate() {
                    if !c.is_zero() {
                        v.insert(cols[j], c);
                    }
                }
                v
            })
            .collect()
    }

    /// All dominant classical weights occurring in the module, highest first.
    pub fn dominant_weights(&self) -> Vec<Weight> {
        let mut ws: Vec<Weight> = Vec::new();
        for w in &self.wt {
            if self.t.is_classically_dominant(w) && !ws.contains(w) {
                ws.push(w.clone());
            }
        }
        ws.sort_by_key(|w| -self.t.dominance_key(w));
        ws
    }

    /// For each dominant weight `w`, the subspace of `v in M_w` whose
    /// generated submodule stays inside the cone `w - Q_+` (weights in the
    /// convex hull of the Weyl orbit of `w` would follow for extremal
    /// vectors; the cone test is the dominant-case criterion).
    ///
    /// Returns `(weight, basis of the subspace)` pairs.
    pub fn dominant_extremal_vectors(&self) -> Vec<(Weight, Vec<SVec>)> {
        let mut out = Vec::new();
        for w in self.dominant_weights() {
            let cols = self.weight_space(&w);
            // Closure of the maps M_w -> M under the generator algebra,
            // started from the inclusion; tracked as vectorized operators.
            let seed: Vec<SVec> = cols.iter().map(|c| sv_unit(*c)).collect();
            let vec_len = self.dim();
            let pack = |imgs: &[SVec]| -> SVec {
                let mut p = SVec::new();
                for (j, img) in imgs.iter().enumerate() {
                    for (r, v) in img {
                        p.insert(j * vec_len + r, v.clone());
                    }
                }
                p
            };
            let mut ech = Echelon::new();
            ech.insert(pack(&seed));
            let mut queue = vec![seed];
            let mut bad_rows: Vec<Vec<BiRat>> = Vec::new();
            while let Some(maps) = queue.pop() {
                for i in self.t.indices() {
                    for op in [&self.e[i], &self.f[i]] {
                        let imgs: Vec<SVec> = maps.iter().map(|m| op.apply(m)).collect();
                        if imgs.iter().all(SVec::is_empty) {
                            continue;
                        }
                        if ech.insert(pack(&imgs)).is_some() {
                            // Collect the out-of-hull components as constraints.
                            let mut row_groups: BTreeMap<usize, Vec<BiRat>> = BTreeMap::new();
                            for (j, img) in imgs.iter().enumerate() {
                                for (r, v) in img {
                                    if !in_cone(self.t, &w, &self.wt[*r]) {
                                        row_groups
                                            .entry(*r)
                                            .or_insert_with(|| vec![BiRat::zero(); cols.len()])[j] =
                                            v.clone();
                                    }
                                }
                            }
                            bad_rows.extend(row_groups.into_values());
                            queue.push(imgs);
                        }
                    }
                }
            }
            let ns = nullspace(bad_rows, cols.len());
            let basis: Vec<SVec> = ns
                .into_iter()
                .map(|coef| {
                    let mut v = SVec::new();
                    for (j, c) in coef.into_iter().enumerate() {
                        if !c.is_zero() {
                            v.insert(cols[j], c);
                        }
                    }
                    v
                })
                .collect();
            if !basis.is_empty() {
                out.push((w, basis));
            }
        }
        out
    }

    /// Is the module generated by `v`?
    pub fn is_cyclic_on(&self, v: &SVec) -> bool {
        self.generated_submodule(v).dim() == self.dim()
    }

    /// Does every nonzero submodule contain the line `k*v`? Requires `v` to
    /// span its weight space (true for the extremal tensor vectors this is
    /// used on); checked through the transpose-dual module.
    pub fn is_cocyclic_on(&self, k: usize) -> bool {
        assert_eq!(
            self.weight_space(&self.wt[k]).len(),
            1,
            "cocyclicity test requires a multiplicity-one weight"
        );
        let dual = self.transpose_dual();
        dual.is_cyclic_on(&sv_unit(k))
    }
}

impl UModule {
    /// The weight at which trivial-module vectors live. Type C weights are
    /// genuinely traceless, so this is 0; type A weights are stored gl-style
    /// with a constant coordinate sum per module, so the trivial weight is
    /// the constant vector with the matching sum (or nothing when the sum is
    /// not divisible by n).
    fn trivial_weight(&self) -> Option<Weight> {
        match self.t.family {
            crate::root::Family::C => Some(crate::root::wt_zero(self.t.n)),
            crate::root::Family::A => {
                let total: i64 = self.wt.first()?.iter().sum();
                let n = self.t.n as i64;
                (total % n == 0).then(|| vec![total / n; self.t.n])
            }
        }
    }

    /// Basis of the space of invariant vectors: trivial weight, killed by
    /// every `e_i` and `f_i` (images of intertwiners from the trivial
    /// module).
    pub fn invariant_vectors(&self) -> Vec<SVec> {
        let Some(zero) = self.trivial_weight() else {
            return vec![];
        };
        let cols = self.weight_space(&zero);
        if cols.is_empty() {
            return vec![];
        }
        let mut rows: Vec<Vec<BiRat>> = Vec::new();
        for i in self.t.indices() {
            for op in [&self.e[i], &self.f[i]] {
                let mut touched: BTreeMap<usize, Vec<BiRat>> = BTreeMap::new();
                for (j, c) in cols.iter().enumerate() {
                    for (r, v) in &op.cols[*c] {
                        touched
                            .entry(*r)
                            .or_insert_with(|| vec![BiRat::zero(); cols.len()])[j] = v.clone();
                    }
                }
                rows.extend(touched.into_values());
            }
        }
        nullspace(rows, cols.len())
            .into_iter()
            .map(|coef| {
                let mut v = SVec::new();
                for (j, c) in coef.into_iter().enumerate() {
                    if !c.is_zero() {
                        v.insert(cols[j], c);
                    }
                }
                v
            })
            .collect()
    }
}

/// Basis of the space of module maps `src -> tgt`: weight-graded matrices
/// commuting with every `E_i` and `F_i`. Solved as one exact nullspace over
/// the unknown entries (only weight-compatible positions are unknowns).
pub fn hom_space(src: &UModule, tgt: &UModule) -> Vec<Op> {
    assert_eq!(src.t, tgt.t, "affine type mismatch");
    let t = src.t;
    // Unknowns: X[r, c] with wt_tgt[r] == wt_src[c].
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    let mut uidx: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in 0..src.dim() {
        for r in 0..tgt.dim() {
            if tgt.wt[r] == src.wt[c] {
                uidx.insert((r, c), unknowns.len());
                unknowns.push((r, c));
            }
        }
    }
    // Constraints: for each generator g, each source column c and each target
    // row r of weight wt_src[c] +- alpha_i:
    //   sum_{c'} X[r, c'] g_src[c', c] - sum_{r'} g_tgt[r, r'] X[r', c] = 0.
    let mut rows: Vec<Vec<BiRat>> = Vec::new();
    for i in t.indices() {
        for (g_src, g_tgt) in [(&src.e[i], &tgt.e[i]), (&src.f[i], &tgt.f[i])] {
            for c in 0..src.dim() {
                let mut touched: BTreeMap<usize, Vec<BiRat>> = BTreeMap::new();
                for (cp, v) in &g_src.cols[c] {
                    // X[r, cp] contributes v to the (r, c) constraint.
                    for r in 0..tgt.dim() {
                        if let Some(u) = uidx.get(&(r, *cp)) {
                            let row = touched
                                .entry(r)
                                .or_insert_with(|| vec![BiRat::zero(); unknowns.len()]);
                            row[*u] = &row[*u] + v;
                        }
                    }
                }
                for rp in 0..tgt.dim() {
                    if uidx.contains_key(&(rp, c)) {
                        let u = uidx[&(rp, c)];
                        for (r, v) in &g_tgt.cols[rp] {
                            let row = touched
                                .entry(*r)
                                .or_insert_with(|| vec![BiRat::zero(); unknowns.len()]);
                            row[u] = &row[u] - v;
                        }
                    }
                }
                rows.extend(touched.into_values().filter(|r| r.iter().any(|x| !x.is_zero())));
            }
        }
    }
    nullspace(rows, unknowns.len())
        .into_iter()
        .map(|sol| {
            let mut op = Op::zero(tgt.dim(), src.dim());
            for (u, v) in sol.into_iter().enumerate() {
                if !v.is_zero() {
                    let (r, c) = unknowns[u];
                    op.set(r, c, v);
                }
            }
            op
        })
        .collect()
}

/// One duality twist found by the scan: a monomial `sign * s^{s_exp}` such
/// that the twisted tensor product admits an intertwiner to or from the
/// trivial module.
#[derive(Clone, Debug)]
pub struct DualityHit {
    pub s_exp: i64,
    pub sign: i64,
    /// Invariant vector of `W_twist (x) V` (the coevaluation image), if any.
    pub iota: Option<SVec>,
    /// Invariant functional on `V (x) W_twist` (the evaluation/trace), if any.
    pub trace: Option<SVec>,
}

/// Scan monomial twists `±s^m`, `|m| <= scan`, for duality intertwiners
/// between `v` and the candidate partner `w`:
/// coevaluation `k -> W_twist (x) V` and trace `V (x) W_twist -> k`.
pub fn duality_solve(v: &UModule, w: &UModule, scan: i64) -> Vec<DualityHit> {
    let mut hits = Vec::new();
    for m in -scan..=scan {
        for sign in [1i64, -1] {
            let tw = Twist::Unit {
                s_exp: m,
                coeff: if sign == 1 { Rat::one() } else { -Rat::one() },
            };
            let wt_mod = w.twist(&tw);
            let coev_space = wt_mod.tensor(v);
            let iota = coev_space.invariant_vectors();
            let ev_space = v.tensor(&wt_mod).transpose_dual();
            let trace = ev_space.invariant_vectors();
            if !iota.is_empty() || !trace.is_empty() {
                assert!(iota.len() <= 1 && trace.len() <= 1, "duality space not a line");
                hits.push(DualityHit {
                    s_exp: m,
                    sign,
                    iota: iota.into_iter().next(),
                    trace: trace.into_iter().next(),
                });
            }
        }
    }
    hits
}

/// Extremality test on weights: is `mu` inside the convex hull of the
/// classical Weyl orbit of the dominant weight `w`? (The cone written with
/// all affine simple roots is classically the whole lattice — `cl(delta) = 0`
/// makes `-alpha_i` a non-negative combination — so the convex-hull reading
/// is the one with content at level 0.)
fn in_cone(t: AffineType, w: &Weight, mu: &Weight) -> bool {
    let dom = crate::crystal::dominant_representative(t, mu);
    crate::crystal::hull_contains(t, w, &dom)
}
