//! Type A fundamental crystals and modules. Nodes of the k-th fundamental
//! crystal are the k-element subsets of `{1..n}` (residues mod n); crystal
//! operators move `i+1 -> i` cyclically, and the module matrices are the
//! crystal arrows themselves (the global basis coincides with the crystal
//! here, all weights being extremal).

use crate::bipoly::BiRat;
use crate::crystal::CrystalGraph;
use crate::linalg::Op;
use crate::root::{AffineType, Family};
use crate::scalar::{LaurentPoly, Rat};
use crate::umodule::{Twist, UModule};
use itertools::Itertools;
use num_traits::One;

/// `(-q)^k` as a spectral twist (`q = s^2`).
pub fn neg_q_pow(k: i64) -> Twist {
    Twist::Unit {
        s_exp: 2 * k,
        coeff: if k.rem_euclid(2) == 0 { Rat::one() } else { -Rat::one() },
    }
}

fn subset_label(set: &[usize]) -> String {
    format!("{{{}}}", set.iter().map(|x| x.to_string()).join(","))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (1..=n).combinations(k).collect()
}

/// `f~_i` on a subset: replace `i` by `i+1` (cyclically, with 0 acting on the
/// pair `(n, 1)`); `None` when the rule does not apply. `e~_i` is recovered
/// as the inverse arrow by the crystal constructor.
fn f_op(n: usize, i: usize, set: &[usize]) -> Option<Vec<usize>> {
    let (from, to) = if i == 0 { (n, 1) } else { (i, i + 1) };
    if set.contains(&from) && !set.contains(&to) {
        let mut out: Vec<usize> = set.iter().copied().filter(|x| *x != from).collect();
        out.push(to);
        out.sort_unstable();
        Some(out)
    } else {
        None
    }
}

pub fn build_crystal_a(n: usize, k: usize) -> CrystalGraph {
    // k = 0 and k = n give the trivial one-node crystal; the CLI restricts to
    // the proper fundamentals 1..n-1, but the duality/fusion plumbing wants
    // the degenerate ends too.
    assert!(k <= n, "fundamental index out of range: k={k}, n={n}");
    let t = AffineType::new(Family::A, n);
    let nodes = subsets(n, k);
    let index: std::collections::HashMap<Vec<usize>, usize> =
        nodes.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let labels = nodes.iter().map(|s| subset_label(s)).collect();
    let wt = nodes
        .iter()
        .map(|s| {
            let mut w = vec![0i64; n];
            for x in s {
                w[x - 1] = 1;
            }
            w
        })
        .collect();
    let mut f_arrow = vec![vec![None; nodes.len()]; t.index_count()];
    for i in t.indices() {
        for (b, s) in nodes.iter().enumerate() {
            if let Some(tgt) = f_op(n, i, s) {
                f_arrow[i][b] = Some(index[&tgt]);
            }
        }
    }
    CrystalGraph::new(t, labels, wt, f_arrow)
}

/// The fundamental module `V(w_k)`: basis indexed by the crystal, generator
/// matrices transporting along the arrows with coefficient 1.
pub fn module_a(n: usize, k: usize) -> UModule {
    let b = build_crystal_a(n, k);
    let dim = b.len();
    let t = b.t;
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in t.indices() {
        let mut ei = Op::zero(dim, dim);
        let mut fi = Op::zero(dim, dim);
        for x in 0..dim {
            if let Some(y) = b.e(i, x) {
                ei.set(y, x, BiRat::one());
            }
            if let Some(y) = b.f(i, x) {
                fi.set(y, x, BiRat::one());
            }
        }
        e.push(ei);
        f.push(fi);
    }
    UModule { t, labels: b.labels, wt: b.wt, e, f }
}

/// `psi(J, K) = #{(v, u) in J x K : v > u}`.
fn psi(j_set: &[usize], k_set: &[usize]) -> i64 {
    let mut count = 0;
    for v in j_set {
        for u in k_set {
            if v > u {
                count += 1;
            }
        }
    }
    count
}

/// `(-q)^e` as a scalar.
fn neg_q(e: i64) -> BiRat {
    let c = if e.rem_euclid(2) == 0 { Rat::one() } else { -Rat::one() };
    BiRat::from_scalar(LaurentPoly::monomial(2 * e, c))
}

/// Matrix of the embedding `i_{j,k}: V(w_{j+k}) -> V(w_j)_{(-q)^k} (x)
/// V(w_k)_{(-q)^{-j}}`, `M -> sum over splittings (-q)^{psi(J,K)} J (x) K`.
/// Column order is the crystal order of `V(w_{j+k})`; row order is the tensor
/// order `|B_j| * |B_k|`.
pub fn embed_i(n: usize, j: usize, k: usize) -> Op {
    assert!(j + k <= n);
    let bj = subsets(n, j);
    let bk = subsets(n, k);
    let bjk = subsets(n, j + k);
    let jdx: std::collections::HashMap<Vec<usize>, usize> =
        bj.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let kdx: std::collections::HashMap<Vec<usize>, usize> =
        bk.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let mut op = Op::zero(bj.len() * bk.len(), bjk.len());
    for (col, m) in bjk.iter().enumerate() {
        for j_part in m.iter().copied().combinations(j) {
            let k_part: Vec<usize> = m.iter().copied().filter(|x| !j_part.contains(x)).collect();
            let row = jdx[&j_part] * bk.len() + kdx[&k_part];
            op.set(row, col, neg_q(psi(&j_part, &k_part)));
        }
    }
    op
}

/// Matrix of the projection `p_{j,k}: V(w_j)_{(-q)^{-k}} (x) V(w_k)_{(-q)^{j}}
/// -> V(w_{j+k})`, `J (x) K -> (-q)^{psi(J,K)} (J u K)` when disjoint, else 0.
pub fn project_p(n: usize, j: usize, k: usize) -> Op {
    assert!(j + k <= n);
    let bj = subsets(n, j);
    let bk = subsets(n, k);
    let bjk = subsets(n, j + k);
    let udx: std::collections::HashMap<Vec<usize>, usize> =
        bjk.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let mut op = Op::zero(bjk.len(), bj.len() * bk.len());
    for (a, j_set) in bj.iter().enumerate() {
        for (b, k_set) in bk.iter().enumerate() {
            if j_set.iter().any(|x| k_set.contains(x)) {
                continue;
            }
            let mut union: Vec<usize> = j_set.iter().chain(k_set.iter()).copied().collect();
            union.sort_unstable();
            op.set(udx[&union], a * bk.len() + b, neg_q(psi(j_set, k_set)));
        }
    }
    op
}

/// Source and target modules for `embed_i` at the twists of its statement.
pub fn embed_i_modules(n: usize, j: usize, k: usize) -> (UModule, UModule) {
    let src = module_a(n, j + k);
    let tgt = module_a(n, j)
        .twist(&neg_q_pow(k as i64))
        .tensor(&module_a(n, k).twist(&neg_q_pow(-(j as i64))));
    (src, tgt)
}

/// Source and target modules for `project_p` at the twists of its statement.
pub fn project_p_modules(n: usize, j: usize, k: usize) -> (UModule, UModule) {
    let src = module_a(n, j)
        .twist(&neg_q_pow(-(k as i64)))
        .tensor(&module_a(n, k).twist(&neg_q_pow(j as i64)));
    let tgt = module_a(n, j + k);
    (src, tgt)
}
