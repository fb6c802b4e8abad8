//! Type C fundamental crystals and modules. Nodes of the k-th fundamental
//! crystal are one-column tableaux: strictly increasing words of length k in
//! the alphabet `1 < 2 < .. < n < nb < .. < 1b` subject to the pair condition
//! below. The first fundamental module carries coefficient-1 transport along
//! the arrows; the higher ones are fused out of it inductively.

use crate::bipoly::BiRat;
use crate::crystal::CrystalGraph;
use crate::linalg::{Echelon, Op, SVec};
use crate::root::{AffineType, Family, Weight};
use crate::umodule::{hom_space, Twist, UModule};

/// A letter: `v` for the unbarred value `v`, `-v` for the barred one.
pub type Letter = i64;

/// Position of a letter in the total order `1 < .. < n < nb < .. < 1b`.
pub fn rank_of_letter(n: usize, l: Letter) -> i64 {
    if l > 0 {
        l
    } else {
        2 * n as i64 + 1 + l
    }
}

fn letter_label(l: Letter) -> String {
    if l > 0 {
        l.to_string()
    } else {
        format!("{}b", -l)
    }
}

pub fn column_label(col: &[Letter]) -> String {
    let body: Vec<String> = col.iter().map(|l| letter_label(*l)).collect();
    format!("({})", body.join(","))
}

/// Admissibility of a column: strictly increasing, and whenever the value `v`
/// appears unbarred at position `i` and barred at position `j` (1-based),
/// `i + (k - j + 1) <= v`.
pub fn is_admissible(n: usize, col: &[Letter]) -> bool {
    let k = col.len();
    for w in col.windows(2) {
        if rank_of_letter(n, w[0]) >= rank_of_letter(n, w[1]) {
            return false;
        }
    }
    for (i0, a) in col.iter().enumerate() {
        if *a <= 0 {
            continue;
        }
        for (j0, b) in col.iter().enumerate().skip(i0 + 1) {
            if *b == -*a {
                let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
                if i + (k as i64 - j + 1) > *a {
                    return false;
                }
            }
        }
    }
    true
}

fn column_weight(n: usize, col: &[Letter]) -> Weight {
    let mut w = vec![0i64; n];
    for l in col {
        if *l > 0 {
            w[(*l - 1) as usize] += 1;
        } else {
            w[(-*l - 1) as usize] -= 1;
        }
    }
    w
}

/// All admissible columns of length `k`, in lexicographic order of ranks.
pub fn admissible_columns(n: usize, k: usize) -> Vec<Vec<Letter>> {
    let alphabet: Vec<Letter> = (1..=n as i64).chain((1..=n as i64).rev().map(|v| -v)).collect();
    let mut out = Vec::new();
    let mut cur: Vec<Letter> = Vec::new();
    fn rec(
        n: usize,
        k: usize,
        alphabet: &[Letter],
        start: usize,
        cur: &mut Vec<Letter>,
        out: &mut Vec<Vec<Letter>>,
    ) {
        if cur.len() == k {
            if is_admissible(n, cur) {
                out.push(cur.clone());
            }
            return;
        }
        for (pos, l) in alphabet.iter().enumerate().skip(start) {
            cur.push(*l);
            rec(n, k, alphabet, pos + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, &alphabet, 0, &mut cur, &mut out);
    out
}

/// Signature of a letter for the classical index `i`: `+1`, `-1` or `0`.
fn signature(n: usize, i: usize, l: Letter) -> i64 {
    let i = i as i64;
    let np1 = if (i as usize) < n { -(i + 1) } else { 0 };
    if l == i || (np1 != 0 && l == np1) {
        1
    } else if (i + 1 <= n as i64 && l == i + 1) || l == -i {
        -1
    } else {
        0
    }
}

/// Apply `f~_i` (dir = +1) or `e~_i` (dir = -1) for a classical index `i`
/// through the bracketing rule: drop zeros, cancel adjacent `+-` pairs, then
/// act on the leftmost surviving `+` (for f) or rightmost surviving `-`
/// (for e).
fn classical_arrow(n: usize, i: usize, col: &[Letter], dir: i64) -> Option<Vec<Letter>> {
    // Stack cancellation leaves the reduced word "--..-++..+".
    let mut stack: Vec<(usize, i64)> = Vec::new();
    for (p, l) in col.iter().enumerate() {
        match signature(n, i, *l) {
            0 => {}
            1 => stack.push((p, 1)),
            _ => {
                if stack.last().is_some_and(|(_, s)| *s == 1) {
                    stack.pop();
                } else {
                    stack.push((p, -1));
                }
            }
        }
    }
    let pos = if dir == 1 {
        stack.iter().find(|(_, s)| *s == 1)?.0
    } else {
        stack.iter().rev().find(|(_, s)| *s == -1)?.0
    };
    let top = i == n;
    let i = i as i64;
    let mut out = col.to_vec();
    out[pos] = match (dir, out[pos]) {
        // i = n flips n <-> nb; otherwise the letter steps along the order.
        (1, l) if l == i => {
            if top {
                -i
            } else {
                i + 1
            }
        }
        (1, l) if l == -(i + 1) => -i,
        (-1, l) if l == -i && top => i,
        (-1, l) if l == i + 1 => i,
        (-1, l) if l == -i => -(i + 1),
        _ => unreachable!("signature rule out of sync"),
    };
    out.sort_by_key(|l| rank_of_letter(n, *l));
    assert!(is_admissible(n, &out), "crystal arrow left the admissible set");
    Some(out)
}

/// `e~_0` sends `(1, a_1, .., a_{k-1})` to `(a_1, .., a_{k-1}, 1b)`;
/// `f~_0` is the inverse move. Both are zero elsewhere (and when the move
/// would duplicate a letter).
fn zero_arrow(n: usize, col: &[Letter], dir: i64) -> Option<Vec<Letter>> {
    if dir == -1 {
        if col.first() != Some(&1) || col.last() == Some(&-1) {
            return None;
        }
        let mut out: Vec<Letter> = col[1..].to_vec();
        out.push(-1);
        is_admissible(n, &out).then_some(out)
    } else {
        if col.last() != Some(&-1) || col.first() == Some(&1) {
            return None;
        }
        let mut out = vec![1];
        out.extend_from_slice(&col[..col.len() - 1]);
        is_admissible(n, &out).then_some(out)
    }
}

pub fn build_crystal_c(n: usize, k: usize) -> CrystalGraph {
    assert!(k <= n, "fundamental index out of range: k={k}, n={n}");
    let t = AffineType::new(Family::C, n);
    let nodes = admissible_columns(n, k);
    let index: std::collections::HashMap<Vec<Letter>, usize> =
        nodes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let labels = nodes.iter().map(|c| column_label(c)).collect();
    let wt = nodes.iter().map(|c| column_weight(n, c)).collect();
    let mut f_arrow = vec![vec![None; nodes.len()]; t.index_count()];
    for i in t.indices() {
        for (b, col) in nodes.iter().enumerate() {
            let tgt = if i == 0 {
                zero_arrow(n, col, 1)
            } else {
                classical_arrow(n, i, col, 1)
            };
            if let Some(tgt) = tgt {
                f_arrow[i][b] = Some(index[&tgt]);
            }
        }
    }
    CrystalGraph::new(t, labels, wt, f_arrow)
}

/// The vector module `V(w_1)`: every weight space is a line and every string
/// has length one, so coefficient-1 transport along the crystal arrows
/// already satisfies the defining relations.
pub fn vector_module_c(n: usize) -> UModule {
    let b = build_crystal_c(n, 1);
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

/// `(-s)^m` (the twist unit of the fusion construction, `q = s^2`).
pub fn neg_qs_pow(m: i64) -> Twist {
    Twist::neg_s_pow(m)
}

/// The k-th fundamental module `V(w_k)`, built inductively as the submodule
/// of `V(w_1)_{(-s)^{k-1}} (x) V(w_{k-1})_{(-s)^{-1}}` generated by its unique
/// classical-highest vector of weight `w_k`.
pub fn fused_module_c(n: usize, k: usize) -> UModule {
    assert!(k >= 1 && k <= n, "fundamental index out of range: k={k}, n={n}");
    if k == 1 {
        return vector_module_c(n);
    }
    let t = AffineType::new(Family::C, n);
    let big = vector_module_c(n)
        .twist(&neg_qs_pow(k as i64 - 1))
        .tensor(&fused_module_c(n, k - 1).twist(&neg_qs_pow(-1)));
    let wk = t.fundamental_weight(k);
    let hw = big.classical_hw_vectors(&wk);
    assert_eq!(hw.len(), 1, "highest-vector space not a line in the fusion step");
    let sub = big.generated_submodule(&hw[0]);
    let expected = admissible_columns(n, k).len();
    assert_eq!(sub.dim(), expected, "fused submodule dimension mismatch");
    module_from_submodule(&big, &sub, &format!("w{k}"))
}

/// Re-express the generator action of `big` on the span of `sub` in the
/// echelon basis of `sub`. Every basis row is weight-homogeneous because the
/// closure only ever reduces homogeneous vectors against homogeneous pivots.
fn module_from_submodule(big: &UModule, sub: &Echelon, tag: &str) -> UModule {
    let basis: Vec<SVec> = sub.basis();
    let pivots: Vec<usize> = sub.rows().map(|(p, _)| p).collect();
    let pos: std::collections::BTreeMap<usize, usize> =
        pivots.iter().enumerate().map(|(j, p)| (*p, j)).collect();
    let dim = basis.len();
    let labels = (0..dim).map(|j| format!("{tag}[{j}]")).collect();
    let wt: Vec<Weight> = basis
        .iter()
        .map(|v| big.wt[*v.keys().next().expect("empty basis row")].clone())
        .collect();
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in big.t.indices() {
        let mut ei = Op::zero(dim, dim);
        let mut fi = Op::zero(dim, dim);
        for (j, v) in basis.iter().enumerate() {
            for (op, acc) in [(&big.e[i], &mut ei), (&big.f[i], &mut fi)] {
                let img = op.apply(v);
                let coords = sub
                    .coordinates(&img)
                    .expect("submodule not closed under the generators");
                for (p, c) in coords {
                    acc.set(pos[&p], j, c);
                }
            }
        }
        e.push(ei);
        f.push(fi);
    }
    UModule { t: big.t, labels, wt, e, f }
}

/// Index of the unique basis vector of weight `w_k` (the highest vector in
/// the fused basis).
pub fn hw_index(m: &UModule, k: usize) -> usize {
    let wk = m.t.fundamental_weight(k);
    let ws = m.weight_space(&wk);
    assert_eq!(ws.len(), 1, "highest weight space not a line");
    ws[0]
}

/// Scale an operator so its first nonzero entry (scanning columns in order,
/// then rows) is 1. The downstream uses (component ratios, kernels, images)
/// are insensitive to the overall scalar; this just pins a deterministic one.
pub fn normalize_leading(op: &Op) -> Op {
    let lead = op
        .cols
        .iter()
        .find_map(|c| c.values().next())
        .expect("cannot normalize the zero map");
    op.scale(&lead.recip())
}

/// The fusion intertwiners for type C:
/// `i_{mu,nu}: V(w_{mu+nu}) -> V(w_mu)_{(-s)^nu} (x) V(w_nu)_{(-s)^{-mu}}` and
/// `p_{mu,nu}: V(w_mu)_{(-s)^{-nu}} (x) V(w_nu)_{(-s)^{mu}} -> V(w_{mu+nu})`,
/// each solved as the unique (up to scalar) module map and scaled to a
/// leading entry of 1.
pub fn solve_ip_c(n: usize, mu: usize, nu: usize) -> (Op, Op) {
    assert!(mu >= 1 && nu >= 1 && mu + nu <= n);
    let vm = fused_module_c(n, mu);
    let vn = fused_module_c(n, nu);
    let vmn = fused_module_c(n, mu + nu);

    let i_tgt = vm
        .twist(&neg_qs_pow(nu as i64))
        .tensor(&vn.twist(&neg_qs_pow(-(mu as i64))));
    let i_maps = hom_space(&vmn, &i_tgt);
    assert_eq!(i_maps.len(), 1, "embedding space not a line");
    let i_op = normalize_leading(&i_maps[0]);

    let p_src = vm
        .twist(&neg_qs_pow(-(nu as i64)))
        .tensor(&vn.twist(&neg_qs_pow(mu as i64)));
    let p_maps = hom_space(&p_src, &vmn);
    assert_eq!(p_maps.len(), 1, "projection space not a line");
    let p_op = normalize_leading(&p_maps[0]);

    (i_op, p_op)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_counts() {
        // dim B(w_k) = C(2n, k) - C(2n, k-2).
        assert_eq!(admissible_columns(2, 1).len(), 4);
        assert_eq!(admissible_columns(2, 2).len(), 5);
        assert_eq!(admissible_columns(3, 1).len(), 6);
        assert_eq!(admissible_columns(3, 2).len(), 14);
        assert_eq!(admissible_columns(3, 3).len(), 14);
    }

    #[test]
    fn small_crystal_shape() {
        // n = 2, k = 2: the five columns and the f-arrows checked by hand.
        let b = build_crystal_c(2, 2);
        assert_eq!(b.len(), 5);
        let l = |x: usize| b.labels[x].clone();
        let idx = |s: &str| (0..b.len()).find(|x| l(*x) == s).unwrap();
        assert_eq!(b.f(2, idx("(1,2)")), Some(idx("(1,2b)")));
        assert_eq!(b.f(1, idx("(1,2)")), None);
        assert_eq!(b.f(1, idx("(1,2b)")), Some(idx("(2,2b)")));
        assert_eq!(b.f(1, idx("(2,2b)")), Some(idx("(2,1b)")));
        assert_eq!(b.f(2, idx("(2,1b)")), Some(idx("(2b,1b)")));
        assert_eq!(b.f(0, idx("(2,1b)")), Some(idx("(1,2)")));
        b.verify_invariants();
    }

    #[test]
    fn crystal_invariants_n3() {
        for k in 1..=3 {
            let b = build_crystal_c(3, k);
            b.verify_invariants();
            assert!(b.is_connected());
        }
    }

    #[test]
    fn vector_module_relations() {
        for n in [2, 3] {
            let m = vector_module_c(n);
            let rep = m.check_relations();
            assert!(rep.ok(), "{:?}", rep.failures);
        }
    }

    #[test]
    fn fused_modules_satisfy_relations() {
        for (n, k) in [(2, 2), (3, 2), (3, 3)] {
            let m = fused_module_c(n, k);
            assert_eq!(m.dim(), admissible_columns(n, k).len());
            let rep = m.check_relations();
            assert!(rep.ok(), "n={n} k={k}: {:?}", rep.failures);
        }
    }

    #[test]
    fn fusion_intertwiners_exist() {
        let (i_op, p_op) = solve_ip_c(3, 1, 1);
        // p o (twist-matched) i is a nonzero multiple of the identity only
        // after matching twists, so here just check shapes and normalization.
        let v2 = fused_module_c(3, 2);
        let v1 = fused_module_c(3, 1);
        assert_eq!(i_op.rows, v1.dim() * v1.dim());
        assert_eq!(i_op.ncols(), v2.dim());
        assert_eq!(p_op.rows, v2.dim());
        assert_eq!(p_op.ncols(), v1.dim() * v1.dim());
    }
}
