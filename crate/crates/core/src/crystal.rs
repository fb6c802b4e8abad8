//! Generic crystal machinery: finite regular crystals with an affine index
//! set, tensor products via the signature rule, the Weyl-group action on
//! nodes, extremal vectors, simplicity and connectedness.

use crate::root::{wt_sub, AffineType, Weight};
use num_rational::BigRational;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

/// Which of the two mirror-image signature conventions is used for tensor
/// products. `FirstFactorPriority` lets `f~_i` act on the first factor when
/// `phi_i(b1) > eps_i(b2)`; `SecondFactorPriority` is the mirrored rule.
///
/// The convention is fixed mechanically: the crystal of a tensor product must
/// reproduce the string data of the coproduct action on module matrices (see
/// the cross-check in the type A test suite). `FirstFactorPriority` is the
/// rule that matches the coproduct used throughout this crate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TensorRule {
    FirstFactorPriority,
    SecondFactorPriority,
}

/// The convention validated against module matrices; every caller uses this
/// unless it is explicitly probing the alternative.
pub const VALIDATED_TENSOR_RULE: TensorRule = TensorRule::FirstFactorPriority;

#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub t: AffineType,
    pub labels: Vec<String>,
    pub wt: Vec<Weight>,
    /// `f_arrow[i][b]` = target of `f~_i` from node `b`.
    pub f_arrow: Vec<Vec<Option<usize>>>,
    /// Inverse arrows `e~_i`, derived from `f_arrow`.
    pub e_arrow: Vec<Vec<Option<usize>>>,
}

impl CrystalGraph {
    pub fn new(
        t: AffineType,
        labels: Vec<String>,
        wt: Vec<Weight>,
        f_arrow: Vec<Vec<Option<usize>>>,
    ) -> Self {
        let m = labels.len();
        assert_eq!(wt.len(), m);
        assert_eq!(f_arrow.len(), t.index_count());
        let mut e_arrow = vec![vec![None; m]; t.index_count()];
        for (i, row) in f_arrow.iter().enumerate() {
            assert_eq!(row.len(), m);
            for (b, tgt) in row.iter().enumerate() {
                if let Some(c) = tgt {
                    assert!(e_arrow[i][*c].is_none(), "f~_{i} is not injective");
                    e_arrow[i][*c] = Some(b);
                }
            }
        }
        Self { t, labels, wt, f_arrow, e_arrow }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn f(&self, i: usize, b: usize) -> Option<usize> {
        self.f_arrow[i][b]
    }

    pub fn e(&self, i: usize, b: usize) -> Option<usize> {
        self.e_arrow[i][b]
    }

    /// `eps_i(b)`: number of times `e~_i` applies.
    pub fn eps(&self, i: usize, b: usize) -> i64 {
        let mut k = 0;
        let mut cur = b;
        while let Some(nxt) = self.e_arrow[i][cur] {
            cur = nxt;
            k += 1;
            assert!(k <= self.len() as i64, "cycle in {i}-string");
        }
        k
    }

    /// `phi_i(b)`: number of times `f~_i` applies.
    pub fn phi(&self, i: usize, b: usize) -> i64 {
        let mut k = 0;
        let mut cur = b;
        while let Some(nxt) = self.f_arrow[i][cur] {
            cur = nxt;
            k += 1;
            assert!(k <= self.len() as i64, "cycle in {i}-string");
        }
        k
    }

    /// Check the structural crystal axioms; panics with a description on failure.
    pub fn verify_invariants(&self) {
        for i in self.t.indices() {
            for b in 0..self.len() {
                if let Some(c) = self.f(i, b) {
                    assert_eq!(self.e(i, c), Some(b), "arrow inversion at i={i}, b={b}");
                    assert_eq!(
                        self.wt[c],
                        wt_sub(&self.wt[b], &self.t.alpha_cl(i)),
                        "wt(f~ b) = wt(b) - alpha_{i} at b={b}"
                    );
                }
                let diff = self.phi(i, b) - self.eps(i, b);
                assert_eq!(
                    diff,
                    self.t.pairing(i, &self.wt[b]),
                    "phi - eps = <h_{i}, wt> at node {} ({})",
                    b,
                    self.labels[b]
                );
            }
        }
    }

    /// Tensor product crystal under the given signature convention.
    pub fn tensor_with_rule(&self, other: &Self, rule: TensorRule) -> Self {
        assert_eq!(self.t, other.t, "affine type mismatch");
        let t = self.t;
        let m1 = self.len();
        let m2 = other.len();
        let mut labels = Vec::with_capacity(m1 * m2);
        let mut wt = Vec::with_capacity(m1 * m2);
        for b1 in 0..m1 {
            for b2 in 0..m2 {
                labels.push(format!("{}(x){}", self.labels[b1], other.labels[b2]));
                wt.push(crate::root::wt_add(&self.wt[b1], &other.wt[b2]));
            }
        }
        let idx = |b1: usize, b2: usize| b1 * m2 + b2;
        let mut f_arrow = vec![vec![None; m1 * m2]; t.index_count()];
        for i in t.indices() {
            for b1 in 0..m1 {
                for b2 in 0..m2 {
                    let first = match rule {
                        TensorRule::FirstFactorPriority => self.phi(i, b1) > other.eps(i, b2),
                        TensorRule::SecondFactorPriority => self.phi(i, b1) >= other.eps(i, b2),
                    };
                    f_arrow[i][idx(b1, b2)] = if first {
                        self.f(i, b1).map(|c| idx(c, b2))
                    } else {
                        other.f(i, b2).map(|c| idx(b1, c))
                    };
                }
            }
        }
        Self::new(t, labels, wt, f_arrow)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        self.tensor_with_rule(other, VALIDATED_TENSOR_RULE)
    }

    /// `S_{s_i} b`: apply `f~_i^k` when `k = <h_i, wt b> >= 0`, else `e~_i^{-k}`.
    pub fn weyl_action(&self, i: usize, b: usize) -> usize {
        let k = self.t.pairing(i, &self.wt[b]);
        let mut cur = b;
        if k >= 0 {
            for _ in 0..k {
                cur = self.f(i, cur).expect("regularity: f~ string too short");
            }
        } else {
            for _ in 0..(-k) {
                cur = self.e(i, cur).expect("regularity: e~ string too short");
            }
        }
        cur
    }

    /// Is `b` i-extremal for every i after any sequence of Weyl moves?
    pub fn is_extremal(&self, b: usize) -> bool {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([b]);
        seen.insert(b);
        while let Some(cur) = queue.pop_front() {
            for i in self.t.indices() {
                // i-extremal: the node sits at an end of its i-string.
                if self.eps(i, cur) != 0 && self.phi(i, cur) != 0 {
                    return false;
                }
                let nxt = self.weyl_action(i, cur);
                if seen.insert(nxt) {
                    queue.push_back(nxt);
                }
            }
        }
        true
    }

    fn e_max(&self, i: usize, b: usize) -> usize {
        let mut cur = b;
        while let Some(nxt) = self.e(i, cur) {
            cur = nxt;
        }
        cur
    }

    fn f_max(&self, i: usize, b: usize) -> usize {
        let mut cur = b;
        while let Some(nxt) = self.f(i, cur) {
            cur = nxt;
        }
        cur
    }

    /// Norm `(wt b, wt b)` used to steer the extremalization cascade.
    fn wt_norm(&self, b: usize) -> BigRational {
        self.t.inner(&self.wt[b], &self.wt[b])
    }

    /// Reach an extremal node from `b` by maximal-raising cascades
    /// (greedy norm increase first, then breadth-first closure).
    pub fn extremalize(&self, b: usize) -> usize {
        let mut cur = b;
        // Greedy phase: strictly increase the weight norm while possible.
        loop {
            let mut moved = false;
            for i in self.t.indices() {
                let cand = self.e_max(i, cur);
                if cand != cur && self.wt_norm(cand) > self.wt_norm(cur) {
                    cur = cand;
                    moved = true;
                    break;
                }
            }
            if !moved {
                break;
            }
        }
        if self.is_extremal(cur) {
            return cur;
        }
        // Closure phase: deterministic BFS over all maximal cascades.
        let mut seen = BTreeSet::from([cur]);
        let mut queue = VecDeque::from([cur]);
        while let Some(node) = queue.pop_front() {
            for i in self.t.indices() {
                for cand in [self.e_max(i, node), self.f_max(i, node)] {
                    if seen.insert(cand) {
                        if self.is_extremal(cand) {
                            return cand;
                        }
                        queue.push_back(cand);
                    }
                }
            }
        }
        unreachable!("no extremal node reachable from {b}: not a level-0 regular crystal?");
    }

    /// All extremal node indices.
    pub fn extremal_nodes(&self) -> Vec<usize> {
        (0..self.len()).filter(|b| self.is_extremal(*b)).collect()
    }

    /// Simplicity: all extremal weights in one classical Weyl orbit, exactly
    /// one node at the orbit's dominant weight, and every weight of the
    /// crystal inside the convex hull of the orbit.
    pub fn is_simple(&self) -> bool {
        let ext = self.extremal_nodes();
        if ext.is_empty() {
            return false;
        }
        let lambda = dominant_representative(self.t, &self.wt[ext[0]]);
        // (3) every extremal weight lies in W_cl * lambda
        for b in &ext {
            if dominant_representative(self.t, &self.wt[*b]) != lambda {
                return false;
            }
        }
        // (2) the lambda weight space is a single node
        let count = self.wt.iter().filter(|w| **w == lambda).count();
        if count != 1 {
            return false;
        }
        // (1) convex hull containment
        self.wt
            .iter()
            .all(|w| hull_contains(self.t, &lambda, &dominant_representative(self.t, w)))
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(b) = queue.pop_front() {
            for i in self.t.indices() {
                for nxt in [self.f(i, b), self.e(i, b)].into_iter().flatten() {
                    if !seen[nxt] {
                        seen[nxt] = true;
                        count += 1;
                        queue.push_back(nxt);
                    }
                }
            }
        }
        count == self.len()
    }

    /// DOT export with stable node ordering; edges are `f~_i` directions.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{name}\" {{").unwrap();
        writeln!(out, "  rankdir=TB;").unwrap();
        for (b, l) in self.labels.iter().enumerate() {
            writeln!(out, "  n{b} [label=\"{l}\"];").unwrap();
        }
        for i in self.t.indices() {
            for b in 0..self.len() {
                if let Some(c) = self.f(i, b) {
                    writeln!(out, "  n{b} -> n{c} [label=\"{i}\"];").unwrap();
                }
            }
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

/// The dominant representative of the classical Weyl orbit of `w`.
pub fn dominant_representative(t: AffineType, w: &Weight) -> Weight {
    let mut v = w.clone();
    match t.family {
        crate::root::Family::A => {
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        crate::root::Family::C => {
            for x in v.iter_mut() {
                *x = x.abs();
            }
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    v
}

/// Is the (already dominant) weight `mu` in the convex hull of `W_cl * lambda`
/// (`lambda` dominant)? Equivalent to `lambda - mu` being a non-negative
/// rational combination of the classical simple roots.
pub fn hull_contains(t: AffineType, lambda: &Weight, mu: &Weight) -> bool {
    let d = wt_sub(lambda, mu);
    let mut partial = 0i64;
    match t.family {
        crate::root::Family::A => {
            for x in &d {
                partial += x;
            }
            if partial != 0 {
                return false;
            }
            let mut acc = 0;
            for x in &d[..d.len() - 1] {
                acc += x;
                if acc < 0 {
                    return false;
                }
            }
            true
        }
        crate::root::Family::C => {
            for x in &d {
                partial += x;
                if partial < 0 {
                    return false;
                }
            }
            true
        }
    }
}

/// Do two weights lie in a common closed classical Weyl chamber? True iff
/// some Weyl element makes both dominant simultaneously. The pair orbit under
/// simple reflections is enumerated exhaustively — exact, and small at desk
/// scale (|W_cl| <= 120 for every supported rank).
pub fn share_chamber(t: AffineType, a: &Weight, b: &Weight) -> bool {
    let dominant_pair = |x: &Weight, y: &Weight| {
        t.classical_indices()
            .all(|i| t.pairing(i, x) >= 0 && t.pairing(i, y) >= 0)
    };
    let mut seen: BTreeSet<(Weight, Weight)> = BTreeSet::new();
    let mut queue = VecDeque::from([(a.clone(), b.clone())]);
    seen.insert((a.clone(), b.clone()));
    while let Some((x, y)) = queue.pop_front() {
        if dominant_pair(&x, &y) {
            return true;
        }
        for i in t.classical_indices() {
            let mut x2 = x.clone();
            let mut y2 = y.clone();
            reflect(t, i, &mut x2);
            reflect(t, i, &mut y2);
            if seen.insert((x2.clone(), y2.clone())) {
                queue.push_back((x2, y2));
            }
        }
    }
    false
}

fn reflect(t: AffineType, i: usize, w: &mut Weight) {
    let k = t.pairing(i, w);
    let alpha = t.alpha_cl(i);
    for (x, a) in w.iter_mut().zip(&alpha) {
        *x -= k * a;
    }
}

/// Word of reflections `i_1..i_N` with `mu = s_{i_N} ... s_{i_1} lambda` and
/// every intermediate pairing `<h_{i_k}, s_{i_{k-1}}...lambda>` strictly
/// positive. Guided depth-first search.
pub fn raising_word(t: AffineType, lambda: &Weight, mu: &Weight) -> Result<Vec<usize>, String> {
    if dominant_representative(t, lambda) != dominant_representative(t, mu) {
        return Err("not in same orbit".into());
    }
    let mut visited: BTreeSet<Weight> = BTreeSet::new();
    let mut stack: Vec<(Weight, Vec<usize>)> = vec![(lambda.clone(), vec![])];
    visited.insert(lambda.clone());
    while let Some((cur, word)) = stack.pop() {
        if &cur == mu {
            return Ok(word);
        }
        for i in t.indices().rev() {
            if t.pairing(i, &cur) > 0 {
                let mut nxt = cur.clone();
                reflect(t, i, &mut nxt);
                if visited.insert(nxt.clone()) {
                    let mut w2 = word.clone();
                    w2.push(i);
                    stack.push((nxt, w2));
                }
            }
        }
    }
    Err("no raising word found".into())
}

/// Replay a raising word, asserting the positivity side condition; returns the
/// final weight.
pub fn replay_raising_word(t: AffineType, lambda: &Weight, word: &[usize]) -> Result<Weight, String> {
    let mut cur = lambda.clone();
    for (k, i) in word.iter().enumerate() {
        if t.pairing(*i, &cur) <= 0 {
            return Err(format!("pairing non-positive at step {k}"));
        }
        reflect(t, *i, &mut cur);
    }
    Ok(cur)
}

/// Label-to-index lookup helper.
pub fn node_index(b: &CrystalGraph, label: &str) -> Option<usize> {
    let map: HashMap<&str, usize> = b
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    map.get(label).copied()
}
