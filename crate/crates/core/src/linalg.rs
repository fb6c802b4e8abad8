//! Exact sparse linear algebra over the bivariate rational scalars.
//!
//! Everything is deterministic: echelon bases pick pivots by ascending
//! coordinate, rows are normalized to a leading coefficient of 1, and all
//! iteration orders are fixed by `BTreeMap`s.

use crate::bipoly::BiRat;
use std::collections::BTreeMap;

/// Sparse vector: coordinate -> nonzero value.
pub type SVec = BTreeMap<usize, BiRat>;

pub fn sv_unit(i: usize) -> SVec {
    BTreeMap::from([(i, BiRat::one())])
}

pub fn sv_scale(v: &SVec, c: &BiRat) -> SVec {
    if c.is_zero() {
        return SVec::new();
    }
    v.iter().map(|(i, x)| (*i, c * x)).collect()
}

/// `v + c*w`.
pub fn sv_axpy(v: &SVec, c: &BiRat, w: &SVec) -> SVec {
    let mut out = v.clone();
    for (i, x) in w {
        let add = c * x;
        if add.is_zero() {
            continue;
        }
        match out.remove(i) {
            None => {
                out.insert(*i, add);
            }
            Some(cur) => {
                let s = &cur + &add;
                if !s.is_zero() {
                    out.insert(*i, s);
                }
            }
        }
    }
    out
}

pub fn sv_add(v: &SVec, w: &SVec) -> SVec {
    sv_axpy(v, &BiRat::one(), w)
}

pub fn sv_is_zero(v: &SVec) -> bool {
    v.is_empty()
}

/// Incremental echelon basis (pivot column -> row with leading 1 there).
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SVec)> {
        self.rows.iter().map(|(p, r)| (*p, r))
    }

    /// Reduce `v` against the basis.
    pub fn reduce(&self, mut v: SVec) -> SVec {
        loop {
            let hit = v
                .iter()
                .find_map(|(i, c)| self.rows.get(i).map(|r| (*i, c.clone(), r.clone())));
            match hit {
                None => return v,
                Some((_, c, r)) => {
                    v = sv_axpy(&v, &(-&c), &r);
                }
            }
        }
    }

    /// Insert `v` if independent; returns the pivot column on success.
    pub fn insert(&mut self, v: SVec) -> Option<usize> {
        let v = self.reduce(v);
        let (pivot, lead) = match v.iter().next() {
            None => return None,
            Some((p, c)) => (*p, c.clone()),
        };
        let v = sv_scale(&v, &lead.recip());
        // Back-substitute into existing rows to keep the basis fully reduced.
        let cols: Vec<usize> = self.rows.keys().copied().collect();
        for p in cols {
            let r = self.rows.get(&p).unwrap();
            if let Some(c) = r.get(&pivot).cloned() {
                let nr = sv_axpy(r, &(-&c), &v);
                self.rows.insert(p, nr);
            }
        }
        self.rows.insert(pivot, v);
        Some(pivot)
    }

    /// Coefficients of `v` on the basis rows, keyed by pivot column; `None`
    /// when `v` is outside the span. Valid because the basis is kept fully
    /// reduced: each row is the only one with support at its pivot.
    pub fn coordinates(&self, v: &SVec) -> Option<BTreeMap<usize, BiRat>> {
        let mut coords = BTreeMap::new();
        let mut rem = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p) {
                rem = sv_axpy(&rem, &(-c), row);
                coords.insert(*p, c.clone());
            }
        }
        sv_is_zero(&rem).then_some(coords)
    }

    pub fn contains(&self, v: &SVec) -> bool {
        sv_is_zero(&self.reduce(v.clone()))
    }

    /// Basis rows in pivot order.
    pub fn basis(&self) -> Vec<SVec> {
        self.rows.values().cloned().collect()
    }
}

/// Sparse linear operator stored by columns: `cols[j]` is the image of the
/// j-th source basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Op {
    pub rows: usize,
    pub cols: Vec<SVec>,
}

impl Op {
    pub fn zero(rows: usize, ncols: usize) -> Self {
        Self { rows, cols: vec![SVec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: (0..n).map(sv_unit).collect() }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn set(&mut self, r: usize, c: usize, v: BiRat) {
        assert!(r < self.rows && c < self.ncols());
        if v.is_zero() {
            self.cols[c].remove(&r);
        } else {
            self.cols[c].insert(r, v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> BiRat {
        self.cols[c].get(&r).cloned().unwrap_or_else(BiRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SVec::is_empty)
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        let mut out = SVec::new();
        for (j, c) in v {
            out = sv_axpy(&out, c, &self.cols[*j]);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Op) -> Op {
        assert_eq!(self.ncols(), other.rows);
        Op {
            rows: self.rows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &Op) -> Op {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.ncols(), other.ncols());
        Op {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| sv_add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Op) -> Op {
        self.add(&other.scale(&(-&BiRat::one())))
    }

    pub fn scale(&self, c: &BiRat) -> Op {
        Op {
            rows: self.rows,
            cols: self.cols.iter().map(|v| sv_scale(v, c)).collect(),
        }
    }

    pub fn transpose(&self) -> Op {
        let mut out = Op::zero(self.ncols(), self.rows);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out.cols[*i].insert(j, v.clone());
            }
        }
        out
    }

    /// Entries as dense rows (for small matrices only).
    pub fn to_dense(&self) -> Vec<Vec<BiRat>> {
        let mut out = vec![vec![BiRat::zero(); self.ncols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    pub fn from_dense(rows: &[Vec<BiRat>]) -> Op {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut out = Op::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.cols[j].insert(i, v.clone());
                }
            }
        }
        out
    }

    /// Map every entry.
    pub fn map(&self, f: impl Fn(&BiRat) -> BiRat) -> Op {
        Op {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|col| {
                    col.iter()
                        .filter_map(|(i, v)| {
                            let w = f(v);
                            (!w.is_zero()).then_some((*i, w))
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Reduced row echelon form of dense rows; returns `(rows, pivot_cols)`.
pub fn rref(mut rows: Vec<Vec<BiRat>>) -> (Vec<Vec<BiRat>>, Vec<usize>) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|i| !rows[*i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..ncols {
                if rows[r][j].is_zero() {
                    continue;
                }
                let t = &f * &rows[r][j];
                rows[i][j] = &rows[i][j] - &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of the right nullspace `{x : A x = 0}` of the dense constraint rows.
pub fn nullspace(rows: Vec<Vec<BiRat>>, ncols: usize) -> Vec<Vec<BiRat>> {
    if rows.is_empty() {
        return (0..ncols)
            .map(|j| {
                let mut v = vec![BiRat::zero(); ncols];
                v[j] = BiRat::one();
                v
            })
            .collect();
    }
    let (rr, pivots) = rref(rows);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut out = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![BiRat::zero(); ncols];
        v[free] = BiRat::one();
        for (ri, pc) in pivots.iter().enumerate() {
            v[*pc] = -&rr[ri][free];
        }
        out.push(v);
    }
    out
}

/// Solve `A x = b` for one solution; `None` when inconsistent. `A` is given
/// as dense rows.
pub fn solve(a: &[Vec<BiRat>], b: &[BiRat]) -> Option<Vec<BiRat>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BiRat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    // Rows with zero lhs and nonzero rhs are inconsistent.
    let (rr, pivots) = rref(std::mem::take(&mut aug));
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![BiRat::zero(); ncols];
    for (ri, pc) in pivots.iter().enumerate() {
        x[*pc] = rr[ri][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::{BiPoly, BiRat};
    use crate::scalar::LaurentPoly;

    fn c(n: i64) -> BiRat {
        BiRat::from_scalar(LaurentPoly::constant(crate::scalar::rat_int(n)))
    }

    #[test]
    fn echelon_and_nullspace() {
        let mut e = Echelon::new();
        assert!(e.insert(BTreeMap::from([(0, c(1)), (1, c(2))])).is_some());
        assert!(e.insert(BTreeMap::from([(0, c(2)), (1, c(4))])).is_none());
        assert!(e.insert(BTreeMap::from([(1, c(1))])).is_some());
        assert_eq!(e.dim(), 2);

        // x + 2y = 0 has a one-dimensional nullspace.
        let ns = nullspace(vec![vec![c(1), c(2)]], 2);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(&v[0] + &(&c(2) * &v[1]), BiRat::zero());
    }

    #[test]
    fn solve_small() {
        // x + y = 3, x - y = 1 -> x = 2, y = 1.
        let a = vec![vec![c(1), c(1)], vec![c(1), c(-1)]];
        let x = solve(&a, &[c(3), c(1)]).unwrap();
        assert_eq!(x, vec![c(2), c(1)]);
        // inconsistent
        let a = vec![vec![c(1), c(1)], vec![c(2), c(2)]];
        assert!(solve(&a, &[c(1), c(3)]).is_none());
    }

    #[test]
    fn op_compose_transpose() {
        let mut a = Op::zero(2, 2);
        a.set(0, 1, c(1));
        let mut b = Op::zero(2, 2);
        b.set(1, 0, c(5));
        let ab = a.compose(&b);
        assert_eq!(ab.get(0, 0), c(5));
        let at = a.transpose();
        assert_eq!(at.get(1, 0), c(1));
        let _ = BiPoly::one();
    }
}
