//! Dense exact linear algebra over subfields of the ambient field.

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};

/// Row-major matrix whose entries are certified to lie in the subfield of
/// order `field_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
    field_order: u64,
}

impl GFMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Elem>, field_order: u64) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(GFMatrix { rows, cols, entries, field_order })
    }

    pub fn zeros(rows: usize, cols: usize, field_order: u64) -> Self {
        GFMatrix { rows, cols, entries: vec![Elem::ZERO; rows * cols], field_order }
    }

    pub fn identity(n: usize, field_order: u64) -> Self {
        let mut m = Self::zeros(n, n, field_order);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Elem>], field_order: u64) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(GFMatrix {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
            field_order,
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Elem>], rows: usize, field_order: u64) -> Result<Self> {
        if cols.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension("column length mismatch".into()));
        }
        let mut m = Self::zeros(rows, cols.len(), field_order);
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field_order(&self) -> u64 {
        self.field_order
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> GFMatrix {
        let mut t = GFMatrix::zeros(self.cols, self.rows, self.field_order);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Submatrix on the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> GFMatrix {
        let mut m = GFMatrix::zeros(self.rows, cols.len(), self.field_order);
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                m.set(i, jj, self.get(i, j));
            }
        }
        m
    }

    /// Checks that every entry lies in the declared subfield.
    pub fn certify(&self, ctx: &FieldCtx) -> Result<()> {
        if ctx.in_subfield_all(&self.entries, self.field_order)? {
            Ok(())
        } else {
            Err(Error::NotInSubfield(self.field_order))
        }
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &GFMatrix) -> Result<GFMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let order = join_order(ctx, self.field_order, other.field_order);
        let mut out = GFMatrix::zeros(self.rows, other.cols, order);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = ctx.add(out.get(i, j), ctx.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, ctx: &FieldCtx, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows).map(|i| dot(ctx, self.row(i), v)).collect())
    }

    /// Entrywise `x -> x^{power}`.
    pub fn map_frobenius(&self, ctx: &FieldCtx, power: u64) -> GFMatrix {
        GFMatrix {
            entries: self.entries.iter().map(|&x| ctx.frobenius(x, power)).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, ctx: &FieldCtx, s: Elem) -> GFMatrix {
        GFMatrix {
            entries: self.entries.iter().map(|&x| ctx.mul(x, s)).collect(),
            ..self.clone()
        }
    }
}

/// Order of the smallest tower subfield containing both subfields.
pub fn join_order(ctx: &FieldCtx, a: u64, b: u64) -> u64 {
    let p = ctx.characteristic();
    let deg = |mut o: u64| {
        let mut d = 0u32;
        while o > 1 {
            o /= p;
            d += 1;
        }
        d.max(1)
    };
    let (da, db) = (deg(a), deg(b));
    let l = da / crate::arith::gcd(da as u64, db as u64) as u32 * db;
    p.pow(l).min(ctx.order())
}

#[inline]
pub fn dot(ctx: &FieldCtx, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| ctx.add(acc, ctx.mul(x, y)))
}

/// `a + s * b`, entrywise.
pub fn axpy(ctx: &FieldCtx, a: &mut [Elem], s: Elem, b: &[Elem]) {
    if s.is_zero() {
        return;
    }
    for (x, &y) in a.iter_mut().zip(b) {
        *x = ctx.add(*x, ctx.mul(s, y));
    }
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: GFMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination choosing, in each column, the first row at or
/// below the current pivot row with a nonzero entry.
pub fn rref(ctx: &FieldCtx, m: &GFMatrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                a.entries.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = ctx.inv(a.get(r, c)).expect("pivot is nonzero");
        for j in c..cols {
            let v = ctx.mul(a.get(r, j), inv);
            a.set(r, j, v);
        }
        let pivot_row: Vec<Elem> = a.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c);
            if f.is_zero() {
                continue;
            }
            let f = ctx.neg(f);
            axpy(ctx, &mut a.entries[i * cols..(i + 1) * cols], f, &pivot_row);
        }
        pivots.push(c);
        r += 1;
    }
    Rref { matrix: a, rank: pivots.len(), pivots }
}

pub fn rank(ctx: &FieldCtx, m: &GFMatrix) -> usize {
    rref(ctx, m).rank
}

/// Basis of the right kernel `{v : Mv = 0}`: one vector per free column in
/// increasing order, with a 1 at that column, 0 at the other free columns.
pub fn kernel_basis(ctx: &FieldCtx, m: &GFMatrix) -> Vec<Vec<Elem>> {
    let Rref { matrix: r, pivots, .. } = rref(ctx, m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Elem::ZERO; cols];
            v[f] = Elem::ONE;
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = ctx.neg(r.get(row, f));
            }
            v
        })
        .collect()
}

/// Some `x` with `Ax = b` (free variables set to zero), or `None`.
pub fn solve(ctx: &FieldCtx, a: &GFMatrix, b: &[Elem]) -> Result<Option<Vec<Elem>>> {
    if b.len() != a.rows {
        return Err(Error::Dimension(format!("rhs of length {} for {} rows", b.len(), a.rows)));
    }
    let mut aug = GFMatrix::zeros(a.rows, a.cols + 1, join_order(ctx, a.field_order, ctx.order()));
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, a.cols, b[i]);
    }
    let Rref { matrix: r, pivots, .. } = rref(ctx, &aug);
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = vec![Elem::ZERO; a.cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, a.cols);
    }
    Ok(Some(x))
}

pub fn inverse(ctx: &FieldCtx, a: &GFMatrix) -> Result<GFMatrix> {
    if a.rows != a.cols {
        return Err(Error::Dimension("inverse of a non-square matrix".into()));
    }
    let n = a.rows;
    let mut aug = GFMatrix::zeros(n, 2 * n, a.field_order);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, n + i, Elem::ONE);
    }
    let r = rref(ctx, &aug);
    if r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1) {
        return Err(Error::Singular);
    }
    let mut inv = GFMatrix::zeros(n, n, a.field_order);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.matrix.get(i, n + j));
        }
    }
    Ok(inv)
}

/// Kronecker product `A (x) B`: entry `(i_a * rows_b + i_b, j_a * cols_b + j_b)`
/// is `A[i_a, j_a] * B[i_b, j_b]`.
pub fn kron(ctx: &FieldCtx, a: &GFMatrix, b: &GFMatrix) -> GFMatrix {
    let order = join_order(ctx, a.field_order, b.field_order);
    let mut out = GFMatrix::zeros(a.rows * b.rows, a.cols * b.cols, order);
    for ia in 0..a.rows {
        for ja in 0..a.cols {
            let x = a.get(ia, ja);
            if x.is_zero() {
                continue;
            }
            for ib in 0..b.rows {
                for jb in 0..b.cols {
                    out.set(ia * b.rows + ib, ja * b.cols + jb, ctx.mul(x, b.get(ib, jb)));
                }
            }
        }
    }
    out
}

/// Incrementally built echelon basis, used for independence searches.
///
/// Each stored vector has a 1 at its pivot and zeros at the pivots of all
/// earlier vectors, so reducing in insertion order clears every pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    vecs: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { vecs: Vec::new(), pivots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vecs.is_empty()
    }

    /// Reduces `v` against the basis; returns the residual.
    pub fn reduce(&self, ctx: &FieldCtx, v: &[Elem]) -> Vec<Elem> {
        let mut w = v.to_vec();
        for (b, &p) in self.vecs.iter().zip(&self.pivots) {
            let c = w[p];
            if !c.is_zero() {
                axpy(ctx, &mut w, ctx.neg(c), b);
            }
        }
        w
    }

    /// Adds `v` if it is independent of the current basis.
    pub fn insert(&mut self, ctx: &FieldCtx, v: &[Elem]) -> bool {
        let w = self.reduce(ctx, v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = ctx.inv(w[p]).expect("nonzero");
        let w: Vec<Elem> = w.iter().map(|&x| ctx.mul(x, inv)).collect();
        self.vecs.push(w);
        self.pivots.push(p);
        true
    }

    pub fn pop(&mut self) {
        self.vecs.pop();
        self.pivots.pop();
    }
}

impl Default for Echelon {
    fn default() -> Self {
        Self::new()
    }
}

/// True iff the vectors are linearly independent.
pub fn independent(ctx: &FieldCtx, vs: &[&[Elem]]) -> bool {
    let mut e = Echelon::new();
    vs.iter().all(|v| e.insert(ctx, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldCtx {
        FieldCtx::new(3, 2).unwrap()
    }

    #[test]
    fn rref_of_zero_and_identity() {
        let ctx = f9();
        let z = GFMatrix::zeros(3, 4, 9);
        let r = rref(&ctx, &z);
        assert_eq!((r.rank, r.pivots.len()), (0, 0));
        let id = GFMatrix::identity(5, 9);
        let r = rref(&ctx, &id);
        assert_eq!(r.rank, 5);
        assert_eq!(r.pivots, vec![0, 1, 2, 3, 4]);
        assert_eq!(r.matrix, id);
    }

    #[test]
    fn kernel_edge_cases() {
        let ctx = f9();
        assert!(kernel_basis(&ctx, &GFMatrix::identity(4, 9)).is_empty());
        let k = kernel_basis(&ctx, &GFMatrix::zeros(1, 3, 9));
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            let mut e = vec![Elem::ZERO; 3];
            e[i] = Elem::ONE;
            assert_eq!(v, &e);
        }
    }

    #[test]
    fn solve_edge_cases() {
        let ctx = f9();
        let b = vec![ctx.pow_gen(3), Elem::ZERO, Elem::ONE];
        assert_eq!(solve(&ctx, &GFMatrix::identity(3, 9), &b).unwrap(), Some(b.clone()));
        assert_eq!(solve(&ctx, &GFMatrix::zeros(3, 3, 9), &b).unwrap(), None);
        assert!(solve(&ctx, &GFMatrix::zeros(2, 3, 9), &b).is_err());
    }

    #[test]
    fn inverse_and_singular() {
        let ctx = f9();
        let g = ctx.generator();
        let a = GFMatrix::from_rows(&[vec![Elem::ONE, g], vec![g, Elem::ONE]], 9).unwrap();
        let inv = inverse(&ctx, &a).unwrap();
        assert_eq!(a.mul(&ctx, &inv).unwrap(), GFMatrix::identity(2, 9));
        let s = GFMatrix::from_rows(&[vec![Elem::ONE, g], vec![g, ctx.mul(g, g)]], 9).unwrap();
        assert_eq!(inverse(&ctx, &s), Err(Error::Singular));
    }

    #[test]
    fn kron_with_identity() {
        let ctx = f9();
        let g = ctx.generator();
        let a = GFMatrix::from_rows(&[vec![Elem::ONE, g], vec![Elem::ZERO, g]], 9).unwrap();
        let k = kron(&ctx, &GFMatrix::identity(2, 9), &a);
        assert_eq!(k.get(2, 3), g);
        assert_eq!(k.get(0, 2), Elem::ZERO);
        assert_eq!(k.get(1, 1), g);
    }

    #[test]
    fn echelon_detects_dependence() {
        let ctx = f9();
        let g = ctx.generator();
        let u = vec![Elem::ONE, g, Elem::ZERO];
        let v = vec![Elem::ZERO, Elem::ONE, g];
        let w: Vec<Elem> = u.iter().zip(&v).map(|(&a, &b)| ctx.add(ctx.mul(g, a), b)).collect();
        assert!(independent(&ctx, &[&u, &v]));
        assert!(!independent(&ctx, &[&u, &v, &w]));
    }
}
