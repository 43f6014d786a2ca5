//! The twisted tensor embedding `alpha: PG(r-1, q^t) -> PG(r^t - 1, q^t)`,
//! the twisted Frobenius map whose fixed points form a subgeometry over
//! `F_q`, lifting of collineations, and separating hyperplanes.
//!
//! Coordinates of `PG(r^t - 1, q^t)` are indexed by functions
//! `f: {0..t-1} -> {0..r-1}` through `index(f) = sum_i f(i) r^i`, so `f(0)` is
//! the least significant base-`r` digit. With this indexing the lift of a
//! matrix `g` is the Kronecker product
//! `g^{(q^{t-1})} (x) ... (x) g^{(q)} (x) g`.

use crate::arith::{checked_pow, prime_power};
use crate::error::{Error, Result};
use crate::geometry::ProjPoint;
use crate::gf::{Elem, FieldCtx, DEFAULT_TABLE_CAP};
use crate::pglin::{dot, inverse, kernel_basis, kron, rank, GFMatrix};

/// A point of the variety together with its subgeometry coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyPoint {
    pub source: ProjPoint,
    /// Fixed by the twisted Frobenius map; `image[index(f)] = prod_i x_{f(i)}^{q^i}`.
    pub image: Vec<Elem>,
    /// Coordinates over `F_q` with respect to the fixed-space basis.
    pub fq_coords: Vec<Elem>,
}

/// Coordinates of `F_{q^t}` over `F_q` in the basis `1, g, ..., g^{t-1}`,
/// recovered through the trace dual basis.
#[derive(Clone, Debug)]
struct FqBasis {
    powers: Vec<Elem>,
    /// Inverse of the trace Gram matrix `Tr(g^{i+j})`.
    gram_inv: GFMatrix,
}

impl FqBasis {
    fn new(ctx: &FieldCtx, q: u64, t: usize) -> Result<Self> {
        let powers: Vec<Elem> = (0..t as u64).map(|j| ctx.pow_gen(j)).collect();
        let mut gram = GFMatrix::zeros(t, t, q);
        for i in 0..t {
            for j in 0..t {
                gram.set(i, j, trace(ctx, ctx.mul(powers[i], powers[j]), q, t));
            }
        }
        let gram_inv = inverse(ctx, &gram)?;
        Ok(FqBasis { powers, gram_inv })
    }

    fn coords(&self, ctx: &FieldCtx, x: Elem, q: u64) -> Vec<Elem> {
        let t = self.powers.len();
        let tr: Vec<Elem> = self.powers.iter().map(|&b| trace(ctx, ctx.mul(x, b), q, t)).collect();
        (0..t).map(|j| dot(ctx, self.gram_inv.row(j), &tr)).collect()
    }
}

fn trace(ctx: &FieldCtx, x: Elem, q: u64, t: usize) -> Elem {
    let mut acc = Elem::ZERO;
    let mut y = x;
    for _ in 0..t {
        acc = ctx.add(acc, y);
        y = ctx.frobenius(y, q);
    }
    acc
}

/// Parameters `(q, r, t)` with the field `F_{q^t}` and the fixed-space basis.
#[derive(Clone, Debug)]
pub struct VarietyCtx {
    q: u64,
    r: usize,
    t: usize,
    dim: usize,
    field: FieldCtx,
    /// `shift[index(f)] = index(f o shift)` with `(f o shift)(i) = f(i+1 mod t)`.
    shift: Vec<usize>,
    fq_basis: FqBasis,
    fix_basis: Vec<Vec<Elem>>,
    fix_inverse: GFMatrix,
}

impl VarietyCtx {
    pub fn new(q: u64, r: usize, t: usize) -> Result<Self> {
        Self::with_cap(q, r, t, DEFAULT_TABLE_CAP)
    }

    pub fn with_cap(q: u64, r: usize, t: usize, cap: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        validate_params(q, r, t)?;
        let dim = checked_pow(r as u64, t as u32)
            .filter(|&d| d <= 4096)
            .ok_or_else(|| Error::InvalidParameters(format!("r^t = {r}^{t} is too large")))?
            as usize;
        let field = FieldCtx::with_cap(p, e * t as u32, cap)?;
        let shift = (0..dim).map(|idx| idx / r + (idx % r) * dim / r).collect();
        let fq_basis = FqBasis::new(&field, q, t)?;
        let mut ctx = VarietyCtx {
            q,
            r,
            t,
            dim,
            field,
            shift,
            fq_basis,
            fix_basis: Vec::new(),
            fix_inverse: GFMatrix::zeros(0, 0, q),
        };
        ctx.fix_basis = ctx.compute_fix_basis()?;
        let b = GFMatrix::from_columns(&ctx.fix_basis, dim, ctx.ext_order())?;
        ctx.fix_inverse = inverse(&ctx.field, &b)
            .map_err(|_| Error::Internal("fixed-space basis is not a basis over F_{q^t}".into()))?;
        Ok(ctx)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// `r^t`, the vector dimension of the embedding space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    /// `q^t`.
    pub fn ext_order(&self) -> u64 {
        self.field.order()
    }

    pub fn index_of(&self, f: &[usize]) -> usize {
        f.iter().rev().fold(0, |acc, &d| acc * self.r + d)
    }

    pub fn function_of(&self, mut index: usize) -> Vec<usize> {
        (0..self.t)
            .map(|_| {
                let d = index % self.r;
                index /= self.r;
                d
            })
            .collect()
    }

    /// `N(x) = x^{1 + q + ... + q^{t-1}}`, the norm to `F_q`.
    pub fn norm(&self, x: Elem) -> Elem {
        let e = (self.field.order() - 1) / (self.q - 1);
        self.field.pow(x, e)
    }

    /// Embedding of an arbitrary nonzero representative vector.
    pub fn alpha_vector(&self, x: &[Elem]) -> Vec<Elem> {
        let ctx = &self.field;
        // conj[i][j] = x_j^{q^i}
        let mut conj = Vec::with_capacity(self.t);
        let mut row = x.to_vec();
        for _ in 0..self.t {
            conj.push(row.clone());
            row = row.iter().map(|&y| ctx.frobenius(y, self.q)).collect();
        }
        (0..self.dim)
            .map(|idx| {
                let mut rem = idx;
                let mut acc = Elem::ONE;
                for c in &conj {
                    acc = ctx.mul(acc, c[rem % self.r]);
                    rem /= self.r;
                }
                acc
            })
            .collect()
    }

    pub fn alpha(&self, p: &ProjPoint) -> Result<VarietyPoint> {
        if p.coords().len() != self.r {
            return Err(Error::Dimension(format!("point of PG({}) for r = {}", p.dim(), self.r)));
        }
        let image = self.alpha_vector(p.coords());
        let fq_coords = self
            .to_subgeometry_coords(&image)
            .map_err(|e| Error::Internal(format!("embedded point is not over F_q: {e}")))?;
        Ok(VarietyPoint { source: p.clone(), image, fq_coords })
    }

    /// `tau(v)[index(f)] = v[index(f o shift)]^q`.
    pub fn twist_map(&self, v: &[Elem]) -> Vec<Elem> {
        self.shift.iter().map(|&s| self.field.frobenius(v[s], self.q)).collect()
    }

    pub fn fix_space_basis(&self) -> &[Vec<Elem>] {
        &self.fix_basis
    }

    /// Kernel of `tau - id` viewed as an `F_q`-linear map on `t * r^t`
    /// coordinates; coordinate `a * t + j` is the coefficient of `g^j` in entry `a`.
    /// The map is block diagonal over the cycles of `shift`, so each cycle is
    /// solved separately; the canonical kernel basis is unchanged by this.
    fn compute_fix_basis(&self) -> Result<Vec<Vec<Elem>>> {
        let ctx = &self.field;
        let (t, d) = (self.t, self.dim);
        let mut seen = vec![false; d];
        // (free column, vector) pairs, sorted at the end to match a global elimination.
        let mut basis: Vec<(usize, Vec<Elem>)> = Vec::with_capacity(d);
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                cycle.push(a);
                a = self.shift[a];
            }
            cycle.sort_unstable();
            let local = |a: usize| cycle.binary_search(&a).expect("same cycle");
            let size = t * cycle.len();
            let mut m = GFMatrix::zeros(size, size, self.q);
            for (ai, &a) in cycle.iter().enumerate() {
                for j in 0..t {
                    let mut v = vec![Elem::ZERO; d];
                    v[a] = self.fq_basis.powers[j];
                    let tv = self.twist_map(&v);
                    for (b, (&x, &y)) in tv.iter().zip(&v).enumerate() {
                        let diff = ctx.sub(x, y);
                        if diff.is_zero() {
                            continue;
                        }
                        let bi = local(b);
                        for (k, c) in self.fq_basis.coords(ctx, diff, self.q).into_iter().enumerate() {
                            m.set(bi * t + k, ai * t + j, c);
                        }
                    }
                }
            }
            for c in kernel_basis(ctx, &m) {
                let free = c.iter().rposition(|x| !x.is_zero()).expect("nonzero kernel vector");
                let mut v = vec![Elem::ZERO; d];
                for (ai, &a) in cycle.iter().enumerate() {
                    v[a] = (0..t).fold(Elem::ZERO, |acc, j| {
                        ctx.add(acc, ctx.mul(c[ai * t + j], self.fq_basis.powers[j]))
                    });
                }
                basis.push((cycle[free / t] * t + free % t, v));
            }
        }
        if basis.len() != d {
            return Err(Error::Internal(format!(
                "fixed space has F_q-dimension {} instead of {d}",
                basis.len()
            )));
        }
        basis.sort_by_key(|(f, _)| *f);
        Ok(basis.into_iter().map(|(_, v)| v).collect())
    }

    /// Coordinates over `F_q` of a fixed vector with respect to the fixed-space basis.
    pub fn to_subgeometry_coords(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.dim {
            return Err(Error::Dimension(format!("vector of length {} for r^t = {}", v.len(), self.dim)));
        }
        let c = self.fix_inverse.mul_vec(&self.field, v)?;
        if self.field.in_subfield_all(&c, self.q)? {
            Ok(c)
        } else {
            Err(Error::NotFixed)
        }
    }

    /// Inverse of [`Self::to_subgeometry_coords`].
    pub fn from_subgeometry_coords(&self, c: &[Elem]) -> Vec<Elem> {
        let mut v = vec![Elem::ZERO; self.dim];
        for (b, &x) in self.fix_basis.iter().zip(c) {
            crate::pglin::axpy(&self.field, &mut v, x, b);
        }
        v
    }

    /// Matrix of `g (x) g^{(q)} (x) ... (x) g^{(q^{t-1})}` in the `index(f)` coordinates.
    pub fn lift_collineation(&self, g: &GFMatrix) -> Result<GFMatrix> {
        if g.rows() != self.r || g.cols() != self.r {
            return Err(Error::Dimension(format!("{}x{} matrix for r = {}", g.rows(), g.cols(), self.r)));
        }
        let ctx = &self.field;
        if rank(ctx, g) < self.r {
            return Err(Error::Singular);
        }
        let mut acc = g.clone();
        let mut conj = g.clone();
        for _ in 1..self.t {
            conj = conj.map_frobenius(ctx, self.q);
            acc = kron(ctx, &conj, &acc);
        }
        Ok(acc)
    }

    /// Coefficients `Lambda` of a hyperplane containing the images of all
    /// listed subspaces (given by spanning vectors) but not `alpha(p)`:
    /// `Lambda[index(f)] = prod_i a_{i,f(i)}^{q^i}` for linear forms `l_i`
    /// vanishing on subspace `i` and not at `p`.
    pub fn separating_hyperplane(&self, subspaces: &[Vec<Vec<Elem>>], p: &[Elem]) -> Result<Vec<Elem>> {
        let ctx = &self.field;
        if subspaces.len() > self.t {
            return Err(Error::InvalidParameters(format!(
                "{} subspaces given, at most t = {} allowed",
                subspaces.len(),
                self.t
            )));
        }
        if p.len() != self.r || p.iter().all(|x| x.is_zero()) {
            return Err(Error::Dimension("point must be a nonzero vector of length r".into()));
        }
        let mut forms: Vec<Vec<Elem>> = Vec::with_capacity(self.t);
        for i in 0..self.t {
            let which = i.min(subspaces.len().saturating_sub(1));
            let span: &[Vec<Elem>] = subspaces.get(which).map_or(&[], |s| s.as_slice());
            if span.iter().any(|v| v.len() != self.r) {
                return Err(Error::Dimension("subspace vector of wrong length".into()));
            }
            let candidates = if span.is_empty() {
                (0..self.r).map(|k| ProjPoint::unit(self.r, k).into_coords()).collect()
            } else {
                kernel_basis(ctx, &GFMatrix::from_rows(span, self.ext_order())?)
            };
            let form = candidates
                .into_iter()
                .find(|l| !dot(ctx, l, p).is_zero())
                .ok_or(Error::PointInSubspace(which))?;
            forms.push(form);
        }
        let conj: Vec<Vec<Elem>> = forms
            .iter()
            .enumerate()
            .map(|(i, l)| {
                let e = self.q.pow(i as u32);
                l.iter().map(|&a| ctx.frobenius(a, e)).collect()
            })
            .collect();
        Ok((0..self.dim)
            .map(|idx| {
                let mut rem = idx;
                conj.iter().fold(Elem::ONE, |acc, c| {
                    let a = c[rem % self.r];
                    rem /= self.r;
                    ctx.mul(acc, a)
                })
            })
            .collect())
    }
}

fn validate_params(q: u64, r: usize, t: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidParameters("r must be at least 2".into()));
    }
    if t < 2 {
        return Err(Error::InvalidParameters("t must be at least 2".into()));
    }
    if t as u64 >= q {
        return Err(Error::InvalidParameters(format!("t = {t} must be smaller than q = {q}")));
    }
    Ok(())
}
