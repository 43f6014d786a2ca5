use super::{Code, CodeKind};
use crate::error::{Error, Result};
use crate::geometry::normalize_with_scalar;
use crate::gf::{Elem, FieldCtx};
use crate::pglin::{rank, GFMatrix};
use rand::Rng;

/// Coordinate map `w -> w'` with `w'[perm[i]] = scalars[i] * w[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    pub perm: Vec<usize>,
    pub scalars: Vec<Elem>,
}

impl MonomialMap {
    pub fn identity(n: usize) -> Self {
        MonomialMap { perm: (0..n).collect(), scalars: vec![Elem::ONE; n] }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.scalars.iter().all(|&s| s == Elem::ONE)
    }

    pub fn apply(&self, ctx: &FieldCtx, w: &[Elem]) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO; w.len()];
        for (i, (&p, &s)) in self.perm.iter().zip(&self.scalars).enumerate() {
            out[p] = ctx.mul(s, w[i]);
        }
        out
    }

    /// `self` after `other`.
    pub fn compose(&self, ctx: &FieldCtx, other: &MonomialMap) -> MonomialMap {
        MonomialMap {
            perm: other.perm.iter().map(|&p| self.perm[p]).collect(),
            scalars: other.perm.iter().zip(&other.scalars).map(|(&p, &s)| ctx.mul(self.scalars[p], s)).collect(),
        }
    }
}

/// Uniformly random invertible `r x r` matrix over the subfield of order `field_order`.
pub fn random_invertible<R: Rng>(ctx: &FieldCtx, r: usize, field_order: u64, rng: &mut R) -> Result<GFMatrix> {
    let elems = ctx.elements(field_order)?;
    loop {
        let entries = (0..r * r).map(|_| elems[rng.gen_range(0..elems.len())]).collect();
        let m = GFMatrix::new(r, r, entries, field_order)?;
        if rank(ctx, &m) == r {
            return Ok(m);
        }
    }
}

/// The monomial automorphism induced by the collineation `g`: if
/// `g rep_i = mu rep_j` then column `i` goes to column `j` with scalar
/// `N(mu)`. Checked against the lifted matrix on every column and on a
/// kernel basis.
pub fn monomial_automorphism_from(code: &Code, g: &GFMatrix) -> Result<MonomialMap> {
    if matches!(code.kind(), CodeKind::Punctured { .. }) {
        return Err(Error::InvalidParameters("monomial lifting needs the full set of variety columns".into()));
    }
    let ctx = code.field();
    let var = code.variety();
    let lift = var.lift_collineation(g)?;
    let n = code.n();
    let mut perm = Vec::with_capacity(n);
    let mut scalars = Vec::with_capacity(n);
    for (i, rep) in code.reps().iter().enumerate() {
        let v = g.mul_vec(ctx, rep)?;
        let (p, lead) = normalize_with_scalar(ctx, &v)?;
        let j = code
            .point_index()
            .get(&p)
            .ok_or_else(|| Error::Certificate(format!("image of column {i} is not a column")))?;
        let rep_lead = code.reps()[j].iter().copied().find(|x| !x.is_zero()).expect("nonzero rep");
        let s = var.norm(ctx.div(lead, rep_lead)?);
        let lifted = lift.mul_vec(ctx, &code.images()[i])?;
        let expect: Vec<Elem> = code.images()[j].iter().map(|&x| ctx.mul(s, x)).collect();
        if lifted != expect {
            return Err(Error::Certificate(format!("lifted matrix disagrees on column {i}")));
        }
        perm.push(j);
        scalars.push(s);
    }
    let map = MonomialMap { perm, scalars };
    for w in code.kernel_basis() {
        if !code.is_codeword(&map.apply(ctx, w)) {
            return Err(Error::Certificate("monomial map sends a basis word outside the code".into()));
        }
    }
    Ok(map)
}
