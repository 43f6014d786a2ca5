//! Projective spaces over subfields of the ambient field: canonical points,
//! Singer and affine Singer cycles, sublines and subgeometries.

use crate::arith::checked_pow;
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};
use crate::pglin::{inverse, GFMatrix};
use std::collections::{HashMap, HashSet};

/// A projective point in canonical form: the first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<Elem>,
}

impl ProjPoint {
    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Elem> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// `e_i` in a space of vector dimension `len`.
    pub fn unit(len: usize, i: usize) -> ProjPoint {
        let mut coords = vec![Elem::ZERO; len];
        coords[i] = Elem::ONE;
        ProjPoint { coords }
    }
}

/// Scales `v` so its first nonzero coordinate is 1.
pub fn normalize(ctx: &FieldCtx, v: &[Elem]) -> Result<ProjPoint> {
    let lead = v.iter().copied().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    let inv = ctx.inv(lead)?;
    Ok(ProjPoint { coords: v.iter().map(|&x| ctx.mul(x, inv)).collect() })
}

/// Like [`normalize`], also returning the factor `mu` with `v = mu * point`.
pub fn normalize_with_scalar(ctx: &FieldCtx, v: &[Elem]) -> Result<(ProjPoint, Elem)> {
    let lead = v.iter().copied().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    Ok((normalize(ctx, v)?, lead))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointOrder {
    Lex,
    Singer,
}

/// Number of points of `PG(dim, order)`.
pub fn point_count(dim: usize, order: u64) -> Result<u64> {
    let top = checked_pow(order, dim as u32 + 1)
        .ok_or_else(|| Error::InvalidParameters("projective space too large".into()))?;
    Ok((top - 1) / (order - 1))
}

/// All points of `PG(dim, field_order)` in the requested order.
///
/// Lex order compares coordinate I/O codes left to right.
pub fn enumerate_points(ctx: &FieldCtx, dim: usize, field_order: u64, order: PointOrder) -> Result<Vec<ProjPoint>> {
    match order {
        PointOrder::Lex => lex_points(ctx, dim, field_order),
        PointOrder::Singer if dim == 0 => Ok(vec![ProjPoint::unit(1, 0)]),
        PointOrder::Singer => Ok(singer_ordering(ctx, dim + 1, field_order)?.points),
    }
}

fn lex_points(ctx: &FieldCtx, dim: usize, field_order: u64) -> Result<Vec<ProjPoint>> {
    let elems = ctx.elements(field_order)?;
    let len = dim + 1;
    let mut out = Vec::with_capacity(point_count(dim, field_order)? as usize);
    for lead in (0..len).rev() {
        let free = len - lead - 1;
        let total = field_order.pow(free as u32);
        for idx in 0..total {
            let mut coords = vec![Elem::ZERO; len];
            coords[lead] = Elem::ONE;
            let mut rem = idx;
            for k in (lead + 1..len).rev() {
                coords[k] = elems[(rem % field_order) as usize];
                rem /= field_order;
            }
            out.push(ProjPoint { coords });
        }
    }
    Ok(out)
}

/// Lookup from canonical coordinates to a position in a point list.
#[derive(Clone, Debug, Default)]
pub struct PointIndex {
    map: HashMap<Vec<Elem>, usize>,
}

impl PointIndex {
    pub fn new(points: &[ProjPoint]) -> Self {
        PointIndex {
            map: points.iter().enumerate().map(|(i, p)| (p.coords.clone(), i)).collect(),
        }
    }

    pub fn get(&self, p: &ProjPoint) -> Option<usize> {
        self.map.get(&p.coords).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Companion matrix of a monic polynomial (coefficients low-first, leading 1
/// included): the matrix of multiplication by `x` on `1, x, ..., x^{d-1}`.
pub fn companion_matrix(ctx: &FieldCtx, poly: &[Elem], field_order: u64) -> GFMatrix {
    let d = poly.len() - 1;
    let mut c = GFMatrix::zeros(d, d, field_order);
    for i in 0..d {
        if i + 1 < d {
            c.set(i + 1, i, Elem::ONE);
        }
        c.set(i, d - 1, ctx.neg(poly[i]));
    }
    c
}

/// Points of `PG(r-1, q')` ordered along a Singer cycle.
#[derive(Clone, Debug)]
pub struct SingerOrdering {
    /// Companion matrix of `poly`.
    pub generator: GFMatrix,
    pub poly: Vec<Elem>,
    pub points: Vec<ProjPoint>,
    /// `reps[i] = generator^i e_0`, the orbit vectors before normalization.
    pub reps: Vec<Vec<Elem>>,
    /// `generator^n = return_scalar * I`.
    pub return_scalar: Elem,
}

pub fn singer_ordering(ctx: &FieldCtx, r: usize, field_order: u64) -> Result<SingerOrdering> {
    if r < 2 {
        return Err(Error::InvalidParameters("a Singer cycle needs r >= 2".into()));
    }
    let poly = ctx.primitive_poly_over(field_order, r as u32)?;
    let generator = companion_matrix(ctx, &poly, field_order);
    let n = point_count(r - 1, field_order)? as usize;
    let mut reps = Vec::with_capacity(n);
    let mut points = Vec::with_capacity(n);
    let mut seen = HashSet::with_capacity(n);
    let mut v = ProjPoint::unit(r, 0).coords;
    for _ in 0..n {
        let p = normalize(ctx, &v)?;
        if !seen.insert(p.clone()) {
            return Err(Error::Internal("Singer orbit revisited a point early".into()));
        }
        points.push(p);
        let next = generator.mul_vec(ctx, &v)?;
        reps.push(v);
        v = next;
    }
    // v = generator^n e_0 must be a multiple of e_0
    let return_scalar = v[0];
    if return_scalar.is_zero() || v[1..].iter().any(|x| !x.is_zero()) {
        return Err(Error::Internal("Singer orbit does not close".into()));
    }
    Ok(SingerOrdering { generator, poly, points, reps, return_scalar })
}

/// The `q+1` points `{A + lambda B : lambda in F_q} u {B}` of the subline
/// spanned over `F_q` by the given representatives.
pub fn subline_points(ctx: &FieldCtx, a: &[Elem], b: &[Elem], base_order: u64) -> Result<Vec<ProjPoint>> {
    if a.len() != b.len() {
        return Err(Error::Dimension("subline representatives differ in length".into()));
    }
    let pa = normalize(ctx, a)?;
    let pb = normalize(ctx, b)?;
    if pa == pb {
        return Err(Error::InvalidParameters("subline needs two distinct points".into()));
    }
    let mut out = Vec::with_capacity(base_order as usize + 1);
    for lambda in ctx.elements(base_order)? {
        let v: Vec<Elem> = a.iter().zip(b).map(|(&x, &y)| ctx.add(x, ctx.mul(lambda, y))).collect();
        out.push(normalize(ctx, &v)?);
    }
    out.push(pb);
    Ok(out)
}

/// Canonical points of `PG(r-1, ambient_order)` with every coordinate in the
/// subfield of order `sub_order`, in lex order.
pub fn subgeometry_points(ctx: &FieldCtx, r: usize, sub_order: u64, ambient_order: u64) -> Result<Vec<ProjPoint>> {
    ctx.cofactor(ambient_order)?;
    ctx.cofactor(sub_order)?;
    if crate::pglin::join_order(ctx, sub_order, ambient_order) != ambient_order {
        return Err(Error::InvalidParameters(format!(
            "F_{sub_order} is not a subfield of F_{ambient_order}"
        )));
    }
    lex_points(ctx, r - 1, sub_order)
}

/// Cyclic group fixing a point `O` and a hyperplane, regular on the remaining
/// affine points.
#[derive(Clone, Debug)]
pub struct AffineSingerOrbit {
    pub generator: GFMatrix,
    pub fixed_point: ProjPoint,
    pub infinity_index: usize,
    /// Points of the affine orbit, normalized.
    pub orbit: Vec<ProjPoint>,
    /// `reps[k] = generator^k reps[0]`; `generator^len reps[0] = reps[0]` exactly.
    pub reps: Vec<Vec<Elem>>,
    /// Points on the hyperplane `x_{infinity_index} = 0`.
    pub hyperplane: Vec<ProjPoint>,
}

/// The affine part, with origin `O`, is identified with `F_{q'^{r-1}}` through
/// the companion matrix of a primitive polynomial of degree `r-1`; the
/// generator is multiplication by its root, conjugated into position.
pub fn affine_singer(
    ctx: &FieldCtx,
    r: usize,
    field_order: u64,
    infinity_index: usize,
    origin: &[Elem],
) -> Result<AffineSingerOrbit> {
    if r < 2 {
        return Err(Error::InvalidParameters("an affine Singer cycle needs r >= 2".into()));
    }
    if infinity_index >= r || origin.len() != r {
        return Err(Error::Dimension("infinity index or origin outside PG(r-1)".into()));
    }
    let o = normalize(ctx, origin)?;
    if o.coords[infinity_index].is_zero() {
        return Err(Error::InvalidParameters("origin lies on the hyperplane at infinity".into()));
    }
    if !ctx.in_subfield_all(&o.coords, field_order)? {
        return Err(Error::NotInSubfield(field_order));
    }
    let poly = ctx.primitive_poly_over(field_order, (r - 1) as u32)?;
    let comp = companion_matrix(ctx, &poly, field_order);
    let mut base = GFMatrix::zeros(r, r, field_order);
    base.set(0, 0, Elem::ONE);
    for i in 0..r - 1 {
        for j in 0..r - 1 {
            base.set(i + 1, j + 1, comp.get(i, j));
        }
    }
    // T e_0 = O, T e_k = e_{j_k} for the indices j_k != infinity_index.
    let others: Vec<usize> = (0..r).filter(|&j| j != infinity_index).collect();
    let mut t = GFMatrix::zeros(r, r, field_order);
    for i in 0..r {
        t.set(i, 0, o.coords[i]);
    }
    for (k, &j) in others.iter().enumerate() {
        t.set(j, k + 1, Elem::ONE);
    }
    let generator = t.mul(ctx, &base)?.mul(ctx, &inverse(ctx, &t)?)?;

    let len = (checked_pow(field_order, (r - 1) as u32).unwrap() - 1) as usize;
    let mut start = o.coords.clone();
    start[others[0]] = ctx.add(start[others[0]], Elem::ONE);
    let mut reps = Vec::with_capacity(len);
    let mut orbit = Vec::with_capacity(len);
    let mut v = start.clone();
    for _ in 0..len {
        orbit.push(normalize(ctx, &v)?);
        let next = generator.mul_vec(ctx, &v)?;
        reps.push(v);
        v = next;
    }
    if v != start {
        return Err(Error::Internal("affine Singer orbit does not close".into()));
    }
    let hyperplane: Vec<ProjPoint> = lex_points(ctx, r - 1, field_order)?
        .into_iter()
        .filter(|p| p.coords[infinity_index].is_zero())
        .collect();
    Ok(AffineSingerOrbit { generator, fixed_point: o, infinity_index, orbit, reps, hyperplane })
}
