//! The codes `C_{r,t}` (parity-check columns = points of the variety), the
//! subcodes `C_{r,t}^{(s)}` on a subgeometry `PG(r-1, q^s)`, and the
//! punctured codes ordered by an affine Singer cycle.

mod automorphism;
mod constacyclic;
mod decode;
mod distance;
mod minwords;
mod quadric;
mod simulate;

pub use automorphism::{monomial_automorphism_from, random_invertible, MonomialMap};
pub use constacyclic::{constacyclic_shift_constant, shift_closure_holds, twisted_shift, ConstacyclicCertificate};
pub use decode::{decode, DecodeResult};
pub use distance::{
    find_dependent_subset, general_position_check, verify_min_distance,
    GeneralPositionReport, LowerBoundMethod, MinDistanceCertificate, EXHAUSTIVE_LIMIT, RANDOM_SUBSETS,
};
pub use minwords::{
    canonical_sublines, enumerate_codewords, exhaustive_min_weight_words, min_weight_words, weight_distribution, MinWeightWord, MinWeightWords,
};
pub use quadric::{quadrics_through_columns, QuadricFit};
pub use simulate::{simulate_channel, ChannelStats};

use crate::arith::{binomial, gcd};
use crate::error::{Error, Result};
use crate::geometry::{
    affine_singer, enumerate_points, normalize, singer_ordering, subgeometry_points, PointIndex, PointOrder,
    ProjPoint,
};
use crate::gf::{Elem, FieldCtx};
use crate::pglin::{dot, kernel_basis, rref, GFMatrix};
use crate::variety::VarietyCtx;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Column order of a parity-check matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ordering {
    Singer,
    Lex,
    AffineSingerPunctured,
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ordering::Singer => "singer",
            Ordering::Lex => "lex",
            Ordering::AffineSingerPunctured => "affine-singer-punctured",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeKind {
    Full,
    Subcode { s: usize },
    Punctured { infinity_index: usize, origin: ProjPoint },
}

/// `(d - 1)/(n - k)` as a reduced fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eta {
    pub num: u64,
    pub den: u64,
}

impl Eta {
    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSummary {
    pub q: u64,
    pub r: usize,
    pub t: usize,
    pub s: Option<usize>,
    pub n: usize,
    pub k: usize,
    /// Certified minimum distance; `None` until certified.
    pub d: Option<usize>,
    /// Constacyclic constant, once determined.
    pub beta: Option<Elem>,
    pub ordering: Ordering,
}

impl CodeSummary {
    /// Parameters predicted by the construction without building the code:
    /// `[n, n - r^t, t+2]`, or `[m, m - binom(r-1+t/s, t/s)^s, t+2]` for a subcode.
    pub fn predicted(q: u64, r: usize, t: usize, s: Option<usize>) -> Result<CodeSummary> {
        let pw = |b: u64, e: usize| {
            crate::arith::checked_pow(b, e as u32).ok_or_else(|| Error::InvalidParameters("parameters overflow".into()))
        };
        let (n, redundancy) = match s {
            None => ((pw(q, r * t)? - 1) / (pw(q, t)? - 1), pw(r as u64, t)?),
            Some(s) => {
                if s == 0 || t % s != 0 {
                    return Err(Error::InvalidParameters(format!("s = {s} must divide t = {t}")));
                }
                let b = binomial((r - 1 + t / s) as u64, (t / s) as u64) as u64;
                ((pw(q, r * s)? - 1) / (pw(q, s)? - 1), pw(b, s)?)
            }
        };
        Ok(CodeSummary {
            q,
            r,
            t,
            s,
            n: n as usize,
            k: (n - redundancy) as usize,
            d: Some(t + 2),
            beta: None,
            ordering: if s.is_some() { Ordering::Lex } else { Ordering::Singer },
        })
    }
}

/// `eta = (d - 1)/(n - k)` for a summary with a known minimum distance.
pub fn eta(summary: &CodeSummary) -> Result<Eta> {
    let d = summary.d.ok_or_else(|| Error::InvalidParameters("minimum distance not certified".into()))?;
    if summary.n <= summary.k {
        return Err(Error::InvalidParameters("eta needs n > k".into()));
    }
    let num = d as u64 - 1;
    let den = (summary.n - summary.k) as u64;
    let g = gcd(num, den).max(1);
    Ok(Eta { num: num / g, den: den / g })
}

/// A code defined by a parity-check matrix over `F_q` whose columns are
/// coordinates of embedded points.
#[derive(Clone, Debug)]
pub struct Code {
    variety: Arc<VarietyCtx>,
    kind: CodeKind,
    ordering: Ordering,
    h: GFMatrix,
    columns: Vec<Vec<Elem>>,
    points: Vec<ProjPoint>,
    reps: Vec<Vec<Elem>>,
    images: Vec<Vec<Elem>>,
    index: PointIndex,
    cycle_generator: Option<GFMatrix>,
    rank: usize,
    summary: CodeSummary,
    kernel: OnceLock<Vec<Vec<Elem>>>,
    search_columns: OnceLock<Vec<Vec<Elem>>>,
}

/// `C_{r,t}` with columns ordered by a Singer cycle or lexicographically.
pub fn build_parity_check(q: u64, r: usize, t: usize, ordering: Ordering) -> Result<Code> {
    Code::full(Arc::new(VarietyCtx::new(q, r, t)?), ordering)
}

/// `C_{r,t}^{(s)}`: the columns of `H` on the points of `PG(r-1, q^s)`.
pub fn build_subcode_parity_check(q: u64, r: usize, t: usize, s: usize) -> Result<Code> {
    check_subcode_params(q, r, t, s)?;
    Code::subcode(Arc::new(VarietyCtx::new(q, r, t)?), s)
}

/// The code punctured at `origin`, on the affine points off the hyperplane
/// `x_{infinity_index} = 0` ordered by an affine Singer cycle. `origin`
/// defaults to `e_{infinity_index}`.
pub fn puncture_to_cyclic(q: u64, r: usize, t: usize, infinity_index: usize, origin: Option<&[Elem]>) -> Result<Code> {
    Code::punctured(Arc::new(VarietyCtx::new(q, r, t)?), infinity_index, origin)
}

fn check_subcode_params(q: u64, r: usize, t: usize, s: usize) -> Result<()> {
    if !(1 < s && s < t && t % s == 0) {
        return Err(Error::InvalidParameters(format!("need 1 < s < t and s | t (s = {s}, t = {t})")));
    }
    let m = CodeSummary::predicted(q, r, t, Some(s))?.n;
    if t + 1 >= m {
        return Err(Error::InvalidParameters(format!("need t < m - 1 (t = {t}, m = {m})")));
    }
    Ok(())
}

impl Code {
    pub fn full(variety: Arc<VarietyCtx>, ordering: Ordering) -> Result<Code> {
        let ctx = variety.field();
        let (points, reps, gen) = match ordering {
            Ordering::Lex => {
                let pts = enumerate_points(ctx, variety.r() - 1, variety.ext_order(), PointOrder::Lex)?;
                let reps = pts.iter().map(|p| p.coords().to_vec()).collect();
                (pts, reps, None)
            }
            Ordering::Singer => {
                let s = singer_ordering(ctx, variety.r(), variety.ext_order())?;
                (s.points, s.reps, Some(s.generator))
            }
            Ordering::AffineSingerPunctured => {
                return Err(Error::InvalidParameters("use Code::punctured for the affine Singer order".into()))
            }
        };
        let images: Vec<Vec<Elem>> = reps.iter().map(|v| variety.alpha_vector(v)).collect();
        Self::assemble(variety, CodeKind::Full, ordering, points, reps, images, gen, None)
    }

    pub fn subcode(variety: Arc<VarietyCtx>, s: usize) -> Result<Code> {
        check_subcode_params(variety.q(), variety.r(), variety.t(), s)?;
        let ctx = variety.field();
        let sub_order = variety.q().pow(s as u32);
        let points = subgeometry_points(ctx, variety.r(), sub_order, variety.ext_order())?;
        let reps: Vec<Vec<Elem>> = points.iter().map(|p| p.coords().to_vec()).collect();
        let images = reps.iter().map(|v| variety.alpha_vector(v)).collect();
        Self::assemble(variety, CodeKind::Subcode { s }, Ordering::Lex, points, reps, images, None, Some(s))
    }

    pub fn punctured(variety: Arc<VarietyCtx>, infinity_index: usize, origin: Option<&[Elem]>) -> Result<Code> {
        let ctx = variety.field();
        let r = variety.r();
        let default_origin = ProjPoint::unit(r, infinity_index.min(r - 1)).into_coords();
        let origin = origin.unwrap_or(&default_origin);
        let orbit = affine_singer(ctx, r, variety.ext_order(), infinity_index, origin)?;
        let o_image = variety.alpha_vector(orbit.fixed_point.coords());
        // The coordinate at index(const infinity_index) is the hyperplane functional.
        let c = variety.index_of(&vec![infinity_index; variety.t()]);
        let o_c = o_image[c];
        let images: Vec<Vec<Elem>> = orbit
            .reps
            .iter()
            .map(|v| {
                let img = variety.alpha_vector(v);
                let factor = ctx.div(img[c], o_c).expect("origin off the hyperplane");
                img.iter().zip(&o_image).map(|(&x, &y)| ctx.sub(x, ctx.mul(factor, y))).collect()
            })
            .collect();
        let kind = CodeKind::Punctured { infinity_index, origin: orbit.fixed_point.clone() };
        Self::assemble(
            variety,
            kind,
            Ordering::AffineSingerPunctured,
            orbit.orbit,
            orbit.reps,
            images,
            Some(orbit.generator),
            None,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        variety: Arc<VarietyCtx>,
        kind: CodeKind,
        ordering: Ordering,
        points: Vec<ProjPoint>,
        reps: Vec<Vec<Elem>>,
        images: Vec<Vec<Elem>>,
        cycle_generator: Option<GFMatrix>,
        s: Option<usize>,
    ) -> Result<Code> {
        let columns = images
            .iter()
            .map(|v| variety.to_subgeometry_coords(v))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Internal(format!("column not over F_q: {e}")))?;
        let h = GFMatrix::from_columns(&columns, variety.dim(), variety.q())?;
        h.certify(variety.field())?;
        let rank = rref(variety.field(), &h).rank;
        let summary = CodeSummary {
            q: variety.q(),
            r: variety.r(),
            t: variety.t(),
            s,
            n: points.len(),
            k: points.len() - rank,
            d: None,
            beta: None,
            ordering,
        };
        let index = PointIndex::new(&points);
        Ok(Code {
            variety,
            kind,
            ordering,
            h,
            columns,
            points,
            reps,
            images,
            index,
            cycle_generator,
            rank,
            summary,
            kernel: OnceLock::new(),
            search_columns: OnceLock::new(),
        })
    }

    pub fn variety(&self) -> &VarietyCtx {
        &self.variety
    }

    pub fn variety_arc(&self) -> &Arc<VarietyCtx> {
        &self.variety
    }

    pub fn field(&self) -> &FieldCtx {
        self.variety.field()
    }

    pub fn kind(&self) -> &CodeKind {
        &self.kind
    }

    pub fn ordering(&self) -> Ordering {
        self.ordering
    }

    /// Parity-check matrix over `F_q`.
    pub fn parity_check(&self) -> &GFMatrix {
        &self.h
    }

    pub fn columns(&self) -> &[Vec<Elem>] {
        &self.columns
    }

    /// Canonical source point of each column.
    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    /// Representative vector in `F_{q^t}^r` whose embedding gives each column.
    pub fn reps(&self) -> &[Vec<Elem>] {
        &self.reps
    }

    /// Columns as fixed vectors of `F_{q^t}^{r^t}` (before change of basis).
    pub fn images(&self) -> &[Vec<Elem>] {
        &self.images
    }

    pub fn point_index(&self) -> &PointIndex {
        &self.index
    }

    /// Column position of a point, by canonical coordinates.
    pub fn column_of(&self, v: &[Elem]) -> Option<usize> {
        normalize(self.field(), v).ok().and_then(|p| self.index.get(&p))
    }

    /// Generator of the cyclic group inducing the column order, if any.
    pub fn cycle_generator(&self) -> Option<&GFMatrix> {
        self.cycle_generator.as_ref()
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.n() - self.rank
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn summary(&self) -> &CodeSummary {
        &self.summary
    }

    /// Distance guaranteed by the construction: `t+2`, or `t+1` once punctured.
    pub fn designed_distance(&self) -> usize {
        match self.kind {
            CodeKind::Punctured { .. } => self.variety.t() + 1,
            _ => self.variety.t() + 2,
        }
    }

    /// Certified minimum distance if available, else the designed distance.
    pub fn distance(&self) -> usize {
        self.summary.d.unwrap_or_else(|| self.designed_distance())
    }

    /// Runs [`verify_min_distance`] and stores the certified value.
    pub fn certify_distance(&mut self, seed: u64) -> Result<MinDistanceCertificate> {
        let cert = verify_min_distance(self, seed)?;
        self.summary.d = Some(cert.d);
        Ok(cert)
    }

    pub fn set_beta(&mut self, beta: Elem) {
        self.summary.beta = Some(beta);
    }

    /// Canonical kernel basis of the parity-check matrix.
    pub fn kernel_basis(&self) -> &[Vec<Elem>] {
        self.kernel.get_or_init(|| kernel_basis(self.field(), &self.h))
    }

    /// Columns of a full-row-rank matrix with the same kernel as `H`.
    pub fn search_columns(&self) -> &[Vec<Elem>] {
        self.search_columns.get_or_init(|| {
            let r = rref(self.field(), &self.h);
            (0..self.n())
                .map(|j| (0..r.rank).map(|i| r.matrix.get(i, j)).collect())
                .collect()
        })
    }

    pub fn syndrome(&self, w: &[Elem]) -> Result<Vec<Elem>> {
        self.h.mul_vec(self.field(), w)
    }

    pub fn is_codeword(&self, w: &[Elem]) -> bool {
        w.len() == self.n() && (0..self.h.rows()).all(|i| dot(self.field(), self.h.row(i), w).is_zero())
    }
}

/// Hamming weight.
pub fn weight(w: &[Elem]) -> usize {
    w.iter().filter(|x| !x.is_zero()).count()
}

/// Coset representatives of `F_{order}^* / F_q^*`.
pub(crate) fn twist_representatives(ctx: &FieldCtx, order: u64, q: u64) -> Result<Vec<Elem>> {
    let g = ctx.subfield_generator(order)?;
    let count = (order - 1) / (q - 1);
    Ok((0..count).map(|k| ctx.pow(g, k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_values() {
        let c33 = CodeSummary::predicted(4, 3, 3, None).unwrap();
        assert_eq!(eta(&c33).unwrap(), Eta { num: 4, den: 27 });
        let c36s = CodeSummary::predicted(7, 3, 6, Some(3)).unwrap();
        assert_eq!(eta(&c36s).unwrap(), Eta { num: 7, den: 216 });
        let mds = CodeSummary { q: 5, r: 2, t: 2, s: None, n: 6, k: 3, d: Some(4), beta: None, ordering: Ordering::Lex };
        assert_eq!(eta(&mds).unwrap().value(), 1.0);
        let degenerate = CodeSummary { n: 4, k: 4, ..mds };
        assert!(eta(&degenerate).is_err());
    }

    #[test]
    fn rejects_bad_subcode_parameters() {
        assert!(build_subcode_parity_check(5, 2, 4, 3).is_err());
        assert!(build_subcode_parity_check(5, 2, 4, 4).is_err());
        assert!(build_subcode_parity_check(5, 2, 4, 1).is_err());
    }

    #[test]
    fn small_full_code_parameters() {
        let c = build_parity_check(3, 2, 2, Ordering::Singer).unwrap();
        assert_eq!((c.n(), c.k(), c.rank()), (10, 6, 4));
        assert_eq!(c.parity_check().rows(), 4);
        let c = build_parity_check(3, 3, 2, Ordering::Lex).unwrap();
        assert_eq!((c.n(), c.k(), c.parity_check().rows()), (91, 82, 9));
    }
}
