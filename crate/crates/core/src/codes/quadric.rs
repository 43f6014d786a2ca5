use super::Code;
use crate::error::Result;
use crate::geometry::{enumerate_points, PointOrder};
use crate::gf::{Elem, FieldCtx};
use crate::pglin::{kernel_basis, GFMatrix};

/// Quadratic forms over `F_q` vanishing at every column point.
#[derive(Clone, Debug)]
pub struct QuadricFit {
    /// Monomials `x_i x_j` with `i <= j`, in coefficient order.
    pub monomials: Vec<(usize, usize)>,
    /// Basis of the coefficient vectors.
    pub forms: Vec<Vec<Elem>>,
    field_order: u64,
}

impl QuadricFit {
    pub fn evaluate(&self, ctx: &FieldCtx, form: &[Elem], x: &[Elem]) -> Elem {
        self.monomials
            .iter()
            .zip(form)
            .fold(Elem::ZERO, |acc, (&(i, j), &c)| ctx.add(acc, ctx.mul(c, ctx.mul(x[i], x[j]))))
    }

    /// Number of points of `PG(dim-1, q)` on the quadric `form = 0`.
    pub fn zero_count(&self, ctx: &FieldCtx, form: &[Elem], dim: usize) -> Result<usize> {
        let pts = enumerate_points(ctx, dim - 1, self.field_order, PointOrder::Lex)?;
        Ok(pts.iter().filter(|p| self.evaluate(ctx, form, p.coords()).is_zero()).count())
    }
}

/// Solves the linear system in the coefficients of a quadratic form through
/// all columns of `H`.
pub fn quadrics_through_columns(code: &Code) -> Result<QuadricFit> {
    let ctx = code.field();
    let dim = code.parity_check().rows();
    let monomials: Vec<(usize, usize)> = (0..dim).flat_map(|i| (i..dim).map(move |j| (i, j))).collect();
    let rows: Vec<Vec<Elem>> = code
        .columns()
        .iter()
        .map(|x| monomials.iter().map(|&(i, j)| ctx.mul(x[i], x[j])).collect())
        .collect();
    let q = code.variety().q();
    let forms = kernel_basis(ctx, &GFMatrix::from_rows(&rows, q)?);
    Ok(QuadricFit { monomials, forms, field_order: q })
}
