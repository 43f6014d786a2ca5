use super::{Code, CodeKind};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};

/// `(beta w_{n-1}, w_0, ..., w_{n-2})`.
pub fn twisted_shift(ctx: &FieldCtx, w: &[Elem], beta: Elem) -> Vec<Elem> {
    let Some((&last, init)) = w.split_last() else {
        return Vec::new();
    };
    std::iter::once(ctx.mul(beta, last)).chain(init.iter().copied()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstacyclicCertificate {
    /// Constant read off the lifted cycle generator.
    pub beta: Elem,
    /// Basis words whose shift was checked.
    pub basis_size: usize,
    /// Every `beta'` in `F_q^*` whose shift preserves the code.
    pub matching_betas: Vec<Elem>,
}

/// True iff the `beta`-twisted shift of every kernel basis word is a codeword.
pub fn shift_closure_holds(code: &Code, beta: Elem) -> bool {
    let ctx = code.field();
    code.kernel_basis().iter().all(|w| code.is_codeword(&twisted_shift(ctx, w, beta)))
}

/// Image-space column after the lifted generator, projected away from the
/// origin for a punctured code.
fn project(code: &Code, v: Vec<Elem>) -> Vec<Elem> {
    let CodeKind::Punctured { infinity_index, origin } = code.kind() else {
        return v;
    };
    let var = code.variety();
    let ctx = code.field();
    let o = var.alpha_vector(origin.coords());
    let c = var.index_of(&vec![*infinity_index; var.t()]);
    let f = ctx.div(v[c], o[c]).expect("origin off the hyperplane");
    v.iter().zip(&o).map(|(&x, &y)| ctx.sub(x, ctx.mul(f, y))).collect()
}

/// The constant `beta` with `(beta w_{n-1}, w_0, ...)` in the code for every
/// codeword `w`. The lifted cycle generator `L` carries column `i` to column
/// `i+1` and column `n-1` to `beta` times column 0; both facts are checked,
/// then the shift is applied to a kernel basis and every element of `F_q^*`
/// is tried as an independent check.
pub fn constacyclic_shift_constant(code: &Code) -> Result<ConstacyclicCertificate> {
    let gen = code
        .cycle_generator()
        .ok_or_else(|| Error::InvalidParameters("constacyclic structure needs a Singer-ordered code".into()))?;
    let ctx = code.field();
    let var = code.variety();
    let lift = var.lift_collineation(gen)?;
    let images = code.images();
    let n = images.len();
    for i in 0..n - 1 {
        if project(code, lift.mul_vec(ctx, &images[i])?) != images[i + 1] {
            return Err(Error::Certificate(format!("lifted generator does not map column {i} to column {}", i + 1)));
        }
    }
    let last = project(code, lift.mul_vec(ctx, &images[n - 1])?);
    let k = images[0]
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::Internal("zero column".into()))?;
    let beta = ctx.div(last[k], images[0][k])?;
    let scaled: Vec<Elem> = images[0].iter().map(|&x| ctx.mul(beta, x)).collect();
    if beta.is_zero() || scaled != last || !ctx.subfield_contains(beta, var.q())? {
        return Err(Error::Certificate("last column does not return to an F_q multiple of column 0".into()));
    }
    let matching_betas: Vec<Elem> =
        ctx.nonzero_elements(var.q())?.into_iter().filter(|&b| shift_closure_holds(code, b)).collect();
    if !matching_betas.contains(&beta) {
        return Err(Error::Certificate(format!("shift with beta = {beta:?} leaves the code")));
    }
    Ok(ConstacyclicCertificate { beta, basis_size: code.kernel_basis().len(), matching_betas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_parity_check, Ordering};

    #[test]
    fn shift_examples() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let two = ctx.from_int(2);
        let w = vec![Elem::ONE, Elem::ZERO, two];
        assert_eq!(twisted_shift(&ctx, &w, two), vec![Elem::ONE, Elem::ONE, Elem::ZERO]);
        assert!(twisted_shift(&ctx, &[], two).is_empty());
    }

    #[test]
    fn lex_order_has_no_cycle() {
        let c = build_parity_check(3, 2, 2, Ordering::Lex).unwrap();
        assert!(constacyclic_shift_constant(&c).is_err());
    }
}
