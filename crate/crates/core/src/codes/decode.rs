use super::Code;
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeResult {
    Corrected { codeword: Vec<Elem>, error: Vec<Elem> },
    Failure,
}

/// Solves `sum_j x_j cols[j] = s` for independent columns; `None` if no solution.
fn solve_small(ctx: &FieldCtx, cols: &[&[Elem]], s: &[Elem]) -> Option<Vec<Elem>> {
    let (rows, w) = (s.len(), cols.len());
    let mut a: Vec<Vec<Elem>> = (0..rows)
        .map(|i| cols.iter().map(|c| c[i]).chain(std::iter::once(s[i])).collect())
        .collect();
    let mut pivots = Vec::with_capacity(w);
    let mut row = 0;
    for col in 0..w {
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = ctx.inv(a[row][col]).expect("nonzero pivot");
        for x in a[row].iter_mut() {
            *x = ctx.mul(*x, inv);
        }
        for i in 0..rows {
            let f = a[i][col];
            if i != row && !f.is_zero() {
                for j in col..=w {
                    let sub = ctx.mul(f, a[row][j]);
                    a[i][j] = ctx.sub(a[i][j], sub);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if a[row..].iter().any(|r| !r[w].is_zero()) {
        return None;
    }
    let mut x = vec![Elem::ZERO; w];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = a[i][w];
    }
    Some(x)
}

fn search(
    ctx: &FieldCtx,
    cols: &[Vec<Elem>],
    s: &[Elem],
    weight: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> Option<(Vec<usize>, Vec<Elem>)> {
    if chosen.len() == weight {
        let sel: Vec<&[Elem]> = chosen.iter().map(|&j| cols[j].as_slice()).collect();
        let x = solve_small(ctx, &sel, s)?;
        return x.iter().all(|v| !v.is_zero()).then(|| (chosen.clone(), x));
    }
    for j in start..=cols.len() - (weight - chosen.len()) {
        chosen.push(j);
        let found = search(ctx, cols, s, weight, j + 1, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Bounded-distance decoding up to `e = floor((d-1)/2)` errors by searching
/// error patterns in order of weight, then lexicographic support.
pub fn decode(code: &Code, received: &[Elem]) -> Result<DecodeResult> {
    let n = code.n();
    if received.len() != n {
        return Err(Error::Dimension(format!("received word of length {} for n = {n}", received.len())));
    }
    let ctx = code.field();
    if !ctx.in_subfield_all(received, code.variety().q())? {
        return Err(Error::NotInSubfield(code.variety().q()));
    }
    let cols = code.search_columns();
    let mut s = vec![Elem::ZERO; code.rank()];
    for (c, &x) in cols.iter().zip(received) {
        if !x.is_zero() {
            crate::pglin::axpy(ctx, &mut s, x, c);
        }
    }
    if s.iter().all(|x| x.is_zero()) {
        return Ok(DecodeResult::Corrected { codeword: received.to_vec(), error: vec![Elem::ZERO; n] });
    }
    let e = (code.distance() - 1) / 2;
    for weight in 1..=e.min(n) {
        if let Some((support, values)) = search(ctx, cols, &s, weight, 0, &mut Vec::new()) {
            let mut error = vec![Elem::ZERO; n];
            for (&j, &v) in support.iter().zip(&values) {
                error[j] = v;
            }
            let codeword = received.iter().zip(&error).map(|(&r, &x)| ctx.sub(r, x)).collect();
            return Ok(DecodeResult::Corrected { codeword, error });
        }
    }
    Ok(DecodeResult::Failure)
}
