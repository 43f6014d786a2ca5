use super::{twist_representatives, weight, Code, CodeKind};
use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::geometry::{subline_points, ProjPoint};
use crate::gf::{Elem, FieldCtx};
use crate::pglin::{kernel_basis, Echelon, GFMatrix};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashSet;

/// Above this many subsets the lower bound falls back to sublines and random sampling.
pub const EXHAUSTIVE_LIMIT: u128 = 10_000_000;
/// Random subsets drawn in the fallback.
pub const RANDOM_SUBSETS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowerBoundMethod {
    Exhaustive,
    /// All subsets inside sublines through the first column, plus random subsets.
    SublineRestricted { sublines: usize, random: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralPositionReport {
    pub size: usize,
    pub method: LowerBoundMethod,
    pub subsets_checked: u128,
    /// Lexicographically least dependent subset found, if any.
    pub violation: Option<Vec<usize>>,
}

impl GeneralPositionReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }

    pub fn is_exhaustive(&self) -> bool {
        self.method == LowerBoundMethod::Exhaustive
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinDistanceCertificate {
    pub d: usize,
    pub lower: GeneralPositionReport,
    pub witness_support: Vec<usize>,
    /// Codeword of weight `d` supported on `witness_support`.
    pub witness: Vec<Elem>,
}

/// Lexicographically least dependent `size`-subset of `cols`, by exhaustive
/// depth-first search with an incremental echelon basis.
pub fn find_dependent_subset(ctx: &FieldCtx, cols: &[Vec<Elem>], size: usize) -> Option<Vec<usize>> {
    let n = cols.len();
    if size == 0 || size > n {
        return None;
    }
    (0..=n - size).into_par_iter().find_map_first(|first| {
        let mut ech = Echelon::new();
        if !ech.insert(ctx, &cols[first]) {
            return Some((first..first + size).collect());
        }
        let mut chosen = vec![first];
        dfs(ctx, cols, size, &mut ech, &mut chosen)
    })
}

fn dfs(ctx: &FieldCtx, cols: &[Vec<Elem>], size: usize, ech: &mut Echelon, chosen: &mut Vec<usize>) -> Option<Vec<usize>> {
    let need = size - chosen.len();
    if need == 0 {
        return None;
    }
    let start = chosen.last().map_or(0, |&j| j + 1);
    for j in start..=cols.len() - need {
        if !ech.insert(ctx, &cols[j]) {
            let mut w = chosen.clone();
            w.push(j);
            w.extend(j + 1..j + need);
            return Some(w);
        }
        chosen.push(j);
        let found = dfs(ctx, cols, size, ech, chosen);
        chosen.pop();
        ech.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn subset_dependent(ctx: &FieldCtx, cols: &[Vec<Elem>], subset: &[usize]) -> bool {
    let mut ech = Echelon::new();
    !subset.iter().all(|&j| ech.insert(ctx, &cols[j]))
}

fn combinations(items: &[usize], k: usize, out: &mut Vec<Vec<usize>>) {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut Vec::with_capacity(k), out);
}

/// Order of the field whose sublines carry the structure of the code.
fn twist_order(code: &Code) -> u64 {
    match code.kind() {
        CodeKind::Subcode { s } => code.variety().q().pow(*s as u32),
        _ => code.variety().ext_order(),
    }
}

/// Sorted column indices of each distinct subline through `a` and a column
/// point, over all twists.
fn sublines_through(code: &Code, a: &ProjPoint) -> Result<Vec<Vec<usize>>> {
    let ctx = code.field();
    let q = code.variety().q();
    let twists = twist_representatives(ctx, twist_order(code), q)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for b in code.points() {
        if b == a {
            continue;
        }
        for &mu in &twists {
            let bv: Vec<Elem> = b.coords().iter().map(|&x| ctx.mul(mu, x)).collect();
            let mut idx: Vec<usize> = subline_points(ctx, a.coords(), &bv, q)?
                .iter()
                .filter_map(|p| code.point_index().get(p))
                .collect();
            idx.sort_unstable();
            if seen.insert(idx.clone()) {
                out.push(idx);
            }
        }
    }
    Ok(out)
}

/// Checks that every `size` columns are linearly independent: exhaustively
/// when there are at most [`EXHAUSTIVE_LIMIT`] subsets, otherwise on every
/// subset inside a subline through the first column and on
/// [`RANDOM_SUBSETS`] random subsets drawn from `seed`.
pub fn general_position_check(code: &Code, size: usize, seed: u64) -> Result<GeneralPositionReport> {
    let ctx = code.field();
    let cols = code.search_columns();
    let n = cols.len();
    let total = binomial(n as u64, size as u64);
    if total <= EXHAUSTIVE_LIMIT {
        let violation = find_dependent_subset(ctx, cols, size);
        return Ok(GeneralPositionReport { size, method: LowerBoundMethod::Exhaustive, subsets_checked: total, violation });
    }
    let sublines = sublines_through(code, &code.points()[0])?;
    let mut subsets = Vec::new();
    for line in &sublines {
        combinations(line, size, &mut subsets);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_SUBSETS {
        let mut s = sample(&mut rng, n, size).into_vec();
        s.sort_unstable();
        subsets.push(s);
    }
    let checked = subsets.len() as u128;
    let violation = subsets.into_par_iter().filter(|s| subset_dependent(ctx, cols, s)).min();
    Ok(GeneralPositionReport {
        size,
        method: LowerBoundMethod::SublineRestricted { sublines: sublines.len(), random: RANDOM_SUBSETS },
        subsets_checked: checked,
        violation,
    })
}

/// Nonzero codeword supported on `support`, if the columns there are dependent.
pub(crate) fn word_on_support(code: &Code, support: &[usize]) -> Option<Vec<Elem>> {
    let cols = code.search_columns();
    let sub: Vec<Vec<Elem>> = support.iter().map(|&j| cols[j].clone()).collect();
    let m = GFMatrix::from_columns(&sub, code.rank(), code.variety().q()).ok()?;
    let x = kernel_basis(code.field(), &m).into_iter().next()?;
    let mut w = vec![Elem::ZERO; code.n()];
    for (&j, &c) in support.iter().zip(&x) {
        w[j] = c;
    }
    Some(w)
}

/// Support of `d` columns from one subline, dependent by construction.
fn witness_support(code: &Code, d: usize) -> Result<Option<Vec<usize>>> {
    let ctx = code.field();
    let r = code.variety().r();
    match code.kind() {
        CodeKind::Punctured { origin, .. } => {
            for line in sublines_through(code, origin)? {
                if line.len() >= d {
                    let s = line[..d].to_vec();
                    if subset_dependent(ctx, code.search_columns(), &s) {
                        return Ok(Some(s));
                    }
                }
            }
            Ok(None)
        }
        _ => {
            let e0 = ProjPoint::unit(r, 0);
            let e1 = ProjPoint::unit(r, 1);
            let mut idx: Vec<usize> = subline_points(ctx, e0.coords(), e1.coords(), code.variety().q())?
                .iter()
                .filter_map(|p| code.point_index().get(p))
                .collect();
            idx.sort_unstable();
            if idx.len() < d {
                return Ok(None);
            }
            idx.truncate(d);
            Ok(Some(idx))
        }
    }
}

/// Certifies the minimum distance: every `d-1` columns independent (lower
/// bound) and an explicit codeword of weight `d` (upper bound), where `d` is
/// the designed distance.
pub fn verify_min_distance(code: &Code, seed: u64) -> Result<MinDistanceCertificate> {
    let d = code.designed_distance();
    let lower = general_position_check(code, d - 1, seed)?;
    if let Some(v) = &lower.violation {
        return Err(Error::Certificate(format!("columns {v:?} are linearly dependent")));
    }
    let support = witness_support(code, d)?
        .ok_or_else(|| Error::Certificate(format!("no dependent {d}-subset on a subline")))?;
    let witness = word_on_support(code, &support)
        .ok_or_else(|| Error::Certificate(format!("columns {support:?} are independent")))?;
    if !code.is_codeword(&witness) || weight(&witness) != d {
        return Err(Error::Certificate(format!("witness on {support:?} has weight {}", weight(&witness))));
    }
    Ok(MinDistanceCertificate { d, lower, witness_support: support, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_parity_check, Ordering};

    #[test]
    fn search_returns_lex_least() {
        let ctx = FieldCtx::new(3, 1).unwrap();
        let one = Elem::ONE;
        let z = Elem::ZERO;
        let cols = vec![vec![one, z], vec![z, one], vec![one, z], vec![one, one]];
        assert_eq!(find_dependent_subset(&ctx, &cols, 2), Some(vec![0, 2]));
        assert_eq!(find_dependent_subset(&ctx, &cols, 3), Some(vec![0, 1, 2]));
        assert_eq!(find_dependent_subset(&ctx, &cols[..2], 2), None);
    }

    #[test]
    fn certificate_small() {
        let c = build_parity_check(3, 2, 2, Ordering::Lex).unwrap();
        let cert = verify_min_distance(&c, 0).unwrap();
        assert_eq!(cert.d, 4);
        assert!(cert.lower.is_exhaustive());
        assert_eq!(cert.lower.subsets_checked, 120);
        assert_eq!(weight(&cert.witness), 4);
    }
}
