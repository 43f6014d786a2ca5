use super::distance::word_on_support;
use super::{twist_representatives, weight, Code, CodeKind};
use crate::error::{Error, Result};
use crate::geometry::subline_points;
use crate::gf::Elem;
use std::collections::{BTreeMap, BTreeSet};

/// A minimum-weight codeword up to scalars: first nonzero entry 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MinWeightWord {
    pub support: Vec<usize>,
    pub values: Vec<Elem>,
}

impl MinWeightWord {
    pub fn to_dense(&self, n: usize) -> Vec<Elem> {
        let mut w = vec![Elem::ZERO; n];
        for (&j, &x) in self.support.iter().zip(&self.values) {
            w[j] = x;
        }
        w
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeightWords {
    pub sublines: usize,
    /// Sorted by support.
    pub words: Vec<MinWeightWord>,
}

impl MinWeightWords {
    /// Number of codewords of minimum weight, counting scalar multiples.
    pub fn codeword_count(&self, q: u64) -> u64 {
        self.words.len() as u64 * (q - 1)
    }
}

/// Column sets of the images of all sublines `PG(1, q)` of `PG(r-1, q^t)`,
/// each listed once (by its two smallest column indices) and sorted.
pub fn canonical_sublines(code: &Code) -> Result<Vec<Vec<usize>>> {
    if *code.kind() != CodeKind::Full {
        return Err(Error::InvalidParameters("sublines are enumerated for full codes only".into()));
    }
    let ctx = code.field();
    let var = code.variety();
    let twists = twist_representatives(ctx, var.ext_order(), var.q())?;
    let pts = code.points();
    let mut out = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for &mu in &twists {
                let b: Vec<Elem> = pts[j].coords().iter().map(|&x| ctx.mul(mu, x)).collect();
                let mut idx = subline_points(ctx, pts[i].coords(), &b, var.q())?
                    .iter()
                    .map(|p| code.point_index().get(p).ok_or_else(|| Error::Internal("subline point missing".into())))
                    .collect::<Result<Vec<_>>>()?;
                idx.sort_unstable();
                if idx[0] == i && idx[1] == j {
                    out.insert(idx);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn normalized(w: &[Elem], code: &Code) -> MinWeightWord {
    let ctx = code.field();
    let support: Vec<usize> = (0..w.len()).filter(|&j| !w[j].is_zero()).collect();
    let inv = ctx.inv(w[support[0]]).expect("nonzero");
    let values = support.iter().map(|&j| ctx.mul(inv, w[j])).collect();
    MinWeightWord { support, values }
}

fn for_each_subset(items: &[usize], k: usize, f: &mut impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, f)?;
            cur.pop();
        }
        Ok(())
    }
    go(items, k, 0, &mut Vec::new(), f)
}

/// Every codeword of weight `t+2` up to scalars, from the `(t+2)`-subsets of
/// subline images.
pub fn min_weight_words(code: &Code) -> Result<MinWeightWords> {
    let d = code.designed_distance();
    let sublines = canonical_sublines(code)?;
    let mut words = BTreeMap::new();
    for line in &sublines {
        for_each_subset(line, d, &mut |s| {
            let w = word_on_support(code, s)
                .ok_or_else(|| Error::Certificate(format!("subline columns {s:?} are independent")))?;
            if weight(&w) != d || !code.is_codeword(&w) {
                return Err(Error::Certificate(format!("word on {s:?} has weight {}", weight(&w))));
            }
            let m = normalized(&w, code);
            words.insert(m.support.clone(), m);
            Ok(())
        })?;
    }
    Ok(MinWeightWords { sublines: sublines.len(), words: words.into_values().collect() })
}

/// All `q^k` codewords, when `q^k <= limit`.
pub fn enumerate_codewords(code: &Code, limit: u64) -> Result<Vec<Vec<Elem>>> {
    let q = code.variety().q();
    let basis = code.kernel_basis();
    let total = crate::arith::checked_pow(q, basis.len() as u32)
        .filter(|&c| c <= limit)
        .ok_or_else(|| Error::InvalidParameters(format!("{q}^{} codewords exceed the limit {limit}", basis.len())))?;
    let ctx = code.field();
    let elems = ctx.elements(q)?;
    let mut out = Vec::with_capacity(total as usize);
    for mut idx in 0..total {
        let mut w = vec![Elem::ZERO; code.n()];
        for b in basis.iter().rev() {
            let c = elems[(idx % q) as usize];
            idx /= q;
            if !c.is_zero() {
                crate::pglin::axpy(ctx, &mut w, c, b);
            }
        }
        out.push(w);
    }
    Ok(out)
}

/// Number of codewords of each weight `0..=n`, by exhaustive enumeration.
pub fn weight_distribution(code: &Code, limit: u64) -> Result<Vec<u64>> {
    let mut dist = vec![0u64; code.n() + 1];
    for w in enumerate_codewords(code, limit)? {
        dist[weight(&w)] += 1;
    }
    Ok(dist)
}

/// Minimum-weight words found by exhaustive enumeration; usable on any code
/// with `q^k <= limit`, including subcodes.
pub fn exhaustive_min_weight_words(code: &Code, limit: u64) -> Result<Vec<MinWeightWord>> {
    let all = enumerate_codewords(code, limit)?;
    let d = all.iter().map(|w| weight(w)).filter(|&x| x > 0).min().unwrap_or(0);
    let mut words: BTreeMap<Vec<usize>, MinWeightWord> = BTreeMap::new();
    for w in all.iter().filter(|w| weight(w) == d) {
        let m = normalized(w, code);
        words.insert(m.support.clone(), m);
    }
    Ok(words.into_values().collect())
}
