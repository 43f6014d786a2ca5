//! `GFMAT` v1 matrix files, whitespace-separated words and the JSON code summary.
//!
//! Elements are written with the subfield code of [`FieldCtx::encode`]; the
//! header carries the defining polynomial of the ambient field, which fixes
//! the generator the codes refer to.

use crate::codes::{eta, CodeSummary, Ordering};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};
use crate::pglin::GFMatrix;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

pub fn write_gfmat(ctx: &FieldCtx, m: &GFMatrix) -> Result<String> {
    let q = m.field_order();
    let poly: Vec<String> = ctx.defining_poly().iter().map(u32::to_string).collect();
    let mut out = format!(
        "GFMAT 1 p={} q={q} rows={} cols={} poly={}\n",
        ctx.characteristic(),
        m.rows(),
        m.cols(),
        poly.join(",")
    );
    for i in 0..m.rows() {
        let codes = m.row(i).iter().map(|&x| ctx.encode(x, q)).collect::<Result<Vec<_>>>()?;
        let line: Vec<String> = codes.iter().map(u32::to_string).collect();
        writeln!(out, "{}", line.join(" ")).expect("write to String");
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfmatHeader {
    pub p: u64,
    pub q: u64,
    pub rows: usize,
    pub cols: usize,
    pub poly: Vec<u32>,
}

fn parse_header(line: &str) -> Result<GfmatHeader> {
    let mut it = line.split_whitespace();
    if it.next() != Some("GFMAT") || it.next() != Some("1") {
        return Err(Error::Parse("expected header `GFMAT 1 ...`".into()));
    }
    let mut field = |key: &str| -> Result<String> {
        let tok = it.next().ok_or_else(|| Error::Parse(format!("missing `{key}=`")))?;
        tok.strip_prefix(key)
            .and_then(|v| v.strip_prefix('='))
            .map(str::to_string)
            .ok_or_else(|| Error::Parse(format!("expected `{key}=`, found `{tok}`")))
    };
    let num = |s: String, key: &str| s.parse::<u64>().map_err(|_| Error::Parse(format!("bad value for {key}: {s}")));
    let p = num(field("p")?, "p")?;
    let q = num(field("q")?, "q")?;
    let rows = num(field("rows")?, "rows")? as usize;
    let cols = num(field("cols")?, "cols")? as usize;
    let poly = field("poly")?
        .split(',')
        .map(|c| c.parse::<u32>().map_err(|_| Error::Parse(format!("bad polynomial coefficient `{c}`"))))
        .collect::<Result<Vec<_>>>()?;
    if it.next().is_some() {
        return Err(Error::Parse("trailing fields in header".into()));
    }
    Ok(GfmatHeader { p, q, rows, cols, poly })
}

/// Parses a `GFMAT` file, rebuilding the ambient field from its header.
pub fn read_gfmat(text: &str) -> Result<(FieldCtx, GFMatrix)> {
    let header = parse_header(text.lines().next().unwrap_or(""))?;
    let ctx = FieldCtx::from_poly(header.p, &header.poly)?;
    let m = read_body(&ctx, &header, text)?;
    Ok((ctx, m))
}

/// Parses a `GFMAT` file whose header must describe `ctx`.
pub fn read_gfmat_with(ctx: &FieldCtx, text: &str) -> Result<GFMatrix> {
    let header = parse_header(text.lines().next().unwrap_or(""))?;
    if header.p != ctx.characteristic() || header.poly != ctx.defining_poly() {
        return Err(Error::Parse("matrix was written over a different ambient field".into()));
    }
    read_body(ctx, &header, text)
}

fn read_body(ctx: &FieldCtx, header: &GfmatHeader, text: &str) -> Result<GFMatrix> {
    ctx.cofactor(header.q)?;
    let lines: Vec<&str> = text.lines().skip(1).filter(|l| !l.trim().is_empty()).collect();
    if lines.len() != header.rows {
        return Err(Error::Parse(format!("expected {} rows, found {}", header.rows, lines.len())));
    }
    let mut entries = Vec::with_capacity(header.rows * header.cols);
    for (i, line) in lines.iter().enumerate() {
        let row = parse_word(ctx, line, header.q)?;
        if row.len() != header.cols {
            return Err(Error::Parse(format!("row {i} has {} entries, expected {}", row.len(), header.cols)));
        }
        entries.extend(row);
    }
    GFMatrix::new(header.rows, header.cols, entries, header.q)
}

/// Whitespace-separated element codes.
pub fn parse_word(ctx: &FieldCtx, text: &str, order: u64) -> Result<Vec<Elem>> {
    text.split_whitespace()
        .map(|tok| {
            let c = tok.parse::<u64>().map_err(|_| Error::Parse(format!("bad element code `{tok}`")))?;
            ctx.decode(c, order)
        })
        .collect()
}

pub fn format_word(ctx: &FieldCtx, w: &[Elem], order: u64) -> Result<String> {
    let codes = w.iter().map(|&x| ctx.encode(x, order)).collect::<Result<Vec<_>>>()?;
    Ok(codes.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
}

/// The fixed JSON schema of a code summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryJson {
    pub q: u64,
    pub r: usize,
    pub t: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<usize>,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta_code: Option<u32>,
    pub eta_num: u64,
    pub eta_den: u64,
    pub ordering: Ordering,
}

impl SummaryJson {
    /// Requires a certified distance.
    pub fn new(ctx: &FieldCtx, s: &CodeSummary) -> Result<Self> {
        let d = s.d.ok_or_else(|| Error::InvalidParameters("minimum distance not certified".into()))?;
        let e = eta(s)?;
        Ok(SummaryJson {
            q: s.q,
            r: s.r,
            t: s.t,
            s: s.s,
            n: s.n,
            k: s.k,
            d,
            beta_code: s.beta.map(|b| ctx.encode(b, s.q)).transpose()?,
            eta_num: e.num,
            eta_den: e.den,
            ordering: s.ordering,
        })
    }
}
