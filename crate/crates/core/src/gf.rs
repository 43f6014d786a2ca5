//! Finite field arithmetic in a single ambient field `F_{p^m}` using
//! discrete-log (exponent) coding and a Zech logarithm table.
//!
//! Every element is stored as its exponent with respect to a fixed primitive
//! element `g`, the root of the lexicographically smallest primitive
//! polynomial of degree `m` over `F_p`. All subfields `F_{p^d}`, `d | m`, live
//! inside the ambient field: `x` lies in `F_{p^d}` iff `x = 0` or
//! `(p^m - 1)/(p^d - 1)` divides the exponent of `x`.

use crate::arith::{checked_pow, is_prime, prime_factors};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default upper bound on the ambient field order.
pub const DEFAULT_TABLE_CAP: u64 = 1 << 24;

const ZERO_CODE: u32 = u32::MAX;

/// An element of the ambient field: zero, or `g^k` with `k` in `[0, Q-2]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(ZERO_CODE);
    pub const ONE: Elem = Elem(0);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == ZERO_CODE
    }

    /// Exponent `k` with `self = g^k`, `None` for zero.
    #[inline]
    pub fn exponent(self) -> Option<u32> {
        if self.is_zero() {
            None
        } else {
            Some(self.0)
        }
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent() {
            None => write!(f, "0"),
            Some(0) => write!(f, "1"),
            Some(k) => write!(f, "g^{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// Immutable field context: defining polynomial and Zech table.
#[derive(Clone)]
pub struct FieldCtx {
    p: u32,
    m: u32,
    order: u32,
    poly: Vec<u32>,
    zech: Vec<u32>,
    neg_one: u32,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("poly", &self.poly)
            .finish()
    }
}

impl FieldCtx {
    /// Builds `F_{p^m}` with the default table cap.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::with_cap(p, m, DEFAULT_TABLE_CAP)
    }

    pub fn with_cap(p: u64, m: u32, cap: u64) -> Result<Self> {
        let order = check_order(p, m, cap)?;
        let poly = smallest_primitive_poly(p as u32, m, order)
            .ok_or_else(|| Error::Internal(format!("no primitive polynomial of degree {m} over F_{p}")))?;
        Self::build(p as u32, m, order, poly)
    }

    /// Builds the field from an explicit monic defining polynomial
    /// (coefficients low-degree-first), which must be primitive.
    pub fn from_poly(p: u64, poly: &[u32]) -> Result<Self> {
        if poly.len() < 2 {
            return Err(Error::InvalidParameters("defining polynomial must have degree >= 1".into()));
        }
        let m = (poly.len() - 1) as u32;
        let order = check_order(p, m, DEFAULT_TABLE_CAP)?;
        if poly.iter().any(|&c| c as u64 >= p) || *poly.last().unwrap() != 1 {
            return Err(Error::InvalidParameters("defining polynomial must be monic over F_p".into()));
        }
        if !is_primitive_fp(p as u32, poly, order) {
            return Err(Error::InvalidParameters(format!("{poly:?} is not primitive over F_{p}")));
        }
        Self::build(p as u32, m, order, poly.to_vec())
    }

    fn build(p: u32, m: u32, order: u32, poly: Vec<u32>) -> Result<Self> {
        let n = (order - 1) as usize;
        // exp[k] = integer code of g^k in the polynomial basis, digit i = coefficient of x^i.
        let mut exp = Vec::with_capacity(n);
        let mut digits = vec![0u32; m as usize];
        digits[0] = 1;
        for _ in 0..n {
            exp.push(digits_to_int(&digits, p));
            times_x(&mut digits, &poly, p);
        }
        let mut log = vec![ZERO_CODE; order as usize];
        for (k, &v) in exp.iter().enumerate() {
            if log[v as usize] != ZERO_CODE {
                return Err(Error::Internal("defining polynomial is not primitive".into()));
            }
            log[v as usize] = k as u32;
        }
        drop(digits);
        let zech: Vec<u32> = exp
            .iter()
            .map(|&v| {
                let d0 = v % p;
                let w = v - d0 + (d0 + 1) % p;
                if w == 0 {
                    ZERO_CODE
                } else {
                    log[w as usize]
                }
            })
            .collect();
        let neg_one = if p == 2 { 0 } else { (order - 1) / 2 };
        Ok(FieldCtx { p, m, order, poly, zech, neg_one })
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.order as u64
    }

    /// Monic defining polynomial, coefficients low-degree-first.
    pub fn defining_poly(&self) -> &[u32] {
        &self.poly
    }

    #[inline]
    fn n(&self) -> u32 {
        self.order - 1
    }

    /// The primitive element `g`.
    pub fn generator(&self) -> Elem {
        self.pow_gen(1)
    }

    /// `g^k`.
    #[inline]
    pub fn pow_gen(&self, k: u64) -> Elem {
        Elem((k % self.n() as u64) as u32)
    }

    /// Zech logarithm: `1 + g^k = g^{zech(k)}`, `None` when the sum vanishes.
    pub fn zech(&self, k: u32) -> Option<u32> {
        let z = self.zech[(k % self.n()) as usize];
        (z != ZERO_CODE).then_some(z)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let n = self.n();
        let d = if b.0 >= a.0 { b.0 - a.0 } else { b.0 + n - a.0 };
        let z = self.zech[d as usize];
        if z == ZERO_CODE {
            Elem::ZERO
        } else {
            Elem(add_mod(a.0, z, n))
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if a.is_zero() {
            a
        } else {
            Elem(add_mod(a.0, self.neg_one, self.n()))
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            Elem::ZERO
        } else {
            Elem(add_mod(a.0, b.0, self.n()))
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        match a.exponent() {
            None => Err(Error::DivisionByZero),
            Some(k) => Ok(Elem((self.n() - k) % self.n())),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn arith(&self, a: Elem, b: Elem, op: Op) -> Result<Elem> {
        Ok(match op {
            Op::Add => self.add(a, b),
            Op::Sub => self.sub(a, b),
            Op::Mul => self.mul(a, b),
            Op::Div => self.div(a, b)?,
        })
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        match a.exponent() {
            None if e == 0 => Elem::ONE,
            None => Elem::ZERO,
            Some(k) => {
                let n = self.n() as u64;
                Elem(((k as u64 * (e % n)) % n) as u32)
            }
        }
    }

    /// `x^{q_power}`; for `q_power` a power of `p` this is a field automorphism
    /// fixing the subfield of order `q_power` pointwise.
    #[inline]
    pub fn frobenius(&self, x: Elem, q_power: u64) -> Elem {
        self.pow(x, q_power)
    }

    /// Embeds an integer (reduced mod `p`) into the prime field.
    pub fn from_int(&self, v: u64) -> Elem {
        let v = v % self.p as u64;
        let mut acc = Elem::ZERO;
        for _ in 0..v {
            acc = self.add(acc, Elem::ONE);
        }
        acc
    }

    pub fn is_subfield_order(&self, order: u64) -> bool {
        self.subfield_degree(order).is_some()
    }

    fn subfield_degree(&self, order: u64) -> Option<u32> {
        (1..=self.m)
            .filter(|d| self.m % d == 0)
            .find(|&d| checked_pow(self.p as u64, d) == Some(order))
    }

    /// Orders of all subfields, ascending.
    pub fn subfield_orders(&self) -> Vec<u64> {
        (1..=self.m)
            .filter(|d| self.m % d == 0)
            .map(|d| (self.p as u64).pow(d))
            .collect()
    }

    /// `(Q-1)/(order-1)`.
    pub fn cofactor(&self, order: u64) -> Result<u32> {
        if !self.is_subfield_order(order) {
            return Err(Error::NotInTower(order));
        }
        Ok(((self.order as u64 - 1) / (order - 1)) as u32)
    }

    pub fn subfield_contains(&self, x: Elem, order: u64) -> Result<bool> {
        let c = self.cofactor(order)?;
        Ok(match x.exponent() {
            None => true,
            Some(k) => k % c == 0,
        })
    }

    /// Canonical generator `g^{(Q-1)/(order-1)}` of the subfield.
    pub fn subfield_generator(&self, order: u64) -> Result<Elem> {
        Ok(Elem(self.cofactor(order)?))
    }

    /// I/O code of `x` relative to the subfield: 0 for zero, `j+1` for `g_{order}^j`.
    pub fn encode(&self, x: Elem, order: u64) -> Result<u32> {
        let c = self.cofactor(order)?;
        match x.exponent() {
            None => Ok(0),
            Some(k) if k % c == 0 => Ok(k / c + 1),
            Some(_) => Err(Error::NotInSubfield(order)),
        }
    }

    pub fn decode(&self, code: u64, order: u64) -> Result<Elem> {
        let c = self.cofactor(order)?;
        if code == 0 {
            Ok(Elem::ZERO)
        } else if code < order {
            Ok(Elem((code as u32 - 1) * c))
        } else {
            Err(Error::BadElementCode { code, order })
        }
    }

    /// All elements of the subfield in I/O code order.
    pub fn elements(&self, order: u64) -> Result<Vec<Elem>> {
        let c = self.cofactor(order)?;
        Ok(std::iter::once(Elem::ZERO)
            .chain((0..(order as u32 - 1)).map(|j| Elem(j * c)))
            .collect())
    }

    /// Nonzero subfield elements in I/O code order.
    pub fn nonzero_elements(&self, order: u64) -> Result<Vec<Elem>> {
        let mut v = self.elements(order)?;
        v.remove(0);
        Ok(v)
    }

    /// True iff every element of `xs` lies in the subfield.
    pub fn in_subfield_all(&self, xs: &[Elem], order: u64) -> Result<bool> {
        let c = self.cofactor(order)?;
        Ok(xs.iter().all(|x| x.exponent().map_or(true, |k| k % c == 0)))
    }

    /// Lexicographically smallest monic primitive polynomial of `degree` over
    /// the subfield of order `order`, coefficients low-degree-first with the
    /// leading 1 included. Candidates are compared by the I/O codes of
    /// `(c_0, c_1, ..., c_{degree-1})`, `c_0` first.
    pub fn primitive_poly_over(&self, order: u64, degree: u32) -> Result<Vec<Elem>> {
        if degree == 0 {
            return Err(Error::InvalidParameters("degree must be positive".into()));
        }
        let elems = self.elements(order)?;
        let target = checked_pow(order, degree)
            .ok_or_else(|| Error::InvalidParameters("extension too large".into()))?
            - 1;
        let primes = prime_factors(target);
        let d = degree as usize;
        let total = checked_pow(order, degree).unwrap();
        for idx in 0..total {
            // c_0 is the most significant digit.
            let mut coeffs = vec![Elem::ZERO; d + 1];
            let mut rem = idx;
            for i in (0..d).rev() {
                coeffs[i] = elems[(rem % order) as usize];
                rem /= order;
            }
            coeffs[d] = Elem::ONE;
            if coeffs[0].is_zero() {
                continue;
            }
            if poly_x_has_order(self, &coeffs, target, &primes) {
                return Ok(coeffs);
            }
        }
        Err(Error::Internal(format!("no primitive polynomial of degree {degree} over F_{order}")))
    }
}

#[inline]
fn add_mod(a: u32, b: u32, n: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % n as u64) as u32
}

fn check_order(p: u64, m: u32, cap: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidParameters("extension degree must be positive".into()));
    }
    match checked_pow(p, m) {
        Some(q) if q <= cap && q <= u32::MAX as u64 / 2 => Ok(q as u32),
        other => Err(Error::CapExceeded {
            order: other.map(|q| q as u128).unwrap_or(u128::MAX),
            cap,
        }),
    }
}

fn digits_to_int(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

/// Multiplies a residue (digits low-first) by `x` modulo the monic `poly`.
fn times_x(d: &mut [u32], poly: &[u32], p: u32) {
    let m = d.len();
    let top = d[m - 1];
    for i in (1..m).rev() {
        d[i] = d[i - 1];
    }
    d[0] = 0;
    if top != 0 {
        for i in 0..m {
            d[i] = (d[i] + (p - top) * poly[i]) % p;
        }
    }
}

// --- polynomial arithmetic over F_p (used only to pick the defining polynomial)

fn fp_mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let m = f.len() - 1;
    let mut prod = vec![0u64; 2 * m];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for k in (m..2 * m).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for i in 0..m {
            prod[k - m + i] = (prod[k - m + i] + (p as u64 - c) * f[i] as u64) % p as u64;
        }
    }
    prod[..m].iter().map(|&c| c as u32).collect()
}

fn fp_x_pow(e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let m = f.len() - 1;
    let mut base = vec![0u32; m];
    if m == 1 {
        base[0] = (p - f[0]) % p;
    } else {
        base[1] = 1;
    }
    let mut acc = vec![0u32; m];
    acc[0] = 1;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_mulmod(&acc, &base, f, p);
        }
        base = fp_mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn is_primitive_fp(p: u32, f: &[u32], order: u32) -> bool {
    if f[0] == 0 {
        return false;
    }
    let n = order as u64 - 1;
    let m = f.len() - 1;
    let mut one = vec![0u32; m];
    one[0] = 1;
    if fp_x_pow(n, f, p) != one {
        return false;
    }
    prime_factors(n).into_iter().all(|l| fp_x_pow(n / l, f, p) != one)
}

fn smallest_primitive_poly(p: u32, m: u32, order: u32) -> Option<Vec<u32>> {
    let md = m as usize;
    let total = order as u64;
    (0..total).find_map(|idx| {
        let mut f = vec![0u32; md + 1];
        let mut rem = idx;
        for i in (0..md).rev() {
            f[i] = (rem % p as u64) as u32;
            rem /= p as u64;
        }
        f[md] = 1;
        is_primitive_fp(p, &f, order).then_some(f)
    })
}

// --- polynomial arithmetic with ambient-field coefficients

fn poly_mulmod(ctx: &FieldCtx, a: &[Elem], b: &[Elem], f: &[Elem]) -> Vec<Elem> {
    let m = f.len() - 1;
    let mut prod = vec![Elem::ZERO; 2 * m];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ctx.add(prod[i + j], ctx.mul(x, y));
        }
    }
    for k in (m..2 * m).rev() {
        let c = prod[k];
        if c.is_zero() {
            continue;
        }
        prod[k] = Elem::ZERO;
        for i in 0..m {
            prod[k - m + i] = ctx.sub(prod[k - m + i], ctx.mul(c, f[i]));
        }
    }
    prod.truncate(m);
    prod
}

/// `x^e mod f` for monic `f` with coefficients in the ambient field.
pub(crate) fn poly_x_pow(ctx: &FieldCtx, e: u64, f: &[Elem]) -> Vec<Elem> {
    let m = f.len() - 1;
    let mut base = vec![Elem::ZERO; m];
    if m == 1 {
        base[0] = ctx.neg(f[0]);
    } else {
        base[1] = Elem::ONE;
    }
    let mut acc = vec![Elem::ZERO; m];
    acc[0] = Elem::ONE;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(ctx, &acc, &base, f);
        }
        base = poly_mulmod(ctx, &base, &base, f);
        e >>= 1;
    }
    acc
}

fn poly_x_has_order(ctx: &FieldCtx, f: &[Elem], target: u64, primes: &[u64]) -> bool {
    let m = f.len() - 1;
    let mut one = vec![Elem::ZERO; m];
    one[0] = Elem::ONE;
    poly_x_pow(ctx, target, f) == one && primes.iter().all(|&l| poly_x_pow(ctx, target / l, f) != one)
}
