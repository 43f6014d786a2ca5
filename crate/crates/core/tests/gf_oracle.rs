//! Field arithmetic checked against plain polynomial arithmetic modulo the
//! defining polynomial.

use proptest::prelude::*;
use std::collections::HashMap;
use ttcodes::{Elem, FieldCtx};

/// `x^k mod f` for every `k < p^m - 1`, as coefficient vectors, plus the inverse map.
struct PolyOracle {
    p: u32,
    powers: Vec<Vec<u32>>,
    log: HashMap<Vec<u32>, u64>,
}

impl PolyOracle {
    fn new(ctx: &FieldCtx) -> Self {
        let p = ctx.characteristic() as u32;
        let f = ctx.defining_poly().to_vec();
        let m = f.len() - 1;
        let mut cur = vec![0u32; m];
        cur[0] = 1;
        let mut powers = Vec::new();
        let mut log = HashMap::new();
        for k in 0..ctx.order() - 1 {
            log.insert(cur.clone(), k);
            powers.push(cur.clone());
            // multiply by x and reduce with x^m = -sum f_i x^i
            let top = cur[m - 1];
            let mut next = vec![0u32; m];
            for i in (1..m).rev() {
                next[i] = cur[i - 1];
            }
            for i in 0..m {
                next[i] = (next[i] + (p - f[i] % p) * top) % p;
            }
            cur = next;
        }
        PolyOracle { p, powers, log }
    }

    fn poly(&self, x: Elem) -> Vec<u32> {
        match x.exponent() {
            None => vec![0; self.powers[0].len()],
            Some(k) => self.powers[k as usize].clone(),
        }
    }

    fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }
}

fn oracle_elem(ctx: &FieldCtx, o: &PolyOracle, v: &[u32]) -> Elem {
    match o.log.get(v) {
        None => Elem::ZERO,
        Some(&k) => ctx.pow_gen(k),
    }
}

#[test]
fn f81_multiplication_and_order() {
    let ctx = FieldCtx::new(3, 4).unwrap();
    let o = PolyOracle::new(&ctx);
    assert_eq!(o.powers.len(), 80);
    assert_eq!(o.log.len(), 80, "generator is not primitive");
    let g = ctx.generator();
    assert_eq!(ctx.pow(g, 80), Elem::ONE);
    assert!((1..80).all(|k| ctx.pow(g, k) != Elem::ONE));
    for a in ctx.nonzero_elements(81).unwrap() {
        for b in ctx.nonzero_elements(81).unwrap() {
            let ka = o.log[&o.poly(a)];
            let kb = o.log[&o.poly(b)];
            assert_eq!(o.poly(ctx.mul(a, b)), o.powers[((ka + kb) % 80) as usize]);
        }
    }
}

#[test]
fn zech_addition_exhaustive_small_fields() {
    for (p, m) in [(2, 1), (2, 4), (2, 10), (3, 2), (3, 6), (5, 4), (7, 3), (31, 1)] {
        let ctx = FieldCtx::new(p, m).unwrap();
        let o = PolyOracle::new(&ctx);
        let all = ctx.elements(ctx.order()).unwrap();
        for &a in &all {
            let pa = o.poly(a);
            for &b in &all {
                let expect = oracle_elem(&ctx, &o, &o.add(&pa, &o.poly(b)));
                assert_eq!(ctx.add(a, b), expect, "F_{p}^{m}");
            }
        }
    }
}

#[test]
fn subfield_element_counts() {
    let ctx = FieldCtx::new(2, 12).unwrap();
    let all = ctx.elements(4096).unwrap();
    for d in [1u32, 2, 3, 4, 6, 12] {
        let order = 2u64.pow(d);
        let count = all.iter().filter(|&&x| ctx.pow(x, order) == x).count() as u64;
        assert_eq!(count, order);
        assert_eq!(all.iter().filter(|&&x| ctx.subfield_contains(x, order).unwrap()).count() as u64, order);
        assert_eq!(ctx.elements(order).unwrap().len() as u64, order);
    }
    assert!(ctx.elements(32).is_err());
}

#[test]
fn element_codes_roundtrip() {
    let ctx = FieldCtx::new(7, 6).unwrap();
    for order in [7u64, 49, 343, 117_649] {
        for (c, x) in ctx.elements(order).unwrap().into_iter().enumerate() {
            assert_eq!(ctx.encode(x, order).unwrap() as usize, c);
            assert_eq!(ctx.decode(c as u64, order).unwrap(), x);
        }
        assert!(ctx.decode(order, order).is_err());
    }
}

#[test]
fn from_poly_rebuilds_identical_field() {
    let ctx = FieldCtx::new(5, 3).unwrap();
    let again = FieldCtx::from_poly(5, ctx.defining_poly()).unwrap();
    let all = ctx.elements(125).unwrap();
    for &a in &all {
        for &b in &all {
            assert_eq!(ctx.add(a, b), again.add(a, b));
        }
    }
    // x^3 + 1 is reducible over F_5
    assert!(FieldCtx::from_poly(5, &[1, 0, 0, 1]).is_err());
}

fn field_and_elems() -> impl Strategy<Value = (u64, u32, u64, u64, u64)> {
    prop_oneof![Just((2u64, 8u32)), Just((3, 5)), Just((5, 3)), Just((13, 2))]
        .prop_flat_map(|(p, m)| {
            let n = p.pow(m);
            (Just(p), Just(m), 0..n, 0..n, 0..n)
        })
}

proptest! {
    #[test]
    fn field_axioms((p, m, a, b, c) in field_and_elems()) {
        let ctx = FieldCtx::new(p, m).unwrap();
        let q = ctx.order();
        let (a, b, c) = (ctx.decode(a, q).unwrap(), ctx.decode(b, q).unwrap(), ctx.decode(c, q).unwrap());
        prop_assert_eq!(ctx.add(a, ctx.add(b, c)), ctx.add(ctx.add(a, b), c));
        prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        prop_assert_eq!(ctx.add(a, ctx.neg(a)), Elem::ZERO);
        prop_assert_eq!(ctx.sub(ctx.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), Elem::ONE);
        }
        // Frobenius is additive
        prop_assert_eq!(ctx.frobenius(ctx.add(a, b), p), ctx.add(ctx.frobenius(a, p), ctx.frobenius(b, p)));
    }
}
