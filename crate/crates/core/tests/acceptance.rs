//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};
use ttcodes::codes::*;
use ttcodes::pglin::rank;
use ttcodes::{Elem, FieldCtx};

// Pinned budgets and tolerances.
const AC1_BUDGET: Duration = Duration::from_secs(120);
const AC2_BUDGET: Duration = Duration::from_secs(60);
const AC3_BUDGET: Duration = Duration::from_secs(60);
const AC10_BUDGET: Duration = Duration::from_secs(120);
/// Reported values carry two decimals; agreement means `|exact - reported| < 0.01`.
const ETA_TOLERANCE: f64 = 0.01;
const ETA_C33_REPORTED: f64 = 0.14;
const ETA_C36_SUB_REPORTED: f64 = 0.032;
const ETA_C36_REPORTED: f64 = 0.10;
const AC7_SMALL_SAMPLES: usize = 50;
const AC7_LARGE_SAMPLES: usize = 20;
const AC10_TRIALS: u64 = 1_000;
const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: ttcodes::Error) -> String {
    e.to_string()
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let el = start.elapsed();
    check(el <= budget, format!("took {:.1}s, budget {}s", el.as_secs_f64(), budget.as_secs()))
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (q, r, t) in [(3u64, 2usize, 2usize), (4, 2, 2), (4, 2, 3), (5, 2, 2), (3, 3, 2), (5, 2, 4)] {
        let mut code = build_parity_check(q, r, t, Ordering::Singer).map_err(err)?;
        let n = ((q.pow((r * t) as u32) - 1) / (q.pow(t as u32) - 1)) as usize;
        let redundancy = r.pow(t as u32);
        check(code.n() == n, format!("({q},{r},{t}) n = {}, expected {n}", code.n()))?;
        check(code.k() == n - redundancy, format!("({q},{r},{t}) k = {}", code.k()))?;
        let cert = code.certify_distance(SEED).map_err(err)?;
        check(cert.d == t + 2, format!("({q},{r},{t}) d = {}", cert.d))?;
        let how = if cert.lower.is_exhaustive() { "exhaustive" } else { "subline+random" };
        notes.push(format!("({q},{r},{t})=[{},{},{}] {how}", code.n(), code.k(), cert.d));
    }
    within(start, AC1_BUDGET)?;
    Ok(notes.join("; "))
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let mut code = build_subcode_parity_check(5, 2, 4, 2).map_err(err)?;
    let rk = rank(code.field(), code.parity_check());
    check(rk == 9, format!("rank(K) = {rk}"))?;
    check((code.n(), code.k()) == (26, 17), format!("[{}, {}]", code.n(), code.k()))?;
    let cert = code.certify_distance(SEED).map_err(err)?;
    check(cert.lower.is_exhaustive() && cert.lower.subsets_checked == 65_780, "lower bound not exhaustive")?;
    check(cert.d == 6, format!("d = {}", cert.d))?;
    within(start, AC2_BUDGET)?;
    Ok(format!("[26,17,6], rank 9, {} subsets", cert.lower.subsets_checked))
}

fn ac3() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (q, t, expected) in [(3u64, 2usize, 120u128), (4, 3, 677_040)] {
        let code = build_parity_check(q, 2, t, Ordering::Singer).map_err(err)?;
        let rep = general_position_check(&code, t + 1, SEED).map_err(err)?;
        check(rep.is_exhaustive(), "not exhaustive")?;
        check(rep.subsets_checked == expected, format!("checked {}", rep.subsets_checked))?;
        check(rep.holds(), format!("violation {:?}", rep.violation))?;
        notes.push(format!("({q},2,{t}): {} subsets, 0 violations", rep.subsets_checked));
    }
    within(start, AC3_BUDGET)?;
    Ok(notes.join("; "))
}

/// Cross-ratio of four points of `PG(1, q^t)`; it lies in `F_q` iff the points share a subline.
fn cross_ratio(ctx: &FieldCtx, p: [&[Elem]; 4]) -> Elem {
    let det = |a: &[Elem], b: &[Elem]| ctx.sub(ctx.mul(a[0], b[1]), ctx.mul(a[1], b[0]));
    let num = ctx.mul(det(p[0], p[2]), det(p[1], p[3]));
    let den = ctx.mul(det(p[0], p[3]), det(p[1], p[2]));
    ctx.div(num, den).expect("distinct points")
}

fn ac4() -> Outcome {
    let code = build_parity_check(3, 2, 2, Ordering::Singer).map_err(err)?;
    let ctx = code.field();
    let all = enumerate_codewords(&code, 729).map_err(err)?;
    check(all.len() == 729, "codeword count")?;
    let mut oracle = BTreeSet::new();
    let mut weight4 = 0;
    for w in &all {
        if weight(w) != 4 {
            continue;
        }
        weight4 += 1;
        let s: Vec<usize> = (0..w.len()).filter(|&j| !w[j].is_zero()).collect();
        let pts: Vec<&[Elem]> = s.iter().map(|&j| code.points()[j].coords()).collect();
        let cr = cross_ratio(ctx, [pts[0], pts[1], pts[2], pts[3]]);
        check(ctx.subfield_contains(cr, 3).unwrap(), format!("support {s:?} not on a subline"))?;
        let inv = ctx.inv(w[s[0]]).unwrap();
        oracle.insert((s.clone(), s.iter().map(|&j| ctx.mul(inv, w[j])).collect::<Vec<_>>()));
    }
    let minw = min_weight_words(&code).map_err(err)?;
    let produced: BTreeSet<_> = minw.words.iter().map(|m| (m.support.clone(), m.values.clone())).collect();
    check(produced == oracle, "subline enumerator and exhaustive oracle disagree")?;
    check(oracle.len() == 30 && minw.sublines == 30, format!("{} supports", oracle.len()))?;
    check(weight4 == 60, format!("{weight4} weight-4 words"))?;
    Ok(format!("{weight4} weight-4 words, {} supports, all on sublines", oracle.len()))
}

fn ac5() -> Outcome {
    let mut notes = Vec::new();
    for (q, t) in [(3u64, 2usize), (4, 3)] {
        let code = build_parity_check(q, 2, t, Ordering::Singer).map_err(err)?;
        let cert = constacyclic_shift_constant(&code).map_err(err)?;
        check(cert.matching_betas == vec![cert.beta], format!("exhaustive search found {:?}", cert.matching_betas))?;
        check(cert.basis_size == code.k(), "basis size")?;
        let b = code.field().encode(cert.beta, q).unwrap();
        notes.push(format!("({q},2,{t}): beta code {b}, {} basis words", cert.basis_size));
    }
    Ok(notes.join("; "))
}

fn ac6() -> Outcome {
    let mut code = puncture_to_cyclic(3, 2, 2, 0, Some(&[Elem::ONE, Elem::ZERO])).map_err(err)?;
    check(code.n() == 8, format!("length {}", code.n()))?;
    check(shift_closure_holds(&code, Elem::ONE), "cyclic shift leaves the code")?;
    let rep = general_position_check(&code, 2, SEED).map_err(err)?;
    check(rep.is_exhaustive() && rep.holds(), "two dependent columns")?;
    let cert = code.certify_distance(SEED).map_err(err)?;
    check(cert.d == 3, format!("d = {}", cert.d))?;
    Ok(format!("[8,{},3] cyclic", code.k()))
}

fn ac7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let small = build_parity_check(3, 2, 2, Ordering::Singer).map_err(err)?;
    let ctx = small.field();
    let all = enumerate_codewords(&small, 729).map_err(err)?;
    for _ in 0..AC7_SMALL_SAMPLES {
        let g = random_invertible(ctx, 2, 9, &mut rng).map_err(err)?;
        let m = monomial_automorphism_from(&small, &g).map_err(err)?;
        for w in &all {
            let v = m.apply(ctx, w);
            check(small.is_codeword(&v) && weight(&v) == weight(w), "codeword mapped outside the code")?;
        }
    }
    let large = build_parity_check(4, 2, 3, Ordering::Singer).map_err(err)?;
    let ctx = large.field();
    for _ in 0..AC7_LARGE_SAMPLES {
        let g = random_invertible(ctx, 2, 64, &mut rng).map_err(err)?;
        let m = monomial_automorphism_from(&large, &g).map_err(err)?;
        for w in large.kernel_basis() {
            let v = m.apply(ctx, w);
            check(large.is_codeword(&v) && weight(&v) == weight(w), "basis word mapped outside the code")?;
        }
    }
    Ok(format!("{AC7_SMALL_SAMPLES} maps on 729 words, {AC7_LARGE_SAMPLES} maps on 57 basis words"))
}

fn ac8() -> Outcome {
    let c33 = CodeSummary::predicted(4, 3, 3, None).map_err(err)?;
    let built = build_parity_check(4, 3, 3, Ordering::Lex).map_err(err)?;
    check(built.k() == c33.k, format!("built k = {}, predicted {}", built.k(), c33.k))?;
    let e33 = eta(&c33).map_err(err)?;
    check(e33 == Eta { num: 4, den: 27 }, format!("eta(C_3,3) = {e33}"))?;
    check((e33.value() - ETA_C33_REPORTED).abs() < ETA_TOLERANCE, "eta(C_3,3) off the reported value")?;

    let c36s = CodeSummary::predicted(7, 3, 6, Some(3)).map_err(err)?;
    check((c36s.n, c36s.n - c36s.k) == (117_993, 216), format!("[{}, {}]", c36s.n, c36s.k))?;
    let e36s = eta(&c36s).map_err(err)?;
    check(e36s == Eta { num: 7, den: 216 }, format!("eta(C_3,6^(3)) = {e36s}"))?;
    check((e36s.value() - ETA_C36_SUB_REPORTED).abs() < ETA_TOLERANCE, "eta(C_3,6^(3)) off the reported value")?;

    let c36 = CodeSummary::predicted(7, 3, 6, None).map_err(err)?;
    let e36 = eta(&c36).map_err(err)?;
    check(e36 == Eta { num: 7, den: 729 }, format!("eta(C_3,6) = {e36}"))?;
    let deviates = (e36.value() - ETA_C36_REPORTED).abs() >= ETA_TOLERANCE;
    check(deviates, "eta(C_3,6) unexpectedly matches the reported 0.10")?;
    Ok(format!("{e33} ~ {ETA_C33_REPORTED}, {e36s} ~ {ETA_C36_SUB_REPORTED}; deviation: eta(C_3,6) = {e36} vs reported {ETA_C36_REPORTED}"))
}

fn ac9() -> Outcome {
    let code = build_parity_check(3, 2, 2, Ordering::Singer).map_err(err)?;
    let ctx = code.field();
    let fit = quadrics_through_columns(&code).map_err(err)?;
    check(fit.monomials.len() == 10, "expected a 10x10 system")?;
    let form = fit.forms.first().ok_or("no quadric through the columns")?;
    check(code.columns().iter().all(|x| fit.evaluate(ctx, form, x).is_zero()), "form misses a column")?;
    let zeros = fit.zero_count(ctx, form, 4).map_err(err)?;
    check(zeros == 10, format!("{zeros} points on the quadric"))?;
    Ok(format!("{}-dim solution space, {zeros} = q^2+1 points in PG(3,3)", fit.forms.len()))
}

fn ac10() -> Outcome {
    let start = Instant::now();
    let code = build_parity_check(4, 2, 3, Ordering::Singer).map_err(err)?;
    let ctx = code.field();
    let elems = ctx.elements(4).unwrap();
    let n = code.n();
    let bad = (0..AC10_TRIALS)
        .into_par_iter()
        .filter(|&trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED);
            rng.set_stream(trial);
            let mut w = vec![Elem::ZERO; n];
            for b in code.kernel_basis() {
                ttcodes::pglin::axpy(ctx, &mut w, elems[rng.gen_range(0..4)], b);
            }
            let mut r = w.clone();
            let errors = rng.gen_range(0..=2);
            for j in sample(&mut rng, n, errors) {
                r[j] = ctx.add(r[j], elems[rng.gen_range(1..4)]);
            }
            !matches!(decode(&code, &r), Ok(DecodeResult::Corrected { ref codeword, .. }) if *codeword == w)
        })
        .count();
    check(bad == 0, format!("{bad} trials of (4,2,3) not recovered"))?;

    let small = build_parity_check(3, 2, 2, Ordering::Singer).map_err(err)?;
    let ctx = small.field();
    let mut corrections = 0;
    for w in enumerate_codewords(&small, 729).map_err(err)? {
        for j in 0..small.n() {
            for e in ctx.nonzero_elements(3).unwrap() {
                let mut r = w.clone();
                r[j] = ctx.add(r[j], e);
                match decode(&small, &r).map_err(err)? {
                    DecodeResult::Corrected { codeword, .. } if codeword == w => corrections += 1,
                    _ => return Err(format!("single error at {j} not corrected")),
                }
            }
        }
    }
    within(start, AC10_BUDGET)?;
    Ok(format!("{AC10_TRIALS} trials exact; {corrections} single-error corrections"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("AC1 parameters [n, n-r^t, t+2]", ac1),
        ("AC2 subcode [26,17,6]", ac2),
        ("AC3 general position", ac3),
        ("AC4 minimum-weight words on sublines", ac4),
        ("AC5 constacyclic constant", ac5),
        ("AC6 punctured cyclic code", ac6),
        ("AC7 monomial automorphisms", ac7),
        ("AC8 eta values", ac8),
        ("AC9 elliptic quadric", ac9),
        ("AC10 decoder round-trip", ac10),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(msg) => println!("PASS {name} ({secs:.2}s): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name} ({secs:.2}s): {msg}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
