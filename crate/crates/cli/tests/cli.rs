use std::fs;
use std::process::{Command, Output};
use ttcodes::codes::{build_parity_check, Ordering};
use ttcodes::format::{format_word, read_gfmat, read_gfmat_with};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ttcodes")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_prints_summary() {
    let o = run(&["build", "--q", "3", "--r", "2", "--t", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["n"].as_u64(), v["k"].as_u64(), v["d"].as_u64()), (Some(10), Some(6), Some(4)));
    assert_eq!(v["ordering"], "singer");
    assert_eq!((v["eta_num"].as_u64(), v["eta_den"].as_u64()), (Some(3), Some(4)));
    assert!(v["beta_code"].as_u64().is_some());
    assert!(v.get("s").is_none());
}

#[test]
fn subcode_summary_has_s() {
    let o = run(&["build", "--q", "5", "--r", "2", "--t", "4", "--s", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["n"].as_u64(), v["k"].as_u64(), v["d"].as_u64(), v["s"].as_u64()), (Some(26), Some(17), Some(6), Some(2)));
}

#[test]
fn invalid_parameters_exit_1() {
    assert_eq!(run(&["build", "--q", "3", "--r", "2", "--t", "5"]).status.code(), Some(1));
    assert_eq!(run(&["build", "--q", "5", "--r", "2", "--t", "4", "--s", "3"]).status.code(), Some(1));
    assert_eq!(run(&["build", "--q", "6", "--r", "2", "--t", "2"]).status.code(), Some(1));
    assert_eq!(run(&["simulate", "--q", "3", "--r", "2", "--t", "2", "--p", "0.1", "--trials", "5"]).status.code(), Some(1));
    assert_eq!(run(&["autocheck", "--q", "3", "--r", "2", "--t", "2"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["puncture", "--q", "3", "--r", "2", "--t", "2", "--origin", "0,1"]).status.code(), Some(1));
}

#[test]
fn verify_passes_for_4_2_3() {
    let o = run(&["verify", "--q", "4", "--r", "2", "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().count() >= 5);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}

#[test]
fn export_roundtrips_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.gfmat");
    let b = dir.path().join("b.gfmat");
    for p in [&a, &b] {
        let o = run(&["export", "--q", "4", "--r", "2", "--t", "3", "--output", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert!(text.starts_with("GFMAT 1 p=2 q=4 rows=8 cols=65 poly="));
    let code = build_parity_check(4, 2, 3, Ordering::Singer).unwrap();
    let (ctx, m) = read_gfmat(&text).unwrap();
    assert_eq!(&m, code.parity_check());
    assert_eq!(ctx.defining_poly(), code.field().defining_poly());
    assert_eq!(&read_gfmat_with(code.field(), &text).unwrap(), code.parity_check());

    let j = dir.path().join("s.json");
    let o = run(&["export", "--q", "3", "--r", "2", "--t", "2", "--format", "json", "--output", j.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&j).unwrap()).unwrap();
    assert_eq!(v["d"], 4);
}

#[test]
fn build_writes_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.gfmat");
    let o = run(&["build", "--q", "3", "--r", "2", "--t", "2", "--ordering", "lex", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let (_, m) = read_gfmat(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(&m, build_parity_check(3, 2, 2, Ordering::Lex).unwrap().parity_check());
}

#[test]
fn decode_corrects_and_reports_failure() {
    let code = build_parity_check(3, 2, 2, Ordering::Singer).unwrap();
    let ctx = code.field();
    let w = code.kernel_basis()[1].clone();
    let mut r = w.clone();
    r[4] = ctx.add(r[4], ttcodes::Elem::ONE);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.txt");
    fs::write(&path, format_word(ctx, &r, 3).unwrap()).unwrap();
    let o = run(&["decode", "--q", "3", "--r", "2", "--t", "2", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), format_word(ctx, &w, 3).unwrap());

    // a weight-2 error pattern with no codeword within distance 1
    let mut found = false;
    for i in 0..10 {
        for j in i + 1..10 {
            let mut e = vec![ttcodes::Elem::ZERO; 10];
            e[i] = ttcodes::Elem::ONE;
            e[j] = ttcodes::Elem::ONE;
            if let Ok(ttcodes::codes::DecodeResult::Failure) = ttcodes::codes::decode(&code, &e) {
                fs::write(&path, format_word(ctx, &e, 3).unwrap()).unwrap();
                let o = run(&["decode", "--q", "3", "--r", "2", "--t", "2", "--input", path.to_str().unwrap()]);
                assert_eq!(stdout(&o).trim(), "FAILURE");
                found = true;
            }
        }
    }
    assert!(found);
    fs::write(&path, "1 2 3").unwrap();
    let o = run(&["decode", "--q", "3", "--r", "2", "--t", "2", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn simulate_is_seeded() {
    let args = ["simulate", "--q", "4", "--r", "2", "--t", "3", "--p", "0.02", "--trials", "500", "--seed", "7"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, run(&args).stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["trials"], 500);
}

#[test]
fn analysis_subcommands() {
    let o = run(&["minwords", "--q", "3", "--r", "2", "--t", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("sublines 30\nsupports 30\ncodewords 60\n"));
    assert_eq!(out.lines().count(), 33);

    let o = run(&["constacyclic", "--q", "4", "--r", "2", "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("basis_words 57"));
    assert_eq!(run(&["constacyclic", "--q", "4", "--r", "2", "--t", "3", "--ordering", "lex"]).status.code(), Some(1));

    let o = run(&["puncture", "--q", "3", "--r", "2", "--t", "2", "--origin", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["n"].as_u64(), v["d"].as_u64(), v["beta_code"].as_u64()), (Some(8), Some(3), Some(1)));
    assert_eq!(v["ordering"], "affine-singer-punctured");

    let o = run(&["autocheck", "--q", "3", "--r", "2", "--t", "2", "--seed", "1", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(0));
}
