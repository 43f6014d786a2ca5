use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use ttcodes::codes::{self, Code, CodeKind, DecodeResult, Ordering};
use ttcodes::format::{format_word, parse_word, write_gfmat, SummaryJson};
use ttcodes::{Elem, Error};

#[derive(Parser)]
#[command(name = "ttcodes", version, about = "Constacyclic codes from twisted tensor embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Params {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    t: usize,
    /// Build the subcode on PG(r-1, q^s).
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, value_enum, default_value_t = OrderArg::Singer)]
    ordering: OrderArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Singer,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Gfmat,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a code and print its summary as JSON.
    Build {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the parity-check matrix in GFMAT format.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check every structural claim for the given parameters.
    Verify {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List minimum-weight word supports.
    Minwords {
        #[command(flatten)]
        params: Params,
        /// Print at most this many supports.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Print the constacyclic constant and its certificate.
    Constacyclic {
        #[command(flatten)]
        params: Params,
    },
    /// Build the punctured cyclic code and verify cyclicity.
    Puncture {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        infinity_index: usize,
        /// Origin as comma-separated element codes over F_{q^t}.
        #[arg(long)]
        origin: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Lift random collineations and verify the monomial automorphisms.
    Autocheck {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Decode a received word (whitespace-separated element codes).
    Decode {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        input: PathBuf,
    },
    /// Simulate a q-ary symmetric channel.
    Simulate {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Write the parity-check matrix or the summary to a file.
    Export {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = FormatArg::Gfmat)]
        format: FormatArg,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Invalid(String),
    Claim(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Certificate(_) => Failure::Claim(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Run = Result<(), Failure>;

fn io_err(path: &PathBuf, e: std::io::Error) -> Failure {
    Failure::Invalid(format!("{}: {e}", path.display()))
}

fn build_code(p: &Params) -> Result<Code, Error> {
    match p.s {
        Some(s) => codes::build_subcode_parity_check(p.q, p.r, p.t, s),
        None => codes::build_parity_check(
            p.q,
            p.r,
            p.t,
            match p.ordering {
                OrderArg::Singer => Ordering::Singer,
                OrderArg::Lex => Ordering::Lex,
            },
        ),
    }
}

/// Certifies `d` and, when the order is cyclic, `beta`.
fn analyzed(p: &Params, seed: u64) -> Result<Code, Error> {
    let mut code = build_code(p)?;
    code.certify_distance(seed)?;
    if code.cycle_generator().is_some() {
        let beta = codes::constacyclic_shift_constant(&code)?.beta;
        code.set_beta(beta);
    }
    Ok(code)
}

fn summary_json(code: &Code) -> Result<String, Error> {
    let j = SummaryJson::new(code.field(), code.summary())?;
    Ok(serde_json::to_string_pretty(&j).expect("summary serializes"))
}

fn cmd_build(p: &Params, seed: u64, output: Option<&PathBuf>) -> Run {
    let code = analyzed(p, seed)?;
    if let Some(path) = output {
        fs::write(path, write_gfmat(code.field(), code.parity_check())?).map_err(|e| io_err(path, e))?;
    }
    println!("{}", summary_json(&code)?);
    Ok(())
}

fn claim(name: &str, theorem: &str, res: Result<String, Error>, failed: &mut bool) {
    match res {
        Ok(msg) => println!("PASS {name} [{theorem}]: {msg}"),
        Err(e) => {
            *failed = true;
            println!("FAIL {name} [{theorem}]");
            eprintln!("{name}: {e}");
        }
    }
}

fn cmd_verify(p: &Params, seed: u64) -> Run {
    let mut code = build_code(p)?;
    let mut failed = false;
    let (n, k) = (code.summary().n, code.summary().k);
    let predicted = codes::CodeSummary::predicted(p.q, p.r, p.t, p.s)?;
    claim(
        "parameters",
        "dimension n - rank(H)",
        if (n, k) == (predicted.n, predicted.k) {
            Ok(format!("[{n}, {k}]"))
        } else {
            Err(Error::Certificate(format!("[{n}, {k}], predicted [{}, {}]", predicted.n, predicted.k)))
        },
        &mut failed,
    );
    claim(
        "minimum distance",
        "d = t+2",
        code.certify_distance(seed).map(|c| {
            let how = if c.lower.is_exhaustive() { "exhaustive" } else { "subline-restricted + random" };
            format!("d = {}, lower bound {how} over {} subsets, witness {:?}", c.d, c.lower.subsets_checked, c.witness_support)
        }),
        &mut failed,
    );
    if code.cycle_generator().is_some() {
        claim(
            "constacyclic",
            "all constacyclic",
            codes::constacyclic_shift_constant(&code).and_then(|c| {
                let b = code.field().encode(c.beta, p.q)?;
                Ok(format!("beta code {b}, {} basis words, exhaustive agrees", c.basis_size))
            }),
            &mut failed,
        );
        claim(
            "cycle lift",
            "monomial automorphism",
            codes::monomial_automorphism_from(&code, code.cycle_generator().expect("cyclic order")).and_then(|m| {
                let n = code.n();
                if (0..n).all(|i| m.perm[i] == (i + 1) % n) {
                    Ok("generator acts as the column shift".into())
                } else {
                    Err(Error::Certificate("generator does not shift the columns".into()))
                }
            }),
            &mut failed,
        );
    }
    if *code.kind() == CodeKind::Full {
        claim(
            "minimum-weight words",
            "supports on sublines",
            codes::min_weight_words(&code).and_then(|w| {
                let mut msg = format!("{} sublines, {} supports", w.sublines, w.words.len());
                if let Ok(oracle) = codes::exhaustive_min_weight_words(&code, 1 << 20) {
                    if oracle != w.words {
                        return Err(Error::Certificate("exhaustive enumeration disagrees".into()));
                    }
                    msg.push_str(", exhaustive agrees");
                }
                Ok(msg)
            }),
            &mut failed,
        );
    }
    if failed {
        Err(Failure::Claim("one or more claims failed".into()))
    } else {
        Ok(())
    }
}

fn cmd_minwords(p: &Params, limit: Option<usize>) -> Run {
    let code = build_code(p)?;
    let w = codes::min_weight_words(&code)?;
    println!("sublines {}", w.sublines);
    println!("supports {}", w.words.len());
    println!("codewords {}", w.codeword_count(p.q));
    for m in w.words.iter().take(limit.unwrap_or(usize::MAX)) {
        let s: Vec<String> = m.support.iter().map(usize::to_string).collect();
        println!("{} : {}", s.join(" "), format_word(code.field(), &m.values, p.q)?);
    }
    Ok(())
}

fn cmd_constacyclic(p: &Params) -> Run {
    let code = build_code(p)?;
    let c = codes::constacyclic_shift_constant(&code)?;
    let ctx = code.field();
    let all: Vec<String> =
        c.matching_betas.iter().map(|&b| ctx.encode(b, p.q).map(|x| x.to_string())).collect::<Result<_, _>>()?;
    println!("beta_code {}", ctx.encode(c.beta, p.q)?);
    println!("basis_words {}", c.basis_size);
    println!("exhaustive_matches {}", all.join(" "));
    Ok(())
}

fn cmd_puncture(q: u64, r: usize, t: usize, infinity_index: usize, origin: Option<&str>, seed: u64) -> Run {
    let ext = q.checked_pow(t as u32).ok_or_else(|| Failure::Invalid("q^t overflows".into()))?;
    let var = std::sync::Arc::new(ttcodes::variety::VarietyCtx::new(q, r, t)?);
    let origin: Option<Vec<Elem>> = origin
        .map(|s| parse_word(var.field(), &s.replace(',', " "), ext))
        .transpose()?;
    let mut code = Code::punctured(var, infinity_index, origin.as_deref())?;
    if !codes::shift_closure_holds(&code, Elem::ONE) {
        return Err(Failure::Claim("cyclic shift leaves the punctured code".into()));
    }
    code.certify_distance(seed)?;
    code.set_beta(Elem::ONE);
    println!("{}", summary_json(&code)?);
    Ok(())
}

fn cmd_autocheck(p: &Params, seed: u64, samples: usize) -> Run {
    let code = build_code(p)?;
    let ctx = code.field();
    let order = match p.s {
        Some(s) => p.q.pow(s as u32),
        None => code.variety().ext_order(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let g = codes::random_invertible(ctx, p.r, order, &mut rng)?;
        codes::monomial_automorphism_from(&code, &g)
            .map_err(|e| Failure::Claim(format!("sample {i}: {e}")))?;
    }
    println!("{samples} collineations lifted to monomial automorphisms");
    Ok(())
}

fn cmd_decode(p: &Params, input: &PathBuf) -> Run {
    let text = fs::read_to_string(input).map_err(|e| io_err(input, e))?;
    let code = build_code(p)?;
    let received = parse_word(code.field(), &text, p.q)?;
    match codes::decode(&code, &received)? {
        DecodeResult::Corrected { codeword, .. } => println!("{}", format_word(code.field(), &codeword, p.q)?),
        DecodeResult::Failure => println!("FAILURE"),
    }
    Ok(())
}

fn cmd_simulate(p: &Params, prob: f64, trials: u64, seed: u64) -> Run {
    let code = build_code(p)?;
    let stats = codes::simulate_channel(&code, prob, trials, seed)?;
    let out = serde_json::json!({
        "trials": stats.trials,
        "block_errors": stats.block_errors,
        "failures": stats.failures,
        "miscorrections": stats.miscorrections,
        "block_error_rate": stats.block_error_rate(),
        "failure_rate": stats.failure_rate(),
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("stats serialize"));
    Ok(())
}

fn cmd_export(p: &Params, format: FormatArg, output: &PathBuf, seed: u64) -> Run {
    let text = match format {
        FormatArg::Gfmat => {
            let code = build_code(p)?;
            write_gfmat(code.field(), code.parity_check())?
        }
        FormatArg::Json => summary_json(&analyzed(p, seed)?)? + "\n",
    };
    fs::write(output, text).map_err(|e| io_err(output, e))
}

fn run(cli: Cli) -> Run {
    match &cli.command {
        Command::Build { params, seed, output } => cmd_build(params, *seed, output.as_ref()),
        Command::Verify { params, seed } => cmd_verify(params, *seed),
        Command::Minwords { params, limit } => cmd_minwords(params, *limit),
        Command::Constacyclic { params } => cmd_constacyclic(params),
        Command::Puncture { q, r, t, infinity_index, origin, seed } => {
            cmd_puncture(*q, *r, *t, *infinity_index, origin.as_deref(), *seed)
        }
        Command::Autocheck { params, seed, samples } => cmd_autocheck(params, *seed, *samples),
        Command::Decode { params, input } => cmd_decode(params, input),
        Command::Simulate { params, p, trials, seed } => cmd_simulate(params, *p, *trials, *seed),
        Command::Export { params, format, output, seed } => cmd_export(params, *format, output, *seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Claim(msg)) => {
            eprintln!("claim failed: {msg}");
            ExitCode::from(2)
        }
    }
}
