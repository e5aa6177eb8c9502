//! `repst`: command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage errors
//! (including malformed input and exceeded enumeration limits).

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use repst::bounds::{bound_sweep, find_threshold, lemma_scan, LemmaReport};
use repst::deligne::{class_size_poly, dim_x, frob_coefficient, jm_eigenvalue, omega_m_eigenvalue, pieri_h0};
use repst::exactalg::{parse_rational, to_binomial_basis};
use repst::groupalg::{order_remark_note, HilbertCoefficientTable};
use repst::schurweyl::{interlace_branch, tensor_power_hilbert, verma_reducibility_candidates, UnitalHilbert, VermaWeightSpec};
use repst::verify::{run_suite, Suite, SuiteReport, VerifyParams};
use repst::{ContentConvention, CycleType, Partition, Poly, Rational};

#[derive(Parser)]
#[command(name = "repst", version, about = "Exact symmetric group representation theory at complex rank t")]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Eval {
    /// Also evaluate at this rational point, e.g. "7" or "-1/2".
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    t_eval: Option<Rational>,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension polynomial of X_lambda.
    Dim {
        /// Partition, e.g. "2,1"; "" is the empty partition.
        #[arg(long)]
        lambda: Partition,
        #[command(flatten)]
        eval: Eval,
    },
    /// Decomposition of h0 (x) X_lambda.
    Pieri {
        #[arg(long)]
        lambda: Partition,
    },
    /// Eigenvalue of the Jucys-Murphy element on X_lambda.
    Omega {
        #[arg(long)]
        lambda: Partition,
        #[command(flatten)]
        eval: Eval,
    },
    /// Eigenvalue of the central element attached to a cycle type.
    OmegaM {
        /// Cycle counts "m1,m2,...": number of 2-cycles, 3-cycles, ...
        #[arg(long)]
        rho: CycleType,
        #[arg(long)]
        lambda: Partition,
        #[command(flatten)]
        eval: Eval,
    },
    /// Size of the conjugacy class with the given nontrivial cycles.
    ClassSize {
        #[arg(long)]
        rho: CycleType,
        #[command(flatten)]
        eval: Eval,
    },
    /// Interpolated character value of X_lambda on a cycle type.
    Frob {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        rho: CycleType,
        #[command(flatten)]
        eval: Eval,
    },
    /// Run verification suites against the classical oracle.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Largest |lambda| (oracle, pieri) or degree bound (graded).
        #[arg(long)]
        max_size: Option<u32>,
        /// Largest integer rank n.
        #[arg(long)]
        max_n: Option<u32>,
        /// Largest cycle support (oracle) or Hilbert degree (stirling).
        #[arg(long)]
        max_m: Option<u32>,
        #[arg(long, value_enum, default_value = "col-minus-row", hide = true)]
        content_convention: ConventionArg,
    },
    /// Hilbert series h(x)^t of a tensor power.
    Hilbert {
        /// Coefficients of h, constant term first; must start with 1.
        #[arg(long, value_delimiter = ',')]
        h: Vec<u64>,
        #[arg(long)]
        deg: u32,
    },
    /// Ranks t where M(t - |lambda|, lambda) may be reducible.
    Verma {
        #[arg(long)]
        lambda: Partition,
        /// dim V.
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        t_max: u64,
    },
    /// Partitions mu interlacing with lambda, at most N-1 rows, |mu| <= bound.
    Branch {
        #[arg(long)]
        lambda: Partition,
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        bound: u32,
    },
    /// Hilbert series coefficients of gr C[S_t] as polynomials in t.
    #[command(after_long_help = order_remark_note())]
    Stirling {
        /// Largest power of x.
        #[arg(long)]
        max_m: u32,
    },
    /// Check dim >= binom(n,d)(d/n)^d over all partitions of n.
    BoundSweep {
        #[arg(long)]
        n: u32,
    },
    /// Partitions of n with dim <= C n^k and both first row and column < n-k.
    LemmaScan {
        #[arg(long = "C", value_parser = parse_rational_arg)]
        c: Rational,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Smallest N with an empty lemma scan for N <= n <= max-n.
    Threshold {
        #[arg(long = "C", value_parser = parse_rational_arg)]
        c: Rational,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        max_n: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracle,
    Pieri,
    Stirling,
    Bounds,
    Graded,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    ColMinusRow,
    RowMinusCol,
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<repst::Error> for Failure {
    fn from(e: repst::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn print_poly(label: &str, p: &Poly, eval: &Eval, json: bool) {
    let value = eval.t_eval.as_ref().map(|r| p.eval(r));
    if json {
        let mut out = json!({ "monomial": p, "binomial": to_binomial_basis(p) });
        if let (Some(t), Some(v)) = (&eval.t_eval, &value) {
            out["t"] = json!(t.to_string());
            out["value"] = json!(v.to_string());
        }
        emit_json(&out);
    } else {
        println!("{label} = {p}");
        println!("{label} = {}", to_binomial_basis(p));
        if let (Some(t), Some(v)) = (&eval.t_eval, &value) {
            println!("at t = {t}: {v}");
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Dim { lambda, eval } => print_poly(&format!("dim X{}", lambda.pretty()), &dim_x(&lambda)?, &eval, json),
        Command::Pieri { lambda } => {
            let d = pieri_h0(&lambda);
            if json {
                emit_json(&d);
            } else {
                for (mu, c) in d.iter() {
                    println!("X{}: {c}", mu.pretty());
                }
            }
        }
        Command::Omega { lambda, eval } => {
            print_poly(&format!("Omega on X{}", lambda.pretty()), &jm_eigenvalue(&lambda), &eval, json)
        }
        Command::OmegaM { rho, lambda, eval } => {
            let p = omega_m_eigenvalue(&rho, &lambda)?;
            print_poly(&format!("Omega[{rho}] on X{}", lambda.pretty()), &p, &eval, json)
        }
        Command::ClassSize { rho, eval } => print_poly(&format!("|C[{rho}]|"), &class_size_poly(&rho), &eval, json),
        Command::Frob { lambda, rho, eval } => {
            let p = frob_coefficient(&lambda, &rho);
            print_poly(&format!("chi X{} [{rho}]", lambda.pretty()), &p, &eval, json)
        }
        Command::Verify { suite, max_size, max_n, max_m, content_convention } => {
            let params = VerifyParams {
                max_size,
                max_n,
                min_n: None,
                max_m,
                convention: match content_convention {
                    ConventionArg::ColMinusRow => ContentConvention::ColMinusRow,
                    ConventionArg::RowMinusCol => ContentConvention::RowMinusCol,
                },
            };
            return verify(suite, &params, json);
        }
        Command::Hilbert { h, deg } => {
            let hil = UnitalHilbert::from_u64(&h)?;
            let s = tensor_power_hilbert(&hil, deg);
            let table = (0..=deg)
                .map(|k| Ok((k, s.coefficient(&[k])?)))
                .collect::<repst::Result<BTreeMap<u32, Poly>>>()?;
            if json {
                emit_json(&table);
            } else {
                for (k, p) in &table {
                    println!("x^{k}: {p}");
                }
            }
        }
        Command::Verma { lambda, n, t_max } => {
            let spec = VermaWeightSpec::new(lambda, n)?;
            let candidates = verma_reducibility_candidates(&spec, t_max);
            let ranks: std::collections::BTreeSet<u64> = candidates.iter().map(|c| c.t).collect();
            if json {
                emit_json(&json!({ "ranks": ranks, "candidates": candidates }));
            } else {
                let list: Vec<String> = ranks.iter().map(u64::to_string).collect();
                println!("t in {{{}}}", list.join(","));
                for c in &candidates {
                    println!("  t={} (i={}, m={})", c.t, c.i, c.m);
                }
            }
        }
        Command::Branch { lambda, n, bound } => {
            let mus = interlace_branch(&lambda, n, bound)?;
            if json {
                emit_json(&mus.iter().map(ToString::to_string).collect::<Vec<_>>());
            } else {
                for mu in &mus {
                    println!("{}", mu.pretty());
                }
            }
        }
        Command::Stirling { max_m } => {
            repst::Limits::check("max-m", max_m, repst::Limits::get().max_m)?;
            let table = HilbertCoefficientTable::stirling(max_m);
            if json {
                emit_json(&table);
            } else {
                for (m, p) in &table.entries {
                    println!("x^{m}: {p}");
                }
            }
        }
        Command::BoundSweep { n } => {
            let r = bound_sweep(n)?;
            if json {
                emit_json(&r);
            } else {
                println!(
                    "n={}: {} partitions, {}, min slack {} at ({})",
                    r.n,
                    r.partitions,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.min_slack.as_deref().unwrap_or("-"),
                    r.min_slack_partition.as_deref().unwrap_or("")
                );
                for v in &r.violations {
                    println!("  violation: ({v})");
                }
            }
            if !r.pass {
                return Err(Failure::Verification);
            }
        }
        Command::LemmaScan { c, k, n } => {
            let v = lemma_scan(&c, k, n)?;
            if json {
                emit_json(&LemmaReport::new(&c, k, n, &v));
            } else if v.is_empty() {
                println!("no violations at n={n}");
            } else {
                for mu in &v {
                    println!("{}", mu.pretty());
                }
            }
        }
        Command::Threshold { c, k, max_n } => {
            let t = find_threshold(&c, k, max_n)?;
            if json {
                emit_json(&json!({ "check": "threshold", "C": c.to_string(), "k": k, "nMax": max_n, "threshold": t }));
            } else {
                match t {
                    Some(t) => println!("empty for {t} <= n <= {max_n}"),
                    None => println!("none up to {max_n}"),
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    pass: bool,
    suites: &'a [SuiteReport],
}

fn verify(suite: SuiteArg, params: &VerifyParams, json: bool) -> Outcome {
    let suites: Vec<Suite> = match suite {
        SuiteArg::Oracle => vec![Suite::Oracle],
        SuiteArg::Pieri => vec![Suite::Pieri],
        SuiteArg::Stirling => vec![Suite::Stirling],
        SuiteArg::Bounds => vec![Suite::Bounds],
        SuiteArg::Graded => vec![Suite::Graded],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let reports = suites
        .into_iter()
        .map(|s| run_suite(s, params))
        .collect::<repst::Result<Vec<_>>>()?;
    let pass = reports.iter().all(|r| r.pass);
    if json {
        emit_json(&VerifyOutput { pass, suites: &reports });
    } else {
        for r in &reports {
            println!("{}: {} ({} checks)", r.suite, if r.pass { "PASS" } else { "FAIL" }, r.checks);
            for f in &r.failures {
                println!("  [{}] {}", f.check, f.detail);
            }
        }
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
