// SPDX-License-Identifier: Apache-2.0

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use mtz_cli::verify::verify;
use mtz_cli::{json as js, latex, Format};
use mtz_core::combinatorics::sigma_partial;
use mtz_core::inversion::{invert, monomial_counts, pi_rationality_scan, SCAN_MAX_DENOMINATOR};
use mtz_core::oracle::{brute_force, gauss_identity_check};
use mtz_core::series::closed_forms;
use mtz_core::{closed_form, BigFloat, Error, WeightVector};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "mtz", version, about = "Symmetrized Mordell-Tornheim zeta values")]
struct Cli {
    /// Working precision in decimal digits (at least 10)
    #[arg(long, global = true, default_value_t = 50)]
    precision: usize,
    /// Worker threads for the numerical oracles (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact closed form of zbar(N) over zeta values
    ClosedForm { n: usize },
    /// Closed forms for n = 1..=MAX
    Table {
        #[arg(long = "max")]
        max: usize,
    },
    /// Compare closed forms with the lattice and sigma oracles
    Verify {
        #[arg(long = "max")]
        max: usize,
        #[arg(long, default_value_t = 400)]
        cutoff: u64,
        #[arg(long, default_value_t = 0.05)]
        tol: f64,
    },
    /// Box-truncated lattice sum for a weight vector
    Oracle {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u32>,
        #[arg(long)]
        cutoff: u64,
    },
    /// Partial sum of sigma(P, M) over s = 1..=TERMS
    Sigma {
        p: usize,
        m: usize,
        #[arg(long)]
        terms: u64,
    },
    /// zeta(n) as polynomials in zbar values, n = 2..=MAX
    Invert {
        #[arg(long = "max")]
        max: usize,
    },
    /// Monomial counts and rationality scan of zbar(n)/pi^n
    Conjectures {
        #[arg(long = "max")]
        max: usize,
    },
    /// Pochhammer-square series against its Gamma-ratio closed form
    Gauss {
        #[arg(long)]
        x: String,
        #[arg(long)]
        terms: u64,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let digits = cli.precision;
    if digits < 10 {
        return Err(usage("--precision must be at least 10"));
    }
    match &cli.command {
        Command::ClosedForm { n } => {
            if *n < 1 {
                return Err(usage("N must be at least 1"));
            }
            let p = closed_form(*n);
            match cli.format {
                Format::Text => println!("{p}"),
                Format::Json => print_json(&js::polynomial_to_json(&p)),
                Format::Latex => println!("{}", latex::align(&[latex::closed_form(*n, &p)])),
            }
        }
        Command::Table { max } => {
            if *max < 1 {
                return Err(usage("--max must be at least 1"));
            }
            let all = closed_forms(*max);
            match cli.format {
                Format::Text => {
                    for (n, p) in all.iter().enumerate().skip(1) {
                        println!("zbar({n}) = {p}");
                    }
                }
                Format::Json => print_json(&Value::Array(
                    all.iter()
                        .enumerate()
                        .skip(1)
                        .map(|(n, p)| json!({ "n": n, "closed_form": js::polynomial_to_json(p) }))
                        .collect(),
                )),
                Format::Latex => {
                    let lines: Vec<String> = all
                        .iter()
                        .enumerate()
                        .skip(1)
                        .map(|(n, p)| latex::closed_form(n, p))
                        .collect();
                    println!("{}", latex::align(&lines));
                }
            }
        }
        Command::Verify { max, cutoff, tol } => {
            if *max < 1 {
                return Err(usage("--max must be at least 1"));
            }
            if tol.is_nan() || *tol <= 0.0 {
                return Err(usage("--tol must be positive"));
            }
            let rows = verify(*max, *cutoff, *tol, digits)?;
            let all_pass = rows.iter().all(|r| r.pass);
            match cli.format {
                Format::Json => print_json(&Value::Array(
                    rows.iter()
                        .map(|r| {
                            json!({
                                "n": r.n,
                                "closed": r.closed.to_sci_string(15),
                                "sigma": r.sigma.value,
                                "sigma_gap": r.sigma.gap,
                                "sigma_gap_doubled": r.sigma.gap_doubled,
                                "lattice": r.lattice.as_ref().map(|l| l.value),
                                "lattice_gap": r.lattice.as_ref().map(|l| l.gap),
                                "lattice_gap_doubled": r.lattice.as_ref().map(|l| l.gap_doubled),
                                "pass": r.pass,
                            })
                        })
                        .collect(),
                )),
                _ => {
                    println!(
                        "{:>3}  {:>22}  {:>10}  {:>10}  status",
                        "n", "closed form", "sigma gap", "box gap"
                    );
                    for r in &rows {
                        let lattice = r
                            .lattice
                            .as_ref()
                            .map_or("-".to_string(), |l| format!("{:.3e}", l.gap));
                        let status = if r.pass { "PASS" } else { "FAIL" };
                        println!(
                            "{:>3}  {:>22}  {:>10.3e}  {:>10}  {status}",
                            r.n,
                            r.closed.to_sci_string(15),
                            r.sigma.gap,
                            lattice
                        );
                    }
                }
            }
            if !all_pass {
                return Err(Failure::Verification);
            }
        }
        Command::Oracle { weights, cutoff } => {
            let w = WeightVector::new(weights.clone())?;
            let r = brute_force(&w, *cutoff)?;
            match cli.format {
                Format::Json => print_json(&json!({
                    "value": r.value.to_f64(),
                    "cutoff": r.cutoff,
                    "terms_summed": r.terms_summed,
                    "lower_bound": r.lower_bound,
                })),
                _ => println!(
                    "value {} (lower bound), cutoff {}, {} terms",
                    r.value.to_sci_string(15),
                    r.cutoff,
                    r.terms_summed
                ),
            }
        }
        Command::Sigma { p, m, terms } => {
            let v = sigma_partial(*p, *m, *terms, digits)?;
            match cli.format {
                Format::Json => print_json(&json!({ "p": p, "m": m, "terms": terms, "value": v.to_f64() })),
                _ => println!("{}", v.to_sci_string(15)),
            }
        }
        Command::Invert { max } => {
            let ids = invert(*max)?;
            match cli.format {
                Format::Text => ids.iter().for_each(|id| println!("{id}")),
                Format::Json => print_json(&Value::Array(ids.iter().map(js::identity_to_json).collect())),
                Format::Latex => {
                    let lines: Vec<String> = ids.iter().map(latex::identity).collect();
                    println!("{}", latex::align(&lines));
                }
            }
        }
        Command::Conjectures { max } => {
            if *max < 1 {
                return Err(usage("--max must be at least 1"));
            }
            let counts = monomial_counts(*max);
            let scan = pi_rationality_scan(*max, digits.max(50), SCAN_MAX_DENOMINATOR)?;
            match cli.format {
                Format::Json => print_json(&Value::Array(
                    counts
                        .iter()
                        .zip(&scan)
                        .map(|(c, s)| {
                            json!({
                                "n": c.n,
                                "monomials": c.count,
                                "predicted": c.predicted,
                                "count_matches": c.matches,
                                "ratio_to_pi_power": s.ratio.to_sci_string(30),
                                "approximant": js::rational_to_json(&s.approximant),
                                "residual": s.residual.to_sci_string(3),
                                "flagged": s.flagged,
                            })
                        })
                        .collect(),
                )),
                _ => {
                    println!(
                        "{:>3}  {:>9}  {:>11}  {:>24}  {:>17}  {:>9}  flag",
                        "n", "monomials", "p(n)-p(n-1)", "zbar(n)/pi^n", "approximant", "residual"
                    );
                    for (c, s) in counts.iter().zip(&scan) {
                        println!(
                            "{:>3}  {:>9}  {:>11}  {:>24}  {:>17}  {:>9}  {}",
                            c.n,
                            c.count,
                            c.predicted,
                            s.ratio.to_sci_string(20),
                            s.approximant.to_string(),
                            s.residual.to_sci_string(2),
                            if s.flagged { "rational?" } else { "" }
                        );
                    }
                }
            }
        }
        Command::Gauss { x, terms } => {
            let xb = BigFloat::parse(x, digits).ok_or_else(|| usage(format!("cannot parse x = {x}")))?;
            let g = gauss_identity_check(&xb, *terms, digits)?;
            match cli.format {
                Format::Json => print_json(&json!({
                    "x": x,
                    "terms": terms,
                    "lhs": g.lhs.to_sci_string(17),
                    "rhs": g.rhs.to_sci_string(30),
                    "abs_diff": g.abs_diff.to_sci_string(3),
                })),
                _ => {
                    println!("lhs      {}", g.lhs.to_sci_string(17));
                    println!("rhs      {}", g.rhs.to_sci_string(30));
                    println!("|diff|   {}", g.abs_diff.to_sci_string(3));
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if k == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .expect("global pool set once");
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(EXIT_FAILED),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
