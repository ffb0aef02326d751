//! `hamconn`: generate the counterexample digraphs, check properties of a
//! digraph, and run the claim verification suite.
//!
//! Exit codes: 0 success, 1 a checked property is violated, 2 usage or
//! parse error.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hamconn::conditions::{
    check_ghouila_houri, check_meyniel, check_nash_williams, check_overbeck_larisch, check_woodall,
    condition_m, condition_n, is_m_strongly_connected, is_meyniel_set, ConditionVerdict,
};
use hamconn::connectivity::{is_k_strong, is_strong, is_unilateral, vertex_connectivity};
use hamconn::constructions::{darbinyan_counterexample, expand_at, reduce_pair, thomassen_refutation};
use hamconn::format::{parse_edge_list, render_dot, render_edge_list};
use hamconn::harness::{verify_suite, ClaimId, VerifyConfig};
use hamconn::solver::Solver;
use hamconn::{Digraph, Error, VertexSet};

#[derive(Parser)]
#[command(name = "hamconn", version, about = "Hamiltonicity and connectivity tools for digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated digraph.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, value_enum, default_value_t = OutputFormat::Edgelist, global = true)]
        format: OutputFormat,
    },
    /// Check properties of a digraph read from a file or standard input.
    ///
    /// Checks: strong, k-strong K, connectivity, unilateral, hamiltonian,
    /// ham-path U V, ham-connected, weak-ham-connected, longest-cycle,
    /// cycle-through V,V,..., nash-williams, ghouila-houri, woodall,
    /// meyniel, overbeck-larisch, condition-M Z0, condition-N,
    /// meyniel-set V,V,..., m-strong V,V,...
    Check {
        #[arg(long, short)]
        input: Option<PathBuf>,
        #[arg(required = true, num_args = 1..)]
        checks: Vec<String>,
    },
    /// Run the claim verification suite.
    Verify {
        /// Claim ids, or `all`.
        #[arg(required = true, num_args = 1..)]
        claims: Vec<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random instances per claim, overriding the defaults.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Subcommand)]
enum Family {
    /// The 2-strong non-Hamiltonian digraph of order N >= 8.
    Darbinyan { n: usize },
    /// The 3-strong digraph of order N >= 9 that is not strongly
    /// Hamiltonian-connected.
    Thomassen { n: usize },
    /// Merge U and V of the input digraph into one vertex.
    Reduce {
        #[arg(long, short)]
        input: Option<PathBuf>,
        u: usize,
        v: usize,
    },
    /// Split vertex Z of the input digraph in two.
    Expand {
        #[arg(long, short)]
        input: Option<PathBuf>,
        z: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Jsonl,
}

/// Text for standard output and whether every checked property held.
struct Report {
    text: String,
    holds: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, holds: true }
    }
}

/// A usage, input or parse error.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<Digraph, Failure> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure(format!("stdin: {e}")))?;
            s
        }
    };
    Ok(parse_edge_list(&text)?)
}

fn gen(family: Family, format: OutputFormat) -> Result<Report, Failure> {
    let (d, name) = match family {
        Family::Darbinyan { n } => (darbinyan_counterexample(n)?, format!("darbinyan_{n}")),
        Family::Thomassen { n } => (thomassen_refutation(n)?.digraph, format!("thomassen_{n}")),
        Family::Reduce { input, u, v } => {
            (reduce_pair(&read_input(input.as_ref())?, u, v)?.digraph, format!("reduce_{u}_{v}"))
        }
        Family::Expand { input, z } => {
            (expand_at(&read_input(input.as_ref())?, z)?.digraph, format!("expand_{z}"))
        }
    };
    Ok(Report::ok(match format {
        OutputFormat::Edgelist => render_edge_list(&d),
        OutputFormat::Dot => render_dot(&d, &name),
    }))
}

fn usage(message: impl Into<String>) -> Failure {
    Failure(message.into())
}

fn next_arg<'a>(tokens: &mut impl Iterator<Item = &'a String>, check: &str) -> Result<&'a str, Failure> {
    tokens
        .next()
        .map(String::as_str)
        .ok_or_else(|| usage(format!("`{check}` needs an argument")))
}

fn number(token: &str) -> Result<usize, Failure> {
    token
        .parse()
        .map_err(|_| usage(format!("expected a number, found `{token}`")))
}

fn vertex_set(token: &str, d: &Digraph) -> Result<VertexSet, Failure> {
    let set = token
        .split(',')
        .map(number)
        .collect::<Result<VertexSet, _>>()?;
    d.check_set(set)?;
    Ok(set)
}

fn verdict_line(name: &str, verdict: ConditionVerdict) -> (bool, String) {
    match verdict.violator {
        None => (true, format!("{name}: yes")),
        Some(v) => (false, format!("{name}: no ({v})")),
    }
}

fn yes_no(name: &str, holds: bool) -> (bool, String) {
    (holds, format!("{name}: {}", if holds { "yes" } else { "no" }))
}

/// One line per check, in the order given.
fn check(d: &Digraph, tokens: &[String]) -> Result<Report, Failure> {
    let solver = Solver::default();
    let mut out = String::new();
    let mut all_hold = true;
    let mut tokens = tokens.iter();
    while let Some(check) = tokens.next() {
        let (holds, line) = match check.as_str() {
            "strong" => yes_no("strong", is_strong(d)),
            "k-strong" => {
                let k = number(next_arg(&mut tokens, check)?)?;
                yes_no(&format!("{k}-strong"), is_k_strong(d, k)?)
            }
            "connectivity" => (true, format!("connectivity: {}", vertex_connectivity(d))),
            "unilateral" => yes_no("unilateral", is_unilateral(d)),
            "hamiltonian" => match solver.hamiltonian_cycle(d).witness {
                Some(c) => (true, format!("hamiltonian: yes {c}")),
                None => (false, "hamiltonian: no".to_string()),
            },
            "ham-path" => {
                let u = number(next_arg(&mut tokens, check)?)?;
                let v = number(next_arg(&mut tokens, check)?)?;
                match solver.hamiltonian_path_between(d, u, v)?.witness {
                    Some(p) => (true, format!("ham-path {u} {v}: yes {p}")),
                    None => (false, format!("ham-path {u} {v}: no")),
                }
            }
            "ham-connected" | "weak-ham-connected" => {
                let result = if check == "ham-connected" {
                    solver.strongly_hamiltonian_connected(d)
                } else {
                    solver.weakly_hamiltonian_connected(d)
                };
                match result.failing_pair {
                    None => (true, format!("{check}: yes")),
                    Some((x, y)) => (false, format!("{check}: no (pair {x} {y})")),
                }
            }
            "longest-cycle" => match solver.longest_cycle(d) {
                Some(c) => (true, format!("longest-cycle: {} {c}", c.len())),
                None => (true, "longest-cycle: 0".to_string()),
            },
            "cycle-through" => {
                let set = vertex_set(next_arg(&mut tokens, check)?, d)?;
                match solver.cycle_through(d, set)? {
                    Some(c) => (true, format!("cycle-through {set}: yes {c}")),
                    None => (false, format!("cycle-through {set}: no")),
                }
            }
            "nash-williams" => verdict_line(check, check_nash_williams(d)),
            "ghouila-houri" => verdict_line(check, check_ghouila_houri(d)),
            "woodall" => verdict_line(check, check_woodall(d)),
            "meyniel" => verdict_line(check, check_meyniel(d)),
            "overbeck-larisch" => verdict_line(check, check_overbeck_larisch(d)),
            "condition-M" | "condition-m" => {
                let z0 = number(next_arg(&mut tokens, check)?)?;
                verdict_line(&format!("condition-M {z0}"), condition_m(d, z0)?)
            }
            "condition-N" | "condition-n" => verdict_line("condition-N", condition_n(d)),
            "meyniel-set" => {
                let set = vertex_set(next_arg(&mut tokens, check)?, d)?;
                verdict_line(&format!("meyniel-set {set}"), is_meyniel_set(d, set)?)
            }
            "m-strong" => {
                let set = vertex_set(next_arg(&mut tokens, check)?, d)?;
                yes_no(&format!("m-strong {set}"), is_m_strongly_connected(d, set)?)
            }
            other => return Err(usage(format!("unknown check `{other}`"))),
        };
        all_hold &= holds;
        writeln!(out, "{line}").expect("String write");
    }
    Ok(Report {
        text: out,
        holds: all_hold,
    })
}

fn verify(
    claims: &[String],
    config: VerifyConfig,
    format: ReportFormat,
) -> Result<Report, Failure> {
    let ids = if claims.len() == 1 && claims[0].eq_ignore_ascii_case("all") {
        ClaimId::ALL.to_vec()
    } else {
        claims
            .iter()
            .map(|c| c.parse::<ClaimId>())
            .collect::<Result<Vec<_>, _>>()?
    };
    let report = verify_suite(&ids, &config);
    let text = match format {
        ReportFormat::Text => report.summary(),
        ReportFormat::Jsonl => report.to_jsonl(),
    };
    Ok(Report {
        text,
        holds: report.must_pass_ok(),
    })
}

fn run(cli: Cli) -> Result<Report, Failure> {
    match cli.command {
        Command::Gen { family, format } => gen(family, format),
        Command::Check { input, checks } => check(&read_input(input.as_ref())?, &checks),
        Command::Verify {
            claims,
            seed,
            samples,
            max_order,
            format,
        } => verify(
            &claims,
            VerifyConfig {
                seed,
                samples,
                max_order,
            },
            format,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(if report.holds { 0 } else { 1 })
        }
        Err(Failure(message)) => {
            eprintln!("hamconn: {message}");
            ExitCode::from(2)
        }
    }
}
