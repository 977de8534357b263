//! Command-line front end for the subword-mobius library.
//!
//! Results go to stdout, diagnostics (including per-check wall times for
//! `verify`) to stderr. Exit codes: 0 success, 1 validation error, 2
//! verification failure or engine disagreement.

mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use subword_mobius::chebyshev::{chebyshev_closed_form, chebyshev_recurrence, Polynomial};
use subword_mobius::counting::{chain_t_closed, count_m_bruteforce, count_m_recurrence, WordType};
use subword_mobius::mobius::{mobius_hall, mobius_recursive};
use subword_mobius::verify::{run_verification, CheckKind, VerificationReport};
use subword_mobius::{parse_word, GroundPoset, Interval};

use output::{
    to_json, ChainTOutput, ChebyshevOutput, CountMOutput, IntervalOutput, MobiusOutput,
};

const THREADS_ENV: &str = "SUBWORD_MOBIUS_THREADS";

#[derive(Parser)]
#[command(
    name = "subword-mobius",
    version,
    about = "Möbius function of the generalized subword order, generalized Chebyshev polynomials, and the identities between them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Möbius value of the interval [lower, upper]
    Mobius {
        /// Number of minimal letters of the ground poset
        #[arg(long)]
        s: u32,
        /// Lower word, e.g. `a1` or `e` for the empty word
        #[arg(long)]
        lower: String,
        /// Upper word, e.g. `c,c`
        #[arg(long)]
        upper: String,
        #[arg(long, value_enum, default_value_t = MobiusMethod::Both)]
        method: MobiusMethod,
    },
    /// Enumerate the interval [lower, upper] with its cover edges
    Interval {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        lower: String,
        #[arg(long)]
        upper: String,
    },
    /// Coefficients of the generalized Chebyshev polynomial T_k
    Chebyshev {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ChebyshevEngine::Recurrence)]
        engine: ChebyshevEngine,
    },
    /// M((m,p),(n,q)): words of type (n,q) above the canonical word of type (m,p)
    CountM {
        #[arg(long)]
        s: u32,
        /// Length of the lower type
        #[arg(long)]
        m: usize,
        /// Number of c letters in the lower type
        #[arg(long)]
        p: usize,
        /// Length of the upper type
        #[arg(long)]
        n: usize,
        /// Number of c letters in the upper type
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value_t = CountEngine::Both)]
        engine: CountEngine,
    },
    /// Single-level chain number T(k, n)
    ChainT {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Run the identity verification sweeps
    Verify {
        #[arg(long)]
        s: u32,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Comma-separated check names (default: all applicable)
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// CSV grid of mu(a_1^m, c^n) against Chebyshev coefficients
    Table {
        #[arg(long)]
        s: u32,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MobiusMethod {
    Recursive,
    Hall,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChebyshevEngine {
    Recurrence,
    Closed,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountEngine {
    Brute,
    Recurrence,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if let Err(message) = configure_thread_pool() {
        eprintln!("error: {message}");
        return ExitCode::from(1);
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

/// Apply SUBWORD_MOBIUS_THREADS to the global worker pool; unset means
/// rayon's default (available parallelism).
fn configure_thread_pool() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|err| format!("failed to size the worker pool: {err}"))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Mobius {
            s,
            lower,
            upper,
            method,
        } => run_mobius(s, &lower, &upper, method),
        Command::Interval { s, lower, upper } => run_interval(s, &lower, &upper),
        Command::Chebyshev { s, k, engine } => run_chebyshev(s, k, engine),
        Command::CountM {
            s,
            m,
            p,
            n,
            q,
            engine,
        } => run_count_m(s, m, p, n, q, engine),
        Command::ChainT { s, k, n } => run_chain_t(s, k, n),
        Command::Verify {
            s,
            max_n,
            checks,
            format,
        } => run_verify(s, max_n, checks.as_deref(), format),
        Command::Table { s, max_n } => run_table(s, max_n),
    }
}

fn ground_poset(s: u32) -> Result<GroundPoset, String> {
    GroundPoset::new(s).map_err(|err| err.to_string())
}

fn run_mobius(s: u32, lower: &str, upper: &str, method: MobiusMethod) -> Result<ExitCode, String> {
    let poset = ground_poset(s)?;
    let lower = parse_word(lower, s).map_err(|err| err.to_string())?;
    let upper = parse_word(upper, s).map_err(|err| err.to_string())?;

    let (mu, methods_agree) = match method {
        MobiusMethod::Recursive => (
            mobius_recursive(&lower, &upper, &poset).map_err(|err| err.to_string())?,
            None,
        ),
        MobiusMethod::Hall => (
            mobius_hall(&lower, &upper, &poset).map_err(|err| err.to_string())?,
            None,
        ),
        MobiusMethod::Both => {
            let recursive =
                mobius_recursive(&lower, &upper, &poset).map_err(|err| err.to_string())?;
            let hall = mobius_hall(&lower, &upper, &poset).map_err(|err| err.to_string())?;
            let agree = recursive == hall;
            (recursive, Some(agree))
        }
    };
    let disagree = methods_agree == Some(false);
    let out = MobiusOutput {
        s: s.to_string(),
        lower: lower.to_string(),
        upper: upper.to_string(),
        mu: mu.to_string(),
        methods_agree,
    };
    println!("{}", to_json(&out)?);
    Ok(exit_code(disagree))
}

fn run_interval(s: u32, lower: &str, upper: &str) -> Result<ExitCode, String> {
    let poset = ground_poset(s)?;
    let lower = parse_word(lower, s).map_err(|err| err.to_string())?;
    let upper = parse_word(upper, s).map_err(|err| err.to_string())?;
    let interval = Interval::build(&lower, &upper, &poset).map_err(|err| err.to_string())?;
    let out = IntervalOutput {
        lower: lower.to_string(),
        upper: upper.to_string(),
        s: s.to_string(),
        elements: interval.elements().iter().map(|w| w.to_string()).collect(),
        edges: interval
            .cover_edges()
            .into_iter()
            .map(|(i, j)| [i, j])
            .collect(),
    };
    println!("{}", to_json(&out)?);
    Ok(ExitCode::SUCCESS)
}

fn run_chebyshev(s: u32, k: usize, engine: ChebyshevEngine) -> Result<ExitCode, String> {
    let compute_recurrence = || chebyshev_recurrence(s, k).map_err(|err| err.to_string());
    let compute_closed = || chebyshev_closed_form(s, k).map_err(|err| err.to_string());
    let (polynomial, engines_agree) = match engine {
        ChebyshevEngine::Recurrence => (compute_recurrence()?, None),
        ChebyshevEngine::Closed => (compute_closed()?, None),
        ChebyshevEngine::Both => {
            let recurrence = compute_recurrence()?;
            let closed = compute_closed()?;
            let agree = recurrence == closed;
            (recurrence, Some(agree))
        }
    };
    let disagree = engines_agree == Some(false);
    let out = ChebyshevOutput {
        s: s.to_string(),
        k: k.to_string(),
        coefficients: padded_coefficients(&polynomial, k),
        engines_agree,
    };
    println!("{}", to_json(&out)?);
    Ok(exit_code(disagree))
}

/// Ascending coefficients c_0..c_k, padded with zeros so the shape is always
/// k+1 entries even for the degenerate s = 1 polynomials.
fn padded_coefficients(polynomial: &Polynomial, k: usize) -> Vec<String> {
    (0..=k)
        .map(|degree| polynomial.coefficient(degree).to_string())
        .collect()
}

fn run_count_m(
    s: u32,
    m: usize,
    p: usize,
    n: usize,
    q: usize,
    engine: CountEngine,
) -> Result<ExitCode, String> {
    let poset = ground_poset(s)?;
    let lower = WordType::new(m, p).map_err(|err| err.to_string())?;
    let upper = WordType::new(n, q).map_err(|err| err.to_string())?;
    let (value, engines_agree) = match engine {
        CountEngine::Brute => (count_m_bruteforce(&poset, lower, upper), None),
        CountEngine::Recurrence => (count_m_recurrence(&poset, lower, upper), None),
        CountEngine::Both => {
            let brute = count_m_bruteforce(&poset, lower, upper);
            let recurrence = count_m_recurrence(&poset, lower, upper);
            let agree = brute == recurrence;
            (brute, Some(agree))
        }
    };
    let disagree = engines_agree == Some(false);
    let out = CountMOutput {
        m: value.to_string(),
        engines_agree,
    };
    println!("{}", to_json(&out)?);
    Ok(exit_code(disagree))
}

fn run_chain_t(s: u32, k: usize, n: usize) -> Result<ExitCode, String> {
    let poset = ground_poset(s)?;
    let out = ChainTOutput {
        t: chain_t_closed(&poset, k, n).to_string(),
    };
    println!("{}", to_json(&out)?);
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    s: u32,
    max_n: usize,
    checks: Option<&[String]>,
    format: Format,
) -> Result<ExitCode, String> {
    let poset = ground_poset(s)?;
    let selection: Option<Vec<CheckKind>> = match checks {
        None => None,
        Some(names) => Some(
            names
                .iter()
                .map(|name| {
                    CheckKind::from_name(name).ok_or_else(|| {
                        format!(
                            "unknown check `{name}`; valid checks: {}",
                            CheckKind::all()
                                .iter()
                                .map(|k| k.name())
                                .collect::<Vec<_>>()
                                .join(", ")
                        )
                    })
                })
                .collect::<Result<_, _>>()?,
        ),
    };
    let report = run_verification(&poset, max_n, selection.as_deref())
        .map_err(|err| err.to_string())?;
    for check in &report.checks {
        eprintln!(
            "# {}: {} instances in {} ms",
            check.name,
            check.instances,
            check.wall.as_millis()
        );
    }
    match format {
        Format::Json => println!("{}", to_json(&report)?),
        Format::Text => print!("{}", render_text(&report)),
    }
    Ok(exit_code(!report.passed))
}

fn render_text(report: &VerificationReport) -> String {
    use std::fmt::Write;

    let mut out = String::new();
    for check in &report.checks {
        let verdict = if check.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(
            out,
            "check {}: {} instances, {}",
            check.name, check.instances, verdict
        );
        for failure in &check.failures {
            let _ = writeln!(
                out,
                "  at {}: expected {}, got {}",
                failure.parameters, failure.expected, failure.actual
            );
        }
    }
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "result: {verdict} (s={}, max_n={})",
        report.s, report.max_n
    );
    out
}

fn run_table(s: u32, max_n: usize) -> Result<ExitCode, String> {
    let poset = ground_poset(s)?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["m", "n", "mu", "chebyshev_coeff", "match"])
        .map_err(|err| err.to_string())?;
    let mut all_match = true;
    for m in 0..=max_n {
        for n in m..=max_n {
            let lower = subword_mobius::Word::repeat(subword_mobius::Letter::A(1), m);
            let upper = subword_mobius::Word::c_power(n);
            let mu = mobius_recursive(&lower, &upper, &poset).map_err(|err| err.to_string())?;
            let coeff = chebyshev_recurrence(s, m + n)
                .map_err(|err| err.to_string())?
                .coefficient(n - m);
            let matches = mu == coeff;
            all_match &= matches;
            writer
                .write_record([
                    m.to_string(),
                    n.to_string(),
                    mu.to_string(),
                    coeff.to_string(),
                    matches.to_string(),
                ])
                .map_err(|err| err.to_string())?;
        }
    }
    let bytes = writer
        .into_inner()
        .map_err(|err| format!("csv assembly failed: {err}"))?;
    print!(
        "{}",
        String::from_utf8(bytes).map_err(|err| format!("csv not utf-8: {err}"))?
    );
    Ok(exit_code(!all_match))
}

fn exit_code(verification_failed: bool) -> ExitCode {
    if verification_failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}
