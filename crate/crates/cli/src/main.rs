//! `hilbchern`: compute Chern classes and characters on `Hilbⁿ(ℂ²)`, inspect
//! characters and Schur functions, and run the verification suites.
//!
//! Exit codes: 0 on success (or all checks passing), 1 when a verification
//! check fails, 2 on usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hilbert_chern::characters::character_table;
use hilbert_chern::hilbert::{
    ch_taut_direct, equivariant_chern_char, equivariant_chern_class, equivariant_total_chern_char,
    equivariant_total_chern_class, series_c_taut, series_c_tangent, series_ch_taut,
    series_ch_tangent,
};
use hilbert_chern::verify::{run_suite, Suite, VerifyConfig};
use hilbert_chern::{mn_character, schur_in_p, Partition, SymFunc, Truncation, WeightAssignment};

#[derive(Parser)]
#[command(name = "hilbchern", version, about = "Chern classes on the Hilbert scheme of points of the plane")]
struct Cli {
    /// Worker threads for parallel sums (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute c_k / ch_k (or the total class when --k is omitted).
    Compute {
        quantity: Quantity,
        bundle: Bundle,
        /// Number of points.
        #[arg(long)]
        n: usize,
        /// Cohomological degree; omitted means the sum over all k.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Series)]
        method: Method,
        /// JSON weight table `{"2,1": [..], ...}` for the equivariant method.
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Truncation of the generating series (default: n).
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        suite: SuiteArg,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Character value χ^λ_μ, or the whole row of χ^λ when --mu is omitted.
    Char {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Schur function s_λ in the power-sum basis.
    Schur {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Chern,
    Ch,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Bundle {
    Tangent,
    Taut,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Equivariant,
    Series,
    Direct,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Identities,
    Crosscheck,
    Decomposition,
    Properties,
    Performance,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Crosscheck => Suite::Crosscheck,
            SuiteArg::Decomposition => Suite::Decomposition,
            SuiteArg::Properties => Suite::Properties,
            SuiteArg::Performance => Suite::Performance,
            SuiteArg::All => Suite::All,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Compute {
            quantity,
            bundle,
            n,
            k,
            method,
            weights,
            max_weight,
            format,
        } => {
            let f = compute(quantity, bundle, n, k, method, weights, max_weight)?;
            print_symfunc(&f, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            max_n,
            max_k,
            format,
        } => verify(suite.into(), max_n, max_k, format),
        Command::Char { lambda, mu, format } => {
            char_command(&lambda, mu.as_deref(), format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Schur { lambda, format } => {
            let lambda = parse_partition(&lambda)?;
            print_symfunc(&schur_in_p(&lambda), format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn compute(
    quantity: Quantity,
    bundle: Bundle,
    n: usize,
    k: Option<usize>,
    method: Method,
    weights_file: Option<PathBuf>,
    max_weight: Option<usize>,
) -> Result<SymFunc> {
    if weights_file.is_some() && method != Method::Equivariant {
        bail!("--weights is only used with --method equivariant");
    }
    let select = |total: SymFunc| match k {
        Some(k) => total.degree_component(k),
        None => total,
    };
    match method {
        Method::Equivariant => {
            let weights = match (bundle, weights_file) {
                (_, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    WeightAssignment::from_json_str(&text)
                        .with_context(|| format!("weight table {}", path.display()))?
                }
                (Bundle::Tangent, None) => WeightAssignment::tangent(n),
                (Bundle::Taut, None) => {
                    bail!("the equivariant method for the tautological bundle needs --weights")
                }
            };
            let f = match (quantity, k) {
                (Quantity::Chern, Some(k)) => equivariant_chern_class(n, k, &weights)?,
                (Quantity::Ch, Some(k)) => equivariant_chern_char(n, k, &weights)?,
                (Quantity::Chern, None) if weights.n() == n => equivariant_total_chern_class(&weights)?,
                (Quantity::Ch, None) if weights.n() == n => equivariant_total_chern_char(&weights)?,
                (_, None) => bail!("weight table is for n = {}, requested n = {n}", weights.n()),
            };
            Ok(f)
        }
        Method::Series => {
            let max_weight = max_weight.unwrap_or(n);
            if max_weight < n {
                bail!("--max-weight {max_weight} is below the requested weight {n}");
            }
            let t = Truncation::new(max_weight);
            let series = match (quantity, bundle) {
                (Quantity::Chern, Bundle::Tangent) => series_c_tangent(t),
                (Quantity::Ch, Bundle::Tangent) => series_ch_tangent(t),
                (Quantity::Chern, Bundle::Taut) => series_c_taut(t),
                (Quantity::Ch, Bundle::Taut) => series_ch_taut(t),
            };
            Ok(select(series.weight_component(n)))
        }
        Method::Direct => match (quantity, bundle) {
            (Quantity::Ch, Bundle::Taut) => Ok(select(ch_taut_direct(n))),
            _ => bail!("the direct method is only available for `ch taut`"),
        },
    }
}

fn verify(suite: Suite, max_n: Option<usize>, max_k: Option<usize>, format: Format) -> Result<ExitCode> {
    let mut config = VerifyConfig::default();
    if let Some(max_n) = max_n {
        if max_n == 0 {
            bail!("--max-n must be at least 1");
        }
        config.set_max_n(max_n);
    }
    if let Some(max_k) = max_k {
        if max_k == 0 {
            bail!("--max-k must be at least 1");
        }
        config.set_max_k(max_k);
    }
    let report = run_suite(suite, &config);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text => {
            for r in &report.results {
                let status = if r.pass { "PASS" } else { "FAIL" };
                println!("{status} {}: {}", r.name, r.detail);
            }
            let passed = report.results.iter().filter(|r| r.pass).count();
            println!("{}: {passed}/{} passed", report.suite, report.results.len());
        }
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn char_command(lambda: &str, mu: Option<&str>, format: Format) -> Result<()> {
    let lambda = parse_partition(lambda)?;
    match mu {
        Some(mu) => {
            let mu = parse_partition(mu)?;
            let value = mn_character(&lambda, &mu)?;
            match format {
                Format::Text => println!("{value}"),
                Format::Json => println!(
                    "{}",
                    json!({"lambda": lambda.parts(), "mu": mu.parts(), "value": value})
                ),
            }
        }
        None => {
            let table = character_table(lambda.weight());
            let row = table.row(&lambda);
            match format {
                Format::Text => {
                    for (mu, value) in table.partitions().iter().zip(row) {
                        println!("{mu}: {value}");
                    }
                }
                Format::Json => {
                    let values: Vec<_> = table
                        .partitions()
                        .iter()
                        .zip(row)
                        .map(|(mu, value)| json!({"mu": mu.parts(), "value": value}))
                        .collect();
                    println!("{}", json!({"lambda": lambda.parts(), "values": values}));
                }
            }
        }
    }
    Ok(())
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse::<Partition>()
        .with_context(|| format!("invalid partition {s:?}"))
}

fn print_symfunc(f: &SymFunc, format: Format) {
    match format {
        Format::Text => println!("{f}"),
        Format::Json => println!("{}", f.to_json()),
    }
}
