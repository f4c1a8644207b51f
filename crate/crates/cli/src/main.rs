use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use expansive_core::bounds::best_bound_report;
use expansive_core::dpoly::{
    d_polynomial, pair_product_polynomial, resultant_pair_product, term_count,
};
use expansive_core::enumerate::{enumerate_expansive, EnumerationSpec};
use expansive_core::expansivity::{
    certified_gap, check_d_conditions, check_schur_cohn, DMatrixSpec, DSign, Strategy,
};
use expansive_core::oracle::{find_roots_numeric, numeric_gap};
use expansive_core::poly::{parse_coefficient_list, parse_rational};
use expansive_core::{Error, IntPolynomial};

use expansive_cli::bench::bench_growth;
use expansive_cli::report;

/// Exact-arithmetic tests for integer polynomials whose roots must all lie
/// outside the unit circle.
#[derive(Parser)]
#[command(name = "expansive", version, about)]
struct Cli {
    /// Coefficient order of polynomial arguments.
    #[arg(long, global = true, value_enum, default_value_t = Order::Asc)]
    order: Order,

    /// Output format (csv applies to `search` and `bench`).
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    Asc,
    Desc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    /// Determinant conditions.
    D,
    /// Schur-Cohn chain.
    Schur,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Full,
    Reduced,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether every root lies strictly outside the unit circle.
    Check {
        /// Coefficients, e.g. "3,0,-1".
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Full)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = EngineArg::D)]
        engine: EngineArg,
    },
    /// Lower bounds on the expansivity gap, optionally certified/numeric.
    Gap {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
        /// Also run the exact bisection certificate.
        #[arg(long)]
        certify: bool,
        /// Bisection tolerance (rational, e.g. 1/1000).
        #[arg(long, default_value = "1/1000")]
        tol: String,
        /// Also report the floating-point gap.
        #[arg(long)]
        oracle: bool,
    },
    /// Symbolic determinant polynomials and expansion term counts.
    Dpoly {
        /// Coefficients; may be omitted with --term-count.
        #[arg(allow_hyphen_values = true)]
        coeffs: Option<String>,
        /// Determinant index k (1..=degree).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = SignArg::Minus)]
        sign: SignArg,
        /// Halved-exponent polynomial with roots a_i a_j (i < j).
        #[arg(long)]
        pair_product: bool,
        /// Resultant-style polynomial with roots a_i a_j (all pairs).
        #[arg(long)]
        resultant: bool,
        /// Count expansion terms for this degree instead.
        #[arg(long)]
        term_count: Option<usize>,
    },
    /// Numeric roots from the oracle.
    Roots {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Census of expansive polynomials with fixed degree and constant term.
    Search {
        #[arg(long)]
        degree: usize,
        /// Constant term a_0 (positive integer).
        #[arg(long)]
        a0: String,
        /// Extra cap on |coefficient| during the search.
        #[arg(long)]
        height_cap: Option<String>,
        /// Refuse boxes larger than this many candidates.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Coefficient-growth benchmark: Schur chain vs fraction-free
    /// determinants.
    Bench {
        #[arg(long)]
        degree: usize,
        /// Coefficient magnitude bound (decimal integer, e.g. 4294967296).
        #[arg(long)]
        height: String,
        #[arg(long, default_value_t = 5)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_poly(input: &str, order: Order) -> Result<IntPolynomial, Error> {
    let mut coeffs = parse_coefficient_list(input)?;
    if order == Order::Desc {
        coeffs.reverse();
    }
    IntPolynomial::new(coeffs)
}

fn parse_bigint(input: &str, what: &str) -> Result<BigInt, Error> {
    BigInt::from_str(input.trim()).map_err(|e| Error::Parse {
        input: input.to_string(),
        reason: format!("bad {what}: {e}"),
    })
}

fn unsupported_csv(command: &str) -> Error {
    Error::Parse {
        input: format!("--format csv with `{command}`"),
        reason: "csv output is defined for `search` and `bench` only".to_string(),
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    match &cli.command {
        Command::Check {
            coeffs,
            strategy,
            engine,
        } => {
            let f = parse_poly(coeffs, cli.order)?;
            let verdict = match engine {
                EngineArg::Schur => check_schur_cohn(&f)?,
                EngineArg::D => {
                    let strategy = match strategy {
                        StrategyArg::Full => Strategy::Full,
                        StrategyArg::Reduced => Strategy::Reduced,
                    };
                    check_d_conditions(&f, strategy)?
                }
            };
            Ok(match cli.format {
                Format::Json => report::render_json(&report::check_json(&f, &verdict)),
                Format::Table => report::check_table(&f, &verdict),
                Format::Csv => return Err(unsupported_csv("check")),
            })
        }
        Command::Gap {
            coeffs,
            certify,
            tol,
            oracle,
        } => {
            let f = parse_poly(coeffs, cli.order)?;
            let gap_report = best_bound_report(&f)?;
            let certified = if *certify {
                let tolerance = parse_rational(tol)?;
                let s_low = certified_gap(&f, &tolerance)?;
                Some((tolerance, s_low))
            } else {
                None
            };
            let numeric = if *oracle {
                Some(numeric_gap(&f)?)
            } else {
                None
            };
            let out = report::GapOutput {
                report: gap_report,
                certified,
                numeric_gap: numeric,
            };
            Ok(match cli.format {
                Format::Json => report::render_json(&report::gap_json(&f, &out)),
                Format::Table => report::gap_table(&f, &out),
                Format::Csv => return Err(unsupported_csv("gap")),
            })
        }
        Command::Dpoly {
            coeffs,
            k,
            sign,
            pair_product,
            resultant,
            term_count: term_count_n,
        } => {
            if let Some(n) = term_count_n {
                let counts = term_count(*n)?;
                return Ok(match cli.format {
                    Format::Json => report::render_json(&report::term_count_json(&counts)),
                    Format::Table => report::term_count_table(&counts),
                    Format::Csv => return Err(unsupported_csv("dpoly")),
                });
            }
            let coeffs = coeffs.as_ref().ok_or_else(|| Error::Parse {
                input: String::new(),
                reason: "dpoly needs a coefficient list (or --term-count N)".to_string(),
            })?;
            let f = parse_poly(coeffs, cli.order)?;
            let n = f.degree();
            let (kind, poly) = if *pair_product {
                (report::DpolyKind::PairProduct, pair_product_polynomial(&f)?)
            } else if *resultant {
                (report::DpolyKind::Resultant, resultant_pair_product(&f)?)
            } else {
                let k = k.ok_or_else(|| Error::Parse {
                    input: String::new(),
                    reason: "pass --k (or --pair-product/--resultant/--term-count)".to_string(),
                })?;
                let sign = match sign {
                    SignArg::Plus => DSign::Plus,
                    SignArg::Minus => DSign::Minus,
                };
                let spec = DMatrixSpec::new(k, sign, n)?;
                (
                    report::DpolyKind::Single {
                        k,
                        sign: sign.symbol(),
                    },
                    d_polynomial(&f, &spec)?,
                )
            };
            // Coefficient vectors are JSON arrays in either format.
            Ok(match cli.format {
                Format::Json | Format::Table => {
                    report::render_json(&report::dpoly_json(&f, &kind, &poly))
                }
                Format::Csv => return Err(unsupported_csv("dpoly")),
            })
        }
        Command::Roots { coeffs } => {
            let f = parse_poly(coeffs, cli.order)?;
            let roots = find_roots_numeric(&f)?;
            Ok(match cli.format {
                Format::Json => report::render_json(&report::roots_json(&f, &roots)),
                Format::Table => report::roots_table(&f, &roots),
                Format::Csv => return Err(unsupported_csv("roots")),
            })
        }
        Command::Search {
            degree,
            a0,
            height_cap,
            cap,
        } => {
            let a0 = parse_bigint(a0, "constant term")?;
            let mut spec = EnumerationSpec::new(*degree, a0.clone())?;
            if let Some(h) = height_cap {
                spec = spec.with_height_cap(parse_bigint(h, "height cap")?);
            }
            if let Some(c) = cap {
                spec = spec.with_candidate_cap(*c);
            }
            let census = enumerate_expansive(&spec)?;
            Ok(match cli.format {
                Format::Json => report::render_json(&report::search_json(&census, *degree, &a0)),
                Format::Table => report::search_table(&census, *degree, &a0),
                Format::Csv => report::search_csv(&census, *degree),
            })
        }
        Command::Bench {
            degree,
            height,
            trials,
            seed,
        } => {
            let height = parse_bigint(height, "height")?;
            let profile = bench_growth(*degree, &height, *trials, *seed)?;
            Ok(match cli.format {
                Format::Json => report::render_json(&report::bench_json(&profile)),
                Format::Table => report::bench_table(&profile),
                Format::Csv => report::bench_csv(&profile),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are not errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(output) => {
            let ok = match &cli.out {
                Some(path) => std::fs::write(path, output.as_bytes()).is_ok(),
                None => std::io::stdout().write_all(output.as_bytes()).is_ok(),
            };
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: could not write output");
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 1 } else { 2 })
        }
    }
}
