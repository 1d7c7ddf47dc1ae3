//! Command-line surface for the spanning-set engine: condition checks,
//! enumeration, leading terms, relation verification, factorization search,
//! and the semi-infinite tail machinery, all with machine-readable output.
//!
//! Exit codes: 0 when the requested verdict was computed, 1 when a
//! verification subcommand found failures, 2 on usage or grammar errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use d4span::conditions::{self, HighestWeight};
use d4span::enumeration::{self, CountingError};
use d4span::limits::SemiInfiniteMonomial;
use d4span::monomial::Monomial;
use d4span::relations;

#[derive(Parser)]
#[command(
    name = "d4span",
    version,
    about = "Spanning-set combinatorics for D4(1) standard modules"
)]
struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check difference conditions, and initial conditions when a weight is
    /// given; at least one of --level and --weight is required.
    Check {
        /// Level for the difference conditions; defaults to the level of the weight.
        #[arg(long)]
        level: Option<u32>,
        /// Weight multiplicities k0,k1,k2,k3,k4; enables the IC check.
        #[arg(long, required_unless_present = "level")]
        weight: Option<HighestWeight>,
        monomial: String,
    },
    /// Enumerate the admissible monomials with degrees in [-D, -1].
    Enumerate {
        #[arg(long)]
        weight: HighestWeight,
        /// Lowest factor degree to consider, as a positive D.
        #[arg(long = "max-degree")]
        max_degree: u32,
        /// Print only the number of admissible monomials.
        #[arg(long, conflicts_with = "by_degree")]
        count_only: bool,
        /// Print the graded table of counts per total degree instead.
        #[arg(long)]
        by_degree: bool,
        /// Output format; csv applies to the graded table only.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Enumerate or count the leading terms at a level.
    LeadingTerms {
        #[arg(long)]
        level: u32,
        /// Print the count with the closed-form and binomial cross-checks.
        #[arg(long)]
        count_only: bool,
        /// Window j >= 1 to realize the leading terms at.
        #[arg(long, default_value_t = 1)]
        window: i64,
    },
    /// Re-derive every relation at a level and verify its minimal monomial.
    VerifyRelations {
        #[arg(long)]
        level: u32,
    },
    /// Verify the initial-condition relations for a weight.
    VerifyIc {
        #[arg(long)]
        weight: HighestWeight,
    },
    /// Search for a factorization into parts satisfying DC per level.
    Factorize {
        /// Comma-separated levels, one per factor.
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<u32>,
        monomial: String,
    },
    /// Weyl dimension of V_k with the closed-form and leading-term
    /// cross-checks.
    WeylDim {
        #[arg(long)]
        level: u32,
    },
    /// Truncate a semi-infinite monomial and check DC on its tail.
    Tail {
        #[arg(long)]
        weight: HighestWeight,
        /// Number of tail blocks in the printed truncation.
        #[arg(long)]
        blocks: u32,
        /// Finite head, in the monomial grammar.
        #[arg(long, default_value = "")]
        head: String,
        /// Tail start index t: blocks sit at shifts 2t+2, 2t+4, ...
        #[arg(long, default_value_t = 0)]
        t: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut output = String::new();
    let code = match run(&cli.command, &mut output) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    let result = match &cli.out {
        Some(path) => std::fs::write(path, output).map_err(|e| e.to_string()),
        None => {
            print!("{output}");
            Ok(())
        }
    };
    if let Err(message) = result {
        eprintln!("error: {message}");
        return ExitCode::from(2);
    }
    code
}

fn parse_monomial(text: &str) -> Result<Monomial, String> {
    text.parse::<Monomial>()
        .map_err(|e| format!("monomial {e}"))
}

fn run(command: &Command, out: &mut String) -> Result<ExitCode, String> {
    match command {
        Command::Check {
            level,
            weight,
            monomial,
        } => {
            let m = parse_monomial(monomial)?;
            let k = match (level, weight) {
                (Some(k), _) => *k,
                (None, Some(w)) => w.level(),
                (None, None) => unreachable!("clap requires one of them"),
            };
            let mut verdict = conditions::satisfies_dc(&m, k);
            if let Some(w) = weight {
                let ic = conditions::satisfies_ic(&m, w).map_err(|e| e.to_string())?;
                verdict = verdict.and(ic);
            }
            writeln!(out, "{}", serde_json::to_string(&verdict).unwrap()).unwrap();
            Ok(ExitCode::SUCCESS)
        }

        Command::Enumerate {
            weight,
            max_degree,
            count_only,
            by_degree,
            format,
        } => {
            if *format == Format::Csv && !by_degree {
                return Err("--format csv applies only to --by-degree output".into());
            }
            if *by_degree {
                let table = enumeration::graded_dimensions(weight, *max_degree);
                match format {
                    Format::Csv => out.push_str(&table.to_csv()),
                    Format::Json => {
                        writeln!(out, "{}", serde_json::to_string(&table).unwrap()).unwrap()
                    }
                }
            } else {
                let monomials = enumeration::enumerate_admissible(weight, *max_degree);
                if *count_only {
                    writeln!(out, "{}", json!({ "count": monomials.len().to_string() })).unwrap();
                } else {
                    for m in monomials {
                        let line = json!({
                            "monomial": m.to_string(),
                            "total_degree": m.total_degree(),
                            "length": m.len(),
                        });
                        writeln!(out, "{line}").unwrap();
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::LeadingTerms {
            level,
            count_only,
            window,
        } => {
            if *level < 1 {
                return Err("--level must be at least 1".into());
            }
            if *window < 1 {
                return Err("--window must be at least 1".into());
            }
            if *count_only {
                match enumeration::count_leading_terms(*level) {
                    Ok(counts) => {
                        writeln!(out, "{}", serde_json::to_string(&counts).unwrap()).unwrap();
                        Ok(ExitCode::SUCCESS)
                    }
                    Err(CountingError::LeadingTerms {
                        count,
                        formula,
                        binomial_sum,
                        ..
                    }) => {
                        let line = json!({
                            "count": count.to_string(),
                            "formula": formula.to_string(),
                            "binomial_sum": binomial_sum.to_string(),
                            "consistent": false,
                        });
                        writeln!(out, "{line}").unwrap();
                        Ok(ExitCode::FAILURE)
                    }
                    Err(other) => Err(other.to_string()),
                }
            } else {
                for lt in enumeration::leading_terms(*level, *window) {
                    writeln!(out, "{}", lt.monomial).unwrap();
                }
                Ok(ExitCode::SUCCESS)
            }
        }

        Command::VerifyRelations { level } => {
            if *level < 1 {
                return Err("--level must be at least 1".into());
            }
            let report = relations::verify_leading_terms(*level);
            for record in &report.records {
                writeln!(out, "{}", serde_json::to_string(record).unwrap()).unwrap();
            }
            let failures = report.failures().len();
            let summary = json!({
                "level": level,
                "instances": report.records.len(),
                "distinct_leading_terms": report.distinct_verified(),
                "failures": failures,
            });
            writeln!(out, "{summary}").unwrap();
            Ok(if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }

        Command::VerifyIc { weight } => {
            let report = relations::verify_ic_leading_terms(weight);
            for record in &report.records {
                writeln!(out, "{}", serde_json::to_string(record).unwrap()).unwrap();
            }
            let failures = report.failures().len();
            let summary = json!({
                "weight": weight,
                "instances": report.records.len(),
                "failures": failures,
            });
            writeln!(out, "{summary}").unwrap();
            Ok(if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }

        Command::Factorize { levels, monomial } => {
            let m = parse_monomial(monomial)?;
            let line = match enumeration::find_factorization(&m, levels) {
                Some(parts) => json!({
                    "found": true,
                    "factors": parts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                }),
                None => json!({ "found": false, "factors": null }),
            };
            writeln!(out, "{line}").unwrap();
            Ok(ExitCode::SUCCESS)
        }

        Command::WeylDim { level } => match enumeration::weyl_dim_vk(*level) {
            Ok(dimension) => {
                // Leading terms come in k+2 families of this dimension.
                let counts =
                    enumeration::count_leading_terms(*level).map_err(|e| e.to_string())?;
                let expected = &dimension * (*level as u64 + 2);
                let consistent = counts.count == expected;
                let line = json!({
                    "level": level,
                    "dimension": dimension.to_string(),
                    "leading_terms": counts.count.to_string(),
                    "consistent": consistent,
                });
                writeln!(out, "{line}").unwrap();
                Ok(if consistent {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::FAILURE
                })
            }
            Err(CountingError::WeylDimension {
                product,
                closed_form,
                ..
            }) => {
                let line = json!({
                    "level": level,
                    "product": product.to_string(),
                    "closed_form": closed_form.to_string(),
                    "consistent": false,
                });
                writeln!(out, "{line}").unwrap();
                Ok(ExitCode::FAILURE)
            }
            Err(other) => Err(other.to_string()),
        },

        Command::Tail {
            weight,
            blocks,
            head,
            t,
        } => {
            let head = parse_monomial(head)?;
            let s = SemiInfiniteMonomial::new(head, *t, *weight);
            let line = json!({
                "head": s.head.to_string(),
                "tail_index": s.tail_index,
                "weight": s.weight,
                "blocks": blocks,
                "truncation": s.truncate(*blocks).to_string(),
                "stable_depth": s.stable_depth(),
                "semi_dc": s.satisfies_dc(),
            });
            writeln!(out, "{line}").unwrap();
            Ok(ExitCode::SUCCESS)
        }
    }
}
