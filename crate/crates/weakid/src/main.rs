use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, Context};

use clap::{Parser, Subcommand, ValueEnum};
use weakid::formats::{self, parse_array, parse_content, parse_tableau};
use weakid::selftest;
use weakid_core::bijection::{carray_to_dtableau, dtableau_to_carray};
use weakid_core::carray::{
    classify, enumerate_c_arrays, enumerate_normal, normalize, CArray, SignedCArray,
};
use weakid_core::grassmann::{verify_weak_identity, Candidate};
use weakid_core::series::{
    carini_drensky, dimension, gamma_coefficients, hilbert_by_dimensions, hilbert_by_tableaux,
};
use weakid_core::straighten::straighten;
use weakid_core::tableaux::{enumerate_ssyt, Convention, Shape};

#[derive(Parser)]
#[command(
    name = "weakid",
    version,
    about = "Straightening, tableau bijections and series for weak identities of M(1,1)"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between a c-array and its d-tableau (read from stdin).
    Convert {
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Bring an array (stdin) to a signed c-array.
    Normalize,
    /// Print raw, c_array or normal for an array (stdin).
    Classify,
    /// Rewrite an array (stdin) in the normal basis; prints JSON terms.
    Straighten,
    /// List c-arrays, normal c-arrays, or tableaux of a given content.
    Enumerate {
        /// Multiplicities, e.g. 1,1,2.
        #[arg(long)]
        content: String,
        /// Only normal c-arrays.
        #[arg(long)]
        normal: bool,
        /// List semistandard tableaux of this shape instead, e.g. 2,2.
        #[arg(long)]
        shape: Option<String>,
        /// Use strict rows and weak columns for --shape.
        #[arg(long)]
        french: bool,
    },
    /// Dimension of the component of a content.
    Dims {
        #[arg(long)]
        content: String,
    },
    /// Hilbert series in k variables, truncated at maxdeg.
    Hilbert {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        maxdeg: u32,
        #[arg(long, value_enum, default_value_t = Method::Cd)]
        method: Method,
    },
    /// Coefficients of z^0 .. z^(2M) of the proper codimension series.
    Codim {
        #[arg(long)]
        max_m: usize,
    },
    /// Evaluate a candidate identity on seeded random supertrace-zero matrices.
    Verify {
        #[arg(long, value_enum)]
        identity: Identity,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 16)]
        generators: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the acceptance checks and print a pass/fail table.
    Selftest {
        /// Run only this criterion (1..=10).
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Dtableau,
    Carray,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Cd,
    Tableaux,
    Dims,
}

#[derive(Clone, Copy, ValueEnum)]
enum Identity {
    C3,
    P,
    Commutator,
}

enum Failure {
    /// Malformed input; exit code 2.
    Input(anyhow::Error),
    /// A check ran and failed; exit code 1.
    Check,
}

impl<E: std::error::Error + Send + Sync + 'static> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

fn read_stdin() -> io::Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

fn parse_shape(s: &str) -> Result<Shape, Failure> {
    let parts = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .with_context(|| format!("bad part {t:?}"))
        })
        .collect::<anyhow::Result<Vec<_>>>()
        .map_err(Failure::Input)?;
    Ok(Shape::new(parts)?)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Convert {
            to: Target::Dtableau,
        } => {
            let array = parse_array(&read_stdin()?)?;
            let c = CArray::try_from(array)?;
            let t = carray_to_dtableau(&c);
            if json {
                writeln!(out, "{}", formats::tableau_to_json(&t))?;
            } else {
                write!(out, "{}", formats::tableau_to_text(&t))?;
            }
        }
        Command::Convert { to: Target::Carray } => {
            let t = parse_tableau(&read_stdin()?)?;
            let c = dtableau_to_carray(&t)?;
            if json {
                writeln!(out, "{}", formats::array_to_json(c.as_array()))?;
            } else {
                write!(out, "{}", formats::array_to_text(c.as_array()))?;
            }
        }
        Command::Normalize => {
            let array = parse_array(&read_stdin()?)?;
            let text = match (normalize(&array), json) {
                (SignedCArray::Zero, false) => "0\n".to_string(),
                (SignedCArray::Zero, true) => "{\"sign\":0}\n".to_string(),
                (SignedCArray::Term(sign, c), false) => {
                    format!("{sign}\n{}", formats::array_to_text(c.as_array()))
                }
                (SignedCArray::Term(sign, c), true) => {
                    let a = formats::array_json(c.as_array());
                    let value = serde_json::json!({"sign": sign.to_i64(), "top": a.top, "bottom": a.bottom});
                    format!("{value}\n")
                }
            };
            write!(out, "{text}")?;
        }
        Command::Classify => {
            let array = parse_array(&read_stdin()?)?;
            let class = classify(&array);
            if json {
                writeln!(out, "{}", serde_json::json!({ "class": class.to_string() }))?;
            } else {
                writeln!(out, "{class}")?;
            }
        }
        Command::Straighten => {
            let array = parse_array(&read_stdin()?)?;
            writeln!(out, "{}", formats::lincomb_to_json(&straighten(&array)))?;
        }
        Command::Enumerate {
            content,
            normal,
            shape,
            french,
        } => {
            let content = parse_content(&content)?;
            if let Some(shape) = shape {
                let shape = parse_shape(&shape)?;
                let conv = if french {
                    Convention::French
                } else {
                    Convention::English
                };
                let tableaux = enumerate_ssyt(&shape, &content, conv)?;
                if json {
                    let rows: Vec<_> = tableaux
                        .iter()
                        .map(|t| formats::TableauJson {
                            rows: t.rows().to_vec(),
                        })
                        .collect();
                    writeln!(out, "{}", serde_json::to_string(&rows)?)?;
                } else {
                    let blocks: Vec<String> =
                        tableaux.iter().map(formats::tableau_to_text).collect();
                    write!(out, "{}", blocks.join("\n"))?;
                }
            } else {
                let arrays = if normal {
                    enumerate_normal(&content)
                } else {
                    enumerate_c_arrays(&content)
                };
                if json {
                    writeln!(out, "{}", formats::arrays_to_json(&arrays))?;
                } else {
                    for a in &arrays {
                        writeln!(out, "{}", formats::array_to_inline(a.as_array()))?;
                    }
                }
            }
        }
        Command::Dims { content } => {
            let content = parse_content(&content)?;
            writeln!(out, "{}", dimension(&content))?;
        }
        Command::Hilbert { k, maxdeg, method } => {
            if k == 0 {
                return Err(Failure::Input(anyhow!("--k must be at least 1")));
            }
            if maxdeg > 8 {
                eprintln!("warning: maxdeg {maxdeg} > 8; tableau enumeration grows quickly");
            }
            let series = match method {
                Method::Cd => carini_drensky(k, maxdeg),
                Method::Tableaux => hilbert_by_tableaux(k, maxdeg),
                Method::Dims => hilbert_by_dimensions(k, maxdeg),
            };
            if json {
                let terms: Vec<_> = series
                    .terms()
                    .into_iter()
                    .map(|(e, c)| serde_json::json!({"exponents": e, "coeff": c.to_string()}))
                    .collect();
                writeln!(out, "{}", serde_json::Value::Array(terms))?;
            } else {
                writeln!(out, "{series}")?;
            }
        }
        Command::Codim { max_m } => {
            let coeffs: Vec<String> = gamma_coefficients(max_m)
                .iter()
                .map(|c| c.to_string())
                .collect();
            if json {
                writeln!(out, "{}", serde_json::json!(coeffs))?;
            } else {
                writeln!(out, "{}", coeffs.join(" "))?;
            }
        }
        Command::Verify {
            identity,
            samples,
            generators,
            seed,
        } => {
            let (name, candidate) = match identity {
                Identity::C3 => ("c3", Candidate::C3),
                Identity::P => ("p", Candidate::P),
                Identity::Commutator => ("commutator", Candidate::Commutator),
            };
            writeln!(
                out,
                "# identity {name}, samples {samples}, generators {generators}, seed {seed}"
            )?;
            let result = verify_weak_identity(&candidate, samples, generators, seed)?;
            match result.counterexample {
                None => writeln!(out, "vanished on all {} samples", result.samples_run)?,
                Some(cx) => {
                    writeln!(out, "nonzero at sample {}", cx.sample)?;
                    for (i, w) in cx.assignment.iter().enumerate() {
                        writeln!(out, "x{} = {w}", i + 1)?;
                    }
                    writeln!(out, "value = {}", cx.value)?;
                    return Err(Failure::Check);
                }
            }
        }
        Command::Selftest { criterion } => {
            let outcomes = match criterion {
                Some(id) => vec![selftest::run(id)
                    .ok_or_else(|| Failure::Input(anyhow!("no criterion {id}")))?],
                None => selftest::run_all(),
            };
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            writeln!(out, "{} passed, {failed} failed", outcomes.len() - failed)?;
            if failed > 0 {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(e))
            if e.downcast_ref::<io::Error>()
                .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(Failure::Input(e)) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            eprintln!("usage: weakid <COMMAND> [OPTIONS]; see weakid --help");
            ExitCode::from(2)
        }
    }
}
