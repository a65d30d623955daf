//! Command-line interface.
//!
//! Exit codes: 0 for success or an affirmative verdict, 1 for a negative
//! verdict, 2 for invalid input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::barcode::Barcode;
use crate::complex::{SimplicialComplex, VertexFunction};
use crate::distance::{bottleneck_distance, subbarcode_distance};
use crate::induced::{induced_sub_matching, induced_super_matching};
use crate::interval::format_endpoint;
use crate::matcher::max_subbarcode_matching;
use crate::matching::Matching;
use crate::persistence::{factorization_bundle, image_persistence, sublevel_persistence};
use crate::svg::render_svg;

#[derive(Debug, Parser)]
#[command(name = "subbar", version, about = "Sub-barcodes, image persistence and induced matchings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Common {
    /// Largest homology dimension (default: complex dimension, or every
    /// dimension for barcode inputs)
    #[arg(long = "dim", global = true)]
    pub dim: Option<usize>,
    /// Output file (default: standard output)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    Sub,
    Bottleneck,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Barcode of the sublevel filtration of a vertex function
    Persist {
        complex: PathBuf,
        values: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Image barcode of the inclusion of the upper into the lower sublevel filtration
    Image {
        complex: PathBuf,
        upper: PathBuf,
        lower: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether barcode A is a sub-barcode of barcode B
    Check {
        a: PathBuf,
        b: PathBuf,
        /// Print the matching as `<left-id> -> <right-id>` lines
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print a maximum sub-barcode matching from A into B
    Match {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Sub-barcode or bottleneck distance from A to B
    Dist {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "sub")]
        metric: Metric,
        /// Print the realizing matching
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Try to falsify that u is a reparameterization of a function bounded by g and l
    Hypothesis {
        complex: PathBuf,
        u: PathBuf,
        g: PathBuf,
        l: PathBuf,
        /// Complex carrying u, if different from the bounded complex
        #[arg(long)]
        u_complex: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Induced matching of the factorization for g >= f >= l
    Induced {
        complex: PathBuf,
        g: PathBuf,
        f: PathBuf,
        l: PathBuf,
        /// Print the induced super-barcode matching instead
        #[arg(long = "super")]
        super_: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Render barcodes as SVG
    Plot {
        #[arg(required = true)]
        barcodes: Vec<PathBuf>,
        /// Matching between the first two barcodes, drawn as dashed connectors
        #[arg(long = "match")]
        matching: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

/// Errors reported with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: crate::error::Error,
    },
    #[error(transparent)]
    Compute(#[from] crate::error::Error),
}

/// Text to emit and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn parse_with<T>(
    path: &Path,
    parse: impl Fn(&str) -> crate::error::Result<T>,
) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_owned(),
        source,
    })
}

fn load_barcode(path: &Path, dim: Option<usize>) -> Result<Barcode, CliError> {
    let b = parse_with(path, Barcode::parse)?;
    Ok(match dim {
        Some(k) => b.filter(|bar| bar.dim <= k),
        None => b,
    })
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    parse_with(path, SimplicialComplex::parse)
}

fn load_values(path: &Path) -> Result<VertexFunction, CliError> {
    parse_with(path, VertexFunction::parse)
}

fn pair_lines(m: &Matching) -> String {
    m.bar_pairs()
        .map(|(x, y)| format!("{} {} {} -> {} {}\n", x.dim, x.id, x.interval, y.id, y.interval))
        .collect()
}

/// Runs one command and returns its output without writing it.
pub fn execute(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Persist {
            complex,
            values,
            common,
        } => {
            let k = load_complex(complex)?;
            let f = load_values(values)?;
            let b = sublevel_persistence(&k, &f, common.dim.unwrap_or(k.dimension()))?;
            Ok(Output::ok(b.to_text()))
        }
        Command::Image {
            complex,
            upper,
            lower,
            common,
        } => {
            let k = load_complex(complex)?;
            let g = load_values(upper)?;
            let l = load_values(lower)?;
            let b = image_persistence(&k, &g, &l, common.dim.unwrap_or(k.dimension()))?;
            Ok(Output::ok(b.to_text()))
        }
        Command::Check {
            a,
            b,
            witness,
            common,
        } => {
            let a = Arc::new(load_barcode(a, common.dim)?);
            let b = Arc::new(load_barcode(b, common.dim)?);
            let m = max_subbarcode_matching(&a, &b);
            let total = m.is_total_on_left();
            let mut text = String::new();
            if total {
                text.push_str("SUB-BARCODE\n");
            } else {
                text.push_str("NOT-SUB-BARCODE\n");
                let ids: Vec<String> = m.unmatched_left().iter().map(|id| id.to_string()).collect();
                text.push_str(&format!("unmatched: {}\n", ids.join(" ")));
            }
            if *witness {
                text.push_str(&m.to_text());
            }
            Ok(Output {
                text,
                code: if total { 0 } else { 1 },
            })
        }
        Command::Match { a, b, common } => {
            let a = Arc::new(load_barcode(a, common.dim)?);
            let b = Arc::new(load_barcode(b, common.dim)?);
            Ok(Output::ok(max_subbarcode_matching(&a, &b).to_text()))
        }
        Command::Dist {
            a,
            b,
            metric,
            witness,
            common,
        } => {
            let a = load_barcode(a, common.dim)?;
            let b = load_barcode(b, common.dim)?;
            let r = match metric {
                Metric::Sub => subbarcode_distance(&a, &b),
                Metric::Bottleneck => bottleneck_distance(&a, &b),
            };
            let mut text = format!("{}\n", format_endpoint(r.value));
            if *witness {
                text.push_str(&r.witness.to_text());
            }
            Ok(Output::ok(text))
        }
        Command::Hypothesis {
            complex,
            u,
            g,
            l,
            u_complex,
            common,
        } => {
            let k = load_complex(complex)?;
            let ku = match u_complex {
                Some(path) => load_complex(path)?,
                None => k.clone(),
            };
            let g = load_values(g)?;
            let l = load_values(l)?;
            let u = load_values(u)?;
            let dim = common.dim.unwrap_or(k.dimension());
            let bounded = image_persistence(&k, &g, &l, dim)?;
            let target = sublevel_persistence(&ku, &u, dim)?;
            let m = max_subbarcode_matching(&Arc::new(bounded), &Arc::new(target));
            if m.is_total_on_left() {
                Ok(Output::ok(
                    "CONSISTENT\nthe image barcode is a sub-barcode of the barcode of u; \
                     this does not prove the hypothesis\n"
                        .to_string(),
                ))
            } else {
                let mut text = String::from("FALSIFIED\nimage bars without a containing bar of u:\n");
                for id in m.unmatched_left() {
                    let bar = m.left().get(id).expect("unmatched ids come from the barcode");
                    text.push_str(&format!("{} {}\n", bar.dim, bar.interval));
                }
                Ok(Output { text, code: 1 })
            }
        }
        Command::Induced {
            complex,
            g,
            f,
            l,
            super_,
            common,
        } => {
            let k = load_complex(complex)?;
            let (g, f, l) = (load_values(g)?, load_values(f)?, load_values(l)?);
            let bundle = factorization_bundle(&k, &g, &f, &l, common.dim.unwrap_or(k.dimension()))?;
            let m = if *super_ {
                induced_super_matching(&bundle)?
            } else {
                induced_sub_matching(&bundle)?
            };
            Ok(Output::ok(pair_lines(&m)))
        }
        Command::Plot {
            barcodes,
            matching,
            common,
        } => {
            let loaded = barcodes
                .iter()
                .map(|p| load_barcode(p, common.dim).map(Arc::new))
                .collect::<Result<Vec<_>, _>>()?;
            let names: Vec<String> = barcodes
                .iter()
                .map(|p| {
                    p.file_stem()
                        .map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned())
                })
                .collect();
            let m = match (matching, loaded.as_slice()) {
                (Some(path), [left, right, ..]) => {
                    let (left, right) = (left.clone(), right.clone());
                    Some(parse_with(path, move |text| {
                        Matching::parse(text, left.clone(), right.clone())
                    })?)
                }
                (Some(path), _) => {
                    return Err(CliError::Input {
                        path: path.clone(),
                        source: crate::error::Error::Parse {
                            line: 0,
                            message: "a matching needs two barcodes".into(),
                        },
                    })
                }
                (None, _) => None,
            };
            let pairs: Vec<(&str, &Barcode)> = names
                .iter()
                .zip(&loaded)
                .map(|(n, b)| (n.as_str(), b.as_ref()))
                .collect();
            Ok(Output::ok(render_svg(&pairs, m.as_ref())))
        }
    }
}

fn out_path(command: &Command) -> Option<&Path> {
    let common = match command {
        Command::Persist { common, .. }
        | Command::Image { common, .. }
        | Command::Check { common, .. }
        | Command::Match { common, .. }
        | Command::Dist { common, .. }
        | Command::Hypothesis { common, .. }
        | Command::Induced { common, .. }
        | Command::Plot { common, .. } => common,
    };
    common.out.as_deref()
}

/// Parses `args`, runs the command, writes its output and returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let output = match execute(&cli.command) {
        Ok(output) => output,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let written = match out_path(&cli.command) {
        Some(path) => fs::write(path, &output.text).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        }),
        None => std::io::stdout()
            .write_all(output.text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    };
    match written {
        Ok(()) => output.code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
