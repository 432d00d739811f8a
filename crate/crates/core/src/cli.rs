//! Command-line front end. Exit status 0 means the query was answered
//! (even when a law fails), 1 a structural or parse error, 2 a usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{algebra_from_biposet, orders_from_algebra};
use crate::biposet::{EnvelopeKind, MixedLattice};
use crate::error::Error;
use crate::gen::{divisor_mixed_lattice, enumerate_mixed_lattices};
use crate::io::{dot, mla, mlx, report};
use crate::ratgroup::{check_group_laws, env_lower, env_upper, PosRational};

const EDGE_HELP: &str = "\
Diagram edge styles (dot):
  solid   cover pair of sleq that also satisfies leq
  dashed  cover pair of leq whose ends are unrelated under sleq
  dotted  cover pair of sleq that does not satisfy leq (never present when
          sleq implies leq)";

#[derive(Debug, Parser)]
#[command(name = "mixlat", version, about = "Finite mixed lattices", after_help = EDGE_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Algebra,
    Orders,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a structure and decide whether it is a mixed lattice
    Validate { file: PathBuf },
    /// Check every named law
    Laws {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check the algebra postulates and derived identities of a .mla file
    Axioms {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Convert between .mlx (two orders) and .mla (two operations)
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit the divisors of N with the usual order and divisibility
    Divisor {
        n: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit an order diagram in Graphviz format
    Dot {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check closure of a subset under the envelopes, or the induced structure
    Sublattice {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<String>,
        #[arg(long)]
        induced: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all labelled mixed lattices on n elements
    Enumerate {
        n: usize,
        #[arg(long)]
        summary_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Positive rationals with numeric order and divisibility
    Rat {
        #[command(subcommand)]
        op: RatCommand,
    },
}

#[derive(Debug, Subcommand)]
enum RatCommand {
    /// r ⩗ q, the least multiple of r that is at least q
    Upper { r: String, q: String },
    /// r ⩘ q, the greatest divisor of r that is at most q
    Lower { r: String, q: String },
    /// Spot-check the group laws on pseudorandom triples
    Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Command failure with its exit status.
struct Failure {
    status: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Input(_) | Error::TooLarge { .. } => 2,
            _ => 1,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

fn failure(status: i32, message: impl Into<String>) -> Failure {
    Failure {
        status,
        message: message.into(),
    }
}

type CmdResult = std::result::Result<i32, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| failure(1, format!("{}: {e}", path.display())))
}

fn read_mlx(path: &Path) -> std::result::Result<crate::biposet::FiniteBiPoset, Failure> {
    let text = read(path)?;
    mlx::read_mlx(&text).map_err(|e| failure(1, format!("{}: {e}", path.display())))
}

fn write_out(out: &mut dyn Write, output: Option<&Path>, text: &str) -> std::result::Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| failure(1, format!("{}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| failure(1, e.to_string())),
    }
}

fn print(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    write_out(out, None, text)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

fn rational(s: &str) -> std::result::Result<PosRational, Failure> {
    s.parse().map_err(|e: Error| failure(2, e.to_string()))
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if status == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return status;
        }
    };
    match dispatch(cli.command, out) {
        Ok(status) => status,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.status
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Validate { file } => {
            let b = read_mlx(&file)?;
            match b.envelope_tables().first_missing() {
                None => {
                    print(out, &format!("mixed lattice ({} elements)\n", b.len()))?;
                    Ok(0)
                }
                Some(m) => {
                    print(
                        out,
                        &format!(
                            "not a mixed lattice: {} envelope of ({}, {}) does not exist\n",
                            m.kind,
                            b.label(m.x),
                            b.label(m.y)
                        ),
                    )?;
                    Ok(1)
                }
            }
        }
        Command::Laws { file, json: as_json } => {
            let b = read_mlx(&file)?;
            let doc = report::laws_document(&b);
            let text = if as_json {
                json(&doc)
            } else {
                report::laws_text(&doc)
            };
            print(out, &text)?;
            Ok(if doc.mixed_lattice { 0 } else { 1 })
        }
        Command::Axioms { file, json: as_json } => {
            let text = read(&file)?;
            let a = mla::parse_mla(&text)
                .map_err(|e| failure(1, format!("{}: {e}", file.display())))?;
            let doc = report::axioms_document(&a);
            print(
                out,
                &if as_json {
                    json(&doc)
                } else {
                    report::axioms_text(&doc)
                },
            )?;
            Ok(0)
        }
        Command::Convert { file, to, output } => {
            let text = match to {
                Target::Algebra => {
                    let b = read_mlx(&file)?;
                    let a = algebra_from_biposet(&b).map_err(|e| match e {
                        Error::R0Fails { x, y } => failure(
                            1,
                            format!(
                                "refused: condition r0 fails; {} ≼ {} and {} ≤ {} but they differ",
                                b.label(y),
                                b.label(x),
                                b.label(x),
                                b.label(y)
                            ),
                        ),
                        Error::NotMixedLattice(m) => failure(
                            1,
                            format!(
                                "refused: {} envelope of ({}, {}) does not exist",
                                m.kind,
                                b.label(m.x),
                                b.label(m.y)
                            ),
                        ),
                        other => other.into(),
                    })?;
                    mla::emit_mla(&a)
                }
                Target::Orders => {
                    let text = read(&file)?;
                    let a = mla::parse_mla(&text)
                        .map_err(|e| failure(1, format!("{}: {e}", file.display())))?;
                    let b = orders_from_algebra(&a).map_err(|e| match e {
                        Error::AxiomFails { axiom, witness } => {
                            let names: Vec<&str> =
                                witness.iter().map(|&i| a.labels()[i].as_str()).collect();
                            failure(
                                1,
                                format!("refused: axiom {axiom} fails at ({})", names.join(", ")),
                            )
                        }
                        other => other.into(),
                    })?;
                    mlx::emit_mlx(&b)
                }
            };
            write_out(out, output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Divisor { n, output } => {
            let b = divisor_mixed_lattice(n)?;
            let text = format!("# divisors of {n}\n{}", mlx::emit_mlx(&b));
            write_out(out, output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Dot { file, output } => {
            let b = read_mlx(&file)?;
            write_out(out, output.as_deref(), &dot::emit_dot(&b))?;
            Ok(0)
        }
        Command::Sublattice {
            file,
            subset,
            induced,
            json: as_json,
        } => {
            let b = read_mlx(&file)?;
            let idx = b.indices_of(&subset)?;
            if induced {
                let s = b.induced_substructure(&idx)?;
                let missing = s.envelope_tables().first_missing();
                if as_json {
                    #[derive(Serialize)]
                    struct Induced {
                        mixed_lattice: bool,
                        missing_envelope: Option<report::LabelledMissing>,
                        structure: String,
                    }
                    print(
                        out,
                        &json(&Induced {
                            mixed_lattice: missing.is_none(),
                            missing_envelope: missing
                                .map(|m| report::LabelledMissing::new(&m, s.labels())),
                            structure: mlx::emit_mlx(&s),
                        }),
                    )?;
                } else {
                    match missing {
                        None => print(out, "induced structure is a mixed lattice\n")?,
                        Some(m) => print(
                            out,
                            &format!(
                                "induced structure is not a mixed lattice: {} envelope of ({}, {}) does not exist\n",
                                m.kind,
                                s.label(m.x),
                                s.label(m.y)
                            ),
                        )?,
                    }
                    print(out, &mlx::emit_mlx(&s))?;
                }
                return Ok(0);
            }
            let ml = MixedLattice::new(b.clone())?;
            let v = ml.is_mixed_sublattice(&idx)?;
            if as_json {
                #[derive(Serialize)]
                struct Closed {
                    closed: bool,
                    witness: Option<(String, String, EnvelopeKind, String)>,
                }
                print(
                    out,
                    &json(&Closed {
                        closed: v.closed,
                        witness: v.witness.as_ref().map(|w| {
                            (
                                b.label(w.x).to_string(),
                                b.label(w.y).to_string(),
                                w.kind,
                                b.label(w.value).to_string(),
                            )
                        }),
                    }),
                )?;
            } else {
                match &v.witness {
                    None => print(out, "closed\n")?,
                    Some(w) => {
                        let op = match w.kind {
                            EnvelopeKind::Upper => "⩗",
                            EnvelopeKind::Lower => "⩘",
                        };
                        print(
                            out,
                            &format!(
                                "not closed: {} {op} {} = {} lies outside the subset\n",
                                b.label(w.x),
                                b.label(w.y),
                                b.label(w.value)
                            ),
                        )?
                    }
                }
            }
            Ok(0)
        }
        Command::Enumerate {
            n,
            summary_only,
            json: as_json,
        } => {
            let e = enumerate_mixed_lattices(n)?;
            if as_json {
                #[derive(Serialize)]
                struct Doc {
                    summary: crate::gen::EnumerationSummary,
                    structures: Option<Vec<String>>,
                }
                let structures = (!summary_only)
                    .then(|| e.structures.iter().map(|m| mlx::emit_mlx(m.poset())).collect());
                print(
                    out,
                    &json(&Doc {
                        summary: e.summary,
                        structures,
                    }),
                )?;
            } else {
                print(out, &report::summary_text(&e.summary))?;
                if !summary_only {
                    for (k, m) in e.structures.iter().enumerate() {
                        print(out, &format!("\n# structure {}\n{}", k + 1, mlx::emit_mlx(m.poset())))?;
                    }
                }
            }
            Ok(0)
        }
        Command::Rat { op } => match op {
            RatCommand::Upper { r, q } => {
                print(out, &format!("{}\n", env_upper(&rational(&r)?, &rational(&q)?)))?;
                Ok(0)
            }
            RatCommand::Lower { r, q } => {
                print(out, &format!("{}\n", env_lower(&rational(&r)?, &rational(&q)?)))?;
                Ok(0)
            }
            RatCommand::Check {
                seed,
                count,
                bound,
                json: as_json,
            } => {
                let rep = check_group_laws(seed, count, bound)?;
                if as_json {
                    print(out, &json(&rep))?;
                } else {
                    print(
                        out,
                        &format!(
                            "samples: {}\nchecks: {}\nfailures: {}\n",
                            rep.samples, rep.checks, rep.failures
                        ),
                    )?;
                    if let Some(f) = &rep.first_failure {
                        print(
                            out,
                            &format!("first failure: {} at x={} y={} z={}\n", f.law, f.x, f.y, f.z),
                        )?;
                    }
                }
                Ok(0)
            }
        },
    }
}
