//! Command-line front end for satskein-core.

pub mod acceptance;
pub mod linkfile;
pub mod report;

use std::fmt::Write;

use anyhow::{anyhow, bail, Context, Result};
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use satskein_core::annulus::expand_ylambda;
use satskein_core::corpus;
use satskein_core::eigen::{c_of, check_distinct, EigenTable};
use satskein_core::partition::Partition;
use satskein_core::ring::Characteristic;
use satskein_core::skein::{self, EvalConfig};
use satskein_core::verify::{self, VerificationReport};

use linkfile::{load, LinkFile};

#[derive(Debug, Parser)]
#[command(name = "satskein", version, about = "Skein polynomials, annulus eigenvalues and mod-2 satellite checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a link invariant.
    Skein {
        #[arg(value_enum)]
        invariant: Invariant,
        /// JSON file or corpus:<name>.
        link: String,
        #[arg(long, default_value_t = 24)]
        max_crossings: usize,
    },
    /// Run a verification and print its report.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Annulus eigenvalues.
    Eigen {
        #[command(subcommand)]
        what: EigenCommand,
    },
    /// Longitude-meridian expansion of y_lambda, as JSON.
    Expand {
        #[arg(long)]
        partition: Partition,
        #[arg(long)]
        rho: Option<Partition>,
    },
    /// The bundled link diagrams.
    Corpus {
        #[command(subcommand)]
        what: CorpusCommand,
    },
    /// The acceptance suite.
    Acceptance {
        #[command(subcommand)]
        what: AcceptanceCommand,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Invariant {
    Homfly,
    Kauffman,
    Adjoint,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    Rudolph {
        link: String,
        #[arg(long, default_value_t = 24)]
        max_crossings: usize,
        #[arg(long)]
        json: bool,
    },
    Main {
        link: String,
        /// 1-based component carrying the partition.
        #[arg(long, default_value_t = 1)]
        component: usize,
        #[arg(long)]
        partition: Partition,
        #[arg(long, default_value_t = 100)]
        max_crossings: usize,
        #[arg(long)]
        json: bool,
    },
    EigenConsistency {
        #[arg(long, default_value_t = 3)]
        max_r: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum EigenCommand {
    Table {
        #[arg(long, default_value_t = 8)]
        max_size: u32,
        /// Reduce the entries mod 2.
        #[arg(long)]
        mod2: bool,
        #[arg(long)]
        check_distinct: bool,
    },
    C {
        #[arg(long)]
        partition: Partition,
        #[arg(long)]
        mod2: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    List,
    /// Print an entry as a link JSON file.
    Show { name: String },
}

#[derive(Debug, Subcommand)]
pub enum AcceptanceCommand {
    Run {
        /// Include the slow Hopf case of criterion 7.
        #[arg(long)]
        extended: bool,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let mut text = e.render().to_string();
            return if e.use_stderr() {
                if !text.contains("Usage:") {
                    text.push_str(&format!("\n{}\n", Cli::command().render_usage()));
                }
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = Output::default();
    match dispatch(cli.command, &mut out.stdout) {
        Ok(passed) => out.code = if passed { 0 } else { 1 },
        Err(e) => {
            out.code = 1;
            out.stderr = format!("error: {e:#}\n");
        }
    }
    out
}

fn chr(mod2: bool) -> Characteristic {
    if mod2 {
        Characteristic::Two
    } else {
        Characteristic::Zero
    }
}

fn print_report(out: &mut String, r: &VerificationReport, json: bool) -> bool {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report::verification(r)).unwrap()).unwrap();
    } else {
        writeln!(out, "{r}").unwrap();
    }
    r.passed()
}

/// Writes the command's output and says whether it passed.
fn dispatch(cmd: Command, out: &mut String) -> Result<bool> {
    match cmd {
        Command::Skein { invariant, link, max_crossings } => {
            let (_, d) = load(&link)?;
            let cfg = EvalConfig::with_budget(max_crossings);
            let value = match invariant {
                Invariant::Homfly => skein::homfly(&d, &cfg),
                Invariant::Kauffman => skein::kauffman(&d, &cfg),
                Invariant::Adjoint => skein::adjoint_homfly(&d, &cfg),
            }?;
            writeln!(out, "{value}")?;
            Ok(true)
        }
        Command::Verify { what } => match what {
            VerifyCommand::Rudolph { link, max_crossings, json } => {
                let (name, d) = load(&link)?;
                let r = verify::verify_rudolph(&d, &name, &EvalConfig::with_budget(max_crossings))?;
                Ok(print_report(out, &r, json))
            }
            VerifyCommand::Main { link, component, partition, max_crossings, json } => {
                let (name, d) = load(&link)?;
                let k = d.component_count();
                if component == 0 || component > k {
                    bail!("{name} has {k} components; --component {component} is out of range");
                }
                let mut lambdas = vec![Partition::from_parts(&[1]); k];
                lambdas[component - 1] = partition;
                let r = verify::verify_main(&d, &name, &lambdas, &EvalConfig::with_budget(max_crossings))?;
                Ok(print_report(out, &r, json))
            }
            VerifyCommand::EigenConsistency { max_r, json } => {
                let r = verify::eigen_consistency(max_r, &EvalConfig::default())?;
                Ok(print_report(out, &r, json))
            }
        },
        Command::Eigen { what } => match what {
            EigenCommand::Table { max_size, mod2, check_distinct: check } => {
                for (lambda, c) in EigenTable::new(max_size, chr(mod2)).iter() {
                    writeln!(out, "({lambda})\t{c}")?;
                }
                if !check {
                    return Ok(true);
                }
                let r = check_distinct(max_size);
                writeln!(out, "{}", serde_json::to_string(&report::distinct(&r))?)?;
                Ok(r.passed())
            }
            EigenCommand::C { partition, mod2 } => {
                writeln!(out, "{}", c_of(&partition, chr(mod2)))?;
                Ok(true)
            }
        },
        Command::Expand { partition, rho } => {
            let plan = expand_ylambda(&partition, rho.as_ref())?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report::plan(&plan))?)?;
            Ok(true)
        }
        Command::Corpus { what } => match what {
            CorpusCommand::List => {
                for (name, d) in corpus::all() {
                    let v = d.validate().with_context(|| format!("corpus entry {name}"))?;
                    writeln!(out, "{name}\tcomponents={}\tcrossings={}\twrithe={}", v.components, v.crossings, v.writhe)?;
                }
                Ok(true)
            }
            CorpusCommand::Show { name } => {
                let d = corpus::get(&name).ok_or_else(|| anyhow!("no corpus entry named {name:?}"))?;
                writeln!(out, "{}", LinkFile::from_diagram(&name, &d).to_json())?;
                Ok(true)
            }
        },
        Command::Acceptance { what: AcceptanceCommand::Run { extended } } => {
            let outcomes = acceptance::run(extended);
            out.push_str(&acceptance::render(&outcomes));
            Ok(outcomes.iter().all(|o| o.passed))
        }
    }
}
