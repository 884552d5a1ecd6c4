//! `blochcheck` — exact verification of the numerical geometry behind the
//! vanishing of the Albanese kernel for Inoue surfaces with `K² = 7`.
//!
//! Every subcommand defaults to the Inoue configuration (standard
//! quadrilateral frame, Inoue branch data, Klein four-group); flags
//! substitute user-supplied files. Exit codes: 0 success, 1 domain error,
//! 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod files;
mod render;

use commands::{GroupCriterionArgs, Report};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    /// Fixed-width ASCII tables.
    Table,
    /// One JSON document with keys command, inputs, results, trace.
    Machine,
}

#[derive(Parser)]
#[command(
    name = "blochcheck",
    version,
    about = "Exact arithmetic checks for Inoue surfaces as bidouble covers of the four-nodal cubic"
)]
struct Cli {
    /// Output mode.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Table)]
    output: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pairwise intersection numbers of the named curve classes.
    Intersections {
        /// Six-point configuration file (six lines of three rationals).
        #[arg(long)]
        points_file: Option<PathBuf>,
    },
    /// h⁰ of a divisor class by exact interpolation.
    Cohomology {
        /// The class as `a,m1,...,m6`.
        #[arg(long)]
        class: String,
        #[arg(long)]
        points_file: Option<PathBuf>,
    },
    /// Numerical invariants of the bidouble cover and its minimal model.
    CoverInvariants {
        #[arg(long)]
        points_file: Option<PathBuf>,
        /// Branch data file: six classes D1,D2,D3,L1,L2,L3, one per line.
        #[arg(long)]
        branch_file: Option<PathBuf>,
        /// Number of (−2)-curves among the branch components.
        #[arg(long, default_value_t = 4)]
        n2: u32,
    },
    /// The "enough automorphisms" ideal-membership criterion.
    GroupCriterion {
        /// Group file (order, multiplication table, named subgroups).
        #[arg(long)]
        group_file: Option<PathBuf>,
        /// Named subgroup playing the role of H (default: trivial).
        #[arg(long)]
        subgroup_h: Option<String>,
        /// Comma-separated names of the ideal generators (default: all
        /// named subgroups).
        #[arg(long)]
        ideal: Option<String>,
        /// Comma-separated true/false hypothesis flags, one per generator.
        #[arg(long)]
        flags: Option<String>,
    },
    /// Admissible isolated fixed-point counts for general-type quotients.
    InvolutionScan {
        /// K² of the minimal surface (p_g = q = 0 context).
        #[arg(long, default_value_t = 7)]
        k2: i64,
    },
    /// End-to-end verdict on the vanishing of the Albanese kernel.
    BlochVerdict {
        #[arg(long)]
        points_file: Option<PathBuf>,
        #[arg(long)]
        branch_file: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Intersections { points_file } => commands::intersections(points_file.as_deref()),
        Command::Cohomology { class, points_file } => {
            commands::cohomology(class, points_file.as_deref())
        }
        Command::CoverInvariants { points_file, branch_file, n2 } => {
            commands::cover_invariants_cmd(points_file.as_deref(), branch_file.as_deref(), *n2)
        }
        Command::GroupCriterion { group_file, subgroup_h, ideal, flags } => {
            commands::group_criterion(&GroupCriterionArgs {
                group_file: group_file.as_deref(),
                subgroup_h: subgroup_h.as_deref(),
                ideal: ideal.as_deref(),
                flags: flags.as_deref(),
            })
        }
        Command::InvolutionScan { k2 } => commands::involution_scan(*k2),
        Command::BlochVerdict { points_file, branch_file } => {
            commands::bloch_verdict(points_file.as_deref(), branch_file.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.output {
                OutputMode::Table => print!("{}", report.table),
                OutputMode::Machine => {
                    let doc = report.machine_doc();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&doc).expect("documents serialize")
                    );
                }
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
