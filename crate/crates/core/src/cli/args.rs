use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::recipe::Sign;

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.parse().map_err(|_| format!("expected +1 or -1, found '{s}'"))
}

#[derive(Parser, Debug)]
#[command(name = "interlacing", version, about = "Weight-interlacing strings, distinguished pairs and their arithmetic ledger")]
pub struct Cli {
    /// Worker threads for exhaustive commands (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every interlacing string of rank n in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Plain)]
        format: ListFormat,
    },
    /// Full record for one string (or one per place) or a pair of weights.
    Analyze(AnalyzeArgs),
    /// Wall graph of rank n as DOT (or JSON).
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true, default_value = "+1")]
        eps_finite: Sign,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Fibers of the dist map and their block-move connectivity.
    Fibers {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Wall-crossing report for a tuple of strings, one per place.
    Walls {
        #[arg(long)]
        strings: String,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true, default_value = "+1")]
        eps_finite: Sign,
    },
    /// Representation-theoretic oracles and cross-checks.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Run every exhaustive invariant up to the given rank.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// A string such as ABA, or comma-separated strings for several places.
    #[arg(long, conflicts_with_all = ["a", "b"])]
    pub string: Option<String>,
    /// Rank-n infinitesimal character, comma-separated, e.g. 3.5,1.5,-0.5,-2.5.
    #[arg(long, allow_hyphen_values = true, requires = "b")]
    pub a: Option<String>,
    /// Rank-(n-1) infinitesimal character.
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    pub b: Option<String>,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true, default_value = "+1")]
    pub eps_finite: Sign,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    /// Also write the tableau(x) of the record as SVG.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// U(n) -> U(n-1) branching by interlacing, Gelfand-Tsetlin and Weyl character.
    Branching {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        mu: String,
    },
    /// Blattner multiplicity for U(n) x U(1) inside U(n,1).
    Blattner {
        #[arg(long)]
        k: usize,
        /// Rank-(n+1) string; its canonical realization supplies a and b.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        string: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "b")]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "a")]
        b: Option<String>,
    },
    /// Definite-signature endpoints against the compact branching law.
    Compact {
        #[arg(long)]
        n: usize,
    },
    /// The U(n) ⊂ U(n,1) example against Blattner's formula.
    #[command(name = "u-n-1")]
    UN1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Coherent degrees along the diagonal-minus-corner family.
    Harris {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}
