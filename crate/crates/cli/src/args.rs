//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "gyrokit", version, about = "Checks and constructions on gyrogroups")]
pub struct CommandSpec {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Verify G1 to G4 on a model.
    CheckAxioms,
    /// Verify the derived gyrogroup identities on a model.
    CheckIdentities,
    /// Print gyrations: the non-identity table of a finite model, or
    /// gyr[x,y] (and gyr[x,y](z)) for the given elements.
    GyrTable,
    /// Generate the invariant subgyrogroup of a symmetric set.
    Generate,
    /// Decide whether a set is a subgyrogroup and an L-subgyrogroup.
    SubgyroCheck,
    /// Certify a neighbourhood chain at the double or triple level.
    Admissible,
    /// Decide whether a subgyrogroup is neutral with respect to a base.
    Neutral,
    /// Build the dyadic family of a chain and audit its prenorm.
    Prenorm,
    /// Tabulate and audit the quotient metric of a chain.
    Quotient,
    /// Check that A⊕U meets every coset (--set A --set U --set H).
    Saturate,
    /// Check the coset-space inclusion kernel (--set U --set W --set H).
    CharInclusion,
    /// Merge JSON reports into one summary.
    Report {
        /// JSON files produced by other subcommands, or bare reports.
        #[arg(required = false)]
        files: Vec<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckAxioms => "check-axioms",
            Command::CheckIdentities => "check-identities",
            Command::GyrTable => "gyr-table",
            Command::Generate => "generate",
            Command::SubgyroCheck => "subgyro-check",
            Command::Admissible => "admissible",
            Command::Neutral => "neutral",
            Command::Prenorm => "prenorm",
            Command::Quotient => "quotient",
            Command::Saturate => "saturate",
            Command::CharInclusion => "char-inclusion",
            Command::Report { .. } => "report",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct Options {
    /// Model file.
    #[arg(long, global = true, value_name = "PATH")]
    pub model: Option<PathBuf>,
    /// Chain file. Its "model" path is resolved against the chain's directory
    /// unless --model is given.
    #[arg(long, global = true, value_name = "PATH")]
    pub chain: Option<PathBuf>,
    /// Base family file.
    #[arg(long, global = true, value_name = "PATH")]
    pub base: Option<PathBuf>,
    /// A set of element indices "i,j,k"; radial commands take a radius.
    /// Repeatable.
    #[arg(long = "set", global = true, value_name = "SET", allow_hyphen_values = true)]
    pub sets: Vec<String>,
    /// An element: an index or label (finite), "re,im" (Möbius) or "x,y,z"
    /// (Einstein). Repeatable.
    #[arg(long = "element", global = true, value_name = "ELEM", allow_hyphen_values = true)]
    pub elements: Vec<String>,
    /// Depth of the dyadic family.
    #[arg(long, global = true)]
    pub depth: Option<u32>,
    /// Exhaustive strategy (finite models only; the default for them).
    #[arg(long, global = true)]
    pub exhaustive: bool,
    /// Sample count for analytic models.
    #[arg(long, global = true)]
    pub samples: Option<u64>,
    /// Sampling seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Tolerance for floating-point models, as a rational literal.
    #[arg(long, global = true, value_name = "REAL")]
    pub tol: Option<String>,
    /// Output format. Defaults to the extension of --out (.csv, .txt), else
    /// json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the artifact here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Chain inclusion level: double, triple or admissible.
    #[arg(long, global = true, default_value = "triple")]
    pub level: String,
    /// Ground pseudometric for ball comparisons: two_sided or abs_printed.
    #[arg(long, global = true, default_value = "two_sided")]
    pub variant: String,
    /// Prenorm construction: infimum or regularized.
    #[arg(long, global = true, default_value = "infimum")]
    pub construction: String,
    /// Ball radius for quotient ball comparisons, as a rational literal.
    #[arg(long, global = true, value_name = "REAL")]
    pub eps: Option<String>,
}

pub const DEFAULT_SAMPLES: u64 = 10_000;
pub const DEFAULT_SEED: u64 = 0;
