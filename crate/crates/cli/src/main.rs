//! Command-line front end for the liekit library.

mod commands;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const SCHEMA: &str = "liekit/1";

#[derive(Parser, Debug)]
#[command(name = "liekit", version, about = "Exact computations for semisimple Lie algebras")]
pub struct Cli {
    /// Output format; `lyndon` and `words` select the BCH rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the property suites.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Cap on representation, orbit or algebra size, per command.
    #[arg(long, global = true)]
    pub max_dim: Option<u64>,
    /// Cap on series truncation order.
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Lyndon,
    Words,
}

#[derive(Args, Debug)]
pub struct TypeArg {
    /// Dynkin type such as A5, E8 or B3xG2.
    pub ty: String,
}

#[derive(Args, Debug)]
pub struct TypeWeight {
    /// Dynkin type such as A5, E8 or B3xG2.
    pub ty: String,
    /// Weight in fundamental-weight coordinates, e.g. 0,0,0,1.
    pub weight: String,
}

#[derive(Args, Debug)]
pub struct AlgebraArg {
    /// sl<n>, so<n>, sp<2n>, g2, heisenberg, abelian<n>, upper<n> or strict<n>.
    pub algebra: Option<String>,
    /// Structure-constant JSON file.
    #[arg(long, conflicts_with = "algebra")]
    pub file: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Roots in simple-root coordinates.
    Roots {
        #[command(flatten)]
        t: TypeArg,
        /// Print only the number of roots.
        #[arg(long)]
        count: bool,
        /// Only positive roots.
        #[arg(long)]
        positive: bool,
    },
    /// Exponents read from the height census.
    Exponents(TypeArg),
    /// Coxeter number and dual Coxeter number.
    Coxeter(TypeArg),
    /// Minuscule weights and the dimensions of their modules.
    Minuscule(TypeArg),
    /// The group P/Q.
    Pq(TypeArg),
    /// Order of the Weyl group.
    WeylOrder {
        #[command(flatten)]
        t: TypeArg,
        /// Also print the length generating function.
        #[arg(long)]
        poincare: bool,
    },
    /// Weyl orbit of a weight with the length of a minimal word.
    Orbit {
        #[command(flatten)]
        tw: TypeWeight,
        #[arg(long)]
        count: bool,
    },
    /// Weight multiplicities of an irreducible module.
    Char {
        #[command(flatten)]
        tw: TypeWeight,
        /// Only dominant weights.
        #[arg(long)]
        dominant: bool,
    },
    /// Dimension by the Weyl dimension formula.
    Dim(TypeWeight),
    /// Principal specialization of the character.
    Qdim(TypeWeight),
    /// Decomposition of a tensor product.
    Tensor {
        ty: String,
        left: String,
        right: String,
        /// Use the minuscule rule; `left` must be minuscule.
        #[arg(long)]
        minuscule: bool,
    },
    /// Complex, real or quaternionic type of an irreducible module.
    Fstype(TypeWeight),
    /// Baker-Campbell-Hausdorff series log(e^x e^y).
    Bch {
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// Print mu_m = m! times the degree m part.
        #[arg(long)]
        mu: bool,
    },
    /// Dimensions of the graded pieces of a free Lie algebra.
    Witt {
        #[arg(long, default_value_t = 2)]
        generators: usize,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        /// List the Lyndon bracket basis in the top degree.
        #[arg(long)]
        list: bool,
    },
    /// Solvable, nilpotent, semisimple and simple predicates.
    LieCheck(AlgebraArg),
    /// Chevalley-Eilenberg cohomology.
    Cohomology {
        #[command(flatten)]
        alg: AlgebraArg,
        /// trivial, adjoint, or v<n> for the sl2 irreducible of dimension n+1.
        #[arg(long, default_value = "trivial")]
        module: String,
        /// Module JSON file with matrices for the basis elements.
        #[arg(long)]
        module_file: Option<std::path::PathBuf>,
        /// Count invariant forms instead of computing cohomology.
        #[arg(long)]
        invariant: bool,
    },
    /// Schur polynomial or its dimension.
    Schur {
        partition: String,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        dim: bool,
    },
    /// Symmetric group characters.
    Frobenius {
        /// Partition labelling the irreducible.
        partition: Option<String>,
        /// Cycle type; all classes when omitted.
        #[arg(long)]
        cycle: Option<String>,
        /// Print the whole character table of S_n.
        #[arg(long, conflicts_with = "partition")]
        table: Option<usize>,
    },
    /// Gaussian binomial coefficient.
    Qbinom { n: usize, k: usize },
    /// Betti numbers of flag varieties.
    Betti {
        #[command(subcommand)]
        space: SpaceArg,
    },
    /// Real forms through Vogan diagrams.
    Realforms {
        /// Simple type whose real forms are listed.
        #[arg(long = "type", conflicts_with = "file")]
        ty: Option<String>,
        /// List every real form of the type.
        #[arg(long)]
        list: bool,
        /// Vogan diagram JSON file to classify.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
        /// Apply a flip at this black vertex (1-based) first.
        #[arg(long)]
        flip: Option<usize>,
    },
    /// Randomized property suites.
    Selftest {
        /// Run only this suite.
        #[arg(long)]
        suite: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SpaceArg {
    /// k-planes in C^n.
    Grassmannian { k: usize, n: usize },
    /// Complete flags in C^n.
    Flag { n: usize },
    /// Partial flags with the given successive dimensions, e.g. 1,2,1.
    Partial { parts: String },
    /// Complex projective space CP^n.
    Projective { n: usize },
}

/// Text and JSON renderings of one command result.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    /// Overrides the exit status, for failing self-tests.
    pub failed: bool,
}

impl Output {
    pub fn new(text: String, json: serde_json::Value) -> Self {
        Output { text, json, failed: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            let rendered = match cli.format {
                Format::Json => {
                    let mut v = out.json;
                    if let Some(obj) = v.as_object_mut() {
                        obj.insert("schema".into(), SCHEMA.into());
                    }
                    serde_json::to_string_pretty(&v).expect("serializable")
                }
                _ => out.text,
            };
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = writeln!(stdout, "{}", rendered.trim_end());
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
