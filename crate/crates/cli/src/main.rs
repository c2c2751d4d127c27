//! `current-lie`: cohomology, invariant forms and derivations of current Lie
//! algebras from the command line.
//!
//! Exit status: 0 when every verdict holds, 1 on a failed verification, 2 on
//! usage, parse or validation errors.

mod catalog;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "current-lie", version, about = "Exact invariants of current Lie algebras L ⊗ A over ℚ")]
pub struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the random projections used in λ-candidate discovery.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Factors {
    /// Lie algebra: sl2, slN, abelian:N, heis3, sum:a+b or a JSON file.
    #[arg(long = "L", value_name = "LIE")]
    pub lie: Option<String>,
    /// Associative algebra: tpoly:N, tpoly1:N, zero:N or a JSON file.
    #[arg(long = "A", value_name = "ASSOC")]
    pub assoc: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleArg {
    Trivial,
    Adjoint,
    Coadjoint,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    /// Coadjoint coefficients, no form.
    None,
    /// Killing form of the algebra.
    Killing,
    /// Killing form of L times the residue form of A.
    Product,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    H2,
    Forms,
    Der,
}

#[derive(Subcommand, Debug)]
pub enum AlgebraVerb {
    /// Print the structure constants.
    Show { spec: String },
    /// Check the axioms and report the violated one with its basis triple.
    Validate { spec: String },
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect or validate an algebra.
    #[command(subcommand)]
    Algebra(AlgebraVerb),
    /// Zⁿ, Bⁿ, Hⁿ of L (or L ⊗ A) with trivial, adjoint or coadjoint coefficients.
    Cohomology {
        #[command(flatten)]
        factors: Factors,
        #[arg(long, value_enum, default_value = "trivial")]
        module: ModuleArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Bilinear forms satisfying a condition on L or A.
    Forms {
        #[command(flatten)]
        factors: Factors,
        /// any, jacobi_sum_zero, cyclic, radical or invariant.
        #[arg(long, default_value = "cyclic")]
        cond: String,
        /// symmetric, skew or any.
        #[arg(long, default_value = "any")]
        sym: String,
    },
    /// Derivations and inner derivations of L, A or L ⊗ A.
    Derivations {
        #[command(flatten)]
        factors: Factors,
    },
    /// Antiderivations of L, split through the Killing form when it is nondegenerate.
    Antiderivations {
        #[command(flatten)]
        factors: Factors,
    },
    /// The sequence 0 → H²(L) → H¹(L,L*) → B(L) → H³(L) and its exactness.
    Sequence {
        #[command(flatten)]
        factors: Factors,
        #[arg(long, value_enum, default_value = "none")]
        form: FormArg,
    },
    /// Compare a space on L ⊗ A with its span of decomposable generators.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[command(flatten)]
        factors: Factors,
    },
    /// Graded H² of g ⊗ tK[t] against the expected dimensions.
    Larsson {
        #[arg(long = "g", value_name = "LIE")]
        g: String,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Skew cyclic and skew sum-zero forms on tK[t], degree by degree.
    Hc1 {
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(body: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(body.as_bytes()).and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::run(&cli);
    match outcome {
        Ok(report) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&report.value).expect("report serializes") + "\n"
            } else {
                render::text(&report.value)
            };
            emit(&body);
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            if cli.json {
                emit(&(serde_json::to_string_pretty(&err.to_json()).expect("error serializes") + "\n"));
            }
            ExitCode::from(2)
        }
    }
}
