mod builtins;
mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hopf_cyclic::Error;

#[derive(Parser, Debug)]
#[command(name = "hopfcyc", version, about = "Exact cyclic modules of finite-dimensional Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Q or Fp:p; built-ins are constructed over it, files must agree with it
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Built-in name (see `examples`) or a Hopf JSON file
    #[arg(long, default_value = "c2")]
    pub hopf: String,
    /// `auto` or `DELTA,SIGMA` naming a character and a grouplike
    #[arg(long, default_value = "auto")]
    pub pair: String,
    /// SAYD module JSON; defaults to k with the chosen pair
    #[arg(long)]
    pub module: Option<std::path::PathBuf>,
    /// Truncation degree
    #[arg(long = "N", default_value_t = 3)]
    pub truncation: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Construction {
    Alg,
    Coalg,
    Cm,
    Kr,
    Calg,
    Ccoalg,
    K,
    Invariant,
    Coinvariant,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Dual {
    Hat,
    Check,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum HomologyKind {
    Hochschild,
    Cyclic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum HomologyMethod {
    Bicomplex,
    Connes,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Hopf algebra axioms
    VerifyHopf { hopf: String },
    /// Check the module, comodule, anti-Yetter-Drinfeld and stability conditions
    VerifySayd {
        hopf: String,
        #[arg(long)]
        module: std::path::PathBuf,
    },
    /// Build a (co)cyclic module and check its relations
    Build {
        #[arg(long, value_enum)]
        construction: Construction,
        #[command(flatten)]
        target: Target,
    },
    /// Apply a cyclic duality functor to a module file
    Dualize {
        #[arg(value_enum)]
        which: Dual,
        file: std::path::PathBuf,
    },
    /// Hochschild or cyclic (co)homology dimensions
    Homology {
        #[arg(long, value_enum)]
        kind: HomologyKind,
        /// Module JSON; otherwise a construction is built
        #[arg(long)]
        input: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "alg")]
        construction: Construction,
        #[command(flatten)]
        target: Target,
        /// Highest degree; defaults to N−1
        #[arg(long)]
        up_to: Option<usize>,
        #[arg(long, value_enum, default_value = "bicomplex")]
        method: HomologyMethod,
        /// Print an aligned table instead of JSON
        #[arg(long)]
        table: bool,
    },
    /// θ is a morphism and descends to the (co)invariant complexes
    #[command(name = "check-prop31")]
    CheckProp31 {
        #[command(flatten)]
        target: Target,
    },
    /// θ̄ is an isomorphism of cyclic modules
    #[command(name = "check-theorem31")]
    CheckTheorem31 {
        #[command(flatten)]
        target: Target,
    },
    /// The (co)invariant complexes with k coefficients are the classical ones
    CheckIdentifications {
        #[command(flatten)]
        target: Target,
    },
    /// Contracting homotopies on the duals of A^♮ and C_♮
    #[command(name = "check-lemma23")]
    CheckLemma23 {
        #[command(flatten)]
        target: Target,
    },
    /// Evaluation pairing of H with its dual and the induced morphism
    CheckPairing {
        #[command(flatten)]
        target: Target,
    },
    /// List the built-in Hopf algebras
    Examples,
    /// Print a built-in Hopf algebra as JSON
    Export { name: String },
}

/// What a verb produced: the text to emit and whether every check passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::ShapeMismatch(_) | Error::Unsupported(_) | Error::NotAGroup(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &outcome.text).map_err(|e| e.to_string()),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if outcome.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
