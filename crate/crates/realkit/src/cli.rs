//! Command-line interface.
//!
//! Exit codes are uniform across subcommands: 0 for an affirmative result,
//! 1 for a definite negative answer (not realizable, check mismatch), 2
//! for operational errors (parse failures, exceeded guards, I/O). Results
//! go to stdout, diagnostics to stderr. `REALKIT_MAX_ATOMS` overrides the
//! default vocabulary guards wherever `--max-atoms` is not given.

use crate::atlas::{self, brute_signature_with_limit, compare};
use crate::error::{Error, Result};
use crate::files::{format_kb, parse_interpretation_set, parse_kb};
use crate::frameworks::{FormalismKind, Semantics, DEFAULT_SEMANTICS_GUARD};
use crate::interp::Vocabulary;
use crate::search::{realize, realize_all, Limits, RealizeOutcome, RealizeQuery};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::str::FromStr;

pub const MAX_ATOMS_ENV: &str = "REALKIT_MAX_ATOMS";

#[derive(Debug, Parser)]
#[command(
    name = "realkit",
    version,
    about = "Realizability solver for abstract argumentation formalisms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn parse_formalism(s: &str) -> Result<FormalismKind> {
    FormalismKind::from_str(s)
}

fn parse_semantics(s: &str) -> Result<Semantics> {
    Semantics::from_str(s)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the interpretation set of a file is realizable and
    /// emit a realizing knowledge base
    Realize {
        /// Formalism to realize in: af, setaf, badf or adf
        #[arg(long, value_parser = parse_formalism)]
        formalism: FormalismKind,
        /// Semantics: adm, com, prf or mod
        #[arg(long, value_parser = parse_semantics)]
        semantics: Semantics,
        /// Interpretation-set file (vocab line plus one token per line)
        #[arg(long)]
        input: PathBuf,
        /// Stream every realization instead of the first
        #[arg(long, conflicts_with = "output")]
        all: bool,
        /// Raise the vocabulary guard
        #[arg(long)]
        max_atoms: Option<usize>,
        /// Skip the oracle re-check of the answer
        #[arg(long)]
        no_verify: bool,
        /// Write the knowledge base here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a knowledge-base file under a semantics
    Semantics {
        /// Knowledge-base file (dialect auto-detected)
        #[arg(long)]
        kb: PathBuf,
        #[arg(long, value_parser = parse_semantics)]
        semantics: Semantics,
        #[arg(long)]
        max_atoms: Option<usize>,
    },
    /// Compare a knowledge base's semantics against an expected set
    Check {
        #[arg(long)]
        kb: PathBuf,
        #[arg(long, value_parser = parse_semantics)]
        semantics: Semantics,
        /// Interpretation-set file with the expected result
        #[arg(long)]
        expect: PathBuf,
        #[arg(long)]
        max_atoms: Option<usize>,
    },
    /// Print the signature of a formalism under a semantics by exhaustive
    /// enumeration
    Signature {
        #[arg(long, value_parser = parse_formalism)]
        formalism: FormalismKind,
        #[arg(long, value_parser = parse_semantics)]
        semantics: Semantics,
        /// Vocabulary size (statements a, b, c, …)
        #[arg(long)]
        atoms: usize,
    },
    /// Compare two signatures by inclusion
    Compare {
        #[arg(long)]
        atoms: usize,
        /// Left side as formalism:semantics, e.g. af:adm
        #[arg(long)]
        left: String,
        /// Right side as formalism:semantics
        #[arg(long)]
        right: String,
    },
}

fn env_max_atoms() -> Option<usize> {
    std::env::var(MAX_ATOMS_ENV).ok()?.trim().parse().ok()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(Error::Io)
}

/// Run a parsed command line; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Realize {
            formalism,
            semantics,
            input,
            all,
            max_atoms,
            no_verify,
            output,
        } => cmd_realize(
            *formalism,
            *semantics,
            input,
            *all,
            *max_atoms,
            *no_verify,
            output.as_deref(),
        ),
        Command::Semantics {
            kb,
            semantics,
            max_atoms,
        } => cmd_semantics(kb, *semantics, *max_atoms),
        Command::Check {
            kb,
            semantics,
            expect,
            max_atoms,
        } => cmd_check(kb, *semantics, expect, *max_atoms),
        Command::Signature {
            formalism,
            semantics,
            atoms,
        } => cmd_signature(*formalism, *semantics, *atoms),
        Command::Compare { atoms, left, right } => cmd_compare(*atoms, left, right),
    }
}

fn realize_limits(max_atoms: Option<usize>, no_verify: bool) -> Limits {
    let mut limits = Limits::default();
    if let Some(n) = max_atoms.or_else(env_max_atoms) {
        limits = limits.with_max_atoms(n);
    }
    limits.verify = !no_verify;
    limits
}

fn cmd_realize(
    formalism: FormalismKind,
    sigma: Semantics,
    input: &Path,
    all: bool,
    max_atoms: Option<usize>,
    no_verify: bool,
    output: Option<&Path>,
) -> Result<i32> {
    let target = parse_interpretation_set(&read(input)?)?;
    let query = RealizeQuery {
        kind: formalism,
        sigma,
        target,
        limits: realize_limits(max_atoms, no_verify),
    };
    if all {
        let mut count = 0usize;
        for item in realize_all(&query)? {
            let found = item?;
            if count > 0 {
                println!();
            }
            print!("{}", format_kb(&found.kb));
            count += 1;
        }
        if count == 0 {
            eprintln!("not realizable");
            return Ok(1);
        }
        return Ok(0);
    }
    match realize(&query)? {
        RealizeOutcome::Unrealizable => {
            eprintln!("not realizable");
            Ok(1)
        }
        RealizeOutcome::Realized(found) => {
            let text = format_kb(&found.kb);
            match output {
                Some(path) => std::fs::write(path, text).map_err(Error::Io)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn scan_guard(max_atoms: Option<usize>) -> usize {
    max_atoms
        .or_else(env_max_atoms)
        .unwrap_or(DEFAULT_SEMANTICS_GUARD)
}

fn cmd_semantics(kb_path: &Path, sigma: Semantics, max_atoms: Option<usize>) -> Result<i32> {
    let kb = parse_kb(&read(kb_path)?)?;
    let result = kb
        .as_adf()
        .semantics_guarded(sigma, scan_guard(max_atoms))?;
    println!("{}", result.tokens().join(" "));
    Ok(0)
}

fn cmd_check(
    kb_path: &Path,
    sigma: Semantics,
    expect_path: &Path,
    max_atoms: Option<usize>,
) -> Result<i32> {
    let kb = parse_kb(&read(kb_path)?)?;
    let expected = parse_interpretation_set(&read(expect_path)?)?;
    if expected.vocab() != kb.vocab() {
        return Err(Error::VocabularyMismatch);
    }
    let computed = kb
        .as_adf()
        .semantics_guarded(sigma, scan_guard(max_atoms))?;
    if computed == expected {
        return Ok(0);
    }
    for missing in expected.iter().filter(|v| !computed.contains(v)) {
        println!("missing: {missing}");
    }
    for extra in computed.iter().filter(|v| !expected.contains(v)) {
        println!("extra: {extra}");
    }
    Ok(1)
}

fn enum_guard(kind: FormalismKind, atoms: usize) -> Result<usize> {
    let guard = env_max_atoms().unwrap_or(atlas::default_enum_guard(kind));
    if atoms > guard {
        return Err(Error::AtomGuard {
            operation: "signature enumeration",
            atoms,
            limit: guard,
        });
    }
    Ok(atoms)
}

fn cmd_signature(kind: FormalismKind, sigma: Semantics, atoms: usize) -> Result<i32> {
    enum_guard(kind, atoms)?;
    let vocab = Vocabulary::lettered(atoms)?;
    let signature = brute_signature_with_limit(kind, sigma, &vocab, atoms)?;
    println!("{signature}");
    Ok(0)
}

fn parse_side(side: &str) -> Result<(FormalismKind, Semantics)> {
    let (kind, sigma) = side.split_once(':').ok_or_else(|| {
        Error::parse(0, format!("expected formalism:semantics, got `{side}`"))
    })?;
    Ok((FormalismKind::from_str(kind)?, Semantics::from_str(sigma)?))
}

fn cmd_compare(atoms: usize, left: &str, right: &str) -> Result<i32> {
    let left = parse_side(left)?;
    let right = parse_side(right)?;
    enum_guard(left.0, atoms)?;
    enum_guard(right.0, atoms)?;
    let vocab = Vocabulary::lettered(atoms)?;
    let left_sig = brute_signature_with_limit(left.0, left.1, &vocab, atoms)?;
    let right_sig = brute_signature_with_limit(right.0, right.1, &vocab, atoms)?;
    let comparison = compare(&left_sig, &right_sig)?;
    println!("{}", comparison.order);
    if let Some(witness) = &comparison.left_only {
        println!("left-only witness: {witness}");
    }
    if let Some(witness) = &comparison.right_only {
        println!("right-only witness: {witness}");
    }
    Ok(0)
}
