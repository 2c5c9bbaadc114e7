//! The `dialg` command line.
//!
//! Exit codes: 0 for success or a "yes" answer, 1 for a "no" answer, 2 for
//! usage, parse and presentation errors, 3 for a missing or too small degree
//! bound.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::assoc::{delta_mono, lift_basis};
use crate::completion::{complete, is_gsb, reduce_basis};
use crate::decision::{ideal_equal, irr_up_to, DisemigroupPresentation};
use crate::error::Error;
use crate::io::{
    format_apoly, format_file, format_header, format_monomial, format_poly, parse_file,
    parse_monomial, parse_poly, PresentationFile,
};
use crate::oracle::{self, Side};

#[derive(Debug, Parser)]
#[command(
    name = "dialg",
    version,
    about = "Groebner-Shirshov bases for free commutative dialgebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Complete the file's generators to a Groebner-Shirshov basis.
    Complete { file: PathBuf },
    /// Print the reduced Groebner-Shirshov basis of the file's ideal.
    Reduce { file: PathBuf },
    /// Check whether the file's polynomials already form a basis.
    Check { file: PathBuf },
    /// Normal form of a polynomial modulo the file's ideal.
    Nf {
        file: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Decide membership of a polynomial in the file's ideal.
    Member {
        file: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Decide whether two files generate the same ideal.
    Eq { first: PathBuf, second: PathBuf },
    /// List irreducible monomials up to a degree.
    Irr {
        file: PathBuf,
        #[arg(long = "max-deg")]
        max_deg: Option<usize>,
    },
    /// Lift the completed basis to the free associative dialgebra.
    Lift {
        file: PathBuf,
        #[arg(long = "max-deg")]
        max_deg: Option<usize>,
        /// Compare the associative quotient dimension with the irreducible count.
        #[arg(long)]
        verify: bool,
    },
    /// Membership by bounded-degree linear algebra.
    OracleMember {
        file: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long = "max-deg")]
        max_deg: Option<usize>,
    },
    /// Normal form of a monomial in the disemigroup given by the file's relations.
    NfSgp {
        file: PathBuf,
        #[arg(long)]
        mono: String,
    },
}

/// Result of a command: text for stdout and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

#[derive(Debug)]
enum Failure {
    Io(PathBuf, std::io::Error),
    Dialg(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Dialg(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Dialg(
                Error::MissingBound | Error::BoundTooSmall { .. } | Error::DegreeOverflow { .. },
            ) => 3,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(p, e) => format!("{}: {e}", p.display()),
            Failure::Dialg(e) => e.to_string(),
        }
    }
}

fn load(path: &Path) -> Result<PresentationFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    parse_file(&text).map_err(|e| match e {
        Error::Syntax {
            line,
            column,
            message,
        } => Failure::Dialg(Error::Syntax {
            line,
            column,
            message: format!("{message} (in {})", path.display()),
        }),
        other => Failure::Dialg(other),
    })
}

fn verdict(yes: bool) -> (String, i32) {
    (format!("{yes}\n"), if yes { 0 } else { 1 })
}

fn bound(b: Option<usize>) -> Result<usize, Failure> {
    b.ok_or(Failure::Dialg(Error::MissingBound))
}

fn execute(command: &Command) -> Result<(String, i32), Failure> {
    match command {
        Command::Complete { file } => {
            let f = load(file)?;
            let b = complete(&f.presentation, &f.generators())?;
            Ok((format_file(&f.presentation, "g", b.elements()), 0))
        }
        Command::Reduce { file } => {
            let f = load(file)?;
            let b = reduce_basis(&complete(&f.presentation, &f.generators())?);
            Ok((format_file(&f.presentation, "g", b.elements()), 0))
        }
        Command::Check { file } => {
            let f = load(file)?;
            Ok(verdict(is_gsb(&f.presentation, &f.generators())?))
        }
        Command::Nf { file, poly } => {
            let f = load(file)?;
            let p = parse_poly(&f.presentation, poly)?;
            let b = complete(&f.presentation, &f.generators())?;
            let r = b.reduction_set().remainder(&p);
            Ok((format!("{}\n", format_poly(&f.presentation, &r)), 0))
        }
        Command::Member { file, poly } => {
            let f = load(file)?;
            let p = parse_poly(&f.presentation, poly)?;
            let b = complete(&f.presentation, &f.generators())?;
            Ok(verdict(b.reduction_set().remainder(&p).is_zero()))
        }
        Command::Eq { first, second } => {
            let f = load(first)?;
            let g = load(second)?;
            Ok(verdict(ideal_equal(
                &f.presentation,
                &f.generators(),
                &g.presentation,
                &g.generators(),
            )?))
        }
        Command::Irr { file, max_deg } => {
            let d = bound(*max_deg)?;
            let f = load(file)?;
            let b = complete(&f.presentation, &f.generators())?;
            let mut out = String::new();
            for m in irr_up_to(&b, d)? {
                writeln!(out, "{}", format_monomial(&f.presentation, &m)).expect("write to string");
            }
            Ok((out, 0))
        }
        Command::Lift {
            file,
            max_deg,
            verify,
        } => {
            let d = bound(*max_deg)?;
            let f = load(file)?;
            let pres = &f.presentation;
            let b = complete(pres, &f.generators())?;
            let lifted = lift_basis(&b, d)?;
            let mut out = String::new();
            writeln!(out, "# lifted basis, word length at most {d}").expect("write to string");
            out.push_str(&format_header(pres));
            for (i, w) in lifted.w.iter().enumerate() {
                writeln!(out, "apoly w{} = {}", i + 1, format_apoly(pres, w)).expect("write to string");
            }
            for (i, g) in lifted.g.iter().enumerate() {
                writeln!(out, "apoly g{} = {}", i + 1, format_apoly(pres, g)).expect("write to string");
            }
            let mut code = 0;
            if *verify {
                let gens: Vec<_> = lifted.all().map(oracle::from_adipoly).collect();
                let span = oracle::ideal_span(&gens, pres.num_vars() as u32, d, Side::Associative)?;
                let irr = irr_up_to(&b, d)?;
                let lifted_irr: Vec<_> = irr
                    .iter()
                    .map(|m| {
                        let a = delta_mono(m);
                        oracle::OMono {
                            letters: a.word().iter().map(|v| v.0).collect(),
                            mark: a.dot() as u8,
                        }
                    })
                    .collect();
                let independent = span.independent_modulo(&lifted_irr)?;
                let agree = span.quotient_dim() == irr.len() && independent;
                writeln!(out, "# associative quotient dimension: {}", span.quotient_dim())
                    .expect("write to string");
                writeln!(out, "# lifted irreducible monomials: {}", irr.len()).expect("write to string");
                writeln!(out, "# lifted irreducible monomials independent: {independent}")
                    .expect("write to string");
                writeln!(out, "# verified: {agree}").expect("write to string");
                code = if agree { 0 } else { 1 };
            }
            Ok((out, code))
        }
        Command::OracleMember {
            file,
            poly,
            max_deg,
        } => {
            let d = bound(*max_deg)?;
            let f = load(file)?;
            let p = parse_poly(&f.presentation, poly)?;
            let gens: Vec<_> = f.generators().iter().map(oracle::from_dipoly).collect();
            let yes = oracle::oracle_member(
                &oracle::from_dipoly(&p),
                &gens,
                f.presentation.num_vars() as u32,
                d,
                Side::Commutative,
            )?;
            Ok(verdict(yes))
        }
        Command::NfSgp { file, mono } => {
            let f = load(file)?;
            let t = parse_monomial(&f.presentation, mono)?;
            let d = DisemigroupPresentation::new(f.presentation.clone(), &f.relations)?;
            let nf = d.nf(&t)?;
            Ok((format!("{}\n", format_monomial(&f.presentation, &nf)), 0))
        }
    }
}

/// Runs one command; never panics on bad input.
pub fn run<I, T>(args: I) -> (Outcome, Option<String>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                (Outcome { stdout: text, code }, None)
            } else {
                (
                    Outcome {
                        stdout: String::new(),
                        code,
                    },
                    Some(text),
                )
            };
        }
    };
    match execute(&cli.command) {
        Ok((stdout, code)) => (Outcome { stdout, code }, None),
        Err(f) => (
            Outcome {
                stdout: String::new(),
                code: f.code(),
            },
            Some(format!("error: {}\n", f.message())),
        ),
    }
}
