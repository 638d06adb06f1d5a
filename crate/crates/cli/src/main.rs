//! `zigzag`: bijections between pattern-avoiding alternating permutations
//! and (shifted) standard Young tableaux, plus enumeration, exact counting,
//! and a self-contained verification suite.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a disagreement, 2 on
//! parse or domain errors (with a one-line diagnostic on standard error).

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use zigzag_core::{
    bijection, brute_count_with_limit, count_shifted_syt, count_syt, for_each_avoider_with_limit,
    verify_all_with_limit, AlternationClass, Error, Permutation, Shape, ShapeKind, Tableau, Word,
    DEFAULT_LENGTH_LIMIT,
};

#[derive(Parser)]
#[command(
    name = "zigzag",
    version,
    about = "Bijections between pattern-avoiding alternating permutations and Young tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    /// Even-length down-up permutations to balanced words
    Phi,
    /// Odd-length down-up permutations to skew words
    Psi,
    /// Even-length down-up permutations to (n,n,n) tableaux
    PhiBar,
    /// Odd-length down-up permutations to shifted (n+1,n,n-1) tableaux
    PsiBar,
    /// Odd-length up-down permutations to (n+1,n,n-1) tableaux
    Gamma,
    /// Even-length up-down permutations to shifted (n+2,n,n-2) tableaux
    Delta,
}

impl Via {
    fn flag(self) -> &'static str {
        match self {
            Via::Phi => "phi",
            Via::Psi => "psi",
            Via::PhiBar => "phi-bar",
            Via::PsiBar => "psi-bar",
            Via::Gamma => "gamma",
            Via::Delta => "delta",
        }
    }

    fn maps_to_word(self) -> bool {
        matches!(self, Via::Phi | Via::Psi)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Ud,
    Du,
}

impl From<ClassArg> for AlternationClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Ud => AlternationClass::UpDown,
            ClassArg::Du => AlternationClass::DownUp,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderMode {
    /// Machine form: {"shape":[...],"shifted":bool,"rows":[[...],...]}
    Json,
    /// Indented diagram for human reading
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one of the bijections to a permutation
    Map {
        #[arg(long, value_enum)]
        via: Via,
        /// Permutation: "63758142", "6,3,7,5,8,1,4,2", or "658397(10)142"
        #[arg(long)]
        perm: String,
        /// Output form for tableau images
        #[arg(long, value_enum, default_value_t = RenderMode::Json)]
        render: RenderMode,
    },
    /// Recover the permutation behind a word or tableau image
    Unmap {
        #[arg(long, value_enum)]
        via: Via,
        /// Word as a digit string over 1/2/3 (for phi and psi)
        #[arg(long)]
        word: Option<String>,
        /// Tableau as JSON (for phi-bar, psi-bar, gamma, delta)
        #[arg(long)]
        tableau: Option<String>,
    },
    /// Stream alternating permutations of one length avoiding a pattern
    Enumerate {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        length: usize,
        /// Pattern to avoid, e.g. 4123
        #[arg(long)]
        avoid: String,
        /// Print only the count
        #[arg(long)]
        count_only: bool,
        /// Override the enumeration safety cap
        #[arg(long, default_value_t = DEFAULT_LENGTH_LIMIT)]
        limit: usize,
    },
    /// Exact number of standard Young tableaux of a shape
    Count {
        /// Comma-separated parts, e.g. "3,3,3"
        #[arg(long)]
        shape: String,
        /// Use the shifted diagram and counting formula
        #[arg(long)]
        shifted: bool,
    },
    /// Run every count identity and bijection round-trip suite
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Override the enumeration safety cap
        #[arg(long, default_value_t = DEFAULT_LENGTH_LIMIT)]
        limit: usize,
    },
    /// Pretty-print a tableau from its JSON form
    Render {
        #[arg(long)]
        tableau: String,
    },
}

fn print_tableau(t: &Tableau, render: RenderMode) {
    match render {
        RenderMode::Json => println!("{}", t.to_json_string()),
        RenderMode::Text => println!("{}", t.render_text()),
    }
}

fn run_map(via: Via, perm: &str, render: RenderMode) -> zigzag_core::Result<()> {
    let p: Permutation = perm.parse()?;
    match via {
        Via::Phi => println!("{}", bijection::phi(&p)?),
        Via::Psi => println!("{}", bijection::psi(&p)?),
        Via::PhiBar => print_tableau(&bijection::phi_bar(&p)?, render),
        Via::PsiBar => print_tableau(&bijection::psi_bar(&p)?, render),
        Via::Gamma => print_tableau(&bijection::gamma(&p)?, render),
        Via::Delta => print_tableau(&bijection::delta(&p)?, render),
    }
    Ok(())
}

fn run_unmap(via: Via, word: Option<String>, tableau: Option<String>) -> zigzag_core::Result<()> {
    let preimage = if via.maps_to_word() {
        if tableau.is_some() {
            return Err(Error::Domain(format!(
                "unmap --via {} takes --word, not --tableau",
                via.flag()
            )));
        }
        let word: Word = word
            .ok_or_else(|| Error::Domain(format!("unmap --via {} requires --word", via.flag())))?
            .parse()?;
        match via {
            Via::Phi => bijection::phi_inverse(&word)?,
            _ => bijection::psi_inverse(&word)?,
        }
    } else {
        if word.is_some() {
            return Err(Error::Domain(format!(
                "unmap --via {} takes --tableau, not --word",
                via.flag()
            )));
        }
        let t = Tableau::from_json_str(&tableau.ok_or_else(|| {
            Error::Domain(format!("unmap --via {} requires --tableau", via.flag()))
        })?)?;
        match via {
            Via::PhiBar => bijection::phi_bar_inverse(&t)?,
            Via::PsiBar => bijection::psi_bar_inverse(&t)?,
            Via::Gamma => bijection::gamma_inverse(&t)?,
            _ => bijection::delta_inverse(&t)?,
        }
    };
    println!("{preimage}");
    Ok(())
}

fn run(cli: Cli) -> zigzag_core::Result<u8> {
    match cli.command {
        Command::Map { via, perm, render } => {
            run_map(via, &perm, render)?;
            Ok(0)
        }
        Command::Unmap { via, word, tableau } => {
            run_unmap(via, word, tableau)?;
            Ok(0)
        }
        Command::Enumerate {
            class,
            length,
            avoid,
            count_only,
            limit,
        } => {
            let pattern: Permutation = avoid.parse()?;
            let class = class.into();
            if count_only {
                println!(
                    "{}",
                    brute_count_with_limit(length, class, &pattern, limit)?
                );
            } else {
                let stdout = io::stdout();
                let mut out = BufWriter::new(stdout.lock());
                for_each_avoider_with_limit(length, class, &pattern, limit, |p| {
                    writeln!(out, "{p}").expect("write to stdout");
                })?;
                out.flush().expect("flush stdout");
            }
            Ok(0)
        }
        Command::Count { shape, shifted } => {
            let mut parts = Vec::new();
            for token in shape.split(',') {
                let token = token.trim();
                parts.push(
                    token
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidShape(format!("cannot parse part {token:?}")))?,
                );
            }
            let count = if shifted {
                count_shifted_syt(&Shape::new(parts, ShapeKind::Shifted)?)?
            } else {
                count_syt(&Shape::new(parts, ShapeKind::Ordinary)?)?
            };
            println!("{count}");
            Ok(0)
        }
        Command::Verify { max_n, limit } => {
            let reports = verify_all_with_limit(max_n, limit)?;
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            let mut all_agree = true;
            for report in &reports {
                writeln!(out, "{}", report.to_json_line()).expect("write to stdout");
                all_agree &= report.agree;
            }
            out.flush().expect("flush stdout");
            eprintln!(
                "{} reports, {}",
                reports.len(),
                if all_agree {
                    "all agree"
                } else {
                    "DISAGREEMENT FOUND"
                }
            );
            Ok(if all_agree { 0 } else { 1 })
        }
        Command::Render { tableau } => {
            let t = Tableau::from_json_str(&tableau)?;
            println!("{}", t.render_text());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
