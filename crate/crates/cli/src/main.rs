use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use superbol::builtin::{builtin_example, EXAMPLES};
use superbol::constructions::{
    hom_bol_from_right_hom_alternative, hom_jordan_triple, jordan_lts_bracket,
    lie_triple_from_jordan_triple, minus_algebra, nth_derived, plus_algebra, yau_twist_algebra,
    yau_twist_bol, yau_twist_triple, Preconditions,
};
use superbol::error::ConstructionError;
use superbol::graded::EvenMap;
use superbol::identity::{check_suite, SuiteName};
use superbol::io::{load, save, AnyStructure, NamedStructure};
use superbol::operators::verify_operator_lemmas;
use superbol::report::SuiteReport;
use superbol::structures::HomTripleSystem;

// Writes to stdout, ignoring a closed pipe (`superbol check … | head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = write!(std::io::stdout().lock(), $($arg)*);
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "superbol",
    version,
    about = "Identity checking for graded Hom-structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a structure against a named identity suite.
    Check {
        file: PathBuf,
        #[arg(long)]
        suite: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a derived structure from FILE.
    Construct {
        construction: Construction,
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        /// Skip the hypothesis checks.
        #[arg(long)]
        unchecked: bool,
    },
    /// Yau-twist FILE by one of its named maps.
    Twist {
        file: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(short, default_value_t = 1)]
        n: u32,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long)]
        unchecked: bool,
    },
    /// nth derived Hom-structure of a binary-ternary structure.
    Derive {
        file: PathBuf,
        #[arg(short)]
        n: u32,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Verify the left-multiplication operator identities of a Hom-Jordan superalgebra.
    Lemmas {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        unchecked: bool,
    },
    /// List or write the built-in fixtures.
    Examples {
        /// The default when nothing is emitted.
        #[arg(long, conflicts_with = "emit")]
        list: bool,
        #[arg(long, requires = "out")]
        emit: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Summarize a structure file.
    Info { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Construction {
    /// supercommutator algebra
    Minus,
    /// graded Jordan product algebra
    Plus,
    /// Bol structure of a right alternative superalgebra
    Bol,
    /// Hom-Bol structure of a multiplicative right Hom-alternative superalgebra
    HomBol,
    /// Hom-Jordan supertriple of a Hom-Jordan superalgebra
    JordanTriple,
    /// Hom-Lie supertriple of a Hom-Jordan supertriple
    LieTriple,
    /// Lie supertriple bracket of a supercommutative algebra
    LtsBracket,
}

/// How a command ended, mapped onto the exit code.
enum Outcome {
    Pass,
    Fail,
}

/// Input or usage errors; exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, InputError> {
    match command {
        Command::Check { file, suite, json } => {
            let s = load(&file)?;
            let name: SuiteName = suite.parse()?;
            let report = check_suite(&s.binding(), name)?;
            Ok(emit_report(&report, json))
        }
        Command::Construct {
            construction,
            file,
            out,
            unchecked,
        } => {
            let s = load(&file)?;
            let pre = preconditions(unchecked);
            match construct(&s, construction, pre) {
                Ok(result) => write(&result, &out),
                Err(e) => construction_failure(e),
            }
        }
        Command::Twist {
            file,
            map,
            n,
            out,
            unchecked,
        } => {
            let s = load(&file)?;
            let beta = s.map(&map)?.clone();
            let pre = preconditions(unchecked);
            let twisted = match &s.structure {
                AnyStructure::Algebra(a) => {
                    yau_twist_algebra(a, &beta, n, pre).map(AnyStructure::Algebra)
                }
                AnyStructure::Triple(t) => {
                    yau_twist_triple(t, &beta, n, pre).map(AnyStructure::Triple)
                }
                AnyStructure::BinaryTernary(b) => {
                    yau_twist_bol(b, &beta, n, pre).map(AnyStructure::BinaryTernary)
                }
            };
            match twisted {
                Ok(t) => write(&derived(&s, format!("{}_{map}{n}", s.name), t), &out),
                Err(e) => construction_failure(e),
            }
        }
        Command::Derive { file, n, out } => {
            let s = load(&file)?;
            let AnyStructure::BinaryTernary(b) = &s.structure else {
                return Err(InputError(format!(
                    "derive needs a hom_binary_ternary structure, `{}` is a {}",
                    s.name,
                    s.structure.kind()
                )));
            };
            let d = nth_derived(b, n)?;
            let name = format!("{}_derived{n}", s.name);
            write(&derived(&s, name, AnyStructure::BinaryTernary(d)), &out)
        }
        Command::Lemmas {
            file,
            json,
            unchecked,
        } => {
            let s = load(&file)?;
            let AnyStructure::Algebra(j) = &s.structure else {
                return Err(InputError(format!(
                    "lemmas needs a hom_superalgebra, `{}` is a {}",
                    s.name,
                    s.structure.kind()
                )));
            };
            match verify_operator_lemmas(j, preconditions(unchecked)) {
                Ok(report) => Ok(emit_report(&report, json)),
                Err(e) => construction_failure(e),
            }
        }
        Command::Examples { emit, out, .. } => match (emit, out) {
            (Some(name), Some(out)) => {
                let s = builtin_example(&name)?;
                save(&s, &out)?;
                outln!("wrote {} to {}", s.name, out.display());
                Ok(Outcome::Pass)
            }
            _ => {
                for (name, description) in EXAMPLES {
                    outln!("{name:<28} {description}");
                }
                Ok(Outcome::Pass)
            }
        },
        Command::Info { file } => {
            info(&load(&file)?);
            Ok(Outcome::Pass)
        }
    }
}

fn preconditions(unchecked: bool) -> Preconditions {
    if unchecked {
        Preconditions::Unchecked
    } else {
        Preconditions::Checked
    }
}

fn emit_report(report: &SuiteReport, json: bool) -> Outcome {
    if json {
        outln!("{}", report.to_json());
    } else {
        out!("{report}");
    }
    if report.passed() {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

/// A failed hypothesis is an identity failure; anything else is bad input.
fn construction_failure(e: ConstructionError) -> Result<Outcome, InputError> {
    match e {
        ConstructionError::Precondition { stage, report } => {
            eprintln!("precondition `{stage}` failed");
            out!("{report}");
            Ok(Outcome::Fail)
        }
        other => Err(other.into()),
    }
}

fn write(s: &NamedStructure, out: &Path) -> Result<Outcome, InputError> {
    save(s, out)?;
    outln!(
        "wrote {} ({}) to {}",
        s.name,
        s.structure.kind(),
        out.display()
    );
    Ok(Outcome::Pass)
}

/// A new structure on the same space, keeping the source's maps and convention.
fn derived(source: &NamedStructure, name: String, structure: AnyStructure) -> NamedStructure {
    let mut n = NamedStructure::new(name, structure).with_convention(source.convention);
    n.maps = source.maps.clone();
    n
}

fn construct(
    s: &NamedStructure,
    which: Construction,
    pre: Preconditions,
) -> Result<NamedStructure, ConstructionError> {
    let conv = s.convention;
    let suffix = match which {
        Construction::Minus => "minus",
        Construction::Plus => "plus",
        Construction::Bol => "bol",
        Construction::HomBol => "hom_bol",
        Construction::JordanTriple => "jordan_triple",
        Construction::LieTriple => "lie_triple",
        Construction::LtsBracket => "lts_bracket",
    };
    let wrong_kind = |expected: &str| {
        ConstructionError::InvalidParameter(format!(
            "`{suffix}` needs a {expected}, `{}` is a {}",
            s.name,
            s.structure.kind()
        ))
    };
    let structure = match (&s.structure, which) {
        (AnyStructure::Algebra(a), Construction::Minus) => {
            AnyStructure::Algebra(minus_algebra(a, conv))
        }
        (AnyStructure::Algebra(a), Construction::Plus) => {
            AnyStructure::Algebra(plus_algebra(a, conv))
        }
        (AnyStructure::Algebra(a), Construction::Bol) => AnyStructure::BinaryTernary(
            superbol::constructions::bol_from_right_alternative(a, conv, pre)?,
        ),
        (AnyStructure::Algebra(a), Construction::HomBol) => {
            AnyStructure::BinaryTernary(hom_bol_from_right_hom_alternative(a, conv, pre)?)
        }
        (AnyStructure::Algebra(j), Construction::JordanTriple) => {
            AnyStructure::Triple(hom_jordan_triple(j, pre)?)
        }
        (AnyStructure::Algebra(j), Construction::LtsBracket) => {
            let t = jordan_lts_bracket(j, pre)?;
            let id = EvenMap::identity(j.space());
            AnyStructure::Triple(HomTripleSystem::new(t, id)?)
        }
        (AnyStructure::Triple(v), Construction::LieTriple) => {
            AnyStructure::Triple(lie_triple_from_jordan_triple(v, pre)?)
        }
        (_, Construction::LieTriple) => return Err(wrong_kind("hom_triple")),
        _ => return Err(wrong_kind("hom_superalgebra")),
    };
    Ok(derived(s, format!("{}_{suffix}", s.name), structure))
}

fn info(s: &NamedStructure) {
    let space = s.structure.space();
    let basis: Vec<String> = (0..space.dim())
        .map(|i| {
            let p = if space.parity(i).is_odd() { 1 } else { 0 };
            format!("{}:{p}", space.name(i))
        })
        .collect();
    outln!("name        {}", s.name);
    outln!("kind        {}", s.structure.kind());
    outln!("convention  {}", s.convention.name());
    outln!("basis       {}", basis.join(" "));
    let count = |t: Option<usize>| t.map_or("-".to_string(), |n| n.to_string());
    let (binary, ternary) = match &s.structure {
        AnyStructure::Algebra(a) => (Some(a.product().nonzero_count()), None),
        AnyStructure::Triple(t) => (None, Some(t.product().nonzero_count())),
        AnyStructure::BinaryTernary(b) => (
            Some(b.binary().nonzero_count()),
            Some(b.ternary().nonzero_count()),
        ),
    };
    outln!("binary      {} nonzero constants", count(binary));
    outln!("ternary     {} nonzero constants", count(ternary));
    let twist = if s.structure.twist().is_identity() {
        "identity".to_string()
    } else {
        s.maps
            .iter()
            .find(|(_, m)| *m == s.structure.twist())
            .map_or("non-identity".to_string(), |(n, _)| n.clone())
    };
    outln!("twist       {twist}");
    let maps: Vec<&str> = s.maps.keys().map(String::as_str).collect();
    outln!(
        "maps        {}",
        if maps.is_empty() {
            "-".into()
        } else {
            maps.join(" ")
        }
    );
}
