use clap::{Parser, Subcommand};
use hyparr_cli::commands::{self, Basis, Family, GenerateParams, Output, Theorem};
use hyparr_cli::error::{CliError, EXIT_INPUT};
use hyparr_cli::ArrangementDocument;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Characteristic polynomials, regions and levels of hyperplane arrangements.
#[derive(Parser)]
#[command(name = "hyparr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the characteristic polynomial.
    Chi {
        /// Arrangement document, or `-` for standard input.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "standard")]
        basis: Basis,
        #[arg(long)]
        json: bool,
    },
    /// Count regions by level.
    Levels {
        input: PathBuf,
        /// Also list every region with its sign vector and a witness point.
        #[arg(long)]
        regions: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check a theorem on the arrangement; exit status 1 on failure and 3 if
    /// its hypotheses do not hold.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum, ignore_case = true)]
        theorem: Theorem,
        /// Number of primes for the finite-field check.
        #[arg(long, default_value_t = 2)]
        primes: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write an arrangement document for a standard family.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Parameter of the m-Catalan family.
        #[arg(long)]
        m: Option<usize>,
        /// Positive parameters of the Catalan and semiorder families.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        values: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Draw a planar arrangement (or a type-A arrangement in R^3) as SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn read_document(path: &Path) -> Result<ArrangementDocument, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))?
    };
    ArrangementDocument::parse(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Input(format!("writing {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Internal(format!("writing standard output: {e}")))
        }
    }
}

fn emit(out: Output, json: bool) -> Result<i32, CliError> {
    write_out(None, &out.render(json))?;
    Ok(out.status)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Chi { input, basis, json } => emit(commands::chi(&read_document(&input)?, basis), json),
        Command::Levels { input, regions, json } => {
            emit(commands::levels(&read_document(&input)?, regions), json)
        }
        Command::Verify {
            input,
            theorem,
            primes,
            json,
        } => emit(commands::verify(&read_document(&input)?, theorem, primes)?, json),
        Command::Generate {
            family,
            n,
            m,
            values,
            seed,
            output,
        } => {
            let params = GenerateParams { n, m, values, seed };
            let doc = commands::generate(family, &params)?;
            write_out(output.as_deref(), &(doc.to_json() + "\n"))?;
            Ok(0)
        }
        Command::Render { input, output } => {
            let svg = commands::render(&read_document(&input)?)?;
            write_out(output.as_deref(), &svg)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
