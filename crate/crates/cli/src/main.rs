use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graded_basic::commands;
use graded_basic::formats::{load_module, load_points, load_sections, to_json_string};
use graded_basic::generate;
use graded_basic::parallel::{pool, resolve_threads};
use graded_basic::{render, CliError, Format, Report};
use graded_basic_core::{Field, PrimeField, Rationals};

#[derive(Parser, Debug)]
#[command(name = "graded-basic", version, about = "Basic elements, Betti tables and Cayley-Bacharach indices")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Coefficient field.
    #[arg(long, value_enum, default_value = "q", global = true)]
    field: FieldKind,
    /// Characteristic when `--field fp` is chosen.
    #[arg(long, global = true)]
    prime: Option<u64>,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Worker threads, 0 for one per core. GRADED_BASIC_THREADS overrides this.
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldKind {
    #[value(name = "q", alias = "Q")]
    Q,
    #[value(name = "fp", alias = "Fp")]
    Fp,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cayley-Bacharach index, single-degree check, or bounds.
    #[command(subcommand)]
    Cb(CbCommand),
    /// Compare the Cayley-Bacharach index with the syzygy degrees.
    Bounds { points: PathBuf },
    /// Graded Betti numbers of the coordinate ring of a point set.
    Betti { points: PathBuf },
    /// Fiber dimension at each point, and the width of sections if given.
    Mu {
        module: PathBuf,
        points: PathBuf,
        #[arg(long)]
        sections: Option<PathBuf>,
    },
    /// Whether each point lies in the zero locus of a Fitting ideal.
    Fitting {
        module: PathBuf,
        points: PathBuf,
        #[arg(long)]
        index: usize,
    },
    /// Drop the lowest-degree section, keeping the family basic at the points.
    Shrink(ShrinkArgs),
    /// Shrink repeatedly down to `t` sections.
    Basic {
        #[command(flatten)]
        inputs: ShrinkArgs,
        #[arg(long)]
        t: usize,
    },
    /// One section lowering the fiber dimension by exactly one at each point.
    Serre { module: PathBuf, sections: PathBuf, points: PathBuf },
    /// Write a points file.
    #[command(subcommand)]
    Generate(GenerateCommand),
}

#[derive(Subcommand, Debug)]
enum CbCommand {
    Index { points: PathBuf },
    Check {
        points: PathBuf,
        #[arg(long)]
        degree: i64,
    },
    Bounds { points: PathBuf },
}

#[derive(Args, Debug)]
struct ShrinkArgs {
    module: PathBuf,
    sections: PathBuf,
    points: PathBuf,
    /// Required width at each point, comma separated. Defaults to the
    /// current widths.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<usize>>,
}

#[derive(Subcommand, Debug)]
enum GenerateCommand {
    /// The a x b grid {(1:i:j)}.
    Grid {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Distinct seeded random points with small integer coordinates.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        range: i64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// The three coordinate points.
    Simplex {
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn emit<R: Report>(report: &R, format: Format) {
    let s = render(report, format);
    print!("{s}");
    if !s.ends_with('\n') {
        println!();
    }
}

fn post_check(ok: bool, what: &str) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::PostCheck(format!("{what} output failed its width check")))
    }
}

fn run_with<F>(field: &F, cmd: &Command, format: Format) -> Result<(), CliError>
where
    F: Field + Sync,
    F::Elem: Send + Sync,
{
    match cmd {
        Command::Cb(CbCommand::Index { points }) => {
            let z = load_points(field, points)?;
            emit(&commands::cb_index(field, &z)?, format);
        }
        Command::Cb(CbCommand::Check { points, degree }) => {
            let z = load_points(field, points)?;
            emit(&commands::cb_check(field, &z, *degree)?, format);
        }
        Command::Cb(CbCommand::Bounds { points }) | Command::Bounds { points } => {
            let z = load_points(field, points)?;
            let r = commands::bounds(field, &z)?;
            emit(&r, format);
            if !r.bound_holds {
                return Err(CliError::BoundViolation(format!(
                    "{} <= {} <= {} fails",
                    r.lower, r.cb_index, r.upper
                )));
            }
        }
        Command::Betti { points } => {
            let z = load_points(field, points)?;
            emit(&commands::betti(field, &z)?, format);
        }
        Command::Mu { module, points, sections } => {
            let m = load_module(field, module)?;
            let z = load_points(field, points)?;
            let s = sections.as_ref().map(|p| load_sections(field, &m, p)).transpose()?;
            emit(&commands::mu(field, &m, &z, s.as_deref())?, format);
        }
        Command::Fitting { module, points, index } => {
            let m = load_module(field, module)?;
            let z = load_points(field, points)?;
            emit(&commands::fitting(field, &m, &z, *index)?, format);
        }
        Command::Shrink(a) => {
            let m = load_module(field, &a.module)?;
            let s = load_sections(field, &m, &a.sections)?;
            let z = load_points(field, &a.points)?;
            let r = commands::shrink(field, &m, &s, &z, a.weights.as_deref())?;
            emit(&r, format);
            post_check(r.ok, "shrink")?;
        }
        Command::Basic { inputs: a, t } => {
            let m = load_module(field, &a.module)?;
            let s = load_sections(field, &m, &a.sections)?;
            let z = load_points(field, &a.points)?;
            let r = commands::basic(field, &m, &s, &z, a.weights.as_deref(), *t)?;
            emit(&r, format);
            post_check(r.ok, "basic")?;
        }
        Command::Serre { module, sections, points } => {
            let m = load_module(field, module)?;
            let s = load_sections(field, &m, sections)?;
            let z = load_points(field, points)?;
            let r = commands::serre(field, &m, &s, &z)?;
            emit(&r, format);
            post_check(r.ok, "serre")?;
        }
        Command::Generate(g) => generate_points(g, format)?,
    }
    Ok(())
}

fn generate_points(g: &GenerateCommand, format: Format) -> Result<(), CliError> {
    let (points, output) = match g {
        GenerateCommand::Grid { a, b, output } => (generate::grid(*a, *b)?, output),
        GenerateCommand::Random { n, seed, range, output } => (generate::random(*n, *seed, *range)?, output),
        GenerateCommand::Simplex { output } => (generate::simplex(), output),
    };
    let file = generate::to_points_file(&points);
    match output {
        Some(path) => std::fs::write(path, to_json_string(&file) + "\n")?,
        None => emit(&file, format),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let threads = resolve_threads(cli.global.threads)?;
    let pool = pool(threads)?;
    let format = cli.global.format;
    match cli.global.field {
        FieldKind::Q => {
            if cli.global.prime.is_some() {
                return Err(CliError::input("--prime", "only meaningful with --field fp"));
            }
            pool.install(|| run_with(&Rationals, &cli.command, format))
        }
        FieldKind::Fp => {
            let p = cli.global.prime.ok_or_else(|| CliError::input("--prime", "required with --field fp"))?;
            let field = PrimeField::new(p).map_err(|e| CliError::input("--prime", e))?;
            pool.install(|| run_with(&field, &cli.command, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
