use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use so41_cli::commands::{describe, dump, emit_basis, eval_expr, run_suite, CliError, Options, Suite};
use so41_cli::{ElementFile, Sort};
use so41_core::invariants::Method;
use so41_core::verify::{FormChoice, SignChoice};

#[derive(Parser)]
#[command(name = "so41", version, about = "Exact algebra in U(so(5)) ⊗ C(p) for SO(4,1)")]
struct Cli {
    /// Clifford sign s in vw + wv = 2s·B(v,w).
    #[arg(long, global = true, default_value = "auto", allow_hyphen_values = true, value_parser = parse_sign)]
    sign: SignChoice,
    /// Normalisation of B on p.
    #[arg(long, global = true, value_enum, default_value_t = FormArg::Auto)]
    form: FormArg,
    #[arg(long, global = true, value_enum, default_value_t = AmbientArg::Uc)]
    ambient: AmbientArg,
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Seed for prime selection.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Lift the degree guard on invariant computations.
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exit status 0 iff every check passes.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// With `dims`: write certified invariant vectors to this directory.
        #[arg(long)]
        emit_basis: Option<PathBuf>,
    },
    /// Evaluate an expression and print its normal form.
    Eval { expr: String },
    /// Write a named element to a file.
    Dump {
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Read an element file and describe it.
    Load { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Table,
    Relations,
    Invariance,
    Generators,
    Dims,
    Independence,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Trace,
    #[value(name = "trace/4")]
    Quarter,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum AmbientArg {
    Uc,
    Se,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Exact,
    Modp,
}

fn parse_sign(s: &str) -> Result<SignChoice, String> {
    match s {
        "+1" | "1" => Ok(SignChoice::Plus),
        "-1" => Ok(SignChoice::Minus),
        "auto" => Ok(SignChoice::Auto),
        _ => Err(format!("expected +1, -1 or auto, got `{s}`")),
    }
}

fn options(cli: &Cli) -> Options {
    Options {
        sign: cli.sign,
        form: match cli.form {
            FormArg::Trace => FormChoice::Trace,
            FormArg::Quarter => FormChoice::Quarter,
            FormArg::Auto => FormChoice::Auto,
        },
        ambient: match cli.ambient {
            AmbientArg::Uc => Sort::UC,
            AmbientArg::Se => Sort::SE,
        },
        max_degree: cli.max_degree,
        seed: cli.seed,
        method: match cli.method {
            MethodArg::Auto => Method::Auto,
            MethodArg::Exact => Method::Exact,
            MethodArg::Modp => Method::ModP { seed: cli.seed },
        },
        allow_large: cli.allow_large,
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let opts = options(cli);
    match &cli.command {
        Command::Verify { suite, emit_basis: dir } => {
            let suite = match suite {
                SuiteArg::Table => Suite::Table,
                SuiteArg::Relations => Suite::Relations,
                SuiteArg::Invariance => Suite::Invariance,
                SuiteArg::Generators => Suite::Generators,
                SuiteArg::Dims => Suite::Dims,
                SuiteArg::Independence => Suite::Independence,
            };
            let out = run_suite(suite, &opts)?;
            for line in &out.lines {
                println!("{line}");
            }
            if let Some(dir) = dir {
                let n = emit_basis(dir, &opts)?;
                println!("EMIT vectors={n} dir={}", dir.display());
            }
            Ok(out.pass)
        }
        Command::Eval { expr } => {
            println!("{}", eval_expr(expr, &opts)?);
            Ok(true)
        }
        Command::Dump { name, out } => {
            let f = dump(name, &opts)?;
            std::fs::write(out, f.serialize())?;
            Ok(true)
        }
        Command::Load { path } => {
            let f = ElementFile::parse(&std::fs::read_to_string(path)?)?;
            print!("{}", describe(&f)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
