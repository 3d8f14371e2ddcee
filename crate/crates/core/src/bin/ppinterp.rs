use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ppinterp::harness::{
    run_experiment, run_sweep, table_specs, to_csv, ExperimentKind, ExperimentSpec, ReactionMesh,
    Scheme, TestFunctionId,
};
use ppinterp::{InterpConfig, Method, StencilPolicy};

/// Data-bounded and positivity-preserving interpolation experiments.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// L2 approximation error of one method on one uniform mesh.
    Approx(RunArgs),
    /// Grid-point error after mapping to the midpoint mesh and back.
    Roundtrip {
        #[command(flatten)]
        run: RunArgs,
        /// Points inserted in every interval of the input mesh.
        #[arg(long, default_value_t = 0)]
        refine: usize,
    },
    /// Every cell of a results table (1-6 approximation, 7 round trip).
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
        id: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Dbi,
    Ppi,
    Pchip,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long = "fn", value_name = "f1..f6")]
    function: TestFunctionId,
    /// Points per axis.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Target polynomial degree (ignored by pchip).
    #[arg(long, default_value_t = 3)]
    degree: usize,
    /// Stencil policy: 1 smoothness, 2 symmetry, 3 locality.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
    st: u8,
    #[arg(long, default_value_t = InterpConfig::DEFAULT_EPS0)]
    eps0: f64,
    #[arg(long, default_value_t = InterpConfig::DEFAULT_EPS1)]
    eps1: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn scheme(&self) -> Result<Scheme, String> {
        let method = match self.method {
            MethodArg::Pchip => return Ok(Scheme::Pchip),
            MethodArg::Dbi => Method::Dbi,
            MethodArg::Ppi => Method::Ppi,
        };
        let policy = StencilPolicy::from_code(self.st).map_err(|e| e.to_string())?;
        let config = InterpConfig::new(self.degree, method)
            .with_policy(policy)
            .with_eps(self.eps0, self.eps1);
        config.validate().map_err(|e| e.to_string())?;
        Ok(Scheme::Adaptive(config))
    }
}

fn emit(csv: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, csv).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn single(run: &RunArgs, kind: ExperimentKind) -> Result<(), String> {
    let spec = ExperimentSpec {
        function: run.function,
        n: run.n,
        scheme: run.scheme()?,
        kind,
    };
    let row = run_experiment(&spec).map_err(|e| e.to_string())?;
    emit(&to_csv(&[row]), run.out.as_ref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Approx(run) => single(run, ExperimentKind::Approximation),
        Command::Roundtrip { run, refine } => single(
            run,
            ExperimentKind::RoundTrip {
                refine: *refine,
                reaction: ReactionMesh::Midpoint,
            },
        ),
        Command::Table { id, out } => table_specs(*id as usize)
            .and_then(|specs| run_sweep(&specs))
            .map_err(|e| e.to_string())
            .and_then(|rows| emit(&to_csv(&rows), out.as_ref())),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
