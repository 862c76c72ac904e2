use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dunkl_cli::{emit, CaseSpec, CliError, Format, Suite, SuiteRun, DEFAULT_MAX_DEGREE};
use dunkl_core::axial::ComplexSeed;

#[derive(Parser)]
#[command(name = "dunkl", version, about = "Exact verification of Dunkl-Clifford identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Group spec, e.g. `a1:d=2:kappa=1/2,1` (see `list-groups`).
    #[arg(long)]
    group: String,
    /// Emit one JSON document instead of text lines.
    #[arg(long)]
    json: bool,
    /// Seed for every pseudo-random input.
    #[arg(long, default_value_t = 0)]
    rand_seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite over its default grid or a pinned case.
    Verify {
        suite: Suite,
        #[command(flatten)]
        common: Common,
        /// Holomorphic seed such as `zbar^1*z^3`.
        #[arg(long)]
        seed: Option<ComplexSeed>,
        /// Extra Laplacian order; seeds need `j <= m`.
        #[arg(long)]
        m: Option<u32>,
        /// Degree of the monogenic factor, or the random-input degree.
        #[arg(long)]
        n: Option<u32>,
        /// Power of the vector variable, or of `z` in the seed.
        #[arg(long)]
        k: Option<u32>,
        /// Run deliberately broken variants; succeeds iff they fail.
        #[arg(long)]
        negative_control: bool,
        /// Largest input degree handed to an iterated Laplacian.
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Fischer decomposition of a homogeneous polynomial in x1..xd.
    Fischer {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: String,
    },
    /// Cauchy-Kovalevskaya extension of a polynomial in x1..xd.
    Ck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: String,
    },
    /// Basis of the degree-n Dunkl-monogenic polynomials.
    Basis {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: u32,
    },
    /// Show the built-in group families and their spec syntax.
    ListGroups,
}

fn execute(command: Command) -> Result<(SuiteRun, Format), CliError> {
    let fmt = |json: bool| if json { Format::Json } else { Format::Text };
    match command {
        Command::Verify {
            suite,
            common,
            seed,
            m,
            n,
            k,
            negative_control,
            max_degree,
        } => {
            let spec = CaseSpec {
                suite,
                group: common.group,
                seed,
                m,
                n,
                k,
                negative_control,
                max_degree,
                rand_seed: common.rand_seed,
            };
            Ok((dunkl_cli::run_suite(&spec)?, fmt(common.json)))
        }
        Command::Fischer { common, poly } => Ok((
            dunkl_cli::fischer_poly(&common.group, &poly, common.rand_seed)?,
            fmt(common.json),
        )),
        Command::Ck { common, poly } => Ok((
            dunkl_cli::ck_poly(&common.group, &poly, common.rand_seed)?,
            fmt(common.json),
        )),
        Command::Basis { common, n } => Ok((
            dunkl_cli::basis_listing(&common.group, n, common.rand_seed)?,
            fmt(common.json),
        )),
        Command::ListGroups => unreachable!("handled before dispatch"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::ListGroups = cli.command {
        print!("{}", dunkl_cli::list_groups());
        return ExitCode::SUCCESS;
    }
    match execute(cli.command) {
        Ok((run, format)) => {
            print!("{}", emit(&run, format));
            ExitCode::from(run.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
