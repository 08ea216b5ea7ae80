use clap::{Parser, Subcommand};
use mlie_cli::run::{self, CheckName, Command, Job};

#[derive(Parser)]
#[command(
    name = "mlie",
    version,
    about = "Structural checks and classical constructions for braided graded algebras",
    after_help = "Exit codes: 0 all checks passed, 1 a check failed, 2 input error."
)]
struct Cli {
    /// Coefficient mode: rational, cyclotomic:N, or generic. Overrides the
    /// field named by the documents.
    #[arg(long, global = true, value_name = "MODE")]
    field: Option<String>,

    /// Path length bound for path algebras (required for cyclic quivers).
    #[arg(long, global = true, value_name = "K")]
    max_len: Option<usize>,

    /// Write the JSON report here as well.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<String>,

    /// Include counterexample witnesses in the report.
    #[arg(long, global = true)]
    witnesses: bool,

    /// Write the derived document here (path-algebra, superize).
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<String>,

    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Run named checks (graded, assoc, bas, bji, strict; default all)
    /// on the algebra the documents describe.
    Check {
        /// Check names mixed with document paths, in any order.
        #[arg(value_name = "NAME|PATH", required = true)]
        args: Vec<String>,
    },
    /// Build the path algebra of a quiver document and report its
    /// dimension table.
    PathAlgebra {
        #[arg(value_name = "PATH", required = true)]
        inputs: Vec<String>,
    },
    /// Report the group gradation of a block algebra: dimensions and basis
    /// per degree.
    Grade {
        #[arg(value_name = "PATH", required = true)]
        inputs: Vec<String>,
    },
    /// Compute the kernel of the quantum trace and emit its basis per
    /// degree.
    Sl {
        #[arg(value_name = "PATH", required = true)]
        inputs: Vec<String>,
    },
    /// Solve the transpose-form compatibility system and emit its basis
    /// per degree.
    Osp {
        #[arg(value_name = "PATH", required = true)]
        inputs: Vec<String>,
    },
    /// Regroup a block algebra over Z_2 by parity; optionally write the
    /// superized document with --out.
    Superize {
        #[arg(value_name = "PATH", required = true)]
        inputs: Vec<String>,
    },
    /// Check that superization commutes with the trace kernel and the
    /// orthosymplectic construction, comparing independently computed
    /// spaces.
    VerifySuperization {
        #[arg(value_name = "PATH", required = true)]
        inputs: Vec<String>,
    },
    /// Check a documented representation for the bracket and module
    /// identities.
    RepCheck {
        #[arg(value_name = "PATH", required = true)]
        inputs: Vec<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let field = match cli.field.as_deref().map(str::parse).transpose() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    let (command, inputs) = match cli.command {
        Sub::Check { args } => {
            let (names, paths): (Vec<_>, Vec<_>) = args.into_iter().partition(|a| CheckName::parse(a).is_some());
            let names = names.iter().map(|a| CheckName::parse(a).expect("partitioned")).collect();
            (Command::Check(names), paths)
        }
        Sub::PathAlgebra { inputs } => (Command::PathAlgebra, inputs),
        Sub::Grade { inputs } => (Command::Grade, inputs),
        Sub::Sl { inputs } => (Command::Sl, inputs),
        Sub::Osp { inputs } => (Command::Osp, inputs),
        Sub::Superize { inputs } => (Command::Superize, inputs),
        Sub::VerifySuperization { inputs } => (Command::VerifySuperization, inputs),
        Sub::RepCheck { inputs } => (Command::RepCheck, inputs),
    };
    let job = Job {
        command,
        inputs,
        field,
        max_len: cli.max_len,
        witnesses: cli.witnesses,
        report: cli.report,
        out: cli.out,
    };
    match run::run(&job) {
        Ok(report) => {
            print!("{}", run::render_text(&report));
            std::process::exit(if report.all_pass() { 0 } else { 1 });
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
