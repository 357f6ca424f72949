use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use grpd_harness::commands::{check_theorems, run_command, Command, CommandError, Outcome, TheoremOptions};

/// Internal groupoids in finite pointed sets and 𝔽p vector spaces.
#[derive(Parser, Debug)]
#[command(name = "grpd", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Workspace file; without it, names refer to the shipped fixtures.
    #[arg(long, global = true)]
    workspace: Option<PathBuf>,
    /// finptset or fpvect.
    #[arg(long, global = true)]
    category: Option<String>,
    /// Prime for the linear suite.
    #[arg(long, global = true)]
    modulus: Option<u32>,
    #[arg(long, global = true, default_value_t = 200)]
    trials: usize,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[arg(long, global = true)]
    max_objects: Option<usize>,
    /// Also write the machine-readable summary here.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Load and validate every entity.
    Validate,
    /// Components of a groupoid, or of both ends of a functor.
    Pi0 { name: String },
    /// Vertex group at the basepoint.
    Pi1 { name: String },
    /// The strong h-kernel of a functor.
    Hkernel { functor: String },
    /// The strong h-pullback of F and G.
    Hpullback { f: String, g: String },
    /// The six-term sequence of the h-kernel.
    Snail { functor: String },
    /// The six-term sequence of the level-wise kernel of a fibration.
    Snake { functor: String },
    /// Faithful, full, essentially surjective, fibration flavors.
    Classify { functor: String },
    /// The fibration replacement.
    Replace { functor: String },
    /// The ladder of a square: one functor for its replacement square, or F′ F E T φ.
    Ladder {
        #[arg(num_args = 1..=5, required = true)]
        names: Vec<String>,
    },
    /// Run the randomized theorem suite.
    CheckTheorems,
}

fn execute(cli: &Cli) -> Result<Outcome, CommandError> {
    let cmd = match &cli.command {
        Cmd::CheckTheorems => {
            return check_theorems(&TheoremOptions {
                category: cli.category.clone().unwrap_or_else(|| "finptset".into()),
                modulus: cli.modulus,
                trials: cli.trials,
                seed: cli.seed,
                max_objects: cli.max_objects,
            })
        }
        Cmd::Validate => Command::Validate,
        Cmd::Pi0 { name } => Command::Pi0(name.clone()),
        Cmd::Pi1 { name } => Command::Pi1(name.clone()),
        Cmd::Hkernel { functor } => Command::HKernel(functor.clone()),
        Cmd::Hpullback { f, g } => Command::HPullback(f.clone(), g.clone()),
        Cmd::Snail { functor } => Command::Snail(functor.clone()),
        Cmd::Snake { functor } => Command::Snake(functor.clone()),
        Cmd::Classify { functor } => Command::Classify(functor.clone()),
        Cmd::Replace { functor } => Command::Replace(functor.clone()),
        Cmd::Ladder { names } => Command::Ladder(names.clone()),
    };
    run_command(cli.workspace.as_deref(), cli.category.as_deref(), &cmd)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if let Some(path) = &cli.json {
                let text = serde_json::to_string_pretty(&out.summary).expect("summary serializes") + "\n";
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
