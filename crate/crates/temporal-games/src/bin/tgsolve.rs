//! Command-line front end for the game solvers.
//!
//! Exit codes: 0 solved/ok, 2 parse or usage error, 3 resource limit hit,
//! 4 verification failed.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use temporal_games::arena::{Certificate, Objective, Player};
use temporal_games::gamefile::{
    emit_game_file, parse_game_file, parse_witness, solve_game_file, verify_witness_against,
    GameFile, GameForm, SolveMethod,
};
use temporal_games::reductions::{
    normalize_qbf, parse_qdimacs, qbf_brute_force, qbf_to_symbolic_reachability,
    qbf_to_temporal_explorability, reach_to_explore,
};
use temporal_games::temporal::{apply_waiting, expand, lift_objective};
use temporal_games::{Error, Limits, Result};

#[derive(Parser)]
#[command(
    name = "tgsolve",
    about = "Solve games on static, temporal and symbolic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a game file and report the winner.
    Solve(SolveArgs),
    /// Emit the time expansion of an explicit temporal game as a static game file.
    Expand {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Generate a game from one of the built-in reductions.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Run one of the independent oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Check a witness walk against a game file.
    Verify {
        file: PathBuf,
        #[arg(long)]
        witness: PathBuf,
        /// Check against the waiting transform of the game.
        #[arg(long)]
        waiting: bool,
    },
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    /// auto, expand, search or product.
    #[arg(long, default_value = "auto")]
    method: String,
    /// Solve the waiting transform of the game.
    #[arg(long)]
    waiting: bool,
    /// Print the witness walk or exploration order, when one exists.
    #[arg(long)]
    witness: bool,
    /// Emit a single JSON object instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Reachability game -> static explorability game.
    Reach2explore {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// QDIMACS formula -> two-player explicit temporal explorability game.
    Qbf2temporal {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// QDIMACS formula -> one-player symbolic reachability game.
    Qbf2symbolic {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Evaluate a QDIMACS formula by brute force; prints true or false.
    Qbf { file: PathBuf },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents)
        .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn winner_code(winner: Player) -> u8 {
    match winner {
        Player::One => 1,
        Player::Two => 2,
    }
}

fn run_solve(args: &SolveArgs, limits: &Limits) -> Result<()> {
    let file = parse_game_file(&read(&args.file)?)?;
    let method: SolveMethod = args.method.parse()?;
    let (outcome, method_used) = solve_game_file(&file, method, args.waiting, limits)?;
    let witness_text = match &outcome.certificate {
        Some(Certificate::WitnessPath(walk)) => Some(
            walk.iter()
                .map(|w| format!("{}@{}", file.game.name(w.vertex), w.time))
                .collect::<Vec<_>>(),
        ),
        _ => None,
    };
    let order_text = match &outcome.certificate {
        Some(Certificate::Linearization(order)) => Some(
            order
                .iter()
                .map(|&v| file.game.name(v).to_string())
                .collect::<Vec<_>>(),
        ),
        _ => None,
    };
    if args.json {
        let mut object = serde_json::json!({
            "winner": winner_code(outcome.winner),
            "method": method_used,
            "states_explored": outcome.states_explored,
        });
        if args.witness {
            if let Some(w) = &witness_text {
                object["witness"] = serde_json::json!(w);
            }
            if let Some(o) = &order_text {
                object["order"] = serde_json::json!(o);
            }
        }
        println!("{object}");
    } else {
        println!("result winner={}", winner_code(outcome.winner));
        if args.witness {
            if let Some(w) = &witness_text {
                println!("witness {}", w.join(" "));
            }
            if let Some(o) = &order_text {
                println!("order {}", o.join(" "));
            }
        }
    }
    Ok(())
}

fn run_expand(path: &Path, output: &Path, limits: &Limits) -> Result<()> {
    let file = parse_game_file(&read(path)?)?;
    let GameForm::Temporal(graph) = &file.game else {
        return Err(Error::KindMismatch(
            "expand applies only to kind temporal-explicit".into(),
        ));
    };
    let transformed;
    let graph = if file.waiting && !graph.waiting() {
        transformed = apply_waiting(graph);
        &transformed
    } else {
        graph
    };
    let expansion = expand(graph, limits)?;
    let objective = lift_objective(&file.objective, &expansion);
    let start = expansion.id_of(file.start, 0);
    let out = GameFile {
        game: GameForm::Static(expansion.arena),
        start,
        objective,
        waiting: false,
    };
    write(output, &emit_game_file(&out))
}

fn run_reduce(command: &ReduceCommand, limits: &Limits) -> Result<()> {
    match command {
        ReduceCommand::Reach2explore {
            file,
            from,
            to,
            output,
        } => {
            let parsed = parse_game_file(&read(file)?)?;
            let GameForm::Static(arena) = &parsed.game else {
                return Err(Error::KindMismatch(
                    "reach2explore applies only to kind static".into(),
                ));
            };
            let s = arena
                .index_of(from)
                .ok_or_else(|| Error::UnknownVertex(from.clone()))?;
            let t = arena
                .index_of(to)
                .ok_or_else(|| Error::UnknownVertex(to.clone()))?;
            let (explore, start) = reach_to_explore(arena, s, t)?;
            let out = GameFile {
                game: GameForm::Static(explore),
                start,
                objective: Objective::Explore,
                waiting: false,
            };
            write(output, &emit_game_file(&out))
        }
        ReduceCommand::Qbf2temporal { file, output } => {
            let formula = normalize_qbf(&parse_qdimacs(&read(file)?)?);
            let (graph, start) = qbf_to_temporal_explorability(&formula)?;
            let out = GameFile {
                game: GameForm::Temporal(graph),
                start,
                objective: Objective::Explore,
                waiting: false,
            };
            write(output, &emit_game_file(&out))
        }
        ReduceCommand::Qbf2symbolic { file, output } => {
            let formula = normalize_qbf(&parse_qdimacs(&read(file)?)?);
            let (graph, start, target) = qbf_to_symbolic_reachability(&formula, limits)?;
            let out = GameFile {
                game: GameForm::Symbolic(graph),
                start,
                objective: Objective::Reach(vec![target]),
                waiting: false,
            };
            write(output, &emit_game_file(&out))
        }
    }
}

fn dispatch(cli: &Cli, limits: &Limits) -> Result<bool> {
    match &cli.command {
        Command::Solve(args) => run_solve(args, limits).map(|()| true),
        Command::Expand { file, output } => run_expand(file, output, limits).map(|()| true),
        Command::Reduce(command) => run_reduce(command, limits).map(|()| true),
        Command::Oracle(OracleCommand::Qbf { file }) => {
            let formula = parse_qdimacs(&read(file)?)?;
            let value = qbf_brute_force(&formula, limits)?;
            println!("{value}");
            Ok(true)
        }
        Command::Verify {
            file,
            witness,
            waiting,
        } => {
            let game = parse_game_file(&read(file)?)?;
            let walk = parse_witness(&read(witness)?)?;
            let ok = verify_witness_against(&game, &walk, *waiting, limits)?;
            println!("verification {}", if ok { "ok" } else { "failed" });
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::default();
    match dispatch(&cli, &limits) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(4),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::StateSpaceLimit { .. } | Error::PeriodOverflow | Error::TooLarge(_) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
