use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::builder::{PossibleValuesParser, TypedValueParser as _};
use clap::{Args, Parser, Subcommand, ValueEnum};

use otfpg::exploration::{run_driver, CostMode, DriverConfig, ExplorationStrategy, GameExpander};
use otfpg::game::{check_extension, IncompleteGame, Player};
use otfpg::io::{read_game, serialize_game, ParsedGame, ResultEntry, ResultFile, Summary};
use otfpg::solvers::{brute_force_oracle, solve, SolverKind};
use otfpg::testkit::{complete_extension, gen_extension, gen_random, gen_safety_family, GenSpec};

#[derive(Parser)]
#[command(name = "otfpg", version, about = "Parity games solved while they are explored")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a game file and print one winner per vertex.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "full", value_parser = solver_parser())]
        solver: SolverKind,
        /// Only report regions of this player.
        #[arg(long)]
        player: Option<PlayerArg>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Explore a stored game from a root, solving on the fly.
    Explore {
        universe: PathBuf,
        #[arg(long)]
        root: u64,
        #[arg(long)]
        designated: u64,
        #[arg(long, value_parser = solver_parser())]
        solver: SolverKind,
        #[arg(long, default_value = "bfs", value_parser = PossibleValuesParser::new(ExplorationStrategy::NAMES))]
        strategy: String,
        /// Share of the total time spent solving, in (0, 1].
        #[arg(long, default_value_t = 0.10, value_parser = parse_ratio)]
        ratio: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Expansions between solver checks.
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
        batch: u64,
        /// Budget by counted work instead of wall-clock time.
        #[arg(long)]
        logical_cost: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate game files.
    Gen {
        #[command(subcommand)]
        kind: GenCommand,
    },
    /// Solve a small game by exhaustive strategy enumeration.
    Oracle {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exit with 0 if the second game extends the first, 1 otherwise.
    CheckExtension { first: PathBuf, second: PathBuf },
}

#[derive(Subcommand)]
enum GenCommand {
    /// A random game, optionally with incomplete vertices.
    Random {
        #[command(flatten)]
        spec: RandomArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Chain-and-lattice game with an optional reachable error sink.
    Safety {
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        violation: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A random game followed by random extensions, one file per step.
    ExtensionChain {
        #[command(flatten)]
        spec: RandomArgs,
        #[arg(long, default_value_t = 3)]
        steps: usize,
        /// Append a final step with no incomplete vertices.
        #[arg(long)]
        complete: bool,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long, default_value_t = 20)]
    vertices: usize,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
    #[arg(long, default_value_t = 0)]
    min_priority: u32,
    #[arg(long, default_value_t = 5)]
    max_priority: u32,
    #[arg(long, default_value_t = 0.05)]
    sink_probability: f64,
    #[arg(long, default_value_t = 0.2)]
    incomplete: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl RandomArgs {
    fn spec(&self) -> GenSpec {
        GenSpec {
            vertex_count: self.vertices,
            max_out_degree: self.max_degree,
            priority_range: self.min_priority..=self.max_priority,
            sink_probability: self.sink_probability,
            incomplete_fraction: self.incomplete,
            seed: self.seed,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum PlayerArg {
    Even,
    Odd,
}

fn solver_parser() -> impl clap::builder::TypedValueParser<Value = SolverKind> {
    PossibleValuesParser::new(SolverKind::ALL.map(SolverKind::name))
        .map(|name| name.parse::<SolverKind>().expect("listed solver name"))
}

fn parse_ratio(s: &str) -> Result<f64, String> {
    let r: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if r > 0.0 && r <= 1.0 {
        Ok(r)
    } else {
        Err(format!("{r} is not in (0, 1]"))
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => Ok(std::io::stdout().lock().write_all(text.as_bytes())?),
    }
}

fn load(path: &Path) -> Result<ParsedGame> {
    read_game(path).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            file,
            solver,
            player,
            output,
        } => {
            let parsed = load(&file)?;
            let players = match player {
                Some(PlayerArg::Even) => vec![Player::Even],
                Some(PlayerArg::Odd) => vec![Player::Odd],
                None => Player::BOTH.to_vec(),
            };
            let started = Instant::now();
            let solution = solve(&parsed.game, solver, &players);
            let summary = Summary {
                explored: parsed.ids.len() as u64,
                solver_calls: 1,
                explore_ms: 0,
                solve_ms: started.elapsed().as_millis() as u64,
            };
            let result = ResultFile::from_solution(&parsed, &solution, summary);
            emit(output.as_deref(), &result.to_string())?;
        }
        Command::Explore {
            universe,
            root,
            designated,
            solver,
            strategy,
            ratio,
            seed,
            batch,
            logical_cost,
            output,
        } => {
            let parsed = load(&universe)?;
            let vertex = |id: u64| {
                parsed
                    .vertex(id)
                    .ok_or_else(|| anyhow!("vertex {id} is not in {}", universe.display()))
            };
            let (root, designated) = (vertex(root)?, vertex(designated)?);
            let cfg = DriverConfig {
                solver,
                strategy: ExplorationStrategy::from_name(&strategy, seed).expect("listed strategy name"),
                solve_time_ratio: ratio,
                batch_min: batch as usize,
                cost_mode: if logical_cost {
                    CostMode::Logical
                } else {
                    CostMode::WallClock
                },
                verify_chain: false,
            };
            let report = run_driver(
                &mut GameExpander::new(parsed.game.game()),
                root,
                &designated,
                &cfg,
            )?;
            let mut entries: Vec<ResultEntry> = report
                .game
                .vertices()
                .iter()
                .map(|v| ResultEntry {
                    id: parsed.file_id(report.states[v.index()]),
                    winner: report.final_solution.winner(v),
                    strategy: report
                        .final_solution
                        .strategy
                        .get(&v)
                        .map(|w| parsed.file_id(report.states[w.index()])),
                })
                .collect();
            entries.sort_by_key(|e| e.id);
            let result = ResultFile {
                entries,
                designated: Some((parsed.file_id(designated), report.decided_winner)),
                summary: Summary {
                    explored: report.vertices_explored as u64,
                    solver_calls: report.solver_calls as u64,
                    explore_ms: report.explore_time.as_millis() as u64,
                    solve_ms: report.solve_time.as_millis() as u64,
                },
            };
            emit(output.as_deref(), &result.to_string())?;
        }
        Command::Gen { kind } => generate(kind)?,
        Command::Oracle { file, output } => {
            let parsed = load(&file)?;
            let started = Instant::now();
            let solution = brute_force_oracle(parsed.game.game())?;
            let summary = Summary {
                explored: parsed.ids.len() as u64,
                solver_calls: 1,
                explore_ms: 0,
                solve_ms: started.elapsed().as_millis() as u64,
            };
            emit(output.as_deref(), &ResultFile::from_solution(&parsed, &solution, summary).to_string())?;
        }
        Command::CheckExtension { first, second } => {
            let (a, b) = (load(&first)?, load(&second)?);
            let holds = a.aligned_to(&b).is_some_and(|a| check_extension(&a, &b.game));
            println!("{holds}");
            return Ok(if holds { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn generate(kind: GenCommand) -> Result<()> {
    match kind {
        GenCommand::Random { spec, output } => {
            let game = gen_random(&spec.spec())?;
            emit(output.as_deref(), &serialize_game(&ParsedGame::from_game(game)))
        }
        GenCommand::Safety {
            depth,
            violation,
            output,
        } => {
            let game = IncompleteGame::complete(gen_safety_family(depth, violation)?);
            emit(output.as_deref(), &serialize_game(&ParsedGame::from_game(game)))
        }
        GenCommand::ExtensionChain {
            spec,
            steps,
            complete,
            out_dir,
        } => {
            fs::create_dir_all(&out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
            let write = |step: usize, game: IncompleteGame| {
                let path = out_dir.join(format!("step-{step}.pg"));
                emit(Some(&path), &serialize_game(&ParsedGame::from_game(game)))
            };
            let mut game = gen_random(&spec.spec())?;
            write(0, game.clone())?;
            for step in 1..=steps {
                game = gen_extension(&game, spec.seed.wrapping_mul(1_000_003).wrapping_add(step as u64));
                write(step, game.clone())?;
            }
            if complete {
                write(steps + 1, IncompleteGame::complete(complete_extension(&game, spec.seed)))?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
