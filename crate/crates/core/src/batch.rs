//! Independent solver and driver runs over many games at once.

use crate::exploration::{run_driver, DriverConfig, ExplorationError, GameExpander};
use crate::game::{Game, IncompleteGame, Player, Solution, VertexId};
use crate::par::{self, ExecMode};
use crate::solvers::{brute_force_oracle_with, solve, OracleError, SolverKind, DEFAULT_ORACLE_CAP};

/// Runs `kind` for both players on every game.
pub fn solve_all(mode: ExecMode, games: &[IncompleteGame], kind: SolverKind) -> Vec<Solution> {
    par::map(mode, games, |g| solve(g, kind, &Player::BOTH))
}

/// Runs the exhaustive oracle on every game, each sequentially inside.
pub fn oracle_all(mode: ExecMode, games: &[Game]) -> Vec<Result<Solution, OracleError>> {
    par::map(mode, games, |g| {
        brute_force_oracle_with(g, DEFAULT_ORACLE_CAP, ExecMode::Sequential)
    })
}

/// One on-the-fly run over a stored universe.
#[derive(Clone, Debug)]
pub struct SweepJob {
    pub universe: Game,
    pub root: VertexId,
    pub designated: VertexId,
    pub config: DriverConfig,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOutcome {
    pub decided_winner: Option<Player>,
    pub vertices_explored: usize,
    pub solver_calls: usize,
    pub explore_cost: u64,
    pub solve_cost: u64,
}

pub fn driver_sweep(mode: ExecMode, jobs: &[SweepJob]) -> Vec<Result<SweepOutcome, ExplorationError>> {
    par::map(mode, jobs, |job| {
        let report = run_driver(
            &mut GameExpander::new(&job.universe),
            job.root,
            &job.designated,
            &job.config,
        )?;
        Ok(SweepOutcome {
            decided_winner: report.decided_winner,
            vertices_explored: report.vertices_explored,
            solver_calls: report.solver_calls,
            explore_cost: report.explore_cost,
            solve_cost: report.solve_cost,
        })
    })
}
