use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::game::{IncompleteGame, Player, Solution, VertexId};
use crate::solvers::{refine, zielonka, SolverKind};
use crate::work;

use super::builder::IncrementalGame;
use super::frontier::{ExplorationStrategy, Frontier};
use super::{Expander, ExplorationError};

/// What the solve-time budget is measured in.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum CostMode {
    /// Monotonic wall-clock time.
    #[default]
    WallClock,
    /// Work units reported by the operators; one unit per expansion plus
    /// one per discovered edge on the exploration side. Reproducible.
    Logical,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DriverConfig {
    pub solver: SolverKind,
    pub strategy: ExplorationStrategy,
    /// Share of the total cost that solving may take, in `(0, 1]`.
    pub solve_time_ratio: f64,
    /// Expansions between two checks of the budget.
    pub batch_min: usize,
    pub cost_mode: CostMode,
    /// Check at every solver call that the snapshot extends the previous
    /// one and that no decided vertex was lost or flipped.
    pub verify_chain: bool,
}

impl Default for DriverConfig {
    fn default() -> Self {
        Self {
            solver: SolverKind::Partial,
            strategy: ExplorationStrategy::Bfs,
            solve_time_ratio: 0.10,
            batch_min: 64,
            cost_mode: CostMode::WallClock,
            verify_chain: cfg!(debug_assertions),
        }
    }
}

impl DriverConfig {
    pub fn new(solver: SolverKind) -> Self {
        Self {
            solver,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), ExplorationError> {
        if !(self.solve_time_ratio > 0.0 && self.solve_time_ratio <= 1.0) {
            return Err(ExplorationError::InvalidConfig(format!(
                "solve time ratio {} is not in (0, 1]",
                self.solve_time_ratio
            )));
        }
        if self.batch_min == 0 {
            return Err(ExplorationError::InvalidConfig("batch size must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct DriverReport<S> {
    pub decided_winner: Option<Player>,
    /// The designated state's id in the explored game, if it was reached.
    pub designated: Option<VertexId>,
    /// Vertices discovered, expanded or not.
    pub vertices_explored: usize,
    pub vertices_expanded: usize,
    /// Partial solver calls plus the final full solve, if any.
    pub solver_calls: usize,
    pub explore_time: Duration,
    pub solve_time: Duration,
    pub explore_cost: u64,
    pub solve_cost: u64,
    /// Whether every reachable vertex was expanded.
    pub exhausted: bool,
    pub final_solution: Solution,
    pub game: IncompleteGame,
    /// The state behind each vertex id.
    pub states: Vec<S>,
}

impl<S> DriverReport<S> {
    pub fn total_cost(&self) -> u64 {
        self.explore_cost + self.solve_cost
    }
}

/// Explores from `root` until the winner of `designated` is known.
pub fn run_driver<E: Expander>(
    expander: &mut E,
    root: E::State,
    designated: &E::State,
    cfg: &DriverConfig,
) -> Result<DriverReport<E::State>, ExplorationError> {
    run_driver_observed(expander, root, designated, cfg, |_, _| {})
}

/// Like [`run_driver`], calling `observe` with the snapshot and the known
/// regions after every solver call.
pub fn run_driver_observed<E, F>(
    expander: &mut E,
    root: E::State,
    designated: &E::State,
    cfg: &DriverConfig,
    mut observe: F,
) -> Result<DriverReport<E::State>, ExplorationError>
where
    E: Expander,
    F: FnMut(&IncompleteGame, &Solution),
{
    cfg.validate()?;
    let mut run = Run {
        expander,
        builder: IncrementalGame::new(),
        ids: HashMap::new(),
        states: Vec::new(),
        frontier: Frontier::new(cfg.strategy),
    };
    run.discover(root)?;

    let mut known = Solution::default();
    let mut previous: Option<(IncompleteGame, Solution)> = None;
    let mut stats = Stats::default();
    let mut decided = None;

    let exhausted = loop {
        let started = Instant::now();
        let mut batch = 0;
        while batch < cfg.batch_min {
            let Some(cost) = run.expand_next()? else { break };
            stats.explore_cost += cost;
            stats.expanded += 1;
            batch += 1;
        }
        stats.explore_time += started.elapsed();
        if run.frontier.is_empty() {
            break true;
        }
        if cfg.solver == SolverKind::Full || !stats.may_solve(cfg) {
            continue;
        }

        let started = Instant::now();
        let snapshot = run.builder.snapshot();
        let ((), units) = work::measure(|| refine(snapshot, cfg.solver, &Player::BOTH, &mut known));
        stats.solve_time += started.elapsed();
        stats.solve_cost += units;
        stats.calls += 1;

        if cfg.verify_chain {
            if let Some((game, sol)) = &previous {
                assert!(game.is_extended_by(snapshot), "snapshots do not form a chain");
                for p in Player::BOTH {
                    assert!(
                        sol.region(p).is_subset(known.region(p)),
                        "decided vertices of {p} were lost"
                    );
                }
            }
            previous = Some((snapshot.clone(), known.clone()));
        }
        observe(snapshot, &known);

        decided = run.id_of(designated).and_then(|d| known.winner(d));
        if decided.is_some() {
            break false;
        }
    };

    let final_solution = if exhausted {
        let started = Instant::now();
        let snapshot = run.builder.snapshot();
        let (full, units) = work::measure(|| zielonka(snapshot.game()));
        stats.solve_time += started.elapsed();
        stats.solve_cost += units;
        stats.calls += 1;
        for p in Player::BOTH {
            debug_assert!(
                known.region(p).is_subset(full.region(p)),
                "a partial solver disagreed with the full solution"
            );
        }
        observe(snapshot, &full);
        decided = run.id_of(designated).and_then(|d| full.winner(d));
        full
    } else {
        known
    };

    let designated = run.id_of(designated);
    Ok(DriverReport {
        decided_winner: decided,
        designated,
        vertices_explored: run.states.len(),
        vertices_expanded: stats.expanded,
        solver_calls: stats.calls,
        explore_time: stats.explore_time,
        solve_time: stats.solve_time,
        explore_cost: stats.explore_cost,
        solve_cost: stats.solve_cost,
        exhausted,
        final_solution,
        game: run.builder.into_snapshot(),
        states: run.states,
    })
}

#[derive(Default)]
struct Stats {
    explore_time: Duration,
    solve_time: Duration,
    explore_cost: u64,
    solve_cost: u64,
    expanded: usize,
    calls: usize,
}

impl Stats {
    fn may_solve(&self, cfg: &DriverConfig) -> bool {
        match cfg.cost_mode {
            CostMode::WallClock => {
                let solve = self.solve_time.as_secs_f64();
                solve < cfg.solve_time_ratio * (solve + self.explore_time.as_secs_f64())
            }
            CostMode::Logical => {
                let solve = self.solve_cost as f64;
                solve < cfg.solve_time_ratio * (solve + self.explore_cost as f64)
            }
        }
    }
}

struct Run<'e, E: Expander> {
    expander: &'e mut E,
    builder: IncrementalGame,
    ids: HashMap<E::State, VertexId>,
    states: Vec<E::State>,
    frontier: Frontier,
}

impl<E: Expander> Run<'_, E> {
    fn id_of(&self, state: &E::State) -> Option<VertexId> {
        self.ids.get(state).copied()
    }

    fn discover(&mut self, state: E::State) -> Result<VertexId, ExplorationError> {
        if let Some(&v) = self.ids.get(&state) {
            return Ok(v);
        }
        let (owner, priority) = self
            .expander
            .describe(&state)
            .map_err(ExplorationError::Expander)?;
        let v = self.builder.add_vertex(owner, priority);
        self.ids.insert(state.clone(), v);
        self.states.push(state);
        self.frontier.push(v, priority);
        Ok(v)
    }

    /// Expands one frontier vertex; returns its cost, or `None` when the
    /// frontier is empty.
    fn expand_next(&mut self) -> Result<Option<u64>, ExplorationError> {
        let Some(v) = self.frontier.pop() else {
            return Ok(None);
        };
        let state = self.states[v.index()].clone();
        let next = self
            .expander
            .successors(&state)
            .map_err(ExplorationError::Expander)?;
        let mut successors = Vec::with_capacity(next.len());
        for s in next {
            successors.push(self.discover(s)?);
        }
        self.builder.expand(v, &successors)?;
        Ok(Some(1 + successors.len() as u64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exploration::GameExpander;
    use crate::fixtures;
    use crate::game::{Game, Player::*, Priority};
    use crate::solvers::zielonka;

    #[test]
    fn six_vertex_universe_decides_u3_for_even() {
        let universe = fixtures::six_vertex_universe();
        for kind in SolverKind::ALL {
            let mut cfg = DriverConfig::new(kind);
            cfg.batch_min = 1;
            cfg.solve_time_ratio = 1.0;
            let report = run_driver(
                &mut GameExpander::new(&universe),
                VertexId::new(4),
                &VertexId::new(3),
                &cfg,
            )
            .unwrap();
            assert_eq!(report.decided_winner, Some(Even), "{kind}");
        }
    }

    #[test]
    fn full_solver_matches_offline_solution() {
        let universe = fixtures::five_vertex_game();
        let mut cfg = DriverConfig::new(SolverKind::Full);
        cfg.solve_time_ratio = 1.0;
        let report = run_driver(
            &mut GameExpander::new(&universe),
            VertexId::new(0),
            &VertexId::new(3),
            &cfg,
        )
        .unwrap();
        assert!(report.exhausted);
        assert_eq!(report.solver_calls, 1);
        assert_eq!(report.decided_winner, Some(Odd));
        let offline = zielonka(&universe);
        for (i, &s) in report.states.iter().enumerate() {
            assert_eq!(report.final_solution.winner(VertexId::new(i)), offline.winner(s));
        }
    }

    #[test]
    fn unreachable_designated_vertex_is_undecided() {
        let universe = Game::from_edges(&[(Even, 0), (Odd, 1)], &[(0, 0), (1, 1)]);
        let report = run_driver(
            &mut GameExpander::new(&universe),
            VertexId::new(0),
            &VertexId::new(1),
            &DriverConfig::new(SolverKind::Partial),
        )
        .unwrap();
        assert!(report.exhausted);
        assert_eq!(report.decided_winner, None);
        assert_eq!(report.designated, None);
    }

    #[test]
    fn invalid_configuration_is_rejected() {
        let universe = fixtures::five_vertex_game();
        let mut cfg = DriverConfig::new(SolverKind::Partial);
        cfg.solve_time_ratio = 0.0;
        let err = run_driver(&mut GameExpander::new(&universe), VertexId::new(0), &VertexId::new(0), &cfg);
        assert!(matches!(err, Err(ExplorationError::InvalidConfig(_))));
        cfg.solve_time_ratio = 0.5;
        cfg.batch_min = 0;
        let err = run_driver(&mut GameExpander::new(&universe), VertexId::new(0), &VertexId::new(0), &cfg);
        assert!(matches!(err, Err(ExplorationError::InvalidConfig(_))));
    }

    struct Failing;

    impl Expander for Failing {
        type State = u8;

        fn describe(&self, _: &u8) -> Result<(Player, Priority), crate::exploration::BoxError> {
            Ok((Even, Priority(0)))
        }

        fn successors(&mut self, _: &u8) -> Result<Vec<u8>, crate::exploration::BoxError> {
            Err("disk on fire".into())
        }
    }

    #[test]
    fn expander_errors_propagate() {
        let err = run_driver(&mut Failing, 0, &0, &DriverConfig::default());
        assert!(matches!(err, Err(ExplorationError::Expander(_))));
    }

    #[test]
    fn observer_sees_growing_knowledge() {
        let universe = fixtures::six_vertex_universe();
        let mut cfg = DriverConfig::new(SolverKind::CyclesSafe);
        cfg.batch_min = 1;
        cfg.solve_time_ratio = 1.0;
        cfg.verify_chain = true;
        let mut seen = Vec::new();
        run_driver_observed(
            &mut GameExpander::new(&universe),
            VertexId::new(4),
            &VertexId::new(1),
            &cfg,
            |g, sol| seen.push((g.vertices().len(), sol.won_even.len() + sol.won_odd.len())),
        )
        .unwrap();
        assert!(seen.windows(2).all(|w| w[0].0 <= w[1].0 && w[0].1 <= w[1].1));
    }
}
