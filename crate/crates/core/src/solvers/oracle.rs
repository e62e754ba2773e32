//! Exhaustive reference solver for small games.
//!
//! Enumerates every positional strategy of Even. For a fixed strategy the
//! game collapses to a one-player graph for Odd, where Odd wins from `v` iff
//! it can reach an Even-owned sink or a cycle whose least priority is odd.
//! By positional determinacy, Even wins `v` iff some strategy leaves Odd no
//! such escape from `v`. No attractor or recursive machinery is shared with
//! the real solvers.

use thiserror::Error;

use crate::game::{Game, Player, Solution, Strategy, VertexId};
use crate::par::{self, ExecMode};
use crate::vertex_set::VertexSet;

pub const DEFAULT_ORACLE_CAP: usize = 12;

/// Upper bound on the number of Even strategies enumerated.
pub const STRATEGY_LIMIT: u64 = 1 << 28;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("game has {vertices} vertices; the oracle is capped at {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("game has {0} Even strategies; too many to enumerate")]
    TooManyStrategies(u128),
}

/// Solves `game` by enumeration, refusing games above the default cap.
pub fn brute_force_oracle(game: &Game) -> Result<Solution, OracleError> {
    brute_force_oracle_with(game, DEFAULT_ORACLE_CAP, ExecMode::default())
}

pub fn brute_force_oracle_with(
    game: &Game,
    cap: usize,
    mode: ExecMode,
) -> Result<Solution, OracleError> {
    let n = game.len();
    if n > cap.min(64) {
        return Err(OracleError::TooLarge { vertices: n, cap });
    }
    let graph = Compact::new(game);
    let total: u128 = graph.choices.iter().map(|c| c.len() as u128).product();
    if total > STRATEGY_LIMIT as u128 {
        return Err(OracleError::TooManyStrategies(total));
    }

    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let even_mask = par::fold_range(
        mode,
        0..total as u64,
        || 0u64,
        |acc, index| {
            if acc == all {
                acc
            } else {
                acc | (all & !graph.odd_wins(index))
            }
        },
        |a, b| a | b,
    );

    let mut won_even = VertexSet::new();
    for (i, &v) in graph.ids.iter().enumerate() {
        if even_mask & (1 << i) != 0 {
            won_even.insert(v);
        }
    }
    let won_odd = game.vertices().difference(&won_even);
    Ok(Solution::from_regions(
        game.vertices(),
        won_even,
        won_odd,
        Strategy::new(),
    ))
}

/// The game relabelled onto bit positions `0..n`.
struct Compact {
    ids: Vec<VertexId>,
    priority: Vec<u32>,
    succ: Vec<u64>,
    /// Per Even non-sink vertex: (its position, its successor positions).
    choices: Vec<Vec<usize>>,
    choosers: Vec<usize>,
    even_sinks: u64,
}

impl Compact {
    fn new(game: &Game) -> Self {
        let ids: Vec<VertexId> = game.vertices().iter().collect();
        let pos = |v: VertexId| ids.binary_search(&v).expect("successor inside game");
        let mut succ = vec![0u64; ids.len()];
        let mut choices = Vec::new();
        let mut choosers = Vec::new();
        let mut even_sinks = 0;
        for (i, &v) in ids.iter().enumerate() {
            let targets: Vec<usize> = game.successors(v).iter().map(|&w| pos(w)).collect();
            for &t in &targets {
                succ[i] |= 1 << t;
            }
            match (game.owner(v), targets.is_empty()) {
                (Player::Even, true) => even_sinks |= 1 << i,
                (Player::Even, false) => {
                    choosers.push(i);
                    choices.push(targets);
                }
                _ => {}
            }
        }
        let priority = ids.iter().map(|&v| game.priority(v).0).collect();
        Compact {
            ids,
            priority,
            succ,
            choices,
            choosers,
            even_sinks,
        }
    }

    /// Vertices from which Odd wins once Even fixes strategy number `index`.
    fn odd_wins(&self, mut index: u64) -> u64 {
        let n = self.ids.len();
        let mut succ = self.succ.clone();
        for (k, &i) in self.choosers.iter().enumerate() {
            let options = &self.choices[k];
            let pick = options[(index % options.len() as u64) as usize];
            index /= options.len() as u64;
            succ[i] = 1 << pick;
        }

        let mut bad = self.even_sinks;
        for i in 0..n {
            let p = self.priority[i];
            if p % 2 == 1 {
                let allowed = (0..n)
                    .filter(|&j| self.priority[j] >= p)
                    .fold(0u64, |m, j| m | 1 << j);
                if reaches(&succ, allowed, 1 << i, i) {
                    bad |= 1 << i;
                }
            }
        }
        // backward closure: everything that can reach a bad vertex
        let mut winning = bad;
        loop {
            let mut next = winning;
            for (j, &s) in succ.iter().enumerate() {
                if s & winning != 0 {
                    next |= 1 << j;
                }
            }
            if next == winning {
                return winning;
            }
            winning = next;
        }
    }
}

/// Whether `goal` is reachable from `start` in at least one step using only
/// vertices in `allowed`.
fn reaches(succ: &[u64], allowed: u64, start: u64, goal: usize) -> bool {
    let mut frontier = start;
    let mut seen = 0u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let i = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= succ[i] & allowed;
        }
        if next & (1 << goal) != 0 {
            return true;
        }
        frontier = next & !seen;
        seen |= next;
    }
    false
}
