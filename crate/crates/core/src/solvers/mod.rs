//! Full and partial solvers, and the per-kind dispatch used by the driver
//! and the command line.

mod fatal;
mod oracle;
mod partial;
mod zielonka;

use std::fmt;
use std::str::FromStr;

pub use fatal::{fatal_attractors, fatal_set, safe_fatal_attractors, safe_fatal_set};
pub use oracle::{brute_force_oracle, brute_force_oracle_with, OracleError, DEFAULT_ORACLE_CAP};
pub use partial::{
    forced_cycles, safe_forced_cycles, solitaire_cycles, solve_on_safe, Dominion,
};
pub use zielonka::zielonka;

use crate::fixpoints::sattr;
use crate::game::{IncompleteGame, Player, Solution, Strategy};
use crate::vertex_set::VertexSet;
use partial::{on_safe_subgame, with_safe_attractor};

/// The solving strategies offered during exploration. The `*Safe` variants
/// use safe attractors directly; the others restrict to the safe subgame.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SolverKind {
    /// Zielonka on the whole game, treated as complete.
    Full,
    Solitaire,
    SolitaireSafe,
    Cycles,
    CyclesSafe,
    Fatal,
    FatalSafe,
    /// Zielonka on each player's safe subgame.
    Partial,
}

impl SolverKind {
    pub const ALL: [SolverKind; 8] = [
        SolverKind::Full,
        SolverKind::Solitaire,
        SolverKind::SolitaireSafe,
        SolverKind::Cycles,
        SolverKind::CyclesSafe,
        SolverKind::Fatal,
        SolverKind::FatalSafe,
        SolverKind::Partial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Full => "full",
            SolverKind::Solitaire => "solitaire",
            SolverKind::SolitaireSafe => "solitaire-safe",
            SolverKind::Cycles => "cycles",
            SolverKind::CyclesSafe => "cycles-safe",
            SolverKind::Fatal => "fatal",
            SolverKind::FatalSafe => "fatal-safe",
            SolverKind::Partial => "partial",
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown solver `{0}`")]
pub struct UnknownSolver(String);

impl FromStr for SolverKind {
    type Err = UnknownSolver;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SolverKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownSolver(s.to_owned()))
    }
}

/// Runs the routine of `kind` once on `g`, for the given players.
///
/// `Full` ignores the incomplete set and returns a total solution of the
/// current graph. Every other kind returns only regions that no extension of
/// `g` can overturn.
pub fn solve(g: &IncompleteGame, kind: SolverKind, players: &[Player]) -> Solution {
    match kind {
        SolverKind::Full => return zielonka(g.game()),
        SolverKind::Fatal | SolverKind::FatalSafe => {
            let mut sol = if kind == SolverKind::Fatal {
                fatal_attractors(g)
            } else {
                safe_fatal_attractors(g)
            };
            for p in Player::BOTH.into_iter().filter(|p| !players.contains(p)) {
                let dropped = match p {
                    Player::Even => std::mem::take(&mut sol.won_even),
                    Player::Odd => std::mem::take(&mut sol.won_odd),
                };
                sol.strategy.retain(|v, _| !dropped.contains(*v));
                sol.undecided.union_with(&dropped);
            }
            return sol;
        }
        _ => {}
    }

    let mut won = [VertexSet::new(), VertexSet::new()];
    let mut strategy = Strategy::new();
    for &p in players {
        let found = match kind {
            SolverKind::Solitaire => on_safe_subgame(g, p, solitaire_cycles),
            SolverKind::SolitaireSafe => with_safe_attractor(g, p, solitaire_cycles),
            SolverKind::Cycles => on_safe_subgame(g, p, forced_cycles),
            SolverKind::CyclesSafe => with_safe_attractor(g, p, safe_forced_cycles),
            SolverKind::Partial => solve_on_safe(g, p, |h| zielonka(h.game())),
            SolverKind::Full | SolverKind::Fatal | SolverKind::FatalSafe => unreachable!(),
        };
        won[p.index()].union_with(&found.set);
        strategy.extend(found.strategy);
    }
    debug_assert!(won[0].is_disjoint(&won[1]), "{kind} claimed a vertex for both players");
    let [even, odd] = won;
    Solution::from_regions(g.vertices(), even, odd, strategy)
}

/// Grows previously established regions on a (possibly extended) game.
///
/// Known regions are first closed under safe attraction together with the
/// complete sinks lost by the opponent. The routine of `kind` then runs on
/// the still-undecided part and its findings are closed again. Regions only
/// grow; a vertex never changes winner. `Full` falls back to `Partial` while
/// `g` has incomplete vertices.
pub fn refine(g: &IncompleteGame, kind: SolverKind, players: &[Player], known: &mut Solution) {
    let kind = if kind == SolverKind::Full && !g.incomplete().is_empty() {
        SolverKind::Partial
    } else {
        kind
    };

    for &p in players {
        let lost_sinks = g.game().sinks_of(p.opponent()).difference(g.incomplete());
        let target = known.region(p).union(&lost_sinks);
        close(g, p, target, known);
    }

    let open = g
        .vertices()
        .difference(&known.won_even)
        .difference(&known.won_odd);
    if !open.is_empty() {
        let found = solve(&g.subgame(&open), kind, players);
        for (&v, &w) in &found.strategy {
            known.strategy.entry(v).or_insert(w);
        }
        for &p in players {
            let target = known.region(p).union(found.region(p));
            close(g, p, target, known);
        }
    }
    known.undecided = g
        .vertices()
        .difference(&known.won_even)
        .difference(&known.won_odd);
}

fn close(g: &IncompleteGame, p: Player, target: VertexSet, known: &mut Solution) {
    let closure = sattr(g, p, &target);
    for (v, w) in closure.strategy {
        if !target.contains(v) {
            known.strategy.insert(v, w);
        }
    }
    debug_assert!(
        closure.set.is_disjoint(known.region(p.opponent())),
        "safe attractor crossed into the opponent's region"
    );
    match p {
        Player::Even => known.won_even = closure.set,
        Player::Odd => known.won_odd = closure.set,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::{Game, VertexId};

    fn ids(v: &[usize]) -> VertexSet {
        v.iter().map(|&i| VertexId::new(i)).collect()
    }

    #[test]
    fn names_round_trip() {
        for k in SolverKind::ALL {
            assert_eq!(k.name().parse::<SolverKind>().unwrap(), k);
        }
        assert!("zielonka".parse::<SolverKind>().is_err());
    }

    #[test]
    fn every_kind_is_consistent_with_full_on_snapshot() {
        let g = fixtures::six_vertex_snapshot();
        let full = solve(&g, SolverKind::Full, &Player::BOTH);
        for kind in SolverKind::ALL {
            let sol = solve(&g, kind, &Player::BOTH);
            assert_eq!(sol.validate(g.game()), Ok(()), "{kind}");
            assert!(sol.won_even.is_subset(&full.won_even), "{kind}");
            assert!(sol.won_odd.is_subset(&full.won_odd), "{kind}");
        }
        let partial = solve(&g, SolverKind::Partial, &Player::BOTH);
        assert_eq!(partial.won_even, ids(&[0, 1, 2, 3]));
    }

    #[test]
    fn player_filter_drops_other_region() {
        let g = IncompleteGame::complete(fixtures::five_vertex_game());
        for kind in [SolverKind::Fatal, SolverKind::Partial, SolverKind::SolitaireSafe] {
            let sol = solve(&g, kind, &[Player::Even]);
            assert!(sol.won_odd.is_empty(), "{kind}");
            assert_eq!(sol.validate(g.game()), Ok(()), "{kind}");
        }
    }

    #[test]
    fn refine_attracts_towards_complete_sinks() {
        // chain 0 -> 1 -> 2 (Even sink), all Odd-owned except the sink
        let game = Game::from_edges(
            &[(Player::Odd, 0), (Player::Odd, 0), (Player::Even, 0)],
            &[(0, 1), (1, 2)],
        );
        let g = IncompleteGame::new(game, ids(&[0])).unwrap();
        let mut known = Solution::default();
        refine(&g, SolverKind::SolitaireSafe, &Player::BOTH, &mut known);
        assert_eq!(known.won_odd, ids(&[0, 1, 2]));
        assert_eq!(known.validate(g.game()), Ok(()));

        // an incomplete sink may still gain successors
        let g = IncompleteGame::new(g.game().clone(), ids(&[2])).unwrap();
        let mut known = Solution::default();
        refine(&g, SolverKind::SolitaireSafe, &Player::BOTH, &mut known);
        assert!(known.won_odd.is_empty());
    }
}
