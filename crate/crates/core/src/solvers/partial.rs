//! Partial solvers that look for dominions of a particular shape.
//!
//! Each detector comes in two flavours: one that first restricts the game
//! to the player's safe set and one that works on the whole incomplete game
//! through the safe operators. Both return the same vertices.

use crate::fixpoints::{attr, closed_core, safe_set, sattr};
use crate::game::{IncompleteGame, Player, Solution, Strategy};
use crate::vertex_set::VertexSet;

/// A set won by `player` in every extension, with `player`'s positional
/// choices inside it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dominion {
    pub set: VertexSet,
    pub strategy: Strategy,
}

impl Dominion {
    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// Extends the dominion by an attractor result computed towards it.
    /// Target vertices keep their original choices.
    pub(crate) fn absorb(&mut self, attracted: crate::fixpoints::AttractorResult) {
        for (v, w) in attracted.strategy {
            if !self.set.contains(v) {
                self.strategy.insert(v, w);
            }
        }
        self.set = attracted.set;
    }
}

/// The `player`-won region of `inner` applied to the `player`-safe subgame.
pub fn solve_on_safe<F>(g: &IncompleteGame, player: Player, inner: F) -> Dominion
where
    F: FnOnce(&IncompleteGame) -> Solution,
{
    let safe = g.subgame(&safe_set(g, player));
    let solution = inner(&safe);
    let set = solution.region(player).clone();
    let strategy = solution
        .strategy
        .into_iter()
        .filter(|(v, _)| set.contains(*v) && g.game().owner(*v) == player)
        .collect();
    Dominion { set, strategy }
}

/// Vertices on cycles that `player` owns entirely and whose priorities all
/// favour `player`: `νZ. P_player ∩ V_player ∩ pre(Z)`.
pub fn solitaire_cycles(g: &IncompleteGame, player: Player) -> Dominion {
    let game = g.game();
    let candidates = game.parity_class(player).intersection(&game.owned_by(player));
    let core = closed_core(game, player, &candidates);
    Dominion {
        set: core.set,
        strategy: core.strategy,
    }
}

/// Winning forced cycles computed against the safe set:
/// `νZ. P_player ∩ safe ∩ cpre(Z)`.
pub fn forced_cycles(g: &IncompleteGame, player: Player) -> Dominion {
    let candidates = g.game().parity_class(player).intersection(&safe_set(g, player));
    let core = closed_core(g.game(), player, &candidates);
    Dominion {
        set: core.set,
        strategy: core.strategy,
    }
}

/// Winning forced cycles through the safe control predecessor:
/// `νZ. P_player ∩ spre(Z)`. Never computes the safe set.
pub fn safe_forced_cycles(g: &IncompleteGame, player: Player) -> Dominion {
    let game = g.game();
    let escapes = game.owned_by(player.opponent()).intersection(g.incomplete());
    let candidates = game.parity_class(player).difference(&escapes);
    let core = closed_core(game, player, &candidates);
    Dominion {
        set: core.set,
        strategy: core.strategy,
    }
}

/// Runs a cycle detector on the safe subgame and closes the result under the
/// standard attractor of that subgame.
pub(crate) fn on_safe_subgame(
    g: &IncompleteGame,
    player: Player,
    detect: impl FnOnce(&IncompleteGame, Player) -> Dominion,
) -> Dominion {
    let safe = g.subgame(&safe_set(g, player));
    let mut found = detect(&safe, player);
    if !found.is_empty() {
        let closure = attr(&safe, player, &found.set);
        found.absorb(closure);
    }
    found
}

/// Runs a detector on the whole incomplete game and closes the result under
/// the safe attractor.
pub(crate) fn with_safe_attractor(
    g: &IncompleteGame,
    player: Player,
    detect: impl FnOnce(&IncompleteGame, Player) -> Dominion,
) -> Dominion {
    let mut found = detect(g, player);
    if !found.is_empty() {
        let closure = sattr(g, player, &found.set);
        found.absorb(closure);
    }
    found
}
