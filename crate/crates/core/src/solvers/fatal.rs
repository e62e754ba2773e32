//! Fatal attractors: sets of priority-`c` vertices that the player of
//! parity `c` can force back to themselves without passing a lower priority.
//!
//! The sweep visits each priority once, highest first, and removes every
//! dominion it finds (closed under an attractor) before moving on.

use crate::fixpoints::{attr, mattr, safe_set, sattr, smattr};
use crate::game::{IncompleteGame, Player, Priority, Solution, Strategy};
use crate::solvers::partial::Dominion;
use crate::vertex_set::VertexSet;

/// Largest `Z ⊆ P^{=c} ∩ safe` with `Z ⊆ mattr(G ∩ safe, Z, c)`.
pub fn fatal_set(g: &IncompleteGame, player: Player, c: Priority) -> VertexSet {
    let safe = g.subgame(&safe_set(g, player));
    fatal_core(&safe, player, c, false)
}

/// Largest `Z ⊆ P^{=c}` with `Z ⊆ smattr(G, Z, c)`; equals [`fatal_set`].
pub fn safe_fatal_set(g: &IncompleteGame, player: Player, c: Priority) -> VertexSet {
    fatal_core(g, player, c, true)
}

fn fatal_core(g: &IncompleteGame, player: Player, c: Priority, safe: bool) -> VertexSet {
    let mut z = g.game().priority_exactly(c);
    while !z.is_empty() {
        let back = if safe {
            smattr(g, player, &z, c)
        } else {
            mattr(g, player, &z, c)
        };
        let next = z.intersection(&back.set);
        if next == z {
            break;
        }
        z = next;
    }
    z
}

/// Descending-priority sweep over fatal attractors, each found on the safe
/// subgame of the current working game.
pub fn fatal_attractors(g: &IncompleteGame) -> Solution {
    sweep(g, false)
}

/// Descending-priority sweep using the safe monotone attractor; returns the
/// same regions as [`fatal_attractors`] without computing safe sets.
pub fn safe_fatal_attractors(g: &IncompleteGame) -> Solution {
    sweep(g, true)
}

fn sweep(g: &IncompleteGame, safe: bool) -> Solution {
    let mut working = g.clone();
    let mut won = [VertexSet::new(), VertexSet::new()];
    let mut strategy = Strategy::new();

    for &c in g.game().priorities().iter().rev() {
        let player = c.parity();
        let found = if safe {
            safe_dominion(&working, player, c)
        } else {
            subgame_dominion(&working, player, c)
        };
        let Some(dominion) = found else { continue };
        won[player.index()].union_with(&dominion.set);
        strategy.extend(dominion.strategy);
        working = working.subgame(&working.vertices().difference(&dominion.set));
    }

    let [even, odd] = won;
    Solution::from_regions(g.vertices(), even, odd, strategy)
}

fn subgame_dominion(working: &IncompleteGame, player: Player, c: Priority) -> Option<Dominion> {
    let safe = working.subgame(&safe_set(working, player));
    let fatal = fatal_core(&safe, player, c, false);
    if fatal.is_empty() {
        return None;
    }
    let core = mattr(&safe, player, &fatal, c);
    let mut dominion = Dominion {
        set: core.set,
        strategy: core.strategy,
    };
    dominion.absorb(attr(&safe, player, &dominion.set));
    Some(dominion)
}

fn safe_dominion(working: &IncompleteGame, player: Player, c: Priority) -> Option<Dominion> {
    let fatal = fatal_core(working, player, c, true);
    if fatal.is_empty() {
        return None;
    }
    let core = smattr(working, player, &fatal, c);
    let mut dominion = Dominion {
        set: core.set,
        strategy: core.strategy,
    };
    dominion.absorb(sattr(working, player, &dominion.set));
    Some(dominion)
}
