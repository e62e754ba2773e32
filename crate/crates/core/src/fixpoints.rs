//! Predecessor operators and the attractors built from them.
//!
//! Every operator works on an [`IncompleteGame`]. The plain variants (`pre`,
//! `cpre`, `attr`, `mattr`) ignore the incomplete set; the safe variants
//! (`spre`, `sattr`, `smattr`) never rely on an opponent-owned incomplete
//! vertex staying inside the target.
//!
//! Least fixpoints are computed with a predecessor worklist and per-vertex
//! counters of successors still outside the set, so each attractor costs
//! O(|V| + |E|). Greatest fixpoints use the dual removal worklist.

use std::collections::VecDeque;

use crate::game::{Game, IncompleteGame, Player, Priority, Strategy, VertexId};
use crate::vertex_set::VertexSet;
use crate::work;

/// An attractor set together with the attracting player's choices.
///
/// For every attracting-player vertex that joined the set by choice (not by
/// being in the target), the strategy names the lowest-id successor that was
/// already inside when it joined.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AttractorResult {
    pub set: VertexSet,
    pub strategy: Strategy,
}

/// `{v | some successor of v is in u}`.
pub fn pre(g: &IncompleteGame, u: &VertexSet) -> VertexSet {
    pre_in(g.game(), u)
}

fn pre_in(game: &Game, u: &VertexSet) -> VertexSet {
    let mut out = VertexSet::with_capacity(game.id_bound());
    for w in u.iter().filter(|&w| game.contains(w)) {
        work::tally(game.predecessors(w).len() as u64 + 1);
        out.extend(game.predecessors(w).iter().copied());
    }
    out
}

fn control_predecessor(g: &IncompleteGame, player: Player, u: &VertexSet, safe: bool) -> VertexSet {
    let game = g.game();
    game.vertices()
        .iter()
        .filter(|&v| {
            let succ = game.successors(v);
            work::tally(succ.len() as u64 + 1);
            if game.owner(v) == player {
                succ.iter().any(|&w| u.contains(w))
            } else {
                !succ.is_empty()
                    && succ.iter().all(|&w| u.contains(w))
                    && !(safe && g.is_incomplete(v))
            }
        })
        .collect()
}

/// Control predecessor: vertices from which `player` forces entering `u` in
/// one step. Opponent sinks are excluded.
pub fn cpre(g: &IncompleteGame, player: Player, u: &VertexSet) -> VertexSet {
    control_predecessor(g, player, u, false)
}

/// Safe control predecessor: like [`cpre`], but opponent vertices that are
/// incomplete never count as forced.
pub fn spre(g: &IncompleteGame, player: Player, u: &VertexSet) -> VertexSet {
    control_predecessor(g, player, u, true)
}

/// Monotone control predecessor `P^{>=c} ∩ cpre(z ∪ u)`.
pub fn mpre(g: &IncompleteGame, player: Player, z: &VertexSet, u: &VertexSet, c: Priority) -> VertexSet {
    let mut out = cpre(g, player, &z.union(u));
    out.intersect_with(&g.game().priority_at_least(c));
    out
}

/// Safe monotone control predecessor `P^{>=c} ∩ spre(z ∪ u)`.
pub fn smpre(g: &IncompleteGame, player: Player, z: &VertexSet, u: &VertexSet, c: Priority) -> VertexSet {
    let mut out = spre(g, player, &z.union(u));
    out.intersect_with(&g.game().priority_at_least(c));
    out
}

#[derive(Copy, Clone)]
enum Growth {
    /// `μZ. U ∪ pre(Z)`: the target is part of the result.
    Standard,
    /// `μZ. P^{>=c} ∩ pre(Z ∪ U)`: the target only steers.
    Monotone(Priority),
}

/// The shared least-fixpoint worklist.
fn grow(
    game: &Game,
    incomplete: Option<&VertexSet>,
    player: Player,
    target: &VertexSet,
    growth: Growth,
) -> AttractorResult {
    let n = game.id_bound();
    let mut inside = target.intersection(game.vertices());
    let mut result = match growth {
        Growth::Standard => inside.clone(),
        Growth::Monotone(_) => VertexSet::with_capacity(n),
    };
    let mut strategy = Strategy::new();
    let mut outside: Vec<u32> = vec![0; n];
    for v in game.vertices().iter() {
        outside[v.index()] = game.successors(v).len() as u32;
    }
    let mut queue: VecDeque<VertexId> = inside.iter().collect();
    let mut steps = 0u64;

    while let Some(w) = queue.pop_front() {
        steps += 1;
        for &v in game.predecessors(w) {
            steps += 1;
            if result.contains(v) {
                continue;
            }
            let joins = if game.owner(v) == player {
                true
            } else {
                outside[v.index()] -= 1;
                outside[v.index()] == 0 && !incomplete.is_some_and(|i| i.contains(v))
            };
            let joins = joins
                && match growth {
                    Growth::Standard => true,
                    Growth::Monotone(c) => game.priority(v) >= c,
                };
            if !joins {
                continue;
            }
            result.insert(v);
            if game.owner(v) == player {
                let choice = game
                    .successors(v)
                    .iter()
                    .copied()
                    .filter(|&s| inside.contains(s))
                    .min()
                    .expect("attracted vertex has a successor inside");
                strategy.insert(v, choice);
            }
            if inside.insert(v) {
                queue.push_back(v);
            }
        }
    }
    work::tally(steps);
    AttractorResult { set: result, strategy }
}

pub(crate) fn attractor_in(game: &Game, player: Player, u: &VertexSet) -> AttractorResult {
    grow(game, None, player, u, Growth::Standard)
}

/// `μZ. u ∪ cpre(Z)`.
pub fn attr(g: &IncompleteGame, player: Player, u: &VertexSet) -> AttractorResult {
    grow(g.game(), None, player, u, Growth::Standard)
}

/// `μZ. u ∪ spre(Z)`: the vertices from which `player` forces reaching `u`
/// without passing through an opponent-owned incomplete vertex.
pub fn sattr(g: &IncompleteGame, player: Player, u: &VertexSet) -> AttractorResult {
    grow(g.game(), Some(g.incomplete()), player, u, Growth::Standard)
}

/// `μZ. mpre(Z, u, c)`. The target itself is only included where it is
/// attracted back into `Z ∪ u` through priorities no lower than `c`.
pub fn mattr(g: &IncompleteGame, player: Player, u: &VertexSet, c: Priority) -> AttractorResult {
    grow(g.game(), None, player, u, Growth::Monotone(c))
}

/// `μZ. smpre(Z, u, c)`.
pub fn smattr(g: &IncompleteGame, player: Player, u: &VertexSet, c: Priority) -> AttractorResult {
    grow(g.game(), Some(g.incomplete()), player, u, Growth::Monotone(c))
}

/// Vertices outside the opponent's attractor to its own incomplete vertices.
pub fn safe_set(g: &IncompleteGame, player: Player) -> VertexSet {
    let opponent = player.opponent();
    let escapes = g.game().owned_by(opponent).intersection(g.incomplete());
    g.vertices().difference(&attr(g, opponent, &escapes).set)
}

/// Greatest `Z ⊆ candidates` such that every `player` vertex of `Z` has a
/// successor in `Z` and every opponent vertex of `Z` has successors, all in
/// `Z`. The strategy keeps `player` inside `Z` (lowest-id successor).
pub(crate) fn closed_core(game: &Game, player: Player, candidates: &VertexSet) -> AttractorResult {
    let n = game.id_bound();
    let mut z = candidates.intersection(game.vertices());
    let mut inside: Vec<u32> = vec![0; n];
    let mut queue = VecDeque::new();
    let mut steps = 0u64;
    for v in z.iter() {
        let succ = game.successors(v);
        steps += succ.len() as u64 + 1;
        let k = succ.iter().filter(|&&w| z.contains(w)).count();
        inside[v.index()] = k as u32;
        let violates = if game.owner(v) == player {
            k == 0
        } else {
            succ.is_empty() || k < succ.len()
        };
        if violates {
            queue.push_back(v);
        }
    }
    while let Some(w) = queue.pop_front() {
        if !z.remove(w) {
            continue;
        }
        for &v in game.predecessors(w) {
            steps += 1;
            if !z.contains(v) {
                continue;
            }
            inside[v.index()] -= 1;
            // opponent vertices fail on their first lost successor
            if game.owner(v) != player || inside[v.index()] == 0 {
                queue.push_back(v);
            }
        }
    }
    work::tally(steps);
    let strategy = z
        .iter()
        .filter(|&v| game.owner(v) == player)
        .map(|v| {
            let choice = game
                .successors(v)
                .iter()
                .copied()
                .filter(|&s| z.contains(s))
                .min()
                .expect("core vertex keeps a successor");
            (v, choice)
        })
        .collect();
    AttractorResult { set: z, strategy }
}
