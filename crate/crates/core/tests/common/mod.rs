//! Reference implementations evaluated straight from the set definitions
//! by naive fixpoint iteration, plus random instance helpers.
#![allow(dead_code)]

use std::collections::BTreeSet;

use otfpg::testkit::{gen_random, GenSpec};
use otfpg::{Game, IncompleteGame, Player, Priority, VertexId, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Set = BTreeSet<VertexId>;

pub fn set(ids: &[usize]) -> VertexSet {
    ids.iter().map(|&i| VertexId::new(i)).collect()
}

pub fn to_set(s: &VertexSet) -> Set {
    s.iter().collect()
}

pub fn vertices(g: &IncompleteGame) -> Set {
    to_set(g.vertices())
}

pub fn lfp(f: impl Fn(&Set) -> Set) -> Set {
    let mut z = Set::new();
    loop {
        let next = f(&z);
        if next == z {
            return z;
        }
        z = next;
    }
}

pub fn gfp(top: Set, f: impl Fn(&Set) -> Set) -> Set {
    let mut z = top;
    loop {
        let next = f(&z);
        if next == z {
            return z;
        }
        z = next;
    }
}

pub fn pre(g: &IncompleteGame, u: &Set) -> Set {
    let game = g.game();
    vertices(g)
        .into_iter()
        .filter(|&v| game.successors(v).iter().any(|w| u.contains(w)))
        .collect()
}

pub fn cpre(g: &IncompleteGame, p: Player, u: &Set, safe: bool) -> Set {
    let game = g.game();
    vertices(g)
        .into_iter()
        .filter(|&v| {
            let succ = game.successors(v);
            if game.owner(v) == p {
                succ.iter().any(|w| u.contains(w))
            } else {
                !succ.is_empty() && succ.iter().all(|w| u.contains(w)) && !(safe && g.is_incomplete(v))
            }
        })
        .collect()
}

pub fn attr(g: &IncompleteGame, p: Player, u: &Set, safe: bool) -> Set {
    let inside: Set = u.intersection(&vertices(g)).copied().collect();
    lfp(|z| inside.union(&cpre(g, p, z, safe)).copied().collect())
}

pub fn at_least(g: &IncompleteGame, c: Priority) -> Set {
    vertices(g).into_iter().filter(|&v| g.game().priority(v) >= c).collect()
}

pub fn exactly(g: &IncompleteGame, c: Priority) -> Set {
    vertices(g).into_iter().filter(|&v| g.game().priority(v) == c).collect()
}

pub fn mattr(g: &IncompleteGame, p: Player, u: &Set, c: Priority, safe: bool) -> Set {
    let high = at_least(g, c);
    lfp(|z| {
        let zu: Set = z.union(u).copied().collect();
        cpre(g, p, &zu, safe).intersection(&high).copied().collect()
    })
}

pub fn safe_set(g: &IncompleteGame, p: Player) -> Set {
    let game = g.game();
    let escapes: Set = vertices(g)
        .into_iter()
        .filter(|&v| game.owner(v) == p.opponent() && g.is_incomplete(v))
        .collect();
    let bad = attr(g, p.opponent(), &escapes, false);
    vertices(g).difference(&bad).copied().collect()
}

pub fn restrict(g: &IncompleteGame, s: &Set) -> IncompleteGame {
    g.subgame(&s.iter().copied().collect())
}

/// Non-sink vertices whose priority has the parity of `p`.
pub fn parity_class(g: &IncompleteGame, p: Player) -> Set {
    let game = g.game();
    vertices(g)
        .into_iter()
        .filter(|&v| !game.successors(v).is_empty() && game.priority(v).parity() == p)
        .collect()
}

pub fn solitaire(g: &IncompleteGame, p: Player) -> Set {
    let cls: Set = parity_class(g, p)
        .into_iter()
        .filter(|&v| g.game().owner(v) == p)
        .collect();
    gfp(cls.clone(), |z| cls.intersection(&pre(g, z)).copied().collect())
}

pub fn forced(g: &IncompleteGame, p: Player) -> Set {
    let base: Set = parity_class(g, p).intersection(&safe_set(g, p)).copied().collect();
    gfp(base.clone(), |z| base.intersection(&cpre(g, p, z, false)).copied().collect())
}

pub fn safe_forced(g: &IncompleteGame, p: Player) -> Set {
    let base = parity_class(g, p);
    gfp(base.clone(), |z| base.intersection(&cpre(g, p, z, true)).copied().collect())
}

/// Largest `Z ⊆ P^{=c} ∩ safe` attracted back to itself through priorities
/// no lower than `c` within the safe subgame.
pub fn fatal(g: &IncompleteGame, p: Player, c: Priority) -> Set {
    let safe = safe_set(g, p);
    let h = restrict(g, &safe);
    let base: Set = exactly(&h, c);
    gfp(base.clone(), |z| {
        base.intersection(&mattr(&h, p, z, c, false)).copied().collect()
    })
}

/// A random incomplete game with between `lo` and `hi` vertices.
pub fn random_game(seed: u64, lo: usize, hi: usize) -> IncompleteGame {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let spec = GenSpec {
        vertex_count: rng.gen_range(lo..=hi),
        max_out_degree: rng.gen_range(1..=4),
        priority_range: 0..=5,
        sink_probability: rng.gen_range(0.0..0.15),
        incomplete_fraction: rng.gen_range(0.0..0.5),
        seed,
    };
    gen_random(&spec).expect("valid spec")
}

/// A random complete game with between `lo` and `hi` vertices.
pub fn random_universe(seed: u64, lo: usize, hi: usize) -> Game {
    random_game(seed, lo, hi).into_game()
}

/// A random subset of `s`, each element kept with probability one half.
pub fn random_subset(s: &Set, seed: u64) -> Set {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    s.iter().copied().filter(|_| rng.gen_bool(0.5)).collect()
}

/// Vertices reachable from `root`, including it.
pub fn reachable(game: &Game, root: VertexId) -> Set {
    let mut seen = Set::from([root]);
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &w in game.successors(v) {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}

/// Checks that `strategy` wins every vertex of `region` for `p` in `game`:
/// the region is closed under the opponent's moves and `p`'s choices, and
/// no cycle inside has a least priority of the opponent's parity.
pub fn check_dominion(
    game: &Game,
    region: &VertexSet,
    strategy: &otfpg::Strategy,
    p: Player,
) -> Result<(), String> {
    let mut succ: std::collections::BTreeMap<VertexId, Vec<VertexId>> = Default::default();
    for v in region.iter() {
        if game.owner(v) == p {
            let Some(&w) = strategy.get(&v) else {
                return Err(format!("no choice at {v}"));
            };
            if !game.has_edge(v, w) || !region.contains(w) {
                return Err(format!("choice {v}->{w} leaves the region"));
            }
            succ.insert(v, vec![w]);
        } else {
            if let Some(&w) = game.successors(v).iter().find(|w| !region.contains(**w)) {
                return Err(format!("opponent escapes {v}->{w}"));
            }
            succ.insert(v, game.successors(v).to_vec());
        }
    }
    for v in region.iter() {
        let c = game.priority(v);
        if c.parity() == p {
            continue;
        }
        let mut seen = Set::new();
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &w in &succ[&x] {
                if w == v {
                    return Err(format!("losing cycle through {v}"));
                }
                if game.priority(w) >= c && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    Ok(())
}

/// Checks both regions of `sol` with [`check_dominion`].
pub fn check_solution(game: &Game, sol: &otfpg::Solution) -> Result<(), String> {
    sol.validate(game)?;
    for p in Player::BOTH {
        check_dominion(game, sol.region(p), &sol.strategy, p).map_err(|e| format!("{p}: {e}"))?;
    }
    Ok(())
}
