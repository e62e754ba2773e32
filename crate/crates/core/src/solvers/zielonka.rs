use std::borrow::Cow;

use crate::fixpoints::attractor_in;
use crate::game::{Game, Player, Solution, Strategy};
use crate::vertex_set::VertexSet;

/// Solves `game` completely with the recursive algorithm under min-priority
/// semantics. Sinks are won by the opponent of their owner.
pub fn zielonka(game: &Game) -> Solution {
    let (won, strategy) = solve(game);
    let [even, odd] = won;
    Solution::from_regions(game.vertices(), even, odd, strategy)
}

type Regions = ([VertexSet; 2], Strategy);

fn solve(game: &Game) -> Regions {
    let mut won = [VertexSet::new(), VertexSet::new()];
    let mut strategy = Strategy::new();
    if game.is_empty() {
        return (won, strategy);
    }

    if game.sinks().is_empty() {
        return solve_sink_free(game);
    }
    // Attract towards lost sinks first; removing an attractor never creates
    // new sinks, so the remainder is sink-free.
    let mut current = Cow::Borrowed(game);
    for player in Player::BOTH {
        let lost = current.sinks_of(player.opponent());
        if lost.is_empty() {
            continue;
        }
        let a = attractor_in(&current, player, &lost);
        won[player.index()].union_with(&a.set);
        strategy.extend(a.strategy);
        current = Cow::Owned(current.subgame(&current.vertices().difference(&a.set)));
    }
    let (sub, sub_strategy) = solve_sink_free(&current);
    merge(&mut won, sub);
    strategy.extend(sub_strategy);
    (won, strategy)
}

fn merge(won: &mut [VertexSet; 2], other: [VertexSet; 2]) {
    for (w, o) in won.iter_mut().zip(other) {
        w.union_with(&o);
    }
}

fn solve_sink_free(game: &Game) -> Regions {
    let mut won = [VertexSet::new(), VertexSet::new()];
    let mut strategy = Strategy::new();
    let Some(&lowest) = game.priorities().first() else {
        return (won, strategy);
    };
    let alpha = lowest.parity();
    let beta = alpha.opponent();

    let top = game.priority_exactly(lowest);
    let a = attractor_in(game, alpha, &top);
    let (sub_won, sub_strategy) = solve(&game.subgame(&game.vertices().difference(&a.set)));

    if sub_won[beta.index()].is_empty() {
        won[alpha.index()] = game.vertices().clone();
        strategy.extend(sub_strategy);
        strategy.extend(a.strategy);
        for v in top.iter().filter(|&v| game.owner(v) == alpha) {
            let choice = game.successors(v).iter().copied().min();
            strategy.insert(v, choice.expect("sink-free game"));
        }
        return (won, strategy);
    }

    let b = attractor_in(game, beta, &sub_won[beta.index()]);
    strategy.extend(
        sub_strategy
            .into_iter()
            .filter(|(v, _)| sub_won[beta.index()].contains(*v)),
    );
    strategy.extend(b.strategy);
    let (rest_won, rest_strategy) = solve(&game.subgame(&game.vertices().difference(&b.set)));
    strategy.extend(rest_strategy);
    won[beta.index()] = b.set;
    merge(&mut won, rest_won);
    (won, strategy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::{Player::*, VertexId};

    fn ids(v: &[usize]) -> VertexSet {
        v.iter().map(|&i| VertexId::new(i)).collect()
    }

    #[test]
    fn five_vertex_game_regions() {
        let g = fixtures::five_vertex_game();
        let sol = zielonka(&g);
        assert_eq!(sol.won_even, ids(&[0, 1, 2]));
        assert_eq!(sol.won_odd, ids(&[3, 4]));
        assert_eq!(sol.validate(&g), Ok(()));
        assert_eq!(sol.strategy.get(&VertexId::new(3)), Some(&VertexId::new(4)));
    }

    #[test]
    fn self_loop() {
        let g = Game::from_edges(&[(Even, 0)], &[(0, 0)]);
        assert_eq!(&zielonka(&g).won_even, g.vertices());
        let g = Game::from_edges(&[(Even, 1)], &[(0, 0)]);
        assert_eq!(&zielonka(&g).won_odd, g.vertices());
    }

    #[test]
    fn sinks_decide_their_basin() {
        // 0 (Odd) -> 1 (Even sink); 2 (Even) -> 0, 2
        let g = Game::from_edges(&[(Odd, 0), (Even, 0), (Even, 1)], &[(0, 1), (2, 0), (2, 2)]);
        let sol = zielonka(&g);
        assert_eq!(sol.won_odd, ids(&[0, 1, 2]));
        assert_eq!(sol.validate(&g), Ok(()));
    }

    #[test]
    fn empty_game() {
        let sol = zielonka(&Game::new());
        assert!(sol.won_even.is_empty() && sol.won_odd.is_empty());
    }
}
