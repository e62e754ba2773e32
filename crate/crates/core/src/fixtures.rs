//! Small hand-written games used by tests, examples and the CLI docs.

use crate::game::{Game, IncompleteGame, Player::*, VertexId};
use crate::vertex_set::VertexSet;

/// Five vertices: u0..u4 with priorities 2,3,0,1,2; u1 is an Odd sink.
/// Even wins {u0,u1,u2}, Odd wins {u3,u4}.
pub fn five_vertex_game() -> Game {
    Game::from_edges(
        &[(Even, 2), (Odd, 3), (Even, 0), (Odd, 1), (Even, 2)],
        &[(0, 1), (0, 2), (2, 0), (2, 4), (3, 2), (3, 4), (4, 3)],
    )
}

const SIX_VERTICES: [(crate::game::Player, u32); 6] =
    [(Even, 2), (Odd, 3), (Even, 0), (Even, 2), (Odd, 1), (Odd, 2)];

const SIX_SOLID: [(usize, usize); 7] = [(0, 1), (0, 2), (2, 0), (3, 2), (4, 3), (4, 2), (4, 5)];

/// The edges `u3 -> u5` and `u5 -> u4` that are not yet known in the snapshot.
pub const SIX_HIDDEN: [(usize, usize); 2] = [(3, 5), (5, 4)];

/// Six vertices with only part of the edges explored; u3 and u5 incomplete.
pub fn six_vertex_snapshot() -> IncompleteGame {
    let game = Game::from_edges(&SIX_VERTICES, &SIX_SOLID);
    let incomplete: VertexSet = [3, 5].into_iter().map(VertexId::new).collect();
    IncompleteGame::new(game, incomplete).expect("incomplete vertices exist")
}

/// The fully explored six-vertex game.
pub fn six_vertex_universe() -> Game {
    let edges: Vec<_> = SIX_SOLID.iter().chain(SIX_HIDDEN.iter()).copied().collect();
    Game::from_edges(&SIX_VERTICES, &edges)
}
