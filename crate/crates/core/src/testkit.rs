//! Seeded game generators: random games, extension chains, the adversarial
//! extension and a scalable safety-property family.

use std::ops::RangeInclusive;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::game::{Game, GameError, IncompleteGame, Player, Priority, VertexId};
use crate::vertex_set::VertexSet;

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("a game needs at least one vertex")]
    NoVertices,
    #[error("{name} must be a probability, got {value}")]
    NotAProbability { name: &'static str, value: f64 },
    #[error("empty priority range")]
    EmptyPriorities,
    #[error("depth must be at least 1")]
    ZeroDepth,
}

/// Parameters for [`gen_random`].
#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub vertex_count: usize,
    /// Non-sink vertices get between 1 and this many distinct successors.
    pub max_out_degree: usize,
    pub priority_range: RangeInclusive<u32>,
    pub sink_probability: f64,
    pub incomplete_fraction: f64,
    pub seed: u64,
}

impl Default for GenSpec {
    fn default() -> Self {
        Self {
            vertex_count: 20,
            max_out_degree: 3,
            priority_range: 0..=5,
            sink_probability: 0.05,
            incomplete_fraction: 0.2,
            seed: 0,
        }
    }
}

impl GenSpec {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<(), GenError> {
        if self.vertex_count == 0 {
            return Err(GenError::NoVertices);
        }
        if self.priority_range.is_empty() {
            return Err(GenError::EmptyPriorities);
        }
        for (name, value) in [
            ("sink probability", self.sink_probability),
            ("incomplete fraction", self.incomplete_fraction),
        ] {
            if !(0.0..=1.0).contains(&value) {
                return Err(GenError::NotAProbability { name, value });
            }
        }
        Ok(())
    }
}

fn random_player(rng: &mut ChaCha8Rng) -> Player {
    if rng.gen_bool(0.5) {
        Player::Even
    } else {
        Player::Odd
    }
}

/// A random incomplete game, identical for identical specs.
pub fn gen_random(spec: &GenSpec) -> Result<IncompleteGame, GenError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.vertex_count;
    let mut game = Game::new();
    for _ in 0..n {
        let owner = random_player(&mut rng);
        let priority = rng.gen_range(spec.priority_range.clone());
        game.add_vertex(owner, Priority(priority));
    }
    let max_degree = spec.max_out_degree.min(n);
    for v in 0..n {
        if max_degree == 0 || rng.gen_bool(spec.sink_probability) {
            continue;
        }
        let degree = rng.gen_range(1..=max_degree);
        for w in index::sample(&mut rng, n, degree) {
            game.add_edge(VertexId::new(v), VertexId::new(w));
        }
    }
    let incomplete: VertexSet = (0..n)
        .filter(|_| rng.gen_bool(spec.incomplete_fraction))
        .map(VertexId::new)
        .collect();
    Ok(IncompleteGame::new(game, incomplete).expect("incomplete vertices are in range"))
}

/// A scripted extension step. Fresh vertices get the ids following the
/// current id space, in order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Extension {
    /// Owner, priority and whether the vertex is still incomplete.
    pub fresh: Vec<(Player, Priority, bool)>,
    pub edges: Vec<(VertexId, VertexId)>,
    /// Incomplete vertices that become complete.
    pub completed: Vec<VertexId>,
}

/// Applies `ext` to `g`. Edges may only leave incomplete or fresh vertices.
pub fn extend(g: &IncompleteGame, ext: &Extension) -> Result<IncompleteGame, GameError> {
    let mut next = g.clone();
    let first_fresh = g.game().id_bound();
    for &(owner, priority, incomplete) in &ext.fresh {
        let v = next.game_mut().add_vertex(owner, priority);
        if incomplete {
            next.incomplete_mut().insert(v);
        }
    }
    for &(from, to) in &ext.edges {
        for v in [from, to] {
            if !next.vertices().contains(v) {
                return Err(GameError::UnknownVertex(v));
            }
        }
        if from.index() < first_fresh && !g.is_incomplete(from) {
            return Err(GameError::CompleteVertex(from));
        }
        next.game_mut().add_edge(from, to);
    }
    for &v in &ext.completed {
        if !g.is_incomplete(v) {
            return Err(GameError::CompleteVertex(v));
        }
        next.incomplete_mut().remove(v);
    }
    Ok(next)
}

/// Most successors an incomplete vertex gains in one random step.
const GROWTH: usize = 2;

/// A random extension: every incomplete vertex gains up to two successors,
/// some of them fresh incomplete vertices, and about half become complete.
pub fn gen_extension(g: &IncompleteGame, seed: u64) -> IncompleteGame {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ext = Extension::default();
    let top = g.game().priorities().last().map_or(5, |p| p.0.max(1));
    let mut next_id = g.game().id_bound();
    let old: Vec<VertexId> = g.vertices().iter().collect();
    for v in g.incomplete().iter() {
        for _ in 0..rng.gen_range(0..=GROWTH) {
            let target = if old.is_empty() || rng.gen_bool(0.25) {
                ext.fresh.push((random_player(&mut rng), Priority(rng.gen_range(0..=top)), true));
                next_id += 1;
                VertexId::new(next_id - 1)
            } else {
                old[rng.gen_range(0..old.len())]
            };
            ext.edges.push((v, target));
        }
        if rng.gen_bool(0.5) {
            ext.completed.push(v);
        }
    }
    extend(g, &ext).expect("random extension only touches incomplete vertices")
}

/// Closes every incomplete vertex after adding up to two random edges to
/// existing vertices.
pub fn complete_extension(g: &IncompleteGame, seed: u64) -> Game {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let old: Vec<VertexId> = g.vertices().iter().collect();
    let mut ext = Extension::default();
    for v in g.incomplete().iter() {
        for _ in 0..rng.gen_range(0..=GROWTH) {
            ext.edges.push((v, old[rng.gen_range(0..old.len())]));
        }
        ext.completed.push(v);
    }
    extend(g, &ext)
        .expect("completion only touches incomplete vertices")
        .into_game()
}

/// The extension in which the opponent of `player` wins every vertex
/// outside `player`'s safe set: a fresh `player`-owned sink `z` of priority
/// 0, an edge to it from every incomplete vertex, and nothing left
/// incomplete.
pub fn adversarial_extension(g: &IncompleteGame, player: Player) -> Game {
    let mut game = g.game().clone();
    let z = game.add_vertex(player, Priority(0));
    for v in g.incomplete().iter() {
        game.add_edge(v, z);
    }
    game
}

/// Safety-check shaped game whose root is vertex 0.
///
/// A chain `r0 -> .. -> r(depth-1)` leads into a `(depth+1)²` torus of
/// counter states. Every vertex except the error sink is Odd-owned with
/// priority 0, so Odd wins exactly where it can reach the Even-owned error
/// sink. With `violation`, the last chain vertex also has an edge to that
/// sink, which then lies at distance `depth` from the root. Without it the
/// game has no sink and Even wins everywhere.
pub fn gen_safety_family(depth: usize, violation: bool) -> Result<Game, GenError> {
    if depth == 0 {
        return Err(GenError::ZeroDepth);
    }
    let side = depth + 1;
    let mut game = Game::new();
    let chain: Vec<VertexId> = (0..depth)
        .map(|_| game.add_vertex(Player::Odd, Priority(0)))
        .collect();
    let cell = |i: usize, j: usize| VertexId::new(depth + i * side + j);
    for _ in 0..side * side {
        game.add_vertex(Player::Odd, Priority(0));
    }
    for pair in chain.windows(2) {
        game.add_edge(pair[0], pair[1]);
    }
    let last = chain[depth - 1];
    game.add_edge(last, cell(0, 0));
    for i in 0..side {
        for j in 0..side {
            game.add_edge(cell(i, j), cell((i + 1) % side, j));
            game.add_edge(cell(i, j), cell(i, (j + 1) % side));
        }
    }
    if violation {
        let error = game.add_vertex(Player::Even, Priority(0));
        game.add_edge(last, error);
    }
    Ok(game)
}
