//! Explicit parity games, incomplete games and solutions.
//!
//! Winning plays are decided by the *minimal* priority occurring infinitely
//! often. Vertex identities are dense indices that survive restriction: a
//! subgame keeps the id space of its parent and masks out absent vertices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Even,
    Odd,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Even => Player::Odd,
            Player::Odd => Player::Even,
        }
    }

    /// 0 for Even, 1 for Odd; the encoding used in game files.
    pub fn index(self) -> usize {
        match self {
            Player::Even => 0,
            Player::Odd => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Player> {
        match i {
            0 => Some(Player::Even),
            1 => Some(Player::Odd),
            _ => None,
        }
    }

    pub const BOTH: [Player; 2] = [Player::Even, Player::Odd];
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Even => f.write_str("even"),
            Player::Odd => f.write_str("odd"),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Priority(pub u32);

impl Priority {
    /// The player favoured by this priority.
    pub fn parity(self) -> Player {
        if self.0.is_multiple_of(2) {
            Player::Even
        } else {
            Player::Odd
        }
    }
}

impl fmt::Display for Priority {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(u32::try_from(index).expect("vertex index exceeds u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Positional strategy: a partial map from vertex to chosen successor.
pub type Strategy = BTreeMap<VertexId, VertexId>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GameError {
    #[error("vertex {0} is not part of the game")]
    UnknownVertex(VertexId),
    #[error("vertex {0} has successors; a finite play cannot end there")]
    NotASink(VertexId),
    #[error("vertex {0} is complete and cannot receive new edges")]
    CompleteVertex(VertexId),
    #[error("incomplete set contains vertex {0} outside the game")]
    IncompleteOutsideGame(VertexId),
}

/// A finite parity game graph.
#[derive(Clone, Debug, Default)]
pub struct Game {
    vertices: VertexSet,
    owner: Vec<Player>,
    priority: Vec<Priority>,
    successors: Vec<Vec<VertexId>>,
    predecessors: Vec<Vec<VertexId>>,
}

impl Game {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a game from `(owner, priority)` per vertex and an edge list.
    /// Duplicate edges are dropped.
    pub fn from_edges(vertices: &[(Player, u32)], edges: &[(usize, usize)]) -> Game {
        let mut game = Game::new();
        for &(owner, prio) in vertices {
            game.add_vertex(owner, Priority(prio));
        }
        for &(from, to) in edges {
            game.add_edge(VertexId::new(from), VertexId::new(to));
        }
        game
    }

    pub(crate) fn add_vertex(&mut self, owner: Player, priority: Priority) -> VertexId {
        let id = VertexId::new(self.owner.len());
        self.owner.push(owner);
        self.priority.push(priority);
        self.successors.push(Vec::new());
        self.predecessors.push(Vec::new());
        self.vertices.insert(id);
        id
    }

    /// Adds `from -> to`; returns false if the edge already existed.
    pub(crate) fn add_edge(&mut self, from: VertexId, to: VertexId) -> bool {
        assert!(
            self.contains(from) && self.contains(to),
            "edge {from}->{to} between unknown vertices"
        );
        if self.successors[from.index()].contains(&to) {
            return false;
        }
        self.successors[from.index()].push(to);
        self.predecessors[to.index()].push(from);
        true
    }

    /// Size of the id space (an upper bound on vertex indices).
    pub fn id_bound(&self) -> usize {
        self.owner.len()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    /// Number of vertices present.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn owner(&self, v: VertexId) -> Player {
        self.owner[v.index()]
    }

    pub fn priority(&self, v: VertexId) -> Priority {
        self.priority[v.index()]
    }

    pub fn successors(&self, v: VertexId) -> &[VertexId] {
        &self.successors[v.index()]
    }

    pub fn predecessors(&self, v: VertexId) -> &[VertexId] {
        &self.predecessors[v.index()]
    }

    pub fn has_edge(&self, from: VertexId, to: VertexId) -> bool {
        self.contains(from) && self.successors[from.index()].contains(&to)
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|v| self.successors(v).len()).sum()
    }

    /// `V_player`.
    pub fn owned_by(&self, player: Player) -> VertexSet {
        self.vertices
            .iter()
            .filter(|&v| self.owner(v) == player)
            .collect()
    }

    /// All vertices without successors.
    pub fn sinks(&self) -> VertexSet {
        self.vertices
            .iter()
            .filter(|&v| self.successors(v).is_empty())
            .collect()
    }

    /// Sinks owned by `player`.
    pub fn sinks_of(&self, player: Player) -> VertexSet {
        self.vertices
            .iter()
            .filter(|&v| self.owner(v) == player && self.successors(v).is_empty())
            .collect()
    }

    /// Distinct priorities occurring in the game, ascending.
    pub fn priorities(&self) -> BTreeSet<Priority> {
        self.vertices.iter().map(|v| self.priority(v)).collect()
    }

    /// `{v | pr(v) >= c}`.
    pub fn priority_at_least(&self, c: Priority) -> VertexSet {
        self.vertices
            .iter()
            .filter(|&v| self.priority(v) >= c)
            .collect()
    }

    /// `{v | pr(v) = c}`.
    pub fn priority_exactly(&self, c: Priority) -> VertexSet {
        self.vertices
            .iter()
            .filter(|&v| self.priority(v) == c)
            .collect()
    }

    /// Non-sink vertices whose priority has the parity of `player`.
    pub fn parity_class(&self, player: Player) -> VertexSet {
        self.vertices
            .iter()
            .filter(|&v| self.priority(v).parity() == player && !self.successors(v).is_empty())
            .collect()
    }

    /// The winner of a finite play ending in `end`: the opponent of its owner.
    pub fn play_winner(&self, end: VertexId) -> Result<Player, GameError> {
        if !self.contains(end) {
            return Err(GameError::UnknownVertex(end));
        }
        if !self.successors(end).is_empty() {
            return Err(GameError::NotASink(end));
        }
        Ok(self.owner(end).opponent())
    }

    /// Restriction to `u ∩ V`, keeping vertex identities.
    pub fn subgame(&self, u: &VertexSet) -> Game {
        let keep = self.vertices.intersection(u);
        let n = self.id_bound();
        let mut successors = vec![Vec::new(); n];
        let mut predecessors = vec![Vec::new(); n];
        for v in keep.iter() {
            successors[v.index()] = self.successors(v)
                .iter()
                .copied()
                .filter(|w| keep.contains(*w))
                .collect();
            predecessors[v.index()] = self.predecessors(v)
                .iter()
                .copied()
                .filter(|w| keep.contains(*w))
                .collect();
        }
        crate::work::tally(self.edge_count() as u64);
        Game {
            vertices: keep,
            owner: self.owner.clone(),
            priority: self.priority.clone(),
            successors,
            predecessors,
        }
    }

    /// Checks the successor/predecessor consistency invariant.
    pub fn is_consistent(&self) -> bool {
        self.vertices.iter().all(|v| {
            let succ = self.successors(v);
            let distinct: BTreeSet<_> = succ.iter().collect();
            distinct.len() == succ.len()
                && succ
                    .iter()
                    .all(|w| self.contains(*w) && self.predecessors(*w).contains(&v))
                && self
                    .predecessors(v)
                    .iter()
                    .all(|u| self.contains(*u) && self.successors(*u).contains(&v))
        })
    }
}

/// Structural equality over the present vertices; edge order is ignored.
impl PartialEq for Game {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.vertices.iter().all(|v| {
                self.owner(v) == other.owner(v)
                    && self.priority(v) == other.priority(v)
                    && self.successors(v).iter().collect::<BTreeSet<_>>()
                        == other.successors(v).iter().collect::<BTreeSet<_>>()
            })
    }
}

impl Eq for Game {}

/// A game together with the set of vertices whose successors may still grow.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IncompleteGame {
    game: Game,
    incomplete: VertexSet,
}

impl IncompleteGame {
    pub fn new(game: Game, incomplete: VertexSet) -> Result<Self, GameError> {
        if let Some(v) = incomplete.difference(game.vertices()).first() {
            return Err(GameError::IncompleteOutsideGame(v));
        }
        Ok(Self { game, incomplete })
    }

    /// A game with no incomplete vertices.
    pub fn complete(game: Game) -> Self {
        Self {
            game,
            incomplete: VertexSet::new(),
        }
    }

    pub fn game(&self) -> &Game {
        &self.game
    }

    pub fn into_game(self) -> Game {
        self.game
    }

    pub fn incomplete(&self) -> &VertexSet {
        &self.incomplete
    }

    pub fn is_incomplete(&self, v: VertexId) -> bool {
        self.incomplete.contains(v)
    }

    pub fn vertices(&self) -> &VertexSet {
        self.game.vertices()
    }

    /// `(G ∩ U, I ∩ U)`.
    pub fn subgame(&self, u: &VertexSet) -> IncompleteGame {
        IncompleteGame {
            game: self.game.subgame(u),
            incomplete: self.incomplete.intersection(u),
        }
    }

    /// Whether `other` extends `self` in the exploration order: vertices and
    /// owners are kept, no edge is lost, complete vertices gain no
    /// successors, priorities agree and no complete vertex becomes incomplete.
    pub fn is_extended_by(&self, other: &IncompleteGame) -> bool {
        let (g1, g2) = (&self.game, &other.game);
        for v in g1.vertices().iter() {
            if v.index() >= g2.id_bound() || !g2.contains(v) {
                return false;
            }
            if g1.owner(v) != g2.owner(v) || g1.priority(v) != g2.priority(v) {
                return false;
            }
            if !g1.successors(v).iter().all(|&w| g2.has_edge(v, w)) {
                return false;
            }
            if !self.is_incomplete(v) {
                // ((V \ I) × V) ∩ E' ⊆ E
                let gained = g2
                    .successors(v)
                    .iter()
                    .any(|&w| g1.contains(w) && !g1.has_edge(v, w));
                if gained || other.is_incomplete(v) {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn game_mut(&mut self) -> &mut Game {
        &mut self.game
    }

    pub(crate) fn incomplete_mut(&mut self) -> &mut VertexSet {
        &mut self.incomplete
    }
}

/// Free-function form of [`IncompleteGame::is_extended_by`].
pub fn check_extension(g1: &IncompleteGame, g2: &IncompleteGame) -> bool {
    g1.is_extended_by(g2)
}

/// Winning regions (possibly partial) with positional strategies.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Solution {
    pub won_even: VertexSet,
    pub won_odd: VertexSet,
    pub undecided: VertexSet,
    pub strategy: Strategy,
}

impl Solution {
    /// Builds a solution over `vertices`; anything not won is undecided.
    pub fn from_regions(
        vertices: &VertexSet,
        won_even: VertexSet,
        won_odd: VertexSet,
        strategy: Strategy,
    ) -> Self {
        let undecided = vertices.difference(&won_even).difference(&won_odd);
        Self {
            won_even,
            won_odd,
            undecided,
            strategy,
        }
    }

    pub fn region(&self, player: Player) -> &VertexSet {
        match player {
            Player::Even => &self.won_even,
            Player::Odd => &self.won_odd,
        }
    }

    pub fn winner(&self, v: VertexId) -> Option<Player> {
        if self.won_even.contains(v) {
            Some(Player::Even)
        } else if self.won_odd.contains(v) {
            Some(Player::Odd)
        } else {
            None
        }
    }

    pub fn is_total(&self) -> bool {
        self.undecided.is_empty()
    }

    /// Verifies the partition and strategy invariants against `game`.
    pub fn validate(&self, game: &Game) -> Result<(), String> {
        if !self.won_even.is_disjoint(&self.won_odd)
            || !self.won_even.is_disjoint(&self.undecided)
            || !self.won_odd.is_disjoint(&self.undecided)
        {
            return Err("regions overlap".into());
        }
        let all = self.won_even.union(&self.won_odd).union(&self.undecided);
        if &all != game.vertices() {
            return Err(format!("regions cover {all:?}, game has {:?}", game.vertices()));
        }
        for (&v, &w) in &self.strategy {
            if !game.has_edge(v, w) {
                return Err(format!("strategy {v}->{w} is not an edge"));
            }
            if self.winner(v) != Some(game.owner(v)) {
                return Err(format!("strategy defined at {v} outside its owner's region"));
            }
            if self.winner(w) != self.winner(v) {
                return Err(format!("strategy {v}->{w} leaves the region"));
            }
        }
        Ok(())
    }
}
