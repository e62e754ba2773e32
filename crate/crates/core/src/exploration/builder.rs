use crate::game::{IncompleteGame, Player, Priority, VertexId};

use super::ExplorationError;

/// A game under construction. New vertices start out incomplete and become
/// complete when expanded; every mutation yields an extension of the
/// previous snapshot.
#[derive(Clone, Debug, Default)]
pub struct IncrementalGame {
    current: IncompleteGame,
}

impl IncrementalGame {
    pub fn new() -> Self {
        Self::default()
    }

    /// The current snapshot.
    pub fn snapshot(&self) -> &IncompleteGame {
        &self.current
    }

    pub fn into_snapshot(self) -> IncompleteGame {
        self.current
    }

    pub fn len(&self) -> usize {
        self.current.game().len()
    }

    pub fn is_empty(&self) -> bool {
        self.current.game().is_empty()
    }

    /// Registers a fresh, incomplete vertex.
    pub fn add_vertex(&mut self, owner: Player, priority: Priority) -> VertexId {
        let v = self.current.game_mut().add_vertex(owner, priority);
        self.current.incomplete_mut().insert(v);
        v
    }

    /// Records the full successor list of `from` and marks it complete.
    /// An empty list turns `from` into a sink.
    pub fn expand(&mut self, from: VertexId, successors: &[VertexId]) -> Result<(), ExplorationError> {
        if !self.current.is_incomplete(from) {
            return Err(if self.current.vertices().contains(from) {
                ExplorationError::NotIncomplete(from)
            } else {
                ExplorationError::UnknownVertex(from)
            });
        }
        if let Some(&w) = successors.iter().find(|w| !self.current.vertices().contains(**w)) {
            return Err(ExplorationError::UnknownVertex(w));
        }
        let game = self.current.game_mut();
        for &w in successors {
            game.add_edge(from, w);
        }
        self.current.incomplete_mut().remove(from);
        Ok(())
    }
}
