//! Incremental construction of a game from a hidden universe, and the
//! on-the-fly driver that interleaves exploration with partial solving.

mod builder;
mod driver;
mod frontier;

use std::hash::Hash;

use thiserror::Error;

use crate::game::{Game, Player, Priority, VertexId};

pub use builder::IncrementalGame;
pub use driver::{run_driver, run_driver_observed, CostMode, DriverConfig, DriverReport};
pub use frontier::ExplorationStrategy;

pub type BoxError = Box<dyn std::error::Error + Send + Sync>;

#[derive(Debug, Error)]
pub enum ExplorationError {
    #[error("vertex {0} is not incomplete; it was already expanded")]
    NotIncomplete(VertexId),
    #[error("vertex {0} is not part of the explored game")]
    UnknownVertex(VertexId),
    #[error("invalid driver configuration: {0}")]
    InvalidConfig(String),
    #[error("expander failed: {0}")]
    Expander(#[source] BoxError),
}

/// Access to a game that is only revealed one vertex at a time.
///
/// Expanding the same state twice must give the same successors.
pub trait Expander {
    type State: Clone + Eq + Hash;

    /// Owner and priority of a state.
    fn describe(&self, state: &Self::State) -> Result<(Player, Priority), BoxError>;

    /// The complete successor list of a state.
    fn successors(&mut self, state: &Self::State) -> Result<Vec<Self::State>, BoxError>;
}

/// Expander over a game that is already stored in memory.
#[derive(Clone, Debug)]
pub struct GameExpander<'a> {
    universe: &'a Game,
}

impl<'a> GameExpander<'a> {
    pub fn new(universe: &'a Game) -> Self {
        Self { universe }
    }

    fn check(&self, v: VertexId) -> Result<(), BoxError> {
        if self.universe.contains(v) {
            Ok(())
        } else {
            Err(format!("vertex {v} is not in the universe").into())
        }
    }
}

impl Expander for GameExpander<'_> {
    type State = VertexId;

    fn describe(&self, &v: &VertexId) -> Result<(Player, Priority), BoxError> {
        self.check(v)?;
        Ok((self.universe.owner(v), self.universe.priority(v)))
    }

    fn successors(&mut self, &v: &VertexId) -> Result<Vec<VertexId>, BoxError> {
        self.check(v)?;
        Ok(self.universe.successors(v).to_vec())
    }
}
