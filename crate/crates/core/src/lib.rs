//! On-the-fly solving of parity games.
//!
//! A game is explored one vertex at a time from an [`exploration::Expander`].
//! Between exploration steps the driver runs partial solvers that only
//! report regions no further exploration can overturn: they work inside
//! *safe* sets, away from the vertices where the opponent might still gain
//! new moves. Exploration stops as soon as the designated vertex is decided.
//!
//! ```
//! use otfpg::exploration::{run_driver, DriverConfig, GameExpander};
//! use otfpg::game::{Player, VertexId};
//! use otfpg::solvers::SolverKind;
//! use otfpg::testkit::gen_safety_family;
//!
//! let universe = gen_safety_family(20, true).unwrap();
//! let root = VertexId::new(0);
//! let cfg = DriverConfig::new(SolverKind::SolitaireSafe);
//! let report = run_driver(&mut GameExpander::new(&universe), root, &root, &cfg).unwrap();
//! assert_eq!(report.decided_winner, Some(Player::Odd));
//! assert!(report.vertices_explored < universe.len());
//! ```
//!
//! Priorities use the min convention: the least priority seen infinitely
//! often decides, even for Even and odd for Odd. A play that gets stuck is
//! lost by the owner of the last vertex.

pub mod batch;
pub mod exploration;
pub mod fixpoints;
pub mod fixtures;
pub mod game;
pub mod io;
pub mod par;
pub mod solvers;
pub mod testkit;
pub mod vertex_set;
pub mod work;

pub use game::{check_extension, Game, GameError, IncompleteGame, Player, Priority, Solution, Strategy, VertexId};
pub use par::ExecMode;
pub use solvers::SolverKind;
pub use vertex_set::VertexSet;
