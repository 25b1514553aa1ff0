//! Canonical forms, outcomes and atomic weights for sums of BIPASS strips,
//! with an exhaustive harness that checks the ruleset's structure theorems
//! over bounded ranges.

pub mod atomic;
pub mod error;
pub mod eval;
pub mod ferrers;
pub mod game;
pub mod strip;
pub mod verify;

pub use atomic::FarStarOrder;
pub use error::{Error, Result};
pub use eval::Evaluator;
pub use ferrers::{from_ferrers, to_ferrers, Partition};
pub use game::{Arena, Comparison, GameId, Outcome};
pub use strip::{parse_strip, Larva, Player, Position, Stone, Strip};
pub use verify::Report;
