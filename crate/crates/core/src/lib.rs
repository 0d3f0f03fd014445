//! Electoral accountability with a captured mainstream outlet and an
//! alternative outlet of uncertain reliability.
//!
//! An incumbent may be competent (high), incompetent (low) or an aspiring
//! autocrat (subversive) who controls the mainstream media. The voter sees
//! the policy, the mainstream verdict on it and the alternative outlet's
//! report on subversion, then re-elects or elects a challenger.
//!
//! * [`model`] enumerates the exact joint distribution of a play.
//! * [`beliefs`] and [`thresholds`] hold the closed forms.
//! * [`regimes`] classifies parameter points; [`verifier`] checks
//!   equilibria by brute force.
//! * [`sim`] runs seeded Monte Carlo elections.
//! * [`cli`] is the command-line front end.

pub mod beliefs;
pub mod cli;
pub mod error;
pub mod model;
pub mod regimes;
pub mod report;
pub mod sim;
pub mod thresholds;
pub mod verifier;

pub use error::{Error, Field, Result};
pub use model::{ModelParams, StrategyProfile};
