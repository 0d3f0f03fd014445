//! Game primitives, strategy profiles and the exact outcome enumeration.

mod outcome;
mod params;
mod profile;

pub use outcome::{observation_probability, outcome_distribution, type_prior, Atom, OutcomeTable};
pub use params::{validate_params, ModelParams, RawParams, EGO_RENT};
pub use profile::{
    AltReport, IncumbentType, ObservationClass, Posterior, StrategyProfile, VoterAction, VoterRule,
};
