//! Exact joint distribution of one play of the game.
//!
//! Every downstream quantity (posteriors, win probabilities, retention
//! rates) can be read off this table, which makes it the reference the
//! closed forms and the verifier are checked against.

use super::params::ModelParams;
use super::profile::{AltReport, IncumbentType, ObservationClass, Posterior, StrategyProfile};

/// One elementary outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub incumbent_type: IncumbentType,
    /// True state, 0 or 1.
    pub state: u8,
    /// Whether the incumbent learned the state before choosing.
    pub effort_applied: bool,
    pub policy: u8,
    pub mainstream_message: u8,
    pub alt_is_malicious: bool,
    pub alt_report: AltReport,
    pub weight: f64,
}

impl Atom {
    pub fn observation_class(&self) -> ObservationClass {
        ObservationClass::new(self.mainstream_message == self.policy, self.alt_report)
    }

    /// Same outcome with policy and state labels swapped (0 <-> 1).
    pub fn relabeled(&self) -> Atom {
        Atom {
            state: 1 - self.state,
            policy: 1 - self.policy,
            mainstream_message: 1 - self.mainstream_message,
            ..*self
        }
    }

    /// Equality of everything except the weight.
    pub fn same_outcome(&self, other: &Atom) -> bool {
        self.incumbent_type == other.incumbent_type
            && self.state == other.state
            && self.effort_applied == other.effort_applied
            && self.policy == other.policy
            && self.mainstream_message == other.mainstream_message
            && self.alt_is_malicious == other.alt_is_malicious
            && self.alt_report == other.alt_report
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeTable {
    atoms: Vec<Atom>,
    by_class: [f64; 4],
    by_type_class: [[f64; 4]; 3],
}

/// Prior mass of each type, indexed by [`IncumbentType::index`].
pub fn type_prior(params: &ModelParams) -> [f64; 3] {
    let ns = 1.0 - params.sigma();
    [ns * params.pi(), ns * (1.0 - params.pi()), params.sigma()]
}

/// Enumerates every outcome reachable under `profile`.
///
/// Branches that the signal structure rules out (an informed incumbent
/// choosing against the state, propaganda contradicting the policy) are
/// never generated. Branches with zero weight only because of a parameter
/// value (e.g. `phi = 0`) are kept.
pub fn outcome_distribution(params: &ModelParams, profile: &StrategyProfile) -> OutcomeTable {
    let prior = type_prior(params);
    let q = params.q();
    let phi = params.phi();
    let mut atoms = Vec::with_capacity(48);

    for ty in IncumbentType::ALL {
        let informed = ty == IncumbentType::High && profile.high_effort;
        for state in 0..2u8 {
            for policy in 0..2u8 {
                let p_policy = if informed {
                    if policy != state {
                        continue;
                    }
                    1.0
                } else {
                    0.5
                };
                for message in 0..2u8 {
                    let p_message = if ty == IncumbentType::Subversive {
                        if message != policy {
                            continue;
                        }
                        1.0
                    } else if message == state {
                        q
                    } else {
                        1.0 - q
                    };
                    for malicious in [false, true] {
                        let p_alt = if malicious { phi } else { 1.0 - phi };
                        let alt_report = if malicious || ty == IncumbentType::Subversive {
                            AltReport::Subversive
                        } else {
                            AltReport::NotSubversive
                        };
                        atoms.push(Atom {
                            incumbent_type: ty,
                            state,
                            effort_applied: informed,
                            policy,
                            mainstream_message: message,
                            alt_is_malicious: malicious,
                            alt_report,
                            weight: prior[ty.index()] * 0.5 * p_policy * p_message * p_alt,
                        });
                    }
                }
            }
        }
    }
    OutcomeTable::from_atoms(atoms)
}

/// Marginal probability of an observation class. Exactly zero when unreachable.
pub fn observation_probability(table: &OutcomeTable, obs: ObservationClass) -> f64 {
    table.observation_probability(obs)
}

impl OutcomeTable {
    fn from_atoms(atoms: Vec<Atom>) -> Self {
        let mut by_class = [0.0; 4];
        let mut by_type_class = [[0.0; 4]; 3];
        for a in &atoms {
            let c = a.observation_class().index();
            by_class[c] += a.weight;
            by_type_class[a.incumbent_type.index()][c] += a.weight;
        }
        Self {
            atoms,
            by_class,
            by_type_class,
        }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn total(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight).sum()
    }

    pub fn observation_probability(&self, obs: ObservationClass) -> f64 {
        self.by_class[obs.index()]
    }

    /// Joint probability of a type and an observation class.
    pub fn joint(&self, ty: IncumbentType, obs: ObservationClass) -> f64 {
        self.by_type_class[ty.index()][obs.index()]
    }

    pub fn type_probability(&self, ty: IncumbentType) -> f64 {
        self.by_type_class[ty.index()].iter().sum()
    }

    /// `Pr(obs | type)`.
    pub fn class_given_type(&self, ty: IncumbentType, obs: ObservationClass) -> f64 {
        let mass = self.type_probability(ty);
        if mass > 0.0 {
            self.joint(ty, obs) / mass
        } else {
            0.0
        }
    }

    /// Bayes posterior over types given an observation class; `None` if the
    /// class has probability zero.
    pub fn posterior_given_class(&self, obs: ObservationClass) -> Option<Posterior> {
        let c = obs.index();
        Posterior::from_weights([
            self.by_type_class[0][c],
            self.by_type_class[1][c],
            self.by_type_class[2][c],
        ])
    }

    /// Posterior over types conditional on an arbitrary event, summed atom by atom.
    pub fn posterior_given(&self, event: impl Fn(&Atom) -> bool) -> Option<Posterior> {
        let mut w = [0.0; 3];
        for a in self.atoms.iter().filter(|a| event(a)) {
            w[a.incumbent_type.index()] += a.weight;
        }
        Posterior::from_weights(w)
    }

    /// Probability a type is re-elected under `profile`'s voter rule.
    pub fn retention_given_type(&self, ty: IncumbentType, profile: &StrategyProfile) -> f64 {
        ObservationClass::ALL
            .iter()
            .filter(|c| profile.voter_rule.retains(**c))
            .map(|c| self.class_given_type(ty, *c))
            .sum()
    }
}
