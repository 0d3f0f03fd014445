//! Brute-force equilibrium check over the 32 pure symmetric profiles.
//!
//! Beliefs come straight from the outcome enumeration by Bayes' rule; no
//! closed form from `beliefs` or `thresholds` is used here.

use std::collections::BTreeMap;

use crate::model::{
    outcome_distribution, IncumbentType, ModelParams, ObservationClass, OutcomeTable, Posterior,
    StrategyProfile, VoterAction,
};

/// Gains at or below this are treated as ties.
pub const GAIN_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VoterDeviation {
    pub class: ObservationClass,
    pub prescribed: VoterAction,
    pub better: VoterAction,
    pub gain: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IncumbentDeviation {
    /// True if the profitable deviation is to start exerting effort.
    pub to_effort: bool,
    /// Change in re-election probability from deviating.
    pub win_prob_gain: f64,
    /// Change in payoff (ego rent times win probability, net of effort cost).
    pub net_gain: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyResult {
    pub is_equilibrium: bool,
    pub voter_deviations: Vec<VoterDeviation>,
    pub incumbent_deviation: Option<IncumbentDeviation>,
    pub offpath_classes: Vec<ObservationClass>,
    /// Largest difference, over the low and subversive types, between the
    /// re-election probabilities of the two policies. Zero when fixed 1/2
    /// mixing is a best response.
    pub policy_payoff_gap: f64,
}

/// Bayes-consistent beliefs at the on-path observation classes.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileBeliefs {
    pub posteriors: BTreeMap<ObservationClass, Posterior>,
    pub offpath: Vec<ObservationClass>,
}

impl ProfileBeliefs {
    pub fn get(&self, class: ObservationClass) -> Option<&Posterior> {
        self.posteriors.get(&class)
    }
}

/// All 32 profiles in index order (see [`StrategyProfile::index`]).
pub fn enumerate_profiles() -> Vec<StrategyProfile> {
    (0..StrategyProfile::COUNT)
        .filter_map(StrategyProfile::from_index)
        .collect()
}

pub fn beliefs_from_profile(params: &ModelParams, profile: &StrategyProfile) -> ProfileBeliefs {
    beliefs_from_table(&outcome_distribution(params, profile))
}

fn beliefs_from_table(table: &OutcomeTable) -> ProfileBeliefs {
    let mut posteriors = BTreeMap::new();
    let mut offpath = Vec::new();
    for class in ObservationClass::ALL {
        if table.observation_probability(class) > 0.0 {
            let post = table
                .posterior_given_class(class)
                .expect("positive-probability class has a posterior");
            posteriors.insert(class, post);
        } else {
            offpath.push(class);
        }
    }
    ProfileBeliefs {
        posteriors,
        offpath,
    }
}

fn high_win_probability(params: &ModelParams, profile: &StrategyProfile, effort: bool) -> f64 {
    let variant = StrategyProfile::new(effort, profile.voter_rule);
    outcome_distribution(params, &variant).retention_given_type(IncumbentType::High, profile)
}

fn policy_payoff_gap(table: &OutcomeTable, profile: &StrategyProfile) -> f64 {
    let mut gap: f64 = 0.0;
    for ty in [IncumbentType::Low, IncumbentType::Subversive] {
        let mut win = [0.0; 2];
        let mut mass = [0.0; 2];
        for a in table.atoms().iter().filter(|a| a.incumbent_type == ty) {
            let x = usize::from(a.policy);
            mass[x] += a.weight;
            if profile.voter_rule.retains(a.observation_class()) {
                win[x] += a.weight;
            }
        }
        if mass[0] > 0.0 && mass[1] > 0.0 {
            gap = gap.max((win[0] / mass[0] - win[1] / mass[1]).abs());
        }
    }
    gap
}

/// Checks mutual best responses.
///
/// The voter must weakly prefer the prescribed action at every on-path
/// class; off-path classes are unconstrained since any action is a best
/// response to some belief. The high type must weakly prefer its effort
/// choice given the voter's rule.
pub fn is_pbe(params: &ModelParams, profile: &StrategyProfile) -> VerifyResult {
    let table = outcome_distribution(params, profile);
    let beliefs = beliefs_from_table(&table);

    let mut voter_deviations = Vec::new();
    for (&class, post) in &beliefs.posteriors {
        let retain = post.retention_utility(params.s());
        let remove = params.u_c();
        let prescribed = profile.voter_rule.action(class);
        let (gain, better) = match prescribed {
            VoterAction::RetainIncumbent => (remove - retain, VoterAction::ElectChallenger),
            VoterAction::ElectChallenger => (retain - remove, VoterAction::RetainIncumbent),
        };
        if gain > GAIN_TOLERANCE {
            voter_deviations.push(VoterDeviation {
                class,
                prescribed,
                better,
                gain,
            });
        }
    }

    let with_effort = high_win_probability(params, profile, true);
    let without = high_win_probability(params, profile, false);
    let effort_value = (with_effort - without) * params.ego_rent() - params.k();
    let incumbent_deviation = if profile.high_effort {
        (-effort_value > GAIN_TOLERANCE).then(|| IncumbentDeviation {
            to_effort: false,
            win_prob_gain: without - with_effort,
            net_gain: -effort_value,
        })
    } else {
        (effort_value > GAIN_TOLERANCE).then_some(IncumbentDeviation {
            to_effort: true,
            win_prob_gain: with_effort - without,
            net_gain: effort_value,
        })
    };

    VerifyResult {
        is_equilibrium: voter_deviations.is_empty() && incumbent_deviation.is_none(),
        voter_deviations,
        incumbent_deviation,
        offpath_classes: beliefs.offpath,
        policy_payoff_gap: policy_payoff_gap(&table, profile),
    }
}

/// Every profile passing [`is_pbe`], in index order.
pub fn find_equilibria(params: &ModelParams) -> Vec<StrategyProfile> {
    enumerate_profiles()
        .into_iter()
        .filter(|p| is_pbe(params, p).is_equilibrium)
        .collect()
}
