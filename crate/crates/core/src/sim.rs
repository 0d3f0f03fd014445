//! Monte Carlo play of the one-shot election and the matching exact metrics.
//!
//! Replications are split into fixed blocks of [`BLOCK_SIZE`]. Block `b`
//! draws from ChaCha8 seeded with the user seed on stream `b`, so the
//! random numbers a replication sees depend only on `(seed, index)` and
//! never on how blocks are scheduled across threads. Blocks only produce
//! integer counts, which are summed exactly.

use std::collections::BTreeMap;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{
    outcome_distribution, type_prior, AltReport, IncumbentType, ModelParams, ObservationClass,
    Posterior, StrategyProfile,
};

pub const BLOCK_SIZE: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq)]
pub struct Metrics {
    /// Re-election probability conditional on each type.
    pub retain_prob_by_type: BTreeMap<IncumbentType, f64>,
    /// Voter's election-stage payoff: the retained type's value, or `U_C`.
    pub expected_voter_welfare: f64,
    /// Beliefs at each observation class that occurred (empirical) or has
    /// positive probability (exact).
    pub empirical_posteriors: BTreeMap<ObservationClass, Posterior>,
    /// Zero for exact metrics.
    pub n_replications: u64,
    pub seed: u64,
}

impl Metrics {
    pub fn retain_prob(&self, ty: IncumbentType) -> f64 {
        self.retain_prob_by_type.get(&ty).copied().unwrap_or(0.0)
    }

    pub fn p_high_retained(&self) -> f64 {
        self.retain_prob(IncumbentType::High)
    }

    pub fn p_low_retained(&self) -> f64 {
        self.retain_prob(IncumbentType::Low)
    }

    pub fn p_subversive_retained(&self) -> f64 {
        self.retain_prob(IncumbentType::Subversive)
    }
}

/// Raw counts from a batch of replications.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Tally {
    drawn: [u64; 3],
    retained: [u64; 3],
    by_class: [[u64; 3]; 4],
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for t in 0..3 {
            self.drawn[t] += other.drawn[t];
            self.retained[t] += other.retained[t];
            for c in 0..4 {
                self.by_class[c][t] += other.by_class[c][t];
            }
        }
        self
    }
}

fn play_once(
    rng: &mut ChaCha8Rng,
    params: &ModelParams,
    profile: &StrategyProfile,
) -> (IncumbentType, ObservationClass, bool) {
    let u: f64 = rng.random();
    let ty = if u < params.sigma() {
        IncumbentType::Subversive
    } else if u < params.sigma() + (1.0 - params.sigma()) * params.pi() {
        IncumbentType::High
    } else {
        IncumbentType::Low
    };
    let state = rng.random_bool(0.5);
    let informed = ty == IncumbentType::High && profile.high_effort;
    let policy = if informed {
        state
    } else {
        rng.random_bool(0.5)
    };
    let message = if ty == IncumbentType::Subversive {
        policy
    } else if rng.random::<f64>() < params.q() {
        state
    } else {
        !state
    };
    let malicious = rng.random::<f64>() < params.phi();
    let report = if malicious || ty == IncumbentType::Subversive {
        AltReport::Subversive
    } else {
        AltReport::NotSubversive
    };
    let class = ObservationClass::new(message == policy, report);
    (ty, class, profile.voter_rule.retains(class))
}

fn run_block(
    params: &ModelParams,
    profile: &StrategyProfile,
    seed: u64,
    block: u64,
    len: u64,
) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    let mut tally = Tally::default();
    for _ in 0..len {
        let (ty, class, retained) = play_once(&mut rng, params, profile);
        let t = ty.index();
        tally.drawn[t] += 1;
        tally.retained[t] += u64::from(retained);
        tally.by_class[class.index()][t] += 1;
    }
    tally
}

/// Runs `n` independent replications. Identical `(params, profile, n, seed)`
/// give bit-identical output regardless of thread count.
pub fn simulate(
    params: &ModelParams,
    profile: &StrategyProfile,
    n: u64,
    seed: u64,
) -> Result<Metrics> {
    if n == 0 {
        return Err(Error::InvalidCount);
    }
    let blocks = n.div_ceil(BLOCK_SIZE);
    let tally = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let len = BLOCK_SIZE.min(n - b * BLOCK_SIZE);
            run_block(params, profile, seed, b, len)
        })
        .reduce(Tally::default, Tally::merge);

    let mut retain_prob_by_type = BTreeMap::new();
    for ty in IncumbentType::ALL {
        let t = ty.index();
        // A type never drawn contributes no evidence; report 0.
        let p = if tally.drawn[t] > 0 {
            tally.retained[t] as f64 / tally.drawn[t] as f64
        } else {
            0.0
        };
        retain_prob_by_type.insert(ty, p);
    }
    let removed = n - tally.retained.iter().sum::<u64>();
    let welfare = (tally.retained[0] as f64 - params.s() * tally.retained[2] as f64
        + params.u_c() * removed as f64)
        / n as f64;

    let empirical_posteriors = ObservationClass::ALL
        .iter()
        .filter_map(|c| {
            let counts = tally.by_class[c.index()];
            Posterior::from_weights(counts.map(|x| x as f64)).map(|p| (*c, p))
        })
        .collect();

    Ok(Metrics {
        retain_prob_by_type,
        expected_voter_welfare: welfare,
        empirical_posteriors,
        n_replications: n,
        seed,
    })
}

/// Exact counterpart of [`simulate`], read off the outcome enumeration.
pub fn theoretical_metrics(params: &ModelParams, profile: &StrategyProfile) -> Metrics {
    let table = outcome_distribution(params, profile);
    let prior = type_prior(params);
    let mut retain_prob_by_type = BTreeMap::new();
    let mut welfare = 0.0;
    for ty in IncumbentType::ALL {
        let retained = table.retention_given_type(ty, profile);
        retain_prob_by_type.insert(ty, retained);
        let value = match ty {
            IncumbentType::High => 1.0,
            IncumbentType::Low => 0.0,
            IncumbentType::Subversive => -params.s(),
        };
        welfare += prior[ty.index()] * (retained * value + (1.0 - retained) * params.u_c());
    }
    let empirical_posteriors = ObservationClass::ALL
        .iter()
        .filter(|c| table.observation_probability(**c) > 0.0)
        .filter_map(|c| table.posterior_given_class(*c).map(|p| (*c, p)))
        .collect();
    Metrics {
        retain_prob_by_type,
        expected_voter_welfare: welfare,
        empirical_posteriors,
        n_replications: 0,
        seed: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canonical() -> ModelParams {
        ModelParams::new(0.05, 0.5, 0.7, 0.1, 1.0, 0.4, 0.3).unwrap()
    }

    #[test]
    fn zero_replications_rejected() {
        assert_eq!(
            simulate(
                &canonical(),
                &StrategyProfile::accountability_listen(),
                0,
                1
            ),
            Err(Error::InvalidCount)
        );
    }

    #[test]
    fn exact_listen_metrics() {
        let m = theoretical_metrics(&canonical(), &StrategyProfile::accountability_listen());
        assert!((m.p_high_retained() - 0.49).abs() < 1e-12);
        assert!((m.p_low_retained() - 0.35).abs() < 1e-12);
        assert_eq!(m.p_subversive_retained(), 0.0);
        assert_eq!(m.n_replications, 0);
    }

    #[test]
    fn exact_ignore_metrics() {
        let p = canonical().with_phi(0.8).unwrap();
        let m = theoretical_metrics(&p, &StrategyProfile::accountability_ignore());
        assert!((m.p_high_retained() - 0.7).abs() < 1e-12);
        assert!((m.p_low_retained() - 0.5).abs() < 1e-12);
        assert!((m.p_subversive_retained() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn remove_always_welfare_is_challenger_utility() {
        for phi in [0.0, 0.4, 1.0] {
            let p = canonical().with_phi(phi).unwrap();
            let m = theoretical_metrics(&p, &StrategyProfile::remove_always());
            assert!((m.expected_voter_welfare - p.u_c()).abs() < 1e-12);
            let sim = simulate(&p, &StrategyProfile::remove_always(), 1000, 3).unwrap();
            assert!((sim.expected_voter_welfare - p.u_c()).abs() < 1e-12);
        }
    }

    #[test]
    fn retain_always_keeps_subversives() {
        let m = simulate(&canonical(), &StrategyProfile::retain_always(), 5000, 9).unwrap();
        assert_eq!(m.p_subversive_retained(), 1.0);
        assert_eq!(m.p_high_retained(), 1.0);
    }

    #[test]
    fn listen_rule_never_retains_subversive() {
        let m = simulate(
            &canonical(),
            &StrategyProfile::accountability_listen(),
            50_000,
            7,
        )
        .unwrap();
        assert_eq!(m.p_subversive_retained(), 0.0);
        assert!(m
            .retain_prob_by_type
            .values()
            .all(|p| (0.0..=1.0).contains(p)));
    }

    #[test]
    fn same_seed_same_result_different_seed_differs() {
        let p = canonical();
        let profile = StrategyProfile::accountability_listen();
        let a = simulate(&p, &profile, 40_000, 11).unwrap();
        let b = simulate(&p, &profile, 40_000, 11).unwrap();
        let c = simulate(&p, &profile, 40_000, 12).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn thread_count_does_not_change_result() {
        let p = canonical();
        let profile = StrategyProfile::select_on_alt();
        let n = 5 * BLOCK_SIZE + 17;
        let multi = simulate(&p, &profile, n, 5).unwrap();
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| simulate(&p, &profile, n, 5).unwrap());
        assert_eq!(multi, single);
    }

    #[test]
    fn prefix_blocks_are_shared() {
        // The first block sees the same draws whatever the total count.
        let p = canonical();
        let profile = StrategyProfile::accountability_listen();
        let a = run_block(&p, &profile, 21, 0, 100);
        let b = run_block(&p, &profile, 21, 0, 100);
        assert_eq!(a, b);
        assert_ne!(a, run_block(&p, &profile, 21, 1, 100));
    }
}
