use media_accountability::beliefs::mainstream_trust;
use media_accountability::model::{
    outcome_distribution, type_prior, AltReport, IncumbentType, ModelParams, ObservationClass,
    StrategyProfile,
};
use media_accountability::regimes::{classify, decision_margin};
use media_accountability::thresholds::{compute_thresholds, effort_sustainable, listens_to_alt};
use media_accountability::verifier::is_pbe;
use media_accountability::Field;
use proptest::prelude::*;

fn params() -> impl Strategy<Value = ModelParams> {
    (
        0.001..0.999f64,
        0.001..0.999f64,
        0.501..1.0f64,
        0.0..0.5f64,
        0.0..4.0f64,
        0.0..1.0f64,
        0.0..=1.0f64,
    )
        .prop_filter_map("invalid", |(sigma, pi, q, k, s, t, phi)| {
            // u_c spans [-s, 1]
            let u_c = -s + t * (1.0 + s);
            ModelParams::new(sigma, pi, q, k, s, u_c, phi).ok()
        })
}

fn profile() -> impl Strategy<Value = StrategyProfile> {
    (0..StrategyProfile::COUNT).prop_map(|i| StrategyProfile::from_index(i).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn outcome_table_is_normalised_with_prior_type_masses(p in params(), prof in profile()) {
        let t = outcome_distribution(&p, &prof);
        prop_assert!((t.total() - 1.0).abs() <= 1e-12);
        let class_total: f64 = ObservationClass::ALL.iter().map(|&c| t.observation_probability(c)).sum();
        prop_assert!((class_total - 1.0).abs() <= 1e-12);
        let prior = type_prior(&p);
        for ty in IncumbentType::ALL {
            prop_assert!((t.type_probability(ty) - prior[ty.index()]).abs() <= 1e-12);
        }
    }

    #[test]
    fn relabelling_state_and_policy_preserves_weights(p in params(), prof in profile()) {
        let t = outcome_distribution(&p, &prof);
        for a in t.atoms() {
            let image = a.relabeled();
            let twin = t.atoms().iter().find(|b| b.same_outcome(&image));
            prop_assert!(twin.is_some(), "no twin for {:?}", a);
            prop_assert!((twin.unwrap().weight - a.weight).abs() <= 1e-15);
            prop_assert_eq!(image.observation_class(), a.observation_class());
        }
    }

    #[test]
    fn subversive_incumbent_is_always_endorsed_and_accused(p in params(), prof in profile()) {
        let t = outcome_distribution(&p, &prof);
        for a in t.atoms().iter().filter(|a| a.incumbent_type == IncumbentType::Subversive) {
            prop_assert!(a.mainstream_message == a.policy);
            prop_assert_eq!(a.alt_report, AltReport::Subversive);
        }
    }

    #[test]
    fn without_effort_competence_is_unobservable(p in params(), mask in 0u8..16) {
        let prof = StrategyProfile::from_index(mask as usize).unwrap();
        prop_assert!(!prof.high_effort);
        let t = outcome_distribution(&p, &prof);
        for c in ObservationClass::ALL {
            let h = t.class_given_type(IncumbentType::High, c);
            let l = t.class_given_type(IncumbentType::Low, c);
            prop_assert!((h - l).abs() <= 1e-12, "{}: {} vs {}", c, h, l);
        }
    }

    #[test]
    fn listening_matches_phi_v(p in params()) {
        let th = compute_thresholds(&p);
        prop_assume!((p.phi() - th.phi_v).abs() > 1e-9);
        prop_assert_eq!(listens_to_alt(&p), p.phi() <= th.phi_v);
    }

    #[test]
    fn effort_matches_phi_e(p in params()) {
        let th = compute_thresholds(&p);
        prop_assume!((p.phi() - th.phi_e).abs() > 1e-9);
        prop_assert_eq!(effort_sustainable(&p, true), p.phi() <= th.phi_e);
        // without clearance effort only needs k <= q - 1/2
        prop_assume!((p.k() - (p.q() - 0.5)).abs() > 1e-12);
        prop_assert_eq!(effort_sustainable(&p, false), p.k() <= p.q() - 0.5);
    }

    #[test]
    fn thresholds_move_the_right_way(p in params(), dk in 0.0..0.1f64, ds in 0.0..1.0f64) {
        let th = compute_thresholds(&p);
        let k2 = p.k() + dk;
        let th_k = compute_thresholds(&p.with(Field::K, k2).unwrap());
        prop_assert!(th_k.phi_e <= th.phi_e);
        let th_s = compute_thresholds(&p.with(Field::S, p.s() + ds).unwrap());
        prop_assert!(th_s.phi_v >= th.phi_v && th_s.phi_a >= th.phi_a);
        prop_assert!(th_s.u_hi <= th.u_hi);
        prop_assert!(th.u_hi < th.u_hi2);
        prop_assert!(th.u_lo < th.u_hi2);
        for x in [th.phi_e_clamped, th.phi_v_clamped, th.phi_a_clamped, th.phi_a_consistent_clamped] {
            prop_assert!((0.0..=1.0).contains(&x));
        }
    }

    #[test]
    fn class_posteriors_are_bayes_rule(p in params(), prof in profile()) {
        let t = outcome_distribution(&p, &prof);
        for c in ObservationClass::ALL {
            let pr = t.observation_probability(c);
            match t.posterior_given_class(c) {
                None => prop_assert_eq!(pr, 0.0),
                Some(post) => {
                    prop_assert!(pr > 0.0);
                    for ty in IncumbentType::ALL {
                        prop_assert!((post.prob(ty) - t.joint(ty, c) / pr).abs() <= 1e-12);
                    }
                    let sum = post.p_high + post.p_low + post.p_subversive;
                    prop_assert!((sum - 1.0).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn policy_labels_do_not_matter_to_payoffs(p in params(), prof in profile()) {
        prop_assert!(is_pbe(&p, &prof).policy_payoff_gap <= 1e-12);
    }

    #[test]
    fn classified_profile_is_an_equilibrium(p in params()) {
        prop_assume!(decision_margin(&p) > 1e-6);
        let report = classify(&p);
        let check = is_pbe(&p, &report.profile);
        prop_assert!(check.is_equilibrium, "{} at {:?}: {:?}", report.regime, p, check);
    }

    #[test]
    fn trust_is_bounded_by_prior_and_decreasing(sigma in 0.001..0.999f64, phi in 0.0..=1.0f64,
                                                 ds in 0.0..0.5f64, dphi in 0.0..0.5f64) {
        let t = mainstream_trust(sigma, phi).unwrap();
        prop_assert!(t <= 1.0 - sigma + 1e-12);
        prop_assert!(mainstream_trust(sigma, (phi + dphi).min(1.0)).unwrap() <= t);
        prop_assert!(mainstream_trust((sigma + ds).min(0.999), phi).unwrap() <= t);
    }
}
