//! Threshold values on `phi` and the challenger-utility cutoffs, plus the
//! direct comparisons the regime classifier uses.
//!
//! The `phi` thresholds come from dividing through by a denominator whose
//! sign is not fixed. When it is nonpositive the corresponding condition
//! holds for every `phi`, which the `+inf` sentinel encodes. The predicates
//! below compare utilities directly and never divide.

use crate::beliefs::{retention_utility, Conditioning};
use crate::model::ModelParams;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    /// Largest `phi` at which effort survives when an accusation costs re-election.
    pub phi_e: f64,
    /// Largest `phi` at which the voter removes an endorsed but accused incumbent.
    pub phi_v: f64,
    /// Largest `phi` at which an accusation alone justifies removal.
    pub phi_a: f64,
    /// Largest `phi` at which an accusation against an endorsed incumbent
    /// justifies removal when nobody exerts effort.
    pub phi_a_consistent: f64,
    pub phi_e_clamped: f64,
    pub phi_v_clamped: f64,
    pub phi_a_clamped: f64,
    pub phi_a_consistent_clamped: f64,
    /// Retention utility after a contradicting mainstream message.
    pub u_lo: f64,
    /// Retention utility after an endorsing mainstream message.
    pub u_hi: f64,
    /// Retention utility after an endorsement and no accusation.
    pub u_hi2: f64,
}

fn ratio_or_inf(num: f64, den: f64) -> f64 {
    if den > 0.0 {
        num / den
    } else {
        f64::INFINITY
    }
}

fn clamp01(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

pub fn compute_thresholds(p: &ModelParams) -> Thresholds {
    let (pi, q, k, s, u_c, l) = (p.pi(), p.q(), p.k(), p.s(), p.u_c(), p.l());
    let phi_e = 1.0 - k / (q - 0.5);
    let phi_v = ratio_or_inf((s + u_c) * l, pi * q * (1.0 - u_c) - (1.0 - pi) * 0.5 * u_c);
    let phi_a = ratio_or_inf((s + u_c) * l, pi - u_c);
    let phi_a_consistent = ratio_or_inf((s + u_c) * l, 0.5 * (pi - u_c));
    let half_low = (1.0 - pi) * 0.5;
    Thresholds {
        phi_e,
        phi_v,
        phi_a,
        phi_a_consistent,
        phi_e_clamped: clamp01(phi_e),
        phi_v_clamped: clamp01(phi_v),
        phi_a_clamped: clamp01(phi_a),
        phi_a_consistent_clamped: clamp01(phi_a_consistent),
        u_lo: pi * (1.0 - q) / (pi * (1.0 - q) + half_low),
        u_hi: (pi * q - s * l) / (pi * q + half_low + l),
        u_hi2: pi * q / (pi * q + half_low),
    }
}

/// Whether the voter removes an endorsed incumbent the alternative outlet
/// accuses, assuming accountability. Ties go to the challenger.
pub fn listens_to_alt(p: &ModelParams) -> bool {
    let u_v = retention_utility(p, Conditioning::ConsistentS)
        .expect("endorsed-and-accused is reachable for interior sigma");
    p.u_c() >= u_v
}

/// Whether the high type's win-probability gain covers the effort cost.
///
/// Without clearance effort lifts re-election from 1/2 to `q`; when an
/// accusation also costs re-election, only a truthful outlet pays off,
/// scaling the gain by `1 - phi`. Indifference resolves toward effort.
pub fn effort_sustainable(p: &ModelParams, requires_alt_clearance: bool) -> bool {
    let gain = p.q() - 0.5;
    let gain = if requires_alt_clearance {
        gain * (1.0 - p.phi())
    } else {
        gain
    };
    p.k() <= gain
}

/// Retention utility at `agree/S` when the high type does not exert effort.
///
/// Non-subversive incumbents are then endorsed half the time, while
/// propaganda always endorses, so this is below the accusation-only utility.
pub fn endorsed_accused_utility_without_effort(p: &ModelParams) -> f64 {
    let half_phi = 0.5 * p.phi();
    (p.pi() * half_phi - p.s() * p.l()) / (half_phi + p.l())
}

/// Whether, absent effort, the voter removes an endorsed incumbent who is accused.
pub fn removes_accused_without_effort(p: &ModelParams) -> bool {
    p.u_c() >= endorsed_accused_utility_without_effort(p)
}

/// Whether a non-subversive incumbent of unknown competence beats the challenger.
pub fn cleared_incumbent_preferred(p: &ModelParams) -> bool {
    p.pi() > p.u_c()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canonical() -> ModelParams {
        ModelParams::new(0.05, 0.5, 0.7, 0.1, 1.0, 0.4, 0.3).unwrap()
    }

    #[test]
    fn canonical_thresholds() {
        let t = compute_thresholds(&canonical());
        let l = 1.0 / 19.0;
        assert!((t.phi_e - 0.5).abs() < 1e-12);
        assert!((t.phi_v - 1.4 * l / 0.11).abs() < 1e-12);
        assert!((t.phi_v - 0.66986).abs() < 5e-6);
        assert!((t.phi_a - 1.4 * l / 0.1).abs() < 1e-12);
        assert!((t.phi_a - 0.73684).abs() < 5e-6);
        assert!((t.u_lo - 0.375).abs() < 1e-12);
        assert!((t.u_hi - 0.45565).abs() < 5e-6);
        assert!((t.u_hi2 - 0.58333).abs() < 5e-6);
        assert_eq!(t.phi_a_consistent, 2.0 * t.phi_a);
        assert_eq!(t.phi_a_consistent_clamped, 1.0);
    }

    #[test]
    fn free_effort_survives_any_malice() {
        let t = compute_thresholds(&canonical().with(crate::Field::K, 0.0).unwrap());
        assert_eq!(t.phi_e, 1.0);
    }

    #[test]
    fn zero_denominator_gives_sentinel() {
        let p = canonical().with(crate::Field::Uc, 0.5).unwrap();
        let t = compute_thresholds(&p);
        assert_eq!(t.phi_a, f64::INFINITY);
        assert_eq!(t.phi_a_clamped, 1.0);
    }

    #[test]
    fn costly_effort_gives_negative_phi_e() {
        let t = compute_thresholds(&canonical().with(crate::Field::K, 0.3).unwrap());
        assert!(t.phi_e < 0.0);
        assert_eq!(t.phi_e_clamped, 0.0);
    }

    #[test]
    fn listening_examples() {
        assert!(listens_to_alt(&canonical()));
        let p = canonical().with_phi(0.8).unwrap();
        let u_v = retention_utility(&p, Conditioning::ConsistentS).unwrap();
        let l = 1.0 / 19.0;
        assert!((u_v - (0.28 - l) / (0.28 + 0.2 + l)).abs() < 1e-12);
        assert!((u_v - 0.4269).abs() < 5e-5);
        assert!(!listens_to_alt(&p));
    }

    #[test]
    fn reliable_outlet_is_always_heeded() {
        for (s, u_c) in [(0.0, 0.0), (1.0, -1.0), (3.0, 1.0), (0.5, 0.2)] {
            let p = ModelParams::new(0.3, 0.6, 0.9, 0.1, s, u_c, 0.0).unwrap();
            assert!(listens_to_alt(&p), "s={s} uc={u_c}");
        }
    }

    #[test]
    fn effort_examples() {
        let p = canonical();
        assert!(effort_sustainable(&p, true));
        assert!(!effort_sustainable(&p.with_phi(0.6).unwrap(), true));
        assert!(effort_sustainable(&p.with_phi(0.6).unwrap(), false));
        let edge = ModelParams::new(0.05, 0.5, 0.75, 0.25, 1.0, 0.4, 0.3).unwrap();
        assert!(effort_sustainable(&edge, false));
    }

    #[test]
    fn endorsed_accused_utility_matches_half_malice_accusation_utility() {
        let p = canonical().with_phi(0.6).unwrap();
        let half = canonical().with_phi(0.3).unwrap();
        let direct = endorsed_accused_utility_without_effort(&p);
        let via_beliefs = retention_utility(&half, Conditioning::AltOnlyS).unwrap();
        assert!((direct - via_beliefs).abs() < 1e-12);
        assert!(removes_accused_without_effort(&p));
    }
}
