//! Equilibrium regime classification and one-parameter sweeps.

use std::fmt;

use rayon::prelude::*;

use crate::beliefs::{retention_utility, Conditioning};
use crate::error::{Error, Field, Result};
use crate::model::{ModelParams, StrategyProfile};
use crate::thresholds::{
    cleared_incumbent_preferred, compute_thresholds, effort_sustainable,
    endorsed_accused_utility_without_effort, listens_to_alt, removes_accused_without_effort,
    Thresholds,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    /// Effort; retained only when endorsed and not accused.
    AccountabilityListenBoth,
    /// Effort; retained whenever endorsed, accusations ignored.
    AccountabilityMainstreamOnly,
    /// No effort; accused incumbents removed unless the mainstream contradicted them.
    NoAccountabilitySelectOnAlt,
    NoAccountabilityRetainAlways,
    NoAccountabilityRemoveAlways,
}

impl Regime {
    pub const ALL: [Regime; 5] = [
        Regime::AccountabilityListenBoth,
        Regime::AccountabilityMainstreamOnly,
        Regime::NoAccountabilitySelectOnAlt,
        Regime::NoAccountabilityRetainAlways,
        Regime::NoAccountabilityRemoveAlways,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Regime::AccountabilityListenBoth => "AccountabilityListenBoth",
            Regime::AccountabilityMainstreamOnly => "AccountabilityMainstreamOnly",
            Regime::NoAccountabilitySelectOnAlt => "NoAccountabilitySelectOnAlt",
            Regime::NoAccountabilityRetainAlways => "NoAccountabilityRetainAlways",
            Regime::NoAccountabilityRemoveAlways => "NoAccountabilityRemoveAlways",
        }
    }

    pub fn profile(self) -> StrategyProfile {
        match self {
            Regime::AccountabilityListenBoth => StrategyProfile::accountability_listen(),
            Regime::AccountabilityMainstreamOnly => StrategyProfile::accountability_ignore(),
            Regime::NoAccountabilitySelectOnAlt => StrategyProfile::select_on_alt(),
            Regime::NoAccountabilityRetainAlways => StrategyProfile::retain_always(),
            Regime::NoAccountabilityRemoveAlways => StrategyProfile::remove_always(),
        }
    }

    pub fn has_accountability(self) -> bool {
        matches!(
            self,
            Regime::AccountabilityListenBoth | Regime::AccountabilityMainstreamOnly
        )
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Regime {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Regime::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown regime `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegimeReport {
    pub regime: Regime,
    pub profile: StrategyProfile,
    pub thresholds: Thresholds,
    /// The comparisons that decided the classification, in evaluation order.
    pub notes: Vec<String>,
}

/// Assigns the parameter point to a regime.
///
/// A moderately appealing challenger (`U_lo <= U_C < U_hi`) allows
/// accountability either with the voter heeding accusations (when effort
/// survives the risk of false accusation) or ignoring them (when
/// accusations are too unreliable). A more appealing challenger
/// (`U_hi <= U_C < U_hi2`) allows only the former. Every other case,
/// including the band where the voter heeds accusations but effort
/// collapses, falls back to the best no-effort rule.
pub fn classify(p: &ModelParams) -> RegimeReport {
    let t = compute_thresholds(p);
    let u_c = p.u_c();
    let mut notes = Vec::new();
    let listens = listens_to_alt(p);
    let effort_cleared = effort_sustainable(p, true);

    let moderate = u_c >= t.u_lo && u_c < t.u_hi;
    let appealing = u_c >= t.u_hi && u_c < t.u_hi2 && u_c >= t.u_lo;

    if moderate || appealing {
        notes.push(if moderate {
            "U_lo <= U_C < U_hi".to_string()
        } else {
            "U_hi <= U_C < U_hi2".to_string()
        });
        if listens && effort_cleared {
            notes.push("U_C >= U_v: accusations heeded".into());
            notes.push("k <= (q - 1/2)(1 - phi): effort survives".into());
            return report(Regime::AccountabilityListenBoth, t, notes);
        }
        if moderate && !listens {
            notes.push("U_C < U_v: accusations ignored".into());
            if effort_sustainable(p, false) {
                notes.push("k <= q - 1/2: effort survives".into());
                return report(Regime::AccountabilityMainstreamOnly, t, notes);
            }
            notes.push("k > q - 1/2: effort unsustainable".into());
        } else if listens {
            notes.push("U_C >= U_v: accusations heeded".into());
            notes.push("k > (q - 1/2)(1 - phi): fear of false accusation kills effort".into());
        }
    } else if u_c < t.u_lo {
        notes.push("U_C < U_lo: unappealing challenger".into());
    } else {
        notes.push("U_C >= U_hi2: challenger too appealing".into());
    }

    // No-effort fallback. Under no effort an agreeing mainstream message
    // still separates propaganda from chance agreement.
    if cleared_incumbent_preferred(p) {
        notes.push("pi > U_C: cleared incumbent retained".into());
        if removes_accused_without_effort(p) {
            notes.push("U_C >= U(agree, S | no effort): endorsed and accused removed".into());
            if p.phi() > t.phi_a {
                notes.push("phi > phi_a: removal relies on the endorsement being observed".into());
            }
            return report(Regime::NoAccountabilitySelectOnAlt, t, notes);
        }
        notes.push("U_C < U(agree, S | no effort): accusations ignored".into());
        return report(Regime::NoAccountabilityRetainAlways, t, notes);
    }
    notes.push("pi <= U_C: challenger preferred at every observation".into());
    report(Regime::NoAccountabilityRemoveAlways, t, notes)
}

fn report(regime: Regime, thresholds: Thresholds, notes: Vec<String>) -> RegimeReport {
    RegimeReport {
        regime,
        profile: regime.profile(),
        thresholds,
        notes,
    }
}

/// Smallest gap between the two sides of any comparison [`classify`] makes.
///
/// Points with a tiny margin sit on a regime boundary, where the tie
/// conventions rather than the economics decide the outcome.
pub fn decision_margin(p: &ModelParams) -> f64 {
    let t = compute_thresholds(p);
    let u_c = p.u_c();
    let u_v = retention_utility(p, Conditioning::ConsistentS).unwrap_or(f64::NAN);
    let gain = p.q() - 0.5;
    [
        u_c - t.u_lo,
        u_c - t.u_hi,
        u_c - t.u_hi2,
        u_c - u_v,
        p.k() - gain,
        p.k() - gain * (1.0 - p.phi()),
        p.pi() - u_c,
        u_c - endorsed_accused_utility_without_effort(p),
    ]
    .into_iter()
    .map(f64::abs)
    .fold(f64::INFINITY, f64::min)
}

/// A regime change between two consecutive grid points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transition {
    /// Index of the first grid point in the new regime.
    pub index: usize,
    pub previous_value: f64,
    pub value: f64,
    pub from: Regime,
    pub to: Regime,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub field: Field,
    pub points: Vec<(f64, RegimeReport)>,
    pub transitions: Vec<Transition>,
}

impl Sweep {
    /// Maximal runs of equal regime, in grid order.
    pub fn bands(&self) -> Vec<Regime> {
        let mut bands: Vec<Regime> = Vec::new();
        for (_, r) in &self.points {
            if bands.last() != Some(&r.regime) {
                bands.push(r.regime);
            }
        }
        bands
    }
}

/// Classifies every grid value of `vary`, holding the other fields fixed.
/// Points are evaluated in parallel and returned in grid order.
pub fn sweep(params: &ModelParams, vary: Field, grid: &[f64]) -> Result<Sweep> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid("grid is empty".into()));
    }
    let points = grid
        .par_iter()
        .map(|&v| params.with(vary, v).map(|p| (v, classify(&p))))
        .collect::<Result<Vec<_>>>()?;
    let transitions = points
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0].1.regime != w[1].1.regime)
        .map(|(i, w)| Transition {
            index: i + 1,
            previous_value: w[0].0,
            value: w[1].0,
            from: w[0].1.regime,
            to: w[1].1.regime,
        })
        .collect();
    Ok(Sweep {
        field: vary,
        points,
        transitions,
    })
}

/// `steps` evenly spaced values from `from` to `to` inclusive.
pub fn uniform_grid(from: f64, to: f64, steps: usize) -> Result<Vec<f64>> {
    if steps == 0 {
        return Err(Error::InvalidGrid("steps must be at least 1".into()));
    }
    if !from.is_finite() || !to.is_finite() {
        return Err(Error::InvalidGrid("range bounds must be finite".into()));
    }
    if steps == 1 {
        return Ok(vec![from]);
    }
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            if i == steps - 1 {
                to
            } else {
                from + (to - from) * (i as f64 / last)
            }
        })
        .collect())
}
