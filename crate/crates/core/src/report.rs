//! CSV rows and number formatting shared by the CLI and the C API.

use std::fmt::Write as _;

use crate::error::Field;
use crate::model::StrategyProfile;
use crate::regimes::RegimeReport;
use crate::sim::Metrics;

/// Formats like C's `%.{sig}g`: `sig` significant digits, trailing zeros
/// dropped, scientific notation outside `1e-5 <= |x| < 10^sig`.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    let sig = sig.max(1);
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= sig as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Nine significant digits, the precision of every float in CSV output.
pub fn num(x: f64) -> String {
    fmt_sig(x, 9)
}

pub fn regime_csv_header(field: Field) -> String {
    format!(
        "{field},regime,phi_e,phi_v,phi_a,u_lo,u_hi,u_hi2,\
         p_high_retained,p_low_retained,p_subversive_retained,welfare"
    )
}

pub fn regime_csv_row(value: f64, report: &RegimeReport, metrics: &Metrics) -> String {
    let t = &report.thresholds;
    let mut row = format!("{},{}", num(value), report.regime);
    for v in [
        t.phi_e,
        t.phi_v,
        t.phi_a,
        t.u_lo,
        t.u_hi,
        t.u_hi2,
        metrics.p_high_retained(),
        metrics.p_low_retained(),
        metrics.p_subversive_retained(),
        metrics.expected_voter_welfare,
    ] {
        let _ = write!(row, ",{}", num(v));
    }
    row
}

pub const METRICS_CSV_HEADER: &str =
    "kind,profile,n,seed,p_high_retained,p_low_retained,p_subversive_retained,welfare";

pub fn metrics_csv_row(kind: &str, profile: &StrategyProfile, m: &Metrics) -> String {
    format!(
        "{kind},{},{},{},{},{},{},{}",
        profile.index(),
        m.n_replications,
        m.seed,
        num(m.p_high_retained()),
        num(m.p_low_retained()),
        num(m.p_subversive_retained()),
        num(m.expected_voter_welfare),
    )
}
