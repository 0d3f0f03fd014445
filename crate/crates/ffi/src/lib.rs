//! C ABI over `media_accountability`.
//!
//! Conventions:
//! * Every fallible call returns an [`MaStatus`]; results go through out-pointers
//!   which are written only on `MA_STATUS_OK` (and, for
//!   [`ma_find_equilibria`], the required count on `MA_STATUS_BUFFER_TOO_SMALL`).
//! * Parameter sets and sweeps are opaque heap handles created by `*_new`
//!   and released by the matching `*_free`. Freeing NULL is a no-op.
//! * A human-readable description of the last failure on the calling thread
//!   is available from [`ma_last_error_message`].
//! * Enum arguments must hold one of the declared values.
//! * Panics never cross the boundary; they surface as `MA_STATUS_PANIC`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use media_accountability::beliefs::{self, Conditioning};
use media_accountability::model::{
    outcome_distribution, AltReport, ModelParams, ObservationClass, Posterior, StrategyProfile,
    VoterRule,
};
use media_accountability::regimes::{self, Regime};
use media_accountability::sim::{self, Metrics};
use media_accountability::thresholds::{self, Thresholds};
use media_accountability::verifier;
use media_accountability::{Error, Field};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaStatus {
    Ok = 0,
    NullPointer = 1,
    OutOfRange = 2,
    NonFinite = 3,
    InvalidCount = 4,
    UnreachableConditioning = 5,
    InvalidArgument = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaField {
    Sigma = 0,
    Pi = 1,
    Q = 2,
    K = 3,
    S = 4,
    Uc = 5,
    Phi = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaConditioning {
    ConsistentAny = 0,
    Inconsistent = 1,
    ConsistentNs = 2,
    ConsistentS = 3,
    AltOnlyS = 4,
    AltOnlyNs = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaRegime {
    AccountabilityListenBoth = 0,
    AccountabilityMainstreamOnly = 1,
    NoAccountabilitySelectOnAlt = 2,
    NoAccountabilityRetainAlways = 3,
    NoAccountabilityRemoveAlways = 4,
}

/// Opaque validated parameter set.
pub struct MaParams(ModelParams);

/// Opaque result of a one-parameter sweep.
pub struct MaSweep {
    rows: Vec<MaSweepRow>,
    transitions: Vec<usize>,
}

/// Strategy profile as plain data. Bit `i` of `retain_mask` means the
/// voter retains on observation class `i`, ordered
/// agree/NS, agree/S, disagree/NS, disagree/S.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaProfile {
    pub high_effort: bool,
    pub retain_mask: u8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaObservationClass {
    pub agree: bool,
    pub alt_subversive: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaThresholds {
    pub phi_e: f64,
    pub phi_v: f64,
    pub phi_a: f64,
    pub phi_a_consistent: f64,
    pub phi_e_clamped: f64,
    pub phi_v_clamped: f64,
    pub phi_a_clamped: f64,
    pub phi_a_consistent_clamped: f64,
    pub u_lo: f64,
    pub u_hi: f64,
    pub u_hi2: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MaPosterior {
    pub p_high: f64,
    pub p_low: f64,
    pub p_subversive: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaMetrics {
    pub p_high_retained: f64,
    pub p_low_retained: f64,
    pub p_subversive_retained: f64,
    pub expected_voter_welfare: f64,
    pub n_replications: u64,
    pub seed: u64,
    /// Indexed like `MaProfile::retain_mask` bits; valid where `class_observed` is set.
    pub posteriors: [MaPosterior; 4],
    pub class_observed: [bool; 4],
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaVerifyResult {
    pub is_equilibrium: bool,
    /// Bit `i` set if the voter gains by deviating at class `i`.
    pub voter_deviation_mask: u8,
    pub incumbent_deviates: bool,
    /// Net gain of the high type's profitable deviation, 0 when none.
    pub incumbent_net_gain: f64,
    /// Bit `i` set if class `i` has probability zero.
    pub offpath_mask: u8,
    pub policy_payoff_gap: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaSweepRow {
    pub value: f64,
    pub regime: MaRegime,
    pub profile: MaProfile,
    pub thresholds: MaThresholds,
    pub p_high_retained: f64,
    pub p_low_retained: f64,
    pub p_subversive_retained: f64,
    pub expected_voter_welfare: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> MaStatus {
    match err {
        Error::OutOfRange { .. } => MaStatus::OutOfRange,
        Error::NonFinite { .. } => MaStatus::NonFinite,
        Error::UnreachableConditioning(_) => MaStatus::UnreachableConditioning,
        Error::InvalidCount => MaStatus::InvalidCount,
        Error::UnknownField(_) | Error::InvalidGrid(_) => MaStatus::InvalidArgument,
    }
}

fn fail(err: Error) -> MaStatus {
    set_last_error(&err.to_string());
    status_of(&err)
}

fn fail_with(status: MaStatus, msg: &str) -> MaStatus {
    set_last_error(msg);
    status
}

/// Runs `body`, converting panics to `MaStatus::Panic`.
fn guard(body: impl FnOnce() -> MaStatus) -> MaStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail_with(MaStatus::Panic, "internal panic"),
    }
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail_with(MaStatus::NullPointer, concat!("`", stringify!($p), "` is NULL"));
        })+
    };
}

impl From<MaField> for Field {
    fn from(f: MaField) -> Self {
        match f {
            MaField::Sigma => Field::Sigma,
            MaField::Pi => Field::Pi,
            MaField::Q => Field::Q,
            MaField::K => Field::K,
            MaField::S => Field::S,
            MaField::Uc => Field::Uc,
            MaField::Phi => Field::Phi,
        }
    }
}

impl From<MaConditioning> for Conditioning {
    fn from(c: MaConditioning) -> Self {
        match c {
            MaConditioning::ConsistentAny => Conditioning::ConsistentAny,
            MaConditioning::Inconsistent => Conditioning::Inconsistent,
            MaConditioning::ConsistentNs => Conditioning::ConsistentNS,
            MaConditioning::ConsistentS => Conditioning::ConsistentS,
            MaConditioning::AltOnlyS => Conditioning::AltOnlyS,
            MaConditioning::AltOnlyNs => Conditioning::AltOnlyNS,
        }
    }
}

impl From<Regime> for MaRegime {
    fn from(r: Regime) -> Self {
        match r {
            Regime::AccountabilityListenBoth => MaRegime::AccountabilityListenBoth,
            Regime::AccountabilityMainstreamOnly => MaRegime::AccountabilityMainstreamOnly,
            Regime::NoAccountabilitySelectOnAlt => MaRegime::NoAccountabilitySelectOnAlt,
            Regime::NoAccountabilityRetainAlways => MaRegime::NoAccountabilityRetainAlways,
            Regime::NoAccountabilityRemoveAlways => MaRegime::NoAccountabilityRemoveAlways,
        }
    }
}

impl From<StrategyProfile> for MaProfile {
    fn from(p: StrategyProfile) -> Self {
        MaProfile {
            high_effort: p.high_effort,
            retain_mask: p.voter_rule.mask(),
        }
    }
}

impl MaProfile {
    fn to_profile(self) -> Result<StrategyProfile, MaStatus> {
        VoterRule::from_mask(self.retain_mask)
            .map(|rule| StrategyProfile::new(self.high_effort, rule))
            .ok_or_else(|| {
                fail_with(
                    MaStatus::InvalidArgument,
                    "retain_mask uses bits above 0x0F",
                )
            })
    }
}

impl From<MaObservationClass> for ObservationClass {
    fn from(c: MaObservationClass) -> Self {
        let report = if c.alt_subversive {
            AltReport::Subversive
        } else {
            AltReport::NotSubversive
        };
        ObservationClass::new(c.agree, report)
    }
}

impl From<Thresholds> for MaThresholds {
    fn from(t: Thresholds) -> Self {
        MaThresholds {
            phi_e: t.phi_e,
            phi_v: t.phi_v,
            phi_a: t.phi_a,
            phi_a_consistent: t.phi_a_consistent,
            phi_e_clamped: t.phi_e_clamped,
            phi_v_clamped: t.phi_v_clamped,
            phi_a_clamped: t.phi_a_clamped,
            phi_a_consistent_clamped: t.phi_a_consistent_clamped,
            u_lo: t.u_lo,
            u_hi: t.u_hi,
            u_hi2: t.u_hi2,
        }
    }
}

impl From<Posterior> for MaPosterior {
    fn from(p: Posterior) -> Self {
        MaPosterior {
            p_high: p.p_high,
            p_low: p.p_low,
            p_subversive: p.p_subversive,
        }
    }
}

impl From<&Metrics> for MaMetrics {
    fn from(m: &Metrics) -> Self {
        let mut posteriors = [MaPosterior::default(); 4];
        let mut class_observed = [false; 4];
        for (class, post) in &m.empirical_posteriors {
            posteriors[class.index()] = (*post).into();
            class_observed[class.index()] = true;
        }
        MaMetrics {
            p_high_retained: m.p_high_retained(),
            p_low_retained: m.p_low_retained(),
            p_subversive_retained: m.p_subversive_retained(),
            expected_voter_welfare: m.expected_voter_welfare,
            n_replications: m.n_replications,
            seed: m.seed,
            posteriors,
            class_observed,
        }
    }
}

/// Static description of a status code. Never NULL.
#[no_mangle]
pub extern "C" fn ma_status_message(status: MaStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        MaStatus::Ok => b"ok\0",
        MaStatus::NullPointer => b"null pointer argument\0",
        MaStatus::OutOfRange => b"parameter out of range\0",
        MaStatus::NonFinite => b"parameter not finite\0",
        MaStatus::InvalidCount => b"replication count must be at least 1\0",
        MaStatus::UnreachableConditioning => b"conditioning event has probability zero\0",
        MaStatus::InvalidArgument => b"invalid argument\0",
        MaStatus::BufferTooSmall => b"output buffer too small\0",
        MaStatus::Panic => b"internal panic\0",
    };
    s.as_ptr().cast()
}

/// Copies the calling thread's last error message into `buf` (NUL
/// terminated, truncated to `len`). Returns the length the full message
/// needs including the terminator. `buf` may be NULL to query the length.
#[no_mangle]
pub unsafe extern "C" fn ma_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let bytes = e.as_bytes_with_nul();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len);
            // SAFETY: caller guarantees `buf` points to `len` writable bytes.
            unsafe {
                ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
                *buf.add(n - 1) = 0;
            }
        }
        bytes.len()
    })
}

/// Validates the seven primitives and allocates a parameter handle.
#[no_mangle]
pub unsafe extern "C" fn ma_params_new(
    sigma: f64,
    pi: f64,
    q: f64,
    k: f64,
    s: f64,
    u_c: f64,
    phi: f64,
    out: *mut *mut MaParams,
) -> MaStatus {
    guard(|| {
        non_null!(out);
        match ModelParams::new(sigma, pi, q, k, s, u_c, phi) {
            Ok(p) => {
                // SAFETY: `out` checked non-null; caller guarantees it is writable.
                unsafe { *out = Box::into_raw(Box::new(MaParams(p))) };
                MaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Copy of `params` with one field replaced, as a new handle.
#[no_mangle]
pub unsafe extern "C" fn ma_params_with(
    params: *const MaParams,
    field: MaField,
    value: f64,
    out: *mut *mut MaParams,
) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        // SAFETY: non-null handle from `ma_params_new`.
        let p = unsafe { &(*params).0 };
        match p.with(field.into(), value) {
            Ok(p) => {
                unsafe { *out = Box::into_raw(Box::new(MaParams(p))) };
                MaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn ma_params_free(params: *mut MaParams) {
    if !params.is_null() {
        // SAFETY: handle allocated by `ma_params_new`/`ma_params_with`, freed once.
        drop(unsafe { Box::from_raw(params) });
    }
}

#[no_mangle]
pub unsafe extern "C" fn ma_params_get(
    params: *const MaParams,
    field: MaField,
    out: *mut f64,
) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        unsafe { *out = (*params).0.get(field.into()) };
        MaStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn ma_thresholds(
    params: *const MaParams,
    out: *mut MaThresholds,
) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        unsafe { *out = thresholds::compute_thresholds(&(*params).0).into() };
        MaStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn ma_listens_to_alt(params: *const MaParams, out: *mut bool) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        unsafe { *out = thresholds::listens_to_alt(&(*params).0) };
        MaStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn ma_effort_sustainable(
    params: *const MaParams,
    requires_alt_clearance: bool,
    out: *mut bool,
) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        unsafe { *out = thresholds::effort_sustainable(&(*params).0, requires_alt_clearance) };
        MaStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn ma_posterior(
    params: *const MaParams,
    cond: MaConditioning,
    out: *mut MaPosterior,
) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        match beliefs::posterior(unsafe { &(*params).0 }, cond.into()) {
            Ok(p) => {
                unsafe { *out = p.into() };
                MaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn ma_retention_utility(
    params: *const MaParams,
    cond: MaConditioning,
    out: *mut f64,
) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        match beliefs::retention_utility(unsafe { &(*params).0 }, cond.into()) {
            Ok(u) => {
                unsafe { *out = u };
                MaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn ma_mainstream_trust(sigma: f64, phi: f64, out: *mut f64) -> MaStatus {
    guard(|| {
        non_null!(out);
        match beliefs::mainstream_trust(sigma, phi) {
            Ok(t) => {
                unsafe { *out = t };
                MaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Either out-pointer may be NULL if that result is not wanted.
#[no_mangle]
pub unsafe extern "C" fn ma_classify(
    params: *const MaParams,
    out_regime: *mut MaRegime,
    out_profile: *mut MaProfile,
) -> MaStatus {
    guard(|| {
        non_null!(params);
        let report = regimes::classify(unsafe { &(*params).0 });
        if !out_regime.is_null() {
            unsafe { *out_regime = report.regime.into() };
        }
        if !out_profile.is_null() {
            unsafe { *out_profile = report.profile.into() };
        }
        MaStatus::Ok
    })
}

/// Static regime name, e.g. "AccountabilityListenBoth". Never NULL.
#[no_mangle]
pub extern "C" fn ma_regime_name(regime: MaRegime) -> *const c_char {
    let s: &'static [u8] = match regime {
        MaRegime::AccountabilityListenBoth => b"AccountabilityListenBoth\0",
        MaRegime::AccountabilityMainstreamOnly => b"AccountabilityMainstreamOnly\0",
        MaRegime::NoAccountabilitySelectOnAlt => b"NoAccountabilitySelectOnAlt\0",
        MaRegime::NoAccountabilityRetainAlways => b"NoAccountabilityRetainAlways\0",
        MaRegime::NoAccountabilityRemoveAlways => b"NoAccountabilityRemoveAlways\0",
    };
    s.as_ptr().cast()
}

#[no_mangle]
pub unsafe extern "C" fn ma_profile_from_index(index: u32, out: *mut MaProfile) -> MaStatus {
    guard(|| {
        non_null!(out);
        match StrategyProfile::from_index(index as usize) {
            Some(p) => {
                unsafe { *out = p.into() };
                MaStatus::Ok
            }
            None => fail_with(MaStatus::InvalidArgument, "profile index must be below 32"),
        }
    })
}

/// Enumeration index 0..32 of a profile, or -1 if `retain_mask` is invalid.
#[no_mangle]
pub extern "C" fn ma_profile_index(profile: MaProfile) -> i32 {
    profile.to_profile().map_or(-1, |p| p.index() as i32)
}

#[no_mangle]
pub unsafe extern "C" fn ma_observation_probability(
    params: *const MaParams,
    profile: MaProfile,
    class: MaObservationClass,
    out: *mut f64,
) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        let profile = match profile.to_profile() {
            Ok(p) => p,
            Err(s) => return s,
        };
        let table = outcome_distribution(unsafe { &(*params).0 }, &profile);
        unsafe { *out = table.observation_probability(class.into()) };
        MaStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn ma_is_pbe(
    params: *const MaParams,
    profile: MaProfile,
    out: *mut MaVerifyResult,
) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        let profile = match profile.to_profile() {
            Ok(p) => p,
            Err(s) => return s,
        };
        let r = verifier::is_pbe(unsafe { &(*params).0 }, &profile);
        let mask = |classes: &mut dyn Iterator<Item = ObservationClass>| {
            classes.fold(0u8, |m, c| m | (1 << c.index()))
        };
        let result = MaVerifyResult {
            is_equilibrium: r.is_equilibrium,
            voter_deviation_mask: mask(&mut r.voter_deviations.iter().map(|d| d.class)),
            incumbent_deviates: r.incumbent_deviation.is_some(),
            incumbent_net_gain: r.incumbent_deviation.map_or(0.0, |d| d.net_gain),
            offpath_mask: mask(&mut r.offpath_classes.iter().copied()),
            policy_payoff_gap: r.policy_payoff_gap,
        };
        unsafe { *out = result };
        MaStatus::Ok
    })
}

/// Writes every equilibrium profile (index order) into `out[0..capacity]`
/// and their number into `out_count`. Returns `MA_STATUS_BUFFER_TOO_SMALL`
/// when `capacity` is below the count; 32 always suffices.
#[no_mangle]
pub unsafe extern "C" fn ma_find_equilibria(
    params: *const MaParams,
    out: *mut MaProfile,
    capacity: usize,
    out_count: *mut usize,
) -> MaStatus {
    guard(|| {
        non_null!(params, out_count);
        let found = verifier::find_equilibria(unsafe { &(*params).0 });
        unsafe { *out_count = found.len() };
        if found.len() > capacity {
            return fail_with(MaStatus::BufferTooSmall, "capacity below equilibrium count");
        }
        if !found.is_empty() {
            non_null!(out);
        }
        for (i, p) in found.into_iter().enumerate() {
            unsafe { *out.add(i) = p.into() };
        }
        MaStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn ma_simulate(
    params: *const MaParams,
    profile: MaProfile,
    n: u64,
    seed: u64,
    out: *mut MaMetrics,
) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        let profile = match profile.to_profile() {
            Ok(p) => p,
            Err(s) => return s,
        };
        match sim::simulate(unsafe { &(*params).0 }, &profile, n, seed) {
            Ok(m) => {
                unsafe { *out = (&m).into() };
                MaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn ma_theoretical_metrics(
    params: *const MaParams,
    profile: MaProfile,
    out: *mut MaMetrics,
) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        let profile = match profile.to_profile() {
            Ok(p) => p,
            Err(s) => return s,
        };
        let m = sim::theoretical_metrics(unsafe { &(*params).0 }, &profile);
        unsafe { *out = (&m).into() };
        MaStatus::Ok
    })
}

/// Classifies `steps` evenly spaced values of `field` from `from` to `to`.
#[no_mangle]
pub unsafe extern "C" fn ma_sweep_new(
    params: *const MaParams,
    field: MaField,
    from: f64,
    to: f64,
    steps: usize,
    out: *mut *mut MaSweep,
) -> MaStatus {
    guard(|| {
        non_null!(params, out);
        let base = unsafe { &(*params).0 };
        let field = Field::from(field);
        let result = regimes::uniform_grid(from, to, steps)
            .and_then(|grid| regimes::sweep(base, field, &grid));
        let sweep = match result {
            Ok(s) => s,
            Err(e) => return fail(e),
        };
        let rows = sweep
            .points
            .iter()
            .map(|(v, report)| {
                let point = base.with(field, *v).expect("validated by sweep");
                let m = sim::theoretical_metrics(&point, &report.profile);
                MaSweepRow {
                    value: *v,
                    regime: report.regime.into(),
                    profile: report.profile.into(),
                    thresholds: report.thresholds.into(),
                    p_high_retained: m.p_high_retained(),
                    p_low_retained: m.p_low_retained(),
                    p_subversive_retained: m.p_subversive_retained(),
                    expected_voter_welfare: m.expected_voter_welfare,
                }
            })
            .collect();
        let transitions = sweep.transitions.iter().map(|t| t.index).collect();
        unsafe { *out = Box::into_raw(Box::new(MaSweep { rows, transitions })) };
        MaStatus::Ok
    })
}

/// Number of grid points; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn ma_sweep_len(sweep: *const MaSweep) -> usize {
    if sweep.is_null() {
        0
    } else {
        unsafe { &*sweep }.rows.len()
    }
}

#[no_mangle]
pub unsafe extern "C" fn ma_sweep_row(
    sweep: *const MaSweep,
    index: usize,
    out: *mut MaSweepRow,
) -> MaStatus {
    guard(|| {
        non_null!(sweep, out);
        match unsafe { &*sweep }.rows.get(index) {
            Some(row) => {
                unsafe { *out = *row };
                MaStatus::Ok
            }
            None => fail_with(MaStatus::InvalidArgument, "row index out of bounds"),
        }
    })
}

/// Number of regime changes along the grid; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn ma_sweep_transition_count(sweep: *const MaSweep) -> usize {
    if sweep.is_null() {
        0
    } else {
        unsafe { &*sweep }.transitions.len()
    }
}

/// Row index of the first grid point after the `index`-th regime change.
#[no_mangle]
pub unsafe extern "C" fn ma_sweep_transition(
    sweep: *const MaSweep,
    index: usize,
    out_row: *mut usize,
) -> MaStatus {
    guard(|| {
        non_null!(sweep, out_row);
        match unsafe { &*sweep }.transitions.get(index) {
            Some(row) => {
                unsafe { *out_row = *row };
                MaStatus::Ok
            }
            None => fail_with(MaStatus::InvalidArgument, "transition index out of bounds"),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn ma_sweep_free(sweep: *mut MaSweep) {
    if !sweep.is_null() {
        // SAFETY: handle allocated by `ma_sweep_new`, freed once.
        drop(unsafe { Box::from_raw(sweep) });
    }
}
