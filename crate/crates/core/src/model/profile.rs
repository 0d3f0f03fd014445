use std::fmt;

/// Incumbent type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IncumbentType {
    High,
    Low,
    Subversive,
}

impl IncumbentType {
    pub const ALL: [IncumbentType; 3] = [
        IncumbentType::High,
        IncumbentType::Low,
        IncumbentType::Subversive,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            IncumbentType::High => "high",
            IncumbentType::Low => "low",
            IncumbentType::Subversive => "subversive",
        }
    }
}

/// Alternative-outlet report: the incumbent is (`S`) or is not (`NS`) subversive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AltReport {
    NotSubversive,
    Subversive,
}

impl AltReport {
    pub fn short(self) -> &'static str {
        match self {
            AltReport::NotSubversive => "NS",
            AltReport::Subversive => "S",
        }
    }
}

/// What the voter conditions on: whether the mainstream message endorsed the
/// chosen policy (`m == x`) and the alternative report.
///
/// With policy-symmetric strategies this pair carries everything in the raw
/// observation `(x, m, r)` that matters for the vote.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObservationClass {
    pub agree: bool,
    pub alt_report: AltReport,
}

impl ObservationClass {
    /// Canonical order; `index()` is the position in this array.
    pub const ALL: [ObservationClass; 4] = [
        ObservationClass::new(true, AltReport::NotSubversive),
        ObservationClass::new(true, AltReport::Subversive),
        ObservationClass::new(false, AltReport::NotSubversive),
        ObservationClass::new(false, AltReport::Subversive),
    ];

    pub const fn new(agree: bool, alt_report: AltReport) -> Self {
        Self { agree, alt_report }
    }

    pub fn index(self) -> usize {
        let base = if self.agree { 0 } else { 2 };
        base + match self.alt_report {
            AltReport::NotSubversive => 0,
            AltReport::Subversive => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }
}

impl fmt::Display for ObservationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = if self.agree { "agree" } else { "disagree" };
        write!(f, "{m}/{}", self.alt_report.short())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VoterAction {
    RetainIncumbent,
    ElectChallenger,
}

/// A pure, policy-symmetric voting rule: one action per observation class.
///
/// Stored as a 4-bit mask; bit `i` set means retain on `ObservationClass::ALL[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VoterRule(u8);

impl VoterRule {
    pub const REMOVE_ALWAYS: VoterRule = VoterRule(0);
    pub const RETAIN_ALWAYS: VoterRule = VoterRule(0b1111);

    /// `None` if any bit above the four classes is set.
    pub fn from_mask(mask: u8) -> Option<Self> {
        (mask <= 0b1111).then_some(VoterRule(mask))
    }

    pub fn from_fn(mut retain: impl FnMut(ObservationClass) -> bool) -> Self {
        let mut mask = 0;
        for class in ObservationClass::ALL {
            if retain(class) {
                mask |= 1 << class.index();
            }
        }
        VoterRule(mask)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn retains(self, class: ObservationClass) -> bool {
        self.0 & (1 << class.index()) != 0
    }

    pub fn action(self, class: ObservationClass) -> VoterAction {
        if self.retains(class) {
            VoterAction::RetainIncumbent
        } else {
            VoterAction::ElectChallenger
        }
    }

    /// The same rule with the action at `class` flipped.
    pub fn flipped(self, class: ObservationClass) -> Self {
        VoterRule(self.0 ^ (1 << class.index()))
    }
}

/// The free components of a symmetric profile: the high type's effort and
/// the voter's rule. Low and subversive types always mix 1/2 over policies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrategyProfile {
    pub high_effort: bool,
    pub voter_rule: VoterRule,
}

impl StrategyProfile {
    pub const COUNT: usize = 32;

    pub const fn new(high_effort: bool, voter_rule: VoterRule) -> Self {
        Self {
            high_effort,
            voter_rule,
        }
    }

    /// Effort; retain only on `agree/NS`.
    pub fn accountability_listen() -> Self {
        Self::new(true, VoterRule(0b0001))
    }

    /// Effort; retain iff the mainstream message agrees with the policy.
    pub fn accountability_ignore() -> Self {
        Self::new(true, VoterRule(0b0011))
    }

    /// No effort; remove only when the mainstream endorses the policy and
    /// the alternative outlet accuses. A contradicting mainstream message
    /// already rules out propaganda, so accusations are discounted there.
    pub fn select_on_alt() -> Self {
        Self::new(false, VoterRule(0b1101))
    }

    /// No effort; retain iff `r = NS`, ignoring the mainstream message.
    pub fn retain_iff_not_accused() -> Self {
        Self::new(false, VoterRule(0b0101))
    }

    pub fn retain_always() -> Self {
        Self::new(false, VoterRule::RETAIN_ALWAYS)
    }

    pub fn remove_always() -> Self {
        Self::new(false, VoterRule::REMOVE_ALWAYS)
    }

    /// Position in the enumeration order: effort is the high bit, the voter
    /// mask the low four bits. Index 0 is no effort with removal everywhere.
    pub fn index(self) -> usize {
        (usize::from(self.high_effort) << 4) | usize::from(self.voter_rule.0)
    }

    pub fn from_index(i: usize) -> Option<Self> {
        (i < Self::COUNT).then(|| Self::new(i & 0b1_0000 != 0, VoterRule((i & 0b1111) as u8)))
    }

    pub fn by_name(name: &str) -> Option<Self> {
        let p = match name {
            "listen" | "accountability-listen" => Self::accountability_listen(),
            "ignore" | "accountability-ignore" => Self::accountability_ignore(),
            "select-alt" | "select-on-alt" => Self::select_on_alt(),
            "retain-iff-ns" => Self::retain_iff_not_accused(),
            "retain" | "retain-always" => Self::retain_always(),
            "remove" | "remove-always" => Self::remove_always(),
            _ => return None,
        };
        Some(p)
    }
}

impl fmt::Display for StrategyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let effort = if self.high_effort {
            "effort"
        } else {
            "no effort"
        };
        write!(f, "#{:02} {effort}; retain on ", self.index())?;
        let retained: Vec<String> = ObservationClass::ALL
            .iter()
            .filter(|c| self.voter_rule.retains(**c))
            .map(ToString::to_string)
            .collect();
        if retained.is_empty() {
            f.write_str("nothing")
        } else {
            f.write_str(&retained.join(", "))
        }
    }
}

/// Voter belief over incumbent types.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Posterior {
    pub p_high: f64,
    pub p_low: f64,
    pub p_subversive: f64,
}

impl Posterior {
    /// Normalizes nonnegative weights indexed by [`IncumbentType::index`].
    /// Returns `None` when they sum to zero.
    pub fn from_weights(w: [f64; 3]) -> Option<Self> {
        let total: f64 = w.iter().sum();
        (total > 0.0).then(|| Posterior {
            p_high: w[0] / total,
            p_low: w[1] / total,
            p_subversive: w[2] / total,
        })
    }

    pub fn prob(&self, ty: IncumbentType) -> f64 {
        match ty {
            IncumbentType::High => self.p_high,
            IncumbentType::Low => self.p_low,
            IncumbentType::Subversive => self.p_subversive,
        }
    }

    /// Expected voter payoff from retaining: 1 for high, 0 for low, -s for subversive.
    pub fn retention_utility(&self, s: f64) -> f64 {
        self.p_high - s * self.p_subversive
    }

    pub fn max_abs_diff(&self, other: &Posterior) -> f64 {
        IncumbentType::ALL
            .iter()
            .map(|t| (self.prob(*t) - other.prob(*t)).abs())
            .fold(0.0, f64::max)
    }
}
