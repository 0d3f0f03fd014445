use crate::error::{Error, Field, Result};

/// Office payoff to the election winner.
pub const EGO_RENT: f64 = 1.0;

/// Unvalidated primitives, e.g. as collected from command-line flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawParams {
    pub sigma: f64,
    pub pi: f64,
    pub q: f64,
    pub k: f64,
    pub s: f64,
    pub u_c: f64,
    pub phi: f64,
}

impl RawParams {
    pub fn get(&self, field: Field) -> f64 {
        match field {
            Field::Sigma => self.sigma,
            Field::Pi => self.pi,
            Field::Q => self.q,
            Field::K => self.k,
            Field::S => self.s,
            Field::Uc => self.u_c,
            Field::Phi => self.phi,
        }
    }

    pub fn set(&mut self, field: Field, value: f64) {
        let slot = match field {
            Field::Sigma => &mut self.sigma,
            Field::Pi => &mut self.pi,
            Field::Q => &mut self.q,
            Field::K => &mut self.k,
            Field::S => &mut self.s,
            Field::Uc => &mut self.u_c,
            Field::Phi => &mut self.phi,
        };
        *slot = value;
    }

    pub fn validate(self) -> Result<ModelParams> {
        validate_params(self)
    }
}

/// Validated game primitives.
///
/// Construct through [`validate_params`] or [`ModelParams::new`]; every
/// instance satisfies the open/closed ranges checked there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    sigma: f64,
    pi: f64,
    q: f64,
    k: f64,
    s: f64,
    u_c: f64,
    phi: f64,
    l: f64,
}

/// Checks every primitive against its admissible range.
///
/// Fields are checked in declaration order and the first violation is
/// reported. `u_c` is checked against `[-s, 1]` after `s` itself passes.
pub fn validate_params(raw: RawParams) -> Result<ModelParams> {
    for field in Field::ALL {
        if !raw.get(field).is_finite() {
            return Err(Error::NonFinite { field });
        }
    }
    let out_of_range = |field: Field, expected: &'static str| Error::OutOfRange {
        field,
        value: raw.get(field),
        expected,
    };
    if !(raw.sigma > 0.0 && raw.sigma < 1.0) {
        return Err(out_of_range(Field::Sigma, "0 < sigma < 1"));
    }
    if !(raw.pi > 0.0 && raw.pi < 1.0) {
        return Err(out_of_range(Field::Pi, "0 < pi < 1"));
    }
    if !(raw.q > 0.5 && raw.q < 1.0) {
        return Err(out_of_range(Field::Q, "1/2 < q < 1"));
    }
    if raw.k < 0.0 {
        return Err(out_of_range(Field::K, "k >= 0"));
    }
    if raw.s < 0.0 {
        return Err(out_of_range(Field::S, "s >= 0"));
    }
    if !(raw.u_c >= -raw.s && raw.u_c <= 1.0) {
        return Err(out_of_range(Field::Uc, "-s <= uc <= 1"));
    }
    if !(0.0..=1.0).contains(&raw.phi) {
        return Err(out_of_range(Field::Phi, "0 <= phi <= 1"));
    }
    Ok(ModelParams {
        sigma: raw.sigma,
        pi: raw.pi,
        q: raw.q,
        k: raw.k,
        s: raw.s,
        u_c: raw.u_c,
        phi: raw.phi,
        l: raw.sigma / (1.0 - raw.sigma),
    })
}

impl ModelParams {
    pub fn new(sigma: f64, pi: f64, q: f64, k: f64, s: f64, u_c: f64, phi: f64) -> Result<Self> {
        validate_params(RawParams {
            sigma,
            pi,
            q,
            k,
            s,
            u_c,
            phi,
        })
    }

    /// Probability the incumbent is subversive.
    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Probability of a high type given the incumbent is not subversive.
    pub fn pi(&self) -> f64 {
        self.pi
    }

    /// Accuracy of a truthful mainstream outlet.
    pub fn q(&self) -> f64 {
        self.q
    }

    /// Effort cost of the high type.
    pub fn k(&self) -> f64 {
        self.k
    }

    /// Voter's loss from retaining a subversive incumbent.
    pub fn s(&self) -> f64 {
        self.s
    }

    /// Voter's expected utility from the challenger.
    pub fn u_c(&self) -> f64 {
        self.u_c
    }

    /// Probability the alternative outlet is malicious.
    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Likelihood ratio `sigma / (1 - sigma)` of a subversive incumbent.
    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn ego_rent(&self) -> f64 {
        EGO_RENT
    }

    pub fn raw(&self) -> RawParams {
        RawParams {
            sigma: self.sigma,
            pi: self.pi,
            q: self.q,
            k: self.k,
            s: self.s,
            u_c: self.u_c,
            phi: self.phi,
        }
    }

    pub fn get(&self, field: Field) -> f64 {
        self.raw().get(field)
    }

    /// Copy with one field replaced, revalidated.
    pub fn with(&self, field: Field, value: f64) -> Result<Self> {
        let mut raw = self.raw();
        raw.set(field, value);
        validate_params(raw)
    }

    /// Copy with `phi` replaced.
    pub fn with_phi(&self, phi: f64) -> Result<Self> {
        self.with(Field::Phi, phi)
    }
}
