//! Closed-form voter beliefs.
//!
//! Every conditioning event is evaluated under the accountability profile:
//! the high type learns the state and follows it, low and subversive types
//! pick each policy with probability 1/2. For beliefs under an arbitrary
//! profile use [`crate::verifier::beliefs_from_profile`].

use crate::error::{Error, Field, Result};
use crate::model::{ModelParams, Posterior};

/// Information set the voter conditions on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conditioning {
    /// `m = x`, alternative report ignored.
    ConsistentAny,
    /// `m != x`.
    Inconsistent,
    /// `m = x` and `r = NS`.
    ConsistentNS,
    /// `m = x` and `r = S`.
    ConsistentS,
    /// `r = S`, mainstream ignored.
    AltOnlyS,
    /// `r = NS`, mainstream ignored.
    AltOnlyNS,
}

impl Conditioning {
    pub const ALL: [Conditioning; 6] = [
        Conditioning::ConsistentAny,
        Conditioning::Inconsistent,
        Conditioning::ConsistentNS,
        Conditioning::ConsistentS,
        Conditioning::AltOnlyS,
        Conditioning::AltOnlyNS,
    ];
}

/// Type weights relative to the non-subversive prior mass, i.e. the
/// numerators of the displayed closed forms.
fn weights(p: &ModelParams, cond: Conditioning) -> [f64; 3] {
    let (pi, q, phi, l) = (p.pi(), p.q(), p.phi(), p.l());
    let half_low = (1.0 - pi) * 0.5;
    match cond {
        Conditioning::ConsistentAny => [pi * q, half_low, l],
        Conditioning::Inconsistent => [pi * (1.0 - q), half_low, 0.0],
        Conditioning::ConsistentNS => [pi * q * (1.0 - phi), half_low * (1.0 - phi), 0.0],
        Conditioning::ConsistentS => [pi * q * phi, half_low * phi, l],
        Conditioning::AltOnlyS => [pi * phi, (1.0 - pi) * phi, l],
        Conditioning::AltOnlyNS => [pi * (1.0 - phi), (1.0 - pi) * (1.0 - phi), 0.0],
    }
}

pub fn posterior(params: &ModelParams, cond: Conditioning) -> Result<Posterior> {
    Posterior::from_weights(weights(params, cond)).ok_or(Error::UnreachableConditioning(cond))
}

/// Expected voter payoff from re-electing the incumbent given `cond`.
pub fn retention_utility(params: &ModelParams, cond: Conditioning) -> Result<f64> {
    posterior(params, cond).map(|post| post.retention_utility(params.s()))
}

/// Belief that the mainstream outlet is truthful after the alternative
/// outlet alleges propaganda: `(1-σ)(1-φ) / ((1-σ)(1-φ) + σ)`.
///
/// Falls from `1 - sigma` at `phi = 0` to 0 at `phi = 1`.
pub fn mainstream_trust(sigma: f64, phi: f64) -> Result<f64> {
    if !sigma.is_finite() {
        return Err(Error::NonFinite {
            field: Field::Sigma,
        });
    }
    if !phi.is_finite() {
        return Err(Error::NonFinite { field: Field::Phi });
    }
    if !(sigma > 0.0 && sigma < 1.0) {
        return Err(Error::OutOfRange {
            field: Field::Sigma,
            value: sigma,
            expected: "0 < sigma < 1",
        });
    }
    if !(0.0..=1.0).contains(&phi) {
        return Err(Error::OutOfRange {
            field: Field::Phi,
            value: phi,
            expected: "0 <= phi <= 1",
        });
    }
    let truthful = (1.0 - sigma) * (1.0 - phi);
    Ok(truthful / (truthful + sigma))
}
