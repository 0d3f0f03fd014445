use std::fmt;

use crate::beliefs::Conditioning;

/// One of the seven primitive parameters, named as on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Sigma,
    Pi,
    Q,
    K,
    S,
    Uc,
    Phi,
}

impl Field {
    pub const ALL: [Field; 7] = [
        Field::Sigma,
        Field::Pi,
        Field::Q,
        Field::K,
        Field::S,
        Field::Uc,
        Field::Phi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Field::Sigma => "sigma",
            Field::Pi => "pi",
            Field::Q => "q",
            Field::K => "k",
            Field::S => "s",
            Field::Uc => "uc",
            Field::Phi => "phi",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "u_c" {
            return Ok(Field::Uc);
        }
        Field::ALL
            .into_iter()
            .find(|f| f.name() == lower)
            .ok_or_else(|| Error::UnknownField(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("parameter `{field}` = {value} is out of range: expected {expected}")]
    OutOfRange {
        field: Field,
        value: f64,
        expected: &'static str,
    },
    #[error("parameter `{field}` is not a finite number")]
    NonFinite { field: Field },
    #[error("conditioning event {0:?} has probability zero")]
    UnreachableConditioning(Conditioning),
    #[error("replication count must be at least 1")]
    InvalidCount,
    #[error("unknown parameter field `{0}`")]
    UnknownField(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

impl Error {
    /// The parameter this error is about, when there is one.
    pub fn field(&self) -> Option<Field> {
        match self {
            Error::OutOfRange { field, .. } | Error::NonFinite { field } => Some(*field),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
