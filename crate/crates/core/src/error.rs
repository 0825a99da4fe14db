use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::elliptic::EllipticError;
use crate::exact::ExactError;
use crate::genus2::Genus2Error;
use crate::ramification::RamificationError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Genus2(#[from] Genus2Error),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
    #[error(transparent)]
    Ramification(#[from] RamificationError),
    /// A denominator or leading coefficient is zero at the given point.
    #[error("{0} vanishes")]
    Vanishing(&'static str),
    /// Branch points or Weierstrass points collide.
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("point is not on the {0}")]
    OffVariety(&'static str),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Exact(_) => "exact",
            Error::Genus2(_) => "genus2",
            Error::Elliptic(_) => "elliptic",
            Error::Ramification(_) => "ramification",
            Error::Vanishing(_) => "vanishing",
            Error::Degenerate(_) => "degenerate",
            Error::OffVariety(_) => "off_variety",
            Error::Input(_) => "input",
        }
    }
}

impl Serialize for Error {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Error", 2)?;
        st.serialize_field("kind", self.kind())?;
        st.serialize_field("message", &self.to_string())?;
        st.end()
    }
}

pub(crate) fn nonzero<F: crate::exact::Ring>(x: F, what: &'static str) -> Result<F> {
    if x.is_zero() {
        Err(Error::Vanishing(what))
    } else {
        Ok(x)
    }
}
