//! Real structures on hyperelliptic curves and the components of real
//! rank-2 Hitchin fibres over them.
//!
//! * [`realpoly`]: exact polynomials, root isolation, sign profiles.
//! * [`klein`]: topological type (n, a) of the real structures.
//! * [`spectral`]: curves, quadratic differentials and their sign data.
//! * [`counting`]: closed-form component counts.
//! * [`homology`]: GF(2) model behind the SL(2) count.
//! * [`monodromy`]: numerical count of fixed circles on the spectral curve.
//! * [`census`]: which invariant tuples occur.

pub mod census;
pub mod counting;
pub mod homology;
pub mod klein;
pub mod monodromy;
pub mod realpoly;
pub mod spectral;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] realpoly::ParseError),
    #[error(transparent)]
    Poly(#[from] realpoly::PolyError),
    #[error(transparent)]
    Curve(#[from] spectral::CurveError),
    #[error(transparent)]
    Spectral(#[from] spectral::SpectralError),
    #[error(transparent)]
    Klein(#[from] klein::KleinError),
    #[error(transparent)]
    Count(#[from] counting::CountError),
    #[error(transparent)]
    Homology(#[from] homology::HomologyError),
    #[error(transparent)]
    Monodromy(#[from] monodromy::MonodromyError),
}

impl Error {
    /// Short machine-readable name of the error variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::Poly(_) => "polynomial",
            Error::Curve(_) => "curve",
            Error::Spectral(_) => "spectral",
            Error::Klein(_) => "klein",
            Error::Count(_) => "count",
            Error::Homology(_) => "homology",
            Error::Monodromy(_) => "monodromy",
        }
    }
}
