//! Real hyperelliptic curves, their fixed circles, and the sign/zero data
//! of a real quadratic differential along them.

mod curve;
mod differential;
mod formulas;

pub use curve::{
    build_curve, build_curve_from_roots, build_curve_from_text, CurveError, HyperellipticCurve, Oval, OvalShape,
};
pub use differential::{
    analyze, analyze_ovals, check_reality, real_point, OvalSummary, QuadDifferential, SpectralError,
    SpectralInvariants,
};
pub use formulas::{fibre_dim, fixed_degree, spectral_genus, Group};
