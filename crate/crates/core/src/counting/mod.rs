//! Closed-form component counts of real Hitchin fibres and the
//! real/quaternionic decision for the induced bundle involution.

pub mod lattice;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountError {
    #[error("u = {0} is odd; zero counts on ovals are always even")]
    OddU(u64),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("{fixed} is not 2^(m+d) with 0 <= d <= m for m = {m}")]
    NotPowerOfTwoForm { m: u64, fixed: u64 },
    #[error("2^{0} does not fit in 64 bits")]
    Overflow(u64),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
}

/// Inputs a count was computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountInputs {
    FixedCircles { n_s: u64, g_s: u64 },
    PositiveOvals { n_plus: u64, u: u64 },
    ZeroFreeOvals { n_zero: u64, u: u64 },
}

/// A count of connected components, always a power of two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCount {
    pub group: String,
    pub d: u64,
    pub count: u64,
    #[serde(skip)]
    pub inputs: CountInputs,
}

fn power_of_two(group: &str, d: u64, inputs: CountInputs) -> Result<ComponentCount, CountError> {
    if d >= 64 {
        return Err(CountError::Overflow(d));
    }
    let count = 1u64 << d;
    Ok(ComponentCount {
        group: group.to_string(),
        d,
        count,
        inputs,
    })
}

/// Components of the real GL(n) fibre over a spectral curve of genus g_S
/// whose lifted involution has n_S fixed circles: 2^(n_S − 1) if n_S > 0,
/// otherwise 1 for even g_S and 2 for odd g_S.
pub fn count_gl(n_s: u64, g_s: u64) -> Result<ComponentCount, CountError> {
    let d = if n_s > 0 { n_s - 1 } else { g_s % 2 };
    power_of_two("GL(n)", d, CountInputs::FixedCircles { n_s, g_s })
}

/// Components of the real GL(2) fibre: 2^d with d = 2n₊ + u/2 − 1 when
/// that is nonnegative and d = 1 otherwise.
pub fn count_gl2(n_plus: u64, u: u64) -> Result<ComponentCount, CountError> {
    if !u.is_multiple_of(2) {
        return Err(CountError::OddU(u));
    }
    let s = 2 * n_plus + u / 2;
    let d = if s > 0 { s - 1 } else { 1 };
    power_of_two("GL(2)", d, CountInputs::PositiveOvals { n_plus, u })
}

/// Components of the real SL(2) fibre, 2^(n₀ + u/2 − 1). Only known when
/// the real structure fixes at least one zero of q (u > 0).
pub fn count_sl2(n_zero: u64, u: u64) -> Result<ComponentCount, CountError> {
    if !u.is_multiple_of(2) {
        return Err(CountError::OddU(u));
    }
    if u == 0 {
        return Err(CountError::NotApplicable(
            "the SL(2) count needs a fixed zero of q (u > 0)".into(),
        ));
    }
    power_of_two("SL(2)", n_zero + u / 2 - 1, CountInputs::ZeroFreeOvals { n_zero, u })
}

/// Recovers d from the number of 2-torsion points fixed by an
/// anti-holomorphic involution of an m-dimensional complex torus, which is
/// 2^(m+d) with 0 ≤ d ≤ m.
pub fn torus_d(m: u64, fixed_two_torsion: u64) -> Result<u64, CountError> {
    let err = CountError::NotPowerOfTwoForm {
        m,
        fixed: fixed_two_torsion,
    };
    if m == 0 || !fixed_two_torsion.is_power_of_two() {
        return Err(err);
    }
    let e = u64::from(fixed_two_torsion.trailing_zeros());
    if e < m || e > 2 * m {
        return Err(err);
    }
    Ok(e - m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RealityTypeQuery {
    /// Zeros of q fixed by the real structure.
    pub u: u64,
    /// Holonomy sign ρ(μ) ∈ {+1, −1}, when known.
    pub rho_mu: Option<i8>,
    pub f_has_fixed_points: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RealityType {
    Real,
    Quaternionic,
    /// u = 0 and the holonomy sign was not supplied.
    NeedsHolonomy,
    /// The involution on the curve has no fixed points, so the sign of the
    /// base involution's lift is not determined.
    NeedsEpsilon1,
}

/// Decides whether the induced involution on the bundle squares to +1
/// (real) or −1 (quaternionic). With fixed points on the curve and a fixed
/// zero of q it is real; with fixed points and no fixed zero the square is
/// the holonomy sign ρ(μ).
pub fn real_or_quaternionic(query: RealityTypeQuery) -> Result<RealityType, CountError> {
    if !query.u.is_multiple_of(2) {
        return Err(CountError::OddU(query.u));
    }
    if let Some(r) = query.rho_mu {
        if r != 1 && r != -1 {
            return Err(CountError::InvalidQuery(format!("rho_mu must be +1 or -1, got {r}")));
        }
    }
    if !query.f_has_fixed_points {
        return Ok(RealityType::NeedsEpsilon1);
    }
    if query.u > 0 {
        return Ok(RealityType::Real);
    }
    Ok(match query.rho_mu {
        Some(1) => RealityType::Real,
        Some(_) => RealityType::Quaternionic,
        None => RealityType::NeedsHolonomy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_examples() {
        assert_eq!(count_gl(3, 5).unwrap().count, 4);
        assert_eq!(count_gl(0, 5).unwrap().count, 2);
        assert_eq!(count_gl(0, 4).unwrap().count, 1);
    }

    #[test]
    fn gl2_examples() {
        let c = count_gl2(1, 4).unwrap();
        assert_eq!((c.d, c.count), (3, 8));
        let c = count_gl2(0, 0).unwrap();
        assert_eq!((c.d, c.count), (1, 2));
        let c = count_gl2(3, 0).unwrap();
        assert_eq!((c.d, c.count), (5, 32));
        assert_eq!(count_gl2(1, 3), Err(CountError::OddU(3)));
    }

    #[test]
    fn sl2_examples() {
        assert_eq!(count_sl2(1, 4).unwrap().count, 4);
        let c = count_sl2(0, 2).unwrap();
        assert_eq!((c.d, c.count), (0, 1));
        assert!(matches!(count_sl2(2, 0), Err(CountError::NotApplicable(_))));
    }

    #[test]
    fn serialized_shape() {
        let v = serde_json::to_value(count_gl2(0, 0).unwrap()).unwrap();
        assert_eq!(v, serde_json::json!({"group": "GL(2)", "d": 1, "count": 2}));
    }

    #[test]
    fn overflow_is_an_error() {
        assert_eq!(count_gl(65, 5), Err(CountError::Overflow(64)));
        assert_eq!(count_gl(64, 5).unwrap().count, 1 << 63);
    }

    #[test]
    fn torus_examples() {
        assert_eq!(torus_d(2, 16), Ok(2));
        assert_eq!(torus_d(1, 2), Ok(0));
        assert!(torus_d(3, 5).is_err());
        assert!(torus_d(3, 4).is_err());
        assert!(torus_d(3, 128).is_err());
    }

    #[test]
    fn reality_examples() {
        let q = |u, rho_mu, f| RealityTypeQuery {
            u,
            rho_mu,
            f_has_fixed_points: f,
        };
        assert_eq!(real_or_quaternionic(q(4, None, true)), Ok(RealityType::Real));
        assert_eq!(real_or_quaternionic(q(0, Some(-1), true)), Ok(RealityType::Quaternionic));
        assert_eq!(real_or_quaternionic(q(0, Some(1), true)), Ok(RealityType::Real));
        assert_eq!(real_or_quaternionic(q(0, None, true)), Ok(RealityType::NeedsHolonomy));
        assert_eq!(real_or_quaternionic(q(0, None, false)), Ok(RealityType::NeedsEpsilon1));
        assert_eq!(real_or_quaternionic(q(2, Some(1), false)), Ok(RealityType::NeedsEpsilon1));
        assert!(real_or_quaternionic(q(0, Some(0), true)).is_err());
    }
}
