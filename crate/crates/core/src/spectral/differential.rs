use std::sync::Arc;

use num_rational::BigRational;
use serde::Serialize;

use super::curve::{CurveError, HyperellipticCurve, Oval, OvalShape};
use crate::klein::InvolutionKind;
use crate::realpoly::{Gaussian, ProjectivePoint, Sign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectralError {
    #[error("expected {expected} zeros (2g - 2), got {found}")]
    WrongZeroCount { expected: usize, found: usize },
    #[error("the overall sign must be +1 or -1")]
    InvalidSign,
    #[error("zeros are not simple: {0}")]
    NonSimpleZeros(String),
    #[error("zero set is not invariant under the involution: {0}")]
    RealityViolation(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// The quadratic differential q = s · ∏ (z − aᵢ) dz² / w² on w² = p(z),
/// with 2g − 2 zeros aᵢ on ℙ¹.
///
/// A zero at ∞ contributes no factor: in the chart ζ = 1/z the remaining
/// product has degree 2g − 3, which leaves q with a simple zero at each of
/// the two points over ∞. For g = 2 the zeros are the pair (a₁, a₂).
#[derive(Clone, Debug)]
pub struct QuadDifferential {
    curve: Arc<HyperellipticCurve>,
    zeros: Vec<ProjectivePoint>,
    sign: Sign,
    kind: InvolutionKind,
}

/// What analysis found on one fixed circle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OvalSummary {
    pub index: usize,
    pub shape: OvalShape,
    /// Zeros of q lying on this circle.
    pub zero_count: usize,
    /// Sign of q along the circle when it carries no zeros.
    pub sign: Option<Sign>,
}

/// Sign and zero data of q along the fixed circles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralInvariants {
    /// Number of fixed circles of the involution on the curve.
    pub n: usize,
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
    /// Zeros of q fixed by the involution.
    pub u: usize,
    pub oval_zero_counts: Vec<usize>,
    /// Fixed circles of the lifted involution on the spectral curve.
    pub n_s: usize,
}

impl QuadDifferential {
    /// Checks only the zero count and the sign; reality and simplicity are
    /// checked by [`check_reality`] and [`analyze`].
    pub fn new(
        curve: Arc<HyperellipticCurve>,
        zeros: Vec<ProjectivePoint>,
        sign: Sign,
        kind: InvolutionKind,
    ) -> Result<Self, SpectralError> {
        let expected = 2 * curve.genus() - 2;
        if zeros.len() != expected {
            return Err(SpectralError::WrongZeroCount {
                expected,
                found: zeros.len(),
            });
        }
        if sign == Sign::Zero {
            return Err(SpectralError::InvalidSign);
        }
        Ok(Self {
            curve,
            zeros,
            sign,
            kind,
        })
    }

    /// Genus-2 form with zeros a₁, a₂.
    pub fn genus2(
        curve: Arc<HyperellipticCurve>,
        a1: ProjectivePoint,
        a2: ProjectivePoint,
        sign: Sign,
        kind: InvolutionKind,
    ) -> Result<Self, SpectralError> {
        Self::new(curve, vec![a1, a2], sign, kind)
    }

    pub fn curve(&self) -> &HyperellipticCurve {
        &self.curve
    }

    pub fn curve_arc(&self) -> &Arc<HyperellipticCurve> {
        &self.curve
    }

    pub fn zeros(&self) -> &[ProjectivePoint] {
        &self.zeros
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn kind(&self) -> InvolutionKind {
        self.kind
    }

    /// The same differential with the opposite overall sign.
    pub fn negated(&self) -> Self {
        Self {
            sign: self.sign.flip(),
            ..self.clone()
        }
    }

    /// The same differential considered with respect to another involution.
    pub fn with_kind(&self, kind: InvolutionKind) -> Self {
        Self { kind, ..self.clone() }
    }

    /// Rejects repeated zeros and zeros at branch points.
    pub fn check_simple_zeros(&self) -> Result<(), SpectralError> {
        for (i, a) in self.zeros.iter().enumerate() {
            if self.zeros[..i].contains(a) {
                return Err(SpectralError::NonSimpleZeros(format!("{a} is repeated")));
            }
            if self.curve.is_branch_point(a) {
                return Err(SpectralError::NonSimpleZeros(format!("{a} is a branch point")));
            }
        }
        Ok(())
    }

    /// Sign of q·(real tangent vector)² at a real non-root point x that is
    /// not a zero: the sign of s · ∏ (x − aᵢ) / p(x). Conjugate pairs give
    /// |x − a|² > 0 and a zero at ∞ has no factor, so only finite real
    /// zeros enter.
    pub fn sign_at_real(&self, x: &BigRational) -> Sign {
        let mut s = self.sign.times(Sign::of(&self.curve.polynomial().eval(x)));
        for a in &self.zeros {
            if let Some(r) = a.as_real() {
                s = s.times(Sign::of(&(x - r)));
            }
        }
        s
    }

    /// Pulls q back along the real Möbius map z ↦ (a z + b)/(c z + d).
    ///
    /// In homogeneous coordinates q = s ∏ Lᵢ(Z) (Z₁dZ₂ − Z₂dZ₁)² / P(Z) with
    /// Lᵢ = Z₁ − aᵢZ₂ (and L = Z₂ for a zero at ∞). Substituting Z = M Z'
    /// scales the area form by det M and each Lᵢ by a constant λᵢ, so the
    /// new sign is s · sign ∏ λᵢ; conjugate zeros give conjugate λ's whose
    /// product is positive.
    pub fn mobius_pullback(&self, m: &[[BigRational; 2]; 2]) -> Result<Self, SpectralError> {
        let curve = Arc::new(self.curve.mobius_pullback(m)?);
        let (ma, mb, mc, md) = (&m[0][0], &m[0][1], &m[1][0], &m[1][1]);
        let mut sign = self.sign;
        let mut zeros = Vec::with_capacity(self.zeros.len());
        for z in &self.zeros {
            // L = α Z₁' + β Z₂'
            let (alpha, beta) = match z {
                ProjectivePoint::Infinity => (Gaussian::real(mc.clone()), Gaussian::real(md.clone())),
                ProjectivePoint::Finite(a) => {
                    let ga = Gaussian::real(ma.clone());
                    let gb = Gaussian::real(mb.clone());
                    let gc = Gaussian::real(mc.clone());
                    let gd = Gaussian::real(md.clone());
                    (&ga - &(a * &gc), &gb - &(a * &gd))
                }
            };
            let (lambda, new_zero) = if alpha.is_zero() {
                (beta, ProjectivePoint::Infinity)
            } else {
                let inv = alpha.inv().expect("nonzero");
                (alpha.clone(), ProjectivePoint::Finite(-&(&beta * &inv)))
            };
            if lambda.is_real() {
                sign = sign.times(Sign::of(&lambda.re));
            }
            zeros.push(new_zero);
        }
        Self::new(curve, zeros, sign, self.kind)
    }
}

/// Whether the zero set is invariant under the involution covering the
/// real structure of ℙ¹: conjugation, or z ↦ −1/z̄ for the antipodal kinds.
pub fn check_reality(q: &QuadDifferential) -> bool {
    reality_violation(q).is_none()
}

fn reality_violation(q: &QuadDifferential) -> Option<String> {
    for a in q.zeros() {
        let image = if q.kind().is_antipodal() { a.antipode() } else { a.conj() };
        if !q.zeros().contains(&image) {
            return Some(format!("{a} is a zero but its image {image} is not"));
        }
    }
    None
}

/// Where each fixed zero of q sits and the sign of q on every zero-free
/// fixed circle.
pub fn analyze_ovals(q: &QuadDifferential) -> Result<Vec<OvalSummary>, SpectralError> {
    if let Some(msg) = reality_violation(q) {
        return Err(SpectralError::RealityViolation(msg));
    }
    q.check_simple_zeros()?;
    let curve = q.curve();
    let ovals = curve.fixed_ovals(q.kind());
    let real_zeros: Vec<&ProjectivePoint> = q.zeros().iter().filter(|a| a.is_real()).collect();
    let mut out = Vec::with_capacity(ovals.len());
    for oval in &ovals {
        let zero_count = zeros_on_oval(curve, oval, &real_zeros);
        let sign = if zero_count == 0 {
            let sample = curve.sign_profile().intervals[oval.interval]
                .sample
                .clone()
                .expect("profile intervals carry finite samples");
            Some(q.sign_at_real(&sample))
        } else {
            None
        };
        out.push(OvalSummary {
            index: oval.index,
            shape: oval.shape,
            zero_count,
            sign,
        });
    }
    Ok(out)
}

/// Each real zero over the interior of an interval oval has both of its
/// preimages on that oval. Over a whole-line region the two preimages lie on
/// the single double-covering circle, or one on each sheet.
fn zeros_on_oval(curve: &HyperellipticCurve, oval: &Oval, real_zeros: &[&ProjectivePoint]) -> usize {
    match oval.shape {
        OvalShape::Interval { .. } => 2 * real_zeros.iter().filter(|a| curve.oval_contains(oval, a)).count(),
        OvalShape::DoubleCover => 2 * real_zeros.len(),
        OvalShape::Sheet { .. } => real_zeros.len(),
    }
}

/// Sign/zero invariants of q with respect to its involution.
pub fn analyze(q: &QuadDifferential) -> Result<SpectralInvariants, SpectralError> {
    let ovals = analyze_ovals(q)?;
    Ok(summarize(&ovals))
}

pub(crate) fn summarize(ovals: &[OvalSummary]) -> SpectralInvariants {
    let n_plus = ovals.iter().filter(|o| o.sign == Some(Sign::Positive)).count();
    let n_minus = ovals.iter().filter(|o| o.sign == Some(Sign::Negative)).count();
    let oval_zero_counts: Vec<usize> = ovals.iter().map(|o| o.zero_count).collect();
    let u: usize = oval_zero_counts.iter().sum();
    SpectralInvariants {
        n: ovals.len(),
        n_plus,
        n_minus,
        n_zero: n_plus + n_minus,
        u,
        oval_zero_counts,
        n_s: 2 * n_plus + u / 2,
    }
}

impl SpectralInvariants {
    /// Checks the structural constraints every valid analysis satisfies.
    pub fn constraint_violations(&self, g: usize) -> Vec<String> {
        let mut v = Vec::new();
        if !self.u.is_multiple_of(2) {
            v.push("u is odd".to_string());
        }
        if self.u / 2 > 2 * g - 2 {
            v.push("u/2 exceeds 2g - 2".to_string());
        }
        if self.n_plus > self.n {
            v.push("n_plus exceeds n".to_string());
        }
        if self.u > 0 && self.n_plus >= self.n {
            v.push("u > 0 but n_plus is not below n".to_string());
        }
        if self.n == 0 && self.u != 0 {
            v.push("no fixed circles but u > 0".to_string());
        }
        if self.oval_zero_counts.iter().any(|c| c % 2 != 0) {
            v.push("odd zero count on an oval".to_string());
        }
        v
    }
}

/// The real point v/d.
pub fn real_point(v: i64, d: i64) -> ProjectivePoint {
    ProjectivePoint::real(BigRational::new(v.into(), d.into()))
}
