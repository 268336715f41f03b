use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::klein::InvolutionKind;
use crate::realpoly::{
    parse_complex_polynomial, Gaussian, ParseError, PolyError, ProjectivePoint, RealPolynomial, RootMultiset, Sign,
    SignProfile,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("degree {0} is odd, so infinity is a branch point")]
    OddDegree(usize),
    #[error("p has a repeated root (gcd(p, p') has degree {0})")]
    NonSquareFree(usize),
    #[error("roots are not closed under conjugation: {0}")]
    NotConjugationClosed(String),
    #[error("degree {0} gives genus below 2")]
    GenusTooSmall(usize),
    #[error("p is the zero polynomial")]
    ZeroPolynomial,
    #[error(transparent)]
    Roots(PolyError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl From<PolyError> for CurveError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::NonSquareFree(d) => CurveError::NonSquareFree(d),
            PolyError::ZeroPolynomial => CurveError::ZeroPolynomial,
            other => CurveError::Roots(other),
        }
    }
}

/// The curve w² = p(z) with deg p = 2g + 2, square-free, real.
///
/// p is stored rescaled by a positive constant so that its leading
/// coefficient is ±1; positive rescaling changes neither the curve's real
/// structures nor any sign computed from p.
#[derive(Clone, Debug)]
pub struct HyperellipticCurve {
    p: RealPolynomial,
    genus: usize,
    lead_sign: Sign,
    roots: RootMultiset,
    profile: SignProfile,
}

/// Builds and validates a curve from its defining polynomial.
pub fn build_curve(p: &RealPolynomial) -> Result<HyperellipticCurve, CurveError> {
    if p.is_zero() {
        return Err(CurveError::ZeroPolynomial);
    }
    let d = p.degree();
    if d % 2 == 1 {
        return Err(CurveError::OddDegree(d));
    }
    if d < 6 {
        return Err(CurveError::GenusTooSmall(d));
    }
    let lead = p.leading();
    let lead_sign = Sign::of(&lead);
    let normalized = p.scale(&(BigRational::one() / lead.abs()));
    let roots = normalized.find_roots()?;
    let profile = SignProfile::from_roots(&normalized, roots.real_roots.clone());
    Ok(HyperellipticCurve {
        p: normalized,
        genus: d / 2 - 1,
        lead_sign,
        roots,
        profile,
    })
}

/// Parses `text` as a polynomial and builds the curve. Non-real
/// coefficients are reported as a conjugation failure of the roots.
pub fn build_curve_from_text(text: &str) -> Result<HyperellipticCurve, CurveError> {
    let coeffs = parse_complex_polynomial(text)?;
    if let Some(c) = coeffs.iter().find(|c| !c.is_real()) {
        return Err(CurveError::NotConjugationClosed(format!(
            "expanded polynomial has the non-real coefficient {c}"
        )));
    }
    build_curve(&RealPolynomial::new(coeffs.into_iter().map(|c| c.re).collect()))
}

/// Builds w² = lead · ∏ (z − r) from an explicit root list.
pub fn build_curve_from_roots(roots: &[ProjectivePoint], lead: &BigRational) -> Result<HyperellipticCurve, CurveError> {
    let mut finite = Vec::with_capacity(roots.len());
    for r in roots {
        match r {
            ProjectivePoint::Infinity => return Err(CurveError::OddDegree(roots.len().saturating_sub(1))),
            ProjectivePoint::Finite(z) => finite.push(z.clone()),
        }
    }
    // Pair every non-real root with one copy of its conjugate.
    let mut unmatched: Vec<Gaussian> = Vec::new();
    let mut p = RealPolynomial::constant(lead.clone());
    for z in &finite {
        if z.is_real() {
            p = &p * &RealPolynomial::from_real_roots(std::slice::from_ref(&z.re));
        } else if let Some(pos) = unmatched.iter().position(|w| *w == z.conj()) {
            let w = unmatched.swap_remove(pos);
            p = &p * &RealPolynomial::conjugate_pair_factor(&w);
        } else {
            unmatched.push(z.clone());
        }
    }
    if let Some(z) = unmatched.first() {
        return Err(CurveError::NotConjugationClosed(format!("{z} has no conjugate partner")));
    }
    build_curve(&p)
}

/// Shape of a fixed circle relative to the z-line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum OvalShape {
    /// Lies over the closed interval between two consecutive real roots
    /// (indices into the sorted real roots), covering it twice.
    Interval {
        left: usize,
        right: usize,
        through_infinity: bool,
    },
    /// Lies over all of ℝP¹, covering it twice (one circle, even genus).
    DoubleCover,
    /// One of the two circles over ℝP¹ (odd genus); the sign picks the
    /// value ±√|p(0)| (times i when p < 0) of w over z = 0.
    Sheet { branch: Sign },
}

/// A fixed circle of a conjugation-type involution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Oval {
    pub index: usize,
    pub shape: OvalShape,
    /// Index of the underlying interval in the curve's sign profile.
    #[serde(skip)]
    pub interval: usize,
}

impl Oval {
    pub fn through_infinity(&self) -> bool {
        match self.shape {
            OvalShape::Interval { through_infinity, .. } => through_infinity,
            _ => true,
        }
    }

    pub fn is_whole_line(&self) -> bool {
        !matches!(self.shape, OvalShape::Interval { .. })
    }
}

impl HyperellipticCurve {
    pub fn genus(&self) -> usize {
        self.genus
    }

    /// The defining polynomial, normalized to leading coefficient ±1.
    pub fn polynomial(&self) -> &RealPolynomial {
        &self.p
    }

    pub fn lead_sign(&self) -> Sign {
        self.lead_sign
    }

    pub fn roots(&self) -> &RootMultiset {
        &self.roots
    }

    /// Half the number of real branch points.
    pub fn k(&self) -> usize {
        self.roots.k()
    }

    pub fn sign_profile(&self) -> &SignProfile {
        &self.profile
    }

    /// True if `z` is a branch point. Exact.
    pub fn is_branch_point(&self, z: &ProjectivePoint) -> bool {
        match z {
            ProjectivePoint::Infinity => false,
            ProjectivePoint::Finite(w) => self.p.eval_gaussian(w).is_zero(),
        }
    }

    /// Fixed circles of the conjugation-type involution `kind`: one per
    /// maximal interval of {ε p > 0}, or, if ε p > 0 on all of ℝP¹, one
    /// double cover (g even) or two sheets (g odd).
    ///
    /// Antipodal kinds have no fixed points and return no ovals.
    pub fn fixed_ovals(&self, kind: InvolutionKind) -> Vec<Oval> {
        let Some(eps) = kind.fixed_sign() else {
            return Vec::new();
        };
        let mut out = Vec::new();
        if self.profile.roots.is_empty() {
            if self.profile.intervals[0].sign.times(eps) == Sign::Positive {
                if self.genus.is_multiple_of(2) {
                    out.push(Oval {
                        index: 0,
                        shape: OvalShape::DoubleCover,
                        interval: 0,
                    });
                } else {
                    for (i, branch) in [Sign::Positive, Sign::Negative].into_iter().enumerate() {
                        out.push(Oval {
                            index: i,
                            shape: OvalShape::Sheet { branch },
                            interval: 0,
                        });
                    }
                }
            }
            return out;
        }
        for (i, iv) in self.profile.intervals.iter().enumerate() {
            if iv.sign.times(eps) != Sign::Positive {
                continue;
            }
            let (Some(crate::realpoly::Endpoint::Root(l)), Some(crate::realpoly::Endpoint::Root(r))) =
                (iv.left.clone(), iv.right.clone())
            else {
                unreachable!("even-degree profiles have root endpoints");
            };
            out.push(Oval {
                index: out.len(),
                shape: OvalShape::Interval {
                    left: l,
                    right: r,
                    through_infinity: iv.through_infinity,
                },
                interval: i,
            });
        }
        out
    }

    /// Fixed circles of (z, w) ↦ (z̄, w̄).
    pub fn ovals(&self) -> Vec<Oval> {
        self.fixed_ovals(InvolutionKind::ConjF)
    }

    /// Whether the real point `z` (not a branch point) lies under `oval`.
    pub fn oval_contains(&self, oval: &Oval, z: &ProjectivePoint) -> bool {
        match z {
            ProjectivePoint::Infinity => oval.through_infinity(),
            ProjectivePoint::Finite(w) if w.is_real() => {
                oval.is_whole_line() || self.profile.locate(&self.p, &w.re) == Some(oval.interval)
            }
            ProjectivePoint::Finite(_) => false,
        }
    }

    /// Approximate endpoints of an interval oval, as (left, right) with the
    /// convention that right < left when the oval passes through ∞.
    pub fn oval_endpoints_f64(&self, oval: &Oval) -> Option<(f64, f64)> {
        match oval.shape {
            OvalShape::Interval { left, right, .. } => Some((
                self.profile.roots[left].midpoint_f64(),
                self.profile.roots[right].midpoint_f64(),
            )),
            _ => None,
        }
    }

    /// Möbius pullback of the curve along z ↦ (a z + b)/(c z + d); fails if
    /// the new ∞ would be a branch point.
    pub fn mobius_pullback(&self, m: &[[BigRational; 2]; 2]) -> Result<HyperellipticCurve, CurveError> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        assert!(!det.is_zero(), "singular Möbius map");
        build_curve(&self.p.mobius_pullback(m))
    }
}

impl Serialize for HyperellipticCurve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HyperellipticCurve", 6)?;
        st.serialize_field("p", &self.p.to_string())?;
        st.serialize_field("g", &self.genus)?;
        st.serialize_field("k", &self.k())?;
        st.serialize_field("lead_sign", &self.lead_sign.as_i8())?;
        st.serialize_field("real_roots", &self.roots.real_roots)?;
        st.serialize_field("complex_pairs", &self.roots.complex_pairs)?;
        st.end()
    }
}
