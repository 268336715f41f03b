//! Exact real-coefficient polynomials.
//!
//! Coefficients are rationals, so every sign decision made here is exact:
//! real roots are isolated with Sturm sequences and non-real roots are
//! enclosed in disks whose radii are computed in exact Gaussian arithmetic.
//! The point at infinity is handled in the chart ζ = 1/z.

mod gaussian;
mod parse;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use gaussian::{f64_to_rational, rational_to_f64, round_dyadic, Gaussian};
pub use parse::{parse_complex_polynomial, parse_point, parse_polynomial, parse_rational, ParseError};
pub use roots::{ComplexRootBox, RealRoot, RootConfig, RootMultiset};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("the zero polynomial has no roots")]
    ZeroPolynomial,
    #[error("polynomial has a repeated root (gcd(p, p') has degree {0})")]
    NonSquareFree(usize),
    #[error("could not certify the non-real roots after {0} refinement rounds")]
    CertificationFailed(usize),
}

/// Sign of a real number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(q: &BigRational) -> Self {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn of_int(v: i64) -> Self {
        match v.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }
}

/// A point of the projective line: a finite complex value or ∞ = [0,1].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjectivePoint {
    Finite(Gaussian),
    Infinity,
}

impl ProjectivePoint {
    pub fn real(q: BigRational) -> Self {
        ProjectivePoint::Finite(Gaussian::real(q))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjectivePoint::Infinity)
    }

    /// True for ∞ and for finite points with zero imaginary part.
    pub fn is_real(&self) -> bool {
        match self {
            ProjectivePoint::Finite(z) => z.is_real(),
            ProjectivePoint::Infinity => true,
        }
    }

    pub fn as_real(&self) -> Option<&BigRational> {
        match self {
            ProjectivePoint::Finite(z) if z.is_real() => Some(&z.re),
            _ => None,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            ProjectivePoint::Finite(z) => ProjectivePoint::Finite(z.conj()),
            ProjectivePoint::Infinity => ProjectivePoint::Infinity,
        }
    }

    /// The antipodal map z ↦ −1/z̄ on the Riemann sphere.
    pub fn antipode(&self) -> Self {
        match self {
            ProjectivePoint::Infinity => ProjectivePoint::Finite(Gaussian::zero()),
            ProjectivePoint::Finite(z) => match z.antipode() {
                Some(w) => ProjectivePoint::Finite(w),
                None => ProjectivePoint::Infinity,
            },
        }
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Finite(z) => write!(f, "{z}"),
            ProjectivePoint::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_point(&text).map_err(serde::de::Error::custom)
    }
}

/// A nonzero-or-zero polynomial with rational coefficients, stored in
/// ascending order with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealPolynomial {
    coeffs: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl RealPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial z.
    pub fn z() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    /// ∏ (z − r) over the given real roots.
    pub fn from_real_roots(roots: &[BigRational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::new(vec![-r.clone(), BigRational::one()])
        })
    }

    /// The real quadratic (z − c)(z − c̄) = z² − 2 Re c · z + |c|².
    pub fn conjugate_pair_factor(c: &Gaussian) -> Self {
        Self::new(vec![
            c.norm_sqr(),
            -(&c.re + &c.re),
            BigRational::one(),
        ])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_gaussian(&self, z: &Gaussian) -> Gaussian {
        let mut acc = Gaussian::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * z;
            acc.re += c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rational_to_f64(c))
    }

    /// Homogenised evaluation z2^deg · p(z1/z2) in floating point.
    pub fn eval_homogeneous_f64(&self, z1: f64, z2: f64) -> f64 {
        let d = self.degree();
        let mut acc = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            acc += rational_to_f64(c) * z1.powi(j as i32) * z2.powi((d - j) as i32);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * q(j as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Same polynomial divided by its leading coefficient.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        Self::new(self.coeffs.iter().map(|a| a / &lead).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division; panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree();
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_square_free(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Checks square-freeness and reports the degree of gcd(p, p') otherwise.
    pub fn require_square_free(&self) -> Result<(), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        if g.degree() > 0 {
            Err(PolyError::NonSquareFree(g.degree()))
        } else {
            Ok(())
        }
    }

    /// Sign at a real projective point. At ∞ the value is read in the chart
    /// ζ = 1/z with weight ζ^deg, i.e. it is the sign of the leading
    /// coefficient; for odd degree this is the sign approached from +∞.
    ///
    /// Non-real finite points return `None`.
    pub fn sign_at(&self, x: &ProjectivePoint) -> Option<Sign> {
        match x {
            ProjectivePoint::Infinity => Some(Sign::of(&self.leading())),
            ProjectivePoint::Finite(z) if z.is_real() => Some(Sign::of(&self.eval(&z.re))),
            ProjectivePoint::Finite(_) => None,
        }
    }

    /// Sign of p on (−∞, −M) for large M.
    pub fn sign_at_neg_infinity(&self) -> Sign {
        let s = Sign::of(&self.leading());
        if self.degree() % 2 == 1 {
            s.flip()
        } else {
            s
        }
    }

    /// z^deg · p(−1/z), the polynomial whose roots are the antipodes of the
    /// roots of p (for real-coefficient p).
    pub fn antipodal_reflection(&self) -> Self {
        let d = self.degree();
        // z^d Σ c_j (−1/z)^j = Σ c_j (−1)^j z^(d−j)
        let mut out = vec![BigRational::zero(); d + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[d - j] = if j % 2 == 0 { c.clone() } else { -c.clone() };
        }
        Self::new(out)
    }

    /// True when the root multiset is closed under z ↦ −1/z̄. Exact.
    pub fn is_antipodally_closed(&self) -> bool {
        if self.is_zero() || self.coeffs[0].is_zero() {
            // 0 is a root but its antipode ∞ is not.
            return false;
        }
        let r = self.antipodal_reflection();
        r.degree() == self.degree() && r.monic() == self.monic()
    }

    /// Pulls p back along the real Möbius map z ↦ (a z + b)/(c z + d),
    /// returning (c z + d)^deg · p((a z + b)/(c z + d)).
    pub fn mobius_pullback(&self, m: &[[BigRational; 2]; 2]) -> Self {
        let d = self.degree();
        let num = Self::new(vec![m[0][1].clone(), m[0][0].clone()]);
        let den = Self::new(vec![m[1][1].clone(), m[1][0].clone()]);
        let mut out = Self::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            let term = &(&num.pow(j as u32) * &den.pow((d - j) as u32)) * &Self::constant(c.clone());
            out = &out + &term;
        }
        out
    }

    /// Sturm sequence p, p', −rem(p, p'), …
    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        seq
    }

    /// Ordered sign pattern of p over ℝP¹ minus its real roots.
    pub fn real_sign_profile(&self) -> Result<SignProfile, PolyError> {
        self.require_square_free()?;
        let roots = roots::isolate_real_roots(self, &RootConfig::isolate_only());
        Ok(SignProfile::from_roots(self, roots))
    }

    pub fn find_roots(&self) -> Result<RootMultiset, PolyError> {
        roots::find_roots(self, &RootConfig::default())
    }

    pub fn find_roots_with(&self, config: &RootConfig) -> Result<RootMultiset, PolyError> {
        roots::find_roots(self, config)
    }

    /// Number of distinct real roots, from the Sturm sequence.
    pub fn count_real_roots(&self) -> usize {
        roots::count_real_roots(self)
    }
}

impl fmt::Display for RealPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match j {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{j}"),
            };
            if j == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for &RealPolynomial {
    type Output = RealPolynomial;
    fn add(self, rhs: &RealPolynomial) -> RealPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let mut c = self.coeffs.get(j).cloned().unwrap_or_else(BigRational::zero);
            if let Some(d) = rhs.coeffs.get(j) {
                c += d;
            }
            out.push(c);
        }
        RealPolynomial::new(out)
    }
}

impl Sub for &RealPolynomial {
    type Output = RealPolynomial;
    fn sub(self, rhs: &RealPolynomial) -> RealPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &RealPolynomial {
    type Output = RealPolynomial;
    fn neg(self) -> RealPolynomial {
        RealPolynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &RealPolynomial {
    type Output = RealPolynomial;
    fn mul(self, rhs: &RealPolynomial) -> RealPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RealPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPolynomial::new(out)
    }
}

/// Where an interval of ℝP¹ ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    /// Index into the sorted real roots.
    Root(usize),
    /// ∞ separating two intervals (only for odd degree).
    Infinity,
}

/// A maximal open interval of ℝP¹ on which p has constant nonzero sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignInterval {
    /// `None` when the interval is the whole of ℝP¹ (no real roots, even degree).
    pub left: Option<Endpoint>,
    pub right: Option<Endpoint>,
    pub through_infinity: bool,
    pub sign: Sign,
    /// A rational point strictly inside the interval, or `None` when the
    /// only convenient sample is ∞ itself.
    pub sample: Option<BigRational>,
}

/// The sign pattern of a square-free polynomial around ℝP¹.
#[derive(Clone, Debug)]
pub struct SignProfile {
    pub roots: Vec<RealRoot>,
    /// Ordered by left endpoint; the interval through ∞ (or the two halves
    /// around ∞ for odd degree) comes last.
    pub intervals: Vec<SignInterval>,
}

impl SignProfile {
    /// Builds the profile from the sorted, separated real roots of p.
    pub fn from_roots(p: &RealPolynomial, roots: Vec<RealRoot>) -> Self {
        let mut intervals = Vec::new();
        let n = roots.len();
        if n == 0 {
            // Only even degree can reach this point for a nonconstant p.
            let sign = Sign::of(&p.leading());
            intervals.push(SignInterval {
                left: None,
                right: None,
                through_infinity: true,
                sign,
                sample: Some(BigRational::zero()),
            });
            return Self { roots, intervals };
        }
        for i in 0..n.saturating_sub(1) {
            let s = roots::separating_point(&roots[i], &roots[i + 1]);
            intervals.push(SignInterval {
                left: Some(Endpoint::Root(i)),
                right: Some(Endpoint::Root(i + 1)),
                through_infinity: false,
                sign: Sign::of(&p.eval(&s)),
                sample: Some(s),
            });
        }
        let beyond_hi = roots[n - 1].upper() + BigRational::one();
        let beyond_lo = roots[0].lower() - BigRational::one();
        if p.degree().is_multiple_of(2) {
            intervals.push(SignInterval {
                left: Some(Endpoint::Root(n - 1)),
                right: Some(Endpoint::Root(0)),
                through_infinity: true,
                sign: Sign::of(&p.eval(&beyond_hi)),
                sample: Some(beyond_hi),
            });
        } else {
            intervals.push(SignInterval {
                left: Some(Endpoint::Root(n - 1)),
                right: Some(Endpoint::Infinity),
                through_infinity: false,
                sign: Sign::of(&p.eval(&beyond_hi)),
                sample: Some(beyond_hi),
            });
            intervals.push(SignInterval {
                left: Some(Endpoint::Infinity),
                right: Some(Endpoint::Root(0)),
                through_infinity: false,
                sign: Sign::of(&p.eval(&beyond_lo)),
                sample: Some(beyond_lo),
            });
        }
        Self { roots, intervals }
    }

    /// Index of the interval containing the real, non-root point `x`.
    pub fn locate(&self, p: &RealPolynomial, x: &BigRational) -> Option<usize> {
        if p.eval(x).is_zero() {
            return None;
        }
        let below = self
            .roots
            .iter()
            .map(|r| r.is_below(p, x))
            .filter(|&b| b)
            .count();
        let n = self.roots.len();
        if n == 0 {
            return Some(0);
        }
        if below == 0 || below == n {
            if p.degree().is_multiple_of(2) {
                Some(self.intervals.len() - 1)
            } else if below == n {
                Some(self.intervals.len() - 2)
            } else {
                Some(self.intervals.len() - 1)
            }
        } else {
            Some(below - 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p_six_real() -> RealPolynomial {
        parse_polynomial("(z^2-1)(z^2-4)(z^2-9)").unwrap()
    }

    #[test]
    fn arithmetic_and_display() {
        let p = p_six_real();
        assert_eq!(p.to_string(), "z^6 - 14*z^4 + 49*z^2 - 36");
        let (qt, r) = p.div_rem(&RealPolynomial::from_i64(&[-1, 0, 1]));
        assert!(r.is_zero());
        assert_eq!(qt.to_string(), "z^4 - 13*z^2 + 36");
    }

    #[test]
    fn sign_examples() {
        let p = p_six_real();
        assert_eq!(p.sign_at(&ProjectivePoint::real(q(0))), Some(Sign::Negative));
        assert_eq!(p.eval(&q(0)), q(-36));
        assert_eq!(p.sign_at(&ProjectivePoint::real(q(4))), Some(Sign::Positive));
        assert_eq!(p.sign_at(&ProjectivePoint::Infinity), Some(Sign::Positive));
    }

    #[test]
    fn odd_degree_infinity_has_two_sides() {
        let p = RealPolynomial::from_i64(&[-1, 0, 0, 0, 0, 1]);
        assert_eq!(p.sign_at(&ProjectivePoint::Infinity), Some(Sign::Positive));
        assert_eq!(p.sign_at_neg_infinity(), Sign::Negative);
        let prof = p.real_sign_profile().unwrap();
        assert_eq!(prof.intervals.len(), 2);
        assert_eq!(prof.intervals[0].sign, Sign::Positive);
        assert_eq!(prof.intervals[1].sign, Sign::Negative);
    }

    #[test]
    fn profile_of_six_real_roots() {
        let p = p_six_real();
        let prof = p.real_sign_profile().unwrap();
        let signs: Vec<char> = prof.intervals.iter().map(|i| i.sign.symbol()).collect();
        // (−3,−2) (−2,−1) (−1,1) (1,2) (2,3) (3,∞,−3)
        assert_eq!(signs, vec!['-', '+', '-', '+', '-', '+']);
        assert!(prof.intervals[5].through_infinity);
    }

    #[test]
    fn profile_positive_definite_and_two_roots() {
        let p = RealPolynomial::from_i64(&[1, 0, 1]);
        let prof = p.real_sign_profile().unwrap();
        assert_eq!(prof.intervals.len(), 1);
        assert_eq!(prof.intervals[0].sign, Sign::Positive);
        assert!(prof.intervals[0].left.is_none());

        let p = RealPolynomial::from_i64(&[-1, 0, 1]);
        let prof = p.real_sign_profile().unwrap();
        let signs: Vec<_> = prof.intervals.iter().map(|i| (i.through_infinity, i.sign)).collect();
        assert_eq!(signs, vec![(false, Sign::Negative), (true, Sign::Positive)]);
    }

    #[test]
    fn square_free_detection() {
        let p = parse_polynomial("(z-1)^2(z+3)").unwrap();
        assert_eq!(p.require_square_free(), Err(PolyError::NonSquareFree(1)));
        assert!(matches!(
            p.real_sign_profile(),
            Err(PolyError::NonSquareFree(_))
        ));
    }

    #[test]
    fn antipodal_closure() {
        // {±2i, ±i/2} is closed under z ↦ −1/z̄
        let p = parse_polynomial("(z^2+4)(z^2+1/4)").unwrap();
        assert!(p.is_antipodally_closed());
        let p = parse_polynomial("(z^2+4)(z^2+1)").unwrap();
        assert!(!p.is_antipodally_closed());
        // real pair {2, −1/2}
        let p = parse_polynomial("(z-2)(z+1/2)(z^2+1)").unwrap();
        assert!(p.is_antipodally_closed());
    }

    #[test]
    fn mobius_pullback_moves_roots() {
        // z ↦ z + 1 moves roots {±1} to {0, −2}
        let p = RealPolynomial::from_i64(&[-1, 0, 1]);
        let m = [[q(1), q(1)], [q(0), q(1)]];
        let moved = p.mobius_pullback(&m);
        assert_eq!(moved, RealPolynomial::from_i64(&[0, 2, 1]));
    }
}
