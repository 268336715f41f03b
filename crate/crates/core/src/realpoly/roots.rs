use std::cmp::Ordering;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{f64_to_rational, rational_to_f64, round_dyadic, Gaussian, PolyError, RealPolynomial, Sign};

/// Tuning for root isolation.
#[derive(Clone, Debug)]
pub struct RootConfig {
    /// Real isolating intervals are refined until narrower than 2^-width_bits.
    /// `None` stops as soon as the roots are isolated.
    pub width_bits: Option<u32>,
    /// Maximum number of exact Newton rounds spent certifying non-real roots.
    pub max_polish_rounds: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self {
            width_bits: Some(40),
            max_polish_rounds: 6,
        }
    }
}

impl RootConfig {
    /// Isolation only; no width refinement.
    pub fn isolate_only() -> Self {
        Self {
            width_bits: None,
            ..Self::default()
        }
    }
}

/// A real root, known exactly or through an isolating interval (lo, hi)
/// with p(lo)·p(hi) < 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealRoot {
    Exact(BigRational),
    Isolated { lo: BigRational, hi: BigRational },
}

impl RealRoot {
    pub fn lower(&self) -> BigRational {
        match self {
            RealRoot::Exact(r) => r.clone(),
            RealRoot::Isolated { lo, .. } => lo.clone(),
        }
    }

    pub fn upper(&self) -> BigRational {
        match self {
            RealRoot::Exact(r) => r.clone(),
            RealRoot::Isolated { hi, .. } => hi.clone(),
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        match self {
            RealRoot::Exact(r) => rational_to_f64(r),
            RealRoot::Isolated { lo, hi } => rational_to_f64(&((lo + hi) / BigRational::from_integer(2.into()))),
        }
    }

    pub fn width(&self) -> BigRational {
        self.upper() - self.lower()
    }

    /// Whether the root lies strictly below `x`; `x` must not be a root of `p`.
    pub fn is_below(&self, p: &RealPolynomial, x: &BigRational) -> bool {
        match self {
            RealRoot::Exact(r) => r < x,
            RealRoot::Isolated { lo, hi } => {
                if x >= hi {
                    true
                } else if x <= lo {
                    false
                } else {
                    // root in (lo, x) iff p changes sign there
                    Sign::of(&p.eval(lo)) != Sign::of(&p.eval(x))
                }
            }
        }
    }
}

impl Serialize for RealRoot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RealRoot", 3)?;
        st.serialize_field("lo", &self.lower().to_string())?;
        st.serialize_field("hi", &self.upper().to_string())?;
        st.serialize_field("approx", &self.midpoint_f64())?;
        st.end()
    }
}

/// A disk certified to contain exactly one root of p, lying strictly in the
/// upper half plane; its mirror image contains the conjugate root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexRootBox {
    pub center: Gaussian,
    pub radius_sqr: BigRational,
}

impl ComplexRootBox {
    pub fn approx(&self) -> (f64, f64) {
        self.center.to_f64()
    }

    pub fn radius(&self) -> f64 {
        rational_to_f64(&self.radius_sqr).sqrt()
    }
}

impl Serialize for ComplexRootBox {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let (re, im) = self.approx();
        let mut st = s.serialize_struct("ComplexRootBox", 3)?;
        st.serialize_field("re", &re)?;
        st.serialize_field("im", &im)?;
        st.serialize_field("radius", &self.radius())?;
        st.end()
    }
}

/// All roots of a square-free real polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct RootMultiset {
    /// Sorted ascending, pairwise disjoint.
    pub real_roots: Vec<RealRoot>,
    /// Upper-half-plane representatives of the conjugate pairs.
    pub complex_pairs: Vec<ComplexRootBox>,
}

impl RootMultiset {
    /// Half the number of real roots.
    pub fn k(&self) -> usize {
        self.real_roots.len() / 2
    }

    pub fn total(&self) -> usize {
        self.real_roots.len() + 2 * self.complex_pairs.len()
    }
}

/// p scaled by a positive integer to have integer coefficients. Signs at a
/// rational m/D are read from the homogenized value Σ cⱼ mʲ D^(d−j), which
/// avoids gcd reductions.
#[derive(Clone, Debug)]
pub(crate) struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub(crate) fn new(p: &RealPolynomial) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        Self { coeffs }
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub(crate) fn sign_at(&self, x: &BigRational) -> Sign {
        let (m, den) = (x.numer(), x.denom());
        let d = self.degree();
        let mut acc = self.coeffs[d].clone();
        let mut dpow = BigInt::one();
        for j in (0..d).rev() {
            dpow *= den;
            acc = acc * m + &self.coeffs[j] * &dpow;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => Sign::Negative,
            num_bigint::Sign::NoSign => Sign::Zero,
            num_bigint::Sign::Plus => Sign::Positive,
        }
    }

    fn sign_at_pos_inf(&self) -> Sign {
        Sign::of(&BigRational::from_integer(self.coeffs[self.degree()].clone()))
    }

    fn sign_at_neg_inf(&self) -> Sign {
        let s = self.sign_at_pos_inf();
        if self.degree() % 2 == 1 {
            s.flip()
        } else {
            s
        }
    }
}

fn variations(values: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for s in values {
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(seq: &[IntPoly], x: &BigRational) -> usize {
    variations(seq.iter().map(|p| p.sign_at(x)))
}

/// Distinct real roots in (a, b].
fn sturm_count(seq: &[IntPoly], a: &BigRational, b: &BigRational) -> usize {
    variations_at(seq, a).saturating_sub(variations_at(seq, b))
}

fn int_sturm(p: &RealPolynomial) -> Vec<IntPoly> {
    p.sturm_sequence().iter().map(IntPoly::new).collect()
}

/// Number of distinct real roots of p.
pub(crate) fn count_real_roots(p: &RealPolynomial) -> usize {
    let seq = int_sturm(p);
    let neg = variations(seq.iter().map(IntPoly::sign_at_neg_inf));
    let pos = variations(seq.iter().map(IntPoly::sign_at_pos_inf));
    neg.saturating_sub(pos)
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// Cauchy bound: every root has |z| < 1 + max |c_j / c_d|.
fn cauchy_bound(p: &RealPolynomial) -> BigRational {
    let lead = p.leading().abs();
    let m = p.coeffs()[..p.degree()]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    (m + BigRational::one()).ceil() + BigRational::one()
}

/// Exact Sturm isolation of the real roots of a square-free p.
pub(crate) fn isolate_real_roots(p: &RealPolynomial, config: &RootConfig) -> Vec<RealRoot> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let seq = int_sturm(p);
    let ip = &seq[0];
    let bound = cauchy_bound(p);
    let mut found = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm_count(&seq, &lo, &hi);
        match n {
            0 => {}
            1 => found.push(tighten(ip, &seq, lo, hi)),
            _ => {
                let mid = (&lo + &hi) * half();
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    found.sort_by(|a, b| a.lower().cmp(&b.lower()).then(a.upper().cmp(&b.upper())));
    separate(ip, &mut found);
    if let Some(bits) = config.width_bits {
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
        for r in found.iter_mut() {
            if r.width() > target {
                if let Some(narrow) = newton_bracket(p, ip, r, bits) {
                    *r = narrow;
                }
            }
            while matches!(r, RealRoot::Isolated { .. }) && r.width() > target {
                *r = bisect_once(ip, r);
            }
        }
    }
    found
}

/// Turns a half-open (lo, hi] holding exactly one root into a certified
/// `RealRoot` whose endpoints are not roots.
fn tighten(p: &IntPoly, seq: &[IntPoly], mut lo: BigRational, mut hi: BigRational) -> RealRoot {
    if p.sign_at(&hi) == Sign::Zero {
        return RealRoot::Exact(hi);
    }
    // lo may be a root belonging to the neighbouring interval.
    while p.sign_at(&lo) == Sign::Zero {
        let mid = (&lo + &hi) * half();
        if p.sign_at(&mid) == Sign::Zero {
            return RealRoot::Exact(mid);
        }
        if sturm_count(seq, &mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RealRoot::Isolated { lo, hi }
}

fn bisect_once(p: &IntPoly, r: &RealRoot) -> RealRoot {
    match r {
        RealRoot::Exact(_) => r.clone(),
        RealRoot::Isolated { lo, hi } => {
            let mid = (lo + hi) * half();
            let sm = p.sign_at(&mid);
            if sm == Sign::Zero {
                RealRoot::Exact(mid)
            } else if sm == p.sign_at(lo) {
                RealRoot::Isolated { lo: mid, hi: hi.clone() }
            } else {
                RealRoot::Isolated { lo: lo.clone(), hi: mid }
            }
        }
    }
}

/// Tries to jump straight to a bracket of width 2^-(bits+1) around a
/// double-precision Newton estimate; the bracket is accepted only if the
/// exact signs at its ends differ and it sits inside the current interval.
fn newton_bracket(p: &RealPolynomial, ip: &IntPoly, r: &RealRoot, bits: u32) -> Option<RealRoot> {
    let RealRoot::Isolated { lo, hi } = r else {
        return None;
    };
    let (a, b) = (rational_to_f64(lo), rational_to_f64(hi));
    let dp = p.derivative();
    let mut x = 0.5 * (a + b);
    for _ in 0..60 {
        let step = p.eval_f64(x) / dp.eval_f64(x);
        if !step.is_finite() {
            return None;
        }
        x -= step;
        if step.abs() <= 1e-17 * (1.0 + x.abs()) {
            break;
        }
    }
    if !(a..=b).contains(&x) {
        return None;
    }
    let half_width = BigRational::new(BigInt::one(), BigInt::one() << (bits + 2));
    let center = round_dyadic(&f64_to_rational(x), bits + 2);
    let nlo = &center - &half_width;
    let nhi = &center + &half_width;
    if &nlo < lo || &nhi > hi {
        return None;
    }
    let (slo, shi) = (ip.sign_at(&nlo), ip.sign_at(&nhi));
    if slo == Sign::Zero {
        return Some(RealRoot::Exact(nlo));
    }
    if shi == Sign::Zero {
        return Some(RealRoot::Exact(nhi));
    }
    if ip.sign_at(&center) == Sign::Zero {
        return Some(RealRoot::Exact(center));
    }
    (slo != shi).then_some(RealRoot::Isolated { lo: nlo, hi: nhi })
}

/// Refines neighbouring intervals until they are strictly separated.
fn separate(p: &IntPoly, roots: &mut [RealRoot]) {
    for i in 1..roots.len() {
        loop {
            let a = roots[i - 1].upper();
            let b = roots[i].lower();
            match a.cmp(&b) {
                Ordering::Less => break,
                Ordering::Equal if p.sign_at(&a) != Sign::Zero => break,
                _ => {
                    roots[i - 1] = bisect_once(p, &roots[i - 1]);
                    roots[i] = bisect_once(p, &roots[i]);
                }
            }
        }
    }
}

/// A rational strictly between two consecutive isolated roots.
pub(crate) fn separating_point(left: &RealRoot, right: &RealRoot) -> BigRational {
    let a = left.upper();
    let b = right.lower();
    if a == b {
        return a;
    }
    (a + b) * half()
}

/// Aberth–Ehrlich simultaneous iteration in double precision.
fn aberth(p: &RealPolynomial) -> Vec<Complex64> {
    let d = p.degree();
    let coeffs: Vec<f64> = p.coeffs().iter().map(rational_to_f64).collect();
    let dcoeffs: Vec<f64> = p.derivative().coeffs().iter().map(rational_to_f64).collect();
    let horner = |cs: &[f64], z: Complex64| cs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let radius = rational_to_f64(&cauchy_bound(p)) * 0.5;
    let mut zs: Vec<Complex64> = (0..d)
        .map(|j| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * j as f64 / d as f64))
        .collect();
    for _ in 0..1000 {
        let mut max_step: f64 = 0.0;
        for j in 0..d {
            let z = zs[j];
            let pz = horner(&coeffs, z);
            let dz = horner(&dcoeffs, z);
            if pz.norm() == 0.0 {
                continue;
            }
            let ratio = pz / dz;
            let sum: Complex64 = (0..d).filter(|&m| m != j).map(|m| (z - zs[m]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if step.is_finite() {
                zs[j] = z - step;
                max_step = max_step.max(step.norm() / (1.0 + z.norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    zs
}

/// Squared inclusion radius d²·|p(c)|²/|p'(c)|²: the disk around c with this
/// radius contains at least one root of p.
fn inclusion_radius_sqr(p: &RealPolynomial, dp: &RealPolynomial, c: &Gaussian) -> Option<BigRational> {
    let pv = p.eval_gaussian(c);
    let dv = dp.eval_gaussian(c);
    let dn = dv.norm_sqr();
    if dn.is_zero() {
        return None;
    }
    let d = BigRational::from_integer(BigInt::from(p.degree()));
    Some(&d * &d * pv.norm_sqr() / dn)
}

/// Exact test that two disks with squared radii r1, r2 are disjoint:
/// |c1 − c2| > r1 + r2.
fn disks_disjoint(c1: &Gaussian, r1: &BigRational, c2: &Gaussian, r2: &BigRational) -> bool {
    let dist = (c1 - c2).norm_sqr();
    let lhs = &dist - r1 - r2;
    if !lhs.is_positive() {
        return false;
    }
    &lhs * &lhs > BigRational::from_integer(4.into()) * r1 * r2
}

fn certify(p: &RealPolynomial, dp: &RealPolynomial, centers: &[Gaussian]) -> Option<Vec<ComplexRootBox>> {
    let mut boxes = Vec::with_capacity(centers.len());
    for c in centers {
        let r = inclusion_radius_sqr(p, dp, c)?;
        // disk must stay off the real axis
        if c.im.is_negative() || &c.im * &c.im <= r {
            return None;
        }
        boxes.push(ComplexRootBox {
            center: c.clone(),
            radius_sqr: r,
        });
    }
    for i in 0..boxes.len() {
        for j in (i + 1)..boxes.len() {
            if !disks_disjoint(&boxes[i].center, &boxes[i].radius_sqr, &boxes[j].center, &boxes[j].radius_sqr) {
                return None;
            }
        }
    }
    Some(boxes)
}

pub(crate) fn find_roots(p: &RealPolynomial, config: &RootConfig) -> Result<RootMultiset, PolyError> {
    p.require_square_free()?;
    let real_roots = isolate_real_roots(p, config);
    let n_complex = p.degree() - real_roots.len();
    debug_assert!(n_complex.is_multiple_of(2));
    if n_complex == 0 {
        return Ok(RootMultiset {
            real_roots,
            complex_pairs: Vec::new(),
        });
    }
    let mut approx = aberth(p);
    // Snap to the real axis exactly as many roots as Sturm certified real;
    // the rest are paired by conjugation through their upper representatives.
    approx.sort_by(|a, b| a.im.abs().total_cmp(&b.im.abs()));
    let mut uppers: Vec<Complex64> = approx[real_roots.len()..]
        .iter()
        .filter(|z| z.im > 0.0)
        .copied()
        .collect();
    if uppers.len() != n_complex / 2 {
        // Fall back to folding every non-real approximant into the upper half plane.
        let mut folded: Vec<Complex64> = approx[real_roots.len()..]
            .iter()
            .map(|z| Complex64::new(z.re, z.im.abs()))
            .collect();
        folded.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        folded.dedup_by(|a, b| (*a - *b).norm() < 1e-9 * (1.0 + a.norm()));
        uppers = folded;
    }
    uppers.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let dp = p.derivative();
    let mut centers: Vec<Gaussian> = uppers
        .iter()
        .map(|z| Gaussian::new(f64_to_rational(z.re), f64_to_rational(z.im)))
        .collect();
    for round in 0..=config.max_polish_rounds {
        if centers.len() == n_complex / 2 {
            if let Some(boxes) = certify(p, &dp, &centers) {
                return Ok(RootMultiset {
                    real_roots,
                    complex_pairs: boxes,
                });
            }
        }
        if round == config.max_polish_rounds {
            break;
        }
        // One exact Newton step per center, rounded to keep sizes bounded.
        let bits = 64 + 32 * round as u32;
        centers = centers
            .iter()
            .map(|c| {
                let pv = p.eval_gaussian(c);
                let dv = dp.eval_gaussian(c);
                match dv.inv() {
                    Some(inv) => {
                        let next = c - &(&pv * &inv);
                        Gaussian::new(round_dyadic(&next.re, bits), round_dyadic(&next.im, bits))
                    }
                    None => c.clone(),
                }
            })
            .collect();
    }
    Err(PolyError::CertificationFailed(config.max_polish_rounds))
}
