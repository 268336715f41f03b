#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use realbranes::klein::InvolutionKind;
use realbranes::realpoly::{Gaussian, ProjectivePoint, Sign};
use realbranes::spectral::{build_curve_from_roots, HyperellipticCurve, QuadDifferential};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn small_rational<R: Rng>(rng: &mut R, span: i64) -> BigRational {
    let d = rng.gen_range(1..=4);
    rat(rng.gen_range(-span * d..=span * d), d)
}

fn pair<R: Rng>(rng: &mut R, span: i64) -> [ProjectivePoint; 2] {
    let re = small_rational(rng, span);
    let mut im = small_rational(rng, span);
    if im == rat(0, 1) {
        im = rat(1, 3);
    }
    [
        ProjectivePoint::Finite(Gaussian::new(re.clone(), im.clone())),
        ProjectivePoint::Finite(Gaussian::new(re, -im)),
    ]
}

/// A random genus-g curve with rational real branch points and Gaussian
/// rational conjugate pairs.
pub fn random_curve<R: Rng>(g: usize, rng: &mut R) -> Arc<HyperellipticCurve> {
    loop {
        let k = rng.gen_range(0..=g + 1);
        let mut roots: Vec<ProjectivePoint> = (0..2 * k).map(|_| ProjectivePoint::real(small_rational(rng, 4))).collect();
        for _ in k..=g {
            roots.extend(pair(rng, 3));
        }
        let lead = rat(if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..4), rng.gen_range(1..3));
        if let Ok(c) = build_curve_from_roots(&roots, &lead) {
            return Arc::new(c);
        }
    }
}

/// A random real quadratic differential on a random genus-g curve, or
/// `None` when the draw put a zero on a branch point or repeated one.
pub fn random_q<R: Rng>(g: usize, rng: &mut R) -> Option<QuadDifferential> {
    let curve = random_curve(g, rng);
    let total = 2 * g - 2;
    let real = 2 * rng.gen_range(0..=total / 2);
    let mut zeros = Vec::with_capacity(total);
    for i in 0..real {
        if i == 0 && rng.gen_ratio(1, 6) {
            zeros.push(ProjectivePoint::Infinity);
        } else {
            zeros.push(ProjectivePoint::real(small_rational(rng, 5)));
        }
    }
    while zeros.len() < total {
        zeros.extend(pair(rng, 4));
    }
    let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
    let kind = if rng.gen_bool(0.5) { InvolutionKind::ConjF } else { InvolutionKind::ConjSigmaF };
    let q = QuadDifferential::new(curve, zeros, sign, kind).ok()?;
    q.check_simple_zeros().ok()?;
    Some(q)
}
