//! A numerical cross-check of n_S: walks each fixed circle of the real
//! structure, samples the real value of q along it, and lifts the pieces
//! where q ≥ 0 to circles of real η = ±√q on the spectral curve.
//!
//! Points of ℝP¹ are written [sin φ : cos φ], so z = tan φ and ∞ sits at
//! φ = π/2. In these coordinates q = s ∏ Lᵢ(φ) dφ² / P(φ), where P is p
//! made homogeneous and Lᵢ = sin φ − aᵢ cos φ (cos φ for a zero at ∞). An
//! oval over the arc [φ₀, φ₁] is traced as φ = c − h cos t, t ∈ [0, 2π),
//! which passes smoothly through both branch points; along it the real
//! part of q is Q(t) dt² with Q = s ∏ Lᵢ φ′² / P.

use std::f64::consts::PI;

use serde::Serialize;

use crate::klein::UnionFind;
use crate::realpoly::{rational_to_f64, ProjectivePoint, Sign};
use crate::spectral::{check_reality, HyperellipticCurve, Oval, OvalShape, QuadDifferential, SpectralError};

/// Zero-proximity threshold, in φ.
pub const ZERO_TOLERANCE: f64 = 1e-9;
const MIN_SAMPLES: usize = 64;
const MAX_SAMPLES: usize = 1 << 18;
const RETRY_OFFSETS: [f64; 5] = [0.5, 0.381_966, 0.618_034, 0.236_068, 0.763_932];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MonodromyError {
    #[error("sampling oval {oval} kept landing on zeros of q or did not stabilize after {attempts} attempts")]
    SampleDegeneracy { oval: usize, attempts: usize },
    #[error("oval {0} is not a fixed circle of this curve")]
    UnknownOval(usize),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Which loop a trace follows.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LoopShape {
    /// φ = c − h cos t over one turn of t.
    Arc { phi_start: f64, phi_end: f64 },
    /// φ = t over [0, length); `length` is π for one of two sheets and 2π
    /// for a single circle covering ℝP¹ twice.
    WholeLine { length: f64 },
}

/// A maximal piece of the loop on which Q has constant sign.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Segment {
    pub t_start: f64,
    pub t_end: f64,
    pub sign: Sign,
}

/// A simple zero of Q on the loop.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Crossing {
    pub t: f64,
    pub phi: f64,
    /// tan φ, or `None` at ∞.
    pub z: Option<f64>,
}

/// How the two real lifts ±√Q of a positive segment are glued.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "at", rename_all = "snake_case")]
pub enum Gluing {
    /// Both lifts run into η = 0 at a zero of q and join there.
    Zero { segment: usize, crossing: usize },
    /// The segment is the whole loop; each lift closes up on itself.
    Seam { segment: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OvalTrace {
    pub oval: usize,
    pub shape: LoopShape,
    pub samples: usize,
    pub crossings: Vec<Crossing>,
    pub segments: Vec<Segment>,
    pub gluings: Vec<Gluing>,
    pub fixed_circles: usize,
}

/// Real and complex zeros of q, in the form needed to evaluate Q.
struct Evaluator {
    sign: f64,
    real_zero_phis: Vec<f64>,
    finite_real: Vec<f64>,
    at_infinity: usize,
    complex: Vec<(f64, f64)>,
    lead: f64,
    real_roots: Vec<f64>,
    complex_roots: Vec<(f64, f64)>,
}

impl Evaluator {
    fn new(q: &QuadDifferential) -> Self {
        let mut finite_real = Vec::new();
        let mut complex = Vec::new();
        let mut at_infinity = 0;
        for a in q.zeros() {
            match a {
                ProjectivePoint::Infinity => at_infinity += 1,
                ProjectivePoint::Finite(w) if w.is_real() => finite_real.push(rational_to_f64(&w.re)),
                ProjectivePoint::Finite(w) => complex.push((rational_to_f64(&w.re), rational_to_f64(&w.im))),
            }
        }
        let mut real_zero_phis: Vec<f64> = finite_real.iter().map(|a| a.atan()).collect();
        real_zero_phis.extend(std::iter::repeat_n(PI / 2.0, at_infinity));
        let curve = q.curve();
        Evaluator {
            sign: f64::from(q.sign().as_i8()),
            real_zero_phis,
            finite_real,
            at_infinity,
            complex,
            lead: f64::from(curve.lead_sign().as_i8()),
            real_roots: root_positions(curve),
            complex_roots: curve.roots().complex_pairs.iter().map(|b| b.approx()).collect(),
        }
    }

    /// P(sin φ, cos φ) in factored form, so it vanishes exactly at the
    /// approximate roots used as oval endpoints.
    fn p_h(&self, phi: f64) -> f64 {
        let (s, c) = phi.sin_cos();
        let mut v = self.lead;
        for r in &self.real_roots {
            v *= s - r * c;
        }
        for (re, im) in &self.complex_roots {
            let x = s - re * c;
            let y = im * c;
            v *= x * x + y * y;
        }
        v
    }

    /// ∏ Lᵢ(φ); conjugate zeros pair up into |L|².
    fn zero_product(&self, phi: f64) -> f64 {
        let (s, c) = phi.sin_cos();
        let mut v = self.sign * c.powi(self.at_infinity as i32);
        for a in &self.finite_real {
            v *= s - a * c;
        }
        for (re, im) in &self.complex {
            let x = s - re * c;
            let y = im * c;
            v *= (x * x + y * y).sqrt();
        }
        v
    }

    fn q(&self, phi: f64, dphi: f64) -> f64 {
        self.zero_product(phi) * dphi * dphi / self.p_h(phi)
    }

    fn near_zero(&self, phi: f64) -> bool {
        self.real_zero_phis.iter().any(|a| (phi - a).sin().abs() < ZERO_TOLERANCE)
    }
}

fn root_positions(curve: &HyperellipticCurve) -> Vec<f64> {
    curve.sign_profile().roots.iter().map(|r| r.midpoint_f64()).collect()
}

#[derive(Clone, Copy)]
struct Loop {
    shape: LoopShape,
}

impl Loop {
    fn length(&self) -> f64 {
        match self.shape {
            LoopShape::Arc { .. } => 2.0 * PI,
            LoopShape::WholeLine { length } => length,
        }
    }

    /// (φ, dφ/dt) at parameter t.
    fn point(&self, t: f64) -> (f64, f64) {
        match self.shape {
            LoopShape::Arc { phi_start, phi_end } => {
                let c = 0.5 * (phi_start + phi_end);
                let h = 0.5 * (phi_end - phi_start);
                (c - h * t.cos(), h * t.sin())
            }
            LoopShape::WholeLine { .. } => (t, 1.0),
        }
    }
}

fn sign_of(v: f64) -> Sign {
    if v > 0.0 {
        Sign::Positive
    } else if v < 0.0 {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

/// Signs of Q at n evenly spaced samples offset by `offset` spacings, or
/// `None` if a sample lands on or next to a zero.
fn sample(ev: &Evaluator, lp: Loop, n: usize, offset: f64) -> Option<Vec<Sign>> {
    let step = lp.length() / n as f64;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let t = (k as f64 + offset) * step;
        let (phi, dphi) = lp.point(t);
        if ev.near_zero(phi) {
            return None;
        }
        let v = ev.q(phi, dphi);
        if !v.is_finite() || v == 0.0 {
            return None;
        }
        out.push(sign_of(v));
    }
    Some(out)
}

fn sign_changes(signs: &[Sign]) -> usize {
    (0..signs.len()).filter(|&i| signs[i] != signs[(i + 1) % signs.len()]).count()
}

/// Starting density: at least four samples between any two zeros of q,
/// so that nearby zeros are not skipped in pairs.
fn initial_samples(ev: &Evaluator, lp: Loop) -> usize {
    let mut phis: Vec<f64> = ev.real_zero_phis.iter().map(|p| p.rem_euclid(PI)).collect();
    phis.sort_by(f64::total_cmp);
    let min_gap = (0..phis.len())
        .map(|i| {
            let next = if i + 1 < phis.len() { phis[i + 1] } else { phis[0] + PI };
            next - phis[i]
        })
        .fold(PI, f64::min);
    // |dφ/dt| is at most h on an arc and 1 on the whole line
    let speed = match lp.shape {
        LoopShape::Arc { phi_start, phi_end } => 0.5 * (phi_end - phi_start),
        LoopShape::WholeLine { .. } => 1.0,
    };
    let needed = (4.0 * lp.length() * speed / min_gap.max(f64::MIN_POSITIVE)).ceil();
    // leave room for the two confirming refinements
    let cap = MAX_SAMPLES / 4;
    if needed >= cap as f64 {
        cap
    } else {
        (needed as usize).next_power_of_two().clamp(MIN_SAMPLES, cap)
    }
}

/// Samples with doubling density until the number of sign changes agrees
/// across two successive refinements.
fn stable_samples(ev: &Evaluator, lp: Loop, oval: usize) -> Result<(Vec<Sign>, f64), MonodromyError> {
    let mut attempts = 0;
    let start = initial_samples(ev, lp);
    for &offset in &RETRY_OFFSETS {
        let mut history: Vec<usize> = Vec::new();
        let mut n = start;
        while n <= MAX_SAMPLES {
            attempts += 1;
            let Some(signs) = sample(ev, lp, n, offset) else {
                break;
            };
            history.push(sign_changes(&signs));
            if history.len() >= 3 && history[history.len() - 3..].iter().all(|&c| c == history[history.len() - 1]) {
                return Ok((signs, offset));
            }
            n *= 2;
        }
    }
    Err(MonodromyError::SampleDegeneracy { oval, attempts })
}

/// Locates the zero of Q between two samples of opposite sign by bisection.
fn refine_crossing(ev: &Evaluator, lp: Loop, mut lo: f64, mut hi: f64) -> Crossing {
    let q_at = |t: f64| {
        let (phi, dphi) = lp.point(t);
        ev.q(phi, dphi)
    };
    let s_lo = sign_of(q_at(lo));
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if sign_of(q_at(mid)) == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    let (phi, _) = lp.point(t);
    let c = phi.cos();
    Crossing {
        t: t.rem_euclid(lp.length()),
        phi,
        z: (c.abs() > 1e-12).then(|| phi.tan()),
    }
}

fn trace_loop(ev: &Evaluator, lp: Loop, oval: usize) -> Result<OvalTrace, MonodromyError> {
    let (signs, offset) = stable_samples(ev, lp, oval)?;
    let n = signs.len();
    let step = lp.length() / n as f64;
    let t_of = |k: usize| (k as f64 + offset) * step;

    let change_at: Vec<usize> = (0..n).filter(|&i| signs[i] != signs[(i + 1) % n]).collect();
    let crossings: Vec<Crossing> = change_at
        .iter()
        .map(|&i| refine_crossing(ev, lp, t_of(i), t_of(i + 1)))
        .collect();

    let mut segments = Vec::new();
    let mut gluings = Vec::new();
    let mut uf;
    if crossings.is_empty() {
        segments.push(Segment {
            t_start: 0.0,
            t_end: lp.length(),
            sign: signs[0],
        });
        // nodes 0, 1: the lifts +√Q and −√Q
        uf = UnionFind::new(2);
        if signs[0] == Sign::Positive {
            gluings.push(Gluing::Seam { segment: 0 });
        }
    } else {
        // segment j runs from crossing j to crossing j + 1 (cyclically)
        let m = crossings.len();
        uf = UnionFind::new(2 * m);
        for j in 0..m {
            let sign = signs[(change_at[j] + 1) % n];
            segments.push(Segment {
                t_start: crossings[j].t,
                t_end: crossings[(j + 1) % m].t,
                sign,
            });
            if sign == Sign::Positive {
                for crossing in [j, (j + 1) % m] {
                    gluings.push(Gluing::Zero { segment: j, crossing });
                    uf.union(2 * j, 2 * j + 1);
                }
            }
        }
    }
    let positive: Vec<usize> = segments
        .iter()
        .enumerate()
        .filter(|(_, s)| s.sign == Sign::Positive)
        .map(|(j, _)| j)
        .collect();
    let mut roots: Vec<usize> = positive
        .iter()
        .flat_map(|&j| [uf.find(2 * j), uf.find(2 * j + 1)])
        .collect();
    roots.sort_unstable();
    roots.dedup();

    Ok(OvalTrace {
        oval,
        shape: lp.shape,
        samples: n,
        crossings,
        segments,
        gluings,
        fixed_circles: roots.len(),
    })
}

/// The loop traced over an oval the curve reports.
fn loop_for(curve: &HyperellipticCurve, oval: &Oval) -> Loop {
    let roots = root_positions(curve);
    let shape = match oval.shape {
        OvalShape::Interval { left, right, through_infinity } => {
            let phi_start = roots[left].atan();
            let mut phi_end = roots[right].atan();
            if through_infinity || phi_end <= phi_start {
                phi_end += PI;
            }
            LoopShape::Arc { phi_start, phi_end }
        }
        OvalShape::DoubleCover => LoopShape::WholeLine { length: 2.0 * PI },
        OvalShape::Sheet { .. } => LoopShape::WholeLine { length: PI },
    };
    Loop { shape }
}

fn check_preconditions(q: &QuadDifferential) -> Result<(), MonodromyError> {
    if !check_reality(q) {
        return Err(SpectralError::RealityViolation("zero set is not invariant".into()).into());
    }
    q.check_simple_zeros()?;
    Ok(())
}

/// Trace of one oval of the curve, as listed by `fixed_ovals(q.kind())`.
pub fn trace_oval(q: &QuadDifferential, oval: &Oval) -> Result<OvalTrace, MonodromyError> {
    check_preconditions(q)?;
    if !q.curve().fixed_ovals(q.kind()).contains(oval) {
        return Err(MonodromyError::UnknownOval(oval.index));
    }
    let ev = Evaluator::new(q);
    trace_loop(&ev, loop_for(q.curve(), oval), oval.index)
}

/// Number of fixed circles of the lifted involution lying over `oval`.
pub fn track_fixed_circles(q: &QuadDifferential, oval: &Oval) -> Result<usize, MonodromyError> {
    Ok(trace_oval(q, oval)?.fixed_circles)
}

/// The fixed circles of the real structure found from scratch: arcs of ℝP¹
/// between consecutive branch points on which εP > 0, or all of ℝP¹ when
/// there is no real branch point and εP > 0 everywhere.
///
/// In the last case the circle over ℝP¹ is found by continuing w = √(εP)
/// once around φ ∈ [0, π]: the end point [−Z : w] equals [Z : (−1)^(g+1) w]
/// in weighted coordinates, so the lift closes after one turn (two sheets)
/// exactly when g is odd, and otherwise needs two turns (one circle).
fn own_loops(q: &QuadDifferential) -> Vec<Loop> {
    let Some(eps) = q.kind().fixed_sign() else {
        return Vec::new();
    };
    let eps = f64::from(eps.as_i8());
    let ev = Evaluator::new(q);
    let mut phis: Vec<f64> = ev.real_roots.iter().map(|r| r.atan()).collect();
    phis.sort_by(f64::total_cmp);
    if phis.is_empty() {
        if eps * ev.p_h(0.0) <= 0.0 {
            return Vec::new();
        }
        let w_start = (eps * ev.p_h(0.0)).sqrt();
        let w_end = (eps * ev.p_h(PI)).sqrt();
        let weight_sign = if (q.curve().genus() + 1).is_multiple_of(2) { 1.0 } else { -1.0 };
        let closes = (w_end - weight_sign * w_start).abs() < 1e-9 * w_start.max(1.0);
        return if closes {
            vec![Loop { shape: LoopShape::WholeLine { length: PI } }; 2]
        } else {
            vec![Loop { shape: LoopShape::WholeLine { length: 2.0 * PI } }]
        };
    }
    let m = phis.len();
    (0..m)
        .filter_map(|i| {
            let start = phis[i];
            let end = if i + 1 < m { phis[i + 1] } else { phis[0] + PI };
            (eps * ev.p_h(0.5 * (start + end)) > 0.0).then_some(Loop {
                shape: LoopShape::Arc {
                    phi_start: start,
                    phi_end: end,
                },
            })
        })
        .collect()
}

/// Traces of every fixed circle, found independently of the curve's own
/// oval list.
pub fn traces(q: &QuadDifferential) -> Result<Vec<OvalTrace>, MonodromyError> {
    check_preconditions(q)?;
    let ev = Evaluator::new(q);
    own_loops(q)
        .into_iter()
        .enumerate()
        .map(|(i, lp)| trace_loop(&ev, lp, i))
        .collect()
}

/// n_S as the total number of lifted fixed circles over all ovals.
#[allow(non_snake_case)]
pub fn count_nS_oracle(q: &QuadDifferential) -> Result<usize, MonodromyError> {
    Ok(traces(q)?.iter().map(|t| t.fixed_circles).sum())
}

/// Whether the involution kind has fixed circles at all.
pub fn has_fixed_circles(q: &QuadDifferential) -> bool {
    !own_loops(q).is_empty()
}
