//! An exact GF(2) model of H₁(Σ′, ℤ₂), where Σ′ is the curve with the 4g − 4
//! zeros of q removed, together with the action θ = f_* + 1 of the real
//! structure and the class ω of the spectral double cover. The SL(2) count
//! is the dimension of the θ-invariant part of ker ω, shifted by 3g − 3.
//!
//! Generators come in groups depending on how the real structure f acts on
//! a standard handle decomposition:
//! * s swapped handle pairs (Aᵢ, Bᵢ) ↔ (A′ᵢ, B′ᵢ),
//! * r fixed ovals A″ⱼ with dual cycles B″ⱼ,
//! * in the odd case, one extra handle (X, Y) on which f acts as a twist,
//! * loops Cₖ, C′ₖ around the t pairs of zeros swapped by f,
//! * loops D_l around the u zeros lying on fixed ovals.
//!
//! The puncture loops satisfy the single relation Σ Cₖ + Σ C′ₖ + Σ D_l = 0.

mod gf2;

pub use gf2::GF2Matrix;

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::klein;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("invalid case parameters: {0}")]
    InvalidCaseParams(String),
    #[error("oval {oval} carries {count} zeros; each oval must carry an even number")]
    OddOvalAssignment { oval: usize, count: usize },
    #[error("no zero of q is fixed by the real structure (u = 0)")]
    NoFixedBranchPoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProofCase {
    /// a = 0: g = 2s + r, n = r + 1.
    Case1,
    /// a = 1, g − n even: g = 2s + r, n = r.
    Case2,
    /// a = 1, g − n odd: g = 2s + r + 1, n = r.
    Case3,
}

impl fmt::Display for ProofCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProofCase::Case1 => "Case1",
            ProofCase::Case2 => "Case2",
            ProofCase::Case3 => "Case3",
        })
    }
}

/// How θ acts on the extra handle (X, Y) in the odd case.
///
/// Taken literally, the rules θ(B″ⱼ) = Y, θ(X) = 0, θ(Y) = Σ A″ⱼ give
/// θ²(B″ⱼ) = Σ A″ⱼ ≠ 0, which cannot come from an involution. `Involutive`
/// uses θ(B″ⱼ) = X, θ(X) = 0, θ(Y) = Σ A″ⱼ + Σ Cₖ instead, for which θ² = 0
/// modulo the relation and ω is θ-invariant. Both give the same kernel
/// dimension.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThetaConvention {
    #[default]
    Involutive,
    AsPrinted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CaseParams {
    pub g: usize,
    pub n: usize,
    pub a: u8,
    pub s: usize,
    pub r: usize,
    pub t: usize,
    pub u: usize,
}

impl CaseParams {
    pub fn case(&self) -> ProofCase {
        match (self.a, (self.g + self.n) % 2) {
            (0, _) => ProofCase::Case1,
            (_, 0) => ProofCase::Case2,
            _ => ProofCase::Case3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainPresentation {
    pub params: CaseParams,
    pub case: ProofCase,
    pub convention: ThetaConvention,
    pub generators: Vec<String>,
    /// Oval index of each fixed zero D_l.
    pub oval_assignment: Vec<usize>,
    /// Column j is θ of generator j.
    theta: GF2Matrix,
    /// The relation as a column vector.
    relation: GF2Matrix,
    /// ω as a row vector.
    omega: GF2Matrix,
}

/// Positions of each generator family in the generator list.
struct Layout {
    a: usize,
    b: usize,
    a1: usize,
    b1: usize,
    a2: usize,
    b2: usize,
    x: usize,
    y: usize,
    c: usize,
    c1: usize,
    d: usize,
    total: usize,
}

impl Layout {
    fn new(p: &CaseParams, odd: bool) -> Self {
        let a = 0;
        let b = a + p.s;
        let a1 = b + p.s;
        let b1 = a1 + p.s;
        let a2 = b1 + p.s;
        let b2 = a2 + p.r;
        let x = b2 + p.r;
        let y = x + 1;
        let c = if odd { x + 2 } else { x };
        let c1 = c + p.t;
        let d = c1 + p.t;
        Layout {
            a,
            b,
            a1,
            b1,
            a2,
            b2,
            x,
            y,
            c,
            c1,
            d,
            total: d + p.u,
        }
    }

    fn names(&self, p: &CaseParams, odd: bool) -> Vec<String> {
        let mut out = Vec::with_capacity(self.total);
        let family = |out: &mut Vec<String>, prefix: &str, count: usize| {
            out.extend((1..=count).map(|i| format!("{prefix}{i}")));
        };
        family(&mut out, "A", p.s);
        family(&mut out, "B", p.s);
        family(&mut out, "A'", p.s);
        family(&mut out, "B'", p.s);
        family(&mut out, "A''", p.r);
        family(&mut out, "B''", p.r);
        if odd {
            out.push("X".into());
            out.push("Y".into());
        }
        family(&mut out, "C", p.t);
        family(&mut out, "C'", p.t);
        family(&mut out, "D", p.u);
        out
    }
}

/// Checks the parameters and splits g into swapped handles s and fixed
/// ovals r carrying a dual cycle.
pub fn case_params(g: usize, n: usize, a: u8, t: usize, u: usize) -> Result<CaseParams, HomologyError> {
    let invalid = |m: String| Err(HomologyError::InvalidCaseParams(m));
    if g < 2 {
        return invalid(format!("genus {g} < 2"));
    }
    if !klein::validate_invariants(g, n, a) {
        return invalid(format!("(n, a) = ({n}, {a}) is not a real structure in genus {g}"));
    }
    if 2 * t + u != 4 * g - 4 {
        return invalid(format!("2t + u = {} but q has 4g - 4 = {} zeros", 2 * t + u, 4 * g - 4));
    }
    if n == 0 && u > 0 {
        return invalid("fixed zeros need a fixed oval to lie on".into());
    }
    let (s, r) = match (a, (g + n) % 2) {
        (0, _) => ((g + 1 - n) / 2, n - 1),
        (_, 0) => ((g - n) / 2, n),
        _ => ((g - n - 1) / 2, n),
    };
    Ok(CaseParams { g, n, a, s, r, t, u })
}

/// Builds the presentation with the default θ convention. `oval_assignment`
/// gives, for each of the u fixed zeros, the index of the oval it lies on.
pub fn build_presentation(
    g: usize,
    n: usize,
    a: u8,
    t: usize,
    u: usize,
    oval_assignment: &[usize],
) -> Result<ChainPresentation, HomologyError> {
    build_presentation_with(g, n, a, t, u, oval_assignment, ThetaConvention::default())
}

pub fn build_presentation_with(
    g: usize,
    n: usize,
    a: u8,
    t: usize,
    u: usize,
    oval_assignment: &[usize],
    convention: ThetaConvention,
) -> Result<ChainPresentation, HomologyError> {
    let p = case_params(g, n, a, t, u)?;
    if oval_assignment.len() != u {
        return Err(HomologyError::InvalidCaseParams(format!(
            "{} oval assignments for u = {u} fixed zeros",
            oval_assignment.len()
        )));
    }
    if let Some(&bad) = oval_assignment.iter().find(|&&j| j >= n) {
        return Err(HomologyError::InvalidCaseParams(format!("oval index {bad} out of range for n = {n}")));
    }
    let counts = zero_counts(n, oval_assignment);
    if let Some((oval, &count)) = counts.iter().enumerate().find(|(_, c)| *c % 2 == 1) {
        return Err(HomologyError::OddOvalAssignment { oval, count });
    }

    let case = p.case();
    let odd = case == ProofCase::Case3;
    let l = Layout::new(&p, odd);
    let dim = l.total;
    let mut theta = GF2Matrix::zeros(dim, dim);
    // θ(col) gets `row` added
    let mut add = |col: usize, row: usize| theta.flip(row, col);

    for i in 0..p.s {
        for (x, y) in [(l.a + i, l.a1 + i), (l.b + i, l.b1 + i)] {
            for col in [x, y] {
                add(col, x);
                add(col, y);
            }
        }
    }
    for k in 0..p.t {
        for col in [l.c + k, l.c1 + k] {
            add(col, l.c + k);
            add(col, l.c1 + k);
        }
    }
    for (h, &j) in oval_assignment.iter().enumerate() {
        if j < p.r {
            add(l.a2 + j, l.d + h);
        }
    }
    let sum_a2: Vec<usize> = (0..p.r).map(|j| l.a2 + j).collect();
    let sum_c: Vec<usize> = (0..p.t).map(|k| l.c + k).collect();
    match case {
        ProofCase::Case1 => {}
        ProofCase::Case2 => {
            for j in 0..p.r {
                for &row in sum_a2.iter().chain(&sum_c) {
                    add(l.b2 + j, row);
                }
            }
        }
        ProofCase::Case3 => {
            let (target, y_image) = match convention {
                ThetaConvention::Involutive => (l.x, sum_a2.iter().chain(&sum_c).copied().collect()),
                ThetaConvention::AsPrinted => (l.y, sum_a2.clone()),
            };
            for j in 0..p.r {
                add(l.b2 + j, target);
            }
            for row in y_image {
                add(l.y, row);
            }
        }
    }

    let mut relation = GF2Matrix::zeros(dim, 1);
    let mut omega = GF2Matrix::zeros(1, dim);
    for i in l.c..dim {
        relation.set(i, 0, true);
        omega.set(0, i, true);
    }
    // the spectral cover is nontrivial along an oval exactly when the oval
    // carries 2k zeros with k odd
    for j in 0..p.r {
        omega.set(0, l.a2 + j, (counts[j] / 2) % 2 == 1);
    }

    Ok(ChainPresentation {
        params: p,
        case,
        convention,
        generators: l.names(&p, odd),
        oval_assignment: oval_assignment.to_vec(),
        theta,
        relation,
        omega,
    })
}

/// Builds a presentation from per-oval zero counts, assigning the fixed
/// zeros to ovals in order.
pub fn build_from_counts(
    g: usize,
    n: usize,
    a: u8,
    oval_zero_counts: &[usize],
) -> Result<ChainPresentation, HomologyError> {
    if oval_zero_counts.len() != n {
        return Err(HomologyError::InvalidCaseParams(format!(
            "{} zero counts for n = {n} ovals",
            oval_zero_counts.len()
        )));
    }
    let assignment = assignment_from_counts(oval_zero_counts);
    let u = assignment.len();
    if u > 4 * g - 4 || (4 * g - 4 - u) % 2 == 1 {
        return Err(HomologyError::InvalidCaseParams(format!("u = {u} does not fit 4g - 4 = {}", 4 * g - 4)));
    }
    build_presentation(g, n, a, (4 * g - 4 - u) / 2, u, &assignment)
}

pub fn assignment_from_counts(counts: &[usize]) -> Vec<usize> {
    counts
        .iter()
        .enumerate()
        .flat_map(|(j, &c)| std::iter::repeat_n(j, c))
        .collect()
}

fn zero_counts(n: usize, assignment: &[usize]) -> Vec<usize> {
    let mut counts = vec![0; n];
    for &j in assignment {
        counts[j] += 1;
    }
    counts
}

impl ChainPresentation {
    /// Dimension of H₁(Σ′, ℤ₂): generators minus the one relation.
    pub fn dim(&self) -> usize {
        self.generators.len() - 1
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn theta(&self) -> &GF2Matrix {
        &self.theta
    }

    pub fn relation(&self) -> &GF2Matrix {
        &self.relation
    }

    pub fn omega(&self) -> &GF2Matrix {
        &self.omega
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn oval_zero_counts(&self) -> Vec<usize> {
        zero_counts(self.params.n, &self.oval_assignment)
    }

    /// Ovals carrying no fixed zero.
    pub fn n_zero(&self) -> usize {
        self.oval_zero_counts().iter().filter(|&&c| c == 0).count()
    }

    /// Whether θ² vanishes on the quotient by the relation.
    pub fn theta_squares_to_zero(&self) -> bool {
        let sq = self.theta.mul(&self.theta);
        (0..sq.cols()).all(|j| in_relation_span(&sq.column(j), &self.relation))
    }

    /// Whether ω∘θ = 0, i.e. ω is invariant under the real structure.
    pub fn omega_is_invariant(&self) -> bool {
        self.omega.mul(&self.theta).is_zero()
    }

    /// Whether θ and ω descend to the quotient by the relation.
    pub fn descends_to_quotient(&self) -> bool {
        in_relation_span(&self.theta.mul(&self.relation), &self.relation)
            && self.omega.mul(&self.relation).is_zero()
    }

    /// The same presentation in a new basis: vectors transform by `p`,
    /// so θ ↦ pθp⁻¹, R ↦ pR and ω ↦ ωp⁻¹.
    pub fn change_basis(&self, p: &GF2Matrix, p_inv: &GF2Matrix) -> Self {
        let mut out = self.clone();
        out.theta = p.mul(&self.theta).mul(p_inv);
        out.relation = p.mul(&self.relation);
        out.omega = self.omega.mul(p_inv);
        out.generators = (0..self.generators.len()).map(|i| format!("e{}", i + 1)).collect();
        out
    }
}

fn in_relation_span(v: &GF2Matrix, relation: &GF2Matrix) -> bool {
    v.is_zero() || v == relation
}

/// Dimension of ker θ on the quotient by the relation.
///
/// x̄ ∈ ker θ̄ iff θx + λR = 0 for some λ, and the map (x, λ) ↦ x is
/// injective on such solutions since R ≠ 0. R itself lies in the solution
/// space and is zero in the quotient, hence the − 1.
pub fn theta_kernel_dim(pres: &ChainPresentation) -> usize {
    pres.theta.hstack(&pres.relation).nullity() - 1
}

/// Dimension of {x̄ : θx̄ = 0, ω(x̄) = 0} in the quotient.
pub fn invariant_kernel_dim(pres: &ChainPresentation) -> usize {
    let top = pres.theta.hstack(&pres.relation);
    let bottom = pres.omega.hstack(&GF2Matrix::zeros(1, 1));
    top.vstack(&bottom).nullity() - 1
}

/// The exponent d in the 2^d components of the real SL(2) fibre.
pub fn sl2_exponent(pres: &ChainPresentation) -> Result<i64, HomologyError> {
    if pres.params.u == 0 {
        return Err(HomologyError::NoFixedBranchPoint);
    }
    Ok(invariant_kernel_dim(pres) as i64 - (3 * pres.params.g as i64 - 3))
}

/// dim H¹(S, ℤ₂)^σ = dim H¹(Σ′, ℤ₂) − 1 = 6g − 6.
pub fn sigma_invariants_dim(g: usize) -> usize {
    assert!(g >= 2, "genus must be at least 2");
    6 * g - 6
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul(u128::from(n - i)) / u128::from(i + 1)
    })
}

/// Even oval assignments of u fixed zeros to n ovals, as maps from zeros to
/// ovals. All distributions of zero counts are produced when there are at
/// most `cap` of them; otherwise `cap` distinct ones are drawn at random.
/// Zero labels are shuffled so the map is not sorted by oval.
pub fn even_assignments<R: Rng>(n: usize, u: usize, cap: usize, rng: &mut R) -> Vec<Vec<usize>> {
    if u % 2 == 1 || (n == 0 && u > 0) {
        return Vec::new();
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    let pairs = u / 2;
    let total = binomial((pairs + n - 1) as u64, (n - 1) as u64);
    let compositions: Vec<Vec<usize>> = if total <= cap as u128 {
        let mut all = Vec::new();
        let mut current = vec![0; n];
        compositions(pairs, 0, &mut current, &mut all);
        all
    } else {
        let mut seen = HashSet::new();
        let mut picked = Vec::new();
        while picked.len() < cap {
            let c = random_composition(pairs, n, rng);
            if seen.insert(c.clone()) {
                picked.push(c);
            }
        }
        picked
    };
    compositions
        .into_iter()
        .map(|c| {
            let counts: Vec<usize> = c.iter().map(|k| 2 * k).collect();
            let mut a = assignment_from_counts(&counts);
            a.shuffle(rng);
            a
        })
        .collect()
}

fn compositions(left: usize, idx: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if idx + 1 == current.len() {
        current[idx] = left;
        out.push(current.clone());
        return;
    }
    for k in 0..=left {
        current[idx] = k;
        compositions(left - k, idx + 1, current, out);
    }
}

/// Uniform over compositions of `total` into `parts` parts (stars and bars).
fn random_composition<R: Rng>(total: usize, parts: usize, rng: &mut R) -> Vec<usize> {
    let slots = total + parts - 1;
    let bars = rand::seq::index::sample(rng, slots, parts - 1);
    let mut bars: Vec<usize> = bars.into_iter().collect();
    bars.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for (i, b) in bars.iter().enumerate() {
        // stars between consecutive bars
        out.push(b - prev - usize::from(i > 0));
        prev = *b;
    }
    out.push(slots - prev - usize::from(parts > 1));
    out
}

impl Serialize for ChainPresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let bits = |m: &GF2Matrix| -> Vec<String> {
            m.to_bit_rows().lines().map(str::to_string).collect()
        };
        let mut st = serializer.serialize_struct("ChainPresentation", 9)?;
        st.serialize_field("case", &self.case)?;
        st.serialize_field("convention", &self.convention)?;
        st.serialize_field("params", &self.params)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("generators", &self.generators)?;
        st.serialize_field("oval_assignment", &self.oval_assignment)?;
        st.serialize_field("theta", &bits(&self.theta))?;
        st.serialize_field("relation", &bits(&self.relation.transpose()).concat())?;
        st.serialize_field("omega", &bits(&self.omega).concat())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn documented_presentations() {
        let p = build_presentation(2, 3, 0, 0, 4, &[0, 0, 1, 1]).unwrap();
        assert_eq!((p.case, p.dim(), p.n_zero()), (ProofCase::Case1, 7, 1));
        assert_eq!(theta_kernel_dim(&p), 6);
        assert_eq!(sl2_exponent(&p), Ok(2));

        let p = build_presentation(2, 2, 1, 1, 2, &[0, 0]).unwrap();
        assert_eq!((p.case, p.dim()), (ProofCase::Case2, 7));
        assert_eq!(theta_kernel_dim(&p), 5);

        let p = build_presentation(3, 2, 1, 3, 2, &[1, 1]).unwrap();
        assert_eq!((p.case, p.dim()), (ProofCase::Case3, 13));
        assert_eq!(theta_kernel_dim(&p), 8);
        assert_eq!(sl2_exponent(&p), Ok(1));
    }

    #[test]
    fn generator_layout() {
        let p = build_presentation(3, 2, 1, 3, 2, &[0, 0]).unwrap();
        assert_eq!(p.params.s, 0);
        assert_eq!(p.params.r, 2);
        assert_eq!(
            p.generators,
            ["A''1", "A''2", "B''1", "B''2", "X", "Y", "C1", "C2", "C3", "C'1", "C'2", "C'3", "D1", "D2"]
        );
        let p = build_presentation(4, 1, 0, 6, 0, &[]).unwrap();
        assert_eq!((p.params.s, p.params.r), (2, 0));
        assert_eq!(p.generator_count(), 6 * 4 - 4);
    }

    #[test]
    fn validation() {
        assert!(matches!(
            build_presentation(2, 3, 0, 1, 4, &[0, 0, 1, 1]),
            Err(HomologyError::InvalidCaseParams(_))
        ));
        assert!(matches!(
            build_presentation(2, 2, 0, 0, 4, &[0, 0, 1, 1]),
            Err(HomologyError::InvalidCaseParams(_))
        ));
        assert_eq!(
            build_presentation(2, 3, 0, 0, 4, &[0, 1, 1, 1]),
            Err(HomologyError::OddOvalAssignment { oval: 0, count: 1 })
        );
        assert!(matches!(
            build_presentation(2, 3, 0, 0, 4, &[0, 0, 3, 3]),
            Err(HomologyError::InvalidCaseParams(_))
        ));
        let p = build_presentation(2, 1, 1, 2, 0, &[]).unwrap();
        assert_eq!(sl2_exponent(&p), Err(HomologyError::NoFixedBranchPoint));
    }

    #[test]
    fn sigma_dims() {
        assert_eq!(sigma_invariants_dim(2), 6);
        assert_eq!(sigma_invariants_dim(3), 12);
        for g in 2..50 {
            assert!(sigma_invariants_dim(g) < 2 * (4 * g - 3));
        }
    }

    #[test]
    fn printed_rules_are_not_involutive() {
        let printed = build_presentation_with(3, 2, 1, 3, 2, &[0, 0], ThetaConvention::AsPrinted).unwrap();
        assert!(!printed.theta_squares_to_zero());
        assert_eq!(theta_kernel_dim(&printed), 8);
        let fixed = build_presentation(3, 2, 1, 3, 2, &[0, 0]).unwrap();
        assert!(fixed.theta_squares_to_zero());
        assert!(fixed.omega_is_invariant());
    }

    #[test]
    fn structural_checks_over_small_genera() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for g in 2..=4usize {
            for (n, a) in klein::admissible_pairs(g) {
                for u in (0..=4 * g - 4).step_by(2) {
                    let t = (4 * g - 4 - u) / 2;
                    for asg in even_assignments(n, u, 20, &mut rng) {
                        let p = build_presentation(g, n, a, t, u, &asg).unwrap();
                        assert_eq!(p.dim(), 6 * g - 5);
                        assert!(p.theta_squares_to_zero(), "{p:?}");
                        assert!(p.omega_is_invariant(), "{p:?}");
                        assert!(p.descends_to_quotient());
                    }
                }
            }
        }
    }

    #[test]
    fn assignment_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // 3 pairs over 3 ovals: C(5, 2) = 10 distributions
        let all = even_assignments(3, 6, 200, &mut rng);
        assert_eq!(all.len(), 10);
        let distinct: HashSet<Vec<usize>> = all.iter().map(|a| zero_counts(3, a)).collect();
        assert_eq!(distinct.len(), 10);
        let capped = even_assignments(6, 16, 50, &mut rng);
        assert_eq!(capped.len(), 50);
        for a in &capped {
            assert_eq!(a.len(), 16);
            assert!(zero_counts(6, a).iter().all(|c| c % 2 == 0));
        }
        assert!(even_assignments(0, 2, 10, &mut rng).is_empty());
        assert_eq!(even_assignments(0, 0, 10, &mut rng), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn random_compositions_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let parts = rng.gen_range(1..6);
            let total = rng.gen_range(0..10);
            let c = random_composition(total, parts, &mut rng);
            assert_eq!(c.len(), parts);
            assert_eq!(c.iter().sum::<usize>(), total);
        }
    }

    #[test]
    fn serialized_form() {
        let p = build_presentation(2, 2, 1, 1, 2, &[0, 0]).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["case"], "Case2");
        assert_eq!(v["dim"], 7);
        assert_eq!(v["theta"].as_array().unwrap().len(), 8);
        assert_eq!(v["relation"], "00001111");
    }
}
