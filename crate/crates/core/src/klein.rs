//! Klein invariants (n, a) of anti-holomorphic involutions.
//!
//! `n` counts the fixed circles and `a` is 0 when removing them disconnects
//! the surface. On a hyperelliptic curve w² = p(z) with real p there are two
//! involutions covering z ↦ z̄, namely (z, w) ↦ (z̄, w̄) and (z, w) ↦ (z̄, −w̄),
//! and for odd genus possibly two more covering the antipodal map z ↦ −1/z̄.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::realpoly::Sign;
use crate::spectral::HyperellipticCurve;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KleinError {
    #[error("no such involution: {0}")]
    NoSuchInvolution(String),
}

/// Which anti-holomorphic involution of w² = p(z) is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum InvolutionKind {
    /// (z, w) ↦ (z̄, w̄); fixed set over {p ≥ 0}.
    ConjF,
    /// (z, w) ↦ (z̄, −w̄); fixed set over {p ≤ 0}.
    ConjSigmaF,
    /// Lift of z ↦ −1/z̄.
    AntipodalH,
    /// The antipodal lift composed with the sheet swap.
    AntipodalSigmaH,
}

impl InvolutionKind {
    pub const ALL: [InvolutionKind; 4] = [
        InvolutionKind::ConjF,
        InvolutionKind::ConjSigmaF,
        InvolutionKind::AntipodalH,
        InvolutionKind::AntipodalSigmaH,
    ];

    pub fn is_antipodal(self) -> bool {
        matches!(self, InvolutionKind::AntipodalH | InvolutionKind::AntipodalSigmaH)
    }

    /// Composition with the sheet swap w ↦ −w.
    pub fn swapped(self) -> Self {
        match self {
            InvolutionKind::ConjF => InvolutionKind::ConjSigmaF,
            InvolutionKind::ConjSigmaF => InvolutionKind::ConjF,
            InvolutionKind::AntipodalH => InvolutionKind::AntipodalSigmaH,
            InvolutionKind::AntipodalSigmaH => InvolutionKind::AntipodalH,
        }
    }

    /// For the conjugation kinds, the sign ε such that the fixed set lies
    /// over {ε·p ≥ 0}.
    pub fn fixed_sign(self) -> Option<Sign> {
        match self {
            InvolutionKind::ConjF => Some(Sign::Positive),
            InvolutionKind::ConjSigmaF => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            InvolutionKind::ConjF => "ConjF",
            InvolutionKind::ConjSigmaF => "ConjSigmaF",
            InvolutionKind::AntipodalH => "AntipodalH",
            InvolutionKind::AntipodalSigmaH => "AntipodalSigmaH",
        }
    }
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvolutionKind {
    type Err = String;

    /// Accepts the variant names case-insensitively, with or without
    /// separators (`conj-f`, `conj_sigma_f`, `antipodal-h`, ...).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        match key.as_str() {
            "conjf" | "f" => Ok(InvolutionKind::ConjF),
            "conjsigmaf" | "sigmaf" => Ok(InvolutionKind::ConjSigmaF),
            "antipodalh" | "h" => Ok(InvolutionKind::AntipodalH),
            "antipodalsigmah" | "sigmah" => Ok(InvolutionKind::AntipodalSigmaH),
            _ => Err(format!(
                "unknown involution kind '{s}' (expected ConjF, ConjSigmaF, AntipodalH or AntipodalSigmaH)"
            )),
        }
    }
}

/// Topological type of a real structure on a genus-g surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KleinInvariants {
    pub g: usize,
    pub n: usize,
    pub a: u8,
}

impl KleinInvariants {
    pub fn is_valid(&self) -> bool {
        validate_invariants(self.g, self.n, self.a)
    }
}

/// Whether (n, a) is the type of some real structure on a genus-g surface:
/// 0 ≤ n ≤ g+1, n = 0 forces a = 1, n = g+1 forces a = 0, and a = 0 forces
/// n ≡ g+1 (mod 2).
pub fn validate_invariants(g: usize, n: usize, a: u8) -> bool {
    if a > 1 || n > g + 1 {
        return false;
    }
    if n == 0 && a != 1 {
        return false;
    }
    if n == g + 1 && a != 0 {
        return false;
    }
    if a == 0 && n % 2 != (g + 1) % 2 {
        return false;
    }
    true
}

/// All valid (n, a) for genus g, sorted.
pub fn admissible_pairs(g: usize) -> Vec<(usize, u8)> {
    let mut out = Vec::new();
    for n in 0..=g + 1 {
        for a in 0..=1u8 {
            if validate_invariants(g, n, a) {
                out.push((n, a));
            }
        }
    }
    out
}

/// How the `a` value of a classification was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ASource {
    ClosedForm,
    /// Counted from the connectivity of the complement of the fixed set.
    ComplementConnectivity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub g: usize,
    pub n: usize,
    pub a: u8,
    pub kind: InvolutionKind,
    #[serde(skip)]
    pub a_source: Option<ASource>,
}

impl Classification {
    pub fn invariants(&self) -> KleinInvariants {
        KleinInvariants {
            g: self.g,
            n: self.n,
            a: self.a,
        }
    }
}

/// Closed-form classification of the involution `kind` on `curve`.
///
/// The rules assume a monic p; a negative leading coefficient turns the
/// fixed locus {p ≥ 0} into {−p ≥ 0}, so the conjugation kinds are swapped
/// first. Only one case has no closed form for `a`: the involution fixing
/// all of ℝP¹ on an odd-genus curve, where the fixed set is two circles and
/// `a` is read off from the complement instead.
pub fn classify_hyperelliptic(curve: &HyperellipticCurve, kind: InvolutionKind) -> Result<Classification, KleinError> {
    let g = curve.genus();
    if kind.is_antipodal() {
        if g.is_multiple_of(2) {
            return Err(KleinError::NoSuchInvolution(format!(
                "no real structure covers the antipodal map in even genus (g = {g})"
            )));
        }
        if !curve.polynomial().is_antipodally_closed() {
            return Err(KleinError::NoSuchInvolution(
                "branch points are not closed under z -> -1/conj(z)".into(),
            ));
        }
        return Ok(Classification {
            g,
            n: 0,
            a: 1,
            kind,
            a_source: Some(ASource::ClosedForm),
        });
    }
    let effective = if curve.lead_sign() == Sign::Negative { kind.swapped() } else { kind };
    let k = curve.k();
    let (n, a, source) = match effective {
        InvolutionKind::ConjF if k == 0 => {
            if g.is_multiple_of(2) {
                (1, 0, ASource::ClosedForm)
            } else {
                let top = complement_topology(curve, kind);
                (2, top.a, ASource::ComplementConnectivity)
            }
        }
        _ if k == g + 1 => (g + 1, 0, ASource::ClosedForm),
        _ => (k, 1, ASource::ClosedForm),
    };
    Ok(Classification {
        g,
        n,
        a,
        kind,
        a_source: Some(source),
    })
}

/// Fixed-set data computed straight from the branch-point picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementTopology {
    pub n: usize,
    pub a: u8,
    /// Connected components of the surface minus the fixed circles.
    pub complement_components: usize,
}

/// Computes (n, a) for a conjugation kind without the closed-form rules.
///
/// The surface minus the fixed set is cut into the preimages of the open
/// upper and lower half planes and the arcs over the non-fixed real
/// intervals. A half plane containing a branch point has connected preimage;
/// otherwise its preimage is two sheets. Each arc over a non-fixed interval
/// joins one upper piece to one lower piece, and the involution forces the
/// sheet labels to cross: the arc carrying the boundary value w₀ of the
/// upper sheet H⁺ meets the lower sheet whose boundary value is w₀, which is
/// the image of H⁻.
///
/// Fixed circles: each interval of {εp > 0} bounded by roots lifts to one
/// circle. When εp > 0 on all of ℝP¹ the lift of ℝP¹ closes up after one
/// turn iff w/z^(g+1) returns to itself through ∞, i.e. iff g is odd.
pub fn complement_topology(curve: &HyperellipticCurve, kind: InvolutionKind) -> ComplementTopology {
    let eps = kind.fixed_sign().expect("conjugation kind");
    let g = curve.genus();
    let profile = curve.sign_profile();
    let fixed: Vec<bool> = profile.intervals.iter().map(|iv| iv.sign.times(eps) == Sign::Positive).collect();
    let n = if profile.roots.is_empty() {
        if fixed[0] {
            if g % 2 == 1 {
                2
            } else {
                1
            }
        } else {
            0
        }
    } else {
        fixed.iter().filter(|&&f| f).count()
    };
    if n == 0 {
        return ComplementTopology {
            n,
            a: 1,
            complement_components: 1,
        };
    }
    let half_plane_has_roots = !curve.roots().complex_pairs.is_empty();
    // Nodes 0, 1 sit over the upper half plane and 2, 3 over the lower one.
    // With branch points inside, each half plane has one piece (0 and 2).
    let mut uf = UnionFind::new(4);
    for _ in fixed.iter().filter(|&&f| !f) {
        if half_plane_has_roots {
            uf.union(0, 2);
        } else {
            uf.union(0, 3);
            uf.union(1, 2);
        }
    }
    let members: &[usize] = if half_plane_has_roots { &[0, 2] } else { &[0, 1, 2, 3] };
    let components = uf.count_classes(members.iter().copied());
    ComplementTopology {
        n,
        a: if components == 1 { 1 } else { 0 },
        complement_components: components,
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub(crate) fn count_classes(&mut self, members: impl IntoIterator<Item = usize>) -> usize {
        let mut seen = Vec::new();
        for m in members {
            let r = self.find(m);
            if !seen.contains(&r) {
                seen.push(r);
            }
        }
        seen.len()
    }
}
