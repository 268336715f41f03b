//! JSON reports. Values are built as `serde_json::Value`, whose maps keep
//! keys sorted, so identical inputs give byte-identical output.

use std::sync::Arc;

use realbranes::counting::{count_gl, count_gl2, count_sl2, real_or_quaternionic, RealityTypeQuery};
use realbranes::homology::{build_from_counts, sl2_exponent, theta_kernel_dim};
use realbranes::klein::{classify_hyperelliptic, complement_topology, Classification, InvolutionKind};
use realbranes::monodromy::{count_nS_oracle, traces, track_fixed_circles};
use num_rational::BigRational;
use num_traits::One;
use realbranes::realpoly::{parse_point, parse_rational, Sign};
use realbranes::spectral::{analyze, analyze_ovals, build_curve_from_roots, build_curve_from_text, HyperellipticCurve, spectral_genus, QuadDifferential, SpectralInvariants};
use serde_json::{json, Value};

use crate::CliError;

pub const SCHEMA: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// How the curve was given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveSpec {
    Text(String),
    Roots { roots: Vec<String>, lead: Option<String> },
}

impl CurveSpec {
    fn build(&self) -> Result<HyperellipticCurve, CliError> {
        match self {
            CurveSpec::Text(p) => Ok(build_curve_from_text(p).map_err(realbranes::Error::from)?),
            CurveSpec::Roots { roots, lead } => {
                let points = roots
                    .iter()
                    .map(|r| parse_point(r).map_err(|e| CliError::Input(format!("root '{r}': {e}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                let lead = match lead {
                    Some(l) => parse_rational(l).map_err(|e| CliError::Input(format!("lead '{l}': {e}")))?,
                    None => BigRational::one(),
                };
                Ok(build_curve_from_roots(&points, &lead).map_err(realbranes::Error::from)?)
            }
        }
    }

    fn echo(&self) -> Value {
        match self {
            CurveSpec::Text(p) => json!(p),
            CurveSpec::Roots { roots, lead } => json!({"roots": roots, "lead": lead}),
        }
    }
}

/// What the user asked to analyze, echoed into reports.
#[derive(Clone, Debug)]
pub struct Problem {
    pub curve: CurveSpec,
    pub zeros: Vec<String>,
    pub sign: Sign,
    pub kind: InvolutionKind,
    pub rho: Option<i8>,
    pub q: QuadDifferential,
}

pub fn parse_sign(s: &str) -> Result<Sign, CliError> {
    match s.trim() {
        "+" | "+1" | "1" | "pos" | "positive" => Ok(Sign::Positive),
        "-" | "-1" | "neg" | "negative" => Ok(Sign::Negative),
        other => Err(CliError::Input(format!("sign must be +1 or -1, got '{other}'"))),
    }
}

pub fn parse_rho(v: Option<i8>) -> Result<Option<i8>, CliError> {
    match v {
        None | Some(1) | Some(-1) => Ok(v),
        Some(r) => Err(CliError::Input(format!("rho must be +1 or -1, got {r}"))),
    }
}

impl Problem {
    pub fn new(spec: CurveSpec, zeros: Vec<String>, sign: Sign, kind: InvolutionKind, rho: Option<i8>) -> Result<Self, CliError> {
        let curve = spec.build()?;
        let points = zeros
            .iter()
            .map(|z| parse_point(z).map_err(|e| CliError::Input(format!("zero '{z}': {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let q = QuadDifferential::new(Arc::new(curve), points, sign, kind).map_err(realbranes::Error::from)?;
        Ok(Problem {
            curve: spec,
            zeros,
            sign,
            kind,
            rho: parse_rho(rho)?,
            q,
        })
    }

    fn input_echo(&self) -> Value {
        json!({
            "p": self.curve.echo(),
            "zeros": self.zeros,
            "sign": self.sign.as_i8(),
            "kind": self.kind.name(),
        })
    }
}

fn classify(problem: &Problem) -> Result<Classification, CliError> {
    Ok(classify_hyperelliptic(problem.q.curve(), problem.kind).map_err(realbranes::Error::from)?)
}

fn klein_block(problem: &Problem, cls: &Classification) -> Value {
    let mut v = json!({"n": cls.n, "a": cls.a, "g": cls.g, "kind": cls.kind.name()});
    if !problem.kind.is_antipodal() {
        let top = complement_topology(problem.q.curve(), problem.kind);
        v["complement_components"] = json!(top.complement_components);
    }
    v
}

/// Closed-form counts and whether they agree with each other.
fn counts_block(g: usize, inv: &SpectralInvariants) -> Result<(Value, bool), CliError> {
    let g_s = spectral_genus(2, g as u64);
    let gl = count_gl(inv.n_s as u64, g_s).map_err(realbranes::Error::from)?;
    let gl2 = count_gl2(inv.n_plus as u64, inv.u as u64).map_err(realbranes::Error::from)?;
    let sl2 = match count_sl2(inv.n_zero as u64, inv.u as u64) {
        Ok(c) => json!({"d": c.d, "count": c.count}),
        Err(e) => json!({"not_applicable": e.to_string()}),
    };
    let consistent = gl.count == gl2.count;
    Ok((
        json!({
            "gl": {"d": gl.d, "count": gl.count, "spectral_genus": g_s},
            "gl2": {"d": gl2.d, "count": gl2.count},
            "sl2": sl2,
        }),
        consistent,
    ))
}

/// Cross-checks of the sign analysis: the numerical fixed-circle count per
/// oval and in total, and the homology model of the SL(2) exponent.
pub fn oracle_block(problem: &Problem, cls: &Classification, inv: &SpectralInvariants) -> Result<(Value, bool), CliError> {
    let q = &problem.q;
    let g = q.curve().genus();
    let summaries = analyze_ovals(q).map_err(realbranes::Error::from)?;
    let ovals = q.curve().fixed_ovals(q.kind());
    let mut agree = true;
    let mut per_oval = Vec::new();
    for (oval, summary) in ovals.iter().zip(&summaries) {
        let expected = match (summary.zero_count, summary.sign) {
            (0, Some(Sign::Positive)) => 2,
            (0, _) => 0,
            (z, _) => z / 2,
        };
        let tracked = track_fixed_circles(q, oval).map_err(realbranes::Error::from)?;
        agree &= tracked == expected;
        per_oval.push(json!({
            "index": oval.index,
            "zero_count": summary.zero_count,
            "sign": summary.sign.map(Sign::as_i8),
            "expected": expected,
            "tracked": tracked,
            "agree": tracked == expected,
        }));
    }
    let n_s_oracle = count_nS_oracle(q).map_err(realbranes::Error::from)?;
    agree &= n_s_oracle == inv.n_s;

    let homology = if inv.u == 0 {
        json!({"not_applicable": "no zero of q is fixed by the real structure"})
    } else {
        match build_from_counts(g, cls.n, cls.a, &inv.oval_zero_counts) {
            Ok(pres) => {
                let kernel = theta_kernel_dim(&pres);
                let expected_kernel = 3 * g - 3 + pres.n_zero() + inv.u / 2;
                let exponent = sl2_exponent(&pres).map_err(realbranes::Error::from)?;
                let formula = count_sl2(inv.n_zero as u64, inv.u as u64).map_err(realbranes::Error::from)?;
                let ok = kernel == expected_kernel && exponent == formula.d as i64;
                agree &= ok;
                json!({
                    "case": pres.case.to_string(),
                    "theta_kernel_dim": kernel,
                    "expected_kernel_dim": expected_kernel,
                    "sl2_exponent": exponent,
                    "formula_exponent": formula.d,
                    "agree": ok,
                })
            }
            Err(e) => {
                agree = false;
                json!({"error": e.to_string(), "agree": false})
            }
        }
    };
    Ok((
        json!({
            "n_s": {"formula": inv.n_s, "oracle": n_s_oracle, "agree": n_s_oracle == inv.n_s},
            "ovals": per_oval,
            "homology": homology,
            "agree": agree,
        }),
        agree,
    ))
}

/// The `analyze` report; the flag is true when some cross-check failed.
pub fn analysis_report(problem: &Problem, with_oracle: bool, seed: u64) -> Result<(Value, bool), CliError> {
    let q = &problem.q;
    let g = q.curve().genus();
    let cls = classify(problem)?;
    let summaries = analyze_ovals(q).map_err(realbranes::Error::from)?;
    let inv = analyze(q).map_err(realbranes::Error::from)?;
    let (counts, consistent) = counts_block(g, &inv)?;
    let reality = real_or_quaternionic(RealityTypeQuery {
        u: inv.u as u64,
        rho_mu: problem.rho,
        f_has_fixed_points: inv.n > 0,
    })
    .map_err(realbranes::Error::from)?;
    let mut mismatch = !consistent || cls.n != inv.n;
    let mut report = json!({
        "schema": SCHEMA,
        "tool_version": TOOL_VERSION,
        "seed": seed,
        "input": problem.input_echo(),
        "curve": q.curve(),
        "klein": klein_block(problem, &cls),
        "spectral": {
            "n": inv.n,
            "n_plus": inv.n_plus,
            "n_minus": inv.n_minus,
            "n_zero": inv.n_zero,
            "u": inv.u,
            "u_half": inv.u / 2,
            "n_s": inv.n_s,
            "oval_zero_counts": inv.oval_zero_counts,
            "ovals": summaries,
        },
        "tuple": [cls.n, cls.a, inv.n_plus, inv.u / 2],
        "counts": counts,
        "reality_type": reality,
    });
    if with_oracle {
        let (block, agree) = oracle_block(problem, &cls, &inv)?;
        mismatch |= !agree;
        report["oracle"] = block;
    }
    report["mismatch"] = json!(mismatch);
    Ok((report, mismatch))
}

/// The `oracle` report: cross-checks plus the per-oval traces.
pub fn oracle_report(problem: &Problem, seed: u64) -> Result<(Value, bool), CliError> {
    let cls = classify(problem)?;
    let inv = analyze(&problem.q).map_err(realbranes::Error::from)?;
    let (block, agree) = oracle_block(problem, &cls, &inv)?;
    let traces = traces(&problem.q).map_err(realbranes::Error::from)?;
    Ok((
        json!({
            "schema": SCHEMA,
            "tool_version": TOOL_VERSION,
            "seed": seed,
            "input": problem.input_echo(),
            "oracle": block,
            "traces": traces,
            "mismatch": !agree,
        }),
        !agree,
    ))
}

/// The `classify` report, for one kind or all four.
pub fn classify_report(p: &str, kinds: &[InvolutionKind]) -> Result<Value, CliError> {
    let curve = build_curve_from_text(p).map_err(realbranes::Error::from)?;
    let mut out = Vec::new();
    for &kind in kinds {
        out.push(match classify_hyperelliptic(&curve, kind) {
            Ok(c) => json!({"kind": kind.name(), "n": c.n, "a": c.a}),
            Err(e) => json!({"kind": kind.name(), "error": e.to_string()}),
        });
    }
    Ok(json!({
        "schema": SCHEMA,
        "tool_version": TOOL_VERSION,
        "curve": curve,
        "classifications": out,
    }))
}
