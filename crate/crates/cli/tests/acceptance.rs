//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any failed.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::thread;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use realbranes::census::{admissible_tuples, grid_differentials, random_differentials, InvariantTuple};
use realbranes::counting::lattice::{eigenspace_dims, fixed_two_torsion, is_involution, random_involution, random_translation};
use realbranes::counting::{count_gl, count_gl2, count_sl2, torus_d};
use realbranes::homology::{build_presentation, even_assignments, sl2_exponent, theta_kernel_dim};
use realbranes::klein::{admissible_pairs, classify_hyperelliptic, complement_topology, InvolutionKind, KleinError};
use realbranes::monodromy::{count_nS_oracle, trace_oval};
use realbranes::realpoly::{Gaussian, ProjectivePoint, Sign};
use realbranes::spectral::{
    analyze, analyze_ovals, build_curve_from_roots, fibre_dim, fixed_degree, spectral_genus, Group, QuadDifferential,
};
use serde_json::Value;

const RANDOM_SEED: u64 = 20_240_601;
const RANDOM_CONFIGS: usize = 500;
const ASSIGNMENT_CAP: usize = 200;
const TORUS_SAMPLES: usize = 200;

type Outcome = Result<String, String>;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_realbranes"))
}

fn within(limit: Duration, started: Instant) -> Result<Duration, String> {
    let took = started.elapsed();
    if took > limit {
        Err(format!("took {took:.1?}, limit {limit:?}"))
    } else {
        Ok(took)
    }
}

fn genus_two_census() -> Outcome {
    let started = Instant::now();
    let out = bin().args(["census", "--g", "2"]).output().map_err(|e| e.to_string())?;
    let took = within(Duration::from_secs(300), started)?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let admissible = v["admissible"].as_u64().unwrap_or(0);
    let realized = v["realized"].as_u64().unwrap_or(0);
    let missing: Vec<InvariantTuple> = serde_json::from_value(v["missing"].clone()).map_err(|e| e.to_string())?;
    let verified = v["witnesses"]
        .as_object()
        .map(|w| w.values().all(|x| x["check"]["passed"] == Value::Bool(true)))
        .unwrap_or(false);
    let expected_missing = vec![InvariantTuple::new(1, 0, 0, 1)];
    if admissible == 26 && admissible_tuples(2).len() == 26 && realized == 25 && missing == expected_missing && verified {
        Ok(format!("26 admissible, 25 realized and verified, missing (1,0,0,1); {took:.1?}"))
    } else {
        Err(format!("admissible {admissible}, realized {realized}, missing {missing:?}, verified {verified}"))
    }
}

fn configurations() -> Vec<QuadDifferential> {
    let mut all: Vec<QuadDifferential> = grid_differentials(2).filter(|q| analyze(q).is_ok()).collect();
    all.extend(random_differentials(2, RANDOM_CONFIGS, RANDOM_SEED));
    all
}

fn gl2_formula_vs_oracle(configs: &[QuadDifferential]) -> Outcome {
    let started = Instant::now();
    let g_s = spectral_genus(2, 2);
    for q in configs {
        let inv = analyze(q).map_err(|e| e.to_string())?;
        let oracle = count_nS_oracle(q).map_err(|e| format!("{}: {e}", q.curve().polynomial()))?;
        if oracle != inv.n_s {
            return Err(format!("n_S {} vs oracle {oracle} for p = {}, zeros {:?}", inv.n_s, q.curve().polynomial(), q.zeros()));
        }
        let gl = count_gl(inv.n_s as u64, g_s).map_err(|e| e.to_string())?;
        let gl2 = count_gl2(inv.n_plus as u64, inv.u as u64).map_err(|e| e.to_string())?;
        if gl.count != gl2.count {
            return Err(format!("count_gl {} vs count_gl2 {}", gl.count, gl2.count));
        }
    }
    let took = within(Duration::from_secs(120), started)?;
    Ok(format!("{} configurations (grid + {RANDOM_CONFIGS} random, seed {RANDOM_SEED}) agree; {took:.1?}", configs.len()))
}

fn per_oval_oracle(configs: &[QuadDifferential]) -> Outcome {
    let mut ovals = 0usize;
    for q in configs {
        let summaries = analyze_ovals(q).map_err(|e| e.to_string())?;
        for (oval, s) in q.curve().fixed_ovals(q.kind()).iter().zip(&summaries) {
            let expected = match (s.zero_count, s.sign) {
                (0, Some(Sign::Positive)) => 2,
                (0, Some(Sign::Negative)) => 0,
                (0, other) => return Err(format!("zero-free oval without a sign: {other:?}")),
                (z, _) if z % 2 == 1 => return Err(format!("odd zero count {z}")),
                (z, _) => z / 2,
            };
            let traced = trace_oval(q, oval).map_err(|e| e.to_string())?.fixed_circles;
            if traced != expected {
                return Err(format!(
                    "oval {} of p = {} with zeros {:?}: traced {traced}, expected {expected}",
                    oval.index,
                    q.curve().polynomial(),
                    q.zeros()
                ));
            }
            ovals += 1;
        }
    }
    Ok(format!("{ovals} ovals give 2 / 0 / k fixed circles exactly"))
}

fn sl2_homology() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut checked = 0usize;
    for g in 2..=5usize {
        for (n, a) in admissible_pairs(g) {
            for t in 0..2 * g - 2 {
                let u = 4 * g - 4 - 2 * t;
                for asg in even_assignments(n, u, ASSIGNMENT_CAP, &mut rng) {
                    let p = build_presentation(g, n, a, t, u, &asg).map_err(|e| e.to_string())?;
                    let kernel = theta_kernel_dim(&p);
                    let expected = 3 * g - 3 + p.n_zero() + u / 2;
                    let d = sl2_exponent(&p).map_err(|e| e.to_string())?;
                    let formula = count_sl2(p.n_zero() as u64, u as u64).map_err(|e| e.to_string())?;
                    if kernel != expected || d != formula.d as i64 {
                        return Err(format!(
                            "g={g} n={n} a={a} t={t} u={u} {asg:?}: kernel {kernel} vs {expected}, exponent {d} vs {}",
                            formula.d
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    let took = within(Duration::from_secs(180), started)?;
    Ok(format!("{checked} presentations for g = 2..5 (cap {ASSIGNMENT_CAP}); {took:.1?}"))
}

fn torus_lemma() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    for m in 1..=6usize {
        for _ in 0..TORUS_SAMPLES {
            let inv = random_involution(m, &mut rng);
            if !is_involution(&inv.matrix) || eigenspace_dims(&inv.matrix) != (m, m) {
                return Err(format!("bad involution for m = {m}"));
            }
            let c = random_translation(&inv.matrix, &mut rng);
            let fixed = fixed_two_torsion(&inv.matrix, c);
            let d = torus_d(m as u64, fixed).map_err(|e| format!("m = {m}: {e}"))?;
            // diag(I, -I, swaps) fixes everything on the I, -I blocks and one
            // bit of each swap pair mod 2
            let expected_d = (m - inv.swap_blocks) as u64;
            if fixed != 1 << (m as u64 + d) || d > m as u64 || d != expected_d {
                return Err(format!("m = {m}: {fixed} fixed points, d = {d}, normal form says {expected_d}"));
            }
        }
    }
    let took = within(Duration::from_secs(60), started)?;
    Ok(format!("{} involutions for m = 1..6, all 2^(m+d) with 0 <= d <= m; {took:.1?}", 6 * TORUS_SAMPLES))
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn complex(re: BigRational, im: BigRational) -> ProjectivePoint {
    ProjectivePoint::Finite(Gaussian::new(re, im))
}

/// 2k real roots 1..2k and conjugate pairs j ± i for the rest.
fn conjugation_witness(g: usize, k: usize) -> Vec<ProjectivePoint> {
    let mut roots: Vec<ProjectivePoint> = (1..=2 * k as i64).map(|r| ProjectivePoint::real(rat(r))).collect();
    for j in 0..(g + 1 - k) as i64 {
        roots.push(complex(rat(j), rat(1)));
        roots.push(complex(rat(j), rat(-1)));
    }
    roots
}

/// Roots closed under conjugation and z -> -1/conj(z): k real pairs
/// (r, -1/r), ±i when needed for the count, and orbits w, conj w, -1/w,
/// -1/conj w with w = j + 2i.
fn antipodal_witness(g: usize, k: usize) -> Vec<ProjectivePoint> {
    let mut roots = Vec::new();
    for r in 1..=k as i64 {
        let r = ProjectivePoint::real(rat(r + 1));
        roots.push(r.antipode());
        roots.push(r);
    }
    let mut rest = 2 * g + 2 - 2 * k;
    if rest % 4 == 2 {
        roots.push(complex(rat(0), rat(1)));
        roots.push(complex(rat(0), rat(-1)));
        rest -= 2;
    }
    for j in 0..(rest / 4) as i64 {
        let w = complex(rat(j), rat(2));
        let anti = w.antipode();
        roots.extend([w.conj(), w, anti.conj(), anti]);
    }
    roots
}

fn expected_klein(g: usize, k: usize, kind: InvolutionKind) -> Option<(usize, Option<u8>)> {
    match kind {
        InvolutionKind::AntipodalH | InvolutionKind::AntipodalSigmaH => (g % 2 == 1).then_some((0, Some(1))),
        InvolutionKind::ConjF if k == 0 => Some(if g.is_multiple_of(2) { (1, Some(0)) } else { (2, None) }),
        _ if k == g + 1 => Some((g + 1, Some(0))),
        _ => Some((k, Some(1))),
    }
}

fn klein_table() -> Outcome {
    let kinds = [
        InvolutionKind::ConjF,
        InvolutionKind::ConjSigmaF,
        InvolutionKind::AntipodalH,
        InvolutionKind::AntipodalSigmaH,
    ];
    let mut rows = 0usize;
    for g in 2..=6usize {
        for k in 0..=g + 1 {
            for kind in kinds {
                for lead in [1i64, -1] {
                    let roots = if kind.is_antipodal() && g % 2 == 1 {
                        antipodal_witness(g, k)
                    } else {
                        conjugation_witness(g, k)
                    };
                    let curve = build_curve_from_roots(&roots, &rat(lead)).map_err(|e| e.to_string())?;
                    if curve.k() != k {
                        return Err(format!("witness for g={g} k={k} has k = {}", curve.k()));
                    }
                    // -p swaps the two lifts of conjugation
                    let rule_kind = if lead < 0 && !kind.is_antipodal() { kind.swapped() } else { kind };
                    let got = classify_hyperelliptic(&curve, kind);
                    match (expected_klein(g, k, rule_kind), got) {
                        (None, Err(KleinError::NoSuchInvolution(_))) => {}
                        (Some((n, a)), Ok(c)) => {
                            let a_ok = match a {
                                Some(a) => c.a == a,
                                None => {
                                    c.a == complement_topology(&curve, kind).a
                                        && realbranes::klein::validate_invariants(g, c.n, c.a)
                                }
                            };
                            if c.n != n || !a_ok {
                                return Err(format!("g={g} k={k} {kind} lead {lead}: got ({}, {})", c.n, c.a));
                            }
                        }
                        (want, got) => return Err(format!("g={g} k={k} {kind} lead {lead}: want {want:?}, got {got:?}")),
                    }
                    rows += 1;
                }
            }
        }
    }
    Ok(format!("{rows} rows (g = 2..6, every k, four kinds, both leading signs)"))
}

fn worked_example() -> Outcome {
    let out = bin()
        .args(["analyze", "--p", "(z^2-1)(z^2-4)(z^2-9)", "--a1", "3/2", "--a2", "-3/2", "--oracle"])
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let checks = [
        (v["tuple"] == serde_json::json!([3, 0, 1, 2]), "tuple (3,0,1,2)"),
        (v["counts"]["gl2"]["count"] == 8, "GL(2) count 8"),
        (v["counts"]["gl"]["count"] == 8, "GL count from n_S 8"),
        (v["counts"]["sl2"]["count"] == 4, "SL(2) count 4"),
        (v["oracle"]["n_s"]["oracle"] == 4, "monodromy n_S 4"),
        (v["oracle"]["homology"]["sl2_exponent"] == 2, "homology exponent 2"),
        (v["oracle"]["agree"] == true, "oracles agree"),
        (v["mismatch"] == false, "no mismatch"),
    ];
    match checks.iter().find(|(ok, _)| !ok) {
        Some((_, what)) => Err(format!("failed: {what}")),
        None => Ok("(3,0,1,2), GL(2) 8, SL(2) 4, both oracles agree".into()),
    }
}

fn closed_forms() -> Outcome {
    let mut rows = 0;
    for n in 1..=5u64 {
        for g in 1..=6u64 {
            // Riemann-Hurwitz for the n-sheeted spectral cover, branched over
            // the zeros of the discriminant, a section of K^(n(n-1))
            let branch = n * (n - 1) * (2 * g - 2);
            let g_s = (n * (2 * g - 2) + branch + 2) / 2;
            let want = [
                (spectral_genus(n, g), g_s, "spectral_genus"),
                (fixed_degree(n, g), branch / 2, "fixed_degree"),
                (fibre_dim(Group::GL, n, g), g_s, "fibre_dim GL"),
                (fibre_dim(Group::SL, n, g), g_s - g, "fibre_dim SL"),
            ];
            for (got, expected, name) in want {
                if got != expected {
                    return Err(format!("{name}(n={n}, g={g}) = {got}, expected {expected}"));
                }
            }
            rows += 1;
        }
    }
    Ok(format!("{rows} (n, g) pairs with n <= 5, g <= 6"))
}

fn main() -> ExitCode {
    let started = Instant::now();
    let census = thread::spawn(genus_two_census);
    let homology = thread::spawn(sl2_homology);
    let torus = thread::spawn(torus_lemma);
    let configs = Arc::new(configurations());
    let c2 = {
        let configs = configs.clone();
        thread::spawn(move || gl2_formula_vs_oracle(&configs))
    };
    let c3 = {
        let configs = configs.clone();
        thread::spawn(move || per_oval_oracle(&configs))
    };
    let join = |h: thread::JoinHandle<Outcome>| h.join().unwrap_or_else(|_| Err("panicked".into()));
    let results: Vec<(&str, Outcome)> = vec![
        ("genus-2 census", join(census)),
        ("GL(2) formula vs monodromy oracle", join(c2)),
        ("per-oval fixed circles", join(c3)),
        ("SL(2) homology oracle", join(homology)),
        ("torus lemma", join(torus)),
        ("Klein classification table", klein_table()),
        ("worked example", worked_example()),
        ("closed-form identities", closed_forms()),
    ];
    let mut failed = 0;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} passed in {:.1?}", results.len() - failed, results.len(), started.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
