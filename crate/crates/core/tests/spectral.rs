mod common;

use std::sync::Arc;

use common::{random_q, rat};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use realbranes::klein::{classify_hyperelliptic, InvolutionKind};
use realbranes::monodromy::count_nS_oracle;
use realbranes::realpoly::{parse_point, Sign};
use realbranes::spectral::{analyze, build_curve_from_text, QuadDifferential, SpectralInvariants};

fn comparable(inv: &SpectralInvariants) -> (usize, usize, usize, usize, usize, Vec<usize>) {
    let mut counts = inv.oval_zero_counts.clone();
    counts.sort_unstable();
    (inv.n, inv.n_plus, inv.n_minus, inv.u, inv.n_s, counts)
}

#[test]
fn worked_example() {
    let c = Arc::new(build_curve_from_text("(z^2-1)(z^2-4)(z^2-9)").unwrap());
    let q = QuadDifferential::genus2(
        c.clone(),
        parse_point("3/2").unwrap(),
        parse_point("-3/2").unwrap(),
        Sign::Positive,
        InvolutionKind::ConjF,
    )
    .unwrap();
    let inv = analyze(&q).unwrap();
    assert_eq!((inv.n, inv.n_plus, inv.u, inv.n_s), (3, 1, 4, 4));
    let cls = classify_hyperelliptic(&c, InvolutionKind::ConjF).unwrap();
    assert_eq!((cls.n, cls.a), (3, 0));
    assert_eq!(count_nS_oracle(&q).unwrap(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn invariant_under_real_mobius_maps(seed in any::<u64>(), g in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(q) = random_q(g, &mut rng) else { return Ok(()) };
        let Ok(before) = analyze(&q) else { return Ok(()) };
        let m = loop {
            let m: [[i64; 2]; 2] = [[rng.gen_range(-3..=3), rng.gen_range(-3..=3)], [rng.gen_range(-3..=3), rng.gen_range(-3..=3)]];
            if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0 {
                break m;
            }
        };
        let m = [[rat(m[0][0], 1), rat(m[0][1], 1)], [rat(m[1][0], 1), rat(m[1][1], 1)]];
        // the map may move a branch point to ∞
        let Ok(pulled) = q.mobius_pullback(&m) else { return Ok(()) };
        let after = analyze(&pulled).unwrap();
        prop_assert_eq!(comparable(&before), comparable(&after));
    }

    #[test]
    fn sign_flip_swaps_positive_and_negative(seed in any::<u64>(), g in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(q) = random_q(g, &mut rng) else { return Ok(()) };
        let Ok(a) = analyze(&q) else { return Ok(()) };
        let b = analyze(&q.negated()).unwrap();
        prop_assert_eq!((a.n_plus, a.n_minus, a.u, a.n), (b.n_minus, b.n_plus, b.u, b.n));
        prop_assert_eq!(a.oval_zero_counts, b.oval_zero_counts);
    }

    #[test]
    fn analyses_satisfy_constraints(seed in any::<u64>(), g in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(q) = random_q(g, &mut rng) else { return Ok(()) };
        let Ok(inv) = analyze(&q) else { return Ok(()) };
        prop_assert!(inv.constraint_violations(g).is_empty(), "{:?}", inv);
        let cls = classify_hyperelliptic(q.curve(), q.kind()).unwrap();
        prop_assert_eq!(cls.n, inv.n);
    }

    #[test]
    fn oracle_matches_sign_analysis(seed in any::<u64>(), g in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(q) = random_q(g, &mut rng) else { return Ok(()) };
        let Ok(inv) = analyze(&q) else { return Ok(()) };
        prop_assert_eq!(count_nS_oracle(&q).unwrap(), inv.n_s);
    }
}

