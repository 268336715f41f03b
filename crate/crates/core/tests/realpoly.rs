mod common;

use common::{rat, small_rational};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use realbranes::realpoly::{parse_polynomial, rational_to_f64, Gaussian, ProjectivePoint, RealPolynomial};

/// Distinct integer real roots times irreducible quadratics.
fn product(real: &[i64], quads: &[(i64, i64)]) -> RealPolynomial {
    let roots: Vec<_> = real.iter().map(|&r| rat(r, 1)).collect();
    let mut p = RealPolynomial::from_real_roots(&roots);
    for &(re, im) in quads {
        p = &p * &RealPolynomial::conjugate_pair_factor(&Gaussian::new(rat(re, 1), rat(im, 1)));
    }
    p
}

fn roots_strategy() -> impl Strategy<Value = (Vec<i64>, Vec<(i64, i64)>)> {
    (
        prop::collection::btree_set(-20i64..=20, 0..7).prop_map(|s| s.into_iter().collect::<Vec<i64>>()),
        prop::collection::vec((-5i64..=5, 1i64..=5), 0..3),
    )
        .prop_filter("nonconstant", |(r, q)| !r.is_empty() || !q.is_empty())
        .prop_filter("distinct pairs", |(_, q)| {
            let mut v = q.clone();
            v.sort_unstable();
            v.dedup();
            v.len() == q.len()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sturm_count_matches_constructed_roots((real, quads) in roots_strategy()) {
        let p = product(&real, &quads);
        prop_assert_eq!(p.count_real_roots(), real.len());
        let found = p.find_roots().unwrap();
        prop_assert_eq!(found.real_roots.len(), real.len());
        for (r, iso) in real.iter().zip(&found.real_roots) {
            let r = rat(*r, 1);
            prop_assert!(iso.lower() <= r && r <= iso.upper());
        }
        prop_assert_eq!(found.complex_pairs.len(), quads.len());
        for &(re, im) in &quads {
            let truth = Gaussian::new(rat(re, 1), rat(im.abs(), 1));
            let hit = found.complex_pairs.iter().any(|b| {
                let d = &b.center - &truth;
                d.norm_sqr() <= b.radius_sqr || (&b.center.conj() - &truth).norm_sqr() <= b.radius_sqr
            });
            prop_assert!(hit, "no certified disk around {}", truth);
        }
    }

    #[test]
    fn sign_at_agrees_with_profile((real, quads) in roots_strategy(), seed in any::<u64>()) {
        let p = product(&real, &quads);
        let profile = p.real_sign_profile().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1000 {
            let x = small_rational(&mut rng, 25);
            if p.eval(&x).is_zero() {
                continue;
            }
            let idx = profile.locate(&p, &x).unwrap();
            prop_assert_eq!(p.sign_at(&ProjectivePoint::real(x.clone())), Some(profile.intervals[idx].sign));
        }
    }

    #[test]
    fn display_parses_back((real, quads) in roots_strategy()) {
        let p = product(&real, &quads);
        prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn float_evaluation_tracks_exact(coeffs in prop::collection::vec(-50i64..=50, 1..8), x in -3i64..=3) {
        let p = RealPolynomial::from_i64(&coeffs);
        let exact = rational_to_f64(&p.eval(&rat(x, 1)));
        prop_assert!((p.eval_f64(x as f64) - exact).abs() <= 1e-9 * exact.abs().max(1.0));
    }
}
