use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use realbranes::counting::count_sl2;
use realbranes::homology::{
    build_presentation, build_presentation_with, even_assignments, invariant_kernel_dim, sl2_exponent,
    theta_kernel_dim, GF2Matrix, ThetaConvention,
};
use realbranes::klein::admissible_pairs;

/// Admissible configurations with u > 0 up to genus `max_g`, with up to `cap`
/// even assignments each.
fn configurations(max_g: usize, cap: usize) -> Vec<(usize, usize, u8, usize, usize, Vec<usize>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    for g in 2..=max_g {
        for (n, a) in admissible_pairs(g) {
            for u in (2..=4 * g - 4).step_by(2) {
                let t = (4 * g - 4 - u) / 2;
                for asg in even_assignments(n, u, cap, &mut rng) {
                    out.push((g, n, a, t, u, asg));
                }
            }
        }
    }
    out
}

#[test]
fn kernel_matches_closed_form() {
    for (g, n, a, t, u, asg) in configurations(3, 1000) {
        let p = build_presentation(g, n, a, t, u, &asg).unwrap();
        let expected = 3 * g - 3 + p.n_zero() + u / 2;
        assert_eq!(theta_kernel_dim(&p), expected, "{p:?}");
        let d = sl2_exponent(&p).unwrap();
        assert_eq!(d, (p.n_zero() + u / 2) as i64 - 1);
        assert_eq!(count_sl2(p.n_zero() as u64, u as u64).unwrap().d as i64, d);
    }
}

#[test]
fn printed_odd_case_rules_give_the_same_kernel() {
    for (g, n, a, t, u, asg) in configurations(3, 1000) {
        let fixed = build_presentation(g, n, a, t, u, &asg).unwrap();
        let printed = build_presentation_with(g, n, a, t, u, &asg, ThetaConvention::AsPrinted).unwrap();
        assert_eq!(theta_kernel_dim(&fixed), theta_kernel_dim(&printed));
    }
}

#[test]
fn dimensions_survive_change_of_basis() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for (g, n, a, t, u, asg) in configurations(3, 3) {
        let p = build_presentation(g, n, a, t, u, &asg).unwrap();
        let (m, m_inv) = GF2Matrix::random_invertible(p.generator_count(), &mut rng);
        let q = p.change_basis(&m, &m_inv);
        assert_eq!(theta_kernel_dim(&q), theta_kernel_dim(&p));
        assert_eq!(invariant_kernel_dim(&q), invariant_kernel_dim(&p));
        assert!(q.theta_squares_to_zero());
        assert!(q.omega_is_invariant());
    }
}
