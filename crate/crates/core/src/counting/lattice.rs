//! Integral involutions of lattices and brute-force counts of fixed
//! 2-torsion points, used to check the torus lemma behind [`super::torus_d`].
//!
//! An anti-holomorphic involution of an m-dimensional complex torus ℂᵐ/Λ
//! acts on Λ ≅ ℤ^(2m) by an integral matrix M with M² = I whose ±1
//! eigenspaces both have dimension m. Every such M is conjugate over ℤ to
//! diag(I_(m−c), −I_(m−c), S, …, S) with c copies of the swap S = [[0,1],[1,0]].

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

/// A square integer matrix stored row-major.
pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, Serialize)]
pub struct LatticeInvolution {
    pub m: usize,
    /// Number of swap blocks in the normal form.
    pub swap_blocks: usize,
    pub matrix: IntMatrix,
}

/// diag(I_(m−c), −I_(m−c), S^c) acting on ℤ^(2m).
pub fn normal_form(m: usize, c: usize) -> IntMatrix {
    assert!(c <= m);
    let n = 2 * m;
    let mut a = vec![vec![0i64; n]; n];
    let free = m - c;
    for i in 0..free {
        a[i][i] = 1;
        a[free + i][free + i] = -1;
    }
    for b in 0..c {
        let i = 2 * free + 2 * b;
        a[i][i + 1] = 1;
        a[i + 1][i] = 1;
    }
    a
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += x * b[l][j];
            }
        }
    }
    out
}

/// A random unimodular P together with P⁻¹, built from `steps` elementary
/// row operations with multipliers ±1.
pub fn random_unimodular<R: Rng>(n: usize, steps: usize, rng: &mut R) -> (IntMatrix, IntMatrix) {
    let mut p = identity(n);
    let mut p_inv = identity(n);
    if n < 2 {
        return (p, p_inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let k: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        // P ← E P with E = I + k e_ij (row i += k row j)
        for col in 0..n {
            p[i][col] += k * p[j][col];
        }
        // P⁻¹ ← P⁻¹ E⁻¹ (column j −= k column i)
        for row in p_inv.iter_mut() {
            row[j] -= k * row[i];
        }
    }
    (p, p_inv)
}

/// A random involution with equal ±1 eigenspace dimensions, conjugated away
/// from its normal form by a random unimodular matrix.
pub fn random_involution<R: Rng>(m: usize, rng: &mut R) -> LatticeInvolution {
    let c = rng.gen_range(0..=m);
    let d = normal_form(m, c);
    let (p, p_inv) = random_unimodular(2 * m, 3 * m, rng);
    LatticeInvolution {
        m,
        swap_blocks: c,
        matrix: mat_mul(&mat_mul(&p, &d), &p_inv),
    }
}

pub fn is_involution(a: &IntMatrix) -> bool {
    mat_mul(a, a) == identity(a.len())
}

/// Rank over ℚ.
pub fn rank(a: &IntMatrix) -> usize {
    let mut rows: Vec<Vec<BigRational>> = a
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / &rows[rank][col];
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] * &inv;
                for c in col..ncols {
                    let delta = &f * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimensions of the +1 and −1 eigenspaces of an involution.
pub fn eigenspace_dims(a: &IntMatrix) -> (usize, usize) {
    let n = a.len();
    let shifted = |s: i64| -> IntMatrix {
        (0..n)
            .map(|i| (0..n).map(|j| a[i][j] - if i == j { s } else { 0 }).collect())
            .collect()
    };
    (n - rank(&shifted(1)), n - rank(&shifted(-1)))
}

/// Rows of M reduced mod 2, as bit masks (bit j = column j).
fn mod2_rows(a: &IntMatrix) -> Vec<u64> {
    a.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .fold(0u64, |acc, (j, &x)| acc | (((x.rem_euclid(2)) as u64) << j))
        })
        .collect()
}

fn apply_mod2(rows: &[u64], x: u64) -> u64 {
    rows.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &r)| acc | ((u64::from((r & x).count_ones() % 2 == 1)) << i))
}

/// A translation part c = (I − M)x₀ mod 2 for a random 2-torsion point x₀,
/// so that x ↦ Mx + c is an involution of the 2-torsion with fixed points.
pub fn random_translation<R: Rng>(a: &IntMatrix, rng: &mut R) -> u64 {
    let n = a.len();
    let x0: u64 = rng.gen::<u64>() & ((1u64 << n) - 1);
    let rows = mod2_rows(a);
    // over ℤ₂, I − M = I + M
    x0 ^ apply_mod2(&rows, x0)
}

/// Number of x ∈ (ℤ₂)^(2m) with Mx + c = x, by enumeration.
pub fn fixed_two_torsion(a: &IntMatrix, translation: u64) -> u64 {
    let n = a.len();
    assert!(n <= 24, "enumeration limited to 2^24 points");
    let rows = mod2_rows(a);
    (0..(1u64 << n))
        .filter(|&x| apply_mod2(&rows, x) ^ translation == x)
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::torus_d;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sheet_swap_on_a_single_torus() {
        let swap = vec![vec![0, 1], vec![1, 0]];
        assert!(is_involution(&swap));
        assert_eq!(eigenspace_dims(&swap), (1, 1));
        // fixed points of (x, y) ↦ (y, x) on (ℤ₂)²: (0,0) and (1,1)
        let fixed = fixed_two_torsion(&swap, 0);
        assert_eq!(fixed, 2);
        assert_eq!(torus_d(1, fixed), Ok(0));
    }

    #[test]
    fn normal_forms_count() {
        for m in 1..=4 {
            for c in 0..=m {
                let a = normal_form(m, c);
                assert!(is_involution(&a));
                assert_eq!(eigenspace_dims(&a), (m, m));
                let fixed = fixed_two_torsion(&a, 0);
                assert_eq!(fixed, 1 << (2 * m - c));
                assert_eq!(torus_d(m as u64, fixed), Ok((m - c) as u64));
            }
        }
    }

    #[test]
    fn conjugated_involutions_keep_their_type() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = rng.gen_range(1..=4);
            let inv = random_involution(m, &mut rng);
            assert!(is_involution(&inv.matrix));
            assert_eq!(eigenspace_dims(&inv.matrix), (m, m));
            let t = random_translation(&inv.matrix, &mut rng);
            let fixed = fixed_two_torsion(&inv.matrix, t);
            assert_eq!(torus_d(m as u64, fixed), Ok((m - inv.swap_blocks) as u64));
        }
    }

    #[test]
    fn unimodular_pair_is_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (p, q) = random_unimodular(6, 20, &mut rng);
        assert_eq!(mat_mul(&p, &q), identity(6));
    }
}
