//! Dense matrices over GF(2), one bit-packed `Vec<u64>` per row.

use std::fmt;

use rand::Rng;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<Vec<u64>>,
}

impl GF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        Self {
            rows,
            cols,
            words,
            data: vec![vec![0; words]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b & 1 == 1);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i][j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let bit = 1u64 << (j % 64);
        if v {
            self.data[i][j / 64] |= bit;
        } else {
            self.data[i][j / 64] &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i][j / 64] ^= 1u64 << (j % 64);
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        for w in 0..self.words {
            let v = self.data[src][w];
            self.data[dst][w] ^= v;
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for w in 0..other.words {
                        out.data[i][w] ^= other.data[k][w];
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for w in 0..self.words {
                out.data[i][w] ^= other.data[i][w];
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|&w| w == 0))
    }

    /// [self | other]
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    /// self stacked above other.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut out = self.clone();
        out.rows += other.rows;
        out.data.extend(other.data.iter().cloned());
        out
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.data.swap(row, p);
            for r in 0..m.rows {
                if r != row && m.get(r, col) {
                    m.xor_row_into(row, r);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Dimension of {x : self · x = 0}.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right null space, one vector per row of the result.
    pub fn nullspace(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, true);
            for (row, &p) in pivots.iter().enumerate() {
                if r.get(row, f) {
                    out.set(k, p, true);
                }
            }
        }
        out
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let (r, pivots) = self.hstack(&Self::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// A uniformly random invertible n × n matrix (rejection sampling).
    pub fn random_invertible<R: Rng>(n: usize, rng: &mut R) -> (Self, Self) {
        loop {
            let mut m = Self::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, rng.gen_bool(0.5));
                }
            }
            if let Some(inv) = m.inverse() {
                return (m, inv);
            }
        }
    }

    /// Column j as an n × 1 matrix.
    pub fn column(&self, j: usize) -> Self {
        let mut c = Self::zeros(self.rows, 1);
        for i in 0..self.rows {
            c.set(i, 0, self.get(i, j));
        }
        c
    }

    /// One line of '0'/'1' characters per row.
    pub fn to_bit_rows(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            for j in 0..self.cols {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    /// Inverse of [`to_bit_rows`](Self::to_bit_rows). Blank lines are skipped.
    pub fn from_bit_rows(text: &str) -> Result<Self, String> {
        let mut rows = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: Result<Vec<u8>, String> = line
                .chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(format!("line {}: unexpected character '{c}'", n + 1)),
                })
                .collect();
            rows.push(row?);
        }
        if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
            return Err("rows have different lengths".into());
        }
        Ok(Self::from_rows(&rows))
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF2Matrix {}x{}", self.rows, self.cols)?;
        f.write_str(&self.to_bit_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rank_and_nullspace() {
        let m = GF2Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 1);
        assert!(m.mul(&ns.transpose()).is_zero());
    }

    #[test]
    fn wide_matrices_span_words() {
        let mut m = GF2Matrix::zeros(3, 130);
        m.set(0, 0, true);
        m.set(1, 70, true);
        m.set(2, 129, true);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.nullity(), 127);
        assert!(m.get(2, 129) && !m.get(2, 128));
    }

    #[test]
    fn inverse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [1, 5, 17, 70] {
            let (p, q) = GF2Matrix::random_invertible(n, &mut rng);
            assert_eq!(p.mul(&q), GF2Matrix::identity(n));
            assert_eq!(q.mul(&p), GF2Matrix::identity(n));
        }
        let singular = GF2Matrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn bit_row_text_round_trip() {
        let m = GF2Matrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 1]]);
        let text = m.to_bit_rows();
        assert_eq!(text, "101\n011\n");
        assert_eq!(GF2Matrix::from_bit_rows(&text).unwrap(), m);
        assert!(GF2Matrix::from_bit_rows("10\n1").is_err());
        assert!(GF2Matrix::from_bit_rows("1x").is_err());
    }

    #[test]
    fn stacking() {
        let a = GF2Matrix::identity(2);
        let b = GF2Matrix::from_rows(&[vec![1], vec![1]]);
        let h = a.hstack(&b);
        assert_eq!(h.to_bit_rows(), "101\n011\n");
        let v = h.vstack(&GF2Matrix::from_rows(&[vec![1, 1, 1]]));
        assert_eq!(v.rank(), 3);
    }
}
