//! Dense matrices over F_p with the handful of operations the Ext engine
//! needs: products, block assembly, rank and kernel bases via Gaussian
//! elimination.

use super::fp::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>, // row-major
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
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

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &FpMatrix, field: PrimeField) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = FpMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = field.add(out.get(i, j), field.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64], field: PrimeField) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                v.iter().enumerate().fold(0, |acc, (j, &x)| {
                    field.add(acc, field.mul(self.get(i, j), x))
                })
            })
            .collect()
    }

    /// [[a, b], [c, d]] with conforming shapes.
    pub fn block_2x2(a: &FpMatrix, b: &FpMatrix, c: &FpMatrix, d: &FpMatrix) -> FpMatrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let mut m = FpMatrix::zeros(a.rows + c.rows, a.cols + b.cols);
        for (di, dj, src) in [
            (0, 0, a),
            (0, a.cols, b),
            (a.rows, 0, c),
            (a.rows, a.cols, d),
        ] {
            for i in 0..src.rows {
                for j in 0..src.cols {
                    m.set(di + i, dj + j, src.get(i, j));
                }
            }
        }
        m
    }

    /// Columns of `self` followed by the columns of `other`.
    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows);
        FpMatrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<u64>]) -> FpMatrix {
        FpMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i])
    }

    fn row_echelon(&self, field: PrimeField) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                let (a, b) = (m.get(row, j), m.get(pr, j));
                m.set(row, j, b);
                m.set(pr, j, a);
            }
            let inv = field.inv(m.get(row, col));
            for j in col..m.cols {
                m.set(row, j, field.mul(m.get(row, j), inv));
            }
            for r in 0..m.rows {
                if r != row && m.get(r, col) != 0 {
                    let factor = m.get(r, col);
                    for j in col..m.cols {
                        let v = field.sub(m.get(r, j), field.mul(factor, m.get(row, j)));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, field: PrimeField) -> usize {
        self.row_echelon(field).1.len()
    }

    /// Basis of the right kernel, as column vectors of length `cols`.
    pub fn kernel_basis(&self, field: PrimeField) -> Vec<Vec<u64>> {
        let (rref, pivots) = self.row_echelon(field);
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![0u64; self.cols];
            vec[free] = 1;
            for (col, pivot_row) in pivot_of_col.iter().enumerate() {
                if let Some(r) = pivot_row {
                    vec[col] = field.neg(rref.get(*r, free));
                }
            }
            basis.push(vec);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(10007).unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        let m = FpMatrix::from_fn(2, 3, |i, j| ((i + j) % 3) as u64);
        // rows: [0 1 2], [1 2 0]
        assert_eq!(m.rank(f()), 2);
        let ker = m.kernel_basis(f());
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.mul_vec(v, f()).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn rank_nullity() {
        let m = FpMatrix::zeros(3, 4);
        assert_eq!(m.rank(f()), 0);
        assert_eq!(m.kernel_basis(f()).len(), 4);
        let id = FpMatrix::identity(5);
        assert_eq!(id.rank(f()), 5);
        assert!(id.kernel_basis(f()).is_empty());
    }

    #[test]
    fn block_assembly() {
        let a = FpMatrix::identity(2);
        let z = FpMatrix::zeros(2, 2);
        let m = FpMatrix::block_2x2(&a, &z, &z, &a);
        assert_eq!(m, FpMatrix::identity(4));
    }
}
