//! Dense exact linear algebra over cyclotomic fields.

use std::fmt;

use crate::exact::{Cyclotomic, ExactError, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Cyclotomic::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Cyclotomic::one();
        }
        m
    }

    pub fn scalar(n: usize, c: Cyclotomic) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diag(d: &[Cyclotomic]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, c) in d.iter().enumerate() {
            m[(i, i)] = c.clone();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    /// Permutation matrix sending basis vector `e_j` to `e_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zeros(perm.len(), perm.len());
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = Cyclotomic::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..rhs.cols {
                out[(i, j)] = Cyclotomic::sum_of_products(
                    row.iter().enumerate().map(|(k, a)| (a, &rhs[(k, j)])),
                );
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> Cyclotomic {
        Cyclotomic::sum((0..self.rows.min(self.cols)).map(|i| &self.entries[i * self.cols + i]))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j { e.is_one() } else { e.is_zero() }
                })
            })
    }

    /// Whether the matrix is `c·I` for some `c`.
    pub fn is_scalar(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j { self[(i, j)] == self[(0, 0)] } else { self[(i, j)].is_zero() }
                })
            })
    }

    pub fn determinant(&self) -> Cyclotomic {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Cyclotomic::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[(r, c)].is_zero()) else {
                return Cyclotomic::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in c + 1..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let f = &m[(r, c)] * &inv;
                m.row_axpy(r, c, &f, c);
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix, ExactError> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Cyclotomic::one();
        }
        let ech = rref(&aug);
        if ech.pivots.iter().take(n).copied().ne(0..n) {
            return Err(ExactError::ZeroDivision);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = ech.echelon[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[target] -= f * row[source]`, touching columns from `from` on.
    fn row_axpy(&mut self, target: usize, source: usize, f: &Cyclotomic, from: usize) {
        for j in from..self.cols {
            let s = &self.entries[source * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let d = &(f * s);
            let t = &mut self.entries[target * self.cols + j];
            *t = &*t - d;
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Cyclotomic;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclotomic {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclotomic {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{self}", self.rows, self.cols)
    }
}

#[derive(Clone, Debug)]
pub struct Echelon {
    pub rank: usize,
    pub echelon: Matrix,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form by Gauss–Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current row; each pivot
/// row is normalized with a single inversion.
pub fn rref(m: &Matrix) -> Echelon {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let pivot = a[(r, c)].clone();
        if !pivot.is_one() {
            let inv = pivot.inv().expect("nonzero pivot");
            for j in c..a.cols {
                let e = &mut a.entries[r * a.cols + j];
                if !e.is_zero() {
                    *e = &*e * &inv;
                }
            }
        }
        for i in 0..a.rows {
            if i != r && !a[(i, c)].is_zero() {
                let f = a[(i, c)].clone();
                a.row_axpy(i, r, &f, c);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rank: pivots.len(), echelon: a, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Basis of the right kernel, one vector per free column.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Cyclotomic>> {
    let e = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Cyclotomic::zero(); m.cols];
            v[f] = Cyclotomic::one();
            for (row, &p) in e.pivots.iter().enumerate() {
                v[p] = -&e.echelon[(row, f)];
            }
            v
        })
        .collect()
}

/// Dimension of the algebra of matrices commuting with every generator,
/// from the linear system `X·g = g·X` in the `n²` entries of `X`.
pub fn commutant_dimension(generators: &[Matrix]) -> usize {
    let Some(first) = generators.first() else {
        return 0;
    };
    let n = first.rows();
    let unknowns = n * n;
    let mut sys = Matrix::zeros(n * n * generators.len(), unknowns);
    for (gi, g) in generators.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let row = gi * n * n + i * n + j;
                // (Xg - gX)_{ij} = Σ_k X_ik g_kj - Σ_k g_ik X_kj
                for k in 0..n {
                    let a = &mut sys[(row, i * n + k)];
                    *a = &*a + &g[(k, j)];
                    let b = &mut sys[(row, k * n + j)];
                    *b = &*b - &g[(i, k)];
                }
            }
        }
    }
    unknowns - rank(&sys)
}

/// Rational matrix helper used by tests and fixtures.
pub fn rational_matrix(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| Cyclotomic::from_rational(&Rational::from(v))).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn rref_basics() {
        assert_eq!(rank(&Matrix::identity(5)), 5);
        assert_eq!(rank(&Matrix::zeros(4, 4)), 0);
        let m = Matrix::from_rows(vec![vec![Cyclotomic::one(), z(3, 1)], vec![z(3, 2), Cyclotomic::one()]]);
        let e = rref(&m);
        assert_eq!(e.rank, 1);
        assert_eq!(e.pivots, vec![0]);
        assert_eq!(rref(&e.echelon).echelon, e.echelon);
    }

    #[test]
    fn nullspaces() {
        assert!(nullspace(&Matrix::identity(3)).is_empty());
        assert_eq!(nullspace(&Matrix::zeros(3, 3)).len(), 3);
        let m = rational_matrix(&[&[1, 1, 1]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col = Matrix::from_rows(v.into_iter().map(|c| vec![c]).collect());
            assert!(m.mul(&col).entries().iter().all(Cyclotomic::is_zero));
        }
    }

    #[test]
    fn commutants() {
        assert_eq!(commutant_dimension(&[Matrix::identity(5)]), 25);
        let one = Cyclotomic::one;
        let g = Matrix::diag(&[z(3, 1), z(3, 1), one(), one(), one()]);
        assert_eq!(commutant_dimension(&[g]), 13);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_rows(vec![
            vec![z(3, 1), Cyclotomic::one(), Cyclotomic::zero()],
            vec![Cyclotomic::zero(), Cyclotomic::from_int(2), z(4, 1)],
            vec![Cyclotomic::one(), Cyclotomic::zero(), Cyclotomic::one()],
        ]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        // det = ζ3·2 - 1·(0 - ζ4) = 2ζ3 + ζ4
        assert_eq!(m.determinant(), &(&z(3, 1) * &Cyclotomic::from_int(2)) + &z(4, 1));
        assert!(Matrix::zeros(2, 2).inverse().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn entry() -> impl Strategy<Value = Cyclotomic> {
            (prop::sample::select(vec![1u32, 3, 4, 5]), 0i64..5, -2i64..=2).prop_map(|(n, k, c)| {
                &Cyclotomic::root_of_unity(n, k) * &Cyclotomic::from_int(c)
            })
        }

        fn matrix() -> impl Strategy<Value = Matrix> {
            (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
                prop::collection::vec(entry(), r * c).prop_map(move |e| Matrix { rows: r, cols: c, entries: e })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn rank_of_transpose(m in matrix()) {
                prop_assert_eq!(rank(&m), rank(&m.transpose()));
            }

            #[test]
            fn rref_idempotent(m in matrix()) {
                let e = rref(&m);
                prop_assert_eq!(rref(&e.echelon).echelon, e.echelon.clone());
                prop_assert_eq!(nullspace(&m).len(), m.cols() - e.rank);
            }
        }
    }
}
