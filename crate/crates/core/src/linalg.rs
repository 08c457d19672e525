//! Dense linear algebra over exact fields: reduced row echelon form,
//! kernels, particular solutions and inverses.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};

#[derive(Clone, PartialEq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElem>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        if rows.iter().flatten().any(|x| x.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), "matrix entry".into()));
        }
        let n = rows.len();
        Ok(Matrix { field: field.clone(), rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = &out[(i, j)] + &(a * &other[(k, j)]);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("{} columns vs vector of {}", self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b)))
            .collect())
    }

    /// Maps every entry into a larger field of the same tower.
    pub fn embed(&self, bigger: &Field) -> Result<Matrix> {
        let data = self.data.iter().map(|x| bigger.embed(x)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { field: bigger.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> Result<(Matrix, Vec<usize>)> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv()?;
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let t = &f * &m[(r, j)];
                    m[(i, j)] = &m[(i, j)] - &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok((m, pivots))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Basis of the right kernel, returned as the rows of a matrix in
    /// reduced row echelon form so that the result depends only on the
    /// solution space.
    pub fn kernel(&self) -> Result<Vec<Vec<FieldElem>>> {
        let (r, pivots) = self.rref()?;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(row, f)];
            }
            basis.push(v);
        }
        if basis.is_empty() {
            return Ok(basis);
        }
        let (echelon, _) = Matrix::from_rows(&self.field, basis)?.rref()?;
        Ok(echelon.to_rows())
    }

    /// One solution of `self · x = rhs`, with free variables set to zero.
    pub fn solve(&self, rhs: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("{} rows vs right-hand side of {}", self.rows, rhs.len())));
        }
        let mut aug = Self::zeros(&self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let (r, pivots) = aug.rref()?;
        if pivots.last() == Some(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let (r, pivots) = aug.rref()?;
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Self::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElem;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElem {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElem {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(field: &Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(field, rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn kernel_of_zero_over_f2() {
        let f2 = Field::prime(2).unwrap();
        let m = int_matrix(&f2, &[&[0]]);
        assert_eq!(m.kernel().unwrap(), vec![vec![f2.one()]]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let qq = Field::rationals();
        assert!(Matrix::identity(&qq, 2).kernel().unwrap().is_empty());
    }

    #[test]
    fn kernel_by_hand() {
        let qq = Field::rationals();
        let m = int_matrix(&qq, &[&[2, -1], &[-4, 2]]);
        assert_eq!(m.kernel().unwrap(), vec![vec![qq.from_i64(1), qq.from_i64(2)]]);
    }

    #[test]
    fn solve_and_no_solution() {
        let qq = Field::rationals();
        let m = int_matrix(&qq, &[&[1, 1], &[1, -1]]);
        let x = m.solve(&[qq.from_i64(3), qq.from_i64(1)]).unwrap();
        assert_eq!(x, vec![qq.from_i64(2), qq.from_i64(1)]);
        let singular = int_matrix(&qq, &[&[1, 1], &[2, 2]]);
        assert_eq!(singular.solve(&[qq.from_i64(1), qq.from_i64(1)]), Err(Error::NoSolution));
        assert_eq!(singular.inverse(), Err(Error::SingularMatrix));
        assert!(m.solve(&[qq.one()]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let f5 = Field::prime(5).unwrap();
        let m = int_matrix(&f5, &[&[1, 2, 0], &[0, 1, 3], &[4, 0, 2]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
    }
}
