use std::fmt;

use super::bareiss;
use super::scalar::{ExactScalar, Field};
use super::LinalgError;

/// Dense row-major matrix of [`ExactScalar`]s sharing a single field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<ExactScalar>,
}

fn common_field<'a>(entries: impl IntoIterator<Item = &'a ExactScalar>) -> Result<Field, LinalgError> {
    entries.into_iter().try_fold(Field::Rationals, |f, x| f.join(x.field()))
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<ExactScalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let field = common_field(&data)?;
        Ok(ExactMatrix { rows, cols, field, data })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> ExactScalar,
    ) -> Result<Self, LinalgError> {
        let data = (0..rows * cols).map(|k| f(k / cols.max(1), k % cols.max(1))).collect();
        Self::new(rows, cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, field: Field::Rationals, data: vec![ExactScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = ExactScalar::one();
        }
        m
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch("ragged integer rows".into()));
        }
        Self::from_fn(rows.len(), cols, |i, j| ExactScalar::from_int(rows[i][j]))
    }

    /// Column vector.
    pub fn column_vector(entries: Vec<ExactScalar>) -> Result<Self, LinalgError> {
        Self::new(entries.len(), 1, entries)
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

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.data[i * self.cols + j]
    }

    pub(crate) fn row_iter(&self, i: usize) -> impl Iterator<Item = &ExactScalar> {
        self.data[i * self.cols..(i + 1) * self.cols].iter()
    }

    pub fn row(&self, i: usize) -> Vec<ExactScalar> {
        self.row_iter(i).cloned().collect()
    }

    pub fn column(&self, j: usize) -> Vec<ExactScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.rows * self.cols)
            .map(|k| self.get(k % self.rows, k / self.rows).clone())
            .collect();
        ExactMatrix { rows: self.cols, cols: self.rows, field: self.field, data }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        // a submatrix may drop every irrational entry, so recompute the field
        let mut m = ExactMatrix { rows: rows.len(), cols: cols.len(), field: Field::Rationals, data };
        m.field = common_field(&m.data).expect("entries came from one field");
        m
    }

    /// `[self | other]`.
    pub fn hcat(&self, other: &ExactMatrix) -> Result<Self, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot join {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        Self::from_fn(self.rows, cols, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { other.get(i, j - self.cols).clone() }
        })
    }

    pub fn try_mul(&self, other: &ExactMatrix) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        self.field.join(other.field)?;
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(ExactScalar::zero(), |acc, k| {
                let x = self.get(i, k);
                if x.is_zero() { acc } else { &acc + &(x * other.get(k, j)) }
            })
        })
    }

    pub fn try_sub(&self, other: &ExactMatrix) -> Result<Self, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch("subtraction of differently shaped matrices".into()));
        }
        self.field.join(other.field)?;
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    /// `self - mu * I`.
    pub fn shift(&self, mu: &ExactScalar) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        self.field.join(mu.field())?;
        Self::from_fn(self.rows, self.cols, |i, j| {
            if i == j { self.get(i, j) - mu } else { self.get(i, j).clone() }
        })
    }

    pub fn negated(&self) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, field: self.field, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> Result<Vec<ExactScalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        common_field(v)?.join(self.field)?;
        Ok((0..self.rows).map(|i| dot(self.row_iter(i), v)).collect())
    }

    /// Rank over the scalar field by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss::rank(self)
    }

    pub fn determinant(&self) -> Result<ExactScalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(bareiss::determinant(self))
    }

    /// Solves `self * X = rhs` exactly; `SingularMatrix` if `self` is not invertible.
    pub fn solve(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        if rhs.rows != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "right-hand side has {} rows, system has {}",
                rhs.rows, self.rows
            )));
        }
        self.field.join(rhs.field)?;
        let aug = self.hcat(rhs)?;
        let reduced = Rref::compute(&aug, self.cols);
        if reduced.pivots.len() < self.cols {
            return Err(LinalgError::SingularMatrix);
        }
        Ok(reduced.matrix.submatrix(&(0..self.rows).collect::<Vec<_>>(), &(self.cols..aug.cols).collect::<Vec<_>>()))
    }

    pub fn inverse(&self) -> Result<ExactMatrix, LinalgError> {
        self.solve(&ExactMatrix::identity(self.rows))
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<ExactScalar>> {
        let reduced = Rref::compute(self, self.cols);
        let pivot_of: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in reduced.pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        (0..self.cols)
            .filter(|&c| pivot_of[c].is_none())
            .map(|free| {
                (0..self.cols)
                    .map(|c| match pivot_of[c] {
                        Some(r) => -reduced.matrix.get(r, free),
                        None if c == free => ExactScalar::one(),
                        None => ExactScalar::zero(),
                    })
                    .collect()
            })
            .collect()
    }
}

pub(crate) fn dot<'a>(a: impl Iterator<Item = &'a ExactScalar>, b: &[ExactScalar]) -> ExactScalar {
    a.zip(b).fold(ExactScalar::zero(), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() { acc } else { &acc + &(x * y) }
    })
}

/// Reduced row echelon form restricted to the first `pivot_cols` columns.
struct Rref {
    matrix: ExactMatrix,
    pivots: Vec<usize>,
}

impl Rref {
    fn compute(m: &ExactMatrix, pivot_cols: usize) -> Self {
        let (rows, cols) = (m.rows, m.cols);
        let mut data: Vec<Vec<ExactScalar>> = (0..rows).map(|i| m.row(i)).collect();
        let mut pivots = Vec::new();
        for col in 0..pivot_cols {
            let r = pivots.len();
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !data[i][col].is_zero()) else {
                continue;
            };
            data.swap(p, r);
            let inv = &ExactScalar::one() / &data[r][col];
            for x in &mut data[r][col..cols] {
                *x = &*x * &inv;
            }
            let pivot_row = data[r].clone();
            for (i, row) in data.iter_mut().enumerate() {
                if i == r || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for j in col..cols {
                    if !pivot_row[j].is_zero() {
                        row[j] = &row[j] - &(&factor * &pivot_row[j]);
                    }
                }
            }
            pivots.push(col);
        }
        let matrix = ExactMatrix::new(rows, cols, data.into_iter().flatten().collect()).expect("field preserved");
        Rref { matrix, pivots }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row_iter(i).map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn int(rows: &[Vec<i64>]) -> ExactMatrix {
        ExactMatrix::from_integers(rows).unwrap()
    }

    fn quadrangle_one_negative() -> Vec<Vec<i64>> {
        vec![vec![0, -1, 0, 1], vec![-1, 0, 1, 0], vec![0, 1, 0, 1], vec![1, 0, 1, 0]]
    }

    #[test]
    fn rank_basics() {
        assert_eq!(ExactMatrix::identity(3).rank(), 3);
        assert_eq!(int(&vec![vec![1; 4]; 4]).rank(), 1);
        assert_eq!(ExactMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(int(&[vec![0, 0, 1], vec![0, 0, 2], vec![0, 1, 0]]).rank(), 2);
    }

    #[test]
    fn rank_over_quadratic_field() {
        let shifted = int(&quadrangle_one_negative()).shift(&ExactScalar::sqrt(2)).unwrap();
        assert_eq!(shifted.rank(), 2);
        let shifted = int(&quadrangle_one_negative()).shift(&ExactScalar::sqrt(3)).unwrap();
        assert_eq!(shifted.rank(), 4);
    }

    #[test]
    fn mixed_fields_rejected() {
        let m = ExactMatrix::identity(2).shift(&ExactScalar::sqrt(2)).unwrap();
        assert!(matches!(m.shift(&ExactScalar::sqrt(3)), Err(LinalgError::MixedFields { .. })));
        assert!(ExactMatrix::new(1, 2, vec![ExactScalar::sqrt(2), ExactScalar::sqrt(5)]).is_err());
    }

    #[test]
    fn solve_examples() {
        let b = ExactMatrix::column_vector(vec![ExactScalar::from_int(3), ExactScalar::from_ratio(-1, 2)]).unwrap();
        assert_eq!(ExactMatrix::identity(2).solve(&b).unwrap(), b);
        let two = int(&[vec![2, 0], vec![0, 2]]);
        let half = ExactMatrix::column_vector(vec![ExactScalar::from_ratio(3, 2), ExactScalar::from_ratio(-1, 4)]).unwrap();
        assert_eq!(two.solve(&b).unwrap(), half);

        // (sqrt2 I - C)^{-1} e0 for C a single positive edge; adjugate gives (sqrt2, 1)
        let c = int(&[vec![0, 1], vec![1, 0]]);
        let m = c.negated().shift(&-ExactScalar::sqrt(2)).unwrap();
        let e0 = ExactMatrix::column_vector(vec![ExactScalar::one(), ExactScalar::zero()]).unwrap();
        let x = m.solve(&e0).unwrap();
        assert_eq!(x.column(0), vec![ExactScalar::sqrt(2), ExactScalar::one()]);
    }

    #[test]
    fn singular_solve() {
        let m = int(&[vec![1, 1], vec![1, 1]]);
        assert!(matches!(m.solve(&ExactMatrix::identity(2)), Err(LinalgError::SingularMatrix)));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = int(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(m.determinant().unwrap(), ExactScalar::from_int(4));
        let m = ExactMatrix::from_fn(2, 2, |i, j| ExactScalar::from_ratio((i + 2 * j) as i64 + 1, 3)).unwrap();
        // [[1/3, 1], [2/3, 4/3]] -> 4/9 - 2/3 = -2/9
        assert_eq!(m.determinant().unwrap(), ExactScalar::from_ratio(-2, 9));
        let swap = int(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.determinant().unwrap(), ExactScalar::from_int(-1));
        // det(sqrt2 I - C) = 2 - 1
        let m = int(&[vec![0, 1], vec![1, 0]]).negated().shift(&-ExactScalar::sqrt(2)).unwrap();
        assert_eq!(m.determinant().unwrap(), ExactScalar::one());
    }

    #[test]
    fn kernel_spans_null_space() {
        let m = int(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(ExactScalar::is_zero));
        }
        let q = int(&quadrangle_one_negative()).shift(&ExactScalar::sqrt(2)).unwrap();
        let k = q.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(q.mul_vec(v).unwrap().iter().all(ExactScalar::is_zero));
        }
    }

    #[test]
    fn scaled_rows_do_not_change_rank() {
        let third = ExactScalar::Rational(BigRational::new(BigInt::from(1), BigInt::from(3)));
        let m = ExactMatrix::new(2, 2, vec![third.clone(), third.clone(), ExactScalar::one(), ExactScalar::one()]).unwrap();
        assert_eq!(m.rank(), 1);
    }
}
