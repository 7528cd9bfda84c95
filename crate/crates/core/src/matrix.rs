//! Dense exact matrices with 1-based indexing, submatrix shorthands and minors.

use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A dense `rows x cols` matrix of exact rationals.
///
/// All public accessors use 1-based `(row, col)` positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// A nonempty, strictly increasing set of 1-based line indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        if indices.is_empty() || !increasing || indices[0] == 0 {
            return Err(Error::InvalidIndexSet(indices));
        }
        Ok(IndexSet(indices))
    }

    /// `{first, first+1, ..., last}`.
    pub fn range(first: usize, last: usize) -> Result<Self> {
        Self::new((first..=last).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn max(&self) -> usize {
        *self.0.last().expect("index sets are nonempty")
    }

    fn check_bound(&self, bound: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i > bound) {
            Some(&index) => Err(Error::IndexOutOfRange { index, bound }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(m * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedRows {
                    row: i + 1,
                    expected: n,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Matrix::new(m, n, data)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Builds a matrix from string tokens such as `"7/2"`.
    pub fn from_str_rows(rows: &[&[&str]]) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let mut parsed = Vec::with_capacity(row.len());
            for tok in row.iter() {
                parsed.push(
                    crate::rational::parse_rational(tok)
                        .ok_or_else(|| Error::InvalidCandidate(format!("bad rational {tok:?}")))?,
                );
            }
            out.push(parsed);
        }
        Matrix::from_rows(out)
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Rational,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 1-based position `(i, j)`. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "position ({i},{j}) outside {}x{}",
            self.rows,
            self.cols
        );
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.data[(i - 1) * self.cols + (j - 1)] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        assert!((1..=self.rows).contains(&i));
        &self.data[(i - 1) * self.cols..i * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (1..=self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    /// True when every entry is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.data.iter().all(Signed::is_positive)
    }

    /// First entry (in row-major order) that is not strictly positive.
    pub fn first_non_positive(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|x| !x.is_positive())
            .map(|p| (p / self.cols + 1, p % self.cols + 1))
    }

    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Matrix> {
        rows.check_bound(self.rows)?;
        cols.check_bound(self.cols)?;
        Ok(self.select(rows.as_slice(), cols.as_slice()))
    }

    fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Rows `first..=last` as a new matrix.
    pub fn row_block(&self, first: usize, last: usize) -> Result<Matrix> {
        let rows = IndexSet::range(first, last)?;
        let cols = IndexSet::range(1, self.cols)?;
        self.submatrix(&rows, &cols)
    }

    /// `A[{i⋯},{j⋯}]`: the largest contiguous submatrix with `(i, j)` top-left.
    pub fn leading_contiguous(&self, i: usize, j: usize) -> Result<Matrix> {
        self.check_position(i, j)?;
        let (r, c) = contiguous_down(self.rows, self.cols, i, j);
        Ok(self.select(&r, &c))
    }

    /// `A[{⋯i},{⋯j}]`: the largest contiguous submatrix with `(i, j)` bottom-right.
    pub fn trailing_contiguous(&self, i: usize, j: usize) -> Result<Matrix> {
        self.check_position(i, j)?;
        let (r, c) = contiguous_up(i, j);
        Ok(self.select(&r, &c))
    }

    /// `A[{i0,i⋯},{j0,j⋯}]` for `i0 < i`, `j0 < j`.
    pub fn leading_with_prefix(&self, i0: usize, i: usize, j0: usize, j: usize) -> Result<Matrix> {
        self.check_position(i0, j0)?;
        self.check_position(i, j)?;
        if i0 >= i || j0 >= j {
            return Err(Error::IndexOrdering(format!(
                "prefix ({i0},{j0}) must lie strictly above-left of ({i},{j})"
            )));
        }
        let (r, c) = prefixed_down(self.rows, self.cols, i0, i, j0, j);
        Ok(self.select(&r, &c))
    }

    /// `A[{⋯i,i0},{⋯j,j0}]` for `i0 > i`, `j0 > j`.
    pub fn trailing_with_suffix(&self, i: usize, i0: usize, j: usize, j0: usize) -> Result<Matrix> {
        self.check_position(i0, j0)?;
        self.check_position(i, j)?;
        if i0 <= i || j0 <= j {
            return Err(Error::IndexOrdering(format!(
                "suffix ({i0},{j0}) must lie strictly below-right of ({i},{j})"
            )));
        }
        let (r, c) = suffixed_up(i, i0, j, j0);
        Ok(self.select(&r, &c))
    }

    fn check_position(&self, i: usize, j: usize) -> Result<()> {
        if !(1..=self.rows).contains(&i) {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.rows,
            });
        }
        if !(1..=self.cols).contains(&j) {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.cols,
            });
        }
        Ok(())
    }

    /// `det A[I, J]`.
    pub fn minor(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Rational> {
        if rows.len() != cols.len() {
            return Err(Error::SizeMismatch {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        rows.check_bound(self.rows)?;
        cols.check_bound(self.cols)?;
        Ok(self.minor_at(rows.as_slice(), cols.as_slice()))
    }

    /// Minor on raw index lists. The empty minor is 1.
    ///
    /// Callers guarantee equal lengths and in-range indices.
    pub(crate) fn minor_at(&self, rows: &[usize], cols: &[usize]) -> Rational {
        debug_assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return Rational::one();
        }
        let block: Vec<Vec<Rational>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        bareiss_det(block)
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let all: Vec<usize> = (1..=self.rows).collect();
        Ok(self.minor_at(&all, &all))
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 1..=self.cols {
            for i in 1..=self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Reflection across the anti-diagonal: `out[i,j] = self[m+1-j, n+1-i]`.
    pub fn anti_transpose(&self) -> Matrix {
        let (m, n) = (self.rows, self.cols);
        let mut data = Vec::with_capacity(self.data.len());
        for i in 1..=n {
            for j in 1..=m {
                data.push(self.get(m + 1 - j, n + 1 - i).clone());
            }
        }
        Matrix {
            rows: n,
            cols: m,
            data,
        }
    }

    /// Inserts `row` so that it becomes row `at` (1-based) of the result.
    pub fn with_row_inserted(&self, at: usize, row: &[Rational]) -> Result<Matrix> {
        if row.len() != self.cols {
            return Err(Error::VectorLength {
                expected: self.cols,
                found: row.len(),
            });
        }
        if !(1..=self.rows + 1).contains(&at) {
            return Err(Error::IndexOutOfRange {
                index: at,
                bound: self.rows + 1,
            });
        }
        let split = (at - 1) * self.cols;
        let mut data = Vec::with_capacity(self.data.len() + self.cols);
        data.extend_from_slice(&self.data[..split]);
        data.extend_from_slice(row);
        data.extend_from_slice(&self.data[split..]);
        Ok(Matrix {
            rows: self.rows + 1,
            cols: self.cols,
            data,
        })
    }

    /// Inserts `col` so that it becomes column `at` (1-based) of the result.
    pub fn with_col_inserted(&self, at: usize, col: &[Rational]) -> Result<Matrix> {
        Ok(self.transpose().with_row_inserted(at, col)?.transpose())
    }

    pub fn without_row(&self, i: usize) -> Result<Matrix> {
        self.check_position(i, 1)?;
        if self.rows == 1 {
            return Err(Error::EmptyMatrix {
                rows: 0,
                cols: self.cols,
            });
        }
        let rows: Vec<usize> = (1..=self.rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (1..=self.cols).collect();
        Ok(self.select(&rows, &cols))
    }

    pub fn without_col(&self, j: usize) -> Result<Matrix> {
        Ok(self.transpose().without_row(j)?.transpose())
    }
}

impl fmt::Display for Matrix {
    /// Writes the plain-text matrix format: a `m n` header, then one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 1..=self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Index lists of `A[{i⋯},{j⋯}]` in an `m x n` matrix; empty when `i > m` or `j > n`.
pub(crate) fn contiguous_down(m: usize, n: usize, i: usize, j: usize) -> (Vec<usize>, Vec<usize>) {
    if i > m || j > n {
        return (Vec::new(), Vec::new());
    }
    let k = (m - i).min(n - j);
    ((i..=i + k).collect(), (j..=j + k).collect())
}

/// Index lists of `A[{⋯i},{⋯j}]`; empty when `i == 0` or `j == 0`.
pub(crate) fn contiguous_up(i: usize, j: usize) -> (Vec<usize>, Vec<usize>) {
    if i == 0 || j == 0 {
        return (Vec::new(), Vec::new());
    }
    let k = (i - 1).min(j - 1);
    ((i - k..=i).collect(), (j - k..=j).collect())
}

/// Index lists of `A[{i0,i⋯},{j0,j⋯}]`; the contiguous tail may be empty.
pub(crate) fn prefixed_down(
    m: usize,
    n: usize,
    i0: usize,
    i: usize,
    j0: usize,
    j: usize,
) -> (Vec<usize>, Vec<usize>) {
    let (mut r, mut c) = (vec![i0], vec![j0]);
    let (tr, tc) = contiguous_down(m, n, i, j);
    r.extend(tr);
    c.extend(tc);
    (r, c)
}

/// Index lists of `A[{⋯i,i0},{⋯j,j0}]`; the contiguous head may be empty.
pub(crate) fn suffixed_up(i: usize, i0: usize, j: usize, j0: usize) -> (Vec<usize>, Vec<usize>) {
    let (mut r, mut c) = contiguous_up(i, j);
    r.push(i0);
    c.push(j0);
    (r, c)
}

/// All `k`-subsets of `{1..=n}` in lexicographic order.
pub(crate) fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(from: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for v in from..=n {
            if n + 1 - v < need {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Fraction-free (Bareiss) determinant after clearing each row's denominators.
fn bareiss_det(block: Vec<Vec<Rational>>) -> Rational {
    let n = block.len();
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in block {
        let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        a.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
        scale *= lcm;
    }

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    let det = if negate { -det } else { det };
    Rational::new(det, scale)
}
