//! Adding a strictly positive line outside a TP matrix.
//!
//! Each side appends the parameters to the matching scaffolding and reconstructs:
//! above and left extend the Γ-scaffolding, below and right the Ⱡ-scaffolding. Γ paths
//! only travel down and left, Ⱡ paths only up and right, so the original entries are
//! unaffected by the new line.

use std::fmt;

use num::Zero;

use crate::cauchon::{gamma_scaffold, le_scaffold};
use crate::error::{Error, Result};
use crate::matrix::{prefixed_down, suffixed_up, Matrix};
use crate::positivity::ensure_tp;
use crate::rational::{int, is_positive, Rational};
use crate::scaffold::{x_of_t, Orientation, ScaffoldGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BorderSide {
    Above,
    Below,
    Left,
    Right,
}

impl BorderSide {
    pub const ALL: [BorderSide; 4] = [
        BorderSide::Above,
        BorderSide::Below,
        BorderSide::Left,
        BorderSide::Right,
    ];

    /// Parameter count needed to border an `m x n` matrix on this side.
    pub fn param_len(self, m: usize, n: usize) -> usize {
        match self {
            BorderSide::Above | BorderSide::Below => n,
            BorderSide::Left | BorderSide::Right => m,
        }
    }
}

impl fmt::Display for BorderSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BorderSide::Above => "above",
            BorderSide::Below => "below",
            BorderSide::Left => "left",
            BorderSide::Right => "right",
        })
    }
}

/// A strongly positive parameter vector tagged with its side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderParams {
    side: BorderSide,
    params: Vec<Rational>,
}

impl BorderParams {
    pub fn new(side: BorderSide, params: Vec<Rational>) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::VectorLength {
                expected: 1,
                found: 0,
            });
        }
        if let Some(index) = params.iter().position(|p| !is_positive(p)) {
            return Err(Error::NonPositiveParameter { index: index + 1 });
        }
        Ok(Self { side, params })
    }

    pub fn side(&self) -> BorderSide {
        self.side
    }

    pub fn params(&self) -> &[Rational] {
        &self.params
    }

    pub fn into_params(self) -> Vec<Rational> {
        self.params
    }
}

pub fn border(x: &Matrix, params: &BorderParams) -> Result<Matrix> {
    let p = params.params();
    match params.side() {
        BorderSide::Above => border_above(x, p),
        BorderSide::Below => border_below(x, p),
        BorderSide::Left => border_left(x, p),
        BorderSide::Right => border_right(x, p),
    }
}

fn check_params(side: BorderSide, x: &Matrix, p: &[Rational]) -> Result<()> {
    let expected = side.param_len(x.rows(), x.cols());
    if p.len() != expected {
        return Err(Error::VectorLength {
            expected,
            found: p.len(),
        });
    }
    if let Some(index) = p.iter().position(|v| !is_positive(v)) {
        return Err(Error::NonPositiveParameter { index: index + 1 });
    }
    ensure_tp(x)
}

/// New top row: `x_of_t([r; T])` with `T` the Γ-scaffolding of `x`.
pub fn border_above(x: &Matrix, r: &[Rational]) -> Result<Matrix> {
    check_params(BorderSide::Above, x, r)?;
    let t = gamma_scaffold(x)?.with_row_inserted(1, r)?;
    x_of_t(&t, Orientation::Gamma)
}

/// New bottom row: `x_of_t([T; q])` with `T` the Ⱡ-scaffolding of `x`.
pub fn border_below(x: &Matrix, q: &[Rational]) -> Result<Matrix> {
    check_params(BorderSide::Below, x, q)?;
    let t = le_scaffold(x)?;
    let t = t.with_row_inserted(t.rows() + 1, q)?;
    x_of_t(&t, Orientation::Le)
}

/// New first column: `x_of_t([c | T])` with `T` the Γ-scaffolding of `x`.
pub fn border_left(x: &Matrix, c: &[Rational]) -> Result<Matrix> {
    check_params(BorderSide::Left, x, c)?;
    let t = gamma_scaffold(x)?.with_col_inserted(1, c)?;
    x_of_t(&t, Orientation::Gamma)
}

/// New last column: `x_of_t([T | c])` with `T` the Ⱡ-scaffolding of `x`.
pub fn border_right(x: &Matrix, c: &[Rational]) -> Result<Matrix> {
    check_params(BorderSide::Right, x, c)?;
    let t = le_scaffold(x)?;
    let t = t.with_col_inserted(t.cols() + 1, c)?;
    x_of_t(&t, Orientation::Le)
}

/// Reads the parameters back from the scaffolding line that created the border.
pub fn recover_border_params(bordered: &Matrix, side: BorderSide) -> Result<BorderParams> {
    ensure_tp(bordered)?;
    let params = match side {
        BorderSide::Above => gamma_scaffold(bordered)?.row(1).to_vec(),
        BorderSide::Left => gamma_scaffold(bordered)?.col(1),
        BorderSide::Below => {
            let t = le_scaffold(bordered)?;
            t.row(t.rows()).to_vec()
        }
        BorderSide::Right => {
            let t = le_scaffold(bordered)?;
            t.col(t.cols())
        }
    };
    BorderParams::new(side, params)
}

/// Coefficient of `r_ℓ` in the new top entry above column `j`:
/// `det X[{1,2⋯},{j,ℓ+1⋯}] / det X[{1,2⋯},{ℓ,ℓ+1⋯}]`.
pub fn border_above_coeff(x: &Matrix, j: usize, ell: usize) -> Result<Rational> {
    let (m, n) = (x.rows(), x.cols());
    if ell > n {
        return Err(Error::IndexOutOfRange {
            index: ell,
            bound: n,
        });
    }
    if j == 0 || j > ell {
        return Err(Error::IndexOrdering(format!(
            "need 1 <= j <= ell, got j={j}, ell={ell}"
        )));
    }
    let (nr, nc) = prefixed_down(m, n, 1, 2, j, ell + 1);
    let (dr, dc) = prefixed_down(m, n, 1, 2, ell, ell + 1);
    ratio_of_minors(x, (&nr, &nc), (&dr, &dc))
}

/// Coefficient of `q_i` in the new bottom entry below column `j`:
/// `det X[{⋯m−1,m},{⋯i−1,j}] / det X[{⋯m−1,m},{⋯i−1,i}]`.
pub fn border_below_coeff(x: &Matrix, i: usize, j: usize) -> Result<Rational> {
    let (m, n) = (x.rows(), x.cols());
    if j > n {
        return Err(Error::IndexOutOfRange { index: j, bound: n });
    }
    if i == 0 || i > j {
        return Err(Error::IndexOrdering(format!(
            "need 1 <= i <= j, got i={i}, j={j}"
        )));
    }
    let (nr, nc) = suffixed_up(m - 1, m, i - 1, j);
    let (dr, dc) = suffixed_up(m - 1, m, i - 1, i);
    ratio_of_minors(x, (&nr, &nc), (&dr, &dc))
}

pub(crate) fn ratio_of_minors(
    x: &Matrix,
    num: (&[usize], &[usize]),
    den: (&[usize], &[usize]),
) -> Result<Rational> {
    let d = x.minor_at(den.0, den.1);
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x.minor_at(num.0, num.1) / d)
}

/// The new top row assembled from the coefficient formula instead of the scaffolding.
pub fn border_above_by_coefficients(x: &Matrix, r: &[Rational]) -> Result<Matrix> {
    check_params(BorderSide::Above, x, r)?;
    let n = x.cols();
    let mut row = Vec::with_capacity(n);
    for j in 1..=n {
        let mut v = Rational::zero();
        for ell in j..=n {
            v += border_above_coeff(x, j, ell)? * &r[ell - 1];
        }
        row.push(v);
    }
    x.with_row_inserted(1, &row)
}

/// The new bottom row assembled from the coefficient formula instead of the scaffolding.
pub fn border_below_by_coefficients(x: &Matrix, q: &[Rational]) -> Result<Matrix> {
    check_params(BorderSide::Below, x, q)?;
    let n = x.cols();
    let mut row = Vec::with_capacity(n);
    for j in 1..=n {
        let mut v = Rational::zero();
        for i in 1..=j {
            v += border_below_coeff(x, i, j)? * &q[i - 1];
        }
        row.push(v);
    }
    x.with_row_inserted(x.rows() + 1, &row)
}

/// Sum of weights of the Γ paths from the new top row to column `j` whose first turn is
/// in column `ℓ`, with unit weights on the new row.
pub fn border_above_coeff_by_paths(x: &Matrix, j: usize, ell: usize) -> Result<Rational> {
    let n = x.cols();
    if ell > n {
        return Err(Error::IndexOutOfRange {
            index: ell,
            bound: n,
        });
    }
    if j == 0 || j > ell {
        return Err(Error::IndexOrdering(format!(
            "need 1 <= j <= ell, got j={j}, ell={ell}"
        )));
    }
    let ones = vec![int(1); n];
    let t = gamma_scaffold(x)?.with_row_inserted(1, &ones)?;
    let g = ScaffoldGraph::new(t, Orientation::Gamma)?;
    let mut sum = Rational::zero();
    for p in g.enumerate_paths(1, j)? {
        if p.first_turn().1 == ell {
            sum += g.path_weight(&p)?;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn x42() -> Matrix {
        Matrix::from_i64_rows(&[&[4, 2, 1], &[1, 1, 1]]).unwrap()
    }

    #[test]
    fn above_coefficients() {
        let x = x42();
        assert_eq!(border_above_coeff(&x, 1, 2).unwrap(), int(3));
        assert_eq!(border_above_coeff(&x, 1, 3).unwrap(), int(4));
        for j in 1..=3 {
            assert_eq!(border_above_coeff(&x, j, j).unwrap(), int(1));
        }
        assert!(matches!(
            border_above_coeff(&x, 3, 2),
            Err(Error::IndexOrdering(_))
        ));
        assert!(matches!(
            border_above_coeff(&x, 1, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn above_coefficients_match_path_sums() {
        let x = x42();
        for ell in 1..=3 {
            for j in 1..=ell {
                assert_eq!(
                    border_above_coeff(&x, j, ell).unwrap(),
                    border_above_coeff_by_paths(&x, j, ell).unwrap()
                );
            }
        }
    }

    #[test]
    fn border_above_example() {
        let x = x42();
        let want = Matrix::from_i64_rows(&[&[15, 6, 2], &[4, 2, 1], &[1, 1, 1]]).unwrap();
        let got = border_above(&x, &ints(&[1, 2, 2])).unwrap();
        assert_eq!(got, want);
        assert_eq!(got.get(1, 1), &int(15));
        assert_eq!(
            border_above_by_coefficients(&x, &ints(&[1, 2, 2])).unwrap(),
            want
        );
        let back = recover_border_params(&want, BorderSide::Above).unwrap();
        assert_eq!(back.params(), &ints(&[1, 2, 2])[..]);
    }

    #[test]
    fn border_below_example() {
        let x = Matrix::from_i64_rows(&[&[6, 3, 1], &[3, 2, 1]]).unwrap();
        let got = border_below(&x, &ints(&[9, 2, 1])).unwrap();
        assert_eq!(got.row(3), &ints(&[9, 8, 6])[..]);
        assert_eq!(
            border_below_by_coefficients(&x, &ints(&[9, 2, 1])).unwrap(),
            got
        );
        for j in 1..=3 {
            assert_eq!(border_below_coeff(&x, j, j).unwrap(), int(1));
        }
    }

    #[test]
    fn scalar_borders() {
        let one = Matrix::from_i64_rows(&[&[1]]).unwrap();
        assert_eq!(
            border_above(&one, &ints(&[1])).unwrap(),
            Matrix::from_i64_rows(&[&[1], &[1]]).unwrap()
        );
        assert_eq!(
            border_below(&one, &ints(&[2])).unwrap(),
            Matrix::from_i64_rows(&[&[1], &[2]]).unwrap()
        );
        let left = border_left(&one, &ints(&[3])).unwrap();
        assert_eq!(left, Matrix::from_i64_rows(&[&[3, 1]]).unwrap());
        let right = border_right(&one, &ints(&[3])).unwrap();
        assert_eq!(right, Matrix::from_i64_rows(&[&[1, 3]]).unwrap());
        for side in BorderSide::ALL {
            let p = BorderParams::new(side, ints(&[5])).unwrap();
            let b = border(&one, &p).unwrap();
            assert_eq!(recover_border_params(&b, side).unwrap(), p);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let x = x42();
        assert_eq!(
            border_above(&x, &ints(&[1, 0, 2])),
            Err(Error::NonPositiveParameter { index: 2 })
        );
        assert_eq!(
            border_left(&x, &ints(&[1, 2, 3])),
            Err(Error::VectorLength {
                expected: 2,
                found: 3
            })
        );
        assert!(BorderParams::new(BorderSide::Above, vec![]).is_err());
        let not_tp = Matrix::from_i64_rows(&[&[1, 2], &[2, 1]]).unwrap();
        assert_eq!(
            border_below(&not_tp, &ints(&[1, 1])),
            Err(Error::NotTotallyPositive)
        );
        assert_eq!(
            recover_border_params(&not_tp, BorderSide::Above),
            Err(Error::NotTotallyPositive)
        );
    }

    #[test]
    fn sides_are_related_by_anti_transpose() {
        let x = x42();
        let q = ints(&[9, 2, 1]);
        let rev: Vec<Rational> = q.iter().rev().cloned().collect();
        assert_eq!(
            border_below(&x, &q).unwrap(),
            border_left(&x.anti_transpose(), &rev)
                .unwrap()
                .anti_transpose()
        );
        let c = ints(&[2, 5]);
        let rev: Vec<Rational> = c.iter().rev().cloned().collect();
        assert_eq!(
            border_right(&x, &c).unwrap(),
            border_above(&x.anti_transpose(), &rev)
                .unwrap()
                .anti_transpose()
        );
    }
}
