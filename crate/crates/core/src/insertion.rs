//! Inserting a row between rows `k` and `k+1` of a TP matrix.
//!
//! The new row is determined by three strongly positive vectors. `r` is the Γ-scaffolding
//! row of the new line (a border above the lower block), `q` its Ⱡ-scaffolding row (a
//! border below the upper block). The first equation set says both borders give the
//! same row: `A_r r = A_q q`. The second ties `r` to the upper block through `X̂`:
//! `r = B_s s`.

use std::fmt;

use num::{One, Zero};

use crate::bordering::ratio_of_minors;
use crate::cauchon::{cauchon_trace, gamma_scaffold, StepOrder};
use crate::error::{Error, Result};
use crate::matrix::{prefixed_down, suffixed_up, Matrix};
use crate::positivity::ensure_tp;
use crate::rational::{is_positive, Rational};
use crate::scaffold::{x_of_t, Orientation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionSystem {
    n: usize,
    k: usize,
    a_r: Matrix,
    a_q: Matrix,
    b_s: Matrix,
    hat_x: Matrix,
}

impl InsertionSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Upper triangular, unit diagonal: `(A_r r)_j = Σ_{ℓ≥j} a_{jℓ} r_ℓ`.
    pub fn a_r(&self) -> &Matrix {
        &self.a_r
    }

    /// Lower triangular, unit diagonal: `(A_q q)_j = Σ_{i≤j} a_{ji} q_i`.
    pub fn a_q(&self) -> &Matrix {
        &self.a_q
    }

    /// Lower triangular, unit diagonal: `r_j = Σ_{i≤j} b_{ji} s_i`.
    pub fn b_s(&self) -> &Matrix {
        &self.b_s
    }

    pub fn hat_x(&self) -> &Matrix {
        &self.hat_x
    }

    /// The row produced by `r`: the common value of both sides of the first set.
    pub fn row_from_r(&self, r: &[Rational]) -> Vec<Rational> {
        mat_vec(&self.a_r, r)
    }
}

/// A candidate `(r, q, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub r: Vec<Rational>,
    pub q: Vec<Rational>,
    pub s: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionSolution {
    pub r: Vec<Rational>,
    pub q: Vec<Rational>,
    pub s: Vec<Rational>,
    pub inserted_row: Vec<Rational>,
}

impl InsertionSolution {
    pub fn candidate(&self) -> Candidate {
        Candidate {
            r: self.r.clone(),
            q: self.q.clone(),
            s: self.s.clone(),
        }
    }
}

/// First failure found by [`verify_solution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionViolation {
    NonPositive {
        vector: char,
        index: usize,
    },
    /// `(A_r r)_j != (A_q q)_j`.
    BorderEquation {
        j: usize,
        left: Rational,
        right: Rational,
    },
    /// `r_j != (B_s s)_j`.
    HatEquation {
        j: usize,
        left: Rational,
        right: Rational,
    },
}

impl fmt::Display for SolutionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionViolation::NonPositive { vector, index } => {
                write!(f, "{vector}_{index} is not strictly positive")
            }
            SolutionViolation::BorderEquation { j, left, right } => {
                write!(f, "r/q equation {j} fails: {left} != {right}")
            }
            SolutionViolation::HatEquation { j, left, right } => {
                write!(f, "r/s equation {j} fails: {left} != {right}")
            }
        }
    }
}

fn check_position(x: &Matrix, k: usize) -> Result<()> {
    let max = x.rows().saturating_sub(1);
    if k == 0 || k > max {
        return Err(Error::InsertionPosition { k, max });
    }
    Ok(())
}

/// `X̂ = X(T₁)` where `T₁` is the first `k` rows of the Γ-scaffolding of `x`.
///
/// Also read off the Cauchon trace as the first `k` rows of `X^{(k+1,1)}`; a
/// disagreement is reported as [`Error::Inconsistent`].
pub fn hat_matrix(x: &Matrix, k: usize) -> Result<Matrix> {
    check_position(x, k)?;
    ensure_tp(x)?;
    let hat = x_of_t(&gamma_scaffold(x)?.row_block(1, k)?, Orientation::Gamma)?;
    if hat != hat_matrix_from_trace(x, k)? {
        return Err(Error::Inconsistent(
            "scaffolding prefix and Cauchon trace disagree on the hat matrix".into(),
        ));
    }
    Ok(hat)
}

/// First `k` rows of `X^{(k+1,1)}` in the Γ-ordered trace.
pub fn hat_matrix_from_trace(x: &Matrix, k: usize) -> Result<Matrix> {
    check_position(x, k)?;
    let trace = cauchon_trace(x, StepOrder::ReverseLex)?;
    trace.matrix_at((k + 1, 1))?.row_block(1, k)
}

pub fn build_insertion_system(x: &Matrix, k: usize) -> Result<InsertionSystem> {
    let hat_x = hat_matrix(x, k)?;
    let (m, n) = (x.rows(), x.cols());

    let mut a_r = Matrix::from_fn(n, n, |_, _| Rational::zero())?;
    for j in 1..=n {
        for ell in j..=n {
            let num = prefixed_down(m, n, k + 1, k + 2, j, ell + 1);
            let den = prefixed_down(m, n, k + 1, k + 2, ell, ell + 1);
            a_r.set(
                j,
                ell,
                ratio_of_minors(x, (&num.0, &num.1), (&den.0, &den.1))?,
            );
        }
    }
    let a_q = below_coefficients(x, k)?;
    let b_s = below_coefficients(&hat_x, k)?;
    Ok(InsertionSystem {
        n,
        k,
        a_r,
        a_q,
        b_s,
        hat_x,
    })
}

/// `c_{ji} = det M[{⋯k−1,k},{⋯i−1,j}] / det M[{⋯k−1,k},{⋯i−1,i}]` for `i ≤ j`.
fn below_coefficients(mx: &Matrix, k: usize) -> Result<Matrix> {
    let n = mx.cols();
    let mut c = Matrix::from_fn(n, n, |_, _| Rational::zero())?;
    for j in 1..=n {
        for i in 1..=j {
            let num = suffixed_up(k - 1, k, i - 1, j);
            let den = suffixed_up(k - 1, k, i - 1, i);
            c.set(
                j,
                i,
                ratio_of_minors(mx, (&num.0, &num.1), (&den.0, &den.1))?,
            );
        }
    }
    Ok(c)
}

fn mat_vec(a: &Matrix, v: &[Rational]) -> Vec<Rational> {
    (1..=a.rows())
        .map(|i| a.row(i).iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// Solves `A_q q = rhs` by forward substitution.
fn solve_lower_unit(a: &Matrix, rhs: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(rhs.len());
    for j in 1..=rhs.len() {
        let mut v = rhs[j - 1].clone();
        for i in 1..j {
            v -= a.get(j, i) * &out[i - 1];
        }
        out.push(v / a.get(j, j));
    }
    out
}

/// `(r, q)` induced by an arbitrary `s` (not necessarily positive).
pub fn induced_by_s(
    sys: &InsertionSystem,
    s: &[Rational],
) -> Result<(Vec<Rational>, Vec<Rational>)> {
    check_len(sys.n, s.len())?;
    let r = mat_vec(&sys.b_s, s);
    let q = solve_lower_unit(&sys.a_q, &mat_vec(&sys.a_r, &r));
    Ok((r, q))
}

/// `q_j = α_j + β_j s_n` when `s_1 = ⋯ = s_{n−1} = 1`.
pub fn affine_forms(sys: &InsertionSystem) -> Result<Vec<(Rational, Rational)>> {
    let n = sys.n;
    let mut s = vec![Rational::one(); n];
    s[n - 1] = Rational::zero();
    let (_, alpha) = induced_by_s(sys, &s)?;
    let mut unit = vec![Rational::zero(); n];
    unit[n - 1] = Rational::one();
    let (_, beta) = induced_by_s(sys, &unit)?;
    Ok(alpha.into_iter().zip(beta).collect())
}

/// Constructive solution: `s_1 = ⋯ = s_{n−1} = 1` and the least integer `s_n ≥ 1` with
/// every `q_j ≥ 1`.
pub fn solve_strongly_positive(sys: &InsertionSystem) -> Result<InsertionSolution> {
    let forms = affine_forms(sys)?;
    let mut s_n = Rational::one();
    for (j, (alpha, beta)) in forms.iter().enumerate() {
        if !is_positive(beta) {
            return Err(Error::Inconsistent(format!(
                "coefficient of s_n in q_{} is {beta}, expected > 0",
                j + 1
            )));
        }
        let need = ((Rational::one() - alpha) / beta).ceil();
        if need > s_n {
            s_n = need;
        }
    }
    let mut s = vec![Rational::one(); sys.n];
    s[sys.n - 1] = s_n;
    let (r, q) = induced_by_s(sys, &s)?;
    let inserted_row = sys.row_from_r(&r);
    let sol = InsertionSolution {
        r,
        q,
        s,
        inserted_row,
    };
    if let Some(v) = verify_solution(sys, &sol.candidate())? {
        return Err(Error::Inconsistent(format!("solver output rejected: {v}")));
    }
    Ok(sol)
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::VectorLength { expected, found });
    }
    Ok(())
}

/// `None` when the candidate is strongly positive and satisfies both equation sets.
pub fn verify_solution(
    sys: &InsertionSystem,
    cand: &Candidate,
) -> Result<Option<SolutionViolation>> {
    for v in [&cand.r, &cand.q, &cand.s] {
        check_len(sys.n, v.len())?;
    }
    for (name, v) in [('r', &cand.r), ('q', &cand.q), ('s', &cand.s)] {
        if let Some(i) = v.iter().position(|x| !is_positive(x)) {
            return Ok(Some(SolutionViolation::NonPositive {
                vector: name,
                index: i + 1,
            }));
        }
    }
    let left = mat_vec(&sys.a_r, &cand.r);
    let right = mat_vec(&sys.a_q, &cand.q);
    for (j, (l, r)) in left.into_iter().zip(right).enumerate() {
        if l != r {
            return Ok(Some(SolutionViolation::BorderEquation {
                j: j + 1,
                left: l,
                right: r,
            }));
        }
    }
    let bs = mat_vec(&sys.b_s, &cand.s);
    for (j, (l, r)) in cand.r.iter().zip(bs).enumerate() {
        if *l != r {
            return Ok(Some(SolutionViolation::HatEquation {
                j: j + 1,
                left: l.clone(),
                right: r,
            }));
        }
    }
    Ok(None)
}

/// Inserts a row between rows `k` and `k+1`, using `candidate` if given and the
/// constructive solver otherwise.
pub fn insert_row(x: &Matrix, k: usize, candidate: Option<&Candidate>) -> Result<Matrix> {
    insert_row_detailed(x, k, candidate).map(|(m, _)| m)
}

pub fn insert_row_detailed(
    x: &Matrix,
    k: usize,
    candidate: Option<&Candidate>,
) -> Result<(Matrix, InsertionSolution)> {
    let sys = build_insertion_system(x, k)?;
    let sol = match candidate {
        Some(c) => {
            if let Some(v) = verify_solution(&sys, c)? {
                return Err(Error::InvalidCandidate(v.to_string()));
            }
            InsertionSolution {
                r: c.r.clone(),
                q: c.q.clone(),
                s: c.s.clone(),
                inserted_row: sys.row_from_r(&c.r),
            }
        }
        None => solve_strongly_positive(&sys)?,
    };
    Ok((x.with_row_inserted(k + 1, &sol.inserted_row)?, sol))
}

/// Column version by transposition; `candidate` refers to the transposed problem.
pub fn insert_column(x: &Matrix, k: usize, candidate: Option<&Candidate>) -> Result<Matrix> {
    insert_column_detailed(x, k, candidate).map(|(m, _)| m)
}

pub fn insert_column_detailed(
    x: &Matrix,
    k: usize,
    candidate: Option<&Candidate>,
) -> Result<(Matrix, InsertionSolution)> {
    let (m, sol) = insert_row_detailed(&x.transpose(), k, candidate)?;
    Ok((m.transpose(), sol))
}

/// Reads `(r, q, s)` back from a TP matrix whose row `k+1` was inserted into `x`.
///
/// `r` is the Γ-scaffolding row of the new line in the lower block, `q` its Ⱡ-scaffolding
/// row in the upper block, and `s` solves `r = B_s s`.
pub fn recover_solution(bordered: &Matrix, k: usize) -> Result<Candidate> {
    let m = bordered.rows();
    if m < 3 || k == 0 || k + 1 >= m {
        return Err(Error::InsertionPosition {
            k,
            max: m.saturating_sub(2),
        });
    }
    ensure_tp(bordered)?;
    let x = bordered.without_row(k + 1)?;
    let sys = build_insertion_system(&x, k)?;
    let r = gamma_scaffold(&bordered.row_block(k + 1, m)?)?
        .row(1)
        .to_vec();
    let upper = crate::cauchon::le_scaffold(&bordered.row_block(1, k + 1)?)?;
    let q = upper.row(k + 1).to_vec();
    let s = solve_lower_unit(&sys.b_s, &r);
    Ok(Candidate { r, q, s })
}
