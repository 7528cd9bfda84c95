#![allow(dead_code)]

use num::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;
use tp_scaffold::rational::ratio;
use tp_scaffold::{x_of_t, Matrix, Orientation, Rational};

/// Cofactor expansion along the first row.
pub fn laplace_det(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return a[0][0].clone();
    }
    let mut total = Rational::zero();
    for (c, pivot) in a[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let sub: Vec<Vec<Rational>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = pivot * laplace_det(&sub);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn laplace_minor(x: &Matrix, rows: &[usize], cols: &[usize]) -> Rational {
    let block: Vec<Vec<Rational>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| x.get(i, j).clone()).collect())
        .collect();
    laplace_det(&block)
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            out.push((1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect());
        }
    }
    out.sort();
    out
}

/// Every square `(I, J)` pair of an `m x n` matrix.
pub fn all_index_pairs(m: usize, n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for k in 1..=m.min(n) {
        for i in subsets(m, k) {
            for j in subsets(n, k) {
                out.push((i.clone(), j));
            }
        }
    }
    out
}

/// Total positivity decided by Laplace expansion of every minor.
pub fn tp_by_laplace(x: &Matrix) -> bool {
    all_index_pairs(x.rows(), x.cols())
        .iter()
        .all(|(i, j)| laplace_minor(x, i, j).is_positive())
}

pub fn random_rational(rng: &mut StdRng) -> Rational {
    ratio(rng.gen_range(1..=9), rng.gen_range(1..=4))
}

pub fn random_positive(rng: &mut StdRng, m: usize, n: usize) -> Matrix {
    Matrix::from_fn(m, n, |_, _| random_rational(rng)).unwrap()
}

pub fn random_vector(rng: &mut StdRng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng)).collect()
}

/// A TP matrix built as the Γ path matrix of a random positive weight matrix.
pub fn random_tp(rng: &mut StdRng, m: usize, n: usize) -> Matrix {
    x_of_t(&random_positive(rng, m, n), Orientation::Gamma).unwrap()
}

pub fn m(rows: &[&[&str]]) -> Matrix {
    Matrix::from_str_rows(rows).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter()
        .map(|&x| Rational::from_integer(x.into()))
        .collect()
}
