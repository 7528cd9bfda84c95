//! Scaffolding graphs and their path model.
//!
//! A positive `m x n` weight matrix `T` defines a vertex-weighted grid graph with one
//! extra vertex per row and per column. In the Γ orientation horizontal edges run right
//! to left from each row vertex and vertical edges run top to bottom into the column
//! vertices; the Ⱡ orientation is the anti-transposed arrangement with every edge
//! reversed. Summing path weights from row vertex `i` to column vertex `j` gives the
//! entry `x_ij` of the path matrix `X(T)`, which is always totally positive, and its
//! minors are sums over vertex-disjoint path systems.
//!
//! Edges are never stored: adjacency is a function of the orientation and the grid size.

mod dot;
mod path;

use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{contiguous_down, prefixed_down, IndexSet, Matrix};
use crate::rational::Rational;

pub use path::{Path, PathSystem};

/// Enumerations that would produce more items than this are refused.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// Edges right-to-left and top-to-bottom.
    Gamma,
    /// Edges left-to-right and bottom-to-top.
    Le,
}

impl Orientation {
    fn advances_row(self, from: usize, to: usize) -> bool {
        match self {
            Orientation::Gamma => to > from,
            Orientation::Le => to < from,
        }
    }

    fn advances_col(self, from: usize, to: usize) -> bool {
        match self {
            Orientation::Gamma => to < from,
            Orientation::Le => to > from,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Gamma => "gamma",
            Orientation::Le => "le",
        })
    }
}

/// The scaffolding graph `G_{m,n}(T)` of a strictly positive weight matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaffoldGraph {
    orientation: Orientation,
    weights: Matrix,
}

impl ScaffoldGraph {
    pub fn new(weights: Matrix, orientation: Orientation) -> Result<Self> {
        if let Some((row, col)) = weights.first_non_positive() {
            return Err(Error::NonPositiveWeight { row, col });
        }
        Ok(ScaffoldGraph {
            orientation,
            weights,
        })
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn rows(&self) -> usize {
        self.weights.rows()
    }

    pub fn cols(&self) -> usize {
        self.weights.cols()
    }

    pub fn weights(&self) -> &Matrix {
        &self.weights
    }

    fn check_endpoints(&self, i: usize, j: usize) -> Result<()> {
        if !(1..=self.rows()).contains(&i) {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.rows(),
            });
        }
        if !(1..=self.cols()).contains(&j) {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.cols(),
            });
        }
        Ok(())
    }

    /// `w(P)`: weights at even corners divided by weights at odd corners.
    pub fn path_weight(&self, path: &Path) -> Result<Rational> {
        if path.orientation() != self.orientation {
            return Err(Error::MalformedPath(format!(
                "{} path in a {} graph",
                path.orientation(),
                self.orientation
            )));
        }
        if !path.in_grid(self.rows(), self.cols()) {
            return Err(Error::MalformedPath(format!(
                "{path} leaves the {}x{} grid",
                self.rows(),
                self.cols()
            )));
        }
        Ok(self.weight_unchecked(path))
    }

    fn weight_unchecked(&self, path: &Path) -> Rational {
        let num = path
            .numerator_turns()
            .fold(Rational::one(), |acc, (r, c)| acc * self.weights.get(r, c));
        let den = path
            .denominator_turns()
            .fold(Rational::one(), |acc, (r, c)| acc * self.weights.get(r, c));
        num / den
    }

    /// The unique single-turn path from row vertex `i` to column vertex `j`.
    pub fn primary_path(&self, i: usize, j: usize) -> Result<Path> {
        self.check_endpoints(i, j)?;
        Ok(Path::primary(self.orientation, i, j))
    }

    /// Number of paths from row vertex `i` to column vertex `j`.
    pub fn path_count(&self, i: usize, j: usize) -> Result<u128> {
        self.check_endpoints(i, j)?;
        Ok(path::count(
            self.orientation,
            self.rows(),
            self.cols(),
            i,
            j,
        ))
    }

    /// Every path from row vertex `i` to column vertex `j`, ordered by turn sequence.
    pub fn enumerate_paths(&self, i: usize, j: usize) -> Result<Vec<Path>> {
        let count = self.path_count(i, j)?;
        if count > ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                what: "path enumeration",
                detail: format!("{count} paths from {i} to {j}"),
            });
        }
        let first_cols: Vec<usize> = match self.orientation {
            Orientation::Gamma => (j..=self.cols()).collect(),
            Orientation::Le => (1..=j).collect(),
        };
        Ok(path::enumerate(
            self.orientation,
            self.rows(),
            i,
            j,
            first_cols.into_iter(),
        ))
    }

    /// Paths `P_{≤ℓ}: i → j`, those whose first turn lies in a column `≤ ell`.
    pub fn enumerate_paths_bounded(&self, i: usize, j: usize, ell: usize) -> Result<Vec<Path>> {
        if self.orientation != Orientation::Gamma {
            return Err(Error::UnsupportedOrientation(
                "bounded enumeration is defined for Γ graphs",
            ));
        }
        self.check_endpoints(i, j)?;
        if ell < j || ell > self.cols() {
            return Err(Error::IndexOrdering(format!(
                "bound {ell} must satisfy {j} <= bound <= {}",
                self.cols()
            )));
        }
        Ok(self
            .enumerate_paths(i, j)?
            .into_iter()
            .filter(|p| p.first_turn().1 <= ell)
            .collect())
    }

    /// `Σ_{P_{≤ℓ}: i→j} w(P)` by explicit enumeration.
    pub fn blocked_path_sum(&self, i: usize, j: usize, ell: usize) -> Result<Rational> {
        Ok(self
            .enumerate_paths_bounded(i, j, ell)?
            .iter()
            .map(|p| self.weight_unchecked(p))
            .sum())
    }

    /// `X(T)` as explicit sums over enumerated paths.
    pub fn path_matrix_by_enumeration(&self) -> Result<Matrix> {
        let mut data = Vec::with_capacity(self.rows() * self.cols());
        for i in 1..=self.rows() {
            for j in 1..=self.cols() {
                let sum: Rational = self
                    .enumerate_paths(i, j)?
                    .iter()
                    .map(|p| self.weight_unchecked(p))
                    .sum();
                data.push(sum);
            }
        }
        Matrix::new(self.rows(), self.cols(), data)
    }

    /// `X(T)` by dynamic programming over corner sequences.
    pub fn path_matrix(&self) -> Matrix {
        match self.orientation {
            Orientation::Gamma => gamma_path_sums(&self.weights),
            // The Ⱡ graph of T is the reversed anti-transpose of the Γ graph of T^τ.
            Orientation::Le => gamma_path_sums(&self.weights.anti_transpose()).anti_transpose(),
        }
    }

    /// All vertex-disjoint path systems from `rows` to `cols`.
    ///
    /// Row, column and internal vertices all count towards disjointness.
    pub fn vertex_disjoint_systems(
        &self,
        rows: &IndexSet,
        cols: &IndexSet,
    ) -> Result<Vec<PathSystem>> {
        let (m, n) = (self.rows(), self.cols());
        let candidates = self.candidate_paths(rows, cols)?;
        let mut used = vec![false; m * n];
        let mut chosen: Vec<usize> = Vec::with_capacity(candidates.len());
        let mut out = Vec::new();
        collect_systems(&candidates, &mut used, &mut chosen, &mut out)?;
        Ok(out)
    }

    /// `det X[I,J]` as the total weight of vertex-disjoint path systems.
    pub fn lgv_minor(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Rational> {
        let systems = self.vertex_disjoint_systems(rows, cols)?;
        Ok(systems
            .iter()
            .map(|sys| {
                sys.paths()
                    .iter()
                    .fold(Rational::one(), |acc, p| acc * self.weight_unchecked(p))
            })
            .sum())
    }

    fn candidate_paths(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Vec<Candidates>> {
        if rows.len() != cols.len() {
            return Err(Error::SizeMismatch {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        let n = self.cols();
        rows.as_slice()
            .iter()
            .zip(cols.as_slice())
            .map(|(&i, &j)| {
                Ok(self
                    .enumerate_paths(i, j)?
                    .into_iter()
                    .map(|p| {
                        let cells = p
                            .vertices(self.rows(), n)
                            .into_iter()
                            .map(|(r, c)| (r - 1) * n + (c - 1))
                            .collect();
                        (p, cells)
                    })
                    .collect())
            })
            .collect()
    }

    /// Graphviz rendering of the graph.
    pub fn to_dot(&self) -> String {
        dot::render(self)
    }
}

/// Paths for one endpoint pair, each with the grid cells it occupies.
type Candidates = Vec<(Path, Vec<usize>)>;

fn collect_systems(
    candidates: &[Candidates],
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    out: &mut Vec<PathSystem>,
) -> Result<()> {
    let level = chosen.len();
    if level == candidates.len() {
        if out.len() as u128 >= ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                what: "path system enumeration",
                detail: format!("more than {ENUMERATION_LIMIT} systems"),
            });
        }
        let paths = chosen
            .iter()
            .enumerate()
            .map(|(l, &k)| candidates[l][k].0.clone())
            .collect();
        out.push(PathSystem::new(paths)?);
        return Ok(());
    }
    for (k, (_, cells)) in candidates[level].iter().enumerate() {
        if cells.iter().any(|&c| used[c]) {
            continue;
        }
        for &c in cells {
            used[c] = true;
        }
        chosen.push(k);
        let res = collect_systems(candidates, used, chosen, out);
        chosen.pop();
        for &c in cells {
            used[c] = false;
        }
        res?;
    }
    Ok(())
}

/// Γ path sums.
///
/// `h(a,b)` is the total weight of path tails that make a Γ-turn at `(a,b)` and end at
/// column vertex `j`: `h(a,j) = t_aj`, and for `b > j`
/// `h(a,b) = t_ab · Σ_{a'>a} t_{a'b}^{-1} Σ_{j≤b'<b} h(a',b')`. Then `x_ij = Σ_{b≥j} h(i,b)`.
#[allow(clippy::needless_range_loop)]
fn gamma_path_sums(t: &Matrix) -> Matrix {
    let (m, n) = (t.rows(), t.cols());
    let mut x = t.clone();
    for j in 1..=n {
        // h[a][b] for b in j..=n, 1-based a; prefix[a][b] = Σ_{j≤b'<b} h(a,b')
        let mut h = vec![vec![Rational::zero(); n + 2]; m + 2];
        let mut prefix = vec![vec![Rational::zero(); n + 2]; m + 2];
        for b in j..=n {
            for a in 1..=m {
                prefix[a][b] = if b == j {
                    Rational::zero()
                } else {
                    &prefix[a][b - 1] + &h[a][b - 1]
                };
            }
            for a in 1..=m {
                h[a][b] = if b == j {
                    t.get(a, b).clone()
                } else {
                    let tail: Rational = (a + 1..=m).map(|a2| &prefix[a2][b] / t.get(a2, b)).sum();
                    t.get(a, b) * tail
                };
            }
        }
        for i in 1..=m {
            let sum: Rational = (j..=n).map(|b| h[i][b].clone()).sum();
            x.set(i, j, sum);
        }
    }
    x
}

/// `X(T)` for a strictly positive `T` in the given orientation.
pub fn x_of_t(weights: &Matrix, orientation: Orientation) -> Result<Matrix> {
    Ok(ScaffoldGraph::new(weights.clone(), orientation)?.path_matrix())
}

/// `det X[{i,i+1⋯},{j,ℓ+1⋯}] / det X[{i+1⋯},{ℓ+1⋯}]`, the blocked path sum read off minors.
///
/// Empty index sets (when `i = m` or `ℓ = n`) contribute a minor of 1.
pub fn blocked_path_sum_by_minors(x: &Matrix, i: usize, j: usize, ell: usize) -> Result<Rational> {
    let (m, n) = (x.rows(), x.cols());
    if !(1..=m).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, bound: m });
    }
    if j == 0 || ell > n || j > ell {
        return Err(Error::IndexOrdering(format!(
            "need 1 <= j <= ell <= {n}, got j={j}, ell={ell}"
        )));
    }
    let (nr, nc) = prefixed_down(m, n, i, i + 1, j, ell + 1);
    let (dr, dc) = contiguous_down(m, n, i + 1, ell + 1);
    let den = x.minor_at(&dr, &dc);
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x.minor_at(&nr, &nc) / den)
}
