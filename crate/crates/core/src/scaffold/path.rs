use std::fmt;

use crate::error::{Error, Result};

use super::Orientation;

/// A directed path from a row vertex to a column vertex, stored as its turn sequence.
///
/// `turns` lists every corner `(i,j1), (i2,j1), (i2,j2), ..., (il,j)`. Corners at even
/// positions contribute their weight, corners at odd positions its inverse. In a Γ graph
/// rows increase and columns decrease along the sequence; in a Ⱡ graph rows decrease and
/// columns increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    orientation: Orientation,
    start: usize,
    end: usize,
    turns: Vec<(usize, usize)>,
}

impl Path {
    /// Builds a path from its corner sequence, checking only its internal shape.
    pub fn new(orientation: Orientation, turns: Vec<(usize, usize)>) -> Result<Self> {
        let (Some(&first), Some(&last)) = (turns.first(), turns.last()) else {
            return Err(Error::MalformedPath("empty turn sequence".into()));
        };
        if turns.len().is_multiple_of(2) {
            return Err(Error::MalformedPath(format!(
                "turn sequence has even length {}",
                turns.len()
            )));
        }
        for (t, w) in turns.windows(2).enumerate() {
            let ((r0, c0), (r1, c1)) = (w[0], w[1]);
            // Even-to-odd corners are joined by a vertical run, odd-to-even by a horizontal one.
            let ok = if t % 2 == 0 {
                c0 == c1 && orientation.advances_row(r0, r1)
            } else {
                r0 == r1 && orientation.advances_col(c0, c1)
            };
            if !ok {
                return Err(Error::MalformedPath(format!(
                    "turns {:?} -> {:?} do not alternate in the {} orientation",
                    w[0], w[1], orientation
                )));
            }
        }
        Ok(Path {
            orientation,
            start: first.0,
            end: last.1,
            turns,
        })
    }

    /// The single-corner path from row vertex `i` to column vertex `j`.
    pub(crate) fn primary(orientation: Orientation, i: usize, j: usize) -> Self {
        Path {
            orientation,
            start: i,
            end: j,
            turns: vec![(i, j)],
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Row vertex the path starts at.
    pub fn start(&self) -> usize {
        self.start
    }

    /// Column vertex the path ends at.
    pub fn end(&self) -> usize {
        self.end
    }

    pub fn turns(&self) -> &[(usize, usize)] {
        &self.turns
    }

    pub fn first_turn(&self) -> (usize, usize) {
        self.turns[0]
    }

    pub fn is_primary(&self) -> bool {
        self.turns.len() == 1
    }

    /// Corners whose weights enter the path weight with exponent +1.
    pub fn numerator_turns(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.turns.iter().copied().step_by(2)
    }

    /// Corners whose weights enter the path weight with exponent -1.
    pub fn denominator_turns(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.turns.iter().copied().skip(1).step_by(2)
    }

    /// Ⱡ-shaped corners (vertical run followed by a horizontal run).
    pub fn le_turns(&self) -> Vec<(usize, usize)> {
        match self.orientation {
            Orientation::Gamma => self.denominator_turns().collect(),
            Orientation::Le => self.numerator_turns().collect(),
        }
    }

    /// Γ-shaped corners (horizontal run followed by a vertical run).
    pub fn gamma_turns(&self) -> Vec<(usize, usize)> {
        match self.orientation {
            Orientation::Gamma => self.numerator_turns().collect(),
            Orientation::Le => self.denominator_turns().collect(),
        }
    }

    /// All internal grid vertices visited, in travel order, for an `m x n` grid.
    pub fn vertices(&self, m: usize, n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let (row_entry, col_exit) = match self.orientation {
            Orientation::Gamma => (n, m),
            Orientation::Le => (1, 1),
        };
        // horizontal run from the row vertex into the first corner
        push_run(&mut out, (self.start, row_entry), self.turns[0], true);
        for w in self.turns.windows(2) {
            push_run(&mut out, w[0], w[1], false);
        }
        // vertical run from the last corner down (Γ) or up (Ⱡ) to the column vertex
        push_run(
            &mut out,
            *self.turns.last().unwrap(),
            (col_exit, self.end),
            false,
        );
        out
    }

    pub(crate) fn in_grid(&self, m: usize, n: usize) -> bool {
        self.turns
            .iter()
            .all(|&(r, c)| (1..=m).contains(&r) && (1..=n).contains(&c))
    }
}

/// Appends the lattice points from `from` to `to` (same row or column).
/// `inclusive_start` controls whether `from` itself is pushed.
fn push_run(
    out: &mut Vec<(usize, usize)>,
    from: (usize, usize),
    to: (usize, usize),
    inclusive_start: bool,
) {
    let steps: Vec<(usize, usize)> = if from.0 == to.0 {
        line(from.1, to.1).map(|c| (from.0, c)).collect()
    } else {
        line(from.0, to.0).map(|r| (r, from.1)).collect()
    };
    let skip = usize::from(!inclusive_start);
    for v in steps.into_iter().skip(skip) {
        if out.last() != Some(&v) {
            out.push(v);
        }
    }
}

fn line(a: usize, b: usize) -> Box<dyn Iterator<Item = usize>> {
    if a <= b {
        Box::new(a..=b)
    } else {
        Box::new((b..=a).rev())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} via ", self.start, self.end)?;
        let parts: Vec<String> = self
            .turns
            .iter()
            .map(|(r, c)| format!("({r},{c})"))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Paths `P_1, ..., P_k` with `P_l` running from `I[l]` to `J[l]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathSystem {
    paths: Vec<Path>,
}

impl PathSystem {
    pub fn new(paths: Vec<Path>) -> Result<Self> {
        let increasing = paths
            .windows(2)
            .all(|w| w[0].start < w[1].start && w[0].end < w[1].end);
        if !increasing {
            return Err(Error::MalformedPath(
                "path system endpoints must be strictly increasing".into(),
            ));
        }
        Ok(PathSystem { paths })
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn is_primary(&self) -> bool {
        self.paths.iter().all(Path::is_primary)
    }
}

/// Recursive descent over corner sequences from row `i` to column `j`, sorted
/// lexicographically by turn sequence.
pub(crate) fn enumerate(
    orientation: Orientation,
    m: usize,
    i: usize,
    j: usize,
    first_cols: impl Iterator<Item = usize>,
) -> Vec<Path> {
    let mut out = Vec::new();
    let mut turns = Vec::new();
    for c in first_cols {
        turns.push((i, c));
        extend(orientation, m, j, &mut turns, &mut out);
        turns.pop();
    }
    out.sort();
    out
}

fn extend(
    orientation: Orientation,
    m: usize,
    j: usize,
    turns: &mut Vec<(usize, usize)>,
    out: &mut Vec<Path>,
) {
    let &(r, c) = turns.last().unwrap();
    if c == j {
        out.push(Path {
            orientation,
            start: turns[0].0,
            end: j,
            turns: turns.clone(),
        });
        return;
    }
    let (next_rows, next_cols): (Vec<usize>, Vec<usize>) = match orientation {
        Orientation::Gamma => ((r + 1..=m).collect(), (j..c).collect()),
        Orientation::Le => ((1..r).collect(), (c + 1..=j).collect()),
    };
    for &r2 in &next_rows {
        for &c2 in &next_cols {
            turns.push((r2, c));
            turns.push((r2, c2));
            extend(orientation, m, j, turns, out);
            turns.pop();
            turns.pop();
        }
    }
}

/// Number of paths from row vertex `i` to column vertex `j`, saturating at `u128::MAX`.
pub(crate) fn count(orientation: Orientation, m: usize, n: usize, i: usize, j: usize) -> u128 {
    let (down, across) = match orientation {
        Orientation::Gamma => (m - i, n - j),
        Orientation::Le => (i - 1, j - 1),
    };
    binomial(down + across, down)
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = match acc.checked_mul((n - t) as u128) {
            Some(v) => v / (t as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
