use std::fmt::Write;

use super::{Orientation, ScaffoldGraph};

/// Deterministic DOT digraph: row vertices `r<i>`, column vertices `c<j>`, internal
/// vertices `v<i>_<j>` labelled by weight. Positions pin the grid layout for `neato -n`.
pub(super) fn render(g: &ScaffoldGraph) -> String {
    let (m, n) = (g.rows(), g.cols());
    let mut s = String::new();
    let name = match g.orientation() {
        Orientation::Gamma => "gamma",
        Orientation::Le => "le",
    };
    writeln!(s, "digraph {name}_{m}x{n} {{").unwrap();
    writeln!(s, "  node [shape=circle, fontsize=10];").unwrap();

    // Internal vertex (i,j) sits at x = j, y = m + 1 - i; extra vertices sit on the border.
    let (row_x, col_y) = match g.orientation() {
        Orientation::Gamma => (n + 1, 0),
        Orientation::Le => (0, m + 1),
    };
    for i in 1..=m {
        writeln!(
            s,
            "  r{i} [label=\"{i}\", shape=box, pos=\"{row_x},{}!\"];",
            m + 1 - i
        )
        .unwrap();
    }
    for j in 1..=n {
        writeln!(
            s,
            "  c{j} [label=\"{j}\", shape=box, pos=\"{j},{col_y}!\"];"
        )
        .unwrap();
    }
    for i in 1..=m {
        for j in 1..=n {
            writeln!(
                s,
                "  v{i}_{j} [label=\"{}\", pos=\"{j},{}!\"];",
                g.weights().get(i, j),
                m + 1 - i
            )
            .unwrap();
        }
    }

    match g.orientation() {
        Orientation::Gamma => {
            for i in 1..=m {
                writeln!(s, "  r{i} -> v{i}_{n};").unwrap();
                for j in (2..=n).rev() {
                    writeln!(s, "  v{i}_{j} -> v{i}_{};", j - 1).unwrap();
                }
            }
            for j in 1..=n {
                for i in 1..m {
                    writeln!(s, "  v{i}_{j} -> v{}_{j};", i + 1).unwrap();
                }
                writeln!(s, "  v{m}_{j} -> c{j};").unwrap();
            }
        }
        Orientation::Le => {
            for i in 1..=m {
                writeln!(s, "  r{i} -> v{i}_1;").unwrap();
                for j in 1..n {
                    writeln!(s, "  v{i}_{j} -> v{i}_{};", j + 1).unwrap();
                }
            }
            for j in 1..=n {
                for i in (2..=m).rev() {
                    writeln!(s, "  v{i}_{j} -> v{}_{j};", i - 1).unwrap();
                }
                writeln!(s, "  v1_{j} -> c{j};").unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    fn counts(dot: &str) -> (usize, usize) {
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        let nodes = dot
            .lines()
            .filter(|l| l.contains("label=") && !l.contains("->"))
            .count();
        (nodes, edges)
    }

    #[test]
    fn single_vertex_graph() {
        let g = ScaffoldGraph::new(Matrix::from_i64_rows(&[&[5]]).unwrap(), Orientation::Gamma)
            .unwrap();
        let dot = g.to_dot();
        assert_eq!(counts(&dot), (3, 2));
        assert!(dot.contains("r1 -> v1_1;"));
        assert!(dot.contains("v1_1 -> c1;"));
        assert!(dot.contains("v1_1 [label=\"5\""));
    }

    #[test]
    fn two_by_three_graph() {
        let t = Matrix::from_str_rows(&[&["1", "3", "1"], &["1", "1/2", "1"]]).unwrap();
        let g = ScaffoldGraph::new(t.clone(), Orientation::Gamma).unwrap();
        let dot = g.to_dot();
        assert_eq!(counts(&dot), (11, 12));
        assert!(dot.contains("r2 -> v2_3;"));
        assert!(dot.contains("v1_2 -> v2_2;"));
        assert!(dot.contains("v2_2 [label=\"1/2\""));
        assert_eq!(dot, g.to_dot());

        let le = ScaffoldGraph::new(t, Orientation::Le).unwrap().to_dot();
        assert_eq!(counts(&le), (11, 12));
        assert!(le.contains("r2 -> v2_1;"));
        assert!(le.contains("v2_3 -> v1_3;"));
        assert!(le.contains("v1_3 -> c3;"));
    }
}
