//! Acceptance criteria, one line per criterion. Runs without the libtest harness so the
//! PASS/FAIL lines are always printed; exits nonzero if any criterion fails.

mod common;

use std::fs;
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use common::{
    all_index_pairs, ints, laplace_minor, m, random_positive, random_tp, random_vector,
    tp_by_laplace,
};
use num::Signed;
use rand::rngs::StdRng;
use rand::SeedableRng;
use tp_scaffold::bordering::{border_above, border_above_coeff};
use tp_scaffold::cauchon::{partial_tp_check, scaffold_entry_formula};
use tp_scaffold::insertion::{
    affine_forms, build_insertion_system, induced_by_s, solve_strongly_positive, verify_solution,
    Candidate,
};
use tp_scaffold::rational::ratio;
use tp_scaffold::scaffold::blocked_path_sum_by_minors;
use tp_scaffold::*;

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn exhaustive_tp(x: &Matrix) -> std::result::Result<bool, String> {
    is_totally_positive(x, TpMode::default())
        .map(|v| v.is_tp())
        .map_err(|e| e.to_string())
}

fn idx(v: &[usize]) -> IndexSet {
    IndexSet::new(v.to_vec()).unwrap()
}

fn c1() -> Check {
    let t = m(&[&["1", "3", "1"], &["1", "1/2", "1"]]);
    let x = m(&[&["8", "7/2", "1"], &["1", "1/2", "1"]]);
    ensure!(
        x_of_t(&t, Orientation::Gamma).map_err(|e| e.to_string())? == x,
        "(a) X(T) mismatch"
    );

    let trace = cauchon_trace(&x, StepOrder::ReverseLex).map_err(|e| e.to_string())?;
    let mid = m(&[&["7", "3", "1"], &["1", "1/2", "1"]]);
    ensure!(
        trace.steps().iter().any(|s| s.matrix == mid),
        "(b) trace misses [[7,3,1],[1,1/2,1]]"
    );
    ensure!(*trace.output() == t, "(b) trace output {}", trace.output());

    let le = m(&[&["8", "7/2", "1"], &["1", "1/16", "6/7"]]);
    ensure!(
        le_scaffold(&x).map_err(|e| e.to_string())? == le,
        "(c) le_scaffold mismatch"
    );

    let x42 = Matrix::from_i64_rows(&[&[4, 2, 1], &[1, 1, 1]]).unwrap();
    let bordered = border_above(&x42, &ints(&[1, 2, 2])).map_err(|e| e.to_string())?;
    let want = Matrix::from_i64_rows(&[&[15, 6, 2], &[4, 2, 1], &[1, 1, 1]]).unwrap();
    ensure!(bordered == want, "(d) bordered matrix {bordered}");
    ensure!(*bordered.get(1, 1) == ratio(15, 1), "(d) x01");
    ensure!(
        border_above_coeff(&x42, 1, 2) == Ok(ratio(3, 1))
            && border_above_coeff(&x42, 1, 3) == Ok(ratio(4, 1)),
        "(d) coefficients"
    );

    let x3 = Matrix::from_i64_rows(&[&[6, 3, 1], &[3, 2, 1], &[1, 1, 1]]).unwrap();
    let sys = build_insertion_system(&x3, 2).map_err(|e| e.to_string())?;
    let a_r = Matrix::from_i64_rows(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]).unwrap();
    let a_q = Matrix::from_rows(vec![
        ints(&[1, 0, 0]),
        vec![ratio(2, 3), ratio(1, 1), ratio(0, 1)],
        vec![ratio(1, 3), ratio(1, 1), ratio(1, 1)],
    ])
    .unwrap();
    let b_s = Matrix::from_i64_rows(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 1]]).unwrap();
    ensure!(
        *sys.a_r() == a_r && *sys.a_q() == a_q,
        "(e) r/q equations {} / {}",
        sys.a_r(),
        sys.a_q()
    );
    ensure!(*sys.b_s() == b_s, "(e) r/s equations {}", sys.b_s());
    let witness = Candidate {
        r: ints(&[1, 2, 6]),
        q: ints(&[9, 2, 1]),
        s: ints(&[1, 1, 3]),
    };
    let verdict = verify_solution(&sys, &witness).map_err(|e| e.to_string())?;
    ensure!(verdict.is_none(), "(e) witness rejected: {:?}", verdict);
    let inserted = insert_row(&x3, 2, Some(&witness)).map_err(|e| e.to_string())?;
    let want = Matrix::from_i64_rows(&[&[6, 3, 1], &[3, 2, 1], &[9, 8, 6], &[1, 1, 1]]).unwrap();
    ensure!(inserted == want, "(e) inserted matrix {inserted}");
    ensure!(exhaustive_tp(&inserted)?, "(e) inserted matrix not TP");
    Ok("examples (a)-(e) reproduced exactly".into())
}

fn c2() -> Check {
    let mut rng = StdRng::seed_from_u64(2);
    let (mut instances, mut minors) = (0, 0);
    for _ in 0..12 {
        for rows in 2..=4 {
            for cols in 2..=4 {
                let t = random_positive(&mut rng, rows, cols);
                let g = ScaffoldGraph::new(t, Orientation::Gamma).map_err(|e| e.to_string())?;
                let x = g.path_matrix();
                for (i, j) in all_index_pairs(rows, cols) {
                    let lgv = g.lgv_minor(&idx(&i), &idx(&j)).map_err(|e| e.to_string())?;
                    let elim = x.minor(&idx(&i), &idx(&j)).map_err(|e| e.to_string())?;
                    let laplace = laplace_minor(&x, &i, &j);
                    ensure!(
                        lgv == elim && elim == laplace,
                        "{rows}x{cols} I={i:?} J={j:?}: {lgv} {elim} {laplace}"
                    );
                    minors += 1;
                }
                instances += 1;
            }
        }
    }
    Ok(format!(
        "{instances} weight matrices, {minors} minors agree three ways"
    ))
}

fn c3_c4() -> (Check, Check) {
    let mut rng = StdRng::seed_from_u64(3);
    let mut instances = Vec::new();
    for _ in 0..4 {
        for rows in 1..=5 {
            for cols in 1..=5 {
                instances.push(random_positive(&mut rng, rows, cols));
            }
        }
    }
    let c3 = (|| -> Check {
        for t in &instances {
            for o in [Orientation::Gamma, Orientation::Le] {
                let x = x_of_t(t, o).map_err(|e| e.to_string())?;
                let s = scaffold(&x, o).map_err(|e| e.to_string())?;
                ensure!(s == *t, "{o} scaffold of X(T) differs for T = {t}");
                ensure!(
                    x_of_t(&s, o).map_err(|e| e.to_string())? == x,
                    "{o} X(scaffold(X)) differs"
                );
                let dual = gamma_scaffold(&x.anti_transpose())
                    .map_err(|e| e.to_string())?
                    .anti_transpose();
                ensure!(
                    le_scaffold(&x).map_err(|e| e.to_string())? == dual,
                    "duality fails for X = {x}"
                );
            }
        }
        Ok(format!(
            "{} instances up to 5x5, both orientations and duality",
            instances.len()
        ))
    })();
    let c4 = (|| -> Check {
        let mut steps = 0;
        for t in &instances {
            for o in [Orientation::Gamma, Orientation::Le] {
                let x = x_of_t(t, o).map_err(|e| e.to_string())?;
                for order in [StepOrder::ReverseLex, StepOrder::ColMajor] {
                    let trace = cauchon_trace(&x, order).map_err(|e| e.to_string())?;
                    for s in trace.steps() {
                        ensure!(
                            s.matrix.is_positive(),
                            "non-positive intermediate at {:?}",
                            s.position
                        );
                        steps += 1;
                    }
                    if let Err(v) = partial_tp_check(&trace) {
                        return Err(format!("partial TP check failed: {v}"));
                    }
                }
            }
        }
        Ok(format!(
            "{steps} intermediate matrices positive and partially TP"
        ))
    })();
    (c3, c4)
}

fn c5() -> Check {
    let mut rng = StdRng::seed_from_u64(5);
    let mut sums = 0;
    for _ in 0..4 {
        for rows in 1..=4 {
            for cols in 1..=4 {
                let t = random_positive(&mut rng, rows, cols);
                let g =
                    ScaffoldGraph::new(t.clone(), Orientation::Gamma).map_err(|e| e.to_string())?;
                let x = g.path_matrix();
                let gs = gamma_scaffold(&x).map_err(|e| e.to_string())?;
                for i in 1..=rows {
                    for l in 1..=cols {
                        for j in 1..=l {
                            let by_paths =
                                g.blocked_path_sum(i, j, l).map_err(|e| e.to_string())?;
                            let by_minors = blocked_path_sum_by_minors(&x, i, j, l)
                                .map_err(|e| e.to_string())?;
                            ensure!(
                                by_paths == by_minors,
                                "({i},{j},{l}) {by_paths} != {by_minors}"
                            );
                            sums += 1;
                        }
                        let diag =
                            blocked_path_sum_by_minors(&x, i, l, l).map_err(|e| e.to_string())?;
                        let formula =
                            scaffold_entry_formula(&x, i, l).map_err(|e| e.to_string())?;
                        ensure!(
                            diag == formula
                                && &formula == gs.get(i, l)
                                && gs.get(i, l) == t.get(i, l),
                            "entry ({i},{l}): {diag} {formula} {}",
                            gs.get(i, l)
                        );
                    }
                }
            }
        }
    }
    Ok(format!("{sums} blocked path sums match the minor ratio"))
}

fn c6() -> Check {
    let mut rng = StdRng::seed_from_u64(6);
    let mut runs = 0;
    for idx in 0..50 {
        let rows = if idx % 2 == 0 { 3 } else { 4 };
        let x = random_tp(&mut rng, rows, 3);
        for k in 1..rows {
            let sys = build_insertion_system(&x, k).map_err(|e| e.to_string())?;
            let forms = affine_forms(&sys).map_err(|e| e.to_string())?;
            ensure!(
                forms.iter().all(|(_, b)| b.is_positive()),
                "non-positive beta for k={k}"
            );
            let sol = solve_strongly_positive(&sys).map_err(|e| e.to_string())?;
            let verdict = verify_solution(&sys, &sol.candidate()).map_err(|e| e.to_string())?;
            ensure!(verdict.is_none(), "solver output rejected: {:?}", verdict);
            let y = insert_row(&x, k, None).map_err(|e| e.to_string())?;
            ensure!(
                exhaustive_tp(&y)?,
                "inserted matrix not TP for X = {x}, k = {k}"
            );
            ensure!(tp_by_laplace(&y), "Laplace oracle disagrees on {y}");

            let n = x.cols();
            let mut s = vec![ratio(0, 1); n];
            s[n - 1] = x.get(k + 1, n).clone();
            let (_, q) = induced_by_s(&sys, &s).map_err(|e| e.to_string())?;
            let t_bar = le_scaffold(&x.row_block(1, k + 1).unwrap()).map_err(|e| e.to_string())?;
            ensure!(
                q == t_bar.row(k + 1),
                "beta identity fails for X = {x}, k = {k}"
            );
            runs += 1;
        }
    }
    Ok(format!(
        "50 matrices (3x3 and 4x3), {runs} insertions verified"
    ))
}

fn c7() -> Check {
    let mut rng = StdRng::seed_from_u64(7);
    let mut runs = 0;
    for _ in 0..3 {
        for rows in 1..=4 {
            for cols in 1..=4 {
                let x = random_tp(&mut rng, rows, cols);
                for side in BorderSide::ALL {
                    let p = BorderParams::new(
                        side,
                        random_vector(&mut rng, side.param_len(rows, cols)),
                    )
                    .map_err(|e| e.to_string())?;
                    let y = border(&x, &p).map_err(|e| e.to_string())?;
                    ensure!(exhaustive_tp(&y)?, "{side} border of {x} not TP");
                    let back = recover_border_params(&y, side).map_err(|e| e.to_string())?;
                    ensure!(back == p, "{side}: recovered {:?}", back.params());
                    ensure!(
                        border(&x, &back).map_err(|e| e.to_string())? == y,
                        "{side}: re-border differs"
                    );
                    let block = match side {
                        BorderSide::Above => y.without_row(1),
                        BorderSide::Below => y.without_row(rows + 1),
                        BorderSide::Left => y.without_col(1),
                        BorderSide::Right => y.without_col(cols + 1),
                    };
                    ensure!(
                        block.map_err(|e| e.to_string())? == x,
                        "{side}: original block lost"
                    );
                    runs += 1;
                }
            }
        }
    }
    Ok(format!("{runs} borderings round-trip on all four sides"))
}

fn c8() -> Check {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let g = |name: &str| golden.join(name).to_string_lossy().into_owned();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().join("out.txt").to_string_lossy().into_owned();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_tpscaffold"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())
    };
    let workflows: [(Vec<String>, &str); 5] = [
        (
            vec!["reconstruct".into(), "--gamma".into(), g("weights_2x3.txt")],
            "reconstruct_gamma.out",
        ),
        (
            vec![
                "scaffold".into(),
                "--gamma".into(),
                "--trace".into(),
                g("path_matrix_2x3.txt"),
            ],
            "scaffold_gamma_trace.out",
        ),
        (
            vec!["scaffold".into(), "--le".into(), g("path_matrix_2x3.txt")],
            "scaffold_le.out",
        ),
        (
            vec![
                "border".into(),
                "--side".into(),
                "above".into(),
                "--params".into(),
                g("border_r.txt"),
                g("border_x.txt"),
            ],
            "border_above.out",
        ),
        (
            vec![
                "insert-row".into(),
                "--after".into(),
                "2".into(),
                "--witness".into(),
                g("insert_witness.txt"),
                g("insert_x.txt"),
            ],
            "insert_row.out",
        ),
    ];
    for (args, expected) in &workflows {
        let mut full: Vec<&str> = args.iter().map(String::as_str).collect();
        full.extend(["-o", &out]);
        let res = run(&full)?;
        ensure!(
            res.status.code() == Some(0),
            "{expected}: exit {:?}",
            res.status.code()
        );
        let got = fs::read(&out).map_err(|e| e.to_string())?;
        let want = fs::read(golden.join(expected)).map_err(|e| e.to_string())?;
        ensure!(got == want, "{expected}: output differs");
    }

    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        fs::write(&p, text).map(|_| p.to_string_lossy().into_owned())
    };
    let malformed = [
        "2 2\n1 2\n3\n",
        "2\n1 2\n",
        "2 2\n1 1/0\n1 1\n",
        "2 2\n1 x\n1 1\n",
        "2 1\n1\n",
    ];
    for (i, text) in malformed.iter().enumerate() {
        let p = write(&format!("bad{i}.txt"), text).map_err(|e| e.to_string())?;
        let code = run(&["check", &p])?.status.code();
        ensure!(code == Some(3), "malformed input {text:?}: exit {code:?}");
    }
    let not_tp = write("not_tp.txt", "2 2\n1 2\n2 1\n").map_err(|e| e.to_string())?;
    let codes = [
        (run(&["check", &g("path_matrix_2x3.txt")])?.status.code(), 0),
        (run(&["check", &not_tp])?.status.code(), 1),
        (run(&["check"])?.status.code(), 2),
        (
            run(&["insert-row", "--after", "1", &not_tp])?.status.code(),
            4,
        ),
    ];
    for (got, want) in codes {
        ensure!(got == Some(want), "exit code {got:?}, expected {want}");
    }
    Ok("5 golden workflows byte-identical; exit codes 0/1/2/3/4 honored".into())
}

fn main() {
    let start = Instant::now();
    let (c3, c4) = c3_c4();
    let results: Vec<(&str, Check)> = vec![
        ("C1 example reproduction", c1()),
        ("C2 LGV equivalence", c2()),
        ("C3 scaffolding round-trips", c3),
        ("C4 positive Cauchon intermediates", c4),
        ("C5 blocked path sums", c5()),
        ("C6 insertion soundness", c6()),
        ("C7 bordering round-trips", c7()),
        ("C8 CLI golden files", c8()),
    ];
    let mut failed = 0;
    for (name, res) in &results {
        match res {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2}s",
        results.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
