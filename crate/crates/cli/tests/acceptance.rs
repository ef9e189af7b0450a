//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use chromgf_core::algebra::{PolyC, PolyZC, RatFunc};
use chromgf_core::{
    build_layered_graph, canonicalize, enumerate_states, generating_function, gf_grid, transfer_matrix, verify_series,
    Connector, Graph,
};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn random_graph(rng: &mut ChaCha8Rng, max_m: usize) -> Graph {
    let m = rng.gen_range(1..=max_m);
    let edges: Vec<(usize, usize)> =
        (1..=m).flat_map(|u| (u + 1..=m).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.5)).collect();
    Graph::new(m, edges).unwrap()
}

fn corpus() -> Vec<(&'static str, Graph, Connector)> {
    vec![
        ("grid m=1", Graph::path(1), Connector::monogamy(1)),
        ("grid m=2", Graph::path(2), Connector::monogamy(2)),
        ("grid m=3", Graph::path(3), Connector::monogamy(3)),
        ("triangle x P_n", Graph::complete(3), Connector::monogamy(3)),
        ("edgeless(2), empty connector", Graph::edgeless(2), Connector::empty(2)),
        ("edgeless(2), crossed", Graph::edgeless(2), Connector::new(2, [(1, 2), (2, 1)]).unwrap()),
        ("path(2), one-sided", Graph::path(2), Connector::new(2, [(1, 1)]).unwrap()),
    ]
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let states = enumerate_states(&Graph::path(3));
    let elapsed = start.elapsed();
    let shown: Vec<String> = states.iter().map(ToString::to_string).collect();
    ensure!(shown == ["121", "123"], "got {shown:?}");
    ensure!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    Ok(format!("states {shown:?} in {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let m = transfer_matrix(&Graph::path(3), &Connector::monogamy(3)).map_err(|e| e.to_string())?;
    let idx = |s: &str| m.states.iter().position(|t| t.to_string() == s).unwrap();
    let (a, b) = (idx("121"), idx("123"));
    let expected = [
        (b, a, PolyC::from_ints(&[5, -4, 1])),
        (a, a, PolyC::from_ints(&[3, -3, 1])),
        (a, b, PolyC::from_ints(&[-10, 13, -6, 1])),
        (b, b, PolyC::from_ints(&[-13, 14, -6, 1])),
    ];
    for (s, t, want) in &expected {
        ensure!(&m.entries[*s][*t] == want, "M[{},{}] = {:?}", m.states[*s], m.states[*t], m.entries[*s][*t]);
    }
    Ok("four entries exact".into())
}

fn criterion_3() -> Outcome {
    let canon = canonicalize(&[3, 5, 1, 1, 3, 2]);
    ensure!(canon == [1, 2, 3, 3, 1, 4], "canonicalize(351132) = {canon:?}");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=8);
        let coloring: Vec<u32> = (0..len).map(|_| rng.gen_range(0..8)).collect();
        let canon = canonicalize(&coloring);
        ensure!(canonicalize(&canon) == canon, "not idempotent on {coloring:?}");
        let mut perm: Vec<u32> = (100..108).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let relabeled: Vec<u32> = coloring.iter().map(|&x| perm[x as usize]).collect();
        ensure!(canonicalize(&relabeled) == canon, "relabeling changed {coloring:?}");
    }
    Ok("123314; 10^4 random colorings".into())
}

fn criterion_4() -> Outcome {
    const BELL: [usize; 6] = [1, 1, 2, 5, 15, 52];
    let counts: Vec<usize> = (1..=5).map(|m| enumerate_states(&Graph::edgeless(m)).len()).collect();
    ensure!(counts == BELL[1..], "edgeless counts {counts:?}");
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let g = random_graph(&mut rng, 5);
        let k = enumerate_states(&g).len();
        ensure!(k <= BELL[g.m()], "{k} states for {g}");
    }
    Ok(format!("edgeless {counts:?}; 100 random graphs within bound"))
}

fn criterion_5() -> Outcome {
    let z = PolyZC::z();
    let c = PolyZC::c();
    let one = PolyZC::one();
    let grid1 = RatFunc::new(&one + &z, &one - &(&(&c - &one) * &z)).unwrap();
    let ladder_den = &one - &(&PolyZC::constant(PolyC::from_ints(&[3, -3, 1])) * &z);
    let grid2 = &RatFunc::one() + &RatFunc::new(&(&c * &(&c - &one)) * &z, ladder_den).unwrap();
    let got1 = gf_grid(1).map_err(|e| e.to_string())?.value;
    let got2 = gf_grid(2).map_err(|e| e.to_string())?.value;
    ensure!(got1 == grid1, "gf_grid(1) = {got1:?}");
    ensure!(got2 == grid2, "gf_grid(2) = {got2:?}");
    Ok("grid 1 and 2 closed forms".into())
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (name, g, c) in corpus() {
        let order = (12 / g.m()).min(4);
        let report = verify_series(&g, &c, order).map_err(|e| format!("{name}: {e}"))?;
        ensure!(report.passed(), "{name}: {:?}", report.rows.iter().filter(|r| !r.ok()).collect::<Vec<_>>());
        checked += report.rows.len();
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!("{checked} coefficients across 7 instances in {:.2}s", elapsed.as_secs_f64()))
}

fn criterion_7() -> Outcome {
    for (name, g, c) in corpus() {
        let series = generating_function(&g, &c).map_err(|e| e.to_string())?.series(4).map_err(|e| e.to_string())?;
        for (n, p) in series.iter().enumerate().skip(1) {
            ensure!(p.is_monic() && p.degree() == Some(g.m() * n), "{name} n={n}: {p:?}");
            ensure!(p.eval_int(0).is_zero(), "{name} n={n}: p(0) != 0");
            let h = build_layered_graph(&g, &c, n).unwrap();
            if h.edge_count() > 0 {
                ensure!(p.eval_int(1).is_zero(), "{name} n={n}: p(1) != 0");
            }
        }
    }
    Ok("monic, degree m*n, p(0)=0, p(1)=0 with edges".into())
}

/// `G x P_n` built directly from the product definition: `(u, i) ~ (v, j)`
/// iff (`i == j` and `u ~ v`) or (`u == v` and `|i - j| == 1`).
fn cartesian_with_path(g: &Graph, n: usize) -> BTreeSet<(usize, usize)> {
    let m = g.m();
    let id = |v: usize, layer: usize| layer * m + v;
    let mut edges = BTreeSet::new();
    for a in 1..=m {
        for b in 1..=m {
            for i in 0..n {
                for j in 0..n {
                    let same_layer = i == j && g.has_edge(a, b);
                    let rung = a == b && i.abs_diff(j) == 1;
                    let (x, y) = (id(a, i), id(b, j));
                    if (same_layer || rung) && x < y {
                        edges.insert((x, y));
                    }
                }
            }
        }
    }
    edges
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..20 {
        let g = random_graph(&mut rng, 4);
        let n = rng.gen_range(1..=4);
        let h = build_layered_graph(&g, &Connector::monogamy(g.m()), n).unwrap();
        ensure!(h.edges() == &cartesian_with_path(&g, n), "{g} n={n}");
    }
    Ok("20 random (G, n)".into())
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let gf = gf_grid(4).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "gf_grid(4) took {elapsed:?}");
    let expected_den = gf.value.denom().canonical_form().0;
    ensure!(gf.value.denom() == &expected_den, "denominator not normalized");
    let report = verify_series(&Graph::path(4), &Connector::monogamy(4), 3).map_err(|e| e.to_string())?;
    ensure!(report.passed(), "series mismatch");
    Ok(format!("gf_grid(4) in {:.3}s; n=1..3 match", elapsed.as_secs_f64()))
}

struct Run {
    code: i32,
    stdout: Vec<u8>,
    stderr: String,
}

fn chromgf(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_chromgf")).args(args).output().expect("spawn chromgf");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let g = write(dir.path(), "g.txt", "m 3\ne 1 2\ne 2 3\ne 1 3\n");
    let c = write(dir.path(), "c.txt", "m 3\np 1 2\np 2 3\np 3 1\n");
    let bad_graph = write(dir.path(), "bad.txt", "m 3\ne 1 2\ne 2 x\n");
    let small = write(dir.path(), "c2.txt", "m 2\np 1 1\n");
    let missing = dir.path().join("missing.txt").to_str().unwrap().to_owned();

    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["states", "--grid-width", "3"], 0),
        (vec!["matrix", "--grid-width", "3", "--format", "latex"], 0),
        (vec!["matrix", "--graph", &g, "--connector", &c, "--format", "json"], 0),
        (vec!["gf", "--grid-width", "2", "--format", "json"], 0),
        (vec!["gf", "--graph", &g, "--z-name", "t", "--no-empty-term"], 0),
        (vec!["grid", "3", "--format", "latex"], 0),
        (vec!["series", "--grid-width", "2", "--order", "5"], 0),
        (vec!["verify", "--graph", &g, "--connector", &c, "--order", "3"], 0),
        (vec!["--help"], 0),
        (vec![], 1),
        (vec!["frobnicate"], 1),
        (vec!["states", "--grid-width", "3", "--bogus"], 1),
        (vec!["states"], 1),
        (vec!["states", "--graph", &missing], 1),
        (vec!["states", "--graph", &bad_graph], 1),
        (vec!["gf", "--graph", &g, "--connector", &small], 1),
        (vec!["grid", "0"], 1),
        (vec!["matrix", "--grid-width", "3", "--format", "maple"], 1),
        (vec!["verify", "--grid-width", "3", "--order", "5"], 2),
    ];
    for (args, want) in &cases {
        let first = chromgf(args);
        ensure!(first.code == *want, "{args:?}: exit {} (want {want}); stderr: {}", first.code, first.stderr);
        let second = chromgf(args);
        ensure!(first.stdout == second.stdout && first.code == second.code, "{args:?}: output differs between runs");
    }

    let verify = chromgf(&["verify", "--graph", &g, "--connector", &c, "--order", "3"]);
    ensure!(
        verify.stdout == b"n=1 OK\nn=2 OK\nn=3 OK\nPASS\n",
        "verify text: {:?}",
        String::from_utf8_lossy(&verify.stdout)
    );
    let states = String::from_utf8(chromgf(&["states", "--grid-width", "3"]).stdout).unwrap();
    ensure!(states.lines().collect::<Vec<_>>() == ["121", "123"], "states text: {states:?}");
    let latex = String::from_utf8(chromgf(&["matrix", "--grid-width", "3", "--format", "latex"]).stdout).unwrap();
    for entry in ["c^2-4c+5", "c^2-3c+3", "c^3-6c^2+13c-10", "c^3-6c^2+14c-13"] {
        ensure!(latex.contains(entry), "latex matrix lacks {entry}");
    }
    let parse_err = chromgf(&["states", "--graph", &bad_graph]);
    ensure!(parse_err.stderr.contains("line 3"), "parse error does not name the line: {}", parse_err.stderr);
    let flag_err = chromgf(&["states", "--grid-width", "3", "--bogus"]);
    ensure!(flag_err.stderr.contains("--bogus"), "flag error does not name the token: {}", flag_err.stderr);
    Ok(format!("{} invocations, exit codes and bytes stable", cases.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("state set of P_3", criterion_1),
        ("transfer entries of P_3", criterion_2),
        ("canonicalization", criterion_3),
        ("Bell bound", criterion_4),
        ("closed-form generating functions", criterion_5),
        ("oracle equivalence corpus", criterion_6),
        ("monicity and degree", criterion_7),
        ("monogamy reduction", criterion_8),
        ("scale check (grid 4)", criterion_9),
        ("CLI contract", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
