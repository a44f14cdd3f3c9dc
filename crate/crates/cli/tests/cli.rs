use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tda_cli::io::{parse_diagram, read_grid};
use tempfile::TempDir;

fn tda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tda"))
        .args(args)
        .env_remove("TDA_SEED")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn triples(text: &str) -> Vec<(usize, f64, f64)> {
    parse_diagram(Path::new("stdout"), text).unwrap().triples()
}

fn scalar(out: &Output) -> f64 {
    stdout(out).trim().parse().unwrap()
}

#[test]
fn rips_equilateral_triangle() {
    let dir = TempDir::new().unwrap();
    let h = 3f64.sqrt() / 2.0;
    let input = write(&dir, "tri.csv", &format!("# triangle\n0,0\n1,0\n0.5,{h}\n"));
    let out = tda(&["rips", s(&input), "--max-edge", "2", "--max-dim", "2"]);
    let got = triples(&stdout(&out));
    assert_eq!(got.len(), 3);
    assert!(got.iter().all(|t| t.0 == 0 && t.1 == 0.0));
    assert!((got[0].2 - 1.0).abs() < 1e-12 && (got[1].2 - 1.0).abs() < 1e-12);
    assert!(got[2].2.is_infinite());
}

#[test]
fn rips_from_matrix_writes_output_file() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "m.txt", "3\n0,1,1\n1,0,1\n1,1,0\n");
    let target = dir.path().join("out.txt");
    let out = tda(&["rips", s(&input), "--input-kind", "matrix", "--max-edge", "2", "--out", s(&target)]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&target).unwrap();
    assert!(text.starts_with("# dim birth death\n"));
    assert_eq!(triples(&text), vec![(0, 0.0, 1.0), (0, 0.0, 1.0), (0, 0.0, f64::INFINITY)]);
    // Only the input and the renamed output remain.
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn exit_codes_separate_failure_kinds() {
    let dir = TempDir::new().unwrap();
    let empty = write(&dir, "empty.csv", "");
    assert_eq!(tda(&["rips", s(&empty), "--max-edge", "1"]).status.code(), Some(3));
    let bad = write(&dir, "bad.csv", "0,0\n1,x\n");
    let out = tda(&["rips", s(&bad), "--max-edge", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2:"));
    let asymmetric = write(&dir, "m.txt", "2\n0,1\n2,0\n");
    let out = tda(&["rips", s(&asymmetric), "--input-kind", "matrix", "--max-edge", "1"]);
    assert_eq!(out.status.code(), Some(4));
    let ok = write(&dir, "ok.csv", "0,0\n");
    assert_eq!(tda(&["rips", s(&ok), "--max-edge=-1"]).status.code(), Some(4));
    assert_eq!(tda(&["rips", s(&ok)]).status.code(), Some(2));
    let missing = dir.path().join("missing.csv");
    assert_eq!(tda(&["rips", s(&missing), "--max-edge", "1"]).status.code(), Some(1));
}

#[test]
fn cubical_demo_circle_has_early_long_cycle() {
    let out = tda(&["cubical", "--demo-circle"]);
    let cycles: Vec<_> = triples(&stdout(&out)).into_iter().filter(|t| t.0 == 1).collect();
    assert!(cycles.iter().any(|&(_, b, d)| b < 0.05 && d - b > 0.9), "{cycles:?}");
}

#[test]
fn cubical_all_ones_grid() {
    let dir = TempDir::new().unwrap();
    let grid = write(&dir, "g.txt", &format!("2\n3\n3\n{}", "1\n".repeat(9)));
    assert_eq!(triples(&stdout(&tda(&["cubical", s(&grid)]))), vec![(0, 1.0, f64::INFINITY)]);
    // Presence mode keeps occupied cubes and enters them all at 0.
    let presence = triples(&stdout(&tda(&["cubical", s(&grid), "--binary"])));
    assert_eq!(presence, vec![(0, 0.0, f64::INFINITY)]);
}

#[test]
fn cubical_malformed_extents() {
    let dir = TempDir::new().unwrap();
    let grid = write(&dir, "g.txt", "2\n3\nthree\n1\n");
    let out = tda(&["cubical", s(&grid)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":3:"));
    let short = write(&dir, "short.txt", "2\n2\n2\n1\n1\n");
    assert_eq!(tda(&["cubical", s(&short)]).status.code(), Some(3));
    let not_binary = write(&dir, "nb.txt", "1\n2\n0.5\n1\n");
    assert_eq!(tda(&["cubical", s(&not_binary), "--binary"]).status.code(), Some(4));
}

#[test]
fn distance_examples() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.txt", "# dim birth death\n0 0 2\n");
    let empty = write(&dir, "e.txt", "# dim birth death\n");
    let c = write(&dir, "c.txt", "0 0 1\n0 3 4\n");
    assert_eq!(scalar(&tda(&["distance", s(&a), s(&a)])), 0.0);
    assert_eq!(scalar(&tda(&["distance", s(&a), s(&empty)])), 1.0);
    let w = scalar(&tda(&["distance", s(&a), s(&c), "--metric", "wasserstein", "--q", "1"]));
    assert!((w - 1.5).abs() < 1e-12, "{w}");

    let text = stdout(&tda(&["distance", s(&a), s(&empty), s(&c)]));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("3"));
    let m: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    for i in 0..3 {
        assert_eq!(m[i][i], 0.0);
        for j in 0..3 {
            assert_eq!(m[i][j], m[j][i]);
        }
    }
    assert_eq!(m[0][1], 1.0);
    assert_eq!(tda(&["distance", s(&a), s(&c), "--metric", "wasserstein", "--q", "0.5"]).status.code(), Some(4));
}

#[test]
fn landscape_file_distance_and_average() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.txt", "0 0 2\n0 1 3\n0 0 inf\n");
    let text = stdout(&tda(&["landscape", s(&d)]));
    assert_eq!(text.lines().next(), Some("# level x value"));
    let levels: Vec<(usize, f64, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect();
    let first: Vec<(f64, f64)> = levels.iter().filter(|l| l.0 == 1).map(|l| (l.1, l.2)).collect();
    assert_eq!(first, vec![(0.0, 0.0), (1.0, 1.0), (1.5, 0.5), (2.0, 1.0), (3.0, 0.0)]);
    let second: Vec<(f64, f64)> = levels.iter().filter(|l| l.0 == 2).map(|l| (l.1, l.2)).collect();
    assert_eq!(second, vec![(1.0, 0.0), (1.5, 0.5), (2.0, 0.0)]);

    let saved = dir.path().join("l.txt");
    assert!(tda(&["landscape", s(&d), "--out", s(&saved)]).status.success());
    assert_eq!(scalar(&tda(&["landscape", s(&saved), "--distance", s(&d)])), 0.0);
    let other = write(&dir, "o.txt", "0 0 2\n");
    // Sup of the difference is the second level's peak.
    let sup = scalar(&tda(&["landscape", s(&d), "--distance", s(&other), "--p", "inf"]));
    assert!((sup - 1.0).abs() < 1e-12, "{sup}");
    let avg = stdout(&tda(&["landscape", s(&other), "--average", s(&other)]));
    assert_eq!(avg, stdout(&tda(&["landscape", s(&other)])));
}

#[test]
fn slide_preconditions_and_constant_series() {
    let dir = TempDir::new().unwrap();
    let series = write(&dir, "s.txt", "1\n1\n1\n1\n1\n");
    let out = tda(&["slide", s(&series), "--window", "6", "--max-edge", "1"]);
    assert_eq!(out.status.code(), Some(4));
    let text = stdout(&tda(&["slide", s(&series), "--window", "3", "--max-edge", "1"]));
    let got = triples(&text);
    assert!(got.iter().all(|t| t.0 == 0));
    assert_eq!(got, vec![(0, 0.0, f64::INFINITY)]);
}

#[test]
fn slide_demo_sin_has_dominant_cycle() {
    let out = tda(&["slide", "--demo-sin", "--window", "200", "--max-edge", "20"]);
    let mut lengths: Vec<f64> = triples(&stdout(&out))
        .into_iter()
        .filter(|t| t.0 == 1)
        .map(|t| t.2 - t.1)
        .collect();
    lengths.sort_by(|a, b| b.total_cmp(a));
    let runner_up = lengths.get(1).copied().unwrap_or(0.0);
    assert!(lengths[0] >= 5.0 * runner_up, "{lengths:?}");
}

#[test]
fn percolate_table_and_seeds() {
    let out = stdout(&tda(&["percolate", "--dims", "6,6", "--p-grid", "0,0.3,1", "--trials", "4", "--seed", "9"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "p,betti0,betti1");
    let row = |i: usize| -> Vec<f64> { lines[i].split(',').map(|v| v.parse().unwrap()).collect() };
    assert_eq!(row(1), vec![0.0, 0.0, 0.0]);
    assert_eq!(row(3), vec![1.0, 1.0, 0.0]);

    let from_env = Command::new(env!("CARGO_BIN_EXE_tda"))
        .args(["percolate", "--dims", "6,6", "--p-grid", "0,0.3,1", "--trials", "4"])
        .env("TDA_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(stdout(&from_env), out);
    assert_eq!(tda(&["percolate", "--dims", "6,6", "--p-grid", "0.5,0.1"]).status.code(), Some(4));
}

#[test]
fn plot_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.txt", "0 1 2\n0 2 4\n1 3 4\n");
    let first = stdout(&tda(&["plot", s(&d)]));
    assert!(first.starts_with("<svg"));
    assert_eq!(first.matches(r#"<circle class="point""#).count(), 3);
    assert_eq!(first, stdout(&tda(&["plot", s(&d)])));
    let bars = stdout(&tda(&["plot", s(&d), "--style", "barcode"]));
    assert_eq!(bars.matches(r#"class="bar""#).count(), 3);
    let curves = stdout(&tda(&["plot", s(&d), "--style", "landscape", "--dim", "0"]));
    assert_eq!(curves.matches(r#"class="level""#).count(), 1);

    let empty = write(&dir, "e.txt", "# dim birth death\n");
    let axes = stdout(&tda(&["plot", s(&empty)]));
    assert!(axes.contains(r#"class="axes""#) && !axes.contains("<circle"));
}

#[test]
fn heatmap_writes_a_grid() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.txt", "1 1 3\n1 2 5\n0 0 inf\n");
    let target = dir.path().join("h.txt");
    let args = [
        "heatmap", s(&d), "--dim", "1", "--bandwidth", "0.5", "--window", "0,4,0,6", "--resolution", "8,12",
        "--mode", "persistence", "--out", s(&target),
    ];
    assert!(tda(&args).status.success());
    let grid = read_grid(&target).unwrap();
    assert_eq!(grid.dims(), &[8, 12]);
    assert!(grid.values().iter().all(|&v| v >= 0.0) && grid.values().iter().any(|&v| v > 0.0));
    let bad = ["heatmap", s(&d), "--bandwidth", "0.5", "--window", "0,4,0"];
    assert_eq!(tda(&bad).status.code(), Some(4));
}

#[test]
fn permtest_directories() {
    let dir = TempDir::new().unwrap();
    let make = |name: &str, line: &str| {
        let sub = dir.path().join(name);
        std::fs::create_dir(&sub).unwrap();
        for i in 0..5 {
            std::fs::write(sub.join(format!("{i}.txt")), format!("{line}\n")).unwrap();
        }
        sub
    };
    let wide = make("wide", "0 0 10");
    let narrow = make("narrow", "0 0 0.1");
    let wide_again = make("wide_again", "0 0 10");
    let value = |out: &Output| -> f64 {
        let text = stdout(out);
        text.lines().find_map(|l| l.strip_prefix("p_value ")).unwrap().parse().unwrap()
    };
    let args = ["permtest", s(&wide), s(&narrow), "--n", "1000", "--seed", "5"];
    let first = tda(&args);
    assert!(value(&first) < 0.05);
    assert_eq!(stdout(&first), stdout(&tda(&args)));
    assert_eq!(value(&tda(&["permtest", s(&wide), s(&wide_again), "--n", "200"])), 0.0);
}
