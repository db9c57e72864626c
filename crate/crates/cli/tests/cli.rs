use bookembed_core::generator::{gen, Family, GenSpec};
use bookembed_core::{parse_rotation_graph, BookEmbedding};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bookembed"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn canned_file(dir: &TempDir, name: &str) -> PathBuf {
    let p = dir.path().join(format!("{name}.txt"));
    let o = bin(&["gen", "--family", name, "-o", path(&p)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    p
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

const C4: &str = "4 4\n0: 1 3\n1: 2 0\n2: 3 1\n3: 0 2\n";

#[test]
fn embed_c6_with_stats() {
    let dir = TempDir::new().unwrap();
    let g = canned_file(&dir, "c6");
    let o = bin(&["embed", path(&g), "--stats", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("# pages=3 p1=5 p2=0 p3=1"), "{out}");
    assert!(out.contains("elapsed_ms="));
    let b = BookEmbedding::parse(&out).unwrap();
    assert_eq!(b.order.len(), 6);
}

#[test]
fn embed_icosahedron_verifies() {
    let dir = TempDir::new().unwrap();
    let g = canned_file(&dir, "icosahedron");
    let out = dir.path().join("ico.emb");
    let o = bin(&["embed", path(&g), "-o", path(&out), "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = bin(&["verify", path(&g), path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ok"));
}

#[test]
fn degree_six_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let g = write(
        &dir,
        "star.txt",
        "7 6\n0: 1 2 3 4 5 6\n1: 0\n2: 0\n3: 0\n4: 0\n5: 0\n6: 0\n",
    );
    let o = bin(&["embed", path(&g)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("degree > 5"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "bad.txt", "3 3\n0: 1 2\n1: x\n2: 0 1\n");
    let o = bin(&["embed", path(&g)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn verify_reports_crossing_witness() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k4.txt", "4 6\n0: 1 2 3\n1: 2 0 3\n2: 0 1 3\n3: 0 2 1\n");
    let g_ok = parse_rotation_graph(&fs::read_to_string(&g).unwrap());
    assert!(g_ok.is_ok());
    let bad = write(
        &dir,
        "bad.emb",
        "order: 0 1 2 3\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n",
    );
    let o = bin(&["verify", path(&g), path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("crossing on page 1: (0 2) x (1 3)"),
        "{}",
        stderr(&o)
    );
    let good = write(
        &dir,
        "good.emb",
        "order: 0 1 2 3\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 2\n2 3 1\n",
    );
    assert_eq!(bin(&["verify", path(&g), path(&good)]).status.code(), Some(0));
}

#[test]
fn oracle_k4() {
    let dir = TempDir::new().unwrap();
    let g = canned_file(&dir, "k4");
    let o = bin(&["oracle", path(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("min_pages=2\n"));
    let witness = write(&dir, "w.emb", out.split_once('\n').unwrap().1);
    assert_eq!(bin(&["verify", path(&g), path(&witness)]).status.code(), Some(0));
    let o = bin(&["draw", path(&g), path(&witness)]);
    assert_eq!(stdout(&o).matches("<path").count(), 6);
}

#[test]
fn oracle_rejects_large_graphs() {
    let dir = TempDir::new().unwrap();
    let g = canned_file(&dir, "icosahedron");
    assert_eq!(bin(&["oracle", path(&g)]).status.code(), Some(2));
    assert_eq!(bin(&["oracle", path(&g), "--limit", "8"]).status.code(), Some(2));
}

#[test]
fn gen_matches_library() {
    let o = bin(&["gen", "--family", "random", "--n", "50", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let g = parse_rotation_graph(&stdout(&o)).unwrap();
    let want = gen(GenSpec {
        family: Family::Random,
        n: 50,
        seed: 7,
    })
    .unwrap();
    assert_eq!(g, want);
    assert_eq!(bin(&["gen", "--family", "nope"]).status.code(), Some(2));
}

#[test]
fn draw_c4_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let emb = dir.path().join("c4.emb");
    assert_eq!(bin(&["embed", path(&g), "-o", path(&emb)]).status.code(), Some(0));
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    assert_eq!(
        bin(&["draw", path(&g), path(&emb), "-o", path(&a)]).status.code(),
        Some(0)
    );
    assert_eq!(
        bin(&["draw", path(&g), path(&emb), "-o", path(&b)]).status.code(),
        Some(0)
    );
    let svg = fs::read(&a).unwrap();
    assert_eq!(svg, fs::read(&b).unwrap());
    let svg = String::from_utf8(svg).unwrap();
    assert_eq!(svg.matches("<circle").count(), 4);
    assert_eq!(svg.matches("class=\"page1\"").count(), 3);
    assert_eq!(svg.matches("class=\"page3\"").count(), 1);
}

#[test]
fn draw_rejects_mismatched_files() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let emb = write(&dir, "tri.emb", "order: 0 1 2\n0 1 1\n1 2 1\n0 2 3\n");
    let o = bin(&["draw", path(&g), path(&emb)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("does not match"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["embed"]).status.code(), Some(2));
    assert_eq!(
        bin(&["verify", "/nonexistent/g", "/nonexistent/e"]).status.code(),
        Some(2)
    );
}

#[test]
fn timing_mode_prints_ratios() {
    let o = bin(&["embed", "--stats", "--family", "random", "--n", "20", "--limit", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 5, "{out}");
    assert!(out.lines().nth(4).unwrap().trim_start().starts_with("160"));
}
