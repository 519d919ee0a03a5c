use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_typeb-cells"))
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("typeb-cli-{}-{}", name, std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    d
}

fn run(args: &[&str]) -> Output {
    bin().args(args).arg("--no-cache").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn rank_and_core() {
    let o = run(&["rank", "4", "3", "3", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "rank 2, core [2,1]\n");
    let o = run(&["rank", "4,3,3,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["core"], serde_json::json!([2, 1]));
}

#[test]
fn empty_word() {
    let o = run(&["rs", "--rank", "0", "--word", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("insertion:\n(empty)\nrecording:\n(empty)"));
}

#[test]
fn core_squares_render_as_dots() {
    let o = run(&["rs", "--rank", "2", "--word", "-1"]);
    let s = stdout(&o);
    assert!(s.starts_with("w = [-1], r = 2\ninsertion:\n· ·"), "{}", s);
}

#[test]
fn rs_json_and_trace() {
    let o = run(&["rs", "--rank", "1", "--word", "-3 1 -2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["insertion"]["shape"], v["recording"]["shape"]);
    assert_eq!(v["insertion"]["dominoes"].as_array().unwrap().len(), 3);
    let o = run(&["rs", "--rank", "1", "--word", "-3 1 -2", "--trace"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn tableau_counts_square_sum() {
    // rank 1, two dominoes: five shapes, one carrying two tableaux, so 1+1+1+1+4 = 8 = |W_2|
    let o = run(&["tableaux", "--n", "2", "--rank", "1", "--count"]);
    assert_eq!(stdout(&o), "6\n");
    let o = run(&["tableaux", "--shape", "2,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn cycles_and_moving_through() {
    let o = run(&["cycles", "--word", "2 -1 3", "--rank", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!v["cycles"].as_array().unwrap().is_empty());
    // a closed or core-open cycle cannot be moved through
    let o = run(&["mt", "--word", "2 -1 3", "--rank", "1", "--labels", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["mt", "--word", "1 2", "--rank", "0", "--orbit", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap().as_array().unwrap().is_empty());
}

#[test]
fn tableau_from_file() {
    let dir = scratch("tableau");
    std::fs::create_dir_all(&dir).unwrap();
    let o = run(&["rs", "--rank", "0", "--word", "2 1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let path = dir.join("t.json");
    std::fs::write(&path, v["recording"].to_string()).unwrap();
    let o = run(&["cycles", "--tableau", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn symbols_of_the_example() {
    let o = run(&["symbols", "4", "3", "2", "2", "--a", "2", "--b", "1"]);
    let s = stdout(&o);
    assert!(s.contains("[½ 2½ 3½ 4½ / 1]"));
    assert!(s.contains("((1,1,1), (1))"));
    assert!(s.contains("sign        [4,4,2,1]"));
}

#[test]
fn verify_all_small() {
    let o = run(&["verify", "all", "--n", "2", "--a", "1", "--b", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "all", "--n", "2", "--a", "2", "--b", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let at: Vec<usize> = ["params", "conjecture", "modules", "hom", "properties", "timings"]
        .iter()
        .map(|k| text.find(&format!("\n  \"{}\":", k)).unwrap())
        .collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]), "{:?}", at);
}

#[test]
fn cells_alias_and_formats() {
    let o = run(&["cells", "--n", "2", "--a", "2", "--b", "3", "--side", "left", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let total: usize = v["cells"].as_array().unwrap().iter().map(|c| c.as_array().unwrap().len()).sum();
    assert_eq!(total, 8);
    let o = run(&["cells-kl", "--n", "2", "--side", "two-sided", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 9);
    let o = run(&["cells-comb", "--n", "2", "--a", "1", "--b", "2", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 9);
}

#[test]
fn character_table_csv() {
    let o = run(&["characters", "--n", "2"]);
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[0].starts_with("class,"));
    assert!(lines[1].starts_with("size,1,"));
}

#[test]
fn usage_and_bound_errors() {
    assert_eq!(run(&["rank", "4", "x"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "all", "--n", "2", "--a", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "all", "--n", "2", "--max-n-kl", "6"]).status.code(), Some(2));
    assert_eq!(run(&["cells", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["rs", "--word", "1 1"]).status.code(), Some(2));
}

#[test]
fn warm_cache_is_byte_identical() {
    let dir = scratch("cache");
    let args = ["report", "--n", "2", "--format", "json", "--cache-dir", dir.to_str().unwrap()];
    let cold = bin().args(args).output().unwrap();
    assert_eq!(cold.status.code(), Some(0));
    assert!(dir.join("kl-n2-a1-b1.txt").exists());
    let warm = bin().args(args).output().unwrap();
    assert_eq!(cold.stdout, warm.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_file() {
    let dir = scratch("out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rank.txt");
    let o = run(&["rank", "2", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "rank 2, core [2,1]\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
