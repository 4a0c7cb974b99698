use std::path::Path;
use std::process::{Command, Output};

fn coverdepth(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coverdepth"))
        .args(args)
        .current_dir(dir)
        .env_remove("COVERDEPTH_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn workspace() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        ("edge.json", r#"{"n":2,"edges":[[1,2]]}"#),
        ("p3.json", r#"{"n":3,"edges":[[1,2],[2,3]]}"#),
        ("tri.json", r#"{"n":3,"edges":[[1,2],[2,3],[1,3]]}"#),
        ("c4.json", r#"{"n":4,"edges":[[1,2],[2,3],[3,4],[1,4]]}"#),
        (
            "tri_upper.json",
            r#"{"n":3,"edges":[[1,2],[2,3],[1,3]],"upper":[1,2,3],"t":1}"#,
        ),
        ("bad.json", r#"{"n":2,"edges":[[1,3]]}"#),
    ];
    for (name, body) in files {
        std::fs::write(dir.path().join(name), body).unwrap();
    }
    dir
}

#[test]
fn triangle_is_unbalanced_with_witness() {
    let dir = workspace();
    let o = coverdepth(&["check-balanced", "tri.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "UNBALANCED");
    assert_eq!(v["cycle"]["vertices"], serde_json::json!([1, 2, 3]));

    let o = coverdepth(
        &["check-balanced", "c4.json", "--format", "csv"],
        dir.path(),
    );
    assert_eq!(
        stdout(&o),
        "verdict,cycle_vertices,cycle_edges\nBALANCED,,\n"
    );
}

#[test]
fn depth_commands() {
    let dir = workspace();
    let o = coverdepth(&["depth", "--t", "2", "edge.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");

    let o = coverdepth(
        &["depth", "--t", "3", "--ideal", "[[0,1,0],[1,0,1]]"],
        dir.path(),
    );
    assert_eq!(stdout(&o).trim(), "1");

    let o = coverdepth(
        &[
            "depth-function",
            "--t-max",
            "3",
            "tri.json",
            "--format",
            "csv",
        ],
        dir.path(),
    );
    assert_eq!(stdout(&o), "t,depth\n1,1\n2,0\n3,0\n");

    let o = coverdepth(&["dstab", "p3.json"], dir.path());
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn covers_and_cover_ideal() {
    let dir = workspace();
    let o = coverdepth(&["covers", "p3.json"], dir.path());
    let covers: Vec<Vec<usize>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(covers, vec![vec![2], vec![1, 3]]);
    let o = coverdepth(&["cover-ideal", "p3.json"], dir.path());
    let gens: Vec<Vec<u32>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(gens, vec![vec![0, 1, 0], vec![1, 0, 1]]);
}

#[test]
fn betti_reports_koszul_depth() {
    let dir = workspace();
    let o = coverdepth(&["betti", "p3.json", "--t", "2"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["depth"], 1);
    assert_eq!(v["projective_dimension"], 2);
}

#[test]
fn polytope_commands() {
    let dir = workspace();
    let o = coverdepth(
        &[
            "polytope",
            "integrality",
            "tri_upper.json",
            "--format",
            "csv",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "upper,verdict,witness\n1 2 3,FRACTIONAL,\"(1/2,1/2,1/2)\"\n"
    );
    let o = coverdepth(
        &["polytope", "feasibility", "p3.json", "--t-max", "3"],
        dir.path(),
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert!(v.as_array().unwrap().iter().all(|r| r["monotone"] == true));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = workspace();
    assert_eq!(
        coverdepth(&["depth", "edge.json"], dir.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        coverdepth(&["covers", "bad.json"], dir.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        coverdepth(&["covers", "missing.json"], dir.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        coverdepth(&["depth", "--t", "2", "--ideal", "[[1,0],[1]]"], dir.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        coverdepth(&["depth", "--t", "2", "p3.json", "--char", "4"], dir.path())
            .status
            .code(),
        Some(2)
    );
    let o = coverdepth(&["covers", "c4.json", "--max-n", "3"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds cap"));
}

#[test]
fn unbalanced_controls_are_observations() {
    let dir = workspace();
    let o = coverdepth(
        &["verify", "tri.json", "p3.json", "--format", "csv"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("tri,3,3,false,0,2,0,")));
}

#[test]
fn gen_is_seeded() {
    let dir = workspace();
    let args = [
        "gen",
        "--family",
        "bipartite",
        "--left",
        "3",
        "--right",
        "4",
        "--seed",
        "11",
    ];
    let a = stdout(&coverdepth(&args, dir.path()));
    let b = stdout(&coverdepth(&args, dir.path()));
    assert_eq!(a, b);
    let h: coverdepth::Hypergraph = serde_json::from_str(&a).unwrap();
    assert!(h.is_balanced().unwrap().is_balanced());
    let o = coverdepth(&["gen", "--family", "tree", "--seed", "1"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cache_cold_warm_and_corrupt_agree() {
    let dir = workspace();
    let cache = dir.path().join("cache");
    let cache_arg = cache.display().to_string();
    let args = [
        "depth-function",
        "--t-max",
        "4",
        "c4.json",
        "--cache-dir",
        cache_arg.as_str(),
    ];
    let cold = coverdepth(&args, dir.path());
    let warm = coverdepth(&args, dir.path());
    assert_eq!(cold.stdout, warm.stdout);

    let entry = walk(&cache).into_iter().next().expect("cache has entries");
    std::fs::write(&entry, b"not json").unwrap();
    let repaired = coverdepth(&args, dir.path());
    assert_eq!(repaired.status.code(), Some(0));
    assert_eq!(repaired.stdout, cold.stdout);
    assert!(String::from_utf8_lossy(&repaired.stderr).contains("corrupt"));

    std::fs::remove_dir_all(&cache).unwrap();
    assert_eq!(coverdepth(&args, dir.path()).stdout, cold.stdout);
}

fn walk(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.is_dir() {
            out.extend(walk(&path));
        } else {
            out.push(path);
        }
    }
    out.sort();
    out
}
