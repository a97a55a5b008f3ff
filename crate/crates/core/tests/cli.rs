use std::path::Path;
use std::process::{Command, Output};

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data");

fn vcrit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vcrit")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    Path::new(DATA).join(name).to_string_lossy().into_owned()
}

#[test]
fn check_data_files() {
    let o = vcrit(&["check", &data("fig1.edges"), "--k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("11/11 critical"));
    let o = vcrit(&["check", &data("appendix5.edges"), "--k", "5", "--pattern", "P3+P1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("178/178 pass"));
    let o = vcrit(&["check", &data("appendix5.edges"), "--k", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let o = vcrit(&["check", &data("fig1.edges"), "--pattern", "2K2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("7/11 pass"));
}

#[test]
fn census_runs() {
    let o = vcrit(&["census", "--k", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total       178"));
    let o = vcrit(&["census", "--k", "4", "--pattern", "P2+2P1", "--max-order", "9"]);
    assert!(stdout(&o).contains("total         9"));
    let o = vcrit(&["census", "--k", "3", "--pattern", "p3+p1", "--max-order", "5"]);
    assert!(stdout(&o).ends_with("total         2\n"));
    assert_eq!(vcrit(&["census", "--k", "9"]).status.code(), Some(2));
    assert_eq!(vcrit(&["census", "--k", "4", "--pattern", "bogus"]).status.code(), Some(2));
    assert_eq!(vcrit(&["census", "--k", "4", "--pattern", "none", "--max-order", "10"]).status.code(), Some(2));
}

#[test]
fn census_files_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_string_lossy().into_owned();
    let first = vcrit(&["census", "--k", "4", "--out", &out]);
    assert_eq!(first.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("summary.csv")).unwrap();
    assert_eq!(csv, "k,n,count\n4,4,1\n4,5,0\n4,6,1\n4,7,6\n");
    let n7 = std::fs::read_to_string(dir.path().join("k4_n7.g6")).unwrap();
    assert_eq!(n7.lines().count(), 6);
    assert_eq!(vcrit(&["census", "--k", "4", "--out", &out]).stdout, first.stdout);
    assert_eq!(std::fs::read_to_string(dir.path().join("k4_n7.g6")).unwrap(), n7);
}

#[test]
fn color_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let c9bar = dir.path().join("c9bar.g6");
    let c7 = dir.path().join("c7.g6");
    std::fs::write(&c9bar, stdout(&vcrit(&["family", "co-odd-cycle", "5"]))).unwrap();
    std::fs::write(&c7, stdout(&vcrit(&["family", "odd-cycle", "3"]))).unwrap();
    let (c9bar, c7) = (c9bar.to_string_lossy().into_owned(), c7.to_string_lossy().into_owned());
    let o = vcrit(&["color", &c9bar, "--k", "4"]);
    assert!(stdout(&o).contains("NO witness {0,1,2,3,4,5,6,7,8} (9 vertices)"));
    let o = vcrit(&["color", &c9bar, "--k", "5"]);
    assert!(stdout(&o).contains("YES"));
    let o = vcrit(&["color", &c7, "--k", "3"]);
    assert!(stdout(&o).contains("NOT-IN-CLASS"));
    assert_eq!(vcrit(&["color", &c7, "--k", "6"]).status.code(), Some(2));
}

#[test]
fn convert_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("a.g6").to_string_lossy().into_owned();
    let edges = dir.path().join("a.edges").to_string_lossy().into_owned();
    let o = vcrit(&["convert", &data("appendix5.edges"), "--to", "graph6", "--out", &g6]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&g6).unwrap().lines().count(), 178);
    vcrit(&["convert", &g6, "--to", "edges", "--out", &edges]);
    let back = std::fs::read_to_string(&edges).unwrap();
    assert!(back.lines().all(|l| l.contains(": ")));
    let orig = vcrit::parse_graphs(vcrit::data::APPENDIX5_EDGES).unwrap();
    let again = vcrit::parse_graphs(&back).unwrap();
    assert_eq!(orig.len(), again.len());
    for ((_, a), (_, b)) in orig.iter().zip(&again) {
        assert!(vcrit::is_isomorphic(a, b));
    }
    assert_eq!(vcrit(&["convert", "/no/such/file", "--to", "edges"]).status.code(), Some(2));
    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "C~\n~~~\n").unwrap();
    let o = vcrit(&["convert", &bad.to_string_lossy(), "--to", "edges"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(vcrit(&[]).status.code(), Some(2));
    assert_eq!(vcrit(&["check"]).status.code(), Some(2));
    assert_eq!(vcrit(&["family", "clique-cycle", "2"]).status.code(), Some(2));
    assert_eq!(
        stdout(&vcrit(&["family", "clique-cycle", "2", "3", "--to", "edges"])).trim(),
        "5: 0 1, 0 4, 1 2, 2 3, 3 4"
    );
}
