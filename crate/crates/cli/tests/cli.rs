use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const HAMMING_7_4: &str = "2 7 4 E\n1 0 1 0 1 0 1\n0 1 1 0 1 1 0\n0 0 0 1 1 1 1\n1 0 0 0 1 1 0\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lcdembed"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.txt"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines().find_map(|l| l.strip_prefix(&format!("{key}: "))).unwrap_or_else(|| panic!("no `{key}` in:\n{out}"))
}

fn gen(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let o = run(&[&["gen"], args].concat());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    write(dir, name, &stdout(&o))
}

#[test]
fn hamming_hull_and_embedding_length() {
    let dir = TempDir::new().unwrap();
    let h = gen(&dir, "h.txt", &["hamming", "--q", "2", "--r", "3"]);
    let out = stdout(&run(&["hull", h.to_str().unwrap()]));
    assert_eq!(field(&out, "ell"), "3");
    assert_eq!(field(&out, "shortest_embedding_length"), "10");
}

#[test]
fn simplex_is_not_lcd() {
    let dir = TempDir::new().unwrap();
    let s = gen(&dir, "s.txt", &["simplex", "--q", "3", "--r", "2"]);
    let out = stdout(&run(&["lcd-check", s.to_str().unwrap()]));
    assert_eq!(field(&out, "lcd"), "false");
    assert_eq!(field(&out, "ell"), "2");
}

#[test]
fn generated_family_files() {
    let o = stdout(&run(&["gen", "grm", "--q", "2", "--r", "0", "--m", "3"]));
    let rows: Vec<&str> = o.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows, ["2 8 1 E", "1 1 1 1 1 1 1 1"]);
    let o = stdout(&run(&["gen", "simplex", "--q", "4", "--r", "2"]));
    let header = o.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "4 5 2 H");
}

#[test]
fn lowweight_distance_on_large_fixture() {
    let p = fixture("H34_prime_ternary");
    let o = run(&["mindist", p.to_str().unwrap(), "--method", "lowweight", "--max-weight", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "d"), "4 (exact)");
    assert_eq!(field(&out, "witness").split_whitespace().filter(|&c| c != "0").count(), 4);
}

#[test]
fn embed_modes() {
    let dir = TempDir::new().unwrap();
    let base = write(&dir, "base.txt", HAMMING_7_4);
    let b = base.to_str().unwrap();

    let out = stdout(&run(&["embed", b]));
    assert_eq!(field(&out, "# length"), "10");
    assert_eq!(field(&out, "# lcd"), "true");

    let d = write(&dir, "d.txt", "2 3 3 E\n0 0 1\n1 1 1\n0 1 0\n");
    let c = write(&dir, "c.txt", "2 3 1 E\n1 0 1\n");
    let target = dir.path().join("e.txt");
    let o = run(&["embed", b, "--d", d.to_str().unwrap(), "--c", c.to_str().unwrap(), "-o", target.to_str().unwrap(), "--distance"]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "d"), "4");
    let written = std::fs::read_to_string(&target).unwrap();
    let shipped = std::fs::read_to_string(fixture("remark_10_4_4")).unwrap();
    let body = |s: &str| s.lines().filter(|l| !l.starts_with('#')).map(str::to_owned).collect::<Vec<_>>();
    assert_eq!(body(&written), body(&shipped));

    // an LCD code is its own shortest embedding
    let again = stdout(&run(&["embed", target.to_str().unwrap()]));
    assert_eq!(body(&again), body(&written));

    let trivial = stdout(&run(&["embed", b, "--trivial"]));
    assert_eq!(field(&trivial, "# length"), "18");
    assert_eq!(field(&trivial, "# lcd"), "true");
}

#[test]
fn search_strategies() {
    let dir = TempDir::new().unwrap();
    let base = write(&dir, "base.txt", HAMMING_7_4);
    let b = base.to_str().unwrap();
    let out_dir = dir.path().join("best");
    let o = run(&["search", b, "--strategy", "exhaustive", "--keep", "2", "--out-dir", out_dir.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "trials"), "1344");
    assert!(field(&out, "result 1").starts_with("d=4 "));
    assert!(out_dir.join("best_01.txt").exists() && out_dir.join("best_02.txt").exists());

    let o = run(&["search", b, "--budget", "0"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "results"), "0");
    assert!(!out.contains("result 1"));
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let p = fixture("C3_1");
    let dir = TempDir::new().unwrap();
    let base = write(&dir, "base.txt", &stdout(&run(&["puncture", p.to_str().unwrap(), "--coords", "19,20,21,22"])));
    let go = |threads: &str| {
        let o = bin()
            .args(["search", base.to_str().unwrap(), "--seed", "7", "--budget", "3000"])
            .env("LCDEMBED_THREADS", threads)
            .output()
            .unwrap();
        assert!(o.status.success());
        stdout(&o)
    };
    let one = go("1");
    assert_eq!(one, go("4"));
    assert_eq!(one, go("4"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.txt");
    assert_eq!(run(&["hull", missing.to_str().unwrap()]).status.code(), Some(2));

    let dependent = write(&dir, "dep.txt", "2 3 2 E\n1 1 0\n1 1 0\n");
    let o = run(&["hull", dependent.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3") && err.contains("generator not full rank (use rref tool)"), "{err}");

    let bad_symbol = write(&dir, "bad.txt", "2 3 1 E\n1 0 2\n");
    assert_eq!(run(&["hull", bad_symbol.to_str().unwrap()]).status.code(), Some(2));

    let h34 = fixture("H34_prime_ternary");
    assert_eq!(run(&["mindist", h34.to_str().unwrap(), "--method", "enum"]).status.code(), Some(3));

    let base = write(&dir, "base.txt", HAMMING_7_4);
    let d = write(&dir, "d.txt", "2 3 3 E\n1 0 0\n0 1 0\n1 1 0\n");
    let c = write(&dir, "c.txt", "2 3 1 E\n0 0 0\n");
    let o = run(&["embed", base.to_str().unwrap(), "--d", d.to_str().unwrap(), "--c", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));

    let lcd = fixture("remark_10_4_4");
    assert_eq!(run(&["search", lcd.to_str().unwrap()]).status.code(), Some(4));

    let o = bin().args(["hull", lcd.to_str().unwrap()]).env("LCDEMBED_THREADS", "many").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn certify_and_verify_paper() {
    let dir = TempDir::new().unwrap();
    let base = write(&dir, "base.txt", HAMMING_7_4);
    let o = run(&["certify", base.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "minimal"), "true");
    assert_eq!(field(&out, "width 2"), "256 blocks checked");

    let o = run(&["verify-paper"]);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.ends_with("PASS")).count(), 10);
    assert_eq!(field(&out, "passed"), "10/11");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn rref_dual_and_wtenum() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.txt", "3 4 3 E\n1 2 0 1\n2 1 0 2\n0 1 1 1\n");
    let out = stdout(&run(&["rref", m.to_str().unwrap()]));
    assert!(out.lines().any(|l| l == "3 4 2 E"), "{out}");

    let h = write(&dir, "h.txt", HAMMING_7_4);
    let dual = write(&dir, "dual.txt", &stdout(&run(&["dual", h.to_str().unwrap()])));
    let out = stdout(&run(&["wtenum", dual.to_str().unwrap()]));
    assert_eq!(field(&out, "A_0"), "1");
    assert_eq!(field(&out, "A_4"), "7");
    assert!(!out.contains("A_3"));
    assert_eq!(field(&out, "fingerprint").len(), 64);
}
