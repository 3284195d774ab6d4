use std::process::{Command, Output};

use vogan_core::json::{MatricesJson, OrbitSpaceJson, PacketJson};

fn vogan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vogan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const PSI: &str = "(a=2,b=1)+(a=1,b=2)";
const LAMBDA: &str = "[1/2]+[1/2]+[-1/2]+[-1/2]";

#[test]
fn selftest_reports_all_examples() {
    let o = vogan(&["selftest"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("4/4 examples match\n"));
}

#[test]
fn parse_failures_exit_with_2() {
    for args in [
        vec!["orbits", "--lambda", "[bad"],
        vec!["packet", "(a=0,b=1)"],
        vec!["orbits", "--lambda", "[0]", "--bogus"],
        vec!["lift", PSI, "--levi", "2,x"],
        vec!["frobnicate"],
        vec![],
    ] {
        let o = vogan(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn guard_and_levi_errors_exit_with_1() {
    let o = vogan(&["packet", "(a=13,b=1)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard exceeded"));

    let o = vogan(&["orbits", "--lambda", "[0]+[1]+[2]", "--max-points", "2"]);
    assert_eq!(o.status.code(), Some(1));

    let o = vogan(&["lift", PSI, "--levi", "3,1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn single_orbit_for_a_point() {
    let o = vogan(&["orbits", "--lambda", "[0]"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("[0]")).count(), 2, "{text}");
    let j: OrbitSpaceJson = serde_json::from_str(&stdout(&vogan(&["--format", "json", "orbits", "--lambda", "[0]"]))).unwrap();
    assert_eq!(j.orbits.len(), 1);
    assert_eq!(j.dim_v, 0);
}

#[test]
fn packet_json_names_the_speh_orbit() {
    let o = vogan(&["packet", PSI, "--format", "json"]);
    let j: PacketJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j.abv_packet, ["[-1/2,1/2]+[1/2]+[-1/2]"]);
    assert_eq!(j.pi_psi, "[-1/2,1/2]+[1/2]+[-1/2]");
    assert_eq!(j.d_psi, 3);
    assert_eq!(j.eta_evs, [0, 1, 0]);
}

#[test]
fn json_is_stable_and_cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let plain = stdout(&vogan(&["matrices", "--lambda", LAMBDA, "--format", "json"]));
    let cold = stdout(&vogan(&["matrices", "--lambda", LAMBDA, "--format", "json", "--cache-dir", d]));
    assert!(dir.path().join("kl_cache.txt").exists());
    let warm = stdout(&vogan(&["matrices", "--lambda", LAMBDA, "--format", "json", "--cache-dir", d]));
    assert_eq!(plain, cold);
    assert_eq!(cold, warm);
    let j: MatricesJson = serde_json::from_str(&plain).unwrap();
    assert_eq!(j.c, [[1, 2, 1], [0, 1, 1], [0, 0, 1]]);
}

#[test]
fn corrupt_cache_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("kl_cache.txt"), "KLCACHE 9\n").unwrap();
    let o = vogan(&["selftest", "--cache-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("version"));
}

#[test]
fn latex_uses_bmatrix() {
    let text = stdout(&vogan(&["matrices", "--lambda", LAMBDA, "--format", "latex"]));
    assert!(text.contains("\\begin{bmatrix}\n    1 & 2 & 1 \\\\\n    0 & 1 & 1 \\\\\n    0 & 0 & 1\n\\end{bmatrix}"), "{text}");
}

#[test]
fn explicit_levi_grouping() {
    let o = vogan(&["lift", "(a=1,b=1)+(a=1,b=1)+(a=2,b=1)", "--levi", "2,2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["levi"].as_array().unwrap().len(), 2);
}

#[test]
fn square_table_lists_every_sheaf() {
    let text = stdout(&vogan(&["check-square", PSI]));
    assert_eq!(text.lines().filter(|l| l.ends_with("pass")).count(), 6, "{text}");
}
