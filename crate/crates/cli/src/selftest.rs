//! Recompute the worked GL(2)/GL(4) examples and diff against embedded
//! golden text.

use std::fmt::Write;

use vogan_core::kl::KlEngine;
use vogan_core::ktheory::ArthurData;
use vogan_core::parse::parse_arthur;
use vogan_core::{IntMatrix, Result};

pub const GOLDEN: &str = include_str!("golden.txt");

fn rows(m: &IntMatrix) -> String {
    let body: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", body.join(", "))
}

fn list(v: &[u64]) -> String {
    let cells: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", cells.join(", "))
}

/// One `== name` section per example, in the golden layout.
pub fn compute(engine: &KlEngine, max_points: usize) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();

    let gl2 = ArthurData::new(&parse_arthur("(a=2,b=1)")?, engine, max_points)?;
    let g = gl2.group();
    let mut s = String::new();
    writeln!(s, "orbits = {}", g.len()).unwrap();
    writeln!(s, "dims = {}", list(g.dims())).unwrap();
    writeln!(s, "m = {}", rows(g.m())).unwrap();
    writeln!(s, "c = {}", rows(g.c())).unwrap();
    out.push(("gl2-steinberg".to_string(), s));

    let gl4 = ArthurData::new(&parse_arthur("(a=2,b=1)+(a=1,b=2)")?, engine, max_points)?;
    let g = gl4.group();
    let mut s = String::new();
    writeln!(s, "orbits = {}", g.len()).unwrap();
    writeln!(s, "dims = {}", list(g.dims())).unwrap();
    writeln!(s, "c = {}", rows(g.c())).unwrap();
    writeln!(s, "m = {}", rows(g.m())).unwrap();
    writeln!(s, "psi_orbit = {}", gl4.psi_index()?).unwrap();
    out.push(("gl4-rank".to_string(), s));

    let e = &gl4.endoscopy;
    let levi = &e.levi;
    let psi_m = gl4.eta_levi()?.coords.iter().position(|&v| v == 1).unwrap_or(usize::MAX);
    let mut s = String::new();
    writeln!(s, "orbits = {}", levi.len()).unwrap();
    writeln!(s, "psi_orbit = {psi_m}").unwrap();
    writeln!(s, "c = {}", rows(levi.c())).unwrap();
    writeln!(s, "c_inv = {}", rows(levi.c_inv())).unwrap();
    writeln!(s, "m_inv = {}", rows(levi.m_inv())).unwrap();
    out.push(("gl4-levi".to_string(), s));

    let lift = e.lift_sim()?.matrix;
    let mut s = String::new();
    writeln!(s, "eps_sts = {}", rows(&e.eps_star_std().matrix)).unwrap();
    writeln!(s, "eps_ssim = {}", rows(&e.eps_star_simple()?.matrix)).unwrap();
    writeln!(s, "lift_sim = {}", rows(&lift)).unwrap();
    let assignments: Vec<String> = (0..levi.len())
        .map(|t| {
            let name: String = levi.tuples()[t].iter().map(|i| i.to_string()).collect();
            let col = lift.column(t);
            let target = match (col.iter().filter(|&&v| v != 0).count(), col.iter().position(|&v| v == 1)) {
                (1, Some(k)) => k.to_string(),
                _ => format!("{col:?}"),
            };
            format!("{name}->{target}")
        })
        .collect();
    writeln!(s, "lift = {}", assignments.join(", ")).unwrap();
    out.push(("gl4-endoscopy".to_string(), s));

    Ok(out)
}

/// Split the golden text into `(name, body)` sections.
pub fn golden_sections() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    for line in GOLDEN.lines() {
        if let Some(name) = line.strip_prefix("== ") {
            out.push((name.to_string(), String::new()));
        } else if let Some((_, body)) = out.last_mut() {
            body.push_str(line);
            body.push('\n');
        }
    }
    out
}

pub struct Outcome {
    pub name: String,
    pub matched: bool,
    pub expected: String,
    pub actual: String,
}

pub fn run(engine: &KlEngine, max_points: usize) -> Result<Vec<Outcome>> {
    let computed = compute(engine, max_points)?;
    Ok(golden_sections()
        .into_iter()
        .map(|(name, expected)| {
            let actual = computed
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, b)| b.clone())
                .unwrap_or_default();
            Outcome {
                matched: actual == expected,
                name,
                expected,
                actual,
            }
        })
        .collect())
}
