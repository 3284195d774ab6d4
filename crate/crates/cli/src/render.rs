//! Plain-text and LaTeX renderings. JSON goes through `vogan_core::json`.

use std::fmt::Write;

use vogan_core::IntMatrix;

/// Right-aligned grid, one bracketed row per line.
pub fn grid(m: &IntMatrix, indent: &str) -> String {
    let rows = m.to_rows();
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut s = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(s, "{indent}[{}]", cells.join(" ")).unwrap();
    }
    s
}

pub fn bmatrix(name: &str, m: &IntMatrix) -> String {
    let mut s = format!("{name} =\n\\begin{{bmatrix}}\n");
    let rows = m.to_rows();
    for (i, r) in rows.iter().enumerate() {
        let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
        let end = if i + 1 < rows.len() { " \\\\" } else { "" };
        writeln!(s, "    {}{end}", cells.join(" & ")).unwrap();
    }
    s.push_str("\\end{bmatrix}\n");
    s
}

/// Escape the characters of a multisegment that LaTeX treats specially.
pub fn tex(s: &str) -> String {
    s.replace('_', "\\_").replace('@', "\\texttt{@}")
}

pub fn tabular(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = format!("\\begin{{tabular}}{{{}}}\n", "l".repeat(header.len()));
    writeln!(s, "{} \\\\ \\hline", header.join(" & ")).unwrap();
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| tex(c)).collect();
        writeln!(s, "{} \\\\", cells.join(" & ")).unwrap();
    }
    s.push_str("\\end{tabular}\n");
    s
}

pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut s = String::new();
    writeln!(s, "{}", line(header.iter().map(|h| h.to_string()).collect())).unwrap();
    for r in rows {
        writeln!(s, "{}", line(r.clone())).unwrap();
    }
    s
}
