//! Tableau pictures. Rows run `a_n` (top) down to `a_1`, columns `b_{n-1}`
//! (left) to `b_1`, so the shaded cells fill the lower-left corner.

use std::fmt::Write as _;

use crate::weights::Tableau;

pub fn ascii_tableau(t: &Tableau) -> Vec<String> {
    let n = t.n();
    let width = format!("a{n}").len();
    let mut lines = Vec::with_capacity(n + 1);
    let mut header = " ".repeat(width + 1);
    for j in (1..n).rev() {
        let _ = write!(header, " {:<3}", format!("b{j}"));
    }
    lines.push(header.trim_end().to_string());
    for i in (1..=n).rev() {
        let mut line = format!("{:<width$} ", format!("a{i}"));
        for j in (1..n).rev() {
            line.push_str(if t.is_shaded(i, j) { " ## " } else { " .. " });
        }
        lines.push(line.trim_end().to_string());
    }
    lines
}

const CELL: usize = 28;
const MARGIN: usize = 36;

/// One tableau per place, side by side.
pub fn svg_tableaux(tableaux: &[(String, Tableau)]) -> String {
    let n = tableaux.first().map_or(1, |(_, t)| t.n());
    let panel_w = MARGIN + CELL * n.saturating_sub(1).max(1) + MARGIN / 2;
    let width = panel_w * tableaux.len().max(1);
    let height = MARGIN * 2 + CELL * n;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="monospace" font-size="11">"#
    );
    for (p, (label, t)) in tableaux.iter().enumerate() {
        let x0 = p * panel_w + MARGIN;
        let y0 = MARGIN;
        let _ = writeln!(out, r#"  <text x="{x0}" y="{}">{label}</text>"#, y0 - 20);
        for (c, j) in (1..n).rev().enumerate() {
            let _ = writeln!(
                out,
                r#"  <text x="{}" y="{}">b{j}</text>"#,
                x0 + c * CELL + 6,
                y0 - 4
            );
        }
        for (r, i) in (1..=n).rev().enumerate() {
            let y = y0 + r * CELL;
            let _ = writeln!(out, r#"  <text x="{}" y="{}">a{i}</text>"#, x0 - 28, y + 18);
            for (c, j) in (1..n).rev().enumerate() {
                let fill = if t.is_shaded(i, j) { "#444444" } else { "#ffffff" };
                let _ = writeln!(
                    out,
                    r##"  <rect x="{}" y="{y}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#000000"/>"##,
                    x0 + c * CELL
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
