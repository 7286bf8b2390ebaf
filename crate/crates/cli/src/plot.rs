//! Per-point CSV and staircase SVG renderings of σ.
//!
//! The staircase puts x in column x mod m and row ⌊x/m⌋ (row 0 at the bottom),
//! so each row is one period of the multiplicity. Members are filled, gaps are
//! hollow, and maximizers of σ over S ∩ [0, c] are red.

use std::fmt::Write as _;
use std::io::Write;

use clifford_core::{profile, DomainKind, NumericalSemigroup};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::report::list;

#[derive(Debug, Serialize)]
struct Row {
    x: u64,
    #[serde(rename = "in_S")]
    in_s: u8,
    sigma_times_2: i128,
    is_argmax: u8,
}

pub fn write_csv<W: Write>(s: &NumericalSemigroup, out: W) -> CliResult<()> {
    let p = profile(s, DomainKind::RestrictedToS);
    let mut w = csv::Writer::from_writer(out);
    let to_io = |e: csv::Error| CliError::io("<csv>", e.into());
    for x in 0..=s.conductor() {
        let twice = x as i128 - 2 * s.count_up_to(x as i64) as i128 + 2;
        w.serialize(Row {
            x,
            in_s: s.contains(x as i64).into(),
            sigma_times_2: twice,
            is_argmax: p.is_argmax(x).into(),
        })
        .map_err(to_io)?;
    }
    w.flush().map_err(|e| CliError::io("<csv>", e))?;
    Ok(())
}

const CELL: u64 = 14;
const MARGIN: u64 = 48;

pub fn render_svg(s: &NumericalSemigroup) -> String {
    let p = profile(s, DomainKind::RestrictedToS);
    let m = s.multiplicity();
    let c = s.conductor();
    let rows = c / m + 1;
    let width = 2 * MARGIN + m * CELL;
    let height = 2 * MARGIN + rows * CELL + 20;
    let cx = |x: u64| MARGIN + (x % m) * CELL + CELL / 2;
    let cy = |x: u64| MARGIN + 20 + (rows - 1 - x / m) * CELL + CELL / 2;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(svg, "<!-- clifford-cli {} -->", env!("CARGO_PKG_VERSION"));
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{MARGIN}" y="{}">{s}  g = {}  c = {}  max σ = {} at {}</text>"#,
        MARGIN / 2,
        s.genus(),
        c,
        p.max_value,
        list(&p.argmax)
    );
    // Frame and axis captions.
    let (x0, y0) = (MARGIN, MARGIN + 20);
    let _ = writeln!(
        svg,
        r##"<rect x="{x0}" y="{y0}" width="{}" height="{}" fill="none" stroke="#999"/>"##,
        m * CELL,
        rows * CELL
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">x mod {m}</text>"#,
        x0 + m * CELL / 2,
        y0 + rows * CELL + 16
    );
    let label_every = rows.div_ceil(40).max(1);
    for row in (0..rows).step_by(label_every as usize) {
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
            x0 - 4,
            cy(row * m) + 4,
            row * m
        );
    }
    for x in 0..=c {
        let (px, py) = (cx(x), cy(x));
        let shape = if p.is_argmax(x) {
            format!(r#"<circle cx="{px}" cy="{py}" r="5" fill="red"/>"#)
        } else if s.contains(x as i64) {
            format!(r#"<circle cx="{px}" cy="{py}" r="4" fill="black"/>"#)
        } else {
            format!(r##"<circle cx="{px}" cy="{py}" r="4" fill="none" stroke="#bbb"/>"##)
        };
        let _ = writeln!(svg, "{shape}");
    }
    let _ = writeln!(svg, "</svg>");
    svg
}
