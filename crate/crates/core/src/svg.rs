//! Barcode diagrams as standalone SVG.
//!
//! Bars are horizontal lines stacked by barcode, then dimension, then
//! `(birth, death, id)`. Infinite bars run to the right margin and end in
//! an arrowhead. Output depends only on the input, so it can be compared
//! byte for byte.

use std::collections::HashMap;
use std::fmt::Write;

use crate::barcode::{BarId, Barcode};
use crate::interval::format_endpoint;
use crate::matching::Matching;

const WIDTH: f64 = 640.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 40.0;
const TOP: f64 = 20.0;
const ROW: f64 = 12.0;
const GAP: f64 = 10.0;
const AXIS: f64 = 30.0;

struct Scale {
    lo: f64,
    hi: f64,
}

impl Scale {
    fn new<'a>(barcodes: impl Iterator<Item = &'a Barcode>) -> Scale {
        let mut finite = barcodes
            .flat_map(|b| b.iter())
            .flat_map(|bar| [bar.birth(), bar.death()])
            .filter(|x| x.is_finite());
        let first = finite.next().unwrap_or(0.0);
        let (lo, hi) = finite.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x)));
        if lo == hi {
            Scale { lo, hi: lo + 1.0 }
        } else {
            Scale { lo, hi }
        }
    }

    /// Finite values map into `[LEFT, WIDTH - 2 RIGHT]`, leaving room for
    /// the arrowheads of infinite bars.
    fn x(&self, t: f64) -> f64 {
        if t.is_infinite() {
            WIDTH - RIGHT
        } else {
            LEFT + (t - self.lo) / (self.hi - self.lo) * (WIDTH - LEFT - 2.0 * RIGHT)
        }
    }
}

/// Renders `barcodes` as labelled rows. If `matching` is given, each pair is
/// drawn as a dashed connector from the bar of `barcodes[0]` to the bar of
/// `barcodes[1]` with the same ids as the pair.
pub fn render_svg(barcodes: &[(&str, &Barcode)], matching: Option<&Matching>) -> String {
    let scale = Scale::new(barcodes.iter().map(|(_, b)| *b));
    let mut body = String::new();
    let mut rows: Vec<HashMap<BarId, f64>> = Vec::new();
    let mut y = TOP;
    for (name, barcode) in barcodes {
        let mut row_of = HashMap::new();
        let bars = barcode.sorted_bars();
        let mut current_dim = None;
        for bar in &bars {
            if current_dim != Some(bar.dim) {
                if current_dim.is_some() {
                    y += GAP / 2.0;
                }
                current_dim = Some(bar.dim);
                let _ = writeln!(
                    body,
                    r#"<text class="label" x="{:.2}" y="{:.2}" font-size="10" text-anchor="end">{} H{}</text>"#,
                    LEFT - 8.0,
                    y + 3.0,
                    escape(name),
                    bar.dim
                );
            }
            let (x1, x2) = (scale.x(bar.birth()), scale.x(bar.death()));
            let _ = writeln!(
                body,
                r#"<line class="bar" x1="{x1:.2}" y1="{y:.2}" x2="{x2:.2}" y2="{y:.2}" stroke="black" stroke-width="3"/>"#
            );
            if bar.interval.is_infinite() {
                let _ = writeln!(
                    body,
                    r#"<polygon class="arrow" points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}"/>"#,
                    x2,
                    y - 4.0,
                    x2 + 8.0,
                    y,
                    x2,
                    y + 4.0
                );
            }
            row_of.insert(bar.id, y);
            y += ROW;
        }
        rows.push(row_of);
        y += GAP;
    }

    if let (Some(m), Some(left_rows), Some(right_rows)) = (matching, rows.first(), rows.get(1)) {
        for (a, b) in m.bar_pairs() {
            let (Some(&ya), Some(&yb)) = (left_rows.get(&a.id), right_rows.get(&b.id)) else {
                continue;
            };
            let x = match a.interval.intersection(&b.interval) {
                Some(i) if i.is_infinite() => (scale.x(i.birth()) + scale.x(f64::INFINITY)) / 2.0,
                Some(i) => (scale.x(i.birth()) + scale.x(i.death())) / 2.0,
                None => scale.x(a.birth()),
            };
            let _ = writeln!(
                body,
                r#"<line class="match" x1="{x:.2}" y1="{ya:.2}" x2="{x:.2}" y2="{yb:.2}" stroke="gray" stroke-dasharray="4,3"/>"#
            );
        }
    }

    let axis_y = y.max(TOP + ROW);
    let height = axis_y + AXIS;
    let (x_lo, x_hi) = (scale.x(scale.lo), scale.x(scale.hi));
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.0} {height:.0}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    svg.push_str(&body);
    let _ = writeln!(
        svg,
        r#"<line class="axis" x1="{x_lo:.2}" y1="{axis_y:.2}" x2="{:.2}" y2="{axis_y:.2}" stroke="black"/>"#,
        WIDTH - RIGHT
    );
    for (x, t) in [(x_lo, scale.lo), (x_hi, scale.hi)] {
        let _ = writeln!(
            svg,
            r#"<line class="tick" x1="{x:.2}" y1="{axis_y:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#,
            axis_y + 4.0
        );
        let _ = writeln!(
            svg,
            r#"<text class="tick-label" x="{x:.2}" y="{:.2}" font-size="10" text-anchor="middle">{}</text>"#,
            axis_y + 16.0,
            format_endpoint(t)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
