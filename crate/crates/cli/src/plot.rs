//! Static SVG plots of diagrams, barcodes and landscapes.

use std::fmt::Write as _;

use tda_core::representations::Landscape;
use tda_core::PersistenceDiagram;

pub const WIDTH: f64 = 640.0;
pub const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 60.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 50.0;
const PADDING: f64 = 0.05;
/// Essential classes are drawn this fraction of the span beyond the data.
const INFINITY_OFFSET: f64 = 0.1;
pub const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

fn colour(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

/// Data range padded on both sides; degenerate ranges are widened first.
fn padded(values: impl IntoIterator<Item = f64>) -> (f64, f64) {
    let (mut lo, mut hi) = values
        .into_iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if lo > hi {
        (lo, hi) = (0.0, 1.0);
    } else if lo == hi {
        (lo, hi) = (lo - 0.5, hi + 0.5);
    }
    let pad = (hi - lo) * PADDING;
    (lo - pad, hi + pad)
}

struct Frame {
    x: (f64, f64),
    y: (f64, f64),
    svg: String,
}

impl Frame {
    fn new(x: (f64, f64), y: (f64, f64), x_label: &str, y_label: &str) -> Self {
        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
        );
        let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
        let mut frame = Frame { x, y, svg };
        let (left, bottom) = (MARGIN_LEFT, HEIGHT - MARGIN_BOTTOM);
        let (right, top) = (WIDTH - MARGIN_RIGHT, MARGIN_TOP);
        let _ = writeln!(
            frame.svg,
            r#"<path class="axes" d="M{left:.2} {top:.2} L{left:.2} {bottom:.2} L{right:.2} {bottom:.2}" fill="none" stroke="black"/>"#
        );
        for (value, anchor_x) in [(x.0, left), (x.1, right)] {
            frame.text(anchor_x, bottom + 16.0, "middle", &format!("{value:.3}"));
        }
        for (value, anchor_y) in [(y.0, bottom), (y.1, top)] {
            frame.text(left - 6.0, anchor_y + 4.0, "end", &format!("{value:.3}"));
        }
        frame.text((left + right) / 2.0, HEIGHT - 12.0, "middle", x_label);
        let _ = writeln!(
            frame.svg,
            r#"<text x="16" y="{:.2}" text-anchor="middle" font-size="12" transform="rotate(-90 16 {:.2})">{y_label}</text>"#,
            (top + bottom) / 2.0,
            (top + bottom) / 2.0
        );
        frame
    }

    fn px(&self, v: f64) -> f64 {
        MARGIN_LEFT + (v - self.x.0) / (self.x.1 - self.x.0) * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
    }

    fn py(&self, v: f64) -> f64 {
        HEIGHT - MARGIN_BOTTOM - (v - self.y.0) / (self.y.1 - self.y.0) * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    }

    fn text(&mut self, x: f64, y: f64, anchor: &str, body: &str) {
        let _ = writeln!(
            self.svg,
            r#"<text x="{x:.2}" y="{y:.2}" text-anchor="{anchor}" font-size="12">{body}</text>"#
        );
    }

    fn line(&mut self, class: &str, a: (f64, f64), b: (f64, f64), stroke: &str, extra: &str) {
        let _ = writeln!(
            self.svg,
            r#"<line class="{class}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{stroke}"{extra}/>"#,
            self.px(a.0),
            self.py(a.1),
            self.px(b.0),
            self.py(b.1)
        );
    }

    fn legend(&mut self, entries: &[(usize, String)]) {
        for (row, (c, label)) in entries.iter().enumerate() {
            let y = MARGIN_TOP + 12.0 + 16.0 * row as f64;
            let x = WIDTH - MARGIN_RIGHT - 60.0;
            let _ = writeln!(
                self.svg,
                r#"<rect x="{x:.2}" y="{:.2}" width="10" height="10" fill="{}"/>"#,
                y - 9.0,
                colour(*c)
            );
            self.text(x + 16.0, y, "start", label);
        }
    }

    fn finish(mut self) -> String {
        self.svg.push_str("</svg>\n");
        self.svg
    }
}

fn finite_extent(diagram: &PersistenceDiagram) -> (f64, f64, bool) {
    let finite: Vec<f64> = diagram
        .points()
        .iter()
        .flat_map(|p| [p.birth, p.death])
        .filter(|v| v.is_finite())
        .collect();
    let lo = finite.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = finite.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let essential = diagram.points().iter().any(|p| p.is_essential());
    (lo, hi, essential)
}

/// Stand-in coordinate for infinite deaths.
fn infinity_position(lo: f64, hi: f64) -> f64 {
    if lo > hi {
        1.0
    } else {
        hi + (hi - lo).max(1.0) * INFINITY_OFFSET
    }
}

fn dimension_legend(diagram: &PersistenceDiagram) -> Vec<(usize, String)> {
    let mut dims: Vec<usize> = diagram.points().iter().map(|p| p.dim).collect();
    dims.dedup();
    dims.into_iter().map(|d| (d, format!("H{d}"))).collect()
}

/// Birth against death, one marker per point, with the diagonal.
pub fn diagram_svg(diagram: &PersistenceDiagram) -> String {
    let (lo, hi, essential) = finite_extent(diagram);
    let inf_at = infinity_position(lo, hi);
    let mut values = vec![lo, hi];
    if essential {
        values.push(inf_at);
    }
    let range = padded(values.into_iter().filter(|v| v.is_finite()));
    let mut frame = Frame::new(range, range, "birth", "death");
    frame.line("diagonal", (range.0, range.0), (range.1, range.1), "gray", "");
    if essential {
        frame.line("infinity", (range.0, inf_at), (range.1, inf_at), "gray", r#" stroke-dasharray="4 4""#);
        let y = frame.py(inf_at) - 4.0;
        frame.text(MARGIN_LEFT + 4.0, y, "start", "inf");
    }
    for p in diagram.points() {
        let death = if p.is_essential() { inf_at } else { p.death };
        let _ = writeln!(
            frame.svg,
            r#"<circle class="point" cx="{:.2}" cy="{:.2}" r="4" fill="{}"/>"#,
            frame.px(p.birth),
            frame.py(death),
            colour(p.dim)
        );
    }
    frame.legend(&dimension_legend(diagram));
    frame.finish()
}

/// One horizontal bar per interval, grouped by dimension.
pub fn barcode_svg(diagram: &PersistenceDiagram) -> String {
    let (lo, hi, essential) = finite_extent(diagram);
    let inf_at = infinity_position(lo, hi);
    let mut values = vec![lo, hi];
    if essential {
        values.push(inf_at);
    }
    let x = padded(values.into_iter().filter(|v| v.is_finite()));
    let bars = diagram.len().max(1) as f64;
    let mut frame = Frame::new(x, (0.0, bars + 1.0), "filtration", "interval");
    for (i, p) in diagram.points().iter().enumerate() {
        let row = bars - i as f64;
        let end = if p.is_essential() { inf_at } else { p.death };
        frame.line("bar", (p.birth, row), (end, row), colour(p.dim), r#" stroke-width="2""#);
    }
    frame.legend(&dimension_legend(diagram));
    frame.finish()
}

/// Each level drawn as a polyline through its breakpoints.
pub fn landscape_svg(landscape: &Landscape) -> String {
    let points = landscape.levels().iter().flatten();
    let x = padded(points.clone().map(|p| p.0));
    let y = padded(points.map(|p| p.1).chain([0.0]));
    let mut frame = Frame::new(x, y, "x", "value");
    for (k, level) in landscape.levels().iter().enumerate() {
        let path: Vec<String> = level
            .iter()
            .map(|&(a, b)| format!("{:.2},{:.2}", frame.px(a), frame.py(b)))
            .collect();
        let _ = writeln!(
            frame.svg,
            r#"<polyline class="level" points="{}" fill="none" stroke="{}"/>"#,
            path.join(" "),
            colour(k)
        );
    }
    let entries: Vec<(usize, String)> = (0..landscape.depth().min(PALETTE.len()))
        .map(|k| (k, format!("level {}", k + 1)))
        .collect();
    frame.legend(&entries);
    frame.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn markers(svg: &str) -> Vec<(f64, f64)> {
        svg.lines()
            .filter(|l| l.starts_with(r#"<circle class="point""#))
            .map(|l| {
                let attr = |name: &str| -> f64 {
                    let start = l.find(&format!("{name}=\"")).unwrap() + name.len() + 2;
                    l[start..].split('"').next().unwrap().parse().unwrap()
                };
                (attr("cx"), attr("cy"))
            })
            .collect()
    }

    #[test]
    fn three_markers_above_the_diagonal() {
        let d = PersistenceDiagram::from_triples([(0, 1.0, 2.0), (0, 2.0, 4.0), (1, 3.0, 4.0)]);
        let svg = diagram_svg(&d);
        let found = markers(&svg);
        assert_eq!(found.len(), 3);
        // The x and y axes share one range, so the diagonal is y = bottom - (x - left) in pixels.
        let scale = (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM) / (WIDTH - MARGIN_LEFT - MARGIN_RIGHT);
        for (cx, cy) in found {
            let diagonal_y = HEIGHT - MARGIN_BOTTOM - (cx - MARGIN_LEFT) * scale;
            assert!(cy < diagonal_y, "marker at ({cx}, {cy}) is not above the diagonal");
        }
    }

    #[test]
    fn empty_diagram_draws_axes_only() {
        let svg = diagram_svg(&PersistenceDiagram::default());
        assert!(svg.contains(r#"class="axes""#));
        assert!(markers(&svg).is_empty());
        assert!(barcode_svg(&PersistenceDiagram::default()).contains(r#"class="axes""#));
    }

    #[test]
    fn essential_points_sit_on_the_infinity_line() {
        let d = PersistenceDiagram::from_triples([(0, 0.0, f64::INFINITY), (0, 0.0, 1.0)]);
        let svg = diagram_svg(&d);
        assert!(svg.contains(r#"class="infinity""#));
        // Points are drawn in (dim, birth, death) order: finite first.
        let ys: Vec<f64> = markers(&svg).iter().map(|m| m.1).collect();
        assert!(ys[1] < ys[0]);
    }

    #[test]
    fn palette_follows_dimension() {
        let d = PersistenceDiagram::from_triples([(0, 0.0, 1.0), (1, 0.5, 2.0)]);
        let svg = barcode_svg(&d);
        assert!(svg.contains(PALETTE[0]) && svg.contains(PALETTE[1]));
    }
}
