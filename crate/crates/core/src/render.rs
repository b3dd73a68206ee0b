//! Text and SVG pictures of diagrams, tied diagrams and set partitions.
//!
//! Top points sit left to right on the upper row, bottom points under their
//! columns. Each block is drawn as arcs between consecutive points on each
//! row plus, for a block meeting both rows, one stroke from its leftmost
//! top point to its leftmost bottom point. Ties join the anchors of the
//! shape blocks they merge and are dashed. The lone point of the last
//! column of a bullet diagram gets a dotted strand.

use std::fmt::Write;

use crate::diagram::{bottom_position, Diagram, Kind};
use crate::partition::SetPartition;
use crate::word::Value;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub column_width: f64,
    pub row_gap: f64,
    pub margin: f64,
    pub point_radius: f64,
    pub line_color: String,
    pub tie_color: String,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            column_width: 40.0,
            row_gap: 90.0,
            margin: 24.0,
            point_radius: 3.5,
            line_color: "#202020".into(),
            tie_color: "#c03030".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stroke {
    Line,
    Tie,
    Bullet,
}

pub type Point = (f64, f64);

/// A straight segment, or a quadratic Bézier when `ctrl` is set.
#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    pub block: usize,
    pub stroke: Stroke,
    pub from: Point,
    pub ctrl: Option<Point>,
    pub to: Point,
}

impl Curve {
    fn at(&self, t: f64) -> Point {
        match self.ctrl {
            None => (
                self.from.0 + t * (self.to.0 - self.from.0),
                self.from.1 + t * (self.to.1 - self.from.1),
            ),
            Some(c) => {
                let u = 1.0 - t;
                (
                    u * u * self.from.0 + 2.0 * u * t * c.0 + t * t * self.to.0,
                    u * u * self.from.1 + 2.0 * u * t * c.1 + t * t * self.to.1,
                )
            }
        }
    }

    fn polyline(&self) -> Vec<Point> {
        let steps = if self.ctrl.is_some() { 48 } else { 1 };
        (0..=steps)
            .map(|k| self.at(k as f64 / steps as f64))
            .collect()
    }

    fn svg_path(&self) -> String {
        match self.ctrl {
            None => format!(
                "M {:.1} {:.1} L {:.1} {:.1}",
                self.from.0, self.from.1, self.to.0, self.to.1
            ),
            Some(c) => format!(
                "M {:.1} {:.1} Q {:.1} {:.1} {:.1} {:.1}",
                self.from.0, self.from.1, c.0, c.1, self.to.0, self.to.1
            ),
        }
    }
}

/// Position of one element of the ground set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Spot {
    Top(usize),
    Bottom(usize),
}

struct Layout {
    n: usize,
    rows: usize,
    spec: RenderSpec,
}

impl Layout {
    fn x(&self, col: usize) -> f64 {
        self.spec.margin + (col - 1) as f64 * self.spec.column_width
    }

    fn top_y(&self) -> f64 {
        self.spec.margin
    }

    fn bottom_y(&self) -> f64 {
        self.spec.margin + self.spec.row_gap
    }

    fn point(&self, s: Spot) -> Point {
        match s {
            Spot::Top(c) => (self.x(c), self.top_y()),
            Spot::Bottom(c) => (self.x(c), self.bottom_y()),
        }
    }

    /// Arcs from one row stay within a third of the gap.
    fn depth(&self, span: usize) -> f64 {
        self.spec.row_gap * span as f64 / (3.0 * self.n.max(2) as f64)
    }

    fn width(&self) -> f64 {
        2.0 * self.spec.margin + (self.n.max(1) - 1) as f64 * self.spec.column_width
    }

    fn height(&self) -> f64 {
        2.0 * self.spec.margin
            + if self.rows == 2 {
                self.spec.row_gap
            } else {
                self.spec.row_gap / 2.0
            }
    }

    fn arc(&self, block: usize, stroke: Stroke, a: Spot, b: Spot) -> Curve {
        let (p, q) = (self.point(a), self.point(b));
        let ctrl = match (a, b) {
            (Spot::Top(i), Spot::Top(j)) => {
                Some(((p.0 + q.0) / 2.0, p.1 + 2.0 * self.depth(j.abs_diff(i))))
            }
            (Spot::Bottom(i), Spot::Bottom(j)) => {
                Some(((p.0 + q.0) / 2.0, p.1 - 2.0 * self.depth(j.abs_diff(i))))
            }
            _ => None,
        };
        Curve {
            block,
            stroke,
            from: p,
            ctrl,
            to: q,
        }
    }

    /// The strokes of one block given its spots.
    fn block(&self, block: usize, spots: &[Spot], stroke: Stroke, out: &mut Vec<Curve>) {
        let mut tops: Vec<usize> = spots
            .iter()
            .filter_map(|s| match s {
                Spot::Top(c) => Some(*c),
                _ => None,
            })
            .collect();
        let mut bottoms: Vec<usize> = spots
            .iter()
            .filter_map(|s| match s {
                Spot::Bottom(c) => Some(*c),
                _ => None,
            })
            .collect();
        tops.sort_unstable();
        bottoms.sort_unstable();
        for w in tops.windows(2) {
            out.push(self.arc(block, stroke, Spot::Top(w[0]), Spot::Top(w[1])));
        }
        for w in bottoms.windows(2) {
            out.push(self.arc(block, stroke, Spot::Bottom(w[0]), Spot::Bottom(w[1])));
        }
        if let (Some(&t), Some(&b)) = (tops.first(), bottoms.first()) {
            out.push(self.arc(block, stroke, Spot::Top(t), Spot::Bottom(b)));
        }
    }
}

fn spot(n: usize, kind: Kind, e: usize) -> Spot {
    match bottom_position(n, kind, e) {
        Some(c) => Spot::Bottom(c),
        None => Spot::Top(e),
    }
}

/// Leftmost top point of a block, else its leftmost bottom point.
fn anchor(spots: &[Spot]) -> Spot {
    let top = spots
        .iter()
        .filter_map(|s| match s {
            Spot::Top(c) => Some(*c),
            _ => None,
        })
        .min();
    let bottom = spots
        .iter()
        .filter_map(|s| match s {
            Spot::Bottom(c) => Some(*c),
            _ => None,
        })
        .min();
    match (top, bottom) {
        (Some(c), _) => Spot::Top(c),
        (None, Some(c)) => Spot::Bottom(c),
        (None, None) => unreachable!("blocks are nonempty"),
    }
}

fn diagram_geometry(layout: &Layout, d: &Diagram, out: &mut Vec<Curve>) -> Vec<Vec<Spot>> {
    let (n, kind) = (d.n(), d.kind());
    let blocks: Vec<Vec<Spot>> = d
        .partition()
        .blocks()
        .into_iter()
        .map(|b| b.into_iter().map(|e| spot(n, kind, e)).collect())
        .collect();
    for (k, b) in blocks.iter().enumerate() {
        layout.block(k, b, Stroke::Line, out);
    }
    if kind == Kind::Bullet && n > 0 {
        let k = d.partition().block_of(n);
        out.push(Curve {
            block: k,
            stroke: Stroke::Bullet,
            from: layout.point(Spot::Top(n)),
            ctrl: None,
            to: layout.point(Spot::Bottom(n)),
        });
    }
    blocks
}

fn layout_for(n: usize, rows: usize, spec: &RenderSpec) -> Layout {
    Layout {
        n,
        rows,
        spec: spec.clone(),
    }
}

/// Strokes of a value, plus the spots of every point drawn.
pub fn geometry(x: &Value, spec: &RenderSpec) -> (Vec<Curve>, Vec<(Point, bool)>) {
    let mut curves = Vec::new();
    let points;
    match x {
        Value::Partition(p) => {
            let layout = layout_for(p.ground_size(), 1, spec);
            for (k, b) in p.blocks().into_iter().enumerate() {
                let spots: Vec<Spot> = b.into_iter().map(Spot::Top).collect();
                layout.block(k, &spots, Stroke::Line, &mut curves);
            }
            points = (1..=p.ground_size())
                .map(|c| (layout.point(Spot::Top(c)), false))
                .collect();
        }
        Value::Diagram(d) => {
            let layout = layout_for(d.n(), 2, spec);
            diagram_geometry(&layout, d, &mut curves);
            points = diagram_points(&layout, d);
        }
        Value::Ramified(a) => {
            let layout = layout_for(a.n(), 2, spec);
            let shape_blocks = diagram_geometry(&layout, a.shape(), &mut curves);
            let shape = a.shape().partition();
            for (k, tie) in a.ties().blocks().into_iter().enumerate() {
                let mut reps: Vec<usize> = tie.iter().map(|&e| shape.block_of(e)).collect();
                reps.sort_unstable();
                reps.dedup();
                let anchors: Vec<Spot> = reps.iter().map(|&b| anchor(&shape_blocks[b])).collect();
                // chain the anchors by column, top row first
                let mut ordered = anchors.clone();
                ordered.sort_by_key(|s| match s {
                    Spot::Top(c) => (0, *c),
                    Spot::Bottom(c) => (1, *c),
                });
                for w in ordered.windows(2) {
                    curves.push(Curve {
                        block: shape_blocks.len() + k,
                        stroke: Stroke::Tie,
                        from: layout.point(w[0]),
                        ctrl: None,
                        to: layout.point(w[1]),
                    });
                }
            }
            points = diagram_points(&layout, a.shape());
        }
    }
    (curves, points)
}

/// Points with a flag for the hollow bullet marker.
fn diagram_points(layout: &Layout, d: &Diagram) -> Vec<(Point, bool)> {
    let n = d.n();
    let mut pts: Vec<(Point, bool)> = (1..=n)
        .map(|c| (layout.point(Spot::Top(c)), false))
        .collect();
    let full_bottoms = if d.kind() == Kind::Bullet {
        n.saturating_sub(1)
    } else {
        n
    };
    pts.extend((1..=full_bottoms).map(|c| (layout.point(Spot::Bottom(c)), false)));
    if d.kind() == Kind::Bullet && n > 0 {
        pts.push((layout.point(Spot::Bottom(n)), true));
    }
    pts
}

fn segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let orient =
        |a: Point, b: Point, c: Point| (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
    let eps = 1e-9;
    let (d1, d2) = (orient(q1, q2, p1), orient(q1, q2, p2));
    let (d3, d4) = (orient(p1, p2, q1), orient(p1, p2, q2));
    ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps))
        && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps))
}

/// Pairs of distinct blocks whose solid strokes properly intersect.
pub fn crossings(curves: &[Curve]) -> Vec<(usize, usize)> {
    let solid: Vec<(&Curve, Vec<Point>)> = curves
        .iter()
        .filter(|c| c.stroke == Stroke::Line)
        .map(|c| (c, c.polyline()))
        .collect();
    let mut out = Vec::new();
    for (i, (a, pa)) in solid.iter().enumerate() {
        for (b, pb) in &solid[i + 1..] {
            if a.block == b.block {
                continue;
            }
            let hit = pa.windows(2).any(|s| {
                pb.windows(2)
                    .any(|t| segments_cross(s[0], s[1], t[0], t[1]))
            });
            if hit {
                let pair = (a.block.min(b.block), a.block.max(b.block));
                if !out.contains(&pair) {
                    out.push(pair);
                }
            }
        }
    }
    out
}

pub fn svg(x: &Value, spec: &RenderSpec) -> String {
    let (curves, points) = geometry(x, spec);
    let n = match x {
        Value::Partition(p) => p.ground_size(),
        Value::Diagram(d) => d.n(),
        Value::Ramified(a) => a.n(),
    };
    let layout = layout_for(
        n,
        if matches!(x, Value::Partition(_)) {
            1
        } else {
            2
        },
        spec,
    );
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.0}" height="{:.0}" viewBox="0 0 {:.0} {:.0}">"#,
        layout.width(),
        layout.height(),
        layout.width(),
        layout.height()
    );
    for c in &curves {
        let style = match c.stroke {
            Stroke::Line => format!(r#"stroke="{}" stroke-width="2""#, spec.line_color),
            Stroke::Tie => format!(
                r#"stroke="{}" stroke-width="1.5" stroke-dasharray="5 4""#,
                spec.tie_color
            ),
            Stroke::Bullet => {
                r##"stroke="#909090" stroke-width="1" stroke-dasharray="1 3""##.to_string()
            }
        };
        let _ = writeln!(s, r#"  <path d="{}" fill="none" {style}/>"#, c.svg_path());
    }
    for ((px, py), hollow) in points {
        let fill = if hollow {
            "white"
        } else {
            spec.line_color.as_str()
        };
        let _ = writeln!(
            s,
            r#"  <circle cx="{px:.1}" cy="{py:.1}" r="{}" fill="{fill}" stroke="{}"/>"#,
            spec.point_radius, spec.line_color
        );
    }
    s.push_str("</svg>\n");
    s
}

fn label(k: usize) -> String {
    let mut k = k;
    let mut out = Vec::new();
    loop {
        out.push((b'a' + (k % 26) as u8) as char);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    out.iter().rev().collect()
}

fn grid_row(cells: &[String], width: usize) -> String {
    cells
        .iter()
        .map(|c| format!("{c:>width$}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn text_diagram(d: &Diagram, ties: Option<&SetPartition>) -> String {
    let (n, kind) = (d.n(), d.kind());
    let blocks = d.partition().blocks();
    let labels: Vec<String> = (0..blocks.len()).map(label).collect();
    let width = labels
        .iter()
        .map(String::len)
        .max()
        .unwrap_or(1)
        .max(n.to_string().len());
    let mut top = vec![String::new(); n];
    let mut bottom = vec!["*".to_string(); n];
    for (k, b) in blocks.iter().enumerate() {
        for &e in b {
            match spot(n, kind, e) {
                Spot::Top(c) => top[c - 1] = labels[k].clone(),
                Spot::Bottom(c) => bottom[c - 1] = labels[k].clone(),
            }
        }
    }
    let numbers: Vec<String> = (1..=n).map(|c| c.to_string()).collect();
    let mut s = String::new();
    let _ = writeln!(s, "       {}", grid_row(&numbers, width));
    let _ = writeln!(s, "top    {}", grid_row(&top, width));
    let _ = writeln!(s, "bottom {}", grid_row(&bottom, width));
    if let Some(ties) = ties {
        let groups: Vec<String> = ties
            .blocks()
            .into_iter()
            .filter_map(|t| {
                let mut ls: Vec<usize> = t.iter().map(|&e| d.partition().block_of(e)).collect();
                ls.sort_unstable();
                ls.dedup();
                (ls.len() > 1).then(|| {
                    format!(
                        "{{{}}}",
                        ls.iter()
                            .map(|&k| labels[k].clone())
                            .collect::<Vec<_>>()
                            .join(" ")
                    )
                })
            })
            .collect();
        let _ = writeln!(
            s,
            "ties   {}",
            if groups.is_empty() {
                "-".to_string()
            } else {
                groups.join(" ")
            }
        );
    }
    s
}

/// A fixed-width grid: one label per block, placed at every point of the
/// block; `*` marks the missing bottom point of a bullet diagram.
pub fn text(x: &Value) -> String {
    match x {
        Value::Partition(p) => {
            let labels: Vec<String> = (1..=p.ground_size())
                .map(|e| label(p.block_of(e)))
                .collect();
            let numbers: Vec<String> = (1..=p.ground_size()).map(|c| c.to_string()).collect();
            let width = labels
                .iter()
                .chain(&numbers)
                .map(String::len)
                .max()
                .unwrap_or(1);
            format!(
                "       {}\nblocks {}\n",
                grid_row(&numbers, width),
                grid_row(&labels, width)
            )
        }
        Value::Diagram(d) => text_diagram(d, None),
        Value::Ramified(a) => text_diagram(a.shape(), Some(a.ties())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;
    use crate::ramified::rgen;
    use crate::word::{eval, Context};

    fn v(word: &str, n: usize, ctx: Context) -> Value {
        eval(&word.parse().unwrap(), n, ctx).unwrap()
    }

    #[test]
    fn identity_is_three_strands() {
        let x = v("", 3, Context::Diagram);
        let (curves, points) = geometry(&x, &RenderSpec::default());
        assert_eq!(curves.len(), 3);
        assert!(curves
            .iter()
            .all(|c| c.ctrl.is_none() && c.from.0 == c.to.0));
        assert_eq!(points.len(), 6);
        assert_eq!(text(&x), "       1 2 3\ntop    a b c\nbottom a b c\n");
    }

    #[test]
    fn tangle_has_two_brackets() {
        let (curves, _) = geometry(&v("t1", 2, Context::Diagram), &RenderSpec::default());
        assert_eq!(curves.len(), 2);
        assert!(curves.iter().all(|c| c.ctrl.is_some()));
        assert!(curves[0].ctrl.unwrap().1 > curves[0].from.1);
        assert!(curves[1].ctrl.unwrap().1 < curves[1].from.1);
    }

    #[test]
    fn f_adds_one_vertical_tie() {
        let x = Value::Ramified(rgen::f(2, 1).unwrap());
        let (curves, _) = geometry(&x, &RenderSpec::default());
        let ties: Vec<&Curve> = curves.iter().filter(|c| c.stroke == Stroke::Tie).collect();
        assert_eq!(curves.len(), 3);
        assert_eq!(ties.len(), 1);
        assert_eq!(ties[0].from.0, ties[0].to.0);
        assert!(text(&x).ends_with("ties   {a b}\n"));
    }

    #[test]
    fn planar_families_draw_without_crossings() {
        for family in [Family::J, Family::PP] {
            for n in 1..=4 {
                for d in family.enumerate(n, Kind::Full, 1 << 16).unwrap() {
                    let (curves, _) = geometry(&Value::Diagram(d.clone()), &RenderSpec::default());
                    assert!(crossings(&curves).is_empty(), "{d}");
                }
            }
        }
    }

    #[test]
    fn crossing_permutation_is_detected() {
        let (curves, _) = geometry(&v("s1", 2, Context::Diagram), &RenderSpec::default());
        assert_eq!(crossings(&curves), vec![(0, 1)]);
    }

    #[test]
    fn output_is_deterministic() {
        let x = v("e1 r2 q3 s1", 3, Context::Ramified);
        let spec = RenderSpec::default();
        assert_eq!(svg(&x, &spec), svg(&x, &spec));
        assert!(svg(&x, &spec).starts_with("<svg"));
    }

    #[test]
    fn bullet_strand_is_marked() {
        let d: Diagram = "n=2 bullet {1,3}{2}".parse().unwrap();
        let x = Value::Diagram(d);
        let (curves, points) = geometry(&x, &RenderSpec::default());
        assert!(curves.iter().any(|c| c.stroke == Stroke::Bullet));
        assert_eq!(points.iter().filter(|p| p.1).count(), 1);
        assert!(text(&x).contains("bottom a *"));
    }
}
