//! SVG pictures of planar arrangements, with every region labeled by its
//! level.
//!
//! A type-A arrangement in `R^3` is drawn in the plane `x1 + x2 + x3 = 0`,
//! which every hyperplane meets in a line. Geometry is done exactly in
//! rational coordinates `(U, V)`; the only floating-point step is the final
//! scaling to screen units, so output is byte-stable.
//!
//! For `R^3` the coordinates are `U = (x1 - x3) + (x2 - x3)`, `V = x1 - x2`,
//! shown with axis scales `1/sqrt(6)` and `1/sqrt(2)`. That is an isometry of
//! the plane onto the screen in which `x1 - x2 = a` is horizontal.

use crate::document::ArrangementDocument;
use crate::error::CliError;
use hyparr_core::exactmath::{dot, int, ratio, Scalar, Sign};
use hyparr_core::regions::{enumerate_regions, Region};
use hyparr_core::Direction;
use num::{Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;
use std::fmt::Write;

const DRAW_SIZE: f64 = 560.0;
const MARGIN: f64 = 20.0;

/// `normal . (U, V) = offset`, with the same sign as the hyperplane's own
/// linear function.
#[derive(Clone, Debug)]
struct PlaneLine {
    normal: [Scalar; 2],
    offset: Scalar,
}

impl PlaneLine {
    fn value(&self, p: &[Scalar; 2]) -> Scalar {
        &self.normal[0] * &p[0] + &self.normal[1] * &p[1] - &self.offset
    }
}

struct Chart {
    lines: Vec<PlaneLine>,
    scale: [f64; 2],
}

fn chart(doc: &ArrangementDocument) -> Result<Chart, CliError> {
    let arr = &doc.arrangement;
    match arr.dim() {
        2 => Ok(Chart {
            lines: arr
                .hyperplanes()
                .iter()
                .map(|h| PlaneLine {
                    normal: [h.normal()[0].clone(), h.normal()[1].clone()],
                    offset: h.offset().clone(),
                })
                .collect(),
            scale: [1.0, 1.0],
        }),
        3 => {
            // x1 - x2 = V, x2 - x3 = (U - V)/2, x1 - x3 = (U + V)/2
            let half = ratio(1, 2);
            let lines = arr
                .hyperplanes()
                .iter()
                .enumerate()
                .map(|(i, h)| {
                    let normal = match Direction::classify(h.normal()) {
                        Some(Direction::Diff(1, 2)) => [int(0), int(1)],
                        Some(Direction::Diff(2, 3)) => [half.clone(), -half.clone()],
                        Some(Direction::Diff(1, 3)) => [half.clone(), half.clone()],
                        _ => {
                            return Err(CliError::Input(format!(
                                "render: {} is not parallel to a type-A root hyperplane; \
                                 only type-A arrangements can be drawn in dimension 3",
                                doc.label(i)
                            )))
                        }
                    };
                    Ok(PlaneLine {
                        normal,
                        offset: h.offset().clone(),
                    })
                })
                .collect::<Result<_, _>>()?;
            Ok(Chart {
                lines,
                scale: [1.0 / 6f64.sqrt(), 1.0 / 2f64.sqrt()],
            })
        }
        d => Err(CliError::Input(format!(
            "render supports ambient dimension 2, or type-A arrangements in dimension 3; got dimension {d}"
        ))),
    }
}

fn intersection(a: &PlaneLine, b: &PlaneLine) -> Option<[Scalar; 2]> {
    let det = &a.normal[0] * &b.normal[1] - &a.normal[1] * &b.normal[0];
    if det.is_zero() {
        return None;
    }
    let u = (&a.offset * &b.normal[1] - &a.normal[1] * &b.offset) / &det;
    let v = (&a.normal[0] * &b.offset - &a.offset * &b.normal[0]) / &det;
    Some([u, v])
}

/// Closed rectangle `[lo[0], hi[0]] x [lo[1], hi[1]]` in chart coordinates.
#[derive(Clone, Debug)]
struct ViewBox {
    lo: [Scalar; 2],
    hi: [Scalar; 2],
}

impl ViewBox {
    fn corners(&self) -> Vec<[Scalar; 2]> {
        vec![
            [self.lo[0].clone(), self.lo[1].clone()],
            [self.hi[0].clone(), self.lo[1].clone()],
            [self.hi[0].clone(), self.hi[1].clone()],
            [self.lo[0].clone(), self.hi[1].clone()],
        ]
    }
}

/// Bounding box of all pairwise intersection points, padded by 20% per
/// side. With fewer than two points the origin and the foot of the
/// perpendicular from the origin to each line are included as well.
fn view_box(lines: &[PlaneLine]) -> ViewBox {
    let mut points = BTreeSet::new();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if let Some(p) = intersection(a, b) {
                points.insert(p);
            }
        }
    }
    if points.len() < 2 {
        points.insert([Scalar::zero(), Scalar::zero()]);
        for l in lines {
            let n2 = dot(&l.normal, &l.normal);
            let t = &l.offset / n2;
            points.insert([&l.normal[0] * &t, &l.normal[1] * &t]);
        }
    }
    let mut lo = [Scalar::zero(), Scalar::zero()];
    let mut hi = [Scalar::zero(), Scalar::zero()];
    for axis in 0..2 {
        lo[axis] = points.iter().map(|p| p[axis].clone()).min().expect("nonempty");
        hi[axis] = points.iter().map(|p| p[axis].clone()).max().expect("nonempty");
        if lo[axis] == hi[axis] {
            lo[axis] -= int(1);
            hi[axis] += int(1);
        }
        let pad = (&hi[axis] - &lo[axis]) * ratio(1, 5);
        lo[axis] -= &pad;
        hi[axis] += &pad;
    }
    ViewBox { lo, hi }
}

/// Clips a convex polygon to `sign * line.value >= 0`.
fn clip(polygon: &[[Scalar; 2]], line: &PlaneLine, sign: Sign) -> Vec<[Scalar; 2]> {
    let mut out = Vec::new();
    for (i, p) in polygon.iter().enumerate() {
        let q = &polygon[(i + 1) % polygon.len()];
        let vp = sign.apply(&line.value(p));
        let vq = sign.apply(&line.value(q));
        if !vp.is_negative() {
            out.push(p.clone());
        }
        if (vp.is_positive() && vq.is_negative()) || (vp.is_negative() && vq.is_positive()) {
            let t = &vp / (&vp - &vq);
            out.push([&p[0] + (&q[0] - &p[0]) * &t, &p[1] + (&q[1] - &p[1]) * &t]);
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// A point strictly inside `region ∩ box`: the average of the vertices of
/// the clipped polygon.
fn label_point(lines: &[PlaneLine], signs: &[Sign], view: &ViewBox) -> Option<[Scalar; 2]> {
    let mut polygon = view.corners();
    for (l, s) in lines.iter().zip(signs) {
        polygon = clip(&polygon, l, *s);
        if polygon.len() < 3 {
            return None;
        }
    }
    let k = Scalar::from_integer(polygon.len().into());
    let mut c = [Scalar::zero(), Scalar::zero()];
    for p in &polygon {
        c[0] += &p[0];
        c[1] += &p[1];
    }
    let c = [&c[0] / &k, &c[1] / &k];
    let inside = lines
        .iter()
        .zip(signs)
        .all(|(l, s)| s.apply(&l.value(&c)).is_positive());
    inside.then_some(c)
}

/// The part of a line inside the box, endpoints ordered by `(U, V)`.
fn segment(line: &PlaneLine, view: &ViewBox) -> Option<([Scalar; 2], [Scalar; 2])> {
    let mut hits = BTreeSet::new();
    for axis in 0..2 {
        let other = 1 - axis;
        if line.normal[other].is_zero() {
            continue;
        }
        for edge in [&view.lo[axis], &view.hi[axis]] {
            let t = (&line.offset - &line.normal[axis] * edge) / &line.normal[other];
            if t >= view.lo[other] && t <= view.hi[other] {
                let mut p = [Scalar::zero(), Scalar::zero()];
                p[axis] = edge.clone();
                p[other] = t;
                hits.insert(p);
            }
        }
    }
    let first = hits.iter().next()?.clone();
    let last = hits.iter().next_back()?.clone();
    (first != last).then_some((first, last))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SceneLine {
    pub label: String,
    pub from: (f64, f64),
    pub to: (f64, f64),
    pub label_at: (f64, f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SceneLabel {
    pub level: usize,
    pub signs: String,
    pub at: (f64, f64),
}

/// Everything drawn, in screen coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Scene {
    pub width: f64,
    pub height: f64,
    pub lines: Vec<SceneLine>,
    pub labels: Vec<SceneLabel>,
}

pub fn scene(doc: &ArrangementDocument) -> Result<Scene, CliError> {
    let regions = enumerate_regions(&doc.arrangement);
    scene_for(doc, &regions)
}

/// Lays out `regions`, which must be the regions of `doc`'s arrangement.
pub fn scene_for(doc: &ArrangementDocument, regions: &[Region]) -> Result<Scene, CliError> {
    let Chart { lines, scale } = chart(doc)?;
    let view = view_box(&lines);
    let f = |x: &Scalar| x.to_f64().expect("finite");
    let extent = [
        (f(&view.hi[0]) - f(&view.lo[0])) * scale[0],
        (f(&view.hi[1]) - f(&view.lo[1])) * scale[1],
    ];
    let px = DRAW_SIZE / extent[0].max(extent[1]);
    let to_screen = |p: &[Scalar; 2]| {
        (
            MARGIN + (f(&p[0]) - f(&view.lo[0])) * scale[0] * px,
            MARGIN + (f(&view.hi[1]) - f(&p[1])) * scale[1] * px,
        )
    };

    let mut scene_lines = Vec::new();
    for (i, l) in lines.iter().enumerate() {
        let (a, b) = segment(l, &view)
            .ok_or_else(|| CliError::Internal(format!("{} misses the view box", doc.label(i))))?;
        let (from, to) = (to_screen(&a), to_screen(&b));
        let len = ((to.0 - from.0).powi(2) + (to.1 - from.1).powi(2)).sqrt();
        let back = 16.0 / len;
        scene_lines.push(SceneLine {
            label: doc.label(i),
            from,
            to,
            label_at: (to.0 + (from.0 - to.0) * back, to.1 + (from.1 - to.1) * back - 4.0),
        });
    }

    let labels = regions
        .iter()
        .map(|r| {
            let at = label_point(&lines, &r.signs, &view).ok_or_else(|| {
                CliError::Internal(format!("region {} misses the view box", r.sign_string()))
            })?;
            Ok(SceneLabel {
                level: r.level,
                signs: r.sign_string(),
                at: to_screen(&at),
            })
        })
        .collect::<Result<_, CliError>>()?;

    Ok(Scene {
        width: extent[0] * px + 2.0 * MARGIN,
        height: extent[1] * px + 2.0 * MARGIN,
        lines: scene_lines,
        labels,
    })
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

pub fn to_svg(scene: &Scene) -> String {
    let mut s = String::new();
    let (w, h) = (scene.width, scene.height);
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
    )
    .unwrap();
    writeln!(s, r#"  <rect x="0" y="0" width="{w:.2}" height="{h:.2}" fill="white"/>"#).unwrap();
    writeln!(s, r#"  <g stroke="black" stroke-width="1.5">"#).unwrap();
    for l in &scene.lines {
        writeln!(
            s,
            r#"    <line class="hyperplane" data-label="{}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            escape(&l.label),
            l.from.0,
            l.from.1,
            l.to.0,
            l.to.1
        )
        .unwrap();
    }
    writeln!(s, "  </g>").unwrap();
    writeln!(s, r#"  <g font-family="sans-serif" font-size="13" fill="steelblue" text-anchor="middle">"#).unwrap();
    for l in &scene.lines {
        writeln!(
            s,
            r#"    <text class="hyperplane-label" x="{:.2}" y="{:.2}">{}</text>"#,
            l.label_at.0,
            l.label_at.1,
            escape(&l.label)
        )
        .unwrap();
    }
    writeln!(s, "  </g>").unwrap();
    writeln!(
        s,
        r#"  <g font-family="sans-serif" font-size="16" text-anchor="middle" dominant-baseline="middle">"#
    )
    .unwrap();
    for r in &scene.labels {
        writeln!(
            s,
            r#"    <text class="level" data-signs="{}" x="{:.2}" y="{:.2}">{}</text>"#,
            r.signs, r.at.0, r.at.1, r.level
        )
        .unwrap();
    }
    writeln!(s, "  </g>").unwrap();
    s.push_str("</svg>\n");
    s
}

pub fn render_svg(doc: &ArrangementDocument) -> Result<String, CliError> {
    Ok(to_svg(&scene(doc)?))
}
