//! Static SVG figures of node sets and curves.
//!
//! Coordinates are converted to `f64` here and only here; curves are traced
//! by marching squares over a sampled grid, so the picture is display-grade.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::{QNodeSet, QPoly};

const SIZE: f64 = 480.0;
const PAD: f64 = 24.0;
const GRID: usize = 240;
const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

struct View {
    min_x: f64,
    min_y: f64,
    span: f64,
}

impl View {
    fn fit(points: &[(f64, f64)]) -> Self {
        let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (-1.0f64, 1.0f64, -1.0f64, 1.0f64);
        if let Some(&(x, y)) = points.first() {
            (lo_x, hi_x, lo_y, hi_y) = (x, x, y, y);
        }
        for &(x, y) in points {
            lo_x = lo_x.min(x);
            hi_x = hi_x.max(x);
            lo_y = lo_y.min(y);
            hi_y = hi_y.max(y);
        }
        let span = (hi_x - lo_x).max(hi_y - lo_y).max(1.0) * 1.2;
        View { min_x: (lo_x + hi_x - span) / 2.0, min_y: (lo_y + hi_y - span) / 2.0, span }
    }

    fn to_px(&self, x: f64, y: f64) -> (f64, f64) {
        let s = (SIZE - 2.0 * PAD) / self.span;
        (PAD + (x - self.min_x) * s, SIZE - PAD - (y - self.min_y) * s)
    }

    fn world(&self, i: usize, j: usize) -> (f64, f64) {
        let step = self.span / GRID as f64;
        (self.min_x + i as f64 * step, self.min_y + j as f64 * step)
    }
}

fn eval_f64(coeffs: &[(usize, usize, f64)], x: f64, y: f64) -> f64 {
    coeffs.iter().map(|&(i, j, c)| c * x.powi(i as i32) * y.powi(j as i32)).sum()
}

fn contour(poly: &QPoly, view: &View) -> Vec<((f64, f64), (f64, f64))> {
    let coeffs: Vec<(usize, usize, f64)> = poly
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(idx, c)| {
            let (i, j) = crate::poly::mono_unindex(idx);
            (i, j, c.to_f64().unwrap_or(0.0))
        })
        .collect();
    let values: Vec<Vec<f64>> = (0..=GRID)
        .map(|i| {
            (0..=GRID)
                .map(|j| {
                    let (x, y) = view.world(i, j);
                    eval_f64(&coeffs, x, y)
                })
                .collect()
        })
        .collect();

    let mut segments = Vec::new();
    for i in 0..GRID {
        for j in 0..GRID {
            // Corners counter-clockwise from the lower left.
            let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            let mut crossings = Vec::new();
            for e in 0..4 {
                let (a, b) = (corners[e], corners[(e + 1) % 4]);
                let (va, vb) = (values[a.0][a.1], values[b.0][b.1]);
                if (va < 0.0) != (vb < 0.0) {
                    let t = va / (va - vb);
                    let (xa, ya) = view.world(a.0, a.1);
                    let (xb, yb) = view.world(b.0, b.1);
                    crossings.push((xa + t * (xb - xa), ya + t * (yb - ya)));
                }
            }
            for pair in crossings.chunks(2) {
                if let [p, q] = pair {
                    segments.push((*p, *q));
                }
            }
        }
    }
    segments
}

pub fn render(nodes: &QNodeSet, curves: &[QPoly]) -> String {
    let points: Vec<(f64, f64)> = nodes
        .iter()
        .map(|a| (a.x.to_f64().unwrap_or(0.0), a.y.to_f64().unwrap_or(0.0)))
        .collect();
    let view = View::fit(&points);

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (ci, poly) in curves.iter().enumerate() {
        let mut d = String::new();
        for ((x0, y0), (x1, y1)) in contour(poly, &view) {
            let (px0, py0) = view.to_px(x0, y0);
            let (px1, py1) = view.to_px(x1, y1);
            write!(d, "M{px0:.2} {py0:.2}L{px1:.2} {py1:.2}").unwrap();
        }
        writeln!(
            out,
            r#"<path d="{d}" fill="none" stroke="{}" stroke-width="1.5"><title>{}</title></path>"#,
            COLORS[ci % COLORS.len()],
            poly
        )
        .unwrap();
    }
    for (a, &(x, y)) in nodes.iter().zip(&points) {
        let (px, py) = view.to_px(x, y);
        writeln!(
            out,
            r#"<circle cx="{px:.2}" cy="{py:.2}" r="4" fill="black"><title>{a}</title></circle>"#
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}
