//! SVG 1.1 figures of laminations: the unit circle plus one path per chord.

use std::fmt::Write as _;

use crate::lamination::{unit_point, Chord, Lamination};

#[derive(Debug, Clone)]
pub struct SvgOptions {
    /// Width and height in pixels.
    pub size: u32,
    pub stroke_width: f64,
    /// Radius of the dot drawn for a boundary point, in pixels.
    pub point_radius: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { size: 800, stroke_width: 1.5, point_radius: 3.0 }
    }
}

/// One lamination drawn in one colour.
#[derive(Debug, Clone, Copy)]
pub struct Layer<'a> {
    pub lamination: &'a Lamination,
    pub color: &'a str,
}

pub fn render_svg(lamination: &Lamination, options: &SvgOptions) -> String {
    render_layers(&[Layer { lamination, color: "#c0392b" }], options)
}

/// Draws the layers in order over the unit circle.
pub fn render_layers(layers: &[Layer<'_>], options: &SvgOptions) -> String {
    let size = options.size as f64;
    let center = size / 2.0;
    let radius = size / 2.0 - 2.0 * options.point_radius.max(options.stroke_width) - 4.0;
    let place = |t| {
        let [x, y] = unit_point(t);
        (center + radius * x, center - radius * y)
    };

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        options.size
    );
    let _ = writeln!(
        out,
        r#"<circle cx="{center:.3}" cy="{center:.3}" r="{radius:.3}" fill="none" stroke="black" stroke-width="{:.3}"/>"#,
        options.stroke_width
    );
    for layer in layers {
        for chord in layer.lamination.chords() {
            let d = chord_path(chord, &place, options.point_radius);
            let _ = writeln!(
                out,
                r#"<path d="{d}" fill="{fill}" stroke="{color}" stroke-width="{w:.3}"/>"#,
                fill = if chord.is_point() { layer.color } else { "none" },
                color = layer.color,
                w = options.stroke_width,
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn chord_path(chord: &Chord, place: &impl Fn(crate::lamination::Turn) -> (f64, f64), r: f64) -> String {
    let (x1, y1) = place(chord.a());
    if chord.is_point() {
        format!(
            "M {:.3} {y1:.3} a {r:.3} {r:.3} 0 1 0 {:.3} 0 a {r:.3} {r:.3} 0 1 0 {:.3} 0 Z",
            x1 - r,
            2.0 * r,
            -2.0 * r
        )
    } else {
        let (x2, y2) = place(chord.b());
        format!("M {x1:.3} {y1:.3} L {x2:.3} {y2:.3}")
    }
}

/// Number of drawn shapes (circle and paths) in a rendered document.
pub fn shape_count(svg: &str) -> usize {
    svg.matches("<circle").count() + svg.matches("<path").count()
}
