//! Picture of ℝP¹ as a circle, with the fixed ovals drawn just outside it
//! and colored by the sign of q.
//!
//! A real point z = tan φ sits at angle 2φ, so z = 0 is at the bottom,
//! ∞ at the top and positive z on the right.

use std::f64::consts::PI;
use std::fmt::Write;

use realbranes::monodromy::{LoopShape, OvalTrace};
use realbranes::realpoly::{ProjectivePoint, Sign};
use realbranes::spectral::{QuadDifferential, SpectralInvariants};

const WIDTH: f64 = 520.0;
const HEIGHT: f64 = 600.0;
const CX: f64 = WIDTH / 2.0;
const CY: f64 = 310.0;
const RADIUS: f64 = 170.0;
const OVAL_GAP: f64 = 16.0;
const POSITIVE: &str = "#1f77b4";
const NEGATIVE: &str = "#d62728";
const STEPS_PER_SEGMENT: usize = 96;

fn at(phi: f64, r: f64) -> (f64, f64) {
    (CX + r * (2.0 * phi).sin(), CY + r * (2.0 * phi).cos())
}

fn phi_of(z: &ProjectivePoint) -> Option<f64> {
    match z {
        ProjectivePoint::Infinity => Some(PI / 2.0),
        ProjectivePoint::Finite(g) => {
            let (re, im) = g.to_f64();
            (im == 0.0).then(|| re.atan())
        }
    }
}

/// φ at loop parameter t, and whether t lies in the half of the loop that
/// is drawn (the other half retraces it on the second sheet).
fn loop_phi(shape: LoopShape, t: f64) -> (f64, bool) {
    match shape {
        LoopShape::Arc { phi_start, phi_end } => {
            let c = (phi_start + phi_end) / 2.0;
            let h = (phi_end - phi_start) / 2.0;
            let t = t.rem_euclid(2.0 * PI);
            (c - h * t.cos(), t <= PI + 1e-12)
        }
        LoopShape::WholeLine { length } => {
            let t = t.rem_euclid(length);
            (t, t <= PI + 1e-12)
        }
    }
}

fn polyline(out: &mut String, pts: &[(f64, f64)], color: &str) {
    if pts.len() < 2 {
        return;
    }
    let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
    let _ = writeln!(
        out,
        r#"  <polyline points="{}" fill="none" stroke="{color}" stroke-width="4" stroke-linecap="round"/>"#,
        coords.join(" ")
    );
}

fn draw_trace(out: &mut String, trace: &OvalTrace, radius: f64) {
    let period = match trace.shape {
        LoopShape::Arc { .. } => 2.0 * PI,
        LoopShape::WholeLine { length } => length,
    };
    for seg in &trace.segments {
        let color = if seg.sign == Sign::Positive { POSITIVE } else { NEGATIVE };
        let mut end = seg.t_end;
        if end <= seg.t_start {
            end += period;
        }
        let mut run = Vec::new();
        for i in 0..=STEPS_PER_SEGMENT {
            let t = seg.t_start + (end - seg.t_start) * i as f64 / STEPS_PER_SEGMENT as f64;
            let (phi, shown) = loop_phi(trace.shape, t);
            if shown {
                run.push(at(phi, radius));
            } else {
                polyline(out, &run, color);
                run.clear();
            }
        }
        polyline(out, &run, color);
    }
}

/// Renders the diagram. `traces` come from the monodromy tracer and give the
/// sign of q along each oval; `inv` is only used for the caption.
pub fn render(q: &QuadDifferential, traces: &[OvalTrace], inv: Option<&SpectralInvariants>) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"  <rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"  <circle cx="{CX}" cy="{CY}" r="{RADIUS}" fill="none" stroke="gray" stroke-width="1.5"/>"#
    );
    let (tx, ty) = at(PI / 2.0, RADIUS + 3.5 * OVAL_GAP);
    let _ = writeln!(out, r#"  <text x="{tx:.2}" y="{:.2}" text-anchor="middle">∞</text>"#, ty + 4.0);
    let (bx, by) = at(0.0, RADIUS + 3.5 * OVAL_GAP);
    let _ = writeln!(out, r#"  <text x="{bx:.2}" y="{:.2}" text-anchor="middle">0</text>"#, by + 4.0);

    for trace in traces {
        // The two sheets over ℝP¹ for odd genus are drawn on separate rings.
        let ring = match trace.shape {
            LoopShape::WholeLine { length } if length < 1.5 * PI => 1.0 + trace.oval as f64,
            _ => 1.0,
        };
        draw_trace(&mut out, trace, RADIUS + ring * OVAL_GAP);
    }

    for root in &q.curve().roots().real_roots {
        let (x, y) = at(root.midpoint_f64().atan(), RADIUS);
        let _ = writeln!(out, r#"  <circle cx="{x:.2}" cy="{y:.2}" r="4" fill="black"/>"#);
    }
    let mut complex = Vec::new();
    for z in q.zeros() {
        match phi_of(z) {
            Some(phi) => {
                let (x, y) = at(phi, RADIUS);
                let _ = writeln!(
                    out,
                    r#"  <path d="M{:.2},{:.2} l10,10 m0,-10 l-10,10" stroke="black" stroke-width="2"/>"#,
                    x - 5.0,
                    y - 5.0
                );
            }
            None => complex.push(z),
        }
    }

    let mut caption = vec![format!(
        "p = {}   sign {}   {}",
        q.curve().polynomial(),
        q.sign().symbol(),
        q.kind().name()
    )];
    if let Some(inv) = inv {
        caption.push(format!(
            "n = {}  n+ = {}  n0 = {}  u = {}  nS = {}",
            inv.n, inv.n_plus, inv.n_zero, inv.u, inv.n_s
        ));
    }
    if !complex.is_empty() {
        let list: Vec<String> = complex
            .iter()
            .map(|z| z.to_string())
            .collect();
        caption.push(format!("non-real zeros: {}", list.join(", ")));
    }
    for (i, line) in caption.iter().enumerate() {
        let _ = writeln!(out, r#"  <text x="12" y="{}">{}</text>"#, 20 + 16 * i, escape(line));
    }
    let _ = writeln!(
        out,
        r#"  <text x="12" y="{}"><tspan fill="{POSITIVE}">q &gt; 0</tspan>  <tspan fill="{NEGATIVE}">q &lt; 0</tspan>  ● branch point  × zero</text>"#,
        HEIGHT - 12.0
    );
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_at_bottom_infinity_at_top() {
        let (x0, y0) = at(0.0, RADIUS);
        let (xi, yi) = at(PI / 2.0, RADIUS);
        assert!((x0 - CX).abs() < 1e-9 && y0 > CY);
        assert!((xi - CX).abs() < 1e-9 && yi < CY);
        let (x1, _) = at(1f64.atan(), RADIUS);
        assert!(x1 > CX);
    }

    #[test]
    fn arc_first_half_covers_interval() {
        let shape = LoopShape::Arc { phi_start: 0.1, phi_end: 0.5 };
        let (phi, shown) = loop_phi(shape, 0.0);
        assert!((phi - 0.1).abs() < 1e-12 && shown);
        let (phi, shown) = loop_phi(shape, PI);
        assert!((phi - 0.5).abs() < 1e-12 && shown);
        assert!(!loop_phi(shape, 1.5 * PI).1);
    }
}
