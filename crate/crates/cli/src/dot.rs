//! Graphviz output with vertices shaded by curvature.

use std::fmt::Write;

use equicurv::{CurvatureResult, Graph};

/// Fill color on a red/white/blue scale anchored at zero: `t = 1` is pure
/// red, `t = -1` pure blue, `t = 0` white.
pub fn diverging_color(t: f64) -> String {
    let t = t.clamp(-1.0, 1.0);
    let fade = |x: f64| (255.0 * (1.0 - x.abs())).round() as u8;
    let (r, g, b) = if t >= 0.0 { (255, fade(t), fade(t)) } else { (fade(t), fade(t), 255) };
    format!("#{:02x}{:02x}{:02x}", r, g, b)
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT text for `g`; each vertex is labeled with its curvature.
pub fn to_dot(g: &Graph, r: &CurvatureResult, name: &str) -> String {
    let approx = r.w.to_f64();
    let scale = approx.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let text: Vec<String> = match r.w.exact() {
        Some(w) => w.iter().map(ToString::to_string).collect(),
        None => approx.iter().map(|x| format!("{:.4}", x)).collect(),
    };
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", escape(name)).unwrap();
    writeln!(out, "  node [shape=circle, style=filled, fontname=\"Helvetica\"];").unwrap();
    for v in 0..g.n() {
        let t = if scale > 0.0 { approx[v] / scale } else { 0.0 };
        writeln!(
            out,
            "  {} [label=\"{}\\n{}\", tooltip=\"w = {} ({:.6})\", fillcolor=\"{}\"];",
            v,
            escape(&g.label(v)),
            text[v],
            text[v],
            approx[v],
            diverging_color(t)
        )
        .unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", u, v).unwrap();
    }
    out.push_str("}\n");
    out
}
