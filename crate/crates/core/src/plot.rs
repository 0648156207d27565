//! Self-contained SVG scatter plots, no plotting dependencies.
//!
//! The output is deterministic for identical input: coordinates are formatted
//! with fixed precision and drawing order follows the input order.

/// Layout and labelling of a drift scatter plot.
#[derive(Clone, Debug)]
pub struct ScatterStyle {
    pub width: f64,
    pub height: f64,
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    /// Slope of the dashed reference line `y = slope·x` drawn across the
    /// x-range.
    pub bound_slope: f64,
}

impl Default for ScatterStyle {
    fn default() -> Self {
        Self {
            width: 640.0,
            height: 480.0,
            title: "eigenvalue drift vs boundary norm".into(),
            x_label: "boundary norm".into(),
            y_label: "eigenvalue drift".into(),
            bound_slope: 2.0,
        }
    }
}

const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 36.0;
const MARGIN_BOTTOM: f64 = 52.0;

fn nice_ticks(max: f64, target: usize) -> Vec<f64> {
    if max <= 0.0 {
        return vec![0.0];
    }
    let raw_step = max / target as f64;
    let magnitude = 10f64.powf(raw_step.log10().floor());
    let normalized = raw_step / magnitude;
    let step = if normalized <= 1.0 {
        1.0
    } else if normalized <= 2.0 {
        2.0
    } else if normalized <= 5.0 {
        5.0
    } else {
        10.0
    } * magnitude;
    let mut ticks = Vec::new();
    let mut t = 0.0;
    while t <= max + step * 1e-9 {
        ticks.push(t);
        t += step;
    }
    ticks
}

fn fmt_tick(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let abs = v.abs();
    if abs >= 100.0 {
        format!("{v:.0}")
    } else if abs >= 1.0 {
        format!("{v:.1}")
    } else {
        format!("{v:.2}")
    }
}

/// Renders `(x, y)` points with axes and the dashed bound line `y = slope·x`.
///
/// With no points the plot still shows axes and the bound line over a default
/// range, so emptiness is visually obvious rather than an error.
pub fn scatter_svg(points: &[(f64, f64)], style: &ScatterStyle) -> String {
    let x_max_data = points.iter().map(|p| p.0).fold(0.0, f64::max);
    let y_max_data = points.iter().map(|p| p.1).fold(0.0, f64::max);
    let x_max = if x_max_data > 0.0 { x_max_data * 1.1 } else { 1.0 };
    let y_max = {
        let with_bound = y_max_data.max(style.bound_slope * x_max_data);
        if with_bound > 0.0 {
            with_bound * 1.08
        } else {
            style.bound_slope.max(1.0)
        }
    };

    let plot_w = style.width - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = style.height - MARGIN_TOP - MARGIN_BOTTOM;
    let px = |x: f64| MARGIN_LEFT + x / x_max * plot_w;
    let py = |y: f64| MARGIN_TOP + plot_h - y / y_max * plot_h;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
         viewBox=\"0 0 {w} {h}\">\n",
        w = style.width,
        h = style.height
    ));
    svg.push_str(&format!(
        "  <rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
        style.width, style.height
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"14\">{}</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        MARGIN_TOP - 14.0,
        style.title
    ));

    // axes
    svg.push_str(&format!(
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        px(0.0),
        py(0.0),
        px(x_max),
        py(0.0)
    ));
    svg.push_str(&format!(
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        px(0.0),
        py(0.0),
        px(0.0),
        py(y_max)
    ));

    for t in nice_ticks(x_max, 6) {
        let x = px(t);
        svg.push_str(&format!(
            "  <line x1=\"{x:.2}\" y1=\"{:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
            py(0.0),
            py(0.0) + 5.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{x:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
             font-size=\"11\">{}</text>\n",
            py(0.0) + 18.0,
            fmt_tick(t)
        ));
    }
    for t in nice_ticks(y_max, 6) {
        let y = py(t);
        svg.push_str(&format!(
            "  <line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"black\"/>\n",
            px(0.0) - 5.0,
            px(0.0)
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\" font-family=\"sans-serif\" \
             font-size=\"11\">{}</text>\n",
            px(0.0) - 8.0,
            y + 4.0,
            fmt_tick(t)
        ));
    }

    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"12\">{}</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        style.height - 10.0,
        style.x_label
    ));
    svg.push_str(&format!(
        "  <text x=\"14\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" \
         font-size=\"12\" transform=\"rotate(-90 14 {:.2})\">{}</text>\n",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        style.y_label
    ));

    // dashed theoretical bound y = slope·x, clipped to the panel
    let bound_end_x = (y_max / style.bound_slope).min(x_max);
    svg.push_str(&format!(
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"crimson\" \
         stroke-dasharray=\"6 4\" stroke-width=\"1.5\"/>\n",
        px(0.0),
        py(0.0),
        px(bound_end_x),
        py(style.bound_slope * bound_end_x)
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" \
         fill=\"crimson\">y = {}x</text>\n",
        px(bound_end_x * 0.78) + 6.0,
        py(style.bound_slope * bound_end_x * 0.78) - 6.0,
        fmt_tick(style.bound_slope)
    ));

    for (x, y) in points {
        svg.push_str(&format!(
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\" fill=\"steelblue\" \
             fill-opacity=\"0.6\"/>\n",
            px(*x),
            py(*y)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
