//! Deterministic static-image emission.
//!
//! All plots are pure functions of (data, options) that build SVG 1.1 text
//! directly: identical inputs produce byte-identical documents. Colors come
//! from the embedded ramp in [`colormap`]; nothing is sampled at render
//! time.

pub mod colormap;

use crate::bmatrix::BMatrix;
use crate::census::CensusInstance;
use crate::graph::Graph;

/// Stroke colors for superimposed layer classes.
pub const CLASS_PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

const HOP_BAR_COLOR: &str = "#00bcd4";
const UNIFORM_COLOR: &str = "#000000";
const MARGIN_LEFT: f64 = 56.0;
const MARGIN_RIGHT: f64 = 16.0;
const MARGIN_TOP: f64 = 16.0;
const MARGIN_BOTTOM: f64 = 40.0;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VizError {
    #[error("invalid plot options: {0}")]
    InvalidOptions(String),
    #[error("plot input is empty")]
    EmptyInput,
    #[error("census instances do not share shape")]
    ShapeMismatch,
    #[error("superimposition requires un-normalized (absolute) inputs")]
    NormalizedInput,
    #[error("superimposed layers must all be the same plot kind")]
    MixedLayerKinds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorMode {
    /// One stroke color for every line.
    Uniform,
    /// Stroke color sampled from the ramp by source node index.
    ByNodeIndex,
}

#[derive(Debug, Clone)]
pub struct PlotOptions {
    /// Normalize axes into the unit square instead of absolute counts.
    pub normalize: bool,
    pub width: u32,
    pub height: u32,
    /// Stroke opacity in (0, 1]; default picks 0.15 above 200 lines,
    /// 0.8 otherwise.
    pub stroke_opacity: Option<f64>,
    pub color_mode: ColorMode,
    /// Log-scale heatmap colors (log1p ratio); linear when false.
    pub log_color: bool,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            normalize: false,
            width: 800,
            height: 600,
            stroke_opacity: None,
            color_mode: ColorMode::ByNodeIndex,
            log_color: true,
        }
    }
}

impl PlotOptions {
    fn validate(&self) -> Result<(), VizError> {
        if self.width == 0 || self.height == 0 {
            return Err(VizError::InvalidOptions(format!(
                "dimensions {}x{} must be positive",
                self.width, self.height
            )));
        }
        if let Some(op) = self.stroke_opacity {
            if !(op > 0.0 && op <= 1.0) {
                return Err(VizError::InvalidOptions(format!(
                    "stroke opacity {op} outside (0, 1]"
                )));
            }
        }
        Ok(())
    }

    fn opacity_for(&self, line_count: usize) -> f64 {
        self.stroke_opacity
            .unwrap_or(if line_count > 200 { 0.15 } else { 0.8 })
    }
}

/// Well-formed SVG 1.1 text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvgDocument {
    text: String,
}

impl SvgDocument {
    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

fn fmt2(v: f64) -> String {
    format!("{v:.2}")
}

/// Pixel mapping for one data range along one axis.
#[derive(Clone, Copy)]
struct AxisMap {
    lo: f64,
    hi: f64,
    px_lo: f64,
    px_hi: f64,
}

impl AxisMap {
    fn map(&self, value: f64) -> f64 {
        if self.hi > self.lo {
            self.px_lo + (value - self.lo) / (self.hi - self.lo) * (self.px_hi - self.px_lo)
        } else {
            (self.px_lo + self.px_hi) / 2.0
        }
    }
}

struct Canvas {
    body: String,
    width: f64,
    height: f64,
}

impl Canvas {
    fn new(opts: &PlotOptions) -> Canvas {
        let width = opts.width as f64;
        let height = opts.height as f64;
        let mut body = String::with_capacity(4096);
        body.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        body.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
            w = opts.width,
            h = opts.height
        ));
        body.push_str(&format!(
            "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>\n",
            w = opts.width,
            h = opts.height
        ));
        Canvas {
            body,
            width,
            height,
        }
    }

    fn x_axis(&self, lo: f64, hi: f64) -> AxisMap {
        AxisMap {
            lo,
            hi,
            px_lo: MARGIN_LEFT,
            px_hi: self.width - MARGIN_RIGHT,
        }
    }

    fn y_axis(&self, lo: f64, hi: f64) -> AxisMap {
        AxisMap {
            lo,
            hi,
            px_lo: self.height - MARGIN_BOTTOM,
            px_hi: MARGIN_TOP,
        }
    }

    fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, stroke: &str, width: f64, opacity: f64) {
        self.body.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" stroke-width=\"{}\" stroke-opacity=\"{}\"/>\n",
            fmt2(x1), fmt2(y1), fmt2(x2), fmt2(y2), fmt2(width), fmt2(opacity)
        ));
    }

    fn polyline(&mut self, points: &[(f64, f64)], stroke: &str, opacity: f64) {
        let coords = points
            .iter()
            .map(|&(x, y)| format!("{},{}", fmt2(x), fmt2(y)))
            .collect::<Vec<_>>()
            .join(" ");
        self.body.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{stroke}\" stroke-width=\"1.2\" stroke-opacity=\"{}\" points=\"{coords}\"/>\n",
            fmt2(opacity)
        ));
    }

    fn circle(&mut self, x: f64, y: f64, r: f64, fill: &str, opacity: f64) {
        self.body.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\" fill-opacity=\"{}\"/>\n",
            fmt2(x),
            fmt2(y),
            fmt2(r),
            fmt2(opacity)
        ));
    }

    fn rect(&mut self, x: f64, y: f64, w: f64, h: f64, fill: &str) {
        self.body.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{fill}\"/>\n",
            fmt2(x),
            fmt2(y),
            fmt2(w),
            fmt2(h)
        ));
    }

    fn text(&mut self, x: f64, y: f64, anchor: &str, content: &str) {
        self.body.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\" fill=\"#333333\" text-anchor=\"{anchor}\">{content}</text>\n",
            fmt2(x),
            fmt2(y)
        ));
    }

    fn finish(mut self) -> SvgDocument {
        self.body.push_str("</svg>\n");
        SvgDocument { text: self.body }
    }
}

fn node_color(source: usize, node_count: usize, mode: ColorMode) -> String {
    match mode {
        ColorMode::Uniform => UNIFORM_COLOR.to_string(),
        ColorMode::ByNodeIndex => {
            let t = if node_count > 1 {
                source as f64 / (node_count - 1) as f64
            } else {
                0.0
            };
            colormap::sample_hex(t)
        }
    }
}

enum LayerColor {
    PerOptions,
    Fixed(&'static str),
}

/// Data extent of a hop-census plot: (max vector length, max degree value).
pub fn hop_census_ranges(ci: &CensusInstance) -> (usize, u32) {
    (ci.max_len(), ci.max_value())
}

/// Data extent of a census-census plot: (max x value, max y value).
pub fn census_census_ranges(x: &CensusInstance, y: &CensusInstance) -> (u32, u32) {
    (x.max_value(), y.max_value())
}

fn check_shape(x: &CensusInstance, y: &CensusInstance) -> Result<(), VizError> {
    if x.vectors.len() != y.vectors.len() {
        return Err(VizError::ShapeMismatch);
    }
    for (a, b) in x.vectors.iter().zip(&y.vectors) {
        if a.values.len() != b.values.len() {
            return Err(VizError::ShapeMismatch);
        }
    }
    Ok(())
}

fn render_hop_census(
    layers: &[(&CensusInstance, LayerColor)],
    opts: &PlotOptions,
) -> Result<SvgDocument, VizError> {
    opts.validate()?;
    if layers.iter().all(|(ci, _)| ci.vectors.is_empty()) {
        return Err(VizError::EmptyInput);
    }
    let hops = layers.iter().map(|(ci, _)| ci.max_len()).max().unwrap();
    let max_degree = layers.iter().map(|(ci, _)| ci.max_value()).max().unwrap();
    let line_count: usize = layers.iter().map(|(ci, _)| ci.vectors.len()).sum();
    let opacity = opts.opacity_for(line_count);

    let mut canvas = Canvas::new(opts);
    let (x_map, y_map) = if opts.normalize {
        (canvas.x_axis(0.0, 1.0), canvas.y_axis(0.0, 1.0))
    } else {
        (
            canvas.x_axis(1.0, hops as f64),
            canvas.y_axis(0.0, max_degree as f64),
        )
    };
    let data_x = |hop: usize| {
        if opts.normalize {
            if hops > 1 {
                (hop - 1) as f64 / (hops - 1) as f64
            } else {
                0.0
            }
        } else {
            hop as f64
        }
    };
    let data_y = |value: u32| {
        if opts.normalize {
            if max_degree > 0 {
                value as f64 / max_degree as f64
            } else {
                0.0
            }
        } else {
            value as f64
        }
    };

    // Hop axes as vertical bars, labeled when they fit.
    let label_every = if hops > 30 { hops.saturating_sub(1).max(1) } else { 1 };
    for hop in 1..=hops {
        let x = x_map.map(data_x(hop));
        canvas.line(
            x,
            MARGIN_TOP,
            x,
            canvas.height - MARGIN_BOTTOM,
            HOP_BAR_COLOR,
            1.0,
            0.9,
        );
        if (hop - 1) % label_every == 0 || hop == hops {
            canvas.text(
                x,
                canvas.height - MARGIN_BOTTOM + 16.0,
                "middle",
                &hop.to_string(),
            );
        }
    }
    // Vertical range labels share one scale across hop axes.
    let (top_label, bottom_label) = if opts.normalize {
        ("1".to_string(), "0".to_string())
    } else {
        (max_degree.to_string(), "0".to_string())
    };
    canvas.text(MARGIN_LEFT - 8.0, MARGIN_TOP + 4.0, "end", &top_label);
    canvas.text(
        MARGIN_LEFT - 8.0,
        canvas.height - MARGIN_BOTTOM + 4.0,
        "end",
        &bottom_label,
    );

    for (ci, layer_color) in layers {
        let n = ci.vectors.len();
        for vector in &ci.vectors {
            let stroke = match layer_color {
                LayerColor::PerOptions => {
                    node_color(vector.source as usize, n, opts.color_mode)
                }
                LayerColor::Fixed(color) => (*color).to_string(),
            };
            let points: Vec<(f64, f64)> = vector
                .values
                .iter()
                .enumerate()
                .map(|(i, &v)| (x_map.map(data_x(i + 1)), y_map.map(data_y(v))))
                .collect();
            canvas.polyline(&points, &stroke, opacity);
            if points.len() == 1 {
                canvas.circle(points[0].0, points[0].1, 2.5, &stroke, opacity);
            }
        }
    }
    Ok(canvas.finish())
}

/// One polyline per census vector over hop-ordered parallel axes that share
/// a single vertical range. Polylines stop at their vector length.
pub fn hop_census_plot(ci: &CensusInstance, opts: &PlotOptions) -> Result<SvgDocument, VizError> {
    render_hop_census(&[(ci, LayerColor::PerOptions)], opts)
}

fn render_census_census(
    layers: &[(&CensusInstance, &CensusInstance, LayerColor)],
    opts: &PlotOptions,
) -> Result<SvgDocument, VizError> {
    opts.validate()?;
    if layers.iter().all(|(x, _, _)| x.vectors.is_empty()) {
        return Err(VizError::EmptyInput);
    }
    for (x, y, _) in layers {
        check_shape(x, y)?;
    }
    let x_max = layers.iter().map(|(x, _, _)| x.max_value()).max().unwrap();
    let y_max = layers.iter().map(|(_, y, _)| y.max_value()).max().unwrap();
    let line_count: usize = layers.iter().map(|(x, _, _)| x.vectors.len()).sum();
    let opacity = opts.opacity_for(line_count);

    let mut canvas = Canvas::new(opts);
    let (x_map, y_map) = if opts.normalize {
        (canvas.x_axis(0.0, 1.0), canvas.y_axis(0.0, 1.0))
    } else {
        (
            canvas.x_axis(0.0, x_max as f64),
            canvas.y_axis(0.0, y_max as f64),
        )
    };
    let scale = |value: u32, max: u32| {
        if opts.normalize {
            if max > 0 {
                value as f64 / max as f64
            } else {
                0.0
            }
        } else {
            value as f64
        }
    };

    // Plot frame.
    canvas.line(
        MARGIN_LEFT,
        canvas.height - MARGIN_BOTTOM,
        canvas.width - MARGIN_RIGHT,
        canvas.height - MARGIN_BOTTOM,
        "#999999",
        1.0,
        1.0,
    );
    canvas.line(
        MARGIN_LEFT,
        MARGIN_TOP,
        MARGIN_LEFT,
        canvas.height - MARGIN_BOTTOM,
        "#999999",
        1.0,
        1.0,
    );
    let (x_label, y_label) = if opts.normalize {
        ("1".to_string(), "1".to_string())
    } else {
        (x_max.to_string(), y_max.to_string())
    };
    canvas.text(
        canvas.width - MARGIN_RIGHT,
        canvas.height - MARGIN_BOTTOM + 16.0,
        "end",
        &x_label,
    );
    canvas.text(MARGIN_LEFT - 8.0, MARGIN_TOP + 4.0, "end", &y_label);
    canvas.text(
        MARGIN_LEFT - 8.0,
        canvas.height - MARGIN_BOTTOM + 4.0,
        "end",
        "0",
    );

    for (x_ci, y_ci, layer_color) in layers {
        let n = x_ci.vectors.len();
        for (xv, yv) in x_ci.vectors.iter().zip(&y_ci.vectors) {
            let stroke = match layer_color {
                LayerColor::PerOptions => node_color(xv.source as usize, n, opts.color_mode),
                LayerColor::Fixed(color) => (*color).to_string(),
            };
            let points: Vec<(f64, f64)> = xv
                .values
                .iter()
                .zip(&yv.values)
                .map(|(&a, &b)| (x_map.map(scale(a, x_max)), y_map.map(scale(b, y_max))))
                .collect();
            canvas.polyline(&points, &stroke, opacity);
            if points.len() == 1 {
                canvas.circle(points[0].0, points[0].1, 2.5, &stroke, opacity);
            }
        }
    }
    Ok(canvas.finish())
}

/// One trajectory per source: the points (x.vector[h], y.vector[h]) joined
/// in hop order. Both instances must come from the same graph.
pub fn census_census_plot(
    x: &CensusInstance,
    y: &CensusInstance,
    opts: &PlotOptions,
) -> Result<SvgDocument, VizError> {
    render_census_census(&[(x, y, LayerColor::PerOptions)], opts)
}

/// Heatmap of a BMatrix: hops horizontal, degree values vertical, cell color
/// from the embedded ramp scaled by `log1p(count) / log1p(max)` (or linearly
/// with `log_color` off). Zero cells show the plot background.
pub fn heatmap_plot(b: &BMatrix, opts: &PlotOptions) -> Result<SvgDocument, VizError> {
    opts.validate()?;
    let hops = b.hop_count();
    let degrees = b.degree_count();
    let mut canvas = Canvas::new(opts);
    let plot_w = canvas.width - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = canvas.height - MARGIN_TOP - MARGIN_BOTTOM;
    canvas.rect(
        MARGIN_LEFT,
        MARGIN_TOP,
        plot_w,
        plot_h,
        &colormap::sample_hex(0.0),
    );
    if hops > 0 && degrees > 0 {
        let max_count = (1..=hops)
            .flat_map(|h| b.row(h).iter().copied())
            .max()
            .unwrap_or(0);
        let cell_w = plot_w / hops as f64;
        let cell_h = plot_h / degrees as f64;
        for hop in 1..=hops {
            for degree in 0..degrees {
                let count = b.get(hop, degree);
                if count == 0 {
                    continue;
                }
                let t = if max_count == 0 {
                    0.0
                } else if opts.log_color {
                    ((count as f64).ln_1p()) / ((max_count as f64).ln_1p())
                } else {
                    count as f64 / max_count as f64
                };
                let x = MARGIN_LEFT + (hop - 1) as f64 * cell_w;
                let y = canvas.height - MARGIN_BOTTOM - (degree + 1) as f64 * cell_h;
                canvas.rect(x, y, cell_w, cell_h, &colormap::sample_hex(t));
            }
        }
        let label_every = if hops > 30 { hops.saturating_sub(1).max(1) } else { 1 };
        for hop in 1..=hops {
            if (hop - 1) % label_every == 0 || hop == hops {
                let x = MARGIN_LEFT + (hop as f64 - 0.5) * cell_w;
                canvas.text(
                    x,
                    canvas.height - MARGIN_BOTTOM + 16.0,
                    "middle",
                    &hop.to_string(),
                );
            }
        }
        canvas.text(
            MARGIN_LEFT - 8.0,
            MARGIN_TOP + 4.0,
            "end",
            &(degrees - 1).to_string(),
        );
        canvas.text(
            MARGIN_LEFT - 8.0,
            canvas.height - MARGIN_BOTTOM + 4.0,
            "end",
            "0",
        );
    }
    Ok(canvas.finish())
}

/// Node-link view with nodes equally spaced on a circle in index order and
/// straight edges.
pub fn circular_node_link(g: &Graph, opts: &PlotOptions) -> Result<SvgDocument, VizError> {
    opts.validate()?;
    let mut canvas = Canvas::new(opts);
    let n = g.node_count();
    if n > 0 {
        let cx = canvas.width / 2.0;
        let cy = canvas.height / 2.0;
        let radius = ((canvas.width - MARGIN_LEFT - MARGIN_RIGHT)
            .min(canvas.height - MARGIN_TOP - MARGIN_BOTTOM))
            / 2.0
            - 8.0;
        let position = |u: usize| {
            let angle = -std::f64::consts::FRAC_PI_2
                + 2.0 * std::f64::consts::PI * u as f64 / n as f64;
            (cx + radius * angle.cos(), cy + radius * angle.sin())
        };
        for (u, v) in g.edges() {
            let (x1, y1) = position(u as usize);
            let (x2, y2) = position(v as usize);
            canvas.line(x1, y1, x2, y2, "#666666", 1.0, 0.7);
        }
        let node_radius = (120.0 / n as f64).clamp(2.0, 6.0);
        for u in 0..n {
            let (x, y) = position(u);
            canvas.circle(x, y, node_radius, &node_color(u, n, opts.color_mode), 1.0);
        }
    }
    Ok(canvas.finish())
}

/// One layer of a superimposed census plot.
pub enum CensusLayer<'a> {
    HopCensus(&'a CensusInstance),
    Trajectory {
        x: &'a CensusInstance,
        y: &'a CensusInstance,
    },
}

/// Draws several census plots into one document with union axis ranges and
/// one stroke color per layer class. Inputs must use absolute axes; a single
/// layer renders exactly like the plain plot.
pub fn superimpose(layers: &[CensusLayer], opts: &PlotOptions) -> Result<SvgDocument, VizError> {
    if layers.is_empty() {
        return Err(VizError::EmptyInput);
    }
    if opts.normalize {
        return Err(VizError::NormalizedInput);
    }
    let all_hop = layers
        .iter()
        .all(|l| matches!(l, CensusLayer::HopCensus(_)));
    let all_trajectory = layers
        .iter()
        .all(|l| matches!(l, CensusLayer::Trajectory { .. }));
    if !all_hop && !all_trajectory {
        return Err(VizError::MixedLayerKinds);
    }
    if layers.len() == 1 {
        return match &layers[0] {
            CensusLayer::HopCensus(ci) => hop_census_plot(ci, opts),
            CensusLayer::Trajectory { x, y } => census_census_plot(x, y, opts),
        };
    }
    if all_hop {
        let styled: Vec<(&CensusInstance, LayerColor)> = layers
            .iter()
            .enumerate()
            .map(|(i, l)| match l {
                CensusLayer::HopCensus(ci) => {
                    (*ci, LayerColor::Fixed(CLASS_PALETTE[i % CLASS_PALETTE.len()]))
                }
                CensusLayer::Trajectory { .. } => unreachable!(),
            })
            .collect();
        render_hop_census(&styled, opts)
    } else {
        let styled: Vec<(&CensusInstance, &CensusInstance, LayerColor)> = layers
            .iter()
            .enumerate()
            .map(|(i, l)| match l {
                CensusLayer::Trajectory { x, y } => {
                    (*x, *y, LayerColor::Fixed(CLASS_PALETTE[i % CLASS_PALETTE.len()]))
                }
                CensusLayer::HopCensus(_) => unreachable!(),
            })
            .collect();
        render_census_census(&styled, opts)
    }
}
