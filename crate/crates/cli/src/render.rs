//! SVG pictures of tilings and PPM rasters of point clouds.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use tifs_core::geometry::{self, PointCloud};
use tifs_core::{Error, Prototile, Tifs, Tiling, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rgb(pub u8, pub u8, pub u8);

impl fmt::Display for Rgb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{:02x}{:02x}{:02x}", self.0, self.1, self.2)
    }
}

const COLORS: [Rgb; 8] = [
    Rgb(0x1f, 0x77, 0xb4),
    Rgb(0xff, 0x7f, 0x0e),
    Rgb(0x2c, 0xa0, 0x2c),
    Rgb(0xd6, 0x27, 0x28),
    Rgb(0x94, 0x67, 0xbd),
    Rgb(0x8c, 0x56, 0x4b),
    Rgb(0xe3, 0x77, 0xc2),
    Rgb(0x7f, 0x7f, 0x7f),
];

/// Colors per prototile class.
#[derive(Clone, Debug, PartialEq)]
pub struct Palette {
    pub classes: BTreeMap<Prototile, Rgb>,
    pub background: Rgb,
}

impl Palette {
    /// Every class `(v, i)`, `1 ≤ i ≤ a_max`, gets the next color of a fixed cycle.
    pub fn for_system(t: &Tifs) -> Self {
        let mut classes = BTreeMap::new();
        for v in t.vertices() {
            for exponent in 1..=t.a_max() {
                let next = COLORS[classes.len() % COLORS.len()];
                classes.insert(Prototile { vertex: v, exponent }, next);
            }
        }
        Palette { classes, background: Rgb(255, 255, 255) }
    }

    fn class(&self, p: Prototile) -> Result<Rgb, RenderError> {
        self.classes.get(&p).copied().ok_or(RenderError::MissingColor(p))
    }

    /// Points carry only a component tag; they take the color of that
    /// component's smallest class.
    fn component(&self, v: Vertex) -> Result<Rgb, RenderError> {
        self.classes
            .range(Prototile { vertex: v, exponent: 0 }..)
            .next()
            .filter(|(p, _)| p.vertex == v)
            .map(|(_, c)| *c)
            .ok_or(RenderError::MissingColor(Prototile { vertex: v, exponent: 1 }))
    }
}

/// Axis-aligned box; one entry per axis.
#[derive(Clone, Debug, PartialEq)]
pub struct Viewport {
    pub min: Vec<f64>,
    pub max: Vec<f64>,
}

impl Viewport {
    fn check(&self) -> Result<(), RenderError> {
        let ok = self.min.len() == self.max.len()
            && !self.min.is_empty()
            && self.min.iter().zip(&self.max).all(|(a, b)| a.is_finite() && b.is_finite() && a < b);
        if ok {
            Ok(())
        } else {
            Err(RenderError::EmptyViewport)
        }
    }

    /// Bounding box, widened to unit length along degenerate axes.
    pub fn around(lo: Vec<f64>, hi: Vec<f64>) -> Self {
        let (mut min, mut max) = (lo, hi);
        for (a, b) in min.iter_mut().zip(max.iter_mut()) {
            if *b - *a <= 0.0 {
                *a -= 0.5;
                *b += 0.5;
            }
        }
        Viewport { min, max }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub viewport: Viewport,
    pub width: u32,
    pub height: u32,
    /// Realization depth of two-dimensional tiles.
    pub depth: u32,
    pub palette: Palette,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum RenderError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("viewport is empty")]
    EmptyViewport,
    #[error("image size must be positive")]
    NoPixels,
    #[error("palette has no color for class ({}, {})", .0.vertex.0, .0.exponent)]
    MissingColor(Prototile),
}

fn unsupported(dimension: usize, supported: &'static str) -> RenderError {
    RenderError::Core(Error::UnsupportedDimension { dimension, supported })
}

/// Bounding box of a tiling: tile intervals in 1D, realized tile clouds in 2D.
pub fn tiling_viewport(t: &Tifs, tiling: &Tiling, depth: u32) -> Result<Viewport, RenderError> {
    match t.dim() {
        1 => {
            let hulls = geometry::component_hulls_1d(t)?;
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for tile in tiling.tiles() {
                let (a, b) = tile.interval(&hulls);
                lo = lo.min(a);
                hi = hi.max(b);
            }
            if tiling.is_empty() {
                (lo, hi) = (0.0, 1.0);
            }
            Ok(Viewport::around(vec![lo], vec![hi]))
        }
        2 => {
            let base = geometry::attractor_deterministic(t, depth, &t.seeds())?;
            let (mut lo, mut hi) = (vec![f64::INFINITY; 2], vec![f64::NEG_INFINITY; 2]);
            for tile in tiling.tiles() {
                if let Some((a, b)) = base.component(tile.prototile.vertex).mapped(&tile.map).bounding_box() {
                    for i in 0..2 {
                        lo[i] = lo[i].min(a[i]);
                        hi[i] = hi[i].max(b[i]);
                    }
                }
            }
            if lo[0] > hi[0] {
                (lo, hi) = (vec![0.0; 2], vec![1.0; 2]);
            }
            Ok(Viewport::around(lo, hi))
        }
        m => Err(unsupported(m, "1 or 2")),
    }
}

/// Bounding box of a cloud, the unit square when it is empty.
pub fn cloud_viewport(cloud: &PointCloud) -> Viewport {
    match cloud.bounding_box() {
        Some((lo, hi)) => Viewport::around(lo, hi),
        None => Viewport { min: vec![0.0; cloud.dim()], max: vec![1.0; cloud.dim()] },
    }
}

fn check_spec(spec: &RenderSpec, dim: usize) -> Result<(), RenderError> {
    if spec.width == 0 || spec.height == 0 {
        return Err(RenderError::NoPixels);
    }
    spec.viewport.check()?;
    if spec.viewport.min.len() != dim {
        return Err(RenderError::EmptyViewport);
    }
    Ok(())
}

/// One-dimensional tilings become rectangles of height one tenth of the width,
/// ordered by left endpoint. Two-dimensional tiles become groups of small
/// circles, ordered by translation part and then address. Only `width` is used
/// in 1D.
pub fn render_svg(t: &Tifs, tiling: &Tiling, spec: &RenderSpec) -> Result<String, RenderError> {
    let dim = t.dim();
    if dim > 2 {
        return Err(unsupported(dim, "1 or 2"));
    }
    check_spec(spec, dim)?;
    for tile in tiling.tiles() {
        spec.palette.class(tile.prototile)?;
    }
    let w = f64::from(spec.width);
    let mut out = String::new();
    if dim == 1 {
        let h = w / 10.0;
        header(&mut out, w, h);
        let (x0, x1) = (spec.viewport.min[0], spec.viewport.max[0]);
        let scale = w / (x1 - x0);
        for (tile, (lo, hi)) in tiling.by_position(t)? {
            let color = spec.palette.class(tile.prototile)?;
            let _ = writeln!(
                out,
                r#"<rect x="{:.6}" y="0" width="{:.6}" height="{h:.6}" fill="{color}" stroke="black" stroke-width="0.5" data-address="{}" data-class="{}"/>"#,
                (lo - x0) * scale,
                (hi - lo) * scale,
                tile.body,
                tile.letter(),
            );
        }
    } else {
        let h = f64::from(spec.height);
        header(&mut out, w, h);
        let base = geometry::attractor_deterministic(t, spec.depth, &t.seeds())?;
        let mut order: Vec<_> = tiling.tiles().iter().collect();
        order.sort_by(|a, b| {
            let (sa, sb) = (a.map.shift(), b.map.shift());
            sa[0].total_cmp(&sb[0]).then(sa[1].total_cmp(&sb[1])).then_with(|| a.body.cmp(&b.body))
        });
        let (x0, y0) = (spec.viewport.min[0], spec.viewport.min[1]);
        let (sx, sy) = (w / (spec.viewport.max[0] - x0), h / (spec.viewport.max[1] - y0));
        for tile in order {
            let color = spec.palette.class(tile.prototile)?;
            let _ = writeln!(out, r#"<g fill="{color}" data-address="{}">"#, tile.body);
            for (p, _) in base.component(tile.prototile.vertex).mapped(&tile.map).points() {
                let _ =
                    writeln!(out, r#"<circle cx="{:.3}" cy="{:.3}" r="0.4"/>"#, (p[0] - x0) * sx, h - (p[1] - y0) * sy);
            }
            out.push_str("</g>\n");
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn header(out: &mut String, w: f64, h: f64) {
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
}

/// `P6` raster. The viewport corners map to the centers of the corner pixels;
/// each point lights the nearest pixel, ties rounding up, with `y` pointing up.
pub fn render_ppm(cloud: &PointCloud, spec: &RenderSpec) -> Result<Vec<u8>, RenderError> {
    if cloud.dim() != 2 {
        return Err(unsupported(cloud.dim(), "2"));
    }
    check_spec(spec, 2)?;
    let (w, h) = (spec.width as usize, spec.height as usize);
    let bg = spec.palette.background;
    let mut pixels = vec![[bg.0, bg.1, bg.2]; w * h];
    let (x0, y0) = (spec.viewport.min[0], spec.viewport.min[1]);
    let (x1, y1) = (spec.viewport.max[0], spec.viewport.max[1]);
    for (p, v) in cloud.points() {
        let fx = (p[0] - x0) / (x1 - x0) * (w - 1) as f64;
        let fy = (y1 - p[1]) / (y1 - y0) * (h - 1) as f64;
        let (px, py) = ((fx + 0.5).floor(), (fy + 0.5).floor());
        if px < 0.0 || py < 0.0 || px >= w as f64 || py >= h as f64 {
            continue;
        }
        let c = spec.palette.component(v)?;
        pixels[py as usize * w + px as usize] = [c.0, c.1, c.2];
    }
    let mut out = format!("P6\n{w} {h}\n255\n").into_bytes();
    out.reserve(w * h * 3);
    for px in pixels {
        out.extend_from_slice(&px);
    }
    Ok(out)
}
