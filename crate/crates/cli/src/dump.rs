//! Plain-text, tab-separated output. Every number is written with 17
//! significant digits in exponent form.

use std::fmt::Write as _;

use tifs_core::geometry::{self, PointCloud};
use tifs_core::{AffineMap, DottedAddress, Result, Tifs, Tile, Tiling};

pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn nums(xs: &[f64]) -> String {
    xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join("\t")
}

/// `m`, the orthogonal part row by row, then the translation.
pub fn map(f: &AffineMap) -> String {
    format!("{}\t{}\t{}", f.exponent(), nums(f.orthogonal().entries()), nums(f.shift()))
}

fn class(t: &Tifs, tile: &Tile) -> String {
    format!("{}/{}", t.vertex_id(tile.prototile.vertex), tile.prototile.exponent)
}

fn address(tile: &Tile) -> String {
    if tile.context.is_empty() {
        tile.body.to_string()
    } else {
        DottedAddress::new(tile.context.clone(), tile.body.clone()).to_string()
    }
}

/// One line per tile: address, class `vertex/exponent`, then the interval in
/// 1D (tiles in left-to-right order) or the map otherwise (tiling order).
pub fn tiles(t: &Tifs, tiling: &Tiling) -> Result<String> {
    let mut out = String::new();
    if t.dim() == 1 {
        let hulls = geometry::component_hulls_1d(t)?;
        for (tile, _) in tiling.by_position(t)? {
            let (lo, hi) = tile.interval(&hulls);
            let _ = writeln!(out, "{}\t{}\t{}\t{}", address(tile), class(t, tile), num(lo), num(hi));
        }
    } else {
        for tile in tiling.tiles() {
            let _ = writeln!(out, "{}\t{}\t{}", address(tile), class(t, tile), map(&tile.map));
        }
    }
    Ok(out)
}

/// One line per point: component id, then coordinates.
pub fn points(t: &Tifs, cloud: &PointCloud) -> String {
    let mut out = String::new();
    for (p, v) in cloud.points() {
        let _ = writeln!(out, "{}\t{}", t.vertex_id(v), nums(p));
    }
    out
}
