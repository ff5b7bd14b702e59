use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::affine::AffineMap;
use crate::error::{Error, Result};
use crate::system::Tifs;
use crate::tiling::{self, Frame, Prototile, Tile, Tiling, TilingContext, TILE_TOLERANCE};
use crate::word::{Orientation, Word};

/// Expansion and splitting: every tile is scaled by `s^{-1}`, and tiles of class
/// `(v, 1)` are replaced by their children `s^{-1} g f_e`, `tail(e) = v`.
/// `inflate(T_k) = T_{k+1}`.
pub fn inflate(t: &Tifs, tiling: &Tiling) -> Tiling {
    let mut tiles = Vec::with_capacity(tiling.len() * 2);
    for tile in tiling.tiles() {
        let g = tile.map.rescaled_after(-1);
        if tile.prototile.exponent == 1 {
            for &e in t.edges_from(tile.prototile.vertex) {
                tiles.push(Tile {
                    context: Word::empty(Orientation::Reversed),
                    body: tile.body.pushed(e),
                    map: g.compose(&t.edge(e).map),
                    prototile: Prototile { vertex: t.head(e), exponent: t.a(e) },
                });
            }
        } else {
            tiles.push(Tile {
                context: Word::empty(Orientation::Reversed),
                body: tile.body.clone(),
                map: g,
                prototile: Prototile { vertex: tile.prototile.vertex, exponent: tile.prototile.exponent - 1 },
            });
        }
    }
    let frame = tiling.frame().map(|f| Frame {
        isometry: f.isometry.rescaled_after(-1).rescaled_before(1),
        level: f.level + 1,
        root: f.root,
    });
    let context = match tiling.context() {
        TilingContext::Canonical { level, root } => TilingContext::Canonical { level: level + 1, root: *root },
        _ => TilingContext::Derived,
    };
    Tiling::new(tiles, context, frame)
}

/// Amalgamation and shrinking: each set of partners `E·T_0^v` becomes the single
/// tile `s·E·A^v`, every other tile is scaled by `s`. `deflate(T_k) = T_{k−1}`.
///
/// Tilings carrying a frame are grouped by their relative addresses and every
/// group is then checked geometrically. Without a frame, partner sets are found
/// by map matching; overlapping candidates or an unabsorbed tile of class
/// exponent `a_max` make the tiling [`Error::NotDeflatable`].
pub fn deflate(t: &Tifs, tiling: &Tiling) -> Result<Tiling> {
    match tiling.frame() {
        Some(frame) if frame.level == 0 => Err(Error::NotDeflatable(String::from("frame level is 0"))),
        Some(frame) => deflate_framed(t, tiling, frame),
        None => deflate_geometric(t, tiling),
    }
}

fn deflate_framed(t: &Tifs, tiling: &Tiling, frame: &Frame) -> Result<Tiling> {
    let level = frame.level;
    let mut tiles: Vec<Tile> = Vec::with_capacity(tiling.len());
    let mut groups: BTreeMap<Word, (AffineMap, Vec<bool>)> = BTreeMap::new();
    for tile in tiling.tiles() {
        let body = &tile.body;
        let parent = body.without_last();
        let is_child = !body.is_empty() && t.xi(&parent) == level;
        if !is_child {
            let exponent = tile.prototile.exponent + 1;
            if exponent > t.a_max() {
                return Err(Error::NotDeflatable(format!("tile {body} has no partners")));
            }
            tiles.push(Tile {
                context: Word::empty(Orientation::Reversed),
                body: body.clone(),
                map: tile.map.rescaled_after(1),
                prototile: Prototile { vertex: tile.prototile.vertex, exponent },
            });
            continue;
        }
        let e = body.last().expect("nonempty");
        let candidate = tile.map.compose(&t.edge(e).map.inverse());
        let siblings = t.edges_from(t.tail(e));
        let slot = siblings.iter().position(|&x| x == e).expect("admissible body");
        match groups.get_mut(&parent) {
            Some((g, seen)) => {
                if !g.approx_eq(&candidate, TILE_TOLERANCE) {
                    return Err(Error::NotDeflatable(format!("partners of {parent} disagree")));
                }
                seen[slot] = true;
            }
            None => {
                let mut seen = alloc::vec![false; siblings.len()];
                seen[slot] = true;
                tiles.push(Tile {
                    context: Word::empty(Orientation::Reversed),
                    body: parent.clone(),
                    map: candidate.rescaled_after(1),
                    prototile: Prototile { vertex: t.tail(e), exponent: 1 },
                });
                groups.insert(parent, (candidate, seen));
            }
        }
    }
    if let Some((parent, _)) = groups.iter().find(|(_, (_, seen))| !seen.iter().all(|&s| s)) {
        return Err(Error::NotDeflatable(format!("partners of {parent} are incomplete")));
    }
    let frame =
        Frame { isometry: frame.isometry.rescaled_after(1).rescaled_before(-1), level: level - 1, root: frame.root };
    let context = match tiling.context() {
        TilingContext::Canonical { level, root } => TilingContext::Canonical { level: level - 1, root: *root },
        _ => TilingContext::Derived,
    };
    Ok(Tiling::new(tiles, context, Some(frame)))
}

fn deflate_geometric(t: &Tifs, tiling: &Tiling) -> Result<Tiling> {
    let lookup = tiling.lookup();
    let mut owner: Vec<Option<usize>> = alloc::vec![None; tiling.len()];
    let mut parents: Vec<(AffineMap, Prototile)> = Vec::new();
    for tile in tiling.tiles() {
        for e in t.symbols() {
            if t.head(e) != tile.prototile.vertex || t.a(e) != tile.prototile.exponent {
                continue;
            }
            let g = tile.map.compose(&t.edge(e).map.inverse());
            let v = t.tail(e);
            if parents.iter().any(|(p, c)| c.vertex == v && p.approx_eq(&g, TILE_TOLERANCE)) {
                continue;
            }
            let members: Option<Vec<usize>> = t
                .edges_from(v)
                .iter()
                .map(|&f| {
                    let child = Tile {
                        context: Word::empty(Orientation::Reversed),
                        body: Word::empty(Orientation::Forward),
                        map: g.compose(&t.edge(f).map),
                        prototile: Prototile { vertex: t.head(f), exponent: t.a(f) },
                    };
                    lookup.find(&child, TILE_TOLERANCE)
                })
                .collect();
            let Some(members) = members else { continue };
            let index = parents.len();
            for m in members {
                if owner[m].is_some() {
                    return Err(Error::NotDeflatable(String::from("partner sets overlap")));
                }
                owner[m] = Some(index);
            }
            parents.push((g, Prototile { vertex: v, exponent: 1 }));
        }
    }
    let mut tiles = Vec::new();
    let mut emitted = alloc::vec![false; parents.len()];
    for (i, tile) in tiling.tiles().iter().enumerate() {
        match owner[i] {
            Some(p) if !emitted[p] => {
                emitted[p] = true;
                tiles.push(Tile {
                    context: Word::empty(Orientation::Reversed),
                    body: Word::empty(Orientation::Forward),
                    map: parents[p].0.rescaled_after(1),
                    prototile: parents[p].1,
                });
            }
            Some(_) => {}
            None => {
                let exponent = tile.prototile.exponent + 1;
                if exponent > t.a_max() {
                    return Err(Error::NotDeflatable(format!(
                        "a tile of class exponent {} has no partners",
                        exponent - 1
                    )));
                }
                tiles.push(Tile {
                    context: Word::empty(Orientation::Reversed),
                    body: Word::empty(Orientation::Forward),
                    map: tile.map.rescaled_after(1),
                    prototile: Prototile { vertex: tile.prototile.vertex, exponent },
                });
            }
        }
    }
    Ok(Tiling::new(tiles, TilingContext::Derived, None))
}

/// Pulls `Π(θ)` back by `E_{θ|k}^{-1}`, deflates `ξ(θ|k)` times and compares with
/// `Π(S^k θ)`.
pub fn hierarchy_check(t: &Tifs, theta: &Word, k: usize) -> Result<bool> {
    let theta = theta.clone().with_orientation(Orientation::Reversed);
    let prefix = theta.prefix(k);
    let (e, steps, _) = tiling::blow_up_frame(t, &prefix)?;
    let mut cur = tiling::tiling_of(t, &theta)?.mapped(&e.inverse());
    for _ in 0..steps {
        cur = deflate(t, &cur)?;
    }
    let rest = theta.shift(k);
    let expected = tiling::tiling_of_rooted(t, &rest, t.end_vertex(&theta))?;
    Ok(cur.same_tiles(&expected, TILE_TOLERANCE))
}
