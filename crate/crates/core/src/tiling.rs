//! Canonical tilings `T_k = s^{-k} π(Ω_k)` and blow-ups `Π(θ) = f_{-θ} π(Ω_{ξ(θ)})`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::affine::{AffineMap, IsometryRecord};
use crate::error::Result;
use crate::geometry::{self, PointCloud};
use crate::symbolic;
use crate::system::{Tifs, Vertex};
use crate::word::{Orientation, Word};

/// Tolerance used for tile identity throughout.
pub const TILE_TOLERANCE: f64 = 1e-9;

/// The class `s^i A^v` a tile is congruent to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prototile {
    pub vertex: Vertex,
    pub exponent: u32,
}

impl Prototile {
    /// `1 ↦ l`, `2 ↦ s`, larger exponents as a base-36 digit.
    pub fn letter(self) -> char {
        match self.exponent {
            1 => 'l',
            2 => 's',
            i => char::from_digit(i % 36, 36).unwrap_or('?'),
        }
    }
}

/// A tile `g(A^v)`: `g` has exponent equal to the prototile's, so `g ∘ s^{-i}`
/// is the isometry carrying the prototile onto the tile.
#[derive(Clone, Debug, PartialEq)]
pub struct Tile {
    /// Reversed word `θ` the tile was built in (`∅` for canonical and derived tilings).
    pub context: Word,
    /// Relative address of the tile in its tiling's frame.
    pub body: Word,
    pub map: AffineMap,
    pub prototile: Prototile,
}

impl Tile {
    /// Same class, same exponent, and maps within `tol`.
    pub fn same_as(&self, other: &Tile, tol: f64) -> bool {
        self.prototile == other.prototile && self.map.approx_eq(&other.map, tol)
    }

    /// The isometry taking the prototile `s^i A^v` onto this tile.
    pub fn placement(&self) -> IsometryRecord {
        self.map.rescaled_before(-(self.prototile.exponent as i32))
    }

    /// `[lo, hi]` of a one-dimensional tile, given the component hulls.
    pub fn interval(&self, hulls: &[(f64, f64)]) -> (f64, f64) {
        let (a, b) = hulls[self.prototile.vertex.index()];
        let (x, y) = (self.map.apply(&[a])[0], self.map.apply(&[b])[0]);
        (x.min(y), x.max(y))
    }

    /// The tile's image of a depth-`depth` cloud of its component.
    pub fn cloud(&self, t: &Tifs, depth: u32) -> Result<PointCloud> {
        let cloud = geometry::attractor_deterministic(t, depth, &t.seeds())?;
        Ok(cloud.component(self.prototile.vertex).mapped(&self.map))
    }

    pub fn letter(&self) -> char {
        self.prototile.letter()
    }
}

/// Where a tiling came from.
#[derive(Clone, Debug, PartialEq)]
pub enum TilingContext {
    Canonical {
        level: u32,
        root: Option<Vertex>,
    },
    BlowUp {
        theta: Word,
    },
    /// Image of another tiling under an isometry, or the result of inflation/deflation.
    Derived,
}

/// A tiling equals `isometry · T_level^{(root)}`, and each tile's body is its
/// relative address in `Ω_level^{(root)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    pub isometry: IsometryRecord,
    pub level: u32,
    pub root: Option<Vertex>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tiling {
    tiles: Vec<Tile>,
    context: TilingContext,
    frame: Option<Frame>,
}

impl Tiling {
    pub fn new(tiles: Vec<Tile>, context: TilingContext, frame: Option<Frame>) -> Self {
        Tiling { tiles, context, frame }
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn into_tiles(self) -> Vec<Tile> {
        self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn context(&self) -> &TilingContext {
        &self.context
    }

    pub fn frame(&self) -> Option<&Frame> {
        self.frame.as_ref()
    }

    /// `E · self`. Bodies are kept; the frame moves with the tiles.
    pub fn mapped(&self, e: &IsometryRecord) -> Tiling {
        let tiles = self
            .tiles
            .iter()
            .map(|tile| Tile {
                context: Word::empty(Orientation::Reversed),
                body: tile.body.clone(),
                map: e.compose(&tile.map),
                prototile: tile.prototile,
            })
            .collect();
        let frame =
            self.frame.as_ref().map(|f| Frame { isometry: e.compose(&f.isometry), level: f.level, root: f.root });
        Tiling { tiles, context: TilingContext::Derived, frame }
    }

    pub fn lookup(&self) -> TileLookup<'_> {
        TileLookup::new(&self.tiles)
    }

    /// Index of a tile identical to `tile` within `tol`.
    pub fn find(&self, tile: &Tile, tol: f64) -> Option<usize> {
        self.tiles.iter().position(|x| x.same_as(tile, tol))
    }

    /// Every tile of `self` appears in `other`.
    pub fn is_subset_of(&self, other: &Tiling, tol: f64) -> bool {
        let lookup = other.lookup();
        self.tiles.iter().all(|t| lookup.find(t, tol).is_some())
    }

    /// Same tile sets (as sets, ignoring order and provenance).
    pub fn same_tiles(&self, other: &Tiling, tol: f64) -> bool {
        self.len() == other.len() && self.is_subset_of(other, tol) && other.is_subset_of(self, tol)
    }

    /// Largest map deviation between matched tiles of two tilings with the
    /// same tile set, `None` when they cannot be matched.
    pub fn max_deviation(&self, other: &Tiling, tol: f64) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        let lookup = other.lookup();
        let mut worst: f64 = 0.0;
        for t in &self.tiles {
            let i = lookup.find(t, tol)?;
            worst = worst.max(t.map.deviation(&other.tiles[i].map));
        }
        Some(worst)
    }

    /// One-dimensional tiles ordered by left endpoint, with their intervals.
    pub fn by_position(&self, t: &Tifs) -> Result<Vec<(&Tile, (f64, f64))>> {
        let hulls = geometry::component_hulls_1d(t)?;
        let mut out: Vec<_> = self.tiles.iter().map(|x| (x, x.interval(&hulls))).collect();
        out.sort_by(|a, b| a.1 .0.total_cmp(&b.1 .0).then(a.1 .1.total_cmp(&b.1 .1)));
        Ok(out)
    }

    /// The prototile letters read left to right (one-dimensional systems).
    pub fn letters(&self, t: &Tifs) -> Result<String> {
        Ok(self.by_position(t)?.into_iter().map(|(x, _)| x.letter()).collect())
    }

    /// One-dimensional desk check: interiors of the tile hulls are disjoint.
    pub fn hulls_disjoint_1d(&self, t: &Tifs, tol: f64) -> Result<bool> {
        let sorted = self.by_position(t)?;
        Ok(sorted.windows(2).all(|w| w[0].1 .1 <= w[1].1 .0 + tol))
    }
}

/// Tiles sorted by the first translation coordinate, for identity lookups.
#[derive(Clone, Debug)]
pub struct TileLookup<'a> {
    tiles: &'a [Tile],
    order: Vec<(f64, usize)>,
}

impl<'a> TileLookup<'a> {
    pub fn new(tiles: &'a [Tile]) -> Self {
        let mut order: Vec<(f64, usize)> =
            tiles.iter().enumerate().map(|(i, t)| (t.map.shift().first().copied().unwrap_or(0.0), i)).collect();
        order.sort_by(|a, b| a.0.total_cmp(&b.0));
        TileLookup { tiles, order }
    }

    pub fn find(&self, tile: &Tile, tol: f64) -> Option<usize> {
        let key = tile.map.shift().first().copied().unwrap_or(0.0);
        let start = self.order.partition_point(|(k, _)| *k < key - tol);
        self.order[start..]
            .iter()
            .take_while(|(k, _)| *k <= key + tol)
            .map(|&(_, i)| i)
            .find(|&i| self.tiles[i].same_as(tile, tol))
    }
}

/// `T_k^{(v)}`: tiles `s^{-k} f_σ(A^{head(σ)})` for `σ ∈ Ω_k^{(v)}`, in word order.
pub fn canonical_tiling(t: &Tifs, k: u32, root: Option<Vertex>) -> Tiling {
    let omega = symbolic::omega(t, k, root);
    let tiles = omega
        .into_words()
        .into_iter()
        .map(|sigma| {
            let xi = t.xi(&sigma);
            Tile {
                context: Word::empty(Orientation::Reversed),
                map: t.forward_map(sigma.symbols()).rescaled_after(-(k as i32)),
                prototile: Prototile { vertex: t.end_vertex(&sigma).expect("nonempty"), exponent: xi - k },
                body: sigma,
            }
        })
        .collect();
    Tiling::new(
        tiles,
        TilingContext::Canonical { level: k, root },
        Some(Frame { isometry: AffineMap::identity(t.dim(), t.base()), level: k, root }),
    )
}

/// `Π(θ)` with bodies in `Ω_{ξ(θ)}` rooted at `tail(θ_last)`. `Π(∅) = T_0`,
/// rooted at `empty_root` when given.
pub fn tiling_of_rooted(t: &Tifs, theta: &Word, empty_root: Option<Vertex>) -> Result<Tiling> {
    let theta = theta.clone().with_orientation(Orientation::Reversed);
    t.check_admissible(&theta)?;
    let Some(root) = t.end_vertex(&theta) else {
        let mut base = canonical_tiling(t, 0, empty_root);
        base.context = TilingContext::BlowUp { theta };
        return Ok(base);
    };
    let level = t.xi(&theta);
    let tiles = symbolic::omega(t, level, Some(root))
        .into_words()
        .into_iter()
        .map(|sigma| Tile {
            map: t.relative_map(&theta, &sigma),
            prototile: Prototile { vertex: t.end_vertex(&sigma).expect("nonempty"), exponent: t.xi(&sigma) - level },
            context: theta.clone(),
            body: sigma,
        })
        .collect();
    let frame = Frame { isometry: e_theta(t, &theta), level, root: Some(root) };
    Ok(Tiling::new(tiles, TilingContext::BlowUp { theta }, Some(frame)))
}

/// `Π(θ)`; `Π(∅)` is the whole of `T_0`.
pub fn tiling_of(t: &Tifs, theta: &Word) -> Result<Tiling> {
    tiling_of_rooted(t, theta, None)
}

/// `Π(θ|k)` as used in nesting chains: `Π(∅)` is rooted at `head(θ_1)` so that `Π(∅) ⊂ Π(θ|1)`.
pub fn tiling_of_prefix(t: &Tifs, theta: &Word, k: usize) -> Result<Tiling> {
    let root = theta.first().map(|s| t.head(s));
    tiling_of_rooted(t, &theta.prefix(k), root)
}

fn e_theta(t: &Tifs, theta: &Word) -> IsometryRecord {
    t.inverse_map(theta.symbols()).rescaled_before(t.xi(theta) as i32)
}

/// `E_θ = f_{-θ} ∘ s^{ξ(θ)}`, the level `ξ(θ)` and the root `tail(θ_last)`, so
/// that `Π(θ) = E_θ · T_{ξ(θ)}^{(root)}`.
pub fn blow_up_frame(t: &Tifs, theta: &Word) -> Result<(IsometryRecord, u32, Option<Vertex>)> {
    let theta = theta.clone().with_orientation(Orientation::Reversed);
    t.check_admissible(&theta)?;
    Ok((e_theta(t, &theta), t.xi(&theta), t.end_vertex(&theta)))
}

/// The isometries `E_{k,ω} = s^{-k} f_ω s^{k−ξ(ω)}` for `ω ∈ Ω_l^{(v)}`, with the
/// level `k − ξ(ω)` and vertex `head(ω)` of the canonical piece each one places.
pub fn decompose_canonical(
    t: &Tifs,
    k: u32,
    l: u32,
    root: Option<Vertex>,
) -> Result<Vec<(IsometryRecord, u32, Vertex)>> {
    let blocks = symbolic::predecessor_decomposition(t, k, l, root)?;
    Ok(blocks
        .into_iter()
        .map(|(omega, below)| {
            let xi = t.xi(&omega);
            let e = t.forward_map(omega.symbols()).rescaled_after(-(k as i32)).rescaled_before((k - xi) as i32);
            (e, below.level(), below.root().expect("rooted"))
        })
        .collect())
}

/// All prototile classes `s^i A^v`, `1 ≤ i ≤ a_max`, with a representative cloud each.
pub fn prototile_set(t: &Tifs, depth: u32) -> Result<Vec<(Prototile, PointCloud)>> {
    let cloud = geometry::attractor_deterministic(t, depth, &t.seeds())?;
    let mut out = Vec::new();
    for v in t.vertices() {
        let part = cloud.component(v);
        for i in 1..=t.a_max() {
            let scale = AffineMap::scaling(t.dim(), t.base(), i as i32);
            out.push((Prototile { vertex: v, exponent: i }, part.mapped(&scale)));
        }
    }
    Ok(out)
}

/// Smallest `n ≤ max_len` such that every `Π(θ)` with `|θ| = n` uses every
/// prototile class. The threshold is found by search, not by formula.
pub fn prototile_threshold(t: &Tifs, max_len: usize) -> Option<usize> {
    let total = t.vertex_count() * t.a_max() as usize;
    (0..=max_len).find(|&n| {
        t.words(n, Orientation::Reversed, None).iter().all(|theta| {
            let tiling = tiling_of(t, theta).expect("enumerated words are admissible");
            let mut classes: Vec<Prototile> = tiling.tiles().iter().map(|x| x.prototile).collect();
            classes.sort();
            classes.dedup();
            classes.len() == total
        })
    })
}

/// Every tile's class exponent equals its map exponent and lies in `1..=a_max`.
pub fn classes_consistent(t: &Tifs, tiling: &Tiling) -> bool {
    tiling.tiles().iter().all(|tile| {
        let i = tile.prototile.exponent;
        tile.map.exponent() == i as i32 && (1..=t.a_max()).contains(&i)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fib_letters() {
        let fib = fixtures::fib();
        let expected = ["ls", "lsl", "lslls", "lsllslsl", "lsllslsllslls"];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(canonical_tiling(&fib, k as u32, None).letters(&fib).unwrap(), *e);
        }
    }

    #[test]
    fn bin_blow_up_of_one() {
        let bin = fixtures::bin();
        let p = tiling_of(&bin, &Word::reversed([1])).unwrap();
        let iv: Vec<(f64, f64)> = p.by_position(&bin).unwrap().into_iter().map(|(_, i)| i).collect();
        assert_eq!(iv, [(0.0, 0.5), (0.5, 1.0), (1.0, 1.5), (1.5, 2.0)]);
    }

    #[test]
    fn fib_blow_up_of_one_is_t1() {
        let fib = fixtures::fib();
        let p = tiling_of(&fib, &Word::reversed([1])).unwrap();
        assert!(p.same_tiles(&canonical_tiling(&fib, 1, None), 1e-12));
        let (e, level, _) = blow_up_frame(&fib, &Word::reversed([1])).unwrap();
        assert_eq!(level, 1);
        assert!(e.approx_eq(&AffineMap::identity(1, fib.base()), 1e-12));
    }

    #[test]
    fn bin_e_theta_for_two() {
        let bin = fixtures::bin();
        let (e, level, _) = blow_up_frame(&bin, &Word::reversed([2])).unwrap();
        assert_eq!((e.exponent(), level), (0, 1));
        assert!((e.apply(&[3.0])[0] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn empty_context_is_t0() {
        let fib = fixtures::fib();
        let p = tiling_of(&fib, &Word::reversed([])).unwrap();
        assert_eq!(p.letters(&fib).unwrap(), "ls");
    }

    #[test]
    fn prototile_classes() {
        assert_eq!(prototile_set(&fixtures::gd2(), 4).unwrap().len(), 4);
        assert_eq!(prototile_set(&fixtures::bin(), 4).unwrap().len(), 1);
        assert_eq!(prototile_threshold(&fixtures::fib(), 4), Some(0));
    }

    #[test]
    fn decomposition_covers_bin_t2() {
        let bin = fixtures::bin();
        let pieces = decompose_canonical(&bin, 2, 0, None).unwrap();
        assert_eq!(pieces.len(), 2);
        let mut tiles = Vec::new();
        for (e, level, v) in &pieces {
            assert_eq!(e.exponent(), 0);
            tiles.extend(canonical_tiling(&bin, *level, Some(*v)).mapped(e).into_tiles());
        }
        let union = Tiling::new(tiles, TilingContext::Derived, None);
        assert!(union.same_tiles(&canonical_tiling(&bin, 2, None), 1e-12));
    }
}
