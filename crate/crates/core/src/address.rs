//! Relative addresses `∅.σ` and absolute addresses `θ.ω` of tiles.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::system::Tifs;
use crate::tiling::{self, Prototile, Tile, Tiling, TilingContext, TILE_TOLERANCE};
use crate::word::{Orientation, Word};

/// A pair `θ.ω` of a reversed context word and a forward body word, naming the
/// tile `f_{-θ} f_ω(A^{head(ω)})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DottedAddress {
    pub context: Word,
    pub body: Word,
}

impl DottedAddress {
    pub fn new(context: Word, body: Word) -> Self {
        DottedAddress {
            context: context.with_orientation(Orientation::Reversed),
            body: body.with_orientation(Orientation::Forward),
        }
    }

    /// Parses `θ.ω`, either side possibly `∅`.
    pub fn parse(text: &str) -> Result<Self> {
        let (theta, omega) = text.split_once('.').ok_or_else(|| Error::WordSyntax(String::from(text)))?;
        Ok(DottedAddress::new(Word::parse(theta, Orientation::Reversed)?, Word::parse(omega, Orientation::Forward)?))
    }

    /// `θ_last ≠ ω_1` or one side empty.
    pub fn is_reduced(&self) -> bool {
        match (self.context.last(), self.body.first()) {
            (Some(a), Some(b)) => a != b,
            _ => true,
        }
    }
}

impl fmt::Display for DottedAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.context, self.body)
    }
}

/// Removes one pair of equal symbols next to the dot, if there is one.
pub fn cancel_step(addr: &DottedAddress) -> DottedAddress {
    if addr.is_reduced() {
        return addr.clone();
    }
    DottedAddress::new(addr.context.without_last(), addr.body.shift(1))
}

/// Removes equal symbols on either side of the dot until they differ or a side is empty.
pub fn cancel(addr: &DottedAddress) -> DottedAddress {
    let mut cur = addr.clone();
    while !cur.is_reduced() {
        cur = cancel_step(&cur);
    }
    cur
}

/// Body of the tile of `tiling` identical to `tile`.
pub fn relative_address_in(tiling: &Tiling, tile: &Tile) -> Result<Word> {
    tiling.lookup().find(tile, TILE_TOLERANCE).map(|i| tiling.tiles()[i].body.clone()).ok_or(Error::TileNotInContext)
}

/// The `σ ∈ Ω_k` naming `tile` inside `T_k^{(v)}` or `Π(θ)`.
pub fn relative_address(t: &Tifs, tile: &Tile, context: &TilingContext) -> Result<Word> {
    let tiling = match context {
        TilingContext::Canonical { level, root } => tiling::canonical_tiling(t, *level, *root),
        TilingContext::BlowUp { theta } => tiling::tiling_of(t, theta)?,
        TilingContext::Derived => return Err(Error::TileNotInContext),
    };
    relative_address_in(&tiling, tile)
}

/// `θ|l . ω` for the least `l` with the tile in `Π(θ|l)`, cancelled. `Π(∅)` is
/// rooted at `head(θ_1)`.
pub fn absolute_address(t: &Tifs, tile: &Tile, theta: &Word) -> Result<DottedAddress> {
    let theta = theta.clone().with_orientation(Orientation::Reversed);
    t.check_admissible(&theta)?;
    for l in 0..=theta.len() {
        let tiling = tiling::tiling_of_prefix(t, &theta, l)?;
        if let Ok(body) = relative_address_in(&tiling, tile) {
            return Ok(cancel(&DottedAddress::new(theta.prefix(l), body)));
        }
    }
    Err(Error::TileNotInContext)
}

/// Absolute addresses of every tile of `Π(θ)`, in tile order. Builds each
/// prefix tiling once.
pub fn address_blow_up(t: &Tifs, theta: &Word) -> Result<(Tiling, Vec<DottedAddress>)> {
    let theta = theta.clone().with_orientation(Orientation::Reversed);
    t.check_admissible(&theta)?;
    let prefixes: Vec<Tiling> =
        (0..=theta.len()).map(|l| tiling::tiling_of_prefix(t, &theta, l)).collect::<Result<_>>()?;
    let lookups: Vec<_> = prefixes.iter().map(|p| p.lookup()).collect();
    let full = prefixes.last().expect("at least the empty prefix").clone();
    let mut out = Vec::with_capacity(full.len());
    for tile in full.tiles() {
        let (l, i) = lookups
            .iter()
            .enumerate()
            .find_map(|(l, lk)| lk.find(tile, TILE_TOLERANCE).map(|i| (l, i)))
            .ok_or(Error::TileNotInContext)?;
        let body = prefixes[l].tiles()[i].body.clone();
        out.push(cancel(&DottedAddress::new(theta.prefix(l), body)));
    }
    Ok((full, out))
}

/// Absolute addresses of `tile` over several contexts, sorted and deduplicated.
/// Contexts not containing the tile are skipped; if none contains it the result
/// is [`Error::TileNotInContext`].
pub fn absolute_addresses(t: &Tifs, tile: &Tile, contexts: &[Word]) -> Result<Vec<DottedAddress>> {
    let mut out = Vec::new();
    for theta in contexts {
        match absolute_address(t, tile, theta) {
            Ok(a) => out.push(a),
            Err(Error::TileNotInContext) => {}
            Err(e) => return Err(e),
        }
    }
    if out.is_empty() {
        return Err(Error::TileNotInContext);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `π̂(θ.ω) = f_{-θ} f_ω(A^{head(ω)})`.
///
/// Requires admissible words, `ω` nonempty and rooted at `tail(θ_last)`,
/// `θ_last ≠ ω_1`, and `ξ(ω) > ξ(θ)`. Membership of `ω` in `Ω_{ξ(θ)}` is not
/// required, so the class exponent may exceed `a_max`.
pub fn tile_from_absolute(t: &Tifs, addr: &DottedAddress) -> Result<Tile> {
    let bad = |why: &str| Error::InvalidAddress(alloc::format!("{addr}: {why}"));
    if !t.is_admissible(&addr.context) || !t.is_admissible(&addr.body) {
        return Err(bad("not an admissible path"));
    }
    let Some(head) = t.end_vertex(&addr.body) else {
        return Err(bad("empty body"));
    };
    if let Some(root) = t.end_vertex(&addr.context) {
        if t.start_vertex(&addr.body) != Some(root) {
            return Err(bad("body does not start where the context ends"));
        }
    }
    if !addr.is_reduced() {
        return Err(bad("equal symbols on either side of the dot"));
    }
    let (xc, xb) = (t.xi(&addr.context), t.xi(&addr.body));
    if xb <= xc {
        return Err(bad("body is not longer than the context"));
    }
    Ok(Tile {
        context: addr.context.clone(),
        body: addr.body.clone(),
        map: t.relative_map(&addr.context, &addr.body),
        prototile: Prototile { vertex: head, exponent: xb - xc },
    })
}
