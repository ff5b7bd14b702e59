use alloc::vec::Vec;

use crate::affine::IsometryRecord;
use crate::math;
use crate::tiling::{Tile, Tiling, TILE_TOLERANCE};

/// Every isometry `E` with `E·patch ⊆ tiling`, found by anchoring the first patch
/// tile on each tile of the same class. `radius` optionally keeps only `E` whose
/// translation part has norm at most `radius`. Results follow the tiling's order.
pub fn find_patch_occurrences(tiling: &Tiling, patch: &[Tile], radius: Option<f64>) -> Vec<IsometryRecord> {
    let Some(anchor) = patch.first() else {
        return Vec::new();
    };
    let lookup = tiling.lookup();
    let anchor_inverse = anchor.map.inverse();
    let mut found: Vec<IsometryRecord> = Vec::new();
    for candidate in tiling.tiles() {
        if candidate.prototile != anchor.prototile {
            continue;
        }
        let e = candidate.map.compose(&anchor_inverse);
        if radius.is_some_and(|r| math::norm(e.shift()) > r) {
            continue;
        }
        if found.iter().any(|f| f.approx_eq(&e, TILE_TOLERANCE)) {
            continue;
        }
        let fits = patch.iter().all(|p| {
            let moved = Tile { map: e.compose(&p.map), ..p.clone() };
            lookup.find(&moved, TILE_TOLERANCE).is_some()
        });
        if fits {
            found.push(e);
        }
    }
    found
}

/// Overlapping occurrences of `pattern` in `text`, counted by letter.
pub fn letter_occurrences(text: &str, pattern: &str) -> usize {
    if pattern.is_empty() {
        return 0;
    }
    text.char_indices().filter(|&(i, _)| text[i..].starts_with(pattern)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tiling::canonical_tiling;

    #[test]
    fn fib_copies_of_t0() {
        let fib = fixtures::fib();
        let t0 = canonical_tiling(&fib, 0, None);
        assert_eq!(find_patch_occurrences(&canonical_tiling(&fib, 3, None), t0.tiles(), None).len(), 3);
        assert_eq!(find_patch_occurrences(&canonical_tiling(&fib, 4, None), t0.tiles(), None).len(), 5);
    }

    #[test]
    fn single_tile_patch_matches_its_class() {
        let fib = fixtures::fib();
        let t4 = canonical_tiling(&fib, 4, None);
        let l = t4.tiles().iter().filter(|x| x.letter() == 'l').count();
        let patch = [t4.tiles()[0].clone()];
        assert_eq!(find_patch_occurrences(&t4, &patch, None).len(), l);
    }

    #[test]
    fn lslls_in_t4_by_map_and_by_letter() {
        let fib = fixtures::fib();
        let t2 = canonical_tiling(&fib, 2, None);
        let t4 = canonical_tiling(&fib, 4, None);
        assert_eq!(find_patch_occurrences(&t4, t2.tiles(), None).len(), 3);
        assert_eq!(letter_occurrences(&t4.letters(&fib).unwrap(), "lslls"), 3);
    }

    #[test]
    fn letters() {
        assert_eq!(letter_occurrences("lsllslsllslls", "lslls"), 3);
        assert_eq!(letter_occurrences("aaa", "aa"), 2);
    }
}
