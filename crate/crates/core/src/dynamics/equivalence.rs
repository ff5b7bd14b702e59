use alloc::vec;
use alloc::vec::Vec;

use crate::affine::{AffineMap, IsometryRecord};
use crate::error::{Error, Result};
use crate::system::{Tifs, Vertex};
use crate::tiling;
use crate::word::{Orientation, Symbol, Word};

/// `Π(θ) = E·Π(ψ)` because `ξ(θ|p) = ξ(ψ|q)` and `S^p θ = S^q ψ`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceWitness {
    pub p: usize,
    pub q: usize,
    /// `E_{θ|p} ∘ E_{ψ|q}^{-1}`, exponent 0.
    pub e: IsometryRecord,
}

/// Searches `p, q ≤ bound` by increasing `p + q`, then increasing `p`. The
/// words are finite prefixes: the remainders must agree on their common length,
/// which has to be at least one symbol unless both remainders are empty.
///
/// Returns [`Error::Inconclusive`] when nothing is found; that is never a proof
/// of inequivalence.
pub fn check_equivalence(t: &Tifs, theta: &Word, psi: &Word, bound: usize) -> Result<EquivalenceWitness> {
    let theta = theta.clone().with_orientation(Orientation::Reversed);
    let psi = psi.clone().with_orientation(Orientation::Reversed);
    t.check_admissible(&theta)?;
    t.check_admissible(&psi)?;
    for total in 0..=2 * bound {
        for p in 0..=total.min(bound) {
            let q = total - p;
            if q > bound || p > theta.len() || q > psi.len() {
                continue;
            }
            let (a, b) = (theta.prefix(p), psi.prefix(q));
            if t.xi(&a) != t.xi(&b) {
                continue;
            }
            let (ra, rb) = (&theta.symbols()[p..], &psi.symbols()[q..]);
            let overlap = ra.len().min(rb.len());
            let tails_agree = if overlap == 0 {
                ra.is_empty() && rb.is_empty() && t.end_vertex(&a) == t.end_vertex(&b)
            } else {
                ra[..overlap] == rb[..overlap]
            };
            if !tails_agree {
                continue;
            }
            let (ea, _, _) = tiling::blow_up_frame(t, &a)?;
            let (eb, _, _) = tiling::blow_up_frame(t, &b)?;
            return Ok(EquivalenceWitness { p, q, e: ea.compose(&eb.inverse()) });
        }
    }
    Err(Error::Inconclusive { bound })
}

/// A class `[θ]` of reversed words under the equivalence above, stored by a
/// finite prefix of a representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRep {
    pub prefix: Word,
}

impl ClassRep {
    pub fn new(prefix: Word) -> Self {
        ClassRep { prefix: prefix.with_orientation(Orientation::Reversed) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftDirection {
    Forward,
    Backward,
}

/// Moves a class one unit of `ξ`: the first `j` symbols are replaced by a
/// padding word whose `ξ` is one less (forward) or one more (backward). `j` is
/// the least index for which such a padding exists, and the padding is the
/// lexicographically smallest admissible one.
pub fn shift_class(t: &Tifs, rep: &ClassRep, direction: ShiftDirection) -> Result<ClassRep> {
    let theta = &rep.prefix;
    t.check_admissible(theta)?;
    for j in 1..theta.len() {
        let xi = t.xi(&theta.prefix(j));
        let target = match direction {
            ShiftDirection::Forward => xi - 1,
            ShiftDirection::Backward => xi + 1,
        };
        let join = t.head(theta.symbols()[j]);
        if let Some(pad) = smallest_padding(t, target, join) {
            return Ok(ClassRep::new(pad.concat(&theta.shift(j))));
        }
    }
    Err(Error::PrefixTooShort)
}

/// Smallest reversed word with `ξ = target` whose last symbol has tail `join`;
/// the empty word qualifies for `target = 0`.
fn smallest_padding(t: &Tifs, target: u32, join: Vertex) -> Option<Word> {
    let v = t.vertex_count();
    let r_max = target as usize;
    // feasible[r][w]: some reversed word of ξ = r starting at w (first symbol has head w) ends at `join`.
    let mut feasible = vec![vec![false; v]; r_max + 1];
    feasible[0][join.index()] = true;
    for r in 1..=r_max {
        for w in t.vertices() {
            feasible[r][w.index()] = t.edges_into(w).iter().any(|&e| {
                let a = t.a(e) as usize;
                a <= r && feasible[r - a][t.tail(e).index()]
            });
        }
    }
    let mut out: Vec<Symbol> = Vec::new();
    let mut left = r_max;
    if left == 0 {
        return feasible[0][join.index()].then(|| Word::empty(Orientation::Reversed));
    }
    let mut options: Vec<Symbol> = t.symbols().collect();
    while left > 0 {
        let e = options.iter().copied().find(|&e| {
            let a = t.a(e) as usize;
            a <= left && feasible[left - a][t.tail(e).index()]
        })?;
        out.push(e);
        left -= t.a(e) as usize;
        options = t.edges_into(t.tail(e)).to_vec();
    }
    Some(Word::reversed(out))
}

/// `ψ = f_{-α} ∘ f_{-β} ∘ f_{-α}^{-1}`, a self-similarity of `Π(α β β β ...)`.
pub fn self_similarity(t: &Tifs, alpha: &Word, beta: &Word) -> Result<AffineMap> {
    if beta.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let alpha = alpha.clone().with_orientation(Orientation::Reversed);
    let beta = beta.clone().with_orientation(Orientation::Reversed);
    t.check_admissible(&alpha.concat(&beta).concat(&beta))?;
    let fa = t.inverse_map(alpha.symbols());
    Ok(fa.compose(&t.inverse_map(beta.symbols())).compose(&fa.inverse()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bin_one_gamma_two_gamma() {
        let bin = fixtures::bin();
        let w = check_equivalence(&bin, &Word::reversed([1, 2, 1, 1]), &Word::reversed([2, 2, 1, 1]), 4).unwrap();
        assert_eq!((w.p, w.q), (1, 1));
        assert_eq!(w.e.exponent(), 0);
        assert!((w.e.apply(&[0.25])[0] - 1.25).abs() < 1e-15);
    }

    #[test]
    fn identical_words_need_no_shift() {
        let fib = fixtures::fib();
        let theta = Word::reversed([2, 1, 1]);
        let w = check_equivalence(&fib, &theta, &theta, 3).unwrap();
        assert_eq!((w.p, w.q), (0, 0));
        assert!(w.e.approx_eq(&AffineMap::identity(1, fib.base()), 1e-15));
    }

    #[test]
    fn fib_needs_matching_exponents() {
        let fib = fixtures::fib();
        let (theta, psi) = (Word::reversed([1, 2, 1, 1, 1]), Word::reversed([2, 2, 1, 1, 1]));
        let w = check_equivalence(&fib, &theta, &psi, 3).unwrap();
        assert_eq!((w.p, w.q), (3, 2));
        assert_eq!(w.e.exponent(), 0);
    }

    #[test]
    fn fib_class_shift() {
        let fib = fixtures::fib();
        let rest = [1, 2, 1, 1];
        let two = ClassRep::new(Word::reversed([&[2][..], &rest].concat()));
        let one = shift_class(&fib, &two, ShiftDirection::Forward).unwrap();
        assert_eq!(one.prefix, Word::reversed([&[1][..], &rest].concat()));
        let bare = shift_class(&fib, &one, ShiftDirection::Forward).unwrap();
        assert_eq!(bare.prefix, Word::reversed(rest));
        let back = shift_class(&fib, &bare, ShiftDirection::Backward).unwrap();
        assert!(check_equivalence(&fib, &back.prefix, &one.prefix, 3).is_ok());
        assert_eq!(
            shift_class(&fib, &ClassRep::new(Word::reversed([1])), ShiftDirection::Forward),
            Err(Error::PrefixTooShort)
        );
    }

    #[test]
    fn similarities() {
        let bin = fixtures::bin();
        let psi = self_similarity(&bin, &Word::reversed([]), &Word::reversed([1])).unwrap();
        assert_eq!(psi.exponent(), -1);
        assert_eq!(psi.apply(&[0.5]), [1.0]);
        let fib = fixtures::fib();
        let a = fixtures::golden_ratio_conjugate();
        let psi = self_similarity(&fib, &Word::reversed([]), &Word::reversed([2])).unwrap();
        assert!((psi.apply(&[0.3])[0] - (0.3 - 1.0 + a * a) / (a * a)).abs() < 1e-12);
        assert_eq!(self_similarity(&fib, &Word::reversed([1]), &Word::reversed([])), Err(Error::EmptyPeriod));
    }
}
