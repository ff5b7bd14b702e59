//! The symbolic tilings `Ω_k^{(v)} = {σ : ξ⁻(σ) ≤ k < ξ(σ)}` and how levels relate.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::system::{Tifs, Vertex};
use crate::word::{Orientation, Symbol, Word};

/// `Ω_k`, optionally restricted to words with `tail(σ_1) = root`. Words are
/// kept sorted, and form a prefix-free set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicTiling {
    level: u32,
    root: Option<Vertex>,
    words: Vec<Word>,
}

impl SymbolicTiling {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn root(&self) -> Option<Vertex> {
        self.root
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Word> {
        self.words.iter()
    }
}

impl<'a> IntoIterator for &'a SymbolicTiling {
    type Item = &'a Word;
    type IntoIter = core::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// Depth-first enumeration of `Ω_k^{(v)}`; extending past `ξ > k` stops a branch.
pub fn omega(t: &Tifs, k: u32, root: Option<Vertex>) -> SymbolicTiling {
    let mut words = Vec::new();
    let mut stack: Vec<Symbol> = Vec::new();
    let firsts: Vec<Symbol> = match root {
        Some(v) => t.edges_from(v).to_vec(),
        None => t.symbols().collect(),
    };
    for s in firsts {
        stack.push(s);
        grow(t, k, t.a(s), &mut stack, &mut words);
        stack.pop();
    }
    SymbolicTiling { level: k, root, words }
}

fn grow(t: &Tifs, k: u32, xi: u32, stack: &mut Vec<Symbol>, out: &mut Vec<Word>) {
    if xi > k {
        out.push(Word::forward(stack.clone()));
        return;
    }
    let last = *stack.last().expect("nonempty");
    for &s in t.continuations(Orientation::Forward, Some(last), None) {
        stack.push(s);
        grow(t, k, xi + t.a(s), stack, out);
        stack.pop();
    }
}

/// `Ω_k → Ω_{k+1}`: words with `ξ ≥ k + 2` stay, words with `ξ = k + 1` are
/// replaced by all their one-symbol extensions.
pub fn split(t: &Tifs, s: &SymbolicTiling) -> SymbolicTiling {
    let next = s.level + 1;
    let mut words = Vec::with_capacity(s.words.len() * 2);
    for w in &s.words {
        if t.xi(w) > next {
            words.push(w.clone());
        } else {
            let last = w.last().expect("Ω words are nonempty");
            for &j in t.continuations(Orientation::Forward, Some(last), None) {
                words.push(w.pushed(j));
            }
        }
    }
    SymbolicTiling { level: next, root: s.root, words }
}

/// The unique prefix of `w` lying in `Ω_k`.
pub fn amalgamate(t: &Tifs, w: &Word, k: u32) -> Result<Word> {
    let mut xi = 0;
    for (i, &s) in w.symbols().iter().enumerate() {
        xi += t.a(s);
        if xi > k {
            return Ok(w.prefix(i + 1));
        }
    }
    Err(Error::NoPrefixAtLevel { word: w.clone(), xi, level: k })
}

/// Groups `Ω_m` by amalgamation into `Ω_k`. Blocks follow the order of `Ω_k`
/// and each block is sorted.
pub fn partition(t: &Tifs, m: u32, k: u32, root: Option<Vertex>) -> Result<Vec<(Word, Vec<Word>)>> {
    if m < k {
        return Err(Error::LevelTooSmall { level: m, required: k });
    }
    let coarse = omega(t, k, root);
    let fine = omega(t, m, root);
    let mut blocks: Vec<(Word, Vec<Word>)> = coarse.words.into_iter().map(|w| (w, Vec::new())).collect();
    for w in fine.words {
        let parent = amalgamate(t, &w, k)?;
        let i = blocks.binary_search_by(|(p, _)| p.cmp(&parent)).expect("amalgamation lands in Ω_k");
        blocks[i].1.push(w);
    }
    Ok(blocks)
}

/// `Ω_k^{(v)} = ⊔_{ω ∈ Ω_l^{(v)}} ω · Ω_{k−ξ(ω)}^{head(ω)}`, for `k ≥ a_max + l`.
pub fn predecessor_decomposition(
    t: &Tifs,
    k: u32,
    l: u32,
    root: Option<Vertex>,
) -> Result<Vec<(Word, SymbolicTiling)>> {
    let required = t.a_max() + l;
    if k < required {
        return Err(Error::LevelTooSmall { level: k, required });
    }
    Ok(omega(t, l, root)
        .words
        .into_iter()
        .map(|w| {
            let head = t.end_vertex(&w).expect("nonempty");
            let below = omega(t, k - t.xi(&w), Some(head));
            (w, below)
        })
        .collect())
}

/// Concatenates a predecessor decomposition back into one sorted word list.
pub fn reassemble(blocks: &[(Word, SymbolicTiling)]) -> Vec<Word> {
    let mut out: Vec<Word> = blocks.iter().flat_map(|(w, s)| s.words.iter().map(move |x| w.concat(x))).collect();
    out.sort();
    out
}

/// `Λ_k^{(v)} = {σ : ξ(σ) = k}`, sorted. `Λ_0 = {∅}`.
pub fn lambda(t: &Tifs, k: u32, root: Option<Vertex>) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    lambda_grow(t, k, 0, root, &mut stack, &mut out);
    out
}

fn lambda_grow(t: &Tifs, k: u32, xi: u32, root: Option<Vertex>, stack: &mut Vec<Symbol>, out: &mut Vec<Word>) {
    if xi == k {
        out.push(Word::forward(stack.clone()));
        return;
    }
    let next: Vec<Symbol> = match stack.last() {
        Some(&l) => t.continuations(Orientation::Forward, Some(l), None).to_vec(),
        None => match root {
            Some(v) => t.edges_from(v).to_vec(),
            None => t.symbols().collect(),
        },
    };
    for s in next {
        if xi + t.a(s) <= k {
            stack.push(s);
            lambda_grow(t, k, xi + t.a(s), root, stack, out);
            stack.pop();
        }
    }
}
