#![allow(dead_code)]

use tifs_core::fixtures;
use tifs_core::{Orientation, Tifs, Word};

pub fn systems() -> Vec<(&'static str, Tifs)> {
    fixtures::all().into_iter().collect()
}

/// Walks the graph from `choices`, each entry picking among the admissible
/// continuations modulo their count.
pub fn walk(t: &Tifs, orientation: Orientation, choices: &[usize]) -> Word {
    let mut symbols: Vec<u16> = Vec::new();
    for &c in choices {
        let options: Vec<u16> = match symbols.last() {
            None => t.symbols().collect(),
            Some(&l) => t.continuations(orientation, Some(l), None).to_vec(),
        };
        symbols.push(options[c % options.len()]);
    }
    Word::new(symbols, orientation)
}

/// Brute-force oracle: all sequences over `[N]` of the given length that pass
/// the pairwise edge condition, checked directly on the edge endpoints.
pub fn brute_force_words(t: &Tifs, length: usize, orientation: Orientation) -> Vec<Word> {
    let n = t.edge_count() as u16;
    let mut all: Vec<Vec<u16>> = vec![vec![]];
    for _ in 0..length {
        all = all.into_iter().flat_map(|w| (1..=n).map(move |s| [w.clone(), vec![s]].concat())).collect();
    }
    all.into_iter()
        .filter(|w| {
            w.windows(2).all(|p| match orientation {
                Orientation::Forward => t.head(p[0]) == t.tail(p[1]),
                Orientation::Reversed => t.tail(p[0]) == t.head(p[1]),
            })
        })
        .map(|w| Word::new(w, orientation))
        .collect()
}
