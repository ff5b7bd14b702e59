//! Finite edge words over the alphabet `[N] = {1, ..., N}`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// An edge label, 1-based as in `[N]`.
pub type Symbol = u16;

/// Which graph a word is a path in: `G` (forward, `Σ`) or the reversed graph `G†` (`Σ†`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Forward,
    Reversed,
}

/// A finite word with its orientation. Admissibility is checked against a
/// [`Tifs`](crate::system::Tifs), not on construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
    orientation: Orientation,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, orientation: Orientation) -> Self {
        Word { symbols, orientation }
    }

    pub fn forward(symbols: impl Into<Vec<Symbol>>) -> Self {
        Word::new(symbols.into(), Orientation::Forward)
    }

    pub fn reversed(symbols: impl Into<Vec<Symbol>>) -> Self {
        Word::new(symbols.into(), Orientation::Reversed)
    }

    pub fn empty(orientation: Orientation) -> Self {
        Word::new(Vec::new(), orientation)
    }

    /// Parses `∅` (or the empty string), a run of decimal digits such as
    /// `121`, or a comma separated list such as `1,12,3` for alphabets past 9.
    pub fn parse(text: &str, orientation: Orientation) -> Result<Self, Error> {
        let text = text.trim();
        if text.is_empty() || text == "∅" {
            return Ok(Word::empty(orientation));
        }
        let bad = || Error::WordSyntax(String::from(text));
        let symbols: Vec<Symbol> = if text.contains(',') {
            text.split(',').map(|part| part.trim().parse::<Symbol>().map_err(|_| bad())).collect::<Result<_, _>>()?
        } else {
            text.chars().map(|c| c.to_digit(10).map(|d| d as Symbol).ok_or_else(bad)).collect::<Result<_, _>>()?
        };
        if symbols.contains(&0) {
            return Err(bad());
        }
        Ok(Word::new(symbols, orientation))
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn first(&self) -> Option<Symbol> {
        self.symbols.first().copied()
    }

    pub fn last(&self) -> Option<Symbol> {
        self.symbols.last().copied()
    }

    /// `w|k`, the first `k` symbols (the whole word when `k ≥ |w|`).
    pub fn prefix(&self, k: usize) -> Word {
        Word::new(self.symbols[..k.min(self.len())].to_vec(), self.orientation)
    }

    /// `S^p w`: drops `p` leading symbols. Shifting past the end gives `∅`.
    pub fn shift(&self, steps: usize) -> Word {
        Word::new(self.symbols[steps.min(self.len())..].to_vec(), self.orientation)
    }

    /// `w⁻`, the word without its last symbol.
    pub fn without_last(&self) -> Word {
        Word::new(self.symbols[..self.len().saturating_sub(1)].to_vec(), self.orientation)
    }

    pub fn pushed(&self, symbol: Symbol) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.push(symbol);
        Word::new(symbols, self.orientation)
    }

    /// Concatenation `self · other`, keeping `self`'s orientation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word::new(symbols, self.orientation)
    }

    /// Reverses the symbol order and flips the orientation, so a path in `G†`
    /// becomes the same path read in `G` and vice versa.
    pub fn reverse_path(&self) -> Word {
        let orientation = match self.orientation {
            Orientation::Forward => Orientation::Reversed,
            Orientation::Reversed => Orientation::Forward,
        };
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word::new(symbols, orientation)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.symbols.starts_with(&self.symbols)
    }

    pub fn with_orientation(mut self, orientation: Orientation) -> Word {
        self.orientation = orientation;
        self
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return f.write_str("∅");
        }
        let compact = self.symbols.iter().all(|&s| s < 10);
        for (i, s) in self.symbols.iter().enumerate() {
            if !compact && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// `d(θ, ψ) = 2^{-ℓ}` with `ℓ` the length of the longest common prefix, `0` for equal words.
pub fn word_distance(a: &Word, b: &Word) -> f64 {
    if a.symbols == b.symbols {
        return 0.0;
    }
    let common = a.symbols.iter().zip(&b.symbols).take_while(|(x, y)| x == y).count();
    crate::math::powi(2.0, -(common as i32))
}
