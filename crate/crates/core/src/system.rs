//! Validated tiling iterated function systems and the word/exponent bookkeeping on them.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::affine::AffineMap;
use crate::error::{Error, Result};
use crate::math::{self, Matrix};
use crate::word::{Orientation, Symbol, Word};

const ORTHOGONALITY_TOLERANCE: f64 = 1e-9;

/// Internal 0-based vertex index. Configuration files use their own ids, see
/// [`Tifs::vertex_id`] and [`Tifs::vertex_by_id`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// One similitude as written in a configuration document.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct RawMap {
    pub a: u32,
    /// Row-major `M×M` orthogonal matrix.
    #[cfg_attr(feature = "serde", serde(rename = "O"))]
    pub o: Vec<f64>,
    pub q: Vec<f64>,
    pub tail: u32,
    pub head: u32,
}

/// An unvalidated system description. Edge `n` (1-based) is `maps[n - 1]`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct RawTifs {
    pub dimension: usize,
    /// Decimal (`"0.5"`) or fraction (`"1/2"`).
    pub base_ratio: String,
    pub vertices: Vec<u32>,
    pub maps: Vec<RawMap>,
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Violation {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("base ratio {0:?} is not a positive finite number")]
    InvalidBaseRatio(String),
    #[error("at least two maps are required, found {0}")]
    TooFewMaps(usize),
    #[error("too many maps: {0}")]
    TooManyMaps(usize),
    #[error("vertex list is empty")]
    NoVertices,
    #[error("vertex id {0} is listed twice")]
    DuplicateVertex(u32),
    #[error("map {edge}: unknown vertex id {id}")]
    UnknownVertex { edge: usize, id: u32 },
    #[error("map {edge}: scale exponent must be at least 1")]
    ZeroExponent { edge: usize },
    #[error("map {edge}: matrix has {found} entries, expected {expected}")]
    MatrixShape { edge: usize, found: usize, expected: usize },
    #[error("map {edge}: translation has {found} entries, expected {expected}")]
    ShiftShape { edge: usize, found: usize, expected: usize },
    #[error("map {edge}: matrix is not orthogonal (‖OᵀO − I‖ = {defect:e})")]
    NotOrthogonal { edge: usize, defect: f64 },
    #[error("gcd of the scale exponents is {0}, not 1")]
    GcdNotOne(u32),
    #[error("more vertices ({vertices}) than maps ({maps})")]
    MoreVerticesThanMaps { vertices: usize, maps: usize },
    #[error("vertex {0} is not both a tail and a head of some edge")]
    VertexNotCovered(u32),
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("contraction factor {0} is not below 1")]
    NotContractive(f64),
    #[error("components A^{first} and A^{second} come within {gap:e} of each other")]
    ComponentsOverlap { first: u32, second: u32, gap: f64 },
}

/// Every violation found while validating, in the order checked.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationError(pub Vec<Violation>);

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl core::error::Error for ValidationError {}

/// A validated system plus warning-level findings.
#[derive(Clone, Debug)]
pub struct Validation {
    pub tifs: Tifs,
    pub warnings: Vec<Violation>,
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub a: u32,
    pub tail: Vertex,
    pub head: Vertex,
    pub map: AffineMap,
}

/// `f_w` or `f_{-w}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// A validated TIFS.
#[derive(Clone, Debug)]
pub struct Tifs {
    dim: usize,
    base_text: String,
    base: f64,
    vertex_ids: Vec<u32>,
    edges: Vec<Edge>,
    a_min: u32,
    a_max: u32,
    by_tail: Vec<Vec<Symbol>>,
    by_head: Vec<Vec<Symbol>>,
}

fn parse_ratio(text: &str) -> Option<f64> {
    let text = text.trim();
    let value = match text.split_once('/') {
        Some((num, den)) => num.trim().parse::<f64>().ok()? / den.trim().parse::<f64>().ok()?,
        None => text.parse::<f64>().ok()?,
    };
    (value.is_finite() && value > 0.0).then_some(value)
}

/// Checks a raw description and builds the system.
///
/// Overlapping components are reported as warnings, using deterministic
/// attractor clouds; everything else is an error.
pub fn validate(raw: &RawTifs) -> core::result::Result<Validation, ValidationError> {
    let mut errors = Vec::new();
    let m = raw.dimension;
    if m == 0 {
        errors.push(Violation::ZeroDimension);
    }
    let base = parse_ratio(&raw.base_ratio);
    if base.is_none() {
        errors.push(Violation::InvalidBaseRatio(raw.base_ratio.clone()));
    }
    if raw.maps.len() < 2 {
        errors.push(Violation::TooFewMaps(raw.maps.len()));
    }
    if raw.maps.len() > usize::from(u16::MAX) {
        errors.push(Violation::TooManyMaps(raw.maps.len()));
    }
    if raw.vertices.is_empty() {
        errors.push(Violation::NoVertices);
    }
    let mut sorted_ids = raw.vertices.clone();
    sorted_ids.sort_unstable();
    for pair in sorted_ids.windows(2) {
        if pair[0] == pair[1] {
            errors.push(Violation::DuplicateVertex(pair[0]));
        }
    }
    let lookup = |id: u32| raw.vertices.iter().position(|&v| v == id);
    for (i, map) in raw.maps.iter().enumerate() {
        let edge = i + 1;
        if map.a == 0 {
            errors.push(Violation::ZeroExponent { edge });
        }
        for id in [map.tail, map.head] {
            if lookup(id).is_none() {
                errors.push(Violation::UnknownVertex { edge, id });
            }
        }
        if map.o.len() != m * m {
            errors.push(Violation::MatrixShape { edge, found: map.o.len(), expected: m * m });
        } else if m > 0 {
            let o = Matrix::from_row_major(m, map.o.clone()).expect("length checked");
            let defect = o.orthogonality_defect();
            if defect.is_nan() || defect > ORTHOGONALITY_TOLERANCE {
                errors.push(Violation::NotOrthogonal { edge, defect });
            }
        }
        if map.q.len() != m {
            errors.push(Violation::ShiftShape { edge, found: map.q.len(), expected: m });
        }
    }
    if !errors.is_empty() {
        return Err(ValidationError(errors));
    }
    let base = base.expect("checked above");

    let n = raw.maps.len();
    let v = raw.vertices.len();
    if v > n {
        errors.push(Violation::MoreVerticesThanMaps { vertices: v, maps: n });
    }
    let edges: Vec<Edge> = raw
        .maps
        .iter()
        .map(|map| Edge {
            a: map.a,
            tail: Vertex(lookup(map.tail).expect("checked") as u32),
            head: Vertex(lookup(map.head).expect("checked") as u32),
            map: AffineMap::new(
                base,
                map.a as i32,
                Matrix::from_row_major(m, map.o.clone()).expect("checked"),
                map.q.clone(),
            ),
        })
        .collect();
    let mut by_tail = vec![Vec::new(); v];
    let mut by_head = vec![Vec::new(); v];
    for (i, e) in edges.iter().enumerate() {
        by_tail[e.tail.index()].push((i + 1) as Symbol);
        by_head[e.head.index()].push((i + 1) as Symbol);
    }
    for (i, &id) in raw.vertices.iter().enumerate() {
        if by_tail[i].is_empty() || by_head[i].is_empty() {
            errors.push(Violation::VertexNotCovered(id));
        }
    }
    let g = edges.iter().fold(0, |g, e| math::gcd(g, e.a));
    if g != 1 {
        errors.push(Violation::GcdNotOne(g));
    }
    if !strongly_connected(v, &edges) {
        errors.push(Violation::NotStronglyConnected);
    }
    let a_min = edges.iter().map(|e| e.a).min().unwrap_or(1);
    let a_max = edges.iter().map(|e| e.a).max().unwrap_or(1);
    let lambda = math::powi(base, a_min as i32);
    if lambda.is_nan() || lambda >= 1.0 {
        errors.push(Violation::NotContractive(lambda));
    }
    if !errors.is_empty() {
        return Err(ValidationError(errors));
    }

    let tifs = Tifs {
        dim: m,
        base_text: raw.base_ratio.clone(),
        base,
        vertex_ids: raw.vertices.clone(),
        edges,
        a_min,
        a_max,
        by_tail,
        by_head,
    };
    let warnings = crate::geometry::overlap_diagnosis(&tifs)
        .into_iter()
        .map(|(first, second, gap)| Violation::ComponentsOverlap {
            first: tifs.vertex_id(first),
            second: tifs.vertex_id(second),
            gap,
        })
        .collect();
    Ok(Validation { tifs, warnings })
}

fn strongly_connected(v: usize, edges: &[Edge]) -> bool {
    let reach = |forward: bool| {
        let mut seen = vec![false; v];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for e in edges {
                let (from, to) = if forward { (e.tail, e.head) } else { (e.head, e.tail) };
                if from.index() == x && !seen[to.index()] {
                    seen[to.index()] = true;
                    queue.push_back(to.index());
                }
            }
        }
        seen.iter().all(|&s| s)
    };
    v > 0 && reach(true) && reach(false)
}

impl Tifs {
    /// Validates and drops the warnings.
    pub fn from_raw(raw: &RawTifs) -> core::result::Result<Tifs, ValidationError> {
        validate(raw).map(|v| v.tifs)
    }

    pub fn to_raw(&self) -> RawTifs {
        RawTifs {
            dimension: self.dim,
            base_ratio: self.base_text.clone(),
            vertices: self.vertex_ids.clone(),
            maps: self
                .edges
                .iter()
                .map(|e| RawMap {
                    a: e.a,
                    o: e.map.orthogonal().entries().to_vec(),
                    q: e.map.shift().to_vec(),
                    tail: self.vertex_id(e.tail),
                    head: self.vertex_id(e.head),
                })
                .collect(),
        }
    }

    /// Ambient dimension `M`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The base ratio `s`.
    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn base_text(&self) -> &str {
        &self.base_text
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_ids.len() as u32).map(Vertex)
    }

    pub fn vertex_id(&self, v: Vertex) -> u32 {
        self.vertex_ids[v.index()]
    }

    pub fn vertex_by_id(&self, id: u32) -> Result<Vertex> {
        self.vertex_ids.iter().position(|&x| x == id).map(|i| Vertex(i as u32)).ok_or(Error::UnknownVertex(id))
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        1..=self.edges.len() as Symbol
    }

    pub fn edge(&self, symbol: Symbol) -> &Edge {
        &self.edges[usize::from(symbol) - 1]
    }

    pub fn a(&self, symbol: Symbol) -> u32 {
        self.edge(symbol).a
    }

    pub fn tail(&self, symbol: Symbol) -> Vertex {
        self.edge(symbol).tail
    }

    pub fn head(&self, symbol: Symbol) -> Vertex {
        self.edge(symbol).head
    }

    pub fn a_min(&self) -> u32 {
        self.a_min
    }

    pub fn a_max(&self) -> u32 {
        self.a_max
    }

    /// Contraction factor `λ = s^{min a}`.
    pub fn contraction(&self) -> f64 {
        math::powi(self.base, self.a_min as i32)
    }

    /// Edges `e` with `tail(e) = v`, ascending.
    pub fn edges_from(&self, v: Vertex) -> &[Symbol] {
        &self.by_tail[v.index()]
    }

    /// Edges `e` with `head(e) = v`, ascending.
    pub fn edges_into(&self, v: Vertex) -> &[Symbol] {
        &self.by_head[v.index()]
    }

    /// Symbols that may follow `last` in a word of the given orientation; with
    /// no `last`, the admissible first symbols under the optional root.
    pub fn continuations(&self, orientation: Orientation, last: Option<Symbol>, root: Option<Vertex>) -> &[Symbol] {
        static ALL: [Symbol; 0] = [];
        match (orientation, last, root) {
            (Orientation::Forward, Some(l), _) => self.edges_from(self.head(l)),
            (Orientation::Reversed, Some(l), _) => self.edges_into(self.tail(l)),
            (Orientation::Forward, None, Some(r)) => self.edges_from(r),
            (Orientation::Reversed, None, Some(r)) => self.edges_into(r),
            (_, None, None) => &ALL,
        }
    }

    fn first_symbols(&self, orientation: Orientation, root: Option<Vertex>) -> Vec<Symbol> {
        match root {
            Some(_) => self.continuations(orientation, None, root).to_vec(),
            None => self.symbols().collect(),
        }
    }

    pub fn is_admissible(&self, w: &Word) -> bool {
        let n = self.edges.len();
        if w.symbols().iter().any(|&s| s == 0 || usize::from(s) > n) {
            return false;
        }
        w.symbols().windows(2).all(|p| match w.orientation() {
            Orientation::Forward => self.head(p[0]) == self.tail(p[1]),
            Orientation::Reversed => self.tail(p[0]) == self.head(p[1]),
        })
    }

    pub fn check_admissible(&self, w: &Word) -> Result<()> {
        if self.is_admissible(w) {
            Ok(())
        } else {
            Err(Error::InadmissibleWord(w.clone()))
        }
    }

    /// Vertex a nonempty word starts from: `tail(σ_1)` forward, `head(θ_1)` reversed.
    pub fn start_vertex(&self, w: &Word) -> Option<Vertex> {
        w.first().map(|s| match w.orientation() {
            Orientation::Forward => self.tail(s),
            Orientation::Reversed => self.head(s),
        })
    }

    /// Vertex a nonempty word ends at: `head(σ_last)` forward, `tail(θ_last)` reversed.
    pub fn end_vertex(&self, w: &Word) -> Option<Vertex> {
        w.last().map(|s| match w.orientation() {
            Orientation::Forward => self.head(s),
            Orientation::Reversed => self.tail(s),
        })
    }

    /// `ξ(w)`, the sum of scale exponents.
    pub fn xi(&self, w: &Word) -> u32 {
        self.xi_of(w.symbols())
    }

    pub(crate) fn xi_of(&self, symbols: &[Symbol]) -> u32 {
        symbols.iter().map(|&s| self.a(s)).sum()
    }

    /// `ξ⁻(w)`, the sum without the last symbol.
    pub fn xi_minus(&self, w: &Word) -> u32 {
        let s = w.symbols();
        self.xi_of(&s[..s.len().saturating_sub(1)])
    }

    /// All admissible words of the given length, lexicographically sorted.
    /// A root keeps forward words with `tail(σ_1) = root` and reversed words
    /// with `head(θ_1) = root`.
    pub fn words(&self, length: usize, orientation: Orientation, root: Option<Vertex>) -> Vec<Word> {
        let mut out = Vec::new();
        if length == 0 {
            out.push(Word::empty(orientation));
            return out;
        }
        let mut stack = Vec::with_capacity(length);
        for s in self.first_symbols(orientation, root) {
            stack.push(s);
            self.extend_words(length, orientation, &mut stack, &mut out);
            stack.pop();
        }
        out
    }

    fn extend_words(&self, length: usize, orientation: Orientation, stack: &mut Vec<Symbol>, out: &mut Vec<Word>) {
        if stack.len() == length {
            out.push(Word::new(stack.clone(), orientation));
            return;
        }
        let last = *stack.last().expect("nonempty");
        for &s in self.continuations(orientation, Some(last), None) {
            stack.push(s);
            self.extend_words(length, orientation, stack, out);
            stack.pop();
        }
    }

    /// `f_w` (exponent `ξ(w)`) or `f_{-w} = f_{w_1}^{-1} ∘ ... ∘ f_{w_k}^{-1}` (exponent `−ξ(w)`).
    pub fn compose(&self, w: &Word, direction: Direction) -> Result<AffineMap> {
        self.check_admissible(w)?;
        Ok(match direction {
            Direction::Forward => self.forward_map(w.symbols()),
            Direction::Inverse => self.inverse_map(w.symbols()),
        })
    }

    pub(crate) fn forward_map(&self, symbols: &[Symbol]) -> AffineMap {
        symbols.iter().fold(AffineMap::identity(self.dim, self.base), |acc, &s| acc.compose(&self.edge(s).map))
    }

    pub(crate) fn inverse_map(&self, symbols: &[Symbol]) -> AffineMap {
        symbols
            .iter()
            .fold(AffineMap::identity(self.dim, self.base), |acc, &s| acc.compose(&self.edge(s).map.inverse()))
    }

    /// `f_{-θ} ∘ f_σ`, tagged with its provenance.
    pub(crate) fn relative_map(&self, theta: &Word, sigma: &Word) -> AffineMap {
        self.inverse_map(theta.symbols())
            .compose(&self.forward_map(sigma.symbols()))
            .with_provenance(theta.clone(), sigma.clone())
    }

    /// Edge-to-edge matrix `V_{ij} s^{D a_j}`, with `V_{ij} = 1` when edge `j` may follow edge `i`.
    fn weighted_edge_matrix(&self, d: f64) -> Vec<f64> {
        let n = self.edges.len();
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                if self.edges[i].head == self.edges[j].tail {
                    out[i * n + j] = libm::pow(self.base, d * f64::from(self.edges[j].a));
                }
            }
        }
        out
    }

    /// Spectral radius of `V_{ij} s^{D a_j}`.
    pub fn spectral_radius(&self, d: f64) -> f64 {
        spectral_radius(self.edges.len(), &self.weighted_edge_matrix(d))
    }

    /// The `D` with spectral radius one, by bisection on `[1e-6, M]`. Valid as a
    /// Hausdorff dimension only when the open set condition holds.
    pub fn hausdorff_dimension(&self) -> Result<f64> {
        let (mut lo, mut hi) = (1e-6, self.dim as f64);
        if self.spectral_radius(hi) > 1.0 || self.spectral_radius(lo) < 1.0 {
            return Err(Error::NoRootInRange { dimension: self.dim });
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            let r = self.spectral_radius(mid);
            if r > 1.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-15 {
                break;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// A point of `A^v` for every vertex `v`: the fixed point of the shortest cycle through `v`.
    pub fn seeds(&self) -> Vec<Vec<f64>> {
        self.vertices().map(|v| self.fixed_point(&self.shortest_cycle(v))).collect()
    }

    /// Shortest forward word with tail and head at `v`, smallest symbols first.
    pub fn shortest_cycle(&self, v: Vertex) -> Word {
        let mut parent: Vec<Option<(Vertex, Symbol)>> = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in self.edges_from(v) {
            if self.head(s) == v {
                return Word::forward([s]);
            }
            let h = self.head(s);
            if parent[h.index()].is_none() {
                parent[h.index()] = Some((v, s));
                queue.push_back(h);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &s in self.edges_from(x) {
                let h = self.head(s);
                if h == v {
                    let mut symbols = vec![s];
                    let mut cur = x;
                    while cur != v {
                        let (p, e) = parent[cur.index()].expect("visited");
                        symbols.push(e);
                        cur = p;
                    }
                    symbols.reverse();
                    return Word::forward(symbols);
                }
                if parent[h.index()].is_none() {
                    parent[h.index()] = Some((x, s));
                    queue.push_back(h);
                }
            }
        }
        unreachable!("validated systems are strongly connected")
    }

    /// Fixed point of `f_w` for a nonempty cycle `w`.
    pub fn fixed_point(&self, w: &Word) -> Vec<f64> {
        let f = self.forward_map(w.symbols());
        let lin = f.linear();
        let n = self.dim;
        let mut a = Matrix::identity(n).entries().to_vec();
        for (x, l) in a.iter_mut().zip(lin.entries()) {
            *x -= l;
        }
        let a = Matrix::from_row_major(n, a).expect("square");
        math::solve(&a, f.shift()).expect("I − f' is invertible for a contraction")
    }
}

/// Perron root of a nonnegative irreducible matrix, via power iteration on `A + I`
/// bracketed by Collatz–Wielandt bounds.
fn spectral_radius(n: usize, a: &[f64]) -> f64 {
    let mut x = vec![1.0; n];
    let mut y = vec![0.0; n];
    let (mut lo, mut hi) = (0.0, f64::INFINITY);
    for _ in 0..100_000 {
        for i in 0..n {
            y[i] = x[i] + (0..n).map(|j| a[i * n + j] * x[j]).sum::<f64>();
        }
        lo = f64::INFINITY;
        hi = 0.0;
        for i in 0..n {
            let r = y[i] / x[i];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        let norm = y.iter().cloned().fold(0.0, f64::max);
        for i in 0..n {
            x[i] = y[i] / norm;
        }
        if hi - lo <= 1e-14 * hi {
            break;
        }
    }
    0.5 * (lo + hi) - 1.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn gcd_two_rejected() {
        let mut raw = fixtures::bin_raw();
        for m in &mut raw.maps {
            m.a = 2;
        }
        let err = validate(&raw).unwrap_err();
        assert!(err.0.contains(&Violation::GcdNotOne(2)));
    }

    #[test]
    fn disconnected_graph_rejected() {
        let mut raw = fixtures::gd2_raw();
        raw.maps[2].head = 2;
        raw.maps[1].head = 1;
        let err = validate(&raw).unwrap_err();
        assert!(err.0.contains(&Violation::NotStronglyConnected));
    }

    #[test]
    fn skewed_matrix_rejected() {
        let mut raw = fixtures::bin_raw();
        raw.maps[0].o = vec![1.1];
        let err = validate(&raw).unwrap_err();
        assert!(matches!(err.0[0], Violation::NotOrthogonal { edge: 1, .. }));
    }

    #[test]
    fn base_ratio_forms() {
        assert_eq!(parse_ratio("1/2"), Some(0.5));
        assert_eq!(parse_ratio(" 0.25 "), Some(0.25));
        assert_eq!(parse_ratio("-1"), None);
        assert_eq!(parse_ratio("x"), None);
        let mut raw = fixtures::bin_raw();
        raw.base_ratio = "2".into();
        assert!(validate(&raw).unwrap_err().0.contains(&Violation::NotContractive(2.0)));
    }

    #[test]
    fn xi_values() {
        let fib = fixtures::fib();
        assert_eq!(fib.xi(&Word::forward([1, 1, 2])), 4);
        assert_eq!(fib.xi_minus(&Word::forward([1, 1, 2])), 2);
        assert_eq!(fib.xi(&Word::forward([])), 0);
        assert_eq!(fib.xi_minus(&Word::forward([])), 0);
    }

    #[test]
    fn compose_bin_examples() {
        let bin = fixtures::bin();
        let w = Word::forward([2, 1]);
        let f = bin.compose(&w, Direction::Forward).unwrap();
        assert_eq!(f.exponent(), 2);
        assert!((f.apply(&[1.0])[0] - 0.75).abs() < 1e-15);
        assert!((f.apply(&[0.0])[0] - 0.5).abs() < 1e-15);
        let g = bin.compose(&w, Direction::Inverse).unwrap();
        assert_eq!(g.exponent(), -2);
        assert!((g.apply(&[1.0])[0] - 3.0).abs() < 1e-15);
        assert!((g.apply(&[0.0])[0] + 1.0).abs() < 1e-15);
        let id = bin.compose(&Word::forward([]), Direction::Forward).unwrap();
        assert_eq!(id.exponent(), 0);
    }

    #[test]
    fn gd2_words_of_length_two() {
        let gd2 = fixtures::gd2();
        let shown: Vec<_> =
            gd2.words(2, Orientation::Forward, None).iter().map(alloc::string::ToString::to_string).collect();
        assert_eq!(shown, ["11", "12", "23", "31", "32"]);
    }

    #[test]
    fn dimensions() {
        assert!((fixtures::bin().hausdorff_dimension().unwrap() - 1.0).abs() < 1e-12);
        assert!((fixtures::fib().hausdorff_dimension().unwrap() - 1.0).abs() < 1e-9);
        let sier = fixtures::sier().hausdorff_dimension().unwrap();
        assert!((sier - libm::log(3.0) / libm::log(2.0)).abs() < 1e-9);
    }

    #[test]
    fn seeds_lie_on_cycles() {
        let gd2 = fixtures::gd2();
        assert_eq!(gd2.shortest_cycle(Vertex(0)), Word::forward([1]));
        assert_eq!(gd2.shortest_cycle(Vertex(1)), Word::forward([3, 2]));
        let seeds = gd2.seeds();
        assert_eq!(seeds[0], vec![0.0]);
        assert!(seeds[1][0] >= 2.0 && seeds[1][0] <= 2.0 + 1.0 / 7.0);
    }
}
