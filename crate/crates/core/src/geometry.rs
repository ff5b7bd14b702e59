//! Point-cloud approximations of the attractor components `A^v` and of `π(σ)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::affine::AffineMap;
use crate::error::{Error, Result};
use crate::math;
use crate::rng::ChaosRng;
use crate::system::{Tifs, Vertex};
use crate::word::{Symbol, Word};

/// Default cap on the number of words a deterministic cloud may enumerate.
pub const DEFAULT_WORD_CAP: u64 = 1 << 22;

/// Points discarded at the start of a chaos-game orbit.
pub const DEFAULT_BURN_IN: usize = 64;

/// A flat list of points in `ℝ^M`, each tagged with the component it approximates.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    dim: usize,
    coords: Vec<f64>,
    tags: Vec<Vertex>,
    depth: u32,
    error_bound: f64,
}

impl PointCloud {
    pub fn new(dim: usize, depth: u32, error_bound: f64) -> Self {
        PointCloud { dim, coords: Vec::new(), tags: Vec::new(), depth, error_bound }
    }

    pub fn push(&mut self, point: &[f64], tag: Vertex) {
        debug_assert_eq!(point.len(), self.dim);
        self.coords.extend_from_slice(point);
        self.tags.push(tag);
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn tag(&self, i: usize) -> Vertex {
        self.tags[i]
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn points(&self) -> impl Iterator<Item = (&[f64], Vertex)> + '_ {
        self.coords.chunks_exact(self.dim.max(1)).zip(self.tags.iter().copied())
    }

    /// Refinement depth the cloud was generated at (0 for chaos-game clouds).
    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Bound on the Hausdorff distance between the cloud and the components it approximates.
    pub fn error_bound(&self) -> f64 {
        self.error_bound
    }

    /// Points tagged `v`, as a new cloud.
    pub fn component(&self, v: Vertex) -> PointCloud {
        let mut out = PointCloud::new(self.dim, self.depth, self.error_bound);
        for (p, tag) in self.points() {
            if tag == v {
                out.push(p, tag);
            }
        }
        out
    }

    /// Each point mapped through `g`; the error bound scales with `g`.
    pub fn mapped(&self, g: &AffineMap) -> PointCloud {
        let mut out = PointCloud::new(self.dim, self.depth, self.error_bound * g.scale());
        let mut buf = vec![0.0; self.dim];
        for (p, tag) in self.points() {
            g.apply_into(p, &mut buf);
            out.push(&buf, tag);
        }
        out
    }

    /// `(min, max)` corners, `None` for an empty cloud.
    pub fn bounding_box(&self) -> Option<(Vec<f64>, Vec<f64>)> {
        let mut it = self.points();
        let (first, _) = it.next()?;
        let (mut lo, mut hi) = (first.to_vec(), first.to_vec());
        for (p, _) in it {
            for i in 0..self.dim {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        Some((lo, hi))
    }
}

/// A ball `B(center, radius)` with `f_e(B) ⊂ B` for every edge, so it contains every `A^v`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantBall {
    pub center: Vec<f64>,
    pub radius: f64,
}

/// Centred at the mean of the edge maps' fixed points; the radius is the
/// smallest one satisfying `ratio_e · R + ‖f_e(c) − c‖ ≤ R` for all edges.
pub fn invariant_ball(t: &Tifs) -> InvariantBall {
    let m = t.dim();
    let mut center = vec![0.0; m];
    let n = t.edge_count() as f64;
    for e in t.symbols() {
        let p = t.fixed_point(&Word::forward([e]));
        for (c, x) in center.iter_mut().zip(&p) {
            *c += x / n;
        }
    }
    let radius = t
        .symbols()
        .map(|e| {
            let f = &t.edge(e).map;
            math::distance(&f.apply(&center), &center) / (1.0 - f.scale())
        })
        .fold(0.0, f64::max);
    InvariantBall { center, radius }
}

/// `2R λ^d`: Hausdorff error of a depth-`d` deterministic cloud.
pub fn error_bound(t: &Tifs, depth: u32) -> f64 {
    2.0 * invariant_ball(t).radius * math::powi(t.contraction(), depth as i32)
}

/// Number of forward words of the given length starting at each vertex (or in total).
pub fn word_count(t: &Tifs, length: u32, root: Option<Vertex>) -> u64 {
    let mut counts = vec![1u64; t.vertex_count()];
    for _ in 0..length {
        counts = t
            .vertices()
            .map(|v| t.edges_from(v).iter().fold(0u64, |acc, &e| acc.saturating_add(counts[t.head(e).index()])))
            .collect();
    }
    match root {
        Some(v) => counts[v.index()],
        None => counts.iter().fold(0u64, |a, &c| a.saturating_add(c)),
    }
}

/// `{f_σ(seed_{head(σ)}) : |σ| = d}` grouped by `tail(σ_1)`, words in lexicographic order.
pub fn attractor_deterministic(t: &Tifs, depth: u32, seeds: &[Vec<f64>]) -> Result<PointCloud> {
    attractor_deterministic_capped(t, depth, seeds, DEFAULT_WORD_CAP)
}

pub fn attractor_deterministic_capped(t: &Tifs, depth: u32, seeds: &[Vec<f64>], cap: u64) -> Result<PointCloud> {
    let words = word_count(t, depth, None);
    if words > cap {
        return Err(Error::DepthTooLarge { depth, words, cap });
    }
    let mut cloud = PointCloud::new(t.dim(), depth, error_bound(t, depth));
    let mut buf = vec![0.0; t.dim()];
    for v in t.vertices() {
        if depth == 0 {
            cloud.push(&seeds[v.index()], v);
            continue;
        }
        let id = AffineMap::identity(t.dim(), t.base());
        descend(t, depth, &id, t.edges_from(v), seeds, v, &mut buf, &mut cloud);
    }
    Ok(cloud)
}

#[allow(clippy::too_many_arguments)]
fn descend(
    t: &Tifs,
    remaining: u32,
    prefix: &AffineMap,
    next: &[Symbol],
    seeds: &[Vec<f64>],
    tag: Vertex,
    buf: &mut [f64],
    out: &mut PointCloud,
) {
    for &e in next {
        let g = prefix.compose(&t.edge(e).map);
        let head = t.head(e);
        if remaining == 1 {
            g.apply_into(&seeds[head.index()], buf);
            out.push(buf, tag);
        } else {
            descend(t, remaining - 1, &g, t.edges_from(head), seeds, tag, buf, out);
        }
    }
}

/// One sweep of the graph Hutchinson operator: `A^w ← ∪_{tail(e)=w} f_e(A^{head(e)})`.
pub fn hutchinson_step(t: &Tifs, cloud: &PointCloud) -> PointCloud {
    let mut out = PointCloud::new(cloud.dim, cloud.depth + 1, cloud.error_bound * t.contraction());
    let mut buf = vec![0.0; cloud.dim];
    for w in t.vertices() {
        for &e in t.edges_from(w) {
            let f = &t.edge(e).map;
            let head = t.head(e);
            for (p, tag) in cloud.points() {
                if tag == head {
                    f.apply_into(p, &mut buf);
                    out.push(&buf, w);
                }
            }
        }
    }
    out
}

/// Chaos game started from the canonical seed of the first vertex.
///
/// Each step picks uniformly among the edges `e` with `head(e)` equal to the
/// current vertex, applies `f_e`, and moves to `tail(e)`; the point is tagged
/// with that new vertex. The first `burn_in` points are discarded.
pub fn chaos_game(t: &Tifs, n_points: usize, rng_seed: u64, burn_in: usize) -> PointCloud {
    let start = Vertex(0);
    let seed = t.seeds().swap_remove(0);
    chaos_game_from(t, n_points, &seed, start, rng_seed, burn_in, 0.0)
}

/// Chaos game from an arbitrary start point in the region of `start`. The error
/// bound is the start's distance to the invariant ball, contracted over the burn-in.
pub fn chaos_game_from_point(
    t: &Tifs,
    n_points: usize,
    point: &[f64],
    start: Vertex,
    rng_seed: u64,
    burn_in: usize,
) -> PointCloud {
    let ball = invariant_ball(t);
    let initial = math::distance(point, &ball.center) + ball.radius;
    let bound = initial * math::powi(t.contraction(), burn_in.min(i32::MAX as usize) as i32);
    chaos_game_from(t, n_points, point, start, rng_seed, burn_in, bound)
}

fn chaos_game_from(
    t: &Tifs,
    n_points: usize,
    point: &[f64],
    start: Vertex,
    rng_seed: u64,
    burn_in: usize,
    bound: f64,
) -> PointCloud {
    let mut rng = ChaosRng::new(rng_seed);
    let mut cloud = PointCloud::new(t.dim(), 0, bound);
    let mut x = point.to_vec();
    let mut next = vec![0.0; t.dim()];
    let mut v = start;
    for step in 0..burn_in + n_points {
        let choices = t.edges_into(v);
        let e = choices[rng.below(choices.len())];
        t.edge(e).map.apply_into(&x, &mut next);
        core::mem::swap(&mut x, &mut next);
        v = t.tail(e);
        if step >= burn_in {
            cloud.push(&x, v);
        }
    }
    cloud
}

/// `π(σ) = f_σ(A^{head(σ_last)})` at the given depth; `π(∅)` is the whole attractor.
pub fn pi_realize(t: &Tifs, sigma: &Word, depth: u32) -> Result<PointCloud> {
    t.check_admissible(sigma)?;
    let seeds = t.seeds();
    let cloud = attractor_deterministic(t, depth, &seeds)?;
    let Some(head) = t.end_vertex(sigma) else {
        return Ok(cloud);
    };
    let tail = t.start_vertex(sigma).expect("nonempty");
    let g = t.forward_map(sigma.symbols());
    let mapped = cloud.component(head).mapped(&g);
    let mut out = PointCloud::new(t.dim(), depth, mapped.error_bound());
    for (p, _) in mapped.points() {
        out.push(p, tail);
    }
    Ok(out)
}

/// Distance queries against the depth-`d` deterministic cloud without
/// materializing it. A subtree below `f_σ` lies in `f_σ(B)` for the invariant
/// ball `B`, which gives the pruning bound.
#[derive(Clone, Debug)]
pub struct ImplicitCloud<'a> {
    t: &'a Tifs,
    depth: u32,
    seeds: Vec<Vec<f64>>,
    ball: InvariantBall,
    /// `f_e(center)` and `f_e(seed of head(e))`, by edge index.
    centers: Vec<Vec<f64>>,
    leaves: Vec<Vec<f64>>,
}

impl<'a> ImplicitCloud<'a> {
    pub fn new(t: &'a Tifs, depth: u32) -> Self {
        let seeds = t.seeds();
        let ball = invariant_ball(t);
        let centers = t.symbols().map(|e| t.edge(e).map.apply(&ball.center)).collect();
        let leaves = t.symbols().map(|e| t.edge(e).map.apply(&seeds[t.head(e).index()])).collect();
        ImplicitCloud { t, depth, seeds, ball, centers, leaves }
    }

    pub fn error_bound(&self) -> f64 {
        2.0 * self.ball.radius * math::powi(self.t.contraction(), self.depth as i32)
    }

    /// Distance from `x` to the nearest cloud point, optionally only among points tagged `root`.
    pub fn distance(&self, x: &[f64], root: Option<Vertex>) -> f64 {
        self.nearest(x, root, f64::INFINITY, 0.0)
    }

    /// Whether some cloud point (tagged `root`, if given) lies within `eps` of
    /// `x`. Stops at the first such point.
    pub fn is_within(&self, x: &[f64], root: Option<Vertex>, eps: f64) -> bool {
        // Branches farther than `eps` are never entered.
        let bound = f64::from_bits(eps.to_bits() + 1);
        self.nearest(x, root, bound, eps) <= eps
    }

    fn nearest(&self, x: &[f64], root: Option<Vertex>, bound: f64, stop: f64) -> f64 {
        let mut best = bound;
        for v in self.t.vertices() {
            if root.is_some_and(|r| r != v) {
                continue;
            }
            if self.depth == 0 {
                best = best.min(math::distance(x, &self.seeds[v.index()]));
                continue;
            }
            let id = AffineMap::identity(self.t.dim(), self.t.base());
            self.search(x, &id, self.t.edges_from(v), self.depth, stop, &mut best);
            if best <= stop {
                break;
            }
        }
        best
    }

    fn search(&self, x: &[f64], prefix: &AffineMap, next: &[Symbol], remaining: u32, stop: f64, best: &mut f64) {
        let mut point = vec![0.0; x.len()];
        let mut children: Vec<(f64, Symbol)> = next
            .iter()
            .map(|&e| {
                let i = usize::from(e) - 1;
                if remaining == 1 {
                    prefix.apply_into(&self.leaves[i], &mut point);
                    (math::distance(x, &point), e)
                } else {
                    prefix.apply_into(&self.centers[i], &mut point);
                    let r = prefix.scale() * libm::pow(self.t.base(), f64::from(self.t.a(e))) * self.ball.radius;
                    (math::distance(x, &point) - r, e)
                }
            })
            .collect();
        children.sort_by(|a, b| a.0.total_cmp(&b.0));
        for (lower, e) in children {
            if lower >= *best || *best <= stop {
                break;
            }
            if remaining == 1 {
                *best = lower;
            } else {
                let g = prefix.compose(&self.t.edge(e).map);
                self.search(x, &g, self.t.edges_from(self.t.head(e)), remaining - 1, stop, best);
            }
        }
    }

    /// `max_p min_q ‖p − q‖` over the points `p` of `cloud`.
    pub fn one_sided_distance(&self, cloud: &PointCloud) -> f64 {
        cloud.points().map(|(p, _)| self.distance(p, None)).fold(0.0, f64::max)
    }

    /// Index of the first point of `cloud` farther than `eps` from this cloud
    /// (from its own component when `by_tag`), if any.
    pub fn first_outlier(&self, cloud: &PointCloud, eps: f64, by_tag: bool) -> Option<usize> {
        (0..cloud.len()).find(|&i| !self.is_within(cloud.point(i), by_tag.then(|| cloud.tag(i)), eps))
    }
}

/// Uniform grid bucketing of a cloud for neighbourhood queries.
#[derive(Clone, Debug)]
pub struct GridIndex<'a> {
    cloud: &'a PointCloud,
    cell: f64,
    buckets: BTreeMap<Vec<i64>, Vec<u32>>,
}

impl<'a> GridIndex<'a> {
    pub fn new(cloud: &'a PointCloud, cell: f64) -> Self {
        let mut buckets: BTreeMap<Vec<i64>, Vec<u32>> = BTreeMap::new();
        for (i, (p, _)) in cloud.points().enumerate() {
            buckets.entry(key(p, cell)).or_default().push(i as u32);
        }
        GridIndex { cloud, cell, buckets }
    }

    /// Nearest point within `radius`, as `(index, distance)`.
    pub fn nearest_within(&self, x: &[f64], radius: f64) -> Option<(usize, f64)> {
        let reach = libm::ceil(radius / self.cell) as i64;
        let centre = key(x, self.cell);
        let mut best: Option<(usize, f64)> = None;
        let mut offset = vec![-reach; centre.len()];
        loop {
            let cell: Vec<i64> = centre.iter().zip(&offset).map(|(c, o)| c + o).collect();
            if let Some(ids) = self.buckets.get(&cell) {
                for &i in ids {
                    let d = math::distance(x, self.cloud.point(i as usize));
                    if d <= radius && best.is_none_or(|(_, b)| d < b) {
                        best = Some((i as usize, d));
                    }
                }
            }
            let mut axis = 0;
            loop {
                if axis == offset.len() {
                    return best;
                }
                offset[axis] += 1;
                if offset[axis] <= reach {
                    break;
                }
                offset[axis] = -reach;
                axis += 1;
            }
        }
    }
}

fn key(p: &[f64], cell: f64) -> Vec<i64> {
    p.iter().map(|x| libm::floor(x / cell) as i64).collect()
}

/// Convex hulls `[lo, hi]` of each component of a one-dimensional system.
///
/// The Hutchinson operator is iterated on intervals until it settles; each
/// endpoint is then recomputed exactly as the image, along the edges that
/// realize it, of the fixed point of the cycle those edges end in.
pub fn component_hulls_1d(t: &Tifs) -> Result<Vec<(f64, f64)>> {
    if t.dim() != 1 {
        return Err(Error::UnsupportedDimension { dimension: t.dim(), supported: "{1}" });
    }
    let ball = invariant_ball(t);
    let (c, r) = (ball.center[0], ball.radius);
    let mut hulls = vec![(c - r, c + r); t.vertex_count()];
    // Endpoint `2v` is the low end of `A^v`, `2v + 1` the high end.
    let mut via: Vec<(Symbol, usize)> = vec![(0, 0); 2 * t.vertex_count()];
    for _ in 0..10_000 {
        let mut next = hulls.clone();
        for v in t.vertices() {
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for &e in t.edges_from(v) {
                let h = t.head(e).index();
                let (a, b) = hulls[h];
                let f = &t.edge(e).map;
                let (x, y) = (f.apply(&[a])[0], f.apply(&[b])[0]);
                let (low, high) = if x <= y { ((x, 2 * h), (y, 2 * h + 1)) } else { ((y, 2 * h + 1), (x, 2 * h)) };
                if low.0 < lo {
                    lo = low.0;
                    via[2 * v.index()] = (e, low.1);
                }
                if high.0 > hi {
                    hi = high.0;
                    via[2 * v.index() + 1] = (e, high.1);
                }
            }
            next[v.index()] = (lo, hi);
        }
        let moved =
            next.iter().zip(&hulls).map(|(a, b)| libm::fabs(a.0 - b.0).max(libm::fabs(a.1 - b.1))).fold(0.0, f64::max);
        hulls = next;
        if moved <= 1e-13 * (1.0 + r) {
            break;
        }
    }
    let mut exact: Vec<Option<f64>> = vec![None; via.len()];
    for start in 0..via.len() {
        let mut path = Vec::new();
        let mut cur = start;
        while exact[cur].is_none() && !path.contains(&cur) {
            path.push(cur);
            cur = via[cur].1;
        }
        if exact[cur].is_none() {
            let from = path.iter().position(|&p| p == cur).expect("on the path");
            let cycle: Vec<Symbol> = path[from..].iter().map(|&p| via[p].0).collect();
            exact[cur] = Some(t.fixed_point(&Word::forward(cycle))[0]);
        }
        for &p in path.iter().rev() {
            if exact[p].is_none() {
                let below = exact[via[p].1].expect("filled from the end of the path");
                exact[p] = Some(t.edge(via[p].0).map.apply(&[below])[0]);
            }
        }
    }
    Ok((0..t.vertex_count()).map(|v| (exact[2 * v].unwrap(), exact[2 * v + 1].unwrap())).collect())
}

/// Pairs of distinct components whose deterministic clouds come closer than
/// twice the cloud error, so disjointness cannot be confirmed.
pub fn overlap_diagnosis(t: &Tifs) -> Vec<(Vertex, Vertex, f64)> {
    if t.vertex_count() < 2 {
        return Vec::new();
    }
    let mut depth = 0;
    while depth < 16 && word_count(t, depth + 1, None) <= 1 << 14 {
        depth += 1;
    }
    let cloud = attractor_deterministic(t, depth, &t.seeds()).expect("depth chosen under the cap");
    let slack = 2.0 * cloud.error_bound();
    let parts: Vec<PointCloud> = t.vertices().map(|v| cloud.component(v)).collect();
    let mut out = Vec::new();
    for (i, first) in parts.iter().enumerate() {
        let index = GridIndex::new(first, slack.max(1e-12));
        for (j, second) in parts.iter().enumerate().skip(i + 1) {
            let gap = second
                .points()
                .filter_map(|(p, _)| index.nearest_within(p, slack).map(|(_, d)| d))
                .fold(f64::INFINITY, f64::min);
            if gap <= slack {
                out.push((Vertex(i as u32), Vertex(j as u32), gap));
            }
        }
    }
    out
}
