use alloc::vec::Vec;

use crate::affine::IsometryRecord;
use crate::geometry::{self, GridIndex, PointCloud};
use crate::system::Tifs;
use crate::tiling::TILE_TOLERANCE;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Passes,
    Fails,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RigidityReport {
    pub verdict: Verdict,
    /// Isometries `E ≠ id` for which the tiles shared by `T_0` and `E·T_0` cover `A ∩ E·A`.
    pub witnesses: Vec<IsometryRecord>,
    /// Candidates whose coverage fell between the two thresholds.
    pub undecided: Vec<IsometryRecord>,
    pub candidates: usize,
    pub depth: u32,
}

/// A numeric heuristic for local rigidity, never a proof.
///
/// Candidates are the isometries `E = f_k ∘ f_l^{-1}` between distinct
/// first-level tiles of the same class. For each, the tiles common to `T_0` and
/// `E·T_0` are compared with `A ∩ E·A` on depth-`depth` clouds: full coverage is
/// a witness of failure, coverage under 90% clears the candidate, and anything
/// in between is left undecided.
pub fn neighbor_map_check(t: &Tifs, depth: u32, tolerance: f64) -> crate::error::Result<RigidityReport> {
    let first: Vec<(IsometryRecord, u16)> = t.symbols().map(|e| (t.edge(e).map.clone(), e)).collect();
    let mut candidates: Vec<IsometryRecord> = Vec::new();
    for &(ref fk, k) in &first {
        for &(ref fl, l) in &first {
            if k == l || t.head(k) != t.head(l) || t.a(k) != t.a(l) {
                continue;
            }
            let e = fk.compose(&fl.inverse());
            let id = IsometryRecord::identity(t.dim(), t.base());
            if e.approx_eq(&id, TILE_TOLERANCE) || candidates.iter().any(|c| c.approx_eq(&e, TILE_TOLERANCE)) {
                continue;
            }
            candidates.push(e);
        }
    }
    let mut report = RigidityReport {
        verdict: Verdict::Passes,
        witnesses: Vec::new(),
        undecided: Vec::new(),
        candidates: candidates.len(),
        depth,
    };
    if candidates.is_empty() {
        return Ok(report);
    }
    let cloud = geometry::attractor_deterministic(t, depth, &t.seeds())?;
    let delta = tolerance + 2.0 * cloud.error_bound();
    for e in candidates {
        let common: Vec<u16> = t
            .symbols()
            .filter(|&n| {
                first.iter().any(|(fm, m)| {
                    t.head(*m) == t.head(n)
                        && t.a(*m) == t.a(n)
                        && e.compose(fm).approx_eq(&t.edge(n).map, TILE_TOLERANCE)
                })
            })
            .collect();
        let moved = cloud.mapped(&e);
        let moved_index = GridIndex::new(&moved, delta);
        let mut shared = PointCloud::new(t.dim(), depth, cloud.error_bound());
        for &n in &common {
            let piece = geometry::pi_realize(t, &Word::forward([n]), depth.saturating_sub(1))?;
            for (p, v) in piece.points() {
                shared.push(p, v);
            }
        }
        let shared_index = GridIndex::new(&shared, delta);
        let (mut inside, mut covered) = (0usize, 0usize);
        for (p, _) in cloud.points() {
            if moved_index.nearest_within(p, delta).is_some() {
                inside += 1;
                if shared_index.nearest_within(p, delta).is_some() {
                    covered += 1;
                }
            }
        }
        let coverage = if inside == 0 { 0.0 } else { covered as f64 / inside as f64 };
        if !common.is_empty() && coverage >= 1.0 {
            report.witnesses.push(e);
        } else if coverage >= 0.9 {
            report.undecided.push(e);
        }
    }
    report.verdict = if !report.witnesses.is_empty() {
        Verdict::Fails
    } else if !report.undecided.is_empty() {
        Verdict::Inconclusive
    } else {
        Verdict::Passes
    };
    Ok(report)
}
