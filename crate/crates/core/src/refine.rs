//! Reversal scripts and the reduction machinery: splitting a cycle reversal at
//! a same-partite pair, collapsing tree-shaped cycles into 4-cycle steps, and
//! refining arbitrary cycle reversals into a base family.

use crate::graph_core::{MultGraph, VertexId};
use crate::orientation::{FamilyKind, FamilySpec, Orientation, OrientedCycle};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// What shape a script step claims at its application time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    /// The listed vertices form a dicycle `v1 -> v2 -> ... -> vk -> v1`.
    Directed,
    /// The listed vertices form a cycle; any arc pattern.
    Oriented,
    /// Three vertices read as (source, middle, sink) of a transitive triangle.
    Tt3,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyTag::Directed => "directed",
            FamilyTag::Oriented => "oriented",
            FamilyTag::Tt3 => "tt3",
        };
        write!(f, "{s}")
    }
}

/// One reversal: flip every edge of the listed cycle. The vertex order encodes
/// the claimed arc pattern (see `FamilyTag`), checked at application time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub vertices: Vec<VertexId>,
    pub tag: FamilyTag,
}

impl Step {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Checks the tag's arc pattern against the current orientation.
    pub fn check(&self, d: &Orientation) -> Result<()> {
        let k = self.vertices.len();
        match self.tag {
            FamilyTag::Directed => {
                for t in 0..k {
                    let (u, v) = (self.vertices[t], self.vertices[(t + 1) % k]);
                    if !d.has_arc(u, v) {
                        return Err(Error::ArcNotPresent(u, v));
                    }
                }
            }
            FamilyTag::Oriented => {
                for t in 0..k {
                    let (u, v) = (self.vertices[t], self.vertices[(t + 1) % k]);
                    d.arc_between(u, v)?;
                }
            }
            FamilyTag::Tt3 => {
                if k != 3 {
                    return Err(Error::InvalidScript(format!(
                        "tt3 step lists {k} vertices"
                    )));
                }
                let (s, m, t) = (self.vertices[0], self.vertices[1], self.vertices[2]);
                for (a, b) in [(s, m), (m, t), (s, t)] {
                    if !d.has_arc(a, b) {
                        return Err(Error::ArcNotPresent(a, b));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks the tag, then flips every edge of the cycle.
    pub fn apply(&self, d: &Orientation) -> Result<Orientation> {
        self.check(d)?;
        d.flip_edges_of(&self.vertices)
    }

    /// Whether this step is an instance of some family member.
    pub fn in_family(&self, family: &FamilySpec) -> bool {
        family.members().any(|(k, kind)| {
            k == self.len()
                && match kind {
                    FamilyKind::Directed => self.tag == FamilyTag::Directed,
                    // a transitive triangle is in particular an orientation
                    // of a 3-cycle
                    FamilyKind::AnyOrientation => true,
                    FamilyKind::Tt3 => self.tag == FamilyTag::Tt3,
                }
        })
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}:{}: {}", self.len(), self.tag, vs.join(" "))
    }
}

/// An ordered list of reversal steps bracketed by orientation fingerprints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    pub steps: Vec<Step>,
    pub initial: u64,
    pub terminal: u64,
}

impl Script {
    pub fn new(steps: Vec<Step>, from: &Orientation, to: &Orientation) -> Self {
        Script { steps, initial: from.fingerprint(), terminal: to.fingerprint() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the script, validating every step.
    pub fn apply(&self, d: &Orientation) -> Result<Orientation> {
        let mut cur = d.clone();
        for (i, step) in self.steps.iter().enumerate() {
            cur = step
                .apply(&cur)
                .map_err(|e| Error::InvalidScript(format!("step {}: {e}", i + 1)))?;
        }
        Ok(cur)
    }
}

/// Rotation and split bookkeeping for one chord split. The cycle `verts` is
/// rotated to start at position `start`; the chord joins the rotated position
/// 0 and position `cut`. `inner` keeps positions `0..=cut`, `outer` keeps
/// position 0 and positions `cut..`.
fn split_pieces(verts: &[VertexId], start: usize, cut: usize) -> (Vec<VertexId>, Vec<VertexId>) {
    let k = verts.len();
    let rot: Vec<VertexId> = (0..k).map(|t| verts[(start + t) % k]).collect();
    let inner = rot[..=cut].to_vec();
    let outer: Vec<VertexId> = std::iter::once(rot[0]).chain(rot[cut..].iter().copied()).collect();
    (inner, outer)
}

/// Orders the two pieces of a split. In directed mode the piece forming a
/// dicycle in `d` must be reversed first (the chord then flips, turning the
/// other piece into a dicycle). In orientation mode any order reverses the
/// original cycle exactly; the outer piece goes first, for determinism.
fn order_pieces(
    d: &Orientation,
    inner: Vec<VertexId>,
    outer: Vec<VertexId>,
    directed: bool,
) -> (Vec<VertexId>, Vec<VertexId>) {
    if directed {
        // inner closes with the arc last -> first
        let inner_closes = d.has_arc(*inner.last().unwrap(), inner[0]);
        if inner_closes {
            (inner, outer)
        } else {
            (outer, inner)
        }
    } else {
        (outer, inner)
    }
}

/// In directed mode the working vertex list must run along the dicycle.
fn normalize_direction(d: &Orientation, verts: &[VertexId], directed: bool) -> Result<Vec<VertexId>> {
    if !directed {
        return Ok(verts.to_vec());
    }
    if d.has_arc(verts[0], verts[1]) {
        let ok = (0..verts.len()).all(|t| d.has_arc(verts[t], verts[(t + 1) % verts.len()]));
        if ok {
            return Ok(verts.to_vec());
        }
    }
    let rev: Vec<VertexId> = std::iter::once(verts[0])
        .chain(verts[1..].iter().rev().copied())
        .collect();
    let ok = (0..rev.len()).all(|t| d.has_arc(rev[t], rev[(t + 1) % rev.len()]));
    if ok {
        Ok(rev)
    } else {
        Err(Error::BaseFamilyMismatch)
    }
}

/// Splits the reversal of the cycle `F` at the same-partite pair at positions
/// `i < j` (0-based), using the chord joining `F[i-1]` and `F[j]`. Returns the
/// two pieces in application order: the first is a cycle of `D` as given, the
/// second a cycle of `D` with the first piece already reversed. Reversing them
/// in that order flips exactly the edges of `F`.
pub fn reduction_split(
    m: &MultGraph,
    d: &Orientation,
    f: &OrientedCycle,
    i: usize,
    j: usize,
) -> Result<(OrientedCycle, OrientedCycle)> {
    let verts = f.vertices();
    let k = verts.len();
    assert!(k >= 5 && i < j && j < k, "split positions out of range");
    if verts[i].partite != verts[j].partite {
        return Err(Error::NotSamePartite(i, j));
    }
    let prev = (i + k - 1) % k;
    if !m.adjacent(verts[prev], verts[j]) {
        return Err(Error::ChordNotAdjacent(prev, j));
    }
    let directed = f.is_directed();
    let work = normalize_direction(d, verts, directed)?;
    // positions are preserved by normalization only when it keeps the order;
    // recompute them on the working list
    let pos = |v: VertexId| work.iter().position(|&w| w == v).unwrap();
    let (pi, pj) = (pos(verts[i]), pos(verts[j]));
    let (a, b) = (pi.min(pj), pi.max(pj));
    let (start, cut) = ((a + k - 1) % k, b - a + 1);
    let (inner, outer) = split_pieces(&work, start, cut);
    let (first, second) = order_pieces(d, inner, outer, directed);
    let c1 = d.cycle_on(&first)?;
    let mid = d.flip_edges_of(&first)?;
    let c2 = mid.cycle_on(&second)?;
    Ok((c1, c2))
}

/// Reverses a cycle whose underlying partite graph is a tree, as a script of
/// 4-cycle steps (directed steps when the input is a dicycle). Recursively
/// peels a 4-cycle at a deepest partite set of the tree.
pub fn tree_segment_to_c4(m: &MultGraph, d: &Orientation, f: &OrientedCycle) -> Result<Script> {
    let verts = f.vertices();
    let (upg_edges, upg_verts) = Orientation::underlying_partite_graph(&f.arcs());
    if upg_edges.len() != upg_verts.len() - 1 {
        return Err(Error::SegmentNotTree);
    }
    let directed = f.is_directed();
    let work = normalize_direction(d, verts, directed)?;
    let root = work[0].partite;
    let (steps, end) = tree_rec(m, d, &work, root, directed)?;
    debug_assert_eq!(end, d.flip_edges_of(verts)?);
    Ok(Script::new(steps, d, &end))
}

fn tree_rec(
    m: &MultGraph,
    d: &Orientation,
    verts: &[VertexId],
    root: usize,
    directed: bool,
) -> Result<(Vec<Step>, Orientation)> {
    let k = verts.len();
    if k == 4 {
        let step = emit_step(d, verts, directed)?;
        let next = d.flip_edges_of(verts)?;
        return Ok((vec![step], next));
    }
    // BFS depths in the underlying tree, then the deepest partite set
    let (upg_edges, upg_verts) = {
        let arcs: Vec<_> = (0..k)
            .map(|t| crate::orientation::Arc::new(verts[t], verts[(t + 1) % k]))
            .collect();
        Orientation::underlying_partite_graph(&arcs)
    };
    if upg_edges.len() != upg_verts.len() - 1 {
        return Err(Error::SegmentNotTree);
    }
    let mut depth: BTreeMap<usize, usize> = BTreeMap::from([(root, 0)]);
    let mut queue = VecDeque::from([root]);
    while let Some(p) = queue.pop_front() {
        for &(a, b) in &upg_edges {
            let q = if a == p { b } else if b == p { a } else { continue };
            if !depth.contains_key(&q) {
                depth.insert(q, depth[&p] + 1);
                queue.push_back(q);
            }
        }
    }
    let deepest = *depth
        .iter()
        .max_by_key(|&(&p, &dep)| (dep, std::cmp::Reverse(p)))
        .map(|(p, _)| p)
        .unwrap();
    let x1 = (0..k)
        .find(|&t| verts[t].partite == deepest)
        .expect("deepest partite occurs on the cycle");
    let x = (x1 + k - 1) % k;
    let x2 = (x1 + 1) % k;
    debug_assert_eq!(verts[x].partite, verts[x2].partite);
    let (inner, outer) = split_pieces(verts, (x + k - 1) % k, 3);
    let (first, second) = order_pieces(d, inner, outer, directed);
    let (mut steps, mid) = if first.len() == 4 {
        let s = emit_step(d, &first, directed)?;
        let next = d.flip_edges_of(&first)?;
        (vec![s], next)
    } else {
        tree_rec(m, d, &first, root, directed)?
    };
    let (mut rest, end) = if second.len() == 4 {
        let s = emit_step(&mid, &second, directed)?;
        let next = mid.flip_edges_of(&second)?;
        (vec![s], next)
    } else {
        tree_rec(m, &mid, &second, root, directed)?
    };
    steps.append(&mut rest);
    Ok((steps, end))
}

/// Builds the step for a cycle emitted as-is, rotating directed steps to start
/// at the smallest vertex.
fn emit_step(d: &Orientation, verts: &[VertexId], directed: bool) -> Result<Step> {
    let work = normalize_direction(d, verts, directed)?;
    let k = work.len();
    let min_pos = (0..k).min_by_key(|&t| work[t]).unwrap();
    let rot: Vec<VertexId> = (0..k).map(|t| work[(min_pos + t) % k]).collect();
    let tag = if directed { FamilyTag::Directed } else { FamilyTag::Oriented };
    Ok(Step { vertices: rot, tag })
}

/// Refines the reversal of the cycle `F` into a script over the base family.
/// Phase 1 eliminates same-partite pairs by chord splits at a pair of minimum
/// cyclic distance; phase 2 splits along chords of the projected parent cycle
/// until every emitted cycle is a 4-cycle or projects to a chordless parent
/// cycle. Directed bases require `F` (and keep every step) directed.
pub fn refine_cycle(
    m: &MultGraph,
    d: &Orientation,
    f: &OrientedCycle,
    base: &FamilySpec,
) -> Result<Script> {
    let directed = base.is_all_directed();
    if directed && !f.is_directed() {
        return Err(Error::BaseFamilyMismatch);
    }
    let work = normalize_direction(d, f.vertices(), directed)?;
    let (steps, end) = refine_rec(m, d, &work, base, directed)?;
    debug_assert_eq!(end, d.flip_edges_of(f.vertices())?);
    Ok(Script::new(steps, d, &end))
}

fn refine_rec(
    m: &MultGraph,
    d: &Orientation,
    verts: &[VertexId],
    base: &FamilySpec,
    directed: bool,
) -> Result<(Vec<Step>, Orientation)> {
    let k = verts.len();
    let emit = |d: &Orientation, verts: &[VertexId]| -> Result<(Vec<Step>, Orientation)> {
        if !base.contains_length(verts.len()) {
            return Err(Error::FamilyInfeasible(verts.len()));
        }
        let step = emit_step(d, verts, directed)?;
        let next = d.flip_edges_of(verts)?;
        Ok((vec![step], next))
    };
    if k <= 4 {
        return emit(d, verts);
    }
    // phase 1: same-partite pair of minimum cyclic distance
    let mut best: Option<(usize, usize, usize)> = None; // (dist, start_pos, cut)
    for a in 0..k {
        for b in a + 1..k {
            if verts[a].partite != verts[b].partite {
                continue;
            }
            let fwd = b - a;
            let (dist, head) = if fwd <= k - fwd { (fwd, a) } else { (k - fwd, b) };
            let cand = (dist, head, dist + 1);
            if best.map_or(true, |cur| cand < cur) {
                best = Some(cand);
            }
        }
    }
    if let Some((_, head, cut)) = best {
        let (inner, outer) = split_pieces(verts, (head + k - 1) % k, cut);
        debug_assert!(inner.len() < k && outer.len() < k);
        return recurse_split(m, d, inner, outer, base, directed);
    }
    // no pair: the cycle projects to a parent cycle; eliminate its chords
    let mut chord: Option<(usize, usize, usize, bool)> = None; // (cut len, a, b, inner side)
    for a in 0..k {
        for b in a + 1..k {
            let consecutive = b == a + 1 || (a == 0 && b == k - 1);
            if consecutive || !m.adjacent(verts[a], verts[b]) {
                continue;
            }
            let inner_len = b - a + 1;
            let outer_len = k - (b - a) + 1;
            for (len, side) in [(inner_len, true), (outer_len, false)] {
                let cand = (len, a, b, side);
                if chord.map_or(true, |cur| (cand.0, cand.1, cand.2) < (cur.0, cur.1, cur.2)) {
                    chord = Some(cand);
                }
            }
        }
    }
    let Some((_, a, b, inner_side)) = chord else {
        return emit(d, verts);
    };
    // rotate so the short (chordless) piece is the inner one
    let (inner, outer) = if inner_side {
        split_pieces(verts, (a + k - 1 + 1) % k, b - a) // start at a, cut at b-a
    } else {
        split_pieces(verts, b, k - (b - a))
    };
    recurse_split(m, d, inner, outer, base, directed)
}

fn recurse_split(
    m: &MultGraph,
    d: &Orientation,
    inner: Vec<VertexId>,
    outer: Vec<VertexId>,
    base: &FamilySpec,
    directed: bool,
) -> Result<(Vec<Step>, Orientation)> {
    let (first, second) = order_pieces(d, inner, outer, directed);
    let (mut steps, mid) = refine_rec(m, d, &first, base, directed)?;
    let second = normalize_direction(&mid, &second, directed)?;
    let (mut rest, end) = refine_rec(m, &mid, &second, base, directed)?;
    steps.append(&mut rest);
    Ok((steps, end))
}

/// Distinct partite sets touched by a vertex list.
pub fn partite_support(verts: &[VertexId]) -> BTreeSet<usize> {
    verts.iter().map(|v| v.partite).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::ParentGraph;
    use crate::orientation::Arc;

    fn v(p: usize, c: usize) -> VertexId {
        VertexId::new(p, c)
    }

    /// 2k-dicycle alternating the two sides of K2(k,k), remaining edges
    /// ascending.
    fn long_bipartite_dicycle(k: usize) -> (MultGraph, Orientation, Vec<VertexId>) {
        let m = MultGraph::new(ParentGraph::complete(2), vec![k, k]).unwrap();
        let mut cyc = Vec::new();
        for c in 1..=k {
            cyc.push(v(1, c));
            cyc.push(v(2, c));
        }
        let mut arcs = Vec::new();
        let mut on_cycle = BTreeSet::new();
        for t in 0..2 * k {
            let (a, b) = (cyc[t], cyc[(t + 1) % (2 * k)]);
            arcs.push(Arc::new(a, b));
            on_cycle.insert(if a < b { (a, b) } else { (b, a) });
        }
        for &(a, b) in m.edges() {
            if !on_cycle.contains(&(a, b)) {
                arcs.push(Arc::new(a, b));
            }
        }
        let d = Orientation::from_arcs(&m, arcs).unwrap();
        (m, d, cyc)
    }

    #[test]
    fn reduction_split_six_dicycle() {
        let (m, d, cyc) = long_bipartite_dicycle(3);
        // cyc = x1 y1 x2 y2 x3 y3; split at (y1, y2) = positions 1, 3
        let f = d.cycle_on(&cyc).unwrap();
        let (c1, c2) = reduction_split(&m, &d, &f, 1, 3).unwrap();
        assert_eq!(c1.len() + c2.len(), 8);
        let sets: BTreeSet<BTreeSet<VertexId>> = [&c1, &c2]
            .iter()
            .map(|c| c.vertices().iter().copied().collect())
            .collect();
        let expect: BTreeSet<BTreeSet<VertexId>> = [
            BTreeSet::from([v(1, 1), v(2, 2), v(1, 3), v(2, 3)]),
            BTreeSet::from([v(1, 1), v(2, 1), v(1, 2), v(2, 2)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(sets, expect);
        // both pieces directed, and replaying them reverses the 6-cycle
        assert!(c1.is_directed() && c2.is_directed());
        let mid = d.reverse_cycle(&c1).unwrap();
        let end = mid.reverse_cycle(&c2).unwrap();
        assert_eq!(end, d.flip_edges_of(&cyc).unwrap());
    }

    #[test]
    fn reduction_split_rejects_cross_partite_pair() {
        let (m, d, cyc) = long_bipartite_dicycle(3);
        let f = d.cycle_on(&cyc).unwrap();
        assert!(matches!(
            reduction_split(&m, &d, &f, 1, 2),
            Err(Error::NotSamePartite(1, 2))
        ));
    }

    #[test]
    fn tree_cycle_needs_k_minus_1_c4s() {
        for k in 2..=5 {
            let (m, d, cyc) = long_bipartite_dicycle(k);
            let f = d.cycle_on(&cyc).unwrap();
            let script = tree_segment_to_c4(&m, &d, &f).unwrap();
            assert_eq!(script.len(), k - 1, "k = {k}");
            assert!(script.steps.iter().all(|s| s.len() == 4 && s.tag == FamilyTag::Directed));
            assert_eq!(script.apply(&d).unwrap(), d.flip_edges_of(&cyc).unwrap());
        }
    }

    #[test]
    fn tree_cycle_oriented_mode() {
        // flip one arc of the 6-dicycle so the hexagon is merely oriented
        let (m, d, cyc) = long_bipartite_dicycle(3);
        let arcs: Vec<Arc> = d
            .arcs()
            .map(|a| {
                if (a.tail, a.head) == (cyc[0], cyc[1]) {
                    a.reversed()
                } else {
                    a
                }
            })
            .collect();
        let d2 = Orientation::from_arcs(&m, arcs).unwrap();
        let hex = d2.cycle_on(&cyc).unwrap();
        assert!(!hex.is_directed());
        let script = tree_segment_to_c4(&m, &d2, &hex).unwrap();
        assert_eq!(script.len(), 2);
        assert!(script.steps.iter().all(|s| s.tag == FamilyTag::Oriented));
        assert_eq!(script.apply(&d2).unwrap(), d2.flip_edges_of(&cyc).unwrap());
    }

    #[test]
    fn refine_chordless_is_singleton() {
        let m = MultGraph::new(ParentGraph::complete(3), vec![1, 1, 1]).unwrap();
        let d = Orientation::from_arcs(
            &m,
            [
                Arc::new(v(1, 1), v(2, 1)),
                Arc::new(v(2, 1), v(3, 1)),
                Arc::new(v(3, 1), v(1, 1)),
            ],
        )
        .unwrap();
        let f = d.cycle_on(&[v(1, 1), v(2, 1), v(3, 1)]).unwrap();
        let script = refine_cycle(&m, &d, &f, &FamilySpec::directed([3, 4])).unwrap();
        assert_eq!(script.len(), 1);
        assert_eq!(script.steps[0].len(), 3);
    }

    #[test]
    fn refine_five_dicycle_k3_221() {
        let m = MultGraph::new(ParentGraph::complete(3), vec![2, 2, 1]).unwrap();
        let cyc = [v(1, 1), v(2, 1), v(1, 2), v(2, 2), v(3, 1)];
        let mut arcs = vec![
            Arc::new(v(1, 1), v(2, 1)),
            Arc::new(v(2, 1), v(1, 2)),
            Arc::new(v(1, 2), v(2, 2)),
            Arc::new(v(2, 2), v(3, 1)),
            Arc::new(v(3, 1), v(1, 1)),
        ];
        arcs.extend([
            Arc::new(v(1, 1), v(2, 2)),
            Arc::new(v(1, 2), v(3, 1)),
            Arc::new(v(2, 1), v(3, 1)),
        ]);
        let d = Orientation::from_arcs(&m, arcs).unwrap();
        let f = d.cycle_on(&cyc).unwrap();
        assert!(f.is_directed());
        let script = refine_cycle(&m, &d, &f, &FamilySpec::directed([3, 4])).unwrap();
        assert!(script.steps.iter().all(|s| s.len() == 3 || s.len() == 4));
        assert!(script.steps.iter().all(|s| s.tag == FamilyTag::Directed));
        assert_eq!(script.apply(&d).unwrap(), d.flip_edges_of(&cyc).unwrap());
    }

    #[test]
    fn refine_six_dicycle_with_c4_base() {
        let (m, d, cyc) = long_bipartite_dicycle(3);
        let f = d.cycle_on(&cyc).unwrap();
        let script = refine_cycle(&m, &d, &f, &FamilySpec::directed([4])).unwrap();
        assert_eq!(script.len(), 2);
        assert!(script.steps.iter().all(|s| s.len() == 4));
        assert_eq!(script.apply(&d).unwrap(), d.flip_edges_of(&cyc).unwrap());
    }

    #[test]
    fn refine_rejects_undersized_base() {
        let (m, d, cyc) = long_bipartite_dicycle(3);
        let f = d.cycle_on(&cyc).unwrap();
        // base without length 4 cannot absorb the leaves of the recursion
        assert!(matches!(
            refine_cycle(&m, &d, &f, &FamilySpec::directed([6])),
            Err(Error::FamilyInfeasible(4))
        ));
    }

    #[test]
    fn refine_scores_conserved_at_each_step() {
        let (m, d, cyc) = long_bipartite_dicycle(4);
        let f = d.cycle_on(&cyc).unwrap();
        let script = refine_cycle(&m, &d, &f, &FamilySpec::directed([4])).unwrap();
        let mut cur = d.clone();
        for step in &script.steps {
            cur = step.apply(&cur).unwrap();
            assert_eq!(cur.scores(&m), d.scores(&m));
        }
    }

    #[test]
    fn chord_elimination_on_wheel_like_parent() {
        // parent: 5-cycle plus chord {1,3}: chordless lengths {3, 4}
        let g = ParentGraph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3)]).unwrap();
        let m = MultGraph::new(g, vec![1, 1, 1, 1, 1]).unwrap();
        let cyc = [v(1, 1), v(2, 1), v(3, 1), v(4, 1), v(5, 1)];
        let mut arcs: Vec<Arc> = (0..5)
            .map(|t| Arc::new(cyc[t], cyc[(t + 1) % 5]))
            .collect();
        arcs.push(Arc::new(v(1, 1), v(3, 1)));
        let d = Orientation::from_arcs(&m, arcs).unwrap();
        let f = d.cycle_on(&cyc).unwrap();
        let base = FamilySpec::directed_base(m.parent());
        assert_eq!(base.lengths(), BTreeSet::from([3, 4]));
        let script = refine_cycle(&m, &d, &f, &base).unwrap();
        assert_eq!(script.apply(&d).unwrap(), d.flip_edges_of(&cyc).unwrap());
        assert!(script.steps.iter().all(|s| s.len() <= 4));
    }
}
