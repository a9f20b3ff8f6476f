//! Orientations of a multiplication: arcs, scores, converse, cycle reversal,
//! partite projections and family-copy search.

use crate::graph_core::{MultGraph, VertexId};
use crate::{Error, Result};
use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};

/// A directed edge of an orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        Arc { tail, head }
    }

    pub fn reversed(self) -> Self {
        Arc { tail: self.head, head: self.tail }
    }

    /// The underlying edge, endpoints in ascending order.
    pub fn edge(self) -> (VertexId, VertexId) {
        if self.tail < self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.tail, self.head)
    }
}

/// Sorted non-decreasing outdegree multiset of an orientation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ScoreList(pub Vec<usize>);

impl fmt::Display for ScoreList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// One direction per edge of a multiplication. Equality is exact arc-set
/// equality; isomorphism testing lives in the oracle module.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orientation {
    // edge (u, v) with u < v maps to true iff the arc is u -> v
    dirs: BTreeMap<(VertexId, VertexId), bool>,
}

impl Orientation {
    /// Builds an orientation from an arc list; every edge of `m` must appear
    /// exactly once.
    pub fn from_arcs(m: &MultGraph, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut dirs = BTreeMap::new();
        let mut count = 0;
        for arc in arcs {
            if !m.contains(arc.tail) {
                return Err(Error::NoSuchVertex(arc.tail));
            }
            if !m.contains(arc.head) {
                return Err(Error::NoSuchVertex(arc.head));
            }
            if !m.adjacent(arc.tail, arc.head) {
                return Err(Error::NotAdjacent(arc.tail, arc.head));
            }
            let e = arc.edge();
            if dirs.insert(e, arc.tail == e.0).is_some() {
                return Err(Error::ArcCount { want: m.edge_count(), got: usize::MAX });
            }
            count += 1;
        }
        if count != m.edge_count() {
            return Err(Error::ArcCount { want: m.edge_count(), got: count });
        }
        Ok(Orientation { dirs })
    }

    /// Orientation with every arc from the smaller endpoint to the larger.
    pub fn ascending(m: &MultGraph) -> Self {
        Orientation { dirs: m.edges().iter().map(|&e| (e, true)).collect() }
    }

    /// Orientation from an edge-indexed bitmask (bit set: arc from larger to
    /// smaller endpoint). Edges in `MultGraph::edges` order.
    pub fn from_bits(m: &MultGraph, bits: u64) -> Self {
        let dirs = m
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, bits >> i & 1 == 0))
            .collect();
        Orientation { dirs }
    }

    /// Inverse of `from_bits`.
    pub fn to_bits(&self, m: &MultGraph) -> u64 {
        let mut bits = 0u64;
        for (i, e) in m.edges().iter().enumerate() {
            if !self.dirs[e] {
                bits |= 1 << i;
            }
        }
        bits
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.dirs.iter().map(|(&(u, v), &fwd)| {
            if fwd {
                Arc::new(u, v)
            } else {
                Arc::new(v, u)
            }
        })
    }

    pub fn arc_count(&self) -> usize {
        self.dirs.len()
    }

    pub fn has_arc(&self, tail: VertexId, head: VertexId) -> bool {
        let e = if tail < head { (tail, head) } else { (head, tail) };
        match self.dirs.get(&e) {
            Some(&fwd) => fwd == (tail == e.0),
            None => false,
        }
    }

    /// The arc on the edge `{u, v}`, as currently oriented.
    pub fn arc_between(&self, u: VertexId, v: VertexId) -> Result<Arc> {
        if self.has_arc(u, v) {
            Ok(Arc::new(u, v))
        } else if self.has_arc(v, u) {
            Ok(Arc::new(v, u))
        } else {
            Err(Error::NotAdjacent(u, v))
        }
    }

    pub fn outdegree(&self, v: VertexId) -> usize {
        self.arcs().filter(|a| a.tail == v).count()
    }

    pub fn indegree(&self, v: VertexId) -> usize {
        self.arcs().filter(|a| a.head == v).count()
    }

    /// Sorted outdegree multiset.
    pub fn scores(&self, m: &MultGraph) -> ScoreList {
        let mut out: BTreeMap<VertexId, usize> =
            m.vertices().iter().map(|&v| (v, 0)).collect();
        for a in self.arcs() {
            *out.get_mut(&a.tail).unwrap() += 1;
        }
        let mut s: Vec<usize> = out.into_values().collect();
        s.sort_unstable();
        ScoreList(s)
    }

    /// Every arc reversed.
    pub fn converse(&self) -> Self {
        Orientation { dirs: self.dirs.iter().map(|(&e, &f)| (e, !f)).collect() }
    }

    /// Reverses the arcs of the cycle `c`. Errors if some arc of `c` is not
    /// present. Returns a new orientation differing from `self` exactly on the
    /// k edges of `c`.
    pub fn reverse_cycle(&self, c: &OrientedCycle) -> Result<Self> {
        for a in c.arcs() {
            if !self.has_arc(a.tail, a.head) {
                return Err(Error::ArcNotPresent(a.tail, a.head));
            }
        }
        let mut dirs = self.dirs.clone();
        for a in c.arcs() {
            let e = a.edge();
            let f = dirs.get_mut(&e).unwrap();
            *f = !*f;
        }
        Ok(Orientation { dirs })
    }

    /// Flips the k edges of the cycle regardless of their current directions.
    /// Used by script replay, where a step is defined by its underlying edges.
    pub fn flip_edges_of(&self, vertices: &[VertexId]) -> Result<Self> {
        let mut dirs = self.dirs.clone();
        let k = vertices.len();
        for t in 0..k {
            let (u, v) = (vertices[t], vertices[(t + 1) % k]);
            let e = if u < v { (u, v) } else { (v, u) };
            match dirs.get_mut(&e) {
                Some(f) => *f = !*f,
                None => return Err(Error::NotAdjacent(u, v)),
            }
        }
        Ok(Orientation { dirs })
    }

    /// The cycle on `vertices` with arcs read from this orientation.
    pub fn cycle_on(&self, vertices: &[VertexId]) -> Result<OrientedCycle> {
        let k = vertices.len();
        let mut forward = Vec::with_capacity(k);
        for t in 0..k {
            let (u, v) = (vertices[t], vertices[(t + 1) % k]);
            if self.has_arc(u, v) {
                forward.push(true);
            } else if self.has_arc(v, u) {
                forward.push(false);
            } else {
                return Err(Error::NotAdjacent(u, v));
            }
        }
        OrientedCycle::new(vertices.to_vec(), forward)
    }

    /// Parent edges touched by an arc subset (the underlying partite graph),
    /// plus the touched parent vertices.
    pub fn underlying_partite_graph(
        arcs: &[Arc],
    ) -> (BTreeSet<(usize, usize)>, BTreeSet<usize>) {
        let mut edges = BTreeSet::new();
        let mut verts = BTreeSet::new();
        for a in arcs {
            let (i, j) = (a.tail.partite, a.head.partite);
            edges.insert((i.min(j), i.max(j)));
            verts.insert(i);
            verts.insert(j);
        }
        (edges, verts)
    }

    /// Stable fingerprint of the arc set.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        for (e, f) in &self.dirs {
            (e.0.partite, e.0.copy, e.1.partite, e.1.copy, f).hash(&mut h);
        }
        h.finish()
    }
}

/// A cycle in the multiplication with the arcs of some orientation on it.
/// Stored in canonical form: minimal vertex first, lexicographically smaller
/// traversal direction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedCycle {
    vertices: Vec<VertexId>,
    // forward[t]: the arc on edge {v_t, v_{t+1}} is v_t -> v_{t+1}
    forward: Vec<bool>,
}

impl OrientedCycle {
    pub fn new(vertices: Vec<VertexId>, forward: Vec<bool>) -> Result<Self> {
        assert!(vertices.len() >= 3 && vertices.len() == forward.len());
        let set: BTreeSet<_> = vertices.iter().collect();
        assert_eq!(set.len(), vertices.len(), "cycle vertices must be distinct");
        let mut c = OrientedCycle { vertices, forward };
        c.canonicalize();
        Ok(c)
    }

    fn canonicalize(&mut self) {
        let k = self.vertices.len();
        let min_pos = (0..k).min_by_key(|&i| self.vertices[i]).unwrap();
        let rot = |r: usize| -> (Vec<VertexId>, Vec<bool>) {
            let vs: Vec<_> = (0..k).map(|t| self.vertices[(r + t) % k]).collect();
            let fs: Vec<_> = (0..k).map(|t| self.forward[(r + t) % k]).collect();
            (vs, fs)
        };
        let (fwd_v, fwd_f) = rot(min_pos);
        // reversed traversal starting at the same minimal vertex
        let rev_v: Vec<_> = std::iter::once(fwd_v[0])
            .chain(fwd_v[1..].iter().rev().copied())
            .collect();
        let rev_f: Vec<_> = (0..k)
            .map(|t| {
                // edge between rev_v[t] and rev_v[t+1] corresponds to the
                // forward edge (k-1-t) of fwd; direction flips with traversal
                !fwd_f[(k - 1 - t) % k]
            })
            .collect();
        if rev_v < fwd_v {
            self.vertices = rev_v;
            self.forward = rev_f;
        } else {
            self.vertices = fwd_v;
            self.forward = fwd_f;
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn arcs(&self) -> Vec<Arc> {
        let k = self.vertices.len();
        (0..k)
            .map(|t| {
                let (u, v) = (self.vertices[t], self.vertices[(t + 1) % k]);
                if self.forward[t] {
                    Arc::new(u, v)
                } else {
                    Arc::new(v, u)
                }
            })
            .collect()
    }

    /// True iff every arc runs along the stored cyclic order or every arc runs
    /// against it, i.e. the cycle is a dicycle.
    pub fn is_directed(&self) -> bool {
        self.forward.iter().all(|&f| f) || self.forward.iter().all(|&f| !f)
    }

    /// A 3-cycle that is not a dicycle is the transitive tournament TT3.
    pub fn is_tt3(&self) -> bool {
        self.len() == 3 && !self.is_directed()
    }

    /// Number of arcs running against the stored cyclic order.
    pub fn backward_count(&self) -> usize {
        self.forward.iter().filter(|&&f| !f).count()
    }

    /// The TT3 triple (source, middle, sink), if this is a TT3.
    pub fn tt3_roles(&self) -> Option<(VertexId, VertexId, VertexId)> {
        if !self.is_tt3() {
            return None;
        }
        let arcs = self.arcs();
        for &v in &self.vertices {
            let out = arcs.iter().filter(|a| a.tail == v).count();
            if out == 2 {
                let sink = self
                    .vertices
                    .iter()
                    .copied()
                    .find(|&w| arcs.iter().filter(|a| a.tail == w).count() == 0)
                    .unwrap();
                let middle = self
                    .vertices
                    .iter()
                    .copied()
                    .find(|&w| w != v && w != sink)
                    .unwrap();
                return Some((v, middle, sink));
            }
        }
        None
    }

    /// Builds the TT3 cycle from a (source, middle, sink) triple.
    pub fn from_tt3(source: VertexId, middle: VertexId, sink: VertexId) -> Result<Self> {
        // arcs: source->middle, middle->sink, source->sink
        OrientedCycle::new(vec![source, middle, sink], vec![true, true, false])
    }

    /// Same underlying cycle with every arc reversed.
    pub fn converse(&self) -> Self {
        OrientedCycle::new(self.vertices.clone(), self.forward.iter().map(|f| !f).collect())
            .expect("converse of a valid cycle")
    }
}

impl fmt::Display for OrientedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", vs.join(" "))
    }
}

/// Which arc patterns of a k-cycle a family member accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyKind {
    /// The k-dicycle only.
    Directed,
    /// Any orientation of a k-cycle.
    AnyOrientation,
    /// The transitive tournament of order 3.
    Tt3,
}

/// A self-converse collection of reversal patterns: lengths paired with kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    members: BTreeSet<(usize, FamilyKind)>,
}

impl FamilySpec {
    pub fn new(members: impl IntoIterator<Item = (usize, FamilyKind)>) -> Self {
        FamilySpec { members: members.into_iter().collect() }
    }

    pub fn directed(lengths: impl IntoIterator<Item = usize>) -> Self {
        Self::new(lengths.into_iter().map(|k| (k, FamilyKind::Directed)))
    }

    pub fn any_orientation(lengths: impl IntoIterator<Item = usize>) -> Self {
        Self::new(lengths.into_iter().map(|k| (k, FamilyKind::AnyOrientation)))
    }

    pub fn tt3() -> Self {
        Self::new([(3, FamilyKind::Tt3)])
    }

    /// `{C_i | i in {4} ∪ L_G}` for the given parent.
    pub fn directed_base(parent: &crate::graph_core::ParentGraph) -> Self {
        let sets = crate::graph_core::cycle_length_sets(parent);
        let mut lengths: BTreeSet<usize> = sets.chordless_lengths;
        lengths.insert(4);
        Self::directed(lengths)
    }

    /// The oriented counterpart of `directed_base`.
    pub fn oriented_base(parent: &crate::graph_core::ParentGraph) -> Self {
        let sets = crate::graph_core::cycle_length_sets(parent);
        let mut lengths: BTreeSet<usize> = sets.chordless_lengths;
        lengths.insert(4);
        Self::any_orientation(lengths)
    }

    pub fn members(&self) -> impl Iterator<Item = (usize, FamilyKind)> + '_ {
        self.members.iter().copied()
    }

    pub fn lengths(&self) -> BTreeSet<usize> {
        self.members.iter().map(|&(k, _)| k).collect()
    }

    pub fn contains_length(&self, k: usize) -> bool {
        self.members.iter().any(|&(l, _)| l == k)
    }

    /// Whether every member is a dicycle pattern.
    pub fn is_all_directed(&self) -> bool {
        self.members.iter().all(|&(_, kind)| kind == FamilyKind::Directed)
    }

    /// Whether the cycle, as oriented, is a copy of some family member.
    pub fn matches(&self, c: &OrientedCycle) -> bool {
        self.members.iter().any(|&(k, kind)| {
            k == c.len()
                && match kind {
                    FamilyKind::Directed => c.is_directed(),
                    FamilyKind::AnyOrientation => true,
                    FamilyKind::Tt3 => c.is_tt3(),
                }
        })
    }
}

/// All cycles of length `k` in the multiplication, canonical vertex lists.
pub fn enumerate_mult_cycles(m: &MultGraph, k: usize) -> Vec<Vec<VertexId>> {
    let verts = m.vertices();
    let mut out = Vec::new();
    for (s, &start) in verts.iter().enumerate() {
        let mut path = vec![start];
        let mut used: BTreeSet<VertexId> = BTreeSet::from([start]);
        extend_mult_cycle(m, verts, s, k, &mut path, &mut used, &mut out);
    }
    out
}

fn extend_mult_cycle(
    m: &MultGraph,
    verts: &[VertexId],
    start_idx: usize,
    k: usize,
    path: &mut Vec<VertexId>,
    used: &mut BTreeSet<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    let start = verts[start_idx];
    let last = *path.last().unwrap();
    if path.len() == k {
        if m.adjacent(last, start) && path[1] < last {
            out.push(path.clone());
        }
        return;
    }
    for &next in verts.iter().skip(start_idx + 1) {
        if !used.contains(&next) && m.adjacent(last, next) {
            path.push(next);
            used.insert(next);
            extend_mult_cycle(m, verts, start_idx, k, path, used, out);
            path.pop();
            used.remove(&next);
        }
    }
}

/// All cycles of `d` matching the family, in deterministic order.
pub fn find_family_copies(
    m: &MultGraph,
    d: &Orientation,
    family: &FamilySpec,
) -> Vec<OrientedCycle> {
    let mut out = Vec::new();
    for k in family.lengths() {
        for verts in enumerate_mult_cycles(m, k) {
            let c = d.cycle_on(&verts).expect("cycle edges exist");
            if family.matches(&c) {
                out.push(c);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Some cycle of `d` matching the family, or none. Deterministic under the
/// global vertex order.
pub fn find_family_copy(
    m: &MultGraph,
    d: &Orientation,
    family: &FamilySpec,
) -> Option<OrientedCycle> {
    find_family_copies(m, d, family).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::ParentGraph;

    fn v(p: usize, c: usize) -> VertexId {
        VertexId::new(p, c)
    }

    /// A K3(2,1,2) fixture: two same-score orientations, the first C4-free.
    pub(crate) fn c4free_fixture() -> (MultGraph, Orientation, Orientation) {
        let m = MultGraph::new(ParentGraph::complete(3), vec![2, 1, 2]).unwrap();
        let d = Orientation::from_arcs(
            &m,
            [
                Arc::new(v(1, 2), v(2, 1)),
                Arc::new(v(1, 1), v(2, 1)),
                Arc::new(v(2, 1), v(3, 1)),
                Arc::new(v(2, 1), v(3, 2)),
                Arc::new(v(1, 1), v(3, 1)),
                Arc::new(v(1, 2), v(3, 1)),
                Arc::new(v(3, 2), v(1, 1)),
                Arc::new(v(3, 2), v(1, 2)),
            ],
        )
        .unwrap();
        let d2 = Orientation::from_arcs(
            &m,
            [
                Arc::new(v(2, 1), v(1, 1)),
                Arc::new(v(1, 2), v(2, 1)),
                Arc::new(v(3, 2), v(2, 1)),
                Arc::new(v(2, 1), v(3, 1)),
                Arc::new(v(3, 2), v(1, 2)),
                Arc::new(v(1, 2), v(3, 1)),
                Arc::new(v(1, 1), v(3, 1)),
                Arc::new(v(1, 1), v(3, 2)),
            ],
        )
        .unwrap();
        (m, d, d2)
    }

    #[test]
    fn c4free_fixture_scores() {
        let (m, d, d2) = c4free_fixture();
        assert_eq!(d.scores(&m).0, vec![0, 2, 2, 2, 2]);
        assert_eq!(d2.scores(&m).0, vec![0, 2, 2, 2, 2]);
    }

    #[test]
    fn single_edge_scores() {
        let m = MultGraph::new(ParentGraph::complete(2), vec![1, 1]).unwrap();
        let d = Orientation::from_arcs(&m, [Arc::new(v(1, 1), v(2, 1))]).unwrap();
        assert_eq!(d.scores(&m).0, vec![0, 1]);
    }

    #[test]
    fn converse_involution_and_tt3() {
        let m = MultGraph::new(ParentGraph::complete(3), vec![1, 1, 1]).unwrap();
        let tt3 = Orientation::from_arcs(
            &m,
            [
                Arc::new(v(1, 1), v(2, 1)),
                Arc::new(v(2, 1), v(3, 1)),
                Arc::new(v(1, 1), v(3, 1)),
            ],
        )
        .unwrap();
        assert_eq!(tt3.converse().converse(), tt3);
        // converse of TT3 swaps source and sink
        assert_eq!(tt3.converse().outdegree(v(3, 1)), 2);
        assert_eq!(tt3.converse().outdegree(v(1, 1)), 0);
        let c = tt3.cycle_on(&[v(1, 1), v(2, 1), v(3, 1)]).unwrap();
        assert!(c.is_tt3());
        assert_eq!(c.tt3_roles(), Some((v(1, 1), v(2, 1), v(3, 1))));
    }

    #[test]
    fn reverse_cycle_scores() {
        // 4-dicycle in K2(2,2): scores preserved
        let m = MultGraph::new(ParentGraph::complete(2), vec![2, 2]).unwrap();
        let d = Orientation::from_arcs(
            &m,
            [
                Arc::new(v(1, 1), v(2, 1)),
                Arc::new(v(2, 1), v(1, 2)),
                Arc::new(v(1, 2), v(2, 2)),
                Arc::new(v(2, 2), v(1, 1)),
            ],
        )
        .unwrap();
        let c = d.cycle_on(&[v(1, 1), v(2, 1), v(1, 2), v(2, 2)]).unwrap();
        assert!(c.is_directed());
        let d1 = d.reverse_cycle(&c).unwrap();
        assert_eq!(d.scores(&m), d1.scores(&m));
        // involution via converse arcs
        let c_rev = d1.cycle_on(c.vertices()).unwrap();
        assert_eq!(d1.reverse_cycle(&c_rev).unwrap(), d);

        // TT3 reversal changes scores by -2, 0, +2
        let m3 = MultGraph::new(ParentGraph::complete(3), vec![1, 1, 1]).unwrap();
        let t = Orientation::from_arcs(
            &m3,
            [
                Arc::new(v(1, 1), v(2, 1)),
                Arc::new(v(2, 1), v(3, 1)),
                Arc::new(v(1, 1), v(3, 1)),
            ],
        )
        .unwrap();
        let c = t.cycle_on(&[v(1, 1), v(2, 1), v(3, 1)]).unwrap();
        let t1 = t.reverse_cycle(&c).unwrap();
        assert_eq!(t.outdegree(v(1, 1)) as i64 - t1.outdegree(v(1, 1)) as i64, 2);
        assert_eq!(t.outdegree(v(2, 1)), t1.outdegree(v(2, 1)));
        assert_eq!(t1.outdegree(v(3, 1)) as i64 - t.outdegree(v(3, 1)) as i64, 2);
    }

    #[test]
    fn upg_projections() {
        let (_, d, _) = c4free_fixture();
        let arcs = vec![
            d.arc_between(v(1, 1), v(2, 1)).unwrap(),
            d.arc_between(v(2, 1), v(3, 2)).unwrap(),
            d.arc_between(v(3, 2), v(1, 1)).unwrap(),
        ];
        let (edges, verts) = Orientation::underlying_partite_graph(&arcs);
        assert_eq!(edges, std::collections::BTreeSet::from([(1, 2), (1, 3), (2, 3)]));
        assert_eq!(verts, std::collections::BTreeSet::from([1, 2, 3]));

        let m = MultGraph::new(ParentGraph::complete(2), vec![3, 3]).unwrap();
        let hex = [v(1, 1), v(2, 1), v(1, 2), v(2, 2), v(1, 3), v(2, 3)];
        let d = Orientation::ascending(&m);
        let c = d.cycle_on(&hex).unwrap();
        let (edges, _) = Orientation::underlying_partite_graph(&c.arcs());
        assert_eq!(edges, std::collections::BTreeSet::from([(1, 2)]));
    }

    #[test]
    fn family_copy_search() {
        let (m, d, _) = c4free_fixture();
        // the first fixture orientation is C4-free
        assert!(find_family_copy(&m, &d, &FamilySpec::directed([4])).is_none());
        // 3-dicycle in K3(1,1,1)
        let m3 = MultGraph::new(ParentGraph::complete(3), vec![1, 1, 1]).unwrap();
        let c3 = Orientation::from_arcs(
            &m3,
            [
                Arc::new(v(1, 1), v(2, 1)),
                Arc::new(v(2, 1), v(3, 1)),
                Arc::new(v(3, 1), v(1, 1)),
            ],
        )
        .unwrap();
        let found = find_family_copy(&m3, &c3, &FamilySpec::directed([3])).unwrap();
        assert!(found.is_directed());
        assert_eq!(found.len(), 3);
    }

    #[test]
    fn canonical_form_is_rotation_invariant() {
        let m = MultGraph::new(ParentGraph::complete(2), vec![2, 2]).unwrap();
        let d = Orientation::ascending(&m);
        let a = d.cycle_on(&[v(1, 1), v(2, 1), v(1, 2), v(2, 2)]).unwrap();
        let b = d.cycle_on(&[v(1, 2), v(2, 2), v(1, 1), v(2, 1)]).unwrap();
        let c = d.cycle_on(&[v(2, 2), v(1, 2), v(2, 1), v(1, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}
