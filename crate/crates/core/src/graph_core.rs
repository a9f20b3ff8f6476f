//! Undirected layer: parent graphs, vertex-multiplications, structural
//! classification, cycle-length sets and automorphism search.

use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// Connected simple graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParentGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl ParentGraph {
    /// Builds a parent graph, validating connectivity and edge sanity.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b || a < 1 || b < 1 || a > n || b > n {
                return Err(Error::BadParentEdge(a, b, n));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let g = ParentGraph { n, edges: set };
        if !g.is_connected() {
            return Err(Error::DisconnectedParent);
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        ParentGraph::new(n, edges).expect("complete graph is connected")
    }

    /// Path on `n` vertices, `1-2-...-n`.
    pub fn path(n: usize) -> Self {
        ParentGraph::new(n, (1..n).map(|i| (i, i + 1))).expect("path is connected")
    }

    /// Cycle on `n` vertices.
    pub fn cycle(n: usize) -> Self {
        let edges = (1..n).map(|i| (i, i + 1)).chain(std::iter::once((n, 1)));
        ParentGraph::new(n, edges).expect("cycle is connected")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1usize]);
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    /// Connectivity of an edge-subset restricted view, used for bridge finding.
    fn connected_without(&self, skip: (usize, usize)) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1usize]);
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                let e = (v.min(u), v.max(u));
                if e == skip || seen[u] {
                    continue;
                }
                seen[u] = true;
                count += 1;
                queue.push_back(u);
            }
        }
        count == self.n
    }
}

/// One copy of a parent vertex: `partite` is the parent index, `copy` the
/// index within its partite set (both 1-based). Total order is (partite, copy)
/// and every deterministic tie-break in the crate uses it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub partite: usize,
    pub copy: usize,
}

impl VertexId {
    pub fn new(partite: usize, copy: usize) -> Self {
        VertexId { partite, copy }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.partite, self.copy)
    }
}

/// The vertex-multiplication `G(p1,...,pn)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultGraph {
    parent: ParentGraph,
    p: Vec<usize>,
    vertices: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

impl MultGraph {
    pub fn new(parent: ParentGraph, p: Vec<usize>) -> Result<Self> {
        if p.len() != parent.n() {
            return Err(Error::MultiplicityLength { want: parent.n(), got: p.len() });
        }
        if let Some(i) = p.iter().position(|&m| m == 0) {
            return Err(Error::NonPositiveMultiplicity { vertex: i + 1 });
        }
        let mut vertices = Vec::new();
        for (i, &m) in p.iter().enumerate() {
            for c in 1..=m {
                vertices.push(VertexId::new(i + 1, c));
            }
        }
        let mut edges = Vec::new();
        for &u in &vertices {
            for &v in &vertices {
                if u < v && parent.has_edge(u.partite, v.partite) {
                    edges.push((u, v));
                }
            }
        }
        edges.sort();
        Ok(MultGraph { parent, p, vertices, edges })
    }

    pub fn parent(&self) -> &ParentGraph {
        &self.parent
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.p
    }

    /// `N`, the number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Vertices in the global (partite, copy) order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Edges as normalized pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.partite >= 1
            && v.partite <= self.p.len()
            && v.copy >= 1
            && v.copy <= self.p[v.partite - 1]
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        u.partite != v.partite && self.parent.has_edge(u.partite, v.partite)
    }

    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.vertices.iter().copied().filter(|&u| self.adjacent(u, v)).collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.parent
            .neighbors(v.partite)
            .iter()
            .map(|&j| self.p[j - 1])
            .sum()
    }
}

/// Structural flags of a parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub is_tree: bool,
    pub is_bipartite: bool,
    pub is_chordal: bool,
    pub bridges: BTreeSet<(usize, usize)>,
}

/// Classifies a parent graph: tree / bipartite / chordal flags and bridges.
pub fn classify(parent: &ParentGraph) -> Classification {
    let n = parent.n();
    let is_tree = parent.edge_count() == n - 1;
    // 2-coloring by BFS
    let mut color = vec![usize::MAX; n + 1];
    let mut is_bipartite = true;
    color[1] = 0;
    let mut queue = VecDeque::from([1usize]);
    while let Some(v) = queue.pop_front() {
        for u in parent.neighbors(v) {
            if color[u] == usize::MAX {
                color[u] = 1 - color[v];
                queue.push_back(u);
            } else if color[u] == color[v] {
                is_bipartite = false;
            }
        }
    }
    let sets = cycle_length_sets(parent);
    let is_chordal = sets.chordless_lengths.iter().all(|&l| l == 3);
    let bridges = parent
        .edges()
        .filter(|&e| !parent.connected_without(e))
        .collect();
    Classification { is_tree, is_bipartite, is_chordal, bridges }
}

/// Bipartition `(X, Y)` of a bipartite parent, `1 ∈ X`.
pub fn bipartition(parent: &ParentGraph) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
    let n = parent.n();
    let mut color = vec![usize::MAX; n + 1];
    color[1] = 0;
    let mut queue = VecDeque::from([1usize]);
    while let Some(v) = queue.pop_front() {
        for u in parent.neighbors(v) {
            if color[u] == usize::MAX {
                color[u] = 1 - color[v];
                queue.push_back(u);
            } else if color[u] == color[v] {
                return None;
            }
        }
    }
    let x = (1..=n).filter(|&v| color[v] == 0).collect();
    let y = (1..=n).filter(|&v| color[v] == 1).collect();
    Some((x, y))
}

/// Cycle lengths of the parent graph: all lengths, chordless lengths, and the
/// chordless cycles themselves (vertex sequences, canonical start).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleLengthSets {
    pub all_lengths: BTreeSet<usize>,
    pub chordless_lengths: BTreeSet<usize>,
    pub chordless_cycles: Vec<Vec<usize>>,
}

/// Enumerates cycles of the parent by DFS path extension with an
/// earliest-vertex canonical start. Intended for parents up to ~12 vertices.
pub fn cycle_length_sets(parent: &ParentGraph) -> CycleLengthSets {
    let mut all_lengths = BTreeSet::new();
    let mut chordless_lengths = BTreeSet::new();
    let mut chordless_cycles = Vec::new();
    for cycle in enumerate_cycles(parent) {
        all_lengths.insert(cycle.len());
        if is_chordless(parent, &cycle) {
            chordless_lengths.insert(cycle.len());
            chordless_cycles.push(cycle);
        }
    }
    chordless_cycles.sort();
    CycleLengthSets { all_lengths, chordless_lengths, chordless_cycles }
}

fn is_chordless(parent: &ParentGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if !consecutive && parent.has_edge(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}

/// All cycles of the parent, each once: start at the minimal vertex, second
/// vertex smaller than the last to fix orientation.
pub fn enumerate_cycles(parent: &ParentGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = parent.n();
    for start in 1..=n {
        let mut path = vec![start];
        let mut in_path = vec![false; n + 1];
        in_path[start] = true;
        extend_cycle(parent, start, &mut path, &mut in_path, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

fn extend_cycle(
    parent: &ParentGraph,
    start: usize,
    path: &mut Vec<usize>,
    in_path: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for next in parent.neighbors(last) {
        if next == start && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        }
        if next > start && !in_path[next] {
            path.push(next);
            in_path[next] = true;
            extend_cycle(parent, start, path, in_path, out);
            path.pop();
            in_path[next] = false;
        }
    }
}

/// A bijection on the vertex set of a multiplication preserving adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    map: BTreeMap<VertexId, VertexId>,
}

impl Automorphism {
    pub fn identity(m: &MultGraph) -> Self {
        Automorphism { map: m.vertices().iter().map(|&v| (v, v)).collect() }
    }

    pub fn from_map(m: &MultGraph, map: BTreeMap<VertexId, VertexId>) -> Result<Self> {
        let a = Automorphism { map };
        if !a.is_valid(m) {
            return Err(Error::NotAutomorphism);
        }
        Ok(a)
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.map[&v]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(k, v)| k == v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.map.iter().map(|(&a, &b)| (a, b))
    }

    fn is_valid(&self, m: &MultGraph) -> bool {
        if self.map.len() != m.vertex_count() {
            return false;
        }
        let images: BTreeSet<_> = self.map.values().collect();
        if images.len() != self.map.len() {
            return false;
        }
        if !self.map.iter().all(|(u, v)| m.contains(*u) && m.contains(*v)) {
            return false;
        }
        m.edges().iter().all(|&(u, v)| m.adjacent(self.map[&u], self.map[&v]))
    }
}

/// Whether the score condition is exact equality or equality mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoreMode {
    Exact,
    Parity,
}

/// All automorphisms of the multiplication, by backtracking over the global
/// vertex order with degree and neighborhood pruning. Generic search, not a
/// product of parent automorphisms and within-partite permutations: twin
/// vertices across partite sets can enlarge the group.
pub fn automorphisms(m: &MultGraph) -> Vec<Automorphism> {
    let verts = m.vertices();
    let mut out = Vec::new();
    let mut map: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut used: BTreeSet<VertexId> = BTreeSet::new();
    backtrack_auto(m, verts, 0, &mut map, &mut used, &mut |map| {
        out.push(Automorphism { map: map.clone() });
        true
    });
    out
}

fn backtrack_auto(
    m: &MultGraph,
    verts: &[VertexId],
    idx: usize,
    map: &mut BTreeMap<VertexId, VertexId>,
    used: &mut BTreeSet<VertexId>,
    found: &mut dyn FnMut(&BTreeMap<VertexId, VertexId>) -> bool,
) -> bool {
    if idx == verts.len() {
        return !found(map);
    }
    let v = verts[idx];
    for &w in verts {
        if used.contains(&w) || m.degree(w) != m.degree(v) {
            continue;
        }
        // adjacency with all previously assigned vertices must be preserved
        let ok = map.iter().all(|(&a, &fa)| m.adjacent(a, v) == m.adjacent(fa, w));
        if !ok {
            continue;
        }
        map.insert(v, w);
        used.insert(w);
        let stop = backtrack_auto(m, verts, idx + 1, map, used, found);
        map.remove(&v);
        used.remove(&w);
        if stop {
            return true;
        }
    }
    false
}

/// Searches for an automorphism `f` of the multiplication with
/// `od_D(v) = od_D2(f(v))` at every vertex (exact) or the same identity mod 2
/// (parity). Deterministic: first solution in the global vertex order.
pub fn find_score_automorphism(
    m: &MultGraph,
    d: &crate::orientation::Orientation,
    d2: &crate::orientation::Orientation,
    mode: ScoreMode,
) -> Option<Automorphism> {
    let verts = m.vertices();
    let od: BTreeMap<VertexId, usize> = verts.iter().map(|&v| (v, d.outdegree(v))).collect();
    let od2: BTreeMap<VertexId, usize> = verts.iter().map(|&v| (v, d2.outdegree(v))).collect();
    let mut map = BTreeMap::new();
    let mut used = BTreeSet::new();
    let mut result = None;
    backtrack_score(m, verts, 0, &od, &od2, mode, &mut map, &mut used, &mut result);
    result
}

#[allow(clippy::too_many_arguments)]
fn backtrack_score(
    m: &MultGraph,
    verts: &[VertexId],
    idx: usize,
    od: &BTreeMap<VertexId, usize>,
    od2: &BTreeMap<VertexId, usize>,
    mode: ScoreMode,
    map: &mut BTreeMap<VertexId, VertexId>,
    used: &mut BTreeSet<VertexId>,
    result: &mut Option<Automorphism>,
) -> bool {
    if idx == verts.len() {
        *result = Some(Automorphism { map: map.clone() });
        return true;
    }
    let v = verts[idx];
    for &w in verts {
        if used.contains(&w) || m.degree(w) != m.degree(v) {
            continue;
        }
        let score_ok = match mode {
            ScoreMode::Exact => od[&v] == od2[&w],
            ScoreMode::Parity => od[&v] % 2 == od2[&w] % 2,
        };
        if !score_ok {
            continue;
        }
        let ok = map.iter().all(|(&a, &fa)| m.adjacent(a, v) == m.adjacent(fa, w));
        if !ok {
            continue;
        }
        map.insert(v, w);
        used.insert(w);
        if backtrack_score(m, verts, idx + 1, od, od2, mode, map, used, result) {
            return true;
        }
        map.remove(&v);
        used.remove(&w);
    }
    false
}
