//! Brute-force ground truth: exhaustive orientation enumeration, reversal
//! classes up to isomorphism, and the canned obstruction pairs.

use crate::graph_core::{
    automorphisms, Automorphism, MultGraph, ParentGraph, VertexId,
};
use crate::orientation::{
    enumerate_mult_cycles, Arc, FamilySpec, Orientation,
};
use crate::{Error, Result};
use std::collections::BTreeMap;

const ENUM_BOUND: usize = 24;

fn check_bound(m: &MultGraph) -> Result<()> {
    if m.edge_count() > ENUM_BOUND {
        Err(Error::EnumerationBound(m.edge_count(), ENUM_BOUND))
    } else {
        Ok(())
    }
}

/// All `2^|edges|` orientations in mask order.
pub fn enumerate_orientations(m: &MultGraph) -> Result<Vec<Orientation>> {
    check_bound(m)?;
    Ok((0..1u64 << m.edge_count())
        .map(|bits| Orientation::from_bits(m, bits))
        .collect())
}

/// The orientation with every arc pushed forward along `f`.
pub fn relabel(m: &MultGraph, d: &Orientation, f: &Automorphism) -> Orientation {
    Orientation::from_arcs(
        m,
        d.arcs().map(|a| Arc::new(f.apply(a.tail), f.apply(a.head))),
    )
    .expect("automorphism image of an orientation is an orientation")
}

/// The smallest bit encoding over all relabelings of `d` by automorphisms of
/// the multiplication; equal canonical forms characterize isomorphic
/// orientations.
pub fn canonical_form(m: &MultGraph, group: &[Automorphism], d: &Orientation) -> u64 {
    group
        .iter()
        .map(|g| relabel(m, d, g).to_bits(m))
        .min()
        .expect("group contains the identity")
}

/// The partition of all orientations into reversal classes: two orientations
/// share a class iff a sequence of family reversals carries one to an
/// isomorphic copy of the other.
#[derive(Debug, Clone)]
pub struct ClassPartition {
    pub family: FamilySpec,
    /// Sorted bit masks per class; classes sorted by smallest member.
    classes: Vec<Vec<u64>>,
    class_of: BTreeMap<u64, usize>,
}

impl ClassPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<u64>] {
        &self.classes
    }

    pub fn class_of(&self, m: &MultGraph, d: &Orientation) -> usize {
        self.class_of[&d.to_bits(m)]
    }

    pub fn same_class(&self, m: &MultGraph, d: &Orientation, d2: &Orientation) -> bool {
        self.class_of(m, d) == self.class_of(m, d2)
    }

    pub fn representative(&self, m: &MultGraph, class: usize) -> Orientation {
        Orientation::from_bits(m, self.classes[class][0])
    }
}

/// A candidate cycle compiled to bit operations: the mask of its edges and,
/// per edge in cyclic order, (edge index, bit value meaning "runs forward").
struct MoveTemplate {
    edge_mask: u64,
    forward_bits: Vec<(usize, bool)>,
    directed_only: bool,
    tt3_only: bool,
}

impl MoveTemplate {
    fn applies(&self, bits: u64) -> bool {
        let fwd = self
            .forward_bits
            .iter()
            .all(|&(i, val)| (bits >> i & 1 == 1) == val);
        let bwd = self
            .forward_bits
            .iter()
            .all(|&(i, val)| (bits >> i & 1 == 1) != val);
        let directed = fwd || bwd;
        if self.directed_only {
            directed
        } else if self.tt3_only {
            !directed
        } else {
            true
        }
    }
}

/// Edge-index permutation with per-edge direction flips, the bitmask image of
/// an automorphism.
fn compile_automorphism(m: &MultGraph, g: &Automorphism) -> Vec<(usize, bool)> {
    let index: BTreeMap<(VertexId, VertexId), usize> =
        m.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
    m.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.apply(u), g.apply(v));
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            (index[&(lo, hi)], a > b)
        })
        .collect()
}

fn relabel_bits(bits: u64, table: &[(usize, bool)]) -> u64 {
    let mut out = 0u64;
    for (i, &(j, flip)) in table.iter().enumerate() {
        if (bits >> i & 1 == 1) != flip {
            out |= 1 << j;
        }
    }
    out
}

fn compile_moves(m: &MultGraph, family: &FamilySpec) -> Vec<MoveTemplate> {
    use crate::orientation::FamilyKind;
    let index: BTreeMap<(VertexId, VertexId), usize> =
        m.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut out = Vec::new();
    for (k, kind) in family.members() {
        for verts in enumerate_mult_cycles(m, k) {
            let mut edge_mask = 0u64;
            let mut forward_bits = Vec::with_capacity(k);
            for t in 0..k {
                let (a, b) = (verts[t], verts[(t + 1) % k]);
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                let i = index[&(lo, hi)];
                edge_mask |= 1 << i;
                // bit set means hi -> lo, so the arc a -> b is present
                // exactly when the bit equals (a > b)
                forward_bits.push((i, a > b));
            }
            out.push(MoveTemplate {
                edge_mask,
                forward_bits,
                directed_only: kind == FamilyKind::Directed,
                tt3_only: kind == FamilyKind::Tt3,
            });
        }
    }
    out
}

/// Computes the reversal classes by flood fill over reversal moves and
/// automorphism images.
pub fn f_classes(m: &MultGraph, family: &FamilySpec) -> Result<ClassPartition> {
    check_bound(m)?;
    let tables: Vec<Vec<(usize, bool)>> = automorphisms(m)
        .iter()
        .map(|g| compile_automorphism(m, g))
        .collect();
    let moves = compile_moves(m, family);
    let total = 1u64 << m.edge_count();
    let mut class_of: BTreeMap<u64, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<u64>> = Vec::new();
    for seed in 0..total {
        if class_of.contains_key(&seed) {
            continue;
        }
        let id = classes.len();
        let mut members = vec![seed];
        class_of.insert(seed, id);
        let mut stack = vec![seed];
        while let Some(bits) = stack.pop() {
            let neighbors = moves
                .iter()
                .filter(|mv| mv.applies(bits))
                .map(|mv| bits ^ mv.edge_mask)
                .chain(tables.iter().map(|t| relabel_bits(bits, t)));
            for next in neighbors {
                if let std::collections::btree_map::Entry::Vacant(e) = class_of.entry(next) {
                    e.insert(id);
                    members.push(next);
                    stack.push(next);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    Ok(ClassPartition { family: family.clone(), classes, class_of })
}

/// Identifiers for the canned obstruction pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionId {
    /// Non-isomorphic same-score-list pair that is C3-free: a bipartite seed
    /// pair lifted by `extra` dominating singleton partite sets (total
    /// partite count `2 + extra >= 3`).
    BipartiteLift { extra: usize },
    /// Same-score-list tripartite pair where one side is C4-free.
    C4FreePair,
    /// Tree pair with equal even-score counts but a differently oriented
    /// bridge.
    BridgeTree,
    /// Same-score-list tripartite pair where one side is TT3-free.
    Tt3FreePair,
}

/// Builds the requested obstruction pair and machine-checks its advertised
/// properties before returning it.
pub fn obstruction(id: ObstructionId) -> Result<(MultGraph, Orientation, Orientation)> {
    match id {
        ObstructionId::BipartiteLift { extra } => bipartite_lift(extra),
        ObstructionId::C4FreePair => c4_free_pair(),
        ObstructionId::BridgeTree => bridge_tree(),
        ObstructionId::Tt3FreePair => tt3_free_pair(),
    }
}

fn v(p: usize, c: usize) -> VertexId {
    VertexId::new(p, c)
}

/// True iff no directed cycle of length `k` occurs in `d`.
pub fn is_dicycle_free(m: &MultGraph, d: &Orientation, k: usize) -> bool {
    enumerate_mult_cycles(m, k)
        .iter()
        .all(|verts| !d.cycle_on(verts).unwrap().is_directed())
}

/// True iff no transitive triangle occurs in `d`.
pub fn is_tt3_free(m: &MultGraph, d: &Orientation) -> bool {
    enumerate_mult_cycles(m, 3)
        .iter()
        .all(|verts| !d.cycle_on(verts).unwrap().is_tt3())
}

fn bipartite_lift(extra: usize) -> Result<(MultGraph, Orientation, Orientation)> {
    if extra == 0 {
        return Err(Error::TooFewPartiteSets(3, 2));
    }
    // seed: smallest non-isomorphic score-automorphic pair of bipartite
    // tournaments. K(2,2) has none (its four isomorphism types carry four
    // distinct partite-wise score lists), so search K(3,3): bucket
    // orientations by the unordered pair of sorted partite score lists,
    // which characterizes the existence of an exact score automorphism.
    let m0 = MultGraph::new(ParentGraph::complete(2), vec![3, 3])?;
    let group0 = automorphisms(&m0);
    let signature = |d: &Orientation| {
        let mut per: Vec<Vec<usize>> = vec![Vec::new(); 2];
        for &x in m0.vertices() {
            per[x.partite - 1].push(d.outdegree(x));
        }
        per[0].sort_unstable();
        per[1].sort_unstable();
        per.sort();
        per
    };
    let mut buckets: BTreeMap<Vec<Vec<usize>>, Vec<(u64, Orientation)>> = BTreeMap::new();
    let (s1, s2) = 'search: {
        for d in enumerate_orientations(&m0)? {
            let canon = canonical_form(&m0, &group0, &d);
            let bucket = buckets.entry(signature(&d)).or_default();
            if let Some((_, prior)) = bucket.iter().find(|(c, _)| *c != canon) {
                break 'search (prior.clone(), d);
            }
            if bucket.iter().all(|(c, _)| *c != canon) {
                bucket.push((canon, d));
            }
        }
        unreachable!("K(3,3) contains a non-isomorphic score-automorphic pair")
    };
    let n = 2 + extra;
    let mut p = vec![3, 3];
    p.extend(std::iter::repeat(1).take(extra));
    let m = MultGraph::new(ParentGraph::complete(n), p)?;
    let lift = |seed: &Orientation| -> Orientation {
        let mut arcs: Vec<Arc> = seed.arcs().collect();
        for &(a, b) in m.edges() {
            let (lo, hi) = if a.partite < b.partite { (a, b) } else { (b, a) };
            if (lo.partite, hi.partite) != (1, 2) {
                // higher partite set dominates the lower
                arcs.push(Arc::new(hi, lo));
            }
        }
        Orientation::from_arcs(&m, arcs).unwrap()
    };
    let (f1, f2) = (lift(&s1), lift(&s2));
    assert_eq!(f1.scores(&m), f2.scores(&m));
    assert!(is_dicycle_free(&m, &f1, 3) && is_dicycle_free(&m, &f2, 3));
    let group = automorphisms(&m);
    assert_ne!(canonical_form(&m, &group, &f1), canonical_form(&m, &group, &f2));
    Ok((m, f1, f2))
}

fn c4_free_pair() -> Result<(MultGraph, Orientation, Orientation)> {
    let m = MultGraph::new(ParentGraph::complete(3), vec![2, 1, 2])?;
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
    )?;
    let c = d.cycle_on(&[v(1, 1), v(2, 1), v(3, 2)])?;
    assert!(c.is_directed());
    let d2 = d.reverse_cycle(&c)?;
    assert_eq!(d.scores(&m).to_string(), "0 2 2 2 2");
    assert_eq!(d.scores(&m), d2.scores(&m));
    assert!(is_dicycle_free(&m, &d, 4));
    let group = automorphisms(&m);
    assert_ne!(canonical_form(&m, &group, &d), canonical_form(&m, &group, &d2));
    Ok((m, d, d2))
}

fn bridge_tree() -> Result<(MultGraph, Orientation, Orientation)> {
    let parent = ParentGraph::new(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)])?;
    let m = MultGraph::new(parent, vec![1; 7])?;
    let arcs = |three_up: bool| {
        let mut a = vec![
            Arc::new(v(2, 1), v(1, 1)),
            Arc::new(v(3, 1), v(2, 1)),
            Arc::new(v(4, 1), v(5, 1)),
            Arc::new(v(5, 1), v(6, 1)),
            Arc::new(v(7, 1), v(4, 1)),
        ];
        a.push(if three_up {
            Arc::new(v(3, 1), v(4, 1))
        } else {
            Arc::new(v(4, 1), v(3, 1))
        });
        a
    };
    let d = Orientation::from_arcs(&m, arcs(false))?;
    let d2 = Orientation::from_arcs(&m, arcs(true))?;
    let evens = |o: &Orientation| {
        m.vertices().iter().filter(|&&x| o.outdegree(x) % 2 == 0).count()
    };
    assert_eq!(evens(&d), evens(&d2));
    assert!(crate::graph_core::find_score_automorphism(
        &m,
        &d,
        &d2,
        crate::graph_core::ScoreMode::Parity
    )
    .is_none());
    Ok((m, d, d2))
}

fn tt3_free_pair() -> Result<(MultGraph, Orientation, Orientation)> {
    let m = MultGraph::new(ParentGraph::complete(3), vec![2, 1, 1])?;
    let d = Orientation::from_arcs(
        &m,
        [
            Arc::new(v(1, 2), v(2, 1)),
            Arc::new(v(1, 1), v(2, 1)),
            Arc::new(v(2, 1), v(3, 1)),
            Arc::new(v(3, 1), v(1, 1)),
            Arc::new(v(3, 1), v(1, 2)),
        ],
    )?;
    let d2 = Orientation::from_arcs(
        &m,
        [
            Arc::new(v(2, 1), v(1, 1)),
            Arc::new(v(1, 2), v(2, 1)),
            Arc::new(v(2, 1), v(3, 1)),
            Arc::new(v(3, 1), v(1, 2)),
            Arc::new(v(1, 1), v(3, 1)),
        ],
    )?;
    assert_eq!(d.scores(&m).to_string(), "1 1 1 2");
    assert_eq!(d.scores(&m), d2.scores(&m));
    assert!(is_tt3_free(&m, &d));
    Ok((m, d, d2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::ScoreMode;
    use crate::orientation::FamilyKind;

    #[test]
    fn enumeration_counts() {
        let k2 = MultGraph::new(ParentGraph::complete(2), vec![1, 1]).unwrap();
        assert_eq!(enumerate_orientations(&k2).unwrap().len(), 2);
        let k3 = MultGraph::new(ParentGraph::complete(3), vec![1, 1, 1]).unwrap();
        assert_eq!(enumerate_orientations(&k3).unwrap().len(), 8);
        let k22 = MultGraph::new(ParentGraph::complete(2), vec![2, 2]).unwrap();
        assert_eq!(enumerate_orientations(&k22).unwrap().len(), 16);
    }

    #[test]
    fn enumeration_bound_enforced() {
        let m = MultGraph::new(ParentGraph::complete(5), vec![2, 2, 2, 2, 2]).unwrap();
        assert!(matches!(
            enumerate_orientations(&m),
            Err(Error::EnumerationBound(40, 24))
        ));
    }

    #[test]
    fn triangle_tournament_c3_classes() {
        // two classes: the transitive tournament and the two dicycles
        let m = MultGraph::new(ParentGraph::complete(3), vec![1, 1, 1]).unwrap();
        let fam = FamilySpec::new([(3, FamilyKind::Directed)]);
        let part = f_classes(&m, &fam).unwrap();
        assert_eq!(part.class_count(), 2);
        let sizes: Vec<usize> = part.classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 8);
    }

    #[test]
    fn bipartite_quad_c4_classes_match_scores() {
        let m = MultGraph::new(ParentGraph::complete(2), vec![2, 2]).unwrap();
        let fam = FamilySpec::new([(4, FamilyKind::Directed)]);
        let part = f_classes(&m, &fam).unwrap();
        let all = enumerate_orientations(&m).unwrap();
        for a in &all {
            for b in &all {
                let score_ok =
                    crate::graph_core::find_score_automorphism(&m, a, b, ScoreMode::Exact)
                        .is_some();
                assert_eq!(
                    part.same_class(&m, a, b),
                    score_ok,
                    "masks {} {}",
                    a.to_bits(&m),
                    b.to_bits(&m)
                );
            }
        }
    }

    #[test]
    fn class_partition_is_isomorphism_invariant() {
        let m = MultGraph::new(ParentGraph::complete(2), vec![2, 2]).unwrap();
        let fam = FamilySpec::new([(4, FamilyKind::Directed)]);
        let part = f_classes(&m, &fam).unwrap();
        let g = &automorphisms(&m)[1];
        for d in enumerate_orientations(&m).unwrap() {
            assert_eq!(part.class_of(&m, &d), part.class_of(&m, &relabel(&m, &d, g)));
        }
    }

    #[test]
    fn obstruction_pairs_build() {
        for id in [
            ObstructionId::BipartiteLift { extra: 1 },
            ObstructionId::C4FreePair,
            ObstructionId::BridgeTree,
            ObstructionId::Tt3FreePair,
        ] {
            let (m, d, d2) = obstruction(id).unwrap();
            assert_eq!(d.arc_count(), m.edge_count());
            assert_eq!(d2.arc_count(), m.edge_count());
        }
    }

    #[test]
    fn bipartite_lift_is_not_c3_equivalent() {
        let (m, f1, f2) = obstruction(ObstructionId::BipartiteLift { extra: 1 }).unwrap();
        // both sides are C3-free and non-isomorphic, so neither admits any
        // C3 move and the pair cannot be C3-equivalent
        let fam = FamilySpec::new([(3, FamilyKind::Directed)]);
        assert!(crate::orientation::find_family_copy(&m, &f1, &fam).is_none());
        assert!(crate::orientation::find_family_copy(&m, &f2, &fam).is_none());
        // but the score lists agree exactly
        assert!(crate::graph_core::find_score_automorphism(&m, &f1, &f2, ScoreMode::Exact).is_some());
    }
}
