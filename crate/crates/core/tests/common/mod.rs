//! Random instance generators for the acceptance suite. Everything is
//! seeded, so failures reproduce.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use revmult::graph_core::{automorphisms, Automorphism, MultGraph, ParentGraph};
use revmult::Orientation;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected parent graph on 2..=5 vertices: a random spanning tree plus
/// random extra edges.
pub fn random_parent(rng: &mut ChaCha8Rng) -> ParentGraph {
    let n = rng.gen_range(2..=5usize);
    let mut edges = Vec::new();
    for v in 2..=n {
        edges.push((rng.gen_range(1..v), v));
    }
    for a in 1..=n {
        for b in a + 1..=n {
            if !edges.contains(&(a, b)) && rng.gen_bool(0.3) {
                edges.push((a, b));
            }
        }
    }
    ParentGraph::new(n, edges).expect("spanning tree keeps it connected")
}

pub fn random_mult(rng: &mut ChaCha8Rng) -> MultGraph {
    let parent = random_parent(rng);
    let p: Vec<usize> = (0..parent.n()).map(|_| rng.gen_range(1..=2usize)).collect();
    MultGraph::new(parent, p).expect("positive multiplicities")
}

pub fn random_orientation(m: &MultGraph, rng: &mut ChaCha8Rng) -> Orientation {
    let mask = if m.edge_count() == 64 { u64::MAX } else { (1u64 << m.edge_count()) - 1 };
    Orientation::from_bits(m, rng.gen::<u64>() & mask)
}

pub fn random_automorphism(m: &MultGraph, rng: &mut ChaCha8Rng) -> Automorphism {
    let group = automorphisms(m);
    group[rng.gen_range(0..group.len())].clone()
}
