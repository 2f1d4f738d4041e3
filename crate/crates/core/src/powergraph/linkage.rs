//! The linkage graph: one node per subgroup of prime order, an edge when
//! two such subgroups lie together inside a cyclic subgroup whose order is
//! the product of their primes.
//!
//! Connectivity of this small graph decides connectivity of the reduced
//! power graph, because within one prime-order subgroup all non-identity
//! elements are mutually adjacent, every element connects down to a
//! prime-order power of itself, and an edge witness `z` strings the two
//! subgroups together through `<z>`.

use crate::bits::BitSet;
use crate::graph::union_find_connected;
use crate::group::{Elem, Group};
use crate::weight::is_prime;

/// A subgroup of prime order `prime`, identified by its canonical
/// generator: the smallest non-identity member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageNode {
    pub generator: Elem,
    pub prime: u64,
    /// Member ids, ascending (identity included).
    pub members: Vec<Elem>,
}

/// An edge between nodes `a < b`, with the smallest witness element `z`
/// such that `o(z) = p_a * p_b` and both subgroups lie in `<z>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkageEdge {
    pub a: usize,
    pub b: usize,
    pub witness: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageGraph {
    /// Nodes ascending by canonical generator.
    pub nodes: Vec<LinkageNode>,
    /// Edges ascending by `(a, b)`.
    pub edges: Vec<LinkageEdge>,
}

impl LinkageGraph {
    /// A linkage graph with at most one node counts as connected.
    pub fn is_connected(&self) -> bool {
        union_find_connected(self.nodes.len(), self.edges.iter().map(|e| (e.a, e.b)))
    }
}

pub fn build_linkage_graph(g: &Group) -> LinkageGraph {
    let n = g.order();
    // Prime-order subgroups, deduplicated by membership. Scanning elements
    // ascending makes the first generator found the smallest one.
    let mut nodes: Vec<LinkageNode> = Vec::new();
    let mut seen_members: Vec<Vec<Elem>> = Vec::new();
    for a in g.elements().skip(1) {
        let o = u64::from(g.order_of(a));
        if !is_prime(o) {
            continue;
        }
        let members = g.cyclic_subgroup(a).members().to_vec();
        if !seen_members.contains(&members) {
            seen_members.push(members.clone());
            nodes.push(LinkageNode {
                generator: a,
                prime: o,
                members,
            });
        }
    }
    nodes.sort_by_key(|node| node.generator);

    let node_bits: Vec<BitSet> = nodes
        .iter()
        .map(|node| {
            let mut bits = BitSet::new(n);
            for &m in &node.members {
                bits.insert(m as usize);
            }
            bits
        })
        .collect();

    // Cache <z> membership per candidate witness.
    let mut cyclic_cache: Vec<Option<BitSet>> = vec![None; n];
    let mut edges = Vec::new();
    for a in 0..nodes.len() {
        for b in a + 1..nodes.len() {
            let target = nodes[a].prime * nodes[b].prime;
            // Two distinct subgroups of the same prime order never share a
            // cyclic supergroup of order p^2 (that group has a unique
            // subgroup of order p), so only coprime pairs can link.
            if nodes[a].prime == nodes[b].prime {
                continue;
            }
            let witness = g.elements().find(|&z| {
                if u64::from(g.order_of(z)) != target {
                    return false;
                }
                let bits = cyclic_cache[z as usize].get_or_insert_with(|| g.cyclic_members(z));
                node_bits[a].is_subset(bits) && node_bits[b].is_subset(bits)
            });
            if let Some(z) = witness {
                edges.push(LinkageEdge { a, b, witness: z });
            }
        }
    }
    LinkageGraph { nodes, edges }
}
