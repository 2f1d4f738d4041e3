//! Exact algorithms on undirected graphs in adjacency-bitset form.
//!
//! A graph on `n` vertices is a slice of `n` [`BitSet`] rows, row `v`
//! holding the neighbors of `v`. Rows must be symmetric and irreflexive;
//! builders in this crate guarantee that.

pub mod clique;
mod union_find;

pub use clique::{
    clique_number_exact, clique_number_exact_capped, maximal_cliques, MaximalCliques,
};

use crate::bits::BitSet;
use union_find::DisjointSet;

/// Connected components with dense, deterministic ids: components are
/// numbered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    /// Component id of each vertex.
    pub component_id: Vec<usize>,
    /// Number of components.
    pub count: usize,
    /// Vertex count per component id.
    pub sizes: Vec<usize>,
}

pub fn connected_components(adj: &[BitSet]) -> ComponentPartition {
    let n = adj.len();
    let mut ds = DisjointSet::new(n);
    for (v, row) in adj.iter().enumerate() {
        for u in row.iter() {
            ds.union(v, u);
        }
    }
    let mut component_id = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    let mut count = 0;
    for v in 0..n {
        let root = ds.find(v);
        if component_id[root] == usize::MAX {
            component_id[root] = count;
            sizes.push(0);
            count += 1;
        }
        component_id[v] = component_id[root];
        sizes[component_id[v]] += 1;
    }
    ComponentPartition {
        component_id,
        count,
        sizes,
    }
}

/// A graph with at most one vertex counts as connected.
pub fn is_connected(adj: &[BitSet]) -> bool {
    connected_components(adj).count <= 1
}

/// Connectivity of an abstract edge list over `n` nodes, without adjacency
/// rows. Zero or one node counts as connected.
pub fn union_find_connected(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    if n <= 1 {
        return true;
    }
    let mut ds = DisjointSet::new(n);
    let mut parts = n;
    for (a, b) in edges {
        if ds.union(a, b) {
            parts -= 1;
        }
    }
    parts == 1
}

/// BFS distances from `src`; `None` marks unreachable vertices. Frontier
/// expansion works a word at a time over the adjacency rows.
pub fn bfs_distances(adj: &[BitSet], src: usize) -> Vec<Option<u32>> {
    let n = adj.len();
    let mut dist = vec![None; n];
    let mut visited = BitSet::new(n);
    let mut frontier = BitSet::new(n);
    visited.insert(src);
    frontier.insert(src);
    dist[src] = Some(0);
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = BitSet::new(n);
        for v in frontier.iter() {
            next.union_with(&adj[v]);
        }
        let next = next.difference(&visited);
        for v in next.iter() {
            dist[v] = Some(d);
        }
        visited.union_with(&next);
        frontier = next;
    }
    dist
}

pub fn distance(adj: &[BitSet], u: usize, v: usize) -> Option<u32> {
    bfs_distances(adj, u)[v]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiameterResult {
    pub diameter: Diameter,
    /// Eccentricity per vertex; meaningful only when connected.
    pub eccentricity: Vec<u32>,
}

/// All-pairs diameter by per-source BFS. Graphs with fewer than two
/// vertices have diameter 0.
pub fn diameter(adj: &[BitSet]) -> DiameterResult {
    let n = adj.len();
    let mut eccentricity = vec![0u32; n];
    let mut max = 0;
    for src in 0..n {
        let dist = bfs_distances(adj, src);
        let mut ecc = 0;
        for d in dist {
            match d {
                Some(d) => ecc = ecc.max(d),
                None => {
                    return DiameterResult {
                        diameter: Diameter::Disconnected,
                        eccentricity,
                    }
                }
            }
        }
        eccentricity[src] = ecc;
        max = max.max(ecc);
    }
    DiameterResult {
        diameter: Diameter::Finite(max),
        eccentricity,
    }
}

/// Every pair of distinct vertices adjacent; true for 0 or 1 vertices.
pub fn is_complete(adj: &[BitSet]) -> bool {
    let n = adj.len();
    adj.iter().all(|row| row.count() == n - 1)
}

/// Builds symmetric adjacency rows from an edge list (for tests and
/// external graphs).
pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<BitSet> {
    let mut adj = vec![BitSet::new(n); n];
    for &(u, v) in edges {
        assert!(u != v, "self-loop at {u}");
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj
}
