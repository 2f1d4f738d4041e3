//! Exact clique computations: maximum clique size by branch and bound with
//! a greedy coloring bound, and maximal clique enumeration by
//! Bron-Kerbosch with pivoting.

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Vertex cap for the exact maximum-clique search. Power graphs past this
/// size should use the closed-form weight instead.
pub const MAX_CLIQUE_VERTICES: usize = 5000;

pub fn clique_number_exact(adj: &[BitSet]) -> Result<usize> {
    clique_number_exact_capped(adj, MAX_CLIQUE_VERTICES)
}

pub fn clique_number_exact_capped(adj: &[BitSet], cap: usize) -> Result<usize> {
    if adj.len() > cap {
        return Err(Error::Resource(format!(
            "{} vertices exceeds the exact-clique cap of {cap}; the weight formula handles large groups",
            adj.len()
        )));
    }
    let mut best = 0;
    expand(adj, &BitSet::full(adj.len()), 0, &mut best);
    Ok(best)
}

fn expand(adj: &[BitSet], cand: &BitSet, size: usize, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    let (order, colors) = color_sort(adj, cand);
    let mut cand = cand.clone();
    for i in (0..order.len()).rev() {
        // Colors ascend along `order`, so once one vertex fails the bound
        // every earlier one does too.
        if size + colors[i] <= *best {
            return;
        }
        let v = order[i];
        let next = cand.intersection(&adj[v]);
        expand(adj, &next, size + 1, best);
        cand.remove(v);
    }
}

/// Greedy color classes over the candidate set. Returns the vertices
/// grouped class by class together with their 1-based color numbers
/// (ascending); a vertex's color bounds the largest clique through it
/// within `cand`.
fn color_sort(adj: &[BitSet], cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut class_members: Vec<Vec<usize>> = Vec::new();
    let mut class_bits: Vec<BitSet> = Vec::new();
    for v in cand.iter() {
        match class_bits
            .iter()
            .position(|bits| bits.intersection_count(&adj[v]) == 0)
        {
            Some(ci) => {
                class_members[ci].push(v);
                class_bits[ci].insert(v);
            }
            None => {
                class_members.push(vec![v]);
                let mut bits = BitSet::new(adj.len());
                bits.insert(v);
                class_bits.push(bits);
            }
        }
    }
    let mut order = Vec::with_capacity(cand.count());
    let mut colors = Vec::with_capacity(order.capacity());
    for (ci, members) in class_members.iter().enumerate() {
        for &v in members {
            order.push(v);
            colors.push(ci + 1);
        }
    }
    (order, colors)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalCliques {
    /// Each clique sorted ascending; the list sorted lexicographically.
    pub cliques: Vec<Vec<usize>>,
    /// True when enumeration stopped at the requested limit. Callers must
    /// surface this; a truncated enumeration is not the full answer.
    pub truncated: bool,
}

/// All maximal cliques, stopping after `limit` of them.
pub fn maximal_cliques(adj: &[BitSet], limit: usize) -> MaximalCliques {
    let n = adj.len();
    let mut out = MaximalCliques {
        cliques: Vec::new(),
        truncated: false,
    };
    if n == 0 {
        return out;
    }
    let mut r = Vec::new();
    bron_kerbosch(
        adj,
        &mut r,
        BitSet::full(n),
        BitSet::new(n),
        limit,
        &mut out,
    );
    out.cliques.sort();
    out
}

fn bron_kerbosch(
    adj: &[BitSet],
    r: &mut Vec<usize>,
    p: BitSet,
    x: BitSet,
    limit: usize,
    out: &mut MaximalCliques,
) {
    if out.truncated {
        return;
    }
    if p.is_empty() && x.is_empty() {
        if out.cliques.len() == limit {
            out.truncated = true;
            return;
        }
        let mut clique = r.clone();
        clique.sort_unstable();
        out.cliques.push(clique);
        return;
    }
    // Branch only on vertices outside the pivot's neighborhood.
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection_count(&adj[u]))
        .expect("p or x nonempty");
    let branch = p.difference(&adj[pivot]);
    let mut p = p;
    let mut x = x;
    for v in branch.iter() {
        if out.truncated {
            return;
        }
        r.push(v);
        bron_kerbosch(
            adj,
            r,
            p.intersection(&adj[v]),
            x.intersection(&adj[v]),
            limit,
            out,
        );
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::from_edges;
    use proptest::prelude::*;

    #[test]
    fn known_clique_numbers() {
        let k4 = from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(clique_number_exact(&k4).unwrap(), 4);
        let c5 = from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(clique_number_exact(&c5).unwrap(), 2);
        assert_eq!(clique_number_exact(&from_edges(0, &[])).unwrap(), 0);
        assert_eq!(clique_number_exact(&from_edges(3, &[])).unwrap(), 1);
        // Two triangles sharing no vertex.
        let two = from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(clique_number_exact(&two).unwrap(), 3);
    }

    #[test]
    fn vertex_cap_is_enforced() {
        let adj = from_edges(4, &[(0, 1)]);
        assert!(matches!(
            clique_number_exact_capped(&adj, 3),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn maximal_cliques_of_paw() {
        // Triangle 0-1-2 with pendant 3 on 2.
        let adj = from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let got = maximal_cliques(&adj, 100);
        assert!(!got.truncated);
        assert_eq!(got.cliques, vec![vec![0, 1, 2], vec![2, 3]]);
    }

    #[test]
    fn truncation_is_reported() {
        let k4 = from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let got = maximal_cliques(&k4, 0);
        assert!(got.truncated);
        assert!(got.cliques.is_empty());
        // An edgeless graph has one maximal clique per vertex.
        let got = maximal_cliques(&from_edges(3, &[]), 2);
        assert!(got.truncated);
        assert_eq!(got.cliques.len(), 2);
    }

    /// Subset-scan oracle: every subset that is a clique and cannot grow.
    fn maximal_cliques_brute(adj: &[BitSet]) -> Vec<Vec<usize>> {
        let n = adj.len();
        let is_clique = |members: &[usize]| {
            members
                .iter()
                .enumerate()
                .all(|(i, &u)| members[i + 1..].iter().all(|&v| adj[u].contains(v)))
        };
        let mut out = Vec::new();
        for mask in 1u32..1 << n {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !is_clique(&members) {
                continue;
            }
            let extendable = (0..n)
                .any(|u| !members.contains(&u) && members.iter().all(|&v| adj[u].contains(v)));
            if !extendable {
                out.push(members);
            }
        }
        out.sort();
        out
    }

    proptest! {
        #[test]
        fn matches_brute_force_enumeration(n in 1usize..9, seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut state = seed | 1;
            for u in 0..n {
                for v in u + 1..n {
                    // xorshift coin flip
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state % 3 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let adj = from_edges(n, &edges);
            let got = maximal_cliques(&adj, 10_000);
            prop_assert!(!got.truncated);
            prop_assert_eq!(&got.cliques, &maximal_cliques_brute(&adj));
            let omega = clique_number_exact(&adj).unwrap();
            let brute_omega = got.cliques.iter().map(Vec::len).max().unwrap_or(0);
            prop_assert_eq!(omega, brute_omega);
        }
    }
}
