//! Power graphs of a finite group.
//!
//! In the full variant the vertices are all of `G` and `x ~ y` when one is
//! a power of the other; the reduced variant drops the identity vertex; the
//! custom variant restricts to a caller-chosen vertex set (the identity is
//! allowed there). The directed variant keeps all of `G` and draws the arc
//! `x -> y` exactly when `y` is a power of `x` and `y != x`.

pub mod export;
pub mod linkage;

pub use linkage::{build_linkage_graph, LinkageEdge, LinkageGraph, LinkageNode};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::group::{Elem, Group};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Reduced,
    Full,
    Custom,
    Directed,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Reduced => "reduced",
            Variant::Full => "full",
            Variant::Custom => "custom",
            Variant::Directed => "directed",
        }
    }
}

/// A power graph over positions `0..vertex_count()`; `element(v)` maps a
/// position back to the group element it stands for.
#[derive(Debug, Clone)]
pub struct PowerGraph<'g> {
    group: &'g Group,
    variant: Variant,
    vertices: Vec<Elem>,
    /// Position of each element, `usize::MAX` for non-vertices.
    position: Vec<usize>,
    /// For the directed variant, `adj[v]` holds the out-neighbors of `v`;
    /// undirected variants keep it symmetric.
    adj: Vec<BitSet>,
}

impl<'g> PowerGraph<'g> {
    pub fn reduced(group: &'g Group) -> PowerGraph<'g> {
        Self::build(group, Variant::Reduced, None).expect("reduced build cannot fail")
    }

    pub fn full(group: &'g Group) -> PowerGraph<'g> {
        Self::build(group, Variant::Full, None).expect("full build cannot fail")
    }

    pub fn directed(group: &'g Group) -> PowerGraph<'g> {
        Self::build(group, Variant::Directed, None).expect("directed build cannot fail")
    }

    pub fn custom(group: &'g Group, subset: &[Elem]) -> Result<PowerGraph<'g>> {
        Self::build(group, Variant::Custom, Some(subset))
    }

    /// Builds the requested variant; `subset` is required for
    /// [`Variant::Custom`] and rejected otherwise. Duplicates in the subset
    /// collapse, order does not matter, and the identity is a legal vertex.
    pub fn build(
        group: &'g Group,
        variant: Variant,
        subset: Option<&[Elem]>,
    ) -> Result<PowerGraph<'g>> {
        let n = group.order();
        let vertices: Vec<Elem> = match (variant, subset) {
            (Variant::Custom, Some(subset)) => {
                let mut v = subset.to_vec();
                v.sort_unstable();
                v.dedup();
                if let Some(&bad) = v.iter().find(|&&x| x as usize >= n) {
                    return Err(Error::Usage(format!(
                        "element {bad} out of range for a group of order {n}"
                    )));
                }
                v
            }
            (Variant::Custom, None) => {
                return Err(Error::Usage(
                    "the custom variant needs a vertex subset".into(),
                ))
            }
            (_, Some(_)) => {
                return Err(Error::Usage(format!(
                    "a vertex subset only applies to the custom variant, not {}",
                    variant.as_str()
                )))
            }
            (Variant::Reduced, None) => (1..n as Elem).collect(),
            (Variant::Full | Variant::Directed, None) => (0..n as Elem).collect(),
        };

        let mut position = vec![usize::MAX; n];
        for (i, &x) in vertices.iter().enumerate() {
            position[x as usize] = i;
        }

        // Membership of each vertex's cyclic subgroup, over element ids:
        // x ~ y iff y is in <x> or x is in <y>.
        let members: Vec<BitSet> = vertices.iter().map(|&x| group.cyclic_members(x)).collect();

        let count = vertices.len();
        let mut adj = vec![BitSet::new(count); count];
        for u in 0..count {
            for v in 0..count {
                if u == v {
                    continue;
                }
                let arc = match variant {
                    Variant::Directed => members[u].contains(vertices[v] as usize),
                    _ => {
                        u < v
                            && (members[u].contains(vertices[v] as usize)
                                || members[v].contains(vertices[u] as usize))
                    }
                };
                if arc {
                    adj[u].insert(v);
                    if variant != Variant::Directed {
                        adj[v].insert(u);
                    }
                }
            }
        }

        Ok(PowerGraph {
            group,
            variant,
            vertices,
            position,
            adj,
        })
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edge count; arcs for the directed variant.
    pub fn edge_count(&self) -> usize {
        let total: usize = self.adj.iter().map(BitSet::count).sum();
        match self.variant {
            Variant::Directed => total,
            _ => total / 2,
        }
    }

    /// Adjacency rows over vertex positions.
    pub fn adjacency(&self) -> &[BitSet] {
        &self.adj
    }

    pub fn element(&self, v: usize) -> Elem {
        self.vertices[v]
    }

    pub fn vertices(&self) -> &[Elem] {
        &self.vertices
    }

    /// Position of element `x`, if it is a vertex.
    pub fn position_of(&self, x: Elem) -> Option<usize> {
        self.position
            .get(x as usize)
            .copied()
            .filter(|&p| p != usize::MAX)
    }

    /// `N[v]`: the neighbors of `v` together with `v` itself.
    pub fn closed_neighborhood(&self, v: usize) -> BitSet {
        let mut out = self.adj[v].clone();
        out.insert(v);
        out
    }
}
