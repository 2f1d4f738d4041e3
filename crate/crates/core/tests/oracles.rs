//! Definition-level oracles for the graph constructions and structure
//! predicates. Everything here recomputes from first principles — repeated
//! multiplication, pairwise commutators — and must agree with the cached,
//! bitset-backed implementations.

use std::collections::HashSet;

use pg_core::claims::{run_corpus, ClaimId, ClaimStatus, Corpus};
use pg_core::graph::{self, Diameter};
use pg_core::group::families::{
    make_alternating, make_cyclic, make_dicyclic, make_dihedral, make_elem_abelian, make_symmetric,
};
use pg_core::group::spec::{Family, GroupSpec};
use pg_core::group::{Elem, Group, Limits, IDENTITY};
use pg_core::powergraph::{build_linkage_graph, PowerGraph};
use pg_core::weight::gcd;

/// A spread of small groups: abelian and not, p-groups and not, every
/// family constructor.
fn small_groups() -> Vec<Group> {
    vec![
        make_cyclic(1).unwrap(),
        make_cyclic(2).unwrap(),
        make_cyclic(12).unwrap(),
        make_cyclic(30).unwrap(),
        make_dihedral(3).unwrap(),
        make_dihedral(8).unwrap(),
        make_dicyclic(2).unwrap(),
        make_dicyclic(3).unwrap(),
        make_dicyclic(5).unwrap(),
        make_symmetric(4).unwrap(),
        make_alternating(4).unwrap(),
        make_elem_abelian(2, 3).unwrap(),
        make_elem_abelian(3, 2).unwrap(),
        GroupSpec::Product(vec![
            GroupSpec::Atom(Family::Symmetric(3)),
            GroupSpec::Atom(Family::Cyclic(6)),
        ])
        .build()
        .unwrap(),
    ]
}

/// All powers of `x`, by repeated multiplication only.
fn powers(g: &Group, x: Elem) -> HashSet<Elem> {
    let mut out = HashSet::new();
    let mut acc = x;
    while out.insert(acc) {
        acc = g.mul(acc, x);
    }
    out
}

#[test]
fn adjacency_matches_exponentiation_oracle() {
    for g in small_groups() {
        let pows: Vec<HashSet<Elem>> = g.elements().map(|x| powers(&g, x)).collect();
        let related =
            |x: Elem, y: Elem| pows[x as usize].contains(&y) || pows[y as usize].contains(&x);

        let reduced = PowerGraph::reduced(&g);
        for u in 0..reduced.vertex_count() {
            for v in 0..reduced.vertex_count() {
                let (x, y) = (reduced.element(u), reduced.element(v));
                let expect = u != v && related(x, y);
                assert_eq!(
                    reduced.adjacency()[u].contains(v),
                    expect,
                    "reduced {} ~ {} in {}",
                    g.label(x),
                    g.label(y),
                    g.name()
                );
            }
        }

        let full = PowerGraph::full(&g);
        for u in 0..full.vertex_count() {
            for v in 0..full.vertex_count() {
                let (x, y) = (full.element(u), full.element(v));
                let expect = u != v && related(x, y);
                assert_eq!(full.adjacency()[u].contains(v), expect);
            }
        }

        let directed = PowerGraph::directed(&g);
        for u in 0..directed.vertex_count() {
            for v in 0..directed.vertex_count() {
                let (x, y) = (directed.element(u), directed.element(v));
                let expect = x != y && pows[x as usize].contains(&y);
                assert_eq!(
                    directed.adjacency()[u].contains(v),
                    expect,
                    "directed {} -> {} in {}",
                    g.label(x),
                    g.label(y),
                    g.name()
                );
            }
        }
    }
}

#[test]
fn identity_dominates_full_and_absorbs_directed_arcs() {
    for g in small_groups() {
        let full = PowerGraph::full(&g);
        let id = full.position_of(IDENTITY).unwrap();
        assert_eq!(full.adjacency()[id].count(), g.order() - 1);

        // Every non-identity element reaches the identity; the identity
        // reaches nothing.
        let directed = PowerGraph::directed(&g);
        let id = directed.position_of(IDENTITY).unwrap();
        assert!(directed.adjacency()[id].is_empty());
        for v in 0..directed.vertex_count() {
            if v != id {
                assert!(directed.adjacency()[v].contains(id));
            }
        }
    }
}

#[test]
fn distances_are_symmetric_and_diameter_is_max_eccentricity() {
    for g in small_groups() {
        let pg = PowerGraph::reduced(&g);
        let adj = pg.adjacency();
        let n = pg.vertex_count();
        let dists: Vec<Vec<Option<u32>>> = (0..n).map(|s| graph::bfs_distances(adj, s)).collect();
        for (u, row) in dists.iter().enumerate() {
            for (v, d) in row.iter().enumerate() {
                assert_eq!(*d, dists[v][u]);
            }
        }
        let mut ecc_max = 0u32;
        let mut unreachable = false;
        for row in &dists {
            for d in row {
                match d {
                    Some(d) => ecc_max = ecc_max.max(*d),
                    None => unreachable = true,
                }
            }
        }
        let expect = if unreachable {
            Diameter::Disconnected
        } else {
            Diameter::Finite(ecc_max)
        };
        assert_eq!(graph::diameter(adj).diameter, expect, "in {}", g.name());
    }
}

#[test]
fn linkage_witnesses_replay_from_scratch() {
    for g in small_groups() {
        let lg = build_linkage_graph(&g);
        for node in &lg.nodes {
            assert_eq!(node.members.len() as u64, node.prime);
            assert_eq!(u64::from(g.order_of(node.generator)), node.prime);
            let pows = powers(&g, node.generator);
            for &m in &node.members {
                assert!(pows.contains(&m) || m == IDENTITY);
            }
        }
        for edge in &lg.edges {
            let (a, b) = (&lg.nodes[edge.a], &lg.nodes[edge.b]);
            let z = edge.witness;
            assert_eq!(u64::from(g.order_of(z)), a.prime * b.prime);
            let pows = powers(&g, z);
            for &m in a.members.iter().chain(&b.members) {
                assert!(
                    pows.contains(&m) || m == IDENTITY,
                    "witness {} misses {} in {}",
                    g.label(z),
                    g.label(m),
                    g.name()
                );
            }
        }
        // The headline equivalence, against a direct reachability check.
        let pg = PowerGraph::reduced(&g);
        assert_eq!(
            lg.is_connected(),
            graph::is_connected(pg.adjacency()),
            "linkage vs direct connectivity in {}",
            g.name()
        );
    }
}

/// A finite group is nilpotent exactly when every two elements of coprime
/// order commute; that pairwise scan is independent of the p-element
/// closure computation used by `is_nilpotent`.
#[test]
fn nilpotency_matches_coprime_commuting_oracle() {
    let corpus = Corpus::standard(Limits {
        max_order: 100,
        ..Limits::default()
    });
    for cg in corpus.build_groups().unwrap() {
        let g = &cg.group;
        let coprime_commuting = g.elements().all(|x| {
            g.elements().all(|y| {
                gcd(u64::from(g.order_of(x)), u64::from(g.order_of(y))) != 1
                    || g.mul(x, y) == g.mul(y, x)
            })
        });
        assert_eq!(
            g.is_nilpotent(),
            coprime_commuting,
            "nilpotency of {}",
            g.name()
        );
    }
}

#[test]
fn corpus_run_is_clean_and_witnesses_are_reasoned() {
    let corpus = Corpus::standard(Limits::default());
    let run = run_corpus(&corpus, &ClaimId::ALL).unwrap();
    assert_eq!(run.summary.fail, 0, "corpus verification reported failures");
    assert_eq!(
        run.summary.pass + run.summary.skipped,
        run.reports.len(),
        "summary accounts for every report"
    );
    for report in &run.reports {
        match &report.status {
            ClaimStatus::Pass => assert!(report.witness.is_none()),
            ClaimStatus::Fail => unreachable!("no failures expected"),
            ClaimStatus::Skipped(reason) => {
                assert!(!reason.is_empty(), "skip without a reason");
                assert_eq!(report.witness.as_deref(), Some(reason.as_str()));
            }
        }
    }
}

#[test]
fn empty_corpus_yields_empty_report() {
    let corpus = Corpus::new(Vec::new(), Limits::default());
    let run = run_corpus(&corpus, &ClaimId::ALL).unwrap();
    assert!(run.reports.is_empty());
    assert_eq!(run.summary.pass, 0);
    assert_eq!(run.summary.fail, 0);
    assert_eq!(run.summary.skipped, 0);
}
