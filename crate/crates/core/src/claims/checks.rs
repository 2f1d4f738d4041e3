//! The individual claim checkers. Each one recomputes both sides of its
//! statement from scratch — graph side by exact algorithms, structure side
//! by the group predicates — and reports the first discrepancy it finds.

use std::collections::BTreeSet;

use super::{ClaimId, CorpusGroup};
use crate::error::Error;
use crate::graph::{self, Diameter};
use crate::group::spec::{Family, GroupSpec};
use crate::group::{Elem, Group, Subgroup};
use crate::powergraph::{build_linkage_graph, PowerGraph};
use crate::weight::{divisors, enumerate_mcd_sets, factorize, gcd, weight, McdSet};

pub(super) enum Check {
    Pass,
    Fail(String),
    Skip(String),
}

fn iff(lhs: bool, rhs: bool, witness: impl FnOnce() -> String) -> Check {
    if lhs == rhs {
        Check::Pass
    } else {
        Check::Fail(witness())
    }
}

pub(super) fn run_check(claim: ClaimId, cg: &CorpusGroup) -> Check {
    let g = &cg.group;
    match claim {
        ClaimId::ObsNbhd => obs_nbhd(g),
        ClaimId::ObsComplete => obs_complete(g),
        ClaimId::LemLinkage => lem_linkage(g),
        ClaimId::ObsUniqueP => obs_unique_p(g),
        ClaimId::CorPgrpConn => cor_pgrp_conn(g),
        ClaimId::CorComponents => cor_components(g),
        ClaimId::PropCoprime => prop_coprime(cg),
        ClaimId::PropNpp => prop_npp(cg),
        ClaimId::ThmNilpConn => thm_nilp_conn(g),
        ClaimId::Diam1 => diam_1(g),
        ClaimId::Diam2 => diam_2(g),
        ClaimId::Diam4 => diam_4(g),
        ClaimId::ExQn3 => ex_qn_3(cg),
        ClaimId::LemMcd => lem_mcd(g),
        ClaimId::LemCliqueCyc => lem_clique_cyc(g),
        ClaimId::ThmClique => thm_clique(g),
        ClaimId::CorCliqueNilp => cor_clique_nilp(g),
    }
}

/// Generators of one cyclic subgroup have identical closed neighborhoods:
/// `N[a] = N[a^m]` whenever `gcd(m, o(a)) = 1`.
fn obs_nbhd(g: &Group) -> Check {
    let pg = PowerGraph::reduced(g);
    for v in 0..pg.vertex_count() {
        let a = pg.element(v);
        let o = u64::from(g.order_of(a));
        let nbhd = pg.closed_neighborhood(v);
        for m in 2..o {
            if gcd(m, o) != 1 {
                continue;
            }
            let b = g.pow(a, m);
            let u = pg.position_of(b).expect("co-generator is a vertex");
            if pg.closed_neighborhood(u) != nbhd {
                return Check::Fail(format!(
                    "N[{}] differs from N[{}] = N[{}^{m}]",
                    g.label(a),
                    g.label(b),
                    g.label(a),
                ));
            }
        }
    }
    Check::Pass
}

/// The full power graph is complete exactly for cyclic groups of prime
/// power order.
fn obs_complete(g: &Group) -> Check {
    if g.order() < 2 {
        return Check::Skip("one vertex is trivially complete".into());
    }
    let pg = PowerGraph::full(g);
    let complete = graph::is_complete(pg.adjacency());
    let cyclic_pp = g.is_cyclic() && g.is_p_group().is_some();
    iff(complete, cyclic_pp, || {
        format!("complete = {complete} but cyclic-prime-power = {cyclic_pp}")
    })
}

/// Connectivity of the reduced power graph coincides with connectivity of
/// the linkage graph on prime-order subgroups.
fn lem_linkage(g: &Group) -> Check {
    let pg = PowerGraph::reduced(g);
    let direct = graph::is_connected(pg.adjacency());
    let linked = build_linkage_graph(g).is_connected();
    iff(direct, linked, || {
        format!("graph connected = {direct} but linkage connected = {linked}")
    })
}

/// A p-group has a unique subgroup of order p exactly when it is cyclic or
/// generalized quaternion.
fn obs_unique_p(g: &Group) -> Check {
    let Some(p) = g.is_p_group() else {
        return Check::Skip("not a p-group".into());
    };
    let unique = g.count_order_p_subgroups(p) == 1;
    let shape = g.is_cyclic() || g.is_generalized_quaternion();
    iff(unique, shape, || {
        format!(
            "{} subgroups of order {p} but cyclic-or-quaternion = {shape}",
            g.count_order_p_subgroups(p)
        )
    })
}

/// For p-groups: the reduced power graph is connected exactly when the
/// group is cyclic or generalized quaternion.
fn cor_pgrp_conn(g: &Group) -> Check {
    if g.is_p_group().is_none() {
        return Check::Skip("not a p-group".into());
    }
    let pg = PowerGraph::reduced(g);
    let connected = graph::is_connected(pg.adjacency());
    let shape = g.is_cyclic() || g.is_generalized_quaternion();
    iff(connected, shape, || {
        format!("connected = {connected} but cyclic-or-quaternion = {shape}")
    })
}

/// For p-groups: one component per subgroup of order p.
fn cor_components(g: &Group) -> Check {
    let Some(p) = g.is_p_group() else {
        return Check::Skip("not a p-group".into());
    };
    let pg = PowerGraph::reduced(g);
    let components = graph::connected_components(pg.adjacency()).count;
    let subgroups = g.count_order_p_subgroups(p);
    iff(components == subgroups, true, || {
        format!("{components} components but {subgroups} subgroups of order {p}")
    })
}

/// Orders of the two sides of a product split, by spec, without building.
fn split_orders(factors: &[GroupSpec], mask: u32) -> (u64, u64) {
    let mut a = 1u64;
    let mut b = 1u64;
    for (i, f) in factors.iter().enumerate() {
        if mask >> i & 1 == 1 {
            a = a.saturating_mul(f.order());
        } else {
            b = b.saturating_mul(f.order());
        }
    }
    (a, b)
}

/// A direct product with a nontrivial coprime split has a connected
/// reduced power graph.
fn prop_coprime(cg: &CorpusGroup) -> Check {
    let GroupSpec::Product(factors) = &cg.spec else {
        return Check::Skip("not a direct product".into());
    };
    let splits = 1u32..(1 << factors.len()) - 1;
    let coprime = splits.clone().any(|mask| {
        let (a, b) = split_orders(factors, mask);
        a > 1 && b > 1 && gcd(a, b) == 1
    });
    if !coprime {
        return Check::Skip("no coprime split of the factors".into());
    }
    let pg = PowerGraph::reduced(&cg.group);
    iff(graph::is_connected(pg.adjacency()), true, || {
        "disconnected despite a coprime factor split".into()
    })
}

/// If one side of a product split has connected reduced power graph and
/// non-prime-power order, the whole product stays connected.
fn prop_npp(cg: &CorpusGroup) -> Check {
    let GroupSpec::Product(factors) = &cg.spec else {
        return Check::Skip("not a direct product".into());
    };
    let mut applicable = false;
    for mask in 1u32..(1 << factors.len()) - 1 {
        let (side_order, _) = split_orders(factors, mask);
        if factorize(side_order).len() < 2 {
            continue; // prime power or trivial side
        }
        let side: Vec<GroupSpec> = factors
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, f)| f.clone())
            .collect();
        let side_spec = if side.len() == 1 {
            side.into_iter().next().expect("nonempty side")
        } else {
            GroupSpec::Product(side)
        };
        let side_group = match side_spec.build() {
            Ok(g) => g,
            Err(_) => continue,
        };
        let side_pg = PowerGraph::reduced(&side_group);
        if graph::is_connected(side_pg.adjacency()) {
            applicable = true;
            break;
        }
    }
    if !applicable {
        return Check::Skip("no connected factor side of non-prime-power order".into());
    }
    let pg = PowerGraph::reduced(&cg.group);
    iff(graph::is_connected(pg.adjacency()), true, || {
        "disconnected despite a connected non-prime-power factor".into()
    })
}

/// Nilpotent groups: connected exactly when cyclic, generalized
/// quaternion, or of order divisible by at least two primes.
fn thm_nilp_conn(g: &Group) -> Check {
    if !g.is_nilpotent() {
        return Check::Skip("not nilpotent".into());
    }
    let pg = PowerGraph::reduced(g);
    let connected = graph::is_connected(pg.adjacency());
    let shape = g.is_cyclic() || g.is_generalized_quaternion() || g.is_p_group().is_none();
    iff(connected, shape, || {
        format!("connected = {connected} but trichotomy = {shape}")
    })
}

fn reduced_diameter(g: &Group) -> Diameter {
    let pg = PowerGraph::reduced(g);
    graph::diameter(pg.adjacency()).diameter
}

/// Diameter 1 exactly for cyclic p-groups of order at least 3 (smaller
/// orders leave fewer than two vertices, diameter 0).
fn diam_1(g: &Group) -> Check {
    let d = reduced_diameter(g);
    let lhs = d == Diameter::Finite(1);
    let rhs = g.is_cyclic() && g.is_p_group().is_some() && g.order() >= 3;
    iff(lhs, rhs, || {
        format!("diameter = {d:?} but cyclic-prime-power-of-order-3+ = {rhs}")
    })
}

fn sylow_cyclic_or_quaternion(g: &Group, sylow: &Subgroup) -> bool {
    let size = sylow.size();
    let cyclic = sylow
        .members()
        .iter()
        .any(|&a| g.order_of(a) as usize == size);
    if cyclic {
        return true;
    }
    let involutions = sylow
        .members()
        .iter()
        .filter(|&&a| g.order_of(a) == 2)
        .count();
    size >= 8 && size.is_power_of_two() && involutions == 1
}

/// The diameter-2 shape: cyclic of non-prime-power order, or nilpotent
/// with every Sylow subgroup cyclic or generalized quaternion — excluding
/// the cyclic p-groups, whose reduced power graph is complete.
fn diam_2_shape(g: &Group) -> bool {
    let cyclic_pp = g.is_cyclic() && g.is_p_group().is_some();
    if cyclic_pp {
        return false;
    }
    if g.is_cyclic() {
        return true;
    }
    g.is_nilpotent()
        && factorize(g.order() as u64).iter().all(|&(p, _)| {
            let sylow = g
                .sylow_subgroup(p)
                .expect("nilpotent group has unique Sylows");
            sylow_cyclic_or_quaternion(g, &sylow)
        })
}

fn diam_2(g: &Group) -> Check {
    if g.order() < 3 {
        return Check::Skip("fewer than two vertices".into());
    }
    let d = reduced_diameter(g);
    let lhs = d == Diameter::Finite(2);
    let rhs = diam_2_shape(g);
    iff(lhs, rhs, || {
        format!("diameter = {d:?} but diameter-2 shape = {rhs}")
    })
}

/// Nilpotent connected graphs beyond the diameter-1 and diameter-2 shapes
/// land on diameter exactly 4 — never 3.
fn diam_4(g: &Group) -> Check {
    if !g.is_nilpotent() {
        return Check::Skip("not nilpotent".into());
    }
    match reduced_diameter(g) {
        Diameter::Disconnected => Check::Skip("reduced power graph is disconnected".into()),
        Diameter::Finite(d) if d <= 2 => {
            Check::Skip(format!("diameter {d} belongs to the smaller cases"))
        }
        Diameter::Finite(d) => iff(d == 4, true, || format!("diameter = {d}, want 4")),
    }
}

/// Dicyclic groups of odd parameter have diameter exactly 3.
fn ex_qn_3(cg: &CorpusGroup) -> Check {
    let GroupSpec::Atom(Family::Dicyclic(n)) = &cg.spec else {
        return Check::Skip("not a dicyclic group".into());
    };
    if n % 2 == 0 {
        return Check::Skip("dicyclic parameter is even".into());
    }
    let d = reduced_diameter(&cg.group);
    iff(d == Diameter::Finite(3), true, || {
        format!("diameter = {d:?}, want 3")
    })
}

/// Definition-level enumeration of maximal divisor chains: all chains of
/// divisors `> 1` of `n`, kept when no divisor of `n` extends them. Used
/// as the independent reference for LEM-MCD.
fn maximal_chains_by_definition(n: u64) -> Vec<Vec<u64>> {
    let divs: Vec<u64> = divisors(n).into_iter().filter(|&d| d > 1).collect();
    fn go(start: usize, divs: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if !cur.is_empty() {
            let extendable = divs
                .iter()
                .any(|&e| !cur.contains(&e) && cur.iter().all(|&d| d % e == 0 || e % d == 0));
            if !extendable {
                out.push(cur.clone());
            }
        }
        for i in start..divs.len() {
            if cur.last().is_none_or(|&l| divs[i].is_multiple_of(l)) {
                cur.push(divs[i]);
                go(i + 1, divs, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(0, &divs, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The chain enumerator agrees with lattice maximality for every element
/// order and for the group order itself.
fn lem_mcd(g: &Group) -> Check {
    let mut orders: BTreeSet<u64> = g
        .elements()
        .map(|a| u64::from(g.order_of(a)))
        .filter(|&o| o >= 2)
        .collect();
    if g.order() >= 2 {
        orders.insert(g.order() as u64);
    }
    for n in orders {
        let enumerated: Vec<Vec<u64>> = match enumerate_mcd_sets(n) {
            Ok(sets) => sets.iter().map(|s| s.chain().to_vec()).collect(),
            Err(e) => return Check::Skip(format!("enumeration capped: {e}")),
        };
        let by_definition = maximal_chains_by_definition(n);
        if enumerated != by_definition {
            return Check::Fail(format!(
                "chains of {n}: enumerated {enumerated:?} vs definition {by_definition:?}"
            ));
        }
    }
    Check::Pass
}

/// Every maximal clique of the reduced power graph sits inside a maximal
/// cyclic subgroup, generated by its element of largest order, and its
/// member orders form a maximal divisor chain of that largest order.
fn lem_clique_cyc(g: &Group) -> Check {
    if g.order() > 60 {
        return Check::Skip("order above the exhaustive enumeration bound of 60".into());
    }
    let pg = PowerGraph::reduced(g);
    let cliques = graph::maximal_cliques(pg.adjacency(), 1_000_000);
    if cliques.truncated {
        return Check::Skip("maximal clique enumeration truncated".into());
    }
    let maximal_cyclic: Vec<Vec<Elem>> = g
        .maximal_cyclic_subgroups()
        .into_iter()
        .map(|s| s.members().to_vec())
        .collect();
    for clique in &cliques.cliques {
        let members: Vec<Elem> = clique.iter().map(|&v| pg.element(v)).collect();
        let &top = members
            .iter()
            .max_by_key(|&&x| (g.order_of(x), std::cmp::Reverse(x)))
            .expect("cliques are nonempty");
        let hull = g.cyclic_subgroup(top);
        let labels = || {
            members
                .iter()
                .map(|&x| g.label(x).to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        if let Some(&outside) = members.iter().find(|&&x| !hull.contains(x)) {
            return Check::Fail(format!(
                "clique {{{}}} leaves <{}> at {}",
                labels(),
                g.label(top),
                g.label(outside)
            ));
        }
        if !maximal_cyclic.contains(&hull.members().to_vec()) {
            return Check::Fail(format!(
                "<{}> containing clique {{{}}} is not maximal cyclic",
                g.label(top),
                labels()
            ));
        }
        let chain: Vec<u64> = members
            .iter()
            .map(|&x| u64::from(g.order_of(x)))
            .collect::<BTreeSet<u64>>()
            .into_iter()
            .collect();
        if McdSet::new(u64::from(g.order_of(top)), chain.clone()).is_err() {
            return Check::Fail(format!(
                "orders {chain:?} of clique {{{}}} are not a maximal divisor chain of {}",
                labels(),
                g.order_of(top)
            ));
        }
    }
    Check::Pass
}

/// The clique number of the reduced power graph equals the weight formula
/// `max over a of weight(o(a))`, and the full graph exceeds it by exactly
/// one (the identity).
fn thm_clique(g: &Group) -> Check {
    let orders: BTreeSet<u64> = g.elements().map(|a| u64::from(g.order_of(a))).collect();
    let formula = orders
        .into_iter()
        .map(weight)
        .max()
        .expect("group is nonempty");
    let reduced = PowerGraph::reduced(g);
    let exact_reduced = match graph::clique_number_exact(reduced.adjacency()) {
        Ok(w) => w as u64,
        Err(Error::Resource(msg)) => return Check::Skip(msg),
        Err(e) => return Check::Fail(format!("clique solver: {e}")),
    };
    let full = PowerGraph::full(g);
    let exact_full = match graph::clique_number_exact(full.adjacency()) {
        Ok(w) => w as u64,
        Err(Error::Resource(msg)) => return Check::Skip(msg),
        Err(e) => return Check::Fail(format!("clique solver: {e}")),
    };
    if exact_reduced != formula || exact_full != exact_reduced + 1 {
        return Check::Fail(format!(
            "reduced = {exact_reduced}, full = {exact_full}, weight formula = {formula}"
        ));
    }
    Check::Pass
}

/// For nilpotent groups the clique number collapses to the weight of the
/// group exponent.
fn cor_clique_nilp(g: &Group) -> Check {
    if !g.is_nilpotent() {
        return Check::Skip("not nilpotent".into());
    }
    let pg = PowerGraph::reduced(g);
    let exact = match graph::clique_number_exact(pg.adjacency()) {
        Ok(w) => w as u64,
        Err(Error::Resource(msg)) => return Check::Skip(msg),
        Err(e) => return Check::Fail(format!("clique solver: {e}")),
    };
    let expected = weight(g.exponent());
    iff(exact == expected, true, || {
        format!(
            "clique number {exact} but weight(exponent {}) = {expected}",
            g.exponent()
        )
    })
}
