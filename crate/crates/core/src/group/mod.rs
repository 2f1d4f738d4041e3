//! Finite groups as validated multiplication tables.
//!
//! A [`Group`] owns a flat `n x n` table over element ids `0..n`, with the
//! identity pinned at id 0. Construction validates the axioms: Latin square,
//! two-sided identity, associativity (exhaustive up to order 512, a
//! generator-based Light's test above), and two-sided inverses. Element
//! orders are computed once and cached.

pub mod families;
pub mod io;
pub mod spec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::weight::{factorize, is_prime, lcm};

/// Element id; ids are dense in `0..order` and 0 is the identity.
pub type Elem = u32;

pub const IDENTITY: Elem = 0;

/// Orders up to this bound get the exhaustive `n^3` associativity check;
/// larger tables use Light's test on a generating set.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;

/// Size caps for group construction. Caps are configuration rather than
/// hard-wired constants so callers (and the `PG_MAX_ORDER` environment
/// variable in the CLI) can widen them deliberately.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest group order direct products and imports may produce.
    pub max_order: usize,
    /// Largest degree for symmetric/alternating constructions.
    pub max_permutation_degree: u32,
    /// Largest order for elementary abelian constructions.
    pub max_elem_abelian_order: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 10_000,
            max_permutation_degree: 7,
            max_elem_abelian_order: 4096,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    order: usize,
    /// Row-major: `table[a * order + b] = a * b`.
    table: Vec<Elem>,
    inverse: Vec<Elem>,
    elem_order: Vec<u32>,
    labels: Vec<String>,
}

impl Group {
    /// Validates `rows` as a group table and builds the `Group`.
    ///
    /// If the two-sided identity sits at an id other than 0, elements are
    /// re-indexed by the swap `0 <-> e` first, and labels follow.
    pub fn from_table(name: &str, labels: Vec<String>, rows: Vec<Vec<Elem>>) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Validation {
                axiom: "shape",
                detail: "table has no rows".into(),
            });
        }
        if labels.len() != n {
            return Err(Error::Validation {
                axiom: "shape",
                detail: format!("{} labels for {} elements", labels.len(), n),
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation {
                    axiom: "shape",
                    detail: format!("row {i} has length {} (want {n})", row.len()),
                });
            }
            for &v in row {
                if v as usize >= n {
                    return Err(Error::Validation {
                        axiom: "shape",
                        detail: format!("entry {v} out of range in row {i}"),
                    });
                }
                table.push(v);
            }
        }

        let identity = find_identity(&table, n)?;
        let mut labels = labels;
        if identity != 0 {
            reindex_swap(&mut table, &mut labels, n, identity);
        }

        validate_latin(&table, n)?;
        validate_associativity(&table, n)?;
        let inverse = compute_inverses(&table, n)?;
        let elem_order = compute_orders(&table, n);

        Ok(Group {
            name: name.to_string(),
            order: n,
            table,
            inverse,
            elem_order,
            labels,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.order + b as usize]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    /// `a^k` by repeated multiplication (orders here are small).
    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        let k = k % u64::from(self.elem_order[a as usize]);
        let mut acc = IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Multiplicative order of `a`; always divides the group order.
    pub fn order_of(&self, a: Elem) -> u32 {
        self.elem_order[a as usize]
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    /// Rows of the table, for serialization.
    pub fn table_rows(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// The cyclic subgroup generated by `a`, members ascending.
    pub fn cyclic_subgroup(&self, a: Elem) -> Subgroup {
        let mut members = Vec::new();
        let mut x = IDENTITY;
        loop {
            members.push(x);
            x = self.mul(x, a);
            if x == IDENTITY {
                break;
            }
        }
        members.sort_unstable();
        Subgroup {
            members,
            generator_hint: Some(a),
        }
    }

    /// Members of the cyclic subgroup generated by `a`, as an id bit set.
    pub fn cyclic_members(&self, a: Elem) -> BitSet {
        let mut bits = BitSet::new(self.order);
        let mut x = IDENTITY;
        loop {
            bits.insert(x as usize);
            x = self.mul(x, a);
            if x == IDENTITY {
                break;
            }
        }
        bits
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.elem_order
            .iter()
            .fold(1u64, |acc, &o| lcm(acc, u64::from(o)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elem_order.iter().any(|&o| o as usize == self.order)
    }

    /// `Some(p)` when the order is a positive power of the prime `p`.
    /// The trivial group is a power of no prime, hence `None`.
    pub fn is_p_group(&self) -> Option<u64> {
        match factorize(self.order as u64).as_slice() {
            [(p, _)] => Some(*p),
            _ => None,
        }
    }

    /// Generalized quaternion: order `2^k >= 8`, not cyclic, and with a
    /// unique subgroup of order 2 (equivalently a unique involution).
    pub fn is_generalized_quaternion(&self) -> bool {
        if self.order < 8 || self.is_p_group() != Some(2) || self.is_cyclic() {
            return false;
        }
        self.elem_order.iter().filter(|&&o| o == 2).count() == 1
    }

    /// Number of subgroups of prime order `p`: elements of order `p`,
    /// divided by `p - 1` generators each.
    pub fn count_order_p_subgroups(&self, p: u64) -> usize {
        assert!(is_prime(p), "{p} is not prime");
        let elems = self
            .elem_order
            .iter()
            .filter(|&&o| u64::from(o) == p)
            .count();
        elems / (p as usize - 1)
    }

    /// True when every Sylow subgroup is normal, tested as: for each prime
    /// `p` dividing the order, the elements of `p`-power order are closed
    /// under multiplication (they then form the unique Sylow `p`-subgroup).
    pub fn is_nilpotent(&self) -> bool {
        for (p, _) in factorize(self.order as u64) {
            let members = self.p_power_elements(p);
            let mut bits = BitSet::new(self.order);
            for &x in &members {
                bits.insert(x as usize);
            }
            for &x in &members {
                for &y in &members {
                    if !bits.contains(self.mul(x, y) as usize) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn p_power_elements(&self, p: u64) -> Vec<Elem> {
        self.elements()
            .filter(|&a| {
                let mut o = u64::from(self.order_of(a));
                while o % p == 0 {
                    o /= p;
                }
                o == 1
            })
            .collect()
    }

    /// The Sylow `p`-subgroup of a nilpotent group (where it is unique:
    /// the set of elements of `p`-power order).
    ///
    /// `p` must be a prime dividing the order; non-nilpotent groups are a
    /// domain error because the Sylow subgroup is not unique there.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        if !is_prime(p) || !(self.order as u64).is_multiple_of(p) {
            return Err(Error::Usage(format!(
                "{p} is not a prime dividing the group order {}",
                self.order
            )));
        }
        if !self.is_nilpotent() {
            return Err(Error::Domain(format!(
                "{} is not nilpotent; its Sylow {p}-subgroups are not unique",
                self.name
            )));
        }
        let members = self.p_power_elements(p);
        let generator_hint = members
            .iter()
            .copied()
            .find(|&a| self.order_of(a) as usize == members.len());
        Ok(Subgroup {
            members,
            generator_hint,
        })
    }

    /// All maximal cyclic subgroups: cyclic subgroups contained in no
    /// strictly larger cyclic subgroup. Deterministic order: by size, then
    /// lexicographically by members.
    pub fn maximal_cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut distinct: Vec<(Vec<Elem>, Elem)> = Vec::new();
        'outer: for a in self.elements() {
            let sub = self.cyclic_subgroup(a);
            for (members, hint) in &mut distinct {
                if *members == sub.members {
                    *hint = (*hint).min(a);
                    continue 'outer;
                }
            }
            distinct.push((sub.members, a));
        }
        let mut maximal: Vec<(Vec<Elem>, Elem)> = distinct
            .iter()
            .filter(|(m, _)| {
                !distinct
                    .iter()
                    .any(|(other, _)| other.len() > m.len() && m.iter().all(|x| other.contains(x)))
            })
            .cloned()
            .collect();
        maximal.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        maximal
            .into_iter()
            .map(|(members, hint)| Subgroup {
                members,
                generator_hint: Some(hint),
            })
            .collect()
    }
}

/// A subgroup given by its member ids (ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<Elem>,
    generator_hint: Option<Elem>,
}

impl Subgroup {
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// A generator, when the subgroup was built from one.
    pub fn generator_hint(&self) -> Option<Elem> {
        self.generator_hint
    }

    /// Re-checks the subgroup axioms against `g`; used by verification
    /// paths that do not trust the construction.
    pub fn verify(&self, g: &Group) -> Result<()> {
        let fail = |detail: String| Err(Error::Domain(format!("not a subgroup: {detail}")));
        if !self.contains(IDENTITY) {
            return fail("identity missing".into());
        }
        if !g.order().is_multiple_of(self.size()) {
            return fail(format!(
                "size {} does not divide {}",
                self.size(),
                g.order()
            ));
        }
        for &x in &self.members {
            if !self.contains(g.inv(x)) {
                return fail(format!("inverse of {x} missing"));
            }
            for &y in &self.members {
                if !self.contains(g.mul(x, y)) {
                    return fail(format!("product of {x} and {y} missing"));
                }
            }
        }
        Ok(())
    }
}

fn find_identity(table: &[Elem], n: usize) -> Result<Elem> {
    for e in 0..n {
        let row_ok = (0..n).all(|j| table[e * n + j] as usize == j);
        let col_ok = (0..n).all(|j| table[j * n + e] as usize == j);
        if row_ok && col_ok {
            return Ok(e as Elem);
        }
    }
    Err(Error::Validation {
        axiom: "identity",
        detail: "no two-sided identity element".into(),
    })
}

/// Swaps ids `0 <-> e` throughout the table and labels.
fn reindex_swap(table: &mut [Elem], labels: &mut [String], n: usize, e: Elem) {
    let map = |x: Elem| {
        if x == e {
            0
        } else if x == 0 {
            e
        } else {
            x
        }
    };
    let old = table.to_vec();
    for a in 0..n {
        for b in 0..n {
            let (pa, pb) = (map(a as Elem) as usize, map(b as Elem) as usize);
            table[a * n + b] = map(old[pa * n + pb]);
        }
    }
    labels.swap(0, e as usize);
}

fn validate_latin(table: &[Elem], n: usize) -> Result<()> {
    for i in 0..n {
        let mut row_seen = vec![false; n];
        let mut col_seen = vec![false; n];
        for j in 0..n {
            let r = table[i * n + j] as usize;
            let c = table[j * n + i] as usize;
            if row_seen[r] {
                return Err(Error::Validation {
                    axiom: "latin",
                    detail: format!("row {i} repeats element {r}"),
                });
            }
            if col_seen[c] {
                return Err(Error::Validation {
                    axiom: "latin",
                    detail: format!("column {i} repeats element {c}"),
                });
            }
            row_seen[r] = true;
            col_seen[c] = true;
        }
    }
    Ok(())
}

fn validate_associativity(table: &[Elem], n: usize) -> Result<()> {
    if n <= EXHAUSTIVE_ASSOC_LIMIT {
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b] as usize;
                for c in 0..n {
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(Error::Validation {
                            axiom: "associativity",
                            detail: format!("({a}*{b})*{c} != {a}*({b}*{c})"),
                        });
                    }
                }
            }
        }
        return Ok(());
    }
    // Light's test: associativity for all triples follows from associativity
    // of (a, b, s) over a generating set s, by induction on word length.
    let gens = greedy_generating_set(table, n);
    for &s in &gens {
        for a in 0..n {
            for b in 0..n {
                let bs = table[b * n + s] as usize;
                let ab = table[a * n + b] as usize;
                if table[a * n + bs] != table[ab * n + s] {
                    return Err(Error::Validation {
                        axiom: "associativity",
                        detail: format!("({a}*{b})*{s} != {a}*({b}*{s})"),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Greedily picks elements outside the closure so far; the result generates
/// the whole table under its (not yet verified) operation.
fn greedy_generating_set(table: &[Elem], n: usize) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closure = BitSet::new(n);
    closure.insert(0);
    let mut members = vec![0usize];
    while members.len() < n {
        let g = (0..n)
            .find(|&i| !closure.contains(i))
            .expect("closure incomplete");
        gens.push(g);
        closure.insert(g);
        members.push(g);
        let mut frontier = vec![g];
        while let Some(x) = frontier.pop() {
            for i in 0..members.len() {
                let y = members[i];
                for z in [table[x * n + y] as usize, table[y * n + x] as usize] {
                    if !closure.contains(z) {
                        closure.insert(z);
                        members.push(z);
                        frontier.push(z);
                    }
                }
            }
        }
    }
    gens
}

fn compute_inverses(table: &[Elem], n: usize) -> Result<Vec<Elem>> {
    let mut inverse = vec![0 as Elem; n];
    for a in 0..n {
        let b = (0..n)
            .find(|&b| table[a * n + b] == IDENTITY)
            .expect("latin row contains identity");
        if table[b * n + a] != IDENTITY {
            return Err(Error::Validation {
                axiom: "inverses",
                detail: format!("right inverse {b} of {a} is not a left inverse"),
            });
        }
        inverse[a] = b as Elem;
    }
    Ok(inverse)
}

fn compute_orders(table: &[Elem], n: usize) -> Vec<u32> {
    let mut orders = vec![0u32; n];
    for a in 0..n {
        let mut x = a as Elem;
        let mut o = 1u32;
        while x != IDENTITY {
            x = table[x as usize * n + a];
            o += 1;
        }
        debug_assert_eq!(n as u32 % o, 0, "element order must divide group order");
        orders[a] = o;
    }
    orders
}
