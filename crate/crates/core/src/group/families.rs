//! Constructors for the standard families, all funneled through full table
//! validation.
//!
//! Conventions: the identity is always id 0. Cyclic groups list powers of
//! the generator in order. Permutation groups list permutations
//! lexicographically (so the identity permutation comes first) and multiply
//! right-to-left: `(s*t)(x) = s(t(x))`. The dicyclic group of parameter `n`
//! has order `4n`, rotations `a^i` at ids `0..2n` and `a^i b` at `2n + i`;
//! `b^2 = a^n` and `b a = a^(-1) b`. This family doubles as the generalized
//! quaternion groups when `n` is a power of 2 (`Q8` is parameter 2).

use itertools::Itertools;

use super::{Elem, Group, Limits};
use crate::error::{Error, Result};
use crate::weight::{is_prime, lcm};

pub fn make_cyclic(n: u32) -> Result<Group> {
    make_cyclic_limited(n, &Limits::default())
}

pub fn make_dihedral(n: u32) -> Result<Group> {
    make_dihedral_limited(n, &Limits::default())
}

pub fn make_symmetric(degree: u32) -> Result<Group> {
    make_symmetric_limited(degree, &Limits::default())
}

pub fn make_alternating(degree: u32) -> Result<Group> {
    make_alternating_limited(degree, &Limits::default())
}

pub fn make_dicyclic(n: u32) -> Result<Group> {
    make_dicyclic_limited(n, &Limits::default())
}

pub fn make_elem_abelian(p: u32, k: u32) -> Result<Group> {
    make_elem_abelian_limited(p, k, &Limits::default())
}

pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
    direct_product_limited(g, h, &Limits::default())
}

fn check_order_cap(order: u64, limits: &Limits) -> Result<usize> {
    if order > limits.max_order as u64 {
        return Err(Error::Resource(format!(
            "group order {order} exceeds the cap of {}",
            limits.max_order
        )));
    }
    Ok(order as usize)
}

pub(crate) fn make_cyclic_limited(n: u32, limits: &Limits) -> Result<Group> {
    if n < 1 {
        return Err(Error::Usage("cyclic groups need n >= 1".into()));
    }
    let n = check_order_cap(u64::from(n), limits)?;
    let labels = (0..n).map(|i| power_label("a", i)).collect();
    build_from_op(&format!("C{n}"), labels, n, |a, b| (a + b) % n)
}

pub(crate) fn make_dihedral_limited(n: u32, limits: &Limits) -> Result<Group> {
    if n < 3 {
        return Err(Error::Usage("dihedral groups need n >= 3".into()));
    }
    let n = u64::from(n);
    let order = check_order_cap(2 * n, limits)?;
    let n = n as usize;
    let labels = (0..2 * n)
        .map(|i| {
            if i < n {
                power_label("r", i)
            } else if i == n {
                "s".to_string()
            } else {
                format!("s {}", power_label("r", i - n))
            }
        })
        .collect();
    // Encode r^k as k and s r^k as n + k; r^k s = s r^(-k).
    build_from_op(&format!("D{n}"), labels, order, move |x, y| {
        let (e1, k1) = (x / n, x % n);
        let (e2, k2) = (y / n, y % n);
        match e2 {
            0 => e1 * n + (k1 + k2) % n,
            _ => (1 - e1) * n + (n + k2 - k1) % n,
        }
    })
}

pub(crate) fn make_dicyclic_limited(n: u32, limits: &Limits) -> Result<Group> {
    if n < 2 {
        return Err(Error::Usage("dicyclic groups need n >= 2".into()));
    }
    let order = check_order_cap(4 * u64::from(n), limits)?;
    let n = n as usize;
    let two_n = 2 * n;
    let labels = (0..order)
        .map(|i| {
            if i < two_n {
                power_label("a", i)
            } else if i == two_n {
                "b".to_string()
            } else {
                format!("{} b", power_label("a", i - two_n))
            }
        })
        .collect();
    build_from_op(&format!("Dic{n}"), labels, order, move |x, y| {
        let (j1, i1) = (x / two_n, x % two_n);
        let (j2, i2) = (y / two_n, y % two_n);
        match (j1, j2) {
            (0, 0) => (i1 + i2) % two_n,
            (0, 1) => two_n + (i1 + i2) % two_n,
            (1, 0) => two_n + (two_n + i1 - i2) % two_n,
            _ => (two_n + i1 - i2 + n) % two_n,
        }
    })
}

pub(crate) fn make_symmetric_limited(degree: u32, limits: &Limits) -> Result<Group> {
    check_degree(degree, limits)?;
    let perms: Vec<Vec<u8>> = (0..degree as u8).permutations(degree as usize).collect();
    build_permutation_group(&format!("S{degree}"), perms, limits)
}

pub(crate) fn make_alternating_limited(degree: u32, limits: &Limits) -> Result<Group> {
    check_degree(degree, limits)?;
    let perms: Vec<Vec<u8>> = (0..degree as u8)
        .permutations(degree as usize)
        .filter(|p| parity(p) == 0)
        .collect();
    build_permutation_group(&format!("A{degree}"), perms, limits)
}

fn check_degree(degree: u32, limits: &Limits) -> Result<()> {
    if degree < 1 || degree > limits.max_permutation_degree {
        return Err(Error::Usage(format!(
            "permutation degree must be in 1..={}",
            limits.max_permutation_degree
        )));
    }
    Ok(())
}

fn build_permutation_group(name: &str, mut perms: Vec<Vec<u8>>, limits: &Limits) -> Result<Group> {
    let n = check_order_cap(perms.len() as u64, limits)?;
    // Lexicographic order puts the identity permutation first.
    perms.sort_unstable();
    debug_assert!(perms[0].iter().enumerate().all(|(i, &v)| i == v as usize));
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    let index_of = |p: &[u8]| {
        perms
            .binary_search_by(|q| q.as_slice().cmp(p))
            .expect("composition stays in the group")
    };
    let mut rows = Vec::with_capacity(n);
    for s in &perms {
        let mut row = Vec::with_capacity(n);
        for t in &perms {
            let composed: Vec<u8> = (0..s.len()).map(|x| s[t[x] as usize]).collect();
            row.push(index_of(&composed) as Elem);
        }
        rows.push(row);
    }
    Group::from_table(name, labels, rows)
}

/// Number of inversions mod 2.
fn parity(p: &[u8]) -> u8 {
    let mut inv = 0u32;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    (inv % 2) as u8
}

/// Cycle notation on points `1..=degree`, fixed points omitted; the
/// identity is labeled `e`. Degrees stay below 10 so points need one digit.
fn cycle_label(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut j = start;
        loop {
            seen[j] = true;
            out.push_str(&(j + 1).to_string());
            j = p[j] as usize;
            if j == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

pub(crate) fn make_elem_abelian_limited(p: u32, k: u32, limits: &Limits) -> Result<Group> {
    if !is_prime(u64::from(p)) {
        return Err(Error::Usage(format!("{p} is not prime")));
    }
    if k < 1 {
        return Err(Error::Usage("elementary abelian groups need k >= 1".into()));
    }
    let order = (1..=k).try_fold(1u64, |acc, _| {
        let next = acc.checked_mul(u64::from(p))?;
        (next <= limits.max_elem_abelian_order).then_some(next)
    });
    let Some(order) = order else {
        return Err(Error::Resource(format!(
            "elementary abelian order {p}^{k} exceeds the cap of {}",
            limits.max_elem_abelian_order
        )));
    };
    let order = check_order_cap(order, limits)?;
    let p = p as usize;
    let k = k as usize;
    let digits = |mut x: usize| -> Vec<usize> {
        (0..k)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let labels = (0..order)
        .map(|i| {
            if i == 0 {
                "e".to_string()
            } else {
                let ds: Vec<String> = digits(i).iter().map(usize::to_string).collect();
                format!("({})", ds.join(","))
            }
        })
        .collect();
    build_from_op(&format!("E{p}^{k}"), labels, order, move |a, b| {
        let (da, db) = (digits(a), digits(b));
        let mut out = 0;
        for i in (0..k).rev() {
            out = out * p + (da[i] + db[i]) % p;
        }
        out
    })
}

pub(crate) fn direct_product_limited(g: &Group, h: &Group, limits: &Limits) -> Result<Group> {
    let order = check_order_cap(g.order() as u64 * h.order() as u64, limits)?;
    let hn = h.order();
    let labels = (0..order)
        .map(|i| {
            format!(
                "({},{})",
                g.label((i / hn) as Elem),
                h.label((i % hn) as Elem)
            )
        })
        .collect();
    let name = format!("{}x{}", g.name(), h.name());
    let prod = build_from_op(&name, labels, order, |x, y| {
        let gp = g.mul((x / hn) as Elem, (y / hn) as Elem) as usize;
        let hp = h.mul((x % hn) as Elem, (y % hn) as Elem) as usize;
        gp * hn + hp
    })?;
    for x in prod.elements() {
        let (a, b) = ((x as usize / hn) as Elem, (x as usize % hn) as Elem);
        assert_eq!(
            u64::from(prod.order_of(x)),
            lcm(u64::from(g.order_of(a)), u64::from(h.order_of(b))),
            "component order law failed at ({a},{b})"
        );
    }
    Ok(prod)
}

fn power_label(base: &str, i: usize) -> String {
    match i {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{i}"),
    }
}

fn build_from_op(
    name: &str,
    labels: Vec<String>,
    n: usize,
    op: impl Fn(usize, usize) -> usize,
) -> Result<Group> {
    let rows: Vec<Vec<Elem>> = (0..n)
        .map(|a| (0..n).map(|b| op(a, b) as Elem).collect())
        .collect();
    Group::from_table(name, labels, rows)
}
