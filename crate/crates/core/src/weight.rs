//! Divisor chains and the totient-weight function.
//!
//! A *maximal chain of divisors* of `n` is an ascending chain of divisors
//! `d1 | d2 | .. | dt` with `d1` prime, `dt = n`, and every consecutive ratio
//! prime; these are exactly the chains of divisors `> 1` that cannot be
//! extended by any further divisor of `n`. The weight of a chain is the sum
//! of Euler's phi over its members, and `weight(n)` is the maximum over all
//! such chains. That maximum is what the clique-number formula consumes.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, multiplicity)` pairs, ascending.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize(0) is undefined");
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors(0) is undefined");
    let mut out = vec![1];
    for (p, k) in factorize(n) {
        let prev = out.clone();
        let mut pe = 1;
        for _ in 0..k {
            pe *= p;
            out.extend(prev.iter().map(|d| d * pe));
        }
    }
    out.sort_unstable();
    out
}

fn phi(n: u64) -> u64 {
    let mut out = n;
    for (p, _) in factorize(n) {
        out = out / p * (p - 1);
    }
    out
}

/// Euler's totient. `n = 0` is a usage error.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Usage("euler_phi(0) is undefined".into()));
    }
    Ok(phi(n))
}

/// Enumeration cap for [`enumerate_mcd_sets`]; the count for `n` is the
/// number of orderings of its prime multiset, which explodes only for inputs
/// far outside group-order territory.
pub const MAX_MCD_SETS: usize = 1_000_000;

/// A maximal chain of divisors of `n`, with its totient weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McdSet {
    n: u64,
    chain: Vec<u64>,
    weight: u64,
}

impl McdSet {
    /// Validates the chain: ascending divisors of `n` starting at a prime,
    /// ending at `n`, with every consecutive ratio prime.
    pub fn new(n: u64, chain: Vec<u64>) -> Result<Self> {
        let fail = |detail: String| {
            Err(Error::Usage(format!(
                "not a maximal divisor chain of {n}: {detail}"
            )))
        };
        if n < 2 {
            return fail("n must be at least 2".into());
        }
        let Some((&first, &last)) = chain.first().zip(chain.last()) else {
            return fail("chain is empty".into());
        };
        if !is_prime(first) {
            return fail(format!("first entry {first} is not prime"));
        }
        if last != n {
            return fail(format!("last entry {last} is not {n}"));
        }
        for w in chain.windows(2) {
            if w[1] % w[0] != 0 || !is_prime(w[1] / w[0]) {
                return fail(format!("ratio {} -> {} is not prime", w[0], w[1]));
            }
        }
        let weight = chain.iter().map(|&d| phi(d)).sum();
        Ok(McdSet { n, chain, weight })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn chain(&self) -> &[u64] {
        &self.chain
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }
}

/// All maximal chains of divisors of `n`, in lexicographic chain order.
///
/// `n = 1` has none (there are no divisors `> 1`); `n = 0` is a usage error.
pub fn enumerate_mcd_sets(n: u64) -> Result<Vec<McdSet>> {
    if n == 0 {
        return Err(Error::Usage("there are no divisor chains of 0".into()));
    }
    let mut out = Vec::new();
    if n == 1 {
        return Ok(out);
    }
    let mut chain = Vec::new();
    descend(1, n, &mut chain, &mut out)?;
    Ok(out)
}

fn descend(d: u64, n: u64, chain: &mut Vec<u64>, out: &mut Vec<McdSet>) -> Result<()> {
    if d == n {
        if out.len() == MAX_MCD_SETS {
            return Err(Error::Resource(format!(
                "more than {MAX_MCD_SETS} maximal divisor chains for {n}"
            )));
        }
        out.push(McdSet::new(n, chain.clone())?);
        return Ok(());
    }
    // Extending by each prime of the remaining cofactor, smallest first,
    // emits chains in lexicographic order.
    for (p, _) in factorize(n / d) {
        chain.push(d * p);
        descend(d * p, n, chain, out)?;
        chain.pop();
    }
    Ok(())
}

/// Maximum totient weight over all maximal divisor chains of `n`.
///
/// Computed by the recurrence `weight(1) = 0`,
/// `weight(n) = phi(n) + max { weight(n/p) : p prime, p | n }`, which avoids
/// enumerating chains.
pub fn weight(n: u64) -> u64 {
    assert!(n >= 1, "weight(0) is undefined");
    fn go(n: u64, memo: &mut HashMap<u64, u64>) -> u64 {
        if n == 1 {
            return 0;
        }
        if let Some(&w) = memo.get(&n) {
            return w;
        }
        let best = factorize(n)
            .iter()
            .map(|&(p, _)| go(n / p, memo))
            .max()
            .expect("n > 1 has a prime factor");
        let w = phi(n) + best;
        memo.insert(n, w);
        w
    }
    go(n, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_phi_values() {
        let want = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1).unwrap(), *w);
        }
        assert!(euler_phi(0).is_err());
    }

    #[test]
    fn divisors_of_twelve() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn factorize_roundtrip() {
        for n in 1..500u64 {
            let prod: u64 = factorize(n).iter().map(|&(p, k)| p.pow(k)).product();
            assert_eq!(prod, n);
            assert!(factorize(n).iter().all(|&(p, _)| is_prime(p)));
        }
    }

    #[test]
    fn chains_of_twelve() {
        let sets = enumerate_mcd_sets(12).unwrap();
        let chains: Vec<&[u64]> = sets.iter().map(|s| s.chain()).collect();
        assert_eq!(chains, vec![&[2, 4, 12][..], &[2, 6, 12], &[3, 6, 12]]);
        assert_eq!(
            sets.iter().map(McdSet::weight).collect::<Vec<_>>(),
            vec![7, 7, 8]
        );
        assert_eq!(weight(12), 8);
    }

    #[test]
    fn chains_of_prime_powers_are_unique() {
        for (n, chain) in [(8u64, vec![2u64, 4, 8]), (7, vec![7]), (25, vec![5, 25])] {
            let sets = enumerate_mcd_sets(n).unwrap();
            assert_eq!(sets.len(), 1);
            assert_eq!(sets[0].chain(), chain);
        }
        // weight(p^k) = p^k - 1: the phi values telescope.
        for n in [2u64, 4, 8, 16, 32, 9, 27, 125] {
            assert_eq!(weight(n), n - 1);
        }
    }

    #[test]
    fn one_has_no_chains_and_weight_zero() {
        assert!(enumerate_mcd_sets(1).unwrap().is_empty());
        assert_eq!(weight(1), 0);
        assert!(enumerate_mcd_sets(0).is_err());
    }

    #[test]
    fn rejects_malformed_chains() {
        assert!(McdSet::new(12, vec![]).is_err());
        assert!(McdSet::new(12, vec![4, 12]).is_err()); // first not prime
        assert!(McdSet::new(12, vec![2, 6]).is_err()); // does not reach n
        assert!(McdSet::new(12, vec![2, 12]).is_err()); // ratio 6 not prime
        assert!(McdSet::new(12, vec![3, 6, 12]).is_ok());
    }

    /// Definition-level oracle: enumerate every chain of divisors `> 1` of
    /// `n` and keep those that no further divisor of `n` can extend.
    fn maximal_chains_by_definition(n: u64) -> Vec<Vec<u64>> {
        let divs: Vec<u64> = divisors(n).into_iter().filter(|&d| d > 1).collect();
        let mut out = Vec::new();
        let mut cur: Vec<u64> = Vec::new();
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
                let last = cur.last().copied();
                if last.is_none_or(|l| divs[i].is_multiple_of(l)) {
                    cur.push(divs[i]);
                    go(i + 1, divs, cur, out);
                    cur.pop();
                }
            }
        }
        go(0, &divs, &mut cur, &mut out);
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn enumeration_matches_definition_up_to_1000() {
        for n in 2..=1000u64 {
            let got: Vec<Vec<u64>> = enumerate_mcd_sets(n)
                .unwrap()
                .into_iter()
                .map(|s| s.chain().to_vec())
                .collect();
            let want = maximal_chains_by_definition(n);
            assert_eq!(got, want, "chain mismatch at n = {n}");
        }
    }

    #[test]
    fn chain_count_is_multinomial_of_prime_multiset() {
        // 360 = 2^3 * 3^2 * 5 has 6!/(3! 2! 1!) = 60 orderings.
        assert_eq!(enumerate_mcd_sets(360).unwrap().len(), 60);
    }

    proptest! {
        #[test]
        fn weight_equals_enumeration_maximum(n in 2..3000u64) {
            let sets = enumerate_mcd_sets(n).unwrap();
            let max = sets.iter().map(McdSet::weight).max().unwrap();
            prop_assert_eq!(weight(n), max);
        }

        #[test]
        fn phi_sums_over_divisors(n in 1..5000u64) {
            let total: u64 = divisors(n).iter().map(|&d| phi(d)).sum();
            prop_assert_eq!(total, n);
        }

        #[test]
        fn weight_monotone_under_divisibility(n in 1..3000u64) {
            for d in divisors(n) {
                prop_assert!(weight(d) <= weight(n));
            }
        }

        #[test]
        fn chains_are_validated(n in 2..2000u64) {
            for s in enumerate_mcd_sets(n).unwrap() {
                prop_assert!(McdSet::new(n, s.chain().to_vec()).is_ok());
            }
        }
    }
}
