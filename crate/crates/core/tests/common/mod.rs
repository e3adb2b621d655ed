//! Brute-force oracles. These only use the multiplication table and
//! exhaustive enumeration of element combinations.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use flexgroup::FiniteGroup;

pub type Set = Vec<bool>;

/// Fixpoint of pairwise products, starting from the identity and `seeds`.
pub fn ncl(g: &FiniteGroup, seeds: &[usize]) -> Set {
    let n = g.order();
    let mut s = vec![false; n];
    s[g.identity()] = true;
    for &x in seeds {
        s[x] = true;
    }
    loop {
        let members: Vec<usize> = (0..n).filter(|&x| s[x]).collect();
        let mut grew = false;
        for &a in &members {
            for &b in &members {
                let c = g.mul(a, b);
                if !s[c] {
                    s[c] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return s;
        }
    }
}

pub fn size(s: &Set) -> usize {
    s.iter().filter(|&&b| b).count()
}

pub fn members(s: &Set) -> Vec<usize> {
    (0..s.len()).filter(|&x| s[x]).collect()
}

/// All k-subsets of `pool` in lexicographic order.
pub fn combos(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            go(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Smallest j such that some j elements of the subgroup `h` generate it, and
/// the lexicographically first such j-set.
pub fn naive_rank_of(g: &FiniteGroup, h: &Set) -> (usize, Vec<usize>) {
    let pool = members(h);
    for j in 0..=pool.len() {
        for c in combos(&pool, j) {
            if ncl(g, &c) == *h {
                return (j, c);
            }
        }
    }
    unreachable!("a subgroup generates itself")
}

pub fn naive_d(g: &FiniteGroup) -> (usize, Vec<usize>) {
    naive_rank_of(g, &vec![true; g.order()])
}

/// k-flexibility straight from the definition; returns the lexicographically
/// first sorted k-tuple of rank k with no completing (d-k)-set.
pub fn naive_flexible(g: &FiniteGroup, k: usize) -> (bool, Option<Vec<usize>>) {
    let n = g.order();
    let all: Vec<usize> = (0..n).collect();
    let whole = vec![true; n];
    let (d, _) = naive_d(g);
    let mut rank_cache: HashMap<Set, usize> = HashMap::new();
    let extensions = combos(&all, d - k);
    for t in combos(&all, k) {
        let h = ncl(g, &t);
        let r = *rank_cache.entry(h.clone()).or_insert_with(|| naive_rank_of(g, &h).0);
        if r != k {
            continue;
        }
        let ok = extensions.iter().any(|e| {
            let mut s = t.clone();
            s.extend_from_slice(e);
            ncl(g, &s) == whole
        });
        if !ok {
            return (false, Some(t));
        }
    }
    (true, None)
}

/// Every subgroup, as the closure under joins of the cyclic subgroups.
pub fn naive_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> = (0..g.order()).map(|x| members(&ncl(g, &[x]))).collect();
    loop {
        let list: Vec<Vec<usize>> = found.iter().cloned().collect();
        let before = found.len();
        for a in &list {
            for b in &list {
                let mut seeds = a.clone();
                seeds.extend_from_slice(b);
                found.insert(members(&ncl(g, &seeds)));
            }
        }
        if found.len() == before {
            return found;
        }
    }
}

pub fn naive_is_normal(g: &FiniteGroup, h: &[usize]) -> bool {
    let set: BTreeSet<usize> = h.iter().copied().collect();
    (0..g.order()).all(|x| h.iter().all(|&y| set.contains(&g.mul(g.mul(x, y), g.inv(x)))))
}

pub fn naive_is_cyclic(g: &FiniteGroup, seeds: &[usize]) -> bool {
    let s = ncl(g, seeds);
    let n = size(&s);
    members(&s).into_iter().any(|x| size(&ncl(g, &[x])) == n)
}

/// Elements c such that <c, x> is cyclic for every x.
pub fn naive_cycliciser(g: &FiniteGroup) -> Vec<usize> {
    (0..g.order()).filter(|&c| (0..g.order()).all(|x| naive_is_cyclic(g, &[c, x]))).collect()
}

pub fn naive_center(g: &FiniteGroup) -> Vec<usize> {
    (0..g.order()).filter(|&z| (0..g.order()).all(|x| g.mul(z, x) == g.mul(x, z))).collect()
}

pub fn naive_derived(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut comms = Vec::new();
    for x in 0..n {
        for y in 0..n {
            comms.push(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
        }
    }
    members(&ncl(g, &comms))
}

/// Number of generators of the abelian group C_{n_1} x ... x C_{n_k}: the
/// largest number of factors divisible by a common prime.
pub fn abelian_rank(factors: &[usize]) -> usize {
    (2..=factors.iter().copied().max().unwrap_or(1))
        .filter(|&p| (2..p).all(|q| p % q != 0))
        .map(|p| factors.iter().filter(|&&n| n % p == 0).count())
        .max()
        .unwrap_or(0)
}
