//! Group constructors. Each fixes a canonical element ordering:
//!
//! * `cyclic(n)`: element `i` is `i mod n`.
//! * `elementary_abelian(p, r)`: element `i` is the vector whose j-th
//!   coordinate is the j-th base-p digit of `i` (least significant first).
//! * `matrix_affine(p, r, M)`: element `a * p^r + v` is the pair
//!   (vector `v`, `M^a`), vectors encoded as above.
//! * `quaternion8()`: `1, -1, i, -i, j, -j, k, -k`.
//! * `miller_moreno(p, q, m, r)`: element `j * p + i` is `a^i b^j`.
//! * `perm_group`: generated permutations sorted lexicographically by image list.
//! * `direct_product(G, H)`: element `g * |H| + h` is `(g, h)`.
//! * `quotient(G, N)`: cosets ordered by least member.

use std::collections::HashMap;

use crate::arith::{inv_mod, is_prime, mult_order, pow_mod, MatP};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom};
use crate::subgroups::{is_normal, SubgroupSet};

pub const DEFAULT_ORDER_CAP: usize = 4096;

/// The hard order cap: `FLEXGROUP_ORDER_CAP` when set, else [`DEFAULT_ORDER_CAP`].
pub fn order_cap() -> usize {
    std::env::var("FLEXGROUP_ORDER_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ORDER_CAP)
}

fn check_cap(order: u128) -> Result<usize> {
    let cap = order_cap();
    if order > cap as u128 {
        Err(Error::OrderCapExceeded { order, cap })
    } else {
        Ok(order as usize)
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn prime_power(p: u64, r: usize) -> u128 {
    (0..r).fold(1u128, |acc, _| acc.saturating_mul(p as u128))
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadArgument { name: "n", value: 0 });
    }
    let n = check_cap(n as u128)?;
    let table = (0..n).flat_map(|x| (0..n).map(move |y| ((x + y) % n) as u32)).collect();
    FiniteGroup::from_flat(table, n, None, format!("C{n}"))
}

fn decode(mut idx: usize, p: usize, r: usize) -> Vec<u64> {
    (0..r)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            d as u64
        })
        .collect()
}

fn encode(v: &[u64], p: usize) -> usize {
    v.iter().rev().fold(0, |acc, &d| acc * p + d as usize)
}

fn vec_label(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn elementary_abelian(p: u64, r: usize) -> Result<FiniteGroup> {
    check_prime(p)?;
    if r == 0 {
        return Err(Error::BadArgument { name: "r", value: 0 });
    }
    let n = check_cap(prime_power(p, r))?;
    let pu = p as usize;
    let vecs: Vec<Vec<u64>> = (0..n).map(|i| decode(i, pu, r)).collect();
    let mut table = Vec::with_capacity(n * n);
    for x in &vecs {
        for y in &vecs {
            let s: Vec<u64> = x.iter().zip(y).map(|(a, b)| (a + b) % p).collect();
            table.push(encode(&s, pu) as u32);
        }
    }
    let labels = vecs.iter().map(|v| vec_label(v)).collect();
    FiniteGroup::from_flat(table, n, Some(labels), format!("E({p},{r})"))
}

/// `p^r : <M>` with `(u, M^a)(v, M^b) = (u + M^a v, M^(a+b))`.
pub fn matrix_affine(p: u64, r: usize, m: &MatP) -> Result<FiniteGroup> {
    check_prime(p)?;
    if r == 0 {
        return Err(Error::BadArgument { name: "r", value: 0 });
    }
    if m.p != p || m.r != r || m.entries.len() != r * r || m.entries.iter().any(|&e| e >= p) {
        return Err(Error::MatrixShape { r, p });
    }
    if m.rank() < r {
        return Err(Error::SingularMatrix { p });
    }
    let vcount = prime_power(p, r);
    check_cap(vcount)?;
    let ord = m.order();
    let n = check_cap(vcount * ord as u128)?;
    let vcount = vcount as usize;
    let ord = ord as usize;
    let pu = p as usize;

    let vecs: Vec<Vec<u64>> = (0..vcount).map(|i| decode(i, pu, r)).collect();
    let mut powers = vec![MatP::identity(p, r)];
    for a in 1..ord {
        powers.push(powers[a - 1].mul(m));
    }
    // act[a][v] = index of M^a v
    let act: Vec<Vec<usize>> =
        powers.iter().map(|pw| vecs.iter().map(|v| encode(&pw.apply(v), pu)).collect()).collect();
    let add: Vec<Vec<usize>> = vecs
        .iter()
        .map(|x| {
            vecs.iter().map(|y| encode(&x.iter().zip(y).map(|(a, b)| (a + b) % p).collect::<Vec<_>>(), pu)).collect()
        })
        .collect();

    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a, u) = (x / vcount, x % vcount);
        for y in 0..n {
            let (b, v) = (y / vcount, y % vcount);
            let w = add[u][act[a][v]];
            table.push((((a + b) % ord) * vcount + w) as u32);
        }
    }
    let labels = (0..n)
        .map(|x| {
            let (a, u) = (x / vcount, x % vcount);
            match a {
                0 => vec_label(&vecs[u]),
                1 => format!("{}g", vec_label(&vecs[u])),
                _ => format!("{}g^{a}", vec_label(&vecs[u])),
            }
        })
        .collect();
    let rows: Vec<String> =
        (0..r).map(|i| (0..r).map(|j| m.get(i, j).to_string()).collect::<Vec<_>>().join(",")).collect();
    let origin = format!("MatAff({p},{r},[{}])", rows.join(";"));
    FiniteGroup::from_flat(table, n, Some(labels), origin)
}

pub fn scalar_affine(p: u64, r: usize, s: u64) -> Result<FiniteGroup> {
    check_prime(p)?;
    if s == 0 || s >= p {
        return Err(Error::ScalarOutOfRange { s, p });
    }
    let g = matrix_affine(p, r, &MatP::scalar(p, r, s))?;
    Ok(g.with_origin(format!("Aff({p},{r},{s})")))
}

pub fn quaternion8() -> FiniteGroup {
    // Units 1, i, j, k as 0..4; unit products as (sign, unit).
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (neg, u) = UNIT[x / 2][y / 2];
            let sign = neg ^ (x % 2 == 1) ^ (y % 2 == 1);
            table.push((2 * u + sign as usize) as u32);
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    FiniteGroup::from_flat(table, 8, Some(labels), "Q8".into()).expect("quaternion table is a group")
}

/// `<a, b | a^p = b^(q^m) = 1, b^-1 a b = a^r>`, requiring `r` to have
/// multiplicative order exactly `q` modulo `p`.
pub fn miller_moreno(p: u64, q: u64, m: u32, r: u64) -> Result<FiniteGroup> {
    check_prime(p)?;
    check_prime(q)?;
    if p == q {
        return Err(Error::EqualPrimes(p));
    }
    if m == 0 {
        return Err(Error::BadArgument { name: "m", value: 0 });
    }
    if r <= 1 {
        return Err(Error::BadArgument { name: "r", value: r });
    }
    let order = mult_order(r, p).unwrap_or(0);
    if order != q {
        return Err(Error::InvalidAction { p, q, r, order });
    }
    let qm = q.checked_pow(m).ok_or(Error::OrderCapExceeded { order: u128::MAX, cap: order_cap() })?;
    let n = check_cap(p as u128 * qm as u128)?;
    let (pu, qmu) = (p as usize, qm as usize);
    // b^j a^k = a^(k t^j) b^j with t = r^-1 mod p.
    let t = inv_mod(r, p).expect("r is a unit mod p");
    let tpow: Vec<u64> = (0..qmu).map(|j| pow_mod(t, j as u64, p)).collect();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (j, i) = (x / pu, x % pu);
        for y in 0..n {
            let (l, k) = (y / pu, y % pu);
            let ni = (i as u64 + k as u64 * tpow[j]) % p;
            let nj = (j + l) % qmu;
            table.push((nj * pu + ni as usize) as u32);
        }
    }
    let labels = (0..n)
        .map(|x| {
            let (j, i) = (x / pu, x % pu);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (_, 0) => format!("a^{i}"),
                (0, _) => format!("b^{j}"),
                _ => format!("a^{i}b^{j}"),
            }
        })
        .collect();
    FiniteGroup::from_flat(table, n, Some(labels), format!("MM({p},{q},{m},{r})"))
}

/// A permutation of `0..degree` given by its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree).collect())
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || touched[x] {
                    return Err(Error::NotBijection { index: 0, degree });
                }
                touched[x] = true;
                img[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Perm(img))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Left-to-right composition: apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        self.0.iter().all(|&i| i < seen.len() && !std::mem::replace(&mut seen[i], true))
    }

    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.0.len()];
        let mut out = String::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.0[x];
            }
            let parts: Vec<String> = cyc.iter().map(usize::to_string).collect();
            out.push_str(&format!("({})", parts.join(" ")));
        }
        if out.is_empty() {
            "()".into()
        } else {
            out
        }
    }
}

/// The permutation group generated by `gens`, multiplied left to right.
pub fn perm_group(degree: usize, gens: &[Perm]) -> Result<FiniteGroup> {
    for (index, g) in gens.iter().enumerate() {
        if g.degree() != degree || !g.is_bijection() {
            return Err(Error::NotBijection { index, degree });
        }
    }
    let cap = order_cap();
    let id = Perm::identity(degree);
    let mut index: HashMap<Perm, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let y = elems[i].then(g);
            if !index.contains_key(&y) {
                if elems.len() == cap {
                    return Err(Error::OrderCapExceeded { order: elems.len() as u128 + 1, cap });
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
        i += 1;
    }
    elems.sort();
    let pos: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for x in &elems {
        for y in &elems {
            table.push(pos[&x.then(y)] as u32);
        }
    }
    let labels = elems.iter().map(Perm::cycle_string).collect();
    let gen_str: Vec<String> = gens.iter().map(Perm::cycle_string).collect();
    let origin = format!("Perm({degree}; {})", gen_str.join(", "));
    FiniteGroup::from_flat(table, n, Some(labels), origin)
}

/// Full symmetric group on `0..degree`, generated by `(0 1)` and `(0 1 ... n-1)`.
pub fn symmetric(degree: usize) -> Result<FiniteGroup> {
    if degree == 0 {
        return Err(Error::BadArgument { name: "degree", value: 0 });
    }
    let gens = if degree == 1 {
        Vec::new()
    } else {
        vec![Perm::from_cycles(degree, &[vec![0, 1]])?, Perm::from_cycles(degree, &[(0..degree).collect()])?]
    };
    Ok(perm_group(degree, &gens)?.with_origin(format!("Perm({degree})")))
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let n = check_cap(g.order() as u128 * h.order() as u128)?;
    let m = h.order();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a, b) = (x / m, x % m);
        for y in 0..n {
            let (c, d) = (y / m, y % m);
            table.push((g.mul(a, c) * m + h.mul(b, d)) as u32);
        }
    }
    let labels = (0..n).map(|x| format!("({},{})", g.label(x / m), h.label(x % m))).collect();
    let origin = format!("{} x {}", g.origin(), h.origin());
    FiniteGroup::from_flat(table, n, Some(labels), origin)
}

/// `G/N` on cosets ordered by least member, with the canonical projection.
pub fn quotient(g: &FiniteGroup, n: &SubgroupSet) -> Result<(FiniteGroup, GroupHom)> {
    n.check_parent(g)?;
    if SubgroupSet::from_members(g, &n.members()).is_err() {
        return Err(Error::NotASubgroup);
    }
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    let members = n.members();
    for x in g.elements() {
        if coset[x] != usize::MAX {
            continue;
        }
        for &m in &members {
            coset[g.mul(x, m)] = reps.len();
        }
        reps.push(x);
    }
    let q = reps.len();
    let mut table = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            table.push(coset[g.mul(a, b)] as u32);
        }
    }
    let labels = if n.is_trivial() {
        reps.iter().map(|&x| g.label(x).to_string()).collect()
    } else {
        reps.iter().map(|&x| format!("{}N", g.label(x))).collect()
    };
    let origin = format!("{} / N{}", g.origin(), n.order());
    let quot = FiniteGroup::from_flat(table, q, Some(labels), origin)?;
    let hom = GroupHom { source: g.id(), target: quot.id(), map: coset };
    Ok((quot, hom))
}
