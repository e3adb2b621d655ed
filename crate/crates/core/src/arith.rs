//! Small modular arithmetic helpers: primality, multiplicative orders and
//! matrices over F_p.

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

/// Prime factorisation as (prime, exponent) pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `a` modulo `m`, or `None` when `a` is not a unit.
pub fn mult_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    let a = a % m;
    if a == 0 {
        return None;
    }
    let mut x = a;
    for k in 1..=m {
        if x == 1 {
            return Some(k);
        }
        x = x * a % m;
    }
    None
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    mult_order(a, p).map(|o| pow_mod(a, o - 1, p))
}

/// Square matrix over F_p, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatP {
    pub p: u64,
    pub r: usize,
    pub entries: Vec<u64>,
}

impl MatP {
    pub fn identity(p: u64, r: usize) -> Self {
        let mut entries = vec![0; r * r];
        for i in 0..r {
            entries[i * r + i] = 1 % p;
        }
        MatP { p, r, entries }
    }

    pub fn scalar(p: u64, r: usize, s: u64) -> Self {
        let mut m = Self::identity(p, r);
        for i in 0..r {
            m.entries[i * r + i] = s % p;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.r + j]
    }

    pub fn mul(&self, other: &MatP) -> MatP {
        let r = self.r;
        let mut entries = vec![0; r * r];
        for i in 0..r {
            for j in 0..r {
                let mut acc = 0;
                for t in 0..r {
                    acc = (acc + self.get(i, t) * other.get(t, j)) % self.p;
                }
                entries[i * r + j] = acc;
            }
        }
        MatP { p: self.p, r, entries }
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.r).map(|i| (0..self.r).map(|j| self.get(i, j) * v[j]).sum::<u64>() % self.p).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p, self.r)
    }

    /// Rank by Gaussian elimination over F_p.
    pub fn rank(&self) -> usize {
        let (p, r) = (self.p, self.r);
        let mut m = self.entries.clone();
        let mut rank = 0;
        for col in 0..r {
            let Some(piv) = (rank..r).find(|&row| m[row * r + col] != 0) else {
                continue;
            };
            for j in 0..r {
                m.swap(rank * r + j, piv * r + j);
            }
            let inv = inv_mod(m[rank * r + col], p).expect("nonzero entry mod prime");
            for row in 0..r {
                if row != rank && m[row * r + col] != 0 {
                    let f = m[row * r + col] * inv % p;
                    for j in 0..r {
                        m[row * r + j] = (m[row * r + j] + p * p - f * m[rank * r + j] % p) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Order in GL_r(p); assumes the matrix is invertible.
    pub fn order(&self) -> u64 {
        let id = Self::identity(self.p, self.r);
        let mut x = self.clone();
        let mut k = 1;
        while x != id {
            x = x.mul(self);
            k += 1;
        }
        k
    }
}
