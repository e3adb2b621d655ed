//! Finite groups as validated Cayley tables over element indices `0..n`.

mod construct;
pub mod iso;
pub mod spec;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{Error, Result};

pub use construct::{
    cyclic, direct_product, elementary_abelian, matrix_affine, miller_moreno, order_cap, perm_group, quaternion8,
    quotient, scalar_affine, symmetric, Perm, DEFAULT_ORDER_CAP,
};

/// Tables of at most this order get the full cubic associativity scan; larger
/// ones use Light's test over a generating set.
const FULL_ASSOC_SCAN: usize = 64;

/// Fingerprint of a Cayley table, used to tie subgroups and homomorphisms to
/// the group they were computed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(pub u64);

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
    elem_orders: Vec<usize>,
    labels: Vec<String>,
    origin: String,
    id: GroupId,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).field("origin", &self.origin).finish_non_exhaustive()
    }
}

impl PartialEq for FiniteGroup {
    /// Equal tables; labels and origin are presentation only.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a Cayley table and computes identity and inverses.
    ///
    /// Labels default to the decimal element index.
    pub fn from_cayley_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare { row, len: entries.len(), expected: n });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::EntryOutOfRange { row, col, value, order: n });
                }
                flat.push(value as u32);
            }
        }
        Self::from_flat(flat, n, labels, "table".to_string())
    }

    pub(crate) fn from_flat(table: Vec<u32>, n: usize, labels: Option<Vec<String>>, origin: String) -> Result<Self> {
        debug_assert_eq!(table.len(), n * n);
        let labels = match labels {
            Some(l) if l.len() != n => return Err(Error::LabelCount { expected: n, got: l.len() }),
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let mul = |x: usize, y: usize| table[x * n + y] as usize;

        check_associative(n, &mul)?;

        let identity = (0..n).find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x)).ok_or(Error::NoIdentity)?;
        let mut inverses = vec![0; n];
        for (x, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&y| mul(x, y) == identity && mul(y, x) == identity)
                .ok_or(Error::MissingInverse { element: x })?;
        }

        let elem_orders = (0..n)
            .map(|x| {
                let mut k = 1;
                let mut y = x;
                while y != identity {
                    y = mul(y, x);
                    k += 1;
                }
                k
            })
            .collect();

        let id = GroupId(fingerprint(n, &table));
        Ok(FiniteGroup { order: n, table, identity, inverses, elem_orders, labels, origin, id })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn origin(&self) -> &str {
        &self.origin
    }

    pub(crate) fn with_origin(mut self, origin: impl Into<String>) -> Self {
        self.origin = origin.into();
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn elem_order(&self, x: usize) -> usize {
        self.elem_orders[x]
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let k = k % self.elem_orders[x];
        (0..k).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    /// `g x g^-1`
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `x^-1 y^-1 x y`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Largest element order that divides every element order, i.e. the exponent.
    pub fn exponent(&self) -> usize {
        self.elem_orders.iter().fold(1, |acc, &o| lcm(acc, o))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn all_elements(&self) -> Bits {
        Bits::full(self.order)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// The subgroup on `members` (sorted indices, assumed closed) as a group in
    /// its own right; element `i` of the result is `members[i]`.
    pub fn restrict(&self, members: &[usize]) -> Result<FiniteGroup> {
        let m = members.len();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in members.iter().enumerate() {
            if x >= self.order {
                return Err(Error::IndexOutOfRange { index: x, order: self.order });
            }
            pos[x] = i;
        }
        let mut table = Vec::with_capacity(m * m);
        for &x in members {
            for &y in members {
                let p = pos[self.mul(x, y)];
                if p == usize::MAX {
                    return Err(Error::NotASubgroup);
                }
                table.push(p as u32);
            }
        }
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        Self::from_flat(table, m, Some(labels), format!("subgroup of {}", self.origin))
    }

    pub fn to_json_doc(&self) -> CayleyDoc {
        CayleyDoc { schema: 1, order: self.order, labels: self.labels.clone(), table: self.table_rows() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_doc()).expect("table serialises")
    }

    pub fn from_json(text: &str) -> Result<FiniteGroup> {
        let doc: CayleyDoc = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        if doc.table.len() != doc.order {
            return Err(Error::Json(format!("order {} but table has {} rows", doc.order, doc.table.len())));
        }
        let labels = if doc.labels.is_empty() { None } else { Some(doc.labels) };
        Ok(FiniteGroup::from_cayley_table(doc.table, labels)?.with_origin("json"))
    }
}

/// Cayley-table interchange document.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CayleyDoc {
    #[serde(default = "schema_one")]
    pub schema: u32,
    pub order: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

fn schema_one() -> u32 {
    1
}

/// Homomorphism between two groups, stored as the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub source: GroupId,
    pub target: GroupId,
    pub map: Vec<usize>,
}

impl GroupHom {
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        source.id() == self.source
            && target.id() == self.target
            && self.map[source.identity()] == target.identity()
            && source
                .elements()
                .all(|x| source.elements().all(|y| self.map[source.mul(x, y)] == target.mul(self.map[x], self.map[y])))
    }

    pub fn is_bijective(&self, target: &FiniteGroup) -> bool {
        let mut seen = Bits::new(target.order());
        self.map.len() == target.order() && self.map.iter().all(|&y| seen.insert(y))
    }
}

fn check_associative(n: usize, mul: &impl Fn(usize, usize) -> usize) -> Result<()> {
    if n <= FULL_ASSOC_SCAN {
        for x in 0..n {
            for y in 0..n {
                let xy = mul(x, y);
                for z in 0..n {
                    if mul(xy, z) != mul(x, mul(y, z)) {
                        return Err(Error::NotAssociative { x, y, z });
                    }
                }
            }
        }
        return Ok(());
    }
    // Light's test: elements `a` with (xa)y = x(ay) for all x, y form a
    // submagma, so checking a magma-generating set suffices.
    for a in magma_generators(n, mul) {
        for x in 0..n {
            let xa = mul(x, a);
            for y in 0..n {
                if mul(xa, y) != mul(x, mul(a, y)) {
                    return Err(Error::NotAssociative { x, y: a, z: y });
                }
            }
        }
    }
    Ok(())
}

/// Greedy generating set of the magma, with closure taken over products in
/// both orders (no associativity assumed).
fn magma_generators(n: usize, mul: &impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = Bits::new(n);
    let mut members: Vec<usize> = Vec::new();
    for cand in 0..n {
        if inside.contains(cand) {
            continue;
        }
        gens.push(cand);
        inside.insert(cand);
        members.push(cand);
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            let mut j = 0;
            while j <= i {
                let y = members[j];
                for v in [mul(x, y), mul(y, x)] {
                    if inside.insert(v) {
                        members.push(v);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        if members.len() == n {
            break;
        }
    }
    gens
}

fn fingerprint(n: usize, table: &[u32]) -> u64 {
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for v in std::iter::once(n as u32).chain(table.iter().copied()) {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(PRIME);
        }
    }
    h
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
