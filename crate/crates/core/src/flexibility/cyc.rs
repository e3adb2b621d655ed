//! Pair cyclicity and the cycliciser.

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroups::{closure, cyclic_subgroup, is_cyclic_subgroup, is_normal, SubgroupSet};

/// `row(x)` is the set of `y` with `<x, y>` cyclic: the union of the maximal
/// cyclic subgroups containing `x`.
pub struct CyclicityMatrix {
    rows: Vec<Bits>,
}

impl CyclicityMatrix {
    pub fn new(g: &FiniteGroup) -> Self {
        let mut cyclics: Vec<SubgroupSet> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for x in g.elements() {
            let c = cyclic_subgroup(g, x);
            if seen.insert(c.bits().clone()) {
                cyclics.push(c);
            }
        }
        let maximal: Vec<&SubgroupSet> =
            cyclics.iter().filter(|c| !cyclics.iter().any(|d| d.order() > c.order() && c.is_subgroup_of(d))).collect();
        let mut rows = vec![Bits::new(g.order()); g.order()];
        for m in maximal {
            for x in m.bits().iter() {
                rows[x].union_with(m.bits());
            }
        }
        CyclicityMatrix { rows }
    }

    #[inline]
    pub fn pair_cyclic(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn row(&self, x: usize) -> &Bits {
        &self.rows[x]
    }
}

/// The cycliciser with a generator certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycResult {
    pub members: Vec<usize>,
    pub generator: usize,
}

impl CycResult {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

/// `{c : <c, g> is cyclic for every g}`, checked to be a cyclic normal subgroup.
pub fn cycliciser(g: &FiniteGroup) -> Result<CycResult> {
    let m = CyclicityMatrix::new(g);
    let n = g.order();
    let members: Vec<usize> = g.elements().filter(|&c| m.row(c).count() == n).collect();
    let sub = SubgroupSet::from_members(g, &members)
        .map_err(|_| Error::InternalInvariantViolation("cycliciser is not a subgroup".into()))?;
    if !is_normal(g, &sub) {
        return Err(Error::InternalInvariantViolation("cycliciser is not normal".into()));
    }
    let generator = is_cyclic_subgroup(g, &sub)
        .ok_or_else(|| Error::InternalInvariantViolation("cycliciser is not cyclic".into()))?;
    Ok(CycResult { members, generator })
}

pub fn cycliciser_subgroup(g: &FiniteGroup) -> Result<SubgroupSet> {
    let c = cycliciser(g)?;
    closure(g, &[c.generator])
}

fn triple_ok(g: &FiniteGroup, x: usize, y: usize, z: usize) -> bool {
    let s = closure(g, &[x, y, z]).expect("indices in range");
    is_cyclic_subgroup(g, &s).is_some()
}

/// First triple (in index order) that is pairwise cyclic but does not
/// generate a cyclic subgroup. Pairwise cyclicity is read from the matrix; the
/// triple itself is checked by closure.
pub fn triple_cyclic_counterexample(g: &FiniteGroup) -> Option<[usize; 3]> {
    let m = CyclicityMatrix::new(g);
    for x in g.elements() {
        for y in m.row(x).iter().filter(|&y| y > x) {
            let mut zs = m.row(x).clone();
            zs.intersect_with(m.row(y));
            for z in zs.iter().filter(|&z| z > y) {
                if !triple_ok(g, x, y, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// Random pairwise-cyclic triples: `x` uniform, `y` uniform in `row(x)`, `z`
/// uniform in `row(x) & row(y)`. Returns the number checked and the first failure.
pub fn triple_cyclic_sampled(g: &FiniteGroup, samples: usize, seed: u64) -> (usize, Option<[usize; 3]>) {
    let m = CyclicityMatrix::new(g);
    let mut rng = StdRng::seed_from_u64(seed);
    for done in 0..samples {
        let x = rng.random_range(0..g.order());
        let ys = m.row(x).to_vec();
        let y = ys[rng.random_range(0..ys.len())];
        let mut zs = m.row(x).clone();
        zs.intersect_with(m.row(y));
        let zs = zs.to_vec();
        let z = zs[rng.random_range(0..zs.len())];
        if !triple_ok(g, x, y, z) {
            return (done + 1, Some([x, y, z]));
        }
    }
    (samples, None)
}
