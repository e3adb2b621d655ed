//! Subgroups as bitsets over the parent's element indices, plus the usual
//! enumerations: conjugacy classes, normal closures, normal and minimal normal
//! subgroups, the centre and (for small groups) the full subgroup list.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupId};

/// Default order limit for [`all_subgroups`].
pub const SUBGROUP_ENUM_CAP: usize = 256;

/// A subgroup of a parent group. `gens` is some generating list, kept so that
/// joins only need to multiply by generators.
#[derive(Clone, Debug)]
pub struct SubgroupSet {
    parent: GroupId,
    members: Bits,
    order: usize,
    gens: Vec<usize>,
}

impl PartialEq for SubgroupSet {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for SubgroupSet {}

impl Hash for SubgroupSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.members.hash(state);
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubgroupSet {
    /// Canonical order: by order, then lexicographically by sorted member list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.iter().cmp(other.members.iter()))
            .then_with(|| self.parent.cmp(&other.parent))
    }
}

impl Serialize for SubgroupSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SubgroupSet", 2)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("members", &self.members())?;
        s.end()
    }
}

impl SubgroupSet {
    pub fn trivial(g: &FiniteGroup) -> Self {
        SubgroupSet {
            parent: g.id(),
            members: Bits::from_indices(g.order(), [g.identity()]),
            order: 1,
            gens: Vec::new(),
        }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        closure(g, &g.elements().collect::<Vec<_>>()).expect("indices in range")
    }

    /// Validates an explicit member list.
    pub fn from_members(g: &FiniteGroup, members: &[usize]) -> Result<Self> {
        for &x in members {
            if x >= g.order() {
                return Err(Error::IndexOutOfRange { index: x, order: g.order() });
            }
        }
        let bits = Bits::from_indices(g.order(), members.iter().copied());
        if !bits.contains(g.identity()) {
            return Err(Error::NotASubgroup);
        }
        for x in bits.iter() {
            for y in bits.iter() {
                if !bits.contains(g.mul(x, y)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        let order = bits.count();
        let gens = bits.to_vec();
        Ok(SubgroupSet { parent: g.id(), members: bits, order, gens })
    }

    pub fn parent(&self) -> GroupId {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> &Bits {
        &self.members
    }

    pub fn members(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &SubgroupSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn least_member(&self) -> usize {
        self.members.iter().next().expect("subgroups contain the identity")
    }

    pub(crate) fn check_parent(&self, g: &FiniteGroup) -> Result<()> {
        if self.parent == g.id() {
            Ok(())
        } else {
            Err(Error::ForeignSubgroup)
        }
    }
}

/// Smallest subgroup containing `seeds`.
pub fn closure(g: &FiniteGroup, seeds: &[usize]) -> Result<SubgroupSet> {
    for &x in seeds {
        if x >= g.order() {
            return Err(Error::IndexOutOfRange { index: x, order: g.order() });
        }
    }
    Ok(join_elements(g, &SubgroupSet::trivial(g), seeds))
}

/// `<base, extra>`, computed by multiplying on the right by generators until
/// nothing new appears.
pub fn join_elements(g: &FiniteGroup, base: &SubgroupSet, extra: &[usize]) -> SubgroupSet {
    let mut gens = base.gens.clone();
    let mut members = base.members.clone();
    let mut list: Vec<usize> = members.iter().collect();
    let mut probe = members.clone();
    for &x in extra {
        if !probe.contains(x) {
            gens.push(x);
            probe.insert(x);
        }
    }
    if gens.len() == base.gens.len() {
        return base.clone();
    }
    let mut i = 0;
    while i < list.len() {
        let e = list[i];
        for &s in &gens {
            let y = g.mul(e, s);
            if members.insert(y) {
                list.push(y);
            }
        }
        i += 1;
    }
    let order = list.len();
    SubgroupSet { parent: base.parent, members, order, gens }
}

pub fn join(g: &FiniteGroup, a: &SubgroupSet, b: &SubgroupSet) -> SubgroupSet {
    join_elements(g, a, &b.gens)
}

pub fn cyclic_subgroup(g: &FiniteGroup, x: usize) -> SubgroupSet {
    let mut members = Bits::new(g.order());
    let mut y = g.identity();
    loop {
        members.insert(y);
        y = g.mul(y, x);
        if y == g.identity() {
            break;
        }
    }
    let gens = if x == g.identity() { Vec::new() } else { vec![x] };
    SubgroupSet { parent: g.id(), order: g.elem_order(x), members, gens }
}

/// `Some(generator)` when the subgroup is cyclic; the generator is its least
/// member of full order.
pub fn is_cyclic_subgroup(g: &FiniteGroup, s: &SubgroupSet) -> Option<usize> {
    s.members.iter().find(|&x| g.elem_order(x) == s.order)
}

pub fn is_normal(g: &FiniteGroup, s: &SubgroupSet) -> bool {
    g.elements().all(|h| s.gens.iter().all(|&x| s.contains(g.conj(x, h))))
}

pub fn conjugate_subgroup(g: &FiniteGroup, s: &SubgroupSet, h: usize) -> SubgroupSet {
    let members = Bits::from_indices(g.order(), s.members.iter().map(|x| g.conj(x, h)));
    let gens = s.gens.iter().map(|&x| g.conj(x, h)).collect();
    SubgroupSet { parent: s.parent, members, order: s.order, gens }
}

/// Orbits of conjugation, each sorted, listed by least member.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut seen = Bits::new(g.order());
    let mut classes = Vec::new();
    for x in g.elements() {
        if seen.contains(x) {
            continue;
        }
        let class = Bits::from_indices(g.order(), g.elements().map(|h| g.conj(x, h)));
        seen.union_with(&class);
        classes.push(class.to_vec());
    }
    classes
}

pub fn conjugacy_class(g: &FiniteGroup, x: usize) -> Vec<usize> {
    Bits::from_indices(g.order(), g.elements().map(|h| g.conj(x, h))).to_vec()
}

pub fn normal_closure(g: &FiniteGroup, x: usize) -> Result<SubgroupSet> {
    if x >= g.order() {
        return Err(Error::IndexOutOfRange { index: x, order: g.order() });
    }
    closure(g, &conjugacy_class(g, x))
}

pub fn center(g: &FiniteGroup) -> SubgroupSet {
    let members: Vec<usize> = g.elements().filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z))).collect();
    closure(g, &members).expect("indices in range")
}

pub fn derived_subgroup(g: &FiniteGroup) -> SubgroupSet {
    let mut comms = Bits::new(g.order());
    for x in g.elements() {
        for y in g.elements() {
            comms.insert(g.commutator(x, y));
        }
    }
    closure(g, &comms.to_vec()).expect("indices in range")
}

fn normal_atoms(g: &FiniteGroup) -> Vec<SubgroupSet> {
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut class_seen = Bits::new(g.order());
    let mut atoms = Vec::new();
    for x in g.elements() {
        if x == g.identity() || class_seen.contains(x) {
            continue;
        }
        let class = conjugacy_class(g, x);
        for &c in &class {
            class_seen.insert(c);
        }
        let n = closure(g, &class).expect("indices in range");
        if seen.insert(n.members.clone()) {
            atoms.push(n);
        }
    }
    atoms.sort();
    atoms
}

/// Every normal subgroup, as joins of normal closures of single elements.
pub fn all_normal_subgroups(g: &FiniteGroup) -> Vec<SubgroupSet> {
    let atoms = normal_atoms(g);
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut out = Vec::new();
    let trivial = SubgroupSet::trivial(g);
    seen.insert(trivial.members.clone());
    out.push(trivial);
    for a in &atoms {
        if seen.insert(a.members.clone()) {
            out.push(a.clone());
        }
    }
    let mut i = 0;
    while i < out.len() {
        for a in &atoms {
            if a.is_subgroup_of(&out[i]) {
                continue;
            }
            let j = join(g, &out[i], a);
            if seen.insert(j.members.clone()) {
                out.push(j);
            }
        }
        i += 1;
    }
    out.sort();
    out
}

/// Inclusion-minimal nontrivial normal subgroups.
pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Result<Vec<SubgroupSet>> {
    if g.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    let atoms = normal_atoms(g);
    Ok(atoms.iter().filter(|a| !atoms.iter().any(|b| b.order < a.order && b.is_subgroup_of(a))).cloned().collect())
}

pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<SubgroupSet>> {
    all_subgroups_capped(g, SUBGROUP_ENUM_CAP)
}

/// All subgroups: cyclic ones first, then joins with cyclic subgroups until
/// nothing new appears.
pub fn all_subgroups_capped(g: &FiniteGroup, cap: usize) -> Result<Vec<SubgroupSet>> {
    if g.order() > cap {
        return Err(Error::OrderCapExceeded { order: g.order() as u128, cap });
    }
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut cyclics = Vec::new();
    for x in g.elements() {
        let c = cyclic_subgroup(g, x);
        if seen.insert(c.members.clone()) {
            cyclics.push(c);
        }
    }
    let mut out = cyclics.clone();
    let mut i = 0;
    while i < out.len() {
        for c in &cyclics {
            if c.is_subgroup_of(&out[i]) {
                continue;
            }
            let j = join(g, &out[i], c);
            if seen.insert(j.members.clone()) {
                out.push(j);
            }
        }
        i += 1;
    }
    out.sort();
    Ok(out)
}
