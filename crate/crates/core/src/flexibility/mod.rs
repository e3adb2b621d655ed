//! Generation rank `d(G)`, the cycliciser and k-flexibility, all decided by
//! exhaustive search.
//!
//! The searches run over subgroups rather than raw tuples: whether a tuple
//! generates a rank-k subgroup, and whether it extends to a generating set of
//! size `d(G)`, depend only on the subgroup it generates. [`FlexEngine`] builds
//! the rank levels (every subgroup of rank `j <= d(G)`) and memoises, for each
//! subgroup `H` it meets, the least number of further elements needed to
//! reach `G`. Tuples are only enumerated to report canonical witnesses and
//! counterexamples.

pub mod cyc;
pub mod extension;

use std::collections::{HashMap, HashSet};
use std::sync::RwLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroups::{conjugate_subgroup, join_elements, SubgroupSet};

pub use cyc::{cycliciser, cycliciser_subgroup, CycResult, CyclicityMatrix};
pub use extension::constructive_affine_extension;

#[derive(Clone, Debug)]
pub struct FlexOptions {
    /// Evaluate one subgroup per conjugacy class of candidate subgroups.
    pub symmetry_reduction: bool,
    /// How many (tuple, extension) pairs to report for flexible verdicts.
    pub witness_samples: usize,
}

impl Default for FlexOptions {
    fn default() -> Self {
        FlexOptions { symmetry_reduction: false, witness_samples: 3 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankResult {
    pub d: usize,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionPair {
    pub tuple: Vec<usize>,
    pub extension: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlexVerdict {
    pub k: usize,
    pub flexible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
    #[serde(rename = "witness", skip_serializing_if = "Vec::is_empty")]
    pub witness_map: Vec<ExtensionPair>,
}

pub struct FlexEngine<'g> {
    g: &'g FiniteGroup,
    opts: FlexOptions,
    /// `levels[j]`: all subgroups of rank exactly `j`, canonically sorted.
    levels: Vec<Vec<SubgroupSet>>,
    rank_of: HashMap<Bits, usize>,
    need: RwLock<HashMap<Bits, usize>>,
}

impl<'g> FlexEngine<'g> {
    pub fn new(g: &'g FiniteGroup) -> Self {
        Self::with_options(g, FlexOptions::default())
    }

    pub fn with_options(g: &'g FiniteGroup, opts: FlexOptions) -> Self {
        let trivial = SubgroupSet::trivial(g);
        let mut rank_of = HashMap::from([(trivial.bits().clone(), 0)]);
        let mut levels = vec![vec![trivial]];
        let mut engine =
            FlexEngine { g, opts, levels: Vec::new(), rank_of: HashMap::new(), need: RwLock::new(HashMap::new()) };
        while !levels.last().expect("nonempty").iter().any(|h| h.order() == g.order()) {
            let j = levels.len() - 1;
            let found: Vec<Vec<SubgroupSet>> = levels[j].par_iter().map(|h| engine.children(h)).collect();
            let mut next = Vec::new();
            for k in found.into_iter().flatten() {
                if !rank_of.contains_key(k.bits()) {
                    rank_of.insert(k.bits().clone(), j + 1);
                    next.push(k);
                }
            }
            next.sort();
            levels.push(next);
        }
        engine.levels = levels;
        engine.rank_of = rank_of;
        engine
    }

    pub fn group(&self) -> &FiniteGroup {
        self.g
    }

    /// `d(G)`.
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    /// All subgroups of rank exactly `j` (empty for `j > d(G)`).
    pub fn rank_level(&self, j: usize) -> &[SubgroupSet] {
        self.levels.get(j).map_or(&[], Vec::as_slice)
    }

    /// Rank of `h` when it is at most `d(G)`.
    pub fn known_rank(&self, h: &SubgroupSet) -> Option<usize> {
        self.rank_of.get(h.bits()).copied()
    }

    /// Distinct subgroups `<h, x>` for `x` outside `h`, one `x` per double coset `hxh`.
    fn children(&self, h: &SubgroupSet) -> Vec<SubgroupSet> {
        let g = self.g;
        let hm = h.members();
        let mut covered = h.bits().clone();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in g.elements() {
            if covered.contains(x) {
                continue;
            }
            for &a in &hm {
                let ax = g.mul(a, x);
                for &b in &hm {
                    covered.insert(g.mul(ax, b));
                }
            }
            let k = join_elements(g, h, &[x]);
            if seen.insert(k.bits().clone()) {
                out.push(k);
            }
        }
        out
    }

    /// Least number of further elements that together with `h` generate `G`.
    pub fn need(&self, h: &SubgroupSet) -> usize {
        if h.order() == self.g.order() {
            return 0;
        }
        if let Some(&v) = self.need.read().expect("memo lock").get(h.bits()) {
            return v;
        }
        let mut best = usize::MAX;
        for c in self.children(h) {
            best = best.min(self.need(&c) + 1);
            if best == 1 {
                break;
            }
        }
        self.need.write().expect("memo lock").insert(h.bits().clone(), best);
        best
    }

    /// Depth-first walk over sorted irredundant `k`-tuples in lexicographic
    /// order. Prefixes of length `i` must generate a rank-`i` subgroup and pass
    /// `keep`; `found` is called on complete tuples and returns true to stop.
    fn walk_tuples(
        &self,
        k: usize,
        prefix: &mut Vec<usize>,
        base: &SubgroupSet,
        keep: &(impl Fn(&SubgroupSet, usize) -> bool + ?Sized),
        found: &mut impl FnMut(&[usize], &SubgroupSet) -> bool,
    ) -> bool {
        let depth = prefix.len();
        if depth == k {
            return found(prefix, base);
        }
        let lo = prefix.last().map_or(0, |&x| x + 1);
        for x in lo..self.g.order() {
            if base.contains(x) {
                continue;
            }
            let next = join_elements(self.g, base, &[x]);
            if self.rank_of.get(next.bits()) != Some(&(depth + 1)) || !keep(&next, depth + 1) {
                continue;
            }
            prefix.push(x);
            let stop = self.walk_tuples(k, prefix, &next, keep, found);
            prefix.pop();
            if stop {
                return true;
            }
        }
        false
    }

    /// Lexicographically first tuple, split by first entry across workers.
    fn first_tuple_parallel(
        &self,
        k: usize,
        keep: &(impl Fn(&SubgroupSet, usize) -> bool + Sync),
        accept: &(impl Fn(&SubgroupSet) -> bool + Sync),
    ) -> Option<Vec<usize>> {
        let trivial = SubgroupSet::trivial(self.g);
        (0..self.g.order()).into_par_iter().find_map_first(|x| {
            if x == self.g.identity() {
                return None;
            }
            let first = join_elements(self.g, &trivial, &[x]);
            if self.rank_of.get(first.bits()) != Some(&1) || !keep(&first, 1) {
                return None;
            }
            let mut prefix = vec![x];
            let mut hit = None;
            self.walk_tuples(k, &mut prefix, &first, keep, &mut |t, s| {
                if accept(s) {
                    hit = Some(t.to_vec());
                    true
                } else {
                    false
                }
            });
            hit
        })
    }

    /// `d(G)` with the lexicographically first generating `d`-set.
    pub fn min_generators(&self) -> RankResult {
        let d = self.rank();
        if d == 0 {
            return RankResult { d, witness: Vec::new() };
        }
        let n = self.g.order();
        let keep = |s: &SubgroupSet, depth: usize| self.need(s) <= d - depth;
        let witness =
            self.first_tuple_parallel(d, &keep, &|s: &SubgroupSet| s.order() == n).expect("some d-set generates G");
        RankResult { d, witness }
    }

    /// Lexicographically first sorted `slots`-set `Y` with `<base, Y> = G`.
    pub fn first_extension(&self, base: &SubgroupSet, slots: usize) -> Option<Vec<usize>> {
        let mut out = Vec::with_capacity(slots);
        self.extend_rec(base, 0, slots, &mut out).then_some(out)
    }

    fn extend_rec(&self, base: &SubgroupSet, start: usize, slots: usize, out: &mut Vec<usize>) -> bool {
        if slots == 0 {
            return base.order() == self.g.order();
        }
        for y in start..self.g.order() {
            if self.g.order() - y < slots {
                break;
            }
            let next = join_elements(self.g, base, &[y]);
            if self.need(&next) > slots - 1 {
                continue;
            }
            out.push(y);
            if self.extend_rec(&next, y + 1, slots - 1, out) {
                return true;
            }
            out.pop();
        }
        false
    }

    /// Whether each rank-`k` subgroup extends to `G` with `d - k` more elements.
    fn extendable(&self, k: usize) -> Vec<bool> {
        let d = self.rank();
        let cands = &self.levels[k];
        if !self.opts.symmetry_reduction {
            return cands.par_iter().map(|h| self.need(h) <= d - k).collect();
        }
        let index: HashMap<&Bits, usize> = cands.iter().enumerate().map(|(i, h)| (h.bits(), i)).collect();
        let mut class_of = vec![usize::MAX; cands.len()];
        let mut reps = Vec::new();
        for i in 0..cands.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            for x in self.g.elements() {
                let c = conjugate_subgroup(self.g, &cands[i], x);
                class_of[index[c.bits()]] = reps.len();
            }
            reps.push(i);
        }
        let rep_ok: Vec<bool> = reps.par_iter().map(|&i| self.need(&cands[i]) <= d - k).collect();
        class_of.iter().map(|&c| rep_ok[c]).collect()
    }

    /// Decides k-flexibility. A counterexample is the lexicographically first
    /// sorted `k`-tuple of rank `k` with no extension.
    pub fn verdict(&self, k: usize) -> Result<FlexVerdict> {
        let d = self.rank();
        if k < 1 || k > d {
            return Err(Error::KOutOfRange { k, d });
        }
        let ok = self.extendable(k);
        let failing: Vec<&SubgroupSet> =
            self.levels[k].iter().zip(&ok).filter(|(_, &ok)| !ok).map(|(h, _)| h).collect();
        if failing.is_empty() {
            return Ok(FlexVerdict { k, flexible: true, counterexample: None, witness_map: self.witnesses(k) });
        }
        let failing_bits: HashSet<&Bits> = failing.iter().map(|h| h.bits()).collect();
        let keep = |s: &SubgroupSet, _depth: usize| failing.iter().any(|f| s.is_subgroup_of(f));
        let accept = |s: &SubgroupSet| failing_bits.contains(s.bits());
        let counterexample = self.first_tuple_parallel(k, &keep, &accept);
        if counterexample.is_none() {
            unreachable!("every rank-k subgroup is generated by k of its elements");
        }
        Ok(FlexVerdict { k, flexible: false, counterexample, witness_map: Vec::new() })
    }

    fn witnesses(&self, k: usize) -> Vec<ExtensionPair> {
        let want = self.opts.witness_samples;
        let mut out = Vec::new();
        if want == 0 {
            return out;
        }
        let d = self.rank();
        let trivial = SubgroupSet::trivial(self.g);
        self.walk_tuples(k, &mut Vec::new(), &trivial, &|_: &SubgroupSet, _| true, &mut |t, s| {
            let extension = self.first_extension(s, d - k).expect("flexible verdict");
            out.push(ExtensionPair { tuple: t.to_vec(), extension });
            out.len() >= want
        });
        out
    }

    pub fn profile(&self) -> Vec<FlexVerdict> {
        (1..=self.rank()).map(|k| self.verdict(k).expect("k in range")).collect()
    }
}

pub fn min_generators(g: &FiniteGroup) -> RankResult {
    FlexEngine::new(g).min_generators()
}

/// `d(S)` for a subgroup, computed on the restricted table.
pub fn subgroup_rank(g: &FiniteGroup, s: &SubgroupSet) -> Result<usize> {
    s.check_parent(g)?;
    let sub = g.restrict(&s.members())?;
    Ok(FlexEngine::new(&sub).rank())
}

pub fn is_k_flexible(g: &FiniteGroup, k: usize) -> Result<FlexVerdict> {
    FlexEngine::new(g).verdict(k)
}

pub fn is_k_flexible_with(g: &FiniteGroup, k: usize, opts: &FlexOptions) -> Result<FlexVerdict> {
    FlexEngine::with_options(g, opts.clone()).verdict(k)
}

/// Verdicts for `k = 1..=d(G)`.
pub fn flexibility_profile(g: &FiniteGroup) -> Vec<FlexVerdict> {
    FlexEngine::new(g).profile()
}

pub fn flexibility_profile_with(g: &FiniteGroup, opts: &FlexOptions) -> Vec<FlexVerdict> {
    FlexEngine::with_options(g, opts.clone()).profile()
}
