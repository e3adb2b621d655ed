//! Structural recognisers for the classified families, and predictions of
//! flexibility derived from them.

pub mod affine;
pub mod verify;

use std::fmt;

use serde::Serialize;

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};
use crate::flexibility::{cycliciser_subgroup, FlexEngine};
use crate::group::{quotient, FiniteGroup};
use crate::subgroups::{
    all_normal_subgroups, all_subgroups, derived_subgroup, is_cyclic_subgroup, minimal_normal_subgroups,
    SUBGROUP_ENUM_CAP,
};

pub use affine::{affine_frame, AffineFrame};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "variant", content = "params")]
pub enum StructureTag {
    Trivial,
    CyclicPrime { p: u64 },
    ElementaryAbelian { p: u64, r: usize },
    ScalarAffine { p: u64, r: usize, s: u64, scalar_order: usize },
    Q8Tag,
    MillerMoreno { p: u64, q: u64, m: u32, r: u64 },
    Other,
}

impl StructureTag {
    /// Elementary abelian of rank two.
    pub fn is_p_squared(&self) -> bool {
        matches!(self, StructureTag::ElementaryAbelian { r: 2, .. })
    }

    /// `r` and `d(<g>)` when the tag describes `p^r : <g>` with `g` scalar
    /// (including `g = 1`).
    pub fn affine_rank(&self) -> Option<(usize, usize)> {
        match *self {
            StructureTag::ElementaryAbelian { r, .. } => Some((r, 0)),
            StructureTag::CyclicPrime { .. } => Some((1, 0)),
            StructureTag::ScalarAffine { r, .. } => Some((r, 1)),
            _ => None,
        }
    }
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureTag::Trivial => write!(f, "Trivial"),
            StructureTag::CyclicPrime { p } => write!(f, "CyclicPrime({p})"),
            StructureTag::ElementaryAbelian { p, r } => write!(f, "ElementaryAbelian({p},{r})"),
            StructureTag::ScalarAffine { p, r, s, scalar_order } => {
                write!(f, "ScalarAffine({p},{r},{s}, ord {scalar_order})")
            }
            StructureTag::Q8Tag => write!(f, "Q8"),
            StructureTag::MillerMoreno { p, q, m, r } => write!(f, "MillerMoreno({p},{q},{m},{r})"),
            StructureTag::Other => write!(f, "Other"),
        }
    }
}

/// Generators `(a, b)` of a Miller–Moreno group: `a` the least generator of
/// the derived subgroup, `b` the least element of order `q^m`.
pub(crate) fn miller_moreno_frame(g: &FiniteGroup) -> Option<(StructureTag, usize, usize)> {
    if g.order() > SUBGROUP_ENUM_CAP || g.is_abelian() {
        return None;
    }
    let n = g.order();
    let derived = derived_subgroup(g);
    let p = derived.order() as u64;
    if !is_prime(p) {
        return None;
    }
    let rest = factorize(n as u64 / p);
    let [(q, m)] = rest[..] else {
        return None;
    };
    if q == p {
        return None;
    }
    let subs = all_subgroups(g).ok()?;
    if !subs.iter().filter(|s| s.order() < n).all(|s| is_cyclic_subgroup(g, s).is_some()) {
        return None;
    }
    let qm = q.pow(m) as usize;
    let b = g.elements().find(|&x| g.elem_order(x) == qm)?;
    let a = derived.bits().iter().find(|&x| x != g.identity())?;
    let target = g.mul(g.mul(g.inv(b), a), b);
    let r = (2..p).find(|&r| g.pow(a, r as usize) == target)?;
    Some((StructureTag::MillerMoreno { p, q, m, r }, a, b))
}

pub fn classify_structure(g: &FiniteGroup) -> StructureTag {
    let n = g.order();
    if n == 1 {
        return StructureTag::Trivial;
    }
    if let Some((p, r)) = affine::elementary_abelian_params(g) {
        return if r == 1 { StructureTag::CyclicPrime { p } } else { StructureTag::ElementaryAbelian { p, r } };
    }
    if n == 8 && !g.is_abelian() && g.elements().filter(|&x| g.elem_order(x) == 2).count() == 1 {
        return StructureTag::Q8Tag;
    }
    if let Some((tag, _, _)) = miller_moreno_frame(g) {
        return tag;
    }
    if let Some(f) = affine_frame(g) {
        return StructureTag::ScalarAffine { p: f.p, r: f.r, s: f.s, scalar_order: f.scalar_order };
    }
    StructureTag::Other
}

/// `d(G/N) < d(G)` over minimal normal `N`, or over all nontrivial normal `N`
/// when `all_normals` is set. Returns the condition and the first `N` (by
/// canonical order) violating it, as `(order of N, d(G/N))`.
pub fn quotient_rank_condition(g: &FiniteGroup, d: usize, all_normals: bool) -> (bool, Option<(usize, usize)>) {
    if g.order() == 1 {
        return (true, None);
    }
    let normals = if all_normals {
        all_normal_subgroups(g).into_iter().filter(|n| !n.is_trivial()).collect()
    } else {
        minimal_normal_subgroups(g).expect("nontrivial group")
    };
    for n in normals {
        let (q, _) = quotient(g, &n).expect("normal subgroup");
        let dq = FlexEngine::new(&q).rank();
        if dq >= d {
            return (false, Some((n.order(), dq)));
        }
    }
    (true, None)
}

/// Scalar-affine shape with `r = d - d(<g>)`.
pub fn scalar_affine_condition(tag: &StructureTag, d: usize) -> bool {
    tag.affine_rank().is_some_and(|(r, dg)| r + dg == d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub k: usize,
    pub flexible: bool,
    pub basis: &'static str,
}

/// Verdicts predicted by the classification results: `k = 1` from the
/// quotient-rank criterion; for `d = 2`, `k = 2` from the list of groups all of
/// whose proper subgroups are cyclic; for `d >= 3`, every `2 <= k < d` from the
/// shape of `G/Cyc(G)`.
pub fn predict_profile(g: &FiniteGroup, tag: &StructureTag, d: usize) -> Result<Vec<Prediction>> {
    let mut out = Vec::new();
    if d == 0 {
        return Ok(out);
    }
    let (cond1, _) = quotient_rank_condition(g, d, false);
    out.push(Prediction { k: 1, flexible: cond1, basis: "quotient-rank criterion" });
    match d {
        1 => {}
        2 => {
            if *tag == StructureTag::Other && g.order() > SUBGROUP_ENUM_CAP {
                return Err(Error::UnclassifiedStructure);
            }
            let yes = tag.is_p_squared() || matches!(tag, StructureTag::Q8Tag | StructureTag::MillerMoreno { .. });
            out.push(Prediction { k: 2, flexible: yes, basis: "all proper subgroups cyclic" });
        }
        _ => {
            let cyc = cycliciser_subgroup(g)?;
            let (q, _) = quotient(g, &cyc)?;
            let yes = scalar_affine_condition(&classify_structure(&q), d);
            for k in 2..d {
                out.push(Prediction { k, flexible: yes, basis: "G/Cyc(G) scalar affine" });
            }
        }
    }
    Ok(out)
}
