//! Explicit extension of a rank-k tuple to a generating set of size r + 1 in
//! `p^r : <g>` with `g` a nontrivial scalar.
//!
//! The conjugates `v<g>v^-1` (one per translation `v`) meet pairwise
//! trivially. For a conjugate `H` avoiding the tuple, each entry splits as
//! `x_i = n_i h_i` with `n_i` a translation and `h_i` in `H`; translations
//! completing `{n_i}` to a basis, followed by a generator of `H`, extend the
//! tuple. Avoiding `H` alone does not make the `n_i` independent (two
//! reflections whose fixed points are collinear with `H`'s fixed point give
//! dependent parts), so conjugates are tried in translation order until the
//! parts are independent.

use crate::classify::affine::affine_frame;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroups::{closure, cyclic_subgroup, join_elements, SubgroupSet};

use super::subgroup_rank;

pub fn constructive_affine_extension(g: &FiniteGroup, tuple: &[usize]) -> Result<Vec<usize>> {
    let frame = affine_frame(g)
        .filter(|f| f.s != 1)
        .ok_or_else(|| Error::PreconditionViolated("group is not p^r:<g> with a nontrivial scalar".into()))?;
    for &x in tuple {
        if x >= g.order() {
            return Err(Error::IndexOutOfRange { index: x, order: g.order() });
        }
    }
    let k = tuple.len();
    if k > frame.r {
        return Err(Error::PreconditionViolated(format!("tuple size {k} exceeds r = {}", frame.r)));
    }
    let spanned = closure(g, tuple)?;
    if subgroup_rank(g, &spanned)? != k {
        return Err(Error::PreconditionViolated("tuple does not generate a rank-k subgroup".into()));
    }

    let v = &frame.translations;
    let translations = v.members();
    for &t in &translations {
        let c = g.conj(frame.complement_gen, t);
        let h = cyclic_subgroup(g, c);
        if tuple.iter().any(|&x| h.contains(x)) {
            continue;
        }
        let parts: Vec<usize> = tuple
            .iter()
            .map(|&x| h.bits().iter().map(|hi| g.mul(x, g.inv(hi))).find(|&n| v.contains(n)).expect("G = V H"))
            .collect();
        let mut span = closure(g, &parts)?;
        if span.order() != (frame.p as usize).pow(k as u32) {
            continue;
        }
        let mut ext = Vec::with_capacity(frame.r + 1 - k);
        for &y in &translations {
            if span.order() == v.order() {
                break;
            }
            if !span.contains(y) {
                span = join_elements(g, &span, &[y]);
                ext.push(y);
            }
        }
        ext.push(c);
        let all = join_elements(g, &SubgroupSet::trivial(g), &[tuple, &ext[..]].concat());
        if all.order() != g.order() {
            return Err(Error::InternalInvariantViolation(format!(
                "extension {ext:?} of {tuple:?} generates a subgroup of order {}",
                all.order()
            )));
        }
        return Ok(ext);
    }
    Err(Error::InternalInvariantViolation(format!(
        "no conjugate of the complement gives independent translation parts for {tuple:?}"
    )))
}
