//! Brute-force isomorphism search by generator images. Small groups only.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroups::{join_elements, SubgroupSet};

pub const ISO_ORDER_LIMIT: usize = 24;

/// Greedy irredundant generating list in index order.
fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut h = SubgroupSet::trivial(g);
    let mut gens = Vec::new();
    for x in g.elements() {
        if h.order() == g.order() {
            break;
        }
        if !h.contains(x) {
            h = join_elements(g, &h, &[x]);
            gens.push(x);
        }
    }
    gens
}

/// An isomorphism `g -> h` as an image list, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    if g.order().max(h.order()) > ISO_ORDER_LIMIT {
        return Err(Error::PreconditionViolated(format!("isomorphism search is limited to order {ISO_ORDER_LIMIT}")));
    }
    if g.order() != h.order() {
        return Ok(None);
    }
    let gens = greedy_generators(g);
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(g, h, &gens, &mut images))
}

fn search(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &mut Vec<usize>) -> Option<Vec<usize>> {
    if images.len() == gens.len() {
        return extend(g, h, gens, images);
    }
    let want = g.elem_order(gens[images.len()]);
    for y in h.elements().filter(|&y| h.elem_order(y) == want) {
        images.push(y);
        if let Some(m) = search(g, h, gens, images) {
            return Some(m);
        }
        images.pop();
    }
    None
}

fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    map[g.identity()] = h.identity();
    used[h.identity()] = true;
    let mut queue = vec![g.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let img = h.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[img] {
                    return None;
                }
                used[img] = true;
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
        i += 1;
    }
    Some(map)
}

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}
