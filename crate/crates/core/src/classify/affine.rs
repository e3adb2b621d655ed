//! Recognising `p^r : <g>` with `g` a scalar matrix.

use crate::arith::{factorize, mult_order};
use crate::group::FiniteGroup;
use crate::subgroups::SubgroupSet;

/// A decomposition `G = V : <h>` with `V` elementary abelian of order `p^r`
/// and `h v h^-1 = v^s` for every `v` in `V`, the action being faithful.
/// For elementary abelian `G` the complement is trivial and `s = 1`.
#[derive(Clone, Debug)]
pub struct AffineFrame {
    pub p: u64,
    pub r: usize,
    pub s: u64,
    pub scalar_order: usize,
    pub translations: SubgroupSet,
    pub complement_gen: usize,
}

fn p_power(mut n: usize, p: usize) -> Option<usize> {
    let mut r = 0;
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        r += 1;
    }
    Some(r)
}

pub fn elementary_abelian_params(g: &FiniteGroup) -> Option<(u64, usize)> {
    let f = factorize(g.order() as u64);
    if f.len() != 1 || !g.is_abelian() || g.exponent() as u64 != f[0].0 {
        return None;
    }
    Some((f[0].0, f[0].1 as usize))
}

pub fn affine_frame(g: &FiniteGroup) -> Option<AffineFrame> {
    if let Some((p, r)) = elementary_abelian_params(g) {
        return Some(AffineFrame {
            p,
            r,
            s: 1,
            scalar_order: 1,
            translations: SubgroupSet::whole(g),
            complement_gen: g.identity(),
        });
    }
    let n = g.order();
    for (p, e) in factorize(n as u64) {
        let pu = p as usize;
        let vorder = pu.pow(e);
        let o = n / vorder;
        if o == 1 || (p - 1) % o as u64 != 0 {
            continue;
        }
        let vmembers: Vec<usize> = g.elements().filter(|&x| p_power(g.elem_order(x), pu).is_some()).collect();
        if vmembers.len() != vorder || vmembers.iter().any(|&x| x != g.identity() && g.elem_order(x) != pu) {
            continue;
        }
        let Ok(v) = SubgroupSet::from_members(g, &vmembers) else {
            continue;
        };
        if !vmembers.iter().all(|&x| vmembers.iter().all(|&y| g.mul(x, y) == g.mul(y, x))) {
            continue;
        }
        let Some(h) = g.elements().find(|&x| g.elem_order(x) == o) else {
            continue;
        };
        let v0 = vmembers.iter().copied().find(|&x| x != g.identity()).expect("p^e > 1");
        let image = g.conj(v0, h);
        let Some(s) = (1..p).find(|&s| g.pow(v0, s as usize) == image) else {
            continue;
        };
        if mult_order(s, p) != Some(o as u64) {
            continue;
        }
        if vmembers.iter().all(|&x| g.conj(x, h) == g.pow(x, s as usize)) {
            return Some(AffineFrame { p, r: e as usize, s, scalar_order: o, translations: v, complement_gen: h });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, elementary_abelian, quaternion8, scalar_affine, symmetric};

    #[test]
    fn recovers_constructor_parameters() {
        for (p, r, s) in [(3, 2, 2), (5, 2, 4), (5, 2, 2), (3, 3, 2), (7, 1, 3), (3, 1, 2)] {
            let f = affine_frame(&scalar_affine(p, r, s).unwrap()).unwrap();
            assert_eq!((f.p, f.r, f.s), (p, r, s));
            assert_eq!(f.translations.order(), (p as usize).pow(r as u32));
        }
        let f = affine_frame(&elementary_abelian(2, 3).unwrap()).unwrap();
        assert_eq!((f.p, f.r, f.s), (2, 3, 1));
    }

    #[test]
    fn rejects_other_groups() {
        assert!(affine_frame(&quaternion8()).is_none());
        assert!(affine_frame(&cyclic(6).unwrap()).is_none());
        assert!(affine_frame(&symmetric(4).unwrap()).is_none());
        // S3 is 3:<-1>
        assert!(affine_frame(&symmetric(3).unwrap()).is_some());
    }
}
