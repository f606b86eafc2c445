//! Isomorphism search by backtracking over images of a small generating set.

use super::FiniteGroup;

/// Returns a bijection `G -> H` preserving multiplication, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    search(g, h, true, &mut out);
    out.pop()
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Every automorphism of `g`, as element maps.
pub fn automorphisms(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    search(g, g, false, &mut out);
    out
}

/// Per-element invariant used to prune candidate images.
fn profile(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n)
        .map(|x| {
            let centralizer = (0..n).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
            (g.element_order(x), centralizer)
        })
        .collect()
}

fn search(g: &FiniteGroup, h: &FiniteGroup, first_only: bool, out: &mut Vec<Vec<usize>>) {
    if g.order() != h.order() {
        return;
    }
    let pg = profile(g);
    let ph = profile(h);
    let mut sg = pg.clone();
    let mut sh = ph.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return;
    }
    let gens = g.generators().to_vec();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| (0..h.order()).filter(|&y| ph[y] == pg[x]).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    backtrack(g, h, &gens, &candidates, &mut images, first_only, out);
}

fn backtrack(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    first_only: bool,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    let depth = images.len();
    if depth == gens.len() {
        if let Some(map) = extend(g, h, gens, images) {
            if map.iter().filter(|&&y| y != usize::MAX).count() == g.order() && is_injective(&map, h.order()) {
                out.push(map);
                return first_only;
            }
        }
        return false;
    }
    for &y in &candidates[depth] {
        images.push(y);
        if extend(g, h, &gens[..=depth], images).is_some()
            && backtrack(g, h, gens, candidates, images, first_only, out)
        {
            return true;
        }
        images.pop();
    }
    false
}

/// Extends generator images along the Cayley graph of `<gens>`; `None` on a conflict.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
        i += 1;
    }
    Some(map)
}

fn is_injective(map: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP as CAP;

    #[test]
    fn c4_not_klein() {
        let c4 = FiniteGroup::cyclic(4, CAP).unwrap();
        let v4 = FiniteGroup::elementary_abelian(2, 2, CAP).unwrap();
        assert!(!is_isomorphic(&c4, &v4));
    }

    #[test]
    fn dihedral_presentations_agree() {
        let a = FiniteGroup::dihedral(8, CAP).unwrap();
        let b = FiniteGroup::from_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]], CAP).unwrap();
        let w = find_isomorphism(&a, &b).expect("witness");
        for x in 0..8 {
            for y in 0..8 {
                assert_eq!(w[a.mul(x, y)], b.mul(w[x], w[y]));
            }
        }
        // M_8 and X_8 are both dihedral
        assert!(is_isomorphic(&a, &FiniteGroup::modular(2, CAP).unwrap()));
        assert!(is_isomorphic(&a, &FiniteGroup::heisenberg(2, CAP).unwrap()));
        assert!(!is_isomorphic(&a, &FiniteGroup::quaternion()));
    }

    #[test]
    fn order_27_extraspecial_differ() {
        let m = FiniteGroup::modular(3, CAP).unwrap();
        let x = FiniteGroup::heisenberg(3, CAP).unwrap();
        assert!(!is_isomorphic(&m, &x));
    }

    #[test]
    fn automorphism_counts() {
        let v4 = FiniteGroup::elementary_abelian(2, 2, CAP).unwrap();
        assert_eq!(automorphisms(&v4).len(), 6);
        let c8 = FiniteGroup::cyclic(8, CAP).unwrap();
        assert_eq!(automorphisms(&c8).len(), 4);
        let d8 = FiniteGroup::dihedral(8, CAP).unwrap();
        assert_eq!(automorphisms(&d8).len(), 8);
        let q8 = FiniteGroup::quaternion();
        assert_eq!(automorphisms(&q8).len(), 24);
        let e = FiniteGroup::elementary_abelian(2, 3, CAP).unwrap();
        assert_eq!(automorphisms(&e).len(), 168);
    }
}
