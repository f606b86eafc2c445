use std::sync::Arc;

use super::{FiniteGroup, GroupRef, Subgroup};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A group homomorphism between two explicit groups, checked on construction.
#[derive(Clone, Debug)]
pub struct Hom {
    source: GroupRef,
    target: GroupRef,
    map: Vec<usize>,
}

impl Hom {
    pub fn new(source: GroupRef, target: GroupRef, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() || map.iter().any(|&y| y >= target.order()) {
            return Err(Error::InvalidParameter("map has wrong shape".into()));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::InvalidParameter(format!(
                        "map is not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Hom { source, target, map })
    }

    pub fn identity(g: &GroupRef) -> Self {
        Hom {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.order()).collect(),
        }
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = h.generators().iter().map(|&x| self.map[x]).collect();
        self.target.generate(&gens)
    }

    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let bits = BitSet::from_indices(
            self.source.order(),
            (0..self.source.order()).filter(|&x| h.contains(self.map[x])),
        );
        self.source.subgroup_from_bits(bits)
    }

    pub fn kernel(&self) -> Subgroup {
        self.preimage(&self.target.trivial_subgroup())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&self.source.whole()).order() == self.target.order()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Hom) -> Result<Hom> {
        if !super::same_group(&self.target, &next.source) {
            return Err(Error::GroupMismatch);
        }
        Ok(Hom {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&x| next.map[x]).collect(),
        })
    }
}

/// An injective homomorphism `H -> G`, identifying `H` with a subgroup of `G`.
#[derive(Clone, Debug)]
pub struct Embedding {
    hom: Hom,
    image: Subgroup,
}

impl Embedding {
    pub fn new(hom: Hom) -> Result<Self> {
        if !hom.is_injective() {
            return Err(Error::InvalidParameter("embedding is not injective".into()));
        }
        let image = hom.image(&hom.source.whole());
        Ok(Embedding { hom, image })
    }

    /// Realises `h <= parent` as a group in its own right, elements in sorted member order.
    pub fn of_subgroup(parent: &GroupRef, h: &Subgroup) -> Embedding {
        let members = h.members();
        let mut pos = vec![usize::MAX; parent.order()];
        for (i, &x) in members.iter().enumerate() {
            pos[x] = i;
        }
        let n = members.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in members {
            for &b in members {
                table.push(pos[parent.mul(a, b)] as u32);
            }
        }
        let label = if n == parent.order() {
            parent.label().to_string()
        } else {
            format!("{}[{}]", parent.label(), n)
        };
        let sub = FiniteGroup::from_table(label, n, table).expect("subgroup table");
        Embedding {
            hom: Hom {
                source: Arc::new(sub),
                target: parent.clone(),
                map: members.to_vec(),
            },
            image: h.clone(),
        }
    }

    pub fn hom(&self) -> &Hom {
        &self.hom
    }

    pub fn sub(&self) -> &GroupRef {
        &self.hom.source
    }

    pub fn parent(&self) -> &GroupRef {
        &self.hom.target
    }

    /// The image of the embedding as a subgroup of the parent.
    pub fn image(&self) -> &Subgroup {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.hom.map[x]
    }

    /// Pulls a subgroup of the parent lying inside the image back to the source.
    pub fn pull_back(&self, k: &Subgroup) -> Result<Subgroup> {
        if !k.is_subgroup_of(&self.image) {
            return Err(Error::NotContained(
                "subgroup does not lie in the embedded image".into(),
            ));
        }
        Ok(self.hom.preimage(k))
    }

    pub fn push_forward(&self, k: &Subgroup) -> Subgroup {
        self.hom.image(k)
    }
}

/// The canonical surjection `G -> G/N`. Cosets are numbered by their smallest element.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    hom: Hom,
    kernel: Subgroup,
    reps: Vec<usize>,
}

impl QuotientMap {
    pub fn new(g: &GroupRef, n: &Subgroup) -> Result<Self> {
        if !g.is_normal(n) {
            return Err(Error::NotNormal(format!(
                "subgroup of order {} in {}",
                n.order(),
                g.label()
            )));
        }
        let mut coset = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for x in 0..g.order() {
            if coset[x] == usize::MAX {
                let c = reps.len();
                reps.push(x);
                for &k in n.members() {
                    coset[g.mul(x, k)] = c;
                }
            }
        }
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(coset[g.mul(a, b)] as u32);
            }
        }
        let label = if n.is_trivial() {
            g.label().to_string()
        } else {
            format!("{}/{}", g.label(), n.order())
        };
        let q = FiniteGroup::from_table(label, m, table)?;
        Ok(QuotientMap {
            hom: Hom {
                source: g.clone(),
                target: Arc::new(q),
                map: coset,
            },
            kernel: n.clone(),
            reps,
        })
    }

    pub fn hom(&self) -> &Hom {
        &self.hom
    }

    pub fn group(&self) -> &GroupRef {
        &self.hom.source
    }

    pub fn quotient(&self) -> &GroupRef {
        &self.hom.target
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    #[inline]
    pub fn project(&self, x: usize) -> usize {
        self.hom.map[x]
    }

    /// Smallest element of the coset with index `c`.
    pub fn lift(&self, c: usize) -> usize {
        self.reps[c]
    }

    /// `KN/N`.
    pub fn image(&self, k: &Subgroup) -> Subgroup {
        self.hom.image(k)
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, k: &Subgroup) -> Subgroup {
        self.hom.preimage(k)
    }
}

/// A bijective homomorphism.
#[derive(Clone, Debug)]
pub struct Isomorphism {
    hom: Hom,
}

impl Isomorphism {
    pub fn new(hom: Hom) -> Result<Self> {
        if hom.source.order() != hom.target.order() || !hom.is_injective() {
            return Err(Error::NotIsomorphism("map is not bijective".into()));
        }
        Ok(Isomorphism { hom })
    }

    pub fn from_map(source: GroupRef, target: GroupRef, map: Vec<usize>) -> Result<Self> {
        let hom = Hom::new(source, target, map).map_err(|e| Error::NotIsomorphism(e.to_string()))?;
        Self::new(hom)
    }

    pub fn identity(g: &GroupRef) -> Self {
        Isomorphism {
            hom: Hom::identity(g),
        }
    }

    /// Conjugation `x -> g x g^-1` between `H` and `gHg^-1`, both realised as groups.
    pub fn inner(g: &GroupRef, x: usize) -> Self {
        let map = (0..g.order()).map(|y| g.conjugate(x, y)).collect();
        Isomorphism {
            hom: Hom {
                source: g.clone(),
                target: g.clone(),
                map,
            },
        }
    }

    pub fn hom(&self) -> &Hom {
        &self.hom
    }

    pub fn source(&self) -> &GroupRef {
        &self.hom.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.hom.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.hom.map[x]
    }

    pub fn image(&self, k: &Subgroup) -> Subgroup {
        self.hom.image(k)
    }

    pub fn inverse(&self) -> Isomorphism {
        let mut inv = vec![0; self.hom.map.len()];
        for (x, &y) in self.hom.map.iter().enumerate() {
            inv[y] = x;
        }
        Isomorphism {
            hom: Hom {
                source: self.hom.target.clone(),
                target: self.hom.source.clone(),
                map: inv,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;

    #[test]
    fn quotient_of_c4_by_c2() {
        let g = Arc::new(FiniteGroup::cyclic(4, DEFAULT_ORDER_CAP).unwrap());
        let n = g.generate(&[2]);
        let q = QuotientMap::new(&g, &n).unwrap();
        assert_eq!(q.quotient().order(), 2);
        assert_eq!(q.project(0), 0);
        assert!(q.hom().is_surjective());
        assert_eq!(q.kernel(), &n);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = Arc::new(FiniteGroup::dihedral(6, DEFAULT_ORDER_CAP).unwrap());
        let refl = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        let h = g.generate(&[refl]);
        assert!(matches!(QuotientMap::new(&g, &h), Err(Error::NotNormal(_))));
    }

    #[test]
    fn subgroup_as_group() {
        let g = Arc::new(FiniteGroup::dihedral(8, DEFAULT_ORDER_CAP).unwrap());
        let z = g.center();
        let e = Embedding::of_subgroup(&g, &z);
        assert_eq!(e.sub().order(), 2);
        assert_eq!(e.image(), &z);
        assert_eq!(e.pull_back(&z).unwrap().order(), 2);
    }
}
