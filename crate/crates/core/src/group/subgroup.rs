use std::hash::{Hash, Hasher};

use crate::bitset::BitSet;

/// A subgroup of some parent group, stored as a sorted member list plus a
/// generating set. Equality and hashing look only at the members.
#[derive(Clone, Debug)]
pub struct Subgroup {
    bits: BitSet,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_parts(bits: BitSet, gens: Vec<usize>) -> Self {
        let members = bits.iter().collect();
        Subgroup {
            bits,
            members,
            gens,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    /// Sorted member indices; this is the canonical encoding.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}
