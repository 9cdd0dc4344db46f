use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::Group;

/// A subgroup stored as a membership bitset over the parent's elements.
#[derive(Debug, Clone)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
    normal: bool,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.as_slice().hash(state);
    }
}

impl Subgroup {
    /// Wraps a membership set that is already known to be closed.
    pub(crate) fn from_closed_set(g: &Group, members: FixedBitSet) -> Subgroup {
        let order = members.count_ones(..);
        assert!(members.contains(0), "subgroup must contain the identity");
        assert_eq!(
            g.order() % order,
            0,
            "subgroup order {order} does not divide |G| = {}",
            g.order()
        );
        debug_assert!(members
            .ones()
            .all(|a| members.contains(g.inv(a)) && members.ones().all(|b| members.contains(g.mul(a, b)))));
        let normal = members
            .ones()
            .all(|h| (0..g.order()).all(|x| members.contains(g.conjugate(h, x))));
        Subgroup { members, order, normal }
    }

    /// Checks closure and returns `None` for a set that is not a subgroup.
    pub fn from_elements(g: &Group, elements: impl IntoIterator<Item = usize>) -> Option<Subgroup> {
        let mut members = FixedBitSet::with_capacity(g.order());
        for a in elements {
            members.insert(a);
        }
        if !members.contains(0) {
            return None;
        }
        let closed = members
            .ones()
            .all(|a| members.ones().all(|b| members.contains(g.mul(a, b))));
        closed.then(|| Subgroup::from_closed_set(g, members))
    }

    pub fn trivial(g: &Group) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(g.order());
        members.insert(0);
        Subgroup {
            members,
            order: 1,
            normal: true,
        }
    }

    pub fn whole(g: &Group) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(g.order());
        members.insert_range(..);
        Subgroup {
            members,
            order: g.order(),
            normal: true,
        }
    }

    /// The subgroup generated by `seed`.
    pub fn generated(g: &Group, seed: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(g.order());
        members.insert(0);
        let mut elements = vec![0usize];
        let mut gens: Vec<usize> = Vec::new();
        for s in seed {
            if members.contains(s) {
                continue;
            }
            gens.push(s);
            // Right-multiply everything found so far by all generators until
            // the set is closed; a finite set closed under right
            // multiplication by the generators is the generated subgroup.
            let mut head = 0;
            while head < elements.len() {
                let e = elements[head];
                for &t in &gens {
                    let p = g.mul(e, t);
                    if !members.contains(p) {
                        members.insert(p);
                        elements.push(p);
                    }
                }
                head += 1;
            }
        }
        Subgroup::from_closed_set(g, members)
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(g: &Group, seed: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut conjugates = FixedBitSet::with_capacity(g.order());
        for s in seed {
            for x in g.elements() {
                conjugates.insert(g.conjugate(s, x));
            }
        }
        Subgroup::generated(g, conjugates.ones())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, g: &Group, other: &Subgroup) -> Subgroup {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Subgroup::from_closed_set(g, members)
    }

    /// `H·K`, assuming one of the two is normal so the product is a subgroup.
    pub fn product(&self, g: &Group, other: &Subgroup) -> Subgroup {
        Subgroup::generated(g, self.elements().chain(other.elements()))
    }

    pub fn index_in(&self, g: &Group) -> usize {
        g.order() / self.order
    }

    /// True if every pair of members commutes.
    pub fn is_abelian(&self, g: &Group) -> bool {
        self.elements().all(|a| self.elements().all(|b| g.commutes(a, b)))
    }
}
