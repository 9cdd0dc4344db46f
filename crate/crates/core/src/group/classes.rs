use super::Group;

/// Conjugacy classes of a group.
///
/// Classes are sorted by (order of representative, representative index);
/// the representative of each class is its least element index. The
/// identity class is therefore always class 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClasses {
    class_of: Vec<usize>,
    reps: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl ConjugacyClasses {
    pub(crate) fn compute(g: &Group) -> ConjugacyClasses {
        let n = g.order();
        let mut seen = vec![false; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut orbit = Vec::new();
            for x in 0..n {
                let c = g.conjugate(a, x);
                if !seen[c] {
                    seen[c] = true;
                    orbit.push(c);
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        // orbit[0] is the least member since the orbit is sorted.
        orbits.sort_by_key(|o| (g.element_order(o[0]), o[0]));
        let mut class_of = vec![0; n];
        for (c, orbit) in orbits.iter().enumerate() {
            for &a in orbit {
                class_of[a] = c;
            }
        }
        ConjugacyClasses {
            class_of,
            reps: orbits.iter().map(|o| o[0]).collect(),
            members: orbits,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn rep(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn size(&self, class: usize) -> usize {
        self.members[class].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    /// Members of a class in increasing index order.
    pub fn members(&self, class: usize) -> &[usize] {
        &self.members[class]
    }
}

#[cfg(test)]
mod tests {
    use crate::group::{family, Limits};

    #[test]
    fn abelian_classes_are_singletons() {
        let g = family("abelian", &[2, 4], &Limits::default()).unwrap();
        assert_eq!(g.classes().len(), 8);
        assert!(g.classes().sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn s3_class_sizes() {
        let g = family("symmetric", &[3], &Limits::default()).unwrap();
        assert_eq!(g.classes().sizes(), vec![1, 3, 2]);
    }

    #[test]
    fn q8_class_sizes() {
        let g = family("quaternion", &[8], &Limits::default()).unwrap();
        assert_eq!(g.classes().sizes(), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn d8_has_five_classes() {
        let g = family("dihedral", &[8], &Limits::default()).unwrap();
        let cc = g.classes();
        assert_eq!(cc.len(), 5);
        assert_eq!(cc.rep(0), 0);
        for c in 0..cc.len() {
            assert_eq!(cc.rep(c), cc.members(c)[0]);
        }
    }
}
