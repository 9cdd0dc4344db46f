use fixedbitset::FixedBitSet;

use super::{AnalysisError, GroupAnalysis, Verdict, Witness};
use crate::group::{Group, Subgroup};

/// `g` is flat when its conjugacy class is the coset `g[g,G]`.
///
/// `[g,G]` is the subgroup generated by the commutators `[g,x]`. The coset
/// of the raw commutator set always equals the class (`g[g,x] = x⁻¹gx`), so
/// only the generated subgroup gives a real condition.
pub fn is_flat_element(g: &Group, a: usize) -> bool {
    let cc = g.classes();
    let class = cc.members(cc.class_of(a));
    let comm = g.commutator_subgroup_of_element(a);
    if comm.order() != class.len() {
        return false;
    }
    let mut coset = FixedBitSet::with_capacity(g.order());
    for c in comm.elements() {
        coset.insert(g.mul(a, c));
    }
    class.iter().all(|&x| coset.contains(x))
}

/// Every element is flat. Uses no characters at all.
pub fn gvz_by_flatness(g: &Group) -> Verdict {
    let cc = g.classes();
    // Flatness is a class function: conjugating g conjugates [g,G].
    match cc.reps().iter().copied().find(|&a| !is_flat_element(g, a)) {
        Some(a) => Verdict::fail(
            Witness::note("class is a proper subset of g[g,G]")
                .element(a)
                .subgroup(g.commutator_subgroup_of_element(a).order()),
        ),
        None => Verdict::pass(),
    }
}

impl GroupAnalysis {
    /// Every `χ` vanishes off `Z(χ)`, and every `χ` is of central type. The
    /// two phrasings must agree character by character.
    pub fn gvz_by_definition(&self) -> Result<Verdict, AnalysisError> {
        for ca in self.characters() {
            if ca.vanishes_off_center != ca.central_type {
                return Err(self.inconsistent(format!(
                    "character {} vanishes off its center: {}, central type: {}",
                    ca.index, ca.vanishes_off_center, ca.central_type
                )));
            }
        }
        Ok(match self.characters().iter().find(|ca| !ca.central_type) {
            Some(ca) => {
                let cc = self.group().classes();
                let g = (0..cc.len())
                    .map(|c| cc.rep(c))
                    .find(|&g| !ca.center.contains(g) && !self.table().value(ca.index, g).is_zero());
                let mut w = Witness::note("nonzero outside Z(χ)").character(ca.index);
                w.element = g;
                Verdict::fail(w)
            }
            None => Verdict::pass(),
        })
    }

    /// For every nonprincipal monolithic `χ` and every `g ∉ Z(χ)` there is
    /// an `x` with `[g,x] ∈ Z(χ) ∖ ker(χ)`. True for abelian groups by
    /// convention.
    pub fn gvz_by_thm2(&self) -> Verdict {
        if self.group().is_abelian() {
            return Verdict::pass();
        }
        for ca in self.characters().iter().skip(1).filter(|ca| ca.monolithic) {
            if let Err(g) = self.commutator_criterion(&ca.center, &ca.kernel) {
                return Verdict::fail(
                    Witness::note("no x with [g,x] in Z(χ) ∖ ker(χ)")
                        .character(ca.index)
                        .element(g),
                );
            }
        }
        Verdict::pass()
    }

    /// `G` is nilpotent, and for every `N ⊴ G` with `G/N` monolithic and
    /// every `g` with `[g,G] ⊄ N` some `x` has `[g,x] ∉ N` and
    /// `[[g,x],G] ≤ N`. True for abelian groups by convention.
    pub fn gvz_by_thm3(&self) -> Verdict {
        let g = self.group();
        if g.is_abelian() {
            return Verdict::pass();
        }
        if !g.is_nilpotent() {
            return Verdict::fail(Witness::note("not nilpotent"));
        }
        for n in self.monolithic_kernels() {
            // [c,G] ≤ N iff every [c,y] lies in N; these c form the preimage
            // of Z(G/N).
            let central_mod_n = Subgroup::from_elements(
                g,
                g.elements()
                    .filter(|&c| g.elements().all(|y| n.contains(g.commutator(c, y)))),
            )
            .expect("preimage of the center of G/N is a subgroup");
            for a in g.elements().filter(|&a| !central_mod_n.contains(a)) {
                if self.commutator_witness(a, &central_mod_n, n).is_none() {
                    return Verdict::fail(
                        Witness::note("no x with [g,x] ∉ N and [[g,x],G] ≤ N")
                            .element(a)
                            .subgroup(n.order()),
                    );
                }
            }
        }
        Verdict::pass()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Family, Limits};

    fn fam(s: &str) -> Group {
        s.parse::<Family>().unwrap().build(&Limits::default()).unwrap()
    }

    #[test]
    fn raw_commutator_coset_is_always_the_class() {
        for s in ["dihedral:16", "symmetric:4", "alternating:5"] {
            let g = fam(s);
            let cc = g.classes();
            for a in g.elements() {
                let coset: Vec<usize> = {
                    let mut v: Vec<usize> = g.commutator_set(a).ones().map(|c| g.mul(a, c)).collect();
                    v.sort_unstable();
                    v
                };
                let mut class = cc.members(cc.class_of(a)).to_vec();
                class.sort_unstable();
                assert_eq!(coset, class, "{s} element {a}");
            }
        }
    }

    #[test]
    fn flat_elements() {
        let g = fam("quaternion:8");
        assert!(g.elements().all(|a| is_flat_element(&g, a)));
        assert!(gvz_by_flatness(&g).holds);
        assert!(gvz_by_flatness(&fam("dihedral:8")).holds);
        assert!(gvz_by_flatness(&fam("abelian:2,4")).holds);
        let d16 = fam("dihedral:16");
        assert!(is_flat_element(&d16, 0));
        assert!(!is_flat_element(&d16, 1));
        assert_eq!(d16.commutator_subgroup_of_element(1).order(), 4);
        let v = gvz_by_flatness(&d16);
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().element, Some(1));
        assert!(!gvz_by_flatness(&fam("symmetric:3")).holds);
    }
}
