use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::cyclotomic::{CyclotomicInt, Root};
use super::{CharError, CharacterTable};
use crate::group::{Group, QuotientMap, Subgroup};

/// A linear character `λ` of `Z(G)`, stored as its root-of-unity value on
/// each central element (indices of `G`, increasing).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CentralCharacter {
    values: Vec<(usize, Root)>,
}

impl CentralCharacter {
    pub fn new(mut values: Vec<(usize, Root)>) -> CentralCharacter {
        values.sort_unstable();
        CentralCharacter { values }
    }

    pub fn values(&self) -> &[(usize, Root)] {
        &self.values
    }

    pub fn value(&self, z: usize) -> Option<Root> {
        self.values
            .binary_search_by_key(&z, |&(e, _)| e)
            .ok()
            .map(|i| self.values[i].1)
    }

    pub fn kernel_elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.iter().filter(|(_, r)| r.is_one()).map(|&(z, _)| z)
    }

    pub fn kernel(&self, g: &Group) -> Subgroup {
        Subgroup::from_elements(g, self.kernel_elements()).expect("kernel of a homomorphism is a subgroup")
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_elements().count() == 1
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|(_, r)| r.is_one())
    }

    /// `λ(ab) = λ(a)λ(b)` on every pair.
    pub fn is_homomorphism(&self, g: &Group) -> bool {
        self.values.iter().all(|&(a, ra)| {
            self.values
                .iter()
                .all(|&(b, rb)| self.value(g.mul(a, b)) == Some(ra * rb))
        })
    }
}

/// The irreducible characters of `Z(G)`, computed from the character table
/// of the center as a standalone group.
pub fn center_irreducibles(g: &Group, center: &Subgroup) -> Result<Vec<CentralCharacter>, CharError> {
    let (z, embed) = g.subgroup_as_group(center, format!("Z({})", g.name()));
    let table = CharacterTable::compute(Arc::new(z))?;
    table
        .chars()
        .iter()
        .map(|chi| {
            let values = embed
                .iter()
                .enumerate()
                .map(|(local, &global)| {
                    table
                        .value(chi.index(), local)
                        .as_multiple_of_root(1)
                        .map(|r| (global, r))
                        .ok_or(CharError::NotCentralElement(global))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CentralCharacter::new(values))
        })
        .collect()
}

impl CharacterTable {
    /// Union of the classes whose value satisfies `pred`.
    fn classes_where(&self, chi: usize, pred: impl Fn(&CyclotomicInt) -> bool) -> Subgroup {
        let g = self.group();
        let cc = g.classes();
        let mut bits = FixedBitSet::with_capacity(g.order());
        for (c, v) in self.char(chi).values().iter().enumerate() {
            if pred(v) {
                for &a in cc.members(c) {
                    bits.insert(a);
                }
            }
        }
        Subgroup::from_elements(g, bits.ones()).expect("kernel and center of a character are subgroups")
    }

    /// `ker(χ) = {g : χ(g) = χ(1)}`.
    pub fn kernel_of(&self, chi: usize) -> Subgroup {
        let d = self.char(chi).degree() as i64;
        let degree = CyclotomicInt::from_int(d);
        let ker = self.classes_where(chi, |v| *v == degree);
        // Same set via the eigenvalue multiplicities: every eigenvalue is 1.
        debug_assert_eq!(ker, self.classes_where(chi, |v| v.coeffs()[0] == d));
        assert!(ker.is_normal());
        ker
    }

    /// `Z(χ) = {g : |χ(g)| = χ(1)}`, tested as `χ(g)·conj(χ(g)) = χ(1)²`.
    pub fn center_of(&self, chi: usize) -> Subgroup {
        let d = self.char(chi).degree() as i64;
        let square = CyclotomicInt::from_int(d * d);
        let z = self.classes_where(chi, |v| v.norm_squared() == square);
        assert!(z.is_normal());
        z
    }

    /// True iff `χ` vanishes on every class with representative outside `s`.
    pub fn vanishes_off(&self, chi: usize, s: &Subgroup) -> bool {
        let cc = self.group().classes();
        self.char(chi)
            .values()
            .iter()
            .enumerate()
            .filter(|&(c, _)| !s.contains(cc.rep(c)))
            .all(|(_, v)| v.is_zero())
    }

    /// `λ` with `χ_{Z(G)} = χ(1)·λ`.
    pub fn central_character(&self, chi: usize, center: &Subgroup) -> Result<CentralCharacter, CharError> {
        let d = self.char(chi).degree() as i64;
        let values = center
            .elements()
            .map(|z| {
                self.value(chi, z)
                    .as_multiple_of_root(d)
                    .map(|r| (z, r))
                    .ok_or(CharError::NotCentralElement(z))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let lambda = CentralCharacter::new(values);
        let g = self.group();
        assert!(
            lambda.is_homomorphism(g),
            "restriction to the center is not a homomorphism"
        );
        debug_assert_eq!(lambda.kernel(g), self.kernel_of(chi).intersection(g, center));
        Ok(lambda)
    }

    /// Number of irreducible constituents of `λ^G`: the characters whose
    /// restriction to `Z(G)` is a multiple of `λ`.
    pub fn induced_constituent_count(&self, lambda: &CentralCharacter, center: &Subgroup) -> Result<usize, CharError> {
        Ok(self.constituents(lambda, center)?.len())
    }

    pub fn constituents(&self, lambda: &CentralCharacter, center: &Subgroup) -> Result<Vec<usize>, CharError> {
        let mut out = Vec::new();
        for chi in 0..self.len() {
            if &self.central_character(chi, center)? == lambda {
                out.push(chi);
            }
        }
        Ok(out)
    }

    /// `λ` for every irreducible character, in table order.
    pub fn central_characters(&self, center: &Subgroup) -> Result<Vec<CentralCharacter>, CharError> {
        (0..self.len()).map(|chi| self.central_character(chi, center)).collect()
    }

    /// `λ ∈ Irr(Z(G))` is fully ramified with respect to `G/Z(G)` iff `λ^G`
    /// has a unique irreducible constituent. When it does, that constituent
    /// has degree `√|G:Z(G)|` and vanishes off the center.
    pub fn is_fully_ramified(&self, lambda: &CentralCharacter, center: &Subgroup) -> Result<bool, CharError> {
        let constituents = self.constituents(lambda, center)?;
        Ok(self.single_constituent_is_fully_ramified(&constituents, center))
    }

    /// Same as [`CharacterTable::is_fully_ramified`] for precomputed
    /// constituents.
    pub fn single_constituent_is_fully_ramified(&self, constituents: &[usize], center: &Subgroup) -> bool {
        if let [chi] = constituents[..] {
            let d = self.char(chi).degree();
            assert_eq!(
                d * d,
                center.index_in(self.group()),
                "fully ramified constituent has the wrong degree"
            );
            assert!(
                self.vanishes_off(chi, center),
                "fully ramified constituent does not vanish off Z(G)"
            );
            true
        } else {
            false
        }
    }

    /// `Z(χ)/ker(χ)` coincides with the center of `G/ker(χ)` and is cyclic.
    pub fn center_quotient_is_consistent(&self, chi: usize) -> bool {
        let g = self.group();
        let ker = self.kernel_of(chi);
        let z = self.center_of(chi);
        let q = QuotientMap::new(g, &ker).expect("character kernels are normal");
        let image_center: Vec<usize> = q.image().center().elements().collect();
        let projected = q.project_set(&z);
        let cyclic = projected.iter().any(|&x| q.image().element_order(x) == projected.len());
        projected == image_center && cyclic
    }
}
