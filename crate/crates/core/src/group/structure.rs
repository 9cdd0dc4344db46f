//! Centers, commutators and the normal-structure predicates the GVZ
//! characterizations quantify over.

use fixedbitset::FixedBitSet;

use super::{prime_factors, Group, QuotientMap, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowFactor {
    pub prime: usize,
    pub subgroup: Subgroup,
}

impl Group {
    pub fn center(&self) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.order());
        for z in self.elements() {
            if self.elements().all(|g| self.commutes(z, g)) {
                bits.insert(z);
            }
        }
        Subgroup::from_closed_set(self, bits)
    }

    pub fn centralizer(&self, g: usize) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.order());
        for x in self.elements() {
            if self.commutes(g, x) {
                bits.insert(x);
            }
        }
        Subgroup::from_closed_set(self, bits)
    }

    /// The raw set `{[g, x] : x ∈ G}`, which need not be a subgroup.
    pub fn commutator_set(&self, g: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.order());
        for x in self.elements() {
            bits.insert(self.commutator(g, x));
        }
        bits
    }

    /// `[g, G]`: the subgroup generated by the commutators of `g`.
    pub fn commutator_subgroup_of_element(&self, g: usize) -> Subgroup {
        Subgroup::generated(self, self.commutator_set(g).ones())
    }

    /// `[H, K]`.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.order());
        for a in h.elements() {
            for b in k.elements() {
                bits.insert(self.commutator(a, b));
            }
        }
        Subgroup::generated(self, bits.ones())
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let whole = Subgroup::whole(self);
        self.commutator_subgroup(&whole, &whole)
    }

    /// `D_G(g) = {x : [x, g] ∈ Z(G)}`, the preimage of the centralizer of
    /// `gZ(G)` in `G/Z(G)`.
    pub fn d_subgroup(&self, g: usize) -> Subgroup {
        let z = self.center();
        self.d_subgroup_with_center(g, &z)
    }

    pub fn d_subgroup_with_center(&self, g: usize, z: &Subgroup) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.order());
        for x in self.elements() {
            if z.contains(self.commutator(x, g)) {
                bits.insert(x);
            }
        }
        let d = Subgroup::from_elements(self, bits.ones()).expect("D_G(g) is closed under multiplication");
        assert!(z.is_subgroup_of(&d), "D_G(g) must contain Z(G)");
        assert!(self.centralizer(g).is_subgroup_of(&d), "D_G(g) must contain C_G(g)");
        d
    }

    /// Minimal normal subgroups, ordered by their least nontrivial element.
    ///
    /// Every minimal normal subgroup is the normal closure of each of its
    /// nontrivial elements, so it suffices to take closures of single class
    /// representatives and keep the inclusion-minimal ones.
    pub fn minimal_normal_subgroups(&self) -> Vec<Subgroup> {
        let cc = self.classes();
        let mut closures: Vec<Subgroup> = Vec::new();
        for c in 1..cc.len() {
            let n = Subgroup::normal_closure(self, [cc.rep(c)]);
            if !closures.contains(&n) {
                closures.push(n);
            }
        }
        let mut minimal: Vec<Subgroup> = closures
            .iter()
            .filter(|n| !closures.iter().any(|m| m != *n && m.is_subgroup_of(n)))
            .cloned()
            .collect();
        minimal.sort_by_key(|n| n.elements().nth(1));
        minimal
    }

    /// A group is monolithic when it has exactly one minimal normal
    /// subgroup. The trivial group has none and is not monolithic.
    pub fn is_monolithic(&self) -> bool {
        self.order() > 1 && self.minimal_normal_subgroups().len() == 1
    }

    /// `γ_1 = G, γ_{i+1} = [γ_i, G]`, up to and including the first repeat.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let whole = Subgroup::whole(self);
        let mut series = vec![whole.clone()];
        loop {
            let next = self.commutator_subgroup(series.last().unwrap(), &whole);
            if &next == series.last().unwrap() {
                return series;
            }
            let done = next.is_trivial();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_trivial()
    }

    /// For nilpotent groups, the Sylow subgroups (elements of prime-power
    /// order) for each prime divisor of `|G|` in increasing prime order.
    /// `None` when the group is not nilpotent.
    pub fn sylow_factorization(&self) -> Option<Vec<SylowFactor>> {
        if !self.is_nilpotent() {
            return None;
        }
        let primes = prime_factors(self.order());
        let factors: Vec<SylowFactor> = primes
            .iter()
            .map(|&p| {
                let members = self
                    .elements()
                    .filter(|&a| prime_factors(self.element_order(a)).iter().all(|&q| q == p));
                let subgroup =
                    Subgroup::from_elements(self, members).expect("p-elements of a nilpotent group form a subgroup");
                SylowFactor { prime: p, subgroup }
            })
            .collect();
        let product: usize = factors.iter().map(|f| f.subgroup.order()).product();
        assert_eq!(product, self.order(), "Sylow orders must multiply to |G|");
        for (i, a) in factors.iter().enumerate() {
            for b in &factors[i + 1..] {
                assert!(a.subgroup.intersection(self, &b.subgroup).is_trivial());
            }
        }
        Some(factors)
    }

    /// Re-indexes a subgroup as a standalone group. Returns the group and
    /// the embedding (new index → old index), which is increasing.
    pub fn subgroup_as_group(&self, h: &Subgroup, name: impl Into<String>) -> (Group, Vec<usize>) {
        let embed: Vec<usize> = h.elements().collect();
        let mut local = vec![u32::MAX; self.order()];
        for (i, &a) in embed.iter().enumerate() {
            local[a] = i as u32;
        }
        let m = embed.len();
        let mut mul = vec![0u32; m * m];
        for (i, &a) in embed.iter().enumerate() {
            for (j, &b) in embed.iter().enumerate() {
                mul[i * m + j] = local[self.mul(a, b)];
            }
        }
        (Group::from_trusted_table(name, m, mul), embed)
    }

    /// `D_G(g)/Z(G)` equals the centralizer of `gZ` in `G/Z` (checked by
    /// projecting both sides).
    pub fn d_subgroup_matches_quotient_centralizer(&self, g: usize) -> bool {
        let z = self.center();
        let d = self.d_subgroup_with_center(g, &z);
        let q = QuotientMap::new(self, &z).expect("the center is normal");
        let cent = q.image().centralizer(q.project(g));
        q.project_set(&d) == cent.elements().collect::<Vec<_>>()
    }
}
