use std::sync::Arc;

use super::{AnalysisError, GroupAnalysis, LemmaCheck, Witness};
use crate::character::{center_irreducibles, CharacterTable, CyclotomicInt};
use crate::group::{Group, QuotientMap, Subgroup};

impl GroupAnalysis {
    /// Some `x ∈ D_G(g)` has `[g,x] ∉ excluded`.
    fn d_commutator_escapes(&self, g: usize, d: &Subgroup, excluded: &Subgroup) -> bool {
        d.elements().any(|x| !excluded.contains(self.group().commutator(g, x)))
    }

    fn d_subgroups(&self) -> Vec<Subgroup> {
        let g = self.group();
        g.elements()
            .map(|a| g.d_subgroup_with_center(a, self.center()))
            .collect()
    }

    /// With `ϑ` a faithful character of a cyclic `Z(G)`:
    /// `ϑ` is fully ramified iff `[g, D_G(g)] ≠ 1` off the center, and the
    /// number of constituents of `ϑ^G` is the number of classes of `G/Z(G)`
    /// whose members have `[g, D_G(g)] = 1`.
    pub fn check_lemma_fr1(&self) -> Result<[LemmaCheck; 2], AnalysisError> {
        let g = self.group();
        let z = self.center();
        let irr = center_irreducibles(g, z)?;
        let Some(theta) = irr.iter().find(|l| l.is_faithful()) else {
            let reason = format!("center of order {} is not cyclic", z.order());
            return Ok([
                LemmaCheck::skipped("fr1_equivalence", reason.clone()),
                LemmaCheck::skipped("fr1_count", reason),
            ]);
        };
        let table = self.table();
        let trivial = Subgroup::trivial(g);
        let ds = self.d_subgroups();

        let fully_ramified = table.is_fully_ramified(theta, z)?;
        let blocker = g
            .elements()
            .filter(|&a| !z.contains(a))
            .find(|&a| !self.d_commutator_escapes(a, &ds[a], &trivial));
        let equivalence = if fully_ramified == blocker.is_none() {
            LemmaCheck::pass("fr1_equivalence")
        } else {
            let mut w = Witness::note(format!("fully ramified: {fully_ramified}"));
            w.element = blocker;
            LemmaCheck::fail("fr1_equivalence", w)
        };

        let constituents = table.induced_constituent_count(theta, z)?;
        let q = QuotientMap::new(g, z).expect("the center is normal");
        let qc = q.image().classes();
        let coset_classes = (0..qc.len())
            .filter(|&c| {
                let a = q.rep(qc.rep(c));
                !self.d_commutator_escapes(a, &ds[a], &trivial)
            })
            .count();
        let detail = format!("constituents {constituents}, coset classes {coset_classes}");
        let count = if constituents == coset_classes {
            LemmaCheck::pass("fr1_count").with_detail(detail)
        } else {
            LemmaCheck::fail("fr1_count", Witness::note(detail))
        };
        Ok([equivalence, count])
    }

    /// For every `λ ∈ Irr(Z(G))`: `λ` is fully ramified iff
    /// `[g, D_G(g)] ⊄ ker(λ)` for every `g ∉ Z(G)`. Also checks that this
    /// element-wise condition is the same as "some `x` has
    /// `[g,x] ∈ Z(G) ∖ ker(λ)`", and that each `χ` has `χ(1)² = |G:Z(G)|`
    /// exactly when that condition holds for `ker(χ)`.
    pub fn check_lemma_fullyram(&self) -> Result<[LemmaCheck; 2], AnalysisError> {
        let g = self.group();
        let z = self.center();
        let table = self.table();
        let ds = self.d_subgroups();
        let outside: Vec<usize> = g.elements().filter(|&a| !z.contains(a)).collect();
        let irr = center_irreducibles(g, z)?;
        let over = table.central_characters(z)?;

        let mut fullyram = Ok(());
        let mut restated = Ok(());
        let mut fully_ramified_count = 0;
        for (i, lambda) in irr.iter().enumerate() {
            let ker = lambda.kernel(g);
            let constituents: Vec<usize> = (0..table.len()).filter(|&chi| &over[chi] == lambda).collect();
            let lhs = table.single_constituent_is_fully_ramified(&constituents, z);
            fully_ramified_count += usize::from(lhs);
            let mut blocker = None;
            for &a in &outside {
                let by_d = self.d_commutator_escapes(a, &ds[a], &ker);
                let by_x = self.commutator_witness(a, z, &ker).is_some();
                if by_d != by_x && restated.is_ok() {
                    restated = Err(Witness::note(format!("central character {i}")).element(a));
                }
                if !by_d && blocker.is_none() {
                    blocker = Some(a);
                }
            }
            if lhs != blocker.is_none() && fullyram.is_ok() {
                let mut w = Witness::note(format!("central character {i}, fully ramified: {lhs}"));
                w.element = blocker;
                fullyram = Err(w);
            }
        }
        if restated.is_ok() {
            let index = z.index_in(g);
            for chi in 0..table.len() {
                let ker = table.kernel_of(chi);
                let d = table.char(chi).degree();
                let by_x = outside.iter().all(|&a| self.commutator_witness(a, z, &ker).is_some());
                if (d * d == index) != by_x {
                    restated = Err(Witness::note("degree and commutator condition differ").character(chi));
                    break;
                }
            }
        }
        Ok([
            LemmaCheck::from_result("fullyram", fullyram).with_detail(format!(
                "{} of {} central characters fully ramified",
                fully_ramified_count,
                irr.len()
            )),
            LemmaCheck::from_result("fullyram2", restated),
        ])
    }

    /// `G` is nilpotent (lower central series) iff `Z(χ) > ker(χ)` for every
    /// nonprincipal monolithic `χ`.
    pub fn check_mono_nilp(&self) -> LemmaCheck {
        let by_series = self.group().is_nilpotent();
        let offender = self
            .characters()
            .iter()
            .skip(1)
            .find(|ca| ca.monolithic && ca.center.order() == ca.kernel.order());
        let by_characters = offender.is_none();
        if by_series == by_characters {
            return LemmaCheck::pass("mono_nilp").with_detail(format!("nilpotent: {by_series}"));
        }
        let w = Witness::note(format!("series: {by_series}, characters: {by_characters}"));
        LemmaCheck::fail(
            "mono_nilp",
            match offender {
                Some(ca) => w.character(ca.index),
                None => w,
            },
        )
    }

    /// Every `χ` with `G/Z(χ)` abelian is of central type.
    pub fn check_abelian_quotient_remark(&self) -> LemmaCheck {
        let derived = self.group().derived_subgroup();
        let applicable: Vec<_> = self
            .characters()
            .iter()
            .filter(|ca| derived.is_subgroup_of(&ca.center))
            .collect();
        match applicable.iter().find(|ca| !ca.central_type) {
            Some(ca) => LemmaCheck::fail(
                "abelian_quotient_remark",
                Witness::note("G/Z(χ) abelian but χ not of central type").character(ca.index),
            ),
            None => LemmaCheck::pass("abelian_quotient_remark").with_detail(format!(
                "{} of {} characters applicable",
                applicable.len(),
                self.characters().len()
            )),
        }
    }

    /// In a GVZ group every `χ` has `χ(1)² = |G : Z(χ)|`.
    pub fn check_degree_criterion(&self) -> LemmaCheck {
        if self.characters().iter().any(|ca| !ca.vanishes_off_center) {
            return LemmaCheck::skipped("gvz_degree", "not GVZ");
        }
        let g = self.group();
        match self
            .characters()
            .iter()
            .find(|ca| ca.degree * ca.degree != ca.center.index_in(g))
        {
            Some(ca) => LemmaCheck::fail("gvz_degree", Witness::note("χ(1)² ≠ |G:Z(χ)|").character(ca.index)),
            None => LemmaCheck::pass("gvz_degree"),
        }
    }

    /// `Z(χ)/ker(χ)` is the (cyclic) center of `G/ker(χ)`.
    pub fn check_character_center_quotient(&self) -> LemmaCheck {
        let table = self.table();
        match (0..table.len()).find(|&chi| !table.center_quotient_is_consistent(chi)) {
            Some(chi) => LemmaCheck::fail(
                "character_center_quotient",
                Witness::note("Z(χ)/ker(χ) is not the cyclic center of G/ker(χ)").character(chi),
            ),
            None => LemmaCheck::pass("character_center_quotient"),
        }
    }

    /// For nilpotent `G` of non-prime-power order, every `χ` is a product
    /// `ν_1 × ⋯ × ν_r` over the Sylow factors, `Z(χ)` and `ker(χ)` factor
    /// accordingly, and `χ` is of central type iff every `ν_i` is.
    pub fn check_sylow_reduction(&self) -> Result<LemmaCheck, AnalysisError> {
        const NAME: &str = "sylow_reduction";
        let g = self.group();
        let Some(factors) = g.sylow_factorization() else {
            return Ok(LemmaCheck::skipped(NAME, "not nilpotent"));
        };
        if factors.len() < 2 {
            return Ok(LemmaCheck::skipped(NAME, "prime-power order"));
        }
        let parts: Vec<SylowPart> = factors
            .iter()
            .map(|f| SylowPart::new(g, &f.subgroup, f.prime))
            .collect::<Result<_, _>>()?;
        let components = components(g, &parts);
        let table = self.table();
        let cc = g.classes();

        for ca in self.characters() {
            let chi = table.char(ca.index);
            let d = chi.degree() as i64;
            // χ restricted to P_i is (χ(1)/ν_i(1))·ν_i.
            let mut nus = Vec::with_capacity(parts.len());
            for (i, part) in parts.iter().enumerate() {
                let found = (0..part.table.len()).find(|&nu| {
                    let e = part.table.char(nu).degree() as i64;
                    d % e == 0
                        && part.embed.iter().enumerate().all(|(local, &global)| {
                            table.value(ca.index, global) == &part.table.value(nu, local).scale(d / e)
                        })
                });
                match found {
                    Some(nu) => nus.push(nu),
                    None => {
                        return Ok(LemmaCheck::fail(
                            NAME,
                            Witness::note(format!(
                                "restriction to the Sylow {}-subgroup is not homogeneous",
                                parts[i].prime
                            ))
                            .character(ca.index),
                        ))
                    }
                }
            }
            for c in 0..cc.len() {
                let a = cc.rep(c);
                let product = parts
                    .iter()
                    .zip(&nus)
                    .zip(&components[a])
                    .fold(CyclotomicInt::from_int(1), |acc, ((part, &nu), &local)| {
                        &acc * part.table.value(nu, local)
                    });
                if &product != table.value(ca.index, a) {
                    return Ok(LemmaCheck::fail(
                        NAME,
                        Witness::note("χ is not the product of its Sylow constituents")
                            .character(ca.index)
                            .element(a),
                    ));
                }
            }
            let factored = |a: usize, pick: &dyn Fn(&SylowPart, usize) -> &Subgroup| {
                parts
                    .iter()
                    .zip(&nus)
                    .zip(&components[a])
                    .all(|((part, &nu), &local)| pick(part, nu).contains(local))
            };
            for a in g.elements() {
                if ca.center.contains(a) != factored(a, &|p, nu| &p.analysis.characters()[nu].center) {
                    return Ok(LemmaCheck::fail(
                        NAME,
                        Witness::note("Z(χ) is not the product of the Z(ν_i)")
                            .character(ca.index)
                            .element(a),
                    ));
                }
                if ca.kernel.contains(a) != factored(a, &|p, nu| &p.analysis.characters()[nu].kernel) {
                    return Ok(LemmaCheck::fail(
                        NAME,
                        Witness::note("ker(χ) is not the product of the ker(ν_i)")
                            .character(ca.index)
                            .element(a),
                    ));
                }
            }
            let all_central = parts
                .iter()
                .zip(&nus)
                .all(|(part, &nu)| part.analysis.characters()[nu].central_type);
            if all_central != ca.central_type {
                return Ok(LemmaCheck::fail(
                    NAME,
                    Witness::note(format!("χ central type: {}, factors: {all_central}", ca.central_type))
                        .character(ca.index),
                ));
            }
        }
        let orders: Vec<String> = parts.iter().map(|p| p.embed.len().to_string()).collect();
        Ok(LemmaCheck::pass(NAME).with_detail(format!("Sylow orders {}", orders.join(" x "))))
    }
}

struct SylowPart {
    prime: usize,
    embed: Vec<usize>,
    table: Arc<CharacterTable>,
    analysis: GroupAnalysis,
}

impl SylowPart {
    fn new(g: &Group, p: &Subgroup, prime: usize) -> Result<SylowPart, AnalysisError> {
        let (group, embed) = g.subgroup_as_group(p, format!("Sylow {prime} of {}", g.name()));
        let table = Arc::new(CharacterTable::compute(Arc::new(group))?);
        let analysis = GroupAnalysis::with_table(table.clone())?;
        Ok(SylowPart {
            prime,
            embed,
            table,
            analysis,
        })
    }
}

/// For each element of `G`, its local index in every Sylow factor.
fn components(g: &Group, parts: &[SylowPart]) -> Vec<Vec<usize>> {
    let mut tuples: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    for part in parts {
        tuples = tuples
            .into_iter()
            .flat_map(|(a, t)| {
                part.embed.iter().enumerate().map(move |(local, &global)| {
                    let mut t = t.clone();
                    t.push(local);
                    (g.mul(a, global), t)
                })
            })
            .collect();
    }
    let mut out = vec![Vec::new(); g.order()];
    for (a, t) in tuples {
        out[a] = t;
    }
    assert!(
        out.iter().all(|t| t.len() == parts.len()),
        "Sylow factors do not cover G"
    );
    out
}
