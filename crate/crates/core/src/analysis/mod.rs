//! GVZ oracles and the central-type character test.
//!
//! A group is GVZ when every irreducible character vanishes off its center.
//! Four independent oracles decide this:
//!
//! * definition: every `χ` vanishes on `G ∖ Z(χ)` (equivalently, every `χ`
//!   is of central type);
//! * flatness: every conjugacy class `g^G` equals the coset `g[g,G]`;
//!   this one never looks at characters;
//! * monolithic commutator criterion: for every monolithic `χ` and every
//!   `g ∉ Z(χ)` some `x` has `[g,x] ∈ Z(χ) ∖ ker(χ)`;
//! * nilpotent quotient criterion: `G` is nilpotent and for every `N` with
//!   `G/N` monolithic and every `g` with `[g,G] ⊄ N` some `x` has
//!   `[g,x] ∉ N` and `[[g,x],G] ≤ N`.
//!
//! [`analyze`] runs all four plus a battery of equivalence checks and
//! reports any disagreement with witnesses.

mod lemmas;
mod oracles;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::character::{CentralCharacter, CharError, CharacterTable};
use crate::group::{Group, QuotientMap, Subgroup};

pub use oracles::{gvz_by_flatness, is_flat_element};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error(transparent)]
    Character(#[from] CharError),
    #[error(
        "central-type criteria disagree for character {character} of {group}: \
         definition={definition}, degree={degree}, commutator={commutator}"
    )]
    SubVerdictDisagreement {
        group: String,
        character: usize,
        definition: bool,
        degree: bool,
        commutator: bool,
    },
    #[error("internal inconsistency in {group}: {message}")]
    Inconsistent { group: String, message: String },
}

/// Where a verdict or check failed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness {
    pub character: Option<usize>,
    pub element: Option<usize>,
    pub subgroup_order: Option<usize>,
    pub note: String,
}

impl Witness {
    pub fn note(note: impl Into<String>) -> Witness {
        Witness {
            note: note.into(),
            ..Witness::default()
        }
    }

    pub fn character(mut self, chi: usize) -> Witness {
        self.character = Some(chi);
        self
    }

    pub fn element(mut self, g: usize) -> Witness {
        self.element = Some(g);
        self
    }

    pub fn subgroup(mut self, order: usize) -> Witness {
        self.subgroup_order = Some(order);
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(c) = self.character {
            parts.push(format!("character {c}"));
        }
        if let Some(g) = self.element {
            parts.push(format!("element {g}"));
        }
        if let Some(o) = self.subgroup_order {
            parts.push(format!("subgroup of order {o}"));
        }
        if !self.note.is_empty() {
            parts.push(self.note.clone());
        }
        f.write_str(&parts.join(", "))
    }
}

/// Outcome of one oracle. On failure the witness names the offending
/// character / subgroup / element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Verdict {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Verdict {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaStatus {
    Pass,
    Fail,
    Skipped,
}

impl LemmaStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaStatus::Pass => "pass",
            LemmaStatus::Fail => "fail",
            LemmaStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub status: LemmaStatus,
    /// Failure witness, or the reason for a skip.
    pub witness: Option<Witness>,
    /// Free-form summary (counts etc.), always present for passing checks
    /// that carry numbers.
    pub detail: Option<String>,
}

impl LemmaCheck {
    pub(crate) fn pass(name: &'static str) -> LemmaCheck {
        LemmaCheck {
            name,
            status: LemmaStatus::Pass,
            witness: None,
            detail: None,
        }
    }

    pub(crate) fn fail(name: &'static str, witness: Witness) -> LemmaCheck {
        LemmaCheck {
            name,
            status: LemmaStatus::Fail,
            witness: Some(witness),
            detail: None,
        }
    }

    pub(crate) fn skipped(name: &'static str, reason: impl Into<String>) -> LemmaCheck {
        LemmaCheck {
            name,
            status: LemmaStatus::Skipped,
            witness: None,
            detail: Some(reason.into()),
        }
    }

    pub(crate) fn from_result(name: &'static str, result: Result<(), Witness>) -> LemmaCheck {
        match result {
            Ok(()) => LemmaCheck::pass(name),
            Err(w) => LemmaCheck::fail(name, w),
        }
    }

    pub(crate) fn with_detail(mut self, detail: impl Into<String>) -> LemmaCheck {
        self.detail = Some(detail.into());
        self
    }
}

/// Per-character data and the three central-type sub-verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterAnalysis {
    pub index: usize,
    pub degree: usize,
    pub kernel: Subgroup,
    pub center: Subgroup,
    /// `G/ker(χ)` is monolithic.
    pub monolithic: bool,
    /// `χ` vanishes on `G ∖ Z(χ)`.
    pub vanishes_off_center: bool,
    /// Authoritative central-type verdict (all sub-verdicts agree).
    pub central_type: bool,
    pub sub_verdicts: SubVerdicts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubVerdicts {
    /// Fully ramified over the center of `G/ker(χ)`, decided from the
    /// character table of the quotient.
    pub definition: bool,
    /// `χ(1)² = |G : Z(χ)|`.
    pub degree: bool,
    /// Every `g ∉ Z(χ)` has some `x` with `[g,x] ∈ Z(χ) ∖ ker(χ)`.
    pub commutator: bool,
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub name: String,
    pub order: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub num_classes: usize,
    pub verdict_definition: Verdict,
    pub verdict_flat: Verdict,
    pub verdict_thm2: Verdict,
    pub verdict_thm3: Verdict,
    pub characters: Vec<CharacterAnalysis>,
    pub lemma_checks: Vec<LemmaCheck>,
    pub agreement: bool,
}

impl OracleReport {
    /// The common verdict, when all four oracles agree.
    pub fn gvz(&self) -> Option<bool> {
        self.agreement.then_some(self.verdict_definition.holds)
    }

    /// True when the nonabelian-only oracles were short-circuited.
    pub fn abelian_convention(&self) -> bool {
        self.abelian
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.agreement {
            out.push(format!(
                "{}: oracles disagree (definition={}, flat={}, thm2={}, thm3={})",
                self.name,
                self.verdict_definition.holds,
                self.verdict_flat.holds,
                self.verdict_thm2.holds,
                self.verdict_thm3.holds
            ));
        }
        for check in &self.lemma_checks {
            if check.status == LemmaStatus::Fail {
                let w = check.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
                out.push(format!("{}: {} failed ({w})", self.name, check.name));
            }
        }
        out
    }

    pub fn skipped_checks(&self) -> usize {
        self.lemma_checks
            .iter()
            .filter(|c| c.status == LemmaStatus::Skipped)
            .count()
    }

    pub fn check(&self, name: &str) -> Option<&LemmaCheck> {
        self.lemma_checks.iter().find(|c| c.name == name)
    }
}

/// A quotient `G/N` for a character kernel `N`, with its own table.
struct KernelQuotient {
    kernel: Subgroup,
    quotient: QuotientMap,
    monolithic: bool,
    table: OnceLock<Arc<CharacterTable>>,
}

/// Everything the oracles share for one group: the character table, the
/// center, per-character analyses and the kernel quotients.
pub struct GroupAnalysis {
    group: Arc<Group>,
    table: Arc<CharacterTable>,
    center: Subgroup,
    kernel_of_char: Vec<usize>,
    kernels: Vec<KernelQuotient>,
    characters: Vec<CharacterAnalysis>,
}

impl GroupAnalysis {
    pub fn new(group: Arc<Group>) -> Result<GroupAnalysis, AnalysisError> {
        let table = Arc::new(CharacterTable::compute(group.clone())?);
        GroupAnalysis::with_table(table)
    }

    pub fn with_table(table: Arc<CharacterTable>) -> Result<GroupAnalysis, AnalysisError> {
        let group = table.group().clone();
        let center = group.center();
        let mut index: HashMap<Subgroup, usize> = HashMap::new();
        let mut kernels: Vec<KernelQuotient> = Vec::new();
        let mut kernel_of_char = Vec::with_capacity(table.len());
        for chi in 0..table.len() {
            let ker = table.kernel_of(chi);
            let id = match index.get(&ker) {
                Some(&id) => id,
                None => {
                    let quotient = QuotientMap::new(&group, &ker).expect("character kernels are normal");
                    let qtable = OnceLock::new();
                    if ker.is_trivial() {
                        let _ = qtable.set(table.clone());
                    }
                    let monolithic = quotient.image().is_monolithic();
                    kernels.push(KernelQuotient {
                        kernel: ker.clone(),
                        quotient,
                        monolithic,
                        table: qtable,
                    });
                    index.insert(ker, kernels.len() - 1);
                    kernels.len() - 1
                }
            };
            kernel_of_char.push(id);
        }
        let mut analysis = GroupAnalysis {
            group,
            table,
            center,
            kernel_of_char,
            kernels,
            characters: Vec::new(),
        };
        analysis.characters = (0..analysis.table.len())
            .map(|chi| analysis.central_type(chi))
            .collect::<Result<_, _>>()?;
        Ok(analysis)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn center(&self) -> &Subgroup {
        &self.center
    }

    pub fn characters(&self) -> &[CharacterAnalysis] {
        &self.characters
    }

    fn inconsistent(&self, message: impl Into<String>) -> AnalysisError {
        AnalysisError::Inconsistent {
            group: self.group.name().to_string(),
            message: message.into(),
        }
    }

    /// Searches for `x` with `[g, x] ∈ target ∖ excluded`.
    pub(crate) fn commutator_witness(&self, g: usize, target: &Subgroup, excluded: &Subgroup) -> Option<usize> {
        self.group.elements().find(|&x| {
            let c = self.group.commutator(g, x);
            target.contains(c) && !excluded.contains(c)
        })
    }

    /// For every `g ∉ Z(χ)` some `x` has `[g,x] ∈ Z(χ) ∖ ker(χ)`; returns
    /// the first `g` without such an `x`.
    pub(crate) fn commutator_criterion(&self, center: &Subgroup, kernel: &Subgroup) -> Result<(), usize> {
        match self
            .group
            .elements()
            .filter(|&g| !center.contains(g))
            .find(|&g| self.commutator_witness(g, center, kernel).is_none())
        {
            Some(g) => Err(g),
            None => Ok(()),
        }
    }

    fn quotient_table(&self, kq: &KernelQuotient) -> Result<Arc<CharacterTable>, AnalysisError> {
        if let Some(t) = kq.table.get() {
            return Ok(t.clone());
        }
        let t = Arc::new(CharacterTable::compute(Arc::new(kq.quotient.image().clone()))?);
        Ok(kq.table.get_or_init(|| t).clone())
    }

    /// The image of `χ` in the table of `G/ker(χ)`.
    fn deflate(&self, chi: usize) -> Result<(Arc<CharacterTable>, usize), AnalysisError> {
        let kq = &self.kernels[self.kernel_of_char[chi]];
        let qtable = self.quotient_table(kq)?;
        let qgroup = qtable.group();
        let gc = self.group.classes();
        let qc = qgroup.classes();
        let degree = self.table.char(chi).degree();
        let matches = |cand: usize| {
            qtable.char(cand).degree() == degree
                && (0..gc.len()).all(|c| {
                    let image = kq.quotient.project(gc.rep(c));
                    qtable.char(cand).values()[qc.class_of(image)] == self.table.char(chi).values()[c]
                })
        };
        let found = (0..qtable.len())
            .find(|&cand| matches(cand))
            .ok_or_else(|| self.inconsistent(format!("character {chi} has no image in the quotient table")))?;
        Ok((qtable, found))
    }

    /// The central-type test for one character, with all three sub-verdicts.
    pub fn central_type(&self, chi: usize) -> Result<CharacterAnalysis, AnalysisError> {
        let kernel = self.table.kernel_of(chi);
        let center = self.table.center_of(chi);
        let degree = self.table.char(chi).degree();

        // A linear character is faithful on the cyclic group G/ker(χ), which
        // is its own center, so it is trivially fully ramified there.
        let definition = if degree == 1 {
            true
        } else {
            let (qtable, image) = self.deflate(chi)?;
            let qcenter = qtable.group().center();
            let lambda: CentralCharacter = qtable.central_character(image, &qcenter)?;
            if !lambda.is_faithful() {
                return Err(self.inconsistent(format!("character {chi} is not faithful on G/ker")));
            }
            qtable.is_fully_ramified(&lambda, &qcenter)?
        };
        let kq = &self.kernels[self.kernel_of_char[chi]];
        let by_degree = degree * degree == center.index_in(&self.group);
        let commutator = self.commutator_criterion(&center, &kernel).is_ok();

        if definition != by_degree || definition != commutator {
            return Err(AnalysisError::SubVerdictDisagreement {
                group: self.group.name().to_string(),
                character: chi,
                definition,
                degree: by_degree,
                commutator,
            });
        }
        Ok(CharacterAnalysis {
            index: chi,
            degree,
            vanishes_off_center: self.table.vanishes_off(chi, &center),
            kernel,
            center,
            monolithic: kq.monolithic,
            central_type: definition,
            sub_verdicts: SubVerdicts {
                definition,
                degree: by_degree,
                commutator,
            },
        })
    }

    /// Distinct character kernels `N` with `G/N` monolithic.
    pub(crate) fn monolithic_kernels(&self) -> impl Iterator<Item = &Subgroup> {
        self.kernels.iter().filter(|k| k.monolithic).map(|k| &k.kernel)
    }

    /// Runs every oracle and check.
    pub fn report(&self) -> Result<OracleReport, AnalysisError> {
        let verdict_definition = self.gvz_by_definition()?;
        let verdict_flat = gvz_by_flatness(&self.group);
        let verdict_thm2 = self.gvz_by_thm2();
        let verdict_thm3 = self.gvz_by_thm3();
        let agreement = [&verdict_flat, &verdict_thm2, &verdict_thm3]
            .iter()
            .all(|v| v.holds == verdict_definition.holds);

        let mut lemma_checks = Vec::new();
        lemma_checks.extend(self.check_lemma_fr1()?);
        lemma_checks.extend(self.check_lemma_fullyram()?);
        lemma_checks.push(self.check_mono_nilp());
        lemma_checks.push(self.check_abelian_quotient_remark());
        lemma_checks.push(self.check_degree_criterion());
        lemma_checks.push(self.check_character_center_quotient());
        lemma_checks.push(self.check_sylow_reduction()?);

        Ok(OracleReport {
            name: self.group.name().to_string(),
            order: self.group.order(),
            abelian: self.group.is_abelian(),
            nilpotent: self.group.is_nilpotent(),
            num_classes: self.group.classes().len(),
            verdict_definition,
            verdict_flat,
            verdict_thm2,
            verdict_thm3,
            characters: self.characters.clone(),
            lemma_checks,
            agreement,
        })
    }
}

/// Full analysis of one group.
pub fn analyze(group: Arc<Group>) -> Result<OracleReport, AnalysisError> {
    GroupAnalysis::new(group)?.report()
}
