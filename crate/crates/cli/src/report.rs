use std::fmt::Write as _;
use std::io::Write;

use gvz_core::analysis::{LemmaCheck, OracleReport, Verdict, Witness};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub groups: Vec<GroupReport>,
    pub summary: Summary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub name: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Verdicts>,
    pub agreement: bool,
    /// Oracles that assume a nonabelian group returned true by convention.
    #[serde(default)]
    pub abelian_convention: bool,
    #[serde(default)]
    pub characters: Vec<CharacterRow>,
    #[serde(default)]
    pub lemma_checks: Vec<LemmaRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<VerdictWitnesses>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub definition: bool,
    pub flat: bool,
    pub thm2: bool,
    pub thm3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct VerdictWitnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub definition: Option<WitnessRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flat: Option<WitnessRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thm2: Option<WitnessRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thm3: Option<WitnessRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub degree: usize,
    pub kernel_order: usize,
    pub center_order: usize,
    pub monolithic: bool,
    pub central_type: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaRow {
    pub name: String,
    /// `pass`, `fail` or `skipped`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup_order: Option<usize>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub groups: usize,
    pub gvz: usize,
    pub non_gvz: usize,
    pub errors: usize,
    pub skipped_lemma_checks: usize,
    pub failures: Vec<String>,
}

impl From<&Witness> for WitnessRow {
    fn from(w: &Witness) -> Self {
        WitnessRow {
            character: w.character,
            element: w.element,
            subgroup_order: w.subgroup_order,
            note: w.note.clone(),
        }
    }
}

impl From<&LemmaCheck> for LemmaRow {
    fn from(c: &LemmaCheck) -> Self {
        LemmaRow {
            name: c.name.to_string(),
            status: c.status.as_str().to_string(),
            witness: c.witness.as_ref().map(WitnessRow::from),
            detail: c.detail.clone(),
        }
    }
}

fn witness(v: &Verdict) -> Option<WitnessRow> {
    v.witness.as_ref().map(WitnessRow::from)
}

impl GroupReport {
    pub fn from_oracle(r: &OracleReport, timing_ms: Option<u64>) -> GroupReport {
        let witnesses = VerdictWitnesses {
            definition: witness(&r.verdict_definition),
            flat: witness(&r.verdict_flat),
            thm2: witness(&r.verdict_thm2),
            thm3: witness(&r.verdict_thm3),
        };
        let any = witnesses != VerdictWitnesses::default();
        GroupReport {
            name: r.name.clone(),
            order: r.order,
            verdicts: Some(Verdicts {
                definition: r.verdict_definition.holds,
                flat: r.verdict_flat.holds,
                thm2: r.verdict_thm2.holds,
                thm3: r.verdict_thm3.holds,
            }),
            agreement: r.agreement,
            abelian_convention: r.abelian_convention(),
            characters: r
                .characters
                .iter()
                .map(|c| CharacterRow {
                    degree: c.degree,
                    kernel_order: c.kernel.order(),
                    center_order: c.center.order(),
                    monolithic: c.monolithic,
                    central_type: c.central_type,
                })
                .collect(),
            lemma_checks: r.lemma_checks.iter().map(LemmaRow::from).collect(),
            witnesses: any.then_some(witnesses),
            error: None,
            timing_ms,
        }
    }

    pub fn from_error(name: String, order: usize, error: String, timing_ms: Option<u64>) -> GroupReport {
        GroupReport {
            name,
            order,
            verdicts: None,
            agreement: false,
            abelian_convention: false,
            characters: Vec::new(),
            lemma_checks: Vec::new(),
            witnesses: None,
            error: Some(error),
            timing_ms,
        }
    }

    /// The common GVZ verdict, when the oracles agree.
    pub fn gvz(&self) -> Option<bool> {
        match (self.agreement, self.verdicts) {
            (true, Some(v)) => Some(v.definition),
            _ => None,
        }
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(e) = &self.error {
            out.push(format!("{}: {e}", self.name));
        }
        if let (false, Some(v)) = (self.agreement, self.verdicts) {
            out.push(format!(
                "{}: oracles disagree (definition={}, flat={}, thm2={}, thm3={})",
                self.name, v.definition, v.flat, v.thm2, v.thm3
            ));
        }
        for c in self.lemma_checks.iter().filter(|c| c.status == "fail") {
            let w = c.witness.as_ref().map(|w| w.note.clone()).unwrap_or_default();
            out.push(format!("{}: {} failed ({w})", self.name, c.name));
        }
        out
    }
}

impl RunReport {
    pub fn new(groups: Vec<GroupReport>) -> RunReport {
        let summary = Summary {
            groups: groups.len(),
            gvz: groups.iter().filter(|g| g.gvz() == Some(true)).count(),
            non_gvz: groups.iter().filter(|g| g.gvz() == Some(false)).count(),
            errors: groups.iter().filter(|g| g.error.is_some()).count(),
            skipped_lemma_checks: groups
                .iter()
                .flat_map(|g| &g.lemma_checks)
                .filter(|c| c.status == "skipped")
                .count(),
            failures: groups.iter().flat_map(GroupReport::failures).collect(),
        };
        RunReport {
            schema_version: SCHEMA_VERSION,
            groups,
            summary,
        }
    }

    pub fn success(&self) -> bool {
        self.summary.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per group with the character degree multiset.
    pub fn write_csv(&self, out: impl Write) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["name", "order", "classes", "degrees", "gvz", "agreement"])?;
        for g in &self.groups {
            let gvz = g.gvz().map(|b| b.to_string()).unwrap_or_else(|| "unknown".into());
            w.write_record([
                g.name.clone(),
                g.order.to_string(),
                g.characters.len().to_string(),
                degree_profile(&g.characters),
                gvz,
                g.agreement.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn summary_table(&self) -> String {
        let width = self.groups.iter().map(|g| g.name.len()).max().unwrap_or(4).max(4);
        let mut s = String::new();
        writeln!(
            s,
            "{:<width$}  {:>5}  {:>7}  {:<5}  agree",
            "name", "order", "classes", "gvz"
        )
        .unwrap();
        for g in &self.groups {
            let gvz = match (&g.error, g.gvz()) {
                (Some(_), _) => "error",
                (None, Some(true)) => "yes",
                (None, Some(false)) => "no",
                (None, None) => "?",
            };
            writeln!(
                s,
                "{:<width$}  {:>5}  {:>7}  {:<5}  {}",
                g.name,
                g.order,
                g.characters.len(),
                gvz,
                if g.agreement { "yes" } else { "NO" }
            )
            .unwrap();
        }
        let m = &self.summary;
        writeln!(
            s,
            "{} groups: {} GVZ, {} non-GVZ, {} errors, {} lemma checks skipped, {} failures",
            m.groups,
            m.gvz,
            m.non_gvz,
            m.errors,
            m.skipped_lemma_checks,
            m.failures.len()
        )
        .unwrap();
        for f in &m.failures {
            writeln!(s, "FAIL {f}").unwrap();
        }
        s
    }
}

/// `1^4 2^1` style multiset of degrees.
pub fn degree_profile(chars: &[CharacterRow]) -> String {
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for c in chars {
        match counts.iter_mut().find(|(d, _)| *d == c.degree) {
            Some((_, n)) => *n += 1,
            None => counts.push((c.degree, 1)),
        }
    }
    counts.sort_unstable();
    counts
        .iter()
        .map(|(d, n)| format!("{d}^{n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Human-readable single-group report.
pub fn render_group(g: &GroupReport) -> String {
    let mut s = String::new();
    writeln!(s, "{} (order {})", g.name, g.order).unwrap();
    if let Some(e) = &g.error {
        writeln!(s, "  error: {e}").unwrap();
        return s;
    }
    if let Some(v) = g.verdicts {
        for (name, holds) in [
            ("definition", v.definition),
            ("flat", v.flat),
            ("thm2", v.thm2),
            ("thm3", v.thm3),
        ] {
            writeln!(s, "  {name:<11}{holds}").unwrap();
        }
    }
    match g.gvz() {
        Some(b) => writeln!(s, "  GVZ = {b}").unwrap(),
        None => writeln!(s, "  oracles DISAGREE").unwrap(),
    }
    if g.abelian_convention {
        writeln!(s, "  (abelian: thm2 and thm3 hold by convention)").unwrap();
    }
    writeln!(s, "characters:").unwrap();
    for (i, c) in g.characters.iter().enumerate() {
        writeln!(
            s,
            "  χ{i:<3} degree {:<3} |ker| {:<4} |Z(χ)| {:<4} monolithic {:<5} central type {}",
            c.degree, c.kernel_order, c.center_order, c.monolithic, c.central_type
        )
        .unwrap();
    }
    writeln!(s, "lemma checks:").unwrap();
    for c in &g.lemma_checks {
        write!(s, "  {:<26}{}", c.name, c.status).unwrap();
        if let Some(d) = &c.detail {
            write!(s, "  ({d})").unwrap();
        }
        if let Some(w) = &c.witness {
            write!(s, "  witness: {}", w.note).unwrap();
        }
        s.push('\n');
    }
    s
}
