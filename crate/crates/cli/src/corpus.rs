use std::path::PathBuf;

use gvz_core::group::{Family, Group, Limits};

use crate::source::Source;
use crate::CliError;

/// Largest group order in the default corpus.
pub const DEFAULT_MAX_ORDER: usize = 216;

/// Family identifiers understood by `--families`, in corpus order.
pub const FAMILY_IDS: [&str; 10] = [
    "cyclic",
    "abelian",
    "dihedral",
    "quaternion",
    "semidihedral",
    "extraspecial",
    "symmetric",
    "alternating",
    "heisenberg",
    "products",
];

const PRODUCTS: [(&str, &str); 4] = [
    ("quaternion:8", "cyclic:3"),
    ("dihedral:8", "dihedral:8"),
    ("quaternion:8", "heisenberg:3"),
    ("dihedral:16", "cyclic:3"),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    /// Family ids to include; `None` means all of [`FAMILY_IDS`].
    pub families: Option<Vec<String>>,
    pub max_order: usize,
    pub ingest_paths: Vec<Source>,
    pub products: Vec<(String, String)>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            families: None,
            max_order: DEFAULT_MAX_ORDER,
            ingest_paths: Vec::new(),
            products: PRODUCTS.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect(),
        }
    }
}

/// A resolved corpus member: display name, expected order and source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub order: Option<usize>,
    pub source: Source,
}

impl CorpusEntry {
    fn family(f: Family) -> CorpusEntry {
        CorpusEntry {
            name: f.to_string(),
            order: Some(f.order()),
            source: Source::Family(f.to_string()),
        }
    }

    pub fn load(&self, limits: &Limits) -> Result<Group, CliError> {
        let g = self.source.load(limits)?;
        Ok(g.with_name(self.name.clone()))
    }
}

/// Invariant-factor tuples `d_1 | d_2 | ⋯ | d_k` with `k ≥ 2`, `d_1 ≥ 2`
/// and product at most `max`, ordered by product, then number of factors,
/// then lexicographically.
pub fn noncyclic_abelian_invariants(max: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, product: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let last = *prefix.last().unwrap();
        let mut next = last;
        while product * next <= max {
            prefix.push(next);
            extend(prefix, product * next, max, out);
            prefix.pop();
            next += last;
        }
    }
    let mut out = Vec::new();
    for d in 2..=max {
        extend(&mut vec![d], d, max, &mut out);
    }
    out.sort_by_key(|t| (t.iter().product::<usize>(), t.len(), t.clone()));
    out
}

fn family_members(id: &str) -> Vec<Family> {
    use gvz_core::group::ExtraspecialKind::{ExponentP, ExponentP2};
    match id {
        "cyclic" => (2..=32).map(Family::Cyclic).collect(),
        "abelian" => noncyclic_abelian_invariants(64)
            .into_iter()
            .map(Family::Abelian)
            .collect(),
        "dihedral" => (6..=64).step_by(2).map(Family::Dihedral).collect(),
        "quaternion" => (8..=64).step_by(4).map(Family::Quaternion).collect(),
        "semidihedral" => [16, 32, 64].map(Family::Semidihedral).to_vec(),
        "extraspecial" => [2, 3, 5]
            .into_iter()
            .flat_map(|p| {
                (1..=3).flat_map(move |rank| [ExponentP, ExponentP2].map(|kind| Family::Extraspecial { p, rank, kind }))
            })
            .collect(),
        "symmetric" => (2..=5).map(Family::Symmetric).collect(),
        "alternating" => (3..=5).map(Family::Alternating).collect(),
        "heisenberg" => [3, 5].map(Family::Heisenberg).to_vec(),
        _ => Vec::new(),
    }
}

impl CorpusSpec {
    /// Resolves the spec into corpus members, in a fixed order: families in
    /// [`FAMILY_IDS`] order, then ingested files.
    pub fn resolve(&self) -> Result<Vec<CorpusEntry>, CliError> {
        let selected: Vec<&str> = match &self.families {
            None => FAMILY_IDS.to_vec(),
            Some(list) => {
                for id in list {
                    if !FAMILY_IDS.contains(&id.as_str()) {
                        return Err(CliError::Input(format!(
                            "unknown family `{id}` (known: {})",
                            FAMILY_IDS.join(", ")
                        )));
                    }
                }
                FAMILY_IDS
                    .iter()
                    .copied()
                    .filter(|id| list.iter().any(|l| l == id))
                    .collect()
            }
        };
        let mut out = Vec::new();
        for id in selected {
            if id == "products" {
                for (a, b) in &self.products {
                    let fa: Family = a.parse().map_err(|e| CliError::Input(format!("{a}: {e}")))?;
                    let fb: Family = b.parse().map_err(|e| CliError::Input(format!("{b}: {e}")))?;
                    let order = fa.order() * fb.order();
                    if order <= self.max_order {
                        let name = format!("{fa} x {fb}");
                        out.push(CorpusEntry {
                            name: name.clone(),
                            order: Some(order),
                            source: Source::Family(name),
                        });
                    }
                }
                continue;
            }
            out.extend(
                family_members(id)
                    .into_iter()
                    .filter(|f| f.order() <= self.max_order && f.order() > 1)
                    .map(CorpusEntry::family),
            );
        }
        for source in &self.ingest_paths {
            let path = match source {
                Source::TableFile(p) | Source::PermutationFile(p) => p.display().to_string(),
                Source::Family(s) => s.clone(),
            };
            out.push(CorpusEntry {
                name: path,
                order: None,
                source: source.clone(),
            });
        }
        if out.is_empty() {
            return Err(CliError::EmptyCorpus);
        }
        Ok(out)
    }
}

/// Optional `key = value` settings. Flags given on the command line win.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub max_order: Option<usize>,
    pub parallel: Option<usize>,
    pub order_cap: Option<usize>,
    pub families: Option<Vec<String>>,
    pub tables: Vec<PathBuf>,
    pub perms: Vec<PathBuf>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, CliError> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| CliError::Config { line: i + 1, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key = value, found `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let number = || {
                value
                    .parse::<usize>()
                    .map_err(|_| bad(format!("`{value}` is not a non-negative integer")))
            };
            match key {
                "max_order" => cfg.max_order = Some(number()?),
                "parallel" => cfg.parallel = Some(number()?),
                "order_cap" => cfg.order_cap = Some(number()?),
                "families" => cfg.families = Some(split_list(value)),
                "table" => cfg.tables.push(PathBuf::from(value)),
                "perms" => cfg.perms.push(PathBuf::from(value)),
                _ => return Err(bad(format!("unknown key `{key}`"))),
            }
        }
        Ok(cfg)
    }
}

pub fn split_list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_invariants() {
        let t = noncyclic_abelian_invariants(16);
        assert_eq!(
            t,
            vec![
                vec![2, 2],
                vec![2, 4],
                vec![2, 2, 2],
                vec![3, 3],
                vec![2, 6],
                vec![2, 8],
                vec![4, 4],
                vec![2, 2, 4],
                vec![2, 2, 2, 2],
            ]
        );
        assert!(noncyclic_abelian_invariants(64)
            .iter()
            .all(|t| t.windows(2).all(|w| w[1] % w[0] == 0)));
    }

    #[test]
    fn default_corpus_is_large_enough() {
        let entries = CorpusSpec::default().resolve().unwrap();
        assert!(entries.len() >= 60);
        assert!(entries.iter().all(|e| e.order.unwrap() <= DEFAULT_MAX_ORDER));
        let names: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
        for must in [
            "quaternion:8 x heisenberg:3",
            "extraspecial:2,3,1",
            "symmetric:5",
            "alternating:4",
        ] {
            assert!(names.contains(&must), "{must}");
        }
    }

    #[test]
    fn extraspecial_filter() {
        let spec = CorpusSpec {
            families: Some(vec!["extraspecial".into()]),
            max_order: 200,
            ..CorpusSpec::default()
        };
        let orders: Vec<usize> = spec.resolve().unwrap().iter().map(|e| e.order.unwrap()).collect();
        assert_eq!(orders, vec![8, 8, 32, 32, 128, 128, 27, 27, 125, 125]);
    }

    #[test]
    fn empty_corpus_is_an_error() {
        let spec = CorpusSpec {
            max_order: 1,
            ..CorpusSpec::default()
        };
        assert!(matches!(spec.resolve(), Err(CliError::EmptyCorpus)));
    }

    #[test]
    fn config_parsing() {
        let cfg = Config::parse("# run\nmax_order = 64\nparallel=4\nfamilies = dihedral, quaternion\n").unwrap();
        assert_eq!(cfg.max_order, Some(64));
        assert_eq!(cfg.parallel, Some(4));
        assert_eq!(
            cfg.families,
            Some(vec!["dihedral".to_string(), "quaternion".to_string()])
        );
        assert!(matches!(
            Config::parse("speed = 3"),
            Err(CliError::Config { line: 1, .. })
        ));
        assert!(matches!(
            Config::parse("\nmax_order = x"),
            Err(CliError::Config { line: 2, .. })
        ));
    }
}
