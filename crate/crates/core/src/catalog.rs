//! Named groups shipped as JSON fixtures, each with a contract that is
//! rechecked whenever the entry is loaded.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::chars::{character_of, match_classes, CharacterTable};
use crate::exact::Cyclotomic;
use crate::groups::{Limits, MatrixGroup};
use crate::invariants::CubicForm;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Environment variable naming a directory that replaces the built-in
/// catalog. It must contain `groups/` and `characters/` subdirectories.
pub const CATALOG_ENV: &str = "CUBICSYM_CATALOG";

const BUILTIN_GROUPS: &[(&str, &str)] = &[
    ("alt4-klein", include_str!("../data/catalog/groups/alt4-klein.json")),
    ("alt5", include_str!("../data/catalog/groups/alt5.json")),
    ("diag-involution", include_str!("../data/catalog/groups/diag-involution.json")),
    ("diag-order3", include_str!("../data/catalog/groups/diag-order3.json")),
    ("diag-order5", include_str!("../data/catalog/groups/diag-order5.json")),
    ("family-43", include_str!("../data/catalog/groups/family-43.json")),
    ("fermat-cyclic", include_str!("../data/catalog/groups/fermat-cyclic.json")),
    ("klein-four", include_str!("../data/catalog/groups/klein-four.json")),
    ("psl2-11-klein", include_str!("../data/catalog/groups/psl2-11-klein.json")),
    ("trivial", include_str!("../data/catalog/groups/trivial.json")),
    ("z11-z5-klein", include_str!("../data/catalog/groups/z11-z5-klein.json")),
    ("z3-double", include_str!("../data/catalog/groups/z3-double.json")),
    ("z3-pair", include_str!("../data/catalog/groups/z3-pair.json")),
    ("z3-semi-z4", include_str!("../data/catalog/groups/z3-semi-z4.json")),
    ("z3-semi-z4-conj", include_str!("../data/catalog/groups/z3-semi-z4-conj.json")),
    ("z3-x-s3-1-7-8", include_str!("../data/catalog/groups/z3-x-s3-1-7-8.json")),
    ("z3-x-s3-1-7-9", include_str!("../data/catalog/groups/z3-x-s3-1-7-9.json")),
    ("z3-x-s3-5-7-9", include_str!("../data/catalog/groups/z3-x-s3-5-7-9.json")),
    ("z3-x-s3-5-8-9", include_str!("../data/catalog/groups/z3-x-s3-5-8-9.json")),
    ("z3-x-s3-6-7-8", include_str!("../data/catalog/groups/z3-x-s3-6-7-8.json")),
    ("z3-x-s3-6-8-9", include_str!("../data/catalog/groups/z3-x-s3-6-8-9.json")),
];

const BUILTIN_TABLES: &[(&str, &str)] = &[
    ("alt4", include_str!("../data/catalog/characters/alt4.json")),
    ("alt5", include_str!("../data/catalog/characters/alt5.json")),
    ("psl2-11", include_str!("../data/catalog/characters/psl2-11.json")),
    ("z3-semi-z4", include_str!("../data/catalog/characters/z3-semi-z4.json")),
    ("z3-x-s3", include_str!("../data/catalog/characters/z3-x-s3.json")),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassContract {
    pub order: u32,
    pub size: usize,
    pub trace: String,
}

/// A named combination `Σ m·χ` of rows of a character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRef {
    pub table: String,
    pub combination: Vec<(String, i64)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contract {
    pub order: usize,
    /// Multiset of (element order, class size, trace).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassContract>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<CharacterRef>,
    /// A cubic form every generator must fix exactly.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_form: Option<String>,
}

fn enabled_default() -> bool {
    true
}

/// On-disk form of a catalog group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub id: String,
    #[serde(default)]
    pub description: String,
    pub conductor: u32,
    /// Matrices as rows of entries in `E(n)^k` notation.
    pub generators: Vec<Vec<Vec<String>>>,
    /// Where each generator comes from, one note per generator.
    #[serde(default)]
    pub sources: Vec<String>,
    #[serde(default = "enabled_default")]
    pub enabled: bool,
    pub contract: Contract,
}

pub fn matrix_to_text(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(Cyclotomic::to_string).collect()).collect()
}

pub fn matrix_from_text(rows: &[Vec<String>]) -> Result<Matrix> {
    let n = rows.len();
    let mut out = Vec::with_capacity(n);
    for r in rows {
        if r.len() != n {
            return Err(Error::Input(format!("matrix rows must have length {n}")));
        }
        out.push(r.iter().map(|s| s.parse::<Cyclotomic>()).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(Matrix::from_rows(out))
}

impl GroupFile {
    pub fn parse_json(text: &str) -> Result<GroupFile> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("group file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("group file serializes")
    }

    pub fn generator_matrices(&self) -> Result<Vec<Matrix>> {
        self.generators.iter().map(|g| matrix_from_text(g)).collect()
    }

    /// A file for `g` whose contract records its order and classes.
    pub fn describe(id: &str, description: &str, g: &MatrixGroup) -> GroupFile {
        GroupFile {
            id: id.to_string(),
            description: description.to_string(),
            conductor: g.conductor(),
            generators: g.generators().iter().map(matrix_to_text).collect(),
            sources: Vec::new(),
            enabled: true,
            contract: Contract { order: g.order(), classes: Some(class_contract(g)), ..Contract::default() },
        }
    }
}

/// Class data of `g`, sorted.
pub fn class_contract(g: &MatrixGroup) -> Vec<ClassContract> {
    let mut v: Vec<ClassContract> = g
        .classes()
        .iter()
        .map(|c| ClassContract {
            order: c.element_order,
            size: c.size(),
            trace: g.trace_of(c.representative).to_string(),
        })
        .collect();
    v.sort_by(|a, b| (a.order, a.size, &a.trace).cmp(&(b.order, b.size, &b.trace)));
    v
}

#[derive(Clone, Debug)]
pub enum Source {
    Builtin,
    Dir(PathBuf),
}

#[derive(Clone, Debug)]
pub struct Catalog {
    source: Source,
    limits: Limits,
}

/// A loaded entry: the file and the group it generates.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub file: GroupFile,
    pub group: MatrixGroup,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::from_env()
    }
}

impl Catalog {
    pub fn builtin() -> Catalog {
        Catalog { source: Source::Builtin, limits: Limits::default() }
    }

    pub fn from_dir(dir: impl Into<PathBuf>) -> Catalog {
        Catalog { source: Source::Dir(dir.into()), limits: Limits::default() }
    }

    /// The directory named by [`CATALOG_ENV`] if set, else the built-in one.
    pub fn from_env() -> Catalog {
        match std::env::var_os(CATALOG_ENV) {
            Some(dir) => Catalog::from_dir(dir),
            None => Catalog::builtin(),
        }
    }

    pub fn with_limits(mut self, limits: Limits) -> Catalog {
        self.limits = limits;
        self
    }

    fn read_dir(dir: &Path, sub: &str) -> Result<BTreeMap<String, String>> {
        let path = dir.join(sub);
        let mut out = BTreeMap::new();
        let entries =
            std::fs::read_dir(&path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        for e in entries {
            let p = e.map_err(|e| Error::Input(e.to_string()))?.path();
            if p.extension().is_some_and(|x| x == "json") {
                let stem = p.file_stem().unwrap_or_default().to_string_lossy().into_owned();
                let text =
                    std::fs::read_to_string(&p).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?;
                out.insert(stem, text);
            }
        }
        Ok(out)
    }

    fn texts(&self, sub: &str, builtin: &[(&str, &str)]) -> Result<BTreeMap<String, String>> {
        match &self.source {
            Source::Builtin => Ok(builtin.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()),
            Source::Dir(d) => Self::read_dir(d, sub),
        }
    }

    /// All group files, sorted by id.
    pub fn list(&self) -> Result<Vec<GroupFile>> {
        self.texts("groups", BUILTIN_GROUPS)?.values().map(|t| GroupFile::parse_json(t)).collect()
    }

    pub fn ids(&self) -> Result<Vec<String>> {
        Ok(self.list()?.into_iter().map(|f| f.id).collect())
    }

    pub fn file(&self, id: &str) -> Result<GroupFile> {
        let texts = self.texts("groups", BUILTIN_GROUPS)?;
        let text = texts.get(id).ok_or_else(|| Error::Input(format!("no catalog entry `{id}`")))?;
        GroupFile::parse_json(text)
    }

    pub fn table(&self, name: &str) -> Result<CharacterTable> {
        let texts = self.texts("characters", BUILTIN_TABLES)?;
        let text = texts.get(name).ok_or_else(|| Error::Input(format!("no character table `{name}`")))?;
        CharacterTable::parse_json(text)
    }

    pub fn tables(&self) -> Result<Vec<CharacterTable>> {
        self.texts("characters", BUILTIN_TABLES)?.values().map(|t| CharacterTable::parse_json(t)).collect()
    }

    /// Loads a catalog id, or a path to a group file, and checks its contract.
    pub fn load(&self, id_or_path: &str) -> Result<CatalogEntry> {
        let file = if id_or_path.ends_with(".json") || Path::new(id_or_path).is_file() {
            let text = std::fs::read_to_string(id_or_path)
                .map_err(|e| Error::Input(format!("{id_or_path}: {e}")))?;
            GroupFile::parse_json(&text)?
        } else {
            self.file(id_or_path)?
        };
        self.load_file(file)
    }

    pub fn load_file(&self, file: GroupFile) -> Result<CatalogEntry> {
        let group = MatrixGroup::generate(&file.generator_matrices()?, self.limits)?;
        self.check_contract(&file, &group)?;
        Ok(CatalogEntry { file, group })
    }

    pub fn check_contract(&self, file: &GroupFile, g: &MatrixGroup) -> Result<()> {
        let fail = |check: String| Error::ContractViolation { entry: file.id.clone(), check };
        let c = &file.contract;
        if g.order() != c.order {
            return Err(fail(format!("order {} instead of {}", g.order(), c.order)));
        }
        if g.conductor() != file.conductor {
            return Err(fail(format!("conductor {} instead of {}", g.conductor(), file.conductor)));
        }
        if let Some(expected) = &c.classes {
            let mut expected = expected.clone();
            for e in expected.iter_mut() {
                // normalize the written trace
                e.trace = e.trace.parse::<Cyclotomic>().map_err(Error::from)?.to_string();
            }
            expected.sort_by(|a, b| (a.order, a.size, &a.trace).cmp(&(b.order, b.size, &b.trace)));
            if class_contract(g) != expected {
                return Err(fail("conjugacy classes (order, size, trace)".into()));
            }
        }
        if let Some(r) = &c.character {
            let table = self.table(&r.table)?;
            let terms: Vec<(&str, i64)> = r.combination.iter().map(|(n, m)| (n.as_str(), *m)).collect();
            let expected = table.combination(&terms)?;
            if match_classes(&character_of(g), &expected).is_none() {
                return Err(fail(format!("character is not {} of table {}", describe(&r.combination), r.table)));
            }
        }
        if let Some(text) = &c.fixed_form {
            let f: CubicForm = text.parse()?;
            for (i, m) in g.generators().iter().enumerate() {
                if f.act(m)? != f {
                    return Err(fail(format!("generator {i} does not fix {text}")));
                }
            }
        }
        Ok(())
    }
}

fn describe(terms: &[(String, i64)]) -> String {
    let parts: Vec<String> =
        terms.iter().map(|(n, m)| if *m == 1 { n.clone() } else { format!("{m}*{n}") }).collect();
    parts.join(" + ")
}
