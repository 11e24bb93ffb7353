//! Character data given abstractly, without matrices.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{ClassFunction, ClassStructure};
use crate::exact::Cyclotomic;
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassSpec {
    pub label: String,
    pub order: u32,
    pub size: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterRow {
    pub name: String,
    pub values: Vec<String>,
}

/// On-disk form of a character table (possibly partial).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterTableFile {
    pub id: String,
    #[serde(default)]
    pub description: String,
    pub group_order: usize,
    pub classes: Vec<ClassSpec>,
    /// Prime → image class label for each class, in class order.
    pub power_maps: BTreeMap<u32, Vec<String>>,
    pub characters: Vec<CharacterRow>,
    #[serde(default)]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub id: String,
    pub description: String,
    pub structure: Arc<ClassStructure>,
    pub characters: Vec<(String, ClassFunction)>,
}

impl CharacterTable {
    pub fn from_file_data(f: &CharacterTableFile) -> Result<CharacterTable> {
        let labels: Vec<String> = f.classes.iter().map(|c| c.label.clone()).collect();
        let index = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::Input(format!("unknown class label `{l}` in `{}`", f.id)))
        };
        let mut power_maps = BTreeMap::new();
        for (&p, images) in &f.power_maps {
            let map = images.iter().map(|l| index(l)).collect::<Result<Vec<_>>>()?;
            power_maps.insert(p, map);
        }
        let structure = Arc::new(ClassStructure {
            group_order: f.group_order,
            labels: labels.clone(),
            sizes: f.classes.iter().map(|c| c.size).collect(),
            orders: f.classes.iter().map(|c| c.order).collect(),
            power_maps,
        });
        structure.validate()?;
        let mut characters = Vec::new();
        for row in &f.characters {
            let values = row
                .values
                .iter()
                .map(|v| v.parse::<Cyclotomic>().map_err(Error::from))
                .collect::<Result<Vec<_>>>()?;
            characters.push((row.name.clone(), ClassFunction::new(structure.clone(), values)?));
        }
        Ok(CharacterTable {
            id: f.id.clone(),
            description: f.description.clone(),
            structure,
            characters,
        })
    }

    pub fn parse_json(text: &str) -> Result<CharacterTable> {
        let f: CharacterTableFile =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("character table: {e}")))?;
        Self::from_file_data(&f)
    }

    pub fn load(path: &Path) -> Result<CharacterTable> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Self::parse_json(&text)
    }

    pub fn get(&self, name: &str) -> Option<&ClassFunction> {
        self.characters.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }

    /// `Σ mᵢ·χᵢ` for named rows.
    pub fn combination(&self, terms: &[(&str, i64)]) -> Result<ClassFunction> {
        let mut acc = ClassFunction::new(
            self.structure.clone(),
            vec![Cyclotomic::zero(); self.structure.len()],
        )?;
        for &(name, m) in terms {
            let chi = self
                .get(name)
                .ok_or_else(|| Error::Input(format!("no character `{name}` in `{}`", self.id)))?;
            acc = acc.add(&chi.scale(m))?;
        }
        Ok(acc)
    }

    /// Checks `⟨χᵢ, χⱼ⟩ = δᵢⱼ` for all listed rows.
    pub fn check_orthonormal(&self) -> Result<()> {
        for (i, (ni, a)) in self.characters.iter().enumerate() {
            for (j, (nj, b)) in self.characters.iter().enumerate() {
                let ip = a.inner_product(b)?;
                let expected = Cyclotomic::from_int(i64::from(i == j));
                if ip.value != expected {
                    return Err(Error::Inconsistent(format!(
                        "<{ni}, {nj}> = {} in `{}`",
                        ip.value, self.id
                    )));
                }
            }
        }
        Ok(())
    }
}
