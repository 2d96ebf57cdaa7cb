//! JSON for tables, scalars and matrices.
//!
//! Scalars are strings `"num/den"` (denominator dropped when 1), so the
//! format round-trips exactly.

use std::collections::BTreeMap;

use gtable_core::exactla::{Matrix, Scalar};
use gtable_core::gtable::{GTable, SummandInfo};
use gtable_core::repkit::{Group, IrrepId, Labeling};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IrrepLabel {
    Weight(u32),
    Name(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepJson {
    pub group: String,
    pub label: IrrepLabel,
}

impl IrrepJson {
    pub fn of(id: IrrepId) -> Self {
        let label = match id {
            IrrepId::Sl2(n) => IrrepLabel::Weight(n),
            _ => IrrepLabel::Name(id.label()),
        };
        IrrepJson {
            group: id.group().name(),
            label,
        }
    }

    pub fn parse(&self) -> Result<IrrepId, CliError> {
        let group =
            Group::parse(&self.group).ok_or_else(|| CliError::input(format!("unknown group `{}`", self.group)))?;
        let label = match &self.label {
            IrrepLabel::Weight(n) => n.to_string(),
            IrrepLabel::Name(s) => s.clone(),
        };
        IrrepId::from_parts(group, &label)
            .ok_or_else(|| CliError::input(format!("unknown irrep `{label}` of {}", self.group)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub id: String,
    pub irrep: IrrepJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hwv_weight: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub r1: String,
    pub r2: String,
    pub s: String,
    pub q: usize,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub group: String,
    pub labeling: String,
    pub summands: Vec<SummandJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub targets: Option<Vec<SummandJson>>,
    pub entries: Vec<EntryJson>,
}

fn summand_json(s: &SummandInfo) -> SummandJson {
    SummandJson {
        id: s.id.clone(),
        irrep: IrrepJson::of(s.irrep),
        hwv_weight: s.hwv_weight,
    }
}

fn summand_info(s: &SummandJson) -> Result<SummandInfo, CliError> {
    Ok(SummandInfo {
        id: s.id.clone(),
        irrep: s.irrep.parse()?,
        hwv_weight: s.hwv_weight,
    })
}

impl TableJson {
    pub fn of(t: &GTable) -> Self {
        let (src, tgt) = (t.summands(), t.targets());
        TableJson {
            group: t.group().name(),
            labeling: t.labeling().to_string(),
            summands: src.iter().map(summand_json).collect(),
            targets: t.has_separate_targets().then(|| tgt.iter().map(summand_json).collect()),
            entries: t
                .entries()
                .map(|(r1, r2, e)| EntryJson {
                    r1: src[r1].id.clone(),
                    r2: src[r2].id.clone(),
                    s: tgt[e.s].id.clone(),
                    q: e.q,
                    c: e.c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_table(&self) -> Result<GTable, CliError> {
        let lab = Labeling::by_name(&self.labeling)
            .ok_or_else(|| CliError::input(format!("unknown labeling `{}`", self.labeling)))?;
        if lab.group().name() != self.group {
            return Err(CliError::input(format!(
                "labeling `{}` belongs to {}, not {}",
                self.labeling,
                lab.group().name(),
                self.group
            )));
        }
        let summands = self.summands.iter().map(summand_info).collect::<Result<Vec<_>, _>>()?;
        let targets = match &self.targets {
            Some(t) => Some(t.iter().map(summand_info).collect::<Result<Vec<_>, _>>()?),
            None => None,
        };
        let index = |list: &[SummandInfo]| -> Result<BTreeMap<String, usize>, CliError> {
            let mut m = BTreeMap::new();
            for (i, s) in list.iter().enumerate() {
                if m.insert(s.id.clone(), i).is_some() {
                    return Err(CliError::input(format!("duplicate summand id `{}`", s.id)));
                }
            }
            Ok(m)
        };
        let src = index(&summands)?;
        let tgt = index(targets.as_deref().unwrap_or(&summands))?;
        let lookup = |m: &BTreeMap<String, usize>, id: &str| {
            m.get(id)
                .copied()
                .ok_or_else(|| CliError::input(format!("unknown summand `{id}`")))
        };
        let mut raw = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            raw.push((
                lookup(&src, &e.r1)?,
                lookup(&src, &e.r2)?,
                lookup(&tgt, &e.s)?,
                e.q,
                parse_scalar(&e.c)?,
            ));
        }
        GTable::new(&lab, summands, targets, raw).map_err(|e| CliError::input(e.to_string()))
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar, CliError> {
    s.parse().map_err(|e| CliError::input(format!("{e}")))
}

pub fn vector_json(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

pub fn parse_vector(v: &[String]) -> Result<Vec<Scalar>, CliError> {
    v.iter().map(|s| parse_scalar(s)).collect()
}

/// Row-major list of rows.
pub fn matrix_json(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| vector_json(m.row(i))).collect()
}

pub fn parse_matrix(rows: &[Vec<String>], cols: usize) -> Result<Matrix, CliError> {
    let rows = rows.iter().map(|r| parse_vector(r)).collect::<Result<Vec<_>, _>>()?;
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::input(format!("matrix rows must have {cols} entries")));
    }
    Ok(Matrix::from_rows_with_cols(rows, cols))
}

/// Pretty-printed with a trailing newline; key order is fixed by the types.
pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn table_to_json(t: &GTable) -> String {
    to_string(&TableJson::of(t))
}

pub fn table_from_json(s: &str) -> Result<GTable, CliError> {
    let parsed: TableJson = serde_json::from_str(s).map_err(|e| CliError::input(format!("table JSON: {e}")))?;
    parsed.to_table()
}
