//! Algebra description files: a module, a product (or a coproduct) and a
//! way to decompose the module.

use gtable_core::exactla::Bilinear;
use gtable_core::gtable::{cotable, extract_algebra, GTable};
use gtable_core::repkit::{
    decompose_s3, decompose_sl2, decompose_trivial, Decomposition, GModule, Group, IrrepId, Labeling, Summand,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::json::{matrix_json, parse_matrix, parse_vector, vector_json, IrrepJson};

pub const SCHEMA_HELP: &str = r#"spec file schema (JSON, scalars as "num/den" strings):
{
  "labeling": "trivial" | "sl2-first" | "sl2-poly:D" | "gl-K" | "s3",
  "dim": n,
  "action": [generator matrices, n x n, as lists of rows],
  "product": [[[n scalars]]]        // product[i][j] = e_i e_j, or
  "comultiplication": [n*n rows of n scalars],
  "decomposition":                   // optional for SL2, S3 and the trivial group
    {"highest_weight_vectors": [{"id": str, "vector": [...]}]} |
    {"seeds": [{"id": str, "vector": [...]}]} |
    {"summands": [{"id": str, "irrep": {"group": str, "label": ...}, "tau": [rows]}]}
}
generators: SL2 takes E, H, F; GLk takes e_1..e_{k-1}, f_1..f_{k-1}; S3 takes (12), (123)."#;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedVector {
    pub id: String,
    pub vector: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandSpec {
    pub id: String,
    pub irrep: IrrepJson,
    pub tau: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompositionSpec {
    HighestWeightVectors(Vec<NamedVector>),
    Seeds(Vec<NamedVector>),
    Summands(Vec<SummandSpec>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub labeling: String,
    pub dim: usize,
    #[serde(default)]
    pub action: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comultiplication: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionSpec>,
}

fn named(v: &[NamedVector], n: usize) -> Result<Vec<(String, Vec<gtable_core::exactla::Scalar>)>, CliError> {
    v.iter()
        .map(|nv| {
            let x = parse_vector(&nv.vector)?;
            if x.len() != n {
                return Err(CliError::input(format!("vector `{}` must have {n} entries", nv.id)));
            }
            Ok((nv.id.clone(), x))
        })
        .collect()
}

impl AlgebraSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::input(format!("spec file: {e}")))
    }

    pub fn labeling(&self) -> Result<Labeling, CliError> {
        Labeling::by_name(&self.labeling)
            .ok_or_else(|| CliError::input(format!("unknown labeling `{}`", self.labeling)))
    }

    pub fn module(&self, lab: &Labeling) -> Result<GModule, CliError> {
        let n = self.dim;
        let gens = self
            .action
            .iter()
            .map(|m| {
                if m.len() != n {
                    return Err(CliError::input(format!("action matrices must be {n} x {n}")));
                }
                parse_matrix(m, n)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let module = match lab.group() {
            Group::One if gens.is_empty() => GModule::trivial(Group::One, n),
            g => GModule::new(g, n, gens).map_err(|e| CliError::input(format!("action: {e}")))?,
        };
        module
            .validate()
            .map_err(|e| CliError::input(format!("action does not satisfy the group relations: {e}")))?;
        Ok(module)
    }

    pub fn decomposition(&self, module: GModule, lab: &Labeling) -> Result<Decomposition, CliError> {
        let n = self.dim;
        let dec = match (&self.decomposition, lab.group()) {
            (Some(DecompositionSpec::Summands(parts)), _) => {
                let mut summands = Vec::with_capacity(parts.len());
                for p in parts {
                    let irrep = p.irrep.parse()?;
                    let tau = parse_matrix(&p.tau, irrep.dim())?;
                    summands.push(Summand {
                        id: p.id.clone(),
                        irrep,
                        tau,
                        hwv_weight: match irrep {
                            IrrepId::Sl2(w) => Some(w as i64),
                            _ => None,
                        },
                    });
                }
                Decomposition::new(module, summands, lab)
            }
            (Some(DecompositionSpec::HighestWeightVectors(v)), Group::Sl2) => {
                decompose_sl2(&module, lab, Some(&named(v, n)?))
            }
            (Some(DecompositionSpec::Seeds(v)), Group::S3) => decompose_s3(&module, lab, Some(&named(v, n)?)),
            (None, Group::Sl2) => decompose_sl2(&module, lab, None),
            (None, Group::S3) => decompose_s3(&module, lab, None),
            (None, Group::One) => decompose_trivial(&module, lab, None),
            (Some(_), g) => {
                return Err(CliError::input(format!(
                    "this decomposition kind does not apply to {}",
                    g.name()
                )))
            }
            (None, g) => {
                return Err(CliError::input(format!(
                    "{} modules need an explicit `summands` decomposition",
                    g.name()
                )))
            }
        };
        dec.map_err(|e| CliError::input(format!("decomposition: {e}")))
    }

    pub fn product(&self) -> Result<Option<Bilinear>, CliError> {
        let Some(p) = &self.product else {
            return Ok(None);
        };
        let n = self.dim;
        if p.len() != n || p.iter().any(|row| row.len() != n) {
            return Err(CliError::input(format!("product must be {n} x {n} x {n}")));
        }
        let mut b = Bilinear::zero(n, n, n);
        for (i, row) in p.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let v = parse_vector(v)?;
                if v.len() != n {
                    return Err(CliError::input(format!("product[{i}][{j}] must have {n} entries")));
                }
                *b.image_mut(i, j) = v;
            }
        }
        Ok(Some(b))
    }

    /// The table of the product, or of the dual of the coproduct.
    pub fn table(&self) -> Result<GTable, CliError> {
        let lab = self.labeling()?;
        let module = self.module(&lab)?;
        let dec = self.decomposition(module, &lab)?;
        match (self.product()?, &self.comultiplication) {
            (Some(mu), None) => Ok(extract_algebra(&mu, &dec, &lab)?),
            (None, Some(delta)) => {
                let n = self.dim;
                if delta.len() != n * n {
                    return Err(CliError::input(format!("comultiplication must have {} rows", n * n)));
                }
                let delta = parse_matrix(delta, n)?;
                Ok(cotable(&delta, &dec, &lab)?)
            }
            _ => Err(CliError::input("give exactly one of `product` and `comultiplication`")),
        }
    }

    /// A spec that reproduces `dec` verbatim through explicit embeddings.
    pub fn export(lab: &Labeling, dec: &Decomposition, product: &Bilinear) -> Self {
        let module = dec.module();
        let n = module.dim();
        let action: Vec<Vec<Vec<String>>> = module.gens().iter().map(matrix_json).collect();
        let prod = (0..n)
            .map(|i| (0..n).map(|j| vector_json(product.image(i, j))).collect())
            .collect();
        let summands = dec
            .summands()
            .iter()
            .map(|s| SummandSpec {
                id: s.id.clone(),
                irrep: IrrepJson::of(s.irrep),
                tau: matrix_json(&s.tau),
            })
            .collect();
        AlgebraSpec {
            labeling: lab.name().to_string(),
            dim: n,
            action,
            product: Some(prod),
            comultiplication: None,
            decomposition: Some(DecompositionSpec::Summands(summands)),
        }
    }
}
