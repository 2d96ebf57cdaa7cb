use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exactla::{is_zero_vector, scale, Matrix, Scalar, Subspace, Vector};

use super::irrep::{Group, IrrepId, S3Label};
use super::labeling::Labeling;
use super::module::{is_equivariant_linear, GModule};
use super::s3;
use super::RepError;

/// One labeled irreducible summand: the embedding `τ` of its model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub id: String,
    pub irrep: IrrepId,
    /// `module_dim × model_dim`
    pub tau: Matrix,
    pub hwv_weight: Option<i64>,
}

/// A module written as a direct sum of embedded model irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    module: GModule,
    labeling: String,
    summands: Vec<Summand>,
    offsets: Vec<usize>,
    basis: Matrix,
    inverse: Matrix,
}

impl Decomposition {
    /// Validates equivariance of every `τ` and that their images form a
    /// direct sum equal to the whole module.
    pub fn new(module: GModule, summands: Vec<Summand>, lab: &Labeling) -> Result<Self, RepError> {
        if module.group() != lab.group() {
            return Err(RepError::WrongGroup);
        }
        let mut offsets = Vec::with_capacity(summands.len());
        let mut cols: Vec<Vector> = Vec::with_capacity(module.dim());
        for s in &summands {
            let model = lab.model(s.irrep).ok_or(RepError::UnknownIrrep(s.irrep))?;
            if s.tau.rows() != module.dim() || s.tau.cols() != model.dim() {
                return Err(RepError::InvalidModule("embedding has wrong shape"));
            }
            if !is_equivariant_linear(&s.tau, &model.module, &module) {
                return Err(RepError::NotEquivariant(s.id.clone()));
            }
            offsets.push(cols.len());
            cols.extend((0..s.tau.cols()).map(|j| s.tau.col(j)));
        }
        if cols.len() != module.dim() {
            return Err(RepError::NotDirectSum);
        }
        let basis = Matrix::from_cols(module.dim(), &cols);
        let inverse = basis.inverse().ok_or(RepError::NotDirectSum)?;
        Ok(Decomposition {
            module,
            labeling: String::from(lab.name()),
            summands,
            offsets,
            basis,
            inverse,
        })
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn labeling(&self) -> &str {
        &self.labeling
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Start of each summand in the concatenated summand coordinates.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Columns are the images of model basis vectors, summand by summand.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.summands.iter().position(|s| s.id == id)
    }

    pub fn to_summand_coords(&self, v: &[Scalar]) -> Vector {
        self.inverse.mul_vec(v)
    }

    pub fn from_summand_coords(&self, c: &[Scalar]) -> Vector {
        self.basis.mul_vec(c)
    }
}

/// Highest weight spaces of an SL(2) module: for each weight `n ≥ 0` with a
/// nonzero space, a basis of `ker E ∩ ker(H − n)`, in increasing `n`.
pub fn highest_weight_vectors(m: &GModule) -> Result<Vec<(i64, Vec<Vector>)>, RepError> {
    let (e, h, _) = m.efh().ok_or(RepError::WrongGroup)?;
    let d = m.dim();
    let weights = h_eigenvalues(h)?;
    let mut out = Vec::new();
    for n in weights.into_iter().filter(|&n| n >= 0) {
        let shifted = h.sub(&Matrix::identity(d).scale(&Scalar::from_int(n)));
        let mut rows = e.to_rows();
        rows.extend(shifted.to_rows());
        let k = Matrix::from_rows_with_cols(rows, d).kernel();
        if !k.is_zero() {
            out.push((n, k.basis().to_vec()));
        }
    }
    Ok(out)
}

/// Distinct integer eigenvalues of `h`, after checking that they account for
/// the whole space.
fn h_eigenvalues(h: &Matrix) -> Result<Vec<i64>, RepError> {
    let d = h.rows() as i64;
    let diagonal = (0..h.rows()).all(|i| (0..h.cols()).all(|j| i == j || h[(i, j)].is_zero()));
    let mut found = Vec::new();
    let mut total = 0usize;
    if diagonal {
        for i in 0..h.rows() {
            let n = h[(i, i)].to_i64().ok_or(RepError::NonDiagonalizableH)?;
            if !found.contains(&n) {
                found.push(n);
            }
        }
        found.sort_unstable();
        return Ok(found);
    }
    for n in -d..=d {
        let shifted = h.sub(&Matrix::identity(h.rows()).scale(&Scalar::from_int(n)));
        let k = shifted.kernel().dim();
        if k > 0 {
            found.push(n);
            total += k;
        }
    }
    if total != h.rows() {
        return Err(RepError::NonDiagonalizableH);
    }
    Ok(found)
}

/// Columns `w, Fw, …, F^n w`.
fn f_orbit(f: &Matrix, w: &[Scalar], n: usize) -> Matrix {
    let mut cols = Vec::with_capacity(n + 1);
    let mut v = w.to_vec();
    for _ in 0..=n {
        let next = f.mul_vec(&v);
        cols.push(v);
        v = next;
    }
    Matrix::from_cols(w.len(), &cols)
}

/// Weight of a highest weight vector, or an error if `w` is not one.
pub fn hwv_weight(m: &GModule, w: &[Scalar]) -> Result<i64, RepError> {
    let (e, h, _) = m.efh().ok_or(RepError::WrongGroup)?;
    if is_zero_vector(w) || !is_zero_vector(&e.mul_vec(w)) {
        return Err(RepError::NotHighestWeight);
    }
    let hw = h.mul_vec(w);
    let k = w.iter().position(|x| !x.is_zero()).unwrap();
    let n = &hw[k] / &w[k];
    if hw != scale(&n, w) {
        return Err(RepError::NotHighestWeight);
    }
    n.to_i64().filter(|&n| n >= 0).ok_or(RepError::NotHighestWeight)
}

/// Decomposes an SL(2) module by extending each highest weight vector along
/// its F-orbit: `τ(F^j v̄) = F^j w`.
///
/// Without `hwvs`, one summand per echelon basis vector of each highest
/// weight space is produced, named `V{n}` or `V{n}_{k}`.
pub fn decompose_sl2(
    m: &GModule,
    lab: &Labeling,
    hwvs: Option<&[(String, Vector)]>,
) -> Result<Decomposition, RepError> {
    let (_, _, f) = m.efh().ok_or(RepError::WrongGroup)?;
    let chosen: Vec<(String, i64, Vector)> = match hwvs {
        Some(list) => list
            .iter()
            .map(|(id, w)| hwv_weight(m, w).map(|n| (id.clone(), n, w.clone())))
            .collect::<Result<_, _>>()?,
        None => {
            let mut v = Vec::new();
            for (n, basis) in highest_weight_vectors(m)? {
                let many = basis.len() > 1;
                for (k, w) in basis.into_iter().enumerate() {
                    let id = if many {
                        format!("V{}_{}", n, k + 1)
                    } else {
                        format!("V{}", n)
                    };
                    v.push((id, n, w));
                }
            }
            v
        }
    };
    let mut summands = Vec::with_capacity(chosen.len());
    for (id, n, w) in chosen {
        let irrep = IrrepId::Sl2(n as u32);
        let model = lab.model(irrep).ok_or(RepError::UnknownIrrep(irrep))?;
        let (_, _, mf) = model.module.efh().unwrap();
        let vbar = model.hwv.as_ref().ok_or(RepError::UnknownIrrep(irrep))?;
        let nu = n as usize;
        let om = f_orbit(f, &w, nu);
        let omodel = f_orbit(mf, vbar, nu);
        let inv = omodel
            .inverse()
            .ok_or(RepError::InvalidModule("model orbit is degenerate"))?;
        summands.push(Summand {
            id,
            irrep,
            tau: om.mul(&inv),
            hwv_weight: Some(n),
        });
    }
    Decomposition::new(m.clone(), summands, lab)
}

fn group_average(elements: &[Matrix], weights: impl Fn(usize) -> Scalar, factor: Scalar) -> Matrix {
    let d = elements[0].rows();
    let mut acc = Matrix::zeros(d, d);
    for (g, m) in elements.iter().enumerate() {
        let w = weights(g);
        if !w.is_zero() {
            acc = acc.add(&m.scale(&w));
        }
    }
    acc.scale(&factor)
}

/// Isotypic projector `(dim χ / 6) Σ χ(g⁻¹) ρ(g)`.
pub fn s3_isotypic_projector(m: &GModule, label: S3Label) -> Option<Matrix> {
    let elements = m.s3_elements()?;
    let chi = s3::character(label);
    let dim = IrrepId::S3(label).dim() as i64;
    Some(group_average(
        &elements,
        |g| Scalar::from_int(chi[s3::INVERSE[g]]),
        Scalar::new(dim, 6),
    ))
}

/// Matrix unit `p_ij = (2/6) Σ π_std(g⁻¹)_{ji} ρ(g)`; `p_ij` maps the `e_j`
/// component of a std copy onto its `e_i` component.
pub fn s3_matrix_unit(m: &GModule, i: usize, j: usize) -> Option<Matrix> {
    let elements = m.s3_elements()?;
    Some(group_average(
        &elements,
        |g| s3::std_matrix(s3::INVERSE[g])[(j, i)].clone(),
        Scalar::new(1, 3),
    ))
}

/// Decomposes an S3 module with character projectors.
///
/// Each seed generates one summand: its isotype is the projector that fixes
/// it, and inside the std block `τ(e_i) = p_{i1} w`. Without seeds, the
/// echelon basis of each projector image (of `p_11` for std) is used, with
/// ids `tr_k`, `sg_k`, `std_k`.
pub fn decompose_s3(
    m: &GModule,
    lab: &Labeling,
    seeds: Option<&[(String, Vector)]>,
) -> Result<Decomposition, RepError> {
    if m.group() != Group::S3 {
        return Err(RepError::WrongGroup);
    }
    let proj: Vec<(S3Label, Matrix)> = S3Label::ALL
        .iter()
        .map(|&l| (l, s3_isotypic_projector(m, l).unwrap()))
        .collect();
    let p11 = s3_matrix_unit(m, 0, 0).unwrap();
    let p21 = s3_matrix_unit(m, 1, 0).unwrap();

    let chosen: Vec<(String, S3Label, Vector)> = match seeds {
        Some(list) => list
            .iter()
            .map(|(id, w)| {
                proj.iter()
                    .find(|(_, p)| p.mul_vec(w) == *w)
                    .map(|(l, _)| (id.clone(), *l, w.clone()))
                    .ok_or(RepError::SeedNotIsotypic(id.clone()))
            })
            .collect::<Result<_, _>>()?,
        None => {
            let mut v = Vec::new();
            for (l, p) in &proj {
                let image = if *l == S3Label::Std { &p11 } else { p };
                let span = Subspace::from_spanning(m.dim(), image.transpose().to_rows());
                for (k, w) in span.basis().iter().enumerate() {
                    v.push((format!("{}_{}", IrrepId::S3(*l).label(), k + 1), *l, w.clone()));
                }
            }
            v
        }
    };
    let summands = chosen
        .into_iter()
        .map(|(id, l, w)| {
            let tau = if l == S3Label::Std {
                Matrix::from_cols(m.dim(), &[p11.mul_vec(&w), p21.mul_vec(&w)])
            } else {
                Matrix::from_cols(m.dim(), &[w])
            };
            Summand {
                id,
                irrep: IrrepId::S3(l),
                tau,
                hwv_weight: None,
            }
        })
        .collect();
    Decomposition::new(m.clone(), summands, lab)
}

/// Decomposition of a module for the trivial group into coordinate lines.
pub fn decompose_trivial(m: &GModule, lab: &Labeling, ids: Option<Vec<String>>) -> Result<Decomposition, RepError> {
    if m.group() != Group::One {
        return Err(RepError::WrongGroup);
    }
    let ids = ids.unwrap_or_else(|| (0..m.dim()).map(|i| format!("e{}", i + 1)).collect());
    let summands = ids
        .into_iter()
        .enumerate()
        .map(|(i, id)| Summand {
            id,
            irrep: IrrepId::One,
            tau: Matrix::from_cols(m.dim(), &[crate::exactla::unit_vector(m.dim(), i)]),
            hwv_weight: None,
        })
        .collect();
    Decomposition::new(m.clone(), summands, lab)
}

/// The direct sum of the listed models, decomposed by the coordinate
/// inclusions.
pub fn decompose_standard(parts: &[(String, IrrepId)], lab: &Labeling) -> Result<Decomposition, RepError> {
    let mut module = GModule::trivial(lab.group(), 0);
    let mut dims = Vec::with_capacity(parts.len());
    for (_, irrep) in parts {
        let model = lab.model(*irrep).ok_or(RepError::UnknownIrrep(*irrep))?;
        module = module.direct_sum(&model.module);
        dims.push(model.dim());
    }
    let total = module.dim();
    let mut offset = 0;
    let mut summands = Vec::with_capacity(parts.len());
    for ((id, irrep), d) in parts.iter().zip(dims) {
        let mut tau = Matrix::zeros(total, d);
        for k in 0..d {
            tau[(offset + k, k)] = Scalar::one();
        }
        offset += d;
        summands.push(Summand {
            id: id.clone(),
            irrep: *irrep,
            tau,
            hwv_weight: match irrep {
                IrrepId::Sl2(n) => Some(*n as i64),
                _ => None,
            },
        });
    }
    Decomposition::new(module, summands, lab)
}
