//! The small example algebras: `K[S3]`, matrix algebras, `sl(3)` under a
//! corner `SL(2)`, and truncated polynomials.

use alloc::string::String;
use alloc::vec::Vec;

use crate::exactla::{unit_vector, Bilinear, Matrix, Scalar, Vector};
use crate::gtable::{cotable, extract_algebra, GTable, SummandInfo, TableError};
use crate::repkit::{
    decompose_s3, decompose_sl2, poly_operators, s3, slk, Decomposition, GModule, GlLabel, Group, IrrepId, Labeling,
    S3Label, Summand,
};

use super::{fixture_table, Cell, GalleryError};

/// An algebra together with the decomposition its table is taken against.
#[derive(Debug, Clone)]
pub struct GalleryAlgebra {
    pub labeling: Labeling,
    pub decomposition: Decomposition,
    pub product: Bilinear,
}

impl GalleryAlgebra {
    pub fn table(&self) -> Result<GTable, TableError> {
        extract_algebra(&self.product, &self.decomposition, &self.labeling)
    }
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

// K[S3] --------------------------------------------------------------------

fn group_vector(coeffs: [i64; 6], den: i64) -> Vector {
    coeffs.iter().map(|&c| q(c, den)).collect()
}

/// Seeds `1_1, 1_2, 1_3, s_sg, A_std` on the group basis.
fn s3_seeds() -> Vec<(String, Vector)> {
    alloc::vec![
        ("1_1".into(), group_vector([1, 1, 1, 1, 1, 1], 6)),
        ("1_2".into(), group_vector([1, -1, -1, -1, 1, 1], 6)),
        ("1_3".into(), group_vector([2, 0, 0, 0, -1, -1], 3)),
        ("s_sg".into(), group_vector([0, 0, 0, 0, 1, -1], 1)),
        ("A_std".into(), group_vector([0, 1, -1, 0, 0, 0], 1)),
    ]
}

fn s3_decomposition() -> Result<Decomposition, GalleryError> {
    let (s, t) = s3::conjugation_generators();
    let m = GModule::new(Group::S3, 6, alloc::vec![s, t])?;
    Ok(decompose_s3(&m, &Labeling::s3(), Some(&s3_seeds()))?)
}

/// `K[S3]` under conjugation, with its group multiplication.
pub fn s3_algebra() -> Result<GalleryAlgebra, GalleryError> {
    let product = Bilinear::from_fn(6, 6, 6, |i, j| {
        unit_vector(6, s3::index_of(s3::compose(s3::ELEMENTS[i], s3::ELEMENTS[j])))
    });
    Ok(GalleryAlgebra {
        labeling: Labeling::s3(),
        decomposition: s3_decomposition()?,
        product,
    })
}

pub fn s3_table() -> Result<GTable, GalleryError> {
    Ok(s3_algebra()?.table()?)
}

/// Table of the dual of `Δ(g) = g ⊗ g`, the dual identified with `K[S3]`
/// by making the group basis orthonormal.
pub fn s3_cotable() -> Result<GTable, GalleryError> {
    let mut delta = Matrix::zeros(36, 6);
    for g in 0..6 {
        delta[(g * 6 + g, g)] = Scalar::one();
    }
    Ok(cotable(&delta, &s3_decomposition()?, &Labeling::s3())?)
}

const T1: usize = 0;
const T2: usize = 1;
const T3: usize = 2;
const SG: usize = 3;
const STD: usize = 4;

fn s3_summands() -> Vec<SummandInfo> {
    let tr = IrrepId::S3(S3Label::Tr);
    [
        ("1_1", tr),
        ("1_2", tr),
        ("1_3", tr),
        ("s_sg", IrrepId::S3(S3Label::Sg)),
        ("A_std", IrrepId::S3(S3Label::Std)),
    ]
    .iter()
    .map(|&(id, irrep)| SummandInfo {
        id: id.into(),
        irrep,
        hwv_weight: None,
    })
    .collect()
}

pub fn s3_fixture() -> GTable {
    let cells: &[Cell] = &[
        (T1, T1, &[(T1, 1, 1, 1)]),
        (T2, T2, &[(T2, 1, 1, 1)]),
        (T3, T3, &[(T3, 1, 1, 1)]),
        (T3, SG, &[(SG, 1, 1, 1)]),
        (T3, STD, &[(STD, 1, 1, 1)]),
        (SG, T3, &[(SG, 1, 1, 1)]),
        (SG, SG, &[(T3, 1, -3, 1)]),
        (SG, STD, &[(STD, 1, 1, 1)]),
        (STD, T3, &[(STD, 1, 1, 1)]),
        (STD, SG, &[(STD, 1, -1, 1)]),
        (STD, STD, &[(T3, 1, 3, 2), (SG, 1, 3, 2)]),
    ];
    fixture_table(&Labeling::s3(), s3_summands(), cells)
}

pub fn s3_cotable_fixture() -> GTable {
    let cells: &[Cell] = &[
        (T1, T1, &[(T1, 1, 1, 6)]),
        (T1, T2, &[(T2, 1, 1, 6)]),
        (T1, T3, &[(T3, 1, 1, 6)]),
        (T1, SG, &[(SG, 1, 1, 6)]),
        (T1, STD, &[(STD, 1, 1, 6)]),
        (T2, T1, &[(T2, 1, 1, 6)]),
        (T2, T2, &[(T1, 1, 1, 6)]),
        (T2, T3, &[(T3, 1, 1, 6)]),
        (T2, SG, &[(SG, 1, 1, 6)]),
        (T2, STD, &[(STD, 1, -1, 6)]),
        (T3, T1, &[(T3, 1, 1, 6)]),
        (T3, T2, &[(T3, 1, 1, 6)]),
        (T3, T3, &[(T1, 1, 2, 3), (T2, 1, 2, 3), (T3, 1, 1, 3)]),
        (T3, SG, &[(SG, 1, -1, 3)]),
        (SG, T1, &[(SG, 1, 1, 6)]),
        (SG, T2, &[(SG, 1, 1, 6)]),
        (SG, T3, &[(SG, 1, -1, 3)]),
        (SG, SG, &[(T1, 1, 2, 1), (T2, 1, 2, 1), (T3, 1, -1, 1)]),
        (STD, T1, &[(STD, 1, 1, 6)]),
        (STD, T2, &[(STD, 1, -1, 6)]),
        (STD, STD, &[(T1, 1, 1, 1), (T2, 1, -1, 1), (STD, 1, 1, 3)]),
    ];
    fixture_table(&Labeling::s3(), s3_summands(), cells)
}

// M_k ----------------------------------------------------------------------

fn vec_of(m: &Matrix) -> Vector {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

/// `gl(k)` acting on `M_k` by commutators, on the row-major entry basis.
fn adjoint_on_matrices(k: usize) -> Vec<Matrix> {
    slk::chevalley_generators(k)
        .iter()
        .map(|x| {
            let cols: Vec<Vector> = (0..k * k)
                .map(|idx| vec_of(&x.commutator(&slk::unit(k, idx / k, idx % k))))
                .collect();
            Matrix::from_cols(k * k, &cols)
        })
        .collect()
}

/// `M_k(K) = K·I ⊕ sl(k)` with matrix multiplication.
pub fn mk_algebra(k: u32) -> Result<GalleryAlgebra, GalleryError> {
    let ku = k as usize;
    let lab = Labeling::gl(k);
    let module = GModule::new(Group::Gl(k), ku * ku, adjoint_on_matrices(ku))?;
    let traceless: Vec<Vector> = (0..slk::dim(ku)).map(|i| vec_of(&slk::basis_matrix(ku, i))).collect();
    let summands = alloc::vec![
        Summand {
            id: "I".into(),
            irrep: IrrepId::Gl {
                k,
                label: GlLabel::Trivial
            },
            tau: Matrix::from_cols(ku * ku, &[vec_of(&Matrix::identity(ku))]),
            hwv_weight: None,
        },
        Summand {
            id: "sl".into(),
            irrep: IrrepId::Gl {
                k,
                label: GlLabel::Adjoint
            },
            tau: Matrix::from_cols(ku * ku, &traceless),
            hwv_weight: None,
        },
    ];
    let decomposition = Decomposition::new(module, summands, &lab)?;
    let product = Bilinear::from_fn(ku * ku, ku * ku, ku * ku, |a, b| {
        vec_of(&slk::unit(ku, a / ku, a % ku).mul(&slk::unit(ku, b / ku, b % ku)))
    });
    Ok(GalleryAlgebra {
        labeling: lab,
        decomposition,
        product,
    })
}

pub fn mk_table(k: u32) -> Result<GTable, GalleryError> {
    Ok(mk_algebra(k)?.table()?)
}

/// `A·B = (1/k) tr(AB) I + ½[A,B] + ½(AB + BA − (2/k) tr(AB) I)` on the
/// traceless part; for `k = 2` the last map does not exist.
pub fn mk_fixture(k: u32) -> GTable {
    let lab = Labeling::gl(k);
    let summands = alloc::vec![
        SummandInfo {
            id: "I".into(),
            irrep: IrrepId::Gl {
                k,
                label: GlLabel::Trivial
            },
            hwv_weight: None,
        },
        SummandInfo {
            id: "sl".into(),
            irrep: IrrepId::Gl {
                k,
                label: GlLabel::Adjoint
            },
            hwv_weight: None,
        },
    ];
    let kk = k as i64;
    let full: &[(usize, usize, i64, i64)] = &[(0, 1, 1, kk), (1, 1, 1, 2), (1, 2, 1, 2)];
    let traceless = if k >= 3 { full } else { &full[..2] };
    let cells: &[Cell] = &[
        (0, 0, &[(0, 1, 1, 1)]),
        (0, 1, &[(1, 1, 1, 1)]),
        (1, 0, &[(1, 1, 1, 1)]),
        (1, 1, traceless),
    ];
    fixture_table(&lab, summands, cells)
}

// sl(3) under the corner SL(2) --------------------------------------------

/// `E₁₂, E₁₁ − E₂₂, E₂₁` in `gl(n)`.
pub(crate) fn corner_sl2(n: usize) -> [Matrix; 3] {
    let mut h = slk::unit(n, 0, 0);
    h[(1, 1)] = Scalar::from_int(-1);
    [slk::unit(n, 0, 1), h, slk::unit(n, 1, 0)]
}

/// `D = diag(1, 1, −2)`.
pub(crate) fn d3() -> Matrix {
    Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]])
}

/// `sl(3)` with its bracket, decomposed as `V0 ⊕ V2 ⊕ V1 ⊕ V1'` with
/// highest weight vectors `D`, `E₁₂`, `E₁₃`, `E₃₂`.
pub fn sl3_algebra() -> Result<GalleryAlgebra, GalleryError> {
    let gens: Vec<Matrix> = corner_sl2(3).iter().map(slk::ad).collect();
    let module = GModule::new(Group::Sl2, 8, gens)?;
    let lab = Labeling::sl2_first();
    let hwvs: Vec<(String, Vector)> = [
        ("V0", d3()),
        ("V2", slk::unit(3, 0, 1)),
        ("V1", slk::unit(3, 0, 2)),
        ("V1'", slk::unit(3, 2, 1)),
    ]
    .iter()
    .map(|(id, m)| (String::from(*id), slk::coords(m)))
    .collect();
    let decomposition = decompose_sl2(&module, &lab, Some(&hwvs))?;
    let product = Bilinear::from_fn(8, 8, 8, |a, b| {
        slk::coords(&slk::basis_matrix(3, a).commutator(&slk::basis_matrix(3, b)))
    });
    Ok(GalleryAlgebra {
        labeling: lab,
        decomposition,
        product,
    })
}

pub fn sl3_table() -> Result<GTable, GalleryError> {
    Ok(sl3_algebra()?.table()?)
}

pub fn sl3_fixture() -> GTable {
    let summands = [("V0", 0), ("V2", 2), ("V1", 1), ("V1'", 1)]
        .iter()
        .map(|&(id, n)| SummandInfo {
            id: id.into(),
            irrep: IrrepId::Sl2(n),
            hwv_weight: Some(n as i64),
        })
        .collect();
    let cells: &[Cell] = &[
        (0, 2, &[(2, 1, 3, 1)]),
        (0, 3, &[(3, 1, -3, 1)]),
        (1, 1, &[(1, 1, 1, 1)]),
        (1, 2, &[(2, 1, 1, 1)]),
        (1, 3, &[(3, 1, 1, 1)]),
        (2, 0, &[(2, 1, -3, 1)]),
        (2, 1, &[(2, 1, -1, 1)]),
        // the V0 coefficients in these two cells are printed as +1/2, which
        // breaks the Jacobi identity
        (2, 3, &[(1, 1, -1, 2), (0, 1, -1, 2)]),
        // printed as 3 V_1; the bracket with V0 preserves V1'
        (3, 0, &[(3, 1, 3, 1)]),
        (3, 1, &[(3, 1, -1, 1)]),
        (3, 2, &[(1, 1, 1, 2), (0, 1, -1, 2)]),
    ];
    fixture_table(&Labeling::sl2_first(), summands, cells)
}

/// [`sl3_fixture`] with the cells as originally printed: `+½ V0` in both
/// mixed `V1` cells and `3 V1` in `(V1', V0)`. Fails the Jacobi identity.
pub fn sl3_printed_fixture() -> GTable {
    let f = sl3_fixture();
    let raw = f.entries().map(|(r1, r2, e)| match (r1, r2, e.s) {
        (2, 3, 0) | (3, 2, 0) => (r1, r2, 0, e.q, q(1, 2)),
        (3, 0, _) => (r1, r2, 2, e.q, e.c.clone()),
        _ => (r1, r2, e.s, e.q, e.c.clone()),
    });
    GTable::new(&Labeling::sl2_first(), f.summands().to_vec(), None, raw).expect("fixture entries are valid")
}

// K[x, y] truncated --------------------------------------------------------

/// `K[x,y]` modulo degree `> max_degree`, on the monomials `x^{r−i} y^i`
/// degree by degree.
pub fn poly_algebra(max_degree: u32) -> Result<GalleryAlgebra, GalleryError> {
    let d = max_degree as usize;
    let lab = Labeling::sl2_poly(max_degree);
    // (x exponent, y exponent) of each basis monomial
    let monomials: Vec<(usize, usize)> = (0..=d).flat_map(|r| (0..=r).map(move |i| (r - i, i))).collect();
    let n = monomials.len();
    let blocks: Vec<(Matrix, Matrix, Matrix)> = (0..=d).map(poly_operators).collect();
    let gens: Vec<Matrix> = (0..3)
        .map(|g| {
            let mut m = Matrix::zeros(n, n);
            let mut off = 0;
            for (r, b) in blocks.iter().enumerate() {
                let op = [&b.0, &b.1, &b.2][g];
                for i in 0..=r {
                    for j in 0..=r {
                        m[(off + i, off + j)] = op[(i, j)].clone();
                    }
                }
                off += r + 1;
            }
            m
        })
        .collect();
    let module = GModule::new(Group::Sl2, n, gens)?;
    let mut offset = 0;
    let mut hwvs = Vec::new();
    for r in 0..=d {
        hwvs.push((alloc::format!("A{}", r), unit_vector(n, offset)));
        offset += r + 1;
    }
    let decomposition = decompose_sl2(&module, &lab, Some(&hwvs))?;
    let product = Bilinear::from_fn(n, n, n, |a, b| {
        let (xa, ya) = monomials[a];
        let (xb, yb) = monomials[b];
        let target = (xa + xb, ya + yb);
        match monomials.iter().position(|&m| m == target) {
            Some(k) => unit_vector(n, k),
            None => crate::exactla::zero_vector(n),
        }
    });
    Ok(GalleryAlgebra {
        labeling: lab,
        decomposition,
        product,
    })
}

pub fn poly_table(max_degree: u32) -> Result<GTable, GalleryError> {
    Ok(poly_algebra(max_degree)?.table()?)
}

pub fn poly_fixture(max_degree: u32) -> GTable {
    let d = max_degree as usize;
    let summands = (0..=max_degree)
        .map(|r| SummandInfo {
            id: alloc::format!("A{}", r),
            irrep: IrrepId::Sl2(r),
            hwv_weight: Some(r as i64),
        })
        .collect();
    let raw = (0..=d).flat_map(|a| (0..=d - a).map(move |b| (a, b, a + b, 1, Scalar::one())));
    GTable::new(&Labeling::sl2_poly(max_degree), summands, None, raw).expect("valid fixture")
}
