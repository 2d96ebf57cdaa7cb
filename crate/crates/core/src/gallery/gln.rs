//! `gl(n) ⋉ gl(n)_ab` with its commutative product.

use alloc::string::String;
use alloc::vec::Vec;

use crate::exactla::{Bilinear, Matrix, Scalar, Vector};
use crate::gtable::{GTable, SummandInfo};
use crate::repkit::{decompose_sl2, slk, Decomposition, GModule, GlLabel, Group, IrrepId, Labeling, Summand};

use super::examples::{corner_sl2, d3, GalleryAlgebra};
use super::{fixture_table, Cell, GalleryError};

/// `(a₀ I + A₀, a₁ I + A₁)` with `A₀, A₁` traceless.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlnGlnAb {
    pub a0: Scalar,
    pub m0: Matrix,
    pub a1: Scalar,
    pub m1: Matrix,
}

fn split(x: &Matrix) -> (Scalar, Matrix) {
    let n = x.rows();
    let a = x.trace() * Scalar::new(1, n as i64);
    (a.clone(), x.sub(&Matrix::identity(n).scale(&a)))
}

impl GlnGlnAb {
    pub fn new(a0: Scalar, m0: Matrix, a1: Scalar, m1: Matrix) -> Result<Self, GalleryError> {
        if !m0.is_square() || m0.rows() != m1.rows() || !m1.is_square() {
            return Err(GalleryError::SizeMismatch);
        }
        if !m0.trace().is_zero() || !m1.trace().is_zero() {
            return Err(GalleryError::NotTraceless);
        }
        Ok(GlnGlnAb { a0, m0, a1, m1 })
    }

    /// Splits a pair of arbitrary matrices into scalar and traceless parts.
    pub fn from_pair(x0: &Matrix, x1: &Matrix) -> Result<Self, GalleryError> {
        if !x0.is_square() || x0.rows() != x1.rows() || !x1.is_square() {
            return Err(GalleryError::SizeMismatch);
        }
        let ((a0, m0), (a1, m1)) = (split(x0), split(x1));
        Ok(GlnGlnAb { a0, m0, a1, m1 })
    }

    pub fn n(&self) -> usize {
        self.m0.rows()
    }

    pub fn to_pair(&self) -> (Matrix, Matrix) {
        let id = Matrix::identity(self.n());
        (self.m0.add(&id.scale(&self.a0)), self.m1.add(&id.scale(&self.a1)))
    }

    /// Coordinates `(a₀, A₀, A₁, a₁)`, the traceless parts on the `sl(n)`
    /// basis; summand order `(I)₀, sl₀, sl_ab, (I)_ab`.
    pub fn coords(&self) -> Vector {
        let mut v = alloc::vec![self.a0.clone()];
        v.extend(slk::coords(&self.m0));
        v.extend(slk::coords(&self.m1));
        v.push(self.a1.clone());
        v
    }

    pub fn from_coords(n: usize, c: &[Scalar]) -> Self {
        let d = slk::dim(n);
        assert_eq!(c.len(), 2 * d + 2);
        GlnGlnAb {
            a0: c[0].clone(),
            m0: slk::from_coords(n, &c[1..1 + d]),
            a1: c[2 * d + 1].clone(),
            m1: slk::from_coords(n, &c[1 + d..1 + 2 * d]),
        }
    }

    pub fn basis(n: usize) -> Vec<Self> {
        let dim = 2 * slk::dim(n) + 2;
        (0..dim)
            .map(|i| GlnGlnAb::from_coords(n, &crate::exactla::unit_vector(dim, i)))
            .collect()
    }

    /// The commutative product, as displayed with full matrices.
    pub fn product(&self, other: &GlnGlnAb) -> Result<Self, GalleryError> {
        let n = self.n();
        if other.n() != n {
            return Err(GalleryError::SizeMismatch);
        }
        let (a, b) = (self, other);
        let id = Matrix::identity(n);
        let first = id
            .scale(&(&a.a0 * &b.a0))
            .add(&b.m0.scale(&a.a0))
            .add(&a.m0.scale(&b.a0));
        let scalar = &(&a.a0 * &b.a1) + &(&a.a1 * &b.a0) + a.m0.mul(&b.m1).add(&a.m1.mul(&b.m0)).trace()
            - Scalar::new(2, n as i64) * a.m0.mul(&b.m0).trace();
        let second = id
            .scale(&scalar)
            .add(&b.m1.scale(&a.a0))
            .add(&a.m1.scale(&b.a0))
            .add(&a.m0.mul(&b.m0))
            .add(&b.m0.mul(&a.m0));
        GlnGlnAb::from_pair(&first, &second)
    }

    /// `[(X₀, X₁), (Y₀, Y₁)] = ([X₀, Y₀], [X₀, Y₁] + [X₁, Y₀])`.
    pub fn bracket(&self, other: &GlnGlnAb) -> Result<Self, GalleryError> {
        if other.n() != self.n() {
            return Err(GalleryError::SizeMismatch);
        }
        let ((x0, x1), (y0, y1)) = (self.to_pair(), other.to_pair());
        GlnGlnAb::from_pair(&x0.commutator(&y0), &x0.commutator(&y1).add(&x1.commutator(&y0)))
    }
}

fn structure(n: usize, op: impl Fn(&GlnGlnAb, &GlnGlnAb) -> Result<GlnGlnAb, GalleryError>) -> Bilinear {
    let basis = GlnGlnAb::basis(n);
    let dim = basis.len();
    Bilinear::from_fn(dim, dim, dim, |i, j| {
        op(&basis[i], &basis[j]).expect("same size").coords()
    })
}

/// Matrix of `X` acting by commutators on both factors.
fn adjoint_action(n: usize, x: &Matrix) -> Matrix {
    let basis = GlnGlnAb::basis(n);
    let cols: Vec<Vector> = basis
        .iter()
        .map(|b| {
            let (b0, b1) = b.to_pair();
            GlnGlnAb::from_pair(&x.commutator(&b0), &x.commutator(&b1))
                .expect("same size")
                .coords()
        })
        .collect();
    Matrix::from_cols(basis.len(), &cols)
}

/// The product and the bracket as `GL(n)` algebras, decomposed as
/// `(I)₀ ⊕ sl(n)₀ ⊕ sl(n)_ab ⊕ (I)_ab`.
pub fn gln_algebra(n: u32) -> Result<(GalleryAlgebra, GalleryAlgebra), GalleryError> {
    let nu = n as usize;
    let lab = Labeling::gl(n);
    let gens = slk::chevalley_generators(nu)
        .iter()
        .map(|x| adjoint_action(nu, x))
        .collect();
    let dim = 2 * slk::dim(nu) + 2;
    let module = GModule::new(Group::Gl(n), dim, gens)?;
    let d = slk::dim(nu);
    let block = |offset: usize, width: usize| {
        Matrix::from_fn(
            dim,
            width,
            |i, j| {
                if i == offset + j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            },
        )
    };
    let (triv, adj) = (
        IrrepId::Gl {
            k: n,
            label: GlLabel::Trivial,
        },
        IrrepId::Gl {
            k: n,
            label: GlLabel::Adjoint,
        },
    );
    let summands = [
        ("(I)_0", triv, 0, 1),
        ("sl_0", adj, 1, d),
        ("sl_ab", adj, 1 + d, d),
        ("(I)_ab", triv, 1 + 2 * d, 1),
    ]
    .iter()
    .map(|&(id, irrep, off, w)| Summand {
        id: id.into(),
        irrep,
        tau: block(off, w),
        hwv_weight: None,
    })
    .collect();
    let decomposition = Decomposition::new(module, summands, &lab)?;
    let product = GalleryAlgebra {
        labeling: lab.clone(),
        decomposition: decomposition.clone(),
        product: structure(nu, GlnGlnAb::product),
    };
    let bracket = GalleryAlgebra {
        labeling: lab,
        decomposition,
        product: structure(nu, GlnGlnAb::bracket),
    };
    Ok((product, bracket))
}

/// Extracted product and bracket tables.
pub fn gln_tables(n: u32) -> Result<(GTable, GTable), GalleryError> {
    let (p, b) = gln_algebra(n)?;
    Ok((p.table()?, b.table()?))
}

fn gln_summands(n: u32) -> Vec<SummandInfo> {
    let (triv, adj) = (
        IrrepId::Gl {
            k: n,
            label: GlLabel::Trivial,
        },
        IrrepId::Gl {
            k: n,
            label: GlLabel::Adjoint,
        },
    );
    [("(I)_0", triv), ("sl_0", adj), ("sl_ab", adj), ("(I)_ab", triv)]
        .iter()
        .map(|&(id, irrep)| SummandInfo {
            id: id.into(),
            irrep,
            hwv_weight: None,
        })
        .collect()
}

/// Product table: `sl₀ · sl₀ = sl_ab` through the symmetric map, which is
/// absent for `n = 2`.
pub fn gln_product_fixture(n: u32) -> GTable {
    let plus: &[(usize, usize, i64, i64)] = if n >= 3 { &[(2, 2, 1, 1)] } else { &[] };
    let cells: &[Cell] = &[
        (0, 0, &[(0, 1, 1, 1)]),
        (0, 1, &[(1, 1, 1, 1)]),
        (0, 2, &[(2, 1, 1, 1)]),
        (0, 3, &[(3, 1, 1, 1)]),
        (1, 0, &[(1, 1, 1, 1)]),
        (1, 1, plus),
        (1, 2, &[(3, 1, 1, 1)]),
        (2, 0, &[(2, 1, 1, 1)]),
        (2, 1, &[(3, 1, 1, 1)]),
        (3, 0, &[(3, 1, 1, 1)]),
    ];
    fixture_table(&Labeling::gl(n), gln_summands(n), cells)
}

/// Bracket table: every nonzero cell is the commutator.
pub fn gln_bracket_fixture(n: u32) -> GTable {
    let cells: &[Cell] = &[
        (1, 1, &[(1, 1, 1, 1)]),
        (1, 2, &[(2, 1, 1, 1)]),
        (2, 1, &[(2, 1, 1, 1)]),
    ];
    fixture_table(&Labeling::gl(n), gln_summands(n), cells)
}

/// `gl(3) ⋉ gl(3)_ab` as an `SL(2)` algebra for the upper-left corner,
/// in the same coordinates as [`gln_algebra`]. Each factor splits as
/// `I ⊕ D ⊕ V2 ⊕ V1 ⊕ V1'` with highest weight vectors
/// `I, diag(1,1,−2), E₁₂, E₁₃, E₃₂`.
pub fn gln_sl2_algebra() -> Result<(GalleryAlgebra, GalleryAlgebra), GalleryError> {
    let gens: Vec<Matrix> = corner_sl2(3).iter().map(|x| adjoint_action(3, x)).collect();
    let module = GModule::new(Group::Sl2, 18, gens)?;
    let lab = Labeling::sl2_first();
    let zero = Matrix::zeros(3, 3);
    let mut hwvs: Vec<(String, Vector)> = Vec::new();
    let vectors = [
        ("I", Matrix::identity(3)),
        ("D", d3()),
        ("V2", slk::unit(3, 0, 1)),
        ("V1", slk::unit(3, 0, 2)),
        ("V1'", slk::unit(3, 2, 1)),
    ];
    for (id, m) in &vectors {
        hwvs.push((alloc::format!("{}_0", id), GlnGlnAb::from_pair(m, &zero)?.coords()));
    }
    // the abelian copy lists I last, mirroring the top-degree class
    for (id, m) in vectors[1..].iter().chain(&vectors[..1]) {
        hwvs.push((alloc::format!("{}_ab", id), GlnGlnAb::from_pair(&zero, m)?.coords()));
    }
    let decomposition = decompose_sl2(&module, &lab, Some(&hwvs))?;
    let product = GalleryAlgebra {
        labeling: lab.clone(),
        decomposition: decomposition.clone(),
        product: structure(3, GlnGlnAb::product),
    };
    let bracket = GalleryAlgebra {
        labeling: lab,
        decomposition,
        product: structure(3, GlnGlnAb::bracket),
    };
    Ok((product, bracket))
}
