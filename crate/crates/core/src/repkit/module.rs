use alloc::string::String;
use alloc::vec::Vec;

use crate::exactla::{is_zero_vector, sub, zero_vector, Bilinear, Matrix, Scalar, Vector};

use super::irrep::{ActionKind, Group};
use super::s3;
use super::RepError;

/// A finite-dimensional module, given by the action of the group's
/// generators on a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GModule {
    group: Group,
    dim: usize,
    gens: Vec<Matrix>,
    names: Option<Vec<String>>,
}

impl GModule {
    pub fn new(group: Group, dim: usize, gens: Vec<Matrix>) -> Result<Self, RepError> {
        if gens.len() != group.generator_count() {
            return Err(RepError::InvalidModule("wrong number of generators"));
        }
        if gens.iter().any(|g| g.rows() != dim || g.cols() != dim) {
            return Err(RepError::InvalidModule("generator has wrong shape"));
        }
        Ok(GModule {
            group,
            dim,
            gens,
            names: None,
        })
    }

    pub fn sl2(e: Matrix, h: Matrix, f: Matrix) -> Result<Self, RepError> {
        let dim = e.rows();
        GModule::new(Group::Sl2, dim, alloc::vec![e, h, f])
    }

    /// `K^dim` with every generator acting trivially.
    pub fn trivial(group: Group, dim: usize) -> Self {
        let g = match group.action_kind() {
            ActionKind::Lie => Matrix::zeros(dim, dim),
            ActionKind::Group => Matrix::identity(dim),
        };
        GModule {
            group,
            dim,
            gens: (0..group.generator_count()).map(|_| g.clone()).collect(),
            names: None,
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.names = Some(names);
        self
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn gen(&self, i: usize) -> &Matrix {
        &self.gens[i]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn act(&self, gen: usize, v: &[Scalar]) -> Vector {
        self.gens[gen].mul_vec(v)
    }

    /// The SL(2) operators, when this is an SL(2) module.
    pub fn efh(&self) -> Option<(&Matrix, &Matrix, &Matrix)> {
        (self.group == Group::Sl2).then(|| (&self.gens[0], &self.gens[1], &self.gens[2]))
    }

    /// Checks the defining relations of the generators.
    pub fn validate(&self) -> Result<(), RepError> {
        match self.group {
            Group::One => Ok(()),
            Group::Sl2 => {
                let (e, h, f) = (&self.gens[0], &self.gens[1], &self.gens[2]);
                let two = Scalar::from_int(2);
                let ok = e.commutator(f) == *h && h.commutator(e) == e.scale(&two) && h.commutator(f) == f.scale(&-two);
                ok.then_some(()).ok_or(RepError::InvalidModule("sl(2) relations fail"))
            }
            Group::Gl(k) => {
                let r = k as usize - 1;
                let (es, fs) = self.gens.split_at(r);
                let hs: Vec<Matrix> = (0..r).map(|i| es[i].commutator(&fs[i])).collect();
                for i in 0..r {
                    for j in 0..r {
                        let a = Scalar::from_int(cartan_a(i, j));
                        if i != j && !es[i].commutator(&fs[j]).is_zero() {
                            return Err(RepError::InvalidModule("[e_i, f_j] != 0"));
                        }
                        if hs[i].commutator(&es[j]) != es[j].scale(&a) || hs[i].commutator(&fs[j]) != fs[j].scale(&-a) {
                            return Err(RepError::InvalidModule("Cartan relations fail"));
                        }
                    }
                }
                Ok(())
            }
            Group::S3 => {
                let (s, t) = (&self.gens[0], &self.gens[1]);
                let id = Matrix::identity(self.dim);
                let st = s.mul(t);
                let ok = s.mul(s) == id && t.mul(t).mul(t) == id && st.mul(&st) == id;
                ok.then_some(()).ok_or(RepError::InvalidModule("S3 relations fail"))
            }
        }
    }

    /// Tensor product, with generators acting as derivations or diagonally.
    pub fn tensor(&self, other: &GModule) -> GModule {
        assert_eq!(self.group, other.group);
        let (n, m) = (self.dim, other.dim);
        let kron =
            |a: &Matrix, b: &Matrix| Matrix::from_fn(n * m, n * m, |i, j| &a[(i / m, j / m)] * &b[(i % m, j % m)]);
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| match self.group.action_kind() {
                ActionKind::Lie => kron(a, &Matrix::identity(m)).add(&kron(&Matrix::identity(n), b)),
                ActionKind::Group => kron(a, b),
            })
            .collect();
        GModule {
            group: self.group,
            dim: n * m,
            gens,
            names: None,
        }
    }

    /// Direct sum, with block-diagonal generators.
    pub fn direct_sum(&self, other: &GModule) -> GModule {
        assert_eq!(self.group, other.group);
        let (n, m) = (self.dim, other.dim);
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| {
                Matrix::from_fn(n + m, n + m, |i, j| match (i < n, j < n) {
                    (true, true) => a[(i, j)].clone(),
                    (false, false) => b[(i - n, j - n)].clone(),
                    _ => Scalar::zero(),
                })
            })
            .collect();
        GModule {
            group: self.group,
            dim: n + m,
            gens,
            names: None,
        }
    }

    /// Matrices of all six group elements, in the order of [`s3::ELEMENTS`].
    pub fn s3_elements(&self) -> Option<Vec<Matrix>> {
        (self.group == Group::S3).then(|| s3::element_matrices(&self.gens[0], &self.gens[1]))
    }
}

fn cartan_a(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// Whether `phi: a → b` commutes with every generator.
pub fn is_equivariant_linear(phi: &Matrix, a: &GModule, b: &GModule) -> bool {
    a.group == b.group
        && phi.rows() == b.dim
        && phi.cols() == a.dim
        && a.gens.iter().zip(&b.gens).all(|(ga, gb)| gb.mul(phi) == phi.mul(ga))
}

/// Sparse column view of a generator, for the pairwise checks below.
fn columns(m: &Matrix) -> Vec<Vec<(usize, Scalar)>> {
    (0..m.cols())
        .map(|j| {
            (0..m.rows())
                .filter(|&i| !m[(i, j)].is_zero())
                .map(|i| (i, m[(i, j)].clone()))
                .collect()
        })
        .collect()
}

/// Checks `m: a × b → c` against every generator on every basis pair.
pub fn is_equivariant_bilinear(m: &Bilinear, a: &GModule, b: &GModule, c: &GModule) -> bool {
    first_equivariance_failure(m, a, b, c).is_none()
}

/// The first `(generator, a, b)` where equivariance fails.
pub fn first_equivariance_failure(
    m: &Bilinear,
    a: &GModule,
    b: &GModule,
    c: &GModule,
) -> Option<(usize, usize, usize)> {
    assert!(a.group == b.group && b.group == c.group);
    assert_eq!((m.left(), m.right(), m.out()), (a.dim, b.dim, c.dim));
    for g in 0..a.gens.len() {
        let (ca, cb) = (columns(&a.gens[g]), columns(&b.gens[g]));
        let gc = &c.gens[g];
        for (i, cai) in ca.iter().enumerate() {
            for (j, cbj) in cb.iter().enumerate() {
                let lhs = gc.mul_vec(m.image(i, j));
                let mut rhs = zero_vector(c.dim);
                match a.group.action_kind() {
                    ActionKind::Lie => {
                        for (k, x) in cai {
                            crate::exactla::axpy(&mut rhs, x, m.image(*k, j));
                        }
                        for (k, x) in cbj {
                            crate::exactla::axpy(&mut rhs, x, m.image(i, *k));
                        }
                    }
                    ActionKind::Group => {
                        for (k, x) in cai {
                            for (l, y) in cbj {
                                crate::exactla::axpy(&mut rhs, &(x * y), m.image(*k, *l));
                            }
                        }
                    }
                }
                if !is_zero_vector(&sub(&lhs, &rhs)) {
                    return Some((g, i, j));
                }
            }
        }
    }
    None
}
