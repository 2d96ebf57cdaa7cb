use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::exactla::{unit_vector, vec_from_i64, Bilinear, Matrix, Scalar, Vector};

use super::irrep::{GlLabel, Group, IrrepId, S3Label};
use super::module::GModule;
use super::{s3, slk};

/// A model irreducible: the module on its fixed basis, plus the chosen
/// highest weight vector for SL(2) models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub id: IrrepId,
    pub module: GModule,
    pub hwv: Option<Vector>,
}

impl Model {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

pub type Triple = (IrrepId, IrrepId, IrrepId);

/// A labeling of (part of) the representation category: model irreducibles
/// and an ordered basis of intertwiners for each triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    name: String,
    group: Group,
    models: BTreeMap<IrrepId, Model>,
    maps: BTreeMap<Triple, Vec<Bilinear>>,
}

/// Evaluates `f` on basis vectors to build a bilinear map.
fn bilinear(l: usize, r: usize, o: usize, f: impl Fn(&Vector, &Vector) -> Vector) -> Bilinear {
    Bilinear::from_fn(l, r, o, |a, b| f(&unit_vector(l, a), &unit_vector(r, b)))
}

impl Labeling {
    fn empty(name: String, group: Group) -> Self {
        Labeling {
            name,
            group,
            models: BTreeMap::new(),
            maps: BTreeMap::new(),
        }
    }

    fn add_model(&mut self, id: IrrepId, module: GModule, hwv: Option<Vector>) {
        self.models.insert(id, Model { id, module, hwv });
    }

    fn add_map(&mut self, t: Triple, m: Bilinear) {
        self.maps.entry(t).or_default().push(m);
    }

    /// Scalar multiplication `V_0 × V_i → V_i` and `V_i × V_0 → V_i`.
    fn add_unit_maps(&mut self) {
        let triv = IrrepId::trivial(self.group);
        let ids: Vec<IrrepId> = self.models.keys().copied().collect();
        for i in ids {
            let d = self.models[&i].dim();
            self.add_map((triv, i, i), Bilinear::from_fn(1, d, d, |_, b| unit_vector(d, b)));
            if i != triv {
                self.add_map((i, triv, i), Bilinear::from_fn(d, 1, d, |a, _| unit_vector(d, a)));
            }
        }
    }

    /// The labeling for the trivial group: one model `K`, one product.
    pub fn trivial() -> Self {
        let mut l = Labeling::empty(String::from("trivial"), Group::One);
        l.add_model(IrrepId::One, GModule::trivial(Group::One, 1), None);
        l.add_unit_maps();
        l
    }

    /// SL(2) with models `K`, `K^2` and `sl(2)` (basis `E, H, F`).
    pub fn sl2_first() -> Self {
        let mut l = Labeling::empty(String::from("sl2-first"), Group::Sl2);
        l.add_model(
            IrrepId::Sl2(0),
            GModule::trivial(Group::Sl2, 1),
            Some(vec_from_i64(&[1])),
        );
        let (e, h, f) = sl2_matrices();
        l.add_model(
            IrrepId::Sl2(1),
            GModule::sl2(e.clone(), h.clone(), f.clone()).unwrap(),
            Some(vec_from_i64(&[1, 0])),
        );
        let ad = |x: &Matrix| {
            let cols: Vec<Vector> = (0..3)
                .map(|i| v2_coords(&x.commutator(&v2_matrix(&unit_vector(3, i)))))
                .collect();
            Matrix::from_cols(3, &cols)
        };
        l.add_model(
            IrrepId::Sl2(2),
            GModule::sl2(ad(&e), ad(&h), ad(&f)).unwrap(),
            Some(vec_from_i64(&[1, 0, 0])),
        );
        l.add_unit_maps();

        let (v0, v1, v2) = (IrrepId::Sl2(0), IrrepId::Sl2(1), IrrepId::Sl2(2));
        l.add_map(
            (v1, v1, v0),
            bilinear(2, 2, 1, |x, y| vec![&x[0] * &y[1] - &x[1] * &y[0]]),
        );
        l.add_map(
            (v1, v1, v2),
            bilinear(2, 2, 3, |x, y| {
                let s = &x[0] * &y[1] + &x[1] * &y[0];
                let two = Scalar::from_int(2);
                let m = Matrix::from_rows(vec![
                    vec![s.clone(), -(&two * &x[0] * &y[0])],
                    vec![&two * &x[1] * &y[1], -s],
                ]);
                v2_coords(&m)
            }),
        );
        l.add_map((v2, v1, v1), bilinear(3, 2, 2, |a, x| v2_matrix(a).mul_vec(x)));
        l.add_map((v1, v2, v1), bilinear(2, 3, 2, |x, a| v2_matrix(a).mul_vec(x)));
        l.add_map(
            (v2, v2, v0),
            bilinear(3, 3, 1, |a, b| vec![v2_matrix(a).mul(&v2_matrix(b)).trace()]),
        );
        l.add_map(
            (v2, v2, v2),
            bilinear(3, 3, 3, |a, b| v2_coords(&v2_matrix(a).commutator(&v2_matrix(b)))),
        );
        l
    }

    /// SL(2) with models the homogeneous components `K[x,y]_r`, `r ≤ max_degree`,
    /// basis `x^r, x^{r-1}y, …, y^r`, and polynomial multiplication as the
    /// only intertwiners.
    pub fn sl2_poly(max_degree: u32) -> Self {
        let mut l = Labeling::empty(format!("sl2-poly:{}", max_degree), Group::Sl2);
        for r in 0..=max_degree {
            let (e, h, f) = poly_operators(r as usize);
            l.add_model(
                IrrepId::Sl2(r),
                GModule::sl2(e, h, f).unwrap(),
                Some(unit_vector(r as usize + 1, 0)),
            );
        }
        for a in 0..=max_degree {
            for b in 0..=max_degree - a {
                let (da, db, dc) = (a as usize + 1, b as usize + 1, (a + b) as usize + 1);
                l.add_map(
                    (IrrepId::Sl2(a), IrrepId::Sl2(b), IrrepId::Sl2(a + b)),
                    Bilinear::from_fn(da, db, dc, |i, j| unit_vector(dc, i + j)),
                );
            }
        }
        l
    }

    /// GL(k) with the trivial line and the adjoint action on `sl(k)`.
    ///
    /// For `k = 2` the symmetric product `AB + BA − tr(AB) I` vanishes, so
    /// `(Ad, Ad, Ad)` carries only the commutator.
    pub fn gl(k: u32) -> Self {
        assert!(k >= 2, "GL(k) needs k >= 2");
        let ku = k as usize;
        let group = Group::Gl(k);
        let mut l = Labeling::empty(format!("gl-{}", k), group);
        let triv = IrrepId::Gl {
            k,
            label: GlLabel::Trivial,
        };
        let adj = IrrepId::Gl {
            k,
            label: GlLabel::Adjoint,
        };
        l.add_model(triv, GModule::trivial(group, 1), None);
        let gens = slk::chevalley_generators(ku).iter().map(slk::ad).collect();
        l.add_model(adj, GModule::new(group, slk::dim(ku), gens).unwrap(), None);
        l.add_unit_maps();

        let d = slk::dim(ku);
        let mat = |c: &Vector| slk::from_coords(ku, c);
        l.add_map(
            (adj, adj, triv),
            bilinear(d, d, 1, |a, b| vec![mat(a).mul(&mat(b)).trace()]),
        );
        l.add_map(
            (adj, adj, adj),
            bilinear(d, d, d, |a, b| slk::coords(&mat(a).commutator(&mat(b)))),
        );
        if k >= 3 {
            let c = Scalar::new(2, k as i64);
            l.add_map(
                (adj, adj, adj),
                bilinear(d, d, d, |a, b| {
                    let (x, y) = (mat(a), mat(b));
                    let ab = x.mul(&y);
                    let sym = ab.add(&y.mul(&x));
                    let t = Matrix::identity(ku).scale(&(&c * ab.trace()));
                    slk::coords(&sym.sub(&t))
                }),
            );
        }
        l
    }

    /// S3 with the trivial, sign and standard representations.
    pub fn s3() -> Self {
        let mut l = Labeling::empty(String::from("s3"), Group::S3);
        let (tr, sg, std) = (
            IrrepId::S3(S3Label::Tr),
            IrrepId::S3(S3Label::Sg),
            IrrepId::S3(S3Label::Std),
        );
        l.add_model(tr, GModule::trivial(Group::S3, 1), None);
        let one = Matrix::identity(1);
        l.add_model(
            sg,
            GModule::new(Group::S3, 1, vec![one.scale(&Scalar::from_int(-1)), one]).unwrap(),
            None,
        );
        l.add_model(
            std,
            GModule::new(Group::S3, 2, vec![s3::std_matrix(1), s3::std_matrix(4)]).unwrap(),
            None,
        );
        l.add_unit_maps();

        l.add_map((sg, sg, tr), bilinear(1, 1, 1, |x, y| vec![&x[0] * &y[0]]));
        let sg_std = Matrix::from_i64(&[&[1, 2], &[-2, -1]]);
        l.add_map((sg, std, std), Bilinear::from_matrix(1, 2, &sg_std));
        l.add_map((std, sg, std), Bilinear::from_matrix(2, 1, &sg_std));
        l.add_map(
            (std, std, tr),
            Bilinear::from_matrix(2, 2, &Matrix::from_i64(&[&[2, 1, 1, 2]])),
        );
        l.add_map(
            (std, std, sg),
            Bilinear::from_matrix(2, 2, &Matrix::from_i64(&[&[0, 1, -1, 0]])),
        );
        l.add_map(
            (std, std, std),
            Bilinear::from_matrix(2, 2, &Matrix::from_i64(&[&[-1, 1, 1, 2], &[2, 1, 1, -1]])),
        );
        l
    }

    /// Looks a built-in labeling up by its name.
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "trivial" => Some(Labeling::trivial()),
            "sl2-first" => Some(Labeling::sl2_first()),
            "s3" => Some(Labeling::s3()),
            _ => {
                if let Some(d) = name.strip_prefix("sl2-poly:") {
                    return d.parse().ok().map(Labeling::sl2_poly);
                }
                let k: u32 = name.strip_prefix("gl-")?.parse().ok()?;
                (k >= 2).then(|| Labeling::gl(k))
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn model(&self, id: IrrepId) -> Option<&Model> {
        self.models.get(&id)
    }

    pub fn models(&self) -> impl Iterator<Item = &Model> {
        self.models.values()
    }

    /// The intertwiner basis for a triple; empty when the triple is unlabeled.
    pub fn maps(&self, i1: IrrepId, i2: IrrepId, j: IrrepId) -> &[Bilinear] {
        self.maps.get(&(i1, i2, j)).map_or(&[], Vec::as_slice)
    }

    pub fn multiplicity(&self, i1: IrrepId, i2: IrrepId, j: IrrepId) -> usize {
        self.maps(i1, i2, j).len()
    }

    pub fn triples(&self) -> impl Iterator<Item = (&Triple, &Vec<Bilinear>)> {
        self.maps.iter()
    }
}

/// `E, H, F` on `K^2`.
pub fn sl2_matrices() -> (Matrix, Matrix, Matrix) {
    (
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, -1]]),
        Matrix::from_i64(&[&[0, 0], &[1, 0]]),
    )
}

/// `aE + bH + cF` for coordinates `(a, b, c)`.
pub fn v2_matrix(c: &[Scalar]) -> Matrix {
    Matrix::from_rows(vec![vec![c[1].clone(), c[0].clone()], vec![c[2].clone(), -&c[1]]])
}

pub fn v2_coords(m: &Matrix) -> Vector {
    assert!(m.trace().is_zero());
    vec![m[(0, 1)].clone(), m[(0, 0)].clone(), m[(1, 0)].clone()]
}

/// `E = x∂_y`, `H = x∂_x − y∂_y`, `F = y∂_x` on `K[x,y]_r`.
pub fn poly_operators(r: usize) -> (Matrix, Matrix, Matrix) {
    let n = r + 1;
    let mut e = Matrix::zeros(n, n);
    let mut h = Matrix::zeros(n, n);
    let mut f = Matrix::zeros(n, n);
    for i in 0..n {
        h[(i, i)] = Scalar::from_int(r as i64 - 2 * i as i64);
        if i > 0 {
            e[(i - 1, i)] = Scalar::from_int(i as i64);
        }
        if i < r {
            f[(i + 1, i)] = Scalar::from_int((r - i) as i64);
        }
    }
    (e, h, f)
}
