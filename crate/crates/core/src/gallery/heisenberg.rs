//! The even cohomology of the three-dimensional Heisenberg algebra.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::exactla::{unit_vector, zero_vector, Bilinear, Matrix, Scalar, Vector};
use crate::gtable::{extract_algebra, GTable, SummandInfo};
use crate::repkit::{decompose_sl2, Decomposition, GModule, IrrepId, Labeling};
use crate::supercochain::{bracket, cohomology, cohomology_with, Cohomology, ComplexContext, Element, Sl2Op};

use super::{compare, fixture_table, Cell, GalleryError};

/// Summand ids `H{weight}^{pq}` in table order.
pub const REPRESENTATIVE_IDS: [&str; 10] = [
    "H0^00", "H0^11", "H2^11", "H1^20", "H1^02", "H0^22", "H2^22", "H1^31", "H1^13", "H0^33",
];

const BIDEGREES: [(usize, usize); 10] = [
    (0, 0),
    (1, 1),
    (1, 1),
    (2, 0),
    (0, 2),
    (2, 2),
    (2, 2),
    (3, 1),
    (1, 3),
    (3, 3),
];

const WEIGHTS: [u32; 10] = [0, 0, 2, 1, 1, 0, 2, 1, 1, 0];

/// Bidegrees of the even part, in the order of the highest weight table.
const EVEN_BIDEGREES: [(usize, usize); 8] = [(0, 0), (2, 0), (1, 1), (3, 1), (0, 2), (2, 2), (1, 3), (3, 3)];

/// `g = (x₁, x₋₁, h₀)` with `[x₁, x₋₁] = h₀`, dual basis `(x⁻¹, x¹, h⁰)`,
/// and `SL(2)` acting on `x₁, x₋₁` as on `K²`.
pub fn heisenberg_context() -> ComplexContext {
    let names = |v: [&str; 3]| v.iter().map(|s| s.to_string()).collect();
    ComplexContext::from_structure_constants(3, |i, j| {
        let mut v = zero_vector(3);
        if (i, j) == (0, 1) {
            v[2] = Scalar::one();
        }
        v
    })
    .expect("Heisenberg bracket satisfies Jacobi")
    .with_names(names(["x₁", "x₋₁", "h₀"]), names(["x⁻¹", "x¹", "h⁰"]))
    .with_sl2(
        Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
        Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]),
        Matrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]),
    )
    .expect("valid sl(2) action")
}

/// The printed highest weight vectors, in the order of [`REPRESENTATIVE_IDS`].
pub fn printed_representatives() -> Vec<Element> {
    let m = |dual: &[usize], primal: &[usize], c: i64| Element::monomial(dual, primal, Scalar::from_int(c));
    let mut h011 = m(&[1], &[1], 1);
    h011.add_scaled(&m(&[0], &[0], 1), &Scalar::one());
    h011.add_scaled(&m(&[2], &[2], 2), &Scalar::one());
    alloc::vec![
        Element::one(),
        h011,
        m(&[1], &[0], 1),
        m(&[1, 2], &[], 1),
        m(&[], &[0, 2], 1),
        m(&[0, 1], &[0, 1], 1),
        m(&[1, 2], &[0, 2], 1),
        m(&[0, 1, 2], &[0], 1),
        m(&[1], &[0, 1, 2], 1),
        m(&[0, 1, 2], &[0, 1, 2], 1),
    ]
}

/// `H_E` with the basis given by the F-orbits of the printed highest
/// weight vectors, summand after summand.
#[derive(Debug, Clone)]
pub struct EvenCohomology {
    ctx: ComplexContext,
    basis: Vec<Element>,
    offsets: Vec<usize>,
    blocks: BTreeMap<(usize, usize), (Cohomology, Vec<usize>)>,
}

impl EvenCohomology {
    pub fn new() -> Result<Self, GalleryError> {
        let ctx = heisenberg_context();
        let mut basis = Vec::new();
        let mut offsets = Vec::new();
        let mut members: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (k, w) in printed_representatives().into_iter().enumerate() {
            offsets.push(basis.len());
            let mut v = w;
            for _ in 0..=WEIGHTS[k] {
                members.entry(BIDEGREES[k]).or_default().push(basis.len());
                let next = ctx.sl2_act(Sl2Op::F, &v)?;
                basis.push(v);
                v = next;
            }
        }
        let mut blocks = BTreeMap::new();
        for (bideg, idx) in members {
            let reps = idx.iter().map(|&i| basis[i].clone()).collect();
            let h = cohomology_with(&ctx, bideg.0, bideg.1, reps)?;
            blocks.insert(bideg, (h, idx));
        }
        Ok(EvenCohomology {
            ctx,
            basis,
            offsets,
            blocks,
        })
    }

    pub fn context(&self) -> &ComplexContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Cocycles representing the basis classes.
    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    /// Coordinates of the class of an even cocycle.
    pub fn coords(&self, z: &Element) -> Result<Vector, GalleryError> {
        let mut out = zero_vector(self.dim());
        for (p, q) in z.bidegrees() {
            let (h, idx) = self
                .blocks
                .get(&(p, q))
                .ok_or(crate::supercochain::CochainError::WrongBidegree)?;
            for (i, c) in idx.iter().zip(h.class_coords(&self.ctx, &z.part(p, q))?) {
                out[*i] = c;
            }
        }
        Ok(out)
    }

    fn operator(&self, op: Sl2Op) -> Result<Matrix, GalleryError> {
        let cols = self
            .basis
            .iter()
            .map(|b| self.coords(&self.ctx.sl2_act(op, b)?))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_cols(self.dim(), &cols))
    }

    /// `H_E` as an `SL(2)` module.
    pub fn module(&self) -> Result<GModule, GalleryError> {
        let [e, h, f] = [Sl2Op::E, Sl2Op::H, Sl2Op::F].map(|op| self.operator(op));
        Ok(GModule::sl2(e?, h?, f?)?.with_names(
            REPRESENTATIVE_IDS
                .iter()
                .zip(WEIGHTS)
                .flat_map(|(id, w)| (0..=w).map(move |j| alloc::format!("{}[{}]", id, j)))
                .collect(),
        ))
    }

    fn induced(&self, op: impl Fn(&Element, &Element) -> Element) -> Result<Bilinear, GalleryError> {
        let n = self.dim();
        let mut images = Vec::with_capacity(n * n);
        for a in &self.basis {
            for b in &self.basis {
                images.push(self.coords(&op(a, b))?);
            }
        }
        Ok(Bilinear::from_fn(n, n, n, |i, j| images[i * n + j].clone()))
    }

    /// The cup product on classes.
    pub fn cup(&self) -> Result<Bilinear, GalleryError> {
        self.induced(|a, b| a.vee(b))
    }

    /// The Poisson bracket on classes.
    pub fn bracket(&self) -> Result<Bilinear, GalleryError> {
        self.induced(bracket)
    }

    /// Summands whose `τ` sends each model highest weight vector to the
    /// printed representative.
    pub fn decomposition(&self) -> Result<Decomposition, GalleryError> {
        let hwvs: Vec<(String, Vector)> = REPRESENTATIVE_IDS
            .iter()
            .zip(&self.offsets)
            .map(|(id, &o)| (String::from(*id), unit_vector(self.dim(), o)))
            .collect();
        Ok(decompose_sl2(&self.module()?, &Labeling::sl2_first(), Some(&hwvs))?)
    }
}

/// How one printed representative fared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentativeCheck {
    pub id: &'static str,
    pub bidegree: (usize, usize),
    pub weight: u32,
    pub cocycle: bool,
    pub non_exact: bool,
    pub annihilated_by_e: bool,
    pub has_weight: bool,
}

impl RepresentativeCheck {
    pub fn passed(&self) -> bool {
        self.cocycle && self.non_exact && self.annihilated_by_e && self.has_weight
    }
}

#[derive(Debug, Clone)]
pub struct HeisenbergReport {
    /// `dim H^{p,q}` for the even bidegrees.
    pub dims: Vec<((usize, usize), usize)>,
    pub total_even: usize,
    pub representatives: Vec<RepresentativeCheck>,
    pub cup: GTable,
    pub bracket: GTable,
}

/// Cohomology dimensions of the even part, computed without reference to
/// the printed representatives.
pub fn even_dimensions(ctx: &ComplexContext) -> Vec<((usize, usize), usize)> {
    EVEN_BIDEGREES
        .iter()
        .map(|&(p, q)| ((p, q), cohomology(ctx, p, q).dim()))
        .collect()
}

pub fn check_representatives(ctx: &ComplexContext) -> Result<Vec<RepresentativeCheck>, GalleryError> {
    let mut out = Vec::new();
    for (k, w) in printed_representatives().iter().enumerate() {
        let (p, q) = BIDEGREES[k];
        let h = cohomology(ctx, p, q);
        let cocycle = w.bidegree() == Some((p, q)) && ctx.differential(w).is_zero();
        let non_exact = !h.boundary().contains(&ctx.to_vector(w, p, q));
        let annihilated_by_e = ctx.sl2_act(Sl2Op::E, w)?.is_zero();
        let hw = ctx.sl2_act(Sl2Op::H, w)?;
        let has_weight = hw == w.scale(&Scalar::from_int(WEIGHTS[k] as i64));
        out.push(RepresentativeCheck {
            id: REPRESENTATIVE_IDS[k],
            bidegree: (p, q),
            weight: WEIGHTS[k],
            cocycle,
            non_exact,
            annihilated_by_e,
            has_weight,
        });
    }
    Ok(out)
}

/// Builds the complex, checks the printed representatives, extracts both
/// tables and compares them with the printed ones.
pub fn heisenberg_pipeline() -> Result<HeisenbergReport, GalleryError> {
    let ctx = heisenberg_context();
    let dims = even_dimensions(&ctx);
    let total_even = dims.iter().map(|(_, d)| d).sum();
    let representatives = check_representatives(&ctx)?;
    if let Some(bad) = representatives.iter().find(|r| !r.passed()) {
        return Err(GalleryError::Representative(bad.id.into()));
    }
    let h = EvenCohomology::new()?;
    let dec = h.decomposition()?;
    let lab = Labeling::sl2_first();
    let cup = extract_algebra(&h.cup()?, &dec, &lab)?;
    compare("cup", &cup, &heisenberg_cup_fixture())?;
    let bracket = extract_algebra(&h.bracket()?, &dec, &lab)?;
    compare("bracket", &bracket, &heisenberg_bracket_fixture())?;
    Ok(HeisenbergReport {
        dims,
        total_even,
        representatives,
        cup,
        bracket,
    })
}

fn summands() -> Vec<SummandInfo> {
    REPRESENTATIVE_IDS
        .iter()
        .zip(WEIGHTS)
        .map(|(id, w)| SummandInfo {
            id: String::from(*id),
            irrep: IrrepId::Sl2(w),
            hwv_weight: Some(w as i64),
        })
        .collect()
}

const H000: usize = 0;
const H011: usize = 1;
const H211: usize = 2;
const H120: usize = 3;
const H102: usize = 4;
const H022: usize = 5;
const H222: usize = 6;
const H131: usize = 7;
const H113: usize = 8;
const H033: usize = 9;

/// The cup product table as printed.
pub fn heisenberg_cup_fixture() -> GTable {
    let mut cells: Vec<Cell> = Vec::new();
    const SELF: [[(usize, usize, i64, i64); 1]; 10] = [
        [(H000, 1, 1, 1)],
        [(H011, 1, 1, 1)],
        [(H211, 1, 1, 1)],
        [(H120, 1, 1, 1)],
        [(H102, 1, 1, 1)],
        [(H022, 1, 1, 1)],
        [(H222, 1, 1, 1)],
        [(H131, 1, 1, 1)],
        [(H113, 1, 1, 1)],
        [(H033, 1, 1, 1)],
    ];
    for (r, s) in SELF.iter().enumerate() {
        cells.push((H000, r, s));
        if r != H000 {
            cells.push((r, H000, s));
        }
    }
    cells.extend_from_slice(&[
        (H011, H011, &[(H022, 1, -6, 1)]),
        (H011, H211, &[(H222, 1, -2, 1)]),
        (H011, H120, &[(H131, 1, 1, 1)]),
        (H011, H102, &[(H113, 1, -1, 1)]),
        (H011, H022, &[(H033, 1, 2, 1)]),
        (H211, H011, &[(H222, 1, -2, 1)]),
        (H211, H211, &[(H022, 1, 1, 1)]),
        (H211, H120, &[(H131, 1, 1, 1)]),
        (H211, H102, &[(H113, 1, 1, 1)]),
        (H211, H222, &[(H033, 1, -1, 1)]),
        (H120, H011, &[(H131, 1, 1, 1)]),
        (H120, H211, &[(H131, 1, 1, 1)]),
        (H120, H102, &[(H022, 1, 1, 2), (H222, 1, -1, 2)]),
        (H120, H113, &[(H033, 1, -1, 1)]),
        (H102, H011, &[(H113, 1, -1, 1)]),
        (H102, H211, &[(H113, 1, 1, 1)]),
        (H102, H120, &[(H022, 1, -1, 2), (H222, 1, -1, 2)]),
        (H102, H131, &[(H033, 1, -1, 1)]),
        (H022, H011, &[(H033, 1, 2, 1)]),
        (H222, H211, &[(H033, 1, -1, 1)]),
        (H131, H102, &[(H033, 1, 1, 1)]),
        (H113, H120, &[(H033, 1, 1, 1)]),
    ]);
    fixture_table(&Labeling::sl2_first(), summands(), &cells)
}

/// The Poisson bracket table as printed.
pub fn heisenberg_bracket_fixture() -> GTable {
    let cells: &[Cell] = &[
        (H011, H120, &[(H120, 1, 3, 1)]),
        (H011, H102, &[(H102, 1, -3, 1)]),
        (H011, H131, &[(H131, 1, 3, 1)]),
        (H011, H113, &[(H113, 1, -3, 1)]),
        (H211, H211, &[(H211, 1, -1, 1)]),
        (H211, H120, &[(H120, 1, -1, 1)]),
        (H211, H102, &[(H102, 1, -1, 1)]),
        (H211, H222, &[(H222, 1, -1, 1)]),
        (H211, H131, &[(H131, 1, -1, 1)]),
        (H211, H113, &[(H113, 1, -1, 1)]),
        (H120, H011, &[(H120, 1, -3, 1)]),
        (H120, H211, &[(H120, 1, 1, 1)]),
        (H120, H102, &[(H211, 1, 1, 2), (H011, 1, -1, 2)]),
        (H120, H022, &[(H131, 1, 1, 1)]),
        (H120, H222, &[(H131, 1, 1, 1)]),
        (H120, H113, &[(H222, 1, -1, 2), (H022, 1, -3, 2)]),
        (H102, H011, &[(H102, 1, 3, 1)]),
        (H102, H211, &[(H102, 1, 1, 1)]),
        (H102, H120, &[(H211, 1, -1, 2), (H011, 1, -1, 2)]),
        (H102, H022, &[(H113, 1, 1, 1)]),
        (H102, H222, &[(H113, 1, -1, 1)]),
        (H102, H131, &[(H222, 1, -1, 2), (H022, 1, 3, 2)]),
        (H022, H120, &[(H131, 1, -1, 1)]),
        (H022, H102, &[(H113, 1, -1, 1)]),
        (H222, H211, &[(H222, 1, -1, 1)]),
        (H222, H120, &[(H131, 1, -1, 1)]),
        (H222, H102, &[(H113, 1, 1, 1)]),
        (H131, H011, &[(H131, 1, -3, 1)]),
        (H131, H211, &[(H131, 1, 1, 1)]),
        (H131, H102, &[(H222, 1, 1, 2), (H022, 1, 3, 2)]),
        (H113, H011, &[(H113, 1, 3, 1)]),
        (H113, H211, &[(H113, 1, 1, 1)]),
        (H113, H120, &[(H222, 1, 1, 2), (H022, 1, -3, 2)]),
    ];
    fixture_table(&Labeling::sl2_first(), summands(), cells)
}
