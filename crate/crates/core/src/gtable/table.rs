use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exactla::{solve, Bilinear, Matrix, Scalar, Vector};
use crate::repkit::{first_equivariance_failure, Decomposition, Group, IrrepId, Labeling};

use super::TableError;

/// What a table remembers about a summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandInfo {
    pub id: String,
    pub irrep: IrrepId,
    pub hwv_weight: Option<i64>,
}

impl SummandInfo {
    pub fn of(dec: &Decomposition) -> Vec<SummandInfo> {
        dec.summands()
            .iter()
            .map(|s| SummandInfo {
                id: s.id.clone(),
                irrep: s.irrep,
                hwv_weight: s.hwv_weight,
            })
            .collect()
    }
}

/// `c · m_q` landing in summand `s`; `q` counts from 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Entry {
    pub s: usize,
    pub q: usize,
    pub c: Scalar,
}

/// Coefficients `c_{r1,r2}^{s,q}` of a product `A × A → B`, with zero
/// entries omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTable {
    group: Group,
    labeling: String,
    summands: Vec<SummandInfo>,
    targets: Option<Vec<SummandInfo>>,
    entries: BTreeMap<(usize, usize), Vec<Entry>>,
}

impl GTable {
    /// Builds a table from raw `(r1, r2, s, q, c)` entries, checking indices
    /// and intertwiner bounds; zero coefficients are dropped and repeated
    /// entries are summed.
    pub fn new(
        lab: &Labeling,
        summands: Vec<SummandInfo>,
        targets: Option<Vec<SummandInfo>>,
        raw: impl IntoIterator<Item = (usize, usize, usize, usize, Scalar)>,
    ) -> Result<Self, TableError> {
        for s in summands.iter().chain(targets.iter().flatten()) {
            if s.irrep.group() != lab.group() {
                return Err(TableError::LabelingMismatch);
            }
            if lab.model(s.irrep).is_none() {
                return Err(TableError::UnknownIrrep(format!("{}", s.irrep)));
            }
        }
        let mut table = GTable {
            group: lab.group(),
            labeling: String::from(lab.name()),
            summands,
            targets,
            entries: BTreeMap::new(),
        };
        let mut acc: BTreeMap<(usize, usize, usize, usize), Scalar> = BTreeMap::new();
        for (r1, r2, s, q, c) in raw {
            let n = table.summands.len();
            if r1 >= n || r2 >= n || s >= table.targets().len() {
                return Err(TableError::InvalidEntry(format!(
                    "index out of range in ({r1}, {r2}, {s})"
                )));
            }
            let d = lab.multiplicity(
                table.summands[r1].irrep,
                table.summands[r2].irrep,
                table.targets()[s].irrep,
            );
            if q == 0 || q > d {
                return Err(TableError::InvalidEntry(format!(
                    "q = {q} outside 1..={d} for ({r1}, {r2}, {s})"
                )));
            }
            *acc.entry((r1, r2, s, q)).or_default() += c;
        }
        for ((r1, r2, s, q), c) in acc {
            if !c.is_zero() {
                table.entries.entry((r1, r2)).or_default().push(Entry { s, q, c });
            }
        }
        Ok(table)
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn labeling(&self) -> &str {
        &self.labeling
    }

    pub fn summands(&self) -> &[SummandInfo] {
        &self.summands
    }

    /// Summands of the target; the source summands unless set separately.
    pub fn targets(&self) -> &[SummandInfo] {
        self.targets.as_deref().unwrap_or(&self.summands)
    }

    pub fn has_separate_targets(&self) -> bool {
        self.targets.is_some()
    }

    /// Nonzero entries of a cell, ordered by `(s, q)`.
    pub fn cell(&self, r1: usize, r2: usize) -> &[Entry] {
        self.entries.get(&(r1, r2)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn coeff(&self, r1: usize, r2: usize, s: usize, q: usize) -> Scalar {
        self.cell(r1, r2)
            .iter()
            .find(|e| e.s == s && e.q == q)
            .map(|e| e.c.clone())
            .unwrap_or_default()
    }

    /// All nonzero entries as `(r1, r2, entry)`, in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Entry)> {
        self.entries
            .iter()
            .flat_map(|(&(r1, r2), v)| v.iter().map(move |e| (r1, r2, e)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The first cell, in row-major order, where the two tables differ.
    pub fn first_difference(&self, other: &GTable) -> Option<(usize, usize)> {
        let n = self.summands.len().max(other.summands.len());
        (0..n)
            .flat_map(|r1| (0..n).map(move |r2| (r1, r2)))
            .find(|&(r1, r2)| self.cell(r1, r2) != other.cell(r1, r2))
    }
}

/// Flattens the `(a, b)` images restricted to output rows `rows`.
fn flatten_block(m: &Bilinear, a: (usize, usize), b: (usize, usize), rows: (usize, usize)) -> Vector {
    let mut v = Vec::with_capacity(a.1 * b.1 * rows.1);
    for i in a.0..a.0 + a.1 {
        for j in b.0..b.0 + b.1 {
            v.extend_from_slice(&m.image(i, j)[rows.0..rows.0 + rows.1]);
        }
    }
    v
}

/// Table of `product: A × A → B` relative to decompositions of `A` and `B`.
///
/// The product is first rewritten in summand coordinates; each block
/// `(r1, r2, s)` is then solved exactly against the labeled intertwiners.
pub fn extract(
    product: &Bilinear,
    source: &Decomposition,
    target: &Decomposition,
    lab: &Labeling,
) -> Result<GTable, TableError> {
    let (a, b) = (source.module(), target.module());
    if (product.left(), product.right(), product.out()) != (a.dim(), a.dim(), b.dim()) {
        return Err(TableError::DimensionMismatch);
    }
    if a.group() != lab.group() || b.group() != lab.group() {
        return Err(TableError::LabelingMismatch);
    }
    if let Some((gen, i, j)) = first_equivariance_failure(product, a, a, b) {
        return Err(TableError::NotEquivariant { gen, i, j });
    }
    let local = product.transform(source.basis(), source.basis(), target.inverse());
    let (src, tgt) = (source.summands(), target.summands());
    let mut raw = Vec::new();
    for (r1, s1) in src.iter().enumerate() {
        for (r2, s2) in src.iter().enumerate() {
            let (d1, d2) = (s1.tau.cols(), s2.tau.cols());
            let (o1, o2) = (source.offsets()[r1], source.offsets()[r2]);
            for (s, st) in tgt.iter().enumerate() {
                let ds = st.tau.cols();
                let block = flatten_block(&local, (o1, d1), (o2, d2), (target.offsets()[s], ds));
                let maps = lab.maps(s1.irrep, s2.irrep, st.irrep);
                let unreachable = || TableError::InconsistentSystem {
                    r1: s1.id.clone(),
                    r2: s2.id.clone(),
                    s: st.id.clone(),
                };
                if maps.is_empty() {
                    if block.iter().any(|x| !x.is_zero()) {
                        return Err(unreachable());
                    }
                    continue;
                }
                let cols: Vec<Vector> = maps
                    .iter()
                    .map(|m| flatten_block(m, (0, d1), (0, d2), (0, ds)))
                    .collect();
                let system = Matrix::from_cols(block.len(), &cols);
                if system.rank() < maps.len() {
                    return Err(TableError::AmbiguousSystem(format!(
                        "({}, {}, {})",
                        s1.irrep, s2.irrep, st.irrep
                    )));
                }
                let sol = solve(&system, &block).ok_or_else(unreachable)?;
                for (k, c) in sol.particular.into_iter().enumerate() {
                    raw.push((r1, r2, s, k + 1, c));
                }
            }
        }
    }
    let targets = (source != target).then(|| SummandInfo::of(target));
    GTable::new(lab, SummandInfo::of(source), targets, raw)
}

/// [`extract`] for a product `A × A → A`.
pub fn extract_algebra(product: &Bilinear, dec: &Decomposition, lab: &Labeling) -> Result<GTable, TableError> {
    extract(product, dec, dec, lab)
}

/// Structure constants in summand coordinates: the model bases of the
/// summands, concatenated in order.
pub fn expand(table: &GTable, lab: &Labeling) -> Result<Bilinear, TableError> {
    if table.labeling() != lab.name() {
        return Err(TableError::LabelingMismatch);
    }
    let dims = |v: &[SummandInfo]| -> Result<Vec<usize>, TableError> {
        v.iter()
            .map(|s| {
                lab.model(s.irrep)
                    .map(|m| m.dim())
                    .ok_or_else(|| TableError::UnknownIrrep(format!("{}", s.irrep)))
            })
            .collect()
    };
    let offsets = |d: &[usize]| -> Vec<usize> {
        d.iter()
            .scan(0, |acc, &x| {
                let o = *acc;
                *acc += x;
                Some(o)
            })
            .collect()
    };
    let (sd, td) = (dims(table.summands())?, dims(table.targets())?);
    let (so, to) = (offsets(&sd), offsets(&td));
    let (n, m) = (sd.iter().sum(), td.iter().sum());
    let mut out = Bilinear::zero(n, n, m);
    for (r1, r2, e) in table.entries() {
        let map = &lab.maps(
            table.summands()[r1].irrep,
            table.summands()[r2].irrep,
            table.targets()[e.s].irrep,
        )[e.q - 1];
        for i in 0..sd[r1] {
            for j in 0..sd[r2] {
                let img = out.image_mut(so[r1] + i, so[r2] + j);
                for (k, x) in map.image(i, j).iter().enumerate() {
                    img[to[e.s] + k] += &e.c * x;
                }
            }
        }
    }
    Ok(out)
}

/// Structure constants on the module bases of the decompositions.
pub fn expand_in_module(
    table: &GTable,
    lab: &Labeling,
    source: &Decomposition,
    target: &Decomposition,
) -> Result<Bilinear, TableError> {
    if SummandInfo::of(source) != table.summands() || SummandInfo::of(target) != table.targets() {
        return Err(TableError::LabelingMismatch);
    }
    Ok(expand(table, lab)?.transform(source.inverse(), source.inverse(), target.basis()))
}

/// Table of the dual product `(φ·ψ)(a) = (φ ⊗ ψ)(Δa)` on `A*`, with `A*`
/// identified with `K^n` through the dual basis.
///
/// `delta` is `n² × n`: column `k` holds `Δ(e_k)` on the lexicographic
/// basis of `A ⊗ A`.
pub fn cotable(delta: &Matrix, dual: &Decomposition, lab: &Labeling) -> Result<GTable, TableError> {
    let n = dual.module().dim();
    if delta.rows() != n * n || delta.cols() != n {
        return Err(TableError::DimensionMismatch);
    }
    let product = Bilinear::from_fn(n, n, n, |i, j| delta.row(i * n + j).to_vec());
    extract(&product, dual, dual, lab)
}
