use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exactla::{zero_vector, Matrix, Scalar, Vector};

use super::bracket::bracket;
use super::element::{Element, Gen, Mono, MAX_DIM};
use super::CochainError;

/// One of the standard `sl(2)` operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sl2Op {
    E,
    H,
    F,
}

impl Sl2Op {
    pub const ALL: [Sl2Op; 3] = [Sl2Op::E, Sl2Op::H, Sl2Op::F];

    fn index(self) -> usize {
        match self {
            Sl2Op::E => 0,
            Sl2Op::H => 1,
            Sl2Op::F => 2,
        }
    }
}

/// A Lie algebra `g` encoded by `μ ∈ C^{2,1}`, with optional `sl(2)` action
/// on `g` by derivations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexContext {
    n: usize,
    g_names: Vec<String>,
    dual_names: Vec<String>,
    mu: Element,
    sl2: Option<[Matrix; 3]>,
}

impl ComplexContext {
    /// `μ` must be of bidegree `(2, 1)` and satisfy `{μ, μ} = 0`.
    pub fn new(n: usize, mu: Element) -> Result<Self, CochainError> {
        if n > MAX_DIM {
            return Err(CochainError::DimensionTooLarge(n));
        }
        if mu.terms().any(|(m, _)| m.p() != 2 || m.q() != 1) {
            return Err(CochainError::NotALieBracket);
        }
        if !bracket(&mu, &mu).is_zero() {
            return Err(CochainError::NotALieBracket);
        }
        Ok(ComplexContext {
            n,
            g_names: (0..n).map(|i| format!("e{}", i)).collect(),
            dual_names: (0..n).map(|i| format!("ξ{}", i)).collect(),
            mu,
            sl2: None,
        })
    }

    /// `μ = Σ_{i<j} ξ_i ∧ ξ_j ⊗ [e_i, e_j]`, where `bracket(i, j)` gives the
    /// coordinates of `[e_i, e_j]`.
    pub fn from_structure_constants(
        n: usize,
        lie_bracket: impl Fn(usize, usize) -> Vector,
    ) -> Result<Self, CochainError> {
        let mut mu = Element::zero();
        for i in 0..n {
            for j in i + 1..n {
                for (k, c) in lie_bracket(i, j).iter().enumerate() {
                    mu.add_scaled(&Element::monomial(&[i, j], &[k], Scalar::one()), c);
                }
            }
        }
        ComplexContext::new(n, mu)
    }

    pub fn with_names(mut self, g_names: Vec<String>, dual_names: Vec<String>) -> Self {
        assert_eq!(g_names.len(), self.n);
        assert_eq!(dual_names.len(), self.n);
        self.g_names = g_names;
        self.dual_names = dual_names;
        self
    }

    /// Attaches `E, H, F` acting on `g` (as `n × n` matrices on the basis).
    pub fn with_sl2(mut self, e: Matrix, h: Matrix, f: Matrix) -> Result<Self, CochainError> {
        let two = Scalar::from_int(2);
        if [&e, &h, &f].iter().any(|m| m.rows() != self.n || m.cols() != self.n)
            || e.commutator(&f) != h
            || h.commutator(&e) != e.scale(&two)
            || h.commutator(&f) != f.scale(&-two)
        {
            return Err(CochainError::InvalidSl2Action);
        }
        self.sl2 = Some([e, h, f]);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &Element {
        &self.mu
    }

    pub fn g_names(&self) -> &[String] {
        &self.g_names
    }

    pub fn dual_names(&self) -> &[String] {
        &self.dual_names
    }

    pub fn has_sl2(&self) -> bool {
        self.sl2.is_some()
    }

    /// `d = {μ, −}`, of bidegree `(1, 0)`.
    pub fn differential(&self, c: &Element) -> Element {
        bracket(&self.mu, c)
    }

    fn act_gen(&self, x: &Matrix, g: Gen) -> Vec<(Gen, Scalar)> {
        match g {
            Gen::Primal(j) => (0..self.n)
                .filter(|&i| !x[(i, j)].is_zero())
                .map(|i| (Gen::Primal(i), x[(i, j)].clone()))
                .collect(),
            // (X·ξ_i)(e_k) = −ξ_i(X e_k)
            Gen::Dual(i) => (0..self.n)
                .filter(|&k| !x[(i, k)].is_zero())
                .map(|k| (Gen::Dual(k), -&x[(i, k)]))
                .collect(),
        }
    }

    /// The `sl(2)` action, extended to monomials as an even derivation.
    pub fn sl2_act(&self, op: Sl2Op, c: &Element) -> Result<Element, CochainError> {
        let x = &self.sl2.as_ref().ok_or(CochainError::NoSl2Action)?[op.index()];
        let mut out = Element::zero();
        for (m, coeff) in c.terms() {
            let gens = m.gens();
            for (t, &g) in gens.iter().enumerate() {
                for (h, a) in self.act_gen(x, g) {
                    let mut replaced = gens.clone();
                    replaced[t] = h;
                    out.add_scaled(&Element::product_of(&replaced), &(coeff * &a));
                }
            }
        }
        Ok(out)
    }

    /// Canonical monomials spanning `C^{p,q}`, in increasing order.
    pub fn basis(&self, p: usize, q: usize) -> Vec<Mono> {
        let subsets = |k: usize| -> Vec<u32> { (0u32..1 << self.n).filter(|m| m.count_ones() as usize == k).collect() };
        let mut v: Vec<Mono> = subsets(p)
            .iter()
            .flat_map(|&i| subsets(q).into_iter().map(move |j| Mono::from_masks(i, j)))
            .collect();
        v.sort_unstable();
        v
    }

    /// Coordinates of the `(p, q)` component of `c` on [`Self::basis`].
    pub fn to_vector(&self, c: &Element, p: usize, q: usize) -> Vector {
        let basis = self.basis(p, q);
        let mut v = zero_vector(basis.len());
        for (m, x) in c.terms() {
            if let Ok(k) = basis.binary_search(m) {
                v[k] = x.clone();
            }
        }
        v
    }

    pub fn from_vector(&self, v: &[Scalar], p: usize, q: usize) -> Element {
        let mut e = Element::zero();
        for (m, x) in self.basis(p, q).into_iter().zip(v) {
            e.add_term(m, x.clone());
        }
        e
    }

    /// Matrix of `d: C^{p,q} → C^{p+1,q}`.
    pub fn d_matrix(&self, p: usize, q: usize) -> Matrix {
        let src = self.basis(p, q);
        let cols: Vec<Vector> = src
            .iter()
            .map(|&m| {
                let dm = self.differential(&Element::from_mono(m, Scalar::one()));
                self.to_vector(&dm, p + 1, q)
            })
            .collect();
        Matrix::from_cols(self.basis(p + 1, q).len(), &cols)
    }

    /// Renders monomials as juxtaposed factors around `⊗`, e.g. `ξ0ξ1⊗e2`.
    pub fn render(&self, c: &Element) -> String {
        if c.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, (m, x)) in c.terms().enumerate() {
            let neg = x.is_negative();
            let abs = x.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                s.push_str(&format!("{}·", abs));
            }
            let side = |idx: Vec<usize>, names: &[String]| -> String {
                if idx.is_empty() {
                    String::from("1")
                } else {
                    idx.iter().map(|&i| names[i].as_str()).collect()
                }
            };
            s.push_str(&side(m.dual_indices(), &self.dual_names));
            s.push('⊗');
            s.push_str(&side(m.primal_indices(), &self.g_names));
        }
        s
    }
}
