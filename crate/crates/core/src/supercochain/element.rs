use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::exactla::Scalar;

/// Largest supported `dim g`.
pub const MAX_DIM: usize = 16;

/// A generator of the super-commutative algebra: `Dual(i)` is the `i`-th
/// basis covector, `Primal(j)` the `j`-th basis vector. Both are odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    Dual(usize),
    Primal(usize),
}

impl Gen {
    fn bit(self) -> u32 {
        match self {
            Gen::Dual(i) => i as u32,
            Gen::Primal(j) => (MAX_DIM + j) as u32,
        }
    }

    fn from_bit(b: u32) -> Gen {
        let b = b as usize;
        if b < MAX_DIM {
            Gen::Dual(b)
        } else {
            Gen::Primal(b - MAX_DIM)
        }
    }
}

/// A canonical monomial `φ_I ⊗ v_J`: covector factors first, each part in
/// increasing index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(u32);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn new(dual: &[usize], primal: &[usize]) -> Option<(Mono, bool)> {
        let gens: Vec<Gen> = dual
            .iter()
            .map(|&i| Gen::Dual(i))
            .chain(primal.iter().map(|&j| Gen::Primal(j)))
            .collect();
        Mono::from_gens(&gens)
    }

    /// Product of generators in the given order, as a canonical monomial and
    /// a flag telling whether sorting introduced a minus sign. `None` when a
    /// generator repeats.
    pub fn from_gens(gens: &[Gen]) -> Option<(Mono, bool)> {
        let bits: Vec<u32> = gens.iter().map(|g| g.bit()).collect();
        let mut mask = 0u32;
        let mut inversions = 0usize;
        for (i, &b) in bits.iter().enumerate() {
            if mask & (1 << b) != 0 {
                return None;
            }
            mask |= 1 << b;
            inversions += bits[..i].iter().filter(|&&a| a > b).count();
        }
        Some((Mono(mask), inversions % 2 == 1))
    }

    pub fn dual_mask(self) -> u32 {
        self.0 & ((1 << MAX_DIM) - 1)
    }

    pub fn primal_mask(self) -> u32 {
        self.0 >> MAX_DIM
    }

    pub fn from_masks(dual: u32, primal: u32) -> Mono {
        Mono(dual | (primal << MAX_DIM))
    }

    pub fn p(self) -> usize {
        self.dual_mask().count_ones() as usize
    }

    pub fn q(self) -> usize {
        self.primal_mask().count_ones() as usize
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn dual_indices(self) -> Vec<usize> {
        bits(self.dual_mask())
    }

    pub fn primal_indices(self) -> Vec<usize> {
        bits(self.primal_mask())
    }

    /// Factors in canonical order.
    pub fn gens(self) -> Vec<Gen> {
        bits(self.0).into_iter().map(|b| Gen::from_bit(b as u32)).collect()
    }

    /// `self ∨ other` as a monomial and sign, `None` if they share a factor.
    pub fn times(self, other: Mono) -> Option<(Mono, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // each factor of `other` passes the factors of `self` above it
        let mut swaps = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let b = rest.trailing_zeros();
            swaps += (self.0 >> b).count_ones();
            rest &= rest - 1;
        }
        Some((Mono(self.0 | other.0), swaps % 2 == 1))
    }
}

fn bits(mut m: u32) -> Vec<usize> {
    let mut v = Vec::new();
    while m != 0 {
        v.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    v
}

/// A finite linear combination of canonical monomials, zero terms pruned.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Mono, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::from_mono(Mono::ONE, Scalar::one())
    }

    pub fn from_mono(m: Mono, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    /// `c · ξ_{dual[0]} ∧ … ⊗ e_{primal[0]} ∧ …`, sorted into canonical form.
    pub fn monomial(dual: &[usize], primal: &[usize], c: Scalar) -> Self {
        match Mono::new(dual, primal) {
            Some((m, neg)) => Element::from_mono(m, if neg { -c } else { c }),
            None => Element::zero(),
        }
    }

    /// Product of generators in the given order.
    pub fn product_of(gens: &[Gen]) -> Self {
        match Mono::from_gens(gens) {
            Some((m, neg)) => Element::from_mono(m, if neg { -Scalar::one() } else { Scalar::one() }),
            None => Element::zero(),
        }
    }

    pub fn generator(g: Gen) -> Self {
        Element::product_of(&[g])
    }

    pub fn add_term(&mut self, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Mono) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        for (m, x) in &other.terms {
            self.add_term(*m, x * c);
        }
    }

    /// Bidegrees with nonzero components.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.terms.keys().map(|m| (m.p(), m.q())).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The `(p, q)` component.
    pub fn part(&self, p: usize, q: usize) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.p() == p && m.q() == q)
                .map(|(m, x)| (*m, x.clone()))
                .collect(),
        }
    }

    /// `Some((p, q))` when the element is nonzero and homogeneous.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let b = self.bidegrees();
        (b.len() == 1).then(|| b[0])
    }

    /// Total parity `p + q` of a homogeneous element.
    pub fn parity(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.degree() % 2);
        let first = it.next()?;
        it.all(|x| x == first).then_some(first)
    }

    /// The super-commutative product
    /// `(φ ⊗ v) ∨ (ψ ⊗ w) = (−1)^{p₂q₁} φ∧ψ ⊗ v∧w`.
    pub fn vee(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((m, neg)) = a.times(*b) {
                    let c = x * y;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Scalar::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_sign_in_the_product() {
        // (ξ1 ⊗ e0) ∨ (ξ0 ⊗ e1) = −ξ1ξ0 ⊗ e0e1 = +ξ0ξ1 ⊗ e0e1
        let a = Element::monomial(&[1], &[0], Scalar::one());
        let b = Element::monomial(&[0], &[1], Scalar::one());
        let before_sorting = Element::monomial(&[1, 0], &[0, 1], Scalar::from_int(-1));
        assert_eq!(a.vee(&b), before_sorting);
        assert_eq!(a.vee(&b), Element::monomial(&[0, 1], &[0, 1], Scalar::one()));
    }

    #[test]
    fn unit_and_repeated_factors() {
        let c = Element::monomial(&[0, 2], &[1], Scalar::new(3, 2));
        assert_eq!(Element::one().vee(&c), c);
        assert!(c.vee(&c).is_zero());
        assert!(Element::monomial(&[1, 1], &[], Scalar::one()).is_zero());
    }
}
