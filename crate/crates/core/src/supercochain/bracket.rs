//! The big bracket, built from its values on generators by the Poisson
//! identity.

use crate::exactla::Scalar;

use super::element::{Element, Gen, Mono};

/// `{g, h}` on generators: 1 on a covector paired with its dual vector.
fn pairing(g: Gen, h: Gen) -> bool {
    matches!((g, h), (Gen::Dual(i), Gen::Primal(j)) | (Gen::Primal(j), Gen::Dual(i)) if i == j)
}

/// `{g, c_1 ∨ … ∨ c_m} = Σ_k (−1)^k {g, c_k} c_1 … ĉ_k … c_m`; at most one
/// factor pairs with `g`.
fn bracket_gen_mono(g: Gen, m: Mono) -> Option<(Mono, bool)> {
    let gens = m.gens();
    let k = gens.iter().position(|&h| pairing(g, h))?;
    let mut rest = gens;
    rest.remove(k);
    let (mono, neg) = Mono::from_gens(&rest).expect("factors are distinct");
    Some((mono, neg ^ (k % 2 == 1)))
}

/// `{g, c}` for a single generator `g`.
pub fn bracket_gen(g: Gen, c: &Element) -> Element {
    let mut out = Element::zero();
    for (m, x) in c.terms() {
        if let Some((mono, neg)) = bracket_gen_mono(g, *m) {
            out.add_term(mono, if neg { -x } else { x.clone() });
        }
    }
    out
}

/// `{f_1 ∨ f_2 ∨ … ∨ f_k, c}`, peeling `f_1` off the left:
/// `{g ∨ r, c} = g ∨ {r, c} + (−1)^{|r|} r ∨ {g, c}`.
///
/// Any ordering of the factors is accepted; the left argument is their
/// product in the order given.
pub fn bracket_factored(factors: &[Gen], c: &Element) -> Element {
    match factors {
        [] => Element::zero(),
        [g] => bracket_gen(*g, c),
        [g, rest @ ..] => {
            let mut out = Element::generator(*g).vee(&bracket_factored(rest, c));
            let sign = if rest.len() % 2 == 1 {
                Scalar::from_int(-1)
            } else {
                Scalar::one()
            };
            out.add_scaled(&Element::product_of(rest).vee(&bracket_gen(*g, c)), &sign);
            out
        }
    }
}

/// The Poisson super-bracket `{a, b}` of bidegree `(−1, −1)`.
pub fn bracket(a: &Element, b: &Element) -> Element {
    let mut out = Element::zero();
    for (m, x) in a.terms() {
        out.add_scaled(&bracket_factored(&m.gens(), b), x);
    }
    out
}
