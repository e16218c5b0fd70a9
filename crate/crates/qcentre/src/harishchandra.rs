//! The torus-part projection, the `-rho` twist, and character arithmetic.
//!
//! Composing the projection onto K-only words with the twist that rescales
//! `K_mu` by `q^(-rho,mu)` sends central elements to Weyl-invariant sums of
//! `K_{2mu}` which coincide with module characters evaluated at doubled
//! weights.  Those characters are triangular against the dominance order, so
//! any invariant even element decomposes as a polynomial in the characters
//! of the fundamental modules by repeatedly stripping the maximal dominant
//! exponent.

use crate::error::{Error, Result};
use crate::qfield::QScalar;
use crate::repbuilder::{full_character, Module};
use crate::rootdata::{CartanDatum, Weight};
use crate::uqalg::{AlgebraElement, GenSymbol};
use std::collections::BTreeMap;

/// Element of the torus subalgebra: a finite sum `sum c_mu K_mu` keyed by
/// the exponent weight.  Zero coefficients are never stored, so equality of
/// the maps is equality of the elements.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct U0Element {
    terms: BTreeMap<Weight, QScalar>,
}

impl U0Element {
    pub fn zero() -> Self {
        U0Element::default()
    }

    /// The unit `K_0`.
    pub fn one(rank: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Weight::zero(rank), QScalar::one());
        U0Element { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Weight, QScalar)>) -> Self {
        let mut out = U0Element::zero();
        for (w, c) in pairs {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, exponent: Weight, coeff: QScalar) {
        if coeff.is_zero() {
            return;
        }
        let new = match self.terms.get(&exponent) {
            Some(old) => old + &coeff,
            None => coeff,
        };
        if new.is_zero() {
            self.terms.remove(&exponent);
        } else {
            self.terms.insert(exponent, new);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &QScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: &Weight) -> QScalar {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    pub fn plus(&self, other: &U0Element) -> U0Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &U0Element) -> U0Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scaled(&self, c: &QScalar) -> U0Element {
        let mut out = U0Element::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    /// Convolution product: `K_mu K_nu = K_{mu+nu}`.
    pub fn multiply(&self, other: &U0Element) -> U0Element {
        let mut out = U0Element::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1 + w2, c1 * c2);
            }
        }
        out
    }

    pub fn power(&self, rank: usize, n: u64) -> U0Element {
        let mut out = U0Element::one(rank);
        for _ in 0..n {
            out = out.multiply(self);
        }
        out
    }

    /// Back to a general algebra element (a sum of pure K-words).
    pub fn to_algebra_element(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (w, c) in &self.terms {
            let word = if w.is_zero() {
                Vec::new()
            } else {
                vec![GenSymbol::K(w.clone())]
            };
            out.add_term(word, c.clone());
        }
        out
    }
}

/// Projection onto the K-span along the straightened decomposition: keeps
/// exactly the words with empty E- and F-blocks.  Only defined on elements
/// of homogeneous degree zero, where it is multiplicative.
pub fn project_pi(datum: &CartanDatum, x: &AlgebraElement) -> Result<U0Element> {
    let rank = datum.rank();
    for (word, _) in x.terms() {
        let mut grading = Weight::zero(rank);
        for s in word {
            match s {
                GenSymbol::E(i) => grading = &grading + &datum.simple_root(*i),
                GenSymbol::F(i) => grading = &grading - &datum.simple_root(*i),
                GenSymbol::K(_) => {}
            }
        }
        if !grading.is_zero() {
            return Err(Error::GradingNotZero);
        }
    }
    let mut out = U0Element::zero();
    for (word, c) in x.terms() {
        if word.is_empty() {
            out.add_term(Weight::zero(rank), c.clone());
        } else if word.len() == 1 {
            if let GenSymbol::K(w) = &word[0] {
                out.add_term(w.clone(), c.clone());
            }
        } else if crate::uqalg::word_is_k_only(word) {
            let mut w = Weight::zero(rank);
            for s in word {
                if let GenSymbol::K(v) = s {
                    w = &w + v;
                }
            }
            out.add_term(w, c.clone());
        }
    }
    Ok(out)
}

/// The algebra automorphism of the torus part sending `K_mu` to
/// `q^(lambda,mu) K_mu`.
pub fn gamma_twist(datum: &CartanDatum, lambda: &Weight, h: &U0Element) -> U0Element {
    let mut out = U0Element::zero();
    for (mu, c) in h.terms() {
        out.add_term(mu.clone(), &datum.q_inner(lambda, mu) * c);
    }
    out
}

/// Harish-Chandra image: the projection followed by the twist by `-rho`.
pub fn hc_image(datum: &CartanDatum, c: &AlgebraElement) -> Result<U0Element> {
    let pi = project_pi(datum, c)?;
    let minus_rho = datum.rho().scaled(-1);
    Ok(gamma_twist(datum, &minus_rho, &pi))
}

/// Whether every simple reflection fixes the element under `w(K_mu) =
/// K_{w(mu)}`.
pub fn is_w_invariant(datum: &CartanDatum, h: &U0Element) -> bool {
    for i in 0..datum.rank() {
        let mut reflected = U0Element::zero();
        for (mu, c) in h.terms() {
            reflected.add_term(datum.simple_reflection(i, mu), c.clone());
        }
        if reflected != *h {
            return false;
        }
    }
    true
}

/// Whether every exponent lies in the doubled weight lattice.
pub fn is_even(h: &U0Element) -> bool {
    h.terms()
        .all(|(mu, _)| mu.coords().iter().all(|c| c % 2 == 0))
}

/// Orbit average `sum_{mu in W lambda} K_{2 mu}` (every orbit member once).
pub fn av(datum: &CartanDatum, lambda: &Weight) -> U0Element {
    let mut out = U0Element::zero();
    for mu in datum.weyl_orbit(lambda) {
        out.add_term(mu.scaled(2), QScalar::one());
    }
    out
}

/// Character of a module at doubled exponents: `sum dim M_mu  K_{2 mu}`.
pub fn ch(module: &Module) -> U0Element {
    let mut out = U0Element::zero();
    for (mu, mult) in module.character() {
        out.add_term(mu.scaled(2), QScalar::from_int(mult as i64));
    }
    out
}

/// Same character sum computed from the recursive multiplicity formula
/// alone, without constructing the module.
pub fn ch_of_weight(datum: &CartanDatum, lambda: &Weight) -> U0Element {
    let mut out = U0Element::zero();
    for (mu, mult) in full_character(datum, lambda) {
        out.add_term(mu.scaled(2), QScalar::from_int(mult as i64));
    }
    out
}

/// Evaluation of the character `K_mu -> q^(nu,mu)`.
pub fn chi_eval(datum: &CartanDatum, nu: &Weight, h: &U0Element) -> QScalar {
    let mut out = QScalar::zero();
    for (mu, c) in h.terms() {
        out = &out + &(&datum.q_inner(nu, mu) * c);
    }
    out
}

/// Polynomial in the fundamental characters, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CharPolynomial {
    terms: BTreeMap<Vec<u64>, QScalar>,
}

impl CharPolynomial {
    pub fn zero() -> Self {
        CharPolynomial::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u64>, &QScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u64]) -> QScalar {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<u64>, coeff: QScalar) {
        if coeff.is_zero() {
            return;
        }
        let new = match self.terms.get(&exponents) {
            Some(old) => old + &coeff,
            None => coeff,
        };
        if new.is_zero() {
            self.terms.remove(&exponents);
        } else {
            self.terms.insert(exponents, new);
        }
    }

    /// Substitute the fundamental characters for the variables and expand.
    pub fn expand(&self, datum: &CartanDatum) -> U0Element {
        let rank = datum.rank();
        let mut powers = FundamentalPowers::new(datum);
        let mut out = U0Element::zero();
        for (exponents, c) in &self.terms {
            let mut term = U0Element::one(rank);
            for (i, k) in exponents.iter().enumerate() {
                if *k > 0 {
                    term = term.multiply(powers.get(i, *k));
                }
            }
            out = out.plus(&term.scaled(c));
        }
        out
    }
}

/// Memoized powers of the fundamental characters.
struct FundamentalPowers<'a> {
    datum: &'a CartanDatum,
    powers: Vec<Vec<U0Element>>,
}

impl<'a> FundamentalPowers<'a> {
    fn new(datum: &'a CartanDatum) -> Self {
        let rank = datum.rank();
        let powers = (0..rank).map(|_| vec![U0Element::one(rank)]).collect();
        FundamentalPowers { datum, powers }
    }

    fn get(&mut self, i: usize, k: u64) -> &U0Element {
        let rank = self.datum.rank();
        while self.powers[i].len() <= k as usize {
            let base = ch_of_weight(self.datum, &Weight::fundamental(rank, i));
            let next = self.powers[i].last().unwrap().multiply(&base);
            self.powers[i].push(next);
        }
        &self.powers[i][k as usize]
    }
}

/// Unique polynomial expressing an invariant even element in the fundamental
/// characters.
///
/// Elimination loop: among the doubled-dominant exponents present, take the
/// maximum in the height-then-lex order (a total order refining dominance),
/// emit the corresponding monomial, subtract its expansion, repeat.  Each
/// character product has its top exponent with coefficient one, so the
/// maximum strictly decreases and the loop terminates.
pub fn decompose_in_fundamentals(
    datum: &CartanDatum,
    h: &U0Element,
) -> Result<CharPolynomial> {
    if !is_even(h) {
        return Err(Error::NotEven);
    }
    if !is_w_invariant(datum, h) {
        return Err(Error::NotWInvariant);
    }
    let mut rest = h.clone();
    let mut out = CharPolynomial::zero();
    let mut powers = FundamentalPowers::new(datum);
    // Bound on iterations: each step removes one dominant exponent orbit and
    // can only introduce exponents strictly below it, all within the finite
    // saturated set under the starting maxima.
    let mut fuel = 10_000usize;
    while !rest.is_zero() {
        let lead = rest
            .terms()
            .filter_map(|(mu2, c)| {
                let mu = Weight::new(mu2.coords().iter().map(|x| x / 2).collect());
                mu.is_dominant().then_some((mu, c.clone()))
            })
            .max_by(|a, b| datum.height_lex_cmp(&a.0, &b.0));
        let Some((mu, c)) = lead else {
            // A W-invariant element always has a dominant exponent in every
            // orbit, so this is unreachable for valid input.
            return Err(Error::NotWInvariant);
        };
        let exponents: Vec<u64> = mu.coords().iter().map(|x| *x as u64).collect();
        let mut expansion = U0Element::one(datum.rank());
        for (i, k) in exponents.iter().enumerate() {
            if *k > 0 {
                expansion = expansion.multiply(powers.get(i, *k));
            }
        }
        rest = rest.minus(&expansion.scaled(&c));
        out.add_term(exponents, c);
        fuel -= 1;
        if fuel == 0 {
            return Err(Error::DecompositionStuck);
        }
    }
    Ok(out)
}
