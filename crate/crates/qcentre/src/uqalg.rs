//! The quantized enveloping algebra as a straightening calculus.
//!
//! Elements are finite linear combinations of words in the generators
//! `F_i`, `K_mu`, `E_i`.  Multiplication concatenates words and rewrites
//! the result into the normal shape  F-part, at most one K, E-part  using
//! the defining exchange relations; the F- and E-parts themselves stay as
//! free words.  On top of the product this module provides the Hopf
//! structure: two-leg coproduct, antipode, counit and the adjoint action,
//! plus the leg-twisting map used by the quasi-R-matrix identity.

use crate::qfield::{QField, QScalar};
use crate::rootdata::{CartanDatum, Weight};
use std::collections::BTreeMap;
use std::fmt;

/// One letter of a word: a lowering operator, a torus element, or a raising
/// operator.  The derived order sorts all F's first, then K's, then E's, so
/// normally-ordered words compare by their F-prefix first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenSymbol {
    F(usize),
    K(Weight),
    E(usize),
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSymbol::F(i) => write!(f, "F{}", i + 1),
            GenSymbol::K(w) => write!(f, "K:{}", w),
            GenSymbol::E(i) => write!(f, "E{}", i + 1),
        }
    }
}

impl fmt::Debug for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

pub type Word = Vec<GenSymbol>;

/// Render a word as dot-separated symbols; the empty word is "1".
pub fn word_to_string(word: &[GenSymbol]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

pub fn word_is_k_only(word: &[GenSymbol]) -> bool {
    word.iter().all(|s| matches!(s, GenSymbol::K(_)))
}

/// Finite linear combination of words.  Pure data: the ring operations that
/// need straightening live on [`Algebra`].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, QScalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::from_term(Vec::new(), QScalar::one())
    }

    /// Single-term element.  The word is stored as given; callers are
    /// responsible for it being normally ordered.
    pub fn from_term(word: Word, coeff: QScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        AlgebraElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &QScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[GenSymbol]) -> QScalar {
        self.terms.get(word).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn add_term(&mut self, word: Word, coeff: QScalar) {
        add_term_into(&mut self.terms, word, coeff);
    }

    pub fn plus(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_term_into(&mut out.terms, w.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_term_into(&mut out.terms, w.clone(), -c);
        }
        out
    }

    pub fn scaled(&self, c: &QScalar) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), c * x))
                .collect(),
        }
    }

    pub fn negated(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), -x)).collect(),
        }
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})*{}", c, word_to_string(w))?;
        }
        Ok(())
    }
}

fn add_term_into(acc: &mut BTreeMap<Word, QScalar>, word: Word, coeff: QScalar) {
    if coeff.is_zero() {
        return;
    }
    match acc.get_mut(&word) {
        Some(cur) => {
            *cur += coeff;
            if cur.is_zero() {
                acc.remove(&word);
            }
        }
        None => {
            acc.insert(word, coeff);
        }
    }
}

/// Linear combination of two-leg word tensors, for coproducts.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Word, Word), QScalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((Vec::new(), Vec::new()), QScalar::one());
        TensorElement { terms }
    }

    pub fn from_term(left: Word, right: Word, coeff: QScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((left, right), coeff);
        }
        TensorElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &QScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: Word, right: Word, coeff: QScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&(left.clone(), right.clone())) {
            Some(cur) => {
                *cur += coeff;
                if cur.is_zero() {
                    self.terms.remove(&(left, right));
                }
            }
            None => {
                self.terms.insert((left, right), coeff);
            }
        }
    }

    pub fn plus(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), -c);
        }
        out
    }

    pub fn scaled(&self, c: &QScalar) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero();
        }
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.clone(), c * x))
                .collect(),
        }
    }

    /// Swap the two legs.
    pub fn flipped(&self) -> TensorElement {
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|((l, r), c)| ((r.clone(), l.clone()), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((l, r), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(
                f,
                "({:?})*[{} (x) {}]",
                c,
                word_to_string(l),
                word_to_string(r)
            )?;
        }
        Ok(())
    }
}

enum Violation {
    /// A trivial torus element at this index.
    DropK(usize),
    /// Two adjacent torus elements starting at this index.
    MergeKK(usize),
    /// E before K: swap, picking up a power of q.
    SwapEK(usize),
    /// K before F: swap, picking up a power of q.
    SwapKF(usize),
    /// E before F: swap, plus torus correction terms when indices match.
    CrossEF(usize),
}

fn first_violation(word: &[GenSymbol], start: usize) -> Option<Violation> {
    use GenSymbol::*;
    let mut p = start;
    while p < word.len() {
        if let K(w) = &word[p] {
            if w.is_zero() {
                return Some(Violation::DropK(p));
            }
        }
        if p + 1 < word.len() {
            match (&word[p], &word[p + 1]) {
                (E(_), F(_)) => return Some(Violation::CrossEF(p)),
                (E(_), K(_)) => return Some(Violation::SwapEK(p)),
                (K(_), K(_)) => return Some(Violation::MergeKK(p)),
                (K(_), F(_)) => return Some(Violation::SwapKF(p)),
                _ => {}
            }
        }
        p += 1;
    }
    None
}

/// The quantized enveloping algebra attached to a Cartan datum.
pub struct Algebra {
    datum: CartanDatum,
    field: QField,
    /// `1 / (q_i - q_i^{-1})` for each simple index.
    inv_qi_diff: Vec<QScalar>,
}

impl Algebra {
    pub fn new(datum: CartanDatum) -> Self {
        let field = datum.field();
        let ell = field.ell();
        let inv_qi_diff = (0..datum.rank())
            .map(|i| {
                let e = 2 * ell * datum.symmetrizer(i);
                let diff = &QScalar::v_pow(e) - &QScalar::v_pow(-e);
                diff.inverse().expect("q_i - q_i^{-1} is nonzero")
            })
            .collect();
        Algebra {
            datum,
            field,
            inv_qi_diff,
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn field(&self) -> &QField {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// `1 / (q_i - q_i^{-1})`.
    pub fn inv_qi_diff(&self, i: usize) -> &QScalar {
        &self.inv_qi_diff[i]
    }

    /// `q_i = q^{d_i}` as a scalar.
    pub fn qi(&self, i: usize) -> QScalar {
        QScalar::v_pow(2 * self.field.ell() * self.datum.symmetrizer(i))
    }

    pub fn e(&self, i: usize) -> AlgebraElement {
        assert!(i < self.rank());
        AlgebraElement::from_term(vec![GenSymbol::E(i)], QScalar::one())
    }

    pub fn f(&self, i: usize) -> AlgebraElement {
        assert!(i < self.rank());
        AlgebraElement::from_term(vec![GenSymbol::F(i)], QScalar::one())
    }

    pub fn k(&self, w: &Weight) -> AlgebraElement {
        if w.is_zero() {
            AlgebraElement::one()
        } else {
            AlgebraElement::from_term(vec![GenSymbol::K(w.clone())], QScalar::one())
        }
    }

    /// `K_i`, the torus element of the i-th simple root.
    pub fn k_simple(&self, i: usize) -> AlgebraElement {
        self.k(&self.datum.simple_root(i))
    }

    /// Degree of a word in the root lattice: E's raise, F's lower.
    pub fn word_grading(&self, word: &[GenSymbol]) -> Weight {
        let mut acc = Weight::zero(self.rank());
        for s in word {
            match s {
                GenSymbol::E(i) => acc = &acc + &self.datum.simple_root(*i),
                GenSymbol::F(i) => acc = &acc - &self.datum.simple_root(*i),
                GenSymbol::K(_) => {}
            }
        }
        acc
    }

    /// The common grading of all words, if there is one.
    pub fn element_grading(&self, a: &AlgebraElement) -> Option<Weight> {
        let mut grading = None;
        for (w, _) in a.terms() {
            let g = self.word_grading(w);
            match &grading {
                None => grading = Some(g),
                Some(existing) if *existing == g => {}
                Some(_) => return None,
            }
        }
        grading
    }

    /// Rewrite `coeff * word` into normal order, accumulating into `acc`.
    fn straighten_into(
        &self,
        word: Word,
        coeff: QScalar,
        start: usize,
        acc: &mut BTreeMap<Word, QScalar>,
    ) {
        use GenSymbol::*;
        if coeff.is_zero() {
            return;
        }
        let mut stack: Vec<(Word, QScalar, usize)> = vec![(word, coeff, start)];
        while let Some((mut w, mut c, mut p)) = stack.pop() {
            loop {
                match first_violation(&w, p) {
                    None => {
                        add_term_into(acc, w, c);
                        break;
                    }
                    Some(Violation::DropK(at)) => {
                        w.remove(at);
                        p = at.saturating_sub(1);
                    }
                    Some(Violation::MergeKK(at)) => {
                        let (K(a), K(b)) = (&w[at], &w[at + 1]) else {
                            unreachable!()
                        };
                        let merged = a + b;
                        w.remove(at + 1);
                        if merged.is_zero() {
                            w.remove(at);
                        } else {
                            w[at] = K(merged);
                        }
                        p = at.saturating_sub(1);
                    }
                    Some(Violation::SwapEK(at)) => {
                        let (E(i), K(mu)) = (&w[at], &w[at + 1]) else {
                            unreachable!()
                        };
                        let pairing = self.datum.inner(mu, &self.datum.simple_root(*i));
                        c *= self
                            .field
                            .q_power(&-pairing)
                            .expect("root pairings are integral");
                        w.swap(at, at + 1);
                        p = at.saturating_sub(1);
                    }
                    Some(Violation::SwapKF(at)) => {
                        let (K(mu), F(j)) = (&w[at], &w[at + 1]) else {
                            unreachable!()
                        };
                        let pairing = self.datum.inner(mu, &self.datum.simple_root(*j));
                        c *= self
                            .field
                            .q_power(&-pairing)
                            .expect("root pairings are integral");
                        w.swap(at, at + 1);
                        p = at.saturating_sub(1);
                    }
                    Some(Violation::CrossEF(at)) => {
                        let (E(i), F(j)) = (&w[at], &w[at + 1]) else {
                            unreachable!()
                        };
                        if i == j {
                            let alpha = self.datum.simple_root(*i);
                            let kc = &c * &self.inv_qi_diff[*i];
                            let mut plus = Vec::with_capacity(w.len() - 1);
                            plus.extend_from_slice(&w[..at]);
                            plus.push(K(alpha.clone()));
                            plus.extend_from_slice(&w[at + 2..]);
                            let mut minus = plus.clone();
                            minus[at] = K(-&alpha);
                            let hint = at.saturating_sub(1);
                            stack.push((plus, kc.clone(), hint));
                            stack.push((minus, -kc, hint));
                        }
                        w.swap(at, at + 1);
                        p = at.saturating_sub(1);
                    }
                }
            }
        }
    }

    /// Product of two elements, in normal order.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut acc = BTreeMap::new();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let mut word = Vec::with_capacity(wa.len() + wb.len());
                word.extend_from_slice(wa);
                word.extend_from_slice(wb);
                self.straighten_into(word, ca * cb, 0, &mut acc);
            }
        }
        AlgebraElement { terms: acc }
    }

    pub fn multiply_many(&self, factors: &[&AlgebraElement]) -> AlgebraElement {
        let mut acc = AlgebraElement::one();
        for f in factors {
            acc = self.multiply(&acc, f);
        }
        acc
    }

    pub fn commutator(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        self.multiply(a, b).minus(&self.multiply(b, a))
    }

    /// `x^n` by repeated multiplication.
    pub fn power(&self, x: &AlgebraElement, n: u32) -> AlgebraElement {
        let mut acc = AlgebraElement::one();
        for _ in 0..n {
            acc = self.multiply(&acc, x);
        }
        acc
    }

    /// Divided power `E_i^{(r)} = E_i^r / [r]_i!`.
    pub fn e_divided(&self, i: usize, r: u64) -> AlgebraElement {
        let fact = self.field.q_factorial(r, self.datum.symmetrizer(i));
        let coeff = fact.inverse().expect("q-factorial is nonzero");
        AlgebraElement::from_term(vec![GenSymbol::E(i); r as usize], coeff)
    }

    /// Divided power `F_i^{(r)} = F_i^r / [r]_i!`.
    pub fn f_divided(&self, i: usize, r: u64) -> AlgebraElement {
        let fact = self.field.q_factorial(r, self.datum.symmetrizer(i));
        let coeff = fact.inverse().expect("q-factorial is nonzero");
        AlgebraElement::from_term(vec![GenSymbol::F(i); r as usize], coeff)
    }

    /// The raising-side Serre combination for a pair of distinct indices.
    /// It vanishes on every integrable module but is a nonzero element of
    /// the straightening calculus itself.
    pub fn serre_e(&self, i: usize, j: usize) -> AlgebraElement {
        assert_ne!(i, j);
        let n = (1 - self.datum.cartan_entry(i, j)) as u64;
        let d = self.datum.symmetrizer(i);
        let mut acc = AlgebraElement::zero();
        for r in 0..=n {
            let mut coeff = self
                .field
                .q_binom(n, r, d)
                .expect("binomial arguments in range");
            if r % 2 == 1 {
                coeff = -&coeff;
            }
            let mut word = Vec::with_capacity(n as usize + 1);
            word.extend(std::iter::repeat_n(GenSymbol::E(i), r as usize));
            word.push(GenSymbol::E(j));
            word.extend(std::iter::repeat_n(GenSymbol::E(i), (n - r) as usize));
            acc.add_term(word, coeff);
        }
        acc
    }

    /// The lowering-side Serre combination.
    pub fn serre_f(&self, i: usize, j: usize) -> AlgebraElement {
        assert_ne!(i, j);
        let n = (1 - self.datum.cartan_entry(i, j)) as u64;
        let d = self.datum.symmetrizer(i);
        let mut acc = AlgebraElement::zero();
        for r in 0..=n {
            let mut coeff = self
                .field
                .q_binom(n, r, d)
                .expect("binomial arguments in range");
            if r % 2 == 1 {
                coeff = -&coeff;
            }
            let mut word = Vec::with_capacity(n as usize + 1);
            word.extend(std::iter::repeat_n(GenSymbol::F(i), r as usize));
            word.push(GenSymbol::F(j));
            word.extend(std::iter::repeat_n(GenSymbol::F(i), (n - r) as usize));
            acc.add_term(word, coeff);
        }
        acc
    }

    fn coproduct_symbol(&self, s: &GenSymbol) -> TensorElement {
        use GenSymbol::*;
        match s {
            E(i) => {
                let mut t =
                    TensorElement::from_term(vec![E(*i)], Vec::new(), QScalar::one());
                t.add_term(
                    vec![K(self.datum.simple_root(*i))],
                    vec![E(*i)],
                    QScalar::one(),
                );
                t
            }
            F(i) => {
                let mut t = TensorElement::from_term(
                    vec![F(*i)],
                    vec![K(-&self.datum.simple_root(*i))],
                    QScalar::one(),
                );
                t.add_term(Vec::new(), vec![F(*i)], QScalar::one());
                t
            }
            K(w) => TensorElement::from_term(vec![K(w.clone())], vec![K(w.clone())], QScalar::one()),
        }
    }

    /// Product in the two-leg tensor algebra, leg by leg.
    pub fn tensor_multiply(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((la, ra), ca) in a.terms() {
            for ((lb, rb), cb) in b.terms() {
                let left = self.multiply(
                    &AlgebraElement::from_term(la.clone(), QScalar::one()),
                    &AlgebraElement::from_term(lb.clone(), QScalar::one()),
                );
                let right = self.multiply(
                    &AlgebraElement::from_term(ra.clone(), QScalar::one()),
                    &AlgebraElement::from_term(rb.clone(), QScalar::one()),
                );
                let scale = ca * cb;
                for (lw, lc) in left.terms() {
                    for (rw, rc) in right.terms() {
                        out.add_term(lw.clone(), rw.clone(), &(&scale * lc) * rc);
                    }
                }
            }
        }
        out
    }

    /// Coproduct, extended multiplicatively from the generators.
    pub fn coproduct(&self, a: &AlgebraElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (word, c) in a.terms() {
            let mut t = TensorElement::one();
            for s in word {
                t = self.tensor_multiply(&t, &self.coproduct_symbol(s));
            }
            out = out.plus(&t.scaled(c));
        }
        out
    }

    /// Antipode, extended anti-multiplicatively from the generators.
    pub fn antipode(&self, a: &AlgebraElement) -> AlgebraElement {
        use GenSymbol::*;
        let mut out = AlgebraElement::zero();
        for (word, c) in a.terms() {
            let mut acc = AlgebraElement::from_term(Vec::new(), c.clone());
            for s in word.iter().rev() {
                let image = match s {
                    E(i) => AlgebraElement::from_term(
                        vec![K(-&self.datum.simple_root(*i)), E(*i)],
                        -&QScalar::one(),
                    ),
                    F(i) => AlgebraElement::from_term(
                        vec![F(*i), K(self.datum.simple_root(*i))],
                        -&QScalar::one(),
                    ),
                    K(w) => AlgebraElement::from_term(vec![K(-w)], QScalar::one()),
                };
                acc = self.multiply(&acc, &image);
            }
            out = out.plus(&acc);
        }
        out
    }

    /// Counit: kills E's and F's, sends torus elements to 1.
    pub fn counit(&self, a: &AlgebraElement) -> QScalar {
        let mut acc = QScalar::zero();
        for (word, c) in a.terms() {
            if word_is_k_only(word) {
                acc += c;
            }
        }
        acc
    }

    /// Adjoint action `ad(x)(y) = sum x_(1) y S(x_(2))`.
    pub fn adjoint(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((l, r), c) in self.coproduct(x).terms() {
            let left = AlgebraElement::from_term(l.clone(), c.clone());
            let right = self.antipode(&AlgebraElement::from_term(r.clone(), QScalar::one()));
            out = out.plus(&self.multiply(&self.multiply(&left, y), &right));
        }
        out
    }

    /// Leg-twisting map: on a tensor of graded words it multiplies each leg
    /// by the torus element of minus the other leg's grading,
    /// `w1 (x) w2  ->  w1 K_{-deg w2} (x) K_{-deg w1} w2`.
    pub fn twist(&self, t: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l, r), c) in t.terms() {
            let dl = self.word_grading(l);
            let dr = self.word_grading(r);
            let left = self.multiply(
                &AlgebraElement::from_term(l.clone(), QScalar::one()),
                &self.k(&-&dr),
            );
            let right = self.multiply(
                &self.k(&-&dl),
                &AlgebraElement::from_term(r.clone(), QScalar::one()),
            );
            for (lw, lc) in left.terms() {
                for (rw, rc) in right.terms() {
                    out.add_term(lw.clone(), rw.clone(), &(c * lc) * rc);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::CartanDatum;
    use num::BigRational;
    use proptest::prelude::*;

    fn alg(name: &str) -> Algebra {
        Algebra::new(CartanDatum::from_name(name).unwrap())
    }

    fn q_pow(a: &Algebra, n: i64) -> QScalar {
        a.field()
            .q_power(&BigRational::from_integer(n.into()))
            .unwrap()
    }

    #[test]
    fn torus_elements_merge_and_cancel() {
        let a2 = alg("A2");
        let mu = Weight::new(vec![2, -1]);
        let nu = Weight::new(vec![0, 3]);
        let prod = a2.multiply(&a2.k(&mu), &a2.k(&nu));
        assert_eq!(prod, a2.k(&(&mu + &nu)));
        let inv = a2.multiply(&a2.k(&mu), &a2.k(&-&mu));
        assert_eq!(inv, AlgebraElement::one());
    }

    #[test]
    fn rank_one_commutator_is_torus_difference() {
        let a1 = alg("A1");
        let lhs = a1.commutator(&a1.e(0), &a1.f(0));
        let c = a1.inv_qi_diff(0).clone();
        let mut rhs = a1.k_simple(0).scaled(&c);
        rhs = rhs.plus(&a1.k(&-&a1.datum().simple_root(0)).scaled(&-&c));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_commutators_vanish() {
        let a2 = alg("A2");
        assert!(a2.commutator(&a2.e(0), &a2.f(1)).is_zero());
        assert!(a2.commutator(&a2.e(1), &a2.f(0)).is_zero());
    }

    #[test]
    fn torus_conjugation_scales_by_q_powers() {
        let a1 = alg("A1");
        // K_alpha E = q^{(alpha,alpha)} E K_alpha = q^2 E K_alpha.
        let ke = a1.multiply(&a1.k_simple(0), &a1.e(0));
        let ek = a1.multiply(&a1.e(0), &a1.k_simple(0));
        assert_eq!(ke, ek.scaled(&q_pow(&a1, 2)));
        // K_alpha F = q^{-2} F K_alpha.
        let kf = a1.multiply(&a1.k_simple(0), &a1.f(0));
        let fk = a1.multiply(&a1.f(0), &a1.k_simple(0));
        assert_eq!(kf, fk.scaled(&q_pow(&a1, -2)));
    }

    #[test]
    fn normal_order_groups_lowering_first() {
        let a2 = alg("A2");
        let prod = a2.multiply_many(&[&a2.e(0), &a2.k_simple(1), &a2.f(1)]);
        for (w, _) in prod.terms() {
            let mut last = 0u8;
            for s in w {
                let class = match s {
                    GenSymbol::F(_) => 0,
                    GenSymbol::K(_) => 1,
                    GenSymbol::E(_) => 2,
                };
                assert!(class >= last, "word {} out of order", word_to_string(w));
                last = class;
            }
        }
    }

    #[test]
    fn gradings_add_under_multiplication() {
        let a2 = alg("A2");
        let x = a2.multiply(&a2.e(0), &a2.e(1));
        let y = a2.multiply(&a2.f(1), &a2.k_simple(0));
        let gx = a2.element_grading(&x).unwrap();
        let gy = a2.element_grading(&y).unwrap();
        let gxy = a2.element_grading(&a2.multiply(&x, &y)).unwrap();
        assert_eq!(gxy, &gx + &gy);
    }

    #[test]
    fn serre_combinations_shape() {
        let a2 = alg("A2");
        let s = a2.serre_e(0, 1);
        assert_eq!(s.num_terms(), 3);
        assert!(a2.counit(&s).is_zero());
        let expected_grading = &a2.datum().simple_root(0).scaled(2) + &a2.datum().simple_root(1);
        assert_eq!(a2.element_grading(&s).unwrap(), expected_grading);
        // Middle coefficient is -[2]_q.
        let word = vec![GenSymbol::E(0), GenSymbol::E(1), GenSymbol::E(0)];
        assert_eq!(s.coeff(&word), -&a2.field().q_int(2, 1));
        // G2 raising Serre for the short root has 5 terms.
        let g2 = alg("G2");
        assert_eq!(g2.serre_e(0, 1).num_terms(), 5);
    }

    #[test]
    fn coproduct_of_generators() {
        let a1 = alg("A1");
        let de = a1.coproduct(&a1.e(0));
        assert_eq!(de.num_terms(), 2);
        let alpha = a1.datum().simple_root(0);
        assert_eq!(
            de.terms()
                .map(|((l, r), _)| (word_to_string(l), word_to_string(r)))
                .collect::<Vec<_>>(),
            vec![
                ("K:(2)".to_string(), "E1".to_string()),
                ("E1".to_string(), "1".to_string()),
            ]
        );
        let dk = a1.coproduct(&a1.k(&alpha));
        assert_eq!(dk.num_terms(), 1);
    }

    #[test]
    fn coproduct_is_multiplicative() {
        let a2 = alg("A2");
        let x = a2.multiply(&a2.e(0), &a2.f(1));
        let y = a2.multiply(&a2.k_simple(0), &a2.e(1));
        let lhs = a2.coproduct(&a2.multiply(&x, &y));
        let rhs = a2.tensor_multiply(&a2.coproduct(&x), &a2.coproduct(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_axiom() {
        let a2 = alg("A2");
        let samples = [
            a2.e(0),
            a2.f(1),
            a2.k(&Weight::new(vec![1, -2])),
            a2.multiply(&a2.e(0), &a2.f(0)),
            a2.multiply_many(&[&a2.f(1), &a2.k_simple(0), &a2.e(1)]),
        ];
        for x in &samples {
            // (counit (x) id) of the coproduct recovers x.
            let mut recovered = AlgebraElement::zero();
            for ((l, r), c) in a2.coproduct(x).terms() {
                let left = AlgebraElement::from_term(l.clone(), c.clone());
                let e = a2.counit(&left);
                if !e.is_zero() {
                    recovered.add_term(r.clone(), e);
                }
            }
            assert_eq!(&recovered, x);
        }
    }

    #[test]
    fn antipode_axiom() {
        let a2 = alg("A2");
        let samples = [
            a2.e(0),
            a2.f(0),
            a2.k(&Weight::new(vec![0, 1])),
            a2.multiply(&a2.e(0), &a2.e(1)),
            a2.multiply(&a2.f(1), &a2.f(0)),
        ];
        for x in &samples {
            // m (S (x) id) of the coproduct equals counit(x) * 1.
            let mut acc = AlgebraElement::zero();
            for ((l, r), c) in a2.coproduct(x).terms() {
                let sl = a2.antipode(&AlgebraElement::from_term(l.clone(), c.clone()));
                let right = AlgebraElement::from_term(r.clone(), QScalar::one());
                acc = acc.plus(&a2.multiply(&sl, &right));
            }
            let expected = AlgebraElement::one().scaled(&a2.counit(x));
            assert_eq!(acc, expected, "failed for {:?}", x);
        }
    }

    #[test]
    fn adjoint_of_torus_is_conjugation() {
        let a2 = alg("A2");
        let mu = Weight::new(vec![1, 1]);
        let y = a2.multiply(&a2.f(0), &a2.e(1));
        let lhs = a2.adjoint(&a2.k(&mu), &y);
        let rhs = a2.multiply_many(&[&a2.k(&mu), &y, &a2.k(&-&mu)]);
        assert_eq!(lhs, rhs);
    }

    fn arb_word(rank: usize) -> impl Strategy<Value = Word> {
        let sym = prop_oneof![
            (0..rank).prop_map(GenSymbol::E),
            (0..rank).prop_map(GenSymbol::F),
            (0..rank)
                .prop_map(move |i| GenSymbol::K(Weight::fundamental(rank, i))),
            (0..rank).prop_map(move |i| {
                let mut w = Weight::zero(rank);
                w = &w - &Weight::fundamental(rank, i);
                GenSymbol::K(w)
            }),
        ];
        proptest::collection::vec(sym, 0..4)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn multiplication_is_associative(
            wa in arb_word(2),
            wb in arb_word(2),
            wc in arb_word(2),
        ) {
            let a2 = alg("A2");
            let a = AlgebraElement::from_term(wa, QScalar::one());
            let b = AlgebraElement::from_term(wb, QScalar::one());
            let c = AlgebraElement::from_term(wc, QScalar::one());
            let lhs = a2.multiply(&a2.multiply(&a, &b), &c);
            let rhs = a2.multiply(&a, &a2.multiply(&b, &c));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn one_is_neutral(w in arb_word(2)) {
            let a2 = alg("A2");
            let a = AlgebraElement::from_term(w, QScalar::one());
            let normal = a2.multiply(&a, &AlgebraElement::one());
            prop_assert_eq!(a2.multiply(&AlgebraElement::one(), &a), normal.clone());
            // Straightening is idempotent on its own output.
            let mut again = AlgebraElement::zero();
            for (word, c) in normal.terms() {
                again = again.plus(&a2.multiply(
                    &AlgebraElement::from_term(word.clone(), c.clone()),
                    &AlgebraElement::one(),
                ));
            }
            prop_assert_eq!(again, normal);
        }
    }
}
