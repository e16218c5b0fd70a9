//! Braid-group automorphisms and root vectors.
//!
//! Each simple index carries an algebra automorphism acting on generators
//! by the divided-power formulas below; composing them along a reduced word
//! for the longest Weyl element produces a raising and a lowering root
//! vector for every positive root, in the convex order of the word.

use crate::error::Result;
use crate::qfield::QScalar;
use crate::rootdata::Weight;
use crate::uqalg::{Algebra, AlgebraElement, GenSymbol};

/// Image of a single generator symbol under the i-th braid automorphism.
fn braid_symbol(alg: &Algebra, i: usize, s: &GenSymbol) -> AlgebraElement {
    let datum = alg.datum();
    match s {
        GenSymbol::K(mu) => alg.k(&datum.simple_reflection(i, mu)),
        GenSymbol::E(j) if *j == i => {
            // E_i -> -F_i K_i.
            let alpha = datum.simple_root(i);
            AlgebraElement::from_term(
                vec![GenSymbol::F(i), GenSymbol::K(alpha)],
                -&QScalar::one(),
            )
        }
        GenSymbol::F(j) if *j == i => {
            // F_i -> -K_i^{-1} E_i.
            let alpha = datum.simple_root(i);
            AlgebraElement::from_term(
                vec![GenSymbol::K(-&alpha), GenSymbol::E(i)],
                -&QScalar::one(),
            )
        }
        GenSymbol::E(j) => {
            // E_j -> sum over r+s = -a_ij of (-1)^s q_i^{-s} E_i^(r) E_j E_i^(s).
            let n = (-datum.cartan_entry(i, *j)) as u64;
            let qi = alg.qi(i);
            let qi_inv = qi.inverse().expect("q_i is invertible");
            let mut acc = AlgebraElement::zero();
            for s in 0..=n {
                let r = n - s;
                let mut coeff = qi_inv.pow(s as u32);
                if s % 2 == 1 {
                    coeff = -&coeff;
                }
                let term = alg.multiply_many(&[
                    &alg.e_divided(i, r),
                    &alg.e(*j),
                    &alg.e_divided(i, s),
                ]);
                acc = acc.plus(&term.scaled(&coeff));
            }
            acc
        }
        GenSymbol::F(j) => {
            // F_j -> sum over r+s = -a_ij of (-1)^s q_i^{s} F_i^(s) F_j F_i^(r).
            let n = (-datum.cartan_entry(i, *j)) as u64;
            let qi = alg.qi(i);
            let mut acc = AlgebraElement::zero();
            for s in 0..=n {
                let r = n - s;
                let mut coeff = qi.pow(s as u32);
                if s % 2 == 1 {
                    coeff = -&coeff;
                }
                let term = alg.multiply_many(&[
                    &alg.f_divided(i, s),
                    &alg.f(*j),
                    &alg.f_divided(i, r),
                ]);
                acc = acc.plus(&term.scaled(&coeff));
            }
            acc
        }
    }
}

/// The i-th braid automorphism, extended multiplicatively.
pub fn braid_apply(alg: &Algebra, i: usize, x: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (word, c) in x.terms() {
        let mut acc = AlgebraElement::from_term(Vec::new(), c.clone());
        for s in word {
            acc = alg.multiply(&acc, &braid_symbol(alg, i, s));
        }
        out = out.plus(&acc);
    }
    out
}

/// Composition along a word: the first letter is applied last, so
/// `braid_apply_word(&[i1, i2], x)` is T_{i1}(T_{i2}(x)).
pub fn braid_apply_word(alg: &Algebra, word: &[usize], x: &AlgebraElement) -> AlgebraElement {
    let mut acc = x.clone();
    for &i in word.iter().rev() {
        acc = braid_apply(alg, i, &acc);
    }
    acc
}

/// Root vectors in the convex order of a reduced word.
pub struct RootVectors {
    pub word: Vec<usize>,
    pub roots: Vec<Weight>,
    pub e_vectors: Vec<AlgebraElement>,
    pub f_vectors: Vec<AlgebraElement>,
}

/// Build raising and lowering vectors for every positive root:
/// the r-th pair is the image of the r-th simple generator under the braid
/// operators of the first r-1 letters.
pub fn root_vectors(alg: &Algebra, word: &[usize]) -> Result<RootVectors> {
    let datum = alg.datum();
    let roots = datum.positive_roots_from_word(word)?;
    let mut e_vectors = Vec::with_capacity(word.len());
    let mut f_vectors = Vec::with_capacity(word.len());
    for r in 0..word.len() {
        let e = braid_apply_word(alg, &word[..r], &alg.e(word[r]));
        let f = braid_apply_word(alg, &word[..r], &alg.f(word[r]));
        debug_assert!(
            e.terms().all(|(w, _)| w.iter().all(|s| matches!(s, GenSymbol::E(_)))),
            "raising root vectors live in the upper half"
        );
        debug_assert!(
            f.terms().all(|(w, _)| w.iter().all(|s| matches!(s, GenSymbol::F(_)))),
            "lowering root vectors live in the lower half"
        );
        debug_assert_eq!(alg.element_grading(&e), Some(roots[r].clone()));
        debug_assert_eq!(alg.element_grading(&f), Some(-&roots[r]));
        e_vectors.push(e);
        f_vectors.push(f);
    }
    Ok(RootVectors {
        word: word.to_vec(),
        roots,
        e_vectors,
        f_vectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::CartanDatum;
    use num::BigRational;

    fn alg(name: &str) -> Algebra {
        Algebra::new(CartanDatum::from_name(name).unwrap())
    }

    #[test]
    fn rank_one_images() {
        let a1 = alg("A1");
        let alpha = a1.datum().simple_root(0);
        let te = braid_apply(&a1, 0, &a1.e(0));
        assert_eq!(
            te,
            AlgebraElement::from_term(
                vec![GenSymbol::F(0), GenSymbol::K(alpha.clone())],
                -&QScalar::one()
            )
        );
        let tf = braid_apply(&a1, 0, &a1.f(0));
        assert_eq!(
            tf,
            AlgebraElement::from_term(
                vec![GenSymbol::K(-&alpha), GenSymbol::E(0)],
                -&QScalar::one()
            )
        );
        let tk = braid_apply(&a1, 0, &a1.k(&alpha));
        assert_eq!(tk, a1.k(&-&alpha));
    }

    #[test]
    fn automorphism_preserves_relations() {
        // The braid image of [E_i, F_j] must equal the image of the
        // right-hand side of the defining relation.
        for name in ["A2", "B2", "G2"] {
            let a = alg(name);
            for t in 0..a.rank() {
                for i in 0..a.rank() {
                    for j in 0..a.rank() {
                        let lhs = braid_apply(
                            &a,
                            t,
                            &a.commutator(&a.e(i), &a.f(j)),
                        );
                        let rhs = if i == j {
                            let alpha = a.datum().simple_root(i);
                            braid_apply(
                                &a,
                                t,
                                &a.k(&alpha)
                                    .minus(&a.k(&-&alpha))
                                    .scaled(a.inv_qi_diff(i)),
                            )
                        } else {
                            AlgebraElement::zero()
                        };
                        assert_eq!(lhs, rhs, "{name} t={t} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn braid_relations_on_generators() {
        // A2: T_0 T_1 T_0 = T_1 T_0 T_1 on every generator.
        let a2 = alg("A2");
        let mut gens = vec![a2.e(0), a2.e(1), a2.f(0), a2.f(1)];
        gens.push(a2.k(&Weight::new(vec![1, 0])));
        for g in &gens {
            let lhs = braid_apply_word(&a2, &[0, 1, 0], g);
            let rhs = braid_apply_word(&a2, &[1, 0, 1], g);
            assert_eq!(lhs, rhs);
        }
        // B2: T_0 T_1 T_0 T_1 = T_1 T_0 T_1 T_0.
        let b2 = alg("B2");
        for g in [b2.e(0), b2.e(1), b2.f(0), b2.f(1)] {
            let lhs = braid_apply_word(&b2, &[0, 1, 0, 1], &g);
            let rhs = braid_apply_word(&b2, &[1, 0, 1, 0], &g);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn convex_root_vectors_in_rank_two() {
        let a2 = alg("A2");
        let rv = root_vectors(&a2, &[0, 1, 0]).unwrap();
        // First and last are the simple generators themselves.
        assert_eq!(rv.e_vectors[0], a2.e(0));
        assert_eq!(rv.e_vectors[2], a2.e(1));
        assert_eq!(rv.f_vectors[2], a2.f(1));
        // The middle one raises by alpha_1 + alpha_2:
        // T_0(E_1) = E_0 E_1 - q^{-1} E_1 E_0.
        let q_inv = a2
            .field()
            .q_power(&BigRational::from_integer((-1).into()))
            .unwrap();
        let expected = a2
            .multiply(&a2.e(0), &a2.e(1))
            .minus(&a2.multiply(&a2.e(1), &a2.e(0)).scaled(&q_inv));
        assert_eq!(rv.e_vectors[1], expected);
    }

    #[test]
    fn root_vectors_for_all_battery_types() {
        for name in ["A1", "A2", "A3", "B2", "G2"] {
            let a = alg(name);
            let word = a.datum().canonical_reduced_word();
            let rv = root_vectors(&a, &word).unwrap();
            assert_eq!(rv.roots.len(), a.datum().num_positive_roots(), "{name}");
            for (r, root) in rv.roots.iter().enumerate() {
                assert_eq!(
                    a.element_grading(&rv.e_vectors[r]),
                    Some(root.clone()),
                    "{name} root {r}"
                );
                // Simple roots give back plain generators.
                if let Some(i) = (0..a.rank()).find(|i| a.datum().simple_root(*i) == *root) {
                    assert_eq!(rv.e_vectors[r], a.e(i), "{name} simple root {r}");
                    assert_eq!(rv.f_vectors[r], a.f(i), "{name} simple root {r}");
                }
            }
        }
    }

    #[test]
    fn non_reduced_word_is_rejected() {
        let a2 = alg("A2");
        assert!(root_vectors(&a2, &[0, 0, 1]).is_err());
    }
}
