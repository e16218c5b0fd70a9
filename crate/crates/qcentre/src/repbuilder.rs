//! Finite-dimensional modules with explicit generator matrices.
//!
//! Highest-weight modules are built layer by layer: the depth-t layer is
//! spanned by `F_i * (depth t-1 basis)`, and the contravariant form -- whose
//! Gram blocks satisfy a recursion in the layer below -- picks out a basis
//! of the quotient by the form's radical.  That quotient is the simple
//! integrable module, which dimension and character oracles cross-check.
//!
//! Tensor products act through the coproduct.  Evaluation of algebra
//! elements walks the normally-ordered words with a shared-prefix stack of
//! partial operator products.

use crate::linalg::{axpy, column_rank_profile, solve_dense, SparseMat, SparseVec};
use crate::qfield::QScalar;
use crate::rootdata::{CartanDatum, Weight};
use crate::uqalg::{Algebra, AlgebraElement, GenSymbol, Word};
use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// `[m]_{q_d}` for a signed integer m.
pub fn q_int_signed(alg: &Algebra, m: i64, d: i64) -> QScalar {
    if m >= 0 {
        alg.field().q_int(m as u64, d)
    } else {
        -&alg.field().q_int((-m) as u64, d)
    }
}

/// A module with explicit matrices for every generator.
#[derive(Clone)]
pub struct Module {
    datum: CartanDatum,
    weights: Vec<Weight>,
    e_action: Vec<SparseMat>,
    f_action: Vec<SparseMat>,
}

impl Module {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn weight(&self, b: usize) -> &Weight {
        &self.weights[b]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn e_mat(&self, i: usize) -> &SparseMat {
        &self.e_action[i]
    }

    pub fn f_mat(&self, i: usize) -> &SparseMat {
        &self.f_action[i]
    }

    /// Basis indices grouped by weight.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (b, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(b);
        }
        out
    }

    /// Weight multiplicities.
    pub fn character(&self) -> BTreeMap<Weight, u64> {
        let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
        for w in &self.weights {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Diagonal of the action of `K_mu`.
    pub fn k_diag(&self, mu: &Weight) -> Vec<QScalar> {
        self.weights
            .iter()
            .map(|w| self.datum.q_inner(mu, w))
            .collect()
    }

    pub fn k_mat(&self, mu: &Weight) -> SparseMat {
        SparseMat::identity(self.dim()).col_scaled(&self.k_diag(mu))
    }

    /// Projection onto one weight space.
    pub fn weight_projection(&self, eta: &Weight) -> SparseMat {
        let mut m = SparseMat::zero(self.dim(), self.dim());
        for (b, w) in self.weights.iter().enumerate() {
            if w == eta {
                m.set(b, b, QScalar::one());
            }
        }
        m
    }

    fn symbol_product(&self, acc: &SparseMat, s: &GenSymbol) -> SparseMat {
        match s {
            GenSymbol::E(i) => acc.mul(&self.e_action[*i]),
            GenSymbol::F(i) => acc.mul(&self.f_action[*i]),
            GenSymbol::K(mu) => acc.col_scaled(&self.k_diag(mu)),
        }
    }

    /// Matrix of an algebra element.  Words are visited in sorted order and
    /// partial products of shared prefixes are reused.
    pub fn evaluate(&self, x: &AlgebraElement) -> SparseMat {
        let n = self.dim();
        let mut acc = SparseMat::zero(n, n);
        let identity = SparseMat::identity(n);
        let mut prefix: Vec<SparseMat> = Vec::new();
        let mut prev: Word = Vec::new();
        for (word, c) in x.terms() {
            let mut common = 0;
            while common < prev.len() && common < word.len() && prev[common] == word[common] {
                common += 1;
            }
            prefix.truncate(common);
            for s in &word[common..] {
                let top = prefix.last().unwrap_or(&identity);
                prefix.push(self.symbol_product(top, s));
            }
            acc.add_scaled_assign(prefix.last().unwrap_or(&identity), c);
            prev = word.clone();
        }
        acc
    }
}

/// Build the simple integrable module of a dominant highest weight.
pub fn highest_weight_module(alg: &Algebra, lambda: &Weight) -> crate::Result<Module> {
    if !lambda.is_dominant() {
        return Err(crate::Error::NonDominantWeight(lambda.to_string()));
    }
    let datum = alg.datum().clone();
    let rank = datum.rank();
    let depth_cap = datum.depth_bound(lambda);

    let mut weights: Vec<Weight> = vec![lambda.clone()];
    // Per generator, column b holds F_i b (resp. E_i b) over the global basis.
    let mut f_cols: Vec<Vec<SparseVec>> = vec![Vec::new(); rank];
    let mut e_cols: Vec<Vec<SparseVec>> = vec![vec![SparseVec::new()]; rank];

    // Basis indices of the previous layer and its Gram pairings.
    let mut prev_layer: Vec<usize> = vec![0];
    let mut prev_gram: BTreeMap<(usize, usize), QScalar> = BTreeMap::new();
    prev_gram.insert((0, 0), QScalar::one());

    let mut depth = 0;
    while !prev_layer.is_empty() {
        depth += 1;
        assert!(depth <= depth_cap + 1, "layer depth exceeded the hard bound");

        // Candidate vectors F_i b, grouped by weight.
        let mut groups: BTreeMap<Weight, Vec<(usize, usize)>> = BTreeMap::new();
        for &b in &prev_layer {
            for i in 0..rank {
                let w = &weights[b] - &datum.simple_root(i);
                groups.entry(w).or_default().push((i, b));
            }
        }

        let mut new_layer: Vec<usize> = Vec::new();
        let mut new_gram: BTreeMap<(usize, usize), QScalar> = BTreeMap::new();
        // Deferred F-columns, keyed by (generator, source index) so they can
        // be appended in source order after all weight groups are handled.
        let mut pending_f: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();

        for (weight, cands) in &groups {
            let n = cands.len();
            // Gram block of the candidates via the layer below:
            // <F_i b, F_j b'> = <b, F_j (E_i b')> + [wt(b')(i-th coroot)] <b, b'>.
            let mut gram = vec![vec![QScalar::zero(); n]; n];
            for (col, &(j, bp)) in cands.iter().enumerate() {
                for (row, &(i, b)) in cands.iter().enumerate() {
                    let mut acc = QScalar::zero();
                    // F_j applied to the column E_i b'.
                    let mut fj_ei = SparseVec::new();
                    for (k, c) in &e_cols[i][bp] {
                        axpy(&mut fj_ei, c, &f_cols[j][*k]);
                    }
                    for (m, c) in &fj_ei {
                        if let Some(g) = pair_lookup(&prev_gram, b, *m) {
                            acc += &(c * g);
                        }
                    }
                    if i == j {
                        if let Some(g) = pair_lookup(&prev_gram, b, bp) {
                            let m = weights[bp].coroot_pairing(i);
                            acc += &(&q_int_signed(alg, m, datum.symmetrizer(i)) * g);
                        }
                    }
                    gram[row][col] = acc;
                }
            }
            for r in 0..n {
                for c in 0..r {
                    debug_assert_eq!(gram[r][c], gram[c][r], "contravariant form is symmetric");
                }
            }

            // The column rank profile of a symmetric matrix indexes a
            // nonsingular principal block; those candidates become basis
            // vectors of the quotient.
            let pivots = column_rank_profile(&gram);
            if cfg!(debug_assertions) {
                let block: Vec<Vec<QScalar>> = pivots
                    .iter()
                    .map(|r| pivots.iter().map(|s| gram[*r][*s].clone()).collect())
                    .collect();
                debug_assert_eq!(crate::linalg::dense_rank(block), pivots.len());
            }

            // Admit the pivots as new basis vectors.
            let mut pivot_global: Vec<usize> = Vec::with_capacity(pivots.len());
            for &c in &pivots {
                let (i, b) = cands[c];
                let g = weights.len();
                weights.push(weight.clone());
                pivot_global.push(g);
                new_layer.push(g);
                let mut col = SparseVec::new();
                col.insert(g, QScalar::one());
                pending_f.insert((i, b), col);
                // E_j (F_i b) = F_i (E_j b) + [j == i] [wt(b)(coroot)] b.
                for j in 0..rank {
                    let mut col = SparseVec::new();
                    for (k, cc) in &e_cols[j][b] {
                        axpy(&mut col, cc, &f_cols[i][*k]);
                    }
                    let m = weights[b].coroot_pairing(j);
                    if j == i && m != 0 {
                        let coeff = q_int_signed(alg, m, datum.symmetrizer(j));
                        axpy(&mut col, &coeff, &unit_vec(b));
                    }
                    e_cols[j].push(col);
                }
            }
            for (a, &ga) in pivot_global.iter().enumerate() {
                for (bb, &gb) in pivot_global.iter().enumerate() {
                    let v = &gram[pivots[a]][pivots[bb]];
                    if !v.is_zero() {
                        new_gram.insert((ga, gb), v.clone());
                    }
                }
            }

            // Express every non-pivot candidate through the pivots.
            for c in 0..n {
                if pivots.contains(&c) {
                    continue;
                }
                let (i, b) = cands[c];
                let col = if pivots.is_empty() {
                    SparseVec::new()
                } else {
                    let a: Vec<Vec<QScalar>> = pivots
                        .iter()
                        .map(|r| pivots.iter().map(|s| gram[*r][*s].clone()).collect())
                        .collect();
                    let rhs: Vec<QScalar> =
                        pivots.iter().map(|r| gram[*r][c].clone()).collect();
                    let x = solve_dense(a, rhs).expect("pivot Gram block is nonsingular");
                    let mut col = SparseVec::new();
                    for (k, coeff) in x.into_iter().enumerate() {
                        if !coeff.is_zero() {
                            col.insert(pivot_global[k], coeff);
                        }
                    }
                    col
                };
                pending_f.insert((i, b), col);
            }
        }

        for ((i, b), col) in pending_f {
            debug_assert_eq!(f_cols[i].len(), b, "one F-column per basis vector");
            f_cols[i].push(col);
        }

        prev_layer = new_layer;
        prev_gram = new_gram;
    }

    let dim = weights.len();
    let finalize = |cols: Vec<SparseVec>| -> SparseMat {
        let mut m = SparseMat::zero(dim, dim);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col {
                m.set(i, j, v);
            }
        }
        m
    };
    // The last layer is empty, so its F-columns were never pushed; they are
    // zero because the module has no deeper vectors.
    let f_action: Vec<SparseMat> = f_cols
        .into_iter()
        .map(|mut cols| {
            cols.resize(dim, SparseVec::new());
            finalize(cols)
        })
        .collect();
    let e_action: Vec<SparseMat> = e_cols.into_iter().map(finalize).collect();

    Ok(Module {
        datum,
        weights,
        e_action,
        f_action,
    })
}

fn unit_vec(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, QScalar::one());
    v
}

fn pair_lookup<'a>(
    gram: &'a BTreeMap<(usize, usize), QScalar>,
    a: usize,
    b: usize,
) -> Option<&'a QScalar> {
    gram.get(&(a, b))
}

/// Tensor product, acting through the coproduct: the first leg picks up the
/// torus factor for raising operators, the second for lowering ones.
pub fn tensor_module(alg: &Algebra, left: &Module, right: &Module) -> Module {
    let datum = alg.datum().clone();
    let (dl, dr) = (left.dim(), right.dim());
    let dim = dl * dr;
    let idx = |a: usize, b: usize| a * dr + b;
    let weights: Vec<Weight> = (0..dim)
        .map(|p| left.weight(p / dr) + right.weight(p % dr))
        .collect();
    let mut e_action = Vec::with_capacity(datum.rank());
    let mut f_action = Vec::with_capacity(datum.rank());
    for i in 0..datum.rank() {
        let alpha = datum.simple_root(i);
        let mut e = SparseMat::zero(dim, dim);
        let mut f = SparseMat::zero(dim, dim);
        for a in 0..dl {
            for b in 0..dr {
                let j = idx(a, b);
                // E_i (x (x) y) = E_i x (x) y + q^{(alpha_i, wt x)} x (x) E_i y.
                for (ap, v) in left.e_mat(i).col(a) {
                    e.add_to(idx(*ap, b), j, v);
                }
                let kx = datum.q_inner(&alpha, left.weight(a));
                for (bp, v) in right.e_mat(i).col(b) {
                    e.add_to(idx(a, *bp), j, &(&kx * v));
                }
                // F_i (x (x) y) = q^{-(alpha_i, wt y)} F_i x (x) y + x (x) F_i y.
                let ky = datum
                    .q_inner(&alpha, right.weight(b))
                    .inverse()
                    .expect("powers of q are invertible");
                for (ap, v) in left.f_mat(i).col(a) {
                    f.add_to(idx(*ap, b), j, &(&ky * v));
                }
                for (bp, v) in right.f_mat(i).col(b) {
                    f.add_to(idx(a, *bp), j, v);
                }
            }
        }
        e_action.push(e);
        f_action.push(f);
    }
    Module {
        datum,
        weights,
        e_action,
        f_action,
    }
}

/// Whether two algebra elements agree on every module of a battery.
///
/// Words inside the E-block (and F-block) of the normal form are kept free,
/// so two expressions for the same algebra element can differ as maps; this
/// probe separates them by evaluation instead.  A `false` answer is a proof
/// of inequality, while `true` is evidence whose strength grows with the
/// battery.
pub fn equality_probe(a: &AlgebraElement, b: &AlgebraElement, battery: &[Module]) -> bool {
    let diff = a.minus(b);
    battery.iter().all(|m| m.evaluate(&diff).is_zero())
}

/// Dominant weight multiplicities by the recursive character formula
/// (independent of the module construction).
pub fn dominant_multiplicities(
    datum: &CartanDatum,
    lambda: &Weight,
) -> BTreeMap<Weight, u64> {
    assert!(lambda.is_dominant());
    let rank = datum.rank();
    let rho = datum.rho().clone();
    // Enumerate dominant mu = lambda - beta over the box of root coordinates
    // bounded by lambda - w0(lambda).
    let span = &*lambda - &datum.antidominant(lambda);
    let bounds = datum
        .integer_root_coords(&span)
        .expect("lambda - w0(lambda) lies in the root lattice");
    let mut dominated: Vec<Weight> = Vec::new();
    let mut stack: Vec<Vec<i64>> = vec![Vec::new()];
    while let Some(partial) = stack.pop() {
        if partial.len() == rank {
            let mu = &*lambda - &datum.from_root_coords(&partial);
            if mu.is_dominant() {
                dominated.push(mu);
            }
            continue;
        }
        let k = partial.len();
        for v in 0..=bounds[k] {
            let mut next = partial.clone();
            next.push(v);
            stack.push(next);
        }
    }
    dominated.sort_by(|a, b| {
        let da = datum.height(&(lambda - a)).unwrap();
        let db = datum.height(&(lambda - b)).unwrap();
        da.cmp(&db)
    });

    let dominant_rep = |mut w: Weight| -> Weight {
        loop {
            match (0..rank).find(|i| w.coroot_pairing(*i) < 0) {
                Some(i) => w = datum.simple_reflection(i, &w),
                None => return w,
            }
        }
    };

    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for mu in dominated {
        if mu == *lambda {
            mult.insert(mu, 1);
            continue;
        }
        let lam_rho = lambda + &rho;
        let mu_rho = &mu + &rho;
        let denom = datum.inner(&lam_rho, &lam_rho) - datum.inner(&mu_rho, &mu_rho);
        let mut num = BigRational::zero();
        for alpha in datum.positive_roots() {
            let mut k = 1i64;
            loop {
                let nu = &mu + &alpha.scaled(k);
                let gap = lambda - &nu;
                let Some(cs) = datum.integer_root_coords(&gap) else {
                    break;
                };
                if cs.iter().any(|c| *c < 0) {
                    break;
                }
                let m = mult
                    .get(&dominant_rep(nu.clone()))
                    .copied()
                    .unwrap_or(0);
                if m > 0 {
                    num += BigRational::from_integer(BigInt::from(m))
                        * datum.inner(&nu, alpha)
                        * BigRational::from_integer(BigInt::from(2));
                }
                k += 1;
            }
        }
        let value = num / denom;
        assert!(value.is_integer(), "multiplicity recursion must be integral");
        let value = value.to_integer().to_u64().expect("multiplicity overflow");
        if value > 0 {
            mult.insert(mu, value);
        }
    }
    mult
}

/// Full character from the dominant multiplicities, by Weyl symmetry.
pub fn full_character(datum: &CartanDatum, lambda: &Weight) -> BTreeMap<Weight, u64> {
    let mut out = BTreeMap::new();
    for (mu, m) in dominant_multiplicities(datum, lambda) {
        for nu in datum.weyl_orbit(&mu) {
            out.insert(nu, m);
        }
    }
    out
}

/// Dimension by the product formula over positive roots.
pub fn weyl_dimension(datum: &CartanDatum, lambda: &Weight) -> BigInt {
    let rho = datum.rho();
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    let lam_rho = lambda + rho;
    for alpha in datum.positive_roots() {
        num *= datum.inner(&lam_rho, alpha);
        den *= datum.inner(rho, alpha);
    }
    let d = num / den;
    assert!(d.is_integer(), "dimension formula must be integral");
    d.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::CartanDatum;

    fn alg(name: &str) -> Algebra {
        Algebra::new(CartanDatum::from_name(name).unwrap())
    }

    fn wt(cs: &[i64]) -> Weight {
        Weight::new(cs.to_vec())
    }

    #[test]
    fn rank_one_dimensions_and_actions() {
        let a1 = alg("A1");
        for n in 0..=4i64 {
            let m = highest_weight_module(&a1, &wt(&[n])).unwrap();
            assert_eq!(m.dim(), (n + 1) as usize);
            // Weights run lambda, lambda - alpha, ...
            for (k, w) in m.weights().iter().enumerate() {
                assert_eq!(w.coords()[0], n - 2 * k as i64);
            }
        }
        // V(2): E F v0 = [2] v0.
        let m = highest_weight_module(&a1, &wt(&[2])).unwrap();
        let ef = m.e_mat(0).mul(m.f_mat(0));
        assert_eq!(ef.entry(0, 0), a1.field().q_int(2, 1));
        // F v1 = v2, E v2 = [2][1] v1.
        assert_eq!(m.f_mat(0).entry(2, 1), QScalar::one());
        assert_eq!(m.e_mat(0).entry(1, 2), a1.field().q_int(2, 1));
    }

    #[test]
    fn dimensions_match_the_product_formula() {
        let cases = [
            ("A2", vec![0, 0], 1),
            ("A2", vec![1, 0], 3),
            ("A2", vec![0, 1], 3),
            ("A2", vec![1, 1], 8),
            ("A2", vec![2, 0], 6),
            ("B2", vec![1, 0], 5),
            ("B2", vec![0, 1], 4),
            ("B2", vec![1, 1], 16),
            ("B2", vec![0, 2], 10),
            ("G2", vec![1, 0], 7),
            ("G2", vec![0, 1], 14),
        ];
        for (name, coords, dim) in cases {
            let a = alg(name);
            let lambda = wt(&coords);
            assert_eq!(
                weyl_dimension(a.datum(), &lambda),
                BigInt::from(dim),
                "{name} {lambda} formula"
            );
            let m = highest_weight_module(&a, &lambda).unwrap();
            assert_eq!(m.dim(), dim as usize, "{name} {lambda} construction");
        }
    }

    #[test]
    fn characters_match_the_recursion() {
        for (name, coords) in [
            ("A2", vec![1, 1]),
            ("B2", vec![1, 1]),
            ("G2", vec![0, 1]),
            ("A3", vec![0, 1, 0]),
        ] {
            let a = alg(name);
            let lambda = wt(&coords);
            let m = highest_weight_module(&a, &lambda).unwrap();
            assert_eq!(
                m.character(),
                full_character(a.datum(), &lambda),
                "{name} {lambda}"
            );
        }
        // The adjoint module of A2 has a two-dimensional zero weight space.
        let a2 = alg("A2");
        let m = highest_weight_module(&a2, &wt(&[1, 1])).unwrap();
        assert_eq!(m.character()[&Weight::zero(2)], 2);
    }

    #[test]
    fn defining_relations_hold_on_modules() {
        for (name, coords) in [("A2", vec![1, 1]), ("B2", vec![0, 1]), ("G2", vec![1, 0])] {
            let a = alg(name);
            let m = highest_weight_module(&a, &wt(&coords)).unwrap();
            let rank = a.rank();
            for i in 0..rank {
                for j in 0..rank {
                    // [E_i, F_j] = delta_ij (K_i - K_i^{-1})/(q_i - q_i^{-1}).
                    let lhs = m
                        .e_mat(i)
                        .mul(m.f_mat(j))
                        .sub(&m.f_mat(j).mul(m.e_mat(i)));
                    let rhs = if i == j {
                        let alpha = a.datum().simple_root(i);
                        m.k_mat(&alpha)
                            .sub(&m.k_mat(&-&alpha))
                            .scaled(a.inv_qi_diff(i))
                    } else {
                        SparseMat::zero(m.dim(), m.dim())
                    };
                    assert_eq!(lhs, rhs, "{name} i={i} j={j}");
                    if i != j {
                        // Serre combinations vanish on integrable modules.
                        assert!(m.evaluate(&a.serre_e(i, j)).is_zero(), "{name} E-Serre");
                        assert!(m.evaluate(&a.serre_f(i, j)).is_zero(), "{name} F-Serre");
                    }
                }
            }
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism() {
        let a2 = alg("A2");
        let m = highest_weight_module(&a2, &wt(&[1, 1])).unwrap();
        let samples = [
            a2.e(0),
            a2.f(1),
            a2.k(&wt(&[1, -1])),
            a2.multiply(&a2.e(0), &a2.f(0)),
            a2.multiply_many(&[&a2.f(1), &a2.e(0), &a2.e(1)]),
        ];
        for x in &samples {
            for y in &samples {
                let lhs = m.evaluate(&a2.multiply(x, y));
                let rhs = m.evaluate(x).mul(&m.evaluate(y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn tensor_squares() {
        let a1 = alg("A1");
        let v = highest_weight_module(&a1, &wt(&[1])).unwrap();
        let vv = tensor_module(&a1, &v, &v);
        assert_eq!(vv.dim(), 4);
        let ch = vv.character();
        assert_eq!(ch[&wt(&[2])], 1);
        assert_eq!(ch[&wt(&[0])], 2);
        assert_eq!(ch[&wt(&[-2])], 1);
        // The tensor action still satisfies the commutation relation.
        let lhs = vv
            .e_mat(0)
            .mul(vv.f_mat(0))
            .sub(&vv.f_mat(0).mul(vv.e_mat(0)));
        let alpha = a1.datum().simple_root(0);
        let rhs = vv
            .k_mat(&alpha)
            .sub(&vv.k_mat(&-&alpha))
            .scaled(a1.inv_qi_diff(0));
        assert_eq!(lhs, rhs);

        let a2 = alg("A2");
        let v1 = highest_weight_module(&a2, &wt(&[1, 0])).unwrap();
        let t = tensor_module(&a2, &v1, &v1);
        assert_eq!(t.dim(), 9);
        for i in 0..2 {
            for j in 0..2 {
                if i != j {
                    assert!(t.evaluate(&a2.serre_e(i, j)).is_zero());
                }
            }
        }
    }

    #[test]
    fn non_dominant_weights_rejected() {
        let a2 = alg("A2");
        assert!(matches!(
            highest_weight_module(&a2, &wt(&[-1, 0])),
            Err(crate::Error::NonDominantWeight(_))
        ));
    }

    #[test]
    fn big_adjoint_character() {
        // G2 adjoint: dimension 14, zero weight space of dimension 2, and
        // the nonzero weights are exactly the twelve roots.
        let g2 = alg("G2");
        let m = highest_weight_module(&g2, &wt(&[0, 1])).unwrap();
        assert_eq!(m.dim(), 14);
        let ch = m.character();
        assert_eq!(ch[&Weight::zero(2)], 2);
        let nonzero: Vec<&Weight> = ch.keys().filter(|w| !w.is_zero()).collect();
        assert_eq!(nonzero.len(), 12);
        for w in nonzero {
            let neg = -w;
            assert!(ch.contains_key(&neg));
        }
    }
}
