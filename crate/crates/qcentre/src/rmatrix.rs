//! Quasi-R-matrix, transfer operators and central elements.
//!
//! The quasi-R-matrix is a product, over the positive roots in convex
//! order, of rank-one exponentials in a lowering and a raising root vector.
//! Keeping one tensor leg as an explicit module matrix and the other leg
//! symbolic gives operator-valued matrices; sandwiching with the diagonal
//! torus conjugator and taking a weighted diagonal trace yields elements of
//! the centre, one family member per power of the transfer operator.
//! An independent closed-form summation over pairs of multi-exponents
//! reproduces the same elements and serves as a cross-check.

use crate::braid::{root_vectors, RootVectors};
use crate::error::Result;
use crate::linalg::SparseMat;
use crate::qfield::QScalar;
use crate::repbuilder::{highest_weight_module, Module};
use crate::rootdata::Weight;
use crate::uqalg::{Algebra, AlgebraElement, TensorElement};
use std::collections::BTreeMap;

/// Operator-valued matrix over a module basis: entry (row, col) is an
/// algebra element.  Composition multiplies matrices of operators.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorOperator {
    dim: usize,
    entries: BTreeMap<(usize, usize), AlgebraElement>,
}

impl TensorOperator {
    pub fn zero(dim: usize) -> Self {
        TensorOperator {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = BTreeMap::new();
        for b in 0..dim {
            entries.insert((b, b), AlgebraElement::one());
        }
        TensorOperator { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &AlgebraElement)> {
        self.entries.iter()
    }

    pub fn entry(&self, i: usize, j: usize) -> AlgebraElement {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(AlgebraElement::zero)
    }

    pub fn add_to_entry(&mut self, i: usize, j: usize, x: &AlgebraElement) {
        if x.is_zero() {
            return;
        }
        let cur = self.entries.entry((i, j)).or_insert_with(AlgebraElement::zero);
        *cur = cur.plus(x);
        if cur.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    /// Matrix with every entry the given element scaled by the matrix entry.
    pub fn from_matrix_times(mat: &SparseMat, x: &AlgebraElement) -> Self {
        let mut out = TensorOperator::zero(mat.rows());
        for j in 0..mat.ncols() {
            for (i, v) in mat.col(j) {
                out.add_to_entry(*i, j, &x.scaled(v));
            }
        }
        out
    }

    pub fn plus(&self, other: &TensorOperator) -> TensorOperator {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for ((i, j), x) in &other.entries {
            out.add_to_entry(*i, *j, x);
        }
        out
    }

    pub fn minus(&self, other: &TensorOperator) -> TensorOperator {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for ((i, j), x) in &other.entries {
            out.add_to_entry(*i, *j, &x.negated());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Operator product: `(self . other)[i,j] = sum_k self[i,k] other[k,j]`,
    /// multiplying entries in the algebra.
    pub fn compose(&self, alg: &Algebra, other: &TensorOperator) -> TensorOperator {
        debug_assert_eq!(self.dim, other.dim);
        let mut by_row: BTreeMap<usize, Vec<(usize, &AlgebraElement)>> = BTreeMap::new();
        for ((k, j), x) in &other.entries {
            by_row.entry(*k).or_default().push((*j, x));
        }
        let mut out = TensorOperator::zero(self.dim);
        for ((i, k), left) in &self.entries {
            let Some(row) = by_row.get(k) else { continue };
            for (j, right) in row {
                out.add_to_entry(*i, *j, &alg.multiply(left, right));
            }
        }
        out
    }

    /// Weighted sum of diagonal entries.
    pub fn weighted_trace(&self, weights: &[QScalar]) -> AlgebraElement {
        debug_assert_eq!(self.dim, weights.len());
        let mut acc = AlgebraElement::zero();
        for b in 0..self.dim {
            if let Some(x) = self.entries.get(&(b, b)) {
                acc = acc.plus(&x.scaled(&weights[b]));
            }
        }
        acc
    }

    /// Evaluate the symbolic leg on a second module, producing a plain
    /// matrix on the tensor product (first-module index major).
    pub fn evaluate_second(&self, second: &Module) -> SparseMat {
        let dw = second.dim();
        let mut out = SparseMat::zero(self.dim * dw, self.dim * dw);
        for ((a, b), x) in &self.entries {
            let m = second.evaluate(x);
            for j in 0..dw {
                for (i, v) in m.col(j) {
                    out.add_to(a * dw + i, b * dw + j, v);
                }
            }
        }
        out
    }
}

/// Smallest power at which a matrix vanishes (for nilpotent input).
fn nilpotency_degree(m: &SparseMat) -> usize {
    let mut p = 1;
    let mut acc = m.clone();
    while !acc.is_zero() {
        acc = acc.mul(m);
        p += 1;
        assert!(p <= m.rows() + 1, "matrix is not nilpotent");
    }
    p
}

/// Coefficient of the r-th term of a rank-one exponential factor:
/// `q_beta^{r(r-1)/2} (q_beta - q_beta^{-1})^r / [r]_{q_beta}!`.
fn theta_coefficient(alg: &Algebra, d_beta: i64, r: u64) -> QScalar {
    let ell = alg.field().ell();
    let q_beta = QScalar::v_pow(2 * ell * d_beta);
    let q_beta_inv = q_beta.inverse().expect("powers of q are invertible");
    let mut c = q_beta.pow((r * (r.saturating_sub(1)) / 2) as u32);
    c = &c * &(&q_beta - &q_beta_inv).pow(r as u32);
    let fact = alg.field().q_factorial(r, d_beta);
    &c * &fact.inverse().expect("q-factorial is nonzero")
}

/// Everything derived from one module and one convex order.
pub struct TransferData {
    pub module: Module,
    pub roots: RootVectors,
    /// Matrices of the lowering root vectors and their powers, index
    /// `[j][r]` for the r-th power of the j-th root vector.
    f_powers: Vec<Vec<SparseMat>>,
    e_powers: Vec<Vec<SparseMat>>,
    /// Symbolic powers of the root vectors.
    f_sym: Vec<Vec<AlgebraElement>>,
    e_sym: Vec<Vec<AlgebraElement>>,
    /// Per-root symmetrizers (beta, beta)/2.
    d_betas: Vec<i64>,
}

impl TransferData {
    pub fn new(alg: &Algebra, module: Module, word: &[usize]) -> Result<Self> {
        let roots = root_vectors(alg, word)?;
        let mut f_powers = Vec::new();
        let mut e_powers = Vec::new();
        let mut f_sym = Vec::new();
        let mut e_sym = Vec::new();
        let mut d_betas = Vec::new();
        for j in 0..roots.roots.len() {
            let fm = module.evaluate(&roots.f_vectors[j]);
            let em = module.evaluate(&roots.e_vectors[j]);
            let bound = nilpotency_degree(&fm);
            debug_assert_eq!(bound, nilpotency_degree(&em));
            let mut fp = vec![SparseMat::identity(module.dim())];
            let mut ep = vec![SparseMat::identity(module.dim())];
            let mut fs = vec![AlgebraElement::one()];
            let mut es = vec![AlgebraElement::one()];
            for r in 1..bound {
                fp.push(fp[r - 1].mul(&fm));
                ep.push(ep[r - 1].mul(&em));
                fs.push(alg.multiply(&fs[r - 1], &roots.f_vectors[j]));
                es.push(alg.multiply(&es[r - 1], &roots.e_vectors[j]));
            }
            f_powers.push(fp);
            e_powers.push(ep);
            f_sym.push(fs);
            e_sym.push(es);
            d_betas.push(alg.datum().root_symmetrizer(&roots.roots[j]));
        }
        Ok(TransferData {
            module,
            roots,
            f_powers,
            e_powers,
            f_sym,
            e_sym,
            d_betas,
        })
    }

    pub fn for_weight(alg: &Algebra, lambda: &Weight, word: Option<&[usize]>) -> Result<Self> {
        let module = highest_weight_module(alg, lambda)?;
        let word_vec = match word {
            Some(w) => w.to_vec(),
            None => alg.datum().canonical_reduced_word(),
        };
        Self::new(alg, module, &word_vec)
    }

    pub fn num_roots(&self) -> usize {
        self.roots.roots.len()
    }

    /// Exclusive exponent bound for the j-th root vector on this module.
    pub fn power_bound(&self, j: usize) -> usize {
        self.f_powers[j].len()
    }

    /// Quasi-R-matrix with the lowering leg evaluated on the module and the
    /// raising leg symbolic, as the convex-ordered product of rank-one
    /// factors (the first root's factor leftmost).
    pub fn quasi_r_lower(&self, alg: &Algebra) -> TensorOperator {
        let mut acc = TensorOperator::identity(self.module.dim());
        for j in 0..self.num_roots() {
            let mut theta = TensorOperator::zero(self.module.dim());
            for r in 0..self.power_bound(j) {
                let c = theta_coefficient(alg, self.d_betas[j], r as u64);
                let sym = self.e_sym[j][r].scaled(&c);
                theta = theta.plus(&TensorOperator::from_matrix_times(
                    &self.f_powers[j][r],
                    &sym,
                ));
            }
            acc = acc.compose(alg, &theta);
        }
        acc
    }

    /// Same product with the raising leg evaluated and the lowering leg
    /// symbolic (the leg-flipped quasi-R-matrix).
    pub fn quasi_r_upper(&self, alg: &Algebra) -> TensorOperator {
        let mut acc = TensorOperator::identity(self.module.dim());
        for j in 0..self.num_roots() {
            let mut theta = TensorOperator::zero(self.module.dim());
            for r in 0..self.power_bound(j) {
                let c = theta_coefficient(alg, self.d_betas[j], r as u64);
                let sym = self.f_sym[j][r].scaled(&c);
                theta = theta.plus(&TensorOperator::from_matrix_times(
                    &self.e_powers[j][r],
                    &sym,
                ));
            }
            acc = acc.compose(alg, &theta);
        }
        acc
    }

    /// Diagonal conjugator: entry (b, b) is the torus element of the b-th
    /// basis weight.
    pub fn k_conjugator(&self, alg: &Algebra) -> TensorOperator {
        let mut out = TensorOperator::zero(self.module.dim());
        for b in 0..self.module.dim() {
            out.add_to_entry(b, b, &alg.k(self.module.weight(b)));
        }
        out
    }

    /// The transfer operator whose diagonal traces are central.
    pub fn gamma(&self, alg: &Algebra) -> TensorOperator {
        let k = self.k_conjugator(alg);
        let lower = k.compose(alg, &self.quasi_r_lower(alg));
        let upper = k.compose(alg, &self.quasi_r_upper(alg));
        upper.compose(alg, &lower)
    }

    /// Trace weights `q^{(2 rho, wt_b)}`.
    pub fn trace_weights(&self, alg: &Algebra) -> Vec<QScalar> {
        let two_rho = alg.datum().rho().scaled(2);
        self.module
            .weights()
            .iter()
            .map(|w| alg.datum().q_inner(&two_rho, w))
            .collect()
    }
}

/// The m-th central element attached to a dominant weight, by the operator
/// route: the weighted diagonal trace of the m-th power of the transfer
/// operator.
pub fn central_element(
    alg: &Algebra,
    lambda: &Weight,
    m: u32,
    word: Option<&[usize]>,
) -> Result<AlgebraElement> {
    let data = TransferData::for_weight(alg, lambda, word)?;
    central_element_from(alg, &data, m)
}

/// Operator-route central element from precomputed transfer data.
pub fn central_element_from(
    alg: &Algebra,
    data: &TransferData,
    m: u32,
) -> Result<AlgebraElement> {
    if m == 0 {
        return Err(crate::Error::PowerRange);
    }
    let gamma = data.gamma(alg);
    let mut power = gamma.clone();
    for _ in 1..m {
        power = power.compose(alg, &gamma);
    }
    Ok(power.weighted_trace(&data.trace_weights(alg)))
}

/// First central element by the closed summation over pairs of
/// multi-exponents, grouped by the common lattice drop.  Independent of the
/// operator composition; used to cross-check it.
pub fn central_element_closed(
    alg: &Algebra,
    lambda: &Weight,
    word: Option<&[usize]>,
) -> Result<AlgebraElement> {
    let data = TransferData::for_weight(alg, lambda, word)?;
    central_element_closed_from(alg, &data)
}

pub fn central_element_closed_from(alg: &Algebra, data: &TransferData) -> Result<AlgebraElement> {
    let datum = alg.datum();
    let module = &data.module;
    let n = data.num_roots();

    // Multi-exponents bucketed by their weighted root sum.
    let mut buckets: BTreeMap<Weight, Vec<Vec<usize>>> = BTreeMap::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(partial) = stack.pop() {
        if partial.len() == n {
            let mut nu = Weight::zero(datum.rank());
            for (j, r) in partial.iter().enumerate() {
                nu = &nu + &data.roots.roots[j].scaled(*r as i64);
            }
            buckets.entry(nu).or_default().push(partial);
            continue;
        }
        let j = partial.len();
        for r in 0..data.power_bound(j) {
            let mut next = partial.clone();
            next.push(r);
            stack.push(next);
        }
    }

    // Symbolic monomials and module matrices for one multi-exponent, in the
    // same convex-order direction the factorised product multiplies in.
    let f_monomial = |idx: &[usize]| -> AlgebraElement {
        let mut acc = AlgebraElement::one();
        for j in 0..n {
            if idx[j] > 0 {
                acc = alg.multiply(&acc, &data.f_sym[j][idx[j]]);
            }
        }
        acc
    };
    let e_monomial = |idx: &[usize]| -> AlgebraElement {
        let mut acc = AlgebraElement::one();
        for j in 0..n {
            if idx[j] > 0 {
                acc = alg.multiply(&acc, &data.e_sym[j][idx[j]]);
            }
        }
        acc
    };
    let f_matrix = |idx: &[usize]| -> SparseMat {
        let mut acc = SparseMat::identity(module.dim());
        for j in 0..n {
            if idx[j] > 0 {
                acc = acc.mul(&data.f_powers[j][idx[j]]);
            }
        }
        acc
    };
    let e_matrix = |idx: &[usize]| -> SparseMat {
        let mut acc = SparseMat::identity(module.dim());
        for j in 0..n {
            if idx[j] > 0 {
                acc = acc.mul(&data.e_powers[j][idx[j]]);
            }
        }
        acc
    };
    let d_coeff = |idx: &[usize]| -> QScalar {
        let mut acc = QScalar::one();
        for j in 0..n {
            acc = &acc * &theta_coefficient(alg, data.d_betas[j], idx[j] as u64);
        }
        acc
    };

    // Exchange factor of the torus element of nu past a word of grading
    // -nu, probed in the algebra itself.
    let exchange_factor = |nu: &Weight, f_t: &AlgebraElement| -> QScalar {
        if f_t.num_terms() == 0 || nu.is_zero() {
            return QScalar::one();
        }
        let left = alg.multiply(&alg.k(nu), f_t);
        let right = alg.multiply(f_t, &alg.k(nu));
        let (w, c) = left.terms().next().expect("homogeneous and nonzero");
        let base = right.coeff(w);
        let factor = &c.clone()
            * &base
                .inverse()
                .expect("matching monomial present on both sides");
        debug_assert_eq!(left, right.scaled(&factor));
        factor
    };

    let two_rho = datum.rho().scaled(2);
    let weight_spaces = module.weight_spaces();
    let mut out = AlgebraElement::zero();
    for (nu, idxs) in &buckets {
        for t in idxs {
            let ft = f_monomial(t);
            let et = e_matrix(t);
            let exch = exchange_factor(nu, &ft);
            for r in idxs {
                let er = e_monomial(r);
                let fr = f_matrix(r);
                let coeff_base = &(&d_coeff(r) * &d_coeff(t)) * &exch;
                // Module factor: E_t K_{-nu} F_r restricted to each weight
                // space.
                let k_inner = module.k_diag(&-nu);
                let composite = et.mul(&fr.row_scaled(&k_inner));
                for (mu, basis) in &weight_spaces {
                    let mut tr = QScalar::zero();
                    for b in basis {
                        tr = &tr + &composite.entry(*b, *b);
                    }
                    if tr.is_zero() {
                        continue;
                    }
                    let outer = &datum.q_inner(&two_rho, mu) * &(&coeff_base * &tr);
                    let k_weight = &mu.scaled(2) - nu;
                    let term =
                        alg.multiply(&alg.multiply(&ft, &alg.k(&k_weight)), &er);
                    out = out.plus(&term.scaled(&outer));
                }
            }
        }
    }
    Ok(out)
}

/// Evaluate the first leg of a two-leg tensor on a module, keeping the
/// second leg symbolic.
pub fn evaluate_first(module: &Module, t: &TensorElement) -> TensorOperator {
    let mut out = TensorOperator::zero(module.dim());
    for ((l, r), c) in t.terms() {
        let ml = module.evaluate(&AlgebraElement::from_term(l.clone(), c.clone()));
        let sym = AlgebraElement::from_term(r.clone(), QScalar::one());
        for j in 0..module.dim() {
            for (i, v) in ml.col(j) {
                out.add_to_entry(*i, j, &sym.scaled(v));
            }
        }
    }
    out
}

/// Evaluate a two-leg tensor on a pair of modules, first-module index major.
pub fn eval_tensor_element(
    first: &Module,
    second: &Module,
    t: &TensorElement,
) -> SparseMat {
    let (dv, dw) = (first.dim(), second.dim());
    let mut out = SparseMat::zero(dv * dw, dv * dw);
    for ((l, r), c) in t.terms() {
        let ml = first.evaluate(&AlgebraElement::from_term(l.clone(), c.clone()));
        let mr = second.evaluate(&AlgebraElement::from_term(r.clone(), QScalar::one()));
        for jv in 0..dv {
            for (iv, xv) in ml.col(jv) {
                for jw in 0..dw {
                    for (iw, xw) in mr.col(jw) {
                        out.add_to(iv * dw + iw, jv * dw + jw, &(xv * xw));
                    }
                }
            }
        }
    }
    out
}

/// Defect of the exchange identity on a pair of modules:
/// `R . cop(x) - twist(flip(cop(x))) . R`; zero iff the quasi-R-matrix
/// intertwines the two coproducts on this pair.
pub fn intertwining_defect(
    alg: &Algebra,
    data: &TransferData,
    second: &Module,
    x: &AlgebraElement,
) -> SparseMat {
    let r_mat = data.quasi_r_lower(alg).evaluate_second(second);
    let cop = alg.coproduct(x);
    let lhs = r_mat.mul(&eval_tensor_element(&data.module, second, &cop));
    let twisted = alg.twist(&cop.flipped());
    let rhs = eval_tensor_element(&data.module, second, &twisted).mul(&r_mat);
    lhs.sub(&rhs)
}
