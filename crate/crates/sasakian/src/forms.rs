//! Exterior algebra on the dual of a Lie algebra.
//!
//! A [`KForm`] stores coefficients on strictly increasing multi-indices;
//! evaluation on arbitrary argument tuples applies the sign of the sorting
//! permutation, and a repeated argument index evaluates to zero.  The
//! central operation is the Chevalley–Eilenberg differential
//!
//! ```text
//! (dφ)(x₀,…,x_k) = Σ_{i<j} (−1)^{i+j} φ([x_i,x_j], x₀,…,x̂_i,…,x̂_j,…,x_k)
//! ```
//!
//! under which `d² = 0` is equivalent to the Jacobi identity.  For 1-forms
//! this reduces to `dα(x, y) = −α([x, y])`, so a Lie algebra's structure
//! equations "d e^k = −Σ_{i<j} c_ij^k e^{ij}" are exactly the differentials
//! of the dual basis.

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{vec_zero, Matrix};
use crate::scalar::{Mode, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// An alternating k-form with [`Scalar`] coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct KForm {
    degree: usize,
    dim: usize,
    mode: Mode,
    /// strictly increasing index tuples (0-based) → nonzero coefficient
    coeffs: BTreeMap<Vec<usize>, Scalar>,
}

impl KForm {
    /// The zero k-form.
    pub fn zero(degree: usize, dim: usize, mode: Mode) -> Self {
        KForm {
            degree,
            dim,
            mode,
            coeffs: BTreeMap::new(),
        }
    }

    /// Build from `(indices, coefficient)` pairs.  Indices may arrive in any
    /// order; they are sorted with the permutation sign absorbed into the
    /// coefficient.  Repeated indices in one tuple are rejected.
    pub fn from_terms(
        degree: usize,
        dim: usize,
        mode: Mode,
        terms: &[(Vec<usize>, Scalar)],
    ) -> Result<Self> {
        let mut form = KForm::zero(degree, dim, mode);
        for (idx, c) in terms {
            if idx.len() != degree {
                return Err(Error::InvalidInput(format!(
                    "index tuple {idx:?} in a degree-{degree} form"
                )));
            }
            if c.mode() != mode {
                return Err(Error::ModeMismatch("form coefficient mode".into()));
            }
            form.add_term(idx, c)?;
        }
        Ok(form)
    }

    /// The dual basis covector `e^i`.
    pub fn basis_covector(dim: usize, i: usize, mode: Mode) -> Self {
        let mut f = KForm::zero(1, dim, mode);
        f.coeffs.insert(vec![i], Scalar::one(mode));
        f
    }

    /// A 1-form from its coefficient vector (`α = Σ v_i e^i`).
    pub fn from_covector(v: &[Scalar], mode: Mode) -> Self {
        let mut f = KForm::zero(1, v.len(), mode);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                f.coeffs.insert(vec![i], c.clone());
            }
        }
        f
    }

    /// Coefficient vector of a 1-form.
    pub fn to_covector(&self) -> Result<Vec<Scalar>> {
        if self.degree != 1 {
            return Err(Error::InvalidInput("to_covector on a form of degree ≠ 1".into()));
        }
        let mut v = vec_zero(self.dim, self.mode);
        for (idx, c) in &self.coeffs {
            v[idx[0]] = c.clone();
        }
        Ok(v)
    }

    /// The 2-form `ω(e_i, e_j) = m[i][j]` of an antisymmetric matrix.
    pub fn from_antisymmetric_matrix(m: &Matrix) -> Result<Self> {
        if m.rows != m.cols {
            return Err(Error::InvalidInput("2-form matrix must be square".into()));
        }
        let mut f = KForm::zero(2, m.rows, m.mode());
        for i in 0..m.rows {
            for j in i + 1..m.cols {
                if !(m.get(i, j) == &-m.get(j, i)) {
                    return Err(Error::InvalidInput(format!(
                        "matrix is not antisymmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
                if !m.get(i, j).is_zero() {
                    f.coeffs.insert(vec![i, j], m.get(i, j).clone());
                }
            }
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Iterate `(increasing indices, coefficient)` terms.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.coeffs.iter()
    }

    /// Coefficient on an increasing index tuple.
    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        self.coeffs
            .get(idx)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.mode))
    }

    fn add_term(&mut self, idx: &[usize], c: &Scalar) -> Result<()> {
        for &i in idx {
            if i >= self.dim {
                return Err(Error::InvalidInput(format!(
                    "form index {} out of range 1..={}",
                    i + 1,
                    self.dim
                )));
            }
        }
        let Some((sorted, sign)) = sort_with_sign(idx) else {
            return Ok(()); // repeated index → the term is zero
        };
        let add = if sign > 0 { c.clone() } else { -c };
        let entry = self
            .coeffs
            .entry(sorted.clone())
            .or_insert_with(|| Scalar::zero(self.mode));
        *entry = &*entry + &add;
        if entry.is_zero() {
            self.coeffs.remove(&sorted);
        }
        Ok(())
    }

    pub fn add(&self, other: &KForm) -> KForm {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_term(idx, c).expect("indices already valid");
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> KForm {
        let mut out = KForm::zero(self.degree, self.dim, self.mode);
        if c.is_zero() {
            return out;
        }
        for (idx, v) in &self.coeffs {
            let w = c * v;
            if !w.is_zero() {
                out.coeffs.insert(idx.clone(), w);
            }
        }
        out
    }

    pub fn neg(&self) -> KForm {
        self.scale(&-Scalar::one(self.mode))
    }

    pub fn sub(&self, other: &KForm) -> KForm {
        self.add(&other.neg())
    }

    /// Wedge product.
    pub fn wedge(&self, other: &KForm) -> KForm {
        assert_eq!(self.dim, other.dim);
        let mut out = KForm::zero(self.degree + other.degree, self.dim, self.mode);
        for (ia, ca) in &self.coeffs {
            for (ib, cb) in &other.coeffs {
                let mut idx = ia.clone();
                idx.extend_from_slice(ib);
                let c = ca * cb;
                out.add_term(&idx, &c).expect("valid indices");
            }
        }
        out
    }

    /// Evaluate on `k` coefficient vectors (multilinear, alternating).
    pub fn eval(&self, args: &[&[Scalar]]) -> Scalar {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let mut acc = Scalar::zero(self.mode);
        for (idx, c) in &self.coeffs {
            // determinant of the k×k minor picked by idx
            let k = self.degree;
            let minor = Matrix::from_fn(k, k, self.mode, |r, col| args[r][idx[col]].clone());
            let d = minor.det();
            if !d.is_zero() {
                acc += &(c * &d);
            }
        }
        acc
    }

    /// Evaluate on basis vectors by index (any order / repetitions).
    pub fn eval_basis(&self, arg_indices: &[usize]) -> Scalar {
        match sort_with_sign(arg_indices) {
            None => Scalar::zero(self.mode),
            Some((sorted, sign)) => {
                let c = self.coeff(&sorted);
                if sign > 0 {
                    c
                } else {
                    -&c
                }
            }
        }
    }

    /// Render with 1-based indices: `"2 e^{12} - 1/2 e^{34}"`.
    pub fn pretty(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (idx, c) in &self.coeffs {
            let sup: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
            let joined = if idx.iter().all(|&i| i + 1 <= 9) {
                sup.join("")
            } else {
                sup.join(",")
            };
            let coeff = format!("{c}");
            if coeff == "1" {
                parts.push(format!("e^{{{joined}}}"));
            } else if coeff == "-1" {
                parts.push(format!("-e^{{{joined}}}"));
            } else {
                parts.push(format!("{coeff} e^{{{joined}}}"));
            }
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

/// Sort an index tuple, returning `None` on a repeated index and the sign of
/// the sorting permutation otherwise.
fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    // insertion sort, counting swaps
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((v, sign))
}

/// Chevalley–Eilenberg differential of `φ` over `L`.
pub fn ce_differential(l: &LieAlgebra, phi: &KForm) -> KForm {
    assert_eq!(phi.dim(), l.dim(), "form dimension mismatch");
    let n = l.dim();
    let k = phi.degree();
    let mode = l.mode();
    let mut out = KForm::zero(k + 1, n, mode);
    // iterate over increasing (k+1)-tuples
    let mut tuple: Vec<usize> = (0..k + 1).collect();
    if k + 1 > n {
        return out;
    }
    loop {
        // value of (dφ)(e_{t0},…,e_{tk})
        let mut val = Scalar::zero(mode);
        for a in 0..=k {
            for b in a + 1..=k {
                let br = l.bracket_basis(tuple[a], tuple[b]);
                if crate::linalg::vec_is_zero(&br) {
                    continue;
                }
                // φ([x_a, x_b], …rest)
                let rest: Vec<usize> = tuple
                    .iter()
                    .enumerate()
                    .filter(|(p, _)| *p != a && *p != b)
                    .map(|(_, &t)| t)
                    .collect();
                let mut inner = Scalar::zero(mode);
                for (m, cm) in br.iter().enumerate() {
                    if cm.is_zero() {
                        continue;
                    }
                    let mut args = Vec::with_capacity(k);
                    args.push(m);
                    args.extend_from_slice(&rest);
                    let term = phi.eval_basis(&args);
                    if !term.is_zero() {
                        inner += &(cm * &term);
                    }
                }
                if !inner.is_zero() {
                    if (a + b) % 2 == 1 {
                        inner = -inner;
                    }
                    val += &inner;
                }
            }
        }
        if !val.is_zero() {
            out.add_term(&tuple, &val).expect("valid tuple");
        }
        // next increasing tuple
        let mut pos = k + 1;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if tuple[pos] < n - (k + 1 - pos) {
                tuple[pos] += 1;
                for q in pos + 1..=k {
                    tuple[q] = tuple[q - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Find a 1-form `α` with `dα = ω`, if one exists.  Among all solutions the
/// echelonized system's particular solution (free variables zero) is
/// returned, which keeps the answer support-minimal and reproducible;
/// callers must rely only on `dα = ω`.
pub fn find_primitive(l: &LieAlgebra, omega: &KForm) -> Option<KForm> {
    assert_eq!(omega.degree(), 2, "primitives are sought for 2-forms only");
    assert_eq!(omega.dim(), l.dim());
    let n = l.dim();
    let mode = l.mode();
    // unknowns: α_m; equations: for each i<j: −α([e_i,e_j]) = ω(e_i, e_j)
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let br = l.bracket_basis(i, j);
            let row: Vec<Scalar> = br.iter().map(|c| -c).collect();
            rows.push(row);
            rhs.push(omega.eval_basis(&[i, j]));
        }
    }
    if rows.is_empty() {
        return if omega.is_zero() {
            Some(KForm::zero(1, n, mode))
        } else {
            None
        };
    }
    let m = Matrix::from_rows(rows, n, mode).expect("uniform rows");
    let x = m.solve(&rhs)?;
    Some(KForm::from_covector(&x, mode))
}

/// `d² = 0` on all basis k-forms for `k ≤ max_degree` (the desk-scale
/// exhaustive test; `max_degree` is capped at 3).
pub fn d_squared_is_zero(l: &LieAlgebra, max_degree: usize) -> bool {
    let n = l.dim();
    let mode = l.mode();
    let cap = max_degree.min(3);
    for k in 1..=cap {
        if k > n {
            break;
        }
        // enumerate increasing k-tuples as basis forms
        let mut tuple: Vec<usize> = (0..k).collect();
        loop {
            let basis_form = KForm::from_terms(
                k,
                n,
                mode,
                &[(tuple.clone(), Scalar::one(mode))],
            )
            .expect("valid tuple");
            let dd = ce_differential(l, &ce_differential(l, &basis_form));
            if !dd.is_zero() {
                return false;
            }
            let mut pos = k;
            let mut done = false;
            loop {
                if pos == 0 {
                    done = true;
                    break;
                }
                pos -= 1;
                if tuple[pos] < n - (k - pos) {
                    tuple[pos] += 1;
                    for q in pos + 1..k {
                        tuple[q] = tuple[q - 1] + 1;
                    }
                    break;
                }
            }
            if done {
                break;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }

    fn aff() -> LieAlgebra {
        LieAlgebra::new_validated(2, None, Mode::Exact, &[(0, 1, 1, s(1))]).unwrap()
    }

    fn h5() -> LieAlgebra {
        // [e1,e2] = 2e5, [e3,e4] = 2e5
        LieAlgebra::new_validated(
            5,
            None,
            Mode::Exact,
            &[(0, 1, 4, s(2)), (2, 3, 4, s(2))],
        )
        .unwrap()
    }

    #[test]
    fn wedge_and_eval() {
        let e1 = KForm::basis_covector(4, 0, Mode::Exact);
        let e2 = KForm::basis_covector(4, 1, Mode::Exact);
        let w = e1.wedge(&e2);
        assert_eq!(w.coeff(&[0, 1]), s(1));
        // antisymmetry of the product
        let w2 = e2.wedge(&e1);
        assert_eq!(w2.coeff(&[0, 1]), s(-1));
        // evaluation with permutation sign
        assert_eq!(w.eval_basis(&[1, 0]), s(-1));
        assert_eq!(w.eval_basis(&[0, 0]), s(0));
        let x = vec![s(1), s(2), s(0), s(0)];
        let y = vec![s(3), s(4), s(0), s(0)];
        assert_eq!(w.eval(&[&x, &y]), s(4 - 6));
    }

    #[test]
    fn differential_of_dual_basis_matches_structure_equations() {
        // aff(ℝ): d e² = e^{21} = −e^{12}
        let l = aff();
        let e2 = KForm::basis_covector(2, 1, Mode::Exact);
        let de2 = ce_differential(&l, &e2);
        assert_eq!(de2.coeff(&[0, 1]), s(-1));
        let e1 = KForm::basis_covector(2, 0, Mode::Exact);
        assert!(ce_differential(&l, &e1).is_zero());
    }

    #[test]
    fn d_squared_zero_iff_jacobi() {
        assert!(d_squared_is_zero(&h5(), 3));
        assert!(d_squared_is_zero(&aff(), 3));
        // break Jacobi: [e1,e2]=e3, [e1,e3]=e1
        let bad = LieAlgebra::new(
            3,
            None,
            Mode::Exact,
            &[(0, 1, 2, s(1)), (0, 2, 0, s(1))],
        )
        .unwrap();
        assert!(!bad.check_jacobi().ok);
        assert!(!d_squared_is_zero(&bad, 2));
    }

    #[test]
    fn primitive_of_exact_form() {
        // aff×aff: ω = d(e² + e⁴) = −e^{12} − e^{34}
        let l = aff().direct_sum(&aff()).unwrap();
        let alpha = KForm::from_covector(&[s(0), s(1), s(0), s(1)], Mode::Exact);
        let omega = ce_differential(&l, &alpha);
        assert_eq!(omega.coeff(&[0, 1]), s(-1));
        assert_eq!(omega.coeff(&[2, 3]), s(-1));
        let found = find_primitive(&l, &omega).expect("solvable");
        assert_eq!(ce_differential(&l, &found), omega);
        // abelian: nothing nonzero is exact
        let ab = LieAlgebra::abelian(4, Mode::Exact);
        let w = KForm::from_terms(2, 4, Mode::Exact, &[(vec![0, 1], s(1))]).unwrap();
        assert!(find_primitive(&ab, &w).is_none());
    }

    #[test]
    fn heisenberg_dual_of_centre() {
        // h₅: d e⁵ = −2e^{12} − 2e^{34}
        let l = h5();
        let e5 = KForm::basis_covector(5, 4, Mode::Exact);
        let de5 = ce_differential(&l, &e5);
        assert_eq!(de5.coeff(&[0, 1]), s(-2));
        assert_eq!(de5.coeff(&[2, 3]), s(-2));
        // and e⁵ is a primitive of de⁵ up to closed forms
        let found = find_primitive(&l, &de5).unwrap();
        assert_eq!(ce_differential(&l, &found), de5);
    }

    #[test]
    fn three_form_differential() {
        // volume-type check on h₃: d(e^{12}) = 0, d e³∧e¹ etc.
        let h3 = LieAlgebra::new_validated(3, None, Mode::Exact, &[(0, 1, 2, s(2))]).unwrap();
        let e12 = KForm::from_terms(2, 3, Mode::Exact, &[(vec![0, 1], s(1))]).unwrap();
        assert!(ce_differential(&h3, &e12).is_zero());
        let e3 = KForm::basis_covector(3, 2, Mode::Exact);
        let e1 = KForm::basis_covector(3, 0, Mode::Exact);
        let w = ce_differential(&h3, &e3).wedge(&e1); // (−2e^{12})∧e^1 = 0
        assert!(w.is_zero());
    }
}
