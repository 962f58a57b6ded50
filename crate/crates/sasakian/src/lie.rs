//! Lie algebras over ℝ presented by structure constants.
//!
//! A [`LieAlgebra`] stores the constants `c_ij^k` of `[e_i, e_j] = Σ_k
//! c_ij^k e_k` for `i < j` only; antisymmetry is structural.  On top of the
//! bracket it provides the classical structural queries: Jacobi validation
//! with a witness, derived and lower central series, centre, Killing form,
//! radical, unimodularity, classification flags, direct sums, and quotients
//! by ideals.

use crate::error::{Error, Result};
use crate::linalg::{vec_add, vec_is_zero, vec_pretty, vec_scale, vec_unit, vec_zero, Matrix, Subspace};
use crate::linalg::{all_roots_real_exact, durand_kerner};
use crate::report::{CheckItem, CheckReport};
use crate::scalar::{tolerance, Mode, Scalar};
use std::collections::BTreeMap;

/// A real Lie algebra given by structure constants on a fixed basis.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    mode: Mode,
    /// `(i, j) → [e_i, e_j]` as a coefficient vector, for `i < j` with a
    /// nonzero bracket; missing pairs bracket to zero.
    constants: BTreeMap<(usize, usize), Vec<Scalar>>,
}

/// Default basis labels `e1..en`.
pub fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// Build from a list of `(i, j, k, c_ij^k)` entries, 0-based, `i < j`.
    /// Does **not** check Jacobi — call [`LieAlgebra::check_jacobi`], or use
    /// [`LieAlgebra::new_validated`].
    pub fn new(
        dim: usize,
        labels: Option<Vec<String>>,
        mode: Mode,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let labels = labels.unwrap_or_else(|| default_labels(dim));
        if labels.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for dimension {dim}",
                labels.len()
            )));
        }
        let mut constants: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
        for (i, j, k, v) in entries {
            if *i >= *j {
                return Err(Error::InvalidInput(format!(
                    "structure constant with i >= j: ({}, {}, {})",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if *j >= dim || *k >= dim {
                return Err(Error::InvalidInput(format!(
                    "structure constant index out of range: ({}, {}, {}) in dim {dim}",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if v.mode() != mode {
                return Err(Error::ModeMismatch(format!(
                    "constant ({}, {}, {}) is {} in a {mode} algebra",
                    i + 1,
                    j + 1,
                    k + 1,
                    v.mode()
                )));
            }
            let slot = constants
                .entry((*i, *j))
                .or_insert_with(|| vec_zero(dim, mode));
            slot[*k] = &slot[*k] + v;
        }
        constants.retain(|_, v| !vec_is_zero(v));
        Ok(LieAlgebra {
            dim,
            labels,
            mode,
            constants,
        })
    }

    /// Build and require the Jacobi identity to hold.
    pub fn new_validated(
        dim: usize,
        labels: Option<Vec<String>>,
        mode: Mode,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let alg = Self::new(dim, labels, mode, entries)?;
        let rep = alg.check_jacobi();
        if let Some((i, j, k, defect)) = rep.witness {
            return Err(Error::JacobiFailure {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                defect: vec_pretty(&defect, &alg.labels),
            });
        }
        Ok(alg)
    }

    /// The abelian algebra of the given dimension.
    pub fn abelian(dim: usize, mode: Mode) -> Self {
        LieAlgebra {
            dim,
            labels: default_labels(dim),
            mode,
            constants: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch("label count != dim".into()));
        }
        self.labels = labels;
        Ok(())
    }

    /// Iterate stored constants as `(i, j, k, value)`, 0-based, `i < j`,
    /// nonzero values only, in lexicographic order.
    pub fn iter_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.constants.iter().flat_map(|(&(i, j), v)| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(k, c)| (i, j, k, c))
        })
    }

    /// `[e_i, e_j]` for arbitrary basis indices (any order, equal → 0).
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        if i == j {
            return vec_zero(self.dim, self.mode);
        }
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        match self.constants.get(&(a, b)) {
            None => vec_zero(self.dim, self.mode),
            Some(v) => {
                if flip {
                    v.iter().map(|c| -c).collect()
                } else {
                    v.clone()
                }
            }
        }
    }

    /// `[x, y]` for arbitrary coefficient vectors (bilinear extension).
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "bracket: wrong length");
        assert_eq!(y.len(), self.dim, "bracket: wrong length");
        let mut acc = vec_zero(self.dim, self.mode);
        for (&(i, j), v) in &self.constants {
            // contribution (x_i y_j − x_j y_i) · [e_i, e_j]
            let coef = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if coef.is_zero() {
                continue;
            }
            acc = vec_add(&acc, &vec_scale(&coef, v));
        }
        acc
    }

    /// Matrix of `ad_{e_i}`: column `j` holds `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim, self.mode);
        for j in 0..self.dim {
            let col = self.bracket_basis(i, j);
            for k in 0..self.dim {
                if !col[k].is_zero() {
                    m.set(k, j, col[k].clone());
                }
            }
        }
        m
    }

    /// Matrix of `ad_x` for an arbitrary vector.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim, self.mode);
        for j in 0..self.dim {
            let col = self.bracket(x, &vec_unit(self.dim, j, self.mode));
            for k in 0..self.dim {
                if !col[k].is_zero() {
                    m.set(k, j, col[k].clone());
                }
            }
        }
        m
    }

    /// Jacobi identity over all `i < j < k`; the witness is the first failing
    /// triple in lexicographic order together with its cyclic-sum defect.
    pub fn check_jacobi(&self) -> JacobiReport {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let bij = self.bracket_basis(i, j);
                for k in j + 1..self.dim {
                    let bjk = self.bracket_basis(j, k);
                    let bki = self.bracket_basis(k, i);
                    let ek = vec_unit(self.dim, k, self.mode);
                    let ei = vec_unit(self.dim, i, self.mode);
                    let ej = vec_unit(self.dim, j, self.mode);
                    let mut defect = self.bracket(&bij, &ek);
                    defect = vec_add(&defect, &self.bracket(&bjk, &ei));
                    defect = vec_add(&defect, &self.bracket(&bki, &ej));
                    if !vec_is_zero(&defect) {
                        return JacobiReport {
                            ok: false,
                            witness: Some((i, j, k, defect)),
                        };
                    }
                }
            }
        }
        JacobiReport {
            ok: true,
            witness: None,
        }
    }

    /// Span of all brackets `[a, b]` with `a ∈ A`, `b ∈ B`.
    pub fn bracket_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut gens = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                let v = self.bracket(x, y);
                if !vec_is_zero(&v) {
                    gens.push(v);
                }
            }
        }
        Subspace::from_spanning(self.dim, self.mode, &gens)
    }

    /// The derived algebra `[𝔤, 𝔤]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim, self.mode);
        self.bracket_space(&full, &full)
    }

    /// Derived series `𝔤 ⊇ [𝔤,𝔤] ⊇ … ` down to (and including) the first
    /// repeated term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut chain = vec![Subspace::full(self.dim, self.mode)];
        loop {
            let last = chain.last().unwrap();
            let next = self.bracket_space(last, last);
            let stable = next == *last;
            chain.push(next);
            if stable || chain.last().unwrap().dim() == 0 {
                break;
            }
        }
        chain
    }

    /// Lower central series `𝔤 ⊇ [𝔤,𝔤] ⊇ [𝔤,[𝔤,𝔤]] ⊇ …`.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim, self.mode);
        let mut chain = vec![full.clone()];
        loop {
            let last = chain.last().unwrap();
            let next = self.bracket_space(&full, last);
            let stable = next == *last;
            chain.push(next);
            if stable || chain.last().unwrap().dim() == 0 {
                break;
            }
        }
        chain
    }

    /// Centre `{x : [x, y] = 0 ∀y}` = ∩_j ker ad_{e_j}.
    pub fn centre(&self) -> Subspace {
        // stack the matrices x ↦ [e_j, x] and take one kernel
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for j in 0..self.dim {
            let adj = self.ad_basis(j);
            for r in 0..self.dim {
                rows.push(adj.row(r));
            }
        }
        if rows.is_empty() {
            return Subspace::full(self.dim, self.mode);
        }
        let m = Matrix::from_rows(rows, self.dim, self.mode).expect("uniform rows");
        Subspace::from_spanning(self.dim, self.mode, &m.kernel())
    }

    /// Killing form `β(x, y) = tr(ad_x ad_y)` as a symmetric matrix on the
    /// basis.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        Matrix::from_fn(self.dim, self.dim, self.mode, |i, j| {
            ads[i].matmul(&ads[j]).trace()
        })
    }

    /// Radical: the Killing-orthogonal complement of the derived algebra.
    pub fn radical(&self) -> Subspace {
        let derived = self.derived_subalgebra();
        derived.orthogonal_complement(&self.killing_form())
    }

    /// `tr ad_x = 0` for every basis vector.
    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|i| self.ad_basis(i).trace().is_zero())
    }

    /// Trace of `ad_x` for an arbitrary vector.
    pub fn trace_ad(&self, x: &[Scalar]) -> Scalar {
        self.ad(x).trace()
    }

    /// Classification flags.  `completely_solvable` uses the documented
    /// sufficient test: real spectrum of `ad_x` for each ambient basis vector
    /// and for each basis vector of every derived-series term.  In float mode
    /// an eigenvalue with `|Im|` between τ and the decision margin makes the
    /// flag `Unknown`.
    pub fn classify(&self) -> ClassifyFlags {
        let derived = self.derived_series();
        let solvable = derived.last().map(|s| s.dim() == 0).unwrap_or(true);
        let lower = self.lower_central_series();
        let nilpotent = lower.last().map(|s| s.dim() == 0).unwrap_or(true);
        let perfect = derived.len() >= 2 && derived[1].dim() == self.dim;
        let semisimple = !self.killing_form().det().is_zero();

        let completely_solvable = if !solvable {
            Tristate::False
        } else {
            let mut verdict = Tristate::True;
            let mut candidates: Vec<Vec<Scalar>> =
                (0..self.dim).map(|i| vec_unit(self.dim, i, self.mode)).collect();
            for term in &derived {
                for b in term.basis() {
                    candidates.push(b.clone());
                }
            }
            'outer: for x in &candidates {
                let cp = self.ad(x).char_poly();
                match self.mode {
                    Mode::Exact => {
                        if !all_roots_real_exact(&cp).expect("exact coefficients") {
                            verdict = Tristate::False;
                            break 'outer;
                        }
                    }
                    Mode::Float => {
                        let tau = tolerance();
                        for root in durand_kerner(&cp) {
                            let im = root.im.abs();
                            if im > 1e-6 {
                                verdict = Tristate::False;
                                break 'outer;
                            } else if im > tau {
                                verdict = Tristate::Unknown;
                            }
                        }
                    }
                }
            }
            verdict
        };

        ClassifyFlags {
            solvable,
            nilpotent,
            completely_solvable,
            perfect,
            semisimple,
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch(
                "direct sum of algebras in different modes".into(),
            ));
        }
        let dim = self.dim + other.dim;
        let mut entries = Vec::new();
        for (i, j, k, v) in self.iter_constants() {
            entries.push((i, j, k, v.clone()));
        }
        for (i, j, k, v) in other.iter_constants() {
            entries.push((i + self.dim, j + self.dim, k + self.dim, v.clone()));
        }
        let mut labels = Vec::with_capacity(dim);
        labels.extend(default_labels(dim));
        LieAlgebra::new(dim, Some(labels), self.mode, &entries)
    }

    /// Quotient by an ideal.  The complement basis is the set of coordinate
    /// directions that are **not** pivot columns of the ideal's echelon
    /// basis; brackets are computed in the ambient algebra and reduced
    /// modulo the ideal.  Errors if `ideal` is not actually an ideal.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        // ideal check: [e_i, b] ∈ ideal for every basis direction and ideal basis vector
        for i in 0..self.dim {
            for b in ideal.basis() {
                let br = self.bracket(&vec_unit(self.dim, i, self.mode), b);
                if !ideal.contains(&br) {
                    return Err(Error::InvalidInput(format!(
                        "subspace is not an ideal: [e{}, v] escapes it",
                        i + 1
                    )));
                }
            }
        }
        let is_pivot: Vec<bool> = {
            let mut f = vec![false; self.dim];
            for &p in ideal.pivots() {
                f[p] = true;
            }
            f
        };
        let reps: Vec<usize> = (0..self.dim).filter(|&i| !is_pivot[i]).collect();
        let qdim = reps.len();
        let mut entries = Vec::new();
        for (a, &ia) in reps.iter().enumerate() {
            for (b, &ib) in reps.iter().enumerate().skip(a + 1) {
                let br = self.bracket_basis(ia, ib);
                let reduced = ideal.reduce(&br);
                for (c, &ic) in reps.iter().enumerate() {
                    if !reduced[ic].is_zero() {
                        entries.push((a, b, c, reduced[ic].clone()));
                    }
                }
            }
        }
        let labels = reps.iter().map(|&i| format!("[{}]", self.labels[i])).collect();
        LieAlgebra::new(qdim, Some(labels), self.mode, &entries)
    }

    /// Signature of the Killing form of `𝔤 / rad(𝔤)` — the quick
    /// compact/split discriminator for the semisimple quotient.
    pub fn semisimple_quotient_killing_signature(&self) -> Result<(usize, usize, usize)> {
        let rad = self.radical();
        let q = self.quotient(&rad)?;
        q.killing_form().signature()
    }

    /// Structural sanity report used by property tests: bracket antisymmetry
    /// is structural, so this checks Jacobi plus Killing-form ad-invariance
    /// `β([x,y],z) + β(y,[x,z]) = 0` and that the radical is an ideal.
    pub fn structure_report(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let jac = self.check_jacobi();
        rep.push(match &jac.witness {
            None => CheckItem::pass("jacobi"),
            Some((i, j, k, d)) => CheckItem::fail(
                "jacobi",
                format!(
                    "triple (e{}, e{}, e{}) defect {}",
                    i + 1,
                    j + 1,
                    k + 1,
                    vec_pretty(d, &self.labels)
                ),
            ),
        });
        let beta = self.killing_form();
        let mut ad_inv = true;
        'outer: for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    // β([e_i,e_j], e_k) + β(e_j, [e_i,e_k]) = 0
                    let bij = self.bracket_basis(i, j);
                    let bik = self.bracket_basis(i, k);
                    let mut acc = Scalar::zero(self.mode);
                    for m in 0..self.dim {
                        acc += &(&bij[m] * beta.get(m, k));
                        acc += &(&bik[m] * beta.get(j, m));
                    }
                    if !acc.is_zero() {
                        ad_inv = false;
                        break 'outer;
                    }
                }
            }
        }
        rep.push(CheckItem::of(
            "killing_ad_invariance",
            ad_inv,
            "β([x,y],z) + β(y,[x,z]) ≠ 0 on some basis triple",
        ));
        let rad = self.radical();
        let mut rad_ideal = true;
        'outer2: for i in 0..self.dim {
            for b in rad.basis() {
                if !rad.contains(&self.bracket(&vec_unit(self.dim, i, self.mode), b)) {
                    rad_ideal = false;
                    break 'outer2;
                }
            }
        }
        rep.push(CheckItem::of(
            "radical_is_ideal",
            rad_ideal,
            "bracket of a basis vector with the radical escapes it",
        ));
        rep
    }
}

/// Jacobi verdict with the first failing triple (0-based) and defect vector.
#[derive(Clone, Debug)]
pub struct JacobiReport {
    pub ok: bool,
    pub witness: Option<(usize, usize, usize, Vec<Scalar>)>,
}

/// Three-valued flag for properties whose float-mode test can be inconclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tristate {
    True,
    False,
    Unknown,
}

impl Tristate {
    pub fn is_true(self) -> bool {
        self == Tristate::True
    }
}

impl std::fmt::Display for Tristate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tristate::True => write!(f, "true"),
            Tristate::False => write!(f, "false"),
            Tristate::Unknown => write!(f, "unknown"),
        }
    }
}

/// Classification flags of an algebra.
#[derive(Clone, Debug)]
pub struct ClassifyFlags {
    pub solvable: bool,
    pub nilpotent: bool,
    pub completely_solvable: Tristate,
    pub perfect: bool,
    pub semisimple: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_eq;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }

    /// Heisenberg h₃: [e1, e2] = 2 e3.
    fn h3() -> LieAlgebra {
        LieAlgebra::new_validated(3, None, Mode::Exact, &[(0, 1, 2, s(2))]).unwrap()
    }

    /// aff(ℝ): [e1, e2] = e2.
    fn aff() -> LieAlgebra {
        LieAlgebra::new_validated(2, None, Mode::Exact, &[(0, 1, 1, s(1))]).unwrap()
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric() {
        let l = h3();
        let x = vec![s(1), s(2), s(3)];
        let y = vec![s(-1), s(4), s(0)];
        let xy = l.bracket(&x, &y);
        let yx = l.bracket(&y, &x);
        assert!(vec_eq(&xy, &vec![s(0), s(0), s(12)]));
        assert!(vec_eq(&yx, &vec![s(0), s(0), s(-12)]));
        // [e2, e1] = −2 e3 via index flip
        assert!(vec_eq(&l.bracket_basis(1, 0), &vec![s(0), s(0), s(-2)]));
    }

    #[test]
    fn jacobi_witness_on_broken_algebra() {
        // [e1,e2]=e3, [e1,e3]=e1 violates Jacobi on (1,2,3)
        let bad = LieAlgebra::new(
            3,
            None,
            Mode::Exact,
            &[(0, 1, 2, s(1)), (0, 2, 0, s(1))],
        )
        .unwrap();
        let rep = bad.check_jacobi();
        assert!(!rep.ok);
        let (i, j, k, _) = rep.witness.unwrap();
        assert_eq!((i, j, k), (0, 1, 2));
        assert!(LieAlgebra::new_validated(
            3,
            None,
            Mode::Exact,
            &[(0, 1, 2, s(1)), (0, 2, 0, s(1))]
        )
        .is_err());
    }

    #[test]
    fn series_and_centre_of_heisenberg() {
        let l = h3();
        let ds = l.derived_series();
        assert_eq!(ds.len(), 3);
        assert_eq!(ds[0].dim(), 3);
        assert_eq!(ds[1].dim(), 1);
        assert_eq!(ds[2].dim(), 0);
        let z = l.centre();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&vec![s(0), s(0), s(5)]));
        let flags = l.classify();
        assert!(flags.solvable && flags.nilpotent);
        assert!(flags.completely_solvable.is_true());
        assert!(!flags.perfect && !flags.semisimple);
        assert!(l.is_unimodular());
    }

    #[test]
    fn aff_is_solvable_not_nilpotent_not_unimodular() {
        let l = aff();
        let flags = l.classify();
        assert!(flags.solvable);
        assert!(!flags.nilpotent);
        assert!(!l.is_unimodular());
        // lower central series stabilizes at span{e2}
        let lc = l.lower_central_series();
        assert_eq!(lc.last().unwrap().dim(), 1);
    }

    #[test]
    fn su2_like_killing_form() {
        // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2 (so(3)): Killing −2·Id
        let l = LieAlgebra::new_validated(
            3,
            None,
            Mode::Exact,
            &[(0, 1, 2, s(1)), (1, 2, 0, s(1)), (0, 2, 1, s(-1))],
        )
        .unwrap();
        let beta = l.killing_form();
        assert!(beta.approx_eq(&Matrix::identity(3, Mode::Exact).scale(&s(-2))));
        let flags = l.classify();
        assert!(flags.semisimple && flags.perfect && !flags.solvable);
        assert_eq!(l.radical().dim(), 0);
        assert_eq!(beta.signature().unwrap(), (0, 3, 0));
        // not completely solvable (not solvable at all)
        assert_eq!(flags.completely_solvable, Tristate::False);
    }

    #[test]
    fn direct_sum_and_quotient() {
        let l = aff().direct_sum(&aff()).unwrap();
        assert_eq!(l.dim(), 4);
        assert!(vec_eq(
            &l.bracket_basis(2, 3),
            &vec![s(0), s(0), s(0), s(1)]
        ));
        // quotient of h3 by its centre is abelian ℝ²
        let h = h3();
        let q = h.quotient(&h.centre()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.iter_constants().next().is_none());
        // span{e2} in aff is an ideal; span{e1} is not
        let a = aff();
        let ideal = Subspace::from_spanning(2, Mode::Exact, &[vec![s(0), s(1)]]);
        assert!(a.quotient(&ideal).is_ok());
        let not_ideal = Subspace::from_spanning(2, Mode::Exact, &[vec![s(1), s(0)]]);
        assert!(a.quotient(&not_ideal).is_err());
    }

    #[test]
    fn structure_report_passes_on_valid_algebras() {
        for l in [h3(), aff(), LieAlgebra::abelian(4, Mode::Exact)] {
            let rep = l.structure_report();
            assert!(rep.ok(), "{rep}");
        }
    }

    #[test]
    fn radical_of_reductive_like_mix() {
        // so(3) ⊕ ℝ: radical = the abelian summand
        let so3 = LieAlgebra::new_validated(
            3,
            None,
            Mode::Exact,
            &[(0, 1, 2, s(1)), (1, 2, 0, s(1)), (0, 2, 1, s(-1))],
        )
        .unwrap();
        let l = so3.direct_sum(&LieAlgebra::abelian(1, Mode::Exact)).unwrap();
        let rad = l.radical();
        assert_eq!(rad.dim(), 1);
        assert!(rad.contains(&vec![s(0), s(0), s(0), s(1)]));
        let (p, n, z) = l.semisimple_quotient_killing_signature().unwrap();
        assert_eq!((p, n, z), (0, 3, 0));
    }
}
