//! Metric structure and curvature of a Lie algebra with a left-invariant
//! inner product, everything expressed at the level of the algebra.
//!
//! The Levi-Civita connection comes from the Koszul formula restricted to
//! basis vectors,
//!
//! ```text
//! 2⟨∇_x y, z⟩ = ⟨[x,y], z⟩ − ⟨[y,z], x⟩ + ⟨[z,x], y⟩ ,
//! ```
//!
//! the curvature operator is `R_{x,y} = [∇_x, ∇_y] − ∇_{[x,y]}` and the
//! Ricci form is the trace `Ric(x, y) = Σ_i [R(e_i, x) y]_i` (the coordinate
//! trace of `v ↦ R(v, x) y`, which agrees with the metric trace and stays
//! rational in exact mode).

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{vec_is_zero, vec_zero, Matrix};
use crate::report::{CheckItem, CheckReport};
use crate::scalar::{Mode, Scalar};

/// A Lie algebra together with a positive-definite Gram matrix for its
/// chosen basis.
#[derive(Clone, Debug)]
pub struct MetricLieAlgebra {
    algebra: LieAlgebra,
    gram: Matrix,
    gram_inv: Matrix,
}

impl MetricLieAlgebra {
    pub fn new(algebra: LieAlgebra, gram: Matrix) -> Result<Self> {
        if gram.rows != algebra.dim() || gram.cols != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "Gram matrix is {}×{} for a dimension-{} algebra",
                gram.rows,
                gram.cols,
                algebra.dim()
            )));
        }
        if gram.mode() != algebra.mode() {
            return Err(Error::ModeMismatch(
                "Gram matrix and algebra use different scalar modes".into(),
            ));
        }
        if !gram.is_symmetric() {
            return Err(Error::InvalidInput("Gram matrix must be symmetric".into()));
        }
        if !gram.is_positive_definite() {
            return Err(Error::InvalidInput(
                "Gram matrix must be positive definite".into(),
            ));
        }
        let gram_inv = gram.inverse()?;
        Ok(MetricLieAlgebra {
            algebra,
            gram,
            gram_inv,
        })
    }

    /// Orthonormal-basis metric.
    pub fn standard(algebra: LieAlgebra) -> Self {
        let g = Matrix::identity(algebra.dim(), algebra.mode());
        MetricLieAlgebra::new(algebra, g).expect("identity Gram is admissible")
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Matrix {
        &self.gram_inv
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mode(&self) -> Mode {
        self.algebra.mode()
    }

    /// ⟨x, y⟩ for coefficient vectors.
    pub fn inner(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y);
        crate::linalg::vec_dot(x, &gy)
    }

    /// ‖x‖².
    pub fn norm_sq(&self, x: &[Scalar]) -> Scalar {
        self.inner(x, x)
    }

    /// The metric dual of a vector: the covector `x ↦ ⟨v, x⟩` as a
    /// coefficient vector (i.e. `G·v`).
    pub fn metric_dual(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.gram.mul_vec(v)
    }

    /// Levi-Civita connection of the left-invariant metric.
    pub fn levi_civita(&self) -> Connection {
        let n = self.dim();
        let mode = self.mode();
        // K_i[k][j] = ⟨∇_{e_i} e_j, e_k⟩ without the 1/2 yet
        let mut nabla = Vec::with_capacity(n);
        let half = Scalar::ratio(1, 2, mode);
        for i in 0..n {
            let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(n);
            for j in 0..n {
                // column j of K: k-th entry 2⟨∇_{e_i} e_j, e_k⟩
                let br_ij = self.algebra.bracket_basis(i, j);
                let mut k_col = vec_zero(n, mode);
                for k in 0..n {
                    let br_jk = self.algebra.bracket_basis(j, k);
                    let br_ki = self.algebra.bracket_basis(k, i);
                    let ei = crate::linalg::vec_unit(n, i, mode);
                    let ej = crate::linalg::vec_unit(n, j, mode);
                    let ek = crate::linalg::vec_unit(n, k, mode);
                    let t = &(&self.inner(&br_ij, &ek) - &self.inner(&br_jk, &ei))
                        + &self.inner(&br_ki, &ej);
                    k_col[k] = &half * &t;
                }
                // coefficients: G⁻¹ · K column
                cols.push(self.gram_inv.mul_vec(&k_col));
            }
            let m = Matrix::from_fn(n, n, mode, |r, c| cols[c][r].clone());
            nabla.push(m);
        }
        Connection {
            metric: self.clone(),
            nabla,
        }
    }
}

/// The Levi-Civita connection, stored as one matrix `N_i` per basis vector
/// with `N_i · y = ∇_{e_i} y`.
#[derive(Clone, Debug)]
pub struct Connection {
    metric: MetricLieAlgebra,
    nabla: Vec<Matrix>,
}

impl Connection {
    pub fn metric(&self) -> &MetricLieAlgebra {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn mode(&self) -> Mode {
        self.metric.mode()
    }

    /// The matrix of `∇_{e_i}`.
    pub fn basis_matrix(&self, i: usize) -> &Matrix {
        &self.nabla[i]
    }

    /// ∇_x y for coefficient vectors (bilinear over scalars).
    pub fn nabla(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mode = self.mode();
        let mut out = vec_zero(n, mode);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            let niy = self.nabla[i].mul_vec(y);
            for k in 0..n {
                if !niy[k].is_zero() {
                    out[k] += &(&x[i] * &niy[k]);
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ ∇_v x`.
    pub fn directional_matrix(&self, v: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mode = self.mode();
        let mut m = Matrix::zeros(n, n, mode);
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            m = m.add(&self.nabla[i].scale(&v[i]));
        }
        m
    }

    /// Torsion-free and metric-compatibility as an itemized report.
    pub fn connection_report(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let n = self.dim();
        let mode = self.mode();
        let alg = self.metric.algebra();
        // ∇_x y − ∇_y x = [x, y] on basis pairs
        let mut torsion_ok = true;
        let mut torsion_witness = None;
        'outer_t: for i in 0..n {
            for j in 0..n {
                let ei = crate::linalg::vec_unit(n, i, mode);
                let ej = crate::linalg::vec_unit(n, j, mode);
                let lhs = crate::linalg::vec_sub(&self.nabla(&ei, &ej), &self.nabla(&ej, &ei));
                let rhs = alg.bracket(&ei, &ej);
                if !crate::linalg::vec_eq(&lhs, &rhs) {
                    torsion_ok = false;
                    torsion_witness = Some(format!("fails at basis pair ({}, {})", i + 1, j + 1));
                    break 'outer_t;
                }
            }
        }
        rep.push(CheckItem::of_opt(
            "torsion-free: ∇_x y − ∇_y x = [x, y]",
            torsion_ok,
            torsion_witness,
        ));
        // ⟨∇_x y, z⟩ + ⟨y, ∇_x z⟩ = 0 on basis triples
        let mut compat_ok = true;
        let mut compat_witness = None;
        'outer_c: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ei = crate::linalg::vec_unit(n, i, mode);
                    let ej = crate::linalg::vec_unit(n, j, mode);
                    let ek = crate::linalg::vec_unit(n, k, mode);
                    let a = self.metric.inner(&self.nabla(&ei, &ej), &ek);
                    let b = self.metric.inner(&ej, &self.nabla(&ei, &ek));
                    if !(&a + &b).is_zero() {
                        compat_ok = false;
                        compat_witness = Some(format!(
                            "fails at basis triple ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        ));
                        break 'outer_c;
                    }
                }
            }
        }
        rep.push(CheckItem::of_opt(
            "metric compatibility: ⟨∇_x y, z⟩ + ⟨y, ∇_x z⟩ = 0",
            compat_ok,
            compat_witness,
        ));
        rep
    }

    /// Curvature operator `R_{x,y} = [∇_x, ∇_y] − ∇_{[x,y]}` as a matrix.
    pub fn riemann_operator(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        let nx = self.directional_matrix(x);
        let ny = self.directional_matrix(y);
        let nbr = self.directional_matrix(&self.metric.algebra().bracket(x, y));
        nx.commutator(&ny).sub(&nbr)
    }

    /// `R(e_i, e_j) e_k` for all basis triples: `riemann()[i][j][k]`.
    pub fn riemann_tensor(&self) -> Vec<Vec<Vec<Vec<Scalar>>>> {
        let n = self.dim();
        let mode = self.mode();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut layer = Vec::with_capacity(n);
            for j in 0..n {
                let ei = crate::linalg::vec_unit(n, i, mode);
                let ej = crate::linalg::vec_unit(n, j, mode);
                let op = self.riemann_operator(&ei, &ej);
                let mut cols = Vec::with_capacity(n);
                for k in 0..n {
                    cols.push(op.col(k));
                }
                layer.push(cols);
            }
            out.push(layer);
        }
        out
    }

    /// Covariant curvature `⟨R(x, y) z, w⟩`.
    pub fn riemann_covariant(
        &self,
        x: &[Scalar],
        y: &[Scalar],
        z: &[Scalar],
        w: &[Scalar],
    ) -> Scalar {
        let rz = self.riemann_operator(x, y).mul_vec(z);
        self.metric.inner(&rz, w)
    }

    /// Ricci tensor `Ric(x, y) = tr(v ↦ R(v, x) y)` as a symmetric matrix
    /// over the basis.
    pub fn ricci(&self) -> Matrix {
        let n = self.dim();
        let mode = self.mode();
        let riem = self.riemann_tensor();
        Matrix::from_fn(n, n, mode, |x, y| {
            let mut acc = Scalar::zero(mode);
            for i in 0..n {
                acc += &riem[i][x][y][i];
            }
            acc
        })
    }

    /// Scalar curvature `Σ G^{ij} Ric_ij`.
    pub fn scalar_curvature(&self) -> Scalar {
        let ric = self.ricci();
        let n = self.dim();
        let mode = self.mode();
        let ginv = self.metric.gram_inv();
        let mut acc = Scalar::zero(mode);
        for i in 0..n {
            for j in 0..n {
                let t = ginv.get(i, j) * ric.get(i, j);
                if !t.is_zero() {
                    acc += &t;
                }
            }
        }
        acc
    }

    /// First Bianchi identity `R(x,y)z + R(y,z)x + R(z,x)y = 0` and the
    /// pair/exchange symmetries of the covariant tensor, on all basis
    /// combinations.
    pub fn curvature_symmetry_report(&self) -> CheckReport {
        let n = self.dim();
        let mode = self.mode();
        let riem = self.riemann_tensor();
        let mut rep = CheckReport::new();

        let mut bianchi_ok = true;
        let mut bianchi_witness = None;
        'b: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut sum = vec_zero(n, mode);
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        sum = crate::linalg::vec_add(&sum, &riem[a][b][c]);
                    }
                    if !vec_is_zero(&sum) {
                        bianchi_ok = false;
                        bianchi_witness =
                            Some(format!("triple ({}, {}, {})", i + 1, j + 1, k + 1));
                        break 'b;
                    }
                }
            }
        }
        rep.push(CheckItem::of_opt(
            "first Bianchi identity",
            bianchi_ok,
            bianchi_witness,
        ));

        // covariant symmetries: antisymmetry in (x,y), in (z,w), pair symmetry
        let mut cov = vec![vec![vec![vec![Scalar::zero(mode); n]; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let gz = self.metric.gram().mul_vec(&riem[i][j][k]);
                    for l in 0..n {
                        cov[i][j][k][l] = gz[l].clone();
                    }
                }
            }
        }
        let mut sym_ok = true;
        let mut sym_witness = None;
        's: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let a = &cov[i][j][k][l];
                        if !( a == &-&cov[j][i][k][l]) {
                            sym_ok = false;
                            sym_witness = Some(format!(
                                "antisymmetry in first pair at ({},{},{},{})",
                                i + 1, j + 1, k + 1, l + 1
                            ));
                            break 's;
                        }
                        if !(a == &-&cov[i][j][l][k]) {
                            sym_ok = false;
                            sym_witness = Some(format!(
                                "antisymmetry in second pair at ({},{},{},{})",
                                i + 1, j + 1, k + 1, l + 1
                            ));
                            break 's;
                        }
                        if !(a == &cov[k][l][i][j]) {
                            sym_ok = false;
                            sym_witness = Some(format!(
                                "pair exchange at ({},{},{},{})",
                                i + 1, j + 1, k + 1, l + 1
                            ));
                            break 's;
                        }
                    }
                }
            }
        }
        rep.push(CheckItem::of_opt(
            "covariant curvature symmetries",
            sym_ok,
            sym_witness,
        ));
        rep
    }
}

/// Outcome of an Einstein test.
#[derive(Clone, Debug, PartialEq)]
pub enum EinsteinVerdict {
    /// `Ric = c · g` with the given constant.
    Einstein(Scalar),
    /// Ricci is not proportional to the metric.
    NotEinstein,
}

/// Decide whether `Ric = c·g`, reading `c` off one nonzero Gram entry and
/// verifying the identity globally.
pub fn einstein_check(conn: &Connection) -> EinsteinVerdict {
    let ric = conn.ricci();
    let g = conn.metric().gram();
    let n = conn.dim();
    let mode = conn.mode();
    // find a nonzero diagonal Gram entry to read c
    let mut c = None;
    for i in 0..n {
        if !g.get(i, i).is_zero() {
            c = Some(ric.get(i, i) / g.get(i, i));
            break;
        }
    }
    let Some(c) = c else {
        return EinsteinVerdict::NotEinstein;
    };
    for i in 0..n {
        for j in 0..n {
            let want = &c * g.get(i, j);
            if !(ric.get(i, j) == &want) {
                return EinsteinVerdict::NotEinstein;
            }
        }
    }
    let _ = mode;
    EinsteinVerdict::Einstein(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }

    fn h3_metric() -> MetricLieAlgebra {
        let l =
            LieAlgebra::new_validated(3, None, Mode::Exact, &[(0, 1, 2, s(2))]).unwrap();
        MetricLieAlgebra::standard(l)
    }

    #[test]
    fn koszul_connection_is_torsion_free_and_metric() {
        let conn = h3_metric().levi_civita();
        let rep = conn.connection_report();
        assert!(rep.ok(), "{rep}");
    }

    #[test]
    fn heisenberg_three_dim_curvature_oracle() {
        // frozen by hand: ∇_{e1}e2 = ξ, ∇_{e1}ξ = −e2, Ric = diag(−2,−2,2),
        // scalar curvature −2 (with [e1,e2] = 2ξ and the orthonormal metric)
        let m = h3_metric();
        let conn = m.levi_civita();
        let e1 = crate::linalg::vec_unit(3, 0, Mode::Exact);
        let e2 = crate::linalg::vec_unit(3, 1, Mode::Exact);
        let xi = crate::linalg::vec_unit(3, 2, Mode::Exact);
        assert_eq!(conn.nabla(&e1, &e2), vec![s(0), s(0), s(1)]);
        assert_eq!(conn.nabla(&e1, &xi), vec![s(0), s(-1), s(0)]);
        let ric = conn.ricci();
        assert_eq!(ric.get(0, 0), &s(-2));
        assert_eq!(ric.get(1, 1), &s(-2));
        assert_eq!(ric.get(2, 2), &s(2));
        assert_eq!(ric.get(0, 1), &s(0));
        assert_eq!(conn.scalar_curvature(), s(-2));
        assert_eq!(einstein_check(&conn), EinsteinVerdict::NotEinstein);
    }

    #[test]
    fn curvature_symmetries_hold() {
        let conn = h3_metric().levi_civita();
        let rep = conn.curvature_symmetry_report();
        assert!(rep.ok(), "{rep}");
    }

    #[test]
    fn flat_abelian_algebra() {
        let l = LieAlgebra::abelian(4, Mode::Exact);
        let conn = MetricLieAlgebra::standard(l).levi_civita();
        for i in 0..4 {
            assert!(conn.basis_matrix(i).is_zero());
        }
        assert!(conn.ricci().is_zero());
        assert_eq!(einstein_check(&conn), EinsteinVerdict::Einstein(s(0)));
    }

    #[test]
    fn hyperbolic_plane_from_affine_algebra() {
        // aff(ℝ) with the orthonormal metric has constant curvature −1:
        // Ric = −g, scalar curvature −2
        let l = LieAlgebra::new_validated(2, None, Mode::Exact, &[(0, 1, 1, s(1))]).unwrap();
        let conn = MetricLieAlgebra::standard(l).levi_civita();
        match einstein_check(&conn) {
            EinsteinVerdict::Einstein(c) => assert_eq!(c, s(-1)),
            other => panic!("expected an Einstein metric, got {other:?}"),
        }
        assert_eq!(conn.scalar_curvature(), s(-2));
    }

    #[test]
    fn non_identity_gram_is_handled() {
        // rescale one direction of the flat abelian algebra; still flat
        let l = LieAlgebra::abelian(2, Mode::Exact);
        let g = Matrix::from_rows(
            vec![vec![s(4), s(0)], vec![s(0), s(1)]],
            2,
            Mode::Exact,
        )
        .unwrap();
        let m = MetricLieAlgebra::new(l, g).unwrap();
        let conn = m.levi_civita();
        assert!(conn.ricci().is_zero());
        let rep = conn.connection_report();
        assert!(rep.ok(), "{rep}");
    }

    #[test]
    fn rejects_indefinite_gram() {
        let l = LieAlgebra::abelian(2, Mode::Exact);
        let g = Matrix::from_rows(
            vec![vec![s(1), s(0)], vec![s(0), s(-1)]],
            2,
            Mode::Exact,
        )
        .unwrap();
        assert!(MetricLieAlgebra::new(l, g).is_err());
    }
}
