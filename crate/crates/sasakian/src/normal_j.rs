//! Completely solvable Hermitian Lie algebras whose metric is reproduced by
//! a distinguished linear functional: `⟨x, y⟩ = f([Jx, y])`.  The module
//! computes the root decomposition of such an algebra under the abelian
//! complement `𝔞 = 𝔫^⊥` of the derived subalgebra `𝔫 = [𝔡, 𝔡]`, classifies
//! each root space by its interaction with `J`, and derives curvature and
//! derivation consequences from the combinatorics:
//!
//! * roots come in four shapes — distinguished `ε_k` (one-dimensional,
//!   mapped into `𝔞` by `J`), halves `ε_k/2` (J-invariant), and mixed
//!   pairs `(ε_i ± ε_j)/2` (swapped by `J`);
//! * the Einstein question reduces to the per-root constants
//!   `C_k = B_k / f(x_k)²` with
//!   `B_k = 1 + ¼ n_k + ½ Σ_{j<k} n_{jk} + ½ Σ_{j>k} n_{kj}`;
//! * skew-Hermitian derivations (`DJ = JD`, `Dᵀ G = −G D`) annihilate `𝔞`
//!   and the distinguished root spaces and preserve the remaining blocks.

use crate::error::{Error, Result};
use crate::forms::{ce_differential, KForm};
use crate::linalg::{
    rational_roots_exact, real_eigen_decomposition, vec_eq, vec_is_zero, vec_scale, vec_unit,
    Matrix, Subspace,
};
use crate::report::{CheckItem, CheckReport};
use crate::scalar::{Mode, Scalar};
use crate::structures::HermitianData;

/// A Hermitian pair together with the reproducing functional `f`.
#[derive(Clone, Debug)]
pub struct NormalJAlgebra {
    data: HermitianData,
    f: KForm,
}

impl NormalJAlgebra {
    pub fn new(data: HermitianData, f: KForm) -> Result<Self> {
        if f.degree() != 1 || f.dim() != data.dim() {
            return Err(Error::DimensionMismatch(
                "f must be a 1-form on the algebra".into(),
            ));
        }
        if f.mode() != data.mode() {
            return Err(Error::ModeMismatch("f and algebra use different modes".into()));
        }
        Ok(NormalJAlgebra { data, f })
    }

    pub fn data(&self) -> &HermitianData {
        &self.data
    }

    pub fn f(&self) -> &KForm {
        &self.f
    }

    pub fn dim(&self) -> usize {
        self.data.dim()
    }

    pub fn mode(&self) -> Mode {
        self.data.mode()
    }

    /// Defining axioms, itemized: complete solvability, `J`-invariance of
    /// `f` on brackets, reproduction of the metric by `f([J·, ·])`, and
    /// `ω = −df`.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let l = self.data.algebra();
        let n = self.dim();
        let mode = self.mode();
        let flags = l.classify();
        rep.push(CheckItem::of(
            "completely solvable",
            flags.completely_solvable.is_true(),
            format!("classification says {}", flags.completely_solvable),
        ));
        let mut inv = true;
        let mut wi = None;
        'inv: for i in 0..n {
            for j in i + 1..n {
                let ei = vec_unit(n, i, mode);
                let ej = vec_unit(n, j, mode);
                let ji = self.data.j().mul_vec(&ei);
                let jj = self.data.j().mul_vec(&ej);
                let lhs = self.f.eval(&[&l.bracket(&ji, &jj)]);
                let rhs = self.f.eval(&[&l.bracket(&ei, &ej)]);
                if !(lhs == rhs) {
                    inv = false;
                    wi = Some(format!("basis pair ({}, {})", i + 1, j + 1));
                    break 'inv;
                }
            }
        }
        rep.push(CheckItem::of_opt("f([Jx, Jy]) = f([x, y])", inv, wi));
        let mut repr = true;
        let mut wr = None;
        'rep: for i in 0..n {
            for j in 0..n {
                let ei = vec_unit(n, i, mode);
                let ej = vec_unit(n, j, mode);
                let ji = self.data.j().mul_vec(&ei);
                let lhs = self.f.eval(&[&l.bracket(&ji, &ej)]);
                let rhs = self.data.metric().inner(&ei, &ej);
                if !(lhs == rhs) {
                    repr = false;
                    wr = Some(format!("basis pair ({}, {})", i + 1, j + 1));
                    break 'rep;
                }
            }
        }
        rep.push(CheckItem::of_opt("⟨x, y⟩ = f([Jx, y])", repr, wr));
        match self.data.kahler_form() {
            Ok(omega) => {
                let df = ce_differential(l, &self.f);
                rep.push(CheckItem::of(
                    "ω = −df",
                    df.neg() == omega,
                    format!("−df = {}, ω = {omega}", df.neg()),
                ));
            }
            Err(e) => rep.push(CheckItem::fail("ω = −df", format!("{e}"))),
        }
        rep
    }
}

/// How a root space interacts with `J`; indices refer to the ordered list
/// of distinguished roots (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootKind {
    /// `ε_k`: one-dimensional, `J`-image inside `𝔞`.
    Distinguished { index: usize },
    /// `ε_k / 2`: `J`-invariant.
    HalfDistinguished { index: usize },
    /// `(ε_i − ε_j)/2` with `i` before `j` in the root order.
    HalfDifference { i: usize, j: usize },
    /// `(ε_i + ε_j)/2` with `i < j`.
    HalfSum { i: usize, j: usize },
    /// No recognised shape — flags a violated structure assumption.
    Unrecognized,
}

/// One simultaneous eigenspace of the `ad` action of `𝔞` on `𝔫`.
#[derive(Clone, Debug)]
pub struct RootSpace {
    /// Eigenvalue tuple over the echelon basis of `𝔞`.
    pub root: Vec<Scalar>,
    pub space: Subspace,
    pub kind: RootKind,
}

/// The full root decomposition of a normal Hermitian algebra.
#[derive(Clone, Debug)]
pub struct RootDecomposition {
    pub a_sub: Subspace,
    pub n_sub: Subspace,
    pub roots: Vec<RootSpace>,
    /// Distinguished root tuples in their canonical order.
    pub eps: Vec<Vec<Scalar>>,
    /// Unit, sign-normalized generators of the distinguished spaces.
    pub x_gens: Vec<Vec<Scalar>>,
    /// `h_k = J x_k`.
    pub h_gens: Vec<Vec<Scalar>>,
    /// `n_k` = dimension of the `ε_k/2` space.
    pub n_half: Vec<usize>,
    /// `n_mixed[i][j]` (for `i < j`) = dimension of the `(ε_i − ε_j)/2`
    /// space.
    pub n_mixed: Vec<Vec<usize>>,
}

impl RootDecomposition {
    /// Number of distinguished roots.
    pub fn rank(&self) -> usize {
        self.eps.len()
    }

    /// Evaluate a root tuple on an element of `𝔞`.
    pub fn eval_root(&self, root: &[Scalar], h: &[Scalar]) -> Option<Scalar> {
        let coords = self.a_sub.coords_of(h)?;
        let mode = self.a_sub.mode();
        let mut acc = Scalar::zero(mode);
        for (c, r) in coords.iter().zip(root.iter()) {
            acc += &(c * r);
        }
        Some(acc)
    }
}

fn scalar_lex_gt(a: &[Scalar], b: &[Scalar]) -> bool {
    for (x, y) in a.iter().zip(b.iter()) {
        let d = x - y;
        if d.is_zero() {
            continue;
        }
        return d.is_positive();
    }
    false
}

/// Eigen-split a square matrix into (eigenvalue, eigenbasis) pairs,
/// requiring a complete real diagonalization.
fn eigen_split(m: &Matrix) -> Result<Vec<(Scalar, Vec<Vec<Scalar>>)>> {
    match m.mode() {
        Mode::Exact => {
            let cp = m.char_poly();
            let roots = rational_roots_exact(&cp)?;
            let total: usize = roots.iter().map(|(_, k)| *k).sum();
            if total != m.rows {
                return Err(Error::NeedsFloat(
                    "the action has irrational eigenvalues; rerun in float mode".into(),
                ));
            }
            let mut out = Vec::new();
            let mut geo = 0;
            for (lam, _) in roots {
                let shifted = m.sub(&Matrix::identity(m.rows, m.mode()).scale(&lam));
                let ker = shifted.kernel();
                geo += ker.len();
                out.push((lam, ker));
            }
            if geo != m.rows {
                return Err(Error::ValidationFailed(
                    "the ad action of 𝔞 is not diagonalizable".into(),
                ));
            }
            Ok(out)
        }
        Mode::Float => real_eigen_decomposition(m),
    }
}

/// Compute the root decomposition: refine `𝔫` into simultaneous
/// eigenspaces of `ad_h` for `h` running over the echelon basis of `𝔞`,
/// classify each root space against `J`, and order the distinguished roots
/// canonically (difference-root constraints first, lexicographically
/// descending tuples as tie-break).
pub fn root_decomposition(nja: &NormalJAlgebra) -> Result<RootDecomposition> {
    let l = nja.data().algebra();
    let g = nja.data().metric();
    let jm = nja.data().j();
    let n = nja.dim();
    let mode = nja.mode();

    let n_sub = l.derived_subalgebra();
    let a_sub = n_sub.orthogonal_complement(g.gram());
    let a_basis: Vec<Vec<Scalar>> = a_sub.basis().to_vec();

    // refine 𝔫 into simultaneous eigenspaces
    let mut blocks: Vec<(Vec<Scalar>, Subspace)> = if n_sub.dim() == 0 {
        Vec::new()
    } else {
        vec![(Vec::new(), n_sub.clone())]
    };
    for h in &a_basis {
        let ad_h = l.ad(h);
        let mut next = Vec::new();
        for (tuple, block) in &blocks {
            let d = block.dim();
            // matrix of ad_h restricted to the block
            let mut cols = Vec::with_capacity(d);
            for b in block.basis() {
                let img = ad_h.mul_vec(b);
                let Some(coords) = block.coords_of(&img) else {
                    return Err(Error::ValidationFailed(
                        "ad of 𝔞 does not preserve a refinement block".into(),
                    ));
                };
                cols.push(coords);
            }
            let restricted = Matrix::from_fn(d, d, mode, |r, c| cols[c][r].clone());
            for (lam, eigvecs) in eigen_split(&restricted)? {
                let ambient: Vec<Vec<Scalar>> =
                    eigvecs.iter().map(|v| block.from_coords(v)).collect();
                let mut t = tuple.clone();
                t.push(lam);
                next.push((t, Subspace::from_spanning(n, mode, &ambient)));
            }
        }
        blocks = next;
    }

    // distinguished roots: one-dimensional spaces sent into 𝔞 by J
    let mut dist: Vec<(Vec<Scalar>, Subspace)> = Vec::new();
    for (tuple, space) in &blocks {
        if space.dim() == 1 && a_sub.contains(&jm.mul_vec(&space.basis()[0])) {
            dist.push((tuple.clone(), space.clone()));
        }
    }
    let r = dist.len();

    // ordering constraints: p before q whenever ½(ε_p − ε_q) is a root
    let two = Scalar::from_int(2, mode);
    let mut edges = vec![vec![false; r]; r];
    for (tuple, _) in &blocks {
        let doubled = vec_scale(&two, tuple);
        for p in 0..r {
            for q in 0..r {
                if p == q {
                    continue;
                }
                let diff: Vec<Scalar> = dist[p]
                    .0
                    .iter()
                    .zip(dist[q].0.iter())
                    .map(|(a, b)| a - b)
                    .collect();
                if vec_eq(&doubled, &diff) {
                    edges[p][q] = true;
                }
            }
        }
    }
    let mut order: Vec<usize> = Vec::with_capacity(r);
    let mut placed = vec![false; r];
    while order.len() < r {
        // available: unplaced with no unplaced predecessor
        let mut pick: Option<usize> = None;
        for c in 0..r {
            if placed[c] {
                continue;
            }
            let blocked = (0..r).any(|p| !placed[p] && p != c && edges[p][c]);
            if blocked {
                continue;
            }
            pick = match pick {
                None => Some(c),
                Some(best) => {
                    if scalar_lex_gt(&dist[c].0, &dist[best].0) {
                        Some(c)
                    } else {
                        Some(best)
                    }
                }
            };
        }
        let Some(c) = pick else {
            return Err(Error::ValidationFailed(
                "cyclic ordering constraints among distinguished roots".into(),
            ));
        };
        placed[c] = true;
        order.push(c);
    }
    let eps: Vec<Vec<Scalar>> = order.iter().map(|&c| dist[c].0.clone()).collect();

    // x generators: unit, sign-normalized so that f(x_k) > 0
    let mut x_gens = Vec::with_capacity(r);
    let mut h_gens = Vec::with_capacity(r);
    for &c in &order {
        let w = dist[c].1.basis()[0].clone();
        let norm = g.norm_sq(&w).sqrt()?;
        let mut x = vec_scale(&norm.recip()?, &w);
        let fx = nja.f().eval(&[&x]);
        if fx.is_negative() {
            x = vec_scale(&Scalar::from_int(-1, mode), &x);
        }
        h_gens.push(jm.mul_vec(&x));
        x_gens.push(x);
    }

    // classify every root space
    let mut roots = Vec::with_capacity(blocks.len());
    for (tuple, space) in blocks {
        let doubled = vec_scale(&two, &tuple);
        let mut kind = RootKind::Unrecognized;
        for (k, e) in eps.iter().enumerate() {
            if vec_eq(&tuple, e) {
                kind = RootKind::Distinguished { index: k };
                break;
            }
            if vec_eq(&doubled, e) {
                kind = RootKind::HalfDistinguished { index: k };
                break;
            }
        }
        if kind == RootKind::Unrecognized {
            'pairs: for i in 0..r {
                for j in 0..r {
                    if i == j {
                        continue;
                    }
                    let diff: Vec<Scalar> = eps[i]
                        .iter()
                        .zip(eps[j].iter())
                        .map(|(a, b)| a - b)
                        .collect();
                    if vec_eq(&doubled, &diff) {
                        kind = RootKind::HalfDifference { i, j };
                        break 'pairs;
                    }
                    if i < j {
                        let sum: Vec<Scalar> = eps[i]
                            .iter()
                            .zip(eps[j].iter())
                            .map(|(a, b)| a + b)
                            .collect();
                        if vec_eq(&doubled, &sum) {
                            kind = RootKind::HalfSum { i, j };
                            break 'pairs;
                        }
                    }
                }
            }
        }
        roots.push(RootSpace { root: tuple, space, kind });
    }

    // multiplicities
    let mut n_half = vec![0usize; r];
    let mut n_mixed = vec![vec![0usize; r]; r];
    for rs in &roots {
        match rs.kind {
            RootKind::HalfDistinguished { index } => n_half[index] += rs.space.dim(),
            RootKind::HalfDifference { i, j } if i < j => n_mixed[i][j] += rs.space.dim(),
            _ => {}
        }
    }

    Ok(RootDecomposition {
        a_sub,
        n_sub,
        roots,
        eps,
        x_gens,
        h_gens,
        n_half,
        n_mixed,
    })
}

/// Structural invariants of a root decomposition, itemized.
pub fn root_report(nja: &NormalJAlgebra, dec: &RootDecomposition) -> CheckReport {
    let mut rep = CheckReport::new();
    let l = nja.data().algebra();
    let g = nja.data().metric();
    let jm = nja.data().j();
    let mode = nja.mode();
    let r = dec.rank();

    // 𝔞 abelian, complementary to 𝔫
    let mut abelian = true;
    let ab = dec.a_sub.basis();
    'ab: for (i, x) in ab.iter().enumerate() {
        for y in ab.iter().skip(i + 1) {
            if !vec_is_zero(&l.bracket(x, y)) {
                abelian = false;
                break 'ab;
            }
        }
    }
    rep.push(CheckItem::of("𝔞 is abelian", abelian, "a bracket of 𝔞 is nonzero"));
    rep.push(CheckItem::of(
        "𝔡 = 𝔞 ⊕ 𝔫",
        dec.a_sub.dim() + dec.n_sub.dim() == nja.dim()
            && dec.a_sub.sum(&dec.n_sub).dim() == nja.dim(),
        "the complement and the derived subalgebra do not fill the algebra",
    ));
    // root spaces exhaust 𝔫
    let total: usize = dec.roots.iter().map(|rs| rs.space.dim()).sum();
    rep.push(CheckItem::of(
        "root spaces exhaust 𝔫",
        total == dec.n_sub.dim(),
        format!("root spaces cover {total} of {} dimensions", dec.n_sub.dim()),
    ));
    // every root recognised
    let unrec = dec
        .roots
        .iter()
        .filter(|rs| rs.kind == RootKind::Unrecognized)
        .count();
    rep.push(CheckItem::of(
        "every root has a recognised shape",
        unrec == 0,
        format!("{unrec} root spaces have no recognised shape"),
    ));

    // J behaviour per kind
    let mut j_ok = true;
    let mut j_w = None;
    'jk: for rs in &dec.roots {
        match &rs.kind {
            RootKind::Distinguished { .. } => {
                for b in rs.space.basis() {
                    if !dec.a_sub.contains(&jm.mul_vec(b)) {
                        j_ok = false;
                        j_w = Some("J of a distinguished space leaves 𝔞".to_string());
                        break 'jk;
                    }
                }
            }
            RootKind::HalfDistinguished { .. } => {
                for b in rs.space.basis() {
                    if !rs.space.contains(&jm.mul_vec(b)) {
                        j_ok = false;
                        j_w = Some("a half-root space is not J-invariant".to_string());
                        break 'jk;
                    }
                }
            }
            RootKind::HalfDifference { i, j } | RootKind::HalfSum { i, j } => {
                // J swaps the (ε_i−ε_j)/2 and (ε_i+ε_j)/2 spaces
                let other_kind = match rs.kind {
                    RootKind::HalfDifference { .. } => RootKind::HalfSum {
                        i: (*i).min(*j),
                        j: (*i).max(*j),
                    },
                    _ => RootKind::HalfDifference { i: *i, j: *j },
                };
                let partner = dec.roots.iter().find(|o| {
                    o.kind == other_kind
                        || matches!(
                            (&o.kind, &rs.kind),
                            (
                                RootKind::HalfDifference { i: oi, j: oj },
                                RootKind::HalfSum { i: si, j: sj }
                            ) if (oi == si && oj == sj) || (oi == sj && oj == si)
                        )
                });
                let Some(partner) = partner else {
                    j_ok = false;
                    j_w = Some("a mixed root has no partner space".to_string());
                    break 'jk;
                };
                for b in rs.space.basis() {
                    if !partner.space.contains(&jm.mul_vec(b)) {
                        j_ok = false;
                        j_w = Some("J does not swap a mixed pair of root spaces".to_string());
                        break 'jk;
                    }
                }
            }
            RootKind::Unrecognized => {}
        }
    }
    rep.push(CheckItem::of_opt(
        "J acts on root spaces as the shapes dictate",
        j_ok,
        j_w,
    ));

    // ε_k(h_i) = 0 for i ≠ k, and the positivity/normalization chain
    let mut cross_ok = true;
    for k in 0..r {
        for i in 0..r {
            if i == k {
                continue;
            }
            let v = dec.eval_root(&dec.eps[k], &dec.h_gens[i]);
            if !v.map(|v| v.is_zero()).unwrap_or(false) {
                cross_ok = false;
            }
        }
    }
    rep.push(CheckItem::of(
        "ε_k(h_i) = 0 for i ≠ k",
        cross_ok,
        "a distinguished root sees a foreign generator",
    ));

    let mut f_zero = true;
    for rs in &dec.roots {
        if matches!(rs.kind, RootKind::Distinguished { .. }) {
            continue;
        }
        for b in rs.space.basis() {
            if !nja.f().eval(&[b]).is_zero() {
                f_zero = false;
            }
        }
    }
    rep.push(CheckItem::of(
        "f vanishes on non-distinguished root spaces",
        f_zero,
        "f is nonzero off the distinguished spaces",
    ));

    let mut norm_ok = true;
    let mut norm_w = None;
    for k in 0..r {
        let x = &dec.x_gens[k];
        let fx = nja.f().eval(&[x]);
        let ejx = dec
            .eval_root(&dec.eps[k], &dec.h_gens[k])
            .unwrap_or_else(|| Scalar::zero(mode));
        if !fx.is_positive() || !ejx.is_positive() {
            norm_ok = false;
            norm_w = Some(format!("generator {} has f(x) = {fx}, ε(Jx) = {ejx}", k + 1));
            break;
        }
        let prod = &ejx * &fx;
        if !(g.norm_sq(x) == prod) {
            norm_ok = false;
            norm_w = Some(format!("generator {}: ‖x‖² ≠ ε(Jx)·f(x)", k + 1));
            break;
        }
    }
    rep.push(CheckItem::of_opt(
        "f(x_k) > 0, ε_k(Jx_k) > 0, ‖x_k‖² = ε_k(Jx_k) f(x_k)",
        norm_ok,
        norm_w,
    ));

    // trace formula: tr ad_{h_k} = ε_k(h_k)(1 + ½ n_k + Σ_{j>k} n_{kj}) > 0
    let mut tr_ok = true;
    let mut tr_w = None;
    for k in 0..r {
        let tr = l.ad(&dec.h_gens[k]).trace();
        let ekk = dec
            .eval_root(&dec.eps[k], &dec.h_gens[k])
            .unwrap_or_else(|| Scalar::zero(mode));
        let mut factor = Scalar::one(mode);
        factor += &(&Scalar::ratio(1, 2, mode)
            * &Scalar::from_int(dec.n_half[k] as i64, mode));
        for j in k + 1..r {
            factor += &Scalar::from_int(dec.n_mixed[k][j] as i64, mode);
        }
        let want = &ekk * &factor;
        if !(tr == want) || !tr.is_positive() {
            tr_ok = false;
            tr_w = Some(format!(
                "generator {}: tr ad = {tr}, formula gives {want}",
                k + 1
            ));
            break;
        }
    }
    rep.push(CheckItem::of_opt(
        "tr ad_{h_k} = ε_k(h_k)(1 + ½n_k + Σ_{j>k} n_kj) > 0",
        tr_ok,
        tr_w,
    ));

    // Ricci on 𝔞: Ric(h, h) = −Σ_α α(h)² dim 𝔫_α
    let conn = g.levi_civita();
    let ric = conn.ricci();
    let mut ric_ok = true;
    let mut ric_w = None;
    for h in dec.a_sub.basis() {
        let mut want = Scalar::zero(mode);
        for rs in &dec.roots {
            let a = dec
                .eval_root(&rs.root, h)
                .unwrap_or_else(|| Scalar::zero(mode));
            let d = Scalar::from_int(rs.space.dim() as i64, mode);
            want += &(&(&a * &a) * &d);
        }
        let got = crate::linalg::vec_dot(h, &ric.mul_vec(h));
        if !(got == -&want) {
            ric_ok = false;
            ric_w = Some(format!("Ric(h, h) = {got}, −Σ α(h)²·dim = {}", -&want));
            break;
        }
    }
    rep.push(CheckItem::of_opt(
        "Ric(h, h) = −Σ_α α(h)² dim 𝔫_α on 𝔞",
        ric_ok,
        ric_w,
    ));
    rep
}

/// Outcome of [`datri_einstein`].
#[derive(Clone, Debug)]
pub struct DatriVerdict {
    /// `C_k = B_k / f(x_k)²` per distinguished root, in root order.
    pub per_root: Vec<Scalar>,
    /// All constants agree.
    pub einstein: bool,
    /// The common constant when `einstein` holds.
    pub constant: Option<Scalar>,
    /// When `einstein`, whether `Ric = −C·g` holds for the actual
    /// curvature tensor.
    pub ricci_matches: Option<bool>,
}

/// The combinatorial Einstein test: compute the per-root constants and
/// compare; on success cross-check `Ric = −C·g` against the curvature.
pub fn datri_einstein(nja: &NormalJAlgebra, dec: &RootDecomposition) -> Result<DatriVerdict> {
    let mode = nja.mode();
    let r = dec.rank();
    if r == 0 {
        return Err(Error::ValidationFailed(
            "no distinguished roots; the Einstein test needs rank ≥ 1".into(),
        ));
    }
    let quarter = Scalar::ratio(1, 4, mode);
    let half = Scalar::ratio(1, 2, mode);
    let mut per_root = Vec::with_capacity(r);
    for k in 0..r {
        let mut b = Scalar::one(mode);
        b += &(&quarter * &Scalar::from_int(dec.n_half[k] as i64, mode));
        let mut mixed = 0usize;
        for j in 0..k {
            mixed += dec.n_mixed[j][k];
        }
        for j in k + 1..r {
            mixed += dec.n_mixed[k][j];
        }
        b += &(&half * &Scalar::from_int(mixed as i64, mode));
        let fx = nja.f().eval(&[&dec.x_gens[k]]);
        let c = &b / &(&fx * &fx);
        per_root.push(c);
    }
    let einstein = per_root.iter().all(|c| c == &per_root[0]);
    let (constant, ricci_matches) = if einstein {
        let c = per_root[0].clone();
        let conn = nja.data().metric().levi_civita();
        let ric = conn.ricci();
        let want = nja.data().metric().gram().scale(&-&c);
        (Some(c), Some(ric.approx_eq(&want)))
    } else {
        (None, None)
    };
    Ok(DatriVerdict {
        per_root,
        einstein,
        constant,
        ricci_matches,
    })
}

/// The candidate twist vectors `−ε_k(h_k) x_k`, one per distinguished
/// root.
pub fn h0_candidates(dec: &RootDecomposition) -> Vec<Vec<Scalar>> {
    let mut out = Vec::with_capacity(dec.rank());
    for k in 0..dec.rank() {
        let ekk = dec
            .eval_root(&dec.eps[k], &dec.h_gens[k])
            .expect("h_k lies in 𝔞");
        out.push(vec_scale(&-&ekk, &dec.x_gens[k]));
    }
    out
}

/// Whether the candidate at (1-based) position `i` is obstructed: some
/// earlier root pairs with it through a mixed space.
pub fn eta_einstein_obstruction(dec: &RootDecomposition, i_one_based: usize) -> bool {
    let i = i_one_based - 1;
    (0..i).any(|j| dec.n_mixed[j][i] > 0)
}

/// Basis of the skew-Hermitian derivations: `D` a derivation with
/// `DJ = JD` and `Dᵀ G = −G D`, via one joint linear solve on the `n²`
/// matrix entries.
pub fn unitary_derivations(h: &HermitianData) -> Result<Vec<Matrix>> {
    let l = h.algebra();
    let n = h.dim();
    let mode = h.mode();
    let nn = n * n;
    let idx = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();

    // derivation: D[e_i, e_j] − [D e_i, e_j] − [e_i, D e_j] = 0, componentwise
    for i in 0..n {
        for j in i + 1..n {
            let br = l.bracket_basis(i, j);
            for t in 0..n {
                let mut row = crate::linalg::vec_zero(nn, mode);
                // D applied to the bracket: Σ_k br_k D[t][k]
                for (k, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        row[idx(t, k)] += c;
                    }
                }
                // −[D e_i, e_j]: D e_i = Σ_r D[r][i] e_r
                for rr in 0..n {
                    let b = l.bracket_basis(rr, j);
                    if !b[t].is_zero() {
                        row[idx(rr, i)] -= &b[t];
                    }
                    let b2 = l.bracket_basis(i, rr);
                    if !b2[t].is_zero() {
                        row[idx(rr, j)] -= &b2[t];
                    }
                }
                rows.push(row);
            }
        }
    }
    // DJ − JD = 0
    for r in 0..n {
        for c in 0..n {
            let mut row = crate::linalg::vec_zero(nn, mode);
            for k in 0..n {
                if !h.j().get(k, c).is_zero() {
                    row[idx(r, k)] += h.j().get(k, c);
                }
                if !h.j().get(r, k).is_zero() {
                    row[idx(k, c)] -= h.j().get(r, k);
                }
            }
            rows.push(row);
        }
    }
    // Dᵀ G + G D = 0
    let g = h.metric().gram();
    for r in 0..n {
        for c in 0..n {
            let mut row = crate::linalg::vec_zero(nn, mode);
            for k in 0..n {
                if !g.get(k, c).is_zero() {
                    row[idx(k, r)] += g.get(k, c);
                }
                if !g.get(r, k).is_zero() {
                    row[idx(k, c)] += g.get(r, k);
                }
            }
            rows.push(row);
        }
    }
    let system = Matrix::from_rows(rows, nn, mode)?;
    let kernel = system.kernel();
    Ok(kernel
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, mode, |r, c| v[idx(r, c)].clone()))
        .collect())
}

/// Structure lemmas for a skew-Hermitian derivation against a root
/// decomposition: `D(𝔞) = 0`, `D` kills the distinguished spaces, and `D`
/// preserves the half spaces and the mixed pairs.
pub fn derivation_lemma_report(dec: &RootDecomposition, d: &Matrix) -> CheckReport {
    let mut rep = CheckReport::new();
    let mut a_killed = true;
    for h in dec.a_sub.basis() {
        if !vec_is_zero(&d.mul_vec(h)) {
            a_killed = false;
        }
    }
    rep.push(CheckItem::of(
        "D(𝔞) = 0",
        a_killed,
        "D does not annihilate 𝔞",
    ));
    let mut dist_killed = true;
    let mut half_pres = true;
    let mut mixed_pres = true;
    for rs in &dec.roots {
        match rs.kind {
            RootKind::Distinguished { .. } => {
                for b in rs.space.basis() {
                    if !vec_is_zero(&d.mul_vec(b)) {
                        dist_killed = false;
                    }
                }
            }
            RootKind::HalfDistinguished { .. } => {
                for b in rs.space.basis() {
                    if !rs.space.contains(&d.mul_vec(b)) {
                        half_pres = false;
                    }
                }
            }
            RootKind::HalfDifference { i, j } | RootKind::HalfSum { i, j } => {
                // D preserves the two-root sum 𝔫_{(εi−εj)/2} ⊕ 𝔫_{(εi+εj)/2}
                let (lo, hi) = (i.min(j), i.max(j));
                let mut sum = rs.space.clone();
                for o in &dec.roots {
                    match o.kind {
                        RootKind::HalfDifference { i: oi, j: oj }
                        | RootKind::HalfSum { i: oi, j: oj } => {
                            if oi.min(oj) == lo && oi.max(oj) == hi {
                                sum = sum.sum(&o.space);
                            }
                        }
                        _ => {}
                    }
                }
                for b in rs.space.basis() {
                    if !sum.contains(&d.mul_vec(b)) {
                        mixed_pres = false;
                    }
                }
            }
            RootKind::Unrecognized => {}
        }
    }
    rep.push(CheckItem::of(
        "D kills the distinguished root spaces",
        dist_killed,
        "D moves a distinguished generator",
    ));
    rep.push(CheckItem::of(
        "D preserves the half-root spaces",
        half_pres,
        "D leaves a half-root space",
    ));
    rep.push(CheckItem::of(
        "D preserves each mixed pair of root spaces",
        mixed_pres,
        "D leaves a mixed pair",
    ));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::MetricLieAlgebra;
    use crate::lie::LieAlgebra;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }

    fn r(p: i64, q: i64) -> Scalar {
        Scalar::ratio(p, q, Mode::Exact)
    }

    fn aff_normal_j() -> NormalJAlgebra {
        // [e1, e2] = e2, J e2 = e1, f = e²
        let l = LieAlgebra::new_validated(2, None, Mode::Exact, &[(0, 1, 1, s(1))]).unwrap();
        let m = MetricLieAlgebra::standard(l);
        let jm = Matrix::from_rows(
            vec![vec![s(0), s(1)], vec![s(-1), s(0)]],
            2,
            Mode::Exact,
        )
        .unwrap();
        let h = HermitianData::new(m, jm).unwrap();
        let f = KForm::from_covector(&[s(0), s(1)], Mode::Exact);
        NormalJAlgebra::new(h, f).unwrap()
    }

    fn d_ab(a: i64, b: i64) -> NormalJAlgebra {
        // basis (h1, x1, h2, x2); [h1,x1] = a x1, [h2,x2] = b x2;
        // J x1 = h1, J x2 = h2; f = (1/a)x¹ + (1/b)x²
        let l = LieAlgebra::new_validated(
            4,
            None,
            Mode::Exact,
            &[(0, 1, 1, s(a)), (2, 3, 3, s(b))],
        )
        .unwrap();
        let m = MetricLieAlgebra::standard(l);
        let mut jm = Matrix::zeros(4, 4, Mode::Exact);
        jm.set(0, 1, s(1));
        jm.set(1, 0, s(-1));
        jm.set(2, 3, s(1));
        jm.set(3, 2, s(-1));
        let h = HermitianData::new(m, jm).unwrap();
        let f = KForm::from_covector(&[s(0), r(1, a), s(0), r(1, b)], Mode::Exact);
        NormalJAlgebra::new(h, f).unwrap()
    }

    fn d_a(a: i64) -> NormalJAlgebra {
        // basis (h1, x1, x2, x3); [h1,x1] = a x1, [h1,x2] = (a/2)x2,
        // [h1,x3] = (a/2)x3, [x2,x3] = a x1; J x1 = h1, J x3 = x2
        let l = LieAlgebra::new_validated(
            4,
            None,
            Mode::Exact,
            &[
                (0, 1, 1, s(a)),
                (0, 2, 2, r(a, 2)),
                (0, 3, 3, r(a, 2)),
                (2, 3, 1, s(a)),
            ],
        )
        .unwrap();
        let m = MetricLieAlgebra::standard(l);
        let mut jm = Matrix::zeros(4, 4, Mode::Exact);
        jm.set(0, 1, s(1));
        jm.set(1, 0, s(-1));
        jm.set(2, 3, s(1));
        jm.set(3, 2, s(-1));
        let h = HermitianData::new(m, jm).unwrap();
        let f = KForm::from_covector(&[s(0), r(1, a), s(0), s(0)], Mode::Exact);
        NormalJAlgebra::new(h, f).unwrap()
    }

    fn six_dim() -> NormalJAlgebra {
        let l = LieAlgebra::new_validated(
            6,
            None,
            Mode::Exact,
            &[
                (0, 2, 2, s(1)),
                (1, 2, 2, s(-1)),
                (0, 3, 3, s(2)),
                (2, 5, 3, s(2)),
                (1, 4, 4, s(2)),
                (0, 5, 5, s(1)),
                (1, 5, 5, s(1)),
                (2, 4, 5, s(1)),
            ],
        )
        .unwrap();
        let mut gram = Matrix::identity(6, Mode::Exact);
        gram.set(4, 4, r(1, 4));
        let m = MetricLieAlgebra::new(l, gram).unwrap();
        let mut jm = Matrix::zeros(6, 6, Mode::Exact);
        jm.set(3, 0, s(1)); // J e1 = e4
        jm.set(4, 1, s(2)); // J e2 = 2 e5
        jm.set(5, 2, s(1)); // J e3 = e6
        jm.set(0, 3, s(-1));
        jm.set(1, 4, r(-1, 2));
        jm.set(2, 5, s(-1));
        let h = HermitianData::new(m, jm).unwrap();
        let f = KForm::from_covector(
            &[s(0), s(0), s(0), r(-1, 2), r(-1, 4), s(0)],
            Mode::Exact,
        );
        NormalJAlgebra::new(h, f).unwrap()
    }

    #[test]
    fn affine_axioms_and_single_root() {
        let nja = aff_normal_j();
        assert!(nja.validate().ok(), "{}", nja.validate());
        let dec = root_decomposition(&nja).unwrap();
        assert_eq!(dec.rank(), 1);
        assert_eq!(dec.eps[0], vec![s(1)]);
        assert_eq!(dec.x_gens[0], vec![s(0), s(1)]);
        assert_eq!(dec.h_gens[0], vec![s(1), s(0)]);
        assert!(root_report(&nja, &dec).ok(), "{}", root_report(&nja, &dec));
        let v = datri_einstein(&nja, &dec).unwrap();
        assert!(v.einstein);
        assert_eq!(v.constant, Some(s(1)));
        assert_eq!(v.ricci_matches, Some(true));
    }

    #[test]
    fn two_block_family_has_two_distinguished_roots() {
        let nja = d_ab(1, 2);
        assert!(nja.validate().ok());
        let dec = root_decomposition(&nja).unwrap();
        assert_eq!(dec.rank(), 2);
        assert_eq!(dec.eps[0], vec![s(1), s(0)]);
        assert_eq!(dec.eps[1], vec![s(0), s(2)]);
        assert!(dec.roots.iter().all(|rs| matches!(
            rs.kind,
            RootKind::Distinguished { .. }
        )));
        assert!(root_report(&nja, &dec).ok(), "{}", root_report(&nja, &dec));
        // candidates −a x₁, −b x₂
        let cands = h0_candidates(&dec);
        assert_eq!(cands[0], vec![s(0), s(-1), s(0), s(0)]);
        assert_eq!(cands[1], vec![s(0), s(0), s(0), s(-2)]);
        assert!(!eta_einstein_obstruction(&dec, 1));
        assert!(!eta_einstein_obstruction(&dec, 2));
        // Einstein iff a² = b²
        let v = datri_einstein(&nja, &dec).unwrap();
        assert!(!v.einstein);
        assert_eq!(v.per_root, vec![s(1), s(4)]);
        let v2 = datri_einstein(&d_ab(2, 2), &root_decomposition(&d_ab(2, 2)).unwrap()).unwrap();
        assert!(v2.einstein);
        assert_eq!(v2.constant, Some(s(4)));
        assert_eq!(v2.ricci_matches, Some(true));
        // no skew-Hermitian derivations here
        assert!(unitary_derivations(nja.data()).unwrap().is_empty());
    }

    #[test]
    fn half_root_family_and_its_rotation_derivation() {
        let nja = d_a(1);
        assert!(nja.validate().ok(), "{}", nja.validate());
        let dec = root_decomposition(&nja).unwrap();
        assert_eq!(dec.rank(), 1);
        assert_eq!(dec.n_half[0], 2);
        assert!(root_report(&nja, &dec).ok(), "{}", root_report(&nja, &dec));
        let v = datri_einstein(&nja, &dec).unwrap();
        assert!(v.einstein);
        assert_eq!(v.constant, Some(r(3, 2)));
        assert_eq!(v.ricci_matches, Some(true));
        // exactly one skew-Hermitian derivation: the (x2, x3) rotation
        let ders = unitary_derivations(nja.data()).unwrap();
        assert_eq!(ders.len(), 1);
        let d = &ders[0];
        assert!(vec_is_zero(&d.mul_vec(&vec_unit(4, 0, Mode::Exact))));
        assert!(vec_is_zero(&d.mul_vec(&vec_unit(4, 1, Mode::Exact))));
        assert!(!vec_is_zero(&d.mul_vec(&vec_unit(4, 2, Mode::Exact))));
        let lem = derivation_lemma_report(&dec, d);
        assert!(lem.ok(), "{lem}");
    }

    #[test]
    fn six_dimensional_oracle() {
        let nja = six_dim();
        let val = nja.validate();
        assert!(val.ok(), "{val}");
        let dec = root_decomposition(&nja).unwrap();
        assert_eq!(dec.rank(), 2);
        assert_eq!(dec.eps[0], vec![s(2), s(0)]);
        assert_eq!(dec.eps[1], vec![s(0), s(2)]);
        // x₁ = −e4, x₂ = −2e5
        assert_eq!(dec.x_gens[0], vec![s(0), s(0), s(0), s(-1), s(0), s(0)]);
        assert_eq!(dec.x_gens[1], vec![s(0), s(0), s(0), s(0), s(-2), s(0)]);
        assert_eq!(dec.h_gens[0], vec![s(1), s(0), s(0), s(0), s(0), s(0)]);
        assert_eq!(dec.h_gens[1], vec![s(0), s(1), s(0), s(0), s(0), s(0)]);
        assert_eq!(dec.n_half, vec![0, 0]);
        assert_eq!(dec.n_mixed[0][1], 1);
        // kinds: one difference, one sum
        let diffs = dec
            .roots
            .iter()
            .filter(|rs| matches!(rs.kind, RootKind::HalfDifference { .. }))
            .count();
        let sums = dec
            .roots
            .iter()
            .filter(|rs| matches!(rs.kind, RootKind::HalfSum { .. }))
            .count();
        assert_eq!((diffs, sums), (1, 1));
        let rep = root_report(&nja, &dec);
        assert!(rep.ok(), "{rep}");
        // trace oracle: tr ad_{h1} = 4, tr ad_{h2} = 2
        assert_eq!(nja.data().algebra().ad(&dec.h_gens[0]).trace(), s(4));
        assert_eq!(nja.data().algebra().ad(&dec.h_gens[1]).trace(), s(2));
        // Einstein with constant 6
        let v = datri_einstein(&nja, &dec).unwrap();
        assert!(v.einstein);
        assert_eq!(v.constant, Some(s(6)));
        assert_eq!(v.ricci_matches, Some(true));
        // obstruction: candidate 2 is blocked by the mixed pair
        assert!(!eta_einstein_obstruction(&dec, 1));
        assert!(eta_einstein_obstruction(&dec, 2));
        // no skew-Hermitian derivations
        assert!(unitary_derivations(nja.data()).unwrap().is_empty());
    }
}
