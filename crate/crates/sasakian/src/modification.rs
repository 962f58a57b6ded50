//! Bracket modifications of a Hermitian algebra: replace `[x, y]` by
//! `[x, y] + φ_x y − φ_y x` where `x ↦ φ_x` is a linear assignment of
//! skew-Hermitian derivations subject to
//!
//! * `[φ_x, φ_y] = 0` (the assigned maps commute),
//! * `φ_{[x, y]} = 0` (the assignment kills the derived subalgebra),
//! * `φ_{φ_x y} = 0` (the assignment kills every image vector).
//!
//! Under these conditions the modified bracket is again a Lie bracket on
//! the same inner-product space, shares the Levi-Civita connection — hence
//! the full curvature tensor — with the original, preserves the derived
//! subalgebra, and keeps the Kähler form exact for the same primitive.

use crate::error::{Error, Result};
use crate::forms::{ce_differential, KForm};
use crate::linalg::{vec_unit, vec_zero, Matrix};
use crate::lie::LieAlgebra;
use crate::normal_j::unitary_derivations;
use crate::report::{CheckItem, CheckReport};
use crate::scalar::{Mode, Scalar};
use crate::structures::HermitianData;

/// A linear assignment of one candidate map per basis vector.
#[derive(Clone, Debug)]
pub struct ModificationMap {
    base: HermitianData,
    maps: Vec<Matrix>,
}

impl ModificationMap {
    pub fn new(base: HermitianData, maps: Vec<Matrix>) -> Result<Self> {
        let n = base.dim();
        if maps.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "need one map per basis vector: got {} for dimension {n}",
                maps.len()
            )));
        }
        for m in &maps {
            if m.rows != n || m.cols != n {
                return Err(Error::DimensionMismatch(
                    "every assigned map must be square of the algebra dimension".into(),
                ));
            }
            if m.mode() != base.mode() {
                return Err(Error::ModeMismatch(
                    "assigned maps and base algebra use different modes".into(),
                ));
            }
        }
        Ok(ModificationMap { base, maps })
    }

    pub fn base(&self) -> &HermitianData {
        &self.base
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// The map assigned to an arbitrary vector, by linearity.
    pub fn map_of(&self, x: &[Scalar]) -> Matrix {
        let n = self.base.dim();
        let mut acc = Matrix::zeros(n, n, self.base.mode());
        for (c, m) in x.iter().zip(self.maps.iter()) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    /// Rescale the whole assignment.
    pub fn scale(&self, c: &Scalar) -> ModificationMap {
        ModificationMap {
            base: self.base.clone(),
            maps: self.maps.iter().map(|m| m.scale(c)).collect(),
        }
    }

    /// Verify the defining conditions, itemized.
    pub fn check(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let l = self.base.algebra();
        let n = self.base.dim();
        let mode = self.base.mode();

        // each assigned map is a skew-Hermitian derivation
        let mut der_ok = true;
        let mut der_w = None;
        'der: for (i, d) in self.maps.iter().enumerate() {
            for a in 0..n {
                for b in a + 1..n {
                    let ea = vec_unit(n, a, mode);
                    let eb = vec_unit(n, b, mode);
                    let lhs = d.mul_vec(&l.bracket_basis(a, b));
                    let rhs = crate::linalg::vec_add(
                        &l.bracket(&d.mul_vec(&ea), &eb),
                        &l.bracket(&ea, &d.mul_vec(&eb)),
                    );
                    if !crate::linalg::vec_eq(&lhs, &rhs) {
                        der_ok = false;
                        der_w = Some(format!(
                            "map {} fails the derivation rule on basis pair ({}, {})",
                            i + 1,
                            a + 1,
                            b + 1
                        ));
                        break 'der;
                    }
                }
            }
            let j = self.base.j();
            if !d.matmul(j).approx_eq(&j.matmul(d)) {
                der_ok = false;
                der_w = Some(format!("map {} does not commute with J", i + 1));
                break 'der;
            }
            let g = self.base.metric().gram();
            if !d.transpose().matmul(g).approx_eq(&g.matmul(d).neg()) {
                der_ok = false;
                der_w = Some(format!("map {} is not skew for the metric", i + 1));
                break 'der;
            }
        }
        rep.push(CheckItem::of_opt(
            "every assigned map is a skew-Hermitian derivation",
            der_ok,
            der_w,
        ));

        // pairwise commutation
        let mut comm_ok = true;
        let mut comm_w = None;
        'comm: for i in 0..n {
            for j in i + 1..n {
                if !self.maps[i].commutator(&self.maps[j]).is_zero() {
                    comm_ok = false;
                    comm_w = Some(format!("maps {} and {} do not commute", i + 1, j + 1));
                    break 'comm;
                }
            }
        }
        rep.push(CheckItem::of_opt(
            "assigned maps commute pairwise",
            comm_ok,
            comm_w,
        ));

        // the assignment kills brackets: φ_{[e_i, e_j]} = 0
        let mut br_ok = true;
        let mut br_w = None;
        'br: for i in 0..n {
            for j in i + 1..n {
                if !self.map_of(&l.bracket_basis(i, j)).is_zero() {
                    br_ok = false;
                    br_w = Some(format!(
                        "the map assigned to [e{}, e{}] is nonzero",
                        i + 1,
                        j + 1
                    ));
                    break 'br;
                }
            }
        }
        rep.push(CheckItem::of_opt(
            "the assignment kills the derived subalgebra",
            br_ok,
            br_w,
        ));

        // the assignment kills image vectors: φ_{φ_x y} = 0
        let mut img_ok = true;
        let mut img_w = None;
        'img: for i in 0..n {
            for j in 0..n {
                let v = self.maps[i].mul_vec(&vec_unit(n, j, mode));
                if !self.map_of(&v).is_zero() {
                    img_ok = false;
                    img_w = Some(format!(
                        "the map assigned to φ_{{e{}}} e{} is nonzero",
                        i + 1,
                        j + 1
                    ));
                    break 'img;
                }
            }
        }
        rep.push(CheckItem::of_opt(
            "the assignment kills every image vector",
            img_ok,
            img_w,
        ));
        rep
    }

    /// Build the modified algebra `[x, y] + φ_x y − φ_y x` on the same
    /// inner-product space with the same complex structure.  The Jacobi
    /// identity of the result is re-validated.
    pub fn modify(&self) -> Result<HermitianData> {
        let l = self.base.algebra();
        let n = self.base.dim();
        let mode = self.base.mode();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut c = l.bracket_basis(i, j);
                let ei = vec_unit(n, i, mode);
                let ej = vec_unit(n, j, mode);
                let di = self.maps[i].mul_vec(&ej);
                let dj = self.maps[j].mul_vec(&ei);
                for k in 0..n {
                    c[k] += &di[k];
                    c[k] -= &dj[k];
                }
                for (k, v) in c.into_iter().enumerate() {
                    if !v.is_zero() {
                        entries.push((i, j, k, v));
                    }
                }
            }
        }
        let new_l = LieAlgebra::new_validated(n, Some(l.labels().to_vec()), mode, &entries)?;
        let metric = crate::curvature::MetricLieAlgebra::new(
            new_l,
            self.base.metric().gram().clone(),
        )?;
        HermitianData::new(metric, self.base.j().clone())
    }
}

/// What a valid modification must leave unchanged, itemized: the derived
/// subalgebra, traces of `ad` on its orthogonal complement, the full
/// Riemann tensor, the Ricci tensor, and exactness of the Kähler form for
/// the same primitive.
pub fn invariance_report(
    original: &HermitianData,
    modified: &HermitianData,
    primitive: Option<&KForm>,
) -> CheckReport {
    let mut rep = CheckReport::new();
    let n = original.dim();

    let d0 = original.algebra().derived_subalgebra();
    let d1 = modified.algebra().derived_subalgebra();
    rep.push(CheckItem::of(
        "derived subalgebra is unchanged",
        d0.dim() == d1.dim() && d0.is_subspace_of(&d1),
        format!("dimensions {} vs {}", d0.dim(), d1.dim()),
    ));

    let comp = d0.orthogonal_complement(original.metric().gram());
    let mut tr_ok = true;
    let mut tr_w = None;
    for h in comp.basis() {
        let t0 = original.algebra().ad(h).trace();
        let t1 = modified.algebra().ad(h).trace();
        if !(t0 == t1) {
            tr_ok = false;
            tr_w = Some(format!("tr ad moves from {t0} to {t1}"));
            break;
        }
    }
    rep.push(CheckItem::of_opt(
        "tr ad is unchanged on the complement of the derived subalgebra",
        tr_ok,
        tr_w,
    ));

    let c0 = original.metric().levi_civita();
    let c1 = modified.metric().levi_civita();
    let r0 = c0.riemann_tensor();
    let r1 = c1.riemann_tensor();
    let mut riem_ok = true;
    'riem: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !crate::linalg::vec_eq(&r0[i][j][k], &r1[i][j][k]) {
                    riem_ok = false;
                    break 'riem;
                }
            }
        }
    }
    rep.push(CheckItem::of(
        "Riemann tensor is unchanged",
        riem_ok,
        "a curvature operator entry moved",
    ));
    rep.push(CheckItem::of(
        "Ricci tensor is unchanged",
        c0.ricci().approx_eq(&c1.ricci()),
        "a Ricci entry moved",
    ));

    if let Some(f) = primitive {
        match modified.kahler_form() {
            Ok(omega) => {
                let df = ce_differential(modified.algebra(), f);
                rep.push(CheckItem::of(
                    "ω = −df holds for the modified bracket",
                    df.neg() == omega,
                    format!("−df = {} but ω = {omega}", df.neg()),
                ));
            }
            Err(e) => rep.push(CheckItem::fail(
                "ω = −df holds for the modified bracket",
                format!("{e}"),
            )),
        }
    }
    rep
}

/// Enumerate the modification assignments that live on the linear slice:
/// write each `φ_{e_i}` in the basis of skew-Hermitian derivations, solve
/// the linear condition `φ_{[x, y]} = 0`, and then require the two
/// quadratic conditions to hold identically on the solution space
/// (verified on basis assignments and their pairwise sums).  Returns a
/// basis of valid assignments; errs with [`Error::ManualSeedRequired`]
/// when the quadratic conditions cut the slice further.
pub fn enumerate_modifications(h: &HermitianData) -> Result<Vec<ModificationMap>> {
    let ders = unitary_derivations(h)?;
    let m = ders.len();
    let n = h.dim();
    let mode = h.mode();
    if m == 0 {
        return Ok(Vec::new());
    }
    // unknowns α[i][t]: φ_{e_i} = Σ_t α[i][t] B_t
    let unknowns = n * m;
    let idx = |i: usize, t: usize| i * m + t;
    let l = h.algebra();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let br = l.bracket_basis(i, j);
            // Σ_k br_k α[k][t] = 0 for each t (map coefficients must cancel;
            // the B_t are independent)
            for t in 0..m {
                let mut row = vec_zero(unknowns, mode);
                let mut nonzero = false;
                for (k, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        row[idx(k, t)] += c;
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(rows, unknowns, mode)?;
    let kernel = system.kernel();
    let candidates: Vec<ModificationMap> = kernel
        .iter()
        .map(|alpha| {
            let maps: Vec<Matrix> = (0..n)
                .map(|i| {
                    let mut acc = Matrix::zeros(n, n, mode);
                    for (t, b) in ders.iter().enumerate() {
                        let c = &alpha[idx(i, t)];
                        if !c.is_zero() {
                            acc = acc.add(&b.scale(c));
                        }
                    }
                    acc
                })
                .collect();
            ModificationMap::new(h.clone(), maps).expect("dimensions are consistent")
        })
        .collect();
    // the quadratic conditions must hold identically on the slice: check
    // every basis assignment and every pairwise sum
    let quadratic_ok = |mm: &ModificationMap| -> bool { mm.check().ok() };
    for (a, ca) in candidates.iter().enumerate() {
        if !quadratic_ok(ca) {
            return Err(Error::ManualSeedRequired(format!(
                "slice assignment {} violates a quadratic condition; pass an explicit assignment",
                a + 1
            )));
        }
        for cb in candidates.iter().skip(a + 1) {
            let maps: Vec<Matrix> = ca
                .maps
                .iter()
                .zip(cb.maps.iter())
                .map(|(x, y)| x.add(y))
                .collect();
            let sum = ModificationMap::new(h.clone(), maps).expect("dimensions are consistent");
            if !quadratic_ok(&sum) {
                return Err(Error::ManualSeedRequired(
                    "a pairwise sum on the slice violates a quadratic condition; pass an explicit assignment"
                        .into(),
                ));
            }
        }
    }
    Ok(candidates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::MetricLieAlgebra;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }

    fn r(p: i64, q: i64) -> Scalar {
        Scalar::ratio(p, q, Mode::Exact)
    }

    fn d_a(a: i64) -> HermitianData {
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
        HermitianData::new(m, jm).unwrap()
    }

    fn d_a_primitive(a: i64) -> KForm {
        KForm::from_covector(&[s(0), r(1, a), s(0), s(0)], Mode::Exact)
    }

    #[test]
    fn enumeration_finds_the_rotation_twist() {
        let h = d_a(1);
        let mods = enumerate_modifications(&h).unwrap();
        assert_eq!(mods.len(), 1);
        let mm = &mods[0];
        assert!(mm.check().ok(), "{}", mm.check());
        // only the first basis vector carries a map
        assert!(!mm.maps()[0].is_zero());
        for k in 1..4 {
            assert!(mm.maps()[k].is_zero());
        }
        let modified = mm.modify().unwrap();
        // the bracket picked up a rotation: [e1, e3] gains an e4 component
        let br = modified.algebra().bracket_basis(0, 2);
        assert!(!br[3].is_zero());
        let rep = invariance_report(&h, &modified, Some(&d_a_primitive(1)));
        assert!(rep.ok(), "{rep}");
    }

    #[test]
    fn invariance_holds_across_scalings() {
        let h = d_a(2);
        let mods = enumerate_modifications(&h).unwrap();
        assert_eq!(mods.len(), 1);
        for c in [s(1), s(2), s(-3), r(1, 2), r(-7, 3)] {
            let mm = mods[0].scale(&c);
            assert!(mm.check().ok());
            let modified = mm.modify().unwrap();
            let rep = invariance_report(&h, &modified, Some(&d_a_primitive(2)));
            assert!(rep.ok(), "c = {c}: {rep}");
            // curvature agrees although the brackets differ
            assert!(
                !c.is_zero()
                    && modified.algebra().bracket_basis(0, 2)
                        != h.algebra().bracket_basis(0, 2)
            );
        }
    }

    #[test]
    fn no_derivations_means_no_modifications() {
        // two-block family: no skew-Hermitian derivations at all
        let l = LieAlgebra::new_validated(
            4,
            None,
            Mode::Exact,
            &[(0, 1, 1, s(1)), (2, 3, 3, s(2))],
        )
        .unwrap();
        let m = MetricLieAlgebra::standard(l);
        let mut jm = Matrix::zeros(4, 4, Mode::Exact);
        jm.set(0, 1, s(1));
        jm.set(1, 0, s(-1));
        jm.set(2, 3, s(1));
        jm.set(3, 2, s(-1));
        let h = HermitianData::new(m, jm).unwrap();
        assert!(enumerate_modifications(&h).unwrap().is_empty());
    }

    #[test]
    fn abelian_slice_is_too_large_for_automatic_enumeration() {
        // on an abelian algebra every skew map commuting with J is a
        // skew-Hermitian derivation and the linear condition is vacuous,
        // so the commutation condition genuinely cuts the slice
        let l = LieAlgebra::abelian(4, Mode::Exact);
        let m = MetricLieAlgebra::standard(l);
        let mut jm = Matrix::zeros(4, 4, Mode::Exact);
        jm.set(0, 1, s(1));
        jm.set(1, 0, s(-1));
        jm.set(2, 3, s(1));
        jm.set(3, 2, s(-1));
        let h = HermitianData::new(m, jm).unwrap();
        match enumerate_modifications(&h) {
            Err(Error::ManualSeedRequired(_)) => {}
            other => panic!("expected a manual-seed error, got {other:?}"),
        }
    }

    #[test]
    fn bad_assignment_is_rejected() {
        let h = d_a(1);
        let mut bad = Matrix::zeros(4, 4, Mode::Exact);
        bad.set(1, 2, s(1)); // not a derivation, not skew-compatible
        let maps = vec![
            bad,
            Matrix::zeros(4, 4, Mode::Exact),
            Matrix::zeros(4, 4, Mode::Exact),
            Matrix::zeros(4, 4, Mode::Exact),
        ];
        let mm = ModificationMap::new(h, maps).unwrap();
        let rep = mm.check();
        assert!(!rep.ok());
        assert!(rep
            .first_failure()
            .unwrap()
            .name
            .contains("skew-Hermitian derivation"));
    }
}
