//! Compatible tensor structures on a metric Lie algebra: almost contact
//! metric structures `(φ, ξ, η, g)`, Hermitian pairs `(J, g)`, and the
//! verification routines around them — contact condition, normality,
//! Sasakian axioms and identities, Kähler conditions, Einstein and
//! η-Einstein classification.
//!
//! Conventions fixed here and used throughout the crate:
//! * `Φ(x, y) = ⟨x, φy⟩` and the contact condition reads `dη = 2Φ`;
//! * `ω(x, y) = ⟨x, Jy⟩` for Hermitian pairs, and "exact" means `ω = −df`;
//! * the Nijenhuis tensor is
//!   `N(x, y) = φ²[x, y] + [φx, φy] − φ[φx, y] − φ[x, φy]`,
//!   which specializes to the complex-structure version when `φ² = −Id`.

use crate::curvature::{einstein_check, Connection, EinsteinVerdict, MetricLieAlgebra};
use crate::error::{Error, Result};
use crate::forms::{ce_differential, find_primitive, KForm};
use crate::linalg::{vec_dot, vec_eq, vec_is_zero, vec_scale, vec_sub, vec_unit, Matrix};
use crate::report::{CheckItem, CheckReport};
use crate::scalar::{Mode, Scalar};
use std::fmt;

/// Bilinear form value `xᵀ M y`.
fn bilinear(m: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    vec_dot(x, &m.mul_vec(y))
}

/// An almost contact metric structure `(φ, ξ, η)` on a metric Lie algebra.
#[derive(Clone, Debug)]
pub struct AlmostContactMetric {
    metric: MetricLieAlgebra,
    phi: Matrix,
    xi: Vec<Scalar>,
    eta: Vec<Scalar>,
}

impl AlmostContactMetric {
    pub fn new(
        metric: MetricLieAlgebra,
        phi: Matrix,
        xi: Vec<Scalar>,
        eta: Vec<Scalar>,
    ) -> Result<Self> {
        let n = metric.dim();
        if phi.rows != n || phi.cols != n || xi.len() != n || eta.len() != n {
            return Err(Error::DimensionMismatch(
                "φ, ξ, η must match the algebra dimension".into(),
            ));
        }
        if phi.mode() != metric.mode() {
            return Err(Error::ModeMismatch("φ and metric use different modes".into()));
        }
        crate::scalar::check_uniform_mode(metric.mode(), xi.iter().chain(eta.iter()))?;
        Ok(AlmostContactMetric {
            metric,
            phi,
            xi,
            eta,
        })
    }

    /// Build with `η` taken as the metric dual of `ξ`.
    pub fn from_phi_xi(metric: MetricLieAlgebra, phi: Matrix, xi: Vec<Scalar>) -> Result<Self> {
        let eta = metric.metric_dual(&xi);
        AlmostContactMetric::new(metric, phi, xi, eta)
    }

    pub fn metric(&self) -> &MetricLieAlgebra {
        &self.metric
    }

    pub fn algebra(&self) -> &crate::lie::LieAlgebra {
        self.metric.algebra()
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn xi(&self) -> &[Scalar] {
        &self.xi
    }

    pub fn eta(&self) -> &[Scalar] {
        &self.eta
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn mode(&self) -> Mode {
        self.metric.mode()
    }

    /// `n` with `dim = 2n + 1`.
    pub fn half_rank(&self) -> usize {
        (self.dim() - 1) / 2
    }

    /// `η(x)`.
    pub fn eta_of(&self, x: &[Scalar]) -> Scalar {
        vec_dot(&self.eta, x)
    }

    /// `η` as a 1-form.
    pub fn eta_form(&self) -> KForm {
        KForm::from_covector(&self.eta, self.mode())
    }

    /// The fundamental 2-form `Φ(x, y) = ⟨x, φy⟩`.
    pub fn fundamental_form(&self) -> Result<KForm> {
        let g_phi = self.metric.gram().matmul(&self.phi);
        KForm::from_antisymmetric_matrix(&g_phi)
    }

    /// Structural axioms of an almost contact metric structure, itemized.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let n = self.dim();
        let mode = self.mode();
        rep.push(CheckItem::of(
            "ambient dimension is odd",
            n % 2 == 1,
            format!("dimension {n}"),
        ));
        // φ² = −Id + ξ⊗η
        let phi2 = self.phi.matmul(&self.phi);
        let xi_eta = Matrix::from_fn(n, n, mode, |i, j| &self.xi[i] * &self.eta[j]);
        let want = Matrix::identity(n, mode).neg().add(&xi_eta);
        rep.push(CheckItem::of(
            "φ² = −Id + ξ⊗η",
            phi2.approx_eq(&want),
            "matrix identity fails",
        ));
        // η(ξ) = 1
        rep.push(CheckItem::of(
            "η(ξ) = 1",
            self.eta_of(&self.xi) == Scalar::one(mode),
            format!("η(ξ) = {}", self.eta_of(&self.xi)),
        ));
        // φξ = 0
        rep.push(CheckItem::of(
            "φξ = 0",
            vec_is_zero(&self.phi.mul_vec(&self.xi)),
            "φξ has a nonzero component",
        ));
        // η∘φ = 0
        let eta_phi = self.phi.transpose().mul_vec(&self.eta);
        rep.push(CheckItem::of(
            "η∘φ = 0",
            vec_is_zero(&eta_phi),
            "η(φ·) has a nonzero component",
        ));
        // ⟨φx, φy⟩ = ⟨x, y⟩ − η(x)η(y): φᵀGφ = G − η ηᵀ
        let lhs = self.phi.transpose().matmul(&self.metric.gram().matmul(&self.phi));
        let eta_outer = Matrix::from_fn(n, n, mode, |i, j| &self.eta[i] * &self.eta[j]);
        let rhs = self.metric.gram().sub(&eta_outer);
        rep.push(CheckItem::of(
            "⟨φx, φy⟩ = ⟨x, y⟩ − η(x)η(y)",
            lhs.approx_eq(&rhs),
            "compatibility identity fails",
        ));
        // η is the metric dual of ξ
        rep.push(CheckItem::of(
            "η = ⟨ξ, ·⟩",
            vec_eq(&self.eta, &self.metric.metric_dual(&self.xi)),
            "η differs from the metric dual of ξ",
        ));
        rep
    }
}

/// A metric Lie algebra with an orthogonal almost complex structure.
#[derive(Clone, Debug)]
pub struct HermitianData {
    metric: MetricLieAlgebra,
    j: Matrix,
}

impl HermitianData {
    pub fn new(metric: MetricLieAlgebra, j: Matrix) -> Result<Self> {
        let n = metric.dim();
        if j.rows != n || j.cols != n {
            return Err(Error::DimensionMismatch(
                "J must match the algebra dimension".into(),
            ));
        }
        if j.mode() != metric.mode() {
            return Err(Error::ModeMismatch("J and metric use different modes".into()));
        }
        Ok(HermitianData { metric, j })
    }

    pub fn metric(&self) -> &MetricLieAlgebra {
        &self.metric
    }

    pub fn algebra(&self) -> &crate::lie::LieAlgebra {
        self.metric.algebra()
    }

    pub fn j(&self) -> &Matrix {
        &self.j
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn mode(&self) -> Mode {
        self.metric.mode()
    }

    /// The Kähler 2-form `ω(x, y) = ⟨x, Jy⟩`.
    pub fn kahler_form(&self) -> Result<KForm> {
        let g_j = self.metric.gram().matmul(&self.j);
        KForm::from_antisymmetric_matrix(&g_j)
    }

    /// Structural axioms of the Hermitian pair, itemized.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let n = self.dim();
        let mode = self.mode();
        rep.push(CheckItem::of(
            "ambient dimension is even",
            n % 2 == 0,
            format!("dimension {n}"),
        ));
        let j2 = self.j.matmul(&self.j);
        rep.push(CheckItem::of(
            "J² = −Id",
            j2.approx_eq(&Matrix::identity(n, mode).neg()),
            "J² differs from −Id",
        ));
        let lhs = self.j.transpose().matmul(&self.metric.gram().matmul(&self.j));
        rep.push(CheckItem::of(
            "⟨Jx, Jy⟩ = ⟨x, y⟩",
            lhs.approx_eq(self.metric.gram()),
            "J is not orthogonal for the metric",
        ));
        rep
    }
}

/// Nijenhuis tensor of an endomorphism:
/// `N(x, y) = φ²[x, y] + [φx, φy] − φ[φx, y] − φ[x, φy]`.
pub fn nijenhuis(
    l: &crate::lie::LieAlgebra,
    phi: &Matrix,
    x: &[Scalar],
    y: &[Scalar],
) -> Vec<Scalar> {
    let phix = phi.mul_vec(x);
    let phiy = phi.mul_vec(y);
    let t1 = phi.mul_vec(&phi.mul_vec(&l.bracket(x, y)));
    let t2 = l.bracket(&phix, &phiy);
    let t3 = phi.mul_vec(&l.bracket(&phix, y));
    let t4 = phi.mul_vec(&l.bracket(x, &phiy));
    vec_sub(&vec_sub(&crate::linalg::vec_add(&t1, &t2), &t3), &t4)
}

/// Normality of an almost contact structure, established along two
/// independent routes that must agree:
/// 1. `N(x, y) = −dη(x, y) ξ` on all basis pairs;
/// 2. `ad_ξ ∘ φ = φ ∘ ad_ξ` together with
///    `[φx, φy] − [x, y] = φ([φx, y] + [x, φy])` for `x, y ∈ Ker η`.
pub fn check_normal(s: &AlmostContactMetric) -> CheckReport {
    let mut rep = CheckReport::new();
    let l = s.algebra();
    let n = s.dim();
    let mode = s.mode();
    let deta = ce_differential(l, &s.eta_form());

    // route 1
    let mut r1 = true;
    let mut w1 = None;
    'r1: for i in 0..n {
        for j in i + 1..n {
            let ei = vec_unit(n, i, mode);
            let ej = vec_unit(n, j, mode);
            let nij = nijenhuis(l, s.phi(), &ei, &ej);
            let want = vec_scale(&-&deta.eval_basis(&[i, j]), s.xi());
            if !vec_eq(&nij, &want) {
                r1 = false;
                w1 = Some(format!("basis pair ({}, {})", i + 1, j + 1));
                break 'r1;
            }
        }
    }
    rep.push(CheckItem::of_opt("N = −dη⊗ξ", r1, w1));

    // route 2
    let ad_xi = l.ad(s.xi());
    let commute = ad_xi.matmul(s.phi()).approx_eq(&s.phi().matmul(&ad_xi));
    let ker_eta = Matrix::from_rows(vec![s.eta().to_vec()], n, mode)
        .expect("one row")
        .kernel();
    let mut horiz = true;
    let mut wh = None;
    'r2: for (a, x) in ker_eta.iter().enumerate() {
        for y in ker_eta.iter().skip(a + 1) {
            let phix = s.phi().mul_vec(x);
            let phiy = s.phi().mul_vec(y);
            let lhs = vec_sub(&l.bracket(&phix, &phiy), &l.bracket(x, y));
            let inner = crate::linalg::vec_add(&l.bracket(&phix, y), &l.bracket(x, &phiy));
            let rhs = s.phi().mul_vec(&inner);
            if !vec_eq(&lhs, &rhs) {
                horiz = false;
                wh = Some(format!("kernel basis pair ({}, {})", a + 1, a + 2));
                break 'r2;
            }
        }
    }
    rep.push(CheckItem::of(
        "ad_ξ commutes with φ",
        commute,
        "ad_ξ∘φ ≠ φ∘ad_ξ",
    ));
    rep.push(CheckItem::of_opt(
        "[φx, φy] − [x, y] = φ([φx, y] + [x, φy]) on Ker η",
        horiz,
        wh,
    ));
    let r2 = commute && horiz;
    rep.push(CheckItem::of(
        "both normality routes agree",
        r1 == r2,
        format!("tensor route says {r1}, commutation route says {r2}"),
    ));
    rep
}

/// Full Sasakian test: structural axioms, the contact condition `dη = 2Φ`,
/// and normality.
pub fn check_sasakian(s: &AlmostContactMetric) -> CheckReport {
    let mut rep = s.validate();
    let l = s.algebra();
    let deta = ce_differential(l, &s.eta_form());
    match s.fundamental_form() {
        Ok(fund) => {
            let two_phi = fund.scale(&Scalar::from_int(2, s.mode()));
            rep.push(CheckItem::of(
                "dη = 2Φ",
                deta == two_phi,
                format!("dη = {deta}, 2Φ = {two_phi}"),
            ));
        }
        Err(e) => rep.push(CheckItem::fail("dη = 2Φ", format!("Φ is not a 2-form: {e}"))),
    }
    rep.merge_prefixed("normality", check_normal(s));
    rep
}

/// The characteristic identities of a Sasakian structure, checked against
/// the Levi-Civita connection and its curvature:
/// * `∇_x ξ = −φx`
/// * `(∇_x φ) y = ⟨x, y⟩ ξ − η(y) x`
/// * `R(x, y) ξ = η(y) x − η(x) y`
/// * `Ric(ξ, x) = 2n η(x)`
/// * `x ↦ ∇_x ξ` is skew-symmetric (the Killing equation for ξ)
/// * `η ∧ (dη)^n ≠ 0` (contact-type volume form)
pub fn sasaki_identity_report(s: &AlmostContactMetric, conn: &Connection) -> CheckReport {
    let mut rep = CheckReport::new();
    let l = s.algebra();
    let n = s.dim();
    let mode = s.mode();
    let half = s.half_rank();

    let mut id1 = true;
    let mut w1 = None;
    for i in 0..n {
        let ei = vec_unit(n, i, mode);
        let lhs = conn.nabla(&ei, s.xi());
        let rhs = vec_scale(&-Scalar::one(mode), &s.phi().mul_vec(&ei));
        if !vec_eq(&lhs, &rhs) {
            id1 = false;
            w1 = Some(format!("basis vector {}", i + 1));
            break;
        }
    }
    rep.push(CheckItem::of_opt("∇_x ξ = −φx", id1, w1));

    let mut id2 = true;
    let mut w2 = None;
    'id2: for i in 0..n {
        for j in 0..n {
            let ei = vec_unit(n, i, mode);
            let ej = vec_unit(n, j, mode);
            let phi_ej = s.phi().mul_vec(&ej);
            let lhs = vec_sub(
                &conn.nabla(&ei, &phi_ej),
                &s.phi().mul_vec(&conn.nabla(&ei, &ej)),
            );
            let g_ij = s.metric().inner(&ei, &ej);
            let rhs = vec_sub(
                &vec_scale(&g_ij, s.xi()),
                &vec_scale(&s.eta_of(&ej), &ei),
            );
            if !vec_eq(&lhs, &rhs) {
                id2 = false;
                w2 = Some(format!("basis pair ({}, {})", i + 1, j + 1));
                break 'id2;
            }
        }
    }
    rep.push(CheckItem::of_opt("(∇_x φ) y = ⟨x, y⟩ ξ − η(y) x", id2, w2));

    let mut id3 = true;
    let mut w3 = None;
    'id3: for i in 0..n {
        for j in 0..n {
            let ei = vec_unit(n, i, mode);
            let ej = vec_unit(n, j, mode);
            let lhs = conn.riemann_operator(&ei, &ej).mul_vec(s.xi());
            let rhs = vec_sub(
                &vec_scale(&s.eta_of(&ej), &ei),
                &vec_scale(&s.eta_of(&ei), &ej),
            );
            if !vec_eq(&lhs, &rhs) {
                id3 = false;
                w3 = Some(format!("basis pair ({}, {})", i + 1, j + 1));
                break 'id3;
            }
        }
    }
    rep.push(CheckItem::of_opt("R(x, y) ξ = η(y) x − η(x) y", id3, w3));

    let ric = conn.ricci();
    let two_n = Scalar::from_int(2 * half as i64, mode);
    let mut id4 = true;
    let mut w4 = None;
    for i in 0..n {
        let ei = vec_unit(n, i, mode);
        let lhs = bilinear(&ric, s.xi(), &ei);
        let rhs = &two_n * &s.eta_of(&ei);
        if !(lhs == rhs) {
            id4 = false;
            w4 = Some(format!("basis vector {}: got {lhs}, want {rhs}", i + 1));
            break;
        }
    }
    rep.push(CheckItem::of_opt("Ric(ξ, x) = 2n η(x)", id4, w4));

    // Killing equation: ⟨∇_x ξ, y⟩ + ⟨x, ∇_y ξ⟩ = 0
    let a = Matrix::from_fn(n, n, mode, |r, c| {
        conn.nabla(&vec_unit(n, c, mode), s.xi())[r].clone()
    });
    let ga = s.metric().gram().matmul(&a);
    rep.push(CheckItem::of(
        "ξ is Killing (x ↦ ∇_x ξ is skew)",
        ga.approx_eq(&ga.transpose().neg()),
        "the Killing equation fails",
    ));

    let eta_form = s.eta_form();
    let deta = ce_differential(l, &eta_form);
    let mut volume = eta_form.clone();
    for _ in 0..half {
        volume = volume.wedge(&deta);
    }
    rep.push(CheckItem::of(
        "η ∧ (dη)^n ≠ 0",
        !volume.is_zero(),
        "the contact volume form vanishes",
    ));
    rep
}

/// Kähler test for a Hermitian pair: integrability (`N_J = 0`), closedness
/// of the Kähler form, and `∇J = 0` as an independent cross-check.
pub fn check_kahler(h: &HermitianData) -> CheckReport {
    let mut rep = h.validate();
    let l = h.algebra();
    let n = h.dim();
    let mode = h.mode();

    let mut integrable = true;
    let mut wi = None;
    'nj: for i in 0..n {
        for j in i + 1..n {
            let ei = vec_unit(n, i, mode);
            let ej = vec_unit(n, j, mode);
            if !vec_is_zero(&nijenhuis(l, h.j(), &ei, &ej)) {
                integrable = false;
                wi = Some(format!("basis pair ({}, {})", i + 1, j + 1));
                break 'nj;
            }
        }
    }
    rep.push(CheckItem::of_opt("N_J = 0", integrable, wi));

    match h.kahler_form() {
        Ok(omega) => {
            let domega = ce_differential(l, &omega);
            rep.push(CheckItem::of(
                "dω = 0",
                domega.is_zero(),
                format!("dω = {domega}"),
            ));
        }
        Err(e) => rep.push(CheckItem::fail("dω = 0", format!("ω is not a 2-form: {e}"))),
    }

    let conn = h.metric().levi_civita();
    let mut parallel = true;
    let mut wp = None;
    for i in 0..n {
        let ni = conn.basis_matrix(i);
        if !ni.matmul(h.j()).approx_eq(&h.j().matmul(ni)) {
            parallel = false;
            wp = Some(format!("∇ along basis vector {}", i + 1));
            break;
        }
    }
    rep.push(CheckItem::of_opt("∇J = 0", parallel, wp));
    rep
}

/// A primitive for the Kähler form with the sign convention `ω = −df`,
/// if one exists.
pub fn kahler_exact(h: &HermitianData) -> Result<Option<KForm>> {
    let omega = h.kahler_form()?;
    Ok(find_primitive(h.algebra(), &omega.neg()))
}

/// Verdict of [`kahler_einstein_check`].
#[derive(Clone, Debug, PartialEq)]
pub enum KahlerEinsteinVerdict {
    Einstein(Scalar),
    NotEinstein,
    NotKahler,
}

/// Einstein test gated on the Kähler conditions.
pub fn kahler_einstein_check(h: &HermitianData) -> KahlerEinsteinVerdict {
    if !check_kahler(h).ok() {
        return KahlerEinsteinVerdict::NotKahler;
    }
    match einstein_check(&h.metric().levi_civita()) {
        EinsteinVerdict::Einstein(c) => KahlerEinsteinVerdict::Einstein(c),
        EinsteinVerdict::NotEinstein => KahlerEinsteinVerdict::NotEinstein,
    }
}

/// Sign class of the η-Einstein constant `λ` relative to the threshold −2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaEinsteinClass {
    Positive,
    Null,
    Negative,
}

impl fmt::Display for EtaEinsteinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EtaEinsteinClass::Positive => "positive (λ > −2)",
            EtaEinsteinClass::Null => "null (λ = −2)",
            EtaEinsteinClass::Negative => "negative (λ < −2)",
        };
        write!(f, "{s}")
    }
}

/// Result of a successful η-Einstein identification.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaEinstein {
    pub lambda: Scalar,
    pub class: EtaEinsteinClass,
}

/// Decide whether `Ric = λ g + (2n − λ) η⊗η`.  The constant is read off a
/// single entry with `G_ij ≠ η_i η_j` and then the identity is verified on
/// every entry.  With `require_sasakian` the structure is first checked to
/// be Sasakian and an error is raised otherwise.
pub fn eta_einstein_check(
    s: &AlmostContactMetric,
    require_sasakian: bool,
) -> Result<Option<EtaEinstein>> {
    if require_sasakian {
        let rep = check_sasakian(s);
        if !rep.ok() {
            return Err(Error::ValidationFailed(format!(
                "the structure is not Sasakian: {}",
                rep.first_failure().map(|i| i.name.clone()).unwrap_or_default()
            )));
        }
    }
    let conn = s.metric().levi_civita();
    let ric = conn.ricci();
    let g = s.metric().gram();
    let n = s.dim();
    let mode = s.mode();
    let two_n = Scalar::from_int(2 * s.half_rank() as i64, mode);

    let mut lambda = None;
    'find: for i in 0..n {
        for j in 0..n {
            let d = g.get(i, j) - &(&s.eta()[i] * &s.eta()[j]);
            if !d.is_zero() {
                let num = ric.get(i, j) - &(&two_n * &(&s.eta()[i] * &s.eta()[j]));
                lambda = Some(&num / &d);
                break 'find;
            }
        }
    }
    let Some(lambda) = lambda else {
        return Ok(None);
    };
    let coeff_eta = &two_n - &lambda;
    for i in 0..n {
        for j in 0..n {
            let want = &(&lambda * g.get(i, j))
                + &(&coeff_eta * &(&s.eta()[i] * &s.eta()[j]));
            if !(ric.get(i, j) == &want) {
                return Ok(None);
            }
        }
    }
    let minus_two = Scalar::from_int(-2, mode);
    let class = if lambda == minus_two {
        EtaEinsteinClass::Null
    } else if (&lambda - &minus_two).is_positive() {
        EtaEinsteinClass::Positive
    } else {
        EtaEinsteinClass::Negative
    };
    Ok(Some(EtaEinstein { lambda, class }))
}

/// Consequences of the η-Einstein identity, verified directly:
/// scalar curvature `2n(λ + 1)` and transversal Einstein behaviour
/// `Ric(u, v) = λ ⟨u, v⟩` for `u, v ⊥ ξ`.
pub fn eta_einstein_consequence_report(
    s: &AlmostContactMetric,
    data: &EtaEinstein,
) -> CheckReport {
    let mut rep = CheckReport::new();
    let conn = s.metric().levi_civita();
    let mode = s.mode();
    let n = s.dim();
    let two_n = Scalar::from_int(2 * s.half_rank() as i64, mode);
    let want_scal = &two_n * &(&data.lambda + &Scalar::one(mode));
    let scal = conn.scalar_curvature();
    rep.push(CheckItem::of(
        "scalar curvature = 2n(λ + 1)",
        scal == want_scal,
        format!("got {scal}, want {want_scal}"),
    ));
    let ric = conn.ricci();
    let perp = Matrix::from_rows(vec![s.eta().to_vec()], n, mode)
        .expect("one row")
        .kernel();
    let mut ok = true;
    let mut w = None;
    'outer: for u in &perp {
        for v in &perp {
            let lhs = bilinear(&ric, u, v);
            let rhs = &data.lambda * &s.metric().inner(u, v);
            if !(lhs == rhs) {
                ok = false;
                w = Some("a transversal pair violates Ric = λ⟨·,·⟩".to_string());
                break 'outer;
            }
        }
    }
    rep.push(CheckItem::of_opt(
        "transversal part is Einstein with constant λ",
        ok,
        w,
    ));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }

    /// h₃ with its standard Sasakian structure.
    fn h3_structure() -> AlmostContactMetric {
        let l = LieAlgebra::new_validated(3, None, Mode::Exact, &[(0, 1, 2, s(2))]).unwrap();
        let m = MetricLieAlgebra::standard(l);
        let phi = Matrix::from_rows(
            vec![
                vec![s(0), s(-1), s(0)],
                vec![s(1), s(0), s(0)],
                vec![s(0), s(0), s(0)],
            ],
            3,
            Mode::Exact,
        )
        .unwrap();
        let xi = vec![s(0), s(0), s(1)];
        AlmostContactMetric::from_phi_xi(m, phi, xi).unwrap()
    }

    /// h₅ with its standard Sasakian structure.
    fn h5_structure() -> AlmostContactMetric {
        let l = LieAlgebra::new_validated(
            5,
            None,
            Mode::Exact,
            &[(0, 1, 4, s(2)), (2, 3, 4, s(2))],
        )
        .unwrap();
        let m = MetricLieAlgebra::standard(l);
        let mut phi = Matrix::zeros(5, 5, Mode::Exact);
        // φe1 = e2, φe2 = −e1, φe3 = e4, φe4 = −e3
        phi.set(1, 0, s(1));
        phi.set(0, 1, s(-1));
        phi.set(3, 2, s(1));
        phi.set(2, 3, s(-1));
        let xi = vec![s(0), s(0), s(0), s(0), s(1)];
        AlmostContactMetric::from_phi_xi(m, phi, xi).unwrap()
    }

    #[test]
    fn heisenberg_is_sasakian() {
        let s3 = h3_structure();
        let rep = check_sasakian(&s3);
        assert!(rep.ok(), "{rep}");
        let s5 = h5_structure();
        let rep = check_sasakian(&s5);
        assert!(rep.ok(), "{rep}");
    }

    #[test]
    fn sasaki_identities_hold_on_heisenberg() {
        for st in [h3_structure(), h5_structure()] {
            let conn = st.metric().levi_civita();
            let rep = sasaki_identity_report(&st, &conn);
            assert!(rep.ok(), "{rep}");
        }
    }

    #[test]
    fn reversed_phi_breaks_the_contact_condition() {
        let st = h3_structure();
        let neg_phi = st.phi().neg();
        let bad = AlmostContactMetric::from_phi_xi(
            st.metric().clone(),
            neg_phi,
            st.xi().to_vec(),
        )
        .unwrap();
        assert!(bad.validate().ok());
        let rep = check_sasakian(&bad);
        assert!(!rep.ok());
        assert_eq!(rep.first_failure().unwrap().name, "dη = 2Φ");
    }

    #[test]
    fn perturbed_bracket_breaks_normality_on_both_routes() {
        // h₅ plus [e1, e3] = e2 stays contact metric but is not normal
        let l = LieAlgebra::new_validated(
            5,
            None,
            Mode::Exact,
            &[(0, 1, 4, s(2)), (2, 3, 4, s(2)), (0, 2, 1, s(1))],
        )
        .unwrap();
        let m = MetricLieAlgebra::standard(l);
        let good = h5_structure();
        let bad =
            AlmostContactMetric::from_phi_xi(m, good.phi().clone(), good.xi().to_vec()).unwrap();
        assert!(bad.validate().ok());
        let rep = check_normal(&bad);
        assert!(!rep.ok());
        // the two routes must still agree on the verdict
        let agree = rep
            .items
            .iter()
            .find(|i| i.name.contains("agree"))
            .unwrap();
        assert!(agree.ok, "{rep}");
    }

    #[test]
    fn normal_but_not_contact_on_the_abelian_algebra() {
        let l = LieAlgebra::abelian(5, Mode::Exact);
        let m = MetricLieAlgebra::standard(l);
        let good = h5_structure();
        let st =
            AlmostContactMetric::from_phi_xi(m, good.phi().clone(), good.xi().to_vec()).unwrap();
        assert!(check_normal(&st).ok());
        let rep = check_sasakian(&st);
        assert!(!rep.ok());
        assert_eq!(rep.first_failure().unwrap().name, "dη = 2Φ");
    }

    #[test]
    fn heisenberg_eta_einstein_is_null() {
        for (st, expect_scalar) in [(h3_structure(), s(-2)), (h5_structure(), s(-4))] {
            let data = eta_einstein_check(&st, true).unwrap().expect("η-Einstein");
            assert_eq!(data.lambda, s(-2));
            assert_eq!(data.class, EtaEinsteinClass::Null);
            let rep = eta_einstein_consequence_report(&st, &data);
            assert!(rep.ok(), "{rep}");
            assert_eq!(st.metric().levi_civita().scalar_curvature(), expect_scalar);
        }
    }

    #[test]
    fn affine_algebra_is_kahler_exact() {
        // aff(ℝ): Je2 = e1, Je1 = −e2, ω = e^{12} = −d(e²)
        let l = LieAlgebra::new_validated(2, None, Mode::Exact, &[(0, 1, 1, s(1))]).unwrap();
        let m = MetricLieAlgebra::standard(l);
        let jm = Matrix::from_rows(
            vec![vec![s(0), s(1)], vec![s(-1), s(0)]],
            2,
            Mode::Exact,
        )
        .unwrap();
        let h = HermitianData::new(m, jm).unwrap();
        let rep = check_kahler(&h);
        assert!(rep.ok(), "{rep}");
        let omega = h.kahler_form().unwrap();
        assert_eq!(omega.coeff(&[0, 1]), s(1));
        let f = kahler_exact(&h).unwrap().expect("ω is exact");
        assert_eq!(ce_differential(h.algebra(), &f).neg(), omega);
        // f([Jx, x]) = ‖x‖² on basis vectors
        for i in 0..2 {
            let x = vec_unit(2, i, Mode::Exact);
            let jx = h.j().mul_vec(&x);
            let br = h.algebra().bracket(&jx, &x);
            assert_eq!(f.eval(&[&br]), s(1));
        }
        // Kähler-Einstein with constant −1, and not unimodular
        assert_eq!(kahler_einstein_check(&h), KahlerEinsteinVerdict::Einstein(s(-1)));
        assert!(!h.algebra().is_unimodular());
    }

    #[test]
    fn flat_torus_kahler_form_is_not_exact() {
        let l = LieAlgebra::abelian(2, Mode::Exact);
        let m = MetricLieAlgebra::standard(l);
        let jm = Matrix::from_rows(
            vec![vec![s(0), s(1)], vec![s(-1), s(0)]],
            2,
            Mode::Exact,
        )
        .unwrap();
        let h = HermitianData::new(m, jm).unwrap();
        assert!(check_kahler(&h).ok());
        assert!(kahler_exact(&h).unwrap().is_none());
        assert_eq!(kahler_einstein_check(&h), KahlerEinsteinVerdict::Einstein(s(0)));
    }
}
