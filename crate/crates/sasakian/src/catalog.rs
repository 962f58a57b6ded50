//! Named example families, each returned as a [`Bundle`] with the
//! attachments its geometry carries:
//!
//! | name                    | parameters            | attachments |
//! |-------------------------|-----------------------|-------------|
//! | `abelian`               | `dim`                 | `j` when even-dimensional |
//! | `aff`                   | —                     | `j`, `f` |
//! | `aff_product`           | `a1`, `a2`, …         | `j`, `f` |
//! | `h`                     | `dim` (odd ≥ 3)       | `phi`, `xi`, `eta` |
//! | `su2_family`            | `k` ≠ 0               | `phi`, `xi`, `eta` |
//! | `d_ab`                  | `a`, `b` > 0          | `j`, `f` |
//! | `d_a`                   | `a` > 0, `c` (opt.)   | `j`, `f` |
//! | `d_a_n`                 | `a` > 0, `n` ≥ 1      | `j`, `f` |
//! | `normal_j_6dim`         | —                     | `j`, `f` |
//! | `normal_j_8dim`         | `a`, `b` ≠ 0          | `j`, `f` |
//! | `example_7dim_i`        | `k` ≠ 0               | `phi`, `xi`, `eta` |
//! | `example_7dim_ii`       | `k` ≠ 0               | `phi`, `xi`, `eta` |
//! | `null_solvmanifold_7dim`| `a`, `b` (default 1)  | `phi`, `xi`, `eta` |
//! | `h0_extension`          | `a` > 0, `n` ≥ 1, `c` ≠ 0 | `phi`, `xi`, `eta` |

use std::collections::BTreeMap;

use crate::bundle::Bundle;
use crate::constructions::{build_centreless, central_extension, KahlerExactSeed};
use crate::curvature::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::forms::KForm;
use crate::lie::LieAlgebra;
use crate::linalg::{vec_zero, Matrix};
use crate::scalar::{Mode, Scalar};
use crate::structures::{AlmostContactMetric, HermitianData};

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: &[&str] = &[
    "abelian",
    "aff",
    "aff_product",
    "h",
    "su2_family",
    "d_ab",
    "d_a",
    "d_a_n",
    "normal_j_6dim",
    "normal_j_8dim",
    "example_7dim_i",
    "example_7dim_ii",
    "null_solvmanifold_7dim",
    "h0_extension",
];

fn get(params: &BTreeMap<String, Scalar>, name: &str, mode: Mode) -> Result<Scalar> {
    match params.get(name) {
        Some(v) => v.to_mode(mode),
        None => Err(Error::BadParameter(format!(
            "missing parameter {name:?} for this catalog family"
        ))),
    }
}

fn get_or(
    params: &BTreeMap<String, Scalar>,
    name: &str,
    default: Scalar,
    mode: Mode,
) -> Result<Scalar> {
    match params.get(name) {
        Some(v) => v.to_mode(mode),
        None => Ok(default),
    }
}

fn get_usize(params: &BTreeMap<String, Scalar>, name: &str) -> Result<usize> {
    let v = params.get(name).ok_or_else(|| {
        Error::BadParameter(format!("missing parameter {name:?} for this catalog family"))
    })?;
    let f = v.to_f64();
    if !v.is_integer() || f < 0.0 {
        return Err(Error::BadParameter(format!(
            "parameter {name:?} must be a non-negative integer, found {v}"
        )));
    }
    Ok(f.round() as usize)
}

fn require_positive(v: &Scalar, name: &str) -> Result<()> {
    if !v.is_positive() {
        return Err(Error::BadParameter(format!(
            "parameter {name:?} must be positive, found {v}"
        )));
    }
    Ok(())
}

fn require_nonzero(v: &Scalar, name: &str) -> Result<()> {
    if v.is_zero() {
        return Err(Error::BadParameter(format!(
            "parameter {name:?} must be nonzero"
        )));
    }
    Ok(())
}

/// The block-rotation complex structure `J e_{2p+1} = e_{2p+2}` on the
/// listed index pairs.
fn block_j(dim: usize, pairs: &[(usize, usize)], mode: Mode) -> Matrix {
    let mut j = Matrix::zeros(dim, dim, mode);
    let one = Scalar::one(mode);
    for &(p, q) in pairs {
        j.set(q, p, one.clone());
        j.set(p, q, -&one);
    }
    j
}

fn contact_bundle(s: &AlmostContactMetric) -> Bundle {
    let mut b = Bundle::new(
        s.metric().algebra().clone(),
        s.metric().gram().clone(),
    );
    b.phi = Some(s.phi().clone());
    b.xi = Some(s.xi().to_vec());
    b.eta = Some(s.eta().to_vec());
    b
}

fn hermitian_bundle(h: &HermitianData, f: Option<KForm>) -> Bundle {
    let mut b = Bundle::new(h.algebra().clone(), h.metric().gram().clone());
    b.j = Some(h.j().clone());
    b.f = f;
    b
}

/// The two-generator block `[h, x] = a·x` with `J x = h` and
/// reproducing covector `(1/a)·x*`, placed at basis offset `off`.
struct AffBlock {
    entries: Vec<(usize, usize, usize, Scalar)>,
    j_pair: (usize, usize),
    f_entry: (usize, Scalar),
}

fn aff_block(off: usize, a: &Scalar) -> AffBlock {
    AffBlock {
        entries: vec![(off, off + 1, off + 1, a.clone())],
        j_pair: (off + 1, off),
        f_entry: (off + 1, a.recip().expect("a is nonzero")),
    }
}

fn abelian(params: &BTreeMap<String, Scalar>, mode: Mode) -> Result<Bundle> {
    let dim = get_usize(params, "dim")?;
    if dim == 0 {
        return Err(Error::BadParameter("dimension must be at least 1".into()));
    }
    let l = LieAlgebra::abelian(dim, mode);
    let mut b = Bundle::new(l, Matrix::identity(dim, mode));
    if dim % 2 == 0 {
        let pairs: Vec<(usize, usize)> = (0..dim / 2).map(|p| (2 * p, 2 * p + 1)).collect();
        b.j = Some(block_j(dim, &pairs, mode));
    }
    Ok(b)
}

fn aff(mode: Mode) -> Result<Bundle> {
    let one = Scalar::one(mode);
    let l = LieAlgebra::new_validated(2, None, mode, &[(0, 1, 1, one.clone())])?;
    let metric = MetricLieAlgebra::standard(l);
    let j = block_j(2, &[(1, 0)], mode);
    let h = HermitianData::new(metric, j)?;
    let f = KForm::from_covector(&[Scalar::zero(mode), one], mode);
    Ok(hermitian_bundle(&h, Some(f)))
}

fn aff_product(params: &BTreeMap<String, Scalar>, mode: Mode) -> Result<Bundle> {
    let mut factors = Vec::new();
    for i in 1.. {
        match params.get(&format!("a{i}")) {
            Some(v) => {
                let v = v.to_mode(mode)?;
                require_positive(&v, &format!("a{i}"))?;
                factors.push(v);
            }
            None => break,
        }
    }
    if factors.is_empty() {
        return Err(Error::BadParameter(
            "aff_product needs parameters a1, a2, …".into(),
        ));
    }
    let dim = 2 * factors.len();
    let mut entries = Vec::new();
    let mut pairs = Vec::new();
    let mut f = vec_zero(dim, mode);
    for (i, a) in factors.iter().enumerate() {
        let blk = aff_block(2 * i, a);
        entries.extend(blk.entries);
        pairs.push(blk.j_pair);
        f[blk.f_entry.0] = blk.f_entry.1;
    }
    let l = LieAlgebra::new_validated(dim, None, mode, &entries)?;
    let h = HermitianData::new(MetricLieAlgebra::standard(l), block_j(dim, &pairs, mode))?;
    Ok(hermitian_bundle(&h, Some(KForm::from_covector(&f, mode))))
}

fn heisenberg(params: &BTreeMap<String, Scalar>, mode: Mode) -> Result<Bundle> {
    let dim = get_usize(params, "dim")?;
    if dim < 3 || dim % 2 == 0 {
        return Err(Error::BadParameter(format!(
            "the Heisenberg family needs an odd dimension ≥ 3, found {dim}"
        )));
    }
    let two = Scalar::from_int(2, mode);
    let last = dim - 1;
    let mut entries = Vec::new();
    let mut pairs = Vec::new();
    for p in 0..dim / 2 {
        entries.push((2 * p, 2 * p + 1, last, two.clone()));
        pairs.push((2 * p, 2 * p + 1));
    }
    let l = LieAlgebra::new_validated(dim, None, mode, &entries)?;
    let metric = MetricLieAlgebra::standard(l);
    let phi = block_j(dim, &pairs, mode);
    let xi = crate::linalg::vec_unit(dim, last, mode);
    let s = AlmostContactMetric::from_phi_xi(metric, phi, xi)?;
    Ok(contact_bundle(&s))
}

fn su2_family(params: &BTreeMap<String, Scalar>, mode: Mode) -> Result<Bundle> {
    let k = get(params, "k", mode)?;
    require_nonzero(&k, "k")?;
    let two = Scalar::from_int(2, mode);
    // [ξ,u] = k v, [ξ,v] = −k u, [u,v] = 2ξ on (u, v, ξ) = (e1, e2, e3)
    let entries = vec![
        (0, 2, 1, -&k),
        (1, 2, 0, k.clone()),
        (0, 1, 2, two),
    ];
    let l = LieAlgebra::new_validated(3, None, mode, &entries)?;
    let metric = MetricLieAlgebra::standard(l);
    let phi = block_j(3, &[(0, 1)], mode);
    let xi = crate::linalg::vec_unit(3, 2, mode);
    let s = AlmostContactMetric::from_phi_xi(metric, phi, xi)?;
    Ok(contact_bundle(&s))
}

fn d_ab(params: &BTreeMap<String, Scalar>, mode: Mode) -> Result<Bundle> {
    let a = get(params, "a", mode)?;
    let b = get(params, "b", mode)?;
    require_positive(&a, "a")?;
    require_positive(&b, "b")?;
    let mut entries = Vec::new();
    let mut pairs = Vec::new();
    let mut f = vec_zero(4, mode);
    for (i, v) in [a, b].iter().enumerate() {
        let blk = aff_block(2 * i, v);
        entries.extend(blk.entries);
        pairs.push(blk.j_pair);
        f[blk.f_entry.0] = blk.f_entry.1;
    }
    let l = LieAlgebra::new_validated(4, None, mode, &entries)?;
    let h = HermitianData::new(MetricLieAlgebra::standard(l), block_j(4, &pairs, mode))?;
    Ok(hermitian_bundle(&h, Some(KForm::from_covector(&f, mode))))
}

fn d_a(params: &BTreeMap<String, Scalar>, mode: Mode) -> Result<Bundle> {
    let a = get(params, "a", mode)?;
    require_positive(&a, "a")?;
    let c = get_or(params, "c", Scalar::zero(mode), mode)?;
    let half_a = &a / &Scalar::from_int(2, mode);
    let mut entries = vec![
        (0, 1, 1, a.clone()),
        (0, 2, 2, half_a.clone()),
        (0, 3, 3, half_a),
        (2, 3, 1, a.clone()),
    ];
    if !c.is_zero() {
        // the rotation twist: [h1, x2] += c x3, [h1, x3] −= c x2
        entries.push((0, 2, 3, c.clone()));
        entries.push((0, 3, 2, -&c));
    }
    let l = LieAlgebra::new_validated(4, None, mode, &entries)?;
    let h = HermitianData::new(
        MetricLieAlgebra::standard(l),
        block_j(4, &[(1, 0), (3, 2)], mode),
    )?;
    let mut f = vec_zero(4, mode);
    f[1] = a.recip()?;
    Ok(hermitian_bundle(&h, Some(KForm::from_covector(&f, mode))))
}

fn d_a_n(params: &BTreeMap<String, Scalar>, mode: Mode) -> Result<Bundle> {
    let a = get(params, "a", mode)?;
    require_positive(&a, "a")?;
    let n = get_usize(params, "n")?;
    if n == 0 {
        return Err(Error::BadParameter("parameter \"n\" must be at least 1".into()));
    }
    let dim = 2 * n + 2;
    let half_a = &a / &Scalar::from_int(2, mode);
    let mut entries = vec![(0, 1, 1, a.clone())];
    let mut pairs = vec![(1, 0)];
    for j in 2..dim {
        entries.push((0, j, j, half_a.clone()));
    }
    for i in 0..n {
        entries.push((2 * i + 2, 2 * i + 3, 1, a.clone()));
        pairs.push((2 * i + 3, 2 * i + 2));
    }
    let l = LieAlgebra::new_validated(dim, None, mode, &entries)?;
    let h = HermitianData::new(
        MetricLieAlgebra::standard(l),
        block_j(dim, &pairs, mode),
    )?;
    let mut f = vec_zero(dim, mode);
    f[1] = a.recip()?;
    Ok(hermitian_bundle(&h, Some(KForm::from_covector(&f, mode))))
}

fn normal_j_6dim(mode: Mode) -> Result<Bundle> {
    let s = |v: i64| Scalar::from_int(v, mode);
    let entries = vec![
        (0, 2, 2, s(1)),
        (1, 2, 2, s(-1)),
        (0, 3, 3, s(2)),
        (2, 5, 3, s(2)),
        (1, 4, 4, s(2)),
        (0, 5, 5, s(1)),
        (1, 5, 5, s(1)),
        (2, 4, 5, s(1)),
    ];
    let l = LieAlgebra::new_validated(6, None, mode, &entries)?;
    let mut gram = Matrix::identity(6, mode);
    gram.set(4, 4, Scalar::ratio(1, 4, mode));
    let metric = MetricLieAlgebra::new(l, gram)?;
    let mut j = Matrix::zeros(6, 6, mode);
    j.set(3, 0, s(1));
    j.set(4, 1, s(2));
    j.set(5, 2, s(1));
    j.set(0, 3, s(-1));
    j.set(1, 4, Scalar::ratio(-1, 2, mode));
    j.set(2, 5, s(-1));
    let h = HermitianData::new(metric, j)?;
    let f = KForm::from_covector(
        &[
            s(0),
            s(0),
            s(0),
            Scalar::ratio(-1, 2, mode),
            Scalar::ratio(-1, 4, mode),
            s(0),
        ],
        mode,
    );
    Ok(hermitian_bundle(&h, Some(f)))
}

fn normal_j_8dim(params: &BTreeMap<String, Scalar>, mode: Mode) -> Result<Bundle> {
    let a = get(params, "a", mode)?;
    let b = get(params, "b", mode)?;
    require_nonzero(&a, "a")?;
    require_nonzero(&b, "b")?;
    let two = Scalar::from_int(2, mode);
    let half_a = &a / &two;
    let half_b = &b / &two;
    let entries = vec![
        (0, 2, 2, a.clone()),
        (0, 4, 4, half_a.clone()),
        (0, 5, 5, half_a.clone()),
        (0, 6, 6, half_a.clone()),
        (0, 7, 7, half_a.clone()),
        (1, 3, 3, b.clone()),
        (1, 4, 4, -&half_b),
        (1, 5, 5, -&half_b),
        (1, 6, 6, half_b.clone()),
        (1, 7, 7, half_b.clone()),
        // Integrability of J forces the second distinguished generator to
        // carry each half-difference vector onto its half-sum partner.
        (3, 4, 6, b.clone()),
        (3, 5, 7, b.clone()),
        (4, 6, 2, -&a),
        (5, 7, 2, -&a),
    ];
    let l = LieAlgebra::new_validated(8, None, mode, &entries)?;
    let metric = MetricLieAlgebra::standard(l);
    // J e3 = e1, J e4 = e2, J e5 = e7, J e6 = e8
    let one = Scalar::one(mode);
    let mut j = Matrix::zeros(8, 8, mode);
    for (p, q) in [(2usize, 0usize), (3, 1), (4, 6), (5, 7)] {
        j.set(q, p, one.clone());
        j.set(p, q, -&one);
    }
    let h = HermitianData::new(metric, j)?;
    let mut f = vec_zero(8, mode);
    f[2] = a.recip()?;
    f[3] = b.recip()?;
    Ok(hermitian_bundle(&h, Some(KForm::from_covector(&f, mode))))
}

/// The Kähler base shared by the two 7-dimensional families: two affine
/// blocks with the block-rotation complex structure.
fn aff_pair_base(mode: Mode) -> Result<HermitianData> {
    let one = Scalar::one(mode);
    let l = LieAlgebra::new_validated(
        4,
        None,
        mode,
        &[(0, 1, 1, one.clone()), (2, 3, 3, one)],
    )?;
    HermitianData::new(
        MetricLieAlgebra::standard(l),
        block_j(4, &[(0, 1), (2, 3)], mode),
    )
}

fn seed_7dim(k: &Scalar, with_h0: bool, mode: Mode) -> Result<KahlerExactSeed> {
    let base = aff_pair_base(mode)?;
    let z = Scalar::zero(mode);
    let minus_2k = &Scalar::from_int(-2, mode) * k;
    let gamma = KForm::from_covector(&[z.clone(), minus_2k.clone(), z.clone(), minus_2k], mode);
    let h0 = if with_h0 {
        crate::linalg::vec_unit(4, 1, mode)
    } else {
        vec_zero(4, mode)
    };
    KahlerExactSeed::new(base, gamma, k.clone(), h0)
}

fn example_7dim(params: &BTreeMap<String, Scalar>, with_h0: bool, mode: Mode) -> Result<Bundle> {
    let k = get(params, "k", mode)?;
    require_nonzero(&k, "k")?;
    let seed = seed_7dim(&k, with_h0, mode)?;
    let s = build_centreless(&seed)?;
    Ok(contact_bundle(&s))
}

fn null_solvmanifold_7dim(params: &BTreeMap<String, Scalar>, mode: Mode) -> Result<Bundle> {
    let a = get_or(params, "a", Scalar::one(mode), mode)?;
    let b = get_or(params, "b", Scalar::one(mode), mode)?;
    // flat Kähler base: e1 rotates (e3, e4) at speed a and (e5, e6) at
    // speed b; J pairs (e1, e2), (e3, e4), (e5, e6)
    let entries = vec![
        (0, 2, 3, a.clone()),
        (0, 3, 2, -&a),
        (0, 4, 5, b.clone()),
        (0, 5, 4, -&b),
    ];
    let l = LieAlgebra::new_validated(6, None, mode, &entries)?;
    let base = HermitianData::new(
        MetricLieAlgebra::standard(l),
        block_j(6, &[(0, 1), (2, 3), (4, 5)], mode),
    )?;
    let s = central_extension(&base)?;
    Ok(contact_bundle(&s))
}

fn h0_extension(params: &BTreeMap<String, Scalar>, mode: Mode) -> Result<Bundle> {
    let a = get(params, "a", mode)?;
    require_positive(&a, "a")?;
    let n = get_usize(params, "n")?;
    if n == 0 {
        return Err(Error::BadParameter("parameter \"n\" must be at least 1".into()));
    }
    let c = match params.get("c").or_else(|| params.get("kahler_factor")) {
        Some(v) => v.to_mode(mode)?,
        None => {
            return Err(Error::BadParameter(
                "missing parameter \"c\" (alias \"kahler_factor\") for this catalog family".into(),
            ))
        }
    };
    require_nonzero(&c, "c")?;
    let abs_c = c.abs();
    let m = 2 * n + 2; // first block dimension
    let dim = m + 2;
    let half_a = &a / &Scalar::from_int(2, mode);
    // first block: [h1, x1] = a x1, [h1, u_j] = (a/2) u_j, [u_odd, u_even] = a x1
    let mut entries = vec![(0, 1, 1, a.clone())];
    let mut pairs = vec![(1, 0)];
    for j in 2..m {
        entries.push((0, j, j, half_a.clone()));
    }
    for i in 0..n {
        entries.push((2 * i + 2, 2 * i + 3, 1, a.clone()));
        pairs.push((2 * i + 3, 2 * i + 2));
    }
    // hyperbolic factor: [h_K, x_K] = |c| x_K on the last two coordinates
    entries.push((m, m + 1, m + 1, abs_c.clone()));
    pairs.push((m + 1, m));
    let l = LieAlgebra::new_validated(dim, None, mode, &entries)?;
    let base = HermitianData::new(
        MetricLieAlgebra::standard(l),
        block_j(dim, &pairs, mode),
    )?;
    // γ = 2 f with f = (1/a) x¹* + (1/|c|) x_K*; the twist is H₀ = −a x₁
    let mut f = vec_zero(dim, mode);
    f[1] = a.recip()?;
    f[m + 1] = abs_c.recip()?;
    let gamma_vec: Vec<Scalar> = f.iter().map(|v| &Scalar::from_int(2, mode) * v).collect();
    let gamma = KForm::from_covector(&gamma_vec, mode);
    let mut h0 = vec_zero(dim, mode);
    h0[1] = -&a;
    let seed = KahlerExactSeed::new(base, gamma, Scalar::one(mode), h0)?;
    let s = build_centreless(&seed)?;
    Ok(contact_bundle(&s))
}

/// Build a named catalog family with bound parameters.
pub fn catalog(
    name: &str,
    params: &BTreeMap<String, Scalar>,
    mode: Mode,
) -> Result<Bundle> {
    match name {
        "abelian" => abelian(params, mode),
        "aff" => aff(mode),
        "aff_product" => aff_product(params, mode),
        "h" => heisenberg(params, mode),
        "su2_family" => su2_family(params, mode),
        "d_ab" => d_ab(params, mode),
        "d_a" => d_a(params, mode),
        "d_a_n" => d_a_n(params, mode),
        "normal_j_6dim" => normal_j_6dim(mode),
        "normal_j_8dim" => normal_j_8dim(params, mode),
        "example_7dim_i" => example_7dim(params, false, mode),
        "example_7dim_ii" => example_7dim(params, true, mode),
        "null_solvmanifold_7dim" => null_solvmanifold_7dim(params, mode),
        "h0_extension" => h0_extension(params, mode),
        other => Err(Error::UnknownCatalog(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_j::{datri_einstein, root_decomposition};
    use crate::structures::{
        check_kahler, check_sasakian, eta_einstein_check, EtaEinsteinClass,
    };

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }

    fn p(entries: &[(&str, Scalar)]) -> BTreeMap<String, Scalar> {
        entries
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect()
    }

    #[test]
    fn every_family_builds_and_passes_jacobi() {
        let cases: Vec<(&str, BTreeMap<String, Scalar>)> = vec![
            ("abelian", p(&[("dim", s(4))])),
            ("aff", p(&[])),
            ("aff_product", p(&[("a1", s(1)), ("a2", s(2)), ("a3", s(1))])),
            ("h", p(&[("dim", s(5))])),
            ("su2_family", p(&[("k", s(1))])),
            ("d_ab", p(&[("a", s(1)), ("b", s(2))])),
            ("d_a", p(&[("a", s(2)), ("c", s(1))])),
            ("d_a_n", p(&[("a", s(1)), ("n", s(2))])),
            ("normal_j_6dim", p(&[])),
            ("normal_j_8dim", p(&[("a", s(1)), ("b", s(-1))])),
            ("example_7dim_i", p(&[("k", s(1))])),
            ("example_7dim_ii", p(&[("k", s(-1))])),
            ("null_solvmanifold_7dim", p(&[])),
            ("h0_extension", p(&[("a", s(1)), ("n", s(1)), ("c", s(2))])),
        ];
        for (name, params) in cases {
            let b = catalog(name, &params, Mode::Exact)
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(b.algebra.check_jacobi().ok, "{name} fails Jacobi");
            let _ = b.as_metric().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn contact_families_are_sasakian() {
        for (name, params) in [
            ("h", p(&[("dim", s(3))])),
            ("h", p(&[("dim", s(5))])),
            ("su2_family", p(&[("k", s(1))])),
            ("su2_family", p(&[("k", s(-1))])),
            ("example_7dim_i", p(&[("k", s(1))])),
            ("example_7dim_ii", p(&[("k", s(1))])),
            ("null_solvmanifold_7dim", p(&[])),
            ("h0_extension", p(&[("a", s(1)), ("n", s(1)), ("c", s(-2))])),
        ] {
            let b = catalog(name, &params, Mode::Exact).unwrap();
            let sa = b.as_contact().unwrap();
            let rep = check_sasakian(&sa);
            assert!(rep.ok(), "{name}: {rep}");
        }
    }

    #[test]
    fn hermitian_families_are_kahler() {
        for (name, params) in [
            ("aff", p(&[])),
            ("aff_product", p(&[("a1", s(1)), ("a2", s(3))])),
            ("d_ab", p(&[("a", s(1)), ("b", s(1))])),
            ("d_a", p(&[("a", s(1)), ("c", s(2))])),
            ("d_a_n", p(&[("a", s(3)), ("n", s(3))])),
            ("normal_j_6dim", p(&[])),
            ("normal_j_8dim", p(&[("a", s(1)), ("b", s(2))])),
        ] {
            let b = catalog(name, &params, Mode::Exact).unwrap();
            let h = b.as_hermitian().unwrap();
            let rep = check_kahler(&h);
            assert!(rep.ok(), "{name}: {rep}");
        }
    }

    #[test]
    fn normal_j_views_validate() {
        for (name, params) in [
            ("aff", p(&[])),
            ("d_ab", p(&[("a", s(2)), ("b", s(3))])),
            ("d_a", p(&[("a", s(1))])),
            ("d_a_n", p(&[("a", s(2)), ("n", s(1))])),
            ("normal_j_6dim", p(&[])),
            ("normal_j_8dim", p(&[("a", s(1)), ("b", s(1))])),
        ] {
            let b = catalog(name, &params, Mode::Exact).unwrap();
            let nja = b.as_normal_j().unwrap();
            let rep = nja.validate();
            assert!(rep.ok(), "{name}: {rep}");
            let dec = root_decomposition(&nja).unwrap();
            let rep = crate::normal_j::root_report(&nja, &dec);
            assert!(rep.ok(), "{name} roots: {rep}");
        }
    }

    #[test]
    fn h0_extension_eta_einstein_cases() {
        // c² = a²(n+3)/2 makes the family η-Einstein with λ = −c² − 2
        for (a, n, c, lambda) in [(1, 5, -2, -6), (2, 5, -4, -18)] {
            let b = catalog(
                "h0_extension",
                &p(&[("a", s(a)), ("n", s(n)), ("c", s(c))]),
                Mode::Exact,
            )
            .unwrap();
            let sa = b.as_contact().unwrap();
            let data = eta_einstein_check(&sa, true).unwrap().unwrap();
            assert_eq!(data.lambda, s(lambda));
            assert_eq!(data.class, EtaEinsteinClass::Negative);
        }
        // breaking the balance destroys the verdict
        let b = catalog(
            "h0_extension",
            &p(&[("a", s(1)), ("n", s(5)), ("c", s(-3))]),
            Mode::Exact,
        )
        .unwrap();
        let sa = b.as_contact().unwrap();
        assert!(eta_einstein_check(&sa, true).unwrap().is_none());
    }

    #[test]
    fn kahler_factor_alias_binds_c() {
        let via_c = catalog(
            "h0_extension",
            &p(&[("a", s(1)), ("n", s(1)), ("c", s(2))]),
            Mode::Exact,
        )
        .unwrap();
        let via_alias = catalog(
            "h0_extension",
            &p(&[("a", s(1)), ("n", s(1)), ("kahler_factor", s(2))]),
            Mode::Exact,
        )
        .unwrap();
        assert_eq!(
            via_c.algebra.iter_constants().collect::<Vec<_>>(),
            via_alias.algebra.iter_constants().collect::<Vec<_>>()
        );
    }

    #[test]
    fn einstein_products_need_equal_parameters() {
        let equal = catalog(
            "aff_product",
            &p(&[("a1", s(2)), ("a2", s(2)), ("a3", s(2))]),
            Mode::Exact,
        )
        .unwrap();
        let nja = equal.as_normal_j().unwrap();
        let dec = root_decomposition(&nja).unwrap();
        assert!(datri_einstein(&nja, &dec).unwrap().einstein);
        let mixed = catalog(
            "aff_product",
            &p(&[("a1", s(2)), ("a2", s(2)), ("a3", s(1))]),
            Mode::Exact,
        )
        .unwrap();
        let nja = mixed.as_normal_j().unwrap();
        let dec = root_decomposition(&nja).unwrap();
        assert!(!datri_einstein(&nja, &dec).unwrap().einstein);
    }

    #[test]
    fn errors_are_informative() {
        assert!(matches!(
            catalog("no_such_family", &p(&[]), Mode::Exact),
            Err(Error::UnknownCatalog(_))
        ));
        assert!(matches!(
            catalog("d_ab", &p(&[("a", s(1))]), Mode::Exact),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            catalog("d_ab", &p(&[("a", s(1)), ("b", s(-1))]), Mode::Exact),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            catalog("h", &p(&[("dim", s(4))]), Mode::Exact),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            catalog("su2_family", &p(&[("k", s(0))]), Mode::Exact),
            Err(Error::BadParameter(_))
        ));
    }
}
