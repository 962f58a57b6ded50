//! Dual-mode scalars: arbitrary-precision rationals or `f64` with a global
//! comparison tolerance.
//!
//! Every quantity in the crate is a [`Scalar`].  The default mode is
//! [`Mode::Exact`]: arithmetic over `BigRational` with no rounding, so
//! structural identities (Jacobi, curvature symmetries, Einstein conditions)
//! are decided by literal equality.  [`Mode::Float`] exists for inputs that
//! are genuinely irrational (π/3 rotation angles, √2 scale factors); all float
//! comparisons go through one global tolerance τ, default `1e-9`, settable
//! once at startup via [`set_tolerance`].
//!
//! Modes never mix implicitly.  Public constructors reject mixed-mode data
//! with [`Error::ModeMismatch`]; the arithmetic operators treat a mix past
//! that boundary as a programming bug and panic.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::OnceCell;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Arithmetic mode of a scalar: exact rational or tolerance-compared float.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Arbitrary-precision rational arithmetic; equality is literal.
    Exact,
    /// `f64` arithmetic; equality means agreement within the global tolerance.
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Float => write!(f, "float"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(Error::InvalidInput(format!(
                "unknown mode {other:?} (expected \"exact\" or \"float\")"
            ))),
        }
    }
}

/// Default comparison tolerance for float mode.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOLERANCE: OnceCell<f64> = OnceCell::new();

/// Set the global float tolerance.  May be called at most once, before any
/// float comparison; a second call with a different value is an error.
pub fn set_tolerance(tau: f64) -> Result<()> {
    if !(tau.is_finite() && tau > 0.0) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be a positive finite number, got {tau}"
        )));
    }
    match TOLERANCE.set(tau) {
        Ok(()) => Ok(()),
        Err(_) if (tolerance() - tau).abs() == 0.0 => Ok(()),
        Err(_) => Err(Error::InvalidInput(format!(
            "tolerance already set to {}; cannot change it to {tau}",
            tolerance()
        ))),
    }
}

/// The active float tolerance τ.
pub fn tolerance() -> f64 {
    *TOLERANCE.get().unwrap_or(&DEFAULT_TOLERANCE)
}

/// A number in one of the two arithmetic modes.
#[derive(Clone, Debug)]
pub enum Scalar {
    /// Arbitrary-precision rational.
    Exact(BigRational),
    /// Double-precision float, compared through the global tolerance.
    Float(f64),
}

impl Scalar {
    /// The mode this scalar lives in.
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Float(_) => Mode::Float,
        }
    }

    /// Additive identity in the given mode.
    pub fn zero(mode: Mode) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(BigRational::zero()),
            Mode::Float => Scalar::Float(0.0),
        }
    }

    /// Multiplicative identity in the given mode.
    pub fn one(mode: Mode) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(BigRational::one()),
            Mode::Float => Scalar::Float(1.0),
        }
    }

    /// Integer constant in the given mode.
    pub fn from_int(v: i64, mode: Mode) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(BigRational::from(BigInt::from(v))),
            Mode::Float => Scalar::Float(v as f64),
        }
    }

    /// Rational constant `p/q` in the given mode.  Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64, mode: Mode) -> Self {
        assert!(q != 0, "zero denominator");
        match mode {
            Mode::Exact => Scalar::Exact(BigRational::new(BigInt::from(p), BigInt::from(q))),
            Mode::Float => Scalar::Float(p as f64 / q as f64),
        }
    }

    /// Wrap an `f64` (float mode).
    pub fn from_f64(v: f64) -> Self {
        Scalar::Float(v)
    }

    /// Wrap an exact rational.
    pub fn from_rational(v: BigRational) -> Self {
        Scalar::Exact(v)
    }

    /// Parse `"p"`, `"p/q"`, or a decimal literal.  Decimals force float
    /// mode; plain integers and fractions follow `mode`.
    pub fn parse(text: &str, mode: Mode) -> Result<Self> {
        let t = text.trim();
        if t.contains('.') || t.contains('e') || t.contains('E') {
            let v: f64 = t
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad numeric literal {t:?}")))?;
            if mode == Mode::Exact {
                return Err(Error::NeedsFloat(format!(
                    "decimal literal {t:?} in exact mode"
                )));
            }
            return Ok(Scalar::Float(v));
        }
        let r = BigRational::from_str(t)
            .map_err(|_| Error::InvalidInput(format!("bad rational literal {t:?}")))?;
        Ok(match mode {
            Mode::Exact => Scalar::Exact(r),
            Mode::Float => Scalar::Float(r.to_f64().ok_or_else(|| {
                Error::InvalidInput(format!("rational {t} does not fit in f64"))
            })?),
        })
    }

    /// Convert to the other mode.  Exact → float always works; float → exact
    /// is refused (information would be invented).
    pub fn to_mode(&self, mode: Mode) -> Result<Self> {
        match (self, mode) {
            (Scalar::Exact(_), Mode::Exact) | (Scalar::Float(_), Mode::Float) => Ok(self.clone()),
            (Scalar::Exact(r), Mode::Float) => Ok(Scalar::Float(r.to_f64().ok_or_else(|| {
                Error::InvalidInput("rational does not fit in f64".to_string())
            })?)),
            (Scalar::Float(_), Mode::Exact) => Err(Error::NeedsFloat(
                "cannot promote a float value to exact mode".to_string(),
            )),
        }
    }

    /// True if the value is zero (within τ in float mode).
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(v) => v.abs() <= tolerance(),
        }
    }

    /// True if strictly positive (greater than τ in float mode).
    pub fn is_positive(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_positive(),
            Scalar::Float(v) => *v > tolerance(),
        }
    }

    /// True if strictly negative (less than −τ in float mode).
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_negative(),
            Scalar::Float(v) => *v < -tolerance(),
        }
    }

    /// True if the value is an integer (within τ of one in float mode).
    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_integer(),
            Scalar::Float(v) => (v - v.round()).abs() <= tolerance(),
        }
    }

    /// Numeric view, exact values converted lossily.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(v) => *v,
        }
    }

    /// The exact rational inside, if this is an exact scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    /// Absolute value.
    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(v) => Scalar::Float(v.abs()),
        }
    }

    /// Multiplicative inverse; error on zero.
    pub fn recip(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::InvalidInput("division by zero".to_string()));
        }
        Ok(match self {
            Scalar::Exact(r) => Scalar::Exact(r.recip()),
            Scalar::Float(v) => Scalar::Float(1.0 / v),
        })
    }

    /// Square root.  Exact mode succeeds only on perfect squares of
    /// rationals; otherwise the caller is pointed at float mode.
    pub fn sqrt(&self) -> Result<Scalar> {
        match self {
            Scalar::Float(v) => {
                if *v < -tolerance() {
                    Err(Error::InvalidInput(format!("sqrt of negative {v}")))
                } else {
                    Ok(Scalar::Float(v.max(0.0).sqrt()))
                }
            }
            Scalar::Exact(r) => {
                if r.is_negative() {
                    return Err(Error::InvalidInput("sqrt of negative rational".to_string()));
                }
                let num = r.numer().sqrt();
                let den = r.denom().sqrt();
                if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
                    Ok(Scalar::Exact(BigRational::new(num, den)))
                } else {
                    Err(Error::NeedsFloat(format!("sqrt of {r} is irrational")))
                }
            }
        }
    }

    /// Integer power (negative exponents via `recip`).
    pub fn pow_i(&self, e: i32) -> Result<Scalar> {
        if e < 0 {
            return self.recip()?.pow_i(-e);
        }
        let mut acc = Scalar::one(self.mode());
        for _ in 0..e {
            acc = &acc * self;
        }
        Ok(acc)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Float(v) => write!(f, "{v}"),
        }
    }
}

/// τ-aware equality: literal in exact mode, |a−b| ≤ τ in float mode.
/// Mixed modes compare unequal (they should never meet past validation).
impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            (Scalar::Float(a), Scalar::Float(b)) => (a - b).abs() <= tolerance(),
            _ => false,
        }
    }
}

fn mode_panic() -> ! {
    panic!("scalar mode mismatch inside arithmetic: exact and float values met past a validation boundary")
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a $op b),
                    _ => mode_panic(),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, +);
impl_binop!(Sub, sub, -);
impl_binop!(Mul, mul, *);

/// Division panics on a zero divisor; use [`Scalar::recip`] where a zero
/// divisor is a recoverable input condition.
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(
            !matches!(rhs, Scalar::Exact(r) if r.is_zero()),
            "exact division by zero"
        );
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a / b),
            (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a / b),
            _ => mode_panic(),
        }
    }
}
impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}
impl Div<&Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        &self / rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(v) => Scalar::Float(-v),
        }
    }
}
impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}
impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

/// Check that every scalar yielded by `it` lives in `mode`.
pub fn check_uniform_mode<'a, I: IntoIterator<Item = &'a Scalar>>(mode: Mode, it: I) -> Result<()> {
    for (idx, s) in it.into_iter().enumerate() {
        if s.mode() != mode {
            return Err(Error::ModeMismatch(format!(
                "value #{idx} is {} but the container is {mode}",
                s.mode()
            )));
        }
    }
    Ok(())
}
