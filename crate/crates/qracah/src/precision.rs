//! Configurable-precision real arithmetic and the tolerance policy shared by
//! every operation in the crate.
//!
//! [`Real`] wraps an arbitrary-precision binary float; each value carries its
//! working precision in bits, binary operations round to the larger of the two
//! operand precisions. [`PrecisionContext`] fixes the number of significant
//! decimal digits, the relative tolerance used by residual checks, and the
//! truncation threshold for infinite sums and products.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

/// Guard bits on top of the decimal-digit request, absorbing rounding in long
/// recursions and in the decimal <-> binary conversions.
const GUARD_BITS: usize = 64;

const LOG2_10: f64 = 3.321928094887362;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn bits_for(digits: u32) -> usize {
    (digits as f64 * LOG2_10).ceil() as usize + GUARD_BITS
}

/// Arbitrary-precision real number.
#[derive(Clone, Debug)]
pub struct Real {
    x: BigFloat,
    prec: usize,
}

impl Real {
    fn new(x: BigFloat, prec: usize) -> Self {
        Real { x, prec }
    }

    pub fn precision_bits(&self) -> usize {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.x.is_negative() && !self.x.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.x.is_positive() && !self.x.is_zero()
    }

    pub fn abs(&self) -> Real {
        Real::new(self.x.abs(), self.prec)
    }

    pub fn sqrt(&self) -> Real {
        Real::new(self.x.sqrt(self.prec, RM), self.prec)
    }

    /// Integer power by binary exponentiation; total for nonzero base when
    /// the exponent is negative.
    pub fn powi(&self, n: i64) -> Real {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut result = Real::new(BigFloat::from_f64(1.0, self.prec), self.prec);
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Real power, base must be positive.
    pub fn pow(&self, e: &Real) -> Real {
        let p = self.prec.max(e.prec);
        let x = CONSTS.with(|c| self.x.pow(&e.x, p, RM, &mut c.borrow_mut()));
        Real::new(x, p)
    }

    pub fn exp(&self) -> Real {
        let x = CONSTS.with(|c| self.x.exp(self.prec, RM, &mut c.borrow_mut()));
        Real::new(x, self.prec)
    }

    pub fn ln(&self) -> Real {
        let x = CONSTS.with(|c| self.x.ln(self.prec, RM, &mut c.borrow_mut()));
        Real::new(x, self.prec)
    }

    pub fn recip(&self) -> Real {
        let one = BigFloat::from_f64(1.0, self.prec);
        Real::new(one.div(&self.x, self.prec, RM), self.prec)
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min(&self, other: &Real) -> Real {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Nearest integer, as a Real and as i64. Ties round away from zero.
    pub fn nearest_int(&self) -> (Real, i64) {
        let trunc = self.x.int();
        let frac = self.x.sub(&trunc, self.prec, RM).abs();
        let half = BigFloat::from_f64(0.5, self.prec);
        let bump = match frac.cmp(&half) {
            Some(c) if c >= 0 => 1.0,
            _ => 0.0,
        };
        let adj = if self.x.is_negative() { -bump } else { bump };
        let near = trunc.add(&BigFloat::from_f64(adj, self.prec), self.prec, RM);
        let v: f64 = near
            .to_string()
            .parse()
            .expect("integer part fits decimal notation");
        (Real::new(near, self.prec), v as i64)
    }

    /// Lossy conversion through decimal notation.
    pub fn to_f64(&self) -> f64 {
        if self.x.is_zero() {
            return 0.0;
        }
        self.x.to_string().parse().unwrap_or(f64::NAN)
    }

    /// Decimal string with `sig` significant digits, normalized scientific
    /// form `[-]d.ddd...e<exp>`. Deterministic for a given value.
    pub fn to_decimal_string(&self, sig: usize) -> String {
        format_sig(&self.x, sig)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.x)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        matches!(self.x.cmp(&other.x), Some(0))
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.x.cmp(&other.x).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let p = self.prec.max(rhs.prec);
                Real::new(self.x.$method(&rhs.x, p, RM), p)
            }
        }
        impl $trait for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::new(self.x.clone().neg(), self.prec)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::new(self.x.clone().neg(), self.prec)
    }
}

/// Working precision and tolerance policy.
///
/// Invariants: `digits >= 15`, `rel_tol >= 10^(5 - digits)`,
/// `trunc_tol >= 10^(-digits)`, both positive. Defaults sit on the floors.
#[derive(Clone, Debug)]
pub struct PrecisionContext {
    digits: u32,
    bits: usize,
    rel_tol: Real,
    trunc_tol: Real,
}

impl PrecisionContext {
    /// Context with default tolerances: rel_tol = 10^(5-digits),
    /// trunc_tol = 10^(-digits).
    pub fn new(digits: u32) -> Result<Self> {
        if digits < 15 {
            return Err(Error::InvalidPrecision(format!(
                "digits = {digits} < 15"
            )));
        }
        let bits = bits_for(digits);
        let rel_tol = ten_pow(5 - digits as i64, bits);
        let trunc_tol = ten_pow(-(digits as i64), bits);
        Ok(PrecisionContext {
            digits,
            bits,
            rel_tol,
            trunc_tol,
        })
    }

    /// Context with explicit tolerances (validated against the floors).
    pub fn with_tolerances(digits: u32, rel_tol: f64, trunc_tol: f64) -> Result<Self> {
        let base = Self::new(digits)?;
        if !(rel_tol > 0.0) {
            return Err(Error::InvalidPrecision("rel_tol must be > 0".into()));
        }
        if !(trunc_tol > 0.0) {
            return Err(Error::InvalidPrecision("trunc_tol must be > 0".into()));
        }
        let rel = base.real(rel_tol);
        let trunc = base.real(trunc_tol);
        // slack absorbs the decimal -> binary conversion of f64 literals
        let slack = base.real(1.0 - 1e-9);
        let rel_floor = &base.rel_tol * &slack;
        let trunc_floor = &base.trunc_tol * &slack;
        if rel < rel_floor {
            return Err(Error::InvalidPrecision(format!(
                "rel_tol = {rel_tol:e} below floor 10^({})",
                5 - digits as i64
            )));
        }
        if trunc < trunc_floor {
            return Err(Error::InvalidPrecision(format!(
                "trunc_tol = {trunc_tol:e} below floor 10^(-{digits})"
            )));
        }
        Ok(PrecisionContext {
            digits,
            bits: base.bits,
            rel_tol: rel,
            trunc_tol: trunc,
        })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn rel_tol(&self) -> &Real {
        &self.rel_tol
    }

    pub fn trunc_tol(&self) -> &Real {
        &self.trunc_tol
    }

    pub fn real(&self, v: f64) -> Real {
        Real::new(BigFloat::from_f64(v, self.bits), self.bits)
    }

    pub fn int(&self, v: i64) -> Real {
        // exact: i64 fits in the mantissa at any supported precision
        Real::new(BigFloat::from_i64(v, self.bits), self.bits)
    }

    pub fn zero(&self) -> Real {
        self.real(0.0)
    }

    pub fn one(&self) -> Real {
        self.real(1.0)
    }

    /// Parse a decimal literal at full working precision.
    pub fn parse(&self, s: &str) -> Result<Real> {
        let x = CONSTS.with(|c| {
            BigFloat::parse(s, Radix::Dec, self.bits, RM, &mut c.borrow_mut())
        });
        if x.is_nan() {
            return Err(Error::Config(format!("cannot parse '{s}' as a number")));
        }
        Ok(Real::new(x, self.bits))
    }
}

fn ten_pow(e: i64, bits: usize) -> Real {
    Real::new(BigFloat::from_f64(10.0, bits), bits).powi(e)
}

/// Render `x` as `[-]d.ddd...e<exp>` with `sig` significant decimal digits,
/// rounding half away from zero on the digit string.
fn format_sig(x: &BigFloat, sig: usize) -> String {
    let sig = sig.max(1);
    if x.is_zero() {
        let zeros = "0".repeat(sig.saturating_sub(1));
        return if zeros.is_empty() {
            "0e0".to_string()
        } else {
            format!("0.{zeros}e0")
        };
    }
    let full = x.to_string();
    let neg = full.starts_with('-');
    let body = full.trim_start_matches('-');
    let (mant, exp) = match body.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let digits: Vec<u8> = mant
        .bytes()
        .filter(|b| b.is_ascii_digit())
        .map(|b| b - b'0')
        .collect();
    // position of the decimal point within the digit string
    let point = mant.find('.').map(|i| i as i64).unwrap_or(mant.len() as i64);
    // value = 0.digits * 10^(point + exp) in "all digits after the point" form
    let mut dec_exp = point + exp;
    // strip leading zeros
    let mut ds = digits;
    while ds.first() == Some(&0) {
        ds.remove(0);
        dec_exp -= 1;
    }
    if ds.is_empty() {
        return format_sig(&BigFloat::from_f64(0.0, 64), sig);
    }
    // round to sig digits
    if ds.len() > sig {
        let carry = ds[sig] >= 5;
        ds.truncate(sig);
        if carry {
            let mut i = sig;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    dec_exp += 1;
                    ds.truncate(sig);
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
    } else {
        while ds.len() < sig {
            ds.push(0);
        }
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push((b'0' + ds[0]) as char);
    if ds.len() > 1 {
        out.push('.');
        for d in &ds[1..] {
            out.push((b'0' + d) as char);
        }
    }
    out.push('e');
    out.push_str(&(dec_exp - 1).to_string());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_floors_enforced() {
        assert!(PrecisionContext::new(14).is_err());
        assert!(PrecisionContext::new(15).is_ok());
        assert!(PrecisionContext::with_tolerances(16, 1e-11, 1e-16).is_ok());
        assert!(PrecisionContext::with_tolerances(16, 1e-12, 1e-16).is_err());
        assert!(PrecisionContext::with_tolerances(16, 1e-10, 1e-17).is_err());
    }

    #[test]
    fn arithmetic_roundtrip() {
        let ctx = PrecisionContext::new(32).unwrap();
        let a = ctx.real(1.5);
        let b = ctx.real(0.25);
        assert_eq!((&a + &b).to_f64(), 1.75);
        assert_eq!((&a - &b).to_f64(), 1.25);
        assert_eq!((&a * &b).to_f64(), 0.375);
        assert_eq!((&a / &b).to_f64(), 6.0);
        assert_eq!((-&a).to_f64(), -1.5);
        assert_eq!(a.powi(3).to_f64(), 3.375);
        assert_eq!(a.powi(-2).to_f64(), 1.0 / 2.25);
    }

    #[test]
    fn pow_and_ln() {
        let ctx = PrecisionContext::new(32).unwrap();
        let q = ctx.real(0.5);
        let s = ctx.real(0.5);
        let r = q.pow(&s);
        let err = (&r * &r - &q).abs();
        assert!(err < *ctx.rel_tol());
        let lr = q.ln() / ctx.real(2.0).ln();
        assert!((&lr + &ctx.one()).abs() < *ctx.rel_tol());
    }

    #[test]
    fn nearest_int_behaviour() {
        let ctx = PrecisionContext::new(20).unwrap();
        assert_eq!(ctx.real(2.4).nearest_int().1, 2);
        assert_eq!(ctx.real(2.5).nearest_int().1, 3);
        assert_eq!(ctx.real(-2.5).nearest_int().1, -3);
        assert_eq!(ctx.real(-0.2).nearest_int().1, 0);
        assert_eq!(ctx.real(5.0).nearest_int().1, 5);
    }

    #[test]
    fn decimal_formatting() {
        let ctx = PrecisionContext::new(32).unwrap();
        assert_eq!(ctx.real(0.125).to_decimal_string(3), "1.25e-1");
        assert_eq!(ctx.real(-1234.0).to_decimal_string(2), "-1.2e3");
        assert_eq!(ctx.real(9.96).to_decimal_string(2), "1.0e1");
        assert_eq!(ctx.zero().to_decimal_string(3), "0.00e0");
        let third = ctx.one() / ctx.real(3.0);
        assert_eq!(third.to_decimal_string(5), "3.3333e-1");
    }

    #[test]
    fn self_consistency_across_digit_levels() {
        // results at higher digits agree with lower-digit results within the
        // lower context's rel_tol
        let lo = PrecisionContext::new(16).unwrap();
        let hi = PrecisionContext::new(48).unwrap();
        for v in [0.3, 1.7, 12.25, 0.031] {
            let a = lo.real(v).pow(&lo.real(0.37)).ln();
            let b = hi.real(v).pow(&hi.real(0.37)).ln();
            let err = (&a - &b).abs() / b.abs();
            assert!(err < *lo.rel_tol(), "v = {v}");
        }
    }
}
