//! Exact coefficient field: rational functions in `t` over Q(i).
//!
//! Every scalar in the engine lives here. The base variable is `t` with the
//! conventions `q = t^4`, `sqrt(q) = t^2` and `sqrt(-q) = i*t^2`, so crossing
//! weights, turning factors and the loop value `q + q^-1` all stay in one
//! ring. Values are kept in a canonical reduced form, which makes structural
//! equality and text rendering decide mathematical equality.

mod gauss;
mod laurent;

pub use gauss::GaussRat;
pub use laurent::Laurent;

use crate::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A rational function `num / den` in canonical form:
///
/// - `den` is an ordinary polynomial with constant term exactly 1 (all
///   `t`-power content lives in the Laurent numerator);
/// - `num` and `den` share no nonconstant factor;
/// - zero is represented as `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    num: Laurent,
    den: Laurent,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar {
            num: Laurent::zero(),
            den: Laurent::one(),
        }
    }
}

impl Scalar {
    fn canonical(num: Laurent, den: Laurent) -> Scalar {
        assert!(!den.is_zero(), "internal: zero denominator");
        if num.is_zero() {
            return Scalar {
                num,
                den: Laurent::one(),
            };
        }
        // Move all t-power content into the numerator's Laurent part.
        let a = num.min_exp().unwrap();
        let b = den.min_exp().unwrap();
        let num = num.shift(-a);
        let den = den.shift(-b);
        let net = a - b;
        // Reduce by the polynomial gcd.
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        // Normalize the denominator's constant term to 1.
        let c = den.coeff(0);
        let cinv = c.inv().expect("den constant term nonzero");
        Scalar {
            num: num.scale(&cinv).shift(net),
            den: den.scale(&cinv),
        }
    }

    pub fn from_fraction(num: Laurent, den: Laurent) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::canonical(num, den))
    }

    pub fn from_laurent(num: Laurent) -> Scalar {
        Scalar::canonical(num, Laurent::one())
    }

    pub fn zero() -> Scalar {
        Scalar::default()
    }

    pub fn one() -> Scalar {
        Scalar::from_laurent(Laurent::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_gauss(GaussRat::from_int(n))
    }

    pub fn from_gauss(c: GaussRat) -> Scalar {
        Scalar::from_laurent(Laurent::constant(c))
    }

    pub fn i() -> Scalar {
        Scalar::from_gauss(GaussRat::i())
    }

    /// `t^e`.
    pub fn t_pow(e: i64) -> Scalar {
        Scalar::from_laurent(Laurent::t_pow(e))
    }

    /// `q^e` with `q = t^4`.
    pub fn q_pow(e: i64) -> Scalar {
        Scalar::t_pow(4 * e)
    }

    /// `sqrt(q) = t^2`.
    pub fn sqrt_q() -> Scalar {
        Scalar::t_pow(2)
    }

    /// The chosen square root of `-q`: `i*t^2`.
    pub fn sqrt_neg_q() -> Scalar {
        Scalar::from_laurent(Laurent::single(2, GaussRat::i()))
    }

    /// The loop value `q + q^-1`.
    pub fn loop_value() -> Scalar {
        &Scalar::q_pow(1) + &Scalar::q_pow(-1)
    }

    /// `q - q^-1`.
    pub fn q_minus_q_inv() -> Scalar {
        &Scalar::q_pow(1) - &Scalar::q_pow(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact evaluation at `t = x`, then converted to a complex `f64` pair.
    /// Points where the denominator (or a negative numerator power) vanishes
    /// are reported as errors.
    pub fn eval(&self, x: &GaussRat) -> Result<(f64, f64)> {
        let shift = self.num.min_exp().unwrap_or(0).min(0);
        let num = self.num.shift(-shift);
        let den = self.den.shift(-shift);
        let dv = den.eval(x).expect("polynomial evaluation");
        if dv.is_zero() {
            return Err(Error::EvalAtPole);
        }
        let nv = num.eval(x).expect("polynomial evaluation");
        Ok((&nv * &dv.inv().unwrap()).to_f64_pair())
    }

    /// Numerator/denominator pair with all exponents nonnegative, as used by
    /// the text rendering.
    fn poly_pair(&self) -> (Laurent, Laurent) {
        let shift = self.num.min_exp().unwrap_or(0).min(0);
        (self.num.shift(-shift), self.den.shift(-shift))
    }

    /// True when the canonical rendering is a sum of two or more terms, in
    /// which case embeddings into product expressions need parentheses.
    pub fn needs_parens_in_product(&self) -> bool {
        self.den.is_one() && self.num.num_terms() > 1
    }
}

pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.div(b),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Canonical text form. Two scalars are equal iff their renderings match.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (num, den) = self.poly_pair();
        if den.is_one() {
            return write!(f, "{num}");
        }
        let wrap = |p: &Laurent| {
            let s = p.to_string();
            if p.num_terms() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&num), wrap(&den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_pair() {
        let prod = &Scalar::q_pow(1) * &Scalar::q_pow(-1);
        assert!(prod.is_one());
    }

    #[test]
    fn sqrt_neg_q_squares_to_neg_q() {
        let s = Scalar::sqrt_neg_q();
        assert_eq!(&s * &s, -&Scalar::q_pow(1));
    }

    #[test]
    fn loop_value_text() {
        assert_eq!(Scalar::loop_value().to_string(), "(t^8 + 1)/t^4");
    }

    #[test]
    fn canonical_texts() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::sqrt_neg_q().to_string(), "i*t^2");
        assert_eq!(Scalar::q_pow(-1).to_string(), "1/t^4");
        assert_eq!((-&Scalar::one()).to_string(), "-1");
    }

    #[test]
    fn division_by_zero_reported() {
        assert_eq!(
            Scalar::one().div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn reduction_cancels_common_factor() {
        // (q^2 - 1) / (q - 1) = q + 1, built without ever forming q + 1.
        let q = Scalar::q_pow(1);
        let num = &(&q * &q) - &Scalar::one();
        let den = &q - &Scalar::one();
        let r = num.div(&den).unwrap();
        assert_eq!(r, &q + &Scalar::one());
    }

    #[test]
    fn eval_examples() {
        let one = GaussRat::one();
        assert_eq!(Scalar::q_pow(1).eval(&one).unwrap(), (1.0, 0.0));
        assert_eq!(Scalar::loop_value().eval(&one).unwrap(), (2.0, 0.0));
        assert_eq!(Scalar::sqrt_neg_q().eval(&one).unwrap(), (0.0, 1.0));
    }

    #[test]
    fn eval_at_pole_reported() {
        // 1 / (q - 1) at t = 1.
        let s = (&Scalar::q_pow(1) - &Scalar::one()).inv().unwrap();
        assert_eq!(s.eval(&GaussRat::one()), Err(Error::EvalAtPole));
        // q^-1 has a pole at t = 0.
        assert_eq!(
            Scalar::q_pow(-1).eval(&GaussRat::zero()),
            Err(Error::EvalAtPole)
        );
    }

    #[test]
    fn rendering_is_injective_on_values() {
        let a = Scalar::loop_value();
        let b = &(&Scalar::t_pow(8) + &Scalar::one()) * &Scalar::t_pow(-4);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), b.to_string());
        let c = &a - &Scalar::one();
        assert_ne!(a.to_string(), c.to_string());
    }
}
