//! Gaussian rationals `a + b*i` with arbitrary-precision rational parts.

use num::{BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of Q(i).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::default()
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussRat::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(GaussRat::new(&self.re / &norm, -&self.im / &norm))
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        fn approx(r: &BigRational) -> f64 {
            let n = r.numer();
            let d = r.denom();
            // Exact when the parts fit in i64, bit-level fallback otherwise.
            match (i64::try_from(n), i64::try_from(d)) {
                (Ok(n), Ok(d)) => n as f64 / d as f64,
                _ => {
                    let n: f64 = n.to_string().parse().unwrap_or(f64::NAN);
                    let d: f64 = d.to_string().parse().unwrap_or(f64::NAN);
                    n / d
                }
            }
        }
        (approx(&self.re), approx(&self.im))
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, rhs: &GaussRat) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussRat> for GaussRat {
    fn mul_assign(&mut self, rhs: &GaussRat) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Renders `a + b*i` without surrounding parentheses. Callers decide when
/// the result needs them.
impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        let imag = |f: &mut fmt::Formatter<'_>, im: &BigRational| -> fmt::Result {
            if im.is_one() {
                write!(f, "i")
            } else if (-im).is_one() {
                write!(f, "-i")
            } else {
                fmt_rational(im, f)?;
                write!(f, "*i")
            }
        };
        if self.re.is_zero() {
            return imag(f, &self.im);
        }
        fmt_rational(&self.re, f)?;
        if self.im.is_negative() {
            write!(f, " - ")?;
            imag(f, &-&self.im)
        } else {
            write!(f, " + ")?;
            imag(f, &self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_i() {
        let i = GaussRat::i();
        let inv = i.inv().unwrap();
        assert_eq!(&i * &inv, GaussRat::one());
        assert_eq!(inv, -&GaussRat::i());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRat::zero().to_string(), "0");
        assert_eq!(GaussRat::from_ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(GaussRat::i().to_string(), "i");
        let mixed = &GaussRat::from_int(1) + &GaussRat::i();
        assert_eq!(mixed.to_string(), "1 + i");
        let m2 = &GaussRat::from_int(2) - &(&GaussRat::from_int(3) * &GaussRat::i());
        assert_eq!(m2.to_string(), "2 - 3*i");
    }
}
