//! Laurent polynomials in one variable `t` over the Gaussian rationals.

use super::gauss::GaussRat;
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse Laurent polynomial; the map never stores zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, GaussRat>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Laurent::single(0, c)
    }

    /// The monomial `c * t^e`.
    pub fn single(e: i64, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    pub fn t_pow(e: i64) -> Self {
        Laurent::single(e, GaussRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, e: i64) -> GaussRat {
        self.terms.get(&e).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Smallest exponent with a nonzero coefficient; `None` for zero.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when every exponent is nonnegative.
    pub fn is_poly(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    fn insert_add(terms: &mut BTreeMap<i64, GaussRat>, e: i64, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        match terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    terms.remove(&e);
                }
            }
            None => {
                terms.insert(e, c.clone());
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Laurent::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a Gaussian-rational point. `None` when the point
    /// is 0 and a negative exponent is present.
    pub fn eval(&self, x: &GaussRat) -> Option<GaussRat> {
        let mut acc = GaussRat::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                gauss_pow(x, *e as u64)
            } else {
                let inv = x.inv()?;
                gauss_pow(&inv, (-*e) as u64)
            };
            acc += &(c * &p);
        }
        Some(acc)
    }

    /// Leading (highest-degree) coefficient; zero polynomial yields zero.
    fn leading(&self) -> GaussRat {
        self.max_exp().map_or_else(GaussRat::zero, |e| self.coeff(e))
    }

    fn degree(&self) -> i64 {
        self.max_exp().unwrap_or(-1)
    }

    /// Polynomial division with remainder. Both operands must be ordinary
    /// polynomials and the divisor nonzero.
    pub fn div_rem(&self, div: &Laurent) -> (Laurent, Laurent) {
        assert!(self.is_poly() && div.is_poly() && !div.is_zero());
        let mut rem = self.clone();
        let mut quo = Laurent::zero();
        let dlead = div.leading();
        let dinv = dlead.inv().expect("nonzero divisor");
        let ddeg = div.degree();
        while !rem.is_zero() && rem.degree() >= ddeg {
            let e = rem.degree() - ddeg;
            let c = &rem.leading() * &dinv;
            let m = Laurent::single(e, c);
            quo = &quo + &m;
            rem = &rem - &(&m * div);
        }
        (quo, rem)
    }

    /// Monic gcd of two ordinary polynomials.
    pub fn gcd(&self, other: &Laurent) -> Laurent {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = a.leading().inv().expect("nonzero leading");
        a.scale(&inv)
    }
}

fn gauss_pow(x: &GaussRat, n: u64) -> GaussRat {
    let mut acc = GaussRat::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            Laurent::insert_add(&mut terms, *e, c);
        }
        Laurent { terms }
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                Laurent::insert_add(&mut terms, e1 + e2, &(c1 * c2));
            }
        }
        Laurent { terms }
    }
}

/// Canonical text form: terms in descending exponent order, coefficients
/// rendered per the scalar grammar. Exponents here are assumed nonnegative
/// (the fraction renderer shifts first).
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let body = render_term(*e, c);
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

fn render_term(e: i64, c: &GaussRat) -> String {
    let mono = match e {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{e}"),
    };
    if mono.is_empty() {
        // Constant term: parenthesize mixed values so sums stay unambiguous.
        return if c.is_real() || c.re.is_zero() {
            c.to_string()
        } else {
            format!("({c})")
        };
    }
    if c.is_one() {
        return mono;
    }
    if (-c).is_one() {
        return format!("-{mono}");
    }
    if c.is_real() || c.re.is_zero() {
        format!("{c}*{mono}")
    } else {
        format!("({c})*{mono}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t4_plus_1() -> Laurent {
        &Laurent::t_pow(4) + &Laurent::one()
    }

    #[test]
    fn div_rem_exact() {
        let a = &t4_plus_1() * &Laurent::t_pow(3);
        let (q, r) = a.div_rem(&t4_plus_1());
        assert!(r.is_zero());
        assert_eq!(q, Laurent::t_pow(3));
    }

    #[test]
    fn gcd_of_shifted() {
        let a = &t4_plus_1() * &(&Laurent::t_pow(2) + &Laurent::one());
        let b = &t4_plus_1() * &Laurent::t_pow(5);
        assert_eq!(a.gcd(&b), t4_plus_1());
    }

    #[test]
    fn display_descending() {
        let p = &(&Laurent::t_pow(8) + &Laurent::one()) - &Laurent::single(2, GaussRat::from_int(3));
        assert_eq!(p.to_string(), "t^8 - 3*t^2 + 1");
        assert_eq!(Laurent::single(2, GaussRat::i()).to_string(), "i*t^2");
    }
}
