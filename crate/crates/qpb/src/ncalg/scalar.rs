//! Exact scalars: Laurent polynomials in the deformation parameter `q`
//! with arbitrary-precision rational coefficients.
//!
//! All structure constants appearing in the bundled presentations are of
//! this shape, so no rational functions of `q` are ever stored; the only
//! divisions performed elsewhere are exact (checked) polynomial divisions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// A Laurent polynomial `sum_k c_k q^k` with `c_k` rational.
///
/// Invariant: no zero coefficient is stored, so structural equality is
/// semantic equality and `is_zero` is an emptiness test.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentScalar {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::term(0, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::term(0, BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The monomial `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::term(k, BigRational::one())
    }

    /// The single term `c q^k`.
    pub fn term(k: i64, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    /// `n q^k` with integer coefficient, a convenience for rule tables.
    pub fn int_q(n: i64, k: i64) -> Self {
        Self::term(k, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
            && self
                .coeffs
                .get(&0)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Exponent range `(min, max)` of the support; `None` when zero.
    pub fn degree_span(&self) -> Option<(i64, i64)> {
        let min = *self.coeffs.keys().next()?;
        let max = *self.coeffs.keys().next_back()?;
        Some((min, max))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// If the scalar is a single term `c q^k`, return `(k, c)`.
    pub fn as_monomial(&self) -> Option<(i64, &BigRational)> {
        if self.coeffs.len() == 1 {
            let (k, c) = self.coeffs.iter().next().unwrap();
            Some((*k, c))
        } else {
            None
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| (e + k, c.clone()))
            .collect();
        Self { coeffs }
    }

    /// Evaluate at a numeric value of `q`.
    pub fn eval(&self, q: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(k, c)| c.to_f64().expect("rational out of f64 range") * q.powi(*k as i32))
            .sum()
    }

    /// Exact division; `None` when `self` is not a multiple of `d`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero scalar");
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Fast path: monomial divisor.
        if let Some((k, c)) = d.as_monomial() {
            let coeffs = self
                .coeffs
                .iter()
                .map(|(e, a)| (e - k, a / c))
                .collect();
            return Some(Self { coeffs });
        }
        // Long division after shifting both operands to ordinary polynomials.
        let (amin, amax) = self.degree_span().unwrap();
        let (bmin, bmax) = d.degree_span().unwrap();
        if amax - amin < bmax - bmin {
            return None;
        }
        let mut rem = self.shift(-amin);
        let div = d.shift(-bmin);
        let (_, dlead) = div.degree_span().unwrap();
        let dlead_coef = div.coeffs[&dlead].clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (_, rlead) = rem.degree_span().unwrap();
            if rlead < dlead {
                return None;
            }
            let factor = Self::term(rlead - dlead, &rem.coeffs[&rlead] / &dlead_coef);
            rem -= &factor * &div;
            quot += factor;
        }
        Some(quot.shift(amin - bmin))
    }

    /// `gcd` of all rational coefficients times the least power of `q`:
    /// dividing by the content leaves a primitive integer-coefficient
    /// polynomial with positive leading coefficient and lowest exponent 0.
    pub fn content(&self) -> Option<Self> {
        let (min, _) = self.degree_span()?;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.coeffs.values() {
            num_gcd = gcd_bigint(&num_gcd, c.numer());
            den_lcm = lcm_bigint(&den_lcm, c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        let lead = self.coeffs.values().next_back().unwrap();
        if lead.is_negative() {
            content = -content;
        }
        Some(Self::term(min, content))
    }

    pub(crate) fn coeffs(&self) -> &BTreeMap<i64, BigRational> {
        &self.coeffs
    }

    fn insert(&mut self, k: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn lcm_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    (a * b).abs() / gcd_bigint(a, b)
}

impl AddAssign<LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: LaurentScalar) {
        for (k, c) in rhs.coeffs {
            self.insert(k, c);
        }
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (k, c) in &rhs.coeffs {
            self.insert(*k, c.clone());
        }
    }
}

impl SubAssign<LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: LaurentScalar) {
        for (k, c) in rhs.coeffs {
            self.insert(k, -c);
        }
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        for (k, c) in &rhs.coeffs {
            self.insert(*k, -c.clone());
        }
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self += rhs;
        self
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, c)| (*k, -c.clone()))
            .collect();
        LaurentScalar { coeffs }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &rhs.coeffs {
                out.insert(ka + kb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: LaurentScalar) -> LaurentScalar {
        &self * &rhs
    }
}

impl MulAssign<&LaurentScalar> for LaurentScalar {
    fn mul_assign(&mut self, rhs: &LaurentScalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for LaurentScalar {
    /// Terms in ascending powers of `q`, e.g. `q^-2 - 1` or `3/2 q^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let unit_coef = mag.is_one();
            if !unit_coef || *k == 0 {
                write!(f, "{mag}")?;
            }
            if *k != 0 {
                if !unit_coef {
                    write!(f, " ")?;
                }
                if *k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl serde::Serialize for LaurentScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentScalar {
        LaurentScalar::q_pow(1)
    }

    // ---- ring axioms ----

    #[test]
    fn addition_and_cancellation() {
        let a = LaurentScalar::q_pow(-2) - LaurentScalar::one();
        let b = LaurentScalar::one() - LaurentScalar::q_pow(-2);
        assert!((&a + &b).is_zero());
        assert_eq!(&a - &a, LaurentScalar::zero());
    }

    #[test]
    fn multiplication_distributes() {
        let a = LaurentScalar::q_pow(2) + LaurentScalar::from_int(3);
        let b = LaurentScalar::q_pow(-1) - LaurentScalar::from_int(2);
        let c = LaurentScalar::from_ratio(1, 2) + LaurentScalar::q_pow(4);
        let lhs = &a * &(&b + &c);
        let rhs = &(&a * &b) + &(&a * &c);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn one_is_neutral_and_shift_matches_qpow() {
        let a = LaurentScalar::q_pow(-3) + LaurentScalar::from_int(7);
        assert_eq!(&a * &LaurentScalar::one(), a);
        assert_eq!(a.shift(2), &a * &LaurentScalar::q_pow(2));
    }

    // ---- division ----

    #[test]
    fn exact_division_roundtrip() {
        let a = (q() - LaurentScalar::one()) * (q() + LaurentScalar::from_int(2));
        let d = q() - LaurentScalar::one();
        assert_eq!(a.div_exact(&d).unwrap(), q() + LaurentScalar::from_int(2));
        let bad = &a + &LaurentScalar::one();
        assert!(bad.div_exact(&d).is_none());
    }

    #[test]
    fn monomial_division_handles_negative_exponents() {
        let a = LaurentScalar::int_q(3, -4);
        let d = LaurentScalar::int_q(2, -1);
        let quot = a.div_exact(&d).unwrap();
        assert_eq!(quot, LaurentScalar::term(-3, BigRational::new(3.into(), 2.into())));
    }

    // ---- display ----

    #[test]
    fn display_matches_conventions() {
        let a = LaurentScalar::q_pow(-2) - LaurentScalar::one();
        assert_eq!(a.to_string(), "q^-2 - 1");
        assert_eq!(LaurentScalar::q_pow(1).to_string(), "q");
        assert_eq!((-LaurentScalar::q_pow(1)).to_string(), "-q");
        assert_eq!(LaurentScalar::from_ratio(3, 2).shift(4).to_string(), "3/2 q^4");
        assert_eq!(LaurentScalar::zero().to_string(), "0");
        let b = LaurentScalar::one() - LaurentScalar::q_pow(2);
        assert_eq!(b.to_string(), "1 - q^2");
    }

    // ---- evaluation ----

    #[test]
    fn eval_at_half() {
        let a = LaurentScalar::q_pow(-2) - LaurentScalar::one();
        assert!((a.eval(0.5) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn content_normalises_sign_and_power() {
        let a = LaurentScalar::int_q(-4, 3) + LaurentScalar::int_q(-6, 5);
        let content = a.content().unwrap();
        let prim = a.div_exact(&content).unwrap();
        // -4q^3 - 6q^5 = (-2 q^3)(2 + 3 q^2)
        assert_eq!(content, LaurentScalar::int_q(-2, 3));
        assert_eq!(prim, LaurentScalar::from_int(2) + LaurentScalar::int_q(3, 2));
    }
}
