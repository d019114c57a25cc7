//! Exact sparse Laurent polynomials in the two variables `a` and `z`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::PolyParseError;

/// Exponent pair `(a, z)`.
pub type Exponents = (i32, i32);

/// A Laurent polynomial in `a` and `z` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `coeff * a^a_exp * z^z_exp`
    pub fn monomial(coeff: impl Into<BigInt>, a_exp: i32, z_exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term((a_exp, z_exp), coeff.into());
        p
    }

    pub fn a() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// The unlink factor `(a - a^-1) z^-1`.
    pub fn delta() -> Self {
        Self::monomial(1, 1, -1) - Self::monomial(1, -1, -1)
    }

    /// `delta^(n-1)`, the polynomial of an `n`-component trivial link.
    pub fn unlink(components: usize) -> Self {
        assert!(components >= 1, "an unlink has at least one component");
        Self::delta().pow(components as u32 - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a_exp: i32, z_exp: i32) -> BigInt {
        self.terms
            .get(&(a_exp, z_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    /// Multiply by `sign * a^da * z^dz`.
    pub fn shift(&self, sign: i32, da: i32, dz: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(ea, ez), c)| ((ea + da, ez + dz), if sign < 0 { -c } else { c.clone() }))
            .collect();
        Self { terms }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
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

    pub fn max_a(&self) -> Option<i32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn min_a(&self) -> Option<i32> {
        self.terms.keys().map(|&(a, _)| a).min()
    }

    /// The coefficient of `a^a_exp`, as a polynomial in `z` (kept in two-variable form).
    pub fn a_coefficient(&self, a_exp: i32) -> Self {
        let terms = self
            .terms
            .range((a_exp, i32::MIN)..=(a_exp, i32::MAX))
            .map(|(&e, c)| (e, c.clone()))
            .collect();
        Self { terms }
    }

    pub fn max_z(&self) -> Option<i32> {
        self.terms.keys().map(|&(_, z)| z).max()
    }
}

/// Serialize through the canonical text form.
pub fn serialize_display<S: serde::Serializer>(p: &LaurentPoly2, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

impl From<i64> for LaurentPoly2 {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }
}

impl<'a> Add<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.shift(-1, 0, 0)
    }
}

impl<'a> Sub<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a1, z1), c1) in &self.terms {
            for (&(a2, z2), c2) in &rhs.terms {
                out.add_term((a1 + a2, z1 + z2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, exp: i32) -> fmt::Result {
    match exp {
        1 => write!(f, "{var}"),
        e => write!(f, "{var}^{e}"),
    }
}

/// Canonical text form: terms by descending `a` exponent, then descending `z`
/// exponent, e.g. `-a^4 + a^2*z^2 + 2*a^2`.
impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(ea, ez), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut need_star = false;
            if !mag.is_one() || (ea == 0 && ez == 0) {
                write!(f, "{mag}")?;
                need_star = true;
            }
            for (var, exp) in [('a', ea), ('z', ez)] {
                if exp != 0 {
                    if need_star {
                        write!(f, "*")?;
                    }
                    write_power(f, var, exp)?;
                    need_star = true;
                }
            }
        }
        Ok(())
    }
}

fn parse_factor(factor: &str, exps: &mut Exponents, coeff: &mut BigInt) -> Result<(), PolyParseError> {
    let bad = || PolyParseError(format!("bad factor `{factor}`"));
    let (var, exp) = match factor.split_once('^') {
        Some((v, e)) => (v, e.parse::<i32>().map_err(|_| bad())?),
        None => (factor, 1),
    };
    match var {
        "a" => exps.0 += exp,
        "z" => exps.1 += exp,
        _ => {
            if factor.contains('^') {
                return Err(bad());
            }
            *coeff *= factor.parse::<BigInt>().map_err(|_| bad())?;
        }
    }
    Ok(())
}

impl FromStr for LaurentPoly2 {
    type Err = PolyParseError;

    /// Parses the canonical text form (and any reordering of it).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyParseError("empty input".into()));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            // exponents may carry their own minus sign right after '^'
            let bytes = body.as_bytes();
            let mut end = body.len();
            for i in 1..bytes.len() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                    end = i;
                    break;
                }
            }
            let term = &body[..end];
            if term.is_empty() {
                return Err(PolyParseError(format!("dangling sign in `{s}`")));
            }
            let mut exps = (0, 0);
            let mut coeff = BigInt::from(sign);
            for factor in term.split('*') {
                parse_factor(factor, &mut exps, &mut coeff)?;
            }
            out.add_term(exps, coeff);
            rest = &body[end..];
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats_canonically() {
        let p = LaurentPoly2::monomial(2, 2, 0) - LaurentPoly2::monomial(1, 4, 0)
            + LaurentPoly2::monomial(1, 2, 2);
        assert_eq!(p.to_string(), "-a^4 + a^2*z^2 + 2*a^2");
        assert_eq!(LaurentPoly2::one().to_string(), "1");
        assert_eq!(LaurentPoly2::zero().to_string(), "0");
        assert_eq!(LaurentPoly2::delta().to_string(), "a*z^-1 - a^-1*z^-1");
    }

    #[test]
    fn unlink_powers() {
        let d = LaurentPoly2::delta();
        assert_eq!(LaurentPoly2::unlink(1), LaurentPoly2::one());
        assert_eq!(LaurentPoly2::unlink(3), &d * &d);
        // (a - a^-1)^2 z^-2 = a^2 z^-2 - 2 z^-2 + a^-2 z^-2
        assert_eq!(LaurentPoly2::unlink(3).to_string(), "a^2*z^-2 - 2*z^-2 + a^-2*z^-2");
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = LaurentPoly2::a() - LaurentPoly2::a();
        assert!(p.is_zero());
        assert_eq!(p.max_a(), None);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentPoly2>().is_err());
        assert!("a^x".parse::<LaurentPoly2>().is_err());
        assert!("2*b".parse::<LaurentPoly2>().is_err());
        assert!("a +".parse::<LaurentPoly2>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly2> {
        prop::collection::vec((-5i64..=5, -6i32..=6, -6i32..=6), 0..6).prop_map(|ts| {
            ts.into_iter()
                .fold(LaurentPoly2::zero(), |acc, (c, a, z)| acc + LaurentPoly2::monomial(c, a, z))
        })
    }

    proptest! {
        #[test]
        fn text_form_round_trips(p in arb_poly()) {
            let back: LaurentPoly2 = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!((&(&p - &q) + &q) == p);
        }
    }
}
