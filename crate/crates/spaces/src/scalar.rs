//! Exact scalars of the form `a + b*sqrt(3)` with rational `a`, `b`.
//!
//! Comparison is exact via sign analysis of `a^2 - 3 b^2`; no floating
//! point is involved anywhere. Plain rationals embed with `b = 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

pub type Rational = BigRational;

/// Build a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// An element of the quadratic field extension by sqrt(3).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Scalar {
    a: Rational,
    b: Rational,
}

impl Scalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Scalar { a, b }
    }

    pub fn zero() -> Self {
        Scalar { a: Rational::zero(), b: Rational::zero() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The irrational unit sqrt(3).
    pub fn sqrt3() -> Self {
        Scalar { a: Rational::zero(), b: Rational::from(BigInt::from(1)) }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { a: Rational::from(BigInt::from(n)), b: Rational::zero() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar { a: rat(num, den), b: Rational::zero() }
    }

    pub fn from_rational(a: Rational) -> Self {
        Scalar { a, b: Rational::zero() }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt3_part(&self) -> &Rational {
        &self.b
    }

    /// The rational value when `b = 0`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign of `a + b*sqrt(3)`: -1, 0, or 1.
    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            // Opposite signs: compare a^2 with 3 b^2; the sign of the
            // sum matches the side with the larger square.
            _ => {
                let a2 = &self.a * &self.a;
                let b23 = &self.b * &self.b * rat(3, 1);
                match a2.cmp(&b23) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => 0,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Approximate value, for rendering only.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * 3f64.sqrt()
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    let num = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let den = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    num / den
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // (a + b r)(c + d r) = ac + 3bd + (ad + bc) r
        Scalar {
            a: &self.a * &rhs.a + rat(3, 1) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        // Multiply by the conjugate; the norm c^2 - 3 d^2 is nonzero
        // for nonzero rhs since 3 is not a rational square.
        assert!(!rhs.is_zero(), "division by zero scalar");
        let norm = &rhs.a * &rhs.a - rat(3, 1) * &rhs.b * &rhs.b;
        let conj = Scalar { a: rhs.a.clone(), b: -rhs.b.clone() };
        let prod = self * &conj;
        Scalar { a: prod.a / norm.clone(), b: prod.b / norm }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

/// Serialized form: `a/b` when rational, else `a/b+c/d*r3` (the
/// rational part is kept even when zero so parsing stays uniform;
/// negative coefficients keep their sign inside the numerator).
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}/{}", self.a.numer(), self.a.denom())
        } else {
            write!(
                f,
                "{}/{}+{}/{}*r3",
                self.a.numer(),
                self.a.denom(),
                self.b.numer(),
                self.b.denom()
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad scalar: {}", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

fn parse_rational(text: &str) -> Result<Rational, ParseScalarError> {
    let bad = || ParseScalarError(text.to_owned());
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(BigRational::from(n))
        }
    }
}

/// Accepts `a/b`, `a/b+c/d*r3`, and the spaced CLI form `a/b + c/d r3`.
impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ParseScalarError(s.to_owned());
        if compact.is_empty() {
            return Err(bad());
        }
        match compact.strip_suffix("r3") {
            None => Ok(Scalar::from_rational(parse_rational(&compact)?)),
            Some(head) => {
                let head = head.strip_suffix('*').unwrap_or(head);
                // Split the rational part from the r3 coefficient at the
                // last '+' or binding '-' not at the start of a numerator.
                if let Some(pos) = split_point(head) {
                    let (apart, rest) = head.split_at(pos);
                    let bpart = rest.strip_prefix('+').unwrap_or(rest);
                    Ok(Scalar::new(parse_rational(apart)?, parse_rational(bpart)?))
                } else {
                    // Pure multiple of r3.
                    let head = if head.is_empty() { "1" } else { head };
                    Ok(Scalar::new(Rational::zero(), parse_rational(head)?))
                }
            }
        }
    }
}

/// Index of the sign that separates `a/b` from `c/d` in `a/b±c/d`,
/// skipping a leading sign on the first numerator.
fn split_point(head: &str) -> Option<usize> {
    head.char_indices()
        .skip(1)
        .filter(|&(i, c)| {
            (c == '+' || c == '-') && !matches!(&head[i - 1..i], "/" | "+" | "-")
        })
        .map(|(i, _)| i)
        .last()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_analysis_is_exact() {
        // 2 - sqrt(3) > 0, 5/3 - sqrt(3) < 0, and sqrt(3)^2 = 3.
        assert!(Scalar::new(rat(2, 1), rat(-1, 1)).is_positive());
        assert!(Scalar::new(rat(5, 3), rat(-1, 1)).is_negative());
        let r3 = Scalar::sqrt3();
        assert_eq!(&r3 * &r3, Scalar::from_int(3));
    }

    #[test]
    fn ordering_matches_real_values() {
        let vals = [
            Scalar::new(rat(-2, 1), rat(0, 1)),
            Scalar::new(rat(0, 1), rat(-1, 1)),
            Scalar::zero(),
            Scalar::new(rat(0, 1), rat(1, 1)),
            Scalar::new(rat(7, 4), rat(0, 1)),
            Scalar::from_int(2),
        ];
        for w in vals.windows(2) {
            assert!(w[0] < w[1], "{} < {}", w[0], w[1]);
        }
    }

    #[test]
    fn division_inverts_multiplication() {
        let x = Scalar::new(rat(3, 2), rat(-5, 7));
        let y = Scalar::new(rat(-1, 3), rat(2, 1));
        let q = &(&x * &y) / &y;
        assert_eq!(q, x);
    }

    #[test]
    fn display_parse_round_trip() {
        for s in [
            Scalar::from_ratio(-3, 4),
            Scalar::new(rat(1, 2), rat(-1, 6)),
            Scalar::new(rat(0, 1), rat(2, 3)),
            Scalar::zero(),
        ] {
            let text = s.to_string();
            assert_eq!(text.parse::<Scalar>().unwrap(), s, "round trip of {text}");
        }
    }

    #[test]
    fn parse_spaced_cli_form() {
        let s: Scalar = "1/2 + -1/6 r3".parse().unwrap();
        assert_eq!(s, Scalar::new(rat(1, 2), rat(-1, 6)));
        let t: Scalar = "3/4".parse().unwrap();
        assert_eq!(t, Scalar::from_ratio(3, 4));
        let u: Scalar = "1/6*r3".parse().unwrap();
        assert_eq!(u, Scalar::new(rat(0, 1), rat(1, 6)));
        assert!("".parse::<Scalar>().is_err());
        assert!("x/y".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
    }
}
