use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

/// Univariate polynomial over exact rationals, dense, constant term first.
/// Trailing zero coefficients are never stored; the zero polynomial is `[]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Polynomial::linear(BigRational::zero(), BigRational::one())
    }

    /// `constant + slope·x`
    pub fn linear(constant: BigRational, slope: BigRational) -> Self {
        Polynomial::from_coeffs(vec![constant, slope])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigRational {
        self.coeffs.get(power).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, factor: &BigRational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        (0..exp).fold(Polynomial::one(), |acc, _| &acc * self)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

impl Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let magnitude = c.abs();
            let show_coeff = power == 0 || !magnitude.is_one();
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 if show_coeff => f.write_str("·x")?,
                1 => f.write_str("x")?,
                _ if show_coeff => write!(f, "·x^{power}")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: array of coefficient strings from the constant term upward.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn ring_operations() {
        let x = Polynomial::x();
        let x_minus_1 = Polynomial::linear(int(-1), int(1));
        let product = &x * &x_minus_1;
        assert_eq!(product, poly(&[(0, 1), (-1, 1), (1, 1)]));
        assert_eq!(product.eval(&int(3)), int(6));
        assert_eq!(product.degree(), Some(2));

        let scaled = Polynomial::linear(int(2), int(1)).scale(&rat(1, 2));
        assert_eq!(scaled, poly(&[(1, 1), (1, 2)]));

        assert!((&x - &x).is_zero());
        assert_eq!((&x - &x).degree(), None);
        assert_eq!(Polynomial::from_coeffs(vec![int(0), int(0)]), Polynomial::zero());
    }

    #[test]
    fn display_and_json() {
        let p = poly(&[(1, 1), (1, 2)]);
        assert_eq!(p.to_string(), "1/2·x + 1");
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["1","1/2"]"#);
        let back: Polynomial = serde_json::from_str(r#"["1","1/2","0"]"#).unwrap();
        assert_eq!(back, p);
        assert_eq!(poly(&[(0, 1), (-1, 1), (1, 1)]).to_string(), "x^2 - x");
        assert!(serde_json::from_str::<Polynomial>(r#"["1/0x"]"#).is_err());
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-9i64..10, 1i64..5), 0..4)
            .prop_map(|cs| Polynomial::from_coeffs(cs.into_iter().map(|(p, q)| rat(p, q)).collect()))
    }

    proptest! {
        #[test]
        fn eval_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), t in -6i64..7) {
            let t = int(t);
            prop_assert_eq!((&a + &b).eval(&t), a.eval(&t) + b.eval(&t));
            prop_assert_eq!((&a * &b).eval(&t), a.eval(&t) * b.eval(&t));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn json_roundtrip(a in small_poly()) {
            let text = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<Polynomial>(&text).unwrap(), a);
        }
    }
}
