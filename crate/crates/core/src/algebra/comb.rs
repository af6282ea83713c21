use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `top! / Π parts!`, built as a product of binomials so every intermediate
/// value is an integer.
pub fn multinomial(top: u64, parts: &[u64]) -> Result<BigUint> {
    let sum: u64 = parts.iter().sum();
    if sum != top {
        return Err(Error::MultinomialMismatch { top, sum });
    }
    let mut acc = BigUint::one();
    let mut filled = 0u64;
    for &part in parts {
        for j in 1..=part {
            acc *= filled + j;
            acc /= j;
        }
        filled += part;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn by_factorials(top: u64, parts: &[u64]) -> BigUint {
        parts.iter().fold(factorial(top), |acc, &p| acc / factorial(p))
    }

    #[test]
    fn small_values() {
        assert_eq!(multinomial(3, &[2, 0, 1]).unwrap(), BigUint::from(3u32));
        assert_eq!(multinomial(5, &[3, 1, 1]).unwrap(), BigUint::from(20u32));
        assert_eq!(multinomial(7, &[4, 0, 3]).unwrap(), BigUint::from(35u32));
        assert_eq!(multinomial(0, &[]).unwrap(), BigUint::one());
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(6), BigUint::from(720u32));
    }

    #[test]
    fn mismatched_parts() {
        assert_eq!(
            multinomial(4, &[1, 2]),
            Err(Error::MultinomialMismatch { top: 4, sum: 3 })
        );
    }

    proptest! {
        #[test]
        fn agrees_with_factorials_and_is_symmetric(
            mut parts in proptest::collection::vec(0u64..6, 0..5),
            seed in any::<u64>(),
        ) {
            let top: u64 = parts.iter().sum();
            let direct = multinomial(top, &parts).unwrap();
            prop_assert_eq!(&direct, &by_factorials(top, &parts));
            if !parts.is_empty() {
                let len = parts.len();
                parts.rotate_left((seed as usize) % len);
                parts.swap(0, len - 1);
            }
            prop_assert_eq!(multinomial(top, &parts).unwrap(), direct);
        }
    }
}
