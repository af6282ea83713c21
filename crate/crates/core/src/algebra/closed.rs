//! Closed-form sides of the hook length polynomial identities.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::comb::{factorial, multinomial};
use super::poly::{int, Polynomial};
use crate::degree::DegreeSequence;

fn internal_factorials(r: &DegreeSequence) -> BigUint {
    r.internal_degrees().map(|(_, rd)| factorial(rd)).product()
}

fn ratio(numer: BigUint, denom: BigUint) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `(ℓ/r_0) · (r_0 x)(r_0 x - 1)⋯(r_0 x - n + 1) / Π_{d≥1} r_d!`
///
/// This is the multinomial `(ℓ/r_0)·C(r_0 x; r_0 x - n, r_1, r_2, ...)` with
/// the top entry read as a falling factorial in `x`.
pub fn closed_hookp(r: &DegreeSequence) -> Polynomial {
    let r0 = r.leaves() as i64;
    let prefactor = ratio(BigUint::from(r.trees()), BigUint::from(r.leaves()) * internal_factorials(r));
    (0..r.internal() as i64)
        .map(|i| Polynomial::linear(int(-i), int(r0)))
        .product::<Polynomial>()
        .scale(&prefactor)
}

/// `ℓ / Π_{d≥1} r_d! · Π_{i=1}^{n-1} (r_0 + i(1 + x))`
///
/// For `n = 0` the product `Π_{i=1}^{-1}` is read as `1/(r_0 + 0)`, the
/// convention under which `Π_{i=1}^{n-1} = Π_{i=1}^{n} / (r_0 + n(1+x))`
/// holds for every `n ≥ 0`. Since `ℓ = r_0` there, the result is `1`.
pub fn closed_hookp2(r: &DegreeSequence) -> Polynomial {
    let n = r.internal() as i64;
    if n == 0 {
        return Polynomial::one();
    }
    let r0 = r.leaves() as i64;
    let prefactor = ratio(BigUint::from(r.trees()), internal_factorials(r));
    (1..n)
        .map(|i| Polynomial::linear(int(r0 + i), int(i)))
        .product::<Polynomial>()
        .scale(&prefactor)
}

/// The integer route to `closed_hookp(r)` at `x = k`:
/// `(ℓ/r_0) · multinomial(r_0 k; r_0 k - n, r_1, r_2, ...)`.
/// `None` when `r_0 k < n`, where the multinomial is undefined.
pub fn closed_hookp_at(r: &DegreeSequence, k: u64) -> Option<BigRational> {
    let top = r.leaves() * k;
    let free = top.checked_sub(r.internal())?;
    let mut parts = vec![free];
    parts.extend(r.counts().iter().skip(1));
    let m = multinomial(top, &parts).expect("parts sum to r_0 k by construction");
    Some(ratio(m * r.trees(), BigUint::from(r.leaves())))
}

/// `Π_{i=1}^{n-1} (r_0 + i(1+k))` under the same `n = 0` convention as
/// [`closed_hookp2`], so the value at `n = 0` is `1/r_0`.
pub fn leaf_product(r: &DegreeSequence, k: u64) -> BigRational {
    let n = r.internal();
    if n == 0 {
        return ratio(BigUint::one(), BigUint::from(r.leaves()));
    }
    let p: BigUint = (1..n).map(|i| BigUint::from(r.leaves() + i * (1 + k))).product();
    BigRational::from_integer(BigInt::from(p))
}
