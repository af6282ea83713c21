//! Hook length polynomials summed over 𝓕(r), and the classical binary-tree
//! identities they specialize to.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{closed_hookp, closed_hookp2, int, rat, Polynomial};
use crate::degree::DegreeSequence;
use crate::enumerate::enumerate_forests;
use crate::error::{Error, Result};
use crate::forest::PlaneForest;

/// `P_v(x) = [((d-1)h + 1)x + 1 - h] / (d h)`
pub fn vertex_hook_poly(d: u64, h: u64) -> Result<Polynomial> {
    if d == 0 || h == 0 {
        return Err(Error::VertexPoly { d, h });
    }
    let (d, h) = (d as i64, h as i64);
    Ok(Polynomial::linear(rat(1 - h, d * h), rat((d - 1) * h + 1, d * h)))
}

/// `[(d + x)h - x] / (d h)`, the vertex factor of the second form.
pub fn vertex_hook_poly2(d: u64, h: u64) -> Result<Polynomial> {
    if d == 0 || h == 0 {
        return Err(Error::VertexPoly { d, h });
    }
    let (d, h) = (d as i64, h as i64);
    Ok(Polynomial::linear(rat(1, 1), rat(h - 1, d * h)))
}

fn forest_product(forest: &PlaneForest, factor: fn(u64, u64) -> Result<Polynomial>) -> Polynomial {
    forest
        .internal_vertices()
        .iter()
        .map(|v| factor(v.degree as u64, v.hook as u64).expect("internal vertices have d, h ≥ 1"))
        .product()
}

fn brute_sum(r: &DegreeSequence, factor: fn(u64, u64) -> Result<Polynomial>) -> Polynomial {
    enumerate_forests(r)
        .par_iter()
        .map(|f| forest_product(f, factor))
        .reduce(Polynomial::zero, |a, b| &a + &b)
}

/// `𝓗_r(x) = Σ_{F ∈ 𝓕(r)} Π_{v ∈ I(F)} P_v(x)`
pub fn brute_hookp(r: &DegreeSequence) -> Polynomial {
    brute_sum(r, vertex_hook_poly)
}

/// `Σ_{F ∈ 𝓕(r)} Π_{v ∈ I(F)} [(d_v + x)h_v - x] / (d_v h_v)`
pub fn brute_hookp2(r: &DegreeSequence) -> Polynomial {
    brute_sum(r, vertex_hook_poly2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookReport {
    pub r: DegreeSequence,
    pub brute: Polynomial,
    pub closed: Polynomial,
    pub equal: bool,
    pub forest_count: BigUint,
}

fn report(r: &DegreeSequence, brute: Polynomial, closed: Polynomial) -> HookReport {
    HookReport {
        r: r.clone(),
        equal: brute == closed,
        brute,
        closed,
        forest_count: BigUint::from(enumerate_forests(r).len()),
    }
}

pub fn verify_hookp(r: &DegreeSequence) -> HookReport {
    report(r, brute_hookp(r), closed_hookp(r))
}

pub fn verify_hookp2(r: &DegreeSequence) -> HookReport {
    report(r, brute_hookp2(r), closed_hookp2(r))
}

/// Checks `hookp2(t) = (-(1+t))^n · hookp(-1/(1+t))` for `t ≠ -1`, the
/// substitution linking the two forms vertex by vertex.
pub fn transformation_holds(r: &DegreeSequence, first: &Polynomial, second: &Polynomial, t: &BigRational) -> bool {
    let shifted = BigRational::one() + t;
    assert!(!shifted.is_zero(), "t = -1 is excluded");
    let n = r.internal() as usize;
    let scale = num_traits::pow(-shifted.clone(), n);
    second.eval(t) == scale * first.eval(&(-shifted.recip()))
}

fn binary_type(n: u64) -> DegreeSequence {
    DegreeSequence::new(vec![n + 1, 0, n]).expect("binary type is realizable")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PostnikovCheck {
    pub n: u64,
    pub lhs: BigRational,
    pub rhs: BigUint,
    pub equal: bool,
}

/// `Σ_T n!/2^n Π_v (1 + 1/h_v)` over complete binary trees with `n` internal
/// vertices, against `(n+1)^{n-1}`.
pub fn postnikov_check(n: u64) -> PostnikovCheck {
    assert!(n >= 1, "n must be positive");
    let prefactor = BigRational::new(
        BigInt::from(crate::algebra::factorial(n)),
        BigInt::from(BigUint::from(2u32).pow(n as u32)),
    );
    let sum: BigRational = enumerate_forests(&binary_type(n))
        .iter()
        .map(|t| {
            t.internal_vertices()
                .iter()
                .map(|v| BigRational::one() + rat(1, v.hook as i64))
                .product::<BigRational>()
        })
        .sum();
    let lhs = prefactor * sum;
    let rhs = BigUint::from(n + 1).pow((n - 1) as u32);
    let equal = lhs == BigRational::from_integer(BigInt::from(rhs.clone()));
    PostnikovCheck { n, lhs, rhs, equal }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LascouxCheck {
    pub n: u64,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub equal: bool,
}

/// `Σ_T Π_v (x + 1/h_v)` against `1/(n+1)! · Π_{i=0}^{n-1} ((n+1+i)x + n+1-i)`.
pub fn lascoux_check(n: u64) -> LascouxCheck {
    assert!(n >= 1, "n must be positive");
    let lhs: Polynomial = enumerate_forests(&binary_type(n))
        .iter()
        .map(|t| {
            t.internal_vertices()
                .iter()
                .map(|v| Polynomial::linear(rat(1, v.hook as i64), int(1)))
                .product::<Polynomial>()
        })
        .sum();
    let m = n as i64;
    let norm = BigRational::new(BigInt::one(), BigInt::from(crate::algebra::factorial(n + 1)));
    let rhs = (0..m)
        .map(|i| Polynomial::linear(int(m + 1 - i), int(m + 1 + i)))
        .product::<Polynomial>()
        .scale(&norm);
    let equal = lhs == rhs;
    LascouxCheck { n, lhs, rhs, equal }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(text: &str) -> DegreeSequence {
        text.parse().unwrap()
    }

    #[test]
    fn vertex_polynomials() {
        assert_eq!(vertex_hook_poly(2, 1).unwrap(), Polynomial::x());
        assert_eq!(vertex_hook_poly(1, 2).unwrap(), Polynomial::linear(rat(-1, 2), rat(1, 2)));
        assert_eq!(vertex_hook_poly(1, 1).unwrap(), Polynomial::x());
        assert_eq!(vertex_hook_poly(0, 1), Err(Error::VertexPoly { d: 0, h: 1 }));
        assert_eq!(vertex_hook_poly(1, 0), Err(Error::VertexPoly { d: 1, h: 0 }));
        // ((d + x)h - x)/(dh) expanded by hand for d = 1, h = 2 and d = 2, h = 1
        assert_eq!(vertex_hook_poly2(1, 2).unwrap(), Polynomial::linear(int(1), rat(1, 2)));
        assert_eq!(vertex_hook_poly2(2, 1).unwrap(), Polynomial::one());
    }

    #[test]
    fn brute_sums_on_small_types() {
        let half_x_x_minus_1 = Polynomial::from_coeffs(vec![int(0), rat(-1, 2), rat(1, 2)]);
        assert_eq!(brute_hookp(&r("1,2")), half_x_x_minus_1);
        assert_eq!(brute_hookp(&r("2,0,1")), Polynomial::x());
        assert_eq!(brute_hookp(&r("5")), Polynomial::one());

        assert_eq!(brute_hookp2(&r("1,2")), Polynomial::linear(int(1), rat(1, 2)));
        assert_eq!(brute_hookp2(&r("2,0,1")), Polynomial::one());
        assert_eq!(brute_hookp2(&r("5")), Polynomial::one());
    }

    #[test]
    fn reports() {
        let rep = verify_hookp(&r("1,2"));
        assert!(rep.equal);
        let rep = verify_hookp(&r("3,1,1"));
        assert!(rep.equal);
        assert_eq!(rep.forest_count, BigUint::from(8u32));
        let rep = verify_hookp2(&r("4,0,3"));
        assert!(rep.equal);
        assert_eq!(rep.forest_count, BigUint::from(5u32));
    }

    #[test]
    fn transformation_on_small_types() {
        for t in DegreeSequence::all_up_to(6, 3) {
            let (a, b) = (brute_hookp(&t), brute_hookp2(&t));
            for s in [int(0), int(1), int(2), rat(1, 2), rat(-3, 2)] {
                assert!(transformation_holds(&t, &a, &b, &s), "{t} at {s}");
            }
            let n = t.internal() as usize;
            assert_eq!(a.degree(), Some(n));
            assert_eq!(b.degree(), Some(n.saturating_sub(1)));
        }
    }

    #[test]
    fn classical_identities() {
        let values: Vec<_> = (1..=4).map(|n| postnikov_check(n).lhs).collect();
        assert_eq!(values, vec![int(1), int(3), int(16), int(125)]);
        assert!((1..=4).all(|n| postnikov_check(n).equal));

        let one = lascoux_check(1);
        assert_eq!(one.lhs, Polynomial::linear(int(1), int(1)));
        assert!(one.equal);
        let two = lascoux_check(2);
        assert_eq!(two.rhs, Polynomial::from_coeffs(vec![int(1), int(3), int(2)]));
        assert!(two.equal);
        assert!(lascoux_check(3).equal);
    }
}
