//! Exact scalar fields the engine computes over.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, Zero};

/// An exact ordered field with a textual `p/q` form.
///
/// Every identity in this crate is checked by exact equality, so only exact
/// field types qualify. `Ratio<BigInt>` is the working type; `Ratio<i64>` is
/// convenient for small hand computations but overflows quickly under
/// iterated Laplacians.
pub trait Scalar:
    Clone + Debug + Display + FromStr + Ord + Hash + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    /// Rescales `v` in place to coprime integers with a positive leading
    /// nonzero entry. A zero vector is left untouched.
    fn make_primitive(v: &mut [Self]);
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + Debug + Display + FromStr + Hash + Send + Sync + 'static,
    Ratio<T>: FromPrimitive,
{
    fn make_primitive(v: &mut [Self]) {
        let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() else {
            return;
        };
        let mut den = T::one();
        for x in v.iter() {
            den = den.lcm(x.denom());
        }
        let mut num_gcd = T::zero();
        for x in v.iter() {
            let scaled = x.numer().clone() * (den.clone() / x.denom().clone());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut factor = Ratio::new(den, num_gcd);
        if lead.is_negative() {
            factor = -factor;
        }
        for x in v.iter_mut() {
            *x = x.clone() * factor.clone();
        }
    }
}

/// Shorthand for an integer-valued scalar.
pub fn int<S: Scalar>(n: i64) -> S {
    S::from_i64(n).expect("every exact field contains the integers")
}

/// `n!` as a scalar.
pub fn factorial<S: Scalar>(n: u32) -> S {
    (1..=n as i64).fold(S::one(), |acc, i| acc * int::<S>(i))
}

/// Binomial coefficient `C(n, k)` as a scalar; zero when `k > n`.
pub fn binomial<S: Scalar>(n: u32, k: u32) -> S {
    if k > n {
        return S::zero();
    }
    let k = k.min(n - k);
    let mut acc = S::one();
    for i in 0..k {
        acc = acc * int::<S>((n - i) as i64) / int::<S>((i + 1) as i64);
    }
    acc
}

/// Returns `Some(n)` when `s` is a non-negative integer.
pub fn as_nonneg_integer<S: Scalar>(s: &S) -> Option<u32> {
    if s.is_negative() {
        return None;
    }
    let mut n = 0u32;
    let mut acc = S::zero();
    while &acc < s {
        acc = acc + S::one();
        n += 1;
    }
    (&acc == s).then_some(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn primitive_clears_denominators_and_sign() {
        let mut v = vec![q(0, 1), q(-1, 2), q(3, 4), q(0, 1)];
        BigRational::make_primitive(&mut v);
        assert_eq!(v, vec![q(0, 1), q(2, 1), q(-3, 1), q(0, 1)]);

        let mut w = vec![q(6, 1), q(9, 1)];
        BigRational::make_primitive(&mut w);
        assert_eq!(w, vec![q(2, 1), q(3, 1)]);

        let mut z = vec![q(0, 1); 3];
        BigRational::make_primitive(&mut z);
        assert!(z.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial::<BigRational>(5), q(120, 1));
        assert_eq!(binomial::<BigRational>(5, 2), q(10, 1));
        assert_eq!(binomial::<BigRational>(2, 5), q(0, 1));
        assert_eq!(as_nonneg_integer(&q(3, 1)), Some(3));
        assert_eq!(as_nonneg_integer(&q(5, 2)), None);
        assert_eq!(as_nonneg_integer(&q(-1, 1)), None);
    }
}
