//! The universal Clifford algebra `R_{0,d}`: basis blades, the geometric
//! product, conjugation and the scalar part.
//!
//! Generators satisfy `e_i e_j + e_j e_i = -2 δ_ij`, so every `e_i` squares
//! to `-1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest supported number of generators. The text grammar names blades
/// with single digits (`e12` is `e_1 e_2`), which caps `d` at 9.
pub const MAX_DIMENSION: usize = 9;

/// A basis blade `e_A`, stored as a bit set with bit `i-1` standing for `e_i`.
///
/// Blades order by grade first and then lexicographically by index list,
/// which is also the order in which they are printed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    /// The unit `e_0 = 1`.
    pub const SCALAR: Blade = Blade(0);

    /// Blade from a strictly increasing list of indices in `1..=MAX_DIMENSION`.
    pub fn new(indices: &[usize]) -> Option<Blade> {
        let mut bits = 0u32;
        let mut last = 0usize;
        for &i in indices {
            if i <= last || i > MAX_DIMENSION {
                return None;
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Some(Blade(bits))
    }

    /// The generator `e_i`, `1 <= i <= MAX_DIMENSION`.
    pub fn generator(i: usize) -> Blade {
        assert!((1..=MAX_DIMENSION).contains(&i), "generator index {i} out of range");
        Blade(1 << (i - 1))
    }

    pub fn from_bits(bits: u32) -> Blade {
        Blade(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    /// Indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |b| self.0 & (1 << b) != 0).map(|b| b + 1)
    }

    /// Largest index, 0 for the scalar blade.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// All `2^d` blades of `R_{0,d}` in canonical order.
    pub fn all(d: usize) -> Vec<Blade> {
        let mut out: Vec<Blade> = (0..1u32 << d).map(Blade).collect();
        out.sort();
        out
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Product of two basis blades: `e_A e_B = sign * e_{A Δ B}`.
///
/// The sign counts the transpositions needed to merge the index sequences
/// (each index of `B` moves left past every larger index of `A`) plus one
/// flip per shared index, since `e_i^2 = -1`.
pub fn blade_product(a: Blade, b: Blade) -> (i8, Blade) {
    let mut swaps = 0u32;
    for j in b.indices() {
        // indices of `a` strictly greater than j
        swaps += (a.0 >> j).count_ones();
    }
    swaps += (a.0 & b.0).count_ones();
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}

/// Sign of the conjugation `x ↦ x̄` on a blade of grade `g`: `(-1)^{g(g+1)/2}`.
pub fn conjugation_sign(b: Blade) -> i8 {
    let g = b.grade();
    if (g * (g + 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// An element of `R_{0,d}` with exact coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multivector<S> {
    dim: usize,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIMENSION, "dimension {dim} exceeds {MAX_DIMENSION}");
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, value: S) -> Self {
        Self::blade(dim, Blade::SCALAR, value)
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    /// `value * e_A`. Panics if the blade does not fit in dimension `dim`.
    pub fn blade(dim: usize, blade: Blade, value: S) -> Self {
        let mut out = Self::zero(dim);
        assert!(blade.max_index() <= dim, "blade {blade} outside R_(0,{dim})");
        if !value.is_zero() {
            out.terms.insert(blade, value);
        }
        out
    }

    /// Grade-1 element `Σ v_i e_i` from `v = (v_1, …, v_d)`.
    pub fn vector(dim: usize, coords: &[S]) -> Self {
        assert_eq!(coords.len(), dim);
        let mut out = Self::zero(dim);
        for (i, c) in coords.iter().enumerate() {
            out.add_term(Blade::generator(i + 1), c.clone());
        }
        out
    }

    /// Builds a multivector from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Blade, S)>) -> Self {
        let mut out = Self::zero(dim);
        for (b, c) in terms {
            assert!(b.max_index() <= dim, "blade {b} outside R_(0,{dim})");
            out.add_term(b, c);
        }
        out
    }

    fn add_term(&mut self, blade: Blade, value: S) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coefficient(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    /// `sc[x]`, the coefficient of the unit blade.
    pub fn scalar_part(&self) -> S {
        self.coefficient(Blade::SCALAR)
    }

    pub fn max_grade(&self) -> Option<u32> {
        self.terms.keys().map(|b| b.grade()).max()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim);
        }
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, c.clone() * s.clone())).collect(),
        }
    }

    /// Bilinear extension of [`blade_product`].
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (sign, c) = blade_product(*a, *b);
                let v = x.clone() * y.clone();
                out.add_term(c, if sign > 0 { v } else { -v });
            }
        }
        Ok(out)
    }

    /// The anti-involution with `ē_i = -e_i` and `\overline{xy} = ȳ x̄`.
    pub fn conjugate(&self) -> Self {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| {
                    (
                        *b,
                        if conjugation_sign(*b) > 0 {
                            c.clone()
                        } else {
                            -c.clone()
                        },
                    )
                })
                .collect(),
        }
    }

    /// Inverse of a nonzero paravector `x_0 + x̲`, namely `x̄ / |x|^2`.
    pub fn invert_paravector(&self) -> Result<Self> {
        if self.max_grade().is_some_and(|g| g > 1) {
            return Err(Error::NotParavector);
        }
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let norm_sq = self
            .terms
            .values()
            .fold(S::zero(), |acc, c| acc + c.clone() * c.clone());
        Ok(self.conjugate().scale(&(S::one() / norm_sq)))
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        self.try_add(rhs).expect("multivector dimensions must agree")
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        self.try_add(&-rhs).expect("multivector dimensions must agree")
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, -c.clone())).collect(),
        }
    }
}

impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        self.geometric_product(rhs).expect("multivector dimensions must agree")
    }
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector<{}>({})", self.dim, self)
    }
}

/// Renders `3/2 + 1*e1 - 2*e12`: grade order, explicit coefficients.
impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (b, c)) in self.terms.iter().enumerate() {
            write_signed(f, n == 0, c)?;
            if !b.is_scalar() {
                write!(f, "*{b}")?;
            }
        }
        Ok(())
    }
}

/// Writes the coefficient with a leading ` + ` / ` - ` separator (or a bare
/// `-` on the first term).
pub(crate) fn write_signed<S: Scalar>(f: &mut impl fmt::Write, first: bool, c: &S) -> fmt::Result {
    match (first, c.is_negative()) {
        (true, false) => write!(f, "{c}"),
        (true, true) => write!(f, "-{}", c.abs()),
        (false, false) => write!(f, " + {c}"),
        (false, true) => write!(f, " - {}", c.abs()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;
    type Mv = Multivector<Q>;

    fn q(n: i64, d: i64) -> Q {
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    fn e(dim: usize, idx: &[usize]) -> Mv {
        Mv::blade(dim, Blade::new(idx).unwrap(), q(1, 1))
    }

    #[test]
    fn blade_product_examples() {
        let b = |v: &[usize]| Blade::new(v).unwrap();
        assert_eq!(blade_product(b(&[1]), b(&[1])), (-1, b(&[])));
        assert_eq!(blade_product(b(&[1]), b(&[2])), (1, b(&[1, 2])));
        // e2 e1 e2 = -e1 e2 e2 = e1
        assert_eq!(blade_product(b(&[2]), b(&[1, 2])), (1, b(&[1])));
        assert_eq!(blade_product(b(&[2]), b(&[1])), (-1, b(&[1, 2])));
        // e12 e12 = e1 e2 e1 e2 = -e1 e1 e2 e2 = -1
        assert_eq!(blade_product(b(&[1, 2]), b(&[1, 2])), (-1, b(&[])));
    }

    #[test]
    fn blade_order_is_grade_then_lex() {
        let mut v = Blade::all(3);
        v.sort();
        let shown: Vec<String> = v.iter().map(|b| b.to_string()).collect();
        assert_eq!(shown, ["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"]);
        assert!(Blade::new(&[2, 1]).is_none());
        assert!(Blade::new(&[0]).is_none());
    }

    #[test]
    fn product_examples() {
        let one = Mv::one(2);
        let e1 = e(2, &[1]);
        assert_eq!(&e1 * &e1, Mv::scalar(2, q(-1, 1)));
        assert_eq!(&(&one + &e1) * &(&one - &e1), Mv::scalar(2, q(2, 1)));
        let x = &Mv::scalar(2, q(3, 2)) + &e(2, &[1, 2]);
        assert_eq!(&x * &one, x);
        assert!(Mv::one(2).geometric_product(&Mv::one(3)).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(e(2, &[1]).conjugate(), -&e(2, &[1]));
        assert_eq!(e(2, &[1, 2]).conjugate(), -&e(2, &[1, 2]));
        assert_eq!(Mv::scalar(2, q(5, 1)).conjugate(), Mv::scalar(2, q(5, 1)));
        assert_eq!(e(3, &[1, 2, 3]).conjugate(), e(3, &[1, 2, 3]));
    }

    #[test]
    fn scalar_part_examples() {
        let x = &Mv::one(2) + &e(2, &[1]).scale(&q(2, 1));
        assert_eq!(x.scalar_part(), q(1, 1));
        assert_eq!(e(2, &[1, 2]).scalar_part(), q(0, 1));
        assert_eq!((&e(2, &[1]) * &e(2, &[1])).scalar_part(), q(-1, 1));
    }

    #[test]
    fn paravector_inverse() {
        let e1 = e(2, &[1]);
        assert_eq!(e1.invert_paravector().unwrap(), -&e1);
        assert_eq!(
            Mv::scalar(2, q(3, 1)).invert_paravector().unwrap(),
            Mv::scalar(2, q(1, 3))
        );
        let x = &Mv::one(2) + &e1;
        let inv = x.invert_paravector().unwrap();
        assert_eq!(inv, (&Mv::one(2) - &e1).scale(&q(1, 2)));
        assert_eq!(&x * &inv, Mv::one(2));
        assert_eq!(e(2, &[1, 2]).invert_paravector(), Err(Error::NotParavector));
        assert_eq!(Mv::zero(2).invert_paravector(), Err(Error::ZeroVector));
    }

    #[test]
    fn display_format() {
        let x = Mv::from_terms(
            2,
            [
                (Blade::new(&[1, 2]).unwrap(), q(-2, 1)),
                (Blade::SCALAR, q(3, 2)),
                (Blade::generator(1), q(1, 1)),
            ],
        );
        assert_eq!(x.to_string(), "3/2 + 1*e1 - 2*e12");
        assert_eq!(Mv::zero(3).to_string(), "0");
        assert_eq!((-&e(2, &[2])).to_string(), "-1*e2");
    }

    fn arb_mv(dim: usize) -> impl Strategy<Value = Mv> {
        prop::collection::vec((0u32..(1 << dim), -4i64..5, 1i64..4), 0..6)
            .prop_map(move |ts| Mv::from_terms(dim, ts.into_iter().map(|(b, n, d)| (Blade::from_bits(b), q(n, d)))))
    }

    fn arb_vec(dim: usize) -> impl Strategy<Value = (Vec<Q>, Mv)> {
        prop::collection::vec((-4i64..5, 1i64..4), dim).prop_map(move |cs| {
            let v: Vec<Q> = cs.into_iter().map(|(n, d)| q(n, d)).collect();
            let mv = Mv::vector(dim, &v);
            (v, mv)
        })
    }

    proptest! {
        #[test]
        fn associative(x in arb_mv(4), y in arb_mv(4), z in arb_mv(4)) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn conjugation_reverses_products(x in arb_mv(4), y in arb_mv(4)) {
            prop_assert_eq!((&x * &y).conjugate(), &y.conjugate() * &x.conjugate());
        }

        #[test]
        fn vectors_square_to_minus_norm((v, mv) in arb_vec(4)) {
            let norm: Q = v.iter().map(|c| c * c).sum();
            prop_assert_eq!(&mv * &mv, Mv::scalar(4, -norm));
        }

        #[test]
        fn paravector_inverse_is_two_sided(s in (-4i64..5, 1i64..4), (_, v) in arb_vec(3)) {
            let x = &Mv::scalar(3, q(s.0, s.1)) + &v;
            prop_assume!(!x.is_zero());
            let inv = x.invert_paravector().unwrap();
            prop_assert_eq!(&inv * &x, Mv::one(3));
            prop_assert_eq!(&x * &inv, Mv::one(3));
        }
    }
}
