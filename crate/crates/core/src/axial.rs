//! Axial seed calculus in the variables `(t, q)` with `q = r^2`.
//!
//! A pair `(a, b)` stands for `u = a(t, r^2)` and `v = r b(t, r^2)`, so the
//! operators `(1/r)∂_r` and `∂_r(·/r)` both act as `2∂_q`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::{Monomial, ScalarPoly};
use crate::scalar::{binomial, int, Scalar};

/// Variable index of `t` in axial polynomials.
pub const T: usize = 0;
/// Variable index of `q = r^2` in axial polynomials.
pub const Q: usize = 1;

type Bivariate<S> = ScalarPoly<S>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AxialPair<S: Scalar> {
    pub a: Bivariate<S>,
    pub b: Bivariate<S>,
}

impl<S: Scalar> AxialPair<S> {
    pub fn new(a: Bivariate<S>, b: Bivariate<S>) -> Self {
        assert_eq!(a.nvars(), 2, "axial polynomials have variables (t, q)");
        assert_eq!(b.nvars(), 2, "axial polynomials have variables (t, q)");
        AxialPair { a, b }
    }

    pub fn zero() -> Self {
        Self::new(ScalarPoly::zero(2), ScalarPoly::zero(2))
    }

    pub fn one() -> Self {
        Self::new(ScalarPoly::one(2), ScalarPoly::zero(2))
    }

    pub fn t() -> Bivariate<S> {
        ScalarPoly::var(2, T)
    }

    pub fn q() -> Bivariate<S> {
        ScalarPoly::var(2, Q)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `(a, 0)`.
    pub fn scalar_part(&self) -> Self {
        Self::new(self.a.clone(), ScalarPoly::zero(2))
    }

    /// `(0, b)`.
    pub fn vector_part(&self) -> Self {
        Self::new(ScalarPoly::zero(2), self.b.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.a.add(&other.a), self.b.add(&other.b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.a.sub(&other.a), self.b.sub(&other.b))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.a.scale(c), self.b.scale(c))
    }
}

impl<S: Scalar> fmt::Display for AxialPair<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["t", "q"];
        write!(f, "({}, {})", self.a.render(&names), self.b.render(&names))
    }
}

impl<S: Scalar> fmt::Debug for AxialPair<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The seed `z̄^j z^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexSeed {
    pub j: u32,
    pub k: u32,
}

impl ComplexSeed {
    pub fn new(j: u32, k: u32) -> Self {
        ComplexSeed { j, k }
    }

    /// Whether `∂_z̄ Δ_z^m` annihilates the seed: `j ≤ m` or `k < m`.
    pub fn in_kernel(&self, m: u32) -> bool {
        self.j <= m || self.k < m
    }
}

impl fmt::Display for ComplexSeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zbar^{}*z^{}", self.j, self.k)
    }
}

impl FromStr for ComplexSeed {
    type Err = Error;

    /// Accepts `zbar^j*z^k`; either factor may be omitted and `^1` may be
    /// dropped. `1` is the constant seed.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("seed `{s}`: {msg}"),
        };
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (mut j, mut k) = (None, None);
        if text != "1" {
            for factor in text.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (
                        b,
                        e.parse::<u32>()
                            .map_err(|_| bad("exponent must be a non-negative integer"))?,
                    ),
                    None => (factor, 1),
                };
                let slot = match base {
                    "zbar" => &mut j,
                    "z" => &mut k,
                    _ => return Err(bad("expected factors zbar^j and z^k")),
                };
                if slot.replace(exp).is_some() {
                    return Err(bad("repeated factor"));
                }
            }
        }
        Ok(ComplexSeed::new(j.unwrap_or(0), k.unwrap_or(0)))
    }
}

/// Rewrites `u(t,s) + i v(t,s)` as an axial pair; `u` must be even and `v`
/// odd in `s`.
pub fn from_ts_parts<S: Scalar>(u: &Bivariate<S>, v: &Bivariate<S>) -> Result<AxialPair<S>> {
    let fold = |p: &Bivariate<S>, odd: bool, which: &str| -> Result<Bivariate<S>> {
        let mut out = ScalarPoly::zero(2);
        for (m, c) in p.terms() {
            let e = m.exponent(1);
            if (e % 2 == 1) != odd {
                return Err(Error::ParityViolation {
                    mu: format!("{which} has s-exponent {e}"),
                });
            }
            let mono = Monomial::new(&[m.exponent(0), e / 2]);
            out = out.add(&ScalarPoly::monomial(mono, c.clone()));
        }
        Ok(out)
    };
    Ok(AxialPair::new(fold(u, false, "u")?, fold(v, true, "v")?))
}

/// `(a(t, s^2), s b(t, s^2))`, inverse of [`from_ts_parts`].
pub fn to_ts_parts<S: Scalar>(x: &AxialPair<S>) -> (Bivariate<S>, Bivariate<S>) {
    let unfold = |p: &Bivariate<S>, odd: bool| {
        let mut out = ScalarPoly::zero(2);
        for (m, c) in p.terms() {
            let e = 2 * m.exponent(1) + u16::from(odd);
            out = out.add(&ScalarPoly::monomial(Monomial::new(&[m.exponent(0), e]), c.clone()));
        }
        out
    };
    (unfold(&x.a, false), unfold(&x.b, true))
}

/// `z̄^j z^k` in axial form.
pub fn seed_to_axial<S: Scalar>(seed: ComplexSeed) -> Result<AxialPair<S>> {
    let t: Bivariate<S> = ScalarPoly::var(2, 0);
    let s: Bivariate<S> = ScalarPoly::var(2, 1);
    let mut re = ScalarPoly::one(2);
    let mut im = ScalarPoly::zero(2);
    let mut mul = |sign: S| {
        let (r, i) = (re.clone(), im.clone());
        let s_signed = s.scale(&sign);
        re = r.mul(&t).sub(&i.mul(&s_signed));
        im = r.mul(&s_signed).add(&i.mul(&t));
    };
    for _ in 0..seed.j {
        mul(-S::one());
    }
    for _ in 0..seed.k {
        mul(S::one());
    }
    from_ts_parts(&re, &im)
}

/// `(a1 a2 − q b1 b2, a1 b2 + b1 a2)`, complex multiplication with `x̲ ↔ i r`.
pub fn axial_mul<S: Scalar>(x: &AxialPair<S>, y: &AxialPair<S>) -> AxialPair<S> {
    let q = AxialPair::<S>::q();
    AxialPair::new(
        x.a.mul(&y.a).sub(&q.mul(&x.b.mul(&y.b))),
        x.a.mul(&y.b).add(&x.b.mul(&y.a)),
    )
}

/// `∂_r` on an even function `a(t, r^2)`, as the `b` of an odd function.
pub fn dr_even<S: Scalar>(a: &Bivariate<S>) -> Bivariate<S> {
    a.derivative(Q).scale(&int(2))
}

/// `∂_r` on an odd function `r b(t, r^2)`, as the `a` of an even function.
pub fn dr_odd<S: Scalar>(b: &Bivariate<S>) -> Bivariate<S> {
    b.add(&AxialPair::<S>::q().mul(&b.derivative(Q)).scale(&int(2)))
}

/// `∂_z̄ = ½(∂_t + i ∂_s)`.
pub fn dbar<S: Scalar>(x: &AxialPair<S>) -> AxialPair<S> {
    let half = S::one() / int::<S>(2);
    AxialPair::new(
        x.a.derivative(T).sub(&dr_odd(&x.b)).scale(&half),
        x.b.derivative(T).add(&dr_even(&x.a)).scale(&half),
    )
}

/// `Δ_z = ∂_t^2 + ∂_s^2`.
pub fn delta_z<S: Scalar>(x: &AxialPair<S>) -> AxialPair<S> {
    let q = AxialPair::<S>::q();
    let lap = |p: &Bivariate<S>, c: i64| {
        let pq = p.derivative(Q);
        p.derivative(T)
            .derivative(T)
            .add(&pq.scale(&int(c)))
            .add(&q.mul(&pq.derivative(Q)).scale(&int(4)))
    };
    AxialPair::new(lap(&x.a, 2), lap(&x.b, 6))
}

fn two_dq_pow<S: Scalar>(m: u32, p: &Bivariate<S>) -> Bivariate<S> {
    let mut out = p.clone();
    for _ in 0..m {
        if out.is_zero() {
            break;
        }
        out = out.derivative(Q).scale(&int(2));
    }
    out
}

/// `D_r(m) = ((1/r)∂_r)^m` on the even part.
pub fn d_lower<S: Scalar>(m: u32, a: &Bivariate<S>) -> Bivariate<S> {
    two_dq_pow(m, a)
}

/// `D^r(m)` on the odd part `r b`, returned as the new `b`.
pub fn d_upper<S: Scalar>(m: u32, b: &Bivariate<S>) -> Bivariate<S> {
    two_dq_pow(m, b)
}

/// `d_{n,μ}(j) = Π_{i=1}^j (2n + μ − (2i − 1))`.
pub fn d_coeff<S: Scalar>(n: u32, mu: &S, j: u32) -> S {
    let base = int::<S>(2 * i64::from(n)) + mu.clone();
    (1..=j).fold(S::one(), |acc, i| acc * (base.clone() - int::<S>(2 * i64::from(i) - 1)))
}

pub fn delta_z_pow<S: Scalar>(m: u32, x: &AxialPair<S>) -> AxialPair<S> {
    let mut out = x.clone();
    for _ in 0..m {
        out = delta_z(&out);
    }
    out
}

/// `Σ_j d_{n,μ}(j) C(m,j) D(j){Δ_z^{m−j} x}`, with `D_r` on `a` and `D^r`
/// on `b`.
pub fn laplacian_power_closed_form<S: Scalar>(m: u32, n: u32, mu: &S, x: &AxialPair<S>) -> AxialPair<S> {
    let mut out = AxialPair::zero();
    let mut lap = x.clone();
    let mut powers = vec![x.clone()];
    for _ in 0..m {
        lap = delta_z(&lap);
        powers.push(lap.clone());
    }
    for j in 0..=m {
        let coeff = d_coeff(n, mu, j) * binomial::<S>(m, j);
        if coeff.is_zero() {
            continue;
        }
        let base = &powers[(m - j) as usize];
        let term = AxialPair::new(d_lower(j, &base.a), d_upper(j, &base.b));
        out = out.add(&term.scale(&coeff));
    }
    out
}

/// Residuals of `a_t − (c+1) b − 2q b_q` and `b_t + 2 a_q`.
pub fn vekua_residuals<S: Scalar>(x: &AxialPair<S>, c: &S) -> (Bivariate<S>, Bivariate<S>) {
    let first =
        x.a.derivative(T)
            .sub(&x.b.scale(&(c.clone() + S::one())))
            .sub(&AxialPair::<S>::q().mul(&x.b.derivative(Q)).scale(&int(2)));
    let second = x.b.derivative(T).add(&dr_even(&x.a));
    (first, second)
}

pub fn vekua_check<S: Scalar>(x: &AxialPair<S>, c: &S) -> (bool, AxialPair<S>) {
    let (r1, r2) = vekua_residuals(x, c);
    let pair = AxialPair::new(r1, r2);
    (pair.is_zero(), pair)
}

/// `∂_z̄^k x = 0`.
pub fn polyanalytic_order_check<S: Scalar>(k: u32, x: &AxialPair<S>) -> bool {
    let mut y = x.clone();
    for _ in 0..k {
        if y.is_zero() {
            return true;
        }
        y = dbar(&y);
    }
    y.is_zero()
}

/// `∂_z̄ Δ_z^m x = 0`.
pub fn seed_kernel_check<S: Scalar>(m: u32, x: &AxialPair<S>) -> bool {
    dbar(&delta_z_pow(m, x)).is_zero()
}
