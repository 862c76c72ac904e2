use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{int, Scalar};

/// Dense exponent vector `x_0^{e_0} … x_{n-1}^{e_{n-1}}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn new(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The single variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn with_exponent(&self, i: usize, e: u16) -> Self {
        let mut m = self.clone();
        m.0[i] = e;
        m
    }

    /// Ordering used for printing: ascending total degree, then variables
    /// with smaller index first (`x0` before `x1`).
    pub fn graded_cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Writes `x0^2*x1` (nothing for the unit monomial). Returns whether
/// anything was written.
pub(crate) fn write_monomial(f: &mut impl fmt::Write, m: &Monomial, names: &[&str]) -> Result2<bool> {
    let mut wrote = false;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if wrote {
            f.write_str("*")?;
        }
        f.write_str(names[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        wrote = true;
    }
    Ok(wrote)
}

type Result2<T> = std::result::Result<T, fmt::Error>;

/// A polynomial with exact scalar coefficients in a fixed number of
/// variables. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScalarPoly<S> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> ScalarPoly<S> {
    pub fn zero(nvars: usize) -> Self {
        ScalarPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), S::one())
    }

    pub fn monomial(m: Monomial, c: S) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has wrong number of variables");
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[S]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest exponent of variable `i`; `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u16> {
        self.terms.keys().map(|m| m.exponent(i)).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|c| -c.clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        self.map_coefficients(|c| c.clone() * s.clone())
    }

    fn map_coefficients(&self, f: impl Fn(&S) -> S) -> Self {
        ScalarPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        assert!(i < self.nvars, "variable {i} out of range");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e > 0 {
                out.add_term(m.with_exponent(i, e - 1), c.clone() * int::<S>(e as i64));
            }
        }
        out
    }

    /// Applies `Σ_{i ∈ vars} x_i ∂_i`: each term is scaled by its degree in
    /// those variables.
    pub fn euler(&self, vars: std::ops::Range<usize>) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let w: i64 = vars.clone().map(|i| m.exponent(i) as i64).sum();
            out.add_term(m.clone(), c.clone() * int::<S>(w));
        }
        out
    }

    /// Multiplies by the monomial `m`.
    pub fn shift(&self, m: &Monomial) -> Self {
        ScalarPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    /// `p(M x)`: variable `x_i` is replaced by `Σ_j M_ij x_j`.
    pub fn substitute_linear(&self, m: &Matrix<S>) -> Self {
        assert!(
            m.rows() == self.nvars && m.cols() == self.nvars,
            "substitution matrix has wrong shape"
        );
        if let Some(perm) = m.as_signed_permutation() {
            return self.substitute_signed_permutation(&perm);
        }
        self.substitute_general(m)
    }

    fn substitute_signed_permutation(&self, perm: &[(usize, bool)]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (mono, c) in &self.terms {
            let mut exps: SmallVec<[u16; 8]> = SmallVec::from_elem(0, self.nvars);
            let mut negate = false;
            for (i, &(j, neg)) in perm.iter().enumerate() {
                let e = mono.exponent(i);
                exps[j] += e;
                negate ^= neg && e % 2 == 1;
            }
            out.add_term(Monomial(exps), if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Generic path; kept reachable for tests comparing it with the fast path.
    pub(crate) fn substitute_general(&self, m: &Matrix<S>) -> Self {
        let n = self.nvars;
        let images: Vec<Self> = (0..n).map(|i| Self::linear(m.row(i))).collect();
        let mut powers: Vec<Vec<Self>> = images.iter().map(|p| vec![Self::one(n), p.clone()]).collect();
        let mut out = Self::zero(n);
        for (mono, c) in &self.terms {
            let mut acc = Self::constant(n, c.clone());
            for (i, &e) in mono.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    acc = acc.mul(&powers[i][e as usize]);
                }
            }
            out = out.add(&acc);
        }
        out
    }

    /// Exact quotient by the linear form `⟨α, x⟩`.
    ///
    /// Terms are reduced against `α_l x_l`, where `l` is the first index with
    /// `α_l ≠ 0`, working down from the highest power of `x_l`. Anything free
    /// of `x_l` that survives is a remainder and makes the division fail.
    pub fn divide_by_linear(&self, alpha: &[S]) -> Result<Self> {
        if alpha.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                left: alpha.len(),
                right: self.nvars,
            });
        }
        let Some(lead) = alpha.iter().position(|a| !a.is_zero()) else {
            return Err(Error::ZeroLinearForm);
        };
        let lead_coeff = alpha[lead].clone();
        let max_e = self.degree_in(lead).unwrap_or(0);
        // layers[e] = terms whose x_l exponent is e
        let mut layers: Vec<BTreeMap<Monomial, S>> = vec![BTreeMap::new(); max_e as usize + 1];
        for (m, c) in &self.terms {
            layers[m.exponent(lead) as usize].insert(m.clone(), c.clone());
        }
        let mut quotient = Self::zero(self.nvars);
        for e in (1..=max_e as usize).rev() {
            let layer = std::mem::take(&mut layers[e]);
            for (m, c) in layer {
                if c.is_zero() {
                    continue;
                }
                let qm = m.with_exponent(lead, e as u16 - 1);
                let qc = c / lead_coeff.clone();
                // subtract qc * qm * (Σ_{j≠l} α_j x_j); those land in layer e-1
                for (j, a) in alpha.iter().enumerate() {
                    if j == lead || a.is_zero() {
                        continue;
                    }
                    let mut target = qm.clone();
                    target.0[j] += 1;
                    let entry = layers[e - 1].entry(target).or_insert_with(S::zero);
                    *entry = entry.clone() - qc.clone() * a.clone();
                }
                quotient.add_term(qm, qc);
            }
        }
        if layers[0].values().any(|c| !c.is_zero()) {
            return Err(Error::NonDivisible {
                form: ScalarPoly::linear(alpha).to_string(),
            });
        }
        Ok(quotient)
    }

    pub fn evaluate(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.nvars, "point has wrong dimension");
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v = v * x.clone();
                }
            }
            acc = acc + v;
        }
        acc
    }

    /// Substitutes the value `v` for variable `i` (the variable stays in the
    /// ring with exponent zero).
    pub fn substitute_value(&self, i: usize, v: &S) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            let mut w = c.clone();
            for _ in 0..e {
                w = w * v.clone();
            }
            out.add_term(m.with_exponent(i, 0), w);
        }
        out
    }

    /// Terms of total degree exactly `n`.
    pub fn homogeneous_part(&self, n: u32) -> Self {
        ScalarPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of(&self, n: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == n)
    }

    /// Re-embeds into a ring with `nvars` variables: variable `i` maps to
    /// `map[i]`.
    pub fn remap_variables(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut exps: SmallVec<[u16; 8]> = SmallVec::from_elem(0, nvars);
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[map[i]] += e;
            }
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Renders with explicit variable names, terms in graded order.
    pub fn render(&self, names: &[&str]) -> String {
        let mut s = String::new();
        self.write_with(&mut s, names, true, None).expect("writing to a String");
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Writes `c*x0^2*x1[*suffix]` terms; `first` controls the leading
    /// separator. Returns whether anything was written.
    pub(crate) fn write_with(
        &self,
        f: &mut impl fmt::Write,
        names: &[&str],
        first: bool,
        suffix: Option<&str>,
    ) -> Result2<bool> {
        let mut ordered: Vec<(&Monomial, &S)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| a.0.graded_cmp(b.0));
        let mut first = first;
        for (m, c) in ordered {
            crate::clifford::write_signed(f, first, c)?;
            first = false;
            let mut body = String::new();
            write_monomial(&mut body, m, names)?;
            if !body.is_empty() {
                write!(f, "*{body}")?;
            }
            if let Some(sfx) = suffix {
                write!(f, "*{sfx}")?;
            }
        }
        Ok(!first)
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

impl<S: Scalar> fmt::Display for ScalarPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.render(&refs))
    }
}

impl<S: Scalar> fmt::Debug for ScalarPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
