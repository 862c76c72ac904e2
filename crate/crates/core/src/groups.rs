//! Root systems with rational coordinates, the reflection groups they
//! generate, and multiplicity functions.
//!
//! Roots live in `R^{d+1}` with coordinate 0 forced to zero, so every
//! reflection fixes the `x_0` axis.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalar::{int, Scalar};

/// Generated groups larger than this are refused.
pub const MAX_GROUP_ORDER: usize = 50_000;

/// A nonzero vector `(0, α_1, …, α_d)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root<S>(Vec<S>);

impl<S: Scalar> Root<S> {
    /// Builds a root from all `d+1` coordinates.
    pub fn new(coords: Vec<S>) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroRoot);
        }
        if !coords[0].is_zero() {
            return Err(Error::RootMovesAxis(fmt_vec(&coords)));
        }
        Ok(Root(coords))
    }

    /// Builds a root from its spatial part `(α_1, …, α_d)`.
    pub fn spatial(coords: &[S]) -> Result<Self> {
        let mut v = Vec::with_capacity(coords.len() + 1);
        v.push(S::zero());
        v.extend_from_slice(coords);
        Self::new(v)
    }

    pub fn coords(&self) -> &[S] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn norm_squared(&self) -> S {
        self.0.iter().fold(S::zero(), |acc, c| acc + c.clone() * c.clone())
    }

    pub fn neg(&self) -> Self {
        Root(self.0.iter().map(|c| -c.clone()).collect())
    }

    /// First nonzero coordinate is positive; this fixes the positive
    /// subsystem.
    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_positive())
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        let n = self.0.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| self.0[i].clone() * other.0[j].clone() == self.0[j].clone() * other.0[i].clone())
        })
    }

    fn transform(&self, m: &Matrix<S>) -> Self {
        Root(m.mul_vec(&self.0))
    }
}

impl<S: fmt::Display> fmt::Debug for Root<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_vec(&self.0))
    }
}

fn fmt_vec<S: fmt::Display>(v: &[S]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `σ_α = I − 2 α αᵀ / |α|^2` on `R^{d+1}`.
pub fn reflection_matrix<S: Scalar>(alpha: &[S]) -> Result<Matrix<S>> {
    let norm = alpha.iter().fold(S::zero(), |acc, c| acc + c.clone() * c.clone());
    if norm.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let n = alpha.len();
    let two = int::<S>(2);
    let mut m: Matrix<S> = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j).clone() - two.clone() * alpha[i].clone() * alpha[j].clone() / norm.clone();
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// `κ`, stored for every root of `R` (not just the positive ones).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityFunction<S: Scalar> {
    values: BTreeMap<Root<S>, S>,
}

impl<S: Scalar> MultiplicityFunction<S> {
    pub fn get(&self, root: &Root<S>) -> Option<&S> {
        self.values.get(root)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Root<S>, &S)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|k| k.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot<S: Scalar> {
    pub root: Root<S>,
    pub kappa: S,
    pub reflection: Matrix<S>,
}

/// The built-in families. All have rational root coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    /// `A_1 × … × A_1`: roots `±e_i`, one multiplicity per axis.
    A1,
    /// Symmetric group acting by coordinate permutations: roots `±(e_i − e_j)`.
    Sd,
    /// Hyperoctahedral group: short roots `±e_i`, long roots `±e_i ± e_j`.
    /// Multiplicities are given as `(short, long)`.
    Bd,
    /// `B_d` at `d = 2`, the rational realization of the dihedral group of
    /// order 8.
    B2Planar,
}

impl GroupKind {
    pub fn tag(self) -> &'static str {
        match self {
            GroupKind::A1 => "a1",
            GroupKind::Sd => "sd",
            GroupKind::Bd => "bd",
            GroupKind::B2Planar => "b2",
        }
    }

    /// Number of `W`-orbits on the roots, i.e. free multiplicity values.
    pub fn orbit_count(self, dim: usize) -> usize {
        match self {
            GroupKind::A1 => dim,
            GroupKind::Sd => 1,
            GroupKind::Bd | GroupKind::B2Planar => 2,
        }
    }

    pub fn all() -> [GroupKind; 4] {
        [GroupKind::A1, GroupKind::Sd, GroupKind::Bd, GroupKind::B2Planar]
    }
}

impl FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a1" | "a1^d" => Ok(GroupKind::A1),
            "sd" | "s_d" => Ok(GroupKind::Sd),
            "bd" | "b_d" => Ok(GroupKind::Bd),
            "b2" | "b2-planar" | "b_2-planar" => Ok(GroupKind::B2Planar),
            other => Err(Error::UnknownGroup(other.to_string())),
        }
    }
}

/// A finite reflection group `W` together with its root system `R`, the
/// positive subsystem `R_+` and a multiplicity function `κ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionGroup<S: Scalar> {
    name: String,
    dim: usize,
    roots: Vec<Root<S>>,
    kappa: MultiplicityFunction<S>,
    positive: Vec<PositiveRoot<S>>,
    elements: Vec<Matrix<S>>,
}

impl<S: Scalar> ReflectionGroup<S> {
    /// Builds a group from a full root list `R` with a multiplicity per root.
    ///
    /// Root-system axioms and `W`-invariance of `κ` are not enforced here;
    /// [`ReflectionGroup::validate`] reports on them.
    pub fn from_roots(name: impl Into<String>, dim: usize, roots: Vec<(Vec<S>, S)>) -> Result<Self> {
        let mut root_list = Vec::new();
        let mut values = BTreeMap::new();
        for (coords, k) in roots {
            if coords.len() != dim + 1 {
                return Err(Error::DimensionMismatch {
                    left: coords.len(),
                    right: dim + 1,
                });
            }
            if k.is_negative() {
                return Err(Error::NegativeKappa(k.to_string()));
            }
            let root = Root::new(coords)?;
            if values.insert(root.clone(), k).is_none() {
                root_list.push(root);
            }
        }
        let mut positive = Vec::new();
        let mut seen = BTreeSet::new();
        for root in root_list.iter() {
            let pos = if root.is_positive() { root.clone() } else { root.neg() };
            if !seen.insert(pos.clone()) {
                continue;
            }
            // κ(α) for the positive representative; fall back to the stored
            // root when −α is missing from R.
            let kappa = values
                .get(&pos)
                .or_else(|| values.get(root))
                .cloned()
                .unwrap_or_else(S::zero);
            let reflection = reflection_matrix(pos.coords())?;
            positive.push(PositiveRoot {
                root: pos,
                kappa,
                reflection,
            });
        }
        let elements = generate_group(dim + 1, positive.iter().map(|p| &p.reflection))?;
        Ok(ReflectionGroup {
            name: name.into(),
            dim,
            roots: root_list,
            kappa: MultiplicityFunction { values },
            positive,
            elements,
        })
    }

    /// One of the built-in families; `kappa` lists one value per orbit.
    pub fn builtin(kind: GroupKind, dim: usize, kappa: &[S]) -> Result<Self> {
        if dim == 0 || dim > crate::clifford::MAX_DIMENSION {
            return Err(Error::UnknownGroup(format!("{}:d={dim}", kind.tag())));
        }
        if kind == GroupKind::B2Planar && dim != 2 {
            return Err(Error::UnknownGroup(format!("b2 requires d=2, got d={dim}")));
        }
        let expected = kind.orbit_count(dim);
        if kappa.len() != expected {
            return Err(Error::BadKappaArity {
                group: kind.tag().to_string(),
                expected,
                got: kappa.len(),
            });
        }
        if let Some(k) = kappa.iter().find(|k| k.is_negative()) {
            return Err(Error::NegativeKappa(k.to_string()));
        }
        let unit = |i: usize, s: i64| -> Vec<S> {
            let mut v = vec![S::zero(); dim + 1];
            v[i] = int(s);
            v
        };
        let combo = |i: usize, si: i64, j: usize, sj: i64| -> Vec<S> {
            let mut v = unit(i, si);
            v[j] = int(sj);
            v
        };
        let mut roots = Vec::new();
        match kind {
            GroupKind::A1 => {
                for i in 1..=dim {
                    roots.push((unit(i, 1), kappa[i - 1].clone()));
                    roots.push((unit(i, -1), kappa[i - 1].clone()));
                }
            }
            GroupKind::Sd => {
                for i in 1..=dim {
                    for j in i + 1..=dim {
                        roots.push((combo(i, 1, j, -1), kappa[0].clone()));
                        roots.push((combo(i, -1, j, 1), kappa[0].clone()));
                    }
                }
            }
            GroupKind::Bd | GroupKind::B2Planar => {
                for i in 1..=dim {
                    roots.push((unit(i, 1), kappa[0].clone()));
                    roots.push((unit(i, -1), kappa[0].clone()));
                }
                for i in 1..=dim {
                    for j in i + 1..=dim {
                        for (si, sj) in [(1, -1), (1, 1), (-1, 1), (-1, -1)] {
                            roots.push((combo(i, si, j, sj), kappa[1].clone()));
                        }
                    }
                }
            }
        }
        let kappa_text: Vec<String> = kappa.iter().map(|k| k.to_string()).collect();
        let name = match kind {
            GroupKind::B2Planar => format!("b2:kappa={}", kappa_text.join(",")),
            _ => format!("{}:d={dim}:kappa={}", kind.tag(), kappa_text.join(",")),
        };
        Self::from_roots(name, dim, roots)
    }

    /// The group with every multiplicity set to zero (classical analysis).
    pub fn classical(dim: usize) -> Result<Self> {
        Self::builtin(GroupKind::A1, dim, &vec![S::zero(); dim])
    }

    /// Parses `a1:d=2:kappa=1/2,1`, `sd:d=3:kappa=1`, `bd:d=2:kappa=1,1/2`
    /// or `b2:kappa=1,1/2`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let mut parts = spec.trim().split(':');
        let kind: GroupKind = parts.next().unwrap_or_default().parse()?;
        let mut dim = (kind == GroupKind::B2Planar).then_some(2usize);
        let mut kappa: Option<Vec<S>> = None;
        for part in parts {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::UnknownGroup(format!("malformed group field `{part}`")))?;
            match key {
                "d" => {
                    dim = Some(
                        value
                            .parse()
                            .map_err(|_| Error::UnknownGroup(format!("bad dimension `{value}`")))?,
                    )
                }
                "kappa" => {
                    let vals: std::result::Result<Vec<S>, _> =
                        value.split(',').map(|v| v.trim().parse::<S>()).collect();
                    kappa = Some(vals.map_err(|_| Error::UnknownGroup(format!("bad kappa list `{value}`")))?);
                }
                _ => return Err(Error::UnknownGroup(format!("unknown group field `{key}`"))),
            }
        }
        let dim = dim.ok_or_else(|| Error::UnknownGroup(format!("`{spec}` is missing d=")))?;
        let kappa = kappa.ok_or_else(|| Error::UnknownGroup(format!("`{spec}` is missing kappa=")))?;
        Self::builtin(kind, dim, &kappa)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The full root system `R` in construction order.
    pub fn roots(&self) -> &[Root<S>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[PositiveRoot<S>] {
        &self.positive
    }

    pub fn kappa(&self) -> &MultiplicityFunction<S> {
        &self.kappa
    }

    pub fn elements(&self) -> &[Matrix<S>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `γ_κ = Σ_{α ∈ R_+} κ(α)`.
    pub fn gamma_kappa(&self) -> S {
        self.positive.iter().fold(S::zero(), |acc, p| acc + p.kappa.clone())
    }

    /// `μ = 2 γ_κ + d`.
    pub fn dunkl_dimension(&self) -> S {
        int::<S>(2) * self.gamma_kappa() + int::<S>(self.dim as i64)
    }

    /// Copy with each positive root rescaled by `factors[i]` (and its
    /// negative likewise). Multiplicities follow their roots.
    pub fn with_rescaled_roots(&self, factors: &[S]) -> Result<Self> {
        assert_eq!(factors.len(), self.positive.len());
        let mut roots = Vec::new();
        for (p, c) in self.positive.iter().zip(factors) {
            let scaled: Vec<S> = p.root.coords().iter().map(|x| x.clone() * c.clone()).collect();
            let neg: Vec<S> = scaled.iter().map(|x| -x.clone()).collect();
            roots.push((scaled, p.kappa.clone()));
            roots.push((neg, p.kappa.clone()));
        }
        Self::from_roots(format!("{}:rescaled", self.name), self.dim, roots)
    }

    /// Checks the root-system axioms, `W`-invariance of `κ`, that every
    /// element is orthogonal and fixes `x_0`, and closure of the element set.
    pub fn validate(&self) -> VerificationReport {
        let mut report = VerificationReport::new(format!("validate-group {}", self.name));
        let root_set: BTreeSet<&Root<S>> = self.roots.iter().collect();

        let bad_line = self.roots.iter().find(|a| {
            !root_set.contains(&a.neg()) || self.roots.iter().any(|b| b != *a && *b != a.neg() && a.is_parallel(b))
        });
        report.check(
            "root-system/line-axiom",
            bad_line.is_none(),
            bad_line.map_or("0".to_string(), |r| format!("root {r:?}")),
        );

        let mut bad_reflection = None;
        'outer: for p in &self.positive {
            for b in &self.roots {
                let image = b.transform(&p.reflection);
                if !root_set.contains(&image) {
                    bad_reflection = Some(format!("sigma_{:?} maps {b:?} to {image:?}", p.root));
                    break 'outer;
                }
            }
        }
        report.check(
            "root-system/reflection-closure",
            bad_reflection.is_none(),
            bad_reflection.unwrap_or_else(|| "0".into()),
        );

        // W is generated by the reflections, so invariance under each σ_α
        // is invariance under W.
        let mut bad_kappa = None;
        'k: for p in &self.positive {
            for (root, k) in self.kappa.iter() {
                let image = root.transform(&p.reflection);
                if let Some(k2) = self.kappa.get(&image) {
                    if k2 != k {
                        bad_kappa = Some(format!("kappa{root:?} = {k} but kappa{image:?} = {k2}"));
                        break 'k;
                    }
                }
            }
        }
        for (root, k) in self.kappa.iter() {
            if bad_kappa.is_some() {
                break;
            }
            if let Some(k2) = self.kappa.get(&root.neg()) {
                if k2 != k {
                    bad_kappa = Some(format!("kappa{root:?} = {k} but kappa(-alpha) = {k2}"));
                }
            }
        }
        report.check(
            "multiplicity/invariance",
            bad_kappa.is_none(),
            bad_kappa.unwrap_or_else(|| "0".into()),
        );

        let n = self.dim + 1;
        let mut e0 = vec![S::zero(); n];
        e0[0] = S::one();
        let bad_element = self.elements.iter().position(|m| {
            let orthogonal = m.as_signed_permutation().is_some() || m.is_orthogonal();
            !orthogonal || m.mul_vec(&e0) != e0 || m.transpose().mul_vec(&e0) != e0
        });
        report.check(
            "elements/orthogonal-fix-x0",
            bad_element.is_none(),
            bad_element.map_or("0".to_string(), |i| format!("element {:?}", self.elements[i])),
        );

        let element_set: BTreeSet<&Matrix<S>> = self.elements.iter().collect();
        let has_identity = element_set.contains(&Matrix::identity(n));
        let not_closed = self.elements.iter().find_map(|g| {
            self.positive
                .iter()
                .map(|p| g.mul(&p.reflection))
                .find(|h| !element_set.contains(h))
        });
        report.check(
            "elements/closure",
            has_identity && not_closed.is_none(),
            if !has_identity {
                "identity missing".to_string()
            } else {
                not_closed.map_or("0".to_string(), |h| format!("product {h:?} missing"))
            },
        );

        if self.gamma_kappa().is_zero() {
            report.note("classical mode: kappa = 0, Dunkl operators reduce to partial derivatives");
        }
        report
    }
}

fn generate_group<'a, S: Scalar>(n: usize, generators: impl Iterator<Item = &'a Matrix<S>>) -> Result<Vec<Matrix<S>>> {
    let gens: Vec<&Matrix<S>> = generators.collect();
    let identity = Matrix::identity(n);
    let mut seen = BTreeSet::new();
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = g.mul(s);
            if !seen.contains(&h) {
                if seen.len() >= MAX_GROUP_ORDER {
                    return Err(Error::GroupTooLarge { limit: MAX_GROUP_ORDER });
                }
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(seen.into_iter().collect())
}
