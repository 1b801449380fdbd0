//! Exact arithmetic on monomials and monomial ideals.
//!
//! A monomial is an exponent vector over a fixed ambient set of `n`
//! variables `x_1, ..., x_n`. Ideals are stored by their minimal generating
//! set `G(I)`, sorted lexicographically, so structural equality is ideal
//! equality.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::varset::VarSet;

/// Exponent type. Desk-scale powers stay far below the bound; every
/// addition is checked.
pub type Exp = u16;

/// A monomial `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<Exp>,
}

impl Monomial {
    pub fn new(exps: Vec<Exp>) -> Self {
        Self { exps }
    }

    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The variable `x_i` with 1-based index `i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Self { exps }
    }

    /// Squarefree monomial `x_S` for a set of 1-based indices.
    pub fn squarefree<I: IntoIterator<Item = usize>>(n: usize, vars: I) -> Self {
        let mut exps = vec![0; n];
        for i in vars {
            exps[i - 1] = 1;
        }
        Self { exps }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Exp] {
        &self.exps
    }

    /// Exponent of the 1-based variable `x_i`.
    pub fn exp(&self, i: usize) -> Exp {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_indices(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i + 1),
        )
    }

    fn check_ambient(&self, other: &Monomial) -> Result<(), AlgebraError> {
        if self.ambient() != other.ambient() {
            return Err(AlgebraError::AmbientMismatch {
                left: self.ambient(),
                right: other.ambient(),
            });
        }
        Ok(())
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool, AlgebraError> {
        self.check_ambient(other)?;
        Ok(divides_slice(&self.exps, &other.exps))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        divides_slice(&self.exps, &other.exps)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        self.check_ambient(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        self.check_ambient(other)?;
        Ok(self.zip_with(other, |a, b| a.min(b)))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        self.check_ambient(other)?;
        Ok(self.zip_with(other, |a, b| a.max(b)))
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub(crate) fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let k = Exp::try_from(k).expect("monomial exponent overflow");
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(k).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Sets every variable outside `vars` to 1.
    pub fn restrict(&self, vars: VarSet) -> Monomial {
        let exps = self
            .exps
            .iter()
            .enumerate()
            .map(|(i, &e)| if vars.contains(i + 1) { e } else { 0 })
            .collect();
        Monomial { exps }
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(Exp, Exp) -> Exp) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

#[inline]
pub(crate) fn divides_slice(a: &[Exp], b: &[Exp]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal, stored as its minimal generating set in lexicographic
/// order. The zero ideal has no generators; the unit ideal is generated by
/// the monomial 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only the
    /// divisibility-minimal ones.
    pub fn new(ambient: usize, gens: Vec<Monomial>) -> Result<Self, AlgebraError> {
        if let Some(g) = gens.iter().find(|g| g.ambient() != ambient) {
            return Err(AlgebraError::AmbientMismatch {
                left: ambient,
                right: g.ambient(),
            });
        }
        Ok(Self::from_gens_unchecked(ambient, gens))
    }

    pub(crate) fn from_gens_unchecked(ambient: usize, gens: Vec<Monomial>) -> Self {
        Self {
            ambient,
            gens: minimalize(gens),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient: usize) -> Self {
        Self {
            ambient,
            gens: vec![Monomial::one(ambient)],
        }
    }

    /// The prime `P` viewed as the ideal generated by its variables.
    pub fn from_prime(p: &MonomialPrime) -> Self {
        let n = p.ambient();
        Self::from_gens_unchecked(n, p.vars().iter().map(|i| Monomial::var(n, i)).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.exponents().iter().all(|&e| e <= 1))
    }

    /// Union of generator supports.
    pub fn support(&self) -> VarSet {
        self.gens
            .iter()
            .fold(VarSet::empty(), |acc, g| acc.union(g.support()))
    }

    pub fn lcm_exponents(&self) -> Vec<Exp> {
        let mut out = vec![0; self.ambient];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    fn check_ambient(&self, n: usize) -> Result<(), AlgebraError> {
        if self.ambient != n {
            return Err(AlgebraError::AmbientMismatch {
                left: self.ambient,
                right: n,
            });
        }
        Ok(())
    }

    /// `u ∈ I`.
    pub fn contains(&self, u: &Monomial) -> Result<bool, AlgebraError> {
        self.check_ambient(u.ambient())?;
        Ok(self.contains_unchecked(u.exponents()))
    }

    #[inline]
    pub(crate) fn contains_unchecked(&self, u: &[Exp]) -> bool {
        self.gens.iter().any(|g| divides_slice(g.exponents(), u))
    }

    /// `I ⊆ J`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool, AlgebraError> {
        other.check_ambient(self.ambient)?;
        Ok(self
            .gens
            .iter()
            .all(|g| other.contains_unchecked(g.exponents())))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, AlgebraError> {
        self.check_ambient(other.ambient)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_gens_unchecked(self.ambient, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, AlgebraError> {
        self.check_ambient(other.ambient)?;
        Ok(self.product_unchecked(other))
    }

    fn product_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul_unchecked(b));
            }
        }
        Self::from_gens_unchecked(self.ambient, gens)
    }

    /// `I^k` for `k ≥ 1`, built as `I^k = I^{k-1} · I` with minimalization
    /// after every step. `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        if k == 0 {
            return Self::unit(self.ambient);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product_unchecked(self);
        }
        acc
    }

    /// `I : u`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal, AlgebraError> {
        self.check_ambient(u.ambient())?;
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(u)).collect();
        Ok(Self::from_gens_unchecked(self.ambient, gens))
    }

    /// Localization at a monomial prime `P`: every variable outside `P`
    /// becomes a unit, i.e. is set to 1 in each generator. The ambient
    /// indexing is kept, so the result lives in the variables of `P`.
    pub fn localize(&self, p: &MonomialPrime) -> Result<MonomialIdeal, AlgebraError> {
        self.check_ambient(p.ambient())?;
        Ok(self.localize_vars(p.vars()))
    }

    pub(crate) fn localize_vars(&self, vars: VarSet) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.restrict(vars)).collect();
        Self::from_gens_unchecked(self.ambient, gens)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Returns the divisibility-minimal elements of `gens`, deduplicated and in
/// lexicographic order.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // A monomial can only be divided by a kept one of strictly smaller
    // degree, since equal-degree divisors are equal and were deduplicated.
    let mut lower_end = 0;
    let mut current_degree = None;
    for g in gens {
        let d = g.degree();
        if current_degree != Some(d) {
            lower_end = kept.len();
            current_degree = Some(d);
        }
        if !kept[..lower_end].iter().any(|h| h.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// A prime generated by a set of variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ambient: usize,
    vars: VarSet,
}

impl MonomialPrime {
    pub fn new(ambient: usize, vars: VarSet) -> Result<Self, AlgebraError> {
        if let Some(max) = vars.max() {
            if max > ambient {
                return Err(AlgebraError::VariableOutOfRange {
                    index: max,
                    ambient,
                });
            }
        }
        Ok(Self { ambient, vars })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(
        ambient: usize,
        indices: I,
    ) -> Result<Self, AlgebraError> {
        Self::new(ambient, VarSet::from_indices(indices))
    }

    /// The graded maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ambient: usize) -> Self {
        Self {
            ambient,
            vars: VarSet::full(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    /// Sorted 1-based variable indices.
    pub fn indices(&self) -> Vec<usize> {
        self.vars.iter().collect()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn is_maximal(&self) -> bool {
        self.vars == VarSet::full(self.ambient)
    }

    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        self.vars.is_subset_of(other.vars)
    }

    /// `P ⊇ I`, i.e. every generator of `I` has a variable in `P`.
    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal
            .generators()
            .iter()
            .all(|g| g.support().intersects(self.vars))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then_with(|| self.vars.iter().cmp(other.vars.iter()))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.vars.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{i}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for MonomialPrime {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.vars.iter())
    }
}
