//! Chevalley basis of the complex simple Lie algebra attached to a root
//! system, with exact structure constants.
//!
//! Signs are fixed by declaring `N_{α,β} = +(p+1)` on every extraspecial
//! pair, where the ordering of positive roots is the one of
//! [`RootSystem::positive_roots`]. All remaining constants follow from the
//! standard identities between structure constants:
//!
//! * `N_{β,α} = -N_{α,β}` and `N_{-α,-β} = -N_{α,β}`;
//! * for `α + β + γ = 0`: `N_{α,β}/(γ,γ) = N_{β,γ}/(α,α) = N_{γ,α}/(β,β)`;
//! * for `α + β + γ + δ = 0` with no opposite pair, the four-root relation
//!   `N_{α,β}N_{γ,δ}/(α+β,α+β) + N_{β,γ}N_{α,δ}/(β+γ,β+γ)
//!   + N_{γ,α}N_{β,δ}/(γ+α,γ+α) = 0`.
//!
//! Correctness is checked by the Jacobi identity rather than against
//! published tables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::roots::{Coweight, Root, RootSystem, RootSystemType};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChevalleyError {
    #[error("elements live in different algebras ({left} vs {right})")]
    SystemMismatch {
        left: RootSystemType,
        right: RootSystemType,
    },
    #[error("{0} is not a root of this system")]
    NotARoot(Root),
    #[error("parity is not additive on {0} + {1}")]
    ParityNotAdditive(Root, Root),
    #[error("parity vector has {found} entries, expected {expected}")]
    ParityLength { expected: usize, found: usize },
    #[error("coweight is not integral on root {0}")]
    NonIntegral(Root),
}

/// A Chevalley basis vector: `h_i` (simple coroot) or `x_α`, where `α` is
/// given by its index in [`RootSystem::roots`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElement {
    Cartan(usize),
    RootVector(usize),
}

/// Finitely supported rational combination of basis elements. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement {
    system: RootSystemType,
    terms: BTreeMap<BasisElement, Rational>,
}

impl LieElement {
    pub fn zero(system: RootSystemType) -> Self {
        Self {
            system,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(system: RootSystemType, b: BasisElement) -> Self {
        let mut e = Self::zero(system);
        e.terms.insert(b, Rational::one());
        e
    }

    pub fn root_vector(rs: &RootSystem, root: &Root) -> Result<Self, ChevalleyError> {
        let i = rs
            .index_of(root)
            .ok_or_else(|| ChevalleyError::NotARoot(root.clone()))?;
        Ok(Self::basis(rs.root_type(), BasisElement::RootVector(i)))
    }

    /// `Σ c_i h_i` from coordinates over the simple coroots.
    pub fn cartan(system: RootSystemType, coords: &[Rational]) -> Self {
        let mut e = Self::zero(system);
        for (i, c) in coords.iter().enumerate() {
            e.add_term(BasisElement::Cartan(i), c.clone());
        }
        e
    }

    pub fn system(&self) -> RootSystemType {
        self.system
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: BasisElement) -> Rational {
        self.terms.get(&b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(BasisElement, &Rational)> {
        self.terms.iter().next().map(|(b, c)| (*b, c))
    }

    pub fn add_term(&mut self, b: BasisElement, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.system);
        }
        Self {
            system: self.system,
            terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&mut self, other: &LieElement, c: &Rational) {
        for (b, x) in &other.terms {
            self.add_term(*b, x * c);
        }
    }

    pub fn sum(&self, other: &LieElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn difference(&self, other: &LieElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match b {
                BasisElement::Cartan(i) => write!(f, "{c}·h{}", i + 1)?,
                BasisElement::RootVector(i) => write!(f, "{c}·x[{i}]")?,
            }
        }
        Ok(())
    }
}

/// Structure constants `N_{α,β}` of a Chevalley basis, indexed by root
/// indices. Immutable once built.
#[derive(Debug, Clone)]
pub struct StructureTable {
    rs: Arc<RootSystem>,
    n_roots: usize,
    /// `sums[i * n + j]` = index of `roots[i] + roots[j]` when a root.
    sums: Vec<Option<usize>>,
    /// `consts[i * n + j] = N_{α_i, α_j}`, zero when the sum is not a root.
    consts: Vec<i64>,
    /// `pairings[i][k] = ⟨α_i, σ_k^∨⟩`.
    pairings: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    lengths: Vec<i64>,
}

impl StructureTable {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        let n = rs.roots().len();
        let mut sums = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                sums[i * n + j] = rs.sum_index(i, j);
            }
        }
        let lengths: Vec<i64> = rs.roots().iter().map(|r| rs.inner(r, r)).collect();
        let pairings = rs
            .roots()
            .iter()
            .map(|r| (0..rs.rank()).map(|k| rs.pairing(r, k)).collect())
            .collect();
        let coroots = rs.roots().iter().map(|r| rs.coroot_int(r)).collect();

        let npos = rs.num_positive();
        let mut extraspecial = vec![None; npos];
        for (xi, slot) in extraspecial.iter_mut().enumerate() {
            let target = rs.root(xi);
            if target.is_simple() {
                continue;
            }
            *slot = (0..npos).find_map(|a| {
                let b = rs.index_of(&target.checked_sub(rs.root(a))?)?;
                (b < npos).then_some((a, b))
            });
        }

        let mut builder = Builder {
            rs: &rs,
            n,
            npos,
            sums: &sums,
            lengths: &lengths,
            extraspecial: &extraspecial,
            memo: vec![None; n * n],
        };
        let mut consts = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                if sums[i * n + j].is_some() {
                    consts[i * n + j] = builder.constant(i, j);
                }
            }
        }

        Self {
            rs,
            n_roots: n,
            sums,
            consts,
            pairings,
            coroots,
            lengths,
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn system(&self) -> RootSystemType {
        self.rs.root_type()
    }

    /// Basis in canonical order: `h_1..h_r` then `x_α` in root order.
    pub fn basis(&self) -> Vec<BasisElement> {
        (0..self.rs.rank())
            .map(BasisElement::Cartan)
            .chain((0..self.n_roots).map(BasisElement::RootVector))
            .collect()
    }

    /// `N_{α_i, α_j}` by index; `None` if `α_i + α_j` is not a root.
    pub fn constant_by_index(&self, i: usize, j: usize) -> Option<i64> {
        self.sums[i * self.n_roots + j].map(|_| self.consts[i * self.n_roots + j])
    }

    pub fn constant(&self, a: &Root, b: &Root) -> Option<i64> {
        let i = self.rs.index_of(a)?;
        let j = self.rs.index_of(b)?;
        self.constant_by_index(i, j)
    }

    /// All stored constants as `((α, β), N_{α,β})`.
    pub fn constants(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        let n = self.n_roots;
        (0..n * n).filter_map(move |k| {
            self.sums[k].map(|_| ((k / n, k % n), self.consts[k]))
        })
    }

    /// Overwrites one constant. Only meant for fault-injection tests of the
    /// invariant checkers.
    #[doc(hidden)]
    pub fn corrupt_constant(&mut self, i: usize, j: usize, value: i64) {
        self.consts[i * self.n_roots + j] = value;
    }

    /// `h_α` over the simple coroots.
    pub fn coroot_of(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn pairing(&self, root: usize, k: usize) -> i64 {
        self.pairings[root][k]
    }

    pub fn squared_length(&self, root: usize) -> i64 {
        self.lengths[root]
    }

    /// Bracket of two basis vectors. All coefficients are integers.
    pub fn bracket_basis(&self, a: BasisElement, b: BasisElement) -> Vec<(BasisElement, i64)> {
        use BasisElement::*;
        match (a, b) {
            (Cartan(_), Cartan(_)) => Vec::new(),
            (Cartan(k), RootVector(r)) => {
                let c = self.pairings[r][k];
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(RootVector(r), c)]
                }
            }
            (RootVector(r), Cartan(k)) => {
                let c = self.pairings[r][k];
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(RootVector(r), -c)]
                }
            }
            (RootVector(r), RootVector(s)) => {
                if s == self.rs.neg_index(r) {
                    self.coroots[r]
                        .iter()
                        .enumerate()
                        .filter(|(_, &m)| m != 0)
                        .map(|(k, &m)| (Cartan(k), m))
                        .collect()
                } else if let Some(t) = self.sums[r * self.n_roots + s] {
                    vec![(RootVector(t), self.consts[r * self.n_roots + s])]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// Bilinear extension of [`StructureTable::bracket_basis`].
    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement, ChevalleyError> {
        self.check(x)?;
        self.check(y)?;
        let mut out = LieElement::zero(self.system());
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                let cab = ca * cb;
                for (e, k) in self.bracket_basis(*a, *b) {
                    out.add_term(e, &cab * Rational::from_integer(k.into()));
                }
            }
        }
        Ok(out)
    }

    /// `B(x, y) = tr(ad x ∘ ad y)`, computed from the trace over the basis.
    pub fn killing_form(&self, x: &LieElement, y: &LieElement) -> Result<Rational, ChevalleyError> {
        self.check(x)?;
        self.check(y)?;
        let mut tr = Rational::zero();
        for b in self.basis() {
            let eb = LieElement::basis(self.system(), b);
            let inner = self.bracket(y, &eb)?;
            let outer = self.bracket(x, &inner)?;
            tr += outer.coeff(b);
        }
        Ok(tr)
    }

    fn check(&self, x: &LieElement) -> Result<(), ChevalleyError> {
        if x.system != self.system() {
            return Err(ChevalleyError::SystemMismatch {
                left: self.system(),
                right: x.system,
            });
        }
        Ok(())
    }
}

/// Free function form of [`StructureTable::new`].
pub fn build_structure_table(rs: Arc<RootSystem>) -> StructureTable {
    StructureTable::new(rs)
}

pub fn bracket(t: &StructureTable, x: &LieElement, y: &LieElement) -> Result<LieElement, ChevalleyError> {
    t.bracket(x, y)
}

pub fn killing_form(t: &StructureTable, x: &LieElement, y: &LieElement) -> Result<Rational, ChevalleyError> {
    t.killing_form(x, y)
}

struct Builder<'a> {
    rs: &'a RootSystem,
    n: usize,
    npos: usize,
    sums: &'a [Option<usize>],
    lengths: &'a [i64],
    extraspecial: &'a [Option<(usize, usize)>],
    memo: Vec<Option<i64>>,
}

impl Builder<'_> {
    fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i * self.n + j]
    }

    fn positive(&self, i: usize) -> bool {
        i < self.npos
    }

    fn constant(&mut self, r: usize, s: usize) -> i64 {
        if let Some(v) = self.memo[r * self.n + s] {
            return v;
        }
        let xi = self.sum(r, s).expect("constant requested for a non-root sum");
        let v = if self.positive(r) && self.positive(s) {
            let (a, b) = self.extraspecial[xi].expect("non-simple positive root");
            let p = self.rs.string_down(self.rs.root(a), self.rs.root(b)) as i64;
            if (r, s) == (a, b) {
                p + 1
            } else if (r, s) == (b, a) {
                -(p + 1)
            } else if r > s {
                -self.constant(s, r)
            } else {
                let ma = self.rs.neg_index(a);
                let mb = self.rs.neg_index(b);
                let mut acc = Ratio::<i64>::zero();
                if let Some(sa) = self.sum(s, ma) {
                    let num = self.constant(s, ma) * self.constant(r, mb);
                    acc += Ratio::new(num, self.lengths[sa]);
                }
                if let Some(ra) = self.sum(r, ma) {
                    let num = self.constant(ma, r) * self.constant(s, mb);
                    acc += Ratio::new(num, self.lengths[ra]);
                }
                let val = acc * Ratio::new(self.lengths[xi], p + 1);
                assert!(val.is_integer(), "non-integral structure constant");
                val.to_integer()
            }
        } else if !self.positive(r) && !self.positive(s) {
            -self.constant(self.rs.neg_index(r), self.rs.neg_index(s))
        } else {
            let t = self.rs.neg_index(xi);
            let (num, den, v) = if self.positive(r) == self.positive(t) {
                (self.lengths[t], self.lengths[s], self.constant(t, r))
            } else {
                (self.lengths[t], self.lengths[r], self.constant(s, t))
            };
            assert_eq!((num * v) % den, 0, "non-integral structure constant");
            num * v / den
        };
        self.memo[r * self.n + s] = Some(v);
        v
    }
}

/// Conjugation of `g_C` with respect to the equal-rank real form whose
/// compact roots are those of parity 0:
/// `x_α ↦ -(-1)^{parity(α)} x_{-α}` and `h ↦ -h`.
///
/// Coefficients are rational, so complex conjugation acts trivially on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealFormConjugation {
    system: RootSystemType,
    parity: Vec<u8>,
    neg: Vec<usize>,
}

impl RealFormConjugation {
    /// `parity[i]` is the parity of `rs.roots()[i]`; must be additive.
    pub fn new(rs: &RootSystem, parity: Vec<u8>) -> Result<Self, ChevalleyError> {
        let n = rs.roots().len();
        if parity.len() != n {
            return Err(ChevalleyError::ParityLength {
                expected: n,
                found: parity.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                if let Some(k) = rs.sum_index(i, j) {
                    if (parity[i] + parity[j]) % 2 != parity[k] % 2 {
                        return Err(ChevalleyError::ParityNotAdditive(
                            rs.root(i).clone(),
                            rs.root(j).clone(),
                        ));
                    }
                }
            }
        }
        Ok(Self {
            system: rs.root_type(),
            parity: parity.into_iter().map(|p| p % 2).collect(),
            neg: (0..n).map(|i| rs.neg_index(i)).collect(),
        })
    }

    /// Parity `α(w) mod 2` from an integral coweight.
    pub fn from_coweight(rs: &RootSystem, w: &Coweight) -> Result<Self, ChevalleyError> {
        let parity = rs
            .roots()
            .iter()
            .map(|r| {
                w.evaluate_integral(r)
                    .map(|v| v.rem_euclid(2) as u8)
                    .ok_or_else(|| ChevalleyError::NonIntegral(r.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rs, parity)
    }

    pub fn parity(&self, root_index: usize) -> u8 {
        self.parity[root_index]
    }

    pub fn conjugate(&self, x: &LieElement) -> Result<LieElement, ChevalleyError> {
        if x.system != self.system {
            return Err(ChevalleyError::SystemMismatch {
                left: self.system,
                right: x.system,
            });
        }
        let mut out = LieElement::zero(self.system);
        for (b, c) in &x.terms {
            match *b {
                BasisElement::Cartan(k) => out.add_term(BasisElement::Cartan(k), -c.clone()),
                BasisElement::RootVector(i) => {
                    let sign = if self.parity[i] == 0 { -c.clone() } else { c.clone() };
                    out.add_term(BasisElement::RootVector(self.neg[i]), sign);
                }
            }
        }
        Ok(out)
    }
}

pub fn conjugate(c: &RealFormConjugation, x: &LieElement) -> Result<LieElement, ChevalleyError> {
    c.conjugate(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootSystem;

    fn table(s: &str) -> StructureTable {
        StructureTable::new(Arc::new(RootSystem::new(s.parse().unwrap())))
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn x(t: &StructureTable, coeffs: &[i32]) -> LieElement {
        LieElement::root_vector(t.root_system(), &Root::new(coeffs.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn a1_bracket_gives_coroot() {
        let t = table("A1");
        assert_eq!(t.constants().count(), 0);
        let e = x(&t, &[1]);
        let f = x(&t, &[-1]);
        let h = t.bracket(&e, &f).unwrap();
        assert_eq!(h, LieElement::cartan(t.system(), &[q(1)]));
    }

    #[test]
    fn a2_constant_magnitude() {
        let t = table("A2");
        let n = t.constant(&Root::simple(2, 0), &Root::simple(2, 1)).unwrap();
        assert_eq!(n.abs(), 1);
        let b = t.bracket(&x(&t, &[1, 0]), &x(&t, &[0, 1])).unwrap();
        let target = x(&t, &[1, 1]);
        assert!(b == target || b == target.scaled(&q(-1)));
    }

    #[test]
    fn g2_constant_magnitudes() {
        let t = table("G2");
        let s1 = Root::simple(2, 0);
        let s2 = Root::simple(2, 1);
        let s12 = Root::new(vec![1, 1]).unwrap();
        assert_eq!(t.constant(&s1, &s2).unwrap().abs(), 1);
        assert_eq!(t.constant(&s1, &s12).unwrap().abs(), 2);
        let s112 = Root::new(vec![2, 1]).unwrap();
        assert_eq!(t.constant(&s1, &s112).unwrap().abs(), 3);
    }

    #[test]
    fn extraspecial_pairs_are_positive() {
        let t = table("B3");
        let rs = t.root_system().clone();
        for xi in rs.positive_roots().iter().filter(|r| !r.is_simple()) {
            let (a, b) = (0..rs.num_positive())
                .find_map(|a| {
                    let b = rs.index_of(&xi.checked_sub(rs.root(a))?)?;
                    (b < rs.num_positive()).then_some((a, b))
                })
                .unwrap();
            assert!(t.constant_by_index(a, b).unwrap() > 0);
        }
    }

    #[test]
    fn self_bracket_vanishes() {
        let t = table("C2");
        for b in t.basis() {
            let e = LieElement::basis(t.system(), b);
            assert!(t.bracket(&e, &e).unwrap().is_zero());
        }
    }

    #[test]
    fn killing_form_a1() {
        let t = table("A1");
        let h = LieElement::cartan(t.system(), &[q(1)]);
        assert_eq!(t.killing_form(&h, &h).unwrap(), q(8));
        let e = x(&t, &[1]);
        let f = x(&t, &[-1]);
        assert_eq!(t.killing_form(&e, &f).unwrap(), q(4));
        assert_eq!(t.killing_form(&e, &e).unwrap(), q(0));
    }

    #[test]
    fn killing_root_space_orthogonality() {
        let t = table("A2");
        let rs = t.root_system().clone();
        for a in rs.roots() {
            for b in rs.roots() {
                let v = t
                    .killing_form(
                        &LieElement::root_vector(&rs, a).unwrap(),
                        &LieElement::root_vector(&rs, b).unwrap(),
                    )
                    .unwrap();
                if *b == -a {
                    assert!(v > q(0));
                } else {
                    assert_eq!(v, q(0));
                }
            }
        }
    }

    #[test]
    fn mismatched_systems_rejected() {
        let t = table("A2");
        let other = LieElement::basis("A1".parse().unwrap(), BasisElement::Cartan(0));
        let mine = LieElement::basis(t.system(), BasisElement::Cartan(0));
        assert!(matches!(
            t.bracket(&mine, &other),
            Err(ChevalleyError::SystemMismatch { .. })
        ));
    }

    #[test]
    fn conjugation_signs() {
        let t = table("A2");
        let rs = t.root_system().clone();
        // labels (Q, Q): T' = T^1 + T^2
        let c = RealFormConjugation::from_coweight(&rs, &Coweight::from_integers(&[1, 1])).unwrap();
        for (i, r) in rs.roots().iter().enumerate() {
            let e = LieElement::root_vector(&rs, r).unwrap();
            let ce = c.conjugate(&e).unwrap();
            assert_eq!(c.conjugate(&ce).unwrap(), e);
            let b = t.killing_form(&e, &ce).unwrap();
            if c.parity(i) == 0 {
                assert!(b < q(0), "{r}");
            } else {
                assert!(b > q(0), "{r}");
            }
        }
    }

    #[test]
    fn non_additive_parity_rejected() {
        let rs = RootSystem::new("A2".parse().unwrap());
        let mut p = vec![0u8; rs.roots().len()];
        p[0] = 1;
        assert!(RealFormConjugation::new(&rs, p).is_err());
    }
}
