//! Irreducible root systems in simple-root coordinates.
//!
//! Simple roots follow Bourbaki numbering:
//!
//! | type | diagram | short simple roots |
//! |------|---------|--------------------|
//! | A_n  | 1 - 2 - ... - n | none |
//! | B_n  | 1 - ... - (n-1) => n | σ_n |
//! | C_n  | 1 - ... - (n-1) <= n | σ_1 .. σ_{n-1} |
//! | D_n  | 1 - ... - (n-2) - {n-1, n} | none |
//! | E_n  | 1 - 3 - 4 - 5 - ... with 2 attached to 4 | none |
//! | F_4  | 1 - 2 => 3 - 4 | σ_3, σ_4 |
//! | G_2  | 1 <= 2 | σ_1 |
//!
//! The Cartan matrix is `C[i][j] = 2(σ_i, σ_j) / (σ_j, σ_j)`, so that the
//! simple reflection is `s_j(α) = α - (Σ_i n_i C[i][j]) σ_j`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("inadmissible root system type {family}{rank}")]
    InadmissibleType { family: Family, rank: usize },
    #[error("unknown root system family `{0}`")]
    UnknownFamily(String),
    #[error("cannot parse root system type `{0}`")]
    BadTypeString(String),
    #[error("{0:?} is not a root of this system")]
    NotARoot(Vec<i32>),
    #[error("vector has length {found}, rank is {expected}")]
    RankMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(RootError::UnknownFamily(s.to_string())),
        }
    }
}

/// Cartan type of an irreducible reduced root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    family: Family,
    rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(RootError::InadmissibleType { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Closed-form number of roots.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Complex dimension of the simple Lie algebra.
    pub fn algebra_dim(&self) -> usize {
        self.root_count() + self.rank
    }

    /// Every admissible type of rank at most `max_rank`, ordered by rank
    /// and then family.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for rank in 1..=max_rank {
            for family in Family::ALL {
                if let Ok(t) = Self::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Symmetric Gram matrix of the simple roots, scaled so the shortest
    /// simple root has squared length 2.
    fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        let set_diag = |g: &mut Vec<Vec<i64>>, v: i64| {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = v;
            }
        };
        match self.family {
            Family::A => {
                set_diag(&mut g, 2);
                for i in 0..n.saturating_sub(1) {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::B => {
                set_diag(&mut g, 4);
                g[n - 1][n - 1] = 2;
                for i in 0..n - 1 {
                    link(&mut g, i, i + 1, -2);
                }
            }
            Family::C => {
                set_diag(&mut g, 2);
                g[n - 1][n - 1] = 4;
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 2, n - 1, -2);
            }
            Family::D => {
                set_diag(&mut g, 2);
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 3, n - 1, -1);
            }
            Family::E => {
                set_diag(&mut g, 2);
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 2..n - 1 {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = RootError;

    /// Parses strings such as `A2`, `e8`, `F4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = chars
            .next()
            .ok_or_else(|| RootError::BadTypeString(s.to_string()))?;
        let family: Family = fam.to_string().parse()?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootError::BadTypeString(s.to_string()))?;
        Self::new(family, rank)
    }
}

/// A root `α = Σ n_i σ_i`, stored by its coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i32>);

impl Root {
    /// Accepts nonzero coefficient vectors whose entries all share a sign.
    /// Membership in a particular root system is checked by
    /// [`RootSystem::contains`].
    pub fn new(coeffs: Vec<i32>) -> Option<Self> {
        let pos = coeffs.iter().all(|&c| c >= 0);
        let neg = coeffs.iter().all(|&c| c <= 0);
        let nonzero = coeffs.iter().any(|&c| c != 0);
        (nonzero && (pos || neg)).then_some(Self(coeffs))
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Self(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }

    /// Coefficient-wise sum, or `None` when the sum is zero or of mixed
    /// sign (and hence certainly not a root).
    pub fn checked_add(&self, other: &Root) -> Option<Root> {
        Root::new(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &Root) -> Option<Root> {
        Root::new(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl std::ops::Neg for &Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl std::ops::Neg for Root {
    type Output = Root;

    fn neg(self) -> Root {
        -&self
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthClass {
    Long,
    Short,
}

/// An element of `h` written in the basis `T^1..T^r` dual to the simple
/// roots, so that `σ_i(T^j) = δ_ij`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coweight(Vec<Rational>);

impl Coweight {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self(coeffs)
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![Rational::zero(); rank])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `α(w) = Σ c_i n_i`.
    pub fn evaluate(&self, root: &Root) -> Rational {
        assert_eq!(self.0.len(), root.rank(), "coweight/root rank mismatch");
        self.0
            .iter()
            .zip(root.coeffs())
            .filter(|(_, &n)| n != 0)
            .fold(Rational::zero(), |acc, (c, &n)| {
                acc + c * Rational::from_integer(n.into())
            })
    }

    /// Coefficients as machine integers, if they all are integers.
    pub fn as_integers(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| {
                c.is_integer()
                    .then(|| i64::try_from(c.to_integer()).ok())
                    .flatten()
            })
            .collect()
    }

    /// `α(w)` as an integer, if it is one.
    pub fn evaluate_integral(&self, root: &Root) -> Option<i64> {
        let v = self.evaluate(root);
        if v.is_integer() {
            i64::try_from(v.to_integer()).ok()
        } else {
            None
        }
    }
}

impl std::ops::Neg for &Coweight {
    type Output = Coweight;

    fn neg(self) -> Coweight {
        Coweight(self.0.iter().map(|c| -c).collect())
    }
}

/// Free function form of [`Coweight::evaluate`].
pub fn evaluate(w: &Coweight, root: &Root) -> Rational {
    w.evaluate(root)
}

/// Full root system with a fixed positive system.
///
/// `roots()` lists positive roots sorted by height (ties: descending
/// lexicographic, so simple roots appear as σ_1, σ_2, ...), followed by the
/// negative roots in the same order. Index `i < n_pos` and `i + n_pos` are
/// negatives of each other.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: RootSystemType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Root, usize>,
    /// `sums[i * |roots| + j]`: index of `roots[i] + roots[j]`, or `NO_SUM`.
    sums: Vec<u32>,
    max_len: i64,
}

const NO_SUM: u32 = u32::MAX;

impl RootSystem {
    pub fn new(ty: RootSystemType) -> Self {
        let n = ty.rank();
        let gram = ty.gram();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        // Weyl-orbit closure of the simple roots under simple reflections.
        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        while let Some(r) = queue.pop_front() {
            if !seen.insert(r.clone()) {
                continue;
            }
            for j in 0..n {
                let s = reflect(&cartan, j, &r);
                if !seen.contains(&s) {
                    queue.push_back(s);
                }
            }
        }

        let mut pos: Vec<Root> = seen.into_iter().filter(Root::is_positive).collect();
        pos.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        let n_pos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| -r));
        let index: HashMap<Root, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let mut sums = vec![NO_SUM; roots.len() * roots.len()];
        for (i, a) in roots.iter().enumerate() {
            for (j, b) in roots.iter().enumerate() {
                if let Some(k) = a.checked_add(b).and_then(|s| index.get(&s)) {
                    sums[i * roots.len() + j] = *k as u32;
                }
            }
        }
        let max_len = roots
            .iter()
            .map(|r| inner_with(&gram, r.coeffs(), r.coeffs()))
            .max()
            .unwrap_or(0);

        Self {
            ty,
            cartan,
            gram,
            roots,
            n_pos,
            index,
            sums,
            max_len,
        }
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// Dimension of the complex Lie algebra: roots plus rank.
    pub fn algebra_dim(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn negative_roots(&self) -> &[Root] {
        &self.roots[self.n_pos..]
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// Index of `-roots[i]`.
    pub fn neg_index(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.n_pos - 1]
    }

    /// `(α, β)` in the normalization where the shortest simple root has
    /// squared length 2.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        inner_with(&self.gram, a.coeffs(), b.coeffs())
    }

    pub fn length_class(&self, r: &Root) -> LengthClass {
        if self.inner(r, r) == self.max_len {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    /// `⟨α, σ_i^∨⟩ = 2(α, σ_i) / (σ_i, σ_i)`.
    pub fn pairing(&self, r: &Root, i: usize) -> i64 {
        r.coeffs()
            .iter()
            .zip(&self.cartan)
            .map(|(&n, row)| n as i64 * row[i])
            .sum()
    }

    pub fn simple_reflection(&self, i: usize, r: &Root) -> Root {
        reflect(&self.cartan, i, r)
    }

    /// `α + β` if it is a root; `None` otherwise (including `α = -β`).
    pub fn root_sum(&self, a: &Root, b: &Root) -> Result<Option<Root>, RootError> {
        for r in [a, b] {
            if !self.contains(r) {
                return Err(RootError::NotARoot(r.coeffs().to_vec()));
            }
        }
        Ok(a.checked_add(b).filter(|s| self.contains(s)))
    }

    /// Index of `roots[i] + roots[j]` if that is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let k = self.sums[i * self.roots.len() + j];
        (k != NO_SUM).then_some(k as usize)
    }

    /// Integer coordinates of `α^∨` over the simple coroots:
    /// `m_i = n_i (σ_i, σ_i) / (α, α)`.
    pub fn coroot_int(&self, r: &Root) -> Vec<i64> {
        let len = self.inner(r, r);
        r.coeffs()
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                let num = n as i64 * self.gram[i][i];
                debug_assert_eq!(num % len, 0, "coroot coordinates are integral");
                num / len
            })
            .collect()
    }

    pub fn coroot_coords(&self, r: &Root) -> Result<Vec<Rational>, RootError> {
        if !self.contains(r) {
            return Err(RootError::NotARoot(r.coeffs().to_vec()));
        }
        Ok(self
            .coroot_int(r)
            .into_iter()
            .map(|m| Rational::from_integer(m.into()))
            .collect())
    }

    /// Largest `p ≥ 0` with `β - p α` a root.
    pub fn string_down(&self, a: &Root, b: &Root) -> usize {
        let mut p = 0;
        let mut cur = b.clone();
        while let Some(next) = cur.checked_sub(a) {
            if !self.contains(&next) {
                break;
            }
            p += 1;
            cur = next;
        }
        p
    }
}

/// Free function form of [`RootSystem::new`].
pub fn build_root_system(ty: RootSystemType) -> RootSystem {
    RootSystem::new(ty)
}

fn inner_with(gram: &[Vec<i64>], a: &[i32], b: &[i32]) -> i64 {
    let mut s = 0;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            s += x as i64 * y as i64 * gram[i][j];
        }
    }
    s
}

fn reflect(cartan: &[Vec<i64>], j: usize, r: &Root) -> Root {
    let k: i64 = r
        .coeffs()
        .iter()
        .zip(cartan)
        .map(|(&n, row)| n as i64 * row[j])
        .sum();
    let mut c = r.coeffs().to_vec();
    c[j] -= k as i32;
    Root(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn ty(s: &str) -> RootSystemType {
        s.parse().unwrap()
    }

    fn set(rs: &RootSystem) -> BTreeSet<Vec<i32>> {
        rs.roots().iter().map(|r| r.coeffs().to_vec()).collect()
    }

    fn expected(pos: &[&[i32]]) -> BTreeSet<Vec<i32>> {
        pos.iter()
            .flat_map(|p| [p.to_vec(), p.iter().map(|c| -c).collect()])
            .collect()
    }

    #[test]
    fn inadmissible_types_are_rejected() {
        for (f, n) in [
            (Family::A, 0),
            (Family::B, 1),
            (Family::C, 1),
            (Family::D, 3),
            (Family::E, 5),
            (Family::E, 9),
            (Family::F, 3),
            (Family::G, 3),
        ] {
            assert!(RootSystemType::new(f, n).is_err(), "{f}{n}");
        }
        assert!("X3".parse::<RootSystemType>().is_err());
        assert!("A".parse::<RootSystemType>().is_err());
    }

    #[test]
    fn a2_roots() {
        let rs = RootSystem::new(ty("A2"));
        assert_eq!(set(&rs), expected(&[&[1, 0], &[0, 1], &[1, 1]]));
        assert_eq!(rs.positive_roots()[0].coeffs(), &[1, 0]);
        assert_eq!(rs.positive_roots()[1].coeffs(), &[0, 1]);
    }

    #[test]
    fn c2_roots() {
        let rs = RootSystem::new(ty("C2"));
        assert_eq!(
            set(&rs),
            expected(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1]])
        );
        assert_eq!(rs.length_class(&Root(vec![2, 1])), LengthClass::Long);
        assert_eq!(rs.length_class(&Root(vec![1, 1])), LengthClass::Short);
    }

    #[test]
    fn g2_roots_and_highest_root() {
        let rs = RootSystem::new(ty("G2"));
        assert_eq!(rs.roots().len(), 12);
        assert_eq!(
            set(&rs),
            expected(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1], &[3, 1], &[3, 2]])
        );
        assert_eq!(rs.highest_root().coeffs(), &[3, 2]);
        assert_eq!(rs.length_class(&Root::simple(2, 0)), LengthClass::Short);
        assert_eq!(rs.length_class(&Root::simple(2, 1)), LengthClass::Long);
    }

    #[test]
    fn known_highest_roots() {
        let cases: &[(&str, &[i32])] = &[
            ("A3", &[1, 1, 1]),
            ("B3", &[1, 2, 2]),
            ("C3", &[2, 2, 1]),
            ("D4", &[1, 2, 1, 1]),
            ("F4", &[2, 3, 4, 2]),
            ("E6", &[1, 2, 2, 3, 2, 1]),
            ("E7", &[2, 2, 3, 4, 3, 2, 1]),
            ("E8", &[2, 3, 4, 6, 5, 4, 3, 2]),
        ];
        for (t, h) in cases {
            let rs = RootSystem::new(ty(t));
            assert_eq!(rs.highest_root().coeffs(), *h, "{t}");
        }
    }

    #[test]
    fn counts_match_closed_form() {
        for t in RootSystemType::all_up_to_rank(8) {
            let rs = RootSystem::new(t);
            assert_eq!(rs.roots().len(), t.root_count(), "{t}");
        }
    }

    #[test]
    fn evaluate_examples() {
        let t1 = Coweight::from_integers(&[1, 0]);
        assert_eq!(t1.evaluate(&Root::simple(2, 0)), Rational::from_integer(1.into()));
        assert_eq!(t1.evaluate(&Root::simple(2, 1)), Rational::zero());
        let w = Coweight::from_integers(&[2, 1]);
        assert_eq!(w.evaluate(&Root(vec![1, 1])), Rational::from_integer(3.into()));
    }

    #[test]
    fn root_sum_examples() {
        let rs = RootSystem::new(ty("A2"));
        let s1 = Root::simple(2, 0);
        let s2 = Root::simple(2, 1);
        let s12 = Root(vec![1, 1]);
        assert_eq!(rs.root_sum(&s1, &s2).unwrap(), Some(s12.clone()));
        assert_eq!(rs.root_sum(&s1, &s12).unwrap(), None);
        for r in rs.roots() {
            assert_eq!(rs.root_sum(r, &-r).unwrap(), None);
        }
        assert!(rs.root_sum(&Root(vec![2, 1]), &s1).is_err());
    }

    #[test]
    fn coroot_examples() {
        let rs = RootSystem::new(ty("C2"));
        let q = |n: i64| Rational::from_integer(n.into());
        assert_eq!(rs.coroot_coords(&Root(vec![2, 1])).unwrap(), vec![q(1), q(1)]);
        assert_eq!(rs.coroot_coords(&Root(vec![1, 1])).unwrap(), vec![q(1), q(2)]);
        let a3 = RootSystem::new(ty("A3"));
        for r in a3.roots() {
            let m: Vec<i64> = a3.coroot_int(r);
            let n: Vec<i64> = r.coeffs().iter().map(|&c| c as i64).collect();
            assert_eq!(m, n);
        }
    }

    #[test]
    fn cartan_diagonal_is_two() {
        for t in RootSystemType::all_up_to_rank(8) {
            let rs = RootSystem::new(t);
            for i in 0..t.rank() {
                assert_eq!(rs.cartan_matrix()[i][i], 2);
            }
        }
    }
}
