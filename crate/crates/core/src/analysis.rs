//! Bracket-generation closures, the `f` ideal, Hermitian centers and the
//! classical / non-classical verdict for a labeled root system.
//!
//! Everything here works on root supports. Brackets of full root spaces land
//! in single root lines (or in the coroot line when the roots are opposite),
//! so the Lie algebra generated by a sum of root spaces is again a sum of root
//! spaces plus a span of coroots. [`crate::verify`] checks this against the
//! linear-algebra closure computed from actual structure constants.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Signed;

use crate::grading::{DomainSpec, Label};
use crate::linalg::{kernel, RationalSubspace};
use crate::roots::{Coweight, Root, RootError, RootSystem, RootSystemType};
use crate::Rational;

/// A subalgebra candidate `⊕_{α ∈ S} g^α ⊕ c` with `c` a subspace of the
/// Cartan subalgebra in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSupportedSubspace {
    support: BTreeSet<Root>,
    cartan: RationalSubspace,
}

impl RootSupportedSubspace {
    pub fn zero(rank: usize) -> Self {
        Self {
            support: BTreeSet::new(),
            cartan: RationalSubspace::zero(rank),
        }
    }

    pub fn from_roots<I: IntoIterator<Item = Root>>(rank: usize, roots: I) -> Self {
        Self {
            support: roots.into_iter().collect(),
            cartan: RationalSubspace::zero(rank),
        }
    }

    pub fn new(support: BTreeSet<Root>, cartan: RationalSubspace) -> Self {
        Self { support, cartan }
    }

    pub fn root_support(&self) -> &BTreeSet<Root> {
        &self.support
    }

    pub fn cartan_part(&self) -> &RationalSubspace {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.support.len() + self.cartan.dim()
    }

    pub fn contains_root(&self, r: &Root) -> bool {
        self.support.contains(r)
    }

    pub fn insert_root(&mut self, r: Root) -> bool {
        self.support.insert(r)
    }

    pub fn insert_cartan(&mut self, v: &[Rational]) -> bool {
        self.cartan.insert(v)
    }
}

impl fmt::Display for RootSupportedSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.support.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}} + cartan dim {}", self.cartan.dim())
    }
}

/// Closure of a set of roots (given as a membership mask over
/// `rs.roots()`) under root addition. Coroots never produce new roots, so
/// this is the root support of the generated subalgebra.
fn root_closure_mask(rs: &RootSystem, mut mask: Vec<bool>) -> Vec<bool> {
    let mut queue: Vec<usize> = (0..mask.len()).filter(|&i| mask[i]).collect();
    let mut members = queue.clone();
    while let Some(i) = queue.pop() {
        let mut k = 0;
        while k < members.len() {
            let j = members[k];
            if let Some(s) = rs.sum_index(i, j) {
                if !mask[s] {
                    mask[s] = true;
                    members.push(s);
                    queue.push(s);
                }
            }
            k += 1;
        }
    }
    mask
}

/// Least subspace containing `seed` and closed under brackets, computed on
/// root supports.
pub fn lie_closure(
    rs: &RootSystem,
    seed: &RootSupportedSubspace,
) -> Result<RootSupportedSubspace, RootError> {
    let mut mask = vec![false; rs.roots().len()];
    for r in seed.root_support() {
        let i = rs
            .index_of(r)
            .ok_or_else(|| RootError::NotARoot(r.coeffs().to_vec()))?;
        mask[i] = true;
    }
    let mask = root_closure_mask(rs, mask);
    let mut cartan = seed.cartan_part().clone();
    for i in 0..rs.num_positive() {
        if mask[i] && mask[rs.neg_index(i)] {
            let c = rs.coroot_coords(rs.root(i))?;
            cartan.insert(&c);
        }
    }
    let support = (0..mask.len())
        .filter(|&i| mask[i])
        .map(|i| rs.root(i).clone())
        .collect();
    Ok(RootSupportedSubspace::new(support, cartan))
}

fn mask_of<'a, I: IntoIterator<Item = &'a Root>>(rs: &RootSystem, roots: I) -> Vec<bool> {
    let mut mask = vec![false; rs.roots().len()];
    for r in roots {
        mask[rs.index_of(r).expect("root of this system")] = true;
    }
    mask
}

/// Whether `k_- ⊕ q_+` generates an algebra containing all of `g_-`.
pub fn is_bracket_generating(spec: &DomainSpec) -> bool {
    let rs = spec.root_system();
    let s = spec.split();
    let closed = root_closure_mask(rs, mask_of(rs, s.k_minus.iter().chain(&s.q_plus)));
    let dec = spec.decomposition();
    (0..closed.len()).all(|i| dec.level_of_index(i) >= 0 || closed[i])
}

/// `(a, b)`: (a) levels -1 and -2 of `T` generate `g_-`; (b) level -1 of
/// `T'` generates `g'_-`.
pub fn generation_sanity(spec: &DomainSpec) -> (bool, bool) {
    let rs = spec.root_system();
    let generates = |levels: &[i64], seed: &dyn Fn(i64) -> bool| {
        let mask: Vec<bool> = levels.iter().map(|&l| seed(l)).collect();
        let closed = root_closure_mask(rs, mask);
        levels.iter().zip(&closed).all(|(&l, &c)| l >= 0 || c)
    };
    let t = spec.decomposition();
    let tp = spec.auxiliary_decomposition();
    (
        generates(t.level_by_index(), &|l| l == -1 || l == -2),
        generates(tp.level_by_index(), &|l| l == -1),
    )
}

/// `f = f_1 ⊕ f_0 ⊕ f_-1`, with `f_-1` spanned by the root spaces of `g'_-1`
/// that are not reached by `[g'_1, g'_-2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FIdeal {
    /// `Γ`, stored through the positive roots `α` with `-α ∈ Γ`.
    pub gamma_set: Vec<Root>,
    pub f_plus: Vec<Root>,
    pub f_minus: Vec<Root>,
    pub f_zero: RootSupportedSubspace,
}

impl FIdeal {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.f_plus.len(), self.f_zero.dim(), self.f_minus.len())
    }

    pub fn dim(&self) -> usize {
        self.f_plus.len() + self.f_zero.dim() + self.f_minus.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Root support of the whole ideal.
    pub fn roots(&self) -> BTreeSet<Root> {
        self.f_plus
            .iter()
            .chain(&self.f_minus)
            .chain(self.f_zero.root_support())
            .cloned()
            .collect()
    }
}

pub fn compute_f(spec: &DomainSpec) -> FIdeal {
    let rs = spec.root_system();
    let tp = spec.auxiliary_decomposition();
    let lv = tp.level_by_index();
    let n = rs.roots().len();

    let mut reachable = vec![false; n];
    for i in (0..n).filter(|&i| lv[i] == 1) {
        for j in (0..n).filter(|&j| lv[j] == -2) {
            if let Some(s) = rs.sum_index(i, j) {
                reachable[s] = true;
            }
        }
    }
    let gamma: Vec<usize> = (0..n).filter(|&i| lv[i] == -1 && !reachable[i]).collect();
    let f_minus: Vec<Root> = gamma.iter().map(|&i| rs.root(i).clone()).collect();
    let mut plus_idx: Vec<usize> = gamma.iter().map(|&i| rs.neg_index(i)).collect();
    plus_idx.sort_unstable();
    let f_plus: Vec<Root> = plus_idx.iter().map(|&i| rs.root(i).clone()).collect();

    let mut f_zero = RootSupportedSubspace::zero(rs.rank());
    for &mu in &plus_idx {
        for &nu in &gamma {
            if nu == rs.neg_index(mu) {
                let c = rs.coroot_coords(rs.root(mu)).expect("root of this system");
                f_zero.insert_cartan(&c);
            } else if let Some(s) = rs.sum_index(mu, nu) {
                f_zero.insert_root(rs.root(s).clone());
            }
        }
    }

    FIdeal {
        gamma_set: f_plus.clone(),
        f_plus,
        f_minus,
        f_zero,
    }
}

/// Primitive integral basis of the coweights vanishing on every compact
/// root. Its dimension is the dimension of the center of `k_C`.
pub fn compact_center_basis(spec: &DomainSpec) -> Vec<Vec<Rational>> {
    let rs = spec.root_system();
    let dec = spec.decomposition();
    let rows: Vec<Vec<Rational>> = rs
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(i, _)| dec.level_of_index(*i) % 2 == 0)
        .map(|(_, r)| {
            r.coeffs()
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect()
        })
        .collect();
    kernel(&rows, rs.rank())
}

/// A nonzero coweight vanishing on all compact roots, normalized to a
/// primitive integral vector with positive leading coefficient; `None` when
/// `k_C` has trivial center.
pub fn hermitian_center(spec: &DomainSpec) -> Option<Coweight> {
    compact_center_basis(spec).into_iter().next().map(Coweight::new)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fibration {
    Holomorphic,
    Antiholomorphic,
    None,
}

impl Fibration {
    pub fn as_str(self) -> &'static str {
        match self {
            Fibration::Holomorphic => "holomorphic",
            Fibration::Antiholomorphic => "antiholomorphic",
            Fibration::None => "none",
        }
    }
}

impl fmt::Display for Fibration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Everything computed about one labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub root_type: RootSystemType,
    pub labels: Vec<Label>,
    pub rank: usize,
    pub dim_g: usize,
    pub dim_k: usize,
    pub dim_q: usize,
    pub depth: i64,
    pub dim_c_d: usize,
    pub dim_c_z: usize,
    pub dim_c_u: usize,
    /// `dim_R m_l = 2 |levels(l)|` for `l = 1..=depth`.
    pub real_tangent_dims: Vec<usize>,
    pub hermitian_gk: bool,
    pub fibration: Fibration,
    pub classical: bool,
    pub f_dims: (usize, usize, usize),
    pub bracket_generating: bool,
}

/// Sign of `H` on `q_-` if it is strict and uniform.
fn uniform_sign(h: &Coweight, roots: &[Root]) -> Option<i8> {
    let mut sign = None;
    for r in roots {
        let v = h.evaluate(r);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            return None;
        };
        match sign {
            None => sign = Some(s),
            Some(t) if t != s => return None,
            _ => {}
        }
    }
    sign
}

pub fn classify(spec: &DomainSpec) -> ClassificationReport {
    let rs = spec.root_system();
    let dec = spec.decomposition();
    let s = spec.split();
    let center = hermitian_center(spec);

    let fibration = match center.as_ref().map(|h| uniform_sign(h, &s.q_minus)) {
        Some(Some(-1)) => Fibration::Holomorphic,
        Some(Some(_)) => Fibration::Antiholomorphic,
        _ => Fibration::None,
    };
    let classical = fibration != Fibration::None;

    let even = rs.roots().len() - s.q_plus.len() - s.q_minus.len();
    let dim_k = rs.rank() + even;
    let dim_q = s.q_plus.len() + s.q_minus.len();
    let f = compute_f(spec);

    ClassificationReport {
        root_type: rs.root_type(),
        labels: spec.labels().to_vec(),
        rank: rs.rank(),
        dim_g: rs.algebra_dim(),
        dim_k,
        dim_q,
        depth: dec.depth(),
        dim_c_d: dec.negative_count(),
        dim_c_z: s.k_minus.len(),
        dim_c_u: if classical { dim_q / 2 } else { dim_q },
        real_tangent_dims: (1..=dec.depth()).map(|l| 2 * dec.level(l).len()).collect(),
        hermitian_gk: center.is_some(),
        fibration,
        classical,
        f_dims: f.dims(),
        bracket_generating: is_bracket_generating(spec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::parse_labels;
    use std::sync::Arc;

    fn spec(ty: &str, labels: &str) -> DomainSpec {
        let rs = Arc::new(RootSystem::new(ty.parse().unwrap()));
        DomainSpec::new(rs, parse_labels(labels).unwrap()).unwrap()
    }

    fn root(c: &[i32]) -> Root {
        Root::new(c.to_vec()).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn closure_examples() {
        let rs = RootSystem::new("A2".parse().unwrap());
        let c = lie_closure(&rs, &RootSupportedSubspace::from_roots(2, [root(&[1, 0]), root(&[0, 1])])).unwrap();
        let expect: BTreeSet<Root> = [root(&[1, 0]), root(&[0, 1]), root(&[1, 1])].into();
        assert_eq!(c.root_support(), &expect);
        assert!(c.cartan_part().is_zero());

        let c = lie_closure(&rs, &RootSupportedSubspace::from_roots(2, [root(&[1, 1]), root(&[-1, -1])])).unwrap();
        assert_eq!(c.root_support().len(), 2);
        assert_eq!(c.cartan_part().dim(), 1);
        assert!(c.cartan_part().contains(&[q(1), q(1)]));

        let c = lie_closure(&rs, &RootSupportedSubspace::from_roots(2, rs.roots().iter().cloned())).unwrap();
        assert_eq!(c.dim(), 8);
    }

    #[test]
    fn closure_rejects_foreign_roots() {
        let rs = RootSystem::new("A2".parse().unwrap());
        let seed = RootSupportedSubspace::from_roots(2, [root(&[2, 1])]);
        assert!(lie_closure(&rs, &seed).is_err());
    }

    #[test]
    fn bracket_generation_examples() {
        assert!(is_bracket_generating(&spec("A2", "Q,Q")));
        assert!(!is_bracket_generating(&spec("A2", "K,Q")));
        assert!(is_bracket_generating(&spec("C2", "Q,K")));
    }

    #[test]
    fn generation_sanity_examples() {
        assert_eq!(generation_sanity(&spec("A2", "K,Q")), (true, true));
        assert_eq!(generation_sanity(&spec("C2", "Q,Q")), (true, true));
    }

    #[test]
    fn f_examples() {
        assert_eq!(compute_f(&spec("A2", "Q,Q")).dims(), (0, 0, 0));
        let f = compute_f(&spec("A2", "K,Q"));
        assert_eq!(f.dims(), (2, 4, 2));
        assert_eq!(f.f_minus.iter().map(|r| -r).collect::<BTreeSet<_>>(), f.f_plus.iter().cloned().collect());
        assert_eq!(compute_f(&spec("C2", "Q,Q")).dims(), (0, 0, 0));
    }

    #[test]
    fn hermitian_center_examples() {
        assert_eq!(hermitian_center(&spec("A2", "Q,Q")), Some(Coweight::from_integers(&[1, -1])));
        assert_eq!(hermitian_center(&spec("C2", "Q,K")), None);
        assert_eq!(hermitian_center(&spec("A1", "Q")), Some(Coweight::from_integers(&[1])));
    }

    #[test]
    fn classify_examples() {
        let r = classify(&spec("A2", "K,Q"));
        assert!(r.classical && r.hermitian_gk);
        assert_eq!(r.fibration, Fibration::Holomorphic);
        assert_eq!(r.f_dims, (2, 4, 2));
        assert_eq!(r.depth, 3);

        let r = classify(&spec("A2", "Q,Q"));
        assert!(!r.classical && r.hermitian_gk);
        assert_eq!(r.fibration, Fibration::None);
        assert_eq!((r.dim_c_d, r.dim_c_z, r.depth), (3, 1, 2));
        assert!(r.bracket_generating);
        assert_eq!(r.dim_c_u, 4);

        let r = classify(&spec("C2", "Q,K"));
        assert!(!r.classical && !r.hermitian_gk);
    }

    #[test]
    fn classify_c2_matches_hand_table() {
        let rs = Arc::new(RootSystem::new("C2".parse().unwrap()));
        let classical: Vec<String> = DomainSpec::all(&rs)
            .iter()
            .filter(|s| classify(s).classical)
            .map(DomainSpec::labels_string)
            .collect();
        assert_eq!(classical, ["K,Q", "V,Q"]);
    }

    #[test]
    fn a1_is_the_disk() {
        let r = classify(&spec("A1", "Q"));
        assert!(r.classical);
        assert_eq!((r.dim_c_d, r.dim_c_z, r.dim_c_u), (1, 0, 1));
    }
}
