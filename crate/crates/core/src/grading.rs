//! Grading elements of flag domains and the induced decomposition of the
//! complex Lie algebra.
//!
//! Each simple root carries a label:
//!
//! * `V`: the root space lies in `v`;
//! * `K`: compact, but not in `v`;
//! * `Q`: noncompact.
//!
//! The grading element is `T = Σ_Q T^i + 2 Σ_K T^i` and the auxiliary one is
//! `T' = Σ_Q T^i`. A root is compact exactly when its `T`-level is even,
//! equivalently when its `T'`-level is even.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::roots::{Coweight, Root, RootSystem, RootSystemType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("no noncompact simple root (at least one label must be Q)")]
    NoNoncompact,
    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("unknown label `{0}` (expected V, K or Q)")]
    BadLabel(String),
    #[error("coweight has rank {found}, root system has rank {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("coweight takes a non-integral value on root {0}")]
    NonIntegral(Root),
}

/// Label of a simple root. Variants are ordered alphabetically so that
/// sorting labelings sorts their string forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    K,
    Q,
    V,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::K, Label::Q, Label::V];

    pub fn as_char(self) -> char {
        match self {
            Label::K => 'K',
            Label::Q => 'Q',
            Label::V => 'V',
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Label {
    type Err = GradingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "V" | "v" => Ok(Label::V),
            "K" | "k" => Ok(Label::K),
            "Q" | "q" => Ok(Label::Q),
            other => Err(GradingError::BadLabel(other.to_string())),
        }
    }
}

/// Parses `"K,Q"` style label lists.
pub fn parse_labels(s: &str) -> Result<Vec<Label>, GradingError> {
    s.split(',').map(str::parse).collect()
}

/// Renders labels as `"K,Q"`.
pub fn format_labels(labels: &[Label]) -> String {
    labels
        .iter()
        .map(|l| l.as_char().to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A root system together with a valid labeling of its simple roots.
#[derive(Debug, Clone)]
pub struct DomainSpec {
    rs: Arc<RootSystem>,
    labels: Vec<Label>,
}

impl DomainSpec {
    pub fn new(rs: Arc<RootSystem>, labels: Vec<Label>) -> Result<Self, GradingError> {
        if labels.len() != rs.rank() {
            return Err(GradingError::LabelCount {
                expected: rs.rank(),
                found: labels.len(),
            });
        }
        if !labels.contains(&Label::Q) {
            return Err(GradingError::NoNoncompact);
        }
        Ok(Self { rs, labels })
    }

    /// All valid labelings of `rs`, in lexicographic order of labels.
    pub fn all(rs: &Arc<RootSystem>) -> Vec<DomainSpec> {
        let r = rs.rank();
        let total = 3usize.pow(r as u32);
        (0..total)
            .map(|mut code| {
                let mut labels = vec![Label::K; r];
                for slot in labels.iter_mut().rev() {
                    *slot = Label::ALL[code % 3];
                    code /= 3;
                }
                labels
            })
            .filter_map(|labels| DomainSpec::new(rs.clone(), labels).ok())
            .collect()
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn root_type(&self) -> RootSystemType {
        self.rs.root_type()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn labels_string(&self) -> String {
        format_labels(&self.labels)
    }

    /// `T = Σ_Q T^i + 2 Σ_K T^i`.
    pub fn grading_element(&self) -> Coweight {
        let c: Vec<i64> = self
            .labels
            .iter()
            .map(|l| match l {
                Label::Q => 1,
                Label::K => 2,
                Label::V => 0,
            })
            .collect();
        Coweight::from_integers(&c)
    }

    /// `T' = Σ_Q T^i`.
    pub fn auxiliary_grading(&self) -> Coweight {
        let c: Vec<i64> = self
            .labels
            .iter()
            .map(|l| i64::from(*l == Label::Q))
            .collect();
        Coweight::from_integers(&c)
    }

    pub fn decomposition(&self) -> GradedDecomposition {
        decompose(&self.rs, &self.grading_element()).expect("grading element is integral")
    }

    pub fn auxiliary_decomposition(&self) -> GradedDecomposition {
        decompose(&self.rs, &self.auxiliary_grading()).expect("T' is integral")
    }

    /// `T'(α) mod 2` per root index: 0 for compact roots, 1 for noncompact.
    pub fn parity(&self) -> Vec<u8> {
        self.auxiliary_decomposition()
            .level_by_index()
            .iter()
            .map(|l| l.rem_euclid(2) as u8)
            .collect()
    }

    pub fn split(&self) -> Splits {
        split(self)
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.rs.root_type(), self.labels_string())
    }
}

pub fn grading_element(spec: &DomainSpec) -> Coweight {
    spec.grading_element()
}

pub fn auxiliary_grading(spec: &DomainSpec) -> Coweight {
    spec.auxiliary_grading()
}

/// Eigenspace decomposition of the roots under a grading element. The
/// Cartan subalgebra always sits at level 0 and is not listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDecomposition {
    levels: BTreeMap<i64, Vec<Root>>,
    by_index: Vec<i64>,
    depth: i64,
}

impl GradedDecomposition {
    /// Roots at level `l`, in root-system order.
    pub fn level(&self, l: i64) -> &[Root] {
        self.levels.get(&l).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Nonempty levels in increasing order.
    pub fn levels(&self) -> &BTreeMap<i64, Vec<Root>> {
        &self.levels
    }

    /// Level of `roots()[i]`.
    pub fn level_of_index(&self, i: usize) -> i64 {
        self.by_index[i]
    }

    pub fn level_by_index(&self) -> &[i64] {
        &self.by_index
    }

    /// Largest `|l|` with a nonempty level.
    pub fn depth(&self) -> i64 {
        self.depth
    }

    /// Number of roots at negative levels, i.e. `dim_C g_-`.
    pub fn negative_count(&self) -> usize {
        self.by_index.iter().filter(|&&l| l < 0).count()
    }
}

/// Groups the roots of `rs` by the value of `w`.
pub fn decompose(rs: &RootSystem, w: &Coweight) -> Result<GradedDecomposition, GradingError> {
    if w.rank() != rs.rank() {
        return Err(GradingError::RankMismatch {
            expected: rs.rank(),
            found: w.rank(),
        });
    }
    let mut levels: BTreeMap<i64, Vec<Root>> = BTreeMap::new();
    let mut by_index = Vec::with_capacity(rs.roots().len());
    let ints = w.as_integers();
    for r in rs.roots() {
        let l = match &ints {
            Some(c) => c.iter().zip(r.coeffs()).map(|(a, &n)| a * n as i64).sum(),
            None => w
                .evaluate_integral(r)
                .ok_or_else(|| GradingError::NonIntegral(r.clone()))?,
        };
        levels.entry(l).or_default().push(r.clone());
        by_index.push(l);
    }
    let depth = by_index.iter().map(|l| l.abs()).max().unwrap_or(0);
    Ok(GradedDecomposition {
        levels,
        by_index,
        depth,
    })
}

/// The `v`/`k`/`q` splits of a labeling, each listed in root-system order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splits {
    /// Level 0.
    pub v_roots: Vec<Root>,
    /// Even positive levels.
    pub k_plus: Vec<Root>,
    /// Even negative levels.
    pub k_minus: Vec<Root>,
    /// Odd positive levels.
    pub q_plus: Vec<Root>,
    /// Odd negative levels.
    pub q_minus: Vec<Root>,
    /// Levels `≥ 0`: the roots of the parabolic `p`.
    pub p_roots: Vec<Root>,
    /// Even levels `≥ 0`.
    pub kcap_p: Vec<Root>,
}

pub fn split(spec: &DomainSpec) -> Splits {
    let dec = spec.decomposition();
    let mut s = Splits {
        v_roots: Vec::new(),
        k_plus: Vec::new(),
        k_minus: Vec::new(),
        q_plus: Vec::new(),
        q_minus: Vec::new(),
        p_roots: Vec::new(),
        kcap_p: Vec::new(),
    };
    for (r, &l) in spec.rs.roots().iter().zip(dec.level_by_index()) {
        let even = l % 2 == 0;
        match (l.signum(), even) {
            (0, _) => s.v_roots.push(r.clone()),
            (1, true) => s.k_plus.push(r.clone()),
            (1, false) => s.q_plus.push(r.clone()),
            (_, true) => s.k_minus.push(r.clone()),
            (_, false) => s.q_minus.push(r.clone()),
        }
        if l >= 0 {
            s.p_roots.push(r.clone());
            if even {
                s.kcap_p.push(r.clone());
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn spec(ty: &str, labels: &str) -> DomainSpec {
        let rs = Arc::new(RootSystem::new(ty.parse().unwrap()));
        DomainSpec::new(rs, parse_labels(labels).unwrap()).unwrap()
    }

    fn roots(v: &[&[i32]]) -> Vec<Root> {
        v.iter().map(|c| Root::new(c.to_vec()).unwrap()).collect()
    }

    #[test]
    fn grading_elements_a2() {
        let s = spec("A2", "K,Q");
        assert_eq!(s.grading_element(), Coweight::from_integers(&[2, 1]));
        assert_eq!(s.auxiliary_grading(), Coweight::from_integers(&[0, 1]));
        let s = spec("A2", "Q,Q");
        assert_eq!(s.grading_element(), Coweight::from_integers(&[1, 1]));
        assert_eq!(s.auxiliary_grading(), Coweight::from_integers(&[1, 1]));
    }

    #[test]
    fn labels_without_q_rejected() {
        let rs = Arc::new(RootSystem::new("A2".parse().unwrap()));
        let err = DomainSpec::new(rs.clone(), vec![Label::V, Label::K]).unwrap_err();
        assert_eq!(err, GradingError::NoNoncompact);
        assert!(err.to_string().contains("no noncompact simple root"));
        assert!(matches!(
            DomainSpec::new(rs, vec![Label::Q]),
            Err(GradingError::LabelCount { .. })
        ));
        assert!(parse_labels("K,X").is_err());
    }

    #[test]
    fn decompose_a2() {
        let rs = RootSystem::new("A2".parse().unwrap());
        let d = decompose(&rs, &Coweight::from_integers(&[2, 1])).unwrap();
        assert_eq!(d.level(1), roots(&[&[0, 1]]).as_slice());
        assert_eq!(d.level(2), roots(&[&[1, 0]]).as_slice());
        assert_eq!(d.level(3), roots(&[&[1, 1]]).as_slice());
        assert_eq!(d.level(-3), roots(&[&[-1, -1]]).as_slice());
        assert_eq!(d.depth(), 3);

        let d = decompose(&rs, &Coweight::from_integers(&[1, 1])).unwrap();
        assert_eq!(d.level(1), roots(&[&[1, 0], &[0, 1]]).as_slice());
        assert_eq!(d.level(2), roots(&[&[1, 1]]).as_slice());
        assert_eq!(d.depth(), 2);

        let d = decompose(&rs, &Coweight::zero(2)).unwrap();
        assert_eq!(d.levels().len(), 1);
        assert_eq!(d.level(0).len(), 6);
        assert_eq!(d.depth(), 0);
    }

    #[test]
    fn decompose_rejects_non_integral() {
        let rs = RootSystem::new("A1".parse().unwrap());
        let half = Rational::new(1.into(), 2.into());
        assert!(matches!(
            decompose(&rs, &Coweight::new(vec![half])),
            Err(GradingError::NonIntegral(_))
        ));
    }

    #[test]
    fn splits_examples() {
        let s = spec("A2", "Q,Q").split();
        assert_eq!(s.k_minus, roots(&[&[-1, -1]]));
        assert_eq!(s.q_plus, roots(&[&[1, 0], &[0, 1]]));
        assert!(s.v_roots.is_empty());

        let s = spec("C2", "K,Q").split();
        assert_eq!(s.k_minus, roots(&[&[-1, 0]]));
        assert_eq!(s.q_plus, roots(&[&[0, 1], &[1, 1], &[2, 1]]));

        let s = spec("A2", "V,Q").split();
        assert_eq!(s.v_roots, roots(&[&[1, 0], &[-1, 0]]));
        assert_eq!(s.q_plus, roots(&[&[0, 1], &[1, 1]]));
        assert!(s.k_plus.is_empty());
    }

    #[test]
    fn enumeration_counts_and_order() {
        let rs = Arc::new(RootSystem::new("A2".parse().unwrap()));
        let all = DomainSpec::all(&rs);
        assert_eq!(all.len(), 5);
        let names: Vec<String> = all.iter().map(DomainSpec::labels_string).collect();
        assert_eq!(names, ["K,Q", "Q,K", "Q,Q", "Q,V", "V,Q"]);
    }
}
