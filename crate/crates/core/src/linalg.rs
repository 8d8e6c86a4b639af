//! Exact rational linear algebra: canonical subspaces and kernels.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// A subspace of `Q^n`, kept in reduced row echelon form so that equal
/// subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSubspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
}

impl RationalSubspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Self::zero(ambient);
        for i in 0..ambient {
            let mut e = vec![Rational::zero(); ambient];
            e[i] = Rational::one();
            s.insert(&e);
        }
        s
    }

    pub fn spanned_by<'a, I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a [Rational]>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Basis rows in reduced echelon form.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    fn pivot(row: &[Rational]) -> usize {
        row.iter()
            .position(|c| !c.is_zero())
            .expect("echelon rows are nonzero")
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for row in &self.rows {
            let p = Self::pivot(row);
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span. Returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        for x in r.iter_mut() {
            *x /= &lead;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x -= &f * y;
                }
            }
        }
        let at = self
            .rows
            .iter()
            .position(|row| Self::pivot(row) > p)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, r);
        true
    }

    pub fn contains_subspace(&self, other: &RationalSubspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}

/// Basis of `{x : A x = 0}` for the matrix whose rows are `rows`, each
/// basis vector scaled to a primitive integer vector whose first nonzero
/// entry is positive.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let rref = RationalSubspace::spanned_by(ncols, rows.iter().map(Vec::as_slice));
    let pivots: Vec<usize> = rref.rows.iter().map(|r| RationalSubspace::pivot(r)).collect();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in rref.rows.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        out.push(primitive(v));
    }
    out
}

/// Rescales a nonzero rational vector to a primitive integer vector with
/// positive leading entry.
pub fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let mut denom_lcm = num_bigint::BigInt::one();
    for c in &v {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<num_bigint::BigInt> = v
        .iter()
        .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut g = num_bigint::BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v;
    }
    let lead_neg = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if lead_neg {
        g = -g;
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &g))
        .collect()
}
