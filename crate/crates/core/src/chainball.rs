//! Chains of compact cycles in the flag domain of `SU(2,1)`.
//!
//! With `h = diag(1, 1, -1)` on `C^3`, the domain is
//! `D = {(F1, F2) : h|F1 > 0, h|F2 has signature (1,1)}`. A cycle parameter
//! `u = (W, L)` is a positive definite plane `W` and a negative line `L`;
//! its cycle is `Z_u = {(F1, F1 + L) : F1 ⊂ W} ⊂ D`, a projective line.
//!
//! [`connect`] joins two points by a chain `x ∈ Z_{u_1}`, `z_i ∈ Z_{u_i} ∩
//! Z_{u_{i+1}}`, `y ∈ Z_{u_k}`. Moves alternate between changing the cycle
//! through the current point and moving the point inside its cycle. Each
//! waypoint is an explicit intersection of planes:
//!
//! * `Z_{(W,L)} ∩ Z_{(W',L)}` contains `(W ∩ W', (W ∩ W') + L)`;
//! * `Z_{(W,L)} ∩ Z_{(W,L')}` contains `(W ∩ (L + L'), L + L')`.
//!
//! Two such moves reach any target, so chains have at most three cycles.
//! Free choices (which plane through a line, which negative line in a
//! plane) are sampled and refined to maximize the worst numerical margin;
//! every returned certificate is re-verified from scratch.

use std::fmt;

use nalgebra::{Matrix3, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

pub use num_complex::Complex64;

pub type C3 = Vector3<Complex64>;

pub const DEFAULT_TOL_MEM: f64 = 1e-9;
pub const DEFAULT_TOL_PSD: f64 = 1e-8;
pub const DEFAULT_N_SAMPLES: usize = 64;
pub const DEFAULT_N_RESTARTS: usize = 8;
pub const DEFAULT_KMAX: usize = 20;

/// Below this, a line or plane is treated as coinciding with another.
const COINCIDE: f64 = 1e-7;
/// Margin used when sampling random domain points.
const SAMPLER_MARGIN: f64 = 1e-3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChainError {
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("line is not contained in the plane (distance {0:.3e})")]
    NotAFlag(f64),
    #[error("flag is not in the domain")]
    NotInDomain,
    #[error("invalid cycle parameter: {0}")]
    InvalidCycle(String),
    #[error("sampler gave up after {0} attempts")]
    SamplerExhausted(usize),
}

// ------------------------------------------------------------ primitives

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `h(a, b) = a^* diag(1,1,-1) b`.
pub fn h_form(a: &C3, b: &C3) -> Complex64 {
    a[0].conj() * b[0] + a[1].conj() * b[1] - a[2].conj() * b[2]
}

fn h_norm(a: &C3) -> f64 {
    h_form(a, a).re
}

/// Bilinear cross product: `a · (a × b) = b · (a × b) = 0` without
/// conjugation, so it turns a plane basis into its annihilating functional
/// and two functionals into their common kernel.
fn cross(a: &C3, b: &C3) -> C3 {
    C3::new(
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
}

fn unit(v: &C3) -> Option<C3> {
    let n = v.norm();
    (n > 1e-300).then(|| v.unscale(n))
}

/// Orthonormal basis of `span(a, b)` whose first vector is parallel to `a`.
fn orthonormal_pair(a: &C3, b: &C3) -> Option<[C3; 2]> {
    let e1 = unit(a)?;
    let b2 = b - e1 * e1.dotc(b);
    if b2.norm() < COINCIDE * b.norm().max(1e-300) {
        return None;
    }
    Some([e1, unit(&b2)?])
}

fn project_plane(v: &C3, p: &[C3; 2]) -> C3 {
    p[0] * p[0].dotc(v) + p[1] * p[1].dotc(v)
}

/// Distance from the unit vector along `v` to the plane `p`.
fn line_plane_distance(v: &C3, p: &[C3; 2]) -> f64 {
    let u = unit(v).unwrap_or_else(C3::zeros);
    (u - project_plane(&u, p)).norm()
}

/// Eigenvalues `(min, max)` of `h` on an orthonormal plane basis.
fn plane_h_eigs(p: &[C3; 2]) -> (f64, f64) {
    let a = h_norm(&p[0]);
    let d = h_norm(&p[1]);
    let b = h_form(&p[0], &p[1]).norm();
    let mid = 0.5 * (a + d);
    let rad = (0.25 * (a - d) * (a - d) + b * b).sqrt();
    (mid - rad, mid + rad)
}

/// Common line of two planes and the sine of the angle between them.
fn intersect_planes(p: &[C3; 2], q: &[C3; 2]) -> Option<(C3, f64)> {
    let np = cross(&p[0], &p[1]);
    let nq = cross(&q[0], &q[1]);
    let d = cross(&np, &nq);
    let cond = d.norm() / (np.norm() * nq.norm());
    (cond > COINCIDE).then(|| (unit(&d).expect("nonzero"), cond))
}

/// Sine of the angle between two lines.
fn line_separation(a: &C3, b: &C3) -> f64 {
    match (unit(a), unit(b)) {
        (Some(a), Some(b)) => (1.0 - a.dotc(&b).norm_sqr()).max(0.0).sqrt(),
        _ => 0.0,
    }
}

fn projector_line(v: &C3) -> Matrix3<Complex64> {
    v * v.adjoint()
}

fn projector_plane(p: &[C3; 2]) -> Matrix3<Complex64> {
    p[0] * p[0].adjoint() + p[1] * p[1].adjoint()
}

// ------------------------------------------------------------------ flags

/// A full flag `F1 ⊂ F2 ⊂ C^3`: a unit vector and an orthonormal plane basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Flag {
    line: C3,
    plane: [C3; 2],
}

impl Flag {
    /// Flag `(span line, span(line, other))`.
    pub fn from_line_and(line: &C3, other: &C3) -> Result<Self, ChainError> {
        let plane = orthonormal_pair(line, other)
            .ok_or_else(|| ChainError::Degenerate("plane vectors are dependent".into()))?;
        Ok(Self {
            line: plane[0],
            plane,
        })
    }

    /// Flag from a line and any basis of a plane containing it, within `tol`.
    pub fn new(line: &C3, plane: [C3; 2], tol: f64) -> Result<Self, ChainError> {
        let l = unit(line).ok_or_else(|| ChainError::Degenerate("zero line vector".into()))?;
        let p = orthonormal_pair(&plane[0], &plane[1])
            .ok_or_else(|| ChainError::Degenerate("plane vectors are dependent".into()))?;
        let d = line_plane_distance(&l, &p);
        if d > tol {
            return Err(ChainError::NotAFlag(d));
        }
        Ok(Self { line: l, plane: p })
    }

    pub fn line(&self) -> &C3 {
        &self.line
    }

    pub fn plane(&self) -> &[C3; 2] {
        &self.plane
    }

    /// `g · F` for a linear map `g`.
    pub fn transform(&self, g: &Matrix3<Complex64>) -> Result<Self, ChainError> {
        Self::new(&(g * self.line), [g * self.plane[0], g * self.plane[1]], 1e-6)
    }

    /// `‖P_{F1} - P_{F1'}‖_F^2 + ‖P_{F2} - P_{F2'}‖_F^2`.
    pub fn distance_sq(&self, other: &Flag) -> f64 {
        (projector_line(&self.line) - projector_line(&other.line)).norm_squared()
            + (projector_plane(&self.plane) - projector_plane(&other.plane)).norm_squared()
    }
}

/// Signature margins of a flag: `h` on the unit line, and the two
/// eigenvalues of `h` on the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlagMargins {
    pub line: f64,
    pub plane_min: f64,
    pub plane_max: f64,
}

impl FlagMargins {
    pub fn of(f: &Flag) -> Self {
        let (plane_min, plane_max) = plane_h_eigs(&f.plane);
        Self {
            line: h_norm(&f.line),
            plane_min,
            plane_max,
        }
    }

    /// Smallest distance of any signature quantity from zero, signed so
    /// that it is positive exactly for points of `D`.
    pub fn worst(&self) -> f64 {
        self.line.min(-self.plane_min).min(self.plane_max)
    }
}

/// Whether `f` lies in `D`. Inputs whose signature quantities lie within
/// `tol_psd` of zero are reported as degenerate rather than classified.
pub fn in_domain(f: &Flag, tol_psd: f64) -> Result<bool, ChainError> {
    let m = FlagMargins::of(f);
    for (name, v) in [("h on F1", m.line), ("h on F2 (min)", m.plane_min), ("h on F2 (max)", m.plane_max)] {
        if v.abs() < tol_psd {
            return Err(ChainError::Degenerate(format!("{name} = {v:.3e}")));
        }
    }
    Ok(m.worst() > 0.0)
}

/// A flag known to lie in `D`.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainPoint {
    flag: Flag,
}

impl DomainPoint {
    pub fn new(flag: Flag, tol_psd: f64) -> Result<Self, ChainError> {
        if in_domain(&flag, tol_psd)? {
            Ok(Self { flag })
        } else {
            Err(ChainError::NotInDomain)
        }
    }

    pub fn flag(&self) -> &Flag {
        &self.flag
    }
}

// ----------------------------------------------------------------- cycles

/// `u = (W, L)`: an orthonormal basis of `W` and a unit vector along `L`.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleParam {
    w: [C3; 2],
    l: C3,
}

impl CycleParam {
    /// Normalizes the inputs; does not check the signature conditions.
    pub fn new(w0: &C3, w1: &C3, l: &C3) -> Result<Self, ChainError> {
        let w = orthonormal_pair(w0, w1)
            .ok_or_else(|| ChainError::Degenerate("W vectors are dependent".into()))?;
        let l = unit(l).ok_or_else(|| ChainError::Degenerate("zero L vector".into()))?;
        Ok(Self { w, l })
    }

    pub fn w(&self) -> &[C3; 2] {
        &self.w
    }

    pub fn l(&self) -> &C3 {
        &self.l
    }

    /// Worst of: smallest eigenvalue of `h|W`, `-h(L̂)`, and
    /// `|det[w0 w1 L̂]|` (transversality of `W` and `L`).
    pub fn margin(&self) -> f64 {
        let (wmin, _) = plane_h_eigs(&self.w);
        let det = Matrix3::from_columns(&[self.w[0], self.w[1], self.l]).determinant().norm();
        wmin.min(-h_norm(&self.l)).min(det)
    }

    pub fn validate(&self, tol_psd: f64) -> Result<(), ChainError> {
        let (wmin, _) = plane_h_eigs(&self.w);
        if wmin < tol_psd {
            return Err(ChainError::InvalidCycle(format!("h|W min eigenvalue {wmin:.3e}")));
        }
        let hl = h_norm(&self.l);
        if hl > -tol_psd {
            return Err(ChainError::InvalidCycle(format!("h(L) = {hl:.3e}")));
        }
        let det = Matrix3::from_columns(&[self.w[0], self.w[1], self.l]).determinant().norm();
        if det < tol_psd {
            return Err(ChainError::InvalidCycle(format!("W + L degenerate, det {det:.3e}")));
        }
        Ok(())
    }

    pub fn transform(&self, g: &Matrix3<Complex64>) -> Result<Self, ChainError> {
        Self::new(&(g * self.w[0]), &(g * self.w[1]), &(g * self.l))
    }

    /// The point `(F1, F1 + L)` of `Z_u` over a line `F1 ⊂ W`.
    pub fn point_over(&self, line: &C3) -> Result<Flag, ChainError> {
        Flag::from_line_and(line, &self.l)
    }
}

/// `W = span(e1, e2)`, `L = span(e3)`: the fiber over the base point.
pub fn base_cycle() -> CycleParam {
    let e = |i: usize| {
        let mut v = C3::zeros();
        v[i] = c(1.0);
        v
    };
    CycleParam::new(&e(0), &e(1), &e(2)).expect("standard basis")
}

/// `max(dist(F1, W), dist(L, F2))`; zero exactly when `x ∈ Z_u`.
pub fn membership_residual(x: &Flag, u: &CycleParam) -> f64 {
    line_plane_distance(&x.line, &u.w).max(line_plane_distance(&u.l, &x.plane))
}

pub fn member(x: &Flag, u: &CycleParam, tol_mem: f64) -> bool {
    membership_residual(x, u) <= tol_mem
}

/// Moves `y` into `Z_u`: the line becomes the orthogonal projection of
/// `y`'s line onto `W` (or the first basis vector of `W` when that
/// projection is below `tol_mem`), and the plane is that line plus `L`.
pub fn project_to_cycle(y: &Flag, u: &CycleParam, tol_mem: f64) -> Flag {
    let p = project_plane(&y.line, &u.w);
    let line = if p.norm() < tol_mem { u.w[0] } else { p };
    u.point_over(&line).expect("W and L are transversal")
}

// ------------------------------------------------- cycles through a point

/// `h`-orthonormal pair `(e+, e-)` spanning the `h`-orthogonal complement of
/// a positive vector `v`: eigenvectors of `h` on an orthonormal basis of
/// that complement, with phases fixed so the largest entry is real positive.
fn complement_basis(v: &C3) -> (C3, C3) {
    let hv = C3::new(v[0], v[1], -v[2]);
    let u = unit(&hv).expect("nonzero");
    let j = (0..3)
        .min_by(|&a, &b| u[a].norm().total_cmp(&u[b].norm()))
        .expect("three entries");
    let mut ej = C3::zeros();
    ej[j] = c(1.0);
    let q1 = unit(&(ej - u * u.dotc(&ej))).expect("independent");
    let q2 = cross(&u, &q1).map(|z| z.conj());

    let a = h_norm(&q1);
    let d = h_norm(&q2);
    let b = h_form(&q1, &q2);
    let mid = 0.5 * (a + d);
    let rad = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    let eigvec = |lambda: f64| {
        let v1 = (b, c(lambda - a));
        let v2 = (c(lambda - d), b.conj());
        let (x, y) = if v1.0.norm_sqr() + v1.1.norm_sqr() >= v2.0.norm_sqr() + v2.1.norm_sqr() {
            v1
        } else {
            v2
        };
        let w = q1 * x + q2 * y;
        let k = (0..3)
            .max_by(|&p, &q| w[p].norm().total_cmp(&w[q].norm()))
            .expect("three entries");
        let phase = w[k].conj() / w[k].norm();
        let w = w * phase;
        w.unscale(h_norm(&w).abs().sqrt())
    };
    (eigvec(mid + rad), eigvec(mid - rad))
}

/// Positive definite plane through the positive line `v`, indexed by a
/// point `s` of the unit disk: `W(s) = span(v, e+ + s e-)`.
fn plane_through(v: &C3, s: Complex64) -> [C3; 2] {
    let (ep, em) = complement_basis(v);
    orthonormal_pair(v, &(ep + em * s)).expect("independent")
}

/// Negative line inside the (1,1) plane `p` containing the positive line
/// `v`, indexed by a point `s` of the unit disk: `L(s) = n + s v̂` with `n`
/// the `h`-normalized `h`-complement of `v` in `p`.
fn negative_line_in(v: &C3, p: &[C3; 2], s: Complex64) -> C3 {
    let vh = v.unscale(h_norm(v).sqrt());
    let other = if p[0].dotc(v).norm() < p[1].dotc(v).norm() { p[0] } else { p[1] };
    let o = other - v * (v.dotc(&other) / v.norm_squared());
    let n = o - vh * h_form(&vh, &o);
    let n = n.unscale((-h_norm(&n)).sqrt());
    unit(&(n + vh * s)).expect("nonzero")
}

/// The cycle `(W(s_w), L(s_l))` through `x`, for disk parameters
/// `|s_w|, |s_l| < 1`. Every cycle of this family contains `x`.
pub fn cycle_through(x: &Flag, s_w: Complex64, s_l: Complex64) -> Result<CycleParam, ChainError> {
    if s_w.norm() >= 1.0 || s_l.norm() >= 1.0 {
        return Err(ChainError::InvalidCycle("disk parameter outside the unit disk".into()));
    }
    if h_norm(&x.line) <= 0.0 {
        return Err(ChainError::NotInDomain);
    }
    Ok(CycleParam {
        w: plane_through(&x.line, s_w),
        l: negative_line_in(&x.line, &x.plane, s_l),
    })
}

// ---------------------------------------------------------------- connect

/// Search and verification parameters of [`connect_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainParams {
    pub tol_mem: f64,
    pub tol_psd: f64,
    /// Maximum number of moves that change the cycle; a chain has at most
    /// `kmax + 1` cycles.
    pub kmax: usize,
    pub n_samples: usize,
    pub n_restarts: usize,
}

impl Default for ChainParams {
    fn default() -> Self {
        Self {
            tol_mem: DEFAULT_TOL_MEM,
            tol_psd: DEFAULT_TOL_PSD,
            kmax: DEFAULT_KMAX,
            n_samples: DEFAULT_N_SAMPLES,
            n_restarts: DEFAULT_N_RESTARTS,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainCertificate {
    pub x: DomainPoint,
    pub y: DomainPoint,
    pub cycles: Vec<CycleParam>,
    pub waypoints: Vec<DomainPoint>,
    /// Membership residuals in chain order: `x ∈ u_1`, then
    /// `z_i ∈ u_i`, `z_i ∈ u_{i+1}`, and finally `y ∈ u_k`.
    pub residuals: Vec<f64>,
    pub seed: u64,
}

impl ChainCertificate {
    /// Number of cycles.
    pub fn k(&self) -> usize {
        self.cycles.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainFailure {
    pub best_residual: f64,
    pub cycles_reached: usize,
    pub seed: u64,
    pub reason: String,
}

impl fmt::Display for ChainFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no chain found (seed {}, {} cycles tried, best residual {:.3e}): {}",
            self.seed, self.cycles_reached, self.best_residual, self.reason
        )
    }
}

impl std::error::Error for ChainFailure {}

/// Re-checks a certificate using only [`member`], [`in_domain`] and
/// [`CycleParam::validate`]. Returns the membership residuals.
pub fn verify_certificate(cert: &ChainCertificate, p: &ChainParams) -> Result<Vec<f64>, String> {
    let k = cert.cycles.len();
    if k == 0 {
        return Err("no cycles".into());
    }
    if k > p.kmax + 1 {
        return Err(format!("{k} cycles exceed kmax + 1 = {}", p.kmax + 1));
    }
    if cert.waypoints.len() + 1 != k {
        return Err(format!("{} waypoints for {k} cycles", cert.waypoints.len()));
    }
    for (i, u) in cert.cycles.iter().enumerate() {
        u.validate(p.tol_psd).map_err(|e| format!("cycle {i}: {e}"))?;
    }
    let points = std::iter::once(&cert.x)
        .chain(&cert.waypoints)
        .chain(std::iter::once(&cert.y));
    for (i, pt) in points.enumerate() {
        match in_domain(pt.flag(), p.tol_psd) {
            Ok(true) => {}
            Ok(false) => return Err(format!("point {i} not in the domain")),
            Err(e) => return Err(format!("point {i}: {e}")),
        }
    }
    let residuals = chain_residuals(cert);
    if let Some((i, r)) = residuals
        .iter()
        .enumerate()
        .find(|(_, &r)| r.is_nan() || r > p.tol_mem)
    {
        return Err(format!("membership residual {i} is {r:.3e}"));
    }
    Ok(residuals)
}

/// Membership residuals in certificate order.
fn chain_residuals(cert: &ChainCertificate) -> Vec<f64> {
    let k = cert.cycles.len();
    let mut residuals = vec![membership_residual(cert.x.flag(), &cert.cycles[0])];
    for (i, z) in cert.waypoints.iter().enumerate() {
        residuals.push(membership_residual(z.flag(), &cert.cycles[i]));
        residuals.push(membership_residual(z.flag(), &cert.cycles[i + 1]));
    }
    residuals.push(membership_residual(cert.y.flag(), &cert.cycles[k - 1]));
    residuals
}

/// Shape of a chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Plan {
    /// One cycle through both points.
    Single,
    /// `(W, L_x)`, `(W, L_y)` with `W = F1^x + F1^y`.
    SharedPlane,
    /// `(W_x, L)`, `(W_y, L)` with `L = F2^x ∩ F2^y`.
    SharedLine,
    /// `(W_x, L_x)`, `(W_y, L_x)`, `(W_y, L_y)`.
    Three,
}

impl Plan {
    fn cycles(self) -> usize {
        match self {
            Plan::Single => 1,
            Plan::SharedPlane | Plan::SharedLine => 2,
            Plan::Three => 3,
        }
    }
}

struct Candidate {
    cycles: Vec<CycleParam>,
    waypoints: Vec<Flag>,
    score: f64,
}

/// Data shared by all plans for a fixed pair.
struct Pair<'a> {
    x: &'a Flag,
    y: &'a Flag,
    /// `F1^x + F1^y`, if the lines differ.
    span: Option<[C3; 2]>,
    /// `F2^x ∩ F2^y`, if the planes differ.
    meet: Option<C3>,
}

impl Pair<'_> {
    /// Number of disk parameters a plan consumes.
    fn n_params(&self, plan: Plan) -> usize {
        match plan {
            Plan::Single => usize::from(self.span.is_none()) + usize::from(self.meet.is_none()),
            Plan::SharedPlane | Plan::SharedLine => 2,
            Plan::Three => 4,
        }
    }

    fn applicable(&self, plan: Plan, tol_psd: f64) -> bool {
        let span_ok = self.span.is_none_or(|w| plane_h_eigs(&w).0 >= tol_psd);
        let meet_ok = self.meet.is_none_or(|l| h_norm(&l) <= -tol_psd);
        match plan {
            Plan::Single => span_ok && meet_ok,
            Plan::SharedPlane => self.span.is_some() && span_ok,
            Plan::SharedLine => self.meet.is_some() && meet_ok,
            Plan::Three => true,
        }
    }

    fn build(&self, plan: Plan, s: &[Complex64]) -> Option<Candidate> {
        let (x, y) = (self.x, self.y);
        let mut conds = Vec::new();
        let (cycles, waypoints) = match plan {
            Plan::Single => {
                let mut it = s.iter().copied();
                let w = match self.span {
                    Some(w) => w,
                    None => plane_through(&x.line, it.next()?),
                };
                let l = match self.meet {
                    Some(l) => l,
                    None => negative_line_in(&x.line, &x.plane, it.next()?),
                };
                (vec![CycleParam { w, l }], Vec::new())
            }
            Plan::SharedPlane => {
                let w = self.span?;
                let lx = negative_line_in(&x.line, &x.plane, s[0]);
                let ly = negative_line_in(&y.line, &y.plane, s[1]);
                conds.push(line_separation(&lx, &ly));
                let ll = orthonormal_pair(&lx, &ly)?;
                let (z, cz) = intersect_planes(&w, &ll)?;
                conds.push(cz);
                let zf = Flag::from_line_and(&z, &lx).ok()?;
                (vec![CycleParam { w, l: lx }, CycleParam { w, l: ly }], vec![zf])
            }
            Plan::SharedLine => {
                let l = self.meet?;
                let wx = plane_through(&x.line, s[0]);
                let wy = plane_through(&y.line, s[1]);
                let (z, cz) = intersect_planes(&wx, &wy)?;
                conds.push(cz);
                let zf = Flag::from_line_and(&z, &l).ok()?;
                (vec![CycleParam { w: wx, l }, CycleParam { w: wy, l }], vec![zf])
            }
            Plan::Three => {
                let wx = plane_through(&x.line, s[0]);
                let lx = negative_line_in(&x.line, &x.plane, s[1]);
                let wy = plane_through(&y.line, s[2]);
                let ly = negative_line_in(&y.line, &y.plane, s[3]);
                let (z1, c1) = intersect_planes(&wx, &wy)?;
                conds.push(c1);
                conds.push(line_separation(&lx, &ly));
                let ll = orthonormal_pair(&lx, &ly)?;
                let (z2, c2) = intersect_planes(&wy, &ll)?;
                conds.push(c2);
                let zf1 = Flag::from_line_and(&z1, &lx).ok()?;
                let zf2 = Flag::from_line_and(&z2, &ly).ok()?;
                (
                    vec![
                        CycleParam { w: wx, l: lx },
                        CycleParam { w: wy, l: lx },
                        CycleParam { w: wy, l: ly },
                    ],
                    vec![zf1, zf2],
                )
            }
        };
        let score = cycles
            .iter()
            .map(CycleParam::margin)
            .chain(waypoints.iter().map(|f| FlagMargins::of(f).worst()))
            .chain(conds)
            .fold(f64::INFINITY, f64::min);
        Some(Candidate {
            cycles,
            waypoints,
            score,
        })
    }
}

fn random_disk(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = radius * rng.random::<f64>().sqrt();
    let t = std::f64::consts::TAU * rng.random::<f64>();
    Complex64::from_polar(r, t)
}

fn clamp_disk(s: Complex64, radius: f64) -> Complex64 {
    let n = s.norm();
    if n > radius {
        s * (radius / n)
    } else {
        s
    }
}

/// Sampling plus hill climbing over the disk parameters of one plan.
fn optimize(
    pair: &Pair,
    plan: Plan,
    start: Vec<Complex64>,
    n_samples: usize,
    rng: &mut ChaCha8Rng,
) -> Option<(Vec<Complex64>, f64)> {
    const RADIUS: f64 = 0.95;
    let n = start.len();
    let score = |s: &[Complex64]| pair.build(plan, s).map_or(f64::NEG_INFINITY, |c| c.score);
    let mut best = (start.clone(), score(&start));
    if n == 0 {
        return best.1.is_finite().then_some(best);
    }
    for _ in 0..n_samples {
        let s: Vec<Complex64> = (0..n).map(|_| random_disk(rng, RADIUS)).collect();
        let v = score(&s);
        if v > best.1 {
            best = (s, v);
        }
    }
    let mut step = 0.2;
    while step > 1e-3 {
        let mut improved = false;
        for _ in 0..8 {
            let s: Vec<Complex64> = best
                .0
                .iter()
                .map(|&z| clamp_disk(z + random_disk(rng, step), RADIUS))
                .collect();
            let v = score(&s);
            if v > best.1 {
                best = (s, v);
                improved = true;
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    best.1.is_finite().then_some(best)
}

/// [`connect_with`] with default sampling parameters.
pub fn connect(
    x: &DomainPoint,
    y: &DomainPoint,
    kmax: usize,
    seed: u64,
    tol: f64,
) -> Result<ChainCertificate, ChainFailure> {
    let params = ChainParams {
        tol_mem: tol,
        kmax,
        ..ChainParams::default()
    };
    connect_with(x, y, &params, seed)
}

/// Builds and verifies a chain of cycles from `x` to `y`. If no plan
/// verifies with the given budget, the search is repeated once with
/// `n_samples` and `n_restarts` multiplied by four.
pub fn connect_with(
    x: &DomainPoint,
    y: &DomainPoint,
    p: &ChainParams,
    seed: u64,
) -> Result<ChainCertificate, ChainFailure> {
    let (fx, fy) = (x.flag(), y.flag());
    let span = (line_separation(&fx.line, &fy.line) > COINCIDE)
        .then(|| orthonormal_pair(&fx.line, &fy.line))
        .flatten();
    let meet = intersect_planes(&fx.plane, &fy.plane).map(|(l, _)| l);
    let pair = Pair {
        x: fx,
        y: fy,
        span,
        meet,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best_residual = f64::INFINITY;
    let mut cycles_reached = 0;
    let mut reason = String::from("no applicable plan within kmax");
    for scale in [1, 4] {
        for plan in [Plan::Single, Plan::SharedPlane, Plan::SharedLine, Plan::Three] {
            if plan.cycles() > p.kmax + 1 || !pair.applicable(plan, p.tol_psd) {
                continue;
            }
            cycles_reached = cycles_reached.max(plan.cycles());
            let n = pair.n_params(plan);
            let restarts = if n == 0 { 1 } else { p.n_restarts * scale };
            for r in 0..restarts {
                let start = if r == 0 {
                    vec![Complex64::new(0.0, 0.0); n]
                } else {
                    (0..n).map(|_| random_disk(&mut rng, 0.95)).collect()
                };
                let Some((s, _)) = optimize(&pair, plan, start, p.n_samples * scale, &mut rng) else {
                    continue;
                };
                let Some(cand) = pair.build(plan, &s) else {
                    continue;
                };
                let Some(cert) = assemble(x, y, cand, seed, p.tol_psd) else {
                    reason = "waypoint outside the domain".into();
                    continue;
                };
                match verify_certificate(&cert, p) {
                    Ok(residuals) => return Ok(ChainCertificate { residuals, ..cert }),
                    Err(e) => {
                        let worst = chain_residuals(&cert).into_iter().fold(0.0, f64::max);
                        best_residual = best_residual.min(worst);
                        reason = e;
                    }
                }
            }
        }
    }
    Err(ChainFailure {
        best_residual,
        cycles_reached,
        seed,
        reason,
    })
}

fn assemble(x: &DomainPoint, y: &DomainPoint, cand: Candidate, seed: u64, tol_psd: f64) -> Option<ChainCertificate> {
    let waypoints = cand
        .waypoints
        .into_iter()
        .map(|f| DomainPoint::new(f, tol_psd).ok())
        .collect::<Option<Vec<_>>>()?;
    Some(ChainCertificate {
        x: x.clone(),
        y: y.clone(),
        cycles: cand.cycles,
        waypoints,
        residuals: Vec::new(),
        seed,
    })
}

// --------------------------------------------------------------- sampling

fn gaussian_c3<R: Rng + ?Sized>(rng: &mut R) -> C3 {
    C3::from_fn(|_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// Rejection-samples a point of `D` with all signature margins above
/// `1e-3`: a Gaussian line with `h > 0`, then a Gaussian plane through it
/// of signature (1,1).
pub fn random_domain_point<R: Rng + ?Sized>(rng: &mut R) -> Result<DomainPoint, ChainError> {
    const ATTEMPTS: usize = 10_000;
    for _ in 0..ATTEMPTS {
        let v = gaussian_c3(rng);
        let w = gaussian_c3(rng);
        let Ok(f) = Flag::from_line_and(&v, &w) else {
            continue;
        };
        if FlagMargins::of(&f).worst() > SAMPLER_MARGIN {
            return Ok(DomainPoint { flag: f });
        }
    }
    Err(ChainError::SamplerExhausted(ATTEMPTS))
}

/// `exp(X)` for a random `X ∈ su(2,1)` with entries of size about `scale`.
pub fn random_su21<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> Matrix3<Complex64> {
    let m = Matrix3::from_fn(|_, _| {
        Complex64::new(rng.sample::<f64, _>(StandardNormal), rng.sample::<f64, _>(StandardNormal)) * scale
    });
    let a = (m - m.adjoint()) * c(0.5);
    let h = Matrix3::from_diagonal(&Vector3::new(c(1.0), c(1.0), c(-1.0)));
    let x = h * a;
    let x = x - Matrix3::identity() * (x.trace() / c(3.0));
    x.exp()
}

/// Convenience: seeded sampler stream for a run.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
