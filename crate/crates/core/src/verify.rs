//! Invariant suites behind the self-test. Each check returns the list of
//! violations it found, with a witness that pins down the failing instance.
//!
//! Also home to [`LieSpan`], a linear-algebra closure over exact brackets
//! used as an oracle for the combinatorial closure in [`crate::analysis`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    classify, compact_center_basis, compute_f, generation_sanity, is_bracket_generating, lie_closure,
    FIdeal, Fibration, RootSupportedSubspace,
};
use crate::chevalley::{BasisElement, LieElement, RealFormConjugation, StructureTable};
use crate::grading::DomainSpec;
use crate::linalg::RationalSubspace;
use crate::roots::{Root, RootSystem, RootSystemType};
use crate::Rational;

/// A failed invariant with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub invariant: String,
    pub witness: String,
}

impl Violation {
    fn new(invariant: &str, witness: impl Into<String>) -> Self {
        Self {
            invariant: invariant.to_string(),
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.invariant, self.witness)
    }
}

/// Outcome of one suite on one root system.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub suite: String,
    pub root_type: RootSystemType,
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

// ---------------------------------------------------------------- roots

pub fn check_roots(rs: &RootSystem) -> Vec<Violation> {
    let mut out = Vec::new();
    let ty = rs.root_type();
    if rs.roots().len() != ty.root_count() {
        out.push(Violation::new(
            "root count",
            format!("{ty}: {} roots, expected {}", rs.roots().len(), ty.root_count()),
        ));
    }
    for r in rs.roots() {
        if !rs.contains(&-r) {
            out.push(Violation::new("closed under negation", format!("{ty}: {r}")));
        }
        for i in 0..rs.rank() {
            let s = rs.simple_reflection(i, r);
            if !rs.contains(&s) {
                out.push(Violation::new(
                    "closed under simple reflections",
                    format!("{ty}: s_{}({r}) = {s}", i + 1),
                ));
            }
        }
    }
    for r in rs.positive_roots().iter().filter(|r| !r.is_simple()) {
        let descends = (0..rs.rank()).any(|i| {
            r.checked_sub(&Root::simple(rs.rank(), i))
                .is_some_and(|d| rs.contains(&d))
        });
        if !descends {
            out.push(Violation::new("height descent", format!("{ty}: {r}")));
        }
    }
    let top = rs.highest_root();
    for r in rs.positive_roots() {
        if r.coeffs().iter().zip(top.coeffs()).any(|(a, b)| a > b) {
            out.push(Violation::new(
                "highest root dominates",
                format!("{ty}: {r} not below {top}"),
            ));
        }
    }
    out
}

// ------------------------------------------------------------ chevalley

type Sparse = Vec<(BasisElement, i64)>;

fn accumulate(into: &mut BTreeMap<BasisElement, i64>, terms: &[(BasisElement, i64)], scale: i64) {
    for &(b, c) in terms {
        let e = into.entry(b).or_insert(0);
        *e += c * scale;
        if *e == 0 {
            into.remove(&b);
        }
    }
}

/// `[x, [y, z]]` for basis elements, with integer coefficients.
fn nested(t: &StructureTable, x: BasisElement, y: BasisElement, z: BasisElement) -> Sparse {
    let mut acc = BTreeMap::new();
    for (e, c) in t.bracket_basis(y, z) {
        accumulate(&mut acc, &t.bracket_basis(x, e), c);
    }
    acc.into_iter().collect()
}

fn jacobi_defect(t: &StructureTable, x: BasisElement, y: BasisElement, z: BasisElement) -> Sparse {
    let mut acc = BTreeMap::new();
    accumulate(&mut acc, &nested(t, x, y, z), 1);
    accumulate(&mut acc, &nested(t, y, z, x), 1);
    accumulate(&mut acc, &nested(t, z, x, y), 1);
    acc.into_iter().collect()
}

fn describe(t: &StructureTable, b: BasisElement) -> String {
    match b {
        BasisElement::Cartan(i) => format!("h{}", i + 1),
        BasisElement::RootVector(i) => format!("x{}", t.root_system().root(i)),
    }
}

/// How many basis triples the Jacobi check visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobiMode {
    Exhaustive,
    Sampled { triples: usize, seed: u64 },
}

/// Jacobi identity on basis triples; returns violations and the number of
/// triples checked.
pub fn check_jacobi(t: &StructureTable, mode: JacobiMode) -> (Vec<Violation>, usize) {
    let basis = t.basis();
    let n = basis.len();
    let mut out = Vec::new();
    let mut report = |x, y, z| {
        let d = jacobi_defect(t, x, y, z);
        if !d.is_empty() {
            out.push(Violation::new(
                "Jacobi identity",
                format!(
                    "{}: ({}, {}, {})",
                    t.system(),
                    describe(t, x),
                    describe(t, y),
                    describe(t, z)
                ),
            ));
        }
    };
    let mut count = 0;
    match mode {
        JacobiMode::Exhaustive => {
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        report(basis[i], basis[j], basis[k]);
                        count += 1;
                    }
                }
            }
        }
        JacobiMode::Sampled { triples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..triples {
                let pick: Vec<BasisElement> = basis.choose_multiple(&mut rng, 3).copied().collect();
                report(pick[0], pick[1], pick[2]);
                count += 1;
            }
        }
    }
    (out, count)
}

/// Antisymmetry and `|N_{α,β}| = p + 1` on every stored constant.
pub fn check_structure_constants(t: &StructureTable) -> (Vec<Violation>, usize) {
    let rs = t.root_system();
    let mut out = Vec::new();
    let mut count = 0;
    for ((i, j), n) in t.constants() {
        count += 1;
        let (a, b) = (rs.root(i), rs.root(j));
        let p = rs.string_down(a, b) as i64;
        if n.abs() != p + 1 {
            out.push(Violation::new(
                "|N| = p + 1",
                format!("{}: N({a}, {b}) = {n}, p = {p}", t.system()),
            ));
        }
        if t.constant_by_index(j, i) != Some(-n) {
            out.push(Violation::new(
                "N antisymmetric",
                format!("{}: N({a}, {b}) = {n}", t.system()),
            ));
        }
    }
    (out, count)
}

/// Sign law `B(x, θx) < 0` on compact root vectors and the Cartan,
/// `> 0` on noncompact root vectors; computed through the Killing form.
pub fn check_killing_signs(t: &StructureTable, spec: &DomainSpec) -> (Vec<Violation>, usize) {
    let rs = t.root_system();
    let conj = RealFormConjugation::new(rs, spec.parity()).expect("parity of a grading is additive");
    let mut out = Vec::new();
    let mut count = 0;
    for b in t.basis() {
        let x = LieElement::basis(t.system(), b);
        let cx = conj.conjugate(&x).expect("same system");
        let v = t.killing_form(&x, &cx).expect("same system");
        let compact = match b {
            BasisElement::Cartan(_) => true,
            BasisElement::RootVector(i) => conj.parity(i) == 0,
        };
        let ok = if compact { v < Rational::zero() } else { v > Rational::zero() };
        count += 1;
        if !ok {
            out.push(Violation::new(
                "Killing sign law",
                format!("{spec}: B({0}, conj {0}) = {v}", describe(t, b)),
            ));
        }
    }
    (out, count)
}

/// Conjugation is an involutive automorphism and maps level `l` to `-l`.
pub fn check_conjugation(t: &StructureTable, spec: &DomainSpec) -> (Vec<Violation>, usize) {
    let rs = t.root_system();
    let conj = RealFormConjugation::new(rs, spec.parity()).expect("parity of a grading is additive");
    let basis = t.basis();
    let image = |b: BasisElement| -> (BasisElement, i64) {
        let c = conj
            .conjugate(&LieElement::basis(t.system(), b))
            .expect("same system");
        let (e, k) = c.leading().expect("nonzero image");
        (e, if k.is_one() { 1 } else { -1 })
    };
    let images: BTreeMap<BasisElement, (BasisElement, i64)> = basis.iter().map(|&b| (b, image(b))).collect();
    let mut out = Vec::new();
    let mut count = 0;

    for &b in &basis {
        let (e, s) = images[&b];
        let (e2, s2) = images[&e];
        count += 1;
        if e2 != b || s * s2 != 1 {
            out.push(Violation::new("conjugation involutive", format!("{spec}: {}", describe(t, b))));
        }
    }

    let conj_sparse = |terms: &[(BasisElement, i64)]| -> Sparse {
        let mut acc = BTreeMap::new();
        for &(b, c) in terms {
            let (e, s) = images[&b];
            accumulate(&mut acc, &[(e, s)], c);
        }
        acc.into_iter().collect()
    };
    for (i, &a) in basis.iter().enumerate() {
        for &b in &basis[i..] {
            let lhs = conj_sparse(&t.bracket_basis(a, b));
            let (ea, sa) = images[&a];
            let (eb, sb) = images[&b];
            let mut rhs: Sparse = t.bracket_basis(ea, eb);
            for term in rhs.iter_mut() {
                term.1 *= sa * sb;
            }
            let mut rhs_map = BTreeMap::new();
            accumulate(&mut rhs_map, &rhs, 1);
            let rhs: Sparse = rhs_map.into_iter().collect();
            count += 1;
            if lhs != rhs {
                out.push(Violation::new(
                    "conjugation is an automorphism",
                    format!("{spec}: ({}, {})", describe(t, a), describe(t, b)),
                ));
            }
        }
    }

    let dec = spec.decomposition();
    for i in 0..rs.roots().len() {
        let (e, _) = images[&BasisElement::RootVector(i)];
        let BasisElement::RootVector(j) = e else {
            out.push(Violation::new("conjugation maps root vectors to root vectors", format!("{spec}: {}", rs.root(i))));
            continue;
        };
        count += 1;
        if dec.level_of_index(j) != -dec.level_of_index(i) {
            out.push(Violation::new(
                "conjugation reverses levels",
                format!("{spec}: {}", rs.root(i)),
            ));
        }
    }
    (out, count)
}

// -------------------------------------------------------------- grading

pub fn check_grading(spec: &DomainSpec) -> (Vec<Violation>, usize) {
    let rs = spec.root_system();
    let dec = spec.decomposition();
    let aux = spec.auxiliary_decomposition();
    let lv = dec.level_by_index();
    let n = rs.roots().len();
    let mut out = Vec::new();
    let mut count = 0;

    for i in 0..n {
        for j in 0..n {
            if let Some(s) = rs.sum_index(i, j) {
                count += 1;
                if lv[s] != lv[i] + lv[j] {
                    out.push(Violation::new(
                        "grading additivity",
                        format!("{spec}: {} + {}", rs.root(i), rs.root(j)),
                    ));
                }
            }
        }
        count += 2;
        if (lv[i] % 2 == 0) != (aux.level_of_index(i) % 2 == 0) {
            out.push(Violation::new("parity coherence", format!("{spec}: {}", rs.root(i))));
        }
        if lv[rs.neg_index(i)] != -lv[i] {
            out.push(Violation::new("level symmetry", format!("{spec}: {}", rs.root(i))));
        }
    }

    let total: usize = dec.levels().values().map(Vec::len).sum();
    count += 1;
    if total + rs.rank() != rs.root_type().algebra_dim() {
        out.push(Violation::new("dimension count", format!("{spec}: {total} + {}", rs.rank())));
    }

    let s = spec.split();
    count += 3;
    let neg_set = |v: &[Root]| v.iter().map(|r| -r).collect::<BTreeSet<_>>();
    let set = |v: &[Root]| v.iter().cloned().collect::<BTreeSet<_>>();
    if neg_set(&s.k_plus) != set(&s.k_minus) || neg_set(&s.q_plus) != set(&s.q_minus) {
        out.push(Violation::new("split symmetry", spec.to_string()));
    }
    if s.v_roots.len() != dec.level(0).len() {
        out.push(Violation::new("v is level 0", spec.to_string()));
    }
    let even = lv.iter().filter(|l| *l % 2 == 0).count();
    if s.v_roots.len() + s.k_plus.len() + s.k_minus.len() != even {
        out.push(Violation::new("k is the even part", spec.to_string()));
    }
    (out, count)
}

// ------------------------------------------------------------- analysis

/// Whether `x` lies in the root-supported subspace spanned by `roots` and
/// `cartan`.
fn in_root_supported(
    x: &LieElement,
    rs: &RootSystem,
    roots: &BTreeSet<Root>,
    cartan: &RationalSubspace,
) -> bool {
    let mut h = vec![Rational::zero(); rs.rank()];
    for (b, c) in x.terms() {
        match *b {
            BasisElement::Cartan(k) => h[k] = c.clone(),
            BasisElement::RootVector(i) => {
                if !roots.contains(rs.root(i)) {
                    return false;
                }
            }
        }
    }
    cartan.contains(&h)
}

fn f_generators(rs: &RootSystem, f: &FIdeal) -> Vec<LieElement> {
    let ty = rs.root_type();
    let mut gens: Vec<LieElement> = f
        .roots()
        .iter()
        .map(|r| LieElement::root_vector(rs, r).expect("root of this system"))
        .collect();
    gens.extend(
        f.f_zero
            .cartan_part()
            .basis()
            .iter()
            .map(|v| LieElement::cartan(ty, v)),
    );
    gens
}

/// `[g, f] ⊆ f`, checked by brute force over the basis of `g` and a basis of
/// `f` using exact brackets.
pub fn check_f_ideal(t: &StructureTable, spec: &DomainSpec, f: &FIdeal) -> (Vec<Violation>, usize) {
    let rs = t.root_system();
    let roots = f.roots();
    let cartan = f.f_zero.cartan_part();
    let gens = f_generators(rs, f);
    let mut out = Vec::new();
    let mut count = 0;
    for b in t.basis() {
        let eb = LieElement::basis(t.system(), b);
        for g in &gens {
            let br = t.bracket(&eb, g).expect("same system");
            count += 1;
            if !in_root_supported(&br, rs, &roots, cartan) {
                out.push(Violation::new(
                    "f is an ideal",
                    format!("{spec}: [{}, {g}] = {br}", describe(t, b)),
                ));
                return (out, count);
            }
        }
    }
    (out, count)
}

/// Support-level laws making `f` an ideal, the bracket relations among
/// `k_-`, `q_+` and `k_C ∩ p`, and the report invariants.
pub fn check_analysis(t: &StructureTable, spec: &DomainSpec) -> (Vec<Violation>, usize) {
    let rs = t.root_system();
    let report = classify(spec);
    let f = compute_f(spec);
    let bg = is_bracket_generating(spec);
    let mut out = Vec::new();
    let mut count = 0;

    count += 2;
    let f_nonzero = !f.is_zero();
    if report.classical != f_nonzero || f_nonzero == bg {
        out.push(Violation::new(
            "classical <=> f != 0 <=> not bracket generating",
            format!("{spec}: classical={}, f_dims={:?}, bracket_generating={bg}", report.classical, f.dims()),
        ));
    }
    if generation_sanity(spec) != (true, true) {
        out.push(Violation::new(
            "generation sanity",
            format!("{spec}: {:?}", generation_sanity(spec)),
        ));
    }

    let (v, c) = check_f_ideal(t, spec, &f);
    out.extend(v);
    count += c;

    let aux = spec.auxiliary_decomposition();
    let fset = f.roots();
    for mu in &f.f_plus {
        for a in aux.level(1) {
            count += 1;
            if rs.root_sum(mu, a).expect("roots").is_some() {
                out.push(Violation::new("[f_1, g'_1] = 0", format!("{spec}: {mu} + {a}")));
            }
        }
    }
    for a in aux.level(0) {
        for mu in &fset {
            count += 1;
            if let Some(s) = rs.root_sum(a, mu).expect("roots") {
                if !fset.contains(&s) {
                    out.push(Violation::new("f is a g'_0-module", format!("{spec}: {a} + {mu}")));
                }
            } else if *a == -mu {
                let c = rs.coroot_coords(mu).expect("root");
                if !f.f_zero.cartan_part().contains(&c) {
                    out.push(Violation::new("f is a g'_0-module", format!("{spec}: coroot of {mu}")));
                }
            }
        }
    }

    let s = spec.split();
    let kset: BTreeSet<&Root> = s.k_minus.iter().chain(&s.kcap_p).collect();
    for (pairs, name) in [(&s.k_minus, "[k_-, k_-] in k_C ∩ (k_- + p)"), (&s.q_plus, "[q_+, q_+] in k_C ∩ p")] {
        for a in pairs.iter() {
            for b in pairs.iter() {
                if let Some(sum) = rs.root_sum(a, b).expect("roots") {
                    count += 1;
                    let ok = if name.starts_with("[q") {
                        s.kcap_p.contains(&sum)
                    } else {
                        kset.contains(&sum)
                    };
                    if !ok {
                        out.push(Violation::new(name, format!("{spec}: {a} + {b}")));
                    }
                }
            }
        }
    }

    count += 1;
    let has_compact = rs.roots().len() > s.q_plus.len() + s.q_minus.len();
    if has_compact && compact_center_basis(spec).len() > 1 {
        out.push(Violation::new("center of k_C has dimension <= 1", spec.to_string()));
    }

    count += 2;
    if report.dim_c_d != report.dim_c_z + report.dim_q / 2 {
        out.push(Violation::new("dim D = dim Z + dim q / 2", spec.to_string()));
    }
    if report.classical != (report.fibration != Fibration::None) {
        out.push(Violation::new("classical <=> fibration", spec.to_string()));
    }
    (out, count)
}

// ---------------------------------------------------------------- oracle

/// Subspace of `g_C` in echelon form, keyed by leading basis element.
#[derive(Debug, Clone)]
pub struct LieSpan {
    system: RootSystemType,
    rows: BTreeMap<BasisElement, LieElement>,
}

impl LieSpan {
    pub fn new(system: RootSystemType) -> Self {
        Self {
            system,
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &LieElement> {
        self.rows.values()
    }

    fn reduce(&self, mut v: LieElement) -> LieElement {
        let mut after: Option<BasisElement> = None;
        loop {
            let next = v
                .terms()
                .map(|(b, _)| *b)
                .find(|b| after.is_none_or(|a| *b > a) && self.rows.contains_key(b));
            let Some(k) = next else {
                return v;
            };
            let c = -v.coeff(k);
            v.add_scaled(&self.rows[&k], &c);
            after = Some(k);
        }
    }

    pub fn contains(&self, v: &LieElement) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v`; returns the normalized new row if the span grew.
    pub fn insert(&mut self, v: &LieElement) -> Option<LieElement> {
        assert_eq!(v.system(), self.system, "mixed systems");
        let r = self.reduce(v.clone());
        let (lead, c) = r.leading()?;
        let r = r.scaled(&(Rational::one() / c));
        self.rows.insert(lead, r.clone());
        Some(r)
    }

    /// Lie algebra generated by `seed`, by repeated brackets of basis rows.
    pub fn closure(t: &StructureTable, seed: &[LieElement]) -> Self {
        let mut span = Self::new(t.system());
        let mut all: Vec<LieElement> = Vec::new();
        let mut queue: Vec<LieElement> = Vec::new();
        for v in seed {
            if let Some(r) = span.insert(v) {
                queue.push(r);
            }
        }
        while let Some(x) = queue.pop() {
            all.push(x.clone());
            let mut k = 0;
            while k < all.len() {
                let br = t.bracket(&x, &all[k]).expect("same system");
                if let Some(r) = span.insert(&br) {
                    queue.push(r);
                }
                k += 1;
            }
        }
        span
    }
}

/// Random seed subspaces: compares [`lie_closure`] with [`LieSpan::closure`].
pub fn check_closure_oracle(t: &StructureTable, seeds: usize, rng_seed: u64) -> (Vec<Violation>, usize) {
    let rs = t.root_system();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut out = Vec::new();
    for _ in 0..seeds {
        let p = rng.random_range(0.05..0.5);
        let roots: Vec<Root> = rs.roots().iter().filter(|_| rng.random_bool(p)).cloned().collect();
        let mut seed = RootSupportedSubspace::from_roots(rs.rank(), roots.iter().cloned());
        let mut elems: Vec<LieElement> = roots
            .iter()
            .map(|r| LieElement::root_vector(rs, r).expect("root"))
            .collect();
        if rng.random_bool(0.25) {
            let h: Vec<Rational> = (0..rs.rank())
                .map(|_| Rational::from_integer(rng.random_range(-2i64..=2).into()))
                .collect();
            seed.insert_cartan(&h);
            elems.push(LieElement::cartan(t.system(), &h));
        }
        let comb = lie_closure(rs, &seed).expect("roots of this system");
        let lin = LieSpan::closure(t, &elems);

        let mut comb_span = LieSpan::new(t.system());
        for r in comb.root_support() {
            comb_span.insert(&LieElement::root_vector(rs, r).expect("root"));
        }
        for v in comb.cartan_part().basis() {
            comb_span.insert(&LieElement::cartan(t.system(), v));
        }
        let same = comb_span.dim() == lin.dim() && lin.rows().all(|v| comb_span.contains(v));
        if !same {
            let seed_str: Vec<String> = roots.iter().map(Root::to_string).collect();
            out.push(Violation::new(
                "combinatorial closure equals linear closure",
                format!(
                    "{}: seed [{}], combinatorial dim {}, linear dim {}",
                    t.system(),
                    seed_str.join(" "),
                    comb.dim(),
                    lin.dim()
                ),
            ));
        }
    }
    (out, seeds)
}

// -------------------------------------------------------------- selftest

/// Runs every suite on every type of rank `<= max_rank`. Structure tables
/// come from `make_table`, which lets tests inject faults.
pub fn selftest_with<F>(max_rank: usize, mut make_table: F) -> Vec<SuiteOutcome>
where
    F: FnMut(Arc<RootSystem>) -> StructureTable,
{
    let mut out = Vec::new();
    for ty in RootSystemType::all_up_to_rank(max_rank) {
        let rs = Arc::new(RootSystem::new(ty));
        let mut push = |suite: &str, (violations, checks): (Vec<Violation>, usize)| {
            out.push(SuiteOutcome {
                suite: suite.to_string(),
                root_type: ty,
                checks,
                violations,
            });
        };
        let v = check_roots(&rs);
        push("roots", (v, 1));

        let t = make_table(rs.clone());
        let mode = if ty.rank() <= 4 {
            JacobiMode::Exhaustive
        } else {
            JacobiMode::Sampled {
                triples: 20_000,
                seed: 0,
            }
        };
        push("chevalley/jacobi", check_jacobi(&t, mode));
        push("chevalley/constants", check_structure_constants(&t));

        let specs = DomainSpec::all(&rs);
        let mut merge = |name: &str, f: &dyn Fn(&DomainSpec) -> (Vec<Violation>, usize)| {
            let mut vs = Vec::new();
            let mut n = 0;
            for s in &specs {
                let (v, c) = f(s);
                vs.extend(v);
                n += c;
            }
            push(name, (vs, n));
        };
        if ty.rank() <= 3 {
            merge("chevalley/killing-signs", &|s| check_killing_signs(&t, s));
        }
        if ty.rank() <= 4 {
            merge("chevalley/conjugation", &|s| check_conjugation(&t, s));
        }
        merge("grading", &|s| check_grading(s));
        merge("analysis", &|s| check_analysis(&t, s));
        if ty.rank() <= 3 {
            push("analysis/closure-oracle", check_closure_oracle(&t, 20, 0));
        }
    }
    out
}

pub fn selftest(max_rank: usize) -> Vec<SuiteOutcome> {
    selftest_with(max_rank, StructureTable::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(s: &str) -> StructureTable {
        StructureTable::new(Arc::new(RootSystem::new(s.parse().unwrap())))
    }

    #[test]
    fn jacobi_holds_rank_two() {
        for s in ["A2", "B2", "C2", "G2"] {
            let (v, n) = check_jacobi(&table(s), JacobiMode::Exhaustive);
            assert!(v.is_empty(), "{v:?}");
            assert!(n > 0);
        }
    }

    #[test]
    fn corrupted_table_is_caught() {
        let mut t = table("A3");
        let (i, j) = t.constants().next().unwrap().0;
        let n = t.constant_by_index(i, j).unwrap();
        t.corrupt_constant(i, j, -n);
        let (v, _) = check_jacobi(&t, JacobiMode::Exhaustive);
        assert!(!v.is_empty());
        assert_eq!(v[0].invariant, "Jacobi identity");
    }

    #[test]
    fn lie_span_closure_of_simple_roots_a2() {
        let t = table("A2");
        let rs = t.root_system().clone();
        let seed: Vec<LieElement> = rs.roots()[..2]
            .iter()
            .map(|r| LieElement::root_vector(&rs, r).unwrap())
            .collect();
        assert_eq!(LieSpan::closure(&t, &seed).dim(), 3);
    }

    #[test]
    fn selftest_rank_two_passes() {
        for o in selftest(2) {
            assert!(o.passed(), "{} {}: {:?}", o.suite, o.root_type, o.violations);
        }
    }
}
