//! Self-check suites. Each returns a [`SuiteReport`] with one line per
//! configuration; the command line and the integration tests share them.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cosetfun::{
    coset_induce_offset, coset_inner, coset_restrict_offset, CosetClassFunction, CosetContext, PhiSource, WreathCoset,
};
use crate::cyclotomic::CycloNum;
use crate::groupspec::{analyze, levi_normalizer, weyl_group_with_top, FactorSpec, FixedStructure, GroupSpec};
use crate::partitions::{
    bareiss_determinant, character_table, degree_via_class_sum, enumerate_partitions, generic_degree_gl,
    kostka_matrix, signed_degree_via_class_sum, unitary_sign_and_degree, GroupType,
};
use crate::permwreath::{irr_labels, CompiledCharacter, FiniteGroup, GroupDescriptor, Perm, WreathSpec, DEFAULT_CAP};
use crate::twistmult::model::{Blocks, PointModel};
use crate::twistmult::{expand, integrality_basis_check, lemma51_crosscheck, step4_identities, LeviDatum, LeviSpec};
use crate::unipotent::{conn_labels, mellin, support_identity_weyl_model, unipotent_labels};

/// Suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "symmetric",
    "degrees",
    "unitary",
    "extensions",
    "clifford",
    "frobenius",
    "lemma51",
    "reexpansion",
    "kostka",
    "step4",
    "labels",
    "mellin",
    "orders",
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn push_result<E: std::fmt::Display>(&mut self, name: impl Into<String>, r: Result<(bool, String), E>) {
        match r {
            Ok((ok, detail)) => self.push(name, ok, detail),
            Err(e) => self.push(name, false, format!("error: {e}")),
        }
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}; expected one of {SUITES:?}")]
    UnknownSuite(String),
    #[error("{0}")]
    Input(String),
}

/// Options shared by the suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub spec: Option<GroupSpec>,
    pub seed: u64,
    pub cap: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            spec: None,
            seed: 0,
            cap: DEFAULT_CAP,
        }
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport, VerifyError> {
    let specs = |defaults: fn() -> Vec<(String, GroupSpec)>| match &opts.spec {
        Some(s) => vec![("spec".to_string(), s.clone())],
        None => defaults(),
    };
    Ok(match name {
        "symmetric" => symmetric_tables(7),
        "degrees" => linear_degrees(6),
        "unitary" => unitary_degrees(5),
        "extensions" => wreath_extensions(),
        "clifford" => wreath_clifford(opts.cap),
        "frobenius" => frobenius(opts.seed, 100),
        "lemma51" => match &opts.spec {
            Some(s) => lemma51_for_spec(s)?,
            None => lemma51(&[(2, 2), (2, 3), (3, 2)]),
        },
        "reexpansion" => reexpansion(),
        "kostka" => kostka(7),
        "step4" => step4(8),
        "labels" => label_counts(&specs(default_specs), opts.cap),
        "mellin" => mellin_support(&specs(default_specs)),
        "orders" => orders_at_two(),
        other => return Err(VerifyError::UnknownSuite(other.to_string())),
    })
}

/// Row and column orthogonality of the `S_n` tables and `sum dim^2 = n!`.
pub fn symmetric_tables(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("symmetric");
    for n in 1..=max_n {
        let t = character_table(n);
        let order: BigInt = (1..=n).map(BigInt::from).product();
        let k = t.partitions.len();
        let mut ok = true;
        for i in 0..k {
            for j in 0..k {
                let row: BigInt = (0..k)
                    .map(|c| BigInt::from(t.values[i][c] * t.values[j][c]) * (&order / &t.centralizers[c]))
                    .sum();
                let col: i64 = (0..k).map(|l| t.values[l][i] * t.values[l][j]).sum();
                let row_expected = if i == j { order.clone() } else { BigInt::zero() };
                let col_expected = if i == j { t.centralizers[i].clone() } else { BigInt::zero() };
                ok &= row == row_expected && BigInt::from(col) == col_expected;
            }
        }
        let dims: BigInt = t.partitions.iter().map(|p| BigInt::from(t.degree(p)).pow(2)).sum();
        ok &= dims == order;
        r.push(format!("S_{n}"), ok, format!("{k} classes, sum dim^2 = {dims}"));
    }
    r
}

/// Hook-formula degrees against the class sum of Deligne-Lusztig degrees.
pub fn linear_degrees(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("degrees");
    for n in 1..=max_n {
        let table = character_table(n);
        let mut bad = Vec::new();
        for l in enumerate_partitions(n) {
            let d = generic_degree_gl(&l);
            if d != degree_via_class_sum(&l, GroupType::Linear) || d.eval_i64(1) != BigInt::from(table.degree(&l)) {
                bad.push(l.to_string());
            }
        }
        r.push(format!("GL_{n}"), bad.is_empty(), if bad.is_empty() { String::new() } else { bad.join(" ") });
    }
    r
}

/// Unitary degrees against the class sum, with `epsilon` the sign of the
/// signed class sum at `q = 2..5`.
pub fn unitary_degrees(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("unitary");
    for n in 1..=max_n {
        let mut bad = Vec::new();
        for l in enumerate_partitions(n) {
            let (eps, d) = unitary_sign_and_degree(&l);
            let signed = signed_degree_via_class_sum(&l, GroupType::Unitary);
            let same = d == degree_via_class_sum(&l, GroupType::Unitary);
            let signs = (2..=5).all(|q| {
                let v = signed.eval_i64(q);
                !v.is_zero() && (v.is_positive() == (eps > 0))
            });
            if !same || !signs {
                bad.push(l.to_string());
            }
        }
        r.push(format!("U_{n}"), bad.is_empty(), bad.join(" "));
    }
    r
}

/// The wreath products `H0 wr A` used by the extension and Clifford suites.
pub fn wreath_matrix() -> Vec<(String, WreathSpec)> {
    let tops: Vec<(&str, usize, Vec<Perm>)> = vec![
        ("Z2", 2, vec![Perm::long_cycle(2)]),
        ("Z3", 3, vec![Perm::long_cycle(3)]),
        ("S2", 3, vec![Perm::from_cycles(3, &[&[0, 1]]).expect("cycle")]),
        ("S3", 3, vec![Perm::from_cycles(3, &[&[0, 1]]).expect("cycle"), Perm::long_cycle(3)]),
    ];
    let mut out = Vec::new();
    for base in [2, 3] {
        for (name, deg, gens) in &tops {
            out.push((format!("S{base} wr {name}"), WreathSpec::new(GroupDescriptor::Sym(base), *deg, gens.clone())));
        }
    }
    out
}

/// For every top element `a`, the canonical extensions of the
/// `a`-invariant characters form an orthonormal basis of the class
/// functions on `H a`.
pub fn wreath_extensions() -> SuiteReport {
    let mut r = SuiteReport::new("extensions");
    for (name, w) in wreath_matrix() {
        let res = (|| -> Result<(bool, String), crate::cosetfun::CosetError> {
            let top = w.top_group(DEFAULT_CAP)?;
            let mut ok = true;
            let mut sizes = Vec::new();
            for a in top.elements() {
                let coset = WreathCoset::new(&w, a)?;
                let basis = coset.extension_basis()?;
                ok &= basis.len() == coset.ctx.class_count();
                for (i, (_, f)) in basis.iter().enumerate() {
                    for (j, (_, g)) in basis.iter().enumerate() {
                        let expected = if i == j { CycloNum::one() } else { CycloNum::zero() };
                        ok &= coset_inner(f, g)? == expected;
                    }
                }
                sizes.push(basis.len().to_string());
            }
            Ok((ok, format!("family sizes {}", sizes.join(","))))
        })();
        r.push_result(name, res);
    }
    r
}

/// `|Irr| = #classes` and `sum deg^2 = |G|` for the Clifford labels.
pub fn wreath_clifford(cap: usize) -> SuiteReport {
    let mut r = SuiteReport::new("clifford");
    for (name, w) in wreath_matrix() {
        let res = (|| -> Result<(bool, String), crate::permwreath::PermError> {
            let g = GroupDescriptor::Wreath(w.clone());
            let labels = irr_labels(&g)?;
            let classes = g.finite_group(cap)?.conjugacy_classes().len();
            let order = g.order(cap)?;
            let mut sum = 0u64;
            for l in &labels {
                let d = CompiledCharacter::new(&g, l)?.degree(&g);
                sum += d * d;
            }
            let ok = labels.len() == classes && sum == order as u64;
            Ok((ok, format!("|G|={order} labels={} classes={classes} sum deg^2={sum}", labels.len())))
        })();
        r.push_result(name, res);
    }
    r
}

/// A subcoset `K x phi` of `ctx`, with automorphism `k -> x phi(k) x^-1`.
fn subcoset(ctx: &CosetContext, k: FiniteGroup, x: &Perm) -> Result<Arc<CosetContext>, crate::cosetfun::CosetError> {
    let x_inv = x.inverse();
    let table = k
        .generators()
        .iter()
        .map(|g| (g.clone(), x.compose(ctx.phi(g).expect("member")).compose(&x_inv)))
        .collect();
    CosetContext::new(k, &PhiSource::Table(table))
}

fn random_function(ctx: &Arc<CosetContext>, rng: &mut ChaCha8Rng) -> CosetClassFunction {
    let i = CycloNum::root_of_unity(1, 4).expect("order 4");
    let values = (0..ctx.class_count())
        .map(|_| {
            let re = CycloNum::from_integer(rng.random_range(-3..=3));
            let im = CycloNum::from_integer(rng.random_range(-3..=3));
            &re + &(&im * &i)
        })
        .collect();
    CosetClassFunction::from_class_values(ctx, values)
}

/// Ambient coset, subgroup, offset.
type FrobeniusConfig = (String, Arc<CosetContext>, FiniteGroup, Perm);

fn frobenius_configs() -> Result<Vec<FrobeniusConfig>, Box<dyn std::error::Error>> {
    let mut out = Vec::new();

    let s4 = FiniteGroup::generated(4, &[Perm::from_cycles(4, &[&[0, 1]])?, Perm::long_cycle(4)], DEFAULT_CAP)?;
    let young = s4.subgroup_where(|g| g.apply(0) < 2 && g.apply(1) < 2);
    out.push(("S4 > S2xS2".to_string(), CosetContext::ordinary(s4), young, Perm::identity(4)));

    let model = PointModel::uniform(2, 3);
    let swap = model.lift(&Perm::long_cycle(2))?;
    let whole = Blocks::whole(&model);
    let orbits = vec![vec![0], vec![1]];
    let ambient = CosetContext::new(model.young_fixed_group(&whole, &orbits, DEFAULT_CAP)?, &PhiSource::Ambient(swap))?;
    let k21 = model.young_fixed_group(&Blocks::from_compositions(&[vec![2, 1], vec![2, 1]]), &orbits, DEFAULT_CAP)?;
    out.push(("S3^2 swap > (S2xS1)^2".to_string(), ambient.clone(), k21, Perm::identity(6)));
    let k12 = model.young_fixed_group(&Blocks::from_compositions(&[vec![1, 2], vec![1, 2]]), &orbits, DEFAULT_CAP)?;
    let t = Perm::from_cycles(3, &[&[1, 2]])?;
    let x = model.fiberwise(&[t.clone(), t])?;
    out.push(("S3^2 swap > (S1xS2)^2 offset".to_string(), ambient, k12, x));

    let w = WreathSpec::new(GroupDescriptor::Sym(3), 3, vec![Perm::long_cycle(3)]);
    let coset = WreathCoset::new(&w, &Perm::long_cycle(3))?;
    let ctx = coset.ctx.clone();
    let fixed = ctx.group().subgroup_where(|g| ctx.phi(g) == Some(g));
    out.push(("S3^3 cyclic > diagonal".to_string(), ctx.clone(), fixed.clone(), Perm::identity(ctx.group().degree())));
    let x = fixed
        .elements()
        .iter()
        .find(|g| !g.is_identity())
        .cloned()
        .expect("nontrivial diagonal");
    out.push(("S3^3 cyclic > diagonal offset".to_string(), ctx, fixed, x));
    Ok(out)
}

/// `<Ind f', f> = <f', Res f>` on random pairs.
pub fn frobenius(seed: u64, pairs: usize) -> SuiteReport {
    let mut r = SuiteReport::new("frobenius");
    let configs = match frobenius_configs() {
        Ok(c) => c,
        Err(e) => {
            r.push("setup", false, e.to_string());
            return r;
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, ctx, k, x) in configs {
        let res = (|| -> Result<(bool, String), crate::cosetfun::CosetError> {
            let sub = subcoset(&ctx, k, &x)?;
            let mut ok = 0;
            for _ in 0..pairs {
                let f = random_function(&ctx, &mut rng);
                let fp = random_function(&sub, &mut rng);
                let lhs = coset_inner(&coset_induce_offset(&fp, &ctx, &x)?, &f)?;
                let rhs = coset_inner(&fp, &coset_restrict_offset(&f, &sub, &x)?)?;
                if lhs == rhs {
                    ok += 1;
                }
            }
            Ok((ok == pairs, format!("{ok}/{pairs} pairs")))
        })();
        r.push_result(name, res);
    }
    r
}

/// All compositions of `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn lemma51_one(e: usize, n: usize) -> Result<(bool, String), crate::twistmult::TwistError> {
    let mut cases = 0;
    for comp in compositions(n) {
        let datum = LeviDatum::full_cycle(e, n, &comp)?;
        for lambda in datum.levi_labels() {
            cases += 1;
            if !lemma51_crosscheck(&datum, &lambda)? {
                return Ok((false, format!("composition {comp:?}, lambda {lambda}")));
            }
        }
    }
    Ok((true, format!("{cases} (composition, lambda) pairs, all a = sigma^i")))
}

/// Coset multiplicities against ordinary induction for one cycle of length `e`.
pub fn lemma51(cases: &[(usize, usize)]) -> SuiteReport {
    let mut r = SuiteReport::new("lemma51");
    for &(e, n) in cases {
        r.push_result(format!("e={e} n={n}"), lemma51_one(e, n));
    }
    r
}

/// [`lemma51`] for a spec with one factor whose `sigma` is a full cycle.
pub fn lemma51_for_spec(spec: &GroupSpec) -> Result<SuiteReport, VerifyError> {
    let bad = |m: &str| VerifyError::Input(m.to_string());
    spec.validate().map_err(|e| VerifyError::Input(e.to_string()))?;
    let [f] = spec.factors.as_slice() else {
        return Err(bad("lemma51 expects exactly one factor"));
    };
    if f.sigma.cycles().len() != 1 {
        return Err(bad("lemma51 expects sigma to be a single cycle on all points"));
    }
    let mut r = SuiteReport::new("lemma51");
    r.push_result(format!("e={} n={}", f.d, f.n), lemma51_one(f.d, f.n));
    Ok(r)
}

fn spec(n: usize, d: usize, gens: &[&[&[usize]]], sigma: &[&[usize]], twist: u8) -> GroupSpec {
    let perm = |cycles: &[&[usize]]| Perm::from_cycles(d, cycles).expect("valid cycles");
    GroupSpec::single(FactorSpec::new(n, d, gens.iter().map(|c| perm(c)).collect(), perm(sigma), twist))
}

/// Levi data for the re-expansion suite.
pub fn reexpansion_data() -> Vec<(String, GroupSpec, LeviSpec)> {
    let p = |d: usize, c: &[&[usize]]| Perm::from_cycles(d, c).expect("valid cycles");
    vec![
        (
            "S3 > S2xS1".into(),
            spec(3, 1, &[], &[], 0),
            LeviSpec {
                compositions: vec![vec![2, 1]],
                al_gens: vec![],
                w1: None,
            },
        ),
        (
            "S2^2 cyclic > 1".into(),
            spec(2, 2, &[&[&[0, 1]]], &[&[0, 1]], 0),
            LeviSpec {
                compositions: vec![vec![1, 1]; 2],
                al_gens: vec![p(2, &[&[0, 1]])],
                w1: None,
            },
        ),
        (
            "S2^3 cyclic > 1".into(),
            spec(2, 3, &[&[&[0, 1, 2]]], &[&[0, 1, 2]], 0),
            LeviSpec {
                compositions: vec![vec![1, 1]; 3],
                al_gens: vec![p(3, &[&[0, 1, 2]])],
                w1: None,
            },
        ),
        (
            "S2 > 1, w1 = (0 1)".into(),
            spec(2, 1, &[], &[], 0),
            LeviSpec {
                compositions: vec![vec![1, 1]],
                al_gens: vec![],
                w1: Some(vec![p(2, &[&[0, 1]])]),
            },
        ),
        (
            "S3^2 swap > 1, w1 = 3-cycles".into(),
            spec(3, 2, &[&[&[0, 1]]], &[&[0, 1]], 0),
            LeviSpec {
                compositions: vec![vec![1, 1, 1]; 2],
                al_gens: vec![p(2, &[&[0, 1]])],
                w1: Some(vec![Perm::long_cycle(3); 2]),
            },
        ),
        (
            "S2^4 > 1, w1 = swaps".into(),
            spec(2, 4, &[&[&[0, 2], &[1, 3]]], &[&[0, 1], &[2, 3]], 0),
            LeviSpec {
                compositions: vec![vec![1, 1]; 4],
                al_gens: vec![p(4, &[&[0, 2], &[1, 3]])],
                w1: Some(vec![Perm::long_cycle(2); 4]),
            },
        ),
        (
            "S4^2 > (S2xS2)^2, w1 swaps blocks".into(),
            spec(4, 2, &[&[&[0, 1]]], &[], 0),
            LeviSpec {
                compositions: vec![vec![2, 2]; 2],
                al_gens: vec![p(2, &[&[0, 1]])],
                w1: Some(vec![p(4, &[&[0, 2], &[1, 3]]); 2]),
            },
        ),
    ]
}

/// `sum m_eta (eta_a ⋊ sigma)` reproduces the induced function for every
/// stable `lambda` and every `a` in `A_L` fixing it.
pub fn reexpansion() -> SuiteReport {
    let mut r = SuiteReport::new("reexpansion");
    for (name, gs, ls) in reexpansion_data() {
        let res = (|| -> Result<(bool, String), Box<dyn std::error::Error>> {
            let s = analyze(&gs)?;
            let datum = LeviDatum::new(&s, &ls)?;
            let mut cases = 0;
            for lambda in datum.levi_labels() {
                for a in datum.al.elements() {
                    if lambda.act(a) != lambda {
                        continue;
                    }
                    let ex = expand(&datum, &lambda, a)?;
                    cases += 1;
                    if !ex.reexpansion_exact()? || !ex.basis_orthonormal()? || !ex.table.integral() {
                        return Ok((false, format!("lambda {lambda}, a {a}")));
                    }
                }
            }
            Ok((cases > 0, format!("{cases} (lambda, a) pairs")))
        })();
        r.push_result(name, res.map_err(|e| e.to_string()));
    }
    r
}

pub fn kostka(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("kostka");
    for n in 1..=max_n {
        let det = bareiss_determinant(&kostka_matrix(n));
        r.push(format!("n={n}"), integrality_basis_check(n), format!("det = {det}"));
    }
    r
}

/// All `(e, k, n, m)` with `e k n <= bound` and `1 <= m <= e`.
pub fn step4(bound: usize) -> SuiteReport {
    let mut r = SuiteReport::new("step4");
    for e in 1..=bound {
        for k in 1..=bound / e {
            for n in 1..=bound / (e * k) {
                for m in 1..=e {
                    let res = step4_identities(e, k, n, m).map(|rep| {
                        (
                            rep.passed(),
                            format!(
                                "orbits {} subgroups {:?} extension {}/{} pi {}/{}",
                                rep.orbits_agree,
                                rep.fixed_subgroups_agree,
                                rep.extension_checked - rep.extension_mismatches,
                                rep.extension_checked,
                                rep.pi_checked - rep.pi_mismatches,
                                rep.pi_checked
                            ),
                        )
                    });
                    r.push_result(format!("e={e} k={k} n={n} m={m}"), res);
                }
            }
        }
    }
    r
}

/// Specs covering linear and unitary orbits, cyclic and symmetric tops.
pub fn default_specs() -> Vec<(String, GroupSpec)> {
    let mut out = vec![
        ("GL2 wr C2".into(), spec(2, 2, &[&[&[0, 1]]], &[], 0)),
        ("GU2 wr C2".into(), spec(2, 2, &[&[&[0, 1]]], &[], 1)),
        ("GL2 wr S3".into(), spec(2, 3, &[&[&[0, 1]], &[&[0, 1, 2]]], &[], 0)),
        ("GU2 wr S3".into(), spec(2, 3, &[&[&[0, 1]], &[&[0, 1, 2]]], &[], 1)),
        ("GL3(q^2) x C2".into(), spec(3, 2, &[&[&[0, 1]]], &[&[0, 1]], 0)),
        ("GU2(q^3) x C3".into(), spec(2, 3, &[&[&[0, 1, 2]]], &[&[0, 1, 2]], 1)),
        ("GL1 wr C4".into(), spec(1, 4, &[&[&[0, 1, 2, 3]]], &[], 0)),
        ("GL2(q^2)^2 x C2".into(), spec(2, 4, &[&[&[0, 2], &[1, 3]]], &[&[0, 1], &[2, 3]], 0)),
        ("GU3".into(), spec(3, 1, &[], &[], 1)),
    ];
    if let Ok(s) = levi_normalizer(4, &[1, 1, 2], 0) {
        out.push(("N(GL1^2 x GL2)".into(), s));
    }
    out
}

/// `|unipotent labels| = |Irr(W°F ⋊ A^F)|`.
pub fn label_counts(specs: &[(String, GroupSpec)], cap: usize) -> SuiteReport {
    let mut r = SuiteReport::new("labels");
    for (name, gs) in specs {
        let res = (|| -> Result<(bool, String), Box<dyn std::error::Error>> {
            let s = analyze(gs)?;
            let labels = unipotent_labels(&s)?.len();
            let classes = weyl_group_with_top(&s).finite_group(cap)?.conjugacy_classes().len();
            Ok((labels == classes, format!("{labels} labels, {classes} classes")))
        })();
        r.push_result(name.clone(), res.map_err(|e| e.to_string()));
    }
    r
}

fn mellin_one(s: &FixedStructure) -> Result<(bool, String), Box<dyn std::error::Error>> {
    let mut ok = true;
    let mut checked = 0;
    for eta in conn_labels(s) {
        let fam = mellin(s, &eta)?;
        ok &= fam.round_trip_exact();
        for a in s.af.elements() {
            if eta.act(s, a) != eta {
                continue;
            }
            let rep = support_identity_weyl_model(s, &eta, a)?;
            checked += rep.checked;
            ok &= rep.passed();
        }
    }
    Ok((ok, format!("{checked} support values")))
}

/// Mellin round trips and the support identity, for specs with abelian `A^F`.
pub fn mellin_support(specs: &[(String, GroupSpec)]) -> SuiteReport {
    let mut r = SuiteReport::new("mellin");
    for (name, gs) in specs {
        let s = match analyze(gs) {
            Ok(s) => s,
            Err(e) => {
                r.push(name.clone(), false, e.to_string());
                continue;
            }
        };
        if !s.af.is_abelian() {
            continue;
        }
        r.push_result(name.clone(), mellin_one(&s).map_err(|e| e.to_string()));
    }
    r
}

/// Multiplication in `F_4 = F_2[w]/(w^2 + w + 1)`, elements as bit pairs.
fn gf4_mul(a: u8, b: u8) -> u8 {
    let mut r = 0u8;
    let (mut a, mut b) = (a, b);
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 4 != 0 {
            a ^= 0b111;
        }
    }
    r
}

/// Brute-force `|GL_n(F_q)|` (`q` in {2, 4}) or `|GU_n(2)|` inside `GL_n(F_4)`.
pub fn brute_force_order(n: usize, q: u8, unitary: bool) -> u64 {
    let size = if unitary { 4 } else { q } as usize;
    let mul = |a: u8, b: u8| if size == 2 { a & b } else { gf4_mul(a, b) };
    let entries = n * n;
    let mut count = 0;
    let mut m = vec![0u8; entries];
    'outer: loop {
        let prod = |i: usize, j: usize, conj: bool| {
            (0..n).fold(0u8, |acc, k| {
                let y = m[j * n + k];
                acc ^ mul(m[i * n + k], if conj { mul(y, y) } else { y })
            })
        };
        let ok = if unitary {
            (0..n).all(|i| (0..n).all(|j| prod(i, j, true) == u8::from(i == j)))
        } else {
            invertible(&m, n, mul)
        };
        if ok {
            count += 1;
        }
        for slot in m.iter_mut() {
            *slot += 1;
            if (*slot as usize) < size {
                continue 'outer;
            }
            *slot = 0;
        }
        return count;
    }
}

fn invertible(m: &[u8], n: usize, mul: impl Fn(u8, u8) -> u8) -> bool {
    let mut a = m.to_vec();
    let inv = |x: u8| (1..4u8).find(|&y| mul(x, y) == 1).expect("nonzero");
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return false;
        };
        for j in 0..n {
            a.swap(col * n + j, piv * n + j);
        }
        let s = inv(a[col * n + col]);
        for j in 0..n {
            a[col * n + j] = mul(a[col * n + j], s);
        }
        for r in 0..n {
            if r != col && a[r * n + col] != 0 {
                let f = a[r * n + col];
                for j in 0..n {
                    a[r * n + j] ^= mul(f, a[col * n + j]);
                }
            }
        }
    }
    true
}

/// Order polynomials at `q = 2` against brute-force matrix counts.
pub fn orders_at_two() -> SuiteReport {
    let mut r = SuiteReport::new("orders");
    let cases = [
        ("GL_2(2)", spec(2, 1, &[], &[], 0), brute_force_order(2, 2, false)),
        ("GU_2(2)", spec(2, 1, &[], &[], 1), brute_force_order(2, 2, true)),
        ("GL_1(4)", spec(1, 2, &[], &[&[0, 1]], 0), brute_force_order(1, 4, false)),
    ];
    for (name, gs, expected) in cases {
        match analyze(&gs) {
            Ok(s) => {
                let v = crate::groupspec::order_polynomial(&s).eval_i64(2);
                r.push(name, v == BigInt::from(expected), format!("polynomial {v}, brute force {expected}"));
            }
            Err(e) => r.push(name, false, e.to_string()),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_field_counts() {
        assert_eq!(brute_force_order(2, 2, false), 6);
        assert_eq!(brute_force_order(2, 2, true), 18);
        assert_eq!(brute_force_order(1, 4, false), 3);
        assert_eq!(brute_force_order(2, 4, false), 180);
        assert_eq!(gf4_mul(2, 2), 3);
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4).len(), 8);
    }
}
