//! Multiplicities of twisted Weyl-group characters under coset induction
//! from a Levi-type subcoset `W_L°<a> w1 sigma` to `W°<a> sigma`, the
//! ordinary-induction oracle for the full-cycle case, and the wreath
//! identities used when `sigma` has several cycles.

pub mod model;
mod step4;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::cosetfun::{coset_induce_offset, coset_inner, CosetClassFunction, CosetContext, CosetError, PhiSource};
use crate::cyclotomic::CycloNum;
use crate::groupspec::{analyze, FactorSpec, FixedStructure, GroupSpec, SpecError};
use crate::partitions::{bareiss_determinant, character_table, enumerate_partitions, kostka_matrix, Partition};
use crate::permwreath::{all_perms, FiniteGroup, Perm, PermError, DEFAULT_CAP};
use crate::unipotent::{conn_labels, ConnLabel};

use model::{base_orbits, extension_value, Blocks, PointModel};
pub use step4::{step4_identities, Step4Report};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TwistError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error("invalid Levi datum: {0}")]
    InvalidDatum(String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("{0} is not in A_L")]
    NotInAL(Perm),
    #[error("{0} does not fix the label")]
    NotInStabilizer(Perm),
    #[error("parameters outside the supported regime: {0}")]
    Unsupported(String),
}

/// Serialized form of a [`LeviDatum`]: one composition per global top
/// point, generators of `A_L` on the same points, and `w1` as one
/// permutation per point (identity if absent).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviSpec {
    pub compositions: Vec<Vec<usize>>,
    #[serde(rename = "AL_gens", default)]
    pub al_gens: Vec<Perm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w1: Option<Vec<Perm>>,
}

/// A Young-type subgroup `W_L°` of `W°`, an abelian `A_L <= A^F` and the
/// twisting element `w1`, validated against the ambient structure.
#[derive(Clone, Debug)]
pub struct LeviDatum {
    pub ambient: FixedStructure,
    pub compositions: Vec<Vec<usize>>,
    pub al: FiniteGroup,
    pub w1: Vec<Perm>,
    model: PointModel,
    sigma: Perm,
    blocks: Blocks,
}

/// `sigma` of all factors as one permutation of the global top points.
pub fn global_sigma(s: &FixedStructure) -> Perm {
    let mut images = Vec::with_capacity(s.degree());
    for (f, off) in s.spec.factors.iter().zip(&s.offsets) {
        images.extend(f.sigma.images().iter().map(|&y| y + off));
    }
    Perm::from_images(images).expect("sigma is a permutation")
}

fn fibers(s: &FixedStructure) -> Vec<usize> {
    s.spec.factors.iter().flat_map(|f| std::iter::repeat_n(f.n, f.d)).collect()
}

impl LeviDatum {
    pub fn new(ambient: &FixedStructure, spec: &LeviSpec) -> Result<Self, TwistError> {
        let bad = |m: String| TwistError::InvalidDatum(m);
        let fib = fibers(ambient);
        let d = fib.len();
        let model = PointModel::new(fib.clone());
        if spec.compositions.len() != d {
            return Err(bad(format!("{} compositions for {d} points", spec.compositions.len())));
        }
        for (x, c) in spec.compositions.iter().enumerate() {
            if c.contains(&0) || c.iter().sum::<usize>() != fib[x] {
                return Err(bad(format!("{c:?} is not a composition of {}", fib[x])));
            }
        }
        for g in &spec.al_gens {
            if g.degree() != d || !ambient.af.contains(g) {
                return Err(bad(format!("{g} is not in A^F")));
            }
        }
        let al = FiniteGroup::generated(d, &spec.al_gens, DEFAULT_CAP)?;
        if !al.is_abelian() {
            return Err(bad("A_L is not abelian".into()));
        }
        for g in &spec.al_gens {
            if (0..d).any(|x| spec.compositions[g.apply(x)] != spec.compositions[x]) {
                return Err(bad(format!("{g} does not preserve the compositions")));
            }
        }
        let w1 = match &spec.w1 {
            Some(w) => w.clone(),
            None => fib.iter().map(|&n| Perm::identity(n)).collect(),
        };
        if w1.len() != d || w1.iter().zip(&fib).any(|(p, &n)| p.degree() != n) {
            return Err(bad("w1 needs one permutation of each fiber".into()));
        }
        for g in &spec.al_gens {
            if (0..d).any(|x| w1[g.apply(x)] != w1[x]) {
                return Err(bad(format!("w1 does not commute with {g}")));
            }
        }
        let sigma = global_sigma(ambient);
        let blocks = Blocks::from_compositions(&spec.compositions);
        let twisted = model.fiberwise(&w1)?.compose(&model.lift(&sigma)?);
        if !blocks.normalized_by(&model, &twisted) {
            return Err(bad("w1 sigma does not permute the blocks of W_L".into()));
        }
        Ok(LeviDatum {
            ambient: ambient.clone(),
            compositions: spec.compositions.clone(),
            al,
            w1,
            model,
            sigma,
            blocks,
        })
    }

    /// The full-cycle setting: `GL_n^e` with `sigma` and `A = A_L` the
    /// cyclic group of an `e`-cycle, `W_L° = (S_comp)^e`, `w1 = 1`.
    pub fn full_cycle(e: usize, n: usize, composition: &[usize]) -> Result<Self, TwistError> {
        let sigma = Perm::long_cycle(e);
        let gens = if e > 1 { vec![sigma.clone()] } else { Vec::new() };
        let ambient = analyze(&GroupSpec::single(FactorSpec::new(n, e, gens.clone(), sigma, 0)))?;
        Self::new(
            &ambient,
            &LeviSpec {
                compositions: vec![composition.to_vec(); e],
                al_gens: gens,
                w1: None,
            },
        )
    }

    pub fn spec(&self) -> LeviSpec {
        LeviSpec {
            compositions: self.compositions.clone(),
            al_gens: self.al.generators().to_vec(),
            w1: Some(self.w1.clone()),
        }
    }

    pub fn w1_is_identity(&self) -> bool {
        self.w1.iter().all(Perm::is_identity)
    }

    fn twisted_sigma(&self) -> Perm {
        self.model
            .fiberwise(&self.w1)
            .expect("validated")
            .compose(&self.model.lift(&self.sigma).expect("validated"))
    }

    fn check_label(&self, lambda: &LeviLabel) -> Result<(), TwistError> {
        let blocks = &self.blocks.0;
        if lambda.0.len() != blocks.len()
            || lambda
                .0
                .iter()
                .zip(blocks)
                .any(|(ls, bs)| ls.len() != bs.len() || ls.iter().zip(bs).any(|(l, &(_, len))| l.size() != len))
        {
            return Err(TwistError::InvalidLabel(lambda.to_string()));
        }
        let g = self.twisted_sigma();
        for (x, bs) in blocks.iter().enumerate() {
            for b in 0..bs.len() {
                let (y, c) = self.blocks.image(&self.model, &g, x, b).expect("validated");
                if lambda.0[y][c] != lambda.0[x][b] {
                    return Err(TwistError::InvalidLabel(format!("{lambda} is not w1 sigma-stable")));
                }
            }
        }
        Ok(())
    }

    /// Characters of `W_L°` stable under `w1 sigma`, one partition per block.
    pub fn levi_labels(&self) -> Vec<LeviLabel> {
        let g = self.twisted_sigma();
        let flat: Vec<(usize, usize)> =
            self.blocks.0.iter().enumerate().flat_map(|(x, bs)| (0..bs.len()).map(move |b| (x, b))).collect();
        let index = |p: (usize, usize)| flat.iter().position(|&q| q == p).expect("block");
        let mut cls = vec![usize::MAX; flat.len()];
        let mut reps = Vec::new();
        for i in 0..flat.len() {
            if cls[i] != usize::MAX {
                continue;
            }
            let k = reps.len();
            reps.push(i);
            let mut j = i;
            while cls[j] == usize::MAX {
                cls[j] = k;
                let (x, b) = flat[j];
                j = index(self.blocks.image(&self.model, &g, x, b).expect("validated"));
            }
        }
        let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
        for &r in &reps {
            let (x, b) = flat[r];
            let parts = enumerate_partitions(self.blocks.0[x][b].1);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    parts.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|choice| {
                let mut label: Vec<Vec<Partition>> = Vec::new();
                let mut i = 0;
                for bs in &self.blocks.0 {
                    let mut row = Vec::new();
                    for _ in bs {
                        row.push(choice[cls[i]].clone());
                        i += 1;
                    }
                    label.push(row);
                }
                LeviLabel(label)
            })
            .collect()
    }

    /// The trivial character of `W_L°`.
    pub fn trivial_label(&self) -> LeviLabel {
        LeviLabel(self.blocks.0.iter().map(|bs| bs.iter().map(|&(_, l)| Partition::row(l)).collect()).collect())
    }
}

/// One partition per block of `W_L°`, indexed by top point then block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeviLabel(pub Vec<Vec<Partition>>);

impl fmt::Display for LeviLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, row) in self.0.iter().enumerate() {
            if x > 0 {
                f.write_str(";")?;
            }
            for (b, p) in row.iter().enumerate() {
                if b > 0 {
                    f.write_str("/")?;
                }
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

impl LeviLabel {
    pub fn act(&self, a: &Perm) -> LeviLabel {
        let mut out = self.0.clone();
        for (x, row) in self.0.iter().enumerate() {
            out[a.apply(x)] = row.clone();
        }
        LeviLabel(out)
    }
}

/// `eta_a`: a partition on each `<sigma, a>`-orbit of top points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransportedLabel {
    pub orbits: Vec<Vec<usize>>,
    pub parts: Vec<Partition>,
}

impl fmt::Display for TransportedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (o, p)) in self.orbits.iter().zip(&self.parts).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let pts: Vec<String> = o.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}:{p}", pts.join(","))?;
        }
        Ok(())
    }
}

/// Merges the `sigma`-orbits carrying `eta` along `a`.
pub fn eta_transport(s: &FixedStructure, eta: &ConnLabel, a: &Perm) -> Result<TransportedLabel, TwistError> {
    if eta.0.len() != s.orbits.len() || eta.0.iter().zip(&s.orbits).any(|(p, o)| p.size() != o.n) {
        return Err(TwistError::InvalidLabel(eta.to_string()));
    }
    if !s.af.contains(a) {
        return Err(TwistError::Unsupported(format!("{a} is not in A^F")));
    }
    if &eta.act(s, a) != eta {
        return Err(TwistError::NotInStabilizer(a.clone()));
    }
    let (orbits, _) = base_orbits(s.degree(), &[global_sigma(s), a.clone()]);
    let of = s.orbit_of_point();
    let parts = orbits.iter().map(|o| eta.0[of[o[0]]].clone()).collect();
    Ok(TransportedLabel { orbits, parts })
}

/// `Irr(W°F)^<a>` as connected labels fixed by `a`.
pub fn invariant_etas(s: &FixedStructure, a: &Perm) -> Vec<ConnLabel> {
    conn_labels(s).into_iter().filter(|eta| &eta.act(s, a) == eta).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityEntry {
    pub eta: ConnLabel,
    pub eta_a: TransportedLabel,
    pub m: CycloNum,
}

/// `m_eta` for every `eta` in `Irr(W°F)^<a>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub a: Perm,
    pub lambda: LeviLabel,
    pub entries: Vec<MultiplicityEntry>,
}

impl MultiplicityTable {
    pub fn get(&self, eta: &ConnLabel) -> Option<&CycloNum> {
        self.entries.iter().find(|e| &e.eta == eta).map(|e| &e.m)
    }

    /// Whether every entry is an algebraic integer.
    pub fn integral(&self) -> bool {
        self.entries.iter().all(|e| e.m.is_algebraic_integer())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": self.a,
            "lambda": self.lambda,
            "entries": self.entries.iter().map(|e| serde_json::json!({
                "eta": e.eta.to_string(),
                "eta_a": e.eta_a.to_string(),
                "m": e.m.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// The induced coset function together with its coordinates in the
/// basis `(eta_a ⋊ sigma)`.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub table: MultiplicityTable,
    pub induced: CosetClassFunction,
    pub basis: Vec<CosetClassFunction>,
}

impl Expansion {
    /// `sum m_eta (eta_a ⋊ sigma) == Ind` on every `phi`-class.
    pub fn reexpansion_exact(&self) -> Result<bool, TwistError> {
        let mut total = CosetClassFunction::zero(self.induced.context());
        for (e, f) in self.table.entries.iter().zip(&self.basis) {
            total = total.add(&f.scale(&e.m))?;
        }
        Ok(total.class_values() == self.induced.class_values())
    }

    /// Gram matrix of the basis is the identity.
    pub fn basis_orthonormal(&self) -> Result<bool, TwistError> {
        for (i, f) in self.basis.iter().enumerate() {
            for (j, g) in self.basis.iter().enumerate() {
                let expected = if i == j { CycloNum::one() } else { CycloNum::zero() };
                if coset_inner(f, g)? != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `Ind_{W_L°<a> w1 sigma}^{W°<a> sigma}(lambda_a ⋊ w1 sigma)` expanded in
/// the `eta_a ⋊ sigma`.
pub fn expand(datum: &LeviDatum, lambda: &LeviLabel, a: &Perm) -> Result<Expansion, TwistError> {
    datum.check_label(lambda)?;
    if !datum.al.contains(a) {
        return Err(TwistError::NotInAL(a.clone()));
    }
    if &lambda.act(a) != lambda {
        return Err(TwistError::NotInStabilizer(a.clone()));
    }
    let s = &datum.ambient;
    let model = &datum.model;
    let d = model.base_points();
    let (a_orbits, a_class) = base_orbits(d, std::slice::from_ref(a));
    let sigma_t = model.lift(&datum.sigma)?;
    let w1 = model.fiberwise(&datum.w1)?;
    let whole = Blocks::whole(model);

    let ambient_group = model.young_fixed_group(&whole, &a_orbits, DEFAULT_CAP)?;
    let ctx = CosetContext::new(ambient_group, &PhiSource::Ambient(sigma_t.clone()))?;
    let sub_group = model.young_fixed_group(&datum.blocks, &a_orbits, DEFAULT_CAP)?;
    let sub = CosetContext::new(sub_group, &PhiSource::Ambient(w1.compose(&sigma_t)))?;

    let twist = w1.compose(&sigma_t);
    let f = CosetClassFunction::from_fn(&sub, |k| {
        CycloNum::from_integer(extension_value(model, &datum.blocks, &lambda.0, &a_class, &k.compose(&twist)))
    });
    let induced = coset_induce_offset(&f, &ctx, &w1)?;

    let of = s.orbit_of_point();
    let mut entries = Vec::new();
    let mut basis = Vec::new();
    for eta in invariant_etas(s, a) {
        let labels: Vec<Vec<Partition>> = (0..d).map(|x| vec![eta.0[of[x]].clone()]).collect();
        let b = basis_function(&ctx, model, &whole, &labels, &a_class, &sigma_t);
        let m = coset_inner(&induced, &b)?;
        entries.push(MultiplicityEntry {
            eta_a: eta_transport(s, &eta, a)?,
            eta,
            m,
        });
        basis.push(b);
    }
    Ok(Expansion {
        table: MultiplicityTable {
            a: a.clone(),
            lambda: lambda.clone(),
            entries,
        },
        induced,
        basis,
    })
}

fn basis_function(
    ctx: &Arc<CosetContext>,
    model: &PointModel,
    whole: &Blocks,
    labels: &[Vec<Partition>],
    a_class: &[usize],
    sigma_t: &Perm,
) -> CosetClassFunction {
    CosetClassFunction::from_fn(ctx, |w| {
        CycloNum::from_integer(extension_value(model, whole, labels, a_class, &w.compose(sigma_t)))
    })
}

/// `m_eta = <Ind(lambda'_a ⋊ w1 sigma), eta_a ⋊ sigma>` on `W°<a> sigma`.
pub fn m_table(datum: &LeviDatum, lambda: &LeviLabel, a: &Perm) -> Result<MultiplicityTable, TwistError> {
    Ok(expand(datum, lambda, a)?.table)
}

/// `<eta, Ind_{S_comp}^{S_n} lambda>` summed over the Young subgroup.
pub fn ordinary_induction_multiplicity(composition: &[usize], lambda: &[Partition], eta: &Partition) -> CycloNum {
    let n: usize = composition.iter().sum();
    let table = character_table(n);
    let mut tuples: Vec<(Vec<usize>, i64)> = vec![(Vec::new(), 1)];
    let mut start = 0;
    for (&len, l) in composition.iter().zip(lambda) {
        let local = character_table(len);
        let mut next = Vec::new();
        for (images, val) in &tuples {
            for p in all_perms(len) {
                let v = local.value(l, &p.cycle_type());
                if v == 0 {
                    continue;
                }
                let mut im = images.clone();
                im.extend(p.images().iter().map(|&i| i + start));
                next.push((im, val * v));
            }
        }
        tuples = next;
        start += len;
    }
    let order: usize = composition.iter().map(|&l| (1..=l).product::<usize>()).product();
    let total: i64 = tuples
        .into_iter()
        .map(|(im, v)| v * table.value(eta, &Perm::from_images(im).expect("perm").cycle_type()))
        .sum();
    CycloNum::from_rational(num_rational::BigRational::new(BigInt::from(total), BigInt::from(order)))
}

/// In the full-cycle setting, compares the coset multiplicities with the
/// ordinary induction multiplicities for every `a = sigma^i`.
pub fn lemma51_crosscheck(datum: &LeviDatum, lambda: &LeviLabel) -> Result<bool, TwistError> {
    let s = &datum.ambient;
    if s.spec.factors.len() != 1 || s.orbits.len() != 1 {
        return Err(TwistError::Unsupported("one factor with sigma a full cycle expected".into()));
    }
    if !datum.w1_is_identity() {
        return Err(TwistError::Unsupported("w1 must be the identity".into()));
    }
    let comp = &datum.compositions[0];
    if datum.compositions.iter().any(|c| c != comp) {
        return Err(TwistError::Unsupported("W_L° must be a power of one Young subgroup".into()));
    }
    datum.check_label(lambda)?;
    let sigma = &datum.sigma;
    for i in 0..s.degree() {
        let a = sigma.pow(i as i64);
        if !datum.al.contains(&a) {
            return Err(TwistError::NotInAL(a));
        }
        let table = m_table(datum, lambda, &a)?;
        for e in &table.entries {
            if e.m != ordinary_induction_multiplicity(comp, &lambda.0[0], &e.eta.0[0]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The Kostka matrix of `n` is unimodular, so the induced trivial
/// characters of Young subgroups span the same lattice as `Irr(S_n)`.
pub fn integrality_basis_check(n: usize) -> bool {
    bareiss_determinant(&kostka_matrix(n)).abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn young_s2_s1_in_s3() {
        let datum = LeviDatum::full_cycle(1, 3, &[2, 1]).unwrap();
        let lambda = datum.trivial_label();
        let t = m_table(&datum, &lambda, &Perm::identity(1)).unwrap();
        let ms: Vec<String> = t.entries.iter().map(|e| format!("{}={}", e.eta, e.m)).collect();
        assert_eq!(ms, ["[3]=1:[0=1/1]", "[2,1]=1:[0=1/1]", "[1,1,1]=1:[]"]);
    }

    #[test]
    fn trivial_levi_gives_degrees() {
        let datum = LeviDatum::full_cycle(1, 4, &[1, 1, 1, 1]).unwrap();
        let t = m_table(&datum, &datum.trivial_label(), &Perm::identity(1)).unwrap();
        for e in &t.entries {
            assert_eq!(e.m, CycloNum::from_integer(character_table(4).degree(&e.eta.0[0])));
        }
    }

    #[test]
    fn twisted_w1_in_s2() {
        let ambient = analyze(&GroupSpec::single(FactorSpec::new(2, 1, vec![], Perm::identity(1), 0))).unwrap();
        let datum = LeviDatum::new(
            &ambient,
            &LeviSpec {
                compositions: vec![vec![1, 1]],
                al_gens: vec![],
                w1: Some(vec![Perm::long_cycle(2)]),
            },
        )
        .unwrap();
        let ex = expand(&datum, &datum.trivial_label(), &Perm::identity(1)).unwrap();
        let ms: Vec<i64> = ex.table.entries.iter().map(|e| e.m.to_integer().unwrap().try_into().unwrap()).collect();
        assert_eq!(ms, [1, -1]);
        assert!(ex.reexpansion_exact().unwrap());
        assert!(ex.basis_orthonormal().unwrap());
    }

    #[test]
    fn lemma51_small() {
        for (e, n) in [(2, 2), (2, 3), (3, 2)] {
            for comp in [vec![n], vec![1; n], vec![n - 1, 1]] {
                let datum = LeviDatum::full_cycle(e, n, &comp).unwrap();
                for lambda in datum.levi_labels() {
                    assert!(lemma51_crosscheck(&datum, &lambda).unwrap(), "e={e} n={n} {comp:?} {lambda}");
                }
            }
        }
    }

    #[test]
    fn transport_merges_orbits() {
        let sigma = Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let a = Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        let s = analyze(&GroupSpec::single(FactorSpec::new(2, 4, vec![a.clone()], sigma, 0))).unwrap();
        let eta = ConnLabel(vec![p(&[2]), p(&[2])]);
        let t = eta_transport(&s, &eta, &a).unwrap();
        assert_eq!(t.orbits, vec![vec![0, 1, 2, 3]]);
        assert_eq!(t.parts, vec![p(&[2])]);
        let mixed = ConnLabel(vec![p(&[2]), p(&[1, 1])]);
        assert!(matches!(eta_transport(&s, &mixed, &a), Err(TwistError::NotInStabilizer(_))));
    }

    #[test]
    fn kostka_unimodular() {
        assert!((1..=7).all(integrality_basis_check));
    }
}
