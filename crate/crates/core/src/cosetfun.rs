//! Class functions on a coset `G phi` of a finite group extended by an
//! automorphism: scalar products, restriction and induction between cosets.
//!
//! An element `g phi` of the coset is represented by `g`. Two elements are in
//! the same `phi`-class when `g' = x g phi(x)^-1`. All scalar products are
//! normalized: `<f, f'> = |G|^-1 sum_g f(g phi) conj(f'(g phi))`.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycloError, CycloNum};
use crate::permwreath::{
    canonical_extension_value, ClassPartition, Element, FiniteGroup, GroupDescriptor, IrrLabel, Perm, PermError,
    WreathSpec, DEFAULT_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CosetError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error("the map is not an automorphism of the group: {0}")]
    NotAutomorphism(String),
    #[error("values are not constant on phi-classes")]
    NotClassFunction,
    #[error("class functions live on different cosets")]
    ContextMismatch,
    #[error("not a phi-stable subgroup of the ambient group")]
    NotSubgroup,
    #[error("{0} is not an element of the group")]
    NotAnElement(Perm),
    #[error("invalid coset class function: {0}")]
    Invalid(String),
}

/// Where the group comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupSource {
    /// The faithful permutation image of a descriptor group.
    Descriptor(GroupDescriptor),
    /// The closure of explicit permutations.
    Generators { degree: usize, gens: Vec<Perm> },
}

/// How the automorphism is given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PhiSource {
    Identity,
    /// Conjugation `g -> s g s^-1` by a permutation of the same points.
    Ambient(Perm),
    /// Images of generators, extended multiplicatively.
    Table(Vec<(Perm, Perm)>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextSpec {
    pub group: GroupSource,
    pub phi: PhiSource,
}

/// A group with an automorphism and its `phi`-classes.
#[derive(Debug)]
pub struct CosetContext {
    spec: Option<ContextSpec>,
    group: FiniteGroup,
    phi: Vec<usize>,
    classes: ClassPartition,
}

impl CosetContext {
    pub fn from_spec(spec: ContextSpec) -> Result<Arc<Self>, CosetError> {
        let group = match &spec.group {
            GroupSource::Descriptor(d) => {
                d.validate()?;
                d.finite_group(DEFAULT_CAP)?
            }
            GroupSource::Generators { degree, gens } => FiniteGroup::generated(*degree, gens, DEFAULT_CAP)?,
        };
        let mut ctx = Self::build(group, &spec.phi)?;
        ctx.spec = Some(spec);
        Ok(Arc::new(ctx))
    }

    /// A context on an already enumerated group.
    pub fn new(group: FiniteGroup, phi: &PhiSource) -> Result<Arc<Self>, CosetError> {
        Ok(Arc::new(Self::build(group, phi)?))
    }

    /// Ordinary class functions (`phi` trivial).
    pub fn ordinary(group: FiniteGroup) -> Arc<Self> {
        Arc::new(Self::build(group, &PhiSource::Identity).expect("identity is an automorphism"))
    }

    fn build(group: FiniteGroup, phi: &PhiSource) -> Result<Self, CosetError> {
        let phi = match phi {
            PhiSource::Identity => (0..group.order()).collect(),
            PhiSource::Ambient(s) => {
                if s.degree() != group.degree() {
                    return Err(PermError::DegreeMismatch {
                        expected: group.degree(),
                        found: s.degree(),
                    }
                    .into());
                }
                group.conjugation_map(s)?
            }
            PhiSource::Table(pairs) => extend_table(&group, pairs)?,
        };
        let classes = group.twisted_classes(&phi);
        Ok(CosetContext {
            spec: None,
            group,
            phi,
            classes,
        })
    }

    pub fn spec(&self) -> Option<&ContextSpec> {
        self.spec.as_ref()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// `phi` applied to an element.
    pub fn phi(&self, g: &Perm) -> Option<&Perm> {
        self.group.index_of(g).map(|i| self.group.element(self.phi[i]))
    }

    pub fn classes(&self) -> &ClassPartition {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_rep(&self, c: usize) -> &Perm {
        self.group.element(self.classes.rep(c))
    }

    pub fn class_of(&self, g: &Perm) -> Option<usize> {
        self.group.index_of(g).map(|i| self.classes.class_of[i])
    }

    /// `(representative, size)` for every `phi`-class.
    pub fn phi_classes(&self) -> Vec<(Perm, usize)> {
        (0..self.classes.len())
            .map(|c| (self.class_rep(c).clone(), self.classes.size(c)))
            .collect()
    }

    fn same_coset(&self, other: &CosetContext) -> bool {
        std::ptr::eq(self, other) || (self.group.elements() == other.group.elements() && self.phi == other.phi)
    }
}

/// Extends generator images to a map on all elements and checks it is a
/// bijective homomorphism.
fn extend_table(group: &FiniteGroup, pairs: &[(Perm, Perm)]) -> Result<Vec<usize>, CosetError> {
    let bad = |m: String| CosetError::NotAutomorphism(m);
    for (g, h) in pairs {
        if !group.contains(g) || !group.contains(h) {
            return Err(bad(format!("{g} -> {h} leaves the group")));
        }
    }
    let n = group.order();
    let id = group.identity_index();
    let mut image: Vec<Option<usize>> = vec![None; n];
    image[id] = Some(id);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let ix = group.element(image[x].expect("visited"));
        for (g, h) in pairs {
            let y = group.index_of(&group.element(x).compose(g)).expect("closed");
            let iy = group.index_of(&ix.compose(h)).expect("closed");
            match image[y] {
                None => {
                    image[y] = Some(iy);
                    queue.push_back(y);
                }
                Some(prev) if prev != iy => return Err(bad("images are inconsistent".into())),
                Some(_) => {}
            }
        }
    }
    let image: Vec<usize> = image
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| bad("generators do not generate the group".into()))?;
    let mut hit = vec![false; n];
    for &i in &image {
        if hit[i] {
            return Err(bad("map is not injective".into()));
        }
        hit[i] = true;
    }
    Ok(image)
}

/// A function on `G phi` constant on `phi`-classes, stored per class.
#[derive(Clone, Debug)]
pub struct CosetClassFunction {
    ctx: Arc<CosetContext>,
    values: Vec<CycloNum>,
}

impl CosetClassFunction {
    pub fn zero(ctx: &Arc<CosetContext>) -> Self {
        Self::from_class_values(ctx, vec![CycloNum::zero(); ctx.class_count()])
    }

    /// The constant function `1`.
    pub fn one(ctx: &Arc<CosetContext>) -> Self {
        Self::from_class_values(ctx, vec![CycloNum::one(); ctx.class_count()])
    }

    /// Values listed in class order.
    pub fn from_class_values(ctx: &Arc<CosetContext>, values: Vec<CycloNum>) -> Self {
        assert_eq!(values.len(), ctx.class_count(), "one value per class");
        CosetClassFunction {
            ctx: Arc::clone(ctx),
            values,
        }
    }

    /// Evaluates `f` on class representatives only; `f` must be a class
    /// function.
    pub fn from_fn(ctx: &Arc<CosetContext>, f: impl Fn(&Perm) -> CycloNum) -> Self {
        let values = (0..ctx.class_count()).map(|c| f(ctx.class_rep(c))).collect();
        Self::from_class_values(ctx, values)
    }

    /// Values on every element in group order, checked for constancy on
    /// classes.
    pub fn from_pointwise(ctx: &Arc<CosetContext>, values: &[CycloNum]) -> Result<Self, CosetError> {
        if values.len() != ctx.group.order() {
            return Err(CosetError::Invalid("one value per element expected".into()));
        }
        for class in &ctx.classes.classes {
            if class.iter().any(|&i| values[i] != values[class[0]]) {
                return Err(CosetError::NotClassFunction);
            }
        }
        Ok(Self::from_fn(ctx, |g| values[ctx.group.index_of(g).expect("member")].clone()))
    }

    pub fn context(&self) -> &Arc<CosetContext> {
        &self.ctx
    }

    pub fn class_values(&self) -> &[CycloNum] {
        &self.values
    }

    pub fn value_at(&self, g: &Perm) -> Result<&CycloNum, CosetError> {
        let c = self.ctx.class_of(g).ok_or_else(|| CosetError::NotAnElement(g.clone()))?;
        Ok(&self.values[c])
    }

    pub fn add(&self, other: &Self) -> Result<Self, CosetError> {
        if !self.ctx.same_coset(&other.ctx) {
            return Err(CosetError::ContextMismatch);
        }
        Ok(Self::from_class_values(
            &self.ctx,
            self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        Self::from_class_values(&self.ctx, self.values.iter().map(|v| v * c).collect())
    }

    pub fn to_json(&self) -> Result<serde_json::Value, CosetError> {
        let spec = self
            .ctx
            .spec
            .as_ref()
            .ok_or_else(|| CosetError::Invalid("context has no serializable source".into()))?;
        let values: Vec<(Perm, String)> = (0..self.ctx.class_count())
            .map(|c| (self.ctx.class_rep(c).clone(), self.values[c].to_string()))
            .collect();
        Ok(serde_json::json!({ "ctx": spec, "values": values }))
    }

    /// Inverse of [`CosetClassFunction::to_json`]; classes not listed are zero.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, CosetError> {
        #[derive(Deserialize)]
        struct Raw {
            ctx: ContextSpec,
            values: Vec<(Perm, String)>,
        }
        let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| CosetError::Invalid(e.to_string()))?;
        let ctx = CosetContext::from_spec(raw.ctx)?;
        let mut values: Vec<Option<CycloNum>> = vec![None; ctx.class_count()];
        for (rep, s) in raw.values {
            let c = ctx.class_of(&rep).ok_or(CosetError::NotAnElement(rep))?;
            let x: CycloNum = s.parse()?;
            if values[c].replace(x).is_some() {
                return Err(CosetError::Invalid("class listed twice".into()));
            }
        }
        Ok(Self::from_class_values(
            &ctx,
            values.into_iter().map(Option::unwrap_or_default).collect(),
        ))
    }
}

/// `phi`-classes as `(representative, size)`.
pub fn phi_classes(ctx: &CosetContext) -> Vec<(Perm, usize)> {
    ctx.phi_classes()
}

/// Normalized scalar product `|G|^-1 sum f conj(f')`.
pub fn coset_inner(f: &CosetClassFunction, g: &CosetClassFunction) -> Result<CycloNum, CosetError> {
    if !f.ctx.same_coset(&g.ctx) {
        return Err(CosetError::ContextMismatch);
    }
    let ctx = &f.ctx;
    let mut total = CycloNum::zero();
    for c in 0..ctx.class_count() {
        if f.values[c].is_zero() || g.values[c].is_zero() {
            continue;
        }
        let size = BigRational::from_integer(BigInt::from(ctx.classes.size(c)));
        total = &total + &(&f.values[c] * &g.values[c].conjugate()).scale(&size);
    }
    Ok(total.scale(&BigRational::new(BigInt::from(1), BigInt::from(ctx.group.order()))))
}

/// Checks that `sub` is a subgroup whose automorphism is
/// `k -> x phi(k) x^-1` for the offset `x`.
fn check_subcoset(ambient: &CosetContext, sub: &CosetContext, x: &Perm) -> Result<(), CosetError> {
    if !ambient.group.contains(x) {
        return Err(CosetError::NotAnElement(x.clone()));
    }
    let x_inv = x.inverse();
    for k in sub.group.elements() {
        if !ambient.group.contains(k) {
            return Err(CosetError::NotSubgroup);
        }
        let expected = x.compose(ambient.phi(k).expect("member")).compose(&x_inv);
        if sub.phi(k) != Some(&expected) {
            return Err(CosetError::NotSubgroup);
        }
    }
    Ok(())
}

/// Restriction to the subcoset `K phi` of `G phi`.
pub fn coset_restrict(f: &CosetClassFunction, sub: &Arc<CosetContext>) -> Result<CosetClassFunction, CosetError> {
    let id = Perm::identity(f.ctx.group.degree());
    coset_restrict_offset(f, sub, &id)
}

/// Restriction to the subcoset `K x phi`: `f'(k) = f(k x)`. The subgroup
/// context must carry the automorphism `ad(x) phi`.
pub fn coset_restrict_offset(
    f: &CosetClassFunction,
    sub: &Arc<CosetContext>,
    x: &Perm,
) -> Result<CosetClassFunction, CosetError> {
    check_subcoset(&f.ctx, sub, x)?;
    let mut values = Vec::with_capacity(sub.class_count());
    for c in 0..sub.class_count() {
        values.push(f.value_at(&sub.class_rep(c).compose(x))?.clone());
    }
    Ok(CosetClassFunction::from_class_values(sub, values))
}

/// Induction from `K phi` to `G phi`, adjoint to [`coset_restrict`]:
/// `Ind f'(g) = |K|^-1 sum_{y in G, y g phi(y)^-1 in K} f'(y g phi(y)^-1)`.
pub fn coset_induce(f: &CosetClassFunction, ambient: &Arc<CosetContext>) -> Result<CosetClassFunction, CosetError> {
    let id = Perm::identity(ambient.group.degree());
    coset_induce_offset(f, ambient, &id)
}

/// Induction from the subcoset `K x phi`, adjoint to
/// [`coset_restrict_offset`].
pub fn coset_induce_offset(
    f: &CosetClassFunction,
    ambient: &Arc<CosetContext>,
    x: &Perm,
) -> Result<CosetClassFunction, CosetError> {
    let sub = &f.ctx;
    check_subcoset(ambient, sub, x)?;
    let g = &ambient.group;
    let x_inv = x.inverse();
    let phi_inv: Vec<Perm> = (0..g.order()).map(|i| g.element(ambient.phi[i]).inverse()).collect();
    let norm = BigRational::new(BigInt::from(1), BigInt::from(sub.group.order()));
    let mut values = Vec::with_capacity(ambient.class_count());
    for c in 0..ambient.class_count() {
        let rep = ambient.class_rep(c);
        let mut counts: HashMap<usize, i64> = HashMap::new();
        for (i, y) in g.elements().iter().enumerate() {
            let k = y.compose(rep).compose(&phi_inv[i]).compose(&x_inv);
            if let Some(kc) = sub.class_of(&k) {
                *counts.entry(kc).or_insert(0) += 1;
            }
        }
        let mut v = CycloNum::zero();
        for (kc, n) in counts {
            v = &v + &f.values[kc].scale(&BigRational::from_integer(BigInt::from(n)));
        }
        values.push(v.scale(&norm));
    }
    Ok(CosetClassFunction::from_class_values(ambient, values))
}

/// The base group `H = M(blocks, H0)` of a wreath, realised inside the
/// wreath's faithful permutation image, together with the coset `H a`.
pub struct WreathCoset {
    pub spec: WreathSpec,
    pub a: Perm,
    pub ctx: Arc<CosetContext>,
    /// Base tuple of each element of `H`, by element index.
    tuples: Vec<Vec<Element>>,
}

impl WreathCoset {
    pub fn new(spec: &WreathSpec, a: &Perm) -> Result<Self, CosetError> {
        let desc = GroupDescriptor::Wreath(spec.clone());
        desc.validate()?;
        if !spec.top_group(DEFAULT_CAP)?.contains(a) {
            return Err(CosetError::NotAnElement(a.clone()));
        }
        let nb = spec.block_count();
        let base_desc = GroupDescriptor::Prod(vec![(*spec.base).clone(); nb]);
        let id_top = Perm::identity(spec.deg);
        let embed = |t: Vec<Element>| Element::Wreath {
            base: t,
            top: id_top.clone(),
        };
        let mut pairs: Vec<(Perm, Vec<Element>)> = base_desc
            .enumerate_elements(DEFAULT_CAP)?
            .into_iter()
            .map(|e| {
                let Element::Prod(t) = e else { unreachable!() };
                (desc.to_perm(&embed(t.clone())), t)
            })
            .collect();
        pairs.sort_by(|p, q| p.0.cmp(&q.0));
        let gens: Vec<Perm> = base_desc
            .generators()
            .into_iter()
            .map(|e| {
                let Element::Prod(t) = e else { unreachable!() };
                desc.to_perm(&embed(t))
            })
            .collect();
        let perms: Vec<Perm> = pairs.iter().map(|p| p.0.clone()).collect();
        let tuples = pairs.into_iter().map(|p| p.1).collect();
        let group = FiniteGroup::from_elements(desc.perm_degree(), perms, gens);
        let s = desc.to_perm(&Element::Wreath {
            base: vec![spec.base.identity(); nb],
            top: a.clone(),
        });
        let ctx = CosetContext::new(group, &PhiSource::Ambient(s))?;
        Ok(WreathCoset {
            spec: spec.clone(),
            a: a.clone(),
            ctx,
            tuples,
        })
    }

    pub fn tuple(&self, h: &Perm) -> &[Element] {
        &self.tuples[self.ctx.group.index_of(h).expect("member of the base group")]
    }

    /// Base labels fixed by `a`, i.e. the `a`-invariant irreducibles of `H`.
    pub fn invariant_labels(&self) -> Result<Vec<Vec<IrrLabel>>, CosetError> {
        let base = crate::permwreath::irr_labels(&self.spec.base)?;
        let nb = self.spec.block_count();
        let ab = self.spec.block_perm(&self.a);
        let mut out = Vec::new();
        let mut idx = vec![0usize; nb];
        loop {
            if (0..nb).all(|j| idx[ab.apply(j)] == idx[j]) {
                out.push(idx.iter().map(|&i| base[i].clone()).collect());
            }
            let mut pos = nb;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < base.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// `h a -> (chi ⋊ a)(h a)` as a class function on `H a`.
    pub fn extension_function(&self, chi: &[IrrLabel]) -> Result<CosetClassFunction, CosetError> {
        let mut values = Vec::with_capacity(self.ctx.class_count());
        for c in 0..self.ctx.class_count() {
            let h = self.tuple(self.ctx.class_rep(c));
            values.push(canonical_extension_value(&self.spec, chi, &self.a, h)?);
        }
        Ok(CosetClassFunction::from_class_values(&self.ctx, values))
    }

    /// The family `(chi ⋊ a)` over all `a`-invariant `chi`.
    pub fn extension_basis(&self) -> Result<Vec<(Vec<IrrLabel>, CosetClassFunction)>, CosetError> {
        self.invariant_labels()?
            .into_iter()
            .map(|chi| {
                let f = self.extension_function(&chi)?;
                Ok((chi, f))
            })
            .collect()
    }
}

/// The class function `h a -> (chi ⋊ a)(h a)` on the coset `H a`.
pub fn extension_restricted_to_coset(
    spec: &WreathSpec,
    chi: &[IrrLabel],
    a: &Perm,
) -> Result<CosetClassFunction, CosetError> {
    WreathCoset::new(spec, a)?.extension_function(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{character_table, enumerate_partitions, Partition};
    use crate::permwreath::all_perms;

    fn sym(n: usize) -> FiniteGroup {
        FiniteGroup::from_elements(n, all_perms(n), vec![Perm::long_cycle(n), Perm::from_cycles(n, &[&[0, 1]]).unwrap()])
    }

    fn sym_char(ctx: &Arc<CosetContext>, lambda: &Partition) -> CosetClassFunction {
        let t = character_table(lambda.size());
        CosetClassFunction::from_fn(ctx, |g| CycloNum::from_integer(t.value(lambda, &g.cycle_type())))
    }

    #[test]
    fn phi_class_examples() {
        let s3 = CosetContext::ordinary(sym(3));
        let mut sizes: Vec<usize> = phi_classes(&s3).into_iter().map(|(_, s)| s).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        let spec = WreathSpec::new(GroupDescriptor::Sym(2), 2, vec![Perm::long_cycle(2)]);
        let wc = WreathCoset::new(&spec, &Perm::long_cycle(2)).unwrap();
        assert_eq!(wc.ctx.class_count(), 2);
    }

    #[test]
    fn inner_product_basics() {
        let ctx = CosetContext::ordinary(sym(3));
        let one = CosetClassFunction::one(&ctx);
        let zero = CosetClassFunction::zero(&ctx);
        assert_eq!(coset_inner(&one, &one).unwrap(), CycloNum::one());
        assert_eq!(coset_inner(&zero, &one).unwrap(), CycloNum::zero());
        for l in enumerate_partitions(3) {
            let c = sym_char(&ctx, &l);
            assert_eq!(coset_inner(&c, &c).unwrap(), CycloNum::one());
        }
    }

    #[test]
    fn induction_from_s2_to_s3() {
        let g = CosetContext::ordinary(sym(3));
        let k = FiniteGroup::generated(3, &[Perm::from_cycles(3, &[&[0, 1]]).unwrap()], DEFAULT_CAP).unwrap();
        let kctx = CosetContext::ordinary(k);
        let triv = CosetClassFunction::one(&kctx);
        let ind = coset_induce(&triv, &g).unwrap();
        // permutation character on 3 points: 3, 1, 0 on cycle types 1^3, 21, 3
        for (rep, _) in g.phi_classes() {
            let expected = rep.images().iter().enumerate().filter(|(i, &j)| *i == j).count();
            assert_eq!(ind.value_at(&rep).unwrap(), &CycloNum::from_integer(expected as i64));
        }
        let res = coset_restrict(&ind, &kctx).unwrap();
        assert_eq!(coset_inner(&res, &triv).unwrap(), CycloNum::from_integer(2));
    }

    #[test]
    fn identity_restriction_and_induction() {
        let g = CosetContext::ordinary(sym(3));
        let c = sym_char(&g, &Partition::new(vec![2, 1]).unwrap());
        let r = coset_restrict(&c, &g).unwrap();
        assert_eq!(r.class_values(), c.class_values());
        let i = coset_induce(&c, &g).unwrap();
        assert_eq!(i.class_values(), c.class_values());
    }

    #[test]
    fn extension_basis_on_swap_coset() {
        let spec = WreathSpec::new(GroupDescriptor::Sym(2), 2, vec![Perm::long_cycle(2)]);
        let wc = WreathCoset::new(&spec, &Perm::long_cycle(2)).unwrap();
        let basis = wc.extension_basis().unwrap();
        assert_eq!(basis.len(), 2);
        for (i, (_, f)) in basis.iter().enumerate() {
            for (j, (_, g)) in basis.iter().enumerate() {
                let expected = if i == j { 1 } else { 0 };
                assert_eq!(coset_inner(f, g).unwrap(), CycloNum::from_integer(expected));
            }
        }
        let sign_sign = &basis[1].1;
        let mut vals: Vec<String> = sign_sign.class_values().iter().map(ToString::to_string).collect();
        vals.sort();
        assert_eq!(vals, vec!["1:[0=-1/1]", "1:[0=1/1]"]);
    }

    #[test]
    fn generator_table_automorphism() {
        let g = sym(3);
        let t = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let c = Perm::long_cycle(3);
        // conjugation by (1 2) given as a table
        let s = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let table = vec![(t.clone(), s.conjugate(&t)), (c.clone(), s.conjugate(&c))];
        let a = CosetContext::new(g.clone(), &PhiSource::Table(table)).unwrap();
        let b = CosetContext::new(g.clone(), &PhiSource::Ambient(s)).unwrap();
        assert_eq!(a.phi, b.phi);
        let bad = vec![(t.clone(), t.clone()), (c.clone(), t)];
        assert!(CosetContext::new(g, &PhiSource::Table(bad)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let spec = ContextSpec {
            group: GroupSource::Descriptor(GroupDescriptor::Sym(3)),
            phi: PhiSource::Identity,
        };
        let ctx = CosetContext::from_spec(spec).unwrap();
        let f = sym_char(&ctx, &Partition::new(vec![2, 1]).unwrap());
        let j = f.to_json().unwrap();
        let back = CosetClassFunction::from_json(&j).unwrap();
        assert_eq!(back.class_values(), f.class_values());
        assert_eq!(back.to_json().unwrap(), j);
    }
}
