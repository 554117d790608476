//! Products of wreath-type reductive groups `GL_n^d ⋊ A` with a Frobenius
//! twisted by a permutation `sigma` and a transpose-inverse parity, and the
//! finite structure fixed by that Frobenius.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partitions::{GroupType, QPoly};
use crate::permwreath::{FiniteGroup, GroupDescriptor, Perm, PermError, WreathSpec, DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("invalid group spec: {0}")]
    Invalid(String),
    #[error("sigma does not normalize A in factor {0}")]
    NotNormalizing(usize),
}

/// One factor `GL_n^d ⋊ A` with Frobenius twisted by `sigma` and `twist`
/// transpose-inverse compositions (mod 2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub n: usize,
    pub d: usize,
    #[serde(rename = "A_gens", default)]
    pub a_gens: Vec<Perm>,
    pub sigma: Perm,
    #[serde(default)]
    pub twist: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub factors: Vec<FactorSpec>,
}

impl FactorSpec {
    pub fn new(n: usize, d: usize, a_gens: Vec<Perm>, sigma: Perm, twist: u8) -> Self {
        FactorSpec {
            n,
            d,
            a_gens,
            sigma,
            twist,
        }
    }
}

impl GroupSpec {
    pub fn single(f: FactorSpec) -> Self {
        GroupSpec { factors: vec![f] }
    }

    pub fn from_json(s: &str) -> Result<Self, SpecError> {
        let spec: GroupSpec = serde_json::from_str(s).map_err(|e| SpecError::Invalid(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), SpecError> {
        if self.factors.is_empty() {
            return Err(SpecError::Invalid("no factors".into()));
        }
        for (i, f) in self.factors.iter().enumerate() {
            if f.n == 0 || f.d == 0 {
                return Err(SpecError::Invalid(format!("factor {i}: n and d must be positive")));
            }
            if f.twist > 1 {
                return Err(SpecError::Invalid(format!("factor {i}: twist must be 0 or 1")));
            }
            if f.sigma.degree() != f.d {
                return Err(SpecError::Invalid(format!("factor {i}: sigma must act on {} points", f.d)));
            }
            let a = FiniteGroup::generated(f.d, &f.a_gens, DEFAULT_CAP)?;
            if f.a_gens.iter().any(|g| !a.contains(&f.sigma.conjugate(g))) {
                return Err(SpecError::NotNormalizing(i));
            }
        }
        Ok(())
    }
}

/// A `sigma`-orbit of one factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub factor: usize,
    /// Points `x, sigma x, sigma^2 x, ..` starting from the smallest.
    pub points: Vec<usize>,
    pub n: usize,
    pub kind: GroupType,
}

impl Orbit {
    pub fn length(&self) -> usize {
        self.points.len()
    }

    /// `|GL_n(q^l)|` or `|U_n(q^l)|`.
    pub fn order_polynomial(&self) -> QPoly {
        let n = self.n;
        let mut p = QPoly::monomial(1, n * (n - 1) / 2);
        p = &p * &crate::partitions::p_prime_order(n, self.kind);
        p.substitute_power(self.length())
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GroupType::Linear => "GL",
            GroupType::Unitary => "GU",
        };
        if self.length() == 1 {
            write!(f, "{name}_{}(q)", self.n)
        } else {
            write!(f, "{name}_{}(q^{})", self.n, self.length())
        }
    }
}

/// The fixed-point data of a [`GroupSpec`].
#[derive(Clone, Debug)]
pub struct FixedStructure {
    pub spec: GroupSpec,
    pub orbits: Vec<Orbit>,
    /// First global point of each factor; factors occupy consecutive points.
    pub offsets: Vec<usize>,
    /// `A_i` per factor.
    pub a_groups: Vec<FiniteGroup>,
    /// `A_i^F`, the centralizer of `sigma_i` in `A_i`, per factor.
    pub af_groups: Vec<FiniteGroup>,
    /// `A^F` acting on all points.
    pub af: FiniteGroup,
}

/// Orbit decomposition and fixed top group.
pub fn analyze(spec: &GroupSpec) -> Result<FixedStructure, SpecError> {
    spec.validate()?;
    let mut orbits = Vec::new();
    let mut offsets = Vec::new();
    let mut a_groups = Vec::new();
    let mut af_groups = Vec::new();
    let mut total = 0;
    for (i, f) in spec.factors.iter().enumerate() {
        offsets.push(total);
        total += f.d;
        for cycle in f.sigma.cycles() {
            let l = cycle.len();
            let unitary = f.twist == 1 && l % 2 == 1;
            orbits.push(Orbit {
                factor: i,
                points: cycle,
                n: f.n,
                kind: if unitary { GroupType::Unitary } else { GroupType::Linear },
            });
        }
        let a = FiniteGroup::generated(f.d, &f.a_gens, DEFAULT_CAP)?;
        let af = a.subgroup_where(|g| f.sigma.compose(g) == g.compose(&f.sigma));
        a_groups.push(a);
        af_groups.push(af);
    }
    let mut gens = Vec::new();
    for (i, af) in af_groups.iter().enumerate() {
        for g in af.generators() {
            let mut images: Vec<usize> = (0..total).collect();
            for x in 0..g.degree() {
                images[offsets[i] + x] = offsets[i] + g.apply(x);
            }
            gens.push(Perm::from_images(images)?);
        }
    }
    let af = FiniteGroup::generated(total, &gens, DEFAULT_CAP)?;
    Ok(FixedStructure {
        spec: spec.clone(),
        orbits,
        offsets,
        a_groups,
        af_groups,
        af,
    })
}

impl FixedStructure {
    /// Total number of top points.
    pub fn degree(&self) -> usize {
        self.af.degree()
    }

    /// Global orbit index of each global point.
    pub fn orbit_of_point(&self) -> Vec<usize> {
        let mut out = vec![0; self.degree()];
        for (k, o) in self.orbits.iter().enumerate() {
            for &x in &o.points {
                out[self.offsets[o.factor] + x] = k;
            }
        }
        out
    }

    /// Permutation of orbits induced by an element of `A^F`.
    pub fn orbit_perm(&self, b: &Perm) -> Perm {
        let of = self.orbit_of_point();
        Perm::from_images(
            self.orbits
                .iter()
                .map(|o| of[b.apply(self.offsets[o.factor] + o.points[0])])
                .collect(),
        )
        .expect("A^F permutes sigma-orbits")
    }

    /// `W°F`: one symmetric group per orbit.
    pub fn wf_descriptor(&self) -> GroupDescriptor {
        if self.orbits.len() == 1 {
            GroupDescriptor::Sym(self.orbits[0].n)
        } else {
            GroupDescriptor::Prod(self.orbits.iter().map(|o| GroupDescriptor::Sym(o.n)).collect())
        }
    }

    pub fn wf_order(&self) -> usize {
        self.orbits.iter().map(|o| (1..=o.n).product::<usize>()).product()
    }
}

/// `|H^F| = |A^F| prod_orbits |GL_n(q^l)| or |U_n(q^l)|`.
pub fn order_polynomial(s: &FixedStructure) -> QPoly {
    let mut p = QPoly::constant(s.af.order() as i64);
    for o in &s.orbits {
        p = &p * &o.order_polynomial();
    }
    p
}

/// The normalizer in `GL_n` of the Levi subgroup of a composition of `n`:
/// one factor per distinct part size `m` with multiplicity `d_m`, top
/// `S_{d_m}`, `sigma` the identity.
pub fn levi_normalizer(n: usize, parts: &[usize], twist: u8) -> Result<GroupSpec, SpecError> {
    levi_normalizer_twisted(n, parts, twist, &BTreeMap::new())
}

/// As [`levi_normalizer`], with `sigma` chosen per part size.
pub fn levi_normalizer_twisted(
    n: usize,
    parts: &[usize],
    twist: u8,
    sigmas: &BTreeMap<usize, Perm>,
) -> Result<GroupSpec, SpecError> {
    if parts.iter().sum::<usize>() != n || parts.contains(&0) {
        return Err(SpecError::Invalid(format!("{parts:?} is not a composition of {n}")));
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_insert(0) += 1;
    }
    let factors = counts
        .into_iter()
        .map(|(m, d)| {
            let mut gens = Vec::new();
            if d >= 2 {
                gens.push(Perm::from_cycles(d, &[&[0, 1]])?);
            }
            if d >= 3 {
                gens.push(Perm::long_cycle(d));
            }
            let sigma = sigmas.get(&m).cloned().unwrap_or_else(|| Perm::identity(d));
            Ok(FactorSpec::new(m, d, gens, sigma, twist))
        })
        .collect::<Result<Vec<_>, SpecError>>()?;
    let spec = GroupSpec { factors };
    spec.validate()?;
    Ok(spec)
}

/// `W°F ⋊ A^F` as a descriptor: per factor a wreath of `S_n` over the
/// `sigma`-orbits (as blocks) with top `A_i^F`, or a plain product of
/// symmetric groups when `A_i^F` is trivial.
pub fn weyl_group_with_top(s: &FixedStructure) -> GroupDescriptor {
    let mut parts = Vec::new();
    for (i, f) in s.spec.factors.iter().enumerate() {
        let orbits: Vec<Vec<usize>> = s
            .orbits
            .iter()
            .filter(|o| o.factor == i)
            .map(|o| {
                let mut p = o.points.clone();
                p.sort_unstable();
                p
            })
            .collect();
        let af = &s.af_groups[i];
        if af.order() == 1 {
            parts.extend(orbits.iter().map(|_| GroupDescriptor::Sym(f.n)));
        } else {
            let singletons = orbits.iter().all(|o| o.len() == 1);
            parts.push(GroupDescriptor::Wreath(WreathSpec {
                base: Box::new(GroupDescriptor::Sym(f.n)),
                deg: f.d,
                top_gens: af.generators().to_vec(),
                blocks: if singletons { None } else { Some(orbits) },
            }));
        }
    }
    if parts.len() == 1 {
        parts.pop().expect("one part")
    } else {
        GroupDescriptor::Prod(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn cyc(d: usize) -> Perm {
        Perm::long_cycle(d)
    }

    #[test]
    fn analyze_examples() {
        let u2 = analyze(&GroupSpec::single(FactorSpec::new(2, 1, vec![], Perm::identity(1), 1))).unwrap();
        assert_eq!(u2.orbits.len(), 1);
        assert_eq!(u2.orbits[0].kind, GroupType::Unitary);

        let gl2q3 = analyze(&GroupSpec::single(FactorSpec::new(2, 3, vec![cyc(3)], cyc(3), 0))).unwrap();
        assert_eq!(gl2q3.orbits.len(), 1);
        assert_eq!(gl2q3.orbits[0].length(), 3);
        assert_eq!(gl2q3.orbits[0].kind, GroupType::Linear);
        assert_eq!(gl2q3.af.order(), 3);

        let torus = analyze(&GroupSpec::single(FactorSpec::new(1, 2, vec![cyc(2)], Perm::identity(2), 1))).unwrap();
        assert_eq!(torus.orbits.len(), 2);
        assert!(torus.orbits.iter().all(|o| o.kind == GroupType::Unitary));
        assert_eq!(torus.af.order(), 2);
    }

    #[test]
    fn sigma_must_normalize() {
        // A = <(0 1)> is not normalized by (1 2)
        let f = FactorSpec::new(1, 3, vec![Perm::from_cycles(3, &[&[0, 1]]).unwrap()], Perm::from_cycles(3, &[&[1, 2]]).unwrap(), 0);
        assert!(matches!(GroupSpec::single(f).validate(), Err(SpecError::NotNormalizing(0))));
    }

    #[test]
    fn orders() {
        let eval = |f: FactorSpec| order_polynomial(&analyze(&GroupSpec::single(f)).unwrap()).eval_i64(2);
        assert_eq!(eval(FactorSpec::new(2, 1, vec![], Perm::identity(1), 0)), BigInt::from(6));
        assert_eq!(eval(FactorSpec::new(2, 1, vec![], Perm::identity(1), 1)), BigInt::from(18));
        assert_eq!(eval(FactorSpec::new(1, 2, vec![], cyc(2), 0)), BigInt::from(3));
        let u1 = analyze(&GroupSpec::single(FactorSpec::new(1, 1, vec![], Perm::identity(1), 1))).unwrap();
        assert_eq!(order_polynomial(&u1), QPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn levi_examples() {
        let s = levi_normalizer(4, &[1, 1, 2], 0).unwrap();
        assert_eq!(s.factors.len(), 2);
        assert_eq!((s.factors[0].n, s.factors[0].d), (1, 2));
        assert_eq!((s.factors[1].n, s.factors[1].d), (2, 1));
        let s = levi_normalizer(3, &[3], 0).unwrap();
        assert_eq!(s.factors.len(), 1);
        assert!(s.factors[0].a_gens.is_empty());
        let sig = BTreeMap::from([(2, cyc(2))]);
        let s = levi_normalizer_twisted(4, &[2, 2], 0, &sig).unwrap();
        let st = analyze(&s).unwrap();
        assert_eq!(st.orbits.len(), 1);
        assert_eq!(st.orbits[0].length(), 2);
        assert_eq!(st.af.order(), 2);
        assert!(levi_normalizer(4, &[1, 2], 0).is_err());
    }

    #[test]
    fn weyl_models() {
        let st = analyze(&GroupSpec::single(FactorSpec::new(2, 1, vec![], Perm::identity(1), 0))).unwrap();
        assert_eq!(weyl_group_with_top(&st), GroupDescriptor::Sym(2));
        let st = analyze(&GroupSpec::single(FactorSpec::new(2, 2, vec![cyc(2)], Perm::identity(2), 0))).unwrap();
        assert_eq!(weyl_group_with_top(&st), GroupDescriptor::wreath(GroupDescriptor::Sym(2), 2, vec![cyc(2)]));
        let st = analyze(&GroupSpec::single(FactorSpec::new(1, 3, vec![cyc(3)], cyc(3), 0))).unwrap();
        assert_eq!(weyl_group_with_top(&st).order(DEFAULT_CAP).unwrap(), 3);
    }

    #[test]
    fn json_format() {
        let s = GroupSpec::from_json(r#"{"factors":[{"n":2,"d":3,"A_gens":[[1,2,0]],"sigma":[1,2,0],"twist":0}]}"#).unwrap();
        assert_eq!(s.factors[0].a_gens, vec![cyc(3)]);
        assert!(GroupSpec::from_json(r#"{"factors":[{"n":2,"d":3,"A_gens":[[1,1,0]],"sigma":[1,2,0]}]}"#).is_err());
    }
}
