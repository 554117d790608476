//! Irreducible characters of descriptor groups by Clifford theory.
//!
//! For a wreath `H ⋊ A` with `H = base^blocks`, an irreducible character is
//! labelled by an `A`-orbit of tuples `chi` of base characters (stored by its
//! minimal member) and an irreducible `xi` of the stabilizer `A_chi`; it is
//! induced from `(chi ⋊ A_chi) ⊗ xi`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{Element, FiniteGroup, GroupDescriptor, Perm, PermError, TopGroup, TopLabel, WreathSpec, DEFAULT_CAP};
use crate::cyclotomic::CycloNum;
use crate::partitions::{character_table, enumerate_partitions, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IrrLabel {
    Sym(Partition),
    Prod(Vec<IrrLabel>),
    Wreath { chi: Vec<IrrLabel>, xi: TopLabel },
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::Sym(p) => write!(f, "{p}"),
            IrrLabel::Prod(ls) => {
                f.write_str("(")?;
                for (i, l) in ls.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{l}")?;
                }
                f.write_str(")")
            }
            IrrLabel::Wreath { chi, xi } => {
                f.write_str("<")?;
                for (i, l) in chi.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{l}")?;
                }
                write!(f, "|{xi}>")
            }
        }
    }
}

/// Stabilizer in the top group of a block-indexed tuple of labels.
pub fn stabilizer_of_label(w: &WreathSpec, chi: &[IrrLabel]) -> Result<FiniteGroup, PermError> {
    if chi.len() != w.block_count() {
        return Err(PermError::InvalidLabel(format!("expected {} entries", w.block_count())));
    }
    let top = w.top_group(DEFAULT_CAP)?;
    Ok(stabilizer_in(w, &top, chi))
}

fn stabilizer_in<T: PartialEq>(w: &WreathSpec, top: &FiniteGroup, chi: &[T]) -> FiniteGroup {
    top.subgroup_where(|a| {
        let ab = w.block_perm(a);
        (0..chi.len()).all(|j| chi[ab.apply(j)] == chi[j])
    })
}

/// The fixed points of a top group on `M(X, H0)`: one diagonal copy of
/// `H0` per orbit on blocks.
pub fn fixed_point_subgroup(w: &WreathSpec) -> Result<GroupDescriptor, PermError> {
    let orbits = block_orbits(w, &w.top_group(DEFAULT_CAP)?);
    Ok(if orbits.len() == 1 {
        (*w.base).clone()
    } else {
        GroupDescriptor::Prod(vec![(*w.base).clone(); orbits.len()])
    })
}

/// Orbits of a top group on blocks, each sorted, ordered by minimum.
pub fn block_orbits(w: &WreathSpec, top: &FiniteGroup) -> Vec<Vec<usize>> {
    let nb = w.block_count();
    let mut seen = vec![false; nb];
    let mut out = Vec::new();
    let block_perms: Vec<Perm> = top.elements().iter().map(|a| w.block_perm(a)).collect();
    for j in 0..nb {
        if seen[j] {
            continue;
        }
        let mut orbit: Vec<usize> = block_perms.iter().map(|p| p.apply(j)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &k in &orbit {
            seen[k] = true;
        }
        out.push(orbit);
    }
    out
}

/// Every irreducible label of the group.
pub fn irr_labels(g: &GroupDescriptor) -> Result<Vec<IrrLabel>, PermError> {
    match g {
        GroupDescriptor::Sym(n) => Ok(enumerate_partitions(*n).into_iter().map(IrrLabel::Sym).collect()),
        GroupDescriptor::Prod(fs) => {
            let mut out: Vec<Vec<IrrLabel>> = vec![Vec::new()];
            for f in fs {
                let ls = irr_labels(f)?;
                out = out
                    .into_iter()
                    .flat_map(|prefix| {
                        ls.iter().map(move |l| {
                            let mut v = prefix.clone();
                            v.push(l.clone());
                            v
                        })
                    })
                    .collect();
            }
            Ok(out.into_iter().map(IrrLabel::Prod).collect())
        }
        GroupDescriptor::Wreath(w) => {
            let base = irr_labels(&w.base)?;
            let top = w.top_group(DEFAULT_CAP)?;
            let block_perms: Vec<Perm> = top.elements().iter().map(|a| w.block_perm(a)).collect();
            let nb = w.block_count();
            let mut out = Vec::new();
            let mut idx = vec![0usize; nb];
            loop {
                let minimal = block_perms.iter().all(|p| {
                    let mut moved = idx.clone();
                    for j in 0..nb {
                        moved[p.apply(j)] = idx[j];
                    }
                    moved >= idx
                });
                if minimal {
                    let stab = TopGroup::new(stabilizer_in(w, &top, &idx))?;
                    let chi: Vec<IrrLabel> = idx.iter().map(|&i| base[i].clone()).collect();
                    for xi in stab.irr_labels() {
                        out.push(IrrLabel::Wreath { chi: chi.clone(), xi });
                    }
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
    }
}

/// A character prepared for repeated evaluation.
#[derive(Clone, Debug)]
pub enum CompiledCharacter {
    Sym(Partition),
    Prod(Vec<CompiledCharacter>),
    Wreath(Box<CompiledWreath>),
}

#[derive(Clone, Debug)]
pub struct CompiledWreath {
    spec: WreathSpec,
    top: FiniteGroup,
    stab: TopGroup,
    xi: TopLabel,
    chi: Vec<CompiledCharacter>,
}

impl CompiledCharacter {
    pub fn new(g: &GroupDescriptor, label: &IrrLabel) -> Result<Self, PermError> {
        let bad = || PermError::InvalidLabel(format!("{label} for {g:?}"));
        match (g, label) {
            (GroupDescriptor::Sym(n), IrrLabel::Sym(p)) if p.size() == *n => Ok(CompiledCharacter::Sym(p.clone())),
            (GroupDescriptor::Prod(fs), IrrLabel::Prod(ls)) if fs.len() == ls.len() => Ok(CompiledCharacter::Prod(
                fs.iter()
                    .zip(ls)
                    .map(|(f, l)| CompiledCharacter::new(f, l))
                    .collect::<Result<_, _>>()?,
            )),
            (GroupDescriptor::Wreath(w), IrrLabel::Wreath { chi, xi }) if chi.len() == w.block_count() => {
                let top = w.top_group(DEFAULT_CAP)?;
                let stab = TopGroup::new(stabilizer_in(w, &top, chi))?;
                if !stab.contains_label(xi) {
                    return Err(bad());
                }
                let compiled = chi
                    .iter()
                    .map(|l| CompiledCharacter::new(&w.base, l))
                    .collect::<Result<_, _>>()?;
                Ok(CompiledCharacter::Wreath(Box::new(CompiledWreath {
                    spec: w.clone(),
                    top,
                    stab,
                    xi: xi.clone(),
                    chi: compiled,
                })))
            }
            _ => Err(bad()),
        }
    }

    pub fn value(&self, g: &GroupDescriptor, x: &Element) -> CycloNum {
        match (self, g, x) {
            (CompiledCharacter::Sym(p), _, Element::Sym(perm)) => {
                CycloNum::from_integer(character_table(p.size()).value(p, &perm.cycle_type()))
            }
            (CompiledCharacter::Prod(cs), GroupDescriptor::Prod(fs), Element::Prod(es)) => cs
                .iter()
                .zip(fs.iter().zip(es))
                .map(|(c, (f, e))| c.value(f, e))
                .product(),
            (CompiledCharacter::Wreath(cw), _, Element::Wreath { base, top }) => cw.value(base, top),
            _ => panic!("element does not match the compiled character"),
        }
    }

    /// Character degree.
    pub fn degree(&self, g: &GroupDescriptor) -> u64 {
        match (self, g) {
            (CompiledCharacter::Sym(p), _) => character_table(p.size()).degree(p) as u64,
            (CompiledCharacter::Prod(cs), GroupDescriptor::Prod(fs)) => {
                cs.iter().zip(fs).map(|(c, f)| c.degree(f)).product()
            }
            (CompiledCharacter::Wreath(cw), _) => {
                let index = (cw.top.order() / cw.stab.order()) as u64;
                let base: u64 = cw.chi.iter().map(|c| c.degree(&cw.spec.base)).product();
                index * base * cw.stab.degree(&cw.xi)
            }
            _ => panic!("descriptor does not match the compiled character"),
        }
    }
}

impl CompiledWreath {
    fn value(&self, h: &[Element], a: &Perm) -> CycloNum {
        let w = &self.spec;
        let mut total = CycloNum::zero();
        for t in self.top.elements() {
            let t_inv = t.inverse();
            let conj = t_inv.compose(a).compose(t);
            if !self.stab.group().contains(&conj) {
                continue;
            }
            let xi = self.stab.value(&self.xi, &conj);
            if xi.is_zero() {
                continue;
            }
            let moved = w.act(&t_inv, h);
            let ext = extension_value_with(w, &self.chi, &conj, &moved, &|orbit: &[usize]| orbit[0]);
            total = &total + &(&xi * &ext);
        }
        total.scale(&BigRational::new(BigInt::from(1), BigInt::from(self.stab.order())))
    }
}

/// `(chi ⋊ A_chi)(h a)`: the product over `<a>`-orbits of blocks of
/// `chi_x(h_{a^{r-1}x} ... h_{a x} h_x)`, `x` the smallest block of the orbit.
pub fn canonical_extension_value(
    w: &WreathSpec,
    chi: &[IrrLabel],
    a: &Perm,
    h: &[Element],
) -> Result<CycloNum, PermError> {
    canonical_extension_value_with_section(w, chi, a, h, &|orbit: &[usize]| orbit[0])
}

/// Same as [`canonical_extension_value`] with a caller-chosen orbit
/// representative; `pick` receives each `<a>`-orbit in ascending order.
pub fn canonical_extension_value_with_section(
    w: &WreathSpec,
    chi: &[IrrLabel],
    a: &Perm,
    h: &[Element],
    pick: &dyn Fn(&[usize]) -> usize,
) -> Result<CycloNum, PermError> {
    if chi.len() != w.block_count() || h.len() != w.block_count() {
        return Err(PermError::InvalidLabel("tuple length differs from block count".into()));
    }
    let ab = w.block_perm(a);
    if (0..chi.len()).any(|j| chi[ab.apply(j)] != chi[j]) {
        return Err(PermError::NotInStabilizer);
    }
    let mut cache: HashMap<&IrrLabel, CompiledCharacter> = HashMap::new();
    for l in chi {
        if !cache.contains_key(l) {
            cache.insert(l, CompiledCharacter::new(&w.base, l)?);
        }
    }
    let compiled: Vec<CompiledCharacter> = chi.iter().map(|l| cache[l].clone()).collect();
    Ok(extension_value_with(w, &compiled, a, h, pick))
}

fn extension_value_with(
    w: &WreathSpec,
    chi: &[CompiledCharacter],
    a: &Perm,
    h: &[Element],
    pick: &dyn Fn(&[usize]) -> usize,
) -> CycloNum {
    let ab = w.block_perm(a);
    let nb = w.block_count();
    let mut seen = vec![false; nb];
    let mut out = CycloNum::one();
    for start in 0..nb {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        let mut y = ab.apply(start);
        while y != start {
            orbit.push(y);
            y = ab.apply(y);
        }
        for &k in &orbit {
            seen[k] = true;
        }
        let mut sorted = orbit.clone();
        sorted.sort_unstable();
        let x = pick(&sorted);
        let mut acc = h[x].clone();
        let mut y = ab.apply(x);
        while y != x {
            acc = w.base.multiply(&h[y], &acc);
            y = ab.apply(y);
        }
        out = &out * &chi[x].value(&w.base, &acc);
        if out.is_zero() {
            break;
        }
    }
    out
}

/// Character value of an irreducible label at an element.
pub fn char_value(g: &GroupDescriptor, label: &IrrLabel, x: &Element) -> Result<CycloNum, PermError> {
    Ok(CompiledCharacter::new(g, label)?.value(g, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2_wr_s2() -> GroupDescriptor {
        GroupDescriptor::wreath(GroupDescriptor::Sym(2), 2, vec![Perm::long_cycle(2)])
    }

    fn sign() -> IrrLabel {
        IrrLabel::Sym(Partition::column(2))
    }

    fn triv() -> IrrLabel {
        IrrLabel::Sym(Partition::row(2))
    }

    #[test]
    fn label_counts() {
        assert_eq!(irr_labels(&GroupDescriptor::Sym(4)).unwrap().len(), 5);
        assert_eq!(irr_labels(&s2_wr_s2()).unwrap().len(), 5);
        let s2_wr_s3 = GroupDescriptor::wreath(
            GroupDescriptor::Sym(2),
            3,
            vec![Perm::long_cycle(3), Perm::from_cycles(3, &[&[0, 1]]).unwrap()],
        );
        let labels = irr_labels(&s2_wr_s3).unwrap();
        assert_eq!(labels.len(), 10);
        let degs: u64 = labels
            .iter()
            .map(|l| CompiledCharacter::new(&s2_wr_s3, l).unwrap().degree(&s2_wr_s3).pow(2))
            .sum();
        assert_eq!(degs, 48);
    }

    #[test]
    fn extension_examples() {
        let GroupDescriptor::Wreath(w) = s2_wr_s2() else { unreachable!() };
        let swap = Perm::long_cycle(2);
        let t = Element::Sym(Perm::long_cycle(2));
        let e = Element::Sym(Perm::identity(2));
        let v = canonical_extension_value(&w, &[sign(), sign()], &swap, &[t.clone(), e.clone()]).unwrap();
        assert_eq!(v, CycloNum::from_integer(-1));
        let v = canonical_extension_value(&w, &[sign(), sign()], &Perm::identity(2), &[t.clone(), e.clone()]).unwrap();
        assert_eq!(v, CycloNum::from_integer(-1));
        assert!(matches!(
            canonical_extension_value(&w, &[triv(), sign()], &swap, &[t, e]),
            Err(PermError::NotInStabilizer)
        ));
    }

    #[test]
    fn stabilizers() {
        let GroupDescriptor::Wreath(w) = s2_wr_s2() else { unreachable!() };
        assert_eq!(stabilizer_of_label(&w, &[triv(), sign()]).unwrap().order(), 1);
        assert_eq!(stabilizer_of_label(&w, &[sign(), sign()]).unwrap().order(), 2);
        let w3 = WreathSpec::new(GroupDescriptor::Sym(3), 3, vec![Perm::long_cycle(3)]);
        let l = IrrLabel::Sym(Partition::row(3));
        let m = IrrLabel::Sym(Partition::column(3));
        assert_eq!(stabilizer_of_label(&w3, &[l.clone(), l, m]).unwrap().order(), 1);
    }

    #[test]
    fn fixed_points() {
        let w = WreathSpec::new(GroupDescriptor::Sym(2), 3, vec![Perm::long_cycle(3)]);
        assert_eq!(fixed_point_subgroup(&w).unwrap(), GroupDescriptor::Sym(2));
        let w = WreathSpec::new(
            GroupDescriptor::Sym(3),
            4,
            vec![Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()],
        );
        assert_eq!(
            fixed_point_subgroup(&w).unwrap(),
            GroupDescriptor::Prod(vec![GroupDescriptor::Sym(3); 2])
        );
    }

    fn check_orthonormal(g: &GroupDescriptor) {
        let elems = g.enumerate_elements(DEFAULT_CAP).unwrap();
        let fg = g.finite_group(DEFAULT_CAP).unwrap();
        let by_perm: HashMap<Perm, &Element> = elems.iter().map(|e| (g.to_perm(e), e)).collect();
        let classes = fg.conjugacy_classes();
        let labels = irr_labels(g).unwrap();
        assert_eq!(labels.len(), classes.len());
        let table: Vec<Vec<CycloNum>> = labels
            .iter()
            .map(|l| {
                let c = CompiledCharacter::new(g, l).unwrap();
                (0..classes.len())
                    .map(|k| c.value(g, by_perm[fg.element(classes.rep(k))]))
                    .collect()
            })
            .collect();
        for (i, a) in table.iter().enumerate() {
            for (j, b) in table.iter().enumerate() {
                let s: CycloNum = (0..classes.len())
                    .map(|k| (&a[k] * &b[k].conjugate()).scale(&BigRational::from_integer(classes.size(k).into())))
                    .sum();
                let expected = if i == j { fg.order() as i64 } else { 0 };
                assert_eq!(s, CycloNum::from_integer(expected), "{} {}", labels[i], labels[j]);
            }
        }
    }

    #[test]
    fn wreath_characters_are_orthonormal() {
        check_orthonormal(&s2_wr_s2());
        check_orthonormal(&GroupDescriptor::wreath(GroupDescriptor::Sym(3), 3, vec![Perm::long_cycle(3)]));
        check_orthonormal(&GroupDescriptor::wreath(
            GroupDescriptor::Sym(3),
            3,
            vec![Perm::long_cycle(3), Perm::from_cycles(3, &[&[0, 1]]).unwrap()],
        ));
        check_orthonormal(&GroupDescriptor::Wreath(WreathSpec {
            base: Box::new(GroupDescriptor::Sym(2)),
            deg: 4,
            top_gens: vec![Perm::long_cycle(4)],
            blocks: Some(vec![vec![0, 2], vec![1, 3]]),
        }));
    }

    #[test]
    fn trivial_label_is_one() {
        let g = s2_wr_s2();
        let triv_label = IrrLabel::Wreath {
            chi: vec![triv(), triv()],
            xi: TopGroup::new(FiniteGroup::generated(2, &[Perm::long_cycle(2)], DEFAULT_CAP).unwrap())
                .unwrap()
                .trivial_label(),
        };
        for x in g.enumerate_elements(DEFAULT_CAP).unwrap() {
            assert_eq!(char_value(&g, &triv_label, &x).unwrap(), CycloNum::one());
        }
    }
}
