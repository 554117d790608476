use serde::{Deserialize, Serialize};

use super::{all_perms, FiniteGroup, Perm, PermError};

/// A finite group built from symmetric groups by direct and wreath products.
///
/// JSON: `{"sym": n}`, `{"prod": [..]}` or
/// `{"wreath": {"base": .., "deg": d, "top_gens": [[..], ..]}}`. A wreath may
/// carry an optional `"blocks"` partition of the `d` top points; the base is
/// then indexed by blocks and the top permutes blocks (default: singletons).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupDescriptor {
    Sym(usize),
    Prod(Vec<GroupDescriptor>),
    Wreath(WreathSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WreathSpec {
    pub base: Box<GroupDescriptor>,
    pub deg: usize,
    pub top_gens: Vec<Perm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<usize>>>,
}

/// An element of a [`GroupDescriptor`] group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Element {
    Sym(Perm),
    Prod(Vec<Element>),
    /// `base` is indexed by blocks, `top` permutes the `deg` top points.
    Wreath { base: Vec<Element>, top: Perm },
}

impl WreathSpec {
    /// Ordinary wreath product `base ≀ <top_gens>` on `deg` coordinates.
    pub fn new(base: GroupDescriptor, deg: usize, top_gens: Vec<Perm>) -> Self {
        WreathSpec {
            base: Box::new(base),
            deg,
            top_gens,
            blocks: None,
        }
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks
            .clone()
            .unwrap_or_else(|| (0..self.deg).map(|i| vec![i]).collect())
    }

    pub fn block_count(&self) -> usize {
        self.blocks.as_ref().map_or(self.deg, Vec::len)
    }

    /// Block containing each top point.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.deg];
        for (j, b) in self.blocks().iter().enumerate() {
            for &x in b {
                out[x] = j;
            }
        }
        out
    }

    /// Permutation induced on blocks by a top element.
    pub fn block_perm(&self, a: &Perm) -> Perm {
        match &self.blocks {
            None => a.clone(),
            Some(blocks) => {
                let of = self.block_of();
                Perm::from_images(blocks.iter().map(|b| of[a.apply(b[0])]).collect())
                    .expect("top element permutes blocks")
            }
        }
    }

    pub fn top_group(&self, cap: usize) -> Result<FiniteGroup, PermError> {
        FiniteGroup::generated(self.deg, &self.top_gens, cap)
    }

    /// `(a . h)_{a(j)} = h_j` on block-indexed tuples.
    pub fn act(&self, a: &Perm, h: &[Element]) -> Vec<Element> {
        let ab = self.block_perm(a);
        let mut out = h.to_vec();
        for (j, x) in h.iter().enumerate() {
            out[ab.apply(j)] = x.clone();
        }
        out
    }
}

impl GroupDescriptor {
    pub fn symmetric(n: usize) -> Self {
        GroupDescriptor::Sym(n)
    }

    pub fn wreath(base: GroupDescriptor, deg: usize, top_gens: Vec<Perm>) -> Self {
        GroupDescriptor::Wreath(WreathSpec::new(base, deg, top_gens))
    }

    /// Structural checks: generator degrees, block partition, block action.
    pub fn validate(&self) -> Result<(), PermError> {
        match self {
            GroupDescriptor::Sym(_) => Ok(()),
            GroupDescriptor::Prod(fs) => fs.iter().try_for_each(GroupDescriptor::validate),
            GroupDescriptor::Wreath(w) => {
                w.base.validate()?;
                for g in &w.top_gens {
                    if g.degree() != w.deg {
                        return Err(PermError::DegreeMismatch {
                            expected: w.deg,
                            found: g.degree(),
                        });
                    }
                }
                if let Some(blocks) = &w.blocks {
                    let mut seen = vec![false; w.deg];
                    for b in blocks {
                        if b.is_empty() {
                            return Err(PermError::InvalidDescriptor("empty block".into()));
                        }
                        for &x in b {
                            if x >= w.deg || seen[x] {
                                return Err(PermError::InvalidDescriptor(format!(
                                    "blocks do not partition {} points",
                                    w.deg
                                )));
                            }
                            seen[x] = true;
                        }
                    }
                    if seen.iter().any(|s| !s) {
                        return Err(PermError::InvalidDescriptor("blocks miss a point".into()));
                    }
                    let of = w.block_of();
                    for g in &w.top_gens {
                        for b in blocks {
                            let target = of[g.apply(b[0])];
                            if b.iter().any(|&x| of[g.apply(x)] != target) {
                                return Err(PermError::InvalidDescriptor(format!(
                                    "top generator {g} does not permute the blocks"
                                )));
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            GroupDescriptor::Sym(n) => Element::Sym(Perm::identity(*n)),
            GroupDescriptor::Prod(fs) => Element::Prod(fs.iter().map(|f| f.identity()).collect()),
            GroupDescriptor::Wreath(w) => Element::Wreath {
                base: vec![w.base.identity(); w.block_count()],
                top: Perm::identity(w.deg),
            },
        }
    }

    /// Group product; `(b, a)(b', a') = (b . a(b'), a a')` for wreaths.
    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        match (self, x, y) {
            (GroupDescriptor::Sym(_), Element::Sym(p), Element::Sym(q)) => Element::Sym(p.compose(q)),
            (GroupDescriptor::Prod(fs), Element::Prod(a), Element::Prod(b)) => Element::Prod(
                fs.iter()
                    .zip(a.iter().zip(b))
                    .map(|(f, (s, t))| f.multiply(s, t))
                    .collect(),
            ),
            (GroupDescriptor::Wreath(w), Element::Wreath { base: b1, top: a1 }, Element::Wreath { base: b2, top: a2 }) => {
                let moved = w.act(a1, b2);
                Element::Wreath {
                    base: b1.iter().zip(&moved).map(|(s, t)| w.base.multiply(s, t)).collect(),
                    top: a1.compose(a2),
                }
            }
            _ => panic!("element does not match descriptor"),
        }
    }

    pub fn inverse(&self, x: &Element) -> Element {
        match (self, x) {
            (GroupDescriptor::Sym(_), Element::Sym(p)) => Element::Sym(p.inverse()),
            (GroupDescriptor::Prod(fs), Element::Prod(a)) => {
                Element::Prod(fs.iter().zip(a).map(|(f, s)| f.inverse(s)).collect())
            }
            (GroupDescriptor::Wreath(w), Element::Wreath { base, top }) => {
                let inv_top = top.inverse();
                let inv_base: Vec<Element> = base.iter().map(|b| w.base.inverse(b)).collect();
                Element::Wreath {
                    base: w.act(&inv_top, &inv_base),
                    top: inv_top,
                }
            }
            _ => panic!("element does not match descriptor"),
        }
    }

    /// Checks that `x` has the right shape and lies in the group.
    pub fn check_element(&self, x: &Element) -> Result<(), PermError> {
        let bad = || PermError::InvalidElement(format!("{x:?}"));
        match (self, x) {
            (GroupDescriptor::Sym(n), Element::Sym(p)) if p.degree() == *n => Ok(()),
            (GroupDescriptor::Prod(fs), Element::Prod(a)) if fs.len() == a.len() => {
                fs.iter().zip(a).try_for_each(|(f, s)| f.check_element(s))
            }
            (GroupDescriptor::Wreath(w), Element::Wreath { base, top }) if base.len() == w.block_count() => {
                base.iter().try_for_each(|b| w.base.check_element(b))?;
                let tg = w.top_group(super::DEFAULT_CAP)?;
                if tg.contains(top) {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            _ => Err(bad()),
        }
    }

    /// Number of points of the faithful permutation representation used by
    /// [`GroupDescriptor::to_perm`].
    pub fn perm_degree(&self) -> usize {
        match self {
            GroupDescriptor::Sym(n) => *n,
            GroupDescriptor::Prod(fs) => fs.iter().map(GroupDescriptor::perm_degree).sum(),
            GroupDescriptor::Wreath(w) => w.block_count() * w.base.perm_degree() + w.deg,
        }
    }

    /// Faithful permutation image. For a wreath, block `j` occupies the
    /// points `j*m .. (j+1)*m` and the top points come last; `(h, a)` sends
    /// `(j, p)` to `(a j, h_{a j}(p))`.
    pub fn to_perm(&self, x: &Element) -> Perm {
        let mut images = Vec::with_capacity(self.perm_degree());
        self.write_images(x, 0, &mut images);
        Perm::from_images(images).expect("faithful image is a permutation")
    }

    fn write_images(&self, x: &Element, offset: usize, out: &mut Vec<usize>) {
        match (self, x) {
            (GroupDescriptor::Sym(_), Element::Sym(p)) => out.extend(p.images().iter().map(|&i| i + offset)),
            (GroupDescriptor::Prod(fs), Element::Prod(a)) => {
                let mut off = offset;
                for (f, s) in fs.iter().zip(a) {
                    f.write_images(s, off, out);
                    off += f.perm_degree();
                }
            }
            (GroupDescriptor::Wreath(w), Element::Wreath { base, top }) => {
                let m = w.base.perm_degree();
                let ab = w.block_perm(top);
                let base_perms: Vec<Perm> = base.iter().map(|b| w.base.to_perm(b)).collect();
                for j in 0..w.block_count() {
                    let target = ab.apply(j);
                    let h = &base_perms[target];
                    for p in 0..m {
                        out.push(offset + target * m + h.apply(p));
                    }
                }
                let top_off = offset + w.block_count() * m;
                out.extend(top.images().iter().map(|&i| i + top_off));
            }
            _ => panic!("element does not match descriptor"),
        }
    }

    /// A generating set: standard generators of each factor and, for a
    /// wreath, base generators in every coordinate plus the top generators.
    pub fn generators(&self) -> Vec<Element> {
        match self {
            GroupDescriptor::Sym(n) => {
                let mut g = Vec::new();
                if *n >= 2 {
                    g.push(Element::Sym(Perm::from_cycles(*n, &[&[0, 1]]).expect("valid")));
                }
                if *n >= 3 {
                    g.push(Element::Sym(Perm::long_cycle(*n)));
                }
                g
            }
            GroupDescriptor::Prod(fs) => {
                let id: Vec<Element> = fs.iter().map(|f| f.identity()).collect();
                let mut out = Vec::new();
                for (i, f) in fs.iter().enumerate() {
                    for g in f.generators() {
                        let mut e = id.clone();
                        e[i] = g;
                        out.push(Element::Prod(e));
                    }
                }
                out
            }
            GroupDescriptor::Wreath(w) => {
                let nb = w.block_count();
                let mut out = Vec::new();
                for g in w.base.generators() {
                    for j in 0..nb {
                        let mut base = vec![w.base.identity(); nb];
                        base[j] = g.clone();
                        out.push(Element::Wreath {
                            base,
                            top: Perm::identity(w.deg),
                        });
                    }
                }
                for a in &w.top_gens {
                    out.push(Element::Wreath {
                        base: vec![w.base.identity(); nb],
                        top: a.clone(),
                    });
                }
                out
            }
        }
    }

    /// Group order, or `TooLarge` once it exceeds `cap`.
    pub fn order(&self, cap: usize) -> Result<usize, PermError> {
        let too_large = PermError::TooLarge { cap };
        let n = match self {
            GroupDescriptor::Sym(n) => (1..=*n).try_fold(1usize, |a, k| a.checked_mul(k)),
            GroupDescriptor::Prod(fs) => {
                let mut acc = Some(1usize);
                for f in fs {
                    acc = acc.and_then(|a| f.order(cap).ok().and_then(|o| a.checked_mul(o)));
                }
                acc
            }
            GroupDescriptor::Wreath(w) => {
                let b = w.base.order(cap)?;
                let t = w.top_group(cap)?.order();
                let mut acc = Some(t);
                for _ in 0..w.block_count() {
                    acc = acc.and_then(|a| a.checked_mul(b));
                }
                acc
            }
        };
        match n {
            Some(n) if n <= cap => Ok(n),
            _ => Err(too_large),
        }
    }

    /// Every element, failing if the order exceeds `cap`.
    pub fn enumerate_elements(&self, cap: usize) -> Result<Vec<Element>, PermError> {
        self.order(cap)?;
        Ok(self.enumerate_unchecked(cap))
    }

    fn enumerate_unchecked(&self, cap: usize) -> Vec<Element> {
        match self {
            GroupDescriptor::Sym(n) => all_perms(*n).into_iter().map(Element::Sym).collect(),
            GroupDescriptor::Prod(fs) => {
                let mut out = vec![Vec::new()];
                for f in fs {
                    let elems = f.enumerate_unchecked(cap);
                    out = out
                        .into_iter()
                        .flat_map(|prefix: Vec<Element>| {
                            elems.iter().map(move |e| {
                                let mut v = prefix.clone();
                                v.push(e.clone());
                                v
                            })
                        })
                        .collect();
                }
                out.into_iter().map(Element::Prod).collect()
            }
            GroupDescriptor::Wreath(w) => {
                let base_elems = w.base.enumerate_unchecked(cap);
                let mut tuples: Vec<Vec<Element>> = vec![Vec::new()];
                for _ in 0..w.block_count() {
                    tuples = tuples
                        .into_iter()
                        .flat_map(|prefix| {
                            base_elems.iter().map(move |e| {
                                let mut v = prefix.clone();
                                v.push(e.clone());
                                v
                            })
                        })
                        .collect();
                }
                let tops = w.top_group(cap).expect("order already checked");
                let mut out = Vec::with_capacity(tuples.len() * tops.order());
                for a in tops.elements() {
                    for t in &tuples {
                        out.push(Element::Wreath {
                            base: t.clone(),
                            top: a.clone(),
                        });
                    }
                }
                out
            }
        }
    }

    /// The group as a concrete permutation group on [`perm_degree`] points.
    ///
    /// [`perm_degree`]: GroupDescriptor::perm_degree
    pub fn finite_group(&self, cap: usize) -> Result<FiniteGroup, PermError> {
        let elems = self.enumerate_elements(cap)?;
        let perms = elems.iter().map(|e| self.to_perm(e)).collect();
        let gens = self.generators().iter().map(|g| self.to_perm(g)).collect();
        Ok(FiniteGroup::from_elements(self.perm_degree(), perms, gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permwreath::DEFAULT_CAP;

    fn s2_wr(d: usize, gens: Vec<Perm>) -> GroupDescriptor {
        GroupDescriptor::wreath(GroupDescriptor::Sym(2), d, gens)
    }

    #[test]
    fn element_counts() {
        assert_eq!(GroupDescriptor::Sym(3).enumerate_elements(DEFAULT_CAP).unwrap().len(), 6);
        let full = s2_wr(2, vec![Perm::long_cycle(2)]);
        assert_eq!(full.enumerate_elements(DEFAULT_CAP).unwrap().len(), 8);
        let cyc = s2_wr(3, vec![Perm::long_cycle(3)]);
        assert_eq!(cyc.enumerate_elements(DEFAULT_CAP).unwrap().len(), 24);
        assert!(matches!(GroupDescriptor::Sym(12).enumerate_elements(1000), Err(PermError::TooLarge { .. })));
    }

    #[test]
    fn group_axioms_and_faithful_image() {
        let g = GroupDescriptor::wreath(
            GroupDescriptor::Sym(3),
            3,
            vec![Perm::long_cycle(3), Perm::from_cycles(3, &[&[0, 1]]).unwrap()],
        );
        let elems = g.enumerate_elements(DEFAULT_CAP).unwrap();
        let id = g.identity();
        let sample: Vec<&Element> = elems.iter().step_by(37).collect();
        for x in &sample {
            assert_eq!(g.multiply(x, &g.inverse(x)), id);
            for y in &sample {
                let xy = g.multiply(x, y);
                assert_eq!(g.to_perm(&xy), g.to_perm(x).compose(&g.to_perm(y)));
                for z in sample.iter().take(3) {
                    assert_eq!(g.multiply(&xy, z), g.multiply(x, &g.multiply(y, z)));
                }
            }
        }
        let fg = g.finite_group(DEFAULT_CAP).unwrap();
        assert_eq!(fg.order(), 6 * 6 * 6 * 6);
    }

    #[test]
    fn json_shapes() {
        let g: GroupDescriptor =
            serde_json::from_str(r#"{"wreath": {"base": {"sym": 2}, "deg": 2, "top_gens": [[1, 0]]}}"#).unwrap();
        assert_eq!(g, s2_wr(2, vec![Perm::long_cycle(2)]));
        let p: GroupDescriptor = serde_json::from_str(r#"{"prod": [{"sym": 2}, {"sym": 3}]}"#).unwrap();
        assert_eq!(p.order(DEFAULT_CAP).unwrap(), 12);
        let back = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<GroupDescriptor>(&back).unwrap(), g);
    }

    #[test]
    fn blocks_with_non_faithful_top() {
        // one block {0,1}, top S2 swapping inside it: S2 x S2
        let g = GroupDescriptor::Wreath(WreathSpec {
            base: Box::new(GroupDescriptor::Sym(2)),
            deg: 2,
            top_gens: vec![Perm::long_cycle(2)],
            blocks: Some(vec![vec![0, 1]]),
        });
        g.validate().unwrap();
        assert_eq!(g.order(DEFAULT_CAP).unwrap(), 4);
        let bad = GroupDescriptor::Wreath(WreathSpec {
            base: Box::new(GroupDescriptor::Sym(2)),
            deg: 3,
            top_gens: vec![Perm::long_cycle(3)],
            blocks: Some(vec![vec![0, 1], vec![2]]),
        });
        assert!(bad.validate().is_err());
    }
}
