//! Irreducible characters of the small permutation groups that occur as
//! tops of wreath products and as their stabilizers.
//!
//! The group is split into a direct product along its orbits; each factor
//! must be abelian or act as the full symmetric group on one of its orbits.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, Perm, PermError};
use crate::cyclotomic::CycloNum;
use crate::partitions::{character_table, enumerate_partitions, Partition};

/// Label of one direct factor's irreducible character.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Debug)]
#[serde(rename_all = "lowercase")]
pub enum FactorLabel {
    /// Linear character sending the `i`-th canonical generator to
    /// `zeta_E^k_i`, `E` the exponent of the factor.
    Linear(Vec<u32>),
    /// Character of the symmetric group acting on one orbit.
    Sym(Partition),
}

/// Label of an irreducible character of a [`TopGroup`]: one entry per
/// direct factor. The empty label is the trivial character of the trivial
/// group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Debug, Default)]
#[serde(transparent)]
pub struct TopLabel(pub Vec<FactorLabel>);

impl fmt::Display for TopLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            match c {
                FactorLabel::Linear(k) => {
                    let parts: Vec<String> = k.iter().map(u32::to_string).collect();
                    write!(f, "z({})", parts.join(","))?
                }
                FactorLabel::Sym(p) => write!(f, "{p}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
enum FactorKind {
    Linear {
        exponent: u32,
        /// Restricted element -> exponents on the canonical generators.
        coords: HashMap<Vec<usize>, Vec<u32>>,
        labels: Vec<Vec<u32>>,
    },
    Symmetric {
        /// The orbit on which the factor is the full symmetric group.
        orbit: Vec<usize>,
    },
}

#[derive(Clone, Debug)]
struct Factor {
    points: Vec<usize>,
    kind: FactorKind,
}

/// A permutation group together with a labelling of its irreducible
/// characters.
#[derive(Clone, Debug)]
pub struct TopGroup {
    group: FiniteGroup,
    factors: Vec<Factor>,
}

fn restrict(p: &Perm, points: &[usize]) -> Vec<usize> {
    points.iter().map(|&x| p.apply(x)).collect()
}

fn restricted_order(group: &FiniteGroup, points: &[usize]) -> usize {
    let mut seen: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
    for p in group.elements() {
        seen.insert(restrict(p, points));
    }
    seen.len()
}

fn orbits(group: &FiniteGroup) -> Vec<Vec<usize>> {
    let d = group.degree();
    let mut seen = vec![false; d];
    let mut out = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for g in group.elements() {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        if orbit.len() > 1 {
            out.push(orbit);
        }
    }
    out
}

impl TopGroup {
    pub fn new(group: FiniteGroup) -> Result<Self, PermError> {
        let orbs = orbits(&group);
        let mut factors = Vec::new();
        let mut remaining: Vec<usize> = (0..orbs.len()).collect();
        while !remaining.is_empty() {
            let union = |set: &[usize]| -> Vec<usize> {
                let mut pts: Vec<usize> = set.iter().flat_map(|&i| orbs[i].iter().copied()).collect();
                pts.sort_unstable();
                pts
            };
            let total = restricted_order(&group, &union(&remaining));
            let mut chosen = remaining.clone();
            'search: for size in 1..remaining.len() {
                for subset in subsets_of_size(&remaining, size) {
                    let rest: Vec<usize> = remaining.iter().copied().filter(|i| !subset.contains(i)).collect();
                    let a = restricted_order(&group, &union(&subset));
                    let b = restricted_order(&group, &union(&rest));
                    if a * b == total {
                        chosen = subset;
                        break 'search;
                    }
                }
            }
            remaining.retain(|i| !chosen.contains(i));
            let points = union(&chosen);
            let factor_orbits: Vec<Vec<usize>> = chosen.iter().map(|&i| orbs[i].clone()).collect();
            factors.push(Self::classify(&group, points, &factor_orbits)?);
        }
        Ok(TopGroup { group, factors })
    }

    fn classify(group: &FiniteGroup, points: Vec<usize>, orbs: &[Vec<usize>]) -> Result<Factor, PermError> {
        let mut elems: Vec<Vec<usize>> = group.elements().iter().map(|p| restrict(p, &points)).collect();
        elems.sort();
        elems.dedup();
        let local = |v: &Vec<usize>| -> Perm {
            let pos: HashMap<usize, usize> = points.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            Perm::from_images(v.iter().map(|x| pos[x]).collect()).expect("restriction is a permutation")
        };
        let local_elems: Vec<Perm> = elems.iter().map(local).collect();
        let order = local_elems.len();
        let local_group = FiniteGroup::from_elements(points.len(), local_elems, Vec::new());
        if local_group.is_abelian() {
            return Ok(Factor {
                kind: Self::linear_factor(&local_group, &points),
                points,
            });
        }
        for orbit in orbs {
            let m = orbit.len();
            let fact: usize = (1..=m).product();
            if fact == order && restricted_order(group, orbit) == order {
                return Ok(Factor {
                    points,
                    kind: FactorKind::Symmetric { orbit: orbit.clone() },
                });
            }
        }
        Err(PermError::UnsupportedTop(format!(
            "non-abelian factor of order {order} on points {points:?} is not a full symmetric group"
        )))
    }

    fn linear_factor(local: &FiniteGroup, points: &[usize]) -> FactorKind {
        let gens = local.small_generating_set();
        let orders: Vec<u32> = gens.iter().map(|g| g.order() as u32).collect();
        let exponent = orders.iter().fold(1u32, |a, &b| num_integer::lcm(a, b));
        // coordinates of each element as a word in the generators
        let id = Perm::identity(points.len());
        let mut coords: HashMap<Perm, Vec<u32>> = HashMap::new();
        coords.insert(id.clone(), vec![0; gens.len()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let y = x.compose(g);
                if !coords.contains_key(&y) {
                    let mut c = coords[&x].clone();
                    c[i] = (c[i] + 1) % orders[i];
                    coords.insert(y.clone(), c);
                    queue.push_back(y);
                }
            }
        }
        // characters: generator values compatible with every relation
        let mut labels = Vec::new();
        let mut k = vec![0u32; gens.len()];
        loop {
            let ok = coords.iter().all(|(x, cx)| {
                gens.iter().enumerate().all(|(i, g)| {
                    let cy = &coords[&x.compose(g)];
                    let vx: u64 = cx.iter().zip(&k).map(|(&c, &kk)| c as u64 * kk as u64).sum();
                    let vy: u64 = cy.iter().zip(&k).map(|(&c, &kk)| c as u64 * kk as u64).sum();
                    (vx + k[i] as u64) % exponent as u64 == vy % exponent as u64
                })
            });
            if ok {
                labels.push(k.clone());
            }
            // odometer over 0..exponent
            let mut pos = 0;
            loop {
                if pos == k.len() {
                    let coords = coords
                        .into_iter()
                        .map(|(p, c)| (p.images().iter().map(|&i| points[i]).collect(), c))
                        .collect();
                    debug_assert_eq!(labels.len(), local.order());
                    return FactorKind::Linear {
                        exponent,
                        coords,
                        labels,
                    };
                }
                k[pos] += 1;
                if k[pos] < exponent {
                    break;
                }
                k[pos] = 0;
                pos += 1;
            }
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.factors.iter().all(|f| matches!(f.kind, FactorKind::Linear { .. }))
    }

    /// All irreducible labels, in lexicographic order of factor labels.
    pub fn irr_labels(&self) -> Vec<TopLabel> {
        let mut out = vec![TopLabel::default()];
        for f in &self.factors {
            let options: Vec<FactorLabel> = match &f.kind {
                FactorKind::Linear { labels, .. } => labels.iter().cloned().map(FactorLabel::Linear).collect(),
                FactorKind::Symmetric { orbit } => {
                    enumerate_partitions(orbit.len()).into_iter().map(FactorLabel::Sym).collect()
                }
            };
            out = out
                .into_iter()
                .flat_map(|l| {
                    options.iter().map(move |o| {
                        let mut v = l.0.clone();
                        v.push(o.clone());
                        TopLabel(v)
                    })
                })
                .collect();
        }
        out
    }

    pub fn trivial_label(&self) -> TopLabel {
        TopLabel(
            self.factors
                .iter()
                .map(|f| match &f.kind {
                    FactorKind::Linear { labels, .. } => FactorLabel::Linear(vec![0; labels[0].len()]),
                    FactorKind::Symmetric { orbit } => FactorLabel::Sym(Partition::row(orbit.len())),
                })
                .collect(),
        )
    }

    /// Character value; `a` must lie in the group.
    pub fn value(&self, label: &TopLabel, a: &Perm) -> CycloNum {
        let mut out = CycloNum::one();
        for (f, l) in self.factors.iter().zip(&label.0) {
            let v = match (&f.kind, l) {
                (FactorKind::Linear { exponent, coords, .. }, FactorLabel::Linear(k)) => {
                    let c = &coords[&restrict(a, &f.points)];
                    let e: u64 = c.iter().zip(k).map(|(&x, &y)| x as u64 * y as u64).sum();
                    CycloNum::root_of_unity((e % *exponent as u64) as i64, *exponent)
                        .expect("positive exponent")
                }
                (FactorKind::Symmetric { orbit }, FactorLabel::Sym(lambda)) => {
                    let ct = a.restricted_cycle_type(orbit);
                    CycloNum::from_integer(character_table(orbit.len()).value(lambda, &ct))
                }
                _ => panic!("label {label} does not match the group structure"),
            };
            out = &out * &v;
        }
        out
    }

    pub fn degree(&self, label: &TopLabel) -> u64 {
        self.factors
            .iter()
            .zip(&label.0)
            .map(|(f, l)| match (&f.kind, l) {
                (FactorKind::Symmetric { orbit }, FactorLabel::Sym(lambda)) => {
                    character_table(orbit.len()).degree(lambda) as u64
                }
                _ => 1,
            })
            .product()
    }

    pub fn contains_label(&self, label: &TopLabel) -> bool {
        self.irr_labels().contains(label)
    }
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<usize>> = subsets_of_size(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    with.extend(subsets_of_size(&items[1..], k));
    with
}
