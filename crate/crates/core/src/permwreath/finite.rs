use std::collections::{HashMap, VecDeque};

use super::{Perm, PermError};

/// Default limit on the number of elements any enumeration may produce.
pub const DEFAULT_CAP: usize = 10_000_000;

/// A finite permutation group with all elements listed in sorted order.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    generators: Vec<Perm>,
}

/// A partition of a group into orbits of some action, each orbit listed in
/// ascending element index; the representative is the first member.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }
}

impl FiniteGroup {
    /// Closure of `gens` inside `Sym(degree)`, failing once more than `cap`
    /// elements appear.
    pub fn generated(degree: usize, gens: &[Perm], cap: usize) -> Result<Self, PermError> {
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.compose(g);
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(PermError::TooLarge { cap });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Perm> = seen.into_keys().collect();
        Ok(Self::from_sorted(degree, elements, gens.to_vec()))
    }

    /// Wraps a list of elements already known to form a group.
    pub fn from_elements(degree: usize, elements: Vec<Perm>, generators: Vec<Perm>) -> Self {
        Self::from_sorted(degree, elements, generators)
    }

    fn from_sorted(degree: usize, mut elements: Vec<Perm>, generators: Vec<Perm>) -> Self {
        elements.sort();
        elements.dedup();
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        FiniteGroup {
            degree,
            elements,
            index,
            generators,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_sorted(degree, vec![Perm::identity(degree)], Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn identity_index(&self) -> usize {
        self.index[&Perm::identity(self.degree)]
    }

    fn some_generators(&self) -> Vec<Perm> {
        if self.generators.is_empty() {
            self.small_generating_set()
        } else {
            self.generators.clone()
        }
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.some_generators();
        gens.iter()
            .all(|a| gens.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Elements satisfying `keep`, which must describe a subgroup.
    pub fn subgroup_where(&self, keep: impl Fn(&Perm) -> bool) -> FiniteGroup {
        let elements: Vec<Perm> = self.elements.iter().filter(|p| keep(p)).cloned().collect();
        let mut g = Self::from_sorted(self.degree, elements, Vec::new());
        g.generators = g.small_generating_set();
        g
    }

    /// Canonical generating set: scan elements in order, keeping each one not
    /// yet generated by the earlier picks.
    pub fn small_generating_set(&self) -> Vec<Perm> {
        let mut gens: Vec<Perm> = Vec::new();
        let mut span = FiniteGroup::trivial(self.degree);
        for p in &self.elements {
            if span.order() == self.order() {
                break;
            }
            if !span.contains(p) {
                gens.push(p.clone());
                span = FiniteGroup::generated(self.degree, &gens, usize::MAX)
                    .expect("subgroup of a finite group");
            }
        }
        gens
    }

    /// Orbits of the twisted conjugation `g -> x g phi(x)^-1`, where `phi` is
    /// given by element indices.
    pub fn twisted_classes(&self, phi: &[usize]) -> ClassPartition {
        let n = self.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let gens = self.some_generators();
        for s in &gens {
            let si = self.index[s];
            let phi_s_inv = self.elements[phi[si]].inverse();
            for (i, g) in self.elements.iter().enumerate() {
                let y = s.compose(g).compose(&phi_s_inv);
                let j = self.index[&y];
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut roots: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            let c = *roots.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(i);
            class_of[i] = c;
        }
        ClassPartition { classes, class_of }
    }

    pub fn conjugacy_classes(&self) -> ClassPartition {
        let id: Vec<usize> = (0..self.order()).collect();
        self.twisted_classes(&id)
    }

    /// Index map of the automorphism `g -> s g s^-1` for an ambient `s`
    /// normalizing the group.
    pub fn conjugation_map(&self, s: &Perm) -> Result<Vec<usize>, PermError> {
        let s_inv = s.inverse();
        self.elements
            .iter()
            .map(|g| {
                self.index_of(&s.compose(g).compose(&s_inv))
                    .ok_or(PermError::NotNormalizing)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_classes() {
        let gens = [Perm::long_cycle(4), Perm::from_cycles(4, &[&[0, 1]]).unwrap()];
        let g = FiniteGroup::generated(4, &gens, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.conjugacy_classes().len(), 5);
        assert!(!g.is_abelian());
        assert!(FiniteGroup::generated(4, &gens, 10).is_err());
    }

    #[test]
    fn swap_twisted_classes() {
        // S2 x S2 inside S4, twisted by the swap of the two factors
        let a = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(4, &[&[2, 3]]).unwrap();
        let g = FiniteGroup::generated(4, &[a, b], DEFAULT_CAP).unwrap();
        let s = Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        let phi = g.conjugation_map(&s).unwrap();
        assert_eq!(g.twisted_classes(&phi).len(), 2);
        assert_eq!(g.conjugacy_classes().len(), 4);
    }
}
