use std::fmt;

use serde::{Deserialize, Serialize};

use super::PermError;
use crate::partitions::Partition;

/// A permutation of `{0, .., m-1}` stored by its images.
///
/// Composition follows function notation: `(p * q)(i) = p(q(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm((0..m).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(PermError::NotABijection(images));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of `m` points from disjoint cycles.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..m).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x >= m {
                    return Err(PermError::NotABijection(c.to_vec()));
                }
                images[x] = c[(k + 1) % c.len()];
            }
        }
        Perm::from_images(images)
    }

    /// The cycle `(0 1 .. m-1)`.
    pub fn long_cycle(m: usize) -> Self {
        Perm((0..m).map(|i| (i + 1) % m).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Perm::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    /// `self * g * self^-1`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        self.compose(g).compose(&self.inverse())
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.0[x];
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, num_integer::lcm)
    }

    /// Cycle type of the restriction to an invariant subset, in the order given.
    pub fn restricted_cycle_type(&self, points: &[usize]) -> Partition {
        let mut seen = std::collections::HashSet::new();
        let mut lens = Vec::new();
        for &p in points {
            if seen.contains(&p) {
                continue;
            }
            let mut len = 0;
            let mut x = p;
            while seen.insert(x) {
                len += 1;
                x = self.0[x];
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = PermError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Perm::from_images(v)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.0
    }
}

impl fmt::Display for Perm {
    /// Image list, e.g. `[1,2,0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Perm {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: Vec<usize> =
            serde_json::from_str(s).map_err(|e| PermError::Parse(format!("{s:?}: {e}")))?;
        Perm::from_images(v)
    }
}

/// All permutations of `m` points in lexicographic order of image lists.
pub fn all_perms(m: usize) -> Vec<Perm> {
    let mut cur: Vec<usize> = (0..m).collect();
    let mut out = vec![Perm(cur.clone())];
    loop {
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..m).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(Perm(cur.clone()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_function_notation() {
        let p = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let q = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        // (p q)(1) = p(2) = 2
        assert_eq!(p.compose(&q).apply(1), 2);
        assert_eq!(p.compose(&p), Perm::identity(3));
        assert_eq!(Perm::long_cycle(3).pow(3), Perm::identity(3));
        assert_eq!(Perm::long_cycle(4).pow(-1), Perm::long_cycle(4).inverse());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![2, 0]).is_err());
        assert!("[1,0]".parse::<Perm>().is_ok());
    }

    #[test]
    fn cycle_data() {
        let p = Perm::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.cycle_type().parts(), &[3, 2]);
        assert_eq!(p.order(), 6);
        assert_eq!(all_perms(4).len(), 24);
        assert_eq!(all_perms(0).len(), 1);
    }
}
