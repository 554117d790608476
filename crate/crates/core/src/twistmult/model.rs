//! `W° = prod_x S_{n(x)}` realised on the points `(x, i)`, `i < n(x)`.

use std::collections::HashMap;

use crate::partitions::{character_table, Partition};
use crate::permwreath::{FiniteGroup, Perm, PermError};

/// Points `(x, i)` laid out fiber by fiber.
#[derive(Clone, Debug)]
pub struct PointModel {
    fibers: Vec<usize>,
    offsets: Vec<usize>,
    degree: usize,
}

impl PointModel {
    pub fn new(fibers: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(fibers.len());
        let mut degree = 0;
        for &n in &fibers {
            offsets.push(degree);
            degree += n;
        }
        PointModel { fibers, offsets, degree }
    }

    /// Equal fibers of size `n` over `d` points.
    pub fn uniform(d: usize, n: usize) -> Self {
        Self::new(vec![n; d])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base_points(&self) -> usize {
        self.fibers.len()
    }

    pub fn fiber(&self, x: usize) -> usize {
        self.fibers[x]
    }

    pub fn point(&self, x: usize, i: usize) -> usize {
        self.offsets[x] + i
    }

    pub fn split(&self, p: usize) -> (usize, usize) {
        let x = self.offsets.partition_point(|&o| o <= p) - 1;
        // zero-size fibers share an offset with their successor
        let x = (x..self.fibers.len()).find(|&y| p < self.offsets[y] + self.fibers[y]).unwrap_or(x);
        (x, p - self.offsets[x])
    }

    /// `(x, i) -> (t x, i)`. Fibers must agree along `t`.
    pub fn lift(&self, t: &Perm) -> Result<Perm, PermError> {
        let mut images = vec![0; self.degree];
        for x in 0..self.fibers.len() {
            let y = t.apply(x);
            if self.fibers[y] != self.fibers[x] {
                return Err(PermError::DegreeMismatch {
                    expected: self.fibers[x],
                    found: self.fibers[y],
                });
            }
            for i in 0..self.fibers[x] {
                images[self.point(x, i)] = self.point(y, i);
            }
        }
        Perm::from_images(images)
    }

    /// The element of `W°` with coordinate `w[x]` on fiber `x`.
    pub fn fiberwise(&self, w: &[Perm]) -> Result<Perm, PermError> {
        let mut images = vec![0; self.degree];
        for (x, p) in w.iter().enumerate() {
            if p.degree() != self.fibers[x] {
                return Err(PermError::DegreeMismatch {
                    expected: self.fibers[x],
                    found: p.degree(),
                });
            }
            for i in 0..p.degree() {
                images[self.point(x, i)] = self.point(x, p.apply(i));
            }
        }
        Perm::from_images(images)
    }

    /// Coordinates of a fiber-preserving permutation.
    pub fn coordinates(&self, g: &Perm) -> Vec<Perm> {
        (0..self.fibers.len())
            .map(|x| {
                Perm::from_images((0..self.fibers[x]).map(|i| self.split(g.apply(self.point(x, i))).1).collect())
                    .expect("fiber-preserving")
            })
            .collect()
    }

    /// The subgroup of the Young subgroup `blocks` made of elements that are
    /// constant along each `orbits` class.
    pub fn young_fixed_group(&self, blocks: &Blocks, orbits: &[Vec<usize>], cap: usize) -> Result<FiniteGroup, PermError> {
        let mut gens = Vec::new();
        for orbit in orbits {
            let x0 = orbit[0];
            for &(start, len) in &blocks.0[x0] {
                if len < 2 {
                    continue;
                }
                let swap: Vec<(usize, usize)> = vec![(start, start + 1), (start + 1, start)];
                let cycle: Vec<(usize, usize)> = (0..len).map(|j| (start + j, start + (j + 1) % len)).collect();
                for moves in [swap, cycle] {
                    let mut images: Vec<usize> = (0..self.degree).collect();
                    for &x in orbit {
                        for &(i, j) in &moves {
                            images[self.point(x, i)] = self.point(x, j);
                        }
                    }
                    gens.push(Perm::from_images(images)?);
                }
            }
        }
        FiniteGroup::generated(self.degree, &gens, cap)
    }
}

/// Per base point, the `(start, len)` blocks of a composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks(pub Vec<Vec<(usize, usize)>>);

impl Blocks {
    pub fn from_compositions(comps: &[Vec<usize>]) -> Self {
        Blocks(
            comps
                .iter()
                .map(|c| {
                    let mut start = 0;
                    c.iter()
                        .map(|&l| {
                            let b = (start, l);
                            start += l;
                            b
                        })
                        .collect()
                })
                .collect(),
        )
    }

    /// One block per fiber.
    pub fn whole(model: &PointModel) -> Self {
        Blocks((0..model.base_points()).map(|x| vec![(0, model.fiber(x))]).collect())
    }

    pub fn block_of(&self, x: usize, i: usize) -> Option<usize> {
        self.0[x].iter().position(|&(s, l)| s <= i && i < s + l)
    }

    /// Image block of `(x, b)` under `g`, if `g` maps it onto a block.
    pub fn image(&self, model: &PointModel, g: &Perm, x: usize, b: usize) -> Option<(usize, usize)> {
        let (start, len) = self.0[x][b];
        let (y, j) = model.split(g.apply(model.point(x, start)));
        let c = self.block_of(y, j)?;
        if self.0[y][c].1 != len {
            return None;
        }
        let ok = (start..start + len).all(|i| {
            let (y2, j2) = model.split(g.apply(model.point(x, i)));
            y2 == y && self.block_of(y2, j2) == Some(c)
        });
        ok.then_some((y, c))
    }

    /// Whether `g` permutes the blocks.
    pub fn normalized_by(&self, model: &PointModel, g: &Perm) -> bool {
        (0..self.0.len()).all(|x| (0..self.0[x].len()).all(|b| self.image(model, g, x, b).is_some()))
    }
}

/// Orbits of a permutation group on base points, each sorted.
pub fn base_orbits(d: usize, gens: &[Perm]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut of = vec![usize::MAX; d];
    let mut orbits = Vec::new();
    for x in 0..d {
        if of[x] != usize::MAX {
            continue;
        }
        let k = orbits.len();
        let mut orbit = vec![x];
        of[x] = k;
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for g in gens {
                let z = g.apply(y);
                if of[z] == usize::MAX {
                    of[z] = k;
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    (orbits, of)
}

/// `(lambda_a ⋊ psi)(g)` for `g` in a coset `K^<a> w sigma`: `g` permutes the
/// `<a>`-classes of blocks, and each cycle of length `r` through a block
/// `(x, B)` contributes `chi^lambda(x,B)` at the fiber permutation of `g^r`
/// on `B`.
pub fn extension_value(
    model: &PointModel,
    blocks: &Blocks,
    labels: &[Vec<Partition>],
    a_class: &[usize],
    g: &Perm,
) -> i64 {
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    let mut value = 1i64;
    for x in 0..model.base_points() {
        for b in 0..blocks.0[x].len() {
            if seen.contains_key(&(a_class[x], b)) {
                continue;
            }
            let mut cur = (x, b);
            let mut r = 0;
            loop {
                seen.insert((a_class[cur.0], cur.1), ());
                cur = blocks.image(model, g, cur.0, cur.1).expect("g permutes blocks");
                r += 1;
                if a_class[cur.0] == a_class[x] && cur.1 == b {
                    break;
                }
            }
            let (start, len) = blocks.0[x][b];
            let images: Vec<usize> = (start..start + len)
                .map(|i| {
                    let mut p = model.point(x, i);
                    for _ in 0..r {
                        p = g.apply(p);
                    }
                    model.split(p).1 - start
                })
                .collect();
            let ct = Perm::from_images(images).expect("fiber permutation").cycle_type();
            value *= character_table(len).value(&labels[x][b], &ct);
            if value == 0 {
                return 0;
            }
        }
    }
    value
}
