//! Partitions, symmetric-group characters and degree polynomials of
//! unipotent characters of `GL_n(q)` and `U_n(q)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A weakly decreasing sequence of positive integers.
///
/// `Ord` is lexicographic on the parts, so `(3) > (2,1) > (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// Cycle lengths of a permutation, read as a partition.
pub type CycleType = Partition;

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Hook lengths of all boxes.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.0[j] - i - 1);
            }
        }
        out
    }

    /// Multiplicity of each part length, indexed by length.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Order of the centralizer of an element of this cycle type:
    /// `prod m_j! j^m_j`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (j, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= BigInt::from(k) * BigInt::from(j);
            }
        }
        z
    }

    /// Number of parts of even length.
    pub fn even_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 0).count()
    }

    /// Sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PartitionError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| err("expected [a,b,...]"))?;
        let parts = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| err("bad part")))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Character value `chi^lambda(mu)` by the Murnaghan-Nakayama rule on
/// beta-sets. Panics if the sizes differ.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "partition sizes differ");
    let l = lambda.len();
    let beta: Vec<usize> = lambda.0.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    mn_beta(beta, &mu.0)
}

fn mn_beta(beta: Vec<usize>, mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        let v = mn_beta(next, rest);
        total += if height % 2 == 0 { v } else { -v };
    }
    total
}

/// Character table of `S_n`, rows and columns both indexed by
/// [`enumerate_partitions`].
#[derive(Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    /// `values[lambda][mu]`.
    pub values: Vec<Vec<i64>>,
    pub centralizers: Vec<BigInt>,
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn value(&self, lambda: &Partition, mu: &CycleType) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    pub fn degree(&self, lambda: &Partition) -> i64 {
        self.value(lambda, &Partition::column(self.n))
    }
}

/// Shared, lazily built character table of `S_n`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().expect("table cache poisoned").get(&n) {
        return Arc::clone(t);
    }
    let partitions = enumerate_partitions(n);
    let values = partitions
        .iter()
        .map(|l| partitions.iter().map(|m| mn_character(l, m)).collect())
        .collect();
    let centralizers = partitions.iter().map(Partition::centralizer_order).collect();
    let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = Arc::new(CharacterTable {
        n,
        partitions,
        values,
        centralizers,
        index,
    });
    let mut guard = cache.write().expect("table cache poisoned");
    Arc::clone(guard.entry(n).or_insert(table))
}

/// Integer polynomial in `q`, dense, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly(Vec<BigInt>);

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64(&[c])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::from(c);
        Self::new(v)
    }

    /// `q^k - c`.
    pub fn power_minus(k: usize, c: i64) -> Self {
        &Self::monomial(1, k) - &Self::constant(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    /// `P(q^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k > 0);
        let mut v = vec![BigInt::zero(); self.0.len().saturating_sub(1) * k + 1];
        for (i, c) in self.0.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Self::new(v)
    }

    /// `P(-q)`.
    pub fn substitute_neg(&self) -> Self {
        QPoly(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    /// Quotient and remainder by a divisor with leading coefficient `+-1`.
    fn div_rem_unit(&self, d: &QPoly) -> Option<(QPoly, QPoly)> {
        let dn = d.degree()?;
        let lead = d.0[dn].clone();
        if !lead.abs().is_one() {
            return None;
        }
        if self.0.len() <= dn {
            return Some((QPoly::zero(), self.clone()));
        }
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); self.0.len() - dn];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dn] * &lead;
            if !c.is_zero() {
                for (i, di) in d.0.iter().enumerate() {
                    rem[k + i] -= &c * di;
                }
            }
            quot[k] = c;
        }
        Some((QPoly::new(quot), QPoly::new(rem)))
    }

    /// Exact quotient; `None` when the division leaves a remainder or the
    /// divisor is not monic up to sign.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let (q, r) = self.div_rem_unit(d)?;
        r.is_zero().then_some(q)
    }

    /// Divides every coefficient by `c`; `None` unless all are divisible.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<QPoly> {
        let mut v = Vec::with_capacity(self.0.len());
        for x in &self.0 {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            v.push(q);
        }
        Some(QPoly::new(v))
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        QPoly::new(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.0.len().max(rhs.0.len());
        QPoly::new(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_default() + rhs.0.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }
}

impl fmt::Display for QPoly {
    /// `c0 + c1*q + c2*q^2`, zero terms omitted, `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QPoly {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PartitionError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut acc = QPoly::zero();
        for term in s.split(" + ").map(str::trim) {
            let (c, k) = match term.split_once('*') {
                None => (term, 0usize),
                Some((c, "q")) => (c, 1),
                Some((c, pow)) => {
                    let k = pow
                        .strip_prefix("q^")
                        .and_then(|k| k.parse().ok())
                        .ok_or_else(|| err("bad power"))?;
                    (c, k)
                }
            };
            let c: BigInt = c.trim().parse().map_err(|_| err("bad coefficient"))?;
            let mut v = vec![BigInt::zero(); k + 1];
            v[k] = c;
            acc = &acc + &QPoly::new(v);
        }
        Ok(acc)
    }
}

/// Degree of the unipotent character of `GL_n(q)` labelled by `lambda`, by
/// the hook formula `q^n(lambda) prod (q^i - 1) / prod_h (q^h - 1)`.
pub fn generic_degree_gl(lambda: &Partition) -> QPoly {
    let n = lambda.size();
    let mut num = QPoly::monomial(1, lambda.n_statistic());
    for i in 1..=n {
        num = &num * &QPoly::power_minus(i, 1);
    }
    let mut den = QPoly::one();
    for h in lambda.hook_lengths() {
        den = &den * &QPoly::power_minus(h, 1);
    }
    num.div_exact(&den).expect("hook formula division is exact")
}

/// Sign and degree of the unipotent character of `U_n(q)` labelled by
/// `lambda`: the generic degree at `-q` is `sign * degree` with `degree`
/// positive for every prime power.
pub fn unitary_sign_and_degree(lambda: &Partition) -> (i64, QPoly) {
    let p = generic_degree_gl(lambda).substitute_neg();
    let sign = if p.eval_i64(2).is_negative() { -1 } else { 1 };
    (sign, if sign < 0 { -&p } else { p })
}

/// Which of the two finite reductive families a degree refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupType {
    Linear,
    Unitary,
}

/// Order of `GL_n(q)` or `U_n(q)` with its `q`-part removed.
pub fn p_prime_order(n: usize, ty: GroupType) -> QPoly {
    let mut out = QPoly::one();
    for i in 1..=n {
        out = &out * &torus_factor(i, ty);
    }
    out
}

fn torus_factor(c: usize, ty: GroupType) -> QPoly {
    match ty {
        GroupType::Linear => QPoly::power_minus(c, 1),
        GroupType::Unitary => QPoly::power_minus(c, if c.is_multiple_of(2) { 1 } else { -1 }),
    }
}

/// `epsilon_G epsilon_T` for the maximal torus of type `mu`.
fn torus_sign(mu: &CycleType, ty: GroupType) -> i64 {
    let n = mu.size();
    let e = match ty {
        GroupType::Linear => n - mu.len(),
        GroupType::Unitary => n / 2 + mu.even_parts(),
    };
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Degree of `|W|^-1 sum_w chi^lambda(w) R_{T_w}` with the sign
/// `epsilon_G epsilon_T` of each Deligne-Lusztig degree kept.
///
/// For the linear family this is the unipotent degree itself; for the
/// unitary family it equals the generic degree evaluated at `-q`.
pub fn signed_degree_via_class_sum(lambda: &Partition, ty: GroupType) -> QPoly {
    let n = lambda.size();
    let psi = p_prime_order(n, ty);
    let table = character_table(n);
    let n_fact: BigInt = (1..=n).map(BigInt::from).product();
    let mut total = QPoly::zero();
    for (mu, z) in table.partitions.iter().zip(&table.centralizers) {
        let chi = table.value(lambda, mu);
        if chi == 0 {
            continue;
        }
        let mut torus = QPoly::one();
        for &c in mu.parts() {
            torus = &torus * &torus_factor(c, ty);
        }
        let ratio = psi.div_exact(&torus).expect("torus order divides group order");
        let class_size = &n_fact / z;
        let weight = class_size * BigInt::from(chi * torus_sign(mu, ty));
        total = &total + &ratio.scale(&weight);
    }
    total
        .div_scalar_exact(&n_fact)
        .expect("class sum of degrees is an integer polynomial")
}

/// Degree polynomial from the class sum, normalized to be positive at `q = 2`.
pub fn degree_via_class_sum(lambda: &Partition, ty: GroupType) -> QPoly {
    let p = signed_degree_via_class_sum(lambda, ty);
    if p.eval_i64(2).is_negative() {
        -&p
    } else {
        p
    }
}

/// Kostka numbers `K[lambda][mu] = <Res chi^lambda, 1>` over the Young
/// subgroup `S_mu`, both indices in [`enumerate_partitions`] order.
///
/// Computed from characters: the average of `chi^lambda` over `S_mu` runs
/// over tuples of cycle types of the factors.
pub fn kostka_matrix(n: usize) -> Vec<Vec<i64>> {
    let table = character_table(n);
    let parts = &table.partitions;
    let mut k = vec![vec![0i64; parts.len()]; parts.len()];
    for (j, mu) in parts.iter().enumerate() {
        // cycle types of S_mu, weighted by 1/prod z
        let mut classes: Vec<(Vec<usize>, BigRational)> = vec![(Vec::new(), BigRational::one())];
        for &m in mu.parts() {
            let mut next = Vec::new();
            for (cycles, w) in &classes {
                for nu in enumerate_partitions(m) {
                    let mut c = cycles.clone();
                    c.extend_from_slice(nu.parts());
                    next.push((c, w / BigRational::from_integer(nu.centralizer_order())));
                }
            }
            classes = next;
        }
        for (i, lambda) in parts.iter().enumerate() {
            let mut s = BigRational::zero();
            for (cycles, w) in &classes {
                let ct = Partition::from_unsorted(cycles.clone());
                s += w * BigRational::from_integer(BigInt::from(table.value(lambda, &ct)));
            }
            assert!(s.is_integer(), "Kostka number is an integer");
            k[i][j] = s.to_integer().to_i64().expect("Kostka number fits i64");
        }
    }
    k
}

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
pub fn bareiss_determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Weakly decreasing sequences by brute force over all compositions.
    fn brute_partitions(n: usize) -> usize {
        fn rec(rest: usize, max: usize) -> usize {
            if rest == 0 {
                return 1;
            }
            (1..=rest.min(max)).map(|k| rec(rest - k, k)).sum()
        }
        rec(n, n)
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        for n in 0..=10 {
            assert_eq!(enumerate_partitions(n).len(), brute_partitions(n));
        }
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(7).len(), 15);
        let four = enumerate_partitions(4);
        assert_eq!(four[0], p(&[4]));
        assert_eq!(four[4], p(&[1, 1, 1, 1]));
        assert!(four.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn partition_display_parse() {
        assert_eq!(p(&[3, 1, 1]).to_string(), "[3,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert!("[1,3]".parse::<Partition>().is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn small_characters() {
        for n in 1..=6 {
            for mu in enumerate_partitions(n) {
                assert_eq!(mn_character(&Partition::row(n), &mu), 1);
                assert_eq!(mn_character(&Partition::column(n), &mu), mu.sign());
            }
        }
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])), -1);
        // permutation character on 3 points minus trivial
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])), 0);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
    }

    #[test]
    fn hooks_and_degrees() {
        assert_eq!(p(&[2, 1]).hook_lengths(), vec![3, 1, 1]);
        assert_eq!(generic_degree_gl(&p(&[3])), QPoly::one());
        assert_eq!(generic_degree_gl(&p(&[1, 1, 1])), QPoly::monomial(1, 3));
        assert_eq!(generic_degree_gl(&p(&[2, 1])), QPoly::from_i64(&[0, 1, 1]));
        assert_eq!(unitary_sign_and_degree(&p(&[3])), (1, QPoly::one()));
        assert_eq!(unitary_sign_and_degree(&p(&[1, 1, 1])), (-1, QPoly::monomial(1, 3)));
        assert_eq!(unitary_sign_and_degree(&p(&[2, 1])), (1, QPoly::from_i64(&[0, -1, 1])));
    }

    #[test]
    fn class_sum_examples() {
        assert_eq!(degree_via_class_sum(&p(&[2]), GroupType::Linear), QPoly::one());
        assert_eq!(degree_via_class_sum(&p(&[1, 1]), GroupType::Linear), QPoly::monomial(1, 1));
        assert_eq!(degree_via_class_sum(&p(&[1, 1]), GroupType::Unitary), QPoly::monomial(1, 1));
        assert_eq!(
            signed_degree_via_class_sum(&p(&[1, 1]), GroupType::Unitary),
            QPoly::monomial(-1, 1)
        );
    }

    #[test]
    fn qpoly_format() {
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_i64(&[0, 1, 1]).to_string(), "1*q + 1*q^2");
        assert_eq!(QPoly::from_i64(&[2, 0, -3]).to_string(), "2 + -3*q^2");
        for s in ["0", "1*q + 1*q^2", "2 + -3*q^2", "-1"] {
            assert_eq!(s.parse::<QPoly>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn qpoly_division() {
        let a = QPoly::power_minus(6, 1);
        let b = QPoly::power_minus(2, 1);
        assert_eq!(a.div_exact(&b).unwrap(), QPoly::from_i64(&[1, 0, 1, 0, 1]));
        assert!(QPoly::power_minus(3, 1).div_exact(&b).is_none());
    }

    /// Semistandard tableaux of shape lambda and content mu, by brute force.
    fn ssyt_count(lambda: &Partition, mu: &Partition) -> i64 {
        let cells: Vec<(usize, usize)> = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
            .collect();
        let mut grid = vec![vec![0usize; lambda.parts().first().copied().unwrap_or(0)]; lambda.len()];
        let mut content = mu.parts().to_vec();
        fn rec(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, content: &mut Vec<usize>) -> i64 {
            if k == cells.len() {
                return 1;
            }
            let (i, j) = cells[k];
            let mut total = 0;
            for v in 0..content.len() {
                if content[v] == 0 {
                    continue;
                }
                if j > 0 && grid[i][j - 1] > v {
                    continue;
                }
                if i > 0 && grid[i - 1][j] >= v {
                    continue;
                }
                content[v] -= 1;
                grid[i][j] = v;
                total += rec(k + 1, cells, grid, content);
                content[v] += 1;
            }
            total
        }
        rec(0, &cells, &mut grid, &mut content)
    }

    #[test]
    fn kostka_against_tableaux() {
        assert_eq!(kostka_matrix(1), vec![vec![1]]);
        assert_eq!(kostka_matrix(2), vec![vec![1, 1], vec![0, 1]]);
        for n in 1..=5 {
            let parts = enumerate_partitions(n);
            let k = kostka_matrix(n);
            for (i, l) in parts.iter().enumerate() {
                for (j, m) in parts.iter().enumerate() {
                    assert_eq!(k[i][j], ssyt_count(l, m), "K[{l}][{m}]");
                }
            }
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(bareiss_determinant(&[vec![2, 1], vec![1, 1]]), BigInt::one());
        assert_eq!(bareiss_determinant(&[vec![0, 1], vec![1, 0]]), -BigInt::one());
        assert_eq!(
            bareiss_determinant(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]),
            BigInt::from(-3)
        );
        assert_eq!(bareiss_determinant(&kostka_matrix(4)), BigInt::one());
    }
}
