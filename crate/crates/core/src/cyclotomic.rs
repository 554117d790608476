//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! A [`CycloNum`] is kept in the smallest cyclotomic field that contains it
//! and is written in the power basis `1, zeta_N, ..., zeta_N^(phi(N)-1)`,
//! i.e. as a polynomial reduced modulo the `N`-th cyclotomic polynomial.
//! That normal form is unique, so equality and hashing are structural.
//!
//! The per-order reduction tables are memoised in a process-wide map guarded
//! by an `RwLock`; values themselves are immutable.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse cyclotomic number {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// The four field operations accepted by [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact element of a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    order: u32,
    coeffs: BTreeMap<u32, BigRational>,
}

/// Coefficient list of the `n`-th cyclotomic polynomial, constant term first.
///
/// Computed from `x^n - 1` by exact division through `Phi_d` for every proper
/// divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    let mut memo: HashMap<u32, Vec<i64>> = HashMap::new();
    cyclotomic_polynomial_memo(n, &mut memo)
}

fn cyclotomic_polynomial_memo(n: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial_memo(d, memo);
            poly = div_monic(&poly, &phi_d);
        }
    }
    memo.insert(n, poly.clone());
    poly
}

/// Exact quotient of integer polynomials by a monic divisor; panics if the
/// remainder is nonzero.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "non-exact cyclotomic division");
    quot
}

fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// Reduction data for one order `N`.
struct Field {
    degree: usize,
    /// `powers[k]` = coordinates of `zeta_N^k`, for `0 <= k < 2N`.
    powers: Vec<Vec<i64>>,
    /// Proper subfields `Q(zeta_d)`, ascending in `d`.
    subfields: Vec<Subfield>,
}

struct Subfield {
    order: u32,
    /// Coordinates (in the big field) of `zeta_d^j`, `j < phi(d)`.
    basis: Vec<Vec<i64>>,
    /// Rows of the big-field coordinates used to solve for subfield coordinates.
    pivots: Vec<usize>,
    /// Inverse of the square pivot submatrix.
    inverse: Vec<Vec<BigRational>>,
}

fn field(order: u32) -> Arc<Field> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().expect("field cache poisoned").get(&order) {
        return Arc::clone(f);
    }
    let built = Arc::new(Field::build(order));
    let mut guard = cache.write().expect("field cache poisoned");
    Arc::clone(guard.entry(order).or_insert(built))
}

impl Field {
    fn build(order: u32) -> Field {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(2 * order as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..(2 * order as usize) {
            powers.push(cur.clone());
            // multiply by x, then fold the overflow term back with Phi_N
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..degree {
                    cur[i] = cur[i]
                        .checked_sub(top.checked_mul(phi[i]).expect("coefficient overflow"))
                        .expect("coefficient overflow");
                }
            }
        }
        let mut subfields = Vec::new();
        for d in 2..order {
            if !order.is_multiple_of(d) || d % 4 == 2 {
                continue;
            }
            let step = (order / d) as usize;
            let sub_degree = euler_phi(d);
            let basis: Vec<Vec<i64>> = (0..sub_degree).map(|j| powers[j * step].clone()).collect();
            let (pivots, inverse) = left_inverse(&basis, degree);
            subfields.push(Subfield {
                order: d,
                basis,
                pivots,
                inverse,
            });
        }
        Field {
            degree,
            powers,
            subfields,
        }
    }

    /// Coordinates of `sum c_k zeta^k` for arbitrary exponents `k < 2N`.
    fn reduce_into(&self, exponent: usize, c: &BigRational, out: &mut [BigRational]) {
        let row = &self.powers[exponent];
        for (slot, &p) in out.iter_mut().zip(row) {
            if p != 0 {
                *slot += c * BigRational::from_integer(BigInt::from(p));
            }
        }
    }
}

/// Picks `cols.len()` independent rows of the `rows x cols` matrix whose
/// columns are `cols`, and inverts that square block.
fn left_inverse(cols: &[Vec<i64>], rows: usize) -> (Vec<usize>, Vec<Vec<BigRational>>) {
    let k = cols.len();
    let mut pivots = Vec::with_capacity(k);
    // greedy row selection by incremental rank test
    let mut chosen: Vec<Vec<BigRational>> = Vec::new();
    for r in 0..rows {
        let row: Vec<BigRational> = cols
            .iter()
            .map(|c| BigRational::from_integer(BigInt::from(c[r])))
            .collect();
        let mut trial = chosen.clone();
        trial.push(row.clone());
        if rank(&trial) == trial.len() {
            chosen.push(row);
            pivots.push(r);
            if pivots.len() == k {
                break;
            }
        }
    }
    assert_eq!(pivots.len(), k, "subfield basis is not independent");
    let inverse = invert(&chosen).expect("pivot block is singular");
    (pivots, inverse)
}

fn rank(m: &[Vec<BigRational>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in c..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Gauss-Jordan inverse of a square rational matrix.
fn invert(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

impl CycloNum {
    pub fn zero() -> Self {
        CycloNum {
            order: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        CycloNum { order: 1, coeffs }
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(k: i64, n: u32) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::ZeroOrder);
        }
        let e = k.rem_euclid(n as i64) as usize;
        let f = field(n);
        let mut dense = vec![BigRational::zero(); f.degree];
        f.reduce_into(e, &BigRational::one(), &mut dense);
        Ok(Self::normalize(n, dense))
    }

    /// Conductor of the smallest cyclotomic field containing the value.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Nonzero coefficients of the canonical form, by exponent.
    pub fn coeffs(&self) -> &BTreeMap<u32, BigRational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.order == 1 {
            Some(self.coeffs.get(&0).cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// True iff the value lies in `Z[zeta_N]`, the ring of integers.
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    fn dense(&self) -> Vec<BigRational> {
        let f = field(self.order);
        let mut v = vec![BigRational::zero(); f.degree];
        for (&e, c) in &self.coeffs {
            v[e as usize] = c.clone();
        }
        v
    }

    /// Coordinates in `Q(zeta_target)`; `target` must be a multiple of the order.
    fn embed(&self, target: u32) -> Vec<BigRational> {
        debug_assert_eq!(target % self.order, 0);
        let f = field(target);
        let step = (target / self.order) as usize;
        let mut v = vec![BigRational::zero(); f.degree];
        for (&e, c) in &self.coeffs {
            f.reduce_into(e as usize * step, c, &mut v);
        }
        v
    }

    /// Builds the canonical value from coordinates in `Q(zeta_order)`.
    fn normalize(order: u32, dense: Vec<BigRational>) -> Self {
        if dense.iter().skip(1).all(Zero::is_zero) {
            let c = dense.into_iter().next().unwrap_or_else(BigRational::zero);
            return Self::from_rational(c);
        }
        let f = field(order);
        for sub in &f.subfields {
            if let Some(coords) = solve_subfield(sub, &dense) {
                return Self::from_coords(sub.order, coords);
            }
        }
        Self::from_coords(order, dense)
    }

    fn from_coords(order: u32, coords: Vec<BigRational>) -> Self {
        let coeffs = coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c))
            .collect();
        CycloNum { order, coeffs }
    }

    /// Complex conjugation `zeta -> zeta^-1`.
    pub fn conjugate(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let f = field(self.order);
        let n = self.order as usize;
        let mut v = vec![BigRational::zero(); f.degree];
        for (&e, c) in &self.coeffs {
            f.reduce_into((n - e as usize) % n, c, &mut v);
        }
        Self::from_coords(self.order, v)
    }

    pub fn inverse(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Self::from_rational(self.coeffs[&0].recip()));
        }
        // solve x * y = 1 through the multiplication-by-x matrix
        let f = field(self.order);
        let deg = f.degree;
        let x = self.dense();
        let mut columns = Vec::with_capacity(deg);
        for j in 0..deg {
            let mut col = vec![BigRational::zero(); deg];
            for (i, c) in x.iter().enumerate() {
                if !c.is_zero() {
                    f.reduce_into(i + j, c, &mut col);
                }
            }
            columns.push(col);
        }
        let matrix: Vec<Vec<BigRational>> = (0..deg)
            .map(|r| (0..deg).map(|c| columns[c][r].clone()).collect())
            .collect();
        let inv = invert(&matrix).ok_or(CycloError::DivisionByZero)?;
        let coords = inv.into_iter().map(|row| row[0].clone()).collect();
        Ok(Self::from_coords(self.order, coords))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CycloError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Self, CycloError> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * r)).collect(),
        }
    }
}

fn solve_subfield(sub: &Subfield, x: &[BigRational]) -> Option<Vec<BigRational>> {
    let coords: Vec<BigRational> = sub
        .inverse
        .iter()
        .map(|row| {
            row.iter()
                .zip(&sub.pivots)
                .fold(BigRational::zero(), |acc, (a, &p)| acc + a * &x[p])
        })
        .collect();
    for (r, xr) in x.iter().enumerate() {
        let mut s = BigRational::zero();
        for (c, b) in coords.iter().zip(&sub.basis) {
            if b[r] != 0 && !c.is_zero() {
                s += c * BigRational::from_integer(BigInt::from(b[r]));
            }
        }
        if &s != xr {
            return None;
        }
    }
    Some(coords)
}

/// Exact field arithmetic after embedding both operands into `Q(zeta_lcm)`.
pub fn arith(a: &CycloNum, b: &CycloNum, op: ArithOp) -> Result<CycloNum, CycloError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

fn add_impl(a: &CycloNum, b: &CycloNum, negate_b: bool) -> CycloNum {
    if a.order == 1 && b.order == 1 {
        let x = a.coeffs.get(&0).cloned().unwrap_or_else(BigRational::zero);
        let y = b.coeffs.get(&0).cloned().unwrap_or_else(BigRational::zero);
        return CycloNum::from_rational(if negate_b { x - y } else { x + y });
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let l = a.order.lcm(&b.order);
    let mut x = a.embed(l);
    let y = b.embed(l);
    for (s, t) in x.iter_mut().zip(y) {
        if negate_b {
            *s -= t;
        } else {
            *s += t;
        }
    }
    CycloNum::normalize(l, x)
}

fn mul_impl(a: &CycloNum, b: &CycloNum) -> CycloNum {
    if a.is_zero() || b.is_zero() {
        return CycloNum::zero();
    }
    if a.order == 1 {
        return b.scale(&a.coeffs[&0]);
    }
    if b.order == 1 {
        return a.scale(&b.coeffs[&0]);
    }
    let l = a.order.lcm(&b.order);
    let f = field(l);
    let x = a.embed(l);
    let y = b.embed(l);
    let mut out = vec![BigRational::zero(); f.degree];
    for (i, s) in x.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        for (j, t) in y.iter().enumerate() {
            if !t.is_zero() {
                f.reduce_into(i + j, &(s * t), &mut out);
            }
        }
    }
    CycloNum::normalize(l, out)
}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        add_impl(self, rhs, false)
    }
}

impl Add for CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: CycloNum) -> CycloNum {
        add_impl(&self, &rhs, false)
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        add_impl(self, rhs, true)
    }
}

impl Sub for CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: CycloNum) -> CycloNum {
        add_impl(&self, &rhs, true)
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        mul_impl(self, rhs)
    }
}

impl Mul for CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: CycloNum) -> CycloNum {
        mul_impl(&self, &rhs)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl Default for CycloNum {
    fn default() -> Self {
        CycloNum::zero()
    }
}

impl Zero for CycloNum {
    fn zero() -> Self {
        CycloNum::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for CycloNum {
    fn one() -> Self {
        CycloNum::one()
    }
}

impl Sum for CycloNum {
    fn sum<I: Iterator<Item = CycloNum>>(iter: I) -> Self {
        iter.fold(CycloNum::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> Sum<&'a CycloNum> for CycloNum {
    fn sum<I: Iterator<Item = &'a CycloNum>>(iter: I) -> Self {
        iter.fold(CycloNum::zero(), |acc, x| &acc + x)
    }
}

impl Product for CycloNum {
    fn product<I: Iterator<Item = CycloNum>>(iter: I) -> Self {
        iter.fold(CycloNum::one(), |acc, x| &acc * &x)
    }
}

impl From<i64> for CycloNum {
    fn from(n: i64) -> Self {
        CycloNum::from_integer(n)
    }
}

impl From<BigInt> for CycloNum {
    fn from(n: BigInt) -> Self {
        CycloNum::from_rational(BigRational::from_integer(n))
    }
}

impl From<BigRational> for CycloNum {
    fn from(r: BigRational) -> Self {
        CycloNum::from_rational(r)
    }
}

impl fmt::Display for CycloNum {
    /// `N:[e1=p1/q1, e2=p2/q2, ...]`, exponents ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[", self.order)?;
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}={}/{}", e, c.numer(), c.denom())?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycloNum {
    type Err = CycloError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| CycloError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (order, rest) = s.split_once(':').ok_or_else(|| err("missing ':'"))?;
        let order: u32 = order.trim().parse().map_err(|_| err("bad order"))?;
        if order == 0 {
            return Err(CycloError::ZeroOrder);
        }
        let body = rest
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| err("expected [...]"))?;
        let f = field(order);
        let mut dense = vec![BigRational::zero(); f.degree];
        for term in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (e, c) = term.split_once('=').ok_or_else(|| err("term without '='"))?;
            let e: u64 = e.trim().parse().map_err(|_| err("bad exponent"))?;
            let c = parse_rational(c.trim()).ok_or_else(|| err("bad coefficient"))?;
            f.reduce_into((e % order as u64) as usize, &c, &mut dense);
        }
        Ok(CycloNum::normalize(order, dense))
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64, n: u32) -> CycloNum {
        CycloNum::root_of_unity(k, n).unwrap()
    }

    fn q(p: i64, d: i64) -> CycloNum {
        CycloNum::from_rational(BigRational::new(p.into(), d.into()))
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(z(0, 1), CycloNum::one());
        assert_eq!(z(1, 2), CycloNum::from_integer(-1));
        // minimal polynomial x^2 + x + 1: the two primitive roots sum to -1
        assert_eq!(&z(1, 3) + &z(2, 3), CycloNum::from_integer(-1));
        assert!(matches!(CycloNum::root_of_unity(1, 0), Err(CycloError::ZeroOrder)));
        assert_eq!(z(2, 4), CycloNum::from_integer(-1));
        assert_eq!(z(2, 6), z(1, 3));
        assert_eq!(z(-1, 3), z(2, 3));
    }

    #[test]
    fn multiplicative_order() {
        for n in 1..=12u32 {
            for k in 0..n as i64 {
                let u = z(k, n);
                let ord = n / (k as u32).gcd(&n).max(1);
                let ord = if k == 0 { 1 } else { ord };
                assert_eq!(u.pow(ord as i64).unwrap(), CycloNum::one());
                for j in 1..ord {
                    assert_ne!(u.pow(j as i64).unwrap(), CycloNum::one());
                }
            }
        }
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&z(1, 4) * &z(1, 4), CycloNum::from_integer(-1));
        let a = &CycloNum::one() + &z(1, 5);
        assert_eq!(a.checked_div(&a).unwrap(), CycloNum::one());
        // 1/(1 - zeta_3) = (2 + zeta_3)/3: (1 - w)(2 + w) = 2 - w - w^2 = 3
        let one_minus = &CycloNum::one() - &z(1, 3);
        let expected = &(&CycloNum::from_integer(2) + &z(1, 3)) * &q(1, 3);
        assert_eq!(one_minus.inverse().unwrap(), expected);
        assert_eq!(
            arith(&CycloNum::one(), &CycloNum::zero(), ArithOp::Div),
            Err(CycloError::DivisionByZero)
        );
    }

    #[test]
    fn conjugation() {
        assert_eq!(CycloNum::one().conjugate(), CycloNum::one());
        assert_eq!(z(1, 3).conjugate(), z(2, 3));
        let a = &CycloNum::one() + &z(1, 4);
        assert_eq!(&a.conjugate() * &a, CycloNum::from_integer(2));
    }

    #[test]
    fn minimal_field_normalization() {
        // zeta_8 + zeta_8^7 = sqrt 2 stays in Q(zeta_8); i = zeta_8^2 drops to order 4
        assert_eq!(z(2, 8).order(), 4);
        assert_eq!((&z(1, 8) + &z(7, 8)).order(), 8);
        // zeta_12^4 = zeta_3
        assert_eq!(z(4, 12), z(1, 3));
        // zeta_5 + zeta_5^4 + zeta_5^2 + zeta_5^3 = -1
        let s: CycloNum = (1..5).map(|k| z(k, 5)).sum();
        assert_eq!(s, CycloNum::from_integer(-1));
        assert!(s.is_rational());
        // an element of Q(zeta_3) written in Q(zeta_15)
        let w = &z(5, 15) * &z(10, 15);
        assert_eq!(w, CycloNum::one());
        // zeta_6 is -zeta_3^2
        assert_eq!(z(1, 6), -z(2, 3));
        assert_eq!(z(1, 6).order(), 3);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(CycloNum::zero().to_string(), "1:[]");
        assert_eq!(q(3, 4).to_string(), "1:[0=3/4]");
        assert_eq!(z(1, 3).to_string(), "3:[1=1/1]");
        assert_eq!(z(2, 3).to_string(), "3:[0=-1/1, 1=-1/1]");
        for s in ["1:[]", "1:[0=3/4]", "3:[1=1/1]", "3:[0=-1/1, 1=-1/1]", "8:[1=1/2, 3=-5/7]"] {
            assert_eq!(s.parse::<CycloNum>().unwrap().to_string(), s);
        }
        assert_eq!("4:[2=1/1]".parse::<CycloNum>().unwrap(), CycloNum::from_integer(-1));
        assert!("x".parse::<CycloNum>().is_err());
        assert!("0:[]".parse::<CycloNum>().is_err());
    }

    #[test]
    fn geometric_sums_vanish() {
        for n in 2..=12u32 {
            for k in 1..n as i64 {
                let u = z(k, n);
                let m = n / (k as u32).gcd(&n);
                if m == 1 {
                    continue;
                }
                let s: CycloNum = (0..m).map(|j| u.pow(j as i64).unwrap()).sum();
                assert!(s.is_zero(), "sum of powers of zeta_{n}^{k}");
            }
        }
    }

    #[test]
    fn algebraic_integers() {
        assert!(z(1, 7).is_algebraic_integer());
        assert!(!q(1, 2).is_algebraic_integer());
        assert!(!(&z(1, 3) * &q(1, 3)).is_algebraic_integer());
    }
}
