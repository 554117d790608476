//! Labels of unipotent characters of the finite groups described by a
//! [`FixedStructure`]: the connected labels `eta` (one partition per orbit),
//! their signs and degrees, the labels `eta * xi` of the full group, the
//! Mellin transform in `xi`, and a Weyl-group model in which these labels
//! become honest characters of `W°F ⋊ A^F`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::cyclotomic::CycloNum;
use crate::groupspec::{FixedStructure, SpecError};
use crate::partitions::{character_table, enumerate_partitions, generic_degree_gl, unitary_sign_and_degree, GroupType, Partition, QPoly};
use crate::permwreath::{all_perms, FiniteGroup, Perm, PermError, TopGroup, TopLabel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UnipotentError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("the stabilizer A^F_eta is not abelian")]
    NonAbelian,
    #[error("label does not fit the structure: {0}")]
    InvalidLabel(String),
    #[error("{0} is not an element of A^F")]
    NotInTop(Perm),
    #[error("Weyl model has more than {0} elements")]
    TooLarge(usize),
}

/// One partition per orbit, in orbit order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConnLabel(pub Vec<Partition>);

impl fmt::Display for ConnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl ConnLabel {
    /// `b . eta`, moving the partition of orbit `O` to orbit `b(O)`.
    pub fn act(&self, s: &FixedStructure, b: &Perm) -> ConnLabel {
        let ob = s.orbit_perm(b);
        let mut out = self.0.clone();
        for (k, p) in self.0.iter().enumerate() {
            out[ob.apply(k)] = p.clone();
        }
        ConnLabel(out)
    }

    fn check(&self, s: &FixedStructure) -> Result<(), UnipotentError> {
        if self.0.len() != s.orbits.len() || self.0.iter().zip(&s.orbits).any(|(p, o)| p.size() != o.n) {
            return Err(UnipotentError::InvalidLabel(self.to_string()));
        }
        Ok(())
    }
}

/// Every assignment of a partition of `n_O` to each orbit `O`.
pub fn conn_labels(s: &FixedStructure) -> Vec<ConnLabel> {
    let mut out = vec![Vec::new()];
    for o in &s.orbits {
        let ps = enumerate_partitions(o.n);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Partition>| {
                ps.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(ConnLabel).collect()
}

/// `(epsilon_eta, degree)` of the unipotent character of `H°F` labelled by
/// `eta`: per orbit the linear or unitary degree in `q^l`, multiplied.
pub fn sign_and_degree(s: &FixedStructure, eta: &ConnLabel) -> (i64, QPoly) {
    let mut sign = 1;
    let mut deg = QPoly::one();
    for (o, lambda) in s.orbits.iter().zip(&eta.0) {
        let (e, p) = match o.kind {
            GroupType::Linear => (1, generic_degree_gl(lambda)),
            GroupType::Unitary => unitary_sign_and_degree(lambda),
        };
        sign *= e;
        deg = &deg * &p.substitute_power(o.length());
    }
    (sign, deg)
}

/// `A^F_eta`.
pub fn stabilizer(s: &FixedStructure, eta: &ConnLabel) -> FiniteGroup {
    s.af.subgroup_where(|b| &eta.act(s, b) == eta)
}

/// Checks that `b` transports `eta` to a label with the same sign and
/// degree and that `eta o ad(b^-1) = b . eta` as characters of `W°F`.
pub fn equivariance_check(s: &FixedStructure, b: &Perm, eta: &ConnLabel) -> Result<bool, UnipotentError> {
    eta.check(s)?;
    if !s.af.contains(b) {
        return Err(UnipotentError::NotInTop(b.clone()));
    }
    let moved = eta.act(s, b);
    if sign_and_degree(s, &moved) != sign_and_degree(s, eta) {
        return Ok(false);
    }
    let ob = s.orbit_perm(b);
    let model = WeylModel::new(s, 1_000_000)?;
    for w in model.wf_elements() {
        // b^-1 w b has coordinate O equal to w_{b(O)}
        let conj: Vec<Perm> = (0..w.len()).map(|k| w[ob.apply(k)].clone()).collect();
        if model.eta_value(eta, &conj) != model.eta_value(&moved, &w) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A unipotent label `eta * xi` of the full group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnipotentLabel {
    pub eta: ConnLabel,
    pub xi: TopLabel,
    pub sign: i64,
    pub degree: QPoly,
}

/// All labels `eta * xi`: `eta` runs over minimal representatives of
/// `A^F`-orbits (by partition index), `xi` over `Irr(A^F_eta)`.
pub fn unipotent_labels(s: &FixedStructure) -> Result<Vec<UnipotentLabel>, UnipotentError> {
    let index: Vec<Vec<Partition>> = s.orbits.iter().map(|o| enumerate_partitions(o.n)).collect();
    let key = |eta: &ConnLabel| -> Vec<usize> {
        eta.0
            .iter()
            .zip(&index)
            .map(|(p, ps)| ps.iter().position(|q| q == p).expect("partition of n"))
            .collect()
    };
    let mut out = Vec::new();
    for eta in conn_labels(s) {
        let k = key(&eta);
        if s.af.elements().iter().any(|b| key(&eta.act(s, b)) < k) {
            continue;
        }
        let stab = TopGroup::new(stabilizer(s, &eta))?;
        let index = (s.af.order() / stab.order()) as i64;
        let (sign, deg) = sign_and_degree(s, &eta);
        for xi in stab.irr_labels() {
            let factor = BigInt::from(index * stab.degree(&xi) as i64);
            out.push(UnipotentLabel {
                eta: eta.clone(),
                xi,
                sign,
                degree: deg.scale(&factor),
            });
        }
    }
    Ok(out)
}

/// The Mellin transform over `A^F_eta` for one `eta`.
#[derive(Clone, Debug)]
pub struct MellinFamily {
    pub eta: ConnLabel,
    /// Elements of `A^F_eta`, in group order.
    pub elements: Vec<Perm>,
    pub xis: Vec<TopLabel>,
    /// `forward[a][xi] = xi(a^-1)`: `R^_{eta*a} = sum_xi forward[a][xi] R_{eta*xi}`.
    pub forward: Vec<Vec<CycloNum>>,
    /// `inverse[xi][a] = xi(a) / |A^F_eta|`.
    pub inverse: Vec<Vec<CycloNum>>,
}

impl MellinFamily {
    /// `forward * inverse` and `inverse * forward` are both the identity.
    pub fn round_trip_exact(&self) -> bool {
        is_identity(&mat_mul(&self.forward, &self.inverse)) && is_identity(&mat_mul(&self.inverse, &self.forward))
    }

    /// Coefficients of `R_{eta*xi}` recovered from the transform vectors.
    pub fn invert(&self, hat: &[Vec<CycloNum>]) -> Vec<Vec<CycloNum>> {
        mat_mul(&self.inverse, hat)
    }
}

fn mat_mul(a: &[Vec<CycloNum>], b: &[Vec<CycloNum>]) -> Vec<Vec<CycloNum>> {
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).map(|(x, r)| x * &r[j]).sum())
                .collect()
        })
        .collect()
}

fn is_identity(m: &[Vec<CycloNum>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.len() == m.len()
            && row
                .iter()
                .enumerate()
                .all(|(j, x)| *x == if i == j { CycloNum::one() } else { CycloNum::zero() })
    })
}

/// Mellin transform for `eta`; requires `A^F_eta` abelian.
pub fn mellin(s: &FixedStructure, eta: &ConnLabel) -> Result<MellinFamily, UnipotentError> {
    eta.check(s)?;
    let stab = TopGroup::new(stabilizer(s, eta))?;
    if !stab.is_abelian() {
        return Err(UnipotentError::NonAbelian);
    }
    let elements = stab.group().elements().to_vec();
    let xis = stab.irr_labels();
    let order = BigRational::new(BigInt::from(1), BigInt::from(stab.order()));
    let forward = elements
        .iter()
        .map(|a| xis.iter().map(|xi| stab.value(xi, &a.inverse())).collect())
        .collect();
    let inverse = xis
        .iter()
        .map(|xi| elements.iter().map(|a| stab.value(xi, a).scale(&order)).collect())
        .collect();
    Ok(MellinFamily {
        eta: eta.clone(),
        elements,
        xis,
        forward,
        inverse,
    })
}

/// `W°F ⋊ A^F` with `W°F` one symmetric group per orbit; `A^F` permutes
/// orbit coordinates. Elements are `(w, b)` with `w` an orbit-indexed tuple.
pub struct WeylModel<'a> {
    s: &'a FixedStructure,
    wf: Vec<Vec<Perm>>,
}

impl<'a> WeylModel<'a> {
    pub fn new(s: &'a FixedStructure, cap: usize) -> Result<Self, UnipotentError> {
        if s.wf_order() > cap {
            return Err(UnipotentError::TooLarge(cap));
        }
        let mut wf: Vec<Vec<Perm>> = vec![Vec::new()];
        for o in &s.orbits {
            let perms = all_perms(o.n);
            wf = wf
                .into_iter()
                .flat_map(|prefix| {
                    perms.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        Ok(WeylModel { s, wf })
    }

    pub fn wf_elements(&self) -> Vec<Vec<Perm>> {
        self.wf.clone()
    }

    pub fn order(&self) -> usize {
        self.wf.len() * self.s.af.order()
    }

    /// `eta(w)` on `W°F`.
    pub fn eta_value(&self, eta: &ConnLabel, w: &[Perm]) -> i64 {
        eta.0
            .iter()
            .zip(w)
            .map(|(l, p)| character_table(l.size()).value(l, &p.cycle_type()))
            .product()
    }

    /// `(eta ⋊ A^F_eta)(w b)` for `b` stabilizing `eta`: the product over
    /// `<b>`-cycles of orbits of `eta_O(w_{b^{r-1}O} .. w_{bO} w_O)`.
    pub fn extension_value(&self, eta: &ConnLabel, w: &[Perm], b: &Perm) -> i64 {
        let ob = self.s.orbit_perm(b);
        let mut seen = vec![false; w.len()];
        let mut out = 1;
        for start in 0..w.len() {
            if seen[start] {
                continue;
            }
            let mut acc = w[start].clone();
            seen[start] = true;
            let mut y = ob.apply(start);
            while y != start {
                seen[y] = true;
                acc = w[y].compose(&acc);
                y = ob.apply(y);
            }
            let l = &eta.0[start];
            out *= character_table(l.size()).value(l, &acc.cycle_type());
            if out == 0 {
                break;
            }
        }
        out
    }

    /// `(b . w)_{b(O)} = w_O`.
    fn act(&self, b: &Perm, w: &[Perm]) -> Vec<Perm> {
        let ob = self.s.orbit_perm(b);
        let mut out = w.to_vec();
        for (k, p) in w.iter().enumerate() {
            out[ob.apply(k)] = p.clone();
        }
        out
    }

    /// `chi_{eta*xi}(w b) = Ind(xi . (eta ⋊ A^F_eta))(w b)`.
    pub fn label_value(&self, eta: &ConnLabel, stab: &TopGroup, xi: &TopLabel, w: &[Perm], b: &Perm) -> CycloNum {
        let mut total = CycloNum::zero();
        for t in self.s.af.elements() {
            let t_inv = t.inverse();
            let conj = t_inv.compose(b).compose(t);
            if !stab.group().contains(&conj) {
                continue;
            }
            let moved = self.act(&t_inv, w);
            let ext = self.extension_value(eta, &moved, &conj);
            if ext != 0 {
                total = &total + &stab.value(xi, &conj).scale(&BigRational::from_integer(ext.into()));
            }
        }
        total.scale(&BigRational::new(BigInt::from(1), BigInt::from(stab.order())))
    }
}

/// Outcome of checking the support identity for one `(eta, a)`.
#[derive(Clone, Debug, Serialize)]
pub struct SupportReport {
    pub eta: String,
    pub a: Perm,
    /// Number of `(w, b)` pairs compared.
    pub checked: usize,
    pub mismatches: usize,
    /// Number of points where the `a = b` column is nonzero.
    pub nonzero_on_diagonal: usize,
}

impl SupportReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Verifies `sum_xi xi(a^-1) chi_{eta*xi}(w b) = |A^F_eta| chi_{eta*1}(w b)`
/// when `b = a` and `0` otherwise, for every `w` in `W°F` and `b` in `A^F`.
pub fn support_identity_weyl_model(
    s: &FixedStructure,
    eta: &ConnLabel,
    a: &Perm,
) -> Result<SupportReport, UnipotentError> {
    let fam = mellin(s, eta)?;
    let ai = fam
        .elements
        .iter()
        .position(|x| x == a)
        .ok_or_else(|| UnipotentError::NotInTop(a.clone()))?;
    let stab = TopGroup::new(stabilizer(s, eta))?;
    let trivial = stab.trivial_label();
    let model = WeylModel::new(s, 1_000_000)?;
    let size = BigRational::from_integer(BigInt::from(stab.order()));
    let mut report = SupportReport {
        eta: eta.to_string(),
        a: a.clone(),
        checked: 0,
        mismatches: 0,
        nonzero_on_diagonal: 0,
    };
    for w in model.wf_elements() {
        for b in s.af.elements() {
            let lhs: CycloNum = fam
                .xis
                .iter()
                .enumerate()
                .map(|(j, xi)| &fam.forward[ai][j] * &model.label_value(eta, &stab, xi, &w, b))
                .sum();
            let rhs = if b == a {
                model.label_value(eta, &stab, &trivial, &w, b).scale(&size)
            } else {
                CycloNum::zero()
            };
            report.checked += 1;
            if lhs != rhs {
                report.mismatches += 1;
            }
            if b == a && !rhs.is_zero() {
                report.nonzero_on_diagonal += 1;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupspec::{analyze, FactorSpec, GroupSpec};

    fn structure(n: usize, d: usize, gens: Vec<Perm>, sigma: Perm, t: u8) -> FixedStructure {
        analyze(&GroupSpec::single(FactorSpec::new(n, d, gens, sigma, t))).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn connected_label_counts() {
        assert_eq!(conn_labels(&structure(2, 1, vec![], Perm::identity(1), 0)).len(), 2);
        let c3 = Perm::long_cycle(3);
        assert_eq!(conn_labels(&structure(2, 3, vec![c3.clone()], c3, 0)).len(), 2);
        let two = analyze(&GroupSpec {
            factors: vec![
                FactorSpec::new(2, 1, vec![], Perm::identity(1), 0),
                FactorSpec::new(3, 1, vec![], Perm::identity(1), 0),
            ],
        })
        .unwrap();
        assert_eq!(conn_labels(&two).len(), 6);
    }

    #[test]
    fn signs_and_degrees() {
        let u3 = structure(3, 1, vec![], Perm::identity(1), 1);
        assert_eq!(sign_and_degree(&u3, &ConnLabel(vec![p(&[3])])), (1, QPoly::one()));
        assert_eq!(sign_and_degree(&u3, &ConnLabel(vec![p(&[1, 1, 1])])), (-1, QPoly::monomial(1, 3)));
        let c3 = Perm::long_cycle(3);
        let gl2q3 = structure(2, 3, vec![c3.clone()], c3, 0);
        assert_eq!(sign_and_degree(&gl2q3, &ConnLabel(vec![p(&[1, 1])])), (1, QPoly::monomial(1, 3)));
    }

    #[test]
    fn label_counts() {
        let torus = structure(1, 2, vec![Perm::long_cycle(2)], Perm::identity(2), 1);
        assert_eq!(unipotent_labels(&torus).unwrap().len(), 2);
        let gl2wr2 = structure(2, 2, vec![Perm::long_cycle(2)], Perm::identity(2), 0);
        assert_eq!(unipotent_labels(&gl2wr2).unwrap().len(), 5);
        let plain = structure(2, 1, vec![], Perm::identity(1), 0);
        let labels = unipotent_labels(&plain).unwrap();
        assert_eq!(labels.len(), 2);
        assert!(labels.iter().all(|l| l.xi == TopLabel::default()));
    }

    #[test]
    fn mellin_on_order_two() {
        let s = structure(2, 2, vec![Perm::long_cycle(2)], Perm::identity(2), 0);
        let eta = ConnLabel(vec![p(&[2]), p(&[2])]);
        let fam = mellin(&s, &eta).unwrap();
        assert_eq!(fam.elements.len(), 2);
        assert!(fam.round_trip_exact());
        let one = CycloNum::one();
        let minus = CycloNum::from_integer(-1);
        assert_eq!(fam.forward[0], vec![one.clone(), one.clone()]);
        assert_eq!(fam.forward[1], vec![one, minus]);
    }

    #[test]
    fn support_identity_examples() {
        let s = structure(2, 2, vec![Perm::long_cycle(2)], Perm::identity(2), 0);
        let eta = ConnLabel(vec![p(&[1, 1]), p(&[1, 1])]);
        for a in s.af.elements() {
            let r = support_identity_weyl_model(&s, &eta, a).unwrap();
            assert!(r.passed());
            assert_eq!(r.checked, 8);
        }
        let c3 = Perm::long_cycle(3);
        let s = structure(1, 3, vec![c3.clone()], Perm::identity(3), 0);
        let eta = ConnLabel(vec![p(&[1]); 3]);
        for a in s.af.elements() {
            assert!(support_identity_weyl_model(&s, &eta, a).unwrap().passed());
        }
    }

    #[test]
    fn equivariance() {
        let s = structure(2, 2, vec![Perm::long_cycle(2)], Perm::identity(2), 0);
        for eta in conn_labels(&s) {
            for b in s.af.elements() {
                assert!(equivariance_check(&s, b, &eta).unwrap());
            }
        }
    }
}
