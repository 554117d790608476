//! The wreath identities behind the reduction from `k` cycles of length `e`
//! to a single one, checked inside `W° = S_n^{ek}`.

use serde::Serialize;

use super::model::{base_orbits, extension_value, Blocks, PointModel};
use super::TwistError;
use crate::cyclotomic::CycloNum;
use crate::partitions::{enumerate_partitions, Partition};
use crate::permwreath::{all_perms, canonical_extension_value, Element, GroupDescriptor, Perm, WreathSpec};

/// Enumeration bound for the brute-force parts.
const BRUTE_CAP: usize = 50_000;

#[derive(Clone, Debug, Serialize)]
pub struct Step4Report {
    pub e: usize,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    /// `<bc>` and `<b, c>` have the same orbits on the top points.
    pub orbits_agree: bool,
    /// `W°<bc> = W°<b, c>` element by element, when small enough to list.
    pub fixed_subgroups_agree: Option<bool>,
    pub extension_checked: usize,
    pub extension_mismatches: usize,
    pub pi_checked: usize,
    pub pi_mismatches: usize,
}

impl Step4Report {
    pub fn passed(&self) -> bool {
        self.orbits_agree
            && self.fixed_subgroups_agree != Some(false)
            && self.extension_mismatches == 0
            && self.pi_mismatches == 0
    }
}

fn product_tuples(positions: usize, n: usize) -> Vec<Vec<Perm>> {
    let perms = all_perms(n);
    let mut out = vec![Vec::new()];
    for _ in 0..positions {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Perm>| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn bounded_pow(base: usize, exp: usize) -> Option<usize> {
    (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base))
}

/// With `sigma` the product of the `k` cycles `(je, .., je+e-1)`,
/// `c: i -> i+e mod ek` and `b = tau^m` on the first cycle, checks
/// (i) `W°<bc> = W°<b,c>`, (ii) `eta_bc ⋊ sigma` on `W°<bc> sigma` equals the
/// first-cycle function `(eta^<c>)_{sigma^m} ⋊ sigma` and (iii) `(h b c)^k`
/// restricted to the first cycle is `y (h_k .. h_1 tau^m) y^-1` with
/// `y = h_1 tau^m`.
pub fn step4_identities(e: usize, k: usize, n: usize, m: usize) -> Result<Step4Report, TwistError> {
    if e == 0 || k == 0 || n == 0 || m == 0 || m > e {
        return Err(TwistError::Unsupported(format!("need e, k, n >= 1 and 1 <= m <= e, got e={e} k={k} n={n} m={m}")));
    }
    let d = e * k;
    let sigma = Perm::from_images((0..d).map(|i| i / e * e + (i % e + 1) % e).collect())?;
    let c = Perm::from_images((0..d).map(|i| (i + e) % d).collect())?;
    let b = Perm::from_images((0..d).map(|i| if i < e { (i + m) % e } else { i }).collect())?;
    for g in [&b, &c] {
        if g.compose(&sigma) != sigma.compose(g) {
            return Err(TwistError::Unsupported(format!("{g} does not centralize sigma")));
        }
    }
    let bc = b.compose(&c);
    let (bc_orbits, bc_class) = base_orbits(d, std::slice::from_ref(&bc));
    let (bc2_orbits, _) = base_orbits(d, &[b.clone(), c.clone()]);
    let orbits_agree = bc_orbits == bc2_orbits;

    let model = PointModel::uniform(d, n);
    let lift = |t: &Perm| model.lift(t).expect("uniform fibers");
    let (bc_t, b_t, c_t) = (lift(&bc), lift(&b), lift(&c));
    let full_size = bounded_pow(factorial(n), d);
    let all_w: Option<Vec<Perm>> = full_size.filter(|&s| s <= BRUTE_CAP).map(|_| {
        product_tuples(d, n)
            .iter()
            .map(|w| model.fiberwise(w).expect("fiber degrees"))
            .collect()
    });
    let commutes = |w: &Perm, t: &Perm| w.compose(t) == t.compose(w);
    let fixed_subgroups_agree = all_w.as_ref().map(|ws| {
        ws.iter()
            .all(|w| commutes(w, &bc_t) == (commutes(w, &b_t) && commutes(w, &c_t)))
    });

    // (ii) on W°<bc> sigma: one S_n coordinate per <bc>-orbit.
    let orbit_count = bc_orbits.len();
    let top = Perm::from_images(bc_orbits.iter().map(|o| bc_class[sigma.apply(o[0])]).collect())?;
    let wreath = WreathSpec::new(GroupDescriptor::Sym(n), orbit_count, vec![top.clone()]);
    let first = PointModel::uniform(e, n);
    let tau = Perm::long_cycle(e);
    let tau_t = first.lift(&tau)?;
    let (_, tau_m_class) = base_orbits(e, &[tau.pow(m as i64)]);
    let whole = Blocks::whole(&first);
    let mut extension_checked = 0;
    let mut extension_mismatches = 0;
    let fixed_size = bounded_pow(factorial(n), orbit_count);
    if fixed_size.is_some_and(|s| s <= BRUTE_CAP) {
        let tuples = product_tuples(orbit_count, n);
        for mu in enumerate_partitions(n) {
            let chi = vec![crate::permwreath::IrrLabel::Sym(mu.clone()); orbit_count];
            let labels: Vec<Vec<Partition>> = vec![vec![mu.clone()]; e];
            for h in &tuples {
                let elems: Vec<Element> = h.iter().cloned().map(Element::Sym).collect();
                let lhs = canonical_extension_value(&wreath, &chi, &top, &elems)?;
                let w0: Vec<Perm> = (0..e).map(|t| h[bc_class[t]].clone()).collect();
                let g = first.fiberwise(&w0)?.compose(&tau_t);
                let rhs = CycloNum::from_integer(extension_value(&first, &whole, &labels, &tau_m_class, &g));
                extension_checked += 1;
                if lhs != rhs {
                    extension_mismatches += 1;
                }
            }
        }
    }

    // (iii) pi_c on the first cycle.
    let mut pi_checked = 0;
    let mut pi_mismatches = 0;
    if let Some(ws) = &all_w {
        let tau_m = tau_t.pow(m as i64);
        let g_tail = b_t.compose(&c_t);
        for w in ws {
            let coords = model.coordinates(w);
            let g = w.compose(&g_tail);
            let gk = g.pow(k as i64);
            let restricted = Perm::from_images((0..e * n).map(|p| gk.apply(p)).collect());
            let comp = |j: usize| first.fiberwise(&coords[j * e..(j + 1) * e]).expect("fiber degrees");
            let mut pi = comp(0).compose(&tau_m);
            for j in 1..k {
                pi = comp(j).compose(&pi);
            }
            let y = comp(0).compose(&tau_m);
            let expected = y.compose(&pi).compose(&y.inverse());
            pi_checked += 1;
            if restricted.as_ref() != Ok(&expected) {
                pi_mismatches += 1;
            }
        }
    }

    Ok(Step4Report {
        e,
        k,
        n,
        m,
        orbits_agree,
        fixed_subgroups_agree,
        extension_checked,
        extension_mismatches,
        pi_checked,
        pi_mismatches,
    })
}
