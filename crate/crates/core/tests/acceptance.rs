// Acceptance gate: one line per criterion, then a single assertion.
// Values are exact; the only tolerances are the wall-clock limits below.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use wreathchar::groupspec::{analyze, order_polynomial, FactorSpec, GroupSpec};
use wreathchar::partitions::{
    degree_via_class_sum, enumerate_partitions, generic_degree_gl, kostka_matrix, mn_character, GroupType, Partition,
};
use wreathchar::permwreath::{FiniteGroup, GroupDescriptor, Perm, DEFAULT_CAP};
use wreathchar::verify;

const LIMIT_SYMMETRIC: Duration = Duration::from_secs(5);
const LIMIT_DEGREES: Duration = Duration::from_secs(10);
const LIMIT_LEMMA51: Duration = Duration::from_secs(60);
const FROBENIUS_SEED: u64 = 20_261_016;

struct Line {
    id: usize,
    passed: bool,
    what: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn suite_summary(r: &verify::SuiteReport) -> String {
    let failed: Vec<String> = r.failures().map(|c| format!("{} ({})", c.name, c.detail)).collect();
    if failed.is_empty() {
        format!("{} checks", r.checks.len())
    } else {
        format!("failed: {}", failed.join("; "))
    }
}

/// Row and column orthogonality straight from Murnaghan-Nakayama.
fn symmetric_oracle(n: usize) -> bool {
    let ps = enumerate_partitions(n);
    let order: BigInt = (1..=n).map(BigInt::from).product();
    let chi: Vec<Vec<i64>> = ps.iter().map(|l| ps.iter().map(|m| mn_character(l, m)).collect()).collect();
    let z: Vec<BigInt> = ps.iter().map(Partition::centralizer_order).collect();
    let k = ps.len();
    for i in 0..k {
        for j in 0..k {
            let row: BigInt = (0..k).map(|c| BigInt::from(chi[i][c] * chi[j][c]) * (&order / &z[c])).sum();
            if row != if i == j { order.clone() } else { BigInt::zero() } {
                return false;
            }
            let col: i64 = (0..k).map(|l| chi[l][i] * chi[l][j]).sum();
            if BigInt::from(col) != if i == j { z[i].clone() } else { BigInt::zero() } {
                return false;
            }
        }
    }
    let identity = ps.iter().position(|m| m.parts().iter().all(|&p| p == 1)).expect("1^n");
    (0..k).map(|l| BigInt::from(chi[l][identity]).pow(2)).sum::<BigInt>() == order
}

fn hooks(l: &Partition) -> Vec<usize> {
    let conj = l.conjugate();
    let mut out = Vec::new();
    for (i, &row) in l.parts().iter().enumerate() {
        for j in 0..row {
            out.push(row - j + conj.parts()[j] - i - 1);
        }
    }
    out
}

/// `q^{n(lambda)} prod_{i<=n} (q^i - 1) / prod_hooks (q^h - 1)` at an integer.
fn q_hook(l: &Partition, q: i64) -> BigRational {
    let q = BigInt::from(q);
    let n_stat: usize = l.parts().iter().enumerate().map(|(i, &p)| i * p).sum();
    let mut num = q.pow(n_stat as u32);
    for i in 1..=l.size() {
        num *= q.pow(i as u32) - 1;
    }
    let mut den = BigInt::one();
    for h in hooks(l) {
        den *= q.pow(h as u32) - 1;
    }
    BigRational::new(num, den)
}

fn degree_oracle(max_n: usize) -> bool {
    for n in 1..=max_n {
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        for l in enumerate_partitions(n) {
            let d = generic_degree_gl(&l);
            if d != degree_via_class_sum(&l, GroupType::Linear) {
                return false;
            }
            let f: BigInt = &fact / hooks(&l).iter().map(|&h| BigInt::from(h)).product::<BigInt>();
            if d.eval_i64(1) != f {
                return false;
            }
            for q in [2, 3, 5] {
                if BigRational::from_integer(d.eval_i64(q)) != q_hook(&l, q) {
                    return false;
                }
            }
        }
    }
    true
}

/// Number of classes as commuting pairs over `|G|`.
fn burnside_classes(g: &FiniteGroup) -> usize {
    let els = g.elements();
    let pairs = els
        .iter()
        .map(|x| els.iter().filter(|y| x.compose(y) == y.compose(x)).count())
        .sum::<usize>();
    pairs / els.len()
}

fn clifford_oracle() -> bool {
    verify::wreath_matrix().into_iter().all(|(_, w)| {
        let g = GroupDescriptor::Wreath(w);
        let fg = g.finite_group(DEFAULT_CAP).expect("small group");
        wreathchar::permwreath::irr_labels(&g).expect("labels").len() == burnside_classes(&fg)
    })
}

/// Integer determinant by rational elimination.
fn rational_det(m: &[Vec<i64>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for j in c..n {
                let v = &a[c][j] * &f;
                a[r][j] -= v;
            }
        }
    }
    det
}

/// `|GL_2(F_2)|` by determinant, `|GU_2(2)|` over `F_4` with Frobenius `x -> x^2`,
/// `|GL_1(F_4)|` as nonzero elements.
fn field_counts() -> (usize, usize, usize) {
    let gl2 = (0..16u8)
        .filter(|m| {
            let b = |i: u8| (m >> i) & 1;
            (b(0) & b(3)) ^ (b(1) & b(2)) == 1
        })
        .count();
    // F_4 coded 0, 1, w, w^2 = 0..3; the code is also the bit vector over {1, w}
    let mul = |x: u8, y: u8| -> u8 {
        if x == 0 || y == 0 {
            0
        } else {
            (x + y - 2) % 3 + 1
        }
    };
    let add = |x: u8, y: u8| x ^ y;
    let frob = |x: u8| mul(x, x);
    let mut gu2 = 0;
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    // rows (a, b), (c, d); M * conj(M)^T = I
                    let r00 = add(mul(a, frob(a)), mul(b, frob(b)));
                    let r01 = add(mul(a, frob(c)), mul(b, frob(d)));
                    let r11 = add(mul(c, frob(c)), mul(d, frob(d)));
                    if r00 == 1 && r01 == 0 && r11 == 1 {
                        gu2 += 1;
                    }
                }
            }
        }
    }
    let gl1_4 = (1..4u8).count();
    (gl2, gu2, gl1_4)
}

fn order_at_two(n: usize, d: usize, sigma: Perm, twist: u8) -> BigInt {
    let s = analyze(&GroupSpec::single(FactorSpec::new(n, d, vec![], sigma, twist))).expect("valid spec");
    order_polynomial(&s).eval_i64(2)
}

#[test]
fn acceptance() {
    let mut lines = Vec::new();
    let mut push = |id: usize, passed: bool, what: String| lines.push(Line { id, passed, what });

    let ((r, oracle), t) = timed(|| (verify::symmetric_tables(7), (1..=7).all(symmetric_oracle)));
    push(1, r.passed() && oracle && t < LIMIT_SYMMETRIC, format!("S_n tables n<=7 orthogonal, {}, {:.2?} (limit {:?})", suite_summary(&r), t, LIMIT_SYMMETRIC));

    let ((r, oracle), t) = timed(|| (verify::linear_degrees(6), degree_oracle(6)));
    push(2, r.passed() && oracle && t < LIMIT_DEGREES, format!("hook degree = class sum, D(1)=f, q-hook oracle, {}, {:.2?} (limit {:?})", suite_summary(&r), t, LIMIT_DEGREES));

    let r = verify::unitary_degrees(5);
    push(3, r.passed(), format!("unitary degree = class sum, sign fixed on q=2..5, {}", suite_summary(&r)));

    let r = verify::wreath_extensions();
    push(4, r.passed() && r.checks.len() == 8, format!("extension Gram matrices are identity, family size = phi-classes, {}", suite_summary(&r)));

    let r = verify::wreath_clifford(DEFAULT_CAP);
    let oracle = clifford_oracle();
    push(5, r.passed() && oracle, format!("|Irr| = classes (Burnside oracle {oracle}), sum deg^2 = |G|, {}", suite_summary(&r)));

    let r = verify::frobenius(FROBENIUS_SEED, 100);
    push(6, r.passed(), format!("Frobenius reciprocity, 100 pairs x {} configurations, seed {FROBENIUS_SEED}, {}", r.checks.len(), suite_summary(&r)));

    let (r, t) = timed(|| verify::lemma51(&[(2, 2), (2, 3), (3, 2)]));
    push(7, r.passed() && t < LIMIT_LEMMA51, format!("coset multiplicities = ordinary induction, {}, {:.2?} (limit {:?})", suite_summary(&r), t, LIMIT_LEMMA51));

    let data = verify::reexpansion_data();
    let twisted = data.iter().filter(|(_, _, l)| l.w1.as_ref().is_some_and(|w| w.iter().any(|p| !p.is_identity()))).count();
    let r = verify::reexpansion();
    push(8, r.passed() && data.len() >= 5 && twisted >= 1, format!("re-expansion exact on {} Levi data ({twisted} with w1 != 1), {}", data.len(), suite_summary(&r)));

    let r = verify::kostka(7);
    let oracle = (1..=7).all(|n| rational_det(&kostka_matrix(n)).abs().is_one());
    push(9, r.passed() && oracle, format!("Kostka det = +-1 for n<=7 (rational elimination {oracle}), {}", suite_summary(&r)));

    let r = verify::step4(8);
    push(10, r.passed(), format!("step4 identities for e*k*n<=8, 1<=m<=e, {}", suite_summary(&r)));

    let specs = verify::default_specs();
    let kinds = specs.iter().fold((false, false, false, false), |acc, (_, gs)| {
        let s = analyze(gs).expect("valid spec");
        let unitary = s.orbits.iter().any(|o| o.kind == GroupType::Unitary);
        let linear = s.orbits.iter().any(|o| o.kind == GroupType::Linear);
        let cyclic = s.af.order() > 1 && s.af.is_abelian();
        let symmetric = !s.af.is_abelian();
        (acc.0 | linear, acc.1 | unitary, acc.2 | cyclic, acc.3 | symmetric)
    });
    let r = verify::label_counts(&specs, DEFAULT_CAP);
    let covered = kinds == (true, true, true, true);
    push(11, r.passed() && specs.len() >= 8 && covered, format!("|labels| = |Irr(W°F x| A^F)| on {} specs (coverage {covered}), {}", specs.len(), suite_summary(&r)));

    let abelian = specs.iter().filter(|(_, gs)| analyze(gs).expect("valid").af.is_abelian()).count();
    let r = verify::mellin_support(&specs);
    push(12, r.passed() && r.checks.len() == abelian, format!("Mellin round trip and support identity on {abelian} abelian-top specs, {}", suite_summary(&r)));

    let (gl2, gu2, gl14) = field_counts();
    let got = (
        order_at_two(2, 1, Perm::identity(1), 0),
        order_at_two(2, 1, Perm::identity(1), 1),
        order_at_two(1, 2, Perm::long_cycle(2), 0),
    );
    let expected = (BigInt::from(gl2), BigInt::from(gu2), BigInt::from(gl14));
    let fixed = (BigInt::from(6), BigInt::from(18), BigInt::from(3));
    push(13, got == expected && expected == fixed, format!("order at q=2: GL_2(2)={} GU_2(2)={} GL_1(4)={} (brute force {gl2}, {gu2}, {gl14})", got.0, got.1, got.2));

    for l in &lines {
        println!("criterion {:>2} {} {}", l.id, if l.passed { "PASS" } else { "FAIL" }, l.what);
    }
    let failed: Vec<usize> = lines.iter().filter(|l| !l.passed).map(|l| l.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
