// Reduction from k cycles of length e to one: fixed subgroups of <bc>
// and <b, c>, the extension equality and the pi_c product identity.

use wreathchar::twistmult::step4_identities;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>2} {:>2} {:>2} {:>2}  orbits  subgroups  extension  pi_c", "e", "k", "n", "m");
    for (e, k, n) in [(2, 2, 2), (3, 2, 1), (2, 2, 1), (2, 3, 1), (4, 2, 1)] {
        for m in 1..=e {
            let r = step4_identities(e, k, n, m)?;
            println!(
                "{e:>2} {k:>2} {n:>2} {m:>2}  {:<6}  {:<9}  {:>4}/{:<4}  {:>4}/{:<4} {}",
                r.orbits_agree,
                format!("{:?}", r.fixed_subgroups_agree),
                r.extension_checked - r.extension_mismatches,
                r.extension_checked,
                r.pi_checked - r.pi_mismatches,
                r.pi_checked,
                if r.passed() { "ok" } else { "FAILED" }
            );
        }
    }
    Ok(())
}
