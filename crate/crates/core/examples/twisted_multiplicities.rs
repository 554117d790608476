// Multiplicities of coset induction from a Levi-type subcoset
// `W_L°<a> w1 sigma` to `W°<a> sigma`, their re-expansion, and the
// comparison with ordinary induction when sigma is a full cycle.

use wreathchar::groupspec::{analyze, GroupSpec};
use wreathchar::permwreath::Perm;
use wreathchar::twistmult::{expand, lemma51_crosscheck, LeviDatum, LeviSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // GL_3^2 with sigma swapping the factors; W_L° trivial and w1 a 3-cycle
    let s = analyze(&GroupSpec::from_json(r#"{"factors":[{"n":3,"d":2,"A_gens":[[1,0]],"sigma":[1,0]}]}"#)?)?;
    let levi: LeviSpec = serde_json::from_str(r#"{"compositions":[[1,1,1],[1,1,1]],"AL_gens":[[1,0]],"w1":[[1,2,0],[1,2,0]]}"#)?;
    let datum = LeviDatum::new(&s, &levi)?;
    for a in datum.al.elements() {
        let ex = expand(&datum, &datum.trivial_label(), a)?;
        println!("a = {a}");
        for e in &ex.table.entries {
            println!("  {:<10} {:<16} m = {}", e.eta.to_string(), e.eta_a.to_string(), e.m);
        }
        println!("  re-expansion exact: {}", ex.reexpansion_exact()?);
    }

    let datum = LeviDatum::full_cycle(3, 2, &[1, 1])?;
    for lambda in datum.levi_labels() {
        println!("full 3-cycle, lambda {lambda}: agrees with ordinary induction = {}", lemma51_crosscheck(&datum, &lambda)?);
    }
    let t = wreathchar::twistmult::m_table(&datum, &datum.trivial_label(), &Perm::long_cycle(3))?;
    println!("{}", serde_json::to_string(&t.to_json())?);
    Ok(())
}
