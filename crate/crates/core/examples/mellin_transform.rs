// The Mellin transform over the stabilizer of a label: forward and
// inverse matrices, exact round trip, and the support identity in the
// Weyl-group model.

use wreathchar::groupspec::{analyze, GroupSpec};
use wreathchar::unipotent::{conn_labels, mellin, support_identity_weyl_model};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = analyze(&GroupSpec::from_json(r#"{"factors":[{"n":1,"d":4,"A_gens":[[1,2,3,0]],"sigma":[0,1,2,3]}]}"#)?)?;
    let eta = conn_labels(&s).into_iter().next().expect("one label");
    let fam = mellin(&s, &eta)?;
    println!("eta = {eta}, |A_eta| = {}", fam.elements.len());
    for (a, row) in fam.elements.iter().zip(&fam.forward) {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("  a = {a:<12} {}", cells.join("  "));
    }
    println!("round trip exact: {}", fam.round_trip_exact());
    for a in &fam.elements {
        let r = support_identity_weyl_model(&s, &eta, a)?;
        println!("support at {a}: {} values, {} mismatches", r.checked, r.mismatches);
    }
    Ok(())
}
