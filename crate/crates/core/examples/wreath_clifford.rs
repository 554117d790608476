// Irreducible characters of a wreath product from Clifford labels
// `<chi | xi>`, with degrees and the check against conjugacy classes.

use wreathchar::permwreath::{irr_labels, CompiledCharacter, GroupDescriptor, Perm, DEFAULT_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g: GroupDescriptor = serde_json::from_str(r#"{"wreath":{"base":{"sym":3},"deg":3,"top_gens":[[1,2,0]]}}"#)?;
    let labels = irr_labels(&g)?;
    let order = g.order(DEFAULT_CAP)?;
    let mut sum = 0;
    for l in &labels {
        let chi = CompiledCharacter::new(&g, l)?;
        let d = chi.degree(&g);
        sum += d * d;
        println!("{l:<30} degree {d}");
    }
    let classes = g.finite_group(DEFAULT_CAP)?.conjugacy_classes().len();
    println!("{} labels, {classes} classes, sum of squares {sum} = |G| = {order}", labels.len());

    // a value at an element given by base tuple and top permutation
    let x = wreathchar::permwreath::Element::Wreath {
        base: vec![wreathchar::permwreath::Element::Sym(Perm::long_cycle(3)); 3],
        top: Perm::long_cycle(3),
    };
    let chi = CompiledCharacter::new(&g, &labels[1])?;
    println!("{} at ((012),(012),(012); (012)) = {}", labels[1], chi.value(&g, &x));
    Ok(())
}
