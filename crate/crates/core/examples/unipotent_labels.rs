// Unipotent labels `eta * xi` of a wreath product of general linear
// groups, their signs and degrees, compared with the irreducible
// characters of the Weyl-group model.

use wreathchar::groupspec::{analyze, weyl_group_with_top, GroupSpec};
use wreathchar::permwreath::DEFAULT_CAP;
use wreathchar::unipotent::unipotent_labels;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        r#"{"factors":[{"n":2,"d":2,"A_gens":[[1,0]],"sigma":[0,1]}]}"#,
        r#"{"factors":[{"n":2,"d":3,"A_gens":[[1,0,2],[1,2,0]],"sigma":[0,1,2],"twist":1}]}"#,
    ] {
        let s = analyze(&GroupSpec::from_json(text)?)?;
        let labels = unipotent_labels(&s)?;
        println!("{text}");
        for l in &labels {
            println!("  {:<16} {:<8} {:>3}  {}", l.eta.to_string(), l.xi.to_string(), l.sign, l.degree);
        }
        let classes = weyl_group_with_top(&s).finite_group(DEFAULT_CAP)?.conjugacy_classes().len();
        println!("  {} labels, {classes} classes of W°F x| A^F", labels.len());
    }
    Ok(())
}
