// Reading a GroupSpec, splitting sigma into orbits (linear or unitary),
// the fixed top group A^F and the order polynomial.

use wreathchar::groupspec::{analyze, levi_normalizer, order_polynomial, GroupSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        r#"{"factors":[{"n":3,"d":1,"sigma":[0],"twist":1}]}"#,
        r#"{"factors":[{"n":2,"d":3,"A_gens":[[1,2,0]],"sigma":[1,2,0],"twist":1}]}"#,
        r#"{"factors":[{"n":2,"d":4,"A_gens":[[2,3,0,1]],"sigma":[1,0,3,2]},{"n":1,"d":1,"sigma":[0]}]}"#,
    ];
    for text in specs {
        let s = analyze(&GroupSpec::from_json(text)?)?;
        let orbits: Vec<String> = s.orbits.iter().map(|o| o.to_string()).collect();
        println!("{text}");
        println!("  orbits {}  |A^F| = {}", orbits.join(" x "), s.af.order());
        println!("  order  {}", order_polynomial(&s));
        println!("  at q=2 {}", order_polynomial(&s).eval_i64(2));
    }

    let n = levi_normalizer(5, &[1, 1, 1, 2], 0)?;
    println!("normalizer of GL_1^3 x GL_2 in GL_5: {}", serde_json::to_string(&n)?);
    Ok(())
}
