// Class functions on a coset `H a` of a wreath product: the canonical
// extensions form an orthonormal basis, and functions round-trip through
// JSON.

use wreathchar::cosetfun::{coset_inner, CosetClassFunction, WreathCoset};
use wreathchar::permwreath::{GroupDescriptor, Perm, WreathSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WreathSpec::new(GroupDescriptor::Sym(2), 2, vec![Perm::long_cycle(2)]);
    let coset = WreathCoset::new(&w, &Perm::long_cycle(2))?;
    println!("H a with |H| = {}, {} phi-classes", coset.ctx.group().order(), coset.ctx.class_count());

    let basis = coset.extension_basis()?;
    for (chi, f) in &basis {
        let names: Vec<String> = chi.iter().map(|c| c.to_string()).collect();
        let values: Vec<String> = f.class_values().iter().map(|v| v.to_string()).collect();
        println!("({}) x| a : {}", names.join(","), values.join("  "));
    }
    for (i, (_, f)) in basis.iter().enumerate() {
        let row: Vec<String> = basis.iter().map(|(_, g)| coset_inner(f, g).map(|v| v.to_string())).collect::<Result<_, _>>()?;
        println!("gram row {i}: {}", row.join(" "));
    }

    let ctx = wreathchar::cosetfun::CosetContext::from_spec(serde_json::from_value(serde_json::json!({
        "group": {"descriptor": {"sym": 3}},
        "phi": "identity"
    }))?)?;
    let f = CosetClassFunction::from_fn(&ctx, |g| wreathchar::cyclotomic::CycloNum::from_integer(g.cycles().len() as i64));
    let json = f.to_json()?;
    println!("{}", serde_json::to_string(&json)?);
    let back = CosetClassFunction::from_json(&json)?;
    println!("round trip equal: {}", back.class_values() == f.class_values());
    Ok(())
}
