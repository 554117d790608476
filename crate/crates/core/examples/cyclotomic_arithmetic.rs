// Exact arithmetic in cyclotomic fields: roots of unity, canonical forms,
// conductor reduction and the `N:[e=p/q, ...]` text format.

use wreathchar::cyclotomic::CycloNum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = CycloNum::root_of_unity(1, 3)?;
    let w2 = w.pow(2)?;
    println!("zeta_3            = {w}");
    println!("zeta_3 + zeta_3^2 = {}", &w + &w2);

    // sqrt(-3) = zeta_3 - zeta_3^2 squares to -3
    let s = &w - &w2;
    println!("(z3 - z3^2)^2     = {}", s.pow(2)?);

    // i lives in Q(zeta_4); the sum below is normalized back to it
    let i = CycloNum::root_of_unity(1, 4)?;
    let z12 = CycloNum::root_of_unity(1, 12)?;
    let i_again = z12.pow(3)?;
    println!("zeta_12^3 == i    : {}", i_again == i);

    let x: CycloNum = "5:[1=1/2, 4=1/2]".parse()?;
    println!("parsed            = {x}");
    println!("conjugate         = {}", x.conjugate());
    println!("x * x^-1          = {}", &x * &x.inverse()?);
    println!("algebraic integer : {}", x.is_algebraic_integer());
    Ok(())
}
