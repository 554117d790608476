// Character tables of symmetric groups by Murnaghan-Nakayama, and the
// Kostka matrix of a small n with its determinant.

use wreathchar::partitions::{bareiss_determinant, character_table, enumerate_partitions, kostka_matrix};

fn main() {
    let n = 4;
    let t = character_table(n);
    print!("{:>10}", "");
    for mu in &t.partitions {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for (lambda, row) in t.partitions.iter().zip(&t.values) {
        print!("{:>10}", lambda.to_string());
        for v in row {
            print!("{v:>10}");
        }
        println!();
    }
    println!("centralizers: {:?}", t.centralizers.iter().map(|c| c.to_string()).collect::<Vec<_>>());

    let k = kostka_matrix(n);
    println!("\nKostka matrix, rows and columns {:?}", enumerate_partitions(n).iter().map(|p| p.to_string()).collect::<Vec<_>>());
    for row in &k {
        println!("  {row:?}");
    }
    println!("det = {}", bareiss_determinant(&k));
}
