// Generic degrees of unipotent characters of GL_n and GU_n, the hook
// formula against the Deligne-Lusztig class sum, and unitary signs.

use wreathchar::partitions::{degree_via_class_sum, enumerate_partitions, generic_degree_gl, unitary_sign_and_degree, GroupType};

fn main() {
    let n = 4;
    println!("{:<10} {:<40} {:>4} {:<40}", "lambda", "GL_4 degree", "eps", "GU_4 degree");
    for lambda in enumerate_partitions(n) {
        let gl = generic_degree_gl(&lambda);
        let (eps, gu) = unitary_sign_and_degree(&lambda);
        assert_eq!(gl, degree_via_class_sum(&lambda, GroupType::Linear));
        assert_eq!(gu, degree_via_class_sum(&lambda, GroupType::Unitary));
        println!("{:<10} {:<40} {:>4} {:<40}", lambda.to_string(), gl.to_string(), eps, gu.to_string());
    }
    let lambda = "[2,1,1]".parse().expect("partition");
    println!("\nat q = 3: GL_4 -> {}, GU_4 -> {}", generic_degree_gl(&lambda).eval_i64(3), unitary_sign_and_degree(&lambda).1.eval_i64(3));
}
