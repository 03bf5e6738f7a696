//! Coactions on K^n: magic generating matrices versus diag(g, g) over K[Z2].

use quantum_permutations::ncalg::NCPoly;
use quantum_permutations::qperm::{coaction_algebra_map_check, group_algebra_z2, magic_presentation, MatrixOverAlgebra};

fn main() {
    let h = magic_presentation(3);
    let sys = h.complete(8).unwrap();
    let u = MatrixOverAlgebra::generating(&h, &sys).unwrap();
    println!("generating matrix, n = 3: {}", coaction_algebra_map_check(&u, &h).verdict);

    let k = group_algebra_z2();
    let ksys = k.complete(4).unwrap();
    let g = NCPoly::generator(k.alphabet(), 0);
    let x = MatrixOverAlgebra::diagonal(&[g.clone(), g], &ksys).unwrap();
    print!("{}", coaction_algebra_map_check(&x, &k));
}
