//! Noncommutative polynomials, substitution and the tensor-square encoding.

use quantum_permutations::ncalg::{Alphabet, Direction, NCPoly, TensorEncoding};

fn main() {
    let a = Alphabet::new(["x", "y"]).unwrap();
    let p = NCPoly::parse(&a, "x.y - y.x + 2").unwrap();
    println!("p = {p}");
    println!("p^2 = {}", p.pow(2));

    let images = [NCPoly::parse(&a, "y").unwrap(), NCPoly::parse(&a, "x + 1").unwrap()];
    println!("x -> y, y -> x + 1: {}", p.substitute(&images, Direction::Homomorphism).unwrap());
    println!("as antihomomorphism: {}", p.substitute(&images, Direction::Antihomomorphism).unwrap());

    let enc = TensorEncoding::new(&a, 2);
    let t = enc.pure_tensor(&[p.clone(), NCPoly::parse(&a, "x").unwrap()]);
    println!("p (x) x = {t}");
}
