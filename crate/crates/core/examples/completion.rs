//! Completion of a presentation and normal forms.

use quantum_permutations::ncalg::NCPoly;
use quantum_permutations::rewrite::parse_presentation;

const TEXT: &str = "
# two idempotents
generators: p q
p.p - p
q.q - q
";

fn main() {
    let file = parse_presentation(TEXT).unwrap();
    let result = file.system().unwrap().complete(8).unwrap();
    let sys = &result.system;
    println!("status: {}, rules: {}", result.status, sys.rules().len());
    let a = sys.alphabet();
    let w = NCPoly::parse(a, "p.p.q.q.p - p.q.p").unwrap();
    println!("normal form of p.p.q.q.p - p.q.p: {}", sys.normal_form(&w));
    let c = NCPoly::parse(a, "p.q - q.p").unwrap();
    println!("p.q - q.p reduces to zero: {}", sys.reduces_to_zero(&c));
    println!("filtration dimensions: {:?}", sys.filtration_dimension(6).unwrap());
}
