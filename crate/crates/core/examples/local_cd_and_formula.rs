use eulerian::cd::{cd_formula_terms, cd_index, local_cd_index};
use eulerian::constructions::*;
use eulerian::cylinder::JoinTriple;

fn main() {
    for n in 1..=4 {
        let x = pyramid(&boolean_algebra(n).boundary().unwrap());
        println!("local cd of Pyr(dB{n}): {}", local_cd_index(&x).unwrap());
    }
    for s in 0..=3 {
        println!("local cd of subdivided interval {s}: {}", local_cd_index(&subdivided_interval(s)).unwrap());
    }

    // The decomposition of Φ(Γ) along a join-admissible q.
    let g = bipyramid(&boolean_algebra(3)).unwrap();
    let t = JoinTriple::with_label(g.clone(), "({},{1})").unwrap();
    let terms = cd_formula_terms(&t).unwrap();
    for (name, p) in terms.summands() {
        println!("  {name}: {p}");
    }
    println!("rhs {} = cd {}", terms.rhs(), cd_index(&g).unwrap());
}
