// Build a poset from its covers, rank it and test the Eulerian family.
use eulerian::{Poset, RankedPoset};

fn main() {
    // Face poset of a 2-gon: Eulerian of rank 2.
    let labels = ["0", "a", "b", "1"];
    let covers = [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")];
    let p = RankedPoset::natural(Poset::from_covers(&labels, &covers).unwrap()).unwrap();
    println!("eulerian={} lattice={}", p.is_eulerian(), p.poset.is_lattice());

    // Drop the top: still lower Eulerian.
    let lower = p.induced(&[0, 1, 2]);
    println!("lower eulerian={} eulerian={}", lower.is_lower_eulerian(), lower.is_eulerian());

    // A chain of length 2 is not: [0, 1] has two even ranks and one odd.
    let chain = RankedPoset::natural(Poset::from_covers(&["0", "m", "1"], &[("0", "m"), ("m", "1")]).unwrap()).unwrap();
    println!("chain eulerian={}", chain.is_eulerian());
    if let Some((z, w, sum)) = eulerian::poset::first_non_eulerian_interval(&chain.poset, &chain.rank) {
        println!("  [{}, {}] has signed count {sum}", chain.poset.label(z), chain.poset.label(w));
    }

    // Every element of the 2-gon is join-admissible.
    let ja: Vec<&str> = p.poset.join_admissible_elements().into_iter().map(|i| p.poset.label(i)).collect();
    println!("join-admissible: {ja:?}");
}
