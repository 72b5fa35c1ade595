// CYL turns an sfs into a poset with a join-admissible element; MAP undoes it.
use eulerian::constructions::*;
use eulerian::cylinder::{cyl, map, tag_map, JoinTriple};

fn main() {
    let pent = face_lattice_polygon(5).unwrap();
    let t = JoinTriple::with_label(pent, "v1").unwrap();
    let sigma = map(&t).unwrap();
    println!("MAP(pentagon, v1): {} -> {}", sigma.source.len(), sigma.target.len());
    for (x, y) in sigma.label_pairs() {
        println!("  {x} -> {y}");
    }

    let back = cyl(&sigma).unwrap();
    println!("CYL gives {} elements, q = {}", back.gamma.len(), back.q_label());
    println!("MAP(CYL(sigma)) = sigma up to tags: {}", map(&back).unwrap() == tag_map(&sigma));
    println!("same shape as the pentagon: {}", back.gamma.poset.is_isomorphic(&t.gamma.poset));
}
