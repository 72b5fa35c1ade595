use eulerian::constructions::*;

fn main() {
    let b3 = boolean_algebra(3);
    let pent = face_lattice_polygon(5).unwrap();
    let shapes = [
        ("B3", b3.clone()),
        ("pentagon", pent.clone()),
        ("cube", face_lattice_cube(3).unwrap()),
        ("octahedron", face_lattice_crosspolytope(3).unwrap()),
        ("Pyr(pentagon)", pyramid(&pent)),
        ("Prism(pentagon)", prism(&pent).unwrap()),
        ("Bipyr(pentagon)", bipyramid(&pent).unwrap()),
        ("B3 * pentagon", star_product(&b3, &pent).unwrap()),
        ("B3 x B1", direct_product(&b3, &boolean_algebra(1))),
    ];
    for (name, b) in &shapes {
        println!("{name:16} size={:3} rank={} eulerian={}", b.len(), b.rank_length(), b.is_eulerian());
    }

    // Prism and bipyramid are dual operations.
    let lhs = dual(&prism(&pent).unwrap()).unwrap();
    let rhs = bipyramid(&dual(&pent).unwrap()).unwrap();
    println!("Prism(P)* ~ Bipyr(P*): {}", lhs.poset.is_isomorphic(&rhs.poset));
}
