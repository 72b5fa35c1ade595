use eulerian::cd::{cd_index, derivation_d, flag_vector};
use eulerian::constructions::*;
use eulerian::NCPoly;

fn main() {
    for n in 1..=6 {
        println!("B{n}: {}", cd_index(&boolean_algebra(n)).unwrap());
    }
    // B1..B6 as above; then the cube and its flag f-vector.
    let cube = face_lattice_cube(3).unwrap();
    let f: Vec<String> = flag_vector(&cube).unwrap().iter().map(|x| x.to_string()).collect();
    println!("cube flag f-vector: {}", f.join(" "));
    println!("cube: {}", cd_index(&cube).unwrap());

    // Prism(P) = Φ(P)c + D(Φ(P)).
    let pent = face_lattice_polygon(5).unwrap();
    let phi = cd_index(&pent).unwrap();
    let predicted = &(&phi * &NCPoly::c()) + &derivation_d(&phi);
    println!("prism over pentagon: {} (predicted {predicted})", cd_index(&prism(&pent).unwrap()).unwrap());
}
