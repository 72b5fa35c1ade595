use eulerian::constructions::*;
use eulerian::homology::*;

fn main() {
    let cube = face_lattice_cube(3).unwrap();
    let (bottom, top) = (cube.poset.bottom().unwrap(), cube.poset.top().unwrap());
    let k = open_interval_complex(&cube.poset, bottom, top).unwrap();
    println!("open cube interval: f={:?} betti={:?}", k.f_vector(), reduced_betti(&k));
    println!("cube Gorenstein*: {}", is_gorenstein_star(&cube));
    println!("subdivided interval near-Gorenstein*: {}", is_near_gorenstein_star(&subdivided_interval(3)));
    println!("chain Gorenstein*: {}", is_gorenstein_star(&chain(3)));

    let p = square_minus_edge_and_top();
    let ja: Vec<&str> = p.poset.join_admissible_elements().iter().map(|&i| p.poset.label(i)).collect();
    println!("square minus edge and top: join-admissible {ja:?}");
}
