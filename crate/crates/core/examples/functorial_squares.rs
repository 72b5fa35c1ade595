use eulerian::corpus;
use eulerian::cylinder::{cyl, cyl_square, involution_preserves_cylinder, map_square};

fn main() {
    let squares = corpus::squares();
    let (name, sq) = squares.iter().find(|(n, _)| n.starts_with("b1_")).unwrap();
    println!("square {name}");
    let phi = cyl_square(sq).unwrap();
    println!("  Cyl(phi): {} -> {} elements", phi.source.len(), phi.target.len());
    let back = map_square(&phi, &cyl(&sq.sigma).unwrap(), &cyl(&sq.sigma_prime).unwrap()).unwrap();
    println!("  map_square(cyl_square) = square: {}", back == sq.tagged());
    println!("  involution keeps the cylinder: {}", involution_preserves_cylinder(sq).unwrap());

    let ok = squares.iter().filter(|(_, s)| {
        let phi = cyl_square(s).unwrap();
        map_square(&phi, &cyl(&s.sigma).unwrap(), &cyl(&s.sigma_prime).unwrap()).unwrap() == s.tagged()
    });
    println!("{} of {} corpus squares round trip", ok.count(), squares.len());
}
