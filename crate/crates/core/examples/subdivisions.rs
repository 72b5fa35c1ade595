// Strong formal subdivisions and the three ways of checking them.
use eulerian::constructions::*;
use eulerian::subdivision::{self, sfs_violation, SfsMethod};

fn main() {
    let b3 = boolean_algebra(3);
    let maps = [
        ("identity", subdivision::identity_sfs(&b3)),
        ("to B0", subdivision::to_b0(&b3).unwrap()),
        ("bipyramid", subdivision::bipyramid_sfs(&b3).unwrap()),
        ("boundary non-example", subdivision::boundary_nonexample()),
    ];
    for (name, m) in &maps {
        print!("{name:22}");
        for k in SfsMethod::ALL {
            match sfs_violation(m, k).unwrap() {
                None => print!(" {k:?}=ok"),
                Some(v) => print!(" {k:?}=[{}]", m.describe(&v)),
            }
        }
        println!();
    }
    let m = &maps[2].1;
    println!("rank of bipyramid sfs: {}", m.sfs_rank().unwrap());
}
