//! Deterministic test corpus: posets, triples, maps and squares used by the
//! test suites, the acceptance report and the examples.

use crate::constructions::*;
use crate::cylinder::{self, JoinTriple, SfsSquare};
use crate::poset::RankedPoset;
use crate::subdivision::{self, PosetMap};

pub type Named<T> = (String, T);

fn named<T>(name: impl Into<String>, v: T) -> Named<T> {
    (name.into(), v)
}

/// Boolean algebras `B_1..B_5`, polygons with 3 to 8 sides, cubes and
/// cross-polytopes of dimension 2 and 3.
pub fn base_polytopes() -> Vec<Named<RankedPoset>> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push(named(format!("B{n}"), boolean_algebra(n)));
    }
    for m in 3..=8 {
        out.push(named(format!("polygon{m}"), face_lattice_polygon(m).unwrap()));
    }
    for d in 2..=3 {
        out.push(named(format!("cube{d}"), face_lattice_cube(d).unwrap()));
        out.push(named(format!("cross{d}"), face_lattice_crosspolytope(d).unwrap()));
    }
    out
}

/// Near-Eulerian posets: subdivided intervals, pyramids over boundaries and
/// boundaries with one facet removed.
pub fn near_eulerian_posets() -> Vec<Named<RankedPoset>> {
    let mut out = Vec::new();
    for s in 0..=4 {
        out.push(named(format!("interval{s}"), subdivided_interval(s)));
    }
    for (name, b) in base_polytopes().into_iter().filter(|(_, b)| b.rank_length() <= 4) {
        out.push(named(format!("pyr_boundary_{name}"), pyramid(&b.boundary().unwrap())));
        if b.rank_length() >= 2 {
            out.push(named(format!("{name}_minus_facet"), minus_facet(&b)));
        }
    }
    out
}

/// `∂B` with its first coatom removed.
fn minus_facet(b: &RankedPoset) -> RankedPoset {
    let top = b.poset.top().unwrap();
    let coatom = b.poset.lower_covers(top).next().unwrap();
    let keep: Vec<usize> = b.poset.elements().filter(|&z| z != top && z != coatom).collect();
    b.induced(&keep)
}

/// Base polytopes, their pyramids, prisms and bipyramids, star products of
/// small ones and semisuspensions of the near-Eulerian corpus.
pub fn eulerian_posets() -> Vec<Named<RankedPoset>> {
    let base = base_polytopes();
    let mut out = base.clone();
    for (name, b) in &base {
        out.push(named(format!("pyr_{name}"), pyramid(b)));
        out.push(named(format!("prism_{name}"), prism(b).unwrap()));
        out.push(named(format!("bipyr_{name}"), bipyramid(b).unwrap()));
    }
    let small: Vec<&Named<RankedPoset>> = base.iter().filter(|(_, b)| b.rank_length() <= 3).take(4).collect();
    for (n1, a) in &small {
        for (n2, b) in &small {
            out.push(named(format!("star_{n1}_{n2}"), star_product(a, b).unwrap()));
        }
    }
    for (name, x) in near_eulerian_posets() {
        out.push(named(format!("susp_{name}"), semisuspension(&x).unwrap().0));
    }
    out
}

/// Eulerian corpus posets of rank at most `r`.
pub fn eulerian_posets_up_to_rank(r: usize) -> Vec<Named<RankedPoset>> {
    eulerian_posets().into_iter().filter(|(_, b)| b.rank_length() <= r).collect()
}

/// Every non-minimal join-admissible element of each poset.
pub fn triples_of(posets: &[Named<RankedPoset>]) -> Vec<Named<JoinTriple>> {
    let mut out = Vec::new();
    for (name, g) in posets {
        let bottom = g.poset.bottom();
        for q in g.poset.join_admissible_elements() {
            if Some(q) != bottom {
                let t = JoinTriple::new(g.clone(), q).unwrap();
                out.push(named(format!("{name}@{}", g.poset.label(q)), t));
            }
        }
    }
    out
}

/// Triples over the Eulerian and near-Eulerian corpus.
pub fn triples() -> Vec<Named<JoinTriple>> {
    let mut posets = eulerian_posets();
    posets.extend(near_eulerian_posets());
    triples_of(&posets)
}

/// `∂P_{m+1} → ∂P_m`, merging the last two edges of the `(m+1)`-gon.
pub fn polygon_edge_merge(m: usize) -> PosetMap {
    let big = face_lattice_polygon(m + 1).unwrap().boundary().unwrap();
    let small = face_lattice_polygon(m).unwrap().boundary().unwrap();
    let image = |l: &str| -> String {
        let last_v = format!("v{}", m + 1);
        let last_e = format!("e{}", m + 1);
        if l == last_v || l == last_e {
            format!("e{m}")
        } else {
            l.to_string()
        }
    };
    let pairs: Vec<(String, String)> = big.poset.labels().iter().map(|l| (l.clone(), image(l))).collect();
    PosetMap::from_label_pairs(big, small, &pairs).unwrap()
}

/// Strong formal subdivisions from the builders and from `MAP` of small
/// triples.
pub fn sfs_maps() -> Vec<Named<PosetMap>> {
    let mut out = Vec::new();
    for (name, b) in base_polytopes().into_iter().filter(|(_, b)| b.rank_length() <= 4) {
        out.push(named(format!("id_{name}"), subdivision::identity_sfs(&b)));
        out.push(named(format!("id_boundary_{name}"), subdivision::identity_sfs(&b.boundary().unwrap())));
        out.push(named(format!("to_b0_{name}"), subdivision::to_b0(&b).unwrap()));
        out.push(named(format!("bipyr_sfs_{name}"), subdivision::bipyramid_sfs(&b).unwrap()));
    }
    for (name, x) in near_eulerian_posets() {
        out.push(named(format!("to_b1_{name}"), subdivision::to_b1(&x).unwrap()));
    }
    for m in 3..=7 {
        out.push(named(format!("edge_merge_{m}"), polygon_edge_merge(m)));
    }
    let b2 = boolean_algebra(2);
    let b3 = boolean_algebra(3);
    let merge = polygon_edge_merge(3);
    out.push(named("star_B3_edge_merge", subdivision::star_lift(&b3, &merge).unwrap()));
    out.push(named("dual_diamond_B2_to_b1", subdivision::dual_diamond_lift(&b2, &subdivision::to_b1(&b2).unwrap()).unwrap()));
    let id_b1 = subdivision::identity_sfs(&boolean_algebra(1));
    out.push(named("product_id_B1_to_b0_B2", subdivision::product_sfs(&id_b1, &subdivision::to_b0(&b2).unwrap()).unwrap()));
    for (name, t) in triples().into_iter().filter(|(_, t)| t.gamma.len() <= 32) {
        out.push(named(format!("map_{name}"), cylinder::map(&t).unwrap()));
    }
    out
}

/// Changes one image value of `m` so that the map stays order-preserving
/// and rank-increasing, if possible.
pub fn corrupt(m: &PosetMap) -> Option<PosetMap> {
    let mut image = m.image().to_vec();
    for x in m.source.poset.elements().rev() {
        let orig = image[x];
        for y in m.target.poset.elements().filter(|&y| y != orig) {
            image[x] = y;
            if let Ok(c) = PosetMap::new(m.source.clone(), m.target.clone(), image.clone()) {
                if c.is_order_preserving() && c.is_rank_increasing() {
                    return Some(c);
                }
            }
        }
        image[x] = orig;
    }
    None
}

/// Candidate maps for comparing the three characterizations: corpus sfs
/// maps, their corruptions, target rank shifts and the boundary non-example.
pub fn candidate_maps() -> Vec<Named<PosetMap>> {
    let sfs: Vec<Named<PosetMap>> = sfs_maps().into_iter().filter(|(_, m)| m.source.len() <= 40).collect();
    let mut out = sfs.clone();
    for (name, m) in &sfs {
        if let Some(c) = corrupt(m) {
            out.push(named(format!("corrupt_{name}"), c));
        }
    }
    for (name, m) in sfs.iter().take(30) {
        let shifted = PosetMap::new(m.source.clone(), m.target.shifted(1), m.image().to_vec()).unwrap();
        out.push(named(format!("shift_{name}"), shifted));
    }
    out.push(named("boundary_nonexample", subdivision::boundary_nonexample()));
    out
}

fn id_square(name: &str, m: &PosetMap) -> Option<Named<SfsSquare>> {
    let ix = subdivision::identity_sfs(&m.source);
    let iy = subdivision::identity_sfs(&m.target);
    SfsSquare::new(ix, m.clone(), m.clone(), iy).ok().map(|s| named(format!("identity_{name}"), s))
}

/// `φ_i = X, Y → B_0` around `σ`, for `X̄` and `Ȳ` Eulerian.
pub fn b0_square(m: &PosetMap) -> Option<SfsSquare> {
    let phi1 = subdivision::collapse_to_b0(&m.source).ok()?;
    let phi2 = subdivision::collapse_to_b0(&m.target).ok()?;
    let bottom = subdivision::identity_sfs(&phi1.target);
    SfsSquare::new(phi1, m.clone(), bottom, phi2).ok()
}

/// `φ_i = X, Y → B_1` around `σ`, for `X` and `Y` near-Eulerian.
pub fn b1_square(m: &PosetMap) -> Option<SfsSquare> {
    let phi1 = subdivision::to_b1(&m.source).ok()?;
    let phi2 = subdivision::to_b1(&m.target).ok()?;
    let bottom = subdivision::identity_sfs(&phi1.target);
    SfsSquare::new(phi1, m.clone(), bottom, phi2).ok()
}

/// The square with corners `X × X'`, `Y × X'`, `X × Y'`, `Y × Y'`.
pub fn product_square(s: &PosetMap, t: &PosetMap) -> Option<SfsSquare> {
    let id = subdivision::identity_sfs;
    let sigma = subdivision::product_sfs(s, &id(&t.source)).ok()?;
    let phi1 = subdivision::product_sfs(&id(&s.source), t).ok()?;
    let sigma_prime = subdivision::product_sfs(s, &id(&t.target)).ok()?;
    let phi2 = subdivision::product_sfs(&id(&s.target), t).ok()?;
    SfsSquare::new(phi1, sigma, sigma_prime, phi2).ok()
}

/// Identity, `B_0`-, `B_1`- and product squares, with their involutions.
pub fn squares() -> Vec<Named<SfsSquare>> {
    let maps: Vec<Named<PosetMap>> = sfs_maps().into_iter().filter(|(_, m)| m.source.len() <= 16).collect();
    let mut out = Vec::new();
    for (name, m) in &maps {
        out.extend(id_square(name, m));
        if let Some(s) = b0_square(m) {
            out.push(named(format!("b0_{name}"), s));
        }
        if let Some(s) = b1_square(m) {
            out.push(named(format!("b1_{name}"), s));
        }
    }
    let factors: Vec<&Named<PosetMap>> = maps.iter().filter(|(_, m)| m.source.len() <= 6).take(8).collect();
    for (n1, s) in &factors {
        for (n2, t) in factors.iter().take(4) {
            if let Some(sq) = product_square(s, t) {
                out.push(named(format!("product_{n1}_{n2}"), sq));
            }
        }
    }
    let inv: Vec<Named<SfsSquare>> = out
        .iter()
        .filter_map(|(n, s)| {
            let i = s.involution();
            i.validate().ok().map(|_| named(format!("involution_{n}"), i))
        })
        .collect();
    out.extend(inv);
    out
}

/// Lower Eulerian posets that are not near-Eulerian or lack triples.
pub fn lower_eulerian_extras() -> Vec<Named<RankedPoset>> {
    vec![
        named("square_minus_edge", square_minus_edge_and_top()),
        named("fan_B3", fan_over_boundary(&boolean_algebra(3)).unwrap()),
        named("fan_cube3", fan_over_boundary(&face_lattice_cube(3).unwrap()).unwrap()),
    ]
}
