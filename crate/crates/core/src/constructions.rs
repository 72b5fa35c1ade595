//! Poset constructions and the face lattices of a few polytope families.
//!
//! Everything here is built from poset identities; no convex geometry is
//! involved. Every constructor returns a [`RankedPoset`].

use crate::poset::{self, Poset, PosetError, RankFunction, RankedPoset};

/// `B_n`: subsets of `{1..n}` ordered by inclusion, ranked by cardinality.
/// Labels look like `{}`, `{1}`, `{1,3}`.
pub fn boolean_algebra(n: usize) -> RankedPoset {
    assert!(n < 20, "boolean_algebra is meant for small n");
    let size = 1usize << n;
    let labels: Vec<String> = (0..size).map(|m| subset_label(m, n)).collect();
    let p = Poset::from_strict_order(labels, |a, b| a != b && a & b == a).expect("subset order");
    let rank = RankFunction::new((0..size).map(|m| m.count_ones() as i64).collect());
    RankedPoset { poset: p, rank }
}

fn subset_label(mask: usize, n: usize) -> String {
    let parts: Vec<String> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// A `k`-element chain `0 < 1 < … < k-1`, naturally ranked.
pub fn chain(k: usize) -> RankedPoset {
    assert!(k > 0);
    let labels = (0..k).map(|i| i.to_string()).collect();
    let p = Poset::from_strict_order(labels, |a, b| a < b).unwrap();
    RankedPoset {
        poset: p,
        rank: RankFunction::new((0..k as i64).collect()),
    }
}

/// Componentwise order, ranks add. Labels are `(l,l')`; element `(i, j)`
/// sits at index `i * |B'| + j`.
pub fn direct_product(a: &RankedPoset, b: &RankedPoset) -> RankedPoset {
    let (n, m) = (a.len(), b.len());
    let mut labels = Vec::with_capacity(n * m);
    let mut ranks = Vec::with_capacity(n * m);
    for i in 0..n {
        for j in 0..m {
            labels.push(format!("({},{})", a.poset.label(i), b.poset.label(j)));
            ranks.push(a.rank_of(i) + b.rank_of(j));
        }
    }
    let p = Poset::from_strict_order(labels, |x, y| {
        let (i1, j1) = (x / m, x % m);
        let (i2, j2) = (y / m, y % m);
        x != y && a.poset.le(i1, i2) && b.poset.le(j1, j2)
    })
    .expect("product of posets");
    RankedPoset {
        poset: p,
        rank: RankFunction::new(ranks),
    }
}

/// `Pyr(B) = B × B_1`.
pub fn pyramid(a: &RankedPoset) -> RankedPoset {
    direct_product(a, &boolean_algebra(1))
}

fn require_eulerian_positive(a: &RankedPoset) -> Result<(), PosetError> {
    if a.is_eulerian_positive_rank() {
        Ok(())
    } else {
        Err(PosetError::NotEulerianPositiveRank)
    }
}

/// `B ⋄* B'`: the Eulerian poset whose boundary is `∂B × ∂B'`.
pub fn dual_diamond_product(a: &RankedPoset, b: &RankedPoset) -> Result<RankedPoset, PosetError> {
    require_eulerian_positive(a)?;
    require_eulerian_positive(b)?;
    let prod = direct_product(&a.boundary()?, &b.boundary()?);
    prod.adjoin_max()
}

/// `B ⋄ B'`: the Eulerian poset with `(B ⋄ B') ∖ 0̂ = (B ∖ 0̂) × (B' ∖ 0̂)`.
/// The rank restricts to the product rank away from the new bottom.
pub fn diamond_product(a: &RankedPoset, b: &RankedPoset) -> Result<RankedPoset, PosetError> {
    require_eulerian_positive(a)?;
    require_eulerian_positive(b)?;
    let strip = |x: &RankedPoset| {
        let bottom = x.poset.bottom().unwrap();
        let rest: Vec<usize> = x.poset.elements().filter(|&i| i != bottom).collect();
        x.induced(&rest)
    };
    let prod = direct_product(&strip(a), &strip(b));
    let (p, _) = prod.poset.adjoin_min("0hat");
    let atom_rank = prod.rank.values().iter().copied().min().unwrap();
    let mut ranks = vec![atom_rank - 1];
    ranks.extend_from_slice(prod.rank.values());
    RankedPoset::new(p, RankFunction::new(ranks))
}

/// `Prism(B) = B ⋄ B_2`.
pub fn prism(a: &RankedPoset) -> Result<RankedPoset, PosetError> {
    diamond_product(a, &boolean_algebra(2))
}

/// `Bipyr(B) = B ⋄* B_2`.
pub fn bipyramid(a: &RankedPoset) -> Result<RankedPoset, PosetError> {
    dual_diamond_product(a, &boolean_algebra(2))
}

/// `B ∗ B'`: `∂B` (labels `L:…`) glued below `B' ∖ 0̂` (labels `R:…`).
///
/// The rank on the right-hand part is shifted so that atoms of `B'` sit one
/// above the coatoms of `B`; with natural rank functions this is the shift by
/// `rank(B) - 1`.
pub fn star_product(a: &RankedPoset, b: &RankedPoset) -> Result<RankedPoset, PosetError> {
    require_eulerian_positive(a)?;
    if !b.is_lower_eulerian() {
        return Err(PosetError::Precondition("right factor of a star product must be lower Eulerian".into()));
    }
    let left = a.boundary()?;
    let top_a = a.rank_of(a.poset.top().unwrap());
    let bottom_b = b.poset.bottom().unwrap();
    let shift = top_a - b.rank_of(bottom_b) - 1;
    let right: Vec<usize> = b.poset.elements().filter(|&i| i != bottom_b).collect();
    let nl = left.len();
    let mut labels: Vec<String> = left.poset.labels().iter().map(|l| format!("L:{l}")).collect();
    labels.extend(right.iter().map(|&i| format!("R:{}", b.poset.label(i))));
    let mut ranks = left.rank.values().to_vec();
    ranks.extend(right.iter().map(|&i| b.rank_of(i) + shift));
    let p = Poset::from_strict_order(labels, |x, y| match (x < nl, y < nl) {
        (true, true) => left.poset.lt(x, y),
        (true, false) => true,
        (false, true) => false,
        (false, false) => b.poset.lt(right[x - nl], right[y - nl]),
    })?;
    RankedPoset::new(p, RankFunction::new(ranks))
}

/// Face lattice of an `m`-gon: `{}`, vertices `v1..vm`, edges `e1..em` with
/// `e_i ⊃ {v_i, v_{i+1}}`, and `1hat`.
pub fn face_lattice_polygon(m: usize) -> Result<RankedPoset, PosetError> {
    if m < 3 {
        return Err(PosetError::Precondition(format!("a polygon needs at least 3 vertices, got {m}")));
    }
    let mut labels = vec!["{}".to_string()];
    let mut covers = Vec::new();
    for i in 1..=m {
        labels.push(format!("v{i}"));
        covers.push(("{}".to_string(), format!("v{i}")));
    }
    for i in 1..=m {
        let next = i % m + 1;
        labels.push(format!("e{i}"));
        covers.push((format!("v{i}"), format!("e{i}")));
        covers.push((format!("v{next}"), format!("e{i}")));
        covers.push((format!("e{i}"), "1hat".to_string()));
    }
    labels.push("1hat".to_string());
    RankedPoset::natural(Poset::from_covers(&labels, &covers)?)
}

/// Face poset of `[0,1]` cut at `s` interior points: `{}`, vertices
/// `v0..v{s+1}`, edges `e0..e{s}` with `e_i ⊃ {v_i, v_{i+1}}`.
pub fn subdivided_interval(s: usize) -> RankedPoset {
    let mut labels = vec!["{}".to_string()];
    let mut covers = Vec::new();
    for i in 0..s + 2 {
        labels.push(format!("v{i}"));
        covers.push(("{}".to_string(), format!("v{i}")));
    }
    for i in 0..s + 1 {
        labels.push(format!("e{i}"));
        covers.push((format!("v{i}"), format!("e{i}")));
        covers.push((format!("v{}", i + 1), format!("e{i}")));
    }
    RankedPoset::natural(Poset::from_covers(&labels, &covers).unwrap()).unwrap()
}

/// Face lattice of the `d`-cube as the `d`-fold diamond power of `B_2`,
/// with its natural rank.
pub fn face_lattice_cube(d: usize) -> Result<RankedPoset, PosetError> {
    if d == 0 {
        return Err(PosetError::Precondition("cube dimension must be positive".into()));
    }
    let seg = boolean_algebra(2);
    let mut acc = seg.clone();
    for _ in 1..d {
        acc = diamond_product(&acc, &seg)?;
    }
    acc.with_natural_rank()
}

/// Face lattice of the `d`-dimensional cross-polytope: the `d`-fold dual
/// diamond power of `B_2`.
pub fn face_lattice_crosspolytope(d: usize) -> Result<RankedPoset, PosetError> {
    if d == 0 {
        return Err(PosetError::Precondition("cross-polytope dimension must be positive".into()));
    }
    let seg = boolean_algebra(2);
    let mut acc = seg.clone();
    for _ in 1..d {
        acc = dual_diamond_product(&acc, &seg)?;
    }
    acc.with_natural_rank()
}

/// Face poset of the complete fan over the boundary of a polytope with face
/// lattice `B`, i.e. `∂B` with the restricted rank.
pub fn fan_over_boundary(a: &RankedPoset) -> Result<RankedPoset, PosetError> {
    a.boundary()
}

/// `Σ̃B` and the index of `ẑ`.
pub fn semisuspension(a: &RankedPoset) -> Result<(RankedPoset, usize), PosetError> {
    poset::semisuspension(&a.poset, &a.rank)
}

/// Dual poset with its natural rank.
pub fn dual(a: &RankedPoset) -> Result<RankedPoset, PosetError> {
    a.dual()
}

/// The face lattice of a square with one edge and the top removed. It is
/// lower Eulerian and every non-minimal element fails to be join-admissible.
pub fn square_minus_edge_and_top() -> RankedPoset {
    let sq = face_lattice_polygon(4).unwrap();
    let keep: Vec<usize> = sq
        .poset
        .elements()
        .filter(|&i| !matches!(sq.poset.label(i), "e1" | "1hat"))
        .collect();
    sq.induced(&keep)
}
