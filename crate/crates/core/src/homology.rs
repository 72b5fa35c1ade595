//! Order complexes and reduced rational homology, and the Gorenstein*
//! family of predicates built on them.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::linalg::{self, SparseRow};
use crate::poset::{self, IntervalKind, Poset, RankedPoset};

/// A simplicial complex on labelled vertices. Faces are sorted vertex index
/// lists and the set is closed under subsets, including the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertices: Vec<String>,
    faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// The downward closure of the given faces.
    pub fn from_facets(vertices: Vec<String>, facets: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(Vec::new());
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            for mask in 1u64..1 << k {
                faces.insert((0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect());
            }
        }
        SimplicialComplex { vertices, faces }
    }

    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn is_closed(&self) -> bool {
        self.faces.iter().all(|f| {
            (0..f.len()).all(|i| {
                let mut g = f.clone();
                g.remove(i);
                self.faces.contains(&g)
            })
        })
    }

    /// Largest face size minus one, or `-1` for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.faces.iter().map(|f| f.len() as i64).max().unwrap_or(0) - 1
    }

    /// Face counts by dimension, starting at the empty face (dimension −1).
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = vec![0; (self.dimension() + 2) as usize];
        for f in &self.faces {
            out[f.len()] += 1;
        }
        out
    }

    /// `Σ_F (−1)^{dim F}` over all faces including the empty one, which is
    /// the reduced Euler characteristic.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 1 { n as i64 } else { -(n as i64) })
            .sum()
    }
}

/// Chains of `p` restricted to `elems`, as a simplicial complex whose
/// vertices are those elements.
fn chain_complex(p: &Poset, elems: &[usize]) -> SimplicialComplex {
    let vertices = elems.iter().map(|&i| p.label(i).to_string()).collect();
    let mut faces = BTreeSet::new();
    faces.insert(Vec::new());
    // Chains grow upward, so each one is reached exactly once.
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(ch) = frontier.pop() {
        for (k, &e) in elems.iter().enumerate() {
            if ch.last().map_or(true, |&last| p.lt(elems[last], e)) {
                let mut next = ch.clone();
                next.push(k);
                let mut sorted = next.clone();
                sorted.sort_unstable();
                faces.insert(sorted);
                frontier.push(next);
            }
        }
    }
    SimplicialComplex { vertices, faces }
}

/// `O(B)`: vertices are the elements, faces are the chains.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    let elems: Vec<usize> = p.elements().collect();
    chain_complex(p, &elems)
}

/// `O(z, z')`: the order complex of the open interval.
pub fn open_interval_complex(p: &Poset, z: usize, z2: usize) -> Result<SimplicialComplex, poset::PosetError> {
    if !p.lt(z, z2) {
        return Err(poset::PosetError::NotComparable(p.label(z).into(), p.label(z2).into()));
    }
    let elems = p.interval_elements(z, z2, IntervalKind::Open)?;
    Ok(chain_complex(p, &elems))
}

/// `β̃_{-1}, β̃_0, …, β̃_{dim}` over ℚ.
pub fn reduced_betti(k: &SimplicialComplex) -> Vec<usize> {
    let dim = k.dimension();
    let top = (dim + 1) as usize;
    // Faces grouped by size, with column positions.
    let mut by_size: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); top + 1];
    for f in k.faces() {
        by_size[f.len()].push(f);
    }
    let index: Vec<HashMap<&Vec<usize>, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect())
        .collect();
    // ranks[s]: rank of the boundary map from faces of size s to size s - 1.
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let rows: Vec<SparseRow> = by_size[s]
            .iter()
            .map(|f| {
                let mut row = SparseRow::new();
                for i in 0..f.len() {
                    let mut g = (*f).clone();
                    g.remove(i);
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    row.insert(index[s - 1][&g], BigRational::from_integer(BigInt::from(sign)));
                }
                row
            })
            .collect();
        ranks[s] = linalg::rank(rows);
    }
    (0..=top)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

/// `Some((x, x', betti))` for the first interval of rank at least 2 whose
/// open order complex is not a homology sphere of dimension `ρ(x,x') − 2`.
pub fn first_non_sphere_interval(b: &RankedPoset, pairs: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize, Vec<usize>)> {
    for (x, y) in pairs {
        let len = b.rank_of(y) - b.rank_of(x);
        if len < 2 {
            continue;
        }
        let k = open_interval_complex(&b.poset, x, y).expect("x < y");
        let betti = reduced_betti(&k);
        let want = (len - 1) as usize; // index of degree len−2, offset by β̃_{-1}
        let sphere = betti.iter().enumerate().all(|(i, &v)| v == usize::from(i == want)) && betti.len() > want;
        if !sphere {
            return Some((x, y, betti));
        }
    }
    None
}

fn comparable_pairs(p: &Poset) -> impl Iterator<Item = (usize, usize)> + '_ {
    p.elements().flat_map(move |x| p.strictly_above(x).map(move |y| (x, y)))
}

/// Eulerian of positive rank and every open interval of rank at least 2 is a
/// rational homology sphere of the right dimension.
pub fn is_gorenstein_star(b: &RankedPoset) -> bool {
    b.is_eulerian_positive_rank() && first_non_sphere_interval(b, comparable_pairs(&b.poset)).is_none()
}

/// The semisuspension is Gorenstein*.
pub fn is_near_gorenstein_star(b: &RankedPoset) -> bool {
    match poset::semisuspension(&b.poset, &b.rank) {
        Ok((s, _)) => is_gorenstein_star(&s),
        Err(_) => false,
    }
}

/// Unique minimum, and every interval of positive rank is Gorenstein*.
pub fn is_lower_gorenstein_star(b: &RankedPoset) -> bool {
    b.poset.bottom().is_some()
        && b.is_locally_eulerian()
        && first_non_sphere_interval(b, comparable_pairs(&b.poset)).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_point() {
        let empty = SimplicialComplex::from_facets(vec![], vec![]);
        assert_eq!(reduced_betti(&empty), vec![1]);
        let pt = SimplicialComplex::from_facets(vec!["p".into()], vec![vec![0]]);
        assert_eq!(reduced_betti(&pt), vec![0, 0]);
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let k = SimplicialComplex::from_facets(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        );
        assert!(k.is_closed());
        assert_eq!(reduced_betti(&k), vec![0, 0, 1]);
        assert_eq!(k.reduced_euler_characteristic(), -1);
    }
}
