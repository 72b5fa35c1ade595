use eulerian::constructions::*;
use eulerian::corpus;
use eulerian::poset::{self, natural_rank, shift_rank, Poset, PosetError, RankFunction};
use eulerian::{Direction, IntervalKind, RankedPoset};

fn labels_of(p: &Poset, set: &[usize]) -> Vec<String> {
    let mut out: Vec<String> = set.iter().map(|&i| p.label(i).to_string()).collect();
    out.sort();
    out
}

fn b2_by_hand() -> Poset {
    Poset::from_covers(
        &["∅", "1", "2", "12"],
        &[("∅", "1"), ("∅", "2"), ("1", "12"), ("2", "12")],
    )
    .unwrap()
}

// Cover relation scanned directly from the strict order.
fn covers_oracle(p: &Poset) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in p.elements() {
        for j in p.elements() {
            if p.lt(i, j) && !p.elements().any(|k| p.lt(i, k) && p.lt(k, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

#[test]
fn from_covers_examples() {
    let b2 = b2_by_hand();
    assert_eq!(b2.len(), 4);
    assert!(b2.is_isomorphic(&boolean_algebra(2).poset));
    assert_eq!(b2.covers().len(), 4);

    let b0 = Poset::from_covers::<&str>(&["x"], &[]).unwrap();
    assert_eq!(b0.len(), 1);
    assert!(b0.is_isomorphic(&boolean_algebra(0).poset));

    let cyc = Poset::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]);
    assert!(matches!(cyc, Err(PosetError::Cycle(_))));
    let dup = Poset::from_covers::<&str>(&["a", "a"], &[]);
    assert!(matches!(dup, Err(PosetError::DuplicateLabel(_))));
    let redundant = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
    assert!(matches!(redundant, Err(PosetError::NotACover(_, _))));
    let unknown = Poset::from_covers(&["a"], &[("a", "z")]);
    assert!(matches!(unknown, Err(PosetError::UnknownLabel(_))));
    assert!(matches!(Poset::from_covers::<&str>(&[], &[]), Err(PosetError::Empty)));
}

#[test]
fn order_axioms_and_covers_on_corpus() {
    let mut all = corpus::eulerian_posets();
    all.extend(corpus::near_eulerian_posets());
    for (name, b) in all.iter().filter(|(_, b)| b.len() <= 200) {
        let p = &b.poset;
        for i in p.elements() {
            assert!(!p.lt(i, i), "{name}");
            for j in p.elements() {
                assert!(!(p.lt(i, j) && p.lt(j, i)), "{name}");
                if p.lt(i, j) {
                    for k in p.strictly_above(j) {
                        assert!(p.lt(i, k), "{name}");
                    }
                }
            }
        }
        let mut cov = p.covers().to_vec();
        cov.sort_unstable();
        assert_eq!(cov, covers_oracle(p), "{name}");
        // Rebuilding from covers is the identity.
        let pairs: Vec<(String, String)> =
            cov.iter().map(|&(a, c)| (p.label(a).to_string(), p.label(c).to_string())).collect();
        let again = Poset::from_covers(p.labels(), &pairs).unwrap();
        assert_eq!(&again, p, "{name}");
    }
}

#[test]
fn natural_rank_examples() {
    let b2 = b2_by_hand();
    let r = natural_rank(&b2).unwrap();
    let by_label: Vec<(String, i64)> = b2.elements().map(|i| (b2.label(i).to_string(), r.get(i))).collect();
    assert_eq!(
        by_label,
        vec![("∅".into(), 0), ("1".into(), 1), ("2".into(), 1), ("12".into(), 2)]
    );
    assert_eq!(natural_rank(&boolean_algebra(0).poset).unwrap().values(), &[0]);

    // 0 < a < b < t and 0 < c < t: maximal chains of lengths 3 and 2.
    let bad = Poset::from_covers(
        &["0", "a", "b", "c", "t"],
        &[("0", "a"), ("a", "b"), ("b", "t"), ("0", "c"), ("c", "t")],
    )
    .unwrap();
    // Direct cover-rule scan: no integer assignment fits both chains.
    let chain_lengths: Vec<usize> = bad.maximal_chains().iter().map(|c| c.len()).collect();
    assert!(chain_lengths.contains(&4) && chain_lengths.contains(&3));
    assert!(matches!(natural_rank(&bad), Err(PosetError::NotRanked(_, _))));
    assert!(!bad.is_graded());

    let two_mins = Poset::from_covers(&["a", "b", "t"], &[("a", "t"), ("b", "t")]).unwrap();
    assert!(matches!(natural_rank(&two_mins), Err(PosetError::NoUniqueMinimum)));
}

#[test]
fn shift_rank_examples() {
    let r = RankFunction::new(vec![0, 1, 1, 2]);
    assert_eq!(shift_rank(&r, 3).values(), &[3, 4, 4, 5]);
    assert_eq!(shift_rank(&r, 0), r);
    assert_eq!(shift_rank(&RankFunction::new(vec![0]), -1).values(), &[-1]);
    let bad = RankFunction::new(vec![0, 1, 2, 2]);
    assert!(!bad.is_valid_for(&b2_by_hand()));
}

#[test]
fn interval_examples() {
    let b3 = boolean_algebra(3);
    let p = &b3.poset;
    let bottom = p.element("{}").unwrap();
    let z = p.element("{1,2}").unwrap();
    let iv = p.interval(bottom, z, IntervalKind::Closed).unwrap();
    assert!(iv.is_isomorphic(&boolean_algebra(2).poset));

    let b2 = boolean_algebra(2);
    let (lo, hi) = (b2.poset.element("{}").unwrap(), b2.poset.element("{1,2}").unwrap());
    let open = b2.poset.interval(lo, hi, IntervalKind::Open).unwrap();
    assert_eq!(open.len(), 2);
    assert!(open.covers().is_empty());
    let half = b2.poset.interval(lo, hi, IntervalKind::HalfOpen).unwrap();
    assert_eq!(half.len(), 3);

    let (a, b) = (b2.poset.element("{1}").unwrap(), b2.poset.element("{2}").unwrap());
    assert!(b2.poset.interval(a, b, IntervalKind::Closed).is_err());
    assert!(b2.poset.interval(a, a, IntervalKind::Open).is_err());
}

#[test]
fn ideal_examples() {
    let b2 = boolean_algebra(2);
    let p = &b2.poset;
    let one = p.element("{1}").unwrap();
    assert_eq!(labels_of(p, &p.ideal(&[one], Direction::Lower)), vec!["{1}", "{}"]);
    assert_eq!(labels_of(p, &p.ideal(&[one], Direction::Upper)), vec!["{1,2}", "{1}"]);
    assert!(p.ideal(&[], Direction::Lower).is_empty());
    let ideal = p.ideal(&[one], Direction::Upper);
    assert!(ideal.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn join_and_meet_examples() {
    let b2 = boolean_algebra(2);
    let p = &b2.poset;
    let (a, b) = (p.element("{1}").unwrap(), p.element("{2}").unwrap());
    assert_eq!(p.label(p.join(a, b).unwrap()), "{1,2}");
    assert_eq!(p.label(p.meet(a, b).unwrap()), "{}");
    for z in p.elements() {
        assert_eq!(p.join(z, z), Some(z));
        assert_eq!(p.meet(z, z), Some(z));
    }

    // The two maximal elements of ∂B₂ lose their join in Σ̃B₂.
    let (s, _) = semisuspension(&b2).unwrap();
    let sp = &s.poset;
    let (a, b) = (sp.element("{1}").unwrap(), sp.element("{2}").unwrap());
    assert_eq!(sp.join(a, b), None);

    // Meets mirror joins under duality.
    let d = p.dual();
    for x in p.elements() {
        for y in p.elements() {
            assert_eq!(p.meet(x, y), d.join(x, y));
        }
    }
}

#[test]
fn join_admissible_examples() {
    for m in 3..=8 {
        let poly = face_lattice_polygon(m).unwrap();
        for i in 1..=m {
            let v = poly.poset.element(&format!("v{i}")).unwrap();
            assert!(poly.poset.is_join_admissible(v));
        }
        // Every face of a polytope is join-admissible.
        assert_eq!(poly.poset.join_admissible_elements().len(), poly.len());
    }
    let sq = square_minus_edge_and_top();
    let bottom = sq.poset.bottom().unwrap();
    assert!(sq.poset.is_join_admissible(bottom));
    for q in sq.poset.elements().filter(|&q| q != bottom) {
        assert!(!sq.poset.is_join_admissible(q));
    }
}

// Minimal elements of `{w >= z} ∩ I`, by brute force.
fn minimal_above_in(p: &Poset, z: usize, ideal: &[usize]) -> Vec<usize> {
    let cands: Vec<usize> = ideal.iter().copied().filter(|&w| p.le(z, w)).collect();
    cands.iter().copied().filter(|&w| !cands.iter().any(|&u| p.lt(u, w))).collect()
}

#[test]
fn join_admissible_ideal_examples() {
    let pent = face_lattice_polygon(5).unwrap();
    let p = &pent.poset;
    for q in p.elements() {
        let up = p.up_set(q);
        assert!(p.is_join_admissible_ideal(&up).unwrap());
        for z in p.elements() {
            assert_eq!(p.join_with_ideal(z, &up), p.join(z, q));
        }
    }
    let all: Vec<usize> = p.elements().collect();
    assert!(p.is_join_admissible_ideal(&all).unwrap());
    for z in p.elements() {
        assert_eq!(p.join_with_ideal(z, &all), Some(z));
    }

    // The two maximal elements of ∂Σ̃B₂ form an upper ideal without joins.
    let (s, _) = semisuspension(&boolean_algebra(2)).unwrap();
    let bd = s.boundary().unwrap();
    let maxes = bd.poset.maximal_elements();
    assert_eq!(maxes.len(), 2);
    let bad = bd.poset.elements().any(|z| minimal_above_in(&bd.poset, z, &maxes).len() != 1);
    assert!(bad);
    assert!(!bd.poset.is_join_admissible_ideal(&maxes).unwrap());
    let bottom = bd.poset.bottom().unwrap();
    assert!(bd.poset.is_join_admissible_ideal(&[bottom]).is_err());
}

#[test]
fn eulerian_predicates_examples() {
    for n in 0..=6 {
        let b = boolean_algebra(n);
        assert!(b.is_eulerian(), "B{n}");
        assert!(b.is_lower_eulerian() && b.is_locally_eulerian());
    }
    // 0 < a < b: the interval [0, b] has signed count 1 − 1 + 1.
    let c3 = chain(3);
    assert_eq!(poset::even_odd_balance(&c3.poset, &c3.rank), 1);
    assert!(!c3.is_locally_eulerian());
    assert_eq!(poset::first_non_eulerian_interval(&c3.poset, &c3.rank).map(|w| w.2), Some(1));

    // Two disjoint copies of B₁: locally Eulerian, no unique minimum.
    let two = RankedPoset::natural(Poset::from_covers(&["a0", "a1", "b0", "b1"], &[("a0", "a1"), ("b0", "b1")]).unwrap());
    assert!(two.is_err());
    let two = RankedPoset::new(
        Poset::from_covers(&["a0", "a1", "b0", "b1"], &[("a0", "a1"), ("b0", "b1")]).unwrap(),
        RankFunction::new(vec![0, 1, 0, 1]),
    )
    .unwrap();
    assert!(two.is_locally_eulerian());
    assert!(!two.is_lower_eulerian());
    // With a common top adjoined the interval from a bottom to the top is a
    // 3-chain, so even local Eulerianness fails.
    let joined = two.adjoin_max().unwrap();
    assert!(!joined.is_locally_eulerian());
}

#[test]
fn eulerian_hierarchy_and_shift_independence() {
    let mut all = corpus::eulerian_posets();
    all.extend(corpus::near_eulerian_posets());
    all.extend(corpus::lower_eulerian_extras());
    all.push(("chain4".into(), chain(4)));
    for (name, b) in &all {
        if b.is_eulerian() {
            assert!(b.is_lower_eulerian(), "{name}");
        }
        if b.is_lower_eulerian() {
            assert!(b.is_locally_eulerian(), "{name}");
        }
        for s in [-3, -1, 2, 5] {
            assert_eq!(
                poset::is_locally_eulerian(&b.poset, &b.rank),
                poset::is_locally_eulerian(&b.poset, &shift_rank(&b.rank, s)),
                "{name}"
            );
        }
    }
}

#[test]
fn lattice_criterion() {
    let mut all = corpus::eulerian_posets_up_to_rank(4);
    all.extend(corpus::near_eulerian_posets());
    all.extend(corpus::lower_eulerian_extras());
    for (name, b) in all.iter().filter(|(_, b)| b.len() <= 60) {
        let p = &b.poset;
        let joins = p.elements().all(|x| p.elements().all(|y| p.join(x, y).is_some()));
        let meets = p.elements().all(|x| p.elements().all(|y| p.meet(x, y).is_some()));
        assert_eq!(p.bottom().is_some() && joins, joins && meets, "{name}");
        assert_eq!(p.is_lattice(), joins && meets, "{name}");
    }
}

#[test]
fn graded_examples() {
    assert!(boolean_algebra(4).poset.is_graded());
    assert!(pyramid(&face_lattice_polygon(5).unwrap()).poset.is_graded());
    let bad = Poset::from_covers(&["0", "a", "b", "t"], &[("0", "a"), ("a", "b"), ("b", "t"), ("0", "t")]);
    assert!(bad.is_err());
    let uneven = Poset::from_covers(&["0", "a", "b", "c"], &[("0", "a"), ("a", "b"), ("0", "c")]).unwrap();
    let lengths: Vec<usize> = uneven.maximal_chains().iter().map(Vec::len).collect();
    assert!(lengths.contains(&3) && lengths.contains(&2));
    assert!(!uneven.is_graded());
}

#[test]
fn duality() {
    let b3 = boolean_algebra(3);
    assert!(b3.poset.dual().is_isomorphic(&b3.poset));
    let c = chain(3);
    let d = c.poset.dual();
    assert!(d.lt(2, 1) && d.lt(1, 0));
    for (name, b) in corpus::eulerian_posets() {
        assert_eq!(b.poset.dual().dual(), b.poset, "{name}");
        let bd = b.dual().unwrap();
        assert_eq!(b.is_eulerian(), bd.is_eulerian(), "{name}");
    }
}

#[test]
fn semisuspension_and_boundary_examples() {
    let b2 = boolean_algebra(2);
    let pyr = pyramid(&b2.boundary().unwrap());
    assert!(pyr.is_near_eulerian());
    let (s, zhat) = semisuspension(&pyr).unwrap();
    assert!(s.poset.is_isomorphic(&boolean_algebra(3).poset));
    assert!(s.poset.is_isomorphic(&pyramid(&b2).poset));
    let bd = poset::near_eulerian_boundary(&pyr.poset);
    let expected: Vec<usize> = pyr.poset.elements().filter(|&i| pyr.poset.label(i).ends_with(",{})")).collect();
    assert_eq!(bd, expected);
    assert_eq!(s.poset.strictly_below(zhat).count(), bd.len());

    for (name, b) in corpus::eulerian_posets() {
        assert!(b.is_near_eulerian(), "{name}");
    }
    assert!(!boolean_algebra(0).is_near_eulerian());
    assert!(semisuspension(&boolean_algebra(0)).is_err());
    assert!(boolean_algebra(0).boundary().is_err());
    assert!(chain(3).boundary().is_err());
}

#[test]
fn even_odd_balance_examples() {
    let bal = |b: &RankedPoset| poset::even_odd_balance(&b.poset, &b.rank);
    assert_eq!(bal(&boolean_algebra(3)), 0);
    assert_eq!(bal(&boolean_algebra(0)), 1);
    assert_eq!(bal(&boolean_algebra(3).boundary().unwrap()), 1);
}

#[test]
fn parity_of_near_eulerian_and_boundaries() {
    for (name, b) in corpus::near_eulerian_posets() {
        assert_eq!(b.len() % 2, 0, "{name}");
    }
    for (name, b) in corpus::eulerian_posets() {
        assert_eq!(b.len() % 2, 0, "{name}");
        assert_eq!(b.boundary().unwrap().len() % 2, 1, "{name}");
    }
}

#[test]
fn negative_ranks_are_allowed() {
    let b = boolean_algebra(3).shifted(-5);
    assert!(b.is_eulerian());
    assert_eq!(b.rank_of(b.poset.bottom().unwrap()), -5);
    assert!(b.boundary().unwrap().is_lower_eulerian());
}
