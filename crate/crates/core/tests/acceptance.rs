//! One PASS/FAIL line per acceptance criterion. Exits non-zero on any failure.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use eulerian::cd::{self, cd_formula_terms, cd_index, local_cd_index};
use eulerian::constructions::*;
use eulerian::cylinder::{self, cyl, cyl_square, map, map_square, mapping_cylinder};
use eulerian::homology::{is_gorenstein_star, is_near_gorenstein_star};
use eulerian::subdivision::{self, sfs_violation, SfsMethod};
use eulerian::{corpus, poset, NCPoly};

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str) -> NCPoly {
    NCPoly::parse(s).unwrap()
}

fn cd_golden() -> Result<String, String> {
    let table = [
        "1",
        "c",
        "c^2 + d",
        "c^3 + 2*c*d + 2*d*c",
        "c^4 + 3*c^2*d + 5*c*d*c + 3*d*c^2 + 4*d^2",
    ];
    let start = Instant::now();
    for (n, want) in table.iter().enumerate() {
        let got = cd_index(&boolean_algebra(n + 1)).map_err(|e| e.to_string())?;
        ensure(got == p(want), || format!("B{}: got {got}", n + 1))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(1), || format!("took {took:?}"))?;
    Ok(format!("B1..B5 in {took:?}"))
}

fn local_golden() -> Result<String, String> {
    let table = ["0", "d", "2*c*d + d*c", "d*c^2 + 3*c*d*c + 3*c^2*d + 4*d^2"];
    for (n, want) in table.iter().enumerate() {
        let x = pyramid(&boolean_algebra(n + 1).boundary().unwrap());
        let got = local_cd_index(&x).map_err(|e| e.to_string())?;
        ensure(got == p(want), || format!("n={n}: got {got}"))?;
    }
    Ok("n=0..3".into())
}

fn round_trips() -> Result<String, String> {
    let triples = corpus::triples();
    for (name, t) in &triples {
        let m = map(t).map_err(|e| format!("{name}: {e}"))?;
        ensure(cylinder::roundtrip_map_cyl(t).map_err(|e| e.to_string())?, || format!("{name}: CYL(MAP)"))?;
        let back = map(&cyl(&m).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(back == cylinder::tag_map(&m), || format!("{name}: MAP(CYL(MAP))"))?;
    }
    ensure(triples.len() >= 1000, || format!("only {} triples", triples.len()))?;
    Ok(format!("{} triples", triples.len()))
}

fn functorial() -> Result<String, String> {
    let squares = corpus::squares();
    let mut patterns = 0;
    for (name, sq) in &squares {
        let phi = cyl_square(sq).map_err(|e| format!("{name}: {e}"))?;
        let t = cyl(&sq.sigma).map_err(|e| e.to_string())?;
        let t2 = cyl(&sq.sigma_prime).map_err(|e| e.to_string())?;
        let back = map_square(&phi, &t, &t2).map_err(|e| format!("{name}: {e}"))?;
        ensure(back == sq.tagged(), || format!("{name}: map_square(cyl_square)"))?;
        ensure(cylinder::involution_preserves_cylinder(sq).map_err(|e| e.to_string())?, || format!("{name}: involution"))?;
        if ["b0_", "b1_", "product_"].iter().any(|k| name.starts_with(k)) {
            patterns += 1;
        }
    }
    ensure(patterns >= 50, || format!("only {patterns} pattern squares"))?;
    Ok(format!("{} squares, {patterns} from B0/B1/product patterns", squares.len()))
}

fn formula() -> Result<String, String> {
    let mut count = 0;
    let mut per_gamma = HashMap::new();
    for (name, t) in corpus::triples() {
        // The decomposition needs 0 < q < 1.
        if !t.gamma.is_eulerian_positive_rank() || t.gamma.poset.top() == Some(t.q) {
            continue;
        }
        let terms = cd_formula_terms(&t).map_err(|e| format!("{name}: {e}"))?;
        // Many triples share Γ; its cd-index and homology are computed once.
        let (phi, gorenstein) = per_gamma
            .entry((t.gamma.poset.labels().to_vec(), t.gamma.poset.covers().to_vec()))
            .or_insert_with(|| (cd_index(&t.gamma).unwrap(), is_gorenstein_star(&t.gamma)));
        ensure(terms.rhs() == *phi, || format!("{name}: rhs differs"))?;
        ensure(terms.is_integral(), || format!("{name}: half-sum not integral"))?;
        if *gorenstein {
            ensure(terms.summands_nonnegative(), || format!("{name}: negative summand"))?;
        }
        count += 1;
    }
    ensure(count >= 100, || format!("only {count} Eulerian triples"))?;
    Ok(format!("{count} Eulerian triples"))
}

fn characterizations() -> Result<String, String> {
    let candidates = corpus::candidate_maps();
    let mut rejected = 0;
    for (name, m) in &candidates {
        let verdicts: Vec<_> = SfsMethod::ALL
            .iter()
            .map(|&k| sfs_violation(m, k).map(|v| v.is_none()).map_err(|e| e.to_string()))
            .collect();
        ensure(verdicts.iter().all(|v| *v == verdicts[0]), || format!("{name}: {verdicts:?}"))?;
        if verdicts[0] != Ok(true) {
            rejected += 1;
        }
    }
    let bad = subdivision::boundary_nonexample();
    for k in SfsMethod::ALL {
        ensure(!subdivision::is_sfs(&bad, k).unwrap(), || format!("non-example passes {k:?}"))?;
    }
    let corrupted = candidates.iter().filter(|(n, _)| n.starts_with("corrupt_")).count();
    ensure(candidates.len() >= 200 && corrupted >= 20, || format!("{} candidates, {corrupted} corrupted", candidates.len()))?;
    Ok(format!("{} candidates, {corrupted} corrupted, {rejected} rejected", candidates.len()))
}

fn identities() -> Result<String, String> {
    let c = NCPoly::c();
    let posets = corpus::eulerian_posets_up_to_rank(5);
    let small: Vec<_> = posets.iter().filter(|(_, b)| b.rank_length() <= 3).collect();
    for (name, b) in &posets {
        let phi = cd_index(b).unwrap();
        let g = cd::derivation_g(&phi);
        let dd = cd::derivation_d(&phi);
        let pyr = cd_index(&pyramid(b)).unwrap();
        ensure(pyr == &(&phi * &c) + &g, || format!("{name}: pyramid"))?;
        ensure(cd_index(&prism(b).unwrap()).unwrap() == &(&phi * &c) + &dd, || format!("{name}: prism"))?;
        ensure(cd_index(&bipyramid(b).unwrap()).unwrap() == &(&c * &phi) + &dd, || format!("{name}: bipyramid"))?;
        ensure(cd_index(&dual(b).unwrap()).unwrap() == phi.reverse(), || format!("{name}: duality"))?;
        ensure(dd == cd::derivation_chain_sum(b).unwrap(), || format!("{name}: D oracle"))?;
        for (n2, b2) in &small {
            let s = cd_index(&star_product(b, b2).unwrap()).unwrap();
            ensure(s == &phi * &cd_index(b2).unwrap(), || format!("{name} * {n2}: star"))?;
        }
    }
    Ok(format!("{} Eulerian posets of rank <= 5", posets.len()))
}

fn homology() -> Result<String, String> {
    let mut g = Vec::new();
    for n in 0..=4 {
        g.push((format!("B{n}"), boolean_algebra(n)));
    }
    for m in 3..=8 {
        g.push((format!("polygon{m}"), face_lattice_polygon(m).unwrap()));
    }
    for d in 1..=3 {
        g.push((format!("cube{d}"), face_lattice_cube(d).unwrap()));
        g.push((format!("cross{d}"), face_lattice_crosspolytope(d).unwrap()));
    }
    for (name, b) in &g {
        // B0 has rank 0, so only the Eulerian part applies.
        let ok = if b.rank_length() == 0 { b.is_eulerian() } else { is_gorenstein_star(b) };
        ensure(ok, || format!("{name} not Gorenstein*"))?;
    }
    let mut near: Vec<_> = (0..=3).map(|s| (format!("subdivided{s}"), subdivided_interval(s))).collect();
    near.extend(corpus::near_eulerian_posets().into_iter().filter(|(n, _)| n.starts_with("pyr_boundary_")));
    for (name, x) in &near {
        ensure(is_near_gorenstein_star(x), || format!("{name} not near-Gorenstein*"))?;
    }
    let sq = square_minus_edge_and_top();
    let bottom = sq.poset.bottom().unwrap();
    for q in sq.poset.elements().filter(|&q| q != bottom) {
        let blocked = sq.poset.elements().any(|z| sq.poset.join(z, q).is_none());
        ensure(blocked, || format!("{} is join-admissible", sq.poset.label(q)))?;
    }
    Ok(format!("{} Gorenstein*, {} near-Gorenstein*, counterexample has no admissible q", g.len(), near.len()))
}

fn corollaries() -> Result<String, String> {
    let triples = corpus::triples();
    for (name, t) in &triples {
        let m = map(t).unwrap();
        let g = &t.gamma;
        let (a, b) = subdivision::parity_check(&m);
        ensure(a == b, || format!("{name}: parity"))?;
        ensure(g.rank_length() == m.source.rank_length() + 1, || format!("{name}: rank"))?;
        let graded = [m.source.poset.is_graded(), m.target.poset.is_graded(), g.poset.is_graded()];
        ensure(graded.iter().all(|&x| x == graded[0]), || format!("{name}: graded"))?;
        ensure(poset::even_odd_balance(&g.poset, &g.rank) == 0, || format!("{name}: balance"))?;
        let bottom = g.poset.bottom().unwrap();
        ensure(g.rank_of(t.q) - g.rank_of(bottom) == m.sfs_rank().unwrap() + 1, || format!("{name}: rho(0,q)"))?;
        let c = mapping_cylinder(&m).unwrap();
        let nx = m.source.len();
        for x in m.source.poset.elements() {
            for y in m.target.poset.elements() {
                let crit = m.apply(x) == y && m.source.rank_of(x) == m.target.rank_of(y);
                ensure(c.poset.is_cover(x, nx + y) == crit, || format!("{name}: cover {x} {y}"))?;
            }
        }
    }
    Ok(format!("{} triples", triples.len()))
}

fn main() {
    let checks: [(&str, Check); 9] = [
        ("cd-index golden table", cd_golden),
        ("local cd golden table", local_golden),
        ("CYL/MAP round trip", round_trips),
        ("functorial round trip", functorial),
        ("cd formula", formula),
        ("characterization equivalence", characterizations),
        ("identity suite", identities),
        ("homology suite", homology),
        ("structural corollaries", corollaries),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
