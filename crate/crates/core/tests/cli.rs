use std::io::Write;
use std::process::{Command, Stdio};

use eulerian::cd::cd_index;
use eulerian::constructions::*;
use eulerian::cylinder::{self, JoinTriple};
use eulerian::format::{self, MapJson, PosetJson, SquareJson, TripleJson};
use eulerian::subdivision;
use eulerian::{corpus, NCPoly};

fn run(args: &[&str], input: &str) -> (i32, String, String) {
    let mut argv = vec!["eulerian"];
    argv.extend_from_slice(args);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = eulerian::cli::run(argv, &mut input.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str], input: &str) -> String {
    let (code, out, err) = run(args, input);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn poset_text(b: &eulerian::RankedPoset) -> String {
    format::to_string(&format::ranked_to_json(b))
}

fn parse_poset(s: &str) -> eulerian::RankedPoset {
    let j: PosetJson = serde_json::from_str(s).unwrap();
    format::ranked_from_json(&j, None).unwrap()
}

fn parse_map(s: &str) -> subdivision::PosetMap {
    let j: MapJson = serde_json::from_str(s).unwrap();
    format::map_from_json(&j).unwrap()
}

#[test]
fn build_closed_families() {
    let b3 = parse_poset(&ok(&["build", "boolean", "3"], ""));
    assert_eq!(b3, boolean_algebra(3));
    let j: PosetJson = serde_json::from_str(&ok(&["build", "polygon", "5"], "")).unwrap();
    assert_eq!(j.labels.len(), 12);
    let mut sorted = j.labels.clone();
    sorted.sort();
    assert_eq!(sorted, j.labels);
    assert_eq!(parse_poset(&ok(&["build", "cube", "3"], "")).len(), 28);
    assert_eq!(parse_poset(&ok(&["build", "subdivided_interval", "2"], "")), subdivided_interval(2));
    assert_eq!(parse_poset(&ok(&["build", "crosspolytope", "2"], "")), face_lattice_crosspolytope(2).unwrap());
}

#[test]
fn build_from_inputs() {
    let b2 = poset_text(&boolean_algebra(2));
    assert_eq!(parse_poset(&ok(&["build", "pyramid"], &b2)), pyramid(&boolean_algebra(2)));
    assert_eq!(parse_poset(&ok(&["build", "bipyramid"], &b2)), bipyramid(&boolean_algebra(2)).unwrap());
    assert_eq!(parse_poset(&ok(&["build", "prism"], &b2)), prism(&boolean_algebra(2)).unwrap());
    let s = parse_poset(&ok(&["build", "semisuspension"], &b2));
    assert_eq!(s, semisuspension(&boolean_algebra(2)).unwrap().0);
    let two = format!("{b2}{}", poset_text(&boolean_algebra(1)));
    assert_eq!(parse_poset(&ok(&["build", "star"], &two)), star_product(&boolean_algebra(2), &boolean_algebra(1)).unwrap());
    assert_eq!(parse_poset(&ok(&["build", "product"], &two)), direct_product(&boolean_algebra(2), &boolean_algebra(1)));
}

#[test]
fn build_errors_exit_2() {
    assert_eq!(run(&["build", "torus", "3"], "").0, 2);
    assert_eq!(run(&["build", "polygon", "2"], "").0, 2);
    assert_eq!(run(&["build", "polygon", "x"], "").0, 2);
    assert_eq!(run(&["build", "pyramid"], "").0, 2);
    assert_eq!(run(&["build", "pyramid"], "{not json").0, 2);
    assert_eq!(run(&["build", "bipyramid"], &poset_text(&chain(3))).0, 2);
    assert_eq!(run(&["frobnicate"], "").0, 2);
}

#[test]
fn output_formats() {
    let text = ok(&["--format", "text", "build", "boolean", "1"], "");
    assert_eq!(text, "{1} 1\n{} 0\n{} < {1}\n");
    let dot = ok(&["build", "boolean", "2", "--format", "dot"], "");
    assert!(dot.starts_with("digraph hasse {"));
}

#[test]
fn checks() {
    let b3 = poset_text(&boolean_algebra(3));
    assert_eq!(run(&["check", "eulerian"], &b3), (0, "PASS\n".into(), String::new()));
    let (code, out, _) = run(&["check", "eulerian"], &poset_text(&chain(3)));
    assert_eq!(code, 1);
    assert!(out.starts_with("FAIL: interval"));
    let fan = poset_text(&fan_over_boundary(&face_lattice_polygon(5).unwrap()).unwrap());
    assert_eq!(run(&["check", "lower-eulerian"], &fan).0, 0);
    assert_eq!(run(&["check", "eulerian"], &fan).0, 1);
    assert_eq!(run(&["check", "near-eulerian"], &poset_text(&subdivided_interval(2))).0, 0);
    assert_eq!(run(&["check", "near-eulerian"], &poset_text(&boolean_algebra(0))).0, 1);
    assert_eq!(run(&["check", "graded"], &b3).0, 0);
    assert_eq!(run(&["check", "gorenstein-star"], &b3).0, 0);
    assert_eq!(run(&["check", "near-gorenstein-star"], &poset_text(&subdivided_interval(3))).0, 0);
    assert_eq!(run(&["check", "lower-gorenstein-star"], &fan).0, 0);
    assert_eq!(run(&["check", "solvable"], &b3).0, 2);
}

#[test]
fn check_join_admissible() {
    let pent = poset_text(&face_lattice_polygon(5).unwrap());
    assert_eq!(run(&["check", "join-admissible", "q=v1"], &pent).0, 0);
    let sq = poset_text(&square_minus_edge_and_top());
    let (code, out, _) = run(&["check", "join-admissible", "q=v1"], &sq);
    assert_eq!(code, 1);
    assert!(out.contains("no least upper bound"));
    assert_eq!(run(&["check", "join-admissible", "q=nope"], &pent).0, 2);
}

#[test]
fn check_sfs_methods() {
    let id = format::to_string(&format::map_to_json(&subdivision::identity_sfs(&boolean_algebra(2))));
    for method in ["eq31", "eq32", "near"] {
        assert_eq!(run(&["check", "sfs", "--method", method], &id).0, 0, "{method}");
    }
    let bad = ok(&["build-map", "nonexample"], "");
    let (code, out, _) = run(&["check", "sfs"], &bad);
    assert_eq!(code, 1);
    assert_eq!(out, "FAIL: x=c, y=zhat, sum=2\n");
    let (code, out, _) = run(&["check", "sfs", "--method", "eq32"], &bad);
    assert_eq!(code, 1);
    assert_eq!(out, "FAIL: x=c, y=ab, sum=-1, expected=0\n");
    let (code, out, _) = run(&["check", "sfs", "--method", "near"], &bad);
    assert_eq!(code, 1);
    assert_eq!(out, "FAIL: y=ab: preimage is not near-Eulerian\n");
}

#[test]
fn map_and_cyl() {
    let b2 = poset_text(&boolean_algebra(2));
    let m = parse_map(&ok(&["map", "q={1}"], &b2));
    let t = JoinTriple::with_label(boolean_algebra(2), "{1}").unwrap();
    assert_eq!(m, cylinder::map(&t).unwrap());

    let sigma = subdivision::bipyramid_sfs(&boolean_algebra(3)).unwrap();
    let sigma_text = format::to_string(&format::map_to_json(&sigma));
    let triple = ok(&["cyl"], &sigma_text);
    let back = parse_map(&ok(&["map"], &triple));
    assert_eq!(back, cylinder::tag_map(&sigma));
    let tj: TripleJson = serde_json::from_str(&triple).unwrap();
    assert_eq!(tj.q, "Y:{}");

    let bad = ok(&["build-map", "nonexample"], "");
    assert_eq!(run(&["cyl"], &bad).0, 2);
    assert_eq!(run(&["map", "q={}"], &b2).0, 2);
}

#[test]
fn squares() {
    let (_, sq) = corpus::squares().into_iter().find(|(n, _)| n.starts_with("b1_")).unwrap();
    let text = format::to_string(&format::square_to_json(&sq));
    assert_eq!(run(&["square", "check"], &text).0, 0);
    let phi = ok(&["square", "cyl"], &text);
    assert_eq!(parse_map(&phi), cylinder::cyl_square(&sq).unwrap());
    let t = format::to_string(&format::triple_to_json(&cylinder::cyl(&sq.sigma).unwrap()));
    let t2 = format::to_string(&format::triple_to_json(&cylinder::cyl(&sq.sigma_prime).unwrap()));
    let back = ok(&["square", "map"], &format!("{phi}{t}{t2}"));
    let j: SquareJson = serde_json::from_str(&back).unwrap();
    assert_eq!(format::square_from_json(&j).unwrap(), sq.tagged());
    let inv = ok(&["square", "involution"], &text);
    let j: SquareJson = serde_json::from_str(&inv).unwrap();
    assert_eq!(format::square_from_json(&j).unwrap(), sq.involution());
    assert_eq!(run(&["square", "spin"], &text).0, 2);
}

#[test]
fn cd_commands() {
    let b5 = poset_text(&boolean_algebra(5));
    let out = ok(&["cdindex"], &b5);
    let want = NCPoly::parse("c^4 + 3*d*c^2 + 5*c*d*c + 3*c^2*d + 4*d^2").unwrap();
    assert_eq!(NCPoly::parse(out.trim()).unwrap(), want);
    assert_eq!(out, format!("{want}\n"));

    let x = pyramid(&boolean_algebra(3).boundary().unwrap());
    let out = ok(&["localcd"], &poset_text(&x));
    assert_eq!(NCPoly::parse(out.trim()).unwrap(), NCPoly::parse("2*c*d + d*c").unwrap());

    let json = ok(&["cdindex", "--format", "json"], &poset_text(&boolean_algebra(3)));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["cd_index"], "c^2 + d");
    assert_eq!(run(&["cdindex"], &poset_text(&chain(3))).0, 2);
}

#[test]
fn verify_formula() {
    let bp = bipyramid(&boolean_algebra(3)).unwrap();
    let (code, out, _) = run(&["verify-formula", "q=({},{1})"], &poset_text(&bp));
    assert_eq!(code, 0);
    assert!(out.ends_with("PASS\n"));
    let lhs = out.lines().next().unwrap().strip_prefix("lhs: ").unwrap();
    assert_eq!(NCPoly::parse(lhs).unwrap(), cd_index(&bp).unwrap());
    assert_eq!(run(&["verify-formula", "q={}"], &poset_text(&boolean_algebra(3))).0, 2);
}

#[test]
fn export_dot() {
    let dot = ok(&["export-dot"], &poset_text(&boolean_algebra(2)));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 4);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 4);
    assert_eq!(dot.lines().filter(|l| l.contains("rank=same")).count(), 3);
    assert_eq!(run(&["export-dot"], "").0, 2);
}

#[test]
fn files_in_and_out() {
    let dir = std::env::temp_dir().join(format!("eulerian-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("b3.json");
    let output = dir.join("pyr.json");
    std::fs::write(&input, poset_text(&boolean_algebra(3))).unwrap();
    let (code, out, _) = run(&["build", "pyramid", "-i", input.to_str().unwrap(), "-o", output.to_str().unwrap()], "");
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(parse_poset(&std::fs::read_to_string(&output).unwrap()), pyramid(&boolean_algebra(3)));
    assert_eq!(run(&["build", "pyramid", "-i", dir.join("missing.json").to_str().unwrap()], "").0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deterministic_output() {
    let inputs = [
        (vec!["build", "cube", "3"], String::new()),
        (vec!["cdindex"], poset_text(&prism(&face_lattice_polygon(5).unwrap()).unwrap())),
        (vec!["map", "q=v2"], poset_text(&face_lattice_polygon(6).unwrap())),
        (vec!["export-dot"], poset_text(&face_lattice_crosspolytope(3).unwrap())),
    ];
    for (args, input) in &inputs {
        let a = run(args, input);
        let b = run(args, input);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    for (name, b) in corpus::eulerian_posets().into_iter().chain(corpus::near_eulerian_posets()) {
        let text = poset_text(&b);
        assert_eq!(parse_poset(&text), b, "{name}");
        assert_eq!(poset_text(&parse_poset(&text)), text, "{name}");
    }
    for (name, m) in corpus::sfs_maps() {
        let text = format::to_string(&format::map_to_json(&m));
        assert_eq!(parse_map(&text), m, "{name}");
    }
    for (name, t) in corpus::triples().into_iter().step_by(7) {
        let text = format::to_string(&format::triple_to_json(&t));
        let j: TripleJson = serde_json::from_str(&text).unwrap();
        assert_eq!(format::triple_from_json(&j).unwrap(), t, "{name}");
    }
}

#[test]
fn binary_pipeline() {
    let bin = env!("CARGO_BIN_EXE_eulerian");
    let pipe = |args: &[&str], input: &str| -> (i32, String) {
        let mut child = Command::new(bin)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
        let out = child.wait_with_output().unwrap();
        (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
    };
    let (code, b2) = pipe(&["build", "boolean", "2"], "");
    assert_eq!(code, 0);
    let (code, pyr) = pipe(&["build", "pyramid"], &b2);
    assert_eq!(code, 0);
    let (code, cd) = pipe(&["cdindex"], &pyr);
    assert_eq!((code, cd.as_str()), (0, "c^2 + d\n"));
    let (code, _) = pipe(&["check", "eulerian"], &poset_text(&chain(2)));
    assert_eq!(code, 0);
    let (code, _) = pipe(&["check", "eulerian"], &poset_text(&chain(3)));
    assert_eq!(code, 1);
    let (code, _) = pipe(&["export-dot"], "");
    assert_eq!(code, 2);
}
