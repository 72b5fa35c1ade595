// The same JSON the CLI reads and writes, driven in-process.
use eulerian::cli;

fn run(args: &[&str], input: &str) -> String {
    let mut argv = vec!["eulerian"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut input.as_bytes(), &mut out, &mut err);
    if code == 2 {
        eprintln!("{}", String::from_utf8_lossy(&err));
    }
    String::from_utf8(out).unwrap()
}

fn main() {
    let square = run(&["build", "polygon", "4"], "");
    println!("square: {} lines of JSON", square.lines().count());
    let sigma = run(&["map", "q=v1"], &square);
    print!("check sfs: {}", run(&["check", "sfs"], &sigma));
    let triple = run(&["cyl"], &sigma);
    print!("cd-index of the cylinder: {}", run(&["cdindex"], &triple));
    print!("{}", run(&["verify-formula", "q=v1"], &square));
    print!("{}", run(&["export-dot"], &square));
    // eulerian build-map nonexample | eulerian check sfs
    print!("non-example: {}", run(&["check", "sfs"], &run(&["build-map", "nonexample"], "")));
}
