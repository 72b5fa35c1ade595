fn main() {
    std::process::exit(eulerian::cli::main_with_std());
}
