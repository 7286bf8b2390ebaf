fn main() {
    std::process::exit(clifford_cli::main());
}
