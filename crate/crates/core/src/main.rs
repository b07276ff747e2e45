fn main() {
    std::process::exit(poised::cli::main());
}
