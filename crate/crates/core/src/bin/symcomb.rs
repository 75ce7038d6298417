fn main() {
    std::process::exit(symcomb::cli::main());
}
