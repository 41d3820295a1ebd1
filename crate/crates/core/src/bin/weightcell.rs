fn main() {
    std::process::exit(weightcell::cli::main());
}
