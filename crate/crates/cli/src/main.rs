fn main() {
    std::process::exit(dimonoid_cli::main_with_stdio());
}
