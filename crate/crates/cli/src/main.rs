fn main() {
    std::process::exit(quatalg_cli::main_impl());
}
