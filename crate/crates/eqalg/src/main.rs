fn main() {
    std::process::exit(eqalg::cli::run());
}
