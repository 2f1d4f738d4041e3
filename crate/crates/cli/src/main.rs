fn main() {
    std::process::exit(pg_cli::run());
}
