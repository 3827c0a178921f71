fn main() {
    std::process::exit(invlab::cli::run());
}
