fn main() {
    std::process::exit(hairpin::cli::run());
}
