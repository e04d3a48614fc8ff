fn main() {
    std::process::exit(zipcone::cli::run());
}
