fn main() {
    std::process::exit(twoclass::cli::run());
}
