fn main() {
    std::process::exit(spincorr::cli::run());
}
