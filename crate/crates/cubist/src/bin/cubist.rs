fn main() {
    std::process::exit(cubist::cli::run(std::env::args_os()));
}
