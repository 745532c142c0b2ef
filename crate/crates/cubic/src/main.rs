fn main() {
    std::process::exit(cubic::cli::run(std::env::args_os()));
}
