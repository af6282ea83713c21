fn main() {
    std::process::exit(hookforest::cli::run(std::env::args_os()));
}
