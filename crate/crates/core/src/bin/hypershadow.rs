fn main() {
    std::process::exit(hypershadow::cli::run(std::env::args_os()));
}
