fn main() {
    std::process::exit(qgrowth::cli::run(std::env::args_os()));
}
