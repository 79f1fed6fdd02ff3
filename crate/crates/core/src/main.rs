fn main() {
    std::process::exit(hausdiv::cli::run(std::env::args_os()));
}
