fn main() {
    std::process::exit(iset::cli::run(std::env::args_os()));
}
