fn main() {
    std::process::exit(modp_cli::run(std::env::args_os()));
}
