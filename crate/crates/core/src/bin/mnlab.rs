fn main() {
    std::process::exit(mnlab::cli::run(std::env::args_os()));
}
