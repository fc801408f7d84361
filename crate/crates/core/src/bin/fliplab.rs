fn main() {
    std::process::exit(fliplab::cli::main_with_args(std::env::args_os()));
}
