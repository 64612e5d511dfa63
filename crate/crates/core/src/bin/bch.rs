fn main() {
    std::process::exit(bch63::cli::main_with_args(std::env::args_os()));
}
