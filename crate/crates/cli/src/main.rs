fn main() {
    std::process::exit(hodge_cli::main_with_args(std::env::args_os()));
}
