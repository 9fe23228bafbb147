fn main() {
    let code = interior_hull::cli::cli_main(std::env::args_os());
    std::process::exit(code);
}
