fn main() {
    std::process::exit(sp2n::cli::cli_main(std::env::args_os()));
}
