fn main() {
    std::process::exit(subbar::cli::run(std::env::args_os()));
}
