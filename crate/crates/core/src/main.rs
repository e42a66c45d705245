fn main() {
    std::process::exit(schlicht::cli::run(std::env::args_os()));
}
