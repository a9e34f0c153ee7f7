fn main() {
    std::process::exit(opcount::cli::run(std::env::args_os()));
}
