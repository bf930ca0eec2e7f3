fn main() {
    std::process::exit(qdesign::cli::run(std::env::args_os()));
}
