fn main() {
    std::process::exit(o1ppg::cli::run(std::env::args_os()));
}
