fn main() {
    std::process::exit(keisler_lab::cli::run(std::env::args_os()));
}
