fn main() {
    std::process::exit(q3d::cli::run(std::env::args_os()));
}
