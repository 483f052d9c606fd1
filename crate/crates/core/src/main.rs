fn main() {
    std::process::exit(hmf::cli::run(std::env::args_os()));
}
