fn main() {
    std::process::exit(eulerzeta::cli::run(std::env::args_os()));
}
