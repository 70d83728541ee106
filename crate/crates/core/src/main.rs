fn main() {
    std::process::exit(factor_regimes::cli::run_from(std::env::args_os()));
}
