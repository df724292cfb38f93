fn main() { std::process::exit(tenscat::cli::run_from_env()); }
