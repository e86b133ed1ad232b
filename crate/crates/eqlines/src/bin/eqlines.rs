fn main() { std::process::exit(eqlines::cli::main()); }
