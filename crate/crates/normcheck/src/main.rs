fn main() {
    std::process::exit(normcheck::cli::main_entry());
}
