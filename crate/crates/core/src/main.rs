fn main() {
    std::process::exit(linkgraph::cli::main_from_env());
}
