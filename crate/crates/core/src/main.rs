fn main() {
    std::process::exit(graph_wep::cli::run(std::env::args_os()));
}
