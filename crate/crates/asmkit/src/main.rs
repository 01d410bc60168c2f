fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(asmkit::cli::run(&args));
}
