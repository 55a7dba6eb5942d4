fn main() {
    std::process::exit(bassforge_cli::run(std::env::args_os()));
}
