fn main() {
    std::process::exit(stabletrack_cli::run_command(std::env::args_os()));
}
