fn main() -> std::process::ExitCode {
    uzgraph::cli::main()
}
