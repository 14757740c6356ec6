fn main() -> std::process::ExitCode {
    raradapt::cli::main()
}
