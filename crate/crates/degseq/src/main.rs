fn main() -> std::process::ExitCode {
    degseq::cli::main()
}
