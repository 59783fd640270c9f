use clap::Parser;

fn main() -> std::process::ExitCode {
    uvc::cli::run(uvc::cli::Cli::parse())
}
