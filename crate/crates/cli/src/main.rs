use clap::Parser;

fn main() {
    let cli = torusrt_cli::args::Cli::parse();
    std::process::exit(torusrt_cli::run(cli));
}
