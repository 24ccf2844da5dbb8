use clap::Parser;

fn main() {
    let cli = leibkit::cli::Cli::parse();
    std::process::exit(leibkit::cli::main_with(&cli));
}
