use clap::Parser;

fn main() {
    let cli = staralg::cli::Cli::parse();
    std::process::exit(staralg::cli::run(cli));
}
