use clap::Parser;

fn main() {
    let cli = lcr::cli::Cli::parse();
    std::process::exit(i32::from(lcr::cli::run(cli)));
}
