use clap::Parser;

fn main() {
    let cli = pubmine::cli::Cli::parse();
    if let Err(err) = pubmine::cli::run(cli) {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
