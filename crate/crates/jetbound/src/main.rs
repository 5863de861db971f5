use clap::Parser;
use jetbound::Cli;

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let code = jetbound::run(&cli, &mut stdout.lock(), &mut std::io::stderr());
    std::process::exit(code);
}
