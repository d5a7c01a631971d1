use clap::Parser;

use cesaro_lab::cli::{execute, RunConfig, EXIT_CONFIG, EXIT_OK};

fn main() {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(execute(&config));
}
