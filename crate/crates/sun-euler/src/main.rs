use clap::Parser;
use sun_euler::cli::{Cli, Command, CommandResult, Status};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SUN_EULER_LOG", "warn"))
        .init();
    let cli = Cli::parse();
    let result: CommandResult = sun_euler::cli::run(&cli.command);
    match result.status {
        Status::Ok => {
            // `sample` emits one JSON object per line; everything else one
            // pretty document.
            if matches!(cli.command, Command::Sample { .. }) {
                for row in result.payload.as_array().into_iter().flatten() {
                    println!("{row}");
                }
            } else {
                println!("{:#}", result.payload);
            }
            if let Command::Verify { .. } = cli.command {
                log::info!("verify finished in {:.1} ms", result.elapsed_ms);
            }
        }
        Status::Error => {
            eprintln!("{:#}", result.payload);
        }
    }
    std::process::exit(result.exit_code());
}
