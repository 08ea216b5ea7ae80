use clap::Parser;
use mlie::doc;
use mlie_cli::fixtures;

/// Regenerates the document corpus under the fixtures directory.
#[derive(Parser)]
#[command(name = "gen_fixtures")]
struct Cli {
    /// Output directory.
    #[arg(long, default_value = "fixtures")]
    out: String,
}

fn main() {
    let cli = Cli::parse();
    let docs = match fixtures::all() {
        Ok(docs) => docs,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    if let Err(e) = std::fs::create_dir_all(&cli.out) {
        eprintln!("error: cannot create {}: {e}", cli.out);
        std::process::exit(2);
    }
    for (name, document) in docs {
        let path = format!("{}/{name}", cli.out);
        let json = match doc::to_json(&document) {
            Ok(json) => json,
            Err(e) => {
                eprintln!("error: {name}: {e}");
                std::process::exit(2);
            }
        };
        if let Err(e) = std::fs::write(&path, json) {
            eprintln!("error: cannot write {path}: {e}");
            std::process::exit(2);
        }
        println!("{path}");
    }
}
