use std::process::ExitCode;

fn main() -> ExitCode {
    let result = sierp::cli::run(std::env::args_os());
    match result.payload.get("help").and_then(|h| h.as_str()) {
        Some(help) => print!("{help}"),
        None => println!("{}", serde_json::to_string_pretty(&result.payload).expect("payload serializes")),
    }
    if let Some(err) = result.payload.get("error") {
        eprintln!("sierp: {}", err.as_str().unwrap_or("error"));
    }
    ExitCode::from(result.code as u8)
}
