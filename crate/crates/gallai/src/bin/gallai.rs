use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg_refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let (code, output) = gallai::cli::run(&arg_refs);
    let mut stdout = std::io::stdout();
    let _ = stdout.write_all(output.as_bytes());
    std::process::exit(code);
}
