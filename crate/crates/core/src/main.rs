fn main() {
    let (code, output) = trop2::cli::run(std::env::args_os());
    println!("{output}");
    std::process::exit(code);
}
