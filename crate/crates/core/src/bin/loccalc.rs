fn main() {
    let (text, code) = loccalc::cli::run(std::env::args_os());
    println!("{text}");
    std::process::exit(code);
}
