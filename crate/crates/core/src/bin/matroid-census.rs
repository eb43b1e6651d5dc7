use std::io;

fn main() {
    env_logger::init();
    let code = matroid_census::cli::run(
        std::env::args_os(),
        &mut io::stdin(),
        &mut io::stdout(),
        &mut io::stderr(),
    );
    std::process::exit(code);
}
