use std::io;

fn main() {
    let (stdin, stdout, stderr) = (io::stdin(), io::stdout(), io::stderr());
    let mut io = vwc::cli::Io { stdin: &mut stdin.lock(), stdout: &mut stdout.lock(), stderr: &mut stderr.lock() };
    std::process::exit(vwc::cli::run(std::env::args_os(), &mut io));
}
