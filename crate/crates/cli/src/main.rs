fn main() {
    // Die quietly when the consumer closes the pipe, like other filters.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(umcf_cli::run(&args));
}
