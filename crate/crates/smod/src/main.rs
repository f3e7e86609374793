use smod::cli;

/// Restore the default SIGPIPE disposition so `smod ... | head` ends the
/// process quietly instead of panicking on a closed stdout.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    std::process::exit(cli::run());
}
