//! Run the bundled corpus through the batch certifier, as the CLI does.

use knot_atoms::bracket::DEFAULT_STATE_LIMIT;
use knot_atoms::cli::{cmd_batch, BUNDLED_CORPUS};

fn main() {
    let out = cmd_batch(BUNDLED_CORPUS, DEFAULT_STATE_LIMIT, false);
    print!("{}", out.stdout);
    println!("exit code {}", out.code);
}
