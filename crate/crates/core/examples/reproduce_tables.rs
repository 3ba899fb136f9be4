//! Replays every registered reference table and prints a diff.

use qdeform::cli::repro::{reproduce, TABLES};

fn main() {
    for (id, _) in TABLES {
        let table = reproduce(id).expect("registered table");
        println!("{table}");
    }
}
