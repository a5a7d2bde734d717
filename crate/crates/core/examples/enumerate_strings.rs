//! Every interlacing string of a given rank, with its area and tableau.
//!
//! cargo run --example enumerate_strings -- 3

use interlacing::cli::render::ascii_tableau;
use interlacing::weights::{enumerate_strings, string_count};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    println!("rank {n}: {} strings", string_count(n));
    for s in enumerate_strings(n) {
        println!("{s}  area {}", s.area());
        for line in ascii_tableau(&s.to_tableau()) {
            println!("    {line}");
        }
    }
}
