//! Coherent degrees along (BA)^p (AB)^(n-1-p) A, under both generic data.

use interlacing::recipe::harris_numerology;

fn main() {
    for n in 1..=6 {
        for r in harris_numerology(n) {
            println!(
                "n={n} p={} {:<11} hc ({}, {})  q = ({}, {})  other datum q = ({}, {})",
                r.block,
                r.string.to_string(),
                r.hc_small,
                r.hc_big,
                r.q_small,
                r.q_big,
                r.q_small_psi,
                r.q_big_psi
            );
        }
    }
}
