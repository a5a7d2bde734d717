//! The sign-counting recipe on a few strings: distinguished characters,
//! Harish-Chandra codes, signatures and the relevancy parity.

use interlacing::recipe::{check_relevancy, distinguished_pair};
use interlacing::weights::{interlace, InfinitesimalCharacter, InterlacingString};

fn main() -> interlacing::Result<()> {
    // from weights: a = (7/2, 3/2, -1/2, -5/2), b = (2, 0, -2)
    let a = InfinitesimalCharacter::from_doubled(&[7, 3, -1, -5])?;
    let b = InfinitesimalCharacter::from_doubled(&[4, 0, -4])?;
    let from_weights = interlace(&a, &b)?;
    println!("{a} / {b} -> {from_weights}");

    for word in ["ABA", "AAB", "BAA", "ABABA", "BAABBAA"] {
        let s: InterlacingString = word.parse()?;
        let dp = distinguished_pair(&s);
        println!(
            "{s:>9}: chi ({}, {})  hc ({}, {})  {} ⊂ {}  relevant: {}",
            dp.chi_small,
            dp.chi_big,
            dp.hc_small,
            dp.hc_big,
            dp.sig_small,
            dp.sig_big,
            check_relevancy(&dp)
        );
    }
    let diag = distinguished_pair(&from_weights);
    println!("diagonal rank 4 is compact: {} ⊂ {}", diag.sig_small, diag.sig_big);
    Ok(())
}
