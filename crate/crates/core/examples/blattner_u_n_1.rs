//! Blattner's formula for U(n) x U(1) ⊂ U(n,1) against the recipe.

use interlacing::oracles::crosscheck_u_n_1;

fn main() -> interlacing::Result<()> {
    for n in 1..=4 {
        for k in 1..=n + 1 {
            let r = crosscheck_u_n_1(n, k)?;
            println!(
                "n={n} k={k} {:<11} mult {}  support = pattern: {:<5}  chi ({}, {})  {} ⊂ {}  literal shape {:<5}  hc shape {}",
                r.pattern.to_string(),
                r.blattner_multiplicity,
                r.support_is_pattern,
                r.chi_small,
                r.chi_big,
                r.sig_small,
                r.sig_big,
                r.literal_code_shape,
                r.hc_code_shape
            );
        }
    }
    Ok(())
}
