//! Compact branching three ways, then the recipe's definite endpoints
//! against the branching support.

use interlacing::oracles::{
    branching_multiplicity, character_branching_routes, crosscheck_compact, DominantWeight,
};

fn main() -> interlacing::Result<()> {
    for (l, m) in [(vec![2, 1, 0], vec![2, 0]), (vec![2, 1, 0], vec![3, 0]), (vec![2, 2], vec![1]), (vec![3, -1, -4], vec![0, -2])] {
        let (l, m) = (DominantWeight::new(l)?, DominantWeight::new(m)?);
        let r = character_branching_routes(&l, &m)?;
        println!(
            "{l} -> {m}: rule {}  GT {}  Weyl {}",
            branching_multiplicity(&l, &m),
            r.gelfand_tsetlin,
            r.weyl_character
        );
    }
    for n in 2..=5 {
        let r = crosscheck_compact(n)?;
        println!(
            "n={n}: diagonal {} -> {} ⊂ {}; supports match: {}",
            r.diagonal, r.sig_small, r.sig_big, r.supports_match
        );
    }
    Ok(())
}
