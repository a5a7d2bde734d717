//! Coherent / incoherent classification across walls, for one and two
//! archimedean places, plus the rank-2 wall graph as DOT.

use interlacing::ledger::wall_crossing_report;
use interlacing::recipe::{wall_graph, RootLedger, Sign, DEFAULT_BOUND};
use interlacing::weights::MultiPlaceString;

fn main() -> interlacing::Result<()> {
    for (tuple, eps) in [("ABA", Sign::Plus), ("ABA", Sign::Minus), ("ABABABA", Sign::Plus), ("ABA,AAB", Sign::Plus)] {
        let m: MultiPlaceString = tuple.parse()?;
        let r = wall_crossing_report(&m, &RootLedger::new(eps, m.g()))?;
        println!(
            "({m}) eps_T {eps}: global {} -> {} (rank {})",
            r.global_sign, r.classification, r.predicted_rank
        );
        for nb in &r.neighbors {
            println!("    ({}) {} gw delta {:+}", nb.string, nb.classification, nb.gw_delta);
        }
    }
    print!("{}", wall_graph(2, &RootLedger::new(Sign::Plus, 1), DEFAULT_BOUND)?.to_dot());
    Ok(())
}
