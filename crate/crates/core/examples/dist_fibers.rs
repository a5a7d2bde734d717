//! Fibers of the dist map against classes of the AABB <-> BBAA move.
//! Whether they coincide in general is open; this just reports.

use interlacing::recipe::{fiber_connectivity_report, DEFAULT_BOUND};

fn main() -> interlacing::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    for n in 1..=max {
        let r = fiber_connectivity_report(n, DEFAULT_BOUND)?;
        let largest = r.partition.fibers.iter().map(|f| f.strings.len()).max().unwrap_or(0);
        println!(
            "n={n}: {:>4} strings -> {:>4} values, largest fiber {largest}, block classes {}, connected {}, classes inside fibers {}",
            r.partition.string_count,
            r.partition.image_size(),
            r.block_class_count,
            r.all_connected,
            r.block_classes_within_fibers
        );
    }
    Ok(())
}
