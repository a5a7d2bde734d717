//! Cell conditions, Hodge-Tate weights, critical strip, graded pieces and
//! Greenberg-Wiles rank arithmetic for one pair of weights.

use interlacing::ledger::{
    cell_weights, check_panchishkin, critical_strip, default_labels, gw_rank_delta, ordinary_graded, selmer_condition,
    SelmerDatum,
};
use interlacing::weights::{interlace, InfinitesimalCharacter, MultiPlaceString};

fn main() -> interlacing::Result<()> {
    let a = InfinitesimalCharacter::from_doubled(&[7, 3, -1, -5])?;
    let b = InfinitesimalCharacter::from_doubled(&[4, 0, -4])?;
    let s = interlace(&a, &b)?;
    let cond = selmer_condition(&s);
    println!("{s}: {} cells at w, {} at w̄", cond.rank_w(), cond.rank_wbar());

    let table = cell_weights(&a, &b)?;
    for c in &table.cells {
        let mark = if cond.cells_w.contains(&(c.row, c.col)) { '#' } else { '.' };
        println!("  ({}, {}) {mark}  wt_w {:>2}  wt_wbar {:>2}", c.row, c.col, c.wt_w, c.wt_wbar);
    }
    println!("panchishkin: {}", check_panchishkin(&a, &b)?);
    println!("critical strip: {:?}", critical_strip(&a, &b)?.values());
    for g in ordinary_graded(&a, &default_labels(a.rank()))? {
        println!("  {} chi_cyc^{}  (HT {})", g.unramified_label, g.cyclotomic_exponent, g.hodge_tate_weight());
    }

    for word in ["ABA", "AAB", "BAA"] {
        let m: MultiPlaceString = word.parse()?;
        let c = selmer_condition(m.place(0));
        let (w, wbar) = c.classical_label().expect("rank 2");
        println!("{word}: ({w}, {wbar})  self-dual delta {}", gw_rank_delta(&SelmerDatum::from_strings(&m)));
    }
    let mixed = SelmerDatum::mixed(&"AAB".parse()?, &"ABA".parse()?)?;
    println!("AAB at w, ABA at w̄: delta {}", gw_rank_delta(&mixed));
    Ok(())
}
