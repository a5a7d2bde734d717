use std::fmt::Write as _;

use serde::Serialize;

use super::render::ascii_tableau;
use crate::error::Result;
use crate::ledger::{cell_weights, critical_strip, selmer_condition, CellWeight, Classification, SelmerCondition};
use crate::recipe::{arch_root_number, distinguished_pair, global_root_number, DistinguishedPair, RootLedger, Sign};
use crate::weights::{interlace, InfinitesimalCharacter, InterlacingString, MultiPlaceString};

#[derive(Clone, Debug, Serialize)]
pub struct PlaceRecord {
    pub string: InterlacingString,
    pub area: usize,
    pub sign: Sign,
    pub tableau: Vec<String>,
    pub distinguished_pair: DistinguishedPair,
    /// The weights behind the string: as given, or its canonical realization.
    pub a: InfinitesimalCharacter,
    pub b: Option<InfinitesimalCharacter>,
    pub selmer: SelmerCondition,
    pub cell_weights: Vec<CellWeight>,
    pub critical_strip: Option<Vec<i64>>,
    pub nearby: Vec<InterlacingString>,
    pub block_moves: Vec<InterlacingString>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisRecord {
    pub strings: MultiPlaceString,
    pub n: usize,
    pub g: usize,
    pub eps_finite: Sign,
    pub global_sign: Sign,
    pub classification: Classification,
    pub places: Vec<PlaceRecord>,
}

fn place_record(s: &InterlacingString, a: InfinitesimalCharacter, b: Option<InfinitesimalCharacter>) -> Result<PlaceRecord> {
    let (cell_weights, critical_strip) = match &b {
        Some(b) => (cell_weights(&a, b)?.cells, Some(critical_strip(&a, b)?.values())),
        None => (Vec::new(), None),
    };
    Ok(PlaceRecord {
        string: s.clone(),
        area: s.area(),
        sign: arch_root_number(s),
        tableau: ascii_tableau(&s.to_tableau()),
        distinguished_pair: distinguished_pair(s),
        selmer: selmer_condition(s),
        nearby: s.nearby(),
        block_moves: s.block_moves(),
        cell_weights,
        critical_strip,
        a,
        b,
    })
}

fn assemble(strings: MultiPlaceString, places: Vec<PlaceRecord>, eps_finite: Sign) -> Result<AnalysisRecord> {
    let ledger = RootLedger::new(eps_finite, strings.g());
    let global_sign = global_root_number(&ledger, &strings)?;
    Ok(AnalysisRecord {
        n: strings.n(),
        g: strings.g(),
        eps_finite,
        global_sign,
        classification: Classification::from_sign(global_sign),
        places,
        strings,
    })
}

pub fn analyze_strings(strings: MultiPlaceString, eps_finite: Sign) -> Result<AnalysisRecord> {
    let places = strings
        .strings()
        .iter()
        .map(|s| {
            let (a, b) = s.realize();
            place_record(s, a, b)
        })
        .collect::<Result<Vec<_>>>()?;
    assemble(strings, places, eps_finite)
}

pub fn analyze_weights(a: InfinitesimalCharacter, b: InfinitesimalCharacter, eps_finite: Sign) -> Result<AnalysisRecord> {
    let s = interlace(&a, &b)?;
    let place = place_record(&s, a, Some(b))?;
    assemble(MultiPlaceString::single(s), vec![place], eps_finite)
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    if items.is_empty() {
        return "(none)".into();
    }
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn render_text(r: &AnalysisRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "strings: {}", r.strings);
    let _ = writeln!(out, "n: {}  g: {}", r.n, r.g);
    for (sigma, p) in r.places.iter().enumerate() {
        let dp = &p.distinguished_pair;
        let _ = writeln!(out, "place {}: {}", sigma + 1, p.string);
        let _ = writeln!(out, "  area: {}  arch sign: {}", p.area, p.sign);
        match &p.b {
            Some(b) => {
                let _ = writeln!(out, "  a: {}  b: {}", p.a, b);
            }
            None => {
                let _ = writeln!(out, "  a: {}", p.a);
            }
        }
        for line in &p.tableau {
            let _ = writeln!(out, "    {line}");
        }
        let _ = writeln!(out, "  chi: ({}, {})  hc: ({}, {})", dp.chi_small, dp.chi_big, dp.hc_small, dp.hc_big);
        let _ = writeln!(out, "  pair: {} ⊂ {}", dp.sig_small, dp.sig_big);
        let _ = writeln!(out, "  selmer cells: w {}  w̄ {}", p.selmer.rank_w(), p.selmer.rank_wbar());
        if let Some(strip) = &p.critical_strip {
            let _ = writeln!(out, "  critical strip: {}", join(strip));
        }
        let _ = writeln!(out, "  nearby: {}", join(&p.nearby));
        let _ = writeln!(out, "  block moves: {}", join(&p.block_moves));
    }
    let _ = writeln!(out, "global sign: {} (eps_finite {})", r.global_sign, r.eps_finite);
    let _ = writeln!(
        out,
        "classification: {} (predicted rank {})",
        r.classification.classification, r.classification.predicted_rank
    );
    out
}
