//! Integer and sign bookkeeping behind the Selmer-rank predictions: cell
//! conditions, Hodge-Tate weights, the critical strip, Greenberg-Wiles rank
//! arithmetic and the coherent / incoherent split.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::recipe::{arch_root_number, global_root_number, Coherence, RootLedger, Sign};
use crate::weights::{interlace, Cell, HalfInt, InfinitesimalCharacter, InterlacingString, MultiPlaceString};

/// Classical name of a local condition when `n = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalCondition {
    Relaxed,
    Strict,
    Ordinary,
}

impl fmt::Display for ClassicalCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalCondition::Relaxed => "rel",
            ClassicalCondition::Strict => "str",
            ClassicalCondition::Ordinary => "ord",
        })
    }
}

/// Cells cut out at the two places above `p`: `cells_w` carries
/// `v_i ⊗ w_j^∨` with `a_i > b_j`, `cells_wbar` the duals with `a_i < b_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SelmerCondition {
    pub n: usize,
    pub cells_w: BTreeSet<Cell>,
    pub cells_wbar: BTreeSet<Cell>,
}

impl SelmerCondition {
    pub fn rank_w(&self) -> usize {
        self.cells_w.len()
    }

    pub fn rank_wbar(&self) -> usize {
        self.cells_wbar.len()
    }

    /// `|cells_w| + |cells_wbar| = n(n-1)`.
    pub fn is_self_dual(&self) -> bool {
        self.rank_w() + self.rank_wbar() == self.n * (self.n - 1)
    }

    /// `(w, w̄)` names for `n = 2`; `None` otherwise.
    pub fn classical_label(&self) -> Option<(ClassicalCondition, ClassicalCondition)> {
        if self.n != 2 {
            return None;
        }
        let name = |k: usize| match k {
            0 => ClassicalCondition::Strict,
            2 => ClassicalCondition::Relaxed,
            _ => ClassicalCondition::Ordinary,
        };
        Some((name(self.rank_w()), name(self.rank_wbar())))
    }
}

pub fn selmer_condition(s: &InterlacingString) -> SelmerCondition {
    let t = s.to_tableau();
    SelmerCondition {
        n: s.n(),
        cells_w: t.shaded().clone(),
        cells_wbar: t.unshaded(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CellWeight {
    pub row: usize,
    pub col: usize,
    pub wt_w: i64,
    pub wt_wbar: i64,
}

/// Hodge-Tate weights of `v_i ⊗ w_j^∨`, row-major over `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CellWeightTable {
    pub n: usize,
    pub offset: i64,
    pub cells: Vec<CellWeight>,
}

impl CellWeightTable {
    /// 1-indexed.
    pub fn get(&self, row: usize, col: usize) -> &CellWeight {
        &self.cells[(row - 1) * (self.n - 1) + (col - 1)]
    }
}

/// `wt_w = b_j - a_i + 1/2`, `wt_wbar = a_i - b_j + 1/2`.
pub fn cell_weights(a: &InfinitesimalCharacter, b: &InfinitesimalCharacter) -> Result<CellWeightTable> {
    cell_weights_twisted(a, b, 0)
}

/// As [`cell_weights`], with a global Tate twist `offset` added at both places.
pub fn cell_weights_twisted(
    a: &InfinitesimalCharacter,
    b: &InfinitesimalCharacter,
    offset: i64,
) -> Result<CellWeightTable> {
    interlace(a, b)?;
    let n = a.rank();
    let mut cells = Vec::with_capacity(n * (n - 1));
    for (i, &ai) in a.entries().iter().enumerate() {
        for (j, &bj) in b.entries().iter().enumerate() {
            let w = bj - ai + HalfInt::HALF;
            let wbar = ai - bj + HalfInt::HALF;
            cells.push(CellWeight {
                row: i + 1,
                col: j + 1,
                wt_w: w.to_integer().expect("opposite parities give integer weights") + offset,
                wt_wbar: wbar.to_integer().expect("opposite parities give integer weights") + offset,
            });
        }
    }
    Ok(CellWeightTable { n, offset, cells })
}

/// Shaded cells have non-positive weight at `w` and unshaded ones positive
/// weight; at `w̄` the roles of the two cell sets swap. Shading comes from the
/// string, weights from the formula, so the check is not circular.
pub fn check_panchishkin(a: &InfinitesimalCharacter, b: &InfinitesimalCharacter) -> Result<bool> {
    let tableau = interlace(a, b)?.to_tableau();
    let table = cell_weights(a, b)?;
    Ok(table.cells.iter().all(|c| {
        if tableau.is_shaded(c.row, c.col) {
            c.wt_w <= 0 && c.wt_wbar >= 1
        } else {
            c.wt_w >= 1 && c.wt_wbar <= 0
        }
    }))
}

/// Integers `s` with `|s| <= min |b_j - a_i| + 1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CriticalStrip {
    pub half_width: i64,
}

impl CriticalStrip {
    pub fn contains(&self, s: i64) -> bool {
        s.abs() <= self.half_width
    }

    pub fn values(&self) -> Vec<i64> {
        (-self.half_width..=self.half_width).collect()
    }
}

pub fn critical_strip(a: &InfinitesimalCharacter, b: &InfinitesimalCharacter) -> Result<CriticalStrip> {
    interlace(a, b)?;
    let min_gap = a
        .entries()
        .iter()
        .flat_map(|&ai| b.entries().iter().map(move |&bj| (bj - ai).abs()))
        .min()
        .expect("both characters are non-empty");
    Ok(CriticalStrip {
        half_width: (min_gap + HalfInt::HALF).to_integer().expect("gaps are half-odd"),
    })
}

/// The `i`-th graded piece `α_i χ_cyc^{a_i - (n-1)/2}` of an ordinary filtration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GradedCharacter {
    pub index: usize,
    pub unramified_label: String,
    pub cyclotomic_exponent: HalfInt,
}

impl GradedCharacter {
    pub fn hodge_tate_weight(&self) -> HalfInt {
        -self.cyclotomic_exponent
    }
}

/// `alpha_1, ..., alpha_n`.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("alpha_{i}")).collect()
}

pub fn ordinary_graded(a: &InfinitesimalCharacter, labels: &[String]) -> Result<Vec<GradedCharacter>> {
    let n = a.rank();
    if labels.len() != n {
        return Err(Error::LabelCountMismatch {
            expected: n,
            found: labels.len(),
        });
    }
    let mut seen = HashSet::new();
    if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
        return Err(Error::DuplicateLabel(dup.clone()));
    }
    let centre = HalfInt::from_doubled(n as i64 - 1);
    Ok(a.entries()
        .iter()
        .zip(labels)
        .enumerate()
        .map(|(i, (&ai, label))| GradedCharacter {
            index: i + 1,
            unramified_label: label.clone(),
            cyclotomic_exponent: ai - centre,
        })
        .collect())
}

/// Ranks of the chosen local subspaces at `(w, w̄)`, one pair per place.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SelmerDatum {
    pub n: usize,
    pub places: Vec<(usize, usize)>,
}

impl SelmerDatum {
    pub fn new(n: usize, places: Vec<(usize, usize)>) -> Result<Self> {
        if places.is_empty() {
            return Err(Error::NoPlaces);
        }
        let dim = n * n.saturating_sub(1);
        for &(w, wbar) in &places {
            let rank = w.max(wbar);
            if rank > dim {
                return Err(Error::RankOutOfRange { rank, dim });
            }
        }
        Ok(Self { n, places })
    }

    /// The self-dual condition `(area, N - area)` at every place.
    pub fn from_strings(m: &MultiPlaceString) -> Self {
        let places = m
            .strings()
            .iter()
            .map(|s| (s.area(), s.n() * (s.n() - 1) - s.area()))
            .collect();
        Self { n: m.n(), places }
    }

    /// `s` at `w` and `t` at `w̄` on every place; self-dual where they agree.
    pub fn mixed(s: &MultiPlaceString, t: &MultiPlaceString) -> Result<Self> {
        if s.g() != t.g() {
            return Err(Error::PlaceMismatch {
                expected: s.g(),
                found: t.g(),
            });
        }
        if s.n() != t.n() {
            return Err(Error::MixedRanks);
        }
        let places = s
            .strings()
            .iter()
            .zip(t.strings())
            // shaded cells number area(x); unshaded ones N - area(y)
            .map(|(x, y)| (x.area(), x.n() * (x.n() - 1) - y.area()))
            .collect();
        Ok(Self { n: s.n(), places })
    }

    pub fn g(&self) -> usize {
        self.places.len()
    }

    /// `N = n(n-1)`.
    pub fn big_n(&self) -> usize {
        self.n * self.n.saturating_sub(1)
    }
}

/// `-g·N + Σ (rank_w + rank_wbar)`; places away from `p` contribute 0.
pub fn gw_rank_delta(d: &SelmerDatum) -> i64 {
    let local: i64 = d.places.iter().map(|&(w, wbar)| (w + wbar) as i64).sum();
    local - (d.g() * d.big_n()) as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Classification {
    pub global_sign: Sign,
    pub classification: Coherence,
    pub predicted_rank: usize,
}

impl Classification {
    pub fn from_sign(global_sign: Sign) -> Self {
        let classification = Coherence::from_sign(global_sign);
        Self {
            global_sign,
            classification,
            predicted_rank: match classification {
                Coherence::Coherent => 0,
                Coherence::Incoherent => 1,
            },
        }
    }

    pub fn is_coherent(&self) -> bool {
        self.classification == Coherence::Coherent
    }
}

pub fn classify(m: &MultiPlaceString, ledger: &RootLedger) -> Result<Classification> {
    Ok(Classification::from_sign(global_root_number(ledger, m)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborReport {
    pub string: MultiPlaceString,
    /// 0-indexed place at which the neighbour differs.
    pub place: usize,
    pub classification: Coherence,
    pub predicted_rank: usize,
    /// Rank delta of the mixed condition: `m` at `w`, neighbour at `w̄`.
    pub gw_delta: i64,
    /// Exactly one of `m` and the neighbour is incoherent.
    pub exactly_one_incoherent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallCrossingReport {
    pub strings: MultiPlaceString,
    pub area: Vec<usize>,
    pub sign: Vec<Sign>,
    pub eps_finite: Sign,
    pub global_sign: Sign,
    pub classification: Coherence,
    pub predicted_rank: usize,
    pub neighbors: Vec<NeighborReport>,
    pub exactly_one_incoherent: bool,
}

impl WallCrossingReport {
    /// Neighbours on the other side of the coherent / incoherent divide.
    pub fn partners(&self) -> impl Iterator<Item = &NeighborReport> {
        self.neighbors.iter().filter(|n| n.classification != self.classification)
    }
}

pub fn wall_crossing_report(m: &MultiPlaceString, ledger: &RootLedger) -> Result<WallCrossingReport> {
    let own = classify(m, ledger)?;
    let neighbors = m
        .nearby()
        .into_iter()
        .map(|t| {
            let c = classify(&t, ledger)?;
            let place = m.nearby_place(&t).expect("nearby() yields nearby tuples");
            Ok(NeighborReport {
                gw_delta: gw_rank_delta(&SelmerDatum::mixed(m, &t)?),
                exactly_one_incoherent: c.classification != own.classification,
                classification: c.classification,
                predicted_rank: c.predicted_rank,
                string: t,
                place,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WallCrossingReport {
        area: m.strings().iter().map(InterlacingString::area).collect(),
        sign: m.strings().iter().map(arch_root_number).collect(),
        eps_finite: ledger.eps_finite,
        global_sign: own.global_sign,
        classification: own.classification,
        predicted_rank: own.predicted_rank,
        exactly_one_incoherent: neighbors.iter().all(|n| n.exactly_one_incoherent),
        neighbors,
        strings: m.clone(),
    })
}
