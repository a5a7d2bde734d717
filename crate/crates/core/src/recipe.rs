//! The archimedean distinguished-pair recipe.
//!
//! For a string with tableau `T`, the distinguished characters are
//! `chi_n(e_i) = (-1)^{#{j : a_i > b_j}}` (row counts of `T`) and
//! `chi_{n-1}(f_j) = (-1)^{#{i : a_i > b_{n-j}}}` (column `n-j` of `T`; the
//! reversal comes from the contragredient on the small parameter). The
//! Harish-Chandra codes are these plus the alternating pattern.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::ops::Mul;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::discrete_series::{
    coherent_degree, hc_from_endoscopic, hc_from_endoscopic_with, signature_of, BinaryCode, GenericDatum, Signature,
};
use crate::error::{Error, Result};
use crate::weights::{enumerate_strings, InterlacingString, MultiPlaceString, Symbol};

/// Default upper bound on `n` for the exhaustive fiber and graph commands.
pub const DEFAULT_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, |acc, s| acc * s)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(Error::InvalidHalfInt(other.to_string())),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i32(self.as_i32())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coherence {
    Coherent,
    Incoherent,
}

impl Coherence {
    pub fn from_sign(global: Sign) -> Self {
        match global {
            Sign::Plus => Coherence::Coherent,
            Sign::Minus => Coherence::Incoherent,
        }
    }
}

impl fmt::Display for Coherence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coherence::Coherent => "coherent",
            Coherence::Incoherent => "incoherent",
        })
    }
}

/// `(chi_small, chi_big)` as endoscopic codes: bit set means the character is
/// `-1` on that generator.
pub fn distinguished_characters(s: &InterlacingString) -> (BinaryCode, BinaryCode) {
    let n = s.n();
    let big = BinaryCode::new(s.row_counts().iter().map(|r| r % 2 == 1).collect());
    let cols = s.column_counts();
    // bit j of the small code reads column n - j
    let small = BinaryCode::new((1..n).map(|j| cols[n - j - 1] % 2 == 1).collect());
    (small, big)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DistinguishedPair {
    pub chi_small: BinaryCode,
    pub chi_big: BinaryCode,
    pub hc_small: BinaryCode,
    pub hc_big: BinaryCode,
    pub sig_small: Signature,
    pub sig_big: Signature,
}

impl DistinguishedPair {
    pub fn n(&self) -> usize {
        self.hc_big.len()
    }
}

pub fn distinguished_pair(s: &InterlacingString) -> DistinguishedPair {
    let (chi_small, chi_big) = distinguished_characters(s);
    let hc_small = hc_from_endoscopic(&chi_small);
    let hc_big = hc_from_endoscopic(&chi_big);
    DistinguishedPair {
        sig_small: signature_of(&hc_small),
        sig_big: signature_of(&hc_big),
        chi_small,
        chi_big,
        hc_small,
        hc_big,
    }
}

/// The ones in the big code exceed those in the small code by 1 for even `n`
/// and by 0 for odd `n`.
pub fn check_relevancy(dp: &DistinguishedPair) -> bool {
    let expected = if dp.n().is_multiple_of(2) { 1 } else { 0 };
    dp.hc_big.count_ones() as i64 - dp.hc_small.count_ones() as i64 == expected
}

/// `(-1)^{area}`.
pub fn arch_root_number(s: &InterlacingString) -> Sign {
    Sign::from_parity(s.area())
}

/// The finite part `eps_T` of the global root number, supplied by the caller,
/// together with the number of archimedean places.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RootLedger {
    pub eps_finite: Sign,
    pub g: usize,
}

impl RootLedger {
    pub fn new(eps_finite: Sign, g: usize) -> Self {
        Self { eps_finite, g }
    }
}

pub fn global_root_number(ledger: &RootLedger, m: &MultiPlaceString) -> Result<Sign> {
    if ledger.g != m.g() {
        return Err(Error::PlaceMismatch {
            expected: ledger.g,
            found: m.g(),
        });
    }
    Ok(ledger.eps_finite * m.strings().iter().map(arch_root_number).product::<Sign>())
}

/// The pair of Harish-Chandra codes chosen by the recipe.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DistValue {
    pub small: BinaryCode,
    pub big: BinaryCode,
}

impl fmt::Display for DistValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.small, self.big)
    }
}

pub fn dist(s: &InterlacingString) -> DistValue {
    let dp = distinguished_pair(s);
    DistValue {
        small: dp.hc_small,
        big: dp.hc_big,
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BoundExceeded {
            what: "n (must be at least 1)",
            value: 0,
            bound: 1,
        });
    }
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n as i64,
            bound: bound as i64,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub value: DistValue,
    pub strings: Vec<InterlacingString>,
}

/// Strings of rank `n` grouped by their `dist` value. Fibers are ordered by
/// their smallest string; strings inside a fiber are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberPartition {
    pub n: usize,
    pub string_count: usize,
    pub fibers: Vec<Fiber>,
}

impl FiberPartition {
    pub fn image_size(&self) -> usize {
        self.fibers.len()
    }

    pub fn is_injective(&self) -> bool {
        self.fibers.iter().all(|f| f.strings.len() == 1)
    }

    pub fn fiber_of(&self, s: &InterlacingString) -> Option<&Fiber> {
        self.fibers.iter().find(|f| f.strings.contains(s))
    }
}

pub fn dist_fibers(n: usize, bound: usize) -> Result<FiberPartition> {
    check_bound(n, bound)?;
    let strings = enumerate_strings(n);
    let values: Vec<DistValue> = strings.par_iter().map(dist).collect();
    let mut index: HashMap<&DistValue, usize> = HashMap::new();
    let mut fibers: Vec<Fiber> = Vec::new();
    for (s, v) in strings.iter().zip(&values) {
        let i = *index.entry(v).or_insert_with(|| {
            fibers.push(Fiber {
                value: v.clone(),
                strings: Vec::new(),
            });
            fibers.len() - 1
        });
        fibers[i].strings.push(s.clone());
    }
    Ok(FiberPartition {
        n,
        string_count: strings.len(),
        fibers,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberConnectivityReport {
    pub partition: FiberPartition,
    /// Per fiber: is it a single component of the block-move graph?
    pub connected: Vec<bool>,
    pub all_connected: bool,
    /// Does every block-move edge stay inside one fiber?
    pub block_classes_within_fibers: bool,
    pub block_class_count: usize,
}

/// Compares `dist` fibers with the classes of the `AABB <-> BBAA` move.
/// Reports only; whether the two partitions coincide is an open question.
pub fn fiber_connectivity_report(n: usize, bound: usize) -> Result<FiberConnectivityReport> {
    let partition = dist_fibers(n, bound)?;
    let strings = enumerate_strings(n);
    let position: HashMap<&InterlacingString, usize> = strings.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut classes = UnionFind::<usize>::new(strings.len());
    let mut within = true;
    let fiber_index: HashMap<&InterlacingString, usize> = partition
        .fibers
        .iter()
        .enumerate()
        .flat_map(|(fi, f)| f.strings.iter().map(move |s| (s, fi)))
        .collect();
    for (i, s) in strings.iter().enumerate() {
        for t in s.block_moves() {
            classes.union(i, position[&t]);
            within &= fiber_index[s] == fiber_index[&t];
        }
    }
    let connected: Vec<bool> = partition
        .fibers
        .iter()
        .map(|f| {
            let root = classes.find(position[&f.strings[0]]);
            f.strings.iter().all(|s| classes.find(position[s]) == root)
        })
        .collect();
    let mut roots: Vec<usize> = (0..strings.len()).map(|i| classes.find(i)).collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(FiberConnectivityReport {
        all_connected: connected.iter().all(|&c| c),
        connected,
        block_classes_within_fibers: within,
        block_class_count: roots.len(),
        partition,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallNode {
    pub string: InterlacingString,
    pub area: usize,
    pub sign: Sign,
    pub coherence: Coherence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Nearby,
    Block,
}

impl MoveKind {
    fn dot_style(self) -> &'static str {
        match self {
            MoveKind::Nearby => "solid",
            MoveKind::Block => "dashed",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Nearby => "nearby",
            MoveKind::Block => "block",
        })
    }
}

/// Undirected edge between node indices, `from < to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WallEdge {
    pub from: usize,
    pub to: usize,
    pub kind: MoveKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallGraph {
    pub n: usize,
    pub eps_finite: Sign,
    pub nodes: Vec<WallNode>,
    pub edges: Vec<WallEdge>,
}

impl WallGraph {
    pub fn edges_of(&self, kind: MoveKind) -> impl Iterator<Item = &WallEdge> {
        self.edges.iter().filter(move |e| e.kind == kind)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph walls_n{} {{", self.n);
        let _ = writeln!(out, "  // eps_finite = {}", self.eps_finite);
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        for node in &self.nodes {
            let _ = writeln!(
                out,
                "  \"{s}\" [label=\"{s}\", area={a}, sign=\"{g}\", coherence=\"{c}\", style={st}];",
                s = node.string,
                a = node.area,
                g = node.sign,
                c = node.coherence,
                st = match node.coherence {
                    Coherence::Coherent => "solid",
                    Coherence::Incoherent => "filled",
                },
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [move=\"{}\", style={}];",
                self.nodes[e.from].string,
                self.nodes[e.to].string,
                e.kind,
                e.kind.dot_style()
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Nodes are all strings of rank `n`; edges are nearby moves and block moves.
/// Each node is classified with `ledger.eps_finite` (one place, `g = 1`).
pub fn wall_graph(n: usize, ledger: &RootLedger, bound: usize) -> Result<WallGraph> {
    check_bound(n, bound)?;
    if ledger.g != 1 {
        return Err(Error::PlaceMismatch {
            expected: 1,
            found: ledger.g,
        });
    }
    let strings = enumerate_strings(n);
    let position: HashMap<&InterlacingString, usize> = strings.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let nodes: Vec<WallNode> = strings
        .par_iter()
        .map(|s| {
            let sign = arch_root_number(s);
            WallNode {
                string: s.clone(),
                area: s.area(),
                sign,
                coherence: Coherence::from_sign(ledger.eps_finite * sign),
            }
        })
        .collect();
    let mut edges: Vec<WallEdge> = strings
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, s)| {
            let near = s.nearby().into_iter().map(|t| (t, MoveKind::Nearby));
            let block = s.block_moves().into_iter().map(|t| (t, MoveKind::Block));
            near.chain(block)
                .filter_map(|(t, kind)| {
                    let j = position[&t];
                    (i < j).then_some(WallEdge { from: i, to: j, kind })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    edges.sort_unstable();
    Ok(WallGraph {
        n,
        eps_finite: ledger.eps_finite,
        nodes,
        edges,
    })
}

/// The diagonal string with its first `p` corner cells `(1,1), ..., (p,p)`
/// removed: `(BA)^p (AB)^{n-1-p} A`.
pub fn harris_family_string(n: usize, p: usize) -> InterlacingString {
    assert!(n >= 1 && p < n, "block length must be below n");
    let mut word = Vec::with_capacity(2 * n - 1);
    for _ in 0..p {
        word.extend([Symbol::B, Symbol::A]);
    }
    for _ in p..n - 1 {
        word.extend([Symbol::A, Symbol::B]);
    }
    word.push(Symbol::A);
    InterlacingString::new(word).expect("well-formed by construction")
}

/// Coherent-cohomology degrees of the distinguished codes along the family
/// produced by [`harris_family_string`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarrisRow {
    pub n: usize,
    pub block: usize,
    pub string: InterlacingString,
    pub hc_small: BinaryCode,
    pub hc_big: BinaryCode,
    pub q_small: usize,
    pub q_big: usize,
    /// Degrees when even-rank packets are labelled with the other generic datum.
    pub q_small_psi: usize,
    pub q_big_psi: usize,
}

impl HarrisRow {
    /// `q_{n-1} = q_n = 0`.
    pub fn holomorphic_numerology(&self) -> bool {
        self.q_small == 0 && self.q_big == 0
    }

    pub fn holomorphic_numerology_psi(&self) -> bool {
        self.q_small_psi == 0 && self.q_big_psi == 0
    }
}

pub fn harris_numerology(n: usize) -> Vec<HarrisRow> {
    (0..n)
        .map(|p| {
            let s = harris_family_string(n, p);
            let dp = distinguished_pair(&s);
            let psi_small = hc_from_endoscopic_with(&dp.chi_small, GenericDatum::Psi);
            let psi_big = hc_from_endoscopic_with(&dp.chi_big, GenericDatum::Psi);
            HarrisRow {
                n,
                block: p,
                q_small: coherent_degree(&dp.hc_small),
                q_big: coherent_degree(&dp.hc_big),
                q_small_psi: coherent_degree(&psi_small),
                q_big_psi: coherent_degree(&psi_big),
                hc_small: dp.hc_small,
                hc_big: dp.hc_big,
                string: s,
            }
        })
        .collect()
}
