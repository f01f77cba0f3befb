//! Combinatorial structure of the 2-exponent slice of the naturals triangle,
//! and the empirical checkers built on top of it: ruler words and their
//! difference/bubble operators, Pascal-mod-2 triangles, a closed-form
//! predictor for every 2-exponent, soliton extraction, and square-free
//! west-edge verification.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::arith::FactoredNat;
use crate::gf2::binom_odd;
use crate::triangle::{
    west_edge, windowed_tomography, InitialGeneration, Tomography, TriangleError, WestEdge,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("absolute differences need at least 2 terms, got {0}")]
    AlphaTooShort(usize),
    #[error("soliton seeds need power g >= 2, got {0}")]
    PowerTooSmall(u32),
    #[error("cell cap {0} is too small for any window")]
    CapTooSmall(u64),
    #[error(transparent)]
    Triangle(#[from] TriangleError),
}

/// The two ruler sequences: variant `W0` is the 2-valuation of 1, 2, 3, ...
/// and `W1` is the same shifted up by one (the 2-valuation of 2, 4, 6, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RulerVariant {
    W0,
    W1,
}

/// First `n` terms of a ruler sequence, built by the doubling concatenation
/// `word -> word ++ [next] ++ word`.
pub fn ruler_word(variant: RulerVariant, n: usize) -> Vec<u32> {
    assert!(n >= 1);
    let (mut word, mut middle) = match variant {
        RulerVariant::W0 => (vec![0u32], 1u32),
        RulerVariant::W1 => (vec![1u32], 2u32),
    };
    while word.len() < n {
        let mut grown = Vec::with_capacity(2 * word.len() + 1);
        grown.extend_from_slice(&word);
        grown.push(middle);
        grown.extend_from_slice(&word);
        word = grown;
        middle += 1;
    }
    word.truncate(n);
    word
}

/// Absolute differences of consecutive terms; one term shorter.
pub fn alpha(seq: &[u32]) -> Result<Vec<u32>, StructureError> {
    if seq.len() < 2 {
        return Err(StructureError::AlphaTooShort(seq.len()));
    }
    Ok(seq.windows(2).map(|w| w[0].abs_diff(w[1])).collect())
}

/// Each term duplicated in place ("bubbled"); twice as long.
pub fn beta(seq: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(2 * seq.len());
    for &x in seq {
        out.push(x);
        out.push(x);
    }
    out
}

/// Pascal triangle mod 2 of height `h`, with odd entries carrying `weight`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P2Triangle {
    height: usize,
    weight: u16,
    rows: Vec<Vec<u16>>,
}

impl P2Triangle {
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn weight(&self) -> u16 {
        self.weight
    }

    /// Row `r`, 1-based; it has `r` cells.
    pub fn row(&self, r: usize) -> &[u16] {
        &self.rows[r - 1]
    }

    pub fn rows(&self) -> &[Vec<u16>] {
        &self.rows
    }
}

pub fn p2_triangle(h: usize, weight: u16) -> P2Triangle {
    assert!(h >= 1);
    let rows = (0..h as u64)
        .map(|r| {
            (0..=r)
                .map(|c| if binom_odd(r, c) { weight } else { 0 })
                .collect()
        })
        .collect();
    P2Triangle {
        height: h,
        weight,
        rows,
    }
}

/// 2-valuation of `n`.
fn v2(n: u64) -> u32 {
    n.trailing_zeros()
}

/// Weight of the `i`-th Pascal triangle in a slice: the bubbled shifted
/// ruler sequence evaluated lazily.
fn bubbled_weight(i: u64) -> u16 {
    (v2(i.div_ceil(2)) + 1) as u16
}

/// 2-exponent of cell `(j, k)` of the naturals triangle, from the slice
/// structure alone (no evolution).
///
/// Row 1 is the ruler sequence. For `j >= 2` the row lies in the slice of
/// height `h = ` largest power of two below `j`; that slice is tiled by
/// Pascal-mod-2 triangles of height `h` whose apexes sit on its first row at
/// columns `h, 2h, 3h, ...` and whose weights follow the bubbled shifted
/// ruler sequence.
pub fn predict_v2(j: u64, k: u64) -> u16 {
    assert!(j >= 1 && k >= 1, "cells are 1-based");
    if j == 1 {
        return v2(k) as u16;
    }
    let h = prev_power_of_two(j - 1);
    let depth = j - h - 1;
    let triangle_index = k.div_ceil(h);
    let offset = triangle_index * h - k;
    if offset <= depth && binom_odd(depth, offset) {
        bubbled_weight(triangle_index)
    } else {
        0
    }
}

fn prev_power_of_two(n: u64) -> u64 {
    debug_assert!(n >= 1);
    1 << (63 - n.leading_zeros())
}

/// A connected cluster of cells with exponent at least 2, grown from the
/// first-row cell `p^g`.
///
/// Cells are absolute `(row, column)` pairs, sorted. Connectivity follows
/// the brick layout: left/right siblings, the two parents, and the two
/// children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonReport {
    pub prime: u64,
    pub power: u32,
    pub cells: Vec<(u32, u64)>,
    /// (min row, max row, min column, max column).
    pub bounding_box: (u32, u32, u64, u64),
    /// True when the component was cut off by the window budget, so cells
    /// and completeness are not final.
    pub touched_boundary: bool,
    pub max_exponent: u16,
    /// Half-width of the window the final extraction ran in.
    pub half_width: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct SolitonOptions {
    /// Window half-width to start from; defaults to `4 * p^ceil(g/2)`.
    pub initial_half_width: Option<u64>,
    /// Budget on window cells; the window stops doubling beyond it.
    pub cell_cap: u64,
}

impl Default for SolitonOptions {
    fn default() -> Self {
        SolitonOptions {
            initial_half_width: None,
            cell_cap: 1 << 20,
        }
    }
}

/// The six neighbors of a cell in the brick lattice, in window-relative
/// coordinates (`row`, `index`); entries may underflow off the lattice and
/// are filtered by the caller.
fn neighbors(j: i64, i: i64) -> [(i64, i64); 6] {
    [
        (j, i - 1),
        (j, i + 1),
        (j - 1, i),
        (j - 1, i + 1),
        (j + 1, i - 1),
        (j + 1, i),
    ]
}

fn largest_half_width_within(cell_cap: u64) -> u64 {
    let mut h = (((8.0 * cell_cap as f64 + 1.0).sqrt() - 1.0) / 4.0) as u64;
    while h > 0 && (2 * h + 1).saturating_mul(h) > cell_cap {
        h -= 1;
    }
    while (2 * (h + 1) + 1).saturating_mul(h + 1) <= cell_cap {
        h += 1;
    }
    h
}

/// Extracts the soliton seeded at `p^g` by flood fill over exponents >= 2
/// inside a window, doubling the window whenever the component reaches its
/// rim, within the cell budget.
pub fn extract_soliton(
    p: u64,
    g: u32,
    opts: SolitonOptions,
) -> Result<SolitonReport, StructureError> {
    if g < 2 {
        return Err(StructureError::PowerTooSmall(g));
    }
    let center = (p as u128)
        .checked_pow(g)
        .filter(|&v| v <= u64::MAX as u128)
        .ok_or(TriangleError::SeedOverflow)? as u64;
    let cap_hw = largest_half_width_within(opts.cell_cap);
    if cap_hw == 0 {
        return Err(StructureError::CapTooSmall(opts.cell_cap));
    }
    let max_hw = cap_hw.min(center - 1);
    let start = opts
        .initial_half_width
        .unwrap_or_else(|| 4u64.saturating_mul(saturating_pow(p, g.div_ceil(2))))
        .clamp(1, max_hw);
    let mut hw = start;
    loop {
        let tomo = windowed_tomography(p, g, hw, hw as usize)?;
        let (cells, max_exponent, touched) = flood_fill(&tomo, center);
        if !touched || hw == max_hw {
            let bounding_box = bounding_box(&cells);
            return Ok(SolitonReport {
                prime: p,
                power: g,
                cells,
                bounding_box,
                touched_boundary: touched,
                max_exponent,
                half_width: hw,
            });
        }
        hw = (hw * 2).min(max_hw);
    }
}

fn saturating_pow(p: u64, e: u32) -> u64 {
    let mut acc = 1u64;
    for _ in 0..e {
        acc = acc.saturating_mul(p);
    }
    acc
}

fn flood_fill(tomo: &Tomography, seed_col: u64) -> (Vec<(u32, u64)>, u16, bool) {
    let offset = tomo.window_offset();
    let depth = tomo.depth() as i64;
    let width = tomo.row(1).len() as i64;
    let at = |j: i64, i: i64| -> Option<u16> {
        if j < 1 || j > depth || i < 0 || i >= width {
            None
        } else {
            tomo.rows()[j as usize - 1][i as usize]
        }
    };
    let seed = (1i64, (seed_col - offset) as i64);
    let mut member: HashSet<(i64, i64)> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut touched = false;
    let mut max_exponent = 0u16;
    if at(seed.0, seed.1).is_some_and(|v| v >= 2) {
        member.insert(seed);
        queue.push_back(seed);
    }
    while let Some((j, i)) = queue.pop_front() {
        max_exponent = max_exponent.max(at(j, i).unwrap_or(0));
        for (nj, ni) in neighbors(j, i) {
            if nj < 1 {
                continue; // above the first generation: no such cells
            }
            let absolute_col = offset as i64 + ni;
            if absolute_col < 1 {
                continue; // left of the matrix itself
            }
            match at(nj, ni) {
                Some(v) => {
                    if v >= 2 && member.insert((nj, ni)) {
                        queue.push_back((nj, ni));
                    }
                }
                // Unknown neighbor: the component is not verifiably closed.
                None => touched = true,
            }
        }
    }
    let mut cells: Vec<(u32, u64)> = member
        .into_iter()
        .map(|(j, i)| (j as u32, (offset as i64 + i) as u64))
        .collect();
    cells.sort_unstable();
    (cells, max_exponent, touched)
}

fn bounding_box(cells: &[(u32, u64)]) -> (u32, u32, u64, u64) {
    let mut bb = (u32::MAX, 0u32, u64::MAX, 0u64);
    for &(j, k) in cells {
        bb.0 = bb.0.min(j);
        bb.1 = bb.1.max(j);
        bb.2 = bb.2.min(k);
        bb.3 = bb.3.max(k);
    }
    if cells.is_empty() {
        (0, 0, 0, 0)
    } else {
        bb
    }
}

/// Relation between one pair of solitons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonPair {
    pub power_a: u32,
    pub power_b: u32,
    pub overlap: bool,
    /// Brick-lattice adjacency (siblings, parents, children).
    pub touching: bool,
    /// Minimal separation in half-column units: `max(2|dr|, |2dc + dr|)`
    /// over all cell pairs. Adjacent cells are at 2; a diagonal corner
    /// contact shows up as 3 with a row difference of 1.
    pub min_half_gap: u64,
    pub closest: ((u32, u64), (u32, u64)),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolitonDisjointness {
    pub prime: u64,
    pub solitons: Vec<SolitonReport>,
    pub pairs: Vec<SolitonPair>,
    /// Powers whose extraction was cut off by the window budget.
    pub incomplete: Vec<u32>,
    /// No overlap and no touching across all checked pairs.
    pub all_disjoint: bool,
}

/// Extracts solitons for `g = 2..=g_max` and reports every pairwise
/// relation. Incomplete extractions are reported, not failed.
pub fn check_soliton_disjointness(
    p: u64,
    g_max: u32,
    opts: SolitonOptions,
) -> Result<SolitonDisjointness, StructureError> {
    if g_max < 2 {
        return Err(StructureError::PowerTooSmall(g_max));
    }
    let solitons: Vec<SolitonReport> = (2..=g_max)
        .map(|g| extract_soliton(p, g, opts))
        .collect::<Result<_, _>>()?;
    let mut pairs = Vec::new();
    for a in 0..solitons.len() {
        for b in a + 1..solitons.len() {
            pairs.push(relate(&solitons[a], &solitons[b]));
        }
    }
    let incomplete: Vec<u32> = solitons
        .iter()
        .filter(|s| s.touched_boundary)
        .map(|s| s.power)
        .collect();
    let all_disjoint = pairs.iter().all(|p| !p.overlap && !p.touching);
    Ok(SolitonDisjointness {
        prime: p,
        solitons,
        pairs,
        incomplete,
        all_disjoint,
    })
}

fn relate(a: &SolitonReport, b: &SolitonReport) -> SolitonPair {
    let set_b: HashSet<(u32, u64)> = b.cells.iter().copied().collect();
    let overlap = a.cells.iter().any(|c| set_b.contains(c));
    let mut touching = false;
    let mut min_half_gap = u64::MAX;
    let mut closest = ((0u32, 0u64), (0u32, 0u64));
    for &(ja, ka) in &a.cells {
        for (nj, ni) in neighbors(ja as i64, ka as i64) {
            if nj >= 1 && ni >= 1 && set_b.contains(&(nj as u32, ni as u64)) {
                touching = true;
            }
        }
        for &(jb, kb) in &b.cells {
            let dr = (ja as i64 - jb as i64).unsigned_abs();
            let dpos = (2 * (ka as i64 - kb as i64) + (ja as i64 - jb as i64)).unsigned_abs();
            let gap = (2 * dr).max(dpos);
            if gap < min_half_gap {
                min_half_gap = gap;
                closest = ((ja, ka), (jb, kb));
            }
        }
    }
    SolitonPair {
        power_a: a.power,
        power_b: b.power,
        overlap,
        touching,
        min_half_gap,
        closest,
    }
}

/// Outcome of scanning a west edge for square divisors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeWestReport {
    pub origin: String,
    pub checked: usize,
    /// First term carrying any prime exponent >= 2, if one exists.
    pub violation: Option<(usize, FactoredNat)>,
}

pub fn check_squarefree_edge(edge: &WestEdge) -> SquarefreeWestReport {
    let violation = edge
        .terms()
        .iter()
        .enumerate()
        .find(|(_, t)| !t.is_squarefree())
        .map(|(i, t)| (i + 1, t.clone()));
    SquarefreeWestReport {
        origin: edge.origin().to_string(),
        checked: edge.len(),
        violation,
    }
}

/// Verifies that every west-edge term of `gen` up to `m` is square free.
pub fn check_squarefree_west(
    gen: &InitialGeneration,
    m: usize,
) -> Result<SquarefreeWestReport, StructureError> {
    Ok(check_squarefree_edge(&west_edge(gen, m)?))
}

/// The 2-exponents along the naturals west edge, with every index where the
/// value deviates from the rule "1 exactly at powers of two >= 2".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct V2WestProfile {
    pub bits: Vec<u8>,
    pub deviations: Vec<u64>,
}

pub fn v2_profile_of_edge(edge: &WestEdge) -> V2WestProfile {
    let bits: Vec<u8> = edge
        .terms()
        .iter()
        .map(|t| t.valuation(2).try_into().expect("tiny exponent"))
        .collect();
    let deviations = bits
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| {
            let m = i as u64 + 1;
            let expected = u8::from(m >= 2 && m.is_power_of_two());
            (b != expected).then_some(m)
        })
        .collect();
    V2WestProfile { bits, deviations }
}

pub fn v2_west_profile(m: usize) -> Result<V2WestProfile, StructureError> {
    Ok(v2_profile_of_edge(&west_edge(&InitialGeneration::Naturals, m)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::tomography;

    #[test]
    fn ruler_word_prefixes() {
        assert_eq!(
            ruler_word(RulerVariant::W0, 16),
            vec![0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 4]
        );
        assert_eq!(
            ruler_word(RulerVariant::W1, 16),
            vec![1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1, 5]
        );
        assert_eq!(ruler_word(RulerVariant::W0, 1), vec![0]);
    }

    #[test]
    fn ruler_word_is_valuation_sequence() {
        let n = 1 << 16;
        let w0 = ruler_word(RulerVariant::W0, n);
        for (i, &v) in w0.iter().enumerate() {
            assert_eq!(v, v2(i as u64 + 1), "n={}", i + 1);
        }
        let w1 = ruler_word(RulerVariant::W1, 4096);
        for (i, &v) in w1.iter().enumerate() {
            assert_eq!(v, w0[i] + 1);
        }
    }

    #[test]
    fn alpha_basics() {
        assert_eq!(alpha(&[0, 1, 0]).unwrap(), vec![1, 1]);
        assert_eq!(alpha(&[7, 7, 7, 7]).unwrap(), vec![0, 0, 0]);
        assert_eq!(alpha(&[5]), Err(StructureError::AlphaTooShort(1)));
    }

    #[test]
    fn beta_basics() {
        assert_eq!(beta(&[1, 2, 1]), vec![1, 1, 2, 2, 1, 1]);
        assert_eq!(beta(&[]), Vec::<u32>::new());
    }

    #[test]
    fn difference_of_ruler_words_is_bubbled_shift() {
        let w0 = ruler_word(RulerVariant::W0, 2049);
        let w1 = ruler_word(RulerVariant::W1, 2049);
        let a0 = alpha(&w0).unwrap();
        let a1 = alpha(&w1).unwrap();
        let b1 = beta(&w1);
        assert_eq!(a0, a1);
        assert_eq!(a0[..], b1[..2048]);
        assert_eq!(
            &b1[..32],
            &[
                1, 1, 2, 2, 1, 1, 3, 3, 1, 1, 2, 2, 1, 1, 4, 4, 1, 1, 2, 2, 1, 1, 3, 3, 1, 1,
                2, 2, 1, 1, 5, 5
            ]
        );
    }

    #[test]
    fn bubbled_weight_is_lazy_beta() {
        let w1 = ruler_word(RulerVariant::W1, 512);
        let b1 = beta(&w1);
        for i in 1..=1024u64 {
            assert_eq!(bubbled_weight(i) as u32, b1[i as usize - 1]);
        }
    }

    #[test]
    fn p2_weighted_rows() {
        let t = p2_triangle(7, 10);
        assert_eq!(t.row(1), &[10]);
        assert_eq!(t.row(3), &[10, 0, 10]);
        assert_eq!(t.row(7), &[10, 0, 10, 0, 10, 0, 10]);
        let unit = p2_triangle(4, 1);
        assert_eq!(unit.row(1), &[1]);
        assert_eq!(unit.row(2), &[1, 1]);
        assert_eq!(unit.row(3), &[1, 0, 1]);
        assert_eq!(unit.row(4), &[1, 1, 1, 1]);
        assert_eq!(p2_triangle(1, 9).row(1), &[9]);
    }

    #[test]
    fn p2_matches_seeded_difference_evolution() {
        for h in 1..=64usize {
            for t in [1u16, 2, 3, 10] {
                let triangle = p2_triangle(h, t);
                // Seed t into a zero row and take differences h-1 times.
                let mut row = vec![0u32; 2 * h - 1];
                row[h - 1] = t as u32;
                for r in 1..=h {
                    let want: Vec<u32> = triangle.row(r).iter().map(|&c| c as u32).collect();
                    let lo = h - r; // 0-based window of the triangle inside the row
                    assert_eq!(&row[lo..h], &want[..], "h={h} t={t} r={r}");
                    if r < h {
                        row = alpha(&row).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn predictor_examples() {
        assert_eq!(predict_v2(1, 8), 3);
        let row2: Vec<u16> = (1..=6).map(|k| predict_v2(2, k)).collect();
        assert_eq!(row2, vec![1, 1, 2, 2, 1, 1]);
    }

    #[test]
    fn predictor_matches_evolution() {
        let k = 129usize;
        let tomo = tomography(&InitialGeneration::Naturals, 2, k).unwrap();
        for j in 1..=k {
            for col in 1..=k - j + 1 {
                assert_eq!(
                    predict_v2(j as u64, col as u64),
                    tomo.row(j)[col - 1].unwrap(),
                    "j={j} k={col}"
                );
            }
        }
    }

    #[test]
    fn smallest_soliton() {
        let report = extract_soliton(2, 2, SolitonOptions::default()).unwrap();
        assert_eq!(report.cells, vec![(1, 4), (2, 3), (2, 4)]);
        assert_eq!(report.max_exponent, 2);
        assert!(!report.touched_boundary);
        assert_eq!(report.bounding_box, (1, 2, 3, 4));
    }

    #[test]
    fn soliton_requires_square_seed() {
        assert_eq!(
            extract_soliton(2, 1, SolitonOptions::default()),
            Err(StructureError::PowerTooSmall(1))
        );
    }

    /// Brute-force component of exponent >= 2 cells from a full tomography.
    fn component_from_full(p: u64, k: usize, seed: (u32, u64)) -> Vec<(u32, u64)> {
        let tomo = tomography(&InitialGeneration::Naturals, p, k).unwrap();
        let value = |j: i64, c: i64| -> u16 {
            if j < 1 || c < 1 || j > k as i64 || c > k as i64 - j + 1 {
                0
            } else {
                tomo.row(j as usize)[c as usize - 1].unwrap()
            }
        };
        let mut member = HashSet::new();
        let mut queue = VecDeque::new();
        let seed = (seed.0 as i64, seed.1 as i64);
        assert!(value(seed.0, seed.1) >= 2);
        member.insert(seed);
        queue.push_back(seed);
        while let Some((j, c)) = queue.pop_front() {
            for (nj, nc) in neighbors(j, c) {
                if value(nj, nc) >= 2 && member.insert((nj, nc)) {
                    queue.push_back((nj, nc));
                }
            }
        }
        let mut cells: Vec<(u32, u64)> = member
            .into_iter()
            .map(|(j, c)| (j as u32, c as u64))
            .collect();
        cells.sort_unstable();
        cells
    }

    #[test]
    fn windowed_solitons_match_brute_force() {
        for (p, g) in [(2u64, 2u32), (2, 3), (2, 4), (3, 2)] {
            let report = extract_soliton(p, g, SolitonOptions::default()).unwrap();
            assert!(!report.touched_boundary, "p={p} g={g}");
            let seed = (1u32, saturating_pow(p, g));
            assert_eq!(
                report.cells,
                component_from_full(p, 128, seed),
                "p={p} g={g}"
            );
        }
    }

    #[test]
    fn soliton_disjointness_small_powers() {
        let report =
            check_soliton_disjointness(2, 4, SolitonOptions::default()).unwrap();
        assert!(report.all_disjoint);
        assert!(report.incomplete.is_empty());
        assert_eq!(report.pairs.len(), 3);
        for pair in &report.pairs {
            assert!(!pair.overlap);
            assert!(!pair.touching);
            assert!(pair.min_half_gap > 2, "{pair:?}");
        }
    }

    #[test]
    fn disjointness_of_single_soliton_is_vacuous() {
        let report =
            check_soliton_disjointness(2, 2, SolitonOptions::default()).unwrap();
        assert!(report.all_disjoint);
        assert!(report.pairs.is_empty());
    }

    #[test]
    fn squarefree_west_holds_for_naturals() {
        let report = check_squarefree_west(&InitialGeneration::Naturals, 64).unwrap();
        assert_eq!(report.violation, None);
        assert_eq!(report.checked, 64);
    }

    #[test]
    fn squarefree_checker_detects_seeded_square() {
        let gen = InitialGeneration::Explicit(vec![
            FactoredNat::from_pairs([(2, 2)]),
            FactoredNat::one(),
        ]);
        let report = check_squarefree_west(&gen, 2).unwrap();
        let (index, value) = report.violation.unwrap();
        assert_eq!(index, 1);
        assert_eq!(value, FactoredNat::from_pairs([(2, 2)]));
    }

    #[test]
    fn west_two_exponents_sit_at_powers_of_two() {
        let profile = v2_west_profile(16).unwrap();
        assert!(profile.deviations.is_empty());
        let ones: Vec<u64> = profile
            .bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| (b == 1).then_some(i as u64 + 1))
            .collect();
        assert_eq!(ones, vec![2, 4, 8, 16]);
        assert_eq!(v2_west_profile(1).unwrap().bits, vec![0]);
    }

    #[test]
    fn profile_agrees_with_predictor() {
        let profile = v2_west_profile(256).unwrap();
        for (i, &b) in profile.bits.iter().enumerate() {
            assert_eq!(b as u16, predict_v2(i as u64 + 1, 1));
        }
    }
}
