//! Shared machinery for the set builders: block pools, frame layouts, and
//! the residual-set bookkeeping checks.
//!
//! Every construction follows the same shape: instantiate block families,
//! derive the residual ranges the families leave uncovered, split those into
//! fixed-difference pairs, wire the pairs into 2-row micro-blocks, then tile
//! a fixed frame layout with the pooled blocks, one output array at a time.

use std::collections::VecDeque;

use super::SmasError;
use crate::blocks::{q_block, r_block, u_block};
use crate::error::Error;
use crate::grid::PartialGrid;
use crate::intset::{interval, partition_pairs, Eps, IntSet, TwoSet};

pub(super) type BuildResult<T> = Result<T, SmasError>;

pub(super) fn integrity(label: &str, msg: impl std::fmt::Display) -> SmasError {
    SmasError::Integrity(format!("{label}: {msg}"))
}

/// Interval wrapper that reports transcription slips as integrity errors.
pub(super) fn iv(label: &str, a: i64, b: i64, d: i64) -> BuildResult<IntSet> {
    interval(a, b, d).map_err(|e| integrity(label, e))
}

/// Checks that the ±-closed family claims plus the ±-closure of the residual
/// sets tile `±[1, half]` exactly. `claims` hold symmetric sets (negatives
/// included); `residuals` hold positive values only.
pub(super) fn check_coverage(
    label: &str,
    half: i64,
    claims: &[&IntSet],
    residuals: &[&IntSet],
) -> BuildResult<()> {
    let mut seen = vec![false; half as usize + 1];
    let mut mark = |v: i64| -> BuildResult<()> {
        if v < 1 || v > half {
            return Err(integrity(label, format!("value {v} outside ±[1,{half}]")));
        }
        let idx = v as usize;
        if seen[idx] {
            return Err(integrity(label, format!("value {v} covered twice")));
        }
        seen[idx] = true;
        Ok(())
    };
    for set in claims {
        for v in set.iter().filter(|&v| v > 0) {
            mark(v)?;
        }
    }
    for set in residuals {
        for v in set.iter() {
            mark(v)?;
        }
    }
    if let Some(v) = seen.iter().skip(1).position(|&s| !s) {
        return Err(integrity(label, format!("value {} never covered", v + 1)));
    }
    Ok(())
}

/// Checks that the declared sub-split of a residual set reproduces it exactly.
pub(super) fn check_split(label: &str, whole: &IntSet, parts: &[&IntSet]) -> BuildResult<()> {
    let union = IntSet::union_all(parts.iter().copied()).map_err(|e| integrity(label, e))?;
    if &union != whole {
        return Err(integrity(label, "sub-split does not reproduce the set"));
    }
    Ok(())
}

/// Pairs each constituent separately (greedy min-first) and concatenates in
/// order; the constituent order fixes which pair feeds which block.
pub(super) fn pair_each(label: &str, parts: &[&IntSet], eps: Eps) -> BuildResult<Vec<TwoSet>> {
    let mut out = Vec::new();
    for p in parts {
        out.extend(partition_pairs(p, eps).map_err(|e| integrity(label, e))?);
    }
    Ok(out)
}

pub(super) fn two_set(label: &str, s: &IntSet, eps: Eps) -> BuildResult<TwoSet> {
    TwoSet::from_set(s, eps).map_err(|e| integrity(label, e))
}

/// `U2` block from a two-element residual set.
pub(super) fn u2_from(label: &str, m: &IntSet) -> BuildResult<PartialGrid> {
    let x = two_set(label, m, Eps::One)?;
    u_block(2, &x, None).map_err(|e| integrity(label, e))
}

/// `U1` block from a consecutive residual pair and a gap-2 residual pair.
pub(super) fn u1_from(label: &str, mx: &IntSet, my: &IntSet) -> BuildResult<PartialGrid> {
    let x = two_set(label, mx, Eps::One)?;
    let y = two_set(label, my, Eps::Two)?;
    u_block(1, &x, Some(&y)).map_err(|e| integrity(label, e))
}

/// `count` q-blocks of the given kind consuming `pairs[start..]` two at a time.
pub(super) fn q_run(
    label: &str,
    kind: u8,
    pairs: &[TwoSet],
    start: usize,
    count: usize,
) -> BuildResult<Vec<PartialGrid>> {
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let p1 = pairs
            .get(start + 2 * i)
            .ok_or_else(|| integrity(label, "pair pool exhausted"))?;
        let p2 = pairs
            .get(start + 2 * i + 1)
            .ok_or_else(|| integrity(label, "pair pool exhausted"))?;
        out.push(q_block(kind, p1, p2).map_err(|e| integrity(label, e))?);
    }
    Ok(out)
}

/// `count` wide r-blocks `R2(f[i], g[2i], g[2i+1])` starting at f/g offsets 0.
pub(super) fn r2_run(
    label: &str,
    f: &[TwoSet],
    g: &[TwoSet],
    count: usize,
) -> BuildResult<Vec<PartialGrid>> {
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let lead = f.get(i).ok_or_else(|| integrity(label, "lead pair pool exhausted"))?;
        let p1 = g.get(2 * i).ok_or_else(|| integrity(label, "tail pair pool exhausted"))?;
        let p2 = g
            .get(2 * i + 1)
            .ok_or_else(|| integrity(label, "tail pair pool exhausted"))?;
        out.push(r_block(2, lead, p1, p2).map_err(|e| integrity(label, e))?);
    }
    Ok(out)
}

pub(super) fn r1_one(
    label: &str,
    lead: &TwoSet,
    h1: &TwoSet,
    h2: &TwoSet,
) -> BuildResult<PartialGrid> {
    r_block(1, lead, h1, h2).map_err(|e| integrity(label, e))
}

/// Block pools a layout consumes while assembling one output array.
#[derive(Default)]
pub(super) struct Pools {
    pub x3: VecDeque<PartialGrid>,
    pub x2: VecDeque<PartialGrid>,
    pub x5: VecDeque<PartialGrid>,
    pub x6: VecDeque<PartialGrid>,
    pub y5: VecDeque<PartialGrid>,
    pub w2: VecDeque<PartialGrid>,
    pub w4: VecDeque<PartialGrid>,
    pub z4: VecDeque<PartialGrid>,
    pub z6: VecDeque<PartialGrid>,
}

impl Pools {
    fn take(
        q: &mut VecDeque<PartialGrid>,
        label: &str,
        what: &str,
    ) -> BuildResult<PartialGrid> {
        q.pop_front()
            .ok_or_else(|| integrity(label, format!("{what} pool exhausted")))
    }

    pub(super) fn assert_empty(&self, label: &str) -> BuildResult<()> {
        let leftovers = [
            ("3x3", self.x3.len()),
            ("2x3", self.x2.len()),
            ("5x3", self.x5.len()),
            ("6x3", self.x6.len()),
            ("5x5", self.y5.len()),
            ("2x2", self.w2.len()),
            ("2x4 compensating", self.w4.len()),
            ("2x4", self.z4.len()),
            ("2x6", self.z6.len()),
        ];
        for (what, n) in leftovers {
            if n != 0 {
                return Err(integrity(label, format!("{n} unused {what} blocks")));
            }
        }
        Ok(())
    }
}

fn place(
    frame: &mut PartialGrid,
    block: &PartialGrid,
    r: usize,
    c: usize,
    label: &str,
) -> BuildResult<()> {
    frame
        .place(block, r, c)
        .map_err(|e: Error| integrity(label, format!("layout bug: {e}")))
}

/// 5-row frame: a 3x3 corner over a 2x3 corner, transposed 2x3 blocks along
/// the top band, and a bottom band of one 2x6 (when `with_z6`) followed by
/// 2x4 blocks.
pub(super) fn five_row(
    label: &str,
    b: usize,
    with_z6: bool,
    pools: &mut Pools,
) -> BuildResult<PartialGrid> {
    let mut g = PartialGrid::new(5, b);
    let x3 = Pools::take(&mut pools.x3, label, "3x3")?;
    place(&mut g, &x3, 0, 0, label)?;
    let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
    place(&mut g, &x2, 3, 0, label)?;
    let mut col = 3;
    while col < b {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2.transpose(), 0, col, label)?;
        col += 2;
    }
    let mut col = 3;
    if with_z6 {
        let z6 = Pools::take(&mut pools.z6, label, "2x6")?;
        place(&mut g, &z6, 3, 3, label)?;
        col = 9;
    }
    while col < b {
        let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
        place(&mut g, &z4, 3, col, label)?;
        col += 4;
    }
    Ok(g)
}

/// Banded frame for odd `a >= 5`: the 5-row top pattern with `(a-3)/2` bands
/// of a 2x3 corner followed by 2x4 blocks.
pub(super) fn banded(label: &str, a: usize, b: usize, pools: &mut Pools) -> BuildResult<PartialGrid> {
    let mut g = PartialGrid::new(a, b);
    let x3 = Pools::take(&mut pools.x3, label, "3x3")?;
    place(&mut g, &x3, 0, 0, label)?;
    let bands = (a - 3) / 2;
    for band in 0..bands {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2, 3 + 2 * band, 0, label)?;
    }
    let mut col = 3;
    while col < b {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2.transpose(), 0, col, label)?;
        col += 2;
    }
    for band in 0..bands {
        let mut col = 3;
        while col < b {
            let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
            place(&mut g, &z4, 3 + 2 * band, col, label)?;
            col += 4;
        }
    }
    Ok(g)
}

/// Banded frame whose first band leads with a 2x6 block and whose remaining
/// bands come in pairs sharing a transposed 2x4 in columns 3-4.
pub(super) fn banded_z6(
    label: &str,
    a: usize,
    b: usize,
    pools: &mut Pools,
) -> BuildResult<PartialGrid> {
    let mut g = PartialGrid::new(a, b);
    let x3 = Pools::take(&mut pools.x3, label, "3x3")?;
    place(&mut g, &x3, 0, 0, label)?;
    let bands = (a - 3) / 2; // first band + (a-5)/2 paired bands
    for band in 0..bands {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2, 3 + 2 * band, 0, label)?;
    }
    let mut col = 3;
    while col < b {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2.transpose(), 0, col, label)?;
        col += 2;
    }
    let z6 = Pools::take(&mut pools.z6, label, "2x6")?;
    place(&mut g, &z6, 3, 3, label)?;
    let mut col = 9;
    while col < b {
        let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
        place(&mut g, &z4, 3, col, label)?;
        col += 4;
    }
    let pairs = (a - 5) / 4;
    for p in 0..pairs {
        let top = 5 + 4 * p;
        let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
        place(&mut g, &z4.transpose(), top, 3, label)?;
        for band_row in [top, top + 2] {
            let mut col = 5;
            while col < b {
                let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
                place(&mut g, &z4, band_row, col, label)?;
                col += 4;
            }
        }
    }
    Ok(g)
}

/// Frame led by a 5x5 corner block with a 2x2 compensator beside its bottom
/// rows; lower bands are the plain 2x3-plus-2x4 pattern.
pub(super) fn corner5_w2(
    label: &str,
    a: usize,
    b: usize,
    pools: &mut Pools,
) -> BuildResult<PartialGrid> {
    let mut g = PartialGrid::new(a, b);
    let y5 = Pools::take(&mut pools.y5, label, "5x5")?;
    place(&mut g, &y5, 0, 0, label)?;
    let bands = (a - 5) / 2;
    for band in 0..bands {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2, 5 + 2 * band, 0, label)?;
    }
    let mut col = 5;
    while col < b {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2.transpose(), 0, col, label)?;
        col += 2;
    }
    let w2 = Pools::take(&mut pools.w2, label, "2x2")?;
    place(&mut g, &w2, 3, 5, label)?;
    let mut col = 7;
    while col < b {
        let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
        place(&mut g, &z4, 3, col, label)?;
        col += 4;
    }
    for band in 0..bands {
        let mut col = 3;
        while col < b {
            let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
            place(&mut g, &z4, 5 + 2 * band, col, label)?;
            col += 4;
        }
    }
    Ok(g)
}

/// Frame led by a 5x5 corner block with a 2x4 compensator; lower bands come
/// in pairs sharing a transposed 2x4 in columns 3-4.
pub(super) fn corner5_w4(
    label: &str,
    a: usize,
    b: usize,
    pools: &mut Pools,
) -> BuildResult<PartialGrid> {
    let mut g = PartialGrid::new(a, b);
    let y5 = Pools::take(&mut pools.y5, label, "5x5")?;
    place(&mut g, &y5, 0, 0, label)?;
    let bands = (a - 5) / 2;
    for band in 0..bands {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2, 5 + 2 * band, 0, label)?;
    }
    let mut col = 5;
    while col < b {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2.transpose(), 0, col, label)?;
        col += 2;
    }
    let w4 = Pools::take(&mut pools.w4, label, "2x4 compensating")?;
    place(&mut g, &w4, 3, 5, label)?;
    let mut col = 9;
    while col < b {
        let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
        place(&mut g, &z4, 3, col, label)?;
        col += 4;
    }
    let pairs = bands / 2;
    for p in 0..pairs {
        let top = 5 + 4 * p;
        let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
        place(&mut g, &z4.transpose(), top, 3, label)?;
        for band_row in [top, top + 2] {
            let mut col = 5;
            while col < b {
                let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
                place(&mut g, &z4, band_row, col, label)?;
                col += 4;
            }
        }
    }
    Ok(g)
}

/// 5x7 frame led by a 5x3 zero-sum column block.
pub(super) fn corner53(label: &str, pools: &mut Pools) -> BuildResult<PartialGrid> {
    let mut g = PartialGrid::new(5, 7);
    let x5 = Pools::take(&mut pools.x5, label, "5x3")?;
    place(&mut g, &x5, 0, 0, label)?;
    for col in [3, 5] {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2.transpose(), 0, col, label)?;
    }
    let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
    place(&mut g, &z4, 3, 3, label)?;
    Ok(g)
}

/// 6x5 frame: three stacked 2x3 blocks beside a transposed 2x6.
pub(super) fn six_five(label: &str, pools: &mut Pools) -> BuildResult<PartialGrid> {
    let mut g = PartialGrid::new(6, 5);
    for band in 0..3 {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2, 2 * band, 0, label)?;
    }
    let z6 = Pools::take(&mut pools.z6, label, "2x6")?;
    place(&mut g, &z6.transpose(), 0, 3, label)?;
    Ok(g)
}

/// 6x7 frame: three bands of a 2x3 block beside a 2x4 block.
pub(super) fn six_seven(label: &str, pools: &mut Pools) -> BuildResult<PartialGrid> {
    let mut g = PartialGrid::new(6, 7);
    for band in 0..3 {
        let x2 = Pools::take(&mut pools.x2, label, "2x3")?;
        place(&mut g, &x2, 2 * band, 0, label)?;
    }
    for band in 0..3 {
        let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
        place(&mut g, &z4, 2 * band, 3, label)?;
    }
    Ok(g)
}

/// 6x5 frame led by a 6x3 column block beside a transposed 2x6.
pub(super) fn six_five_corner(label: &str, pools: &mut Pools) -> BuildResult<PartialGrid> {
    let mut g = PartialGrid::new(6, 5);
    let x6 = Pools::take(&mut pools.x6, label, "6x3")?;
    place(&mut g, &x6, 0, 0, label)?;
    let z6 = Pools::take(&mut pools.z6, label, "2x6")?;
    place(&mut g, &z6.transpose(), 0, 3, label)?;
    Ok(g)
}

/// 6x7 frame led by a 6x3 column block beside three 2x4 bands.
pub(super) fn six_seven_corner(label: &str, pools: &mut Pools) -> BuildResult<PartialGrid> {
    let mut g = PartialGrid::new(6, 7);
    let x6 = Pools::take(&mut pools.x6, label, "6x3")?;
    place(&mut g, &x6, 0, 0, label)?;
    for band in 0..3 {
        let z4 = Pools::take(&mut pools.z4, label, "2x4")?;
        place(&mut g, &z4, 2 * band, 3, label)?;
    }
    Ok(g)
}
