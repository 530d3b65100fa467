//! Builders for the odd-by-odd set families with at least one side of
//! width 9 or more (the 5x7 case has its own builders).
//!
//! Each builder instantiates its block families, lists the residual ranges
//! the families leave uncovered, checks that families plus residuals tile
//! the universe exactly, splits the residuals into fixed-difference pairs,
//! wires those into 2-row blocks and tiles the frames. Any bookkeeping slip
//! aborts as an integrity error rather than producing a near-valid set.

use super::assemble::*;
use super::SmasError;
use crate::blocks::{block_a_set, block_b_set, block_c_set};
use crate::grid::PartialGrid;
use crate::intset::{Eps, IntSet};

fn precondition(label: &str, msg: &str) -> SmasError {
    SmasError::LemmaPrecondition(format!("{label}: {msg}"))
}

/// SMAS(5,b;2c) for b ≡ 1 (mod 4), b ≥ 9, c ≡ 0 (mod 4), c ≥ 4.
pub(super) fn five_b1_c0(b: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "5x(4w+9) set, c div by 4";
    if b < 9 || b % 4 != 1 {
        return Err(precondition(L, "b must be 9, 13, ... (1 mod 4)"));
    }
    if c < 4 || c % 4 != 0 {
        return Err(precondition(L, "c must be a positive multiple of 4"));
    }
    let t = (c as i64 - 4) / 4;
    let w = (b as i64 - 9) / 4;
    let half = 5 * b as i64 * c as i64;

    let fam_a = block_a_set(4 * t + 4, 16 * w * (t + 1) + 32 * t + 32, 4 * t + 4)?;
    let fam_b = block_b_set(
        1,
        64 * w * (t + 1) + 148 * t + 148,
        16 * w * (t + 1) + 32 * t + 32,
    )?;

    let x = 32 * w * (t + 1);
    let m1 = iv(L, 2, 8 * t + 8, 2)?;
    let m1a = iv(L, 2, 8 * t + 6, 4)?;
    let m1b = iv(L, 4, 8 * t + 8, 4)?;
    let m2 = iv(L, 40 * t + 42, 56 * t + 54, 4)?;
    let m3 = iv(L, 56 * t + 58, x + 112 * t + 112, 2)?;
    let m4 = iv(L, x + 80 * t + 81, x + 112 * t + 109, 4)?;
    let m5a = iv(L, x + 112 * t + 113, 48 * w * (t + 1) + 116 * t + 115, 2)?;
    let m5b = iv(L, x + 112 * t + 114, 48 * w * (t + 1) + 116 * t + 116, 2)?;
    check_split(L, &m1, &[&m1a, &m1b])?;
    check_coverage(
        L,
        half,
        &[&fam_a.claimed_entries, &fam_b.claimed_entries],
        &[&m1, &m2, &m3, &m4, &m5a, &m5b],
    )?;

    let f = pair_each(L, &[&m1a, &m1b, &m2, &m4], Eps::Four)?;
    let g = pair_each(L, &[&m3, &m5a, &m5b], Eps::Two)?;

    let n_z6 = (8 * t + 8) as usize;
    let n_z4 = (8 * w * (t + 1)) as usize;
    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.z6 = r2_run(L, &f, &g, n_z6)?.into();
    pools.z4 = q_run(L, 2, &g, 2 * n_z6, n_z4)?.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c {
        arrays.push(banded_z6(L, 5, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(5,b;2c) for b ≡ 3 (mod 4), b ≥ 11, c ≡ 0 (mod 4), c ≥ 4.
pub(super) fn five_b3_c0(b: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "5x(4w+11) set, c div by 4";
    if b < 11 || b % 4 != 3 {
        return Err(precondition(L, "b must be 11, 15, ... (3 mod 4)"));
    }
    if c < 4 || c % 4 != 0 {
        return Err(precondition(L, "c must be a positive multiple of 4"));
    }
    let t = (c as i64 - 4) / 4;
    let w = (b as i64 - 11) / 4;
    let half = 5 * b as i64 * c as i64;

    let fam_a = block_a_set(4 * t + 4, 16 * w * (t + 1) + 40 * t + 40, 4 * t + 4)?;
    let fam_b = block_b_set(
        1,
        64 * w * (t + 1) + 180 * t + 180,
        16 * w * (t + 1) + 40 * t + 40,
    )?;

    let x = 32 * w * (t + 1);
    let m1 = iv(L, 2, 8 * t + 8, 2)?;
    let m2 = iv(L, 40 * t + 42, 56 * t + 54, 4)?;
    let m3 = iv(L, 56 * t + 58, x + 128 * t + 128, 2)?;
    let m4 = iv(L, x + 96 * t + 97, x + 128 * t + 125, 4)?;
    let m5 = iv(L, x + 128 * t + 129, 48 * w * (t + 1) + 140 * t + 140, 1)?;
    check_coverage(
        L,
        half,
        &[&fam_a.claimed_entries, &fam_b.claimed_entries],
        &[&m1, &m2, &m3, &m4, &m5],
    )?;

    let f = pair_each(L, &[&m2, &m4], Eps::Four)?;
    let g = pair_each(L, &[&m1, &m3], Eps::Two)?;
    let h = pair_each(L, &[&m5], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (3 * t + 3) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, (2 * (2 * w + 5) * (t + 1)) as usize)?);
    z4.extend(q_run(L, 1, &h, 0, ((4 * w + 3) * (t + 1)) as usize)?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c {
        arrays.push(banded(L, 5, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(5,b;2c) for b ≡ 1 (mod 4), b ≥ 9, c ≡ 3 (mod 4).
pub(super) fn five_b1_c3(b: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "5x(4w+9) set, c = 3 mod 4";
    if b < 9 || b % 4 != 1 {
        return Err(precondition(L, "b must be 9, 13, ... (1 mod 4)"));
    }
    if c < 3 || c % 4 != 3 {
        return Err(precondition(L, "c must be 3 mod 4"));
    }
    let t = (c as i64 - 3) / 4;
    let w = (b as i64 - 9) / 4;
    let half = 5 * b as i64 * c as i64;
    let q = 4 * t + 3; // the odd quarter count

    let fam_a = block_a_set(4 * t + 2, 4 * (w + 2) * q, 4 * t + 3)?;
    let fam_b = block_b_set(1, 4 * (16 * w + 37) * t + 48 * w + 111, 4 * (w + 2) * q)?;

    let x = 8 * w * q;
    let y = 12 * w * q;
    let m1 = iv(L, 2, 8 * t + 4, 2)?;
    let m1a = iv(L, 2, 8 * t - 2, 4)?;
    let m1b = iv(L, 4, 8 * t, 4)?;
    let m1c = iv(L, 8 * t + 2, 8 * t + 4, 2)?;
    let m2 = iv(L, 40 * t + 32, 56 * t + 36, 4)?;
    let m3 = iv(L, 56 * t + 40, x + 112 * t + 78, 2)?;
    let m4 = iv(L, x + 80 * t + 63, x + 112 * t + 75, 4)?;
    let m5 = iv(L, x + 112 * t + 79, x + 112 * t + 80, 1)?;
    let m6 = iv(L, x + 112 * t + 82, y + 116 * t + 87, 1)?;
    let m6a = iv(L, x + 112 * t + 82, x + 112 * t + 86, 4)?;
    let m6b = iv(L, x + 112 * t + 83, x + 112 * t + 87, 4)?;
    let m6c = iv(L, x + 112 * t + 84, x + 112 * t + 85, 1)?;
    let m6d = iv(L, x + 112 * t + 88, y + 116 * t + 86, 2)?;
    let m6e = iv(L, x + 112 * t + 89, y + 116 * t + 87, 2)?;
    check_split(L, &m1, &[&m1a, &m1b, &m1c])?;
    check_split(L, &m6, &[&m6a, &m6b, &m6c, &m6d, &m6e])?;
    check_coverage(
        L,
        half,
        &[&fam_a.claimed_entries, &fam_b.claimed_entries],
        &[&m1, &m2, &m3, &m4, &m5, &m6],
    )?;

    let f = pair_each(L, &[&m1a, &m1b, &m2, &m4, &m6a, &m6b], Eps::Four)?;
    let g = pair_each(L, &[&m1c, &m3, &m6d, &m6e], Eps::Two)?;
    let h = pair_each(L, &[&m5, &m6c], Eps::One)?;

    let n_r2 = (8 * t + 5) as usize;
    let mut z6 = r2_run(L, &f, &g, n_r2)?;
    z6.push(r1_one(L, &g[(16 * t + 10) as usize], &h[0], &h[1])?);
    let z4 = q_run(L, 2, &g, (16 * t + 11) as usize, (2 * w * q) as usize)?;

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.z6 = z6.into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c {
        arrays.push(banded_z6(L, 5, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(a,b;2c) for a ≡ 1, b ≡ 3 (mod 4), a ≥ 5, b ≥ 11, c ≡ 3 (mod 4).
pub(super) fn a1_b3_c3(a: usize, b: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "(4v+5)x(4w+11) set, c = 3 mod 4";
    if a < 5 || a % 4 != 1 {
        return Err(precondition(L, "a must be 5, 9, ... (1 mod 4)"));
    }
    if b < 11 || b % 4 != 3 {
        return Err(precondition(L, "b must be 11, 15, ... (3 mod 4)"));
    }
    if c < 3 || c % 4 != 3 {
        return Err(precondition(L, "c must be 3 mod 4"));
    }
    let t = (c as i64 - 3) / 4;
    let v = (a as i64 - 5) / 4;
    let w = (b as i64 - 11) / 4;
    let half = a as i64 * b as i64 * c as i64;
    let q = 4 * t + 3;

    let fam_a = block_a_set(4 * t + 5, 4 * (v + w) * q + 40 * t + 30, 4 * t + 2)?;
    let fam_b = block_b_set(
        9,
        8 * (2 * v * w + 5 * v + 2 * w) * q + 180 * t + 131,
        4 * (v + w) * q + 40 * t + 26,
    )?;
    let fam_c = block_c_set(
        8 * (v + w) * q + 140 * t + 92,
        8 * (2 * v * w + 5 * v + 2 * w) * q + 180 * t + 132,
        8 * (v + w) * q + 140 * t + 102,
    )?;

    let x = 8 * (v + w) * q;
    let m1 = iv(L, 12, 8 * t + 10, 2)?;
    let m2 = iv(L, 40 * t + 28, 40 * t + 34, 2)?;
    let m3 = iv(L, 40 * t + 38, 56 * t + 42, 4)?;
    let m4 = iv(L, 56 * t + 44, x + 96 * t + 66, 2)?;
    let m5 = iv(L, x + 96 * t + 68, x + 96 * t + 75, 1)?;
    let m5a = iv(L, x + 96 * t + 68, x + 96 * t + 72, 4)?;
    let m5b = iv(L, x + 96 * t + 69, x + 96 * t + 70, 1)?;
    let m5c = iv(L, x + 96 * t + 71, x + 96 * t + 73, 2)?;
    let m5d = iv(L, x + 96 * t + 74, x + 96 * t + 75, 1)?;
    let m6 = iv(L, x + 96 * t + 76, x + 128 * t + 90, 2)?;
    let m7 = iv(L, x + 96 * t + 79, x + 128 * t + 91, 4)?;
    let m8 = iv(L, x + 128 * t + 92, x + 140 * t + 91, 1)?;
    let m9 = iv(L, x + 140 * t + 95, x + 140 * t + 97, 2)?;
    let m10 = iv(
        L,
        x + 140 * t + 106,
        4 * (4 * v * w + 9 * v + 3 * w) * q + 140 * t + 105,
        1,
    )?;
    let m11 = iv(L, x + 140 * t + 93, x + 140 * t + 94, 1)?;
    let m12 = iv(L, x + 140 * t + 99, x + 140 * t + 100, 1)?;
    check_split(L, &m5, &[&m5a, &m5b, &m5c, &m5d])?;
    check_coverage(
        L,
        half,
        &[
            &fam_a.claimed_entries,
            &fam_b.claimed_entries,
            &fam_c.claimed_entries,
        ],
        &[&m1, &m2, &m3, &m4, &m5, &m6, &m7, &m8, &m9, &m10, &m11, &m12],
    )?;

    let f = pair_each(L, &[&m3, &m5a, &m7], Eps::Four)?;
    let g = pair_each(L, &[&m1, &m2, &m4, &m5c, &m6, &m9], Eps::Two)?;
    let h = pair_each(L, &[&m5b, &m5d, &m8, &m10], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (3 * t + 2) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, ((v + w) * q + 10 * t + 7) as usize)?);
    z4.extend(q_run(
        L,
        1,
        &h,
        0,
        ((4 * v * w + 7 * v + w) * q + 3 * t + 1) as usize,
    )?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.w2 = vec![u2_from(L, &m11)?, u2_from(L, &m12)?].into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c - 2 {
        arrays.push(banded(L, a, b, &mut pools)?);
    }
    for _ in 0..2 {
        arrays.push(corner5_w2(L, a, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(a,7;2c) for a ≡ 1 (mod 4), a ≥ 9, c ≡ 3 (mod 4).
pub(super) fn a1_b7_c3(a: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "(4v+9)x7 set, c = 3 mod 4";
    if a < 9 || a % 4 != 1 {
        return Err(precondition(L, "a must be 9, 13, ... (1 mod 4)"));
    }
    if c < 3 || c % 4 != 3 {
        return Err(precondition(L, "c must be 3 mod 4"));
    }
    let t = (c as i64 - 3) / 4;
    let v = (a as i64 - 9) / 4;
    let half = a as i64 * 7 * c as i64;
    let q = 4 * t + 3;

    let fam_a = block_a_set(4 * t + 5, 4 * v * q + 40 * t + 30, 4 * t + 2)?;
    let fam_b = block_b_set(9, 24 * v * q + 212 * t + 155, 4 * v * q + 40 * t + 26)?;
    let fam_c = block_c_set(
        8 * v * q + 128 * t + 92,
        24 * v * q + 212 * t + 156,
        8 * v * q + 128 * t + 102,
    )?;

    let x = 8 * v * q;
    let m1 = iv(L, 12, 8 * t + 10, 2)?;
    let m2 = iv(L, 40 * t + 28, 40 * t + 34, 2)?;
    let m3 = iv(L, 40 * t + 38, 56 * t + 42, 4)?;
    let m4 = iv(L, 56 * t + 44, x + 96 * t + 66, 2)?;
    let m5 = iv(L, x + 96 * t + 68, x + 96 * t + 75, 1)?;
    let m5a = iv(L, x + 96 * t + 68, x + 96 * t + 72, 4)?;
    let m5b = iv(L, x + 96 * t + 69, x + 96 * t + 70, 1)?;
    let m5c = iv(L, x + 96 * t + 71, x + 96 * t + 73, 2)?;
    let m5d = iv(L, x + 96 * t + 74, x + 96 * t + 75, 1)?;
    let m6 = iv(L, x + 96 * t + 76, x + 128 * t + 90, 2)?;
    let m7 = iv(L, x + 96 * t + 79, x + 128 * t + 91, 4)?;
    let m8 = iv(L, x + 128 * t + 106, x + 172 * t + 129, 1)?;
    let m9 = iv(L, x + 128 * t + 93, x + 128 * t + 94, 1)?;
    let m10 = iv(L, x + 128 * t + 95, x + 128 * t + 97, 2)?;
    let m11 = iv(L, x + 128 * t + 99, x + 128 * t + 100, 1)?;
    let m12 = iv(L, x + 172 * t + 130, 20 * v * q + 172 * t + 129, 1)?;
    check_split(L, &m5, &[&m5a, &m5b, &m5c, &m5d])?;
    check_coverage(
        L,
        half,
        &[
            &fam_a.claimed_entries,
            &fam_b.claimed_entries,
            &fam_c.claimed_entries,
        ],
        &[&m1, &m2, &m3, &m4, &m5, &m6, &m7, &m8, &m9, &m10, &m11, &m12],
    )?;

    let f = pair_each(L, &[&m3, &m5a, &m7], Eps::Four)?;
    let g = pair_each(L, &[&m1, &m2, &m4, &m5c, &m6, &m10], Eps::Two)?;
    let h = pair_each(L, &[&m5b, &m5d, &m8, &m12], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (3 * t + 2) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, (v * q + 10 * t + 7) as usize)?);
    z4.extend(q_run(L, 1, &h, 0, (3 * v * q + 11 * t + 7) as usize)?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.w2 = vec![u2_from(L, &m9)?, u2_from(L, &m11)?].into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c - 2 {
        arrays.push(banded(L, a, 7, &mut pools)?);
    }
    for _ in 0..2 {
        arrays.push(corner5_w2(L, a, 7, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(a,b;2) for a ≡ b ≡ 1 (mod 4), a ≥ 5, b ≥ 9.
pub(super) fn a1_b1_pair(a: usize, b: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "(4v+5)x(4w+9) set of two";
    if a < 5 || a % 4 != 1 {
        return Err(precondition(L, "a must be 5, 9, ... (1 mod 4)"));
    }
    if b < 9 || b % 4 != 1 {
        return Err(precondition(L, "b must be 9, 13, ... (1 mod 4)"));
    }
    let v = (a as i64 - 5) / 4;
    let w = (b as i64 - 9) / 4;
    let half = a as i64 * b as i64;

    let fam_b = block_b_set(9, 16 * v * w + 32 * v + 16 * w + 33, 4 * (v + w + 1))?;
    let fam_c = block_c_set(
        8 * (v + w) + 16,
        16 * v * w + 32 * v + 16 * w + 34,
        8 * (v + w) + 26,
    )?;

    let m1a = iv(L, 12, 14, 2)?;
    let m1b = iv(L, 16, 8 * (v + w) + 14, 2)?;
    let m2 = iv(L, 8 * (v + w) + 17, 8 * (v + w) + 18, 1)?;
    let m3 = iv(L, 8 * (v + w) + 19, 8 * (v + w) + 21, 2)?;
    let m4 = iv(L, 8 * (v + w) + 23, 8 * (v + w) + 24, 1)?;
    let m5 = iv(L, 8 * (v + w) + 30, 16 * v * (w + 1) + 12 * (v + w) + 29, 1)?;
    check_coverage(
        L,
        half,
        &[&fam_b.claimed_entries, &fam_c.claimed_entries],
        &[&m1a, &m1b, &m2, &m3, &m4, &m5],
    )?;

    let g = pair_each(L, &[&m1b], Eps::Two)?;
    let h = pair_each(L, &[&m5], Eps::One)?;

    let mut z4 = q_run(L, 2, &g, 0, (v + w) as usize)?;
    z4.extend(q_run(L, 1, &h, 0, (4 * v * (w + 1) + v + w) as usize)?);

    let mut pools = Pools::default();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.w4 = vec![u1_from(L, &m2, &m1a)?, u1_from(L, &m4, &m3)?].into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2);
    for _ in 0..2 {
        arrays.push(corner5_w4(L, a, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(a,b;2c) for a ≡ b ≡ 1 (mod 4), a ≥ 5, b ≥ 9, c ≡ 1 (mod 4), c ≥ 5.
pub(super) fn a1_b1_c1(a: usize, b: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "(4v+5)x(4w+9) set, c = 1 mod 4";
    if a < 5 || a % 4 != 1 {
        return Err(precondition(L, "a must be 5, 9, ... (1 mod 4)"));
    }
    if b < 9 || b % 4 != 1 {
        return Err(precondition(L, "b must be 9, 13, ... (1 mod 4)"));
    }
    if c < 5 || c % 4 != 1 {
        return Err(precondition(L, "c must be 5, 9, ... (1 mod 4)"));
    }
    let t = (c as i64 - 5) / 4;
    let v = (a as i64 - 5) / 4;
    let w = (b as i64 - 9) / 4;
    let half = a as i64 * b as i64 * c as i64;
    let q = 4 * t + 5;

    let fam_a = block_a_set(4 * t + 5, 4 * (v + w) * q + 32 * t + 40, 4 * t + 4)?;
    let fam_b = block_b_set(
        9,
        (16 * v * (w + 1) + 16 * (v + w)) * q + 148 * t + 181,
        4 * (v + w) * q + 32 * t + 36,
    )?;
    let fam_c = block_c_set(
        8 * (v + w) * q + 112 * t + 130,
        (16 * v * (w + 1) + 16 * (v + w)) * q + 148 * t + 182,
        8 * (v + w) * q + 112 * t + 140,
    )?;

    let x = 8 * (v + w) * q;
    let m1a = iv(L, 12, 8 * t + 8, 4)?;
    let m1b = iv(L, 14, 8 * t + 10, 4)?;
    let m2 = iv(L, 40 * t + 44, 40 * t + 46, 2)?;
    let m3 = iv(L, 40 * t + 50, 56 * t + 62, 4)?;
    let m4 = iv(L, 56 * t + 64, x + 80 * t + 94, 2)?;
    let m5 = iv(L, x + 80 * t + 96, x + 80 * t + 97, 1)?;
    let m6a = iv(L, x + 80 * t + 98, x + 80 * t + 100, 2)?;
    let m6b = iv(L, x + 80 * t + 102, x + 80 * t + 104, 2)?;
    let m6c = iv(L, x + 80 * t + 106, x + 112 * t + 128, 2)?;
    let m7 = iv(L, x + 80 * t + 99, x + 112 * t + 127, 4)?;
    let m8 = iv(L, x + 112 * t + 131, x + 112 * t + 135, 4)?;
    let m9 = iv(L, x + 112 * t + 132, x + 112 * t + 133, 1)?;
    let m10 = iv(L, x + 112 * t + 137, x + 112 * t + 138, 1)?;
    let m11a = iv(L, x + 112 * t + 144, x + 116 * t + 142, 2)?;
    let m11b = iv(L, x + 112 * t + 145, x + 116 * t + 143, 2)?;
    let m11c = iv(L, x + 116 * t + 144, x + 116 * t + 145, 1)?;
    let m12 = iv(
        L,
        x + 116 * t + 146,
        (16 * v * (w + 1) + 12 * (v + w)) * q + 116 * t + 145,
        1,
    )?;
    check_coverage(
        L,
        half,
        &[
            &fam_a.claimed_entries,
            &fam_b.claimed_entries,
            &fam_c.claimed_entries,
        ],
        &[
            &m1a, &m1b, &m2, &m3, &m4, &m5, &m6a, &m6b, &m6c, &m7, &m8, &m9, &m10, &m11a,
            &m11b, &m11c, &m12,
        ],
    )?;

    let f = pair_each(L, &[&m1a, &m1b, &m3, &m7, &m8], Eps::Four)?;
    let g = pair_each(L, &[&m2, &m4, &m6c, &m11a, &m11b], Eps::Two)?;
    let h = pair_each(L, &[&m10, &m11c, &m12], Eps::One)?;
    let beta = (2 * (v + w) * q + 16 * t + 15) as usize;
    let gamma = ((8 * v * (w + 1) + 2 * (v + w)) * q + 2) as usize;
    debug_assert_eq!(g.len(), beta);
    debug_assert_eq!(h.len(), gamma);

    let n_r2 = (8 * t + 7) as usize;
    let mut z6 = r2_run(L, &f, &g, n_r2)?;
    z6.push(r1_one(L, &g[beta - 1], &h[gamma - 2], &h[gamma - 1])?);
    let mut z4 = q_run(L, 2, &g, 2 * n_r2, ((v + w) * q) as usize)?;
    z4.extend(q_run(
        L,
        1,
        &h,
        0,
        ((4 * v * (w + 1) + v + w) * q) as usize,
    )?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.w4 = vec![u1_from(L, &m5, &m6a)?, u1_from(L, &m9, &m6b)?].into();
    pools.z6 = z6.into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c - 2 {
        arrays.push(banded_z6(L, a, b, &mut pools)?);
    }
    for _ in 0..2 {
        arrays.push(corner5_w4(L, a, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(5,b;2c) for b ≡ 3 (mod 4), b ≥ 11, c ≡ 1 (mod 4).
pub(super) fn five_b3_c1(b: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "5x(4w+11) set, c = 1 mod 4";
    if b < 11 || b % 4 != 3 {
        return Err(precondition(L, "b must be 11, 15, ... (3 mod 4)"));
    }
    if c % 4 != 1 {
        return Err(precondition(L, "c must be 1 mod 4"));
    }
    let t = (c as i64 - 1) / 4;
    let w = (b as i64 - 11) / 4;
    let half = 5 * b as i64 * c as i64;
    let q = 4 * t + 1;

    let fam_a = block_a_set(4 * t, 2 * (2 * w + 5) * q, 4 * t + 1)?;
    let fam_b = block_b_set(1, (16 * w + 45) * q, 2 * (2 * w + 5) * q)?;

    let x = 8 * w * q;
    let m1 = iv(L, 2, 8 * t, 2)?;
    let m2 = iv(L, 40 * t + 12, 56 * t + 8, 4)?;
    let m3 = iv(L, 56 * t + 12, x + 128 * t + 30, 2)?;
    let m3a = iv(L, 56 * t + 12, x + 128 * t + 26, 2)?;
    let m3b = iv(L, x + 128 * t + 28, x + 128 * t + 30, 2)?;
    let m4 = iv(L, x + 96 * t + 27, x + 128 * t + 31, 4)?;
    let m4a = iv(L, x + 96 * t + 27, x + 128 * t + 23, 4)?;
    let m4b = iv(L, x + 128 * t + 27, x + 128 * t + 31, 4)?;
    let m5 = iv(L, x + 128 * t + 32, 12 * w * q + 140 * t + 35, 1)?;
    check_split(L, &m3, &[&m3a, &m3b])?;
    check_split(L, &m4, &[&m4a, &m4b])?;
    check_coverage(
        L,
        half,
        &[&fam_a.claimed_entries, &fam_b.claimed_entries],
        &[&m1, &m2, &m3, &m4, &m5],
    )?;

    // The tails of m3 and m4 interleave into two consecutive runs; regroup
    // them before pairing at difference 1.
    let tail = IntSet::union_all([&m3b, &m4b])?;
    let tail_lo = iv(L, x + 128 * t + 27, x + 128 * t + 28, 1)?;
    let tail_hi = iv(L, x + 128 * t + 30, x + 128 * t + 31, 1)?;
    check_split(L, &tail, &[&tail_lo, &tail_hi])?;

    let f = pair_each(L, &[&m2, &m4a], Eps::Four)?;
    let g = pair_each(L, &[&m1, &m3a], Eps::Two)?;
    let h = pair_each(L, &[&tail_lo, &tail_hi, &m5], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (3 * t) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, ((w + 2) * q + 2 * t) as usize)?);
    z4.extend(q_run(L, 1, &h, 0, (w * q + 3 * t + 2) as usize)?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c {
        arrays.push(banded(L, 5, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(a,b;2) for a ≡ b ≡ 3 (mod 4), a, b ≥ 7.
pub(super) fn a3_b3_pair(a: usize, b: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "(4v+7)x(4w+7) set of two";
    if a < 7 || a % 4 != 3 {
        return Err(precondition(L, "a must be 7, 11, ... (3 mod 4)"));
    }
    if b < 7 || b % 4 != 3 {
        return Err(precondition(L, "b must be 7, 11, ... (3 mod 4)"));
    }
    let v = (a as i64 - 7) / 4;
    let w = (b as i64 - 7) / 4;
    let half = a as i64 * b as i64;

    let fam_b = block_b_set(9, 16 * v * w + 24 * (v + w) + 37, 4 * (v + w + 1))?;
    let fam_c = block_c_set(
        8 * (v + w) + 16,
        16 * v * w + 24 * (v + w) + 38,
        8 * (v + w) + 26,
    )?;

    let m1 = iv(L, 12, 8 * (v + w) + 14, 2)?;
    let m2 = iv(L, 8 * (v + w) + 17, 8 * (v + w) + 18, 1)?;
    let m3 = iv(L, 8 * (v + w) + 19, 8 * (v + w) + 21, 2)?;
    let m4 = iv(L, 8 * (v + w) + 23, 8 * (v + w) + 24, 1)?;
    let m5 = iv(L, 8 * (v + w) + 30, 16 * v * w + 20 * (v + w) + 33, 1)?;
    check_coverage(
        L,
        half,
        &[&fam_b.claimed_entries, &fam_c.claimed_entries],
        &[&m1, &m2, &m3, &m4, &m5],
    )?;

    let g = pair_each(L, &[&m1, &m3], Eps::Two)?;
    let h = pair_each(L, &[&m5], Eps::One)?;

    let mut z4 = q_run(L, 2, &g, 0, (v + w + 1) as usize)?;
    z4.extend(q_run(L, 1, &h, 0, (4 * v * w + 3 * (v + w) + 1) as usize)?);

    let mut pools = Pools::default();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.w2 = vec![u2_from(L, &m2)?, u2_from(L, &m4)?].into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2);
    for _ in 0..2 {
        arrays.push(corner5_w2(L, a, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(a,b;2c) for a ≡ b ≡ 3 (mod 4), a, b ≥ 7, c ≡ 1 (mod 4), c ≥ 5.
pub(super) fn a3_b3_c1(a: usize, b: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "(4v+7)x(4w+7) set, c = 1 mod 4";
    if a < 7 || a % 4 != 3 {
        return Err(precondition(L, "a must be 7, 11, ... (3 mod 4)"));
    }
    if b < 7 || b % 4 != 3 {
        return Err(precondition(L, "b must be 7, 11, ... (3 mod 4)"));
    }
    if c < 5 || c % 4 != 1 {
        return Err(precondition(L, "c must be 5, 9, ... (1 mod 4)"));
    }
    let t = (c as i64 - 5) / 4;
    let v = (a as i64 - 7) / 4;
    let w = (b as i64 - 7) / 4;
    let half = a as i64 * b as i64 * c as i64;
    let q = 4 * t + 5;

    let fam_a = block_a_set(4 * t + 5, 4 * (v + w) * q + 32 * t + 40, 4 * t + 4)?;
    let fam_b = block_b_set(
        9,
        (16 * v * w + 24 * (v + w)) * q + 164 * t + 201,
        4 * (v + w) * q + 32 * t + 36,
    )?;
    let fam_c = block_c_set(
        8 * (v + w) * q + 112 * t + 132,
        (16 * v * w + 24 * (v + w)) * q + 164 * t + 202,
        8 * (v + w) * q + 112 * t + 142,
    )?;

    let x = 8 * (v + w) * q;
    let m1 = iv(L, 12, 8 * t + 10, 2)?;
    let m2 = iv(L, 40 * t + 44, 40 * t + 46, 2)?;
    let m3 = iv(L, 40 * t + 50, 56 * t + 62, 4)?;
    let m4 = iv(L, 56 * t + 64, x + 80 * t + 94, 2)?;
    let m5 = iv(L, x + 80 * t + 96, x + 80 * t + 99, 1)?;
    let m6 = iv(L, x + 80 * t + 100, x + 112 * t + 130, 2)?;
    let m7 = iv(L, x + 80 * t + 103, x + 112 * t + 131, 4)?;
    let m8 = iv(L, x + 112 * t + 133, x + 112 * t + 134, 1)?;
    let m9 = iv(L, x + 112 * t + 135, x + 112 * t + 137, 2)?;
    let m10 = iv(L, x + 112 * t + 139, x + 112 * t + 140, 1)?;
    let m11 = iv(L, x + 112 * t + 146, x + 132 * t + 165, 1)?;
    let m12 = iv(
        L,
        x + 132 * t + 166,
        (16 * v * w + 20 * (v + w)) * q + 132 * t + 165,
        1,
    )?;
    check_coverage(
        L,
        half,
        &[
            &fam_a.claimed_entries,
            &fam_b.claimed_entries,
            &fam_c.claimed_entries,
        ],
        &[&m1, &m2, &m3, &m4, &m5, &m6, &m7, &m8, &m9, &m10, &m11, &m12],
    )?;

    let f = pair_each(L, &[&m3, &m7], Eps::Four)?;
    let g = pair_each(L, &[&m1, &m2, &m4, &m6, &m9], Eps::Two)?;
    let h = pair_each(L, &[&m5, &m11, &m12], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (3 * t + 3) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, ((v + w) * q + 8 * t + 9) as usize)?);
    z4.extend(q_run(
        L,
        1,
        &h,
        0,
        ((4 * v * w + 3 * (v + w)) * q + 5 * t + 6) as usize,
    )?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.w2 = vec![u2_from(L, &m8)?, u2_from(L, &m10)?].into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c - 2 {
        arrays.push(banded(L, a, b, &mut pools)?);
    }
    for _ in 0..2 {
        arrays.push(corner5_w2(L, a, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(a,b;2c) for a ≡ b ≡ 1 (mod 4), a ≥ 5, b ≥ 9, c ≡ 2 (mod 4).
pub(super) fn a1_b1_c2(a: usize, b: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "(4v+5)x(4w+9) set, c = 2 mod 4";
    if a < 5 || a % 4 != 1 {
        return Err(precondition(L, "a must be 5, 9, ... (1 mod 4)"));
    }
    if b < 9 || b % 4 != 1 {
        return Err(precondition(L, "b must be 9, 13, ... (1 mod 4)"));
    }
    if c < 2 || c % 4 != 2 {
        return Err(precondition(L, "c must be 2 mod 4"));
    }
    let t = (c as i64 - 2) / 4;
    let v = (a as i64 - 5) / 4;
    let w = (b as i64 - 9) / 4;
    let half = a as i64 * b as i64 * c as i64;
    let q = 2 * t + 1;

    let fam_a = block_a_set(4 * t + 5, 8 * (v + w) * q + 32 * t + 16, 4 * t + 1)?;
    let fam_b = block_b_set(
        9,
        (32 * v * (w + 1) + 32 * (v + w)) * q + 148 * t + 70,
        8 * (v + w) * q + 32 * t + 12,
    )?;
    let fam_c = block_c_set(
        16 * (v + w) * q + 80 * t + 37,
        (32 * v * (w + 1) + 32 * (v + w)) * q + 148 * t + 71,
        16 * (v + w) * q + 116 * t + 55,
    )?;

    let x = 16 * (v + w) * q;
    let m1 = iv(L, x + 80 * t + 38, x + 80 * t + 39, 1)?;
    let m2 = iv(L, x + 80 * t + 44, x + 80 * t + 45, 1)?;
    let m3 = iv(L, 40 * t + 20, 40 * t + 26, 2)?;
    let m3a = iv(L, 40 * t + 20, 40 * t + 22, 2)?;
    let m3b = iv(L, 40 * t + 24, 40 * t + 26, 2)?;
    let m4a = iv(L, 12, 8 * t + 8, 4)?;
    let m4b = iv(L, 14, 8 * t + 10, 4)?;
    let m5 = iv(L, 40 * t + 28, 56 * t + 32, 4)?;
    let m6 = iv(L, 56 * t + 34, x + 80 * t + 36, 2)?;
    let m7 = iv(L, x + 80 * t + 40, x + 80 * t + 42, 2)?;
    let m8 = iv(L, x + 80 * t + 48, x + 80 * t + 49, 1)?;
    let m9 = iv(L, x + 80 * t + 53, x + 112 * t + 49, 4)?;
    let m10 = iv(L, x + 80 * t + 50, x + 112 * t + 52, 2)?;
    let m11a = iv(L, x + 112 * t + 53, x + 116 * t + 51, 2)?;
    let m11b = iv(L, x + 112 * t + 54, x + 116 * t + 52, 2)?;
    let m11c = iv(L, x + 116 * t + 53, x + 116 * t + 54, 1)?;
    let m12 = iv(
        L,
        x + 116 * t + 59,
        (32 * v * (w + 1) + 24 * (v + w)) * q + 116 * t + 58,
        1,
    )?;
    check_split(L, &m3, &[&m3a, &m3b])?;
    check_coverage(
        L,
        half,
        &[
            &fam_a.claimed_entries,
            &fam_b.claimed_entries,
            &fam_c.claimed_entries,
        ],
        &[
            &m1, &m2, &m3, &m4a, &m4b, &m5, &m6, &m7, &m8, &m9, &m10, &m11a, &m11b, &m11c,
            &m12,
        ],
    )?;

    let f = pair_each(L, &[&m4a, &m4b, &m5, &m9], Eps::Four)?;
    let g = pair_each(L, &[&m6, &m7, &m10, &m11a, &m11b], Eps::Two)?;
    let h = pair_each(L, &[&m8, &m11c, &m12], Eps::One)?;
    let beta = (4 * (v + w) * q + 16 * t + 3) as usize;
    let gamma = ((16 * v * (w + 1) + 4 * (v + w)) * q + 2) as usize;
    debug_assert_eq!(g.len(), beta);
    debug_assert_eq!(h.len(), gamma);

    let n_r2 = (8 * t + 1) as usize;
    let mut z6 = r2_run(L, &f, &g, n_r2)?;
    z6.push(r1_one(L, &g[beta - 1], &h[gamma - 2], &h[gamma - 1])?);
    let mut z4 = q_run(L, 2, &g, 2 * n_r2, (2 * (v + w) * q) as usize)?;
    z4.extend(q_run(
        L,
        1,
        &h,
        0,
        ((8 * v * (w + 1) + 2 * (v + w)) * q) as usize,
    )?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.w4 = vec![u1_from(L, &m1, &m3a)?, u1_from(L, &m2, &m3b)?].into();
    pools.z6 = z6.into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c - 2 {
        arrays.push(banded_z6(L, a, b, &mut pools)?);
    }
    for _ in 0..2 {
        arrays.push(corner5_w4(L, a, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(a,b;2c) for a ≡ 1, b ≡ 3 (mod 4), a ≥ 5, b ≥ 11, c ≡ 2 (mod 4).
pub(super) fn a1_b3_c2(a: usize, b: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "(4v+5)x(4w+11) set, c = 2 mod 4";
    if a < 5 || a % 4 != 1 {
        return Err(precondition(L, "a must be 5, 9, ... (1 mod 4)"));
    }
    if b < 11 || b % 4 != 3 {
        return Err(precondition(L, "b must be 11, 15, ... (3 mod 4)"));
    }
    if c < 2 || c % 4 != 2 {
        return Err(precondition(L, "c must be 2 mod 4"));
    }
    let t = (c as i64 - 2) / 4;
    let v = (a as i64 - 5) / 4;
    let w = (b as i64 - 11) / 4;
    let half = a as i64 * b as i64 * c as i64;
    let q = 2 * t + 1;

    let fam_a = block_a_set(4 * t + 5, 8 * (v + w) * q + 40 * t + 20, 4 * t + 1)?;
    let fam_b = block_b_set(
        9,
        (16 * v * (2 * w + 3) + 32 * (v + w)) * q + 180 * t + 86,
        8 * (v + w) * q + 40 * t + 16,
    )?;
    let fam_c = block_c_set(
        16 * (v + w) * q + 96 * t + 42,
        (16 * v * (2 * w + 3) + 32 * (v + w)) * q + 180 * t + 87,
        16 * (v + w) * q + 128 * t + 61,
    )?;

    let x = 16 * (v + w) * q;
    let m1 = iv(L, 12, 8 * t + 10, 2)?;
    let m2 = iv(L, 40 * t + 20, 40 * t + 26, 2)?;
    let m3 = iv(L, 40 * t + 28, 56 * t + 32, 4)?;
    let m4 = iv(L, 56 * t + 34, x + 96 * t + 40, 2)?;
    let m5 = iv(L, x + 96 * t + 44, x + 96 * t + 45, 1)?;
    let m6 = iv(L, x + 96 * t + 47, x + 96 * t + 49, 2)?;
    let m7 = iv(L, x + 96 * t + 50, x + 96 * t + 52, 2)?;
    let m8 = iv(L, x + 96 * t + 53, x + 128 * t + 57, 4)?;
    let m9 = iv(L, x + 96 * t + 54, x + 128 * t + 60, 2)?;
    let m10a = iv(L, x + 128 * t + 65, x + 128 * t + 66, 1)?;
    let m10b = iv(L, x + 128 * t + 67, x + 140 * t + 70, 1)?;
    let m11 = iv(
        L,
        x + 140 * t + 71,
        (16 * v * (2 * w + 3) + 24 * (v + w)) * q + 140 * t + 70,
        1,
    )?;
    check_coverage(
        L,
        half,
        &[
            &fam_a.claimed_entries,
            &fam_b.claimed_entries,
            &fam_c.claimed_entries,
        ],
        &[&m1, &m2, &m3, &m4, &m5, &m6, &m7, &m8, &m9, &m10a, &m10b, &m11],
    )?;

    let f = pair_each(L, &[&m3, &m8], Eps::Four)?;
    let g = pair_each(L, &[&m1, &m2, &m4, &m6, &m7, &m9], Eps::Two)?;
    let h = pair_each(L, &[&m10b, &m11], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (3 * t + 1) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, (2 * (v + w) * q + 10 * t + 4) as usize)?);
    z4.extend(q_run(
        L,
        1,
        &h,
        0,
        ((4 * v * (2 * w + 3) + 2 * (v + w)) * q + 3 * t + 1) as usize,
    )?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.w2 = vec![u2_from(L, &m5)?, u2_from(L, &m10a)?].into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c - 2 {
        arrays.push(banded(L, a, b, &mut pools)?);
    }
    for _ in 0..2 {
        arrays.push(corner5_w2(L, a, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(a,7;2c) for a ≡ 1 (mod 4), a ≥ 9, c ≡ 2 (mod 4).
pub(super) fn a1_b7_c2(a: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "(4v+9)x7 set, c = 2 mod 4";
    if a < 9 || a % 4 != 1 {
        return Err(precondition(L, "a must be 9, 13, ... (1 mod 4)"));
    }
    if c < 2 || c % 4 != 2 {
        return Err(precondition(L, "c must be 2 mod 4"));
    }
    let t = (c as i64 - 2) / 4;
    let v = (a as i64 - 9) / 4;
    let half = a as i64 * 7 * c as i64;
    let q = 2 * t + 1;

    let fam_a = block_a_set(4 * t + 5, 8 * v * q + 40 * t + 20, 4 * t + 1)?;
    let fam_b = block_b_set(9, 48 * v * q + 212 * t + 102, 8 * v * q + 40 * t + 16)?;
    let fam_c = block_c_set(
        16 * v * q + 96 * t + 42,
        48 * v * q + 212 * t + 103,
        16 * v * q + 128 * t + 61,
    )?;

    let x = 16 * v * q;
    let m1 = iv(L, 12, 8 * t + 10, 2)?;
    let m2 = iv(L, 40 * t + 20, 40 * t + 26, 2)?;
    let m3 = iv(L, 40 * t + 28, 56 * t + 32, 4)?;
    let m4 = iv(L, 56 * t + 34, x + 96 * t + 40, 2)?;
    let m5 = iv(L, x + 96 * t + 44, x + 96 * t + 45, 1)?;
    let m6 = iv(L, x + 96 * t + 47, x + 96 * t + 49, 2)?;
    let m7 = iv(L, x + 96 * t + 50, x + 96 * t + 52, 2)?;
    let m8 = iv(L, x + 96 * t + 53, x + 128 * t + 57, 4)?;
    let m9 = iv(L, x + 96 * t + 54, x + 128 * t + 60, 2)?;
    let m10a = iv(L, x + 128 * t + 65, x + 128 * t + 66, 1)?;
    let m10b = iv(L, x + 128 * t + 67, x + 172 * t + 86, 1)?;
    let m11 = iv(L, x + 172 * t + 87, 40 * v * q + 172 * t + 86, 1)?;
    check_coverage(
        L,
        half,
        &[
            &fam_a.claimed_entries,
            &fam_b.claimed_entries,
            &fam_c.claimed_entries,
        ],
        &[&m1, &m2, &m3, &m4, &m5, &m6, &m7, &m8, &m9, &m10a, &m10b, &m11],
    )?;

    let f = pair_each(L, &[&m3, &m8], Eps::Four)?;
    let g = pair_each(L, &[&m1, &m2, &m4, &m6, &m7, &m9], Eps::Two)?;
    let h = pair_each(L, &[&m10b, &m11], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (3 * t + 1) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, (2 * v * q + 10 * t + 4) as usize)?);
    z4.extend(q_run(L, 1, &h, 0, (6 * v * q + 11 * t + 5) as usize)?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.w2 = vec![u2_from(L, &m5)?, u2_from(L, &m10a)?].into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c - 2 {
        arrays.push(banded(L, a, 7, &mut pools)?);
    }
    for _ in 0..2 {
        arrays.push(corner5_w2(L, a, 7, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(a,b;2c) for a ≡ b ≡ 3 (mod 4), a, b ≥ 7, c ≡ 2 (mod 4).
pub(super) fn a3_b3_c2(a: usize, b: usize, c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "(4v+7)x(4w+7) set, c = 2 mod 4";
    if a < 7 || a % 4 != 3 {
        return Err(precondition(L, "a must be 7, 11, ... (3 mod 4)"));
    }
    if b < 7 || b % 4 != 3 {
        return Err(precondition(L, "b must be 7, 11, ... (3 mod 4)"));
    }
    if c < 2 || c % 4 != 2 {
        return Err(precondition(L, "c must be 2 mod 4"));
    }
    let t = (c as i64 - 2) / 4;
    let v = (a as i64 - 7) / 4;
    let w = (b as i64 - 7) / 4;
    let half = a as i64 * b as i64 * c as i64;
    let q = 2 * t + 1;

    let fam_a = block_a_set(4 * t + 5, 8 * (v + w) * q + 32 * t + 16, 4 * t + 1)?;
    let fam_b = block_b_set(
        9,
        (32 * v * w + 48 * (v + w)) * q + 164 * t + 78,
        8 * (v + w) * q + 32 * t + 12,
    )?;
    let fam_c = block_c_set(
        16 * (v + w) * q + 80 * t + 34,
        (32 * v * w + 48 * (v + w)) * q + 164 * t + 79,
        16 * (v + w) * q + 112 * t + 55,
    )?;

    let x = 16 * (v + w) * q;
    let m1 = iv(L, x + 80 * t + 36, x + 80 * t + 37, 1)?;
    let m2 = iv(L, x + 80 * t + 45, x + 80 * t + 46, 1)?;
    let m3 = iv(L, 12, 8 * t + 10, 2)?;
    let m4 = iv(L, 40 * t + 20, 40 * t + 26, 2)?;
    let m5 = iv(L, 40 * t + 28, 56 * t + 32, 4)?;
    let m6 = iv(L, 56 * t + 34, x + 80 * t + 32, 2)?;
    let m7 = iv(L, x + 80 * t + 39, x + 80 * t + 41, 2)?;
    let m8 = iv(L, x + 80 * t + 42, x + 80 * t + 44, 2)?;
    let m9 = iv(L, x + 80 * t + 48, x + 112 * t + 54, 2)?;
    let m10 = iv(L, x + 80 * t + 49, x + 112 * t + 53, 4)?;
    let m11 = iv(L, x + 112 * t + 59, x + 132 * t + 66, 1)?;
    let m12 = iv(
        L,
        x + 132 * t + 67,
        (32 * v * w + 40 * (v + w)) * q + 132 * t + 66,
        1,
    )?;
    check_coverage(
        L,
        half,
        &[
            &fam_a.claimed_entries,
            &fam_b.claimed_entries,
            &fam_c.claimed_entries,
        ],
        &[&m1, &m2, &m3, &m4, &m5, &m6, &m7, &m8, &m9, &m10, &m11, &m12],
    )?;

    let f = pair_each(L, &[&m5, &m10], Eps::Four)?;
    let g = pair_each(L, &[&m3, &m4, &m6, &m7, &m8, &m9], Eps::Two)?;
    let h = pair_each(L, &[&m11, &m12], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (3 * t + 1) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, (2 * (v + w) * q + 8 * t + 3) as usize)?);
    z4.extend(q_run(
        L,
        1,
        &h,
        0,
        ((8 * v * w + 6 * (v + w)) * q + 5 * t + 2) as usize,
    )?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.w2 = vec![u2_from(L, &m1)?, u2_from(L, &m2)?].into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c - 2 {
        arrays.push(banded(L, a, b, &mut pools)?);
    }
    for _ in 0..2 {
        arrays.push(corner5_w2(L, a, b, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}
