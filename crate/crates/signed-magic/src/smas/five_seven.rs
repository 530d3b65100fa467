//! Builders for the 5x7 set family. Small counts come from the transcribed
//! golden sets; everything else uses the wide 3x3 family plus residual
//! pairing, exactly like the general case but with 5x7-specific frames.

use super::assemble::*;
use super::SmasError;
use crate::blocks::{block_a2_set, block_b_set, block_c2_set, block_c_set, special_block, SpecialBlock};
use crate::grid::PartialGrid;
use crate::intset::{Eps, IntSet};

fn precondition(label: &str, msg: &str) -> SmasError {
    SmasError::LemmaPrecondition(format!("{label}: {msg}"))
}

/// SMAS(5,7;2c) for c ≡ 0 (mod 4), c ≥ 4.
pub(super) fn five_seven_c0(c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "5x7 set, c div by 4";
    if c < 4 || c % 4 != 0 {
        return Err(precondition(L, "c must be a positive multiple of 4"));
    }
    let t = (c as i64 - 4) / 4;
    let half = 35 * c as i64;

    let fam_a = block_a2_set(4 * (t + 1), 24 * (t + 1), 10 * (t + 1), 2 * (t + 1))?;
    let fam_b = block_b_set(1, 116 * (t + 1), 24 * (t + 1))?;

    let m1 = iv(L, 2, 8 * t + 8, 2)?;
    let m2 = iv(L, 52 * t + 53, 56 * t + 55, 2)?;
    let m3 = iv(L, 56 * t + 58, 60 * t + 60, 2)?;
    let m4 = iv(L, 60 * t + 61, 64 * t + 64, 1)?;
    let m5 = iv(L, 64 * t + 65, 72 * t + 69, 4)?;
    let m6 = iv(L, 68 * t + 70, 72 * t + 72, 2)?;
    let m7 = iv(L, 72 * t + 73, 80 * t + 80, 1)?;
    let m8 = iv(L, 80 * t + 81, 88 * t + 85, 4)?;
    let m9 = iv(L, 84 * t + 86, 88 * t + 88, 2)?;
    let m10 = iv(L, 88 * t + 89, 92 * t + 92, 1)?;
    check_coverage(
        L,
        half,
        &[&fam_a.claimed_entries, &fam_b.claimed_entries],
        &[&m1, &m2, &m3, &m4, &m5, &m6, &m7, &m8, &m9, &m10],
    )?;

    let f = pair_each(L, &[&m5, &m8], Eps::Four)?;
    let g = pair_each(L, &[&m1, &m2, &m3, &m6, &m9], Eps::Two)?;
    let h = pair_each(L, &[&m4, &m7, &m10], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (t + 1) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, (3 * t + 3) as usize)?);
    z4.extend(q_run(L, 1, &h, 0, (4 * t + 4) as usize)?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c {
        arrays.push(banded(L, 5, 7, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(5,7;2c) for c ≡ 1 (mod 4), c ≥ 5 (c = 1 is a golden set).
pub(super) fn five_seven_c1(c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "5x7 set, c = 1 mod 4";
    if c < 5 || c % 4 != 1 {
        return Err(precondition(L, "c must be 5, 9, ... (1 mod 4)"));
    }
    let t = (c as i64 - 5) / 4;
    let half = 35 * c as i64;
    let q = 4 * t + 5;

    let fam_a = block_a2_set(4 * t + 5, 6 * q, 10 * t + 12, 2 * t + 2)?;
    let fam_b = block_b_set(1, 29 * q, 6 * q)?;
    let companion = special_block(SpecialBlock::APrime(t))?;
    let companion_claim: IntSet = companion
        .entries()
        .chain(companion.negated().entries())
        .collect();

    let m1 = iv(L, 12, 8 * t + 10, 2)?;
    let m2 = iv(L, 40 * t + 44, 40 * t + 46, 2)?;
    let m3 = iv(L, 52 * t + 65, 56 * t + 63, 2)?;
    let m4 = iv(L, 56 * t + 64, 56 * t + 67, 1)?;
    let m5 = iv(L, 56 * t + 68, 60 * t + 70, 2)?;
    let m6 = iv(L, 60 * t + 72, 64 * t + 75, 1)?;
    let m7 = iv(L, 64 * t + 77, 64 * t + 79, 2)?;
    let m8 = iv(L, 64 * t + 83, 72 * t + 87, 4)?;
    let m9 = iv(L, 68 * t + 80, 72 * t + 82, 2)?;
    let m10 = iv(L, 72 * t + 84, 72 * t + 86, 2)?;
    let m11 = iv(L, 72 * t + 88, 80 * t + 91, 1)?;
    let m12 = iv(L, 80 * t + 93, 80 * t + 95, 2)?;
    let m13 = iv(L, 80 * t + 99, 88 * t + 103, 4)?;
    let m14 = iv(L, 84 * t + 96, 88 * t + 102, 2)?;
    let m15 = iv(L, 88 * t + 104, 92 * t + 105, 1)?;
    let m16 = iv(L, 92 * t + 106, 92 * t + 112, 2)?;
    let m17 = iv(L, 92 * t + 113, 92 * t + 114, 1)?;
    check_coverage(
        L,
        half,
        &[
            &fam_a.claimed_entries,
            &fam_b.claimed_entries,
            &companion_claim,
        ],
        &[
            &m1, &m2, &m3, &m4, &m5, &m6, &m7, &m8, &m9, &m10, &m11, &m12, &m13, &m14, &m15,
            &m16, &m17,
        ],
    )?;

    let f = pair_each(L, &[&m8, &m13], Eps::Four)?;
    let g = pair_each(
        L,
        &[&m1, &m2, &m3, &m5, &m7, &m9, &m10, &m12, &m14, &m16],
        Eps::Two,
    )?;
    let h = pair_each(L, &[&m4, &m6, &m11, &m15, &m17], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (t + 1) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, (3 * t + 5) as usize)?);
    z4.extend(q_run(L, 1, &h, 0, (4 * t + 4) as usize)?);

    let mut pools = Pools::default();
    let mut x3: Vec<PartialGrid> = fam_a.members;
    x3.push(companion.clone());
    x3.push(companion.negated());
    pools.x3 = x3.into();
    pools.x2 = fam_b.members.into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c {
        arrays.push(banded(L, 5, 7, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(5,7;2c) for c ≡ 3 (mod 4), c ≥ 7 (c = 3 is a golden set).
pub(super) fn five_seven_c3(c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "5x7 set, c = 3 mod 4";
    if c < 7 || c % 4 != 3 {
        return Err(precondition(L, "c must be 7, 11, ... (3 mod 4)"));
    }
    let t = (c as i64 - 7) / 4;
    let half = 35 * c as i64;

    let fam_a = block_a2_set(4 * t + 9, 24 * t + 42, 10 * t + 17, 2 * t + 3)?;
    let fam_b = block_b_set(9, 116 * t + 199, 24 * t + 38)?;
    let fam_c = block_c_set(92 * t + 148, 116 * t + 200, 92 * t + 158)?;

    let m1 = iv(L, 12, 8 * t + 18, 2)?;
    let m2 = iv(L, 40 * t + 68, 40 * t + 72, 4)?;
    let m3 = iv(L, 52 * t + 91, 56 * t + 93, 2)?;
    let m4 = iv(L, 56 * t + 94, 56 * t + 95, 1)?;
    let m5 = iv(L, 56 * t + 98, 60 * t + 100, 2)?;
    let m6 = iv(L, 60 * t + 102, 64 * t + 111, 1)?;
    let m7 = iv(L, 64 * t + 113, 64 * t + 115, 2)?;
    let m8 = iv(L, 64 * t + 119, 72 * t + 123, 4)?;
    let m9 = iv(L, 68 * t + 118, 72 * t + 124, 2)?;
    let m10 = iv(L, 72 * t + 126, 80 * t + 131, 1)?;
    let m11 = iv(L, 80 * t + 132, 80 * t + 135, 1)?;
    let m12 = iv(L, 80 * t + 143, 88 * t + 147, 4)?;
    let m13 = iv(L, 80 * t + 137, 80 * t + 139, 2)?;
    let m14 = iv(L, 84 * t + 142, 92 * t + 144, 2)?;
    let m15 = iv(L, 88 * t + 151, 92 * t + 149, 2)?;
    let m16 = iv(L, 92 * t + 146, 92 * t + 150, 4)?;
    let m17 = iv(L, 92 * t + 151, 92 * t + 153, 2)?;
    let m18 = iv(L, 92 * t + 155, 92 * t + 156, 1)?;
    check_coverage(
        L,
        half,
        &[
            &fam_a.claimed_entries,
            &fam_b.claimed_entries,
            &fam_c.claimed_entries,
        ],
        &[
            &m1, &m2, &m3, &m4, &m5, &m6, &m7, &m8, &m9, &m10, &m11, &m12, &m13, &m14, &m15,
            &m16, &m17, &m18,
        ],
    )?;

    let f = pair_each(L, &[&m2, &m8, &m12, &m16], Eps::Four)?;
    let g = pair_each(
        L,
        &[&m1, &m3, &m5, &m7, &m9, &m13, &m14, &m15, &m17],
        Eps::Two,
    )?;
    let h = pair_each(L, &[&m6, &m10, &m11], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (t + 2) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, (4 * t + 5) as usize)?);
    z4.extend(q_run(L, 1, &h, 0, (3 * t + 5) as usize)?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.w2 = vec![u2_from(L, &m4)?, u2_from(L, &m18)?].into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c - 2 {
        arrays.push(banded(L, 5, 7, &mut pools)?);
    }
    for _ in 0..2 {
        arrays.push(corner5_w2(L, 5, 7, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}

/// SMAS(5,7;2c) for c ≡ 2 (mod 4), c ≥ 6 (c = 2 is a golden set).
pub(super) fn five_seven_c2(c: usize) -> BuildResult<Vec<PartialGrid>> {
    const L: &str = "5x7 set, c = 2 mod 4";
    if c < 6 || c % 4 != 2 {
        return Err(precondition(L, "c must be 6, 10, ... (2 mod 4)"));
    }
    let t = (c as i64 - 6) / 4;
    let half = 35 * c as i64;

    let fam_a = block_a2_set(4 * t + 12, 24 * t + 38, 10 * t + 14, 2 * t + 2)?;
    let fam_b = block_b_set(17, 116 * t + 164, 24 * t + 30)?;
    let fam_c = block_c2_set(92 * t + 118, 116 * t + 165, 60 * t + 89)?;
    let d = special_block(SpecialBlock::D(t))?;
    let d_claim: IntSet = d.entries().chain(d.negated().entries()).collect();

    let m1 = iv(L, 16, 18, 2)?;
    let m2 = iv(L, 20, 24, 4)?;
    let m3 = iv(L, 26, 8 * t + 24, 2)?;
    let m4 = iv(L, 40 * t + 60, 40 * t + 72, 4)?;
    let m5 = iv(L, 56 * t + 74, 56 * t + 86, 4)?;
    let m6 = iv(L, 52 * t + 81, 56 * t + 83, 2)?;
    let m7 = iv(L, 56 * t + 90, 60 * t + 88, 2)?;
    let m8a = iv(L, 60 * t + 93, 60 * t + 94, 1)?;
    let m8b = iv(L, 60 * t + 95, 60 * t + 96, 1)?;
    let m8c = iv(L, 60 * t + 97, 64 * t + 96, 1)?;
    let m9 = iv(L, 64 * t + 97, 64 * t + 107, 2)?;
    let m10 = iv(L, 64 * t + 109, 72 * t + 113, 4)?;
    let m11 = iv(L, 68 * t + 102, 80 * t + 112, 2)?;
    let m12 = iv(L, 72 * t + 117, 80 * t + 123, 2)?;
    let m13 = iv(L, 80 * t + 125, 88 * t + 129, 4)?;
    let m14 = iv(L, 84 * t + 118, 92 * t + 116, 2)?;
    let m15 = iv(L, 88 * t + 133, 92 * t + 131, 2)?;
    let m16 = iv(L, 92 * t + 120, 92 * t + 124, 4)?;
    let m17 = iv(L, 92 * t + 126, 92 * t + 128, 2)?;
    let m18 = iv(L, 92 * t + 132, 92 * t + 134, 2)?;
    check_coverage(
        L,
        half,
        &[
            &fam_a.claimed_entries,
            &fam_b.claimed_entries,
            &fam_c.claimed_entries,
            &d_claim,
        ],
        &[
            &m1, &m2, &m3, &m4, &m5, &m6, &m7, &m8a, &m8b, &m8c, &m9, &m10, &m11, &m12, &m13,
            &m14, &m15, &m16, &m17, &m18,
        ],
    )?;

    let f = pair_each(L, &[&m2, &m4, &m5, &m10, &m13, &m16], Eps::Four)?;
    let g = pair_each(
        L,
        &[&m1, &m3, &m6, &m7, &m9, &m11, &m12, &m14, &m15, &m17, &m18],
        Eps::Two,
    )?;
    let h = pair_each(L, &[&m8c], Eps::One)?;

    let mut z4 = q_run(L, 3, &f, 0, (t + 4) as usize)?;
    z4.extend(q_run(L, 2, &g, 0, (6 * t + 6) as usize)?);
    z4.extend(q_run(L, 1, &h, 0, t as usize)?);

    let mut pools = Pools::default();
    pools.x3 = fam_a.members.into();
    pools.x2 = fam_b.members.into();
    pools.y5 = fam_c.members.into();
    pools.x5 = vec![d.clone(), d.negated()].into();
    pools.w2 = vec![u2_from(L, &m8a)?, u2_from(L, &m8b)?].into();
    pools.z4 = z4.into();

    let mut arrays = Vec::with_capacity(2 * c);
    for _ in 0..2 * c - 4 {
        arrays.push(banded(L, 5, 7, &mut pools)?);
    }
    for _ in 0..2 {
        arrays.push(corner5_w2(L, 5, 7, &mut pools)?);
    }
    for _ in 0..2 {
        arrays.push(corner53(L, &mut pools)?);
    }
    pools.assert_empty(L)?;
    Ok(arrays)
}
