//! The parameterized zero-sum block families and constant blocks that every
//! set construction is tiled from, plus the four transcribed golden array
//! sets used as small-case bases.
//!
//! Each family constructor re-derives the multiset of entries from the built
//! grids and checks it against the family's claimed entry ranges before
//! returning; the entry bookkeeping is the most error-prone surface here, so
//! a mismatch fails construction instead of surfacing later as a near-valid
//! array.

use crate::error::{Error, Result};
use crate::grid::{ArraySet, PartialGrid};
use crate::intset::{interval, Eps, IntSet, TwoSet};

/// A block family: its member grids and the ±-closed set its entries claim
/// to cover exactly.
#[derive(Debug, Clone)]
pub struct BlockSet {
    pub members: Vec<PartialGrid>,
    pub claimed_entries: IntSet,
}

/// Row-sum signature a family's members must satisfy (column sums are always
/// required to be zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RowSig {
    ZeroSum,
    /// Rows sum to (0, 0, 0, 1, -1).
    OffByOnePair,
}

fn two_row_block(top: &[i64]) -> PartialGrid {
    let bottom: Vec<i64> = top.iter().map(|&v| -v).collect();
    PartialGrid::from_rows(&[top.to_vec(), bottom])
}

fn expect_eps(p: &TwoSet, eps: Eps, what: &str) -> Result<()> {
    if p.eps() != eps {
        return Err(Error::Domain(format!(
            "{what} requires a 2-set of type {}, got type {}",
            eps.value(),
            p.eps().value()
        )));
    }
    Ok(())
}

/// The 2x4 zero-sum block built from two 2-sets of equal type.
///
/// Kind 1/2/3 consumes pairs of type 1/2/4 respectively; the top row is
/// `(x1, -(x1+e), -x2, x2+e)` and the bottom row its negation.
pub fn q_block(kind: u8, p1: &TwoSet, p2: &TwoSet) -> Result<PartialGrid> {
    let eps = match kind {
        1 => Eps::One,
        2 => Eps::Two,
        3 => Eps::Four,
        _ => return Err(Error::Domain(format!("unknown q-block kind {kind}"))),
    };
    expect_eps(p1, eps, "q-block")?;
    expect_eps(p2, eps, "q-block")?;
    Ok(two_row_block(&[p1.low(), -p1.high(), -p2.low(), p2.high()]))
}

/// The 2x6 zero-sum block led by one wider 2-set over two narrower ones:
/// kind 1 takes a type-2 lead with type-1 tails, kind 2 a type-4 lead with
/// type-2 tails.
pub fn r_block(kind: u8, lead: &TwoSet, p1: &TwoSet, p2: &TwoSet) -> Result<PartialGrid> {
    let (lead_eps, tail_eps) = match kind {
        1 => (Eps::Two, Eps::One),
        2 => (Eps::Four, Eps::Two),
        _ => return Err(Error::Domain(format!("unknown r-block kind {kind}"))),
    };
    expect_eps(lead, lead_eps, "r-block lead")?;
    expect_eps(p1, tail_eps, "r-block tail")?;
    expect_eps(p2, tail_eps, "r-block tail")?;
    Ok(two_row_block(&[
        lead.low(),
        -lead.high(),
        -p1.low(),
        p1.high(),
        -p2.low(),
        p2.high(),
    ]))
}

/// The compensating blocks with row sums `(-1, +1)` and zero column sums:
/// kind 1 is 2x4 (type-1 pair plus type-2 pair), kind 2 is 2x2 (type-1 pair).
pub fn u_block(kind: u8, x: &TwoSet, y: Option<&TwoSet>) -> Result<PartialGrid> {
    expect_eps(x, Eps::One, "u-block")?;
    match (kind, y) {
        (1, Some(y)) => {
            expect_eps(y, Eps::Two, "u-block kind 1")?;
            Ok(two_row_block(&[y.low(), -y.high(), -x.low(), x.high()]))
        }
        (2, None) => Ok(two_row_block(&[x.low(), -x.high()])),
        (1, None) => Err(Error::Domain("u-block kind 1 needs a second pair".into())),
        (2, Some(_)) => Err(Error::Domain("u-block kind 2 takes a single pair".into())),
        _ => Err(Error::Domain(format!("unknown u-block kind {kind}"))),
    }
}

fn entries_of(members: &[PartialGrid]) -> Result<IntSet> {
    IntSet::from_distinct(members.iter().flat_map(|g| g.entries())).map_err(|e| match e {
        Error::SetOverlap(v) => {
            Error::BlockIntegrity(format!("value {v} appears twice across the family"))
        }
        other => other,
    })
}

fn check_signature(members: &[PartialGrid], sig: RowSig) -> Result<()> {
    for (i, g) in members.iter().enumerate() {
        let rs = g.row_sums();
        let ok = match sig {
            RowSig::ZeroSum => rs.iter().all(|&s| s == 0),
            RowSig::OffByOnePair => rs == [0, 0, 0, 1, -1],
        };
        if !ok {
            return Err(Error::BlockIntegrity(format!(
                "member {i} has row sums {rs:?}, wanted {sig:?}"
            )));
        }
        if let Some(c) = g.col_sums().iter().position(|&s| s != 0) {
            return Err(Error::BlockIntegrity(format!(
                "member {i} column {c} does not sum to zero"
            )));
        }
    }
    Ok(())
}

fn finish_family(members: Vec<PartialGrid>, claim_parts: &[IntSet], sig: RowSig) -> Result<BlockSet> {
    let claimed_pos = IntSet::union_all(claim_parts.iter())?;
    let claimed_entries = claimed_pos.plus_minus()?;
    let actual = entries_of(&members)?;
    if actual != claimed_entries {
        let missing: Vec<i64> = claimed_entries.iter().filter(|&v| !actual.contains(v)).take(4).collect();
        let extra: Vec<i64> = actual.iter().filter(|&v| !claimed_entries.contains(v)).take(4).collect();
        return Err(Error::BlockIntegrity(format!(
            "entry claim mismatch: missing {missing:?}, unexpected {extra:?}"
        )));
    }
    check_signature(&members, sig)?;
    Ok(BlockSet { members, claimed_entries })
}

/// Family of `2u` square zero-sum blocks of size 3 in mirrored `{+A, -A}`
/// pairs (positives first, then their negations).
///
/// Requires `u <= alpha + 1`; entries cover four disjoint arithmetic ranges
/// determined by `alpha`, `beta`, `u`.
pub fn block_a_set(alpha: i64, beta: i64, u: i64) -> Result<BlockSet> {
    if alpha < 0 || beta < 0 || u < 0 || u > alpha + 1 {
        return Err(Error::BlockParams(format!(
            "3x3 family needs 0 <= u <= alpha+1, got alpha={alpha} beta={beta} u={u}"
        )));
    }
    let mut pos = Vec::with_capacity(u as usize);
    for i in 0..u {
        pos.push(PartialGrid::from_rows(&[
            vec![4 * alpha + 6 * u + 4 + 4 * i, -(2 * alpha + 2 * u + 2 + 2 * i), -(2 * alpha + 4 * u + 2 + 2 * i)],
            vec![-(2 * alpha + 2 + 2 * i), 2 * alpha + 2 * beta + 2 * u + 3 + 4 * i, -(2 * beta + 2 * u + 1 + 2 * i)],
            vec![-(2 * alpha + 6 * u + 2 + 2 * i), -(2 * beta + 1 + 2 * i), 2 * alpha + 2 * beta + 6 * u + 3 + 4 * i],
        ]));
    }
    let mut members = pos.clone();
    members.extend(pos.iter().map(|g| g.negated()));
    finish_family(
        members,
        &[
            interval(2 * alpha + 2, 2 * alpha + 8 * u, 2)?,
            interval(4 * alpha + 6 * u + 4, 4 * alpha + 10 * u, 4)?,
            interval(2 * beta + 1, 2 * beta + 4 * u - 1, 2)?,
            interval(2 * alpha + 2 * beta + 2 * u + 3, 2 * alpha + 2 * beta + 10 * u - 1, 4)?,
        ],
        RowSig::ZeroSum,
    )
}

/// Family of `u` zero-sum 2x3 blocks with top rows
/// `(alpha+2j, -(alpha+beta+j), beta-j)`. Requires `beta >= alpha + 3u - 2`.
pub fn block_b_set(alpha: i64, beta: i64, u: i64) -> Result<BlockSet> {
    if alpha < 1 || beta < 1 || u < 1 || beta < alpha + 3 * u - 2 {
        return Err(Error::BlockParams(format!(
            "2x3 family needs positive parameters with beta >= alpha+3u-2, got alpha={alpha} beta={beta} u={u}"
        )));
    }
    let members: Vec<PartialGrid> = (0..u)
        .map(|j| two_row_block(&[alpha + 2 * j, -(alpha + beta + j), beta - j]))
        .collect();
    finish_family(
        members,
        &[
            interval(alpha, alpha + 2 * u - 2, 2)?,
            interval(beta - u + 1, beta, 1)?,
            interval(alpha + beta, alpha + beta + u - 1, 1)?,
        ],
        RowSig::ZeroSum,
    )
}

/// The two 5x5 blocks with row sums `(0,0,0,1,-1)` and zero column sums.
/// Requires `beta > gamma+3 > alpha+12 > 22`.
pub fn block_c_set(alpha: i64, beta: i64, gamma: i64) -> Result<BlockSet> {
    if !(beta > gamma + 3 && gamma + 3 > alpha + 12 && alpha + 12 > 22) {
        return Err(Error::BlockParams(format!(
            "5x5 family needs beta > gamma+3 > alpha+12 > 22, got alpha={alpha} beta={beta} gamma={gamma}"
        )));
    }
    let (a, b, g) = (alpha, beta, gamma);
    let c1 = PartialGrid::from_rows(&[
        vec![10, -8, -2, 5, -5],
        vec![-6, -a, a + 6, -(b + 6), b + 6],
        vec![-4, a + 9, -(a + 4), b, -(b + 1)],
        vec![1, -(b + 5), b + 3, -(g + 1), g + 3],
        vec![-1, b + 4, -(b + 3), g + 2, -(g + 3)],
    ]);
    let c2 = PartialGrid::from_rows(&[
        vec![-10, 8, 2, 7, -7],
        vec![6, a, -(a + 6), -(b + 7), b + 7],
        vec![4, -(a + 9), a + 4, b + 1, -b],
        vec![-3, b + 5, -(b + 2), g + 1, -g],
        vec![3, -(b + 4), b + 2, -(g + 2), g],
    ]);
    finish_family(
        vec![c1, c2],
        &[
            interval(1, 7, 2)?,
            interval(2, 10, 2)?,
            IntSet::from_distinct([a, a + 4, a + 6, a + 9])?,
            interval(g, g + 3, 1)?,
            interval(b, b + 7, 1)?,
        ],
        RowSig::OffByOnePair,
    )
}

/// Family of `4u` square zero-sum blocks of size 3 in mirrored pairs
/// (positives `A_0..A_{2u-1}` first, then their negations). Requires
/// `alpha + 1 >= 2u` and `2*gamma >= alpha + 8u`.
pub fn block_a2_set(alpha: i64, beta: i64, gamma: i64, u: i64) -> Result<BlockSet> {
    if alpha < 0 || beta < 0 || gamma < 0 || u < 0 || alpha + 1 < 2 * u || 2 * gamma < alpha + 8 * u {
        return Err(Error::BlockParams(format!(
            "wide 3x3 family needs alpha+1 >= 2u and 2*gamma >= alpha+8u, got alpha={alpha} beta={beta} gamma={gamma} u={u}"
        )));
    }
    let (a, b, g) = (alpha, beta, gamma);
    let mut pos = Vec::with_capacity(2 * u as usize);
    for i in 0..u {
        pos.push(PartialGrid::from_rows(&[
            vec![4 * a + 12 * u + 4 + 4 * i, -(2 * a + 4 * u + 2 + 2 * i), -(2 * a + 8 * u + 2 + 2 * i)],
            vec![-(2 * a + 2 + 2 * i), 2 * a + 2 * b + 4 * u + 3 + 4 * i, -(2 * b + 4 * u + 1 + 2 * i)],
            vec![-(2 * a + 12 * u + 2 + 2 * i), -(2 * b + 1 + 2 * i), 2 * a + 2 * b + 12 * u + 3 + 4 * i],
        ]));
        pos.push(PartialGrid::from_rows(&[
            vec![4 * a + 16 * u + 4 + 4 * i, -(2 * a + 6 * u + 2 + 2 * i), -(2 * a + 10 * u + 2 + 2 * i)],
            vec![-(2 * a + 2 * u + 2 + 2 * i), 2 * a + 4 * g + 10 * u - 2 * i, -(4 * g + 8 * u - 2 - 4 * i)],
            vec![-(2 * a + 14 * u + 2 + 2 * i), -(4 * g + 4 * u - 2 - 4 * i), 2 * a + 4 * g + 18 * u - 2 * i],
        ]));
    }
    let mut members = pos.clone();
    members.extend(pos.iter().map(|m| m.negated()));
    finish_family(
        members,
        &[
            interval(2 * a + 2, 2 * a + 16 * u, 2)?,
            interval(4 * a + 12 * u + 4, 4 * a + 20 * u, 4)?,
            interval(2 * b + 1, 2 * b + 2 * u - 1, 2)?,
            interval(2 * b + 4 * u + 1, 2 * b + 6 * u - 1, 2)?,
            interval(2 * a + 2 * b + 4 * u + 3, 2 * a + 2 * b + 8 * u - 1, 4)?,
            interval(2 * a + 2 * b + 12 * u + 3, 2 * a + 2 * b + 16 * u - 1, 4)?,
            interval(4 * g + 2, 4 * g + 8 * u - 2, 4)?,
            interval(2 * a + 4 * g + 8 * u + 2, 2 * a + 4 * g + 10 * u, 2)?,
            interval(2 * a + 4 * g + 16 * u + 2, 2 * a + 4 * g + 18 * u, 2)?,
        ],
        RowSig::ZeroSum,
    )
}

/// The alternative pair of 5x5 blocks with row sums `(0,0,0,1,-1)`.
/// Requires `beta > alpha+15 > gamma+18 > 40`.
pub fn block_c2_set(alpha: i64, beta: i64, gamma: i64) -> Result<BlockSet> {
    if !(beta > alpha + 15 && alpha + 15 > gamma + 18 && gamma + 18 > 40) {
        return Err(Error::BlockParams(format!(
            "alternative 5x5 family needs beta > alpha+15 > gamma+18 > 40, got alpha={alpha} beta={beta} gamma={gamma}"
        )));
    }
    let (a, b, g) = (alpha, beta, gamma);
    let c1 = PartialGrid::from_rows(&[
        vec![22, -14, -8, 13, -13],
        vec![-12, -a, a + 12, -(b + 14), b + 14],
        vec![-10, a + 15, -(a + 4), b, -(b + 1)],
        vec![9, -(b + 13), b + 3, -(g + 1), g + 3],
        vec![-9, b + 12, -(b + 3), g + 2, -(g + 3)],
    ]);
    let c2 = PartialGrid::from_rows(&[
        vec![-22, 14, 8, 15, -15],
        vec![12, a, -(a + 12), -(b + 15), b + 15],
        vec![10, -(a + 15), a + 4, b + 1, -b],
        vec![-11, b + 13, -(b + 2), g + 1, -g],
        vec![11, -(b + 12), b + 2, -(g + 2), g],
    ]);
    finish_family(
        vec![c1, c2],
        &[
            interval(8, 15, 1)?,
            IntSet::from_distinct([22])?,
            interval(g, g + 3, 1)?,
            IntSet::from_distinct([a, a + 4, a + 12, a + 15])?,
            interval(b, b + 3, 1)?,
            interval(b + 12, b + 15, 1)?,
        ],
        RowSig::OffByOnePair,
    )
}

/// Identifiers for the constant/parametric one-off blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialBlock {
    /// The constant 3x6 zero-sum block over ±[1,9].
    A,
    /// The 3x3 zero-sum companion block whose large entries grow as 92t.
    APrime(i64),
    /// The 5x3 zero-sum block whose large entries grow as 116t.
    D(i64),
    /// The 6x4 stack of three kind-1 q-blocks with entries ±[j+1, j+12].
    Shift(i64),
}

/// Builds one of the special blocks.
pub fn special_block(id: SpecialBlock) -> Result<PartialGrid> {
    let g = match id {
        SpecialBlock::A => PartialGrid::from_rows(&[
            vec![1, -1, 2, -2, 4, -4],
            vec![8, 7, -8, 5, -7, -5],
            vec![-9, -6, 6, -3, 3, 9],
        ]),
        SpecialBlock::APrime(t) => {
            if t < 0 {
                return Err(Error::BlockParams("negative shift for companion block".into()));
            }
            PartialGrid::from_rows(&[
                vec![10, -4, -6],
                vec![-2, 92 * t + 111, -(92 * t + 109)],
                vec![-8, -(92 * t + 107), 92 * t + 115],
            ])
        }
        SpecialBlock::D(t) => {
            if t < 0 {
                return Err(Error::BlockParams("negative shift for 5x3 block".into()));
            }
            PartialGrid::from_rows(&[
                vec![116 * t + 169, 3, -(116 * t + 172)],
                vec![-(116 * t + 173), 116 * t + 175, -2],
                vec![116 * t + 171, -(116 * t + 176), 5],
                vec![-(116 * t + 174), 4, 116 * t + 170],
                vec![7, -6, -1],
            ])
        }
        SpecialBlock::Shift(j) => {
            if j < 0 {
                return Err(Error::BlockParams("negative shift for column stack".into()));
            }
            let q = |x1: i64, x2: i64| -> Result<PartialGrid> {
                q_block(1, &TwoSet::new(x1, Eps::One)?, &TwoSet::new(x2, Eps::One)?)
            };
            q(j + 1, j + 3)?
                .vconcat(&q(j + 5, j + 7)?)?
                .vconcat(&q(j + 9, j + 11)?)?
        }
    };
    debug_assert!(g.row_sums().iter().all(|&s| s == 0));
    debug_assert!(g.col_sums().iter().all(|&s| s == 0));
    Ok(g)
}

/// The four transcribed golden array sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureId {
    /// Two 5x7 arrays over ±[1,35].
    Fig1,
    /// Six 5x7 arrays over ±[1,105].
    Fig2,
    /// Four 5x7 arrays over ±[1,70].
    Fig3,
    /// Two 6x5 arrays over ±[1,30].
    Fig4,
}

static FIG1: [[[i64; 7]; 5]; 2] = [
    [
        [10, -4, -6, 5, -5, 7, -7],
        [-2, 19, -17, -32, 32, -33, 33],
        [-8, -15, 23, 27, -27, 26, -26],
        [1, -30, 29, 14, -16, -18, 20],
        [-1, 30, -29, -14, 16, 18, -20],
    ],
    [
        [-10, 4, 6, 9, -9, 11, -11],
        [2, -19, 17, -34, 34, -35, 35],
        [8, 15, -23, 25, -25, 24, -24],
        [3, -31, 28, 12, -13, -21, 22],
        [-3, 31, -28, -12, 13, 21, -22],
    ],
];

static FIG2: [[[i64; 7]; 5]; 6] = [
    [
        [10, -8, -2, 5, -5, 17, -17],
        [-6, -59, 65, -90, 90, -96, 96],
        [-4, 68, -63, 84, -85, 79, -79],
        [1, -89, 87, -45, 47, 49, -50],
        [-1, 88, -87, 46, -47, -49, 50],
    ],
    [
        [-10, 8, 2, 7, -7, 19, -19],
        [6, 59, -65, -91, 91, -97, 97],
        [4, -68, 63, 85, -84, 78, -78],
        [-3, 89, -86, 45, -44, 51, -52],
        [3, -88, 86, -46, 44, -51, 52],
    ],
    [
        [40, -18, -22, 21, -21, 23, -23],
        [-14, 48, -34, -98, 98, -99, 99],
        [-26, -30, 56, 77, -77, 76, -76],
        [9, -92, 83, 60, -62, -64, 66],
        [-9, 92, -83, -60, 62, 64, -66],
    ],
    [
        [-40, 18, 22, 25, -25, 27, -27],
        [14, -48, 34, -100, 100, -101, 101],
        [26, 30, -56, 75, -75, 74, -74],
        [11, -93, 82, 55, -57, -67, 69],
        [-11, 93, -82, -55, 57, 67, -69],
    ],
    [
        [36, -16, -20, 29, -29, 31, -31],
        [-12, 53, -41, -102, 102, -103, 103],
        [-24, -37, 61, 73, -73, 72, -72],
        [13, -94, 81, 39, -43, -54, 58],
        [-13, 94, -81, -39, 43, 54, -58],
    ],
    [
        [-36, 16, 20, 33, -33, 35, -35],
        [12, -53, 41, -104, 104, -105, 105],
        [24, 37, -61, 71, -71, 70, -70],
        [15, -95, 80, 28, -32, -38, 42],
        [-15, 95, -80, -28, 32, 38, -42],
    ],
];

static FIG3: [[[i64; 7]; 5]; 4] = [
    [
        [53, 3, -56, 17, -17, 19, -19],
        [-57, 59, -2, -65, 65, -66, 66],
        [55, -60, 5, 48, -48, 47, -47],
        [-58, 4, 54, 16, -18, -26, 28],
        [7, -6, -1, -16, 18, 26, -28],
    ],
    [
        [-53, -3, 56, 21, -21, 23, -23],
        [57, -59, 2, -67, 67, -68, 68],
        [-55, 60, -5, 46, -46, 45, -45],
        [58, -4, -54, 31, -33, -34, 36],
        [-7, 6, 1, -31, 33, 34, -36],
    ],
    [
        [22, -14, -8, 13, -13, 25, -25],
        [-12, -20, 32, -63, 63, -69, 69],
        [-10, 35, -24, 49, -50, 44, -44],
        [9, -62, 52, -38, 40, 29, -30],
        [-9, 61, -52, 39, -40, -29, 30],
    ],
    [
        [-22, 14, 8, 15, -15, 27, -27],
        [12, 20, -32, -64, 64, -70, 70],
        [10, -35, 24, 50, -49, 43, -43],
        [-11, 62, -51, 38, -37, 41, -42],
        [11, -61, 51, -39, 37, -41, 42],
    ],
];

static FIG4: [[[i64; 5]; 6]; 2] = [
    [
        [-4, -5, 9, 11, -11],
        [4, -7, 3, -13, 13],
        [-2, 5, -3, -24, 24],
        [2, -8, 6, 25, -25],
        [-1, 7, -6, -26, 26],
        [1, 8, -9, 27, -27],
    ],
    [
        [10, -28, 17, 19, -18],
        [-10, 28, -17, -23, 22],
        [12, -29, 16, -20, 21],
        [-12, 29, -16, -19, 18],
        [14, -30, 15, 23, -22],
        [-14, 30, -15, 20, -21],
    ],
];

fn grids_from<const R: usize, const C: usize, const N: usize>(
    data: &[[[i64; C]; R]; N],
) -> Vec<PartialGrid> {
    data.iter()
        .map(|arr| PartialGrid::from_rows(&arr.iter().map(|r| r.to_vec()).collect::<Vec<_>>()))
        .collect()
}

/// Returns a transcribed golden array set.
pub fn fixture(id: FixtureId) -> ArraySet {
    let grids = match id {
        FixtureId::Fig1 => grids_from(&FIG1),
        FixtureId::Fig2 => grids_from(&FIG2),
        FixtureId::Fig3 => grids_from(&FIG3),
        FixtureId::Fig4 => grids_from(&FIG4),
    };
    ArraySet::new(grids).expect("fixture tables are rectangular")
}

/// FNV-1a over the row-major cell stream of every array; locks the fixture
/// tables against accidental edits.
pub fn fixture_checksum(id: FixtureId) -> u64 {
    let set = fixture(id);
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    for g in set.arrays() {
        for cell in g.cells() {
            match cell {
                Some(v) => eat(&v.to_le_bytes()),
                None => eat(&[0xff]),
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(low: i64, eps: Eps) -> TwoSet {
        TwoSet::new(low, eps).unwrap()
    }

    fn top_row(g: &PartialGrid) -> Vec<i64> {
        (0..g.cols()).map(|c| g.get(0, c).unwrap()).collect()
    }

    #[test]
    fn q_blocks_match_displays() {
        let q1 = q_block(1, &pair(1, Eps::One), &pair(3, Eps::One)).unwrap();
        assert_eq!(top_row(&q1), vec![1, -2, -3, 4]);
        assert_eq!(q1.get(1, 0), Some(-1));
        let q2 = q_block(2, &pair(3, Eps::Two), &pair(7, Eps::Two)).unwrap();
        assert_eq!(top_row(&q2), vec![3, -5, -7, 9]);
        assert_eq!(q2.row_sums(), vec![0, 0]);
        assert!(q_block(1, &pair(1, Eps::Two), &pair(3, Eps::Two)).is_err());
    }

    #[test]
    fn r_blocks_match_displays() {
        let r1 = r_block(
            1,
            &pair(2, Eps::Two),
            &pair(12, Eps::One),
            &pair(14, Eps::One),
        )
        .unwrap();
        assert_eq!(top_row(&r1), vec![2, -4, -12, 13, -14, 15]);
        let r2 = r_block(
            2,
            &pair(42, Eps::Four),
            &pair(58, Eps::Two),
            &pair(62, Eps::Two),
        )
        .unwrap();
        assert_eq!(top_row(&r2), vec![42, -46, -58, 60, -62, 64]);
        assert_eq!(r2.col_sums(), vec![0; 6]);
    }

    #[test]
    fn u_blocks_have_off_by_one_rows() {
        let u2 = u_block(2, &pair(5, Eps::One), None).unwrap();
        assert_eq!(top_row(&u2), vec![5, -6]);
        assert_eq!(u2.row_sums(), vec![-1, 1]);
        let u1 = u_block(1, &pair(1, Eps::One), Some(&pair(3, Eps::Two))).unwrap();
        assert_eq!(top_row(&u1), vec![3, -5, -1, 2]);
        assert_eq!(u1.row_sums(), vec![-1, 1]);
        assert_eq!(u1.col_sums(), vec![0; 4]);
        assert!(u_block(1, &pair(1, Eps::One), None).is_err());
    }

    #[test]
    fn family_a_smallest_instance() {
        let fam = block_a_set(0, 0, 1).unwrap();
        assert_eq!(fam.members.len(), 2);
        let a0 = &fam.members[0];
        assert_eq!(top_row(a0), vec![10, -4, -6]);
        assert_eq!((0..3).map(|c| a0.get(1, c).unwrap()).collect::<Vec<_>>(), vec![-2, 5, -3]);
        assert_eq!((0..3).map(|c| a0.get(2, c).unwrap()).collect::<Vec<_>>(), vec![-8, -1, 9]);
        // entries are ±{1..6, 8, 9, 10}: no ±7
        assert!(!fam.claimed_entries.contains(7));
        assert!(fam.claimed_entries.contains(-10));
        assert_eq!(fam.claimed_entries.len(), 18);
    }

    #[test]
    fn family_a_empty_when_u_zero() {
        let fam = block_a_set(3, 5, 0).unwrap();
        assert!(fam.members.is_empty());
        assert!(fam.claimed_entries.is_empty());
    }

    #[test]
    fn family_b_rows() {
        let fam = block_b_set(1, 8, 3).unwrap();
        let tops: Vec<Vec<i64>> = fam.members.iter().map(top_row).collect();
        assert_eq!(tops, vec![vec![1, -9, 8], vec![3, -10, 7], vec![5, -11, 6]]);
        let expected: IntSet = [1i64, 3, 5, 6, 7, 8, 9, 10, 11]
            .into_iter()
            .collect::<IntSet>()
            .plus_minus()
            .unwrap();
        assert_eq!(fam.claimed_entries, expected);
        let fam2 = block_b_set(2, 7, 2).unwrap();
        assert_eq!(top_row(&fam2.members[0]), vec![2, -9, 7]);
        assert_eq!(top_row(&fam2.members[1]), vec![4, -10, 6]);
        assert!(block_b_set(1, 5, 3).is_err());
    }

    #[test]
    fn family_c_signature() {
        let fam = block_c_set(11, 25, 21).unwrap();
        let c1 = &fam.members[0];
        let row3: Vec<i64> = (0..5).map(|c| c1.get(3, c).unwrap()).collect();
        assert_eq!(row3, vec![1, -30, 28, -22, 24]);
        assert_eq!(row3.iter().sum::<i64>(), 1);
        for m in &fam.members {
            assert_eq!(m.row_sums(), vec![0, 0, 0, 1, -1]);
            assert_eq!(m.col_sums(), vec![0; 5]);
        }
        assert!(fam.claimed_entries.contains(1));
        assert!(fam.claimed_entries.contains(-9));
        assert!(block_c_set(10, 25, 21).is_err());
    }

    #[test]
    fn family_a2_smallest_instance() {
        let fam = block_a2_set(1, 0, 5, 1).unwrap();
        assert_eq!(fam.members.len(), 4);
        assert_eq!(top_row(&fam.members[0]), vec![20, -8, -12]);
        assert!(block_a2_set(0, 0, 5, 1).is_err());
        assert!(block_a2_set(1, 0, 4, 1).is_err());
        assert!(block_a2_set(2, 3, 9, 0).unwrap().members.is_empty());
    }

    #[test]
    fn family_c2_signature() {
        let fam = block_c2_set(27, 43, 23).unwrap();
        assert_eq!(top_row(&fam.members[0]), vec![22, -14, -8, 13, -13]);
        for m in &fam.members {
            assert_eq!(m.row_sums(), vec![0, 0, 0, 1, -1]);
            assert_eq!(m.col_sums(), vec![0; 5]);
        }
        assert!(fam.claimed_entries.contains(8));
        assert!(fam.claimed_entries.contains(22));
        assert!(fam.claimed_entries.contains(-15));
        // chain is strict: alpha+15 must exceed gamma+18
        assert!(block_c2_set(26, 42, 23).is_err());
    }

    #[test]
    fn special_blocks() {
        let a = special_block(SpecialBlock::A).unwrap();
        assert_eq!(top_row(&a), vec![1, -1, 2, -2, 4, -4]);
        let ap = special_block(SpecialBlock::APrime(0)).unwrap();
        assert_eq!(
            (0..3).map(|c| ap.get(1, c).unwrap()).collect::<Vec<_>>(),
            vec![-2, 111, -109]
        );
        let s0 = special_block(SpecialBlock::Shift(0)).unwrap();
        assert_eq!(s0.rows(), 6);
        assert_eq!(s0.cols(), 4);
        let got: IntSet = s0.entries().collect();
        let want = interval(1, 12, 1).unwrap().plus_minus().unwrap();
        assert_eq!(got, want);
        let d = special_block(SpecialBlock::D(0)).unwrap();
        assert_eq!(d.rows(), 5);
        assert_eq!(d.row_sums(), vec![0; 5]);
        assert_eq!(d.col_sums(), vec![0; 3]);
    }

    #[test]
    fn fixture_shapes_and_spot_cells() {
        let f1 = fixture(FixtureId::Fig1);
        assert_eq!((f1.a(), f1.b(), f1.e()), (5, 7, 2));
        assert_eq!(top_row(&f1.arrays()[0]), vec![10, -4, -6, 5, -5, 7, -7]);
        let f3 = fixture(FixtureId::Fig3);
        assert_eq!(f3.e(), 4);
        assert_eq!(top_row(&f3.arrays()[0]), vec![53, 3, -56, 17, -17, 19, -19]);
        let f4 = fixture(FixtureId::Fig4);
        assert_eq!((f4.a(), f4.b(), f4.e()), (6, 5, 2));
        assert_eq!(top_row(&f4.arrays()[0]), vec![-4, -5, 9, 11, -11]);
    }
}
