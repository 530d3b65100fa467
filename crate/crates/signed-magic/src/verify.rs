//! Independent checkers for the array and array-set axioms.
//!
//! Everything here works from raw cell data only — sums and coverage are
//! recomputed from scratch, never taken from whatever constructed the input —
//! so a constructor bug cannot certify its own output.

use crate::blocks::BlockSet;
use crate::error::{Error, Result};
use crate::grid::{omega_for, ArraySet, PartialGrid};
use crate::sma::SmaSpec;

/// Which axiom a violation falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// An entry of the universe never appears.
    Coverage,
    /// An entry appears more than once.
    Multiplicity,
    RowFill,
    ColFill,
    RowSum,
    ColSum,
    /// An entry lies outside the declared universe.
    UniverseMismatch,
    /// Row/column-sum signature differs from the documented one.
    Signature,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::Coverage => "coverage",
            Axiom::Multiplicity => "multiplicity",
            Axiom::RowFill => "row-fill",
            Axiom::ColFill => "col-fill",
            Axiom::RowSum => "row-sum",
            Axiom::ColSum => "col-sum",
            Axiom::UniverseMismatch => "universe-mismatch",
            Axiom::Signature => "signature",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub axiom: Axiom,
    pub location: String,
    pub detail: String,
}

/// Outcome of a verification run; passes exactly when no violations were
/// collected.
#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, axiom: Axiom, location: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Violation {
            axiom,
            location: location.into(),
            detail: detail.into(),
        });
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.passed() {
            return writeln!(f, "pass");
        }
        writeln!(f, "fail ({} violations)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  [{}] {}: {}", v.axiom, v.location, v.detail)?;
        }
        Ok(())
    }
}

/// Presence bitmap over a symmetric universe `±[1, half]` (plus 0 when the
/// count is odd); gives O(filled cells) coverage checking.
struct CoverageMap {
    half: i64,
    include_zero: bool,
    seen: Vec<u8>,
}

impl CoverageMap {
    fn new(filled: u64) -> Self {
        let o = omega_for(filled);
        CoverageMap {
            half: o.half(),
            include_zero: o.includes_zero(),
            seen: vec![0; 2 * o.half() as usize + 1],
        }
    }

    fn index(&self, v: i64) -> Option<usize> {
        if v == 0 && !self.include_zero {
            return None;
        }
        if v.abs() > self.half {
            return None;
        }
        Some((v + self.half) as usize)
    }

    /// Returns the previous count for the value, or None if out of universe.
    fn mark(&mut self, v: i64) -> Option<u8> {
        let idx = self.index(v)?;
        let prev = self.seen[idx];
        self.seen[idx] = prev.saturating_add(1);
        Some(prev)
    }

    fn missing(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (i, &cnt) in self.seen.iter().enumerate() {
            let v = i as i64 - self.half;
            if v == 0 && !self.include_zero {
                continue;
            }
            if cnt == 0 {
                out.push(v);
            }
        }
        out
    }
}

/// Passes iff every row and column sum over filled cells is zero.
pub fn verify_zero_sum(g: &PartialGrid) -> VerificationReport {
    let mut report = VerificationReport::default();
    for (r, s) in g.row_sums().iter().enumerate() {
        if *s != 0 {
            report.push(Axiom::RowSum, format!("row {r}"), format!("sums to {s}"));
        }
    }
    for (c, s) in g.col_sums().iter().enumerate() {
        if *s != 0 {
            report.push(Axiom::ColSum, format!("col {c}"), format!("sums to {s}"));
        }
    }
    report
}

/// Full signed-magic-array check: exact universe coverage, `s` filled cells
/// per row and `k` per column, all sums zero.
pub fn verify_sma(g: &PartialGrid, spec: &SmaSpec) -> Result<VerificationReport> {
    if g.rows() != spec.m() || g.cols() != spec.n() {
        return Err(Error::Shape(format!(
            "grid is {}x{}, spec wants {}x{}",
            g.rows(),
            g.cols(),
            spec.m(),
            spec.n()
        )));
    }
    let mut report = VerificationReport::default();
    let universe = (spec.n() * spec.k()) as u64;
    let mut map = CoverageMap::new(universe);
    for r in 0..g.rows() {
        for c in 0..g.cols() {
            if let Some(v) = g.get(r, c) {
                match map.mark(v) {
                    None => report.push(
                        Axiom::UniverseMismatch,
                        format!("({r},{c})"),
                        format!("entry {v} outside the universe"),
                    ),
                    Some(prev) if prev > 0 => report.push(
                        Axiom::Multiplicity,
                        format!("({r},{c})"),
                        format!("entry {v} repeated"),
                    ),
                    _ => {}
                }
            }
        }
    }
    for v in map.missing() {
        report.push(Axiom::Coverage, "universe", format!("entry {v} never appears"));
    }
    for (r, cnt) in g.row_fill_counts().iter().enumerate() {
        if *cnt != spec.s() {
            report.push(
                Axiom::RowFill,
                format!("row {r}"),
                format!("{cnt} filled cells, expected {}", spec.s()),
            );
        }
    }
    for (c, cnt) in g.col_fill_counts().iter().enumerate() {
        if *cnt != spec.k() {
            report.push(
                Axiom::ColFill,
                format!("col {c}"),
                format!("{cnt} filled cells, expected {}", spec.k()),
            );
        }
    }
    let zs = verify_zero_sum(g);
    report.violations.extend(zs.violations);
    Ok(report)
}

/// Signed-magic-array-set check: the members jointly cover the universe for
/// `a*b*e` cells exactly once, and every member has all sums zero.
pub fn verify_smas(xs: &ArraySet) -> VerificationReport {
    let mut report = VerificationReport::default();
    let total = (xs.a() * xs.b() * xs.e()) as u64;
    let mut map = CoverageMap::new(total);
    for (i, g) in xs.arrays().iter().enumerate() {
        if g.filled_count() != xs.a() * xs.b() {
            report.push(
                Axiom::RowFill,
                format!("array {i}"),
                "not fully filled".to_string(),
            );
        }
        for r in 0..g.rows() {
            for c in 0..g.cols() {
                if let Some(v) = g.get(r, c) {
                    match map.mark(v) {
                        None => report.push(
                            Axiom::UniverseMismatch,
                            format!("array {i} ({r},{c})"),
                            format!("entry {v} outside the universe"),
                        ),
                        Some(prev) if prev > 0 => report.push(
                            Axiom::Multiplicity,
                            format!("array {i} ({r},{c})"),
                            format!("entry {v} repeated"),
                        ),
                        _ => {}
                    }
                }
            }
        }
        let zs = verify_zero_sum(g);
        for mut v in zs.violations {
            v.location = format!("array {i} {}", v.location);
            report.violations.push(v);
        }
    }
    for v in map.missing() {
        report.push(Axiom::Coverage, "universe", format!("entry {v} never appears"));
    }
    report
}

/// Integer-Heffter-set check: entries are all distinct, no value appears
/// together with its negation, absolute values cover `[1, a*b*c]` exactly,
/// and every member has all sums zero. Doubling such a set with negated
/// copies yields a valid signed magic array set.
pub fn verify_ihs(xs: &ArraySet) -> VerificationReport {
    let mut report = VerificationReport::default();
    let half = (xs.a() * xs.b() * xs.e()) as i64;
    let mut seen = vec![0u8; half as usize + 1]; // seen[|v|]
    for (i, g) in xs.arrays().iter().enumerate() {
        if g.filled_count() != xs.a() * xs.b() {
            report.push(Axiom::RowFill, format!("array {i}"), "not fully filled".to_string());
        }
        for r in 0..g.rows() {
            for c in 0..g.cols() {
                if let Some(v) = g.get(r, c) {
                    if v == 0 || v.abs() > half {
                        report.push(
                            Axiom::UniverseMismatch,
                            format!("array {i} ({r},{c})"),
                            format!("entry {v} outside ±[1,{half}]"),
                        );
                        continue;
                    }
                    let idx = v.unsigned_abs() as usize;
                    if seen[idx] > 0 {
                        report.push(
                            Axiom::Multiplicity,
                            format!("array {i} ({r},{c})"),
                            format!("absolute value {} already used", v.abs()),
                        );
                    }
                    seen[idx] = seen[idx].saturating_add(1);
                }
            }
        }
        let zs = verify_zero_sum(g);
        for mut v in zs.violations {
            v.location = format!("array {i} {}", v.location);
            report.violations.push(v);
        }
    }
    for (av, &cnt) in seen.iter().enumerate().skip(1) {
        if cnt == 0 {
            report.push(
                Axiom::Coverage,
                "universe",
                format!("neither {av} nor -{av} appears"),
            );
        }
    }
    report
}

/// Passes iff the family's entry multiset equals its claimed set exactly.
pub fn verify_entry_set(bs: &BlockSet) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut counts = std::collections::BTreeMap::<i64, usize>::new();
    for g in &bs.members {
        for v in g.entries() {
            *counts.entry(v).or_insert(0) += 1;
        }
    }
    for (&v, &n) in &counts {
        if n > 1 {
            report.push(Axiom::Multiplicity, "family", format!("entry {v} appears {n} times"));
        }
        if !bs.claimed_entries.contains(v) {
            report.push(Axiom::UniverseMismatch, "family", format!("entry {v} not claimed"));
        }
    }
    for v in bs.claimed_entries.iter() {
        if !counts.contains_key(&v) {
            report.push(Axiom::Coverage, "family", format!("claimed entry {v} missing"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{block_a_set, block_b_set, fixture, q_block, u_block, FixtureId};
    use crate::intset::{Eps, TwoSet};

    fn pair(low: i64, eps: Eps) -> TwoSet {
        TwoSet::new(low, eps).unwrap()
    }

    #[test]
    fn zero_sum_reports() {
        let q = q_block(1, &pair(1, Eps::One), &pair(3, Eps::One)).unwrap();
        assert!(verify_zero_sum(&q).passed());
        let bad = PartialGrid::from_rows(&[vec![1, 2], vec![-1, -1]]);
        let report = verify_zero_sum(&bad);
        assert_eq!(report.violations.len(), 3); // both rows and one column
        let u = u_block(2, &pair(5, Eps::One), None).unwrap();
        assert!(!verify_zero_sum(&u).passed());
    }

    #[test]
    fn fixtures_pass_smas() {
        for id in [FixtureId::Fig1, FixtureId::Fig2, FixtureId::Fig3, FixtureId::Fig4] {
            let report = verify_smas(&fixture(id));
            assert!(report.passed(), "{id:?}: {report}");
        }
    }

    #[test]
    fn duplicated_entry_fails_smas() {
        let f = fixture(FixtureId::Fig1);
        let mut arrays = f.into_arrays();
        let dup = arrays[0].get(0, 0);
        arrays[1].set(0, 0, dup);
        let broken = ArraySet::new(arrays).unwrap();
        let report = verify_smas(&broken);
        assert!(report.violations.iter().any(|v| v.axiom == Axiom::Multiplicity));
    }

    #[test]
    fn single_array_wrong_universe() {
        let f = fixture(FixtureId::Fig1);
        let first = ArraySet::new(vec![f.arrays()[0].clone()]).unwrap();
        // One 5x7 array alone would need universe {0, ±1..±17}; entries reach ±35.
        let report = verify_smas(&first);
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::UniverseMismatch));
    }

    #[test]
    fn trivial_sma_cases() {
        let spec = SmaSpec::new(1, 1, 1, 1).unwrap();
        let g = PartialGrid::from_rows(&[vec![0]]);
        assert!(verify_sma(&g, &spec).unwrap().passed());

        let wrong = PartialGrid::new(2, 2);
        assert!(verify_sma(&wrong, &spec).is_err());
    }

    #[test]
    fn ihs_rejects_sign_pairs() {
        // fig1's first array holds both +1 and -1, so it is not a valid
        // integer Heffter member set.
        let f = fixture(FixtureId::Fig1);
        let half = ArraySet::new(vec![f.arrays()[0].clone()]).unwrap();
        let report = verify_ihs(&half);
        assert!(report.violations.iter().any(|v| v.axiom == Axiom::Multiplicity));
    }

    #[test]
    fn entry_set_checks() {
        assert!(verify_entry_set(&block_b_set(1, 8, 3).unwrap()).passed());
        assert!(verify_entry_set(&block_a_set(0, 0, 1).unwrap()).passed());
        let mut bs = block_b_set(1, 8, 3).unwrap();
        bs.claimed_entries = bs
            .claimed_entries
            .difference_contained(&[1i64].into_iter().collect())
            .unwrap();
        assert!(!verify_entry_set(&bs).passed());
    }
}
