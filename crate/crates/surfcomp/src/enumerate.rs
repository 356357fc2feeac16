//! Exhaustive reproduction of the multiplier tables.
//!
//! For a boundary B = Σ bᵢPᵢ on an irreducible rational curve with
//! deg B < 2 and minimal complementary index n, the minimal m ≥ 1 such that
//! B is (n+1)m-complementary ranges over a small finite set depending only
//! on n.  This module recovers those sets by exhaustive search over all
//! multisets of multiplicities with bounded denominator.
//!
//! The search splits on h = #{bᵢ ≥ 1/2}.  deg B < 2 forces h ≤ 3, and the
//! index-1 criterion reads Σ ⌊2bᵢ⌋ = h ≤ 2, so:
//!   h ≤ 2  ⟺  minimal index 1   (contributes only to the n = 1 table)
//!   h = 3  ⟺  minimal index ≥ 2 (contributes to the n ≥ 2 tables)
//!
//! For h ≤ 2 every criterion consulted reads ⌊(2m+1)b⌋ with m ≤ 12, so the
//! values collapse into the finitely many classes cut out by the breakpoints
//! j/(2m+1); enumerating class multisets instead of value multisets brings
//! the n = 1 search from ~10¹⁰ multisets down to a few million.  For h = 3
//! the three large values are enumerated directly (their sum being < 2
//! confines them to a thin simplex) and the remaining small components are
//! appended afterwards.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::cmp_frac;
use crate::error::SurfError;

/// Minimal complementary indices that admit a multiplier table.
pub const REGULAR_TABLE_INDICES: [u32; 5] = [1, 2, 3, 4, 6];

/// The established multiplier sets for each regular minimal index.  The
/// enumerator must produce exactly these at the default caps: a subset by
/// the general boundedness statement, and onto because every listed value
/// is realized by a boundary with denominators ≤ 60.
pub const REFERENCE_MULTIPLIER_TABLES: [(u32, &[u64]); 5] = [
    (1, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 11]),
    (2, &[1, 2, 3, 4, 5, 6, 7, 8, 10]),
    (3, &[1, 3, 4, 5, 6]),
    (4, &[2, 3, 4, 5, 6, 8]),
    (6, &[3, 4, 5, 6, 8]),
];

/// Largest multiplier probed via class arithmetic before falling back to
/// exact per-value scans; one above the largest reference entry.
const M_PROBE: usize = 12;

/// Largest shifted index consulted by the h = 3 scan: (n+1)m + 1 ≤ 7·12 + 1.
const MAX_K: usize = 86;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCaps {
    pub max_components: u32,
    pub max_denominator: u32,
}

impl Default for TableCaps {
    fn default() -> Self {
        TableCaps {
            max_components: 4,
            max_denominator: 60,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableReport {
    /// n → set of minimal multipliers m realized by some enumerated boundary.
    pub tables: BTreeMap<u32, BTreeSet<u64>>,
    /// Multisets that failed every probed multiplier and were resolved by
    /// exact per-value scans.  Expected 0 at the default caps.
    pub exact_fallbacks: u64,
    /// h = 3 multisets whose minimal complementary index is not regular
    /// (5, or above 6); they belong to no table.
    pub skipped_nonregular: u64,
}

/// All reduced fractions p/q in (0, 1) with q ≤ max_den, ascending.
fn proper_fractions(max_den: i64) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for q in 2..=max_den {
        for p in 1..q {
            if p.gcd(&q) == 1 {
                v.push((p, q));
            }
        }
    }
    v.sort_by(|a, b| cmp_frac(a.0, a.1, b.0, b.1));
    v
}

/// Exact minimal m ≥ 1 with Σ ⌊(step·m + 1)bᵢ⌋ ≤ 2·step·m, for deg B < 2.
/// Terminates because any index divisible by every denominator works.
fn minimal_multiplier_i64(vals: &[(i64, i64)], step: i64) -> u64 {
    let l = vals.iter().fold(1i64, |acc, &(_, q)| acc.lcm(&q));
    let bound = l / l.gcd(&step);
    for m in 1..=bound {
        let k = step * m;
        let s: i64 = vals
            .iter()
            .map(|&(p, q)| ((k + 1) * p).div_euclid(q))
            .sum();
        if s <= 2 * k {
            return m as u64;
        }
    }
    unreachable!("an index divisible by every denominator is complementary when deg B < 2")
}

// ---------------------------------------------------------------------------
// h ≤ 2 bucket: minimal index 1, class-collapsed search.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct ValueClass {
    lo: (i64, i64),
    hi: (i64, i64),
    /// Smallest representable value in [lo, hi) at the denominator cap.
    rep: (i64, i64),
    big: bool,
    /// ⌊(2m+1)·lo⌋ for m = 1..=M_PROBE; constant across the class.
    floors: [i64; M_PROBE],
}

fn breakpoints_index_one() -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = Vec::new();
    let mut ks: Vec<i64> = vec![2];
    ks.extend((1..=M_PROBE as i64).map(|m| 2 * m + 1));
    for k in ks {
        for j in 0..=k {
            let g = j.gcd(&k);
            pts.push((j / g.max(1), k / g.max(1)));
        }
    }
    pts.sort_by(|a, b| cmp_frac(a.0, a.1, b.0, b.1));
    pts.dedup();
    pts
}

/// Smallest reduced p/q in [lo, hi) ∩ (0, 1) with q ≤ max_den.
fn min_rep_in(lo: (i64, i64), hi: (i64, i64), max_den: i64) -> Option<(i64, i64)> {
    let mut best: Option<(i64, i64)> = None;
    for q in 1..=max_den {
        let p = ((lo.0 * q + lo.1 - 1).div_euclid(lo.1)).max(1);
        if p < q && cmp_frac(p, q, hi.0, hi.1) == Ordering::Less {
            let better = match best {
                None => true,
                Some(b) => cmp_frac(p, q, b.0, b.1) == Ordering::Less,
            };
            if better {
                best = Some((p, q));
            }
        }
    }
    best.map(|(p, q)| {
        let g = p.gcd(&q);
        (p / g, q / g)
    })
}

/// All reduced values of bounded denominator inside a class.
fn values_in_class(c: &ValueClass, max_den: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for q in 1..=max_den {
        let mut p = ((c.lo.0 * q + c.lo.1 - 1).div_euclid(c.lo.1)).max(1);
        while p < q && cmp_frac(p, q, c.hi.0, c.hi.1) == Ordering::Less {
            if p.gcd(&q) == 1 {
                out.push((p, q));
            }
            p += 1;
        }
    }
    out
}

fn classes_index_one(max_den: i64) -> Vec<ValueClass> {
    let pts = breakpoints_index_one();
    let mut classes = Vec::new();
    for w in pts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let Some(rep) = min_rep_in(lo, hi, max_den) else {
            continue;
        };
        let mut floors = [0i64; M_PROBE];
        for (m, f) in floors.iter_mut().enumerate() {
            let k = 2 * (m as i64 + 1) + 1;
            *f = (k * lo.0).div_euclid(lo.1);
        }
        let big = cmp_frac(lo.0, lo.1, 1, 2) != Ordering::Less;
        classes.push(ValueClass {
            lo,
            hi,
            rep,
            big,
            floors,
        });
    }
    // Intervals are disjoint, so rep order equals interval order; smalls
    // (entirely below the breakpoint 1/2) precede bigs.
    classes
}

struct IndexOneSearch<'a> {
    classes: &'a [ValueClass],
    max_components: u32,
    table: BTreeSet<u64>,
    fallbacks: Vec<Vec<usize>>,
    floor_sums: [i64; M_PROBE],
    stack: Vec<usize>,
}

impl IndexOneSearch<'_> {
    fn record_current(&mut self) {
        for m in 1..=M_PROBE {
            if self.floor_sums[m - 1] <= 4 * m as i64 {
                self.table.insert(m as u64);
                return;
            }
        }
        self.fallbacks.push(self.stack.clone());
    }

    fn visit(&mut self, start: usize, slots: u32, sum: (i64, i64), bigs: u32) {
        self.record_current();
        if slots == 0 {
            return;
        }
        for i in start..self.classes.len() {
            let c = self.classes[i].clone();
            let num = sum.0 * c.rep.1 + c.rep.0 * sum.1;
            let den = sum.1 * c.rep.1;
            // Classes ascend by minimal representative, so both cuts below
            // terminate the whole loop, not just this class.
            if num >= 2 * den {
                break;
            }
            if bigs + u32::from(c.big) > 2 {
                break;
            }
            let g = num.gcd(&den);
            for (m, f) in c.floors.iter().enumerate() {
                self.floor_sums[m] += f;
            }
            self.stack.push(i);
            self.visit(i, slots - 1, (num / g, den / g), bigs + u32::from(c.big));
            self.stack.pop();
            for (m, f) in c.floors.iter().enumerate() {
                self.floor_sums[m] -= f;
            }
        }
    }
}

/// Resolve a class multiset that failed every probe: enumerate its actual
/// value multisets and scan each exactly.
fn resolve_exact(
    classes: &[ValueClass],
    combo: &[usize],
    max_den: i64,
    table: &mut BTreeSet<u64>,
) {
    let pools: Vec<Vec<(i64, i64)>> = combo
        .iter()
        .map(|&i| values_in_class(&classes[i], max_den))
        .collect();

    fn rec(
        combo: &[usize],
        pools: &[Vec<(i64, i64)>],
        slot: usize,
        prev_value_idx: usize,
        acc: &mut Vec<(i64, i64)>,
        table: &mut BTreeSet<u64>,
    ) {
        if slot == combo.len() {
            let den: i64 = acc.iter().map(|v| v.1).product();
            let num: i64 = acc.iter().map(|v| v.0 * den / v.1).sum();
            if num < 2 * den {
                table.insert(minimal_multiplier_i64(acc, 2));
            }
            return;
        }
        // Inside a run of equal classes keep value choices non-decreasing.
        let from = if slot > 0 && combo[slot] == combo[slot - 1] {
            prev_value_idx
        } else {
            0
        };
        for (vi, &v) in pools[slot].iter().enumerate().skip(from) {
            acc.push(v);
            rec(combo, pools, slot + 1, vi, acc, table);
            acc.pop();
        }
    }
    rec(combo, &pools, 0, 0, &mut Vec::new(), table);
}

fn enumerate_minimal_index_one(caps: &TableCaps) -> (BTreeSet<u64>, u64) {
    let classes = classes_index_one(caps.max_denominator as i64);
    let mut search = IndexOneSearch {
        classes: &classes,
        max_components: caps.max_components,
        table: BTreeSet::new(),
        fallbacks: Vec::new(),
        floor_sums: [0; M_PROBE],
        stack: Vec::new(),
    };
    let slots = search.max_components;
    search.visit(0, slots, (0, 1), 0);
    let IndexOneSearch {
        mut table,
        fallbacks,
        ..
    } = search;
    let fallback_count = fallbacks.len() as u64;
    for combo in &fallbacks {
        resolve_exact(&classes, combo, caps.max_denominator as i64, &mut table);
    }
    (table, fallback_count)
}

// ---------------------------------------------------------------------------
// h = 3 bucket: minimal index ≥ 2, direct enumeration of the three large
// values and recursive extension by small components.
// ---------------------------------------------------------------------------

type FloorRow = [i8; MAX_K + 1];

fn floor_row(p: i64, q: i64) -> FloorRow {
    let mut row = [0i8; MAX_K + 1];
    for (k, r) in row.iter_mut().enumerate() {
        *r = ((k as i64 * p).div_euclid(q)) as i8;
    }
    row
}

struct H3Ctx<'a> {
    smalls: &'a [(i64, i64)],
    small_rows: &'a [FloorRow],
    max_extra: u32,
}

struct H3Out {
    pairs: BTreeSet<(u32, u64)>,
    fallbacks: u64,
    skipped: u64,
}

fn classify_h3(vals: &[(i64, i64)], rows: &[&FloorRow], out: &mut H3Out) {
    let eval = |k: usize| -> i64 { rows.iter().map(|r| i64::from(r[k])).sum() };
    let mut minimal_n = None;
    for n in 2..=6i64 {
        if eval(n as usize + 1) <= 2 * n {
            minimal_n = Some(n);
            break;
        }
    }
    let n = match minimal_n {
        Some(5) | None => {
            out.skipped += 1;
            return;
        }
        Some(n) => n,
    };
    let step = n + 1;
    for m in 1..=M_PROBE as i64 {
        if eval((step * m) as usize + 1) <= 2 * step * m {
            out.pairs.insert((n as u32, m as u64));
            return;
        }
    }
    out.fallbacks += 1;
    out.pairs.insert((n as u32, minimal_multiplier_i64(vals, step)));
}

fn extend_with_smalls<'a>(
    ctx: &H3Ctx<'a>,
    start: usize,
    slots: u32,
    budget: (i64, i64),
    vals: &mut Vec<(i64, i64)>,
    rows: &mut Vec<&'a FloorRow>,
    out: &mut H3Out,
) {
    classify_h3(vals, rows, out);
    if slots == 0 {
        return;
    }
    for i in start..ctx.smalls.len() {
        let (p, q) = ctx.smalls[i];
        // Ascending values: once p/q ≥ budget, all later ones are too.
        if cmp_frac(p, q, budget.0, budget.1) != Ordering::Less {
            break;
        }
        let num = budget.0 * q - p * budget.1;
        let den = budget.1 * q;
        let g = num.gcd(&den).max(1);
        vals.push((p, q));
        rows.push(&ctx.small_rows[i]);
        extend_with_smalls(ctx, i, slots - 1, (num / g, den / g), vals, rows, out);
        rows.pop();
        vals.pop();
    }
}

fn enumerate_minimal_index_ge2(caps: &TableCaps) -> (BTreeSet<(u32, u64)>, u64, u64) {
    if caps.max_components < 3 {
        return (BTreeSet::new(), 0, 0);
    }
    let max_den = caps.max_denominator as i64;
    let all = proper_fractions(max_den);
    let bigs: Vec<(i64, i64)> = all.iter().copied().filter(|&(p, q)| 2 * p >= q).collect();
    let smalls: Vec<(i64, i64)> = all.iter().copied().filter(|&(p, q)| 2 * p < q).collect();
    let big_rows: Vec<FloorRow> = bigs.iter().map(|&(p, q)| floor_row(p, q)).collect();
    let small_rows: Vec<FloorRow> = smalls.iter().map(|&(p, q)| floor_row(p, q)).collect();

    let merged = (0..bigs.len())
        .into_par_iter()
        .map(|i| {
            let mut out = H3Out {
                pairs: BTreeSet::new(),
                fallbacks: 0,
                skipped: 0,
            };
            let (xp, xq) = bigs[i];
            // x ≤ y ≤ z and x+y+z < 2 force x < 2/3.
            if 3 * xp >= 2 * xq {
                return out;
            }
            let ctx = H3Ctx {
                smalls: &smalls,
                small_rows: &small_rows,
                max_extra: caps.max_components - 3,
            };
            for j in i..bigs.len() {
                let (yp, yq) = bigs[j];
                // y ≤ z needs x + 2y < 2.
                if xp * yq + 2 * yp * xq >= 2 * xq * yq {
                    break;
                }
                for l in j..bigs.len() {
                    let (zp, zq) = bigs[l];
                    let den = xq * yq * zq;
                    let num = 2 * den - xp * yq * zq - yp * xq * zq - zp * xq * yq;
                    // num = den·(2 − x − y − z); need it positive.
                    if num <= 0 {
                        break;
                    }
                    let g = num.gcd(&den);
                    let mut vals = vec![(xp, xq), (yp, yq), (zp, zq)];
                    let mut rows: Vec<&FloorRow> =
                        vec![&big_rows[i], &big_rows[j], &big_rows[l]];
                    extend_with_smalls(
                        &ctx,
                        0,
                        ctx.max_extra,
                        (num / g, den / g),
                        &mut vals,
                        &mut rows,
                        &mut out,
                    );
                }
            }
            out
        })
        .reduce(
            || H3Out {
                pairs: BTreeSet::new(),
                fallbacks: 0,
                skipped: 0,
            },
            |mut a, b| {
                a.pairs.extend(b.pairs);
                a.fallbacks += b.fallbacks;
                a.skipped += b.skipped;
                a
            },
        );
    (merged.pairs, merged.fallbacks, merged.skipped)
}

/// Compute all five multiplier tables in one sweep.
pub fn multiplier_tables(caps: &TableCaps) -> TableReport {
    let (t1, fb1) = enumerate_minimal_index_one(caps);
    let (pairs, fb2, skipped) = enumerate_minimal_index_ge2(caps);
    let mut tables: BTreeMap<u32, BTreeSet<u64>> = REGULAR_TABLE_INDICES
        .iter()
        .map(|&n| (n, BTreeSet::new()))
        .collect();
    tables.insert(1, t1);
    for (n, m) in pairs {
        tables.get_mut(&n).expect("regular index").insert(m);
    }
    TableReport {
        tables,
        exact_fallbacks: fb1 + fb2,
        skipped_nonregular: skipped,
    }
}

/// The multiplier table for a single regular minimal index.
pub fn multiplier_table(n: u32, caps: &TableCaps) -> Result<BTreeSet<u64>, SurfError> {
    if !REGULAR_TABLE_INDICES.contains(&n) {
        return Err(SurfError::NotRegularIndex(n));
    }
    if n == 1 {
        Ok(enumerate_minimal_index_one(caps).0)
    } else {
        let (pairs, _, _) = enumerate_minimal_index_ge2(caps);
        Ok(pairs
            .into_iter()
            .filter(|&(nn, _)| nn == n)
            .map(|(_, m)| m)
            .collect())
    }
}

/// Probe variant without the minimality requirement: every boundary that is
/// n-complementary at all (minimal or not) contributes its minimal m with an
/// (n+1)m-complement.  Exponential in the caps; the denominator is limited
/// to 24 to keep the probe finite in practice.
pub fn multiplier_table_nonminimal(n: u32, caps: &TableCaps) -> Result<BTreeSet<u64>, SurfError> {
    assert!(n >= 1);
    if caps.max_denominator > 24 {
        return Err(SurfError::InvalidCurve(
            "non-minimal probe supports max denominator 24".into(),
        ));
    }
    let vals = proper_fractions(caps.max_denominator as i64);
    let n = i64::from(n);
    let mut out = BTreeSet::new();

    fn visit(
        vals: &[(i64, i64)],
        start: usize,
        slots: u32,
        acc: &mut Vec<(i64, i64)>,
        sum: (i64, i64),
        n: i64,
        out: &mut BTreeSet<u64>,
    ) {
        let s: i64 = acc
            .iter()
            .map(|&(p, q)| ((n + 1) * p).div_euclid(q))
            .sum();
        if s <= 2 * n {
            out.insert(minimal_multiplier_i64(acc, n + 1));
        }
        if slots == 0 {
            return;
        }
        for i in start..vals.len() {
            let v = vals[i];
            let num = sum.0 * v.1 + v.0 * sum.1;
            let den = sum.1 * v.1;
            if num >= 2 * den {
                break;
            }
            let g = num.gcd(&den);
            acc.push(v);
            visit(vals, i, slots - 1, acc, (num / g, den / g), n, out);
            acc.pop();
        }
    }
    visit(
        &vals,
        0,
        caps.max_components,
        &mut Vec::new(),
        (0, 1),
        n,
        &mut out,
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn breakpoints_cover_unit_interval() {
        let pts = breakpoints_index_one();
        assert_eq!(pts.first(), Some(&(0, 1)));
        assert_eq!(pts.last(), Some(&(1, 1)));
        for w in pts.windows(2) {
            assert_eq!(cmp_frac(w[0].0, w[0].1, w[1].0, w[1].1), Ordering::Less);
        }
    }

    #[test]
    fn classes_have_class_constant_floors() {
        // Every representable value in a class shares the stored floors.
        let classes = classes_index_one(60);
        for c in classes.iter().step_by(7) {
            for (p, q) in values_in_class(c, 60).into_iter().take(5) {
                for m in 1..=M_PROBE as i64 {
                    let k = 2 * m + 1;
                    assert_eq!(
                        (k * p).div_euclid(q),
                        c.floors[(m - 1) as usize],
                        "class [{:?},{:?}) value {p}/{q} at k={k}",
                        c.lo,
                        c.hi
                    );
                }
            }
        }
    }

    #[test]
    fn minimal_multiplier_examples() {
        assert_eq!(minimal_multiplier_i64(&[(2, 3), (2, 3), (2, 3)], 4), 3);
        assert_eq!(minimal_multiplier_i64(&[(1, 2), (2, 3), (5, 6)], 7), 6);
        assert_eq!(minimal_multiplier_i64(&[], 2), 1);
        assert_eq!(minimal_multiplier_i64(&[(1, 2), (2, 3), (2, 3)], 4), 1);
    }

    /// Reference brute force over explicit value multisets, no class tricks.
    fn reference_tables(caps: &TableCaps) -> BTreeMap<u32, BTreeSet<u64>> {
        let vals = proper_fractions(caps.max_denominator as i64);
        let mut tables: BTreeMap<u32, BTreeSet<u64>> = REGULAR_TABLE_INDICES
            .iter()
            .map(|&n| (n, BTreeSet::new()))
            .collect();

        fn minimal_index(vals: &[(i64, i64)]) -> Option<i64> {
            (1..=6).find(|&n| {
                let s: i64 = vals
                    .iter()
                    .map(|&(p, q)| ((n + 1) * p).div_euclid(q))
                    .sum();
                s <= 2 * n
            })
        }

        fn visit(
            all: &[(i64, i64)],
            start: usize,
            slots: u32,
            acc: &mut Vec<(i64, i64)>,
            tables: &mut BTreeMap<u32, BTreeSet<u64>>,
        ) {
            let den: i64 = acc.iter().map(|v| v.1).product();
            let num: i64 = acc.iter().map(|v| v.0 * den / v.1).sum();
            if num < 2 * den {
                if let Some(n) = minimal_index(acc) {
                    if n != 5 {
                        let m = minimal_multiplier_i64(acc, n + 1);
                        tables.get_mut(&(n as u32)).unwrap().insert(m);
                    }
                }
            } else {
                return;
            }
            if slots == 0 {
                return;
            }
            for i in start..all.len() {
                acc.push(all[i]);
                visit(all, i, slots - 1, acc, tables);
                acc.pop();
            }
        }
        visit(&vals, 0, caps.max_components, &mut Vec::new(), &mut tables);
        tables
    }

    #[test]
    fn agrees_with_reference_brute_force() {
        let caps = TableCaps {
            max_components: 3,
            max_denominator: 8,
        };
        let fast = multiplier_tables(&caps);
        let slow = reference_tables(&caps);
        assert_eq!(fast.tables, slow);
    }

    #[test]
    fn agrees_with_reference_brute_force_four_components() {
        let caps = TableCaps {
            max_components: 4,
            max_denominator: 6,
        };
        let fast = multiplier_tables(&caps);
        let slow = reference_tables(&caps);
        assert_eq!(fast.tables, slow);
    }

    #[test]
    fn small_cap_tables_are_subsets_of_reference() {
        let caps = TableCaps {
            max_components: 4,
            max_denominator: 12,
        };
        let report = multiplier_tables(&caps);
        for (n, expected) in REFERENCE_MULTIPLIER_TABLES {
            let got = &report.tables[&n];
            let exp: BTreeSet<u64> = expected.iter().copied().collect();
            assert!(
                got.is_subset(&exp),
                "n={n}: got {got:?} not within {exp:?}"
            );
        }
    }

    #[test]
    fn rejects_non_regular_index() {
        assert!(matches!(
            multiplier_table(5, &TableCaps::default()),
            Err(SurfError::NotRegularIndex(5))
        ));
    }

    #[test]
    fn nonminimal_probe_contains_minimal_table() {
        let caps = TableCaps {
            max_components: 3,
            max_denominator: 8,
        };
        let minimal = multiplier_table(2, &caps).unwrap();
        let probe = multiplier_table_nonminimal(2, &caps).unwrap();
        assert!(minimal.is_subset(&probe));
        assert!(multiplier_table_nonminimal(
            2,
            &TableCaps {
                max_components: 3,
                max_denominator: 60
            }
        )
        .is_err());
    }
}
