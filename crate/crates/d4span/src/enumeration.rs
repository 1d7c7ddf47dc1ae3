//! Enumeration of the admissible spanning set and of leading terms.
//!
//! The enumerator walks degree slabs -1, -2, ... downwards. Every DC row
//! spans two adjacent degrees, so the backtracking frontier is a single
//! window profile: a slab assignment is pruned against the a-parts of the
//! rows, and the previous window is finalized as soon as both slabs exist.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::Serialize;

use crate::conditions::{self, DcRow, HighestWeight, Slot, DC_ROWS, IC_ROWS};
use crate::monomial::{Color, ColorCounts, FrequencyProfile, Monomial, Variable};

/// Counts of admissible monomials by total degree, complete up to `depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedTable {
    depth: u32,
    counts: BTreeMap<u32, BigUint>,
}

impl GradedTable {
    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn count(&self, degree: u32) -> BigUint {
        self.counts.get(&degree).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &BigUint)> {
        self.counts.iter().map(|(&d, n)| (d, n))
    }

    /// `degree,count` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,count\n");
        for (d, n) in self.entries() {
            let _ = writeln!(out, "{d},{n}");
        }
        out
    }
}

impl Serialize for GradedTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // Counts as decimal strings; they outgrow fixed-width integers.
        let mut map = s.serialize_map(Some(self.counts.len()))?;
        for (d, n) in self.entries() {
            map.serialize_entry(&d.to_string(), &n.to_string())?;
        }
        map.end()
    }
}

/// All slab assignments whose a-part sums stay within k for every DC row,
/// in a fixed lexicographic order. The zero assignment comes first.
fn slab_candidates(k: u32) -> Vec<ColorCounts> {
    let mut out = Vec::new();
    let mut current = ColorCounts::new();
    fn fill(pos: usize, k: u32, current: &mut ColorCounts, out: &mut Vec<ColorCounts>) {
        if pos == Color::ALL.len() {
            out.push(*current);
            return;
        }
        let color = Color::ALL[pos];
        for n in 0..=k {
            current.set(color, n);
            let ok = DC_ROWS.iter().all(|row| {
                row.terms
                    .iter()
                    .filter(|&&(slot, _)| slot == Slot::A)
                    .map(|&(_, c)| current.get(c) as u64)
                    .sum::<u64>()
                    <= k as u64
            });
            if ok {
                fill(pos + 1, k, current, out);
            }
        }
        current.set(color, 0);
    }
    fill(0, k, &mut current, &mut out);
    out
}

fn window_ok(a: &ColorCounts, b: &ColorCounts, k: u32) -> bool {
    let profile = FrequencyProfile { j: 0, a: *a, b: *b };
    DC_ROWS.iter().all(|row| row.sum(&profile) <= k as u64)
}

fn ic_ok(counts: &ColorCounts, weight: &HighestWeight) -> bool {
    IC_ROWS
        .iter()
        .all(|row| row.sum(counts) <= row.capacity_for(weight))
}

fn monomial_from_slabs(slabs: &[ColorCounts]) -> Monomial {
    let mut m = Monomial::one();
    for (i, counts) in slabs.iter().enumerate() {
        let j = i as i64 + 1;
        let slab = Monomial::from_window_counts(j, &ColorCounts::new(), counts);
        m = m.multiply(&slab);
    }
    m
}

/// All monomials with degrees in [-max_depth, -1] satisfying DC for the level
/// of `weight` and IC for `weight`, each exactly once, sorted by ascending
/// total degree and then by the monomial order.
pub fn enumerate_admissible(weight: &HighestWeight, max_depth: u32) -> Vec<Monomial> {
    let k = weight.level();
    let candidates = slab_candidates(k);
    let mut out = Vec::new();
    let mut slabs: Vec<ColorCounts> = Vec::new();

    fn descend(
        depth_left: u32,
        weight: &HighestWeight,
        k: u32,
        candidates: &[ColorCounts],
        slabs: &mut Vec<ColorCounts>,
        out: &mut Vec<Monomial>,
    ) {
        if depth_left == 0 {
            out.push(monomial_from_slabs(slabs));
            return;
        }
        for counts in candidates {
            let ok = if let Some(prev) = slabs.last() {
                // Window between the previous slab (a-side) and this one.
                window_ok(prev, counts, k)
            } else {
                ic_ok(counts, weight)
            };
            if ok {
                slabs.push(*counts);
                descend(depth_left - 1, weight, k, candidates, slabs, out);
                slabs.pop();
            }
        }
    }

    descend(max_depth, weight, k, &candidates, &mut slabs, &mut out);
    out.sort_by(|m1, m2| {
        m1.total_degree()
            .cmp(&m2.total_degree())
            .then_with(|| m1.cmp(m2))
    });
    out
}

/// Counts of admissible monomials per total degree d <= depth. Any monomial of
/// total degree <= depth has all factor degrees >= -depth, so enumeration over
/// that window is complete.
pub fn graded_dimensions(weight: &HighestWeight, depth: u32) -> GradedTable {
    let mut counts: BTreeMap<u32, BigUint> = (0..=depth).map(|d| (d, BigUint::zero())).collect();
    for m in enumerate_admissible(weight, depth) {
        let d = m.total_degree() as u32;
        if d <= depth {
            *counts.get_mut(&d).unwrap() += BigUint::one();
        }
    }
    GradedTable { depth, counts }
}

/// A solution of one critical equality realized on two adjacent degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingTerm {
    /// 0-based index into the DC table.
    pub condition: usize,
    /// The solution counts, placed at the window: b at -j-1, a at -j.
    pub profile: FrequencyProfile,
    /// The realized monomial on degrees {-j-1, -j}.
    pub monomial: Monomial,
}

/// Nonnegative solutions of `sum(terms) = total` for the six terms of one DC
/// row, each realized at window j, in a fixed lexicographic order.
pub fn equality_solutions(row: &DcRow, total: u32, j: i64) -> Vec<LeadingTerm> {
    let mut out = Vec::new();
    let mut assignment = [0u32; 6];
    fn fill(
        row: &DcRow,
        pos: usize,
        left: u32,
        assignment: &mut [u32; 6],
        j: i64,
        out: &mut Vec<LeadingTerm>,
    ) {
        if pos == row.terms.len() - 1 {
            assignment[pos] = left;
            let mut a = ColorCounts::new();
            let mut b = ColorCounts::new();
            for (&(slot, color), &n) in row.terms.iter().zip(assignment.iter()) {
                match slot {
                    Slot::A => a.add(color, n),
                    Slot::B => b.add(color, n),
                }
            }
            let profile = FrequencyProfile { j, a, b };
            out.push(LeadingTerm {
                condition: row.index,
                profile,
                monomial: Monomial::from_window_counts(j, &b, &a),
            });
            return;
        }
        for n in 0..=left {
            assignment[pos] = n;
            fill(row, pos + 1, left - n, assignment, j, out);
        }
    }
    fill(row, 0, total, &mut assignment, j, &mut out);
    out
}

/// All leading terms at level k and window j: the solutions of the ten
/// critical equalities summing to k+1, deduplicated as realized monomials
/// (first realizing condition kept), sorted by the monomial order.
pub fn leading_terms(k: u32, j: i64) -> Vec<LeadingTerm> {
    let mut seen: BTreeMap<Monomial, LeadingTerm> = BTreeMap::new();
    for row in &DC_ROWS {
        for lt in equality_solutions(row, k + 1, j) {
            seen.entry(lt.monomial.clone()).or_insert(lt);
        }
    }
    seen.into_values().collect()
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let mut result = BigUint::one();
    for i in 0..r.min(n - r) {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

/// C(k+6,5) + 6 C(k+5,5) + 3 C(k+4,5).
pub fn leading_term_binomial_sum(k: u32) -> BigUint {
    let k = k as u64;
    binomial(k + 6, 5) + 6u32 * binomial(k + 5, 5) + 3u32 * binomial(k + 4, 5)
}

/// (k+2)^2 (k+3)^2 (k+4) / 12, exactly.
pub fn leading_term_closed_form(k: u32) -> BigUint {
    let k = BigUint::from(k);
    let product = (&k + 2u32) * (&k + 2u32) * (&k + 3u32) * (&k + 3u32) * (&k + 4u32);
    debug_assert!((&product % 12u32).is_zero());
    product / 12u32
}

/// The three leading-term counts: the deduplicated enumeration, the closed
/// form, and the binomial sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingTermCount {
    pub count: BigUint,
    pub formula: BigUint,
    pub binomial_sum: BigUint,
}

impl Serialize for LeadingTermCount {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // Decimal strings; the counts outgrow fixed-width integers.
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("count", &self.count.to_string())?;
        map.serialize_entry("formula", &self.formula.to_string())?;
        map.serialize_entry("binomial_sum", &self.binomial_sum.to_string())?;
        map.end()
    }
}

/// A verification op reported a disagreement between routes that must agree.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountingError {
    #[error("leading-term count mismatch at level {k}: enumerated {count}, closed form {formula}, binomial sum {binomial_sum}")]
    LeadingTerms {
        k: u32,
        count: BigUint,
        formula: BigUint,
        binomial_sum: BigUint,
    },
    #[error("Weyl dimension mismatch at level {k}: product {product}, closed form {closed_form}")]
    WeylDimension {
        k: u32,
        product: BigUint,
        closed_form: BigUint,
    },
}

/// Counts leading terms at level k three ways and checks that they agree.
pub fn count_leading_terms(k: u32) -> Result<LeadingTermCount, CountingError> {
    let count = BigUint::from(leading_terms(k, 1).len());
    let formula = leading_term_closed_form(k);
    let binomial_sum = leading_term_binomial_sum(k);
    if count == formula && formula == binomial_sum {
        Ok(LeadingTermCount {
            count,
            formula,
            binomial_sum,
        })
    } else {
        Err(CountingError::LeadingTerms {
            k,
            count,
            formula,
            binomial_sum,
        })
    }
}

/// Positive roots of A3 as coefficients over the simple roots.
const A3_POSITIVE_ROOTS: [[u32; 3]; 6] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [0, 1, 1],
    [1, 1, 1],
];

/// Dimension of the irreducible sl4-module with highest weight (k+1) times
/// the middle fundamental weight, by the Weyl product over positive roots;
/// cross-checked against (k+2)(k+3)^2(k+4)/12.
pub fn weyl_dim_vk(k: u32) -> Result<BigUint, CountingError> {
    let c = k as u64 + 1;
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for root in A3_POSITIVE_ROOTS {
        let height: u64 = root.iter().map(|&m| m as u64).sum();
        numerator *= BigUint::from(height + c * root[1] as u64);
        denominator *= BigUint::from(height);
    }
    debug_assert!((&numerator % &denominator).is_zero());
    let product = numerator / denominator;

    let kb = BigUint::from(k);
    let closed = (&kb + 2u32) * (&kb + 3u32) * (&kb + 3u32) * (&kb + 4u32);
    debug_assert!((&closed % 12u32).is_zero());
    let closed_form = closed / 12u32;

    if product == closed_form {
        Ok(product)
    } else {
        Err(CountingError::WeylDimension {
            k,
            product,
            closed_form,
        })
    }
}

/// If m violates DC for level k, a submonomial of length k+1 supported on two
/// adjacent degrees that is a realized leading term; None when DC holds.
///
/// Only windows j >= 1 are searched, which is exhaustive for monomials with
/// all degrees <= -1.
pub fn violation_witness(m: &Monomial, k: u32) -> Option<LeadingTerm> {
    for j in m.windows() {
        if j < 1 {
            continue;
        }
        let profile = m.window_profile(j);
        for row in &DC_ROWS {
            if row.sum(&profile) <= k as u64 {
                continue;
            }
            // Sub-assignment of the row terms summing to exactly k+1.
            let mut left = k + 1;
            let mut a = ColorCounts::new();
            let mut b = ColorCounts::new();
            for &(slot, color) in row.terms {
                let available = match slot {
                    Slot::A => profile.a.get(color),
                    Slot::B => profile.b.get(color),
                };
                let take = available.min(left);
                left -= take;
                match slot {
                    Slot::A => a.add(color, take),
                    Slot::B => b.add(color, take),
                }
            }
            debug_assert_eq!(left, 0);
            return Some(LeadingTerm {
                condition: row.index,
                profile: FrequencyProfile { j, a, b },
                monomial: Monomial::from_window_counts(j, &b, &a),
            });
        }
    }
    None
}

/// Searches the set-partitions of m into one part per entry of `levels`, with
/// part i satisfying DC for `levels[i]`. Multiplicities of each run are split
/// among the parts directly (no sequence permutations); failed frontier
/// states are memoized.
pub fn find_factorization(m: &Monomial, levels: &[u32]) -> Option<Vec<Monomial>> {
    if levels.is_empty() {
        return m.is_empty().then(Vec::new);
    }
    let mut search = Splitter {
        runs: m.runs().to_vec(),
        levels,
        parts: vec![Vec::new(); levels.len()],
        failed: HashSet::new(),
    };
    search.split(0).then(|| {
        search
            .parts
            .iter()
            .map(|part| part_monomial(part))
            .collect()
    })
}

/// Per part, the counts on the run's degree slab and the one below it.
type Frontier = Vec<(ColorCounts, ColorCounts)>;

struct Splitter<'a> {
    runs: Vec<(Variable, u32)>,
    levels: &'a [u32],
    parts: Vec<Vec<(Variable, u32)>>,
    failed: HashSet<(usize, Frontier)>,
}

fn part_monomial(part: &[(Variable, u32)]) -> Monomial {
    Monomial::from_variables(
        part.iter()
            .flat_map(|&(v, n)| std::iter::repeat_n(v, n as usize)),
    )
}

impl Splitter<'_> {
    /// Runs are assigned in ascending degree order, so only the counts at the
    /// current degree and the one below can interact with future runs.
    fn frontier(&self, degree: i64) -> Frontier {
        self.parts
            .iter()
            .map(|part| {
                let mut below = ColorCounts::new();
                let mut at = ColorCounts::new();
                for &(v, n) in part {
                    if v.degree == degree {
                        at.add(v.color, n);
                    } else if v.degree == degree - 1 {
                        below.add(v.color, n);
                    }
                }
                (below, at)
            })
            .collect()
    }

    fn parts_ok(&self) -> bool {
        self.parts
            .iter()
            .zip(self.levels)
            .all(|(part, &k)| conditions::satisfies_dc(&part_monomial(part), k).is_satisfied())
    }

    fn split(&mut self, idx: usize) -> bool {
        if idx == self.runs.len() {
            return self.parts_ok();
        }
        let key = (idx, self.frontier(self.runs[idx].0.degree));
        if self.failed.contains(&key) {
            return false;
        }
        if self.distribute(idx, self.runs[idx].1, 0) {
            // Keep the assignment; the caller reads it off `parts`.
            return true;
        }
        self.failed.insert(key);
        false
    }

    /// Distributes the remaining multiplicity of run `idx` over the parts
    /// from `part_idx` on, pruning as soon as a partial part violates its DC.
    fn distribute(&mut self, idx: usize, left: u32, part_idx: usize) -> bool {
        let var = self.runs[idx].0;
        if part_idx == self.parts.len() - 1 {
            if left > 0 {
                self.parts[part_idx].push((var, left));
            }
            if self.parts_ok() && self.split(idx + 1) {
                return true;
            }
            if left > 0 {
                self.parts[part_idx].pop();
            }
            return false;
        }
        for take in 0..=left {
            if take > 0 {
                self.parts[part_idx].push((var, take));
            }
            if self.distribute(idx, left - take, part_idx + 1) {
                return true;
            }
            if take > 0 {
                self.parts[part_idx].pop();
            }
        }
        false
    }
}

/// Leading-term monomials per window, for membership tests.
pub fn leading_term_set(k: u32, j: i64) -> HashSet<Monomial> {
    leading_terms(k, j)
        .into_iter()
        .map(|lt| lt.monomial)
        .collect()
}
