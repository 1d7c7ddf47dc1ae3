//! Difference conditions for level k, initial conditions for L(Lambda), and
//! the ghost-monomial equivalence between the two.
//!
//! Both condition tables are declarative data: a row is a set of
//! (slot, color) terms bounded by a capacity. DC capacities are the level k;
//! IC capacities are linear forms in the weight multiplicities k0..k4.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};

use crate::monomial::{Color, ColorCounts, FrequencyProfile, Monomial};

/// Which count of a window a condition term reads: `A` is the count at
/// degree -j, `B` the count at degree -j-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    A,
    B,
}

pub(crate) const ROMAN: [&str; 10] = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"];

/// One difference-condition row: the term sum is bounded by the level k at
/// every window j.
#[derive(Debug, Clone, Copy)]
pub struct DcRow {
    /// 0-based position in the table; `label()` gives the roman numeral.
    pub index: usize,
    pub terms: &'static [(Slot, Color)],
}

impl DcRow {
    pub fn label(&self) -> &'static str {
        ROMAN[self.index]
    }

    pub fn sum(&self, profile: &FrequencyProfile) -> u64 {
        self.terms
            .iter()
            .map(|&(slot, color)| match slot {
                Slot::A => profile.a.get(color) as u64,
                Slot::B => profile.b.get(color) as u64,
            })
            .sum()
    }
}

use Color::{C2Bar, C3Bar, C4Bar, C2, C3, C4};
use Slot::{A, B};

/// The ten difference-condition rows, labeled (i)..(x).
#[rustfmt::skip]
pub const DC_ROWS: [DcRow; 10] = [
    DcRow { index: 0, terms: &[(B, C2), (A, C2Bar), (A, C3Bar), (A, C4Bar), (A, C4), (A, C3)] },
    DcRow { index: 1, terms: &[(B, C2), (A, C3Bar), (A, C4Bar), (A, C4), (A, C3), (A, C2)] },
    DcRow { index: 2, terms: &[(B, C3), (B, C2), (A, C2Bar), (A, C3Bar), (A, C4Bar), (A, C4)] },
    DcRow { index: 3, terms: &[(B, C3), (B, C2), (A, C2Bar), (A, C4Bar), (A, C4), (A, C3)] },
    DcRow { index: 4, terms: &[(B, C4), (B, C3), (B, C2), (A, C2Bar), (A, C3Bar), (A, C4)] },
    DcRow { index: 5, terms: &[(B, C4Bar), (B, C3), (B, C2), (A, C2Bar), (A, C3Bar), (A, C4Bar)] },
    DcRow { index: 6, terms: &[(B, C4Bar), (B, C4), (B, C3), (B, C2), (A, C2Bar), (A, C3Bar)] },
    DcRow { index: 7, terms: &[(B, C3Bar), (B, C4Bar), (B, C4), (B, C2), (A, C2Bar), (A, C3Bar)] },
    DcRow { index: 8, terms: &[(B, C3Bar), (B, C4Bar), (B, C4), (B, C3), (B, C2), (A, C2Bar)] },
    DcRow { index: 9, terms: &[(B, C2Bar), (B, C3Bar), (B, C4Bar), (B, C4), (B, C3), (A, C2Bar)] },
];

/// One initial-condition row: counts of degree -1 factors of the given colors
/// are bounded by a linear form in (k0..k4).
#[derive(Debug, Clone, Copy)]
pub struct IcRow {
    pub index: usize,
    pub colors: &'static [Color],
    /// Coefficients of (k0, k1, k2, k3, k4) in the capacity.
    pub capacity: [u32; 5],
}

impl IcRow {
    pub fn label(&self) -> &'static str {
        ROMAN[self.index]
    }

    pub fn sum(&self, counts: &ColorCounts) -> u64 {
        self.colors.iter().map(|&c| counts.get(c) as u64).sum()
    }

    pub fn capacity_for(&self, weight: &HighestWeight) -> u64 {
        self.capacity
            .iter()
            .zip(weight.multiplicities())
            .map(|(&coeff, k)| coeff as u64 * k as u64)
            .sum()
    }
}

/// The eight initial-condition rows, labeled (i)..(viii).
pub const IC_ROWS: [IcRow; 8] = [
    IcRow {
        index: 0,
        colors: &[C2],
        capacity: [1, 0, 0, 0, 0],
    },
    IcRow {
        index: 1,
        colors: &[C3, C2],
        capacity: [1, 0, 1, 0, 0],
    },
    IcRow {
        index: 2,
        colors: &[C4, C3, C2],
        capacity: [1, 0, 1, 1, 0],
    },
    IcRow {
        index: 3,
        colors: &[C4Bar, C3, C2],
        capacity: [1, 0, 1, 0, 1],
    },
    IcRow {
        index: 4,
        colors: &[C4Bar, C4, C3, C2],
        capacity: [1, 0, 1, 1, 1],
    },
    IcRow {
        index: 5,
        colors: &[C3Bar, C4Bar, C4, C2],
        capacity: [1, 0, 1, 1, 1],
    },
    IcRow {
        index: 6,
        colors: &[C3Bar, C4Bar, C4, C3, C2],
        capacity: [1, 0, 2, 1, 1],
    },
    IcRow {
        index: 7,
        colors: &[C2Bar, C3Bar, C4Bar, C4, C3],
        capacity: [1, 0, 2, 1, 1],
    },
];

/// A dominant integral weight k0*L0 + ... + k4*L4 of D4(1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HighestWeight {
    pub k0: u32,
    pub k1: u32,
    pub k2: u32,
    pub k3: u32,
    pub k4: u32,
}

impl HighestWeight {
    pub fn new(k0: u32, k1: u32, k2: u32, k3: u32, k4: u32) -> Self {
        HighestWeight { k0, k1, k2, k3, k4 }
    }

    /// The i-th fundamental weight Lambda_i, 0 <= i <= 4.
    pub fn fundamental(i: usize) -> Self {
        let mut ks = [0u32; 5];
        ks[i] = 1;
        HighestWeight::new(ks[0], ks[1], ks[2], ks[3], ks[4])
    }

    pub fn multiplicities(&self) -> [u32; 5] {
        [self.k0, self.k1, self.k2, self.k3, self.k4]
    }

    /// The level k = k0 + k1 + 2*k2 + k3 + k4, saturating on absurd weights;
    /// any level beyond the factor count of a monomial passes every DC row,
    /// so the saturation is unobservable through the condition checks.
    pub fn level(&self) -> u32 {
        let level =
            self.k0 as u64 + self.k1 as u64 + 2 * self.k2 as u64 + self.k3 as u64 + self.k4 as u64;
        u32::try_from(level).unwrap_or(u32::MAX)
    }

    /// All weights of level at most `max_level`, in lexicographic order.
    pub fn up_to_level(max_level: u32) -> Vec<HighestWeight> {
        let mut out = Vec::new();
        for k0 in 0..=max_level {
            for k1 in 0..=max_level {
                for k2 in 0..=max_level / 2 {
                    for k3 in 0..=max_level {
                        for k4 in 0..=max_level {
                            let w = HighestWeight::new(k0, k1, k2, k3, k4);
                            if w.level() <= max_level {
                                out.push(w);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{}",
            self.k0, self.k1, self.k2, self.k3, self.k4
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected five comma-separated nonnegative integers k0,k1,k2,k3,k4")]
pub struct WeightParseError;

impl FromStr for HighestWeight {
    type Err = WeightParseError;

    fn from_str(text: &str) -> Result<Self, WeightParseError> {
        let parts: Vec<u32> = text
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| WeightParseError))
            .collect::<Result<_, _>>()?;
        if parts.len() != 5 {
            return Err(WeightParseError);
        }
        Ok(HighestWeight::new(
            parts[0], parts[1], parts[2], parts[3], parts[4],
        ))
    }
}

impl Serialize for HighestWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.multiplicities().serialize(s)
    }
}

impl<'de> Deserialize<'de> for HighestWeight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let ks = <[u32; 5]>::deserialize(d)?;
        Ok(HighestWeight::new(ks[0], ks[1], ks[2], ks[3], ks[4]))
    }
}

/// Which table row a violation refers to. Orders by table position within
/// each table; `DegreeBound` is the shifted-IC degree cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RowRef {
    Dc(usize),
    Ic(usize),
    DegreeBound,
}

impl fmt::Display for RowRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowRef::Dc(i) => write!(f, "DC({})", ROMAN[*i]),
            RowRef::Ic(i) => write!(f, "IC({})", ROMAN[*i]),
            RowRef::DegreeBound => write!(f, "degree-bound"),
        }
    }
}

impl Serialize for RowRef {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A violated row and the window where the violation happened. For IC rows the
/// window is 0 (the counts live at degree -1); for the degree bound it is the
/// greatest offending factor degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub row: RowRef,
    pub window: i64,
}

/// Outcome of a condition check; satisfied iff no violations. Violations are
/// sorted by (window, row).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verdict {
    violations: Vec<Violation>,
}

impl Verdict {
    pub fn satisfied_verdict() -> Self {
        Verdict::default()
    }

    pub(crate) fn from_violations(mut violations: Vec<Violation>) -> Self {
        violations.sort_by_key(|v| (v.window, v.row));
        Verdict { violations }
    }

    pub fn is_satisfied(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Both verdicts' violations merged.
    pub fn and(self, other: Verdict) -> Verdict {
        let mut violations = self.violations;
        violations.extend(other.violations);
        Verdict::from_violations(violations)
    }
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("satisfied", &self.is_satisfied())?;
        map.serialize_entry("violations", &self.violations)?;
        map.end()
    }
}

/// The monomial has a factor of nonnegative degree, so initial conditions are
/// not defined for it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error(
    "initial conditions are defined only for factors of negative degree; found degree {degree}"
)]
pub struct IcDomainError {
    pub degree: i64,
}

/// Evaluates every DC row at every window with a nonzero profile.
///
/// Every integer window with a nonzero profile is checked, not only j >= 1,
/// so that ghost monomials (degree-0 factors) and shifted monomials are
/// covered. For monomials with degrees <= -1 the two readings agree.
pub fn satisfies_dc(m: &Monomial, k: u32) -> Verdict {
    let mut violations = Vec::new();
    for j in m.windows() {
        let profile = m.window_profile(j);
        for row in &DC_ROWS {
            if row.sum(&profile) > k as u64 {
                violations.push(Violation {
                    row: RowRef::Dc(row.index),
                    window: j,
                });
            }
        }
    }
    Verdict::from_violations(violations)
}

/// Evaluates the eight IC rows on the degree -1 counts.
pub fn satisfies_ic(m: &Monomial, weight: &HighestWeight) -> Result<Verdict, IcDomainError> {
    if let Some(degree) = m.max_degree().filter(|&d| d >= 0) {
        return Err(IcDomainError { degree });
    }
    let counts = m.counts_at_degree(-1);
    let violations = IC_ROWS
        .iter()
        .filter(|row| row.sum(&counts) > row.capacity_for(weight))
        .map(|row| Violation {
            row: RowRef::Ic(row.index),
            window: 0,
        })
        .collect();
    Ok(Verdict::from_violations(violations))
}

/// The imaginary degree-0 monomial
/// `2_(0)^k1 3_(0)^k2 4_(0)^k3 4(0)^k4 3(0)^k2 2(0)^k1`.
pub fn ghost_monomial(weight: &HighestWeight) -> Monomial {
    let counts: ColorCounts = [
        (C2Bar, weight.k1),
        (C3Bar, weight.k2),
        (C4Bar, weight.k3),
        (C4, weight.k4),
        (C3, weight.k2),
        (C2, weight.k1),
    ]
    .into_iter()
    .collect();
    Monomial::from_window_counts(0, &ColorCounts::new(), &counts)
}

/// DC for the level of the weight together with IC for the weight.
pub fn admissible(m: &Monomial, weight: &HighestWeight) -> Result<bool, IcDomainError> {
    let ic = satisfies_ic(m, weight)?;
    Ok(ic.is_satisfied() && satisfies_dc(m, weight.level()).is_satisfied())
}

/// Machine-readable dump of both condition tables; the single source of truth
/// shared by tests and docs.
#[derive(Debug, Serialize)]
pub struct ConditionTables {
    pub dc: Vec<RowDoc>,
    pub ic: Vec<RowDoc>,
}

#[derive(Debug, Serialize)]
pub struct RowDoc {
    pub id: &'static str,
    pub terms: Vec<TermDoc>,
    /// Capacity coefficients: `{"level": 1}` for DC rows, multiplicity
    /// coefficients `{"k0": .., ..}` for IC rows (zeros skipped).
    pub capacity: Vec<(String, u32)>,
}

#[derive(Debug, Serialize)]
pub struct TermDoc {
    pub slot: Slot,
    pub color: Color,
}

pub fn condition_tables() -> ConditionTables {
    let dc = DC_ROWS
        .iter()
        .map(|row| RowDoc {
            id: row.label(),
            terms: row
                .terms
                .iter()
                .map(|&(slot, color)| TermDoc { slot, color })
                .collect(),
            capacity: vec![("level".to_string(), 1)],
        })
        .collect();
    let ic = IC_ROWS
        .iter()
        .map(|row| RowDoc {
            id: row.label(),
            terms: row
                .colors
                .iter()
                .map(|&color| TermDoc {
                    slot: Slot::B,
                    color,
                })
                .collect(),
            capacity: row
                .capacity
                .iter()
                .enumerate()
                .filter(|&(_, &coeff)| coeff > 0)
                .map(|(i, &coeff)| (format!("k{i}"), coeff))
                .collect(),
        })
        .collect();
    ConditionTables { dc, ic }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(text: &str) -> Monomial {
        text.parse().unwrap()
    }

    #[test]
    fn tables_have_expected_shape() {
        assert_eq!(DC_ROWS.len(), 10);
        assert_eq!(IC_ROWS.len(), 8);
        for row in &DC_ROWS {
            assert_eq!(row.terms.len(), 6);
            let mut terms = row.terms.to_vec();
            terms.sort();
            terms.dedup();
            assert_eq!(terms.len(), 6, "duplicate term in DC({})", row.label());
        }
        for row in &IC_ROWS {
            let mut colors = row.colors.to_vec();
            colors.sort();
            colors.dedup();
            assert_eq!(colors.len(), row.colors.len());
        }
    }

    #[test]
    fn level_formula() {
        assert_eq!(HighestWeight::new(1, 0, 0, 0, 0).level(), 1);
        assert_eq!(HighestWeight::fundamental(2).level(), 2);
        assert_eq!(HighestWeight::new(3, 0, 0, 0, 0).level(), 3);
        assert_eq!(HighestWeight::new(1, 1, 1, 1, 1).level(), 6);
        // Level <= 2: the zero weight, 4 of level 1, and 11 of level 2
        // (Lambda_2 alone, or two units among k0, k1, k3, k4).
        assert_eq!(HighestWeight::up_to_level(2).len(), 16);
    }

    #[test]
    fn dc_detects_same_degree_pair() {
        let v = satisfies_dc(&mono("3_(-1) 3(-1)"), 1);
        assert!(!v.is_satisfied());
        assert!(v.violations().contains(&Violation {
            row: RowRef::Dc(0),
            window: 1
        }));
        // Row (ii) also counts both factors at this window.
        assert!(v.violations().contains(&Violation {
            row: RowRef::Dc(1),
            window: 1
        }));
    }

    #[test]
    fn dc_allows_the_opposite_pair_2() {
        assert!(satisfies_dc(&mono("2_(-1) 2(-1)"), 1).is_satisfied());
    }

    #[test]
    fn dc_counts_across_adjacent_degrees() {
        let v = satisfies_dc(&mono("2(-2) 2(-1)"), 1);
        assert!(v.violations().contains(&Violation {
            row: RowRef::Dc(1),
            window: 1
        }));
    }

    #[test]
    fn dc_accepts_the_level3_example() {
        let m = mono("3(-1) 3_(-1) 2(-2) 3(-2) 2(-3) 3(-3) 3_(-3) 3(-4)^2");
        assert!(satisfies_dc(&m, 3).is_satisfied());
        assert!(!satisfies_dc(&m, 2).is_satisfied());
    }

    #[test]
    fn only_the_22bar_pair_survives_at_level_one() {
        // At a fixed degree, the only admissible two-factor monomial for k=1.
        let singles: Vec<Monomial> = Color::ALL
            .into_iter()
            .map(|c| Monomial::factor(c, -1))
            .collect();
        for (i, m1) in singles.iter().enumerate() {
            assert!(satisfies_dc(m1, 1).is_satisfied());
            for m2 in &singles[i..] {
                let pair = m1.multiply(m2);
                let expected = pair == mono("2_(-1) 2(-1)");
                assert_eq!(satisfies_dc(&pair, 1).is_satisfied(), expected, "{pair}");
            }
        }
    }

    #[test]
    fn ic_rejects_nonnegative_degrees() {
        let weight = HighestWeight::fundamental(0);
        let err = satisfies_ic(&mono("2(0)"), &weight).unwrap_err();
        assert_eq!(err.degree, 0);
        assert!(satisfies_ic(&mono("2(-1)"), &weight).is_ok());
    }

    #[test]
    fn ic_vanishing_on_lambda1() {
        let weight = HighestWeight::fundamental(1);
        for c in Color::ALL {
            let v = satisfies_ic(&Monomial::factor(c, -1), &weight).unwrap();
            assert!(!v.is_satisfied(), "{c} should violate IC for Lambda_1");
        }
        let v = satisfies_ic(&mono("2(-1)"), &weight).unwrap();
        assert!(v.violations().contains(&Violation {
            row: RowRef::Ic(0),
            window: 0
        }));
    }

    #[test]
    fn ic_vanishing_on_lambda3() {
        let weight = HighestWeight::fundamental(3);
        let v = satisfies_ic(&mono("4_(-1)"), &weight).unwrap();
        assert_eq!(
            v.violations(),
            &[Violation {
                row: RowRef::Ic(3),
                window: 0
            }]
        );
        // Exactly the colors 2, 3, 4_ annihilate v_{Lambda_3}.
        for c in Color::ALL {
            let ok = satisfies_ic(&Monomial::factor(c, -1), &weight)
                .unwrap()
                .is_satisfied();
            assert_eq!(ok, matches!(c, Color::C4 | Color::C3Bar | Color::C2Bar));
        }
    }

    #[test]
    fn ic_accepts_empty() {
        for weight in HighestWeight::up_to_level(2) {
            assert!(satisfies_ic(&Monomial::one(), &weight)
                .unwrap()
                .is_satisfied());
        }
    }

    #[test]
    fn ghost_monomials() {
        assert_eq!(
            ghost_monomial(&HighestWeight::fundamental(0)),
            Monomial::one()
        );
        assert_eq!(
            ghost_monomial(&HighestWeight::fundamental(1)),
            mono("2_(0) 2(0)")
        );
        assert_eq!(
            ghost_monomial(&HighestWeight::fundamental(2)),
            mono("3_(0) 3(0)")
        );
        assert_eq!(
            ghost_monomial(&HighestWeight::new(0, 1, 0, 2, 0)),
            mono("2_(0) 4_(0)^2 2(0)")
        );
    }

    #[test]
    fn admissible_examples() {
        let l0 = HighestWeight::fundamental(0);
        let l1 = HighestWeight::fundamental(1);
        assert!(admissible(&mono("2_(-1) 2(-1)"), &l0).unwrap());
        assert!(admissible(&mono("2(-1)"), &l0).unwrap());
        assert!(!admissible(&mono("2(-1)"), &l1).unwrap());
        assert!(admissible(&Monomial::one(), &l1).unwrap());
    }

    #[test]
    fn ghost_equivalence_small() {
        // Level <= 2 weights, monomials over degrees [-2,-1] with <= 3 factors;
        // the acceptance suite runs the full sweep.
        let vars: Vec<crate::monomial::Variable> = (-2..=-1)
            .flat_map(|d| Color::ALL.map(|c| crate::monomial::Variable::new(c, d)))
            .collect();
        let mut monomials = vec![Vec::new()];
        for _ in 0..3 {
            let grown: Vec<Vec<crate::monomial::Variable>> = monomials
                .iter()
                .flat_map(|m| {
                    vars.iter().map(move |v| {
                        let mut g = m.clone();
                        g.push(*v);
                        g
                    })
                })
                .collect();
            monomials.extend(grown);
        }
        let universe: Vec<Monomial> = monomials
            .into_iter()
            .map(Monomial::from_variables)
            .collect();
        for weight in HighestWeight::up_to_level(2) {
            let ghost = ghost_monomial(&weight);
            for m in &universe {
                let lhs = admissible(m, &weight).unwrap();
                let rhs = satisfies_dc(&m.multiply(&ghost), weight.level()).is_satisfied();
                assert_eq!(lhs, rhs, "weight {weight}, monomial {m}");
            }
        }
    }

    #[test]
    fn window_zero_rows_are_implied_for_ordinary_monomials() {
        // For degrees <= -1, checking all windows agrees with checking only
        // j >= 1: a violation at j = 0 forces one at j = 1.
        for m in crate::test_support::universe(4) {
            for k in 1..=2 {
                let verdict = satisfies_dc(&m, k);
                let positive = verdict.violations().iter().any(|v| v.window >= 1);
                assert_eq!(!verdict.is_satisfied(), positive, "m = {m}, k = {k}");
            }
        }
    }

    #[test]
    fn condition_tables_export() {
        let tables = condition_tables();
        assert_eq!(tables.dc.len(), 10);
        assert_eq!(tables.ic.len(), 8);
        let json = serde_json::to_value(&tables).unwrap();
        assert_eq!(json["dc"][1]["id"], "ii");
        assert_eq!(json["dc"][0]["terms"][0]["slot"], "b");
        assert_eq!(json["ic"][6]["capacity"][1][0], "k2");
        assert_eq!(json["ic"][6]["capacity"][1][1], 2);
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        prop::collection::vec((0usize..6, -5i64..=-1), 0..=6).prop_map(|vars| {
            Monomial::from_variables(
                vars.into_iter()
                    .map(|(c, d)| crate::monomial::Variable::new(Color::ALL[c], d)),
            )
        })
    }

    proptest! {
        #[test]
        fn window_locality(m in arb_monomial(), c in 0usize..6, d in 1i64..=5, k in 1u32..=3) {
            // Inserting a factor at degree -d only touches windows d-1 and d.
            let before = satisfies_dc(&m, k);
            let after = satisfies_dc(&m.multiply(&Monomial::factor(Color::ALL[c], -d)), k);
            let untouched = |v: &&Violation| v.window != d && v.window != d - 1;
            let kept: Vec<_> = before.violations().iter().filter(untouched).collect();
            let got: Vec<_> = after.violations().iter().filter(untouched).collect();
            prop_assert_eq!(kept, got);
        }

        #[test]
        fn dc_monotone_under_submonomials(m in arb_monomial(), k in 1u32..=3, keep in prop::collection::vec(any::<bool>(), 30)) {
            if satisfies_dc(&m, k).is_satisfied() {
                let vars: Vec<_> = m.variables().collect();
                let sub = Monomial::from_variables(
                    vars.into_iter().zip(keep.iter().cycle()).filter(|(_, &b)| b).map(|(v, _)| v),
                );
                prop_assert!(satisfies_dc(&sub, k).is_satisfied());
            }
        }
    }
}
