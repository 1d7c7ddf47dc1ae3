//! The limit construction: tail blocks realizing the squared simple current,
//! embeddings of shifted spanning sets, shifted initial conditions, and DC
//! for semi-infinite monomials with a periodic tail.

use serde::{Deserialize, Serialize};

use crate::conditions::{self, HighestWeight, RowRef, Verdict, Violation, IC_ROWS};
use crate::monomial::{Color, Monomial};

/// The block n_i: the maximal degree -1 monomial acting nontrivially on the
/// i-th fundamental vacuum.
pub fn block_n(i: usize) -> Monomial {
    match i {
        0 => Monomial::factor(Color::C2, -1).multiply(&Monomial::factor(Color::C2Bar, -1)),
        1 => Monomial::one(),
        2 => Monomial::factor(Color::C3, -1).multiply(&Monomial::factor(Color::C3Bar, -1)),
        3 => Monomial::factor(Color::C4, -1),
        4 => Monomial::factor(Color::C4Bar, -1),
        _ => panic!("fundamental index out of range: {i}"),
    }
}

/// The permutation pairing each n with the block shifted below it in m:
/// swaps 0 <-> 1 and 3 <-> 4, fixes 2.
pub fn block_pairing(i: usize) -> usize {
    match i {
        0 => 1,
        1 => 0,
        3 => 4,
        4 => 3,
        other => other,
    }
}

/// The block m_i = shift(n_{sigma(i)}, -1) * n_i, supported on degrees
/// {-2, -1}; its action realizes the square of the simple current.
pub fn block_m(i: usize) -> Monomial {
    block_n(block_pairing(i)).shift(-1).multiply(&block_n(i))
}

/// The tail block m_Lambda = m_0^k0 m_1^k1 m_2^k2 m_3^k3 m_4^k4, supported on
/// degrees {-2, -1}. Not to be confused with the degree-0 ghost monomial of
/// [`crate::conditions::ghost_monomial`], which plays a different role.
pub fn tail_block(weight: &HighestWeight) -> Monomial {
    weight
        .multiplicities()
        .iter()
        .enumerate()
        .fold(Monomial::one(), |acc, (i, &mult)| {
            acc.multiply(&block_m(i).pow(mult))
        })
}

/// One step of the embedding of spanning sets: m times the tail block raised
/// by two.
pub fn embed_step(m: &Monomial, weight: &HighestWeight) -> Monomial {
    m.multiply(&tail_block(weight).shift(2))
}

/// Initial conditions for the 2*step-shifted subspace: no factor of degree
/// 2*step or greater, and the degree 2*step - 1 counts obey the IC table.
/// Degree-bound violations carry the offending degree as their window; for
/// monomials with negative degrees, step 0 agrees with the plain IC check.
pub fn satisfies_ic_shifted(m: &Monomial, weight: &HighestWeight, step: u32) -> Verdict {
    let cutoff = 2 * step as i64;
    let mut violations = Vec::new();
    let mut degrees: Vec<i64> = m
        .runs()
        .iter()
        .map(|&(v, _)| v.degree)
        .filter(|&d| d >= cutoff)
        .collect();
    degrees.dedup();
    for degree in degrees {
        violations.push(Violation {
            row: RowRef::DegreeBound,
            window: degree,
        });
    }
    let counts = m.counts_at_degree(cutoff - 1);
    for row in &IC_ROWS {
        if row.sum(&counts) > row.capacity_for(weight) {
            violations.push(Violation {
                row: RowRef::Ic(row.index),
                window: 0,
            });
        }
    }
    Verdict::from_violations(violations)
}

/// All monomials with degrees in [-depth, 2*step - 1] satisfying DC for the
/// level of the weight and the shifted initial conditions; exactly the
/// 2*step-shift of the unshifted admissible set at depth + 2*step.
pub fn generating_set_shifted(weight: &HighestWeight, step: u32, depth: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = crate::enumeration::enumerate_admissible(weight, depth + 2 * step)
        .into_iter()
        .map(|m| m.shift(2 * step as i64))
        .collect();
    out.sort_by(|m1, m2| {
        m1.total_degree()
            .cmp(&m2.total_degree())
            .then_with(|| m1.cmp(m2))
    });
    out
}

/// A finite head times the semi-infinite periodic tail
/// `m_Lambda^{+2t+2} m_Lambda^{+2t+4} ...` acting on the limit vacuum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiInfiniteMonomial {
    pub head: Monomial,
    pub tail_index: i64,
    pub weight: HighestWeight,
}

impl SemiInfiniteMonomial {
    pub fn new(head: Monomial, tail_index: i64, weight: HighestWeight) -> Self {
        SemiInfiniteMonomial {
            head,
            tail_index,
            weight,
        }
    }

    /// The head times the first `depth` tail blocks.
    pub fn truncate(&self, depth: u32) -> Monomial {
        let block = tail_block(&self.weight);
        let mut m = self.head.clone();
        for i in 1..=depth {
            m = m.multiply(&block.shift(2 * self.tail_index + 2 * i as i64));
        }
        m
    }

    /// Blocks needed so the truncation contains every window that touches the
    /// head, plus one full pure-tail period; deeper truncations only repeat
    /// window profiles already present (checked by tests, not assumed).
    pub fn stable_depth(&self) -> u32 {
        let overlap = match self.head.max_degree() {
            None => 0,
            Some(hmax) => {
                // Block d occupies degrees {2t+2d-2, 2t+2d-1}; it shares a
                // window with the head iff 2t+2d-2 <= hmax+1.
                let reach = hmax + 1 - 2 * self.tail_index;
                if reach < 0 {
                    0
                } else {
                    (reach / 2 + 1) as u32
                }
            }
        };
        overlap + 2
    }

    /// True iff every truncation satisfies DC for the level of the weight.
    pub fn satisfies_dc(&self) -> bool {
        let truncation = self.truncate(self.stable_depth());
        conditions::satisfies_dc(&truncation, self.weight.level()).is_satisfied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::{admissible, satisfies_dc, satisfies_ic};
    use crate::monomial::Variable;

    fn mono(text: &str) -> Monomial {
        text.parse().unwrap()
    }

    #[test]
    fn blocks_match_their_definitions() {
        assert_eq!(block_n(0), mono("2_(-1) 2(-1)"));
        assert_eq!(block_n(1), Monomial::one());
        assert_eq!(block_n(2), mono("3_(-1) 3(-1)"));
        assert_eq!(block_n(3), mono("4(-1)"));
        assert_eq!(block_n(4), mono("4_(-1)"));

        assert_eq!(block_m(0), block_n(0));
        assert_eq!(block_m(1), block_n(0).shift(-1));
        assert_eq!(block_m(2), mono("3_(-2) 3(-2) 3_(-1) 3(-1)"));
        assert_eq!(block_m(3), mono("4_(-2) 4(-1)"));
        assert_eq!(block_m(4), mono("4(-2) 4_(-1)"));

        for i in 0..5 {
            assert_eq!(
                block_m(i),
                block_n(block_pairing(i)).shift(-1).multiply(&block_n(i))
            );
            let m = block_m(i);
            assert!(m.min_degree().is_none_or(|d| d >= -2));
            assert!(m.max_degree().is_none_or(|d| d <= -1));
        }
    }

    #[test]
    fn tail_blocks_for_weights() {
        assert_eq!(
            tail_block(&HighestWeight::fundamental(0)),
            mono("2_(-1) 2(-1)")
        );
        assert_eq!(
            tail_block(&HighestWeight::fundamental(3)),
            mono("4_(-2) 4(-1)")
        );
        assert_eq!(
            tail_block(&HighestWeight::new(2, 0, 0, 0, 0)),
            mono("2_(-1)^2 2(-1)^2")
        );
    }

    #[test]
    fn embed_step_examples() {
        let l0 = HighestWeight::fundamental(0);
        let l3 = HighestWeight::fundamental(3);
        assert_eq!(embed_step(&Monomial::one(), &l0), mono("2_(1) 2(1)"));
        assert_eq!(embed_step(&Monomial::one(), &l3), mono("4_(0) 4(1)"));

        let m = mono("2(-1)");
        assert_eq!(embed_step(&m, &l0).len(), m.len() + tail_block(&l0).len());
    }

    #[test]
    fn shifted_ic_examples() {
        let l0 = HighestWeight::fundamental(0);
        assert!(satisfies_ic_shifted(&mono("2_(1) 2(1)"), &l0, 1).is_satisfied());

        let v = satisfies_ic_shifted(&mono("2(2)"), &l0, 1);
        assert!(!v.is_satisfied());
        assert_eq!(v.violations()[0].row, RowRef::DegreeBound);
        assert_eq!(v.violations()[0].window, 2);
    }

    #[test]
    fn shifted_ic_step_zero_is_plain_ic() {
        let universe = crate::test_support::universe(3);
        for weight in [HighestWeight::fundamental(0), HighestWeight::fundamental(2)] {
            for m in &universe {
                assert_eq!(
                    satisfies_ic_shifted(m, &weight, 0).is_satisfied(),
                    satisfies_ic(m, &weight).unwrap().is_satisfied()
                );
            }
        }
    }

    #[test]
    fn generating_set_step_zero_is_enumerate() {
        let weight = HighestWeight::fundamental(0);
        assert_eq!(
            generating_set_shifted(&weight, 0, 2),
            crate::enumeration::enumerate_admissible(&weight, 2)
        );
    }

    #[test]
    fn generating_set_matches_direct_filter() {
        // Independent route: brute force over the shifted degree window.
        let weight = HighestWeight::fundamental(0);
        let step = 1;
        let depth = 1;
        let vars: Vec<Variable> = (-(depth as i64)..=2 * step as i64 - 1)
            .flat_map(|d| Color::ALL.map(|c| Variable::new(c, d)))
            .collect();
        let mut direct = Vec::new();
        let mut stack: Vec<(Vec<Variable>, usize)> = vec![(Vec::new(), 0)];
        while let Some((prefix, start)) = stack.pop() {
            let m = Monomial::from_variables(prefix.iter().copied());
            if satisfies_dc(&m, weight.level()).is_satisfied()
                && satisfies_ic_shifted(&m, &weight, step).is_satisfied()
            {
                direct.push(m);
            }
            if prefix.len() < 2 * (depth as usize + 2 * step as usize) {
                for (i, v) in vars.iter().enumerate().skip(start) {
                    let mut grown = prefix.clone();
                    grown.push(*v);
                    stack.push((grown, i));
                }
            }
        }
        direct.sort_by(|m1, m2| {
            m1.total_degree()
                .cmp(&m2.total_degree())
                .then_with(|| m1.cmp(m2))
        });
        direct.dedup();
        assert_eq!(generating_set_shifted(&weight, step, depth), direct);
    }

    #[test]
    fn generating_set_cardinalities_match_across_steps() {
        // The shift is a bijection: step s at depth D corresponds to the
        // unshifted set at depth D + 2s.
        for weight in [HighestWeight::fundamental(0), HighestWeight::fundamental(4)] {
            let unshifted = crate::enumeration::enumerate_admissible(&weight, 3).len();
            assert_eq!(generating_set_shifted(&weight, 1, 1).len(), unshifted);
            let deeper = crate::enumeration::enumerate_admissible(&weight, 5).len();
            assert_eq!(generating_set_shifted(&weight, 1, 3).len(), deeper);
            assert_eq!(generating_set_shifted(&weight, 2, 1).len(), deeper);
        }
    }

    #[test]
    fn truncate_examples() {
        let s = SemiInfiniteMonomial::new(Monomial::one(), 0, HighestWeight::fundamental(0));
        assert_eq!(s.truncate(0), Monomial::one());
        assert_eq!(s.truncate(2), mono("2_(1) 2(1) 2_(3) 2(3)"));

        let head = mono("2(-1)");
        let s = SemiInfiniteMonomial::new(head.clone(), 0, HighestWeight::fundamental(0));
        for d in 0..4 {
            assert_eq!(
                s.truncate(d + 1).len(),
                s.truncate(d).len() + tail_block(&s.weight).len()
            );
        }
        assert_eq!(s.truncate(0), head);
    }

    #[test]
    fn pure_tails_satisfy_dc() {
        for weight in HighestWeight::up_to_level(3) {
            for t in [-1, 0, 2] {
                let s = SemiInfiniteMonomial::new(Monomial::one(), t, weight);
                assert!(s.satisfies_dc(), "pure tail for {weight}, t = {t}");
                for depth in 0..=4 {
                    assert!(
                        satisfies_dc(&s.truncate(depth), weight.level()).is_satisfied(),
                        "truncation {depth} for {weight}"
                    );
                }
            }
        }
    }

    #[test]
    fn head_colliding_with_tail_fails() {
        // One extra x_2 at the first tail block's degree doubles a_2 there.
        for t in [0, 1] {
            let head = Monomial::factor(Color::C2, 2 * t + 1);
            let s = SemiInfiniteMonomial::new(head, t, HighestWeight::fundamental(0));
            assert!(!s.satisfies_dc());
        }
    }

    #[test]
    fn truncation_equivalence_spot_checks() {
        let weight = HighestWeight::fundamental(3);
        let heads = [
            Monomial::one(),
            mono("4(-1)"),
            mono("4_(0) 4(1)"),
            mono("2_(-1) 2(-1)"),
            mono("3(5)"),
        ];
        for head in heads {
            let s = SemiInfiniteMonomial::new(head, 0, weight);
            let d0 = s.stable_depth();
            let expect = s.satisfies_dc();
            for d in d0..=d0 + 3 {
                assert_eq!(
                    satisfies_dc(&s.truncate(d), weight.level()).is_satisfied(),
                    expect,
                    "head {} depth {d}",
                    s.head
                );
            }
        }
    }

    #[test]
    fn embedding_property_for_fundamentals() {
        // admissible(m, L_i) iff DC(m * m_i^{+2}), over degrees [-2,-1].
        let vars: Vec<Variable> = (-2..=-1)
            .flat_map(|d| Color::ALL.map(|c| Variable::new(c, d)))
            .collect();
        let mut monomials = vec![Vec::new()];
        for _ in 0..3 {
            let grown: Vec<Vec<Variable>> = monomials
                .iter()
                .flat_map(|m: &Vec<Variable>| {
                    vars.iter().map(move |v| {
                        let mut g = m.clone();
                        g.push(*v);
                        g
                    })
                })
                .collect();
            monomials.extend(grown);
        }
        for i in 0..5 {
            let weight = HighestWeight::fundamental(i);
            let block = block_m(i).shift(2);
            for vs in &monomials {
                let m = Monomial::from_variables(vs.iter().copied());
                let lhs = admissible(&m, &weight).unwrap();
                let rhs = satisfies_dc(&m.multiply(&block), weight.level()).is_satisfied();
                assert_eq!(lhs, rhs, "Lambda_{i}, m = {m}");
            }
        }
    }

    #[test]
    fn chain_property_small() {
        // embed_step maps admissible monomials to DC and IC_2 satisfying
        // monomials, injectively.
        for weight in HighestWeight::up_to_level(2) {
            let admissible_set = crate::enumeration::enumerate_admissible(&weight, 2);
            let mut images = Vec::new();
            for m in &admissible_set {
                let image = embed_step(m, &weight);
                assert!(
                    satisfies_dc(&image, weight.level()).is_satisfied(),
                    "weight {weight}, m = {m}"
                );
                assert!(satisfies_ic_shifted(&image, &weight, 1).is_satisfied());
                images.push(image);
            }
            images.sort();
            let before = images.len();
            images.dedup();
            assert_eq!(
                images.len(),
                before,
                "embed_step not injective for {weight}"
            );
        }
    }

    #[test]
    fn block_n_is_maximal_admissible() {
        // n_i is the greatest degree -1 monomial of its length admissible for
        // Lambda_i.
        for i in 0..5 {
            let weight = HighestWeight::fundamental(i);
            let n = block_n(i);
            let len = n.len() as usize;
            let mut best: Option<Monomial> = None;
            let mut stack: Vec<(Vec<Color>, usize)> = vec![(Vec::new(), 0)];
            while let Some((prefix, start)) = stack.pop() {
                if prefix.len() == len {
                    let m = Monomial::from_variables(prefix.iter().map(|&c| Variable::new(c, -1)));
                    if admissible(&m, &weight).unwrap() && best.as_ref().is_none_or(|b| m > *b) {
                        best = Some(m);
                    }
                    continue;
                }
                for (ci, c) in Color::ALL.into_iter().enumerate().skip(start) {
                    let mut grown = prefix.clone();
                    grown.push(c);
                    stack.push((grown, ci));
                }
            }
            assert_eq!(best.unwrap(), n, "Lambda_{i}");
        }
    }

    #[test]
    fn semi_infinite_json_roundtrip() {
        let s = SemiInfiniteMonomial::new(mono("4(-1)"), 1, HighestWeight::fundamental(3));
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"head":"4(-1)","tail_index":1,"weight":[0,0,0,1,0]}"#
        );
        let back: SemiInfiniteMonomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
