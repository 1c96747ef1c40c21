//! Decision procedures for the eigenvalue 1.
//!
//! Each procedure returns a [`Verdict`] tagged with the results it relied on.
//! Closed forms are used wherever one applies; the remaining cases fall back
//! to direct evaluation of weights on torus elements and say so through
//! `fallback_used`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::elements::{
    gamma_graph, generator_tuples, has_eigenvalue_one_omega_n, singer_height, singer_index_element,
    to_torus_element, ElementError, SemisimpleElement,
};
use crate::reps::{g_effective_weight_set, twist_decompose, weight_set, ModuleKind};
use crate::tori::{singer_index, trivial_constituent, value_set, ToriError, TorusElement, TorusShape};
use crate::weights::{delta, gamma, is_radical, Weight, WeightError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("rank mismatch: weight has rank {weight}, other argument has rank {other}")]
    RankMismatch { weight: usize, other: usize },
    #[error("blocks of total size {total} exceed rank {rank}")]
    OversizedBlocks { total: usize, rank: usize },
    #[error("weight {omega} fits none of the three cases for element {element}")]
    Unclassified { omega: String, element: String },
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Tori(#[from] ToriError),
    #[error(transparent)]
    Element(#[from] ElementError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Undetermined,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Undetermined => "undetermined",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub decision: Decision,
    pub citations: Vec<String>,
    pub fallback_used: bool,
}

impl Verdict {
    fn closed(yes: bool, tags: &[&str]) -> Self {
        Self {
            decision: Decision::from_bool(yes),
            citations: tags.iter().map(|s| s.to_string()).collect(),
            fallback_used: false,
        }
    }

    fn fallback(decision: Decision, tags: &[&str]) -> Self {
        Self { decision, citations: tags.iter().map(|s| s.to_string()).collect(), fallback_used: true }
    }

    pub fn is_yes(&self) -> bool {
        self.decision == Decision::Yes
    }
}

/// `Some(i)` when `w = ω_i` with `i` odd and `i < n`.
fn odd_fundamental_below_n(w: &Weight) -> Option<usize> {
    w.as_fundamental().filter(|&i| i % 2 == 1 && i < w.rank())
}

fn same_rank(w: &Weight, other: usize) -> Result<(), CriteriaError> {
    if w.rank() == other {
        Ok(())
    } else {
        Err(CriteriaError::RankMismatch { weight: w.rank(), other })
    }
}

/// Does every abelian subgroup of Sp_{2n}(2) have a fixed point on `V_ω`?
pub fn abelian_all(w: &Weight) -> Result<Verdict, CriteriaError> {
    w.require_restricted()?;
    let yes = if w.last() == 0 {
        gamma(w) > 2 || is_radical(w)
    } else {
        delta(w) >= 2 * w.rank() as i64
    };
    Ok(Verdict::closed(yes, &["Thm-ee3", "Thm-ff3"]))
}

/// Does every element of Sp_{2n}(2) have eigenvalue 1 on `V_ω`?
pub fn unisingular(w: &Weight) -> Result<Verdict, CriteriaError> {
    w.require_restricted()?;
    let yes = if w.last() == 0 {
        odd_fundamental_below_n(w).is_none()
    } else {
        let si = singer_height(w.rank() as u32)?.value as i64;
        delta(w) >= w.rank() as i64 + si
    };
    Ok(Verdict::closed(yes, &["Thm-si1"]))
}

/// Whether eigenvalue 1 is guaranteed for every element of prime-power order.
pub fn prime_power_all(w: &Weight) -> Result<bool, CriteriaError> {
    w.require_restricted()?;
    Ok(match w.as_fundamental() {
        Some(i) => i % 2 == 0 && i != w.rank(),
        None => true,
    })
}

/// Whether a Singer cycle has eigenvalue 1 on the module of highest weight `w`.
pub fn singer_cycle_has_one(w: &Weight) -> Result<bool, CriteriaError> {
    let digits = twist_decompose(w)?;
    if let [(_, mu)] = digits.as_slice() {
        if let Some(i) = mu.as_fundamental() {
            return Ok(!(i == w.rank() || i % 2 == 1));
        }
    }
    Ok(true)
}

/// Does `V_ω|_T` contain the trivial character of `T`?
pub fn torus_trivial(w: &Weight, shape: &TorusShape) -> Result<Verdict, CriteriaError> {
    w.require_restricted()?;
    same_rank(w, shape.rank())?;
    let n = w.rank() as i64;
    if w.last() == 1 {
        return Ok(Verdict::closed(delta(w) >= n + singer_index(shape) as i64, &["Thm-s10"]));
    }
    if is_radical(w) {
        return Ok(Verdict::closed(true, &["radical"]));
    }
    if shape.is_t_sharp() {
        return Ok(Verdict::closed(gamma(w) > 2, &["Lem-t33"]));
    }
    if w.as_fundamental().is_none() {
        return Ok(Verdict::closed(true, &["Lem-cc2"]));
    }
    let ws = weight_set(w, ModuleKind::Irreducible2)?;
    Ok(Verdict::fallback(Decision::from_bool(trivial_constituent(&ws, shape)?), &["Lem-016"]))
}

/// Does `ρ_ω(g)` have eigenvalue 1 for the element `t` of the canonical torus?
/// Values of the tensor factors are combined additively in `Z_L`.
pub fn has_one_at(w: &Weight, t: &TorusElement) -> Result<bool, CriteriaError> {
    same_rank(w, t.shape().rank())?;
    let l = t.shape().exponent_lcm()?;
    let mut acc: BTreeSet<u64> = BTreeSet::from([0]);
    for (_, mu) in twist_decompose(w)? {
        let vals = value_set(&*weight_set(&mu, ModuleKind::Irreducible2)?, t)?;
        let mut next = BTreeSet::new();
        for a in &acc {
            for v in &vals {
                next.insert((a + v) % l);
            }
        }
        acc = next;
    }
    Ok(acc.contains(&0))
}

/// `has_one_at` for every generator choice of `g`: `Yes` if all choices have
/// eigenvalue 1, `No` if none does, `Undetermined` if they disagree.
pub fn has_one_all_generators(w: &Weight, g: &SemisimpleElement) -> Result<Decision, CriteriaError> {
    same_rank(w, g.rank())?;
    let (mut seen_yes, mut seen_no) = (false, false);
    for u in generator_tuples(g) {
        if has_one_at(w, &to_torus_element(g, Some(&u))?)? {
            seen_yes = true;
        } else {
            seen_no = true;
        }
    }
    Ok(match (seen_yes, seen_no) {
        (true, false) => Decision::Yes,
        (false, true) => Decision::No,
        _ => Decision::Undetermined,
    })
}

/// Does `ρ_ω(g)` have eigenvalue 1 for the semisimple element `g`?
pub fn element_has_one(w: &Weight, g: &SemisimpleElement) -> Result<Verdict, CriteriaError> {
    w.require_restricted()?;
    same_rank(w, g.rank())?;
    let n = w.rank() as i64;
    if w.last() == 1 {
        let si = singer_index_element(g) as i64;
        return Ok(Verdict::closed(delta(w) >= n + si, &["Thm-fr1"]));
    }
    if is_radical(w) {
        return Ok(Verdict::closed(true, &["radical"]));
    }
    if odd_fundamental_below_n(w).is_none() {
        return Ok(Verdict::closed(true, &["Lem-cc2"]));
    }
    Ok(Verdict::fallback(has_one_all_generators(w, g)?, &["direct"]))
}

/// Blocks `(n_1, …, n_k)` tile the first `Σ n_i` ε-coordinates. True when
/// every weight of the module vanishes on all coordinates of some block.
pub fn th7_blocks(w: &Weight, block_sizes: &[usize], kind: ModuleKind) -> Result<bool, CriteriaError> {
    let total: usize = block_sizes.iter().sum();
    if total > w.rank() || block_sizes.contains(&0) {
        return Err(CriteriaError::OversizedBlocks { total, rank: w.rank() });
    }
    let ws = weight_set(w, kind)?;
    let mut ranges = Vec::with_capacity(block_sizes.len());
    let mut pos = 0;
    for &s in block_sizes {
        ranges.push(pos..pos + s);
        pos += s;
    }
    Ok(ws.all(|mu| ranges.iter().any(|r| mu.coords()[r.clone()].iter().all(|&c| c == 0))))
}

/// If `ρ_{ω_1}(g)` and `ρ_{ω_n}(g)` both have eigenvalue 1, so does every
/// irreducible representation of the algebraic group at `g`.
pub fn p88_guarantee(g: &SemisimpleElement) -> Result<bool, CriteriaError> {
    let n = g.rank();
    Ok(element_has_one(&Weight::fundamental(n, 1)?, g)?.is_yes() && has_eigenvalue_one_omega_n(g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum P49Class {
    HasOne { citations: Vec<String> },
    /// `ω = 2^j·ω_i` with `i` odd or `i = n`.
    FundamentalTwistException { i: usize, j: u32 },
    /// `ω = ω' + 2^k·ω_n` with `0 ≠ ω'` free of `ω_n`; `d = δ(Σ ν_i)` for the
    /// binary digits `ν_i` of `ω'`, to be compared against `Si(g)`.
    TensorCase { omega_prime: Weight, k: u32, d: i64, singer_index: usize },
}

/// Sorts `(ω, g)` into one of the three cases: eigenvalue 1 established, a
/// twisted exceptional fundamental weight, or a twisted `ω_n` tensor case.
/// The latter two are "not guaranteed" statuses, not proofs of absence.
pub fn p49_classify(w: &Weight, g: &SemisimpleElement) -> Result<P49Class, CriteriaError> {
    w.require_dominant()?;
    same_rank(w, g.rank())?;
    let n = w.rank();
    let has_one = |tags: &[&str]| P49Class::HasOne { citations: tags.iter().map(|s| s.to_string()).collect() };
    if w.is_zero() {
        return Ok(has_one(&["trivial"]));
    }
    if g_effective_weight_set(w)?.contains_zero() {
        return Ok(has_one(&["zero-weight"]));
    }
    let digits = twist_decompose(w)?;
    if let [(_, mu)] = digits.as_slice() {
        if element_has_one(mu, g)?.is_yes() {
            return Ok(has_one(&["Prop-p49", "twist"]));
        }
    }
    if p88_guarantee(g)? {
        return Ok(has_one(&["Prop-p88"]));
    }
    if has_one_all_generators(w, g)? == Decision::Yes {
        return Ok(P49Class::HasOne { citations: vec!["direct".into()] });
    }
    if let [(j, mu)] = digits.as_slice() {
        if let Some(i) = mu.as_fundamental() {
            if i % 2 == 1 || i == n {
                return Ok(P49Class::FundamentalTwistException { i, j: *j });
            }
        }
    }
    let an = w.last();
    if an > 0 && an & (an - 1) == 0 {
        let k = an.trailing_zeros();
        let mut coeffs = w.coeffs().to_vec();
        coeffs[n - 1] = 0;
        let omega_prime = Weight::new(coeffs)?;
        if !omega_prime.is_zero() {
            let nu_sum = twist_decompose(&omega_prime)?
                .into_iter()
                .try_fold(Weight::zero(n), |acc, (_, nu)| acc.checked_add(&nu))?;
            let si = gamma_graph(g).singular.len();
            return Ok(P49Class::TensorCase { omega_prime, k, d: delta(&nu_sum), singer_index: si });
        }
    }
    Err(CriteriaError::Unclassified { omega: w.to_string(), element: g.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.iter().copied()).unwrap()
    }

    fn el(s: &str) -> SemisimpleElement {
        s.parse().unwrap()
    }

    fn shape(s: &str) -> TorusShape {
        s.parse().unwrap()
    }

    #[test]
    fn abelian_examples() {
        assert!(abelian_all(&w(&[0, 1, 0])).unwrap().is_yes());
        assert!(!abelian_all(&w(&[1, 0, 0])).unwrap().is_yes());
        assert!(abelian_all(&w(&[1, 1, 1])).unwrap().is_yes());
        assert!(abelian_all(&w(&[2, 0, 0])).is_err());
    }

    #[test]
    fn verdict_json() {
        let v = element_has_one(&w(&[0, 1, 1]), &el("1:3:-;2:5:-")).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"decision":"yes","citations":["Thm-fr1"],"fallback_used":false}"#
        );
    }

    #[test]
    fn unisingular_examples() {
        for n in 1..=6 {
            assert!(!unisingular(&Weight::fundamental(n, n).unwrap()).unwrap().is_yes());
        }
        assert!(!unisingular(&w(&[1, 0])).unwrap().is_yes());
        assert!(unisingular(&w(&[1, 1])).unwrap().is_yes());
        assert!(unisingular(&w(&[0, 1, 1])).unwrap().is_yes());
        assert!(unisingular(&w(&[0, 1, 0])).unwrap().is_yes());
    }

    #[test]
    fn prime_power_examples() {
        assert!(prime_power_all(&w(&[0, 1, 0])).unwrap());
        assert!(!prime_power_all(&w(&[0, 0, 1])).unwrap());
        assert!(!prime_power_all(&w(&[1, 0, 0])).unwrap());
        assert!(prime_power_all(&w(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn singer_cycle_examples() {
        assert!(!singer_cycle_has_one(&w(&[1, 0])).unwrap());
        assert!(singer_cycle_has_one(&w(&[0, 2, 0])).unwrap());
        assert!(singer_cycle_has_one(&w(&[1, 1])).unwrap());
        assert!(!singer_cycle_has_one(&w(&[0, 4])).unwrap());
        assert!(singer_cycle_has_one(&w(&[0, 0])).unwrap());
    }

    #[test]
    fn torus_trivial_examples() {
        let v = torus_trivial(&w(&[0, 1]), &shape("-2")).unwrap();
        assert_eq!((v.decision, v.citations.clone()), (Decision::No, vec!["Thm-s10".to_string()]));
        assert!(torus_trivial(&w(&[0, 1]), &shape("2")).unwrap().is_yes());
        // ε_2 vanishes on both factors of the (−1,+1) torus
        let v = torus_trivial(&w(&[1, 0]), &shape("-1,1")).unwrap();
        assert!(v.fallback_used);
        assert_eq!(v.decision, Decision::Yes);
        let v = torus_trivial(&w(&[1, 0]), &shape("-1,-1")).unwrap();
        assert_eq!((v.decision, v.fallback_used), (Decision::No, false));
        assert!(torus_trivial(&w(&[1, 0]), &shape("-3")).is_err());
    }

    #[test]
    fn element_examples() {
        let g = el("1:3:-;2:5:-");
        assert!(element_has_one(&w(&[0, 1, 1]), &g).unwrap().is_yes());
        assert_eq!(element_has_one(&w(&[1, 0, 1]), &g).unwrap().decision, Decision::No);
        assert!(element_has_one(&w(&[0, 1, 0]), &g).unwrap().is_yes());
        let v = element_has_one(&w(&[1, 0, 0]), &g).unwrap();
        assert!(v.fallback_used);
        assert_eq!(v.decision, Decision::No);
        let v = element_has_one(&w(&[1, 0, 0]), &el("3:7:+")).unwrap();
        assert_eq!(v.decision, Decision::No);
        assert!(element_has_one(&w(&[1, 0]), &g).is_err());
    }

    #[test]
    fn th7_examples() {
        let k = ModuleKind::Irreducible2;
        assert!(th7_blocks(&w(&[1, 0, 0]), &[1, 1], k).unwrap());
        assert!(!th7_blocks(&w(&[1, 1, 0]), &[1, 1, 1], k).unwrap());
        assert!(th7_blocks(&w(&[0, 0, 0]), &[1, 2], k).unwrap());
        assert!(th7_blocks(&w(&[0, 0, 0]), &[2, 2], k).is_err());
    }

    #[test]
    fn p88_examples() {
        assert!(p88_guarantee(&SemisimpleElement::identity(3).unwrap()).unwrap());
        assert!(!p88_guarantee(&SemisimpleElement::singer_cycle(3).unwrap()).unwrap());
        assert!(!p88_guarantee(&el("3:7:+")).unwrap());
    }

    #[test]
    fn p49_examples() {
        let g = el("1:3:-;2:5:-");
        assert!(matches!(p49_classify(&w(&[0, 2, 0]), &g).unwrap(), P49Class::HasOne { .. }));
        assert_eq!(
            p49_classify(&w(&[4, 0, 0]), &g).unwrap(),
            P49Class::FundamentalTwistException { i: 1, j: 2 }
        );
        assert_eq!(
            p49_classify(&w(&[1, 0, 2]), &g).unwrap(),
            P49Class::TensorCase { omega_prime: w(&[1, 0, 0]), k: 1, d: 1, singer_index: 2 }
        );
        assert_eq!(
            p49_classify(&w(&[0, 0, 0]), &g).unwrap(),
            P49Class::HasOne { citations: vec!["trivial".into()] }
        );
    }
}
