//! Weight sets of Weyl modules and of the 2-modular irreducible modules of
//! Sp_{2n}, plus Frobenius-twist bookkeeping for arbitrary dominant weights.
//!
//! Only sets are computed. Eigenvalues of a semisimple element on a module
//! are the values of its weights, so multiplicities never matter here.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::weights::{
    delta, dominant_below, dominant_eps, is_radical, EpsWeight, Weight, WeightError, WeightSet,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    /// The irreducible module `V_ω` in characteristic 2; needs 2-restricted ω.
    Irreducible2,
    /// The Weyl module; its weights form the full saturated set.
    Weyl,
}

impl FromStr for ModuleKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "irr2" | "irreducible2" => Ok(ModuleKind::Irreducible2),
            "weyl" => Ok(ModuleKind::Weyl),
            other => Err(format!("unknown module kind {other:?} (expected irr2 or weyl)")),
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleKind::Irreducible2 => "irr2",
            ModuleKind::Weyl => "weyl",
        })
    }
}

fn check_input(w: &Weight, kind: ModuleKind) -> Result<(), WeightError> {
    match kind {
        ModuleKind::Irreducible2 => w.require_restricted(),
        ModuleKind::Weyl => w.require_dominant(),
    }
}

/// Union of the Weyl orbits of all dominant weights below `w`.
fn saturated(w: &Weight) -> Result<WeightSet, WeightError> {
    WeightSet::from_dominant(w.rank(), dominant_below(w)?)
}

/// Weight set without consulting the memo table.
pub fn weight_set_uncached(w: &Weight, kind: ModuleKind) -> Result<WeightSet, WeightError> {
    check_input(w, kind)?;
    if kind == ModuleKind::Weyl || w.last() == 0 {
        return saturated(w);
    }
    // a_n = 1: V_ω ≅ V_{ω−ω_n} ⊗ V_{ω_n}, and V_{ω_n} has the single orbit of ω_n
    let n = w.rank();
    let rest = w.checked_sub(&Weight::fundamental(n, n)?)?;
    let omega_n = WeightSet::from_dominant(n, [Weight::fundamental(n, n)?])?;
    minkowski_sum(&saturated(&rest)?, &omega_n)
}

type Memo = RwLock<HashMap<(Weight, ModuleKind), Arc<WeightSet>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The weight set `Ω(V)` of the module of highest weight `w`, memoized.
pub fn weight_set(w: &Weight, kind: ModuleKind) -> Result<Arc<WeightSet>, WeightError> {
    let key = (w.clone(), kind);
    if let Some(hit) = memo().read().expect("memo poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let computed = Arc::new(weight_set_uncached(w, kind)?);
    let mut table = memo().write().expect("memo poisoned");
    // first writer wins so every caller sees one published value
    Ok(Arc::clone(table.entry(key).or_insert(computed)))
}

/// `{a + b : a ∈ A, b ∈ B}`.
pub fn minkowski_sum(a: &WeightSet, b: &WeightSet) -> Result<WeightSet, WeightError> {
    if a.rank() != b.rank() {
        return Err(WeightError::RankMismatch { left: a.rank(), right: b.rank() });
    }
    let rank = a.rank();
    if let (Some(ra), Some(rb)) = (a.closed_reps(), b.closed_reps()) {
        // A + B = W·(D_A + B) when both are Weyl-closed
        let cost_a = ra.len() as u64 * b.len();
        let cost_b = rb.len() as u64 * a.len();
        let (reps, other) = if cost_a <= cost_b { (ra, b) } else { (rb, a) };
        let mut out: BTreeSet<EpsWeight> = BTreeSet::new();
        for d in reps {
            other.for_each(|m| {
                out.insert(dominant_eps(&d.add_unchecked(m)));
            });
        }
        return Ok(WeightSet::closed_from_reps(rank, out));
    }
    let mut out = BTreeSet::new();
    a.for_each(|x| {
        b.for_each(|y| {
            out.insert(x.add_unchecked(y));
        })
    });
    WeightSet::explicit(rank, out)
}

/// Closed-form test for `0 ∈ Ω(V)`.
pub fn has_zero_weight(w: &Weight, kind: ModuleKind) -> Result<bool, WeightError> {
    check_input(w, kind)?;
    if kind == ModuleKind::Weyl || w.last() == 0 {
        return Ok(is_radical(w));
    }
    let d = delta(w);
    Ok(d % 2 == 0 && d >= 2 * w.rank() as i64)
}

/// Binary expansion `ω = Σ 2^level·μ_level` with 2-restricted digits; levels
/// with a zero digit are omitted.
pub fn twist_decompose(w: &Weight) -> Result<Vec<(u32, Weight)>, WeightError> {
    w.require_dominant()?;
    let mut out = Vec::new();
    let mut rest: Vec<i64> = w.coeffs().to_vec();
    let mut level = 0u32;
    while rest.iter().any(|&a| a != 0) {
        let digit = Weight::new(rest.iter().map(|a| a & 1))?;
        if !digit.is_zero() {
            out.push((level, digit));
        }
        rest.iter_mut().for_each(|a| *a >>= 1);
        level += 1;
    }
    Ok(out)
}

/// Weights whose values give the eigenvalues of `ρ_ω(g)` for semisimple
/// `g ∈ Sp_{2n}(2)`: twists act trivially on the finite group, so the module
/// restricts to the tensor product of its restricted digits.
pub fn g_effective_weight_set(w: &Weight) -> Result<WeightSet, WeightError> {
    let mut acc = WeightSet::singleton_zero(w.rank());
    for (_, mu) in twist_decompose(w)? {
        acc = minkowski_sum(&acc, &*weight_set(&mu, ModuleKind::Irreducible2)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{restricted_weights, EpsWeight};

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.iter().copied()).unwrap()
    }

    fn e(v: &[i64]) -> EpsWeight {
        EpsWeight::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn irreducible_examples() {
        let s = weight_set(&w(&[0, 1]), ModuleKind::Irreducible2).unwrap();
        assert_eq!(s.len(), 4);
        assert!(!s.contains_zero());
        let s = weight_set(&w(&[1, 1]), ModuleKind::Irreducible2).unwrap();
        let mut expected = Vec::new();
        for (x, y) in [(2, 1), (1, 2)] {
            for sx in [-1, 1] {
                for sy in [-1, 1] {
                    expected.push(e(&[sx * x, sy * y]));
                }
            }
        }
        for v in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
            expected.push(e(&v));
        }
        expected.sort();
        assert_eq!(s.to_sorted_vec(), expected);
        let s = weight_set(&w(&[0, 1]), ModuleKind::Weyl).unwrap();
        assert_eq!(s.len(), 5);
        assert!(s.contains_zero());
    }

    #[test]
    fn minkowski_examples() {
        let a = WeightSet::from_dominant(2, [w(&[1, 0])]).unwrap();
        let b = WeightSet::from_dominant(2, [w(&[0, 1])]).unwrap();
        let zero = WeightSet::singleton_zero(2);
        assert_eq!(minkowski_sum(&zero, &a).unwrap(), a);
        let ab = minkowski_sum(&a, &b).unwrap();
        assert_eq!(ab.len(), 12);
        assert_eq!(ab, minkowski_sum(&b, &a).unwrap());
        let explicit_a = WeightSet::explicit(2, a.to_sorted_vec()).unwrap();
        assert_eq!(minkowski_sum(&explicit_a, &b).unwrap(), ab);
        assert!(minkowski_sum(&a, &WeightSet::singleton_zero(3)).is_err());
    }

    #[test]
    fn zero_weight_examples() {
        let k = ModuleKind::Irreducible2;
        assert!(has_zero_weight(&w(&[1, 1, 1]), k).unwrap());
        assert!(!has_zero_weight(&w(&[0, 0, 1]), k).unwrap());
        assert!(has_zero_weight(&w(&[0, 1, 0]), k).unwrap());
        assert!(has_zero_weight(&w(&[2, 0]), k).is_err());
        assert!(has_zero_weight(&w(&[2, 0]), ModuleKind::Weyl).unwrap());
    }

    #[test]
    fn zero_weight_closed_form_matches_sets() {
        for n in 1..=4 {
            for om in restricted_weights(n) {
                for kind in [ModuleKind::Irreducible2, ModuleKind::Weyl] {
                    let set = weight_set(&om, kind).unwrap();
                    assert_eq!(has_zero_weight(&om, kind).unwrap(), set.contains_zero(), "{om} {kind}");
                }
            }
        }
    }

    #[test]
    fn twist_examples() {
        assert_eq!(twist_decompose(&w(&[2, 0])).unwrap(), vec![(1, w(&[1, 0]))]);
        assert_eq!(
            twist_decompose(&w(&[3, 1])).unwrap(),
            vec![(0, w(&[1, 1])), (1, w(&[1, 0]))]
        );
        assert_eq!(twist_decompose(&w(&[1, 0])).unwrap(), vec![(0, w(&[1, 0]))]);
        assert!(twist_decompose(&w(&[0, 0])).unwrap().is_empty());
    }

    #[test]
    fn effective_examples() {
        let a = g_effective_weight_set(&w(&[0, 2])).unwrap();
        assert_eq!(&a, weight_set(&w(&[0, 1]), ModuleKind::Irreducible2).unwrap().as_ref());
        assert_eq!(g_effective_weight_set(&w(&[1, 1])).unwrap().len(), 12);
        assert_eq!(g_effective_weight_set(&w(&[0, 0])).unwrap().to_sorted_vec(), vec![e(&[0, 0])]);
    }

    #[test]
    fn memo_agrees_with_uncached() {
        for om in restricted_weights(3) {
            let cached = weight_set(&om, ModuleKind::Irreducible2).unwrap();
            assert_eq!(cached.as_ref(), &weight_set_uncached(&om, ModuleKind::Irreducible2).unwrap());
        }
    }
}
