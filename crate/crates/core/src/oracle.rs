//! Brute-force reference implementations.
//!
//! These work straight from definitions, with no closed forms. They are
//! slow and only meant for the small ranks the verification suites cover.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::branching::eps_restrict;
use crate::tori::{value_set, TorusElement};
use crate::weights::{dominant_representative, from_eps, simple_root, to_eps, EpsWeight, Weight, WeightSet};

/// Positive roots of C_n in ε-coordinates: `ε_i ± ε_j` (`i < j`) and `2ε_i`.
pub fn positive_roots(n: usize) -> Vec<EpsWeight> {
    let unit = |i: usize| EpsWeight::unit(n, i + 1).expect("index in range");
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(unit(i).checked_add(&unit(j)).expect("same rank"));
            out.push(unit(i).checked_sub(&unit(j)).expect("same rank"));
        }
        out.push(unit(i).checked_add(&unit(i)).expect("same rank"));
    }
    out
}

/// Every dominant weight reachable from `hi` by subtracting positive roots
/// while staying dominant. Between two dominant weights `μ ⪯ λ` there is
/// always such a chain, so this is exactly the set of dominant `μ ⪯ hi`.
pub fn dominant_chain_closure(hi: &Weight) -> BTreeSet<Weight> {
    let roots = positive_roots(hi.rank());
    let start = to_eps(hi);
    let mut seen: HashSet<EpsWeight> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for r in &roots {
            let y = x.checked_sub(r).expect("same rank");
            if y.is_dominant() && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.iter().map(from_eps).collect()
}

/// Dominance of dominant weights by dominant-chain search.
pub fn dominates_dominant_bfs(hi: &Weight, lo: &Weight) -> bool {
    dominant_chain_closure(hi).contains(lo)
}

/// `2⟨x, ρ⟩` in ε-coordinates; every simple root has value 2.
fn rho_height(x: &EpsWeight) -> i64 {
    let n = x.rank() as i64;
    x.coords().iter().enumerate().map(|(i, c)| (2 * n - 2 * i as i64 - 1) * c).sum()
}

/// All `hi − Σ k_i α_i` (`k_i >= 0`) with ρ-height at least `floor`.
pub fn simple_root_descendants(hi: &EpsWeight, floor: i64) -> HashSet<EpsWeight> {
    let n = hi.rank();
    let roots: Vec<EpsWeight> = (1..=n).map(|i| simple_root(n, i).expect("index in range")).collect();
    let mut seen: HashSet<EpsWeight> = HashSet::new();
    if rho_height(hi) < floor {
        return seen;
    }
    seen.insert(hi.clone());
    let mut queue = VecDeque::from([hi.clone()]);
    while let Some(x) = queue.pop_front() {
        for r in &roots {
            let y = x.checked_sub(r).expect("same rank");
            if rho_height(&y) >= floor && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Dominance for arbitrary weights by breadth-first simple-root subtraction.
pub fn dominates_simple_bfs(hi: &Weight, lo: &Weight) -> bool {
    let lo_eps = to_eps(lo);
    simple_root_descendants(&to_eps(hi), rho_height(&lo_eps)).contains(&lo_eps)
}

/// The orbit of `e` under the simple reflections: adjacent transpositions
/// and the sign change of the last coordinate.
pub fn reflection_orbit(e: &EpsWeight) -> BTreeSet<EpsWeight> {
    let n = e.rank();
    let mut seen = BTreeSet::from([e.clone()]);
    let mut queue = VecDeque::from([e.clone()]);
    while let Some(x) = queue.pop_front() {
        let c = x.coords();
        let mut images = Vec::with_capacity(n);
        for i in 0..n.saturating_sub(1) {
            let mut v = c.to_vec();
            v.swap(i, i + 1);
            images.push(v);
        }
        let mut v = c.to_vec();
        v[n - 1] = -v[n - 1];
        images.push(v);
        for v in images {
            let y = EpsWeight::new(v).expect("rank > 0");
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Dominant representatives of a weight set, computed by expansion.
pub fn dominant_reps(ws: &WeightSet) -> BTreeSet<Weight> {
    let mut out = BTreeSet::new();
    ws.for_each(|e| {
        out.insert(dominant_representative(e));
    });
    out
}

/// `{a + b}` by explicit double loop.
pub fn explicit_sum(a: &WeightSet, b: &WeightSet) -> BTreeSet<EpsWeight> {
    let av = a.to_sorted_vec();
    let bv = b.to_sorted_vec();
    let mut out = BTreeSet::new();
    for x in &av {
        for y in &bv {
            out.insert(x.checked_add(y).expect("same rank"));
        }
    }
    out
}

/// The 0/1 vectors of length `len` with `k` ones (the weights of `Λ^k`).
pub fn exterior_weights(len: usize, k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for mask in 0u64..1 << len {
        if mask.count_ones() as usize == k {
            out.push((0..len).map(|i| ((mask >> i) & 1) as i64).collect());
        }
    }
    out
}

/// Dominant weights of `Λ^k` of the natural SL_{2n}-module restricted to Sp_{2n}.
pub fn restricted_exterior_dominants(n: usize, k: usize) -> BTreeSet<Weight> {
    exterior_weights(2 * n, k)
        .iter()
        .map(|v| dominant_representative(&eps_restrict(v).expect("even length")))
        .collect()
}

/// Values `μ(t)` of the weights of `Λ^k` restricted to Sp_{2n}, at `t`.
pub fn exterior_values_at(k: usize, t: &TorusElement) -> BTreeSet<u64> {
    let n = t.shape().rank();
    let restricted: Vec<EpsWeight> =
        exterior_weights(2 * n, k).iter().map(|v| eps_restrict(v).expect("even length")).collect();
    let ws = WeightSet::explicit(n, restricted).expect("rank matches");
    value_set(&ws, t).expect("rank matches")
}

/// Number of signed partitions of each `m <= max`: coefficients of
/// `Π_k (1 − x^k)^{−2}`.
pub fn signed_partition_counts(max: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; max + 1];
    coeffs[0] = 1;
    for k in 1..=max {
        // multiply by 1/(1 − x^k) twice
        for _ in 0..2 {
            for m in k..=max {
                coeffs[m] += coeffs[m - k];
            }
        }
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{dominant_up_to, dominates, weyl_orbit};

    #[test]
    fn root_count() {
        for n in 1..=5 {
            assert_eq!(positive_roots(n).len(), n * n);
        }
    }

    #[test]
    fn bfs_oracles_agree_on_small_pairs() {
        let ws = dominant_up_to(2, 6);
        for hi in &ws {
            for lo in &ws {
                assert_eq!(dominates_dominant_bfs(hi, lo), dominates_simple_bfs(hi, lo), "{hi} {lo}");
            }
        }
        let w = |v: &[i64]| Weight::new(v.iter().copied()).unwrap();
        assert!(!dominates_simple_bfs(&w(&[0, 1]), &w(&[1, 0])));
        assert!(dominates_simple_bfs(&w(&[0, 0, 1]), &w(&[1, 0, 0])));
        assert!(dominates(&w(&[0, 0, 1]), &w(&[1, 0, 0])).unwrap());
    }

    #[test]
    fn reflection_orbit_matches_signed_permutations() {
        for v in [[0, 0, 0], [1, 0, 0], [2, 1, 0], [2, -1, 2], [3, 2, 1]] {
            let e = EpsWeight::new(v).unwrap();
            let expected: BTreeSet<EpsWeight> = weyl_orbit(&e).to_sorted_vec().into_iter().collect();
            assert_eq!(reflection_orbit(&e), expected);
        }
    }

    #[test]
    fn signed_partition_series() {
        // 1, 2, 5, 10, 20, 36, ...
        assert_eq!(signed_partition_counts(6), vec![1, 2, 5, 10, 20, 36, 65]);
    }
}
