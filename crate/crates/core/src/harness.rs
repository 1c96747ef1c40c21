//! Verification suites: every closed-form criterion in the crate is run
//! against a brute-force computation over all admissible inputs up to a
//! rank bound, and mismatches are collected into a [`SuiteReport`].

use std::collections::{BTreeSet, HashMap};
use std::fmt::Debug;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::arith::{gcd, is_prime_power, multiplicative_order, pow_mod, DEFAULT_TRIAL_DIVISION_BOUND};
use crate::branching::{
    eps_restrict, exterior_factors, real_by_order_sl, real_by_order_su, real_element_verdict, restrict_to_c,
    LinearWeight, RealOutcome,
};
use crate::criteria::{
    abelian_all, element_has_one, p88_guarantee, prime_power_all, singer_cycle_has_one, th7_blocks, torus_trivial,
    unisingular, Decision,
};
use crate::elements::{
    enumerate_elements, generator_tuples, has_eigenvalue_one_omega_n, max_singer_element,
    omega_n_eigenvalue_orders, singer_height, singer_height_fast, singer_height_oracle, singer_index_element,
    to_torus_element, SemisimpleElement,
};
use crate::oracle::{
    dominant_chain_closure, explicit_sum, exterior_values_at, exterior_weights,
    reflection_orbit, restricted_exterior_dominants, signed_partition_counts, simple_root_descendants,
};
use crate::reps::{has_zero_weight, twist_decompose, weight_set, weight_set_uncached, ModuleKind};
use crate::tori::{
    enumerate_shapes, residue_vectors, sweep_limit_from_env, torus_order, trivial_constituent,
    unisingular_on_torus_limited, value_set, TorusElement, TorusShape,
};
use crate::weights::{
    delta, dominant_below, dominant_up_to, dominates, from_eps, gamma, is_radical, restricted_weights, to_eps,
    weyl_orbit, EpsWeight, Weight, WeightSet,
};

/// Suite names with their default rank bound, in the order `all` runs them.
pub const SUITES: &[(&str, usize)] = &[
    ("dominance", 5),
    ("si", 24),
    ("m22", 6),
    ("ee3", 4),
    ("s10", 4),
    ("si1", 4),
    ("th2", 6),
    ("ff2", 4),
    ("fr1", 4),
    ("th7", 5),
    ("branching", 6),
    ("counterexamples", 3),
];

/// The value of Si(12) that the exhaustive search is checked against.
pub const PRINTED_SI_12: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest torus order a unisingularity sweep may visit.
    pub sweep_limit: u64,
    /// Largest element order enumerated by the element suites.
    pub max_element_order: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self { sweep_limit: sweep_limit_from_env(), max_element_order: 10_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub fast: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_n: usize,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub pass: bool,
    /// Observations that are not failures, such as comparisons with
    /// published values.
    #[serde(skip)]
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Default)]
struct Recorder {
    cases: u64,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Recorder {
    fn compare<T: PartialEq + Debug>(&mut self, input: impl FnOnce() -> String, fast: T, oracle: T) {
        self.cases += 1;
        if fast != oracle {
            self.failures.push(Failure { input: input(), fast: format!("{fast:?}"), oracle: format!("{oracle:?}") });
        }
    }

    fn check(&mut self, input: impl FnOnce() -> String, ok: bool) {
        self.compare(input, ok, true);
    }

    fn error(&mut self, input: String, err: impl std::fmt::Display) {
        self.cases += 1;
        self.failures.push(Failure { input, fast: "error".into(), oracle: err.to_string() });
    }
}

pub fn default_max_n(name: &str) -> Option<usize> {
    SUITES.iter().find(|(s, _)| *s == name).map(|&(_, n)| n)
}

/// Runs one named suite, or every suite for `"all"`. `max_n = None` uses
/// each suite's default bound.
pub fn run_suite(name: &str, max_n: Option<usize>, limits: &Limits) -> Result<SuiteReport, HarnessError> {
    if name == "all" {
        let start = Instant::now();
        let mut merged = Recorder::default();
        for &(suite, default) in SUITES {
            let r = run_suite(suite, Some(max_n.unwrap_or(default)), limits)?;
            merged.cases += r.cases;
            merged.failures.extend(r.failures.into_iter().map(|f| Failure { input: format!("{suite}: {}", f.input), ..f }));
            merged.notes.extend(r.notes.into_iter().map(|s| format!("{suite}: {s}")));
        }
        return Ok(finish("all", max_n.unwrap_or(0), merged, start));
    }
    let default = default_max_n(name).ok_or_else(|| HarnessError::UnknownSuite(name.to_string()))?;
    let n = max_n.unwrap_or(default);
    let start = Instant::now();
    let mut rec = Recorder::default();
    match name {
        "dominance" => suite_dominance(n, &mut rec),
        "si" => suite_si(n, &mut rec),
        "m22" => suite_m22(n, &mut rec),
        "ee3" => suite_ee3(n, &mut rec),
        "s10" => suite_s10(n, &mut rec),
        "si1" => suite_si1(n, limits, &mut rec),
        "th2" => suite_th2(n, &mut rec),
        "ff2" => suite_ff2(n, limits, &mut rec),
        "fr1" => suite_fr1(n, limits, &mut rec),
        "th7" => suite_th7(n, &mut rec),
        "branching" => suite_branching(n, &mut rec),
        "counterexamples" => suite_counterexamples(&mut rec),
        _ => unreachable!("name checked against SUITES"),
    }
    Ok(finish(name, n, rec, start))
}

/// The two sign-change counterexamples and the even-power control.
pub fn counterexample_suite() -> SuiteReport {
    run_suite("counterexamples", None, &Limits::default()).expect("known suite")
}

fn finish(name: &str, max_n: usize, rec: Recorder, start: Instant) -> SuiteReport {
    SuiteReport {
        suite: name.to_string(),
        max_n,
        cases: rec.cases,
        pass: rec.failures.is_empty(),
        failures: rec.failures,
        notes: rec.notes,
        elapsed: start.elapsed(),
    }
}

fn ws(w: &Weight) -> std::sync::Arc<WeightSet> {
    weight_set(w, ModuleKind::Irreducible2).expect("restricted weight")
}

fn omega(n: usize, i: usize) -> Weight {
    Weight::fundamental(n, i).expect("index in range")
}

fn all_eps_in_box(n: usize, bound: i64) -> Vec<EpsWeight> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-bound..=bound).map(move |c| {
                    let mut v = p.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|v| EpsWeight::new(v).expect("rank > 0")).collect()
}

fn suite_dominance(max_n: usize, rec: &mut Recorder) {
    for n in 1..=max_n {
        let pool = dominant_up_to(n, 12);
        for hi in &pool {
            let closure = dominant_chain_closure(hi);
            for lo in &pool {
                let fast = dominates(hi, lo).expect("same rank");
                rec.compare(|| format!("n={n} hi={hi} lo={lo}"), fast, closure.contains(lo));
                if fast {
                    let d = delta(hi) - delta(lo);
                    rec.check(|| format!("delta gap n={n} hi={hi} lo={lo}"), d >= 0 && d % 2 == 0);
                }
            }
            rec.compare(|| format!("dominant_below n={n} w={hi}"), dominant_below(hi).expect("dominant"), closure);
        }

        // order axioms and the structural facts about small dominant weights
        let small: Vec<&Weight> = pool.iter().filter(|w| delta(w) <= 10).collect();
        let rel: Vec<Vec<bool>> =
            small.iter().map(|a| small.iter().map(|b| dominates(a, b).expect("same rank")).collect()).collect();
        for i in 0..small.len() {
            rec.check(|| format!("reflexive n={n} w={}", small[i]), rel[i][i]);
            for j in 0..small.len() {
                if i != j && rel[i][j] && rel[j][i] {
                    rec.check(|| format!("antisymmetric n={n} {} {}", small[i], small[j]), false);
                }
                if !rel[i][j] {
                    continue;
                }
                for k in 0..small.len() {
                    if rel[j][k] && !rel[i][k] {
                        rec.check(|| format!("transitive n={n} {} {} {}", small[i], small[j], small[k]), false);
                    }
                }
            }
        }
        for w in &pool {
            let d = delta(w);
            if d <= 10 {
                if n >= 2 && !w.is_zero() && is_radical(w) {
                    rec.check(|| format!("above omega_2 n={n} w={w}"), dominates(w, &omega(n, 2)).expect("rank"));
                }
                if !is_radical(w) {
                    rec.check(|| format!("above omega_1 n={n} w={w}"), dominates(w, &omega(n, 1)).expect("rank"));
                }
            }
            let (k, j) = (d / n as i64, (d % n as i64) as usize);
            let mut target = omega(n, n).scale(k);
            if j > 0 {
                target = target.checked_add(&omega(n, j)).expect("rank");
            }
            rec.check(|| format!("above {target} n={n} w={w}"), dominates(w, &target).expect("rank"));
        }
    }

    // arbitrary (non-dominant) lower weights against simple-root subtraction
    for n in 1..=max_n.min(3) {
        let box_pts = all_eps_in_box(n, 2);
        let floor = -(2 * n as i64 - 1) * 2 * n as i64;
        for hi in dominant_up_to(n, 6) {
            let reach = simple_root_descendants(&to_eps(&hi), floor);
            for lo in &box_pts {
                let lo_w = from_eps(lo);
                rec.compare(
                    || format!("simple-root n={n} hi={hi} lo={lo}"),
                    dominates(&hi, &lo_w).expect("rank"),
                    reach.contains(lo),
                );
            }
        }
    }

    // basis change and Weyl orbits
    for n in 1..=max_n.min(5) {
        let bound = if n <= 4 { 3 } else { 2 };
        for e in all_eps_in_box(n, bound) {
            let w = from_eps(&e);
            rec.compare(|| format!("round trip {e}"), to_eps(&w), e.clone());
            rec.compare(|| format!("round trip {w}"), from_eps(&to_eps(&w)), w.clone());
        }
    }
    for n in 1..=max_n.min(4) {
        let group_order: u64 = (1..=n as u64).product::<u64>() << n;
        for w in dominant_up_to(n, 4) {
            let e = to_eps(&w);
            let orbit = weyl_orbit(&e);
            let reference = reflection_orbit(&e);
            rec.compare(|| format!("orbit {e}"), orbit.to_sorted_vec(), reference.into_iter().collect());
            rec.check(|| format!("orbit size divides |W| for {e}"), group_order % orbit.len() == 0);
            let dominant: Vec<EpsWeight> = orbit.to_sorted_vec().into_iter().filter(|m| m.is_dominant()).collect();
            rec.compare(|| format!("unique dominant member {e}"), dominant, vec![e.clone()]);
        }
    }
}

fn suite_si(max_n: usize, rec: &mut Recorder) {
    let mut previous = 0;
    let mut table = Vec::new();
    for n in 1..=max_n as u32 {
        let oracle = singer_height_oracle(n).expect("n >= 1");
        let fast = singer_height_fast(n).expect("n >= 1");
        rec.compare(|| format!("Si({n})"), fast.clone(), oracle.clone());
        rec.check(|| format!("monotone at {n}"), oracle.value >= previous);
        previous = oracle.value;
        let g = max_singer_element(n).expect("n >= 1");
        rec.compare(|| format!("max singer element n={n}"), singer_index_element(&g), oracle.value);
        rec.compare(|| format!("max singer element rank n={n}"), g.rank(), n as usize);
        if (3..=11).contains(&n) {
            table.push(oracle.value);
        }
        if n == 12 && oracle.value != PRINTED_SI_12 {
            rec.notes.push(format!(
                "Si(12): exhaustive search gives {} with witness {:?}; the claimed value {} needs four parts with pairwise distinct 2-adic valuations, so sum at least 15",
                oracle.value, oracle.witness, PRINTED_SI_12
            ));
        }
    }
    if max_n >= 11 {
        rec.compare(|| "Si(3..=11)".into(), table, vec![2, 2, 2, 2, 3, 3, 3, 3, 3]);
    }
}

fn suite_m22(max_n: usize, rec: &mut Recorder) {
    for n in 1..=max_n {
        let top = omega(n, n);
        let top_orbit = WeightSet::from_dominant(n, [top.clone()]).expect("dominant");
        for w in restricted_weights(n) {
            if w.last() != 1 {
                continue;
            }
            let rest = w.checked_sub(&top).expect("rank");
            let set = ws(&w);
            let d = delta(&w);
            let closed = d % 2 == 0 && d > 2 * n as i64 - 1;
            let dom = dominates(&rest, &top).expect("rank");
            // 0 ∈ A + B iff some b ∈ B has −b ∈ A
            let saturated = weight_set(&rest, ModuleKind::Weyl).expect("dominant");
            let explicit = top_orbit.any(|b| saturated.contains(&b.neg()));
            let label = || format!("n={n} omega={w}");
            rec.compare(|| format!("{} zero in set vs delta", label()), set.contains_zero(), closed);
            rec.compare(|| format!("{} zero in set vs dominance", label()), set.contains_zero(), dom);
            rec.compare(|| format!("{} zero in set vs explicit sum", label()), set.contains_zero(), explicit);
            rec.compare(
                || format!("{} closed form", label()),
                has_zero_weight(&w, ModuleKind::Irreducible2).expect("restricted"),
                closed,
            );
            if n > 5 {
                continue;
            }
            if set.contains_zero() {
                for i in (2..=n).step_by(2) {
                    rec.check(|| format!("{} has omega_{i}", label()), set.contains(&to_eps(&omega(n, i))));
                }
            }
            if d >= 2 * n as i64 {
                if is_radical(&w) {
                    rec.check(|| format!("{} radical zero", label()), set.contains_zero());
                } else {
                    let mut wanted = vec![to_eps(&omega(n, 1)), to_eps(&omega(n, 1).scale(3))];
                    if n >= 2 {
                        wanted.push(to_eps(&omega(n, 1).checked_add(&omega(n, 2)).expect("rank")));
                    }
                    if n > 2 {
                        wanted.push(to_eps(&omega(n, 3)));
                    }
                    for e in wanted {
                        rec.check(|| format!("{} contains {e}", label()), set.contains(&e));
                    }
                }
            }
        }
    }

    for n in 1..=max_n.min(5) {
        for w in restricted_weights(n) {
            let irr = ws(&w);
            let weyl = weight_set(&w, ModuleKind::Weyl).expect("dominant");
            rec.check(|| format!("n={n} weyl contains irr for {w}"), irr.dominant_members().iter().all(|m| weyl.contains(&to_eps(m))));
            rec.compare(
                || format!("n={n} cached vs uncached {w}"),
                irr.as_ref().clone(),
                weight_set_uncached(&w, ModuleKind::Irreducible2).expect("restricted"),
            );
            if n <= 4 {
                let explicit = WeightSet::explicit(n, irr.to_sorted_vec()).expect("rank");
                rec.check(|| format!("n={n} weyl closed {w}"), explicit.check_weyl_closed());
                rec.check(|| format!("n={n} symmetric {w}"), irr.all(|e| irr.contains(&e.neg())));
            }
        }
    }

    // weights of a sum of restricted weights with disjoint support
    for n in 1..=max_n.min(4) {
        let all = restricted_weights(n);
        for a in &all {
            for b in &all {
                let sum = a.checked_add(b).expect("rank");
                if !sum.is_restricted() || a > b {
                    continue;
                }
                let direct: Vec<EpsWeight> = explicit_sum(&ws(a), &ws(b)).into_iter().collect();
                rec.compare(|| format!("n={n} sum rule {a} + {b}"), ws(&sum).to_sorted_vec(), direct);
            }
        }
    }
}

fn suite_ee3(max_n: usize, rec: &mut Recorder) {
    for n in 1..=max_n {
        let shapes = enumerate_shapes(n).expect("n >= 1");
        for w in restricted_weights(n) {
            let set = ws(&w);
            let mut all_tori = true;
            for shape in &shapes {
                let direct = trivial_constituent(&set, shape).expect("rank");
                all_tori &= direct;
                let v = torus_trivial(&w, shape).expect("restricted");
                rec.compare(|| format!("torus_trivial n={n} omega={w} shape={shape}"), v.decision, Decision::from_bool(direct));
            }
            let v = abelian_all(&w).expect("restricted");
            rec.compare(|| format!("abelian_all n={n} omega={w}"), v.decision, Decision::from_bool(all_tori));

            let sharp = TorusShape::t_sharp(n as u32).expect("n >= 1");
            let predicted = if w.last() == 0 { is_radical(&w) || gamma(&w) > 2 } else { delta(&w) >= 2 * n as i64 };
            rec.compare(|| format!("T# n={n} omega={w}"), predicted, trivial_constituent(&set, &sharp).expect("rank"));
        }

        // restrictions of the ω_n orbit: exactly the tuples non-zero on minus blocks
        let top = ws(&omega(n, n));
        for shape in &shapes {
            if torus_order(shape) > 10_000u32.into() {
                continue;
            }
            let got = residue_vectors(&top, shape).expect("rank");
            let mut expected = BTreeSet::new();
            let orders = shape.factor_orders();
            let mut r = vec![0u64; orders.len()];
            loop {
                if crate::tori::occurs_in_omega_n(&r, shape).expect("length") {
                    expected.insert(r.clone());
                }
                let mut i = 0;
                while i < r.len() {
                    r[i] += 1;
                    if r[i] < orders[i] {
                        break;
                    }
                    r[i] = 0;
                    i += 1;
                }
                if i == r.len() {
                    break;
                }
            }
            rec.compare(|| format!("omega_n residues n={n} shape={shape}"), got, expected);
        }
    }
}

fn suite_s10(max_n: usize, rec: &mut Recorder) {
    for n in 1..=max_n {
        let shapes = enumerate_shapes(n).expect("n >= 1");
        for w in restricted_weights(n) {
            if w.last() != 1 {
                continue;
            }
            let set = ws(&w);
            for shape in &shapes {
                let v = torus_trivial(&w, shape).expect("restricted");
                rec.check(|| format!("closed form used n={n} omega={w} shape={shape}"), !v.fallback_used);
                rec.compare(
                    || format!("n={n} omega={w} shape={shape}"),
                    v.decision,
                    Decision::from_bool(trivial_constituent(&set, shape).expect("rank")),
                );
            }
        }
    }
    let counts = signed_partition_counts(12);
    for n in 1..=12 {
        let shapes = enumerate_shapes(n).expect("n >= 1");
        let distinct: BTreeSet<&TorusShape> = shapes.iter().collect();
        rec.compare(|| format!("shape count n={n}"), shapes.len() as u64, counts[n]);
        rec.compare(|| format!("shapes distinct n={n}"), distinct.len(), shapes.len());
        rec.check(|| format!("T# listed n={n}"), distinct.contains(&TorusShape::t_sharp(n as u32).expect("n >= 1")));
    }
}

fn suite_si1(max_n: usize, limits: &Limits, rec: &mut Recorder) {
    for n in 1..=max_n {
        let shapes = enumerate_shapes(n).expect("n >= 1");
        'weights: for w in restricted_weights(n) {
            let set = ws(&w);
            let mut all = true;
            for shape in &shapes {
                match unisingular_on_torus_limited(&set, shape, limits.sweep_limit) {
                    Ok(b) => all &= b,
                    Err(e) => {
                        rec.error(format!("n={n} omega={w} shape={shape}"), e);
                        continue 'weights;
                    }
                }
            }
            let v = unisingular(&w).expect("restricted");
            rec.compare(|| format!("n={n} omega={w}"), v.decision, Decision::from_bool(all));
        }
    }
}

/// `0 ∈ Σ values(μ_level)` in `Z_L` for the twist digits of `w`.
fn zero_in_digit_sumset(
    w: &Weight,
    t: &TorusElement,
    cache: &mut HashMap<Weight, BTreeSet<u64>>,
) -> bool {
    let l = t.shape().exponent_lcm().expect("small torus");
    let mut acc = BTreeSet::from([0u64]);
    for (_, mu) in twist_decompose(w).expect("dominant") {
        let vals = cache.entry(mu.clone()).or_insert_with(|| value_set(&ws(&mu), t).expect("rank"));
        acc = acc.iter().flat_map(|a| vals.iter().map(move |v| (a + v) % l)).collect();
    }
    acc.contains(&0)
}

fn suite_th2(max_n: usize, rec: &mut Recorder) {
    for n in 1..=max_n {
        let shape = TorusShape::singer(n as u32).expect("n >= 1");
        let s = TorusElement::new(shape.clone(), vec![1]).expect("generator");
        let mut cache = HashMap::new();
        let mut coeffs = vec![0i64; n];
        loop {
            let w = Weight::new(coeffs.clone()).expect("rank");
            let direct = zero_in_digit_sumset(&w, &s, &mut cache);
            rec.compare(|| format!("n={n} omega={w}"), singer_cycle_has_one(&w).expect("dominant"), direct);
            let mut i = 0;
            while i < n {
                coeffs[i] += 1;
                if coeffs[i] <= 3 {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        for i in 1..=n {
            let set = ws(&omega(n, i));
            let misses = !value_set(&set, &s).expect("rank").contains(&0);
            rec.compare(|| format!("fundamental n={n} i={i}"), misses, i == n || i % 2 == 1);
            rec.compare(
                || format!("singer torus n={n} i={i}"),
                !trivial_constituent(&set, &shape).expect("rank"),
                i == n || i % 2 == 1,
            );
        }
    }
}

/// Eigenvalue 1 for every generator choice, by evaluating each weight.
fn direct_decision(w: &Weight, g: &SemisimpleElement) -> Decision {
    let set = ws(w);
    let (mut yes, mut no) = (false, false);
    for u in generator_tuples(g) {
        let t = to_torus_element(g, Some(&u)).expect("valid generators");
        if value_set(&set, &t).expect("rank").contains(&0) {
            yes = true;
        } else {
            no = true;
        }
    }
    match (yes, no) {
        (true, false) => Decision::Yes,
        (false, true) => Decision::No,
        _ => Decision::Undetermined,
    }
}

fn suite_ff2(max_n: usize, limits: &Limits, rec: &mut Recorder) {
    for n in 1..=max_n {
        let elements = enumerate_elements(n as u32, limits.max_element_order).expect("n >= 1");
        let top = ws(&omega(n, n));
        let si_n = singer_height(n as u32).expect("n >= 1").value;
        let mut best = 0;
        for g in &elements {
            let orders = omega_n_eigenvalue_orders(g).expect("small order");
            let order = g.order().expect("small order");
            rec.check(|| format!("order in spectrum g={g}"), orders.contains(&order));
            rec.compare(|| format!("eigenvalue 1 g={g}"), has_eigenvalue_one_omega_n(g), orders.contains(&1));
            for u in generator_tuples(g) {
                let t = to_torus_element(g, Some(&u)).expect("valid generators");
                let l = t.shape().exponent_lcm().expect("small torus");
                let got = value_set(&top, &t).expect("rank");
                let predicted: BTreeSet<u64> = (0..l).filter(|&v| orders.contains(&(l / gcd(v, l)))).collect();
                rec.compare(|| format!("spectrum g={g} u={u:?}"), got, predicted);
            }
            let si = singer_index_element(g);
            best = best.max(si);
            rec.check(|| format!("Si(g) <= Si(n) g={g}"), si <= si_n);
            let h = g.gamma0_product().expect("valid");
            for w in restricted_weights(n) {
                if w.last() == 1 {
                    rec.compare(|| format!("singular part omega={w} g={g} h={h}"), direct_decision(&w, g), direct_decision(&w, &h));
                }
            }
        }
        rec.compare(|| format!("max Si(g) n={n}"), best, si_n);
    }
}

fn suite_fr1(max_n: usize, limits: &Limits, rec: &mut Recorder) {
    for n in 1..=max_n {
        let elements = enumerate_elements(n as u32, limits.max_element_order).expect("n >= 1");
        let weights = restricted_weights(n);
        for g in &elements {
            let order = g.order().expect("small order");
            let prime_power = order == 1 || is_prime_power(order);
            let p88 = p88_guarantee(g).expect("valid");
            for w in &weights {
                let direct = direct_decision(w, g);
                let v = element_has_one(w, g).expect("restricted");
                let label = || format!("n={n} omega={w} g={g}");
                rec.compare(|| format!("{} verdict", label()), v.decision, direct);
                rec.check(|| format!("{} generator independent", label()), direct != Decision::Undetermined);
                if w.last() == 1 {
                    rec.check(|| format!("{} closed form used", label()), !v.fallback_used);
                }
                if prime_power && prime_power_all(w).expect("restricted") {
                    rec.compare(|| format!("{} prime power order", label()), direct, Decision::Yes);
                }
                if p88 {
                    rec.compare(|| format!("{} omega_1 and omega_n guarantee", label()), direct, Decision::Yes);
                }
            }
        }
    }
}

fn suite_th7(max_n: usize, rec: &mut Recorder) {
    for n in 1..=max_n {
        for w in dominant_up_to(n, 8) {
            let d = delta(&w);
            for k in 1..=n {
                let blocks = vec![1; k];
                let mut kinds = vec![ModuleKind::Weyl];
                if w.is_restricted() {
                    kinds.push(ModuleKind::Irreducible2);
                }
                for kind in kinds {
                    rec.compare(
                        || format!("n={n} omega={w} k={k} kind={kind}"),
                        th7_blocks(&w, &blocks, kind).expect("blocks fit"),
                        d < k as i64,
                    );
                }
            }
        }
    }

    // tensor products of up to three restricted factors with δ-total below n
    for n in 2..=max_n.min(5) {
        let factors: Vec<Weight> = restricted_weights(n).into_iter().filter(|w| !w.is_zero()).collect();
        let mut visit = |combo: &[&Weight]| {
            let l: i64 = combo.iter().map(|w| delta(w)).sum();
            if l >= n as i64 {
                return;
            }
            let mut acc = WeightSet::singleton_zero(n);
            for w in combo {
                acc = crate::reps::minkowski_sum(&acc, &ws(w)).expect("rank");
            }
            let names: Vec<String> = combo.iter().map(|w| w.to_string()).collect();
            rec.check(|| format!("support bound n={n} factors={names:?}"), acc.all(|e| e.support_size() as i64 <= l));
        };
        for i in 0..factors.len() {
            visit(&[&factors[i]]);
            for j in i..factors.len() {
                visit(&[&factors[i], &factors[j]]);
                for k in j..factors.len() {
                    visit(&[&factors[i], &factors[j], &factors[k]]);
                }
            }
        }
    }
}

fn suite_branching(max_n: usize, rec: &mut Recorder) {
    let max_big_n = 2 * max_n;
    for big_n in (2..=max_big_n).step_by(2) {
        let n = big_n / 2;
        for k in 1..big_n {
            let lambda = LinearWeight::fundamental(big_n, k).expect("in range");
            let restricted = restrict_to_c(&lambda).expect("even N");
            rec.compare(
                || format!("fundamental N={big_n} k={k}"),
                to_eps(&restricted),
                eps_restrict(&lambda.eps()).expect("even length"),
            );
            // a fundamental restricts to ω'_j only from λ_j or λ_{2n−j}
            if let Some(j) = restricted.as_fundamental() {
                rec.check(|| format!("preimage N={big_n} k={k} j={j}"), k == j || k == big_n - j);
            }
            let mut expected = exterior_factors(k, n).expect("in range");
            if k % 2 == 0 {
                expected.insert(Weight::zero(n));
            }
            rec.compare(|| format!("exterior N={big_n} k={k}"), restricted_exterior_dominants(n, k), expected);
            let verdict = real_element_verdict(&lambda);
            let odd = k % 2 == 1;
            rec.compare(
                || format!("verdict N={big_n} k={k}"),
                verdict.outcome,
                if odd { RealOutcome::PossibleException } else { RealOutcome::GuaranteedOne },
            );
            // the zero weight is what rules out even exterior powers
            rec.compare(
                || format!("zero weight N={big_n} k={k}"),
                restricted_exterior_dominants(n, k).contains(&Weight::zero(n)),
                !odd,
            );
        }
        if big_n <= 10 {
            let mut coeffs = vec![0i64; big_n - 1];
            loop {
                let lambda = LinearWeight::new(big_n, coeffs.clone()).expect("valid");
                rec.compare(
                    || format!("restriction N={big_n} lambda={lambda}"),
                    to_eps(&restrict_to_c(&lambda).expect("even N")),
                    eps_restrict(&lambda.eps()).expect("even length"),
                );
                let mut i = 0;
                while i < coeffs.len() {
                    coeffs[i] += 1;
                    if coeffs[i] <= 2 {
                        break;
                    }
                    coeffs[i] = 0;
                    i += 1;
                }
                if i == coeffs.len() {
                    break;
                }
            }
        }
    }

    // SL_{n+1}, n even: the fixed line lets every exterior power restrict with weight 0
    for n in (2..max_big_n.max(2)).step_by(2) {
        for k in 1..=n {
            let has_zero = exterior_weights(n + 1, k)
                .iter()
                .any(|v| eps_restrict(&v[..n]).expect("even length").is_zero());
            rec.check(|| format!("odd ambient N={} k={k}", n + 1), has_zero);
        }
    }

    for q in [2u64, 3, 4] {
        for o in 1..=1000u64 {
            if gcd(o, q) != 1 {
                continue;
            }
            let t = multiplicative_order(q, o, DEFAULT_TRIAL_DIVISION_BOUND).expect("coprime");
            let sl_brute = (1..=2 * t).any(|i| (pow_mod(q, i, o) + 1) % o == 0);
            let su_brute = (1..=2 * t).step_by(2).any(|i| pow_mod(q, i, o) == 1 % o);
            rec.compare(|| format!("sl o={o} q={q}"), real_by_order_sl(o, q).expect("valid"), sl_brute);
            rec.compare(|| format!("su o={o} q={q}"), real_by_order_su(o, q).expect("valid"), su_brute);
        }
    }
}

fn suite_counterexamples(rec: &mut Recorder) {
    // SL_4(2) ⊃ Sp_4(2): an element of order 5 = 2^2 + 1 generates a Singer torus
    let g = SemisimpleElement::singer_cycle(2).expect("valid");
    check_exterior_case(rec, "SL_4(2) order 5", &g, &[1, 3], &[2]);
    // SU_6(2): an element of order 7 = 2^3 − 1 lies in the torus (+3) of Sp_6(2)
    let h: SemisimpleElement = "3:7:+".parse().expect("valid");
    check_exterior_case(rec, "SU_6(2) order 7", &h, &[1], &[]);
    let hits: Vec<u64> = generator_tuples(&h)
        .into_iter()
        .filter(|u| exterior_values_at(3, &to_torus_element(&h, Some(u)).expect("valid generators")).contains(&0))
        .map(|u| u[0])
        .collect();
    if !hits.is_empty() {
        rec.notes.push(format!(
            "SU_6(2) order 7: the third exterior power has eigenvalue 1 for u in {hits:?}, since u(1 + 2 + 4) = 7u"
        ));
    }
}

fn check_exterior_case(rec: &mut Recorder, label: &str, g: &SemisimpleElement, odd: &[usize], even: &[usize]) {
    let n = g.rank();
    for u in generator_tuples(g) {
        let t = to_torus_element(g, Some(&u)).expect("valid generators");
        for &k in odd {
            rec.check(|| format!("{label} u={u:?} exterior {k}: no eigenvalue 1"), !exterior_values_at(k, &t).contains(&0));
            for factor in exterior_factors(k, n).expect("in range") {
                let vals = value_set(&ws(&factor), &t).expect("rank");
                rec.check(|| format!("{label} u={u:?} exterior {k} factor {factor}: no eigenvalue 1"), !vals.contains(&0));
            }
        }
        for &k in even {
            rec.check(|| format!("{label} u={u:?} exterior {k}: eigenvalue 1"), exterior_values_at(k, &t).contains(&0));
        }
    }
}
