//! Maximal tori of Sp_{2n}(2).
//!
//! A conjugacy class of maximal tori is a signed partition of `n`: blocks
//! `(n_i, η_i)` with cyclic factors of order `o_i = 2^{n_i} − η_i`. In the
//! canonical diagonal form the block generator acts on the ε-coordinates
//! `p_i, …, p_i + n_i − 1` by `ζ, ζ², …, ζ^{2^{n_i−1}}`, so a weight `μ`
//! restricts to block `i` as the residue `Σ_j c_{p_i+j}·2^j mod o_i`.
//! Every weight set used here is Weyl-closed, so the choice of which
//! coordinates a block consumes does not matter.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::{gcd, lcm};
use crate::weights::{EpsWeight, WeightSet};

/// Largest block rank; keeps `2^{n_i} + 1` inside `u64`.
pub const MAX_BLOCK_RANK: u32 = 63;

/// Default bound on the number of exponent tuples a sweep may visit.
pub const DEFAULT_SWEEP_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToriError {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("block rank {0} outside 1..={MAX_BLOCK_RANK}")]
    BlockRank(u64),
    #[error("rank mismatch: weight has rank {weight}, torus has rank {torus}")]
    RankMismatch { weight: usize, torus: usize },
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("exponent {exponent} out of range for factor order {order}")]
    ExponentOutOfRange { exponent: u64, order: u64 },
    #[error("sweep needs {required} exponent tuples, limit is {limit}")]
    SweepLimitExceeded { required: String, limit: u64 },
    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
    #[error("cannot parse torus label {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// `η` as an integer.
    pub fn eta(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusBlock {
    pub rank: u32,
    pub sign: Sign,
}

impl TorusBlock {
    pub fn new(rank: u32, sign: Sign) -> Result<Self, ToriError> {
        if rank == 0 || rank > MAX_BLOCK_RANK {
            return Err(ToriError::BlockRank(rank as u64));
        }
        Ok(Self { rank, sign })
    }

    /// `2^{n_i} − η_i`.
    pub fn factor_order(&self) -> u64 {
        let p = 1u64 << self.rank;
        match self.sign {
            Sign::Minus => p + 1,
            Sign::Plus => p - 1,
        }
    }
}

impl Ord for TorusBlock {
    fn cmp(&self, other: &Self) -> Ordering {
        other.rank.cmp(&self.rank).then(self.sign.cmp(&other.sign))
    }
}

impl PartialOrd for TorusBlock {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TorusBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Minus => write!(f, "-{}", self.rank),
            Sign::Plus => write!(f, "{}", self.rank),
        }
    }
}

/// A signed partition in canonical order (rank descending, minus first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusShape {
    blocks: Vec<TorusBlock>,
}

impl TorusShape {
    pub fn new(mut blocks: Vec<TorusBlock>) -> Result<Self, ToriError> {
        if blocks.is_empty() {
            return Err(ToriError::ZeroRank);
        }
        blocks.sort();
        Ok(Self { blocks })
    }

    /// The Singer torus `(−n)`.
    pub fn singer(n: u32) -> Result<Self, ToriError> {
        Self::new(vec![TorusBlock::new(n, Sign::Minus)?])
    }

    /// `T^#`: `n` blocks `(1, −1)`, each of order 3.
    pub fn t_sharp(n: u32) -> Result<Self, ToriError> {
        if n == 0 {
            return Err(ToriError::ZeroRank);
        }
        Self::new(vec![TorusBlock::new(1, Sign::Minus)?; n as usize])
    }

    pub fn blocks(&self) -> &[TorusBlock] {
        &self.blocks
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank as usize).sum()
    }

    pub fn factor_orders(&self) -> Vec<u64> {
        self.blocks.iter().map(TorusBlock::factor_order).collect()
    }

    pub fn is_t_sharp(&self) -> bool {
        self.blocks.iter().all(|b| b.rank == 1 && b.sign == Sign::Minus)
    }

    /// Least common multiple of the factor orders.
    pub fn exponent_lcm(&self) -> Result<u64, ToriError> {
        self.blocks
            .iter()
            .try_fold(1u64, |acc, b| lcm(acc, b.factor_order()))
            .ok_or(ToriError::Overflow("lcm of factor orders"))
    }
}

impl fmt::Display for TorusShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for TorusShape {
    type Err = ToriError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ToriError::Parse(s.to_string());
        let mut blocks = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let (sign, digits) = match part.strip_prefix('-') {
                Some(rest) => (Sign::Minus, rest),
                None => (Sign::Plus, part.strip_prefix('+').unwrap_or(part)),
            };
            let rank: u64 = digits.parse().map_err(|_| bad())?;
            if rank == 0 || rank > MAX_BLOCK_RANK as u64 {
                return Err(ToriError::BlockRank(rank));
            }
            blocks.push(TorusBlock::new(rank as u32, sign)?);
        }
        TorusShape::new(blocks)
    }
}

impl Serialize for TorusShape {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All torus classes of rank `n`, in canonical order.
pub fn enumerate_shapes(n: usize) -> Result<Vec<TorusShape>, ToriError> {
    fn rec(remaining: usize, floor: Option<TorusBlock>, prefix: &mut Vec<TorusBlock>, out: &mut Vec<TorusShape>) {
        if remaining == 0 {
            out.push(TorusShape { blocks: prefix.clone() });
            return;
        }
        let top = floor.map_or(remaining, |b| (b.rank as usize).min(remaining));
        for rank in (1..=top).rev() {
            for sign in [Sign::Minus, Sign::Plus] {
                let block = TorusBlock { rank: rank as u32, sign };
                if floor.is_some_and(|f| block < f) {
                    continue;
                }
                prefix.push(block);
                rec(remaining - rank, Some(block), prefix, out);
                prefix.pop();
            }
        }
    }
    if n == 0 {
        return Err(ToriError::ZeroRank);
    }
    if n > MAX_BLOCK_RANK as usize {
        return Err(ToriError::BlockRank(n as u64));
    }
    let mut out = Vec::new();
    rec(n, None, &mut Vec::new(), &mut out);
    Ok(out)
}

pub fn torus_order(shape: &TorusShape) -> BigUint {
    shape.blocks.iter().map(|b| BigUint::from(b.factor_order())).product()
}

/// Number of minus-signed blocks.
pub fn singer_index(shape: &TorusShape) -> usize {
    shape.blocks.iter().filter(|b| b.sign == Sign::Minus).count()
}

fn check_rank(mu: &EpsWeight, shape: &TorusShape) -> Result<(), ToriError> {
    if mu.rank() == shape.rank() {
        Ok(())
    } else {
        Err(ToriError::RankMismatch { weight: mu.rank(), torus: shape.rank() })
    }
}

/// Residues of `μ` on the block generators.
pub fn block_sums(mu: &EpsWeight, shape: &TorusShape) -> Result<Vec<u64>, ToriError> {
    check_rank(mu, shape)?;
    let c = mu.coords();
    let mut pos = 0;
    let mut out = Vec::with_capacity(shape.blocks.len());
    for b in &shape.blocks {
        let o = b.factor_order() as i128;
        let mut acc: i128 = 0;
        let mut pow: i128 = 1 % o;
        for j in 0..b.rank as usize {
            acc = (acc + (c[pos + j] as i128).rem_euclid(o) * pow) % o;
            pow = pow * 2 % o;
        }
        out.push(acc as u64);
        pos += b.rank as usize;
    }
    Ok(out)
}

pub fn restricts_trivially(mu: &EpsWeight, shape: &TorusShape) -> Result<bool, ToriError> {
    Ok(block_sums(mu, shape)?.iter().all(|&r| r == 0))
}

/// Whether some weight of `ws` restricts to the trivial character of `T`.
pub fn trivial_constituent(ws: &WeightSet, shape: &TorusShape) -> Result<bool, ToriError> {
    if ws.rank() != shape.rank() {
        return Err(ToriError::RankMismatch { weight: ws.rank(), torus: shape.rank() });
    }
    if ws.contains_zero() {
        return Ok(true);
    }
    Ok(ws.any(|mu| block_sums(mu, shape).expect("rank checked").iter().all(|&r| r == 0)))
}

/// Whether a residue tuple is the restriction of some weight of `V_{ω_n}`:
/// every minus-signed block must carry a non-zero residue.
pub fn occurs_in_omega_n(residues: &[u64], shape: &TorusShape) -> Result<bool, ToriError> {
    if residues.len() != shape.blocks.len() {
        return Err(ToriError::LengthMismatch { expected: shape.blocks.len(), got: residues.len() });
    }
    Ok(shape.blocks.iter().zip(residues).all(|(b, &r)| b.sign == Sign::Plus || r % b.factor_order() != 0))
}

/// An element `diag(J_1^{m_1}, …, J_k^{m_k})` of the canonical form of a torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusElement {
    shape: TorusShape,
    exponents: Vec<u64>,
}

impl TorusElement {
    pub fn new(shape: TorusShape, exponents: Vec<u64>) -> Result<Self, ToriError> {
        if exponents.len() != shape.blocks.len() {
            return Err(ToriError::LengthMismatch { expected: shape.blocks.len(), got: exponents.len() });
        }
        for (b, &m) in shape.blocks.iter().zip(&exponents) {
            if m >= b.factor_order() {
                return Err(ToriError::ExponentOutOfRange { exponent: m, order: b.factor_order() });
            }
        }
        Ok(Self { shape, exponents })
    }

    pub fn identity(shape: TorusShape) -> Self {
        let k = shape.blocks.len();
        Self { shape, exponents: vec![0; k] }
    }

    pub fn shape(&self) -> &TorusShape {
        &self.shape
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// `lcm(o_i / gcd(m_i, o_i))`.
    pub fn order(&self) -> Result<u64, ToriError> {
        self.shape
            .blocks
            .iter()
            .zip(&self.exponents)
            .try_fold(1u64, |acc, (b, &m)| {
                let o = b.factor_order();
                lcm(acc, o / gcd(m, o))
            })
            .ok_or(ToriError::Overflow("element order"))
    }
}

/// Precomputed data for evaluating many weights at one element.
struct Evaluator {
    orders: Vec<u64>,
    scales: Vec<u64>,
    modulus: u64,
}

impl Evaluator {
    fn new(shape: &TorusShape) -> Result<Self, ToriError> {
        let modulus = shape.exponent_lcm()?;
        let orders = shape.factor_orders();
        let scales = orders.iter().map(|o| modulus / o).collect();
        Ok(Self { orders, scales, modulus })
    }

    fn value(&self, residues: &[u64], exponents: &[u64]) -> u64 {
        let l = self.modulus as u128;
        let mut acc: u128 = 0;
        for i in 0..residues.len() {
            let o = self.orders[i] as u128;
            let local = residues[i] as u128 * exponents[i] as u128 % o;
            acc = (acc + self.scales[i] as u128 * local) % l;
        }
        acc as u64
    }
}

/// `μ(t)` as an exponent of a fixed primitive `L`-th root of unity, where `L`
/// is the lcm of the factor orders; `0` means `μ(t) = 1`.
pub fn eval_weight(mu: &EpsWeight, t: &TorusElement) -> Result<u64, ToriError> {
    let residues = block_sums(mu, &t.shape)?;
    Ok(Evaluator::new(&t.shape)?.value(&residues, &t.exponents))
}

/// Distinct block-residue tuples of the weights in `ws`.
pub fn residue_vectors(ws: &WeightSet, shape: &TorusShape) -> Result<BTreeSet<Vec<u64>>, ToriError> {
    if ws.rank() != shape.rank() {
        return Err(ToriError::RankMismatch { weight: ws.rank(), torus: shape.rank() });
    }
    let mut out = BTreeSet::new();
    ws.for_each(|mu| {
        out.insert(block_sums(mu, shape).expect("rank checked"));
    });
    Ok(out)
}

/// The values `{μ(t) : μ ∈ ws}` as residues mod `L`.
pub fn value_set(ws: &WeightSet, t: &TorusElement) -> Result<BTreeSet<u64>, ToriError> {
    let eval = Evaluator::new(&t.shape)?;
    Ok(residue_vectors(ws, &t.shape)?.iter().map(|r| eval.value(r, &t.exponents)).collect())
}

/// Sweep bound from the `SWEEP_LIMIT` environment variable, if set and valid.
pub fn sweep_limit_from_env() -> u64 {
    std::env::var("SWEEP_LIMIT")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SWEEP_LIMIT)
}

/// Brute force over every element of `T`: does each one have some weight of
/// `ws` evaluating to 1?
pub fn unisingular_on_torus(ws: &WeightSet, shape: &TorusShape) -> Result<bool, ToriError> {
    unisingular_on_torus_limited(ws, shape, sweep_limit_from_env())
}

pub fn unisingular_on_torus_limited(ws: &WeightSet, shape: &TorusShape, limit: u64) -> Result<bool, ToriError> {
    let total = torus_order(shape);
    if total > BigUint::from(limit) {
        return Err(ToriError::SweepLimitExceeded { required: total.to_string(), limit });
    }
    if ws.contains_zero() {
        return Ok(true);
    }
    let residues: Vec<Vec<u64>> = residue_vectors(ws, shape)?.into_iter().collect();
    let eval = Evaluator::new(shape)?;
    let orders = shape.factor_orders();
    let mut m = vec![0u64; orders.len()];
    loop {
        if !residues.iter().any(|r| eval.value(r, &m) == 0) {
            return Ok(false);
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == m.len() {
                return Ok(true);
            }
            m[i] += 1;
            if m[i] < orders[i] {
                break;
            }
            m[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{weight_set, ModuleKind};
    use crate::weights::Weight;

    fn shape(s: &str) -> TorusShape {
        s.parse().unwrap()
    }

    fn e(v: &[i64]) -> EpsWeight {
        EpsWeight::new(v.iter().copied()).unwrap()
    }

    fn irr(v: &[i64]) -> std::sync::Arc<WeightSet> {
        weight_set(&Weight::new(v.iter().copied()).unwrap(), ModuleKind::Irreducible2).unwrap()
    }

    #[test]
    fn shapes_small_rank() {
        let one: Vec<String> = enumerate_shapes(1).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(one, ["-1", "1"]);
        let orders: Vec<BigUint> = enumerate_shapes(1).unwrap().iter().map(torus_order).collect();
        assert_eq!(orders, [BigUint::from(3u32), BigUint::from(1u32)]);
        let two: Vec<String> = enumerate_shapes(2).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(two, ["-2", "2", "-1,-1", "-1,1", "1,1"]);
        for n in 1..=6 {
            assert!(enumerate_shapes(n).unwrap().contains(&TorusShape::t_sharp(n as u32).unwrap()));
        }
        assert_eq!(enumerate_shapes(0), Err(ToriError::ZeroRank));
    }

    #[test]
    fn orders_and_indices() {
        assert_eq!(torus_order(&TorusShape::singer(5).unwrap()), BigUint::from(33u32));
        assert_eq!(torus_order(&TorusShape::t_sharp(3).unwrap()), BigUint::from(27u32));
        assert_eq!(torus_order(&shape("1,1")), BigUint::from(1u32));
        assert_eq!(singer_index(&shape("-2")), 1);
        assert_eq!(singer_index(&TorusShape::t_sharp(4).unwrap()), 4);
        assert_eq!(singer_index(&shape("2,1")), 0);
    }

    #[test]
    fn labels_round_trip() {
        let s = shape("1,-3,2");
        assert_eq!(s.to_string(), "-3,2,1");
        assert_eq!(shape("+2,-2").to_string(), "-2,2");
        assert!("0".parse::<TorusShape>().is_err());
        assert!("x".parse::<TorusShape>().is_err());
        assert!("64".parse::<TorusShape>().is_err());
    }

    #[test]
    fn block_sum_examples() {
        assert_eq!(block_sums(&e(&[1, 0]), &shape("-2")).unwrap(), [1]);
        assert_eq!(block_sums(&e(&[1, 1]), &shape("-2")).unwrap(), [3]);
        assert_eq!(block_sums(&e(&[0, 0, 0]), &shape("-2,1")).unwrap(), [0, 0]);
        assert_eq!(block_sums(&e(&[-1, 0]), &shape("-2")).unwrap(), [4]);
        assert!(block_sums(&e(&[1]), &shape("-2")).is_err());
    }

    #[test]
    fn trivial_restriction_examples() {
        assert!(!restricts_trivially(&e(&[1, 0]), &shape("-2")).unwrap());
        assert!(restricts_trivially(&e(&[3, 0]), &shape("-1,-1")).unwrap());
        assert!(restricts_trivially(&e(&[0, 0]), &shape("-2")).unwrap());
    }

    #[test]
    fn trivial_constituent_examples() {
        assert!(!trivial_constituent(&irr(&[0, 1]), &shape("-2")).unwrap());
        assert!(trivial_constituent(&irr(&[0, 1]), &shape("1,1")).unwrap());
        assert!(trivial_constituent(&irr(&[0, 1, 0]), &shape("-3")).unwrap());
    }

    #[test]
    fn omega_n_occurrence_examples() {
        assert!(occurs_in_omega_n(&[3], &shape("-2")).unwrap());
        assert!(!occurs_in_omega_n(&[0], &shape("-2")).unwrap());
        assert!(occurs_in_omega_n(&[0], &shape("2")).unwrap());
        assert!(occurs_in_omega_n(&[0, 0], &shape("2")).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let t = TorusElement::new(shape("-2"), vec![1]).unwrap();
        assert_eq!(eval_weight(&e(&[1, 0]), &t).unwrap(), 1);
        let id = TorusElement::identity(shape("-2,-1"));
        assert_eq!(eval_weight(&e(&[2, -1, 1]), &id).unwrap(), 0);
        assert_eq!(eval_weight(&e(&[0, 0, 0]), &TorusElement::new(shape("-2,-1"), vec![2, 1]).unwrap()).unwrap(), 0);
        assert!(TorusElement::new(shape("-2"), vec![5]).is_err());
        assert_eq!(TorusElement::new(shape("-2,-1"), vec![1, 1]).unwrap().order().unwrap(), 15);
        assert_eq!(TorusElement::new(shape("-2,-1"), vec![0, 2]).unwrap().order().unwrap(), 3);
    }

    #[test]
    fn sweep_examples() {
        assert!(!unisingular_on_torus(&irr(&[1, 0]), &shape("-2")).unwrap());
        assert!(unisingular_on_torus(&irr(&[0, 1, 0]), &shape("-3")).unwrap());
        assert!(unisingular_on_torus(&irr(&[1, 1]), &shape("-2")).unwrap());
        let big = TorusShape::singer(30).unwrap();
        let ws = WeightSet::from_dominant(30, [Weight::fundamental(30, 1).unwrap()]).unwrap();
        assert!(matches!(
            unisingular_on_torus_limited(&ws, &big, 1000),
            Err(ToriError::SweepLimitExceeded { .. })
        ));
    }

    #[test]
    fn omega_n_restrictions_on_singer_torus() {
        // every weight of V_{ω_n} is nonzero on a Singer torus
        for n in 1..=6u32 {
            let ws = irr(&{
                let mut v = vec![0; n as usize];
                v[n as usize - 1] = 1;
                v
            });
            assert!(!trivial_constituent(&ws, &TorusShape::singer(n).unwrap()).unwrap());
        }
    }
}
