//! Semisimple elements of Sp_{2n}(2) in minimal block form.
//!
//! An element is a list of blocks `(d, o, η)`: an orthogonal summand of
//! dimension `2d` on which the element acts with order `o`, split by a
//! torus factor of order `2^d − η`. The graph `Γ(g)` joins blocks with
//! non-coprime orders; its isolated vertices of full Singer order
//! `2^d + 1` are singular, and their number is the Singer index `Si(g)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{
    divisors, gcd, gcd_u128, lcm, multiplicative_order, pow_mod, ArithError, DEFAULT_TRIAL_DIVISION_BOUND,
};
use crate::tori::{Sign, ToriError, TorusBlock, TorusElement, TorusShape, MAX_BLOCK_RANK};

/// Largest `n` handled by the exhaustive Singer-height search (`2^n + 1`
/// must fit in `u128`).
pub const SINGER_ORACLE_MAX: u32 = 127;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementError {
    #[error("element needs at least one block")]
    Empty,
    #[error("block {0}: half-dimension and order must be positive")]
    ZeroField(usize),
    #[error("block {0}: half-dimension exceeds {MAX_BLOCK_RANK}")]
    BlockRank(usize),
    #[error("block {index}: {o} does not divide 2^{d}{}", if *.plus { "-1" } else { "+1" })]
    Divisibility { index: usize, d: u32, o: u64, plus: bool },
    #[error("block {index}: order of 2 mod {o} is {found}, minimality needs {expected}")]
    Minimality { index: usize, o: u64, found: u64, expected: u64 },
    #[error("block {index}: order {o} with sign + is self-dual; it splits into two sign - blocks")]
    SelfDual { index: usize, o: u64 },
    #[error("block {0}: an order-1 block must be (1,1,+)")]
    IdentityBlock(usize),
    #[error("generator {u} is not a unit modulo block order {o}")]
    NotCoprime { u: u64, o: u64 },
    #[error("expected {expected} generators, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("singer height needs n >= 1")]
    ZeroRank,
    #[error("cannot parse element {0:?}")]
    Parse(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Tori(#[from] ToriError),
}

/// One block `(d, o, η)` of a semisimple element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementBlock {
    pub d: u32,
    pub o: u64,
    pub sign: Sign,
}

impl ElementBlock {
    pub fn new(d: u32, o: u64, sign: Sign) -> Self {
        Self { d, o, sign }
    }

    pub fn identity() -> Self {
        Self { d: 1, o: 1, sign: Sign::Plus }
    }

    /// Order of the torus factor the block lives in, `2^d − η`.
    pub fn torus_factor_order(&self) -> u64 {
        TorusBlock { rank: self.d, sign: self.sign }.factor_order()
    }

    fn validate(&self, index: usize) -> Result<(), ElementError> {
        if self.d == 0 || self.o == 0 {
            return Err(ElementError::ZeroField(index));
        }
        if self.d > MAX_BLOCK_RANK {
            return Err(ElementError::BlockRank(index));
        }
        if self.o == 1 {
            return if self.d == 1 && self.sign == Sign::Plus { Ok(()) } else { Err(ElementError::IdentityBlock(index)) };
        }
        let expected = match self.sign {
            Sign::Minus => 2 * self.d as u64,
            Sign::Plus => self.d as u64,
        };
        let divisibility = ElementError::Divisibility { index, d: self.d, o: self.o, plus: self.sign == Sign::Plus };
        // o | 2^expected − 1 first, so that a block in the wrong field is
        // reported as non-minimal rather than as a divisibility failure
        if pow_mod(2, expected, self.o) != 1 % self.o {
            return Err(divisibility);
        }
        let found = multiplicative_order(2, self.o, DEFAULT_TRIAL_DIVISION_BOUND)?;
        if found != expected {
            return Err(ElementError::Minimality { index, o: self.o, found, expected });
        }
        if self.torus_factor_order() % self.o != 0 {
            return Err(divisibility);
        }
        // −1 ∈ <2> mod o makes the 2d-dimensional summand a sum of two
        // minus-type blocks of half the size
        if self.sign == Sign::Plus && found % 2 == 0 && pow_mod(2, found / 2, self.o) == self.o - 1 {
            return Err(ElementError::SelfDual { index, o: self.o });
        }
        Ok(())
    }
}

impl fmt::Display for ElementBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Minus => '-',
            Sign::Plus => '+',
        };
        write!(f, "{}:{}:{}", self.d, self.o, s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemisimpleElement {
    blocks: Vec<ElementBlock>,
}

impl SemisimpleElement {
    pub fn blocks(&self) -> &[ElementBlock] {
        &self.blocks
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.d as usize).sum()
    }

    /// `lcm(o_i)`.
    pub fn order(&self) -> Result<u64, ElementError> {
        self.blocks
            .iter()
            .try_fold(1u64, |acc, b| lcm(acc, b.o))
            .ok_or(ElementError::Arith(ArithError::Overflow("element order")))
    }

    pub fn identity(n: usize) -> Result<Self, ElementError> {
        build_element(vec![ElementBlock::identity(); n])
    }

    /// A generator of the Singer torus, `[(n, 2^n + 1, −)]`.
    pub fn singer_cycle(n: u32) -> Result<Self, ElementError> {
        if n == 0 || n > MAX_BLOCK_RANK {
            return Err(ElementError::BlockRank(0));
        }
        build_element(vec![ElementBlock::new(n, (1u64 << n) + 1, Sign::Minus)])
    }

    /// The singular blocks of `g` padded with identity blocks to the same rank.
    pub fn gamma0_product(&self) -> Result<Self, ElementError> {
        let graph = gamma_graph(self);
        let mut blocks: Vec<ElementBlock> = graph.singular.iter().map(|&i| self.blocks[i]).collect();
        let used: usize = blocks.iter().map(|b| b.d as usize).sum();
        blocks.extend(std::iter::repeat(ElementBlock::identity()).take(self.rank() - used));
        build_element(blocks)
    }
}

impl fmt::Display for SemisimpleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl Serialize for SemisimpleElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for SemisimpleElement {
    type Err = ElementError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ElementError::Parse(s.to_string());
        let mut blocks = Vec::new();
        for triple in s.split(';') {
            let fields: Vec<&str> = triple.trim().split(':').map(str::trim).collect();
            let [d, o, sign] = fields.as_slice() else {
                return Err(bad());
            };
            let sign = match *sign {
                "-" | "-1" => Sign::Minus,
                "+" | "+1" | "1" => Sign::Plus,
                _ => return Err(bad()),
            };
            blocks.push(ElementBlock::new(d.parse().map_err(|_| bad())?, o.parse().map_err(|_| bad())?, sign));
        }
        build_element(blocks)
    }
}

/// Validates block data; blocks keep the given order.
pub fn build_element(blocks: Vec<ElementBlock>) -> Result<SemisimpleElement, ElementError> {
    if blocks.is_empty() {
        return Err(ElementError::Empty);
    }
    for (i, b) in blocks.iter().enumerate() {
        b.validate(i)?;
    }
    Ok(SemisimpleElement { blocks })
}

/// `Γ(g)` with 0-based vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaGraph {
    pub vertices: usize,
    pub edges: BTreeSet<(usize, usize)>,
    pub singular: BTreeSet<usize>,
}

pub fn gamma_graph(g: &SemisimpleElement) -> GammaGraph {
    let k = g.blocks.len();
    let mut edges = BTreeSet::new();
    for i in 0..k {
        for j in i + 1..k {
            if gcd(g.blocks[i].o, g.blocks[j].o) > 1 {
                edges.insert((i, j));
            }
        }
    }
    let singular = (0..k)
        .filter(|&i| {
            let b = &g.blocks[i];
            let isolated = !edges.iter().any(|&(x, y)| x == i || y == i);
            isolated && b.sign == Sign::Minus && b.o == (1u64 << b.d) + 1
        })
        .collect();
    GammaGraph { vertices: k, edges, singular }
}

/// `Si(g) = |Γ_0|`.
pub fn singer_index_element(g: &SemisimpleElement) -> usize {
    gamma_graph(g).singular.len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingerHeight {
    pub value: usize,
    /// Parts in ascending order.
    pub witness: Vec<u32>,
}

/// Exhaustive search for the largest set of distinct positive integers with
/// sum at most `n` whose values `2^a + 1` are pairwise coprime. Ties go to
/// the smallest sum, then the lexicographically smallest set.
pub fn singer_height_oracle(n: u32) -> Result<SingerHeight, ElementError> {
    fn dfs(start: u32, n: u32, sum: u32, chosen: &mut Vec<u32>, best: &mut (Vec<u32>, u32)) {
        let better = chosen.len() > best.0.len()
            || (chosen.len() == best.0.len() && (sum < best.1 || (sum == best.1 && *chosen < best.0)));
        if better {
            *best = (chosen.clone(), sum);
        }
        for a in start..=n - sum {
            let va = (1u128 << a) + 1;
            if chosen.iter().all(|&b| gcd_u128(va, (1u128 << b) + 1) == 1) {
                chosen.push(a);
                dfs(a + 1, n, sum + a, chosen, best);
                chosen.pop();
            }
        }
    }
    if n == 0 {
        return Err(ElementError::ZeroRank);
    }
    if n > SINGER_ORACLE_MAX {
        return Err(ElementError::Arith(ArithError::Overflow("2^n + 1 beyond u128")));
    }
    let mut best = (Vec::new(), 0);
    dfs(1, n, 0, &mut Vec::new(), &mut best);
    Ok(SingerHeight { value: best.0.len(), witness: best.0 })
}

/// Closed form: `⌊log2(n + 1)⌋` with witness `{1, 2, 4, …}`.
///
/// `gcd(2^a + 1, 2^b + 1) > 1` exactly when `a` and `b` have the same 2-adic
/// valuation, so a coprime family has distinct valuations and its smallest
/// possible sum with `l` parts is `2^l − 1`.
pub fn singer_height_fast(n: u32) -> Result<SingerHeight, ElementError> {
    if n == 0 {
        return Err(ElementError::ZeroRank);
    }
    let value = (u64::from(n) + 1).ilog2() as usize;
    Ok(SingerHeight { value, witness: (0..value as u32).map(|i| 1 << i).collect() })
}

/// `Si(n)`: the exhaustive search where it is feasible, the closed form beyond.
pub fn singer_height(n: u32) -> Result<SingerHeight, ElementError> {
    if n <= SINGER_ORACLE_MAX {
        singer_height_oracle(n)
    } else {
        singer_height_fast(n)
    }
}

/// An element of rank `n` whose Singer index equals `Si(n)`.
pub fn max_singer_element(n: u32) -> Result<SemisimpleElement, ElementError> {
    let h = singer_height(n)?;
    let mut blocks: Vec<ElementBlock> =
        h.witness.iter().map(|&a| ElementBlock::new(a, (1u64 << a) + 1, Sign::Minus)).collect();
    let used: u32 = h.witness.iter().sum();
    blocks.extend(std::iter::repeat(ElementBlock::identity()).take((n - used) as usize));
    build_element(blocks)
}

/// Orders `e` of the roots of unity occurring as eigenvalues of `g` on
/// `V_{ω_n}`: the divisors of `|g|` meeting every singular block order.
pub fn omega_n_eigenvalue_orders(g: &SemisimpleElement) -> Result<BTreeSet<u64>, ElementError> {
    let graph = gamma_graph(g);
    let orders: Vec<u64> = graph.singular.iter().map(|&i| g.blocks[i].o).collect();
    Ok(divisors(g.order()?, DEFAULT_TRIAL_DIVISION_BOUND)?
        .into_iter()
        .filter(|&e| orders.iter().all(|&o| gcd(e, o) > 1))
        .collect())
}

pub fn has_eigenvalue_one_omega_n(g: &SemisimpleElement) -> bool {
    gamma_graph(g).singular.is_empty()
}

/// Places `g` in a compatible maximal torus. Block `i` becomes the exponent
/// `(O_i / o_i)·u_i mod O_i` of a factor of order `O_i = 2^{d_i} − η_i`; the
/// blocks are then stably reordered into canonical torus order.
pub fn to_torus_element(g: &SemisimpleElement, generators: Option<&[u64]>) -> Result<TorusElement, ElementError> {
    let k = g.blocks.len();
    let ones = vec![1u64; k];
    let u = generators.unwrap_or(&ones);
    if u.len() != k {
        return Err(ElementError::GeneratorCount { expected: k, got: u.len() });
    }
    let mut pairs = Vec::with_capacity(k);
    for (b, &ui) in g.blocks.iter().zip(u) {
        if b.o > 1 && gcd(ui % b.o, b.o) != 1 {
            return Err(ElementError::NotCoprime { u: ui, o: b.o });
        }
        let full = b.torus_factor_order();
        let m = ((full / b.o) as u128 * (ui % b.o) as u128 % full as u128) as u64;
        pairs.push((TorusBlock::new(b.d, b.sign)?, m));
    }
    pairs.sort_by(|x, y| x.0.cmp(&y.0));
    let (blocks, exps): (Vec<TorusBlock>, Vec<u64>) = pairs.into_iter().unzip();
    Ok(TorusElement::new(TorusShape::new(blocks)?, exps)?)
}

/// Every generator tuple `u` (a unit mod each block order; `1` for trivial
/// blocks), in lexicographic order.
pub fn generator_tuples(g: &SemisimpleElement) -> Vec<Vec<u64>> {
    let choices: Vec<Vec<u64>> = g
        .blocks
        .iter()
        .map(|b| if b.o == 1 { vec![1] } else { (1..b.o).filter(|&x| gcd(x, b.o) == 1).collect() })
        .collect();
    let mut out = vec![Vec::new()];
    for c in &choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                c.iter().map(move |&x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// All valid blocks with half-dimension at most `max_d`, ascending.
pub fn valid_blocks(max_d: u32) -> Result<Vec<ElementBlock>, ElementError> {
    let mut out = vec![ElementBlock::identity()];
    for d in 1..=max_d.min(MAX_BLOCK_RANK) {
        for sign in [Sign::Minus, Sign::Plus] {
            let full = TorusBlock { rank: d, sign }.factor_order();
            for o in divisors(full, DEFAULT_TRIAL_DIVISION_BOUND)? {
                let b = ElementBlock::new(d, o, sign);
                if o > 1 && b.validate(0).is_ok() {
                    out.push(b);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Every valid element of rank `n` (as a multiset of blocks, listed in
/// ascending block order) whose order is at most `max_order`.
pub fn enumerate_elements(n: u32, max_order: u64) -> Result<Vec<SemisimpleElement>, ElementError> {
    fn rec(
        pool: &[ElementBlock],
        start: usize,
        remaining: u32,
        order: u64,
        max_order: u64,
        prefix: &mut Vec<ElementBlock>,
        out: &mut Vec<SemisimpleElement>,
    ) {
        if remaining == 0 {
            out.push(SemisimpleElement { blocks: prefix.clone() });
            return;
        }
        for (idx, b) in pool.iter().enumerate().skip(start) {
            if b.d > remaining {
                continue;
            }
            match lcm(order, b.o) {
                Some(next) if next <= max_order => {
                    prefix.push(*b);
                    rec(pool, idx, remaining - b.d, next, max_order, prefix, out);
                    prefix.pop();
                }
                _ => {}
            }
        }
    }
    if n == 0 {
        return Err(ElementError::ZeroRank);
    }
    let pool = valid_blocks(n)?;
    let mut out = Vec::new();
    rec(&pool, 0, n, 1, max_order, &mut Vec::new(), &mut out);
    Ok(out)
}
