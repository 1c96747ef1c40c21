//! Restriction from SL_{2n} to Sp_{2n}, exterior powers of the natural
//! module, and the realness-by-order tests for SL_n(q) and SU_n(q).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{gcd, is_prime_power, multiplicative_order, pow_mod, ArithError, DEFAULT_TRIAL_DIVISION_BOUND};
use crate::weights::{EpsWeight, Weight, WeightError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BranchError {
    #[error("SL_N needs N >= 2, got {0}")]
    SmallN(usize),
    #[error("restriction to Sp needs even N, got {0}")]
    OddN(usize),
    #[error("expected {expected} coefficients, got {got}")]
    Length { expected: usize, got: usize },
    #[error("coefficients must be non-negative")]
    Negative,
    #[error("exterior power {k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("order must be positive")]
    ZeroOrder,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("order {o} is not coprime to q = {q}")]
    NotCoprime { o: u64, q: u64 },
    #[error("cannot parse linear weight {0:?}")]
    Parse(String),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// A dominant weight `Σ a_i λ_i` of SL_N, `N = len + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearWeight {
    coeffs: Vec<i64>,
}

impl LinearWeight {
    pub fn new(big_n: usize, coeffs: Vec<i64>) -> Result<Self, BranchError> {
        if big_n < 2 {
            return Err(BranchError::SmallN(big_n));
        }
        if coeffs.len() != big_n - 1 {
            return Err(BranchError::Length { expected: big_n - 1, got: coeffs.len() });
        }
        if coeffs.iter().any(|&a| a < 0) {
            return Err(BranchError::Negative);
        }
        Ok(Self { coeffs })
    }

    /// The fundamental weight `λ_k` of SL_N.
    pub fn fundamental(big_n: usize, k: usize) -> Result<Self, BranchError> {
        if k == 0 || k >= big_n {
            return Err(BranchError::KOutOfRange { k, max: big_n.saturating_sub(1) });
        }
        let mut c = vec![0; big_n - 1];
        c[k - 1] = 1;
        Self::new(big_n, c)
    }

    pub fn big_n(&self) -> usize {
        self.coeffs.len() + 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// ε-coordinates `c_j = a_j + … + a_{N−1}`, normalized by `c_N = 0`.
    pub fn eps(&self) -> Vec<i64> {
        let mut c = vec![0; self.big_n()];
        for j in (0..self.coeffs.len()).rev() {
            c[j] = c[j + 1] + self.coeffs[j];
        }
        c
    }

    /// `Some(k)` when this is `λ_k`.
    pub fn as_fundamental(&self) -> Option<usize> {
        let mut found = None;
        for (i, &a) in self.coeffs.iter().enumerate() {
            match a {
                0 => {}
                1 if found.is_none() => found = Some(i + 1),
                _ => return None,
            }
        }
        found
    }
}

impl FromStr for LinearWeight {
    type Err = BranchError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| BranchError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        LinearWeight::new(coeffs.len() + 1, coeffs)
    }
}

impl fmt::Display for LinearWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for LinearWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `b_i = a_i + a_{2n−i}` for `i < n`, `b_n = a_n`.
pub fn restrict_to_c(lambda: &LinearWeight) -> Result<Weight, BranchError> {
    let big_n = lambda.big_n();
    if big_n % 2 == 1 {
        return Err(BranchError::OddN(big_n));
    }
    let n = big_n / 2;
    let a = &lambda.coeffs;
    Ok(Weight::new((1..=n).map(|i| if i < n { a[i - 1] + a[big_n - i - 1] } else { a[n - 1] }))?)
}

/// Restriction of an A-type ε-vector of length `2n` to the C_n torus,
/// `c'_i = c_i − c_{2n+1−i}`.
pub fn eps_restrict(c: &[i64]) -> Result<EpsWeight, BranchError> {
    if c.is_empty() || c.len() % 2 == 1 {
        return Err(BranchError::OddN(c.len()));
    }
    let big_n = c.len();
    Ok(EpsWeight::new((0..big_n / 2).map(|i| c[i] - c[big_n - 1 - i]))?)
}

/// Highest weights `ω'_j` of the non-trivial composition factors of
/// `Λ^k` of the natural SL_{2n}-module restricted to Sp_{2n}.
pub fn exterior_factors(k: usize, n: usize) -> Result<BTreeSet<Weight>, BranchError> {
    if n == 0 || k == 0 || k >= 2 * n {
        return Err(BranchError::KOutOfRange { k, max: (2 * n).saturating_sub(1) });
    }
    let top = k.min(2 * n - k);
    (1..=top)
        .filter(|j| (k - j) % 2 == 0)
        .map(|j| Weight::fundamental(n, j).map_err(BranchError::from))
        .collect()
}

fn check_order_q(o: u64, q: u64) -> Result<(), BranchError> {
    if o == 0 {
        return Err(BranchError::ZeroOrder);
    }
    if !is_prime_power(q) {
        return Err(BranchError::NotPrimePower(q));
    }
    if gcd(o, q) != 1 {
        return Err(BranchError::NotCoprime { o, q });
    }
    Ok(())
}

/// Sufficient realness test in SL_n(q): does `o` divide `q^i + 1` for some `i > 0`?
pub fn real_by_order_sl(o: u64, q: u64) -> Result<bool, BranchError> {
    check_order_q(o, q)?;
    if o <= 2 {
        return Ok(true);
    }
    let t = multiplicative_order(q, o, DEFAULT_TRIAL_DIVISION_BOUND)?;
    Ok(t % 2 == 0 && pow_mod(q, t / 2, o) == o - 1)
}

/// Sufficient realness test in SU_n(q): does `o` divide `q^i − 1` for some odd `i`?
pub fn real_by_order_su(o: u64, q: u64) -> Result<bool, BranchError> {
    check_order_q(o, q)?;
    Ok(multiplicative_order(q, o, DEFAULT_TRIAL_DIVISION_BOUND)? % 2 == 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RealOutcome {
    GuaranteedOne,
    PossibleException,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealVerdict {
    pub outcome: RealOutcome,
    pub citations: Vec<String>,
    /// Whether `λ` lies in the coarser list `2^i·λ_k` (any `k`).
    pub coarse_exception: bool,
}

/// `λ = 2^j·λ_k` gives `Some((j, k))`.
fn twisted_fundamental(lambda: &LinearWeight) -> Option<(u32, usize)> {
    let mut found = None;
    for (i, &a) in lambda.coeffs.iter().enumerate() {
        if a == 0 {
            continue;
        }
        if found.is_some() || a & (a - 1) != 0 {
            return None;
        }
        found = Some((a.trailing_zeros(), i + 1));
    }
    found
}

/// Eigenvalue 1 for real semisimple elements of SL_N(2) or SU_N(2) on the
/// module of highest weight `λ`: guaranteed except possibly for twisted odd
/// exterior powers of the natural module.
pub fn real_element_verdict(lambda: &LinearWeight) -> RealVerdict {
    let coarse = twisted_fundamental(lambda);
    if lambda.big_n() % 2 == 1 {
        return RealVerdict {
            outcome: RealOutcome::GuaranteedOne,
            citations: vec!["Cor-rq2".into()],
            coarse_exception: coarse.is_some(),
        };
    }
    let outcome = match coarse {
        Some((_, k)) if k % 2 == 1 => RealOutcome::PossibleException,
        _ => RealOutcome::GuaranteedOne,
    };
    RealVerdict { outcome, citations: vec!["Thm-th6".into(), "Thm-th5".into()], coarse_exception: coarse.is_some() }
}
