//! The weight lattice of type C_n.
//!
//! A [`Weight`] stores coefficients `(a_1, …, a_n)` in the basis of
//! fundamental weights `ω_1, …, ω_n`. An [`EpsWeight`] stores the same lattice
//! point in the orthogonal basis `ε_1, …, ε_n`, where `ω_i = ε_1 + … + ε_i`.
//! The Weyl group acts on ε-coordinates by signed permutations.
//!
//! Dominance `μ ⪯ ω` means `ω − μ` is a non-negative integer combination of
//! the simple roots `α_i = ε_i − ε_{i+1}` (`i < n`) and `α_n = 2ε_n`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;
use thiserror::Error;

pub type Coords = SmallVec<[i64; 6]>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {0} is not 2-restricted")]
    NotRestricted(Weight),
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("cannot parse weight {0:?}")]
    Parse(String),
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coeffs: Coords,
}

/// A weight in ε-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpsWeight {
    coords: Coords,
}

impl Weight {
    pub fn new(coeffs: impl IntoIterator<Item = i64>) -> Result<Self, WeightError> {
        let coeffs: Coords = coeffs.into_iter().collect();
        if coeffs.is_empty() {
            return Err(WeightError::ZeroRank);
        }
        Ok(Self { coeffs })
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank > 0, "rank must be positive");
        Self { coeffs: SmallVec::from_elem(0, rank) }
    }

    /// The fundamental weight `ω_i`, `1 <= i <= rank`.
    pub fn fundamental(rank: usize, i: usize) -> Result<Self, WeightError> {
        if i == 0 || i > rank {
            return Err(WeightError::IndexOutOfRange { index: i, rank });
        }
        let mut w = Self::zero(rank);
        w.coeffs[i - 1] = 1;
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `ω_i` (1-based).
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    /// The `ω_n` coefficient.
    pub fn last(&self) -> i64 {
        self.coeffs[self.rank() - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&a| a >= 0)
    }

    pub fn is_restricted(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0 || a == 1)
    }

    /// `Some(i)` when this weight is the fundamental weight `ω_i`.
    pub fn as_fundamental(&self) -> Option<usize> {
        let mut found = None;
        for (idx, &a) in self.coeffs.iter().enumerate() {
            match a {
                0 => {}
                1 if found.is_none() => found = Some(idx + 1),
                _ => return None,
            }
        }
        found
    }

    pub fn require_dominant(&self) -> Result<(), WeightError> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(WeightError::NotDominant(self.clone()))
        }
    }

    pub fn require_restricted(&self) -> Result<(), WeightError> {
        self.require_dominant()?;
        if self.is_restricted() {
            Ok(())
        } else {
            Err(WeightError::NotRestricted(self.clone()))
        }
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight, WeightError> {
        same_rank(self.rank(), other.rank())?;
        Ok(Weight { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight, WeightError> {
        same_rank(self.rank(), other.rank())?;
        Ok(Weight { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight { coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }

    /// Parses either the ω-coordinate form `"0,1,1"` or the ε form `"e:2,1,0"`.
    pub fn parse_any(s: &str) -> Result<Weight, WeightError> {
        match s.trim().strip_prefix("e:") {
            Some(_) => Ok(from_eps(&s.parse::<EpsWeight>()?)),
            None => s.parse(),
        }
    }
}

impl EpsWeight {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Result<Self, WeightError> {
        let coords: Coords = coords.into_iter().collect();
        if coords.is_empty() {
            return Err(WeightError::ZeroRank);
        }
        Ok(Self { coords })
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank > 0, "rank must be positive");
        Self { coords: SmallVec::from_elem(0, rank) }
    }

    /// The basis vector `ε_i`, `1 <= i <= rank`.
    pub fn unit(rank: usize, i: usize) -> Result<Self, WeightError> {
        if i == 0 || i > rank {
            return Err(WeightError::IndexOutOfRange { index: i, rank });
        }
        let mut e = Self::zero(rank);
        e.coords[i - 1] = 1;
        Ok(e)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Weakly decreasing and non-negative, i.e. the ε-form of a dominant weight.
    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1]) && self.coords.last().is_some_and(|&c| c >= 0)
    }

    pub fn checked_add(&self, other: &EpsWeight) -> Result<EpsWeight, WeightError> {
        same_rank(self.rank(), other.rank())?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &EpsWeight) -> EpsWeight {
        EpsWeight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn checked_sub(&self, other: &EpsWeight) -> Result<EpsWeight, WeightError> {
        same_rank(self.rank(), other.rank())?;
        Ok(EpsWeight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() })
    }

    pub fn neg(&self) -> EpsWeight {
        EpsWeight { coords: self.coords.iter().map(|c| -c).collect() }
    }

    /// Number of non-zero coordinates.
    pub fn support_size(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }
}

fn same_rank(left: usize, right: usize) -> Result<(), WeightError> {
    if left == right {
        Ok(())
    } else {
        Err(WeightError::RankMismatch { left, right })
    }
}

/// `c_j = a_j + a_{j+1} + … + a_n`.
pub fn to_eps(w: &Weight) -> EpsWeight {
    let mut coords: Coords = SmallVec::from_elem(0, w.rank());
    let mut acc = 0;
    for j in (0..w.rank()).rev() {
        acc += w.coeffs[j];
        coords[j] = acc;
    }
    EpsWeight { coords }
}

/// `a_i = c_i − c_{i+1}` with `c_{n+1} = 0`.
pub fn from_eps(e: &EpsWeight) -> Weight {
    let n = e.rank();
    let coeffs = (0..n)
        .map(|i| e.coords[i] - if i + 1 < n { e.coords[i + 1] } else { 0 })
        .collect();
    Weight { coeffs }
}

/// `δ(ω) = Σ a_i·i`.
pub fn delta(w: &Weight) -> i64 {
    w.coeffs.iter().enumerate().map(|(i, a)| a * (i as i64 + 1)).sum()
}

/// `γ(ω) = Σ a_i`.
pub fn gamma(w: &Weight) -> i64 {
    w.coeffs.iter().sum()
}

/// Membership in the root lattice: `δ(ω)` even.
pub fn is_radical(w: &Weight) -> bool {
    delta(w).rem_euclid(2) == 0
}

/// The simple root `α_i` in ε-coordinates.
pub fn simple_root(rank: usize, i: usize) -> Result<EpsWeight, WeightError> {
    if i == 0 || i > rank {
        return Err(WeightError::IndexOutOfRange { index: i, rank });
    }
    let mut e = EpsWeight::zero(rank);
    if i < rank {
        e.coords[i - 1] = 1;
        e.coords[i] = -1;
    } else {
        e.coords[rank - 1] = 2;
    }
    Ok(e)
}

/// `lo ⪯ hi`.
///
/// Solving `hi − lo = Σ k_i α_i` in ε-coordinates gives `k_j = d_1 + … + d_j`
/// for `j < n` and `k_n = (d_1 + … + d_n) / 2`; dominance is non-negativity
/// and integrality of those coefficients.
pub fn dominates(hi: &Weight, lo: &Weight) -> Result<bool, WeightError> {
    same_rank(hi.rank(), lo.rank())?;
    let d = to_eps(hi).checked_sub(&to_eps(lo))?;
    let n = d.rank();
    let mut prefix = 0i64;
    for (k, c) in d.coords.iter().enumerate() {
        prefix += c;
        if k + 1 < n && prefix < 0 {
            return Ok(false);
        }
    }
    Ok(prefix >= 0 && prefix % 2 == 0)
}

/// Dominant weights of the given rank with `δ = total`, i.e. partitions of
/// `total` into at most `rank` parts read as ε-coordinates.
pub fn dominant_with_delta(rank: usize, total: i64) -> Vec<Weight> {
    fn rec(rank: usize, remaining: i64, max_part: i64, prefix: &mut Coords, out: &mut Vec<Weight>) {
        if prefix.len() == rank {
            if remaining == 0 {
                out.push(from_eps(&EpsWeight { coords: prefix.clone() }));
            }
            return;
        }
        let slots = (rank - prefix.len()) as i64;
        // the remaining parts are at most `part` each
        let upper = max_part.min(remaining);
        for part in (0..=upper).rev() {
            if part * slots < remaining {
                break;
            }
            prefix.push(part);
            rec(rank, remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if total >= 0 && rank > 0 {
        rec(rank, total, total, &mut Coords::new(), &mut out);
    }
    out
}

/// All dominant weights of a rank with `δ <= max_delta`, ordered by δ.
pub fn dominant_up_to(rank: usize, max_delta: i64) -> Vec<Weight> {
    (0..=max_delta).flat_map(|m| dominant_with_delta(rank, m)).collect()
}

/// All 2-restricted weights of a rank, in lexicographic coefficient order.
pub fn restricted_weights(rank: usize) -> Vec<Weight> {
    (0..1u64 << rank)
        .map(|mask| {
            Weight::new((0..rank).map(|i| ((mask >> (rank - 1 - i)) & 1) as i64)).expect("rank > 0")
        })
        .collect()
}

/// Dominant `μ` with `μ ⪯ w`, including `w` itself.
pub fn dominant_below(w: &Weight) -> Result<BTreeSet<Weight>, WeightError> {
    w.require_dominant()?;
    let d = delta(w);
    let mut out = BTreeSet::new();
    let mut m = d;
    while m >= 0 {
        for mu in dominant_with_delta(w.rank(), m) {
            if dominates(w, &mu)? {
                out.insert(mu);
            }
        }
        m -= 2;
    }
    Ok(out)
}

/// The unique dominant weight in the Weyl orbit of `e`.
pub fn dominant_representative(e: &EpsWeight) -> Weight {
    from_eps(&dominant_eps(e))
}

pub(crate) fn dominant_eps(e: &EpsWeight) -> EpsWeight {
    let mut coords: Coords = e.coords.iter().map(|c| c.abs()).collect();
    coords.sort_unstable_by(|a, b| b.cmp(a));
    EpsWeight { coords }
}

fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Visits each distinct signed permutation of `e` exactly once.
pub fn try_for_each_orbit_member<B>(
    e: &EpsWeight,
    f: &mut impl FnMut(&EpsWeight) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut perm: Coords = e.coords.iter().map(|c| c.abs()).collect();
    perm.sort_unstable();
    let support = perm.iter().filter(|&&c| c != 0).count();
    loop {
        let nonzero: SmallVec<[usize; 6]> =
            perm.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect();
        for mask in 0u64..(1u64 << support) {
            let mut v = perm.clone();
            for (bit, &pos) in nonzero.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    v[pos] = -v[pos];
                }
            }
            f(&EpsWeight { coords: v })?;
        }
        if !next_permutation(&mut perm) {
            return ControlFlow::Continue(());
        }
    }
}

/// Size of the Weyl orbit of `e`: multinomial count of coordinate
/// arrangements times the sign choices on the support.
pub fn orbit_size(e: &EpsWeight) -> u64 {
    let rep = dominant_eps(e);
    let n = rep.rank() as u64;
    let mut count: u64 = (1..=n).product();
    let mut run = 1u64;
    for w in rep.coords.windows(2) {
        if w[0] == w[1] {
            run += 1;
            count /= run;
        } else {
            run = 1;
        }
    }
    count << rep.support_size()
}

/// The Weyl orbit of `e` as a Weyl-closed [`WeightSet`].
pub fn weyl_orbit(e: &EpsWeight) -> WeightSet {
    WeightSet::closed_from_reps(e.rank(), std::iter::once(dominant_eps(e)))
}

#[derive(Debug, Clone)]
enum Members {
    Explicit(BTreeSet<EpsWeight>),
    /// Weyl-closed; stores dominant representatives (ε-form) of the orbits.
    Closed(BTreeSet<EpsWeight>),
}

/// A finite set of ε-weights of a fixed rank.
///
/// Weyl-closed sets are held as their dominant representatives; membership,
/// cardinality and iteration expand orbits on demand.
#[derive(Debug, Clone)]
pub struct WeightSet {
    rank: usize,
    members: Members,
}

impl WeightSet {
    pub fn explicit(rank: usize, members: impl IntoIterator<Item = EpsWeight>) -> Result<Self, WeightError> {
        if rank == 0 {
            return Err(WeightError::ZeroRank);
        }
        let mut set = BTreeSet::new();
        for m in members {
            same_rank(rank, m.rank())?;
            set.insert(m);
        }
        Ok(Self { rank, members: Members::Explicit(set) })
    }

    /// The union of the Weyl orbits of the given dominant weights.
    pub fn from_dominant(rank: usize, reps: impl IntoIterator<Item = Weight>) -> Result<Self, WeightError> {
        let mut set = BTreeSet::new();
        for w in reps {
            same_rank(rank, w.rank())?;
            w.require_dominant()?;
            set.insert(to_eps(&w));
        }
        Ok(Self { rank, members: Members::Closed(set) })
    }

    pub(crate) fn closed_from_reps(rank: usize, reps: impl IntoIterator<Item = EpsWeight>) -> Self {
        Self { rank, members: Members::Closed(reps.into_iter().map(|e| dominant_eps(&e)).collect()) }
    }

    pub fn singleton_zero(rank: usize) -> Self {
        Self::closed_from_reps(rank, std::iter::once(EpsWeight::zero(rank)))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_weyl_closed(&self) -> bool {
        matches!(self.members, Members::Closed(_))
    }

    pub fn len(&self) -> u64 {
        match &self.members {
            Members::Explicit(s) => s.len() as u64,
            Members::Closed(reps) => reps.iter().map(orbit_size).sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match &self.members {
            Members::Explicit(s) => s.is_empty(),
            Members::Closed(reps) => reps.is_empty(),
        }
    }

    pub fn contains(&self, e: &EpsWeight) -> bool {
        if e.rank() != self.rank {
            return false;
        }
        match &self.members {
            Members::Explicit(s) => s.contains(e),
            Members::Closed(reps) => reps.contains(&dominant_eps(e)),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&EpsWeight::zero(self.rank))
    }

    /// Dominant members, as ω-coordinate weights, in ascending order.
    pub fn dominant_members(&self) -> Vec<Weight> {
        match &self.members {
            Members::Explicit(s) => s.iter().filter(|e| e.is_dominant()).map(from_eps).collect(),
            Members::Closed(reps) => {
                let mut v: Vec<Weight> = reps.iter().map(from_eps).collect();
                v.sort();
                v
            }
        }
    }

    pub fn try_for_each<B>(&self, mut f: impl FnMut(&EpsWeight) -> ControlFlow<B>) -> ControlFlow<B> {
        match &self.members {
            Members::Explicit(s) => {
                for e in s {
                    f(e)?;
                }
                ControlFlow::Continue(())
            }
            Members::Closed(reps) => {
                for r in reps {
                    try_for_each_orbit_member(r, &mut f)?;
                }
                ControlFlow::Continue(())
            }
        }
    }

    pub fn for_each(&self, mut f: impl FnMut(&EpsWeight)) {
        let _ = self.try_for_each(|e| {
            f(e);
            ControlFlow::<()>::Continue(())
        });
    }

    pub fn any(&self, mut pred: impl FnMut(&EpsWeight) -> bool) -> bool {
        self.try_for_each(|e| if pred(e) { ControlFlow::Break(()) } else { ControlFlow::Continue(()) })
            .is_break()
    }

    pub fn all(&self, mut pred: impl FnMut(&EpsWeight) -> bool) -> bool {
        !self.any(|e| !pred(e))
    }

    pub fn to_sorted_vec(&self) -> Vec<EpsWeight> {
        match &self.members {
            Members::Explicit(s) => s.iter().cloned().collect(),
            Members::Closed(_) => {
                let mut v = Vec::with_capacity(self.len() as usize);
                self.for_each(|e| v.push(e.clone()));
                v.sort();
                v
            }
        }
    }

    /// Checks closure under signed permutations by expansion.
    pub fn check_weyl_closed(&self) -> bool {
        match &self.members {
            Members::Closed(_) => true,
            Members::Explicit(s) => s.iter().all(|e| {
                !try_for_each_orbit_member(e, &mut |m: &EpsWeight| {
                    if s.contains(m) {
                        ControlFlow::Continue(())
                    } else {
                        ControlFlow::Break(())
                    }
                })
                .is_break()
            }),
        }
    }

    /// Converts an explicit set that happens to be Weyl-closed into the
    /// compact representation; other sets are returned unchanged.
    pub fn compact(self) -> Self {
        match &self.members {
            Members::Explicit(s) if self.check_weyl_closed() => {
                let reps = s.iter().filter(|e| e.is_dominant()).cloned().collect();
                Self { rank: self.rank, members: Members::Closed(reps) }
            }
            _ => self,
        }
    }

    pub(crate) fn closed_reps(&self) -> Option<&BTreeSet<EpsWeight>> {
        match &self.members {
            Members::Closed(r) => Some(r),
            Members::Explicit(_) => None,
        }
    }
}

impl PartialEq for WeightSet {
    fn eq(&self, other: &Self) -> bool {
        if self.rank != other.rank {
            return false;
        }
        match (&self.members, &other.members) {
            (Members::Closed(a), Members::Closed(b)) => a == b,
            (Members::Explicit(a), Members::Explicit(b)) => a == b,
            _ => self.len() == other.len() && self.to_sorted_vec() == other.to_sorted_vec(),
        }
    }
}

impl Eq for WeightSet {}

fn parse_list(s: &str) -> Result<Coords, WeightError> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| WeightError::Parse(s.to_string())))
        .collect()
}

impl FromStr for Weight {
    type Err = WeightError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s.starts_with("e:") {
            return Err(WeightError::Parse(s.to_string()));
        }
        Weight::new(parse_list(s)?)
    }
}

impl FromStr for EpsWeight {
    type Err = WeightError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().strip_prefix("e:").ok_or_else(|| WeightError::Parse(s.to_string()))?;
        EpsWeight::new(parse_list(body)?)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    for (i, c) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{c}")?;
    }
    Ok(())
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.coeffs)
    }
}

impl fmt::Display for EpsWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("e:")?;
        write_list(f, &self.coords)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for EpsWeight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
