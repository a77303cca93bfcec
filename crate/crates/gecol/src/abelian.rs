//! Finite Abelian groups in invariant-factor form, with exact modular
//! arithmetic and enumeration of all isomorphism classes of a given order.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid group factor {0}: every factor must be at least 2")]
    InvalidFactor(u64),
    #[error("invalid group order {0}: order must be positive")]
    InvalidOrder(i64),
    #[error("invalid element: expected {expected} residues, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("cannot parse group spec {0:?}: expected e.g. \"Z4\" or \"Z2xZ4\"")]
    ParseError(String),
}

/// A group element as a tuple of residues, one per invariant factor,
/// componentwise reduced. The trivial group's sole element is the empty tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElt(pub Vec<u64>);

impl GroupElt {
    pub fn residues(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "(")?;
            for (i, r) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", r)?;
            }
            write!(f, ")")
        }
    }
}

/// A finite Abelian group, stored as its invariant factors n₁ | n₂ | … | n_r.
///
/// Two groups are isomorphic exactly when their factor lists are equal, so
/// `==` is isomorphism. Elements are addressed either as residue tuples
/// ([`GroupElt`]) or as dense indices in lexicographic order; a Cayley table
/// is precomputed so index arithmetic is table lookups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Group {
    factors: Vec<u64>,
    order: u64,
    add_table: Vec<u16>,
    neg_table: Vec<u16>,
}

impl Group {
    /// Build a group from an arbitrary list of cyclic orders, normalizing to
    /// invariant-factor form. `Group::new(&[3, 2])` is ℤ₆; the empty list is
    /// the trivial group. Inputs already in chain form pass through unchanged.
    pub fn new(factors: &[u64]) -> Result<Group, GroupError> {
        for &f in factors {
            if f <= 1 {
                return Err(GroupError::InvalidFactor(f));
            }
        }
        let invariant = normalize_factors(factors);
        let order: u64 = invariant.iter().product();
        assert!(order <= u16::MAX as u64, "group order {} too large", order);
        let n = order as usize;
        let mut add_table = vec![0u16; n * n];
        let mut neg_table = vec![0u16; n];
        let elts: Vec<Vec<u64>> = enumerate_residues(&invariant);
        for (i, a) in elts.iter().enumerate() {
            let neg: Vec<u64> = a
                .iter()
                .zip(&invariant)
                .map(|(&r, &m)| (m - r) % m)
                .collect();
            neg_table[i] = index_of_residues(&invariant, &neg);
            for (j, b) in elts.iter().enumerate() {
                let sum: Vec<u64> = a
                    .iter()
                    .zip(b.iter())
                    .zip(&invariant)
                    .map(|((&x, &y), &m)| (x + y) % m)
                    .collect();
                add_table[i * n + j] = index_of_residues(&invariant, &sum);
            }
        }
        Ok(Group {
            factors: invariant,
            order,
            add_table,
            neg_table,
        })
    }

    pub fn trivial() -> Group {
        Group::new(&[]).unwrap()
    }

    pub fn cyclic(n: u64) -> Result<Group, GroupError> {
        if n == 1 {
            Group::new(&[])
        } else {
            Group::new(&[n])
        }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> GroupElt {
        GroupElt(vec![0; self.factors.len()])
    }

    pub fn check(&self, e: &GroupElt) -> Result<(), GroupError> {
        if e.0.len() != self.factors.len() {
            return Err(GroupError::WrongArity {
                expected: self.factors.len(),
                got: e.0.len(),
            });
        }
        Ok(())
    }

    /// Dense index of an element in lexicographic enumeration order.
    pub fn index_of(&self, e: &GroupElt) -> Result<u16, GroupError> {
        self.check(e)?;
        let reduced: Vec<u64> = e
            .0
            .iter()
            .zip(&self.factors)
            .map(|(&r, &m)| r % m)
            .collect();
        Ok(index_of_residues(&self.factors, &reduced))
    }

    pub fn elt_at(&self, idx: u16) -> GroupElt {
        debug_assert!((idx as u64) < self.order);
        let mut rem = idx as u64;
        let mut residues = vec![0u64; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            residues[i] = rem % self.factors[i];
            rem /= self.factors[i];
        }
        GroupElt(residues)
    }

    #[inline]
    pub fn add_idx(&self, a: u16, b: u16) -> u16 {
        self.add_table[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn neg_idx(&self, a: u16) -> u16 {
        self.neg_table[a as usize]
    }

    #[inline]
    pub fn sub_idx(&self, a: u16, b: u16) -> u16 {
        self.add_idx(a, self.neg_idx(b))
    }

    pub fn add(&self, a: &GroupElt, b: &GroupElt) -> Result<GroupElt, GroupError> {
        Ok(self.elt_at(self.add_idx(self.index_of(a)?, self.index_of(b)?)))
    }

    pub fn sub(&self, a: &GroupElt, b: &GroupElt) -> Result<GroupElt, GroupError> {
        Ok(self.elt_at(self.sub_idx(self.index_of(a)?, self.index_of(b)?)))
    }

    pub fn neg(&self, a: &GroupElt) -> Result<GroupElt, GroupError> {
        Ok(self.elt_at(self.neg_idx(self.index_of(a)?)))
    }

    /// All elements in lexicographic order of residue tuples.
    pub fn elements(&self) -> Vec<GroupElt> {
        (0..self.order as u16).map(|i| self.elt_at(i)).collect()
    }

    /// Parse "Z6", "Z2xZ4", "Z1" (trivial). Factors need not be a chain;
    /// normalization applies.
    pub fn parse(spec: &str) -> Result<Group, GroupError> {
        let mut factors = Vec::new();
        for part in spec.split('x') {
            let part = part.trim();
            let digits = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('z'))
                .ok_or_else(|| GroupError::ParseError(spec.to_string()))?;
            let n: u64 = digits
                .parse()
                .map_err(|_| GroupError::ParseError(spec.to_string()))?;
            if n == 0 {
                return Err(GroupError::ParseError(spec.to_string()));
            }
            if n > 1 {
                factors.push(n);
            }
        }
        Group::new(&factors)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "Z1");
        }
        for (i, n) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z{}", n)?;
        }
        Ok(())
    }
}

impl Serialize for Group {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.factors.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Group {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Group, D::Error> {
        let factors = Vec::<u64>::deserialize(d)?;
        Group::new(&factors).map_err(serde::de::Error::custom)
    }
}

fn index_of_residues(factors: &[u64], residues: &[u64]) -> u16 {
    let mut idx = 0u64;
    for (r, m) in residues.iter().zip(factors) {
        idx = idx * m + r;
    }
    idx as u16
}

fn enumerate_residues(factors: &[u64]) -> Vec<Vec<u64>> {
    let order: u64 = factors.iter().product();
    let mut out = Vec::with_capacity(order as usize);
    let mut cur = vec![0u64; factors.len()];
    loop {
        out.push(cur.clone());
        // odometer increment, least significant last
        let mut i = factors.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < factors[i] {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Normalize an arbitrary factor list to the invariant-factor chain:
/// split each factor into prime powers, then zip the per-prime exponent
/// lists largest-first.
fn normalize_factors(factors: &[u64]) -> Vec<u64> {
    use std::collections::BTreeMap;
    let mut exps: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &f in factors {
        for (p, e) in factorize(f) {
            exps.entry(p).or_default().push(e);
        }
    }
    let mut depth = 0;
    for v in exps.values_mut() {
        v.sort_unstable_by(|a, b| b.cmp(a));
        depth = depth.max(v.len());
    }
    let mut chain = Vec::with_capacity(depth);
    for j in 0..depth {
        let mut val = 1u64;
        for (&p, v) in &exps {
            if let Some(&e) = v.get(j) {
                val *= p.pow(e);
            }
        }
        chain.push(val);
    }
    chain.reverse(); // ascending: each divides the next
    chain
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All isomorphism classes of Abelian groups of order `n`, each exactly once,
/// built from partitions of the prime-power exponents.
pub fn abelian_groups_of_order(n: i64) -> Result<Vec<Group>, GroupError> {
    if n <= 0 {
        return Err(GroupError::InvalidOrder(n));
    }
    let n = n as u64;
    if n == 1 {
        return Ok(vec![Group::trivial()]);
    }
    let primes = factorize(n);
    let per_prime: Vec<Vec<Vec<u32>>> = primes.iter().map(|&(_, e)| partitions(e)).collect();
    let mut groups = Vec::new();
    let mut choice = vec![0usize; primes.len()];
    loop {
        let mut raw = Vec::new();
        for (pi, &(p, _)) in primes.iter().enumerate() {
            for &e in &per_prime[pi][choice[pi]] {
                raw.push(p.pow(e));
            }
        }
        groups.push(Group::new(&raw)?);
        let mut i = primes.len();
        loop {
            if i == 0 {
                return Ok(groups);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < per_prime[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Partitions of `k` as descending lists, ordered lexicographically
/// descending: [k], [k-1,1], ..., [1,...,1].
pub fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn rec(k: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut part = max.min(k);
        while part >= 1 {
            prefix.push(part);
            rec(k - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}
