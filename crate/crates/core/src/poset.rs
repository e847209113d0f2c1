//! The monomial model `A_n(m)` of Young's lattice `L(m,n)`.
//!
//! A partition `0 <= λ_1 <= ... <= λ_m <= n` is stored as the exponent
//! vector `(a_0, ..., a_n)` of the monomial `z_{λ_1} ... z_{λ_m}`, where
//! `a_i` counts the parts equal to `i`. The order is the suffix-sum order:
//! `μ <= ν` iff `Σ_{i>=j} a_i <= Σ_{i>=j} b_i` for every `1 <= j <= n`.
//! Adding one box to a row of the diagram moves one unit from slot `i-1`
//! to slot `i`; that move is the `i`-th color of the Hasse diagram.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A degree-`m` monomial in `z_0, ..., z_n`, identified with its exponent
/// vector. Values are immutable; equality is structural and `Ord` is the
/// lexicographic order on exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::EmptyExponents);
        }
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &a| acc.checked_add(a))
            .ok_or(Error::Overflow)?;
        // weights are bounded by m*n and must fit a signed machine word
        (degree as i64)
            .checked_mul(exps.len() as i64)
            .ok_or(Error::Overflow)?;
        Ok(Monomial { exps, degree })
    }

    /// `z_i^e` in `A_n`.
    pub fn power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n + 1];
        exps[i] = e;
        Monomial { exps, degree: e }
    }

    /// The unit monomial of `A_n`.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: vec![0; n + 1],
            degree: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.exps.len() - 1
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.exps
    }

    /// `wt(μ) = Σ a_i (n - 2i)`.
    pub fn weight(&self) -> i64 {
        let n = self.n() as i64;
        self.exps
            .iter()
            .enumerate()
            .map(|(i, &a)| a as i64 * (n - 2 * i as i64))
            .sum()
    }

    /// `rk(μ) = Σ i a_i`; always `wt = m n - 2 rk`.
    pub fn rank(&self) -> i64 {
        self.exps
            .iter()
            .enumerate()
            .map(|(i, &a)| a as i64 * i as i64)
            .sum()
    }

    pub fn from_partition(p: &Partition) -> Self {
        let mut exps = vec![0u32; p.max_part as usize + 1];
        for &part in &p.parts {
            exps[part as usize] += 1;
        }
        Monomial {
            exps,
            degree: p.parts.len() as u32,
        }
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .exps
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i as u32, a as usize))
            .collect();
        Partition {
            parts,
            max_part: self.n() as u32,
        }
    }

    /// Suffix-sum comparison `self <= other`.
    pub fn leq(&self, other: &Monomial) -> Result<bool> {
        self.check_same_slice(other)?;
        let (mut s, mut t) = (0u32, 0u32);
        for j in (1..=self.n()).rev() {
            s += self.exps[j];
            t += other.exps[j];
            if s > t {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn check_same_slice(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    /// Move one unit from slot `c-1` to slot `c`: rank +1, weight -2.
    pub fn apply_color(&self, c: ColorMove) -> Result<Monomial> {
        let color = c.get();
        if color > self.n() {
            return Err(Error::ColorOutOfRange {
                color,
                n: self.n(),
            });
        }
        if self.exps[color - 1] == 0 {
            return Err(Error::IllegalMove {
                color,
                slot: color - 1,
            });
        }
        let mut exps = self.exps.clone();
        exps[color - 1] -= 1;
        exps[color] += 1;
        Ok(Monomial {
            exps,
            degree: self.degree,
        })
    }

    /// Inverse of [`Monomial::apply_color`]: move one unit from slot `c` back to `c-1`.
    pub fn unapply_color(&self, c: ColorMove) -> Result<Monomial> {
        let color = c.get();
        if color > self.n() {
            return Err(Error::ColorOutOfRange {
                color,
                n: self.n(),
            });
        }
        if self.exps[color] == 0 {
            return Err(Error::IllegalMove { color, slot: color });
        }
        let mut exps = self.exps.clone();
        exps[color] -= 1;
        exps[color - 1] += 1;
        Ok(Monomial {
            exps,
            degree: self.degree,
        })
    }

    /// The involution `z_i -> z_{n-i}`.
    pub fn tau(&self) -> Monomial {
        let mut exps = self.exps.clone();
        exps.reverse();
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Adjacent pair sums `a_j + a_{j+1}` for `0 <= j < n`.
    pub fn pair_sums(&self) -> Vec<u32> {
        self.exps.windows(2).map(|w| w[0] + w[1]).collect()
    }

    /// `max_j (a_j + a_{j+1})`, or `None` when `n = 0`.
    pub fn max_pair_sum(&self) -> Option<u32> {
        self.exps.windows(2).map(|w| w[0] + w[1]).max()
    }

    /// Product of monomials in the same ring.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Monomial::new(exps)
    }

    /// Exact quotient `self / other`, or `None` if `other` does not divide.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if self.n() != other.n() {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial {
            degree: self.degree - other.degree,
            exps,
        })
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Accepts `1,1,1,0,1,1`, `(1,1,1,0,1,1)` or the JSON form `[1,1,1,0,1,1]`.
impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        let exps = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Precondition(format!("not an exponent: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Monomial::new(exps)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let exps = Vec::<u32>::deserialize(d)?;
        Monomial::new(exps).map_err(serde::de::Error::custom)
    }
}

/// A partition `0 <= λ_1 <= ... <= λ_m <= n` in `L(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<u32>,
    #[serde(skip)]
    max_part: u32,
}

impl Partition {
    pub fn new(parts: Vec<u32>, n: u32) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly increasing"
            )));
        }
        if let Some(&p) = parts.iter().find(|&&p| p > n) {
            return Err(Error::InvalidPartition(format!("part {p} exceeds bound {n}")));
        }
        Ok(Partition { parts, max_part: n })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `m`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Upper bound `n` on each part.
    pub fn bound(&self) -> u32 {
        self.max_part
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Componentwise comparison; both partitions must live in the same `L(m,n)`.
    pub fn leq(&self, other: &Partition) -> Result<bool> {
        if self.parts.len() != other.parts.len() {
            return Err(Error::DegreeMismatch {
                expected: self.parts.len() as u32,
                found: other.parts.len() as u32,
            });
        }
        Ok(self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b))
    }

    /// Transposed diagram: maps `L(m, n)` onto `L(n, m)` preserving containment.
    pub fn conjugate(&self) -> Partition {
        let m = self.parts.len() as u32;
        let mut parts: Vec<u32> = (1..=self.max_part)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        parts.reverse();
        Partition { parts, max_part: m }
    }
}

/// The `i`-th Hasse edge color, `1 <= i <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorMove(usize);

impl ColorMove {
    pub fn new(color: usize) -> Result<Self> {
        if color == 0 {
            return Err(Error::ColorOutOfRange { color, n: 0 });
        }
        Ok(ColorMove(color))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// `C(n + m, n)`, saturating at `u64::MAX`.
pub fn slice_size(n: usize, m: u32) -> u64 {
    let k = n.min(m as usize) as u64;
    let total = n as u64 + m as u64;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (total - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All of `A_n(m)`, starting at `z_0^m` and descending lexicographically.
pub fn enumerate(n: usize, m: u32) -> Enumerate {
    let mut first = vec![0; n + 1];
    first[0] = m;
    Enumerate {
        next: Some(first),
        degree: m,
    }
}

#[derive(Debug, Clone)]
pub struct Enumerate {
    next: Option<Vec<u32>>,
    degree: u32,
}

impl Iterator for Enumerate {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let current = self.next.take()?;
        let n = current.len() - 1;
        if let Some(i) = (0..n).rev().find(|&i| current[i] > 0) {
            let mut succ = current.clone();
            let tail: u32 = succ[i + 1..].iter().sum();
            succ[i] -= 1;
            succ[i + 1..].iter_mut().for_each(|a| *a = 0);
            succ[i + 1] = tail + 1;
            self.next = Some(succ);
        }
        Some(Monomial {
            exps: current,
            degree: self.degree,
        })
    }
}

pub(crate) fn check_cap(size: u64, cap: u64) -> Result<()> {
    if size > cap {
        Err(Error::SizeCap { size, cap })
    } else {
        Ok(())
    }
}

/// Every colored Hasse edge `(μ, μ·color, color)` of `A_n(m)`.
pub fn hasse_edges(n: usize, m: u32, cap: u64) -> Result<Vec<(Monomial, Monomial, ColorMove)>> {
    check_cap(slice_size(n, m), cap)?;
    let mut edges = Vec::new();
    for mu in enumerate(n, m) {
        for color in 1..=n {
            if mu.exps[color - 1] > 0 {
                let c = ColorMove(color);
                let nu = mu.apply_color(c)?;
                edges.push((mu.clone(), nu, c));
            }
        }
    }
    Ok(edges)
}
