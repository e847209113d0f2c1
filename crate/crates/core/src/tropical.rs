//! Secant complexes of the path graph and their tropical polynomials.
//!
//! `Γ_{n,r}` is the complex of `r`-fold unions of edges of the path on
//! `{0, ..., n}`; its facets are `r` pairwise disjoint edges. The monomial
//! ideal `I_{n,r}` is generated by the `<₁`-chains `z_{i_0} ... z_{i_r}`
//! (gaps at least two) and decomposes as an intersection of the primes `𝔪^F`
//! over the complements `F` of facets. For a monomial `μ`,
//!
//! ```text
//! f_{n,r}(μ) = min_F Σ_{i ∈ F} a_i = deg(μ) - max cover of μ by r disjoint edges
//! ```
//!
//! and `μ ∈ I_{n,r}^{(s)}` iff `f_{n,r}(μ) >= s`.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Monomial;

/// `k = ⌊n/2⌋`, the largest secant index.
pub fn max_secant(n: usize) -> usize {
    n / 2
}

fn check_r(n: usize, r: usize) -> Result<()> {
    if r > max_secant(n) {
        Err(Error::SecantIndexOutOfRange { r, n })
    } else {
        Ok(())
    }
}

/// `r` disjoint edges `{l, l+1}` of the path graph, stored by left endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Facet {
    left: Vec<usize>,
}

impl Facet {
    pub fn left_endpoints(&self) -> &[usize] {
        &self.left
    }

    /// The covered vertices, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        self.left.iter().flat_map(|&l| [l, l + 1]).collect()
    }

    /// `α(F, μ)`, the amount of `μ` covered by this facet.
    pub fn covered(&self, mu: &Monomial) -> u32 {
        let a = mu.exponents();
        self.left.iter().map(|&l| a[l] + a[l + 1]).sum()
    }
}

/// Support of an irreducible component `𝔪^F` of `I_{n,r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Component {
    indices: Vec<usize>,
}

impl Component {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn sum(&self, mu: &Monomial) -> u32 {
        let a = mu.exponents();
        self.indices.iter().map(|&i| a[i]).sum()
    }
}

/// A minimal generator `z_{i_0} ... z_{i_r}` of `I_{n,r}`: a `<₁`-chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Generator {
    indices: Vec<usize>,
}

impl Generator {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[1] < w[0] + 2) {
            return Err(Error::Precondition(format!(
                "{indices:?} is not a <1-chain"
            )));
        }
        Ok(Generator { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn to_monomial(&self, n: usize) -> Result<Monomial> {
        let mut exps = vec![0; n + 1];
        for &i in &self.indices {
            if i > n {
                return Err(Error::Precondition(format!("index {i} exceeds n = {n}")));
            }
            exps[i] += 1;
        }
        Monomial::new(exps)
    }
}

/// Strictly increasing sequences of length `len` in `[lo, hi]` with gaps of at least 2.
fn gapped_sequences(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let remaining = len - cur.len();
        // the last remaining entries need 2*(remaining-1) room after this one
        let mut x = lo;
        while x + 2 * (remaining - 1) <= hi {
            cur.push(x);
            go(len, x + 2, hi, cur, out);
            cur.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    go(len, lo, hi, &mut Vec::with_capacity(len), &mut out);
    out
}

pub fn facets(n: usize, r: usize) -> Result<Vec<Facet>> {
    check_r(n, r)?;
    if r == 0 {
        return Ok(vec![Facet { left: vec![] }]);
    }
    Ok(gapped_sequences(r, 0, n - 1)
        .into_iter()
        .map(|left| Facet { left })
        .collect())
}

/// Sets `{2λ_0, 2λ_1 + 1, ..., 2λ_{n-2r} + n - 2r}` over `0 <= λ_0 <= ... <= λ_{n-2r} <= r`.
fn lambda_components(n: usize, r: usize) -> Vec<Component> {
    fn go(n: usize, r: usize, j: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Component>) {
        if j == n - 2 * r + 1 {
            out.push(Component {
                indices: cur.clone(),
            });
            return;
        }
        for lambda in min..=r {
            cur.push(2 * lambda + j);
            go(n, r, j + 1, lambda, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, r, 0, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Irredundant irreducible decomposition of `I_{n,r}`, lexicographically sorted.
pub fn components(n: usize, r: usize) -> Result<Vec<Component>> {
    check_r(n, r)?;
    if r == 0 {
        return Err(Error::SecantIndexOutOfRange { r, n });
    }
    Ok(lambda_components(n, r))
}

pub fn generators(n: usize, r: usize) -> Result<Vec<Generator>> {
    check_r(n, r)?;
    Ok(gapped_sequences(r + 1, 0, n)
        .into_iter()
        .map(|indices| Generator { indices })
        .collect())
}

/// `f_{n,r}` by direct minimization over the irreducible components.
pub fn f_oracle(mu: &Monomial, r: usize) -> Result<u32> {
    let n = mu.n();
    check_r(n, r)?;
    if r == 0 {
        return Ok(mu.degree());
    }
    Ok(lambda_components(n, r)
        .iter()
        .map(|c| c.sum(mu))
        .min()
        .expect("I_{n,r} has at least one component"))
}

/// Largest amount of `μ` covered by exactly `r` disjoint path edges, with a maximizing facet.
///
/// `best[i][t]` is the best cover of vertices `0..=i` using exactly `t` edges:
/// `best[i][t] = max(best[i-1][t], best[i-2][t-1] + a_{i-1} + a_i)`.
pub fn max_cover(mu: &Monomial, r: usize) -> Result<(u32, Facet)> {
    let n = mu.n();
    check_r(n, r)?;
    let a = mu.exponents();
    // rows indexed by i + 1 so that row 0 is the empty prefix
    let mut best = vec![vec![None::<u32>; r + 1]; n + 2];
    for row in best.iter_mut() {
        row[0] = Some(0);
    }
    for i in 1..=n {
        for t in 1..=r {
            let skip = best[i][t];
            let take = best[i - 1][t - 1].map(|b| b + a[i - 1] + a[i]);
            best[i + 1][t] = skip.max(take);
        }
    }
    let value = best[n + 1][r].expect("r <= n/2 disjoint edges always fit");

    let mut left = Vec::with_capacity(r);
    let (mut row, mut t) = (n + 1, r);
    while t > 0 {
        if best[row - 1][t] == best[row][t] {
            row -= 1;
        } else {
            // edge {row-2, row-1}
            left.push(row - 2);
            row -= 2;
            t -= 1;
        }
    }
    left.reverse();
    Ok((value, Facet { left }))
}

/// `f_{n,r}` as degree minus the maximum edge cover (production path).
pub fn f_dp(mu: &Monomial, r: usize) -> Result<u32> {
    let (cover, _) = max_cover(mu, r)?;
    Ok(mu.degree() - cover)
}

/// Memo of full f-vectors keyed by exponent vector. Readers share the lock;
/// insertions take it exclusively.
#[derive(Debug, Default)]
pub struct FCache {
    map: RwLock<HashMap<Monomial, Arc<[u32]>>>,
}

impl FCache {
    pub fn get_or_compute(&self, mu: &Monomial) -> Arc<[u32]> {
        if let Some(v) = self.map.read().expect("f-cache poisoned").get(mu) {
            return Arc::clone(v);
        }
        let v: Arc<[u32]> = compute_f_vector(mu).into();
        self.map
            .write()
            .expect("f-cache poisoned")
            .entry(mu.clone())
            .or_insert(v)
            .clone()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("f-cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().expect("f-cache poisoned").clear();
    }
}

static F_CACHE: LazyLock<FCache> = LazyLock::new(FCache::default);

fn compute_f_vector(mu: &Monomial) -> Vec<u32> {
    (0..=max_secant(mu.n()))
        .map(|r| f_dp(mu, r).expect("r within range"))
        .collect()
}

/// `(f_{n,0}(μ), ..., f_{n,k}(μ))`, memoized process-wide.
pub fn f_vector(mu: &Monomial) -> Arc<[u32]> {
    F_CACHE.get_or_compute(mu)
}

pub fn f_cache() -> &'static FCache {
    &F_CACHE
}

/// `μ ∈ I_{n,r}^{(s)}`.
pub fn symbolic_member(mu: &Monomial, r: usize, s: u32) -> Result<bool> {
    check_r(mu.n(), r)?;
    Ok(f_vector(mu)[r] >= s)
}

/// `deg_r(μ) = f_r - 2 f_{r+1} + f_{r+2}` with `f_j = 0` past `k`.
pub fn deg_r(mu: &Monomial, r: usize) -> Result<u32> {
    check_r(mu.n(), r)?;
    Ok(deg_vector(mu)[r])
}

/// `(deg_0(μ), ..., deg_k(μ))`.
pub fn deg_vector(mu: &Monomial) -> Vec<u32> {
    let f = f_vector(mu);
    let at = |j: usize| f.get(j).copied().unwrap_or(0) as i64;
    (0..f.len())
        .map(|r| {
            let d = at(r) - 2 * at(r + 1) + at(r + 2);
            assert!(d >= 0, "negative second difference of f at r = {r} for {mu}");
            d as u32
        })
        .collect()
}
