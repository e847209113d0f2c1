//! Canonical (lexicographically minimal) maximal factorization of a monomial
//! into minimal generators of the ideals `I_{n,r}`, displayed as a tableau.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Monomial;
use crate::tropical::{deg_vector, max_secant};

/// Rows are `<₁`-chains, longest first. `deg_r(μ)` rows have length `r + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    /// Number of rows of each length `1, ..., k + 1`.
    pub fn census(&self, n: usize) -> Vec<u32> {
        let mut out = vec![0; max_secant(n) + 1];
        for row in &self.rows {
            if let Some(slot) = row.len().checked_sub(1).and_then(|i| out.get_mut(i)) {
                *slot += 1;
            }
        }
        out
    }

    /// Boxes lying outside the first `r` columns.
    pub fn boxes_outside(&self, r: usize) -> u32 {
        self.rows.iter().map(|row| row.len().saturating_sub(r) as u32).sum()
    }
}

/// Length of the longest `<₁`-chain in the multiset using entries `>= from`.
fn longest_from(counts: &[u32], from: usize) -> usize {
    let mut len = 0;
    let mut i = from;
    while i < counts.len() {
        if counts[i] > 0 {
            len += 1;
            i += 2;
        } else {
            i += 1;
        }
    }
    len
}

fn smallest_chain(counts: &[u32], len: usize) -> Vec<usize> {
    let mut row = Vec::with_capacity(len);
    let mut lo = 0;
    for step in 0..len {
        let need = len - step - 1;
        let pick = (lo..counts.len())
            .find(|&i| counts[i] > 0 && longest_from(counts, i + 2) >= need)
            .expect("a chain of the requested length exists");
        row.push(pick);
        lo = pick + 2;
    }
    row
}

/// Greedy longest-first extraction of lexicographically smallest `<₁`-chains.
///
/// Fails if the resulting row census disagrees with `deg_r(μ)`.
pub fn canonical_tableau(mu: &Monomial) -> Result<Tableau> {
    let mut counts = mu.exponents().to_vec();
    let mut rows = Vec::new();
    loop {
        let len = longest_from(&counts, 0);
        if len == 0 {
            break;
        }
        let row = smallest_chain(&counts, len);
        for &i in &row {
            counts[i] -= 1;
        }
        rows.push(row);
    }
    let tableau = Tableau { rows };
    let census = tableau.census(mu.n());
    let degs = deg_vector(mu);
    if census != degs {
        return Err(Error::Verification(format!(
            "canonical tableau of {mu} has row census {census:?} but deg vector is {degs:?}"
        )));
    }
    Ok(tableau)
}

/// Checks the tableau invariants of `t` against `μ`, including the census.
pub fn verify_tableau(mu: &Monomial, t: &Tableau) -> bool {
    let n = mu.n();
    let rows = t.rows();
    if rows.iter().any(|r| r.is_empty()) {
        return false;
    }
    if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
        return false;
    }
    let is_chain = |r: &Vec<usize>| r.iter().all(|&i| i <= n) && r.windows(2).all(|w| w[1] >= w[0] + 2);
    if !rows.iter().all(is_chain) {
        return false;
    }
    let mut counts = vec![0u32; n + 1];
    for &i in rows.iter().flatten() {
        counts[i] += 1;
    }
    if counts != mu.exponents() {
        return false;
    }
    // minimality: every entry a has a or a-1 in each preceding row
    for (t_idx, row) in rows.iter().enumerate() {
        for &a in row {
            let ok = rows[..t_idx]
                .iter()
                .all(|prev| prev.contains(&a) || (a > 0 && prev.contains(&(a - 1))));
            if !ok {
                return false;
            }
        }
    }
    t.census(n) == deg_vector(mu)
}
