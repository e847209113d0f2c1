//! Raising/lowering algorithm, transversal chains and symmetric chain
//! decompositions of the level sets.
//!
//! Starting from a maximal pair `(a_i, a_{i+1})`, the right-moving run applies
//! color `i+1` exactly `a_i - a_{i+2}` times and shifts the covered pair one
//! step right, finishing with `a_{n-1}` moves of color `n`. The left-moving
//! run mirrors it upward. Both stay inside the level set of the seed, and
//! their concatenation (the transversal chain) runs from the high embedded
//! copy of `Q_{n-2}` to the low one.

use std::collections::{BTreeSet, HashMap};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::level_sets::{
    central_factor_iso, embed_high, embed_low, enumerate_level, member_order, single_block_iso,
    LevelIso, Signature,
};
use crate::poset::{check_cap, slice_size, ColorMove, Monomial};
use crate::verify::check_family;
use crate::Config;

/// A saturated chain, listed from highest to lowest weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    elements: Vec<Monomial>,
    colors: Vec<ColorMove>,
}

fn step_color(from: &Monomial, to: &Monomial) -> Option<ColorMove> {
    from.check_same_slice(to).ok()?;
    let mut color = None;
    for (i, (&a, &b)) in from.exponents().iter().zip(to.exponents()).enumerate() {
        match b as i64 - a as i64 {
            0 => {}
            1 if i > 0 && color.is_none() && from.exponents()[i - 1] == to.exponents()[i - 1] + 1 => {
                color = Some(i);
            }
            -1 => {}
            _ => return None,
        }
    }
    let c = color?;
    let changed = from
        .exponents()
        .iter()
        .zip(to.exponents())
        .filter(|(a, b)| a != b)
        .count();
    (changed == 2).then(|| ColorMove::new(c).expect("color is positive"))
}

impl Chain {
    /// Builds a chain, deriving the colors. Consecutive elements must differ
    /// by exactly one color move.
    pub fn from_elements(elements: Vec<Monomial>) -> Result<Chain> {
        if elements.is_empty() {
            return Err(Error::Precondition("a chain needs at least one element".into()));
        }
        let colors = elements
            .windows(2)
            .map(|w| {
                step_color(&w[0], &w[1]).ok_or_else(|| {
                    Error::Verification(format!("{} -> {} is not a color move", w[0], w[1]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Chain { elements, colors })
    }

    pub fn singleton(mu: Monomial) -> Chain {
        Chain {
            elements: vec![mu],
            colors: vec![],
        }
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn colors(&self) -> &[ColorMove] {
        &self.colors
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Number of cover relations.
    pub fn edges(&self) -> usize {
        self.colors.len()
    }

    pub fn top(&self) -> &Monomial {
        &self.elements[0]
    }

    pub fn bottom(&self) -> &Monomial {
        self.elements.last().expect("chains are nonempty")
    }

    pub fn is_monotonic(&self) -> bool {
        self.colors.windows(2).all(|w| w[0] <= w[1])
    }

    /// `wt(top) = -wt(bottom)`.
    pub fn is_symmetric(&self) -> bool {
        self.top().weight() == -self.bottom().weight()
    }

    pub fn contains(&self, mu: &Monomial) -> bool {
        self.elements.contains(mu)
    }
}

impl Serialize for Chain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Chain", 3)?;
        st.serialize_field("elements", &self.elements)?;
        st.serialize_field("colors", &self.colors)?;
        st.serialize_field("monotonic", &self.is_monotonic())?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Cover,
    Partition,
    SymmetricDecomposition,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Cover => "cover",
            FamilyKind::Partition => "partition",
            FamilyKind::SymmetricDecomposition => "symmetric-decomposition",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyKind> {
        match s {
            "cover" => Some(FamilyKind::Cover),
            "partition" => Some(FamilyKind::Partition),
            "symmetric-decomposition" => Some(FamilyKind::SymmetricDecomposition),
            _ => None,
        }
    }
}

/// A set of chains over one level set, tagged with the property it claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainFamily {
    signature: Signature,
    kind: FamilyKind,
    chains: Vec<Chain>,
}

impl ChainFamily {
    /// Chains are put in a canonical order (by top element, then contents).
    pub fn new(signature: Signature, kind: FamilyKind, mut chains: Vec<Chain>) -> Self {
        chains.sort_by(|a, b| {
            member_order(a.top(), b.top()).then_with(|| a.elements.cmp(&b.elements))
        });
        ChainFamily {
            signature,
            kind,
            chains,
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn into_chains(self) -> Vec<Chain> {
        self.chains
    }

    /// Copy with the first chain removed; used to build negative controls.
    pub fn without_chain(&self, index: usize) -> ChainFamily {
        let mut chains = self.chains.clone();
        chains.remove(index);
        ChainFamily {
            signature: self.signature.clone(),
            kind: self.kind,
            chains,
        }
    }
}

/// Indices `i` with `a_i + a_{i+1}` maximal; empty only when `n = 0`.
pub fn maximal_pairs(mu: &Monomial) -> Vec<usize> {
    let sums = mu.pair_sums();
    let Some(&max) = sums.iter().max() else {
        return vec![];
    };
    sums.iter()
        .enumerate()
        .filter(|(_, &s)| s == max)
        .map(|(i, _)| i)
        .collect()
}

fn check_start(mu: &Monomial, start: usize) -> Result<()> {
    if maximal_pairs(mu).contains(&start) {
        Ok(())
    } else {
        Err(Error::NotMaximalPair { index: start })
    }
}

fn run_len(a: &[u32], hi: usize, lo: usize) -> Result<u32> {
    a[hi].checked_sub(a[lo]).ok_or_else(|| {
        Error::Verification(format!("covered pair stopped being maximal at index {hi}"))
    })
}

/// Downward run from `μ`, covering the maximal pair `(a_start, a_{start+1})`.
pub fn right_moving(mu: &Monomial, start: usize) -> Result<Chain> {
    check_start(mu, start)?;
    let n = mu.n();
    let mut cur = mu.clone();
    let mut elements = vec![cur.clone()];
    let mut i = start;
    loop {
        let a = cur.exponents().to_vec();
        let (color, times) = if i == n - 1 {
            (n, a[n - 1])
        } else {
            (i + 1, run_len(&a, i, i + 2)?)
        };
        let c = ColorMove::new(color)?;
        for _ in 0..times {
            cur = cur.apply_color(c)?;
            elements.push(cur.clone());
        }
        if i == n - 1 {
            break;
        }
        i += 1;
    }
    Chain::from_elements(elements)
}

/// Upward run ending at `μ`, covering the maximal pair `(a_start, a_{start+1})`.
/// The returned chain is listed from its top down to `μ`.
pub fn left_moving(mu: &Monomial, start: usize) -> Result<Chain> {
    check_start(mu, start)?;
    let mut cur = mu.clone();
    let mut elements = vec![cur.clone()];
    // pair (a_{i-1}, a_i)
    let mut i = start + 1;
    loop {
        let a = cur.exponents().to_vec();
        let times = if i == 1 { a[1] } else { run_len(&a, i, i - 2)? };
        let c = ColorMove::new(i)?;
        for _ in 0..times {
            cur = cur.unapply_color(c)?;
            elements.push(cur.clone());
        }
        if i == 1 {
            break;
        }
        i -= 1;
    }
    elements.reverse();
    Chain::from_elements(elements)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Left (leftmost maximal pair) or right (rightmost) transversal chain through `μ`.
pub fn transversal(mu: &Monomial, side: Side) -> Result<Chain> {
    let pairs = maximal_pairs(mu);
    let start = match side {
        Side::Left => pairs.first(),
        Side::Right => pairs.last(),
    };
    let Some(&start) = start else {
        return Ok(Chain::singleton(mu.clone()));
    };
    let up = left_moving(mu, start)?;
    let down = right_moving(mu, start)?;
    let mut elements = up.elements;
    elements.extend(down.elements.into_iter().skip(1));
    Chain::from_elements(elements)
}

/// Deduplicated left and right transversal chains of every member of `Q_n(d)`.
///
/// Checks monotonicity, signature preservation, coverage and (for `d_0 > 0`)
/// disjointness before returning; the kind is `Partition` exactly when the
/// chains are pairwise disjoint.
pub fn transversal_family(sig: &Signature, cfg: &Config) -> Result<ChainFamily> {
    let level = enumerate_level(sig, cfg)?;
    let mut seen: BTreeSet<Vec<Monomial>> = BTreeSet::new();
    let mut chains = Vec::new();
    for mu in level.members() {
        for side in [Side::Left, Side::Right] {
            let c = transversal(mu, side)?;
            if seen.insert(c.elements.clone()) {
                chains.push(c);
            }
        }
    }
    let fail = |msg: String| Err(Error::Verification(format!("transversal family of {sig}: {msg}")));
    let mut hits: HashMap<&Monomial, usize> = HashMap::new();
    for c in &chains {
        if !c.is_monotonic() {
            return fail(format!("chain through {} is not monotonic", c.top()));
        }
        for x in c.elements() {
            if !level.contains(x) {
                return fail(format!("{x} left the level set"));
            }
            *hits.entry(x).or_default() += 1;
        }
    }
    if hits.len() != level.len() {
        return fail(format!("chains cover {} of {} members", hits.len(), level.len()));
    }
    let disjoint = hits.values().all(|&h| h == 1);
    if sig.d()[0] > 0 && !disjoint {
        return fail("chains overlap although d_0 > 0".into());
    }
    let kind = if disjoint {
        FamilyKind::Partition
    } else {
        FamilyKind::Cover
    };
    Ok(ChainFamily::new(sig.clone(), kind, chains))
}

/// The block of `Q_n(d)` swept by transversal chains whose tops lie on the
/// high copy of one base chain of `Q_{n-2}(d_1..d_k)`.
///
/// Cell `(s, t)` is the `t`-th element of the transversal chain through
/// `embed_high(base[s])`; weight drops by two along either coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rectangle {
    base: Chain,
    rows: Vec<Chain>,
}

impl Rectangle {
    pub fn base(&self) -> &Chain {
        &self.base
    }

    pub fn rows(&self) -> &[Chain] {
        &self.rows
    }

    /// Largest row index `p` (edges of the base chain).
    pub fn p(&self) -> usize {
        self.rows.len() - 1
    }

    /// Largest depth `q` (edges of each transversal row).
    pub fn q(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn cell(&self, s: usize, t: usize) -> &Monomial {
        &self.rows[s].elements[t]
    }

    /// Peels the boundary two symmetric chains at a time.
    ///
    /// At step `j` the remaining block is rows `j..=p-j` by depths `j..=q-j`.
    /// The upper chain runs along depth `j` and then down row `p-j`; the lower
    /// chain runs down row `j` and then along depth `q-j`. Only cover
    /// relations actually present in the poset are accepted.
    pub fn peel(&self) -> Result<Vec<Chain>> {
        let (p, q) = (self.p(), self.q());
        let mut out = Vec::new();
        let mut j = 0;
        while 2 * j <= p && 2 * j <= q {
            let (s_hi, t_hi) = (p - j, q - j);
            if s_hi == j {
                out.push(self.path((j..=t_hi).map(|t| (j, t)))?);
            } else if t_hi == j {
                out.push(self.path((j..=s_hi).map(|s| (s, j)))?);
            } else {
                let upper = (j..=s_hi).map(|s| (s, j)).chain((j + 1..=t_hi).map(|t| (s_hi, t)));
                let lower = (j + 1..=t_hi).map(|t| (j, t)).chain((j + 1..s_hi).map(|s| (s, t_hi)));
                out.push(self.path(upper)?);
                out.push(self.path(lower)?);
            }
            j += 1;
        }
        Ok(out)
    }

    fn path(&self, cells: impl Iterator<Item = (usize, usize)>) -> Result<Chain> {
        Chain::from_elements(cells.map(|(s, t)| self.cell(s, t).clone()).collect()).map_err(|e| {
            Error::Verification(format!("rectangle over base {}: {e}", self.base.top()))
        })
    }
}

/// One rectangle per base chain of a symmetric chain decomposition of the
/// level set below. Checks the grid laws: equal row lengths, row tops on the
/// high copy and row bottoms on the low copy of the base chain.
pub fn rectangles(sig: &Signature, scd_below: &ChainFamily) -> Result<Vec<Rectangle>> {
    let below = sig.below()?;
    if scd_below.signature() != &below {
        return Err(Error::SignatureMismatch {
            expected: below.d().to_vec(),
            found: scd_below.signature().d().to_vec(),
        });
    }
    let mut out = Vec::with_capacity(scd_below.chains().len());
    let mut row_len = None;
    for base in scd_below.chains() {
        let mut rows = Vec::with_capacity(base.len());
        for mu0 in base.elements() {
            let top = embed_high(sig, mu0)?;
            let row = transversal(&top, Side::Left)?;
            let low = embed_low(sig, mu0)?;
            if row.bottom() != &low {
                return Err(Error::Verification(format!(
                    "transversal chain from {top} ends at {}, expected {low}",
                    row.bottom()
                )));
            }
            match row_len {
                None => row_len = Some(row.len()),
                Some(l) if l != row.len() => {
                    return Err(Error::Verification(format!(
                        "rows of unequal length {l} and {} in {sig}",
                        row.len()
                    )))
                }
                _ => {}
            }
            rows.push(row);
        }
        out.push(Rectangle {
            base: base.clone(),
            rows,
        });
    }
    Ok(out)
}

/// Symmetric chain decomposition of `Q_n(d)` for `d_0 > 0` from one of
/// `Q_{n-2}(d_1..d_k)`, provided `1 + 2 d_0 >= Σ_{j>=1} d_j (n-2j) j`.
/// The result is independently verified before it is returned.
pub fn stitch_rectangles(sig: &Signature, scd_below: &ChainFamily, cfg: &Config) -> Result<ChainFamily> {
    if !sig.satisfies_stitch_inequality() {
        return Err(Error::InequalityViolated {
            lhs: 1 + 2 * sig.d()[0] as u64,
            rhs: sig.stitch_bound(),
        });
    }
    stitch_unchecked(sig, scd_below, cfg)
}

/// [`stitch_rectangles`] without the inequality gate. Peeling may still work
/// when the inequality fails; every produced chain is verified regardless.
pub fn stitch_unchecked(sig: &Signature, scd_below: &ChainFamily, cfg: &Config) -> Result<ChainFamily> {
    if sig.d()[0] == 0 {
        return Err(Error::Precondition(format!("{sig} has d_0 = 0")));
    }
    let below_report = check_family(scd_below, cfg)?;
    if scd_below.kind() != FamilyKind::SymmetricDecomposition || !below_report.ok {
        return Err(Error::Precondition(format!(
            "base family for {} is not a verified symmetric chain decomposition",
            scd_below.signature()
        )));
    }
    let mut chains = Vec::new();
    for rect in rectangles(sig, scd_below)? {
        chains.extend(rect.peel()?);
    }
    verified_scd(sig, chains, cfg)
}

fn verified_scd(sig: &Signature, chains: Vec<Chain>, cfg: &Config) -> Result<ChainFamily> {
    let fam = ChainFamily::new(sig.clone(), FamilyKind::SymmetricDecomposition, chains);
    let report = check_family(&fam, cfg)?;
    if !report.ok {
        return Err(Error::Verification(format!(
            "{sig}: symmetric chain decomposition check failed: {}",
            report.summary()
        )));
    }
    Ok(fam)
}

/// How an available decomposition was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// The level set has one element.
    Singleton,
    /// `n <= 1`: the level set is a single chain.
    Chain,
    /// Pulled back from `A_{r+1}(d_r (n-2r))`.
    SingleBlock,
    /// Rectangle stitching under the stitching inequality.
    Stitched,
    /// Rectangle stitching where the inequality fails but peeling verified.
    StitchedBeyondBound,
    /// Pulled back from `Q_n(d_0..d_{k-1}, 0)` by the central factor.
    CentralFactor,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Singleton => "singleton",
            Strategy::Chain => "chain",
            Strategy::SingleBlock => "single-block",
            Strategy::Stitched => "stitched",
            Strategy::StitchedBeyondBound => "stitched-beyond-bound",
            Strategy::CentralFactor => "central-factor",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scd {
    Available {
        family: ChainFamily,
        strategy: Strategy,
    },
    Unavailable {
        signature: Signature,
        reason: String,
    },
}

impl Scd {
    pub fn family(&self) -> Option<&ChainFamily> {
        match self {
            Scd::Available { family, .. } => Some(family),
            Scd::Unavailable { .. } => None,
        }
    }

    pub fn is_available(&self) -> bool {
        matches!(self, Scd::Available { .. })
    }
}

/// Recursive symmetric chain decomposition of `Q_n(d)`.
pub fn scd(sig: &Signature, cfg: &Config) -> Result<Scd> {
    ScdSolver::new(cfg).solve(sig)
}

/// Memoizing driver for [`scd`], reusable across signatures.
#[derive(Debug)]
pub struct ScdSolver<'a> {
    cfg: &'a Config,
    memo: HashMap<Signature, Scd>,
}

impl<'a> ScdSolver<'a> {
    pub fn new(cfg: &'a Config) -> Self {
        ScdSolver {
            cfg,
            memo: HashMap::new(),
        }
    }

    pub fn solve(&mut self, sig: &Signature) -> Result<Scd> {
        if let Some(hit) = self.memo.get(sig) {
            return Ok(hit.clone());
        }
        let out = self.solve_uncached(sig)?;
        self.memo.insert(sig.clone(), out.clone());
        Ok(out)
    }

    fn solve_uncached(&mut self, sig: &Signature) -> Result<Scd> {
        let cfg = self.cfg;
        let level = enumerate_level(sig, cfg)?;
        let available = |family, strategy| Ok(Scd::Available { family, strategy });

        if level.len() == 1 {
            let chain = Chain::singleton(level.members()[0].clone());
            if let Ok(f) = verified_scd(sig, vec![chain], cfg) {
                return available(f, Strategy::Singleton);
            }
        }
        if sig.n() <= 1 {
            let fam = transversal_family(sig, cfg)?;
            if let Ok(f) = verified_scd(sig, fam.into_chains(), cfg) {
                return available(f, Strategy::Chain);
            }
        }
        let mut reasons = Vec::new();
        if let Some(r) = sig.single_block().filter(|&r| r > 0) {
            match self.via_single_block(sig) {
                Ok(Some(f)) => return available(f, Strategy::SingleBlock),
                Ok(None) => reasons.push(format!("target slice of block {r} has no decomposition")),
                Err(Error::SizeCap { size, cap }) => return Err(Error::SizeCap { size, cap }),
                Err(e) => reasons.push(e.to_string()),
            }
        }
        if sig.d()[0] > 0 {
            match self.via_stitching(sig) {
                Ok(Some(f)) => {
                    let strategy = if sig.satisfies_stitch_inequality() {
                        Strategy::Stitched
                    } else {
                        Strategy::StitchedBeyondBound
                    };
                    return available(f, strategy);
                }
                Ok(None) => reasons.push(format!("{} has no decomposition", sig.below()?)),
                Err(Error::SizeCap { size, cap }) => return Err(Error::SizeCap { size, cap }),
                Err(e) => reasons.push(e.to_string()),
            }
        }
        if sig.n().is_multiple_of(2) && sig.d().last().is_some_and(|&dk| dk > 0) {
            match self.via_central_factor(sig) {
                Ok(Some(f)) => return available(f, Strategy::CentralFactor),
                Ok(None) => reasons.push("reduced level set has no decomposition".into()),
                Err(Error::SizeCap { size, cap }) => return Err(Error::SizeCap { size, cap }),
                Err(e) => reasons.push(e.to_string()),
            }
        }
        if reasons.is_empty() {
            reasons.push("no applicable strategy".into());
        }
        Ok(Scd::Unavailable {
            signature: sig.clone(),
            reason: reasons.join("; "),
        })
    }

    fn via_stitching(&mut self, sig: &Signature) -> Result<Option<ChainFamily>> {
        let below = self.solve(&sig.below()?)?;
        let Some(base) = below.family() else {
            return Ok(None);
        };
        stitch_unchecked(sig, base, self.cfg).map(Some)
    }

    fn pull_back(&self, sig: &Signature, iso: &LevelIso, chains: &[Chain]) -> Result<ChainFamily> {
        let pulled = chains
            .iter()
            .map(|c| {
                let elements = c
                    .elements()
                    .iter()
                    .map(|nu| {
                        iso.backward(nu).cloned().ok_or_else(|| {
                            Error::Verification(format!("{nu} has no preimage in {sig}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Chain::from_elements(elements)
            })
            .collect::<Result<Vec<_>>>()?;
        verified_scd(sig, pulled, self.cfg)
    }

    fn via_single_block(&mut self, sig: &Signature) -> Result<Option<ChainFamily>> {
        let iso = single_block_iso(sig, self.cfg)?;
        let r = sig.single_block().expect("checked by caller");
        let target_n = r + 1;
        let target_m = sig.d()[r] * (sig.n() - 2 * r) as u32;
        let mut chains = Vec::new();
        for s in Signature::all_of_degree(target_n, target_m) {
            match self.solve(&s)? {
                Scd::Available { family, .. } => chains.extend(family.into_chains()),
                Scd::Unavailable { .. } => return Ok(None),
            }
        }
        self.pull_back(sig, &iso, &chains).map(Some)
    }

    fn via_central_factor(&mut self, sig: &Signature) -> Result<Option<ChainFamily>> {
        let (iso, reduced) = central_factor_iso(sig, self.cfg)?;
        let Some(fam) = self.solve(&reduced)?.family().cloned() else {
            return Ok(None);
        };
        self.pull_back(sig, &iso, fam.chains()).map(Some)
    }
}

/// Decomposition of `A_n(m)` into a generic part (level sets with a verified
/// symmetric chain decomposition) and a singular part (transversal covers).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub generic: Vec<(ChainFamily, Strategy)>,
    pub singular: Vec<(ChainFamily, String)>,
}

impl Split {
    pub fn generic_size(&self) -> usize {
        self.generic
            .iter()
            .map(|(f, _)| f.chains().iter().map(Chain::len).sum::<usize>())
            .sum()
    }
}

pub fn split_generic(n: usize, m: u32, cfg: &Config) -> Result<Split> {
    check_cap(slice_size(n, m), cfg.max_poset)?;
    let mut solver = ScdSolver::new(cfg);
    let mut split = Split {
        generic: Vec::new(),
        singular: Vec::new(),
    };
    for sig in Signature::all_of_degree(n, m) {
        match solver.solve(&sig)? {
            Scd::Available { family, strategy } => split.generic.push((family, strategy)),
            Scd::Unavailable { reason, .. } => {
                split.singular.push((transversal_family(&sig, cfg)?, reason))
            }
        }
    }
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    fn sig(n: usize, d: &[u32]) -> Signature {
        Signature::new(n, d.to_vec()).unwrap()
    }

    fn elems(c: &Chain) -> Vec<Vec<u32>> {
        c.elements().iter().map(|m| m.exponents().to_vec()).collect()
    }

    fn colors(c: &Chain) -> Vec<usize> {
        c.colors().iter().map(|c| c.get()).collect()
    }

    #[test]
    fn maximal_pair_examples() {
        assert_eq!(maximal_pairs(&mono(&[1, 1, 1, 0, 1, 1])), vec![0, 1, 4]);
        assert_eq!(maximal_pairs(&mono(&[4, 3, 2, 1, 1, 4])), vec![0]);
        assert_eq!(maximal_pairs(&mono(&[2, 2, 2, 2])), vec![0, 1, 2]);
        assert!(maximal_pairs(&mono(&[3])).is_empty());
    }

    #[test]
    fn right_moving_examples() {
        let c = right_moving(&mono(&[1, 1, 1, 0, 1, 1]), 4).unwrap();
        assert_eq!(elems(&c), vec![vec![1, 1, 1, 0, 1, 1], vec![1, 1, 1, 0, 0, 2]]);

        let c = right_moving(&mono(&[2, 0, 1, 1, 1, 0]), 0).unwrap();
        assert_eq!(
            elems(&c),
            vec![
                vec![2, 0, 1, 1, 1, 0],
                vec![1, 1, 1, 1, 1, 0],
                vec![1, 1, 1, 0, 2, 0],
                vec![1, 1, 1, 0, 1, 1],
                vec![1, 1, 1, 0, 0, 2]
            ]
        );

        let c = right_moving(&mono(&[1, 1, 0, 2]), 2).unwrap();
        assert_eq!(c.len(), 1);
        assert!(matches!(
            right_moving(&mono(&[1, 1, 1, 0, 1, 1]), 2),
            Err(Error::NotMaximalPair { index: 2 })
        ));
    }

    #[test]
    fn left_moving_examples() {
        let c = left_moving(&mono(&[1, 1, 1, 0, 1, 1]), 0).unwrap();
        assert_eq!(elems(&c), vec![vec![2, 0, 1, 0, 1, 1], vec![1, 1, 1, 0, 1, 1]]);

        let c = left_moving(&mono(&[1, 0, 1, 1, 0, 2]), 4).unwrap();
        assert_eq!(
            elems(&c),
            vec![
                vec![2, 0, 1, 0, 1, 1],
                vec![1, 1, 1, 0, 1, 1],
                vec![1, 0, 2, 0, 1, 1],
                vec![1, 0, 1, 1, 1, 1],
                vec![1, 0, 1, 1, 0, 2]
            ]
        );

        let c = left_moving(&mono(&[3, 0, 1, 1]), 0).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn worked_transversals() {
        let mu = mono(&[1, 1, 1, 0, 1, 1]);
        let left = transversal(&mu, Side::Left).unwrap();
        assert_eq!(
            elems(&left),
            vec![
                vec![2, 0, 1, 0, 1, 1],
                vec![1, 1, 1, 0, 1, 1],
                vec![1, 0, 2, 0, 1, 1],
                vec![1, 0, 1, 1, 1, 1],
                vec![1, 0, 1, 1, 0, 2]
            ]
        );
        assert_eq!(colors(&left), vec![1, 2, 3, 5]);
        let right = transversal(&mu, Side::Right).unwrap();
        assert_eq!(
            elems(&right),
            vec![
                vec![2, 0, 1, 1, 1, 0],
                vec![1, 1, 1, 1, 1, 0],
                vec![1, 1, 1, 0, 2, 0],
                vec![1, 1, 1, 0, 1, 1],
                vec![1, 1, 1, 0, 0, 2]
            ]
        );
        assert_eq!(colors(&right), vec![1, 4, 5, 5]);
        assert!(left.is_monotonic() && right.is_monotonic());
    }

    #[test]
    fn transversals_coincide_when_d0_positive() {
        let cfg = Config::default();
        let level = enumerate_level(&sig(5, &[1, 1, 0]), &cfg).unwrap();
        for mu in level.members() {
            assert_eq!(
                transversal(mu, Side::Left).unwrap(),
                transversal(mu, Side::Right).unwrap(),
                "{mu}"
            );
        }
    }

    #[test]
    fn degenerate_transversals() {
        assert_eq!(transversal(&mono(&[5]), Side::Left).unwrap().len(), 1);
        assert_eq!(transversal(&Monomial::one(4), Side::Right).unwrap().len(), 1);
        assert_eq!(transversal(&mono(&[1, 2]), Side::Left).unwrap().len(), 4);
    }

    #[test]
    fn transversal_families() {
        let cfg = Config::default();
        let f = transversal_family(&sig(3, &[3, 0]), &cfg).unwrap();
        assert_eq!(f.kind(), FamilyKind::Partition);
        assert_eq!(f.chains().len(), 1);

        let f = transversal_family(&sig(5, &[0, 1, 1]), &cfg).unwrap();
        let level = enumerate_level(&sig(5, &[0, 1, 1]), &cfg).unwrap();
        let union: BTreeSet<_> = f.chains().iter().flat_map(|c| c.elements().to_vec()).collect();
        assert_eq!(union.len(), level.len());

        for d0 in 1..=4 {
            for d1 in 0..=3 {
                let f = transversal_family(&sig(2, &[d0, d1]), &cfg).unwrap();
                assert_eq!(f.chains().len(), 1, "Q_2({d0},{d1})");
                assert!(f.chains()[0].is_symmetric());
            }
        }
    }

    #[test]
    fn peeling_small_grids() {
        // Q_3(2,1): base Q_1(1) is a 2-element chain, rows of length 8
        let cfg = Config::default();
        let s = sig(3, &[2, 1]);
        let below = scd(&s.below().unwrap(), &cfg).unwrap();
        let rects = rectangles(&s, below.family().unwrap()).unwrap();
        assert_eq!(rects.len(), 1);
        assert_eq!((rects[0].p(), rects[0].q()), (1, 7));
        let chains = rects[0].peel().unwrap();
        assert_eq!(chains.iter().map(Chain::len).collect::<Vec<_>>(), vec![9, 7]);
        assert!(chains.iter().all(Chain::is_symmetric));
    }

    #[test]
    fn stitching_examples() {
        let cfg = Config::default();
        for s in [sig(3, &[2, 0]), sig(4, &[2, 0, 0]), sig(5, &[2, 1, 1])] {
            let below = scd(&s.below().unwrap(), &cfg).unwrap();
            let fam = stitch_rectangles(&s, below.family().unwrap(), &cfg).unwrap();
            assert_eq!(fam.kind(), FamilyKind::SymmetricDecomposition);
            assert!(check_family(&fam, &cfg).unwrap().ok);
        }
        let s = sig(5, &[1, 1, 1]);
        let below = scd(&s.below().unwrap(), &cfg).unwrap();
        assert!(matches!(
            stitch_rectangles(&s, below.family().unwrap(), &cfg),
            Err(Error::InequalityViolated { lhs: 3, rhs: 5 })
        ));
        assert_eq!(
            transversal_family(&s, &cfg).unwrap().kind(),
            FamilyKind::Partition
        );
    }

    #[test]
    fn stitching_rejects_wrong_base() {
        let cfg = Config::default();
        let s = sig(5, &[2, 1, 1]);
        let wrong = scd(&sig(3, &[1, 0]), &cfg).unwrap();
        assert!(stitch_rectangles(&s, wrong.family().unwrap(), &cfg).is_err());
    }

    #[test]
    fn scd_small_cases() {
        let cfg = Config::default();
        for d0 in 0..=4 {
            for d1 in 0..=3 {
                assert!(scd(&sig(2, &[d0, d1]), &cfg).unwrap().is_available());
            }
        }
        let out = scd(&sig(6, &[0, 0, 0, 1]), &cfg).unwrap();
        assert!(matches!(out, Scd::Available { strategy: Strategy::Singleton, .. }));
    }

    #[test]
    fn split_degree_zero() {
        let cfg = Config::default();
        let split = split_generic(5, 0, &cfg).unwrap();
        assert_eq!(split.generic.len(), 1);
        assert!(split.singular.is_empty());
    }
}
