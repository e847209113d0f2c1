//! Independent checks of the chain and decomposition claims.
//!
//! Nothing here trusts stored colors or the engine's own bookkeeping: covers
//! are recomputed from the order and rank, level sets are re-enumerated from
//! the slice.

use std::collections::HashMap;

use serde::Serialize;

use crate::chain::{split_generic, transversal_family, Chain, ChainFamily, FamilyKind, Strategy};
use crate::error::{Error, Result};
use crate::level_sets::{signature, Signature};
use crate::poset::{check_cap, enumerate, slice_size, Monomial};
use crate::Config;

/// `upper` covers `lower`: comparable and one rank apart.
pub fn is_cover(lower: &Monomial, upper: &Monomial) -> bool {
    upper.rank() == lower.rank() + 1 && lower.leq(upper).unwrap_or(false)
}

fn suffix_sums(mu: &Monomial) -> Vec<u64> {
    let mut acc = 0u64;
    let mut out: Vec<u64> = mu
        .exponents()
        .iter()
        .rev()
        .map(|&a| {
            acc += a as u64;
            acc
        })
        .collect();
    out.reverse();
    out
}

/// Color of a cover step read off the suffix sums.
fn cover_color(lower: &Monomial, upper: &Monomial) -> Option<usize> {
    let (a, b) = (suffix_sums(lower), suffix_sums(upper));
    let diff: Vec<usize> = (1..a.len()).filter(|&j| a[j] != b[j]).collect();
    match diff.as_slice() {
        [j] if b[*j] == a[*j] + 1 => Some(*j),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub length: usize,
    pub saturated: bool,
    pub monotonic: bool,
    pub signature_constant: bool,
    pub symmetric: bool,
}

impl ChainReport {
    pub fn ok(&self) -> bool {
        self.saturated && self.monotonic && self.signature_constant
    }
}

pub fn check_chain(chain: &[Monomial]) -> ChainReport {
    let mut colors = Vec::new();
    let mut saturated = !chain.is_empty();
    for w in chain.windows(2) {
        if w[0].n() != w[1].n() || w[0].degree() != w[1].degree() || !is_cover(&w[0], &w[1]) {
            saturated = false;
            break;
        }
        match cover_color(&w[0], &w[1]) {
            Some(c) => colors.push(c),
            None => saturated = false,
        }
    }
    let monotonic = saturated && colors.windows(2).all(|w| w[0] <= w[1]);
    let signature_constant = chain
        .first()
        .map(signature)
        .is_some_and(|s| chain.iter().all(|x| signature(x) == s));
    let symmetric = match (chain.first(), chain.last()) {
        (Some(a), Some(b)) => a.weight() == -b.weight(),
        _ => false,
    };
    ChainReport {
        length: chain.len(),
        saturated,
        monotonic,
        signature_constant,
        symmetric,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub signature: Signature,
    pub kind: FamilyKind,
    pub level_size: usize,
    pub chains: usize,
    pub missing: Vec<Monomial>,
    pub extra: Vec<Monomial>,
    pub overlaps: Vec<Monomial>,
    pub saturated: bool,
    pub monotonic: bool,
    pub symmetric: bool,
    pub ok: bool,
}

impl FamilyReport {
    pub fn summary(&self) -> String {
        format!(
            "missing {}, extra {}, overlaps {}, saturated {}, monotonic {}, symmetric {}",
            self.missing.len(),
            self.extra.len(),
            self.overlaps.len(),
            self.saturated,
            self.monotonic,
            self.symmetric
        )
    }
}

/// Members of `Q_n(d)` found by filtering the whole slice.
pub fn level_members(sig: &Signature, cfg: &Config) -> Result<Vec<Monomial>> {
    let m = sig.degree();
    check_cap(slice_size(sig.n(), m), cfg.max_poset)?;
    Ok(enumerate(sig.n(), m).filter(|mu| &signature(mu) == sig).collect())
}

/// Checks a family against the property its kind claims.
pub fn check_family(fam: &ChainFamily, cfg: &Config) -> Result<FamilyReport> {
    check_chains(fam.signature(), fam.kind(), fam.chains().iter().map(Chain::elements), cfg)
}

/// [`check_family`] over raw element lists, e.g. parsed from JSON.
pub fn check_chains<'a>(
    sig: &Signature,
    kind: FamilyKind,
    chains: impl Iterator<Item = &'a [Monomial]>,
    cfg: &Config,
) -> Result<FamilyReport> {
    let members = level_members(sig, cfg)?;
    let mut hits: HashMap<&Monomial, usize> = members.iter().map(|m| (m, 0)).collect();
    let mut extra = Vec::new();
    let mut overlaps = Vec::new();
    let (mut saturated, mut monotonic, mut symmetric) = (true, true, true);
    let mut count = 0;
    for c in chains {
        count += 1;
        let rep = check_chain(c);
        saturated &= rep.saturated;
        monotonic &= rep.monotonic;
        symmetric &= rep.symmetric;
        for x in c {
            match hits.get_mut(x) {
                Some(h) => {
                    *h += 1;
                    if *h == 2 {
                        overlaps.push(x.clone());
                    }
                }
                None => extra.push(x.clone()),
            }
        }
    }
    let mut missing: Vec<Monomial> = hits
        .iter()
        .filter(|(_, &h)| h == 0)
        .map(|(m, _)| (*m).clone())
        .collect();
    missing.sort();
    overlaps.sort();
    extra.sort();
    extra.dedup();
    let covered = missing.is_empty() && extra.is_empty() && saturated;
    let ok = match kind {
        FamilyKind::Cover => covered,
        FamilyKind::Partition => covered && overlaps.is_empty(),
        FamilyKind::SymmetricDecomposition => covered && overlaps.is_empty() && symmetric,
    };
    Ok(FamilyReport {
        signature: sig.clone(),
        kind,
        level_size: members.len(),
        chains: count,
        missing,
        extra,
        overlaps,
        saturated,
        monotonic,
        symmetric,
        ok,
    })
}

/// Checks that `chains` form a symmetric chain decomposition of all of `A_n(m)`.
pub fn check_slice_scd(n: usize, m: u32, chains: &[Vec<Monomial>], cfg: &Config) -> Result<bool> {
    check_cap(slice_size(n, m), cfg.max_poset)?;
    let mut hits: HashMap<Monomial, usize> = enumerate(n, m).map(|mu| (mu, 0)).collect();
    for c in chains {
        let rep = check_chain(c);
        if !rep.saturated || !rep.symmetric {
            return Ok(false);
        }
        for x in c {
            match hits.get_mut(x) {
                Some(h) => *h += 1,
                None => return Ok(false),
            }
        }
    }
    Ok(hits.values().all(|&h| h == 1))
}

/// Level sizes by weight, from the top weight down in steps of two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub top_weight: i64,
    pub sizes: Vec<usize>,
    pub symmetric: bool,
    pub unimodal: bool,
}

pub fn rank_profile(set: &[Monomial]) -> RankProfile {
    let Some(top) = set.iter().map(Monomial::weight).max() else {
        return RankProfile {
            top_weight: 0,
            sizes: vec![],
            symmetric: true,
            unimodal: true,
        };
    };
    let bottom = set.iter().map(Monomial::weight).min().expect("nonempty");
    let mut sizes = vec![0usize; ((top - bottom) / 2 + 1) as usize];
    for mu in set {
        sizes[((top - mu.weight()) / 2) as usize] += 1;
    }
    let symmetric = top == -bottom && sizes.iter().eq(sizes.iter().rev());
    let peak = sizes.iter().enumerate().max_by_key(|(_, &s)| s).map(|(i, _)| i).unwrap_or(0);
    let unimodal = sizes[..=peak].windows(2).all(|w| w[0] <= w[1])
        && sizes[peak..].windows(2).all(|w| w[0] >= w[1]);
    RankProfile {
        top_weight: top,
        sizes,
        symmetric,
        unimodal,
    }
}

/// Coefficients of the Gaussian binomial `[a+b choose b]_q`, lowest degree first.
pub fn gaussian_binomial(a: usize, b: usize) -> Vec<u64> {
    // table[i][j] = [i+j choose j]_q
    let mut prev: Vec<Vec<u64>> = vec![vec![1]; b + 1];
    for _ in 1..=a {
        let mut cur: Vec<Vec<u64>> = Vec::with_capacity(b + 1);
        cur.push(vec![1]);
        for j in 1..=b {
            // [i+j, j] = [i+j-1, j-1] + q^j [i-1+j, j]
            let left = &cur[j - 1];
            let up = &prev[j];
            let mut poly = vec![0u64; left.len().max(up.len() + j)];
            for (k, &c) in left.iter().enumerate() {
                poly[k] += c;
            }
            for (k, &c) in up.iter().enumerate() {
                poly[k + j] += c;
            }
            cur.push(poly);
        }
        prev = cur;
    }
    prev.swap_remove(b)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpernerReport {
    pub size: usize,
    pub max_antichain: usize,
    pub largest_level: usize,
    pub holds: bool,
}

/// Width of a finite subposet (Dilworth via bipartite matching) compared with
/// its largest weight level.
pub fn sperner_check(set: &[Monomial], cap: usize) -> Result<SpernerReport> {
    if set.len() > cap {
        return Err(Error::SizeCap {
            size: set.len() as u64,
            cap: cap as u64,
        });
    }
    let n = set.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| {
                    i != j && set[i].rank() < set[j].rank() && set[i].leq(&set[j]).unwrap_or(false)
                })
                .collect()
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut matching = 0;
    for u in 0..n {
        let mut seen = vec![false; n];
        if augment(u, &adj, &mut owner, &mut seen) {
            matching += 1;
        }
    }
    let max_antichain = n - matching;
    let largest_level = rank_profile(set).sizes.into_iter().max().unwrap_or(0);
    Ok(SpernerReport {
        size: n,
        max_antichain,
        largest_level,
        holds: max_antichain == largest_level,
    })
}

fn augment(u: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if owner[v].is_none_or(|w| augment(w, adj, owner, seen)) {
            owner[v] = Some(u);
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelCheck {
    pub signature: Signature,
    pub size: usize,
    pub transversal_kind: FamilyKind,
    pub transversal_ok: bool,
    pub all_monotonic: bool,
    pub scd: Option<Strategy>,
    pub scd_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<RankProfile>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SliceReport {
    pub n: usize,
    pub m: u32,
    pub size: u64,
    pub level_sets: usize,
    pub sizes_sum_ok: bool,
    pub profile: RankProfile,
    pub gaussian_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sperner: Option<SpernerReport>,
    pub levels: Vec<LevelCheck>,
    pub singular: Vec<Signature>,
    pub generic_fraction: f64,
    pub ok: bool,
}

/// Full consistency check of `A_n(m)`: level sizes, transversal families,
/// symmetric chain decompositions, rank profile and (if small enough) width.
pub fn verify_slice(n: usize, m: u32, cfg: &Config, full: bool) -> Result<SliceReport> {
    let size = slice_size(n, m);
    check_cap(size, cfg.max_poset)?;
    let all: Vec<Monomial> = enumerate(n, m).collect();
    let profile = rank_profile(&all);
    let gauss = gaussian_binomial(n, m as usize);
    let gaussian_ok = profile.sizes.iter().map(|&s| s as u64).eq(gauss.iter().copied());

    let split = split_generic(n, m, cfg)?;
    let strategies: HashMap<&Signature, (Strategy, &ChainFamily)> = split
        .generic
        .iter()
        .map(|(f, s)| (f.signature(), (*s, f)))
        .collect();

    let mut by_sig: HashMap<Signature, Vec<Monomial>> = HashMap::new();
    for mu in &all {
        by_sig.entry(signature(mu)).or_default().push(mu.clone());
    }
    let mut sigs: Vec<&Signature> = by_sig.keys().collect();
    sigs.sort();
    let mut levels = Vec::new();
    let mut total = 0usize;
    let mut ok = gaussian_ok && profile.symmetric && profile.unimodal;
    for sig in sigs {
        let members = &by_sig[sig];
        total += members.len();
        let fam = transversal_family(sig, cfg)?;
        let rep = check_family(&fam, cfg)?;
        let (scd, scd_ok) = match strategies.get(sig) {
            Some((s, f)) => (Some(*s), Some(check_family(f, cfg)?.ok)),
            None => (None, None),
        };
        ok &= rep.ok && rep.monotonic && scd_ok.unwrap_or(true);
        if sig.d()[0] > 0 {
            ok &= fam.kind() == FamilyKind::Partition;
        }
        levels.push(LevelCheck {
            signature: sig.clone(),
            size: members.len(),
            transversal_kind: fam.kind(),
            transversal_ok: rep.ok,
            all_monotonic: rep.monotonic,
            scd,
            scd_ok,
            profile: full.then(|| rank_profile(members)),
        });
    }
    let sizes_sum_ok = total as u64 == size;
    ok &= sizes_sum_ok;
    let sperner = if full && all.len() <= cfg.max_sperner {
        let rep = sperner_check(&all, cfg.max_sperner)?;
        ok &= rep.holds;
        Some(rep)
    } else {
        None
    };
    Ok(SliceReport {
        n,
        m,
        size,
        level_sets: levels.len(),
        sizes_sum_ok,
        profile,
        gaussian_ok,
        sperner,
        singular: split.singular.iter().map(|(f, _)| f.signature().clone()).collect(),
        levels,
        generic_fraction: split.generic_size() as f64 / size as f64,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cover_detection() {
        assert!(is_cover(&mono(&[2, 0]), &mono(&[1, 1])));
        assert!(!is_cover(&mono(&[1, 1]), &mono(&[2, 0])));
        assert!(!is_cover(&mono(&[2, 0, 0]), &mono(&[1, 0, 1])));
        assert_eq!(cover_color(&mono(&[1, 1, 0]), &mono(&[1, 0, 1])), Some(2));
    }

    #[test]
    fn chain_reports() {
        let good = [mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])];
        let rep = check_chain(&good);
        assert!(rep.ok() && rep.symmetric);
        let gap = [mono(&[2, 0]), mono(&[0, 2])];
        assert!(!check_chain(&gap).saturated);
        // colors 2 then 1
        let down = [mono(&[1, 1, 0]), mono(&[1, 0, 1]), mono(&[0, 1, 1])];
        let rep = check_chain(&down);
        assert!(rep.saturated && !rep.monotonic);
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gaussian_binomial(2, 2), vec![1, 1, 2, 1, 1]);
        assert_eq!(gaussian_binomial(0, 3), vec![1]);
        assert_eq!(gaussian_binomial(3, 1), vec![1, 1, 1, 1]);
        assert_eq!(gaussian_binomial(5, 5).iter().sum::<u64>(), 252);
        assert_eq!(gaussian_binomial(4, 3), gaussian_binomial(3, 4));
    }

    #[test]
    fn profile_matches_gaussian() {
        for n in 0..=6 {
            for m in 0..=6u32 {
                let all: Vec<_> = enumerate(n, m).collect();
                let p = rank_profile(&all);
                let g = gaussian_binomial(n, m as usize);
                assert!(p.sizes.iter().map(|&s| s as u64).eq(g.into_iter()), "A_{n}({m})");
                assert!(p.symmetric && p.unimodal);
            }
        }
    }

    #[test]
    fn sperner_small() {
        let all: Vec<_> = enumerate(4, 4).collect();
        let rep = sperner_check(&all, 2000).unwrap();
        assert_eq!(rep.max_antichain, 8);
        assert!(rep.holds);
        assert!(sperner_check(&all, 10).is_err());
        // two incomparable elements plus a common lower bound
        let v = [mono(&[2, 0, 0]), mono(&[0, 2, 0]), mono(&[1, 0, 1])];
        assert_eq!(sperner_check(&v, 10).unwrap().max_antichain, 2);
    }

    #[test]
    fn families_with_defects_fail() {
        let cfg = Config::default();
        let sig = Signature::new(4, vec![2, 0, 0]).unwrap();
        let fam = transversal_family(&sig, &cfg).unwrap();
        assert!(check_family(&fam, &cfg).unwrap().ok);
        let short = fam.without_chain(0);
        let rep = check_family(&short, &cfg).unwrap();
        assert!(!rep.ok && !rep.missing.is_empty());
    }

    #[test]
    fn slice_report() {
        let cfg = Config::default();
        let rep = verify_slice(4, 3, &cfg, true).unwrap();
        assert!(rep.ok, "{rep:?}");
        assert!(rep.sperner.unwrap().holds);
    }
}
