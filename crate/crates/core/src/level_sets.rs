//! Tropical level sets `Q_n(d_0, ..., d_k)` and the maps between them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::factorization::canonical_tableau;
use crate::poset::{check_cap, enumerate, slice_size, Monomial, Partition};
use crate::tropical::{deg_vector, max_secant};
use crate::Config;

/// `(d_0, ..., d_k)` over `A_n`, `k = ⌊n/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    n: usize,
    d: Vec<u32>,
}

impl Signature {
    pub fn new(n: usize, d: Vec<u32>) -> Result<Self> {
        if d.len() != max_secant(n) + 1 {
            return Err(Error::Precondition(format!(
                "signature over n = {n} needs {} entries, got {}",
                max_secant(n) + 1,
                d.len()
            )));
        }
        Ok(Signature { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> &[u32] {
        &self.d
    }

    /// `m = Σ d_j (j + 1)`.
    pub fn degree(&self) -> u32 {
        self.d.iter().enumerate().map(|(j, &dj)| dj * (j as u32 + 1)).sum()
    }

    /// `d = Σ d_j`, the exponent used by the two embeddings.
    pub fn total(&self) -> u32 {
        self.d.iter().sum()
    }

    /// `(d_1, ..., d_k)` over `A_{n-2}`.
    pub fn below(&self) -> Result<Signature> {
        if self.n < 2 {
            return Err(Error::Precondition(format!(
                "no level set below n = {}",
                self.n
            )));
        }
        Signature::new(self.n - 2, self.d[1..].to_vec())
    }

    /// The unique nonzero block `r`, if there is exactly one.
    pub fn single_block(&self) -> Option<usize> {
        let mut nz = self.d.iter().enumerate().filter(|(_, &x)| x > 0);
        match (nz.next(), nz.next()) {
            (Some((r, _)), None) => Some(r),
            _ => None,
        }
    }

    /// Right-hand side `Σ_{j>=1} d_j (n - 2j) j` of the stitching inequality,
    /// which is also the edge count of a maximal chain in the level set below.
    pub fn stitch_bound(&self) -> u64 {
        self.d
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &dj)| dj as u64 * (self.n - 2 * j) as u64 * j as u64)
            .sum()
    }

    /// `1 + 2 d_0 >= Σ_{j>=1} d_j (n - 2j) j`.
    pub fn satisfies_stitch_inequality(&self) -> bool {
        1 + 2 * self.d[0] as u64 >= self.stitch_bound()
    }

    /// Every signature over `A_n` of degree `m`, in increasing order.
    pub fn all_of_degree(n: usize, m: u32) -> Vec<Signature> {
        fn go(n: usize, j: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Signature>) {
            if j == 0 {
                // d_0 takes whatever degree is left
                let mut d = vec![left];
                d.extend(cur.iter().rev());
                out.push(Signature { n, d });
                return;
            }
            let w = j as u32 + 1;
            for dj in 0..=left / w {
                cur.push(dj);
                go(n, j - 1, left - dj * w, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_secant(n), m, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q_{}(", self.n)?;
        for (i, x) in self.d.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.d.serialize(s)
    }
}

/// The level-set label of `μ`.
pub fn signature(mu: &Monomial) -> Signature {
    Signature {
        n: mu.n(),
        d: deg_vector(mu),
    }
}

/// Sort key: weight descending, then lexicographic.
pub fn member_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    b.weight().cmp(&a.weight()).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelSet {
    signature: Signature,
    members: Vec<Monomial>,
}

impl LevelSet {
    fn from_members(signature: Signature, mut members: Vec<Monomial>) -> Self {
        members.sort_by(member_order);
        LevelSet { signature, members }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mu: &Monomial) -> bool {
        self.members.binary_search_by(|x| member_order(x, mu)).is_ok()
    }

    /// Highest-weight member.
    pub fn top(&self) -> Option<&Monomial> {
        self.members.first()
    }

    /// Lowest-weight member.
    pub fn bottom(&self) -> Option<&Monomial> {
        self.members.last()
    }
}

/// `Q_n(d)` by filtering the degree slice.
pub fn enumerate_level(sig: &Signature, cfg: &Config) -> Result<LevelSet> {
    check_cap(slice_size(sig.n, sig.degree()), cfg.max_poset)?;
    let members = enumerate(sig.n, sig.degree())
        .filter(|mu| deg_vector(mu) == sig.d)
        .collect();
    Ok(LevelSet::from_members(sig.clone(), members))
}

/// All nonempty level sets of `A_n(m)`, ordered by signature.
pub fn level_decomposition(n: usize, m: u32, cfg: &Config) -> Result<Vec<LevelSet>> {
    check_cap(slice_size(n, m), cfg.max_poset)?;
    let mut groups: BTreeMap<Signature, Vec<Monomial>> = BTreeMap::new();
    for mu in enumerate(n, m) {
        groups.entry(signature(&mu)).or_default().push(mu);
    }
    Ok(groups
        .into_iter()
        .map(|(s, v)| LevelSet::from_members(s, v))
        .collect())
}

/// `μ_{n,r} = z_0 z_2 ... z_{2r}`.
fn top_generator(n: usize, r: usize) -> Vec<u32> {
    let mut exps = vec![0; n + 1];
    for j in 0..=r {
        exps[2 * j] = 1;
    }
    exps
}

/// `(μ_n(d), ν_n(d))`: the unique highest- and lowest-weight members.
pub fn extremes(sig: &Signature) -> (Monomial, Monomial) {
    let mut exps = vec![0u32; sig.n + 1];
    for (r, &dr) in sig.d.iter().enumerate() {
        for (e, g) in exps.iter_mut().zip(top_generator(sig.n, r)) {
            *e += g * dr;
        }
    }
    let top = Monomial::new(exps).expect("valid exponent vector");
    let bottom = top.tau();
    (top, bottom)
}

fn check_embedding_source(sig: &Signature, mu0: &Monomial) -> Result<()> {
    let below = sig.below()?;
    if mu0.n() != below.n {
        return Err(Error::DimensionMismatch {
            expected: below.n,
            found: mu0.n(),
        });
    }
    let found = deg_vector(mu0);
    if found != below.d {
        return Err(Error::SignatureMismatch {
            expected: below.d,
            found,
        });
    }
    Ok(())
}

/// `μ0 ↦ z_n^d μ0`, embedding `Q_{n-2}(d_1..d_k)` into `Q_n(d)` at the low end.
pub fn embed_low(sig: &Signature, mu0: &Monomial) -> Result<Monomial> {
    check_embedding_source(sig, mu0)?;
    let mut exps = mu0.exponents().to_vec();
    exps.push(0);
    exps.push(sig.total());
    Monomial::new(exps)
}

/// `μ0 ↦ z_0^d κ(μ0)` with `κ: z_i ↦ z_{i+2}`, the high-end embedding.
pub fn embed_high(sig: &Signature, mu0: &Monomial) -> Result<Monomial> {
    check_embedding_source(sig, mu0)?;
    let mut exps = vec![sig.total(), 0];
    exps.extend_from_slice(mu0.exponents());
    Monomial::new(exps)
}

/// Which end of `Q_n(d)` an embedded copy of `Q_{n-2}` sits at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    High,
    Low,
}

/// Whether `μ` lies in the image of the `side` embedding: `a_0` (high) or
/// `a_n` (low) equals the maximal adjacent pair sum.
pub fn image_membership(mu: &Monomial, side: End) -> bool {
    let Some(max) = mu.max_pair_sum() else {
        return false;
    };
    let a = mu.exponents();
    match side {
        End::High => a[0] == max,
        End::Low => a[mu.n()] == max,
    }
}

/// Inverse of the embedding on its image.
pub fn embedding_preimage(mu: &Monomial, side: End) -> Option<Monomial> {
    if !image_membership(mu, side) || mu.n() < 2 {
        return None;
    }
    let a = mu.exponents();
    let exps = match side {
        End::High => a[2..].to_vec(),
        End::Low => a[..a.len() - 2].to_vec(),
    };
    Monomial::new(exps).ok()
}

/// A verified order isomorphism between a level set and a target poset.
#[derive(Debug, Clone)]
pub struct LevelIso {
    source: Signature,
    pairs: Vec<(Monomial, Monomial)>,
    forward: HashMap<Monomial, usize>,
    backward: HashMap<Monomial, usize>,
}

impl LevelIso {
    /// Checks that `map` is a bijection from `source` onto `target` preserving
    /// and reflecting the order.
    fn verified(
        source: &LevelSet,
        target: &[Monomial],
        map: impl Fn(&Monomial) -> Result<Monomial>,
    ) -> Result<LevelIso> {
        let fail = |msg: String| {
            Err(Error::Verification(format!(
                "isomorphism for {}: {msg}",
                source.signature
            )))
        };
        let pairs = source
            .members()
            .iter()
            .map(|mu| Ok((mu.clone(), map(mu)?)))
            .collect::<Result<Vec<_>>>()?;
        let forward: HashMap<_, _> = pairs.iter().enumerate().map(|(i, p)| (p.0.clone(), i)).collect();
        let backward: HashMap<_, _> = pairs.iter().enumerate().map(|(i, p)| (p.1.clone(), i)).collect();
        if backward.len() != pairs.len() {
            return fail("map is not injective".into());
        }
        if target.len() != pairs.len() || !target.iter().all(|t| backward.contains_key(t)) {
            return fail(format!(
                "image has {} elements, target has {}",
                pairs.len(),
                target.len()
            ));
        }
        for (a, fa) in &pairs {
            for (b, fb) in &pairs {
                if a.leq(b)? != fa.leq(fb)? {
                    return fail(format!("order not preserved between {a} and {b}"));
                }
            }
        }
        Ok(LevelIso {
            source: source.signature.clone(),
            pairs,
            forward,
            backward,
        })
    }

    pub fn source(&self) -> &Signature {
        &self.source
    }

    /// `(source, image)` pairs in source member order.
    pub fn pairs(&self) -> &[(Monomial, Monomial)] {
        &self.pairs
    }

    pub fn forward(&self, mu: &Monomial) -> Option<&Monomial> {
        self.forward.get(mu).map(|&i| &self.pairs[i].1)
    }

    pub fn backward(&self, nu: &Monomial) -> Option<&Monomial> {
        self.backward.get(nu).map(|&i| &self.pairs[i].0)
    }
}

/// Shifted row `(i_0, i_1 - 2, ..., i_r - 2r)` of a `<₁`-chain.
fn shifted_row(row: &[usize]) -> Vec<u32> {
    row.iter().enumerate().map(|(j, &i)| (i - 2 * j) as u32).collect()
}

/// Image of `μ ∈ Q_n(0, .., d_r, .., 0)` as a partition in `L(r + 1, d_r (n - 2r))`:
/// the sum of the shifted rows of its canonical tableau.
pub fn block_partition(mu: &Monomial, r: usize, dr: u32) -> Result<Partition> {
    let tableau = canonical_tableau(mu)?;
    let mut parts = vec![0u32; r + 1];
    for row in tableau.rows() {
        if row.len() != r + 1 {
            return Err(Error::Precondition(format!(
                "{mu} has a tableau row of length {}, expected {}",
                row.len(),
                r + 1
            )));
        }
        for (p, s) in parts.iter_mut().zip(shifted_row(row)) {
            *p += s;
        }
    }
    Partition::new(parts, dr * (mu.n() - 2 * r) as u32)
}

/// `Q_n(0, .., d_r, .., 0) ≅ A_{r+1}(d_r (n - 2r))`.
///
/// Each member goes to the conjugate of its [`block_partition`], read as a
/// monomial in `z_0..z_{r+1}`. The result is checked to be an order
/// isomorphism onto the whole slice before it is returned.
pub fn single_block_iso(sig: &Signature, cfg: &Config) -> Result<LevelIso> {
    let r = sig.single_block().ok_or_else(|| {
        Error::Precondition(format!("{sig} does not have exactly one nonzero block"))
    })?;
    let dr = sig.d[r];
    let target_degree = dr * (sig.n - 2 * r) as u32;
    check_cap(slice_size(r + 1, target_degree), cfg.max_poset)?;
    let source = enumerate_level(sig, cfg)?;
    let target: Vec<Monomial> = enumerate(r + 1, target_degree).collect();
    LevelIso::verified(&source, &target, |mu| {
        Ok(Monomial::from_partition(&block_partition(mu, r, dr)?.conjugate()))
    })
}

/// For even `n` and `d_k > 0`: `Q_n(d) ≅ Q_n(d_0, .., d_{k-1}, 0)` by dividing
/// out `(z_0 z_2 ... z_n)^{d_k}`. Verified like [`single_block_iso`].
pub fn central_factor_iso(sig: &Signature, cfg: &Config) -> Result<(LevelIso, Signature)> {
    let k = max_secant(sig.n);
    if !sig.n.is_multiple_of(2) || sig.d[k] == 0 {
        return Err(Error::Precondition(format!(
            "{sig} has no central factor (needs even n and d_k > 0)"
        )));
    }
    let factor = Monomial::new(top_generator(sig.n, k).iter().map(|e| e * sig.d[k]).collect())?;
    let mut reduced = sig.d.clone();
    reduced[k] = 0;
    let reduced = Signature::new(sig.n, reduced)?;
    let source = enumerate_level(sig, cfg)?;
    let target = enumerate_level(&reduced, cfg)?;
    let iso = LevelIso::verified(&source, target.members(), |mu| {
        mu.div(&factor).ok_or_else(|| {
            Error::Verification(format!("{factor} does not divide {mu}"))
        })
    })?;
    Ok((iso, reduced))
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

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&mono(&[4, 3, 2, 1, 1, 4])).d(), &[2, 2, 3]);
        assert_eq!(signature(&mono(&[1, 1, 1, 0, 1, 1])).d(), &[0, 1, 1]);
        for n in 0..=7 {
            let mut d = vec![0; max_secant(n) + 1];
            d[0] = 4;
            assert_eq!(signature(&Monomial::power(n, 0, 4)).d(), d.as_slice());
        }
        assert!(Signature::new(5, vec![1, 2]).is_err());
        assert_eq!(sig(5, &[2, 2, 3]).degree(), 15);
    }

    #[test]
    fn level_enumeration() {
        let cfg = Config::default();
        let q1 = enumerate_level(&sig(1, &[4]), &cfg).unwrap();
        assert_eq!(q1.len(), 5);
        for m in 0..=6u32 {
            let total: usize = Signature::all_of_degree(2, m)
                .iter()
                .map(|s| enumerate_level(s, &cfg).unwrap().len())
                .sum();
            assert_eq!(total as u64, slice_size(2, m));
        }
        let q = enumerate_level(&sig(5, &[0, 1, 1]), &cfg).unwrap();
        assert!(q.contains(&mono(&[1, 1, 1, 0, 1, 1])));
        assert!(q.contains(&mono(&[2, 0, 1, 0, 1, 1])));
        assert!(!q.contains(&mono(&[5, 0, 0, 0, 0, 0])));
        let tiny = Config {
            max_poset: 10,
            ..Config::default()
        };
        assert!(matches!(
            enumerate_level(&sig(5, &[0, 1, 1]), &tiny),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn all_signatures_nonempty_and_complete() {
        let cfg = Config::default();
        for n in 0..=6 {
            for m in 0..=6 {
                let found: Vec<_> = level_decomposition(n, m, &cfg)
                    .unwrap()
                    .into_iter()
                    .map(|l| l.signature().clone())
                    .collect();
                assert_eq!(found, Signature::all_of_degree(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn extreme_members() {
        let (top, bottom) = extremes(&sig(5, &[0, 1, 1]));
        assert_eq!(top, mono(&[2, 0, 2, 0, 1, 0]));
        assert_eq!(bottom, mono(&[0, 1, 0, 2, 0, 2]));
        assert_eq!((top.weight(), bottom.weight()), (9, -9));
        let (t, b) = extremes(&sig(4, &[3, 0, 0]));
        assert_eq!((t, b), (Monomial::power(4, 0, 3), Monomial::power(4, 4, 3)));
        let (t, b) = extremes(&sig(2, &[0, 1]));
        assert_eq!(t, mono(&[1, 0, 1]));
        assert_eq!(t, b);
        assert_eq!(t.weight(), 0);

        let cfg = Config::default();
        let q = enumerate_level(&sig(5, &[1, 1, 1]), &cfg).unwrap();
        let (t, b) = extremes(q.signature());
        assert_eq!(q.top(), Some(&t));
        assert_eq!(q.bottom(), Some(&b));
    }

    #[test]
    fn embeddings() {
        let s = sig(5, &[0, 1, 1]);
        let mu0 = mono(&[1, 1, 1, 0]);
        assert_eq!(embed_low(&s, &mu0).unwrap(), mono(&[1, 1, 1, 0, 0, 2]));
        assert_eq!(embed_high(&s, &mu0).unwrap(), mono(&[2, 0, 1, 1, 1, 0]));
        assert_eq!(signature(&embed_low(&s, &mu0).unwrap()), s);

        let below = s.below().unwrap();
        let (t0, b0) = extremes(&below);
        let (t, b) = extremes(&s);
        assert_eq!(embed_low(&s, &b0).unwrap(), b);
        assert_eq!(embed_high(&s, &t0).unwrap(), t);

        let s = sig(4, &[3, 0, 0]);
        assert_eq!(
            embed_low(&s, &Monomial::one(2)).unwrap(),
            Monomial::power(4, 4, 3)
        );

        assert!(matches!(
            embed_low(&sig(5, &[0, 1, 1]), &mono(&[2, 0, 0, 0])),
            Err(Error::SignatureMismatch { .. })
        ));
        assert!(embed_low(&sig(5, &[0, 1, 1]), &mono(&[1, 1])).is_err());
    }

    #[test]
    fn high_embedding_is_conjugated_low_embedding() {
        let cfg = Config::default();
        for n in 2..=6 {
            for m in 0..=5 {
                for s in Signature::all_of_degree(n, m) {
                    let below = enumerate_level(&s.below().unwrap(), &cfg).unwrap();
                    for mu0 in below.members() {
                        let lhs = embed_low(&s, &mu0.tau()).unwrap().tau();
                        assert_eq!(lhs, embed_high(&s, mu0).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn image_tests() {
        assert!(image_membership(&mono(&[2, 0, 1, 1, 1, 0]), End::High));
        assert!(image_membership(&mono(&[1, 1, 1, 0, 0, 2]), End::Low));
        assert!(!image_membership(&mono(&[1, 1, 1, 0, 1, 1]), End::High));
        assert_eq!(
            embedding_preimage(&mono(&[2, 0, 1, 1, 1, 0]), End::High),
            Some(mono(&[1, 1, 1, 0]))
        );
    }

    #[test]
    fn single_block_generator_map() {
        let cfg = Config::default();
        let iso = single_block_iso(&sig(5, &[0, 0, 1]), &cfg).unwrap();
        assert_eq!(iso.pairs().len(), 4);
        let p = block_partition(&mono(&[1, 0, 0, 1, 0, 1]), 2, 1).unwrap();
        assert_eq!(p.parts(), &[0, 1, 1]);
        let s = sig(4, &[0, 0, 1]);
        let iso = single_block_iso(&s, &cfg).unwrap();
        assert_eq!(iso.pairs().len(), 1);
        assert!(single_block_iso(&sig(5, &[0, 1, 1]), &cfg).is_err());
    }

    #[test]
    fn q3_single_block_matches_a2() {
        let cfg = Config::default();
        for d1 in 1..=3 {
            let iso = single_block_iso(&sig(3, &[0, d1]), &cfg).unwrap();
            assert_eq!(iso.pairs().len() as u64, slice_size(2, d1));
        }
    }

    #[test]
    fn central_factor() {
        let cfg = Config::default();
        let (iso, reduced) = central_factor_iso(&sig(4, &[0, 1, 1]), &cfg).unwrap();
        assert_eq!(reduced, sig(4, &[0, 1, 0]));
        assert_eq!(iso.pairs().len(), 6);
        assert!(central_factor_iso(&sig(5, &[0, 1, 1]), &cfg).is_err());
    }

    #[test]
    fn stitch_inequality() {
        assert!(sig(5, &[2, 1, 1]).satisfies_stitch_inequality());
        assert!(!sig(5, &[1, 1, 1]).satisfies_stitch_inequality());
        assert_eq!(sig(5, &[1, 1, 1]).stitch_bound(), 5);
    }
}
