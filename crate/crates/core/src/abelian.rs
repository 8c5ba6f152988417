//! Finitely generated abelian groups in primary decomposition, together with the
//! functors `⊗`, `Tor`, `Hom` and `Ext` needed by the universal coefficient and
//! Künneth theorems.
//!
//! A group is stored as `Z^k ⊕ Z/p₁^e₁ ⊕ … ⊕ Z/p_s^e_s` with the prime powers kept
//! sorted, so structural equality is isomorphism. Every functor is bilinear over
//! direct sums, which reduces it to the cyclic cases:
//!
//! | functor          | `Z`, `Z`   | `Z`, `Z/n` | `Z/m`, `Z/n`   |
//! |------------------|-----------|-----------|----------------|
//! | `m ⊗ n`          | `Z`       | `Z/n`     | `Z/gcd(m, n)`  |
//! | `Tor(m, n)`      | `0`       | `0`       | `Z/gcd(m, n)`  |
//! | `Hom(m, n)`      | `Z`       | `Z/n`     | `Z/gcd(m, n)`  |
//! | `Ext(m, n)`      | `0`       | `0`       | `Z/gcd(m, n)`  |
//!
//! plus `Hom(Z/m, Z) = 0` and `Ext(Z/m, Z) = Z/m`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^free_rank ⊕ ⨁ Z/q` with every `q` a prime power.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

/// Coefficients used by the universal coefficient theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientRing {
    Integers,
    /// `Z/m` with `m > 1`.
    Modular(u64),
}

impl CoefficientRing {
    pub const Z2: CoefficientRing = CoefficientRing::Modular(2);

    /// The ring as an abelian group.
    pub fn as_group(self) -> FgAbelianGroup {
        match self {
            CoefficientRing::Integers => FgAbelianGroup::free(1),
            CoefficientRing::Modular(m) => FgAbelianGroup::cyclic(m),
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Splits `n > 1` into its prime-power factors.
pub fn prime_power_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The prime `p` if `q = p^e` with `e ≥ 1`.
pub fn prime_of_power(q: u64) -> Option<u64> {
    match prime_power_factors(q).as_slice() {
        [single] if *single == q => {
            let mut p = 2;
            while !q.is_multiple_of(p) {
                p += 1;
            }
            Some(p)
        }
        _ => None,
    }
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`, split into primary parts. `Z/1` is the trivial group.
    ///
    /// # Panics
    /// If `n == 0`; use [`FgAbelianGroup::free`] for `Z`.
    pub fn cyclic(n: u64) -> Self {
        assert!(n > 0, "Z/0 is Z; use FgAbelianGroup::free");
        Self {
            free_rank: 0,
            torsion: prime_power_factors(n),
        }
        .canonical()
    }

    /// Builds a group from a free rank and arbitrary torsion orders (invariant
    /// factors or not); each order is split into prime powers.
    pub fn new(free_rank: usize, orders: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut torsion = Vec::new();
        for n in orders {
            if n == 0 {
                return Err(Error::Misuse("torsion order 0 is not a finite cyclic group".into()));
            }
            torsion.extend(prime_power_factors(n));
        }
        Ok(Self { free_rank, torsion }.canonical())
    }

    /// Builds a group from prime-power orders only; anything else is rejected.
    pub fn from_primary(free_rank: usize, prime_powers: impl IntoIterator<Item = u64>) -> Result<Self> {
        let torsion: Vec<u64> = prime_powers.into_iter().collect();
        if let Some(bad) = torsion.iter().find(|&&q| prime_of_power(q).is_none()) {
            return Err(Error::Misuse(format!("{bad} is not a prime power > 1")));
        }
        Ok(Self { free_rank, torsion }.canonical())
    }

    fn canonical(mut self) -> Self {
        self.torsion.sort_unstable_by_key(|&q| (prime_of_power(q).unwrap_or(q), q));
        self
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Prime-power orders of the cyclic torsion summands.
    pub fn torsion_orders(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// The `p`-primary torsion summand.
    pub fn primary_part(&self, p: u64) -> Self {
        Self {
            free_rank: 0,
            torsion: self
                .torsion
                .iter()
                .copied()
                .filter(|&q| prime_of_power(q) == Some(p))
                .collect(),
        }
    }

    /// Torsion of order prime to 2 (the part that dies after tensoring with `Z/2`).
    pub fn odd_torsion(&self) -> Self {
        Self {
            free_rank: 0,
            torsion: self.torsion.iter().copied().filter(|q| q % 2 == 1).collect(),
        }
    }

    /// Number of cyclic 2-primary summands.
    pub fn two_torsion_count(&self) -> usize {
        self.torsion.iter().filter(|&&q| q % 2 == 0).count()
    }

    /// Dimension over `Z/p` when every summand is `Z/p`; `None` otherwise.
    pub fn elementary_rank(&self, p: u64) -> Option<usize> {
        (self.free_rank == 0 && self.torsion.iter().all(|&q| q == p)).then_some(self.torsion.len())
    }

    /// Number of elements; `None` for infinite groups.
    pub fn order(&self) -> Option<u128> {
        (self.free_rank == 0).then(|| self.torsion.iter().map(|&q| q as u128).product())
    }

    fn summands(&self) -> impl Iterator<Item = Option<u64>> + '_ {
        std::iter::repeat_n(None, self.free_rank).chain(self.torsion.iter().map(|&q| Some(q)))
    }

    fn from_cyclics(parts: impl IntoIterator<Item = Option<u64>>) -> Self {
        let mut free_rank = 0;
        let mut torsion = Vec::new();
        for part in parts {
            match part {
                None => free_rank += 1,
                Some(1) => {}
                Some(q) => torsion.extend(prime_power_factors(q)),
            }
        }
        Self { free_rank, torsion }.canonical()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut torsion = self.torsion.clone();
        torsion.extend_from_slice(&other.torsion);
        Self {
            free_rank: self.free_rank + other.free_rank,
            torsion,
        }
        .canonical()
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::from_cyclics(self.summands().flat_map(|a| {
            other.summands().map(move |b| match (a, b) {
                (None, None) => None,
                (None, Some(n)) | (Some(n), None) => Some(n),
                (Some(m), Some(n)) => Some(gcd(m, n)),
            })
        }))
    }

    pub fn tor(&self, other: &Self) -> Self {
        Self::from_cyclics(self.torsion.iter().flat_map(|&m| {
            other.torsion.iter().map(move |&n| Some(gcd(m, n)))
        }))
    }

    /// `Hom(self, R)`.
    pub fn hom_to(&self, ring: CoefficientRing) -> Self {
        Self::from_cyclics(self.summands().filter_map(|a| match (a, ring) {
            (None, CoefficientRing::Integers) => Some(None),
            (None, CoefficientRing::Modular(m)) => Some(Some(m)),
            (Some(_), CoefficientRing::Integers) => None,
            (Some(n), CoefficientRing::Modular(m)) => Some(Some(gcd(n, m))),
        }))
    }

    /// `Ext(self, R)`.
    pub fn ext_to(&self, ring: CoefficientRing) -> Self {
        Self::from_cyclics(self.torsion.iter().map(|&n| match ring {
            CoefficientRing::Integers => Some(n),
            CoefficientRing::Modular(m) => Some(gcd(n, m)),
        }))
    }
}

/// `Hⁿ(X; R) ≅ Ext(Hₙ₋₁(X), R) ⊕ Hom(Hₙ(X), R)`; the splitting is not natural
/// but the isomorphism type is.
pub fn cohomology_via_uct(h_n: &FgAbelianGroup, h_n_minus_1: &FgAbelianGroup, ring: CoefficientRing) -> FgAbelianGroup {
    h_n_minus_1.ext_to(ring).direct_sum(&h_n.hom_to(ring))
}

/// `Hₙ(X; R) ≅ Hₙ(X) ⊗ R ⊕ Tor(Hₙ₋₁(X), R)`.
pub fn homology_via_uct(h_n: &FgAbelianGroup, h_n_minus_1: &FgAbelianGroup, ring: CoefficientRing) -> FgAbelianGroup {
    let r = ring.as_group();
    h_n.tensor(&r).direct_sum(&h_n_minus_1.tor(&r))
}

/// Integral Künneth formula:
/// `Hₙ(X × Y) ≅ ⨁_{i+j=n} Hᵢ(X) ⊗ Hⱼ(Y) ⊕ ⨁_{i+j=n-1} Tor(Hᵢ(X), Hⱼ(Y))`.
///
/// Both slices must cover degrees `0..=n`.
pub fn product_homology(left: &[FgAbelianGroup], right: &[FgAbelianGroup], n: usize) -> Result<FgAbelianGroup> {
    for (side, list) in [("first factor", left), ("second factor", right)] {
        if list.len() <= n {
            return Err(Error::UnsupportedDegree {
                needed: n,
                available: list.len().saturating_sub(1),
                context: format!("integral homology of the {side}"),
            });
        }
    }
    let mut out = FgAbelianGroup::trivial();
    for i in 0..=n {
        out = out.direct_sum(&left[i].tensor(&right[n - i]));
    }
    for i in 0..n {
        out = out.direct_sum(&left[i].tor(&right[n - 1 - i]));
    }
    Ok(out)
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|q| format!("Z/{q}")));
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for FgAbelianGroup {
    type Err = Error;

    /// Accepts `0`, `Z`, `Z^k`, `Z/m` joined by `+` or `⊕`; `Z/m` with composite
    /// `m` is split into primary parts.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |part: &str| Error::Document(format!("cannot read group summand {part:?} in {s:?}"));
        let mut free_rank = 0;
        let mut orders = Vec::new();
        for part in s.split(['+', '⊕']).map(str::trim) {
            if part == "0" {
                continue;
            }
            if part == "Z" {
                free_rank += 1;
            } else if let Some(k) = part.strip_prefix("Z^") {
                free_rank += k.trim().parse::<usize>().map_err(|_| bad(part))?;
            } else if let Some(m) = part.strip_prefix("Z/") {
                let m: u64 = m.trim().parse().map_err(|_| bad(part))?;
                if m < 2 {
                    return Err(bad(part));
                }
                orders.push(m);
            } else {
                return Err(bad(part));
            }
        }
        Self::new(free_rank, orders)
    }
}

impl Serialize for FgAbelianGroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FgAbelianGroup {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> FgAbelianGroup {
        s.parse().unwrap()
    }

    #[test]
    fn direct_sum_merges_multisets() {
        assert_eq!(g("Z + Z/2").direct_sum(&g("Z/2")), g("Z + Z/2 + Z/2"));
        assert_eq!(g("0").direct_sum(&g("Z^3")), g("Z^3"));
        assert_eq!(g("Z + Z/4").direct_sum(&g("Z/3")), g("Z + Z/4 + Z/3"));
    }

    #[test]
    fn canonical_form_is_order_independent() {
        assert_eq!(FgAbelianGroup::new(1, [3, 4]).unwrap(), FgAbelianGroup::new(1, [4, 3]).unwrap());
        assert_eq!(FgAbelianGroup::cyclic(12), g("Z/4 + Z/3"));
        assert_eq!(g("Z/6").torsion_orders(), &[2, 3]);
    }

    #[test]
    fn from_primary_rejects_composites() {
        assert!(FgAbelianGroup::from_primary(0, [6]).is_err());
        assert!(FgAbelianGroup::from_primary(0, [1]).is_err());
        assert!(FgAbelianGroup::from_primary(2, [8, 9, 5]).is_ok());
    }

    #[test]
    fn cyclic_tensor_rules() {
        assert_eq!(g("Z/4").tensor(&g("Z/2")), g("Z/2"));
        assert_eq!(g("Z/2").tensor(&g("Z/3")), g("0"));
        assert_eq!(g("Z^2").tensor(&g("Z/5")), g("Z/5 + Z/5"));
        assert_eq!(g("Z/9 + Z/25").tensor(&g("Z/2")), g("0"));
    }

    #[test]
    fn tor_rules() {
        assert_eq!(g("Z^3").tor(&g("Z/4 + Z")), g("0"));
        assert_eq!(g("Z/2").tor(&g("Z/2")), g("Z/2"));
        assert_eq!(g("Z/4").tor(&g("Z/6")), g("Z/2"));
    }

    #[test]
    fn hom_and_ext_rules() {
        use CoefficientRing::*;
        assert_eq!(g("Z").hom_to(CoefficientRing::Z2), g("Z/2"));
        assert_eq!(g("Z/3").hom_to(Integers), g("0"));
        assert_eq!(g("Z/4").hom_to(Modular(6)), g("Z/2"));
        assert_eq!(g("Z^2").ext_to(Modular(2)), g("0"));
        assert_eq!(g("Z/8").ext_to(Modular(2)), g("Z/2"));
        assert_eq!(g("Z/8 + Z").ext_to(Integers), g("Z/8"));
    }

    #[test]
    fn uct_for_low_degrees() {
        let z = g("Z");
        let zero = g("0");
        // H1 = Z, H0 = Z: one-dimensional H¹ with Z/2 coefficients
        assert_eq!(cohomology_via_uct(&z, &z, CoefficientRing::Z2), g("Z/2"));
        assert_eq!(cohomology_via_uct(&zero, &z, CoefficientRing::Z2), zero);
        assert_eq!(cohomology_via_uct(&zero, &z, CoefficientRing::Integers), zero);
    }

    #[test]
    fn product_homology_rejects_missing_degrees() {
        let short = vec![g("Z"), g("Z")];
        let err = product_homology(&short, &short, 2).unwrap_err();
        assert!(matches!(err, Error::UnsupportedDegree { needed: 2, .. }));
        assert_eq!(product_homology(&short, &short, 0).unwrap(), g("Z"));
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "Z", "Z^3 + Z/2 + Z/2 + Z/27 + Z/5"] {
            assert_eq!(g(s).to_string(), s);
        }
    }
}
