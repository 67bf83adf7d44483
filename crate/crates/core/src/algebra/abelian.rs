//! Finitely generated abelian groups in invariant-factor form, and graded
//! collections of them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `Z^rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `d_1 | d_2 | … | d_k` and every `d_i ≥ 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    rank: usize,
    torsion: Vec<BigUint>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/d`; `d = 0` gives `Z` and `d = 1` the trivial group.
    pub fn cyclic(d: u64) -> Self {
        Self::from_cyclic_orders([BigUint::from(d)])
    }

    /// Free rank plus arbitrary cyclic orders, brought into canonical form.
    pub fn new<I, T>(rank: usize, torsion: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let mut g = Self::from_cyclic_orders(torsion.into_iter().map(Into::into));
        g.rank += rank;
        g
    }

    /// Direct sum of cyclic groups `Z/c` (`c = 0` counts as `Z`).
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigUint>>(orders: I) -> Self {
        let mut rank = 0;
        let mut t = Vec::new();
        for c in orders {
            if c.is_zero() {
                rank += 1;
            } else if !c.is_one() {
                t.push(c);
            }
        }
        FgAbGroup {
            rank,
            torsion: normalize_torsion(t),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigUint {
        self.torsion.iter().product()
    }

    /// Smallest positive integer killing the torsion subgroup (1 if none).
    pub fn exponent(&self) -> BigUint {
        self.torsion.last().cloned().unwrap_or_else(BigUint::one)
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut t = self.torsion.clone();
        t.extend(other.torsion.iter().cloned());
        FgAbGroup {
            rank: self.rank + other.rank,
            torsion: normalize_torsion(t),
        }
    }

    /// `k` copies of `self`.
    pub fn power(&self, k: usize) -> FgAbGroup {
        let mut t = Vec::with_capacity(self.torsion.len() * k);
        for _ in 0..k {
            t.extend(self.torsion.iter().cloned());
        }
        FgAbGroup {
            rank: self.rank * k,
            torsion: normalize_torsion(t),
        }
    }

    /// The rational view: torsion dropped.
    pub fn free_part(&self) -> FgAbGroup {
        FgAbGroup::free(self.rank)
    }

    /// Prime-power cyclic factors, sorted by prime then exponent. Only a
    /// display aid; trial division is fine for the orders that occur here.
    pub fn primary_decomposition(&self) -> Vec<(BigUint, u32)> {
        let mut out = Vec::new();
        for d in &self.torsion {
            let mut m = d.clone();
            let mut p = BigUint::from(2u32);
            while &p * &p <= m {
                let mut e = 0;
                while (&m % &p).is_zero() {
                    m /= &p;
                    e += 1;
                }
                if e > 0 {
                    out.push((p.clone(), e));
                }
                p += 1u32;
            }
            if !m.is_one() {
                out.push((m, 1));
            }
        }
        out.sort();
        out
    }

    /// Text in the `Z^r ⊕ Z/d` style, with `0` for the trivial group.
    pub fn display_primary(&self) -> String {
        let mut parts = Vec::new();
        if self.rank == 1 {
            parts.push("Z".to_string());
        } else if self.rank > 1 {
            parts.push(format!("Z^{}", self.rank));
        }
        for (p, e) in self.primary_decomposition() {
            if e == 1 {
                parts.push(format!("Z/{p}"));
            } else {
                parts.push(format!("Z/{p}^{e}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

/// Replaces a list of cyclic orders (each ≥ 2) by invariant factors.
///
/// After the nested gcd/lcm sweep each entry divides every later one; the
/// multiset of orders keeps the isomorphism type (`Z/a ⊕ Z/b ≅ Z/gcd ⊕ Z/lcm`).
fn normalize_torsion(mut t: Vec<BigUint>) -> Vec<BigUint> {
    t.sort();
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            let g = t[i].gcd(&t[j]);
            let l = t[i].lcm(&t[j]);
            t[i] = g;
            t[j] = l;
        }
    }
    t.retain(|x| !x.is_one());
    t
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank == 1 {
            parts.push("Z".to_string());
        } else if self.rank > 1 {
            parts.push(format!("Z^{}", self.rank));
        }
        // Repeated factors are grouped: Z/2 ⊕ Z/2 ⊕ Z/2 prints as (Z/2)^3.
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && &self.torsion[j] == d {
                j += 1;
            }
            if j - i == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("(Z/{d})^{}", j - i));
            }
            i = j;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Whether a graded answer is known in all degrees or only up to a bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Truncation {
    #[default]
    Complete,
    TruncatedAbove(i64),
}

impl Truncation {
    /// The more restrictive of two truncations.
    pub fn meet(self, other: Truncation) -> Truncation {
        match (self, other) {
            (Truncation::Complete, t) | (t, Truncation::Complete) => t,
            (Truncation::TruncatedAbove(a), Truncation::TruncatedAbove(b)) => {
                Truncation::TruncatedAbove(a.min(b))
            }
        }
    }

    pub fn bound(self) -> Option<i64> {
        match self {
            Truncation::Complete => None,
            Truncation::TruncatedAbove(d) => Some(d),
        }
    }

    pub fn shifted(self, k: i64) -> Truncation {
        match self {
            Truncation::Complete => Truncation::Complete,
            Truncation::TruncatedAbove(d) => Truncation::TruncatedAbove(d + k),
        }
    }
}

/// Degree → group, with trivial degrees omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedAbGroup {
    components: BTreeMap<i64, FgAbGroup>,
    truncation: Truncation,
}

impl GradedAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// A single group placed in degree `d`.
    pub fn concentrated(d: i64, g: FgAbGroup) -> Self {
        Self::from_components([(d, g)])
    }

    pub fn from_components<I: IntoIterator<Item = (i64, FgAbGroup)>>(items: I) -> Self {
        let mut out = Self::default();
        for (d, g) in items {
            out.add_component(d, &g);
        }
        out
    }

    /// Adds `g` to whatever already sits in degree `d` (ignored beyond the truncation).
    pub fn add_component(&mut self, d: i64, g: &FgAbGroup) {
        if g.is_trivial() || self.truncation.bound().is_some_and(|b| d > b) {
            return;
        }
        let slot = self.components.entry(d).or_default();
        *slot = slot.direct_sum(g);
    }

    pub fn with_truncation(mut self, t: Truncation) -> Self {
        self.truncation = t;
        if let Some(b) = t.bound() {
            self.components.retain(|d, _| *d <= b);
        }
        self
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn get(&self, d: i64) -> FgAbGroup {
        self.components.get(&d).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> &BTreeMap<i64, FgAbGroup> {
        &self.components
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &FgAbGroup)> {
        self.components.iter().map(|(d, g)| (*d, g))
    }

    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.components.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.components.keys().next_back().copied()
    }

    /// Component in degree `d` moves to `d + k`; a truncation bound moves too.
    pub fn shift(&self, k: i64) -> GradedAbGroup {
        GradedAbGroup {
            components: self.components.iter().map(|(d, g)| (d + k, g.clone())).collect(),
            truncation: self.truncation.shifted(k),
        }
    }

    /// Degreewise sum; the result carries the most restrictive truncation.
    pub fn direct_sum<'a, I>(gs: I) -> GradedAbGroup
    where
        I: IntoIterator<Item = &'a GradedAbGroup>,
    {
        let mut trunc = Truncation::Complete;
        let mut acc: BTreeMap<i64, Vec<&FgAbGroup>> = BTreeMap::new();
        for g in gs {
            trunc = trunc.meet(g.truncation);
            for (d, c) in &g.components {
                acc.entry(*d).or_default().push(c);
            }
        }
        let mut out = GradedAbGroup::default().with_truncation(trunc);
        for (d, cs) in acc {
            let rank = cs.iter().map(|c| c.rank).sum();
            let tors = cs.iter().flat_map(|c| c.torsion.iter().cloned()).collect();
            out.add_component(
                d,
                &FgAbGroup {
                    rank,
                    torsion: normalize_torsion(tors),
                },
            );
        }
        out
    }

    /// `k` copies.
    pub fn power(&self, k: usize) -> GradedAbGroup {
        GradedAbGroup {
            components: self
                .components
                .iter()
                .filter(|_| k > 0)
                .map(|(d, g)| (*d, g.power(k)))
                .collect(),
            truncation: self.truncation,
        }
    }

    /// Drops degrees above `d` and records the bound.
    pub fn truncate_above(&self, d: i64) -> GradedAbGroup {
        self.clone()
            .with_truncation(self.truncation.meet(Truncation::TruncatedAbove(d)))
    }

    /// Drops degrees below `d` (no marker: used for known-zero ranges).
    pub fn restrict_below(&self, d: i64) -> GradedAbGroup {
        let mut out = self.clone();
        out.components.retain(|k, _| *k >= d);
        out
    }

    /// The rational view: free ranks only.
    pub fn free_part(&self) -> GradedAbGroup {
        GradedAbGroup::from_components(self.components.iter().map(|(d, g)| (*d, g.free_part())))
            .with_truncation(self.truncation)
    }

    /// Same components, ignoring truncation markers.
    pub fn same_groups(&self, other: &GradedAbGroup) -> bool {
        self.components == other.components
    }

    /// Components agree in every degree `≤ d`.
    pub fn agrees_up_to(&self, other: &GradedAbGroup, d: i64) -> bool {
        let a: Vec<_> = self.components.range(..=d).collect();
        let b: Vec<_> = other.components.range(..=d).collect();
        a == b
    }
}

impl fmt::Display for GradedAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            write!(f, "0")?;
        } else {
            let parts: Vec<String> = self
                .components
                .iter()
                .map(|(d, g)| format!("{d}: {g}"))
                .collect();
            write!(f, "{{{}}}", parts.join(", "))?;
        }
        if let Truncation::TruncatedAbove(d) = self.truncation {
            write!(f, " (degrees ≤ {d})")?;
        }
        Ok(())
    }
}
