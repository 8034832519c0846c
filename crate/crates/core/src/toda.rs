//! Degree lattice of `P(b_{k,l}) ⊗ H^{*,*}(U(L))` below the range where
//! Toda's generator table is complete, and the searches run over it.
//!
//! Every class is a product `x · b` of a table generator `x` (bidegree
//! `(s, q·poly(p))`) and a monomial `b` in the `b_{k,l}` (bidegree
//! `(2, p^{l+1} q_k)` each). Total degrees `w = t - s` add under products,
//! and the residue `u = w mod (pq - 2)` tracks multiplication by `b_{1,0}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::degree::{beta_modulus, qk};
use crate::error::{Error, Result};

/// One row of the generator table: cohomological degree `s` and internal
/// degree `q * (c2 p^2 + c1 p + c0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UlGenerator {
    pub name: &'static str,
    pub s: u64,
    /// `(c2, c1, c0)`.
    pub t_over_q: [u64; 3],
}

impl UlGenerator {
    const fn new(name: &'static str, s: u64, t_over_q: [u64; 3]) -> Self {
        UlGenerator { name, s, t_over_q }
    }

    pub fn t_over_q_at(&self, p: u64) -> u64 {
        let [c2, c1, c0] = self.t_over_q;
        c2 * p * p + c1 * p + c0
    }

    pub fn t_at(&self, p: u64) -> u64 {
        2 * (p - 1) * self.t_over_q_at(p)
    }

    pub fn total_degree_at(&self, p: u64) -> u64 {
        self.t_at(p) - self.s
    }
}

/// Additive generators of `H^{s,t}(U(L))` for `t - s <= (2p^2 + 4p + 6)q + 7`.
pub const UL_GENERATORS: [UlGenerator; 18] = [
    UlGenerator::new("1", 0, [0, 0, 0]),
    UlGenerator::new("h0", 1, [0, 0, 1]),
    UlGenerator::new("h1", 1, [0, 1, 0]),
    UlGenerator::new("g0", 2, [0, 1, 2]),
    UlGenerator::new("k0", 2, [0, 2, 1]),
    UlGenerator::new("k0h0", 3, [0, 2, 2]),
    UlGenerator::new("h2", 1, [1, 0, 0]),
    UlGenerator::new("h2h0", 2, [1, 0, 1]),
    UlGenerator::new("g1", 2, [1, 2, 0]),
    UlGenerator::new("l1", 3, [1, 2, 3]),
    UlGenerator::new("l2", 3, [1, 3, 1]),
    UlGenerator::new("l1h1", 4, [1, 3, 3]),
    UlGenerator::new("k1", 2, [2, 1, 0]),
    UlGenerator::new("l3", 3, [2, 1, 2]),
    UlGenerator::new("k1h1", 3, [2, 2, 0]),
    UlGenerator::new("l1h2", 4, [2, 2, 3]),
    UlGenerator::new("m1", 4, [2, 4, 2]),
    UlGenerator::new("m1h0", 5, [2, 4, 3]),
];

pub fn ul_generator(name: &str) -> Option<&'static UlGenerator> {
    UL_GENERATORS.iter().find(|g| g.name == name)
}

/// Largest total degree covered by the generator table: `(2p^2 + 4p + 6)q + 7`.
pub fn validity_bound(p: u64) -> u64 {
    (2 * p * p + 4 * p + 6) * 2 * (p - 1) + 7
}

/// `b_{k,l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BGenerator {
    pub k: u32,
    pub l: u32,
}

impl BGenerator {
    pub const B10: BGenerator = BGenerator { k: 1, l: 0 };

    /// Internal degree `p^{l+1} q_k`.
    pub fn t_at(self, p: u64) -> Option<u64> {
        p.checked_pow(self.l + 1)?
            .checked_mul(qk(p, self.k as usize)?)
    }

    pub fn total_degree_at(self, p: u64) -> Option<u64> {
        Some(self.t_at(p)? - 2)
    }
}

impl fmt::Display for BGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}{}", self.k, self.l)
    }
}

/// Monomial in the `b_{k,l}`; zero exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct BMonomial(BTreeMap<BGenerator, u32>);

impl BMonomial {
    pub fn one() -> Self {
        BMonomial::default()
    }

    pub fn from_powers(powers: &[(BGenerator, u32)]) -> Self {
        let mut m = BTreeMap::new();
        for &(b, e) in powers {
            if e > 0 {
                *m.entry(b).or_insert(0) += e;
            }
        }
        BMonomial(m)
    }

    pub fn exponent(&self, b: BGenerator) -> u32 {
        self.0.get(&b).copied().unwrap_or(0)
    }

    pub fn powers(&self) -> impl Iterator<Item = (BGenerator, u32)> + '_ {
        self.0.iter().map(|(&b, &e)| (b, e))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Cohomological degree, `2` per factor.
    pub fn s(&self) -> u64 {
        2 * self.0.values().map(|&e| e as u64).sum::<u64>()
    }

    pub fn t_at(&self, p: u64) -> u64 {
        self.powers()
            .map(|(b, e)| b.t_at(p).expect("admitted generators fit") * e as u64)
            .sum()
    }

    /// The same monomial without its `b_{1,0}` power.
    pub fn without_b10(&self) -> BMonomial {
        let mut m = self.0.clone();
        m.remove(&BGenerator::B10);
        BMonomial(m)
    }

    fn write_factors(&self, f: &mut impl fmt::Write, include_b10: bool) -> fmt::Result {
        for (b, e) in self.powers() {
            if b == BGenerator::B10 && !include_b10 {
                continue;
            }
            write!(f, "{b}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Name for `base · b`: non-`b10` factors, the table generator, then the
/// `b10` power, e.g. `b20h1`, `h1b10^7`, `b10^8`.
fn product_name(base: &str, b: &BMonomial, include_b10: bool) -> String {
    let mut out = String::new();
    b.write_factors(&mut out, false)
        .expect("writing to a String");
    let b10 = if include_b10 {
        b.exponent(BGenerator::B10)
    } else {
        0
    };
    if base != "1" || (out.is_empty() && b10 == 0) {
        out.push_str(base);
    }
    match b10 {
        0 => {}
        1 => out.push_str("b10"),
        e => out.push_str(&format!("b10^{e}")),
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub name: String,
    pub base: &'static str,
    #[serde(skip)]
    pub b: BMonomial,
    pub s: u64,
    pub t: u64,
    pub w: u64,
    pub u: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    /// The class with its `b10` power removed.
    pub base: String,
    /// Exponent of `b10`.
    pub c: u32,
    pub w: u64,
    pub u: u64,
    #[serde(skip)]
    pub s: u64,
}

impl fmt::Display for SearchHit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = BMonomial::from_powers(&[(BGenerator::B10, self.c)]);
        let name = if self.base == "1" {
            product_name("1", &b, true)
        } else {
            format!("{}{}", self.base, product_name("", &b, true))
        };
        write!(f, "{name}")
    }
}

/// The lattice of classes with total degree at most `bound`, at one prime.
#[derive(Debug, Clone)]
pub struct TodaTable {
    p: u64,
    bound: u64,
    b_generators: Vec<BGenerator>,
    entries: Vec<TableEntry>,
}

impl TodaTable {
    pub fn new(p: u64, bound: u64) -> Result<Self> {
        if !crate::fp::is_prime(p) || p < 3 {
            return Err(Error::InvalidArgument(format!(
                "the generator table needs an odd prime, got {p}"
            )));
        }
        let max = validity_bound(p);
        if bound > max {
            return Err(Error::BoundOutOfRange { p, bound, max });
        }
        let b_generators = admitted_b_generators(p, bound);
        let modulus = beta_modulus(p);
        let mut entries = Vec::new();
        for g in &UL_GENERATORS {
            let w0 = g.total_degree_at(p);
            if w0 > bound {
                continue;
            }
            let mut stack = vec![(0usize, BMonomial::one(), w0)];
            while let Some((next, b, w)) = stack.pop() {
                entries.push(TableEntry {
                    name: product_name(g.name, &b, true),
                    base: g.name,
                    s: g.s + b.s(),
                    t: g.t_at(p) + b.t_at(p),
                    w,
                    u: w % modulus,
                    b: b.clone(),
                });
                // Extend with generators at index >= next so each monomial appears once.
                for (idx, &bg) in b_generators.iter().enumerate().skip(next) {
                    let wb = bg.total_degree_at(p).expect("admitted");
                    if w + wb <= bound {
                        let mut nb = b.clone();
                        *nb.0.entry(bg).or_insert(0) += 1;
                        stack.push((idx, nb, w + wb));
                    }
                }
            }
        }
        let order = |e: &TableEntry| {
            let base_idx = UL_GENERATORS
                .iter()
                .position(|g| g.name == e.base)
                .unwrap_or(usize::MAX);
            (e.w, base_idx, e.b.clone())
        };
        entries.sort_by_key(order);
        Ok(TodaTable {
            p,
            bound,
            b_generators,
            entries,
        })
    }

    /// The table up to its full validity range.
    pub fn full(p: u64) -> Result<Self> {
        Self::new(p, validity_bound(p))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// `pq - 2`.
    pub fn modulus(&self) -> u64 {
        beta_modulus(self.p)
    }

    /// The `b_{k,l}` whose total degree fits under the bound.
    pub fn b_generators(&self) -> &[BGenerator] {
        &self.b_generators
    }

    /// All classes, ordered by total degree.
    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    /// Classes with no `b10` factor; each stands for the family `x b10^c`.
    pub fn b10_free_entries(&self) -> impl Iterator<Item = &TableEntry> {
        self.entries
            .iter()
            .filter(|e| e.b.exponent(BGenerator::B10) == 0)
    }

    fn check_degree(&self, degree: i64) -> Result<u64> {
        if degree < 0 || degree as u64 > self.bound {
            return Err(Error::DegreeOutsideTable {
                degree,
                bound: self.bound,
            });
        }
        Ok(degree as u64)
    }

    fn hit_for(&self, e: &TableEntry) -> SearchHit {
        SearchHit {
            base: product_name(e.base, &e.b.without_b10(), false),
            c: e.b.exponent(BGenerator::B10),
            w: e.w,
            u: e.u,
            s: e.s,
        }
    }

    /// Every class of total degree exactly `degree`.
    pub fn search(&self, degree: i64) -> Result<Vec<SearchHit>> {
        let i = self.check_degree(degree)?;
        Ok(self
            .entries
            .iter()
            .filter(|e| e.w == i)
            .map(|e| self.hit_for(e))
            .collect())
    }

    /// The same search phrased through residues: each `b10`-free class `x`
    /// with `w(x) <= i` and `w(x) = i (mod pq - 2)` contributes
    /// `x b10^((i - w) / (pq - 2))`.
    pub fn search_by_residue(&self, degree: i64) -> Result<Vec<SearchHit>> {
        let i = self.check_degree(degree)?;
        let m = self.modulus();
        let b10_w = BGenerator::B10.total_degree_at(self.p).expect("b10 degree");
        debug_assert_eq!(b10_w, m);
        Ok(self
            .b10_free_entries()
            .filter(|e| e.w <= i && e.u == i % m)
            .map(|e| SearchHit {
                base: e.name.clone(),
                c: ((i - e.w) / m) as u32,
                w: i,
                u: i % m,
                s: e.s + 2 * (i - e.w) / m,
            })
            .collect())
    }

    /// For each `i = s + a > 1` with `s` in `s_set` and `a` in `a_set`, the
    /// classes of total degree `i + offset`.
    pub fn vanishing_scan(
        &self,
        s_set: &[u64],
        a_set: &[u64],
        offset: i64,
    ) -> Result<BTreeMap<i64, Vec<SearchHit>>> {
        let mut out = BTreeMap::new();
        for &s in s_set {
            for &a in a_set {
                let i = s + a;
                if i <= 1 {
                    continue;
                }
                let degree = i as i64 + offset;
                if let std::collections::btree_map::Entry::Vacant(slot) = out.entry(degree) {
                    slot.insert(self.search(degree)?);
                }
            }
        }
        Ok(out)
    }

    /// True when no class sits in total degree `w + 1`, so nothing can hit a
    /// permanent cycle of total degree `w`.
    pub fn permanence_witness(&self, w: u64) -> Result<bool> {
        Ok(self.search(w as i64 + 1)?.is_empty())
    }

    /// Filtration-aware form: a differential hitting a class of cohomological
    /// degree `s` starts in total degree `w + 1` and in degree at most
    /// `s - 2`. True when no such source exists.
    pub fn permanence_witness_for(&self, target: &SearchHit) -> Result<bool> {
        Ok(self
            .search(target.w as i64 + 1)?
            .iter()
            .all(|src| src.s + 2 > target.s))
    }
}

/// `b_{k,l}` with `p^{l+1} q_k - 2 <= bound`.
fn admitted_b_generators(p: u64, bound: u64) -> Vec<BGenerator> {
    let mut out = Vec::new();
    for k in 1u32.. {
        let first = BGenerator { k, l: 0 };
        match first.total_degree_at(p) {
            Some(w) if w <= bound => {}
            _ => break,
        }
        for l in 0u32.. {
            let b = BGenerator { k, l };
            match b.total_degree_at(p) {
                Some(w) if w <= bound => out.push(b),
                _ => break,
            }
        }
    }
    out.sort();
    out
}

/// Cell dimensions of `V(k)`: `Z(0) = {0, 1}` and
/// `Z(k) = Z(k-1) ∪ (Z(k-1) + q_k + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletonCells {
    pub p: u64,
    pub k: usize,
    pub cells: BTreeSet<u64>,
}

impl SkeletonCells {
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if k > 3 || 2 * k as u64 >= p || !crate::fp::is_prime(p) {
            return Err(Error::SkeletonOutOfRange { p, k });
        }
        let mut cells: BTreeSet<u64> = [0, 1].into();
        for j in 1..=k {
            let shift = qk(p, j).ok_or(Error::DegreeOverflow { p, k: j })? + 1;
            let shifted: Vec<u64> = cells.iter().map(|c| c + shift).collect();
            cells.extend(shifted);
        }
        Ok(SkeletonCells { p, k, cells })
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.cells.iter().copied().collect()
    }

    /// Cells of dimension at most `max`.
    pub fn at_most(&self, max: u64) -> Vec<u64> {
        self.cells.range(..=max).copied().collect()
    }

    /// Cells of dimension above `min`.
    pub fn above(&self, min: u64) -> Vec<u64> {
        self.cells.range(min + 1..).copied().collect()
    }
}

/// A row of a stored reference table: the label as printed, the table
/// generator and `b` factors it names, and its total degree and residue.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceRow {
    pub label: &'static str,
    pub base: &'static str,
    pub b: &'static [(u32, u32, u32)],
    pub w: u64,
    pub u: u64,
}

impl ReferenceRow {
    pub fn b_monomial(&self) -> BMonomial {
        let powers: Vec<_> = self
            .b
            .iter()
            .map(|&(k, l, e)| (BGenerator { k, l }, e))
            .collect();
        BMonomial::from_powers(&powers)
    }
}

const fn row(
    label: &'static str,
    base: &'static str,
    b: &'static [(u32, u32, u32)],
    w: u64,
    u: u64,
) -> ReferenceRow {
    ReferenceRow {
        label,
        base,
        b,
        w,
        u,
    }
}

const B11: &[(u32, u32, u32)] = &[(1, 1, 1)];
const B20: &[(u32, u32, u32)] = &[(2, 0, 1)];
const B11_2: &[(u32, u32, u32)] = &[(1, 1, 2)];
const B20_2: &[(u32, u32, u32)] = &[(2, 0, 2)];
const B11_B20: &[(u32, u32, u32)] = &[(1, 1, 1), (2, 0, 1)];
const NONE: &[(u32, u32, u32)] = &[];

/// `H^*U(L) ⊗ P(b11, b20)` at `p = 7` with `t - s <= 1591`, as published:
/// label, generator, b-factors, `w`, and `u = w mod 82`.
pub const P7_REFERENCE: [ReferenceRow; 60] = [
    row("1", "1", NONE, 0, 0),
    row("h0", "h0", NONE, 11, 11),
    row("h1", "h1", NONE, 83, 1),
    row("g0", "g0", NONE, 106, 24),
    row("k0", "k0", NONE, 178, 14),
    row("k0h0", "k0h0", NONE, 189, 25),
    row("b11", "1", B11, 586, 12),
    row("h2", "h2", NONE, 587, 13),
    row("b11h0", "h0", B11, 597, 23),
    row("h2h0", "h2h0", NONE, 598, 24),
    row("b11h1", "h1", B11, 669, 13),
    row("b20", "1", B20, 670, 14),
    row("b20h0", "h0", B20, 681, 25),
    row("b11g0", "g0", B11, 692, 36),
    row("b20h1", "h1", B20, 753, 15),
    row("g1", "g1", NONE, 754, 16),
    row("b11k0", "k0", B11, 764, 26),
    row("b11k0h0", "k0h0", B11, 775, 37),
    row("b20g0", "g0", B20, 776, 38),
    row("l1", "l1", NONE, 789, 51),
    row("b20k0", "k0", B20, 848, 28),
    row("l2", "l2", NONE, 849, 29),
    row("b20k0h0", "k0h0", B20, 859, 39),
    row("l1h1", "l1h1", NONE, 872, 52),
    row("b11^2", "1", B11_2, 1172, 24),
    row("b11h2", "h2", B11, 1173, 25),
    row("b11^2h0", "h0", B11_2, 1183, 35),
    row("b11h2h0", "h2h0", B11, 1184, 36),
    row("b11^2h1", "h1", B11_2, 1255, 25),
    row("b11b20", "1", B11_B20, 1256, 26),
    row("b20h2", "h2", B20, 1257, 27),
    row("k1", "k1", NONE, 1258, 28),
    row("b11b20h0", "h0", B11_B20, 1267, 37),
    row("b20h2h0", "h2h0", B20, 1268, 38),
    row("b11^2g0", "g0", B11_2, 1278, 48),
    row("l3", "l3", NONE, 1281, 51),
    row("b11b20h1", "h1", B11_B20, 1339, 27),
    row("b20^2", "1", B20_2, 1340, 28),
    row("b11g1", "g1", B11, 1340, 28),
    row("k1h1", "k1h1", NONE, 1341, 29),
    row("b11^2k0", "k0", B11_2, 1350, 38),
    row("b20^2h0", "h0", B20_2, 1351, 39),
    row("b11^2k0h0", "k0h0", B11_2, 1361, 49),
    row("b11b20g0", "g0", B11_B20, 1362, 50),
    row("b11l1", "l1", B11, 1375, 63),
    row("l1h2", "l1h2", NONE, 1376, 64),
    row("b20^2h1", "h1", B20_2, 1423, 29),
    row("b20g1", "g1", B20, 1424, 30),
    row("b20b11k0", "k0", B11_B20, 1434, 40),
    row("b11l2", "l2", B11, 1435, 41),
    row("b20b11k0h0", "k0h0", B11_B20, 1445, 51),
    row("b20^2g0", "g0", B20_2, 1446, 52),
    row("b11l1h1", "l1h1", B11, 1458, 64),
    row("b20l1", "l1", B20, 1459, 65),
    row("b20^2k0", "k0", B20_2, 1518, 42),
    row("b20l2", "l2", B20, 1519, 43),
    row("b20^2k0h0", "k0h0", B20_2, 1529, 53),
    row("m1", "m1", NONE, 1532, 56),
    row("b20l1h1", "l1h1", B20, 1542, 66),
    row("m1h0", "m1h0", NONE, 1543, 67),
];

const B10_1: &[(u32, u32, u32)] = &[(1, 0, 1)];
const B10_2: &[(u32, u32, u32)] = &[(1, 0, 2)];
const B10_3: &[(u32, u32, u32)] = &[(1, 0, 3)];

/// Classes of total degree `<= 121` at `p = 5`, as published (`h10 = h0`,
/// `h11 = h1`); `u` is taken mod 38.
pub const P5_REFERENCE: [ReferenceRow; 15] = [
    row("1", "1", NONE, 0, 0),
    row("h10", "h0", NONE, 7, 7),
    row("b10", "1", B10_1, 38, 0),
    row("h11", "h1", NONE, 39, 1),
    row("h10b10", "h0", B10_1, 45, 7),
    row("g0", "g0", NONE, 54, 16),
    row("b10^2", "1", B10_2, 76, 0),
    row("h11b10", "h1", B10_1, 77, 1),
    row("h10b10^2", "h0", B10_2, 83, 7),
    row("k0", "k0", NONE, 86, 10),
    row("g0b10", "g0", B10_1, 92, 16),
    row("k0h0", "k0h0", NONE, 93, 17),
    row("b10^3", "1", B10_3, 114, 0),
    row("h11b10^2", "h1", B10_2, 115, 1),
    row("h10b10^3", "h0", B10_3, 121, 7),
];

/// Key used to compare derived entries against a reference table.
pub type EntryKey = (&'static str, BMonomial, u64, u64);

pub fn entry_key(e: &TableEntry) -> EntryKey {
    (e.base, e.b.clone(), e.w, e.u)
}

pub fn reference_key(r: &ReferenceRow) -> EntryKey {
    let base = ul_generator(r.base).map_or(r.base, |g| g.name);
    (base, r.b_monomial(), r.w, r.u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(hits: &[SearchHit]) -> Vec<String> {
        hits.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn generator_degrees_at_seven() {
        let w: Vec<u64> = UL_GENERATORS.iter().map(|g| g.total_degree_at(7)).collect();
        assert_eq!(
            w,
            [
                0, 11, 83, 106, 178, 189, 587, 598, 754, 789, 849, 872, 1258, 1281, 1341, 1376,
                1532, 1543
            ]
        );
    }

    #[test]
    fn validity_range() {
        assert_eq!(validity_bound(7), 1591);
        assert_eq!(validity_bound(5), 615);
        assert!(matches!(
            TodaTable::new(7, 1592),
            Err(Error::BoundOutOfRange {
                bound: 1592,
                max: 1591,
                ..
            })
        ));
        assert!(TodaTable::new(4, 10).is_err());
    }

    #[test]
    fn admitted_generators() {
        let t7 = TodaTable::new(7, 1591).unwrap();
        assert_eq!(
            t7.b_generators(),
            [
                BGenerator { k: 1, l: 0 },
                BGenerator { k: 1, l: 1 },
                BGenerator { k: 2, l: 0 }
            ]
        );
        let t5 = TodaTable::new(5, 121).unwrap();
        assert_eq!(t5.b_generators(), [BGenerator::B10]);
    }

    #[test]
    fn sample_entries() {
        let t = TodaTable::new(7, 1591).unwrap();
        let find = |name: &str| t.entries().iter().find(|e| e.name == name).unwrap().clone();
        assert_eq!((find("b11").w, find("b11").u), (586, 12));
        assert_eq!((find("b20").w, find("b20").u), (670, 14));
        assert_eq!((find("b20k0h0").w, find("b20k0h0").u), (859, 39));
        assert_eq!((find("m1").w, find("m1").u), (1532, 56));
        assert_eq!(find("b10^8").w, 656);
    }

    #[test]
    fn additivity() {
        let t = TodaTable::new(7, 1591).unwrap();
        for e in t.entries() {
            let g = ul_generator(e.base).unwrap();
            let wb: u64 =
                e.b.powers()
                    .map(|(b, k)| b.total_degree_at(7).unwrap() * k as u64)
                    .sum();
            assert_eq!(e.w, g.total_degree_at(7) + wb, "{}", e.name);
            assert_eq!(e.w, e.t - e.s);
            assert_eq!(e.u, e.w % 82);
        }
    }

    #[test]
    fn searches_at_seven() {
        let t = TodaTable::new(7, 1591).unwrap();
        let at = |i| names(&t.search(i).unwrap());
        assert_eq!(at(656), ["b10^8"]);
        assert_eq!(at(657), ["h1b10^7"]);
        assert_eq!(at(753), ["b20h1"]);
        assert_eq!(at(754), ["g1"]);
        assert_eq!(at(1395), ["h1b10^16"]);
        assert_eq!(at(1492), ["g1b10^9"]);
        assert!(at(658).is_empty());
        assert!(at(824).is_empty());
        assert!(matches!(
            t.search(1592),
            Err(Error::DegreeOutsideTable { .. })
        ));
        assert!(t.search(-1).is_err());
    }

    #[test]
    fn residue_search_matches_exact_search() {
        for (p, bound) in [(5, 615), (7, 1591)] {
            let t = TodaTable::new(p, bound).unwrap();
            for i in 0..=bound as i64 {
                let mut a = t.search(i).unwrap();
                let mut b = t.search_by_residue(i).unwrap();
                a.sort_by_key(|x| x.to_string());
                b.sort_by_key(|x| x.to_string());
                assert_eq!(a, b, "p = {p}, degree {i}");
            }
        }
    }

    #[test]
    fn skeletons() {
        assert_eq!(
            SkeletonCells::new(5, 2).unwrap().to_vec(),
            [0, 1, 9, 10, 49, 50, 58, 59]
        );
        assert_eq!(
            SkeletonCells::new(7, 3).unwrap().to_vec(),
            [0, 1, 13, 14, 97, 98, 110, 111, 685, 686, 698, 699, 782, 783, 795, 796]
        );
        for p in [2, 3, 5, 7, 11] {
            assert_eq!(SkeletonCells::new(p, 0).unwrap().to_vec(), [0, 1]);
        }
        assert!(SkeletonCells::new(5, 3).is_err());
        assert!(SkeletonCells::new(11, 4).is_err());
    }

    #[test]
    fn permanence() {
        let t = TodaTable::new(7, 1591).unwrap();
        // h1 b10^7 sits in degree 657, one filtration below b10^8.
        assert!(!t.permanence_witness(656).unwrap());
        let b10_8 = t.search(656).unwrap().remove(0);
        assert!(t.permanence_witness_for(&b10_8).unwrap());
        assert!(t.permanence_witness(1591).is_err());
    }

    #[test]
    fn scan_rejects_out_of_range_degrees() {
        let t = TodaTable::new(5, 121).unwrap();
        assert!(t.vanishing_scan(&[100], &[59], -1).is_err());
        assert!(t.vanishing_scan(&[0], &[0, 1], -5).unwrap().is_empty());
    }
}
