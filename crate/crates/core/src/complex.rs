//! Ravenel's exterior complex `C(n) = E(h_{i,j} : 1 <= i <= n, j in Z/n)` over F_p.
//!
//! Generator `h_{i,j}` has bidegree `(1, p^j q_i)` with the internal degree
//! taken mod `q_n`, and
//!
//! ```text
//! d(h_{i,j}) = sum_{l=1}^{i-1} h_{l,j} h_{i-l,l+j}
//! ```
//!
//! extended to products as a graded derivation. Monomials are bitmasks over
//! the `n^2` generators in canonical order: lexicographic on `(i, j)`, so
//! `h_{i,j}` is bit `(i - 1) n + j`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::degree::qk;
use crate::error::{Error, Result};
use crate::fp::PrimeModulus;

/// Largest height supported; `n^2` generators must fit in a `u64` mask.
pub const MAX_HEIGHT: usize = 6;

/// Heights whose full monomial table (`2^(n^2)` entries) is precomputed.
const FULL_TABLE_MAX_HEIGHT: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexParams {
    p: PrimeModulus,
    n: usize,
    /// `q[k] = 2(p^k - 1)`, with `q[0] = 0`.
    q: Vec<u64>,
    /// Internal degree of each generator, indexed canonically.
    gen_degree: Vec<u64>,
}

impl ComplexParams {
    pub fn new(p: u64, n: usize) -> Result<Self> {
        let p = PrimeModulus::new(p)?;
        if n == 0 || n > MAX_HEIGHT {
            return Err(Error::HeightOutOfRange(n));
        }
        let mut q = vec![0u64];
        for k in 1..=n {
            let v = qk(p.as_u64(), k).ok_or(Error::DegreeOverflow { p: p.as_u64(), k })?;
            // Leave headroom so sums of n^2 residues never overflow.
            if v > u64::MAX / 64 {
                return Err(Error::DegreeOverflow { p: p.as_u64(), k });
            }
            q.push(v);
        }
        let qn = q[n] as u128;
        let mut gen_degree = Vec::with_capacity(n * n);
        for &q_i in &q[1..=n] {
            let mut pj: u128 = 1;
            for _ in 0..n {
                gen_degree.push(((pj * q_i as u128) % qn) as u64);
                pj = pj * p.as_u64() as u128 % qn;
            }
        }
        Ok(ComplexParams {
            p,
            n,
            q,
            gen_degree,
        })
    }

    #[inline]
    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `q_k = 2(p^k - 1)` for `1 <= k <= n`.
    pub fn qk(&self, k: usize) -> u64 {
        assert!((1..=self.n).contains(&k), "q_{k} outside 1..={}", self.n);
        self.q[k]
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.q[1]
    }

    /// Modulus of the internal degree.
    #[inline]
    pub fn q_n(&self) -> u64 {
        self.q[self.n]
    }

    #[inline]
    pub fn generator_count(&self) -> usize {
        self.n * self.n
    }

    /// Canonical residue of a signed internal degree.
    pub fn normalize_t(&self, t: i64) -> u64 {
        (t as i128).rem_euclid(self.q_n() as i128) as u64
    }

    pub fn generator(&self, i: usize, j: usize) -> Result<GeneratorId> {
        if (1..=self.n).contains(&i) && j < self.n {
            Ok(GeneratorId { i, j })
        } else {
            Err(Error::InvalidGenerator { i, j, n: self.n })
        }
    }

    /// `h_{i,j}` with `j` reduced mod n.
    fn gen_wrapped(&self, i: usize, j: usize) -> GeneratorId {
        GeneratorId { i, j: j % self.n }
    }

    #[inline]
    pub fn index_of(&self, g: GeneratorId) -> usize {
        (g.i - 1) * self.n + g.j
    }

    #[inline]
    pub fn generator_at(&self, index: usize) -> GeneratorId {
        GeneratorId {
            i: index / self.n + 1,
            j: index % self.n,
        }
    }

    pub fn generator_degree(&self, g: GeneratorId) -> u64 {
        self.gen_degree[self.index_of(g)]
    }

    pub fn monomial(&self, gens: &[GeneratorId]) -> Result<Monomial> {
        let mut mask = 0u64;
        for &g in gens {
            self.generator(g.i, g.j)?;
            let bit = 1u64 << self.index_of(g);
            if mask & bit != 0 {
                return Err(Error::RepeatedGenerator { i: g.i, j: g.j });
            }
            mask |= bit;
        }
        Ok(Monomial(mask))
    }

    pub fn generators_of(&self, m: Monomial) -> Vec<GeneratorId> {
        m.indices().map(|k| self.generator_at(k)).collect()
    }

    pub fn bidegree(&self, m: Monomial) -> BiDegree {
        let qn = self.q_n();
        let t = m
            .indices()
            .fold(0u64, |acc, k| (acc + self.gen_degree[k]) % qn);
        BiDegree { s: m.degree(), t }
    }

    /// Mask with every generator set.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        low_mask(self.generator_count())
    }

    pub fn top_class(&self) -> Monomial {
        Monomial(self.full_mask())
    }

    /// The complementary monomial `m*` and the sign with `m m* = sign g`.
    pub fn star(&self, m: Monomial) -> (Monomial, Sign) {
        let dual = Monomial(self.full_mask() & !m.0);
        let sign = m
            .product_sign(dual)
            .expect("complementary monomials are disjoint");
        (dual, sign)
    }

    pub fn display_monomial(&self, m: Monomial) -> MonomialDisplay<'_> {
        MonomialDisplay { params: self, m }
    }

    pub fn display_element<'a>(&'a self, x: &'a Element) -> ElementDisplay<'a> {
        ElementDisplay { params: self, x }
    }

    /// Monomial as an array of `[i, j]` pairs in canonical order.
    pub fn monomial_pairs(&self, m: Monomial) -> Vec<[usize; 2]> {
        self.generators_of(m)
            .into_iter()
            .map(|g| [g.i, g.j])
            .collect()
    }

    /// Parses `h<i>,<j>` tokens separated by whitespace (`1` is the unit).
    ///
    /// Tokens may appear in any order; the returned sign is that of the
    /// permutation sorting them, so the written product equals
    /// `sign * monomial`.
    pub fn parse_monomial(&self, text: &str) -> Result<(Monomial, Sign)> {
        let text = text.trim();
        if text == "1" {
            return Ok((Monomial::ONE, Sign::Plus));
        }
        let mut acc = Monomial::ONE;
        let mut sign = Sign::Plus;
        for tok in text.split_whitespace() {
            let g = self.parse_generator(tok)?;
            let m = Monomial(1u64 << self.index_of(g));
            let s = acc
                .product_sign(m)
                .ok_or(Error::RepeatedGenerator { i: g.i, j: g.j })?;
            sign = sign * s;
            acc = Monomial(acc.0 | m.0);
        }
        if acc == Monomial::ONE {
            return Err(Error::Parse(
                "empty monomial (write `1` for the unit)".into(),
            ));
        }
        Ok((acc, sign))
    }

    fn parse_generator(&self, tok: &str) -> Result<GeneratorId> {
        let bad = || Error::Parse(format!("expected a generator `h<i>,<j>`, got `{tok}`"));
        let body = tok.strip_prefix('h').ok_or_else(bad)?;
        let (i, j) = body.split_once(',').ok_or_else(bad)?;
        let i: usize = i.parse().map_err(|_| bad())?;
        let j: usize = j.parse().map_err(|_| bad())?;
        self.generator(i, j)
    }

    /// Parses an element: terms `[c·]<monomial>` joined by `+` or `-`.
    ///
    /// `*` is accepted in place of `·`, and `0` denotes the zero element.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let p = self.p;
        let text = text.trim();
        if text == "0" {
            return Ok(Element::zero());
        }
        let mut terms: Vec<(i64, &str)> = Vec::new();
        let empty = || Error::Parse(format!("empty term in `{text}`"));
        let mut sign = 1i64;
        // Operator seen since the last term; `+ -` and a leading `-` are allowed.
        let mut pending: Option<char> = None;
        let mut start = 0;
        for (k, ch) in text.char_indices() {
            if ch == '+' || ch == '-' {
                let term = text[start..k].trim();
                if !term.is_empty() {
                    terms.push((sign, term));
                    sign = if ch == '-' { -1 } else { 1 };
                } else {
                    match (pending, ch) {
                        (None, '-') if terms.is_empty() => sign = -1,
                        (Some('+'), '-') => sign = -1,
                        _ => return Err(empty()),
                    }
                }
                pending = Some(ch);
                start = k + 1;
            }
        }
        let last = text[start..].trim();
        if last.is_empty() {
            return Err(empty());
        }
        terms.push((sign, last));
        let mut x = Element::zero();
        for (sign, term) in terms {
            let (c, mono) = match term.split_once(['·', '*']) {
                Some((c, mono)) => {
                    let c: i64 = c
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient in `{term}`")))?;
                    (c, mono)
                }
                None => (1, term),
            };
            let (m, msign) = self.parse_monomial(mono)?;
            x.add_term(m, p.reduce_signed(sign * c * msign.as_i64()), p);
        }
        Ok(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GeneratorId {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{},{}", self.i, self.j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BiDegree {
    pub s: usize,
    pub t: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// The sign as a residue mod p.
    pub fn residue(self, p: PrimeModulus) -> u32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => p.get() - 1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity((self == Sign::Minus) ^ (rhs == Sign::Minus))
    }
}

#[inline]
fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// Bits strictly above position `k`.
#[inline]
fn above(k: usize) -> u64 {
    if k >= 63 {
        0
    } else {
        !low_mask(k + 1)
    }
}

/// Square-free monomial, one bit per generator in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_mask(mask: u64) -> Self {
        Monomial(mask)
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
    }

    /// Cohomological degree.
    #[inline]
    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains_index(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    /// Generator indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let k = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k)
            }
        })
    }

    /// Sign of sorting the concatenation `self · other`, or `None` when the
    /// two share a generator.
    pub fn product_sign(self, other: Monomial) -> Option<Sign> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let inversions: u32 = other
            .indices()
            .map(|k| (self.0 & above(k)).count_ones())
            .sum();
        Some(Sign::from_parity(inversions % 2 == 1))
    }
}

/// Graded lexicographic: by degree, then by the increasing index sequences.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct MonomialDisplay<'a> {
    params: &'a ComplexParams,
    m: Monomial,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == Monomial::ONE {
            return f.write_str("1");
        }
        for (k, idx) in self.m.indices().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", self.params.generator_at(idx))?;
        }
        Ok(())
    }
}

/// F_p-linear combination of monomials; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, u32>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, 1);
        Element { terms }
    }

    pub fn signed_monomial(m: Monomial, sign: Sign, p: PrimeModulus) -> Self {
        let mut x = Element::zero();
        x.add_term(m, sign.residue(p), p);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> u32 {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u32)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn add_term(&mut self, m: Monomial, c: u32, p: PrimeModulus) {
        let c = c % p.get();
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry = p.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Element, p: PrimeModulus) -> Element {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c, p);
        }
        out
    }

    pub fn scale(&self, c: u32, p: PrimeModulus) -> Element {
        let mut out = Element::zero();
        for (m, a) in self.terms() {
            out.add_term(m, p.mul(a, c), p);
        }
        out
    }

    /// The common cohomological degree of all terms; `None` when mixed.
    /// The zero element is homogeneous of every degree and reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => Some(0),
            Some(s) => it.all(|d| d == s).then_some(s),
        }
    }
}

pub struct ElementDisplay<'a> {
    params: &'a ComplexParams,
    x: &'a Element,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x.is_zero() {
            return f.write_str("0");
        }
        let p = self.params.p();
        for (k, (m, c)) in self.x.terms().enumerate() {
            let c = p.symmetric(c);
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}·", c.abs())?;
            }
            write!(f, "{}", self.params.display_monomial(m))?;
        }
        Ok(())
    }
}

/// Monomials bucketed by bidegree.
#[derive(Debug, Default)]
struct BasisTable {
    buckets: HashMap<BiDegree, Vec<Monomial>>,
}

/// Two half-tables for heights too large to enumerate in full: the first
/// `n^2 / 2` generators form the low half.
#[derive(Debug)]
struct SplitTable {
    /// `low[size]`: residue -> low-half masks.
    low: Vec<HashMap<u64, Vec<u64>>>,
    high: Vec<HashMap<u64, Vec<u64>>>,
}

/// `C(n)` with lazily built basis tables. Cheap to share across threads.
#[derive(Debug)]
pub struct RavenelComplex {
    params: ComplexParams,
    /// `d(h_k)` as ordered pairs of generator indices, per generator.
    diff_pairs: Vec<Vec<(usize, usize)>>,
    full: OnceLock<BasisTable>,
    split: OnceLock<SplitTable>,
}

impl RavenelComplex {
    pub fn new(p: u64, n: usize) -> Result<Self> {
        Ok(Self::from_params(ComplexParams::new(p, n)?))
    }

    pub fn from_params(params: ComplexParams) -> Self {
        let n = params.n();
        let diff_pairs = (0..params.generator_count())
            .map(|k| {
                let GeneratorId { i, j } = params.generator_at(k);
                (1..i)
                    .map(|l| {
                        let a = params.gen_wrapped(l, j);
                        let b = params.gen_wrapped(i - l, l + j);
                        debug_assert!(b.j < n);
                        (params.index_of(a), params.index_of(b))
                    })
                    .collect()
            })
            .collect();
        RavenelComplex {
            params,
            diff_pairs,
            full: OnceLock::new(),
            split: OnceLock::new(),
        }
    }

    pub fn params(&self) -> &ComplexParams {
        &self.params
    }

    pub fn bidegree(&self, m: Monomial) -> BiDegree {
        self.params.bidegree(m)
    }

    pub fn top_class(&self) -> Monomial {
        self.params.top_class()
    }

    pub fn star(&self, m: Monomial) -> (Monomial, Sign) {
        self.params.star(m)
    }

    /// Exterior product with Koszul signs.
    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let p = self.params.p();
        let mut out = Element::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                if let Some(sign) = a.product_sign(b) {
                    let c = p.mul(p.mul(ca, cb), sign.residue(p));
                    out.add_term(Monomial(a.0 | b.0), c, p);
                }
            }
        }
        out
    }

    /// `d(h_{i,j})`.
    pub fn diff_generator(&self, g: GeneratorId) -> Element {
        let p = self.params.p();
        let mut out = Element::zero();
        for &(a, b) in &self.diff_pairs[self.params.index_of(g)] {
            let (ma, mb) = (Monomial(1 << a), Monomial(1 << b));
            if let Some(sign) = ma.product_sign(mb) {
                out.add_term(Monomial(ma.0 | mb.0), sign.residue(p), p);
            }
        }
        out
    }

    /// Signed terms of `d(m)`, before collecting like monomials.
    ///
    /// For `m = g_1 ... g_k` this is `sum_r (-1)^(r-1) g_1 ... d(g_r) ... g_k`
    /// with each product re-sorted.
    pub fn diff_monomial_terms(&self, m: Monomial) -> Vec<(Monomial, Sign)> {
        let mut out = Vec::new();
        for (pos, k) in m.indices().enumerate() {
            let bit = 1u64 << k;
            let rest = m.0 & !bit;
            let prefix = rest & (bit - 1);
            let suffix = rest & above(k);
            for &(a, b) in &self.diff_pairs[k] {
                let (ba, bb) = (1u64 << a, 1u64 << b);
                if rest & (ba | bb) != 0 || a == b {
                    continue;
                }
                let crossings = |x: usize| {
                    (prefix & above(x)).count_ones() + (suffix & ((1u64 << x) - 1)).count_ones()
                };
                let inversions = pos as u32 + (a > b) as u32 + crossings(a) + crossings(b);
                out.push((
                    Monomial(rest | ba | bb),
                    Sign::from_parity(inversions % 2 == 1),
                ));
            }
        }
        out
    }

    pub fn diff_monomial(&self, m: Monomial) -> Element {
        let p = self.params.p();
        let mut out = Element::zero();
        for (mono, sign) in self.diff_monomial_terms(m) {
            out.add_term(mono, sign.residue(p), p);
        }
        out
    }

    /// The differential on a homogeneous element.
    pub fn diff(&self, x: &Element) -> Result<Element> {
        x.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        let p = self.params.p();
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            for (mono, sign) in self.diff_monomial_terms(m) {
                out.add_term(mono, p.mul(c, sign.residue(p)), p);
            }
        }
        Ok(out)
    }

    /// All monomials of bidegree `(s, t)` in canonical order; `t` is taken mod `q_n`.
    pub fn basis_in_bidegree(&self, s: usize, t: i64) -> Vec<Monomial> {
        let t = self.params.normalize_t(t);
        if s > self.params.generator_count() {
            return Vec::new();
        }
        if self.params.n() <= FULL_TABLE_MAX_HEIGHT {
            self.full_table()
                .buckets
                .get(&BiDegree { s, t })
                .cloned()
                .unwrap_or_default()
        } else {
            self.split_basis(s, t)
        }
    }

    /// `dim C^{s,t}`.
    pub fn dimension(&self, s: usize, t: i64) -> usize {
        let t = self.params.normalize_t(t);
        if s > self.params.generator_count() {
            return 0;
        }
        if self.params.n() <= FULL_TABLE_MAX_HEIGHT {
            self.full_table()
                .buckets
                .get(&BiDegree { s, t })
                .map_or(0, Vec::len)
        } else {
            self.split_basis(s, t).len()
        }
    }

    /// Every bidegree with a nonzero slice, sorted. Only available for
    /// heights with a full table.
    pub fn nonempty_bidegrees(&self) -> Option<Vec<BiDegree>> {
        if self.params.n() > FULL_TABLE_MAX_HEIGHT {
            return None;
        }
        let mut keys: Vec<_> = self.full_table().buckets.keys().copied().collect();
        keys.sort();
        Some(keys)
    }

    /// All `2^(n^2)` monomials; only for heights with a full table.
    pub fn all_monomials(&self) -> Option<impl Iterator<Item = Monomial>> {
        (self.params.n() <= FULL_TABLE_MAX_HEIGHT)
            .then(|| (0..=self.params.full_mask()).map(Monomial))
    }

    fn full_table(&self) -> &BasisTable {
        self.full.get_or_init(|| {
            let buckets = bucket_range(&self.params, 0, self.params.generator_count());
            let mut buckets: HashMap<BiDegree, Vec<Monomial>> = buckets
                .into_iter()
                .map(|(bd, masks)| (bd, masks.into_iter().map(Monomial).collect()))
                .collect();
            for v in buckets.values_mut() {
                v.sort();
            }
            BasisTable { buckets }
        })
    }

    fn split_table(&self) -> &SplitTable {
        self.split.get_or_init(|| {
            let total = self.params.generator_count();
            let split = total / 2;
            let low = bucket_range(&self.params, 0, split);
            let high = bucket_range(&self.params, split, total);
            let regroup = |b: HashMap<BiDegree, Vec<u64>>, width: usize| {
                let mut by_size = vec![HashMap::new(); width + 1];
                for (bd, masks) in b {
                    by_size[bd.s].insert(bd.t, masks);
                }
                by_size
            };
            SplitTable {
                low: regroup(low, split),
                high: regroup(high, total - split),
            }
        })
    }

    fn split_basis(&self, s: usize, t: u64) -> Vec<Monomial> {
        let table = self.split_table();
        let qn = self.params.q_n();
        let mut out = Vec::new();
        for (s_low, low) in table.low.iter().enumerate() {
            let Some(high) = s
                .checked_sub(s_low)
                .and_then(|s_high| table.high.get(s_high))
            else {
                continue;
            };
            for (&t_low, low_masks) in low {
                let t_high = (t + qn - t_low) % qn;
                if let Some(high_masks) = high.get(&t_high) {
                    for &lo in low_masks {
                        for &hi in high_masks {
                            out.push(Monomial(lo | hi));
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Basis via the half-table route even when a full table exists.
    #[doc(hidden)]
    pub fn basis_via_split_tables(&self, s: usize, t: i64) -> Vec<Monomial> {
        self.split_basis(s, self.params.normalize_t(t))
    }
}

/// Buckets every subset of generators `lo..hi` (as masks at their true bit
/// positions) by bidegree.
fn bucket_range(params: &ComplexParams, lo: usize, hi: usize) -> HashMap<BiDegree, Vec<u64>> {
    let width = hi - lo;
    let count = 1usize << width;
    let qn = params.q_n();
    let mut degree = vec![0u64; count];
    let mut buckets: HashMap<BiDegree, Vec<u64>> = HashMap::new();
    for sub in 0..count {
        if sub > 0 {
            let low_bit = sub.trailing_zeros() as usize;
            degree[sub] = (degree[sub & (sub - 1)] + params.gen_degree[lo + low_bit]) % qn;
        }
        let bd = BiDegree {
            s: sub.count_ones() as usize,
            t: degree[sub],
        };
        buckets.entry(bd).or_default().push((sub as u64) << lo);
    }
    buckets
}
