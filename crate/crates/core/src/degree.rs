//! Degree arithmetic: `q_k = |v_k|`, the invariance criterion for ideals
//! `(p^{e_0}, v_1^{s_1 p^{e_1}}, ..., v_{n-1}^{s_{n-1} p^{e_{n-1}}})`, the
//! minimal `v_{n-1}`-power landing in degree `q`, base-p digit vectors of
//! internal degrees, and residues of total degrees mod `pq - 2 = |beta_1|`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::is_prime;

/// `q_k = 2(p^k - 1)`, or `None` on overflow.
pub fn qk(p: u64, k: usize) -> Option<u64> {
    let mut pk: u64 = 1;
    for _ in 0..k {
        pk = pk.checked_mul(p)?;
    }
    (pk - 1).checked_mul(2)
}

fn checked_pow(p: u64, e: u32) -> Option<u64> {
    p.checked_pow(e)
}

/// `(p^{e_0}, v_1^{s_1 p^{e_1}}, ..., v_{n-1}^{s_{n-1} p^{e_{n-1}}})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealSpec {
    pub p: u64,
    pub e0: u32,
    /// `(s_i, e_i)` for `1 <= i <= n - 1`.
    pub powers: Vec<(u64, u32)>,
    /// Exponent `e_n` for the strict reading of the last condition. When
    /// absent, the `i = n - 1` condition is vacuous.
    pub top_exponent: Option<u32>,
}

impl IdealSpec {
    pub fn new(p: u64, e0: u32, powers: Vec<(u64, u32)>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e0 == 0 {
            return Err(Error::InvalidIdeal("e_0 must be at least 1".into()));
        }
        for (i, &(s, _)) in powers.iter().enumerate() {
            if s == 0 || s % p == 0 {
                return Err(Error::InvalidIdeal(format!(
                    "s_{} = {s} must be positive and prime to p = {p}",
                    i + 1
                )));
            }
        }
        Ok(IdealSpec {
            p,
            e0,
            powers,
            top_exponent: None,
        })
    }

    /// `(p^{e0}, v_1^{k_1}, ..., v_{n-1}^{k_{n-1}})`, splitting each `k_i`
    /// as `s_i p^{e_i}` with `p` not dividing `s_i`.
    pub fn from_exponents(p: u64, e0: u32, exponents: &[u64]) -> Result<Self> {
        let mut powers = Vec::with_capacity(exponents.len());
        for (i, &k) in exponents.iter().enumerate() {
            if k == 0 {
                return Err(Error::InvalidIdeal(format!(
                    "v_{} exponent must be positive",
                    i + 1
                )));
            }
            let (mut s, mut e) = (k, 0u32);
            while s % p == 0 {
                s /= p;
                e += 1;
            }
            powers.push((s, e));
        }
        Self::new(p, e0, powers)
    }

    /// `I_n = (p, v_1, ..., v_{n-1})`.
    pub fn standard(p: u64, n: usize) -> Result<Self> {
        Self::new(p, 1, vec![(1, 0); n.saturating_sub(1)])
    }

    pub fn with_top_exponent(mut self, e_n: u32) -> Self {
        self.top_exponent = Some(e_n);
        self
    }

    /// Number of generators `n`.
    pub fn generator_count(&self) -> usize {
        self.powers.len() + 1
    }

    fn e(&self, i: usize) -> Option<u32> {
        if i == 0 {
            Some(self.e0)
        } else if i <= self.powers.len() {
            Some(self.powers[i - 1].1)
        } else if i == self.powers.len() + 1 {
            self.top_exponent
        } else {
            None
        }
    }

    /// Whether the ideal is invariant: `e_0 - 1 <= e_1` and
    /// `s_i <= p^(e_{i+1} - e_i - e_0 + 1)` for each `i` whose `e_{i+1}` is
    /// defined. A negative exponent makes the condition fail.
    pub fn is_invariant(&self) -> bool {
        // (p^{e_0}) alone is always invariant.
        if let Some(e1) = self.e(1) {
            if self.e0 > e1 + 1 {
                return false;
            }
        }
        self.powers.iter().enumerate().all(|(idx, &(s, e_i))| {
            let i = idx + 1;
            let Some(e_next) = self.e(i + 1) else {
                return true;
            };
            let exp = e_next as i64 - e_i as i64 - self.e0 as i64 + 1;
            if exp < 0 {
                return false;
            }
            match checked_pow(self.p, exp as u32) {
                Some(bound) => s <= bound,
                None => true,
            }
        })
    }

    /// Accepts `"<e0>;<s1>*p^<e1>,<s2>*p^<e2>,..."`. A bare `<s>` means
    /// `e = 0` and `p^<e>` means `s = 1`.
    pub fn parse(p: u64, text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("ideal `{text}`: {why}"));
        let (e0, rest) = match text.split_once(';') {
            Some((e0, rest)) => (e0, rest),
            None => (text, ""),
        };
        let e0: u32 = e0
            .trim()
            .parse()
            .map_err(|_| bad("e0 must be an integer"))?;
        let mut powers = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (s, e) = match item.split_once('*') {
                Some((s, pe)) => (s.trim(), Some(pe.trim())),
                None if item.starts_with("p^") => ("1", Some(item)),
                None => (item, None),
            };
            let s: u64 = s.parse().map_err(|_| bad("s_i must be an integer"))?;
            let e: u32 = match e {
                None => 0,
                Some(pe) => pe
                    .strip_prefix("p^")
                    .ok_or_else(|| bad("expected `p^<e>`"))?
                    .parse()
                    .map_err(|_| bad("e_i must be an integer"))?,
            };
            powers.push((s, e));
        }
        Self::new(p, e0, powers)
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p^{}", self.e0)?;
        for (i, &(s, e)) in self.powers.iter().enumerate() {
            write!(f, ", v_{}^({}*p^{})", i + 1, s, e)?;
        }
        f.write_str(")")
    }
}

/// The least `a > 0` with `a q_{n-1} = q (mod q_n)`, in closed form
/// `1 + p + ... + p^{n-1} - p`.
pub fn minimal_vq_exponent(p: u64, n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "minimal v-exponent needs n >= 2".into(),
        ));
    }
    let mut sum = 0u64;
    let mut pi = 1u64;
    for _ in 0..n {
        sum = sum
            .checked_add(pi)
            .ok_or(Error::DegreeOverflow { p, k: n })?;
        pi = pi.checked_mul(p).ok_or(Error::DegreeOverflow { p, k: n })?;
    }
    Ok(sum - p)
}

/// The same exponent by scanning `a = 1, 2, ..., q_n`.
pub fn minimal_vq_exponent_by_scan(p: u64, n: usize) -> Result<Option<u64>> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "minimal v-exponent needs n >= 2".into(),
        ));
    }
    let overflow = Error::DegreeOverflow { p, k: n };
    let q = qk(p, 1).ok_or(overflow.clone())?;
    let q_prev = qk(p, n - 1).ok_or(overflow.clone())?;
    let q_n = qk(p, n).ok_or(overflow)?;
    let (q, q_prev, q_n) = (q as u128, q_prev as u128, q_n as u128);
    Ok((1..=q_n as u64).find(|&a| (a as u128 * q_prev) % q_n == q % q_n))
}

/// Upper end of the range `1 <= k <= p^2 + ... + p^{n-1}` of truncations
/// `J_k = I_{n-1} + (v_{n-1}^k)` with vanishing `H^{n^2, q}`.
pub fn vanishing_truncation_range(p: u64, n: usize) -> u64 {
    (2..n).map(|i| p.pow(i as u32)).sum()
}

/// Base-p digits `(a_1 ... a_n)` of an internal degree, with
/// `|x| = q * sum_i p^i a_{n-i}`. The unnormalized form allows any `a_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DigitVector {
    /// `a_1, ..., a_n`, most significant first.
    pub digits: Vec<u64>,
}

impl DigitVector {
    pub fn new(digits: Vec<u64>) -> Self {
        DigitVector { digits }
    }

    /// `[x] = a_1 + ... + a_n`.
    pub fn weight(&self) -> u64 {
        self.digits.iter().sum()
    }

    /// `(x)_i = a_{n-i}`, the coefficient of `p^i`.
    pub fn coefficient(&self, i: usize) -> u64 {
        let n = self.digits.len();
        self.digits[n - 1 - i]
    }

    /// `q * sum_i p^i a_{n-i}` as an integer (not reduced).
    pub fn value(&self, p: u64) -> u128 {
        let q = 2 * (p as u128 - 1);
        q * self
            .digits
            .iter()
            .fold(0u128, |acc, &a| acc * p as u128 + a as u128)
    }

    /// Digit-wise sum in the unnormalized form.
    pub fn add(&self, other: &DigitVector) -> DigitVector {
        assert_eq!(
            self.digits.len(),
            other.digits.len(),
            "digit length mismatch"
        );
        DigitVector {
            digits: self
                .digits
                .iter()
                .zip(&other.digits)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for DigitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fits = self.digits.iter().all(|&a| a < 10);
        f.write_str("(")?;
        for (k, a) in self.digits.iter().enumerate() {
            if k > 0 && !fits {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Normalized digits of an internal degree `t` (taken mod `q_n`), or `None`
/// when `q` does not divide it.
///
/// Degrees divisible by `q` form `Z/((p^n - 1)/(p - 1))` after dividing by
/// `q`; the normalized digits are the base-p expansion of that residue, so
/// they never exceed `(1 ... 1)` lexicographically.
pub fn digits_of(p: u64, n: usize, t: i64) -> Option<DigitVector> {
    let q = qk(p, 1)? as i128;
    let q_n = qk(p, n)? as i128;
    let t = (t as i128).rem_euclid(q_n);
    if t % q != 0 {
        return None;
    }
    let modulus = q_n / q;
    let mut v = (t / q) % modulus;
    let mut digits = vec![0u64; n];
    for slot in digits.iter_mut().rev() {
        *slot = (v % p as i128) as u64;
        v /= p as i128;
    }
    Some(DigitVector { digits })
}

/// `pq - 2`, the total degree of `beta_1`.
pub fn beta_modulus(p: u64) -> u64 {
    p * 2 * (p - 1) - 2
}

/// `(w, w mod (pq - 2))`.
pub fn beta_residue(p: u64, w: u64) -> (u64, u64) {
    (w, w % beta_modulus(p))
}

impl FromStr for DigitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let digits = if body.contains(char::is_whitespace) {
            body.split_whitespace()
                .map(|d| {
                    d.parse()
                        .map_err(|_| Error::Parse(format!("bad digit in `{s}`")))
                })
                .collect::<Result<Vec<u64>>>()?
        } else {
            body.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(u64::from)
                        .ok_or_else(|| Error::Parse(format!("bad digit in `{s}`")))
                })
                .collect::<Result<Vec<u64>>>()?
        };
        Ok(DigitVector { digits })
    }
}
