//! Bigraded cohomology of `C(n)` with coefficients in `K(n)_*` or a
//! truncation `E(n)_*/(p, v_1^{e_1}, ..., v_{n-1}^{e_{n-1}})`.
//!
//! Coefficients enter only through degree bookkeeping: a basis element of
//! the `(s, t)` slice is a pair `(c, m)` with `0 <= c_i < e_i` and
//! `sum c_i q_i + |m| = t (mod q_n)`, and the differential is `id ⊗ d`.
//! The resulting dimensions are upper bounds for `H^{s,t} E(n)_*/J`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Monomial, RavenelComplex};
use crate::error::{Error, Result};
use crate::fp::FpMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum CoefficientProfile {
    /// `K(n)_* = F_p[v_n^{±1}]`: no positive powers of `v_1, ..., v_{n-1}`.
    MoravaK,
    /// `E(n)_*/(p, v_1^{e_1}, ..., v_{n-1}^{e_{n-1}})`, with every `e_i >= 1`.
    TruncatedE { exponents: Vec<u64> },
}

impl CoefficientProfile {
    pub fn truncated(exponents: Vec<u64>) -> Result<Self> {
        if let Some(i) = exponents.iter().position(|&e| e == 0) {
            return Err(Error::InvalidProfile(format!(
                "e_{} must be at least 1",
                i + 1
            )));
        }
        Ok(CoefficientProfile::TruncatedE { exponents })
    }

    /// `J_k = (p, v_1, ..., v_{n-2}, v_{n-1}^k)`.
    pub fn j_k(n: usize, k: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidProfile("J_k needs n >= 2".into()));
        }
        let mut e = vec![1; n - 1];
        e[n - 2] = k;
        Self::truncated(e)
    }

    /// Exponent bounds `(e_1, ..., e_{n-1})`, all ones for `K(n)_*`.
    pub fn exponents(&self, n: usize) -> Vec<u64> {
        match self {
            CoefficientProfile::MoravaK => vec![1; n.saturating_sub(1)],
            CoefficientProfile::TruncatedE { exponents } => exponents.clone(),
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        match self {
            CoefficientProfile::MoravaK => Ok(()),
            CoefficientProfile::TruncatedE { exponents } => {
                if exponents.len() != n.saturating_sub(1) {
                    return Err(Error::InvalidProfile(format!(
                        "expected {} exponents for height {n}, got {}",
                        n.saturating_sub(1),
                        exponents.len()
                    )));
                }
                if let Some(i) = exponents.iter().position(|&e| e == 0) {
                    return Err(Error::InvalidProfile(format!(
                        "e_{} must be at least 1",
                        i + 1
                    )));
                }
                Ok(())
            }
        }
    }

    /// Every `c` with `0 <= c_i < e_i`, lexicographically.
    fn exponent_vectors(&self, n: usize) -> Vec<Vec<u64>> {
        let bounds = self.exponents(n);
        let mut out = vec![Vec::new()];
        for &e in &bounds {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..e).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceEntry {
    /// Exponents of `v_1, ..., v_{n-1}`.
    pub v_exponents: Vec<u64>,
    pub monomial: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceBasis {
    pub s: usize,
    pub t: u64,
    pub entries: Vec<SliceEntry>,
}

impl SliceBasis {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Ranks and dimensions around one slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SliceCohomology {
    pub s: usize,
    pub t: u64,
    pub slice_dim: usize,
    /// Rank of `d : (s - 1, t) -> (s, t)`.
    pub incoming_rank: usize,
    /// Rank of `d : (s, t) -> (s + 1, t)`.
    pub outgoing_rank: usize,
    pub cohomology_dim: usize,
}

/// Euler characteristics of one internal degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EulerCharacteristic {
    pub t: u64,
    pub cochains: i64,
    pub cohomology: i64,
}

pub struct CohomologyEngine<'a> {
    complex: &'a RavenelComplex,
}

impl<'a> CohomologyEngine<'a> {
    pub fn new(complex: &'a RavenelComplex) -> Self {
        CohomologyEngine { complex }
    }

    pub fn complex(&self) -> &RavenelComplex {
        self.complex
    }

    /// `sum_i c_i q_i (mod q_n)`.
    fn v_degree(&self, c: &[u64]) -> u64 {
        let params = self.complex.params();
        let qn = params.q_n() as u128;
        let sum = c.iter().enumerate().fold(0u128, |acc, (i, &ci)| {
            (acc + ci as u128 * params.qk(i + 1) as u128) % qn
        });
        sum as u64
    }

    pub fn slice_basis(
        &self,
        profile: &CoefficientProfile,
        s: usize,
        t: i64,
    ) -> Result<SliceBasis> {
        let params = self.complex.params();
        profile.validate(params.n())?;
        let t = params.normalize_t(t);
        let qn = params.q_n();
        let mut entries = Vec::new();
        for c in profile.exponent_vectors(params.n()) {
            let shift = self.v_degree(&c);
            let mono_t = (t + qn - shift) % qn;
            for m in self.complex.basis_in_bidegree(s, mono_t as i64) {
                entries.push(SliceEntry {
                    v_exponents: c.clone(),
                    monomial: m,
                });
            }
        }
        Ok(SliceBasis { s, t, entries })
    }

    /// Matrix of `id ⊗ d` from slice `(s, t)` to slice `(s + 1, t)`; rows
    /// index the target basis and columns the source basis.
    pub fn differential_matrix(
        &self,
        profile: &CoefficientProfile,
        s: usize,
        t: i64,
    ) -> Result<FpMatrix> {
        let source = self.slice_basis(profile, s, t)?;
        let target = self.slice_basis(profile, s + 1, t)?;
        Ok(self.matrix_between(&source, &target))
    }

    fn matrix_between(&self, source: &SliceBasis, target: &SliceBasis) -> FpMatrix {
        let index: HashMap<(&[u64], Monomial), usize> = target
            .entries
            .iter()
            .enumerate()
            .map(|(r, e)| ((e.v_exponents.as_slice(), e.monomial), r))
            .collect();
        let mut m = FpMatrix::zeros(target.len(), source.len());
        for (col, e) in source.entries.iter().enumerate() {
            for (mono, coeff) in self.complex.diff_monomial(e.monomial).terms() {
                let row = index[&(e.v_exponents.as_slice(), mono)];
                m.set(row, col, coeff);
            }
        }
        m
    }

    /// Slice dimension, both ranks, and `dim H^{s,t}`.
    pub fn slice_cohomology(
        &self,
        profile: &CoefficientProfile,
        s: usize,
        t: i64,
    ) -> Result<SliceCohomology> {
        let p = self.complex.params().p();
        let here = self.slice_basis(profile, s, t)?;
        let outgoing_rank = if here.is_empty() {
            0
        } else {
            let above = self.slice_basis(profile, s + 1, t)?;
            self.matrix_between(&here, &above).rank(p)
        };
        let incoming_rank = match s.checked_sub(1) {
            Some(prev) if !here.is_empty() => {
                let below = self.slice_basis(profile, prev, t)?;
                self.matrix_between(&below, &here).rank(p)
            }
            _ => 0,
        };
        Ok(SliceCohomology {
            s,
            t: here.t,
            slice_dim: here.len(),
            incoming_rank,
            outgoing_rank,
            cohomology_dim: here.len() - outgoing_rank - incoming_rank,
        })
    }

    pub fn cohomology_dim(&self, profile: &CoefficientProfile, s: usize, t: i64) -> Result<usize> {
        Ok(self.slice_cohomology(profile, s, t)?.cohomology_dim)
    }

    /// `sum_c dim H^{s, t - sum c_i q_i} C(n)` over `0 <= c_i < e_i`: the
    /// bound for `rank H^{s,t} E(n)_*/J`. Computed slice by slice over
    /// `K(n)_*`, independently of the assembled block matrix.
    pub fn morava_vanishing_bound(
        &self,
        profile: &CoefficientProfile,
        s: usize,
        t: i64,
    ) -> Result<usize> {
        let params = self.complex.params();
        profile.validate(params.n())?;
        let t = params.normalize_t(t);
        let qn = params.q_n();
        let mut shifts: HashMap<u64, usize> = HashMap::new();
        for c in profile.exponent_vectors(params.n()) {
            *shifts.entry((t + qn - self.v_degree(&c)) % qn).or_default() += 1;
        }
        let mut residues: Vec<_> = shifts.into_iter().collect();
        residues.sort_unstable();
        residues
            .par_iter()
            .map(|&(t_m, mult)| {
                self.cohomology_dim(&CoefficientProfile::MoravaK, s, t_m as i64)
                    .map(|d| d * mult)
            })
            .sum()
    }

    /// `sum_s (-1)^s dim C^{s,t}` and `sum_s (-1)^s dim H^{s,t}` for every
    /// internal degree with a nonzero slice, over `K(n)_*`.
    pub fn euler_characteristics(&self) -> Result<Vec<EulerCharacteristic>> {
        let bidegrees = self
            .complex
            .nonempty_bidegrees()
            .ok_or_else(|| Error::InvalidArgument("full enumeration needs n <= 4".into()))?;
        let mut ts: Vec<u64> = bidegrees.iter().map(|b| b.t).collect();
        ts.sort_unstable();
        ts.dedup();
        let top = self.complex.params().generator_count();
        ts.par_iter()
            .map(|&t| {
                let p = self.complex.params().p();
                let bases: Vec<Vec<Monomial>> = (0..=top)
                    .map(|s| self.complex.basis_in_bidegree(s, t as i64))
                    .collect();
                let ranks: Vec<usize> = (0..=top)
                    .map(|s| {
                        if bases[s].is_empty() || s == top || bases[s + 1].is_empty() {
                            0
                        } else {
                            self.monomial_matrix(&bases[s], &bases[s + 1]).rank(p)
                        }
                    })
                    .collect();
                let mut cochains = 0i64;
                let mut cohomology = 0i64;
                for s in 0..=top {
                    let sign = if s % 2 == 0 { 1 } else { -1 };
                    let incoming = if s == 0 { 0 } else { ranks[s - 1] };
                    let h = bases[s].len() - ranks[s] - incoming;
                    cochains += sign * bases[s].len() as i64;
                    cohomology += sign * h as i64;
                }
                Ok(EulerCharacteristic {
                    t,
                    cochains,
                    cohomology,
                })
            })
            .collect()
    }

    fn monomial_matrix(&self, source: &[Monomial], target: &[Monomial]) -> FpMatrix {
        let index: HashMap<Monomial, usize> =
            target.iter().enumerate().map(|(r, &m)| (m, r)).collect();
        let mut m = FpMatrix::zeros(target.len(), source.len());
        for (col, &mono) in source.iter().enumerate() {
            for (img, coeff) in self.complex.diff_monomial(mono).terms() {
                m.set(index[&img], col, coeff);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_validation() {
        let c = RavenelComplex::new(5, 3).unwrap();
        let e = CohomologyEngine::new(&c);
        assert!(CoefficientProfile::truncated(vec![1, 0]).is_err());
        let wrong_len = CoefficientProfile::TruncatedE { exponents: vec![1] };
        assert!(matches!(
            e.slice_basis(&wrong_len, 0, 0),
            Err(Error::InvalidProfile(_))
        ));
        assert!(CoefficientProfile::j_k(1, 3).is_err());
        assert_eq!(
            CoefficientProfile::j_k(4, 7).unwrap(),
            CoefficientProfile::TruncatedE {
                exponents: vec![1, 1, 7]
            }
        );
    }

    #[test]
    fn morava_slice_is_plain_basis() {
        let c = RavenelComplex::new(7, 4).unwrap();
        let e = CohomologyEngine::new(&c);
        let slice = e.slice_basis(&CoefficientProfile::MoravaK, 13, 12).unwrap();
        assert_eq!(slice.len(), 21);
        assert!(slice.entries.iter().all(|x| x.v_exponents == vec![0, 0, 0]));
    }

    #[test]
    fn truncated_slice_around_top_class() {
        let c = RavenelComplex::new(5, 3).unwrap();
        let e = CohomologyEngine::new(&c);
        let j26 = CoefficientProfile::truncated(vec![1, 26]).unwrap();
        let j27 = CoefficientProfile::truncated(vec![1, 27]).unwrap();
        assert!(e.slice_basis(&j26, 9, 8).unwrap().is_empty());
        let slice = e.slice_basis(&j27, 9, 8).unwrap();
        assert_eq!(slice.len(), 1);
        assert_eq!(slice.entries[0].v_exponents, vec![0, 26]);
        assert_eq!(slice.entries[0].monomial, c.top_class());
    }

    #[test]
    fn top_degree_is_the_end() {
        let c = RavenelComplex::new(3, 2).unwrap();
        let e = CohomologyEngine::new(&c);
        assert!(e
            .slice_basis(&CoefficientProfile::MoravaK, 5, 0)
            .unwrap()
            .is_empty());
        let d = e
            .differential_matrix(&CoefficientProfile::MoravaK, 4, 0)
            .unwrap();
        assert_eq!((d.rows(), d.cols()), (0, 1));
        assert!(d.is_zero());
    }

    #[test]
    fn constants_survive() {
        for (p, n) in [(3, 2), (5, 3), (7, 4)] {
            let c = RavenelComplex::new(p, n).unwrap();
            let e = CohomologyEngine::new(&c);
            assert_eq!(
                e.cohomology_dim(&CoefficientProfile::MoravaK, 0, 0)
                    .unwrap(),
                1
            );
        }
    }

    #[test]
    fn block_matrix_agrees_with_slice_sum() {
        let c = RavenelComplex::new(5, 3).unwrap();
        let e = CohomologyEngine::new(&c);
        let profile = CoefficientProfile::truncated(vec![2, 3]).unwrap();
        for s in 0..=9 {
            for t in (0..248).step_by(8) {
                assert_eq!(
                    e.cohomology_dim(&profile, s, t).unwrap(),
                    e.morava_vanishing_bound(&profile, s, t).unwrap(),
                    "(s, t) = ({s}, {t})"
                );
            }
        }
    }
}
