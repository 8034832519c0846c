//! Independent reference models used as oracles. Nothing here calls the
//! library's arithmetic: monomials are sorted generator lists, signs come
//! from bubble sort, and ranks from a separate elimination.
#![allow(dead_code)]

use std::collections::BTreeMap;

pub type Gen = (usize, usize);
pub type Word = Vec<Gen>;

pub struct Model {
    pub p: i64,
    pub n: usize,
    pub q_n: i64,
}

impl Model {
    pub fn new(p: i64, n: usize) -> Self {
        Model {
            p,
            n,
            q_n: 2 * (p.pow(n as u32) - 1),
        }
    }

    pub fn gens(&self) -> Vec<Gen> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 0..self.n {
                out.push((i, j));
            }
        }
        out
    }

    pub fn gen_degree(&self, (i, j): Gen) -> i64 {
        let q_i = 2 * (self.p.pow(i as u32) - 1);
        (self.p.pow(j as u32) * q_i).rem_euclid(self.q_n)
    }

    pub fn degree(&self, w: &[Gen]) -> i64 {
        w.iter()
            .map(|&g| self.gen_degree(g))
            .sum::<i64>()
            .rem_euclid(self.q_n)
    }

    /// Sorts a word, returning the sign of the sort, or `None` on a repeat.
    pub fn normalize(&self, w: &[Gen]) -> Option<(Word, i64)> {
        let mut v = w.to_vec();
        let mut sign = 1;
        for a in 0..v.len() {
            for b in 0..v.len() - 1 - a {
                if v[b] > v[b + 1] {
                    v.swap(b, b + 1);
                    sign = -sign;
                } else if v[b] == v[b + 1] {
                    return None;
                }
            }
        }
        if v.windows(2).any(|x| x[0] == x[1]) {
            return None;
        }
        Some((v, sign))
    }

    /// `d(h_{i,j}) = sum_{l=1}^{i-1} h_{l,j} h_{i-l,l+j}`, as unsorted words.
    pub fn d_gen(&self, (i, j): Gen) -> Vec<Word> {
        (1..i)
            .map(|l| vec![(l, j), (i - l, (l + j) % self.n)])
            .collect()
    }

    /// Leibniz rule on a sorted word; coefficients in `Z`.
    pub fn d_word(&self, w: &[Gen]) -> BTreeMap<Word, i64> {
        let mut out = BTreeMap::new();
        for m in 0..w.len() {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            for dw in self.d_gen(w[m]) {
                let mut word = w[..m].to_vec();
                word.extend(dw);
                word.extend_from_slice(&w[m + 1..]);
                if let Some((sorted, s)) = self.normalize(&word) {
                    *out.entry(sorted).or_insert(0) += sign * s;
                }
            }
        }
        out.retain(|_, c| *c % self.p != 0);
        out
    }

    pub fn basis(&self, s: usize, t: i64) -> Vec<Word> {
        let gens = self.gens();
        let t = t.rem_euclid(self.q_n);
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            m: &Model,
            gens: &[Gen],
            start: usize,
            s: usize,
            t: i64,
            cur: &mut Word,
            out: &mut Vec<Word>,
        ) {
            if cur.len() == s {
                if m.degree(cur) == t {
                    out.push(cur.clone());
                }
                return;
            }
            for k in start..gens.len() {
                cur.push(gens[k]);
                rec(m, gens, k + 1, s, t, cur, out);
                cur.pop();
            }
        }
        rec(self, &gens, 0, s, t, &mut cur, &mut out);
        out
    }

    /// Matrix of `d: C^{s,t} -> C^{s+1,t}`, rows indexed by the target.
    pub fn d_matrix(&self, s: usize, t: i64) -> Vec<Vec<i64>> {
        let src = self.basis(s, t);
        let tgt = self.basis(s + 1, t);
        let index: BTreeMap<&Word, usize> = tgt.iter().enumerate().map(|(r, w)| (w, r)).collect();
        let mut m = vec![vec![0i64; src.len()]; tgt.len()];
        for (c, w) in src.iter().enumerate() {
            for (img, coeff) in self.d_word(w) {
                m[index[&img]][c] = coeff.rem_euclid(self.p);
            }
        }
        m
    }

    pub fn cohomology_dim(&self, s: usize, t: i64) -> usize {
        let dim = self.basis(s, t).len();
        let out = rank_mod_p(&self.d_matrix(s, t), self.p);
        let inc = if s == 0 {
            0
        } else {
            rank_mod_p(&self.d_matrix(s - 1, t), self.p)
        };
        dim - out - inc
    }

    /// Bit index used by the library for `h_{i,j}`.
    pub fn mask_of(&self, w: &[Gen]) -> u64 {
        w.iter()
            .fold(0u64, |acc, &(i, j)| acc | 1u64 << ((i - 1) * self.n + j))
    }

    pub fn word_of(&self, mask: u64) -> Word {
        (0..self.n * self.n)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| (k / self.n + 1, k % self.n))
            .collect()
    }
}

/// Row echelon rank over `Z/p`, written independently of the library.
pub fn rank_mod_p(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let inv = |x: i64| -> i64 {
        let mut r = 1i64;
        let mut b = x;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let f = inv(a[rank][c]);
        for r in rank + 1..rows {
            if a[r][c] != 0 {
                let k = a[r][c] * f % p;
                let pivot = a[rank].clone();
                for (x, &y) in a[r][c..].iter_mut().zip(&pivot[c..]) {
                    *x = (*x - k * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant over `Z/p` by cofactor expansion (tiny matrices only).
pub fn det_mod_p(m: &[Vec<i64>], p: i64) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0i64;
    for c in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != c)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total = (total + sign * m[0][c] * det_mod_p(&minor, p)).rem_euclid(p);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Rank as the largest size of a nonvanishing minor.
pub fn rank_by_minors(m: &[Vec<i64>], p: i64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    for k in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c]).collect())
                    .collect();
                if det_mod_p(&minor, p) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

/// Least `a >= 1` with `a q_{n-1} = q (mod q_n)`, by direct search.
pub fn min_exponent_oracle(p: u64, n: u32) -> Option<u64> {
    let q = |k: u32| 2 * (p.pow(k) - 1);
    (1..=q(n)).find(|&a| (a * q(n - 1)) % q(n) == q(1) % q(n))
}
