//! Degrees (mod `q_3 = 248`, at `p = 5`) of the generators of
//! `H^3, H^4, H^5 L(3,3)`:
//!
//! ```text
//! H^3 = A^2 z3 + A^3
//! H^4 = A^3 z3 + A^4
//! H^5 = A^4 z3 + (A^3 z3)* + (A^4)*
//! ```
//!
//! The stored tables are published data; [`derive_l33_degrees`] recomputes
//! every entry from `h_{i,j}` degrees and three seeds of the generator table.

use serde::Serialize;

use crate::complex::ComplexParams;
use crate::toda::{ul_generator, BGenerator};

pub const L33_PRIME: u64 = 5;
pub const L33_MODULUS: u64 = 248;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Stratum {
    /// `A^2 z3`, in `H^3`.
    A2Zeta,
    /// `A^3`, in `H^3`.
    A3,
    /// `A^3 z3`, in `H^4`.
    A3Zeta,
    /// `A^4`, in `H^4`.
    A4,
    /// `A^4 z3`, in `H^5`.
    A4Zeta,
    /// `(A^3 z3)*`, in `H^5`.
    A3ZetaDual,
    /// `(A^4)*`, in `H^5`.
    A4Dual,
}

impl Stratum {
    pub const ALL: [Stratum; 7] = [
        Stratum::A2Zeta,
        Stratum::A3,
        Stratum::A3Zeta,
        Stratum::A4,
        Stratum::A4Zeta,
        Stratum::A3ZetaDual,
        Stratum::A4Dual,
    ];

    pub fn cohomological_degree(self) -> usize {
        match self {
            Stratum::A2Zeta | Stratum::A3 => 3,
            Stratum::A3Zeta | Stratum::A4 => 4,
            Stratum::A4Zeta | Stratum::A3ZetaDual | Stratum::A4Dual => 5,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Stratum::A2Zeta => "A2 z3",
            Stratum::A3 => "A3",
            Stratum::A3Zeta => "A3 z3",
            Stratum::A4 => "A4",
            Stratum::A4Zeta => "A4 z3",
            Stratum::A3ZetaDual => "(A3 z3)*",
            Stratum::A4Dual => "(A4)*",
        }
    }
}

/// Published degrees of the `A^2` generators.
pub const A2_DEGREES: [(&str, i64); 9] = [
    ("g0", 56),
    ("k0", 88),
    ("b10", 40),
    ("g1", 32),
    ("k1", 192),
    ("b11", 200),
    ("g2", 160),
    ("k2", -32),
    ("b12", 8),
];

/// Published degrees of `A^3` (first six columns) and `A^4` (last two), by
/// index `i = 0, 1, 2`.
pub const A3_A4_DEGREES: [[i64; 8]; 3] = [
    [96, 56, 16, 48, -32, 0, 96, 8],
    [232, 32, 80, 240, 88, 0, 232, 40],
    [168, 160, 152, -40, 192, 0, 168, 200],
];

/// Published dual degrees, laid out like [`A3_A4_DEGREES`].
pub const DUAL_DEGREES: [[i64; 8]; 3] = [
    [152, 192, 232, 200, 32, 0, 152, 240],
    [16, 216, 168, 8, 160, 0, 16, 208],
    [80, 88, 96, 40, 56, 0, 80, 48],
];

/// Column names of [`A3_A4_DEGREES`] for index `i`.
pub fn a3_a4_names(i: usize) -> [String; 8] {
    [
        format!("g{i}h1{}", (i + 1) % 3),
        format!("l1{i}"),
        format!("l2{i}"),
        format!("l3{i}"),
        format!("l4{i}"),
        format!("l5{i}"),
        format!("m{i},j"),
        format!("m'{i}"),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct L33Generator {
    pub name: String,
    pub stratum: Stratum,
    /// Internal degree in `[0, 248)`.
    pub degree: u64,
}

fn norm(d: i64) -> u64 {
    d.rem_euclid(L33_MODULUS as i64) as u64
}

/// Every generator of `H^3, H^4, H^5`, from the stored tables.
pub fn l33_generators() -> Vec<L33Generator> {
    let mut out = Vec::new();
    let mut push = |name: String, stratum, degree: i64| {
        out.push(L33Generator {
            name,
            stratum,
            degree: norm(degree),
        })
    };
    for &(name, d) in &A2_DEGREES {
        push(name.to_string(), Stratum::A2Zeta, d);
    }
    for (i, row) in A3_A4_DEGREES.iter().enumerate() {
        let names = a3_a4_names(i);
        for c in 0..6 {
            push(names[c].clone(), Stratum::A3, row[c]);
            push(names[c].clone(), Stratum::A3Zeta, row[c]);
        }
        for c in 6..8 {
            push(names[c].clone(), Stratum::A4, row[c]);
            push(names[c].clone(), Stratum::A4Zeta, row[c]);
        }
    }
    for (i, row) in DUAL_DEGREES.iter().enumerate() {
        let names = a3_a4_names(i);
        for c in 0..6 {
            push(format!("({})*", names[c]), Stratum::A3ZetaDual, row[c]);
        }
        for c in 6..8 {
            push(format!("({})*", names[c]), Stratum::A4Dual, row[c]);
        }
    }
    out.sort_by_key(|g| g.stratum);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct L33Hit {
    pub cohomological_degree: usize,
    pub stratum: Stratum,
    pub name: String,
}

/// Generators whose degree is `target` mod 248.
pub fn l33_scan(target: i64) -> Vec<L33Hit> {
    let t = norm(target);
    l33_generators()
        .into_iter()
        .filter(|g| g.degree == t)
        .map(|g| L33Hit {
            cohomological_degree: g.stratum.cohomological_degree(),
            stratum: g.stratum,
            name: g.name,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedDegree {
    pub name: String,
    pub table: &'static str,
    pub stored: u64,
    pub derived: u64,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct L33Consistency {
    pub rows: Vec<DerivedDegree>,
    pub mismatches: usize,
    /// Sums of monomials whose terms disagree in degree.
    pub inhomogeneous: Vec<String>,
    /// Families whose index shift is not multiplication by `p`.
    pub shift_rule_failures: Vec<String>,
}

impl L33Consistency {
    pub fn is_consistent(&self) -> bool {
        self.mismatches == 0 && self.inhomogeneous.is_empty() && self.shift_rule_failures.is_empty()
    }
}

/// Recomputes every stored degree: the `l`, `m` and `m'` families as
/// products of `h_{i,j}` (degree `p^j q_i`), `g_i, k_i, b1i` as `p^i` times
/// the generator-table seeds `(p+2)q, (2p+1)q, pq`, and duals as negatives.
pub fn derive_l33_degrees() -> L33Consistency {
    let params = ComplexParams::new(L33_PRIME, 3).expect("(5, 3) is valid");
    let p = L33_PRIME;
    let m = L33_MODULUS;
    let h =
        |i: usize, j: usize| params.generator_degree(params.generator(i, j % 3).expect("valid"));
    let sum = |gens: &[(usize, usize)]| gens.iter().map(|&(i, j)| h(i, j)).sum::<u64>() % m;
    let pow = |i: usize| p.pow(i as u32) % m;

    let seed = |name: &str| ul_generator(name).expect("seed").t_at(p) % m;
    let g_seed = seed("g0");
    let k_seed = seed("k0");
    let b_seed = BGenerator::B10.t_at(p).expect("b10") % m;
    let g = |i: usize| g_seed * pow(i) % m;
    let k = |i: usize| k_seed * pow(i) % m;
    let b = |i: usize| b_seed * pow(i) % m;

    let mut inhomogeneous = Vec::new();
    let mut homogeneous = |name: String, terms: Vec<u64>| -> u64 {
        if terms.windows(2).any(|w| w[0] != w[1]) {
            inhomogeneous.push(name);
        }
        terms[0]
    };

    let mut rows = Vec::new();
    let mut record = |name: String, table: &'static str, stored: i64, derived: u64| {
        let stored = norm(stored);
        rows.push(DerivedDegree {
            name,
            table,
            stored,
            derived,
            matches: stored == derived,
        });
    };

    for (idx, &(name, d)) in A2_DEGREES.iter().enumerate() {
        let i = idx / 3;
        let derived = match idx % 3 {
            0 => g(i),
            1 => k(i),
            _ => b(i),
        };
        record(name.to_string(), "A2", d, derived);
    }

    let mut derived_rows = [[0u64; 8]; 3];
    for i in 0..3 {
        let names = a3_a4_names(i);
        let gh = (g(i) + h(1, i + 1)) % m;
        let l1 = sum(&[(1, i), (2, i), (3, i)]);
        let l2 = sum(&[(1, i), (2, i), (2, i + 2)]);
        let l3 = homogeneous(
            names[3].clone(),
            vec![
                sum(&[(1, i), (2, i), (2, i + 1)]),
                sum(&[(1, i), (1, i + 1), (3, i)]),
            ],
        );
        let l4 = sum(&[(1, i), (2, i + 2), (3, i + 1)]);
        let l5 = homogeneous(
            names[5].clone(),
            (0..3)
                .flat_map(|r| {
                    [
                        sum(&[(1, r), (2, r + 1), (3, r)]),
                        sum(&[(1, r + 1), (2, r + 2), (3, r)]),
                    ]
                })
                .collect(),
        );
        let m_ij = homogeneous(
            names[6].clone(),
            (0..3)
                .flat_map(|j| {
                    [
                        (h(1, i) + k(i) + h(3, j)) % m,
                        (g(i) + h(1, i + 1) + h(3, j)) % m,
                    ]
                })
                .collect(),
        );
        let m_prime = homogeneous(
            names[7].clone(),
            vec![
                sum(&[(1, i + 2), (1, i), (2, i), (3, i)]),
                sum(&[(1, i + 2), (1, i), (2, i), (3, i + 1)]),
                sum(&[(1, i), (2, 0), (2, 1), (2, 2)]),
            ],
        );
        derived_rows[i] = [gh, l1, l2, l3, l4, l5, m_ij, m_prime];
        for c in 0..8 {
            let table = if c < 6 { "A3" } else { "A4" };
            record(
                names[c].clone(),
                table,
                A3_A4_DEGREES[i][c],
                derived_rows[i][c],
            );
        }
    }

    for i in 0..3 {
        let names = a3_a4_names(i);
        for c in 0..8 {
            let derived = (m - derived_rows[i][c]) % m;
            record(
                format!("({})*", names[c]),
                "dual",
                DUAL_DEGREES[i][c],
                derived,
            );
        }
    }

    let mut shift_rule_failures = Vec::new();
    for (i, row) in derived_rows.iter().enumerate() {
        let next_row = &derived_rows[(i + 1) % 3];
        for (c, (&cur, &next)) in row.iter().zip(next_row).enumerate() {
            if next != cur * p % m {
                shift_rule_failures.push(a3_a4_names(i)[c].clone());
            }
        }
    }

    let mismatches = rows.iter().filter(|r| !r.matches).count();
    L33Consistency {
        rows,
        mismatches,
        inhomogeneous,
        shift_rule_failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(hits: &[L33Hit]) -> Vec<(Stratum, &str)> {
        hits.iter().map(|h| (h.stratum, h.name.as_str())).collect()
    }

    #[test]
    fn nothing_in_degree_120() {
        assert!(l33_scan(120).is_empty());
        assert!(l33_scan(120 + 248).is_empty());
    }

    #[test]
    fn degree_56() {
        let hits = l33_scan(56);
        let n = names(&hits);
        assert!(n.contains(&(Stratum::A2Zeta, "g0")));
        assert!(n.contains(&(Stratum::A3, "l10")));
        assert!(hits
            .iter()
            .all(|h| (3..=5).contains(&h.cohomological_degree)));
    }

    #[test]
    fn degree_152() {
        let n = names(&l33_scan(152))
            .into_iter()
            .map(|(s, x)| (s, x.to_string()))
            .collect::<Vec<_>>();
        assert!(n.contains(&(Stratum::A3, "l22".to_string())));
        assert!(n.contains(&(Stratum::A3ZetaDual, "(g0h11)*".to_string())));
    }

    #[test]
    fn derivation_samples() {
        let report = derive_l33_degrees();
        let get = |name: &str| report.rows.iter().find(|r| r.name == name).unwrap().derived;
        assert_eq!(get("l20"), 16);
        assert_eq!(get("g1"), 32);
        for i in 0..3 {
            assert_eq!(get(&format!("l5{i}")), 0);
        }
    }

    #[test]
    fn derivation_reproduces_stored_tables() {
        let report = derive_l33_degrees();
        assert_eq!(report.rows.len(), 9 + 24 + 24);
        assert!(report.is_consistent(), "{report:#?}");
    }

    #[test]
    fn generator_counts() {
        let all = l33_generators();
        let count = |s: Stratum| all.iter().filter(|g| g.stratum == s).count();
        assert_eq!(count(Stratum::A2Zeta), 9);
        assert_eq!(count(Stratum::A3), 18);
        assert_eq!(count(Stratum::A4), 6);
        assert_eq!(count(Stratum::A3ZetaDual), 18);
        assert_eq!(count(Stratum::A4Dual), 6);
    }
}
