//! Exact counts and kernel-dimension probabilities for uniformly random
//! matrices over the prime field `F_l`.
//!
//! Two ensembles are supported: general `(n-u) x n` matrices and alternating
//! `n x n` matrices (skew-symmetric with zero diagonal; over `F_2` these are
//! the symmetric matrices with zero diagonal). Counts are computed by
//! one-row-extension recurrences; the recurrences are treated as
//! implementation conjectures and must pass [`enumerate_rank_counts`] /
//! [`enumerate_alternating_rank_counts`] on every small shape before anything
//! downstream trusts them. The `validate` gate and the test suite both run
//! that comparison.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::rational::Rational;

/// Hard cap on the matrix size explored by the limit computations.
pub const DEFAULT_LIMIT_CAP: u64 = 400;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FfStatsError {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("alternating matrices have even rank, got r = {0}")]
    OddAlternatingRank(u64),
    #[error("tolerance must be positive and finite")]
    BadTolerance,
    #[error("limit of kernel probability did not converge below tolerance before n = {cap}")]
    LimitDidNotConverge { cap: u64 },
}

/// Which matrix ensemble a distribution refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnsembleKind {
    /// Uniform `(n-u) x n` matrices.
    General { u: i64 },
    /// Uniform alternating `n x n` matrices.
    Alternating,
}

/// A fully specified finite ensemble: field size, shape family, and `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnsembleSpec {
    pub ell: u64,
    pub kind: EnsembleKind,
    pub n: u64,
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<(), FfStatsError> {
        check_prime(self.ell)?;
        Ok(())
    }
}

/// Kernel-dimension distribution of one ensemble; masses are exact and sum
/// to exactly 1.
#[derive(Debug, Clone)]
pub struct KernelDistribution {
    pub ensemble: EnsembleSpec,
    /// `masses[j]` is the probability of kernel dimension exactly `j`,
    /// for `j = 0..=n`.
    pub masses: Vec<Rational>,
}

impl KernelDistribution {
    pub fn mass(&self, j: u64) -> Rational {
        self.masses
            .get(j as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Result of a numeric `n -> infinity` limit: the value, the last successive
/// difference observed, and the largest matrix size that was evaluated.
#[derive(Debug, Clone, Copy)]
pub struct LimitEstimate {
    pub value: f64,
    pub achieved_delta: f64,
    pub matrix_size: u64,
}

fn check_prime(ell: u64) -> Result<(), FfStatsError> {
    if ell < 2 {
        return Err(FfStatsError::NonPrimeModulus(ell));
    }
    let mut d = 2u64;
    while d * d <= ell {
        if ell % d == 0 {
            return Err(FfStatsError::NonPrimeModulus(ell));
        }
        d += 1;
    }
    Ok(())
}

fn pow_big(ell: u64, e: u64) -> BigUint {
    BigUint::from(ell).pow(e.try_into().expect("exponent fits u32"))
}

/// Counts of `m x n` matrices over `F_l` by rank, indexed `0..=min(m,n)`.
///
/// Row extension: appending a row to a rank-`r` matrix keeps rank `r` for the
/// `l^r` rows inside the row space and moves to rank `r+1` for the rest.
fn rank_count_table(ell: u64, m: u64, n: u64) -> Vec<BigUint> {
    let maxr = m.min(n) as usize;
    let mut counts = vec![BigUint::zero(); maxr + 1];
    counts[0] = BigUint::one();
    let total_rows = pow_big(ell, n);
    for _ in 0..m {
        let mut next = vec![BigUint::zero(); maxr + 1];
        for r in 0..=maxr {
            if counts[r].is_zero() {
                continue;
            }
            let stay = &counts[r] * pow_big(ell, r as u64);
            if r + 1 <= maxr {
                let grow = &counts[r] * (&total_rows - pow_big(ell, r as u64));
                next[r + 1] += grow;
            }
            next[r] += stay;
        }
        counts = next;
    }
    counts
}

/// Counts of alternating `n x n` matrices over `F_l` by (even) rank,
/// indexed by `s` where the rank is `2s`.
///
/// Extending an alternating `k x k` matrix by one bordering row/column keeps
/// the rank when the new column lies in the column space (`l^{2s}` choices)
/// and raises it by two otherwise.
fn alternating_count_table(ell: u64, n: u64) -> Vec<BigUint> {
    let maxs = (n / 2) as usize;
    let mut counts = vec![BigUint::zero(); maxs + 1];
    counts[0] = BigUint::one();
    for k in 0..n {
        let col_space = pow_big(ell, k);
        let mut next = vec![BigUint::zero(); maxs + 1];
        for s in 0..=maxs {
            if counts[s].is_zero() {
                continue;
            }
            next[s] += &counts[s] * pow_big(ell, 2 * s as u64);
            if s + 1 <= maxs {
                let outside = &col_space - pow_big(ell, 2 * s as u64).min(col_space.clone());
                next[s + 1] += &counts[s] * outside;
            }
        }
        counts = next;
    }
    counts
}

/// Exact number of `m x n` matrices over `F_l` of rank exactly `r`.
pub fn count_rank_matrices(ell: u64, m: u64, n: u64, r: u64) -> Result<BigUint, FfStatsError> {
    check_prime(ell)?;
    if r > m.min(n) {
        return Ok(BigUint::zero());
    }
    Ok(rank_count_table(ell, m, n)[r as usize].clone())
}

/// Exact number of alternating `n x n` matrices over `F_l` of rank exactly
/// `r`; `r` must be even.
pub fn count_rank_alternating(ell: u64, n: u64, r: u64) -> Result<BigUint, FfStatsError> {
    check_prime(ell)?;
    if r % 2 != 0 {
        return Err(FfStatsError::OddAlternatingRank(r));
    }
    if r > n {
        return Ok(BigUint::zero());
    }
    Ok(alternating_count_table(ell, n)[(r / 2) as usize].clone())
}

/// `P^Mat_{u,l}(j | n)`: probability that a uniform `(n-u) x n` matrix over
/// `F_l` has kernel of dimension exactly `j`. Zero when `n < u` or `j > n`.
pub fn p_mat(u: i64, ell: u64, j: u64, n: u64) -> Result<Rational, FfStatsError> {
    check_prime(ell)?;
    let n_i = n as i64;
    if n_i < u || j > n {
        return Ok(Rational::zero());
    }
    let m = (n_i - u) as u64;
    let rank = n - j;
    let count = count_rank_matrices(ell, m, n, rank)?;
    let total = pow_big(ell, m * n);
    Ok(Rational::new(BigInt::from(count), BigInt::from(total)))
}

/// `P^Alt(j | n)` over `F_2`: probability that a uniform alternating
/// `n x n` matrix has kernel of dimension exactly `j`. Zero unless `j` and
/// `n` have the same parity.
pub fn p_alt(j: u64, n: u64) -> Rational {
    p_alt_ell(2, j, n).expect("2 is prime")
}

/// Alternating kernel probability over a general prime field (only `l = 2`
/// is exercised by the acceptance battery, but the count is generic).
pub fn p_alt_ell(ell: u64, j: u64, n: u64) -> Result<Rational, FfStatsError> {
    check_prime(ell)?;
    if j > n || (n - j) % 2 != 0 {
        return Ok(Rational::zero());
    }
    let count = count_rank_alternating(ell, n, n - j)?;
    let total = pow_big(ell, n * (n - 1) / 2);
    Ok(Rational::new(BigInt::from(count), BigInt::from(total)))
}

/// Full kernel-dimension distribution for one ensemble.
pub fn kernel_distribution(ensemble: &EnsembleSpec) -> Result<KernelDistribution, FfStatsError> {
    ensemble.validate()?;
    let n = ensemble.n;
    let mut masses = Vec::with_capacity(n as usize + 1);
    for j in 0..=n {
        let mass = match ensemble.kind {
            EnsembleKind::General { u } => p_mat(u, ensemble.ell, j, n)?,
            EnsembleKind::Alternating => p_alt_ell(ensemble.ell, j, n)?,
        };
        masses.push(mass);
    }
    let dist = KernelDistribution {
        ensemble: *ensemble,
        masses,
    };
    debug_assert!(
        crate::rational::sum(&dist.masses).is_one() || matches!(ensemble.kind, EnsembleKind::General { u } if (n as i64) < u),
        "kernel masses must sum to 1"
    );
    Ok(dist)
}

fn check_tol(tol: f64) -> Result<Rational, FfStatsError> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(FfStatsError::BadTolerance);
    }
    Ok(Rational::from_float(tol).expect("finite"))
}

/// `P^Alt(j | infinity)`: the averaged limit
/// `lim (P^Alt(j|2n) + P^Alt(j|2n+1)) / 2`, computed by increasing `n` until
/// successive averaged values differ by less than `tol`.
pub fn p_alt_limit(j: u64, tol: f64) -> Result<LimitEstimate, FfStatsError> {
    p_alt_limit_capped(j, tol, DEFAULT_LIMIT_CAP)
}

pub fn p_alt_limit_capped(j: u64, tol: f64, cap: u64) -> Result<LimitEstimate, FfStatsError> {
    let tol_r = check_tol(tol)?;
    let avg = |k: u64| -> Rational {
        (p_alt(j, 2 * k) + p_alt(j, 2 * k + 1)) / Rational::from_integer(BigInt::from(2))
    };
    let mut k = j / 2 + 1;
    let mut prev = avg(k);
    loop {
        k += 1;
        if 2 * k + 1 > cap {
            return Err(FfStatsError::LimitDidNotConverge { cap });
        }
        let cur = avg(k);
        let delta = (&cur - &prev).abs();
        if delta < tol_r {
            return Ok(LimitEstimate {
                value: cur.to_f64().expect("probability fits f64"),
                achieved_delta: delta.to_f64().unwrap_or(0.0),
                matrix_size: 2 * k + 1,
            });
        }
        prev = cur;
    }
}

/// `P^Mat_{u,l}(j | infinity) = lim_n P^Mat_{u,l}(j | n)`, computed as in
/// [`p_alt_limit`] but without parity averaging.
pub fn p_mat_limit(u: i64, ell: u64, j: u64, tol: f64) -> Result<LimitEstimate, FfStatsError> {
    p_mat_limit_capped(u, ell, j, tol, DEFAULT_LIMIT_CAP)
}

pub fn p_mat_limit_capped(
    u: i64,
    ell: u64,
    j: u64,
    tol: f64,
    cap: u64,
) -> Result<LimitEstimate, FfStatsError> {
    check_prime(ell)?;
    let tol_r = check_tol(tol)?;
    let mut n = j.max(u.max(0) as u64) + 1;
    let mut prev = p_mat(u, ell, j, n)?;
    loop {
        n += 1;
        if n > cap {
            return Err(FfStatsError::LimitDidNotConverge { cap });
        }
        let cur = p_mat(u, ell, j, n)?;
        let delta = (&cur - &prev).abs();
        if delta < tol_r {
            return Ok(LimitEstimate {
                value: cur.to_f64().expect("probability fits f64"),
                achieved_delta: delta.to_f64().unwrap_or(0.0),
                matrix_size: n,
            });
        }
        prev = cur;
    }
}

// ---------------------------------------------------------------------------
// Enumeration oracle
// ---------------------------------------------------------------------------

/// Rank of a small matrix over `F_l` by Gaussian elimination.
pub fn rank_mod(rows: &[Vec<u8>], ell: u8) -> usize {
    let mut rows: Vec<Vec<u8>> = rows.to_vec();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] % ell != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col] % ell, ell);
        for x in rows[rank].iter_mut() {
            *x = ((*x as u16 * inv as u16) % ell as u16) as u8;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] % ell != 0 {
                let factor = rows[i][col] % ell;
                for c in 0..ncols {
                    let sub = (factor as u16 * rows[rank][c] as u16) % ell as u16;
                    rows[i][c] = ((rows[i][c] as u16 + ell as u16 - sub) % ell as u16) as u8;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u8, ell: u8) -> u8 {
    (1..ell).find(|&x| (a as u16 * x as u16) % ell as u16 == 1).expect("unit in F_l")
}

/// Brute-force counts of `m x n` matrices over `F_l` by rank, by visiting
/// every one of the `l^{mn}` matrices. Ground truth for the recurrence;
/// keep the shapes small.
pub fn enumerate_rank_counts(ell: u64, m: u64, n: u64) -> Result<Vec<BigUint>, FfStatsError> {
    check_prime(ell)?;
    assert!(
        pow_big(ell, m * n).to_u64().is_some(),
        "enumeration oracle is for small shapes only"
    );
    let ell8 = u8::try_from(ell).expect("small prime");
    let maxr = m.min(n) as usize;
    // All possible rows, as digit vectors.
    let nrows = (ell as usize).pow(n as u32);
    let all_rows: Vec<Vec<u8>> = (0..nrows).map(|code| decode_row(code, ell8, n)).collect();

    // Depth-first over the m rows, carrying an incremental echelon basis so
    // each matrix costs one row reduction instead of a fresh elimination.
    fn dfs(
        depth: u64,
        m: u64,
        basis: &Vec<(usize, Vec<u8>)>,
        all_rows: &[Vec<u8>],
        ell: u8,
        counts: &mut [u64],
    ) {
        if depth == m {
            counts[basis.len()] += 1;
            return;
        }
        for row in all_rows {
            let mut v = row.clone();
            reduce_against(&mut v, basis, ell);
            if let Some(col) = v.iter().position(|&x| x != 0) {
                let inv = mod_inverse(v[col], ell);
                for x in v.iter_mut() {
                    *x = ((*x as u16 * inv as u16) % ell as u16) as u8;
                }
                let mut next = basis.clone();
                next.push((col, v));
                dfs(depth + 1, m, &next, all_rows, ell, counts);
            } else {
                dfs(depth + 1, m, basis, all_rows, ell, counts);
            }
        }
    }

    let mut counts = vec![0u64; maxr + 1];
    dfs(0, m, &Vec::new(), &all_rows, ell8, &mut counts);
    Ok(counts.into_iter().map(BigUint::from).collect())
}

fn decode_row(mut code: usize, ell: u8, n: u64) -> Vec<u8> {
    let mut row = vec![0u8; n as usize];
    for slot in row.iter_mut() {
        *slot = (code % ell as usize) as u8;
        code /= ell as usize;
    }
    row
}

fn reduce_against(v: &mut [u8], basis: &[(usize, Vec<u8>)], ell: u8) {
    for (col, b) in basis {
        let factor = v[*col] % ell;
        if factor != 0 {
            for c in 0..v.len() {
                let sub = (factor as u16 * b[c] as u16) % ell as u16;
                v[c] = ((v[c] as u16 + ell as u16 - sub) % ell as u16) as u8;
            }
        }
    }
}

/// Brute-force counts of alternating `n x n` matrices over `F_l` by rank,
/// visiting all `l^{n(n-1)/2}` strictly-upper-triangular assignments.
pub fn enumerate_alternating_rank_counts(ell: u64, n: u64) -> Result<Vec<BigUint>, FfStatsError> {
    check_prime(ell)?;
    let free = n * (n.saturating_sub(1)) / 2;
    assert!(
        pow_big(ell, free).to_u64().is_some(),
        "enumeration oracle is for small shapes only"
    );
    let ell8 = u8::try_from(ell).expect("small prime");
    let total = (ell as usize).pow(free as u32);
    let mut counts = vec![0u64; n as usize + 1];
    for code in 0..total {
        let mut mat = vec![vec![0u8; n as usize]; n as usize];
        let mut c = code;
        for i in 0..n as usize {
            for j in (i + 1)..n as usize {
                let v = (c % ell as usize) as u8;
                c /= ell as usize;
                mat[i][j] = v;
                mat[j][i] = (ell8 - v) % ell8;
            }
        }
        let r = rank_mod(&mat, ell8);
        counts[r] += 1;
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

/// Runs the recurrence-vs-enumeration comparison on every small shape.
/// Returns the number of shapes checked; any mismatch is an `Err` describing
/// the first offending shape.
pub fn recurrence_enumeration_gate() -> Result<usize, String> {
    let mut checked = 0;
    for ell in [2u64, 3] {
        for m in 0..=4u64 {
            for n in 0..=4u64 {
                let enumerated = enumerate_rank_counts(ell, m, n).map_err(|e| e.to_string())?;
                for r in 0..=m.min(n) {
                    let rec = count_rank_matrices(ell, m, n, r).map_err(|e| e.to_string())?;
                    if rec != enumerated[r as usize] {
                        return Err(format!(
                            "general count mismatch at ell={ell} m={m} n={n} r={r}: recurrence {rec}, enumeration {}",
                            enumerated[r as usize]
                        ));
                    }
                }
                checked += 1;
            }
        }
    }
    for (ell, max_n) in [(2u64, 5u64), (3, 4)] {
        for n in 0..=max_n {
            let enumerated =
                enumerate_alternating_rank_counts(ell, n).map_err(|e| e.to_string())?;
            for r in (0..=n).step_by(2) {
                let rec = count_rank_alternating(ell, n, r).map_err(|e| e.to_string())?;
                if rec != enumerated[r as usize] {
                    return Err(format!(
                        "alternating count mismatch at ell={ell} n={n} r={r}: recurrence {rec}, enumeration {}",
                        enumerated[r as usize]
                    ));
                }
            }
            // Odd ranks must be absent from the enumeration as well.
            for r in (1..=n).step_by(2) {
                if !enumerated[r as usize].is_zero() {
                    return Err(format!(
                        "alternating enumeration found odd rank {r} at ell={ell} n={n}"
                    ));
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, sum};

    #[test]
    fn recurrences_match_enumeration_on_all_small_shapes() {
        let checked = recurrence_enumeration_gate().expect("gate must pass");
        assert!(checked > 0);
    }

    #[test]
    fn counts_total_to_all_matrices() {
        for ell in [2u64, 3, 5] {
            for m in 0..=3u64 {
                for n in 0..=3u64 {
                    let total: BigUint = (0..=m.min(n))
                        .map(|r| count_rank_matrices(ell, m, n, r).unwrap())
                        .sum();
                    assert_eq!(total, pow_big(ell, m * n), "ell={ell} m={m} n={n}");
                }
            }
            for n in 0..=5u64 {
                let total: BigUint = (0..=n)
                    .step_by(2)
                    .map(|r| count_rank_alternating(ell, n, r).unwrap())
                    .sum();
                assert_eq!(total, pow_big(ell, n * (n - 1) / 2), "alt ell={ell} n={n}");
            }
        }
    }

    #[test]
    fn figure_counts() {
        // Invertible 3x3 matrices over F_2 and the alternating rank-4 count
        // behind the 28/64 edge.
        assert_eq!(count_rank_matrices(2, 3, 3, 3).unwrap(), BigUint::from(168u32));
        assert_eq!(count_rank_alternating(2, 4, 4).unwrap(), BigUint::from(28u32));
        assert_eq!(count_rank_alternating(2, 4, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(count_rank_matrices(2, 1, 1, 0).unwrap(), BigUint::from(1u32));
        // All sixteen 2x2 matrices over F_2, six of which are invertible.
        assert_eq!(count_rank_matrices(2, 2, 2, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(
            enumerate_rank_counts(2, 2, 2).unwrap()[2],
            BigUint::from(6u32)
        );
    }

    #[test]
    fn alternating_five_by_five_frozen_from_enumeration() {
        // Value fixed by enumerating all 2^10 alternating 5x5 matrices.
        let by_enum = enumerate_alternating_rank_counts(2, 5).unwrap();
        assert_eq!(by_enum[4], BigUint::from(868u32));
        assert_eq!(count_rank_alternating(2, 5, 4).unwrap(), by_enum[4]);
    }

    #[test]
    fn errors_are_distinct() {
        assert_eq!(
            count_rank_matrices(4, 2, 2, 1).unwrap_err(),
            FfStatsError::NonPrimeModulus(4)
        );
        assert_eq!(
            count_rank_alternating(2, 4, 3).unwrap_err(),
            FfStatsError::OddAlternatingRank(3)
        );
    }

    #[test]
    fn figure_one_probabilities_exact() {
        assert_eq!(p_mat(0, 2, 0, 3).unwrap(), rat(168, 512));
        assert_eq!(p_mat(0, 2, 3, 3).unwrap(), rat(1, 512));
        assert_eq!(p_mat(5, 2, 0, 3).unwrap(), rat(0, 1));
        assert_eq!(p_alt(2, 4), rat(35, 64));
        assert_eq!(p_alt(1, 3), rat(7, 8));
        assert_eq!(p_alt(0, 3), rat(0, 1));
    }

    #[test]
    fn kernel_distribution_sums_to_one() {
        for spec in [
            EnsembleSpec { ell: 2, kind: EnsembleKind::Alternating, n: 7 },
            EnsembleSpec { ell: 2, kind: EnsembleKind::General { u: 0 }, n: 6 },
            EnsembleSpec { ell: 3, kind: EnsembleKind::General { u: -1 }, n: 5 },
            EnsembleSpec { ell: 3, kind: EnsembleKind::General { u: 2 }, n: 5 },
        ] {
            let dist = kernel_distribution(&spec).unwrap();
            assert!(sum(&dist.masses).is_one(), "{spec:?}");
        }
        // Alternating masses vanish at parity mismatches.
        let alt = kernel_distribution(&EnsembleSpec {
            ell: 2,
            kind: EnsembleKind::Alternating,
            n: 6,
        })
        .unwrap();
        for j in (1..=5).step_by(2) {
            assert!(alt.mass(j).is_zero());
        }
    }

    #[test]
    fn alt_limit_matches_exact_tail() {
        let est = p_alt_limit(0, 1e-12).unwrap();
        let exact = p_alt(0, 40).to_f64().unwrap() / 2.0;
        assert!((est.value - exact).abs() < 1e-6, "{} vs {exact}", est.value);
        assert!(est.matrix_size <= DEFAULT_LIMIT_CAP);

        // Odd kernels only come from odd n.
        let est1 = p_alt_limit(1, 1e-12).unwrap();
        let exact1 = p_alt(1, 41).to_f64().unwrap() / 2.0;
        assert!((est1.value - exact1).abs() < 1e-6);
    }

    #[test]
    fn limits_normalize() {
        let tol = 1e-12;
        let total_alt: f64 = (0..=20).map(|j| p_alt_limit(j, tol).unwrap().value).sum();
        assert!((total_alt - 1.0).abs() < 20.0 * tol + 1e-9, "{total_alt}");
        let total_mat: f64 = (0..=20)
            .map(|j| p_mat_limit(0, 2, j, tol).unwrap().value)
            .sum();
        assert!((total_mat - 1.0).abs() < 20.0 * tol + 1e-9, "{total_mat}");
    }

    #[test]
    fn mat_limit_examples() {
        let at_zero = p_mat_limit(0, 2, 0, 1e-12).unwrap();
        let exact = p_mat(0, 2, 0, 30).unwrap().to_f64().unwrap();
        assert!((at_zero.value - exact).abs() < 1e-6);
        // Extra rows shrink kernels, so u = -1 sees more trivial kernels.
        let extra_rows = p_mat_limit(-1, 2, 0, 1e-12).unwrap();
        assert!(extra_rows.value > at_zero.value);
    }

    #[test]
    fn limit_tail_sanity() {
        for u in [-1i64, 0, 1] {
            for ell in [2u64, 3] {
                for j in 0..=4u64 {
                    let est = p_mat_limit(u, ell, j, 1e-10).unwrap();
                    let exact = p_mat(u, ell, j, 50).unwrap().to_f64().unwrap();
                    assert!(
                        (est.value - exact).abs() < 1e-8,
                        "u={u} ell={ell} j={j}: {} vs {exact}",
                        est.value
                    );
                }
            }
        }
    }

    #[test]
    fn non_convergence_is_reported() {
        let err = p_alt_limit_capped(0, 1e-300, 40).unwrap_err();
        assert_eq!(err, FfStatsError::LimitDidNotConverge { cap: 40 });
    }
}
