//! Degree sequences and the alternating-sum formula for quantum K-theory
//! structure constants.
//!
//! A structure constant is assembled from abstract tables of three-point
//! invariants `A_d[u][v][k]` and two-point invariants `T_d[k][k']` as
//!
//! ```text
//! N(u, v, w, d) = sum over bd = (d_0, ..., d_r) with |bd| = d of
//!                 (-1)^r sum_{k_1..k_r} A_{d_0}[u][v][k_1] T_{d_1}[k_1][k_2] ... T_{d_r}[k_r][w]
//! ```
//!
//! The tables are synthetic. What is checked here is the algebra of the
//! formula: brute force against matrix chains, and the cancellation that
//! kills high degrees once terms only see `min(d_0, dmax)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("structure constant sum"))
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("structure constant product"))
}

/// `(d_0, d_1, ..., d_r)` with `d_0 >= 0` and `d_i >= 1` for `i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() || entries[1..].contains(&0) {
            return Err(Error::Config(format!("invalid degree sequence {entries:?}")));
        }
        Ok(DegreeSequence(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn d0(&self) -> usize {
        self.0[0]
    }

    pub fn r(&self) -> usize {
        self.0.len() - 1
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(-1)^r`.
    pub fn sign(&self) -> i64 {
        if self.r().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl std::fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Compositions of `m` (all parts positive), shortest first, then lexicographic.
fn compositions(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=m {
        for mut tail in compositions(m - first) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// All degree sequences of total `d`, ordered by `d_0` descending, then
/// length, then lexicographically.
pub fn enumerate_sequences(d: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    for d0 in (0..=d).rev() {
        if d0 == d {
            out.push(DegreeSequence(vec![d]));
            continue;
        }
        for tail in compositions(d - d0) {
            let mut e = Vec::with_capacity(tail.len() + 1);
            e.push(d0);
            e.extend(tail);
            out.push(DegreeSequence(e));
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> Result<i64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = mul(acc, (n - i) as i64)? / (i as i64 + 1);
    }
    Ok(acc)
}

/// Number of sequences of total `d` with first entry `d0` and `length`
/// entries, in closed form.
pub fn count_sequences(d: usize, d0: usize, length: usize) -> Result<i64> {
    if d0 > d || length == 0 {
        return Ok(0);
    }
    if d0 == d {
        return Ok(i64::from(length == 1));
    }
    if length < 2 {
        return Ok(0);
    }
    binomial(d - d0 - 1, length - 2)
}

/// `sum_{r=1}^{k} (-1)^r binom(k-1, r-1)`.
pub fn alt_binomial_sum(k: usize) -> Result<i64> {
    let mut acc = 0i64;
    for r in 1..=k {
        let b = binomial(k - 1, r - 1)?;
        acc = add(acc, if r % 2 == 0 { b } else { -b })?;
    }
    Ok(acc)
}

/// `sum over sequences bd of total d of (-1)^r c(min(d_0, dmax))`.
pub fn cancellation_sum(d: usize, dmax: usize, c: impl Fn(usize) -> i64) -> Result<i64> {
    let mut acc = 0i64;
    for bd in enumerate_sequences(d) {
        acc = add(acc, mul(bd.sign(), c(bd.d0().min(dmax)))?)?;
    }
    Ok(acc)
}

/// Cancellation sums for `trials` random functions `c` drawn from `seed`.
pub fn random_cancellation(d: usize, dmax: usize, seed: u64, trials: usize) -> Result<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let values: Vec<i64> = (0..=dmax).map(|_| rng.gen_range(-1000..=1000)).collect();
            cancellation_sum(d, dmax, |k| values[k])
        })
        .collect()
}

/// Abstract three-point tables `A_0..A_D` and two-point tables `T_1..T_D`
/// over a basis of size `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GWTables {
    pub n: usize,
    pub max_degree: usize,
    /// `three_point[d][(u * n + v) * n + k]`.
    three_point: Vec<Vec<i64>>,
    /// `two_point[d - 1][k * n + k']`.
    two_point: Vec<Vec<i64>>,
}

impl GWTables {
    pub fn new(n: usize, three_point: Vec<Vec<i64>>, two_point: Vec<Vec<i64>>) -> Result<Self> {
        if n == 0 || three_point.is_empty() || two_point.len() + 1 != three_point.len() {
            return Err(Error::Config("inconsistent table degrees".into()));
        }
        if three_point.iter().any(|a| a.len() != n * n * n)
            || two_point.iter().any(|t| t.len() != n * n)
        {
            return Err(Error::Config("inconsistent table dimensions".into()));
        }
        Ok(GWTables {
            n,
            max_degree: two_point.len(),
            three_point,
            two_point,
        })
    }

    /// Uniform entries in `lo..=hi`.
    pub fn random(n: usize, max_degree: usize, seed: u64, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Config(format!("empty value range {lo}..={hi}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = |len: usize| (0..len).map(|_| rng.gen_range(lo..=hi)).collect::<Vec<_>>();
        let three = (0..=max_degree).map(|_| draw(n * n * n)).collect();
        let two = (0..max_degree).map(|_| draw(n * n)).collect();
        Self::new(n, three, two)
    }

    /// Tables whose terms depend only on `min(d_0, dmax)`: the three-point
    /// part is frozen above `dmax` and every two-point table is the identity,
    /// so chain terms do not see `r` either.
    pub fn degenerate(n: usize, max_degree: usize, dmax: usize, seed: u64) -> Result<Self> {
        let base = Self::random(n, max_degree.min(dmax), seed, -3, 3)?;
        let three = (0..=max_degree)
            .map(|d| base.three_point[d.min(dmax)].clone())
            .collect();
        let mut id = vec![0i64; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        Self::new(n, three, vec![id; max_degree])
    }

    pub fn a(&self, d: usize, u: usize, v: usize, k: usize) -> i64 {
        self.three_point[d][(u * self.n + v) * self.n + k]
    }

    pub fn t(&self, d: usize, k: usize, k2: usize) -> i64 {
        self.two_point[d - 1][k * self.n + k2]
    }

    fn check(&self, u: usize, v: usize, w: usize, d: usize) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::DegreeOutOfRange(d, self.max_degree));
        }
        for i in [u, v, w] {
            if i >= self.n {
                return Err(Error::IndexOutOfRange { index: i, rank: self.n });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceTerm {
    pub sequence: DegreeSequence,
    pub sign: i64,
    /// Unsigned contribution; the total adds `sign * term`.
    pub term: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantReport {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub d: usize,
    pub terms: Vec<SequenceTerm>,
    pub total: i64,
}

/// Brute-force nested sum over every sequence and every tuple of
/// intermediate basis indices.
pub fn assemble_direct(t: &GWTables, u: usize, v: usize, w: usize, d: usize) -> Result<ConstantReport> {
    t.check(u, v, w, d)?;
    let n = t.n;
    let mut terms = Vec::new();
    let mut total = 0i64;
    for bd in enumerate_sequences(d) {
        let e = bd.entries();
        let r = bd.r();
        let mut kappa = vec![0usize; r];
        let mut term = 0i64;
        loop {
            let first = if r == 0 { w } else { kappa[0] };
            let mut prod = t.a(e[0], u, v, first);
            for i in 0..r {
                let next = if i + 1 < r { kappa[i + 1] } else { w };
                prod = mul(prod, t.t(e[i + 1], kappa[i], next))?;
            }
            term = add(term, prod)?;
            // odometer over basis^r
            let mut pos = 0;
            while pos < r {
                kappa[pos] += 1;
                if kappa[pos] < n {
                    break;
                }
                kappa[pos] = 0;
                pos += 1;
            }
            if pos == r {
                break;
            }
        }
        total = add(total, mul(bd.sign(), term)?)?;
        terms.push(SequenceTerm {
            sign: bd.sign(),
            sequence: bd,
            term,
        });
    }
    Ok(ConstantReport { u, v, w, d, terms, total })
}

fn matmul(n: usize, a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = add(out[i * n + j], mul(x, b[k * n + j])?)?;
            }
        }
    }
    Ok(out)
}

/// The same constant via `S_0 = I`, `S_m = -sum_j T_j S_{m-j}`, which sums
/// all signed chains of total degree `m` at once:
/// `N = sum_{d_0} A_{d_0}[u][v][.] S_{d - d_0}` evaluated at `w`.
pub fn assemble_matrix(t: &GWTables, u: usize, v: usize, w: usize, d: usize) -> Result<i64> {
    t.check(u, v, w, d)?;
    let n = t.n;
    let mut s: Vec<Vec<i64>> = Vec::with_capacity(d + 1);
    let mut id = vec![0i64; n * n];
    for i in 0..n {
        id[i * n + i] = 1;
    }
    s.push(id);
    for m in 1..=d {
        let mut acc = vec![0i64; n * n];
        for j in 1..=m {
            let p = matmul(n, &t.two_point[j - 1], &s[m - j])?;
            for (x, y) in acc.iter_mut().zip(p) {
                *x = add(*x, -y)?;
            }
        }
        s.push(acc);
    }
    let mut total = 0i64;
    for d0 in 0..=d {
        let sm = &s[d - d0];
        for k in 0..n {
            total = add(total, mul(t.a(d0, u, v, k), sm[k * n + w])?)?;
        }
    }
    Ok(total)
}

/// Unsigned chain term for one sequence, by the vector recursion
/// `E_bd = E_bd' T_{d_r}` starting from `E_(d_0) = A_{d_0}[u][v][.]`.
pub fn chain_euler(t: &GWTables, bd: &DegreeSequence, u: usize, v: usize, w: usize) -> Result<i64> {
    t.check(u, v, w, bd.total())?;
    let n = t.n;
    let e = bd.entries();
    let mut vec: Vec<i64> = (0..n).map(|k| t.a(e[0], u, v, k)).collect();
    for &di in &e[1..] {
        let mut next = vec![0i64; n];
        for (k, &x) in vec.iter().enumerate() {
            for (k2, slot) in next.iter_mut().enumerate() {
                *slot = add(*slot, mul(x, t.t(di, k, k2))?)?;
            }
        }
        vec = next;
    }
    Ok(vec[w])
}

/// Outcome of comparing the three assembly routes on one table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub compared: usize,
    pub mismatches: usize,
    /// `(u, v, w, d, direct, matrix, chain)` of the first disagreement.
    pub first_mismatch: Option<(usize, usize, usize, usize, i64, i64, i64)>,
}

/// Compares all routes over every `(u, v, w, d)` of the table.
pub fn check_oracles(t: &GWTables) -> Result<OracleCheck> {
    let mut out = OracleCheck {
        compared: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    for d in 0..=t.max_degree {
        let seqs = enumerate_sequences(d);
        for u in 0..t.n {
            for v in 0..t.n {
                for w in 0..t.n {
                    let direct = assemble_direct(t, u, v, w, d)?.total;
                    let matrix = assemble_matrix(t, u, v, w, d)?;
                    let mut chain = 0i64;
                    for bd in &seqs {
                        chain = add(chain, mul(bd.sign(), chain_euler(t, bd, u, v, w)?)?)?;
                    }
                    out.compared += 1;
                    if direct != matrix || direct != chain {
                        out.mismatches += 1;
                        out.first_mismatch.get_or_insert((u, v, w, d, direct, matrix, chain));
                    }
                }
            }
        }
    }
    Ok(out)
}
