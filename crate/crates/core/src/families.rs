//! Closed-form Ehrhart polynomials for the polytope families under study, a
//! brute-force lattice-point enumerator to validate them against, and the
//! parameter searches built on top (counterexample dilations, conjecture
//! scans).
//!
//! Geometry appears only inside [`lattice_count`]; everything else is pure
//! polynomial arithmetic on the closed forms.

use crate::error::{Error, Result};
use crate::magic;
use crate::poly::{binomial_poly, int_binom, rat_int, Polynomial, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A parameterized polytope family, or a generic polynomial standing in for
/// an Ehrhart polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// conv(e_1, ..., e_{d+1}): Ehrhart polynomial C(x+d, d).
    StandardSimplex { d: usize },
    /// conv(e_1, ..., e_d, -q(e_1+...+e_d)) with h* = (1, q, ..., q).
    SpikedSimplex { q: u64, d: usize },
    /// Base polytope of the minimal matroid T_{k,n}.
    MinimalMatroid { k: usize, n: usize },
    /// Edge polytope of the complete multipartite graph with these part sizes.
    CompleteMultipartite { parts: Vec<u64> },
    /// Slice of the unit cube [0,1]^n at coordinate sum k.
    Hypersimplex { k: usize, n: usize },
    /// conv(+-e_1, ..., +-e_d).
    CrossPolytope { d: usize },
    /// conv(e_1, ..., e_d, -(e_1+...+e_d)): the q = 1 spiked simplex.
    StandardReflexiveSimplex { d: usize },
    /// Any nonzero polynomial, treated as given.
    Generic { poly: Polynomial },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        match self {
            FamilySpec::StandardSimplex { d }
            | FamilySpec::CrossPolytope { d }
            | FamilySpec::StandardReflexiveSimplex { d } => {
                if *d < 1 {
                    return bad(format!("d = {d} must be >= 1"));
                }
            }
            FamilySpec::SpikedSimplex { q, d } => {
                if *d < 1 || *q < 1 {
                    return bad(format!("need q >= 1 and d >= 1, got q = {q}, d = {d}"));
                }
            }
            FamilySpec::MinimalMatroid { k, n } => {
                if *k < 1 || *n < k + 1 {
                    return bad(format!("need 1 <= k < n, got k = {k}, n = {n}"));
                }
            }
            FamilySpec::CompleteMultipartite { parts } => {
                if parts.len() < 2 {
                    return bad("need at least 2 parts".into());
                }
                if parts.iter().any(|&q| q < 1) {
                    return bad(format!("part sizes must be >= 1, got {parts:?}"));
                }
            }
            FamilySpec::Hypersimplex { k, n } => {
                if *k < 1 || k > n {
                    return bad(format!("need 1 <= k <= n, got k = {k}, n = {n}"));
                }
            }
            FamilySpec::Generic { poly } => {
                if poly.is_zero() {
                    return bad("generic polynomial must be nonzero".into());
                }
            }
        }
        Ok(())
    }

    /// Stable human-readable identifier used in reports and CLI echoes.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::StandardSimplex { d } => format!("simplex(d={d})"),
            FamilySpec::SpikedSimplex { q, d } => format!("spiked(q={q},d={d})"),
            FamilySpec::MinimalMatroid { k, n } => format!("minimal-matroid(k={k},n={n})"),
            FamilySpec::CompleteMultipartite { parts } => {
                let qs: Vec<String> = parts.iter().map(|q| q.to_string()).collect();
                format!("multipartite(q={})", qs.join(","))
            }
            FamilySpec::Hypersimplex { k, n } => format!("hypersimplex(k={k},n={n})"),
            FamilySpec::CrossPolytope { d } => format!("cross(d={d})"),
            FamilySpec::StandardReflexiveSimplex { d } => format!("reflexive-simplex(d={d})"),
            FamilySpec::Generic { poly } => format!("generic({poly})"),
        }
    }
}

/// The Ehrhart polynomial of the family member, by its closed form.
pub fn ehrhart(spec: &FamilySpec) -> Result<Polynomial> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::StandardSimplex { d } => binomial_poly(*d as i64, *d),
        FamilySpec::SpikedSimplex { q, d } => spiked_ehrhart(*q, *d),
        FamilySpec::StandardReflexiveSimplex { d } => spiked_ehrhart(1, *d),
        FamilySpec::MinimalMatroid { k, n } => {
            // D_{k,n}(x) = C(x+n-k, n-k)/C(n-1, k-1)
            //              * sum_{j<k} C(n-k-1+j, j) C(x+j, j)
            let mut sum = Polynomial::zero();
            for j in 0..*k {
                let c = Rat::from_integer(int_binom((n - k - 1 + j) as u64, j as u64));
                sum = sum.add(&binomial_poly(j as i64, j).scale(&c));
            }
            let pre = Rat::from_integer(int_binom(*n as u64 - 1, *k as u64 - 1)).recip();
            binomial_poly((n - k) as i64, n - k).mul(&sum).scale(&pre)
        }
        FamilySpec::CompleteMultipartite { parts } => {
            let d: u64 = parts.iter().sum();
            let mut acc =
                binomial_poly(d as i64 - 1, d as usize - 1).scale_arg(&rat_int(2));
            for &qk in parts {
                for i in 1..=qk {
                    for j in i..=qk {
                        let t = binomial_poly(j as i64 - i as i64 - 1, (j - i) as usize)
                            .mul(&binomial_poly(d as i64 - j as i64 - 1, (d - j) as usize));
                        acc = acc.sub(&t);
                    }
                }
            }
            acc
        }
        FamilySpec::Hypersimplex { k, n } => {
            let mut acc = Polynomial::zero();
            for j in 0..*k {
                let c = Rat::from_integer(int_binom(*n as u64, j as u64));
                let t = binomial_poly((n - 1 - j) as i64, n - 1)
                    .scale_arg(&rat_int((k - j) as i64))
                    .scale(&c);
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
        FamilySpec::CrossPolytope { d } => {
            let mut acc = Polynomial::zero();
            for i in 0..=*d {
                let c = Rat::from_integer(
                    int_binom(*d as u64, i as u64) * BigInt::from(2).pow(i as u32),
                );
                acc = acc.add(&binomial_poly(0, i).scale(&c));
            }
            acc
        }
        FamilySpec::Generic { poly } => poly.clone(),
    })
}

fn spiked_ehrhart(q: u64, d: usize) -> Polynomial {
    let mut acc = binomial_poly(d as i64, d);
    let qr = rat_int(q as i64);
    for i in 1..=d {
        acc = acc.add(&binomial_poly((d - i) as i64, d).scale(&qr));
    }
    acc
}

/// Ehrhart polynomial of the k-fold dilate: E_{kP}(x) = E_P(kx).
pub fn ehrhart_dilated(spec: &FamilySpec, k: u64) -> Result<Polynomial> {
    if k < 1 {
        return Err(Error::InvalidParameters("dilation must be >= 1".into()));
    }
    Ok(ehrhart(spec)?.scale_arg(&rat_int(k as i64)))
}

/// An exact lattice-point count |n * (dilation * P) ∩ Z^D| obtained by
/// direct enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePointCount {
    pub spec: FamilySpec,
    pub dilation: u64,
    pub n: u64,
    pub count: BigInt,
}

const ENUMERATION_GUARD: u128 = 10_000_000;

fn guard(cells: u128, label: &str) -> Result<()> {
    if cells > ENUMERATION_GUARD {
        return Err(Error::TooLarge(format!(
            "{label}: ~{cells} candidate points exceeds the {ENUMERATION_GUARD} guard"
        )));
    }
    Ok(())
}

/// Count lattice points of the (dilation * n)-th dilate by brute force, in
/// the lattice each family naturally lives in.
pub fn lattice_count(spec: &FamilySpec, dilation: u64, n: u64) -> Result<LatticePointCount> {
    spec.validate()?;
    if dilation < 1 || n < 1 {
        return Err(Error::InvalidParameters(
            "dilation and evaluation point must be >= 1".into(),
        ));
    }
    let m = (dilation * n) as i64;
    let label = spec.label();
    let count = match spec {
        FamilySpec::Generic { .. } => return Err(Error::UnsupportedGeneric),
        FamilySpec::StandardSimplex { d } => {
            // points of m*Delta_d in the affine lattice sum x_i = m of Z^{d+1}
            guard((m as u128 + 1).saturating_pow(*d as u32 + 1), &label)?;
            count_capped_sum(*d + 1, m, m)
        }
        FamilySpec::SpikedSimplex { q, d } => {
            guard(
                ((*q as u128 + 1) * m as u128 + 1).saturating_pow(*d as u32),
                &label,
            )?;
            count_spiked(*q as i64, *d, m)
        }
        FamilySpec::StandardReflexiveSimplex { d } => {
            guard((2 * m as u128 + 1).saturating_pow(*d as u32), &label)?;
            count_spiked(1, *d, m)
        }
        FamilySpec::MinimalMatroid { k, n: nn } => {
            guard((m as u128 + 1).saturating_pow(*nn as u32), &label)?;
            count_minimal_matroid(*k, *nn, m)
        }
        FamilySpec::CompleteMultipartite { parts } => {
            let d: u64 = parts.iter().sum();
            guard((m as u128 + 1).saturating_pow(d as u32), &label)?;
            count_multipartite(parts, m)
        }
        FamilySpec::Hypersimplex { k, n: nn } => {
            guard((m as u128 + 1).saturating_pow(*nn as u32), &label)?;
            count_capped_sum(*nn, *k as i64 * m, m)
        }
        FamilySpec::CrossPolytope { d } => {
            guard((2 * m as u128 + 1).saturating_pow(*d as u32), &label)?;
            count_cross(*d, m)
        }
    };
    Ok(LatticePointCount {
        spec: spec.clone(),
        dilation,
        n,
        count,
    })
}

/// Points of { x in [0, cap]^coords : sum x_i = total }.
fn count_capped_sum(coords: usize, total: i64, cap: i64) -> BigInt {
    if total < 0 {
        return BigInt::zero();
    }
    if coords == 0 {
        return if total == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let mut acc = BigInt::zero();
    for v in 0..=cap.min(total) {
        acc += count_capped_sum(coords - 1, total - v, cap);
    }
    acc
}

/// Points of { |x_1| + ... + |x_d| <= budget }.
fn count_cross(d: usize, budget: i64) -> BigInt {
    if d == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for v in -budget..=budget {
        acc += count_cross(d - 1, budget - v.abs());
    }
    acc
}

/// Points of the m-th dilate of conv(e_1, ..., e_d, -q * (e_1+...+e_d)).
///
/// Solving the barycentric system: x lies inside iff s = sum x_i <= m and
/// (1 + qd) x_i >= -q (m - s) for every i, so only the running sum and
/// minimum coordinate are needed at the leaf.
fn count_spiked(q: i64, d: usize, m: i64) -> BigInt {
    fn rec(left: usize, q: i64, d: i64, m: i64, s: i64, min_x: i64) -> BigInt {
        if left == 0 {
            let ok = s <= m && (1 + q * d) * min_x >= -q * (m - s);
            return if ok { BigInt::one() } else { BigInt::zero() };
        }
        let mut acc = BigInt::zero();
        for v in -q * m..=m {
            acc += rec(left - 1, q, d, m, s + v, min_x.min(v));
        }
        acc
    }
    rec(d, q, d as i64, m, 0, i64::MAX)
}

/// Points of the m-th dilate of B(T_{k,n}): x in [0, m]^n, sum x_i = k m,
/// and the coordinates outside the distinguished basis sum to at most m.
fn count_minimal_matroid(k: usize, n: usize, m: i64) -> BigInt {
    fn rec(head: usize, tail: usize, total: i64, cap: i64, tail_budget: i64) -> BigInt {
        if total < 0 {
            return BigInt::zero();
        }
        if head > 0 {
            let mut acc = BigInt::zero();
            for v in 0..=cap.min(total) {
                acc += rec(head - 1, tail, total - v, cap, tail_budget);
            }
            return acc;
        }
        if tail > 0 {
            let mut acc = BigInt::zero();
            for v in 0..=cap.min(total).min(tail_budget) {
                acc += rec(0, tail - 1, total - v, cap, tail_budget - v);
            }
            return acc;
        }
        if total == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }
    rec(k, n - k, k as i64 * m, m, m)
}

/// Points of the m-th dilate of the edge polytope of the complete
/// multipartite graph: x >= 0, sum x = 2m, and each part sums to at most m.
fn count_multipartite(parts: &[u64], m: i64) -> BigInt {
    fn rec(parts: &[u64], pi: usize, ci: u64, part_budget: i64, total: i64, m: i64) -> BigInt {
        if total < 0 {
            return BigInt::zero();
        }
        if pi == parts.len() {
            return if total == 0 { BigInt::one() } else { BigInt::zero() };
        }
        if ci == parts[pi] {
            return rec(parts, pi + 1, 0, m, total, m);
        }
        let mut acc = BigInt::zero();
        for v in 0..=part_budget.min(total) {
            acc += rec(parts, pi, ci + 1, part_budget - v, total - v, m);
        }
        acc
    }
    rec(parts, 0, 0, m, 2 * m, m)
}

/// The standard formula-vs-enumeration validation sweep: every family at
/// parameters small enough that dilations and evaluation points up to 3
/// stay within the enumeration guard.
pub fn verification_sweep() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for d in 1..=4 {
        specs.push(FamilySpec::StandardSimplex { d });
    }
    for q in 1..=3u64 {
        for d in 1..=3usize {
            specs.push(FamilySpec::SpikedSimplex { q, d });
        }
    }
    for (k, n) in [(1usize, 4usize), (2, 4), (2, 5)] {
        specs.push(FamilySpec::MinimalMatroid { k, n });
    }
    for parts in [vec![1u64, 1, 1], vec![2, 2], vec![1, 2, 3]] {
        specs.push(FamilySpec::CompleteMultipartite { parts });
    }
    for (k, n) in [(2usize, 4usize), (2, 5), (3, 6)] {
        specs.push(FamilySpec::Hypersimplex { k, n });
    }
    for d in 1..=3 {
        specs.push(FamilySpec::CrossPolytope { d });
        specs.push(FamilySpec::StandardReflexiveSimplex { d });
    }
    specs
}

/// Smallest q >= 1 for which the k-fold dilate of the spiked simplex
/// P_{q,d} fails magic positivity. Guaranteed finite for d >= 3: the
/// relevant basis coefficient eventually turns negative as q grows.
pub fn counterexample_q(d: usize, k: u64) -> Result<u64> {
    if d < 3 {
        return Err(Error::InvalidParameters(format!(
            "counterexamples require d >= 3, got d = {d}"
        )));
    }
    if k < 1 {
        return Err(Error::InvalidParameters("dilation must be >= 1".into()));
    }
    let mut q = 1;
    loop {
        let f = ehrhart_dilated(&FamilySpec::SpikedSimplex { q, d }, k)?;
        if !magic::is_magic_positive(&f)? {
            return Ok(q);
        }
        q += 1;
    }
}

/// Which open question a scan addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureId {
    /// m-index(B(T_{k,n})) = n - k for 1 <= k <= floor(n/2).
    MinimalMatroidMIndex,
    /// m-index of a complete multipartite edge polytope is one of
    /// max(q_i), floor(sum/2), ceil(sum/2).
    MultipartiteMIndex,
    /// m-index(Delta_{floor(n/2)-k, n}) = k + 2 for 0 <= k <= floor(n/2)-2.
    HypersimplexMIndex,
}

/// One parameter tuple of a conjecture scan: the computed m-index, the
/// conjectured candidate value(s), and whether they agree. Reports only;
/// a mismatch is a witness to look at, never a refutation claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureEntry {
    pub label: String,
    pub computed: Option<BigInt>,
    pub conjectured: Vec<BigInt>,
    pub matched: Option<bool>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureReport {
    pub which: ConjectureId,
    pub entries: Vec<ConjectureEntry>,
}

fn scan_entry(spec: &FamilySpec, conjectured: Vec<BigInt>) -> ConjectureEntry {
    let label = spec.label();
    let outcome = ehrhart(spec).and_then(|f| magic::m_index(&f));
    match outcome {
        Ok(r) => match r.value {
            Some(v) => {
                let matched = conjectured.contains(&v);
                ConjectureEntry {
                    label,
                    computed: Some(v),
                    conjectured,
                    matched: Some(matched),
                    note: None,
                }
            }
            None => ConjectureEntry {
                label,
                computed: None,
                conjectured,
                matched: None,
                note: Some(format!(
                    "skipped: no magic-positive dilation found up to cap {}",
                    r.search_bound_used
                )),
            },
        },
        Err(e) => ConjectureEntry {
            label,
            computed: None,
            conjectured,
            matched: None,
            note: Some(format!("skipped: {e}")),
        },
    }
}

/// Scan m-index(B(T_{k,n})) against the conjectured value n - k.
pub fn scan_minimal_matroid(n_lo: usize, n_hi: usize) -> ConjectureReport {
    let mut entries = Vec::new();
    for n in n_lo.max(2)..=n_hi {
        for k in 1..=n / 2 {
            let spec = FamilySpec::MinimalMatroid { k, n };
            entries.push(scan_entry(&spec, vec![BigInt::from(n - k)]));
        }
    }
    ConjectureReport {
        which: ConjectureId::MinimalMatroidMIndex,
        entries,
    }
}

/// Scan multipartite m-indices against the candidate set
/// { max q_i, floor(d/2), ceil(d/2) } where d = sum q_i.
pub fn scan_multipartite(types: &[Vec<u64>]) -> ConjectureReport {
    let mut entries = Vec::new();
    for parts in types {
        let spec = FamilySpec::CompleteMultipartite {
            parts: parts.clone(),
        };
        let total: u64 = parts.iter().sum();
        let max = parts.iter().copied().max().unwrap_or(0);
        let mut cands = vec![
            BigInt::from(max),
            BigInt::from(total / 2),
            BigInt::from(total.div_ceil(2)),
        ];
        cands.dedup();
        entries.push(scan_entry(&spec, cands));
    }
    ConjectureReport {
        which: ConjectureId::MultipartiteMIndex,
        entries,
    }
}

/// Scan m-index(Delta_{floor(n/2)-k, n}) against the conjectured k + 2.
pub fn scan_hypersimplex(n_lo: usize, n_hi: usize) -> ConjectureReport {
    let mut entries = Vec::new();
    for n in n_lo.max(4)..=n_hi {
        let half = n / 2;
        for k in 0..=half.saturating_sub(2) {
            let spec = FamilySpec::Hypersimplex { k: half - k, n };
            entries.push(scan_entry(&spec, vec![BigInt::from(k + 2)]));
        }
    }
    ConjectureReport {
        which: ConjectureId::HypersimplexMIndex,
        entries,
    }
}
