//! Expansion in the basis {x^i (x+1)^(d-i)}, the magic-positivity predicate,
//! and the searches built on it.
//!
//! For f = sum b_i x^i of degree d, the coefficient of x^i (x+1)^(d-i) in the
//! expansion of f(kx) is
//!
//! ```text
//! g_i(k) = sum_{j=0}^{i} (-1)^(i-j) C(d-j, i-j) b_j k^j,
//! ```
//!
//! the same kind of transform that turns an f-vector into an h-vector. A
//! polynomial is *magic positive* when all g_i(1) >= 0. For f with strictly
//! positive coefficients, magic positivity of f(kx) is monotone in k, which
//! justifies binary search for the least positive integer dilation (the
//! m-index) and bisection for the real threshold.

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Coefficients (a_0, ..., a_d) of a polynomial written as
/// sum a_i x^i (x+1)^(d-i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicExpansion {
    d: usize,
    coeffs: Vec<Rat>,
}

impl MagicExpansion {
    /// Build directly from basis coefficients; `coeffs.len()` must be d+1.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a magic expansion needs d+1 >= 1 coefficients");
        MagicExpansion {
            d: coeffs.len() - 1,
            coeffs,
        }
    }

    /// Basis degree d.
    pub fn basis_degree(&self) -> usize {
        self.d
    }

    /// Coefficient of x^i (x+1)^(d-i).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Pascal triangle rows 0..=n as exact rationals.
fn pascal(n: usize) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![Rat::one(); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

/// Expansion of f(kx) in the degree-d basis, d = deg f.
///
/// Errors with [`Error::ZeroPolynomial`] for f = 0 and [`Error::ZeroDilation`]
/// for k = 0 (which would collapse the degree).
pub fn to_magic(f: &Polynomial, k: &Rat) -> Result<MagicExpansion> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if k.is_zero() {
        return Err(Error::ZeroDilation);
    }
    let binom = pascal(d);
    let mut kpow = vec![Rat::one(); d + 1];
    for j in 1..=d {
        kpow[j] = &kpow[j - 1] * k;
    }
    let coeffs = (0..=d)
        .map(|i| {
            let mut a = Rat::zero();
            for j in 0..=i {
                let term = &binom[d - j][i - j] * &f.coeff(j) * &kpow[j];
                if (i - j) % 2 == 0 {
                    a += term;
                } else {
                    a -= term;
                }
            }
            a
        })
        .collect();
    Ok(MagicExpansion { d, coeffs })
}

/// Reconstruct sum a_i x^i (x+1)^(d-i) by direct polynomial arithmetic.
///
/// This is the independent oracle for [`to_magic`]: the two are inverse to
/// each other only if both are right.
pub fn from_magic(e: &MagicExpansion) -> Polynomial {
    let xp1 = Polynomial::from_ints(&[1, 1]);
    let x = Polynomial::x();
    let mut acc = Polynomial::zero();
    for (i, a) in e.coeffs.iter().enumerate() {
        let basis = x.pow(i as u32).mul(&xp1.pow((e.d - i) as u32));
        acc = acc.add(&basis.scale(a));
    }
    acc
}

/// True iff every coefficient of the degree-(deg f) expansion of f is >= 0.
pub fn is_magic_positive(f: &Polynomial) -> Result<bool> {
    Ok(to_magic(f, &Rat::one())?.is_nonnegative())
}

/// Magic positivity of f(kx), sharing the expansion code path.
pub fn is_magic_positive_at(f: &Polynomial, k: &Rat) -> Result<bool> {
    Ok(to_magic(f, k)?.is_nonnegative())
}

/// The polynomials g_0(k), ..., g_d(k) giving the basis coefficients of
/// f(kx) as functions of the dilation k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdPolynomials {
    d: usize,
    g: Vec<Polynomial>,
}

impl ThresholdPolynomials {
    pub fn basis_degree(&self) -> usize {
        self.d
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.g
    }
}

/// g_i(k) = sum_{j<=i} (-1)^(i-j) C(d-j, i-j) b_j k^j as polynomials in k.
pub fn threshold_polys(f: &Polynomial) -> Result<ThresholdPolynomials> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let binom = pascal(d);
    let g = (0..=d)
        .map(|i| {
            let coeffs = (0..=i)
                .map(|j| {
                    let c = &binom[d - j][i - j] * &f.coeff(j);
                    if (i - j) % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect();
            Polynomial::from_coeffs(coeffs)
        })
        .collect();
    Ok(ThresholdPolynomials { d, g })
}

fn ceil_rat(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}

/// An integer K with g_i(k) > 0 for every i and every k >= K, for f with
/// strictly positive coefficients.
///
/// K is the ceiling of the largest Cauchy root bound among the g_i; each g_i
/// has positive leading coefficient b_i and no root at or beyond its bound.
pub fn search_bound(f: &Polynomial) -> Result<BigInt> {
    let d = f.degree().ok_or(Error::NonPositiveCoefficients)?;
    if !(0..=d).all(|i| f.coeff(i).is_positive()) {
        return Err(Error::NonPositiveCoefficients);
    }
    let polys = threshold_polys(f)?;
    let mut best = Rat::one();
    for g in polys.polys() {
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let lead = g.leading_coeff();
        let mut m = Rat::zero();
        for c in &g.coeffs()[..g.coeffs().len() - 1] {
            let r = c.abs() / &lead;
            if r > m {
                m = r;
            }
        }
        let bound = Rat::one() + m;
        if bound > best {
            best = bound;
        }
    }
    Ok(ceil_rat(&best).max(BigInt::one()))
}

/// Outcome of an m-index search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MIndexResult {
    /// Least positive integer k with f(kx) magic positive, or `None` when the
    /// capped linear scan found nothing.
    pub value: Option<BigInt>,
    /// The proven bound (monotone search) or the scan cap (fallback).
    pub search_bound_used: BigInt,
    /// Whether the positive-coefficient monotonicity argument applied, making
    /// binary search valid.
    pub monotone_search: bool,
}

/// Default cap for the linear-scan fallback on polynomials outside the
/// positive-coefficient hypothesis.
pub const DEFAULT_SCAN_CAP: u64 = 10_000;

/// Least positive integer k such that f(kx) is magic positive.
///
/// With strictly positive coefficients this is a binary search over
/// 1..=[`search_bound`], justified by monotonicity of magic positivity in k.
/// Otherwise a linear scan up to `cap` runs, with no monotonicity claim.
pub fn m_index_with_cap(f: &Polynomial, cap: u64) -> Result<MIndexResult> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let positive = (0..=d).all(|i| f.coeff(i).is_positive());
    if positive {
        let bound = search_bound(f)?;
        let mut lo = BigInt::one();
        let mut hi = bound.clone();
        while lo < hi {
            let mid: BigInt = (&lo + &hi) / 2;
            if is_magic_positive_at(f, &Rat::from_integer(mid.clone()))? {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        debug_assert!(is_magic_positive_at(f, &Rat::from_integer(lo.clone()))?);
        Ok(MIndexResult {
            value: Some(lo),
            search_bound_used: bound,
            monotone_search: true,
        })
    } else {
        let mut found = None;
        for k in 1..=cap {
            if is_magic_positive_at(f, &Rat::from_integer(k.into()))? {
                found = Some(BigInt::from(k));
                break;
            }
        }
        Ok(MIndexResult {
            value: found,
            search_bound_used: BigInt::from(cap),
            monotone_search: false,
        })
    }
}

/// [`m_index_with_cap`] with the default fallback cap.
pub fn m_index(f: &Polynomial) -> Result<MIndexResult> {
    m_index_with_cap(f, DEFAULT_SCAN_CAP)
}

/// Bracket the infimum of { real k > 0 : f(kx) magic positive } to width
/// <= tol, for f with strictly positive coefficients.
///
/// Returns [lo, hi] with hi magic positive and lo either 0 or not magic
/// positive; monotonicity over real dilations makes bisection sound.
pub fn magic_threshold(f: &Polynomial, tol: &Rat) -> Result<(Rat, Rat)> {
    if !tol.is_positive() {
        return Err(Error::NegativeInput("tolerance must be > 0".into()));
    }
    let bound = search_bound(f)?;
    let mut lo = Rat::zero();
    let mut hi = Rat::from_integer(bound);
    let two = Rat::from_integer(2.into());
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if is_magic_positive_at(f, &mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((lo, hi))
}
