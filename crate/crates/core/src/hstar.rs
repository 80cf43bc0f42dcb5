//! Conversions between the monomial basis, the binomial basis
//! C(x+d-i, d) whose coefficients form the h*-vector, and the magic basis;
//! plus exact real-rootedness certification of numerator polynomials.
//!
//! The three encodings of the same polynomial are tied together by
//!
//! ```text
//! sum_{n>=0} f(n) t^n = (h_0 + h_1 t + ... + h_d t^d) / (1-t)^(d+1),
//! f(x) = sum_i h_i C(x+d-i, d).
//! ```

use crate::error::{Error, Result};
use crate::magic::{self, MagicExpansion};
use crate::poly::{binomial_poly, rat_int, Polynomial, Rat};
use crate::sturm;
use num_traits::{Signed, Zero};

/// Where an h*-vector came from, which decides whether lattice-polytope
/// integrality warnings apply to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Candidate h*-vector of a lattice polytope: entries are expected to be
    /// non-negative integers with h_0 = 1 (warned about, never enforced).
    LatticeCandidate,
    /// Arbitrary numerator vector; no integrality expectations.
    General,
}

/// Coefficients (h_0, ..., h_d) of the numerator of the generating function,
/// for a fixed ambient degree d (which may exceed the polynomial degree when
/// trailing entries make the leading coefficient sum to zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HStarVector {
    d: usize,
    h: Vec<Rat>,
    provenance: Provenance,
}

impl HStarVector {
    /// Build from entries (length d+1) with the given provenance.
    pub fn new(h: Vec<Rat>, provenance: Provenance) -> Self {
        assert!(!h.is_empty(), "an h*-vector needs d+1 >= 1 entries");
        HStarVector {
            d: h.len() - 1,
            h,
            provenance,
        }
    }

    /// Convenience constructor from integers, lattice-candidate provenance.
    pub fn from_ints(h: &[i64]) -> Self {
        HStarVector::new(h.iter().map(|&v| rat_int(v)).collect(), Provenance::LatticeCandidate)
    }

    /// Ambient degree d.
    pub fn ambient_degree(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[Rat] {
        &self.h
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// The numerator as a polynomial h(t).
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(self.h.clone())
    }

    /// Lattice-polytope sanity warnings: non-integer entries, negative
    /// entries, h_0 != 1. Empty for `Provenance::General`.
    pub fn integrality_warnings(&self) -> Vec<String> {
        if self.provenance != Provenance::LatticeCandidate {
            return Vec::new();
        }
        let mut w = Vec::new();
        for (i, v) in self.h.iter().enumerate() {
            if !v.is_integer() {
                w.push(format!("h*[{i}] = {v} is not an integer"));
            } else if v.is_negative() {
                w.push(format!("h*[{i}] = {v} is negative"));
            }
        }
        if self.h[0] != Rat::from_integer(1.into()) {
            w.push(format!("h*[0] = {} (a lattice polytope has h*[0] = 1)", self.h[0]));
        }
        w
    }
}

/// f(x) = sum_i h_i C(x + d - i, d).
pub fn ehrhart_from_hstar(h: &HStarVector) -> Polynomial {
    let d = h.d;
    let mut acc = Polynomial::zero();
    for (i, hi) in h.h.iter().enumerate() {
        acc = acc.add(&binomial_poly((d - i) as i64, d).scale(hi));
    }
    acc
}

/// Inversion with an explicit ambient degree d >= deg f:
/// h_i = sum_{j=0}^{i} (-1)^j C(d+1, j) f(i-j).
pub fn hstar_with_ambient(f: &Polynomial, d: usize, provenance: Provenance) -> HStarVector {
    let mut values = Vec::with_capacity(d + 1);
    for n in 0..=d {
        values.push(f.eval(&rat_int(n as i64)));
    }
    let binom: Vec<Rat> = (0..=d)
        .map(|j| Rat::from_integer(crate::poly::int_binom(d as u64 + 1, j as u64)))
        .collect();
    let h = (0..=d)
        .map(|i| {
            let mut acc = Rat::zero();
            for j in 0..=i {
                let term = &binom[j] * &values[i - j];
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect();
    HStarVector::new(h, provenance)
}

/// h*-vector of f in ambient degree d = deg f.
///
/// Round-trip contract: `ehrhart_from_hstar(hstar_from_ehrhart(f)) == f`.
/// Entries are rationals; consult [`HStarVector::integrality_warnings`] for
/// the lattice-polytope plausibility checks.
pub fn hstar_from_ehrhart(f: &Polynomial) -> Result<HStarVector> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(hstar_with_ambient(f, d, Provenance::LatticeCandidate))
}

/// Numerator vector of the generating function of
/// sum_j c_j n^j (n+1)^(d-j), in the expansion's ambient degree.
pub fn numerator_from_magic(e: &MagicExpansion) -> HStarVector {
    let f = magic::from_magic(e);
    hstar_with_ambient(&f, e.basis_degree(), Provenance::General)
}

/// h_i = h_{d-i} for all i, and h_d != 0 (the degree-d condition in Hibi's
/// palindromicity criterion for reflexivity).
pub fn is_palindromic(h: &HStarVector) -> bool {
    if h.h[h.d].is_zero() {
        return false;
    }
    (0..=h.d / 2).all(|i| h.h[i] == h.h[h.d - i])
}

/// Reflexivity test on the magic side: a_j = a_{d-j} for the degree-(deg f)
/// expansion of f.
pub fn reflexive_magic_check(f: &Polynomial) -> Result<bool> {
    let e = magic::to_magic(f, &Rat::from_integer(1.into()))?;
    let a = e.coeffs();
    let d = e.basis_degree();
    Ok((0..=d / 2).all(|i| a[i] == a[d - i]))
}

/// Exact real-rootedness decision.
///
/// f is real-rooted iff its squarefree part has as many distinct real roots
/// (counted by a Sturm chain over the whole line) as its degree. Constants
/// are vacuously real-rooted; the zero polynomial is rejected.
pub fn is_real_rooted(f: &Polynomial) -> Result<bool> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(true);
    }
    let s = f.squarefree_part();
    let sd = s.degree().unwrap_or(0);
    Ok(sturm::count_distinct_real_roots(&s) == sd)
}
