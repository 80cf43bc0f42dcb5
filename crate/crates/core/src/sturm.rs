//! Sturm chains for exact real-root counting.
//!
//! All sign decisions are made on exact rationals; no floating point enters
//! any code path here.

use crate::poly::{Polynomial, Rat};
use num_traits::{Signed, Zero};

/// Signed remainder chain p0 = f, p1 = f', p_{i+1} = -(p_{i-1} mod p_i).
///
/// Each member is rescaled by a positive rational (its |leading coefficient|)
/// to keep coefficient growth in check; positive scaling preserves all sign
/// information the chain is queried for.
pub(crate) fn sturm_chain(f: &Polynomial) -> Vec<Polynomial> {
    let mut chain = Vec::new();
    if f.is_zero() {
        return chain;
    }
    chain.push(f.clone());
    let d = f.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        let scale = r.leading_coeff().abs().recip();
        chain.push(r.neg().scale(&scale));
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn variations_at(chain: &[Polynomial], x: &Rat) -> usize {
    variations(chain.iter().map(|p| sign(&p.eval(x))))
}

pub(crate) fn variations_at_pos_inf(chain: &[Polynomial]) -> usize {
    variations(chain.iter().map(|p| sign(&p.leading_coeff())))
}

pub(crate) fn variations_at_neg_inf(chain: &[Polynomial]) -> usize {
    variations(chain.iter().map(|p| {
        let s = sign(&p.leading_coeff());
        if p.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }))
}

/// Number of distinct real roots of `f` on the whole line.
///
/// Valid for non-squarefree input as well: the chain terminates in
/// gcd(f, f') and the classical argument still counts distinct roots.
pub(crate) fn count_distinct_real_roots(f: &Polynomial) -> usize {
    match f.degree() {
        None | Some(0) => 0,
        _ => {
            let chain = sturm_chain(f);
            variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain)
        }
    }
}

/// Number of distinct real roots of `f` in the half-open interval (a, b].
///
/// Requires f(a) != 0 and f(b) != 0.
pub(crate) fn count_roots_in(chain: &[Polynomial], a: &Rat, b: &Rat) -> usize {
    debug_assert!(!chain[0].eval(a).is_zero());
    debug_assert!(!chain[0].eval(b).is_zero());
    variations_at(chain, a) - variations_at(chain, b)
}

/// Cauchy root bound B = 1 + max_{j<d} |c_j| / |c_d|.
///
/// No root of `f` (real or complex) has absolute value >= B.
pub(crate) fn cauchy_bound(f: &Polynomial) -> Rat {
    let d = f.degree().expect("cauchy_bound of zero polynomial");
    let lead = f.leading_coeff().abs();
    let mut m = Rat::zero();
    for c in &f.coeffs()[..d] {
        let r = c.abs() / &lead;
        if r > m {
            m = r;
        }
    }
    Rat::from_integer(1.into()) + m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    #[test]
    fn counts_distinct_roots() {
        // (x-1)(x+2)(x-5)
        let f = Polynomial::from_ints(&[-1, 1])
            .neg()
            .mul(&Polynomial::from_ints(&[2, 1]))
            .mul(&Polynomial::from_ints(&[-5, 1]));
        assert_eq!(count_distinct_real_roots(&f), 3);
        // x^2 + 1
        assert_eq!(count_distinct_real_roots(&Polynomial::from_ints(&[1, 0, 1])), 0);
        // (x-1)^2 has one distinct root even without squarefree reduction
        let g = Polynomial::from_ints(&[-1, 1]).pow(2);
        assert_eq!(count_distinct_real_roots(&g), 1);
    }

    #[test]
    fn interval_counts() {
        // roots at 1 and 3
        let f = Polynomial::from_ints(&[3, -4, 1]);
        let chain = sturm_chain(&f);
        assert_eq!(count_roots_in(&chain, &rat_int(0), &rat_int(2)), 1);
        assert_eq!(count_roots_in(&chain, &rat_int(0), &rat_int(4)), 2);
        assert_eq!(count_roots_in(&chain, &rat_int(4), &rat_int(9)), 0);
    }

    #[test]
    fn cauchy_bound_dominates_roots() {
        let f = Polynomial::from_ints(&[3, -4, 1]); // roots 1, 3
        let b = cauchy_bound(&f);
        assert!(b > rat_int(3));
        let chain = sturm_chain(&f);
        assert_eq!(count_roots_in(&chain, &(-&b), &b), 2);
    }
}
