//! Deciding whether all complex roots of a polynomial lie on the line
//! Re(z) = -1/2, and the m-index upper bounds that follow.
//!
//! Substituting x = y - 1/2 moves the question to the imaginary axis: f is
//! CL iff q(y) = f(y - 1/2) is (up to one factor y when deg f is odd) an even
//! polynomial r(y^2) whose companion r(u) is real-rooted with every root
//! u_i <= 0. The quantities b_i^2 = -u_i are the squared imaginary parts of
//! the root pairs -1/2 +- b_i i; each satisfies: f_i(kx) is magic positive
//! iff k >= 1/2 + 2 b_i^2. Roots are never floated — only Sturm counts and
//! rational isolating intervals.

use crate::error::{Error, Result};
use crate::poly::{rat, Polynomial, Rat};
use crate::sturm;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Closed rational interval; `lo == hi` means the value is known exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    fn exact(v: Rat) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: &Rat) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

/// Verdict of [`cl_check`] plus the certified root data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CLCertificate {
    /// All complex roots on Re(z) = -1/2.
    pub is_cl: bool,
    /// Degree is odd and the single unpaired root sits at -1/2 (the
    /// a(2x+1)-type factor).
    pub odd_degree_half_root: bool,
    /// Isolating intervals for the b_i^2, with multiplicity; when `is_cl`,
    /// deg f = 2 * squared_parts.len() + (1 if odd_degree_half_root).
    pub squared_parts: Vec<Interval>,
    /// Certified upper bound on max b_i^2 (zero when there are no pairs).
    pub max_b_squared_upper: Rat,
}

impl CLCertificate {
    fn negative() -> Self {
        CLCertificate {
            is_cl: false,
            odd_degree_half_root: false,
            squared_parts: Vec::new(),
            max_b_squared_upper: Rat::zero(),
        }
    }
}

/// Squarefree decomposition by Yun's algorithm: returns monic pairwise
/// coprime squarefree factors with their multiplicities, so that the input
/// equals its leading coefficient times the product of factor^multiplicity.
pub fn squarefree_decomposition(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    let Some(deg) = f.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    let f = f.monic();
    let g = f.gcd(&f.derivative());
    if g.degree() == Some(0) {
        return vec![(f, 1)];
    }
    let mut out = Vec::new();
    let mut c = f.div_rem(&g).0;
    let mut w = f.derivative().div_rem(&g).0.sub(&c.derivative());
    let mut mult = 1;
    while c.degree().unwrap_or(0) > 0 {
        let s = c.gcd(&w);
        c = c.div_rem(&s).0;
        w = w.div_rem(&s).0.sub(&c.derivative());
        if s.degree().unwrap_or(0) > 0 {
            out.push((s, mult));
        }
        mult += 1;
    }
    out
}

/// Disjoint isolating intervals for all real roots of a squarefree `p` in
/// (lo, hi], in increasing order. Endpoints must not be roots. Exact
/// rational roots come back as degenerate intervals.
fn isolate_in(
    p: &Polynomial,
    chain: &[Polynomial],
    lo: &Rat,
    hi: &Rat,
    out: &mut Vec<Interval>,
) {
    let n = sturm::count_roots_in(chain, lo, hi);
    match n {
        0 => {}
        1 => out.push(Interval {
            lo: lo.clone(),
            hi: hi.clone(),
        }),
        _ => {
            let two = rat(2, 1);
            let mid = (lo + hi) / &two;
            if p.eval(&mid).is_zero() {
                // A root landed exactly on the midpoint: record it and carve
                // out a root-free collar so the recursion can skip past it.
                let mut delta = (hi - lo) / rat(4, 1);
                loop {
                    let a = &mid - &delta;
                    let b = &mid + &delta;
                    if !p.eval(&a).is_zero()
                        && !p.eval(&b).is_zero()
                        && sturm::count_roots_in(chain, &a, &b) == 1
                    {
                        isolate_in(p, chain, lo, &a, out);
                        out.push(Interval::exact(mid));
                        isolate_in(p, chain, &b, hi, out);
                        return;
                    }
                    delta /= &two;
                }
            }
            isolate_in(p, chain, lo, &mid, out);
            isolate_in(p, chain, &mid, hi, out);
        }
    }
}

/// Shrink an isolating interval for a simple root of `p` to width <= `width`
/// by sign bisection.
fn refine(p: &Polynomial, iv: Interval, width: &Rat) -> Interval {
    if iv.is_exact() {
        return iv;
    }
    let mut lo = iv.lo;
    let mut hi = iv.hi;
    // lo keeps the same sign throughout: it only ever moves to a midpoint
    // whose sign matches.
    let lo_sign = p.eval(&lo).is_positive();
    let two = rat(2, 1);
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        let v = p.eval(&mid);
        if v.is_zero() {
            return Interval::exact(mid);
        }
        if v.is_positive() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Interval { lo, hi }
}

struct ClData {
    cert: CLCertificate,
    /// (squarefree factor of r(-v), multiplicity, isolating intervals) for
    /// the strictly positive b_i^2 values.
    factors: Vec<(Polynomial, usize, Vec<Interval>)>,
}

/// Isolation width 2^-20 of the reported isolating intervals.
fn default_width() -> Rat {
    rat(1, 1 << 20)
}

fn analyze(f: &Polynomial) -> Result<ClData> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let q = f.translate(&rat(-1, 2));
    let v = q
        .coeffs()
        .iter()
        .take_while(|c| c.is_zero())
        .count();
    // Roots pair off as conjugates, so the multiplicity of the root at
    // y = 0 must match the degree parity.
    if v % 2 != d % 2 {
        return Ok(ClData {
            cert: CLCertificate::negative(),
            factors: Vec::new(),
        });
    }
    let reduced = Polynomial::from_coeffs(q.coeffs()[v..].to_vec());
    if reduced
        .coeffs()
        .iter()
        .skip(1)
        .step_by(2)
        .any(|c| !c.is_zero())
    {
        // q / y^v is not even in y, so some root leaves the imaginary axis.
        return Ok(ClData {
            cert: CLCertificate::negative(),
            factors: Vec::new(),
        });
    }
    // r(u) with q/y^v = r(y^2); substitute u -> -u so roots become b_i^2.
    let r_neg = Polynomial::from_coeffs(
        reduced
            .coeffs()
            .iter()
            .step_by(2)
            .enumerate()
            .map(|(j, c)| if j % 2 == 0 { c.clone() } else { -c })
            .collect(),
    );
    let rdeg = r_neg.degree().unwrap_or(0);
    let mut factors: Vec<(Polynomial, usize, Vec<Interval>)> = Vec::new();
    if rdeg > 0 {
        // CL iff r(-v) has rdeg real roots, all strictly positive
        // (r_neg(0) != 0 by construction).
        let sf = r_neg.squarefree_part();
        let chain = sturm::sturm_chain(&sf);
        let bound = sturm::cauchy_bound(&sf);
        let positive_distinct =
            sturm::count_roots_in(&chain, &Rat::zero(), &bound);
        if positive_distinct != sf.degree().unwrap_or(0) {
            return Ok(ClData {
                cert: CLCertificate::negative(),
                factors: Vec::new(),
            });
        }
        let width = default_width();
        for (factor, mult) in squarefree_decomposition(&r_neg) {
            let fchain = sturm::sturm_chain(&factor);
            let fbound = sturm::cauchy_bound(&factor);
            let mut raw = Vec::new();
            isolate_in(&factor, &fchain, &Rat::zero(), &fbound, &mut raw);
            let refined: Vec<Interval> = raw
                .into_iter()
                .map(|iv| refine(&factor, iv, &width))
                .collect();
            factors.push((factor, mult, refined));
        }
    }
    let odd_degree_half_root = d % 2 == 1;
    let zero_pairs = (v - d % 2) / 2;
    let mut squared_parts = vec![Interval::exact(Rat::zero()); zero_pairs];
    for (_, mult, ivs) in &factors {
        for iv in ivs {
            for _ in 0..*mult {
                squared_parts.push(iv.clone());
            }
        }
    }
    let max_b_squared_upper = squared_parts
        .iter()
        .map(|iv| iv.hi.clone())
        .max()
        .unwrap_or_else(Rat::zero);
    debug_assert_eq!(d, 2 * squared_parts.len() + d % 2);
    Ok(ClData {
        cert: CLCertificate {
            is_cl: true,
            odd_degree_half_root,
            squared_parts,
            max_b_squared_upper,
        },
        factors,
    })
}

/// Decide the CL property and certify the squared imaginary parts.
pub fn cl_check(f: &Polynomial) -> Result<CLCertificate> {
    Ok(analyze(f)?.cert)
}

/// The dilation threshold 1/2 + 2 b^2 of a quadratic with roots
/// -1/2 +- b i.
pub fn quadratic_threshold(b_squared: &Rat) -> Result<Rat> {
    if b_squared.is_negative() {
        return Err(Error::NegativeInput(format!(
            "b^2 = {b_squared} must be >= 0"
        )));
    }
    Ok(rat(1, 2) + rat(2, 1) * b_squared)
}

fn ceil_value(u: &Rat) -> BigInt {
    (rat(1, 2) + rat(2, 1) * u).ceil().to_integer()
}

/// Exact-root pinning: ceiling of 1/2 + 2u at a known root, bumped to the
/// hi side when the value lands exactly on an integer.
fn pinned_exact(u: &Rat) -> BigInt {
    let t = rat(1, 2) + rat(2, 1) * u;
    if t.is_integer() {
        t.to_integer() + 1
    } else {
        t.ceil().to_integer()
    }
}

/// Refine one isolating interval of `p` until ceil(1/2 + 2u) is pinned.
fn pinned_ceiling(p: &Polynomial, iv: &Interval) -> BigInt {
    if iv.is_exact() {
        return pinned_exact(&iv.lo);
    }
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let two = rat(2, 1);
    let lo_positive = p.eval(&lo).is_positive();
    loop {
        let cl = ceil_value(&lo);
        let ch = ceil_value(&hi);
        if cl == ch {
            return cl;
        }
        // If the root sits exactly on a ceiling breakpoint the interval
        // straddles it forever; detect that case and take the hi side.
        let mut m = cl.clone();
        while m < ch {
            let breakpoint = Rat::new(BigInt::from(2) * &m - 1, 4.into());
            if lo < breakpoint && breakpoint < hi && p.eval(&breakpoint).is_zero() {
                return m + 1;
            }
            m += 1;
        }
        let mid = (&lo + &hi) / &two;
        let v = p.eval(&mid);
        if v.is_zero() {
            return pinned_exact(&mid);
        }
        if v.is_positive() == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// The m-index bound ceil(1/2 + 2 max b_i^2) of a CL polynomial, with the
/// ceiling decided exactly from the isolating intervals.
pub fn cl_mindex_bound(f: &Polynomial) -> Result<BigInt> {
    let data = analyze(f)?;
    if !data.cert.is_cl {
        return Err(Error::NotCL);
    }
    let mut best = BigInt::one(); // b = 0 gives ceil(1/2) = 1
    for (factor, _, ivs) in &data.factors {
        for iv in ivs {
            let pinned = pinned_ceiling(factor, iv);
            if pinned > best {
                best = pinned;
            }
        }
    }
    Ok(best)
}

/// ceil(1/2 + 2 d^2 (d - 1/2)^2): the bound depending only on the dimension,
/// valid for any CL polytope via the root-norm bound b <= d(d - 1/2).
pub fn dimension_only_bound(d: u64) -> BigInt {
    let dd = rat(d as i64, 1);
    let t = rat(1, 2) + rat(2, 1) * &dd * &dd * (&dd - rat(1, 2)) * (&dd - rat(1, 2));
    t.ceil().to_integer()
}
