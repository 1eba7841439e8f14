//! Univariate polynomials over the rationals: arithmetic, squarefree
//! decomposition, and Sturm-sequence real root isolation.
//!
//! Exact mode reports rational roots exactly and irrational roots as
//! isolating intervals refined to width 2⁻⁶⁴. Roots are never merged:
//! intervals are shrunk until pairwise disjoint.

use crate::error::{Error, Result};
use crate::scalar::{rat_int, rat_to_f64, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Bisection stops once the interval is narrower than 2⁻⁶⁴.
const SEPARATION_LOG2: u32 = 64;
/// Trial-division budget for rational-root extraction; larger coefficient
/// magnitudes fall back to pure interval isolation.
const RRT_MAX_ABS: i64 = 1_000_000_000_000;

/// Coefficients lowest-degree first; no trailing zeros; zero = empty vec.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![Rat::one()])
    }

    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Monic `(x - r₁)(x - r₂)…`.
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut p = Poly::one();
        for r in roots {
            p = p.mul(&Poly::new(vec![-r.clone(), Rat::one()]));
        }
        p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading();
        self.scale(&(Rat::one() / lc))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * rat_int(k as i64 + 1))
                .collect(),
        )
    }

    /// Euclidean division; rhs must be nonzero.
    pub fn div_rem(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let d = rhs.degree();
        if self.is_zero() || self.degree() < d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); self.degree() - d + 1];
        let lead_inv = Rat::one() / rhs.leading();
        for k in (d..rem.len()).rev() {
            let q = &rem[k] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (j, c) in rhs.coeffs.iter().enumerate() {
                let idx = k - d + j;
                rem[idx] -= &q * c;
            }
            quot[k - d] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(rhs).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Yun squarefree decomposition: returns (factor, multiplicity) pairs
    /// with multiplicities ascending; the product of factor^mult recovers
    /// the monic part of self.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        assert!(!self.is_zero());
        let p = self.monic();
        if p.degree() == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        if a0.degree() == 0 {
            return vec![(p, 1)];
        }
        let mut out = Vec::new();
        let mut b = p.div_rem(&a0).0;
        let mut c = dp.div_rem(&a0).0;
        let mut mult = 1;
        loop {
            let d = c.sub(&b.derivative());
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), mult));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            mult += 1;
            if b.degree() == 0 {
                break;
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 => {
                    if a.is_one() {
                        write!(f, "x")?
                    } else {
                        write!(f, "{a}x")?
                    }
                }
                _ => {
                    if a.is_one() {
                        write!(f, "x^{k}")?
                    } else {
                        write!(f, "{a}x^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An exactly-known real root, or an isolating open interval around an
/// irrational one.
#[derive(Clone, PartialEq, Eq)]
pub enum RealRoot {
    Rational(Rat),
    Isolated { lo: Rat, hi: Rat },
}

impl RealRoot {
    pub fn approx(&self) -> f64 {
        match self {
            RealRoot::Rational(r) => rat_to_f64(r),
            RealRoot::Isolated { lo, hi } => rat_to_f64(&((lo + hi) / rat_int(2))),
        }
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            RealRoot::Rational(r) => Some(r),
            RealRoot::Isolated { .. } => None,
        }
    }

    fn lower(&self) -> &Rat {
        match self {
            RealRoot::Rational(r) => r,
            RealRoot::Isolated { lo, .. } => lo,
        }
    }
}

impl fmt::Debug for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealRoot::Rational(r) => write!(f, "{r}"),
            RealRoot::Isolated { lo, hi } => write!(f, "({lo}, {hi})"),
        }
    }
}

impl PartialOrd for RealRoot {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealRoot {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lower().cmp(other.lower())
    }
}

/// All real roots of `p` with multiplicities, sorted ascending.
///
/// ```
/// use obsalg::poly::{isolate_real_roots, Poly, RealRoot};
///
/// // x³ − 2x² − x + 2 = (x + 1)(x − 1)(x − 2)
/// let p = Poly::from_i64(&[2, -1, -2, 1]);
/// let roots = isolate_real_roots(&p).unwrap();
/// let values: Vec<String> = roots
///     .iter()
///     .map(|(r, _)| r.as_rational().unwrap().to_string())
///     .collect();
/// assert_eq!(values, ["-1", "1", "2"]);
/// ```
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<(RealRoot, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // root, multiplicity, and the (deflated) polynomial that isolates it
    let mut entries: Vec<(RealRoot, usize, Poly)> = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        let (roots, deflated) = real_roots_squarefree(&factor);
        for root in roots {
            entries.push((root, mult, deflated.clone()));
        }
    }
    // intervals from different squarefree factors may overlap; shrink each
    // against its own isolating polynomial until all entries are disjoint
    loop {
        let mut changed = false;
        for a in 0..entries.len() {
            for b in 0..entries.len() {
                if a == b || !roots_overlap(&entries[a].0, &entries[b].0) {
                    continue;
                }
                let which = if matches!(entries[a].0, RealRoot::Isolated { .. }) {
                    a
                } else {
                    b
                };
                if let RealRoot::Isolated { lo, hi } = entries[which].0.clone() {
                    let defl = entries[which].2.clone();
                    entries[which].0 = bisect_once(&defl, lo, hi);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    entries.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(entries.into_iter().map(|(r, m, _)| (r, m)).collect())
}

fn roots_overlap(a: &RealRoot, b: &RealRoot) -> bool {
    match (a, b) {
        // distinct exact roots never collide
        (RealRoot::Rational(_), RealRoot::Rational(_)) => false,
        (RealRoot::Isolated { lo, hi }, RealRoot::Rational(q))
        | (RealRoot::Rational(q), RealRoot::Isolated { lo, hi }) => q > lo && q < hi,
        (RealRoot::Isolated { lo, hi }, RealRoot::Isolated { lo: lo2, hi: hi2 }) => {
            !(hi <= lo2 || hi2 <= lo)
        }
    }
}

/// Distinct real roots of a squarefree polynomial, plus the deflated
/// polynomial whose sign changes bracket the reported intervals.
fn real_roots_squarefree(p: &Poly) -> (Vec<RealRoot>, Poly) {
    let mut p = p.monic();
    let mut found: Vec<RealRoot> = Vec::new();
    if p.degree() == 0 {
        return (found, p);
    }
    if p.coeff(0).is_zero() {
        p = Poly::new(p.coeffs()[1..].to_vec());
        found.push(RealRoot::Rational(Rat::zero()));
    }
    // rational roots, when the coefficient magnitudes permit trial division
    for r in rational_roots(&p) {
        let lin = Poly::new(vec![-r.clone(), Rat::one()]);
        p = p.div_rem(&lin).0;
        found.push(RealRoot::Rational(r));
    }
    if p.degree() >= 1 {
        found.extend(isolate_squarefree(&p));
    }
    (found, p)
}

/// Sturm bisection over the Cauchy bound. Midpoints that evaluate to zero
/// exactly are reported as rational roots and excised with a verified gap.
fn isolate_squarefree(p: &Poly) -> Vec<RealRoot> {
    let chain = sturm_chain(p);
    let bound = cauchy_bound(p);
    let mut found = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sturm_count(&chain, &lo, &hi);
        if count == 0 {
            continue;
        }
        let width = &hi - &lo;
        if count == 1 && width < separation() {
            found.push(RealRoot::Isolated { lo, hi });
            continue;
        }
        let mid = (&lo + &hi) / rat_int(2);
        if p.eval(&mid).is_zero() {
            found.push(RealRoot::Rational(mid.clone()));
            // split around mid with a gap verified to hold no other root
            let mut eps = separation() / rat_int(4);
            loop {
                let left_hi = &mid - &eps;
                let right_lo = &mid + &eps;
                let l = sturm_count(&chain, &lo, &left_hi);
                let r = sturm_count(&chain, &right_lo, &hi);
                if l + r + 1 == count {
                    if l > 0 {
                        stack.push((lo, left_hi));
                    }
                    if r > 0 {
                        stack.push((right_lo, hi));
                    }
                    break;
                }
                eps /= rat_int(2);
            }
            continue;
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    found
}

fn bisect_once(p: &Poly, lo: Rat, hi: Rat) -> RealRoot {
    let mid = (&lo + &hi) / rat_int(2);
    let fm = p.eval(&mid);
    if fm.is_zero() {
        return RealRoot::Rational(mid);
    }
    let fl = p.eval(&lo);
    if fl.is_negative() != fm.is_negative() {
        RealRoot::Isolated { lo, hi: mid }
    } else {
        RealRoot::Isolated { lo: mid, hi }
    }
}

fn separation() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(2u8).pow(SEPARATION_LOG2))
}

/// All rational roots of a squarefree polynomial, sorted ascending.
pub fn rational_roots_of(p: &Poly) -> Vec<Rat> {
    if p.is_zero() || p.degree() == 0 {
        return Vec::new();
    }
    let mut p = p.monic();
    let mut out = Vec::new();
    if p.coeff(0).is_zero() {
        out.push(Rat::zero());
        while p.degree() >= 1 && p.coeff(0).is_zero() {
            p = Poly::new(p.coeffs()[1..].to_vec());
        }
    }
    out.extend(rational_roots(&p));
    out.sort();
    out
}

/// Rational roots of a squarefree polynomial with nonzero constant term,
/// via trial division over divisors of the integerized leading/trailing
/// coefficients. Gives up (returns only what it found by other means)
/// when the coefficients exceed the trial-division budget.
fn rational_roots(p: &Poly) -> Vec<Rat> {
    let mut out = Vec::new();
    if p.degree() == 0 {
        return out;
    }
    // integerize: multiply by lcm of denominators
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let int_coeffs: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    let a0 = int_coeffs.first().cloned().unwrap_or_default();
    let an = int_coeffs.last().cloned().unwrap_or_default();
    if a0.is_zero() {
        return out; // caller strips x^k first
    }
    let (Some(a0), Some(an)) = (to_small(&a0), to_small(&an)) else {
        return out;
    };
    let nums = divisors(a0.unsigned_abs());
    let dens = divisors(an.unsigned_abs());
    let mut candidates: Vec<Rat> = Vec::new();
    for n in &nums {
        for d in &dens {
            let q = Rat::new(BigInt::from(*n), BigInt::from(*d));
            candidates.push(q.clone());
            candidates.push(-q);
        }
    }
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        if p.eval(&c).is_zero() {
            out.push(c);
        }
    }
    out
}

fn to_small(n: &BigInt) -> Option<i64> {
    use num_traits::ToPrimitive;
    let v = n.to_i64()?;
    (v.abs() <= RRT_MAX_ABS).then_some(v)
}

fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

fn sign_variations(chain: &[Poly], x: &Rat) -> usize {
    let mut count = 0;
    let mut prev: Option<bool> = None;
    for q in chain {
        let v = q.eval(x);
        if v.is_zero() {
            continue;
        }
        let neg = v.is_negative();
        if let Some(p) = prev {
            if p != neg {
                count += 1;
            }
        }
        prev = Some(neg);
    }
    count
}

/// Number of distinct real roots in the half-open interval (lo, hi].
fn sturm_count(chain: &[Poly], lo: &Rat, hi: &Rat) -> usize {
    sign_variations(chain, lo).saturating_sub(sign_variations(chain, hi))
}

/// 1 + max |aᵢ/aₙ|, a bound on root magnitude.
fn cauchy_bound(p: &Poly) -> Rat {
    let lead = p.leading();
    let mut m = Rat::zero();
    for c in &p.coeffs()[..p.coeffs().len() - 1] {
        let v = (c / &lead).abs();
        if v > m {
            m = v;
        }
    }
    m + Rat::one()
}
