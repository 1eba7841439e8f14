//! Polynomial calculus and physical spectra.
//!
//! Powers are generated through τ by the polarization recursion
//! A^(k+1) = ½((A + A^k)² − A² − (A^k)²) = τ(A, A^k), so the calculus works
//! straight from the two-product data with no associative hull assumed;
//! agreement with hull powers is a theorem exercised in tests. The physical
//! spectrum of A is the real root set of its minimal polynomial, which is
//! the unique candidate consistent with the spectral-mapping axiom; an
//! empty spectrum or a non-constant observable with a one-point spectrum
//! flags an axiom violation rather than raising an error.

use crate::algebra::{AssocAlgebra, Element, TwoProductAlgebra};
use crate::matrix::{vec_add, vec_scale, Matrix};
use crate::poly::{isolate_real_roots, Poly, RealRoot};
use crate::scalar::{Rat, Scalar};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumResult {
    #[serde(serialize_with = "serialize_poly")]
    pub min_poly: Poly,
    /// Distinct real roots of the minimal polynomial, ascending.
    #[serde(serialize_with = "serialize_roots")]
    pub spectrum: Vec<RealRoot>,
    /// Nonempty spectrum (every observable must admit a measurement value).
    pub axiom8_ok: bool,
    /// One-point spectra only on constants (no phantom observables).
    pub axiom9_ok: bool,
    /// All minimal-polynomial roots are real.
    pub all_roots_real: bool,
    /// The minimal polynomial is squarefree.
    pub square_free: bool,
    /// The single spectrum point, when an axiom-9 failure has one.
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_root_opt"
    )]
    pub witness: Option<RealRoot>,
}

impl SpectrumResult {
    pub fn physical(&self) -> bool {
        self.axiom8_ok && self.axiom9_ok && self.all_roots_real && self.square_free
    }
}

fn serialize_poly<S: Serializer>(p: &Poly, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(p.coeffs().iter().map(|c| c.to_string()))
}

fn root_to_string(r: &RealRoot) -> String {
    match r {
        RealRoot::Rational(q) => q.to_string(),
        RealRoot::Isolated { lo, hi } => format!("({lo}, {hi})"),
    }
}

fn serialize_roots<S: Serializer>(roots: &[RealRoot], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(roots.iter().map(root_to_string))
}

fn serialize_root_opt<S: Serializer>(r: &Option<RealRoot>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(root) => s.serialize_some(&root_to_string(root)),
        None => s.serialize_none(),
    }
}

/// Powers of an element under a (not necessarily associative) symmetric
/// product: A^(0) = unit, A^(k+1) = mul(A, A^(k)).
fn powers(
    mul: &dyn Fn(&[Scalar], &[Scalar]) -> Element,
    unit: &[Scalar],
    a: &[Scalar],
    count: usize,
) -> Vec<Element> {
    let mut out = Vec::with_capacity(count + 1);
    out.push(unit.to_vec());
    if count >= 1 {
        out.push(a.to_vec());
    }
    while out.len() <= count {
        let next = mul(a, out.last().unwrap());
        out.push(next);
    }
    out
}

/// Real coordinates of a possibly complex vector: (re…, im…).
fn realify(v: &[Scalar]) -> Vec<Scalar> {
    v.iter()
        .map(|s| Scalar::from_rat(s.re.clone()))
        .chain(v.iter().map(|s| Scalar::from_rat(s.im.clone())))
        .collect()
}

/// Least-degree monic real polynomial annihilating `a` under the given
/// power sequence; found by the first linear dependency among
/// unit, A, A², … over the realified coordinates.
fn minimal_polynomial_with(
    mul: &dyn Fn(&[Scalar], &[Scalar]) -> Element,
    unit: &[Scalar],
    a: &[Scalar],
    max_degree: usize,
) -> Poly {
    let pows = powers(mul, unit, a, max_degree);
    let real: Vec<Vec<Scalar>> = pows.iter().map(|p| realify(p)).collect();
    let coords = real[0].len();
    for d in 1..=max_degree {
        // solve Σ c_k A^(k) = A^(d), k < d
        let m = Matrix::from_fn(coords, d, |row, col| real[col][row].clone());
        if let Some(c) = m.solve(&real[d]) {
            let mut coeffs: Vec<Rat> = c
                .iter()
                .map(|s| {
                    debug_assert!(s.is_real());
                    -s.re.clone()
                })
                .collect();
            coeffs.push(Rat::one());
            return Poly::new(coeffs);
        }
    }
    unreachable!("powers 0..=dim are always linearly dependent")
}

/// K_f(A) = Σ f_k A^(k) with powers through τ; constants obey
/// K_f(λ·unit) = f(λ)·unit.
pub fn poly_apply(alg: &TwoProductAlgebra, a: &[Scalar], f: &Poly) -> Element {
    apply_with(&|x, y| alg.tau_of(x, y), &alg.unit, a, f, alg.dim)
}

/// K_f through the associative product of a hull.
pub fn assoc_poly_apply(alg: &AssocAlgebra, a: &[Scalar], f: &Poly) -> Element {
    apply_with(&|x, y| alg.mul(x, y), &alg.unit, a, f, alg.dim)
}

fn apply_with(
    mul: &dyn Fn(&[Scalar], &[Scalar]) -> Element,
    unit: &[Scalar],
    a: &[Scalar],
    f: &Poly,
    dim: usize,
) -> Element {
    let deg = f.degree();
    let pows = powers(mul, unit, a, deg);
    let mut acc = vec![Scalar::zero(); dim];
    for (k, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc = vec_add(&acc, &vec_scale(&pows[k], &Scalar::from_rat(c.clone())));
        }
    }
    acc
}

/// Minimal polynomial of an observable under τ-powers; degree ≤ dim.
pub fn minimal_polynomial(alg: &TwoProductAlgebra, a: &[Scalar]) -> Poly {
    minimal_polynomial_with(&|x, y| alg.tau_of(x, y), &alg.unit, a, alg.dim)
}

/// Minimal polynomial under the associative product. For star-fixed
/// elements the coefficients are genuinely real; the realified solve makes
/// that structural. Degree can reach 2·dim over the realification.
pub fn assoc_minimal_polynomial(alg: &AssocAlgebra, a: &[Scalar]) -> Poly {
    minimal_polynomial_with(&|x, y| alg.mul(x, y), &alg.unit, a, 2 * alg.dim)
}

/// Physical spectrum of an observable with the axiom flags.
pub fn physical_spectrum(alg: &TwoProductAlgebra, a: &[Scalar]) -> SpectrumResult {
    spectrum_of_min_poly(minimal_polynomial(alg, a))
}

pub fn assoc_physical_spectrum(alg: &AssocAlgebra, a: &[Scalar]) -> SpectrumResult {
    spectrum_of_min_poly(assoc_minimal_polynomial(alg, a))
}

fn spectrum_of_min_poly(min_poly: Poly) -> SpectrumResult {
    let roots = isolate_real_roots(&min_poly).expect("minimal polynomials are monic");
    let real_count: usize = roots.iter().map(|(_, m)| m).sum();
    let all_roots_real = real_count == min_poly.degree();
    let square_free = roots.iter().all(|(_, m)| *m == 1) && min_poly.is_squarefree();
    let spectrum: Vec<RealRoot> = roots.into_iter().map(|(r, _)| r).collect();
    let axiom8_ok = !spectrum.is_empty();
    // a one-point spectrum forces the observable to be the matching
    // constant, i.e. a degree-one minimal polynomial
    let (axiom9_ok, witness) = if spectrum.len() == 1 && min_poly.degree() > 1 {
        (false, Some(spectrum[0].clone()))
    } else {
        (true, None)
    };
    SpectrumResult {
        min_poly,
        spectrum,
        axiom8_ok,
        axiom9_ok,
        all_roots_real,
        square_free,
        witness,
    }
}

/// Axiom 9 alone: false exactly when the spectrum is a single point but the
/// observable is not the corresponding constant.
pub fn phantom_check(alg: &TwoProductAlgebra, a: &[Scalar]) -> bool {
    physical_spectrum(alg, a).axiom9_ok
}
