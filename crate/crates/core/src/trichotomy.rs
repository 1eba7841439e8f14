//! The three-fold alternative: estimate the projective invariant (λ:μ)
//! relating the τ-associator to the double bracket, classify the algebra,
//! and construct the associative hull for each case.
//!
//! The invariant solves λ·(A,B,C) = μ·[[A,C],B] over all basis triples.
//! μ = 0 gives a commutative Poisson algebra, μ < 0 a real associative
//! algebra with product τ + ħ[,], μ > 0 a complex ⋆-algebra with product
//! τ + iħ[,], where ħ = √|μ| once λ is scaled to 1. The pair (0:1) cannot
//! occur on a nonabelian algebra and is reported as inconsistent.

use crate::algebra::{AssocAlgebra, Element, Field, Star, Tensor3, TwoProductAlgebra};
use crate::error::{Error, Result};
use crate::scalar::{rat_serde, rat_sqrt, rat_to_f64, Rat, Scalar};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Case {
    Case1Poisson,
    Case2RealAssociative,
    Case3ComplexAssociative,
    Abelian,
    Inconsistent,
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Case::Case1Poisson => "case 1 (commutative Poisson)",
            Case::Case2RealAssociative => "case 2 (real associative)",
            Case::Case3ComplexAssociative => "case 3 (complex associative ⋆-algebra)",
            Case::Abelian => "abelian (trivial dynamics)",
            Case::Inconsistent => "inconsistent",
        };
        write!(f, "{s}")
    }
}

/// √|μ| with λ normalized to 1. Exact when |μ| is a rational square, which
/// covers every algebra whose hull this crate can represent; the float
/// value is always populated.
#[derive(Clone, Debug, Serialize)]
pub struct Hbar {
    #[serde(serialize_with = "rat_serde::serialize_opt")]
    pub exact: Option<Rat>,
    pub approx: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    /// (λ, μ), normalized to λ = 1 when λ ≠ 0; (0, 1) otherwise.
    #[serde(serialize_with = "rat_serde::serialize_pair")]
    pub lambda_mu: (Rat, Rat),
    pub case: Case,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hbar: Option<Hbar>,
    /// Maximum residual of the fitted pair over all triples; zero exactly
    /// unless the algebra is inconsistent.
    #[serde(serialize_with = "rat_serde::serialize")]
    pub residual: Rat,
    /// Basis triple that determined the pair (or achieved the residual).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[usize; 3]>,
}

impl ClassificationReport {
    pub fn is_classified(&self) -> bool {
        matches!(
            self.case,
            Case::Case1Poisson | Case::Case2RealAssociative | Case::Case3ComplexAssociative
        )
    }

    /// μ with λ = 1, defined for classified algebras.
    pub fn mu(&self) -> Option<&Rat> {
        self.is_classified().then_some(&self.lambda_mu.1)
    }
}

/// Stacks λ·(A,B,C) = μ·[[A,C],B] over all basis triples and solves the
/// two-column system by its kernel dimension: 1 → unique projective pair,
/// 2 → abelian tag (both columns vanish identically), 0 → inconsistent with
/// a max-residual witness.
pub fn estimate_lambda_mu(alg: &TwoProductAlgebra) -> ClassificationReport {
    let n = alg.dim;
    let t = &alg.tau;
    let b = &alg.bracket;
    // first nonzero row determines the candidate pair
    let mut candidate: Option<((Rat, Rat), [usize; 3])> = None;
    let mut max_residual = Rat::zero();
    let mut residual_witness: Option<[usize; 3]> = None;

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    // associator (e_i, e_j, e_k) coordinate m
                    let mut assoc = Scalar::zero();
                    // [[e_i, e_k], e_j] coordinate m
                    let mut dbrk = Scalar::zero();
                    for l in 0..n {
                        assoc += &(t.get(i, j, l) * t.get(l, k, m));
                        assoc -= &(t.get(j, k, l) * t.get(i, l, m));
                        dbrk += &(b.get(i, k, l) * b.get(l, j, m));
                    }
                    debug_assert!(assoc.is_real() && dbrk.is_real());
                    let a = assoc.re;
                    let d = dbrk.re;
                    if a.is_zero() && d.is_zero() {
                        continue;
                    }
                    match &candidate {
                        None => candidate = Some(((d.clone(), a.clone()), [i, j, k])),
                        Some(((lam, mu), _)) => {
                            // residual of λ·a − μ·d for the candidate pair
                            let r = lam * &a - mu * &d;
                            if r.abs() > max_residual {
                                max_residual = r.abs();
                                residual_witness = Some([i, j, k]);
                            }
                        }
                    }
                }
            }
        }
    }

    match candidate {
        // kernel dimension 2: associator and double bracket both vanish
        None => ClassificationReport {
            lambda_mu: (Rat::zero(), Rat::zero()),
            case: Case::Abelian,
            hbar: None,
            residual: Rat::zero(),
            witness: None,
        },
        Some(((lam, mu), witness)) => {
            if !max_residual.is_zero() {
                return ClassificationReport {
                    lambda_mu: normalize_pair(lam, mu),
                    case: Case::Inconsistent,
                    hbar: None,
                    residual: max_residual,
                    witness: residual_witness,
                };
            }
            let pair = normalize_pair(lam, mu);
            let case = case_of(alg, &pair);
            ClassificationReport {
                lambda_mu: pair,
                case,
                hbar: None,
                residual: Rat::zero(),
                witness: Some(witness),
            }
        }
    }
}

fn normalize_pair(lam: Rat, mu: Rat) -> (Rat, Rat) {
    if lam.is_zero() {
        if mu.is_zero() {
            (Rat::zero(), Rat::zero())
        } else {
            (Rat::zero(), Rat::one())
        }
    } else {
        let m = mu / &lam;
        (Rat::one(), m)
    }
}

/// Case tag for a consistently determined pair. The pair (0:1) forces every
/// double bracket to vanish, which only a zero bracket satisfies; on an
/// algebra with a nonzero bracket it is inconsistent.
fn case_of(alg: &TwoProductAlgebra, pair: &(Rat, Rat)) -> Case {
    let (lam, mu) = pair;
    if lam.is_zero() {
        return if bracket_is_zero(alg) {
            Case::Abelian
        } else {
            Case::Inconsistent
        };
    }
    if mu.is_zero() {
        Case::Case1Poisson
    } else if mu.is_negative() {
        Case::Case2RealAssociative
    } else {
        Case::Case3ComplexAssociative
    }
}

fn bracket_is_zero(alg: &TwoProductAlgebra) -> bool {
    let n = alg.dim;
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| alg.bracket.get(i, j, k).is_zero())))
}

/// Completes [`estimate_lambda_mu`] with ħ = √|μ| for cases 2 and 3.
pub fn classify(alg: &TwoProductAlgebra) -> ClassificationReport {
    let mut report = estimate_lambda_mu(alg);
    if matches!(
        report.case,
        Case::Case2RealAssociative | Case::Case3ComplexAssociative
    ) {
        let abs_mu = report.lambda_mu.1.abs();
        report.hbar = Some(Hbar {
            exact: rat_sqrt(&abs_mu),
            approx: rat_to_f64(&abs_mu).sqrt(),
        });
    }
    report
}

/// Builds the associative hull for a classified algebra: τ itself (case 1),
/// τ + ħ[,] over ℝ (case 2), or τ + iħ[,] over ℂ with the standard star
/// fixing the real span (case 3).
pub fn build_associative(
    alg: &TwoProductAlgebra,
    report: &ClassificationReport,
) -> Result<AssocAlgebra> {
    if !report.is_classified() {
        return Err(Error::NotClassified);
    }
    let n = alg.dim;
    let label = format!("{}-hull", alg.label);
    match report.case {
        Case::Case1Poisson => Ok(AssocAlgebra {
            label,
            dim: n,
            field: Field::Real,
            product: alg.tau.clone(),
            unit: alg.unit.clone(),
            star: None,
        }),
        Case::Case2RealAssociative | Case::Case3ComplexAssociative => {
            let hbar = report
                .hbar
                .as_ref()
                .and_then(|h| h.exact.clone())
                .ok_or_else(|| Error::IrrationalHbar(report.lambda_mu.1.abs().to_string()))?;
            let coeff = if report.case == Case::Case2RealAssociative {
                Scalar::from_rat(hbar)
            } else {
                Scalar::new(Rat::zero(), hbar)
            };
            let mut product = Tensor3::zeros(n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let v = alg.tau.get(i, j, k) + &(&coeff * alg.bracket.get(i, j, k));
                        if !v.is_zero() {
                            product.set(i, j, k, v);
                        }
                    }
                }
            }
            let complex = report.case == Case::Case3ComplexAssociative;
            Ok(AssocAlgebra {
                label,
                dim: n,
                field: if complex { Field::Complex } else { Field::Real },
                product,
                unit: alg.unit.clone(),
                star: complex.then(|| Star::standard(n)),
            })
        }
        _ => unreachable!(),
    }
}

/// Exhaustive associativity check on basis triples; the first defect is
/// returned as (triple, defect vector).
pub fn verify_associativity(assoc: &AssocAlgebra) -> Option<([usize; 3], Element)> {
    let n = assoc.dim;
    let p = &assoc.product;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut defect = vec![Scalar::zero(); n];
                let mut nonzero = false;
                for m in 0..n {
                    let mut acc = Scalar::zero();
                    for l in 0..n {
                        acc += &(p.get(i, j, l) * p.get(l, k, m));
                        acc -= &(p.get(j, k, l) * p.get(i, l, m));
                    }
                    if !acc.is_zero() {
                        nonzero = true;
                    }
                    defect[m] = acc;
                }
                if nonzero {
                    return Some(([i, j, k], defect));
                }
            }
        }
    }
    None
}

/// Recovers the two-product structure from an associative hull: τ is the
/// symmetrized product and the bracket is the antisymmetrized product
/// rescaled by the case coefficient.
pub fn two_product_from_hull(
    assoc: &AssocAlgebra,
    report: &ClassificationReport,
) -> Result<TwoProductAlgebra> {
    if !report.is_classified() {
        return Err(Error::NotClassified);
    }
    let n = assoc.dim;
    let mut tau = Tensor3::zeros(n);
    let mut bracket = Tensor3::zeros(n);
    let half = Scalar::from_rat(crate::scalar::rat(1, 2));
    let coeff_inv = match report.case {
        Case::Case1Poisson => None,
        Case::Case2RealAssociative => {
            let h = report
                .hbar
                .as_ref()
                .and_then(|h| h.exact.clone())
                .ok_or(Error::NotClassified)?;
            Some(Scalar::from_rat(
                Rat::one() / (h * Rat::from_integer(2.into())),
            ))
        }
        Case::Case3ComplexAssociative => {
            let h = report
                .hbar
                .as_ref()
                .and_then(|h| h.exact.clone())
                .ok_or(Error::NotClassified)?;
            let two_i_h = Scalar::new(Rat::zero(), h * Rat::from_integer(2.into()));
            Some(two_i_h.inv().unwrap())
        }
        _ => return Err(Error::NotClassified),
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let sym = &(assoc.product.get(i, j, k) + assoc.product.get(j, i, k)) * &half;
                tau.set(i, j, k, sym);
                if let Some(ci) = &coeff_inv {
                    let anti = assoc.product.get(i, j, k) - assoc.product.get(j, i, k);
                    bracket.set(i, j, k, &anti * ci);
                }
            }
        }
    }
    // case 1: the bracket is not recoverable from a commutative hull
    Ok(TwoProductAlgebra {
        label: assoc.label.trim_end_matches("-hull").to_string(),
        dim: n,
        field: Field::Real,
        bracket,
        tau,
        unit: assoc.unit.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::matrix::vec_is_zero;
    use crate::scalar::rat;

    fn two_product(label: &str) -> TwoProductAlgebra {
        match corpus::load(label).unwrap() {
            crate::algebra::AlgebraDoc::TwoProduct(a) => a,
            _ => panic!(),
        }
    }

    #[test]
    fn pauli_is_case3_with_quarter_mu() {
        let report = classify(&two_product("pauli"));
        assert_eq!(report.case, Case::Case3ComplexAssociative);
        assert_eq!(report.lambda_mu, (Rat::one(), rat(1, 4)));
        assert_eq!(report.hbar.as_ref().unwrap().exact, Some(rat(1, 2)));
        assert!(report.residual.is_zero());
    }

    #[test]
    fn m2r_jordan_is_case2() {
        let report = classify(&two_product("m2r-jordan"));
        assert_eq!(report.case, Case::Case2RealAssociative);
        assert_eq!(report.lambda_mu, (Rat::one(), rat(-1, 4)));
        assert_eq!(report.hbar.as_ref().unwrap().exact, Some(rat(1, 2)));
    }

    #[test]
    fn poisson3_is_case1() {
        let report = classify(&two_product("poisson3"));
        assert_eq!(report.case, Case::Case1Poisson);
        assert_eq!(report.lambda_mu, (Rat::one(), Rat::zero()));
        assert!(report.hbar.is_none());
    }

    #[test]
    fn zero_bracket_is_abelian() {
        let alg = TwoProductAlgebra {
            label: "ab".into(),
            dim: 2,
            field: Field::Real,
            bracket: Tensor3::zeros(2),
            tau: {
                // commutative associative τ: unit times anything
                let mut t = Tensor3::zeros(2);
                t.set(0, 0, 0, Scalar::one());
                t.set(0, 1, 1, Scalar::one());
                t.set(1, 0, 1, Scalar::one());
                t
            },
            unit: vec![Scalar::one(), Scalar::zero()],
        };
        let report = classify(&alg);
        assert_eq!(report.case, Case::Abelian);
    }

    #[test]
    fn witness_triple_matches_hand_derivation() {
        // (e₁, e₁, e₂): associator = e₂, [[e₁,e₂],e₁] = 4e₂
        let pauli = two_product("pauli");
        let e1 = pauli.basis_vec(1);
        let e2 = pauli.basis_vec(2);
        let assoc = crate::matrix::vec_sub(
            &pauli.tau_of(&pauli.tau_of(&e1, &e1), &e2),
            &pauli.tau_of(&e1, &pauli.tau_of(&e1, &e2)),
        );
        assert_eq!(assoc, e2);
        let dbrk = pauli.bracket_of(&pauli.bracket_of(&e1, &e2), &e1);
        assert_eq!(dbrk, crate::matrix::vec_scale(&e2, &Scalar::from_int(4)));
    }

    #[test]
    fn m2r_witness_values() {
        // (E₁₁, E₁₁, E₁₂): associator = ¼E₁₂, [[E₁₁,E₁₂],E₁₁] = −E₁₂
        let alg = two_product("m2r-jordan");
        let e0 = alg.basis_vec(0);
        let e1 = alg.basis_vec(1);
        let assoc = crate::matrix::vec_sub(
            &alg.tau_of(&alg.tau_of(&e0, &e0), &e1),
            &alg.tau_of(&e0, &alg.tau_of(&e0, &e1)),
        );
        assert_eq!(
            assoc,
            crate::matrix::vec_scale(&e1, &Scalar::from_rat(rat(1, 4)))
        );
        let dbrk = alg.bracket_of(&alg.bracket_of(&e0, &e1), &e0);
        assert_eq!(dbrk, crate::matrix::vec_scale(&e1, &Scalar::from_int(-1)));
    }

    #[test]
    fn diagonal_rescaling_keeps_the_invariant() {
        // basis f₂ = 2e₂ turns [f₁, f₂] into 4f₃-type constants but the
        // projective pair is unchanged
        let pauli = two_product("pauli");
        let mut g = crate::matrix::Matrix::identity(4);
        g[(2, 2)] = Scalar::from_int(2);
        let rescaled = pauli.change_basis(&g).unwrap();
        let br = rescaled.bracket_of(&rescaled.basis_vec(1), &rescaled.basis_vec(2));
        assert_eq!(
            br,
            crate::matrix::vec_scale(&rescaled.basis_vec(3), &Scalar::from_int(4))
        );
        let report = classify(&rescaled);
        assert_eq!(report.case, Case::Case3ComplexAssociative);
        assert_eq!(report.lambda_mu, (Rat::one(), rat(1, 4)));
    }

    #[test]
    fn lambda_mu_is_basis_invariant() {
        for label in ["pauli", "m2r-jordan", "poisson3"] {
            let alg = two_product(label);
            let base = classify(&alg);
            for seed in 0..10 {
                let (scrambled, _) = alg.scramble(seed);
                let r = classify(&scrambled);
                assert_eq!(r.case, base.case, "{label} seed {seed}");
                assert_eq!(r.lambda_mu, base.lambda_mu, "{label} seed {seed}");
            }
        }
    }

    #[test]
    fn pauli_hull_is_the_pauli_matrix_product() {
        let pauli = two_product("pauli");
        let report = classify(&pauli);
        let hull = build_associative(&pauli, &report).unwrap();
        assert_eq!(hull.field, Field::Complex);
        // e₁·e₂ = i e₃  (σx σy = i σz)
        let prod = hull.mul(&hull.basis_vec(1), &hull.basis_vec(2));
        let mut expect = vec![Scalar::zero(); 4];
        expect[3] = Scalar::i();
        assert_eq!(prod, expect);
        // e₁·e₁ = e₀
        let sq = hull.mul(&hull.basis_vec(1), &hull.basis_vec(1));
        assert_eq!(sq, hull.basis_vec(0));
        assert!(verify_associativity(&hull).is_none());
    }

    #[test]
    fn m2r_hull_is_matrix_product() {
        let alg = two_product("m2r-jordan");
        let hull = build_associative(&alg, &classify(&alg)).unwrap();
        assert_eq!(hull.field, Field::Real);
        // E₁₁·E₁₂ = E₁₂
        assert_eq!(
            hull.mul(&hull.basis_vec(0), &hull.basis_vec(1)),
            hull.basis_vec(1)
        );
        // E₁₂·E₁₁ = 0
        assert!(vec_is_zero(
            &hull.mul(&hull.basis_vec(1), &hull.basis_vec(0))
        ));
        assert!(verify_associativity(&hull).is_none());
    }

    #[test]
    fn poisson3_hull_is_tau_itself() {
        let alg = two_product("poisson3");
        let hull = build_associative(&alg, &classify(&alg)).unwrap();
        assert_eq!(hull.product, alg.tau);
        // x·y = 0
        assert!(vec_is_zero(
            &hull.mul(&hull.basis_vec(1), &hull.basis_vec(2))
        ));
        assert!(verify_associativity(&hull).is_none());
    }

    #[test]
    fn tau_alone_is_not_associative_for_pauli() {
        let pauli = two_product("pauli");
        let jordan_only = AssocAlgebra {
            label: "pauli-tau".into(),
            dim: 4,
            field: Field::Real,
            product: pauli.tau.clone(),
            unit: pauli.unit.clone(),
            star: None,
        };
        let (witness, defect) = verify_associativity(&jordan_only).unwrap();
        assert_eq!(witness, [1, 1, 2]);
        assert!(!vec_is_zero(&defect));
    }

    #[test]
    fn dim_one_always_associative() {
        let mut product = Tensor3::zeros(1);
        product.set(0, 0, 0, Scalar::one());
        let a = AssocAlgebra {
            label: "triv".into(),
            dim: 1,
            field: Field::Real,
            product,
            unit: vec![Scalar::one()],
            star: None,
        };
        assert!(verify_associativity(&a).is_none());
    }

    #[test]
    fn hull_round_trip_recovers_two_product() {
        for label in ["pauli", "m2r-jordan"] {
            let alg = two_product(label);
            let report = classify(&alg);
            let hull = build_associative(&alg, &report).unwrap();
            let back = two_product_from_hull(&hull, &report).unwrap();
            assert_eq!(back.tau, alg.tau, "{label} tau");
            assert_eq!(back.bracket, alg.bracket, "{label} bracket");
        }
    }

    #[test]
    fn case3_star_fixes_real_span_and_reverses_products() {
        let pauli = two_product("pauli");
        let hull = build_associative(&pauli, &classify(&pauli)).unwrap();
        let star = hull.star.as_ref().unwrap();
        for i in 0..4 {
            assert_eq!(star.apply(&hull.basis_vec(i)), hull.basis_vec(i));
        }
        // i·e₁ is anti-fixed
        let ie1 = crate::matrix::vec_scale(&hull.basis_vec(1), &Scalar::i());
        assert_eq!(
            star.apply(&ie1),
            crate::matrix::vec_scale(&ie1, &Scalar::from_int(-1))
        );
        for i in 0..4 {
            for j in 0..4 {
                let lhs = star.apply(&hull.mul(&hull.basis_vec(i), &hull.basis_vec(j)));
                let rhs = hull.mul(
                    &star.apply(&hull.basis_vec(j)),
                    &star.apply(&hull.basis_vec(i)),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn conflicting_triples_are_inconsistent_with_residual_witness() {
        // pauli with τ(e₃,e₃) = 2e₀ breaks the proportionality between the
        // associator and the double bracket across triples
        let mut alg = two_product("pauli");
        alg.tau.set(3, 3, 0, Scalar::from_int(2));
        let report = classify(&alg);
        assert_eq!(report.case, Case::Inconsistent);
        assert!(!report.residual.is_zero());
        assert!(report.witness.is_some());
        assert!(matches!(
            build_associative(&alg, &report),
            Err(Error::NotClassified)
        ));
    }

    #[test]
    fn heisenberg_columns_vanish_identically() {
        // bad-poisson has a nonzero bracket but every associator and double
        // bracket vanishes, so the kernel has dimension 2
        let report = classify(&two_product("bad-poisson"));
        assert_eq!(report.case, Case::Abelian);
        assert!(report.residual.is_zero());
    }
}
