//! Composite systems on the tensor product of two observable spaces.
//!
//! The composite bracket is
//!   [A⊗A′, B⊗B′] = [A,B] ⊗ τ′(A′,B′) + τ(A,B) ⊗ [A′,B′]
//! and the composite symmetric product is
//!   τ⊗(A⊗A′, B⊗B′) = τ(A,B) ⊗ τ′(A′,B′) − μ·[A,B] ⊗ [A′,B′],
//! which degenerates to the plain tensor product of commutative algebras at
//! μ = 0 and reproduces the symmetrized product of the associative tensor
//! hull in the other cases. Both factors must carry the same invariant
//! (1:μ); mixing invariants breaks the Jacobi identity on the composite,
//! and that failure is observable through [`tensor_compose_raw`].
//!
//! Basis index convention: e_i ⊗ f_j ↦ i·dim(b) + j (row-major).

use crate::algebra::{Field, Tensor3, TwoProductAlgebra};
use crate::axioms::{check_lie, check_tau};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rat, Scalar};
use crate::trichotomy::{classify, Case};
use num_traits::Zero;

/// Composite structure constants with no validation; use
/// [`tensor_compose`] unless a deliberately broken composite is wanted.
pub fn tensor_compose_raw(
    a: &TwoProductAlgebra,
    b: &TwoProductAlgebra,
    mu: &Rat,
) -> TwoProductAlgebra {
    let (na, nb) = (a.dim, b.dim);
    let n = na * nb;
    let idx = |i: usize, ip: usize| i * nb + ip;
    let mut bracket = Tensor3::zeros(n);
    let mut tau = Tensor3::zeros(n);
    let neg_mu = Scalar::from_rat(-mu.clone());
    for i in 0..na {
        for ip in 0..nb {
            for j in 0..na {
                for jp in 0..nb {
                    for k in 0..na {
                        for kp in 0..nb {
                            let ba = a.bracket.get(i, j, k);
                            let bb = b.bracket.get(ip, jp, kp);
                            let ta = a.tau.get(i, j, k);
                            let tb = b.tau.get(ip, jp, kp);
                            let br = &(ba * tb) + &(ta * bb);
                            if !br.is_zero() {
                                bracket.set(idx(i, ip), idx(j, jp), idx(k, kp), br);
                            }
                            let tv = &(ta * tb) + &(&neg_mu * &(ba * bb));
                            if !tv.is_zero() {
                                tau.set(idx(i, ip), idx(j, jp), idx(k, kp), tv);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![Scalar::zero(); n];
    for i in 0..na {
        for ip in 0..nb {
            unit[idx(i, ip)] = &a.unit[i] * &b.unit[ip];
        }
    }
    TwoProductAlgebra {
        label: format!("{}(x){}", a.label, b.label),
        dim: n,
        field: Field::Real,
        bracket,
        tau,
        unit,
    }
}

/// Validated composition: both factors must pass the axiom checks and carry
/// the classification invariant (1:μ) matching the argument (abelian factors
/// are compatible with any μ), and the composite is itself re-verified.
pub fn tensor_compose(
    a: &TwoProductAlgebra,
    b: &TwoProductAlgebra,
    mu: &Rat,
) -> Result<TwoProductAlgebra> {
    for (alg, name) in [(a, "first factor"), (b, "second factor")] {
        let lie = check_lie(alg);
        if let Some(fail) = lie.first_failure() {
            return Err(Error::AxiomFailure {
                stage: name.into(),
                detail: format!("{} fails at {:?}", fail.name, fail.witness),
            });
        }
        let tau = check_tau(alg);
        if let Some(fail) = tau.first_failure() {
            return Err(Error::AxiomFailure {
                stage: name.into(),
                detail: format!("{} fails at {:?}", fail.name, fail.witness),
            });
        }
        check_invariant(alg, name, mu)?;
    }
    let composite = tensor_compose_raw(a, b, mu);
    // the composite must satisfy the axioms and inherit the invariant
    let lie = check_lie(&composite);
    if let Some(fail) = lie.first_failure() {
        return Err(Error::AxiomFailure {
            stage: "composite".into(),
            detail: format!("{} fails at {:?}", fail.name, fail.witness),
        });
    }
    let tau = check_tau(&composite);
    if let Some(fail) = tau.first_failure() {
        return Err(Error::AxiomFailure {
            stage: "composite".into(),
            detail: format!("{} fails at {:?}", fail.name, fail.witness),
        });
    }
    check_invariant(&composite, "composite", mu)?;
    Ok(composite)
}

fn check_invariant(alg: &TwoProductAlgebra, name: &str, mu: &Rat) -> Result<()> {
    let report = classify(alg);
    match report.case {
        Case::Abelian => Ok(()), // (λ:μ) unconstrained
        Case::Inconsistent => Err(Error::AxiomFailure {
            stage: name.into(),
            detail: "no consistent (λ:μ) pair".into(),
        }),
        Case::Case1Poisson if mu.is_zero() => Ok(()),
        _ => {
            let factor_mu = &report.lambda_mu.1;
            if factor_mu == mu {
                Ok(())
            } else {
                Err(Error::IncompatibleInvariants(format!(
                    "{name} has (1:{factor_mu}), composition requested (1:{mu})"
                )))
            }
        }
    }
}

/// Embedding of a factor into the composite: A ↦ A ⊗ unit (or unit ⊗ A),
/// returned as the (n_a·n_b) × n_factor coordinate matrix.
pub fn embed_factor(a: &TwoProductAlgebra, b: &TwoProductAlgebra, which: u8) -> Matrix {
    let (na, nb) = (a.dim, b.dim);
    let n = na * nb;
    match which {
        1 => Matrix::from_fn(n, na, |row, col| {
            let (i, ip) = (row / nb, row % nb);
            if i == col {
                b.unit[ip].clone()
            } else {
                Scalar::zero()
            }
        }),
        2 => Matrix::from_fn(n, nb, |row, col| {
            let (i, ip) = (row / nb, row % nb);
            if ip == col {
                a.unit[i].clone()
            } else {
                Scalar::zero()
            }
        }),
        _ => panic!("factor index must be 1 or 2"),
    }
}

/// Checks that (a⊗b)⊗c and a⊗(b⊗c) have identical structure constants
/// under the canonical index identification. Returns the first differing
/// index triple on failure.
pub fn reassociation_check(
    a: &TwoProductAlgebra,
    b: &TwoProductAlgebra,
    c: &TwoProductAlgebra,
    mu: &Rat,
) -> std::result::Result<(), (usize, usize, usize)> {
    let left = tensor_compose_raw(&tensor_compose_raw(a, b, mu), c, mu);
    let right = tensor_compose_raw(a, &tensor_compose_raw(b, c, mu), mu);
    if let Some(d) = left.bracket.first_difference(&right.bracket) {
        return Err(d);
    }
    if let Some(d) = left.tau.first_difference(&right.tau) {
        return Err(d);
    }
    if left.unit != right.unit {
        return Err((0, 0, 0));
    }
    Ok(())
}
