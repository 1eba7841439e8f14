//! Axiom verification for two-product algebras: Lie structure, τ structure,
//! and reconstruction of τ from a squaring map.
//!
//! All identities are multilinear, so checking them on basis triples is a
//! proof, not a sample. Failures carry the offending index triple and the
//! literal defect vector.

use crate::algebra::{Element, Tensor3, TwoProductAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{vec_is_zero, vec_scale, vec_sub};
use crate::scalar::{rat, Scalar};
use serde::Serialize;

/// One named identity check. `witness` and `residual` are present exactly
/// when the check fails; the residual is the first nonzero defect vector.
#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub name: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Element>,
}

impl CheckItem {
    fn pass(name: &'static str) -> Self {
        CheckItem {
            name,
            pass: true,
            witness: None,
            residual: None,
        }
    }

    fn fail(name: &'static str, witness: [usize; 3], residual: Element) -> Self {
        CheckItem {
            name,
            pass: false,
            witness: Some(witness),
            residual: Some(residual),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<CheckItem>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// Antisymmetry, the Jacobi identity, and centrality of the unit.
pub fn check_lie(alg: &TwoProductAlgebra) -> AxiomReport {
    let n = alg.dim;
    let b = &alg.bracket;
    let mut checks = Vec::new();

    checks.push(scan_triples("bracket-antisymmetric", n, |i, j, k| {
        let defect = b.get(i, j, k) + b.get(j, i, k);
        (!defect.is_zero()).then(|| {
            let mut v = vec![Scalar::zero(); n];
            v[k] = defect;
            v
        })
    }));

    checks.push(scan_triples("jacobi", n, |i, j, k| {
        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
        let mut defect = vec![Scalar::zero(); n];
        for m in 0..n {
            let mut acc = Scalar::zero();
            for l in 0..n {
                acc += &(b.get(i, j, l) * b.get(l, k, m));
                acc += &(b.get(j, k, l) * b.get(l, i, m));
                acc += &(b.get(k, i, l) * b.get(l, j, m));
            }
            defect[m] = acc;
        }
        (!vec_is_zero(&defect)).then_some(defect)
    }));

    // [unit, e_i] = 0 for every basis direction
    let mut unit_central = CheckItem::pass("unit-central");
    for i in 0..n {
        let defect = alg.bracket_of(&alg.unit, &alg.basis_vec(i));
        if !vec_is_zero(&defect) {
            unit_central = CheckItem::fail("unit-central", [i, i, i], defect);
            break;
        }
    }
    checks.push(unit_central);

    AxiomReport { checks }
}

/// τ symmetry, the unit normalization τ(e_i, unit) = e_i, and the Leibniz
/// (derivation) identity tying the bracket to τ.
pub fn check_tau(alg: &TwoProductAlgebra) -> AxiomReport {
    let n = alg.dim;
    let b = &alg.bracket;
    let t = &alg.tau;
    let mut checks = Vec::new();

    checks.push(scan_triples("tau-symmetric", n, |i, j, k| {
        let defect = t.get(i, j, k) - t.get(j, i, k);
        (!defect.is_zero()).then(|| {
            let mut v = vec![Scalar::zero(); n];
            v[k] = defect;
            v
        })
    }));

    let mut tau_unit = CheckItem::pass("tau-unit");
    for i in 0..n {
        let got = alg.tau_of(&alg.basis_vec(i), &alg.unit);
        let defect = vec_sub(&got, &alg.basis_vec(i));
        if !vec_is_zero(&defect) {
            tau_unit = CheckItem::fail("tau-unit", [i, i, i], defect);
            break;
        }
    }
    checks.push(tau_unit);

    checks.push(scan_triples("leibniz", n, |a, c, d| {
        // [e_a, τ(e_c, e_d)] − τ([e_a,e_c], e_d) − τ(e_c, [e_a,e_d])
        let mut defect = vec![Scalar::zero(); n];
        for m in 0..n {
            let mut acc = Scalar::zero();
            for l in 0..n {
                acc += &(t.get(c, d, l) * b.get(a, l, m));
                acc -= &(b.get(a, c, l) * t.get(l, d, m));
                acc -= &(b.get(a, d, l) * t.get(c, l, m));
            }
            defect[m] = acc;
        }
        (!vec_is_zero(&defect)).then_some(defect)
    }));

    AxiomReport { checks }
}

fn scan_triples(
    name: &'static str,
    n: usize,
    defect: impl Fn(usize, usize, usize) -> Option<Element>,
) -> CheckItem {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if let Some(d) = defect(i, j, k) {
                    return CheckItem::fail(name, [i, j, k], d);
                }
            }
        }
    }
    CheckItem::pass(name)
}

/// Recovers symmetric bilinear structure constants from a squaring map by
/// polarization: τ(A,B) = ½(sq(A+B) − sq(A) − sq(B)).
///
/// The map is probed for quadratic homogeneity (sq(2e_i) = 4·sq(e_i)) and
/// rejected otherwise.
pub fn tau_from_square(sq: impl Fn(&[Scalar]) -> Element, dim: usize) -> Result<Tensor3> {
    let basis = |i: usize| {
        let mut v = vec![Scalar::zero(); dim];
        v[i] = Scalar::one();
        v
    };
    let half = Scalar::from_rat(rat(1, 2));
    for i in 0..dim {
        let doubled = vec_scale(&basis(i), &Scalar::from_int(2));
        let lhs = sq(&doubled);
        let rhs = vec_scale(&sq(&basis(i)), &Scalar::from_int(4));
        if lhs != rhs {
            return Err(Error::NotQuadratic(i));
        }
    }
    let mut t = Tensor3::zeros(dim);
    let squares: Vec<Element> = (0..dim).map(|i| sq(&basis(i))).collect();
    for i in 0..dim {
        for (k, v) in squares[i].iter().enumerate() {
            t.set(i, i, k, v.clone());
        }
        for j in i + 1..dim {
            let mut sum = basis(i);
            sum[j] = Scalar::one();
            let mixed = sq(&sum);
            for k in 0..dim {
                let v = &half * &(&(&mixed[k] - &squares[i][k]) - &squares[j][k]);
                t.set(i, j, k, v.clone());
                t.set(j, i, k, v);
            }
        }
    }
    Ok(t)
}
