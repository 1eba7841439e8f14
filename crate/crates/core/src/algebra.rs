//! The data model: two-product algebras, associative algebras with optional
//! star structure, the JSON file format, basis changes, and scrambles.
//!
//! Structure constants are stored dense; the file format carries sparse
//! triples with rationals as strings, so round trips are bit-exact.

use crate::error::{Error, Result};
use crate::matrix::{vec_is_zero, Matrix};
use crate::rng::SplitMix64;
use crate::scalar::{rat_from_str, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Coordinates of an algebra element in the ambient basis.
pub type Element = Vec<Scalar>;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Real => write!(f, "real"),
            Field::Complex => write!(f, "complex"),
        }
    }
}

/// Dense n×n×n structure constants: `data[i][j][k]` is the coefficient of
/// `e_k` in the product of `e_i` and `e_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    pub dim: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 {
            dim,
            data: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.data[(i * self.dim + j) * self.dim + k] = v;
    }

    /// Product of two elements through the structure constants.
    pub fn contract(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        let term = &ab * c;
                        out[k] += &term;
                    }
                }
            }
        }
        out
    }

    /// Row of products of basis vectors: the element `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        (0..self.dim).map(|k| self.get(i, j, k).clone()).collect()
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (i..n).all(|j| (0..n).all(|k| *self.get(i, j, k) == -self.get(j, i, k))))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (i..n).all(|j| (0..n).all(|k| self.get(i, j, k) == self.get(j, i, k))))
    }

    pub fn all_real(&self) -> bool {
        self.data.iter().all(Scalar::is_real)
    }

    pub fn first_difference(&self, other: &Tensor3) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.get(i, j, k) != other.get(i, j, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Covariant transform under the basis change with column matrix `g`:
    /// `t'[i][j][k] = Σ g[a][i] g[b][j] t[a][b][c] g_inv[k][c]`.
    pub fn change_basis(&self, g: &Matrix, g_inv: &Matrix) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zeros(n);
        // two-stage contraction keeps this O(n⁴) instead of O(n⁵)
        // stage 1: products of new basis vectors in old coordinates
        let mut mixed = vec![vec![Scalar::zero(); n]; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = self.contract(&g.column(i), &g.column(j));
                mixed[i * n + j] = prod;
            }
        }
        // stage 2: express in the new basis
        for i in 0..n {
            for j in 0..n {
                let coords = g_inv.mul_vec(&mixed[i * n + j]);
                for (k, v) in coords.into_iter().enumerate() {
                    out.set(i, j, k, v);
                }
            }
        }
        out
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3(dim {}", self.dim)?;
        let n = self.dim;
        let mut shown = 0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.get(i, j, k);
                    if !v.is_zero() && shown < 16 {
                        write!(f, ", [{i},{j},{k}]={v}")?;
                        shown += 1;
                    }
                }
            }
        }
        write!(f, ")")
    }
}

/// Anti-linear star structure: `x ↦ S · conj(x)` on coordinates when
/// `conjugate` is set, a plain linear involution otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    pub matrix: Matrix,
    pub conjugate: bool,
}

impl Star {
    pub fn apply(&self, x: &[Scalar]) -> Element {
        let conj: Element = if self.conjugate {
            x.iter().map(Scalar::conj).collect()
        } else {
            x.to_vec()
        };
        self.matrix.mul_vec(&conj)
    }

    /// Standard star: fix the given basis pointwise, conjugate scalars.
    pub fn standard(dim: usize) -> Self {
        Star {
            matrix: Matrix::identity(dim),
            conjugate: true,
        }
    }
}

/// A finite-dimensional space of observables with a Lie bracket and a
/// symmetric bilinear product sharing a distinguished unit.
#[derive(Clone, Debug)]
pub struct TwoProductAlgebra {
    pub label: String,
    pub dim: usize,
    pub field: Field,
    pub bracket: Tensor3,
    pub tau: Tensor3,
    pub unit: Element,
}

impl TwoProductAlgebra {
    pub fn basis_vec(&self, i: usize) -> Element {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    pub fn bracket_of(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        self.bracket.contract(a, b)
    }

    pub fn tau_of(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        self.tau.contract(a, b)
    }

    /// τ-square of an element, the squaring operation of the calculus.
    pub fn square(&self, a: &[Scalar]) -> Element {
        self.tau_of(a, a)
    }

    pub fn change_basis(&self, g: &Matrix) -> Result<TwoProductAlgebra> {
        let g_inv = g.inverse().ok_or(Error::Singular)?;
        Ok(TwoProductAlgebra {
            label: self.label.clone(),
            dim: self.dim,
            field: self.field,
            bracket: self.bracket.change_basis(g, &g_inv),
            tau: self.tau.change_basis(g, &g_inv),
            unit: g_inv.mul_vec(&self.unit),
        })
    }

    /// Deterministic disguise: a seeded unimodular integer basis change.
    pub fn scramble(&self, seed: u64) -> (TwoProductAlgebra, Matrix) {
        let g = unimodular(self.dim, seed);
        (
            self.change_basis(&g)
                .expect("unimodular matrices are invertible"),
            g,
        )
    }
}

/// An associative algebra given by structure constants, with unit and an
/// optional star involution.
#[derive(Clone, Debug)]
pub struct AssocAlgebra {
    pub label: String,
    pub dim: usize,
    pub field: Field,
    pub product: Tensor3,
    pub unit: Element,
    pub star: Option<Star>,
}

impl AssocAlgebra {
    pub fn basis_vec(&self, i: usize) -> Element {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        self.product.contract(a, b)
    }

    pub fn star_of(&self, x: &[Scalar]) -> Option<Element> {
        self.star.as_ref().map(|s| s.apply(x))
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(n, n, |k, j| {
            let mut acc = Scalar::zero();
            for i in 0..n {
                if !x[i].is_zero() {
                    let c = self.product.get(i, j, k);
                    if !c.is_zero() {
                        let term = &x[i] * c;
                        acc += &term;
                    }
                }
            }
            acc
        })
    }

    /// Matrix of right multiplication by `x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(n, n, |k, j| {
            let mut acc = Scalar::zero();
            for i in 0..n {
                if !x[i].is_zero() {
                    let c = self.product.get(j, i, k);
                    if !c.is_zero() {
                        let term = &x[i] * c;
                        acc += &term;
                    }
                }
            }
            acc
        })
    }

    pub fn change_basis(&self, g: &Matrix) -> Result<AssocAlgebra> {
        let g_inv = g.inverse().ok_or(Error::Singular)?;
        let star = match &self.star {
            None => None,
            Some(s) => {
                let inner = if s.conjugate { g.conj() } else { g.clone() };
                Some(Star {
                    matrix: g_inv.mul(&s.matrix).mul(&inner),
                    conjugate: s.conjugate,
                })
            }
        };
        Ok(AssocAlgebra {
            label: self.label.clone(),
            dim: self.dim,
            field: self.field,
            product: self.product.change_basis(g, &g_inv),
            unit: g_inv.mul_vec(&self.unit),
            star,
        })
    }

    pub fn scramble(&self, seed: u64) -> (AssocAlgebra, Matrix) {
        let g = unimodular(self.dim, seed);
        (
            self.change_basis(&g)
                .expect("unimodular matrices are invertible"),
            g,
        )
    }

    /// Basis of the star-fixed (Hermitian) real subspace, computed over the
    /// realification.
    pub fn hermitian_basis(&self) -> Option<Vec<Element>> {
        let star = self.star.as_ref()?;
        let n = self.dim;
        // realify: coordinates (re₀…re_{n−1}, im₀…im_{n−1})
        let mut m = Matrix::zeros(2 * n, 2 * n);
        for j in 0..n {
            // image of the real basis direction e_j and of i·e_j
            let mut ej = vec![Scalar::zero(); n];
            ej[j] = Scalar::one();
            let im_re = star.apply(&ej);
            ej[j] = Scalar::i();
            let im_im = star.apply(&ej);
            for k in 0..n {
                m[(k, j)] = Scalar::from_rat(im_re[k].re.clone());
                m[(n + k, j)] = Scalar::from_rat(im_re[k].im.clone());
                m[(k, n + j)] = Scalar::from_rat(im_im[k].re.clone());
                m[(n + k, n + j)] = Scalar::from_rat(im_im[k].im.clone());
            }
        }
        let fixed = m.sub(&Matrix::identity(2 * n));
        Some(
            fixed
                .nullspace()
                .into_iter()
                .map(|v| {
                    (0..n)
                        .map(|k| Scalar::new(v[k].re.clone(), v[n + k].re.clone()))
                        .collect()
                })
                .collect(),
        )
    }
}

/// Either kind of algebra, as loaded from a document.
#[derive(Clone)]
pub enum AlgebraDoc {
    TwoProduct(TwoProductAlgebra),
    Assoc(AssocAlgebra),
}

impl AlgebraDoc {
    pub fn label(&self) -> &str {
        match self {
            AlgebraDoc::TwoProduct(a) => &a.label,
            AlgebraDoc::Assoc(a) => &a.label,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AlgebraDoc::TwoProduct(a) => a.dim,
            AlgebraDoc::Assoc(a) => a.dim,
        }
    }
}

// ---------------------------------------------------------------------------
// file format

type Triple = (usize, usize, usize, Scalar);

#[derive(Serialize, Deserialize)]
struct StarDoc {
    matrix: Vec<Vec<Scalar>>,
    conjugate: bool,
}

#[derive(Serialize, Deserialize)]
struct FileDoc {
    label: String,
    dim: usize,
    field: Field,
    unit: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    bracket: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    tau: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    product: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    star: Option<StarDoc>,
}

/// Parses and validates an algebra document.
pub fn load_algebra(json: &str) -> Result<AlgebraDoc> {
    let doc: FileDoc = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let n = doc.dim;
    if n == 0 {
        return Err(Error::Parse("dim must be positive".into()));
    }
    if doc.unit.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "unit has {} coordinates, dim is {n}",
            doc.unit.len()
        )));
    }
    if vec_is_zero(&doc.unit) {
        return Err(Error::ZeroUnit);
    }
    if doc.field == Field::Real && !doc.unit.iter().all(Scalar::is_real) {
        return Err(Error::Parse("complex entry in real-field unit".into()));
    }

    if let Some(product) = doc.product {
        if !doc.bracket.is_empty() || !doc.tau.is_empty() {
            return Err(Error::Parse(
                "document mixes a two-product algebra (bracket/tau) with an associative product"
                    .into(),
            ));
        }
        let product = densify(n, &product, Symmetry::None, doc.field)?;
        let star = match doc.star {
            None => None,
            Some(s) => Some(parse_star(n, s, doc.field)?),
        };
        let alg = AssocAlgebra {
            label: doc.label,
            dim: n,
            field: doc.field,
            product,
            unit: doc.unit,
            star,
        };
        validate_assoc(&alg)?;
        Ok(AlgebraDoc::Assoc(alg))
    } else {
        if doc.field != Field::Real {
            return Err(Error::Parse(
                "two-product algebras are real vector spaces".into(),
            ));
        }
        if doc.star.is_some() {
            return Err(Error::Parse(
                "star structure requires an associative product".into(),
            ));
        }
        let bracket = densify(n, &doc.bracket, Symmetry::Anti, doc.field)?;
        let tau = densify(n, &doc.tau, Symmetry::Sym, doc.field)?;
        Ok(AlgebraDoc::TwoProduct(TwoProductAlgebra {
            label: doc.label,
            dim: n,
            field: doc.field,
            bracket,
            tau,
            unit: doc.unit,
        }))
    }
}

pub fn load_two_product(json: &str) -> Result<TwoProductAlgebra> {
    match load_algebra(json)? {
        AlgebraDoc::TwoProduct(a) => Ok(a),
        AlgebraDoc::Assoc(_) => Err(Error::Parse("expected a two-product algebra".into())),
    }
}

pub fn load_assoc(json: &str) -> Result<AssocAlgebra> {
    match load_algebra(json)? {
        AlgebraDoc::Assoc(a) => Ok(a),
        AlgebraDoc::TwoProduct(_) => Err(Error::Parse("expected an associative algebra".into())),
    }
}

enum Symmetry {
    Anti,
    Sym,
    None,
}

fn densify(n: usize, triples: &[Triple], sym: Symmetry, field: Field) -> Result<Tensor3> {
    let mut seen: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
    for (i, j, k, v) in triples {
        if *i >= n || *j >= n || *k >= n {
            return Err(Error::DimensionMismatch(format!(
                "index triple ({i},{j},{k}) out of range"
            )));
        }
        if field == Field::Real && !v.is_real() {
            return Err(Error::Parse(format!(
                "complex entry at ({i},{j},{k}) in real-field algebra"
            )));
        }
        if seen.insert((*i, *j, *k), v.clone()).is_some() {
            return Err(Error::Parse(format!("duplicate triple ({i},{j},{k})")));
        }
    }
    let mut t = Tensor3::zeros(n);
    match sym {
        Symmetry::None => {
            for ((i, j, k), v) in seen {
                t.set(i, j, k, v);
            }
        }
        Symmetry::Anti => {
            for ((i, j, k), v) in &seen {
                if i == j {
                    if !v.is_zero() {
                        return Err(Error::SymmetryViolation { i: *i, j: *j });
                    }
                    continue;
                }
                if let Some(w) = seen.get(&(*j, *i, *k)) {
                    if *w != -v {
                        return Err(Error::SymmetryViolation { i: *i, j: *j });
                    }
                }
                t.set(*i, *j, *k, v.clone());
                if !seen.contains_key(&(*j, *i, *k)) {
                    t.set(*j, *i, *k, -v);
                }
            }
        }
        Symmetry::Sym => {
            for ((i, j, k), v) in &seen {
                if let Some(w) = seen.get(&(*j, *i, *k)) {
                    if i != j && w != v {
                        return Err(Error::SymmetryViolation { i: *i, j: *j });
                    }
                }
                t.set(*i, *j, *k, v.clone());
                if i != j && !seen.contains_key(&(*j, *i, *k)) {
                    t.set(*j, *i, *k, v.clone());
                }
            }
        }
    }
    Ok(t)
}

fn parse_star(n: usize, doc: StarDoc, field: Field) -> Result<Star> {
    if doc.matrix.len() != n || doc.matrix.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch("star matrix shape".into()));
    }
    if field == Field::Real && doc.matrix.iter().flatten().any(|s| !s.is_real()) {
        return Err(Error::Parse(
            "complex entry in real-field star matrix".into(),
        ));
    }
    Ok(Star {
        matrix: Matrix::from_rows(doc.matrix),
        conjugate: doc.conjugate,
    })
}

fn validate_assoc(alg: &AssocAlgebra) -> Result<()> {
    let n = alg.dim;
    if alg.field == Field::Real && !alg.product.all_real() {
        return Err(Error::Parse("complex entry in real-field product".into()));
    }
    // unit must be a two-sided identity
    for i in 0..n {
        let e = alg.basis_vec(i);
        if alg.mul(&alg.unit, &e) != e || alg.mul(&e, &alg.unit) != e {
            return Err(Error::UnitNotIdentity(i));
        }
    }
    if let Some(star) = &alg.star {
        // involution
        for i in 0..n {
            let e = alg.basis_vec(i);
            if star.apply(&star.apply(&e)) != e {
                return Err(Error::StarInconsistent(format!(
                    "star is not an involution at e_{i}"
                )));
            }
        }
        // anti-automorphism on basis pairs
        for i in 0..n {
            for j in 0..n {
                let lhs = star.apply(&alg.product.basis_product(i, j));
                let rhs = alg.mul(
                    &star.apply(&alg.basis_vec(j)),
                    &star.apply(&alg.basis_vec(i)),
                );
                if lhs != rhs {
                    return Err(Error::StarInconsistent(format!(
                        "star(e_{i}·e_{j}) != star(e_{j})·star(e_{i})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Serializes an algebra back to the document format (sparse triples, i<j
/// for brackets, i≤j for tau, rationals as strings).
pub fn save_algebra(doc: &AlgebraDoc) -> String {
    let file = match doc {
        AlgebraDoc::TwoProduct(a) => FileDoc {
            label: a.label.clone(),
            dim: a.dim,
            field: a.field,
            unit: a.unit.clone(),
            bracket: sparse_triples(&a.bracket, |i, j| i < j),
            tau: sparse_triples(&a.tau, |i, j| i <= j),
            product: None,
            star: None,
        },
        AlgebraDoc::Assoc(a) => FileDoc {
            label: a.label.clone(),
            dim: a.dim,
            field: a.field,
            unit: a.unit.clone(),
            bracket: Vec::new(),
            tau: Vec::new(),
            product: Some(sparse_triples(&a.product, |_, _| true)),
            star: a.star.as_ref().map(|s| StarDoc {
                matrix: (0..a.dim).map(|i| s.matrix.row(i).to_vec()).collect(),
                conjugate: s.conjugate,
            }),
        },
    };
    serde_json::to_string_pretty(&file).expect("algebra documents serialize")
}

fn sparse_triples(t: &Tensor3, keep: impl Fn(usize, usize) -> bool) -> Vec<Triple> {
    let n = t.dim;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !keep(i, j) {
                continue;
            }
            for k in 0..n {
                let v = t.get(i, j, k);
                if !v.is_zero() {
                    out.push((i, j, k, v.clone()));
                }
            }
        }
    }
    out
}

/// Seeded unimodular integer matrix built from elementary row operations,
/// with entries kept small so inverses stay small too.
pub fn unimodular(n: usize, seed: u64) -> Matrix {
    let mut g = Matrix::identity(n);
    if n == 1 {
        return g;
    }
    let mut rng = SplitMix64::new(seed);
    let ops = 2 * n + 4;
    let mut done = 0;
    let mut guard = 0;
    while done < ops && guard < 10 * ops {
        guard += 1;
        match rng.below(4) {
            0 | 1 => {
                // row_i += ±row_j, skipped when entries would grow past 4
                let i = rng.below(n as u64) as usize;
                let mut j = rng.below(n as u64) as usize;
                if i == j {
                    j = (j + 1) % n;
                }
                let sign = Scalar::from_int(if rng.bool() { 1 } else { -1 });
                let mut ok = true;
                let mut new_row = Vec::with_capacity(n);
                for c in 0..n {
                    let v = &g[(i, c)] + &(&g[(j, c)] * &sign);
                    if v.max_abs_component() > crate::scalar::rat_int(4) {
                        ok = false;
                        break;
                    }
                    new_row.push(v);
                }
                if ok {
                    for (c, v) in new_row.into_iter().enumerate() {
                        g[(i, c)] = v;
                    }
                    done += 1;
                }
            }
            2 => {
                let i = rng.below(n as u64) as usize;
                let mut j = rng.below(n as u64) as usize;
                if i == j {
                    j = (j + 1) % n;
                }
                for c in 0..n {
                    let tmp = g[(i, c)].clone();
                    g[(i, c)] = g[(j, c)].clone();
                    g[(j, c)] = tmp;
                }
                done += 1;
            }
            _ => {
                let i = rng.below(n as u64) as usize;
                for c in 0..n {
                    g[(i, c)] = -&g[(i, c)];
                }
                done += 1;
            }
        }
    }
    g
}

/// Parses "a,b,c,…" element coordinates (rationals allowed).
pub fn parse_coords(s: &str, dim: usize) -> Result<Element> {
    let coords: Vec<Scalar> = s
        .split(',')
        .map(|part| rat_from_str(part).map(Scalar::from_rat))
        .collect::<std::result::Result<_, _>>()
        .map_err(Error::Parse)?;
    if coords.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "element has {} coordinates, algebra dim is {dim}",
            coords.len()
        )));
    }
    Ok(coords)
}
