//! Adjoint orbits of `sl(n+1)` as affine varieties.
//!
//! Coordinates on `sl(n+1)` follow the layout
//!
//! ```text
//! [ x1  y1  y2 ]
//! [ z1  x2  y3 ]
//! [ z2  z3  -x1-x2 ]
//! ```
//!
//! i.e. `x` on the diagonal, `y` row-major above it and `z` column-major below
//! it. For `sl(2)` the unsubscripted names `x, y, z` are used.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groebner::{write_ideal_file, IdealFile, IdealPresentation};
use crate::polyalg::{format_rational, parse_rational, rational_json, Ctx, MultiPoly, VarContext};

/// Diagonal of a traceless diagonal matrix (`H0` or `H`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagSpec {
    eigenvalues: Vec<BigRational>,
}

impl DiagSpec {
    pub fn new(eigenvalues: Vec<BigRational>) -> Result<Self> {
        if eigenvalues.len() < 2 {
            return Err(Error::InvalidSpec("a diagonal spec needs at least two entries".into()));
        }
        let sum: BigRational = eigenvalues.iter().sum();
        if !sum.is_zero() {
            return Err(Error::InvalidSpec(format!("entries sum to {}, not 0", format_rational(&sum))));
        }
        Ok(DiagSpec { eigenvalues })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    /// Parses a comma-separated list such as `2,-1,-1` or `1/2,-1/2`.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split(',')
            .map(|s| parse_rational(s).ok_or_else(|| Error::InvalidSpec(format!("`{}` is not a rational", s.trim()))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn eigenvalues(&self) -> &[BigRational] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Pairwise distinct entries.
    pub fn is_regular(&self) -> bool {
        self.distinct().len() == self.len()
    }

    /// Distinct entries, ascending.
    pub fn distinct(&self) -> Vec<BigRational> {
        self.eigenvalues.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.eigenvalues.iter().map(rational_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Format("diagonal spec must be an array".into()))?;
        let values = arr
            .iter()
            .map(|x| match x {
                Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().unwrap().into())),
                Value::String(s) => parse_rational(s).ok_or_else(|| Error::Format(format!("bad rational `{s}`"))),
                other => Err(Error::Format(format!("bad rational {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

impl fmt::Display for DiagSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.eigenvalues.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Square matrix of polynomials over one context.
pub type PolyMatrix = Vec<Vec<MultiPoly>>;

/// The general traceless `(n+1) x (n+1)` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericMatrix {
    n: usize,
    ctx: Ctx,
    entries: PolyMatrix,
}

impl GenericMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn entries(&self) -> &PolyMatrix {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i][j]
    }

    pub fn trace(&self) -> MultiPoly {
        let mut acc = MultiPoly::zero(&self.ctx);
        for i in 0..self.size() {
            acc = &acc + &self.entries[i][i];
        }
        acc
    }

    /// Coordinates of a concrete traceless matrix in this matrix' context.
    pub fn coordinates_of(&self, m: &[Vec<BigRational>]) -> Result<Vec<BigRational>> {
        let size = self.size();
        if m.len() != size || m.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidSpec(format!("expected a {size}x{size} matrix")));
        }
        let tr: BigRational = (0..size).map(|i| &m[i][i]).sum();
        if !tr.is_zero() {
            return Err(Error::InvalidSpec("matrix is not traceless".into()));
        }
        let mut point = vec![BigRational::zero(); self.ctx.len()];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                // entries are single variables except the last diagonal one
                if e.num_terms() == 1 {
                    let (mono, _) = e.terms().next().unwrap();
                    let idx = mono.exponents().iter().position(|&x| x == 1).unwrap();
                    point[idx] = m[i][j].clone();
                }
            }
        }
        Ok(point)
    }
}

/// Builds the general traceless matrix of `sl(n+1)`.
pub fn generic_matrix(n: usize) -> Result<GenericMatrix> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be at least 1".into()));
    }
    let size = n + 1;
    let names: Vec<String> = if n == 1 {
        vec!["x".into(), "y".into(), "z".into()]
    } else {
        let offdiag = n * (n + 1) / 2;
        (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=offdiag).map(|i| format!("y{i}")))
            .chain((1..=offdiag).map(|i| format!("z{i}")))
            .collect()
    };
    let ctx = VarContext::new(&names)?;
    let var = |k: usize| MultiPoly::var_at(&ctx, k);
    let mut entries = vec![vec![MultiPoly::zero(&ctx); size]; size];
    for (i, row) in entries.iter_mut().enumerate().take(n) {
        row[i] = var(i);
    }
    let mut last = MultiPoly::zero(&ctx);
    for i in 0..n {
        last = &last - &var(i);
    }
    entries[n][n] = last;
    let mut k = n;
    for i in 0..size {
        for j in i + 1..size {
            entries[i][j] = var(k);
            k += 1;
        }
    }
    for j in 0..size {
        for i in j + 1..size {
            entries[i][j] = var(k);
            k += 1;
        }
    }
    debug_assert_eq!(k, n * n + 2 * n);
    Ok(GenericMatrix { n, ctx, entries })
}

pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let size = a.len();
    let ctx = a[0][0].context().clone();
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let mut acc = MultiPoly::zero(&ctx);
                    for k in 0..size {
                        acc = &acc + &(&a[i][k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `a + c * id`
pub fn mat_shift(a: &PolyMatrix, c: &BigRational) -> PolyMatrix {
    let ctx = a[0][0].context().clone();
    let mut out = a.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = &row[i] + &MultiPoly::constant(&ctx, c.clone());
    }
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(a: &PolyMatrix) -> MultiPoly {
    let size = a.len();
    let ctx = a[0][0].context().clone();
    if size == 1 {
        return a[0][0].clone();
    }
    let mut acc = MultiPoly::zero(&ctx);
    for j in 0..size {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: PolyMatrix = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &a[0][j] * &determinant(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitStyle {
    /// Entries of the minimal polynomial evaluated at the generic matrix.
    Minpoly,
    /// Characteristic-polynomial values `det(A + s id)`.
    CharValues,
}

impl fmt::Display for OrbitStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitStyle::Minpoly => "minpoly",
            OrbitStyle::CharValues => "charvalues",
        })
    }
}

impl std::str::FromStr for OrbitStyle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minpoly" => Ok(OrbitStyle::Minpoly),
            "charvalues" => Ok(OrbitStyle::CharValues),
            other => Err(Error::Format(format!("unknown orbit style `{other}`"))),
        }
    }
}

/// A presentation of the adjoint orbit of `diag(spec)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitIdeal {
    pub spec: DiagSpec,
    pub style: OrbitStyle,
    pub presentation: IdealPresentation,
}

const ORBIT_TAG: &str = "orbit:";

impl OrbitIdeal {
    pub fn n(&self) -> usize {
        self.spec.len() - 1
    }

    pub fn metadata(&self) -> Value {
        json!({ "style": self.style.to_string(), "spec": self.spec.to_json() })
    }

    /// Ideal file with a `# orbit: {...}` metadata line.
    pub fn to_ideal_file(&self) -> String {
        write_ideal_file(&self.presentation, &[format!("{ORBIT_TAG} {}", self.metadata())])
    }

    /// Recovers the orbit from an ideal file written by [`Self::to_ideal_file`].
    pub fn from_ideal_file(file: &IdealFile) -> Result<Self> {
        let meta = file
            .comments
            .iter()
            .find_map(|c| c.strip_prefix(ORBIT_TAG))
            .ok_or_else(|| Error::Format("ideal file has no `# orbit:` metadata".into()))?;
        let meta: Value = serde_json::from_str(meta.trim()).map_err(|e| Error::Format(e.to_string()))?;
        let style = meta["style"]
            .as_str()
            .ok_or_else(|| Error::Format("metadata lacks `style`".into()))?
            .parse()?;
        let spec = DiagSpec::from_json(&meta["spec"])?;
        let expected = generic_matrix(spec.len() - 1)?;
        if file.ideal.context() != expected.context() {
            return Err(Error::Format(format!(
                "variables `{}` do not match sl({}) coordinates `{}`",
                file.ideal.context(),
                spec.len(),
                expected.context()
            )));
        }
        Ok(OrbitIdeal { spec, style, presentation: file.ideal.clone() })
    }
}

fn flatten(m: PolyMatrix) -> Vec<MultiPoly> {
    m.into_iter().flatten().collect()
}

/// Ideal generated by the entries of `prod over distinct λ of (A - λ id)`.
pub fn orbit_ideal_minpoly(spec: &DiagSpec) -> Result<OrbitIdeal> {
    let distinct = spec.distinct();
    if distinct.len() < 2 {
        return Err(Error::InvalidSpec("all eigenvalues are equal".into()));
    }
    let a = generic_matrix(spec.len() - 1)?;
    let mut prod = mat_shift(a.entries(), &-distinct[0].clone());
    for lambda in &distinct[1..] {
        prod = mat_mul(&prod, &mat_shift(a.entries(), &-lambda.clone()));
    }
    let presentation = IdealPresentation::new(a.context(), flatten(prod))?;
    Ok(OrbitIdeal { spec: spec.clone(), style: OrbitStyle::Minpoly, presentation })
}

/// Ideal generated by `det(A + s id)` for each shift `s`.
pub fn orbit_ideal_charvalues(spec: &DiagSpec, shifts: &[BigRational]) -> Result<OrbitIdeal> {
    let n = spec.len() - 1;
    if shifts.len() != n {
        return Err(Error::InvalidSpec(format!("expected {n} shifts, got {}", shifts.len())));
    }
    if shifts.iter().collect::<BTreeSet<_>>().len() != shifts.len() {
        return Err(Error::InvalidSpec("shifts must be distinct".into()));
    }
    for s in shifts {
        if !spec.eigenvalues().contains(&-s.clone()) {
            return Err(Error::InvalidSpec(format!("-({}) is not an eigenvalue of {spec}", format_rational(s))));
        }
    }
    let a = generic_matrix(n)?;
    let gens = shifts.iter().map(|s| determinant(&mat_shift(a.entries(), s))).collect();
    let presentation = IdealPresentation::new(a.context(), gens)?;
    Ok(OrbitIdeal { spec: spec.clone(), style: OrbitStyle::CharValues, presentation })
}

/// The linear function `tr(H A)` on the generic matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potential {
    pub poly: MultiPoly,
    /// False when `H` has repeated entries, so the fibration is not Lefschetz.
    pub regular: bool,
}

pub fn potential(h: &DiagSpec, n: usize) -> Result<Potential> {
    if h.len() != n + 1 {
        return Err(Error::InvalidSpec(format!("H has {} entries, sl({}) needs {}", h.len(), n + 1, n + 1)));
    }
    let a = generic_matrix(n)?;
    let mut poly = MultiPoly::zero(a.context());
    for (i, hi) in h.eigenvalues().iter().enumerate() {
        poly = &poly + &a.entry(i, i).scale(hi);
    }
    Ok(Potential { poly, regular: h.is_regular() })
}

/// Critical points `w(H0)` of the potential (one per coset of the stabiliser)
/// and the set of critical values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalData {
    pub points: Vec<Vec<BigRational>>,
    /// Ascending, without repeats.
    pub values: Vec<BigRational>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

pub fn weyl_critical(h: &DiagSpec, h0: &DiagSpec) -> Result<CriticalData> {
    if h.len() != h0.len() {
        return Err(Error::InvalidSpec(format!("H has {} entries but H0 has {}", h.len(), h0.len())));
    }
    let mut points: Vec<Vec<BigRational>> = Vec::new();
    for perm in permutations(h0.len()) {
        let p: Vec<BigRational> = perm.iter().map(|&i| h0.eigenvalues()[i].clone()).collect();
        if !points.contains(&p) {
            points.push(p);
        }
    }
    let values: BTreeSet<BigRational> = points
        .iter()
        .map(|p| h.eigenvalues().iter().zip(p).map(|(a, b)| a * b).sum())
        .collect();
    Ok(CriticalData { points, values: values.into_iter().collect() })
}

/// `O + <f_H - c>`.
pub fn fibre_ideal(orbit: &OrbitIdeal, h: &DiagSpec, c: &BigRational) -> Result<IdealPresentation> {
    let pot = potential(h, orbit.n())?;
    if pot.poly.context() != orbit.presentation.context() {
        return Err(Error::ContextMismatch);
    }
    let shifted = &pot.poly - &MultiPoly::constant(pot.poly.context(), c.clone());
    orbit.presentation.with_generator(shifted)
}

/// The closure of `H0 + n+` for `H0 = diag(n, -1, ..., -1)`: the family
/// with diagonal `(n t, -t, ..., -t)` and first row `(n t, y1, ..., yn)`,
/// embedded in projective space through `[t, y1, ..., yn]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerticalFibre {
    pub ctx: Ctx,
    pub matrix: PolyMatrix,
    pub embedding: Vec<MultiPoly>,
}

pub fn vertical_fibre_closure(n: usize) -> Result<VerticalFibre> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be at least 1".into()));
    }
    let mut names = vec!["t".to_string()];
    if n == 1 {
        names.push("y".into());
    } else {
        names.extend((1..=n).map(|i| format!("y{i}")));
    }
    let ctx = VarContext::new(&names)?;
    let t = MultiPoly::var_at(&ctx, 0);
    let size = n + 1;
    let mut matrix = vec![vec![MultiPoly::zero(&ctx); size]; size];
    matrix[0][0] = t.scale(&BigRational::from_integer(n.into()));
    for (i, row) in matrix.iter_mut().enumerate().skip(1) {
        row[i] = -&t;
    }
    for j in 1..size {
        matrix[0][j] = MultiPoly::var_at(&ctx, j);
    }
    let embedding = (0..size).map(|k| MultiPoly::var_at(&ctx, k)).collect();
    Ok(VerticalFibre { ctx, matrix, embedding })
}

impl VerticalFibre {
    /// The affine slice `t = 1`, i.e. `H0 + n+` with the `y` as free entries.
    pub fn affine_slice(&self) -> Result<PolyMatrix> {
        let one = BigRational::one();
        self.matrix
            .iter()
            .map(|row| row.iter().map(|e| e.specialize_and_drop("t", &one)).collect())
            .collect()
    }
}
