//! First-degree right coactions `Ψ: A → A ⊗ H` of `H = A(SU_q(2))`.
//!
//! A candidate is given by eight coefficient matrices:
//!
//! ```text
//! Ψ(z)  = (A z + A' z^*) ⊗ a + (B z + B' z^*) ⊗ b
//!       + (C z + C' z^*) ⊗ a^* + (D z + D' z^*) ⊗ b^*
//! Ψ(z^*) = Ψ(z)^*
//! ```
//!
//! This module applies `Ψ`, extracts the matrix equations that
//! coassociativity imposes by expanding both sides in `A ⊗ H ⊗ H`, and
//! checks the counit, homomorphism and *-map conditions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hopf::{Hopf, A as HA, A_STAR as HA_STAR, B as HB, B_STAR as HB_STAR};
use crate::ncpoly::{Element, Letter};
use crate::presentation::{preset_bl, preset_suq2, preset_vs_over, Param, Presentation};
use crate::report::{Check, Params, Report};
use crate::sample;
use crate::scalar::{GaussRational, Rational, Scalar};
use crate::tensor::TensorElement;

/// Square matrix of scalars.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Matrix {
    rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix { rows: vec![vec![Scalar::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.rows[i][i] = Scalar::one();
        }
        m
    }

    /// Matrix with the given nonzero entries.
    pub fn sparse(n: usize, entries: &[(usize, usize, Scalar)]) -> Self {
        let mut m = Self::zero(n);
        for (i, j, v) in entries {
            m.rows[*i][*j] = v.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("coefficient matrix must be square".into()));
        }
        Ok(Matrix { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Scalar::is_zero)
    }

    /// Number of nonzero entries.
    pub fn nonzero_entries(&self) -> usize {
        self.rows.iter().flatten().filter(|s| !s.is_zero()).count()
    }

    /// Entrywise complex conjugate (not transposed).
    pub fn conj(&self) -> Self {
        Matrix { rows: self.rows.iter().map(|r| r.iter().map(Scalar::conj).collect()).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix { rows: self.rows.iter().map(|r| r.iter().map(|x| x * s).collect()).collect() }
    }

    pub fn map(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<Self> {
        let mut rows = Vec::with_capacity(self.dim());
        for r in &self.rows {
            rows.push(r.iter().map(&mut f).collect::<Result<Vec<_>>>()?);
        }
        Ok(Matrix { rows })
    }

    /// Whether every column has at most one nonzero entry.
    pub fn has_bare_columns(&self) -> bool {
        (0..self.dim()).all(|j| (0..self.dim()).filter(|&i| !self.rows[i][j].is_zero()).count() <= 1)
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        Matrix {
            rows: self.rows.iter().zip(&o.rows).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        Matrix {
            rows: self.rows.iter().zip(&o.rows).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&Scalar::from_int(-1))
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = &self.rows[i][k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = &o.rows[k][j];
                    if !y.is_zero() {
                        out.rows[i][j] += &(x * y);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Names of the eight coefficient matrices, in JSON key order.
pub const MATRIX_KEYS: [&str; 8] = ["A", "Ap", "B", "Bp", "C", "Cp", "D", "Dp"];

/// The coefficient matrices of a first-degree coaction candidate together
/// with the name of the presentation it acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionSpec {
    pub presentation: String,
    pub a: Matrix,
    pub ap: Matrix,
    pub b: Matrix,
    pub bp: Matrix,
    pub c: Matrix,
    pub cp: Matrix,
    pub d: Matrix,
    pub dp: Matrix,
}

impl CoactionSpec {
    /// All matrices zero.
    pub fn zero(presentation: impl Into<String>, n: usize) -> Self {
        let z = Matrix::zero(n);
        CoactionSpec {
            presentation: presentation.into(),
            a: z.clone(),
            ap: z.clone(),
            b: z.clone(),
            bp: z.clone(),
            c: z.clone(),
            cp: z.clone(),
            d: z.clone(),
            dp: z,
        }
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// Matrices in the order of [`MATRIX_KEYS`].
    pub fn matrices(&self) -> [&Matrix; 8] {
        [&self.a, &self.ap, &self.b, &self.bp, &self.c, &self.cp, &self.d, &self.dp]
    }

    pub fn matrices_mut(&mut self) -> [&mut Matrix; 8] {
        [&mut self.a, &mut self.ap, &mut self.b, &mut self.bp, &mut self.c, &mut self.cp, &mut self.d, &mut self.dp]
    }

    /// Applies `f` to every entry of every matrix.
    pub fn map(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<Self> {
        let mut out = self.clone();
        for m in out.matrices_mut() {
            *m = m.map(&mut f)?;
        }
        Ok(out)
    }

    /// Substitutes a unit value for the symbolic parameter `w`.
    pub fn at_omega(&self, omega: &GaussRational) -> Result<Self> {
        self.map(|s| s.specialize_w(omega))
    }

    /// `Ψ(z_j)` for plain letters and `Ψ(z_j)^*` for starred ones.
    pub fn psi_letter(&self, l: Letter) -> TensorElement {
        let j = l.index as usize;
        let mut out = TensorElement::zero(2);
        let pairs: [(&Matrix, bool, Letter); 8] = [
            (&self.a, false, HA),
            (&self.ap, true, HA),
            (&self.b, false, HB),
            (&self.bp, true, HB),
            (&self.c, false, HA_STAR),
            (&self.cp, true, HA_STAR),
            (&self.d, false, HB_STAR),
            (&self.dp, true, HB_STAR),
        ];
        for (m, star, h) in pairs {
            for k in 0..self.dim() {
                let v = m.get(j, k);
                if !v.is_zero() {
                    out.add_term(vec![vec![Letter { index: k as u16, star }], vec![h]], v.clone());
                }
            }
        }
        if l.star {
            out.adjoint()
        } else {
            out
        }
    }

    /// `Ψ` on a word, not normalized.
    pub fn psi_word(&self, w: &[Letter]) -> TensorElement {
        let mut acc = TensorElement::one(2);
        for &l in w {
            acc = &acc * &self.psi_letter(l);
        }
        acc
    }

    fn check_dims(&self, pres: &Presentation) -> Result<()> {
        if self.dim() != pres.generator_count() || self.matrices().iter().any(|m| m.dim() != self.dim()) {
            return Err(Error::Invalid(format!(
                "coefficient matrices of size {} do not match {} generators",
                self.dim(),
                pres.generator_count()
            )));
        }
        Ok(())
    }

    /// `Ψ(e)`, normalized slotwise in `pres ⊗ H`.
    pub fn psi_apply(&self, e: &Element, pres: &Presentation, h: &Presentation) -> Result<TensorElement> {
        self.check_dims(pres)?;
        let mut acc = TensorElement::zero(2);
        for (w, c) in e.terms() {
            acc = &acc + &self.psi_word(w).scale(c);
        }
        acc.normalize(&[pres, h])
    }

    /// `A + C − I` and `A' + C'`.
    pub fn counit_residuals(&self) -> (Matrix, Matrix) {
        (&(&self.a + &self.c) - &Matrix::identity(self.dim()), &self.ap + &self.cp)
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("presentation".into(), json!(self.presentation));
        for (k, m) in MATRIX_KEYS.iter().zip(self.matrices()) {
            let flat: Vec<String> = m.rows().iter().flatten().map(|s| s.to_string()).collect();
            obj.insert((*k).into(), json!(flat));
        }
        Value::Object(obj)
    }

    /// Reads the JSON form: each matrix is a row-major array of scalar
    /// strings, either flat or nested by rows.
    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Invalid("coaction spec must be a JSON object".into()))?;
        let presentation = obj
            .get("presentation")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Invalid("coaction spec needs a \"presentation\" string".into()))?
            .to_string();
        let n = presentation_by_name(&presentation)?.generator_count();
        let mut spec = CoactionSpec::zero(presentation, n);
        for (k, m) in MATRIX_KEYS.iter().zip(spec.matrices_mut()) {
            let Some(entry) = obj.get(*k) else { continue };
            let arr = entry.as_array().ok_or_else(|| Error::Invalid(format!("\"{k}\" must be an array")))?;
            let flat: Vec<&Value> = if arr.iter().all(Value::is_array) {
                arr.iter().flat_map(|r| r.as_array().unwrap().iter()).collect()
            } else {
                arr.iter().collect()
            };
            if flat.len() != n * n {
                return Err(Error::Invalid(format!("\"{k}\" has {} entries, expected {}", flat.len(), n * n)));
            }
            for (idx, x) in flat.iter().enumerate() {
                let s = match x {
                    Value::String(s) => s.parse::<Scalar>()?,
                    Value::Number(num) => num.to_string().parse::<Scalar>()?,
                    _ => return Err(Error::Invalid(format!("\"{k}\" entries must be scalar strings"))),
                };
                m.set(idx / n, idx % n, s);
            }
        }
        Ok(spec)
    }
}

/// Resolves presentation names as produced by the presets: `SUq2`, `S7q`
/// (also `bl`), `VS<d>` over `p` and `VS<d>-q` over `q`, where `d = 2m + 1`.
/// Matching ignores case.
pub fn presentation_by_name(name: &str) -> Result<Presentation> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "suq2" => return Ok(preset_suq2()),
        "bl" | "s7q" => return Ok(preset_bl()),
        _ => {}
    }
    if let Some(rest) = lower.strip_prefix("vs") {
        let (num, param) = match rest.strip_suffix("-q") {
            Some(d) => (d, Param::Q),
            None => (rest, Param::P),
        };
        if let Ok(d) = num.parse::<usize>() {
            if d >= 3 && d % 2 == 1 {
                return preset_vs_over((d - 1) / 2, param);
            }
        }
    }
    Err(Error::Invalid(format!("unknown presentation `{name}`")))
}

/// The letters `a`, `b`, `b^*` labelling rows of the coassociativity table.
const ROW_LETTERS: [Letter; 3] = [HA, HB, HB_STAR];

/// Row labels `(X, Y)` for terms `− ⊗ X ⊗ Y`, in table order.
pub fn table_rows() -> Vec<(Letter, Letter)> {
    let mut rows = Vec::new();
    for y in ROW_LETTERS {
        for x in ROW_LETTERS {
            rows.push((x, y));
        }
    }
    rows
}

pub fn h_letter_name(l: Letter) -> &'static str {
    match (l.index, l.star) {
        (0, false) => "a",
        (0, true) => "a*",
        (1, false) => "b",
        _ => "b*",
    }
}

/// `(Ψ⊗id)Ψ(z_j) − (id⊗Δ)Ψ(z_j)` for every generator `z_j`.
pub fn coassociativity_tensors(spec: &CoactionSpec, hopf: &Hopf) -> Vec<TensorElement> {
    (0..spec.dim())
        .map(|j| {
            let psi = spec.psi_letter(Letter::plain(j as u16));
            let left = psi.expand_slot(0, |w| Ok(spec.psi_word(w))).expect("psi images are two-fold tensors");
            let right =
                psi.expand_slot(1, |w| Ok(hopf.coproduct_word(w))).expect("coproduct images are two-fold tensors");
            &left - &right
        })
        .collect()
}

/// Extracts the coefficient matrices of `z_k ⊗ X ⊗ Y` (left) and
/// `z_k^* ⊗ X ⊗ Y` (right) from the per-generator residuals.
fn extract(res: &[TensorElement], x: Letter, y: Letter) -> (Matrix, Matrix) {
    let n = res.len();
    let mut left = Matrix::zero(n);
    let mut right = Matrix::zero(n);
    for (j, r) in res.iter().enumerate() {
        for k in 0..n {
            let key = |star| vec![vec![Letter { index: k as u16, star }], vec![x], vec![y]];
            left.set(j, k, r.coeff(&key(false)));
            right.set(j, k, r.coeff(&key(true)));
        }
    }
    (left, right)
}

/// The 18 matrix residuals of coassociativity (9 rows × left/right column),
/// computed by expanding both sides in `A ⊗ H ⊗ H`. Entries are ordered
/// row by row, left column first.
pub fn coassociativity_residuals(spec: &CoactionSpec) -> Vec<Matrix> {
    let hopf = Hopf::new();
    let res = coassociativity_tensors(spec, &hopf);
    let mut out = Vec::with_capacity(18);
    for (x, y) in table_rows() {
        let (l, r) = extract(&res, x, y);
        out.push(l);
        out.push(r);
    }
    out
}

/// The same 18 residuals evaluated from the literal matrix equations
/// `lhs − rhs` of the coefficient table, valid when `C' = −A'`.
pub fn table1_residuals(spec: &CoactionSpec) -> Vec<Matrix> {
    let (a, ap, b, bp, c, d, dp) = (&spec.a, &spec.ap, &spec.b, &spec.bp, &spec.c, &spec.d, &spec.dp);
    let (apb, bb, bpb, cb, db, dpb) = (ap.conj(), b.conj(), bp.conj(), c.conj(), d.conj(), dp.conj());
    let q = Scalar::q();
    let mq = -&q;
    vec![
        // − ⊗ a ⊗ a
        &(&(a * a) - &(ap * &apb)) - a,
        &(&(a * ap) + &(ap * &cb)) - ap,
        // − ⊗ b ⊗ a
        &(a * b) + &(ap * &dpb),
        &(a * bp) + &(ap * &db),
        // − ⊗ b^* ⊗ a
        &(&(a * d) + &(ap * &bpb)) - d,
        &(&(a * dp) + &(ap * &bb)) - dp,
        // − ⊗ a ⊗ b
        &(&(b * a) - &(bp * &apb)) - b,
        &(&(b * ap) + &(bp * &cb)) - bp,
        // − ⊗ b ⊗ b
        &(b * b) + &(bp * &dpb),
        &(b * bp) + &(bp * &db),
        // − ⊗ b^* ⊗ b
        &(&(b * d) + &(bp * &bpb)) - &c.scale(&mq),
        &(&(b * dp) + &(bp * &bb)) - &ap.scale(&q),
        // − ⊗ a ⊗ b^*
        &(d * a) - &(dp * &apb),
        &(d * ap) + &(dp * &cb),
        // − ⊗ b ⊗ b^*
        &(&(d * b) + &(dp * &dpb)) - &a.scale(&mq),
        &(&(d * bp) + &(dp * &db)) - &ap.scale(&mq),
        // − ⊗ b^* ⊗ b^*
        &(d * d) + &(dp * &bpb),
        &(d * dp) + &(dp * &bb),
    ]
}

/// Label of the `k`-th table residual, e.g. `b*⊗a/left`.
pub fn table_label(k: usize) -> String {
    let (x, y) = table_rows()[k / 2];
    let side = if k.is_multiple_of(2) { "left" } else { "right" };
    format!("{}⊗{}/{side}", h_letter_name(x), h_letter_name(y))
}

/// `Ψ(lhs) − Ψ(rhs)` for every defining relation and displayed identity of
/// `pres`, normalized in `pres ⊗ H`.
pub fn homomorphism_residuals(spec: &CoactionSpec, pres: &Presentation) -> Result<Vec<(String, TensorElement)>> {
    let h = preset_suq2();
    let mut out = Vec::new();
    for (k, (l, r)) in pres.displayed_relations().iter().enumerate() {
        let id = if k < pres.base_rules.len() {
            format!("relation{k:02}")
        } else {
            format!("identity{:02}", k - pres.base_rules.len())
        };
        out.push((id, spec.psi_apply(&(l - r), pres, &h)?));
    }
    Ok(out)
}

/// Seed for the random elements used by the *-map check.
pub const STAR_SEED: u64 = 0x5eed_0003;

/// Optional numeric point at which residual coefficients are evaluated
/// before counting; `None` keeps everything symbolic.
pub type Point = Option<(Rational, Rational)>;

fn count_terms(t: &TensorElement, point: &Point) -> Result<usize> {
    match point {
        None => Ok(t.len()),
        Some((tv, uv)) => Ok(t.map_coeffs(|c| c.specialize(tv, uv))?.len()),
    }
}

fn count_matrix(m: &Matrix, point: &Point) -> Result<usize> {
    match point {
        None => Ok(m.nonzero_entries()),
        Some((tv, uv)) => Ok(m.map(|c| c.specialize(tv, uv))?.nonzero_entries()),
    }
}

/// Full verification: counit (matrix level and recomputed on generators),
/// coassociativity on every generator, homomorphism on every displayed
/// relation, and the *-map property on random elements.
pub fn verify(spec: &CoactionSpec, pres: &Presentation) -> Result<Report> {
    verify_at(spec, pres, &None)
}

/// [`verify`] with residual coefficients evaluated at `point` if given.
pub fn verify_at(spec: &CoactionSpec, pres: &Presentation, point: &Point) -> Result<Report> {
    spec.check_dims(pres)?;
    let hopf = Hopf::new();
    let h = hopf.presentation();
    let mut checks = Vec::new();
    let (c1, c2) = spec.counit_residuals();
    checks.push(Check::from_residual("counit/A+C-I", count_matrix(&c1, point)?));
    checks.push(Check::from_residual("counit/Ap+Cp", count_matrix(&c2, point)?));
    for j in 0..spec.dim() {
        let z = Element::letter(Letter::plain(j as u16));
        let psi = spec.psi_apply(&z, pres, h)?;
        let back = psi.contract_slot(1, |w| hopf.counit_word(w));
        let res = &back - &TensorElement::tensor(&[&z]);
        checks.push(Check::from_residual(format!("counit/{}", pres.generator_names[j]), count_terms(&res, point)?));
    }
    let res = coassociativity_tensors(spec, &hopf);
    for (j, r) in res.iter().enumerate() {
        let r = r.normalize(&[pres, h, h])?;
        checks.push(Check::from_residual(
            format!("coassociativity/{}", pres.generator_names[j]),
            count_terms(&r, point)?,
        ));
    }
    for (id, r) in homomorphism_residuals(spec, pres)? {
        checks.push(Check::from_residual(format!("homomorphism/{id}"), count_terms(&r, point)?));
    }
    let mut rng = sample::rng(STAR_SEED);
    for k in 0..5 {
        let e = sample::element(&mut rng, pres.generator_count(), 2);
        let lhs = spec.psi_apply(&e.adjoint(), pres, h)?;
        let rhs = spec.psi_apply(&e, pres, h)?.adjoint().normalize(&[pres, h])?;
        checks.push(Check::from_residual(format!("star-map/random{k:02}"), count_terms(&(&lhs - &rhs), point)?));
    }
    let params =
        Params { t: point.as_ref().map(|p| p.0.to_string()), u: point.as_ref().map(|p| p.1.to_string()), omega: None };
    Ok(Report::new(format!("coaction/{}", pres.name), params, checks))
}

/// Named families of coactions known in closed form. Entries may contain the
/// symbolic unit parameter `w`.
pub mod families {
    use super::*;

    /// Names accepted by [`by_name`].
    pub const NAMES: [&str; 7] = ["coproduct", "vs3-one", "vs3-two", "vs3-three", "bl-a", "bl-b", "brain-landi"];

    fn q() -> Scalar {
        Scalar::q()
    }

    fn w() -> Scalar {
        Scalar::w()
    }

    fn diag(n: usize, ones: &[usize]) -> Matrix {
        Matrix::sparse(n, &ones.iter().map(|&i| (i, i, Scalar::one())).collect::<Vec<_>>())
    }

    /// The coproduct of `A(SU_q(2))` viewed as a coaction on itself.
    pub fn coproduct() -> CoactionSpec {
        let mut s = CoactionSpec::zero("SUq2", 2);
        s.a = diag(2, &[0]);
        s.b = Matrix::sparse(2, &[(1, 0, Scalar::one())]);
        s.c = diag(2, &[1]);
        s.d = Matrix::sparse(2, &[(0, 1, -&q())]);
        s
    }

    /// `Ψ(z_0) = z_0⊗a − ωq z_1^*⊗b^*`, `Ψ(z_1) = z_1⊗a + ω z_0^*⊗b^*`.
    ///
    /// The sign on `z_0^*⊗b^*` follows from `d'_{01} conj(d'_{10}) = −q`; with
    /// `−ω` there the family is neither coassociative nor multiplicative.
    pub fn vs3_one() -> CoactionSpec {
        let mut s = CoactionSpec::zero("VS3-q", 2);
        s.a = Matrix::identity(2);
        s.dp = Matrix::sparse(2, &[(0, 1, -&(&w() * &q())), (1, 0, w())]);
        s
    }

    /// `Ψ(z_0) = z_0⊗a^* − ωq z_1^*⊗b`, `Ψ(z_1) = z_1⊗a^* + ω z_0^*⊗b`.
    ///
    /// Coassociative and counital, but not multiplicative: `Ψ(z_1 z_0 − q z_0 z_1)`
    /// leaves `ω(1 − q²) 1⊗b a^*`.
    pub fn vs3_two() -> CoactionSpec {
        let mut s = CoactionSpec::zero("VS3-q", 2);
        s.c = Matrix::identity(2);
        s.bp = Matrix::sparse(2, &[(0, 1, -&(&w() * &q())), (1, 0, w())]);
        s
    }

    /// `Ψ(a) = a⊗a − ωq b⊗b^*`, `Ψ(b) = b⊗a^* + ω̄ a⊗b`.
    pub fn vs3_three() -> CoactionSpec {
        let mut s = CoactionSpec::zero("VS3-q", 2);
        s.a = diag(2, &[0]);
        s.c = diag(2, &[1]);
        s.d = Matrix::sparse(2, &[(0, 1, -&(&w() * &q()))]);
        s.b = Matrix::sparse(2, &[(1, 0, w().conj())]);
        s
    }

    /// Block-diagonal `T` with both blocks `[[0, 1], [-q, 0]]`.
    pub fn t_matrix() -> Matrix {
        Matrix::sparse(4, &[(0, 1, Scalar::one()), (1, 0, -&q()), (2, 3, Scalar::one()), (3, 2, -&q())])
    }

    /// `A = I`, `Ψ(x) = x⊗a + ωT(x^*)⊗b^*`.
    pub fn bl_a() -> CoactionSpec {
        let mut s = CoactionSpec::zero("S7q", 4);
        s.a = Matrix::identity(4);
        s.dp = t_matrix().scale(&w());
        s
    }

    /// `A = 0`, `Ψ'(x) = x⊗a^* + ωT(x^*)⊗b`.
    ///
    /// Coassociative and counital, but `Ψ'` does not respect `x_0^* x_0 = x_0 x_0^*`.
    pub fn bl_b() -> CoactionSpec {
        let mut s = CoactionSpec::zero("S7q", 4);
        s.c = Matrix::identity(4);
        s.bp = t_matrix().scale(&w());
        s
    }

    /// The original quaternionic coaction: `bl_a` at `ω = 1`.
    pub fn brain_landi() -> CoactionSpec {
        bl_a().at_omega(&GaussRational::from_int(1)).expect("unit omega")
    }

    pub fn by_name(name: &str) -> Result<CoactionSpec> {
        Ok(match name {
            "coproduct" => coproduct(),
            "vs3-one" => vs3_one(),
            "vs3-two" => vs3_two(),
            "vs3-three" => vs3_three(),
            "bl-a" => bl_a(),
            "bl-b" => bl_b(),
            "brain-landi" => brain_landi(),
            _ => return Err(Error::Invalid(format!("unknown coaction family `{name}`"))),
        })
    }
}

/// A random counit-consistent spec (`C = I − A`, `C' = −A'`) with sparse
/// entries drawn from small Gaussian rationals times powers of `t` and `w`.
pub fn random_spec(rng: &mut impl rand::Rng, n: usize) -> CoactionSpec {
    let mut s = CoactionSpec::zero("random", n);
    for m in s.matrices_mut() {
        for i in 0..n {
            for j in 0..n {
                if rng.random_bool(0.4) {
                    m.set(i, j, sample::scalar(rng, false, true));
                }
            }
        }
    }
    s.c = &Matrix::identity(n) - &s.a;
    s.cp = -&s.ap;
    s
}

/// Formats an `A ⊗ H` tensor with generator names.
pub fn display_tensor(t: &TensorElement, pres: &Presentation) -> String {
    let h = ["a".to_string(), "b".to_string()];
    let names: Vec<&[String]> = vec![&pres.generator_names, &h, &h];
    t.display(&names[..t.arity().min(3)])
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn psi_of_generator_for_coproduct_spec() {
        let spec = coproduct();
        let pres = preset_suq2();
        let psi = spec.psi_apply(&Element::letter(Letter::plain(0)), &pres, &pres).unwrap();
        let hopf = Hopf::new();
        assert_eq!(psi, hopf.coproduct(&Element::letter(HA)).unwrap());
        let one = spec.psi_apply(&Element::one(), &pres, &pres).unwrap();
        assert_eq!(one, TensorElement::one(2));
    }

    #[test]
    fn psi_of_x0_for_brain_landi() {
        let spec = brain_landi();
        let bl = preset_bl();
        let h = preset_suq2();
        let psi = spec.psi_apply(&bl.element("x0").unwrap(), &bl, &h).unwrap();
        let expect = &TensorElement::tensor(&[&bl.element("x0").unwrap(), &Element::letter(HA)])
            + &TensorElement::tensor(&[&bl.element("x1*").unwrap(), &Element::letter(HB_STAR)]);
        assert_eq!(psi, expect);
    }

    #[test]
    fn counit_examples() {
        let (r1, r2) = brain_landi().counit_residuals();
        assert!(r1.is_zero() && r2.is_zero());
        let zero = CoactionSpec::zero("SUq2", 2);
        let (r1, _) = zero.counit_residuals();
        assert_eq!(r1, -&Matrix::identity(2));
    }

    #[test]
    fn table_row_examples() {
        // row b^*⊗b, left column, for the coproduct spec
        let t = table1_residuals(&coproduct());
        assert!(t[10].is_zero());
        // D' conj(D') = -q I for Brain–Landi, so row b⊗b^* left vanishes
        let bl = brain_landi();
        assert_eq!(&bl.dp * &bl.dp.conj(), Matrix::identity(4).scale(&-&Scalar::q()));
        assert!(table1_residuals(&bl)[14].is_zero());
    }

    #[test]
    fn table_matches_expansion_on_families() {
        for name in families::NAMES {
            let spec = by_name(name).unwrap();
            assert_eq!(coassociativity_residuals(&spec), table1_residuals(&spec), "{name}");
            assert!(table1_residuals(&spec).iter().all(Matrix::is_zero), "{name}");
        }
    }

    #[test]
    fn table_matches_expansion_on_random_specs() {
        let mut rng = sample::rng(11);
        for _ in 0..10 {
            let spec = random_spec(&mut rng, 2);
            assert_eq!(coassociativity_residuals(&spec), table1_residuals(&spec));
        }
    }

    #[test]
    fn brain_landi_columns_are_bare() {
        let spec = brain_landi();
        assert!(spec.matrices().iter().all(|m| m.has_bare_columns()));
    }

    #[test]
    fn perturbed_brain_landi_breaks_a_relation() {
        let mut spec = brain_landi();
        let v = spec.dp.get(0, 1).clone();
        spec.dp.set(0, 1, -&v);
        let bl = preset_bl();
        let res = homomorphism_residuals(&spec, &bl).unwrap();
        // x1 x0 = q^-1 x0 x1 is the first defining relation
        assert!(!res[0].1.is_zero());
    }

    #[test]
    fn a_equal_identity_families_verify() {
        let vs = preset_vs_over(1, Param::Q).unwrap();
        for spec in [coproduct(), vs3_one(), vs3_three()] {
            assert!(verify(&spec, &vs).unwrap().passed());
        }
        let omega = GaussRational::new(crate::scalar::rat(3, 5), crate::scalar::rat(4, 5));
        let bl = preset_bl();
        assert!(verify(&bl_a().at_omega(&omega).unwrap(), &bl).unwrap().passed());
        assert!(verify(&bl_a(), &bl).unwrap().passed());
        assert!(verify(&vs3_one().at_omega(&GaussRational::from_int(1)).unwrap(), &vs).unwrap().passed());
    }

    #[test]
    fn vs3_three_at_one_is_the_coproduct() {
        let s = vs3_three().at_omega(&GaussRational::from_int(1)).unwrap();
        assert_eq!(s.matrices(), coproduct().matrices());
    }

    #[test]
    fn a_zero_families_are_not_multiplicative() {
        // z_1 z_0 − q z_0 z_1 ↦ ω(1 − q²) 1⊗b a^*, by hand
        let vs = preset_vs_over(1, Param::Q).unwrap();
        let h = preset_suq2();
        let rel = &vs.element("z1 z0").unwrap() - &vs.element("q z0 z1").unwrap();
        let got = vs3_two().psi_apply(&rel, &vs, &h).unwrap();
        let ba_star = vec![HB, HA_STAR];
        let expect = TensorElement::term(&Scalar::w() * &(&Scalar::one() - &Scalar::q_pow(2)), vec![vec![], ba_star]);
        assert_eq!(got, expect);

        // x_0^* x_0 − x_0 x_0^* under Ψ': the x_0 x_0^* ⊗ 1 coefficient is 2q² − 2
        let bl = preset_bl();
        let rel = &bl.element("x0* x0").unwrap() - &bl.element("x0 x0*").unwrap();
        let got = bl_b().psi_apply(&rel, &bl, &h).unwrap();
        let x0x0s = vec![Letter::plain(0), Letter::starred(0)];
        assert!(bl.system().is_irreducible(&x0x0s).unwrap());
        let two = Scalar::from_int(2);
        assert_eq!(got.coeff(&[x0x0s, vec![]]), &(&two * &Scalar::q_pow(2)) - &two);
    }

    #[test]
    fn json_round_trip() {
        let spec = vs3_three();
        let v = spec.to_json();
        assert_eq!(CoactionSpec::from_json(&v).unwrap(), spec);
    }
}
