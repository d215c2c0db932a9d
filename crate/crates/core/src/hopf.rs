//! Finite-dimensional (co/bi/Hopf) algebras given by structure constants on
//! an explicit basis, with exact verification of all axioms.
//!
//! Conventions: `mult[i][j]` is the coordinate vector of `e_i * e_j`;
//! `comult[i]` is the coordinate vector of `Delta(e_i)` in `k^(n^2)` with the
//! index map `(j, k) -> j*n + k`; `antipode[i]` is the coordinate vector of
//! `S(e_i)`.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;

/// Desk-scale cap on the basis dimension (the dense multiplication tensor
/// has n^3 entries).
pub const MAX_DIMENSION: usize = 64;

/// Structure-constant container. Construction validates shapes only;
/// the axioms are checked separately by [`verify_hopf_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    field: FieldSpec,
    dim: usize,
    basis_names: Vec<String>,
    mult: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
    comult: Vec<Vec<Scalar>>,
    counit: Vec<Scalar>,
    antipode: Vec<Vec<Scalar>>,
}

impl HopfAlgebraData {
    #[allow(clippy::too_many_arguments)]
    pub fn build_from_tables(
        field: FieldSpec,
        basis_names: Vec<String>,
        mult: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        comult: Vec<Vec<Scalar>>,
        counit: Vec<Scalar>,
        antipode: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        let n = basis_names.len();
        if n == 0 {
            return Err(Error::dimension("empty basis"));
        }
        if n > MAX_DIMENSION {
            return Err(Error::ResourceLimit(format!(
                "dimension {n} exceeds the supported maximum {MAX_DIMENSION}"
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in &basis_names {
            if name.is_empty() || !seen.insert(name.clone()) {
                return Err(Error::parse(format!(
                    "invalid or duplicate basis name '{name}'"
                )));
            }
        }
        let check_vec = |v: &[Scalar], len: usize, what: &str| -> Result<()> {
            if v.len() != len {
                return Err(Error::dimension(format!(
                    "{what} has length {}, expected {len}",
                    v.len()
                )));
            }
            for (k, s) in v.iter().enumerate() {
                if s.field() != field {
                    return Err(Error::FieldMismatch {
                        expected: field.to_string(),
                        found: format!("{} in {what}[{k}]", s.field()),
                    });
                }
            }
            Ok(())
        };
        if mult.len() != n {
            return Err(Error::dimension(format!(
                "mult has {} rows, expected {n}",
                mult.len()
            )));
        }
        for (i, row) in mult.iter().enumerate() {
            if row.len() != n {
                return Err(Error::dimension(format!(
                    "mult[{i}] has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                check_vec(v, n, &format!("mult[{i}][{j}]"))?;
            }
        }
        check_vec(&unit, n, "unit")?;
        if comult.len() != n {
            return Err(Error::dimension(format!(
                "comult has {} rows, expected {n}",
                comult.len()
            )));
        }
        for (i, v) in comult.iter().enumerate() {
            check_vec(v, n * n, &format!("comult[{i}]"))?;
        }
        check_vec(&counit, n, "counit")?;
        if antipode.len() != n {
            return Err(Error::dimension(format!(
                "antipode has {} rows, expected {n}",
                antipode.len()
            )));
        }
        for (i, v) in antipode.iter().enumerate() {
            check_vec(v, n, &format!("antipode[{i}]"))?;
        }
        Ok(HopfAlgebraData {
            field,
            dim: n,
            basis_names,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    pub fn mult_table(&self) -> &Vec<Vec<Vec<Scalar>>> {
        &self.mult
    }

    pub fn unit_vec(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn comult_table(&self) -> &Vec<Vec<Scalar>> {
        &self.comult
    }

    pub fn counit_vec(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_table(&self) -> &Vec<Vec<Scalar>> {
        &self.antipode
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] = &out[k] + &(&c * m);
                    }
                }
            }
        }
        out
    }

    pub fn comult_vec(&self, a: &[Scalar]) -> TensorSquare {
        let mut out = TensorSquare::zero(&self.field, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (idx, c) in self.comult[i].iter().enumerate() {
                if !c.is_zero() {
                    out.data[idx] = &out.data[idx] + &(x * c);
                }
            }
        }
        out
    }

    pub fn counit_of(&self, a: &[Scalar]) -> Scalar {
        let mut out = self.field.zero();
        for (i, x) in a.iter().enumerate() {
            if !x.is_zero() {
                out = &out + &(x * &self.counit[i]);
            }
        }
        out
    }

    pub fn antipode_vec(&self, a: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, s) in self.antipode[i].iter().enumerate() {
                if !s.is_zero() {
                    out[k] = &out[k] + &(x * s);
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by e_i (columns indexed by the right
    /// factor).
    pub fn left_mult_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field.clone(), self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.mult[i][j].iter().enumerate() {
                if !c.is_zero() {
                    m.set(k, j, c.clone());
                }
            }
        }
        m
    }

    /// Comultiplication as an (n^2 x n) matrix, columns Delta(e_i).
    pub fn comult_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field.clone(), self.dim * self.dim, self.dim);
        for i in 0..self.dim {
            for (idx, c) in self.comult[i].iter().enumerate() {
                if !c.is_zero() {
                    m.set(idx, i, c.clone());
                }
            }
        }
        m
    }

    /// Parse a linear expression in basis names, e.g. `g - 1` or `2*x + g*x`
    /// (names are atoms; a bare scalar multiplies the unit element 1_H).
    pub fn parse_element(&self, input: &str) -> Result<Vec<Scalar>> {
        let normalized: String = input.replace('\u{2212}', "-");
        let s: String = normalized.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::parse("empty element expression"));
        }
        let mut acc = vec![self.field.zero(); self.dim];
        for (term, negative) in crate::field::split_terms(&s)? {
            let (coeff, vec) = self.parse_element_term(&term)?;
            let coeff = if negative { -&coeff } else { coeff };
            for (k, v) in vec.iter().enumerate() {
                if !v.is_zero() {
                    acc[k] = &acc[k] + &(&coeff * v);
                }
            }
        }
        Ok(acc)
    }

    fn parse_element_term(&self, term: &str) -> Result<(Scalar, Vec<Scalar>)> {
        // `scalar*name`, `name`, or `scalar` (multiple of the unit).
        if let Some(i) = self.basis_index(term) {
            return Ok((self.field.one(), self.basis_vec(i)));
        }
        if let Ok(c) = self.field.parse_scalar(term) {
            return Ok((c, self.unit.clone()));
        }
        // split at each '*' position: longest scalar prefix with a known name
        let bytes: Vec<(usize, char)> = term.char_indices().collect();
        for (pos, ch) in bytes.iter().rev() {
            if *ch != '*' {
                continue;
            }
            let (head, tail) = term.split_at(*pos);
            let tail = &tail[1..];
            if let Some(i) = self.basis_index(tail) {
                if let Ok(c) = self.field.parse_scalar(head) {
                    return Ok((c, self.basis_vec(i)));
                }
            }
        }
        Err(Error::parse(format!(
            "cannot parse '{term}' as scalar*basis-name over {}",
            self.field
        )))
    }

    /// Render a coordinate vector as a combination of basis names.
    pub fn display_element(&self, v: &[Scalar]) -> String {
        let mut out = String::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (mag, negative) = match cs.strip_prefix('-') {
                Some(rest) => (rest.to_string(), true),
                None => (cs, false),
            };
            let simple = !mag.contains(['+', '-', ' ']);
            let coeff = if simple { mag } else { format!("({})", c) };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if coeff == "1" {
                out.push_str(&self.basis_names[i]);
            } else {
                out.push_str(&format!("{}*{}", coeff, self.basis_names[i]));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Validate the axioms and wrap the data for the analysis modules.
    pub fn verified(self) -> Result<VerifiedHopf> {
        let report = verify_hopf_axioms(&self);
        if let Some(check) = report.checks.iter().find(|c| !c.passed) {
            return Err(Error::structural(format!(
                "Hopf axiom '{}' fails: {}",
                check.name,
                check.witness.clone().unwrap_or_default()
            )));
        }
        Ok(VerifiedHopf(self))
    }
}

/// A Hopf algebra whose axioms have all been verified; the analysis modules
/// take this type so the precondition is carried by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifiedHopf(HopfAlgebraData);

impl VerifiedHopf {
    pub fn data(&self) -> &HopfAlgebraData {
        &self.0
    }

    pub fn into_data(self) -> HopfAlgebraData {
        self.0
    }
}

impl Deref for VerifiedHopf {
    type Target = HopfAlgebraData;
    fn deref(&self) -> &HopfAlgebraData {
        &self.0
    }
}

/// An element of H (x) H in the (j,k) -> j*n + k coordinate convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSquare {
    n: usize,
    data: Vec<Scalar>,
}

impl TensorSquare {
    pub fn zero(field: &FieldSpec, n: usize) -> Self {
        TensorSquare {
            n,
            data: vec![field.zero(); n * n],
        }
    }

    pub fn from_vec(n: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::dimension(format!(
                "tensor-square vector has length {}, expected {}",
                data.len(),
                n * n
            )));
        }
        Ok(TensorSquare { n, data })
    }

    /// u (x) v.
    pub fn of(field: &FieldSpec, u: &[Scalar], v: &[Scalar]) -> Self {
        let n = u.len();
        let mut out = TensorSquare::zero(field, n);
        for (j, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in v.iter().enumerate() {
                if !y.is_zero() {
                    out.data[j * n + k] = x * y;
                }
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, j: usize, k: usize) -> &Scalar {
        &self.data[j * self.n + k]
    }

    pub fn add(&self, rhs: &TensorSquare) -> TensorSquare {
        TensorSquare {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> TensorSquare {
        TensorSquare {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data.iter().enumerate().filter_map(move |(idx, c)| {
            if c.is_zero() {
                None
            } else {
                Some((idx / self.n, idx % self.n, c))
            }
        })
    }
}

/// Componentwise-on-legs product in H (x) H:
/// (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly.
pub fn tensor_square_multiply(
    h: &HopfAlgebraData,
    a: &TensorSquare,
    b: &TensorSquare,
) -> TensorSquare {
    tensor_square_multiply_raw(h.field(), h.mult_table(), a, b)
}

pub(crate) fn tensor_square_multiply_raw(
    field: &FieldSpec,
    mult: &[Vec<Vec<Scalar>>],
    a: &TensorSquare,
    b: &TensorSquare,
) -> TensorSquare {
    let n = a.n;
    let mut out = TensorSquare::zero(field, n);
    for (j, k, ca) in a.nonzero_entries() {
        for (l, m, cb) in b.nonzero_entries() {
            let c = ca * cb;
            let left = &mult[j][l];
            let right = &mult[k][m];
            for (u, lu) in left.iter().enumerate() {
                if lu.is_zero() {
                    continue;
                }
                let clu = &c * lu;
                for (v, rv) in right.iter().enumerate() {
                    if !rv.is_zero() {
                        out.data[u * n + v] = &out.data[u * n + v] + &(&clu * rv);
                    }
                }
            }
        }
    }
    out
}

/// One named axiom check with a witness basis index on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// The seven named checks, each an exact tensor identity evaluated on basis
/// elements (sufficient by multilinearity):
/// (1) associativity, (2) two-sided unit, (3) coassociativity, (4) counit,
/// (5) Delta is an algebra map, (6) epsilon is an algebra map,
/// (7) antipode law mu(S (x) id)Delta = unit . counit = mu(id (x) S)Delta.
pub fn verify_hopf_axioms(h: &HopfAlgebraData) -> AxiomReport {
    let n = h.dim;
    let mut checks = Vec::new();

    // (1) associativity
    let mut witness = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = h.mult[i][j].clone();
            for k in 0..n {
                let left = h.mul_vec(&ij, &h.basis_vec(k));
                let right = h.mul_vec(&h.basis_vec(i), &h.mult[j][k]);
                if left != right {
                    witness = Some(format!(
                        "(e_{i} e_{j}) e_{k} != e_{i} (e_{j} e_{k}) [basis {}, {}, {}]",
                        h.basis_names[i], h.basis_names[j], h.basis_names[k]
                    ));
                    break 'assoc;
                }
            }
        }
    }
    checks.push(AxiomCheck {
        name: "associativity",
        passed: witness.is_none(),
        witness,
    });

    // (2) two-sided unit
    let mut witness = None;
    for i in 0..n {
        let e = h.basis_vec(i);
        if h.mul_vec(&h.unit, &e) != e || h.mul_vec(&e, &h.unit) != e {
            witness = Some(format!("unit law fails on basis {}", h.basis_names[i]));
            break;
        }
    }
    checks.push(AxiomCheck {
        name: "unit",
        passed: witness.is_none(),
        witness,
    });

    // (3) coassociativity: (Delta (x) id)Delta = (id (x) Delta)Delta in k^(n^3)
    let mut witness = None;
    for i in 0..n {
        let d = &h.comult[i];
        let mut left = vec![h.field.zero(); n * n * n];
        let mut right = vec![h.field.zero(); n * n * n];
        for jk in 0..n * n {
            let c = &d[jk];
            if c.is_zero() {
                continue;
            }
            let (j, k) = (jk / n, jk % n);
            for (ab, cc) in h.comult[j].iter().enumerate() {
                if !cc.is_zero() {
                    let (a, b) = (ab / n, ab % n);
                    let idx = (a * n + b) * n + k;
                    left[idx] = &left[idx] + &(c * cc);
                }
            }
            for (ab, cc) in h.comult[k].iter().enumerate() {
                if !cc.is_zero() {
                    let (a, b) = (ab / n, ab % n);
                    let idx = (j * n + a) * n + b;
                    right[idx] = &right[idx] + &(c * cc);
                }
            }
        }
        if left != right {
            witness = Some(format!(
                "coassociativity fails on basis {}",
                h.basis_names[i]
            ));
            break;
        }
    }
    checks.push(AxiomCheck {
        name: "coassociativity",
        passed: witness.is_none(),
        witness,
    });

    // (4) counit: (eps (x) id)Delta = id = (id (x) eps)Delta
    let mut witness = None;
    for i in 0..n {
        let d = &h.comult[i];
        let mut left = vec![h.field.zero(); n];
        let mut right = vec![h.field.zero(); n];
        for jk in 0..n * n {
            let c = &d[jk];
            if c.is_zero() {
                continue;
            }
            let (j, k) = (jk / n, jk % n);
            left[k] = &left[k] + &(c * &h.counit[j]);
            right[j] = &right[j] + &(c * &h.counit[k]);
        }
        let e = h.basis_vec(i);
        if left != e || right != e {
            witness = Some(format!("counit law fails on basis {}", h.basis_names[i]));
            break;
        }
    }
    checks.push(AxiomCheck {
        name: "counit",
        passed: witness.is_none(),
        witness,
    });

    // (5) Delta is an algebra map
    let mut witness = None;
    let unit_tensor = {
        let d = h.comult_vec(&h.unit);
        let expect = TensorSquare::of(&h.field, &h.unit, &h.unit);
        if d != expect {
            witness = Some("Delta(1) != 1 (x) 1".to_string());
        }
        expect
    };
    let _ = unit_tensor;
    if witness.is_none() {
        'dmul: for i in 0..n {
            let di = TensorSquare::from_vec(n, h.comult[i].clone()).unwrap();
            for j in 0..n {
                let dj = TensorSquare::from_vec(n, h.comult[j].clone()).unwrap();
                let lhs = h.comult_vec(&h.mult[i][j]);
                let rhs = tensor_square_multiply(h, &di, &dj);
                if lhs != rhs {
                    witness = Some(format!(
                        "Delta(e_i e_j) != Delta(e_i)Delta(e_j) on ({}, {})",
                        h.basis_names[i], h.basis_names[j]
                    ));
                    break 'dmul;
                }
            }
        }
    }
    checks.push(AxiomCheck {
        name: "comultiplication is an algebra map",
        passed: witness.is_none(),
        witness,
    });

    // (6) eps is an algebra map (including eps(1) = 1)
    let mut witness = None;
    if !h.counit_of(&h.unit).is_one() {
        witness = Some("eps(1) != 1".to_string());
    } else {
        'emul: for i in 0..n {
            for j in 0..n {
                let lhs = h.counit_of(&h.mult[i][j]);
                let rhs = &h.counit[i] * &h.counit[j];
                if lhs != rhs {
                    witness = Some(format!(
                        "eps(e_i e_j) != eps(e_i)eps(e_j) on ({}, {})",
                        h.basis_names[i], h.basis_names[j]
                    ));
                    break 'emul;
                }
            }
        }
    }
    checks.push(AxiomCheck {
        name: "counit is an algebra map",
        passed: witness.is_none(),
        witness,
    });

    // (7) antipode
    let mut witness = None;
    for i in 0..n {
        let mut left = vec![h.field.zero(); n];
        let mut right = vec![h.field.zero(); n];
        for jk in 0..n * n {
            let c = &h.comult[i][jk];
            if c.is_zero() {
                continue;
            }
            let (j, k) = (jk / n, jk % n);
            let sj_k = h.mul_vec(&h.antipode[j], &h.basis_vec(k));
            let j_sk = h.mul_vec(&h.basis_vec(j), &h.antipode[k]);
            for t in 0..n {
                left[t] = &left[t] + &(c * &sj_k[t]);
                right[t] = &right[t] + &(c * &j_sk[t]);
            }
        }
        let expect: Vec<Scalar> = h.unit.iter().map(|u| &h.counit[i] * u).collect();
        if left != expect || right != expect {
            witness = Some(format!("antipode law fails on basis {}", h.basis_names[i]));
            break;
        }
    }
    checks.push(AxiomCheck {
        name: "antipode",
        passed: witness.is_none(),
        witness,
    });

    AxiomReport { checks }
}

/// A plain associative algebra given by tables (used for duals).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTables {
    pub field: FieldSpec,
    pub dim: usize,
    pub mult: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
}

impl AlgebraTables {
    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] = &out[k] + &(&c * m);
                    }
                }
            }
        }
        out
    }

    /// Exact associativity and two-sided-unit checks.
    pub fn verify(&self) -> AxiomReport {
        let n = self.dim;
        let basis = |i: usize| {
            let mut v = vec![self.field.zero(); n];
            v[i] = self.field.one();
            v
        };
        let mut checks = Vec::new();
        let mut witness = None;
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul_vec(&self.mult[i][j], &basis(k));
                    let right = self.mul_vec(&basis(i), &self.mult[j][k]);
                    if left != right {
                        witness = Some(format!("associativity fails at ({i},{j},{k})"));
                        break 'assoc;
                    }
                }
            }
        }
        checks.push(AxiomCheck {
            name: "associativity",
            passed: witness.is_none(),
            witness,
        });
        let mut witness = None;
        for i in 0..n {
            let e = basis(i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                witness = Some(format!("unit law fails at {i}"));
                break;
            }
        }
        checks.push(AxiomCheck {
            name: "unit",
            passed: witness.is_none(),
            witness,
        });
        AxiomReport { checks }
    }
}

/// The convolution algebra on the dual basis: (f g)(h) = (f (x) g)(Delta h),
/// unit = counit. Refuses if the coalgebra checks (coassociativity, counit)
/// do not pass.
pub fn dual_algebra(h: &HopfAlgebraData) -> Result<AlgebraTables> {
    let report = verify_hopf_axioms(h);
    for check in &report.checks {
        if (check.name == "coassociativity" || check.name == "counit") && !check.passed {
            return Err(Error::structural(format!(
                "dual_algebra requires a verified coalgebra; '{}' fails",
                check.name
            )));
        }
    }
    let n = h.dim;
    let mut mult = vec![vec![vec![h.field.zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for a in 0..n {
                mult[i][j][a] = h.comult[a][i * n + j].clone();
            }
        }
    }
    Ok(AlgebraTables {
        field: h.field.clone(),
        dim: n,
        mult,
        unit: h.counit.clone(),
    })
}

/// The full dual Hopf algebra on the dual basis (names suffixed with `'`):
/// multiplication by convolution, comultiplication dual to multiplication,
/// counit = evaluation at 1, antipode = transpose of S.
pub fn dual_hopf(h: &VerifiedHopf) -> Result<HopfAlgebraData> {
    let n = h.dim();
    let alg = dual_algebra(h.data())?;
    let mut comult = vec![vec![h.field().zero(); n * n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                comult[i][j * n + k] = h.mult_table()[j][k][i].clone();
            }
        }
    }
    let mut antipode = vec![vec![h.field().zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            // S*(e^i) = e^i o S
            antipode[i][k] = h.antipode_table()[k][i].clone();
        }
    }
    let names = h.basis_names().iter().map(|s| format!("{s}'")).collect();
    HopfAlgebraData::build_from_tables(
        h.field().clone(),
        names,
        alg.mult,
        alg.unit,
        comult,
        h.unit_vec().to_vec(),
        antipode,
    )
}

/// Transport all tables through an invertible change of basis `p`
/// (new basis f_i = sum_j p[j][i] e_j). Verification outcomes are
/// basis-independent, which the property suite exercises.
pub fn change_of_basis(h: &HopfAlgebraData, p: &Matrix) -> Result<HopfAlgebraData> {
    let n = h.dim();
    if p.rows() != n || p.cols() != n {
        return Err(Error::dimension("change-of-basis matrix must be n x n"));
    }
    let sol_id = {
        // invert p by solving p X = I column by column
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![h.field().zero(); n];
            e[j] = h.field().one();
            let sol = p
                .solve(&e)?
                .ok_or_else(|| Error::structural("change-of-basis matrix is singular"))?;
            cols.push(sol.particular);
        }
        let mut inv = Matrix::zeros(h.field().clone(), n, n);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                inv.set(i, j, col[i].clone());
            }
        }
        inv
    };
    let pinv = sol_id;

    let col =
        |m: &Matrix, j: usize| -> Vec<Scalar> { (0..n).map(|i| m.at(i, j).clone()).collect() };

    let mut mult = vec![vec![vec![h.field().zero(); n]; n]; n];
    for i in 0..n {
        let fi = col(p, i);
        for j in 0..n {
            let fj = col(p, j);
            let prod = h.mul_vec(&fi, &fj);
            mult[i][j] = pinv.mul_vec(&prod);
        }
    }
    let unit = pinv.mul_vec(h.unit_vec());
    let mut comult = vec![vec![h.field().zero(); n * n]; n];
    for i in 0..n {
        let fi = col(p, i);
        let d = h.comult_vec(&fi);
        // apply pinv on both legs
        for (j, k, c) in d.nonzero_entries() {
            let lj = col(&pinv, j);
            let rk = col(&pinv, k);
            for (a, x) in lj.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (b, y) in rk.iter().enumerate() {
                    if !y.is_zero() {
                        comult[i][a * n + b] = &comult[i][a * n + b] + &(&(c * x) * y);
                    }
                }
            }
        }
    }
    let mut counit = vec![h.field().zero(); n];
    for i in 0..n {
        counit[i] = h.counit_of(&col(p, i));
    }
    let mut antipode = vec![vec![h.field().zero(); n]; n];
    for i in 0..n {
        antipode[i] = pinv.mul_vec(&h.antipode_vec(&col(p, i)));
    }
    HopfAlgebraData::build_from_tables(
        h.field().clone(),
        h.basis_names().to_vec(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Group algebra of C2 over Q written out by hand: basis {1, g}.
    pub(crate) fn kc2() -> HopfAlgebraData {
        let f = FieldSpec::Rational;
        let s = |v: i64| f.from_i64(v);
        let e0 = vec![s(1), s(0)];
        let e1 = vec![s(0), s(1)];
        let mult = vec![vec![e0.clone(), e1.clone()], vec![e1.clone(), e0.clone()]];
        // Delta(1) = 1 (x) 1, Delta(g) = g (x) g
        let comult = vec![vec![s(1), s(0), s(0), s(0)], vec![s(0), s(0), s(0), s(1)]];
        let counit = vec![s(1), s(1)];
        HopfAlgebraData::build_from_tables(
            f,
            vec!["1".into(), "g".into()],
            mult,
            e0.clone(),
            comult,
            counit,
            vec![e0, e1],
        )
        .unwrap()
    }

    #[test]
    fn kc2_passes_all_axioms() {
        let h = kc2();
        let report = verify_hopf_axioms(&h);
        assert!(report.all_passed(), "failures: {:?}", report.failures());
        assert!(h.verified().is_ok());
    }

    #[test]
    fn build_rejects_bad_tables() {
        let f = FieldSpec::Rational;
        let s = |v: i64| f.from_i64(v);
        // mult row of wrong length
        let bad = HopfAlgebraData::build_from_tables(
            f.clone(),
            vec!["1".into(), "g".into()],
            vec![
                vec![vec![s(1)], vec![s(0), s(1)]],
                vec![vec![s(0), s(1)], vec![s(1), s(0)]],
            ],
            vec![s(1), s(0)],
            vec![vec![s(1), s(0), s(0), s(0)], vec![s(0), s(0), s(0), s(1)]],
            vec![s(1), s(1)],
            vec![vec![s(1), s(0)], vec![s(0), s(1)]],
        );
        assert!(matches!(bad, Err(Error::Dimension(_))));
        // duplicate basis names
        let dup = HopfAlgebraData::build_from_tables(
            f.clone(),
            vec!["g".into(), "g".into()],
            vec![
                vec![vec![s(1), s(0)], vec![s(0), s(1)]],
                vec![vec![s(0), s(1)], vec![s(1), s(0)]],
            ],
            vec![s(1), s(0)],
            vec![vec![s(1), s(0), s(0), s(0)], vec![s(0), s(0), s(0), s(1)]],
            vec![s(1), s(1)],
            vec![vec![s(1), s(0)], vec![s(0), s(1)]],
        );
        assert!(matches!(dup, Err(Error::Parse(_))));
    }

    #[test]
    fn corrupted_antipode_detected() {
        let mut h = kc2();
        // S(g) = 1 is wrong
        h.antipode[1] = vec![h.field.one(), h.field.zero()];
        let report = verify_hopf_axioms(&h);
        let antipode = report.checks.iter().find(|c| c.name == "antipode").unwrap();
        assert!(!antipode.passed);
        assert!(report
            .checks
            .iter()
            .filter(|c| c.name != "antipode")
            .all(|c| c.passed));
    }

    #[test]
    fn dual_of_kc2_is_split() {
        let h = kc2();
        let d = dual_algebra(&h).unwrap();
        assert!(d.verify().all_passed());
        let f = FieldSpec::Rational;
        let s = |v: i64| f.from_i64(v);
        // orthogonal idempotents: e^i e^j = delta_ij e^i
        assert_eq!(d.mult[0][0], vec![s(1), s(0)]);
        assert_eq!(d.mult[1][1], vec![s(0), s(1)]);
        assert_eq!(d.mult[0][1], vec![s(0), s(0)]);
        assert_eq!(d.mult[1][0], vec![s(0), s(0)]);
        assert_eq!(d.unit, vec![s(1), s(1)]);
    }

    #[test]
    fn double_dual_restores_tables() {
        let h = kc2().verified().unwrap();
        let d = dual_hopf(&h).unwrap().verified().unwrap();
        let dd = dual_hopf(&d).unwrap();
        assert_eq!(dd.mult_table(), h.mult_table());
        assert_eq!(dd.comult_table(), h.comult_table());
        assert_eq!(dd.unit_vec(), h.unit_vec());
        assert_eq!(dd.counit_vec(), h.counit_vec());
        assert_eq!(dd.antipode_table(), h.antipode_table());
    }

    #[test]
    fn element_parse_and_display() {
        let h = kc2();
        let v = h.parse_element("g - 1").unwrap();
        let f = FieldSpec::Rational;
        assert_eq!(v, vec![f.from_i64(-1), f.from_i64(1)]);
        assert_eq!(h.display_element(&v), "-1 + g");
        let w = h.parse_element("3/2*g + 2").unwrap();
        assert_eq!(
            w,
            vec![f.parse_scalar("2").unwrap(), f.parse_scalar("3/2").unwrap()]
        );
        assert!(h.parse_element("q + 1").is_err());
    }

    #[test]
    fn tensor_square_products() {
        let h = kc2();
        let one = h.basis_vec(0);
        let g = h.basis_vec(1);
        let one_one = TensorSquare::of(h.field(), &one, &one);
        let gg = TensorSquare::of(h.field(), &g, &g);
        // (1 (x) 1) t = t
        assert_eq!(tensor_square_multiply(&h, &one_one, &gg), gg);
        // (g (x) g)(g (x) g) = 1 (x) 1 in kC2
        assert_eq!(tensor_square_multiply(&h, &gg, &gg), one_one);
    }
}
