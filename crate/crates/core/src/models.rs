//! Builders for the concrete models: Taft algebras A_{N,xi}, group algebras
//! of small groups, and the nilpotent counterexample action on
//! k[y,z]/(z^2). Every builder verifies all Hopf axioms before returning.

use crate::action::{ActionEngine, ActionSpec};
use crate::commalg::{FPCommAlgebra, Monomial, Poly, TermOrder};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{tensor_square_multiply_raw, HopfAlgebraData, TensorSquare, VerifiedHopf};
use crate::linalg::Subspace;

/// Multiplication table of a finite group with named elements.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub names: Vec<String>,
    pub mult: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// Cyclic group of order n with generator `g`.
    pub fn cyclic(n: usize) -> Result<GroupTable> {
        if n == 0 || n > crate::hopf::MAX_DIMENSION {
            return Err(Error::ResourceLimit(format!(
                "group order {n} out of range"
            )));
        }
        let names = (0..n)
            .map(|a| match a {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{a}"),
            })
            .collect();
        let mult = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let table = GroupTable {
            names,
            mult,
            identity: 0,
        };
        table.validate()?;
        Ok(table)
    }

    /// Symmetric group on k letters (k <= 4), elements as one-line
    /// permutation words, identity named `1`.
    pub fn symmetric(k: usize) -> Result<GroupTable> {
        if !(1..=4).contains(&k) {
            return Err(Error::ResourceLimit(
                "symmetric group supported for k <= 4".into(),
            ));
        }
        let mut perms: Vec<Vec<usize>> = Vec::new();
        permute(&mut (0..k).collect::<Vec<_>>(), 0, &mut perms);
        perms.sort();
        let names = perms
            .iter()
            .map(|p| {
                if p.iter().enumerate().all(|(i, &v)| i == v) {
                    "1".to_string()
                } else {
                    let word: String = p.iter().map(|v| (v + 1).to_string()).collect();
                    format!("p{word}")
                }
            })
            .collect();
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> {
            // (a b)(i) = a(b(i))
            (0..k).map(|i| a[b[i]]).collect()
        };
        let mult = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c = compose(a, b);
                        perms.iter().position(|p| *p == c).unwrap()
                    })
                    .collect()
            })
            .collect();
        let identity = perms
            .iter()
            .position(|p| p.iter().enumerate().all(|(i, &v)| i == v))
            .unwrap();
        let table = GroupTable {
            names,
            mult,
            identity,
        };
        table.validate()?;
        Ok(table)
    }

    /// Explicit table; validated.
    pub fn from_table(names: Vec<String>, mult: Vec<Vec<usize>>) -> Result<GroupTable> {
        let n = names.len();
        if mult.len() != n || mult.iter().any(|r| r.len() != n) {
            return Err(Error::dimension("multiplication table must be square"));
        }
        if mult.iter().any(|r| r.iter().any(|&v| v >= n)) {
            return Err(Error::parse("table entry out of range"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mult[e][a] == a && mult[a][e] == a))
            .ok_or_else(|| Error::parse("no identity element in table"))?;
        let table = GroupTable {
            names,
            mult,
            identity,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            if !(0..n).any(|b| self.mult[a][b] == self.identity) {
                return Err(Error::parse(format!("element {a} has no inverse")));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]] {
                        return Err(Error::parse(format!(
                            "table not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.mult[a][b] == self.identity)
            .expect("validated group has inverses")
    }
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Group Hopf algebra kG: basis the group elements, Delta g = g (x) g,
/// eps = 1, S(g) = g^{-1}. Cocommutative by construction.
pub fn group_algebra(group: &GroupTable, field: FieldSpec) -> Result<VerifiedHopf> {
    let n = group.order();
    let mut mult = vec![vec![vec![field.zero(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            mult[a][b][group.mult[a][b]] = field.one();
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[group.identity] = field.one();
    let mut comult = vec![vec![field.zero(); n * n]; n];
    for (a, row) in comult.iter_mut().enumerate() {
        row[a * n + a] = field.one();
    }
    let counit = vec![field.one(); n];
    let mut antipode = vec![vec![field.zero(); n]; n];
    for (a, row) in antipode.iter_mut().enumerate() {
        row[group.inverse(a)] = field.one();
    }
    let data = HopfAlgebraData::build_from_tables(
        field,
        group.names.clone(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    )?;
    data.verified()
}

/// The coradical of a group algebra is the whole of kG in any characteristic
/// (every basis element is group-like).
pub fn group_algebra_coradical_hint(h: &VerifiedHopf) -> Subspace {
    Subspace::full(h.field().clone(), h.dim())
}

/// The Taft algebra A_{N,xi} of dimension N^2 on the basis
/// {g^a x^b : 0 <= a,b < N}, with g^N = 1, x^N = 0, xg = xi g x.
///
/// Multiplication uses the normal-form rule
/// (g^a x^b)(g^c x^d) = xi^(bc) g^((a+c) mod N) x^(b+d) (zero when
/// b + d >= N); the comultiplication of g^a x^b is computed by powering
/// Delta(g)^a Delta(x)^b in H (x) H rather than from a closed formula, and
/// the antipode extends S(g) = g^(N-1), S(x) = -g^(N-1) x as an
/// anti-homomorphism. All axioms are verified before returning.
pub fn taft(n: u32, field: FieldSpec, xi: Option<Scalar>) -> Result<VerifiedHopf> {
    if n < 2 {
        return Err(Error::parse("Taft algebra requires N >= 2"));
    }
    let xi = match xi {
        Some(x) => {
            if x.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field.to_string(),
                    found: x.field().to_string(),
                });
            }
            x
        }
        None => match &field {
            FieldSpec::Cyclotomic(m) if *m == n => field.generator().unwrap(),
            FieldSpec::Rational if n == 2 => field.from_i64(-1),
            _ => {
                return Err(Error::parse(format!(
                    "no default primitive {n}-th root of unity in {field}; supply xi"
                )))
            }
        },
    };
    // primitivity: xi^N = 1 and xi^m != 1 for 0 < m < N
    match xi.multiplicative_order(n as u64) {
        Some(order) if order == n as u64 => {}
        _ => {
            return Err(Error::parse(format!(
                "xi = {xi} is not a primitive root of unity of degree {n} in {field}"
            )))
        }
    }

    let nn = n as usize;
    let dim = nn * nn;
    let idx = |a: usize, b: usize| a * nn + b;
    let name = |a: usize, b: usize| -> String {
        let mut s = String::new();
        if a == 1 {
            s.push('g');
        } else if a > 1 {
            s.push_str(&format!("g{a}"));
        }
        if b == 1 {
            s.push('x');
        } else if b > 1 {
            s.push_str(&format!("x{b}"));
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    };
    let basis_names: Vec<String> = (0..nn)
        .flat_map(|a| (0..nn).map(move |b| (a, b)))
        .map(|(a, b)| name(a, b))
        .collect();

    // multiplication tensor from the q-commutation normal form
    let mut mult = vec![vec![vec![field.zero(); dim]; dim]; dim];
    for a in 0..nn {
        for b in 0..nn {
            for c in 0..nn {
                for d in 0..nn {
                    if b + d >= nn {
                        continue; // x^N = 0
                    }
                    let coeff = xi.pow((b * c) as u64);
                    mult[idx(a, b)][idx(c, d)][idx((a + c) % nn, b + d)] = coeff;
                }
            }
        }
    }

    let mut unit = vec![field.zero(); dim];
    unit[idx(0, 0)] = field.one();

    // Delta by powering in H (x) H
    let g_vec = {
        let mut v = vec![field.zero(); dim];
        v[idx(1 % nn, 0)] = field.one();
        v
    };
    let x_vec = {
        let mut v = vec![field.zero(); dim];
        v[idx(0, 1)] = field.one();
        v
    };
    let one_vec = unit.clone();
    let delta_g = TensorSquare::of(&field, &g_vec, &g_vec);
    let delta_x = {
        let gx = TensorSquare::of(&field, &g_vec, &x_vec);
        let x1 = TensorSquare::of(&field, &x_vec, &one_vec);
        gx.add(&x1)
    };
    let unit_tensor = TensorSquare::of(&field, &one_vec, &one_vec);
    let mut comult = vec![vec![field.zero(); dim * dim]; dim];
    let mut delta_g_pow = unit_tensor.clone();
    for a in 0..nn {
        let mut acc = delta_g_pow.clone();
        for b in 0..nn {
            comult[idx(a, b)] = acc.data().to_vec();
            if b + 1 < nn {
                acc = tensor_square_multiply_raw(&field, &mult, &acc, &delta_x);
            }
        }
        if a + 1 < nn {
            delta_g_pow = tensor_square_multiply_raw(&field, &mult, &delta_g_pow, &delta_g);
        }
    }

    let mut counit = vec![field.zero(); dim];
    for a in 0..nn {
        counit[idx(a, 0)] = field.one();
    }

    // antipode: S(g^a x^b) = S(x)^b g^(-a), an anti-homomorphism extension
    let mul_raw = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim];
        for (i, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (k, m) in mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] = &out[k] + &(&c * m);
                    }
                }
            }
        }
        out
    };
    let s_x = {
        // -g^(N-1) x
        let mut v = vec![field.zero(); dim];
        v[idx(nn - 1, 1)] = -&field.one();
        v
    };
    let mut antipode = vec![vec![field.zero(); dim]; dim];
    for a in 0..nn {
        let mut g_inv_a = vec![field.zero(); dim];
        g_inv_a[idx((nn - a) % nn, 0)] = field.one();
        let mut acc = g_inv_a;
        for b in 0..nn {
            if b > 0 {
                // multiply by S(x) on the left once more: S(x)^b g^(-a)
                acc = mul_raw(&s_x, &acc);
            }
            antipode[idx(a, b)] = acc.clone();
        }
    }

    let data = HopfAlgebraData::build_from_tables(
        field,
        basis_names,
        mult,
        unit,
        comult,
        counit,
        antipode,
    )?;
    data.verified()
}

/// Sweedler's 4-dimensional Hopf algebra H_4 = A_{2,-1}.
pub fn sweedler(field: FieldSpec) -> Result<VerifiedHopf> {
    let xi = field.from_i64(-1);
    taft(2, field, Some(xi))
}

/// The span of the group-like basis elements g^a of a Taft algebra; the
/// coradical hint used in small characteristic.
pub fn taft_coradical_hint(n: u32, h: &VerifiedHopf) -> Subspace {
    let nn = n as usize;
    let rows: Vec<Vec<Scalar>> = (0..nn).map(|a| h.basis_vec(a * nn)).collect();
    Subspace::from_spanning_rows(h.field().clone(), rows, h.dim()).expect("basis rows")
}

/// Everything the counterexample model exposes for testing: the Hopf
/// algebra, the algebra A = k[y,z]/(z^2), the verified action data, a
/// coradical hint, and the invariants expected at the recorded degree.
#[derive(Clone, Debug)]
pub struct ModelBundle {
    pub hopf: VerifiedHopf,
    pub algebra: FPCommAlgebra,
    pub action: ActionSpec,
    pub coradical_hint: Subspace,
    pub max_degree: u32,
    pub expected: ExpectedResults,
}

/// Reference values recorded by the builder for its own model.
#[derive(Clone, Debug)]
pub struct ExpectedResults {
    pub grouplike_count: usize,
    pub integral_dimension: usize,
    pub semisimple: bool,
    /// monomials spanning the G-invariants up to max_degree
    pub g_invariant_monomials: Vec<Monomial>,
    /// monomials spanning the H-invariants up to max_degree
    pub h_invariant_monomials: Vec<Monomial>,
}

/// The action of A_{N,xi} on A = k[y,z]/(z^2) determined on generators by
/// g.y = y, g.z = xi^(-1) z, x.y = z, x.z = 0, extended to every basis
/// element g^a x^b by operator composition.
pub fn example31(n: u32, field: FieldSpec, max_degree: u32) -> Result<ModelBundle> {
    let hopf = match (&field, n) {
        (FieldSpec::Rational, 2) => sweedler(field.clone())?,
        _ => taft(n, field.clone(), default_xi(&field, n)?)?,
    };
    let algebra = FPCommAlgebra::new(
        field.clone(),
        vec!["y".into(), "z".into()],
        TermOrder::GrevLex,
        vec![{
            let z = Poly::var(field.clone(), 2, 1);
            z.mul(&z)
        }],
    )?;
    let nn = n as usize;
    let idx = |a: usize, b: usize| a * nn + b;
    let xi = xi_of(&hopf, n);
    let xi_inv = xi.inv()?;

    let y = algebra.var(0);
    let z = algebra.var(1);
    // generator-level data for 1, g, x
    let mut partial = std::collections::BTreeMap::new();
    partial.insert((idx(0, 0), 0), y.clone());
    partial.insert((idx(0, 0), 1), z.clone());
    partial.insert((idx(1 % nn, 0), 0), y.clone());
    partial.insert((idx(1 % nn, 0), 1), z.scale(&xi_inv));
    partial.insert((idx(0, 1), 0), z.clone());
    partial.insert((idx(0, 1), 1), algebra.zero());
    let engine = ActionEngine::from_raw_entries(&hopf, &algebra, &partial);

    // fill the total table by composing rho(g)^a rho(x)^b on each variable
    let mut entries = std::collections::BTreeMap::new();
    for a in 0..nn {
        for b in 0..nn {
            for v in 0..2 {
                let mut val = algebra.var(v);
                for _ in 0..b {
                    val = engine.act_basis_unbounded(idx(0, 1), &val)?;
                }
                for _ in 0..a {
                    val = engine.act_basis_unbounded(idx(1 % nn, 0), &val)?;
                }
                entries.insert((idx(a, b), v), val);
            }
        }
    }
    let action = ActionSpec::new(&hopf, &algebra, entries)?;

    let char_p = field.characteristic();
    let g_invariant_monomials: Vec<Monomial> = (0..=max_degree)
        .map(|j| Monomial::new(vec![j, 0]))
        .collect();
    let h_invariant_monomials: Vec<Monomial> = (0..=max_degree)
        .filter(|j| *j == 0 || (char_p != 0 && j % char_p == 0))
        .map(|j| Monomial::new(vec![j, 0]))
        .collect();
    let expected = ExpectedResults {
        grouplike_count: nn,
        integral_dimension: 1,
        semisimple: false,
        g_invariant_monomials,
        h_invariant_monomials,
    };
    let coradical_hint = taft_coradical_hint(n, &hopf);
    Ok(ModelBundle {
        hopf,
        algebra,
        action,
        coradical_hint,
        max_degree,
        expected,
    })
}

fn default_xi(field: &FieldSpec, n: u32) -> Result<Option<Scalar>> {
    match field {
        FieldSpec::Cyclotomic(m) if *m == n => Ok(None),
        FieldSpec::Rational if n == 2 => Ok(None),
        FieldSpec::PrimeField(p) => {
            // smallest primitive N-th root of unity, if any
            for v in 2..*p {
                let cand = Scalar::Prime { p: *p, value: v };
                if cand.multiplicative_order(n as u64) == Some(n as u64) {
                    return Ok(Some(cand));
                }
            }
            Err(Error::parse(format!(
                "F_{p} contains no primitive root of unity of degree {n}"
            )))
        }
        _ => Ok(None),
    }
}

/// Recover xi from the multiplication table: x g = xi g x.
fn xi_of(h: &VerifiedHopf, n: u32) -> Scalar {
    let nn = n as usize;
    let x = 1; // index of x = (0,1)
    let g = nn; // index of g = (1,0)
    h.mult_table()[x][g][nn + 1].clone() // coefficient of gx in x*g
}

/// Compare the recursive action against the closed forms
/// g.y^n = y^n, g.(y^n z) = xi^(-1) y^n z, x.y^n = n y^(n-1) z,
/// x.(y^n z) = 0 for all n <= n_max. Exact equality required.
pub fn example31_closed_form_check(bundle: &ModelBundle, n_max: u32) -> Result<Vec<String>> {
    let nn = {
        let d = bundle.hopf.dim();
        (1..=d)
            .find(|k| k * k == d)
            .expect("Taft dimension is a square")
    };
    let g_idx = nn;
    let x_idx = 1;
    let algebra = &bundle.algebra;
    let engine = ActionEngine::new(&bundle.hopf, algebra, &bundle.action);
    let xi = xi_of(&bundle.hopf, nn as u32);
    let xi_inv = xi.inv()?;
    let y = algebra.var(0);
    let z = algebra.var(1);
    let mut failures = Vec::new();
    let mut check = |label: String, got: Poly, expect: Poly| {
        if got != expect {
            failures.push(format!(
                "{label}: got {}, expected {}",
                algebra.display(&got),
                algebra.display(&expect)
            ));
        }
    };
    for n in 0..=n_max {
        let yn = algebra.pow_nf(&y, n);
        let ynz = algebra.mul_nf(&yn, &z);
        let ny_n1_z = if n == 0 {
            algebra.zero()
        } else {
            let c = algebra.field().from_i64(n as i64);
            algebra.mul_nf(&algebra.pow_nf(&y, n - 1), &z).scale(&c)
        };
        check(
            format!("g . y^{n}"),
            engine.act_basis_unbounded(g_idx, &yn)?,
            yn.clone(),
        );
        check(
            format!("g . y^{n} z"),
            engine.act_basis_unbounded(g_idx, &ynz)?,
            ynz.scale(&xi_inv),
        );
        check(
            format!("x . y^{n}"),
            engine.act_basis_unbounded(x_idx, &yn)?,
            ny_n1_z,
        );
        check(
            format!("x . y^{n} z"),
            engine.act_basis_unbounded(x_idx, &ynz)?,
            algebra.zero(),
        );
    }
    Ok(failures)
}
