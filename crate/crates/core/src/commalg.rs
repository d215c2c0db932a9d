//! Finitely presented commutative algebras A = k[y_1..y_s]/(r_1..r_m) with
//! reduced Groebner bases, normal forms, degree-truncated monomial bases and
//! subalgebra spans.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{format_scalar, parse_rational, split_power, split_terms, FieldSpec, Scalar};
use crate::linalg::Subspace;

/// Default Buchberger step budget; override with `HOPFACT_GB_BUDGET`.
pub const DEFAULT_GB_BUDGET: u64 = 2_000_000;

/// Step budget for Groebner computations, read once per construction.
pub fn gb_budget_from_env() -> u64 {
    std::env::var("HOPFACT_GB_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_GB_BUDGET)
}

/// A monomial as an exponent vector with its total degree cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[v] = 1;
        Monomial::new(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.exps[v]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when divisible.
    pub fn quotient_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::new(
            other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (v, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                parts.push(names[v].clone());
            } else {
                parts.push(format!("{}^{}", names[v], e));
            }
        }
        parts.join("*")
    }
}

// Canonical storage order only (degree, then exponents); term orders for
// algebra live in `TermOrder`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree, &self.exps).cmp(&(other.degree, &other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Monomial orders. Graded reverse lexicographic is the default for Groebner
/// bases; lexicographic is used by the zero-dimensional solver for
/// triangular extraction. Variable 0 is the most significant in both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    GrevLex,
    Lex,
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self {
            TermOrder::GrevLex => match a.degree.cmp(&b.degree) {
                Ordering::Equal => {
                    // larger = smaller exponent on the last variable where they differ
                    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                        match x.cmp(y) {
                            Ordering::Equal => continue,
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                        }
                    }
                    Ordering::Equal
                }
                other => other,
            },
            TermOrder::Lex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    match x.cmp(y) {
                        std::cmp::Ordering::Equal => continue,
                        other => return other,
                    }
                }
                std::cmp::Ordering::Equal
            }
        }
    }

    /// Degree-compatible orders never raise degree during normal forms.
    pub fn is_graded(&self) -> bool {
        matches!(self, TermOrder::GrevLex)
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::GrevLex => write!(f, "grevlex"),
            TermOrder::Lex => write!(f, "lex"),
        }
    }
}

/// Sparse multivariate polynomial; only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Poly {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: FieldSpec, nvars: usize) -> Self {
        Poly::constant(field.clone(), nvars, field.one())
    }

    pub fn constant(field: FieldSpec, nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(field, nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(p.nvars), c);
        }
        p
    }

    pub fn var(field: FieldSpec, nvars: usize, v: usize) -> Self {
        let mut p = Poly::zero(field.clone(), nvars);
        p.terms.insert(Monomial::var(nvars, v), field.one());
        p
    }

    pub fn monomial_term(field: FieldSpec, m: Monomial, c: Scalar) -> Self {
        let mut p = Poly::zero(field, m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_term(&self, order: TermOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field.clone(), self.nvars);
        }
        Poly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.field.clone(), self.nvars);
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in rhs.terms.iter() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Poly {
        let mut out = Poly::zero(self.field.clone(), self.nvars);
        for (m1, c1) in self.terms.iter() {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.field.clone(), self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Substitute a polynomial for one variable.
    pub fn substitute(&self, v: usize, value: &Poly) -> Poly {
        let mut out = Poly::zero(self.field.clone(), self.nvars);
        for (m, c) in self.terms.iter() {
            let e = m.exp(v);
            let mut rest = m.exps().to_vec();
            rest[v] = 0;
            let base = Poly::monomial_term(self.field.clone(), Monomial::new(rest), c.clone());
            let term = if e == 0 {
                base
            } else {
                base.mul(&value.pow(e))
            };
            out = out.add(&term);
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (m, c) in self.terms.iter() {
            let mut t = c.clone();
            for (v, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = &t * &point[v].pow(e as u64);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars];
        for m in self.terms.keys() {
            for (v, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    seen[v] = true;
                }
            }
        }
        (0..self.nvars).filter(|&v| seen[v]).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d0) => degrees.all(|d| d == d0),
        }
    }

    /// Render with variable names; terms sorted leading-first under grevlex.
    /// Cyclotomic coefficients use the `zeta` symbol (parenthesized when they
    /// are sums) so that an algebra variable named `z` stays unambiguous.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| TermOrder::GrevLex.cmp(a, b).reverse());
        let mut out = String::new();
        for m in monos {
            let c = &self.terms[m];
            let (coeff_str, negative) = match c.as_single_generator_term() {
                Some((q, k)) => {
                    let (mag, neg) = match q.strip_prefix('-') {
                        Some(rest) => (rest.to_string(), true),
                        None => (q, false),
                    };
                    let z = match k {
                        0 => String::new(),
                        1 => "zeta".to_string(),
                        _ => format!("zeta^{k}"),
                    };
                    let s = match (mag.as_str(), z.is_empty()) {
                        ("1", false) => z,
                        (_, false) => format!("{mag}*{z}"),
                        (_, true) => mag,
                    };
                    (s, neg)
                }
                None => (format!("({})", format_scalar(c, "zeta")), false),
            };
            let mono_str = m.display_with(names);
            let body = match (coeff_str.as_str(), mono_str.as_str()) {
                ("1", "1") => "1".to_string(),
                ("1", _) => mono_str,
                (_, "1") => coeff_str,
                _ => format!("{coeff_str}*{mono_str}"),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

/// Parse a polynomial in the text syntax: a sum of terms, each a `*`-product
/// of factors; factors are rational constants, powers of declared variables,
/// powers of `zeta` (the cyclotomic generator), or parenthesized scalar
/// expressions. `z` denotes the generator only when no variable is named `z`.
pub fn parse_poly(field: &FieldSpec, var_names: &[String], input: &str) -> Result<Poly> {
    let normalized: String = input.replace('\u{2212}', "-");
    let s: String = normalized.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    let nvars = var_names.len();
    let mut acc = Poly::zero(field.clone(), nvars);
    for (term, negative) in split_terms(&s)? {
        let value = parse_poly_term(field, var_names, &term)?;
        if negative {
            acc = acc.sub(&value);
        } else {
            acc = acc.add(&value);
        }
    }
    Ok(acc)
}

fn parse_poly_term(field: &FieldSpec, var_names: &[String], term: &str) -> Result<Poly> {
    let nvars = var_names.len();
    let mut acc = Poly::one(field.clone(), nvars);
    for factor in split_top_level(term, '*')? {
        if factor.is_empty() {
            return Err(Error::parse(format!("empty factor in term '{term}'")));
        }
        if let Some(inner) = factor.strip_prefix('(') {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(format!("unbalanced parentheses in '{factor}'")))?;
            let c = field.parse_scalar(inner)?;
            acc = acc.scale(&c);
            continue;
        }
        let (base, exp) = split_power(&factor)?;
        if let Some(v) = var_names.iter().position(|n| *n == base) {
            let m = Monomial::new((0..nvars).map(|i| if i == v { exp } else { 0 }).collect());
            acc = acc.mul_term(&m, &field.one());
        } else if base == "zeta" || (base == "z" && !var_names.iter().any(|n| n == "z")) {
            match field {
                FieldSpec::Cyclotomic(_) => {
                    let zeta = field.generator().unwrap();
                    acc = acc.scale(&zeta.pow(exp as u64));
                }
                _ => {
                    return Err(Error::parse(format!(
                        "'{base}' denotes the cyclotomic generator but the field is {field}"
                    )))
                }
            }
        } else if base.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            let q = parse_rational(&base)?;
            let c = field.from_rational(q)?.pow(exp as u64);
            acc = acc.scale(&c);
        } else {
            return Err(Error::parse(format!("unknown variable '{base}'")));
        }
    }
    Ok(acc)
}

fn split_top_level(s: &str, sep: char) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse("unbalanced ')'"))?;
                cur.push(c);
            }
            _ if c == sep && depth == 0 => out.push(std::mem::take(&mut cur)),
            _ => cur.push(c),
        }
    }
    out.push(cur);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Groebner bases.
// ---------------------------------------------------------------------------

struct Budget {
    remaining: u64,
}

impl Budget {
    fn spend(&mut self, what: &str) -> Result<()> {
        if self.remaining == 0 {
            return Err(Error::BudgetExceeded(format!(
                "Groebner step budget exhausted during {what}"
            )));
        }
        self.remaining -= 1;
        Ok(())
    }
}

fn make_monic(f: &Poly, order: TermOrder) -> Poly {
    match f.leading_term(order) {
        None => f.clone(),
        Some((_, c)) => {
            let inv = c.inv().expect("leading coefficient nonzero");
            f.scale(&inv)
        }
    }
}

/// One full reduction: every term of the result is reducible by no leading
/// monomial of `basis`. Deterministic: the first divisor in basis order wins.
fn reduce_full(f: &Poly, basis: &[Poly], order: TermOrder, budget: &mut Budget) -> Result<Poly> {
    let mut rem = Poly::zero(f.field().clone(), f.nvars());
    let mut work = f.clone();
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        for g in basis {
            let Some((glm, glc)) = g.leading_term(order) else {
                continue;
            };
            if let Some(q) = glm.quotient_into(&lm) {
                budget.spend("normal form")?;
                let factor = lc.div(glc).expect("leading coefficient nonzero");
                work = work.sub(&g.mul_term(&q, &factor));
                continue 'outer;
            }
        }
        rem.add_term(lm.clone(), lc.clone());
        let single = Poly::monomial_term(work.field().clone(), lm, lc);
        work = work.sub(&single);
    }
    Ok(rem)
}

fn s_polynomial(f: &Poly, g: &Poly, order: TermOrder) -> Poly {
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = fm.lcm(gm);
    let fq = fm.quotient_into(&l).unwrap();
    let gq = gm.quotient_into(&l).unwrap();
    let finv = fc.inv().unwrap();
    let ginv = gc.inv().unwrap();
    f.mul_term(&fq, &finv).sub(&g.mul_term(&gq, &ginv))
}

/// Buchberger's algorithm with the coprime-leading-monomial criterion,
/// producing the reduced Groebner basis sorted by leading monomial.
pub fn buchberger(gens: &[Poly], order: TermOrder, step_budget: u64) -> Result<Vec<Poly>> {
    let mut budget = Budget {
        remaining: step_budget,
    };
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let m = make_monic(g, order);
            if !basis.contains(&m) {
                basis.push(m);
            }
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm degree, ties by index
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let li = basis[i].leading_term(order).unwrap().0;
                let lj = basis[j].leading_term(order).unwrap().0;
                (li.lcm(lj).degree(), i, j)
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        budget.spend("pair selection")?;
        let li = basis[i].leading_term(order).unwrap().0;
        let lj = basis[j].leading_term(order).unwrap().0;
        if li.coprime(lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce_full(&s, &basis, order, &mut budget)?;
        if !r.is_zero() {
            let r = make_monic(&r, order);
            let new_idx = basis.len();
            basis.push(r);
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
        }
    }
    // Minimal basis: drop any element whose leading monomial is divisible by
    // another's (keeping the earlier one on ties). The set stays a Groebner
    // basis of the same ideal because the leading-term ideal is unchanged.
    let mut i = 0;
    while i < basis.len() {
        let lti = basis[i].leading_term(order).unwrap().0.clone();
        let redundant = basis.iter().enumerate().any(|(j, g)| {
            if j == i {
                return false;
            }
            let ltj = g.leading_term(order).unwrap().0;
            ltj.divides(&lti) && (*ltj != lti || j < i)
        });
        if redundant {
            basis.remove(i);
        } else {
            i += 1;
        }
    }
    // Reduced basis: tail-reduce each element against the others. In a
    // minimal basis no head can rewrite, so leading monomials are preserved.
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<Poly> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let r = reduce_full(&basis[i], &others, order, &mut budget)?;
            if r != basis[i] {
                basis[i] = make_monic(&r, order);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| {
        order.cmp(
            a.leading_term(order).unwrap().0,
            b.leading_term(order).unwrap().0,
        )
    });
    Ok(basis)
}

// ---------------------------------------------------------------------------
// The algebra type.
// ---------------------------------------------------------------------------

/// A finitely presented commutative algebra with a reduced Groebner basis and
/// a normal-form oracle. Immutable once constructed.
#[derive(Clone, Debug)]
pub struct FPCommAlgebra {
    field: FieldSpec,
    var_names: Vec<String>,
    order: TermOrder,
    relations: Vec<Poly>,
    groebner: Vec<Poly>,
}

impl FPCommAlgebra {
    /// Compute the reduced Groebner basis of the relation ideal at
    /// construction, so every algebra value carries a normal-form oracle.
    pub fn new(
        field: FieldSpec,
        var_names: Vec<String>,
        order: TermOrder,
        relations: Vec<Poly>,
    ) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for name in &var_names {
            if name.is_empty() || !seen.insert(name.clone()) {
                return Err(Error::parse(format!(
                    "invalid or duplicate variable '{name}'"
                )));
            }
            if name == "zeta" {
                return Err(Error::parse(
                    "'zeta' is reserved for the cyclotomic generator",
                ));
            }
        }
        for r in &relations {
            if r.nvars() != var_names.len() {
                return Err(Error::dimension("relation arity mismatch"));
            }
            if r.field() != &field {
                return Err(Error::FieldMismatch {
                    expected: field.to_string(),
                    found: r.field().to_string(),
                });
            }
        }
        let groebner = buchberger(&relations, order, gb_budget_from_env())?;
        if groebner.iter().any(|g| g.degree() == Some(0)) {
            return Err(Error::structural("relation ideal is the whole ring"));
        }
        Ok(FPCommAlgebra {
            field,
            var_names,
            order,
            relations,
            groebner,
        })
    }

    pub fn polynomial_ring(field: FieldSpec, var_names: Vec<String>) -> Result<Self> {
        Self::new(field.clone(), var_names, TermOrder::GrevLex, Vec::new())
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &[Poly] {
        &self.groebner
    }

    /// Degree truncation is a genuine grading only for homogeneous relations.
    pub fn relations_homogeneous(&self) -> bool {
        self.relations.iter().all(Poly::is_homogeneous)
    }

    pub fn parse(&self, s: &str) -> Result<Poly> {
        parse_poly(&self.field, &self.var_names, s)
    }

    pub fn display(&self, f: &Poly) -> String {
        f.display_with(&self.var_names)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.field.clone(), self.nvars())
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.field.clone(), self.nvars())
    }

    pub fn var(&self, v: usize) -> Poly {
        Poly::var(self.field.clone(), self.nvars(), v)
    }

    /// Complete reduction modulo the Groebner basis. NF(f) = 0 iff f lies in
    /// the relation ideal; NF is idempotent and k-linear.
    pub fn normal_form(&self, f: &Poly) -> Poly {
        let mut budget = Budget {
            remaining: u64::MAX,
        };
        reduce_full(f, &self.groebner, self.order, &mut budget)
            .expect("unbudgeted normal form cannot fail")
    }

    /// Product followed by normal form.
    pub fn mul_nf(&self, a: &Poly, b: &Poly) -> Poly {
        self.normal_form(&a.mul(b))
    }

    pub fn pow_nf(&self, a: &Poly, e: u32) -> Poly {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_nf(&acc, &base);
            }
            base = self.mul_nf(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Monomials of total degree <= d not divisible by any Groebner leading
    /// monomial, sorted ascending in the algebra's term order. For
    /// homogeneous relations this is a k-basis of the degree-<= d part of A.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let leads: Vec<Monomial> = self
            .groebner
            .iter()
            .map(|g| g.leading_term(self.order).unwrap().0.clone())
            .collect();
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars()];
        enumerate_monomials(&mut exps, 0, d, &mut |m: &Monomial| {
            if !leads.iter().any(|l| l.divides(m)) {
                out.push(m.clone());
            }
        });
        out.sort_by(|a, b| self.order.cmp(a, b));
        out
    }

    /// Coordinate workspace over the standard monomials of degree <= d.
    pub fn workspace(&self, d: u32) -> DegreeWorkspace {
        let monomials = self.standard_monomials(d);
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        DegreeWorkspace {
            field: self.field.clone(),
            nvars: self.nvars(),
            degree: d,
            monomials,
            index,
        }
    }

    /// Span of normal forms of products of `gens` with total generator-degree
    /// at most `e` (the empty product 1 included), as an RREF subspace of a
    /// degree workspace large enough to hold every product.
    pub fn subalgebra_span(&self, gens: &[Poly], e: u32) -> Result<SubalgebraSpan> {
        let nf_gens: Vec<Poly> = gens.iter().map(|g| self.normal_form(g)).collect();
        let max_deg = nf_gens
            .iter()
            .filter_map(Poly::degree)
            .max()
            .unwrap_or(0)
            .max(1);
        let ws = self.workspace(e.saturating_mul(max_deg));
        let mut products: Vec<(Vec<u32>, Poly)> = Vec::new();
        let mut stack_exps = vec![0u32; gens.len()];
        self.enumerate_products(&nf_gens, &mut stack_exps, 0, e, &self.one(), &mut products);
        // degree ascending, then exponent-lex: deterministic column order
        products.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            (da, ea).cmp(&(db, eb))
        });
        let rows: Vec<Vec<Scalar>> = products
            .iter()
            .map(|(_, p)| ws.to_coords(p))
            .collect::<Result<_>>()?;
        let span = Subspace::from_spanning_rows(self.field.clone(), rows, ws.dim())?;
        Ok(SubalgebraSpan {
            products,
            span,
            workspace: ws,
        })
    }

    fn enumerate_products(
        &self,
        gens: &[Poly],
        exps: &mut Vec<u32>,
        from: usize,
        remaining: u32,
        acc: &Poly,
        out: &mut Vec<(Vec<u32>, Poly)>,
    ) {
        out.push((exps.clone(), acc.clone()));
        for i in from..gens.len() {
            if remaining == 0 {
                break;
            }
            if gens[i].is_zero() {
                continue;
            }
            let next = self.mul_nf(acc, &gens[i]);
            exps[i] += 1;
            self.enumerate_products(gens, exps, i, remaining - 1, &next, out);
            exps[i] -= 1;
        }
    }
}

fn enumerate_monomials(
    exps: &mut Vec<u32>,
    var: usize,
    remaining: u32,
    visit: &mut impl FnMut(&Monomial),
) {
    if var == exps.len() {
        visit(&Monomial::new(exps.clone()));
        return;
    }
    for e in 0..=remaining {
        exps[var] = e;
        enumerate_monomials(exps, var + 1, remaining - e, visit);
    }
    exps[var] = 0;
}

/// Result of [`FPCommAlgebra::subalgebra_span`]: the generator-product list
/// (exponent vectors over the generators, with normal forms), the RREF span,
/// and the workspace carrying the coordinates.
#[derive(Clone, Debug)]
pub struct SubalgebraSpan {
    pub products: Vec<(Vec<u32>, Poly)>,
    pub span: Subspace,
    pub workspace: DegreeWorkspace,
}

impl SubalgebraSpan {
    /// Membership of NF(f) in the span; errors if f overflows the workspace.
    pub fn contains(&self, algebra: &FPCommAlgebra, f: &Poly) -> Result<bool> {
        let nf = algebra.normal_form(f);
        let coords = self.workspace.to_coords(&nf)?;
        Ok(self.span.contains(&coords))
    }
}

/// Exact coordinates on the standard monomials of degree <= `degree`.
#[derive(Clone, Debug)]
pub struct DegreeWorkspace {
    field: FieldSpec,
    nvars: usize,
    degree: u32,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl DegreeWorkspace {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a normal-form polynomial; errors with the required
    /// degree if any monomial falls outside the workspace.
    pub fn to_coords(&self, f: &Poly) -> Result<Vec<Scalar>> {
        let mut out = vec![self.field.zero(); self.monomials.len()];
        for (m, c) in f.terms() {
            match self.index.get(m) {
                Some(&i) => out[i] = c.clone(),
                None => {
                    return Err(Error::WorkspaceOverflow {
                        needed: m.degree(),
                        available: self.degree,
                    })
                }
            }
        }
        Ok(out)
    }

    pub fn poly_from(&self, coords: &[Scalar]) -> Poly {
        let mut p = Poly::zero(self.field.clone(), self.nvars);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                p.add_term(self.monomials[i].clone(), c.clone());
            }
        }
        p
    }

    /// Index map embedding these coordinates into a larger workspace.
    pub fn embedding_into(&self, bigger: &DegreeWorkspace) -> Result<Vec<usize>> {
        self.monomials
            .iter()
            .map(|m| {
                bigger.index_of(m).ok_or(Error::WorkspaceOverflow {
                    needed: m.degree(),
                    available: bigger.degree,
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let vars = names(&["y", "z"]);
        let f = parse_poly(&q(), &vars, "3/2*y^2*z - z").unwrap();
        assert_eq!(f.display_with(&vars), "3/2*y^2*z - z");
        let back = parse_poly(&q(), &vars, &f.display_with(&vars)).unwrap();
        assert_eq!(f, back);
        assert!(parse_poly(&q(), &vars, "w + y").is_err());
    }

    #[test]
    fn parse_cyclotomic_coefficients() {
        let field = FieldSpec::cyclotomic(3).unwrap();
        let vars = names(&["y", "z"]);
        // variable z shadows the generator; zeta still reaches it
        let f = parse_poly(&field, &vars, "zeta^2*z + y").unwrap();
        let zeta2 = field.generator().unwrap().pow(2);
        assert_eq!(f.coeff(&Monomial::var(2, 1)), zeta2);
        let shown = f.display_with(&vars);
        let back = parse_poly(&field, &vars, &shown).unwrap();
        assert_eq!(f, back);
        // parenthesized sums: (zeta + 1)*y
        let g = parse_poly(&field, &vars, "(zeta + 1)*y").unwrap();
        let c = g.coeff(&Monomial::var(2, 0));
        assert_eq!(c, &field.generator().unwrap() + &field.one());
        let back = parse_poly(&field, &vars, &g.display_with(&vars)).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn grevlex_order() {
        // x > y in k[x, y]: x^2 > xy > y^2 > x > y > 1
        let o = TermOrder::GrevLex;
        let m = |a: u32, b: u32| Monomial::new(vec![a, b]);
        assert!(o.cmp(&m(2, 0), &m(1, 1)) == std::cmp::Ordering::Greater);
        assert!(o.cmp(&m(1, 1), &m(0, 2)) == std::cmp::Ordering::Greater);
        assert!(o.cmp(&m(1, 0), &m(0, 1)) == std::cmp::Ordering::Greater);
        assert!(o.cmp(&m(0, 2), &m(1, 0)) == std::cmp::Ordering::Greater);
    }

    #[test]
    fn buchberger_examples() {
        let vars = names(&["x"]);
        // {x^2 - 1, x^3 - x} -> {x^2 - 1}
        let g1 = parse_poly(&q(), &vars, "x^2 - 1").unwrap();
        let g2 = parse_poly(&q(), &vars, "x^3 - x").unwrap();
        let gb = buchberger(&[g1.clone(), g2], TermOrder::GrevLex, 10_000).unwrap();
        assert_eq!(gb, vec![g1]);

        // single generators stay themselves
        let vars = names(&["x", "y"]);
        let g = parse_poly(&q(), &vars, "x^2 - y").unwrap();
        let gb = buchberger(std::slice::from_ref(&g), TermOrder::GrevLex, 10_000).unwrap();
        assert_eq!(gb, vec![g]);

        let vars = names(&["z"]);
        let g = parse_poly(&q(), &vars, "z^2").unwrap();
        let gb = buchberger(std::slice::from_ref(&g), TermOrder::GrevLex, 10_000).unwrap();
        assert_eq!(gb, vec![g]);
    }

    #[test]
    fn budget_exhaustion_reported() {
        let vars = names(&["x", "y"]);
        let g1 = parse_poly(&q(), &vars, "x^2 + y").unwrap();
        let g2 = parse_poly(&q(), &vars, "x*y + x").unwrap();
        assert!(matches!(
            buchberger(&[g1, g2], TermOrder::GrevLex, 1),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn normal_form_examples() {
        let vars = names(&["y", "z"]);
        let rel = parse_poly(&q(), &vars, "z^2").unwrap();
        let a = FPCommAlgebra::new(q(), vars.clone(), TermOrder::GrevLex, vec![rel]).unwrap();
        let f = a.parse("z^3*y").unwrap();
        assert!(a.normal_form(&f).is_zero());
        let g = a.parse("y*z + y").unwrap();
        assert_eq!(a.normal_form(&g), g);

        let vars2 = names(&["x", "y"]);
        let rel2 = parse_poly(&q(), &vars2, "x^2 - y").unwrap();
        let b = FPCommAlgebra::new(q(), vars2, TermOrder::GrevLex, vec![rel2]).unwrap();
        let x3 = b.parse("x^3").unwrap();
        assert_eq!(b.normal_form(&x3), b.parse("x*y").unwrap());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let vars = names(&["y", "z"]);
        let rel = parse_poly(&q(), &vars, "z^2").unwrap();
        let a = FPCommAlgebra::new(q(), vars, TermOrder::GrevLex, vec![rel.clone()]).unwrap();
        let f = a.parse("y^2*z^3 + 2*y*z - 1/3*z^2 + y").unwrap();
        let g = a.parse("z^2*y - y + 5").unwrap();
        let nf = |p: &Poly| a.normal_form(p);
        assert_eq!(nf(&nf(&f)), nf(&f));
        assert_eq!(nf(&f.add(&g)), nf(&f).add(&nf(&g)));
        assert!(nf(&f.mul(&rel)).is_zero());
    }

    #[test]
    fn standard_monomials_examples() {
        let vars = names(&["y", "z"]);
        let rel = parse_poly(&q(), &vars, "z^2").unwrap();
        let a = FPCommAlgebra::new(q(), vars.clone(), TermOrder::GrevLex, vec![rel]).unwrap();
        let sm = a.standard_monomials(2);
        let shown: Vec<String> = sm.iter().map(|m| m.display_with(&vars)).collect();
        // five of them: 1, y, z, y^2, yz (ascending grevlex puts z before y)
        assert_eq!(shown.len(), 5);
        assert!(shown.contains(&"1".to_string()));
        assert!(shown.contains(&"y".to_string()));
        assert!(shown.contains(&"z".to_string()));
        assert!(shown.contains(&"y^2".to_string()));
        assert!(shown.contains(&"y*z".to_string()));

        let vars = names(&["y"]);
        let b = FPCommAlgebra::polynomial_ring(q(), vars.clone()).unwrap();
        let shown: Vec<String> = b
            .standard_monomials(3)
            .iter()
            .map(|m| m.display_with(&vars))
            .collect();
        assert_eq!(shown, vec!["1", "y", "y^2", "y^3"]);

        let vars = names(&["x"]);
        let rel = parse_poly(&q(), &vars, "x^2 - 1").unwrap();
        let c = FPCommAlgebra::new(q(), vars.clone(), TermOrder::GrevLex, vec![rel]).unwrap();
        let shown: Vec<String> = c
            .standard_monomials(5)
            .iter()
            .map(|m| m.display_with(&vars))
            .collect();
        assert_eq!(shown, vec!["1", "x"]);
    }

    #[test]
    fn standard_monomials_are_nf_fixed_and_distinct() {
        let vars = names(&["y", "z"]);
        let rel = parse_poly(&q(), &vars, "z^2").unwrap();
        let a = FPCommAlgebra::new(q(), vars, TermOrder::GrevLex, vec![rel]).unwrap();
        let sm = a.standard_monomials(5);
        let mut seen = std::collections::BTreeSet::new();
        for m in &sm {
            let p = Poly::monomial_term(q(), m.clone(), FieldSpec::Rational.one());
            assert_eq!(a.normal_form(&p), p, "standard monomials are NF-fixed");
            assert!(seen.insert(m.clone()), "standard monomials are distinct");
        }
    }

    #[test]
    fn subalgebra_span_examples() {
        let vars = names(&["y", "z"]);
        let rel = parse_poly(&q(), &vars, "z^2").unwrap();
        let a = FPCommAlgebra::new(q(), vars, TermOrder::GrevLex, vec![rel]).unwrap();

        // empty generator set -> constants only
        let s = a.subalgebra_span(&[], 5).unwrap();
        assert_eq!(s.span.dim(), 1);
        assert!(s.contains(&a, &a.one()).unwrap());
        assert!(!s.contains(&a, &a.var(0)).unwrap());

        // gens {y}, e = 3 -> 1, y, y^2, y^3
        let s = a.subalgebra_span(&[a.var(0)], 3).unwrap();
        assert_eq!(s.span.dim(), 4);
        assert!(s.contains(&a, &a.parse("y^3 - 2*y").unwrap()).unwrap());
        assert!(!s.contains(&a, &a.parse("z").unwrap()).unwrap());
    }

    #[test]
    fn subalgebra_span_char_p() {
        let f3 = FieldSpec::prime(3).unwrap();
        let a = FPCommAlgebra::polynomial_ring(f3.clone(), names(&["y"])).unwrap();
        let y3 = a.parse("y^3").unwrap();
        let s = a.subalgebra_span(&[y3], 2).unwrap();
        assert_eq!(s.span.dim(), 3); // 1, y^3, y^6
        assert!(s.contains(&a, &a.parse("y^6 + 2*y^3").unwrap()).unwrap());
        assert!(!s.contains(&a, &a.parse("y^2").unwrap()).unwrap());
    }

    #[test]
    fn workspace_round_trip() {
        let vars = names(&["y", "z"]);
        let rel = parse_poly(&q(), &vars, "z^2").unwrap();
        let a = FPCommAlgebra::new(q(), vars, TermOrder::GrevLex, vec![rel]).unwrap();
        let ws = a.workspace(4);
        let f = a.parse("y^3*z - 2*y + 7").unwrap();
        let coords = ws.to_coords(&f).unwrap();
        assert_eq!(ws.poly_from(&coords), f);
        let too_big = a.parse("y^5").unwrap();
        assert!(matches!(
            ws.to_coords(&too_big),
            Err(Error::WorkspaceOverflow {
                needed: 5,
                available: 4
            })
        ));
    }
}
