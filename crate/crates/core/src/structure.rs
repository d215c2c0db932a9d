//! Structural analysis of a verified Hopf algebra: group-like elements, left
//! integrals, semisimplicity, the coradical and its filtration,
//! pointed/connected classification, Hopf ideals and quotients.

use num::rational::BigRational;
use num::Zero;

use crate::commalg::Poly;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{dual_algebra, AlgebraTables, HopfAlgebraData, TensorSquare, VerifiedHopf};
use crate::linalg::{tensor_product_subspace, Matrix, Subspace};
use crate::solver::solve_zero_dimensional;

/// The group G(H) of group-like elements: all solutions of
/// Delta g = g (x) g, eps(g) = 1, with multiplication and inverse tables
/// over element indices.
#[derive(Clone, Debug)]
pub struct GroupLikeSet {
    pub elements: Vec<Vec<Scalar>>,
    pub mult_table: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub identity: usize,
}

impl GroupLikeSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Span of the group-like elements (always a subcoalgebra).
    pub fn span(&self, field: &FieldSpec, ambient: usize) -> Subspace {
        Subspace::from_spanning_rows(field.clone(), self.elements.clone(), ambient)
            .expect("group-like rows well-formed")
    }
}

/// Enumerate all group-like elements.
///
/// Over Q and F_p the quadratic system is solved directly; over Q(zeta_N)
/// the scalars are restricted to Q (n * phi(N) rational unknowns) first.
/// Solutions come from a lexicographic Groebner basis with root
/// back-substitution, so the set is complete; a persistent triangularization
/// failure is reported as inconclusive, never as a wrong set.
pub fn grouplikes(h: &VerifiedHopf) -> Result<GroupLikeSet> {
    let n = h.dim();
    let field = h.field().clone();
    let solutions: Vec<Vec<Scalar>> = match &field {
        FieldSpec::Rational | FieldSpec::PrimeField(_) => {
            let gens = grouplike_system_direct(h);
            solve_zero_dimensional(&field, n, &gens)?
        }
        FieldSpec::Cyclotomic(_) => {
            let phi = field.extension_degree();
            let gens = grouplike_system_restricted(h, phi);
            let rational_solutions = solve_zero_dimensional(&FieldSpec::Rational, n * phi, &gens)?;
            rational_solutions
                .into_iter()
                .map(|point| {
                    (0..n)
                        .map(|i| {
                            let coords: Vec<BigRational> = (0..phi)
                                .map(|m| {
                                    point[i * phi + m]
                                        .as_rational()
                                        .expect("solver returns rationals")
                                        .clone()
                                })
                                .collect();
                            field.from_generator_coords(&coords)
                        })
                        .collect::<Result<Vec<Scalar>>>()
                })
                .collect::<Result<Vec<_>>>()?
        }
    };

    // Exact re-check of the defining equations on every reported solution.
    let mut elements = Vec::new();
    for g in solutions {
        let d = h.comult_vec(&g);
        let gg = TensorSquare::of(&field, &g, &g);
        if d != gg || !h.counit_of(&g).is_one() {
            return Err(Error::structural(
                "solver returned a non-group-like solution",
            ));
        }
        elements.push(g);
    }

    // Group structure: products and inverses must close over the set.
    let find = |v: &[Scalar], elements: &[Vec<Scalar>]| -> Result<usize> {
        elements
            .iter()
            .position(|e| e.as_slice() == v)
            .ok_or_else(|| Error::structural("group-like set not closed under multiplication"))
    };
    let mut mult_table = vec![vec![0usize; elements.len()]; elements.len()];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            mult_table[i][j] = find(&h.mul_vec(a, b), &elements)?;
        }
    }
    let identity = find(h.unit_vec(), &elements)?;
    let inverse = (0..elements.len())
        .map(|i| {
            (0..elements.len())
                .find(|&j| mult_table[i][j] == identity)
                .ok_or_else(|| Error::structural("group-like element without inverse"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupLikeSet {
        elements,
        mult_table,
        inverse,
        identity,
    })
}

/// The quadratic system Delta(g) - g (x) g = 0, eps(g) = 1 in the basis
/// coordinates of g.
fn grouplike_system_direct(h: &VerifiedHopf) -> Vec<Poly> {
    let n = h.dim();
    let field = h.field().clone();
    let mut gens = Vec::with_capacity(n * n + 1);
    for u in 0..n {
        for w in 0..n {
            let mut eq = Poly::zero(field.clone(), n);
            for i in 0..n {
                let c = &h.comult_table()[i][u * n + w];
                if !c.is_zero() {
                    eq.add_term(crate::commalg::Monomial::var(n, i), c.clone());
                }
            }
            let quad = Poly::var(field.clone(), n, u).mul(&Poly::var(field.clone(), n, w));
            gens.push(eq.sub(&quad));
        }
    }
    let mut eps = Poly::constant(field.clone(), n, -&field.one());
    for i in 0..n {
        let c = &h.counit_vec()[i];
        if !c.is_zero() {
            eps.add_term(crate::commalg::Monomial::var(n, i), c.clone());
        }
    }
    gens.push(eps);
    gens
}

/// Restriction of scalars to Q: unknown c_i = sum_m c_{i,m} zeta^m with
/// rational unknowns c_{i,m} at variable index i*phi + m; every cyclotomic
/// equation contributes phi rational component equations.
fn grouplike_system_restricted(h: &VerifiedHopf, phi: usize) -> Vec<Poly> {
    let n = h.dim();
    let field = h.field().clone();
    let q = FieldSpec::Rational;
    let nvars = n * phi;
    let zeta = field.generator().expect("cyclotomic field");
    // coords of zeta^m1 * zeta^m2 and of scalar * zeta^m
    let coords_of = |s: &Scalar| -> Vec<BigRational> {
        s.generator_coords().expect("cyclotomic scalar").to_vec()
    };
    let var = |i: usize, m: usize| crate::commalg::Monomial::var(nvars, i * phi + m);

    let mut gens = Vec::new();
    for u in 0..n {
        for w in 0..n {
            // components[t] accumulates the t-th rational coordinate
            let mut components = vec![Poly::zero(q.clone(), nvars); phi];
            for i in 0..n {
                let c = &h.comult_table()[i][u * n + w];
                if c.is_zero() {
                    continue;
                }
                for m in 0..phi {
                    let shifted = coords_of(&(c * &zeta.pow(m as u64)));
                    for (t, coord) in shifted.iter().enumerate() {
                        if !coord.is_zero() {
                            components[t].add_term(var(i, m), Scalar::Rational(coord.clone()));
                        }
                    }
                }
            }
            for m1 in 0..phi {
                for m2 in 0..phi {
                    let power = coords_of(&zeta.pow((m1 + m2) as u64));
                    for (t, coord) in power.iter().enumerate() {
                        if coord.is_zero() {
                            continue;
                        }
                        let quad = Poly::monomial_term(
                            q.clone(),
                            var(u, m1).mul(&var(w, m2)),
                            Scalar::Rational(-coord),
                        );
                        components[t] = components[t].add(&quad);
                    }
                }
            }
            gens.extend(components.into_iter().filter(|p| !p.is_zero()));
        }
    }
    // eps(g) = 1 componentwise
    let mut components = vec![Poly::zero(q.clone(), nvars); phi];
    components[0] = Poly::constant(q.clone(), nvars, q.from_i64(-1));
    for i in 0..n {
        let c = &h.counit_vec()[i];
        if c.is_zero() {
            continue;
        }
        for m in 0..phi {
            let shifted = coords_of(&(c * &zeta.pow(m as u64)));
            for (t, coord) in shifted.iter().enumerate() {
                if !coord.is_zero() {
                    components[t].add_term(var(i, m), Scalar::Rational(coord.clone()));
                }
            }
        }
    }
    gens.extend(components.into_iter().filter(|p| !p.is_zero()));
    gens
}

/// Kernel of the stacked system { mu(e_i (x) t) - eps(e_i) t = 0 }: the space
/// of left integrals, expected one-dimensional for genuine Hopf data.
pub fn left_integral_space(h: &VerifiedHopf) -> Subspace {
    let n = h.dim();
    let mut stacked = Matrix::zeros(h.field().clone(), 0, n);
    for i in 0..n {
        let li = h.left_mult_matrix(i);
        let eps = &h.counit_vec()[i];
        let mut block = li;
        for d in 0..n {
            let v = &block.at(d, d).clone() - eps;
            block.set(d, d, v);
        }
        stacked = stacked.vstack(&block);
    }
    stacked.kernel()
}

/// Maschke test: semisimple iff eps(t) != 0 for the basis left integral.
#[derive(Clone, Debug)]
pub struct SemisimpleReport {
    pub semisimple: bool,
    pub integral: Vec<Scalar>,
    pub counit_value: Scalar,
}

pub fn is_semisimple(h: &VerifiedHopf) -> Result<SemisimpleReport> {
    let space = left_integral_space(h);
    if space.dim() != 1 {
        return Err(Error::structural(format!(
            "left integral space has dimension {}, expected 1",
            space.dim()
        )));
    }
    let integral = space.basis_rows().remove(0);
    let counit_value = h.counit_of(&integral);
    Ok(SemisimpleReport {
        semisimple: !counit_value.is_zero(),
        integral,
        counit_value,
    })
}

/// Jacobson radical of a finite-dimensional associative algebra as the
/// radical of the trace form (x, y) -> Tr(L_{xy}); valid in characteristic 0
/// or p > dim (Dickson's criterion).
pub fn radical_of_algebra(alg: &AlgebraTables) -> Result<Subspace> {
    let p = alg.field.characteristic();
    if p != 0 && (p as usize) <= alg.dim {
        return Err(Error::Unsupported(format!(
            "trace-form radical requires char 0 or p > dim; got p = {p}, dim = {}",
            alg.dim
        )));
    }
    let n = alg.dim;
    // tau[a] = Tr(L_{e_a})
    let mut tau = vec![alg.field.zero(); n];
    for a in 0..n {
        let mut tr = alg.field.zero();
        for b in 0..n {
            tr = &tr + &alg.mult[a][b][b];
        }
        tau[a] = tr;
    }
    let mut form = Matrix::zeros(alg.field.clone(), n, n);
    for i in 0..n {
        for j in 0..n {
            let mut v = alg.field.zero();
            for (a, t) in tau.iter().enumerate() {
                if !t.is_zero() && !alg.mult[i][j][a].is_zero() {
                    v = &v + &(&alg.mult[i][j][a] * t);
                }
            }
            form.set(i, j, v);
        }
    }
    Ok(form.kernel())
}

/// The coradical C_0 of H.
///
/// In characteristic 0 (or p > dim H) it is computed exactly as the
/// annihilator in H of the Jacobson radical of the dual algebra. In small
/// characteristic a hint subspace is required; the hint is verified to be a
/// subcoalgebra containing the span of the group-likes and is then trusted
/// (a too-small hint is caught later when the filtration fails to exhaust H).
pub fn coradical(h: &VerifiedHopf, hint: Option<&Subspace>) -> Result<Subspace> {
    let p = h.field().characteristic();
    if p == 0 || (p as usize) > h.dim() {
        let dual = dual_algebra(h.data())?;
        let radical = radical_of_algebra(&dual)?;
        let c0 = if radical.dim() == 0 {
            Subspace::full(h.field().clone(), h.dim())
        } else {
            let rows = radical.basis_rows();
            Matrix::from_rows(h.field().clone(), rows, h.dim())?.kernel()
        };
        if let Some(hinted) = hint {
            if hinted != &c0 {
                return Err(Error::structural(format!(
                    "supplied coradical hint (dim {}) disagrees with the exact coradical (dim {})",
                    hinted.dim(),
                    c0.dim()
                )));
            }
        }
        return Ok(c0);
    }
    let Some(hinted) = hint else {
        return Err(Error::Unsupported(format!(
            "coradical in characteristic {p} <= dim {} requires a hint subspace",
            h.dim()
        )));
    };
    // hint must be a subcoalgebra ...
    let hh = tensor_product_subspace(hinted, hinted);
    for row in hinted.basis_rows() {
        let d = h.comult_vec(&row);
        if !hh.contains(d.data()) {
            return Err(Error::structural(
                "coradical hint is not a subcoalgebra (Delta does not map it into hint (x) hint)",
            ));
        }
    }
    // ... containing all group-likes
    let gl = grouplikes(h)?;
    for g in &gl.elements {
        if !hinted.contains(g) {
            return Err(Error::structural(
                "coradical hint does not contain all group-like elements",
            ));
        }
    }
    Ok(hinted.clone())
}

/// The coradical filtration C_0 <= C_1 <= ... <= C_m = H.
#[derive(Clone, Debug)]
pub struct CoradicalFiltration {
    pub layers: Vec<Subspace>,
}

impl CoradicalFiltration {
    /// Layer r, clamped to the last one.
    pub fn layer(&self, r: usize) -> &Subspace {
        let idx = r.min(self.layers.len() - 1);
        &self.layers[idx]
    }

    /// Index of the last layer (the filtration length).
    pub fn length(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_dims(&self) -> Vec<usize> {
        self.layers.iter().map(Subspace::dim).collect()
    }
}

/// Iterate C_n = Delta^{-1}(H (x) C_{n-1} + C_0 (x) H) by exact kernel
/// computation until the layers stabilize; the final layer must be all of H,
/// otherwise the input was not a coalgebra exhausted by its filtration
/// (impossible for genuine data, so it signals a bad coradical).
pub fn coradical_filtration(h: &VerifiedHopf, c0: &Subspace) -> Result<CoradicalFiltration> {
    let n = h.dim();
    let full = Subspace::full(h.field().clone(), n);
    let delta = h.comult_matrix();
    let mut layers = vec![c0.clone()];
    loop {
        let prev = layers.last().unwrap();
        if prev.dim() == n {
            break;
        }
        let w = tensor_product_subspace(&full, prev).sum(&tensor_product_subspace(c0, &full));
        let q = w.quotient_map();
        let composed = q.mul(&delta);
        let next = composed.kernel();
        if !prev.is_subspace_of(&next) {
            return Err(Error::structural("coradical filtration is not nested"));
        }
        if next.dim() == prev.dim() {
            return Err(Error::structural(format!(
                "coradical filtration stabilized at dimension {} < {}; \
                 the coradical was too small (bad hint or non-coalgebra data)",
                next.dim(),
                n
            )));
        }
        layers.push(next);
    }
    Ok(CoradicalFiltration { layers })
}

/// H_r^+ = H_r intersect ker(eps), clamping r beyond the last layer.
pub fn filtration_plus(h: &VerifiedHopf, filt: &CoradicalFiltration, r: usize) -> Subspace {
    let eps_row = vec![h.counit_vec().to_vec()];
    let ker_eps = Matrix::from_rows(h.field().clone(), eps_row, h.dim())
        .expect("counit row")
        .kernel();
    filt.layer(r).intersect(&ker_eps)
}

/// Exact checks of the filtration laws.
#[derive(Clone, Debug)]
pub struct FiltrationReport {
    pub nested: bool,
    pub exhausts: bool,
    pub delta_compatible: bool,
    /// Present when H_0 is a sub-Hopf-algebra: H_n H_m <= H_{n+m} and
    /// S(H_n) <= H_n.
    pub hopf_filtration: Option<HopfFiltrationLaws>,
}

#[derive(Clone, Debug)]
pub struct HopfFiltrationLaws {
    pub products_ok: bool,
    pub antipode_ok: bool,
}

impl FiltrationReport {
    pub fn all_passed(&self) -> bool {
        self.nested
            && self.exhausts
            && self.delta_compatible
            && self
                .hopf_filtration
                .as_ref()
                .is_none_or(|l| l.products_ok && l.antipode_ok)
    }
}

pub fn verify_filtration(h: &VerifiedHopf, filt: &CoradicalFiltration) -> FiltrationReport {
    let n = h.dim();
    let layers = &filt.layers;
    let nested = layers.windows(2).all(|w| w[0].is_subspace_of(&w[1]));
    let exhausts = layers.last().is_some_and(|l| l.dim() == n);

    // Delta C_n <= sum_{i=0}^n C_i (x) C_{n-i}
    let mut delta_compatible = true;
    'outer: for (ln, layer) in layers.iter().enumerate() {
        let mut target = tensor_product_subspace(filt.layer(0), filt.layer(ln));
        for i in 1..=ln {
            target = target.sum(&tensor_product_subspace(filt.layer(i), filt.layer(ln - i)));
        }
        for row in layer.basis_rows() {
            let d = h.comult_vec(&row);
            if !target.contains(d.data()) {
                delta_compatible = false;
                break 'outer;
            }
        }
    }

    // H_0 sub-Hopf-algebra?
    let c0 = &layers[0];
    let mut h0_sub_hopf = c0.contains(h.unit_vec());
    if h0_sub_hopf {
        let rows = c0.basis_rows();
        'products: for a in &rows {
            for b in &rows {
                if !c0.contains(&h.mul_vec(a, b)) {
                    h0_sub_hopf = false;
                    break 'products;
                }
            }
        }
    }
    if h0_sub_hopf {
        for a in c0.basis_rows() {
            if !c0.contains(&h.antipode_vec(&a)) {
                h0_sub_hopf = false;
                break;
            }
        }
    }

    let hopf_filtration = if h0_sub_hopf {
        let last = filt.length();
        let mut products_ok = true;
        'prod: for a_idx in 0..=last {
            for b_idx in 0..=last {
                if a_idx + b_idx > last {
                    continue; // C_{n+m} = H, trivially satisfied
                }
                let target = filt.layer(a_idx + b_idx);
                for a in layers[a_idx].basis_rows() {
                    for b in layers[b_idx].basis_rows() {
                        if !target.contains(&h.mul_vec(&a, &b)) {
                            products_ok = false;
                            break 'prod;
                        }
                    }
                }
            }
        }
        let mut antipode_ok = true;
        'anti: for layer in layers {
            for a in layer.basis_rows() {
                if !layer.contains(&h.antipode_vec(&a)) {
                    antipode_ok = false;
                    break 'anti;
                }
            }
        }
        Some(HopfFiltrationLaws {
            products_ok,
            antipode_ok,
        })
    } else {
        None
    };

    FiltrationReport {
        nested,
        exhausts,
        delta_compatible,
        hopf_filtration,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub pointed: bool,
    pub connected: bool,
}

/// pointed iff dim C_0 = |G(H)| (the completeness certificate for the
/// group-like enumeration), connected iff dim C_0 = 1.
pub fn classify(c0: &Subspace, gl: &GroupLikeSet) -> Classification {
    Classification {
        pointed: c0.dim() == gl.len(),
        connected: c0.dim() == 1,
    }
}

/// Smallest two-sided ideal containing the given elements: closure of their
/// span under left and right multiplication by basis elements, iterated to a
/// fixed point.
pub fn ideal_generated(h: &VerifiedHopf, elements: &[Vec<Scalar>]) -> Subspace {
    let n = h.dim();
    let mut current = Subspace::from_spanning_rows(h.field().clone(), elements.to_vec(), n)
        .expect("generator rows well-formed");
    loop {
        let mut rows = current.basis_rows();
        for v in current.basis_rows() {
            for i in 0..n {
                rows.push(h.mul_vec(&h.basis_vec(i), &v));
                rows.push(h.mul_vec(&v, &h.basis_vec(i)));
            }
        }
        let next = Subspace::from_spanning_rows(h.field().clone(), rows, n)
            .expect("closure rows well-formed");
        if next.dim() == current.dim() {
            return next;
        }
        current = next;
    }
}

/// The four exact Hopf-ideal membership checks.
#[derive(Clone, Debug)]
pub struct HopfIdealReport {
    pub subspace: Subspace,
    pub two_sided_ideal: bool,
    pub coideal: bool,
    pub counit_zero: bool,
    pub antipode_stable: bool,
}

impl HopfIdealReport {
    pub fn is_hopf_ideal(&self) -> bool {
        self.two_sided_ideal && self.coideal && self.counit_zero && self.antipode_stable
    }
}

pub fn verify_hopf_ideal(h: &VerifiedHopf, j: &Subspace) -> HopfIdealReport {
    let n = h.dim();
    let rows = j.basis_rows();

    let mut two_sided_ideal = true;
    'ideal: for v in &rows {
        for i in 0..n {
            if !j.contains(&h.mul_vec(&h.basis_vec(i), v))
                || !j.contains(&h.mul_vec(v, &h.basis_vec(i)))
            {
                two_sided_ideal = false;
                break 'ideal;
            }
        }
    }

    let full = Subspace::full(h.field().clone(), n);
    let target = tensor_product_subspace(j, &full).sum(&tensor_product_subspace(&full, j));
    let coideal = rows.iter().all(|v| target.contains(h.comult_vec(v).data()));

    let counit_zero = rows.iter().all(|v| h.counit_of(v).is_zero());
    let antipode_stable = rows.iter().all(|v| j.contains(&h.antipode_vec(v)));

    HopfIdealReport {
        subspace: j.clone(),
        two_sided_ideal,
        coideal,
        counit_zero,
        antipode_stable,
    }
}

/// Quotient Hopf algebra H/J for a verified Hopf ideal, with the projection
/// matrix. The complement basis is chosen by the RREF pivot structure of J
/// (deterministic); the quotient data is re-verified against all axioms.
pub fn quotient_hopf(h: &VerifiedHopf, j: &Subspace) -> Result<(VerifiedHopf, Matrix)> {
    let report = verify_hopf_ideal(h, j);
    if !report.is_hopf_ideal() {
        return Err(Error::structural(format!(
            "not a Hopf ideal: two_sided={}, coideal={}, counit_zero={}, antipode_stable={}",
            report.two_sided_ideal, report.coideal, report.counit_zero, report.antipode_stable
        )));
    }
    let n = h.dim();
    let proj = j.quotient_map();
    let comp = j.complement_coords();
    let q = comp.len();
    if q == 0 {
        return Err(Error::structural("quotient by the whole algebra"));
    }
    let names: Vec<String> = comp
        .iter()
        .map(|&c| format!("{}~", h.basis_names()[c]))
        .collect();
    let mut mult = vec![vec![vec![h.field().zero(); q]; q]; q];
    for (u, &cu) in comp.iter().enumerate() {
        for (v, &cv) in comp.iter().enumerate() {
            mult[u][v] = proj.mul_vec(&h.mult_table()[cu][cv]);
        }
    }
    let unit = proj.mul_vec(h.unit_vec());
    let mut comult = vec![vec![h.field().zero(); q * q]; q];
    for (u, &cu) in comp.iter().enumerate() {
        let d = TensorSquare::from_vec(n, h.comult_table()[cu].clone()).unwrap();
        for (a, b, c) in d.nonzero_entries() {
            let pa = proj.mul_vec(&h.basis_vec(a));
            let pb = proj.mul_vec(&h.basis_vec(b));
            for (x, xa) in pa.iter().enumerate() {
                if xa.is_zero() {
                    continue;
                }
                for (y, yb) in pb.iter().enumerate() {
                    if !yb.is_zero() {
                        comult[u][x * q + y] = &comult[u][x * q + y] + &(&(c * xa) * yb);
                    }
                }
            }
        }
    }
    let counit: Vec<Scalar> = comp.iter().map(|&c| h.counit_vec()[c].clone()).collect();
    let mut antipode = vec![vec![h.field().zero(); q]; q];
    for (u, &cu) in comp.iter().enumerate() {
        antipode[u] = proj.mul_vec(&h.antipode_table()[cu]);
    }
    let data = HopfAlgebraData::build_from_tables(
        h.field().clone(),
        names,
        mult,
        unit,
        comult,
        counit,
        antipode,
    )?;
    let verified = data
        .verified()
        .map_err(|e| Error::structural(format!("quotient data fails the axiom suite: {e}")))?;
    Ok((verified, proj))
}

/// Full structural analysis used by the CLI and the acceptance suite.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub grouplikes: GroupLikeSet,
    pub integral_space: Subspace,
    pub semisimple: SemisimpleReport,
    pub coradical: Subspace,
    pub filtration: CoradicalFiltration,
    pub filtration_report: FiltrationReport,
    pub classification: Classification,
    /// true when the coradical came from a hint (small characteristic)
    pub coradical_from_hint: bool,
}

/// Run the whole structural pipeline. In small characteristic, a missing
/// hint defaults to the span of the group-likes; a too-small hint cannot
/// silently misclassify because the filtration must exhaust H.
pub fn analyze(h: &VerifiedHopf, hint: Option<&Subspace>) -> Result<Analysis> {
    let gl = grouplikes(h)?;
    let integral_space = left_integral_space(h);
    let semisimple = is_semisimple(h)?;
    let p = h.field().characteristic();
    let small_char = p != 0 && (p as usize) <= h.dim();
    let (c0, from_hint) = if small_char {
        let auto = gl.span(h.field(), h.dim());
        let hinted = hint.cloned().unwrap_or(auto);
        (coradical(h, Some(&hinted))?, true)
    } else {
        (coradical(h, hint)?, false)
    };
    let filtration = coradical_filtration(h, &c0)?;
    let filtration_report = verify_filtration(h, &filtration);
    let classification = classify(&c0, &gl);
    Ok(Analysis {
        grouplikes: gl,
        integral_space,
        semisimple,
        coradical: c0,
        filtration,
        filtration_report,
        classification,
        coradical_from_hint: from_hint,
    })
}
