//! Solve zero-dimensional polynomial systems over Q or F_p for all
//! k-rational points: lexicographic Groebner basis, root extraction in the
//! least variable, substitution, recursion.
//!
//! A presolve pass eliminates linear equations (Gaussian style) before any
//! Groebner computation, and harvests the linear differences of generators
//! sharing the same nonlinear part; both only add/replace elements inside the
//! same ideal, so the solution set is untouched.

use std::collections::BTreeMap;

use crate::commalg::{buchberger, gb_budget_from_env, Monomial, Poly, TermOrder};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::unipoly::{roots_in_field, UniPoly};

/// All k-rational solutions of the system `gens = 0`.
///
/// Requires the solution set to be finite; a system that cannot be put in
/// triangular shape is retried once under a deterministic random linear
/// change of coordinates, and a persistent failure reports
/// [`Error::Inconclusive`] rather than an incomplete answer.
pub fn solve_zero_dimensional(
    field: &FieldSpec,
    nvars: usize,
    gens: &[Poly],
) -> Result<Vec<Vec<Scalar>>> {
    match field {
        FieldSpec::Rational | FieldSpec::PrimeField(_) => {}
        FieldSpec::Cyclotomic(_) => {
            return Err(Error::Unsupported(
                "zero-dimensional solving over a cyclotomic field; restrict scalars to Q".into(),
            ))
        }
    }
    let direct = solve_level(field, nvars, gens.to_vec(), vec![false; nvars]);
    match direct {
        Err(Error::Inconclusive(_)) => {}
        other => return finish(other, nvars),
    }

    // Retry once under an invertible change of coordinates x = M y with M
    // unit upper-triangular and small deterministic entries.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut m = vec![vec![0i64; nvars]; nvars];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
        for (j, entry) in row.iter_mut().enumerate() {
            if j > i {
                *entry = rng.gen_range(-2..=2);
            }
        }
    }
    let subs: Vec<Poly> = (0..nvars)
        .map(|i| {
            let mut p = Poly::zero(field.clone(), nvars);
            for (j, &c) in m[i].iter().enumerate() {
                if c != 0 {
                    p = p.add(&Poly::var(field.clone(), nvars, j).scale(&field.from_i64(c)));
                }
            }
            p
        })
        .collect();
    // Substituting from the last variable upward is sound because M is unit
    // upper-triangular: subs[v] only involves variables >= v.
    let transformed: Vec<Poly> = gens
        .iter()
        .map(|g| {
            let mut acc = g.clone();
            for v in (0..nvars).rev() {
                acc = acc.substitute(v, &subs[v]);
            }
            acc
        })
        .collect();
    let retried = solve_level(field, nvars, transformed, vec![false; nvars]).map_err(|e| {
        if let Error::Inconclusive(msg) = e {
            Error::Inconclusive(format!(
                "persistent after random change of coordinates: {msg}"
            ))
        } else {
            e
        }
    })?;
    // map back: x = M y
    let mapped: Vec<Vec<Option<Scalar>>> = retried
        .into_iter()
        .map(|y| {
            (0..nvars)
                .map(|i| {
                    let mut acc = field.zero();
                    for (j, &c) in m[i].iter().enumerate() {
                        if c != 0 {
                            let yj = y[j].clone().expect("retry solves all variables");
                            acc = &acc + &(&field.from_i64(c) * &yj);
                        }
                    }
                    Some(acc)
                })
                .collect()
        })
        .collect();
    finish(Ok(mapped), nvars)
}

fn finish(points: Result<Vec<Vec<Option<Scalar>>>>, nvars: usize) -> Result<Vec<Vec<Scalar>>> {
    let points = points?;
    let mut out: Vec<Vec<Scalar>> = Vec::with_capacity(points.len());
    for p in points {
        let mut full = Vec::with_capacity(nvars);
        for entry in p {
            full.push(entry.ok_or_else(|| {
                Error::structural("solver returned a point with unresolved coordinates")
            })?);
        }
        out.push(full);
    }
    out.sort_by(|a, b| {
        for (x, y) in a.iter().zip(b.iter()) {
            match x.canonical_cmp(y) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    });
    out.dedup();
    Ok(out)
}

/// One solver level. `resolved[v]` marks variables already handled by outer
/// levels (assigned roots or eliminated linearly); such variables no longer
/// occur in `gens`. Returned points carry `Some` exactly for the variables
/// resolved at this level or deeper.
fn solve_level(
    field: &FieldSpec,
    nvars: usize,
    mut gens: Vec<Poly>,
    mut resolved: Vec<bool>,
) -> Result<Vec<Vec<Option<Scalar>>>> {
    // (variable, expression it equals) in elimination order
    let mut eliminated: Vec<(usize, Poly)> = Vec::new();

    loop {
        gens.retain(|g| !g.is_zero());
        if gens.iter().any(|g| g.degree() == Some(0)) {
            return Ok(Vec::new()); // nonzero constant: inconsistent
        }
        harvest_linear_differences(&mut gens);
        let Some(li) = gens.iter().position(|g| g.degree() == Some(1)) else {
            break;
        };
        let lin = gens.swap_remove(li);
        let (v, expr) = solve_linear_poly(field, &lin);
        for g in gens.iter_mut() {
            *g = g.substitute(v, &expr);
        }
        eliminated.push((v, expr));
        resolved[v] = true;
    }

    let mut points: Vec<Vec<Option<Scalar>>> = Vec::new();
    if gens.is_empty() {
        if let Some(v) = (0..nvars).find(|&v| !resolved[v]) {
            return Err(Error::Inconclusive(format!(
                "variable {v} is unconstrained; system is not zero-dimensional"
            )));
        }
        points.push(vec![None; nvars]);
    } else {
        let gb = buchberger(&gens, TermOrder::Lex, gb_budget_from_env())?;
        if gb.iter().any(|g| g.degree() == Some(0)) {
            return Ok(Vec::new());
        }
        let last = gb
            .iter()
            .flat_map(|g| g.support_vars())
            .max()
            .expect("nonempty reduced basis has support");
        let univariate: Vec<&Poly> = gb
            .iter()
            .filter(|g| g.support_vars() == vec![last])
            .collect();
        if univariate.is_empty() {
            return Err(Error::Inconclusive(format!(
                "no univariate eliminant in variable {last}"
            )));
        }
        let mut elim = to_unipoly(field, univariate[0], last);
        for u in &univariate[1..] {
            elim = elim.gcd(&to_unipoly(field, u, last))?;
        }
        let roots = roots_in_field(&elim, field)?;
        for root in roots {
            let substituted: Vec<Poly> = gb
                .iter()
                .map(|g| g.substitute(last, &Poly::constant(field.clone(), nvars, root.clone())))
                .collect();
            let mut sub_resolved = resolved.clone();
            sub_resolved[last] = true;
            let sub_points = solve_level(field, nvars, substituted, sub_resolved)?;
            for mut p in sub_points {
                p[last] = Some(root.clone());
                points.push(p);
            }
        }
    }

    // Back-substitute this level's eliminated variables, most recent first.
    // Each expression references only variables resolved deeper or later,
    // all of which are filled in by the time it is evaluated.
    for p in points.iter_mut() {
        for (v, expr) in eliminated.iter().rev() {
            debug_assert!(expr.support_vars().iter().all(|w| p[*w].is_some()));
            let vals: Vec<Scalar> = (0..nvars)
                .map(|i| p[i].clone().unwrap_or_else(|| field.zero()))
                .collect();
            p[*v] = Some(expr.eval(&vals));
        }
    }
    Ok(points)
}

/// Solve a degree-one polynomial for its lex-leading variable:
/// returns (v, expr) with x_v = expr.
fn solve_linear_poly(field: &FieldSpec, lin: &Poly) -> (usize, Poly) {
    let (lead_mono, lead_coeff) = lin.leading_term(TermOrder::Lex).unwrap();
    let v = lead_mono
        .exps()
        .iter()
        .position(|&e| e == 1)
        .expect("degree-1 leading monomial");
    let inv = lead_coeff.inv().expect("nonzero leading coefficient");
    let mut expr = Poly::zero(field.clone(), lin.nvars());
    for (m, c) in lin.terms() {
        if m == lead_mono {
            continue;
        }
        expr.add_term(m.clone(), &(-c) * &inv);
    }
    (v, expr)
}

/// For generators sharing the same nonlinear part, append their (linear)
/// differences; these lie in the ideal and let the presolve fire earlier.
fn harvest_linear_differences(gens: &mut Vec<Poly>) {
    let mut groups: BTreeMap<Vec<(Monomial, String)>, usize> = BTreeMap::new();
    let mut extra = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let key: Vec<(Monomial, String)> = g
            .terms()
            .filter(|(m, _)| m.degree() >= 2)
            .map(|(m, c)| (m.clone(), c.to_string()))
            .collect();
        if key.is_empty() {
            continue;
        }
        match groups.get(&key) {
            Some(&j) => {
                let diff = gens[j].sub(g);
                if !diff.is_zero() && diff.degree().is_some_and(|d| d <= 1) {
                    extra.push(diff);
                }
            }
            None => {
                groups.insert(key, i);
            }
        }
    }
    gens.extend(extra);
}

fn to_unipoly(field: &FieldSpec, g: &Poly, var: usize) -> UniPoly {
    let deg = g.degree().unwrap_or(0) as usize;
    let mut coeffs = vec![field.zero(); deg + 1];
    for (m, c) in g.terms() {
        coeffs[m.exp(var) as usize] = c.clone();
    }
    UniPoly::from_coeffs(field.clone(), coeffs)
}
