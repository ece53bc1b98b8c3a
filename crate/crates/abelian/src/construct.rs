//! Constructions of abelian codes whose apparent distance equals their true
//! minimum distance: the support-equality condition and the resulting
//! `g = a(X_1) b(X_2) F(X_1,X_2)` factorization, composed-polynomial (CP)
//! matrices, the inverse-transform construction with its distance
//! certificate, defining-set pruning, and bivariate BCH codes.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::apparent::{bmad, hyper_apparent, ApparentReport, SupportHypermatrix};
use crate::bits::Bits;
use crate::bounds::BoundSet;
use crate::codes::{code_apparent_at, defining_set_of, AbelianCode, RootSelection};
use crate::gfield::{FieldCtx, FieldElement};
use crate::orbits::{cyclotomic_coset, orbit_closure, Dims, MultiIndex, OrbitSet};
use crate::transform::{dft, idft, MultiPoly, UniPoly};
use crate::{par, Error, Result};

/// Data gathered while testing the support equalities
/// `Delta_1 = Delta_2 = Delta = |nonzeros of g|`; feeds the factorization.
#[derive(Debug, Clone)]
pub struct FactorAnalysis {
    pub report: ApparentReport,
    /// Nonzero count of `g` over the root grid.
    pub zbar: u32,
    /// Involved row levels (first variable).
    pub m1: Vec<u32>,
    /// Involved column levels (second variable).
    pub m2: Vec<u32>,
    /// Projections of the nonzero set of `g` onto each exponent axis.
    pub zbar_projections: (Vec<u32>, Vec<u32>),
    pub holds: bool,
}

/// Tests the support equalities for a nonzero two-variable polynomial. The
/// apparent distances are taken with respect to the BCH bound alone, the
/// only ds-bound for which the nonzero count is controlled by degrees.
pub fn check_condition_imposed(
    g: &MultiPoly,
    roots: &[FieldElement],
) -> Result<(bool, FactorAnalysis)> {
    if g.dims().arity() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            got: g.dims().arity(),
        });
    }
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let bch = BoundSet::bch();
    let m = SupportHypermatrix::new(g.dims().clone(), g.ctx().q(), g.support_bits());
    let report = hyper_apparent(&m, &bch);
    let inverse = idft(g, roots)?;
    let zbar = inverse.weight();
    // the nonzero set of g sits at the negated support of the inverse
    let dims = g.dims().clone();
    let mut proj0: Vec<u32> = Vec::new();
    let mut proj1: Vec<u32> = Vec::new();
    for idx in inverse.support() {
        let n0 = (dims.lengths()[0] - idx[0]) % dims.lengths()[0];
        let n1 = (dims.lengths()[1] - idx[1]) % dims.lengths()[1];
        if !proj0.contains(&n0) {
            proj0.push(n0);
        }
        if !proj1.contains(&n1) {
            proj1.push(n1);
        }
    }
    proj0.sort();
    proj1.sort();
    let holds = report.axes[0].delta == report.axes[1].delta
        && report.axes[0].delta == report.value
        && report.value == zbar;
    let m1 = report
        .involved
        .iter()
        .filter(|&&(axis, _)| axis == 0)
        .map(|&(_, k)| k)
        .collect();
    let m2 = report
        .involved
        .iter()
        .filter(|&&(axis, _)| axis == 1)
        .map(|&(_, k)| k)
        .collect();
    Ok((
        holds,
        FactorAnalysis {
            report,
            zbar,
            m1,
            m2,
            zbar_projections: (proj0, proj1),
            holds,
        },
    ))
}

/// Coefficient of `X_fixed^level`, read as a univariate polynomial in the
/// other variable of a two-variable residue.
fn coeff_poly(g: &MultiPoly, fixed_axis: usize, level: u32) -> UniPoly {
    let dims = g.dims();
    let other = 1 - fixed_axis;
    let r = dims.lengths()[other];
    let coeffs = (0..r)
        .map(|i| {
            let idx = if fixed_axis == 0 {
                vec![level, i]
            } else {
                vec![i, level]
            };
            g.coeff(&idx)
        })
        .collect();
    UniPoly::new(g.ctx().clone(), coeffs)
}

/// Divides every coefficient polynomial of `g` along `axis` by `divisor`
/// (a univariate polynomial in variable `axis`). Fails unless every division
/// is exact.
fn divide_along(g: &MultiPoly, axis: usize, divisor: &UniPoly) -> Result<MultiPoly> {
    let dims = g.dims().clone();
    let other = 1 - axis;
    let mut out = MultiPoly::zero(g.ctx().clone(), dims.clone());
    for level in 0..dims.lengths()[other] {
        let piece = coeff_poly(g, other, level);
        if piece.is_zero() {
            continue;
        }
        let quot = piece.div_exact(divisor).ok_or_else(|| Error::ConditionNotVerified {
            detail: format!("coefficient at level {level} is not divisible by the extracted factor"),
        })?;
        for (e, &c) in quot.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = if axis == 0 {
                vec![e as u32, level]
            } else {
                vec![level, e as u32]
            };
            out.set_coeff(&idx, c);
        }
    }
    Ok(out)
}

fn embed_axis(p: &MultiPoly, dims2: &Dims, axis: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(p.ctx().clone(), dims2.clone());
    for idx in p.support() {
        let full = if axis == 0 {
            vec![idx[0], 0]
        } else {
            vec![0, idx[0]]
        };
        out.set_coeff(&full, p.coeff(&idx));
    }
    out
}

/// Extracts the factorization `g = a(X_1) b(X_2) F(X_1, X_2)` guaranteed by
/// the support equalities: `a` is the monic gcd of `X_1^{r_1} - 1` with an
/// involved column, `b` symmetrically, `F` the exact quotient. The product
/// is re-multiplied and compared against `g` before returning.
pub fn factor_abf(
    g: &MultiPoly,
    analysis: &FactorAnalysis,
) -> Result<(MultiPoly, MultiPoly, MultiPoly)> {
    if !analysis.holds {
        return Err(Error::ConditionNotVerified {
            detail: "support equalities do not hold for g".into(),
        });
    }
    let dims = g.dims();
    let (r1, r2) = (dims.lengths()[0], dims.lengths()[1]);
    let k2 = *analysis.m2.first().ok_or_else(|| Error::ConditionNotVerified {
        detail: "no involved column".into(),
    })?;
    let k1 = *analysis.m1.first().ok_or_else(|| Error::ConditionNotVerified {
        detail: "no involved row".into(),
    })?;
    let xr1 = UniPoly::x_pow_minus_one(g.ctx().clone(), r1);
    let xr2 = UniPoly::x_pow_minus_one(g.ctx().clone(), r2);
    let a = xr1.gcd(&coeff_poly(g, 1, k2));
    let b = xr2.gcd(&coeff_poly(g, 0, k1));
    let without_a = divide_along(g, 0, &a)?;
    let f = divide_along(&without_a, 1, &b)?;
    let a_res = a.to_residue(r1)?;
    let b_res = b.to_residue(r2)?;
    let product = embed_axis(&a_res, dims, 0)
        .mul(&embed_axis(&b_res, dims, 1))
        .mul(&f);
    if &product != g {
        return Err(Error::ConditionNotVerified {
            detail: "re-multiplied factorization does not reproduce g".into(),
        });
    }
    Ok((a_res, b_res, f))
}

/// Tests whether a two-variable pattern is a CP-matrix, i.e. whether its
/// support is the Cartesian product of its projections; returns the two
/// projections on success.
pub fn is_cp_matrix(m: &SupportHypermatrix) -> Option<(Bits, Bits)> {
    if m.dims().arity() != 2 {
        return None;
    }
    let rows = m.axis_support(0);
    let cols = m.axis_support(1);
    if m.weight() != rows.count() * cols.count() {
        return None;
    }
    for i in rows.iter_ones() {
        for j in cols.iter_ones() {
            if !m.pattern().get(m.dims().lin(&[i, j])) {
                return None;
            }
        }
    }
    Some((rows, cols))
}

/// Least `h` such that the degree `< r` lift of `X^h a` divides `X^r - 1`,
/// if any.
pub fn divisor_shift(a: &MultiPoly) -> Result<Option<u32>> {
    if a.dims().arity() != 1 {
        return Err(Error::WrongArity {
            expected: 1,
            got: a.dims().arity(),
        });
    }
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let r = a.dims().lengths()[0];
    let xr1 = UniPoly::x_pow_minus_one(a.ctx().clone(), r);
    for h in 0..r {
        let lift = UniPoly::from_residue(&a.shift(&[h]))?;
        if lift.divides(&xr1) {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// True iff every evaluation of the lift of `X^h a` at the powers of `alpha`
/// lies in the base field.
pub fn is_rational_at(a: &MultiPoly, alpha: FieldElement, h: u32) -> Result<bool> {
    if a.dims().arity() != 1 {
        return Err(Error::WrongArity {
            expected: 1,
            got: a.dims().arity(),
        });
    }
    let evals = dft(&a.shift(&[h]), &[alpha])?;
    Ok(evals.has_base_coeffs())
}

/// Least `h` making all evaluations of `X^h a` rational over the base
/// field, if any. The answer does not depend on which primitive root of the
/// same order is used.
pub fn rational_shift(a: &MultiPoly, alpha: FieldElement) -> Result<Option<u32>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let r = a.dims().lengths()[0];
    for h in 0..r {
        if is_rational_at(a, alpha, h)? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Output of the inverse-transform construction: the code, the certified
/// distance, and the witness codeword whose weight equals the certificate.
#[derive(Debug, Clone)]
pub struct Construction {
    pub code: AbelianCode,
    pub guaranteed_d: u32,
    pub witness: MultiPoly,
    pub shifts: (u32, u32),
}

/// Builds the abelian code generated by
/// `idft(X_1^{h_1} a) * idft(X_2^{h_2} b)` and certifies that its apparent
/// distance, minimum apparent distance and true distance all equal
/// `Delta(M(a)) * Delta(M(b))`.
///
/// Preconditions, each rejected with a named error: `a | X_1^{r_1} - 1` and
/// `b | X_2^{r_2} - 1` as true polynomials, and both shifts make every
/// evaluation rational over the base field.
pub fn construct_true_distance_code(
    ctx: Arc<FieldCtx>,
    a: &MultiPoly,
    b: &MultiPoly,
    roots: &RootSelection,
    h1: u32,
    h2: u32,
) -> Result<Construction> {
    let (r1, r2) = (a.dims().lengths()[0], b.dims().lengths()[0]);
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dims2 = Dims::new(&[r1, r2])?;
    let alpha = roots.elements(&ctx, &dims2)?;
    let xr1 = UniPoly::x_pow_minus_one(ctx.clone(), r1);
    let xr2 = UniPoly::x_pow_minus_one(ctx.clone(), r2);
    if !UniPoly::from_residue(a)?.divides(&xr1) {
        return Err(Error::NotADivisor { side: "a", r: r1 });
    }
    if !UniPoly::from_residue(b)?.divides(&xr2) {
        return Err(Error::NotADivisor { side: "b", r: r2 });
    }
    if !is_rational_at(a, alpha[0], h1)? {
        return Err(Error::NotRationalAtShift {
            side: "a",
            h: h1,
            q: ctx.q(),
        });
    }
    if !is_rational_at(b, alpha[1], h2)? {
        return Err(Error::NotRationalAtShift {
            side: "b",
            h: h2,
            q: ctx.q(),
        });
    }
    let sa = a.shift(&[h1]);
    let sb = b.shift(&[h2]);
    let g = embed_axis(&sa, &dims2, 0).mul(&embed_axis(&sb, &dims2, 1));
    let witness = idft(&g, &alpha)?;
    if !witness.has_base_coeffs() {
        return Err(Error::invalid("witness left the base field despite rational shifts"));
    }
    let defining = OrbitSet::from_bits(dims2.clone(), ctx.q(), g.support_bits().complement())?;
    let code = AbelianCode::new(ctx.clone(), defining, roots.clone())?;

    let bch = BoundSet::bch();
    let delta_a = bch.eval(r1, &a.support_bits().complement());
    let delta_b = bch.eval(r2, &b.support_bits().complement());
    let guaranteed_d = delta_a * delta_b;
    let unshifted = embed_axis(a, &dims2, 0).mul(&embed_axis(b, &dims2, 1));
    let prod_pattern =
        SupportHypermatrix::new(dims2.clone(), ctx.q(), unshifted.support_bits());
    let delta_prod = hyper_apparent(&prod_pattern, &bch).value;
    if delta_prod != guaranteed_d {
        return Err(Error::invalid(format!(
            "product apparent distance {delta_prod} differs from factor product {guaranteed_d}"
        )));
    }
    if witness.weight() != guaranteed_d {
        return Err(Error::invalid(format!(
            "witness weight {} does not match the certificate {guaranteed_d}",
            witness.weight()
        )));
    }
    let at_roots = code_apparent_at(&code, &bch)?;
    if at_roots != guaranteed_d {
        return Err(Error::invalid(format!(
            "code apparent distance {at_roots} does not match the certificate {guaranteed_d}"
        )));
    }
    Ok(Construction {
        code,
        guaranteed_d,
        witness,
        shifts: (h1, h2),
    })
}

/// Outcome of [`verify_true_distance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// A nonzero orbit submatrix attains both the minimum apparent distance
    /// and the weight of its idempotent: the true distance is proven.
    Proven { d: u32, witness_reps: Vec<MultiIndex> },
    /// No such submatrix exists below the chain start; the sufficient
    /// condition is silent.
    Inconclusive,
}

/// Searches for an orbit submatrix certifying that the code's minimum
/// apparent distance is its true distance. The search starts from the first
/// chain matrix attaining the final bound and enumerates submatrices in
/// decreasing support order.
pub fn verify_true_distance(
    code: &AbelianCode,
    bounds: &BoundSet,
    orbit_cap: usize,
) -> Result<Verdict> {
    let m = code.afforded();
    if m.is_zero() {
        return Err(Error::invalid("the zero code has no distance to verify"));
    }
    let trace = bmad(&m, bounds)?;
    let target = trace.result;
    let start = &trace.steps[trace.witness_step].matrix;
    let orbits = start.support_orbits()?.orbits();
    if orbits.len() > orbit_cap {
        return Err(Error::OrbitCapExceeded {
            orbits: orbits.len(),
            cap: orbit_cap,
        });
    }
    let alpha = code.root_elements()?;
    let dims = code.dims().clone();
    let t = orbits.len() as u32;
    // apparent distances of all submatrices in parallel, then the expensive
    // weight check only on candidates, largest support first
    let masks: Vec<u64> = (1..(1u64 << t)).collect();
    let deltas = par::map_collect(masks.clone(), |mask| {
        let sub = submatrix(&dims, code.defining_set().q(), &orbits, mask);
        hyper_apparent(&sub, bounds).value
    });
    let mut candidates: Vec<(u64, u32)> = masks
        .into_iter()
        .zip(deltas)
        .filter(|&(_, d)| d == target)
        .map(|(mask, _)| {
            let size: u32 = orbits
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, o)| o.len())
                .sum();
            (mask, size)
        })
        .collect();
    candidates.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    for (mask, _) in candidates {
        let sub = submatrix(&dims, code.defining_set().q(), &orbits, mask);
        let pattern = MultiPoly::indicator(code.ctx().clone(), dims.clone(), sub.pattern());
        let weight = idft(&pattern, &alpha)?.weight();
        if weight == target {
            return Ok(Verdict::Proven {
                d: target,
                witness_reps: sub.support_orbits()?.reps(),
            });
        }
    }
    Ok(Verdict::Inconclusive)
}

fn submatrix(
    dims: &Dims,
    q: u64,
    orbits: &[OrbitSet],
    mask: u64,
) -> SupportHypermatrix {
    let mut bits = Bits::empty(dims.size());
    for (i, orbit) in orbits.iter().enumerate() {
        if mask >> i & 1 == 1 {
            bits.union_with(orbit.bits());
        }
    }
    SupportHypermatrix::new(dims.clone(), q, bits)
}

/// Greedily removes orbits from the defining set, in sorted representative
/// order, as long as the code's apparent distance at its roots stays equal
/// to the witness weight. The witness stays a codeword throughout, so the
/// distance certificate is preserved while the dimension can only grow.
pub fn prune_defining_set(
    code: &AbelianCode,
    witness: &MultiPoly,
    bounds: &BoundSet,
) -> Result<AbelianCode> {
    let target = witness.weight();
    if target == 0 {
        return Err(Error::ZeroPolynomial);
    }
    let witness_defining = defining_set_of(witness, code.roots())?;
    if !code.defining_set().is_subset_of(&witness_defining) {
        return Err(Error::invalid("witness is not a codeword of the code being pruned"));
    }
    let mut current = code.defining_set().clone();
    for orbit in code.defining_set().orbits() {
        let candidate = current.subtract(&orbit);
        let m = SupportHypermatrix::afforded(&candidate);
        if m.is_zero() {
            continue;
        }
        if bmad(&m, bounds)?.result == target {
            current = candidate;
        }
    }
    AbelianCode::new(code.ctx().clone(), current, code.roots().clone())
}

/// Designed-distance description of a bivariate BCH code. Axes are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchSpec {
    pub axes: Vec<usize>,
    pub deltas: Vec<u32>,
    pub offsets: Vec<u32>,
}

impl BchSpec {
    pub fn new(axes: Vec<usize>, deltas: Vec<u32>, offsets: Vec<u32>) -> BchSpec {
        BchSpec { axes, deltas, offsets }
    }

    fn validate(&self, dims: &Dims) -> Result<()> {
        if self.axes.len() != self.deltas.len() || self.axes.len() != self.offsets.len() {
            return Err(Error::invalid("axes, deltas and offsets must have equal length"));
        }
        for (i, &axis) in self.axes.iter().enumerate() {
            if axis == 0 || axis > dims.arity() {
                return Err(Error::invalid(format!("axis {axis} out of range")));
            }
            if self.axes[..i].contains(&axis) {
                return Err(Error::invalid(format!("axis {axis} repeated")));
            }
            let r = dims.lengths()[axis - 1];
            let delta = self.deltas[i];
            if delta < 2 || delta > r {
                return Err(Error::BadDesignedDistance { delta, r });
            }
        }
        Ok(())
    }
}

/// Defining set of the bivariate BCH code: for each selected axis, the orbit
/// closure of `delta_k - 1` consecutive full hyperplane stripes.
pub fn bch_defining_set(spec: &BchSpec, q: u64, dims: &Dims) -> Result<OrbitSet> {
    spec.validate(dims)?;
    let mut positions: Vec<MultiIndex> = Vec::new();
    for (i, &axis) in spec.axes.iter().enumerate() {
        let axis0 = axis - 1;
        let r = dims.lengths()[axis0];
        for l in 0..=(spec.deltas[i] - 2) {
            let level = (spec.offsets[i] + l) % r;
            for idx in dims.iter_indices() {
                if idx[axis0] == level {
                    positions.push(idx);
                }
            }
        }
    }
    let seed: Vec<&[u32]> = positions.iter().map(|p| p.as_slice()).collect();
    orbit_closure(seed, q, dims)
}

/// Recognizes a code with CP afforded matrix as a bivariate BCH code: each
/// projected defining set must be a union of consecutive cyclotomic cosets.
/// Reports the maximal designed distance, ties broken by least offset.
pub fn recognize_bivariate_bch(code: &AbelianCode) -> Result<Option<BchSpec>> {
    let m = code.afforded();
    let Some((rows, cols)) = is_cp_matrix(&m) else {
        return Err(Error::NotCpMatrix);
    };
    let q = code.ctx().q();
    let mut spec = BchSpec::new(Vec::new(), Vec::new(), Vec::new());
    for (axis0, proj) in [rows, cols].into_iter().enumerate() {
        let r = code.dims().lengths()[axis0];
        let d_axis = proj.complement();
        if d_axis.is_empty() {
            continue;
        }
        match recognize_axis(&d_axis, q, r)? {
            Some((delta, offset)) => {
                spec.axes.push(axis0 + 1);
                spec.deltas.push(delta);
                spec.offsets.push(offset);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(spec))
}

fn recognize_axis(d_axis: &Bits, q: u64, r: u32) -> Result<Option<(u32, u32)>> {
    let cosets: Vec<Vec<u32>> = (0..r)
        .map(|b| cyclotomic_coset(b, q, r))
        .collect::<Result<_>>()?;
    for delta in (2..=r).rev() {
        for b in 0..r {
            let mut union = Bits::empty(r);
            for l in 0..=(delta - 2) {
                for &member in &cosets[((b + l) % r) as usize] {
                    union.set(member);
                }
            }
            if union == *d_axis {
                return Ok(Some((delta, b)));
            }
        }
    }
    Ok(None)
}

/// For a CP code, checks the product identity for the code-level apparent
/// distance: the value at the code's roots equals the product of the two
/// projected cyclic values, and coincides with the plain apparent distance
/// of the afforded matrix. Returns `(code value, axis-1 value, axis-2 value)`.
pub fn product_apparent_check(code: &AbelianCode, bounds: &BoundSet) -> Result<(u32, u32, u32)> {
    let m = code.afforded();
    let Some((rows, cols)) = is_cp_matrix(&m) else {
        return Err(Error::NotCpMatrix);
    };
    if m.is_zero() {
        return Ok((0, 0, 0));
    }
    let d1 = bounds.eval(code.dims().lengths()[0], &rows.complement());
    let d2 = bounds.eval(code.dims().lengths()[1], &cols.complement());
    let plain = hyper_apparent(&m, bounds).value;
    let mad = bmad(&m, bounds)?.result;
    if plain != mad {
        return Err(Error::invalid(format!(
            "CP matrix with minimum apparent distance {mad} below its apparent distance {plain}"
        )));
    }
    if plain != d1 * d2 {
        return Err(Error::invalid(format!(
            "product identity violated: {plain} != {d1} * {d2}"
        )));
    }
    Ok((plain, d1, d2))
}

/// Extends a CP code to the bivariate BCH code with the same certified
/// distance: each projected defining set is replaced by the closure of its
/// longest consecutive run. The defining set shrinks, so the dimension can
/// only grow.
pub fn bch_extension(code: &AbelianCode) -> Result<(AbelianCode, BchSpec)> {
    let m = code.afforded();
    if m.is_zero() {
        return Err(Error::invalid("the zero code has no BCH extension"));
    }
    let Some((rows, cols)) = is_cp_matrix(&m) else {
        return Err(Error::NotCpMatrix);
    };
    let q = code.ctx().q();
    let mut spec = BchSpec::new(Vec::new(), Vec::new(), Vec::new());
    for (axis0, proj) in [rows, cols].into_iter().enumerate() {
        let r = code.dims().lengths()[axis0];
        let d_axis = proj.complement();
        if d_axis.is_empty() {
            continue;
        }
        let bch = BoundSet::bch();
        let delta = bch.eval(r, &d_axis);
        let offset = (0..r)
            .find(|&b| (0..=(delta - 2)).all(|l| d_axis.get((b + l) % r)))
            .expect("a run of length delta - 1 exists by definition of the bound");
        spec.axes.push(axis0 + 1);
        spec.deltas.push(delta);
        spec.offsets.push(offset);
    }
    let defining = bch_defining_set(&spec, q, code.dims())?;
    if !defining.is_subset_of(code.defining_set()) {
        return Err(Error::invalid("BCH extension would not contain the code"));
    }
    let extended = AbelianCode::new(code.ctx().clone(), defining, code.roots().clone())?;
    Ok((extended, spec))
}
