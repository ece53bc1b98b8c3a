//! The abelian-code model: a code is determined by its defining set (a union
//! of q-orbits) together with a selection of primitive roots of unity, one
//! per axis. Provides dimension, defining sets of polynomials, code-level
//! apparent distance at fixed roots and maximized over root selections.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::apparent::{bmad, SupportHypermatrix};
use crate::bounds::BoundSet;
use crate::gfield::{gcd, FieldCtx, FieldElement};
use crate::orbits::{Dims, OrbitSet};
use crate::transform::{dft,MultiPoly};
use crate::{par, Error, Result};

/// Per-axis exponent `u_k` selecting the root `alpha_k = rho_k^{u_k}` where
/// `rho_k` is the context's deterministic primitive `r_k`-th root. Each
/// `u_k` must be a unit modulo `r_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSelection {
    exps: Vec<u32>,
}

impl RootSelection {
    /// The canonical selection: every exponent 1.
    pub fn canonical(arity: usize) -> RootSelection {
        RootSelection {
            exps: vec![1; arity],
        }
    }

    pub fn new(exps: Vec<u32>) -> RootSelection {
        RootSelection { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn validate(&self, dims: &Dims) -> Result<()> {
        if self.exps.len() != dims.arity() {
            return Err(Error::WrongArity {
                expected: dims.arity(),
                got: self.exps.len(),
            });
        }
        for (&u, &r) in self.exps.iter().zip(dims.lengths()) {
            if gcd(u as u64 % r as u64, r as u64) != 1 {
                return Err(Error::NonUnitExponent { u, r });
            }
        }
        Ok(())
    }

    /// The selected root elements.
    pub fn elements(&self, ctx: &FieldCtx, dims: &Dims) -> Result<Vec<FieldElement>> {
        self.validate(dims)?;
        self.exps
            .iter()
            .zip(dims.lengths())
            .map(|(&u, &r)| Ok(ctx.pow(ctx.primitive_root(r)?, u as u64)))
            .collect()
    }
}

/// An abelian code in `F_q(r_1, ..., r_s)`.
#[derive(Debug, Clone)]
pub struct AbelianCode {
    ctx: Arc<FieldCtx>,
    defining: OrbitSet,
    roots: RootSelection,
}

/// Serialized form:
/// `{"p": ..., "m": ..., "dims": [...], "defining_reps": [[...]], "roots": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeWire {
    pub p: u32,
    pub m: u32,
    pub dims: Vec<u32>,
    pub defining_reps: Vec<Vec<u32>>,
    pub roots: Vec<u32>,
}

impl AbelianCode {
    pub fn new(
        ctx: Arc<FieldCtx>,
        defining: OrbitSet,
        roots: RootSelection,
    ) -> Result<AbelianCode> {
        if defining.q() != ctx.q() {
            return Err(Error::invalid(format!(
                "defining set built for q = {}, context has q = {}",
                defining.q(),
                ctx.q()
            )));
        }
        roots.validate(defining.dims())?;
        for &r in defining.dims().lengths() {
            ctx.primitive_root(r)?;
        }
        Ok(AbelianCode {
            ctx,
            defining,
            roots,
        })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn dims(&self) -> &Dims {
        self.defining.dims()
    }

    pub fn defining_set(&self) -> &OrbitSet {
        &self.defining
    }

    pub fn roots(&self) -> &RootSelection {
        &self.roots
    }

    pub fn root_elements(&self) -> Result<Vec<FieldElement>> {
        self.roots.elements(&self.ctx, self.dims())
    }

    /// `dim C = |I| - |D|`.
    pub fn dimension(&self) -> u32 {
        self.dims().size() - self.defining.len()
    }

    /// The afforded support pattern `M(D)`.
    pub fn afforded(&self) -> SupportHypermatrix {
        SupportHypermatrix::afforded(&self.defining)
    }

    pub fn to_wire(&self) -> CodeWire {
        CodeWire {
            p: self.ctx.characteristic(),
            m: self.ctx.base_degree(),
            dims: self.dims().lengths().to_vec(),
            defining_reps: self.defining.to_wire().reps,
            roots: self.roots.exps().to_vec(),
        }
    }

    pub fn from_wire(wire: &CodeWire) -> Result<AbelianCode> {
        let ctx = Arc::new(crate::gfield::make_context(wire.p, wire.m, &wire.dims)?);
        let dims = Dims::new(&wire.dims)?;
        let seed: Vec<&[u32]> = wire.defining_reps.iter().map(|r| r.as_slice()).collect();
        let defining = crate::orbits::orbit_closure(seed, ctx.q(), &dims)?;
        AbelianCode::new(ctx, defining, RootSelection::new(wire.roots.clone()))
    }
}

/// Defining set of the ideal generated by a base-field polynomial: the
/// indices where every codeword vanishes, i.e. the zeros of the transform.
pub fn defining_set_of(f: &MultiPoly, roots: &RootSelection) -> Result<OrbitSet> {
    if !f.has_base_coeffs() {
        let bad = f
            .support()
            .into_iter()
            .find(|idx| !f.ctx().in_base_field(f.coeff(idx)))
            .unwrap_or_default();
        return Err(Error::NotBaseField { index: bad });
    }
    let alpha = roots.elements(f.ctx(), f.dims())?;
    let transformed = dft(f, &alpha)?;
    // zeros of f at root powers = complement of the transform support;
    // base-field coefficients force this to be a union of q-orbits
    OrbitSet::from_bits(
        f.dims().clone(),
        f.ctx().q(),
        transformed.support_bits().complement(),
    )
}

/// Apparent distance of the code at its own root selection: the minimum
/// apparent distance of the afforded matrix. The zero code reports 0.
pub fn code_apparent_at(code: &AbelianCode, bounds: &BoundSet) -> Result<u32> {
    let m = code.afforded();
    if m.is_zero() {
        return Ok(0);
    }
    Ok(bmad(&m, bounds)?.result)
}

/// Rescales the defining set to a different root selection: the same code
/// looked at through `new_roots` instead of `code.roots()`.
pub fn rescale_defining_set(code: &AbelianCode, new_roots: &RootSelection) -> Result<OrbitSet> {
    let dims = code.dims().clone();
    new_roots.validate(&dims)?;
    // beta_k = rho^{v_k} = alpha_k^{w_k} with w_k = v_k * u_k^{-1}; an index
    // j lies in the new defining set iff w * j lies in the old one
    let w_inv: Vec<u64> = code
        .roots()
        .exps()
        .iter()
        .zip(new_roots.exps())
        .zip(dims.lengths())
        .map(|((&u, &v), &r)| {
            let w = v as u64 * mod_inverse(u, r)? % r as u64;
            mod_inverse(w as u32, r)
        })
        .collect::<Result<_>>()?;
    let mut bits = crate::bits::Bits::empty(dims.size());
    for idx in code.defining_set().iter() {
        let mapped: Vec<u32> = idx
            .iter()
            .zip(&w_inv)
            .zip(dims.lengths())
            .map(|((&i, &winv), &r)| (i as u64 * winv % r as u64) as u32)
            .collect();
        bits.set(dims.lin(&mapped));
    }
    OrbitSet::from_bits(dims, code.defining_set().q(), bits)
}

fn mod_inverse(u: u32, r: u32) -> Result<u64> {
    let u = u as u64 % r as u64;
    if r == 1 {
        return Ok(0);
    }
    for cand in 1..r as u64 {
        if u * cand % r as u64 == 1 {
            return Ok(cand);
        }
    }
    Err(Error::NonUnitExponent { u: u as u32, r })
}

/// Units modulo `r`.
pub fn units(r: u32) -> Vec<u32> {
    if r <= 1 {
        return vec![1];
    }
    (1..r).filter(|&u| gcd(u as u64, r as u64) == 1).collect()
}

/// Representatives of all root selections modulo the Galois action
/// `alpha -> alpha^q` (which leaves the afforded matrix unchanged). With
/// `full` set, every selection is returned instead.
pub fn root_selection_reps(dims: &Dims, q: u64, full: bool) -> Vec<RootSelection> {
    let per_axis: Vec<Vec<u32>> = dims.lengths().iter().map(|&r| units(r)).collect();
    let mut tuples: Vec<Vec<u32>> = vec![Vec::new()];
    for axis in &per_axis {
        let mut next = Vec::new();
        for t in &tuples {
            for &u in axis {
                let mut t2 = t.clone();
                t2.push(u);
                next.push(t2);
            }
        }
        tuples = next;
    }
    if full {
        return tuples.into_iter().map(RootSelection::new).collect();
    }
    let canon = |t: &[u32]| -> Vec<u32> {
        let mut best = t.to_vec();
        let mut cur = t.to_vec();
        loop {
            cur = cur
                .iter()
                .zip(dims.lengths())
                .map(|(&u, &r)| (u as u64 * (q % r as u64) % r as u64) as u32)
                .collect();
            if cur == t {
                break;
            }
            if cur < best {
                best = cur.clone();
            }
        }
        best
    };
    let mut reps: Vec<Vec<u32>> = tuples.iter().map(|t| canon(t)).collect();
    reps.sort();
    reps.dedup();
    reps.into_iter().map(RootSelection::new).collect()
}

/// Apparent distance of the code: the maximum of [`code_apparent_at`] over
/// root selections, scanned modulo the Galois action unless `full_scan`.
pub fn code_apparent(code: &AbelianCode, bounds: &BoundSet, full_scan: bool) -> Result<u32> {
    if code.afforded().is_zero() {
        return Ok(0);
    }
    let reps = root_selection_reps(code.dims(), code.ctx().q(), full_scan);
    let values = par::map_collect(reps, |sel| -> Result<u32> {
        let d = rescale_defining_set(code, &sel)?;
        let m = SupportHypermatrix::afforded(&d);
        Ok(bmad(&m, bounds)?.result)
    });
    let mut best = 0;
    for v in values {
        best = best.max(v?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::gfield::make_context;
    use crate::orbits::orbit_closure;
    use crate::transform::idft;

    #[test]
    fn dimension_examples() {
        let dims = Dims::new(&[5, 7]).unwrap();
        let ctx = Arc::new(make_context(2, 1, &[5, 7]).unwrap());
        let free = AbelianCode::new(
            ctx.clone(),
            OrbitSet::empty(dims.clone(), 2),
            RootSelection::canonical(2),
        )
        .unwrap();
        assert_eq!(free.dimension(), 35);

        assert_eq!(catalog::four_by_24().code().dimension(), 73);
        assert_eq!(catalog::five_by_nine_minimal().code().dimension(), 4);
        assert_eq!(catalog::five_by_five().code().dimension(), 8);
    }

    #[test]
    fn defining_set_of_extremes() {
        let ctx = Arc::new(make_context(2, 1, &[5, 7]).unwrap());
        let dims = Dims::new(&[5, 7]).unwrap();
        let roots = RootSelection::canonical(2);
        let zero = MultiPoly::zero(ctx.clone(), dims.clone());
        assert_eq!(defining_set_of(&zero, &roots).unwrap().len(), 35);
        let one = MultiPoly::one(ctx.clone(), dims.clone());
        assert!(defining_set_of(&one, &roots).unwrap().is_empty());

        let mut not_rational = MultiPoly::zero(ctx.clone(), dims);
        not_rational.set_coeff(&[0, 0], ctx.generator());
        assert!(matches!(
            defining_set_of(&not_rational, &roots),
            Err(Error::NotBaseField { .. })
        ));
    }

    #[test]
    fn code_apparent_at_known_codes() {
        let bch = BoundSet::bch();
        assert_eq!(
            code_apparent_at(&catalog::five_by_nine_minimal().code(), &bch).unwrap(),
            24
        );
        assert_eq!(
            code_apparent_at(&catalog::five_by_five().code(), &bch).unwrap(),
            8
        );
        // the zero code reports 0
        let ctx = Arc::new(make_context(2, 1, &[5, 7]).unwrap());
        let dims = Dims::new(&[5, 7]).unwrap();
        let zero = AbelianCode::new(
            ctx,
            OrbitSet::full(dims, 2),
            RootSelection::canonical(2),
        )
        .unwrap();
        assert_eq!(code_apparent_at(&zero, &bch).unwrap(), 0);
        assert_eq!(zero.dimension(), 0);
    }

    #[test]
    fn rescale_identity_and_galois() {
        let code = catalog::five_by_five().code();
        let same = rescale_defining_set(&code, &RootSelection::new(vec![1, 1])).unwrap();
        assert_eq!(&same, code.defining_set());
        // u = q leaves any orbit union unchanged
        let galois = rescale_defining_set(&code, &RootSelection::new(vec![2, 2])).unwrap();
        assert_eq!(&galois, code.defining_set());
        // non-units are rejected
        assert!(rescale_defining_set(&code, &RootSelection::new(vec![0, 1])).is_err());
    }

    #[test]
    fn rescale_keeps_orbit_unions() {
        let ctx = Arc::new(make_context(2, 1, &[5, 9]).unwrap());
        let dims = Dims::new(&[5, 9]).unwrap();
        let mut state = 11u64;
        for _ in 0..30 {
            let parts = crate::orbits::orbit_partition(2, &dims).unwrap();
            let mut d = OrbitSet::empty(dims.clone(), 2);
            for part in &parts {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(5);
                if state >> 62 & 1 == 1 {
                    d = d.union(part);
                }
            }
            let code =
                AbelianCode::new(ctx.clone(), d, RootSelection::canonical(2)).unwrap();
            for u in [[1u32, 2], [3, 1], [2, 7], [4, 5]] {
                let r = rescale_defining_set(&code, &RootSelection::new(u.to_vec()));
                assert!(r.is_ok(), "rescale by {u:?} broke the orbit union");
                assert_eq!(r.unwrap().len(), code.defining_set().len());
            }
        }
    }

    #[test]
    fn galois_reduction_matches_full_scan() {
        let bch = BoundSet::bch();
        let code = catalog::five_by_five().code();
        let reduced = code_apparent(&code, &bch, false).unwrap();
        let full = code_apparent(&code, &bch, true).unwrap();
        assert_eq!(reduced, full);
        // 16 selections collapse to at most 4 Galois classes
        assert_eq!(root_selection_reps(code.dims(), 2, true).len(), 16);
        assert!(root_selection_reps(code.dims(), 2, false).len() <= 4);
    }

    #[test]
    fn apparent_depends_only_on_defining_set() {
        let bch = BoundSet::bch();
        let inst = catalog::five_by_five();
        let a = AbelianCode::new(
            inst.ctx.clone(),
            inst.defining.clone(),
            RootSelection::canonical(2),
        )
        .unwrap();
        let b = AbelianCode::new(
            inst.ctx.clone(),
            inst.defining.clone(),
            RootSelection::new(vec![1, 1]),
        )
        .unwrap();
        assert_eq!(
            code_apparent_at(&a, &bch).unwrap(),
            code_apparent_at(&b, &bch).unwrap()
        );
    }

    #[test]
    fn symmetric_defining_set_same_value_at_every_root() {
        // a defining set built from full hyperplanes looks the same at every
        // root selection
        let ctx = Arc::new(make_context(2, 1, &[5, 7]).unwrap());
        let dims = Dims::new(&[5, 7]).unwrap();
        let stripes: Vec<Vec<u32>> = (0..7).map(|j| vec![0, j]).collect();
        let refs: Vec<&[u32]> = stripes.iter().map(|v| v.as_slice()).collect();
        let d = orbit_closure(refs, 2, &dims).unwrap();
        let code = AbelianCode::new(ctx, d, RootSelection::canonical(2)).unwrap();
        let bch = BoundSet::bch();
        let base = code_apparent_at(&code, &bch).unwrap();
        for sel in root_selection_reps(code.dims(), 2, true) {
            let d = rescale_defining_set(&code, &sel).unwrap();
            let m = SupportHypermatrix::afforded(&d);
            assert_eq!(bmad(&m, &bch).unwrap().result, base);
        }
    }

    #[test]
    fn five_by_five_span_contains_published_codeword() {
        // the inverse transform of the free-orbit indicator lands in the
        // code and matches the published coefficient support
        let inst = catalog::five_by_five();
        let code = inst.code();
        let alpha = code.root_elements().unwrap();
        let free = code.defining_set().complement();
        let g = MultiPoly::indicator(inst.ctx.clone(), code.dims().clone(), free.bits());
        let w = idft(&g, &alpha).unwrap();
        assert!(w.has_base_coeffs());
        assert_eq!(defining_set_of(&w, code.roots()).unwrap(), *code.defining_set());
        // published coefficient support: Q(1,3) union Q(1,4), weight 8
        assert_eq!(w.weight(), 8);
        let dims = code.dims().clone();
        let expect = orbit_closure(
            [[1u32, 3u32].as_slice(), [1u32, 4u32].as_slice()],
            2,
            &dims,
        )
        .unwrap();
        assert_eq!(w.support_bits(), *expect.bits());
    }

    #[test]
    fn wire_roundtrip() {
        let code = catalog::five_by_five().code();
        let wire = code.to_wire();
        let back = AbelianCode::from_wire(&wire).unwrap();
        assert_eq!(back.defining_set(), code.defining_set());
        assert_eq!(back.roots(), code.roots());
    }
}
