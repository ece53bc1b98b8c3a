//! Built-in reference instances used by the test suite, the acceptance
//! suite and the benchmarks: small abelian codes and support patterns with
//! independently known parameters.

use std::sync::Arc;

use crate::apparent::SupportHypermatrix;
use crate::codes::{AbelianCode, RootSelection};
use crate::gfield::{make_context, FieldCtx};
use crate::orbits::{orbit_closure, Dims, OrbitSet};
use crate::transform::MultiPoly;

/// A field context together with a defining set.
#[derive(Debug)]
pub struct Instance {
    pub ctx: Arc<FieldCtx>,
    pub defining: OrbitSet,
}

impl Instance {
    pub fn afforded(&self) -> SupportHypermatrix {
        SupportHypermatrix::afforded(&self.defining)
    }

    pub fn code(&self) -> AbelianCode {
        AbelianCode::new(
            self.ctx.clone(),
            self.defining.clone(),
            RootSelection::canonical(self.defining.dims().arity()),
        )
        .expect("catalog instance is well formed")
    }
}

fn defining_from_reps(q: u64, lengths: &[u32], reps: &[&[u32]]) -> OrbitSet {
    let dims = Dims::new(lengths).expect("valid lengths");
    orbit_closure(reps.iter().copied(), q, &dims).expect("reps in range")
}

/// Binary code of area 7 x 7 whose apparent distance, minimum apparent
/// distance and true distance all equal 9; its afforded matrix is not a
/// CP-matrix but contains a certifying CP submatrix.
pub fn seven_by_seven() -> Instance {
    let ctx = Arc::new(make_context(2, 1, &[7, 7]).unwrap());
    let defining = defining_from_reps(
        2,
        &[7, 7],
        &[
            &[0, 3],
            &[1, 3],
            &[1, 5],
            &[1, 6],
            &[3, 0],
            &[3, 2],
            &[3, 3],
            &[3, 4],
            &[3, 5],
            &[3, 6],
        ],
    );
    Instance { ctx, defining }
}

/// The CP factors certifying [`seven_by_seven`]:
/// `a = (1+X)(1+X^2+X^3) = 1+X+X^2+X^4` in each variable.
pub fn seven_by_seven_cp_support() -> (Vec<u32>, Vec<u32>) {
    (vec![0, 1, 2, 4], vec![0, 1, 2, 4])
}

/// Minimal binary code of area 5 x 9 with free orbit `Q(1,3)`; dimension 4
/// and true distance 24.
pub fn five_by_nine_minimal() -> Instance {
    let ctx = Arc::new(make_context(2, 1, &[5, 9]).unwrap());
    let dims = Dims::new(&[5, 9]).unwrap();
    let free = orbit_closure([[1u32, 3u32].as_slice()], 2, &dims).unwrap();
    Instance {
        ctx,
        defining: free.complement(),
    }
}

/// Binary code of area 5 x 5 with free orbits `Q(1,1)` and `Q(1,3)`;
/// dimension 8 and true distance 8.
pub fn five_by_five() -> Instance {
    let ctx = Arc::new(make_context(2, 1, &[5, 5]).unwrap());
    let dims = Dims::new(&[5, 5]).unwrap();
    let free = orbit_closure([[1u32, 1u32].as_slice(), [1u32, 3u32].as_slice()], 2, &dims).unwrap();
    Instance {
        ctx,
        defining: free.complement(),
    }
}

/// The 5 x 7 pair witnessing that support monotonicity of the apparent
/// distance fails for matrices: `supp(N)` is properly contained in
/// `supp(M)` yet the apparent distance of `N` is smaller.
pub fn monotonicity_pair() -> (SupportHypermatrix, SupportHypermatrix) {
    let dims = Dims::new(&[5, 7]).unwrap();
    let n_supp = orbit_closure([[1u32, 0u32].as_slice(), [1u32, 3u32].as_slice()], 2, &dims).unwrap();
    let m_supp = n_supp
        .union(&orbit_closure([[0u32, 0u32].as_slice()], 2, &dims).unwrap());
    (
        SupportHypermatrix::new(dims.clone(), 2, n_supp.bits().clone()),
        SupportHypermatrix::new(dims, 2, m_supp.bits().clone()),
    )
}

/// Code over F_5 of area 4 x 24 and dimension 73 used to exercise the
/// minimum-apparent-distance chain on a long matrix.
pub fn four_by_24() -> Instance {
    let ctx = Arc::new(make_context(5, 1, &[4, 24]).unwrap());
    let defining = defining_from_reps(
        5,
        &[4, 24],
        &[
            &[0, 0],
            &[0, 1],
            &[0, 2],
            &[0, 3],
            &[0, 6],
            &[0, 7],
            &[0, 9],
            &[1, 1],
            &[1, 2],
            &[1, 3],
            &[2, 1],
            &[2, 2],
            &[3, 6],
        ],
    );
    Instance { ctx, defining }
}

/// Support exponents of the degree-40 divisor of `X^45 - 1` used by the
/// 3 x 45 construction walkthrough.
pub const B45_SUPPORT: [u32; 21] = [
    0, 2, 5, 6, 8, 9, 10, 15, 17, 20, 21, 23, 24, 25, 30, 32, 35, 36, 38, 39, 40,
];

/// Inputs of the 3 x 45 walkthrough: the context, `a = 1 + X` in `L(3)` and
/// the 21-term divisor `b` of `X^45 - 1` in `L(45)`.
pub fn three_by_45_inputs() -> (Arc<FieldCtx>, MultiPoly, MultiPoly) {
    let ctx = Arc::new(make_context(2, 1, &[3, 45]).unwrap());
    let a = poly_from_support(&ctx, 3, &[0, 1]);
    let b = poly_from_support(&ctx, 45, &B45_SUPPORT);
    (ctx, a, b)
}

/// CP pair of area 3 x 7: both shifted factors divide their `X^r - 1`, so
/// the apparent distance of the product matrix equals its nonzero count.
pub fn cp_3x7() -> (Arc<FieldCtx>, MultiPoly, MultiPoly) {
    let ctx = Arc::new(make_context(2, 1, &[3, 7]).unwrap());
    let a = poly_from_support(&ctx, 3, &[1, 2]);
    let b = poly_from_support(&ctx, 7, &[1, 2, 4]);
    (ctx, a, b)
}

/// CP pair of area 5 x 7 where no shift of `a` divides `X^5 - 1`: the
/// apparent distance of the product matrix undershoots its nonzero count.
pub fn cp_5x7() -> (Arc<FieldCtx>, MultiPoly, MultiPoly) {
    let ctx = Arc::new(make_context(2, 1, &[5, 7]).unwrap());
    let a = poly_from_support(&ctx, 5, &[1, 2, 3, 4]);
    let b = poly_from_support(&ctx, 7, &[1, 2, 4]);
    (ctx, a, b)
}

/// One-variable polynomial with coefficient 1 at the given exponents.
pub fn poly_from_support(ctx: &Arc<FieldCtx>, r: u32, exponents: &[u32]) -> MultiPoly {
    let dims = Dims::new(&[r]).unwrap();
    let mut f = MultiPoly::zero(ctx.clone(), dims);
    for &e in exponents {
        f.set_coeff(&[e % r], ctx.one());
    }
    f
}
