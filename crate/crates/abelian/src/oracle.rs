//! Independent ground truth for the rest of the crate: a generator basis of
//! the code over `F_q` computed by plain linear algebra on the evaluation
//! constraints, brute-force minimum distance by Gray-code enumeration of all
//! codewords, and a random-sampling weight upper bound.

use crate::codes::AbelianCode;
use crate::gfield::FieldElement;
use crate::orbits::MultiIndex;
use crate::transform::MultiPoly;
use crate::{par, Error, Result};

/// Basis of the code as an `F_q`-vector space.
#[derive(Debug, Clone)]
pub struct GeneratorBasis {
    pub k: u32,
    pub basis: Vec<MultiPoly>,
}

/// Null space of the evaluation constraints: a basis of
/// `{ f : f(alpha^i) = 0 for all i in D }` over `F_q`. One representative
/// per q-orbit of the defining set suffices; each evaluation in `L` expands
/// to `t` constraints over `F_q` in the basis `1, x, ..., x^{t-1}`.
pub fn generator_basis(code: &AbelianCode) -> Result<GeneratorBasis> {
    let ctx = code.ctx().clone();
    let dims = code.dims().clone();
    let alpha = code.root_elements()?;
    let n = dims.size() as usize;
    let to_fq = FqCoords::new(&ctx)?;

    // power tables per axis
    let tables: Vec<Vec<FieldElement>> = alpha
        .iter()
        .zip(dims.lengths())
        .map(|(&a, &r)| {
            let mut row = Vec::with_capacity(r as usize);
            let mut acc = ctx.one();
            for _ in 0..r {
                row.push(acc);
                acc = ctx.mul(acc, a);
            }
            row
        })
        .collect();
    let point_at = |i: &MultiIndex, j: &MultiIndex| -> FieldElement {
        let mut v = ctx.one();
        for (k, (&ik, &jk)) in i.iter().zip(j.iter()).enumerate() {
            let r = dims.lengths()[k] as u64;
            let e = (ik as u64 * jk as u64 % r) as usize;
            v = ctx.mul(v, tables[k][e]);
        }
        v
    };

    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for rep in code.defining_set().reps() {
        let mut expanded: Vec<Vec<FieldElement>> =
            vec![vec![ctx.zero(); n]; ctx.ext_degree() as usize];
        for (lin, j) in dims.iter_indices().enumerate() {
            let value = point_at(&rep, &j);
            for (u, &c) in to_fq.coords(value).iter().enumerate() {
                expanded[u][lin] = c;
            }
        }
        rows.extend(expanded);
    }

    // Gaussian elimination over F_q (entries stay in the subfield)
    let mut pivots: Vec<usize> = Vec::new();
    let mut reduced: Vec<Vec<FieldElement>> = Vec::new();
    for mut row in rows {
        for (r, &p) in reduced.iter().zip(&pivots) {
            if !row[p].is_zero() {
                let factor = row[p];
                for j in 0..n {
                    row[j] = ctx.sub(row[j], ctx.mul(factor, r[j]));
                }
            }
        }
        if let Some(p) = (0..n).find(|&j| !row[j].is_zero()) {
            let inv = ctx.inv(row[p]);
            for v in row.iter_mut() {
                *v = ctx.mul(*v, inv);
            }
            // back-substitute into earlier rows
            for (r, &rp) in reduced.iter_mut().zip(&pivots) {
                let _ = rp;
                if !r[p].is_zero() {
                    let factor = r[p];
                    for j in 0..n {
                        r[j] = ctx.sub(r[j], ctx.mul(factor, row[j]));
                    }
                }
            }
            reduced.push(row);
            pivots.push(p);
        }
    }

    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut f = MultiPoly::zero(ctx.clone(), dims.clone());
        f.set_coeff(&dims.delin(free as u32), ctx.one());
        for (row, &p) in reduced.iter().zip(&pivots) {
            if !row[free].is_zero() {
                f.set_coeff(&dims.delin(p as u32), ctx.neg(row[free]));
            }
        }
        debug_assert!(f.has_base_coeffs());
        basis.push(f);
    }
    let k = basis.len() as u32;
    if k != code.dimension() {
        return Err(Error::invalid(format!(
            "basis has {k} vectors, expected the code dimension {}",
            code.dimension()
        )));
    }
    Ok(GeneratorBasis { k, basis })
}

/// Expresses extension-field elements in `F_q`-coordinates with respect to
/// the basis `1, x, ..., x^{t-1}`.
struct FqCoords {
    ctx: std::sync::Arc<crate::gfield::FieldCtx>,
    /// Inverse change-of-basis matrix over F_p, row-major, d x d.
    inverse: Vec<Vec<u32>>,
    /// Generator of `F_q` inside `L` (1 when q = p).
    w_powers: Vec<FieldElement>,
}

impl FqCoords {
    fn new(ctx: &std::sync::Arc<crate::gfield::FieldCtx>) -> Result<FqCoords> {
        let p = ctx.characteristic();
        let m = ctx.base_degree() as usize;
        let t = ctx.ext_degree() as usize;
        let d = m * t;
        let w = if ctx.q() == 2 || ctx.order() == 2 {
            ctx.one()
        } else {
            ctx.pow(ctx.generator(), (ctx.order() - 1) / (ctx.q() - 1))
        };
        let mut w_powers = Vec::with_capacity(m);
        let mut acc = ctx.one();
        for _ in 0..m {
            w_powers.push(acc);
            acc = ctx.mul(acc, w);
        }
        // columns: digits of x^u * w^e
        let x = ctx.element(p).unwrap_or_else(|_| ctx.one());
        let mut cols: Vec<Vec<u32>> = Vec::with_capacity(d);
        let mut xu = ctx.one();
        for _ in 0..t {
            for we in &w_powers {
                let v = ctx.mul(xu, *we);
                cols.push(packed_digits(v.packed(), p, d));
            }
            xu = ctx.mul(xu, x);
        }
        // invert the d x d digit matrix over F_p
        let mut aug: Vec<Vec<u32>> = (0..d)
            .map(|r| {
                let mut row: Vec<u32> = (0..d).map(|c| cols[c][r]).collect();
                let mut id = vec![0u32; d];
                id[r] = 1;
                row.extend(id);
                row
            })
            .collect();
        for col in 0..d {
            let pivot = (col..d)
                .find(|&r| aug[r][col] != 0)
                .ok_or_else(|| Error::invalid("basis change matrix is singular"))?;
            aug.swap(col, pivot);
            let inv = mod_pow_inv(aug[col][col], p);
            for v in aug[col].iter_mut() {
                *v = *v * inv % p;
            }
            for r in 0..d {
                if r != col && aug[r][col] != 0 {
                    let f = aug[r][col];
                    for j in 0..2 * d {
                        aug[r][j] = (aug[r][j] + p - f * aug[col][j] % p) % p;
                    }
                }
            }
        }
        let inverse = aug.into_iter().map(|row| row[d..].to_vec()).collect();
        Ok(FqCoords {
            ctx: ctx.clone(),
            inverse,
            w_powers,
        })
    }

    /// `F_q`-coordinates of `z` in the basis `x^u`, length `t`.
    fn coords(&self, z: FieldElement) -> Vec<FieldElement> {
        let ctx = &self.ctx;
        let p = ctx.characteristic();
        let m = ctx.base_degree() as usize;
        let t = ctx.ext_degree() as usize;
        let d = m * t;
        let digits = packed_digits(z.packed(), p, d);
        // solve for the coefficients over F_p in the basis x^u w^e
        let mut sol = vec![0u32; d];
        for (r, row) in self.inverse.iter().enumerate() {
            let mut acc = 0u64;
            for (c, &v) in row.iter().enumerate() {
                acc += v as u64 * digits[c] as u64;
            }
            sol[r] = (acc % p as u64) as u32;
        }
        (0..t)
            .map(|u| {
                let mut acc = ctx.zero();
                for (e, &we) in self.w_powers.iter().enumerate() {
                    let lam = ctx.from_int(sol[u * m + e] as u64);
                    acc = ctx.add(acc, ctx.mul(lam, we));
                }
                acc
            })
            .collect()
    }
}

fn packed_digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for slot in out.iter_mut() {
        *slot = v % p;
        v /= p;
    }
    out
}

fn mod_pow_inv(a: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Exact minimum distance by enumerating all `q^k - 1` nonzero codewords
/// with Gray-code incremental updates, range-partitioned for parallel runs.
/// The default cap admits `2^22` words.
pub fn min_distance_bruteforce(code: &AbelianCode, cap_words: u64) -> Result<u32> {
    let gen = generator_basis(code)?;
    if gen.k == 0 {
        return Err(Error::invalid("the zero code has no minimum distance"));
    }
    let ctx = code.ctx().clone();
    let p = ctx.characteristic() as u64;
    let m = ctx.base_degree();
    // expand scalar multiples by the F_q basis over F_p so each Gray digit
    // steps by exactly one basis vector
    let coords = FqCoords::new(&ctx)?;
    let mut vectors: Vec<Vec<(u32, FieldElement)>> = Vec::new();
    for b in &gen.basis {
        for e in 0..m as usize {
            let we = coords.w_powers[e];
            let scaled = b.scale(we);
            let entries: Vec<(u32, FieldElement)> = scaled
                .support_bits()
                .iter_ones()
                .map(|pos| (pos, scaled.coeff_at(pos)))
                .collect();
            vectors.push(entries);
        }
    }
    let km = vectors.len() as u32;
    let words = (p as u128).pow(km);
    if words > cap_words as u128 {
        return Err(Error::EnumerationCapExceeded {
            k: gen.k as usize,
            q: ctx.q(),
            words,
            cap: cap_words,
        });
    }
    let words = words as u64;
    let n = code.dims().size() as usize;

    // fixed chunking keeps the result independent of the worker count
    let chunk = (words / 256).max(4096);
    let chunks = words.div_ceil(chunk);
    let best = par::range_min(chunks, |c| {
        let start = c * chunk;
        let end = (start + chunk).min(words);
        let mut cur: Vec<FieldElement> = vec![ctx.zero(); n];
        let mut weight: u64 = 0;
        // build the Gray word at `start` digit by digit
        let digits = gray_digits(start, p, km);
        for (j, &g) in digits.iter().enumerate() {
            for _ in 0..g {
                add_vector(&ctx, &mut cur, &mut weight, &vectors[j]);
            }
        }
        let mut local = if start == 0 { u64::MAX } else { weight };
        for i in start + 1..end {
            let e = trailing_zero_digits(i, p);
            add_vector(&ctx, &mut cur, &mut weight, &vectors[e]);
            local = local.min(weight);
        }
        local
    })
    .unwrap_or(u64::MAX);
    Ok(best as u32)
}

fn add_vector(
    ctx: &crate::gfield::FieldCtx,
    cur: &mut [FieldElement],
    weight: &mut u64,
    entries: &[(u32, FieldElement)],
) {
    for &(pos, v) in entries {
        let old = cur[pos as usize];
        let new = ctx.add(old, v);
        *weight += (!new.is_zero()) as u64;
        *weight -= (!old.is_zero()) as u64;
        cur[pos as usize] = new;
    }
}

/// Digits of the modular Gray word for index `i`: `g_j = d_j - d_{j+1} mod p`
/// over the base-p digits of `i`.
fn gray_digits(i: u64, p: u64, len: u32) -> Vec<u64> {
    let mut digits = Vec::with_capacity(len as usize);
    let mut v = i;
    for _ in 0..len {
        digits.push(v % p);
        v /= p;
    }
    digits.push(0);
    (0..len as usize)
        .map(|j| (digits[j] + p - digits[j + 1] % p) % p)
        .collect()
}

/// Position of the single Gray digit that changes from `i - 1` to `i`.
fn trailing_zero_digits(i: u64, p: u64) -> usize {
    let mut x = i;
    let mut e = 0;
    while x % p == 0 {
        x /= p;
        e += 1;
    }
    e
}

/// Minimum weight over `trials` random nonzero codewords; an upper bound on
/// the true distance. `None` for the zero code. Deterministic per seed.
pub fn weight_upper_bound(
    code: &AbelianCode,
    trials: u64,
    seed: u64,
) -> Result<Option<u32>> {
    let gen = generator_basis(code)?;
    if gen.k == 0 {
        return Ok(None);
    }
    let ctx = code.ctx().clone();
    let mut rng = SplitMix64::new(seed);
    let mut best = u32::MAX;
    for _ in 0..trials {
        let mut word = MultiPoly::zero(ctx.clone(), code.dims().clone());
        let mut nonzero = false;
        for b in &gen.basis {
            let lam = ctx.from_int(rng.next_u64() % ctx.characteristic() as u64);
            // scalars stay in the prime field; enough for sampling purposes
            if lam.is_zero() {
                continue;
            }
            nonzero = true;
            word = word.add(&b.scale(lam));
        }
        if !nonzero {
            continue;
        }
        if !word.is_zero() {
            best = best.min(word.weight());
        }
    }
    Ok(Some(best))
}

/// Small deterministic PRNG used wherever sampling must be reproducible.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}
