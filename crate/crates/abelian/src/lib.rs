//! Abelian (multivariate cyclic) codes over finite fields: defining-set
//! bounds, apparent distance, the minimum-apparent-distance algorithm and
//! constructions of codes whose apparent distance equals their true minimum
//! distance.
//!
//! An abelian code of length `n = r_1 * ... * r_s` over `F_q` is an ideal of
//! `F_q[X_1,...,X_s] / (X_1^{r_1}-1, ..., X_s^{r_s}-1)`. In the semisimple
//! case (`gcd(r_k, q) = 1`) such a code is determined by its defining set, a
//! union of q-orbits inside the index box `Z_{r_1} x ... x Z_{r_s}`. This
//! crate provides:
//!
//! * exact arithmetic in `F_q` and in an extension `L` containing all the
//!   needed roots of unity ([`gfield`]),
//! * q-orbit and cyclotomic-coset machinery ([`orbits`]),
//! * the discrete Fourier transform on `L(r_1,...,r_s)` ([`transform`]),
//! * defining-set bounds for cyclic codes (BCH, Hartmann-Tzeng) behind a
//!   pluggable trait ([`bounds`]),
//! * the apparent distance of hypermatrices and the minimum-apparent-distance
//!   algorithm for matrices ([`apparent`]),
//! * the code-level model ([`codes`]),
//! * true-distance constructions: `g = abF` factorization, CP matrices,
//!   inverse-DFT constructions, defining-set pruning and bivariate BCH codes
//!   ([`construct`]),
//! * an independent ground-truth oracle: generator bases and brute-force
//!   minimum distance ([`oracle`]).
//!
//! All computation is exact; no floating point is involved anywhere.

pub mod apparent;
pub mod bits;
pub mod bounds;
pub mod catalog;
pub mod codes;
pub mod construct;
pub mod gfield;
pub mod oracle;
pub mod orbits;
pub(crate) mod par;
pub mod transform;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Runs `f` on a dedicated thread pool with `threads` workers when the
/// `parallel` feature is enabled; with the feature disabled (or `threads`
/// zero) it simply calls `f`. Used by the CLI and the benchmark suite to
/// compare scaling.
pub fn run_with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    {
        if threads > 0 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool construction");
            return pool.install(f);
        }
        f()
    }
    #[cfg(not(feature = "parallel"))]
    {
        f()
    }
}
