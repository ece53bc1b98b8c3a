//! Defining-set bounds for cyclic codes. A ds-bound assigns to every subset
//! `N` of `Z_n` a sound lower bound on the minimum distance of any cyclic
//! code whose defining set contains `N`, is monotone under inclusion, and
//! maps the empty set to 1. The built-in instances are the BCH bound and the
//! Hartmann-Tzeng bound; further bounds plug in through [`DsBound`].

use std::collections::HashMap;
use std::sync::RwLock;

use crate::bits::Bits;
use crate::{Error, Result};

/// A defining-set bound, exposed through its optimal form: the largest value
/// the bound certifies for a given subset of `Z_n`.
pub trait DsBound: Send + Sync {
    fn name(&self) -> &'static str;

    /// `optimal(n, N)`: must return 1 on the empty set, be monotone in `N`,
    /// and never exceed the distance of a cyclic code whose defining set
    /// contains `N`.
    fn optimal(&self, n: u32, subset: &Bits) -> u32;
}

/// The BCH bound: one plus the longest circular run of consecutive residues
/// contained in the set.
#[derive(Debug, Default)]
pub struct BchBound;

impl DsBound for BchBound {
    fn name(&self) -> &'static str {
        "bch"
    }

    fn optimal(&self, n: u32, subset: &Bits) -> u32 {
        debug_assert_eq!(subset.len(), n);
        1 + longest_circular_run(n, subset)
    }
}

/// The Hartmann-Tzeng bound with the classical restriction `gcd(c, n) = 1`:
/// the best `delta + s` over all `b`, `delta >= 2`, `s >= 0`, unit `c` such
/// that `{ b + i1 + i2*c : 0 <= i1 <= delta-2, 0 <= i2 <= s }` lies in the
/// set. The `s = 0` case degenerates to the BCH bound, so this never returns
/// less than [`BchBound`].
#[derive(Debug, Default)]
pub struct HtBound;

impl DsBound for HtBound {
    fn name(&self) -> &'static str {
        "ht"
    }

    fn optimal(&self, n: u32, subset: &Bits) -> u32 {
        debug_assert_eq!(subset.len(), n);
        let count = subset.count();
        if count == 0 {
            return 1;
        }
        if count == n {
            return n + 1;
        }
        let run = run_table(n, subset);
        let mut best = 1u32;
        for c in 1..n {
            if crate::gfield::gcd(c as u64, n as u64) != 1 {
                continue;
            }
            for b in 0..n {
                if run[b as usize] == 0 {
                    continue;
                }
                // walking k steps of stride c from b, delta - 1 is capped by
                // the shortest run seen, so delta + s = min_run + 1 + k
                let mut min_run = u32::MAX;
                let mut k = 0u32;
                loop {
                    let r = run[((b as u64 + k as u64 * c as u64) % n as u64) as usize];
                    if r == 0 {
                        break;
                    }
                    min_run = min_run.min(r);
                    best = best.max(min_run + 1 + k);
                    k += 1;
                }
            }
        }
        best
    }
}

/// Length of the longest circular run of consecutive members; `n` when the
/// set is all of `Z_n`.
fn longest_circular_run(n: u32, subset: &Bits) -> u32 {
    let count = subset.count();
    if count == 0 {
        return 0;
    }
    if count == n {
        return n;
    }
    run_table(n, subset).into_iter().max().unwrap_or(0)
}

/// `run[x]` = number of consecutive members starting at `x` (0 if `x` is not
/// a member). Requires the set to be proper.
fn run_table(n: u32, subset: &Bits) -> Vec<u32> {
    let z = (0..n).find(|&i| !subset.get(i)).expect("proper subset");
    let mut run = vec![0u32; n as usize];
    for off in 1..n {
        let x = (z + n - off) % n;
        if subset.get(x) {
            run[x as usize] = run[((x + 1) % n) as usize] + 1;
        }
    }
    run
}

/// An ordered set of ds-bounds with a per-session memo table. The BCH
/// instance is always present.
pub struct BoundSet {
    bounds: Vec<Box<dyn DsBound>>,
    cache: RwLock<HashMap<(u32, Vec<u64>), u32>>,
}

impl std::fmt::Debug for BoundSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

impl BoundSet {
    /// The default set: BCH only.
    pub fn bch() -> BoundSet {
        BoundSet {
            bounds: vec![Box::new(BchBound)],
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// BCH plus Hartmann-Tzeng.
    pub fn bch_ht() -> BoundSet {
        let mut b = BoundSet::bch();
        b.push(Box::new(HtBound));
        b
    }

    /// Parses a selection such as `"bch"` or `"bch,ht"`. BCH is added even
    /// when omitted.
    pub fn from_names(names: &str) -> Result<BoundSet> {
        let mut set = BoundSet::bch();
        for name in names.split(',').filter(|s| !s.is_empty()) {
            match name.trim() {
                "bch" => {}
                "ht" => set.push(Box::new(HtBound)),
                other => {
                    return Err(Error::invalid(format!(
                        "unknown bound {other:?}; available: bch, ht"
                    )))
                }
            }
        }
        Ok(set)
    }

    /// Plugs in an additional bound.
    pub fn push(&mut self, bound: Box<dyn DsBound>) {
        if self.bounds.iter().any(|b| b.name() == bound.name()) {
            return;
        }
        self.bounds.push(bound);
        self.cache.write().unwrap().clear();
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.bounds.iter().map(|b| b.name()).collect()
    }

    /// The optimal value over the set: `max { optimal_b(n, N) : b in B }`,
    /// memoized per `(n, N)`.
    pub fn eval(&self, n: u32, subset: &Bits) -> u32 {
        debug_assert_eq!(subset.len(), n);
        let key = (n, subset_words(subset));
        if let Some(&v) = self.cache.read().unwrap().get(&key) {
            return v;
        }
        let v = self
            .bounds
            .iter()
            .map(|b| b.optimal(n, subset))
            .max()
            .expect("bound set is never empty");
        self.cache.write().unwrap().insert(key, v);
        v
    }
}

fn subset_words(subset: &Bits) -> Vec<u64> {
    subset.words().to_vec()
}

/// Convenience constructor for subsets of `Z_n` in tests and the CLI.
pub fn zn_subset(n: u32, members: &[u32]) -> Bits {
    let mut b = Bits::empty(n);
    for &m in members {
        b.set(m % n);
    }
    b
}
