//! q-cyclotomic cosets modulo `n` and q-orbits modulo `(r_1, ..., r_s)`:
//! the closure of a multi-index under coordinatewise multiplication by `q`.
//! Defining sets of abelian codes are exactly the unions of such orbits.

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::{Error, Result};

/// A point of the index box `I = Z_{r_1} x ... x Z_{r_s}`, stored as
/// canonical residues.
pub type MultiIndex = Vec<u32>;

/// The index box itself: lengths plus mixed-radix linearization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dims {
    r: Vec<u32>,
    size: u32,
}

impl Dims {
    pub fn new(lengths: &[u32]) -> Result<Dims> {
        if lengths.is_empty() || lengths.iter().any(|&r| r == 0) {
            return Err(Error::invalid("lengths must be positive"));
        }
        let mut size = 1u64;
        for &r in lengths {
            size = size.checked_mul(r as u64).ok_or_else(|| {
                Error::invalid("index box too large")
            })?;
        }
        if size > 1 << 22 {
            return Err(Error::invalid(format!(
                "index box has {size} points, above the supported 2^22"
            )));
        }
        Ok(Dims {
            r: lengths.to_vec(),
            size: size as u32,
        })
    }

    pub fn lengths(&self) -> &[u32] {
        &self.r
    }

    pub fn arity(&self) -> usize {
        self.r.len()
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn contains(&self, idx: &[u32]) -> bool {
        idx.len() == self.r.len() && idx.iter().zip(&self.r).all(|(&i, &r)| i < r)
    }

    /// Row-major linear position of a multi-index.
    pub fn lin(&self, idx: &[u32]) -> u32 {
        debug_assert!(self.contains(idx));
        let mut pos = 0u32;
        for (&i, &r) in idx.iter().zip(&self.r) {
            pos = pos * r + i;
        }
        pos
    }

    pub fn delin(&self, mut pos: u32) -> MultiIndex {
        let mut idx = vec![0u32; self.r.len()];
        for k in (0..self.r.len()).rev() {
            idx[k] = pos % self.r[k];
            pos /= self.r[k];
        }
        idx
    }

    /// Coordinatewise multiplication by `f` modulo the lengths.
    pub fn scale(&self, idx: &[u32], f: u64) -> MultiIndex {
        idx.iter()
            .zip(&self.r)
            .map(|(&i, &r)| ((i as u64 * f) % r as u64) as u32)
            .collect()
    }

    pub fn iter_indices(&self) -> impl Iterator<Item = MultiIndex> + '_ {
        (0..self.size).map(move |p| self.delin(p))
    }
}

/// A union of q-orbits inside an index box, stored densely. Canonical form
/// is the sorted list of orbit representatives (lexicographic minima).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet {
    dims: Dims,
    q: u64,
    members: Bits,
}

/// Serialized form: `{"dims": [...], "q": ..., "reps": [[...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitSetWire {
    pub dims: Vec<u32>,
    pub q: u64,
    pub reps: Vec<Vec<u32>>,
}

impl OrbitSet {
    pub fn empty(dims: Dims, q: u64) -> OrbitSet {
        let members = Bits::empty(dims.size());
        OrbitSet { dims, q, members }
    }

    pub fn full(dims: Dims, q: u64) -> OrbitSet {
        let members = Bits::full(dims.size());
        OrbitSet { dims, q, members }
    }

    /// Builds an orbit set from arbitrary members, verifying closure under
    /// multiplication by `q`.
    pub fn from_members<'a>(
        dims: Dims,
        q: u64,
        members: impl IntoIterator<Item = &'a [u32]>,
    ) -> Result<OrbitSet> {
        let mut bits = Bits::empty(dims.size());
        for idx in members {
            if !dims.contains(idx) {
                return Err(Error::IndexOutOfRange {
                    index: idx.to_vec(),
                    dims: dims.lengths().to_vec(),
                });
            }
            bits.set(dims.lin(idx));
        }
        let set = OrbitSet { dims, q, members: bits };
        set.check_closed()?;
        Ok(set)
    }

    pub fn from_bits(dims: Dims, q: u64, members: Bits) -> Result<OrbitSet> {
        let set = OrbitSet { dims, q, members };
        set.check_closed()?;
        Ok(set)
    }

    fn check_closed(&self) -> Result<()> {
        for pos in self.members.iter_ones() {
            let idx = self.dims.delin(pos);
            let next = self.dims.scale(&idx, self.q);
            if !self.members.get(self.dims.lin(&next)) {
                return Err(Error::NotOrbitUnion { witness: idx });
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> &Dims {
        &self.dims
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn len(&self) -> u32 {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, idx: &[u32]) -> bool {
        self.dims.contains(idx) && self.members.get(self.dims.lin(idx))
    }

    pub fn bits(&self) -> &Bits {
        &self.members
    }

    pub fn complement(&self) -> OrbitSet {
        OrbitSet {
            dims: self.dims.clone(),
            q: self.q,
            members: self.members.complement(),
        }
    }

    pub fn union(&self, other: &OrbitSet) -> OrbitSet {
        debug_assert_eq!(self.dims, other.dims);
        let mut members = self.members.clone();
        members.union_with(other.bits());
        OrbitSet {
            dims: self.dims.clone(),
            q: self.q,
            members,
        }
    }

    pub fn subtract(&self, other: &OrbitSet) -> OrbitSet {
        debug_assert_eq!(self.dims, other.dims);
        let mut members = self.members.clone();
        members.subtract(other.bits());
        OrbitSet {
            dims: self.dims.clone(),
            q: self.q,
            members,
        }
    }

    pub fn is_subset_of(&self, other: &OrbitSet) -> bool {
        self.members.is_subset_of(other.bits())
    }

    pub fn iter(&self) -> impl Iterator<Item = MultiIndex> + '_ {
        self.members.iter_ones().map(move |p| self.dims.delin(p))
    }

    /// Sorted orbit representatives (lexicographic minimum of each orbit).
    pub fn reps(&self) -> Vec<MultiIndex> {
        let mut seen = Bits::empty(self.dims.size());
        let mut reps = Vec::new();
        for pos in self.members.iter_ones() {
            if seen.get(pos) {
                continue;
            }
            let idx = self.dims.delin(pos);
            let orbit = q_orbit(&idx, self.q, &self.dims).expect("member in range");
            let mut rep = idx.clone();
            for o in orbit.iter() {
                seen.set(self.dims.lin(&o));
                if o < rep {
                    rep = o;
                }
            }
            reps.push(rep);
        }
        reps.sort();
        reps
    }

    /// Splits the set into its constituent orbits, sorted by representative.
    pub fn orbits(&self) -> Vec<OrbitSet> {
        self.reps()
            .into_iter()
            .map(|rep| q_orbit(&rep, self.q, &self.dims).expect("rep in range"))
            .collect()
    }

    pub fn to_wire(&self) -> OrbitSetWire {
        OrbitSetWire {
            dims: self.dims.lengths().to_vec(),
            q: self.q,
            reps: self.reps(),
        }
    }

    pub fn from_wire(wire: &OrbitSetWire) -> Result<OrbitSet> {
        let dims = Dims::new(&wire.dims)?;
        let seed: Vec<&[u32]> = wire.reps.iter().map(|r| r.as_slice()).collect();
        let mut bits = Bits::empty(dims.size());
        for idx in &seed {
            if !dims.contains(idx) {
                return Err(Error::IndexOutOfRange {
                    index: idx.to_vec(),
                    dims: dims.lengths().to_vec(),
                });
            }
            bits.set(dims.lin(idx));
        }
        let raw = OrbitSet { dims, q: wire.q, members: bits };
        Ok(orbit_closure_set(&raw))
    }
}

/// The q-orbit of a single index: `{ a * q^i mod (r_1, ..., r_s) : i >= 0 }`.
pub fn q_orbit(a: &[u32], q: u64, dims: &Dims) -> Result<OrbitSet> {
    if !dims.contains(a) {
        return Err(Error::IndexOutOfRange {
            index: a.to_vec(),
            dims: dims.lengths().to_vec(),
        });
    }
    let mut bits = Bits::empty(dims.size());
    let mut cur = a.to_vec();
    loop {
        bits.set(dims.lin(&cur));
        cur = dims.scale(&cur, q);
        if bits.get(dims.lin(&cur)) {
            break;
        }
    }
    Ok(OrbitSet {
        dims: dims.clone(),
        q,
        members: bits,
    })
}

/// `q`-cyclotomic coset of `b` modulo `n` (the one-variable case).
pub fn cyclotomic_coset(b: u32, q: u64, n: u32) -> Result<Vec<u32>> {
    let dims = Dims::new(&[n])?;
    let orbit = q_orbit(&[b % n], q, &dims)?;
    Ok(orbit.iter().map(|idx| idx[0]).collect())
}

/// Smallest orbit union containing `seed`.
pub fn orbit_closure<'a>(
    seed: impl IntoIterator<Item = &'a [u32]>,
    q: u64,
    dims: &Dims,
) -> Result<OrbitSet> {
    let mut bits = Bits::empty(dims.size());
    for idx in seed {
        if !dims.contains(idx) {
            return Err(Error::IndexOutOfRange {
                index: idx.to_vec(),
                dims: dims.lengths().to_vec(),
            });
        }
        bits.set(dims.lin(idx));
    }
    Ok(orbit_closure_set(&OrbitSet {
        dims: dims.clone(),
        q,
        members: bits,
    }))
}

fn orbit_closure_set(raw: &OrbitSet) -> OrbitSet {
    let dims = &raw.dims;
    let mut bits = Bits::empty(dims.size());
    for pos in raw.members.iter_ones() {
        if bits.get(pos) {
            continue;
        }
        let mut cur = dims.delin(pos);
        loop {
            let p = dims.lin(&cur);
            if bits.get(p) {
                break;
            }
            bits.set(p);
            cur = dims.scale(&cur, raw.q);
        }
    }
    OrbitSet {
        dims: dims.clone(),
        q: raw.q,
        members: bits,
    }
}

/// All q-orbits of the index box, disjoint, covering it, sorted by
/// representative. Requires `gcd(q, r_k) = 1` for every length.
pub fn orbit_partition(q: u64, dims: &Dims) -> Result<Vec<OrbitSet>> {
    for &r in dims.lengths() {
        if crate::gfield::gcd(q % r as u64, r as u64) != 1 {
            return Err(Error::invalid(format!(
                "gcd(q, {r}) != 1: multiplication by q is not invertible"
            )));
        }
    }
    Ok(OrbitSet::full(dims.clone(), q).orbits())
}
