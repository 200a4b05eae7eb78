//! Finite unital rings with compiled operation tables.
//!
//! Elements are dense indices `0..size`. Every construction compiles its
//! addition and multiplication into row-major `u16` tables at build time, so
//! arithmetic is a single table lookup.
//!
//! Inverses are looked up through a cached map built in one pass over the
//! multiplication table. Only `x·y = 1` is searched for: in a finite ring a
//! one-sided inverse is automatically two-sided. If `xy = 1`, the map
//! `r ↦ yr` is injective (`yr = yr'` gives `r = xyr = xyr'`), hence
//! surjective on a finite set, so `yz = 1` for some `z`, and then
//! `x = x(yz) = (xy)z = z`. The cache still records the two-sided check.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bimodule::Bimodule;
use crate::descriptor::ConstructionDescriptor;
use crate::error::{Result, RingError};
use crate::set::ElementSet;

/// Default element cap for compiled rings.
pub const DEFAULT_CAPACITY: usize = 4096;
/// Largest cap accepted from the environment; tables use `u16` indices.
pub const MAX_CAPACITY: usize = 65536;
/// Rings up to this size are validated over every triple.
pub const EXHAUSTIVE_VALIDATION_LIMIT: usize = 256;
const VALIDATION_SEED: u64 = 0x5eed_de17a;

static NEXT_TAG: AtomicU64 = AtomicU64::new(1);

/// Reads `DELTARING_CAPACITY`, falling back to [`DEFAULT_CAPACITY`]; values
/// above [`MAX_CAPACITY`] are clamped.
pub fn capacity_from_env() -> usize {
    std::env::var("DELTARING_CAPACITY")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&c| c >= 2)
        .map(|c| c.min(MAX_CAPACITY))
        .unwrap_or(DEFAULT_CAPACITY)
}

/// How a ring was assembled, with handles on its ingredients so that checks
/// can decode elements structurally.
#[derive(Debug, Clone)]
pub enum Structure {
    Zn {
        modulus: usize,
    },
    Table,
    Product {
        left: Arc<FiniteRing>,
        right: Arc<FiniteRing>,
    },
    Matrix {
        dim: usize,
        base: Arc<FiniteRing>,
    },
    UpperTriangular {
        dim: usize,
        base: Arc<FiniteRing>,
    },
    /// Stored as free triples `(c, e, f)`; `d = f + t·e`, `a = d + s·c`.
    H {
        s: usize,
        t: usize,
        base: Arc<FiniteRing>,
    },
    Dorroh {
        base: Arc<FiniteRing>,
        module: Arc<Bimodule>,
    },
    Corner {
        parent: Arc<FiniteRing>,
        idempotent: usize,
        /// Parent index of each corner element, ascending.
        members: Vec<usize>,
    },
    Quotient {
        parent: Arc<FiniteRing>,
        ideal: ElementSet,
        /// Minimum-index coset representative of each quotient element.
        representatives: Vec<usize>,
        /// Parent element -> quotient element.
        projection: Vec<usize>,
    },
}

/// Lazily materialized per-ring data. Each slot is published once.
#[derive(Debug, Clone, Default)]
pub(crate) struct Caches {
    pub inverse: OnceLock<Vec<Option<u16>>>,
    pub units: OnceLock<ElementSet>,
    pub idempotents: OnceLock<ElementSet>,
    pub nilpotents: OnceLock<ElementSet>,
    pub center: OnceLock<ElementSet>,
    pub jacobson: OnceLock<ElementSet>,
    pub delta: OnceLock<ElementSet>,
    pub qnil: OnceLock<ElementSet>,
    pub commutants: OnceLock<Vec<ElementSet>>,
}

#[derive(Debug, Clone)]
pub struct FiniteRing {
    tag: u64,
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
    descriptor: ConstructionDescriptor,
    structure: Structure,
    pub(crate) caches: Caches,
}

/// JSON table-ring file: `{ "size": n, "add": [[..]], "mul": [[..]], "zero": i, "one": j }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRing {
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl TableRing {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| RingError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table ring serializes")
    }

    /// Structural checks only: dimensions, index ranges, distinguished elements.
    pub fn check_structure(&self, capacity: usize) -> Result<()> {
        let n = self.size;
        if n == 0 {
            return Err(RingError::Malformed("size must be positive".into()));
        }
        if n > capacity {
            return Err(RingError::Capacity {
                size: n as u128,
                capacity,
            });
        }
        for (name, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != n {
                return Err(RingError::Malformed(format!(
                    "{name} has {} rows, expected {n}",
                    table.len()
                )));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(RingError::Malformed(format!(
                        "{name} row {i} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                    return Err(RingError::Malformed(format!(
                        "{name}[{i}][{j}] = {v} is not an element index"
                    )));
                }
            }
        }
        if self.zero >= n || self.one >= n {
            return Err(RingError::Malformed(
                "zero/one must be element indices".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveIdentity,
    AdditiveInverse,
    MultiplicativeAssociativity,
    MultiplicativeIdentity,
    LeftDistributivity,
    RightDistributivity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// Elements that exhibit the failure (one, two or three indices).
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SamplingMode {
    Exhaustive,
    Sampled { seed: u64, triples: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub size: usize,
    pub sampling: SamplingMode,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ring(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FiniteRing {
    /// Compiles a ring from operation closures over `0..size`.
    pub(crate) fn from_fns(
        size: usize,
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        descriptor: ConstructionDescriptor,
        structure: Structure,
    ) -> Result<Self> {
        let mut add_t = Vec::with_capacity(size * size);
        let mut mul_t = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                add_t.push(add(x, y) as u16);
                mul_t.push(mul(x, y) as u16);
            }
        }
        Self::from_raw(size, add_t, mul_t, zero, one, descriptor, structure)
    }

    fn from_raw(
        size: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        descriptor: ConstructionDescriptor,
        structure: Structure,
    ) -> Result<Self> {
        if size > MAX_CAPACITY {
            return Err(RingError::Capacity {
                size: size as u128,
                capacity: MAX_CAPACITY,
            });
        }
        if zero == one {
            return Err(RingError::ZeroRing);
        }
        // Elements without an additive inverse map to themselves; validation
        // reports them.
        let neg = (0..size)
            .map(|x| {
                let row = &add[x * size..(x + 1) * size];
                row.iter()
                    .position(|&s| s as usize == zero)
                    .unwrap_or(x) as u16
            })
            .collect();
        Ok(FiniteRing {
            tag: NEXT_TAG.fetch_add(1, Ordering::Relaxed),
            size,
            add,
            mul,
            neg,
            zero,
            one,
            descriptor,
            structure,
            caches: Caches::default(),
        })
    }

    /// Builds a ring from explicit tables. The tables must be total; the ring
    /// axioms are not checked here (see [`FiniteRing::validate`]).
    pub fn from_table(table: &TableRing, capacity: usize) -> Result<Self> {
        Self::from_table_with(table, capacity, ConstructionDescriptor::Table("<inline>".into()))
    }

    pub(crate) fn from_table_with(
        table: &TableRing,
        capacity: usize,
        descriptor: ConstructionDescriptor,
    ) -> Result<Self> {
        table.check_structure(capacity)?;
        let flatten = |t: &Vec<Vec<usize>>| t.iter().flatten().map(|&v| v as u16).collect();
        Self::from_raw(
            table.size,
            flatten(&table.add),
            flatten(&table.mul),
            table.zero,
            table.one,
            descriptor,
            Structure::Table,
        )
    }

    pub(crate) fn with_descriptor(mut self, descriptor: ConstructionDescriptor) -> Self {
        self.descriptor = descriptor;
        self
    }

    pub fn to_table(&self) -> TableRing {
        let rows = |t: &[u16]| {
            t.chunks(self.size)
                .map(|r| r.iter().map(|&v| v as usize).collect())
                .collect()
        };
        TableRing {
            size: self.size,
            add: rows(&self.add),
            mul: rows(&self.mul),
            zero: self.zero,
            one: self.one,
        }
    }

    /// Identity tag shared by every [`ElementSet`] of this ring.
    pub fn tag(&self) -> u64 {
        self.tag
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn descriptor(&self) -> &ConstructionDescriptor {
        &self.descriptor
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// Validates an externally supplied index.
    pub fn element(&self, index: usize) -> Result<usize> {
        if index < self.size {
            Ok(index)
        } else {
            Err(RingError::OutOfRange {
                index,
                size: self.size,
            })
        }
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.size + y] as usize
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = self.one;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `n·1`, the image of the integer `n` in the ring.
    pub fn integer(&self, n: u64) -> usize {
        (0..n).fold(self.zero, |acc, _| self.add(acc, self.one))
    }

    pub fn try_add(&self, x: usize, y: usize) -> Result<usize> {
        Ok(self.add(self.element(x)?, self.element(y)?))
    }

    pub fn try_mul(&self, x: usize, y: usize) -> Result<usize> {
        Ok(self.mul(self.element(x)?, self.element(y)?))
    }

    pub fn try_neg(&self, x: usize) -> Result<usize> {
        Ok(self.neg(self.element(x)?))
    }

    pub fn try_sub(&self, x: usize, y: usize) -> Result<usize> {
        Ok(self.sub(self.element(x)?, self.element(y)?))
    }

    pub fn try_pow(&self, x: usize, k: u64) -> Result<usize> {
        Ok(self.pow(self.element(x)?, k))
    }

    fn inverse_map(&self) -> &[Option<u16>] {
        self.caches.inverse.get_or_init(|| {
            (0..self.size)
                .map(|x| {
                    let row = &self.mul[x * self.size..(x + 1) * self.size];
                    row.iter()
                        .position(|&p| p as usize == self.one)
                        .filter(|&y| self.mul(y, x) == self.one)
                        .map(|y| y as u16)
                })
                .collect()
        })
    }

    /// Two-sided multiplicative inverse, if `x` is a unit.
    #[inline]
    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.inverse_map()[x].map(usize::from)
    }

    #[inline]
    pub fn is_unit(&self, x: usize) -> bool {
        self.inverse_map()[x].is_some()
    }

    pub fn try_inverse(&self, x: usize) -> Result<Option<usize>> {
        Ok(self.inverse(self.element(x)?))
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.tag, self.size)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.tag, self.size)
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, items: I) -> ElementSet {
        ElementSet::from_indices(self.tag, self.size, items)
    }

    pub fn set_where<F: FnMut(usize) -> bool>(&self, pred: F) -> ElementSet {
        ElementSet::from_predicate(self.tag, self.size, pred)
    }

    /// Checks every ring axiom. Rings up to [`EXHAUSTIVE_VALIDATION_LIMIT`]
    /// elements are checked over all triples; larger rings over all pairs
    /// plus a seeded sample of `size²` triples.
    pub fn validate(&self) -> ValidationReport {
        let n = self.size;
        let mut found: Vec<Violation> = Vec::new();
        let mut note = |axiom: Axiom, witness: &[usize]| {
            if !found.iter().any(|v| v.axiom == axiom) {
                found.push(Violation {
                    axiom,
                    witness: witness.to_vec(),
                });
            }
        };

        for x in 0..n {
            if self.add(self.zero, x) != x || self.add(x, self.zero) != x {
                note(Axiom::AdditiveIdentity, &[x]);
            }
            if self.add(x, self.neg(x)) != self.zero || self.add(self.neg(x), x) != self.zero {
                note(Axiom::AdditiveInverse, &[x]);
            }
            if self.mul(self.one, x) != x || self.mul(x, self.one) != x {
                note(Axiom::MultiplicativeIdentity, &[x]);
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    note(Axiom::AdditiveCommutativity, &[x, y]);
                }
            }
        }

        let mut triple = |x: usize, y: usize, z: usize| {
            if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                note(Axiom::AdditiveAssociativity, &[x, y, z]);
            }
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                note(Axiom::MultiplicativeAssociativity, &[x, y, z]);
            }
            if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
                note(Axiom::LeftDistributivity, &[x, y, z]);
            }
            if self.mul(self.add(y, z), x) != self.add(self.mul(y, x), self.mul(z, x)) {
                note(Axiom::RightDistributivity, &[x, y, z]);
            }
        };

        let sampling = if n <= EXHAUSTIVE_VALIDATION_LIMIT {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        triple(x, y, z);
                    }
                }
            }
            SamplingMode::Exhaustive
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(VALIDATION_SEED);
            let count = n * n;
            for _ in 0..count {
                triple(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            }
            SamplingMode::Sampled {
                seed: VALIDATION_SEED,
                triples: count,
            }
        };

        found.sort_by_key(|v| v.axiom);
        ValidationReport {
            size: n,
            sampling,
            violations: found,
        }
    }
}

/// Structural check of a table followed by axiom validation.
pub fn validate_table(table: &TableRing, capacity: usize) -> Result<ValidationReport> {
    Ok(FiniteRing::from_table(table, capacity)?.validate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::zn;

    #[test]
    fn z4_arithmetic() {
        let r = zn(4).unwrap();
        assert_eq!(r.add(2, 3), 1);
        for x in r.elements() {
            assert_eq!(r.add(0, x), x);
        }
        assert_eq!(r.mul(2, 2), 0);
        assert_eq!(r.pow(3, 2), 1);
        assert_eq!(r.pow(3, 0), r.one());
        assert_eq!(r.neg(r.zero()), r.zero());
        assert_eq!(r.sub(1, 3), 2);
    }

    #[test]
    fn z4_inverses() {
        let r = zn(4).unwrap();
        assert_eq!(r.inverse(3), Some(3));
        assert_eq!(r.inverse(2), None);
        assert_eq!(r.inverse(r.one()), Some(r.one()));
    }

    #[test]
    fn range_errors() {
        let r = zn(4).unwrap();
        assert_eq!(
            r.try_add(4, 0),
            Err(RingError::OutOfRange { index: 4, size: 4 })
        );
        assert!(r.try_inverse(9).is_err());
        assert_eq!(r.try_pow(3, 2), Ok(1));
    }

    #[test]
    fn z6_validates() {
        let report = zn(6).unwrap().validate();
        assert!(report.is_ring());
        assert_eq!(report.sampling, SamplingMode::Exhaustive);
    }

    #[test]
    fn injected_defect_is_named() {
        let mut t = zn(4).unwrap().to_table();
        t.mul[2][3] = 1;
        let report = validate_table(&t, DEFAULT_CAPACITY).unwrap();
        assert!(!report.is_ring());
        // Oracle: scan every triple for the first left-distributivity failure.
        let ring = FiniteRing::from_table(&t, DEFAULT_CAPACITY).unwrap();
        let mut expected = None;
        'scan: for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    if ring.mul(x, ring.add(y, z)) != ring.add(ring.mul(x, y), ring.mul(x, z)) {
                        expected = Some(vec![x, y, z]);
                        break 'scan;
                    }
                }
            }
        }
        let got = report
            .violations
            .iter()
            .find(|v| v.axiom == Axiom::LeftDistributivity)
            .map(|v| v.witness.clone());
        assert_eq!(got, expected);
        assert!(expected.is_some());
    }

    #[test]
    fn structural_errors_are_distinct() {
        let mut t = zn(3).unwrap().to_table();
        t.add[1].pop();
        assert!(matches!(
            validate_table(&t, DEFAULT_CAPACITY),
            Err(RingError::Malformed(_))
        ));
        let mut t = zn(3).unwrap().to_table();
        t.mul[0][0] = 7;
        assert!(matches!(
            validate_table(&t, DEFAULT_CAPACITY),
            Err(RingError::Malformed(_))
        ));
    }

    #[test]
    fn zero_ring_rejected() {
        let t = TableRing {
            size: 1,
            add: vec![vec![0]],
            mul: vec![vec![0]],
            zero: 0,
            one: 0,
        };
        assert_eq!(FiniteRing::from_table(&t, 16).unwrap_err(), RingError::ZeroRing);
    }

    #[test]
    fn large_rings_are_sampled() {
        let r = zn(300).unwrap();
        let report = r.validate();
        assert!(report.is_ring());
        assert!(matches!(report.sampling, SamplingMode::Sampled { triples: 90000, .. }));
    }

    #[test]
    fn table_json_round_trip() {
        let t = zn(5).unwrap().to_table();
        assert_eq!(TableRing::from_json(&t.to_json()).unwrap(), t);
    }
}
