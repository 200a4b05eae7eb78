//! Distinguished subsets of a finite ring: `U(R)`, `Id(R)`, `Nil(R)`, `C(R)`,
//! `J(R)`, `Δ(R)`, `R^qnil`, commutants and annihilators.
//!
//! Everything is computed by exhaustive enumeration and cached on the ring.
//!
//! `J(R)` uses one-sided quasi-regularity: `x ∈ J(R)` iff `1 − rx` is a unit
//! for every `r`. For an arbitrary ring this characterizes the radical when
//! "unit" means left-invertible; in a finite ring left-invertible elements are
//! units, so the two-sided test is exact.

use rayon::prelude::*;

use crate::ring::FiniteRing;
use crate::set::ElementSet;

/// Elements satisfying `pred`, evaluated in parallel.
fn par_set<F>(r: &FiniteRing, pred: F) -> ElementSet
where
    F: Fn(usize) -> bool + Sync,
{
    let members: Vec<usize> = (0..r.size()).into_par_iter().filter(|&x| pred(x)).collect();
    r.set_of(members)
}

pub fn units(r: &FiniteRing) -> &ElementSet {
    r.caches.units.get_or_init(|| compute_units(r))
}

pub fn idempotents(r: &FiniteRing) -> &ElementSet {
    r.caches.idempotents.get_or_init(|| compute_idempotents(r))
}

/// `{x : xⁿ = 0 for some n ≤ |R|}`.
pub fn nilpotents(r: &FiniteRing) -> &ElementSet {
    r.caches.nilpotents.get_or_init(|| compute_nilpotents(r))
}

pub fn center(r: &FiniteRing) -> &ElementSet {
    r.caches.center.get_or_init(|| compute_center(r))
}

pub fn jacobson_radical(r: &FiniteRing) -> &ElementSet {
    r.caches.jacobson.get_or_init(|| compute_jacobson(r))
}

/// `Δ(R) = {x : 1 − xu ∈ U(R) for all u ∈ U(R)}`.
pub fn delta(r: &FiniteRing) -> &ElementSet {
    r.caches.delta.get_or_init(|| compute_delta(r))
}

/// `R^qnil = {a : 1 + ax ∈ U(R) for all x ∈ comm(a)}`.
pub fn qnil(r: &FiniteRing) -> &ElementSet {
    r.caches.qnil.get_or_init(|| compute_qnil(r))
}

/// `comm(x)` for every element, indexed by `x`.
pub fn commutants(r: &FiniteRing) -> &[ElementSet] {
    r.caches.commutants.get_or_init(|| {
        (0..r.size())
            .into_par_iter()
            .map(|a| r.set_where(|x| r.mul(a, x) == r.mul(x, a)))
            .collect()
    })
}

pub fn comm(r: &FiniteRing, a: usize) -> ElementSet {
    commutants(r)[a].clone()
}

/// `comm²(a)`: the intersection of `comm(x)` over `x ∈ comm(a)`.
pub fn comm2(r: &FiniteRing, a: usize) -> ElementSet {
    let all = commutants(r);
    let mut out = r.full_set();
    for x in &all[a] {
        out.intersect_with(&all[x]);
    }
    out
}

pub fn ann_left(r: &FiniteRing, a: usize) -> ElementSet {
    r.set_where(|x| r.mul(x, a) == r.zero())
}

pub fn ann_right(r: &FiniteRing, a: usize) -> ElementSet {
    r.set_where(|x| r.mul(a, x) == r.zero())
}

/// The three characterizations `{r : r + u ∈ U ∀u}`, `{r : ru + 1 ∈ U ∀u}`
/// and `{r : ur + 1 ∈ U ∀u}`, each computed on its own.
pub fn delta_alternative_forms(r: &FiniteRing) -> (ElementSet, ElementSet, ElementSet) {
    let u = units(r).to_vec();
    let one = r.one();
    let by_sum = par_set(r, |x| u.iter().all(|&v| r.is_unit(r.add(x, v))));
    let by_right = par_set(r, |x| u.iter().all(|&v| r.is_unit(r.add(r.mul(x, v), one))));
    let by_left = par_set(r, |x| u.iter().all(|&v| r.is_unit(r.add(r.mul(v, x), one))));
    (by_sum, by_right, by_left)
}

/// `U(R) ⊆ C(R)`.
pub fn units_central(r: &FiniteRing) -> bool {
    units(r).is_subset(center(r))
}

pub fn is_two_sided_ideal(r: &FiniteRing, s: &ElementSet) -> bool {
    s.contains(r.zero())
        && s.iter().all(|x| {
            s.iter().all(|y| s.contains(r.sub(x, y)))
                && r
                    .elements()
                    .all(|t| s.contains(r.mul(t, x)) && s.contains(r.mul(x, t)))
        })
}

fn compute_units(r: &FiniteRing) -> ElementSet {
    r.set_where(|x| r.is_unit(x))
}

fn compute_idempotents(r: &FiniteRing) -> ElementSet {
    r.set_where(|x| r.mul(x, x) == x)
}

fn compute_nilpotents(r: &FiniteRing) -> ElementSet {
    r.set_where(|x| {
        let mut p = x;
        for _ in 0..r.size() {
            if p == r.zero() {
                return true;
            }
            p = r.mul(p, x);
        }
        p == r.zero()
    })
}

fn compute_center(r: &FiniteRing) -> ElementSet {
    r.set_where(|x| r.elements().all(|y| r.mul(x, y) == r.mul(y, x)))
}

fn compute_jacobson(r: &FiniteRing) -> ElementSet {
    let one = r.one();
    par_set(r, |x| r.elements().all(|s| r.is_unit(r.sub(one, r.mul(s, x)))))
}

fn compute_delta(r: &FiniteRing) -> ElementSet {
    let u = units(r).to_vec();
    let one = r.one();
    par_set(r, |x| u.iter().all(|&v| r.is_unit(r.sub(one, r.mul(x, v)))))
}

fn compute_qnil(r: &FiniteRing) -> ElementSet {
    let all = commutants(r);
    let one = r.one();
    par_set(r, |a| all[a].iter().all(|x| r.is_unit(r.add(one, r.mul(a, x)))))
}

/// Snapshot of the cached subsets of one ring.
#[derive(Debug, Clone)]
pub struct AnalysisCache {
    pub units: ElementSet,
    pub idempotents: ElementSet,
    pub nilpotents: ElementSet,
    pub center: ElementSet,
    pub jacobson: ElementSet,
    pub delta: ElementSet,
    pub qnil: ElementSet,
    pub inverse: Vec<Option<usize>>,
}

impl AnalysisCache {
    pub fn of(r: &FiniteRing) -> Self {
        AnalysisCache {
            units: units(r).clone(),
            idempotents: idempotents(r).clone(),
            nilpotents: nilpotents(r).clone(),
            center: center(r).clone(),
            jacobson: jacobson_radical(r).clone(),
            delta: delta(r).clone(),
            qnil: qnil(r).clone(),
            inverse: r.elements().map(|x| r.inverse(x)).collect(),
        }
    }

    /// Recomputes every set from scratch and compares with the snapshot.
    pub fn matches_recomputation(&self, r: &FiniteRing) -> bool {
        self.units == compute_units(r)
            && self.idempotents == compute_idempotents(r)
            && self.nilpotents == compute_nilpotents(r)
            && self.center == compute_center(r)
            && self.jacobson == compute_jacobson(r)
            && self.delta == compute_delta(r)
            && self.qnil == compute_qnil(r)
            && self.inverse.iter().enumerate().all(|(x, inv)| {
                *inv == r.elements().find(|&y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, matrix_index, zn};

    fn set(r: &FiniteRing, xs: &[usize]) -> ElementSet {
        r.set_of(xs.iter().copied())
    }

    #[test]
    fn z4_sets() {
        let r = zn(4).unwrap();
        assert_eq!(units(&r), &set(&r, &[1, 3]));
        assert_eq!(delta(&r), &set(&r, &[0, 2]));
        assert_eq!(jacobson_radical(&r), &set(&r, &[0, 2]));
        assert_eq!(qnil(&r), &set(&r, &[0, 2]));
        assert_eq!(nilpotents(&r), &set(&r, &[0, 2]));
        let (a, b, c) = delta_alternative_forms(&r);
        assert_eq!(a, set(&r, &[0, 2]));
        assert_eq!(a, b);
        assert_eq!(b, c);
    }

    #[test]
    fn small_prime_fields() {
        let z2 = zn(2).unwrap();
        assert_eq!(units(&z2), &set(&z2, &[1]));
        assert_eq!(delta(&z2), &set(&z2, &[0]));
        let (a, b, c) = delta_alternative_forms(&z2);
        assert!(a == set(&z2, &[0]) && a == b && b == c);
        let z3 = zn(3).unwrap();
        assert_eq!(delta(&z3), &set(&z3, &[0]));
    }

    #[test]
    fn z6_idempotents() {
        let r = zn(6).unwrap();
        assert_eq!(idempotents(&r), &set(&r, &[0, 1, 3, 4]));
    }

    #[test]
    fn m2_z2_sets() {
        let m = build("M(2, Z2)").unwrap();
        assert_eq!(nilpotents(&m).count(), 4);
        assert_eq!(center(&m), &set(&m, &[m.zero(), m.one()]));
        assert_eq!(jacobson_radical(&m), &set(&m, &[m.zero()]));
        let e12 = matrix_index(&m, &[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(qnil(&m).contains(e12));
        assert!(!delta(&m).contains(e12));
    }

    #[test]
    fn t2_z2_sets() {
        let t = build("T(2, Z2)").unwrap();
        let e12 = matrix_index(&t, &[vec![0, 1], vec![0, 0]]).unwrap();
        let units_expected: Vec<usize> = [[1, 0], [1, 1]]
            .iter()
            .map(|&[a, b]| matrix_index(&t, &[vec![a, b], vec![0, 1]]).unwrap())
            .collect();
        assert_eq!(units(&t), &t.set_of(units_expected));
        assert_eq!(jacobson_radical(&t), &set(&t, &[0, e12]));
        assert_eq!(delta(&t), &set(&t, &[0, e12]));
        let (a, b, c) = delta_alternative_forms(&t);
        assert!(a == b && b == c && &a == delta(&t));

        let x = matrix_index(&t, &[vec![0, 1], vec![0, 0]]).unwrap();
        let i_plus = t.add(t.one(), x);
        assert_eq!(comm2(&t, e12), set(&t, &[0, t.one(), e12, i_plus]));
    }

    #[test]
    fn commutant_laws() {
        for spec in ["T(2, Z2)", "M(2, Z2)", "Z6", "H(1, 1, Z3)"] {
            let r = build(spec).unwrap();
            assert_eq!(comm(&r, r.zero()), r.full_set());
            assert_eq!(&comm2(&r, r.zero()), center(&r));
            for a in r.elements() {
                let c2 = comm2(&r, a);
                assert!(c2.contains(a));
                assert!(center(&r).is_subset(&c2));
                assert!(c2.is_subset(&comm(&r, a)));
            }
        }
    }

    #[test]
    fn annihilators() {
        let r = zn(4).unwrap();
        assert_eq!(ann_left(&r, 2), set(&r, &[0, 2]));
        assert_eq!(ann_left(&r, r.one()), set(&r, &[0]));
        assert_eq!(ann_left(&r, r.zero()), r.full_set());
        assert_eq!(ann_right(&r, 2), set(&r, &[0, 2]));
    }

    #[test]
    fn caches_match_recomputation() {
        for spec in ["Z8", "T(2, Z4)", "M(2, Z2)", "dorroh(Z2, scalar(Z4, 2))"] {
            let r = build(spec).unwrap();
            let snap = AnalysisCache::of(&r);
            assert!(snap.matches_recomputation(&r), "{spec}");
            assert!(snap.units.is_disjoint(&snap.delta));
            assert!(snap.jacobson.is_subset(&snap.delta));
            for x in r.elements() {
                assert_eq!(r.inverse(x).is_some(), snap.units.contains(x));
            }
        }
    }

    #[test]
    fn nilpotents_lie_in_qnil() {
        for spec in ["Z16", "T(3, Z2)", "M(2, Z2)", "prod(Z4, Z3)"] {
            let r = build(spec).unwrap();
            assert!(nilpotents(&r).is_subset(qnil(&r)), "{spec}");
        }
    }
}
