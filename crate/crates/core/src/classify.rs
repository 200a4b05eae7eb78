//! Element and ring predicates of the quasipolar / clean taxonomy, with
//! certificates.
//!
//! A spectral certificate lists *every* idempotent `p ∈ comm²(a)` meeting the
//! flavor's condition, so an empty certificate is a proof of failure by
//! exhaustion. Clean certificates likewise list every decomposition
//! `a = e + w` with `w` in the designated set.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis;
use crate::ring::FiniteRing;
use crate::set::ElementSet;

/// Which condition a spectral idempotent `p ∈ comm²(a)` must meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectralFlavor {
    /// `a + p ∈ Δ(R)`
    Delta,
    /// `a + p ∈ J(R)`
    Jacobson,
    /// `a + p ∈ U(R)` and `ap ∈ R^qnil`
    Quasipolar,
    /// `a + p ∈ U(R)`
    UnitVariant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralCertificate {
    pub element: usize,
    pub flavor: SpectralFlavor,
    pub idempotents: ElementSet,
}

impl SpectralCertificate {
    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    /// Re-derives each listed idempotent's defining conditions directly.
    pub fn verify(&self, r: &FiniteRing) -> bool {
        let c2 = analysis::comm2(r, self.element);
        self.idempotents.iter().all(|p| {
            r.mul(p, p) == p
                && c2.contains(p)
                && satisfies(r, self.flavor, self.element, p)
        })
    }
}

fn satisfies(r: &FiniteRing, flavor: SpectralFlavor, a: usize, p: usize) -> bool {
    let s = r.add(a, p);
    match flavor {
        SpectralFlavor::Delta => analysis::delta(r).contains(s),
        SpectralFlavor::Jacobson => analysis::jacobson_radical(r).contains(s),
        SpectralFlavor::Quasipolar => r.is_unit(s) && analysis::qnil(r).contains(r.mul(a, p)),
        SpectralFlavor::UnitVariant => r.is_unit(s),
    }
}

pub fn spectral_idempotents(r: &FiniteRing, a: usize, flavor: SpectralFlavor) -> ElementSet {
    let mut candidates = analysis::comm2(r, a);
    candidates.intersect_with(analysis::idempotents(r));
    r.set_of(candidates.iter().filter(|&p| satisfies(r, flavor, a, p)))
}

pub fn spectral_certificate(r: &FiniteRing, a: usize, flavor: SpectralFlavor) -> SpectralCertificate {
    SpectralCertificate {
        element: a,
        flavor,
        idempotents: spectral_idempotents(r, a, flavor),
    }
}

/// Every idempotent `p ∈ comm²(a)` with `a + p ∈ Δ(R)`.
pub fn delta_spectral_idempotents(r: &FiniteRing, a: usize) -> ElementSet {
    spectral_idempotents(r, a, SpectralFlavor::Delta)
}

pub fn is_delta_quasipolar_element(r: &FiniteRing, a: usize) -> bool {
    !delta_spectral_idempotents(r, a).is_empty()
}

/// Certificates for every element, in index order.
pub fn certificates(r: &FiniteRing, flavor: SpectralFlavor) -> Vec<SpectralCertificate> {
    (0..r.size())
        .into_par_iter()
        .map(|a| spectral_certificate(r, a, flavor))
        .collect()
}

/// How much failing evidence a predicate sweep gathers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Stop at the lowest-index failing element.
    #[default]
    FirstWitness,
    /// Collect every failing element.
    AllWitnesses,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClassifyOptions {
    pub mode: Mode,
    /// Uniquely Δ-clean counts only decompositions with `ed = de`.
    pub strict_delta_commuting: bool,
}

impl ClassifyOptions {
    pub fn verification() -> Self {
        ClassifyOptions {
            mode: Mode::AllWitnesses,
            strict_delta_commuting: false,
        }
    }
}

/// Outcome of a ring-level predicate: holds iff `witnesses` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Predicate {
    pub holds: bool,
    pub witnesses: Vec<usize>,
}

fn sweep<F>(r: &FiniteRing, mode: Mode, fails: F) -> Predicate
where
    F: Fn(usize) -> bool + Sync,
{
    let witnesses: Vec<usize> = match mode {
        Mode::FirstWitness => r.elements().find(|&x| fails(x)).into_iter().collect(),
        Mode::AllWitnesses => {
            let mut w: Vec<usize> = (0..r.size()).into_par_iter().filter(|&x| fails(x)).collect();
            w.sort_unstable();
            w
        }
    };
    Predicate {
        holds: witnesses.is_empty(),
        witnesses,
    }
}

pub fn spectral_predicate(r: &FiniteRing, flavor: SpectralFlavor, mode: Mode) -> Predicate {
    sweep(r, mode, |a| spectral_idempotents(r, a, flavor).is_empty())
}

pub fn delta_quasipolar(r: &FiniteRing, mode: Mode) -> Predicate {
    spectral_predicate(r, SpectralFlavor::Delta, mode)
}

pub fn is_delta_quasipolar(r: &FiniteRing) -> bool {
    delta_quasipolar(r, Mode::FirstWitness).holds
}

pub fn is_j_quasipolar(r: &FiniteRing) -> bool {
    spectral_predicate(r, SpectralFlavor::Jacobson, Mode::FirstWitness).holds
}

pub fn is_quasipolar(r: &FiniteRing) -> bool {
    spectral_predicate(r, SpectralFlavor::Quasipolar, Mode::FirstWitness).holds
}

/// The set a clean-type decomposition `a = e + w` draws `w` from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CleanKind {
    Unit,
    Jacobson,
    Delta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub idempotent: usize,
    pub rest: usize,
    pub commuting: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CleanCertificate {
    pub element: usize,
    pub kind: CleanKind,
    pub decompositions: Vec<Decomposition>,
}

impl CleanCertificate {
    pub fn count(&self) -> usize {
        self.decompositions.len()
    }

    pub fn commuting_count(&self) -> usize {
        self.decompositions.iter().filter(|d| d.commuting).count()
    }

    pub fn verify(&self, r: &FiniteRing) -> bool {
        let target = clean_set(r, self.kind);
        self.decompositions.iter().all(|d| {
            r.add(d.idempotent, d.rest) == self.element
                && r.mul(d.idempotent, d.idempotent) == d.idempotent
                && target.contains(d.rest)
                && d.commuting
                    == (r.mul(d.idempotent, d.rest) == r.mul(d.rest, d.idempotent))
        })
    }
}

fn clean_set(r: &FiniteRing, kind: CleanKind) -> &ElementSet {
    match kind {
        CleanKind::Unit => analysis::units(r),
        CleanKind::Jacobson => analysis::jacobson_radical(r),
        CleanKind::Delta => analysis::delta(r),
    }
}

/// All decompositions `a = e + w`, `e² = e`, `w` in the designated set.
pub fn clean_certificate(r: &FiniteRing, a: usize, kind: CleanKind) -> CleanCertificate {
    let target = clean_set(r, kind);
    let decompositions = analysis::idempotents(r)
        .iter()
        .filter_map(|e| {
            let w = r.sub(a, e);
            target.contains(w).then(|| Decomposition {
                idempotent: e,
                rest: w,
                commuting: r.mul(e, w) == r.mul(w, e),
            })
        })
        .collect();
    CleanCertificate {
        element: a,
        kind,
        decompositions,
    }
}

/// Which count a clean-type ring predicate constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CleanRule {
    /// At least one decomposition.
    Exists,
    /// At least one commuting decomposition.
    ExistsCommuting,
    /// Exactly one decomposition.
    Unique,
    /// Exactly one commuting decomposition.
    UniqueCommuting,
}

pub fn clean_predicate(r: &FiniteRing, kind: CleanKind, rule: CleanRule, mode: Mode) -> Predicate {
    sweep(r, mode, |a| {
        let c = clean_certificate(r, a, kind);
        match rule {
            CleanRule::Exists => c.count() == 0,
            CleanRule::ExistsCommuting => c.commuting_count() == 0,
            CleanRule::Unique => c.count() != 1,
            CleanRule::UniqueCommuting => c.commuting_count() != 1,
        }
    })
}

pub fn is_clean(r: &FiniteRing) -> bool {
    clean_predicate(r, CleanKind::Unit, CleanRule::Exists, Mode::FirstWitness).holds
}

pub fn is_strongly_clean(r: &FiniteRing) -> bool {
    clean_predicate(r, CleanKind::Unit, CleanRule::ExistsCommuting, Mode::FirstWitness).holds
}

pub fn is_uniquely_clean(r: &FiniteRing) -> bool {
    clean_predicate(r, CleanKind::Unit, CleanRule::Unique, Mode::FirstWitness).holds
}

pub fn is_j_clean(r: &FiniteRing) -> bool {
    clean_predicate(r, CleanKind::Jacobson, CleanRule::Exists, Mode::FirstWitness).holds
}

pub fn is_strongly_delta_clean(r: &FiniteRing) -> bool {
    clean_predicate(r, CleanKind::Delta, CleanRule::ExistsCommuting, Mode::FirstWitness).holds
}

/// Exactly one `a = e + d`, `d ∈ Δ(R)` per element; with `strict`, exactly
/// one such pair with `ed = de`.
pub fn is_uniquely_delta_clean(r: &FiniteRing, strict: bool) -> bool {
    let rule = if strict {
        CleanRule::UniqueCommuting
    } else {
        CleanRule::Unique
    };
    clean_predicate(r, CleanKind::Delta, rule, Mode::FirstWitness).holds
}

/// Abelian: every idempotent is central. Witnesses are non-central idempotents.
pub fn abelian(r: &FiniteRing, mode: Mode) -> Predicate {
    let ids = analysis::idempotents(r);
    let center = analysis::center(r);
    sweep(r, mode, |x| ids.contains(x) && !center.contains(x))
}

pub fn is_abelian(r: &FiniteRing) -> bool {
    analysis::idempotents(r).is_subset(analysis::center(r))
}

/// Local: the non-units are closed under addition (they then form the unique
/// maximal ideal `J(R)`). Witnesses are non-units `x` with some non-unit `y`
/// such that `x + y` is a unit.
pub fn local(r: &FiniteRing, mode: Mode) -> Predicate {
    let non_units = analysis::units(r).complement();
    sweep(r, mode, |x| {
        non_units.contains(x) && non_units.iter().any(|y| r.is_unit(r.add(x, y)))
    })
}

pub fn is_local(r: &FiniteRing) -> bool {
    local(r, Mode::FirstWitness).holds
}

/// `(n, b)` with `aⁿ = aⁿ⁺¹·b`, `b ∈ comm(a)`, smallest `n ≤ |R|` first.
pub fn strongly_pi_regular_witness(r: &FiniteRing, a: usize) -> Option<(usize, usize)> {
    let commutant = &analysis::commutants(r)[a];
    let mut power = a;
    for n in 1..=r.size() {
        let next = r.mul(power, a);
        if let Some(b) = commutant.iter().find(|&b| r.mul(next, b) == power) {
            return Some((n, b));
        }
        power = next;
    }
    None
}

pub fn strongly_pi_regular(r: &FiniteRing, mode: Mode) -> Predicate {
    sweep(r, mode, |a| strongly_pi_regular_witness(r, a).is_none())
}

pub fn is_strongly_pi_regular(r: &FiniteRing) -> bool {
    strongly_pi_regular(r, Mode::FirstWitness).holds
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetSizes {
    pub units: usize,
    pub idempotents: usize,
    pub nilpotents: usize,
    pub jacobson: usize,
    pub delta: usize,
    pub qnil: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub ring: String,
    pub size: usize,
    pub delta_quasipolar: bool,
    pub j_quasipolar: bool,
    pub quasipolar: bool,
    pub clean: bool,
    pub strongly_clean: bool,
    pub uniquely_clean: bool,
    pub strongly_delta_clean: bool,
    pub uniquely_delta_clean: bool,
    pub j_clean: bool,
    pub abelian: bool,
    pub local: bool,
    pub strongly_pi_regular: bool,
    pub sizes: SetSizes,
    /// Failing elements for each predicate that does not hold.
    pub witnesses: BTreeMap<&'static str, Vec<usize>>,
}

pub fn classification_report(r: &FiniteRing, opts: ClassifyOptions) -> ClassificationReport {
    let mode = opts.mode;
    let unique_delta_rule = if opts.strict_delta_commuting {
        CleanRule::UniqueCommuting
    } else {
        CleanRule::Unique
    };
    let predicates: [(&'static str, Predicate); 12] = [
        ("delta_quasipolar", spectral_predicate(r, SpectralFlavor::Delta, mode)),
        ("j_quasipolar", spectral_predicate(r, SpectralFlavor::Jacobson, mode)),
        ("quasipolar", spectral_predicate(r, SpectralFlavor::Quasipolar, mode)),
        ("clean", clean_predicate(r, CleanKind::Unit, CleanRule::Exists, mode)),
        (
            "strongly_clean",
            clean_predicate(r, CleanKind::Unit, CleanRule::ExistsCommuting, mode),
        ),
        ("uniquely_clean", clean_predicate(r, CleanKind::Unit, CleanRule::Unique, mode)),
        (
            "strongly_delta_clean",
            clean_predicate(r, CleanKind::Delta, CleanRule::ExistsCommuting, mode),
        ),
        (
            "uniquely_delta_clean",
            clean_predicate(r, CleanKind::Delta, unique_delta_rule, mode),
        ),
        ("j_clean", clean_predicate(r, CleanKind::Jacobson, CleanRule::Exists, mode)),
        ("abelian", abelian(r, mode)),
        ("local", local(r, mode)),
        ("strongly_pi_regular", strongly_pi_regular(r, mode)),
    ];
    let holds = |i: usize| predicates[i].1.holds;
    let witnesses = predicates
        .iter()
        .filter(|(_, p)| !p.holds)
        .map(|(name, p)| (*name, p.witnesses.clone()))
        .collect();
    ClassificationReport {
        ring: r.descriptor().to_string(),
        size: r.size(),
        delta_quasipolar: holds(0),
        j_quasipolar: holds(1),
        quasipolar: holds(2),
        clean: holds(3),
        strongly_clean: holds(4),
        uniquely_clean: holds(5),
        strongly_delta_clean: holds(6),
        uniquely_delta_clean: holds(7),
        j_clean: holds(8),
        abelian: holds(9),
        local: holds(10),
        strongly_pi_regular: holds(11),
        sizes: SetSizes {
            units: analysis::units(r).count(),
            idempotents: analysis::idempotents(r).count(),
            nilpotents: analysis::nilpotents(r).count(),
            jacobson: analysis::jacobson_radical(r).count(),
            delta: analysis::delta(r).count(),
            qnil: analysis::qnil(r).count(),
        },
        witnesses,
    }
}
