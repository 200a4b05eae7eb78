use std::sync::Arc;

use super::{CheckResult, HarnessError, Outcome};
use crate::analysis;
use crate::bimodule::Bimodule;
use crate::classify::{self, Mode, SpectralFlavor};
use crate::constructions::{self, describe, matrix_index, HCode};
use crate::ring::{FiniteRing, Structure};
use crate::set::ElementSet;

/// One named statement, checked on one ring at a time.
pub struct Check {
    pub id: &'static str,
    /// The mathematical statement under test.
    pub statement: &'static str,
    pub run: fn(&Profile) -> Outcome,
}

/// Per-ring data shared by all checks: the Δ-spectral idempotents of every
/// element.
pub struct Profile {
    pub ring: Arc<FiniteRing>,
    pub spectral: Vec<ElementSet>,
    /// Elements with at least one Δ-spectral idempotent.
    pub qp_elements: ElementSet,
    pub delta_quasipolar: bool,
}

impl Profile {
    pub fn new(ring: Arc<FiniteRing>) -> Self {
        let spectral: Vec<ElementSet> = classify::certificates(&ring, SpectralFlavor::Delta)
            .into_iter()
            .map(|c| c.idempotents)
            .collect();
        let qp_elements = ring.set_where(|a| !spectral[a].is_empty());
        let delta_quasipolar = qp_elements.count() == ring.size();
        Profile {
            ring,
            spectral,
            qp_elements,
            delta_quasipolar,
        }
    }

    fn el(&self, x: usize) -> String {
        describe(&self.ring, x)
    }

    fn els(&self, s: &ElementSet) -> String {
        let items: Vec<String> = s.iter().map(|x| self.el(x)).collect();
        format!("{{{}}}", items.join(", "))
    }

    fn first_non_qp(&self) -> String {
        let a = self.qp_elements.complement().first().expect("not Δ-quasipolar");
        self.el(a)
    }

    fn abelian(&self) -> bool {
        classify::is_abelian(&self.ring)
    }

    fn strongly_delta_clean(&self) -> bool {
        classify::is_strongly_delta_clean(&self.ring)
    }

    fn uniquely_clean(&self) -> bool {
        classify::is_uniquely_clean(&self.ring)
    }
}

fn not_qp() -> Outcome {
    Outcome::na("R is not Δ-quasipolar")
}

fn set_diff(p: &Profile, left: &ElementSet, right: &ElementSet) -> Option<String> {
    left.first_outside(right)
        .map(|x| format!("{} in first set only", p.el(x)))
        .or_else(|| right.first_outside(left).map(|x| format!("{} in second set only", p.el(x))))
}

fn c01(p: &Profile) -> Outcome {
    let r = &p.ring;
    let delta = analysis::delta(r);
    let (sum, right, left) = analysis::delta_alternative_forms(r);
    for (name, form) in [("r+u", &sum), ("ru+1", &right), ("ur+1", &left)] {
        if let Some(w) = set_diff(p, delta, form) {
            return Outcome::fail(format!("Δ vs {name} form: {w}"));
        }
    }
    Outcome::pass()
}

fn c02(p: &Profile) -> Outcome {
    let r = &p.ring;
    let delta = analysis::delta(r);
    for d in delta.iter() {
        for u in analysis::units(r).iter() {
            for x in [r.mul(u, d), r.mul(d, u)] {
                if !delta.contains(x) {
                    return Outcome::fail(format!("d = {}, u = {}", p.el(d), p.el(u)));
                }
            }
        }
    }
    Outcome::pass()
}

fn c03(p: &Profile) -> Outcome {
    let r = &p.ring;
    let delta = analysis::delta(r);
    if !delta.contains(r.zero()) {
        return Outcome::fail("0 ∉ Δ");
    }
    for x in delta.iter() {
        for y in delta.iter() {
            if !delta.contains(r.sub(x, y)) {
                return Outcome::fail(format!("{} - {} ∉ Δ", p.el(x), p.el(y)));
            }
            if !delta.contains(r.mul(x, y)) {
                return Outcome::fail(format!("{} * {} ∉ Δ", p.el(x), p.el(y)));
            }
        }
    }
    Outcome::pass()
}

fn c04(p: &Profile) -> Outcome {
    let r = &p.ring;
    let delta = analysis::delta(r);
    let ideal = analysis::is_two_sided_ideal(r, delta);
    let equal = delta == analysis::jacobson_radical(r);
    Outcome::check(ideal == equal, || {
        format!("Δ ideal: {ideal}, Δ = J: {equal}, Δ = {}", p.els(delta))
    })
}

fn c05(p: &Profile) -> Outcome {
    let Structure::Product { left, right } = p.ring.structure() else {
        return Outcome::na("not a product ring");
    };
    let m = right.size();
    let (dl, dr) = (analysis::delta(left), analysis::delta(right));
    let expected = p
        .ring
        .set_of(dl.iter().flat_map(|x| dr.iter().map(move |y| x * m + y)));
    match set_diff(p, analysis::delta(&p.ring), &expected) {
        None => Outcome::pass(),
        Some(w) => Outcome::fail(format!("Δ(R×S) vs Δ(R)×Δ(S): {w}")),
    }
}

fn c06(p: &Profile) -> Outcome {
    let r = &p.ring;
    if !analysis::units_central(r) {
        return Outcome::na("some unit is not central");
    }
    match analysis::qnil(r).first_outside(analysis::delta(r)) {
        None => Outcome::pass(),
        Some(x) => Outcome::fail(format!("{} ∈ qnil \\ Δ", p.el(x))),
    }
}

fn c07(p: &Profile) -> Outcome {
    let Structure::UpperTriangular { dim: 2, base } = p.ring.structure() else {
        return Outcome::na("not T_2 of a ring");
    };
    let db = analysis::delta(base);
    let mut expected = p.ring.empty_set();
    for a in db.iter() {
        for d in db.iter() {
            for b in base.elements() {
                let m = vec![vec![a, b], vec![base.zero(), d]];
                expected.insert(matrix_index(&p.ring, &m).expect("upper triangular"));
            }
        }
    }
    match set_diff(p, analysis::delta(&p.ring), &expected) {
        None => Outcome::pass_with(format!("Δ = {}", p.els(&expected))),
        Some(w) => Outcome::fail(format!("Δ(T_2) vs D_2(Δ) + J_2: {w}")),
    }
}

fn c08(p: &Profile) -> Outcome {
    match analysis::delta(&p.ring).first_outside(&p.qp_elements) {
        None => Outcome::pass(),
        Some(d) => Outcome::fail(format!("{} ∈ Δ has no Δ-spectral idempotent", p.el(d))),
    }
}

fn c09(p: &Profile) -> Outcome {
    if !classify::is_j_quasipolar(&p.ring) {
        return Outcome::na("R is not J-quasipolar");
    }
    Outcome::check(p.delta_quasipolar, || {
        format!("J-quasipolar but {} is not Δ-quasipolar", p.first_non_qp())
    })
}

fn c10(p: &Profile) -> Outcome {
    let r = &p.ring;
    let minus_one = r.neg(r.one());
    for a in p.qp_elements.iter() {
        let b = r.sub(minus_one, a);
        if !p.qp_elements.contains(b) {
            return Outcome::fail(format!("a = {}, -1-a = {}", p.el(a), p.el(b)));
        }
    }
    Outcome::pass()
}

fn c11(p: &Profile) -> Outcome {
    let sdc = p.strongly_delta_clean();
    let abelian = p.abelian();
    if !p.delta_quasipolar && !(abelian && sdc) {
        return Outcome::na("R is neither Δ-quasipolar nor abelian strongly Δ-clean");
    }
    if p.delta_quasipolar && !sdc {
        return Outcome::fail("Δ-quasipolar but not strongly Δ-clean");
    }
    if abelian && sdc && !p.delta_quasipolar {
        return Outcome::fail(format!(
            "abelian strongly Δ-clean, but {} is not Δ-quasipolar",
            p.first_non_qp()
        ));
    }
    Outcome::pass()
}

fn c12(p: &Profile) -> Outcome {
    if !p.abelian() {
        return Outcome::na("R is not abelian");
    }
    let (qp, sdc, uc) = (p.delta_quasipolar, p.strongly_delta_clean(), p.uniquely_clean());
    Outcome::check(qp == sdc && sdc == uc, || {
        format!("Δ-quasipolar {qp}, strongly Δ-clean {sdc}, uniquely clean {uc}")
    })
}

fn c13(p: &Profile) -> Outcome {
    let is_t2_z2 = matches!(
        p.ring.structure(),
        Structure::UpperTriangular { dim: 2, base }
            if matches!(base.structure(), Structure::Zn { modulus: 2 })
    );
    if !is_t2_z2 {
        return Outcome::na("only T_2(Z_2)");
    }
    let (qp, abelian, uc) = (p.delta_quasipolar, p.abelian(), p.uniquely_clean());
    Outcome::check(qp && !abelian && !uc, || {
        format!("Δ-quasipolar {qp}, abelian {abelian}, uniquely clean {uc}")
    })
}

fn c14(p: &Profile) -> Outcome {
    let uc = p.uniquely_clean();
    let udc = classify::is_uniquely_delta_clean(&p.ring, false);
    if !uc && !udc {
        return Outcome::na("R is neither uniquely clean nor uniquely Δ-clean");
    }
    Outcome::check(p.delta_quasipolar, || {
        format!(
            "uniquely clean {uc}, uniquely Δ-clean {udc}, but {} is not Δ-quasipolar",
            p.first_non_qp()
        )
    })
}

fn c15(p: &Profile) -> Outcome {
    if !p.delta_quasipolar {
        return not_qp();
    }
    let two = p.ring.integer(2);
    Outcome::check(analysis::delta(&p.ring).contains(two), || {
        format!("2 = {} ∉ Δ", p.el(two))
    })
}

fn c16(p: &Profile) -> Outcome {
    let Structure::Matrix { dim, base } = p.ring.structure() else {
        return Outcome::na("not a matrix ring");
    };
    if *dim < 2 {
        return Outcome::na("1×1 matrices");
    }
    let mut m = vec![vec![base.zero(); *dim]; *dim];
    m[0][1] = base.one();
    let e12 = matrix_index(&p.ring, &m).expect("matrix");
    let in_qnil = analysis::qnil(&p.ring).contains(e12);
    let in_delta = analysis::delta(&p.ring).contains(e12);
    Outcome::check(in_qnil && !in_delta, || {
        format!("E12 ∈ qnil: {in_qnil}, E12 ∈ Δ: {in_delta}")
    })
}

fn c17(p: &Profile) -> Outcome {
    let r = &p.ring;
    for u in analysis::units(r).iter() {
        let v = r.inverse(u).expect("unit");
        for a in p.qp_elements.iter() {
            let b = r.mul(r.mul(v, a), u);
            if !p.qp_elements.contains(b) {
                return Outcome::fail(format!("a = {}, u = {}", p.el(a), p.el(u)));
            }
        }
    }
    Outcome::pass()
}

fn c18(p: &Profile) -> Outcome {
    if !p.delta_quasipolar {
        return not_qp();
    }
    let one = p.ring.set_of([p.ring.one()]);
    match analysis::units(&p.ring).iter().find(|&u| p.spectral[u] != one) {
        None => Outcome::pass(),
        Some(u) => Outcome::fail(format!("spectral({}) = {}", p.el(u), p.els(&p.spectral[u]))),
    }
}

fn c19(p: &Profile) -> Outcome {
    if !p.delta_quasipolar {
        return not_qp();
    }
    let zero = p.ring.set_of([p.ring.zero()]);
    match analysis::nilpotents(&p.ring).iter().find(|&n| p.spectral[n] != zero) {
        None => Outcome::pass(),
        Some(n) => Outcome::fail(format!("spectral({}) = {}", p.el(n), p.els(&p.spectral[n]))),
    }
}

fn c20(p: &Profile) -> Outcome {
    if !p.delta_quasipolar {
        return not_qp();
    }
    match analysis::nilpotents(&p.ring).first_outside(analysis::delta(&p.ring)) {
        None => Outcome::pass(),
        Some(n) => Outcome::fail(format!("{} ∈ Nil \\ Δ", p.el(n))),
    }
}

fn c21(p: &Profile) -> Outcome {
    if !p.delta_quasipolar {
        return not_qp();
    }
    let r = &p.ring;
    match r
        .elements()
        .find(|&a| classify::spectral_idempotents(r, a, SpectralFlavor::UnitVariant).is_empty())
    {
        None => Outcome::pass(),
        Some(a) => Outcome::fail(format!("no p ∈ comm²({0}) with {0} + p ∈ U", p.el(a))),
    }
}

fn c22(p: &Profile) -> Outcome {
    if !p.delta_quasipolar {
        return not_qp();
    }
    let r = &p.ring;
    let two = r.integer(2);
    let delta = analysis::delta(r);
    if !r.is_unit(two) {
        let evidence = if delta.contains(two) { "2 ∈ Δ(R)" } else { "2 ∉ Δ(R)" };
        return Outcome::vacuous(format!("2 ∉ U(R); {evidence}"));
    }
    Outcome::check(analysis::is_two_sided_ideal(r, delta), || {
        format!("2 ∈ U but Δ = {} is not an ideal", p.els(delta))
    })
}

fn c23(p: &Profile) -> Outcome {
    let r = &p.ring;
    let j = analysis::jacobson_radical(r);
    let quotient_size = match constructions::quotient(&p.ring, j) {
        Ok(q) => q.size(),
        Err(e) => return Outcome::fail(format!("R/J not constructible: {e}")),
    };
    let local_qp = classify::is_local(r) && p.delta_quasipolar;
    let trivial_ids = analysis::idempotents(r).count() == 2;
    let qp_trivial = p.delta_quasipolar && trivial_ids;
    let residue_two = quotient_size == 2;
    Outcome::check(local_qp == qp_trivial && qp_trivial == residue_two, || {
        format!("local ∧ Δqp {local_qp}, Δqp ∧ Id = {{0,1}} {qp_trivial}, |R/J| = {quotient_size}")
    })
}

fn c24(p: &Profile) -> Outcome {
    let r = &p.ring;
    for a in p.qp_elements.iter() {
        let (la, ra) = (analysis::ann_left(r, a), analysis::ann_right(r, a));
        for q in p.spectral[a].iter() {
            if let Some(x) = la.first_outside(&analysis::ann_left(r, q)) {
                return Outcome::fail(format!(
                    "a = {}, p = {}: {} kills a on the left but not p",
                    p.el(a),
                    p.el(q),
                    p.el(x)
                ));
            }
            if let Some(x) = ra.first_outside(&analysis::ann_right(r, q)) {
                return Outcome::fail(format!(
                    "a = {}, p = {}: {} kills a on the right but not p",
                    p.el(a),
                    p.el(q),
                    p.el(x)
                ));
            }
        }
    }
    Outcome::pass()
}

fn c25(p: &Profile) -> Outcome {
    if !(p.abelian() && classify::is_j_clean(&p.ring)) {
        return Outcome::na("R is not abelian J-clean");
    }
    Outcome::check(p.delta_quasipolar, || {
        format!("abelian J-clean but {} is not Δ-quasipolar", p.first_non_qp())
    })
}

fn c26(p: &Profile) -> Outcome {
    let r = &p.ring;
    let delta = analysis::delta(r);
    let j = analysis::jacobson_radical(r);
    if !(p.delta_quasipolar && delta == j) {
        return Outcome::na("needs R Δ-quasipolar with Δ = J");
    }
    let spr = classify::is_strongly_pi_regular(r);
    let nil = analysis::nilpotents(r);
    let chain = j == analysis::qnil(r) && analysis::qnil(r) == nil && nil == delta;
    Outcome::check(spr == chain, || {
        format!(
            "strongly π-regular {spr}; J = {}, qnil = {}, Nil = {}, Δ = {}",
            p.els(j),
            p.els(analysis::qnil(r)),
            p.els(nil),
            p.els(delta)
        )
    })
}

fn c27(p: &Profile) -> Outcome {
    let Structure::Product { left, right } = p.ring.structure() else {
        return Outcome::na("not a product ring");
    };
    let (l, rr) = (classify::is_delta_quasipolar(left), classify::is_delta_quasipolar(right));
    Outcome::check(p.delta_quasipolar == (l && rr), || {
        format!(
            "product Δqp {}, factors Δqp {l} and {rr}",
            p.delta_quasipolar
        )
    })
}

fn c28(p: &Profile) -> Outcome {
    if !p.delta_quasipolar {
        return not_qp();
    }
    let r = &p.ring;
    let mut tried = 0;
    for e in analysis::idempotents(r).iter().filter(|&e| e != r.zero()) {
        let corner = match constructions::corner(&p.ring, e) {
            Ok(c) => c,
            Err(err) => return Outcome::fail(format!("corner at {}: {err}", p.el(e))),
        };
        if let Some(&a) = classify::delta_quasipolar(&corner, Mode::FirstWitness)
            .witnesses
            .first()
        {
            return Outcome::fail(format!(
                "e = {}: {} is not Δ-quasipolar in eRe",
                p.el(e),
                describe(&corner, a)
            ));
        }
        tried += 1;
    }
    Outcome::pass_with(format!("{tried} corners"))
}

fn c29(p: &Profile) -> Outcome {
    let Structure::Dorroh { base, module } = p.ring.structure() else {
        return Outcome::na("not a Dorroh extension");
    };
    dorroh_outcome(p.delta_quasipolar, base, module)
}

fn c30(p: &Profile) -> Outcome {
    let Structure::H { s, t, base } = p.ring.structure() else {
        return Outcome::na("not an H_(s,t) ring");
    };
    h_outcome(&p.ring, p.delta_quasipolar, base, *s, *t)
}

fn c31(p: &Profile) -> Outcome {
    let Structure::Matrix { dim, .. } = p.ring.structure() else {
        return Outcome::na("not a matrix ring");
    };
    if *dim < 2 {
        return Outcome::na("1×1 matrices");
    }
    if p.delta_quasipolar {
        return Outcome::fail("every element has a Δ-spectral idempotent");
    }
    let a = p.qp_elements.complement().first().expect("witness");
    if let Some(q) = admissible_idempotent(&p.ring, a) {
        return Outcome::fail(format!(
            "witness {} re-verification found idempotent {}",
            p.el(a),
            p.el(q)
        ));
    }
    Outcome::pass_with(format!("witness {}", p.el(a)))
}

/// Re-checks a non-Δ-quasipolarity witness from the definitions alone: some
/// idempotent `q` commuting with everything that commutes with `a` and with
/// `a + q ∈ Δ`.
pub(crate) fn admissible_idempotent(r: &FiniteRing, a: usize) -> Option<usize> {
    let units: Vec<usize> = r.elements().filter(|&u| r.is_unit(u)).collect();
    let in_delta = |x: usize| units.iter().all(|&u| r.is_unit(r.add(x, u)));
    let commutes = |x: usize, y: usize| r.mul(x, y) == r.mul(y, x);
    let centralizer: Vec<usize> = r.elements().filter(|&x| commutes(x, a)).collect();
    r.elements().find(|&q| {
        r.mul(q, q) == q && centralizer.iter().all(|&x| commutes(q, x)) && in_delta(r.add(a, q))
    })
}

fn dorroh_outcome(d_qp: bool, base: &Arc<FiniteRing>, module: &Bimodule) -> Outcome {
    let base_qp = classify::is_delta_quasipolar(base);
    if d_qp && !base_qp {
        return Outcome::fail("D(R,V) is Δ-quasipolar but R is not");
    }
    let mut failed = Vec::new();
    if !base_qp {
        failed.push("(i)");
    }
    let vs = 0..module.size();
    let ids = analysis::idempotents(base);
    if !ids
        .iter()
        .all(|e| vs.clone().all(|v| module.act_left(e, v) == module.act_right(v, e)))
    {
        failed.push("(ii)");
    }
    let quasi_inverse = |v: usize| {
        vs.clone()
            .any(|w| module.add(module.add(v, w), module.mul(v, w)) == module.zero_element())
    };
    if !vs.clone().all(quasi_inverse) {
        failed.push("(iii)");
    }
    if failed.is_empty() {
        if !d_qp {
            return Outcome::fail("conditions (i)-(iii) hold but D(R,V) is not Δ-quasipolar");
        }
        return Outcome::pass_with("both directions apply");
    }
    Outcome::pass_with(format!("converse not applicable: {} fail", failed.join(", ")))
}

fn h_outcome(h: &FiniteRing, h_qp: bool, base: &FiniteRing, s: usize, t: usize) -> Outcome {
    let code = HCode { s, t, q: base.size() };
    let (db, ub) = (analysis::delta(base), analysis::units(base));
    let diag = |x: usize, set: &ElementSet| {
        let m = code.expand(base, x);
        set.contains(m.a) && set.contains(m.d) && set.contains(m.f)
    };
    let delta_formula = h.set_where(|x| diag(x, db));
    let units_formula = h.set_where(|x| diag(x, ub));
    if let Some(x) = analysis::delta(h).first_outside(&delta_formula) {
        return Outcome::fail(format!("{} ∈ Δ(H) has a diagonal entry outside Δ(R)", describe(h, x)));
    }
    if let Some(x) = delta_formula.first_outside(analysis::delta(h)) {
        return Outcome::fail(format!("{} has diagonal in Δ(R) but is not in Δ(H)", describe(h, x)));
    }
    if let Some(x) = analysis::units(h)
        .first_outside(&units_formula)
        .or_else(|| units_formula.first_outside(analysis::units(h)))
    {
        return Outcome::fail(format!("unit formula fails at {}", describe(h, x)));
    }
    let base_qp = classify::is_delta_quasipolar(base);
    Outcome::check(h_qp == base_qp, || {
        format!("H Δqp {h_qp}, R Δqp {base_qp}")
    })
}

/// Both directions of the Dorroh statement for `D(R, V)`.
pub fn check_dorroh(base: &Arc<FiniteRing>, module: Bimodule) -> Result<CheckResult, HarnessError> {
    let d = constructions::dorroh(base, module)?;
    let Structure::Dorroh { module, .. } = d.structure() else {
        unreachable!("dorroh builds a Dorroh structure")
    };
    let outcome = dorroh_outcome(classify::is_delta_quasipolar(&d), base, module);
    Ok(CheckResult::new("C29", &d, outcome))
}

/// Δ and unit formulas of `H_(s,t)(R)` and its Δ-quasipolar equivalence with `R`.
pub fn check_h_ring_equivalence(
    base: &Arc<FiniteRing>,
    s: usize,
    t: usize,
) -> Result<CheckResult, HarnessError> {
    let h = constructions::h_ring(s, t, base)?;
    let outcome = h_outcome(&h, classify::is_delta_quasipolar(&h), base, s, t);
    Ok(CheckResult::new("C30", &h, outcome))
}

pub static CHECKS: &[Check] = &[
    Check { id: "C01", statement: "Δ = {r : r+u ∈ U ∀u∈U} = {r : ru+1 ∈ U ∀u∈U} = {r : ur+1 ∈ U ∀u∈U}", run: c01 },
    Check { id: "C02", statement: "d ∈ Δ, u ∈ U ⟹ ud, du ∈ Δ", run: c02 },
    Check { id: "C03", statement: "Δ is closed under subtraction and multiplication", run: c03 },
    Check { id: "C04", statement: "Δ is an ideal ⟺ Δ = J", run: c04 },
    Check { id: "C05", statement: "Δ(R×S) = Δ(R)×Δ(S)", run: c05 },
    Check { id: "C06", statement: "U ⊆ C(R) ⟹ qnil ⊆ Δ", run: c06 },
    Check { id: "C07", statement: "Δ(T_2(R)) = D_2(Δ(R)) + J_2(R)", run: c07 },
    Check { id: "C08", statement: "every d ∈ Δ is Δ-quasipolar", run: c08 },
    Check { id: "C09", statement: "J-quasipolar ⟹ Δ-quasipolar", run: c09 },
    Check { id: "C10", statement: "a Δ-quasipolar ⟹ -1-a Δ-quasipolar", run: c10 },
    Check { id: "C11", statement: "Δ-quasipolar ⟹ strongly Δ-clean; abelian ∧ strongly Δ-clean ⟹ Δ-quasipolar", run: c11 },
    Check { id: "C12", statement: "abelian ⟹ (Δ-quasipolar ⟺ strongly Δ-clean ⟺ uniquely clean)", run: c12 },
    Check { id: "C13", statement: "T_2(Z_2) is Δ-quasipolar, not abelian, not uniquely clean", run: c13 },
    Check { id: "C14", statement: "uniquely clean or uniquely Δ-clean ⟹ Δ-quasipolar", run: c14 },
    Check { id: "C15", statement: "Δ-quasipolar ⟹ 2 ∈ Δ", run: c15 },
    Check { id: "C16", statement: "in M_k(R), k ≥ 2: E12 ∈ qnil \\ Δ", run: c16 },
    Check { id: "C17", statement: "a Δ-quasipolar, u ∈ U ⟹ u⁻¹au Δ-quasipolar", run: c17 },
    Check { id: "C18", statement: "Δ-quasipolar ⟹ the Δ-spectral idempotents of a unit are {1}", run: c18 },
    Check { id: "C19", statement: "Δ-quasipolar ⟹ the Δ-spectral idempotents of a nilpotent are {0}", run: c19 },
    Check { id: "C20", statement: "Δ-quasipolar ⟹ Nil ⊆ Δ", run: c20 },
    Check { id: "C21", statement: "Δ-quasipolar ⟹ every a has p² = p ∈ comm²(a) with a+p ∈ U", run: c21 },
    Check { id: "C22", statement: "Δ-quasipolar ∧ 2 ∈ U ⟹ Δ is an ideal", run: c22 },
    Check { id: "C23", statement: "(local ∧ Δ-quasipolar) ⟺ (Δ-quasipolar ∧ Id = {0,1}) ⟺ |R/J| = 2", run: c23 },
    Check { id: "C24", statement: "a + p ∈ Δ Δ-quasipolar ⟹ ann_l(a) ⊆ ann_l(p), ann_r(a) ⊆ ann_r(p)", run: c24 },
    Check { id: "C25", statement: "abelian ∧ J-clean ⟹ Δ-quasipolar", run: c25 },
    Check { id: "C26", statement: "Δ-quasipolar ∧ Δ = J ⟹ (strongly π-regular ⟺ J = qnil = Nil = Δ)", run: c26 },
    Check { id: "C27", statement: "R×S Δ-quasipolar ⟺ R and S Δ-quasipolar", run: c27 },
    Check { id: "C28", statement: "R Δ-quasipolar, e² = e ≠ 0 ⟹ eRe Δ-quasipolar", run: c28 },
    Check { id: "C29", statement: "D(R,V) Δ-quasipolar ⟹ R Δ-quasipolar; R Δ-quasipolar with (ii), (iii) ⟹ D(R,V) Δ-quasipolar", run: c29 },
    Check { id: "C30", statement: "Δ(H) and U(H) are cut out by the diagonal; H Δ-quasipolar ⟺ R Δ-quasipolar", run: c30 },
    Check { id: "C31", statement: "M_k(R), k ≥ 2, is not Δ-quasipolar", run: c31 },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build;

    #[test]
    fn ids_are_ordered_and_complete() {
        let ids: Vec<String> = CHECKS.iter().map(|c| c.id.to_string()).collect();
        let expected: Vec<String> = (1..=31).map(|i| format!("C{i:02}")).collect();
        assert_eq!(ids, expected);
    }

    #[test]
    fn witness_reverification_on_matrices() {
        let m = build("M(2, Z2)").unwrap();
        let p = Profile::new(m.clone());
        for a in p.qp_elements.complement().iter() {
            assert_eq!(admissible_idempotent(&m, a), None);
        }
        for a in p.qp_elements.iter() {
            assert!(admissible_idempotent(&m, a).is_some());
        }
    }
}
