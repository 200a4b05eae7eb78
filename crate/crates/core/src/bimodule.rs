//! Bimodule-rings: the `V` in a Dorroh extension `D(R, V)`.
//!
//! `V` is a possibly non-unital ring given by tables, together with a left
//! action `R × V → V` and a right action `V × R → V`. No identity of `V` is
//! ever used.

use crate::descriptor::ModuleDescriptor;
use crate::error::{Result, RingError};
use crate::ring::FiniteRing;
use crate::set::ElementSet;

fn nonzero(members: &[usize], zero: usize) -> Vec<usize> {
    let gens: Vec<usize> = members.iter().copied().filter(|&m| m != zero).collect();
    if gens.is_empty() {
        vec![zero]
    } else {
        gens
    }
}

#[derive(Debug, Clone)]
pub struct Bimodule {
    size: usize,
    base_size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    left: Vec<u16>,
    right: Vec<u16>,
    zero: usize,
    descriptor: ModuleDescriptor,
    /// Human-readable label of each element.
    labels: Vec<String>,
}

impl Bimodule {
    fn from_fns(
        base: &FiniteRing,
        size: usize,
        zero: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        left: impl Fn(usize, usize) -> usize,
        right: impl Fn(usize, usize) -> usize,
        labels: Vec<String>,
        descriptor: ModuleDescriptor,
    ) -> Self {
        let r = base.size();
        let grid = |n: usize, m: usize, f: &dyn Fn(usize, usize) -> usize| {
            let mut t = Vec::with_capacity(n * m);
            for x in 0..n {
                for y in 0..m {
                    t.push(f(x, y) as u16);
                }
            }
            t
        };
        Bimodule {
            size,
            base_size: r,
            add: grid(size, size, &add),
            mul: grid(size, size, &mul),
            left: grid(r, size, &left),
            right: grid(size, r, &right),
            zero,
            descriptor,
            labels,
        }
    }

    /// `V = 0`.
    pub fn zero(base: &FiniteRing) -> Self {
        Self::from_fns(base, 1, 0, |_, _| 0, |_, _| 0, |_, _| 0, |_, _| 0, vec!["0".into()], ModuleDescriptor::Zero)
    }

    /// `V = R` with ring multiplication as both actions.
    pub fn self_action(base: &FiniteRing) -> Self {
        Self::from_fns(
            base,
            base.size(),
            base.zero(),
            |x, y| base.add(x, y),
            |x, y| base.mul(x, y),
            |r, v| base.mul(r, v),
            |v, r| base.mul(v, r),
            base.elements().map(|x| x.to_string()).collect(),
            ModuleDescriptor::SelfAction,
        )
    }

    /// `V = I`, a two-sided ideal of `R`, with inherited operations.
    pub fn ideal(base: &FiniteRing, ideal: &ElementSet) -> Result<Self> {
        crate::constructions::check_ideal(base, ideal)?;
        let members = ideal.to_vec();
        let index = |x: usize| members.binary_search(&x).expect("ideal is closed");
        Ok(Self::from_fns(
            base,
            members.len(),
            index(base.zero()),
            |x, y| index(base.add(members[x], members[y])),
            |x, y| index(base.mul(members[x], members[y])),
            |r, v| index(base.mul(r, members[v])),
            |v, r| index(base.mul(members[v], r)),
            members.iter().map(|m| m.to_string()).collect(),
            ModuleDescriptor::Ideal(nonzero(&members, base.zero())),
        ))
    }

    /// `V = I ⊆ S` acted on by integer multiples: `r·v = v·r = k·v` where
    /// `r = k·1` in `R`. The additive group of `R` must be cyclic on `1`.
    pub fn scalar(base: &FiniteRing, ring: &FiniteRing, ideal: &ElementSet) -> Result<Self> {
        crate::constructions::check_ideal(ring, ideal)?;
        let mut multiple = vec![None; base.size()];
        let mut x = base.zero();
        for k in 0..base.size() {
            if multiple[x].is_some() {
                break;
            }
            multiple[x] = Some(k);
            x = base.add(x, base.one());
        }
        if let Some(r) = multiple.iter().position(Option::is_none) {
            return Err(RingError::InvalidParameter(format!(
                "scalar action needs R generated additively by 1; element {r} is not a multiple of 1"
            )));
        }
        let members = ideal.to_vec();
        let index = |x: usize| members.binary_search(&x).expect("ideal is closed");
        let times = |k: usize, v: usize| {
            (0..k).fold(ring.zero(), |acc, _| ring.add(acc, members[v]))
        };
        let m = Self::from_fns(
            base,
            members.len(),
            index(ring.zero()),
            |x, y| index(ring.add(members[x], members[y])),
            |x, y| index(ring.mul(members[x], members[y])),
            |r, v| index(times(multiple[r].unwrap(), v)),
            |v, r| index(times(multiple[r].unwrap(), v)),
            members.iter().map(|m| m.to_string()).collect(),
            ModuleDescriptor::Scalar {
                ring: Box::new(ring.descriptor().clone()),
                generators: if members.len() == ring.size() {
                    Vec::new()
                } else {
                    nonzero(&members, ring.zero())
                },
            },
        );
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn descriptor(&self) -> &ModuleDescriptor {
        &self.descriptor
    }

    pub fn zero_element(&self) -> usize {
        self.zero
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    #[inline]
    pub fn add(&self, v: usize, w: usize) -> usize {
        self.add[v * self.size + w] as usize
    }

    #[inline]
    pub fn mul(&self, v: usize, w: usize) -> usize {
        self.mul[v * self.size + w] as usize
    }

    /// `r·v`
    #[inline]
    pub fn act_left(&self, r: usize, v: usize) -> usize {
        self.left[r * self.size + v] as usize
    }

    /// `v·r`
    #[inline]
    pub fn act_right(&self, v: usize, r: usize) -> usize {
        self.right[v * self.base_size + r] as usize
    }

    /// Exhaustively checks that `V` is a ring, that the actions make it a
    /// unital `(R, R)`-bimodule, and the three compatibility laws
    /// `(vw)r = v(wr)`, `(vr)w = v(rw)`, `(rv)w = r(vw)`.
    pub fn check_laws(&self, base: &FiniteRing) -> Result<()> {
        let n = self.size;
        let fail = |what: &str, w: String| Err(RingError::BimoduleLaw(format!("{what} fails at {w}")));
        if base.size() != self.base_size {
            return Err(RingError::BimoduleLaw("action built for a different ring".into()));
        }
        for v in 0..n {
            if self.add(self.zero, v) != v {
                return fail("V additive identity", format!("v={v}"));
            }
            if !(0..n).any(|w| self.add(v, w) == self.zero) {
                return fail("V additive inverse", format!("v={v}"));
            }
            if self.act_left(base.one(), v) != v || self.act_right(v, base.one()) != v {
                return fail("1·v = v·1 = v", format!("v={v}"));
            }
            for w in 0..n {
                if self.add(v, w) != self.add(w, v) {
                    return fail("V additive commutativity", format!("v={v}, w={w}"));
                }
                for x in 0..n {
                    if self.add(self.add(v, w), x) != self.add(v, self.add(w, x)) {
                        return fail("V additive associativity", format!("({v}, {w}, {x})"));
                    }
                    if self.mul(self.mul(v, w), x) != self.mul(v, self.mul(w, x)) {
                        return fail("V multiplicative associativity", format!("({v}, {w}, {x})"));
                    }
                    if self.mul(v, self.add(w, x)) != self.add(self.mul(v, w), self.mul(v, x))
                        || self.mul(self.add(w, x), v) != self.add(self.mul(w, v), self.mul(x, v))
                    {
                        return fail("V distributivity", format!("({v}, {w}, {x})"));
                    }
                }
            }
        }
        for r in base.elements() {
            for v in 0..n {
                for s in base.elements() {
                    let rs = base.mul(r, s);
                    let r_plus_s = base.add(r, s);
                    if self.act_left(rs, v) != self.act_left(r, self.act_left(s, v))
                        || self.act_right(v, rs) != self.act_right(self.act_right(v, r), s)
                    {
                        return fail("action associativity", format!("r={r}, s={s}, v={v}"));
                    }
                    if self.act_left(r_plus_s, v)
                        != self.add(self.act_left(r, v), self.act_left(s, v))
                        || self.act_right(v, r_plus_s)
                            != self.add(self.act_right(v, r), self.act_right(v, s))
                    {
                        return fail("action additivity in R", format!("r={r}, s={s}, v={v}"));
                    }
                    if self.act_right(self.act_left(r, v), s)
                        != self.act_left(r, self.act_right(v, s))
                    {
                        return fail("(rv)s = r(vs)", format!("r={r}, v={v}, s={s}"));
                    }
                }
                for w in 0..n {
                    let vw = self.add(v, w);
                    if self.act_left(r, vw) != self.add(self.act_left(r, v), self.act_left(r, w))
                        || self.act_right(vw, r)
                            != self.add(self.act_right(v, r), self.act_right(w, r))
                    {
                        return fail("action additivity in V", format!("r={r}, v={v}, w={w}"));
                    }
                    if self.act_right(self.mul(v, w), r) != self.mul(v, self.act_right(w, r)) {
                        return fail("(vw)r = v(wr)", format!("v={v}, w={w}, r={r}"));
                    }
                    if self.mul(self.act_right(v, r), w) != self.mul(v, self.act_left(r, w)) {
                        return fail("(vr)w = v(rw)", format!("v={v}, r={r}, w={w}"));
                    }
                    if self.mul(self.act_left(r, v), w) != self.act_left(r, self.mul(v, w)) {
                        return fail("(rv)w = r(vw)", format!("r={r}, v={v}, w={w}"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ideal_generated, zn};

    #[test]
    fn stock_actions_satisfy_laws() {
        let z4 = zn(4).unwrap();
        Bimodule::zero(&z4).check_laws(&z4).unwrap();
        Bimodule::self_action(&z4).check_laws(&z4).unwrap();
        let i = ideal_generated(&z4, &[2]);
        Bimodule::ideal(&z4, &i).unwrap().check_laws(&z4).unwrap();
        let z2 = zn(2).unwrap();
        let v = Bimodule::scalar(&z2, &z4, &i).unwrap();
        assert_eq!(v.size(), 2);
        v.check_laws(&z2).unwrap();
    }

    #[test]
    fn incompatible_scalar_action_is_rejected() {
        // Z2 cannot act on all of Z4 by integer multiples: 2·1 ≠ 0.
        let z2 = zn(2).unwrap();
        let z4 = zn(4).unwrap();
        let v = Bimodule::scalar(&z2, &z4, &z4.full_set()).unwrap();
        assert!(matches!(v.check_laws(&z2), Err(RingError::BimoduleLaw(_))));
    }
}
