//! Ring families: `Z_n`, table rings, direct products, `M_k(R)`, `T_k(R)`,
//! `H_(s,t)(R)`, Dorroh extensions, corners `eRe` and quotients `R/I`.
//!
//! Each construction fixes a mixed-radix encoding of its elements and
//! compiles full operation tables. Matrix entries are stored row-major with
//! the first entry as the most significant digit; products use
//! `index = left·|S| + right`; `H_(s,t)(R)` stores the free triple `(c, e, f)`;
//! Dorroh pairs use `index = r·|V| + v`.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::bimodule::Bimodule;
use crate::descriptor::{ConstructionDescriptor, ModuleDescriptor};
use crate::error::{Result, RingError};
use crate::ring::{capacity_from_env, FiniteRing, Structure, TableRing};
use crate::set::ElementSet;

/// Tables bundled with the crate, resolved when no file of that name exists.
const BUNDLED_TABLES: &[(&str, &str)] = &[("f4.json", include_str!("../corpus/f4.json"))];

/// Settings shared by every construction in one build.
#[derive(Debug, Clone)]
pub struct BuildContext {
    pub capacity: usize,
    /// Directory that relative `table:` paths are resolved against.
    pub base_dir: Option<PathBuf>,
}

impl Default for BuildContext {
    fn default() -> Self {
        BuildContext {
            capacity: capacity_from_env(),
            base_dir: None,
        }
    }
}

impl BuildContext {
    pub fn with_capacity(capacity: usize) -> Self {
        BuildContext {
            capacity,
            base_dir: None,
        }
    }

    fn admit(&self, size: u128) -> Result<usize> {
        if size > self.capacity as u128 {
            Err(RingError::Capacity {
                size,
                capacity: self.capacity,
            })
        } else {
            Ok(size as usize)
        }
    }

    fn load_table(&self, path: &str) -> Result<TableRing> {
        let candidate = match &self.base_dir {
            Some(dir) => dir.join(path),
            None => PathBuf::from(path),
        };
        let text = match std::fs::read_to_string(&candidate) {
            Ok(t) => t,
            Err(e) => {
                let name = Path::new(path).file_name().and_then(|n| n.to_str());
                match BUNDLED_TABLES.iter().find(|(n, _)| Some(*n) == name) {
                    Some((_, text)) => text.to_string(),
                    None => {
                        return Err(RingError::Io {
                            path: candidate.display().to_string(),
                            message: e.to_string(),
                        })
                    }
                }
            }
        };
        TableRing::from_json(&text)
    }

    /// Builds the ring named by a descriptor.
    pub fn build(&self, spec: &ConstructionDescriptor) -> Result<Arc<FiniteRing>> {
        use ConstructionDescriptor as D;
        let ring = match spec {
            D::Zn(n) => self.zn(*n)?,
            D::Table(path) => {
                let table = self.load_table(path)?;
                FiniteRing::from_table_with(&table, self.capacity, spec.clone())?
            }
            D::Product(a, b) => self.product(&self.build(a)?, &self.build(b)?)?,
            D::Matrix(k, r) => self.matrix_ring(*k, &self.build(r)?)?,
            D::UpperTriangular(k, r) => self.upper_triangular(*k, &self.build(r)?)?,
            D::H { s, t, base } => self.h_ring(*s, *t, &self.build(base)?)?,
            D::Corner { base, idempotent } => self.corner(&self.build(base)?, *idempotent)?,
            D::Dorroh { base, module } => {
                let r = self.build(base)?;
                let v = self.module(&r, module)?;
                self.dorroh(&r, Arc::new(v))?
            }
            D::Quotient { base, generators } => {
                let r = self.build(base)?;
                for &g in generators {
                    r.element(g)?;
                }
                let i = ideal_generated(&r, generators);
                self.quotient(&r, &i)?
            }
        };
        Ok(Arc::new(ring.with_descriptor(spec.clone())))
    }

    /// Parses and builds a ring spec.
    pub fn build_str(&self, text: &str) -> Result<Arc<FiniteRing>> {
        self.build(&ConstructionDescriptor::parse(text)?)
    }

    fn module(&self, base: &FiniteRing, m: &ModuleDescriptor) -> Result<Bimodule> {
        match m {
            ModuleDescriptor::Zero => Ok(Bimodule::zero(base)),
            ModuleDescriptor::SelfAction => Ok(Bimodule::self_action(base)),
            ModuleDescriptor::Ideal(gens) => {
                for &g in gens {
                    base.element(g)?;
                }
                Bimodule::ideal(base, &ideal_generated(base, gens))
            }
            ModuleDescriptor::Scalar { ring, generators } => {
                let s = self.build(ring)?;
                let i = if generators.is_empty() {
                    s.full_set()
                } else {
                    for &g in generators {
                        s.element(g)?;
                    }
                    ideal_generated(&s, generators)
                };
                Bimodule::scalar(base, &s, &i)
            }
        }
    }

    pub fn zn(&self, n: usize) -> Result<FiniteRing> {
        if n < 2 {
            return Err(RingError::InvalidParameter(format!(
                "Z_n needs n >= 2, got {n}"
            )));
        }
        self.admit(n as u128)?;
        FiniteRing::from_fns(
            n,
            0,
            1,
            |x, y| (x + y) % n,
            |x, y| (x * y) % n,
            ConstructionDescriptor::Zn(n),
            Structure::Zn { modulus: n },
        )
    }

    pub fn product(&self, r: &Arc<FiniteRing>, s: &Arc<FiniteRing>) -> Result<FiniteRing> {
        let m = s.size();
        let size = self.admit(r.size() as u128 * m as u128)?;
        FiniteRing::from_fns(
            size,
            r.zero() * m + s.zero(),
            r.one() * m + s.one(),
            |x, y| r.add(x / m, y / m) * m + s.add(x % m, y % m),
            |x, y| r.mul(x / m, y / m) * m + s.mul(x % m, y % m),
            ConstructionDescriptor::Product(
                Box::new(r.descriptor().clone()),
                Box::new(s.descriptor().clone()),
            ),
            Structure::Product {
                left: r.clone(),
                right: s.clone(),
            },
        )
    }

    fn power_size(&self, base: usize, digits: usize) -> Result<usize> {
        let size = u32::try_from(digits)
            .ok()
            .and_then(|d| (base as u128).checked_pow(d))
            .unwrap_or(u128::MAX);
        self.admit(size)
    }

    pub fn matrix_ring(&self, k: usize, r: &Arc<FiniteRing>) -> Result<FiniteRing> {
        if k == 0 {
            return Err(RingError::InvalidParameter("matrix dimension must be >= 1".into()));
        }
        let size = self.power_size(r.size(), k * k)?;
        let code = MatrixCode::full(k, r.size());
        let identity = code.identity(r);
        let zero = code.encode(&vec![r.zero(); k * k]);
        FiniteRing::from_fns(
            size,
            zero,
            identity,
            |x, y| code.add(r, x, y),
            |x, y| code.mul(r, x, y),
            ConstructionDescriptor::Matrix(k, Box::new(r.descriptor().clone())),
            Structure::Matrix {
                dim: k,
                base: r.clone(),
            },
        )
    }

    pub fn upper_triangular(&self, k: usize, r: &Arc<FiniteRing>) -> Result<FiniteRing> {
        if k == 0 {
            return Err(RingError::InvalidParameter("matrix dimension must be >= 1".into()));
        }
        let size = self.power_size(r.size(), k * (k + 1) / 2)?;
        let code = MatrixCode::upper(k, r.size());
        let identity = code.identity(r);
        let zero = code.encode(&vec![r.zero(); code.positions.len()]);
        FiniteRing::from_fns(
            size,
            zero,
            identity,
            |x, y| code.add(r, x, y),
            |x, y| code.mul(r, x, y),
            ConstructionDescriptor::UpperTriangular(k, Box::new(r.descriptor().clone())),
            Structure::UpperTriangular {
                dim: k,
                base: r.clone(),
            },
        )
    }

    /// `H_(s,t)(R)`: `s` and `t` must be central units of `R`.
    pub fn h_ring(&self, s: usize, t: usize, r: &Arc<FiniteRing>) -> Result<FiniteRing> {
        for (name, x) in [("s", s), ("t", t)] {
            r.element(x)?;
            if !r.is_unit(x) {
                return Err(RingError::InvalidParameter(format!("{name} = {x} is not a unit")));
            }
            if r.elements().any(|y| r.mul(x, y) != r.mul(y, x)) {
                return Err(RingError::InvalidParameter(format!("{name} = {x} is not central")));
            }
        }
        let q = r.size();
        let size = self.power_size(q, 3)?;
        let h = HCode { s, t, q };
        FiniteRing::from_fns(
            size,
            h.encode(r.zero(), r.zero(), r.zero()),
            h.encode(r.zero(), r.zero(), r.one()),
            |x, y| {
                let (a, b) = (h.decode(x), h.decode(y));
                h.encode(r.add(a.c, b.c), r.add(a.e, b.e), r.add(a.f, b.f))
            },
            |x, y| {
                let (m, n) = (h.expand(r, x), h.expand(r, y));
                let c = r.add(r.mul(m.c, n.a), r.mul(m.d, n.c));
                let e = r.add(r.mul(m.d, n.e), r.mul(m.e, n.f));
                h.encode(c, e, r.mul(m.f, n.f))
            },
            ConstructionDescriptor::H {
                s,
                t,
                base: Box::new(r.descriptor().clone()),
            },
            Structure::H {
                s,
                t,
                base: r.clone(),
            },
        )
    }

    /// `D(R, V)` with multiplication `(r,v)(s,w) = (rs, rw + vs + vw)`.
    pub fn dorroh(&self, r: &Arc<FiniteRing>, v: Arc<Bimodule>) -> Result<FiniteRing> {
        v.check_laws(r)?;
        let descriptor = ConstructionDescriptor::Dorroh {
            base: Box::new(r.descriptor().clone()),
            module: v.descriptor().clone(),
        };
        let m = v.size();
        let size = self.admit(r.size() as u128 * m as u128)?;
        let vz = v.zero_element();
        FiniteRing::from_fns(
            size,
            r.zero() * m + vz,
            r.one() * m + vz,
            |x, y| r.add(x / m, y / m) * m + v.add(x % m, y % m),
            |x, y| {
                let (r1, v1, r2, v2) = (x / m, x % m, y / m, y % m);
                let tail = v.add(v.add(v.act_left(r1, v2), v.act_right(v1, r2)), v.mul(v1, v2));
                r.mul(r1, r2) * m + tail
            },
            descriptor,
            Structure::Dorroh {
                base: r.clone(),
                module: v.clone(),
            },
        )
    }

    /// The corner ring `eRe` with identity `e`.
    pub fn corner(&self, r: &Arc<FiniteRing>, e: usize) -> Result<FiniteRing> {
        r.element(e)?;
        if r.mul(e, e) != e {
            return Err(RingError::InvalidParameter(format!("{e} is not idempotent")));
        }
        if e == r.zero() {
            return Err(RingError::InvalidParameter(
                "corner at the zero idempotent has no identity".into(),
            ));
        }
        let mut members: Vec<usize> = r.elements().map(|x| r.mul(r.mul(e, x), e)).collect();
        members.sort_unstable();
        members.dedup();
        let size = self.admit(members.len() as u128)?;
        let index: HashMap<usize, usize> =
            members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        FiniteRing::from_fns(
            size,
            index[&r.zero()],
            index[&e],
            |x, y| index[&r.add(members[x], members[y])],
            |x, y| index[&r.mul(members[x], members[y])],
            ConstructionDescriptor::Corner {
                base: Box::new(r.descriptor().clone()),
                idempotent: e,
            },
            Structure::Corner {
                parent: r.clone(),
                idempotent: e,
                members: members.clone(),
            },
        )
    }

    /// `R/I` with minimum-index coset representatives, ordered by
    /// representative.
    pub fn quotient(&self, r: &Arc<FiniteRing>, ideal: &ElementSet) -> Result<FiniteRing> {
        check_ideal(r, ideal)?;
        let members = ideal.to_vec();
        let mut representative_of = vec![usize::MAX; r.size()];
        let mut representatives = Vec::new();
        for x in r.elements() {
            if representative_of[x] != usize::MAX {
                continue;
            }
            // x is the smallest element of its coset: all smaller ones are taken.
            representatives.push(x);
            for &i in &members {
                representative_of[r.add(x, i)] = x;
            }
        }
        let size = self.admit(representatives.len() as u128)?;
        let projection: Vec<usize> = representative_of
            .iter()
            .map(|rep| representatives.binary_search(rep).expect("representative"))
            .collect();
        let generators = members.iter().copied().filter(|&x| x != r.zero()).collect::<Vec<_>>();
        FiniteRing::from_fns(
            size,
            projection[r.zero()],
            projection[r.one()],
            |x, y| projection[r.add(representatives[x], representatives[y])],
            |x, y| projection[r.mul(representatives[x], representatives[y])],
            ConstructionDescriptor::Quotient {
                base: Box::new(r.descriptor().clone()),
                generators: if generators.is_empty() { vec![r.zero()] } else { generators },
            },
            Structure::Quotient {
                parent: r.clone(),
                ideal: ideal.clone(),
                representatives: representatives.clone(),
                projection: projection.clone(),
            },
        )
        .map_err(|e| match e {
            RingError::ZeroRing => RingError::NotIdeal("the ideal is the whole ring".into()),
            other => other,
        })
    }
}

pub fn zn(n: usize) -> Result<Arc<FiniteRing>> {
    BuildContext::default().zn(n).map(Arc::new)
}

pub fn product(r: &Arc<FiniteRing>, s: &Arc<FiniteRing>) -> Result<Arc<FiniteRing>> {
    BuildContext::default().product(r, s).map(Arc::new)
}

pub fn matrix_ring(k: usize, r: &Arc<FiniteRing>) -> Result<Arc<FiniteRing>> {
    BuildContext::default().matrix_ring(k, r).map(Arc::new)
}

pub fn upper_triangular(k: usize, r: &Arc<FiniteRing>) -> Result<Arc<FiniteRing>> {
    BuildContext::default().upper_triangular(k, r).map(Arc::new)
}

pub fn h_ring(s: usize, t: usize, r: &Arc<FiniteRing>) -> Result<Arc<FiniteRing>> {
    BuildContext::default().h_ring(s, t, r).map(Arc::new)
}

pub fn dorroh(r: &Arc<FiniteRing>, module: Bimodule) -> Result<Arc<FiniteRing>> {
    BuildContext::default().dorroh(r, Arc::new(module)).map(Arc::new)
}

pub fn corner(r: &Arc<FiniteRing>, e: usize) -> Result<Arc<FiniteRing>> {
    BuildContext::default().corner(r, e).map(Arc::new)
}

pub fn quotient(r: &Arc<FiniteRing>, ideal: &ElementSet) -> Result<Arc<FiniteRing>> {
    BuildContext::default().quotient(r, ideal).map(Arc::new)
}

/// Parses and builds a ring spec with default settings.
pub fn build(text: &str) -> Result<Arc<FiniteRing>> {
    BuildContext::default().build_str(text)
}

/// Two-sided ideal generated by `gens`, by saturation under addition,
/// negation and multiplication by ring elements on either side.
pub fn ideal_generated(r: &FiniteRing, gens: &[usize]) -> ElementSet {
    let mut set = r.set_of([r.zero()]);
    let mut queue: Vec<usize> = vec![r.zero()];
    for &g in gens {
        if set.insert(g) {
            queue.push(g);
        }
    }
    let mut members: Vec<usize> = set.to_vec();
    while let Some(x) = queue.pop() {
        let mut fresh = Vec::new();
        for &y in &members {
            fresh.push(r.add(x, y));
        }
        fresh.push(r.neg(x));
        for s in r.elements() {
            fresh.push(r.mul(s, x));
            fresh.push(r.mul(x, s));
        }
        for z in fresh {
            if set.insert(z) {
                members.push(z);
                queue.push(z);
            }
        }
    }
    set
}

pub(crate) fn check_ideal(r: &FiniteRing, ideal: &ElementSet) -> Result<()> {
    if ideal.ring_tag() != r.tag() {
        return Err(RingError::NotIdeal("set belongs to a different ring".into()));
    }
    if !ideal.contains(r.zero()) {
        return Err(RingError::NotIdeal("does not contain zero".into()));
    }
    for x in ideal {
        if !ideal.contains(r.neg(x)) {
            return Err(RingError::NotIdeal(format!("-{x} missing")));
        }
        for y in ideal {
            if !ideal.contains(r.add(x, y)) {
                return Err(RingError::NotIdeal(format!("{x} + {y} missing")));
            }
        }
        for s in r.elements() {
            if !ideal.contains(r.mul(s, x)) || !ideal.contains(r.mul(x, s)) {
                return Err(RingError::NotIdeal(format!("{s}·{x} or {x}·{s} missing")));
            }
        }
    }
    Ok(())
}

/// Row-major mixed-radix encoding of square or upper-triangular matrices.
#[derive(Debug, Clone)]
pub struct MatrixCode {
    dim: usize,
    radix: usize,
    /// Stored `(row, col)` positions in digit order, most significant first.
    positions: Vec<(usize, usize)>,
    slot: Vec<Option<usize>>,
}

impl MatrixCode {
    pub fn full(dim: usize, radix: usize) -> Self {
        Self::new(dim, radix, |_, _| true)
    }

    pub fn upper(dim: usize, radix: usize) -> Self {
        Self::new(dim, radix, |i, j| i <= j)
    }

    fn new(dim: usize, radix: usize, keep: impl Fn(usize, usize) -> bool) -> Self {
        let mut positions = Vec::new();
        let mut slot = vec![None; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                if keep(i, j) {
                    slot[i * dim + j] = Some(positions.len());
                    positions.push((i, j));
                }
            }
        }
        MatrixCode {
            dim,
            radix,
            positions,
            slot,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * self.radix + d)
    }

    pub fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut digits = vec![0; self.positions.len()];
        for d in digits.iter_mut().rev() {
            *d = x % self.radix;
            x /= self.radix;
        }
        digits
    }

    /// Full `dim × dim` matrix, with `zero` in unstored positions.
    pub fn to_matrix(&self, x: usize, zero: usize) -> Vec<Vec<usize>> {
        let digits = self.decode(x);
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.slot[i * self.dim + j].map_or(zero, |s| digits[s]))
                    .collect()
            })
            .collect()
    }

    /// Encodes a full matrix; `None` if it has a nonzero unstored entry.
    pub fn from_matrix(&self, m: &[Vec<usize>], zero: usize) -> Option<usize> {
        let mut digits = vec![0; self.positions.len()];
        for i in 0..self.dim {
            for j in 0..self.dim {
                match self.slot[i * self.dim + j] {
                    Some(s) => digits[s] = m[i][j],
                    None if m[i][j] != zero => return None,
                    None => {}
                }
            }
        }
        Some(self.encode(&digits))
    }

    fn identity(&self, r: &FiniteRing) -> usize {
        let digits: Vec<usize> = self
            .positions
            .iter()
            .map(|&(i, j)| if i == j { r.one() } else { r.zero() })
            .collect();
        self.encode(&digits)
    }

    fn add(&self, r: &FiniteRing, x: usize, y: usize) -> usize {
        let (a, b) = (self.decode(x), self.decode(y));
        let sum: Vec<usize> = a.iter().zip(&b).map(|(&p, &q)| r.add(p, q)).collect();
        self.encode(&sum)
    }

    fn mul(&self, r: &FiniteRing, x: usize, y: usize) -> usize {
        let (a, b) = (self.to_matrix(x, r.zero()), self.to_matrix(y, r.zero()));
        let digits: Vec<usize> = self
            .positions
            .iter()
            .map(|&(i, j)| {
                (0..self.dim).fold(r.zero(), |acc, l| r.add(acc, r.mul(a[i][l], b[l][j])))
            })
            .collect();
        self.encode(&digits)
    }
}

/// Entries `[[a,0,0],[c,d,e],[0,0,f]]` of an `H_(s,t)(R)` element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HEntries {
    pub a: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub f: usize,
}

impl HEntries {
    pub fn to_matrix(&self, zero: usize) -> Vec<Vec<usize>> {
        vec![
            vec![self.a, zero, zero],
            vec![self.c, self.d, self.e],
            vec![zero, zero, self.f],
        ]
    }
}

#[derive(Debug, Clone, Copy)]
pub struct HCode {
    pub s: usize,
    pub t: usize,
    pub q: usize,
}

pub struct Triple {
    pub c: usize,
    pub e: usize,
    pub f: usize,
}

impl HCode {
    pub fn encode(&self, c: usize, e: usize, f: usize) -> usize {
        (c * self.q + e) * self.q + f
    }

    pub fn decode(&self, x: usize) -> Triple {
        Triple {
            c: x / (self.q * self.q),
            e: x / self.q % self.q,
            f: x % self.q,
        }
    }

    /// Recovers `d = f + t·e` and `a = d + s·c`.
    pub fn expand(&self, r: &FiniteRing, x: usize) -> HEntries {
        let Triple { c, e, f } = self.decode(x);
        let d = r.add(f, r.mul(self.t, e));
        let a = r.add(d, r.mul(self.s, c));
        HEntries { a, c, d, e, f }
    }
}

/// Matrix entries of an element of `M_k(R)`, `T_k(R)` or `H_(s,t)(R)`.
pub fn matrix_entries(ring: &FiniteRing, x: usize) -> Option<Vec<Vec<usize>>> {
    match ring.structure() {
        Structure::Matrix { dim, base } => {
            Some(MatrixCode::full(*dim, base.size()).to_matrix(x, base.zero()))
        }
        Structure::UpperTriangular { dim, base } => {
            Some(MatrixCode::upper(*dim, base.size()).to_matrix(x, base.zero()))
        }
        Structure::H { s, t, base } => Some(
            HCode {
                s: *s,
                t: *t,
                q: base.size(),
            }
            .expand(base, x)
            .to_matrix(base.zero()),
        ),
        _ => None,
    }
}

/// Index of a matrix in `M_k(R)` / `T_k(R)` / `H_(s,t)(R)`, if it belongs there.
pub fn matrix_index(ring: &FiniteRing, m: &[Vec<usize>]) -> Option<usize> {
    match ring.structure() {
        Structure::Matrix { dim, base } => {
            MatrixCode::full(*dim, base.size()).from_matrix(m, base.zero())
        }
        Structure::UpperTriangular { dim, base } => {
            MatrixCode::upper(*dim, base.size()).from_matrix(m, base.zero())
        }
        Structure::H { s, t, base } => {
            let h = HCode {
                s: *s,
                t: *t,
                q: base.size(),
            };
            let x = h.encode(m[1][0], m[1][2], m[2][2]);
            (h.expand(base, x).to_matrix(base.zero()) == m).then_some(x)
        }
        _ => None,
    }
}

/// Structural rendering of an element, e.g. `[[1,1],[0,0]]` or `(1, 2)`.
pub fn describe(ring: &FiniteRing, x: usize) -> String {
    fn matrix(base: &FiniteRing, m: &[Vec<usize>]) -> String {
        let rows: Vec<String> = m
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|&v| describe(base, v)).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
    match ring.structure() {
        Structure::Zn { .. } => x.to_string(),
        Structure::Table => format!("#{x}"),
        Structure::Product { left, right } => {
            let m = right.size();
            format!("({}, {})", describe(left, x / m), describe(right, x % m))
        }
        Structure::Matrix { base, .. }
        | Structure::UpperTriangular { base, .. }
        | Structure::H { base, .. } => {
            matrix(base, &matrix_entries(ring, x).expect("matrix structure"))
        }
        Structure::Dorroh { base, module } => {
            let m = module.size();
            format!("({}, v{})", describe(base, x / m), module.label(x % m))
        }
        Structure::Corner {
            parent, members, ..
        } => describe(parent, members[x]),
        Structure::Quotient {
            parent,
            representatives,
            ..
        } => format!("{}+I", describe(parent, representatives[x])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis;

    fn z(n: usize) -> Arc<FiniteRing> {
        zn(n).unwrap()
    }

    #[test]
    fn zn_rejects_small_moduli() {
        assert!(matches!(zn(1), Err(RingError::InvalidParameter(_))));
        assert!(matches!(zn(0), Err(RingError::InvalidParameter(_))));
    }

    #[test]
    fn capacity_is_enforced() {
        let ctx = BuildContext::with_capacity(4096);
        let z4 = z(4);
        assert!(matches!(
            ctx.matrix_ring(3, &z4),
            Err(RingError::Capacity { .. })
        ));
        assert!(matches!(ctx.zn(5000), Err(RingError::Capacity { .. })));
        assert_eq!(ctx.matrix_ring(2, &Arc::new(ctx.zn(8).unwrap())).unwrap().size(), 4096);
    }

    #[test]
    fn upper_triangular_z2_layout() {
        let t = upper_triangular(2, &z(2)).unwrap();
        assert_eq!(t.size(), 8);
        assert_eq!(analysis::units(&t).count(), 2);
        let e11 = matrix_index(&t, &[vec![1, 0], vec![0, 0]]).unwrap();
        let e12 = matrix_index(&t, &[vec![0, 1], vec![0, 0]]).unwrap();
        let sum = matrix_index(&t, &[vec![1, 1], vec![0, 0]]).unwrap();
        assert_eq!(t.add(e11, e12), sum);
        assert_eq!(describe(&t, sum), "[[1,1],[0,0]]");
        assert_eq!(matrix_index(&t, &[vec![0, 0], vec![1, 0]]), None);
    }

    #[test]
    fn gl2_f2_has_six_elements() {
        let m = matrix_ring(2, &z(2)).unwrap();
        assert_eq!(m.size(), 16);
        // Oracle: determinant over F_2.
        let dets = m
            .elements()
            .filter(|&x| {
                let a = matrix_entries(&m, x).unwrap();
                (a[0][0] * a[1][1] + a[0][1] * a[1][0]) % 2 == 1
            })
            .count();
        assert_eq!(dets, 6);
        assert_eq!(analysis::units(&m).count(), 6);
    }

    #[test]
    fn one_by_one_matrices_match_base() {
        let r = z(6);
        let m = matrix_ring(1, &r).unwrap();
        assert_eq!(m.to_table(), r.to_table());
        let t = upper_triangular(1, &r).unwrap();
        assert_eq!(t.to_table(), r.to_table());
    }

    #[test]
    fn product_encoding() {
        let p = product(&z(2), &z(4)).unwrap();
        assert_eq!(p.size(), 8);
        assert_eq!(p.one(), 4 + 1);
        assert_eq!(describe(&p, 7), "(1, 3)");
        assert_eq!(p.mul(7, 7), 4 + 1);
    }

    #[test]
    fn h_ring_identity_and_size() {
        let h = h_ring(1, 1, &z(2)).unwrap();
        assert_eq!(h.size(), 8);
        let id = matrix_entries(&h, h.one()).unwrap();
        assert_eq!(id, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn h_ring_closure_against_m3() {
        // Oracle: plain 3×3 matrix product mod n.
        let m3 = |a: &[Vec<usize>], b: &[Vec<usize>], n: usize| -> Vec<Vec<usize>> {
            (0..3)
                .map(|i| (0..3).map(|j| (0..3).map(|l| a[i][l] * b[l][j]).sum::<usize>() % n).collect())
                .collect()
        };
        for (s, t, n) in [(1, 1, 2), (1, 2, 3), (3, 1, 4), (1, 3, 4)] {
            let base = z(n);
            let h = h_ring(s, t, &base).unwrap();
            for x in h.elements() {
                let mx = matrix_entries(&h, x).unwrap();
                // a - d = s c, d - f = t e
                assert_eq!(base.sub(mx[0][0], mx[1][1]), base.mul(s, mx[1][0]));
                assert_eq!(base.sub(mx[1][1], mx[2][2]), base.mul(t, mx[1][2]));
                assert_eq!(matrix_index(&h, &mx), Some(x));
                for y in h.elements() {
                    let my = matrix_entries(&h, y).unwrap();
                    assert_eq!(matrix_entries(&h, h.mul(x, y)).unwrap(), m3(&mx, &my, n));
                }
            }
        }
    }

    #[test]
    fn h_ring_rejects_bad_parameters() {
        let r = z(4);
        assert!(matches!(h_ring(2, 1, &r), Err(RingError::InvalidParameter(_))));
        let t = upper_triangular(2, &z(2)).unwrap();
        // I + E12 is a unit of T_2(Z_2) but not central.
        let u = matrix_index(&t, &[vec![1, 1], vec![0, 1]]).unwrap();
        let err = h_ring(u, t.one(), &t).unwrap_err();
        assert!(err.to_string().contains("not central"));
    }

    #[test]
    fn dorroh_with_zero_module_is_base() {
        let r = z(2);
        let d = dorroh(&r, Bimodule::zero(&r)).unwrap();
        assert_eq!(d.to_table(), r.to_table());
    }

    #[test]
    fn dorroh_self_action_formula() {
        let r = z(2);
        let d = dorroh(&r, Bimodule::self_action(&r)).unwrap();
        let pair = |a: usize, v: usize| a * 2 + v;
        // (1,1)(1,1) = (1, 1 + 1 + 1) = (1, 1)
        assert_eq!(d.mul(pair(1, 1), pair(1, 1)), pair(1, 1));
        for x in d.elements() {
            assert_eq!(d.mul(pair(1, 0), x), x);
            assert_eq!(d.mul(x, pair(1, 0)), x);
        }
        assert!(d.validate().is_ring());
    }

    #[test]
    fn corners() {
        let r = z(6);
        let full = corner(&r, 1).unwrap();
        assert_eq!(full.to_table(), r.to_table());

        let t = upper_triangular(2, &z(2)).unwrap();
        let e11 = matrix_index(&t, &[vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(corner(&t, e11).unwrap().size(), 2);

        let m = matrix_ring(2, &z(2)).unwrap();
        let e11 = matrix_index(&m, &[vec![1, 0], vec![0, 0]]).unwrap();
        let c = corner(&m, e11).unwrap();
        assert_eq!(c.size(), 2);
        assert!(c.validate().is_ring());

        assert!(corner(&r, 2).is_err());
        assert!(corner(&r, 0).is_err());
    }

    #[test]
    fn corner_map_is_idempotent_and_onto() {
        let m = matrix_ring(2, &z(2)).unwrap();
        for e in analysis::idempotents(&m).iter().filter(|&e| e != m.zero()) {
            let c = corner(&m, e).unwrap();
            let Structure::Corner { members, .. } = c.structure() else {
                unreachable!()
            };
            let squeeze = |x: usize| m.mul(m.mul(e, x), e);
            for x in m.elements() {
                assert_eq!(squeeze(squeeze(x)), squeeze(x));
                assert!(members.binary_search(&squeeze(x)).is_ok());
            }
            for &y in members {
                assert_eq!(squeeze(y), y);
            }
        }
    }

    #[test]
    fn ideals_and_quotients() {
        let r = z(4);
        assert_eq!(ideal_generated(&r, &[2]).to_vec(), vec![0, 2]);
        let q = quotient(&r, &ideal_generated(&r, &[2])).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(q.add(q.one(), q.one()), q.zero());
        let same = quotient(&r, &r.set_of([0])).unwrap();
        assert_eq!(same.to_table(), r.to_table());
        assert!(matches!(
            quotient(&r, &r.set_of([0, 1])),
            Err(RingError::NotIdeal(_))
        ));
        assert!(matches!(
            quotient(&r, &r.full_set()),
            Err(RingError::NotIdeal(_))
        ));
    }

    #[test]
    fn quotient_projection_is_a_homomorphism() {
        let t = upper_triangular(2, &z(4)).unwrap();
        let j = analysis::jacobson_radical(&t);
        let q = quotient(&t, j).unwrap();
        let Structure::Quotient { projection, representatives, .. } = q.structure() else {
            unreachable!()
        };
        for (i, &rep) in representatives.iter().enumerate() {
            assert_eq!(projection[rep], i);
        }
        for x in t.elements() {
            for y in t.elements() {
                assert_eq!(projection[t.add(x, y)], q.add(projection[x], projection[y]));
                assert_eq!(projection[t.mul(x, y)], q.mul(projection[x], projection[y]));
            }
        }
        assert_eq!(projection[t.one()], q.one());
    }

    #[test]
    fn two_sided_ideal_generation_in_noncommutative_ring() {
        let m = matrix_ring(2, &z(2)).unwrap();
        let e12 = matrix_index(&m, &[vec![0, 1], vec![0, 0]]).unwrap();
        // M_2 over a field is simple.
        assert_eq!(ideal_generated(&m, &[e12]).count(), 16);
    }

    #[test]
    fn bundled_f4_table() {
        let f4 = build("table:f4.json").unwrap();
        assert_eq!(f4.size(), 4);
        assert!(f4.validate().is_ring());
        assert_eq!(analysis::units(&f4).count(), 3);
    }

    #[test]
    fn missing_table_is_an_io_error() {
        assert!(matches!(
            build("table:/nonexistent/ring.json"),
            Err(RingError::Io { .. })
        ));
    }

    #[test]
    fn every_construction_validates() {
        for spec in [
            "Z6",
            "prod(Z2, Z3)",
            "M(2, Z2)",
            "T(3, Z2)",
            "T(2, Z4)",
            "H(1, 1, Z3)",
            "H(1, 3, Z4)",
            "corner(T(2, Z2), 4)",
            "dorroh(Z2, scalar(Z4, 2))",
            "dorroh(Z4, ideal(2))",
            "dorroh(Z3, self)",
            "quot(Z8, 4)",
            "quot(T(2, Z2), 2)",
        ] {
            let r = build(spec).unwrap();
            assert!(r.validate().is_ring(), "{spec}");
            assert_eq!(r.descriptor().to_string().replace(' ', ""), spec.replace(' ', ""));
        }
    }
}
