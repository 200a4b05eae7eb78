//! Ring-spec DSL: the textual form of a [`ConstructionDescriptor`].
//!
//! ```text
//! spec    := "Z" INT | "table:" PATH | "prod(" spec "," spec ")"
//!          | "M(" INT "," spec ")" | "T(" INT "," spec ")"
//!          | "H(" INT "," INT "," spec ")" | "corner(" spec "," INT ")"
//!          | "dorroh(" spec "," module ")" | "quot(" spec "," INT ("," INT)* ")"
//! module  := "zero" | "self" | "ideal(" INT ("," INT)* ")"
//!          | "scalar(" spec ("," INT)* ")"
//! ```
//!
//! Bare integers after a spec are element indices of that ring. Whitespace
//! between tokens is ignored. `Display` prints the canonical form, which
//! parses back to the same descriptor.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Result, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstructionDescriptor {
    Zn(usize),
    Table(String),
    Product(Box<ConstructionDescriptor>, Box<ConstructionDescriptor>),
    Matrix(usize, Box<ConstructionDescriptor>),
    UpperTriangular(usize, Box<ConstructionDescriptor>),
    H {
        s: usize,
        t: usize,
        base: Box<ConstructionDescriptor>,
    },
    Corner {
        base: Box<ConstructionDescriptor>,
        idempotent: usize,
    },
    Dorroh {
        base: Box<ConstructionDescriptor>,
        module: ModuleDescriptor,
    },
    Quotient {
        base: Box<ConstructionDescriptor>,
        generators: Vec<usize>,
    },
}

/// The bimodule-ring `V` of a Dorroh extension `D(R, V)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModuleDescriptor {
    /// `V = 0`.
    Zero,
    /// `V = R` acted on by ring multiplication.
    SelfAction,
    /// `V` = the two-sided ideal of `R` generated by the listed elements.
    Ideal(Vec<usize>),
    /// `V` = the ideal of another ring `S` generated by the listed elements
    /// (all of `S` when empty), with `R` acting through integer multiples.
    /// Requires the additive group of `R` to be generated by `1`.
    Scalar {
        ring: Box<ConstructionDescriptor>,
        generators: Vec<usize>,
    },
}

impl ConstructionDescriptor {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        if p.at_end() {
            return Err(p.error("empty ring spec"));
        }
        let spec = p.spec()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(spec)
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for ConstructionDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionDescriptor::*;
        match self {
            Zn(n) => write!(f, "Z{n}"),
            Table(path) => write!(f, "table:{path}"),
            Product(a, b) => write!(f, "prod({a}, {b})"),
            Matrix(k, r) => write!(f, "M({k}, {r})"),
            UpperTriangular(k, r) => write!(f, "T({k}, {r})"),
            H { s, t, base } => write!(f, "H({s}, {t}, {base})"),
            Corner { base, idempotent } => write!(f, "corner({base}, {idempotent})"),
            Dorroh { base, module } => write!(f, "dorroh({base}, {module})"),
            Quotient { base, generators } => write!(f, "quot({base}, {})", join(generators)),
        }
    }
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleDescriptor::Zero => f.write_str("zero"),
            ModuleDescriptor::SelfAction => f.write_str("self"),
            ModuleDescriptor::Ideal(g) => write!(f, "ideal({})", join(g)),
            ModuleDescriptor::Scalar { ring, generators } if generators.is_empty() => {
                write!(f, "scalar({ring})")
            }
            ModuleDescriptor::Scalar { ring, generators } => {
                write!(f, "scalar({ring}, {})", join(generators))
            }
        }
    }
}

impl Serialize for ConstructionDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> RingError {
        RingError::Parse {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| RingError::Parse {
                column: start + 1,
                message: "integer too large".into(),
            })
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphabetic())
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    /// `, INT` repeated at least `min` times.
    fn int_list(&mut self, min: usize) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        while self.eat(",") {
            out.push(self.int()?);
        }
        if out.len() < min {
            return Err(self.error("expected `,` followed by an element index"));
        }
        Ok(out)
    }

    fn spec(&mut self) -> Result<ConstructionDescriptor> {
        use ConstructionDescriptor as D;
        self.skip_ws();
        let start = self.pos;
        if self.eat("table:") {
            let begin = self.pos;
            while self
                .src
                .get(self.pos)
                .is_some_and(|&c| c != b',' && c != b')' && !c.is_ascii_whitespace())
            {
                self.pos += 1;
            }
            if begin == self.pos {
                return Err(self.error("expected a table path"));
            }
            return Ok(D::Table(
                String::from_utf8_lossy(&self.src[begin..self.pos]).into_owned(),
            ));
        }
        let name = self.ident();
        match name.as_str() {
            "Z" => Ok(D::Zn(self.int()?)),
            "prod" => {
                self.expect("(")?;
                let a = self.spec()?;
                self.expect(",")?;
                let b = self.spec()?;
                self.expect(")")?;
                Ok(D::Product(Box::new(a), Box::new(b)))
            }
            "M" | "T" => {
                self.expect("(")?;
                let k = self.int()?;
                self.expect(",")?;
                let r = Box::new(self.spec()?);
                self.expect(")")?;
                Ok(if name == "M" {
                    D::Matrix(k, r)
                } else {
                    D::UpperTriangular(k, r)
                })
            }
            "H" => {
                self.expect("(")?;
                let s = self.int()?;
                self.expect(",")?;
                let t = self.int()?;
                self.expect(",")?;
                let base = Box::new(self.spec()?);
                self.expect(")")?;
                Ok(D::H { s, t, base })
            }
            "corner" => {
                self.expect("(")?;
                let base = Box::new(self.spec()?);
                self.expect(",")?;
                let idempotent = self.int()?;
                self.expect(")")?;
                Ok(D::Corner { base, idempotent })
            }
            "dorroh" => {
                self.expect("(")?;
                let base = Box::new(self.spec()?);
                self.expect(",")?;
                let module = self.module()?;
                self.expect(")")?;
                Ok(D::Dorroh { base, module })
            }
            "quot" => {
                self.expect("(")?;
                let base = Box::new(self.spec()?);
                let generators = self.int_list(1)?;
                self.expect(")")?;
                Ok(D::Quotient { base, generators })
            }
            "" => Err(RingError::Parse {
                column: start + 1,
                message: "expected a ring spec".into(),
            }),
            _ => Err(RingError::Parse {
                column: start + 1,
                message: format!("unknown construction `{name}`"),
            }),
        }
    }

    fn module(&mut self) -> Result<ModuleDescriptor> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident();
        match name.as_str() {
            "zero" => Ok(ModuleDescriptor::Zero),
            "self" => Ok(ModuleDescriptor::SelfAction),
            "ideal" => {
                self.expect("(")?;
                let first = self.int()?;
                let mut gens = vec![first];
                gens.extend(self.int_list(0)?);
                self.expect(")")?;
                Ok(ModuleDescriptor::Ideal(gens))
            }
            "scalar" => {
                self.expect("(")?;
                let ring = Box::new(self.spec()?);
                let generators = self.int_list(0)?;
                self.expect(")")?;
                Ok(ModuleDescriptor::Scalar { ring, generators })
            }
            _ => Err(RingError::Parse {
                column: start + 1,
                message: format!("unknown Dorroh module `{name}`"),
            }),
        }
    }
}
