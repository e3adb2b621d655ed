//! Textual group specifications.
//!
//! ```text
//! product := factor ("x" factor)*
//! factor  := atom | "(" product ")"
//! atom    := "C" n | "E(" p "," r ")" | "Aff(" p "," r "," s ")"
//!          | "MatAff(" p "," r ",[" row (";" row)* "])" | "Q8"
//!          | "MM(" p "," q "," m "," r ")"
//!          | "Perm(" n ")" | "Perm(" n ";" perm ("," perm)* ")"
//! row     := int ("," int)*
//! perm    := "(" int* ")"+          e.g. (0 1 2)(3 4)
//! ```
//!
//! `Perm(n)` with no generators is the full symmetric group.

use std::fmt;
use std::str::FromStr;

use crate::arith::MatP;
use crate::error::{Error, Result};
use crate::group::{
    cyclic, direct_product, elementary_abelian, matrix_affine, miller_moreno, perm_group, quaternion8, scalar_affine,
    symmetric, FiniteGroup, Perm,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Elementary {
        p: u64,
        r: usize,
    },
    Affine {
        p: u64,
        r: usize,
        s: u64,
    },
    MatAffine {
        p: u64,
        r: usize,
        rows: Vec<Vec<u64>>,
    },
    Q8,
    MillerMoreno {
        p: u64,
        q: u64,
        m: u32,
        r: u64,
    },
    /// `gens == None` is the full symmetric group; each generator is a list of cycles.
    Perm {
        degree: usize,
        gens: Option<Vec<Vec<Vec<usize>>>>,
    },
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let spec = p.product()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        let g = match self {
            GroupSpec::Cyclic(n) => cyclic(*n)?,
            GroupSpec::Elementary { p, r } => elementary_abelian(*p, *r)?,
            GroupSpec::Affine { p, r, s } => scalar_affine(*p, *r, *s)?,
            GroupSpec::MatAffine { p, r, rows } => {
                if rows.len() != *r || rows.iter().any(|row| row.len() != *r) {
                    return Err(Error::MatrixShape { r: *r, p: *p });
                }
                let m = MatP { p: *p, r: *r, entries: rows.concat() };
                matrix_affine(*p, *r, &m)?
            }
            GroupSpec::Q8 => quaternion8(),
            GroupSpec::MillerMoreno { p, q, m, r } => miller_moreno(*p, *q, *m, *r)?,
            GroupSpec::Perm { degree, gens: None } => symmetric(*degree)?,
            GroupSpec::Perm { degree, gens: Some(gens) } => {
                let perms = gens
                    .iter()
                    .enumerate()
                    .map(|(index, cycles)| {
                        Perm::from_cycles(*degree, cycles).map_err(|_| Error::NotBijection { index, degree: *degree })
                    })
                    .collect::<Result<Vec<_>>>()?;
                perm_group(*degree, &perms)?
            }
            GroupSpec::Product(a, b) => direct_product(&a.build()?, &b.build()?)?,
        };
        Ok(g.with_origin(self.to_string()))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Elementary { p, r } => write!(f, "E({p},{r})"),
            GroupSpec::Affine { p, r, s } => write!(f, "Aff({p},{r},{s})"),
            GroupSpec::MatAffine { p, r, rows } => {
                let rows: Vec<String> = rows.iter().map(|row| join(row, ",")).collect();
                write!(f, "MatAff({p},{r},[{}])", rows.join(";"))
            }
            GroupSpec::Q8 => write!(f, "Q8"),
            GroupSpec::MillerMoreno { p, q, m, r } => write!(f, "MM({p},{q},{m},{r})"),
            GroupSpec::Perm { degree, gens: None } => write!(f, "Perm({degree})"),
            GroupSpec::Perm { degree, gens: Some(gens) } => {
                let perms: Vec<String> = gens
                    .iter()
                    .map(|cycles| {
                        if cycles.is_empty() {
                            "()".to_string()
                        } else {
                            cycles.iter().map(|c| format!("({})", join(c, " "))).collect()
                        }
                    })
                    .collect();
                write!(f, "Perm({degree}; {})", perms.join(", "))
            }
            GroupSpec::Product(a, b) => match **b {
                GroupSpec::Product(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
        }
    }
}

/// Parses and builds in one step.
pub fn parse_group_spec(text: &str) -> Result<FiniteGroup> {
    GroupSpec::parse(text)?.build()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| Error::Parse { pos: start, msg: "number too large".into() })
    }

    fn positive(&mut self, what: &str) -> Result<u64> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let v = self.number()?;
        if v == 0 {
            return Err(Error::Parse { pos: start, msg: format!("{what} must be at least 1") });
        }
        Ok(v)
    }

    fn small(&mut self, what: &str) -> Result<usize> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let v = self.positive(what)?;
        usize::try_from(v)
            .ok()
            .filter(|&v| v <= 1 << 20)
            .ok_or(Error::Parse { pos: start, msg: format!("{what} is too large") })
    }

    fn args(&mut self, count: usize) -> Result<Vec<u64>> {
        self.expect(b'(')?;
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            if i > 0 {
                self.expect(b',')?;
            }
            out.push(self.number()?);
        }
        self.expect(b')')?;
        Ok(out)
    }

    fn product(&mut self) -> Result<GroupSpec> {
        let mut left = self.factor()?;
        while self.peek() == Some(b'x') {
            self.pos += 1;
            let right = self.factor()?;
            left = GroupSpec::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<GroupSpec> {
        if self.eat(b'(') {
            let inner = self.product()?;
            self.expect(b')')?;
            return Ok(inner);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<GroupSpec> {
        self.skip_ws();
        let start = self.pos;
        let arg_err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        if self.keyword("MatAff") {
            self.expect(b'(')?;
            let p = self.number()?;
            self.expect(b',')?;
            let r = self.small("r")?;
            self.expect(b',')?;
            self.expect(b'[')?;
            let mut rows = vec![vec![self.number()?]];
            loop {
                if self.eat(b',') {
                    rows.last_mut().expect("nonempty").push(self.number()?);
                } else if self.eat(b';') {
                    rows.push(vec![self.number()?]);
                } else {
                    break;
                }
            }
            self.expect(b']')?;
            self.expect(b')')?;
            return Ok(GroupSpec::MatAffine { p, r, rows });
        }
        if self.keyword("Aff") {
            let a = self.args(3)?;
            if a[1] == 0 {
                return Err(arg_err(start, "r must be at least 1"));
            }
            return Ok(GroupSpec::Affine { p: a[0], r: a[1] as usize, s: a[2] });
        }
        if self.keyword("Perm") {
            self.expect(b'(')?;
            let degree = self.small("degree")?;
            if self.eat(b')') {
                return Ok(GroupSpec::Perm { degree, gens: None });
            }
            self.expect(b';')?;
            let mut gens = vec![self.perm()?];
            while self.eat(b',') {
                gens.push(self.perm()?);
            }
            self.expect(b')')?;
            return Ok(GroupSpec::Perm { degree, gens: Some(gens) });
        }
        if self.keyword("MM") {
            let a = self.args(4)?;
            let m = u32::try_from(a[2]).map_err(|_| arg_err(start, "m is too large"))?;
            return Ok(GroupSpec::MillerMoreno { p: a[0], q: a[1], m, r: a[3] });
        }
        if self.keyword("Q8") {
            return Ok(GroupSpec::Q8);
        }
        if self.keyword("C") {
            let n = self.small("n")?;
            return Ok(GroupSpec::Cyclic(n));
        }
        if self.keyword("E") {
            let a = self.args(2)?;
            if a[1] == 0 {
                return Err(arg_err(start, "r must be at least 1"));
            }
            return Ok(GroupSpec::Elementary { p: a[0], r: a[1] as usize });
        }
        Err(self.err("expected a group constructor"))
    }

    /// One permutation as a product of cycles; `()` is the identity.
    fn perm(&mut self) -> Result<Vec<Vec<usize>>> {
        let mut cycles = Vec::new();
        self.expect(b'(')?;
        loop {
            let mut cycle = Vec::new();
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                cycle.push(self.number()? as usize);
            }
            self.expect(b')')?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            if !self.eat(b'(') {
                break;
            }
        }
        Ok(cycles)
    }
}
