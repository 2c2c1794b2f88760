//! ASCII polynomial grammar: `t^3+2*t+1`, with extension-field coefficients
//! written as coordinate vectors over the prime field, e.g. `[0,1]*t^2+[1,1]`.

use super::field::{FieldCtx, FieldElem};
use super::poly::Poly;
use crate::error::{Error, Result};

impl Poly {
    pub fn parse(s: &str, k: &FieldCtx) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let p = cur.poly(k)?;
        cur.expect_end()?;
        Ok(p)
    }

    pub fn to_string_in(&self, k: &FieldCtx) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let term = if i == 0 {
                k.format_elem(c)
            } else if c.is_one() {
                mono
            } else {
                format!("{}*{mono}", k.format_elem(c))
            };
            terms.push(term);
        }
        terms.join("+")
    }
}

/// Parses `[[a,b],[c,d]]` into its four entries in row-major order.
pub fn parse_matrix(s: &str, k: &FieldCtx) -> Result<[Poly; 4]> {
    let mut cur = Cursor::new(s);
    cur.eat('[')?;
    let mut entries = Vec::with_capacity(4);
    for row in 0..2 {
        if row > 0 {
            cur.eat(',')?;
        }
        cur.eat('[')?;
        entries.push(cur.poly(k)?);
        cur.eat(',')?;
        entries.push(cur.poly(k)?);
        cur.eat(']')?;
    }
    cur.eat(']')?;
    cur.expect_end()?;
    Ok(entries.try_into().expect("four entries"))
}

pub(crate) struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(s: &str) -> Self {
        Self {
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        let rest: String = self.chars[self.pos.min(self.chars.len())..]
            .iter()
            .collect();
        Error::Parse(format!(
            "{what} at position {} (remaining: {rest:?})",
            self.pos
        ))
    }

    pub(crate) fn eat(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    pub(crate) fn expect_end(&self) -> Result<()> {
        if self.pos == self.chars.len() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    fn int(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("integer out of range"))
    }

    fn coeff(&mut self, k: &FieldCtx) -> Result<FieldElem> {
        if self.peek() == Some('[') {
            self.pos += 1;
            let mut coords = vec![self.int()?];
            while self.peek() == Some(',') {
                self.pos += 1;
                coords.push(self.int()?);
            }
            self.eat(']')?;
            let coords: Vec<u32> = coords
                .into_iter()
                .map(|c| u32::try_from(c).map_err(|_| self.err("coordinate too large")))
                .collect::<Result<_>>()?;
            k.from_prime_coords(&coords)
        } else {
            let n = self.int()?;
            if n >= k.characteristic() as u64 {
                return Err(self.err(&format!(
                    "coefficient {n} not in 0..{}",
                    k.characteristic() - 1
                )));
            }
            Ok(k.from_int(n as i64))
        }
    }

    fn term(&mut self, k: &FieldCtx) -> Result<Poly> {
        let c = match self.peek() {
            Some('t') => FieldElem::ONE,
            Some(ch) if ch.is_ascii_digit() || ch == '[' => {
                let c = self.coeff(k)?;
                if self.peek() == Some('*') {
                    self.pos += 1;
                } else if self.peek() != Some('t') {
                    return Ok(Poly::constant(c));
                }
                c
            }
            _ => return Err(self.err("expected term")),
        };
        self.eat('t')?;
        let exp = if self.peek() == Some('^') {
            self.pos += 1;
            self.int()? as usize
        } else {
            1
        };
        Ok(Poly::monomial(c, exp))
    }

    pub(crate) fn poly(&mut self, k: &FieldCtx) -> Result<Poly> {
        let mut negate = false;
        if self.peek() == Some('-') {
            self.pos += 1;
            negate = true;
        }
        let mut acc = Poly::zero();
        loop {
            let term = self.term(k)?;
            acc = if negate {
                acc.sub(&term, k)
            } else {
                acc.add(&term, k)
            };
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(acc)
    }
}
