//! Recursive-descent parser for the signature DSL.
//!
//! ```text
//! sig     := "S2(" [orders] ")" | "T2"
//!          | ("Sg" | "Ng") "(" keyvals ")" ["(" [orders] [";" [orders]] ")"]
//!          | "D2(" orders [";c=" INT] ")"
//!          | ("T" | "Q" | "P") "(" orders ")"
//!          | "D(" [orders] ";" [orders] ")" [";b=" INT]
//! keyvals := key "=" INT {"," key "=" INT}      key ∈ {g, h, c, b, m}
//! orders  := INT {"," INT}
//! ```
//!
//! Whitespace is ignored everywhere. `T`/`Q` take exactly three/four corner
//! orders. In the `Sg`/`Ng` form the optional trailing group lists cone orders,
//! then corner orders after a semicolon.

use crate::{OrbifoldError, OrbifoldSignature};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: expected ", self.offset)?;
        match self.expected.as_slice() {
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        match self.found {
            Some(c) => write!(f, ", found {c:?}"),
            None => write!(f, ", found end of input"),
        }
    }
}

pub fn parse_signature(text: &str) -> Result<OrbifoldSignature, OrbifoldError> {
    let mut p = Parser::new(text);
    let sig = p.signature()?;
    if p.peek().is_some() {
        return Err(p.error(&["end of input"]).into());
    }
    sig.validate()?;
    Ok(sig)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let toks = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Self { src, toks, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |t| t.0)
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        let matches = self.toks.len() >= self.pos + n
            && self.toks[self.pos..self.pos + n].iter().map(|t| t.1).eq(s.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<(), ParseError> {
        let start = self.pos;
        for c in s.chars() {
            if !self.eat(c) {
                let err = self.error(&[&format!("'{s}'")]);
                self.pos = start;
                return Err(err);
            }
        }
        Ok(())
    }

    fn int(&mut self) -> Result<u32, OrbifoldError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value * 10 + u64::from(d);
            if value > u64::from(u32::MAX) {
                self.pos = start;
                return Err(self.error(&["integer below 2^32"]).into());
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(&["integer"]).into());
        }
        Ok(value as u32)
    }

    fn order(&mut self) -> Result<u32, OrbifoldError> {
        let at = self.offset();
        let k = self.int()?;
        if k < 2 {
            return Err(OrbifoldError::Invalid(format!("order {k} at byte {at} must be >= 2")));
        }
        Ok(k)
    }

    fn orders(&mut self) -> Result<Vec<u32>, OrbifoldError> {
        let mut v = vec![self.order()?];
        while self.eat(',') {
            v.push(self.order()?);
        }
        Ok(v)
    }

    fn orders_opt(&mut self) -> Result<Vec<u32>, OrbifoldError> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.orders()
        } else {
            Ok(Vec::new())
        }
    }

    fn signature(&mut self) -> Result<OrbifoldSignature, OrbifoldError> {
        if self.eat_str("S2") {
            self.expect('(')?;
            let cones = self.orders_opt()?;
            self.expect(')')?;
            return Ok(OrbifoldSignature::sphere(&cones));
        }
        if self.eat_str("T2") {
            return Ok(OrbifoldSignature::torus());
        }
        if self.eat_str("Sg") {
            return self.general(true);
        }
        if self.eat_str("Ng") {
            return self.general(false);
        }
        if self.eat_str("D2") {
            self.expect('(')?;
            let cones = self.orders()?;
            let c = if self.eat(';') {
                self.expect_str("c=")?;
                self.int()?
            } else {
                1
            };
            self.expect(')')?;
            if c == 0 {
                return Err(OrbifoldError::Invalid("D2 needs c >= 1".into()));
            }
            return Ok(OrbifoldSignature::disc_with_boundary(&cones, c));
        }
        for (letter, count) in [('T', Some(3)), ('Q', Some(4)), ('P', None)] {
            if self.eat(letter) {
                self.expect('(')?;
                let at = self.offset();
                let corners = self.orders()?;
                self.expect(')')?;
                if let Some(n) = count {
                    if corners.len() != n {
                        return Err(OrbifoldError::Invalid(format!(
                            "{letter}(...) at byte {at} takes exactly {n} corner orders, got {}",
                            corners.len()
                        )));
                    }
                }
                return Ok(OrbifoldSignature::mirror_polygon(&corners));
            }
        }
        if self.eat('D') {
            self.expect('(')?;
            let cones = self.orders_opt()?;
            self.expect(';')?;
            let corners = self.orders_opt()?;
            self.expect(')')?;
            let b = if self.eat(';') {
                self.expect_str("b=")?;
                self.int()?
            } else {
                0
            };
            return Ok(OrbifoldSignature::mirror_disc(&cones, &corners, b));
        }
        Err(self.error(&["S2", "T2", "Sg", "Ng", "D2", "T", "Q", "P", "D"]).into())
    }

    fn general(&mut self, orientable: bool) -> Result<OrbifoldSignature, OrbifoldError> {
        self.expect('(')?;
        let mut vals: [Option<u32>; 5] = [None; 5];
        loop {
            let at = self.offset();
            let slot = match self.peek() {
                Some('g') => 0,
                Some('h') => 1,
                Some('c') => 2,
                Some('b') => 3,
                Some('m') => 4,
                _ => return Err(self.error(&["g", "h", "c", "b", "m"]).into()),
            };
            self.pos += 1;
            self.expect('=')?;
            let v = self.int()?;
            if vals[slot].replace(v).is_some() {
                return Err(OrbifoldError::Invalid(format!("duplicate key at byte {at}")));
            }
            if !self.eat(',') {
                break;
            }
        }
        self.expect(')')?;
        let (mut cones, mut corners) = (Vec::new(), Vec::new());
        if self.eat('(') {
            cones = self.orders_opt()?;
            if self.eat(';') {
                corners = self.orders_opt()?;
            }
            self.expect(')')?;
        }
        let [g, h, c, b, m] = vals.map(|v| v.unwrap_or(0));
        Ok(OrbifoldSignature {
            underlying_orientable: orientable,
            underlying_genus: g,
            underlying_boundary_circles: h,
            cones,
            corners,
            boundary_circles: c,
            mirror_intervals: b,
            full_mirror_circles: m,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_forms() {
        assert_eq!(parse_signature("S2(3,3,4)").unwrap(), OrbifoldSignature::sphere(&[3, 3, 4]));
        assert_eq!(parse_signature(" S2 ( 3 , 3 , 4 ) ").unwrap(), OrbifoldSignature::sphere(&[3, 3, 4]));
        assert_eq!(parse_signature("T2").unwrap(), OrbifoldSignature::torus());
        assert_eq!(parse_signature("Sg(g=2)").unwrap(), OrbifoldSignature::surface(2));
        assert_eq!(parse_signature("Ng(g=1)(3)").unwrap(), OrbifoldSignature::nonorientable(1, &[3]));
        assert_eq!(parse_signature("D2(3,3)").unwrap(), OrbifoldSignature::disc_with_boundary(&[3, 3], 1));
        assert_eq!(parse_signature("D2(3,3;c=2)").unwrap(), OrbifoldSignature::disc_with_boundary(&[3, 3], 2));
        assert_eq!(parse_signature("T(3,3,4)").unwrap(), OrbifoldSignature::mirror_polygon(&[3, 3, 4]));
        assert_eq!(parse_signature("Q(2,2,2,2)").unwrap(), OrbifoldSignature::mirror_polygon(&[2, 2, 2, 2]));
        assert_eq!(parse_signature("P(2,3,4,5,6)").unwrap(), OrbifoldSignature::mirror_polygon(&[2, 3, 4, 5, 6]));
        assert_eq!(parse_signature("D(3;4)").unwrap(), OrbifoldSignature::mirror_disc(&[3], &[4], 0));
        assert_eq!(parse_signature("D(3;4);b=2").unwrap(), OrbifoldSignature::mirror_disc(&[3], &[4], 2));
        assert_eq!(parse_signature("D(;)").unwrap(), OrbifoldSignature::mirror_disc(&[], &[], 0));
    }

    #[test]
    fn general_form() {
        let o = parse_signature("Sg(g=1,h=3,c=1,b=3,m=1)(2;3,4)").unwrap();
        assert_eq!(o.underlying_genus, 1);
        assert_eq!(o.mixed_circles(), 1);
        assert_eq!(o.corners, vec![3, 4]);
        assert_eq!(parse_signature("Sg(h=1,m=1)(;3,3,4)").unwrap(), OrbifoldSignature::mirror_polygon(&[3, 3, 4]));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let e = |s: &str| match parse_signature(s) {
            Err(OrbifoldError::Parse(p)) => p,
            other => panic!("{s:?}: expected parse error, got {other:?}"),
        };
        assert_eq!(e("X2").offset, 0);
        assert_eq!(e("S2(3,,4)").offset, 5);
        assert_eq!(e("S2(3,3").offset, 6);
        assert_eq!(e("S2(3) x").offset, 6);
        assert_eq!(e("S2 (3 ,").offset, 7);
        assert!(e("D(3;4);c=1").expected.contains(&"'b='".to_string()));
        assert!(e("Sg(q=1)").expected.contains(&"g".to_string()));
        assert!(e("").to_string().contains("end of input"));
    }

    #[test]
    fn semantic_errors() {
        for s in ["S2(1,3)", "T(3,3)", "Q(2,2,2)", "D2(3;c=0)", "Ng(g=0)", "Sg(g=1,g=2)", "Sg(h=1)"] {
            assert!(matches!(parse_signature(s), Err(OrbifoldError::Invalid(_))), "{s}");
        }
    }
}
