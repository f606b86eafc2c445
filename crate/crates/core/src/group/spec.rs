//! Parser for the textual group-spec grammar:
//!
//! ```text
//! spec    := factor ('*' factor)*
//! factor  := 'cyclic:' N | 'elab:' P '^' K | 'abelian:' N ('x' N)*
//!          | 'dihedral:' N | 'mod:' P | 'heis:' P | 'perm:' perms
//! perms   := gen (',' gen)*        gen := cycle+
//! cycle   := '(' N (',' N)* ')'
//! ```
//!
//! Whitespace is ignored everywhere. Positions in errors refer to the input
//! with whitespace removed.

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Parses a group spec such as `cyclic:4 * elab:2^2` or `perm:(0,1,2,3),(1,3)`.
pub fn parse_group_spec(input: &str, cap: usize) -> Result<FiniteGroup> {
    let text: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { s: &text, pos: 0, cap };
    let mut g = p.factor()?;
    let mut label = g.label().to_string();
    while p.eat('*') {
        let h = p.factor()?;
        label = format!("{label} * {}", h.label());
        g = FiniteGroup::direct_product(&g, &h, cap)?;
    }
    if p.pos != text.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(g.with_label(label))
}

/// Parses `(0,1,2)(3,4),(0,1)` into one permutation image list per generator.
pub fn parse_permutation_list(input: &str) -> Result<Vec<Vec<usize>>> {
    let text: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { s: &text, pos: 0, cap: usize::MAX };
    let gens = p.perms()?;
    if p.pos != text.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(gens)
}

struct Parser<'a> {
    s: &'a [char],
    pos: usize,
    cap: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits: String = self.s[start..self.pos].iter().collect();
        digits.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "number out of range".into(),
        })
    }

    fn keyword(&mut self) -> Result<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_lowercase()) {
            self.pos += 1;
        }
        let word: String = self.s[start..self.pos].iter().collect();
        if !self.eat(':') {
            self.pos = start;
            return Err(self.err("expected a constructor name followed by ':'"));
        }
        Ok(word)
    }

    fn factor(&mut self) -> Result<FiniteGroup> {
        let start = self.pos;
        let kw = self.keyword()?;
        let cap = self.cap;
        let at = self.pos;
        let wrap = |e: Error| match e {
            Error::InvalidParameter(msg) => Error::InvalidParameter(format!("{msg} (at position {at})")),
            other => other,
        };
        match kw.as_str() {
            "cyclic" => {
                let n = self.number()?;
                FiniteGroup::cyclic(n, cap).map_err(wrap)
            }
            "elab" => {
                let p = self.number()?;
                self.expect('^')?;
                let k = self.number()?;
                FiniteGroup::elementary_abelian(p, k, cap).map_err(wrap)
            }
            "abelian" => {
                let mut factors = vec![self.number()?];
                while self.eat('x') {
                    factors.push(self.number()?);
                }
                FiniteGroup::abelian(&factors, cap).map_err(wrap)
            }
            "dihedral" => {
                let n = self.number()?;
                FiniteGroup::dihedral(n, cap).map_err(wrap)
            }
            "mod" => {
                let p = self.number()?;
                FiniteGroup::modular(p, cap).map_err(wrap)
            }
            "heis" => {
                let p = self.number()?;
                FiniteGroup::heisenberg(p, cap).map_err(wrap)
            }
            "perm" => {
                let gens = self.perms()?;
                FiniteGroup::from_permutations(&gens, cap).map_err(wrap)
            }
            _ => {
                self.pos = start;
                Err(self.err(&format!("unknown constructor '{kw}'")))
            }
        }
    }

    fn perms(&mut self) -> Result<Vec<Vec<usize>>> {
        let mut gens = Vec::new();
        if self.peek() != Some('(') {
            // empty generator list: trivial group
            return Ok(gens);
        }
        loop {
            gens.push(self.generator()?);
            if !self.eat(',') {
                break;
            }
        }
        Ok(gens)
    }

    fn generator(&mut self) -> Result<Vec<usize>> {
        let mut perm: Vec<usize> = Vec::new();
        if self.peek() != Some('(') {
            return Err(self.err("expected '('"));
        }
        while self.peek() == Some('(') {
            let start = self.pos;
            self.pos += 1;
            let mut cycle = vec![self.number()?];
            while self.eat(',') {
                cycle.push(self.number()?);
            }
            self.expect(')')?;
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != cycle.len() {
                return Err(Error::Parse {
                    pos: start,
                    msg: "repeated point in cycle".into(),
                });
            }
            let top = cycle.iter().max().copied().unwrap_or(0);
            if perm.len() <= top {
                perm.extend(perm.len()..=top);
            }
            // compose: the new cycle acts after the ones already read
            let mut c = (0..perm.len()).collect::<Vec<_>>();
            for (i, &x) in cycle.iter().enumerate() {
                c[x] = cycle[(i + 1) % cycle.len()];
            }
            perm = perm.iter().map(|&x| c[x]).collect();
        }
        Ok(perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_isomorphic, DEFAULT_ORDER_CAP as CAP};

    fn g(s: &str) -> FiniteGroup {
        parse_group_spec(s, CAP).unwrap()
    }

    #[test]
    fn constructors() {
        assert_eq!(g("cyclic:1").order(), 1);
        assert_eq!(g("elab:3^3").order(), 27);
        assert_eq!(g("abelian:4x2").order(), 8);
        assert_eq!(g("dihedral:8").order(), 8);
        assert_eq!(g("mod:3").exponent(), 9);
        assert_eq!(g("heis:3").exponent(), 3);
        assert_eq!(g(" cyclic : 2 * cyclic:3 ").order(), 6);
        assert!(g("cyclic:2*cyclic:3").is_cyclic());
    }

    #[test]
    fn permutations() {
        assert_eq!(g("perm:").order(), 1);
        assert!(g("perm:(0,1,2,3)").is_cyclic());
        let d8 = g("perm:(0,1,2,3),(1,3)");
        assert!(is_isomorphic(&d8, &g("dihedral:8")));
        let q8 = g("perm:(0,1,3,6)(2,5,7,4),(0,2,3,7)(1,4,6,5)");
        assert!(is_isomorphic(&q8, &FiniteGroup::quaternion()));
        assert_eq!(
            parse_permutation_list("(0,1)(2,3),(1,2)").unwrap(),
            vec![vec![1, 0, 3, 2], vec![0, 2, 1]]
        );
    }

    #[test]
    fn errors_report_position() {
        assert!(matches!(
            parse_group_spec("cyclic:", CAP),
            Err(Error::Parse { pos: 7, .. })
        ));
        assert!(matches!(
            parse_group_spec("foo:3", CAP),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_group_spec("cyclic:3 cyclic:3", CAP),
            Err(Error::Parse { pos: 8, .. })
        ));
        assert!(matches!(
            parse_group_spec("Cyclic:3", CAP),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_group_spec("perm:(0,0)", CAP),
            Err(Error::Parse { pos: 5, .. })
        ));
        assert!(matches!(
            parse_group_spec("dihedral:7", CAP),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            parse_group_spec("cyclic:300", CAP),
            Err(Error::OrderCap { .. })
        ));
        assert!(matches!(
            parse_group_spec("elab:4^2", CAP),
            Err(Error::InvalidParameter(_))
        ));
    }
}
