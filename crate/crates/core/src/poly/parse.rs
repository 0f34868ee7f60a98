//! Recursive-descent parser for the ASCII polynomial grammar.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{PolyError, Polynomial, Rational, Ring};

/// The accepted grammar, printed on usage errors.
pub const GRAMMAR: &str = "\
poly   := ['+'|'-'] term (('+'|'-') term)*
term   := factor ('*'? factor)*
factor := atom ('^' uint)?
atom   := int ('/' uint)? | var | '(' poly ')'";

const MAX_EXPONENT: u32 = 10_000;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Num(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                return Err(PolyError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{}`", text[start..].chars().next().unwrap_or('?')),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn poly(&mut self) -> Result<Polynomial, PolyError> {
        let mut negate = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Num(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        loop {
            if matches!(self.peek(), Tok::Star) {
                self.bump();
                acc = &acc * &self.factor()?;
            } else if self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if matches!(self.peek(), Tok::Caret) {
            self.bump();
            let e = self.uint("exponent")?;
            let e = u32::try_from(&e).ok().filter(|&e| e <= MAX_EXPONENT);
            match e {
                Some(e) => Ok(base.pow(e)),
                None => self.err(format!("exponent exceeds {MAX_EXPONENT}")),
            }
        } else {
            Ok(base)
        }
    }

    fn uint(&mut self, what: &str) -> Result<BigInt, PolyError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.err(format!("expected unsigned integer {what}")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(n) => {
                let mut den = BigInt::one();
                if matches!(self.peek(), Tok::Slash) {
                    self.bump();
                    den = self.uint("denominator")?;
                    if den.is_zero() {
                        return Err(PolyError::Syntax { pos, msg: "zero denominator".into() });
                    }
                }
                Ok(Polynomial::constant(self.ring, Rational::new(n, den)))
            }
            Tok::Ident(name) => match self.ring.index_of(&name) {
                Some(i) => Polynomial::var(self.ring, i),
                None => Err(PolyError::UnknownVariable { name, pos }),
            },
            Tok::LParen => {
                let inner = self.poly()?;
                if !matches!(self.peek(), Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(PolyError::Syntax { pos, msg: "unexpected end of input".into() }),
            t => Err(PolyError::Syntax { pos, msg: format!("unexpected token {t:?}") }),
        }
    }
}

/// Parses `text` in `ring`; see [`GRAMMAR`].
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, PolyError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, ring };
    let out = p.poly()?;
    if !matches!(p.peek(), Tok::End) {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Ring {
        Ring::parse("z1,z2").unwrap()
    }

    #[test]
    fn d5_curve_has_two_terms() {
        let f = parse_polynomial("z1^2*z2 + z2^4", &ring2()).unwrap();
        assert_eq!(f.num_terms(), 2);
    }

    #[test]
    fn zero_and_identities() {
        let r = Ring::parse("z1,z2,z3").unwrap();
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        let f = parse_polynomial("(z1+z2)^2 - z1^2 - 2*z1*z2", &ring2()).unwrap();
        assert_eq!(f, parse_polynomial("z2^2", &ring2()).unwrap());
        let g = parse_polynomial("1/3*z2^3 + 2z1 z2", &ring2()).unwrap();
        assert_eq!(g.to_string(), "2*z1*z2 + 1/3*z2^3");
        assert_eq!(parse_polynomial("-(z1 - 1)", &ring2()).unwrap().to_string(), "-z1 + 1");
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring2();
        assert_eq!(parse_polynomial("z1 + w", &r), Err(PolyError::UnknownVariable { name: "w".into(), pos: 5 }));
        assert!(matches!(parse_polynomial("z1 +", &r), Err(PolyError::Syntax { pos: 4, .. })));
        assert!(matches!(parse_polynomial("z1^", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_polynomial("(z1", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_polynomial("1/0", &r), Err(PolyError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_polynomial("z1 $ z2", &r), Err(PolyError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_polynomial("z1 )", &r), Err(PolyError::Syntax { pos: 3, .. })));
    }
}
