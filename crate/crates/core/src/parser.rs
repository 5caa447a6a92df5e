//! Recursive-descent parser for generator expressions.
//!
//! ```text
//! expr    := '-'? term (('+' | '-') term)*
//! term    := factor ('*' factor)*          tensor, left factor higher
//! factor  := atom ('.' atom)*              composition, left atom on top
//! atom    := coeff '*'? primary ('^' nat)? | coeff | primary ('^' nat)?
//! primary := 'id' '(' nat ')' | ident | '(' expr ')'
//! coeff   := nat ('/' nat)?
//! ```
//!
//! `1_X` and `1_1` abbreviate `id(1)` and `id(0)`, a bare `0` is the zero
//! morphism of whatever arity the context needs, and `x^k` is the k-fold
//! composite. A `*` written directly after an identifier and not followed
//! by something that can start a factor is read as the dagger, so `z*` is
//! the same as `z^*`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::GenExpr;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Id,
    LParen,
    RParen,
    Dot,
    Star,
    Plus,
    Minus,
    Slash,
    Caret,
    Eof,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let is_ident = |c: u8| c.is_ascii_alphanumeric() || c == b'_';
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if (src[i..].starts_with("1_X") || src[i..].starts_with("1_1")) && !bytes.get(i + 3).is_some_and(|&c| is_ident(c)) {
            out.push((Tok::Ident(src[i..i + 3].to_string()), start));
            i += 3;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((Tok::Num(n), start));
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && is_ident(bytes[i]) {
                i += 1;
            }
            let mut name = src[start..i].to_string();
            if src[i..].starts_with("^*") {
                name.push_str("^*");
                i += 2;
            } else if bytes.get(i) == Some(&b'*') {
                let mut k = i + 1;
                while k < bytes.len() && bytes[k].is_ascii_whitespace() {
                    k += 1;
                }
                let starts_factor = bytes.get(k).is_some_and(|&c| c.is_ascii_alphanumeric() || c == b'_' || c == b'(');
                if !starts_factor {
                    name.push_str("^*");
                    i += 1;
                }
            }
            if name == "id" {
                out.push((Tok::Id, start));
            } else {
                out.push((Tok::Ident(name), start));
            }
            continue;
        }
        let tok = match c {
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'.' => Tok::Dot,
            b'*' => Tok::Star,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            _ => {
                let ch = src[i..].chars().next().unwrap();
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::Eof, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn nat(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.err("expected a natural number"),
        }
    }

    fn small_nat(&mut self) -> Result<usize> {
        let n = self.nat()?;
        match usize::try_from(n) {
            Ok(v) if v <= 1 << 16 => Ok(v),
            _ => self.err("number too large"),
        }
    }

    fn expr(&mut self) -> Result<GenExpr> {
        let mut acc = if *self.peek() == Tok::Minus {
            self.bump();
            GenExpr::scale(-Scalar::one(), self.term()?)
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = GenExpr::sum(acc, self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = GenExpr::sum(acc, GenExpr::scale(-Scalar::one(), self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<GenExpr> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = GenExpr::tensor(acc, self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GenExpr> {
        let mut acc = self.atom()?;
        while *self.peek() == Tok::Dot {
            self.bump();
            acc = GenExpr::compose(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Tok::Id | Tok::Ident(_) | Tok::LParen)
    }

    fn atom(&mut self) -> Result<GenExpr> {
        if let Tok::Num(_) = self.peek() {
            let num = self.nat()?;
            let mut c = Scalar::from_integer(num);
            if *self.peek() == Tok::Slash {
                self.bump();
                let den = self.nat()?;
                if den.is_zero() {
                    return self.err("zero denominator");
                }
                c /= Scalar::from_integer(den);
            }
            let save = self.at;
            if *self.peek() == Tok::Star {
                self.bump();
                if !self.starts_primary() {
                    self.at = save;
                }
            }
            if !self.starts_primary() {
                return Ok(if c.is_zero() {
                    GenExpr::Zero
                } else {
                    GenExpr::scale(c, GenExpr::Id(0))
                });
            }
            let p = self.powered()?;
            return Ok(GenExpr::scale(c, p));
        }
        self.powered()
    }

    fn powered(&mut self) -> Result<GenExpr> {
        let p = self.primary()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let k = self.small_nat()?;
            if k == 0 {
                return self.err("exponent must be positive");
            }
            return Ok(GenExpr::compose_chain(vec![p; k]));
        }
        Ok(p)
    }

    fn primary(&mut self) -> Result<GenExpr> {
        if !self.starts_primary() {
            return self.err("expected a generator, id(k) or `(`");
        }
        match self.bump() {
            Tok::Id => {
                self.expect(Tok::LParen, "`(` after id")?;
                let k = self.small_nat()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(GenExpr::Id(k))
            }
            Tok::Ident(name) => Ok(match name.as_str() {
                "1_X" => GenExpr::Id(1),
                "1_1" => GenExpr::Id(0),
                _ => GenExpr::Gen(name),
            }),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => unreachable!("checked by starts_primary"),
        }
    }
}

pub fn parse(src: &str) -> Result<GenExpr> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn g(s: &str) -> GenExpr {
        GenExpr::gen(s)
    }

    #[test]
    fn precedence() {
        assert_eq!(parse("a . b * c").unwrap(), GenExpr::tensor(GenExpr::compose(g("a"), g("b")), g("c")));
        assert_eq!(parse("y . x").unwrap(), GenExpr::compose(g("y"), g("x")));
        assert_eq!(
            parse("x*id(1) . id(1)*x").unwrap(),
            GenExpr::tensor(
                GenExpr::tensor(g("x"), GenExpr::compose(GenExpr::Id(1), GenExpr::Id(1))),
                g("x")
            )
        );
        assert_eq!(
            parse("(x*id(1)) . (id(1)*x)").unwrap(),
            GenExpr::compose(GenExpr::tensor(g("x"), GenExpr::Id(1)), GenExpr::tensor(GenExpr::Id(1), g("x")))
        );
        assert_eq!(
            parse("a + b * c").unwrap(),
            GenExpr::sum(g("a"), GenExpr::tensor(g("b"), g("c")))
        );
    }

    #[test]
    fn daggers_and_aliases() {
        assert_eq!(parse("z*").unwrap(), g("z^*"));
        assert_eq!(parse("z* . x").unwrap(), GenExpr::compose(g("z^*"), g("x")));
        assert_eq!(parse("z * x").unwrap(), GenExpr::tensor(g("z"), g("x")));
        assert_eq!(parse("x1^*.x2").unwrap(), GenExpr::compose(g("x1^*"), g("x2")));
        assert_eq!(parse("z* * z").unwrap(), GenExpr::tensor(g("z^*"), g("z")));
        assert_eq!(parse("1_X").unwrap(), GenExpr::Id(1));
        assert_eq!(parse("1_1").unwrap(), GenExpr::Id(0));
        assert_eq!(parse("0").unwrap(), GenExpr::Zero);
    }

    #[test]
    fn coefficients_and_powers() {
        assert_eq!(parse("3/2 x").unwrap(), GenExpr::scale(Scalar::new(3.into(), 2.into()), g("x")));
        assert_eq!(parse("2*x").unwrap(), GenExpr::scale(int(2), g("x")));
        assert_eq!(parse("x^2").unwrap(), GenExpr::compose(g("x"), g("x")));
        assert_eq!(
            parse("-x + y").unwrap(),
            GenExpr::sum(GenExpr::scale(int(-1), g("x")), g("y"))
        );
    }

    #[test]
    fn errors_carry_positions() {
        match parse("x . ") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse("x^0").is_err());
        assert!(parse("(x").is_err());
        assert!(parse("x $ y").is_err());
        assert!(parse("1/0 x").is_err());
    }
}
