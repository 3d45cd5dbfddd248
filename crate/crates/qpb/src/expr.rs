//! Expression parser for scalar Laurent polynomials in `q` and for
//! noncommutative polynomials over a presentation's generators.
//!
//! Grammar: sums of juxtaposed factors, `^` powers with signed integer
//! exponents, parentheses, rationals `a/b`, the deformation parameter `q`,
//! and generator names with a trailing `*` for the star.  A negative power
//! of a generator means the corresponding power of its star.

use crate::ncalg::{NCPoly, Presentation};
use crate::ncalg::scalar::LaurentScalar;
use crate::ncalg::word::Word;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            c if c.is_ascii_digit() => {
                let mut num = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        num.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(num.parse().expect("digits parse")));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                // A trailing `*` stars the generator.
                if chars.peek() == Some(&'*') {
                    chars.next();
                    name.push('*');
                }
                out.push(Tok::Ident(name));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Ast {
    Num(BigRational),
    Q,
    Gen(String),
    Neg(Box<Ast>),
    Sum(Vec<Ast>),
    Product(Vec<Ast>),
    Pow(Box<Ast>, i64),
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    /// Resolves identifiers when parsing over a presentation; `q` is
    /// always the scalar parameter unless shadowed by a generator.
    pres: Option<&'a Presentation>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn parse_expr(&mut self) -> Result<Ast> {
        let mut terms = Vec::new();
        let neg = matches!(self.peek(), Some(Tok::Minus));
        if neg {
            self.next();
        }
        let first = self.parse_term()?;
        terms.push(if neg { Ast::Neg(Box::new(first)) } else { first });
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    terms.push(self.parse_term()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    terms.push(Ast::Neg(Box::new(self.parse_term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Ast::Sum(terms)
        })
    }

    fn parse_term(&mut self) -> Result<Ast> {
        let mut factors = vec![self.parse_factor()?];
        while matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen)
        ) {
            factors.push(self.parse_factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Ast::Product(factors)
        })
    }

    fn parse_factor(&mut self) -> Result<Ast> {
        let base = self.parse_primary()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            let neg = matches!(self.peek(), Some(Tok::Minus));
            if neg {
                self.next();
            }
            let k = match self.next() {
                Some(Tok::Num(n)) => i64::try_from(&n)
                    .map_err(|_| Error::Parse("exponent out of range".into()))?,
                got => return Err(Error::Parse(format!("expected exponent, found {got:?}"))),
            };
            let k = if neg { -k } else { k };
            Ok(Ast::Pow(Box::new(base), k))
        } else {
            Ok(base)
        }
    }

    fn parse_primary(&mut self) -> Result<Ast> {
        match self.next() {
            Some(Tok::Num(n)) => {
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.next();
                    match self.next() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => {
                            Ok(Ast::Num(BigRational::new(n, d)))
                        }
                        got => Err(Error::Parse(format!(
                            "expected nonzero denominator, found {got:?}"
                        ))),
                    }
                } else {
                    Ok(Ast::Num(BigRational::from(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                let is_gen = self
                    .pres
                    .map(|p| p.resolve(&name).is_ok())
                    .unwrap_or(false);
                if is_gen {
                    Ok(Ast::Gen(name))
                } else if name == "q" {
                    Ok(Ast::Q)
                } else {
                    Err(Error::UnknownGenerator(name))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            got => Err(Error::Parse(format!("expected a value, found {got:?}"))),
        }
    }
}

fn parse_ast(s: &str, pres: Option<&Presentation>) -> Result<Ast> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        pres,
    };
    let ast = p.parse_expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            toks[p.pos]
        )));
    }
    Ok(ast)
}

fn scalar_pow(base: &LaurentScalar, k: i64) -> Result<LaurentScalar> {
    if k >= 0 {
        let mut acc = LaurentScalar::one();
        for _ in 0..k {
            acc = &acc * base;
        }
        return Ok(acc);
    }
    // Only monomials are invertible in the Laurent ring.
    match base.as_monomial() {
        Some((e, c)) if !c.is_zero() => {
            let inv = LaurentScalar::term(-e, c.recip());
            scalar_pow(&inv, -k)
        }
        _ => Err(Error::Parse("cannot invert a non-monomial scalar".into())),
    }
}

fn eval_scalar(ast: &Ast) -> Result<LaurentScalar> {
    match ast {
        Ast::Num(r) => Ok(LaurentScalar::term(0, r.clone())),
        Ast::Q => Ok(LaurentScalar::q_pow(1)),
        Ast::Gen(name) => Err(Error::Parse(format!(
            "generator `{name}` not allowed in a scalar"
        ))),
        Ast::Neg(x) => Ok(-&eval_scalar(x)?),
        Ast::Sum(xs) => {
            let mut acc = LaurentScalar::zero();
            for x in xs {
                acc += &eval_scalar(x)?;
            }
            Ok(acc)
        }
        Ast::Product(xs) => {
            let mut acc = LaurentScalar::one();
            for x in xs {
                acc = &acc * &eval_scalar(x)?;
            }
            Ok(acc)
        }
        Ast::Pow(base, k) => scalar_pow(&eval_scalar(base)?, *k),
    }
}

fn eval_poly(ast: &Ast, pres: &Presentation) -> Result<NCPoly> {
    match ast {
        Ast::Num(r) => Ok(NCPoly::scalar(LaurentScalar::term(0, r.clone()))),
        Ast::Q => Ok(NCPoly::scalar(LaurentScalar::q_pow(1))),
        Ast::Gen(name) => Ok(NCPoly::from_gen(pres.resolve(name)?)),
        Ast::Neg(x) => Ok(-&eval_poly(x, pres)?),
        Ast::Sum(xs) => {
            let mut acc = NCPoly::zero();
            for x in xs {
                acc += &eval_poly(x, pres)?;
            }
            Ok(acc)
        }
        Ast::Product(xs) => {
            let mut acc = NCPoly::one();
            for x in xs {
                acc = acc.raw_mul(&eval_poly(x, pres)?);
            }
            Ok(acc)
        }
        Ast::Pow(base, k) => {
            // A negative generator power is the power of the star.
            if *k < 0 {
                if let Ast::Gen(name) = base.as_ref() {
                    let g = pres.resolve(name)?;
                    let star = pres.star_gen(g);
                    return Ok(NCPoly::from_word(Word(vec![star; (-k) as usize])));
                }
                let s = eval_scalar(base)?;
                return Ok(NCPoly::scalar(scalar_pow(&s, *k)?));
            }
            let b = eval_poly(base, pres)?;
            let mut acc = NCPoly::one();
            for _ in 0..*k {
                acc = acc.raw_mul(&b);
            }
            Ok(acc)
        }
    }
}

/// Parse a Laurent-polynomial scalar such as `q^-2 - 1` or `3/2 q^4`.
pub fn parse_scalar(s: &str) -> Result<LaurentScalar> {
    eval_scalar(&parse_ast(s, None)?)
}

/// Parse a noncommutative polynomial over `pres`; the result is in the
/// free algebra (not normalised).
pub fn parse_poly(s: &str, pres: &Presentation) -> Result<NCPoly> {
    eval_poly(&parse_ast(s, Some(pres))?, pres)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::catalog;
    use crate::ncalg::word::Gen;

    #[test]
    fn scalar_grammar() {
        assert_eq!(
            parse_scalar("q^-2 - 1").unwrap(),
            LaurentScalar::q_pow(-2) - LaurentScalar::one()
        );
        assert_eq!(
            parse_scalar("3/2 q^4").unwrap(),
            LaurentScalar::term(4, num_rational::BigRational::new(3.into(), 2.into()))
        );
        assert_eq!(
            parse_scalar("-(1 + q^2)^2").unwrap(),
            parse_scalar("-1 - 2 q^2 - q^4").unwrap()
        );
        assert_eq!(parse_scalar("(2 q)^-1").unwrap(), parse_scalar("1/2 q^-1").unwrap());
        assert!(parse_scalar("(1 + q)^-1").is_err());
        assert!(parse_scalar("z0").is_err());
    }

    #[test]
    fn poly_grammar() {
        let s3 = catalog::bundled("s3").unwrap();
        let p = parse_poly("z0 z1* - q z1* z0", &s3).unwrap();
        assert_eq!(p.num_terms(), 2);
        // Negative powers are star powers.
        let v = parse_poly("z0^-2", &s3).unwrap();
        let z0s = Gen::starred(0);
        assert_eq!(v, NCPoly::from_word(Word(vec![z0s, z0s])));
        // Unknown names are rejected.
        assert!(parse_poly("x0", &s3).is_err());
        // q mixes in as a scalar.
        let w = parse_poly("q^2 z1 (z0 + 1)", &s3).unwrap();
        assert_eq!(w.num_terms(), 2);
    }
}
