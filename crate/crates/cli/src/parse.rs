//! Parser for the command-line polynomial grammar: integer and rational
//! literals, `x`, `+ - * ^`, parentheses, and the macro `binom(x+s, d)`.
//! Whitespace-insensitive.

use ehrmagic_core::poly::{binomial_poly, Polynomial, Rat};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    X,
    Binom,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Comma,
}

fn lex(src: &str) -> Result<Vec<Token>, String> {
    let mut tokens = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            ',' => {
                tokens.push(Token::Comma);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let n = text
                    .parse::<BigInt>()
                    .map_err(|_| format!("bad integer literal `{text}`"))?;
                tokens.push(Token::Int(n));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                match &src[start..i] {
                    "x" => tokens.push(Token::X),
                    "binom" => tokens.push(Token::Binom),
                    other => return Err(format!("unknown name `{other}`")),
                }
            }
            other => return Err(format!("unexpected character `{other}`")),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), String> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            other => Err(format!("expected {want:?}, found {other:?}")),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, String> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, String> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, String> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let e = self.uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| "exponent too large".to_string())?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<u64, String> {
        match self.next() {
            Some(Token::Int(n)) => u64::try_from(n).map_err(|_| "integer too large".to_string()),
            other => Err(format!("expected a non-negative integer, found {other:?}")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, String> {
        match self.next() {
            Some(Token::Int(n)) => {
                // rational literal p/q (the grammar has no division operator)
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            Ok(Polynomial::constant(Rat::new(n, d)))
                        }
                        Some(Token::Int(_)) => Err("zero denominator".to_string()),
                        other => Err(format!("expected a denominator, found {other:?}")),
                    }
                } else {
                    Ok(Polynomial::constant(Rat::from_integer(n)))
                }
            }
            Some(Token::X) => Ok(Polynomial::x()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some(Token::Binom) => {
                self.expect(Token::LParen)?;
                self.expect(Token::X)?;
                let shift: i64 = match self.peek() {
                    Some(Token::Plus) => {
                        self.pos += 1;
                        i64::try_from(self.uint()?).map_err(|_| "shift too large".to_string())?
                    }
                    Some(Token::Minus) => {
                        self.pos += 1;
                        -i64::try_from(self.uint()?).map_err(|_| "shift too large".to_string())?
                    }
                    _ => 0,
                };
                self.expect(Token::Comma)?;
                let d = self.uint()?;
                self.expect(Token::RParen)?;
                let d: usize = d.try_into().map_err(|_| "degree too large".to_string())?;
                if d > 64 {
                    return Err("binom degree above 64 is not supported".to_string());
                }
                Ok(binomial_poly(shift, d))
            }
            other => Err(format!("expected a value, found {other:?}")),
        }
    }
}

/// Parse a polynomial expression.
pub fn parse_poly(src: &str) -> Result<Polynomial, String> {
    let tokens = lex(src)?;
    if tokens.is_empty() {
        return Err("empty polynomial expression".to_string());
    }
    let mut p = Parser { tokens, pos: 0 };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(format!("trailing input after position {}", p.pos));
    }
    Ok(poly)
}

/// Parse a rational like `2` or `-3/4`.
pub fn parse_rat(src: &str) -> Result<Rat, String> {
    let s = src.trim();
    let (neg, s) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = num
        .parse::<BigInt>()
        .map_err(|_| format!("bad numerator in `{src}`"))?;
    let d = den
        .parse::<BigInt>()
        .map_err(|_| format!("bad denominator in `{src}`"))?;
    if d.is_zero() {
        return Err("zero denominator".to_string());
    }
    let r = Rat::new(n, d);
    Ok(if neg { -r } else { r })
}

/// Parse an inclusive range `a..b` (or a single value `a`).
pub fn parse_range(src: &str) -> Result<(u64, u64), String> {
    let s = src.trim();
    if let Some((a, b)) = s.split_once("..") {
        let lo = a
            .trim()
            .parse::<u64>()
            .map_err(|_| format!("bad range start in `{src}`"))?;
        let hi = b
            .trim()
            .parse::<u64>()
            .map_err(|_| format!("bad range end in `{src}`"))?;
        if lo > hi {
            return Err(format!("empty range `{src}`"));
        }
        Ok((lo, hi))
    } else {
        let v = s
            .parse::<u64>()
            .map_err(|_| format!("bad range `{src}`"))?;
        Ok((v, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ehrmagic_core::poly::rat;

    #[test]
    fn parses_basic_expressions() {
        assert_eq!(parse_poly("x^2+3*x+2").unwrap(), Polynomial::from_ints(&[2, 3, 1]));
        assert_eq!(parse_poly(" ( x + 1 ) ^ 3 ").unwrap(), Polynomial::from_ints(&[1, 1]).pow(3));
        assert_eq!(parse_poly("1").unwrap(), Polynomial::one());
        assert_eq!(
            parse_poly("x^2 + x + 5/4").unwrap(),
            Polynomial::from_coeffs(vec![rat(5, 4), rat(1, 1), rat(1, 1)])
        );
        assert_eq!(parse_poly("-x + 1").unwrap(), Polynomial::from_ints(&[1, -1]));
    }

    #[test]
    fn parses_binom_macro() {
        assert_eq!(parse_poly("binom(x+2,2)").unwrap(), binomial_poly(2, 2));
        assert_eq!(parse_poly("binom(x,3)").unwrap(), binomial_poly(0, 3));
        assert_eq!(parse_poly("binom(x-1,2)").unwrap(), binomial_poly(-1, 2));
        assert_eq!(
            parse_poly("binom(x+2,2)+2*binom(x+1,2)").unwrap(),
            binomial_poly(2, 2).add(&binomial_poly(1, 2).scale(&rat(2, 1)))
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("y + 1").is_err());
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("binom(x+2)").is_err());
        assert!(parse_poly("x 1").is_err());
    }

    #[test]
    fn parses_rationals_and_ranges() {
        assert_eq!(parse_rat("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7, 1));
        assert!(parse_rat("1/0").is_err());
        assert_eq!(parse_range("1..16").unwrap(), (1, 16));
        assert_eq!(parse_range("5").unwrap(), (5, 5));
        assert!(parse_range("9..2").is_err());
    }
}
