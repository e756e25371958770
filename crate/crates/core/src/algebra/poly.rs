use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use super::Rational;
use crate::error::{Error, ParseError, Result};

/// Sparse polynomial in the formal parameter λ with rational coefficients.
///
/// Only nonzero coefficients are stored, so the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LambdaPoly {
    terms: BTreeMap<u32, Rational>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly::default()
    }

    pub fn one() -> Self {
        LambdaPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LambdaPoly::monomial(c, 0)
    }

    /// `c · λ^k`
    pub fn monomial(c: Rational, k: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LambdaPoly { terms }
    }

    /// `λ^k`
    pub fn lambda_pow(k: u32) -> Self {
        LambdaPoly::monomial(Rational::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Rational::is_one)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn add_monomial(&mut self, c: &Rational, k: u32) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(Rational::zero);
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, c: &Rational) -> LambdaPoly {
        if c.is_zero() {
            return LambdaPoly::zero();
        }
        LambdaPoly {
            terms: self.terms.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }

    /// Multiply by `λ^k`.
    pub fn shift(&self, k: u32) -> LambdaPoly {
        LambdaPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Exact evaluation at `λ = x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut power = Rational::one();
        let mut at = 0u32;
        for (&k, c) in &self.terms {
            power = &power * &x.pow(k - at);
            at = k;
            acc = &acc + &(c * &power);
        }
        acc
    }
}

impl From<Rational> for LambdaPoly {
    fn from(c: Rational) -> Self {
        LambdaPoly::constant(c)
    }
}

impl AddAssign<&LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: &LambdaPoly) {
        for (&k, c) in &rhs.terms {
            self.add_monomial(c, k);
        }
    }
}

impl SubAssign<&LambdaPoly> for LambdaPoly {
    fn sub_assign(&mut self, rhs: &LambdaPoly) {
        for (&k, c) in &rhs.terms {
            self.add_monomial(&-c, k);
        }
    }
}

impl Add<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (&i, a) in &self.terms {
            for (&j, b) in &rhs.terms {
                out.add_monomial(&(a * b), i + j);
            }
        }
        out
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

macro_rules! by_value {
    ($tr:ident, $method:ident) => {
        impl $tr for LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: LambdaPoly) -> LambdaPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl fmt::Display for LambdaPoly {
    /// `1 + 2*L^3`: terms in increasing degree joined by ` + `; a unit
    /// coefficient in front of a power of `L` is omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let power = match k {
                0 => String::new(),
                1 => "L".to_string(),
                _ => format!("L^{k}"),
            };
            if k == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&power)?;
            } else if (-c).is_one() {
                write!(f, "-{power}")?;
            } else {
                write!(f, "{c}*{power}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaPoly({self})")
    }
}

struct PolyReader<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    at: usize,
}

impl PolyReader<'_> {
    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.src.len(), |&(p, _)| p)
    }

    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.at).is_some_and(|&(_, c)| c.is_whitespace()) {
            self.at += 1;
        }
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn err(&self, msg: &str) -> Error {
        ParseError::new(self.src, self.pos(), msg).into()
    }

    fn digits(&mut self) -> Option<String> {
        self.peek()?;
        let mut s = String::new();
        while let Some(&(_, c)) = self.chars.get(self.at) {
            if c.is_ascii_digit() {
                s.push(c);
                self.at += 1;
            } else {
                break;
            }
        }
        (!s.is_empty()).then_some(s)
    }

    /// `[coeff] ['*'] [L|λ ['^' k]]`, at least one part present.
    fn term(&mut self, negative: bool) -> Result<(Rational, u32)> {
        let mut coeff = None;
        if let Some(num) = self.digits() {
            let mut text = num;
            if self.peek() == Some('/') {
                self.at += 1;
                let den = self.digits().ok_or_else(|| self.err("expected a denominator"))?;
                text = format!("{text}/{den}");
            }
            coeff = Some(text.parse::<Rational>().map_err(|_| self.err("bad coefficient"))?);
            if self.peek() == Some('*') {
                self.at += 1;
                if !matches!(self.peek(), Some('L' | 'λ')) {
                    return Err(self.err("expected L after '*'"));
                }
            }
        }
        let mut exp = 0;
        if matches!(self.peek(), Some('L' | 'λ')) {
            self.at += 1;
            exp = 1;
            if self.peek() == Some('^') {
                self.at += 1;
                let k = self.digits().ok_or_else(|| self.err("expected an exponent"))?;
                exp = k.parse().map_err(|_| self.err("exponent out of range"))?;
            }
        } else if coeff.is_none() {
            return Err(self.err("expected a coefficient or L"));
        }
        let c = coeff.unwrap_or_else(Rational::one);
        Ok((if negative { -c } else { c }, exp))
    }
}

impl FromStr for LambdaPoly {
    type Err = Error;

    /// Accepts the printed form and the usual variations: `-` as a separator,
    /// a leading sign, `λ` for `L`, and optional `*`.
    fn from_str(s: &str) -> Result<Self> {
        let mut r = PolyReader {
            src: s,
            chars: s.char_indices().collect(),
            at: 0,
        };
        let mut out = LambdaPoly::zero();
        let mut first = true;
        loop {
            let mut negative = false;
            match r.peek() {
                None if first => return Err(r.err("empty polynomial")),
                None => break,
                Some('+') if !first => r.at += 1,
                Some('-') if !first => {
                    r.at += 1;
                    negative = true;
                }
                _ if !first => return Err(r.err("expected '+' or '-'")),
                _ => {}
            }
            while r.peek() == Some('-') {
                r.at += 1;
                negative = !negative;
            }
            let (c, k) = r.term(negative)?;
            out.add_monomial(&c, k);
            first = false;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LambdaPoly {
        s.parse().unwrap()
    }

    #[test]
    fn print_format() {
        assert_eq!(LambdaPoly::zero().to_string(), "0");
        assert_eq!(p("1 + 2*L^3").to_string(), "1 + 2*L^3");
        assert_eq!(p("L").to_string(), "L");
        assert_eq!(p("1 - L^2").to_string(), "1 + -L^2");
        assert_eq!(p("1/2*λ^4 + 3").to_string(), "3 + 1/2*L^4");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LambdaPoly>().is_err());
        assert!("1 +".parse::<LambdaPoly>().is_err());
        assert!("2*".parse::<LambdaPoly>().is_err());
        assert!("L^".parse::<LambdaPoly>().is_err());
        assert!("x".parse::<LambdaPoly>().is_err());
    }

    #[test]
    fn evaluation() {
        let q = p("1 + 2*L^3");
        assert_eq!(q.eval(&Rational::zero()), Rational::one());
        assert_eq!(q.eval(&Rational::one()), Rational::integer(3));
        assert_eq!(q.eval(&Rational::integer(2)), Rational::integer(17));
    }

    #[test]
    fn cancellation_prunes() {
        let q = p("L + L^2");
        let d = &q - &q;
        assert!(d.is_zero());
        assert_eq!(d.degree(), None);
        assert_eq!(q.degree(), Some(2));
    }

    #[test]
    fn shift_and_scale() {
        let q = p("1 + L");
        assert_eq!(q.shift(2), p("L^2 + L^3"));
        assert_eq!(q.scale(&Rational::integer(-3)), p("-3 - 3*L"));
        assert!(q.scale(&Rational::zero()).is_zero());
    }
}
