use std::str::FromStr;

use super::{Label, Node, WeightedTree};
use crate::error::{Error, ParseError, Result};

/// Recursive-descent reader for `label:weight[child,child,...]`.
pub(crate) struct Cursor<'a> {
    pub(crate) src: &'a str,
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.src, self.pos, message)
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub(crate) fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }
}

pub(crate) fn parse_weight(cur: &Cursor<'_>, start: usize, digits: &str) -> Result<u64, ParseError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(cur.src, start, "expected a positive decimal weight"));
    }
    match digits.parse::<u64>() {
        Ok(0) => Err(ParseError::new(cur.src, start, "weights must be positive")),
        Ok(w) => Ok(w),
        Err(_) => Err(ParseError::new(cur.src, start, "weight out of range")),
    }
}

fn tree(cur: &mut Cursor<'_>, out: &mut Vec<Node>) -> Result<(), ParseError> {
    cur.skip_ws();
    let start = cur.pos;
    let name = cur.word();
    let label = match name {
        "" => return Err(cur.error("expected a label")),
        "_" => None,
        _ => Some(Label::new(name).map_err(|e| ParseError::new(cur.src, start, e.to_string()))?),
    };
    cur.expect(':')?;
    cur.skip_ws();
    let wstart = cur.pos;
    let digits = cur.word();
    let weight = parse_weight(cur, wstart, digits)?;
    let slot = out.len();
    out.push(Node {
        weight,
        arity: 0,
        label,
    });
    cur.skip_ws();
    if cur.peek() == Some('[') {
        cur.pos += 1;
        let mut arity = 0;
        loop {
            tree(cur, out)?;
            arity += 1;
            cur.skip_ws();
            match cur.peek() {
                Some(',') => cur.pos += 1,
                Some(']') => {
                    cur.pos += 1;
                    break;
                }
                _ => return Err(cur.error("expected ',' or ']'")),
            }
        }
        out[slot].arity = arity;
    }
    Ok(())
}

impl FromStr for WeightedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<WeightedTree> {
        let mut cur = Cursor::new(s);
        let mut nodes = Vec::new();
        tree(&mut cur, &mut nodes)?;
        if !cur.at_end() {
            return Err(cur.error("trailing input").into());
        }
        super::validate(&nodes)?;
        Ok(WeightedTree::from_preorder(nodes))
    }
}
