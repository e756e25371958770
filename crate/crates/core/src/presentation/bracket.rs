use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{Basis, LinearCombination};
use crate::error::{Error, ParseError, Result};
use crate::trees::parse::{parse_weight, Cursor};
use crate::trees::{Label, LabelMode};

/// A word in the free magma on weighted generators `x_l`.
///
/// Generator labels are pairwise distinct, and an expression is either fully
/// labeled or fully unlabeled.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketExpr {
    Gen { label: Option<Label>, weight: u64 },
    Product(Arc<BracketExpr>, Arc<BracketExpr>),
}

pub type BracketCombination = LinearCombination<BracketExpr>;

impl BracketExpr {
    pub fn generator(label: Option<Label>, weight: u64) -> Result<BracketExpr> {
        if weight == 0 {
            return Err(Error::ZeroWeight);
        }
        Ok(BracketExpr::Gen { label, weight })
    }

    /// `(a b)`
    pub fn product(a: BracketExpr, b: BracketExpr) -> Result<BracketExpr> {
        if a.mode() != b.mode() {
            return Err(Error::MixedLabels);
        }
        let left: BTreeSet<&Label> = a.labels().collect();
        if let Some(l) = b.labels().find(|l| left.contains(l)) {
            return Err(Error::DuplicateLabel(l.to_string()));
        }
        Ok(BracketExpr::Product(Arc::new(a), Arc::new(b)))
    }

    pub fn mode(&self) -> LabelMode {
        match self {
            BracketExpr::Gen { label: Some(_), .. } => LabelMode::Labeled,
            BracketExpr::Gen { label: None, .. } => LabelMode::Unlabeled,
            BracketExpr::Product(a, _) => a.mode(),
        }
    }

    /// Generators from left to right.
    pub fn generators(&self) -> Vec<(Option<&Label>, u64)> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<(Option<&'a Label>, u64)>) {
        match self {
            BracketExpr::Gen { label, weight } => out.push((label.as_ref(), *weight)),
            BracketExpr::Product(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> + '_ {
        self.generators().into_iter().filter_map(|(l, _)| l)
    }

    /// Sum of generator weights.
    pub fn weight(&self) -> u64 {
        self.generators().iter().map(|&(_, w)| w).sum()
    }
}

impl Basis for BracketExpr {
    const JSON_KEY: &'static str = "expr";

    fn label_mode(&self) -> LabelMode {
        self.mode()
    }

    fn normalized(self) -> Self {
        self
    }
}

impl fmt::Display for BracketExpr {
    /// `((x_1 z_1) y_1)`; an unlabeled generator of weight 2 prints as `__2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketExpr::Gen { label: Some(l), weight } => write!(f, "{l}_{weight}"),
            BracketExpr::Gen { label: None, weight } => write!(f, "__{weight}"),
            BracketExpr::Product(a, b) => write!(f, "({a} {b})"),
        }
    }
}

impl fmt::Debug for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn expr(cur: &mut Cursor<'_>) -> Result<BracketExpr> {
    cur.skip_ws();
    if cur.peek() == Some('(') {
        let start = cur.pos;
        cur.pos += 1;
        let a = expr(cur)?;
        let b = expr(cur)?;
        cur.expect(')')?;
        return BracketExpr::product(a, b)
            .map_err(|e| ParseError::new(cur.src, start, e.to_string()).into());
    }
    let start = cur.pos;
    let word = cur.word();
    if word.is_empty() {
        return Err(cur.error("expected a generator or '('").into());
    }
    let Some(split) = word.rfind('_') else {
        return Err(ParseError::new(cur.src, start, "a generator is written label_weight").into());
    };
    let (name, digits) = (&word[..split], &word[split + 1..]);
    let weight = parse_weight(cur, start + split + 1, digits)?;
    let label = match name {
        "_" => None,
        "" => return Err(ParseError::new(cur.src, start, "expected a label before '_'").into()),
        _ => Some(Label::new(name).map_err(|e| ParseError::new(cur.src, start, e.to_string()))?),
    };
    Ok(BracketExpr::Gen { label, weight })
}

impl FromStr for BracketExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<BracketExpr> {
        let mut cur = Cursor::new(s);
        let e = expr(&mut cur)?;
        if !cur.at_end() {
            return Err(cur.error("trailing input").into());
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["x_1", "((x_1 z_1) y_1)", "(x_2 (y_3 z_1))", "(__1 __2)", "(ab_c_10 d_1)"] {
            let e: BracketExpr = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
    }

    #[test]
    fn generator_split_at_last_underscore() {
        let e: BracketExpr = "ab_c_10".parse().unwrap();
        assert_eq!(e.generators(), vec![(Some(&Label::new("ab_c").unwrap()), 10)]);
        assert_eq!(e.weight(), 10);
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "x", "x_0", "x_", "(x_1", "(x_1 y_1) z_1", "(x_1 x_2)", "(x_1 __2)", "_1"] {
            assert!(s.parse::<BracketExpr>().is_err(), "{s}");
        }
        match "(x_1 y_0)".parse::<BracketExpr>() {
            Err(Error::Parse(p)) => assert_eq!(p.position, 7),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn product_checks() {
        let x = BracketExpr::generator(Some(Label::new("x").unwrap()), 1).unwrap();
        assert_eq!(
            BracketExpr::product(x.clone(), x.clone()),
            Err(Error::DuplicateLabel("x".into()))
        );
        assert_eq!(BracketExpr::generator(None, 0), Err(Error::ZeroWeight));
    }
}
