use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::{LambdaPoly, Rational};
use crate::error::{Error, Result};
use crate::trees::{LabelMode, WeightedTree};

/// Basis elements of a [`LinearCombination`].
pub trait Basis: Clone + Ord + fmt::Display {
    /// Field name used for the basis element in JSON output.
    const JSON_KEY: &'static str;

    fn label_mode(&self) -> LabelMode;

    /// Canonical representative; combination keys are always normalized.
    fn normalized(self) -> Self;
}

impl Basis for WeightedTree {
    const JSON_KEY: &'static str = "tree";

    fn label_mode(&self) -> LabelMode {
        self.mode()
    }

    fn normalized(self) -> Self {
        if self.is_canonical() {
            self
        } else {
            self.canonicalize()
        }
    }
}

/// Finite formal sum `Σ p_i · k_i` with [`LambdaPoly`] coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCombination<K: Basis> {
    terms: BTreeMap<K, LambdaPoly>,
}

pub type TreeCombination = LinearCombination<WeightedTree>;

impl<K: Basis> Default for LinearCombination<K> {
    fn default() -> Self {
        LinearCombination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Basis> LinearCombination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 · k`
    pub fn basis(k: K) -> Self {
        Self::term(k, LambdaPoly::one())
    }

    pub fn term(k: K, coeff: LambdaPoly) -> Self {
        let mut out = Self::zero();
        if !coeff.is_zero() {
            out.terms.insert(k.normalized(), coeff);
        }
        out
    }

    /// Labeling mode of the keys; `None` for the zero combination.
    pub fn mode(&self) -> Option<LabelMode> {
        self.terms.keys().next().map(Basis::label_mode)
    }

    fn check_mode(&self, other: LabelMode) -> Result<()> {
        match self.mode() {
            Some(m) if m != other => Err(Error::ModeMismatch),
            _ => Ok(()),
        }
    }

    pub fn add_term(&mut self, k: K, coeff: &LambdaPoly) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        self.check_mode(k.label_mode())?;
        let k = k.normalized();
        match self.terms.get_mut(&k) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, coeff.clone());
            }
        }
        Ok(())
    }

    /// `self += factor · other`
    pub fn add_scaled(&mut self, other: &Self, factor: &LambdaPoly) -> Result<()> {
        if let Some(m) = other.mode() {
            self.check_mode(m)?;
        }
        if factor.is_zero() {
            return Ok(());
        }
        for (k, c) in &other.terms {
            let c = if factor.is_one() { c.clone() } else { c * factor };
            self.add_term(k.clone(), &c)?;
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &LambdaPoly::one())?;
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &LambdaPoly::constant(Rational::integer(-1)))?;
        Ok(out)
    }

    pub fn scale(&self, p: &LambdaPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        LinearCombination {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * p))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LinearCombination {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    /// Evaluate every coefficient at `λ = x`, pruning terms that vanish.
    pub fn specialize(&self, x: &Rational) -> Self {
        LinearCombination {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), LambdaPoly::constant(c.eval(x))))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &LambdaPoly)> + '_ {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn coefficient(&self, k: &K) -> LambdaPoly {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    /// Terms sorted by printed key, then by λ-degree.
    pub fn sorted_terms(&self) -> Vec<(String, &K, &LambdaPoly)> {
        let mut v: Vec<(String, &K, &LambdaPoly)> =
            self.terms.iter().map(|(k, c)| (k.to_string(), k, c)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.2.degree().cmp(&b.2.degree())));
        v
    }

    /// `{"terms": [{"coeff": [[exp, num, den], ...], "<key>": "..."}]}`
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(text, _, c)| {
                let coeff: Vec<Value> = c
                    .terms()
                    .map(|(e, r)| match r.to_i64_pair() {
                        Some((n, d)) => json!([e, n, d]),
                        None => json!([e, r.numer().to_string(), r.denom().to_string()]),
                    })
                    .collect();
                let mut obj = serde_json::Map::new();
                obj.insert("coeff".into(), Value::Array(coeff));
                obj.insert(K::JSON_KEY.into(), Value::String(text));
                Value::Object(obj)
            })
            .collect();
        json!({ "terms": terms })
    }
}

/// Formats a coefficient so that it can prefix ` * key` unambiguously.
pub(crate) fn coefficient_text(c: &LambdaPoly) -> String {
    if c.terms().count() > 1 {
        format!("({c})")
    } else {
        c.to_string()
    }
}

impl<K: Basis> fmt::Display for LinearCombination<K> {
    /// One term per line, `coeff * key`; the zero combination prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (text, _, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{} * {text}", coefficient_text(c))?;
        }
        Ok(())
    }
}

impl<K: Basis> fmt::Debug for LinearCombination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(text, _, c)| format!("{} * {text}", coefficient_text(c)))
            .collect();
        write!(f, "[{}]", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> WeightedTree {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LambdaPoly {
        s.parse().unwrap()
    }

    #[test]
    fn vector_space_basics() {
        let x = TreeCombination::basis(t("a:1[b:2]"));
        assert_eq!(x.try_add(&TreeCombination::zero()).unwrap(), x);
        assert!(x.try_sub(&x).unwrap().is_zero());

        let mut y = TreeCombination::term(t("a:1[b:2]"), p("L"));
        y.add_term(t("a:1[b:2]"), &p("L^2")).unwrap();
        assert_eq!(y.len(), 1);
        assert_eq!(y.coefficient(&t("a:1[b:2]")), p("L + L^2"));
    }

    #[test]
    fn mixed_modes_are_rejected() {
        let x = TreeCombination::basis(t("a:1"));
        let y = TreeCombination::basis(t("_:1"));
        assert_eq!(x.try_add(&y), Err(Error::ModeMismatch));
        assert_eq!(x.try_add(&TreeCombination::zero()).unwrap(), x);
    }

    #[test]
    fn keys_are_canonical() {
        let mut c = TreeCombination::zero();
        c.add_term(t("a:1[c:1,b:1]"), &p("1")).unwrap();
        c.add_term(t("a:1[b:1,c:1]"), &p("1")).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.keys().all(|k| k.is_canonical()));
        assert_eq!(c.coefficient(&t("a:1[b:1,c:1]")), p("2"));
    }

    #[test]
    fn specialization() {
        let mut c = TreeCombination::term(t("a:1"), p("L"));
        c.add_term(t("b:1"), &p("1")).unwrap();
        assert_eq!(c.specialize(&Rational::zero()), TreeCombination::basis(t("b:1")));
        let d = TreeCombination::term(t("a:1"), p("1 - L"));
        assert!(d.specialize(&Rational::one()).is_zero());
    }

    #[test]
    fn display_and_json() {
        let mut c = TreeCombination::term(t("r:1[s:2]"), p("1"));
        c.add_term(t("r:1[t:1]"), &p("1 + L")).unwrap();
        assert_eq!(c.to_string(), "1 * r:1[s:2]\n(1 + L) * r:1[t:1]");
        assert_eq!(
            c.to_json(),
            json!({"terms": [
                {"coeff": [[0, 1, 1]], "tree": "r:1[s:2]"},
                {"coeff": [[0, 1, 1], [1, 1, 1]], "tree": "r:1[t:1]"}
            ]})
        );
        assert_eq!(TreeCombination::zero().to_string(), "0");
    }
}
