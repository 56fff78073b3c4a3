//! Finite formal sums `sum m(c) t^c` with exact rational exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_traits::Zero;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::rational::{self, Rational};

/// Canonical form: exponents sorted ascending, no zero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct JumpSpectrum {
    entries: BTreeMap<Rational, i64>,
}

impl JumpSpectrum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, i64)>) -> Self {
        let mut s = Self::new();
        for (c, m) in terms {
            s.add_term(c, m);
        }
        s
    }

    pub fn add_term(&mut self, c: Rational, m: i64) {
        if m == 0 {
            return;
        }
        let slot = self.entries.entry(c.clone()).or_insert(0);
        *slot += m;
        if *slot == 0 {
            self.entries.remove(&c);
        }
    }

    pub fn get(&self, c: &Rational) -> i64 {
        self.entries.get(c).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, i64)> {
        self.entries.iter().map(|(c, &m)| (c, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Rational> {
        self.entries.keys()
    }

    pub fn min_exponent(&self) -> Option<&Rational> {
        self.entries.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&Rational> {
        self.entries.keys().next_back()
    }

    /// Sum of all coefficients, i.e. the value at `t = 1`.
    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn filter(&self, mut keep: impl FnMut(&Rational) -> bool) -> Self {
        JumpSpectrum {
            entries: self
                .entries
                .iter()
                .filter(|(c, _)| keep(c))
                .map(|(c, &m)| (c.clone(), m))
                .collect(),
        }
    }

    /// Terms with `lo <= c <= hi`.
    pub fn between(&self, lo: &Rational, hi: &Rational) -> Self {
        self.filter(|c| lo <= c && c <= hi)
    }

    /// Substitutes `t -> t^r`, i.e. multiplies every exponent by `r`.
    pub fn scale_exponents(&self, r: &Rational) -> Self {
        assert!(!r.is_zero(), "scale factor must be nonzero");
        JumpSpectrum::from_terms(self.entries.iter().map(|(c, &m)| (c * r, m)))
    }

    /// `(c, m)` pairs with exponents rendered as reduced `p/q`.
    pub fn rendered_terms(&self) -> Vec<(String, i64)> {
        self.iter().map(|(c, m)| (rational::render(c), m)).collect()
    }

    /// One `m t^(c)` line per term.
    pub fn to_lines(&self) -> Vec<String> {
        self.iter()
            .map(|(c, m)| format!("{m} t^({})", rational::render(c)))
            .collect()
    }
}

impl Add for &JumpSpectrum {
    type Output = JumpSpectrum;
    fn add(self, rhs: &JumpSpectrum) -> JumpSpectrum {
        let mut out = self.clone();
        for (c, m) in rhs.iter() {
            out.add_term(c.clone(), m);
        }
        out
    }
}

impl Sub for &JumpSpectrum {
    type Output = JumpSpectrum;
    fn sub(self, rhs: &JumpSpectrum) -> JumpSpectrum {
        let mut out = self.clone();
        for (c, m) in rhs.iter() {
            out.add_term(c.clone(), -m);
        }
        out
    }
}

impl fmt::Display for JumpSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.iter().enumerate() {
            let sign = if m < 0 { "-" } else { "+" };
            if i == 0 {
                if m < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = m.abs();
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "t^({})", rational::render(c))?;
        }
        Ok(())
    }
}

struct Term<'a>(&'a Rational, i64);

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("c", &rational::render(self.0))?;
        st.serialize_field("m", &self.1)?;
        st.end()
    }
}

/// Serialized as `[{"c": "p/q", "m": int}, ...]` in ascending `c`.
impl Serialize for JumpSpectrum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (c, m) in self.iter() {
            seq.serialize_element(&Term(c, m))?;
        }
        seq.end()
    }
}
