//! Text, JSON and CSV renderings of classes and words.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Coroot;
use crate::qclass::QClass;
use crate::rootsys::RootSystem;
use crate::scalar::Scalar;
use crate::weyl::{self, WeylElt};

/// 1-based reduced word.
pub fn word_of(rs: &RootSystem, w: &WeylElt) -> Vec<usize> {
    weyl::reduced_word(rs, w).into_iter().map(|i| i + 1).collect()
}

/// Parse a comma separated 1-based word; empty string is the identity.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim().parse::<usize>().ok().filter(|&i| i >= 1).ok_or_else(|| Error::InvalidInput(format!("bad letter '{t}' in word '{s}'")))
        })
        .collect()
}

/// Element given by a 1-based word, and whether the word was reduced.
pub fn elem_from_word(rs: &RootSystem, word: &[usize]) -> Result<(WeylElt, bool)> {
    if let Some(&i) = word.iter().find(|&&i| i == 0 || i > rs.rank()) {
        return Err(Error::InvalidInput(format!("letter {i} out of range 1..={}", rs.rank())));
    }
    let zero: Vec<usize> = word.iter().map(|i| i - 1).collect();
    let w = weyl::from_word(rs, &zero);
    Ok((w, w.length() == word.len()))
}

pub fn word_string(word: &[usize]) -> String {
    let v: Vec<String> = word.iter().map(|i| i.to_string()).collect();
    format!("s[{}]", v.join(","))
}

pub fn q_string(q: &Coroot) -> String {
    let mut parts = Vec::new();
    for (i, &a) in q.coeffs().iter().enumerate() {
        match a {
            0 => {}
            1 => parts.push(format!("q{}", i + 1)),
            _ => parts.push(format!("q{}^{a}", i + 1)),
        }
    }
    parts.join("*")
}

/// `q1^2*q2*s[1,2]`.
pub fn term_string(rs: &RootSystem, w: &WeylElt, q: &Coroot) -> String {
    let qs = q_string(q);
    let ws = if w.is_identity() { String::new() } else { word_string(&word_of(rs, w)) };
    match (qs.is_empty(), ws.is_empty()) {
        (true, true) => "1".into(),
        (true, false) => ws,
        (false, true) => qs,
        (false, false) => format!("{qs}*{ws}"),
    }
}

fn sorted_terms<T: Scalar>(rs: &RootSystem, c: &QClass<T>) -> Vec<(Vec<usize>, WeylElt, Coroot, T)> {
    let mut v: Vec<_> = c.iter().map(|(w, q, x)| (word_of(rs, w), *w, *q, x.clone())).collect();
    v.sort_by(|a, b| (a.0.len(), &a.0, a.2).cmp(&(b.0.len(), &b.0, b.2)));
    v
}

/// `q1*q2 + q1*s[1,2]`; terms ordered by length, word, then q-degree.
pub fn class_string<T: Scalar + std::fmt::Display>(rs: &RootSystem, c: &QClass<T>) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (_, w, q, x)) in sorted_terms(rs, c).into_iter().enumerate() {
        let neg = x < T::zero();
        let mag = if neg { T::zero() - x } else { x };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let t = term_string(rs, &w, &q);
        if mag.is_one() {
            out.push_str(&t);
        } else if t == "1" {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{mag}*{t}"));
        }
    }
    out
}

/// One JSON term: `{word, q, coeff}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub word: Vec<usize>,
    pub q: Vec<i32>,
    pub coeff: String,
}

pub fn class_json<T: Scalar + std::fmt::Display>(rs: &RootSystem, c: &QClass<T>) -> Vec<JsonTerm> {
    sorted_terms(rs, c)
        .into_iter()
        .map(|(word, _, q, x)| JsonTerm { word, q: q.coeffs().to_vec(), coeff: x.to_string() })
        .collect()
}

/// Rebuild an integer class from its JSON terms.
pub fn class_from_json(rs: &RootSystem, terms: &[JsonTerm]) -> Result<QClass<i64>> {
    let mut out = QClass::zero();
    for t in terms {
        let (w, _) = elem_from_word(rs, &t.word)?;
        if t.q.len() != rs.rank() {
            return Err(Error::InvalidInput("q-degree of wrong length".into()));
        }
        let c: i64 = t.coeff.parse().map_err(|_| Error::InvalidInput(format!("bad coefficient '{}'", t.coeff)))?;
        out.add_term(w, Coroot::from_slice(&t.q), c);
    }
    Ok(out)
}

/// CSV rows `word,q,coeff` with `;`-separated lists.
pub fn class_csv<T: Scalar + std::fmt::Display>(rs: &RootSystem, c: &QClass<T>) -> String {
    let mut out = String::from("word,q,coeff\n");
    for t in class_json(rs, c) {
        let w: Vec<String> = t.word.iter().map(|x| x.to_string()).collect();
        let q: Vec<String> = t.q.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("{},{},{}\n", w.join(";"), q.join(";"), t.coeff));
    }
    out
}
