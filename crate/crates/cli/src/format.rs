//! Plain-text algebra files.
//!
//! ```text
//! dim 3
//! # name: h3
//! 0 1 2 1      # μ(e_0, e_1) = e_2
//! ```
//!
//! A constant line `i j k v` sets the coefficient of `e_k` in `μ(e_i, e_j)`.
//! Indices are 0-based and `i < j`; `v` is written `p` or `p/q`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use derivscope::linalg::zero_vector;
use derivscope::{Algebra, Rational};
use num_traits::Zero;
use thiserror::Error;

const NAME_TAG: &str = "name:";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `dim <n>` header")]
    MissingHeader,
    #[error("expected `dim <n>`, found `{0}`")]
    BadHeader(String),
    #[error("expected `<i> <j> <k> <value>`, found {0} field(s)")]
    FieldCount(usize),
    #[error("`{0}` is not a basis index")]
    BadIndex(String),
    #[error("`{0}` is not a rational written p or p/q")]
    BadValue(String),
    #[error("pair ({i}, {j}) violates the i < j rule")]
    UnorderedPair { i: usize, j: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate constant for ({i}, {j}, {k}), first given on line {first}")]
    Duplicate { i: usize, j: usize, k: usize, first: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Rational from `p` or `p/q`; a zero denominator is rejected.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() || s.matches('/').count() > 1 {
        return None;
    }
    s.parse::<Rational>().ok()
}

/// Comma-separated rationals.
pub fn parse_rational_list(s: &str) -> Option<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

pub fn parse(text: &str) -> Result<Algebra, ParseError> {
    let mut dim = None;
    let mut name = None;
    let mut seen: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    let mut products: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |kind| ParseError { line, kind };
        let (content, comment) = match raw.split_once('#') {
            Some((c, rest)) => (c, Some(rest)),
            None => (raw, None),
        };
        let content = content.trim();
        if content.is_empty() {
            if let Some(tag) = comment.and_then(|c| c.trim().strip_prefix(NAME_TAG)) {
                name = Some(tag.trim().to_string());
            }
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let n = match dim {
            None => {
                let parsed = match fields.as_slice() {
                    ["dim", n] => n.parse::<usize>().ok(),
                    _ => None,
                };
                dim = Some(parsed.ok_or_else(|| err(ParseErrorKind::BadHeader(content.to_string())))?);
                continue;
            }
            Some(n) => n,
        };
        if fields.len() != 4 {
            return Err(err(ParseErrorKind::FieldCount(fields.len())));
        }
        let index = |s: &str| s.parse::<usize>().map_err(|_| err(ParseErrorKind::BadIndex(s.to_string())));
        let (i, j, k) = (index(fields[0])?, index(fields[1])?, index(fields[2])?);
        let value = parse_rational(fields[3]).ok_or_else(|| err(ParseErrorKind::BadValue(fields[3].to_string())))?;
        if let Some(&index) = [i, j, k].iter().find(|&&x| x >= n) {
            return Err(err(ParseErrorKind::IndexOutOfRange { index, dim: n }));
        }
        if i >= j {
            return Err(err(ParseErrorKind::UnorderedPair { i, j }));
        }
        if let Some(&first) = seen.get(&(i, j, k)) {
            return Err(err(ParseErrorKind::Duplicate { i, j, k, first }));
        }
        seen.insert((i, j, k), line);
        products.entry((i, j)).or_insert_with(|| zero_vector(n))[k] = value;
    }
    let dim = dim.ok_or(ParseError {
        line: text.lines().count().max(1),
        kind: ParseErrorKind::MissingHeader,
    })?;
    let algebra = Algebra::from_products(dim, products.into_iter().map(|((i, j), v)| (i, j, v)))
        .expect("indices were checked against the header");
    Ok(match name {
        Some(name) => algebra.with_name(name),
        None => algebra,
    })
}

pub fn serialize(a: &Algebra) -> String {
    let mut out = format!("dim {}\n", a.dim());
    if let Some(name) = a.name() {
        writeln!(out, "# {NAME_TAG} {name}").expect("writing to a String");
    }
    for (&(i, j), v) in a.constants() {
        for (k, x) in v.iter().enumerate() {
            if !x.is_zero() {
                writeln!(out, "{i} {j} {k} {x}").expect("writing to a String");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use derivscope::catalog::{family_as, heisenberg3, standard_filiform};
    use derivscope::linalg::{int, ratio};

    #[test]
    fn parses_h3_with_comments() {
        let a = parse("# Heisenberg\ndim 3\n\n0 1 2 1   # [x, y] = z\n").unwrap();
        assert_eq!(a, heisenberg3());
    }

    #[test]
    fn round_trips_catalog_algebras() {
        for a in [heisenberg3(), family_as(ratio(-2, 7)), standard_filiform(5).unwrap()] {
            let text = serialize(&a);
            let back = parse(&text).unwrap();
            assert_eq!(back, a);
            assert_eq!(back.name(), a.name());
            assert_eq!(serialize(&back), text);
        }
    }

    #[test]
    fn filiform_five_has_three_constant_lines() {
        let text = serialize(&standard_filiform(5).unwrap());
        let constants = text.lines().filter(|l| !l.starts_with('#') && !l.starts_with("dim")).count();
        assert_eq!(constants, 3);
    }

    #[test]
    fn rejects_malformed_input() {
        let kind = |text: &str| parse(text).unwrap_err().kind;
        assert_eq!(kind("dim 3\n0 0 1 1\n"), ParseErrorKind::UnorderedPair { i: 0, j: 0 });
        assert!(parse("dim 3\n0 0 1 1\n").unwrap_err().to_string().contains("i < j rule"));
        assert_eq!(kind("dim 3\n2 1 0 1\n"), ParseErrorKind::UnorderedPair { i: 2, j: 1 });
        assert_eq!(kind("dim 2\n0 1 2 1\n"), ParseErrorKind::IndexOutOfRange { index: 2, dim: 2 });
        assert_eq!(
            kind("dim 3\n0 1 2 1\n0 1 2 5\n"),
            ParseErrorKind::Duplicate { i: 0, j: 1, k: 2, first: 2 }
        );
        assert_eq!(kind("dim 3\n0 1 2 1/0\n"), ParseErrorKind::BadValue("1/0".into()));
        assert_eq!(kind("dim 3\n0 1 2 0.5\n"), ParseErrorKind::BadValue("0.5".into()));
        assert_eq!(kind("dim 3\n0 1 2\n"), ParseErrorKind::FieldCount(3));
        assert_eq!(kind("0 1 2 1\n"), ParseErrorKind::BadHeader("0 1 2 1".into()));
        assert_eq!(kind("# only a comment\n"), ParseErrorKind::MissingHeader);
    }

    #[test]
    fn error_lines_are_one_based() {
        assert_eq!(parse("dim 3\n\n0 0 1 1\n").unwrap_err().line, 3);
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("4"), Some(int(4)));
        assert_eq!(parse_rational("1/2/3"), None);
        assert_eq!(parse_rational_list("-2,-1,1/2"), Some(vec![int(-2), int(-1), ratio(1, 2)]));
        assert_eq!(parse_rational_list("2,,3"), None);
    }
}
