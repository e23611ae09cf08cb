//! Plain-text serialization of `U(g) ⊗ C(p)` and `S(g) ⊗ Λ(p)` elements.
//!
//! ```text
//! so41-element v1
//! algebra uc
//! sign -1
//! scale 1/4
//! basis sha256:<hex>
//! terms 2
//! 1 | 0 0 0 0 0 0 1 0 0 0 | 0010
//! -1/2 | 1 0 0 0 0 0 0 0 0 0 | 0000
//! ```
//!
//! Each term line is `coeff | ten exponents in H1..F4 order | mask`, with the
//! mask bits in `E3 E4 F3 F4` order. Terms are written in the element's own
//! (graded) order, so serialization is canonical.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};
use so41_core::scalar::{fmt_q, parse_q};
use so41_core::{
    BasisIndex, CliffordMonomial, Convention, ExtMonomial, PbwMonomial, SEElement, SMonomial, UCElement, Q,
};
use thiserror::Error;

pub const MAGIC: &str = "so41-element v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraId {
    UC,
    SE,
}

impl AlgebraId {
    pub fn tag(self) -> &'static str {
        match self {
            AlgebraId::UC => "uc",
            AlgebraId::SE => "se",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    UC(UCElement),
    SE(SEElement),
}

impl Element {
    pub fn algebra(&self) -> AlgebraId {
        match self {
            Element::UC(_) => AlgebraId::UC,
            Element::SE(_) => AlgebraId::SE,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementFile {
    pub convention: Convention,
    pub element: Element,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("basis order hash mismatch: file has {found}, this build uses {expected}")]
    BasisHash { found: String, expected: String },
}

/// Hash of the generator order and the Clifford bit order.
pub fn basis_hash() -> String {
    let names: Vec<&str> = BasisIndex::ALL.iter().map(|b| b.name()).collect();
    let p: Vec<&str> = BasisIndex::P.iter().map(|b| b.name()).collect();
    let text = format!("{};{}", names.join(","), p.join(","));
    format!("sha256:{}", hex::encode(Sha256::digest(text.as_bytes())))
}

fn exps_text(e: &[u8; 10]) -> String {
    e.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn mask_bits(m: u8) -> String {
    (0..4).map(|i| if m & (1 << i) != 0 { '1' } else { '0' }).collect()
}

impl ElementFile {
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let lines: Vec<(Q, [u8; 10], u8)> = match &self.element {
            Element::UC(x) => x.iter().map(|((u, c), k)| (k.clone(), u.0, c.0)).collect(),
            Element::SE(x) => x.iter().map(|((s, e), k)| (k.clone(), s.0, e.0)).collect(),
        };
        let sign = if self.convention.sign > 0 { "+1" } else { "-1" };
        writeln!(out, "{MAGIC}").unwrap();
        writeln!(out, "algebra {}", self.element.algebra().tag()).unwrap();
        writeln!(out, "sign {sign}").unwrap();
        writeln!(out, "scale {}", fmt_q(&self.convention.scale)).unwrap();
        writeln!(out, "basis {}", basis_hash()).unwrap();
        writeln!(out, "terms {}", lines.len()).unwrap();
        for (c, e, m) in lines {
            writeln!(out, "{} | {} | {}", fmt_q(&c), exps_text(&e), mask_bits(m)).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let mut next = |what: &str| {
            lines.next().ok_or(FormatError::Malformed {
                line: 0,
                msg: format!("missing {what}"),
            })
        };
        let bad = |line: usize, msg: String| FormatError::Malformed { line, msg };
        let header = |(n, l): (usize, &str), key: &str| -> Result<String, FormatError> {
            l.strip_prefix(key)
                .and_then(|r| r.strip_prefix(' '))
                .map(str::to_string)
                .ok_or_else(|| bad(n, format!("expected `{key} ...`")))
        };
        let (n, magic) = next("header")?;
        if magic != MAGIC {
            return Err(bad(n, format!("expected `{MAGIC}`")));
        }
        let alg_line = next("algebra")?;
        let algebra = match header(alg_line, "algebra")?.as_str() {
            "uc" => AlgebraId::UC,
            "se" => AlgebraId::SE,
            other => return Err(bad(alg_line.0, format!("unknown algebra `{other}`"))),
        };
        let sign_line = next("sign")?;
        let sign: i8 = match header(sign_line, "sign")?.as_str() {
            "+1" => 1,
            "-1" => -1,
            other => return Err(bad(sign_line.0, format!("bad sign `{other}`"))),
        };
        let scale_line = next("scale")?;
        let scale = parse_q(&header(scale_line, "scale")?)
            .filter(|s| *s != Q::default())
            .ok_or_else(|| bad(scale_line.0, "bad scale".into()))?;
        let found = header(next("basis")?, "basis")?;
        if found != basis_hash() {
            return Err(FormatError::BasisHash {
                found,
                expected: basis_hash(),
            });
        }
        let count_line = next("terms")?;
        let count: usize = header(count_line, "terms")?
            .parse()
            .map_err(|_| bad(count_line.0, "bad term count".into()))?;
        let mut terms = Vec::with_capacity(count);
        for _ in 0..count {
            let (n, l) = next("term line")?;
            let parts: Vec<&str> = l.split(" | ").collect();
            let [c, e, m] = parts[..] else {
                return Err(bad(n, "expected `coeff | exponents | mask`".into()));
            };
            let c = parse_q(c).ok_or_else(|| bad(n, format!("bad coefficient `{c}`")))?;
            let exps: Vec<u8> = e
                .split(' ')
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|_| bad(n, "bad exponent".into()))?;
            let exps: [u8; 10] = exps.try_into().map_err(|_| bad(n, "expected ten exponents".into()))?;
            let mask = CliffordMonomial::from_bits(m).ok_or_else(|| bad(n, format!("bad mask `{m}`")))?.0;
            terms.push((c, exps, mask, n));
        }
        if let Some((n, _)) = lines.next() {
            return Err(bad(n, "trailing content".into()));
        }
        let element = match algebra {
            AlgebraId::UC => {
                let mut x = UCElement::zero();
                for (c, e, m, n) in terms {
                    let key = (PbwMonomial(e), CliffordMonomial(m));
                    if !x.coeff(&key).eq(&Q::default()) || c == Q::default() {
                        return Err(bad(n, "duplicate or zero term".into()));
                    }
                    x += &UCElement::term(key, c);
                }
                Element::UC(x)
            }
            AlgebraId::SE => {
                let mut x = SEElement::zero();
                for (c, e, m, n) in terms {
                    let key = (SMonomial(e), ExtMonomial(m));
                    if !x.coeff(&key).eq(&Q::default()) || c == Q::default() {
                        return Err(bad(n, "duplicate or zero term".into()));
                    }
                    x += &SEElement::term(key, c);
                }
                Element::SE(x)
            }
        };
        Ok(Self {
            convention: Convention::new(sign, scale),
            element,
        })
    }
}
