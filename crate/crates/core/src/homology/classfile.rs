//! Class-data files: the escape hatch for groups outside the grammar.
//!
//! The centralizer decomposition needs, per conjugacy class of finite-order
//! elements, the Betti numbers of the centralizer's classifying space and how
//! inversion pairs the classes. A class-data file records exactly that: one
//! entry per self-paired class (with the eigen-split of its homology) or per
//! unordered pair {C, C^-1}. Files auto-generated from an in-grammar group
//! round-trip exactly through `homology_from_class_data`.
//!
//! Format, one entry per block:
//!
//! ```text
//! classdata v1
//! group "surface(1) * cyclic(3)"
//! selfpaired identity
//!   betti_plus 1 2 1
//!   betti_minus 0 0 0
//! pair
//!   betti 1 2 1
//! ```
//!
//! The `group` line is optional and records the originating expression. The
//! writer's output is canonical: `parse` then `write` reproduces it byte for
//! byte.

use std::fmt::Write as _;

use super::{check_pq, torsion_free_betti, BettiVector};
use crate::classdata::conjugacy_classes;
use crate::error::{Error, Result};
use crate::group::{normalize_with_cap, GroupExpr};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassEntry {
    /// A class equal to its inverse class. `betti_plus`/`betti_minus` are
    /// the dimensions of the (+1)/(-1) eigenspaces of inversion on the
    /// centralizer homology.
    SelfPaired {
        betti_plus: BettiVector,
        betti_minus: BettiVector,
        is_identity: bool,
    },
    /// An unordered pair {C, C^-1} with C != C^-1; the two classes have the
    /// same centralizer homology and inversion swaps the summands.
    Pair { betti: BettiVector },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDataFile {
    /// Originating group expression, recorded when auto-generated.
    pub group: Option<String>,
    pub entries: Vec<ClassEntry>,
}

impl ClassDataFile {
    /// Exactly one entry must be the identity class, and it must be
    /// self-paired.
    pub fn validate(&self) -> Result<()> {
        let identities = self
            .entries
            .iter()
            .filter(|e| matches!(e, ClassEntry::SelfPaired { is_identity: true, .. }))
            .count();
        if identities != 1 {
            return Err(Error::domain(format!(
                "class data must contain exactly one identity entry (found {identities})"
            )));
        }
        Ok(())
    }
}

/// Auto-generates the class data of an in-grammar group: every class of the
/// finite part contributes the torsion-free part's Betti numbers, with the
/// symmetric eigenspace carrying everything on self-paired classes.
pub fn generate_class_data(expr: &GroupExpr, cap: usize) -> Result<ClassDataFile> {
    let nf = normalize_with_cap(expr, cap)?;
    let b = torsion_free_betti(&nf)?;
    let cd = conjugacy_classes(&nf.finite);
    let mut entries = Vec::new();
    for (c, &ic) in cd.inv_class.iter().enumerate() {
        if c == ic {
            entries.push(ClassEntry::SelfPaired {
                betti_plus: b,
                betti_minus: BettiVector([0, 0, 0]),
                is_identity: c == cd.identity_class,
            });
        } else if c < ic {
            entries.push(ClassEntry::Pair { betti: b });
        }
    }
    Ok(ClassDataFile {
        group: Some(expr.to_string()),
        entries,
    })
}

/// dim H_p with coefficients described by a class-data file. Self-paired
/// entries contribute their q-eigenspace; pairs contribute `betti[p]` to both
/// eigenspaces. With `zero_at_identity` the identity class's symmetric
/// summand is removed outright: that summand is the homology with constant
/// (delta-at-identity) coefficients, which is exactly what F^0_0 cuts away,
/// in every degree p.
pub fn homology_from_class_data(
    cdf: &ClassDataFile,
    p: u8,
    q: u8,
    zero_at_identity: bool,
) -> Result<u64> {
    check_pq(p, q, zero_at_identity)?;
    cdf.validate()?;
    let p = p as usize;
    let mut total: u64 = 0;
    for entry in &cdf.entries {
        let dim = match entry {
            ClassEntry::SelfPaired {
                betti_plus,
                betti_minus,
                is_identity,
            } => {
                if q == 1 {
                    betti_minus.b(p)
                } else if zero_at_identity && *is_identity {
                    0
                } else {
                    betti_plus.b(p)
                }
            }
            ClassEntry::Pair { betti } => betti.b(p),
        };
        total = total
            .checked_add(dim)
            .ok_or_else(|| Error::Overflow("class-data homology sum".into()))?;
    }
    Ok(total)
}

/// Canonical text form.
pub fn write_class_data(cdf: &ClassDataFile) -> String {
    let mut out = String::from("classdata v1\n");
    if let Some(group) = &cdf.group {
        let _ = writeln!(out, "group \"{group}\"");
    }
    for entry in &cdf.entries {
        match entry {
            ClassEntry::SelfPaired {
                betti_plus,
                betti_minus,
                is_identity,
            } => {
                if *is_identity {
                    out.push_str("selfpaired identity\n");
                } else {
                    out.push_str("selfpaired\n");
                }
                let _ = writeln!(
                    out,
                    "  betti_plus {} {} {}",
                    betti_plus.b(0),
                    betti_plus.b(1),
                    betti_plus.b(2)
                );
                let _ = writeln!(
                    out,
                    "  betti_minus {} {} {}",
                    betti_minus.b(0),
                    betti_minus.b(1),
                    betti_minus.b(2)
                );
            }
            ClassEntry::Pair { betti } => {
                out.push_str("pair\n");
                let _ = writeln!(out, "  betti {} {} {}", betti.b(0), betti.b(1), betti.b(2));
            }
        }
    }
    out
}

fn cd_err(line: usize, msg: impl Into<String>) -> Error {
    Error::ClassData {
        line,
        msg: msg.into(),
    }
}

fn parse_betti(line_no: usize, words: &[&str]) -> Result<BettiVector> {
    if words.len() != 3 {
        return Err(cd_err(line_no, "expected three Betti numbers"));
    }
    let mut b = [0u64; 3];
    for (slot, w) in b.iter_mut().zip(words) {
        *slot = w
            .parse()
            .map_err(|_| cd_err(line_no, format!("bad Betti number {w:?}")))?;
    }
    Ok(BettiVector(b))
}

/// Parses a class-data file. Blank lines and `#` comments are ignored;
/// errors carry 1-based line numbers.
pub fn parse_class_data(text: &str) -> Result<ClassDataFile> {
    // Numbered, non-blank, non-comment lines.
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .peekable();

    let Some((line_no, header)) = lines.next() else {
        return Err(cd_err(1, "empty file; expected header `classdata v1`"));
    };
    if header.trim() != "classdata v1" {
        return Err(cd_err(line_no, "expected header `classdata v1`"));
    }

    let mut group = None;
    if let Some((line_no, l)) = lines.peek().copied() {
        let t = l.trim();
        if t == "group" || t.starts_with("group ") || t.starts_with("group\"") {
            let open = t.find('"').ok_or_else(|| {
                cd_err(line_no, "group line needs a quoted expression")
            })?;
            let close = t.rfind('"').unwrap();
            if close == open {
                return Err(cd_err(line_no, "unterminated group expression"));
            }
            group = Some(t[open + 1..close].to_string());
            lines.next();
        }
    }

    let mut entries = Vec::new();
    let mut last_line = line_no;
    while let Some((line_no, l)) = lines.next() {
        last_line = line_no;
        let words: Vec<&str> = l.split_whitespace().collect();
        match words.as_slice() {
            ["selfpaired"] | ["selfpaired", "identity"] => {
                let is_identity = words.len() == 2;
                let mut plus = None;
                let mut minus = None;
                for _ in 0..2 {
                    let Some((field_line, f)) = lines.next() else {
                        return Err(cd_err(
                            line_no,
                            "selfpaired entry needs betti_plus and betti_minus lines",
                        ));
                    };
                    last_line = field_line;
                    let fw: Vec<&str> = f.split_whitespace().collect();
                    match fw.as_slice() {
                        ["betti_plus", rest @ ..] => {
                            if plus.is_some() {
                                return Err(cd_err(field_line, "duplicate betti_plus"));
                            }
                            plus = Some(parse_betti(field_line, rest)?);
                        }
                        ["betti_minus", rest @ ..] => {
                            if minus.is_some() {
                                return Err(cd_err(field_line, "duplicate betti_minus"));
                            }
                            minus = Some(parse_betti(field_line, rest)?);
                        }
                        _ => {
                            return Err(cd_err(
                                field_line,
                                "expected betti_plus or betti_minus",
                            ));
                        }
                    }
                }
                entries.push(ClassEntry::SelfPaired {
                    betti_plus: plus.unwrap(),
                    betti_minus: minus.unwrap(),
                    is_identity,
                });
            }
            ["pair"] => {
                let Some((field_line, f)) = lines.next() else {
                    return Err(cd_err(line_no, "pair entry needs a betti line"));
                };
                last_line = field_line;
                let fw: Vec<&str> = f.split_whitespace().collect();
                match fw.as_slice() {
                    ["betti", rest @ ..] => {
                        entries.push(ClassEntry::Pair {
                            betti: parse_betti(field_line, rest)?,
                        });
                    }
                    _ => return Err(cd_err(field_line, "expected betti")),
                }
            }
            _ => {
                return Err(cd_err(
                    line_no,
                    format!("expected `selfpaired` or `pair`, found {:?}", l.trim()),
                ))
            }
        }
    }

    let file = ClassDataFile { group, entries };
    file.validate()
        .map_err(|e| cd_err(last_line, e.to_string()))?;
    Ok(file)
}
