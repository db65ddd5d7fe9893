//! Text descriptions of groups.
//!
//! A spec file is a sequence of records separated by blank lines. `#`
//! starts a comment. Each record is either
//!
//! ```text
//! label: agl1-5
//! degree: 5
//! gens: (1 2 3 4 5)
//!       (2 3 5 4)
//! ```
//!
//! or
//!
//! ```text
//! label: d4-by-z3
//! construct: external (dihedral 4) (cyclic 3 (1 2 3))
//! ```
//!
//! Constructors:
//!
//! ```text
//! ctor  := "symmetric" N | "dihedral" N | "cyclic" N CYCLES
//!        | "young" N ("," N)* | "gens" N CYCLES (";" CYCLES)*
//!        | "external" ("(" ctor ")")+ | "internal" ("(" ctor ")")+
//!        | "wreath" "(" ctor ")" "(" ctor ")" | "tuples" N "(" ctor ")"
//!        | "ref" LABEL
//! ```
//!
//! `ref` names an earlier record of the same file.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{
    cyclic_group, dihedral_group, external_direct_product, internal_direct_product, symmetric_group, wreath_product,
    young_subgroup, PermutationGroup, TupleAction,
};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constructor {
    Symmetric(usize),
    Dihedral(usize),
    Cyclic { degree: usize, cycles: String },
    Young(Vec<usize>),
    Generators { degree: usize, generators: Vec<String> },
    External(Vec<Constructor>),
    Internal(Vec<Constructor>),
    Wreath(Box<Constructor>, Box<Constructor>),
    Tuples(usize, Box<Constructor>),
    Ref(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub label: String,
    pub source: Constructor,
    /// 1-based line where the record starts.
    pub line: usize,
}

fn spec_err(line: usize, message: impl Into<String>) -> Error {
    Error::Spec {
        line,
        message: message.into(),
    }
}

fn parse_number(word: &str, what: &str) -> std::result::Result<usize, String> {
    word.parse().map_err(|_| format!("expected {what}, found {word:?}"))
}

/// Splits `text` into top-level words and parenthesised groups. Returns
/// `(word, is_group)` pairs; groups come back without their outer parens.
fn tokens(text: &str) -> std::result::Result<Vec<(String, bool)>, String> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '(' {
            let mut depth = 0usize;
            let mut end = None;
            for (j, d) in chars.by_ref() {
                match d {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            end = Some(j);
                            break;
                        }
                    }
                    _ => {}
                }
            }
            let end = end.ok_or("unbalanced parentheses")?;
            out.push((text[i + 1..end].to_string(), true));
        } else if c == ')' {
            return Err("unbalanced parentheses".into());
        } else {
            let mut end = text.len();
            while let Some(&(j, d)) = chars.peek() {
                if d.is_whitespace() || d == '(' || d == ')' {
                    end = j;
                    break;
                }
                chars.next();
            }
            out.push((text[i..end].to_string(), false));
        }
    }
    Ok(out)
}

/// Parses one constructor expression.
pub fn parse_constructor(text: &str) -> std::result::Result<Constructor, String> {
    let text = text.trim();
    let (head, rest) = match text.find(|c: char| c.is_whitespace() || c == '(') {
        Some(i) => (&text[..i], text[i..].trim()),
        None => (text, ""),
    };
    let groups = |rest: &str| -> std::result::Result<Vec<Constructor>, String> {
        let toks = tokens(rest)?;
        if toks.is_empty() {
            return Err(format!("{head} needs at least one parenthesised factor"));
        }
        toks.into_iter()
            .map(|(t, is_group)| {
                if is_group {
                    parse_constructor(&t)
                } else {
                    Err(format!("expected a parenthesised factor, found {t:?}"))
                }
            })
            .collect()
    };
    let degree_and_rest = |rest: &str| -> std::result::Result<(usize, String), String> {
        let end = rest.find(|c: char| c.is_whitespace() || c == '(').unwrap_or(rest.len());
        Ok((parse_number(&rest[..end], "a number")?, rest[end..].trim().to_string()))
    };
    match head {
        "symmetric" => Ok(Constructor::Symmetric(parse_number(rest, "a degree")?)),
        "dihedral" => Ok(Constructor::Dihedral(parse_number(rest, "a degree")?)),
        "cyclic" => {
            let (degree, cycles) = degree_and_rest(rest)?;
            Ok(Constructor::Cyclic { degree, cycles })
        }
        "gens" => {
            let (degree, tail) = degree_and_rest(rest)?;
            let generators = tail
                .split(';')
                .map(str::trim)
                .filter(|g| !g.is_empty())
                .map(String::from)
                .collect();
            Ok(Constructor::Generators { degree, generators })
        }
        "young" => {
            let parts = rest
                .split(',')
                .map(|w| parse_number(w.trim(), "a part"))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Ok(Constructor::Young(parts))
        }
        "external" => Ok(Constructor::External(groups(rest)?)),
        "internal" => Ok(Constructor::Internal(groups(rest)?)),
        "wreath" => {
            let mut g = groups(rest)?;
            if g.len() != 2 {
                return Err(format!("wreath takes two factors, found {}", g.len()));
            }
            let top = g.pop().expect("two factors");
            let base = g.pop().expect("two factors");
            Ok(Constructor::Wreath(Box::new(base), Box::new(top)))
        }
        "tuples" => {
            let (t, tail) = degree_and_rest(rest)?;
            let mut g = groups(&tail)?;
            if g.len() != 1 {
                return Err("tuples takes one factor".into());
            }
            Ok(Constructor::Tuples(t, Box::new(g.pop().expect("one factor"))))
        }
        "ref" if !rest.is_empty() && !rest.contains(char::is_whitespace) => Ok(Constructor::Ref(rest.to_string())),
        "ref" => Err("ref takes one label".into()),
        "" => Err("empty constructor".into()),
        other => Err(format!("unknown constructor {other:?}")),
    }
}

struct Draft {
    line: usize,
    label: Option<String>,
    degree: Option<usize>,
    gens: Option<Vec<String>>,
    construct: Option<Constructor>,
    in_gens: bool,
}

impl Draft {
    fn new(line: usize) -> Self {
        Draft {
            line,
            label: None,
            degree: None,
            gens: None,
            construct: None,
            in_gens: false,
        }
    }

    fn finish(self, index: usize) -> Result<GroupSpec> {
        let label = self.label.unwrap_or_else(|| format!("group-{index}"));
        let source = match (self.construct, self.degree, self.gens) {
            (Some(c), None, None) => c,
            (None, Some(degree), gens) => Constructor::Generators {
                degree,
                generators: gens.unwrap_or_default(),
            },
            (None, None, Some(_)) => return Err(spec_err(self.line, "gens: given without degree:")),
            (None, None, None) => return Err(spec_err(self.line, "record has neither degree: nor construct:")),
            (Some(_), _, _) => return Err(spec_err(self.line, "construct: cannot be combined with degree:/gens:")),
        };
        Ok(GroupSpec {
            label,
            source,
            line: self.line,
        })
    }
}

/// Parses a whole spec file. Labels must be unique.
pub fn parse_spec_file(text: &str) -> Result<Vec<GroupSpec>> {
    let mut specs: Vec<GroupSpec> = Vec::new();
    let mut draft: Option<Draft> = None;
    let flush = |draft: &mut Option<Draft>, specs: &mut Vec<GroupSpec>| -> Result<()> {
        if let Some(d) = draft.take() {
            let line = d.line;
            let spec = d.finish(specs.len() + 1)?;
            if specs.iter().any(|s| s.label == spec.label) {
                return Err(spec_err(line, format!("duplicate label {:?}", spec.label)));
            }
            specs.push(spec);
        }
        Ok(())
    };
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            if raw.trim().is_empty() {
                flush(&mut draft, &mut specs)?;
            }
            continue;
        }
        let d = draft.get_or_insert_with(|| Draft::new(line));
        let keyed = content
            .split_once(':')
            .filter(|(key, _)| matches!(key.trim(), "label" | "degree" | "gens" | "construct"));
        match keyed {
            Some((key, value)) => {
                let value = value.trim();
                d.in_gens = false;
                match key.trim() {
                    "label" => {
                        if value.is_empty() || value.contains(char::is_whitespace) {
                            return Err(spec_err(line, "label must be one non-empty word"));
                        }
                        if d.label.replace(value.to_string()).is_some() {
                            return Err(spec_err(line, "label given twice"));
                        }
                    }
                    "degree" => {
                        let n = parse_number(value, "a degree").map_err(|m| spec_err(line, m))?;
                        if d.degree.replace(n).is_some() {
                            return Err(spec_err(line, "degree given twice"));
                        }
                    }
                    "gens" => {
                        if d.gens.is_some() {
                            return Err(spec_err(line, "gens given twice"));
                        }
                        d.gens = Some(
                            value
                                .split(';')
                                .map(str::trim)
                                .filter(|g| !g.is_empty())
                                .map(String::from)
                                .collect(),
                        );
                        d.in_gens = true;
                    }
                    _ => {
                        let c = parse_constructor(value).map_err(|m| spec_err(line, m))?;
                        if d.construct.replace(c).is_some() {
                            return Err(spec_err(line, "construct given twice"));
                        }
                    }
                }
            }
            None if d.in_gens => {
                let gens = d.gens.as_mut().expect("in gens block");
                gens.extend(
                    content
                        .split(';')
                        .map(str::trim)
                        .filter(|g| !g.is_empty())
                        .map(String::from),
                );
            }
            None => return Err(spec_err(line, format!("expected key: value, found {content:?}"))),
        }
    }
    flush(&mut draft, &mut specs)?;
    Ok(specs)
}

/// Builds groups from constructors, resolving `ref`s against groups built
/// earlier.
pub struct Builder {
    pub element_cap: usize,
    built: HashMap<String, PermutationGroup>,
}

impl Builder {
    pub fn new(element_cap: usize) -> Self {
        Builder {
            element_cap,
            built: HashMap::new(),
        }
    }

    pub fn build(&self, c: &Constructor) -> Result<PermutationGroup> {
        let cap = self.element_cap;
        let check = |g: PermutationGroup| {
            if g.order() > cap {
                Err(Error::ElementCapExceeded(cap))
            } else {
                Ok(g)
            }
        };
        match c {
            Constructor::Symmetric(n) => {
                if (1..=*n)
                    .try_fold(1usize, |a, k| a.checked_mul(k))
                    .is_none_or(|o| o > cap)
                {
                    return Err(Error::ElementCapExceeded(cap));
                }
                symmetric_group(*n)
            }
            Constructor::Dihedral(n) => dihedral_group(*n),
            Constructor::Cyclic { degree, cycles } => Ok(cyclic_group(&Permutation::parse_cycles(cycles, *degree)?)),
            Constructor::Young(parts) => check(young_subgroup(parts)?),
            Constructor::Generators { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| Permutation::parse_cycles(g, *degree))
                    .collect::<Result<Vec<_>>>()?;
                PermutationGroup::generate_with_cap(*degree, gens, cap)
            }
            Constructor::External(fs) | Constructor::Internal(fs) => {
                let groups = fs.iter().map(|f| self.build(f)).collect::<Result<Vec<_>>>()?;
                let refs: Vec<&PermutationGroup> = groups.iter().collect();
                if refs
                    .iter()
                    .try_fold(1usize, |a, g| a.checked_mul(g.order()))
                    .is_none_or(|o| o > cap)
                {
                    return Err(Error::ElementCapExceeded(cap));
                }
                if matches!(c, Constructor::External(_)) {
                    external_direct_product(&refs)
                } else {
                    internal_direct_product(&refs)
                }
            }
            Constructor::Wreath(base, top) => {
                let (b, t) = (self.build(base)?, self.build(top)?);
                let order = (0..t.degree()).try_fold(t.order(), |a, _| a.checked_mul(b.order()));
                if order.is_none_or(|o| o > cap) {
                    return Err(Error::ElementCapExceeded(cap));
                }
                wreath_product(&b, &t)
            }
            Constructor::Tuples(t, base) => TupleAction::new(self.build(base)?, *t)?.to_group(),
            Constructor::Ref(label) => self
                .built
                .get(label)
                .cloned()
                .ok_or_else(|| Error::InvalidParameter(format!("ref to unknown label {label:?}"))),
        }
    }

    /// Builds `spec` and remembers it for later `ref`s.
    pub fn build_spec(&mut self, spec: &GroupSpec) -> Result<PermutationGroup> {
        let g = self.build(&spec.source)?;
        self.built.insert(spec.label.clone(), g.clone());
        Ok(g)
    }
}
