//! Text formats: interpretation-set files and knowledge-base files.
//!
//! Interpretation sets are exchanged as a `vocab` header line followed by
//! one sequence token per line; `#` starts a comment.
//!
//! Knowledge bases use one of three fact dialects, auto-detected from the
//! leading fact functor:
//!
//! * ADFs (and bipolar ADFs): `s(<name>).` declares a statement,
//!   `ac(<name>, <formula>).` its acceptance condition, with the formula
//!   grammar `and(F,F) | or(F,F) | neg(F) | c(v) | c(f) | <name>`; bipolar
//!   ADFs additionally carry `sup(<b>,<a>).` and `att(<b>,<a>).` polarity
//!   facts.
//! * AFs: `arg(<name>).` and `att(<attacker>,<attacked>).`
//! * SETAFs: `arg(<name>).` and `attset((<b1>,…,<bk>),<a>).` — the attset
//!   dialect is a local convention, there is no established exchange
//!   format for collective attacks.
//!
//! `%` starts a comment in the knowledge-base dialects. Emission is
//! canonical: statements in vocabulary order, attacks sorted, acceptance
//! formulas as the disjunction of full minterms of the model set (one
//! conjunct per accepting interpretation, ascending), `c(f)` for empty and
//! `c(v)` for full model sets.
//!
//! Detection is by fact functors alone, so an attack-free SETAF reads back
//! as an (equivalent) attack-free AF, and a link-free bipolar ADF as a
//! plain ADF.

use crate::error::{Error, Result};
use crate::frameworks::{AcceptanceCondition, Adf, Af, Badf, KnowledgeBase, Setaf};
use crate::interp::{Interpretation, InterpretationSet, Vocabulary};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Parse an interpretation-set file.
pub fn parse_interpretation_set(text: &str) -> Result<InterpretationSet> {
    let mut vocab: Option<Arc<Vocabulary>> = None;
    let mut set: Option<InterpretationSet> = None;
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        match &vocab {
            None => {
                let mut parts = line.split_whitespace();
                if parts.next() != Some("vocab") {
                    return Err(Error::parse(
                        line_no,
                        "expected a `vocab` line before any interpretation",
                    ));
                }
                let names: Vec<&str> = parts.collect();
                let v = Vocabulary::new(names)
                    .map_err(|e| Error::parse(line_no, e.to_string()))?;
                set = Some(InterpretationSet::empty(&v));
                vocab = Some(v);
            }
            Some(v) => {
                let interp = Interpretation::parse(line, v)
                    .map_err(|e| Error::parse(line_no, e.to_string()))?;
                let fresh = set
                    .as_mut()
                    .expect("set exists once the vocabulary is read")
                    .insert(interp)?;
                if !fresh {
                    return Err(Error::parse(
                        line_no,
                        format!("duplicate interpretation `{line}`"),
                    ));
                }
            }
        }
    }
    set.ok_or_else(|| Error::parse(0, "missing `vocab` line"))
}

/// Canonical text of an interpretation set.
pub fn format_interpretation_set(set: &InterpretationSet) -> String {
    let mut out = String::from("vocab ");
    out.push_str(&set.vocab().names().join(" "));
    out.push('\n');
    for token in set.tokens() {
        out.push_str(&token);
        out.push('\n');
    }
    out
}

/// A parsed fact: functor and top-level arguments.
struct Fact {
    line: usize,
    functor: String,
    args: Vec<String>,
}

/// Split the input into facts terminated by `.`, stripping `%` comments.
fn split_facts(text: &str) -> Result<Vec<Fact>> {
    let mut cleaned = String::with_capacity(text.len());
    for line in text.lines() {
        match line.find('%') {
            Some(pos) => cleaned.push_str(&line[..pos]),
            None => cleaned.push_str(line),
        }
        cleaned.push('\n');
    }
    let mut facts = Vec::new();
    let mut line = 1usize;
    let mut start_line = 1usize;
    let mut current = String::new();
    for c in cleaned.chars() {
        match c {
            '\n' => {
                line += 1;
                current.push(' ');
            }
            '.' => {
                let fact_text = current.trim().to_string();
                if !fact_text.is_empty() {
                    facts.push(parse_fact(start_line, &fact_text)?);
                }
                current.clear();
                start_line = line;
            }
            _ => {
                if current.trim().is_empty() && !c.is_whitespace() {
                    start_line = line;
                }
                current.push(c);
            }
        }
    }
    if !current.trim().is_empty() {
        return Err(Error::parse(
            start_line,
            format!("unterminated fact `{}`", current.trim()),
        ));
    }
    Ok(facts)
}

fn parse_fact(line: usize, text: &str) -> Result<Fact> {
    let open = text
        .find('(')
        .ok_or_else(|| Error::parse(line, format!("expected `functor(...)`, got `{text}`")))?;
    if !text.ends_with(')') {
        return Err(Error::parse(line, format!("missing `)` in `{text}`")));
    }
    let functor = text[..open].trim().to_string();
    let inner = &text[open + 1..text.len() - 1];
    Ok(Fact {
        line,
        functor,
        args: split_top_level(inner),
    })
}

/// Split on commas not nested inside parentheses.
fn split_top_level(text: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                parts.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(c),
        }
    }
    let last = current.trim();
    if !last.is_empty() || !parts.is_empty() {
        parts.push(last.to_string());
    }
    parts
}

/// Acceptance formula over statement indices.
enum Formula {
    Top,
    Bottom,
    Var(usize),
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    fn parse(line: usize, text: &str, vocab: &Arc<Vocabulary>) -> Result<Formula> {
        let text = text.trim();
        let binary = |name: &str| -> Option<&str> {
            text.strip_prefix(name)
                .and_then(|rest| rest.trim_start().strip_prefix('('))
                .and_then(|_| {
                    text.strip_suffix(')')
                        .map(|whole| &whole[text.find('(').unwrap() + 1..])
                })
        };
        if let Some(inner) = binary("and") {
            let args = split_top_level(inner);
            if args.len() != 2 {
                return Err(Error::parse(line, format!("and expects 2 operands in `{text}`")));
            }
            return Ok(Formula::And(
                Box::new(Formula::parse(line, &args[0], vocab)?),
                Box::new(Formula::parse(line, &args[1], vocab)?),
            ));
        }
        if let Some(inner) = binary("or") {
            let args = split_top_level(inner);
            if args.len() != 2 {
                return Err(Error::parse(line, format!("or expects 2 operands in `{text}`")));
            }
            return Ok(Formula::Or(
                Box::new(Formula::parse(line, &args[0], vocab)?),
                Box::new(Formula::parse(line, &args[1], vocab)?),
            ));
        }
        if let Some(inner) = binary("neg") {
            let args = split_top_level(inner);
            if args.len() != 1 {
                return Err(Error::parse(line, format!("neg expects 1 operand in `{text}`")));
            }
            return Ok(Formula::Neg(Box::new(Formula::parse(line, &args[0], vocab)?)));
        }
        if let Some(inner) = binary("c") {
            return match inner.trim() {
                "v" => Ok(Formula::Top),
                "f" => Ok(Formula::Bottom),
                other => Err(Error::parse(line, format!("unknown constant `c({other})`"))),
            };
        }
        let statement = vocab
            .index_of(text)
            .map_err(|_| Error::parse(line, format!("unknown statement `{text}` in formula")))?;
        Ok(Formula::Var(statement))
    }

    fn eval(&self, index: usize, vocab: &Arc<Vocabulary>) -> bool {
        match self {
            Formula::Top => true,
            Formula::Bottom => false,
            Formula::Var(statement) => index & (vocab.bit(*statement) as usize) != 0,
            Formula::Neg(inner) => !inner.eval(index, vocab),
            Formula::And(lhs, rhs) => lhs.eval(index, vocab) && rhs.eval(index, vocab),
            Formula::Or(lhs, rhs) => lhs.eval(index, vocab) || rhs.eval(index, vocab),
        }
    }
}

/// Parse a knowledge-base file, auto-detecting the dialect from the first
/// fact functor.
pub fn parse_kb(text: &str) -> Result<KnowledgeBase> {
    let facts = split_facts(text)?;
    let first = facts
        .first()
        .ok_or_else(|| Error::parse(0, "empty knowledge base"))?;
    match first.functor.as_str() {
        "s" | "ac" => parse_adf_dialect(&facts),
        "arg" | "att" | "attset" => {
            if facts.iter().any(|f| f.functor == "attset") {
                parse_setaf_dialect(&facts)
            } else {
                parse_af_dialect(&facts)
            }
        }
        other => Err(Error::parse(
            first.line,
            format!("unknown leading fact functor `{other}`"),
        )),
    }
}

fn single_name(fact: &Fact) -> Result<&str> {
    if fact.args.len() != 1 {
        return Err(Error::parse(
            fact.line,
            format!("`{}` expects one argument", fact.functor),
        ));
    }
    Ok(&fact.args[0])
}

fn pair_names(fact: &Fact) -> Result<(&str, &str)> {
    if fact.args.len() != 2 {
        return Err(Error::parse(
            fact.line,
            format!("`{}` expects two arguments", fact.functor),
        ));
    }
    Ok((&fact.args[0], &fact.args[1]))
}

fn declared_vocab(facts: &[Fact], declaration: &str) -> Result<Arc<Vocabulary>> {
    let mut names: Vec<String> = Vec::new();
    for fact in facts.iter().filter(|f| f.functor == declaration) {
        let name = single_name(fact)?;
        if names.iter().any(|n| n == name) {
            return Err(Error::parse(
                fact.line,
                format!("statement `{name}` declared twice"),
            ));
        }
        names.push(name.to_string());
    }
    if names.is_empty() {
        return Err(Error::parse(
            0,
            format!("no `{declaration}(...)` declarations found"),
        ));
    }
    Vocabulary::new(names)
}

fn parse_adf_dialect(facts: &[Fact]) -> Result<KnowledgeBase> {
    let vocab = declared_vocab(facts, "s")?;
    let mut conditions: BTreeMap<usize, AcceptanceCondition> = BTreeMap::new();
    let mut supporting: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut attacking: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut has_polarity_facts = false;
    for fact in facts {
        match fact.functor.as_str() {
            "s" => {}
            "ac" => {
                if fact.args.len() != 2 {
                    return Err(Error::parse(fact.line, "`ac` expects two arguments"));
                }
                let statement = vocab
                    .index_of(&fact.args[0])
                    .map_err(|e| Error::parse(fact.line, e.to_string()))?;
                let formula = Formula::parse(fact.line, &fact.args[1], &vocab)?;
                let condition =
                    AcceptanceCondition::from_fn(&vocab, |w| formula.eval(w, &vocab))?;
                if conditions.insert(statement, condition).is_some() {
                    return Err(Error::parse(
                        fact.line,
                        format!("acceptance condition for `{}` given twice", fact.args[0]),
                    ));
                }
            }
            "sup" | "att" => {
                has_polarity_facts = true;
                let (b, a) = pair_names(fact)?;
                let link = (
                    vocab.index_of(b).map_err(|e| Error::parse(fact.line, e.to_string()))?,
                    vocab.index_of(a).map_err(|e| Error::parse(fact.line, e.to_string()))?,
                );
                if fact.functor == "sup" {
                    supporting.insert(link);
                } else {
                    attacking.insert(link);
                }
            }
            other => {
                return Err(Error::parse(
                    fact.line,
                    format!("unexpected fact `{other}` in an ADF file"),
                ));
            }
        }
    }
    let conditions = (0..vocab.size())
        .map(|statement| {
            conditions.remove(&statement).ok_or_else(|| {
                Error::parse(
                    0,
                    format!("no acceptance condition for `{}`", vocab.name(statement)),
                )
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let adf = Adf::new(&vocab, conditions)?;
    if has_polarity_facts {
        Ok(KnowledgeBase::Badf(Badf::new(adf, supporting, attacking)?))
    } else {
        Ok(KnowledgeBase::Adf(adf))
    }
}

fn parse_af_dialect(facts: &[Fact]) -> Result<KnowledgeBase> {
    let vocab = declared_vocab(facts, "arg")?;
    let mut attacks = BTreeSet::new();
    for fact in facts {
        match fact.functor.as_str() {
            "arg" => {}
            "att" => {
                let (b, a) = pair_names(fact)?;
                attacks.insert((
                    vocab.index_of(b).map_err(|e| Error::parse(fact.line, e.to_string()))?,
                    vocab.index_of(a).map_err(|e| Error::parse(fact.line, e.to_string()))?,
                ));
            }
            other => {
                return Err(Error::parse(
                    fact.line,
                    format!("unexpected fact `{other}` in an AF file"),
                ));
            }
        }
    }
    Ok(KnowledgeBase::Af(Af::new(&vocab, attacks)?))
}

fn parse_setaf_dialect(facts: &[Fact]) -> Result<KnowledgeBase> {
    let vocab = declared_vocab(facts, "arg")?;
    let mut attacks: BTreeSet<(BTreeSet<usize>, usize)> = BTreeSet::new();
    for fact in facts {
        match fact.functor.as_str() {
            "arg" => {}
            "attset" => {
                if fact.args.len() != 2 {
                    return Err(Error::parse(fact.line, "`attset` expects two arguments"));
                }
                let source_text = fact.args[0].trim();
                let inner = source_text
                    .strip_prefix('(')
                    .and_then(|rest| rest.strip_suffix(')'))
                    .ok_or_else(|| {
                        Error::parse(
                            fact.line,
                            format!("attacking set must be parenthesized, got `{source_text}`"),
                        )
                    })?;
                let mut source = BTreeSet::new();
                for name in split_top_level(inner) {
                    source.insert(
                        vocab
                            .index_of(name.trim())
                            .map_err(|e| Error::parse(fact.line, e.to_string()))?,
                    );
                }
                if source.is_empty() {
                    return Err(Error::parse(fact.line, "empty attacking set"));
                }
                let target = vocab
                    .index_of(fact.args[1].trim())
                    .map_err(|e| Error::parse(fact.line, e.to_string()))?;
                attacks.insert((source, target));
            }
            other => {
                return Err(Error::parse(
                    fact.line,
                    format!("unexpected fact `{other}` in a SETAF file"),
                ));
            }
        }
    }
    Ok(KnowledgeBase::Setaf(Setaf::new(&vocab, attacks)?))
}

/// Canonical acceptance formula of a model set: disjunction of full
/// minterms, `c(f)` when empty, `c(v)` when full.
fn format_condition(condition: &AcceptanceCondition) -> String {
    let vocab = condition.vocab();
    let n = vocab.size();
    let models: Vec<usize> = condition.model_indices().collect();
    if models.is_empty() {
        return "c(f)".to_string();
    }
    if models.len() == vocab.two_valued_count() {
        return "c(v)".to_string();
    }
    let minterm = |w: usize| -> String {
        let literals: Vec<String> = (0..n)
            .map(|statement| {
                if w & vocab.bit(statement) as usize != 0 {
                    vocab.name(statement).to_string()
                } else {
                    format!("neg({})", vocab.name(statement))
                }
            })
            .collect();
        join_right("and", literals)
    };
    join_right("or", models.into_iter().map(minterm).collect())
}

/// Right-associated chain: `op(x1, op(x2, x3))`.
fn join_right(op: &str, parts: Vec<String>) -> String {
    parts
        .into_iter()
        .rev()
        .reduce(|acc, part| format!("{op}({part}, {acc})"))
        .expect("at least one part")
}

/// Canonical text of a knowledge base in its dialect.
pub fn format_kb(kb: &KnowledgeBase) -> String {
    let vocab = kb.vocab();
    let mut out = String::new();
    match kb {
        KnowledgeBase::Adf(adf) => {
            for name in vocab.names() {
                out.push_str(&format!("s({name}).\n"));
            }
            for (statement, condition) in adf.conditions().iter().enumerate() {
                out.push_str(&format!(
                    "ac({}, {}).\n",
                    vocab.name(statement),
                    format_condition(condition)
                ));
            }
        }
        KnowledgeBase::Badf(badf) => {
            for name in vocab.names() {
                out.push_str(&format!("s({name}).\n"));
            }
            for (statement, condition) in badf.base().conditions().iter().enumerate() {
                out.push_str(&format!(
                    "ac({}, {}).\n",
                    vocab.name(statement),
                    format_condition(condition)
                ));
            }
            for &(b, a) in badf.supporting() {
                out.push_str(&format!("sup({}, {}).\n", vocab.name(b), vocab.name(a)));
            }
            for &(b, a) in badf.attacking() {
                out.push_str(&format!("att({}, {}).\n", vocab.name(b), vocab.name(a)));
            }
        }
        KnowledgeBase::Af(af) => {
            for name in vocab.names() {
                out.push_str(&format!("arg({name}).\n"));
            }
            for &(b, a) in af.attacks() {
                out.push_str(&format!("att({}, {}).\n", vocab.name(b), vocab.name(a)));
            }
        }
        KnowledgeBase::Setaf(setaf) => {
            for name in vocab.names() {
                out.push_str(&format!("arg({name}).\n"));
            }
            for (source, target) in setaf.attacks() {
                let names: Vec<&str> = source.iter().map(|&b| vocab.name(b)).collect();
                out.push_str(&format!(
                    "attset(({}), {}).\n",
                    names.join(","),
                    vocab.name(*target)
                ));
            }
        }
    }
    out
}
