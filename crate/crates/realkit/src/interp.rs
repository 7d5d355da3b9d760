//! Three-valued interpretations over a fixed vocabulary.
//!
//! The vocabulary fixes an ordered list of statement names; an
//! interpretation assigns one of `t`, `f`, `u` to every statement and is
//! written as a sequence token like `tfu` (one character per statement, in
//! vocabulary order). Two orders matter: the information order, where `u`
//! lies below both Boolean values, and the truth order `f < t` on
//! two-valued interpretations. Everything here is immutable and pure.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// One of the three truth values.
///
/// The derived `Ord` (`True < False < Unknown`) is the canonical character
/// order `t < f < u` used when printing sets of interpretations; it is not
/// one of the semantic lattice orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue {
    True,
    False,
    Unknown,
}

impl TruthValue {
    pub fn from_bool(value: bool) -> Self {
        if value {
            TruthValue::True
        } else {
            TruthValue::False
        }
    }

    /// `Some(bool)` for the Boolean values, `None` for unknown.
    pub fn to_bool(self) -> Option<bool> {
        match self {
            TruthValue::True => Some(true),
            TruthValue::False => Some(false),
            TruthValue::Unknown => None,
        }
    }

    pub fn is_boolean(self) -> bool {
        !matches!(self, TruthValue::Unknown)
    }

    /// Kleene negation: swaps the Boolean values, keeps unknown.
    pub fn negated(self) -> Self {
        match self {
            TruthValue::True => TruthValue::False,
            TruthValue::False => TruthValue::True,
            TruthValue::Unknown => TruthValue::Unknown,
        }
    }

    /// Information order: `u` below both Boolean values, `t` and `f`
    /// incomparable.
    pub fn info_leq(self, other: Self) -> bool {
        self == TruthValue::Unknown || self == other
    }

    /// Information meet (consensus): equal Boolean values survive,
    /// everything else collapses to unknown.
    pub fn info_meet(self, other: Self) -> Self {
        if self == other {
            self
        } else {
            TruthValue::Unknown
        }
    }

    pub fn as_char(self) -> char {
        match self {
            TruthValue::True => 't',
            TruthValue::False => 'f',
            TruthValue::Unknown => 'u',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            't' => Ok(TruthValue::True),
            'f' => Ok(TruthValue::False),
            'u' => Ok(TruthValue::Unknown),
            other => Err(Error::InvalidTruthValue(other)),
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An ordered, non-empty list of distinct statement names.
///
/// The order is fixed at construction and defines the position of each
/// truth value in sequence tokens and the canonical index of two-valued
/// interpretations (statement 0 is the most significant bit).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vocabulary {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Vocabulary {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyVocabulary);
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !valid_name(name) {
                return Err(Error::InvalidStatementName(name.clone()));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateStatement(name.clone()));
            }
        }
        Ok(Arc::new(Vocabulary { names }))
    }

    /// Vocabulary `a, b, c, …` of the given size (at most 26).
    pub fn lettered(size: usize) -> Result<Arc<Self>> {
        if size == 0 {
            return Err(Error::EmptyVocabulary);
        }
        if size > 26 {
            return Err(Error::AtomGuard {
                operation: "lettered vocabulary",
                atoms: size,
                limit: 26,
            });
        }
        Vocabulary::new((0..size).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownStatement(name.to_string()))
    }

    /// Number of two-valued interpretations, `2^size`.
    pub fn two_valued_count(&self) -> usize {
        1usize << self.size()
    }

    /// Number of all interpretations, `3^size`.
    pub fn interpretation_count(&self) -> usize {
        3usize.pow(self.size() as u32)
    }

    /// Bit of statement `index` in mask encodings; statement 0 is the most
    /// significant bit of a `size()`-bit word.
    pub(crate) fn bit(&self, index: usize) -> u32 {
        1u32 << (self.size() - 1 - index)
    }

    pub(crate) fn full_mask(&self) -> u32 {
        ((1u64 << self.size()) - 1) as u32
    }
}

fn check_same_vocab(a: &Interpretation, b: &Interpretation) -> Result<()> {
    if a.vocab == b.vocab {
        Ok(())
    } else {
        Err(Error::VocabularyMismatch)
    }
}

/// A total assignment of truth values to all statements of one vocabulary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interpretation {
    vocab: Arc<Vocabulary>,
    values: Vec<TruthValue>,
}

impl Interpretation {
    pub fn from_values(vocab: &Arc<Vocabulary>, values: Vec<TruthValue>) -> Result<Self> {
        if values.len() != vocab.size() {
            return Err(Error::TokenLength {
                expected: vocab.size(),
                got: values.len(),
            });
        }
        Ok(Interpretation {
            vocab: Arc::clone(vocab),
            values,
        })
    }

    /// Parse a sequence token such as `tfu` (one character per statement,
    /// vocabulary order).
    pub fn parse(token: &str, vocab: &Arc<Vocabulary>) -> Result<Self> {
        let chars: Vec<char> = token.chars().collect();
        if chars.len() != vocab.size() {
            return Err(Error::TokenLength {
                expected: vocab.size(),
                got: chars.len(),
            });
        }
        let values = chars
            .into_iter()
            .map(TruthValue::from_char)
            .collect::<Result<Vec<_>>>()?;
        Interpretation::from_values(vocab, values)
    }

    pub fn all_unknown(vocab: &Arc<Vocabulary>) -> Self {
        Interpretation {
            vocab: Arc::clone(vocab),
            values: vec![TruthValue::Unknown; vocab.size()],
        }
    }

    pub fn all_false(vocab: &Arc<Vocabulary>) -> Self {
        Interpretation {
            vocab: Arc::clone(vocab),
            values: vec![TruthValue::False; vocab.size()],
        }
    }

    pub fn all_true(vocab: &Arc<Vocabulary>) -> Self {
        Interpretation {
            vocab: Arc::clone(vocab),
            values: vec![TruthValue::True; vocab.size()],
        }
    }

    /// Two-valued interpretation from its canonical index (`t` = 1,
    /// statement 0 = most significant bit).
    pub fn from_two_valued_index(vocab: &Arc<Vocabulary>, index: usize) -> Self {
        debug_assert!(index < vocab.two_valued_count());
        let n = vocab.size();
        let values = (0..n)
            .map(|i| TruthValue::from_bool(index & (1 << (n - 1 - i)) != 0))
            .collect();
        Interpretation {
            vocab: Arc::clone(vocab),
            values,
        }
    }

    /// Interpretation from bit masks: statements outside `known` map to
    /// unknown, statements in `known` map to their bit in `truth`.
    pub(crate) fn from_masks(vocab: &Arc<Vocabulary>, known: u32, truth: u32) -> Self {
        let n = vocab.size();
        let values = (0..n)
            .map(|i| {
                let bit = 1u32 << (n - 1 - i);
                if known & bit == 0 {
                    TruthValue::Unknown
                } else {
                    TruthValue::from_bool(truth & bit != 0)
                }
            })
            .collect();
        Interpretation {
            vocab: Arc::clone(vocab),
            values,
        }
    }

    pub fn vocab(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    pub fn value(&self, index: usize) -> TruthValue {
        self.values[index]
    }

    pub fn value_of(&self, name: &str) -> Result<TruthValue> {
        Ok(self.values[self.vocab.index_of(name)?])
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    /// Copy with statement `index` set to `value`.
    pub fn with_value(&self, index: usize, value: TruthValue) -> Self {
        let mut values = self.values.clone();
        values[index] = value;
        Interpretation {
            vocab: Arc::clone(&self.vocab),
            values,
        }
    }

    pub fn token(&self) -> String {
        self.values.iter().map(|v| v.as_char()).collect()
    }

    pub fn u_count(&self) -> usize {
        self.values
            .iter()
            .filter(|v| !v.is_boolean())
            .count()
    }

    pub fn is_two_valued(&self) -> bool {
        self.u_count() == 0
    }

    /// Canonical index of a two-valued interpretation; `None` if any
    /// statement is unknown.
    pub fn two_valued_index(&self) -> Option<usize> {
        let n = self.vocab.size();
        let mut index = 0usize;
        for (i, v) in self.values.iter().enumerate() {
            match v.to_bool()? {
                true => index |= 1 << (n - 1 - i),
                false => {}
            }
        }
        Some(index)
    }

    /// `(known, truth)` bit masks; see [`Interpretation::from_masks`].
    pub(crate) fn masks(&self) -> (u32, u32) {
        let n = self.vocab.size();
        let mut known = 0u32;
        let mut truth = 0u32;
        for (i, v) in self.values.iter().enumerate() {
            let bit = 1u32 << (n - 1 - i);
            match v {
                TruthValue::True => {
                    known |= bit;
                    truth |= bit;
                }
                TruthValue::False => known |= bit,
                TruthValue::Unknown => {}
            }
        }
        (known, truth)
    }

    /// Pointwise information order.
    pub fn info_leq(&self, other: &Interpretation) -> Result<bool> {
        check_same_vocab(self, other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.info_leq(*b)))
    }

    /// Pointwise consensus meet.
    pub fn info_meet(&self, other: &Interpretation) -> Result<Interpretation> {
        check_same_vocab(self, other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.info_meet(*b))
            .collect();
        Ok(Interpretation {
            vocab: Arc::clone(&self.vocab),
            values,
        })
    }

    /// All two-valued interpretations extending this one; cardinality
    /// `2^u_count`.
    pub fn completions(&self) -> InterpretationSet {
        let mut set = InterpretationSet::empty(&self.vocab);
        for index in self.completion_indices() {
            set.members
                .insert(Interpretation::from_two_valued_index(&self.vocab, index));
        }
        set
    }

    /// Canonical indices of all completions, ascending.
    pub(crate) fn completion_indices(&self) -> CompletionIndices {
        let (known, truth) = self.masks();
        CompletionIndices::new(truth, self.vocab.full_mask() & !known)
    }

    /// Pointwise truth order; both interpretations must be two-valued.
    pub fn truth_leq(&self, other: &Interpretation) -> Result<bool> {
        check_same_vocab(self, other)?;
        if !self.is_two_valued() || !other.is_two_valued() {
            return Err(Error::NotTwoValued);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| !(a == &TruthValue::True && b == &TruthValue::False)))
    }

    /// Pointwise truth join (disjunction); both interpretations must be
    /// two-valued.
    pub fn truth_join(&self, other: &Interpretation) -> Result<Interpretation> {
        check_same_vocab(self, other)?;
        if !self.is_two_valued() || !other.is_two_valued() {
            return Err(Error::NotTwoValued);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| {
                TruthValue::from_bool(*a == TruthValue::True || *b == TruthValue::True)
            })
            .collect();
        Ok(Interpretation {
            vocab: Arc::clone(&self.vocab),
            values,
        })
    }
}

/// Canonical order: interpretations with more unknowns come first, ties
/// broken by the sequence token under `t < f < u`.
impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vocab
            .cmp(&other.vocab)
            .then_with(|| other.u_count().cmp(&self.u_count()))
            .then_with(|| self.values.cmp(&other.values))
    }
}

impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// Iterator over completion indices: `truth | s` for every submask `s` of
/// `unknown`, ascending.
pub(crate) struct CompletionIndices {
    truth: u32,
    unknown: u32,
    next: Option<u32>,
}

impl CompletionIndices {
    fn new(truth: u32, unknown: u32) -> Self {
        CompletionIndices {
            truth,
            unknown,
            next: Some(0),
        }
    }
}

impl Iterator for CompletionIndices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let sub = self.next?;
        let index = (self.truth | sub) as usize;
        self.next = if sub == self.unknown {
            None
        } else {
            Some(sub.wrapping_sub(self.unknown) & self.unknown)
        };
        Some(index)
    }
}

/// A finite set of interpretations over one shared vocabulary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InterpretationSet {
    vocab: Arc<Vocabulary>,
    members: BTreeSet<Interpretation>,
}

impl InterpretationSet {
    pub fn empty(vocab: &Arc<Vocabulary>) -> Self {
        InterpretationSet {
            vocab: Arc::clone(vocab),
            members: BTreeSet::new(),
        }
    }

    pub fn from_members<I>(vocab: &Arc<Vocabulary>, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Interpretation>,
    {
        let mut set = InterpretationSet::empty(vocab);
        for member in members {
            set.insert(member)?;
        }
        Ok(set)
    }

    /// Convenience constructor from sequence tokens.
    pub fn from_tokens<'a, I>(vocab: &Arc<Vocabulary>, tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut set = InterpretationSet::empty(vocab);
        for token in tokens {
            set.insert(Interpretation::parse(token, vocab)?)?;
        }
        Ok(set)
    }

    /// All `3^size` interpretations over the vocabulary.
    pub fn universe(vocab: &Arc<Vocabulary>) -> Self {
        let mut set = InterpretationSet::empty(vocab);
        let mut values = vec![TruthValue::Unknown; vocab.size()];
        loop {
            set.members.insert(
                Interpretation::from_values(vocab, values.clone()).expect("sized to vocabulary"),
            );
            if !advance(&mut values) {
                break;
            }
        }
        set
    }

    pub fn vocab(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    pub fn insert(&mut self, member: Interpretation) -> Result<bool> {
        if member.vocab != self.vocab {
            return Err(Error::VocabularyMismatch);
        }
        Ok(self.members.insert(member))
    }

    pub fn contains(&self, member: &Interpretation) -> bool {
        self.members.contains(member)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &Interpretation> {
        self.members.iter()
    }

    /// Sequence tokens of all members in canonical order.
    pub fn tokens(&self) -> Vec<String> {
        self.members.iter().map(|m| m.token()).collect()
    }

    /// The information-maximal members; always an antichain.
    pub fn max_info(&self) -> InterpretationSet {
        let mut result = InterpretationSet::empty(&self.vocab);
        for candidate in &self.members {
            let dominated = self.members.iter().any(|other| {
                other != candidate
                    && candidate
                        .info_leq(other)
                        .expect("members share the vocabulary")
            });
            if !dominated {
                result.members.insert(candidate.clone());
            }
        }
        result
    }

    /// True iff no two distinct members are information-comparable.
    pub fn is_antichain(&self) -> bool {
        for a in &self.members {
            for b in &self.members {
                if a != b && a.info_leq(b).expect("members share the vocabulary") {
                    return false;
                }
            }
        }
        true
    }
}

/// Odometer step through all value vectors in `u < t < f` digit order.
fn advance(values: &mut [TruthValue]) -> bool {
    for slot in values.iter_mut().rev() {
        match slot {
            TruthValue::Unknown => {
                *slot = TruthValue::True;
                return true;
            }
            TruthValue::True => {
                *slot = TruthValue::False;
                return true;
            }
            TruthValue::False => *slot = TruthValue::Unknown,
        }
    }
    false
}

/// Canonical order: by cardinality, then lexicographically over the
/// canonically ordered member sequences.
impl Ord for InterpretationSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vocab
            .cmp(&other.vocab)
            .then_with(|| self.members.len().cmp(&other.members.len()))
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for InterpretationSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for InterpretationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.tokens().join(","))
    }
}
