//! Characterization functions and relations.
//!
//! A characterization function maps every two-valued interpretation to a
//! two-valued interpretation; its structure decides exactly which
//! interpretation sets an ADF can produce under the admissible, complete
//! and two-valued-model semantics. The search builds such functions
//! incrementally as a relation of `(interpretation, statement, value)`
//! triples that may be partial or incoherent along the way. This module
//! also houses the canonical knowledge-base constructions that read a
//! completed relation back into each of the four formalisms.

use crate::error::{Error, Result};
use crate::frameworks::{
    check_table_size, Adf, AcceptanceCondition, Badf, FormalismKind, KnowledgeBase, Semantics,
    Setaf,
};
use crate::interp::{Interpretation, InterpretationSet, Vocabulary};
use fixedbitset::FixedBitSet;
use std::collections::BTreeSet;
use std::sync::Arc;

/// One assignment `f(interpretation)(statement) = value` of a (partial)
/// characterization. Interpretations are referred to by canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub interp_index: usize,
    pub statement: usize,
    pub value: bool,
}

impl Triple {
    pub fn new(interp_index: usize, statement: usize, value: bool) -> Self {
        Triple {
            interp_index,
            statement,
            value,
        }
    }
}

/// Completion state of a characterization relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationStatus {
    /// Some cell carries both truth values.
    Incoherent,
    /// Coherent, but some cell carries no value yet.
    Partial,
    /// Exactly one value for every cell; converts losslessly to a function.
    Functional,
}

/// A set of triples approximating a characterization function; possibly
/// partial, possibly incoherent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharRelation {
    vocab: Arc<Vocabulary>,
    true_cells: FixedBitSet,
    false_cells: FixedBitSet,
}

impl CharRelation {
    pub fn empty(vocab: &Arc<Vocabulary>) -> Result<Self> {
        check_table_size(vocab, "characterization relation")?;
        let cells = vocab.two_valued_count() * vocab.size();
        Ok(CharRelation {
            vocab: Arc::clone(vocab),
            true_cells: FixedBitSet::with_capacity(cells),
            false_cells: FixedBitSet::with_capacity(cells),
        })
    }

    pub fn vocab(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    fn cell(&self, interp_index: usize, statement: usize) -> usize {
        interp_index * self.vocab.size() + statement
    }

    /// Add a triple keyed by a two-valued interpretation; returns whether the
    /// relation changed.
    pub fn insert(
        &mut self,
        interp: &Interpretation,
        statement: usize,
        value: bool,
    ) -> Result<bool> {
        if interp.vocab() != &self.vocab {
            return Err(Error::VocabularyMismatch);
        }
        let index = interp.two_valued_index().ok_or(Error::NotTwoValued)?;
        Ok(self.insert_triple(Triple::new(index, statement, value)))
    }

    pub fn insert_triple(&mut self, triple: Triple) -> bool {
        let cell = self.cell(triple.interp_index, triple.statement);
        if triple.value {
            !self.true_cells.put(cell)
        } else {
            !self.false_cells.put(cell)
        }
    }

    pub fn contains(&self, interp_index: usize, statement: usize, value: bool) -> bool {
        let cell = self.cell(interp_index, statement);
        if value {
            self.true_cells.contains(cell)
        } else {
            self.false_cells.contains(cell)
        }
    }

    pub fn contains_triple(&self, triple: &Triple) -> bool {
        self.contains(triple.interp_index, triple.statement, triple.value)
    }

    pub fn len(&self) -> usize {
        self.true_cells.count_ones(..) + self.false_cells.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All triples in cell order (interpretation index, then statement),
    /// false before true within a cell.
    pub fn triples(&self) -> Vec<Triple> {
        let n = self.vocab.size();
        let mut out = Vec::with_capacity(self.len());
        for index in 0..self.vocab.two_valued_count() {
            for statement in 0..n {
                for value in [false, true] {
                    if self.contains(index, statement, value) {
                        out.push(Triple::new(index, statement, value));
                    }
                }
            }
        }
        out
    }

    pub fn is_incoherent(&self) -> bool {
        self.true_cells.intersection(&self.false_cells).next().is_some()
    }

    pub fn status(&self) -> RelationStatus {
        if self.is_incoherent() {
            return RelationStatus::Incoherent;
        }
        let cells = self.vocab.two_valued_count() * self.vocab.size();
        if self.true_cells.union(&self.false_cells).count() == cells {
            RelationStatus::Functional
        } else {
            RelationStatus::Partial
        }
    }

    /// First cell carrying no value, in (interpretation index, statement)
    /// order.
    pub fn first_unassigned(&self) -> Option<(usize, usize)> {
        let n = self.vocab.size();
        for index in 0..self.vocab.two_valued_count() {
            for statement in 0..n {
                if !self.contains(index, statement, true)
                    && !self.contains(index, statement, false)
                {
                    return Some((index, statement));
                }
            }
        }
        None
    }

    /// The unique function a functional relation represents.
    pub fn to_function(&self) -> Option<CharFunction> {
        if self.status() != RelationStatus::Functional {
            return None;
        }
        let n = self.vocab.size();
        let table = (0..self.vocab.two_valued_count())
            .map(|index| {
                (0..n).fold(0usize, |acc, statement| {
                    if self.contains(index, statement, true) {
                        acc | (1 << (n - 1 - statement))
                    } else {
                        acc
                    }
                })
            })
            .collect();
        Some(CharFunction {
            vocab: Arc::clone(&self.vocab),
            table,
        })
    }
}

/// A total function from two-valued interpretations to two-valued
/// interpretations, tabulated over canonical indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharFunction {
    vocab: Arc<Vocabulary>,
    table: Vec<usize>,
}

impl CharFunction {
    /// Build from a table of canonical image indices.
    pub fn from_table(vocab: &Arc<Vocabulary>, table: Vec<usize>) -> Result<Self> {
        check_table_size(vocab, "characterization function")?;
        if table.len() != vocab.two_valued_count() {
            return Err(Error::TokenLength {
                expected: vocab.two_valued_count(),
                got: table.len(),
            });
        }
        if table.iter().any(|&w| w >= vocab.two_valued_count()) {
            return Err(Error::NotTwoValued);
        }
        Ok(CharFunction {
            vocab: Arc::clone(vocab),
            table,
        })
    }

    /// Build from token pairs such as `("tf", "ft")`; every two-valued
    /// interpretation must be covered exactly once.
    pub fn from_token_pairs<'a, I>(vocab: &Arc<Vocabulary>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        check_table_size(vocab, "characterization function")?;
        let mut table = vec![usize::MAX; vocab.two_valued_count()];
        for (from, to) in pairs {
            let from = Interpretation::parse(from, vocab)?
                .two_valued_index()
                .ok_or(Error::NotTwoValued)?;
            let to = Interpretation::parse(to, vocab)?
                .two_valued_index()
                .ok_or(Error::NotTwoValued)?;
            table[from] = to;
        }
        if table.iter().any(|&w| w == usize::MAX) {
            return Err(Error::NotFunctional);
        }
        CharFunction::from_table(vocab, table)
    }

    /// The characterization induced by an ADF: every statement of the image
    /// is the value of its acceptance condition.
    pub fn from_adf(adf: &Adf) -> Self {
        let vocab = adf.vocab();
        let n = vocab.size();
        let table = (0..vocab.two_valued_count())
            .map(|index| {
                (0..n).fold(0usize, |acc, statement| {
                    if adf.condition(statement).eval_index(index) {
                        acc | (1 << (n - 1 - statement))
                    } else {
                        acc
                    }
                })
            })
            .collect();
        CharFunction {
            vocab: Arc::clone(vocab),
            table,
        }
    }

    pub fn vocab(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    /// Canonical index of the image of interpretation `index`.
    pub fn image_index(&self, index: usize) -> usize {
        self.table[index]
    }

    /// Truth value the image assigns to `statement`.
    pub fn value(&self, index: usize, statement: usize) -> bool {
        self.table[index] & (self.vocab.bit(statement) as usize) != 0
    }

    pub fn apply(&self, interp: &Interpretation) -> Result<Interpretation> {
        if interp.vocab() != &self.vocab {
            return Err(Error::VocabularyMismatch);
        }
        let index = interp.two_valued_index().ok_or(Error::NotTwoValued)?;
        Ok(Interpretation::from_two_valued_index(
            &self.vocab,
            self.table[index],
        ))
    }

    /// The relation holding exactly this function's triples.
    pub fn to_relation(&self) -> CharRelation {
        let mut relation =
            CharRelation::empty(&self.vocab).expect("function table fits the size guard");
        for index in 0..self.vocab.two_valued_count() {
            for statement in 0..self.vocab.size() {
                relation.insert_triple(Triple::new(index, statement, self.value(index, statement)));
            }
        }
        relation
    }

    /// The ADF whose acceptance condition for each statement accepts exactly
    /// the interpretations whose image sets that statement to true.
    pub fn to_adf(&self) -> Adf {
        let n = self.vocab.size();
        let conditions = (0..n)
            .map(|statement| {
                AcceptanceCondition::from_fn(&self.vocab, |w| self.value(w, statement))
                    .expect("table size checked at construction")
            })
            .collect();
        Adf::new(&self.vocab, conditions).expect("one condition per statement")
    }

    /// Decide whether this function characterizes `target` under the given
    /// semantics. Preferred semantics has no characterization predicate and
    /// is handled by the dedicated search.
    pub fn is_characterization(
        &self,
        target: &InterpretationSet,
        sigma: Semantics,
    ) -> Result<bool> {
        if target.vocab() != &self.vocab {
            return Err(Error::VocabularyMismatch);
        }
        match sigma {
            Semantics::Preferred => Err(Error::PreferredCharacterization),
            Semantics::Model => {
                if target.iter().any(|v| !v.is_two_valued()) {
                    return Ok(false);
                }
                let fixed: BTreeSet<usize> = target
                    .iter()
                    .map(|v| v.two_valued_index().expect("checked two-valued"))
                    .collect();
                Ok((0..self.vocab.two_valued_count())
                    .all(|index| (self.table[index] == index) == fixed.contains(&index)))
            }
            Semantics::Admissible | Semantics::Complete => {
                for v in InterpretationSet::universe(&self.vocab).iter() {
                    if self.membership_condition(v, sigma) != target.contains(v) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// The per-interpretation membership condition of the admissible and
    /// complete characterization definitions.
    fn membership_condition(&self, v: &Interpretation, sigma: Semantics) -> bool {
        let n = self.vocab.size();
        let completions: Vec<usize> = v.completion_indices().collect();
        for statement in 0..n {
            match v.value(statement).to_bool() {
                Some(value) => {
                    // Boolean coordinates must be preserved on every completion
                    if completions.iter().any(|&w| self.value(w, statement) != value) {
                        return false;
                    }
                }
                None => {
                    // under complete, unknown coordinates need a witness for
                    // both truth values among the completions
                    if sigma == Semantics::Complete {
                        let mut seen_true = false;
                        let mut seen_false = false;
                        for &w in &completions {
                            if self.value(w, statement) {
                                seen_true = true;
                            } else {
                                seen_false = true;
                            }
                        }
                        if !(seen_true && seen_false) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Read a functional relation back into a knowledge base of the requested
/// formalism. The relation must be closed under the formalism's propagator
/// for the construction to be faithful; the AF and SETAF constructions
/// report unusable accepting sets as errors.
pub fn kb_from_char(relation: &CharRelation, kind: FormalismKind) -> Result<KnowledgeBase> {
    let function = relation.to_function().ok_or(Error::NotFunctional)?;
    let vocab = relation.vocab();
    let n = vocab.size();
    match kind {
        FormalismKind::Adf => Ok(KnowledgeBase::Adf(function.to_adf())),
        FormalismKind::Badf => {
            let base = function.to_adf();
            let mut supporting = BTreeSet::new();
            let mut attacking = BTreeSet::new();
            // polarity facts witnessed by the relation: flipping b from
            // false to true flips a accordingly somewhere
            for a in 0..n {
                for b in 0..n {
                    let bit = vocab.bit(b) as usize;
                    for w in 0..vocab.two_valued_count() {
                        if w & bit != 0 {
                            continue;
                        }
                        let without = function.value(w, a);
                        let with = function.value(w | bit, a);
                        if !without && with {
                            supporting.insert((b, a));
                        }
                        if without && !with {
                            attacking.insert((b, a));
                        }
                    }
                }
            }
            // drop witnessed pairs that are not actual dependency links and
            // validate the rest definitionally
            let links: BTreeSet<(usize, usize)> = base.links().into_iter().collect();
            supporting.retain(|link| links.contains(link));
            attacking.retain(|link| links.contains(link));
            Ok(KnowledgeBase::Badf(Badf::new(base, supporting, attacking)?))
        }
        FormalismKind::Af => {
            let mut attacks = BTreeSet::new();
            for a in 0..n {
                let accepting: Vec<usize> = (0..vocab.two_valued_count())
                    .filter(|&w| function.value(w, a))
                    .collect();
                let join = accepting.iter().fold(0usize, |acc, &w| acc | w);
                if accepting.is_empty() || !accepting.contains(&join) {
                    return Err(Error::NoTruthMaximum(vocab.name(a).to_string()));
                }
                for b in 0..n {
                    if join & vocab.bit(b) as usize == 0 {
                        attacks.insert((b, a));
                    }
                }
            }
            Ok(KnowledgeBase::Af(crate::frameworks::Af::new(
                vocab,
                attacks,
            )?))
        }
        FormalismKind::Setaf => {
            let mut attacks: BTreeSet<(BTreeSet<usize>, usize)> = BTreeSet::new();
            for a in 0..n {
                let accepting: Vec<usize> = (0..vocab.two_valued_count())
                    .filter(|&w| function.value(w, a))
                    .collect();
                if accepting.is_empty() {
                    return Err(Error::EmptyAttackSet(vocab.name(a).to_string()));
                }
                for clause in attack_clauses(vocab, &accepting) {
                    attacks.insert((clause, a));
                }
            }
            Ok(KnowledgeBase::Setaf(Setaf::new(vocab, attacks)?))
        }
    }
}

/// Attacking sets for one statement: the clauses of the subsumption-free
/// conjunctive normal form of the accepting set, obtained by distributing
/// over its truth-maximal elements.
fn attack_clauses(vocab: &Arc<Vocabulary>, accepting: &[usize]) -> Vec<BTreeSet<usize>> {
    let n = vocab.size();
    // truth-maximal accepting interpretations (mask containment order)
    let maximal: Vec<usize> = accepting
        .iter()
        .copied()
        .filter(|&w| {
            !accepting
                .iter()
                .any(|&other| other != w && other & w == w)
        })
        .collect();
    // each maximal element contributes the negated conjunction of its false
    // statements; a fully true element makes the condition tautologous
    let mut clause_sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    for &m in &maximal {
        let falses: Vec<usize> = (0..n)
            .filter(|&b| m & vocab.bit(b) as usize == 0)
            .collect();
        if falses.is_empty() {
            return Vec::new();
        }
        let mut next: Vec<BTreeSet<usize>> = Vec::new();
        for clause in &clause_sets {
            for &b in &falses {
                let mut extended = clause.clone();
                extended.insert(b);
                next.push(extended);
            }
        }
        clause_sets = minimize_clauses(next);
    }
    clause_sets
}

/// Remove duplicate and superset clauses.
fn minimize_clauses(clauses: Vec<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    let mut minimal: Vec<BTreeSet<usize>> = Vec::new();
    for clause in clauses {
        if minimal.iter().any(|kept| kept.is_subset(&clause)) {
            continue;
        }
        minimal.retain(|kept| !clause.is_subset(kept));
        minimal.push(clause);
    }
    minimal.sort();
    minimal.dedup();
    minimal
}
