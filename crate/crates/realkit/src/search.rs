//! The propagate-and-guess realizability engine.
//!
//! A query asks for a knowledge base of one formalism whose semantics is
//! exactly the target interpretation set. For the admissible, complete and
//! model semantics the engine closes a characterization relation under the
//! propagation rules, guesses the first unassigned cell when propagation
//! stalls (true before false), and backtracks on incoherence. Preferred
//! realizability has no characterization of its own; it enumerates subsets
//! of the strictly-less-informative interpretations and asks for an
//! admissible realization of each augmented target.
//!
//! Verification mode (on by default) re-computes the semantics of every
//! returned knowledge base with the brute-force oracle and fails loudly on
//! mismatch.

use crate::charfun::{kb_from_char, CharRelation, RelationStatus, Triple};
use crate::error::{Error, Result};
use crate::frameworks::{FormalismKind, KnowledgeBase, Semantics};
use crate::interp::{Interpretation, InterpretationSet};
use crate::propagate::propagate_fixpoint;

/// Guard record for a realizability query.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest vocabulary accepted by [`realize`].
    pub max_atoms: usize,
    /// Largest vocabulary accepted by [`realize_prf`]; the subset
    /// enumeration is exponential in `3^|A|`.
    pub max_atoms_preferred: usize,
    /// Optional cap on the number of guesses across the whole query.
    pub node_budget: Option<u64>,
    /// Re-check every returned knowledge base with the semantics oracle.
    pub verify: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_atoms: 4,
            max_atoms_preferred: 3,
            node_budget: None,
            verify: true,
        }
    }
}

impl Limits {
    /// Same guards with both vocabulary caps raised to `atoms`.
    pub fn with_max_atoms(mut self, atoms: usize) -> Self {
        self.max_atoms = atoms;
        self.max_atoms_preferred = atoms;
        self
    }
}

/// A realizability question: formalism, semantics, target set, guards.
#[derive(Debug, Clone)]
pub struct RealizeQuery {
    pub kind: FormalismKind,
    pub sigma: Semantics,
    pub target: InterpretationSet,
    pub limits: Limits,
}

impl RealizeQuery {
    pub fn new(kind: FormalismKind, sigma: Semantics, target: InterpretationSet) -> Self {
        RealizeQuery {
            kind,
            sigma,
            target,
            limits: Limits::default(),
        }
    }
}

/// A realizing knowledge base together with its witnessing functional
/// relation.
#[derive(Debug, Clone)]
pub struct Realization {
    pub kb: KnowledgeBase,
    pub relation: CharRelation,
}

/// Answer to a realizability query.
#[derive(Debug, Clone)]
pub enum RealizeOutcome {
    Realized(Realization),
    Unrealizable,
}

impl RealizeOutcome {
    pub fn is_realized(&self) -> bool {
        matches!(self, RealizeOutcome::Realized(_))
    }

    pub fn realization(&self) -> Option<&Realization> {
        match self {
            RealizeOutcome::Realized(r) => Some(r),
            RealizeOutcome::Unrealizable => None,
        }
    }
}

struct Budget {
    remaining: Option<u64>,
    limit: u64,
}

impl Budget {
    fn new(limit: Option<u64>) -> Self {
        Budget {
            remaining: limit,
            limit: limit.unwrap_or(0),
        }
    }

    fn spend(&mut self) -> Result<()> {
        match &mut self.remaining {
            None => Ok(()),
            Some(0) => Err(Error::BudgetExceeded(self.limit)),
            Some(n) => {
                *n -= 1;
                Ok(())
            }
        }
    }
}

fn oracle_check(
    kb: &KnowledgeBase,
    sigma: Semantics,
    target: &InterpretationSet,
) -> Result<()> {
    let atoms = target.vocab().size();
    let computed = kb.as_adf().semantics_guarded(sigma, atoms)?;
    if &computed == target {
        Ok(())
    } else {
        Err(Error::VerificationFailed {
            semantics: sigma.as_str(),
            expected: target.to_string(),
            got: computed.to_string(),
        })
    }
}

/// Depth-first search for one functional closure extending `relation`.
fn search_one(
    kind: FormalismKind,
    sigma: Semantics,
    target: &InterpretationSet,
    relation: CharRelation,
    budget: &mut Budget,
) -> Result<Option<CharRelation>> {
    let (closure, status) = propagate_fixpoint(kind, sigma, target, &relation)?;
    match status {
        RelationStatus::Incoherent => Ok(None),
        RelationStatus::Functional => Ok(Some(closure)),
        RelationStatus::Partial => {
            let (index, statement) = closure
                .first_unassigned()
                .expect("partial relations have an unassigned cell");
            budget.spend()?;
            for value in [true, false] {
                let mut guessed = closure.clone();
                guessed.insert_triple(Triple::new(index, statement, value));
                if let Some(found) = search_one(kind, sigma, target, guessed, budget)? {
                    return Ok(Some(found));
                }
            }
            Ok(None)
        }
    }
}

/// Decide realizability and construct a witness knowledge base.
pub fn realize(query: &RealizeQuery) -> Result<RealizeOutcome> {
    let atoms = query.target.vocab().size();
    if query.sigma == Semantics::Preferred {
        return realize_prf(query.kind, &query.target, &query.limits);
    }
    if atoms > query.limits.max_atoms {
        return Err(Error::AtomGuard {
            operation: "realize",
            atoms,
            limit: query.limits.max_atoms,
        });
    }
    let mut budget = Budget::new(query.limits.node_budget);
    let start = CharRelation::empty(query.target.vocab())?;
    match search_one(query.kind, query.sigma, &query.target, start, &mut budget)? {
        None => Ok(RealizeOutcome::Unrealizable),
        Some(relation) => {
            let kb = kb_from_char(&relation, query.kind)?;
            if query.limits.verify {
                oracle_check(&kb, query.sigma, &query.target)?;
            }
            Ok(RealizeOutcome::Realized(Realization { kb, relation }))
        }
    }
}

/// Lazily enumerated realizations; one per functional relation reachable by
/// exhaustive branching. Empty exactly when [`realize`] answers no.
pub struct RealizeAll {
    inner: AllState,
}

enum AllState {
    /// Admissible, complete or model semantics: a depth-first stack of
    /// relation states still to be expanded.
    Direct {
        kind: FormalismKind,
        sigma: Semantics,
        target: InterpretationSet,
        verify: bool,
        stack: Vec<CharRelation>,
        budget: Budget,
        failed: bool,
    },
    /// Preferred semantics: subsets of the strictly-below set, each driving
    /// an inner admissible enumeration.
    Preferred {
        kind: FormalismKind,
        target: InterpretationSet,
        limits: Limits,
        below: Vec<Interpretation>,
        subsets: SubsetsByCardinality,
        current: Option<Box<RealizeAll>>,
        failed: bool,
    },
    Done,
}

impl RealizeAll {
    fn empty() -> Self {
        RealizeAll {
            inner: AllState::Done,
        }
    }
}

/// Start the exhaustive enumeration for a query.
pub fn realize_all(query: &RealizeQuery) -> Result<RealizeAll> {
    let atoms = query.target.vocab().size();
    if query.sigma == Semantics::Preferred {
        if atoms > query.limits.max_atoms_preferred {
            return Err(Error::AtomGuard {
                operation: "realize (preferred)",
                atoms,
                limit: query.limits.max_atoms_preferred,
            });
        }
        if query.target.max_info() != query.target {
            return Ok(RealizeAll::empty());
        }
        let below = strictly_below(&query.target);
        let subsets = SubsetsByCardinality::new(below.len());
        return Ok(RealizeAll {
            inner: AllState::Preferred {
                kind: query.kind,
                target: query.target.clone(),
                limits: query.limits.clone(),
                below,
                subsets,
                current: None,
                failed: false,
            },
        });
    }
    if atoms > query.limits.max_atoms {
        return Err(Error::AtomGuard {
            operation: "realize",
            atoms,
            limit: query.limits.max_atoms,
        });
    }
    let start = CharRelation::empty(query.target.vocab())?;
    Ok(RealizeAll {
        inner: AllState::Direct {
            kind: query.kind,
            sigma: query.sigma,
            target: query.target.clone(),
            verify: query.limits.verify,
            stack: vec![start],
            budget: Budget::new(query.limits.node_budget),
            failed: false,
        },
    })
}

impl Iterator for RealizeAll {
    type Item = Result<Realization>;

    fn next(&mut self) -> Option<Self::Item> {
        match &mut self.inner {
            AllState::Done => None,
            AllState::Direct {
                kind,
                sigma,
                target,
                verify,
                stack,
                budget,
                failed,
            } => {
                if *failed {
                    return None;
                }
                while let Some(relation) = stack.pop() {
                    let (closure, status) =
                        match propagate_fixpoint(*kind, *sigma, target, &relation) {
                            Ok(result) => result,
                            Err(e) => {
                                *failed = true;
                                return Some(Err(e));
                            }
                        };
                    match status {
                        RelationStatus::Incoherent => continue,
                        RelationStatus::Functional => {
                            let kb = match kb_from_char(&closure, *kind) {
                                Ok(kb) => kb,
                                Err(e) => {
                                    *failed = true;
                                    return Some(Err(e));
                                }
                            };
                            if *verify {
                                if let Err(e) = oracle_check(&kb, *sigma, target) {
                                    *failed = true;
                                    return Some(Err(e));
                                }
                            }
                            return Some(Ok(Realization {
                                kb,
                                relation: closure,
                            }));
                        }
                        RelationStatus::Partial => {
                            if let Err(e) = budget.spend() {
                                *failed = true;
                                return Some(Err(e));
                            }
                            let (index, statement) = closure
                                .first_unassigned()
                                .expect("partial relations have an unassigned cell");
                            // push false first so the true branch pops first
                            for value in [false, true] {
                                let mut guessed = closure.clone();
                                guessed.insert_triple(Triple::new(index, statement, value));
                                stack.push(guessed);
                            }
                        }
                    }
                }
                self.inner = AllState::Done;
                None
            }
            AllState::Preferred {
                kind,
                target,
                limits,
                below,
                subsets,
                current,
                failed,
            } => {
                if *failed {
                    return None;
                }
                loop {
                    if let Some(inner) = current {
                        match inner.next() {
                            Some(Ok(found)) => {
                                if limits.verify {
                                    if let Err(e) =
                                        oracle_check(&found.kb, Semantics::Preferred, target)
                                    {
                                        *failed = true;
                                        return Some(Err(e));
                                    }
                                }
                                return Some(Ok(found));
                            }
                            Some(Err(e)) => {
                                *failed = true;
                                return Some(Err(e));
                            }
                            None => *current = None,
                        }
                    }
                    let mask = match subsets.next() {
                        Some(mask) => mask,
                        None => {
                            self.inner = AllState::Done;
                            return None;
                        }
                    };
                    let augmented = match augment(target, below, mask) {
                        Ok(set) => set,
                        Err(e) => {
                            *failed = true;
                            return Some(Err(e));
                        }
                    };
                    let inner_query = RealizeQuery {
                        kind: *kind,
                        sigma: Semantics::Admissible,
                        target: augmented,
                        limits: limits.clone(),
                    };
                    match realize_all(&inner_query) {
                        Ok(iter) => *current = Some(Box::new(iter)),
                        Err(e) => {
                            *failed = true;
                            return Some(Err(e));
                        }
                    }
                }
            }
        }
    }
}

/// Interpretations strictly below some member of the target, canonically
/// ordered.
fn strictly_below(target: &InterpretationSet) -> Vec<Interpretation> {
    let vocab = target.vocab();
    InterpretationSet::universe(vocab)
        .iter()
        .filter(|v| {
            target.iter().any(|member| {
                *v != member && v.info_leq(member).expect("shared vocabulary")
            })
        })
        .cloned()
        .collect()
}

fn augment(
    target: &InterpretationSet,
    below: &[Interpretation],
    mask: u64,
) -> Result<InterpretationSet> {
    let mut set = target.clone();
    for (i, interp) in below.iter().enumerate() {
        if mask & (1 << i) != 0 {
            set.insert(interp.clone())?;
        }
    }
    Ok(set)
}

/// Bit masks over `m` elements ordered by cardinality, ascending within one
/// cardinality.
struct SubsetsByCardinality {
    m: usize,
    cardinality: usize,
    current: Option<u64>,
}

impl SubsetsByCardinality {
    fn new(m: usize) -> Self {
        assert!(m < 64, "subset enumeration domain too large");
        SubsetsByCardinality {
            m,
            cardinality: 0,
            current: Some(0),
        }
    }
}

impl Iterator for SubsetsByCardinality {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.cardinality > self.m {
                return None;
            }
            if let Some(mask) = self.current {
                // Gosper's hack: next mask of equal cardinality
                self.current = if mask == 0 {
                    None
                } else {
                    let low = mask & mask.wrapping_neg();
                    let ripple = mask + low;
                    let next = ripple | (((mask ^ ripple) / low) >> 2);
                    (next < (1u64 << self.m)).then_some(next)
                };
                return Some(mask);
            }
            self.cardinality += 1;
            self.current = (self.cardinality <= self.m)
                .then_some(((1u64 << self.cardinality) - 1) as u64);
        }
    }
}

/// Preferred realizability: enumerate admissible supersets per the
/// corollary reducing preferred to admissible characterizations.
pub fn realize_prf(
    kind: FormalismKind,
    target: &InterpretationSet,
    limits: &Limits,
) -> Result<RealizeOutcome> {
    let atoms = target.vocab().size();
    if atoms > limits.max_atoms_preferred {
        return Err(Error::AtomGuard {
            operation: "realize (preferred)",
            atoms,
            limit: limits.max_atoms_preferred,
        });
    }
    // preferred sets are information-antichains
    if target.max_info() != *target {
        return Ok(RealizeOutcome::Unrealizable);
    }
    let below = strictly_below(target);
    let mut budget = Budget::new(limits.node_budget);
    for mask in SubsetsByCardinality::new(below.len()) {
        let augmented = augment(target, &below, mask)?;
        let start = CharRelation::empty(target.vocab())?;
        if let Some(relation) = search_one(
            kind,
            Semantics::Admissible,
            &augmented,
            start,
            &mut budget,
        )? {
            let kb = kb_from_char(&relation, kind)?;
            if limits.verify {
                oracle_check(&kb, Semantics::Admissible, &augmented)?;
                oracle_check(&kb, Semantics::Preferred, target)?;
            }
            return Ok(RealizeOutcome::Realized(Realization { kb, relation }));
        }
    }
    Ok(RealizeOutcome::Unrealizable)
}
