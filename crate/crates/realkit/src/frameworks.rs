//! Knowledge bases (AF, SETAF, bipolar ADF, general ADF), the three-valued
//! consensus operator, and brute-force evaluation of the four semantics.
//!
//! Acceptance conditions are stored as explicit model sets over the full
//! vocabulary, indexed by the canonical two-valued index. Links are never
//! stored; dependencies and polarities are derived from the model sets.
//! The semantics scan enumerates all `3^|A|` interpretations and is guarded
//! by a configurable vocabulary limit — it is a verification oracle, not a
//! scalable reasoner.

use crate::error::{Error, Result};
use crate::interp::{Interpretation, InterpretationSet, Vocabulary};
use fixedbitset::FixedBitSet;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Default cap on the vocabulary size of the `3^|A|` semantics scan.
pub const DEFAULT_SEMANTICS_GUARD: usize = 6;

/// Vocabulary sizes beyond this cannot be tabulated (`2^|A|`-sized tables).
const MAX_TABLE_ATOMS: usize = 20;

pub(crate) fn check_table_size(vocab: &Vocabulary, operation: &'static str) -> Result<()> {
    if vocab.size() > MAX_TABLE_ATOMS {
        return Err(Error::AtomGuard {
            operation,
            atoms: vocab.size(),
            limit: MAX_TABLE_ATOMS,
        });
    }
    Ok(())
}

/// The four semantics handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semantics {
    Admissible,
    Complete,
    Preferred,
    Model,
}

impl Semantics {
    pub const ALL: [Semantics; 4] = [
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Preferred,
        Semantics::Model,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::Admissible => "adm",
            Semantics::Complete => "com",
            Semantics::Preferred => "prf",
            Semantics::Model => "mod",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adm" => Ok(Semantics::Admissible),
            "com" => Ok(Semantics::Complete),
            "prf" => Ok(Semantics::Preferred),
            "mod" => Ok(Semantics::Model),
            other => Err(Error::parse(0, format!("unknown semantics `{other}`"))),
        }
    }
}

/// The four formalisms, ordered by expressiveness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormalismKind {
    Af,
    Setaf,
    Badf,
    Adf,
}

impl FormalismKind {
    pub const ALL: [FormalismKind; 4] = [
        FormalismKind::Af,
        FormalismKind::Setaf,
        FormalismKind::Badf,
        FormalismKind::Adf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormalismKind::Af => "af",
            FormalismKind::Setaf => "setaf",
            FormalismKind::Badf => "badf",
            FormalismKind::Adf => "adf",
        }
    }
}

impl fmt::Display for FormalismKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl FromStr for FormalismKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "af" => Ok(FormalismKind::Af),
            "setaf" => Ok(FormalismKind::Setaf),
            "badf" => Ok(FormalismKind::Badf),
            "adf" => Ok(FormalismKind::Adf),
            other => Err(Error::parse(0, format!("unknown formalism `{other}`"))),
        }
    }
}

/// A Boolean acceptance condition, stored as the set of its two-valued
/// models (indexed canonically over the full vocabulary).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AcceptanceCondition {
    vocab: Arc<Vocabulary>,
    models: FixedBitSet,
}

impl AcceptanceCondition {
    pub fn contradiction(vocab: &Arc<Vocabulary>) -> Result<Self> {
        check_table_size(vocab, "acceptance condition table")?;
        Ok(AcceptanceCondition {
            vocab: Arc::clone(vocab),
            models: FixedBitSet::with_capacity(vocab.two_valued_count()),
        })
    }

    pub fn tautology(vocab: &Arc<Vocabulary>) -> Result<Self> {
        let mut cond = AcceptanceCondition::contradiction(vocab)?;
        cond.models.insert_range(..);
        Ok(cond)
    }

    /// Condition whose models are exactly the given canonical indices.
    pub fn from_model_indices<I>(vocab: &Arc<Vocabulary>, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut cond = AcceptanceCondition::contradiction(vocab)?;
        for index in indices {
            cond.models.insert(index);
        }
        Ok(cond)
    }

    /// Condition defined by a predicate on the canonical index.
    pub fn from_fn(vocab: &Arc<Vocabulary>, pred: impl Fn(usize) -> bool) -> Result<Self> {
        AcceptanceCondition::from_model_indices(
            vocab,
            (0..vocab.two_valued_count()).filter(|&w| pred(w)),
        )
    }

    /// Condition whose models are the members of `models` (all two-valued).
    pub fn from_models(models: &InterpretationSet) -> Result<Self> {
        let mut cond = AcceptanceCondition::contradiction(models.vocab())?;
        for m in models.iter() {
            let index = m.two_valued_index().ok_or(Error::NotTwoValued)?;
            cond.models.insert(index);
        }
        Ok(cond)
    }

    pub fn vocab(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    /// Evaluate on a two-valued interpretation over the same vocabulary.
    pub fn eval(&self, w: &Interpretation) -> Result<bool> {
        if w.vocab() != &self.vocab {
            return Err(Error::VocabularyMismatch);
        }
        let index = w.two_valued_index().ok_or(Error::NotTwoValued)?;
        Ok(self.models.contains(index))
    }

    pub(crate) fn eval_index(&self, index: usize) -> bool {
        self.models.contains(index)
    }

    pub fn model_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.models.ones()
    }

    pub fn model_count(&self) -> usize {
        self.models.count_ones(..)
    }

    /// Statements the condition actually depends on.
    pub fn parents(&self) -> Vec<usize> {
        let n = self.vocab.size();
        (0..n)
            .filter(|&b| {
                let bit = self.vocab.bit(b) as usize;
                (0..self.vocab.two_valued_count())
                    .any(|w| self.models.contains(w) != self.models.contains(w ^ bit))
            })
            .collect()
    }
}

/// Polarity of a link, per the definitional check over all interpretations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkPolarity {
    Supporting,
    Attacking,
    /// Both supporting and attacking: the source has no actual influence.
    Both,
    /// Neither: the link violates bipolarity.
    Neither,
}

/// An abstract dialectical framework: one acceptance condition per
/// statement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Adf {
    vocab: Arc<Vocabulary>,
    conditions: Vec<AcceptanceCondition>,
}

impl Adf {
    pub fn new(vocab: &Arc<Vocabulary>, conditions: Vec<AcceptanceCondition>) -> Result<Self> {
        if conditions.len() != vocab.size() {
            return Err(Error::TokenLength {
                expected: vocab.size(),
                got: conditions.len(),
            });
        }
        if conditions.iter().any(|c| c.vocab() != vocab) {
            return Err(Error::VocabularyMismatch);
        }
        Ok(Adf {
            vocab: Arc::clone(vocab),
            conditions,
        })
    }

    pub fn vocab(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    pub fn condition(&self, statement: usize) -> &AcceptanceCondition {
        &self.conditions[statement]
    }

    pub fn conditions(&self) -> &[AcceptanceCondition] {
        &self.conditions
    }

    /// All dependency links `(b, a)`: statement `a`'s condition depends on
    /// `b`.
    pub fn links(&self) -> Vec<(usize, usize)> {
        let mut links = Vec::new();
        for (a, cond) in self.conditions.iter().enumerate() {
            for b in cond.parents() {
                links.push((b, a));
            }
        }
        links.sort_unstable();
        links
    }

    /// Consensus value of each acceptance condition over all completions of
    /// `v`.
    pub fn gamma(&self, v: &Interpretation) -> Result<Interpretation> {
        if v.vocab() != &self.vocab {
            return Err(Error::VocabularyMismatch);
        }
        let (known, truth) = v.masks();
        let (known_out, truth_out) = self.gamma_masks(known, truth);
        Ok(Interpretation::from_masks(&self.vocab, known_out, truth_out))
    }

    /// Mask-level form of [`Adf::gamma`].
    pub(crate) fn gamma_masks(&self, known: u32, truth: u32) -> (u32, u32) {
        let n = self.vocab.size();
        let unknown = self.vocab.full_mask() & !known;
        let mut known_out = 0u32;
        let mut truth_out = 0u32;
        for a in 0..n {
            let cond = &self.conditions[a];
            let mut any_true = false;
            let mut any_false = false;
            let mut sub = 0u32;
            loop {
                if cond.eval_index((truth | sub) as usize) {
                    any_true = true;
                } else {
                    any_false = true;
                }
                if (any_true && any_false) || sub == unknown {
                    break;
                }
                sub = sub.wrapping_sub(unknown) & unknown;
            }
            let bit = self.vocab.bit(a);
            if any_true != any_false {
                known_out |= bit;
                if any_true {
                    truth_out |= bit;
                }
            }
        }
        (known_out, truth_out)
    }

    /// Brute-force semantics with the default scan guard.
    pub fn semantics(&self, sigma: Semantics) -> Result<InterpretationSet> {
        self.semantics_guarded(sigma, DEFAULT_SEMANTICS_GUARD)
    }

    /// Brute-force semantics: exhaustive scan of all `3^|A|`
    /// interpretations.
    pub fn semantics_guarded(&self, sigma: Semantics, max_atoms: usize) -> Result<InterpretationSet> {
        if self.vocab.size() > max_atoms {
            return Err(Error::AtomGuard {
                operation: "semantics scan",
                atoms: self.vocab.size(),
                limit: max_atoms,
            });
        }
        let members = self.semantics_masks(sigma);
        let mut set = InterpretationSet::empty(&self.vocab);
        for (known, truth) in members {
            set.insert(Interpretation::from_masks(&self.vocab, known, truth))
                .expect("same vocabulary");
        }
        Ok(set)
    }

    /// Unguarded mask-level semantics scan.
    pub(crate) fn semantics_masks(&self, sigma: Semantics) -> Vec<(u32, u32)> {
        let full = self.vocab.full_mask();
        match sigma {
            Semantics::Admissible => self
                .scan(|known, truth, gk, gt| known & gk == known && truth & known == gt & known),
            Semantics::Complete => {
                self.scan(|known, truth, gk, gt| known == gk && truth == gt)
            }
            Semantics::Model => self.scan(|known, truth, gk, gt| {
                known == full && known == gk && truth == gt
            }),
            Semantics::Preferred => {
                let admissible = self.semantics_masks(Semantics::Admissible);
                max_info_masks(&admissible)
            }
        }
    }

    fn scan(&self, keep: impl Fn(u32, u32, u32, u32) -> bool) -> Vec<(u32, u32)> {
        let mut result = Vec::new();
        for (known, truth) in all_tri_masks(self.vocab.size()) {
            let (gk, gt) = self.gamma_masks(known, truth);
            if keep(known, truth, gk, gt) {
                result.push((known, truth));
            }
        }
        result
    }

    /// Polarity of the pair `(b, a)` by checking both monotonicity
    /// implications over all interpretations.
    pub fn link_polarity(&self, b: usize, a: usize) -> LinkPolarity {
        let cond = &self.conditions[a];
        let bit = self.vocab.bit(b) as usize;
        let mut supporting = true;
        let mut attacking = true;
        for w in 0..self.vocab.two_valued_count() {
            if w & bit != 0 {
                continue;
            }
            let without = cond.eval_index(w);
            let with = cond.eval_index(w | bit);
            if without && !with {
                supporting = false;
            }
            if with && !without {
                attacking = false;
            }
        }
        match (supporting, attacking) {
            (true, true) => LinkPolarity::Both,
            (true, false) => LinkPolarity::Supporting,
            (false, true) => LinkPolarity::Attacking,
            (false, false) => LinkPolarity::Neither,
        }
    }

    /// The fragments this ADF's acceptance conditions fit into; always
    /// contains [`FormalismKind::Adf`].
    pub fn classify_fragment(&self) -> BTreeSet<FormalismKind> {
        let mut kinds = BTreeSet::from([FormalismKind::Adf]);
        let bipolar = self
            .links()
            .iter()
            .all(|&(b, a)| self.link_polarity(b, a) != LinkPolarity::Neither);
        if bipolar {
            kinds.insert(FormalismKind::Badf);
        }
        let setaf_shape = self.conditions.iter().all(|c| Adf::is_setaf_shape(self, c));
        if setaf_shape {
            kinds.insert(FormalismKind::Setaf);
            let af_shape = self.conditions.iter().all(|cond| {
                let models: Vec<usize> = cond.model_indices().collect();
                models
                    .iter()
                    .all(|&w1| models.iter().all(|&w2| cond.eval_index(w1 | w2)))
            });
            if af_shape {
                kinds.insert(FormalismKind::Af);
            }
        }
        kinds
    }

    /// SETAF-shaped model sets contain the all-false interpretation and are
    /// downward closed in the truth order.
    fn is_setaf_shape(&self, cond: &AcceptanceCondition) -> bool {
        if !cond.eval_index(0) {
            return false;
        }
        let n = self.vocab.size();
        cond.model_indices().all(|w| {
            (0..n).all(|i| {
                let bit = self.vocab.bit(i) as usize;
                w & bit == 0 || cond.eval_index(w & !bit)
            })
        })
    }
}

/// Every pair `(known, truth)` with `truth ⊆ known ⊆ full`.
pub(crate) fn all_tri_masks(n: usize) -> Vec<(u32, u32)> {
    let mut result = Vec::with_capacity(3usize.pow(n as u32));
    let mut digits = vec![0u8; n];
    loop {
        let mut known = 0u32;
        let mut truth = 0u32;
        for (i, &d) in digits.iter().enumerate() {
            let bit = 1u32 << (n - 1 - i);
            match d {
                0 => {}
                1 => {
                    known |= bit;
                    truth |= bit;
                }
                _ => known |= bit,
            }
        }
        result.push((known, truth));
        let mut i = n;
        loop {
            if i == 0 {
                return result;
            }
            i -= 1;
            if digits[i] < 2 {
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Mixed-radix index of a `(known, truth)` pair among all `3^n`
/// interpretations.
pub(crate) fn tri_index(n: usize, known: u32, truth: u32) -> usize {
    let mut index = 0usize;
    for i in 0..n {
        let bit = 1u32 << (n - 1 - i);
        let digit = if known & bit == 0 {
            0
        } else if truth & bit != 0 {
            1
        } else {
            2
        };
        index = index * 3 + digit;
    }
    index
}

/// `v1 ≤_i v2` on mask pairs.
pub(crate) fn info_leq_masks(v1: (u32, u32), v2: (u32, u32)) -> bool {
    v1.0 & v2.0 == v1.0 && v1.1 & v1.0 == v2.1 & v1.0
}

/// Information-maximal elements of a list of mask pairs.
pub(crate) fn max_info_masks(members: &[(u32, u32)]) -> Vec<(u32, u32)> {
    members
        .iter()
        .copied()
        .filter(|&v| {
            !members
                .iter()
                .any(|&w| w != v && info_leq_masks(v, w))
        })
        .collect()
}

/// A Dung argumentation framework: individual attacks between statements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Af {
    vocab: Arc<Vocabulary>,
    attacks: BTreeSet<(usize, usize)>,
}

impl Af {
    pub fn new<I>(vocab: &Arc<Vocabulary>, attacks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let attacks: BTreeSet<(usize, usize)> = attacks.into_iter().collect();
        for &(b, a) in &attacks {
            if b >= vocab.size() || a >= vocab.size() {
                return Err(Error::UnknownStatement(format!("#{}", b.max(a))));
            }
        }
        Ok(Af {
            vocab: Arc::clone(vocab),
            attacks,
        })
    }

    pub fn vocab(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    /// Attack pairs `(attacker, attacked)`.
    pub fn attacks(&self) -> &BTreeSet<(usize, usize)> {
        &self.attacks
    }

    /// The associated ADF: each statement accepts exactly when all of its
    /// attackers are false.
    pub fn to_adf(&self) -> Adf {
        let n = self.vocab.size();
        let conditions = (0..n)
            .map(|a| {
                let mut attacker_mask = 0usize;
                for &(b, target) in &self.attacks {
                    if target == a {
                        attacker_mask |= self.vocab.bit(b) as usize;
                    }
                }
                AcceptanceCondition::from_fn(&self.vocab, |w| w & attacker_mask == 0)
                    .expect("table size checked at construction")
            })
            .collect();
        Adf::new(&self.vocab, conditions).expect("one condition per statement")
    }
}

/// An argumentation framework with collective attacks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Setaf {
    vocab: Arc<Vocabulary>,
    attacks: BTreeSet<(BTreeSet<usize>, usize)>,
}

impl Setaf {
    pub fn new<I>(vocab: &Arc<Vocabulary>, attacks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BTreeSet<usize>, usize)>,
    {
        let attacks: BTreeSet<(BTreeSet<usize>, usize)> = attacks.into_iter().collect();
        for (source, target) in &attacks {
            if source.is_empty() {
                return Err(Error::EmptyAttackSet(
                    vocab.name(*target.min(&(vocab.size() - 1))).to_string(),
                ));
            }
            if *target >= vocab.size() || source.iter().any(|&b| b >= vocab.size()) {
                return Err(Error::UnknownStatement(format!("#{target}")));
            }
        }
        Ok(Setaf {
            vocab: Arc::clone(vocab),
            attacks,
        })
    }

    pub fn vocab(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    pub fn attacks(&self) -> &BTreeSet<(BTreeSet<usize>, usize)> {
        &self.attacks
    }

    fn attack_masks_on(&self, target: usize) -> Vec<u32> {
        self.attacks
            .iter()
            .filter(|(_, a)| *a == target)
            .map(|(source, _)| {
                source
                    .iter()
                    .fold(0u32, |mask, &b| mask | self.vocab.bit(b))
            })
            .collect()
    }

    /// The associated ADF: each statement accepts exactly when every
    /// attacking set contains a false member.
    pub fn to_adf(&self) -> Adf {
        let n = self.vocab.size();
        let full = self.vocab.full_mask() as usize;
        let conditions = (0..n)
            .map(|a| {
                let masks = self.attack_masks_on(a);
                AcceptanceCondition::from_fn(&self.vocab, |w| {
                    masks
                        .iter()
                        .all(|&mask| mask as usize & (full & !w) != 0)
                })
                .expect("table size checked at construction")
            })
            .collect();
        Adf::new(&self.vocab, conditions).expect("one condition per statement")
    }

    /// Direct evaluation of the acceptability definitions; an independent
    /// cross-check of the translation route.
    pub fn semantics(&self, sigma: Semantics) -> Result<InterpretationSet> {
        self.semantics_guarded(sigma, DEFAULT_SEMANTICS_GUARD)
    }

    pub fn semantics_guarded(&self, sigma: Semantics, max_atoms: usize) -> Result<InterpretationSet> {
        let n = self.vocab.size();
        if n > max_atoms {
            return Err(Error::AtomGuard {
                operation: "semantics scan",
                atoms: n,
                limit: max_atoms,
            });
        }
        let per_target: Vec<Vec<u32>> = (0..n).map(|a| self.attack_masks_on(a)).collect();
        let full = self.vocab.full_mask();
        // a is acceptable when every attacking set has a false member,
        // unacceptable when some attacking set is entirely true.
        let acceptable = |a: usize, known: u32, truth: u32| {
            per_target[a]
                .iter()
                .all(|&mask| mask & known & !truth != 0)
        };
        let unacceptable =
            |a: usize, truth: u32| per_target[a].iter().any(|&mask| mask & truth == mask);

        let admissible = |known: u32, truth: u32| {
            (0..n).all(|a| {
                let bit = self.vocab.bit(a);
                if known & bit == 0 {
                    true
                } else if truth & bit != 0 {
                    acceptable(a, known, truth)
                } else {
                    unacceptable(a, truth)
                }
            })
        };

        let members: Vec<(u32, u32)> = match sigma {
            Semantics::Admissible => all_tri_masks(n)
                .into_iter()
                .filter(|&(k, t)| admissible(k, t))
                .collect(),
            Semantics::Complete => all_tri_masks(n)
                .into_iter()
                .filter(|&(known, truth)| {
                    (0..n).all(|a| {
                        let bit = self.vocab.bit(a);
                        let is_true = known & bit != 0 && truth & bit != 0;
                        let is_false = known & bit != 0 && truth & bit == 0;
                        acceptable(a, known, truth) == is_true
                            && unacceptable(a, truth) == is_false
                    })
                })
                .collect(),
            Semantics::Model => all_tri_masks(n)
                .into_iter()
                .filter(|&(k, t)| k == full && admissible(k, t))
                .collect(),
            Semantics::Preferred => {
                let adm: Vec<(u32, u32)> = all_tri_masks(n)
                    .into_iter()
                    .filter(|&(k, t)| admissible(k, t))
                    .collect();
                max_info_masks(&adm)
            }
        };

        let mut set = InterpretationSet::empty(&self.vocab);
        for (known, truth) in members {
            set.insert(Interpretation::from_masks(&self.vocab, known, truth))
                .expect("same vocabulary");
        }
        Ok(set)
    }
}

/// A bipolar ADF: an ADF together with validated link polarities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Badf {
    base: Adf,
    supporting: BTreeSet<(usize, usize)>,
    attacking: BTreeSet<(usize, usize)>,
}

impl Badf {
    /// Validates that the claimed polarities hold definitionally and that
    /// every dependency link carries at least one polarity.
    pub fn new(
        base: Adf,
        supporting: BTreeSet<(usize, usize)>,
        attacking: BTreeSet<(usize, usize)>,
    ) -> Result<Self> {
        let name = |i: usize| base.vocab().name(i).to_string();
        for &(b, a) in &supporting {
            if !matches!(
                base.link_polarity(b, a),
                LinkPolarity::Supporting | LinkPolarity::Both
            ) {
                return Err(Error::NotBipolar(name(b), name(a)));
            }
        }
        for &(b, a) in &attacking {
            if !matches!(
                base.link_polarity(b, a),
                LinkPolarity::Attacking | LinkPolarity::Both
            ) {
                return Err(Error::NotBipolar(name(b), name(a)));
            }
        }
        for (b, a) in base.links() {
            if !supporting.contains(&(b, a)) && !attacking.contains(&(b, a)) {
                return Err(Error::NotBipolar(name(b), name(a)));
            }
        }
        Ok(Badf {
            base,
            supporting,
            attacking,
        })
    }

    /// Derive the polarity annotation from the acceptance conditions.
    pub fn from_adf(base: Adf) -> Result<Self> {
        let mut supporting = BTreeSet::new();
        let mut attacking = BTreeSet::new();
        for (b, a) in base.links() {
            match base.link_polarity(b, a) {
                LinkPolarity::Supporting => {
                    supporting.insert((b, a));
                }
                LinkPolarity::Attacking => {
                    attacking.insert((b, a));
                }
                LinkPolarity::Both => unreachable!("influencing links have a strict polarity"),
                LinkPolarity::Neither => {
                    return Err(Error::NotBipolar(
                        base.vocab().name(b).to_string(),
                        base.vocab().name(a).to_string(),
                    ));
                }
            }
        }
        Ok(Badf {
            base,
            supporting,
            attacking,
        })
    }

    pub fn base(&self) -> &Adf {
        &self.base
    }

    pub fn vocab(&self) -> &Arc<Vocabulary> {
        self.base.vocab()
    }

    pub fn supporting(&self) -> &BTreeSet<(usize, usize)> {
        &self.supporting
    }

    pub fn attacking(&self) -> &BTreeSet<(usize, usize)> {
        &self.attacking
    }
}

/// A knowledge base of any of the four formalisms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnowledgeBase {
    Af(Af),
    Setaf(Setaf),
    Badf(Badf),
    Adf(Adf),
}

impl KnowledgeBase {
    pub fn kind(&self) -> FormalismKind {
        match self {
            KnowledgeBase::Af(_) => FormalismKind::Af,
            KnowledgeBase::Setaf(_) => FormalismKind::Setaf,
            KnowledgeBase::Badf(_) => FormalismKind::Badf,
            KnowledgeBase::Adf(_) => FormalismKind::Adf,
        }
    }

    pub fn vocab(&self) -> &Arc<Vocabulary> {
        match self {
            KnowledgeBase::Af(af) => af.vocab(),
            KnowledgeBase::Setaf(setaf) => setaf.vocab(),
            KnowledgeBase::Badf(badf) => badf.vocab(),
            KnowledgeBase::Adf(adf) => adf.vocab(),
        }
    }

    /// View as an ADF (identity for ADFs, the bipolar base for BADFs, the
    /// standard translations for AFs and SETAFs).
    pub fn as_adf(&self) -> Adf {
        match self {
            KnowledgeBase::Af(af) => af.to_adf(),
            KnowledgeBase::Setaf(setaf) => setaf.to_adf(),
            KnowledgeBase::Badf(badf) => badf.base().clone(),
            KnowledgeBase::Adf(adf) => adf.clone(),
        }
    }

    /// Semantics via the ADF view, default guard.
    pub fn semantics(&self, sigma: Semantics) -> Result<InterpretationSet> {
        self.as_adf().semantics(sigma)
    }
}
