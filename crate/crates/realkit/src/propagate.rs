//! Propagation rules deriving forced characterization triples.
//!
//! Each rule is sound and monotone: given the desired interpretation set
//! and a partial relation, it derives only triples that every completed
//! characterization extending the relation must contain — for the rule's
//! semantics, or for the acceptance-condition shape of its formalism. The
//! fixpoint driver runs the applicable rules round by round until nothing
//! new appears or the relation becomes incoherent.
//!
//! The not-in rules fire only at a "last candidate": when the current
//! relation already rules out every other way of excluding an unwanted
//! interpretation, the one remaining cell is forced. The complete-semantics
//! rule for unwanted interpretations at an unknown coordinate derives the
//! value that makes all completions agree there (the agreeing value, not
//! its negation), which is the reading validated by the exhaustive
//! soundness oracle.

use crate::charfun::{CharRelation, RelationStatus, Triple};
use crate::error::{Error, Result};
use crate::frameworks::{all_tri_masks, tri_index, FormalismKind, Semantics};
use crate::interp::InterpretationSet;
use fixedbitset::FixedBitSet;

/// Precomputed view of the target set used by all rules.
struct TargetView {
    n: usize,
    full: u32,
    members: Vec<(u32, u32)>,
    member_mask: FixedBitSet,
    contains_all_unknown: bool,
    all_two_valued: bool,
}

impl TargetView {
    fn new(target: &InterpretationSet) -> Self {
        let n = target.vocab().size();
        let mut member_mask = FixedBitSet::with_capacity(3usize.pow(n as u32));
        let mut members = Vec::with_capacity(target.len());
        for v in target.iter() {
            let (known, truth) = v.masks();
            members.push((known, truth));
            member_mask.insert(tri_index(n, known, truth));
        }
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let contains_all_unknown = member_mask_contains(&member_mask, n, 0, 0);
        let all_two_valued = members.iter().all(|&(known, _)| known == full);
        TargetView {
            n,
            full,
            members,
            member_mask,
            contains_all_unknown,
            all_two_valued,
        }
    }

    fn contains(&self, known: u32, truth: u32) -> bool {
        member_mask_contains(&self.member_mask, self.n, known, truth)
    }
}

fn member_mask_contains(mask: &FixedBitSet, n: usize, known: u32, truth: u32) -> bool {
    mask.contains(tri_index(n, known, truth))
}

/// Ascending submasks of `mask`, including 0 and `mask` itself.
fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let sub = next?;
        next = if sub == mask {
            None
        } else {
            Some(sub.wrapping_sub(mask) & mask)
        };
        Some(sub)
    })
}

/// Statement indices whose bit is set in `mask`.
fn statements_in(mask: u32, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&i| mask & (1u32 << (n - 1 - i)) != 0)
}

fn push_unique(out: &mut Vec<Triple>, triple: Triple) {
    if !out.contains(&triple) {
        out.push(triple);
    }
}

fn rule_adm_in(view: &TargetView, _relation: &CharRelation) -> Vec<Triple> {
    let mut out = Vec::new();
    for &(known, truth) in &view.members {
        let unknown = view.full & !known;
        for sub in submasks(unknown) {
            let completion = (truth | sub) as usize;
            for a in statements_in(known, view.n) {
                let bit = 1u32 << (view.n - 1 - a);
                push_unique(&mut out, Triple::new(completion, a, truth & bit != 0));
            }
        }
    }
    out
}

/// Pairs (Boolean statement, completion) of an interpretation, with a flag
/// telling whether the relation already contains the conforming triple.
fn boolean_pairs(
    view: &TargetView,
    relation: &CharRelation,
    known: u32,
    truth: u32,
) -> Vec<(usize, usize, bool, bool)> {
    let unknown = view.full & !known;
    let mut pairs = Vec::new();
    for a in statements_in(known, view.n) {
        let bit = 1u32 << (view.n - 1 - a);
        let value = truth & bit != 0;
        for sub in submasks(unknown) {
            let completion = (truth | sub) as usize;
            pairs.push((a, completion, value, relation.contains(completion, a, value)));
        }
    }
    pairs
}

fn rule_adm_not_in(view: &TargetView, relation: &CharRelation) -> Vec<Triple> {
    let mut out = Vec::new();
    for &(known, truth) in &all_tri_masks(view.n) {
        if known == 0 || view.contains(known, truth) {
            continue;
        }
        let pairs = boolean_pairs(view, relation, known, truth);
        let nonconforming: Vec<usize> = pairs
            .iter()
            .enumerate()
            .filter(|(_, &(_, _, _, conforms))| !conforms)
            .map(|(i, _)| i)
            .collect();
        match nonconforming.len() {
            // every exclusion candidate is already ruled out: force the
            // contradiction everywhere
            0 => {
                for &(a, completion, value, _) in &pairs {
                    push_unique(&mut out, Triple::new(completion, a, !value));
                }
            }
            1 => {
                let (a, completion, value, _) = pairs[nonconforming[0]];
                push_unique(&mut out, Triple::new(completion, a, !value));
            }
            _ => {}
        }
    }
    out
}

fn clash_triples(view: &TargetView) -> Vec<Triple> {
    let mut out = Vec::with_capacity((1 << view.n) * view.n * 2);
    for completion in 0..1usize << view.n {
        for a in 0..view.n {
            out.push(Triple::new(completion, a, true));
            out.push(Triple::new(completion, a, false));
        }
    }
    out
}

fn rule_adm_clash(view: &TargetView, _relation: &CharRelation) -> Vec<Triple> {
    if view.contains_all_unknown {
        Vec::new()
    } else {
        clash_triples(view)
    }
}

fn rule_com_in_u(view: &TargetView, relation: &CharRelation) -> Vec<Triple> {
    let mut out = Vec::new();
    for &(known, truth) in &view.members {
        let unknown = view.full & !known;
        let completions: Vec<usize> =
            submasks(unknown).map(|sub| (truth | sub) as usize).collect();
        for a in statements_in(unknown, view.n) {
            for &completion in &completions {
                for x in [true, false] {
                    let all_others_agree = completions
                        .iter()
                        .all(|&other| other == completion || relation.contains(other, a, x));
                    if all_others_agree {
                        push_unique(&mut out, Triple::new(completion, a, !x));
                    }
                }
            }
        }
    }
    out
}

/// Every unknown coordinate (optionally excluding one) already has both an
/// accepting and a rejecting witness among the completions.
fn unknown_witnesses_present(
    view: &TargetView,
    relation: &CharRelation,
    known: u32,
    truth: u32,
    skip: Option<usize>,
) -> bool {
    let unknown = view.full & !known;
    statements_in(unknown, view.n).all(|b| {
        if skip == Some(b) {
            return true;
        }
        let mut seen_true = false;
        let mut seen_false = false;
        for sub in submasks(unknown) {
            let completion = (truth | sub) as usize;
            seen_true |= relation.contains(completion, b, true);
            seen_false |= relation.contains(completion, b, false);
            if seen_true && seen_false {
                return true;
            }
        }
        false
    })
}

fn rule_com_not_in_tf(view: &TargetView, relation: &CharRelation) -> Vec<Triple> {
    let mut out = Vec::new();
    for &(known, truth) in &all_tri_masks(view.n) {
        if known == 0 || view.contains(known, truth) {
            continue;
        }
        if !unknown_witnesses_present(view, relation, known, truth, None) {
            continue;
        }
        let pairs = boolean_pairs(view, relation, known, truth);
        let nonconforming: Vec<usize> = pairs
            .iter()
            .enumerate()
            .filter(|(_, &(_, _, _, conforms))| !conforms)
            .map(|(i, _)| i)
            .collect();
        match nonconforming.len() {
            0 => {
                for &(a, completion, value, _) in &pairs {
                    push_unique(&mut out, Triple::new(completion, a, !value));
                }
            }
            1 => {
                let (a, completion, value, _) = pairs[nonconforming[0]];
                push_unique(&mut out, Triple::new(completion, a, !value));
            }
            _ => {}
        }
    }
    out
}

fn rule_com_not_in_u(view: &TargetView, relation: &CharRelation) -> Vec<Triple> {
    let mut out = Vec::new();
    for &(known, truth) in &all_tri_masks(view.n) {
        if known == view.full || view.contains(known, truth) {
            continue;
        }
        // excluding via a Boolean coordinate must already be impossible
        if !boolean_pairs(view, relation, known, truth)
            .iter()
            .all(|&(_, _, _, conforms)| conforms)
        {
            continue;
        }
        // when every unknown coordinate also has both witnesses, no
        // extension can exclude this interpretation any more; force the
        // contradiction (the printed rules miss this for the all-unknown
        // interpretation, whose exclusion the guessing can silently close)
        if unknown_witnesses_present(view, relation, known, truth, None) {
            out.extend(clash_triples(view));
            return out;
        }
        let unknown = view.full & !known;
        let completions: Vec<usize> =
            submasks(unknown).map(|sub| (truth | sub) as usize).collect();
        for a in statements_in(unknown, view.n) {
            if !unknown_witnesses_present(view, relation, known, truth, Some(a)) {
                continue;
            }
            for &completion in &completions {
                for x in [true, false] {
                    let all_others_agree = completions
                        .iter()
                        .all(|&other| other == completion || relation.contains(other, a, x));
                    if all_others_agree {
                        push_unique(&mut out, Triple::new(completion, a, x));
                    }
                }
            }
        }
    }
    out
}

fn rule_mod_in(view: &TargetView, _relation: &CharRelation) -> Vec<Triple> {
    let mut out = Vec::new();
    for &(known, truth) in &view.members {
        if known != view.full {
            continue;
        }
        for a in 0..view.n {
            let bit = 1u32 << (view.n - 1 - a);
            push_unique(&mut out, Triple::new(truth as usize, a, truth & bit != 0));
        }
    }
    out
}

fn rule_mod_not_in(view: &TargetView, relation: &CharRelation) -> Vec<Triple> {
    let mut out = Vec::new();
    for w in 0..1u32 << view.n {
        if view.contains(view.full, w) {
            continue;
        }
        let conforms = |a: usize| {
            let bit = 1u32 << (view.n - 1 - a);
            relation.contains(w as usize, a, w & bit != 0)
        };
        let nonconforming: Vec<usize> = (0..view.n).filter(|&a| !conforms(a)).collect();
        match nonconforming.len() {
            0 => {
                for a in 0..view.n {
                    let bit = 1u32 << (view.n - 1 - a);
                    push_unique(&mut out, Triple::new(w as usize, a, w & bit == 0));
                }
            }
            1 => {
                let a = nonconforming[0];
                let bit = 1u32 << (view.n - 1 - a);
                push_unique(&mut out, Triple::new(w as usize, a, w & bit == 0));
            }
            _ => {}
        }
    }
    out
}

fn rule_mod_clash(view: &TargetView, _relation: &CharRelation) -> Vec<Triple> {
    if view.all_two_valued {
        Vec::new()
    } else {
        clash_triples(view)
    }
}

fn rule_setaf(view: &TargetView, relation: &CharRelation) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 0..view.n {
        // the all-false interpretation satisfies every negative clause
        push_unique(&mut out, Triple::new(0, a, true));
    }
    for w in 0..1u32 << view.n {
        for a in 0..view.n {
            if relation.contains(w as usize, a, true) {
                // accepting sets are closed downwards in the truth order
                for sub in submasks(w) {
                    if sub != w {
                        push_unique(&mut out, Triple::new(sub as usize, a, true));
                    }
                }
            }
            if relation.contains(w as usize, a, false) {
                // rejecting sets are closed upwards
                for sup in submasks(view.full & !w) {
                    if sup != 0 {
                        push_unique(&mut out, Triple::new((w | sup) as usize, a, false));
                    }
                }
            }
        }
    }
    out
}

fn rule_af(view: &TargetView, relation: &CharRelation) -> Vec<Triple> {
    let mut out = rule_setaf(view, relation);
    for a in 0..view.n {
        let accepting: Vec<u32> = (0..1u32 << view.n)
            .filter(|&w| relation.contains(w as usize, a, true))
            .collect();
        for &w1 in &accepting {
            for &w2 in &accepting {
                push_unique(&mut out, Triple::new((w1 | w2) as usize, a, true));
            }
        }
    }
    out
}

fn rule_badf(view: &TargetView, relation: &CharRelation) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 0..view.n {
        for b in 0..view.n {
            let bit = 1u32 << (view.n - 1 - b);
            for x in [true, false] {
                // a witness fixes the polarity of b towards a: flipping b
                // from false to true flips a from ¬x to x somewhere
                let witnessed = (0..1u32 << view.n).any(|w| {
                    w & bit == 0
                        && relation.contains(w as usize, a, !x)
                        && relation.contains((w | bit) as usize, a, x)
                });
                if !witnessed {
                    continue;
                }
                for v in 0..1u32 << view.n {
                    if relation.contains(v as usize, a, x) {
                        push_unique(&mut out, Triple::new((v | bit) as usize, a, x));
                    }
                }
            }
        }
    }
    out
}

type Rule = fn(&TargetView, &CharRelation) -> Vec<Triple>;

/// A named sound and monotone derivation rule.
#[derive(Clone, Copy)]
pub struct Propagator {
    name: &'static str,
    rule: Rule,
}

impl std::fmt::Debug for Propagator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Propagator").field("name", &self.name).finish()
    }
}

impl Propagator {
    pub fn name(&self) -> &'static str {
        self.name
    }

    /// Triples this rule derives from the target set and current relation.
    pub fn derive(
        &self,
        target: &InterpretationSet,
        relation: &CharRelation,
    ) -> Result<Vec<Triple>> {
        check_vocabs(target, relation)?;
        let view = TargetView::new(target);
        Ok((self.rule)(&view, relation))
    }
}

const ADM_RULES: [Propagator; 3] = [
    Propagator { name: "adm-in", rule: rule_adm_in },
    Propagator { name: "adm-not-in", rule: rule_adm_not_in },
    Propagator { name: "adm-clash", rule: rule_adm_clash },
];

const COM_RULES: [Propagator; 4] = [
    Propagator { name: "com-in-tf", rule: rule_adm_in },
    Propagator { name: "com-in-u", rule: rule_com_in_u },
    Propagator { name: "com-not-in-tf", rule: rule_com_not_in_tf },
    Propagator { name: "com-not-in-u", rule: rule_com_not_in_u },
];

const MOD_RULES: [Propagator; 3] = [
    Propagator { name: "mod-in", rule: rule_mod_in },
    Propagator { name: "mod-not-in", rule: rule_mod_not_in },
    Propagator { name: "mod-clash", rule: rule_mod_clash },
];

/// The semantics-specific rules; preferred realizability never reaches
/// propagation (it is reduced to admissible by the search).
pub fn semantics_propagators(sigma: Semantics) -> Result<&'static [Propagator]> {
    match sigma {
        Semantics::Admissible => Ok(&ADM_RULES),
        Semantics::Complete => Ok(&COM_RULES),
        Semantics::Model => Ok(&MOD_RULES),
        Semantics::Preferred => Err(Error::PreferredCharacterization),
    }
}

/// The formalism-specific rule; general ADFs impose no restriction.
pub fn formalism_propagator(kind: FormalismKind) -> Option<Propagator> {
    match kind {
        FormalismKind::Adf => None,
        FormalismKind::Setaf => Some(Propagator { name: "setaf", rule: rule_setaf }),
        FormalismKind::Af => Some(Propagator { name: "af", rule: rule_af }),
        FormalismKind::Badf => Some(Propagator { name: "badf", rule: rule_badf }),
    }
}

/// All rules applicable to a query: semantics rules plus the formalism rule.
pub fn propagators(kind: FormalismKind, sigma: Semantics) -> Result<Vec<Propagator>> {
    let mut rules: Vec<Propagator> = semantics_propagators(sigma)?.to_vec();
    rules.extend(formalism_propagator(kind));
    Ok(rules)
}

fn check_vocabs(target: &InterpretationSet, relation: &CharRelation) -> Result<()> {
    if target.vocab() == relation.vocab() {
        Ok(())
    } else {
        Err(Error::VocabularyMismatch)
    }
}

fn run_rules(
    rules: &[Propagator],
    view: &TargetView,
    relation: &CharRelation,
) -> Vec<Triple> {
    let mut union: Vec<Triple> = Vec::new();
    for rule in rules {
        for triple in (rule.rule)(view, relation) {
            if !relation.contains_triple(&triple) {
                push_unique(&mut union, triple);
            }
        }
    }
    union.sort_unstable();
    union
}

/// Union of the three admissible-semantics rules.
pub fn propagate_adm(target: &InterpretationSet, relation: &CharRelation) -> Result<Vec<Triple>> {
    check_vocabs(target, relation)?;
    Ok(run_rules(&ADM_RULES, &TargetView::new(target), relation))
}

/// Union of the four complete-semantics rules.
pub fn propagate_com(target: &InterpretationSet, relation: &CharRelation) -> Result<Vec<Triple>> {
    check_vocabs(target, relation)?;
    Ok(run_rules(&COM_RULES, &TargetView::new(target), relation))
}

/// Union of the three model-semantics rules.
pub fn propagate_mod(target: &InterpretationSet, relation: &CharRelation) -> Result<Vec<Triple>> {
    check_vocabs(target, relation)?;
    Ok(run_rules(&MOD_RULES, &TargetView::new(target), relation))
}

/// Output of the formalism rule (empty for general ADFs).
pub fn propagate_formalism(
    kind: FormalismKind,
    target: &InterpretationSet,
    relation: &CharRelation,
) -> Result<Vec<Triple>> {
    check_vocabs(target, relation)?;
    match formalism_propagator(kind) {
        None => Ok(Vec::new()),
        Some(rule) => Ok(run_rules(&[rule], &TargetView::new(target), relation)),
    }
}

/// Close the relation under all applicable rules.
///
/// Rules run round by round against a snapshot of the relation; the round's
/// union is inserted at once, incoherence stops the iteration early.
pub fn propagate_fixpoint(
    kind: FormalismKind,
    sigma: Semantics,
    target: &InterpretationSet,
    start: &CharRelation,
) -> Result<(CharRelation, RelationStatus)> {
    check_vocabs(target, start)?;
    let rules = propagators(kind, sigma)?;
    let view = TargetView::new(target);
    let mut relation = start.clone();
    loop {
        let delta = run_rules(&rules, &view, &relation);
        for triple in &delta {
            relation.insert_triple(*triple);
        }
        if relation.is_incoherent() {
            return Ok((relation, RelationStatus::Incoherent));
        }
        if delta.is_empty() {
            let status = relation.status();
            return Ok((relation, status));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charfun::CharFunction;
    use crate::interp::{Interpretation, Vocabulary};
    use std::sync::Arc;

    fn vocab(names: &[&str]) -> Arc<Vocabulary> {
        Vocabulary::new(names.iter().copied()).unwrap()
    }

    fn set(v: &Arc<Vocabulary>, tokens: &[&str]) -> InterpretationSet {
        InterpretationSet::from_tokens(v, tokens.iter().copied()).unwrap()
    }

    fn triple(v: &Arc<Vocabulary>, token: &str, statement: &str, value: bool) -> Triple {
        Triple::new(
            Interpretation::parse(token, v)
                .unwrap()
                .two_valued_index()
                .unwrap(),
            v.index_of(statement).unwrap(),
            value,
        )
    }

    fn relation_with(v: &Arc<Vocabulary>, triples: &[(&str, &str, bool)]) -> CharRelation {
        let mut relation = CharRelation::empty(v).unwrap();
        for &(token, statement, value) in triples {
            relation.insert_triple(triple(v, token, statement, value));
        }
        relation
    }

    #[test]
    fn adm_membership_rule_covers_all_boolean_coordinates() {
        let v = vocab(&["a", "b", "c"]);
        let target = set(&v, &["uuu", "tff", "ftu"]);
        let empty = CharRelation::empty(&v).unwrap();
        let derived = propagate_adm(&target, &empty).unwrap();
        for expected in [
            triple(&v, "tff", "a", true),
            triple(&v, "tff", "b", false),
            triple(&v, "tff", "c", false),
            triple(&v, "ftt", "a", false),
            triple(&v, "ftt", "b", true),
            triple(&v, "ftf", "a", false),
            triple(&v, "ftf", "b", true),
        ] {
            assert!(derived.contains(&expected), "missing {expected:?}");
        }
    }

    #[test]
    fn adm_clash_fires_without_the_all_unknown_member() {
        let v = vocab(&["a"]);
        let target = set(&v, &["t"]);
        let empty = CharRelation::empty(&v).unwrap();
        let derived = propagate_adm(&target, &empty).unwrap();
        assert!(derived.contains(&triple(&v, "t", "a", true)));
        assert!(derived.contains(&triple(&v, "t", "a", false)));
        let (_, status) =
            propagate_fixpoint(FormalismKind::Adf, Semantics::Admissible, &target, &empty)
                .unwrap();
        assert_eq!(status, RelationStatus::Incoherent);
    }

    #[test]
    fn adm_exclusion_rule_fires_at_the_last_candidate() {
        let v = vocab(&["a", "b"]);
        let target = set(&v, &["uu", "tf"]);
        // all conforming triples for the non-member tu except at (tt, a)
        let relation = relation_with(&v, &[("tf", "a", true)]);
        let derived = propagate_adm(&target, &relation).unwrap();
        assert!(derived.contains(&triple(&v, "tt", "a", false)));
    }

    #[test]
    fn com_membership_rule_derives_the_missing_witness() {
        let v = vocab(&["a", "b"]);
        let target = set(&v, &["tu"]);
        let relation = relation_with(&v, &[("tt", "b", true)]);
        let derived = propagate_com(&target, &relation).unwrap();
        assert!(derived.contains(&triple(&v, "tf", "b", false)));
    }

    #[test]
    fn com_exclusion_rule_fires_at_the_last_boolean_candidate() {
        let v = vocab(&["a", "b"]);
        let target = set(&v, &["uu"]);
        let relation = relation_with(&v, &[("tf", "b", false)]);
        let derived = propagate_com(&target, &relation).unwrap();
        assert!(derived.contains(&triple(&v, "tf", "a", false)));
    }

    #[test]
    fn com_exclusion_rule_forces_agreement_at_unknown_coordinates() {
        let v = vocab(&["a", "b"]);
        // exclude tu: with a conforming everywhere, all completions must
        // agree on b; the other completion already maps b to true
        let target = set(&v, &["uu"]);
        let relation = relation_with(&v, &[("tt", "a", true), ("tf", "a", true), ("tt", "b", true)]);
        let derived = propagate_com(&target, &relation).unwrap();
        assert!(derived.contains(&triple(&v, "tf", "b", true)));
    }

    #[test]
    fn mod_membership_rule_pins_fixed_points() {
        let v = vocab(&["a", "b"]);
        let target = set(&v, &["tf"]);
        let empty = CharRelation::empty(&v).unwrap();
        let derived = propagate_mod(&target, &empty).unwrap();
        assert_eq!(
            derived,
            vec![triple(&v, "tf", "a", true), triple(&v, "tf", "b", false)]
        );
    }

    #[test]
    fn mod_clash_fires_on_non_two_valued_members() {
        let v = vocab(&["a", "b"]);
        let target = set(&v, &["uu"]);
        let empty = CharRelation::empty(&v).unwrap();
        let derived = propagate_mod(&target, &empty).unwrap();
        assert_eq!(derived.len(), 16);
        let (_, status) =
            propagate_fixpoint(FormalismKind::Adf, Semantics::Model, &target, &empty).unwrap();
        assert_eq!(status, RelationStatus::Incoherent);
    }

    #[test]
    fn mod_exclusion_rule_flips_the_last_coordinate() {
        let v = vocab(&["a", "b"]);
        let target = set(&v, &["tf"]);
        let relation = relation_with(&v, &[("tt", "b", true)]);
        let derived = propagate_mod(&target, &relation).unwrap();
        assert!(derived.contains(&triple(&v, "tt", "a", false)));
    }

    #[test]
    fn setaf_rule_accepts_the_all_false_interpretation() {
        let v = vocab(&["a", "b"]);
        let target = set(&v, &["uu"]);
        let empty = CharRelation::empty(&v).unwrap();
        let derived = propagate_formalism(FormalismKind::Setaf, &target, &empty).unwrap();
        assert_eq!(
            derived,
            vec![triple(&v, "ff", "a", true), triple(&v, "ff", "b", true)]
        );
        assert!(propagate_formalism(FormalismKind::Adf, &target, &empty)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn af_rule_closes_accepting_sets_under_joins() {
        let v = vocab(&["a", "b"]);
        let target = set(&v, &["uu"]);
        let relation = relation_with(&v, &[("tf", "a", true), ("ft", "a", true)]);
        let derived = propagate_formalism(FormalismKind::Af, &target, &relation).unwrap();
        assert!(derived.contains(&triple(&v, "tt", "a", true)));
    }

    #[test]
    fn badf_rule_applies_witnessed_polarities() {
        let v = vocab(&["a", "b"]);
        let target = set(&v, &["uu"]);
        let relation = relation_with(
            &v,
            &[("ff", "a", false), ("ft", "a", true), ("tf", "a", true)],
        );
        let derived = propagate_formalism(FormalismKind::Badf, &target, &relation).unwrap();
        assert!(derived.contains(&triple(&v, "tt", "a", true)));
    }

    #[test]
    fn fixpoint_examples() {
        let v3 = vocab(&["a", "b", "c"]);
        let empty3 = CharRelation::empty(&v3).unwrap();
        // no all-unknown member: admissible realizability fails immediately
        let (_, status) = propagate_fixpoint(
            FormalismKind::Adf,
            Semantics::Admissible,
            &set(&v3, &["tff", "ftu"]),
            &empty3,
        )
        .unwrap();
        assert_eq!(status, RelationStatus::Incoherent);

        // the admissible run on the complete-semantics example target
        let (_, status) = propagate_fixpoint(
            FormalismKind::Adf,
            Semantics::Admissible,
            &set(&v3, &["uuu", "fuu", "uuf", "ftf"]),
            &empty3,
        )
        .unwrap();
        assert_eq!(status, RelationStatus::Incoherent);

        // over one statement the empty model-semantics target is fully
        // forced: the exclusion rule's last-candidate condition is vacuous,
        // so both interpretations flip
        let v1 = vocab(&["a"]);
        let empty1 = CharRelation::empty(&v1).unwrap();
        let (closure, status) = propagate_fixpoint(
            FormalismKind::Adf,
            Semantics::Model,
            &InterpretationSet::empty(&v1),
            &empty1,
        )
        .unwrap();
        assert_eq!(status, RelationStatus::Functional);
        assert!(closure.contains_triple(&triple(&v1, "t", "a", false)));
        assert!(closure.contains_triple(&triple(&v1, "f", "a", true)));

        // with two statements nothing is forced yet: search must guess
        let v2 = vocab(&["a", "b"]);
        let empty2 = CharRelation::empty(&v2).unwrap();
        let (closure, status) = propagate_fixpoint(
            FormalismKind::Adf,
            Semantics::Model,
            &InterpretationSet::empty(&v2),
            &empty2,
        )
        .unwrap();
        assert_eq!(status, RelationStatus::Partial);
        assert!(closure.is_empty());
    }

    #[test]
    fn preferred_never_reaches_propagation() {
        let v = vocab(&["a"]);
        assert!(matches!(
            propagate_fixpoint(
                FormalismKind::Adf,
                Semantics::Preferred,
                &set(&v, &["t"]),
                &CharRelation::empty(&v).unwrap(),
            ),
            Err(Error::PreferredCharacterization)
        ));
    }

    /// Every subset of the 16 possible triples over one statement, viewed as
    /// a relation; used for exhaustive rule checks at one statement.
    fn all_relations(v: &Arc<Vocabulary>) -> Vec<CharRelation> {
        let n = v.size();
        let cells = v.two_valued_count() * n;
        let mut out = Vec::new();
        for mask in 0..1usize << (2 * cells) {
            let mut relation = CharRelation::empty(v).unwrap();
            for cell in 0..cells {
                if mask & (1 << (2 * cell)) != 0 {
                    relation.insert_triple(Triple::new(cell / n, cell % n, true));
                }
                if mask & (1 << (2 * cell + 1)) != 0 {
                    relation.insert_triple(Triple::new(cell / n, cell % n, false));
                }
            }
            out.push(relation);
        }
        out
    }

    fn all_functions(v: &Arc<Vocabulary>) -> Vec<CharFunction> {
        let count = v.two_valued_count();
        let mut out = Vec::new();
        let mut table = vec![0usize; count];
        loop {
            out.push(CharFunction::from_table(v, table.clone()).unwrap());
            let mut i = count;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if table[i] + 1 < count {
                    table[i] += 1;
                    break;
                }
                table[i] = 0;
            }
        }
    }

    fn all_subsets(v: &Arc<Vocabulary>) -> Vec<InterpretationSet> {
        let mut sets = vec![InterpretationSet::empty(v)];
        for interp in InterpretationSet::universe(v).iter() {
            let mut extended = Vec::new();
            for s in &sets {
                let mut bigger = s.clone();
                bigger.insert(interp.clone()).unwrap();
                extended.push(bigger);
            }
            sets.extend(extended);
        }
        sets
    }

    /// Exhaustive soundness at one statement: anything a semantics rule
    /// derives is contained in every total characterization of the target
    /// that extends the relation. The formalism rules are sound relative to
    /// functions whose induced conditions have the formalism's shape.
    #[test]
    fn rules_are_sound_for_one_statement() {
        let v = vocab(&["a"]);
        let functions = all_functions(&v);
        let relations = all_relations(&v);
        let subsets = all_subsets(&v);
        for target in &subsets {
            for relation in &relations {
                for sigma in [Semantics::Admissible, Semantics::Complete, Semantics::Model] {
                    let extending: Vec<&CharFunction> = functions
                        .iter()
                        .filter(|f| {
                            f.is_characterization(target, sigma).unwrap()
                                && relation
                                    .triples()
                                    .iter()
                                    .all(|t| f.value(t.interp_index, t.statement) == t.value)
                        })
                        .collect();
                    for rule in semantics_propagators(sigma).unwrap() {
                        for derived in rule.derive(target, relation).unwrap() {
                            for f in &extending {
                                assert_eq!(
                                    f.value(derived.interp_index, derived.statement),
                                    derived.value,
                                    "{} unsound: {derived:?} target {target} relation {:?}",
                                    rule.name(),
                                    relation.triples(),
                                );
                            }
                        }
                    }
                    for kind in [FormalismKind::Af, FormalismKind::Setaf, FormalismKind::Badf] {
                        let rule = formalism_propagator(kind).unwrap();
                        for derived in rule.derive(target, relation).unwrap() {
                            for f in &extending {
                                if !f.to_adf().classify_fragment().contains(&kind) {
                                    continue;
                                }
                                assert_eq!(
                                    f.value(derived.interp_index, derived.statement),
                                    derived.value,
                                    "{} unsound for {kind}: {derived:?}",
                                    rule.name(),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    /// Monotonicity in the relation argument, sampled over two statements.
    #[test]
    fn rules_are_monotone_in_the_relation() {
        let v = vocab(&["a", "b"]);
        let target = set(&v, &["uu", "tf", "ft"]);
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rand_cell = |limit: usize| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % limit
        };
        for _ in 0..200 {
            let mut small = CharRelation::empty(&v).unwrap();
            for _ in 0..rand_cell(6) {
                small.insert_triple(Triple::new(rand_cell(4), rand_cell(2), rand_cell(2) == 0));
            }
            let mut large = small.clone();
            for _ in 0..rand_cell(6) {
                large.insert_triple(Triple::new(rand_cell(4), rand_cell(2), rand_cell(2) == 0));
            }
            for rule in propagators(FormalismKind::Badf, Semantics::Complete).unwrap() {
                let from_small = rule.derive(&target, &small).unwrap();
                let from_large = rule.derive(&target, &large).unwrap();
                for t in &from_small {
                    assert!(
                        from_large.contains(t),
                        "{} not monotone at {t:?}",
                        rule.name()
                    );
                }
            }
        }
    }

    /// Running any applicable rule on a coherent fixpoint adds nothing new.
    #[test]
    fn fixpoints_are_idempotent() {
        let v = vocab(&["a", "b"]);
        for (kind, sigma, tokens) in [
            (FormalismKind::Adf, Semantics::Admissible, vec!["uu", "tf"]),
            (FormalismKind::Af, Semantics::Model, vec!["tf", "ft"]),
            (FormalismKind::Setaf, Semantics::Complete, vec!["uu"]),
            (FormalismKind::Badf, Semantics::Admissible, vec!["uu", "tf", "ft"]),
        ] {
            let target = set(&v, &tokens.iter().copied().collect::<Vec<_>>());
            let start = CharRelation::empty(&v).unwrap();
            let (closure, status) = propagate_fixpoint(kind, sigma, &target, &start).unwrap();
            if status == RelationStatus::Incoherent {
                continue;
            }
            for rule in propagators(kind, sigma).unwrap() {
                for t in rule.derive(&target, &closure).unwrap() {
                    assert!(closure.contains_triple(&t));
                }
            }
        }
    }
}
