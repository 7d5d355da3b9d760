//! Exhaustive knowledge-base enumeration, brute-force signatures, and
//! expressiveness comparison.
//!
//! The signature of a formalism under a semantics is the family of all
//! interpretation sets its knowledge bases can produce. Signatures are
//! computed by enumerating every knowledge base over the vocabulary and
//! evaluating the semantics oracle — feasible only at desk scale, which is
//! exactly what grounds the acceptance tests and the expressiveness
//! reports. Per-set membership questions at larger sizes go through the
//! solver instead ([`is_realizable`]).

use crate::error::{Error, Result};
use crate::frameworks::{Adf, AcceptanceCondition, Badf, FormalismKind, KnowledgeBase, Semantics};
use crate::frameworks::Af;
use crate::frameworks::Setaf;
use crate::interp::{Interpretation, InterpretationSet, Vocabulary};
use crate::search::{realize, Limits, RealizeQuery};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// Default enumeration guard for AFs and SETAFs.
pub const DEFAULT_AF_ENUM_GUARD: usize = 3;
/// Default enumeration guard for ADFs and bipolar ADFs.
pub const DEFAULT_ADF_ENUM_GUARD: usize = 2;

/// Default enumeration guard of a formalism.
pub fn default_enum_guard(kind: FormalismKind) -> usize {
    match kind {
        FormalismKind::Af | FormalismKind::Setaf => DEFAULT_AF_ENUM_GUARD,
        FormalismKind::Badf | FormalismKind::Adf => DEFAULT_ADF_ENUM_GUARD,
    }
}

/// Hard cap keeping the enumeration code within 64-bit counters.
fn representable_cap(kind: FormalismKind, n: usize) -> bool {
    match kind {
        FormalismKind::Af => n * n <= 32,
        FormalismKind::Setaf => n * ((1usize << n) - 1) <= 32,
        FormalismKind::Badf | FormalismKind::Adf => n * (1usize << n) <= 32,
    }
}

/// Every knowledge base of the formalism over the vocabulary, exactly once,
/// under the default enumeration guard.
pub fn enumerate_kbs(kind: FormalismKind, vocab: &Arc<Vocabulary>) -> Result<KbIter> {
    enumerate_kbs_with_limit(kind, vocab, default_enum_guard(kind))
}

/// Enumeration with an explicit vocabulary cap (still subject to the
/// representational hard cap).
pub fn enumerate_kbs_with_limit(
    kind: FormalismKind,
    vocab: &Arc<Vocabulary>,
    max_atoms: usize,
) -> Result<KbIter> {
    let n = vocab.size();
    if n > max_atoms || !representable_cap(kind, n) {
        return Err(Error::AtomGuard {
            operation: "knowledge-base enumeration",
            atoms: n,
            limit: max_atoms,
        });
    }
    let state = match kind {
        FormalismKind::Af => IterState::Af { next: 0 },
        FormalismKind::Setaf => {
            let mut possible = Vec::new();
            for target in 0..n {
                for source_mask in 1..vocab.two_valued_count() {
                    let source: BTreeSet<usize> = (0..n)
                        .filter(|&b| source_mask & (vocab.bit(b) as usize) != 0)
                        .collect();
                    possible.push((source, target));
                }
            }
            IterState::Setaf { possible, next: 0 }
        }
        FormalismKind::Adf => IterState::Adf { next: 0 },
        FormalismKind::Badf => IterState::Badf { next: 0 },
    };
    Ok(KbIter {
        vocab: Arc::clone(vocab),
        state,
    })
}

/// Lazy stream of knowledge bases; see [`enumerate_kbs`].
pub struct KbIter {
    vocab: Arc<Vocabulary>,
    state: IterState,
}

enum IterState {
    Af { next: u64 },
    Setaf {
        possible: Vec<(BTreeSet<usize>, usize)>,
        next: u64,
    },
    Adf { next: u64 },
    Badf { next: u64 },
}

impl KbIter {
    fn adf_from_code(vocab: &Arc<Vocabulary>, code: u64) -> Adf {
        let n = vocab.size();
        let bits = vocab.two_valued_count();
        let conditions = (0..n)
            .map(|statement| {
                let model_mask = (code >> (statement * bits)) & ((1u64 << bits) - 1);
                AcceptanceCondition::from_fn(vocab, |w| model_mask & (1 << w) != 0)
                    .expect("within the representational cap")
            })
            .collect();
        Adf::new(vocab, conditions).expect("one condition per statement")
    }
}

impl Iterator for KbIter {
    type Item = KnowledgeBase;

    fn next(&mut self) -> Option<KnowledgeBase> {
        let n = self.vocab.size();
        match &mut self.state {
            IterState::Af { next } => {
                if *next >= 1u64 << (n * n) {
                    return None;
                }
                let code = *next;
                *next += 1;
                let attacks = (0..n * n)
                    .filter(|i| code & (1 << i) != 0)
                    .map(|i| (i / n, i % n));
                Some(KnowledgeBase::Af(
                    Af::new(&self.vocab, attacks).expect("indices in range"),
                ))
            }
            IterState::Setaf { possible, next } => {
                if *next >= 1u64 << possible.len() {
                    return None;
                }
                let code = *next;
                *next += 1;
                let attacks = possible
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| code & (1 << i) != 0)
                    .map(|(_, attack)| attack.clone());
                Some(KnowledgeBase::Setaf(
                    Setaf::new(&self.vocab, attacks).expect("non-empty sources in range"),
                ))
            }
            IterState::Adf { next } => {
                if *next >= 1u64 << (n * self.vocab.two_valued_count()) {
                    return None;
                }
                let code = *next;
                *next += 1;
                Some(KnowledgeBase::Adf(KbIter::adf_from_code(&self.vocab, code)))
            }
            IterState::Badf { next } => {
                let count = 1u64 << (n * self.vocab.two_valued_count());
                while *next < count {
                    let code = *next;
                    *next += 1;
                    let adf = KbIter::adf_from_code(&self.vocab, code);
                    if adf.classify_fragment().contains(&FormalismKind::Badf) {
                        let badf =
                            Badf::from_adf(adf).expect("classification guarantees bipolarity");
                        return Some(KnowledgeBase::Badf(badf));
                    }
                }
                None
            }
        }
    }
}

/// The family of interpretation sets a formalism produces under a
/// semantics, over one vocabulary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub kind: FormalismKind,
    pub sigma: Semantics,
    vocab: Arc<Vocabulary>,
    sets: BTreeSet<InterpretationSet>,
}

impl Signature {
    pub fn vocab(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    /// Members in canonical order (cardinality, then member sequence).
    pub fn sets(&self) -> impl Iterator<Item = &InterpretationSet> {
        self.sets.iter()
    }

    pub fn contains(&self, set: &InterpretationSet) -> bool {
        self.sets.contains(set)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn is_subset_of(&self, other: &Signature) -> bool {
        self.sets.is_subset(&other.sets)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.sets.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", rendered.join(" "))
    }
}

/// Signature by full enumeration under the default guard.
pub fn brute_signature(
    kind: FormalismKind,
    sigma: Semantics,
    vocab: &Arc<Vocabulary>,
) -> Result<Signature> {
    brute_signature_with_limit(kind, sigma, vocab, default_enum_guard(kind))
}

/// Signature by full enumeration with an explicit vocabulary cap.
pub fn brute_signature_with_limit(
    kind: FormalismKind,
    sigma: Semantics,
    vocab: &Arc<Vocabulary>,
    max_atoms: usize,
) -> Result<Signature> {
    // dedupe at the mask level before building interpretation sets
    let mut seen: BTreeSet<Vec<(u32, u32)>> = BTreeSet::new();
    for kb in enumerate_kbs_with_limit(kind, vocab, max_atoms)? {
        let mut members = kb.as_adf().semantics_masks(sigma);
        members.sort_unstable();
        seen.insert(members);
    }
    let sets = seen
        .into_iter()
        .map(|members| {
            InterpretationSet::from_members(
                vocab,
                members
                    .into_iter()
                    .map(|(known, truth)| Interpretation::from_masks(vocab, known, truth)),
            )
            .expect("masks over the same vocabulary")
        })
        .collect();
    Ok(Signature {
        kind,
        sigma,
        vocab: Arc::clone(vocab),
        sets,
    })
}

/// Solver-backed membership test: is the set realizable at all? Useful
/// where full enumeration is out of range.
pub fn is_realizable(
    kind: FormalismKind,
    sigma: Semantics,
    target: &InterpretationSet,
    limits: &Limits,
) -> Result<bool> {
    let query = RealizeQuery {
        kind,
        sigma,
        target: target.clone(),
        limits: limits.clone(),
    };
    Ok(realize(&query)?.is_realized())
}

/// Outcome of a signature comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignatureOrder {
    Equal,
    LeftStrictlyLess,
    RightStrictlyLess,
    Incomparable,
}

impl fmt::Display for SignatureOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            SignatureOrder::Equal => "equal",
            SignatureOrder::LeftStrictlyLess => "left-strictly-less",
            SignatureOrder::RightStrictlyLess => "right-strictly-less",
            SignatureOrder::Incomparable => "incomparable",
        };
        write!(f, "{text}")
    }
}

/// Comparison verdict with witnesses for each strict direction.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub order: SignatureOrder,
    /// A set realizable on the left but not the right, if any.
    pub left_only: Option<InterpretationSet>,
    /// A set realizable on the right but not the left, if any.
    pub right_only: Option<InterpretationSet>,
}

/// Compare two signatures over the same vocabulary by inclusion.
pub fn compare(left: &Signature, right: &Signature) -> Result<Comparison> {
    if left.vocab() != right.vocab() {
        return Err(Error::VocabularyMismatch);
    }
    let left_only = left.sets().find(|s| !right.contains(s)).cloned();
    let right_only = right.sets().find(|s| !left.contains(s)).cloned();
    let order = match (&left_only, &right_only) {
        (None, None) => SignatureOrder::Equal,
        (None, Some(_)) => SignatureOrder::LeftStrictlyLess,
        (Some(_), None) => SignatureOrder::RightStrictlyLess,
        (Some(_), Some(_)) => SignatureOrder::Incomparable,
    };
    Ok(Comparison {
        order,
        left_only,
        right_only,
    })
}

/// Compute both signatures and compare them.
pub fn compare_computed(
    left: (FormalismKind, Semantics),
    right: (FormalismKind, Semantics),
    vocab: &Arc<Vocabulary>,
    max_atoms: usize,
) -> Result<Comparison> {
    let left_sig = brute_signature_with_limit(left.0, left.1, vocab, max_atoms)?;
    let right_sig = brute_signature_with_limit(right.0, right.1, vocab, max_atoms)?;
    compare(&left_sig, &right_sig)
}

/// Non-empty model-semantics sets that are not preferred-realizable in the
/// same formalism, in canonical order.
pub fn mod_without_prf_witnesses(
    kind: FormalismKind,
    vocab: &Arc<Vocabulary>,
    max_atoms: usize,
) -> Result<Vec<InterpretationSet>> {
    let models = brute_signature_with_limit(kind, Semantics::Model, vocab, max_atoms)?;
    let preferred = brute_signature_with_limit(kind, Semantics::Preferred, vocab, max_atoms)?;
    Ok(models
        .sets()
        .filter(|s| !s.is_empty() && !preferred.contains(s))
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(n: usize) -> Arc<Vocabulary> {
        Vocabulary::lettered(n).unwrap()
    }

    fn set(v: &Arc<Vocabulary>, tokens: &[&str]) -> InterpretationSet {
        InterpretationSet::from_tokens(v, tokens.iter().copied()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let v = letters(2);
        assert_eq!(enumerate_kbs(FormalismKind::Af, &v).unwrap().count(), 16);
        assert_eq!(enumerate_kbs(FormalismKind::Adf, &v).unwrap().count(), 256);
        assert_eq!(enumerate_kbs(FormalismKind::Setaf, &v).unwrap().count(), 64);
        // bipolar ADFs are a strict subset of all ADFs
        let badfs = enumerate_kbs(FormalismKind::Badf, &v).unwrap().count();
        assert!(0 < badfs && badfs < 256);
    }

    #[test]
    fn enumeration_guards() {
        let v = letters(3);
        assert!(enumerate_kbs(FormalismKind::Af, &v).is_ok());
        assert!(matches!(
            enumerate_kbs(FormalismKind::Adf, &v),
            Err(Error::AtomGuard { .. })
        ));
        assert!(enumerate_kbs_with_limit(FormalismKind::Adf, &v, 3).is_ok());
        // the representational cap binds even with a raised limit
        let v4 = letters(4);
        assert!(matches!(
            enumerate_kbs_with_limit(FormalismKind::Setaf, &v4, 4),
            Err(Error::AtomGuard { .. })
        ));
    }

    #[test]
    fn unary_signature_displays() {
        let v = letters(1);
        let sig = |kind, sigma| brute_signature(kind, sigma, &v).unwrap();
        let family = |tokens_list: &[&[&str]]| -> BTreeSet<InterpretationSet> {
            tokens_list.iter().map(|tokens| set(&v, tokens)).collect()
        };

        let af_adm = sig(FormalismKind::Af, Semantics::Admissible);
        assert_eq!(af_adm.sets, family(&[&["u"], &["u", "t"]]));
        assert_eq!(af_adm.sets, sig(FormalismKind::Setaf, Semantics::Admissible).sets);

        let af_mod = sig(FormalismKind::Af, Semantics::Model);
        assert_eq!(af_mod.sets, family(&[&[], &["t"]]));

        let adf_com = sig(FormalismKind::Adf, Semantics::Complete);
        assert_eq!(adf_com.sets, family(&[&["u"], &["t"], &["f"], &["u", "t", "f"]]));
        assert_eq!(adf_com.sets, sig(FormalismKind::Badf, Semantics::Complete).sets);
    }

    #[test]
    fn comparison_examples() {
        let v = letters(1);
        // different semantics are incomparable: {u,t} vs {t}
        let c = compare_computed(
            (FormalismKind::Af, Semantics::Admissible),
            (FormalismKind::Af, Semantics::Complete),
            &v,
            1,
        )
        .unwrap();
        assert_eq!(c.order, SignatureOrder::Incomparable);
        assert_eq!(c.left_only.unwrap(), set(&v, &["u", "t"]));
        assert_eq!(c.right_only.unwrap(), set(&v, &["t"]));

        // bipolar ADFs strictly extend SETAFs under every semantics
        let c = compare_computed(
            (FormalismKind::Setaf, Semantics::Model),
            (FormalismKind::Badf, Semantics::Model),
            &v,
            1,
        )
        .unwrap();
        assert_eq!(c.order, SignatureOrder::LeftStrictlyLess);
        assert!(c.left_only.is_none());
        // {t,f} is bipolar-realizable but not collective-attack-realizable
        let badf_mod = brute_signature(FormalismKind::Badf, Semantics::Model, &v).unwrap();
        let setaf_mod = brute_signature(FormalismKind::Setaf, Semantics::Model, &v).unwrap();
        let witness = set(&v, &["t", "f"]);
        assert!(badf_mod.contains(&witness) && !setaf_mod.contains(&witness));

        let equal = compare_computed(
            (FormalismKind::Af, Semantics::Preferred),
            (FormalismKind::Setaf, Semantics::Preferred),
            &v,
            1,
        )
        .unwrap();
        assert_eq!(equal.order, SignatureOrder::Equal);
    }

    #[test]
    fn expressiveness_chain_is_monotone() {
        for n in 1..=2 {
            let v = letters(n);
            for sigma in Semantics::ALL {
                let af = brute_signature(FormalismKind::Af, sigma, &v).unwrap();
                let setaf = brute_signature(FormalismKind::Setaf, sigma, &v).unwrap();
                let badf = brute_signature(FormalismKind::Badf, sigma, &v).unwrap();
                let adf = brute_signature(FormalismKind::Adf, sigma, &v).unwrap();
                assert!(af.is_subset_of(&setaf), "AF ⊆ SETAF at {n} under {sigma}");
                assert!(setaf.is_subset_of(&badf), "SETAF ⊆ BADF at {n} under {sigma}");
                assert!(badf.is_subset_of(&adf), "BADF ⊆ ADF at {n} under {sigma}");
            }
        }
    }

    #[test]
    fn signature_members_have_the_semantics_shape() {
        let v = letters(2);
        for kind in FormalismKind::ALL {
            let adm = brute_signature(kind, Semantics::Admissible, &v).unwrap();
            let all_unknown = Interpretation::all_unknown(&v);
            assert!(adm.sets().all(|s| s.contains(&all_unknown)));
            let com = brute_signature(kind, Semantics::Complete, &v).unwrap();
            assert!(com.sets().all(|s| !s.is_empty()));
            for sigma in [Semantics::Preferred, Semantics::Model] {
                let sig = brute_signature(kind, sigma, &v).unwrap();
                assert!(sig.sets().all(|s| s.is_antichain()));
            }
        }
    }

    #[test]
    fn model_sets_without_preferred_realizations() {
        // for general ADFs every non-empty model set is preferred-realizable
        for n in 1..=2 {
            let v = letters(n);
            assert!(mod_without_prf_witnesses(FormalismKind::Adf, &v, 2)
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn realizable_wrapper_matches_signatures() {
        let v = letters(1);
        let target = set(&v, &["u", "t", "f"]);
        assert!(is_realizable(
            FormalismKind::Badf,
            Semantics::Admissible,
            &target,
            &Limits::default()
        )
        .unwrap());
        assert!(!is_realizable(
            FormalismKind::Setaf,
            Semantics::Admissible,
            &target,
            &Limits::default()
        )
        .unwrap());
    }
}
