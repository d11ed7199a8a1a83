//! Foliation verdicts for finite-type metric surfaces.
//!
//! Each verdict is produced by a first-match decision table whose rows carry a
//! provenance tag from a closed registry. A `No` transitivity verdict on a
//! finite-type soul also rules out transitivity of any (possibly non-metric)
//! surface built around that soul; such surfaces are not representable here.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::signature::{signatures_up_to_rank, SurfaceSig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Value {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Value::Yes => "Yes",
            Value::No => "No",
            Value::Unknown => "Unknown",
        })
    }
}

/// Registered justifications. One tag per theorem or construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// Closed surfaces with nonzero Euler characteristic carry no foliation.
    EulerObstruction,
    /// Closed surfaces with zero Euler characteristic (torus, Klein bottle) foliate.
    EulerZero,
    /// Every open metric surface foliates (Morse-Thom).
    MorseThom,
    /// Irrational linear foliation of the torus.
    Kronecker,
    /// Kronecker foliation punctured once or twice on distinct leaves.
    KroneckerPunctured,
    /// Kneser: every foliation of the Klein bottle has a circle leaf.
    Kneser,
    /// Klein bottle is foliated-intransitive (Kneser together with Markley's
    /// flow-intransitivity, via the orienting double cover).
    KleinIntransitive,
    /// Leaves of a simply-connected foliated surface are proper.
    SimplyConnectedSeparation,
    /// Surfaces with infinite cyclic fundamental group lack transitive foliations.
    InfiniteCyclic,
    /// Dichotomic surfaces with free group of rank 2 are intransitive
    /// (Poincare-Bendixson plus branched double covers).
    DichotomicRank2,
    /// Non-orientable surfaces with free group of rank 2 are intransitive.
    NonOrientableRank2,
    /// Minimal foliation of the four-times punctured sphere (Dubois-Violette).
    DuboisViolette,
    /// Dubois-Violette foliation punctured on two distinct leaves.
    DuboisViolettePunctured,
    /// Peixoto-Blohin woodpecker surgery on the Kronecker torus.
    PeixotoBlohin,
    /// Woodpecker surgery on the Dubois-Violette foliation.
    Woodpecker,
    /// Woodpecker piece glued to the Dubois-Violette disc.
    DuboisVioletteGluing,
    /// Thrice-punctured projective plane: branched double cover plus
    /// half-integral index count.
    SporadicRank3,
    /// Open surfaces of rank at least 4 are transitive.
    Rank4OrMore,
    /// A transitive surface stays transitive after puncturing away from a dense leaf.
    PunctureInherits,
    /// Punctured surfaces lack biminimal foliations (Bendixson end argument).
    BiminimalImpededByPuncture,
    /// Rational rotation: every leaf is a closed circle.
    PeriodicLeaves,
    /// Question left open; the verdict carries a locus naming it.
    OpenProblem,
}

impl Provenance {
    pub const ALL: [Provenance; 22] = [
        Provenance::EulerObstruction,
        Provenance::EulerZero,
        Provenance::MorseThom,
        Provenance::Kronecker,
        Provenance::KroneckerPunctured,
        Provenance::Kneser,
        Provenance::KleinIntransitive,
        Provenance::SimplyConnectedSeparation,
        Provenance::InfiniteCyclic,
        Provenance::DichotomicRank2,
        Provenance::NonOrientableRank2,
        Provenance::DuboisViolette,
        Provenance::DuboisViolettePunctured,
        Provenance::PeixotoBlohin,
        Provenance::Woodpecker,
        Provenance::DuboisVioletteGluing,
        Provenance::SporadicRank3,
        Provenance::Rank4OrMore,
        Provenance::PunctureInherits,
        Provenance::BiminimalImpededByPuncture,
        Provenance::PeriodicLeaves,
        Provenance::OpenProblem,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::EulerObstruction => "euler-obstruction",
            Provenance::EulerZero => "euler-zero",
            Provenance::MorseThom => "morse-thom",
            Provenance::Kronecker => "kronecker",
            Provenance::KroneckerPunctured => "kronecker-punctured",
            Provenance::Kneser => "kneser",
            Provenance::KleinIntransitive => "klein-intransitive",
            Provenance::SimplyConnectedSeparation => "simply-connected-separation",
            Provenance::InfiniteCyclic => "infinite-cyclic",
            Provenance::DichotomicRank2 => "dichotomic-rank-2",
            Provenance::NonOrientableRank2 => "non-orientable-rank-2",
            Provenance::DuboisViolette => "dubois-violette",
            Provenance::DuboisViolettePunctured => "dubois-violette-punctured",
            Provenance::PeixotoBlohin => "peixoto-blohin",
            Provenance::Woodpecker => "woodpecker",
            Provenance::DuboisVioletteGluing => "dubois-violette-gluing",
            Provenance::SporadicRank3 => "sporadic-rank-3",
            Provenance::Rank4OrMore => "rank-4-or-more",
            Provenance::PunctureInherits => "puncture-inherits",
            Provenance::BiminimalImpededByPuncture => "biminimal-impeded-by-puncture",
            Provenance::PeriodicLeaves => "periodic-leaves",
            Provenance::OpenProblem => "open-problem",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Provenance> {
        Provenance::ALL.into_iter().find(|p| p.tag() == tag)
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Tri-state decision with its justification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Verdict {
    pub value: Value,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locus: Option<&'static str>,
}

impl Verdict {
    pub fn yes(provenance: Provenance) -> Self {
        debug_assert!(provenance != Provenance::OpenProblem);
        Verdict { value: Value::Yes, provenance, locus: None }
    }

    pub fn no(provenance: Provenance) -> Self {
        debug_assert!(provenance != Provenance::OpenProblem);
        Verdict { value: Value::No, provenance, locus: None }
    }

    pub fn unknown(locus: &'static str) -> Self {
        Verdict { value: Value::Unknown, provenance: Provenance::OpenProblem, locus: Some(locus) }
    }

    pub fn is_yes(&self) -> bool {
        self.value == Value::Yes
    }

    pub fn is_no(&self) -> bool {
        self.value == Value::No
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.locus {
            Some(locus) => write!(f, "{} [{}: {}]", self.value, self.provenance, locus),
            None => write!(f, "{} [{}]", self.value, self.provenance),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub foliable: Verdict,
    pub transitive: Verdict,
    pub minimal: Verdict,
    pub biminimal: Verdict,
}

/// Node shape in the monolith lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Glyph {
    /// Not foliable.
    Square,
    /// Foliated-intransitive.
    Hexagon,
    /// Foliated-transitive.
    Star,
    /// Undecided.
    Question,
}

impl Glyph {
    pub fn name(&self) -> &'static str {
        match self {
            Glyph::Square => "square",
            Glyph::Hexagon => "hexagon",
            Glyph::Star => "star",
            Glyph::Question => "question",
        }
    }
}

impl Classification {
    pub fn glyph(&self) -> Glyph {
        if self.foliable.is_no() {
            return Glyph::Square;
        }
        match self.transitive.value {
            Value::No => Glyph::Hexagon,
            Value::Yes => Glyph::Star,
            Value::Unknown => Glyph::Question,
        }
    }

    /// Checks the implication chain between the four verdicts.
    pub fn is_coherent(&self) -> bool {
        let implies = |a: &Verdict, b: &Verdict| !a.is_yes() || b.is_yes();
        let foliable_gate = !self.foliable.is_no()
            || (self.transitive.is_no() && self.minimal.is_no() && self.biminimal.is_no());
        implies(&self.transitive, &self.foliable)
            && implies(&self.minimal, &self.transitive)
            && implies(&self.biminimal, &self.minimal)
            && foliable_gate
    }
}

struct Rule {
    applies: fn(&SurfaceSig) -> bool,
    verdict: Verdict,
}

const fn yes(provenance: Provenance) -> Verdict {
    Verdict { value: Value::Yes, provenance, locus: None }
}

const fn no(provenance: Provenance) -> Verdict {
    Verdict { value: Value::No, provenance, locus: None }
}

const TWICE_PUNCTURED_KLEIN: &str = "transitivity of the twice-punctured Klein bottle";
const MINIMALITY_UNSTATED: &str = "minimality not established for this surface";

fn is(s: &SurfaceSig, g: u32, c: u32, n: u32) -> bool {
    (s.genus(), s.crosscaps(), s.punctures()) == (g, c, n)
}

/// Transitivity of foliable surfaces, first match wins.
const TRANSITIVITY_RULES: &[Rule] = &[
    Rule { applies: |s| is(s, 1, 0, 0), verdict: yes(Provenance::Kronecker) },
    Rule { applies: |s| is(s, 0, 2, 0), verdict: no(Provenance::KleinIntransitive) },
    Rule { applies: |s| s.is_open() && s.rank() == 0, verdict: no(Provenance::SimplyConnectedSeparation) },
    Rule { applies: |s| s.is_open() && s.rank() == 1, verdict: no(Provenance::InfiniteCyclic) },
    Rule {
        applies: |s| s.is_open() && s.rank() == 2 && s.is_dichotomic(),
        verdict: no(Provenance::DichotomicRank2),
    },
    Rule {
        applies: |s| s.is_open() && s.rank() == 2 && !s.is_orientable(),
        verdict: no(Provenance::NonOrientableRank2),
    },
    Rule { applies: |s| is(s, 1, 0, 1) || is(s, 1, 0, 2), verdict: yes(Provenance::KroneckerPunctured) },
    Rule { applies: |s| is(s, 0, 0, 4), verdict: yes(Provenance::DuboisViolette) },
    Rule { applies: |s| is(s, 0, 1, 3), verdict: no(Provenance::SporadicRank3) },
    Rule {
        applies: |s| s.is_orientable() && s.genus() >= 1 && s.punctures() == 1,
        verdict: yes(Provenance::PeixotoBlohin),
    },
    Rule {
        applies: |s| !s.is_orientable() && s.crosscaps() >= 3 && s.punctures() == 1,
        verdict: yes(Provenance::PeixotoBlohin),
    },
    Rule {
        applies: |s| !s.is_orientable() && s.crosscaps() <= 4 && s.punctures() == 4,
        verdict: yes(Provenance::Woodpecker),
    },
    Rule { applies: |s| is(s, 0, 2, 3), verdict: yes(Provenance::DuboisVioletteGluing) },
    Rule { applies: |s| s.is_open() && s.rank() >= 4, verdict: yes(Provenance::Rank4OrMore) },
];

/// Positive minimality statements; anything else transitive is left open.
const MINIMALITY_RULES: &[Rule] = &[
    Rule { applies: |s| is(s, 1, 0, 0), verdict: yes(Provenance::Kronecker) },
    Rule { applies: |s| is(s, 1, 0, 1) || is(s, 1, 0, 2), verdict: yes(Provenance::KroneckerPunctured) },
    Rule { applies: |s| is(s, 0, 0, 4), verdict: yes(Provenance::DuboisViolette) },
    Rule { applies: |s| is(s, 0, 0, 6), verdict: yes(Provenance::DuboisViolettePunctured) },
];

fn first_match(rules: &[Rule], sig: &SurfaceSig) -> Option<Verdict> {
    rules.iter().find(|r| (r.applies)(sig)).map(|r| r.verdict)
}

fn foliable(sig: &SurfaceSig) -> Verdict {
    if sig.is_open() {
        Verdict::yes(Provenance::MorseThom)
    } else if sig.euler() == 0 {
        Verdict::yes(Provenance::EulerZero)
    } else {
        Verdict::no(Provenance::EulerObstruction)
    }
}

fn transitive(sig: &SurfaceSig, foliable: &Verdict) -> Verdict {
    if foliable.is_no() {
        return *foliable;
    }
    if is(sig, 0, 2, 2) {
        return Verdict::unknown(TWICE_PUNCTURED_KLEIN);
    }
    // The table covers every foliable finite-type surface.
    first_match(TRANSITIVITY_RULES, sig).expect("transitivity table is exhaustive")
}

fn minimal(sig: &SurfaceSig, transitive: &Verdict) -> Verdict {
    match transitive.value {
        Value::No => *transitive,
        Value::Unknown => *transitive,
        Value::Yes => first_match(MINIMALITY_RULES, sig).unwrap_or(Verdict::unknown(MINIMALITY_UNSTATED)),
    }
}

fn biminimal(sig: &SurfaceSig, foliable: &Verdict) -> Verdict {
    if foliable.is_no() {
        *foliable
    } else if sig.is_open() {
        Verdict::no(Provenance::BiminimalImpededByPuncture)
    } else if *sig == SurfaceSig::TORUS {
        Verdict::yes(Provenance::Kronecker)
    } else {
        // the only other foliable closed surface is the Klein bottle
        Verdict::no(Provenance::Kneser)
    }
}

/// Decides the four verdicts for a normalized signature.
pub fn classify(sig: &SurfaceSig) -> Classification {
    let foliable = foliable(sig);
    let transitive = transitive(sig, &foliable);
    let minimal = if *sig == SurfaceSig::KLEIN_BOTTLE {
        Verdict::no(Provenance::Kneser)
    } else {
        minimal(sig, &transitive)
    };
    let biminimal = biminimal(sig, &foliable);
    Classification { foliable, transitive, minimal, biminimal }
}

/// Base transitive surfaces of rank at most `max_rank`, each with the
/// construction that makes it transitive.
fn base_transitive_facts(max_rank: u32) -> Vec<(SurfaceSig, Verdict)> {
    let mut base = vec![(SurfaceSig::TORUS, Verdict::yes(Provenance::Kronecker))];
    for g in 1..=max_rank / 2 {
        let p = if g == 1 { Provenance::KroneckerPunctured } else { Provenance::PeixotoBlohin };
        base.push((SurfaceSig::orientable(g, 1), Verdict::yes(p)));
    }
    for k in 3..=max_rank {
        base.push((SurfaceSig::nonorientable(k, 1), Verdict::yes(Provenance::PeixotoBlohin)));
    }
    for k in 0..=4 {
        let s = if k == 0 { SurfaceSig::orientable(0, 4) } else { SurfaceSig::nonorientable(k, 4) };
        let p = if k == 0 { Provenance::DuboisViolette } else { Provenance::Woodpecker };
        base.push((s, Verdict::yes(p)));
    }
    base.push((SurfaceSig::nonorientable(2, 3), Verdict::yes(Provenance::DuboisVioletteGluing)));
    base.retain(|(s, _)| s.rank() <= max_rank);
    base
}

/// Transitive surfaces generated from the base constructions by repeated
/// puncturing, each cross-checked against `classify`.
pub fn transitive_closure_facts(max_rank: u32) -> Result<Vec<(SurfaceSig, Verdict)>> {
    transitive_closure_facts_against(max_rank, classify)
}

/// As [`transitive_closure_facts`] with an explicit decision procedure to
/// check against.
pub fn transitive_closure_facts_against(
    max_rank: u32,
    decide: impl Fn(&SurfaceSig) -> Classification,
) -> Result<Vec<(SurfaceSig, Verdict)>> {
    if max_rank > 12 {
        return Err(Error::InvalidArgument(format!("max rank {max_rank} exceeds 12")));
    }
    let mut facts: BTreeMap<SurfaceSig, Verdict> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for (sig, verdict) in base_transitive_facts(max_rank) {
        if facts.insert(sig, verdict).is_none() {
            queue.push_back(sig);
        }
    }
    while let Some(sig) = queue.pop_front() {
        let next = sig.puncture();
        if next.rank() <= max_rank && !facts.contains_key(&next) {
            facts.insert(next, Verdict::yes(Provenance::PunctureInherits));
            queue.push_back(next);
        }
    }
    for (sig, verdict) in &facts {
        let decided = decide(sig).transitive;
        if !decided.is_yes() {
            return Err(Error::InternalInconsistency(format!(
                "{sig} is transitive by {} but classified {decided}",
                verdict.provenance
            )));
        }
    }
    Ok(facts.into_iter().collect())
}

/// Every normalized signature of rank at most `max_rank` with its
/// classification, ordered by rank, orientable first, then punctures.
pub fn monolith_table(max_rank: u32) -> Vec<(SurfaceSig, Classification)> {
    let mut sigs = signatures_up_to_rank(max_rank);
    sigs.sort_by_key(|s| (s.rank(), !s.is_orientable(), s.punctures()));
    sigs.into_iter().map(|s| (s, classify(&s))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(g: u32, c: u32, n: u32) -> SurfaceSig {
        SurfaceSig::new(g, c, n).unwrap()
    }

    #[test]
    fn thrice_punctured_sphere_is_dichotomic_rank_two() {
        let c = classify(&sig(0, 0, 3));
        assert_eq!(c.transitive, Verdict::no(Provenance::DichotomicRank2));
    }

    #[test]
    fn twice_punctured_klein_is_open() {
        let c = classify(&sig(0, 2, 2));
        assert_eq!(c.transitive.value, Value::Unknown);
        assert_eq!(c.transitive.provenance, Provenance::OpenProblem);
        assert!(c.transitive.locus.is_some());
        assert_eq!(c.glyph(), Glyph::Question);
    }

    #[test]
    fn torus_is_everything() {
        let c = classify(&SurfaceSig::TORUS);
        for v in [c.foliable, c.transitive, c.minimal, c.biminimal] {
            assert!(v.is_yes());
        }
    }

    #[test]
    fn genus_two_is_not_foliable() {
        let c = classify(&sig(2, 0, 0));
        assert_eq!(c.foliable, Verdict::no(Provenance::EulerObstruction));
        assert!(c.transitive.is_no() && c.minimal.is_no() && c.biminimal.is_no());
    }

    #[test]
    fn woodpecker_on_dubois_violette() {
        let c = classify(&sig(0, 4, 4));
        assert_eq!(c.transitive, Verdict::yes(Provenance::Woodpecker));
    }

    #[test]
    fn klein_bottle() {
        let c = classify(&SurfaceSig::KLEIN_BOTTLE);
        assert!(c.foliable.is_yes());
        assert_eq!(c.transitive.provenance, Provenance::KleinIntransitive);
        assert_eq!(c.minimal, Verdict::no(Provenance::Kneser));
        assert_eq!(c.biminimal, Verdict::no(Provenance::Kneser));
    }

    #[test]
    fn minimality_left_open_where_unstated() {
        let c = classify(&sig(0, 3, 1));
        assert!(c.transitive.is_yes());
        assert_eq!(c.minimal.value, Value::Unknown);
        assert_eq!(classify(&sig(0, 0, 6)).minimal, Verdict::yes(Provenance::DuboisViolettePunctured));
    }

    #[test]
    fn punctured_surfaces_are_never_biminimal() {
        for s in signatures_up_to_rank(6).iter().filter(|s| s.is_open()) {
            assert_eq!(classify(s).biminimal, Verdict::no(Provenance::BiminimalImpededByPuncture));
        }
    }

    #[test]
    fn provenance_tags_round_trip() {
        for p in Provenance::ALL {
            assert_eq!(Provenance::from_tag(p.tag()), Some(p));
        }
    }

    #[test]
    fn closure_examples() {
        let facts = transitive_closure_facts(12).unwrap();
        let has = |s: SurfaceSig| facts.iter().any(|(f, _)| *f == s);
        assert!(has(sig(1, 0, 5)));
        assert!(!has(sig(0, 0, 3)));
        let small = transitive_closure_facts(3).unwrap();
        assert!(!small.iter().any(|(f, _)| *f == sig(0, 2, 3)));
        assert!(transitive_closure_facts(4).unwrap().iter().any(|(f, _)| *f == sig(0, 2, 3)));
    }

    #[test]
    fn closure_rejects_large_rank() {
        assert!(matches!(transitive_closure_facts(13), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn closure_detects_contradiction() {
        let wrong = |s: &SurfaceSig| {
            let mut c = classify(s);
            if *s == SurfaceSig::orientable(1, 3) {
                c.transitive = Verdict::no(Provenance::InfiniteCyclic);
            }
            c
        };
        assert!(matches!(
            transitive_closure_facts_against(5, wrong),
            Err(Error::InternalInconsistency(_))
        ));
    }

    #[test]
    fn monolith_rank_zero() {
        let table = monolith_table(0);
        let sigs: Vec<_> = table.iter().map(|(s, _)| *s).collect();
        assert_eq!(sigs, vec![SurfaceSig::SPHERE, sig(0, 0, 1), SurfaceSig::PROJECTIVE_PLANE]);
        assert!(table[0].1.foliable.is_no());
        assert!(table[1].1.transitive.is_no());
    }

    #[test]
    fn monolith_rank_four_open_entries_transitive() {
        for (s, c) in monolith_table(4) {
            if s.is_open() && s.rank() == 4 {
                assert!(c.transitive.is_yes(), "{s}");
            }
        }
    }
}
