//! Finite model checking of the transitivity axiom and the structural
//! properties of independent sets, with witnessed reports.
//!
//! The transitivity axiom reads: if an element depends on a set A, and every
//! element of A depends on a set B, then the element depends on B — all in
//! single dependence steps. On finite spaces this is directly checkable by
//! scanning all (A, B) subset pairs; a failing triple is reported as a
//! counterexample witness that can be re-validated by recomputing the three
//! one-step conditions.

use crate::error::QueryError;
use crate::mask;
use crate::rng::SplitMix64;
use crate::set::{ElementId, ElementSet};
use crate::space::DependenceSpace;

/// Largest ground set accepted by the exhaustive checks.
pub const EXHAUSTIVE_ELEMENT_CAP: usize = 12;

/// Witness lists are truncated here; scanning stops once the cap fills.
pub const DEFAULT_WITNESS_CAP: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AxiomName {
    Transitivity,
    Hereditary,
    MaximalityEquivalence,
    SupersetDependence,
    ChainClosure,
}

impl AxiomName {
    pub fn as_str(self) -> &'static str {
        match self {
            AxiomName::Transitivity => "transitivity",
            AxiomName::Hereditary => "hereditary",
            AxiomName::MaximalityEquivalence => "maximality-equivalence",
            AxiomName::SupersetDependence => "superset-dependence",
            AxiomName::ChainClosure => "chain-closure",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail,
}

/// One refuting instance of a checked property.
///
/// Field meaning depends on the axiom:
/// - transitivity: `element` depends on `first`, every member of `first`
///   depends on `second`, yet `element` does not depend on `second`;
/// - hereditary: `first` is independent but its subset `second` is dependent;
/// - superset dependence: `first` is dependent but its superset `second` is
///   independent;
/// - maximality equivalence: `first` is a basis or a maximal independent set
///   but not both;
/// - chain closure: `first` is a dependent chain union.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CounterexampleWitness {
    pub element: Option<ElementId>,
    pub first: ElementSet,
    pub second: Option<ElementSet>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomReport {
    pub axiom: AxiomName,
    pub mode: CheckMode,
    pub verdict: Verdict,
    pub witnesses: Vec<CounterexampleWitness>,
}

impl AxiomReport {
    fn pass(axiom: AxiomName, mode: CheckMode) -> Self {
        Self {
            axiom,
            mode,
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
        }
    }

    fn from_witnesses(
        axiom: AxiomName,
        mode: CheckMode,
        witnesses: Vec<CounterexampleWitness>,
    ) -> Self {
        Self {
            axiom,
            mode,
            verdict: if witnesses.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            witnesses,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Recomputes every witness from the definitions. A pass report (no
    /// witnesses) revalidates trivially.
    pub fn revalidate(&self, space: &DependenceSpace) -> bool {
        self.witnesses
            .iter()
            .all(|w| witness_holds(space, self.axiom, w))
    }
}

fn witness_holds(space: &DependenceSpace, axiom: AxiomName, w: &CounterexampleWitness) -> bool {
    let element_ok = w
        .element
        .map(|id| space.check_id(id).is_ok())
        .unwrap_or(true);
    if !element_ok || space.check_set(&w.first).is_err() {
        return false;
    }
    if let Some(second) = &w.second {
        if space.check_set(second).is_err() {
            return false;
        }
    }
    match axiom {
        AxiomName::Transitivity => {
            let (Some(x), Some(second)) = (w.element, w.second.as_ref()) else {
                return false;
            };
            let x_on_first = space.depends_on(x, &w.first).unwrap().is_some();
            let all_on_second = w
                .first
                .iter()
                .all(|a| space.depends_on(a, second).unwrap().is_some());
            let x_on_second = space.depends_on(x, second).unwrap().is_some();
            x_on_first && all_on_second && !x_on_second
        }
        AxiomName::Hereditary => {
            let Some(second) = w.second.as_ref() else {
                return false;
            };
            second.is_subset(&w.first)
                && space.is_dependent(&w.first).unwrap().is_none()
                && space.is_dependent(second).unwrap().is_some()
        }
        AxiomName::SupersetDependence => {
            let Some(second) = w.second.as_ref() else {
                return false;
            };
            w.first.is_subset(second)
                && space.is_dependent(&w.first).unwrap().is_some()
                && space.is_dependent(second).unwrap().is_none()
        }
        AxiomName::MaximalityEquivalence => {
            let is_basis = space.is_basis(&w.first).unwrap();
            is_basis != is_maximal_independent(space, &w.first)
        }
        AxiomName::ChainClosure => space.is_dependent(&w.first).unwrap().is_some(),
    }
}

fn is_maximal_independent(space: &DependenceSpace, set: &ElementSet) -> bool {
    if space.is_dependent(set).unwrap().is_some() {
        return false;
    }
    space
        .element_ids()
        .filter(|id| !set.contains(*id))
        .all(|id| space.is_dependent(&set.with(id)).unwrap().is_some())
}

fn require_exhaustible(space: &DependenceSpace) -> Result<(), QueryError> {
    if space.len() > EXHAUSTIVE_ELEMENT_CAP {
        return Err(QueryError::TooLargeForExhaustive {
            size: space.len(),
            cap: EXHAUSTIVE_ELEMENT_CAP,
        });
    }
    Ok(())
}

/// Checks the transitivity axiom with the default witness cap.
pub fn check_transitivity(
    space: &DependenceSpace,
    mode: CheckMode,
) -> Result<AxiomReport, QueryError> {
    check_transitivity_capped(space, mode, DEFAULT_WITNESS_CAP)
}

/// Exhaustive mode scans every (A, B) subset pair, A ascending, B ascending,
/// failing elements ascending, and stops once `witness_cap` witnesses are
/// collected. Sampled mode draws seeded (element, A, B) triples and is
/// reproducible for a fixed seed.
pub fn check_transitivity_capped(
    space: &DependenceSpace,
    mode: CheckMode,
    witness_cap: usize,
) -> Result<AxiomReport, QueryError> {
    match mode {
        CheckMode::Exhaustive => {
            require_exhaustible(space)?;
            Ok(transitivity_exhaustive(space, witness_cap))
        }
        CheckMode::Sampled { samples, seed } => {
            Ok(transitivity_sampled(space, samples, seed, witness_cap))
        }
    }
}

fn transitivity_exhaustive(space: &DependenceSpace, witness_cap: usize) -> AxiomReport {
    let n = space.len();
    let delta_masks = mask::delta_masks(space);
    let size = 1usize << n;
    // spans[m] = everything that depends on m in one step.
    let spans: Vec<u64> = (0..size as u64)
        .map(|m| mask::closure_mask(m, &delta_masks))
        .collect();

    let mut witnesses = Vec::new();
    'scan: for first in 0..size {
        for second in 0..size {
            // Every element of `first` must depend on `second`.
            if first as u64 & spans[second] != first as u64 {
                continue;
            }
            let mut missing = spans[first] & !spans[second];
            while missing != 0 {
                let bit = missing.trailing_zeros();
                missing &= missing - 1;
                witnesses.push(CounterexampleWitness {
                    element: Some(ElementId(bit)),
                    first: ElementSet::from_mask(first as u64),
                    second: Some(ElementSet::from_mask(second as u64)),
                });
                if witnesses.len() >= witness_cap {
                    break 'scan;
                }
            }
        }
    }
    AxiomReport::from_witnesses(AxiomName::Transitivity, CheckMode::Exhaustive, witnesses)
}

fn transitivity_sampled(
    space: &DependenceSpace,
    samples: u64,
    seed: u64,
    witness_cap: usize,
) -> AxiomReport {
    let mode = CheckMode::Sampled { samples, seed };
    let n = space.len();
    if n == 0 {
        return AxiomReport::pass(AxiomName::Transitivity, mode);
    }
    let mut rng = SplitMix64::new(seed);
    let mut witnesses = Vec::new();
    for _ in 0..samples {
        let x = ElementId(rng.below(n as u64) as u32);
        let first = draw_subset(&mut rng, n);
        let second = draw_subset(&mut rng, n);

        let span_second = space.closure(&second).unwrap();
        if !first.is_subset(&span_second) || span_second.contains(x) {
            continue;
        }
        if space.closure(&first).unwrap().contains(x) {
            witnesses.push(CounterexampleWitness {
                element: Some(x),
                first,
                second: Some(second),
            });
            if witnesses.len() >= witness_cap {
                break;
            }
        }
    }
    AxiomReport::from_witnesses(AxiomName::Transitivity, mode, witnesses)
}

/// Draws a uniformly random subset; one word per 64 elements, low bits first.
fn draw_subset(rng: &mut SplitMix64, n: usize) -> ElementSet {
    let mut ids = Vec::new();
    let mut base = 0usize;
    while base < n {
        let width = (n - base).min(64);
        let mut word = rng.next_u64();
        if width < 64 {
            word &= (1u64 << width) - 1;
        }
        while word != 0 {
            let bit = word.trailing_zeros() as usize;
            word &= word - 1;
            ids.push(ElementId((base + bit) as u32));
        }
        base += 64;
    }
    ElementSet::from_ids(ids)
}

/// Verifies that every subset of every independent set is independent.
/// True by construction for Δ-systems; kept as a cross-check.
pub fn check_hereditary(space: &DependenceSpace) -> Result<AxiomReport, QueryError> {
    require_exhaustible(space)?;
    let dependent = mask::dependent_bitmap(space.len(), &mask::delta_masks(space));
    let mut witnesses = Vec::new();
    'scan: for set in 0..dependent.len() {
        if dependent[set] {
            continue;
        }
        // Proper submasks, descending.
        let mut sub = set;
        while sub > 0 {
            sub = (sub - 1) & set;
            if dependent[sub] {
                witnesses.push(CounterexampleWitness {
                    element: None,
                    first: ElementSet::from_mask(set as u64),
                    second: Some(ElementSet::from_mask(sub as u64)),
                });
                if witnesses.len() >= DEFAULT_WITNESS_CAP {
                    break 'scan;
                }
            }
        }
    }
    Ok(AxiomReport::from_witnesses(
        AxiomName::Hereditary,
        CheckMode::Exhaustive,
        witnesses,
    ))
}

/// Verifies that every superset of every dependent set is dependent.
pub fn check_superset_dependence(space: &DependenceSpace) -> Result<AxiomReport, QueryError> {
    require_exhaustible(space)?;
    let dependent = mask::dependent_bitmap(space.len(), &mask::delta_masks(space));
    let full = dependent.len() - 1;
    let mut witnesses = Vec::new();
    'scan: for set in 0..dependent.len() {
        if !dependent[set] {
            continue;
        }
        // Proper supersets, ascending.
        let mut sup = set;
        while sup != full {
            sup = (sup + 1) | set;
            if !dependent[sup] {
                witnesses.push(CounterexampleWitness {
                    element: None,
                    first: ElementSet::from_mask(set as u64),
                    second: Some(ElementSet::from_mask(sup as u64)),
                });
                if witnesses.len() >= DEFAULT_WITNESS_CAP {
                    break 'scan;
                }
            }
        }
    }
    Ok(AxiomReport::from_witnesses(
        AxiomName::SupersetDependence,
        CheckMode::Exhaustive,
        witnesses,
    ))
}

/// Verifies by double enumeration that the bases are exactly the maximal
/// independent sets.
pub fn check_maximality_equivalence(space: &DependenceSpace) -> Result<AxiomReport, QueryError> {
    require_exhaustible(space)?;
    let n = space.len();
    let delta_masks = mask::delta_masks(space);
    let dependent = mask::dependent_bitmap(n, &delta_masks);
    let full = (dependent.len() - 1) as u64;
    let mut witnesses = Vec::new();
    'scan: for set in 0..dependent.len() {
        if dependent[set] {
            continue;
        }
        let is_basis = mask::closure_mask(set as u64, &delta_masks) == full;
        let is_maximal = (0..n)
            .filter(|bit| set & (1 << bit) == 0)
            .all(|bit| dependent[set | (1 << bit)]);
        if is_basis != is_maximal {
            witnesses.push(CounterexampleWitness {
                element: None,
                first: ElementSet::from_mask(set as u64),
                second: None,
            });
            if witnesses.len() >= DEFAULT_WITNESS_CAP {
                break 'scan;
            }
        }
    }
    Ok(AxiomReport::from_witnesses(
        AxiomName::MaximalityEquivalence,
        CheckMode::Exhaustive,
        witnesses,
    ))
}

/// Verifies that the union of an inclusion-chain of independent sets is
/// independent. At finite scale the union is the chain's largest member, so
/// a pass is forced once the inputs validate; the check recomputes it anyway.
pub fn check_chain_closure(
    space: &DependenceSpace,
    chain: &[ElementSet],
) -> Result<AxiomReport, QueryError> {
    for set in chain {
        space.check_set(set)?;
    }
    for i in 0..chain.len() {
        for j in i + 1..chain.len() {
            if !chain[i].is_subset(&chain[j]) && !chain[j].is_subset(&chain[i]) {
                return Err(QueryError::NotAChain { first: i, second: j });
            }
        }
    }
    for (index, set) in chain.iter().enumerate() {
        if space.is_dependent(set)?.is_some() {
            return Err(QueryError::DependentMember { index });
        }
    }
    let union = chain
        .iter()
        .fold(ElementSet::new(), |acc, set| acc.union(set));
    let witnesses = if space.is_dependent(&union)?.is_some() {
        vec![CounterexampleWitness {
            element: None,
            first: union,
            second: None,
        }]
    } else {
        Vec::new()
    };
    Ok(AxiomReport::from_witnesses(
        AxiomName::ChainClosure,
        CheckMode::Exhaustive,
        witnesses,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::MinCircuitSize;

    fn space1() -> DependenceSpace {
        DependenceSpace::build(&["a", "b", "c", "d"], &[&["a", "b", "c"]], MinCircuitSize::Two)
            .unwrap()
    }

    fn cliques() -> DependenceSpace {
        DependenceSpace::build(
            &["1", "2", "3", "4"],
            &[&["1", "2"], &["3", "4"]],
            MinCircuitSize::Two,
        )
        .unwrap()
    }

    fn p3graph() -> DependenceSpace {
        DependenceSpace::build(
            &["x", "a", "b"],
            &[&["x", "a"], &["a", "b"]],
            MinCircuitSize::Two,
        )
        .unwrap()
    }

    fn named(space: &DependenceSpace, names: &[&str]) -> ElementSet {
        space.set_from_names(names).unwrap()
    }

    #[test]
    fn transitivity_passes_on_space1_and_cliques() {
        for space in [space1(), cliques()] {
            let report = check_transitivity(&space, CheckMode::Exhaustive).unwrap();
            assert!(report.passed(), "{report:?}");
            assert!(report.witnesses.is_empty());
        }
    }

    #[test]
    fn transitivity_fails_on_the_three_vertex_path() {
        let p = p3graph();
        let report = check_transitivity(&p, CheckMode::Exhaustive).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        assert!(report.revalidate(&p));
        // The classic failing triple: x reaches a, a reaches b, x cannot
        // reach b in one step.
        let expected = CounterexampleWitness {
            element: Some(p.element("x").unwrap()),
            first: named(&p, &["a"]),
            second: Some(named(&p, &["b"])),
        };
        assert!(
            report.witnesses.contains(&expected),
            "witnesses were {:?}",
            report.witnesses
        );
    }

    #[test]
    fn exhaustive_check_rejects_large_spaces() {
        let names: Vec<String> = (0..13).map(|i| format!("e{i}")).collect();
        let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let space = DependenceSpace::build(&name_refs, &[], MinCircuitSize::Two).unwrap();
        assert!(matches!(
            check_transitivity(&space, CheckMode::Exhaustive),
            Err(QueryError::TooLargeForExhaustive { size: 13, cap: 12 })
        ));
        // Sampling has no size cap.
        let report = check_transitivity(
            &space,
            CheckMode::Sampled {
                samples: 50,
                seed: 3,
            },
        )
        .unwrap();
        assert!(report.passed());
    }

    #[test]
    fn sampling_is_reproducible_and_finds_the_path_failure() {
        let p = p3graph();
        let mode = CheckMode::Sampled {
            samples: 200,
            seed: 11,
        };
        let first = check_transitivity(&p, mode).unwrap();
        let second = check_transitivity(&p, mode).unwrap();
        assert_eq!(first, second);
        assert_eq!(first.verdict, Verdict::Fail);
        assert!(first.revalidate(&p));
    }

    #[test]
    fn structural_checks_pass_on_the_named_spaces() {
        for space in [space1(), cliques(), p3graph()] {
            assert!(check_hereditary(&space).unwrap().passed());
            assert!(check_superset_dependence(&space).unwrap().passed());
            assert!(check_maximality_equivalence(&space).unwrap().passed());
        }
        let free = DependenceSpace::build(&["u", "v"], &[], MinCircuitSize::Two).unwrap();
        assert!(check_superset_dependence(&free).unwrap().passed());
    }

    #[test]
    fn chain_closure_accepts_chains_and_rejects_junk() {
        let s = space1();
        let chain = vec![
            named(&s, &["a"]),
            named(&s, &["a", "b"]),
            named(&s, &["a", "b", "d"]),
        ];
        let report = check_chain_closure(&s, &chain).unwrap();
        assert!(report.passed());

        assert_eq!(
            check_chain_closure(&s, &[named(&s, &["a"]), named(&s, &["b"])]),
            Err(QueryError::NotAChain { first: 0, second: 1 })
        );
        assert_eq!(
            check_chain_closure(&s, &[named(&s, &["a", "b", "c"])]),
            Err(QueryError::DependentMember { index: 0 })
        );
        assert!(check_chain_closure(&s, &[]).unwrap().passed());
    }

    #[test]
    fn empty_space_passes_everything() {
        let empty = DependenceSpace::build(&[], &[], MinCircuitSize::Two).unwrap();
        assert!(check_transitivity(&empty, CheckMode::Exhaustive).unwrap().passed());
        assert!(check_hereditary(&empty).unwrap().passed());
        assert!(check_maximality_equivalence(&empty).unwrap().passed());
        let sampled = check_transitivity(
            &empty,
            CheckMode::Sampled {
                samples: 10,
                seed: 1,
            },
        )
        .unwrap();
        assert!(sampled.passed());
    }
}
