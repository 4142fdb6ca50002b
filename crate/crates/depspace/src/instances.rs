//! Instance generators: graph linkage spaces, planar integer vectors with
//! parallelism circuits, shared-symbol word spaces, and seeded random
//! Δ-systems. All of them emit ordinary [`DependenceSpace`] values.

use crate::error::GenError;
use crate::rng::SplitMix64;
use crate::space::{DependenceSpace, MinCircuitSize};

/// Vertex cap for [`graph_space`], chosen to keep exhaustive checks feasible.
pub const GRAPH_VERTEX_CAP: usize = 16;

/// Word-count cap for [`repetition_space`].
pub const REPETITION_WORD_CAP: usize = 4096;

/// Element cap for [`random_space`].
pub const RANDOM_ELEMENT_CAP: usize = 16;

/// Component bound keeping vector cross products in exact integer range.
pub const VECTOR_COMPONENT_BOUND: i64 = 1_000_000;

/// A planar vector with integer coordinates. Parallelism is decided exactly
/// via the cross product, which is why the components are bounded.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Vector2 {
    pub x: i64,
    pub y: i64,
}

impl Vector2 {
    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn cross(self, other: Vector2) -> i64 {
        self.x * other.y - self.y * other.x
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// Element name used for this vector: `x:y`.
    pub fn label(self) -> String {
        format!("{}:{}", self.x, self.y)
    }
}

/// An undirected graph given by vertex names and unordered edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

/// The linkage space of a graph: ground set = vertices, Δ = the edge pairs.
///
/// Any larger vertex set containing a connected pair is a superset of an
/// edge and therefore dependent already, so the minimal circuits (the edges)
/// determine the same dependent/independent classification.
pub fn graph_space(spec: &GraphSpec) -> Result<DependenceSpace, GenError> {
    if spec.vertices.len() > GRAPH_VERTEX_CAP {
        return Err(GenError::TooLarge {
            size: spec.vertices.len(),
            cap: GRAPH_VERTEX_CAP,
        });
    }
    let mut seen = std::collections::HashSet::new();
    for (u, v) in &spec.edges {
        if u == v {
            return Err(GenError::SelfLoop { vertex: u.clone() });
        }
        for endpoint in [u, v] {
            if !spec.vertices.contains(endpoint) {
                return Err(GenError::UnknownEndpoint {
                    vertex: endpoint.clone(),
                });
            }
        }
        let key = if u < v {
            (u.clone(), v.clone())
        } else {
            (v.clone(), u.clone())
        };
        if !seen.insert(key) {
            return Err(GenError::DuplicateEdge {
                a: u.clone(),
                b: v.clone(),
            });
        }
    }
    let names: Vec<&str> = spec.vertices.iter().map(String::as_str).collect();
    let members: Vec<Vec<&str>> = spec
        .edges
        .iter()
        .map(|(u, v)| vec![u.as_str(), v.as_str()])
        .collect();
    let member_refs: Vec<&[&str]> = members.iter().map(Vec::as_slice).collect();
    Ok(DependenceSpace::build(
        &names,
        &member_refs,
        MinCircuitSize::Two,
    )?)
}

/// The parallelism space of a list of planar integer vectors.
///
/// Δ holds every parallel pair (zero cross product), every 3-element subset
/// (three planar vectors never stand independent), and, when `allow_zero` is
/// set, the singleton of each zero vector; `allow_zero` switches the space
/// to one-element minimum circuit size.
pub fn parallel_vector_space(
    vectors: &[Vector2],
    allow_zero: bool,
) -> Result<DependenceSpace, GenError> {
    let labels: Vec<String> = vectors.iter().map(|v| v.label()).collect();
    for (i, label) in labels.iter().enumerate() {
        if labels[..i].contains(label) {
            return Err(GenError::DuplicateVector {
                label: label.clone(),
            });
        }
        if vectors[i].x.abs() > VECTOR_COMPONENT_BOUND || vectors[i].y.abs() > VECTOR_COMPONENT_BOUND
        {
            return Err(GenError::ComponentOutOfRange {
                label: label.clone(),
            });
        }
    }

    let mut members: Vec<Vec<&str>> = Vec::new();
    if allow_zero {
        for (i, v) in vectors.iter().enumerate() {
            if v.is_zero() {
                members.push(vec![labels[i].as_str()]);
            }
        }
    }
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            if vectors[i].cross(vectors[j]) == 0 {
                members.push(vec![labels[i].as_str(), labels[j].as_str()]);
            }
            for k in j + 1..vectors.len() {
                members.push(vec![
                    labels[i].as_str(),
                    labels[j].as_str(),
                    labels[k].as_str(),
                ]);
            }
        }
    }

    let names: Vec<&str> = labels.iter().map(String::as_str).collect();
    let member_refs: Vec<&[&str]> = members.iter().map(Vec::as_slice).collect();
    let min = if allow_zero {
        MinCircuitSize::One
    } else {
        MinCircuitSize::Two
    };
    Ok(DependenceSpace::build(&names, &member_refs, min)?)
}

/// The shared-symbol space over all fixed-length words of a finite alphabet:
/// two distinct words form a Δ-pair when some symbol occurs in both.
pub fn repetition_space(
    alphabet_size: usize,
    word_length: usize,
) -> Result<DependenceSpace, GenError> {
    if alphabet_size == 0 {
        return Err(GenError::ZeroParameter {
            name: "alphabet_size",
        });
    }
    if word_length == 0 {
        return Err(GenError::ZeroParameter {
            name: "word_length",
        });
    }
    let count = checked_pow(alphabet_size, word_length).ok_or(GenError::TooLarge {
        size: usize::MAX,
        cap: REPETITION_WORD_CAP,
    })?;
    if count > REPETITION_WORD_CAP {
        return Err(GenError::TooLarge {
            size: count,
            cap: REPETITION_WORD_CAP,
        });
    }

    // Words enumerated in lexicographic symbol order, most significant first.
    let mut words = Vec::with_capacity(count);
    let mut symbol_sets: Vec<Vec<usize>> = Vec::with_capacity(count);
    for index in 0..count {
        let mut digits = vec![0usize; word_length];
        let mut rest = index;
        for pos in (0..word_length).rev() {
            digits[pos] = rest % alphabet_size;
            rest /= alphabet_size;
        }
        words.push(render_word(&digits, alphabet_size));
        let mut symbols = digits;
        symbols.sort_unstable();
        symbols.dedup();
        symbol_sets.push(symbols);
    }

    let mut members: Vec<Vec<&str>> = Vec::new();
    for i in 0..count {
        for j in i + 1..count {
            if shares_symbol(&symbol_sets[i], &symbol_sets[j]) {
                members.push(vec![words[i].as_str(), words[j].as_str()]);
            }
        }
    }
    let names: Vec<&str> = words.iter().map(String::as_str).collect();
    let member_refs: Vec<&[&str]> = members.iter().map(Vec::as_slice).collect();
    Ok(DependenceSpace::build(
        &names,
        &member_refs,
        MinCircuitSize::Two,
    )?)
}

const SYMBOL_CHARS: &[u8; 64] =
    b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_-";

fn render_word(digits: &[usize], alphabet_size: usize) -> String {
    if alphabet_size <= SYMBOL_CHARS.len() {
        digits
            .iter()
            .map(|&d| SYMBOL_CHARS[d] as char)
            .collect()
    } else {
        // Wide alphabets fall back to underscore-separated decimal symbols.
        digits
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("_")
    }
}

fn shares_symbol(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// A seeded random Δ-system on elements `e0..e{n-1}`: `circuit_count`
/// distinct members drawn uniformly among the subsets with size in
/// `[2, max_circuit_size]`. Bit-for-bit reproducible for a fixed seed.
pub fn random_space(
    element_count: usize,
    circuit_count: usize,
    max_circuit_size: usize,
    seed: u64,
) -> Result<DependenceSpace, GenError> {
    if element_count > RANDOM_ELEMENT_CAP {
        return Err(GenError::TooLarge {
            size: element_count,
            cap: RANDOM_ELEMENT_CAP,
        });
    }
    if max_circuit_size < 2 {
        return Err(GenError::MaxCircuitSizeTooSmall {
            got: max_circuit_size,
        });
    }

    let full: u32 = if element_count == 0 {
        0
    } else {
        ((1u64 << element_count) - 1) as u32
    };
    let mut eligible: Vec<u32> = (0..=full)
        .filter(|mask| {
            let size = mask.count_ones() as usize;
            size >= 2 && size <= max_circuit_size
        })
        .collect();
    if circuit_count > eligible.len() {
        return Err(GenError::InfeasibleCount {
            requested: circuit_count,
            available: eligible.len(),
        });
    }

    // Partial Fisher-Yates over the eligible masks.
    let mut rng = SplitMix64::new(seed);
    for i in 0..circuit_count {
        let j = i + rng.below((eligible.len() - i) as u64) as usize;
        eligible.swap(i, j);
    }
    let chosen = &eligible[..circuit_count];

    let names: Vec<String> = (0..element_count).map(|i| format!("e{i}")).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let members: Vec<Vec<&str>> = chosen
        .iter()
        .map(|&mask| {
            (0..element_count)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| name_refs[i])
                .collect()
        })
        .collect();
    let member_refs: Vec<&[&str]> = members.iter().map(Vec::as_slice).collect();
    Ok(DependenceSpace::build(
        &name_refs,
        &member_refs,
        MinCircuitSize::Two,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> GraphSpec {
        GraphSpec {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(u, v)| (u.to_string(), v.to_string()))
                .collect(),
        }
    }

    fn rendered_delta(space: &DependenceSpace) -> Vec<String> {
        space
            .delta()
            .iter()
            .map(|m| space.format_set(m.set()))
            .collect()
    }

    #[test]
    fn graph_space_uses_edges_as_circuits() {
        let cliques = graph_space(&graph(&["1", "2", "3", "4"], &[("1", "2"), ("3", "4")])).unwrap();
        assert_eq!(rendered_delta(&cliques), vec!["1,2", "3,4"]);

        let p3 = graph_space(&graph(&["x", "a", "b"], &[("x", "a"), ("a", "b")])).unwrap();
        assert_eq!(rendered_delta(&p3), vec!["x,a", "a,b"]);

        let edgeless = graph_space(&graph(&["u", "v", "w"], &[])).unwrap();
        assert!(edgeless.delta().is_empty());
        assert_eq!(edgeless.enumerate_independent().unwrap().len(), 8);
    }

    #[test]
    fn graph_space_validates_edges() {
        assert_eq!(
            graph_space(&graph(&["u"], &[("u", "u")])).unwrap_err(),
            GenError::SelfLoop { vertex: "u".into() }
        );
        assert_eq!(
            graph_space(&graph(&["u", "v"], &[("u", "v"), ("v", "u")])).unwrap_err(),
            GenError::DuplicateEdge {
                a: "v".into(),
                b: "u".into()
            }
        );
        assert_eq!(
            graph_space(&graph(&["u"], &[("u", "w")])).unwrap_err(),
            GenError::UnknownEndpoint { vertex: "w".into() }
        );
    }

    #[test]
    fn vector_space_circuits() {
        let space = parallel_vector_space(
            &[Vector2::new(1, 0), Vector2::new(2, 0), Vector2::new(0, 1)],
            false,
        )
        .unwrap();
        // The parallel pair plus the single 3-subset.
        assert_eq!(rendered_delta(&space), vec!["1:0,2:0", "1:0,2:0,0:1"]);

        let plane = parallel_vector_space(&[Vector2::new(1, 0), Vector2::new(0, 1)], false).unwrap();
        assert!(plane.delta().is_empty());
        assert!(plane.is_basis(&plane.ground_set()).unwrap());
    }

    #[test]
    fn zero_vector_singleton_requires_opt_in() {
        let space =
            parallel_vector_space(&[Vector2::new(0, 0), Vector2::new(1, 0)], true).unwrap();
        assert_eq!(space.min_circuit_size(), MinCircuitSize::One);
        assert_eq!(rendered_delta(&space), vec!["0:0", "0:0,1:0"]);

        let err = parallel_vector_space(&[Vector2::new(1, 0), Vector2::new(1, 0)], false)
            .unwrap_err();
        assert_eq!(
            err,
            GenError::DuplicateVector {
                label: "1:0".into()
            }
        );
    }

    #[test]
    fn repetition_space_pairs_words_sharing_a_symbol() {
        let bits1 = repetition_space(2, 1).unwrap();
        assert_eq!(bits1.len(), 2);
        assert!(bits1.delta().is_empty());

        let bits2 = repetition_space(2, 2).unwrap();
        let names: Vec<&str> = bits2.element_names().collect();
        assert_eq!(names, vec!["00", "01", "10", "11"]);
        assert!(bits2
            .is_directly_dependent(&bits2.set_from_names(&["00", "01"]).unwrap())
            .unwrap());
        // Only 00 and 11 share nothing.
        assert_eq!(bits2.delta().len(), 5);
        assert!(!bits2
            .is_directly_dependent(&bits2.set_from_names(&["00", "11"]).unwrap())
            .unwrap());

        let single = repetition_space(1, 1).unwrap();
        assert_eq!(single.len(), 1);
        assert!(single.delta().is_empty());

        assert!(matches!(
            repetition_space(2, 13),
            Err(GenError::TooLarge { .. })
        ));
    }

    #[test]
    fn random_space_is_seeded_and_feasibility_checked() {
        let empty = random_space(4, 0, 3, 1).unwrap();
        assert!(empty.delta().is_empty());

        let one = random_space(4, 1, 3, 7).unwrap();
        let again = random_space(4, 1, 3, 7).unwrap();
        assert_eq!(one, again);
        assert_eq!(one.delta().len(), 1);
        // Pinned draw for seed 7; a change here means the generator changed.
        assert_eq!(rendered_delta(&one), vec!["e2,e3"]);

        assert_eq!(
            random_space(2, 2, 2, 1).unwrap_err(),
            GenError::InfeasibleCount {
                requested: 2,
                available: 1
            }
        );
        assert!(matches!(
            random_space(17, 0, 2, 1),
            Err(GenError::TooLarge { .. })
        ));
        assert_eq!(
            random_space(4, 1, 1, 1).unwrap_err(),
            GenError::MaxCircuitSizeTooSmall { got: 1 }
        );
    }
}
