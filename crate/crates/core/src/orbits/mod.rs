//! Unipotent conjugacy classes.
//!
//! Classical series: classes are constrained partitions of the natural module
//! dimension (type A: any partition; B/D: even parts in pairs; C: odd parts in
//! pairs), and the weighted Dynkin diagram is computed from the eigenvalue
//! vector of the class representative. Exceptional types: classes are rows of
//! a curated label/diagram table (see [`exceptional`]); the tables bundled
//! with the crate were produced by [`generation`] and are cross-checked in the
//! test suite.

pub mod exceptional;
pub mod generation;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_data::{GroupType, Series};

pub use exceptional::{builtin_table, load_exceptional_table, OrbitTable, TableStore};

/// A partition written with non-increasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::PartitionParse("zero part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// Accepts `[5,2^4]`, `[5,2,2,2,2]`, or the same without brackets.
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return Err(Error::PartitionParse(s.into()));
        }
        let mut parts = Vec::new();
        for token in inner.split(',') {
            let token = token.trim();
            let (base, mult) = match token.split_once('^') {
                Some((b, m)) => (
                    b.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::PartitionParse(s.into()))?,
                    m.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::PartitionParse(s.into()))?,
                ),
                None => (
                    token
                        .parse::<u32>()
                        .map_err(|_| Error::PartitionParse(s.into()))?,
                    1,
                ),
            };
            if mult == 0 {
                return Err(Error::PartitionParse(s.into()));
            }
            parts.extend(std::iter::repeat(base).take(mult as usize));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Full eigenvalue multiset of the natural module representative, sorted
    /// non-increasing: each part `d` contributes the string `d-1, d-3, ..., 1-d`.
    pub fn natural_eigenvalues(&self) -> Vec<i64> {
        let mut eigen = Vec::with_capacity(self.n());
        for &d in &self.parts {
            let d = d as i64;
            let mut m = d - 1;
            while m >= 1 - d {
                eigen.push(m);
                m -= 2;
            }
        }
        eigen.sort_unstable_by(|a, b| b.cmp(a));
        eigen
    }

    /// Multiplicity of each part value.
    fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (value, count)) in self.multiplicities().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *count == 1 {
                write!(f, "{value}")?;
            } else {
                write!(f, "{value}^{count}")?;
            }
        }
        write!(f, "]")
    }
}

/// Sorted non-negative half of the natural-module eigenvalue multiset
/// (the diagonal of the block `diag(D, -D, 0)` representative).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVector(pub Vec<i64>);

/// Weighted Dynkin diagram: one weight in {0,1,2} per node, Bourbaki order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedDiagram {
    weights: Vec<u8>,
}

impl WeightedDiagram {
    pub fn new(weights: Vec<u8>) -> Result<Self> {
        if weights.iter().any(|&w| w > 2) {
            return Err(Error::CorruptData(format!(
                "diagram weight outside 0..=2: {weights:?}"
            )));
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[u8] {
        &self.weights
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.weights.iter().map(|&w| w as i64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }

    pub fn is_even(&self) -> bool {
        self.weights.iter().all(|&w| w % 2 == 0)
    }
}

impl fmt::Display for WeightedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Disambiguates the two classes sharing a very even type-D partition.
///
/// Label I carries the diagram produced by the coordinate recipe, label II the
/// same diagram with the last two nodes swapped. The pair is interchanged by
/// the diagram automorphism; which member matches which label in any external
/// table is a convention, not a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VeryEvenLabel {
    I,
    II,
}

impl fmt::Display for VeryEvenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VeryEvenLabel::I => write!(f, "I"),
            VeryEvenLabel::II => write!(f, "II"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassData {
    Classical {
        partition: Partition,
        very_even_label: Option<VeryEvenLabel>,
    },
    Exceptional {
        label: String,
    },
}

/// A unipotent conjugacy class together with its weighted Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnipotentClass {
    group: GroupType,
    data: ClassData,
    diagram: WeightedDiagram,
}

impl UnipotentClass {
    /// All classes with the given partition: one for most inputs, two for a
    /// very even type-D partition, an error for an invalid partition.
    pub fn classical(group: GroupType, partition: Partition) -> Result<Vec<UnipotentClass>> {
        let count = validate_partition(group, &partition);
        if count == 0 {
            return Err(Error::InvalidPartition {
                group: group.to_string(),
                partition: partition.to_string(),
            });
        }
        let diagram = weighted_diagram_classical(group, &partition)?;
        if count == 1 {
            return Ok(vec![UnipotentClass {
                group,
                data: ClassData::Classical {
                    partition,
                    very_even_label: None,
                },
                diagram,
            }]);
        }
        let mut swapped = diagram.weights().to_vec();
        let r = group.rank();
        swapped.swap(r - 2, r - 1);
        Ok(vec![
            UnipotentClass {
                group,
                data: ClassData::Classical {
                    partition: partition.clone(),
                    very_even_label: Some(VeryEvenLabel::I),
                },
                diagram,
            },
            UnipotentClass {
                group,
                data: ClassData::Classical {
                    partition,
                    very_even_label: Some(VeryEvenLabel::II),
                },
                diagram: WeightedDiagram::new(swapped).expect("swap preserves range"),
            },
        ])
    }

    /// The unique class for a partition that is not very even.
    pub fn classical_single(group: GroupType, partition: Partition) -> Result<UnipotentClass> {
        let mut v = Self::classical(group, partition)?;
        if v.len() != 1 {
            return Err(Error::Unsupported(
                "very even partition labels two classes; pick I or II".into(),
            ));
        }
        Ok(v.remove(0))
    }

    pub fn exceptional(group: GroupType, label: &str, table: &OrbitTable) -> Result<UnipotentClass> {
        table.class(group, label)
    }

    pub(crate) fn from_table_entry(
        group: GroupType,
        label: String,
        diagram: WeightedDiagram,
    ) -> UnipotentClass {
        UnipotentClass {
            group,
            data: ClassData::Exceptional { label },
            diagram,
        }
    }

    /// The trivial class u = 1.
    pub fn trivial(group: GroupType) -> UnipotentClass {
        let diagram = WeightedDiagram::new(vec![0; group.rank()]).expect("zeros");
        let data = if group.is_classical() {
            let n = group.natural_degree().expect("classical");
            ClassData::Classical {
                partition: Partition::new(vec![1; n]).expect("ones"),
                very_even_label: None,
            }
        } else {
            ClassData::Exceptional { label: "0".into() }
        };
        UnipotentClass {
            group,
            data,
            diagram,
        }
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn data(&self) -> &ClassData {
        &self.data
    }

    pub fn diagram(&self) -> &WeightedDiagram {
        &self.diagram
    }

    pub fn partition(&self) -> Option<&Partition> {
        match &self.data {
            ClassData::Classical { partition, .. } => Some(partition),
            ClassData::Exceptional { .. } => None,
        }
    }

    pub fn bala_carter_label(&self) -> Option<&str> {
        match &self.data {
            ClassData::Exceptional { label } => Some(label),
            ClassData::Classical { .. } => None,
        }
    }

    pub fn very_even_label(&self) -> Option<VeryEvenLabel> {
        match &self.data {
            ClassData::Classical {
                very_even_label, ..
            } => *very_even_label,
            ClassData::Exceptional { .. } => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        match &self.data {
            ClassData::Classical { partition, .. } => partition.is_trivial(),
            ClassData::Exceptional { label } => label == "0",
        }
    }

    /// Canonical class name: the partition (with a very even suffix) or the
    /// Bala-Carter label.
    pub fn name(&self) -> String {
        match &self.data {
            ClassData::Classical {
                partition,
                very_even_label,
            } => match very_even_label {
                Some(l) => format!("{partition} {l}"),
                None => partition.to_string(),
            },
            ClassData::Exceptional { label } => label.clone(),
        }
    }
}

impl fmt::Display for UnipotentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.group, self.name())
    }
}

/// How many classes the partition labels in the given group:
/// 0 (invalid), 1, or 2 (very even type-D partition).
pub fn validate_partition(g: GroupType, p: &Partition) -> usize {
    let Some(n) = g.natural_degree() else {
        return 0;
    };
    if p.n() != n {
        return 0;
    }
    let even_ok = p
        .multiplicities()
        .iter()
        .all(|&(v, c)| v % 2 == 1 || c % 2 == 0);
    let odd_ok = p
        .multiplicities()
        .iter()
        .all(|&(v, c)| v % 2 == 0 || c % 2 == 0);
    match g.series() {
        Series::A => 1,
        Series::B => usize::from(even_ok),
        Series::C => usize::from(odd_ok),
        Series::D => {
            if !even_ok {
                0
            } else if p.parts().iter().all(|&v| v % 2 == 0) {
                2
            } else {
                1
            }
        }
        _ => 0,
    }
}

/// Sorted non-negative half of the eigenvalue multiset (length floor(n/2)).
pub fn h_vector(c: &UnipotentClass) -> Result<HVector> {
    let p = c
        .partition()
        .ok_or_else(|| Error::NotClassical(c.to_string()))?;
    Ok(HVector(h_vector_of_partition(p)))
}

pub fn h_vector_of_partition(p: &Partition) -> Vec<i64> {
    let mut eigen = p.natural_eigenvalues();
    eigen.truncate(p.n() / 2);
    eigen
}

/// Weighted Dynkin diagram of a classical class, by evaluating the simple
/// roots (Bourbaki coordinates) on the dominant eigenvalue representative.
pub fn weighted_diagram_classical(g: GroupType, p: &Partition) -> Result<WeightedDiagram> {
    if validate_partition(g, p) == 0 {
        return Err(Error::InvalidPartition {
            group: g.to_string(),
            partition: p.to_string(),
        });
    }
    let r = g.rank();
    let raw: Vec<i64> = match g.series() {
        Series::A => {
            let a = p.natural_eigenvalues();
            (0..r).map(|i| a[i] - a[i + 1]).collect()
        }
        Series::B | Series::C | Series::D => {
            let a = h_vector_of_partition(p);
            let mut w: Vec<i64> = (0..r - 1).map(|i| a[i] - a[i + 1]).collect();
            match g.series() {
                Series::B => w.push(a[r - 1]),
                Series::C => {
                    w.push(2 * a[r - 1]);
                }
                Series::D => {
                    // the (r-1)-th entry computed above is a[r-2] - a[r-1]
                    w.push(a[r - 2] + a[r - 1]);
                }
                _ => unreachable!(),
            }
            w
        }
        _ => return Err(Error::NotClassical(g.to_string())),
    };
    if raw.iter().any(|&w| !(0..=2).contains(&w)) {
        return Err(Error::CorruptData(format!(
            "diagram of {g} {p} fell outside 0..=2: {raw:?}"
        )));
    }
    WeightedDiagram::new(raw.iter().map(|&w| w as u8).collect())
}

/// All partitions of `n`, lexicographically descending (a linear extension of
/// descending dominance order).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let mut part = remaining.min(max_part);
        while part >= 1 {
            prefix.push(part as u32);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every unipotent class of `g`, deterministic order: descending dominance for
/// the classical series (trivial class last), table order for exceptional
/// types (trivial class first).
pub fn enumerate_classes(g: GroupType, include_trivial: bool) -> Result<Vec<UnipotentClass>> {
    enumerate_classes_with(g, include_trivial, &TableStore::builtin())
}

pub fn enumerate_classes_with(
    g: GroupType,
    include_trivial: bool,
    tables: &TableStore,
) -> Result<Vec<UnipotentClass>> {
    if g.is_classical() {
        let n = g.natural_degree().expect("classical");
        let mut out = Vec::new();
        for p in partitions_of(n) {
            if p.is_trivial() && !include_trivial {
                continue;
            }
            if validate_partition(g, &p) > 0 {
                out.extend(UnipotentClass::classical(g, p)?);
            }
        }
        Ok(out)
    } else {
        let table = tables.get(g)?;
        let mut out = Vec::new();
        if include_trivial {
            out.push(UnipotentClass::trivial(g));
        }
        out.extend(table.classes(g)?);
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> GroupType {
        GroupType::parse(name).unwrap()
    }

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn partition_parsing_and_display() {
        assert_eq!(p("[5,2^4]").parts(), &[5, 2, 2, 2, 2]);
        assert_eq!(p("[5,2,2,2,2]"), p("[5,2^4]"));
        assert_eq!(p("[2,5,2,2,2]"), p("[5,2^4]"));
        assert_eq!(p("[5,2^4]").to_string(), "[5,2^4]");
        assert_eq!(p("[3,1^10]").to_string(), "[3,1^10]");
        assert!(Partition::parse("[]").is_err());
        assert!(Partition::parse("[0,1]").is_err());
    }

    #[test]
    fn validate_partition_examples() {
        assert_eq!(validate_partition(g("B6"), &p("[5,2^4]")), 1);
        assert_eq!(validate_partition(g("C6"), &p("[3^2,2^3]")), 1);
        assert_eq!(validate_partition(g("C6"), &p("[3,2^4,1]")), 0);
        assert_eq!(validate_partition(g("D4"), &p("[2^4]")), 2);
        assert_eq!(validate_partition(g("B6"), &p("[4,3^3]")), 0);
        assert_eq!(validate_partition(g("B6"), &p("[5,2^2]")), 0); // wrong n
        assert_eq!(validate_partition(g("A3"), &p("[2,1,1]")), 1);
    }

    #[test]
    fn class_counts_match_published_values() {
        assert_eq!(enumerate_classes(g("B6"), false).unwrap().len(), 34);
        assert_eq!(enumerate_classes(g("C6"), false).unwrap().len(), 39);
        assert_eq!(enumerate_classes(g("B6"), true).unwrap().len(), 35);
        let d4 = enumerate_classes(g("D4"), false).unwrap();
        assert_eq!(d4.len(), 11);
        for part in ["[2^4]", "[4^2]"] {
            let n = d4
                .iter()
                .filter(|c| c.partition().unwrap() == &p(part))
                .count();
            assert_eq!(n, 2, "{part}");
        }
    }

    #[test]
    fn h_vector_examples() {
        let b6 = UnipotentClass::classical_single(g("B6"), p("[3,1^10]")).unwrap();
        assert_eq!(h_vector(&b6).unwrap().0, vec![2, 0, 0, 0, 0, 0]);
        let b1 = UnipotentClass::classical_single(g("B1"), p("[3]")).unwrap();
        assert_eq!(h_vector(&b1).unwrap().0, vec![2]);
        let c1 = UnipotentClass::classical_single(g("C1"), p("[2]")).unwrap();
        assert_eq!(h_vector(&c1).unwrap().0, vec![1]);
        let b6 = UnipotentClass::classical_single(g("B6"), p("[5,2^4]")).unwrap();
        assert_eq!(h_vector(&b6).unwrap().0, vec![4, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn eigenvalue_multiset_round_trip() {
        // natural eigenvalues reconstruct from the h-vector plus symmetry
        for part in ["[5,2^4]", "[3^2,1^7]", "[13]"] {
            let q = p(part);
            let eigen = q.natural_eigenvalues();
            let h = h_vector_of_partition(&q);
            let mut rebuilt: Vec<i64> = h.iter().map(|&x| -x).collect();
            if q.n() % 2 == 1 {
                rebuilt.push(0);
            }
            rebuilt.extend(h.iter().copied());
            rebuilt.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(rebuilt, eigen, "{part}");
        }
    }

    #[test]
    fn weighted_diagrams_match_published_b6_rows() {
        for (part, expected) in [
            ("[5^2,1^3]", vec![0, 2, 0, 2, 0, 0]),
            ("[5,4^2]", vec![1, 0, 1, 1, 0, 1]),
            ("[5,3,1^5]", vec![2, 0, 2, 0, 0, 0]),
            ("[5,2^4]", vec![2, 1, 0, 0, 0, 1]),
            ("[4^2,3,1^2]", vec![0, 1, 1, 0, 1, 0]),
            ("[3,1^10]", vec![2, 0, 0, 0, 0, 0]),
            ("[2^6,1]", vec![0, 0, 0, 0, 0, 1]),
        ] {
            let d = weighted_diagram_classical(g("B6"), &p(part)).unwrap();
            assert_eq!(d.as_i64(), expected.iter().map(|&x| x as i64).collect::<Vec<_>>(), "{part}");
        }
        for (part, expected) in [
            ("[4,2,1^6]", vec![2u8, 0, 1, 0, 0, 0]),
            ("[3^2,2^3]", vec![0, 1, 0, 0, 1, 0]),
            ("[4,1^8]", vec![2, 1, 0, 0, 0, 0]),
            ("[3^2,2^2,1^2]", vec![0, 1, 0, 1, 0, 0]),
        ] {
            let d = weighted_diagram_classical(g("C6"), &p(part)).unwrap();
            assert_eq!(d.weights(), expected.as_slice(), "{part}");
        }
    }

    #[test]
    fn trivial_class_has_zero_diagram() {
        for name in ["A5", "B6", "C6", "D4"] {
            let c = UnipotentClass::trivial(g(name));
            assert!(c.is_trivial());
            assert!(c.diagram().is_zero());
        }
        // conversely, nontrivial classes have nonzero diagrams
        for c in enumerate_classes(g("B6"), false).unwrap() {
            assert!(!c.diagram().is_zero(), "{c}");
        }
    }

    #[test]
    fn diagram_entries_bounded_over_all_small_classical_classes() {
        for n in 1..=14 {
            for series in [Series::A, Series::B, Series::C, Series::D] {
                let group = match series {
                    Series::A if n >= 2 => GroupType::new(Series::A, n - 1),
                    Series::B if n % 2 == 1 && n >= 3 => GroupType::new(Series::B, (n - 1) / 2),
                    Series::C if n % 2 == 0 && n >= 4 => GroupType::new(Series::C, n / 2),
                    Series::D if n % 2 == 0 && n >= 8 => GroupType::new(Series::D, n / 2),
                    _ => continue,
                }
                .unwrap();
                for q in partitions_of(n) {
                    if validate_partition(group, &q) > 0 {
                        // constructor asserts all entries lie in {0,1,2}
                        weighted_diagram_classical(group, &q).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn very_even_pair_shares_partition_and_swaps_diagram() {
        let classes = UnipotentClass::classical(g("D4"), p("[4^2]")).unwrap();
        assert_eq!(classes.len(), 2);
        let (a, b) = (&classes[0], &classes[1]);
        assert_eq!(a.partition(), b.partition());
        let mut swapped = a.diagram().weights().to_vec();
        swapped.swap(2, 3);
        assert_eq!(swapped, b.diagram().weights());
    }
}
