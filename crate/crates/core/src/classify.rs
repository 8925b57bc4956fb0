//! The distinguishing pipeline: compare two quotient spaces invariant by
//! invariant (dimension, rational spheres, B-vs-C series, pi_2, pi_3, higher
//! homotopy, K-theory ideal profiles) and report the outcome with the witness
//! that settled it. Batch mode classifies all spaces of a fixed dimension.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{dim_x, higher_pi_bc, quite_even_class, rational_type, FiniteAbelianGroup};
use crate::ktheory::profile::{ideal_profile, IdealProfile, PrimeReduction, DEFAULT_PRIME_BOUND};
use crate::orbits::{enumerate_classes_with, Partition, TableStore, UnipotentClass};
use crate::root_data::{GroupType, RootSystem, Series};
use crate::sl2restrict::dynkin_index_with;

/// One quotient space: a group together with one of its unipotent classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceId {
    class: UnipotentClass,
}

impl SpaceId {
    pub fn new(class: UnipotentClass) -> Self {
        Self { class }
    }

    pub fn group(&self) -> GroupType {
        self.class.group()
    }

    pub fn class(&self) -> &UnipotentClass {
        &self.class
    }
}

impl std::fmt::Display for SpaceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "X({})", self.class)
    }
}

/// What settled a Distinct verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Dimension { a: u64, b: u64 },
    RationalSpheres { a: Vec<u64>, b: Vec<u64> },
    BcSeparation,
    Pi2QuiteEven { a: bool, b: bool },
    Pi3DynkinIndex { a: u64, b: u64 },
    HigherPi { level: u8, a: String, b: String },
    KtheoryProfile { p: u64, a: u32, b: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Distinct,
    Undetermined,
    Identical,
}

/// Result of comparing two spaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Stages that compared equal before the verdict was reached.
    pub stages_equal: Vec<String>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn distinct(witness: Witness, stages_equal: Vec<String>, notes: Vec<String>) -> Self {
        Verdict {
            outcome: Outcome::Distinct,
            witness: Some(witness),
            stages_equal,
            notes,
        }
    }
}

/// Precomputed invariants of one space, enough for every pipeline stage
/// except the K-theory profile (computed on demand).
struct Dossier {
    group: GroupType,
    trivial: bool,
    dim: u64,
    spheres: Vec<u64>,
    quite_even: bool,
    index: u64,
    higher: Option<(FiniteAbelianGroup, FiniteAbelianGroup, FiniteAbelianGroup)>,
}

fn make_dossier(rs: &RootSystem, c: &UnipotentClass) -> Result<Dossier> {
    let g = c.group();
    let trivial = c.is_trivial();
    let index = dynkin_index_with(rs, c)?;
    let higher = match g.series() {
        Series::B | Series::C if !trivial => Some(higher_pi_bc(g.series(), index)?),
        _ => None,
    };
    Ok(Dossier {
        group: g,
        trivial,
        dim: if trivial { g.dim() } else { dim_x(g) },
        spheres: rational_type(rs, trivial),
        quite_even: quite_even_class(rs, c)?,
        index,
        higher,
    })
}

fn is_bc_pair(a: GroupType, b: GroupType) -> bool {
    a.rank() == b.rank()
        && matches!(
            (a.series(), b.series()),
            (Series::B, Series::C) | (Series::C, Series::B)
        )
}

fn compare_dossiers(
    a: &Dossier,
    b: &Dossier,
    mut profiles: impl FnMut() -> Result<(IdealProfile, IdealProfile)>,
) -> Result<Verdict> {
    let mut stages: Vec<String> = Vec::new();
    let mut notes: Vec<String> = Vec::new();

    if a.dim != b.dim {
        return Ok(Verdict::distinct(
            Witness::Dimension { a: a.dim, b: b.dim },
            stages,
            notes,
        ));
    }
    stages.push("dimension".into());

    if a.spheres != b.spheres {
        return Ok(Verdict::distinct(
            Witness::RationalSpheres {
                a: a.spheres.clone(),
                b: b.spheres.clone(),
            },
            stages,
            notes,
        ));
    }
    stages.push("rational_spheres".into());

    if is_bc_pair(a.group, b.group) {
        if a.group.rank() == 2 {
            notes.push(
                "series separation applied at rank 2, where the odd orthogonal and \
                 symplectic groups are isomorphic; the cited separation assumes higher rank"
                    .into(),
            );
        }
        return Ok(Verdict::distinct(Witness::BcSeparation, stages, notes));
    }
    stages.push("series".into());

    if a.quite_even != b.quite_even {
        return Ok(Verdict::distinct(
            Witness::Pi2QuiteEven {
                a: a.quite_even,
                b: b.quite_even,
            },
            stages,
            notes,
        ));
    }
    stages.push("pi2_quite_even".into());

    if a.index != b.index {
        return Ok(Verdict::distinct(
            Witness::Pi3DynkinIndex {
                a: a.index,
                b: b.index,
            },
            stages,
            notes,
        ));
    }
    stages.push("pi3_dynkin_index".into());

    if let (Some(ha), Some(hb)) = (&a.higher, &b.higher) {
        // order-four descriptors with undetermined extension compare equal
        let pairs = [(4u8, &ha.0, &hb.0), (5, &ha.1, &hb.1), (6, &ha.2, &hb.2)];
        for (level, ga, gb) in pairs {
            if ga != gb {
                return Ok(Verdict::distinct(
                    Witness::HigherPi {
                        level,
                        a: ga.to_string(),
                        b: gb.to_string(),
                    },
                    stages,
                    notes,
                ));
            }
        }
        stages.push("higher_pi".into());
    }

    if a.trivial || b.trivial {
        // no K-theory stage for the group itself
        return Ok(Verdict {
            outcome: Outcome::Undetermined,
            witness: None,
            stages_equal: stages,
            notes,
        });
    }

    // K-theory stage: the sides agree because the quite-even stage passed
    let (pa, pb) = profiles()?;
    assert_eq!(pa.side, pb.side, "sides must match after the pi2 stage");
    for (p, ra) in &pa.per_prime {
        let rb = pb.per_prime.get(p);
        match (ra, rb) {
            (PrimeReduction::Exponent(ea), Some(PrimeReduction::Exponent(eb))) => {
                if ea != eb {
                    return Ok(Verdict::distinct(
                        Witness::KtheoryProfile {
                            p: *p,
                            a: *ea,
                            b: *eb,
                        },
                        stages,
                        notes,
                    ));
                }
            }
            (PrimeReduction::Degenerate, _) | (_, Some(PrimeReduction::Degenerate)) => {
                notes.push(format!("prime {p} skipped: every generator vanished"));
            }
            (_, None) => {}
        }
    }
    stages.push("ktheory_profile".into());

    Ok(Verdict {
        outcome: Outcome::Undetermined,
        witness: None,
        stages_equal: stages,
        notes,
    })
}

/// Compare two spaces through the full pipeline.
pub fn distinguish(a: &SpaceId, b: &SpaceId, prime_bound: u64) -> Result<Verdict> {
    if a == b {
        return Ok(Verdict {
            outcome: Outcome::Identical,
            witness: None,
            stages_equal: vec![],
            notes: vec![],
        });
    }
    if a.class().is_trivial() != b.class().is_trivial() {
        // one space is the group itself: the sphere lists have different lengths
        let rs_a = RootSystem::new(a.group())?;
        let rs_b = RootSystem::new(b.group())?;
        return Ok(Verdict::distinct(
            Witness::RationalSpheres {
                a: rational_type(&rs_a, a.class().is_trivial()),
                b: rational_type(&rs_b, b.class().is_trivial()),
            },
            vec![],
            vec!["one class is trivial, the other is not".into()],
        ));
    }
    let rs_a = RootSystem::new(a.group())?;
    let rs_b = if b.group() == a.group() {
        None
    } else {
        Some(RootSystem::new(b.group())?)
    };
    let rs_b_ref = rs_b.as_ref().unwrap_or(&rs_a);
    let da = make_dossier(&rs_a, a.class())?;
    let db = make_dossier(rs_b_ref, b.class())?;
    let mut verdict = compare_dossiers(&da, &db, || {
        Ok((
            ideal_profile(&rs_a, a.class(), prime_bound)?,
            ideal_profile(rs_b_ref, b.class(), prime_bound)?,
        ))
    })?;
    if verdict.outcome == Outcome::Undetermined
        && a.group() == b.group()
        && a.class().partition().is_some()
        && a.class().partition() == b.class().partition()
        && a.class().very_even_label() != b.class().very_even_label()
    {
        verdict.notes.push(
            "same_invariants_diagram_swap: the two classes share a very even partition \
             and differ by the diagram automorphism"
                .into(),
        );
    }
    Ok(verdict)
}

/// One space row of a classification report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceEntry {
    pub group: String,
    pub class: String,
    pub dynkin_index: u64,
    pub quite_even: bool,
    pub diagram: Vec<u8>,
}

/// One off-diagonal pair of the verdict matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairVerdict {
    pub a: usize,
    pub b: usize,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

/// Pairwise classification of all spaces of one dimension.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub dim_x: u64,
    pub prime_bound: u64,
    pub groups: Vec<String>,
    pub spaces: Vec<SpaceEntry>,
    pub pairs: Vec<PairVerdict>,
    pub undetermined: Vec<(usize, usize)>,
}

/// All simple groups of the given dimension.
pub fn groups_of_dimension(dim_g: u64) -> Vec<GroupType> {
    let mut out = Vec::new();
    for rank in 1..=(dim_g as usize + 1) {
        for series in [Series::A, Series::B, Series::C, Series::D] {
            if series == Series::B && rank == 1 {
                continue; // alias of A1
            }
            if let Ok(g) = GroupType::new(series, rank) {
                // skip the aliases that canonicalise away
                if g.series() != series || g.rank() != rank {
                    continue;
                }
                if g.dim() == dim_g {
                    out.push(g);
                }
            }
        }
        // smallest dimension at this rank is rank*(rank+2) for type A
        if rank * (rank + 2) > dim_g as usize {
            break;
        }
    }
    for name in ["E6", "E7", "E8", "F4", "G2"] {
        let g = GroupType::parse(name).expect("exceptional name");
        if g.dim() == dim_g {
            out.push(g);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Classify every quotient of complex dimension `target`: enumerate the
/// nontrivial classes of all groups with dim G = target + 3 and compare each
/// pair.
pub fn classify_dimension(target: u64, prime_bound: u64) -> Result<ClassificationReport> {
    classify_dimension_with(target, prime_bound, &TableStore::builtin())
}

pub fn classify_dimension_with(
    target: u64,
    prime_bound: u64,
    tables: &TableStore,
) -> Result<ClassificationReport> {
    let dim_g = target + 3;
    let groups = groups_of_dimension(dim_g);
    if groups.is_empty() {
        return Err(Error::NoGroupOfDimension(dim_g));
    }
    let mut systems: HashMap<GroupType, RootSystem> = HashMap::new();
    let mut classes: Vec<UnipotentClass> = Vec::new();
    for &g in &groups {
        systems.insert(g, RootSystem::new(g)?);
        classes.extend(enumerate_classes_with(g, false, tables)?);
    }
    let mut dossiers = Vec::with_capacity(classes.len());
    let mut entries = Vec::with_capacity(classes.len());
    for c in &classes {
        let rs = &systems[&c.group()];
        let d = make_dossier(rs, c)?;
        entries.push(SpaceEntry {
            group: c.group().to_string(),
            class: c.name(),
            dynkin_index: d.index,
            quite_even: d.quite_even,
            diagram: c.diagram().weights().to_vec(),
        });
        dossiers.push(d);
    }

    let mut profile_cache: HashMap<usize, IdealProfile> = HashMap::new();
    let mut pairs = Vec::new();
    let mut undetermined = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let verdict = {
                let mut fetch = |k: usize| -> Result<IdealProfile> {
                    if let Some(p) = profile_cache.get(&k) {
                        return Ok(p.clone());
                    }
                    let rs = &systems[&classes[k].group()];
                    let p = ideal_profile(rs, &classes[k], prime_bound)?;
                    profile_cache.insert(k, p.clone());
                    Ok(p)
                };
                compare_dossiers(&dossiers[i], &dossiers[j], || Ok((fetch(i)?, fetch(j)?)))?
            };
            if verdict.outcome == Outcome::Undetermined {
                undetermined.push((i, j));
            }
            pairs.push(PairVerdict {
                a: i,
                b: j,
                outcome: verdict.outcome,
                witness: verdict.witness,
                notes: verdict.notes,
            });
        }
    }
    Ok(ClassificationReport {
        dim_x: target,
        prime_bound,
        groups: groups.iter().map(|g| g.to_string()).collect(),
        spaces: entries,
        pairs,
        undetermined,
    })
}

/// One row of the rank-four even orthogonal example.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct D4Row {
    pub partition: String,
    pub diagram: Vec<u8>,
    pub dynkin_index: u64,
    pub quite_even: bool,
}

/// The rank-four even orthogonal example: the six nontrivial partitions that
/// survive the diagram-automorphism bookkeeping, with indices, quite-even
/// flags, and all pairwise verdicts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct D4Report {
    pub rows: Vec<D4Row>,
    pub pairs: Vec<PairVerdict>,
    pub all_pairwise_distinct: bool,
}

pub fn d4_report(prime_bound: u64) -> Result<D4Report> {
    let g = GroupType::parse("D4")?;
    let rs = RootSystem::new(g)?;
    let partitions = [
        "[2^2,1^4]",
        "[3,1^5]",
        "[3^2,1^2]",
        "[3,2^2,1]",
        "[5,1^3]",
        "[5,3]",
    ];
    let mut rows = Vec::new();
    let mut spaces = Vec::new();
    for part in partitions {
        let c = UnipotentClass::classical_single(g, Partition::parse(part)?)?;
        rows.push(D4Row {
            partition: part.to_string(),
            diagram: c.diagram().weights().to_vec(),
            dynkin_index: dynkin_index_with(&rs, &c)?,
            quite_even: quite_even_class(&rs, &c)?,
        });
        spaces.push(SpaceId::new(c));
    }
    let mut pairs = Vec::new();
    let mut all_distinct = true;
    for i in 0..spaces.len() {
        for j in i + 1..spaces.len() {
            let v = distinguish(&spaces[i], &spaces[j], prime_bound)?;
            if v.outcome != Outcome::Distinct {
                all_distinct = false;
            }
            pairs.push(PairVerdict {
                a: i,
                b: j,
                outcome: v.outcome,
                witness: v.witness,
                notes: v.notes,
            });
        }
    }
    Ok(D4Report {
        rows,
        pairs,
        all_pairwise_distinct: all_distinct,
    })
}

/// The default prime bound, re-exported where the pipeline is used.
pub const PRIME_BOUND: u64 = DEFAULT_PRIME_BOUND;

#[cfg(test)]
mod tests {
    use super::*;

    fn space(group: &str, partition: &str) -> SpaceId {
        SpaceId::new(
            UnipotentClass::classical_single(
                GroupType::parse(group).unwrap(),
                Partition::parse(partition).unwrap(),
            )
            .unwrap(),
        )
    }

    #[test]
    fn reflexive_and_symmetric() {
        let a = space("B6", "[5,2^4]");
        assert_eq!(distinguish(&a, &a, 7).unwrap().outcome, Outcome::Identical);
        let b = space("B6", "[4^2,3,1^2]");
        let ab = distinguish(&a, &b, 7).unwrap();
        let ba = distinguish(&b, &a, 7).unwrap();
        assert_eq!(ab.outcome, Outcome::Distinct);
        assert_eq!(ba.outcome, Outcome::Distinct);
        match (ab.witness.unwrap(), ba.witness.unwrap()) {
            (
                Witness::KtheoryProfile { p: 3, a: x, b: y },
                Witness::KtheoryProfile { p: 3, a: u, b: v },
            ) => {
                assert_eq!((x, y), (v, u));
                assert_eq!((x, y), (3, 2));
            }
            other => panic!("wrong witnesses: {other:?}"),
        }
    }

    #[test]
    fn paper_verdicts() {
        // the index-11 pair stays undetermined
        let v = distinguish(&space("B6", "[5,2^2,1^4]"), &space("B6", "[4^2,2^2,1]"), 97).unwrap();
        assert_eq!(v.outcome, Outcome::Undetermined);
        // series separation
        let v = distinguish(&space("B6", "[3,1^10]"), &space("C6", "[2^2,1^8]"), 7).unwrap();
        assert_eq!(v.outcome, Outcome::Distinct);
        assert_eq!(v.witness, Some(Witness::BcSeparation));
        // quite even vs not at equal index
        let v = distinguish(&space("B6", "[5^2,1^3]"), &space("B6", "[5,4^2]"), 7).unwrap();
        assert_eq!(v.witness, Some(Witness::Pi2QuiteEven { a: true, b: false }));
    }

    #[test]
    fn mixed_trivial_pair_is_distinct_by_spheres() {
        let trivial = SpaceId::new(UnipotentClass::trivial(GroupType::parse("B6").unwrap()));
        let v = distinguish(&trivial, &space("B6", "[3,1^10]"), 7).unwrap();
        assert_eq!(v.outcome, Outcome::Distinct);
        assert!(matches!(v.witness, Some(Witness::RationalSpheres { .. })));
    }

    #[test]
    fn very_even_pair_is_flagged() {
        let g = GroupType::parse("D4").unwrap();
        let both = UnipotentClass::classical(g, Partition::parse("[4^2]").unwrap()).unwrap();
        let v = distinguish(
            &SpaceId::new(both[0].clone()),
            &SpaceId::new(both[1].clone()),
            7,
        )
        .unwrap();
        assert_eq!(v.outcome, Outcome::Undetermined);
        assert!(v
            .notes
            .iter()
            .any(|n| n.contains("same_invariants_diagram_swap")));
    }

    #[test]
    fn rank_two_series_separation_carries_a_caveat() {
        let v = distinguish(&space("B2", "[3,1^2]"), &space("C2", "[2^2]"), 7).unwrap();
        assert_eq!(v.outcome, Outcome::Distinct);
        assert_eq!(v.witness, Some(Witness::BcSeparation));
        assert!(!v.notes.is_empty());
    }

    #[test]
    fn groups_of_dimension_examples() {
        let g78: Vec<String> = groups_of_dimension(78)
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(g78, vec!["B6", "C6", "E6"]);
        let g3: Vec<String> = groups_of_dimension(3)
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(g3, vec!["A1"]);
        // dimension 10 exists: the rank-2 orthogonal/symplectic pair
        let g10: Vec<String> = groups_of_dimension(10)
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(g10, vec!["B2", "C2"]);
        assert!(groups_of_dimension(4).is_empty());
    }

    #[test]
    fn classify_dimension_zero() {
        let report = classify_dimension(0, 7).unwrap();
        assert_eq!(report.spaces.len(), 1);
        assert!(report.pairs.is_empty());
        assert!(classify_dimension(1, 7).is_err());
    }

    #[test]
    fn pipeline_stage_order_is_monotone() {
        let order = [
            "dimension",
            "rational_spheres",
            "series",
            "pi2_quite_even",
            "pi3_dynkin_index",
            "higher_pi",
            "ktheory_profile",
        ];
        let v = distinguish(&space("B6", "[5,2^2,1^4]"), &space("B6", "[4^2,2^2,1]"), 5).unwrap();
        let positions: Vec<usize> = v
            .stages_equal
            .iter()
            .map(|s| order.iter().position(|o| o == s).unwrap())
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(
            v.stages_equal.last().map(String::as_str),
            Some("ktheory_profile")
        );
    }
}
